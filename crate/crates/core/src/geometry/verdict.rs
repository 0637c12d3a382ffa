use serde::{Deserialize, Serialize};

use super::point::Vec2;

/// Evidence attached to a [`Verdict`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A named inequality with its two sides; `lhs >= rhs` was expected.
    Inequality { name: String, lhs: f64, rhs: f64 },
    /// Polygon vertex where the turning direction flips.
    TurnFlip {
        index: usize,
        cross: f64,
        reference_cross: f64,
    },
    /// Edge whose supporting line separates the reference point from the polygon.
    HiddenEdge { index: usize, side: f64 },
    /// A point certifying failure (e.g. a cell center in a bounded complement component).
    Point { point: Vec2, note: String },
    /// Segment from the reference point to `target` leaves the set at `exit`.
    BlockedSegment { target: Vec2, exit: Vec2 },
}

/// Outcome of a geometric property check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn holds() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }

    pub fn holds_with(witness: Witness) -> Self {
        Self {
            holds: true,
            witness: Some(witness),
        }
    }

    pub fn fails(witness: Witness) -> Self {
        Self {
            holds: false,
            witness: Some(witness),
        }
    }
}
