use serde::{Deserialize, Serialize};

use super::constants::SharpConstants;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum RadiusValue {
    Finite(f64),
    Infinite,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Exact expression evaluated here.
    ClosedForm,
    /// Root of an equation solved here.
    Solved,
    /// Quoted from the literature; not recomputed.
    Literature,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusEntry {
    pub symbolic: String,
    pub value: RadiusValue,
    pub sharp: bool,
    pub source: Source,
}

impl RadiusEntry {
    fn finite(symbolic: &str, value: f64, sharp: bool, source: Source) -> Self {
        Self {
            symbolic: symbolic.into(),
            value: RadiusValue::Finite(value),
            sharp,
            source,
        }
    }

    fn infinite() -> Self {
        Self {
            symbolic: "∞".into(),
            value: RadiusValue::Infinite,
            sharp: true,
            source: Source::Literature,
        }
    }

    fn unknown() -> Self {
        Self {
            symbolic: "?".into(),
            value: RadiusValue::Unknown,
            sharp: false,
            source: Source::Literature,
        }
    }

    pub fn numeric(&self) -> Option<f64> {
        match self.value {
            RadiusValue::Finite(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusRow {
    pub domain: String,
    pub convex: RadiusEntry,
    pub starlike: RadiusEntry,
    pub close_to_convex: RadiusEntry,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiiTable {
    pub metric: String,
    pub rows: Vec<RadiusRow>,
}

impl RadiiTable {
    pub fn row(&self, domain: &str) -> Option<&RadiusRow> {
        self.rows.iter().find(|r| r.domain == domain)
    }
}

fn row(domain: &str, convex: RadiusEntry, starlike: RadiusEntry, close_to_convex: RadiusEntry) -> RadiusRow {
    RadiusRow {
        domain: domain.into(),
        convex,
        starlike,
        close_to_convex,
    }
}

/// Known radii of convexity, starlikeness and close-to-convexity: the
/// quasihyperbolic table first, then the j-metric table.
pub fn radii_table() -> (RadiiTable, RadiiTable) {
    use Source::*;
    let c = SharpConstants::compute();
    let kappa = || RadiusEntry::finite("κ ≈ 2.83", c.qh_starlike_punctured, true, Literature);
    let one = || RadiusEntry::finite("1", c.qh_convexity, true, Literature);
    let half_pi = || RadiusEntry::finite("π/2*", c.qh_general_starlike, false, Literature);
    let qh = RadiiTable {
        metric: "quasihyperbolic".into(),
        rows: vec![
            row(
                "punctured plane",
                one(),
                kappa(),
                RadiusEntry::finite("λ ≈ 2.97", c.qh_ctc, true, Solved),
            ),
            row(
                "punctured space",
                one(),
                kappa(),
                RadiusEntry::finite("λ* ≈ 2.97", c.qh_ctc, false, Solved),
            ),
            row("convex", RadiusEntry::infinite(), RadiusEntry::infinite(), RadiusEntry::infinite()),
            row("starlike", RadiusEntry::unknown(), RadiusEntry::infinite(), RadiusEntry::infinite()),
            row("general, n = 2", one(), half_pi(), half_pi()),
            row("general, n >= 2", RadiusEntry::unknown(), half_pi(), half_pi()),
        ],
    };
    let log2 = || RadiusEntry::finite("log 2", c.j_convexity, true, ClosedForm);
    let star = || RadiusEntry::finite("log(1+√2)", c.j_starlike, true, ClosedForm);
    let j = RadiiTable {
        metric: "j".into(),
        rows: vec![
            row("convex", RadiusEntry::infinite(), RadiusEntry::infinite(), RadiusEntry::infinite()),
            row("starlike", log2(), RadiusEntry::infinite(), RadiusEntry::infinite()),
            row(
                "general, n = 2",
                log2(),
                star(),
                RadiusEntry::finite("log(1+√3)", c.j_ctc, true, ClosedForm),
            ),
            row(
                "general, n >= 2",
                log2(),
                star(),
                RadiusEntry::finite("log(1+√3)*", c.j_ctc, false, ClosedForm),
            ),
        ],
    };
    (qh, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows() {
        let (qh, j) = radii_table();
        let r = j.row("general, n = 2").unwrap();
        assert_eq!(r.convex.numeric(), Some(2f64.ln()));
        assert_eq!(r.starlike.numeric(), Some((1.0 + 2f64.sqrt()).ln()));
        assert_eq!(r.close_to_convex.numeric(), Some((1.0 + 3f64.sqrt()).ln()));
        let r = qh.row("punctured plane").unwrap();
        assert_eq!(r.convex.numeric(), Some(1.0));
        assert_eq!(r.starlike.source, Source::Literature);
        assert!((r.close_to_convex.numeric().unwrap() - 2.97).abs() < 0.01);
        for t in [&qh, &j] {
            let r = t.row("convex").unwrap();
            for e in [&r.convex, &r.starlike, &r.close_to_convex] {
                assert_eq!(e.value, RadiusValue::Infinite);
            }
        }
        assert!(!qh.row("general, n = 2").unwrap().starlike.sharp);
    }

    #[test]
    fn serializes() {
        let (qh, _) = radii_table();
        let s = serde_json::to_string(&qh).unwrap();
        let back: RadiiTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, qh);
    }
}
