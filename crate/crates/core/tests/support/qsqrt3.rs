//! Exact arithmetic in ℚ(√3): `a + b√3` with rational `a`, `b`.

use std::ops::{Add, Div, Mul, Sub};

use num_rational::Ratio;

pub type Q = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QSqrt3 {
    pub a: Q,
    pub b: Q,
}

impl QSqrt3 {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a: Q::from_integer(a), b: Q::from_integer(b) }
    }

    pub fn rational(q: Q) -> Self {
        Self { a: q, b: Q::from_integer(0) }
    }

    pub fn is_rational(&self) -> bool {
        self.b == Q::from_integer(0)
    }

    fn conj(self) -> Self {
        Self { a: self.a, b: -self.b }
    }

    fn norm(self) -> Q {
        self.a * self.a - Q::from_integer(3) * self.b * self.b
    }

    pub fn to_f64(self) -> f64 {
        let f = |q: Q| *q.numer() as f64 / *q.denom() as f64;
        f(self.a) + f(self.b) * 3f64.sqrt()
    }
}

impl Add for QSqrt3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for QSqrt3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Mul for QSqrt3 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let three = Q::from_integer(3);
        Self { a: self.a * o.a + three * self.b * o.b, b: self.a * o.b + self.b * o.a }
    }
}

impl Div for QSqrt3 {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = o.norm();
        let p = self * o.conj();
        Self { a: p.a / n, b: p.b / n }
    }
}

/// The three terms `s², (1 − 1/(e(2−e)))², (e − 1)²` of the tangency
/// condition at `e = e^r = 1 + √3`.
pub fn pythagoras_terms_at_tangency() -> (QSqrt3, QSqrt3, QSqrt3) {
    let one = QSqrt3::new(1, 0);
    let two = QSqrt3::new(2, 0);
    let e = QSqrt3::new(1, 1);
    let s = (e - one) / (e * (e - two));
    let d = one - one / (e * (two - e));
    (s * s, d * d, (e - one) * (e - one))
}
