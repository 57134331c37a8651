//! Exact arithmetic in `Q(sqrt 3)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i64>;

/// `a + b sqrt(3)` with rational `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Qrt3 {
    pub a: Q,
    pub b: Q,
}

impl Qrt3 {
    pub fn new(a: Q, b: Q) -> Qrt3 {
        Qrt3 { a, b }
    }

    pub fn rational(a: Q) -> Qrt3 {
        Qrt3 { a, b: Q::zero() }
    }

    pub fn sqrt3() -> Qrt3 {
        Qrt3 { a: Q::zero(), b: Q::one() }
    }

    pub fn zero() -> Qrt3 {
        Qrt3::rational(Q::zero())
    }

    pub fn one() -> Qrt3 {
        Qrt3::rational(Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale(&self, k: Q) -> Qrt3 {
        Qrt3 { a: self.a * k, b: self.b * k }
    }

    pub fn to_f64(&self) -> f64 {
        let f = |q: Q| *q.numer() as f64 / *q.denom() as f64;
        f(self.a) + f(self.b) * 3f64.sqrt()
    }
}

impl Add for Qrt3 {
    type Output = Qrt3;
    fn add(self, o: Qrt3) -> Qrt3 {
        Qrt3 { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Qrt3 {
    type Output = Qrt3;
    fn sub(self, o: Qrt3) -> Qrt3 {
        Qrt3 { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Qrt3 {
    type Output = Qrt3;
    fn neg(self) -> Qrt3 {
        Qrt3 { a: -self.a, b: -self.b }
    }
}

impl Mul for Qrt3 {
    type Output = Qrt3;
    fn mul(self, o: Qrt3) -> Qrt3 {
        Qrt3 { a: self.a * o.a + Q::from_integer(3) * self.b * o.b, b: self.a * o.b + self.b * o.a }
    }
}

impl fmt::Display for Qrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt3", self.b),
            (false, false) => write!(f, "{} + {}*sqrt3", self.a, self.b),
        }
    }
}
