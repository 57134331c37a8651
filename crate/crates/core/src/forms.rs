//! Integral binary cubic forms and the twisted `GL2(Z)` action on them.
//!
//! A form `x1 u^3 + x2 u^2 v + x3 u v^2 + x4 v^3` is stored as its coefficient
//! tuple. A matrix `g = (p q; r s)` acts by
//! `(g.x)(v1, v2) = det(g)^-1 x(p v1 + r v2, q v1 + s v2)`, so that
//! `g.(h.x) = (gh).x` and `P(g.x) = det(g)^2 P(x)`.
//!
//! All arithmetic is checked: intermediates are `i128`, results that do not
//! fit back into `i64` coefficients are reported as [`Error::Overflow`].

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::Report;

pub(crate) fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow("add"))
}

pub(crate) fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow("sub"))
}

pub(crate) fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("mul"))
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow("coefficient exceeds i64"))
}

/// Sign of the discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Pos, Sign::Neg];

    pub fn of(v: i128) -> Option<Sign> {
        match v.signum() {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i128(self) -> i128 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sign> {
        match s {
            "+" | "pos" | "plus" | "positive" => Ok(Sign::Pos),
            "-" | "neg" | "minus" | "negative" => Ok(Sign::Neg),
            other => Err(Error::InvalidArgument(format!("unknown sign {other:?}"))),
        }
    }
}

/// One of the ten invariant lattices `L1..L10`.
///
/// Odd indices are sublattices of `L1 = Z^4`; even indices are sublattices of
/// `L2 = {(a, 3b, 3c, d)}` and their parity conditions refer to the divided
/// middle coordinates `b = x2/3`, `c = x3/3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct LatticeId(u8);

impl LatticeId {
    pub fn new(index: u8) -> Result<LatticeId> {
        if (1..=10).contains(&index) {
            Ok(LatticeId(index))
        } else {
            Err(Error::InvalidLattice(index))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn all() -> impl Iterator<Item = LatticeId> {
        (1..=10).map(LatticeId)
    }

    /// The lattice paired with this one by duality (`i <-> i+1` for odd `i`).
    pub fn partner(self) -> LatticeId {
        if self.is_odd() {
            LatticeId(self.0 + 1)
        } else {
            LatticeId(self.0 - 1)
        }
    }
}

impl TryFrom<u8> for LatticeId {
    type Error = Error;

    fn try_from(v: u8) -> Result<LatticeId> {
        LatticeId::new(v)
    }
}

impl From<LatticeId> for u8 {
    fn from(l: LatticeId) -> u8 {
        l.0
    }
}

impl fmt::Display for LatticeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.0)
    }
}

/// 2x2 integer matrix `(p q; r s)` with determinant `+-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[[i64; 2]; 2]", into = "[[i64; 2]; 2]")]
pub struct UnimodularMatrix {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl UnimodularMatrix {
    pub const IDENTITY: UnimodularMatrix = UnimodularMatrix { p: 1, q: 0, r: 0, s: 1 };
    pub const MINUS_IDENTITY: UnimodularMatrix = UnimodularMatrix { p: -1, q: 0, r: 0, s: -1 };
    /// `w = (0 1; -1 0)`.
    pub const W: UnimodularMatrix = UnimodularMatrix { p: 0, q: 1, r: -1, s: 0 };
    /// The coordinate swap `(0 1; 1 0)`, of determinant `-1`.
    pub const SWAP: UnimodularMatrix = UnimodularMatrix { p: 0, q: 1, r: 1, s: 0 };

    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Result<UnimodularMatrix> {
        let m = UnimodularMatrix { p, q, r, s };
        match m.det_wide() {
            1 | -1 => Ok(m),
            d => Err(Error::NotUnimodular(d)),
        }
    }

    /// `u(alpha) = (1 alpha; 0 1)`.
    pub fn u(alpha: i64) -> UnimodularMatrix {
        UnimodularMatrix { p: 1, q: alpha, r: 0, s: 1 }
    }

    fn det_wide(&self) -> i128 {
        self.p as i128 * self.s as i128 - self.q as i128 * self.r as i128
    }

    pub fn det(&self) -> i64 {
        self.det_wide() as i64
    }

    pub fn mul(&self, o: &UnimodularMatrix) -> Result<UnimodularMatrix> {
        let e = |a: i64, b: i64, c: i64, d: i64| -> Result<i64> {
            narrow(add(mul(a as i128, b as i128)?, mul(c as i128, d as i128)?)?)
        };
        Ok(UnimodularMatrix {
            p: e(self.p, o.p, self.q, o.r)?,
            q: e(self.p, o.q, self.q, o.s)?,
            r: e(self.r, o.p, self.s, o.r)?,
            s: e(self.r, o.q, self.s, o.s)?,
        })
    }

    pub fn trace(&self) -> i128 {
        self.p as i128 + self.s as i128
    }
}

impl TryFrom<[[i64; 2]; 2]> for UnimodularMatrix {
    type Error = Error;

    fn try_from(m: [[i64; 2]; 2]) -> Result<UnimodularMatrix> {
        UnimodularMatrix::new(m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

impl From<UnimodularMatrix> for [[i64; 2]; 2] {
    fn from(m: UnimodularMatrix) -> [[i64; 2]; 2] {
        [[m.p, m.q], [m.r, m.s]]
    }
}

/// Binary quadratic form `a u^2 + b u v + c v^2`; used for the Hessian covariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

impl QuadraticForm {
    pub fn discriminant(&self) -> Result<i128> {
        sub(mul(self.b, self.b)?, mul(4, mul(self.a, self.c)?)?)
    }

    /// `q(p v1 + r v2, q v1 + s v2)`, untwisted.
    pub fn compose(&self, g: &UnimodularMatrix) -> Result<QuadraticForm> {
        let l1 = [g.p as i128, g.r as i128];
        let l2 = [g.q as i128, g.s as i128];
        let sq = |l: [i128; 2]| -> Result<[i128; 3]> {
            Ok([mul(l[0], l[0])?, mul(2, mul(l[0], l[1])?)?, mul(l[1], l[1])?])
        };
        let a2 = sq(l1)?;
        let c2 = sq(l2)?;
        let b2 = [
            mul(l1[0], l2[0])?,
            add(mul(l1[0], l2[1])?, mul(l1[1], l2[0])?)?,
            mul(l1[1], l2[1])?,
        ];
        let mut out = [0i128; 3];
        for k in 0..3 {
            out[k] = add(add(mul(self.a, a2[k])?, mul(self.b, b2[k])?)?, mul(self.c, c2[k])?)?;
        }
        Ok(QuadraticForm { a: out[0], b: out[1], c: out[2] })
    }
}

/// Integral binary cubic form `x1 u^3 + x2 u^2 v + x3 u v^2 + x4 v^3`.
///
/// Serialized as the array `[x1, x2, x3, x4]`; the derived ordering is
/// lexicographic on that tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CubicForm(pub [i64; 4]);

impl CubicForm {
    pub const ZERO: CubicForm = CubicForm([0; 4]);

    pub fn new(x1: i64, x2: i64, x3: i64, x4: i64) -> CubicForm {
        CubicForm([x1, x2, x3, x4])
    }

    pub fn coeffs(&self) -> [i64; 4] {
        self.0
    }

    fn wide(&self) -> [i128; 4] {
        self.0.map(|v| v as i128)
    }

    pub fn max_abs_coeff(&self) -> u64 {
        self.0.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Result<CubicForm> {
        let mut out = [0i64; 4];
        for (o, v) in out.iter_mut().zip(self.0) {
            *o = v.checked_neg().ok_or(Error::Overflow("neg"))?;
        }
        Ok(CubicForm(out))
    }

    /// `P(x) = x2^2 x3^2 - 4 x1 x3^3 - 4 x2^3 x4 + 18 x1 x2 x3 x4 - 27 x1^2 x4^2`.
    pub fn discriminant(&self) -> Result<i128> {
        let [a, b, c, d] = self.wide();
        let t1 = mul(mul(b, b)?, mul(c, c)?)?;
        let t2 = mul(4, mul(a, mul(c, mul(c, c)?)?)?)?;
        let t3 = mul(4, mul(mul(b, mul(b, b)?)?, d)?)?;
        let t4 = mul(18, mul(mul(a, b)?, mul(c, d)?)?)?;
        let t5 = mul(27, mul(mul(a, a)?, mul(d, d)?)?)?;
        sub(add(sub(sub(t1, t2)?, t3)?, t4)?, t5)
    }

    /// `Q(x) = P(x) / 27` for forms in `L2`.
    pub fn q_discriminant(&self) -> Result<i128> {
        if !self.in_l2() {
            return Err(Error::NotInL2(self.0));
        }
        let p = self.discriminant()?;
        if p % 27 != 0 {
            return Err(Error::Integrity(format!("P({:?}) = {p} not divisible by 27", self.0)));
        }
        Ok(p / 27)
    }

    fn in_l2(&self) -> bool {
        self.0[1] % 3 == 0 && self.0[2] % 3 == 0
    }

    /// `Delta = a c^3 + b^3 d - a^2 d^2`, with
    /// `P = (bc + ad)^2 - 4 Delta + 16 (abcd - 2 a^2 d^2)`.
    pub fn delta(&self) -> Result<i128> {
        let [a, b, c, d] = self.wide();
        let t1 = mul(a, mul(c, mul(c, c)?)?)?;
        let t2 = mul(mul(b, mul(b, b)?)?, d)?;
        let t3 = mul(mul(a, a)?, mul(d, d)?)?;
        sub(add(t1, t2)?, t3)
    }

    /// Hessian covariant `(x2^2 - 3 x1 x3, x2 x3 - 9 x1 x4, x3^2 - 3 x2 x4)`,
    /// of discriminant `-3 P`.
    pub fn hessian(&self) -> Result<QuadraticForm> {
        let [a, b, c, d] = self.wide();
        Ok(QuadraticForm {
            a: sub(mul(b, b)?, mul(3, mul(a, c)?)?)?,
            b: sub(mul(b, c)?, mul(9, mul(a, d)?)?)?,
            c: sub(mul(c, c)?, mul(3, mul(b, d)?)?)?,
        })
    }

    /// The twisted action `g.x`.
    pub fn act(&self, g: &UnimodularMatrix) -> Result<CubicForm> {
        let det = g.det_wide();
        if det != 1 && det != -1 {
            return Err(Error::NotUnimodular(det));
        }
        // Linear forms as coefficient pairs indexed by the power of v2.
        let l1 = [g.p as i128, g.r as i128];
        let l2 = [g.q as i128, g.s as i128];
        let mut out = [0i128; 4];
        for (k, &xk) in self.wide().iter().enumerate() {
            if xk == 0 {
                continue;
            }
            // l1^(3-k) * l2^k
            let mut poly = vec![1i128];
            for j in 0..3 {
                let l = if j < 3 - k { l1 } else { l2 };
                let mut next = vec![0i128; poly.len() + 1];
                for (i, &c) in poly.iter().enumerate() {
                    next[i] = add(next[i], mul(c, l[0])?)?;
                    next[i + 1] = add(next[i + 1], mul(c, l[1])?)?;
                }
                poly = next;
            }
            for (o, c) in out.iter_mut().zip(poly) {
                *o = add(*o, mul(xk, c)?)?;
            }
        }
        let mut res = [0i64; 4];
        for (r, o) in res.iter_mut().zip(out) {
            *r = narrow(mul(o, det)?)?;
        }
        Ok(CubicForm(res))
    }

    /// `psi(x) = u(1).x - x = (x2 + x3 + x4, 2 x3 + 3 x4, 3 x4, 0)`.
    pub fn psi(&self) -> Result<CubicForm> {
        let [_, b, c, d] = self.wide();
        Ok(CubicForm([
            narrow(add(add(b, c)?, d)?)?,
            narrow(add(mul(2, c)?, mul(3, d)?)?)?,
            narrow(mul(3, d)?)?,
            0,
        ]))
    }

    /// Defining congruences of `L1..L10`.
    pub fn lattice_member(&self, lattice: LatticeId) -> bool {
        let [a, x2, x3, d] = self.0;
        let even = |v: i64| v.rem_euclid(2) == 0;
        let (b, c) = if lattice.is_odd() {
            (x2, x3)
        } else {
            if !self.in_l2() {
                return false;
            }
            (x2 / 3, x3 / 3)
        };
        // The even lattices reuse the odd-lattice conditions on (a, b, c, d)
        // according to the pairing L4<->L5, L6<->L3, L8<->L9, L10<->L7.
        match lattice.index() {
            1 | 2 => true,
            3 | 6 => even(b + c),
            5 | 4 => even(a) && even(d) && even(b + c),
            7 | 10 => even(a + b + c) && even(b + c + d),
            9 | 8 => even(a + b + d) && even(a + c + d),
            _ => unreachable!("LatticeId is validated"),
        }
    }

    /// True iff the form has no linear factor over `Q`.
    pub fn is_irreducible(&self) -> Result<bool> {
        if self.discriminant()? == 0 {
            return Err(Error::Degenerate(self.0));
        }
        let [a, b, c, d] = self.wide();
        if a == 0 || d == 0 {
            return Ok(false);
        }
        // Rational roots t = num/den of a t^3 + b t^2 + c t + d: num | d, den | a.
        let nums = divisors(d.unsigned_abs());
        let dens = divisors(a.unsigned_abs());
        for &den in &dens {
            for &num in &nums {
                let (n, m) = (num as i128, den as i128);
                for n in [n, -n] {
                    let v = add(
                        add(mul(a, mul(n, mul(n, n)?)?)?, mul(b, mul(mul(n, n)?, m)?)?)?,
                        add(mul(c, mul(n, mul(m, m)?)?)?, mul(d, mul(m, mul(m, m)?)?)?)?,
                    )?;
                    if v == 0 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

fn divisors(n: u128) -> Vec<u128> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u128;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for CubicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// `<x, y> = x1 y4 - x2 y3 / 3 + x3 y2 / 3 - x4 y1`.
pub fn pairing(x: &[Ratio<i128>; 4], y: &[Ratio<i128>; 4]) -> Ratio<i128> {
    let third = Ratio::new(1, 3);
    x[0] * y[3] - third * x[1] * y[2] + third * x[2] * y[1] - x[3] * y[0]
}

/// [`pairing`] on integral forms.
pub fn pairing_forms(x: &CubicForm, y: &CubicForm) -> Ratio<i128> {
    let r = |f: &CubicForm| f.0.map(|v| Ratio::from_integer(v as i128));
    pairing(&r(x), &r(y))
}

/// Discriminant residues of `L1`: `P mod 8` is 1 or 5 exactly on the stated
/// parity patterns (all 8^4 tuples), and `P mod 4` is 0 or 1 (all 4^4 tuples).
pub fn verify_discriminant_congruences() -> Result<Report> {
    let mut rep = Report::new("congruence");
    let odd = |v: i64| v % 2 == 1;
    let (mut bad1, mut bad5, mut hits1, mut hits5) = (0, 0, 0, 0);
    for i in 0..4096i64 {
        let [a, b, c, d] = [i % 8, (i / 8) % 8, (i / 64) % 8, i / 512];
        let p = CubicForm::new(a, b, c, d).discriminant()?.rem_euclid(8);
        let one = (!odd(a) && !odd(d) && odd(b) && odd(c)) || (odd(a) && odd(d) && odd(b + c));
        let five = (!odd(b) && !odd(c) && odd(a) && odd(d)) || (odd(b) && odd(c) && odd(a + d));
        bad1 += ((p == 1) != one) as u32;
        bad5 += ((p == 5) != five) as u32;
        hits1 += (p == 1) as u32;
        hits5 += (p == 5) as u32;
    }
    rep.push("P = 1 mod 8 iff pattern", bad1 == 0, format!("{hits1} tuples with P = 1, {bad1} mismatches"));
    rep.push("P = 5 mod 8 iff pattern", bad5 == 0, format!("{hits5} tuples with P = 5, {bad5} mismatches"));
    let mut bad4 = 0;
    for i in 0..256i64 {
        let f = CubicForm::new(i % 4, (i / 4) % 4, (i / 16) % 4, i / 64);
        bad4 += !matches!(f.discriminant()?.rem_euclid(4), 0 | 1) as u32;
    }
    rep.push("P = 0, 1 mod 4", bad4 == 0, format!("{bad4} of 256 tuples outside"));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: i64, b: i64, c: i64, d: i64) -> CubicForm {
        CubicForm::new(a, b, c, d)
    }

    fn lat(i: u8) -> LatticeId {
        LatticeId::new(i).unwrap()
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(f(1, 0, 0, 1).discriminant().unwrap(), -27);
        assert_eq!(f(0, 1, -1, 0).discriminant().unwrap(), 1);
        // 0 - 4*1*(-27) + 0 + 0 - 27 = 81
        assert_eq!(f(1, 0, -3, 1).discriminant().unwrap(), 81);
    }

    #[test]
    fn q_discriminant_examples() {
        assert_eq!(f(1, 0, -3, 1).q_discriminant().unwrap(), 3);
        assert_eq!(f(1, 3, 3, 1).q_discriminant().unwrap(), 0);
        assert_eq!(f(0, 3, -3, 0).q_discriminant().unwrap(), 3);
        assert_eq!(f(1, 1, 0, 0).q_discriminant(), Err(Error::NotInL2([1, 1, 0, 0])));
    }

    #[test]
    fn overflow_is_reported() {
        let big = f(i64::MAX, i64::MAX, i64::MAX, i64::MAX);
        assert!(matches!(big.discriminant(), Err(Error::Overflow(_))));
        assert!(matches!(big.act(&UnimodularMatrix::u(2)), Err(Error::Overflow(_))));
    }

    #[test]
    fn action_examples() {
        assert_eq!(f(1, 0, 0, 0).act(&UnimodularMatrix::W).unwrap(), f(0, 0, 0, -1));
        assert_eq!(f(0, 0, 1, 0).act(&UnimodularMatrix::u(1)).unwrap(), f(1, 2, 1, 0));
        let g = f(3, -2, 7, 5);
        assert_eq!(g.act(&UnimodularMatrix::IDENTITY).unwrap(), g);
        assert_eq!(g.act(&UnimodularMatrix::MINUS_IDENTITY).unwrap(), g.neg().unwrap());
        assert!(matches!(
            g.act(&UnimodularMatrix { p: 2, q: 0, r: 0, s: 1 }),
            Err(Error::NotUnimodular(2))
        ));
    }

    #[test]
    fn u_alpha_matches_closed_formula() {
        let x = f(2, -1, 4, 3);
        for alpha in -3i64..=3 {
            let [x1, x2, x3, x4] = x.0;
            let expect = f(
                x1 + alpha * x2 + alpha * alpha * x3 + alpha.pow(3) * x4,
                x2 + 2 * alpha * x3 + 3 * alpha * alpha * x4,
                x3 + 3 * alpha * x4,
                x4,
            );
            assert_eq!(x.act(&UnimodularMatrix::u(alpha)).unwrap(), expect);
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(f(0, 0, 1, 0).psi().unwrap(), f(1, 2, 0, 0));
        assert_eq!(f(0, 0, 0, 1).psi().unwrap(), f(1, 3, 3, 0));
        assert_eq!(CubicForm::ZERO.psi().unwrap(), CubicForm::ZERO);
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing_forms(&f(1, 0, 0, 0), &f(0, 0, 0, 1)), Ratio::from_integer(1));
        assert_eq!(pairing_forms(&f(0, 1, 0, 0), &f(0, 0, 1, 0)), Ratio::new(-1, 3));
        let x = f(4, -7, 2, 9);
        assert_eq!(pairing_forms(&x, &x), Ratio::from_integer(0));
    }

    #[test]
    fn membership_examples() {
        assert!(f(0, 1, -1, 0).lattice_member(lat(7)));
        assert!(!f(1, 1, 1, 1).lattice_member(lat(7)));
        assert!(!f(1, 3, 3, 1).lattice_member(lat(8)));
        assert!(f(0, 1, 1, 0).lattice_member(lat(5)));
        assert!(!f(0, 1, 1, 0).lattice_member(lat(2)));
        assert!(f(2, 0, 0, 2).lattice_member(lat(7)));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(!f(1, 0, -1, 0).is_irreducible().unwrap());
        assert!(f(1, 0, -3, 1).is_irreducible().unwrap());
        assert!(!f(1, 0, 0, 1).is_irreducible().unwrap());
    }

    #[test]
    fn irreducible_rejects_degenerate() {
        assert_eq!(f(1, 3, 3, 1).is_irreducible(), Err(Error::Degenerate([1, 3, 3, 1])));
        // 2t^3 - t^2 - 2t + 1 = (2t - 1)(t - 1)(t + 1)
        assert!(!f(2, -1, -2, 1).is_irreducible().unwrap());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(f(0, 1, 1, 1).delta().unwrap(), 1);
        assert_eq!(f(0, 1, 1, 1).discriminant().unwrap(), -3);
        assert_eq!(f(1, 0, 0, 1).delta().unwrap(), -1);
        assert_eq!(CubicForm::ZERO.delta().unwrap(), 0);
    }

    #[test]
    fn json_shapes() {
        assert_eq!(serde_json::to_string(&f(1, -2, 3, 0)).unwrap(), "[1,-2,3,0]");
        assert_eq!(serde_json::to_string(&UnimodularMatrix::W).unwrap(), "[[0,1],[-1,0]]");
        let m: UnimodularMatrix = serde_json::from_str("[[1,1],[0,1]]").unwrap();
        assert_eq!(m, UnimodularMatrix::u(1));
        assert!(serde_json::from_str::<UnimodularMatrix>("[[2,0],[0,1]]").is_err());
    }

    #[test]
    fn discriminant_congruences() {
        let r = verify_discriminant_congruences().unwrap();
        assert!(r.passed(), "{r}");
    }
}
