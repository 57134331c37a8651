//! Reduction of binary cubic forms to a canonical orbit representative.
//!
//! Each nondegenerate form has a covariant point in the upper half plane,
//! transforming under `g` like the roots of `F(z) = x1 + x2 z + x3 z^2 + x4 z^3`
//! (`u(k)` sends `z -> z - k`, `w` sends `z -> -1/z`). For `P > 0` it is the
//! root of the Hessian; for `P < 0` it is the non-real root of `F`. A form is
//! weakly reduced when that point lies in the closed standard fundamental
//! domain `|Re z| <= 1/2, |z| >= 1`.
//!
//! Two weakly reduced forms in one orbit differ by a matrix with entries in
//! `{-1, 0, 1}`, so ties and stabilizers are resolved over that finite set.
//! The canonical representative is the lexicographically smallest weakly
//! reduced, sign-normalized (`x4 > 0`, or `x4 = 0` and `x3 > 0`) member.

use std::cmp::Ordering;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::forms::{add, mul, sub, CubicForm, Sign, UnimodularMatrix};

const MAX_STEPS: usize = 100_000;

/// Where the covariant point of a form sits relative to the fundamental domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Outside,
    Boundary,
    Interior,
}

/// `SL2(Z)` matrices with all entries in `{-1, 0, 1}`.
pub fn neighbourhood() -> &'static [UnimodularMatrix] {
    static N: OnceLock<Vec<UnimodularMatrix>> = OnceLock::new();
    N.get_or_init(|| {
        let mut out = Vec::new();
        for p in -1..=1 {
            for q in -1..=1 {
                for r in -1..=1 {
                    for s in -1..=1 {
                        if p * s - q * r == 1 {
                            out.push(UnimodularMatrix { p, q, r, s });
                        }
                    }
                }
            }
        }
        out
    })
}

/// Flip the sign of `f` (the action of `-I`) so that `x4 > 0`, or `x4 = 0` and `x3 > 0`.
pub fn normalize_sign(f: &CubicForm) -> Result<CubicForm> {
    let [_, _, x3, x4] = f.0;
    if x4 < 0 || (x4 == 0 && x3 < 0) {
        f.neg()
    } else {
        Ok(*f)
    }
}

fn sign_of(f: &CubicForm) -> Result<Sign> {
    Sign::of(f.discriminant()?).ok_or(Error::Degenerate(f.0))
}

/// Compares the real root `theta` of a form with `x4 > 0` and `P < 0`
/// against `n / m`, `m > 0`.
fn cmp_theta(f: &CubicForm, n: i128, m: i128) -> Result<Ordering> {
    debug_assert!(m > 0 && f.0[3] > 0);
    let [x1, x2, x3, x4] = f.0.map(|v| v as i128);
    let m2 = mul(m, m)?;
    let n2 = mul(n, n)?;
    let s = add(
        add(mul(x1, mul(m2, m)?)?, mul(x2, mul(m2, n)?)?)?,
        add(mul(x3, mul(m, n2)?)?, mul(x4, mul(n2, n)?)?)?,
    )?;
    // F(n/m) has the sign of x4 exactly when n/m lies above the root.
    Ok(match s.signum() {
        1 => Ordering::Less,
        0 => Ordering::Equal,
        _ => Ordering::Greater,
    })
}

fn combine(conds: &[Ordering]) -> Position {
    // Each entry compares a quantity that must be >= 0 (Less = violated).
    if conds.contains(&Ordering::Less) {
        Position::Outside
    } else if conds.contains(&Ordering::Equal) {
        Position::Boundary
    } else {
        Position::Interior
    }
}

fn position_pos(f: &CubicForm) -> Result<Position> {
    let h = f.hessian()?;
    debug_assert!(h.a > 0 && h.c > 0);
    Ok(combine(&[(h.c).cmp(&h.b.abs()), h.a.cmp(&h.c)]))
}

fn position_neg(f: &CubicForm) -> Result<Position> {
    let g = normalize_sign(f)?;
    let [x1, x2, x3, x4] = g.0.map(|v| v as i128);
    if x4 == 0 {
        return Ok(combine(&[x3.cmp(&x2.abs()), x1.cmp(&x3)]));
    }
    // Re rho = (-x3/x4 - theta)/2 and |rho|^2 = -x1/(x4 theta).
    let re_upper = cmp_theta(&g, sub(-x3, x4)?, x4)?;
    let re_lower = cmp_theta(&g, sub(x4, x3)?, x4)?.reverse();
    let modulus = match x1.signum() {
        0 => x2.cmp(&x4),
        -1 => cmp_theta(&g, -x1, x4)?.reverse(),
        _ => cmp_theta(&g, -x1, x4)?,
    };
    Ok(combine(&[re_upper, re_lower, modulus]))
}

/// Position of the covariant point of `f`.
pub fn position(f: &CubicForm) -> Result<Position> {
    match sign_of(f)? {
        Sign::Pos => position_pos(f),
        Sign::Neg => position_neg(f),
    }
}

pub fn is_weakly_reduced(f: &CubicForm) -> Result<bool> {
    Ok(position(f)? != Position::Outside)
}

/// Largest `k` with `pred(k)` true, for `pred` true on a down-set of integers.
fn largest_true(hint: i64, pred: impl Fn(i64) -> Result<bool>) -> Result<i64> {
    let (mut lo, mut hi);
    if pred(hint)? {
        lo = hint;
        let mut step = 1i64;
        loop {
            let probe = lo.checked_add(step).ok_or(Error::Overflow("translation search"))?;
            if pred(probe)? {
                lo = probe;
                step = step.checked_mul(2).ok_or(Error::Overflow("translation search"))?;
            } else {
                hi = probe;
                break;
            }
        }
    } else {
        hi = hint;
        let mut step = 1i64;
        loop {
            let probe = hi.checked_sub(step).ok_or(Error::Overflow("translation search"))?;
            if pred(probe)? {
                lo = probe;
                break;
            }
            hi = probe;
            step = step.checked_mul(2).ok_or(Error::Overflow("translation search"))?;
        }
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pred(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Floating estimate of the real root of `x4 t^3 + x3 t^2 + x2 t + x1`, `P < 0`, `x4 != 0`.
fn real_root_estimate(f: &CubicForm) -> f64 {
    let [x1, x2, x3, x4] = f.0.map(|v| v as f64);
    let (b, c, d) = (x3 / x4, x2 / x4, x1 / x4);
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    let t = if disc >= 0.0 {
        let s = disc.sqrt();
        (-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt()
    } else {
        0.0
    };
    let mut x = t - b / 3.0;
    for _ in 0..3 {
        let fx = ((x + b) * x + c) * x + d;
        let dx = (3.0 * x + 2.0 * b) * x + c;
        if dx == 0.0 || !fx.is_finite() {
            break;
        }
        x -= fx / dx;
    }
    x
}

fn translation_neg(g: &CubicForm) -> Result<i64> {
    let [_, x2, x3, x4] = g.0.map(|v| v as i128);
    if x4 == 0 {
        // Re rho = -x2 / (2 x3); pick k = floor(Re rho + 1/2).
        let k = (x3 - x2).div_euclid(2 * x3);
        return i64::try_from(k).map_err(|_| Error::Overflow("translation"));
    }
    let theta = real_root_estimate(g);
    let re = (-(x3 as f64) / (x4 as f64) - theta) / 2.0;
    let hint = if re.is_finite() { (re + 0.5).floor().clamp(-1e15, 1e15) as i64 } else { 0 };
    // After u(k) the real part is Re rho - k, which is >= -1/2 iff
    // theta <= ((1 - 2k) x4 - x3) / x4; the largest such k is wanted.
    largest_true(hint, |k| {
        let n = sub(mul(sub(1, mul(2, k as i128)?)?, x4)?, x3)?;
        Ok(cmp_theta(g, n, x4)? != Ordering::Greater)
    })
}

/// Moves `f` into the closed fundamental domain with translations and `w`.
pub fn reduce(f: &CubicForm) -> Result<CubicForm> {
    let sign = sign_of(f)?;
    let mut g = normalize_sign(f)?;
    for _ in 0..MAX_STEPS {
        match sign {
            Sign::Pos => {
                let h = g.hessian()?;
                let k = (h.c - h.b).div_euclid(2 * h.c);
                if k != 0 {
                    let k = i64::try_from(k).map_err(|_| Error::Overflow("translation"))?;
                    g = g.act(&UnimodularMatrix::u(k))?;
                }
                let h = g.hessian()?;
                if h.c > h.a {
                    g = g.act(&UnimodularMatrix::W)?;
                } else {
                    return normalize_sign(&g);
                }
            }
            Sign::Neg => {
                let k = translation_neg(&g)?;
                if k != 0 {
                    g = normalize_sign(&g.act(&UnimodularMatrix::u(k))?)?;
                }
                if position_neg(&g)? == Position::Outside {
                    g = normalize_sign(&g.act(&UnimodularMatrix::W)?)?;
                } else {
                    return Ok(g);
                }
            }
        }
    }
    Err(Error::Integrity(format!("reduction of {f} did not terminate")))
}

/// Weakly reduced, sign-normalized members of the orbit reachable from a
/// weakly reduced `g` through the neighbourhood.
fn reduced_neighbours(g: &CubicForm) -> Result<Vec<CubicForm>> {
    let mut out = Vec::new();
    for h in neighbourhood() {
        let c = normalize_sign(&g.act(h)?)?;
        if is_weakly_reduced(&c)? {
            out.push(c);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Canonical representative of the `SL2(Z)`-orbit of `f`.
pub fn canonical_reduce(f: &CubicForm) -> Result<CubicForm> {
    let g = reduce(f)?;
    if position(&g)? == Position::Interior {
        return Ok(g);
    }
    reduced_neighbours(&g)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Integrity(format!("no reduced neighbour of {g}")))
}

/// True iff `f` is the canonical representative of its orbit.
pub fn is_canonical(f: &CubicForm) -> Result<bool> {
    if normalize_sign(f)? != *f {
        return Ok(false);
    }
    match position(f)? {
        Position::Outside => Ok(false),
        Position::Interior => Ok(true),
        Position::Boundary => Ok(reduced_neighbours(f)?.first() == Some(f)),
    }
}

/// Order of the stabilizer of a weakly reduced form, counted over the neighbourhood.
pub fn reduced_stabilizer(f: &CubicForm) -> Result<u8> {
    match position(f)? {
        Position::Outside => Err(Error::InvalidArgument(format!("{f} is not reduced"))),
        Position::Interior => Ok(1),
        Position::Boundary => {
            let mut count = 0u8;
            for h in neighbourhood() {
                if f.act(h)? == *f {
                    count += 1;
                }
            }
            Ok(count)
        }
    }
}

/// Default search bound for [`stabilizer_order`]: `10 (1 + max |x_i|)`.
pub fn default_stab_bound(f: &CubicForm) -> i64 {
    10 * (1 + f.max_abs_coeff().min(i64::MAX as u64 / 20) as i64)
}

/// Stabilizer order via a search over trace `-1` elements (those of order 3)
/// with entries bounded by `bound`.
pub fn stabilizer_order_with_bound(f: &CubicForm, bound: i64) -> Result<u8> {
    let p_disc = f.discriminant()?;
    // A fixed form has its roots permuted cyclically by an elliptic element:
    // no real root can be fixed and the discriminant must be a square.
    if p_disc <= 0 {
        if p_disc == 0 {
            return Err(Error::Degenerate(f.0));
        }
        return Ok(1);
    }
    let root = (p_disc as f64).sqrt() as i128;
    if !(root - 1..=root + 1).any(|r| r >= 0 && r * r == p_disc) {
        return Ok(1);
    }
    for p in -bound..=bound {
        // q r = -(p^2 + p + 1)
        let t = p as i128 * p as i128 + p as i128 + 1;
        for q in 1..=bound.min(t as i64) {
            if t % q as i128 != 0 {
                continue;
            }
            let r = -(t / q as i128);
            if r.abs() > bound as i128 {
                continue;
            }
            for (q, r) in [(q, r as i64), (-q, -r as i64)] {
                let g = UnimodularMatrix { p, q, r, s: -1 - p };
                if f.act(&g)? == *f {
                    return Ok(3);
                }
            }
        }
    }
    Ok(1)
}

/// [`stabilizer_order_with_bound`] with [`default_stab_bound`].
pub fn stabilizer_order(f: &CubicForm) -> Result<u8> {
    stabilizer_order_with_bound(f, default_stab_bound(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: i64, b: i64, c: i64, d: i64) -> CubicForm {
        CubicForm::new(a, b, c, d)
    }

    #[test]
    fn neighbourhood_size() {
        let n = neighbourhood();
        assert_eq!(n.len(), 20);
        assert!(n.contains(&UnimodularMatrix::IDENTITY));
        assert!(n.contains(&UnimodularMatrix::MINUS_IDENTITY));
        assert!(n.contains(&UnimodularMatrix::W));
    }

    #[test]
    fn same_orbit_same_canonical() {
        let x = f(0, 1, -1, 0);
        let y = x.act(&UnimodularMatrix::u(1)).unwrap();
        assert_eq!(canonical_reduce(&x).unwrap(), canonical_reduce(&y).unwrap());
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(stabilizer_order(&f(0, 1, -1, 0)).unwrap(), 3);
        assert_eq!(stabilizer_order(&f(1, 0, -1, 0)).unwrap(), 1);
        assert_eq!(stabilizer_order(&f(1, 0, -3, 1)).unwrap(), 3);
        for x in [f(0, 1, -1, 0), f(1, 0, -1, 0), f(1, 0, -3, 1), f(1, 0, 0, 1)] {
            let c = canonical_reduce(&x).unwrap();
            assert_eq!(reduced_stabilizer(&c).unwrap(), stabilizer_order(&x).unwrap());
        }
    }

    #[test]
    fn canonical_is_fixed_point() {
        for x in [f(1, 0, -3, 1), f(1, 3, 0, -1), f(5, -7, 2, 9), f(0, 1, 1, 1), f(3, 0, 0, 2)] {
            let c = canonical_reduce(&x).unwrap();
            assert!(is_canonical(&c).unwrap(), "{x} -> {c}");
            assert_eq!(canonical_reduce(&c).unwrap(), c);
            assert_eq!(c.discriminant().unwrap(), x.discriminant().unwrap());
        }
    }

    #[test]
    fn degenerate_rejected() {
        assert_eq!(canonical_reduce(&f(1, 3, 3, 1)), Err(Error::Degenerate([1, 3, 3, 1])));
        assert!(stabilizer_order(&CubicForm::ZERO).is_err());
    }
}
