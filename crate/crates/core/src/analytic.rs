//! Residue constants, 2-adic local density ratios and the class-count
//! asymptotic with its secondary term.

use std::f64::consts::PI;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::enumerate::ClassCatalog;
use crate::error::{Error, Result};
use crate::forms::{CubicForm, LatticeId, Sign};
use crate::qrt3::Q;
use crate::report::Report;
use crate::special::{gamma, zeta};

/// `alpha = pi^2 / 9`.
pub fn alpha() -> f64 {
    PI * PI / 9.0
}

/// `beta = sqrt(3) (2 pi)^(1/3) / 18 * zeta(2/3) Gamma(1/3) / Gamma(2/3)`; negative.
pub fn beta() -> f64 {
    3f64.sqrt() * (2.0 * PI).cbrt() / 18.0 * zeta(2.0 / 3.0) * gamma(1.0 / 3.0) / gamma(2.0 / 3.0)
}

/// A multiple `coeff * sqrt(3)^[sqrt3] * 2^(-1/3)^[inv_cbrt2]` of `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BetaMultiplier {
    #[serde(serialize_with = "ser_q")]
    pub coeff: Q,
    pub sqrt3: bool,
    pub inv_cbrt2: bool,
}

impl BetaMultiplier {
    pub fn value(&self) -> f64 {
        let mut v = q_f64(self.coeff);
        if self.sqrt3 {
            v *= 3f64.sqrt();
        }
        if self.inv_cbrt2 {
            v /= 2f64.cbrt();
        }
        v
    }
}

impl fmt::Display for BetaMultiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if self.sqrt3 {
            write!(f, "*sqrt3")?;
        }
        if self.inv_cbrt2 {
            write!(f, "/cbrt2")?;
        }
        Ok(())
    }
}

fn ser_q<S: serde::Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn q_f64(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Residue multipliers for one `(i, sign)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResidueEntry {
    pub lattice: LatticeId,
    pub sign: Sign,
    #[serde(serialize_with = "ser_q")]
    pub m_alpha: Q,
    pub m_beta: BetaMultiplier,
    #[serde(serialize_with = "ser_q")]
    pub m_alpha_ird: Q,
    #[serde(serialize_with = "ser_q")]
    pub m_alpha_rd: Q,
}

impl ResidueEntry {
    pub fn alpha_ird(&self) -> f64 {
        q_f64(self.m_alpha_ird) * alpha()
    }

    pub fn beta(&self) -> f64 {
        self.m_beta.value() * beta()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidueTable {
    pub alpha: f64,
    pub beta: f64,
    pub entries: Vec<ResidueEntry>,
}

impl ResidueTable {
    pub fn get(&self, lattice: LatticeId, sign: Sign) -> &ResidueEntry {
        self.entries
            .iter()
            .find(|e| e.lattice == lattice && e.sign == sign)
            .expect("table covers all twenty pairs")
    }
}

// (i, [alpha, beta coeff, sqrt3, inv_cbrt2, ird, rd]) for sign + then sign -.
type Row = (i64, i64, i64, i64, bool, bool, i64, i64, i64, i64);
#[rustfmt::skip]
const RESIDUES: [(u8, [Row; 2]); 10] = [
    (1,  [(1, 1, 1, 1, false, false, 1, 4, 3, 4),      (3, 2, 1, 1, true, false, 3, 4, 3, 4)]),
    (2,  [(3, 2, 1, 1, true, false, 3, 4, 3, 4),       (3, 1, 3, 1, false, false, 9, 4, 3, 4)]),
    (3,  [(1, 2, 1, 2, false, false, 1, 8, 3, 8),      (3, 4, 1, 2, true, false, 3, 8, 3, 8)]),
    (4,  [(9, 32, 1, 4, true, true, 3, 32, 3, 16),     (15, 32, 3, 4, false, true, 9, 32, 3, 16)]),
    (5,  [(7, 32, 1, 4, false, true, 1, 32, 3, 16),    (9, 32, 1, 4, true, true, 3, 32, 3, 16)]),
    (6,  [(3, 4, 1, 2, true, false, 3, 8, 3, 8),       (3, 2, 3, 2, false, false, 9, 8, 3, 8)]),
    (7,  [(1, 4, 1, 4, false, false, 1, 16, 3, 16),    (3, 8, 1, 4, true, false, 3, 16, 3, 16)]),
    (8,  [(3, 8, 1, 4, true, false, 3, 16, 3, 16),     (3, 4, 3, 4, false, false, 9, 16, 3, 16)]),
    (9,  [(1, 4, 1, 4, false, false, 1, 16, 3, 16),    (3, 8, 1, 4, true, false, 3, 16, 3, 16)]),
    (10, [(3, 8, 1, 4, true, false, 3, 16, 3, 16),     (3, 4, 3, 4, false, false, 9, 16, 3, 16)]),
];

/// The residue table: `alpha`, `beta` multipliers for all twenty pairs.
pub fn residue_constants() -> ResidueTable {
    // Each Row packs alpha as a fraction in its first two slots.
    let mut entries = Vec::new();
    for (i, rows) in RESIDUES {
        for (sign, r) in Sign::BOTH.into_iter().zip(rows) {
            let (an, ad, bn, bd, sqrt3, inv_cbrt2, irn, ird, rdn, rdd) = r;
            entries.push(ResidueEntry {
                lattice: LatticeId::new(i).expect("index in range"),
                sign,
                m_alpha: Q::new(an, ad),
                m_beta: BetaMultiplier { coeff: Q::new(bn, bd), sqrt3, inv_cbrt2 },
                m_alpha_ird: Q::new(irn, ird),
                m_alpha_rd: Q::new(rdn, rdd),
            });
        }
    }
    ResidueTable { alpha: alpha(), beta: beta(), entries }
}

/// Exponents `(a_i, b_i)` of the functional equation; `2^{b_i} = [L1 : L_i]` for odd `i`.
pub fn constants_ab(lattice: LatticeId) -> (u32, u32) {
    let odd = if lattice.is_odd() { lattice.index() } else { lattice.index() - 1 };
    match odd {
        1 => (0, 0),
        3 => (2, 1),
        5 => (2, 3),
        _ => (2, 2),
    }
}

/// `p + q 2^(-1/3)` with rational `p`, `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cbrt2 {
    pub p: Q,
    pub q: Q,
}

impl fmt::Display for Cbrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => write!(f, "{}", self.p),
            (true, false) => write!(f, "{}/cbrt2", self.q),
            (false, false) => write!(f, "{} + {}/cbrt2", self.p, self.q),
        }
    }
}

/// Ratios `A^ird(L)/A^ird(L1)`, `A^rd(L)/A^rd(L1)`, `B(L)/B(L1)` at `p = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalRatios {
    pub ird: Q,
    pub rd: Q,
    pub beta: Cbrt2,
}

/// Fractions of tuples `(t, u...)` mod `2^j` with `t` of valuation `k`
/// (`k = j` meaning `t = 0 mod 2^j`) for which `place(t, u)` lies in the lattice.
fn valuation_masses(
    lattice: LatticeId,
    j: u32,
    free: usize,
    place: impl Fn(i64, &[i64]) -> CubicForm,
) -> Vec<Q> {
    let m = 1i64 << j;
    let mut hits = vec![0i64; j as usize + 1];
    let mut totals = vec![0i64; j as usize + 1];
    let mut u = vec![0i64; free];
    for t in 0..m {
        let k = if t == 0 { j } else { t.trailing_zeros() } as usize;
        let combos = m.pow(free as u32);
        for idx in 0..combos {
            let mut r = idx;
            for slot in u.iter_mut() {
                *slot = r % m;
                r /= m;
            }
            totals[k] += 1;
            if place(t, &u).lattice_member(lattice) {
                hits[k] += 1;
            }
        }
    }
    hits.iter().zip(&totals).map(|(&h, &n)| Q::new(h, n)).collect()
}

/// Mass for `t` a unit and the common mass for every positive valuation.
fn unit_and_tail(masses: &[Q]) -> Result<(Q, Q)> {
    let tail = masses[1];
    if masses[1..].iter().any(|&m| m != tail) {
        return Err(Error::Integrity(format!("valuation masses not eventually constant: {masses:?}")));
    }
    Ok((masses[0], tail))
}

/// Local ratios computed by counting residues modulo `2^j`.
pub fn local_density_ratios_mod(lattice: LatticeId, j: u32) -> Result<LocalRatios> {
    if !lattice.is_odd() || j == 0 {
        return Err(Error::InvalidArgument(format!("local ratios need an odd lattice, got {lattice}")));
    }
    let l1 = LatticeId::new(1)?;
    let ird = |l: LatticeId| -> Q {
        // The 2-adic volume of the lattice is its density among residues.
        let m = valuation_masses(l, j, 3, |t, u| CubicForm::new(t, u[0], u[1], u[2]));
        let total = 1i64 << j;
        let mut acc = Q::zero();
        for (k, mk) in m.iter().enumerate() {
            let share = if k == j as usize { 1 } else { (1i64 << (j - k as u32)) >> 1 };
            acc += *mk * Q::new(share, total);
        }
        acc
    };
    // int |t|^2 Phi(0, t, u1, u2): unit mass + tail * sum_{k>=1} 4^{-k}.
    let rd = |l: LatticeId| -> Result<Q> {
        let m = valuation_masses(l, j, 2, |t, u| CubicForm::new(0, t, u[0], u[1]));
        let (m0, m1) = unit_and_tail(&m)?;
        Ok(m0 + m1 / Q::from_integer(3))
    };
    // int |t|^{1/3} Phi(t, u1, u2, u3), divided by the L1 value 1/(1 - r):
    // (m0 + m1 r/(1-r))(1-r) = m0 (1 - r) + m1 r.
    let b = |l: LatticeId| -> Result<(Q, Q)> {
        let m = valuation_masses(l, j, 3, |t, u| CubicForm::new(t, u[0], u[1], u[2]));
        unit_and_tail(&m)
    };
    let (b0, b1) = b(lattice)?;
    let (c0, c1) = b(l1)?;
    if c0 != Q::one() || c1 != Q::one() {
        return Err(Error::Integrity("L1 masses must be 1".into()));
    }
    Ok(LocalRatios {
        ird: ird(lattice) / ird(l1),
        rd: rd(lattice)? / rd(l1)?,
        beta: Cbrt2 { p: b0, q: b1 - b0 },
    })
}

/// [`local_density_ratios_mod`] at modulus 2.
pub fn local_density_ratios(lattice: LatticeId) -> Result<LocalRatios> {
    local_density_ratios_mod(lattice, 1)
}

/// The beta multiplier ratio `m_beta(L_i) / m_beta(L1)` as `p + q 2^(-1/3)`.
fn beta_ratio(num: &BetaMultiplier, den: &BetaMultiplier) -> Option<Cbrt2> {
    if num.sqrt3 != den.sqrt3 || den.inv_cbrt2 {
        return None;
    }
    let c = num.coeff / den.coeff;
    Some(if num.inv_cbrt2 { Cbrt2 { p: Q::zero(), q: c } } else { Cbrt2 { p: c, q: Q::zero() } })
}

/// Compares computed local ratios with the residue table for `i = 3, 5, 7, 9`, checks
/// modulus stability and the even/odd column structure of the table.
pub fn verify_residue_ratios() -> Result<Report> {
    let mut rep = Report::new("local-densities");
    let table = residue_constants();
    let l1 = LatticeId::new(1)?;
    for i in [3u8, 5, 7, 9] {
        let l = LatticeId::new(i)?;
        let r = local_density_ratios(l)?;
        let stable = (2..=3).all(|j| local_density_ratios_mod(l, j).ok() == Some(r));
        rep.push(format!("L{i} modulus 2/4/8"), stable, "");
        for sign in Sign::BOTH {
            let (e, e1) = (table.get(l, sign), table.get(l1, sign));
            let ird = e.m_alpha_ird / e1.m_alpha_ird;
            let rd = e.m_alpha_rd / e1.m_alpha_rd;
            let b = beta_ratio(&e.m_beta, &e1.m_beta);
            rep.push(
                format!("L{i}{sign} ird"),
                ird == r.ird,
                format!("table {ird}, computed {}", r.ird),
            );
            rep.push(format!("L{i}{sign} rd"), rd == r.rd, format!("table {rd}, computed {}", r.rd));
            rep.push(
                format!("L{i}{sign} beta"),
                b == Some(r.beta),
                format!("table {}, computed {}", b.map_or("?".into(), |b| b.to_string()), r.beta),
            );
        }
    }
    for e in &table.entries {
        rep.push(
            format!("{}{} alpha = ird + rd", e.lattice, e.sign),
            e.m_alpha == e.m_alpha_ird + e.m_alpha_rd,
            format!("{} = {} + {}", e.m_alpha, e.m_alpha_ird, e.m_alpha_rd),
        );
    }
    // Even columns against their odd partners under (a, b, c, d) -> (a, 3b, 3c, d).
    for (even, odd) in [(2u8, 1u8), (4, 5), (6, 3), (8, 9), (10, 7)] {
        for sign in Sign::BOTH {
            let e = table.get(LatticeId::new(even)?, sign);
            let o = table.get(LatticeId::new(odd)?, sign);
            let three = Q::from_integer(3);
            let beta_ok = {
                let (x, y) = (e.m_beta, o.m_beta);
                x.inv_cbrt2 == y.inv_cbrt2
                    && if y.sqrt3 { !x.sqrt3 && x.coeff == three * y.coeff } else { x.sqrt3 && x.coeff == y.coeff }
            };
            let ok = e.m_alpha_ird == three * o.m_alpha_ird && e.m_alpha_rd == o.m_alpha_rd && beta_ok;
            rep.push(
                format!("L{even}{sign} vs L{odd}{sign}"),
                ok,
                "ird x3, rd x1, beta x sqrt3",
            );
        }
    }
    Ok(rep)
}

/// `alpha^ird X + (6/5) beta X^(5/6)` for the given pair.
pub fn density_prediction(lattice: LatticeId, sign: Sign, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let e = *residue_constants().get(lattice, sign);
    e.alpha_ird() * x + 1.2 * e.beta() * x.powf(5.0 / 6.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityRow {
    pub x: u64,
    /// Number of irreducible classes with `0 < n < x`.
    pub s_unweighted: u64,
    /// Same sum weighted by `1 / stab`.
    pub s_weighted: f64,
    pub stab3_classes: u64,
    pub prediction: f64,
    pub residual: f64,
    /// `residual / x^(2/3)`.
    pub gauge: f64,
}

/// Irreducible class counts below each checkpoint against the prediction.
/// The catalog must have the requested sign and cover the largest checkpoint.
pub fn density_report(catalog: &ClassCatalog, lattice: LatticeId, checkpoints: &[u64]) -> Result<Vec<DensityRow>> {
    let mut cps = checkpoints.to_vec();
    cps.sort_unstable();
    let Some(&xmax) = cps.last() else {
        return Err(Error::InvalidArgument("at least one checkpoint is required".into()));
    };
    if cps[0] == 0 {
        return Err(Error::InvalidArgument("checkpoints must be positive".into()));
    }
    let records = catalog.records(lattice, xmax.saturating_sub(1).max(1))?;
    let mut out = Vec::new();
    let (mut count, mut weighted, mut stab3) = (0u64, 0f64, 0u64);
    let mut it = records.iter().filter(|r| r.irreducible).peekable();
    for x in cps {
        while let Some(r) = it.peek() {
            if r.n >= x {
                break;
            }
            count += 1;
            weighted += 1.0 / r.stab as f64;
            stab3 += (r.stab == 3) as u64;
            it.next();
        }
        let prediction = density_prediction(lattice, catalog.sign, x as f64);
        let residual = count as f64 - prediction;
        out.push(DensityRow {
            x,
            s_unweighted: count,
            s_weighted: weighted,
            stab3_classes: stab3,
            prediction,
            residual,
            gauge: residual / (x as f64).powf(2.0 / 3.0),
        });
    }
    Ok(out)
}

/// Constant `C` of the acceptance gauge `|residual| <= C X^(2/3)`.
pub const GAUGE_CONSTANT: f64 = 5.0;

/// Gauge bound at every row and `|gauge|` not larger at the last checkpoint than at the first.
pub fn check_density_rows(name: &str, rows: &[DensityRow]) -> Report {
    let mut rep = Report::new("density");
    for r in rows {
        rep.push(
            format!("{name} X={}", r.x),
            r.gauge.abs() <= GAUGE_CONSTANT,
            format!(
                "S={} prediction={:.3} residual={:.3} residual/X^(2/3)={:.4}",
                r.s_unweighted, r.prediction, r.residual, r.gauge
            ),
        );
    }
    if let (Some(first), Some(last)) = (rows.first(), rows.last()) {
        if first.x < last.x {
            rep.push(
                format!("{name} trend"),
                last.gauge.abs() <= first.gauge.abs(),
                format!("{:.4} at {} -> {:.4} at {}", first.gauge, first.x, last.gauge, last.x),
            );
        }
    }
    rep
}

/// Density checks for `(L1, +)` and `(L1, -)` at `max_x / 10` and `max_x`.
pub fn verify_density(max_x: u64) -> Result<Report> {
    if max_x < 10 {
        return Err(Error::InvalidArgument("density check needs X >= 10".into()));
    }
    let mut rep = Report::new("density");
    let l1 = LatticeId::new(1)?;
    for sign in Sign::BOTH {
        let catalog = ClassCatalog::build(sign, max_x)?;
        let rows = density_report(&catalog, l1, &[max_x / 10, max_x])?;
        let sub = check_density_rows(&format!("L1{sign}"), &rows);
        rep.checks.extend(sub.checks);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(i: u8) -> LatticeId {
        LatticeId::new(i).unwrap()
    }

    #[test]
    fn constants() {
        assert!((alpha() - 1.096_622_711_232_151).abs() < 1e-13);
        assert!((beta() - -0.859_787_966_361_981).abs() < 1e-12, "{}", beta());
    }

    #[test]
    fn table_examples() {
        let t = residue_constants();
        let e = t.get(lat(1), Sign::Pos);
        assert_eq!((e.m_alpha, e.m_alpha_ird, e.m_alpha_rd), (Q::one(), Q::new(1, 4), Q::new(3, 4)));
        assert_eq!(e.m_beta, BetaMultiplier { coeff: Q::one(), sqrt3: false, inv_cbrt2: false });
        let e = t.get(lat(7), Sign::Neg);
        assert_eq!(e.m_alpha, Q::new(3, 8));
        assert_eq!(e.m_beta, BetaMultiplier { coeff: Q::new(1, 4), sqrt3: true, inv_cbrt2: false });
        assert_eq!(t.get(lat(5), Sign::Pos).m_alpha_ird, Q::new(1, 32));
    }

    #[test]
    fn hand_ratios() {
        let r = local_density_ratios(lat(3)).unwrap();
        assert_eq!(r.ird, Q::new(1, 2));
        let r = local_density_ratios(lat(5)).unwrap();
        assert_eq!((r.ird, r.rd), (Q::new(1, 8), Q::new(1, 4)));
        assert_eq!(r.beta, Cbrt2 { p: Q::zero(), q: Q::new(1, 4) });
        let r = local_density_ratios(lat(7)).unwrap();
        assert_eq!(r.beta, Cbrt2 { p: Q::new(1, 4), q: Q::zero() });
    }

    #[test]
    fn prediction_values() {
        assert_eq!(density_prediction(lat(1), Sign::Pos, 0.0), 0.0);
        // Reference values from an independent 30-digit evaluation.
        assert!((density_prediction(lat(1), Sign::Pos, 1e6) - 170_981.122).abs() < 0.01);
        assert!((density_prediction(lat(1), Sign::Neg, 1e6) - 643_763.460).abs() < 0.01);
        assert!((density_prediction(lat(1), Sign::Pos, 1e5) - 12_271.614).abs() < 0.01);
        assert!((density_prediction(lat(1), Sign::Neg, 1e5) - 56_016.606).abs() < 0.01);
    }

    #[test]
    fn prediction_is_asymptotic_to_the_main_term() {
        for (l, sign) in [(1u8, Sign::Pos), (5, Sign::Pos), (8, Sign::Neg)] {
            let e = *residue_constants().get(lat(l), sign);
            let err = |x: f64| (density_prediction(lat(l), sign, x) / x - e.alpha_ird()).abs();
            assert!(err(1e8) < err(1e6) && err(1e6) < err(1e4));
            assert!(err(1e14) < 0.05 * e.alpha_ird());
        }
    }

    #[test]
    fn small_density_report() {
        let cat = ClassCatalog::build(Sign::Neg, 2000).unwrap();
        let rows = density_report(&cat, lat(1), &[1000, 200]).unwrap();
        assert_eq!(rows.iter().map(|r| r.x).collect::<Vec<_>>(), vec![200, 1000]);
        assert!(rows[0].s_unweighted <= rows[1].s_unweighted);
        assert!(density_report(&cat, lat(1), &[]).is_err());
        assert!(density_report(&cat, lat(1), &[5000]).is_err());
    }

    #[test]
    fn ab_constants() {
        let ab: Vec<_> = [1u8, 3, 5, 7, 9].iter().map(|&i| constants_ab(lat(i))).collect();
        assert_eq!(ab, vec![(0, 0), (2, 1), (2, 3), (2, 2), (2, 2)]);
        assert_eq!(constants_ab(lat(6)), constants_ab(lat(5)));
    }
}
