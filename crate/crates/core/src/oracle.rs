//! Brute-force orbit enumeration, independent of the reduction theory.
//!
//! Every lattice point in a coefficient box is grouped into orbits by a
//! breadth-first closure under `u(1)`, `u(-1)` and `w` with a coefficient cap.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{ClassCatalog, ClassRecord, EnumerationParams};
use crate::error::{Error, Result};
use crate::forms::{CubicForm, LatticeId, Sign, UnimodularMatrix};
use crate::reduction::{default_stab_bound, stabilizer_order_with_bound};
use crate::report::Report;

const GENERATORS: [UnimodularMatrix; 3] = [
    UnimodularMatrix { p: 1, q: 1, r: 0, s: 1 },
    UnimodularMatrix { p: 1, q: -1, r: 0, s: 1 },
    UnimodularMatrix::W,
];

fn closure(f: &CubicForm, cap: i64) -> Result<HashSet<CubicForm>> {
    let cap = cap.unsigned_abs();
    let mut seen = HashSet::new();
    if f.max_abs_coeff() > cap {
        seen.insert(*f);
        return Ok(seen);
    }
    let mut queue = VecDeque::from([*f]);
    seen.insert(*f);
    while let Some(g) = queue.pop_front() {
        for h in &GENERATORS {
            // Images outside the cap are discarded; overflow only happens far outside it.
            let Ok(next) = g.act(h) else { continue };
            if next.max_abs_coeff() <= cap && seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Closure of `{f}` under `u(1)`, `u(-1)`, `w` within `|x_i| <= cap`.
pub fn orbit_bfs(f: &CubicForm, cap: i64) -> Result<BTreeSet<CubicForm>> {
    if f.discriminant()? == 0 {
        return Err(Error::Degenerate(f.0));
    }
    Ok(closure(f, cap)?.into_iter().collect())
}

/// Result of an oracle run together with its box-growth rerun.
#[derive(Debug, Clone, Serialize)]
pub struct OracleRun {
    pub records: Vec<ClassRecord>,
    pub box_half_width: i64,
    pub rerun_half_width: i64,
    /// True iff the rerun at the larger box gave the same `(n, stab, irreducible)` multiset.
    pub stable: bool,
}

/// Multiset of `(n, stab, irreducible)` keys.
pub fn signature(records: &[ClassRecord]) -> BTreeMap<(u64, u8, bool), usize> {
    let mut m = BTreeMap::new();
    for r in records {
        *m.entry((r.n, r.stab, r.irreducible)).or_insert(0) += 1;
    }
    m
}

fn index_of(f: &CubicForm, lattice: LatticeId) -> Result<Option<(Sign, u64)>> {
    let p = f.discriminant()?;
    let Some(sign) = Sign::of(p) else { return Ok(None) };
    let n = if lattice.is_odd() { p.unsigned_abs() } else { (p / 27).unsigned_abs() };
    Ok(Some((sign, n as u64)))
}

/// Values of `x4` in `[-b, b]` for which `P(x1, x2, x3, x4)` may lie in `[lo, hi]`.
/// `P` is `qa x4^2 + qb x4 + qc` with `qa = -27 x1^2 <= 0`; the result is a
/// padded superset that callers check exactly.
fn x4_candidates(x: [i64; 3], lo: f64, hi: f64, b: i64) -> Vec<i64> {
    let [x1, x2, x3] = x.map(|v| v as f64);
    let qa = -27.0 * x1 * x1;
    let qb = 18.0 * x1 * x2 * x3 - 4.0 * x2 * x2 * x2;
    let qc = x2 * x2 * x3 * x3 - 4.0 * x1 * x3 * x3 * x3;
    let clamp = |v: f64| v.clamp(-(b as f64) - 2.0, b as f64 + 2.0) as i64;
    let mut ranges: Vec<(i64, i64)> = Vec::new();
    if qa == 0.0 {
        if qb == 0.0 {
            return Vec::new();
        }
        let (r1, r2) = ((lo - qc) / qb, (hi - qc) / qb);
        ranges.push((clamp(r1.min(r2).floor() - 1.0), clamp(r1.max(r2).ceil() + 1.0)));
    } else {
        let roots = |level: f64| -> Option<(f64, f64)> {
            let disc = qb * qb - 4.0 * qa * (qc - level);
            (disc >= 0.0).then(|| {
                let s = disc.sqrt();
                let (r1, r2) = ((-qb + s) / (2.0 * qa), (-qb - s) / (2.0 * qa));
                (r1.min(r2), r1.max(r2))
            })
        };
        let Some((s1, s2)) = roots(lo) else { return Vec::new() };
        match roots(hi) {
            Some((t1, t2)) if t2 - t1 > 4.0 => {
                ranges.push((clamp(s1.floor() - 1.0), clamp(t1.ceil() + 1.0)));
                ranges.push((clamp(t2.floor() - 1.0), clamp(s2.ceil() + 1.0)));
            }
            _ => ranges.push((clamp(s1.floor() - 1.0), clamp(s2.ceil() + 1.0))),
        }
    }
    let mut out: Vec<i64> = ranges
        .into_iter()
        .flat_map(|(a, z)| a.max(-b)..=z.min(b))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn scan(
    lattice: LatticeId,
    sign: Sign,
    max_index: u64,
    b: i64,
    stab_bound: Option<i64>,
) -> Result<Vec<ClassRecord>> {
    let mid_step = if lattice.is_odd() { 1 } else { 3 };
    let mid_start = -(b - b.rem_euclid(mid_step));
    let scale = if lattice.is_odd() { 1.0 } else { 27.0 };
    let ymax = max_index as f64 * scale;
    let (lo, hi) = match sign {
        Sign::Pos => (1.0, ymax),
        Sign::Neg => (-ymax, -1.0),
    };
    let mut visited: HashSet<CubicForm> = HashSet::new();
    let mut out = Vec::new();
    for x1 in -b..=b {
        for x2 in (mid_start..=b).step_by(mid_step as usize) {
            for x3 in (mid_start..=b).step_by(mid_step as usize) {
                for x4 in x4_candidates([x1, x2, x3], lo, hi, b) {
                    let f = CubicForm::new(x1, x2, x3, x4);
                    let Some((s, n)) = index_of(&f, lattice)? else { continue };
                    if s != sign || n > max_index || n == 0 || !f.lattice_member(lattice) {
                        continue;
                    }
                    if visited.contains(&f) {
                        continue;
                    }
                    let orbit = closure(&f, 4 * b)?;
                    // The stabilizer search is run on a member of least height,
                    // where the default entry bound is meaningful.
                    let low = orbit
                        .iter()
                        .min_by_key(|g| (g.max_abs_coeff(), **g))
                        .copied()
                        .unwrap_or(f);
                    visited.extend(orbit.into_iter().filter(|g| g.max_abs_coeff() <= b as u64));
                    let bound = stab_bound.unwrap_or_else(|| default_stab_bound(&low));
                    out.push(ClassRecord {
                        lattice,
                        sign,
                        n,
                        rep: f,
                        stab: stabilizer_order_with_bound(&low, bound)?,
                        irreducible: f.is_irreducible()?,
                    });
                }
            }
        }
    }
    out.sort_by_key(|r| r.key());
    Ok(out)
}

/// Orbits of `lattice` with the given sign and `1 <= n <= max_index` that meet
/// the box `[-b, b]^4`, each represented by its lexicographically smallest
/// in-box member. Reruns with the box enlarged by half and reports stability.
pub fn brute_force_classes(
    lattice: LatticeId,
    sign: Sign,
    max_index: u64,
    b: i64,
    stab_bound: Option<i64>,
) -> Result<OracleRun> {
    if b < 1 || max_index == 0 {
        return Err(Error::InvalidArgument("box and index bound must be positive".into()));
    }
    let records = scan(lattice, sign, max_index, b, stab_bound)?;
    let b2 = (3 * b + 1) / 2;
    let rerun = scan(lattice, sign, max_index, b2, stab_bound)?;
    let stable = signature(&records) == signature(&rerun);
    Ok(OracleRun { records, box_half_width: b, rerun_half_width: b2, stable })
}

/// Default oracle box for index bound `x`: `max(40, x/4 + 5)`. Reducible
/// negative orbits such as `v1 (k v1^2 + v2^2)` have no member of height below `k = x/4`.
pub fn default_oracle_box(x: u64) -> i64 {
    (x / 4 + 5).max(40).min(i64::MAX as u64) as i64
}

/// Compares the reduction-based enumeration with the brute-force oracle on
/// all twenty (lattice, sign) pairs: equal `(n, stab, irreducible)` multisets
/// and a stable rerun.
pub fn verify_oracle(params: &EnumerationParams) -> Result<Report> {
    let x = params.max_index;
    let y = x.checked_mul(27).ok_or(Error::Overflow("index bound"))?;
    let catalogs = [ClassCatalog::build(Sign::Pos, y)?, ClassCatalog::build(Sign::Neg, y)?];
    let pairs: Vec<(LatticeId, Sign)> =
        LatticeId::all().flat_map(|l| Sign::BOTH.map(|s| (l, s))).collect();
    let results: Vec<Result<(LatticeId, Sign, Vec<ClassRecord>, OracleRun)>> = pairs
        .par_iter()
        .map(|&(l, s)| {
            let cat = &catalogs[(s == Sign::Neg) as usize];
            let ours = cat.records(l, x)?;
            let run = brute_force_classes(l, s, x, params.oracle_box, params.stab_search_bound)?;
            Ok((l, s, ours, run))
        })
        .collect();
    let mut rep = Report::new("oracle");
    for r in results {
        let (l, s, ours, run) = r?;
        let same = signature(&ours) == signature(&run.records);
        rep.push(
            format!("{l}{s}"),
            same && run.stable,
            format!(
                "{} classes, oracle {} (box {}, rerun {} {})",
                ours.len(),
                run.records.len(),
                run.box_half_width,
                run.rerun_half_width,
                if run.stable { "stable" } else { "unstable" }
            ),
        );
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: i64, b: i64, c: i64, d: i64) -> CubicForm {
        CubicForm::new(a, b, c, d)
    }

    #[test]
    fn bfs_contains_generator_images() {
        let x = f(0, 1, -1, 0);
        let orbit = orbit_bfs(&x, 3).unwrap();
        assert!(orbit.contains(&x));
        assert!(orbit.contains(&x.act(&UnimodularMatrix::W).unwrap()));
        assert!(orbit.contains(&x.act(&UnimodularMatrix::u(1)).unwrap()));
    }

    #[test]
    fn bfs_small_cap() {
        let x = f(5, 0, 0, 1);
        assert_eq!(orbit_bfs(&x, 2).unwrap(), BTreeSet::from([x]));
    }

    #[test]
    fn tiny_box() {
        let run = brute_force_classes(LatticeId::new(1).unwrap(), Sign::Pos, 1, 2, None).unwrap();
        assert_eq!(run.records.len(), 1);
        assert_eq!(run.records[0].stab, 3);
        assert!(run.stable);
    }

    #[test]
    fn small_oracle_agreement() {
        let params = EnumerationParams { max_index: 30, oracle_box: default_oracle_box(30), stab_search_bound: None };
        let rep = verify_oracle(&params).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.checks.len(), 20);
    }
}
