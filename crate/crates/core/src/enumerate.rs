//! Enumeration of `SL2(Z)`-classes with bounded discriminant.
//!
//! Classes are enumerated once in `L1` per sign by walking canonical forms in
//! root orientation `(A, B, C, D) = (x4, x3, x2, x1)` and then filtered by
//! lattice membership, which is orbit-invariant.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{CubicForm, LatticeId, Sign};
use crate::reduction::{is_canonical, reduced_stabilizer};

/// One `SL2(Z)`-orbit in a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassRecord {
    pub lattice: LatticeId,
    pub sign: Sign,
    /// `|P|` for odd lattices, `|Q| = |P|/27` for even ones.
    pub n: u64,
    pub rep: CubicForm,
    pub stab: u8,
    pub irreducible: bool,
}

impl ClassRecord {
    /// Sort key used for all outputs.
    pub fn key(&self) -> (u64, CubicForm) {
        (self.n, self.rep)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationParams {
    /// Largest index `n` enumerated.
    pub max_index: u64,
    /// Half-width of the coefficient box scanned by the oracle.
    pub oracle_box: i64,
    /// Entry bound for the oracle's stabilizer search; `None` uses the default.
    pub stab_search_bound: Option<i64>,
}

impl Default for EnumerationParams {
    fn default() -> Self {
        EnumerationParams { max_index: 300, oracle_box: 80, stab_search_bound: None }
    }
}

/// A class of `L1` forms, independent of the lattice it is later filtered into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub abs_disc: u64,
    pub rep: CubicForm,
    pub stab: u8,
    pub irreducible: bool,
}

/// All classes of `L1` with `1 <= |P| <= max_abs_disc` and one sign.
#[derive(Debug, Clone)]
pub struct ClassCatalog {
    pub sign: Sign,
    pub max_abs_disc: u64,
    pub entries: Vec<CatalogEntry>,
}

/// Index bound in `|P|` needed to cover index `x` in `lattice`.
pub fn disc_bound(lattice: LatticeId, x: u64) -> Result<u64> {
    if lattice.is_odd() {
        Ok(x)
    } else {
        x.checked_mul(27).ok_or(Error::Overflow("index bound"))
    }
}

impl ClassCatalog {
    pub fn build(sign: Sign, max_abs_disc: u64) -> Result<ClassCatalog> {
        build_catalog(sign, max_abs_disc, 1.0)
    }

    /// Records of `lattice` with `1 <= n <= max_index`, sorted by `(n, rep)`.
    pub fn records(&self, lattice: LatticeId, max_index: u64) -> Result<Vec<ClassRecord>> {
        let bound = disc_bound(lattice, max_index)?;
        if bound > self.max_abs_disc {
            return Err(Error::InvalidArgument(format!(
                "catalog covers |P| <= {}, {lattice} up to {max_index} needs {bound}",
                self.max_abs_disc
            )));
        }
        let mut out = Vec::new();
        for e in &self.entries {
            if e.abs_disc > bound {
                break;
            }
            if !e.rep.lattice_member(lattice) {
                continue;
            }
            let n = if lattice.is_odd() { e.abs_disc } else { e.abs_disc / 27 };
            out.push(ClassRecord {
                lattice,
                sign: self.sign,
                n,
                rep: e.rep,
                stab: e.stab,
                irreducible: e.irreducible,
            });
        }
        Ok(out)
    }
}

/// Classes of `lattice` with the given sign and `1 <= n <= max_index`.
pub fn enumerate_classes(lattice: LatticeId, sign: Sign, max_index: u64) -> Result<Vec<ClassRecord>> {
    if max_index == 0 {
        return Err(Error::InvalidArgument("max index must be positive".into()));
    }
    ClassCatalog::build(sign, disc_bound(lattice, max_index)?)?.records(lattice, max_index)
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn floor_div(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

fn ceil_div(a: i128, b: i128) -> i128 {
    -(-a).div_euclid(b)
}

/// Integer points where a concave quadratic `qa d^2 + qb d + qc` can lie in `[lo, hi]`,
/// as a list of inclusive ranges (padded; callers re-check exactly).
fn quadratic_ranges(qa: f64, qb: f64, qc: f64, lo: f64, hi: f64) -> Vec<(i64, i64)> {
    let roots = |level: f64| -> Option<(f64, f64)> {
        let disc = qb * qb - 4.0 * qa * (qc - level);
        if disc < 0.0 {
            return None;
        }
        let s = disc.sqrt();
        let (r1, r2) = ((-qb + s) / (2.0 * qa), (-qb - s) / (2.0 * qa));
        Some((r1.min(r2), r1.max(r2)))
    };
    let Some((s1, s2)) = roots(lo) else { return Vec::new() };
    let outer = (s1.floor() as i64 - 1, s2.ceil() as i64 + 1);
    match roots(hi) {
        Some((t1, t2)) if t2.floor() - t1.ceil() > 4.0 => {
            vec![(outer.0, t1.ceil() as i64 + 1), (t2.floor() as i64 - 1, outer.1)]
        }
        _ => vec![outer],
    }
}

fn accept(x: CubicForm, sign: Sign, max_abs_disc: u64, out: &mut Vec<CatalogEntry>) -> Result<()> {
    let p = x.discriminant()?;
    if Sign::of(p) != Some(sign) || p.unsigned_abs() > max_abs_disc as u128 {
        return Ok(());
    }
    if !is_canonical(&x)? {
        return Ok(());
    }
    out.push(CatalogEntry {
        abs_disc: p.unsigned_abs() as u64,
        rep: x,
        stab: reduced_stabilizer(&x)?,
        irreducible: x.is_irreducible()?,
    });
    Ok(())
}

/// Forms with leading root coefficient `A = 0`: `P = B^2 (C^2 - 4 B D)`, `B > 0`, `|C| <= B`.
fn scan_a_zero(b: i64, sign: Sign, y: u64, out: &mut Vec<CatalogEntry>) -> Result<()> {
    let b128 = b as i128;
    let tmax = (y / (b as u64 * b as u64)) as i128;
    for c in -b..=b {
        let c2 = c as i128 * c as i128;
        let (dlo, dhi) = match sign {
            Sign::Pos => (ceil_div(c2 - tmax, 4 * b128), floor_div(c2 - 1, 4 * b128)),
            Sign::Neg => (ceil_div(c2 + 1, 4 * b128), floor_div(c2 + tmax, 4 * b128)),
        };
        let mut d = dlo;
        while d <= dhi {
            let d64 = i64::try_from(d).map_err(|_| Error::Overflow("enumeration"))?;
            accept(CubicForm::new(d64, c, b, 0), sign, y, out)?;
            d += 1;
        }
    }
    Ok(())
}

fn scan_ab(a: i64, b: i64, sign: Sign, y: u64, k: f64, out: &mut Vec<CatalogEntry>) -> Result<()> {
    let sigma = (k / a as f64).powf(2.0 / 3.0);
    let cmax = (0.75 * a as f64 + b.abs() as f64 + k * sigma.sqrt()).floor() as i64 + 1;
    let (lo, hi) = match sign {
        Sign::Pos => (1.0, y as f64),
        Sign::Neg => (-(y as f64), -1.0),
    };
    let (af, bf) = (a as f64, b as f64);
    for c in -cmax..=cmax {
        let cf = c as f64;
        let qa = -27.0 * af * af;
        let qb = 18.0 * af * bf * cf - 4.0 * bf * bf * bf;
        let qc = bf * bf * cf * cf - 4.0 * af * cf * cf * cf;
        for (d0, d1) in quadratic_ranges(qa, qb, qc, lo, hi) {
            for d in d0..=d1 {
                accept(CubicForm::new(d, c, b, a), sign, y, out)?;
            }
        }
    }
    Ok(())
}

fn build_catalog(sign: Sign, y: u64, inflate: f64) -> Result<ClassCatalog> {
    if y == 0 {
        return Err(Error::InvalidArgument("discriminant bound must be positive".into()));
    }
    if y > 1 << 40 {
        return Err(Error::InvalidArgument(format!("discriminant bound {y} too large")));
    }
    let yf = y as f64;
    // Coefficient scale of a balanced form with covariant point at i.
    let k = inflate
        * 1.01
        * match sign {
            Sign::Pos => 3.0 * (yf / 108.0).powf(0.25),
            Sign::Neg => (yf / 4.0).powf(0.25),
        };
    let a_max = (k * (2.0 / 3f64.sqrt()).powf(1.5)).floor() as i64 + 1;
    let mut jobs: Vec<(i64, i64)> = (1..=isqrt(y) as i64).map(|b| (0, b)).collect();
    for a in 1..=a_max {
        let bmax = (1.5 * a as f64 + k * (4.0f64 / 3.0).powf(0.25)).floor() as i64 + 1;
        jobs.extend((-bmax..=bmax).map(|b| (a, b)));
    }
    let chunks: Vec<Vec<CatalogEntry>> = jobs
        .into_par_iter()
        .map(|(a, b)| {
            let mut out = Vec::new();
            if a == 0 {
                scan_a_zero(b, sign, y, &mut out)?;
            } else {
                scan_ab(a, b, sign, y, k, &mut out)?;
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut entries: Vec<CatalogEntry> = chunks.into_iter().flatten().collect();
    entries.sort_by_key(|e| (e.abs_disc, e.rep));
    if let Some(w) = entries.windows(2).find(|w| w[0].rep == w[1].rep) {
        return Err(Error::Integrity(format!("duplicate representative {}", w[0].rep)));
    }
    Ok(ClassCatalog { sign, max_abs_disc: y, entries })
}

/// Catalog built with every coefficient bound scaled by `factor`; used to
/// check that the default bounds lose nothing.
pub fn build_catalog_inflated(sign: Sign, max_abs_disc: u64, factor: f64) -> Result<ClassCatalog> {
    build_catalog(sign, max_abs_disc, factor)
}

/// Writes records as JSON lines.
pub fn write_jsonl<W: Write>(records: &[ClassRecord], mut out: W) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
