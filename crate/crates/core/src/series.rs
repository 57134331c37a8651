//! Dirichlet coefficient series built from class records, and the exact
//! checks on them: relations, tables, rank, Euler products.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::enumerate::{ClassCatalog, ClassRecord};
use crate::error::{Error, Result};
use crate::forms::{CubicForm, LatticeId, Sign};
use crate::golden;
use crate::qrt3::{Qrt3, Q};
use crate::report::Report;

/// Coefficients of `xi_sign(L, s)` for `n <= max_n`; zero coefficients are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSeries {
    pub lattice: LatticeId,
    pub sign: Sign,
    pub max_n: u64,
    /// Sum of `1 / stab` over classes of index `n`.
    pub coeffs: BTreeMap<u64, Q>,
    /// Number of classes of index `n`.
    pub counts: BTreeMap<u64, u64>,
    pub ird_coeffs: BTreeMap<u64, Q>,
    pub rd_coeffs: BTreeMap<u64, Q>,
}

impl CoefficientSeries {
    pub fn coeff(&self, n: u64) -> Q {
        self.coeffs.get(&n).copied().unwrap_or_else(Q::zero)
    }

    pub fn count(&self, n: u64) -> u64 {
        self.counts.get(&n).copied().unwrap_or(0)
    }

    pub fn ird(&self, n: u64) -> Q {
        self.ird_coeffs.get(&n).copied().unwrap_or_else(Q::zero)
    }

    pub fn rd(&self, n: u64) -> Q {
        self.rd_coeffs.get(&n).copied().unwrap_or_else(Q::zero)
    }

    /// Residues mod 4 allowed for nonzero coefficients.
    pub fn support_residues(lattice: LatticeId, sign: Sign) -> [u64; 2] {
        match (lattice.is_odd(), sign) {
            (true, Sign::Neg) | (false, Sign::Pos) => [0, 3],
            _ => [0, 1],
        }
    }
}

/// Aggregates records of one lattice and sign into a series.
pub fn build_series(
    lattice: LatticeId,
    sign: Sign,
    records: &[ClassRecord],
    max_n: u64,
) -> Result<CoefficientSeries> {
    let mut s = CoefficientSeries {
        lattice,
        sign,
        max_n,
        coeffs: BTreeMap::new(),
        counts: BTreeMap::new(),
        ird_coeffs: BTreeMap::new(),
        rd_coeffs: BTreeMap::new(),
    };
    let mut seen: HashSet<(u64, CubicForm)> = HashSet::new();
    for r in records {
        if r.lattice != lattice || r.sign != sign {
            return Err(Error::InvalidArgument(format!(
                "record for {}{} in series {lattice}{sign}",
                r.lattice, r.sign
            )));
        }
        if r.n > max_n {
            continue;
        }
        if !seen.insert((r.n, r.rep)) {
            return Err(Error::Integrity(format!("duplicate record n={} rep={}", r.n, r.rep)));
        }
        if r.stab != 1 && r.stab != 3 {
            return Err(Error::Integrity(format!("stabilizer order {} for {}", r.stab, r.rep)));
        }
        let w = Q::new(1, r.stab as i64);
        *s.coeffs.entry(r.n).or_insert_with(Q::zero) += w;
        *s.counts.entry(r.n).or_insert(0) += 1;
        let split = if r.irreducible { &mut s.ird_coeffs } else { &mut s.rd_coeffs };
        *split.entry(r.n).or_insert_with(Q::zero) += w;
    }
    Ok(s)
}

/// All twenty series up to a common `max_n`.
#[derive(Debug, Clone)]
pub struct SeriesBundle {
    pub max_n: u64,
    series: BTreeMap<(LatticeId, Sign), CoefficientSeries>,
}

impl SeriesBundle {
    /// Enumerates both catalogs and builds every series to `max_n`.
    pub fn build(max_n: u64) -> Result<SeriesBundle> {
        let y = max_n.checked_mul(27).ok_or(Error::Overflow("index bound"))?;
        let pos = ClassCatalog::build(Sign::Pos, y)?;
        let neg = ClassCatalog::build(Sign::Neg, y)?;
        SeriesBundle::from_catalogs(&pos, &neg, max_n)
    }

    pub fn from_catalogs(pos: &ClassCatalog, neg: &ClassCatalog, max_n: u64) -> Result<SeriesBundle> {
        let mut series = BTreeMap::new();
        for cat in [pos, neg] {
            for l in LatticeId::all() {
                let recs = cat.records(l, max_n)?;
                series.insert((l, cat.sign), build_series(l, cat.sign, &recs, max_n)?);
            }
        }
        Ok(SeriesBundle { max_n, series })
    }

    pub fn from_series(max_n: u64, all: Vec<CoefficientSeries>) -> Result<SeriesBundle> {
        let mut series = BTreeMap::new();
        for s in all {
            series.insert((s.lattice, s.sign), s);
        }
        if series.len() != 20 {
            return Err(Error::InvalidArgument(format!("expected 20 series, got {}", series.len())));
        }
        Ok(SeriesBundle { max_n, series })
    }

    pub fn get(&self, lattice: LatticeId, sign: Sign) -> &CoefficientSeries {
        &self.series[&(lattice, sign)]
    }

    pub fn get_mut(&mut self, lattice: LatticeId, sign: Sign) -> &mut CoefficientSeries {
        self.series.get_mut(&(lattice, sign)).expect("bundle holds all twenty series")
    }

    /// `xi_sign(L_i)(n)`.
    pub fn c(&self, i: u8, sign: Sign, n: u64) -> Q {
        self.get(lat(i), sign).coeff(n)
    }

    pub fn iter(&self) -> impl Iterator<Item = &CoefficientSeries> {
        self.series.values()
    }
}

fn lat(i: u8) -> LatticeId {
    LatticeId::new(i).expect("index in 1..=10")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// Column `(lattice, sign)` labels.
    pub fn columns(self) -> [(LatticeId, Sign); 10] {
        let odd_sign = match self {
            Side::Left => Sign::Neg,
            Side::Right => Sign::Pos,
        };
        std::array::from_fn(|k| {
            let i = k as u8 + 1;
            (lat(i), if i % 2 == 1 { odd_sign } else { odd_sign.flip() })
        })
    }

    pub fn rows(self) -> Vec<u64> {
        self.golden().rows.iter().map(|r| r.0).collect()
    }

    pub fn golden(self) -> GoldenTable {
        let src = match self {
            Side::Left => &golden::LEFT,
            Side::Right => &golden::RIGHT,
        };
        GoldenTable { side: self, rows: src.to_vec() }
    }
}

/// How a coefficient is scaled to a printed table entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Every column times three except `xi_-(L_i)`, `i` even, which is exact.
    Primary,
    /// Every column times three except `xi_+(L_i)`, `i` even, which is exact.
    Alternative,
}

impl Convention {
    pub fn factor(self, lattice: LatticeId, sign: Sign) -> i64 {
        let exact_sign = match self {
            Convention::Primary => Sign::Neg,
            Convention::Alternative => Sign::Pos,
        };
        if !lattice.is_odd() && sign == exact_sign {
            1
        } else {
            3
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenTable {
    pub side: Side,
    pub rows: Vec<(u64, [u32; 10])>,
}

impl fmt::Display for GoldenTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>4}", "n")?;
        for (l, s) in self.side.columns() {
            write!(f, " {:>5}", format!("{l}{s}"))?;
        }
        writeln!(f)?;
        for (n, row) in &self.rows {
            write!(f, "{n:>4}")?;
            for v in row {
                write!(f, " {v:>5}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Renders the rows of one side from computed series.
pub fn render_table(side: Side, bundle: &SeriesBundle, conv: Convention) -> Result<GoldenTable> {
    let mut rows = Vec::new();
    for n in side.rows() {
        if n > bundle.max_n {
            return Err(Error::InvalidArgument(format!("series end at {}, table needs {n}", bundle.max_n)));
        }
        let mut row = [0u32; 10];
        for (k, (l, s)) in side.columns().into_iter().enumerate() {
            let v = bundle.get(l, s).coeff(n) * Q::from_integer(conv.factor(l, s));
            if !v.is_integer() || v < Q::zero() {
                return Err(Error::Integrity(format!("{l}{s} at n={n}: entry {v} is not a table value")));
            }
            row[k] = *v.numer() as u32;
        }
        rows.push((n, row));
    }
    Ok(GoldenTable { side, rows })
}

/// Line diff between two tables of the same side; empty when equal.
pub fn diff_tables(expected: &GoldenTable, got: &GoldenTable) -> Vec<String> {
    let mut out = Vec::new();
    let fmt_row = |n: u64, r: &[u32; 10]| {
        format!("{n:>4} {}", r.iter().map(|v| format!("{v:>3}")).collect::<Vec<_>>().join(""))
    };
    for (e, g) in expected.rows.iter().zip(&got.rows) {
        if e != g {
            out.push(format!("-{}", fmt_row(e.0, &e.1)));
            out.push(format!("+{}", fmt_row(g.0, &g.1)));
        }
    }
    if expected.rows.len() != got.rows.len() {
        out.push(format!("row count {} vs {}", expected.rows.len(), got.rows.len()));
    }
    out
}

/// Compares both rendered sides with the embedded tables.
pub fn verify_tables(bundle: &SeriesBundle) -> Report {
    let mut rep = Report::new("tables");
    for side in [Side::Left, Side::Right] {
        let name = format!("{side:?}").to_lowercase();
        let expected = side.golden();
        match render_table(side, bundle, Convention::Primary) {
            Err(e) => rep.push(name, false, e.to_string()),
            Ok(got) => {
                let mut matched = 0;
                for (e, g) in expected.rows.iter().zip(&got.rows) {
                    matched += e.1.iter().zip(&g.1).filter(|(a, b)| a == b).count();
                }
                let diff = diff_tables(&expected, &got);
                if diff.is_empty() {
                    rep.push(name, true, format!("{matched}/250 entries"));
                } else {
                    let mut detail = format!("{matched}/250 entries\n{}", diff.join("\n"));
                    if let Ok(alt) = render_table(side, bundle, Convention::Alternative) {
                        let alt_diff = diff_tables(&expected, &alt);
                        detail.push_str(&format!(
                            "\nunder the alternative convention: {} differing rows",
                            alt_diff.len() / 2
                        ));
                    }
                    rep.push(name, false, detail);
                }
            }
        }
    }
    rep
}

fn first_mismatch(
    bundle: &SeriesBundle,
    max_n: u64,
    lhs: impl Fn(u64) -> Q,
    rhs: impl Fn(u64) -> Q,
) -> Option<(u64, Q, Q)> {
    (1..=max_n.min(bundle.max_n)).map(|n| (n, lhs(n), rhs(n))).find(|(_, a, b)| a != b)
}

/// Pointwise consistency of every series: weighted = irreducible + reducible,
/// nonnegative, inside the mod-4 support, and between `count/3` and `count`.
pub fn verify_series_integrity(bundle: &SeriesBundle) -> Report {
    let mut rep = Report::new("integrity");
    let three = Q::from_integer(3);
    for s in bundle.iter() {
        let allowed = CoefficientSeries::support_residues(s.lattice, s.sign);
        let bad = (1..=bundle.max_n).find(|&n| {
            let (c, k) = (s.coeff(n), Q::from_integer(s.count(n) as i64));
            c != s.ird(n) + s.rd(n)
                || c < Q::zero()
                || (!c.is_zero() && !allowed.contains(&(n % 4)))
                || c > k
                || c * three < k
        });
        let name = format!("{}{}", s.lattice, s.sign);
        match bad {
            None => rep.push(name, true, format!("n <= {}", bundle.max_n)),
            Some(n) => rep.push(
                name,
                false,
                format!("n={n}: weighted {}, ird {}, rd {}, count {}", s.coeff(n), s.ird(n), s.rd(n), s.count(n)),
            ),
        }
    }
    rep
}

/// The six coefficient identities between `L1/L2`, `L7/L8`, `L9/L10`.
pub fn verify_relations(bundle: &SeriesBundle, max_n: u64) -> Report {
    let mut rep = Report::new("relations");
    let three = Q::from_integer(3);
    for (i, j) in [(1u8, 2u8), (7, 8), (9, 10)] {
        let cases: [(String, Box<dyn Fn(u64) -> Q>, Box<dyn Fn(u64) -> Q>); 2] = [
            (
                format!("xi-(L{i}) = xi+(L{j})"),
                Box::new(move |n| bundle.c(i, Sign::Neg, n)),
                Box::new(move |n| bundle.c(j, Sign::Pos, n)),
            ),
            (
                format!("3 xi+(L{i}) = xi-(L{j})"),
                Box::new(move |n| three * bundle.c(i, Sign::Pos, n)),
                Box::new(move |n| bundle.c(j, Sign::Neg, n)),
            ),
        ];
        for (name, lhs, rhs) in cases {
            let limit = max_n.min(bundle.max_n);
            match first_mismatch(bundle, max_n, lhs, rhs) {
                None => rep.push(name, limit >= max_n, format!("n <= {limit}")),
                Some((n, a, b)) => rep.push(name, false, format!("n={n}: lhs={a}, rhs={b}")),
            }
        }
    }
    rep
}

/// Witnesses that the `L3..L6` series satisfy no relation of the same shape.
pub fn verify_non_relation(bundle: &SeriesBundle) -> Report {
    let mut rep = Report::new("non-relation");
    let three = Q::from_integer(3);
    let at7 = (bundle.c(3, Sign::Neg, 7), bundle.c(4, Sign::Pos, 7));
    rep.push(
        "xi-(L3)(7) != xi+(L4)(7)",
        at7.0 == Q::one() && at7.1 == Q::zero(),
        format!("xi-(L3)(7)={}, xi+(L4)(7)={}", at7.0, at7.1),
    );
    for (i, j) in [(3u8, 4u8), (5, 6), (3, 6), (5, 4)] {
        let w1 = first_mismatch(bundle, bundle.max_n, |n| bundle.c(i, Sign::Neg, n), |n| {
            bundle.c(j, Sign::Pos, n)
        });
        let w2 = first_mismatch(bundle, bundle.max_n, |n| three * bundle.c(i, Sign::Pos, n), |n| {
            bundle.c(j, Sign::Neg, n)
        });
        for (name, w) in [
            (format!("xi-(L{i}) != xi+(L{j})"), w1),
            (format!("3 xi+(L{i}) != xi-(L{j})"), w2),
        ] {
            match w {
                Some((n, a, b)) => rep.push(name, true, format!("witness n={n}: {a} vs {b}")),
                None => rep.push(name, false, format!("no witness up to {}", bundle.max_n)),
            }
        }
    }
    rep
}

/// `Q = P/27` of `(a, 3b, 3c, d)` as a polynomial in `(a, b, c, d)`.
fn q_of_divided(a: i64, b: i64, c: i64, d: i64) -> i64 {
    3 * b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d + 18 * a * b * c * d - a * a * d * d
}

/// The four disjoint decompositions of `L7, L9` (by `P mod 8`) and `L8, L10`
/// (by `Q mod 8`), modulo 8 and on all lattice points of a box.
pub fn verify_decompositions(half_width: i64) -> Result<Report> {
    let mut rep = Report::new("decompositions");
    // (lattice, residue) for P (odd) or Q (even).
    let props = [(7u8, 1i64), (9, 5), (8, 7), (10, 3)];

    for (i, l) in props {
        let lattice = lat(i);
        let mut bad = None;
        let mut total = 0;
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    for d in 0..8 {
                        total += 1;
                        let (form, inv, double) = if lattice.is_odd() {
                            let f = CubicForm::new(a, b, c, d);
                            (f, f.discriminant()? as i64, [a, b, c, d].iter().all(|v| v % 2 == 0))
                        } else {
                            let f = CubicForm::new(a, 3 * b, 3 * c, d);
                            (f, q_of_divided(a, b, c, d), [a, b, c, d].iter().all(|v| v % 2 == 0))
                        };
                        let cong = inv.rem_euclid(8) == l;
                        let member = form.lattice_member(lattice);
                        if member != (double || cong) || (double && cong) {
                            bad.get_or_insert((a, b, c, d));
                        }
                    }
                }
            }
        }
        let name = format!("L{i} mod 8");
        match bad {
            None => rep.push(name, true, format!("{total} residue tuples")),
            Some(t) => rep.push(name, false, format!("counterexample {t:?}")),
        }
    }

    let b = half_width;
    for (i, l) in props {
        let lattice = lat(i);
        let step = if lattice.is_odd() { 1 } else { 3 };
        let (mut lhs, mut doubles, mut congs, mut overlap) = (0u64, 0u64, 0u64, 0u64);
        let mut bad = None;
        for x1 in -b..=b {
            for x2 in (-b..=b).filter(|v| v % step == 0) {
                for x3 in (-b..=b).filter(|v| v % step == 0) {
                    for x4 in -b..=b {
                        let f = CubicForm::new(x1, x2, x3, x4);
                        let member = f.lattice_member(lattice);
                        let double = if lattice.is_odd() {
                            [x1, x2, x3, x4].iter().all(|v| v % 2 == 0)
                        } else {
                            [x1, x2 / 3, x3 / 3, x4].iter().all(|v| v % 2 == 0)
                        };
                        let inv = if lattice.is_odd() { f.discriminant()? } else { f.q_discriminant()? };
                        let cong = inv.rem_euclid(8) == l as i128;
                        lhs += member as u64;
                        doubles += double as u64;
                        congs += cong as u64;
                        overlap += (double && cong) as u64;
                        if member != (double || cong) {
                            bad.get_or_insert(f);
                        }
                    }
                }
            }
        }
        let name = format!("L{i} box {b}");
        let ok = bad.is_none() && overlap == 0 && lhs == doubles + congs;
        let detail = match bad {
            None => format!("{lhs} points = {doubles} doubled + {congs} congruent, overlap {overlap}"),
            Some(f) => format!("counterexample {f}"),
        };
        rep.push(name, ok, detail);
    }
    Ok(rep)
}

/// Exact rank of integer rows by fraction-free elimination.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, piv);
        for r in rank + 1..rows.len() {
            for c in col + 1..ncols {
                let v = &rows[rank][col] * &rows[r][c] - &rows[r][col] * &rows[rank][c];
                rows[r][c] = v / &prev;
            }
            rows[r][col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of the coefficient vectors of `series` over `1..=max_n`.
pub fn span_rank_of(series: &[&CoefficientSeries], max_n: u64) -> usize {
    let rows = series
        .iter()
        .map(|s| {
            (1..=max_n)
                .map(|n| {
                    // Coefficients have denominator dividing 3.
                    let v = s.coeff(n) * Q::from_integer(3);
                    BigInt::from(v.to_integer())
                })
                .collect()
        })
        .collect();
    integer_rank(rows)
}

/// Rank of all twenty series on `n <= max_n`.
pub fn span_rank(bundle: &SeriesBundle, max_n: u64) -> Result<usize> {
    if max_n > bundle.max_n {
        return Err(Error::InvalidArgument(format!("series end at {}", bundle.max_n)));
    }
    let all: Vec<&CoefficientSeries> = bundle.iter().collect();
    Ok(span_rank_of(&all, max_n))
}

/// Coefficient of `sqrt(3) xi_+(L_i) + e xi_-(L_i)` at `n`, `e = +-1`.
pub fn lambda_coeff(bundle: &SeriesBundle, i: u8, e: Sign, n: u64) -> Qrt3 {
    let plus = Qrt3::sqrt3().scale(bundle.c(i, Sign::Pos, n));
    let minus = Qrt3::rational(bundle.c(i, Sign::Neg, n));
    match e {
        Sign::Pos => plus + minus,
        Sign::Neg => plus - minus,
    }
}

/// `c1 c15 != c3 c5` for all twenty combinations.
pub fn euler_product_check(bundle: &SeriesBundle) -> Report {
    let mut rep = Report::new("euler");
    for i in 1..=10u8 {
        for e in Sign::BOTH {
            let c = |n| lambda_coeff(bundle, i, e, n);
            let (l, r) = (c(1) * c(15), c(3) * c(5));
            rep.push(
                format!("L{i} {e}"),
                l != r && bundle.max_n >= 15,
                format!("c1*c15 = {l}, c3*c5 = {r}"),
            );
        }
    }
    rep
}

/// `Lambda(L_{i+1}) = +-sqrt(3) Lambda(L_i)` coefficientwise for `n <= max_n`.
pub fn lambda_coefficient_identity(bundle: &SeriesBundle, i: u8, max_n: u64) -> Report {
    let mut rep = Report::new("lambda");
    let limit = max_n.min(bundle.max_n);
    for e in Sign::BOTH {
        let factor = Qrt3::sqrt3().scale(Q::from_integer(e.as_i128() as i64));
        let bad = (1..=limit).find_map(|n| {
            let lhs = lambda_coeff(bundle, i + 1, e, n);
            let rhs = factor * lambda_coeff(bundle, i, e, n);
            (lhs != rhs).then_some((n, lhs, rhs))
        });
        let name = format!("L{} = {e}sqrt3 L{i} ({e})", i + 1);
        match bad {
            None => rep.push(name, limit >= max_n, format!("n <= {limit}")),
            Some((n, a, b)) => rep.push(name, false, format!("n={n}: {a} vs {b}")),
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rows(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn rank_small() {
        assert_eq!(integer_rank(rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]])), 2);
        assert_eq!(integer_rank(rows(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(integer_rank(rows(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]])), 3);
        assert_eq!(integer_rank(rows(&[&[0, 3, 1], &[0, 6, 2], &[5, 0, 0]])), 2);
    }

    #[test]
    fn column_labels() {
        let left = Side::Left.columns();
        assert_eq!(left[0], (lat(1), Sign::Neg));
        assert_eq!(left[1], (lat(2), Sign::Pos));
        let right = Side::Right.columns();
        assert_eq!(right[9], (lat(10), Sign::Neg));
        assert_eq!(Convention::Primary.factor(lat(2), Sign::Neg), 1);
        assert_eq!(Convention::Primary.factor(lat(2), Sign::Pos), 3);
        assert_eq!(Convention::Alternative.factor(lat(2), Sign::Pos), 1);
    }

    #[test]
    fn golden_row_indices() {
        let left = Side::Left.rows();
        let right = Side::Right.rows();
        assert_eq!(left.len(), 25);
        assert!(left.iter().all(|n| n % 4 == 0 || n % 4 == 3));
        assert!(right.iter().all(|n| n % 4 == 0 || n % 4 == 1));
        assert_eq!((left[0], left[24], right[0], right[24]), (3, 51, 1, 49));
        assert_eq!(Side::Left.golden().rows[0].1, [3, 3, 3, 1, 0, 1, 0, 0, 3, 3]);
        assert_eq!(Side::Right.golden().rows[0].1, [1, 1, 1, 0, 1, 1, 1, 1, 0, 0]);
        assert_eq!(Side::Right.golden().rows[24].1, [5, 5, 3, 0, 3, 5, 5, 5, 0, 0]);
    }
}
