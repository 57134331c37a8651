//! Finite-level classification of the SL2(Z)-invariant lattices between
//! `6 L1` and `L1`, their indices and the duality under the alternating pairing.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::analytic::constants_ab;
use crate::error::{Error, Result};
use crate::forms::{pairing, CubicForm, LatticeId, UnimodularMatrix};
use crate::report::Report;

type R = Ratio<i128>;
type Vec4 = [i64; 4];

/// A subspace of `F_p^4` given by its reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ModpSubspace {
    pub p: i64,
    pub basis: Vec<Vec4>,
}

impl ModpSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `v` against the echelon basis; zero iff `v` lies in the span.
    fn residue(&self, v: Vec4) -> Vec4 {
        let p = self.p;
        let mut v = v.map(|x| x.rem_euclid(p));
        for row in &self.basis {
            let pivot = row.iter().position(|&x| x != 0).expect("echelon rows are nonzero");
            let k = v[pivot];
            for j in 0..4 {
                v[j] = (v[j] - k * row[j]).rem_euclid(p);
            }
        }
        v
    }

    pub fn contains(&self, v: Vec4) -> bool {
        self.residue(v) == [0; 4]
    }
}

/// Every subspace of `F_p^4`, ordered by dimension then basis.
pub fn all_subspaces(p: i64) -> Vec<ModpSubspace> {
    let mut out = Vec::new();
    for mask in 0u32..16 {
        let pivots: Vec<usize> = (0..4).filter(|j| mask & (1 << j) != 0).collect();
        // Free slots: columns right of the row's pivot that are not pivots themselves.
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &c)| ((c + 1)..4).filter(|j| !pivots.contains(j)).map(move |j| (r, j)))
            .collect();
        let combos = p.pow(free.len() as u32);
        for idx in 0..combos {
            let mut rows: Vec<Vec4> = pivots
                .iter()
                .map(|&c| {
                    let mut row = [0; 4];
                    row[c] = 1;
                    row
                })
                .collect();
            let mut r = idx;
            for &(row, col) in &free {
                rows[row][col] = r % p;
                r /= p;
            }
            out.push(ModpSubspace { p, basis: rows });
        }
    }
    out.sort_by(|a, b| (a.dim(), &a.basis).cmp(&(b.dim(), &b.basis)));
    out
}

fn generator_image(v: Vec4, g: &UnimodularMatrix) -> Vec4 {
    CubicForm(v).act(g).expect("small coefficients").0
}

/// Subspaces of `F_p^4` stable under the reductions of `u(1)` and `w`.
pub fn invariant_subspaces_mod_p(p: i64) -> Result<Vec<ModpSubspace>> {
    if ![2, 3, 5, 7].contains(&p) {
        return Err(Error::InvalidArgument(format!("p must be 2, 3, 5 or 7, got {p}")));
    }
    let gens = [UnimodularMatrix::u(1), UnimodularMatrix::W];
    Ok(all_subspaces(p)
        .into_iter()
        .filter(|s| s.basis.iter().all(|&v| gens.iter().all(|g| s.contains(generator_image(v, g)))))
        .collect())
}

fn residues(m: i64) -> impl Iterator<Item = Vec4> {
    (0..m.pow(4)).map(move |i| [i % m, (i / m) % m, (i / (m * m)) % m, i / (m * m * m)])
}

fn lat(i: u8) -> LatticeId {
    LatticeId::new(i).expect("index in range")
}

/// Name of the invariant lattice `{x : x mod p in S}` between `p L1` and `L1`.
fn identify(s: &ModpSubspace) -> Option<String> {
    let p = s.p;
    if s.dim() == 0 {
        return Some(format!("{p}L1"));
    }
    let candidates: &[u8] = match p {
        2 => &[1, 3, 5, 7, 9],
        3 => &[1, 2],
        _ => &[1],
    };
    candidates
        .iter()
        .find(|&&i| residues(p).all(|v| s.contains(v) == CubicForm(v).lattice_member(lat(i))))
        .map(|i| format!("L{i}"))
}

#[derive(Debug, Clone, Serialize)]
pub struct SubspaceEntry {
    pub dim: usize,
    pub basis: Vec<Vec4>,
    pub identified_as: Option<String>,
}

/// `{p, count, subspaces: [{dim, basis, identified_as}]}`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub p: i64,
    pub count: usize,
    pub subspaces: Vec<SubspaceEntry>,
}

pub fn classification_report(p: i64) -> Result<ClassificationReport> {
    let subspaces: Vec<SubspaceEntry> = invariant_subspaces_mod_p(p)?
        .into_iter()
        .map(|s| SubspaceEntry { dim: s.dim(), identified_as: identify(&s), basis: s.basis })
        .collect();
    Ok(ClassificationReport { p, count: subspaces.len(), subspaces })
}

/// Checks the counts mod 2, 3, 5, 7, identifies each subspace and combines
/// the primitive ones at 2 and 3 into the ten lattices.
pub fn verify_classification() -> Result<Report> {
    let mut rep = Report::new("classification");
    let expected = [(2, 6), (3, 3), (5, 2), (7, 2)];
    let mut spaces = Vec::new();
    for (p, n) in expected {
        let subs = invariant_subspaces_mod_p(p)?;
        let dims: Vec<usize> = subs.iter().map(|s| s.dim()).collect();
        rep.push(format!("mod {p} count"), subs.len() == n, format!("{} subspaces, dims {dims:?}", subs.len()));
        let names: Vec<Option<String>> = subs.iter().map(identify).collect();
        rep.push(
            format!("mod {p} identified"),
            names.iter().all(Option::is_some),
            names.iter().map(|n| n.clone().unwrap_or("?".into())).collect::<Vec<_>>().join(", "),
        );
        spaces.push(subs);
    }
    let v = CubicForm::new(0, 1, 1, 0);
    let line = spaces[0].iter().find(|s| s.dim() == 1);
    rep.push(
        "dim-1 space lifts into L5",
        line.is_some_and(|s| s.contains(v.0)) && v.lattice_member(lat(5)),
        "(0,1,1,0)",
    );
    // 6L1 <= L <= L1 corresponds to a pair (S2, S3); primitive means neither is zero.
    let mut found = Vec::new();
    for s2 in spaces[0].iter().filter(|s| s.dim() > 0) {
        for s3 in spaces[1].iter().filter(|s| s.dim() > 0) {
            let name = LatticeId::all().find(|&l| {
                residues(6).all(|v| (s2.contains(v) && s3.contains(v)) == CubicForm(v).lattice_member(l))
            });
            found.push(name);
        }
    }
    let mut ids: Vec<u8> = found.iter().flatten().map(|l| l.index()).collect();
    ids.sort_unstable();
    rep.push(
        "CRT gives L1..L10",
        found.len() == 10 && ids == (1..=10).collect::<Vec<u8>>(),
        format!("{ids:?}"),
    );
    Ok(rep)
}

/// Explicit Z-basis (rows) of `L_i`. The even lattices are images of odd ones
/// under `(a, b, c, d) -> (a, 3b, 3c, d)`: `L2, L4, L6, L8, L10` from
/// `L1, L5, L3, L9, L7`.
pub fn lattice_basis(lattice: LatticeId) -> [Vec4; 4] {
    let odd = match lattice.index() {
        2 => 1,
        4 => 5,
        6 => 3,
        8 => 9,
        10 => 7,
        i => i,
    };
    let basis = match odd {
        1 => [[1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 0]],
        3 => [[1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 1, 0], [0, 2, 0, 0]],
        5 => [[2, 0, 0, 0], [0, 0, 0, 2], [0, 1, 1, 0], [0, 2, 0, 0]],
        7 => [[1, 1, 0, 1], [1, 0, 1, 1], [2, 0, 0, 0], [0, 0, 0, 2]],
        9 => [[1, 1, 1, 0], [0, 1, 1, 1], [2, 0, 0, 0], [0, 2, 0, 0]],
        _ => unreachable!("odd index"),
    };
    if lattice.is_odd() {
        basis
    } else {
        basis.map(|[a, b, c, d]| [a, 3 * b, 3 * c, d])
    }
}

type Mat = [[R; 4]; 4];

fn to_mat(rows: &[Vec4; 4], scale: R) -> Mat {
    rows.map(|r| r.map(|x| R::from_integer(x as i128) * scale))
}

fn det(m: &Mat) -> R {
    let mut a = *m;
    let mut d = R::one();
    for c in 0..4 {
        let Some(piv) = (c..4).find(|&r| !a[r][c].is_zero()) else { return R::zero() };
        if piv != c {
            a.swap(piv, c);
            d = -d;
        }
        d *= a[c][c];
        for r in (c + 1)..4 {
            let k = a[r][c] / a[c][c];
            for j in c..4 {
                let t = a[c][j];
                a[r][j] -= k * t;
            }
        }
    }
    d
}

fn inverse(m: &Mat) -> Option<Mat> {
    let mut a = *m;
    let mut inv: Mat = std::array::from_fn(|i| std::array::from_fn(|j| if i == j { R::one() } else { R::zero() }));
    for c in 0..4 {
        let piv = (c..4).find(|&r| !a[r][c].is_zero())?;
        a.swap(piv, c);
        inv.swap(piv, c);
        let k = a[c][c];
        for j in 0..4 {
            a[c][j] /= k;
            inv[c][j] /= k;
        }
        for r in 0..4 {
            if r != c && !a[r][c].is_zero() {
                let k = a[r][c];
                for j in 0..4 {
                    let (t, u) = (a[c][j], inv[c][j]);
                    a[r][j] -= k * t;
                    inv[r][j] -= k * u;
                }
            }
        }
    }
    Some(inv)
}

/// Coordinates of `v` in the row basis `b`.
fn coords(b: &Mat, v: &[R; 4]) -> Option<[R; 4]> {
    let inv = inverse(b)?;
    // v = c B  =>  c = v B^{-1}
    Some(std::array::from_fn(|j| (0..4).fold(R::zero(), |acc, i| acc + v[i] * inv[i][j])))
}

/// True iff every row of `sub` is an integral combination of the rows of `sup`.
fn contained(sub: &Mat, sup: &Mat) -> bool {
    sub.iter().all(|v| coords(sup, v).is_some_and(|c| c.iter().all(|x| x.is_integer())))
}

/// `[sup : sub]`, or `None` unless `sub` is a full-rank sublattice of `sup`.
fn index(sup: &Mat, sub: &Mat) -> Option<i128> {
    if !contained(sub, sup) {
        return None;
    }
    let q = (det(sub) / det(sup)).abs();
    q.is_integer().then(|| q.to_integer()).filter(|&n| n > 0)
}

/// True iff `v` is an integral combination of the basis of `lattice`.
pub fn basis_member(lattice: LatticeId, v: Vec4) -> bool {
    let b = to_mat(&lattice_basis(lattice), R::one());
    let v = v.map(|x| R::from_integer(x as i128));
    coords(&b, &v).is_some_and(|c| c.iter().all(|x| x.is_integer()))
}

/// Basis of the dual `{y : <x, y> in Z for all x in L}` under the pairing.
fn dual_basis(b: &Mat) -> Option<Mat> {
    // Gram J with <x, y> = x J y^T; the dual basis D satisfies B J D^T = I.
    let unit = |i: usize| -> [R; 4] { std::array::from_fn(|j| if i == j { R::one() } else { R::zero() }) };
    let j: Mat = std::array::from_fn(|r| std::array::from_fn(|c| pairing(&unit(r), &unit(c))));
    let bj: Mat = std::array::from_fn(|r| std::array::from_fn(|c| (0..4).fold(R::zero(), |acc, k| acc + b[r][k] * j[k][c])));
    let inv = inverse(&bj)?;
    // D^T = (BJ)^{-1}, so D is its transpose.
    Some(std::array::from_fn(|r| std::array::from_fn(|c| inv[c][r])))
}

/// Indices along the inclusion diagram and duality of `L_i` with `L_{i+1} / 2`.
pub fn verify_indices_and_duality() -> Result<Report> {
    let mut rep = Report::new("indices");
    let m = |i: u8| to_mat(&lattice_basis(lat(i)), R::one());
    let two_l1 = to_mat(&lattice_basis(lat(1)), R::from_integer(2));
    for i in 1..=10u8 {
        let congruent = residues(6).all(|v| basis_member(lat(i), v) == CubicForm(v).lattice_member(lat(i)));
        rep.push(format!("L{i} basis matches congruences"), congruent, "residues mod 6");
    }
    let cases: [(&str, Option<i128>, i128); 10] = [
        ("[L1:L3]", index(&m(1), &m(3)), 2),
        ("[L3:L9]", index(&m(3), &m(9)), 2),
        ("[L7:L5]", index(&m(7), &m(5)), 2),
        ("[L5:2L1]", index(&m(5), &two_l1), 2),
        ("[L1:L7]", index(&m(1), &m(7)), 4),
        ("[L3:L5]", index(&m(3), &m(5)), 4),
        ("[L9:2L1]", index(&m(9), &two_l1), 4),
        ("[L1:L5]", index(&m(1), &m(5)), 8),
        ("[L1:L9]", index(&m(1), &m(9)), 4),
        ("[L1:2L1]", index(&m(1), &two_l1), 16),
    ];
    for (name, got, want) in cases {
        rep.push(name, got == Some(want), format!("{got:?}, expected {want}"));
    }
    let chain = index(&m(1), &m(9)).zip(index(&m(9), &two_l1)).map(|(a, b)| a * b);
    rep.push("[L1:L9][L9:2L1] = 16", chain == Some(16), format!("{chain:?}"));
    for i in [1u8, 3, 5, 7, 9] {
        let (_, b) = constants_ab(lat(i));
        let got = index(&m(1), &m(i));
        rep.push(format!("[L1:L{i}] = 2^b"), got == Some(1 << b), format!("{got:?}, b = {b}"));
    }
    // L1 and L2 are mutually dual; L_i and L_{i+1}/2 for i = 3, 5, 7, 9.
    let mut pairs = vec![(1u8, 2u8, R::one())];
    pairs.extend([3u8, 5, 7, 9].map(|i| (i, i + 1, R::new(1, 2))));
    for (i, k, scale) in pairs {
        let b = m(i);
        let other = to_mat(&lattice_basis(lat(k)), scale);
        let integral = b.iter().all(|x| other.iter().all(|y| pairing(x, y).is_integer()));
        let maximal = dual_basis(&b).is_some_and(|d| contained(&other, &d) && det(&d).abs() == det(&other).abs());
        let label = if scale.is_one() { format!("L{k}") } else { format!("L{k}/2") };
        rep.push(
            format!("dual(L{i}) = {label}"),
            integral && maximal,
            format!("pairing integral: {integral}, equal covolume: {maximal}"),
        );
    }
    let x = [0, 1, 1, 0].map(R::from_integer);
    let y = [0, 3, 3, 0].map(|v| R::new(v, 2));
    let v = pairing(&x, &y);
    rep.push("<(0,1,1,0), (0,3,3,0)/2>", v.is_integer(), format!("{v}"));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts() {
        assert_eq!(all_subspaces(2).len(), 67);
        // Gaussian binomials at q = 3: 1 + 40 + 130 + 40 + 1.
        assert_eq!(all_subspaces(3).len(), 212);
        let counts: Vec<usize> = [2, 3, 5, 7].iter().map(|&p| invariant_subspaces_mod_p(p).unwrap().len()).collect();
        assert_eq!(counts, vec![6, 3, 2, 2]);
        assert!(invariant_subspaces_mod_p(11).is_err());
    }

    #[test]
    fn mod3_middle_space() {
        let subs = invariant_subspaces_mod_p(3).unwrap();
        assert_eq!(subs[1].basis, vec![[1, 0, 0, 0], [0, 0, 0, 1]]);
        assert_eq!(identify(&subs[1]).as_deref(), Some("L2"));
    }

    #[test]
    fn mod2_identification() {
        let subs = invariant_subspaces_mod_p(2).unwrap();
        let names: Vec<String> = subs.iter().map(|s| identify(s).unwrap()).collect();
        assert_eq!(names, vec!["2L1", "L5", "L9", "L7", "L3", "L1"]);
        assert!(subs[2].contains([1, 1, 1, 0]) && !subs[2].contains([1, 1, 0, 1]));
        assert!(subs[3].contains([1, 1, 0, 1]) && !subs[3].contains([1, 1, 1, 0]));
    }

    #[test]
    fn reports_pass() {
        let c = verify_classification().unwrap();
        assert!(c.passed(), "{c}");
        let d = verify_indices_and_duality().unwrap();
        assert!(d.passed(), "{d}");
    }

    #[test]
    fn json_shape() {
        let r = classification_report(3).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["count"], 3);
        assert_eq!(v["subspaces"][1]["dim"], 2);
        assert_eq!(v["subspaces"][1]["identified_as"], "L2");
    }
}
