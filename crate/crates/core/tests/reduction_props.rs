use cubic_zeta::enumerate::{build_catalog_inflated, ClassCatalog};
use cubic_zeta::oracle::orbit_bfs;
use cubic_zeta::qrt3::{Qrt3, Q};
use cubic_zeta::reduction::{
    canonical_reduce, default_stab_bound, is_canonical, reduced_stabilizer, stabilizer_order_with_bound,
};
use cubic_zeta::series::{CoefficientSeries, SeriesBundle};
use cubic_zeta::{CubicForm, Sign, UnimodularMatrix};
use num_traits::Zero;
use proptest::prelude::*;

fn nondegenerate(bound: i64) -> impl Strategy<Value = CubicForm> {
    prop::array::uniform4(-bound..=bound)
        .prop_map(CubicForm)
        .prop_filter("P != 0", |f| f.discriminant().unwrap() != 0)
}

fn sl2_word() -> impl Strategy<Value = UnimodularMatrix> {
    let gens = [UnimodularMatrix::u(1), UnimodularMatrix::u(-1), UnimodularMatrix::W];
    prop::collection::vec(0usize..3, 0..=10).prop_map(move |word| {
        word.into_iter().fold(UnimodularMatrix::IDENTITY, |g, i| g.mul(&gens[i]).unwrap())
    })
}

fn qrt3() -> impl Strategy<Value = Qrt3> {
    let q = (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Q::new(n, d));
    (q.clone(), q).prop_map(|(a, b)| Qrt3::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5_000))]

    #[test]
    fn canonical_form_is_an_orbit_invariant(f in nondegenerate(12), g in sl2_word()) {
        let c = canonical_reduce(&f).unwrap();
        prop_assert!(is_canonical(&c).unwrap());
        prop_assert_eq!(canonical_reduce(&f.act(&g).unwrap()).unwrap(), c);
    }

    #[test]
    fn exact_stabilizer_matches_search(f in nondegenerate(12)) {
        let c = canonical_reduce(&f).unwrap();
        let exact = reduced_stabilizer(&c).unwrap();
        prop_assert_eq!(exact, stabilizer_order_with_bound(&c, default_stab_bound(&c)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn canonical_form_lies_in_the_bfs_orbit(f in nondegenerate(5)) {
        let c = canonical_reduce(&f).unwrap();
        let cap = f.max_abs_coeff().max(c.max_abs_coeff()) as i64 * 4;
        prop_assert!(orbit_bfs(&f, cap).unwrap().contains(&c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20_000))]

    #[test]
    fn qrt3_ring_axioms(x in qrt3(), y in qrt3(), z in qrt3()) {
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!(x + y, y + x);
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x + Qrt3::zero(), x);
        prop_assert_eq!(x * Qrt3::one(), x);
        prop_assert!((x - x).is_zero());
        prop_assert_eq!(x + (-x), Qrt3::zero());
    }
}

#[test]
fn sqrt3_squares_to_three() {
    assert_eq!(Qrt3::sqrt3() * Qrt3::sqrt3(), Qrt3::rational(Q::from_integer(3)));
}

#[test]
fn inflated_bounds_give_the_same_catalog() {
    for sign in Sign::BOTH {
        let a = ClassCatalog::build(sign, 3000).unwrap();
        let b = build_catalog_inflated(sign, 3000, 1.5).unwrap();
        assert_eq!(a.entries, b.entries, "{sign}");
    }
}

#[test]
fn support_law_and_weights() {
    let max_n = 400;
    let bundle = SeriesBundle::build(max_n).unwrap();
    for s in bundle.iter() {
        let allowed = CoefficientSeries::support_residues(s.lattice, s.sign);
        for n in 1..=max_n {
            let c = s.coeff(n);
            assert!(c >= Q::zero());
            assert_eq!(c, s.ird(n) + s.rd(n), "{}{} n={n}", s.lattice, s.sign);
            if !allowed.contains(&(n % 4)) {
                assert!(c.is_zero(), "{}{} has support at n={n}", s.lattice, s.sign);
            }
            // Each class contributes 1 or 1/3.
            let k = Q::from_integer(s.count(n) as i64);
            assert!(c <= k && c * Q::from_integer(3) >= k);
        }
    }
}
