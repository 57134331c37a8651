use cubic_zeta::forms::{pairing, pairing_forms};
use cubic_zeta::lattice_class::{basis_member, lattice_basis};
use cubic_zeta::{CubicForm, LatticeId, UnimodularMatrix};
use num_rational::Ratio;
use proptest::prelude::*;

const CASES: u32 = 100_000;

fn lat(i: u8) -> LatticeId {
    LatticeId::new(i).unwrap()
}

fn form(bound: i64) -> impl Strategy<Value = CubicForm> {
    prop::array::uniform4(-bound..=bound).prop_map(CubicForm)
}

/// A word of length <= 6 in `u(1)`, `u(-1)`, `w`, optionally followed by the swap.
fn group_element() -> impl Strategy<Value = UnimodularMatrix> {
    let gens = [UnimodularMatrix::u(1), UnimodularMatrix::u(-1), UnimodularMatrix::W];
    (prop::collection::vec(0usize..3, 0..=6), any::<bool>()).prop_map(move |(word, swap)| {
        let mut g = UnimodularMatrix::IDENTITY;
        for i in word {
            g = g.mul(&gens[i]).unwrap();
        }
        if swap {
            g = g.mul(&UnimodularMatrix::SWAP).unwrap();
        }
        g
    })
}

fn combine(i: u8, c: [i64; 4]) -> [i64; 4] {
    let b = lattice_basis(lat(i));
    std::array::from_fn(|j| (0..4).map(|k| c[k] * b[k][j]).sum())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn discriminant_covariance(f in form(30), g in group_element()) {
        let h = f.act(&g).unwrap();
        let det = g.det() as i128;
        prop_assert_eq!(h.discriminant().unwrap(), det * det * f.discriminant().unwrap());
    }

    #[test]
    fn action_is_a_left_action(f in form(20), g in group_element(), h in group_element()) {
        let lhs = f.act(&h).unwrap().act(&g).unwrap();
        let rhs = f.act(&g.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_identity(f in form(1000)) {
        let [a, b, c, d] = f.0.map(|v| v as i128);
        let rhs = (b * c + a * d).pow(2) - 4 * f.delta().unwrap() + 16 * (a * b * c * d - 2 * a * a * d * d);
        prop_assert_eq!(f.discriminant().unwrap(), rhs);
    }

    #[test]
    fn lattices_are_invariant(f in form(30), g in group_element()) {
        let h = f.act(&g).unwrap();
        for l in LatticeId::all() {
            prop_assert_eq!(f.lattice_member(l), h.lattice_member(l), "{} {} -> {}", l, f, h);
        }
    }

    #[test]
    fn inclusion_diagram(f in form(50)) {
        let m = |i: u8| f.lattice_member(lat(i));
        if m(5) {
            prop_assert!(m(3) && m(7));
        }
        if m(9) {
            prop_assert!(m(3));
        }
        if m(3) || m(7) {
            prop_assert!(m(1));
        }
        let doubled = CubicForm(f.0.map(|v| 2 * v));
        prop_assert!(doubled.lattice_member(lat(5)) && doubled.lattice_member(lat(9)));
        for even in [2u8, 4, 6, 8, 10] {
            if m(even) {
                prop_assert!(m(2));
            }
        }
    }

    #[test]
    fn duality_pairing_is_integral(
        i in prop::sample::select(vec![3u8, 5, 7, 9]),
        c in prop::array::uniform4(-6i64..=6),
        e in prop::array::uniform4(-6i64..=6),
    ) {
        let (x, y) = (combine(i, c), combine(i + 1, e));
        let xr = x.map(|v| Ratio::from_integer(v as i128));
        let yr = y.map(|v| Ratio::new(v as i128, 2));
        prop_assert!(CubicForm(x).lattice_member(lat(i)));
        prop_assert!(pairing(&xr, &yr).is_integer(), "{:?} {:?}", x, y);
    }

    #[test]
    fn l1_l2_pairing_is_integral(x in form(50), c in prop::array::uniform4(-20i64..=20)) {
        prop_assert!(pairing_forms(&x, &CubicForm(combine(2, c))).is_integer());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn basis_membership_matches_congruences(v in prop::array::uniform4(-40i64..=40), i in 1u8..=10) {
        prop_assert_eq!(basis_member(lat(i), v), CubicForm(v).lattice_member(lat(i)));
    }
}
