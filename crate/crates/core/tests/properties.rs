use p2q2::autom::{brute_aut, matrix_of, verify_aut_matrix, AutGroup, Automorphism, DEFAULT_BUDGET};
use p2q2::catalog::{admissible, build, GroupSpec};
use p2q2::gfp2::GfParams;
use p2q2::numtheory::{multiplicative_order, pow_mod, Modulus, UnitElement};
use proptest::prelude::*;

const SMALL: [(u64, u64); 4] = [(3, 2), (5, 2), (7, 2), (5, 3)];

fn small_spec() -> impl Strategy<Value = GroupSpec> {
    (15u32..=36, 0..SMALL.len()).prop_filter_map("inadmissible", |(t, i)| {
        let (p, q) = SMALL[i];
        if !admissible(t, p, q).ok()?.is_admissible() {
            return None;
        }
        GroupSpec::new(t, p, q).ok()
    })
}

fn naive_order(a: u64, m: u64) -> u64 {
    (1..=m).find(|&k| pow_mod(a, k, &Modulus::new(m).unwrap()) == 1).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn unit_orders_match_naive_search(m in 2u64..400, a in 1u64..400) {
        let modulus = Modulus::new(m).unwrap();
        if let Ok(u) = UnitElement::new(a % m, &modulus) {
            prop_assert_eq!(multiplicative_order(&u), naive_order(a % m, m));
        }
    }

    #[test]
    fn field_multiplication_is_associative_and_commutative(
        pi in 0usize..3, xs in proptest::array::uniform6(0u64..7)
    ) {
        let p = [3u64, 5, 7][pi];
        let f = GfParams::canonical(p).unwrap();
        let x = f.element(xs[0] % p, xs[1] % p);
        let y = f.element(xs[2] % p, xs[3] % p);
        let z = f.element(xs[4] % p, xs[5] % p);
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(x.mul(&y.add(&z).unwrap()).unwrap(), x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap());
    }

    #[test]
    fn groups_are_associative_with_inverses(spec in small_spec(), seed in any::<[usize; 3]>()) {
        let g = build(&spec).unwrap().group;
        prop_assert_eq!(g.order() as u64, spec.order());
        let [x, y, z] = seed.map(|s| s % g.order());
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.inv(x)), 0);
        prop_assert_eq!(g.pow(x, g.element_order(x)), 0);
    }

    #[test]
    fn automorphisms_preserve_orders_and_close(spec in small_spec(), pick in any::<[usize; 2]>()) {
        let b = build(&spec).unwrap();
        let g = &b.group;
        let aut = brute_aut(g, DEFAULT_BUDGET).unwrap();
        let [i, j] = pick.map(|k| k % aut.order());
        let (a1, a2) = (&aut.elements()[i], &aut.elements()[j]);
        let map = a1.full_map(g);
        for (x, &y) in map.iter().enumerate() {
            prop_assert_eq!(g.element_order(y as usize), g.element_order(x));
        }
        prop_assert!(aut.contains(&a1.compose(a2, g)));
        prop_assert!(aut.contains(&a1.inverse(g)));
        prop_assert!(a1.compose(&a1.inverse(g), g).is_identity(g));
        if b.k_count.is_some() {
            prop_assert!(verify_aut_matrix(&b, &matrix_of(&b, a1)).is_ok());
        }
    }

    #[test]
    fn spec_strings_round_trip(spec in small_spec()) {
        let text = spec.to_string();
        prop_assert_eq!(text.parse::<GroupSpec>().unwrap(), spec);
    }
}

#[test]
fn identity_matrix_is_valid() {
    for s in ["t22:p=5,q=2", "t33:p=5,q=2", "t36:p=5,q=3"] {
        let b = build(&s.parse().unwrap()).unwrap();
        let id = Automorphism::identity(&b.group);
        let m = matrix_of(&b, &id);
        assert!(m.gamma.iter().all(|&x| x == 0));
        assert!(verify_aut_matrix(&b, &m).is_ok());
    }
}

#[test]
fn closure_of_generating_set_recovers_group() {
    let g = build(&"t25:p=7,q=3".parse().unwrap()).unwrap().group;
    let aut = brute_aut(&g, DEFAULT_BUDGET).unwrap();
    let again = AutGroup::closure(&g, &aut.generating_set(&g));
    assert!(again.same_set(&aut));
    assert_eq!(aut.order(), 10584);
}
