use std::sync::OnceLock;

use proptest::prelude::*;
use weyl_alcove::characters::{compute_character, CharacterCache};
use weyl_alcove::closed_subsets::{closure, closure_of_indices, is_closed};
use weyl_alcove::cyclotomic::CyclotomicNumber;
use weyl_alcove::fusion::FusionRing;
use weyl_alcove::modular::{qdim, twist_exponent};
use weyl_alcove::{Rational, RootSystem, Weight};

fn ring(name: &str, k: u32) -> FusionRing {
    let rs = RootSystem::new(name.parse().unwrap()).unwrap();
    FusionRing::new(rs, k, CharacterCache::disabled()).unwrap()
}

fn rings() -> &'static [FusionRing] {
    static R: OnceLock<Vec<FusionRing>> = OnceLock::new();
    R.get_or_init(|| {
        vec![
            ring("A2", 5),
            ring("B3", 3),
            ring("C2", 4),
            ring("D5", 2),
            ring("G2", 4),
            ring("E6", 3),
        ]
    })
}

fn labels(rank: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(-4i32..=4, rank)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn to_dominant_preserves_norm_and_orbit(name in prop::sample::select(vec!["A3", "B3", "C3", "G2", "F4", "D4"]),
                                            seed in labels(4)) {
        let rs = RootSystem::new(name.parse().unwrap()).unwrap();
        let mu = Weight::new(seed[..rs.rank()].to_vec());
        let d = rs.to_dominant(&mu).unwrap();
        prop_assert!(d.dominant.is_dominant());
        prop_assert_eq!(rs.norm2(&d.dominant), rs.norm2(&mu));
        let mut found = false;
        rs.for_each_in_orbit(d.dominant.labels(), |w| found |= w == mu.labels());
        prop_assert!(found);
    }

    #[test]
    fn characters_are_weyl_invariant(name in prop::sample::select(vec!["A2", "B2", "G2", "A3"]),
                                     hw in prop::collection::vec(0i32..=2, 3),
                                     probe in labels(3)) {
        let rs = RootSystem::new(name.parse().unwrap()).unwrap();
        let r = rs.rank();
        let lambda = Weight::new(hw[..r].to_vec());
        let ch = compute_character(&rs, &lambda).unwrap();
        let mu = Weight::new(probe[..r].to_vec());
        for i in 0..r {
            let alpha = &rs.simple_roots()[i];
            let reflected = &mu - &(mu.labels()[i] * alpha);
            prop_assert_eq!(ch.multiplicity(&rs, &mu), ch.multiplicity(&rs, &reflected));
        }
        if !rs.in_root_lattice(&(&lambda - &mu)) {
            prop_assert_eq!(ch.multiplicity(&rs, &mu), 0);
        }
    }

    #[test]
    fn fusion_is_a_commutative_unital_ring(which in 0usize..6, a in any::<prop::sample::Index>(),
                                            b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let r = &rings()[which];
        let (a, b, c) = (a.index(r.len()), b.index(r.len()), c.index(r.len()));
        prop_assert_eq!(r.product(a, b).unwrap(), r.product(b, a).unwrap());
        prop_assert_eq!(r.coefficient(a, b, c).unwrap(), r.coefficient(a, r.dual(c), r.dual(b)).unwrap());
        prop_assert_eq!(r.coefficient(a, r.dual(a), 0).unwrap(), 1);
        let lhs = qdim(r, a) * qdim(r, b);
        let rhs: f64 = r.product(a, b).unwrap().iter().map(|&(e, m)| m as f64 * qdim(r, e)).sum();
        prop_assert!((lhs - rhs).abs() < 1e-9 * lhs.max(1.0));
    }

    #[test]
    fn simple_currents_shift_twists_consistently(which in 0usize..6, g in any::<prop::sample::Index>()) {
        let r = &rings()[which];
        let g = g.index(r.len());
        for z in r.simple_currents() {
            let image = r.simple_current_action(z, g).unwrap();
            prop_assert!((qdim(r, image) - qdim(r, g)).abs() < 1e-9);
            // the shift is twice a monodromy charge
            let delta = twist_exponent(r, image) - twist_exponent(r, g) - twist_exponent(r, z);
            let order = r.root_system().cartan_determinant();
            prop_assert!((delta * Rational::from_integer(order)).is_integer());
        }
    }

    #[test]
    fn closure_is_idempotent_and_monotone(which in 0usize..6,
                                           gens in prop::collection::vec(any::<prop::sample::Index>(), 0..3),
                                           extra in any::<prop::sample::Index>()) {
        let r = &rings()[which];
        let idx: Vec<usize> = gens.iter().map(|g| g.index(r.len())).collect();
        let c = closure_of_indices(r, &idx).unwrap();
        prop_assert!(is_closed(r, &c.members()).unwrap());
        prop_assert_eq!(&closure_of_indices(r, &c.members()).unwrap(), &c);
        let mut more = idx.clone();
        more.push(extra.index(r.len()));
        prop_assert!(c.is_subset(&closure_of_indices(r, &more).unwrap()));
        let ws: Vec<Weight> = idx.iter().map(|&i| r.weight(i).clone()).collect();
        prop_assert_eq!(closure(r, &ws).unwrap(), c);
    }

    #[test]
    fn cyclotomic_arithmetic_matches_complex(n in 1u64..40, xs in prop::collection::vec(-3i64..=3, 6),
                                             es in prop::collection::vec(0i64..80, 6)) {
        let term = |c: i64, e: i64| {
            let mut z = CyclotomicNumber::root_of_unity(n, e);
            z = &z * &CyclotomicNumber::from_integer(n, c);
            z
        };
        let a = &term(xs[0], es[0]) + &term(xs[1], es[1]);
        let b = &term(xs[2], es[2]) - &term(xs[3], es[3]);
        let c = &term(xs[4], es[4]) + &term(xs[5], es[5]);
        let left = &(&a + &b) * &c;
        let right = &(&a * &c) + &(&b * &c);
        prop_assert_eq!(&left, &right);
        let numeric = (a.to_complex() + b.to_complex()) * c.to_complex();
        prop_assert!((left.to_complex() - numeric).norm() < 1e-9);
        prop_assert_eq!((&left - &right).is_zero(), true);
        prop_assert_eq!(&left.conj().conj(), &left);
    }

    #[test]
    fn weight_text_round_trips(v in prop::collection::vec(-20i32..=20, 1..9)) {
        let w = Weight::new(v);
        let back: Weight = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }
}
