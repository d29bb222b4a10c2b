//! Property tests over randomized algebra inputs.

use proptest::prelude::*;

use tensym::group_ring::GroupRingElement;
use tensym::lr::lr_product;
use tensym::perm::Permutation;
use tensym::rational::{rat, Rational};
use tensym::rng::SplitMix64;
use tensym::tensor::{apply_operator, Tensor};
use tensym::young::Partition;

/// Deterministic random element of ℚ[S_degree] from one seed.
fn random_element(seed: u64, degree: usize) -> GroupRingElement {
    let mut g = SplitMix64::new(seed);
    let all = Permutation::all(degree);
    let mut e = GroupRingElement::zero(degree);
    let terms = 1 + g.next_below(4) as usize;
    for _ in 0..terms {
        let p = all[g.next_below(all.len() as u64) as usize].clone();
        let num = g.next_below(11) as i64 - 5;
        let den = 1 + g.next_below(4) as i64;
        e.add_term(p, rat(num, den));
    }
    e
}

fn random_tensor(seed: u64, order: usize, dim: usize) -> Tensor<Rational> {
    let mut g = SplitMix64::new(seed);
    Tensor::from_fn(order, dim, |_| g.small_rational())
}

fn small_partition(seed: u64, max_weight: usize) -> Partition {
    let mut g = SplitMix64::new(seed);
    let n = 1 + g.next_below(max_weight as u64) as usize;
    let all = Partition::all(n);
    all[g.next_below(all.len() as u64) as usize].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_multiplication_is_associative(sa in any::<u64>(), sb in any::<u64>(), sc in any::<u64>()) {
        let a = random_element(sa, 3);
        let b = random_element(sb, 3);
        let c = random_element(sc, 3);
        let left = a.ring_multiply(&b).unwrap().ring_multiply(&c).unwrap();
        let right = a.ring_multiply(&b.ring_multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn star_is_an_anti_homomorphism(sa in any::<u64>(), sb in any::<u64>()) {
        let a = random_element(sa, 4);
        let b = random_element(sb, 4);
        let lhs = a.ring_multiply(&b).unwrap().star();
        let rhs = b.star().ring_multiply(&a.star()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.star().star(), a);
    }

    #[test]
    fn action_composes_through_the_ring_product(sa in any::<u64>(), sb in any::<u64>(), st in any::<u64>()) {
        let a = random_element(sa, 3);
        let b = random_element(sb, 3);
        let t = random_tensor(st, 3, 3);
        let nested = apply_operator(&a, &apply_operator(&b, &t).unwrap()).unwrap();
        let fused = apply_operator(&a.ring_multiply(&b).unwrap(), &t).unwrap();
        prop_assert_eq!(nested, fused);
    }

    #[test]
    fn embedding_is_a_ring_homomorphism(sa in any::<u64>(), sb in any::<u64>(), offset in 0usize..=2) {
        let a = random_element(sa, 3);
        let b = random_element(sb, 3);
        let ab = a.ring_multiply(&b).unwrap();
        let ea = a.embed(6, offset).unwrap();
        let eb = b.embed(6, offset).unwrap();
        prop_assert_eq!(ea.ring_multiply(&eb).unwrap(), ab.embed(6, offset).unwrap());
    }

    #[test]
    fn lr_product_commutes(sa in any::<u64>(), sb in any::<u64>()) {
        let lambda = small_partition(sa, 3);
        let mu = small_partition(sb, 3);
        prop_assert_eq!(lr_product(&lambda, &mu), lr_product(&mu, &lambda));
    }

    #[test]
    fn group_ring_serialization_round_trips(sa in any::<u64>()) {
        let a = random_element(sa, 4);
        let json = serde_json::to_string(&a).unwrap();
        let back: GroupRingElement = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn sign_homomorphism_degree_5(sa in any::<u64>(), sb in any::<u64>()) {
        let all = Permutation::all(5);
        let p = &all[(sa % all.len() as u64) as usize];
        let q = &all[(sb % all.len() as u64) as usize];
        prop_assert_eq!(p.compose(q).unwrap().sign(), p.sign() * q.sign());
    }
}
