use groupomega::group::conjugacy_class_count;
use groupomega::numeric::partition_count;
use groupomega::tpp_omega::{
    char_degrees, instance_from_json, instance_to_json, nec_tpp_check, omega_solve, packing_check,
    triple_products, verify_stpp, verify_tpp,
};
use groupomega::young::{shape_nec_tpp, triangle_shape};
use groupomega::{Budget, Element, Group, GroupSpec, StppInstance, TppInstance};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_subset(rng: &mut ChaCha8Rng, order: usize, max: usize) -> Vec<Element> {
    let mut all: Vec<usize> = (0..order).collect();
    all.shuffle(rng);
    let k = rng.gen_range(1..=max.min(order));
    let mut v: Vec<Element> = all[..k].iter().map(|&i| Element::new(i)).collect();
    v.sort();
    v
}

fn big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tpp_survives_shrinking(seed in any::<u64>(), which in 0usize..3) {
        let g = [Group::symmetric(4), Group::unitriangular(3, 3), Group::cyclic(12)][which].clone().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = TppInstance::new(
            random_subset(&mut rng, g.order(), 4),
            random_subset(&mut rng, g.order(), 4),
            random_subset(&mut rng, g.order(), 4),
        );
        if verify_tpp(&g, &inst, Budget::default()).unwrap().holds() {
            let mut smaller = inst.clone();
            let drop = rng.gen_range(0..3);
            let side = [&mut smaller.s, &mut smaller.t, &mut smaller.u][drop].len();
            if side > 1 {
                [&mut smaller.s, &mut smaller.t, &mut smaller.u][drop].pop();
            }
            prop_assert!(verify_tpp(&g, &smaller, Budget::default()).unwrap().holds());
        }
    }

    #[test]
    fn stpp_implies_packing(seed in any::<u64>()) {
        let g = Group::symmetric(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=3);
        let triples = (0..k)
            .map(|_| TppInstance::new(
                random_subset(&mut rng, 24, 3),
                random_subset(&mut rng, 24, 3),
                random_subset(&mut rng, 24, 3),
            ))
            .collect();
        let inst = StppInstance { triples };
        if verify_stpp(&g, &inst, Budget::default()).unwrap().holds() {
            prop_assert!(packing_check(g.order(), &inst).within_bound);
        }
    }

    #[test]
    fn omega_is_antitone_in_degrees(a in 1u64..6, b in 1u64..6, c in 1u64..6, extra in 1u64..4) {
        let products = big(&[a * b * c]);
        let order = a * b * c * 4;
        let base = big(&vec![1; order as usize]);
        let mut bigger = base.clone();
        bigger[0] = BigUint::from(extra + 1);
        let x = omega_solve(&products, &base).unwrap();
        let y = omega_solve(&products, &bigger).unwrap();
        if !x.infeasible && !y.infeasible {
            prop_assert!(y.omega_star >= x.omega_star - 1e-9);
        }
    }
}

#[test]
fn char_degree_counts_match_class_counts() {
    for spec in ["cyclic:6", "abelian:2,4", "sym:3", "sym:4", "sym:5", "ut:2,5", "product:sym:3|cyclic:2"] {
        let s = GroupSpec::parse(spec).unwrap();
        let d = char_degrees(&s).unwrap();
        let g = s.build().unwrap();
        assert_eq!(d.len(), conjugacy_class_count(&g), "{spec}");
        let sq: BigUint = d.iter().map(|x| x * x).sum();
        assert_eq!(sq, BigUint::from(g.order()), "{spec}");
    }
    for n in 1..=12 {
        assert_eq!(BigUint::from(char_degrees(&GroupSpec::Symmetric(n)).unwrap().len()), partition_count(n));
    }
}

#[test]
fn vacuous_triangles_give_no_bound() {
    for m in 2..=13 {
        let shape = triangle_shape(m).unwrap();
        let nec = shape_nec_tpp(&shape);
        if !nec.vacuous {
            continue;
        }
        let sizes = shape.line_partitions.clone().map(|p| groupomega::young::young_order(&p));
        let product = &sizes[0] * &sizes[1] * &sizes[2];
        if shape.n() <= 20 {
            let degrees = char_degrees(&GroupSpec::Symmetric(shape.n())).unwrap();
            let sol = omega_solve(&[product], &degrees).unwrap();
            assert_eq!(sol.omega_star, 3.0, "triangle {m}");
            assert!(!sol.gives_bound);
        }
    }
}

#[test]
fn nec_check_agrees_on_group_and_sizes() {
    let g = Group::symmetric(3).unwrap();
    let e = |i| Element::new(i);
    let inst = TppInstance::new(vec![e(0), e(1)], vec![e(0), e(2)], vec![e(0)]);
    let nec = nec_tpp_check(&g, &inst).unwrap();
    assert_eq!(nec.classes, BigUint::from(3u32));
}

#[test]
fn known_sizes_and_products() {
    assert_eq!(triple_products(&[(2, 3, 4), (1, 1, 1)]), big(&[24, 1]));
    let sol = omega_solve(&big(&[8]), &big(&[1, 1, 2])).unwrap();
    assert!(!sol.gives_bound);
}

#[test]
fn instance_json_round_trip() {
    let spec = GroupSpec::parse("sym:3").unwrap();
    let e = |i| Element::new(i);
    let inst = StppInstance {
        triples: vec![TppInstance::new(vec![e(0), e(1)], vec![e(0), e(2)], vec![e(0)])],
    };
    let (spec2, inst2) = instance_from_json(&instance_to_json(&spec, &inst)).unwrap();
    assert_eq!(spec2, spec);
    assert_eq!(inst2, inst);
}
