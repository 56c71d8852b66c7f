use groupomega::group_algebra::ideal_powers;
use groupomega::matchings::{pgroup_chain_border, Matching};
use groupomega::slice_bounds::ideal_bound;
use groupomega::tensor_rank::{
    diagonal_tensor, direct_sum, flat_rank_exact, matching_lower_bound, mult_tensor, restrict_tensor,
    slice_rank_exact, Axis,
};
use groupomega::linalg::matrix_rank;
use groupomega::{AnyMatching, Budget, Element, Group, GroupSpec, PrimeField, Tensor3};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// Group-algebra tensors small enough for the slice-rank oracle.
fn corpus() -> Vec<(&'static str, u64)> {
    vec![
        ("cyclic:1", 2),
        ("cyclic:2", 2),
        ("cyclic:2", 3),
        ("cyclic:3", 2),
        ("cyclic:3", 3),
        ("cyclic:4", 2),
        ("abelian:2,2", 2),
        ("cyclic:4", 3),
        ("abelian:2,2", 3),
    ]
}

fn best_matching(g: &Group, spec: &str, p: u64) -> AnyMatching {
    let order = g.order() as u64;
    let mut q = order;
    while q > 1 && q.is_multiple_of(p) {
        q /= p;
    }
    if order > 1 && q == 1 {
        AnyMatching::Border(pgroup_chain_border(g, p, Budget::default()).unwrap())
    } else if spec == "abelian:2,2" {
        let e = Element::new;
        AnyMatching::Plain(Matching::new(vec![e(0), e(2)], vec![e(0), e(1)], vec![e(0), e(3)]))
    } else {
        let id = vec![Element::IDENTITY];
        AnyMatching::Plain(Matching::new(id.clone(), id.clone(), id))
    }
}

#[test]
fn sandwich_and_flat_below_slice() {
    for (spec, p) in corpus() {
        let g = GroupSpec::parse(spec).unwrap().build().unwrap();
        let t = mult_tensor(&g, field(p));
        let lower = matching_lower_bound(&g, &best_matching(&g, spec, p), Budget::default()).unwrap();
        let exact = slice_rank_exact(&t).unwrap();
        assert!(exact.verify(&t), "{spec} over F_{p}");
        let upper = ideal_bound(&g, p).unwrap().ideal_exact;
        assert!(lower <= exact.value && exact.value <= upper, "{spec} F_{p}: {lower} {} {upper}", exact.value);
        let flat = flat_rank_exact(&t).unwrap();
        assert!(flat.verify(&t));
        assert!(flat.value <= exact.value, "{spec} over F_{p}");
    }
}

#[test]
fn coprime_characteristic_is_full() {
    for (spec, p) in [("cyclic:2", 3), ("cyclic:3", 2), ("cyclic:4", 3), ("abelian:2,2", 3)] {
        let g = GroupSpec::parse(spec).unwrap().build().unwrap();
        assert_eq!(slice_rank_exact(&mult_tensor(&g, field(p))).unwrap().value, g.order(), "{spec}");
    }
}

#[test]
fn diagonal_and_cyclic_flat_rank_full() {
    for p in [2, 3] {
        for m in 1..=4 {
            let d = diagonal_tensor(m, field(p));
            assert_eq!(flat_rank_exact(&d).unwrap().value, m);
            if p == 2 || m <= 3 {
                assert_eq!(slice_rank_exact(&d).unwrap().value, m);
            }
        }
    }
    for (m, p) in [(2, 2), (3, 3), (4, 2)] {
        let t = mult_tensor(&Group::cyclic(m).unwrap(), field(p));
        assert_eq!(flat_rank_exact(&t).unwrap().value, m);
    }
}

#[test]
fn subadditivity() {
    let f2 = field(2);
    let small: Vec<Tensor3> = vec![
        diagonal_tensor(1, f2),
        diagonal_tensor(2, f2),
        mult_tensor(&Group::cyclic(2).unwrap(), f2),
        mult_tensor(&Group::cyclic(3).unwrap(), f2),
    ];
    for t in &small {
        for u in &small {
            let sum = direct_sum(t, u).unwrap();
            let (a, b) = (flat_rank_exact(t).unwrap().value, flat_rank_exact(u).unwrap().value);
            let s = flat_rank_exact(&sum).unwrap().value;
            assert!(s <= a + b);
        }
    }
    let d = diagonal_tensor(2, f2);
    assert_eq!(flat_rank_exact(&direct_sum(&d, &d).unwrap()).unwrap().value, 4);
    let z2 = mult_tensor(&Group::cyclic(2).unwrap(), f2);
    assert_eq!(flat_rank_exact(&direct_sum(&z2, &z2).unwrap()).unwrap().value, 4);
}

#[test]
fn restriction_costs_at_most_the_dropped_count() {
    let t = mult_tensor(&Group::cyclic(3).unwrap(), field(2));
    let full = slice_rank_exact(&t).unwrap().value;
    for axis in [Axis::X, Axis::Y, Axis::Z] {
        for keep in [vec![0], vec![0, 1], vec![1, 2], vec![0, 2]] {
            let r = restrict_tensor(&t, axis, &keep).unwrap();
            let sub = slice_rank_exact(&r).unwrap().value;
            assert!(full <= sub + (3 - keep.len()));
        }
    }
}

#[test]
fn fibers_have_one_entry() {
    for spec in ["sym:3", "ut:3,2", "abelian:2,3"] {
        let g = GroupSpec::parse(spec).unwrap().build().unwrap();
        let t = mult_tensor(&g, field(5));
        let n = g.order();
        for x in 0..n {
            for y in 0..n {
                assert_eq!((0..n).filter(|&z| t.get(x, y, z) == 1).count(), 1);
            }
        }
    }
}

#[test]
fn ideal_chain_contains_products() {
    let g = Group::unitriangular(3, 2).unwrap();
    let chain = ideal_powers(&g, field(2));
    assert!(chain.nilpotent);
    for w in chain.powers.windows(2) {
        assert!(w[1].is_subspace_of(&w[0]));
    }
}

fn random_invertible(rng: &mut ChaCha8Rng, f: PrimeField, n: usize) -> Vec<Vec<u32>> {
    loop {
        let m: Vec<Vec<u32>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..f.p())).collect()).collect();
        let flat: Vec<u32> = m.iter().flatten().copied().collect();
        if matrix_rank(f, n, n, &flat) == n {
            return m;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn slice_rank_is_basis_invariant(seed in any::<u64>(), which in 0usize..4) {
        let f2 = field(2);
        let t = match which {
            0 => mult_tensor(&Group::cyclic(3).unwrap(), f2),
            1 => mult_tensor(&Group::abelian(&[2, 2]).unwrap(), f2),
            2 => diagonal_tensor(3, f2),
            _ => mult_tensor(&Group::cyclic(4).unwrap(), f2),
        };
        let (dx, dy, dz) = t.dims();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mx = random_invertible(&mut rng, f2, dx);
        let my = random_invertible(&mut rng, f2, dy);
        let mz = random_invertible(&mut rng, f2, dz);
        let u = t.transform(&mx, &my, &mz);
        prop_assert_eq!(slice_rank_exact(&u).unwrap().value, slice_rank_exact(&t).unwrap().value);
        prop_assert_eq!(flat_rank_exact(&u).unwrap().value, flat_rank_exact(&t).unwrap().value);
    }
}
