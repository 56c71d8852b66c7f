//! Exact linear algebra inside the group algebra `F_p[G]`.
//!
//! A vector of length `|G|` holds the coefficient of each group element.

use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::linalg::{PrimeField, Subspace};

/// Product of two group-algebra elements.
pub fn algebra_mul(g: &Group, field: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; g.order()];
    for (x, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (y, &cb) in b.iter().enumerate() {
            if cb == 0 {
                continue;
            }
            let z = g.mul(Element::new(x), Element::new(y)).index();
            out[z] = field.add(out[z], field.mul(ca, cb));
        }
    }
    out
}

/// `v * (s - 1)` for a group element `s`.
fn mul_by_augmentation_generator(g: &Group, field: PrimeField, v: &[u32], s: Element) -> Vec<u32> {
    let mut out = vec![0u32; v.len()];
    for (x, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let xs = g.mul(Element::new(x), s).index();
        out[xs] = field.add(out[xs], c);
        out[x] = field.sub(out[x], c);
    }
    out
}

/// The augmentation ideal: span of `g - 1` over all `g`.
pub fn augmentation_ideal(g: &Group, field: PrimeField) -> Subspace {
    let vectors = g.elements().skip(1).map(|e| {
        let mut v = vec![0u32; g.order()];
        v[e.index()] = 1;
        v[0] = field.neg(1);
        v
    });
    Subspace::span(field, g.order(), vectors.collect::<Vec<_>>())
}

/// Span of `a * b` over basis vectors `a` of `A` and `b` of `B`.
pub fn subspace_product(g: &Group, field: PrimeField, a: &Subspace, b: &Subspace) -> Subspace {
    let mut out = Subspace::zero(field, g.order());
    for x in a.basis() {
        for y in b.basis() {
            out.insert(&algebra_mul(g, field, x, y));
            if out.dim() == g.order() {
                return out;
            }
        }
    }
    out
}

/// The chain `F[G] = I^0 ⊇ I ⊇ I^2 ⊇ ...`, stopped at zero or at the first
/// repeat.
#[derive(Clone, Debug)]
pub struct IdealChain {
    pub powers: Vec<Subspace>,
    /// True when the chain reached the zero ideal.
    pub nilpotent: bool,
}

impl IdealChain {
    pub fn dims(&self) -> Vec<usize> {
        self.powers.iter().map(Subspace::dim).collect()
    }

    /// `dim I^k` for any `k`, extending the chain by its stable value.
    pub fn dim(&self, k: usize) -> usize {
        self.powers
            .get(k)
            .unwrap_or_else(|| self.powers.last().expect("chain has I^0"))
            .dim()
    }
}

/// Powers of the augmentation ideal, each computed from the previous one.
///
/// `I` is generated as a left ideal by `s - 1` for `s` in any generating set
/// of `G`, and `I^k` is a right ideal, so `I^{k+1}` is spanned by the
/// products `v (s - 1)` with `v` in a basis of `I^k`.
pub fn ideal_powers(g: &Group, field: PrimeField) -> IdealChain {
    let gens: Vec<Element> = if g.generators().is_empty() {
        g.elements().skip(1).collect()
    } else {
        g.generators().to_vec()
    };
    let mut powers = vec![Subspace::full(field, g.order()), augmentation_ideal(g, field)];
    loop {
        let last = powers.last().unwrap();
        if last.dim() == 0 {
            return IdealChain { powers, nilpotent: true };
        }
        let mut next = Subspace::zero(field, g.order());
        for v in last.basis() {
            for &s in &gens {
                next.insert(&mul_by_augmentation_generator(g, field, v, s));
            }
        }
        if next.dim() == last.dim() {
            return IdealChain { powers, nilpotent: false };
        }
        powers.push(next);
    }
}

/// `[dim I^0, dim I^1, ...]`, ending in 0 for nilpotent chains and at the
/// stable dimension otherwise.
pub fn ideal_power_dims(g: &Group, field: PrimeField) -> Vec<usize> {
    ideal_powers(g, field).dims()
}

/// `codim A + codim B + dim C`, an upper bound on the slice rank of the
/// multiplication tensor of the algebra, provided `A * B ⊆ C`.
pub fn triple_subspace_bound(
    g: &Group,
    field: PrimeField,
    a: &Subspace,
    b: &Subspace,
    c: &Subspace,
) -> Result<usize> {
    for x in a.basis() {
        for y in b.basis() {
            let prod = algebra_mul(g, field, x, y);
            if !c.contains(&prod) {
                return Err(Error::Containment { vector: prod });
            }
        }
    }
    Ok(a.codim() + b.codim() + c.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn augmentation_ideal_has_codim_one() {
        assert_eq!(augmentation_ideal(&Group::cyclic(1).unwrap(), f(2)).dim(), 0);
        assert_eq!(augmentation_ideal(&Group::cyclic(2).unwrap(), f(2)).dim(), 1);
        assert_eq!(augmentation_ideal(&Group::unitriangular(3, 2).unwrap(), f(2)).dim(), 7);
        assert_eq!(augmentation_ideal(&Group::symmetric(4).unwrap(), f(5)).dim(), 23);
    }

    #[test]
    fn products() {
        let z2 = Group::cyclic(2).unwrap();
        let i = augmentation_ideal(&z2, f(2));
        assert_eq!(subspace_product(&z2, f(2), &i, &i).dim(), 0);

        let v4 = Group::abelian(&[2, 2]).unwrap();
        let i = augmentation_ideal(&v4, f(2));
        assert_eq!(subspace_product(&v4, f(2), &i, &i).dim(), 1);
        let whole = Subspace::full(f(2), 4);
        assert_eq!(subspace_product(&v4, f(2), &whole, &i), i);
    }

    #[test]
    fn power_dims() {
        assert_eq!(ideal_power_dims(&Group::cyclic(4).unwrap(), f(2)), vec![4, 3, 2, 1, 0]);
        assert_eq!(ideal_power_dims(&Group::abelian(&[2, 2]).unwrap(), f(2)), vec![4, 3, 1, 0]);
        assert_eq!(
            ideal_power_dims(&Group::unitriangular(3, 2).unwrap(), f(2)),
            vec![8, 7, 5, 3, 1, 0]
        );
        assert_eq!(ideal_power_dims(&Group::cyclic(1).unwrap(), f(2)), vec![1, 0]);
    }

    #[test]
    fn coprime_characteristic_stabilises() {
        let chain = ideal_powers(&Group::cyclic(3).unwrap(), f(2));
        assert!(!chain.nilpotent);
        assert_eq!(chain.dims(), vec![3, 2]);
        assert_eq!(chain.dim(10), 2);
        // S3 over F_2: 2 divides |G| but S3 is not a 2-group
        let chain = ideal_powers(&Group::symmetric(3).unwrap(), f(2));
        assert!(!chain.nilpotent);
        assert_eq!(*chain.dims().last().unwrap(), 4);
    }

    #[test]
    fn chain_matches_naive_powers() {
        // I^k from all k-fold products of g - 1, for a small non-abelian group
        let g = Group::unitriangular(3, 2).unwrap();
        let field = f(2);
        let i = augmentation_ideal(&g, field);
        let chain = ideal_powers(&g, field);
        let mut power = i.clone();
        for k in 1..chain.powers.len() {
            assert_eq!(power, chain.powers[k], "I^{k}");
            power = subspace_product(&g, field, &power, &i);
        }
    }

    #[test]
    fn triple_bounds() {
        let field = f(2);
        let z4 = Group::cyclic(4).unwrap();
        let chain = ideal_powers(&z4, field);
        let full = Subspace::full(field, 4);
        assert_eq!(triple_subspace_bound(&z4, field, &full, &full, &full).unwrap(), 4);
        let (i1, i2) = (&chain.powers[1], &chain.powers[2]);
        assert_eq!(triple_subspace_bound(&z4, field, i1, i1, i2).unwrap(), 4);
        let v4 = Group::abelian(&[2, 2]).unwrap();
        let chain = ideal_powers(&v4, field);
        let (i1, i2) = (&chain.powers[1], &chain.powers[2]);
        assert_eq!(triple_subspace_bound(&v4, field, i1, i1, i2).unwrap(), 3);
        let err = triple_subspace_bound(&v4, field, i1, i1, &chain.powers[3]);
        assert!(matches!(err, Err(Error::Containment { .. })));
    }
}
