//! The p-lower central (Jennings) series, p-degrees, and the monomial count
//! that gives `dim I^k` without any linear algebra.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{commutator_subgroup, is_normal, pth_power_subgroup, subgroup_closure, Group, Subgroup};
use crate::linalg::is_prime;

/// `Some(n)` when `order = p^n`.
pub fn p_power_exponent(order: usize, p: u64) -> Option<u32> {
    let mut m = order as u64;
    let mut n = 0;
    while m > 1 {
        if !m.is_multiple_of(p) {
            return None;
        }
        m /= p;
        n += 1;
    }
    Some(n)
}

/// `Γ_1 ⊇ Γ_2 ⊇ ... ⊇ Γ_{ℓ+1} = 1`.
#[derive(Clone, Debug)]
pub struct JenningsSeries {
    pub p: u64,
    /// `groups[i]` is `Γ_{i+1}`; the last entry is trivial.
    pub groups: Vec<Subgroup>,
}

impl JenningsSeries {
    pub fn length(&self) -> usize {
        self.groups.len() - 1
    }

    /// `Γ_i` for `i >= 1`; trivial beyond the end of the series.
    pub fn term(&self, i: usize) -> &Subgroup {
        assert!(i >= 1, "the series starts at Γ_1");
        self.groups.get(i - 1).unwrap_or_else(|| self.groups.last().unwrap())
    }

    /// Checks normality, nesting, `[Γ_i, Γ_j] ⊆ Γ_{i+j}` and
    /// `Γ_i^(p) ⊆ Γ_{ip}` for every in-range `i, j`.
    pub fn check_axioms(&self, g: &Group) -> Result<()> {
        let bad = |msg: String| Err(Error::Invalid(msg));
        let len = self.length();
        for i in 1..=len + 1 {
            let gi = self.term(i);
            if !is_normal(g, gi) {
                return bad(format!("Γ_{i} is not normal"));
            }
            if !self.term(i + 1).is_subset_of(gi) {
                return bad(format!("Γ_{} is not inside Γ_{i}", i + 1));
            }
            for j in 1..=len {
                if !commutator_subgroup(g, gi, self.term(j)).is_subset_of(self.term(i + j)) {
                    return bad(format!("[Γ_{i}, Γ_{j}] is not inside Γ_{}", i + j));
                }
            }
            let powers = pth_power_subgroup(g, gi, self.p);
            if !powers.is_subset_of(self.term(i * self.p as usize)) {
                return bad(format!("Γ_{i}^p is not inside Γ_{}", i * self.p as usize));
            }
        }
        Ok(())
    }
}

/// `Γ_1 = G`, `Γ_i = ⟨[G, Γ_{i-1}], Γ_{⌈i/p⌉}^p⟩`, until trivial.
pub fn p_lower_central_series(g: &Group, p: u64) -> Result<JenningsSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p_power_exponent(g.order(), p).is_none() {
        return Err(Error::NotPGroup { order: g.order(), p });
    }
    let whole = Subgroup::whole(g);
    let mut groups = vec![whole.clone()];
    while !groups.last().unwrap().is_trivial() {
        let i = groups.len() + 1;
        let prev = groups.last().unwrap();
        let comm = commutator_subgroup(g, &whole, prev);
        let src = &groups[i.div_ceil(p as usize) - 1];
        let pow = pth_power_subgroup(g, src, p);
        let mut gens: Vec<_> = comm.elements().to_vec();
        gens.extend_from_slice(pow.elements());
        groups.push(subgroup_closure(g, &gens));
    }
    Ok(JenningsSeries { p, groups })
}

/// `(r_1, ..., r_ℓ)` with `p^{r_j} = |Γ_j / Γ_{j+1}|`. Zero entries are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PDegreeVector {
    pub p: u64,
    pub r: Vec<u64>,
}

impl PDegreeVector {
    pub fn new(p: u64, mut r: Vec<u64>) -> Result<PDegreeVector> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        while r.last() == Some(&0) {
            r.pop();
        }
        Ok(PDegreeVector { p, r })
    }

    /// `n = Σ r_j`.
    pub fn n(&self) -> u64 {
        self.r.iter().sum()
    }

    /// `ℓ`, the index of the last nonzero entry.
    pub fn length(&self) -> usize {
        self.r.len()
    }

    /// `Σ j r_j`.
    pub fn weighted_sum(&self) -> u64 {
        self.r.iter().enumerate().map(|(i, &r)| (i as u64 + 1) * r).sum()
    }

    /// `s = (p - 1) Σ j r_j`, the top degree of a Jennings monomial.
    pub fn top_degree(&self) -> u64 {
        (self.p - 1) * self.weighted_sum()
    }

    /// `r ↦ α r`.
    pub fn scaled(&self, alpha: u64) -> PDegreeVector {
        PDegreeVector {
            p: self.p,
            r: self.r.iter().map(|&x| x * alpha).collect(),
        }
    }
}

impl fmt::Display for PDegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.r.iter().map(|x| x.to_string()).collect();
        write!(f, "{}: {}", self.p, parts.join(","))
    }
}

impl FromStr for PDegreeVector {
    type Err = Error;

    /// Parses `p: r_1,r_2,...` (zeros explicit, empty list allowed).
    fn from_str(s: &str) -> Result<Self> {
        let (p, rest) = s.split_once(':').ok_or(Error::Parse {
            pos: 0,
            msg: "expected `p: r_1,r_2,...`".into(),
        })?;
        let p: u64 = p.trim().parse().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("bad prime `{}`", p.trim()),
        })?;
        let mut r = Vec::new();
        let mut pos = p.to_string().len() + 1;
        if !rest.trim().is_empty() {
            for part in rest.split(',') {
                let v = part.trim().parse().map_err(|_| Error::Parse {
                    pos,
                    msg: format!("bad degree `{}`", part.trim()),
                })?;
                r.push(v);
                pos += part.len() + 1;
            }
        }
        PDegreeVector::new(p, r)
    }
}

pub fn p_degrees_of_series(series: &JenningsSeries) -> PDegreeVector {
    let r = series
        .groups
        .windows(2)
        .map(|w| {
            let ratio = w[0].len() / w[1].len();
            p_power_exponent(ratio, series.p).expect("quotients of a p-group are p-groups") as u64
        })
        .collect();
    PDegreeVector::new(series.p, r).expect("prime already checked")
}

pub fn p_degrees(g: &Group, p: u64) -> Result<PDegreeVector> {
    Ok(p_degrees_of_series(&p_lower_central_series(g, p)?))
}

/// Counts `c_d` of Jennings monomials of weighted degree `d`, for
/// `d = 0..=s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHistogram {
    pub counts: Vec<BigUint>,
}

impl DegreeHistogram {
    pub fn top_degree(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

/// Coefficients of `∏_j (1 + x^j + ... + x^{(p-1)j})^{r_j}`.
pub fn degree_histogram(r: &PDegreeVector) -> DegreeHistogram {
    let mut poly = vec![BigUint::one()];
    for (idx, &rj) in r.r.iter().enumerate() {
        let j = idx + 1;
        for _ in 0..rj {
            let mut next = vec![BigUint::zero(); poly.len() + (r.p as usize - 1) * j];
            for (d, c) in poly.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for e in 0..r.p as usize {
                    next[d + e * j] += c;
                }
            }
            poly = next;
        }
    }
    DegreeHistogram { counts: poly }
}

/// `dim I^k = Σ_{d ≥ k} c_d`, listed for `k = 0..=s+1`.
pub fn jennings_ideal_dims(r: &PDegreeVector) -> Vec<BigUint> {
    let hist = degree_histogram(r);
    let mut dims = vec![BigUint::zero(); hist.counts.len() + 1];
    for k in (0..hist.counts.len()).rev() {
        dims[k] = &dims[k + 1] + &hist.counts[k];
    }
    dims
}

/// Mean and variance of `X_r`, the distribution with `P(X = i) = r_i / n`.
pub fn degree_stats(r: &PDegreeVector) -> Result<(BigRational, BigRational)> {
    let n = r.n();
    if n == 0 {
        return Err(Error::Invalid("degree statistics need n > 0".into()));
    }
    let n = BigRational::from_integer(n.into());
    let mut mean = BigRational::zero();
    let mut second = BigRational::zero();
    for (idx, &ri) in r.r.iter().enumerate() {
        let i = BigRational::from_integer((idx as u64 + 1).into());
        let rho = BigRational::from_integer(ri.into()) / &n;
        mean += &i * &rho;
        second += &i * &i * &rho;
    }
    let var = second - &mean * &mean;
    Ok((mean, var))
}
