//! Slice-rank upper bounds for group multiplication tensors.
//!
//! Two routes are offered for a p-group: the analytic tail bound
//! `3|G| exp(-δ_G / 18)` driven by the p-degrees, and the exact optimum of
//! `codim I^a + codim I^b + dim I^{a+b}` over the powers of the augmentation
//! ideal. All δ arithmetic is exact; floating point only appears in the
//! reported tail bound and the synthetic trend scans.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{normality_witness, Group, Subgroup};
use crate::group_algebra::ideal_powers;
use crate::groupspec::GroupSpec;
use crate::jennings::{degree_stats, jennings_ideal_dims, p_degrees, p_power_exponent, PDegreeVector};
use crate::linalg::PrimeField;

#[derive(Clone, Debug, PartialEq)]
pub struct DeltaReport {
    pub delta_g: BigRational,
    pub delta_prime_g: BigRational,
    pub n: u64,
    pub ell: usize,
    pub s: u64,
}

/// `δ_G = (Σ j r_j)^2 / Σ j^2 r_j` and `δ'_G = δ_G / n`.
pub fn delta(r: &PDegreeVector) -> Result<DeltaReport> {
    let n = r.n();
    if n == 0 {
        return Err(Error::Invalid("δ needs a nonzero p-degree vector".into()));
    }
    let mut first = BigInt::zero();
    let mut second = BigInt::zero();
    for (idx, &rj) in r.r.iter().enumerate() {
        let j = BigInt::from(idx as u64 + 1);
        first += &j * rj;
        second += &j * &j * rj;
    }
    let delta_g = BigRational::new(&first * &first, second);
    let delta_prime_g = &delta_g / BigRational::from_integer(n.into());
    Ok(DeltaReport {
        delta_g,
        delta_prime_g,
        n,
        ell: r.length(),
        s: r.top_degree(),
    })
}

/// `3 |G| e^{-δ/18}`.
pub fn hoeffding_bound(order: &BigUint, delta: &BigRational) -> f64 {
    let order = order.to_f64().unwrap_or(f64::INFINITY);
    let d = delta.to_f64().unwrap_or(0.0);
    3.0 * order * (-d / 18.0).exp()
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub order: usize,
    pub p: u64,
    /// `dim I^k` for `k = 0, 1, ...` until zero or stable.
    pub ideal_dims: Vec<usize>,
    /// Minimum of `codim I^a + codim I^b + dim I^{a+b}`.
    pub ideal_exact: usize,
    pub argmin: (usize, usize),
    pub trivial: usize,
    /// Present when `G` is a p-group.
    pub p_degrees: Option<PDegreeVector>,
    pub delta: Option<DeltaReport>,
    pub hoeffding: Option<f64>,
}

/// Exact minimum of `codim I^a + codim I^b + dim I^{a+b}` over
/// `0 <= a <= b <= K`, where `K` is the chain length; ties go to the
/// lexicographically smallest `(a, b)`.
pub fn best_split(order: usize, dim: impl Fn(usize) -> usize, max_power: usize) -> (usize, (usize, usize)) {
    let mut best = (usize::MAX, (0, 0));
    for a in 0..=max_power {
        for b in a..=max_power {
            let v = (order - dim(a)) + (order - dim(b)) + dim(a + b);
            if v < best.0 {
                best = (v, (a, b));
            }
        }
    }
    best
}

/// The ideal bound computed from p-degrees alone, with `dim I^k` taken from
/// the Jennings monomial count. Returns the bound and its `(a, b)`.
pub fn degree_ideal_bound(r: &PDegreeVector) -> (BigUint, (usize, usize)) {
    let dims = jennings_ideal_dims(r);
    let order = &dims[0];
    let dim = |k: usize| dims.get(k).cloned().unwrap_or_default();
    let mut best: Option<(BigUint, (usize, usize))> = None;
    for a in 0..dims.len() {
        for b in a..dims.len() {
            let v = (order - dim(a)) + (order - dim(b)) + dim(a + b);
            if best.as_ref().is_none_or(|(bv, _)| &v < bv) {
                best = Some((v, (a, b)));
            }
        }
    }
    best.expect("dims is nonempty")
}

pub fn ideal_bound(g: &Group, p: u64) -> Result<BoundReport> {
    let field = PrimeField::new(p)?;
    let chain = ideal_powers(g, field);
    let dims = chain.dims();
    let (ideal_exact, argmin) = best_split(g.order(), |k| chain.dim(k), dims.len());
    let (p_degrees, delta_report, hoeffding) = if p_power_exponent(g.order(), p).is_some() && g.order() > 1 {
        let r = p_degrees(g, p)?;
        let d = delta(&r)?;
        let h = hoeffding_bound(&BigUint::from(g.order()), &d.delta_g);
        (Some(r), Some(d), Some(h))
    } else {
        (None, None, None)
    };
    Ok(BoundReport {
        order: g.order(),
        p,
        ideal_dims: dims,
        ideal_exact,
        argmin,
        trivial: g.order(),
        p_degrees,
        delta: delta_report,
        hoeffding,
    })
}

/// `|G/N| (codim I^a + codim I^b + dim I^{a+b})` with the ideals taken in
/// `F_p[N]`. With `split = None` the best `(a, b)` is used.
pub fn normal_extension_bound(
    g: &Group,
    n: &Subgroup,
    p: u64,
    split: Option<(usize, usize)>,
) -> Result<usize> {
    if let Some((x, y)) = normality_witness(g, n) {
        return Err(Error::NotNormal { g: x.index(), n: y.index() });
    }
    let field = PrimeField::new(p)?;
    let (ng, _) = g.induced(n);
    let chain = ideal_powers(&ng, field);
    let index = g.order() / ng.order();
    let inner = match split {
        Some((a, b)) => {
            let o = ng.order();
            (o - chain.dim(a)) + (o - chain.dim(b)) + chain.dim(a + b)
        }
        None => best_split(ng.order(), |k| chain.dim(k), chain.powers.len()).0,
    };
    Ok(index * inner)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowBound {
    pub p: u64,
    pub sylow_order: usize,
    pub sylow_bound: usize,
    /// `|G/P| * sylow_bound`.
    pub extended: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentBound {
    pub order: u128,
    pub bound: u128,
    pub prime: u64,
    pub per_prime: Vec<SylowBound>,
}

/// For each prime, the ideal bound of the Sylow subgroup times its index;
/// the minimum over primes (smallest prime on ties).
pub fn nilpotent_bound(spec: &GroupSpec) -> Result<NilpotentBound> {
    let factors = spec.sylow_factors()?;
    let order = spec.order();
    let mut primes: Vec<u64> = factors.iter().map(|(p, _)| *p).collect();
    primes.sort();
    primes.dedup();
    let mut per_prime = Vec::new();
    for &p in &primes {
        let mut sylow: Option<GroupSpec> = None;
        for (q, f) in &factors {
            if *q == p {
                sylow = Some(match sylow {
                    None => f.clone(),
                    Some(acc) => GroupSpec::Product(Box::new(acc), Box::new(f.clone())),
                });
            }
        }
        let sylow = sylow.expect("prime came from a factor").build()?;
        let report = ideal_bound(&sylow, p)?;
        let index = order / sylow.order() as u128;
        per_prime.push(SylowBound {
            p,
            sylow_order: sylow.order(),
            sylow_bound: report.ideal_exact,
            extended: (index * report.ideal_exact as u128) as usize,
        });
    }
    let (bound, prime) = per_prime
        .iter()
        .map(|s| (s.extended as u128, s.p))
        .min()
        .unwrap_or((order, 1));
    Ok(NilpotentBound { order, bound, prime, per_prime })
}

/// Which distributional hypotheses a p-degree vector satisfies for the
/// supplied constants, with the exact lower bounds on `δ_G` they imply.
#[derive(Clone, Debug)]
pub struct FamilyClassification {
    pub mean: BigRational,
    pub variance: BigRational,
    pub ell: usize,
    pub delta: DeltaReport,
    /// `Var(X_r) <= M`, with the implied bound `δ_G >= n/(1+M)`.
    pub bounded_variance: Option<HypothesisCheck>,
    /// `E(X_r) >= ℓ/c`, with the implied bound `δ_G >= n/c`.
    pub linear_expectation: Option<HypothesisCheck>,
    /// `ℓ <= L`, with the implied bound `δ_G >= n/L`.
    pub bounded_length: Option<HypothesisCheck>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HypothesisCheck {
    pub constant: BigRational,
    pub holds: bool,
    /// The lower bound on `δ_G` the hypothesis yields.
    pub delta_lower_bound: BigRational,
    /// Whether `δ_G` actually meets that lower bound.
    pub bound_met: bool,
}

impl FamilyClassification {
    /// True when at least one of the checked hypotheses holds.
    pub fn hypotheses_hold(&self) -> bool {
        [&self.bounded_variance, &self.linear_expectation, &self.bounded_length]
            .into_iter()
            .flatten()
            .any(|h| h.holds)
    }
}

pub fn classify_family(
    r: &PDegreeVector,
    max_variance: Option<BigRational>,
    expectation_constant: Option<BigRational>,
    max_length: Option<usize>,
) -> Result<FamilyClassification> {
    let (mean, variance) = degree_stats(r)?;
    let d = delta(r)?;
    let n = BigRational::from_integer(r.n().into());
    let ell = BigRational::from_integer(r.length().into());
    let one = BigRational::from_integer(1.into());
    let check = |constant: BigRational, holds: bool, lower: BigRational| HypothesisCheck {
        bound_met: d.delta_g >= lower,
        constant,
        holds,
        delta_lower_bound: lower,
    };
    let bounded_variance = max_variance.map(|m| {
        let holds = variance <= m;
        let lower = &n / (&one + &m);
        check(m, holds, lower)
    });
    let linear_expectation = expectation_constant.map(|c| {
        let holds = &mean * &c >= ell;
        let lower = &n / &c;
        check(c, holds, lower)
    });
    let bounded_length = max_length.map(|l| {
        let lr = BigRational::from_integer(l.into());
        let holds = r.length() <= l;
        let lower = &n / &lr;
        check(lr, holds, lower)
    });
    Ok(FamilyClassification {
        mean,
        variance,
        ell: r.length(),
        delta: d,
        bounded_variance,
        linear_expectation,
        bounded_length,
    })
}

/// `δ'` for the real weights `r_i = i^c`, `i = 1..=ℓ`.
pub fn synthetic_delta_prime(ell: u64, c: f64) -> f64 {
    let (mut s0, mut s1, mut s2) = (0.0f64, 0.0f64, 0.0f64);
    for i in 1..=ell {
        let x = i as f64;
        let r = x.powf(c);
        s0 += r;
        s1 += x * r;
        s2 += x * x * r;
    }
    s1 * s1 / (s2 * s0)
}

pub fn synthetic_delta_scan(ells: &[u64], c: f64) -> Vec<(u64, f64)> {
    ells.iter().map(|&l| (l, synthetic_delta_prime(l, c))).collect()
}

/// Predicted order of growth of `δ'` for `r_i ∝ i^c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ThetaClass {
    Constant,
    InverseLog,
    InversePower(f64),
    LogSquaredOverEll,
}

impl ThetaClass {
    pub fn for_exponent(c: f64) -> ThetaClass {
        if !(-3.0..=-1.0).contains(&c) {
            ThetaClass::Constant
        } else if c == -3.0 || c == -1.0 {
            ThetaClass::InverseLog
        } else if c == -2.0 {
            ThetaClass::LogSquaredOverEll
        } else if c < -2.0 {
            ThetaClass::InversePower(3.0 - c.abs())
        } else {
            ThetaClass::InversePower(c.abs() - 1.0)
        }
    }

    pub fn eval(self, ell: u64) -> f64 {
        let l = ell as f64;
        match self {
            ThetaClass::Constant => 1.0,
            ThetaClass::InverseLog => 1.0 / l.ln(),
            ThetaClass::InversePower(e) => l.powf(-e),
            ThetaClass::LogSquaredOverEll => l.ln().powi(2) / l,
        }
    }
}

impl std::fmt::Display for ThetaClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ThetaClass::Constant => write!(f, "Θ(1)"),
            ThetaClass::InverseLog => write!(f, "Θ(1/log ℓ)"),
            ThetaClass::InversePower(e) => write!(f, "Θ(1/ℓ^{e})"),
            ThetaClass::LogSquaredOverEll => write!(f, "Θ((log ℓ)^2/ℓ)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrendRow {
    pub ell: u64,
    pub delta_prime: f64,
    /// `δ'` divided by the predicted growth.
    pub normalized: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrendTable {
    pub c: f64,
    pub class: ThetaClass,
    pub rows: Vec<TrendRow>,
    /// `max / min` of the normalized column.
    pub band: f64,
}

pub fn delta_prime_trend(ells: &[u64], c: f64) -> TrendTable {
    let class = ThetaClass::for_exponent(c);
    let rows: Vec<TrendRow> = synthetic_delta_scan(ells, c)
        .into_iter()
        .map(|(ell, d)| TrendRow { ell, delta_prime: d, normalized: d / class.eval(ell) })
        .collect();
    let max = rows.iter().map(|r| r.normalized).fold(f64::NEG_INFINITY, f64::max);
    let min = rows.iter().map(|r| r.normalized).fold(f64::INFINITY, f64::min);
    TrendTable { c, class, rows, band: max / min }
}
