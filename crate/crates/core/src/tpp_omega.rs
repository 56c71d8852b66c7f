//! Triple product property checks, packing bounds, and the ω inequality.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{conjugacy_class_count, Element, Group};
use crate::groupspec::GroupSpec;
use crate::numeric::{hook_length_degree, ln_big, partitions};
use crate::verdict::{Budget, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TppInstance {
    pub s: Vec<Element>,
    pub t: Vec<Element>,
    pub u: Vec<Element>,
}

impl TppInstance {
    pub fn new(s: Vec<Element>, t: Vec<Element>, u: Vec<Element>) -> TppInstance {
        TppInstance { s, t, u }
    }

    pub fn sizes(&self) -> (usize, usize, usize) {
        (self.s.len(), self.t.len(), self.u.len())
    }

    fn validate(&self, g: &Group) -> Result<()> {
        for set in [&self.s, &self.t, &self.u] {
            if set.is_empty() {
                return Err(Error::Invalid("TPP sets must be nonempty".into()));
            }
            if let Some(e) = set.iter().find(|e| e.index() >= g.order()) {
                return Err(Error::Invalid(format!("element {e} outside the group")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StppInstance {
    pub triples: Vec<TppInstance>,
}

/// `Q(S) = {x y^-1 : x, y ∈ S}`, sorted.
pub fn quotient_set(g: &Group, s: &[Element]) -> Vec<Element> {
    let mut seen = vec![false; g.order()];
    for &x in s {
        for &y in s {
            seen[g.mul(x, g.inv(y)).index()] = true;
        }
    }
    seen.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| Element::new(i))
        .collect()
}

/// A nontrivial solution of `s t u = 1` over the quotient sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TppViolation {
    pub s: Element,
    pub t: Element,
    pub u: Element,
}

impl fmt::Display for TppViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} t={} u={} multiply to 1", self.s, self.t, self.u)
    }
}

pub fn verify_tpp(g: &Group, inst: &TppInstance, budget: Budget) -> Result<Verdict<TppViolation>> {
    inst.validate(g)?;
    let qs = quotient_set(g, &inst.s);
    let qt = quotient_set(g, &inst.t);
    let qu = quotient_set(g, &inst.u);
    budget.charge(qs.len() as u128 * qt.len() as u128 * qu.len() as u128)?;
    let mut in_qu = vec![false; g.order()];
    for &u in &qu {
        in_qu[u.index()] = true;
    }
    for &s in &qs {
        for &t in &qt {
            let u = g.inv(g.mul(s, t));
            if in_qu[u.index()] && !(s.is_identity() && t.is_identity()) {
                return Ok(Verdict::Fails(TppViolation { s, t, u }));
            }
        }
    }
    Ok(Verdict::Holds)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StppViolation {
    /// Triple `index` fails the TPP on its own.
    Triple { index: usize, violation: TppViolation },
    /// `s^-1 s' t^-1 t' u^-1 u' = 1` with `(i, j, k)` not all equal, where
    /// `s ∈ S_i, s' ∈ S_j, t ∈ T_j, t' ∈ T_k, u ∈ U_k, u' ∈ U_i`.
    Cross {
        i: usize,
        j: usize,
        k: usize,
        elements: [Element; 6],
    },
}

impl fmt::Display for StppViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StppViolation::Triple { index, violation } => write!(f, "triple {index}: {violation}"),
            StppViolation::Cross { i, j, k, elements: e } => write!(
                f,
                "(i,j,k)=({i},{j},{k}): s={} s'={} t={} t'={} u={} u'={}",
                e[0], e[1], e[2], e[3], e[4], e[5]
            ),
        }
    }
}

/// `{a^-1 b : a ∈ A, b ∈ B}` with one witness pair per element.
fn left_quotients(g: &Group, a: &[Element], b: &[Element]) -> Vec<Option<(Element, Element)>> {
    let mut out = vec![None; g.order()];
    for &x in a {
        let xi = g.inv(x);
        for &y in b {
            let q = g.mul(xi, y);
            out[q.index()].get_or_insert((x, y));
        }
    }
    out
}

pub fn verify_stpp(g: &Group, inst: &StppInstance, budget: Budget) -> Result<Verdict<StppViolation>> {
    let k = inst.triples.len();
    if k == 0 {
        return Err(Error::Invalid("STPP needs at least one triple".into()));
    }
    for (index, triple) in inst.triples.iter().enumerate() {
        if let Verdict::Fails(violation) = verify_tpp(g, triple, budget)? {
            return Ok(Verdict::Fails(StppViolation::Triple { index, violation }));
        }
    }
    let sizes: Vec<(u128, u128, u128)> = inst
        .triples
        .iter()
        .map(|t| (t.s.len() as u128, t.t.len() as u128, t.u.len() as u128))
        .collect();
    let mut work: u128 = 0;
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                work += sizes[i].0 * sizes[j].0 * sizes[j].1 * sizes[l].1;
            }
        }
    }
    budget.charge(work)?;

    let pair = |sel: fn(&TppInstance) -> &Vec<Element>, a: usize, b: usize| {
        left_quotients(g, sel(&inst.triples[a]), sel(&inst.triples[b]))
    };
    let qs: Vec<Vec<_>> = (0..k).map(|i| (0..k).map(|j| pair(|t| &t.s, i, j)).collect()).collect();
    let qt: Vec<Vec<_>> = (0..k).map(|j| (0..k).map(|l| pair(|t| &t.t, j, l)).collect()).collect();
    let qu: Vec<Vec<_>> = (0..k).map(|l| (0..k).map(|i| pair(|t| &t.u, l, i)).collect()).collect();
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                if i == j && j == l {
                    continue;
                }
                for (a_idx, a) in qs[i][j].iter().enumerate() {
                    let Some((s, s2)) = a else { continue };
                    for (b_idx, b) in qt[j][l].iter().enumerate() {
                        let Some((t, t2)) = b else { continue };
                        let ab = g.mul(Element::new(a_idx), Element::new(b_idx));
                        if let Some((u, u2)) = qu[l][i][g.inv(ab).index()] {
                            return Ok(Verdict::Fails(StppViolation::Cross {
                                i,
                                j,
                                k: l,
                                elements: [*s, *s2, *t, *t2, u, u2],
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PackingReport {
    /// `(Σ |S_i||T_i|, Σ |T_i||U_i|, Σ |S_i||U_i|)`.
    pub sums: (u128, u128, u128),
    pub within_bound: bool,
    pub ratios: (BigRational, BigRational, BigRational),
}

pub fn packing_check(order: usize, inst: &StppInstance) -> PackingReport {
    let mut sums = (0u128, 0u128, 0u128);
    for t in &inst.triples {
        let (s, tt, u) = (t.s.len() as u128, t.t.len() as u128, t.u.len() as u128);
        sums.0 += s * tt;
        sums.1 += tt * u;
        sums.2 += s * u;
    }
    let o = order as u128;
    let ratio = |x: u128| BigRational::new(x.into(), o.into());
    PackingReport {
        sums,
        within_bound: sums.0 <= o && sums.1 <= o && sums.2 <= o,
        ratios: (ratio(sums.0), ratio(sums.1), ratio(sums.2)),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NecTppReport {
    /// `ln(|G| / (|S||T||U|)^{2/3})`.
    pub log_ratio: f64,
    pub classes: BigUint,
    /// True when `|G| / (|S||T||U|)^{2/3} >= #classes`, i.e. the instance
    /// cannot prove any bound below 3.
    pub vacuous: bool,
}

/// Exact comparison, cubing both sides: vacuous iff
/// `|G|^3 >= k^3 (|S||T||U|)^2`.
pub fn nec_tpp_check_sizes(order: &BigUint, sizes: [&BigUint; 3], classes: &BigUint) -> NecTppReport {
    let prod: BigUint = sizes.iter().copied().product();
    let lhs = order.pow(3);
    let rhs = classes.pow(3) * prod.pow(2);
    NecTppReport {
        log_ratio: ln_big(order) - 2.0 / 3.0 * ln_big(&prod),
        classes: classes.clone(),
        vacuous: lhs >= rhs,
    }
}

pub fn nec_tpp_check(g: &Group, inst: &TppInstance) -> Result<NecTppReport> {
    inst.validate(g)?;
    let classes = BigUint::from(conjugacy_class_count(g));
    let (s, t, u) = inst.sizes();
    let sizes = [BigUint::from(s), BigUint::from(t), BigUint::from(u)];
    Ok(nec_tpp_check_sizes(
        &BigUint::from(g.order()),
        [&sizes[0], &sizes[1], &sizes[2]],
        &classes,
    ))
}

/// Irreducible character degrees, validated against `Σ d^2 = |G|`.
pub fn char_degrees(spec: &GroupSpec) -> Result<Vec<BigUint>> {
    let degrees = raw_degrees(spec)?;
    validate_degrees(spec.order(), &degrees)?;
    Ok(degrees)
}

fn raw_degrees(spec: &GroupSpec) -> Result<Vec<BigUint>> {
    match spec {
        GroupSpec::Cyclic(_) | GroupSpec::Abelian(_) => {
            Ok(vec![BigUint::one(); spec.order() as usize])
        }
        GroupSpec::Unitriangular { m: 2, .. } => Ok(vec![BigUint::one(); spec.order() as usize]),
        GroupSpec::Symmetric(n) if *n <= 20 => {
            let mut d: Vec<BigUint> = partitions(*n).iter().map(|l| hook_length_degree(l)).collect();
            d.sort();
            Ok(d)
        }
        GroupSpec::Product(a, b) => {
            let (da, db) = (raw_degrees(a)?, raw_degrees(b)?);
            let mut d: Vec<BigUint> = da.iter().flat_map(|x| db.iter().map(move |y| x * y)).collect();
            d.sort();
            Ok(d)
        }
        other => Err(Error::Unsupported(format!(
            "no closed form for the character degrees of {other}; supply them explicitly"
        ))),
    }
}

pub fn validate_degrees(order: u128, degrees: &[BigUint]) -> Result<()> {
    if degrees.iter().any(Zero::is_zero) {
        return Err(Error::Invalid("character degrees must be positive".into()));
    }
    let sum: BigUint = degrees.iter().map(|d| d * d).sum();
    if sum != BigUint::from(order) {
        return Err(Error::Invalid(format!(
            "sum of squared degrees is {sum}, group order is {order}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct OmegaSolution {
    /// Smallest `ω ∈ [2, 3]` at which the inequality is violated; every
    /// valid exponent lies below it. Equals 3 when no bound follows.
    pub omega_star: f64,
    /// True when `omega_star < 3`.
    pub gives_bound: bool,
    /// Grid points (left ends of scan cells) where `f` changes sign.
    pub sign_changes: Vec<f64>,
    /// At most one sign change on the scan grid.
    pub monotone: bool,
    /// `f(2) > 0`: the instance violates the inequality at `ω = 2`, which no
    /// genuine (S)TPP can do (it would break the packing bound).
    pub infeasible: bool,
}

const SCAN_STEP: f64 = 1e-3;
const BISECTION_TOL: f64 = 1e-9;

/// Sign of `f(ω) = Σ (s_i t_i u_i)^{ω/3} - Σ d_i^ω`, evaluated in log space.
/// Values within a relative `1e-12` of zero count as zero.
fn omega_sign(log_sizes: &[f64], log_degrees: &[f64], omega: f64) -> i8 {
    let lse = |xs: &mut dyn Iterator<Item = f64>| -> f64 {
        let v: Vec<f64> = xs.collect();
        let m = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        m + v.iter().map(|x| (x - m).exp()).sum::<f64>().ln()
    };
    let lhs = lse(&mut log_sizes.iter().map(|l| omega * l / 3.0));
    let rhs = lse(&mut log_degrees.iter().map(|d| omega * d));
    let diff = lhs - rhs;
    if diff.abs() <= 1e-12 * lhs.abs().max(rhs.abs()).max(1.0) {
        0
    } else if diff > 0.0 {
        1
    } else {
        -1
    }
}

/// Solves the (S)TPP inequality for the exponent.
///
/// `products[i]` is `|S_i| |T_i| |U_i|`.
pub fn omega_solve(products: &[BigUint], degrees: &[BigUint]) -> Result<OmegaSolution> {
    if products.is_empty() || degrees.is_empty() {
        return Err(Error::Invalid("need at least one triple and one degree".into()));
    }
    if products.iter().chain(degrees).any(Zero::is_zero) {
        return Err(Error::Invalid("sizes and degrees must be positive".into()));
    }
    let ls: Vec<f64> = products.iter().map(ln_big).collect();
    let ld: Vec<f64> = degrees.iter().map(ln_big).collect();
    let sign = |w: f64| omega_sign(&ls, &ld, w);
    let steps = (1.0 / SCAN_STEP).round() as usize;
    let grid: Vec<f64> = (0..=steps).map(|k| 2.0 + k as f64 * SCAN_STEP).collect();
    let signs: Vec<i8> = grid.iter().map(|&w| sign(w)).collect();
    let positive = |s: i8| s > 0;
    let sign_changes: Vec<f64> = (1..grid.len())
        .filter(|&k| positive(signs[k]) != positive(signs[k - 1]))
        .map(|k| grid[k - 1])
        .collect();
    let monotone = sign_changes.len() <= 1;
    if positive(signs[0]) {
        return Ok(OmegaSolution {
            omega_star: 3.0,
            gives_bound: false,
            sign_changes,
            monotone,
            infeasible: true,
        });
    }
    let omega_star = match (1..grid.len()).find(|&k| positive(signs[k])) {
        None => 3.0,
        Some(k) => {
            let (mut lo, mut hi) = (grid[k - 1], grid[k]);
            while hi - lo > BISECTION_TOL {
                let mid = 0.5 * (lo + hi);
                if positive(sign(mid)) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            hi
        }
    };
    Ok(OmegaSolution {
        omega_star,
        gives_bound: omega_star < 3.0,
        sign_changes,
        monotone,
        infeasible: false,
    })
}

/// Convenience: products from `(|S|, |T|, |U|)` triples.
pub fn triple_products(sizes: &[(u64, u64, u64)]) -> Vec<BigUint> {
    sizes
        .iter()
        .map(|&(s, t, u)| BigUint::from(s) * t * u)
        .collect()
}

/// `ln` of the ratio `Σ products^{ω/3} / Σ d^ω` at a given `ω`, for reports.
pub fn omega_gap(products: &[BigUint], degrees: &[BigUint], omega: f64) -> f64 {
    let lhs: f64 = products.iter().map(|p| (omega / 3.0 * ln_big(p)).exp()).sum();
    let rhs: f64 = degrees.iter().map(|d| (omega * ln_big(d)).exp()).sum();
    lhs.ln() - rhs.ln()
}

/// Parses `{"group": "<groupspec>", "triples": [{"S": [..], "T": [..], "U": [..]}]}`.
pub fn instance_from_json(v: &serde_json::Value) -> Result<(GroupSpec, StppInstance)> {
    let bad = |m: String| Error::Invalid(format!("instance file: {m}"));
    let group = v
        .get("group")
        .and_then(|g| g.as_str())
        .ok_or_else(|| bad("missing \"group\"".into()))?;
    let spec = GroupSpec::parse(group)?;
    let triples = v
        .get("triples")
        .and_then(|t| t.as_array())
        .ok_or_else(|| bad("missing \"triples\"".into()))?;
    let set = |t: &serde_json::Value, key: &str| -> Result<Vec<Element>> {
        t.get(key)
            .and_then(|s| s.as_array())
            .ok_or_else(|| bad(format!("triple without \"{key}\"")))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .and_then(|i| u32::try_from(i).ok())
                    .map(|i| Element::new(i as usize))
                    .ok_or_else(|| bad(format!("bad element {x}")))
            })
            .collect()
    };
    let triples = triples
        .iter()
        .map(|t| Ok(TppInstance::new(set(t, "S")?, set(t, "T")?, set(t, "U")?)))
        .collect::<Result<Vec<_>>>()?;
    Ok((spec, StppInstance { triples }))
}

pub fn instance_to_json(spec: &GroupSpec, inst: &StppInstance) -> serde_json::Value {
    let idx = |v: &[Element]| v.iter().map(|e| e.index()).collect::<Vec<_>>();
    serde_json::json!({
        "group": spec.to_string(),
        "triples": inst.triples.iter().map(|t| serde_json::json!({
            "S": idx(&t.s), "T": idx(&t.t), "U": idx(&t.u),
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use crate::group::subgroup_closure;

    fn e(i: usize) -> Element {
        Element::new(i)
    }

    fn budget() -> Budget {
        Budget::default()
    }

    fn s3_transposition(g: &Group, i: usize, j: usize) -> Element {
        let mut w: Vec<u8> = (0..3).collect();
        w.swap(i, j);
        g.from_permutation(&w).unwrap()
    }

    #[test]
    fn quotient_sets() {
        let z4 = Group::cyclic(4).unwrap();
        assert_eq!(quotient_set(&z4, &[e(0), e(1)]), vec![e(0), e(1), e(3)]);
        assert_eq!(quotient_set(&z4, &[e(2)]), vec![e(0)]);
        let h = [e(0), e(2)];
        assert_eq!(quotient_set(&z4, &h), h.to_vec());
    }

    #[test]
    fn tpp_examples() {
        let s3 = Group::symmetric(3).unwrap();
        let singles = TppInstance::new(vec![e(3)], vec![e(1)], vec![e(5)]);
        assert!(verify_tpp(&s3, &singles, budget()).unwrap().holds());
        let all: Vec<Element> = s3.elements().collect();
        let full = TppInstance::new(all.clone(), all.clone(), all);
        assert!(!verify_tpp(&s3, &full, budget()).unwrap().holds());
        let sub = |i, j| subgroup_closure(&s3, &[s3_transposition(&s3, i, j)]).elements().to_vec();
        let tri = TppInstance::new(sub(0, 1), sub(1, 2), sub(0, 2));
        assert!(verify_tpp(&s3, &tri, budget()).unwrap().holds());
        let tiny = Budget::new(5);
        assert!(matches!(verify_tpp(&s3, &tri, tiny), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn stpp_examples() {
        let s3 = Group::symmetric(3).unwrap();
        let sub = |i, j| subgroup_closure(&s3, &[s3_transposition(&s3, i, j)]).elements().to_vec();
        let tri = TppInstance::new(sub(0, 1), sub(1, 2), sub(0, 2));
        let single = StppInstance { triples: vec![tri.clone()] };
        assert_eq!(
            verify_stpp(&s3, &single, budget()).unwrap().holds(),
            verify_tpp(&s3, &tri, budget()).unwrap().holds()
        );
        // two triples with S_1 = S_2 in Z/8: s = s' and t^-1 t' u^-1 u' = 1
        let z8 = Group::cyclic(8).unwrap();
        let a = TppInstance::new(vec![e(0), e(1)], vec![e(0)], vec![e(0)]);
        let b = TppInstance::new(vec![e(0), e(1)], vec![e(2)], vec![e(2)]);
        let inst = StppInstance { triples: vec![a, b] };
        match verify_stpp(&z8, &inst, budget()).unwrap() {
            Verdict::Fails(StppViolation::Cross { i, j, k, elements }) => {
                assert!(!(i == j && j == k));
                let [s, s2, t, t2, u, u2] = elements;
                let prod = [z8.inv(s), s2, z8.inv(t), t2, z8.inv(u), u2]
                    .into_iter()
                    .fold(Element::IDENTITY, |acc, x| z8.mul(acc, x));
                assert!(prod.is_identity());
            }
            other => panic!("expected a cross violation, got {other:?}"),
        }
    }

    #[test]
    fn packing() {
        let inst = StppInstance {
            triples: (0..3).map(|i| TppInstance::new(vec![e(i)], vec![e(0)], vec![e(0)])).collect(),
        };
        let r = packing_check(6, &inst);
        assert_eq!(r.sums, (3, 3, 3));
        assert!(r.within_bound);
        assert_eq!(r.ratios.0, BigRational::new(1.into(), 2.into()));
        let tri = StppInstance {
            triples: vec![TppInstance::new(vec![e(0), e(1)], vec![e(0), e(2)], vec![e(0), e(3)])],
        };
        assert_eq!(packing_check(6, &tri).sums.0, 4);
    }

    #[test]
    fn nec_tpp_examples() {
        let z2 = Group::cyclic(2).unwrap();
        let r = nec_tpp_check(&z2, &TppInstance::new(vec![e(0)], vec![e(1)], vec![e(0)])).unwrap();
        assert!(r.vacuous);
        assert!((r.log_ratio - 2f64.ln()).abs() < 1e-12);
        let s3 = Group::symmetric(3).unwrap();
        let r = nec_tpp_check(
            &s3,
            &TppInstance::new(vec![e(0), e(1)], vec![e(0), e(2)], vec![e(0), e(3)]),
        )
        .unwrap();
        assert!(!r.vacuous);
        assert!((r.log_ratio - 1.5f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn omega_examples() {
        // abelian, s t u = |G|: f(ω) = |G|^{ω/3} - |G| ≤ 0 on [2, 3]
        let ones = vec![BigUint::one(); 64];
        let sol = omega_solve(&[BigUint::from(64u32)], &ones).unwrap();
        assert_eq!(sol.omega_star, 3.0);
        assert!(!sol.gives_bound && !sol.infeasible);

        let s3 = char_degrees(&GroupSpec::Symmetric(3)).unwrap();
        let sol = omega_solve(&triple_products(&[(2, 2, 2)]), &s3).unwrap();
        assert_eq!(sol.omega_star, 3.0);
        assert!(!sol.gives_bound);

        let m = 5u32;
        let sol = omega_solve(&[BigUint::from(m * m * m)], &vec![BigUint::one(); m as usize]).unwrap();
        assert!(sol.infeasible);
        assert_eq!(sol.omega_star, 3.0);
    }

    #[test]
    fn omega_bisection() {
        // f(ω) = 4^ω - 2·3^ω vanishes at ω = ln 2 / ln(4/3) ≈ 2.409
        let sol = omega_solve(&[BigUint::from(64u32)], &[BigUint::from(3u32), BigUint::from(3u32)]).unwrap();
        let expected = 2f64.ln() / (4f64 / 3.0).ln();
        assert!((sol.omega_star - expected).abs() < 1e-8, "{}", sol.omega_star);
        assert!(sol.gives_bound && sol.monotone);
        assert_eq!(sol.sign_changes.len(), 1);
    }

    #[test]
    fn character_degrees() {
        assert_eq!(char_degrees(&GroupSpec::Cyclic(6)).unwrap(), vec![BigUint::one(); 6]);
        let s3: Vec<u64> = char_degrees(&GroupSpec::Symmetric(3))
            .unwrap()
            .iter()
            .map(|d| d.to_u64().unwrap())
            .collect();
        assert_eq!(s3, vec![1, 1, 2]);
        let s4: Vec<u64> = char_degrees(&GroupSpec::Symmetric(4))
            .unwrap()
            .iter()
            .map(|d| d.to_u64().unwrap())
            .collect();
        assert_eq!(s4, vec![1, 1, 2, 3, 3]);
        let prod = GroupSpec::parse("product:sym:3|cyclic:2").unwrap();
        assert_eq!(char_degrees(&prod).unwrap().len(), 6);
        assert!(char_degrees(&GroupSpec::Unitriangular { m: 3, p: 2 }).is_err());
        assert!(validate_degrees(8, &vec![BigUint::one(); 5]).is_err());
    }

    #[test]
    fn json_instances() {
        let spec = GroupSpec::Symmetric(3);
        let inst = StppInstance {
            triples: vec![TppInstance::new(vec![e(0), e(1)], vec![e(2)], vec![e(3), e(4)])],
        };
        let v = instance_to_json(&spec, &inst);
        assert_eq!(instance_from_json(&v).unwrap(), (spec, inst));
        let bad = serde_json::json!({"group": "sym:3", "triples": [{"S": [0], "T": [-1], "U": [0]}]});
        assert!(instance_from_json(&bad).is_err());
    }
}
