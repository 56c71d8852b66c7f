//! Multiplicative matchings and border multiplicative matchings.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{is_normal, quotient, Element, Group, QuotientData, Subgroup};
use crate::groupspec::GroupSpec;
use crate::tpp_omega::{StppInstance, TppInstance};
use crate::verdict::{Budget, Verdict};

/// `s_i t_j u_k = 1 ⟺ i = j = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub s: Vec<Element>,
    pub t: Vec<Element>,
    pub u: Vec<Element>,
}

/// A matching in `G × Z` whose weights also satisfy positivity:
/// `s_i t_j u_k = 1 ⇒ a_i + b_j + c_k ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderMatching {
    pub s: Vec<(Element, BigInt)>,
    pub t: Vec<(Element, BigInt)>,
    pub u: Vec<(Element, BigInt)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMatching {
    Plain(Matching),
    Border(BorderMatching),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingViolation {
    /// `s_i t_i u_i ≠ 1`, or its weight sum is nonzero.
    Diagonal { i: usize },
    /// `s_i t_j u_k = 1` (with zero weight sum) for indices not all equal.
    Cross { i: usize, j: usize, k: usize },
    /// `s_i t_j u_k = 1` with negative weight sum.
    Positivity { i: usize, j: usize, k: usize, weight: BigInt },
}

impl fmt::Display for MatchingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingViolation::Diagonal { i } => write!(f, "diagonal triple {i} does not multiply to 1"),
            MatchingViolation::Cross { i, j, k } => write!(f, "s_{i} t_{j} u_{k} = 1"),
            MatchingViolation::Positivity { i, j, k, weight } => {
                write!(f, "s_{i} t_{j} u_{k} = 1 with weight {weight}")
            }
        }
    }
}

fn check_lengths(n: [usize; 3], g: &Group, elems: impl IntoIterator<Item = Element>) -> Result<()> {
    if n[0] != n[1] || n[1] != n[2] {
        return Err(Error::Invalid(format!(
            "sequences have lengths {}, {}, {}",
            n[0], n[1], n[2]
        )));
    }
    if n[0] == 0 {
        return Err(Error::Invalid("matching must be nonempty".into()));
    }
    if let Some(e) = elems.into_iter().find(|e| e.index() >= g.order()) {
        return Err(Error::Invalid(format!("element {e} outside the group")));
    }
    Ok(())
}

/// Calls `hit(i, j, k)` for every `s_i t_j u_k = 1`, stopping at the first
/// `Some`.
fn scan_products<W>(
    g: &Group,
    s: &[Element],
    t: &[Element],
    u: &[Element],
    mut hit: impl FnMut(usize, usize, usize) -> Option<W>,
) -> Option<W> {
    let mut by_u: HashMap<Element, Vec<usize>> = HashMap::new();
    for (k, &x) in u.iter().enumerate() {
        by_u.entry(x).or_default().push(k);
    }
    for (i, &a) in s.iter().enumerate() {
        for (j, &b) in t.iter().enumerate() {
            let need = g.inv(g.mul(a, b));
            if let Some(ks) = by_u.get(&need) {
                for &k in ks {
                    if let Some(w) = hit(i, j, k) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

impl Matching {
    pub fn new(s: Vec<Element>, t: Vec<Element>, u: Vec<Element>) -> Matching {
        Matching { s, t, u }
    }

    pub fn cardinality(&self) -> usize {
        self.s.len()
    }

    pub fn verify(&self, g: &Group, budget: Budget) -> Result<Verdict<MatchingViolation>> {
        check_lengths(
            [self.s.len(), self.t.len(), self.u.len()],
            g,
            self.s.iter().chain(&self.t).chain(&self.u).copied(),
        )?;
        budget.charge((self.s.len() as u128).pow(3))?;
        let n = self.s.len();
        for i in 0..n {
            if !g.mul(g.mul(self.s[i], self.t[i]), self.u[i]).is_identity() {
                return Ok(Verdict::Fails(MatchingViolation::Diagonal { i }));
            }
        }
        let found = scan_products(g, &self.s, &self.t, &self.u, |i, j, k| {
            (!(i == j && j == k)).then_some(MatchingViolation::Cross { i, j, k })
        });
        Ok(found.map_or(Verdict::Holds, Verdict::Fails))
    }

    /// The same matching with all weights zero.
    pub fn to_border(&self) -> BorderMatching {
        let z = |v: &[Element]| v.iter().map(|&e| (e, BigInt::zero())).collect();
        BorderMatching { s: z(&self.s), t: z(&self.t), u: z(&self.u) }
    }

    /// Singleton triples `S_i = {1}`, `T_i = {t_i^-1}`, `U_i = {s_i}`.
    pub fn to_stpp(&self, g: &Group) -> StppInstance {
        StppInstance {
            triples: (0..self.cardinality())
                .map(|i| TppInstance::new(vec![Element::IDENTITY], vec![g.inv(self.t[i])], vec![self.s[i]]))
                .collect(),
        }
    }

    /// Inverse of [`Matching::to_stpp`] for any instance of singletons
    /// `{σ_i}, {τ_i}, {υ_i}`: `s_i = υ_i σ_i^-1`, `t_i = σ_i τ_i^-1`,
    /// `u_i = τ_i υ_i^-1`.
    pub fn from_stpp(g: &Group, inst: &StppInstance) -> Result<Matching> {
        let mut m = Matching::new(Vec::new(), Vec::new(), Vec::new());
        for (i, tr) in inst.triples.iter().enumerate() {
            let (&[sigma], &[tau], &[upsilon]) = (tr.s.as_slice(), tr.t.as_slice(), tr.u.as_slice()) else {
                return Err(Error::Invalid(format!("triple {i} is not a singleton triple")));
            };
            m.s.push(g.mul(upsilon, g.inv(sigma)));
            m.t.push(g.mul(sigma, g.inv(tau)));
            m.u.push(g.mul(tau, g.inv(upsilon)));
        }
        Ok(m)
    }
}

impl BorderMatching {
    pub fn cardinality(&self) -> usize {
        self.s.len()
    }

    fn elements(v: &[(Element, BigInt)]) -> Vec<Element> {
        v.iter().map(|(e, _)| *e).collect()
    }

    pub fn verify(&self, g: &Group, budget: Budget) -> Result<Verdict<MatchingViolation>> {
        let (s, t, u) = (Self::elements(&self.s), Self::elements(&self.t), Self::elements(&self.u));
        check_lengths([s.len(), t.len(), u.len()], g, s.iter().chain(&t).chain(&u).copied())?;
        budget.charge((s.len() as u128).pow(3))?;
        for i in 0..s.len() {
            if !g.mul(g.mul(s[i], t[i]), u[i]).is_identity() {
                return Ok(Verdict::Fails(MatchingViolation::Diagonal { i }));
            }
        }
        let found = scan_products(g, &s, &t, &u, |i, j, k| {
            let weight = &self.s[i].1 + &self.t[j].1 + &self.u[k].1;
            let diagonal = i == j && j == k;
            if weight.is_negative() {
                Some(MatchingViolation::Positivity { i, j, k, weight })
            } else if weight.is_zero() != diagonal {
                Some(if diagonal {
                    MatchingViolation::Diagonal { i }
                } else {
                    MatchingViolation::Cross { i, j, k }
                })
            } else {
                None
            }
        });
        Ok(found.map_or(Verdict::Holds, Verdict::Fails))
    }

    /// `min a + min b + min c`.
    pub fn min_weight_sum(&self) -> BigInt {
        let min = |v: &[(Element, BigInt)]| v.iter().map(|(_, w)| w.clone()).min().unwrap_or_default();
        min(&self.s) + min(&self.t) + min(&self.u)
    }
}

impl AnyMatching {
    pub fn cardinality(&self) -> usize {
        match self {
            AnyMatching::Plain(m) => m.cardinality(),
            AnyMatching::Border(m) => m.cardinality(),
        }
    }

    pub fn is_border(&self) -> bool {
        matches!(self, AnyMatching::Border(_))
    }

    pub fn verify(&self, g: &Group, budget: Budget) -> Result<Verdict<MatchingViolation>> {
        match self {
            AnyMatching::Plain(m) => m.verify(g, budget),
            AnyMatching::Border(m) => m.verify(g, budget),
        }
    }

    pub fn to_border(&self) -> BorderMatching {
        match self {
            AnyMatching::Plain(m) => m.to_border(),
            AnyMatching::Border(m) => m.clone(),
        }
    }

    /// JSON document `{"group", "border", "s", "t", "u"}` with
    /// `[element, weight]` pairs.
    pub fn to_json(&self, group: &GroupSpec) -> Value {
        let b = self.to_border();
        let side = |v: &[(Element, BigInt)]| -> Value {
            v.iter()
                .map(|(e, w)| {
                    let w = match w.to_i64() {
                        Some(x) => json!(x),
                        None => json!(w.to_string()),
                    };
                    json!([e.index(), w])
                })
                .collect()
        };
        json!({
            "group": group.to_string(),
            "border": self.is_border(),
            "s": side(&b.s),
            "t": side(&b.t),
            "u": side(&b.u),
        })
    }

    pub fn from_json(v: &Value) -> Result<(GroupSpec, AnyMatching)> {
        let bad = |m: &str| Error::Invalid(format!("matching file: {m}"));
        let group = v
            .get("group")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing \"group\""))?;
        let spec = GroupSpec::parse(group)?;
        let border = v.get("border").and_then(Value::as_bool).unwrap_or(false);
        let side = |key: &str| -> Result<Vec<(Element, BigInt)>> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| bad(&format!("missing \"{key}\"")))?;
            arr.iter()
                .map(|item| {
                    let (e, w) = match item {
                        Value::Number(_) => (item, None),
                        Value::Array(p) if p.len() == 2 => (&p[0], Some(&p[1])),
                        _ => return Err(bad("entries must be elements or [element, weight]")),
                    };
                    let e = e
                        .as_u64()
                        .and_then(|x| u32::try_from(x).ok())
                        .ok_or_else(|| bad("element indices must be nonnegative integers"))?;
                    let w = match w {
                        None => BigInt::zero(),
                        Some(Value::Number(n)) => n
                            .as_i64()
                            .map(BigInt::from)
                            .ok_or_else(|| bad("weights must be integers"))?,
                        Some(Value::String(s)) => s.parse().map_err(|_| bad("weights must be integers"))?,
                        Some(_) => return Err(bad("weights must be integers")),
                    };
                    Ok((Element::new(e as usize), w))
                })
                .collect()
        };
        let b = BorderMatching { s: side("s")?, t: side("t")?, u: side("u")? };
        let m = if border {
            AnyMatching::Border(b)
        } else {
            if b.s.iter().chain(&b.t).chain(&b.u).any(|(_, w)| !w.is_zero()) {
                return Err(bad("plain matchings carry no weights"));
            }
            AnyMatching::Plain(Matching {
                s: BorderMatching::elements(&b.s),
                t: BorderMatching::elements(&b.t),
                u: BorderMatching::elements(&b.u),
            })
        };
        Ok((spec, m))
    }
}

/// The border matching `x_i = (i, i^2)`, `y_j = (j, j^2)`,
/// `z_k = (-2k, -2k^2)` in `Z/m` for `i, j, k < ⌈m/2⌉`.
pub fn cyclic_border(m: usize) -> Result<BorderMatching> {
    if m == 0 {
        return Err(Error::Invalid("cyclic order must be positive".into()));
    }
    let n = m.div_ceil(2);
    let sq = |i: usize| BigInt::from(i) * BigInt::from(i);
    let el = |x: usize| Element::new(x % m);
    Ok(BorderMatching {
        s: (0..n).map(|i| (el(i), sq(i))).collect(),
        t: (0..n).map(|j| (el(j), sq(j))).collect(),
        u: (0..n).map(|k| (el((m - 2 * k % m) % m), -sq(k) * 2)).collect(),
    })
}

/// Combines a matching inside a normal subgroup `N` (given by elements of
/// `G`) with one in `G/N`.
///
/// With lifts `x̄, ȳ` of the quotient's `x, y` and `z̄ = (x̄ ȳ)^-1`, the new
/// triples are `s_i x̄_{i'}`, `x̄_{j'}^-1 t_j x̄_{j'} ȳ_{j'}` and
/// `(x̄ȳ)_{k'}^-1 u_k (x̄ȳ)_{k'} z̄_{k'}`, indexed by `i' |mN| + i`.
///
/// Border weights combine as `a_i + W α_{i'}` with
/// `W = max(1, 1 - (min a + min b + min c))`, so an off-diagonal quotient
/// term (weight at least 1) dominates any negative `N` weight.
pub fn extend_matching(
    g: &Group,
    q: &QuotientData,
    m_n: &AnyMatching,
    m_q: &AnyMatching,
    budget: Budget,
) -> Result<AnyMatching> {
    if !is_normal(g, &q.normal) {
        return Err(Error::Invalid("subgroup is not normal".into()));
    }
    let bn = m_n.to_border();
    for (e, _) in bn.s.iter().chain(&bn.t).chain(&bn.u) {
        if e.index() >= g.order() || !q.normal.contains(*e) {
            return Err(Error::Invalid(format!("element {e} is not in the normal subgroup")));
        }
    }
    if let Verdict::Fails(w) = m_n.verify(g, budget)? {
        return Err(Error::Invalid(format!("subgroup matching does not verify: {w}")));
    }
    if let Verdict::Fails(w) = m_q.verify(&q.quotient, budget)? {
        return Err(Error::Invalid(format!("quotient matching does not verify: {w}")));
    }
    let bq = m_q.to_border();
    let xbar: Vec<Element> = bq.s.iter().map(|(x, _)| q.lift(*x)).collect();
    let ybar: Vec<Element> = bq.t.iter().map(|(y, _)| q.lift(*y)).collect();
    let xy: Vec<Element> = xbar.iter().zip(&ybar).map(|(&x, &y)| g.mul(x, y)).collect();
    let zbar: Vec<Element> = xy.iter().map(|&p| g.inv(p)).collect();

    let scale = BigInt::one().max(BigInt::one() - bn.min_weight_sum());
    let combine = |outer: &[(Element, BigInt)], inner: &[(Element, BigInt)], f: &dyn Fn(usize, Element) -> Element| {
        let mut out = Vec::with_capacity(outer.len() * inner.len());
        for (ip, (_, alpha)) in outer.iter().enumerate() {
            for (e, a) in inner {
                out.push((f(ip, *e), a + &scale * alpha));
            }
        }
        out
    };
    let s = combine(&bq.s, &bn.s, &|ip, e| g.mul(e, xbar[ip]));
    let t = combine(&bq.t, &bn.t, &|jp, e| {
        g.mul(g.mul(g.inv(xbar[jp]), e), g.mul(xbar[jp], ybar[jp]))
    });
    let u = combine(&bq.u, &bn.u, &|kp, e| {
        g.mul(g.mul(g.mul(zbar[kp], e), xy[kp]), zbar[kp])
    });
    let out = BorderMatching { s, t, u };
    Ok(if m_n.is_border() || m_q.is_border() {
        AnyMatching::Border(out)
    } else {
        AnyMatching::Plain(Matching {
            s: BorderMatching::elements(&out.s),
            t: BorderMatching::elements(&out.t),
            u: BorderMatching::elements(&out.u),
        })
    })
}

/// A border matching of size `⌈p/2⌉^n` in a group of order `p^n`, built
/// along a central series with `Z/p` factors.
pub fn pgroup_chain_border(g: &Group, p: u64, budget: Budget) -> Result<BorderMatching> {
    if !crate::linalg::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut order = g.order();
    while order > 1 && (order as u64).is_multiple_of(p) {
        order /= p as usize;
    }
    if order != 1 {
        return Err(Error::NotPGroup { order: g.order(), p });
    }
    chain_rec(g, p as usize, budget)
}

fn chain_rec(g: &Group, p: usize, budget: Budget) -> Result<BorderMatching> {
    if g.order() == 1 {
        let one = vec![(Element::IDENTITY, BigInt::zero())];
        return Ok(BorderMatching { s: one.clone(), t: one.clone(), u: one });
    }
    let center = g.center();
    let z = center
        .elements()
        .iter()
        .copied()
        .find(|&e| g.element_order(e) == p)
        .expect("a nontrivial p-group has a central element of order p");
    let powers: Vec<Element> = (0..p as u64).map(|k| g.pow(z, k)).collect();
    let n = Subgroup::from_elements(g, &powers)?;
    let q = quotient(g, &n)?;
    let cyc = cyclic_border(p)?;
    let relabel = |v: Vec<(Element, BigInt)>| v.into_iter().map(|(e, w)| (powers[e.index()], w)).collect();
    let m_n = BorderMatching { s: relabel(cyc.s), t: relabel(cyc.t), u: relabel(cyc.u) };
    let m_q = chain_rec(&q.quotient, p, budget)?;
    match extend_matching(g, &q, &AnyMatching::Border(m_n), &AnyMatching::Border(m_q), budget)? {
        AnyMatching::Border(b) => Ok(b),
        AnyMatching::Plain(m) => Ok(m.to_border()),
    }
}
