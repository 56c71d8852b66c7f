//! Young subgroups of `S_n` from line partitions of triangular and hexagonal
//! point arrays.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::numeric::{binomial, factorial, ln_big, partition_count};
use crate::tpp_omega::{nec_tpp_check_sizes, NecTppReport, TppInstance};

/// A partition of `{0, ..., n-1}` into nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<SetPartition> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::Invalid("empty block".into()));
            }
            for &x in block {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::Invalid(format!("point {x} out of range or repeated")));
                }
            }
        }
        if seen.iter().any(|&b| !b) {
            return Err(Error::Invalid("blocks do not cover every point".into()));
        }
        Ok(SetPartition { n, blocks })
    }

    pub fn singletons(n: usize) -> SetPartition {
        SetPartition { n, blocks: (0..n).map(|x| vec![x]).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block sizes in block order.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// `block_of[x]` is the index of the block containing `x`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                out[x] = b;
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeKind {
    Triangle(usize),
    Hexagon(usize),
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeKind::Triangle(m) => write!(f, "triangle:{m}"),
            ShapeKind::Hexagon(s) => write!(f, "hexagon:{s}"),
        }
    }
}

/// A planar point array with its three families of parallel lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeShape {
    pub kind: ShapeKind,
    pub points: Vec<(i64, i64)>,
    pub line_partitions: [SetPartition; 3],
}

impl LatticeShape {
    pub fn n(&self) -> usize {
        self.points.len()
    }

    fn from_points(kind: ShapeKind, points: Vec<(i64, i64)>, keys: [fn(i64, i64) -> i64; 3]) -> LatticeShape {
        let n = points.len();
        let partition = |key: fn(i64, i64) -> i64| {
            let mut lines: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
            for (idx, &(x, y)) in points.iter().enumerate() {
                lines.entry(key(x, y)).or_default().push(idx);
            }
            SetPartition { n, blocks: lines.into_values().collect() }
        };
        let line_partitions = [partition(keys[0]), partition(keys[1]), partition(keys[2])];
        LatticeShape { kind, points, line_partitions }
    }
}

/// Points `(i, j)` with `i, j ≥ 0`, `i + j < m`; lines `i`, `j` and `i + j`
/// constant.
pub fn triangle_shape(m: usize) -> Result<LatticeShape> {
    if m == 0 {
        return Err(Error::Invalid("side length must be positive".into()));
    }
    let m = m as i64;
    let points = (0..m).flat_map(|i| (0..m - i).map(move |j| (i, j))).collect();
    Ok(LatticeShape::from_points(
        ShapeKind::Triangle(m as usize),
        points,
        [|i, _| i, |_, j| j, |i, j| i + j],
    ))
}

/// Axial points `(x, y)` with `max(|x|, |y|, |x + y|) < s`; lines `x`, `y`
/// and `x + y` constant.
pub fn hexagon_shape(s: usize) -> Result<LatticeShape> {
    if s == 0 {
        return Err(Error::Invalid("side length must be positive".into()));
    }
    let r = s as i64 - 1;
    let points = (-r..=r)
        .flat_map(|x| (-r..=r).map(move |y| (x, y)))
        .filter(|&(x, y)| (x + y).abs() <= r)
        .collect();
    Ok(LatticeShape::from_points(
        ShapeKind::Hexagon(s),
        points,
        [|x, _| x, |_, y| y, |x, y| x + y],
    ))
}

/// `∏ |block|!`.
pub fn young_order(p: &SetPartition) -> BigUint {
    p.blocks.iter().map(|b| factorial(b.len() as u64)).product()
}

/// Whether every block of `p1` meets every block of `p2` in at most one
/// point, i.e. the two Young subgroups intersect trivially.
pub fn pairwise_trivial(p1: &SetPartition, p2: &SetPartition) -> Result<bool> {
    if p1.n != p2.n {
        return Err(Error::Invalid(format!("partitions of {} and {} points", p1.n, p2.n)));
    }
    let other = p2.block_of();
    for block in &p1.blocks {
        let mut hit = vec![false; p2.blocks.len()];
        for &x in block {
            if std::mem::replace(&mut hit[other[x]], true) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_triple(parts: &[SetPartition; 3]) -> Result<()> {
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        if !pairwise_trivial(&parts[a], &parts[b])? {
            return Err(Error::Invalid(format!(
                "Young subgroups {} and {} intersect nontrivially",
                a + 1,
                b + 1
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct YoungRatio {
    pub n: usize,
    pub orders: [BigUint; 3],
    /// `ln(n! / (|H_1||H_2||H_3|)^{2/3})`.
    pub log_ratio: f64,
}

impl YoungRatio {
    /// Exact test of `n! / (|H_1||H_2||H_3|)^{2/3} ≥ threshold`, comparing
    /// `(n!)^3 den^3 ≥ (∏|H_i|)^2 num^3`.
    pub fn at_least(&self, threshold: &BigRational) -> bool {
        if threshold <= &BigRational::from_integer(0.into()) {
            return true;
        }
        let num = threshold.numer().magnitude();
        let den = threshold.denom().magnitude();
        let prod: BigUint = self.orders.iter().product();
        factorial(self.n as u64).pow(3) * den.pow(3) >= prod.pow(2) * num.pow(3)
    }
}

pub fn young_ratio(parts: &[SetPartition; 3]) -> Result<YoungRatio> {
    let n = parts[0].n;
    if parts.iter().any(|p| p.n != n) {
        return Err(Error::Invalid("partitions of different sizes".into()));
    }
    check_triple(parts)?;
    let orders = [young_order(&parts[0]), young_order(&parts[1]), young_order(&parts[2])];
    let prod: BigUint = orders.iter().product();
    let log_ratio = ln_big(&factorial(n as u64)) - 2.0 / 3.0 * ln_big(&prod);
    Ok(YoungRatio { n, orders, log_ratio })
}

pub fn shape_ratio(shape: &LatticeShape) -> Result<YoungRatio> {
    young_ratio(&shape.line_partitions)
}

/// Ratio of the Young subgroup orders of two shapes (first direction).
pub fn subgroup_order_ratio(num: &LatticeShape, den: &LatticeShape) -> BigRational {
    BigRational::new(
        young_order(&num.line_partitions[0]).into(),
        young_order(&den.line_partitions[0]).into(),
    )
}

/// The nec-TPP test for a shape's three Young subgroups in `S_n`, using the
/// partition number as the class count.
pub fn shape_nec_tpp(shape: &LatticeShape) -> NecTppReport {
    let o = shape.line_partitions.clone().map(|p| young_order(&p));
    nec_tpp_check_sizes(
        &factorial(shape.n() as u64),
        [&o[0], &o[1], &o[2]],
        &partition_count(shape.n()),
    )
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub shape: ShapeKind,
    pub n: usize,
    pub log_ratio: f64,
    /// `c n - d sqrt(n) ln n`.
    pub threshold: f64,
    pub margin: f64,
    pub passes: bool,
}

/// Checks `ln ratio ≥ c n - d sqrt(n) ln n` on each shape.
pub fn theorem_young_scan(shapes: &[LatticeShape], c: f64, d: f64) -> Result<Vec<ScanRow>> {
    shapes
        .iter()
        .map(|shape| {
            let r = shape_ratio(shape)?;
            let n = r.n as f64;
            let threshold = c * n - d * n.sqrt() * n.ln();
            let margin = r.log_ratio - threshold;
            Ok(ScanRow {
                shape: shape.kind,
                n: r.n,
                log_ratio: r.log_ratio,
                threshold,
                margin,
                passes: margin >= 0.0,
            })
        })
        .collect()
}

/// `S_n × S_n` with three subgroups of order `n!` each: the ratio
/// `|G| / (|S||T||U|)^{2/3}` is exactly 1. Returns `(|G|^3, (|S||T||U|)^2)`.
pub fn product_group_witness(n: usize) -> (BigUint, BigUint) {
    let f = factorial(n as u64);
    let g = &f * &f;
    (g.pow(3), (&f * &f * &f).pow(2))
}

/// `C(n, t) ≥ (n/t)^t e^{t(1 - t/n)} / (e (n - t) t)`, decided on logarithms of
/// the exact binomial. Errors when the two sides are too close to separate.
pub fn binomial_bound_check(n: u64, t: u64) -> Result<bool> {
    if t == 0 || t >= n {
        return Err(Error::Invalid(format!("need 1 <= t < n, got n={n}, t={t}")));
    }
    let (nf, tf) = (n as f64, t as f64);
    let lhs = ln_big(&binomial(n, t));
    let rhs = -1.0 - ((nf - tf) * tf).ln() + tf * (nf / tf).ln() + tf * (1.0 - tf / nf);
    let tol = 1e-9 * lhs.abs().max(1.0);
    if (lhs - rhs).abs() <= tol {
        return Err(Error::Unsupported(format!(
            "C({n},{t}) and the bound agree to within {tol:e}"
        )));
    }
    Ok(lhs > rhs)
}

/// Elements of `S_n` (permutation backend) preserving every block.
pub fn young_subgroup_elements(g: &Group, p: &SetPartition) -> Result<Vec<Element>> {
    if g.degree() != Some(p.n) {
        return Err(Error::Invalid(format!("need the symmetric group on {} points", p.n)));
    }
    let block_of = p.block_of();
    Ok(g.elements()
        .filter(|&e| {
            let w = g.permutation(e).expect("permutation backend");
            w.iter().enumerate().all(|(i, &img)| block_of[img as usize] == block_of[i])
        })
        .collect())
}

/// The triangle's three Young subgroups as a TPP instance in `S_n`.
pub fn triangle_tpp_instance(m: usize) -> Result<(Group, TppInstance)> {
    let shape = triangle_shape(m)?;
    let g = Group::symmetric(shape.n())?;
    let [a, b, c] = &shape.line_partitions;
    let inst = TppInstance::new(
        young_subgroup_elements(&g, a)?,
        young_subgroup_elements(&g, b)?,
        young_subgroup_elements(&g, c)?,
    );
    Ok((g, inst))
}

/// The all-singletons triple: every Young subgroup is trivial and the ratio
/// is `n!`.
pub fn trivial_triple(n: usize) -> [SetPartition; 3] {
    [SetPartition::singletons(n), SetPartition::singletons(n), SetPartition::singletons(n)]
}

/// Parses a comma-separated list of `triangle:M`, `hexagon:S` or ranges
/// such as `triangle:2..13`.
pub fn parse_shapes(text: &str) -> Result<Vec<LatticeShape>> {
    let mut out = Vec::new();
    for item in text.split(',').filter(|s| !s.is_empty()) {
        let bad = || Error::Parse { pos: 0, msg: format!("bad shape `{item}`") };
        let (kind, range) = item.split_once(':').ok_or_else(bad)?;
        let (lo, hi) = match range.split_once("..") {
            Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
            None => {
                let v: usize = range.parse().map_err(|_| bad())?;
                (v, v)
            }
        };
        for k in lo..=hi {
            out.push(match kind {
                "triangle" => triangle_shape(k)?,
                "hexagon" => hexagon_shape(k)?,
                _ => return Err(bad()),
            });
        }
    }
    if out.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "no shapes given".into() });
    }
    Ok(out)
}
