//! Dense 3-tensors over small prime fields with exact slice-rank and
//! flat-rank oracles.
//!
//! Slice rank is computed through the vanishing-subspace characterization:
//!
//! ```text
//! slicerank(T) = min { codim A + codim B + codim C : T(A, B, C) = 0 }
//! ```
//!
//! (<=) Given such a triple, change bases so that `A`, `B`, `C` are spanned
//! by coordinate vectors; `T` is then supported on tuples that use at least
//! one of the `codim A + codim B + codim C` complementary coordinates, and
//! grouping the terms by the first such coordinate is a slice decomposition.
//! (>=) Given a decomposition `Σ f_i(x) g_i(y, z) + ...`, intersect the
//! kernels of the `f_i` on the first axis (and likewise on the others); `T`
//! vanishes on the resulting triple and each codimension is at most the
//! number of slices on that axis.
//!
//! For fixed `A` and `B`, the largest admissible `C` is the annihilator of
//! `{T(a, b, ·)}`, so only pairs `(A, B)` are enumerated.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg::{all_subspaces, matrix_rank, subspace_count, PrimeField, Subspace};
use crate::matchings::AnyMatching;
use crate::verdict::{Budget, Verdict};

/// Enumeration cap for the slice-rank oracle (pairs of subspaces).
pub const SLICE_RANK_PAIR_BUDGET: u128 = 250_000;

/// Enumeration cap for the flat-rank oracle (vectors on the third axis,
/// and total subspace-vector incidences).
pub const FLAT_RANK_BUDGET: u128 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    field: PrimeField,
    dims: (usize, usize, usize),
    entries: Vec<u32>,
}

impl Tensor3 {
    pub fn zeros(field: PrimeField, dims: (usize, usize, usize)) -> Tensor3 {
        Tensor3 {
            field,
            dims,
            entries: vec![0; dims.0 * dims.1 * dims.2],
        }
    }

    pub fn from_entries(field: PrimeField, dims: (usize, usize, usize), entries: Vec<u32>) -> Result<Tensor3> {
        if entries.len() != dims.0 * dims.1 * dims.2 {
            return Err(Error::Invalid("entry count does not match dimensions".into()));
        }
        let entries = entries.into_iter().map(|x| x % field.p()).collect();
        Ok(Tensor3 { field, dims, entries })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    fn idx(&self, x: usize, y: usize, z: usize) -> usize {
        (x * self.dims.1 + y) * self.dims.2 + z
    }

    pub fn get(&self, x: usize, y: usize, z: usize) -> u32 {
        self.entries[self.idx(x, y, z)]
    }

    pub fn set(&mut self, x: usize, y: usize, z: usize, v: u32) {
        let i = self.idx(x, y, z);
        self.entries[i] = v % self.field.p();
    }

    pub fn count_nonzero(&self) -> usize {
        self.entries.iter().filter(|&&x| x != 0).count()
    }

    /// `w[z] = Σ a_x b_y T(x, y, z)`.
    pub fn contract_xy(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let (dx, dy, dz) = self.dims;
        let mut w = vec![0u32; dz];
        for x in 0..dx {
            if a[x] == 0 {
                continue;
            }
            for y in 0..dy {
                let c = f.mul(a[x], b[y]);
                if c == 0 {
                    continue;
                }
                let base = (x * dy + y) * dz;
                f.axpy(&mut w, c, &self.entries[base..base + dz]);
            }
        }
        w
    }

    /// `T(a, b, c)`.
    pub fn evaluate(&self, a: &[u32], b: &[u32], c: &[u32]) -> u32 {
        let f = self.field;
        self.contract_xy(a, b)
            .iter()
            .zip(c)
            .fold(0, |acc, (&w, &cz)| f.add(acc, f.mul(w, cz)))
    }

    /// The `X x Y` matrix `t_v = Σ v_z T(·, ·, z)`, row-major.
    pub fn z_slice(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let (dx, dy, dz) = self.dims;
        let mut m = vec![0u32; dx * dy];
        for (xy, slot) in m.iter_mut().enumerate() {
            let base = xy * dz;
            let mut acc = 0;
            for z in 0..dz {
                acc = f.add(acc, f.mul(v[z], self.entries[base + z]));
            }
            *slot = acc;
        }
        m
    }

    /// Applies a linear map on each axis: `T'(x', y', z') =
    /// Σ mx[x'][x] my[y'][y] mz[z'][z] T(x, y, z)`.
    pub fn transform(&self, mx: &[Vec<u32>], my: &[Vec<u32>], mz: &[Vec<u32>]) -> Tensor3 {
        let f = self.field;
        let (dx, dy, dz) = self.dims;
        let mut step1 = vec![0u32; dx * dy * dz];
        for (xp, row) in mx.iter().enumerate() {
            for (x, &c) in row.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let src = &self.entries[x * dy * dz..(x + 1) * dy * dz];
                f.axpy(&mut step1[xp * dy * dz..(xp + 1) * dy * dz], c, src);
            }
        }
        let mut step2 = vec![0u32; dx * dy * dz];
        for x in 0..dx {
            for (yp, row) in my.iter().enumerate() {
                for (y, &c) in row.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let src = (x * dy + y) * dz;
                    let dst = (x * dy + yp) * dz;
                    for z in 0..dz {
                        step2[dst + z] = f.add(step2[dst + z], f.mul(c, step1[src + z]));
                    }
                }
            }
        }
        let mut out = vec![0u32; dx * dy * dz];
        for xy in 0..dx * dy {
            for (zp, row) in mz.iter().enumerate() {
                let mut acc = 0;
                for (z, &c) in row.iter().enumerate() {
                    acc = f.add(acc, f.mul(c, step2[xy * dz + z]));
                }
                out[xy * dz + zp] = acc;
            }
        }
        Tensor3 { field: f, dims: self.dims, entries: out }
    }

    /// Text form: `p dx dy dz` then the entries in x-major order, one line of
    /// `dz` entries per `(x, y)`.
    pub fn to_text(&self) -> String {
        let (dx, dy, dz) = self.dims;
        let mut out = format!("{} {} {} {}\n", self.field.p(), dx, dy, dz);
        for xy in 0..dx * dy {
            let row = &self.entries[xy * dz..(xy + 1) * dz];
            if self.field.p() <= 10 {
                out.extend(row.iter().map(|&v| char::from_digit(v, 10).unwrap()));
            } else {
                out.push_str(&row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Tensor3> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Invalid("empty tensor file".into()))?;
        let nums: Vec<u64> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Invalid(format!("bad header `{header}`"))))
            .collect::<Result<_>>()?;
        let [p, dx, dy, dz] = nums[..] else {
            return Err(Error::Invalid(format!("bad header `{header}`")));
        };
        let field = PrimeField::new(p)?;
        let mut entries = Vec::new();
        for token in lines.flat_map(str::split_whitespace) {
            if p <= 10 {
                for c in token.chars() {
                    let d = c.to_digit(10).ok_or_else(|| Error::Invalid(format!("bad digit `{c}`")))?;
                    entries.push(d);
                }
            } else {
                entries.push(token.parse().map_err(|_| Error::Invalid(format!("bad entry `{token}`")))?);
            }
        }
        if entries.iter().any(|&v| v as u64 >= p) {
            return Err(Error::Invalid("entry not reduced mod p".into()));
        }
        Tensor3::from_entries(field, (dx as usize, dy as usize, dz as usize), entries)
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `T(i, j, k) = 1` iff `g_i g_j = g_k`.
pub fn mult_tensor(g: &Group, field: PrimeField) -> Tensor3 {
    let n = g.order();
    let mut t = Tensor3::zeros(field, (n, n, n));
    for a in g.elements() {
        for b in g.elements() {
            t.set(a.index(), b.index(), g.mul(a, b).index(), 1);
        }
    }
    t
}

/// `n x n` matrix multiplication on the basis `E_ab` (index `a n + b`):
/// `T(E_ab, E_cd, E_ef) = 1` iff `b = c`, `a = e` and `d = f`.
pub fn matmul_tensor(n: usize, field: PrimeField) -> Tensor3 {
    let m = n * n;
    let mut t = Tensor3::zeros(field, (m, m, m));
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                t.set(a * n + b, b * n + d, a * n + d, 1);
            }
        }
    }
    t
}

pub fn diagonal_tensor(m: usize, field: PrimeField) -> Tensor3 {
    let mut t = Tensor3::zeros(field, (m, m, m));
    for i in 0..m {
        t.set(i, i, i, 1);
    }
    t
}

/// Block-diagonal sum on disjoint index sets.
pub fn direct_sum(t: &Tensor3, u: &Tensor3) -> Result<Tensor3> {
    if t.field != u.field {
        return Err(Error::Invalid("direct sum needs a common field".into()));
    }
    let (a, b) = (t.dims, u.dims);
    let mut out = Tensor3::zeros(t.field, (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    for x in 0..a.0 {
        for y in 0..a.1 {
            for z in 0..a.2 {
                out.set(x, y, z, t.get(x, y, z));
            }
        }
    }
    for x in 0..b.0 {
        for y in 0..b.1 {
            for z in 0..b.2 {
                out.set(a.0 + x, a.1 + y, a.2 + z, u.get(x, y, z));
            }
        }
    }
    Ok(out)
}

/// Sub-tensor on the kept indices of one axis (in the given order).
pub fn restrict_tensor(t: &Tensor3, axis: Axis, keep: &[usize]) -> Result<Tensor3> {
    if keep.is_empty() {
        return Err(Error::Invalid("restriction must keep at least one index".into()));
    }
    let (dx, dy, dz) = t.dims;
    let limit = match axis {
        Axis::X => dx,
        Axis::Y => dy,
        Axis::Z => dz,
    };
    if keep.iter().any(|&i| i >= limit) {
        return Err(Error::Invalid("kept index out of range".into()));
    }
    let dims = match axis {
        Axis::X => (keep.len(), dy, dz),
        Axis::Y => (dx, keep.len(), dz),
        Axis::Z => (dx, dy, keep.len()),
    };
    let mut out = Tensor3::zeros(t.field, dims);
    for x in 0..dims.0 {
        for y in 0..dims.1 {
            for z in 0..dims.2 {
                let v = match axis {
                    Axis::X => t.get(keep[x], y, z),
                    Axis::Y => t.get(x, keep[y], z),
                    Axis::Z => t.get(x, y, keep[z]),
                };
                out.set(x, y, z, v);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceCertificate {
    pub value: usize,
    pub a: Subspace,
    pub b: Subspace,
    pub c: Subspace,
}

impl SliceCertificate {
    /// Re-checks that the tensor vanishes on `A ⊗ B ⊗ C` and the codimension
    /// sum equals the claimed value.
    pub fn verify(&self, t: &Tensor3) -> bool {
        let codims = self.a.codim() + self.b.codim() + self.c.codim();
        codims == self.value
            && self.a.basis().iter().all(|a| {
                self.b
                    .basis()
                    .iter()
                    .all(|b| self.c.basis().iter().all(|c| t.evaluate(a, b, c) == 0))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatCertificate {
    pub value: usize,
    /// Subspace of the third axis.
    pub v: Subspace,
    /// Largest rank of `t_v` over `v ∈ V`.
    pub max_rank: usize,
    pub codim: usize,
}

impl FlatCertificate {
    pub fn verify(&self, t: &Tensor3) -> bool {
        let (dx, dy, _) = t.dims;
        let r = self
            .v
            .vectors()
            .iter()
            .map(|v| matrix_rank(t.field, dx, dy, &t.z_slice(v)))
            .max()
            .unwrap_or(0);
        r == self.max_rank && self.codim == self.v.codim() && self.value == r + self.codim
    }
}

/// Exact slice rank with a vanishing-triple witness.
pub fn slice_rank_exact(t: &Tensor3) -> Result<SliceCertificate> {
    let p = t.field.p() as u64;
    let (dx, dy, dz) = t.dims;
    let pairs = subspace_count(p, dx) * subspace_count(p, dy);
    if pairs > SLICE_RANK_PAIR_BUDGET {
        return Err(Error::BudgetExceeded {
            needed: pairs,
            budget: SLICE_RANK_PAIR_BUDGET as u64,
        });
    }
    let xs = all_subspaces(t.field, dx);
    let ys = all_subspaces(t.field, dy);
    // The zero subspaces give the trivial bound; start from the smallest side.
    let mut best: Option<(usize, usize, usize, Subspace)> = None;
    let mut best_value = dx.min(dy).min(dz) + 1;
    for (i, a) in xs.iter().enumerate() {
        if a.codim() >= best_value {
            continue;
        }
        for (j, b) in ys.iter().enumerate() {
            if a.codim() + b.codim() >= best_value {
                continue;
            }
            let mut w = Subspace::zero(t.field, dz);
            for x in a.basis() {
                for y in b.basis() {
                    w.insert(&t.contract_xy(x, y));
                }
            }
            let value = a.codim() + b.codim() + w.dim();
            if value < best_value {
                best_value = value;
                best = Some((value, i, j, w));
            }
        }
    }
    let (value, i, j, w) = best.expect("A = B = F gives a candidate");
    Ok(SliceCertificate {
        value,
        a: xs[i].clone(),
        b: ys[j].clone(),
        c: w.annihilator(),
    })
}

/// Exact flat rank (with respect to the third axis) with its witness.
pub fn flat_rank_exact(t: &Tensor3) -> Result<FlatCertificate> {
    let f = t.field;
    let p = f.p() as u64;
    let (dx, dy, dz) = t.dims;
    let vectors = (p as u128).pow(dz as u32);
    let incidences: u128 = (0..=dz)
        .map(|k| crate::linalg::gaussian_binomial(p, dz, k) * (p as u128).pow(k as u32))
        .sum();
    let needed = vectors.max(incidences);
    if needed > FLAT_RANK_BUDGET {
        return Err(Error::BudgetExceeded {
            needed,
            budget: FLAT_RANK_BUDGET as u64,
        });
    }
    let encode = |v: &[u32]| v.iter().fold(0usize, |acc, &x| acc * p as usize + x as usize);
    let mut rank_of = vec![0usize; vectors as usize];
    for (code, slot) in rank_of.iter_mut().enumerate() {
        let mut v = vec![0u32; dz];
        let mut c = code;
        for k in (0..dz).rev() {
            v[k] = (c % p as usize) as u32;
            c /= p as usize;
        }
        *slot = matrix_rank(f, dx, dy, &t.z_slice(&v));
    }
    let mut best: Option<FlatCertificate> = None;
    for v in all_subspaces(f, dz) {
        let codim = v.codim();
        if best.as_ref().is_some_and(|b| codim >= b.value) {
            continue;
        }
        let max_rank = v.vectors().iter().map(|x| rank_of[encode(x)]).max().unwrap_or(0);
        let value = max_rank + codim;
        if best.as_ref().is_none_or(|b| value < b.value) {
            best = Some(FlatCertificate { value, v, max_rank, codim });
        }
    }
    Ok(best.expect("the whole space is a candidate"))
}

/// Cardinality of a verified (border) multiplicative matching, a lower bound
/// on the slice rank of the group's multiplication tensor.
pub fn matching_lower_bound(g: &Group, m: &AnyMatching, budget: Budget) -> Result<usize> {
    match m.verify(g, budget)? {
        Verdict::Holds => Ok(m.cardinality()),
        Verdict::Fails(w) => Err(Error::Invalid(format!("matching does not verify: {w}"))),
    }
}
