//! Dense linear algebra over small prime fields.
//!
//! Subspaces are kept in reduced row-echelon form, which is canonical: two
//! subspaces are equal iff their stored bases are equal.

use std::fmt;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField> {
        if !is_prime(p) || p > u16::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        let mut result = 1;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    /// `acc += c * v` in place.
    pub fn axpy(self, acc: &mut [u32], c: u32, v: &[u32]) {
        if c == 0 {
            return;
        }
        for (a, &x) in acc.iter_mut().zip(v) {
            *a = (*a + c * x) % self.p;
        }
    }
}

/// A subspace of `F_p^n` in reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Subspace {
        let rows = (0..ambient)
            .map(|i| {
                let mut r = vec![0; ambient];
                r[i] = 1;
                r
            })
            .collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I, V>(field: PrimeField, ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[u32]>,
    {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v.as_ref());
        }
        s
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the
    /// subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut w: Vec<u32> = v.iter().map(|&x| x % f.p()).collect();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = w[piv];
            if c != 0 {
                f.axpy(&mut w, f.neg(c), row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Adds `v` to the span. Returns true if the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let f = self.field;
        let mut w = self.reduce(v);
        let Some(piv) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let scale = f.inv(w[piv]);
        for x in w.iter_mut() {
            *x = f.mul(*x, scale);
        }
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                f.axpy(row, f.neg(c), &w);
            }
        }
        let at = self.pivots.partition_point(|&p| p < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, w);
        true
    }

    /// Builds a subspace directly from a reduced echelon basis.
    pub(crate) fn from_echelon(field: PrimeField, ambient: usize, rows: Vec<Vec<u32>>) -> Subspace {
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero row"))
            .collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots,
        }
    }

    /// The annihilator `{w : <v, w> = 0 for all v}` under the standard
    /// pairing.
    pub fn annihilator(&self) -> Subspace {
        let f = self.field;
        let free: Vec<usize> = (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect();
        let vectors = free.iter().map(|&fc| {
            let mut w = vec![0; self.ambient];
            w[fc] = 1;
            for (row, &piv) in self.rows.iter().zip(&self.pivots) {
                w[piv] = f.neg(row[fc]);
            }
            w
        });
        Subspace::span(f, self.ambient, vectors.collect::<Vec<_>>())
    }

    /// Every vector in the subspace, in lexicographic order of coefficients.
    pub fn vectors(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let p = f.p() as usize;
        let k = self.dim();
        let total = p.pow(k as u32);
        (0..total)
            .map(|mut idx| {
                let mut v = vec![0; self.ambient];
                for row in self.rows.iter().rev() {
                    f.axpy(&mut v, (idx % p) as u32, row);
                    idx /= p;
                }
                v
            })
            .collect()
    }

    /// Text form: header `p ambientDim rank`, then one row per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.field.p(), self.ambient, self.dim());
        for row in &self.rows {
            out.push_str(&format_row(self.field, row));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Subspace> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Invalid("empty subspace file".into()))?;
        let nums: Vec<u64> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Invalid(format!("bad header `{header}`"))))
            .collect::<Result<_>>()?;
        let [p, ambient, rank] = nums[..] else {
            return Err(Error::Invalid(format!("bad header `{header}`")));
        };
        let field = PrimeField::new(p)?;
        let mut rows = Vec::new();
        for line in lines {
            rows.push(parse_row(field, ambient as usize, line)?);
        }
        if rows.len() != rank as usize {
            return Err(Error::Invalid(format!("expected {rank} rows, found {}", rows.len())));
        }
        let s = Subspace::span(field, ambient as usize, &rows);
        if s.dim() != rows.len() {
            return Err(Error::Invalid("rows are linearly dependent".into()));
        }
        Ok(s)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn format_row(field: PrimeField, row: &[u32]) -> String {
    if field.p() <= 10 {
        row.iter().map(|x| char::from_digit(*x, 10).unwrap()).collect()
    } else {
        row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn parse_row(field: PrimeField, len: usize, line: &str) -> Result<Vec<u32>> {
    let line = line.trim();
    let row: Vec<u32> = if field.p() <= 10 {
        line.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::Invalid(format!("bad digit `{c}`"))))
            .collect::<Result<_>>()?
    } else {
        line.split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Invalid(format!("bad entry `{t}`"))))
            .collect::<Result<_>>()?
    };
    if row.len() != len || row.iter().any(|&x| x >= field.p()) {
        return Err(Error::Invalid(format!("bad row `{line}`")));
    }
    Ok(row)
}

/// Rank of a dense `rows x cols` matrix (row-major).
pub fn matrix_rank(field: PrimeField, rows: usize, cols: usize, data: &[u32]) -> usize {
    let mut m: Vec<u32> = data.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
            continue;
        };
        if pr != rank {
            for c in 0..cols {
                m.swap(pr * cols + c, rank * cols + c);
            }
        }
        let inv = field.inv(m[rank * cols + col]);
        for r in rank + 1..rows {
            let factor = field.mul(m[r * cols + col], inv);
            if factor != 0 {
                for c in col..cols {
                    let v = field.mul(factor, m[rank * cols + c]);
                    m[r * cols + c] = field.sub(m[r * cols + c], v);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Number of subspaces of `F_p^n` (sum of Gaussian binomials).
pub fn subspace_count(p: u64, n: usize) -> u128 {
    (0..=n).map(|k| gaussian_binomial(p, n, k)).sum()
}

pub fn gaussian_binomial(p: u64, n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let q = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Every subspace of `F_p^n`, each exactly once, ordered by dimension, then
/// pivot set (lexicographic), then free entries.
pub fn all_subspaces(field: PrimeField, n: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            // free positions: (row, col) with col > pivot[row] and col not a pivot
            let slots: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let piv = &pivots;
                    (piv[r] + 1..n)
                        .filter(move |c| !piv.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let p = field.p() as usize;
            let total = p.pow(slots.len() as u32);
            for mut idx in 0..total {
                let mut rows = vec![vec![0u32; n]; k];
                for (r, &piv) in pivots.iter().enumerate() {
                    rows[r][piv] = 1;
                }
                for &(r, c) in slots.iter().rev() {
                    rows[r][c] = (idx % p) as u32;
                    idx /= p;
                }
                out.push(Subspace::from_echelon(field, n, rows));
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
