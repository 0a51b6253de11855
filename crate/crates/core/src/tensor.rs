//! Partitions realized as 0/1 matrices on tensor powers of an N-dimensional space.
//!
//! Multi-indices are encoded with the first leg most significant, so the
//! Kronecker product of matrices matches horizontal concatenation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::{ColouredPartition, Partition};

/// Largest admitted `N^legs` on either side of a matrix.
pub const MAX_DIMENSION: usize = 1 << 20;

/// Sparse integer matrix of shape `N^l × N^k`, keyed by (row, column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TpMatrix {
    n: usize,
    k: usize,
    l: usize,
    entries: BTreeMap<(usize, usize), i128>,
}

fn checked_pow(n: usize, legs: usize) -> Result<usize> {
    n.checked_pow(legs as u32)
        .filter(|&d| d <= MAX_DIMENSION)
        .ok_or(Error::SizeOverflow { dim: n, legs })
}

impl TpMatrix {
    pub fn zero(n: usize, k: usize, l: usize) -> Result<Self> {
        checked_pow(n, k)?;
        checked_pow(n, l)?;
        Ok(Self {
            n,
            k,
            l,
            entries: BTreeMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn rows(&self) -> usize {
        self.n.pow(self.l as u32)
    }

    pub fn cols(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    pub fn entry(&self, row: usize, col: usize) -> i128 {
        self.entries.get(&(row, col)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), i128)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    fn insert(&mut self, row: usize, col: usize, v: i128) {
        if v != 0 {
            let e = self.entries.entry((row, col)).or_insert(0);
            *e += v;
            if *e == 0 {
                self.entries.remove(&(row, col));
            }
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            n: self.n,
            k: self.l,
            l: self.k,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), &v)| ((c, r), v))
                .collect(),
        }
    }

    pub fn kron(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidParameter(
                "Kronecker factors with different N".into(),
            ));
        }
        let mut out = Self::zero(self.n, self.k + other.k, self.l + other.l)?;
        let (r2, c2) = (other.rows(), other.cols());
        for (&(r, c), &v) in &self.entries {
            for (&(s, d), &w) in &other.entries {
                out.insert(r * r2 + s, c * c2 + d, v * w);
            }
        }
        Ok(out)
    }

    /// Matrix product `self · other`; `other` acts first.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.k != other.l {
            return Err(Error::ShapeMismatch {
                lower: other.l,
                upper: self.k,
            });
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, i128)>> = BTreeMap::new();
        for (&(r, c), &v) in &self.entries {
            by_row.entry(c).or_default().push((r, v));
        }
        let mut out = Self::zero(self.n, other.k, self.l)?;
        for (&(m, c), &w) in &other.entries {
            if let Some(col) = by_row.get(&m) {
                for &(r, v) in col {
                    out.insert(r, c, v * w);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, f: i128) -> Self {
        let mut out = self.clone();
        out.entries.retain(|_, v| {
            *v *= f;
            *v != 0
        });
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.n, self.k, self.l) != (other.n, other.k, other.l) {
            return Err(Error::ShapeMismatch {
                lower: other.l,
                upper: self.l,
            });
        }
        let mut out = self.clone();
        for (&(r, c), &v) in &other.entries {
            out.insert(r, c, v);
        }
        Ok(out)
    }

    /// Frobenius inner product.
    pub fn inner(&self, other: &Self) -> i128 {
        self.entries
            .iter()
            .map(|(key, &v)| v * other.entries.get(key).copied().unwrap_or(0))
            .sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i128>> {
        let mut d = vec![vec![0; self.cols()]; self.rows()];
        for (&(r, c), &v) in &self.entries {
            d[r][c] = v;
        }
        d
    }

    pub fn to_record(&self) -> MatrixRecord {
        MatrixRecord {
            n: self.n,
            k: self.k,
            l: self.l,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), &v)| (r, c, v as i64))
                .collect(),
        }
    }
}

/// Coordinate-list JSON form.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixRecord {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

/// `T_p`: entry `(j, i)` is 1 iff the indices are constant on every block. Colours are ignored.
pub fn tp_matrix(p: &ColouredPartition, n: usize) -> Result<TpMatrix> {
    tp_partition(p.partition(), n)
}

pub fn tp_partition(p: &Partition, n: usize) -> Result<TpMatrix> {
    let mut out = TpMatrix::zero(n, p.k(), p.l())?;
    let cols = out.cols() as u64;
    out.entries = support(p, n)?
        .into_iter()
        .map(|key| (((key / cols) as usize, (key % cols) as usize), 1))
        .collect();
    Ok(out)
}

/// Nonzero positions of `T_p` as `row · cols + col`, sorted.
pub fn support(p: &Partition, n: usize) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let cols = checked_pow(n, p.k())? as u64;
    checked_pow(n, p.l())?;
    let b = p.num_blocks();
    let count = checked_pow(n, b)?;
    let n64 = n as u64;
    let mut stride = vec![0u64; b];
    for (i, &x) in p.upper_labels().iter().enumerate() {
        stride[x as usize] += n64.pow((p.k() - 1 - i) as u32);
    }
    for (j, &x) in p.lower_labels().iter().enumerate() {
        stride[x as usize] += cols * n64.pow((p.l() - 1 - j) as u32);
    }
    let mut keys = Vec::with_capacity(count);
    let mut values = vec![0u64; b];
    let mut key = 0u64;
    keys.push(key);
    for _ in 1..count {
        let mut d = b - 1;
        while values[d] + 1 == n64 {
            key -= (n64 - 1) * stride[d];
            values[d] = 0;
            d -= 1;
        }
        values[d] += 1;
        key += stride[d];
        keys.push(key);
    }
    keys.sort_unstable();
    Ok(keys)
}

/// A functor law checked by [`verify_functor`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Law {
    Adjoint,
    Tensor,
    Composition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctorReport {
    pub checked: Vec<Law>,
    pub violation: Option<Law>,
}

/// Checks `T_p* = T_pᵀ`, `T_p ⊗ T_q = T_{p⊗q}`, and `T_p T_q = N^{rl} T_{pq}` when `q` feeds into `p`.
pub fn verify_functor(
    p: &ColouredPartition,
    q: &ColouredPartition,
    n: usize,
) -> Result<FunctorReport> {
    verify_functor_uncoloured(p.partition(), q.partition(), n)
}

pub fn verify_functor_uncoloured(p: &Partition, q: &Partition, n: usize) -> Result<FunctorReport> {
    let mut report = FunctorReport {
        checked: Vec::new(),
        violation: None,
    };
    let check = |law: Law, ok: bool, r: &mut FunctorReport| {
        r.checked.push(law);
        if !ok && r.violation.is_none() {
            r.violation = Some(law);
        }
    };
    let sp = support(p, n)?;
    let sq = support(q, n)?;
    let (pr, pc) = (checked_pow(n, p.l())? as u64, checked_pow(n, p.k())? as u64);
    let (qr, qc) = (checked_pow(n, q.l())? as u64, checked_pow(n, q.k())? as u64);

    let mut transposed: Vec<u64> = sp.iter().map(|&key| (key % pc) * pr + key / pc).collect();
    transposed.sort_unstable();
    check(
        Law::Adjoint,
        support(&p.adjoint(), n)? == transposed,
        &mut report,
    );

    let mut kron = Vec::with_capacity(sp.len() * sq.len());
    for &a in &sp {
        let (ra, ca) = (a / pc, a % pc);
        for &b in &sq {
            let (rb, cb) = (b / qc, b % qc);
            kron.push((ra * qr + rb) * (pc * qc) + ca * qc + cb);
        }
    }
    kron.sort_unstable();
    check(Law::Tensor, support(&p.tensor(q), n)? == kron, &mut report);

    if q.l() == p.k() {
        let (pq, loops) = Partition::compose(p, q)?;
        let rhs = tp_partition(&pq, n)?.scale((n as i128).pow(loops as u32));
        let lhs = tp_partition(p, n)?.mul(&tp_partition(q, n)?)?;
        check(Law::Composition, lhs == rhs, &mut report);
    }
    Ok(report)
}

/// Number of blocks of the join of two partitions of the same points.
pub fn join_blocks(p: &Partition, q: &Partition) -> usize {
    let bp = p.num_blocks();
    let mut uf = UnionFind::<usize>::new(bp + q.num_blocks());
    for i in 0..p.size() {
        uf.union(p.label(i), bp + q.label(i));
    }
    let mut roots: Vec<usize> = (0..bp).map(|x| uf.find(x)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// `⟨T_p, T_q⟩ = N^{b(p ∨ q)}`.
pub fn gram_entry(p: &Partition, q: &Partition, n: usize) -> BigInt {
    BigInt::from(n).pow(join_blocks(p, q) as u32)
}

pub fn gram_matrix(ps: &[ColouredPartition], n: usize) -> Result<Vec<Vec<BigInt>>> {
    if let Some(first) = ps.first() {
        if let Some(bad) = ps.iter().find(|p| (p.k(), p.l()) != (first.k(), first.l())) {
            return Err(Error::ShapeMismatch {
                lower: bad.l(),
                upper: first.l(),
            });
        }
    }
    Ok(ps
        .par_iter()
        .map(|p| {
            ps.iter()
                .map(|q| gram_entry(p.partition(), q.partition(), n))
                .collect()
        })
        .collect())
}

/// Rank over ℚ of the Gram matrix of the `T_p`.
pub fn gram_rank(ps: &[ColouredPartition], n: usize) -> Result<usize> {
    Ok(linalg::rank(gram_matrix(ps, n)?))
}
