//! Bit-packed GF(2) linear algebra and the Z₂ homology of the torus lattices.

use serde::Serialize;

use crate::bits::{words_for, xor_into, BitVector, WORD_BITS};
use crate::complex::{CellComplex, CellId, CellKind};
use crate::error::{Error, Result};

/// A dense matrix over GF(2), stored row-major with rows packed into words.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks row vectors; all must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[BitVector]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        (self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.stride + j / WORD_BITS];
        let mask = 1u64 << (j % WORD_BITS);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn toggle(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.stride + j / WORD_BITS] ^= 1u64 << (j % WORD_BITS);
    }

    pub fn row(&self, i: usize) -> BitVector {
        let mut v = BitVector::zeros(self.cols);
        v.words_mut().copy_from_slice(self.row_words(i));
        v
    }

    pub fn column(&self, j: usize) -> BitVector {
        BitVector::from_bools(&(0..self.rows).map(|i| self.get(i, j)).collect::<Vec<_>>())
    }

    /// Number of ones in column `j`.
    pub fn column_weight(&self, j: usize) -> usize {
        (0..self.rows).filter(|&i| self.get(i, j)).count()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// `row[dst] ^= row[src]`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        assert_ne!(src, dst);
        let s = self.stride;
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&lo[src * s..(src + 1) * s], &mut hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&hi[..s], &mut lo[dst * s..(dst + 1) * s])
        };
        xor_into(b, a);
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        swap_packed_rows(&mut self.data, self.stride, a, b);
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row(i).iter_ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in self.row(i).iter_ones() {
                let src = other.row_words(k).to_vec();
                xor_into(out.row_words_mut(i), &src);
            }
        }
        Ok(out)
    }

    /// `M · x` for a column vector `x`.
    pub fn mul_vec(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows);
        for i in 0..self.rows {
            let parity = self
                .row_words(i)
                .iter()
                .zip(x.words())
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>();
            if parity & 1 == 1 {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// Row rank over GF(2). The matrix itself is left untouched.
    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        eliminate(&mut work, self.rows, self.stride, self.cols).len()
    }
}

impl std::fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows.min(32) {
            let line: String = (0..self.cols.min(96))
                .map(|j| if self.get(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

fn swap_packed_rows(data: &mut [u64], stride: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    let (lo, hi) = (a.min(b), a.max(b));
    let (first, second) = data.split_at_mut(hi * stride);
    first[lo * stride..(lo + 1) * stride].swap_with_slice(&mut second[..stride]);
}

/// Forward elimination to row echelon form, pivoting on the first
/// `pivot_cols` columns only (any trailing columns are carried along).
///
/// Returns the pivot column of each of the leading rows.
fn eliminate(data: &mut [u64], rows: usize, stride: usize, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let w = c / WORD_BITS;
        let mask = 1u64 << (c % WORD_BITS);
        let Some(p) = (r..rows).find(|&i| data[i * stride + w] & mask != 0) else {
            continue;
        };
        swap_packed_rows(data, stride, p, r);
        let (head, tail) = data.split_at_mut((r + 1) * stride);
        let pivot_row = &head[r * stride + w..(r + 1) * stride];
        for row in tail.chunks_exact_mut(stride) {
            if row[w] & mask != 0 {
                xor_into(&mut row[w..], pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Row echelon form of a matrix, kept for repeated membership queries.
///
/// When built with tracking, every echelon row also records which original
/// rows were summed to produce it, so a reduction yields the combination.
#[derive(Clone)]
pub struct RowEchelon {
    cols: usize,
    source_rows: usize,
    track: bool,
    stride: usize,
    data: Vec<u64>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(m: &Gf2Matrix, track: bool) -> Self {
        let extra = if track { m.rows } else { 0 };
        let width = m.cols + extra;
        let stride = words_for(width);
        let mut data = vec![0u64; m.rows * stride];
        for i in 0..m.rows {
            let row = &mut data[i * stride..(i + 1) * stride];
            for j in m.row(i).iter_ones() {
                row[j / WORD_BITS] |= 1 << (j % WORD_BITS);
            }
            if track {
                let j = m.cols + i;
                row[j / WORD_BITS] |= 1 << (j % WORD_BITS);
            }
        }
        let pivots = eliminate(&mut data, m.rows, stride, m.cols);
        data.truncate(pivots.len() * stride);
        Self {
            cols: m.cols,
            source_rows: m.rows,
            track,
            stride,
            data,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the echelon rows.
    ///
    /// Returns the residual (zero iff `v` is in the row space) and, when
    /// tracking, the set of original rows whose sum was subtracted.
    pub fn reduce(&self, v: &BitVector) -> Result<(BitVector, Option<BitVector>)> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut work = vec![0u64; self.stride];
        work[..v.words().len()].copy_from_slice(v.words());
        for (r, &c) in self.pivots.iter().enumerate() {
            if (work[c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1 {
                xor_into(
                    &mut work,
                    &self.data[r * self.stride..(r + 1) * self.stride],
                );
            }
        }
        let mut residual = BitVector::zeros(self.cols);
        let mut combo = self.track.then(|| BitVector::zeros(self.source_rows));
        for j in 0..self.cols + if self.track { self.source_rows } else { 0 } {
            if (work[j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1 {
                if j < self.cols {
                    residual.set(j, true);
                } else if let Some(c) = combo.as_mut() {
                    c.set(j - self.cols, true);
                }
            }
        }
        Ok((residual, combo))
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        Ok(self.reduce(v)?.0.is_zero())
    }
}

/// Column-space solver: finds some `x` with `M x = b`.
#[derive(Clone)]
pub struct ColumnSolver {
    matrix: Gf2Matrix,
    echelon: RowEchelon,
}

impl ColumnSolver {
    pub fn new(m: &Gf2Matrix) -> Self {
        Self {
            echelon: RowEchelon::new(&m.transpose(), true),
            matrix: m.clone(),
        }
    }

    pub fn solve(&self, b: &BitVector) -> Result<Option<BitVector>> {
        if b.len() != self.matrix.rows {
            return Err(Error::DimensionMismatch {
                expected: self.matrix.rows,
                got: b.len(),
            });
        }
        let (residual, combo) = self.echelon.reduce(b)?;
        if !residual.is_zero() {
            return Ok(None);
        }
        let x = combo.expect("solver echelon tracks combinations");
        debug_assert_eq!(&self.matrix.mul_vec(&x)?, b);
        Ok(Some(x))
    }
}

/// Solves `M x = b` over GF(2), or returns `None` if `b` is not in the
/// column space of `M`.
pub fn solve(m: &Gf2Matrix, b: &BitVector) -> Result<Option<BitVector>> {
    ColumnSolver::new(m).solve(b)
}

pub fn rank(m: &Gf2Matrix) -> usize {
    m.rank()
}

/// The unoriented boundary map ∂_k: columns are k-cells, rows (k−1)-cells.
pub fn boundary_matrix(c: &CellComplex, k: usize) -> Result<Gf2Matrix> {
    if k == 0 || k > c.dimension() {
        return Err(Error::InvalidSpec(format!(
            "boundary map ∂_{k} undefined for a {}-dimensional complex",
            c.dimension()
        )));
    }
    let kind = CellKind::from_rank(k).expect("k ≤ 3");
    let lower = CellKind::from_rank(k - 1).expect("k ≥ 1");
    let mut m = Gf2Matrix::zeros(c.count(lower), c.count(kind));
    for j in 0..c.count(kind) {
        for cell in c.boundary(CellId::primal(kind, j))? {
            m.toggle(cell.index, j);
        }
    }
    Ok(m)
}

/// Z₂ Betti numbers `b₀ … b_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiProfile(pub Vec<usize>);

impl BettiProfile {
    pub fn get(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    /// Σ (−1)^k b_k.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Ranks of ∂₁ … ∂_dim.
pub fn boundary_ranks(c: &CellComplex) -> Result<Vec<usize>> {
    (1..=c.dimension())
        .map(|k| Ok(boundary_matrix(c, k)?.rank()))
        .collect()
}

/// `b_k = n_k − rank ∂_k − rank ∂_{k+1}`.
pub fn betti(c: &CellComplex) -> Result<BettiProfile> {
    let ranks = boundary_ranks(c)?;
    let dim = c.dimension();
    let rank_of = |k: usize| {
        if k == 0 || k > dim {
            0
        } else {
            ranks[k - 1]
        }
    };
    let b = (0..=dim)
        .map(|k| {
            let n = c.count(CellKind::from_rank(k).expect("k ≤ 3"));
            n - rank_of(k) - rank_of(k + 1)
        })
        .collect();
    Ok(BettiProfile(b))
}

/// Ground-state degeneracy predicted by homology: `2^{b₁}` in 2D and
/// `2^{b₂}` in 3D.
pub fn homological_degeneracy(c: &CellComplex) -> Result<u64> {
    let b = betti(c)?;
    let exponent = if c.dimension() == 2 {
        b.get(1)
    } else {
        b.get(2)
    };
    Ok(1u64 << exponent)
}
