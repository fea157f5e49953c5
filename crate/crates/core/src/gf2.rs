//! Dense linear algebra over the two-element field.
//!
//! Deliberately separate from the integer Smith normal form code: mod-2 Betti
//! numbers and cohomology bases computed here serve as an independent channel
//! for cross-checking the exact integer pipeline.

use num_traits::Zero;

use crate::matrix::IntMatrix;

/// A vector over GF(2), packed 64 bits per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, ones: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// Dense matrix over GF(2), stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl std::fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn from_rows(rows: Vec<BitVec>) -> Self {
        let cols = rows.first().map_or(0, BitVec::len);
        assert!(rows.iter().all(|r| r.len() == cols));
        Self {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Columns given as bit vectors of the ambient dimension.
    pub fn from_columns(ambient: usize, columns: &[BitVec]) -> Self {
        let mut m = Self::zeros(ambient, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), ambient);
            for i in c.ones() {
                m.data[i].set(j, true);
            }
        }
        m
    }

    /// Entry-wise parity reduction of an integer matrix.
    pub fn from_int_matrix(a: &IntMatrix) -> Self {
        let mut m = Self::zeros(a.rows(), a.cols());
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                let e = a.get(i, j);
                if !e.is_zero() && num_integer::Integer::is_odd(e) {
                    m.data[i].set(j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.data[i].set(j, v);
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.data[i].ones() {
                t.data[j].set(i, true);
            }
        }
        t
    }

    /// `self * x` for a column vector `x` of length `cols`.
    pub fn apply(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.cols);
        let mut out = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = 0u64;
            for (a, b) in self.data[i].words.iter().zip(&x.words) {
                acc ^= a & b;
            }
            out.set(i, acc.count_ones() % 2 == 1);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().1.len()
    }

    /// In-place row reduction to reduced echelon form.
    ///
    /// Returns the reduced matrix together with the pivot columns in order.
    pub fn row_reduce(mut self) -> (Self, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            let Some(pivot_row) = (next_row..self.rows).find(|&r| self.data[r].get(col)) else {
                continue;
            };
            self.data.swap(next_row, pivot_row);
            let pivot = self.data[next_row].clone();
            for (r, row) in self.data.iter_mut().enumerate() {
                if r != next_row && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        (self, pivots)
    }

    /// A basis of `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let (rref, pivots) = self.clone().row_reduce();
        let pivot_set: Vec<Option<usize>> = {
            let mut set = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                set[c] = Some(r);
            }
            set
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(r) = slot {
                    if rref.data[*r].get(free) {
                        v.set(col, true);
                    }
                }
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = b`, if the system is consistent. Free
    /// variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in self.data[i].ones() {
                aug.data[i].set(j, true);
            }
            if b.get(i) {
                aug.data[i].set(self.cols, true);
            }
        }
        let (rref, pivots) = aug.row_reduce();
        if pivots.contains(&self.cols) {
            return None; // a row reduced to 0 = 1
        }
        let mut x = BitVec::zeros(self.cols);
        for (r, &c) in pivots.iter().enumerate() {
            if rref.data[r].get(self.cols) {
                x.set(c, true);
            }
        }
        Some(x)
    }
}

/// Incremental span of GF(2) vectors with online independence tests.
pub struct Gf2Span {
    ambient: usize,
    // (pivot index, reduced vector with that leading bit)
    echelon: Vec<(usize, BitVec)>,
}

impl Gf2Span {
    pub fn new(ambient: usize) -> Self {
        Self {
            ambient,
            echelon: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.echelon.len()
    }

    /// Reduces `v` against the current span.
    pub fn residual(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.clone();
        loop {
            let Some(lead) = r.first_one() else {
                return r;
            };
            match self.echelon.iter().find(|(p, _)| *p == lead) {
                Some((_, basis)) => r.xor_assign(basis),
                None => return r,
            }
        }
    }

    /// Adds `v` to the span; returns whether it enlarged it.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let r = self.residual(v);
        match r.first_one() {
            Some(lead) => {
                self.echelon.push((lead, r));
                self.echelon.sort_by_key(|(p, _)| *p);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.residual(v).is_zero()
    }
}
