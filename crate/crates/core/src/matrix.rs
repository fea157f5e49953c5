//! Exact integer matrices and Smith normal form.
//!
//! Everything here is exact: entries are arbitrary-precision integers and the
//! reduction never leaves the integers. The elimination core runs on `i128`
//! with overflow checks and transparently reruns on big integers if a single
//! operation would overflow, so results are always exact no matter the input.
//!
//! Smith normal form uses smallest-nonzero-entry pivoting with balanced
//! (nearest-integer) quotients, which keeps intermediate entries small on the
//! boundary matrices this crate feeds it. [`determinantal_divisors`] is an
//! independent oracle: `D_k` is the gcd of all `k x k` minors and the
//! quotients `D_k / D_{k-1}` recover the invariant factors.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of exact integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from machine-integer rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix literal"
        );
        Self {
            rows: nrows,
            cols: ncols,
            entries: rows
                .into_iter()
                .flatten()
                .map(BigInt::from)
                .collect(),
        }
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix literal"
        );
        Self {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Exact matrix product. The inner loop skips zero entries, which makes
    /// products of sparse boundary matrices cheap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Index of the first nonzero entry of `self * other`, if any.
    ///
    /// Used to verify that consecutive boundary operators compose to zero
    /// without materializing the whole product.
    pub fn compose_nonzero_at(&self, other: &Self) -> Result<Option<(usize, usize)>> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut acc = vec![BigInt::zero(); self.rows];
        for j in 0..other.cols {
            for a in acc.iter_mut() {
                a.set_zero();
            }
            for k in 0..other.rows {
                let b = other.get(k, j);
                if b.is_zero() {
                    continue;
                }
                for (i, a) in acc.iter_mut().enumerate() {
                    let x = self.get(i, k);
                    if !x.is_zero() {
                        *a += x * b;
                    }
                }
            }
            if let Some(i) = acc.iter().position(|a| !a.is_zero()) {
                return Ok(Some((i, j)));
            }
        }
        Ok(None)
    }

    /// Determinant by fraction-free (Bareiss) elimination. Exact for any size.
    ///
    /// Panics if the matrix is not square.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = BigInt::one();
        let mut sign = 1i8;
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&l| !m[l][k].is_zero()) {
                    Some(l) => {
                        m.swap(k, l);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    fn fits_i128(&self) -> bool {
        use num_traits::ToPrimitive;
        self.entries
            .iter()
            .all(|e| e.to_i128().is_some_and(|v| v != i128::MIN))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Smith normal form `S = U * A * V` with unimodular `U`, `V`.
#[derive(Clone, Debug)]
pub struct SNFResult {
    /// Row transform, `rows x rows`, `|det U| = 1`.
    pub u: IntMatrix,
    /// Diagonal form, same shape as the input; nonzero entries come first and
    /// each divides the next.
    pub s: IntMatrix,
    /// Column transform, `cols x cols`, `|det V| = 1`.
    pub v: IntMatrix,
}

impl SNFResult {
    /// Diagonal entries that are nonzero, i.e. the invariant factors.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n)
            .map(|i| self.s.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// SNF with the inverse transforms tracked as well; used internally when
/// explicit kernel bases or quotient generators are needed.
#[derive(Clone, Debug)]
pub(crate) struct SnfExt {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfExt {
    pub fn rank(&self) -> usize {
        let n = self.s.rows().min(self.s.cols());
        (0..n).take_while(|&i| !self.s.get(i, i).is_zero()).count()
    }
}

/// Smith normal form of `a`: `S = U * A * V`.
///
/// Total: any shape, including zero-sized matrices, is accepted.
pub fn snf(a: &IntMatrix) -> SNFResult {
    let out = run_core(a, Track::FORWARD);
    SNFResult {
        u: out.u.expect("row transform requested"),
        s: out.s,
        v: out.v.expect("column transform requested"),
    }
}

pub(crate) fn snf_ext(a: &IntMatrix) -> SnfExt {
    let out = run_core(a, Track::ALL);
    SnfExt {
        u: out.u.expect("row transform requested"),
        s: out.s,
        v: out.v.expect("column transform requested"),
        u_inv: out.u_inv.expect("inverse row transform requested"),
        v_inv: out.v_inv.expect("inverse column transform requested"),
    }
}

/// Invariant factors of `a` (the nonzero SNF diagonal), skipping transform
/// bookkeeping. This is the fast path used on large boundary matrices.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let out = run_core(a, Track::NONE);
    let n = out.s.rows().min(out.s.cols());
    (0..n)
        .map(|i| out.s.get(i, i).clone())
        .take_while(|d| !d.is_zero())
        .collect()
}

/// Rank of `a` over the integers (equivalently over the rationals).
pub fn rank(a: &IntMatrix) -> usize {
    invariant_factors(a).len()
}

/// Determinantal divisors `D_1, ..., D_min(m,n)`: `D_k` is the gcd of all
/// `k x k` minors (zero when every minor vanishes).
///
/// Independent of the elimination path, so it serves as an oracle for
/// [`snf`]: `d_k = D_k / D_{k-1}` with `D_0 = 1`.
pub fn determinantal_divisors(a: &IntMatrix) -> Vec<BigInt> {
    let n = a.rows().min(a.cols());
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let mut g = BigInt::zero();
        for row_set in (0..a.rows()).combinations(k) {
            for col_set in (0..a.cols()).combinations(k) {
                let mut sub = IntMatrix::zeros(k, k);
                for (si, &i) in row_set.iter().enumerate() {
                    for (sj, &j) in col_set.iter().enumerate() {
                        sub.set(si, sj, a.get(i, j).clone());
                    }
                }
                g = g.gcd(&sub.det());
            }
        }
        out.push(g);
    }
    out
}

// --- elimination core -------------------------------------------------------

/// The generic elimination lives in its own module so its entry trait does
/// not collide with the `num_traits` methods used elsewhere in this file.
mod elim {
    use super::IntMatrix;
    use num_bigint::BigInt;
    use std::cmp::Ordering;


    /// Which transform matrices the elimination should maintain.
    #[derive(Clone, Copy, PartialEq, Eq)]
    pub(super) struct Track(u8);

    #[allow(dead_code)]
    impl Track {
        pub(super) const NONE: Self = Self(0);
        pub(super) const FORWARD: Self = Self(1); // U and V
        pub(super) const ALL: Self = Self(3); // U, V and their inverses

        fn forward(self) -> bool {
            self.0 & 1 != 0
        }

        fn inverse(self) -> bool {
            self.0 & 2 != 0
        }
    }

    pub(super) struct CoreOut {
        pub(super) s: IntMatrix,
        pub(super) u: Option<IntMatrix>,
        pub(super) v: Option<IntMatrix>,
        pub(super) u_inv: Option<IntMatrix>,
        pub(super) v_inv: Option<IntMatrix>,
    }

    pub(super) fn run_core(a: &IntMatrix, track: Track) -> CoreOut {
        if a.fits_i128() {
            if let Some(out) = snf_generic::<i128>(a, track) {
                return out;
            }
        }
        snf_generic::<BigInt>(a, track).expect("big-integer elimination cannot overflow")
    }

    /// Entry arithmetic required by the elimination. The `i128` implementation is
    /// checked and signals overflow with `None`; the `BigInt` one never fails.
    trait Entry: Clone + PartialEq + Sized {
        fn from_big(b: &BigInt) -> Option<Self>;
        fn into_big(self) -> BigInt;
        fn zero() -> Self;
        fn one() -> Self;
        fn is_zero(&self) -> bool;
        fn is_unit(&self) -> bool;
        fn is_negative(&self) -> bool;
        fn abs_cmp(&self, other: &Self) -> Ordering;
        fn checked_neg(&self) -> Option<Self>;
        /// `self - q * x`
        fn checked_sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
        fn checked_add(&self, x: &Self) -> Option<Self>;
        /// Nearest-integer quotient: `|self - q * pivot| <= |pivot| / 2`.
        fn balanced_quot(&self, pivot: &Self) -> Option<Self>;
        fn divisible_by(&self, d: &Self) -> bool;
    }

    impl Entry for i128 {
        fn from_big(b: &BigInt) -> Option<Self> {
            use num_traits::ToPrimitive;
            b.to_i128().filter(|&v| v != i128::MIN)
        }
        fn into_big(self) -> BigInt {
            BigInt::from(self)
        }
        fn zero() -> Self {
            0
        }
        fn one() -> Self {
            1
        }
        fn is_zero(&self) -> bool {
            *self == 0
        }
        fn is_unit(&self) -> bool {
            *self == 1 || *self == -1
        }
        fn is_negative(&self) -> bool {
            *self < 0
        }
        fn abs_cmp(&self, other: &Self) -> Ordering {
            self.unsigned_abs().cmp(&other.unsigned_abs())
        }
        fn checked_neg(&self) -> Option<Self> {
            i128::checked_neg(*self)
        }
        fn checked_sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
            self.checked_sub(q.checked_mul(*x)?)
        }
        fn checked_add(&self, x: &Self) -> Option<Self> {
            i128::checked_add(*self, *x)
        }
        fn balanced_quot(&self, pivot: &Self) -> Option<Self> {
            debug_assert!(*pivot != 0);
            let mut q = self / pivot;
            let r = self % pivot;
            if r.unsigned_abs() * 2 > pivot.unsigned_abs() {
                q = q.checked_add(if (r < 0) == (*pivot < 0) { 1 } else { -1 })?;
            }
            Some(q)
        }
        fn divisible_by(&self, d: &Self) -> bool {
            self % d == 0
        }
    }

    impl Entry for BigInt {
        fn from_big(b: &BigInt) -> Option<Self> {
            Some(b.clone())
        }
        fn into_big(self) -> BigInt {
            self
        }
        fn zero() -> Self {
            num_traits::Zero::zero()
        }
        fn one() -> Self {
            num_traits::One::one()
        }
        fn is_zero(&self) -> bool {
            num_traits::Zero::is_zero(self)
        }
        fn is_unit(&self) -> bool {
            num_traits::One::is_one(self.magnitude())
        }
        fn is_negative(&self) -> bool {
            num_traits::Signed::is_negative(self)
        }
        fn abs_cmp(&self, other: &Self) -> Ordering {
            self.magnitude().cmp(other.magnitude())
        }
        fn checked_neg(&self) -> Option<Self> {
            Some(-self)
        }
        fn checked_sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
            Some(self - q * x)
        }
        fn checked_add(&self, x: &Self) -> Option<Self> {
            Some(self + x)
        }
        fn balanced_quot(&self, pivot: &Self) -> Option<Self> {
            let (mut q, r) = num_integer::Integer::div_rem(self, pivot);
            if r.magnitude() * 2u32 > *pivot.magnitude() {
                if num_traits::Signed::is_negative(&r) == num_traits::Signed::is_negative(pivot) {
                    q += 1;
                } else {
                    q -= 1;
                }
            }
            Some(q)
        }
        fn divisible_by(&self, d: &Self) -> bool {
            num_traits::Zero::is_zero(&(self % d))
        }
    }

    /// Working state: the matrix under reduction plus whichever transforms are
    /// tracked. Every mutation goes through the `row_*` / `col_*` methods so the
    /// transform bookkeeping cannot drift from the matrix itself.
    struct Work<T> {
        m: usize,
        n: usize,
        s: Vec<Vec<T>>,
        u: Option<Vec<Vec<T>>>,
        v: Option<Vec<Vec<T>>>,
        u_inv: Option<Vec<Vec<T>>>,
        v_inv: Option<Vec<Vec<T>>>,
    }

    fn dense_identity<T: Entry>(n: usize) -> Vec<Vec<T>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { T::one() } else { T::zero() })
                    .collect()
            })
            .collect()
    }

    impl<T: Entry> Work<T> {
        fn row_swap(&mut self, a: usize, b: usize) {
            if a == b {
                return;
            }
            self.s.swap(a, b);
            if let Some(u) = &mut self.u {
                u.swap(a, b);
            }
            if let Some(ui) = &mut self.u_inv {
                for row in ui.iter_mut() {
                    row.swap(a, b);
                }
            }
        }

        fn col_swap(&mut self, a: usize, b: usize) {
            if a == b {
                return;
            }
            for row in self.s.iter_mut() {
                row.swap(a, b);
            }
            if let Some(v) = &mut self.v {
                for row in v.iter_mut() {
                    row.swap(a, b);
                }
            }
            if let Some(vi) = &mut self.v_inv {
                vi.swap(a, b);
            }
        }

        /// `row_j -= q * row_i` on S and U; `col_i += q * col_j` on U^-1.
        /// Columns of S left of `from` are already zero in both rows.
        fn row_sub_mul(&mut self, j: usize, q: &T, i: usize, from: usize) -> Option<()> {
            for c in from..self.n {
                if !self.s[i][c].is_zero() {
                    self.s[j][c] = self.s[j][c].checked_sub_mul(q, &self.s[i][c])?;
                }
            }
            if let Some(u) = &mut self.u {
                for c in 0..self.m {
                    if !u[i][c].is_zero() {
                        u[j][c] = u[j][c].checked_sub_mul(q, &u[i][c])?;
                    }
                }
            }
            if let Some(ui) = &mut self.u_inv {
                let minus_q = q.checked_neg()?;
                for row in ui.iter_mut() {
                    if !row[j].is_zero() {
                        row[i] = row[i].checked_sub_mul(&minus_q, &row[j])?;
                    }
                }
            }
            Some(())
        }

        /// `col_j -= q * col_i` on S and V; `row_i += q * row_j` on V^-1.
        /// Rows of S above `from` are already zero in both columns.
        fn col_sub_mul(&mut self, j: usize, q: &T, i: usize, from: usize) -> Option<()> {
            for row in self.s.iter_mut().skip(from) {
                if !row[i].is_zero() {
                    row[j] = row[j].checked_sub_mul(q, &row[i])?;
                }
            }
            if let Some(v) = &mut self.v {
                for row in v.iter_mut() {
                    if !row[i].is_zero() {
                        row[j] = row[j].checked_sub_mul(q, &row[i])?;
                    }
                }
            }
            if let Some(vi) = &mut self.v_inv {
                let minus_q = q.checked_neg()?;
                for c in 0..self.n {
                    if !vi[j][c].is_zero() {
                        let upd = vi[i][c].checked_sub_mul(&minus_q, &vi[j][c])?;
                        vi[i][c] = upd;
                    }
                }
            }
            Some(())
        }

        fn row_negate(&mut self, i: usize) -> Option<()> {
            for c in 0..self.n {
                if !self.s[i][c].is_zero() {
                    self.s[i][c] = self.s[i][c].checked_neg()?;
                }
            }
            if let Some(u) = &mut self.u {
                for c in 0..self.m {
                    if !u[i][c].is_zero() {
                        u[i][c] = u[i][c].checked_neg()?;
                    }
                }
            }
            if let Some(ui) = &mut self.u_inv {
                for row in ui.iter_mut() {
                    if !row[i].is_zero() {
                        row[i] = row[i].checked_neg()?;
                    }
                }
            }
            Some(())
        }
    }

    fn snf_generic<T: Entry>(a: &IntMatrix, track: Track) -> Option<CoreOut> {
        let m = a.rows();
        let n = a.cols();
        let s: Vec<Vec<T>> = (0..m)
            .map(|i| {
                (0..n)
                    .map(|j| T::from_big(a.get(i, j)))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;

        let fw = track.forward();
        let inv = track.inverse();
        let mut w = Work {
            m,
            n,
            s,
            u: fw.then(|| dense_identity::<T>(m)),
            v: fw.then(|| dense_identity::<T>(n)),
            u_inv: inv.then(|| dense_identity::<T>(m)),
            v_inv: inv.then(|| dense_identity::<T>(n)),
        };

        let bound = m.min(n);
        'pivots: for t in 0..bound {
            loop {
                // Smallest nonzero entry in the remaining submatrix; a unit is
                // optimal so the scan stops at the first one it sees.
                let mut best: Option<(usize, usize)> = None;
                'scan: for i in t..m {
                    for j in t..n {
                        if w.s[i][j].is_zero() {
                            continue;
                        }
                        if w.s[i][j].is_unit() {
                            best = Some((i, j));
                            break 'scan;
                        }
                        match best {
                            Some((bi, bj)) if w.s[i][j].abs_cmp(&w.s[bi][bj]) != Ordering::Less => {}
                            _ => best = Some((i, j)),
                        }
                    }
                }
                let Some((pi, pj)) = best else {
                    break 'pivots;
                };
                w.row_swap(t, pi);
                w.col_swap(t, pj);

                let mut clear = true;
                for i in t + 1..m {
                    if w.s[i][t].is_zero() {
                        continue;
                    }
                    let q = w.s[i][t].balanced_quot(&w.s[t][t])?;
                    if !q.is_zero() {
                        w.row_sub_mul(i, &q, t, t)?;
                    }
                    if !w.s[i][t].is_zero() {
                        clear = false;
                    }
                }
                if !clear {
                    continue;
                }
                for j in t + 1..n {
                    if w.s[t][j].is_zero() {
                        continue;
                    }
                    let q = w.s[t][j].balanced_quot(&w.s[t][t])?;
                    if !q.is_zero() {
                        w.col_sub_mul(j, &q, t, t)?;
                    }
                    if !w.s[t][j].is_zero() {
                        clear = false;
                    }
                }
                if !clear {
                    continue;
                }

                // Pivot must divide the rest of the submatrix so the diagonal
                // forms a divisibility chain; pull a bad row up and repeat. A
                // unit pivot divides everything, so the scan is skipped.
                let mut fixed = true;
                if !w.s[t][t].is_unit() {
                    'divcheck: for i in t + 1..m {
                        for j in t + 1..n {
                            if !w.s[i][j].is_zero() && !w.s[i][j].divisible_by(&w.s[t][t]) {
                                let minus_one = T::one().checked_neg()?;
                                w.row_sub_mul(t, &minus_one, i, t)?; // row_t += row_i
                                fixed = false;
                                break 'divcheck;
                            }
                        }
                    }
                }
                if fixed {
                    if w.s[t][t].is_negative() {
                        w.row_negate(t)?;
                    }
                    break;
                }
            }
        }

        let to_matrix = |rows: Vec<Vec<T>>| {
            IntMatrix::from_bigint_rows(
                rows.into_iter()
                    .map(|r| r.into_iter().map(Entry::into_big).collect())
                    .collect(),
            )
        };
        Some(CoreOut {
            s: {
                let mut s = IntMatrix::zeros(m, n);
                for (i, row) in w.s.iter().enumerate() {
                    for (j, e) in row.iter().enumerate() {
                        if !e.is_zero() {
                            s.set(i, j, e.clone().into_big());
                        }
                    }
                }
                s
            },
            u: w.u.map(to_matrix),
            v: w.v.map(to_matrix),
            u_inv: w.u_inv.map(to_matrix),
            v_inv: w.v_inv.map(to_matrix),
        })
    }


}

use elim::{run_core, Track};
