//! Dense exact matrices over a [`ScalarRing`].
//!
//! Shape mismatches in the arithmetic operators are programming errors and
//! panic, like slice indexing; callers that take user input (objects and
//! morphisms) validate shapes up front and return [`Error`]s.

use crate::error::{Error, Result};
use crate::scalars::{is_positive, Scalar, ScalarRing};

/// Row pivot and column order used by echelon reduction.
///
/// The reduced row echelon form is unique, so the choice of row pivot alone
/// never changes a kernel basis. `ReverseColumns` eliminates columns from
/// the right, which picks a different set of free variables and therefore
/// a different (but equally valid) basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Pivoting {
    /// Largest absolute numerator in the column, lowest row index on ties.
    #[default]
    MaxNumerator,
    /// Same row rule, columns processed right to left.
    ReverseColumns,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: ScalarRing,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivot_cols: Vec<usize>,
}

impl Matrix {
    pub fn zeros(ring: ScalarRing, rows: usize, cols: usize) -> Matrix {
        Matrix { ring, rows, cols, data: vec![Scalar::zero(ring); rows * cols] }
    }

    pub fn identity(ring: ScalarRing, n: usize) -> Matrix {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one(ring);
        }
        m
    }

    pub fn from_vec(ring: ScalarRing, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.ring() != ring) {
            return Err(Error::RingMismatch { expected: ring, found: bad.ring() });
        }
        Ok(Matrix { ring, rows, cols, data })
    }

    pub fn from_rows(ring: ScalarRing, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Matrix::from_vec(ring, n, m, rows.into_iter().flatten().collect())
    }

    /// Convenience for tests and examples: integer entries.
    pub fn from_ints(ring: ScalarRing, rows: &[&[i64]]) -> Matrix {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::from_int(ring, v).expect("integer fits ring")).collect())
            .collect();
        Matrix::from_rows(ring, rows).expect("well-formed rows")
    }

    pub fn from_fn(
        ring: ScalarRing,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                assert_eq!(v.ring(), ring, "entry ({i},{j}) in wrong ring");
                data.push(v);
            }
        }
        Matrix { ring, rows, cols, data }
    }

    pub fn diagonal(ring: ScalarRing, entries: Vec<Scalar>) -> Matrix {
        let n = entries.len();
        let mut m = Matrix::zeros(ring, n, n);
        for (i, v) in entries.into_iter().enumerate() {
            assert_eq!(v.ring(), ring);
            m.data[i * n + i] = v;
        }
        m
    }

    pub fn ring(&self) -> ScalarRing {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        assert_eq!(v.ring(), self.ring);
        self.data[i * self.cols + j] = v;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn map(&self, ring: ScalarRing, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Matrix> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Matrix::from_vec(ring, self.rows, self.cols, data)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// `A‡ᵀ`: transpose with the involution applied entrywise.
    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.ring, self.cols, self.rows, |i, j| self.get(j, i).involute())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in product");
        assert_eq!(
            self.cols, rhs.rows,
            "shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let zero = Scalar::zero(self.ring);
        Matrix::from_fn(self.ring, self.rows, rhs.cols, |i, j| {
            let mut acc = zero.clone();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = rhs.get(k, j);
                if b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            acc
        })
    }

    fn zip(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in entrywise operation");
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, |a, b| a + b)
    }

    /// Panics for rings without negation.
    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| s * a).collect(),
        }
    }

    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in Kronecker product");
        let (r, c) = (rhs.rows, rhs.cols);
        Matrix::from_fn(self.ring, self.rows * r, self.cols * c, |i, j| {
            self.get(i / r, j / c) * rhs.get(i % r, j % c)
        })
    }

    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in block sum");
        let zero = Scalar::zero(self.ring);
        Matrix::from_fn(self.ring, self.rows + rhs.rows, self.cols + rhs.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => rhs.get(i - self.rows, j - self.cols).clone(),
                _ => zero.clone(),
            }
        })
    }

    /// `[self rhs]`
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        Matrix::from_fn(self.ring, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    /// `[self; rhs]`
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols);
        Matrix::from_fn(self.ring, self.rows + rhs.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                rhs.get(i - self.rows, j).clone()
            }
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.ring, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn leading_block(&self, k: usize) -> Matrix {
        Matrix::from_fn(self.ring, k, k, |i, j| self.get(i, j).clone())
    }

    fn reverse_columns(&self) -> Matrix {
        Matrix::from_fn(self.ring, self.rows, self.cols, |i, j| self.get(i, self.cols - 1 - j).clone())
    }

    fn reverse_rows(&self) -> Matrix {
        Matrix::from_fn(self.ring, self.rows, self.cols, |i, j| self.get(self.rows - 1 - i, j).clone())
    }

    fn require_field(&self) -> Result<()> {
        if self.ring.is_field() {
            Ok(())
        } else {
            Err(Error::NotAField(self.ring))
        }
    }

    /// Gauss–Jordan reduction with the `MaxNumerator` row rule.
    pub fn rref(&self) -> Result<Echelon> {
        self.require_field()?;
        let mut a = self.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let mut best: Option<usize> = None;
            for r in row..a.rows {
                let v = a.get(r, col);
                if v.is_zero() {
                    continue;
                }
                match best {
                    Some(b) if a.get(b, col).pivot_weight() >= v.pivot_weight() => {}
                    _ => best = Some(r),
                }
            }
            let Some(p) = best else { continue };
            a.swap_rows(row, p);
            let inv = a.get(row, col).invert()?;
            for j in 0..a.cols {
                let v = a.get(row, j) * &inv;
                a.data[row * a.cols + j] = v;
            }
            for r in 0..a.rows {
                if r == row {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..a.cols {
                    let v = a.get(r, j) - &(&factor * a.get(row, j));
                    a.data[r * a.cols + j] = v;
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        Ok(Echelon { reduced: a, pivot_cols })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.pivot_cols.len())
    }

    /// Columns form a basis of `{ x : A x = 0 }`, one per free variable.
    pub fn nullspace(&self, pivoting: Pivoting) -> Result<Matrix> {
        match pivoting {
            Pivoting::MaxNumerator => self.nullspace_forward(),
            Pivoting::ReverseColumns => Ok(self.reverse_columns().nullspace_forward()?.reverse_rows()),
        }
    }

    fn nullspace_forward(&self) -> Result<Matrix> {
        let Echelon { reduced, pivot_cols } = self.rref()?;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Matrix::zeros(self.ring, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.data[f * free.len() + k] = Scalar::one(self.ring);
            for (r, &p) in pivot_cols.iter().enumerate() {
                let v = -reduced.get(r, f);
                basis.data[p * free.len() + k] = v;
            }
        }
        Ok(basis)
    }

    /// Columns form a basis of the column space: the pivot columns of `self`.
    pub fn column_space(&self, pivoting: Pivoting) -> Result<Matrix> {
        match pivoting {
            Pivoting::MaxNumerator => {
                let e = self.rref()?;
                Ok(self.select_columns(&e.pivot_cols))
            }
            Pivoting::ReverseColumns => {
                let e = self.reverse_columns().rref()?;
                let mut cols: Vec<usize> = e.pivot_cols.iter().map(|c| self.cols - 1 - c).collect();
                cols.sort_unstable();
                Ok(self.select_columns(&cols))
            }
        }
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.require_field()?;
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let aug = self.hstack(&Matrix::identity(self.ring, n)).rref()?;
        if aug.pivot_cols.len() < n || aug.pivot_cols[n - 1] != n - 1 {
            return Err(Error::NoInverse("matrix is singular".into()));
        }
        Ok(Matrix::from_fn(self.ring, n, n, |i, j| aug.reduced.get(i, n + j).clone()))
    }

    /// Determinant by Bareiss fraction-free elimination (exact division of
    /// each step by the previous pivot), with row swaps on zero pivots.
    pub fn determinant(&self) -> Result<Scalar> {
        self.require_field()?;
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let one = Scalar::one(self.ring);
        if n == 0 {
            return Ok(one);
        }
        let mut a = self.clone();
        let mut prev = one.clone();
        let mut negate = false;
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        negate = !negate;
                    }
                    None => return Ok(Scalar::zero(self.ring)),
                }
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&pivot * a.get(i, j)) - &(a.get(i, k) * a.get(k, j));
                    a.data[i * n + j] = num.checked_div(&prev)?;
                }
                a.data[i * n + k] = Scalar::zero(self.ring);
            }
            prev = pivot;
        }
        let det = a.get(n - 1, n - 1).clone();
        Ok(if negate { -&det } else { det })
    }

    /// Determinants of the leading `k x k` blocks, `k = 1..=n`.
    ///
    /// One Bareiss pass without row exchanges: the `k`-th pivot is the `k`-th
    /// leading minor. After a zero pivot the remaining minors are computed
    /// one block at a time.
    pub fn leading_principal_minors(&self) -> Result<Vec<Scalar>> {
        self.require_field()?;
        if !self.is_square() {
            return Err(Error::Dimension("minors of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut prev = Scalar::one(self.ring);
        let mut minors = Vec::with_capacity(n);
        for k in 0..n {
            let pivot = a.get(k, k).clone();
            if pivot.is_zero() {
                for size in k + 1..=n {
                    minors.push(self.leading_block(size).determinant()?);
                }
                return Ok(minors);
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&pivot * a.get(i, j)) - &(a.get(i, k) * a.get(k, j));
                    a.data[i * n + j] = num.checked_div(&prev)?;
                }
            }
            minors.push(pivot.clone());
            prev = pivot;
        }
        Ok(minors)
    }

    /// Positive-definiteness of a Hermitian matrix via leading principal
    /// minors (Sylvester's criterion), each tested with the ring's positivity.
    pub fn is_positive_definite(&self) -> Result<bool> {
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        Ok(self.leading_principal_minors()?.iter().all(|m| !m.is_zero() && is_positive(m)))
    }

    /// Exact definiteness of a Hermitian matrix by symmetric elimination.
    ///
    /// A zero diagonal pivot is accepted only when its whole row is zero;
    /// otherwise a negative 2x2 principal minor exists.
    pub fn definiteness(&self) -> Result<Definiteness> {
        self.require_field()?;
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let n = self.rows;
        let mut w = self.clone();
        let mut active: Vec<usize> = (0..n).collect();
        let mut strict = true;
        while let Some(&k) = active.first() {
            active.remove(0);
            let d = w.get(k, k).clone();
            if !is_positive(&d) {
                return Ok(Definiteness::Indefinite);
            }
            if d.is_zero() {
                if active.iter().any(|&j| !w.get(k, j).is_zero()) {
                    return Ok(Definiteness::Indefinite);
                }
                strict = false;
                continue;
            }
            let inv = d.invert()?;
            for &i in &active {
                let wik = w.get(i, k).clone();
                if wik.is_zero() {
                    continue;
                }
                let scaled = &wik * &inv;
                for &j in &active {
                    let v = w.get(i, j) - &(&scaled * w.get(k, j));
                    w.data[i * n + j] = v;
                }
            }
        }
        Ok(if strict { Definiteness::PositiveDefinite } else { Definiteness::PositiveSemidefinite })
    }

    pub fn is_positive_semidefinite(&self) -> Result<bool> {
        Ok(self.definiteness()? != Definiteness::Indefinite)
    }

    /// Copy of a `Nat`/`Int` matrix over `Rat`, for rank and determinant tests.
    pub fn to_rational(&self) -> Matrix {
        if self.ring.is_field() {
            return self.clone();
        }
        Matrix::from_fn(ScalarRing::Rat, self.rows, self.cols, |i, j| {
            let q = self.get(i, j).as_rational().expect("integral entry");
            Scalar::Rat(q)
        })
    }
}

impl std::fmt::Display for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}
