//! Dense exact matrices and deterministic Gaussian elimination.
//!
//! Pivoting is fixed (leftmost pivot column, first nonzero row from the top),
//! so every kernel basis, solution and reduced form is reproducible across
//! runs. Empty shapes (0×n, n×0) are legal; zero-dimensional Hom spaces
//! occur all over the representation-theoretic checks.

use std::fmt;

use crate::field::{Field, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field: field.clone(),
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            field: field.clone(),
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            field: field.clone(),
            entries,
        }
    }

    /// Integer-entry convenience constructor, row-major.
    pub fn from_ints(field: &Field, rows: usize, cols: usize, data: &[i64]) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            rows,
            cols,
            field: field.clone(),
            entries: data.iter().map(|&n| field.from_int(n)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.clone(),
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.clone(),
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Matrix::zero(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + &(a * other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    let e = self.get(i, j);
                    if !e.is_zero() {
                        acc = &acc + &(e * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(&self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut acc = self.field.zero();
        for i in 0..self.rows {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// `Some(c)` when the matrix equals `c * identity`.
    pub fn scalar_multiple_of_identity(&self) -> Option<Scalar> {
        if self.rows != self.cols {
            return None;
        }
        if self.rows == 0 {
            return Some(self.field.zero());
        }
        let c = self.get(0, 0).clone();
        let zero = self.field.zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expect = if i == j { &c } else { &zero };
                if self.get(i, j) != expect {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Row-reduce in place to reduced row echelon form; returns pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..self.cols {
            if pr >= self.rows {
                break;
            }
            // first nonzero row at or below pr (deterministic pivoting)
            let Some(src) = (pr..self.rows).find(|&r| !self.get(r, pc).is_zero()) else {
                continue;
            };
            if src != pr {
                for j in 0..self.cols {
                    self.entries.swap(src * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = self.get(pr, pc).inverse().expect("pivot is nonzero");
            for j in pc..self.cols {
                let v = self.get(pr, j) * &inv;
                self.set(pr, j, v);
            }
            for r in 0..self.rows {
                if r == pr || self.get(r, pc).is_zero() {
                    continue;
                }
                let factor = self.get(r, pc).clone();
                for j in pc..self.cols {
                    let v = self.get(r, j) - &(&factor * self.get(pr, j));
                    self.set(r, j, v);
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, as column vectors. Deterministic: one
    /// vector per free column, in ascending column order, with the free
    /// coordinate set to one.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Particular solution of `self * x = b` with free variables set to zero;
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let rhs = Matrix::from_fn(&self.field, self.rows, 1, |i, _| b[i].clone());
        let mut aug = self.hstack(&rhs);
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Solve `self * X = rhs` column by column (free variables zero);
    /// `None` when any column is inconsistent.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows());
        let mut aug = self.hstack(rhs);
        let pivots = aug.rref_in_place();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(&self.field, self.cols, rhs.cols());
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols() {
                x.set(p, j, aug.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(&self.field, n));
        let pivots = aug.rref_in_place();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(Matrix::from_fn(&self.field, n, n, |i, j| {
            aug.get(i, n + j).clone()
        }))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let row: Vec<String> =
                    (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", row.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// A subspace of row vectors, stored as a reduced-row-echelon basis so that
/// equal subspaces compare equal structurally.
#[derive(Clone, PartialEq, Eq)]
pub struct RowSpace {
    field: Field,
    ambient: usize,
    /// RREF basis; every row is nonzero.
    basis: Matrix,
}

impl RowSpace {
    pub fn zero(field: &Field, ambient: usize) -> RowSpace {
        RowSpace {
            field: field.clone(),
            ambient,
            basis: Matrix::zero(field, 0, ambient),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> RowSpace {
        RowSpace::span(field, ambient, Matrix::identity(field, ambient))
    }

    pub fn span_rows(field: &Field, ambient: usize, rows: &[Vec<Scalar>]) -> RowSpace {
        if rows.is_empty() {
            return RowSpace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, rows.to_vec());
        RowSpace::span(field, ambient, m)
    }

    pub fn span(field: &Field, ambient: usize, m: Matrix) -> RowSpace {
        assert_eq!(m.cols(), ambient);
        let (r, pivots) = m.rref();
        let basis = Matrix::from_fn(field, pivots.len(), ambient, |i, j| r.get(i, j).clone());
        RowSpace {
            field: field.clone(),
            ambient,
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.basis.rows()).map(|i| self.basis.row(i)).collect()
    }

    /// Reduce `v` modulo the basis; the result is zero iff `v` is a member.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for i in 0..self.basis.rows() {
            let p = (0..self.ambient)
                .find(|&j| self.basis.get(i, j).is_one())
                .expect("RREF row has a pivot");
            if !w[p].is_zero() {
                let c = w[p].clone();
                for j in 0..self.ambient {
                    w[j] = &w[j] - &(&c * self.basis.get(i, j));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        (0..other.basis.rows()).all(|i| self.contains(&other.basis.row(i)))
    }

    pub fn sum(&self, other: &RowSpace) -> RowSpace {
        assert_eq!(self.ambient, other.ambient);
        RowSpace::span(&self.field, self.ambient, self.basis.vstack(&other.basis))
    }

    /// Intersection via the Zassenhaus block trick.
    pub fn intersect(&self, other: &RowSpace) -> RowSpace {
        assert_eq!(self.ambient, other.ambient);
        let n = self.ambient;
        let a = &self.basis;
        let b = &other.basis;
        let block = Matrix::from_fn(&self.field, a.rows() + b.rows(), 2 * n, |i, j| {
            if i < a.rows() {
                a.get(i, j % n).clone()
            } else if j < n {
                b.get(i - a.rows(), j).clone()
            } else {
                self.field.zero()
            }
        });
        let (r, pivots) = block.rref();
        let mut rows = Vec::new();
        for (row, &p) in pivots.iter().enumerate() {
            if p >= n {
                rows.push((0..n).map(|j| r.get(row, n + j).clone()).collect());
            }
        }
        if rows.is_empty() {
            RowSpace::zero(&self.field, n)
        } else {
            RowSpace::span_rows(&self.field, n, &rows)
        }
    }

    /// The space of vectors annihilated by every basis row (viewed as linear
    /// functionals on the ambient space).
    pub fn annihilator(&self) -> RowSpace {
        let cols: Vec<Vec<Scalar>> = self.basis.kernel_basis();
        RowSpace::span_rows(&self.field, self.ambient, &cols)
    }

    /// Positions of the non-pivot coordinates: the elimination-order
    /// complement used to build quotient sections.
    pub fn free_positions(&self) -> Vec<usize> {
        let mut pivot = vec![false; self.ambient];
        for i in 0..self.basis.rows() {
            let p = (0..self.ambient)
                .find(|&j| self.basis.get(i, j).is_one())
                .expect("RREF row has a pivot");
            pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !pivot[j]).collect()
    }
}

impl fmt::Debug for RowSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RowSpace(dim {} in {}^{})",
            self.dim(),
            self.field,
            self.ambient
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn kernel_of_identity_is_empty() {
        let q = Field::rationals();
        assert!(Matrix::identity(&q, 3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_is_standard_basis() {
        let f3 = Field::prime(3).unwrap();
        let basis = Matrix::zero(&f3, 2, 2).kernel_basis();
        assert_eq!(basis.len(), 2);
        assert!(basis[0][0].is_one() && basis[0][1].is_zero());
        assert!(basis[1][0].is_zero() && basis[1][1].is_one());
    }

    #[test]
    fn kernel_of_rank_one_matrix_over_f3() {
        let f3 = Field::prime(3).unwrap();
        let m = Matrix::from_ints(&f3, 2, 2, &[1, 1, 2, 2]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        // the kernel vector is annihilated and spans (1, -1)
        let img = m.apply(&basis[0]);
        assert!(img.iter().all(Scalar::is_zero));
        assert_eq!(&basis[0][0] + &basis[0][1], f3.zero());
        assert!(!basis[0][0].is_zero());
    }

    #[test]
    fn solve_upper_triangular_f5() {
        let f5 = Field::prime(5).unwrap();
        let m = Matrix::from_ints(&f5, 2, 2, &[1, 1, 0, 1]);
        let b = vec![f5.from_int(3), f5.from_int(2)];
        let x = m.solve(&b).unwrap();
        assert_eq!(x, vec![f5.from_int(1), f5.from_int(2)]);
        assert_eq!(m.apply(&x), b);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let q = Field::rationals();
        let m = Matrix::zero(&q, 2, 2);
        assert!(m.solve(&[q.one(), q.zero()]).is_none());
        assert_eq!(m.solve(&[q.zero(), q.zero()]).unwrap(), vec![q.zero(); 2]);
    }

    #[test]
    fn rank_of_proportional_rows_is_one() {
        let q = Field::rationals();
        let m = Matrix::from_ints(&q, 2, 2, &[1, 2, 2, 4]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel_basis().len(), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let f7 = Field::prime(7).unwrap();
        let m = Matrix::from_ints(&f7, 3, 3, &[1, 2, 0, 0, 1, 3, 4, 0, 1]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn empty_shapes_are_legal() {
        let q = Field::rationals();
        let a = Matrix::zero(&q, 0, 3);
        let b = Matrix::zero(&q, 3, 0);
        assert_eq!(a.mul(&b).rows(), 0);
        assert_eq!(b.mul(&a).rows(), 3);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.kernel_basis().len(), 3);
        assert_eq!(b.kernel_basis().len(), 0);
    }

    #[test]
    fn rowspace_intersection_and_sum() {
        let q = Field::rationals();
        let e1 = vec![q.one(), q.zero(), q.zero()];
        let e2 = vec![q.zero(), q.one(), q.zero()];
        let e3 = vec![q.zero(), q.zero(), q.one()];
        let a = RowSpace::span_rows(&q, 3, &[e1.clone(), e2.clone()]);
        let b = RowSpace::span_rows(&q, 3, &[e2.clone(), e3.clone()]);
        let cap = a.intersect(&b);
        assert_eq!(cap.dim(), 1);
        assert!(cap.contains(&e2));
        let sum = a.sum(&b);
        assert_eq!(sum.dim(), 3);
        assert!(sum.contains(&e1) && sum.contains(&e3));
    }

    #[test]
    fn annihilator_dims_add_up() {
        let f3 = Field::prime(3).unwrap();
        let v = vec![f3.one(), f3.one(), f3.from_int(2)];
        let s = RowSpace::span_rows(&f3, 3, &[v]);
        let ann = s.annihilator();
        assert_eq!(s.dim() + ann.dim(), 3);
        for row in ann.basis_rows() {
            let dot = row
                .iter()
                .zip(s.basis_rows()[0].iter())
                .fold(f3.zero(), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
    }
}
