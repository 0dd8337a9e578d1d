//! Dense exact linear algebra over a single field.
//!
//! Everything in scope is small (at most a few thousand unknowns), so dense
//! row reduction is the right tool; there are no sparse solvers and no
//! floating point.

use crate::field::{FieldSpec, Scalar};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("matrix entries from more than one field")]
    MixedField,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// A dense row-major matrix of exact scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinAlgError::Shape("ragged rows".into()));
            }
            for s in row {
                if s.field() != field {
                    return Err(LinAlgError::MixedField);
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            field,
            data,
        })
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::Shape(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(LinAlgError::MixedField);
        }
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::Shape("matrix-vector shapes".into()));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] = out[r].add(&a.mul(&v[c]));
            }
        }
        Ok(out)
    }

    /// The unique reduced row echelon form, together with the rank and pivot
    /// columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m.get(row, col).inv();
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).neg();
                    m.add_multiple(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots.len(), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Some solution of `A x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinAlgError> {
        if b.len() != self.rows {
            return Err(LinAlgError::Shape("rhs length != rows".into()));
        }
        for s in b {
            if s.field() != self.field {
                return Err(LinAlgError::MixedField);
            }
        }
        // Row-reduce the augmented matrix.
        let mut aug = Matrix::zero(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (red, _, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &col) in pivots.iter().enumerate() {
            x[col] = red.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// An independent spanning set of `{x : A x = 0}`; its length equals
    /// `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (red, _, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_of_col = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            piv_of_col[c] = Some(r);
        }
        for free in 0..self.cols {
            if piv_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (c, piv) in piv_of_col.iter().enumerate() {
                if let Some(r) = piv {
                    v[c] = red.get(*r, free).neg();
                }
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c).mul(factor);
            self.set(r, c, v);
        }
    }

    /// row[target] += factor * row[source]
    fn add_multiple(&mut self, target: usize, source: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(target, c).add(&self.get(source, c).mul(factor));
            self.set(target, c, v);
        }
    }
}

/// Incrementally tracked row space; used to pick quotient-space
/// representatives.
pub struct SpanTracker {
    field: FieldSpec,
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivot_cols: Vec<usize>,
}

impl SpanTracker {
    pub fn new(field: FieldSpec, cols: usize) -> SpanTracker {
        SpanTracker {
            field,
            cols,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current span; if a nonzero residue remains it
    /// is added to the span and `true` is returned.
    pub fn try_add(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivot_cols) {
            if !v[pc].is_zero() {
                let factor = v[pc].clone();
                for c in 0..self.cols {
                    v[c] = v[c].sub(&factor.mul(&row[c]));
                }
            }
        }
        let Some(pc) = v.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = v[pc].inv();
        for c in 0..self.cols {
            v[c] = v[c].mul(&inv);
        }
        self.rows.push(v);
        self.pivot_cols.push(pc);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut probe = SpanTracker {
            field: self.field,
            cols: self.cols,
            rows: self.rows.clone(),
            pivot_cols: self.pivot_cols.clone(),
        };
        !probe.try_add(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        FieldSpec::Rational.from_i64(v)
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(FieldSpec::Rational, 3);
        let (r, rank, _) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 3);

        let z = Matrix::zero(FieldSpec::Rational, 2, 4);
        let (r, rank, _) = z.rref();
        assert_eq!(r, z);
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        // [[1,2],[2,4]] -> [[1,2],[0,0]], rank 1 (hand row-reduction)
        let m = Matrix::from_rows(FieldSpec::Rational, vec![vec![q(1), q(2)], vec![q(2), q(4)]])
            .unwrap();
        let (r, rank, pivots) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(pivots, vec![0]);
        let expect =
            Matrix::from_rows(FieldSpec::Rational, vec![vec![q(1), q(2)], vec![q(0), q(0)]])
                .unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn rref_idempotent() {
        let m = Matrix::from_rows(
            FieldSpec::Prime(7),
            vec![
                vec![
                    FieldSpec::Prime(7).from_i64(3),
                    FieldSpec::Prime(7).from_i64(5),
                    FieldSpec::Prime(7).from_i64(1),
                ],
                vec![
                    FieldSpec::Prime(7).from_i64(6),
                    FieldSpec::Prime(7).from_i64(3),
                    FieldSpec::Prime(7).from_i64(2),
                ],
            ],
        )
        .unwrap();
        let (r1, _, _) = m.rref();
        let (r2, _, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = Matrix::identity(FieldSpec::Rational, 2);
        let b = vec![q(5), q(-3)];
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);

        let a = Matrix::from_rows(FieldSpec::Rational, vec![vec![q(1), q(1)]]).unwrap();
        let x = a.solve(&[q(1)]).unwrap().unwrap();
        assert_eq!(x[0].add(&x[1]), q(1));

        let z = Matrix::zero(FieldSpec::Rational, 1, 1);
        assert_eq!(z.solve(&[q(1)]).unwrap(), None);
    }

    #[test]
    fn kernel_dimensions() {
        let id = Matrix::identity(FieldSpec::Rational, 4);
        assert!(id.kernel_basis().is_empty());

        let z = Matrix::zero(FieldSpec::Rational, 3, 3);
        assert_eq!(z.kernel_basis().len(), 3);

        let a = Matrix::from_rows(FieldSpec::Rational, vec![vec![q(1), q(2)]]).unwrap();
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!(v[0].add(&q(2).mul(&v[1])).is_zero());
    }

    #[test]
    fn mixed_field_rejected() {
        let err = Matrix::from_rows(
            FieldSpec::Rational,
            vec![vec![FieldSpec::Prime(5).one()]],
        )
        .unwrap_err();
        assert_eq!(err, LinAlgError::MixedField);
    }

    #[test]
    fn span_tracker() {
        let mut t = SpanTracker::new(FieldSpec::Rational, 3);
        assert!(t.try_add(&[q(1), q(1), q(0)]));
        assert!(t.try_add(&[q(0), q(1), q(0)]));
        assert!(!t.try_add(&[q(2), q(3), q(0)]));
        assert!(t.contains(&[q(1), q(0), q(0)]));
        assert!(!t.contains(&[q(0), q(0), q(1)]));
    }
}
