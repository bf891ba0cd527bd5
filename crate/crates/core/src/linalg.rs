//! Exact rational linear algebra.
//!
//! Everything here works over arbitrary-precision rationals, so equality
//! tests such as `U ⊆ W` are decided exactly. Linear subspaces are kept in
//! reduced row echelon form, which makes the stored basis canonical: two
//! subspaces are equal iff their stored bases are identical.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};

/// Exact rational scalar.
pub type Scalar = BigRational;

/// Builds a scalar from an integer.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Builds the scalar `num/den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// A vector of `V`, stored by coordinates in the standard basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    /// The `i`-th standard basis vector of `R^n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Standard inner product. Panics on dimension mismatch.
    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.dim(), other.dim(), "dot product dimension mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_squared(&self) -> Scalar {
        self.dot(self)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + c * b).collect())
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector addition dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector subtraction dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Vector> for &Scalar {
    type Output = Vector;

    fn mul(self, rhs: &Vector) -> Vector {
        rhs.scale(self)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from its rows. All rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            check_dim(ncols, row.len())?;
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Builds an `rows x cols` matrix whose rows are the given vectors.
    pub fn from_row_vectors(vectors: &[Vector], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            check_dim(cols, v.dim())?;
            data.extend(v.coords().iter().cloned());
        }
        Ok(Matrix {
            rows: vectors.len(),
            cols,
            data,
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| int(c)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        Vector(
            (0..self.rows)
                .map(|i| {
                    self.data[i * self.cols..(i + 1) * self.cols]
                        .iter()
                        .zip(v.coords())
                        .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    /// `AᵀA = I`, exactly.
    pub fn is_orthogonal(&self) -> bool {
        self.is_square() && self.transpose().mul(self).is_identity()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let pivots = rref_rows(&mut rows, self.cols);
        let m = Matrix {
            rows: self.rows,
            cols: self.cols,
            data: rows.into_iter().flatten().collect(),
        };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `{x : A x = 0}`.
    pub fn null_space(&self) -> LinearSubspace {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free);
            }
            basis.push(Vector(v));
        }
        LinearSubspace::span_unchecked(self.cols, basis)
    }

    /// Span of the columns.
    pub fn column_space(&self) -> LinearSubspace {
        LinearSubspace::span_unchecked(self.rows, self.columns())
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = self.rows().into_iter().map(Vector::into_coords).collect();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            let pivot = rows[c][c].clone();
            det *= &pivot;
            let (upper, lower) = rows.split_at_mut(c + 1);
            let pivot_row = &upper[c];
            for row in lower {
                if row[c].is_zero() {
                    continue;
                }
                let factor = &row[c] / &pivot;
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &factor * p;
                }
            }
        }
        Ok(det)
    }
}

/// Reduces `rows` in place to reduced row echelon form (leading entries 1)
/// and returns the pivot columns. Zero rows are moved to the bottom.
fn rref_rows(rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= &factor * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A linear subspace of `R^n` stored by its canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSubspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl LinearSubspace {
    pub fn zero(n: usize) -> Self {
        LinearSubspace {
            ambient: n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self::span_unchecked(n, (0..n).map(|i| Vector::unit(n, i)).collect())
    }

    /// Smallest subspace of `R^n` containing every input vector.
    pub fn span(n: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            check_dim(n, v.dim())?;
        }
        Ok(Self::span_unchecked(n, vectors.to_vec()))
    }

    pub(crate) fn span_unchecked(n: usize, vectors: Vec<Vector>) -> Self {
        let mut rows: Vec<Vec<Scalar>> = vectors.into_iter().map(Vector::into_coords).collect();
        let pivots = rref_rows(&mut rows, n);
        rows.truncate(pivots.len());
        LinearSubspace {
            ambient: n,
            basis: rows.into_iter().map(Vector).collect(),
            pivots,
        }
    }

    /// Span of the coordinate axes with the given indices.
    pub fn coordinate(n: usize, axes: &[usize]) -> Self {
        Self::span_unchecked(n, axes.iter().map(|&i| Vector::unit(n, i)).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    /// Canonical (RREF) basis rows.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Component of `v` left after eliminating the pivot coordinates.
    fn reduce(&self, v: &Vector) -> Vector {
        let mut w = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = -w[p].clone();
                w = w.add_scaled(&c, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &Vector) -> bool {
        assert_eq!(v.dim(), self.ambient, "membership dimension mismatch");
        self.reduce(v).is_zero()
    }

    pub fn is_subspace_of(&self, other: &LinearSubspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "inclusion dimension mismatch");
        self.dim() <= other.dim() && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn orthogonal_complement(&self) -> LinearSubspace {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        let m = Matrix::from_row_vectors(&self.basis, self.ambient)
            .expect("basis rows share the ambient dimension");
        m.null_space()
    }

    pub fn intersect(&self, other: &LinearSubspace) -> Result<LinearSubspace> {
        check_dim(self.ambient, other.ambient)?;
        let constraints = self
            .orthogonal_complement()
            .sum(&other.orthogonal_complement())?;
        Ok(constraints.orthogonal_complement())
    }

    pub fn sum(&self, other: &LinearSubspace) -> Result<LinearSubspace> {
        check_dim(self.ambient, other.ambient)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Self::span_unchecked(self.ambient, vs))
    }

    /// `self + span{v}`.
    pub fn with_vector(&self, v: &Vector) -> Result<LinearSubspace> {
        check_dim(self.ambient, v.dim())?;
        let mut vs = self.basis.clone();
        vs.push(v.clone());
        Ok(Self::span_unchecked(self.ambient, vs))
    }

    /// Orthogonal projection of `v` onto this subspace.
    pub fn project(&self, v: &Vector) -> Result<Vector> {
        check_dim(self.ambient, v.dim())?;
        if self.is_zero() {
            return Ok(Vector::zeros(self.ambient));
        }
        if self.is_full() {
            return Ok(v.clone());
        }
        // Normal equations: (B Bᵀ) c = B v, projection = Bᵀ c.
        let b = Matrix::from_row_vectors(&self.basis, self.ambient)?;
        let gram = b.mul(&b.transpose());
        let rhs = b.mul_vec(v);
        let (c, kernel) = solve_affine(&gram, &rhs)?.expect("Gram matrix of a basis is invertible");
        debug_assert!(kernel.is_zero());
        Ok(self
            .basis
            .iter()
            .zip(c.coords())
            .fold(Vector::zeros(self.ambient), |acc, (row, ci)| acc.add_scaled(ci, row)))
    }

    /// Image of this subspace under a linear map.
    pub fn image(&self, m: &Matrix) -> Result<LinearSubspace> {
        check_dim(self.ambient, m.ncols())?;
        Ok(Self::span_unchecked(
            m.nrows(),
            self.basis.iter().map(|b| m.mul_vec(b)).collect(),
        ))
    }

    /// First standard basis vector outside this subspace, if any.
    pub fn first_unit_outside(&self) -> Option<Vector> {
        (0..self.ambient)
            .map(|i| Vector::unit(self.ambient, i))
            .find(|e| !self.contains(e))
    }
}

impl fmt::Display for LinearSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

/// Solves `A x = b`. Returns a particular solution and the null space of `A`,
/// or `None` when the system is inconsistent.
pub fn solve_affine(a: &Matrix, b: &Vector) -> Result<Option<(Vector, LinearSubspace)>> {
    check_dim(a.nrows(), b.dim())?;
    let n = a.ncols();
    let mut rows: Vec<Vec<Scalar>> = (0..a.nrows())
        .map(|i| {
            let mut r = a.row(i).into_coords();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = rref_rows(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = rows[i][n].clone();
    }
    Ok(Some((Vector(x), a.null_space())))
}

/// Sign of a nonzero scalar as `±1`, zero for zero.
pub fn signum(x: &Scalar) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    #[test]
    fn span_of_nothing_is_zero() {
        let s = LinearSubspace::span(3, &[]).unwrap();
        assert_eq!(s.dim(), 0);
        assert_eq!(s, LinearSubspace::zero(3));
    }

    #[test]
    fn span_of_dependent_vectors() {
        let s = LinearSubspace::span(2, &[v(&[1, 0]), v(&[2, 0])]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis(), &[v(&[1, 0])]);
    }

    #[test]
    fn span_rref_is_canonical() {
        let s = LinearSubspace::span(3, &[v(&[1, 1, 0]), v(&[1, -1, 0])]).unwrap();
        assert_eq!(s.basis(), &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        assert!(s.contains(&v(&[1, 0, 0])));
        assert!(s.contains(&v(&[0, 1, 0])));
        assert!(!s.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn span_rejects_mixed_dimensions() {
        assert_eq!(
            LinearSubspace::span(3, &[v(&[1, 0])]),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn complements() {
        let e1 = LinearSubspace::coordinate(3, &[0]);
        assert_eq!(e1.orthogonal_complement(), LinearSubspace::coordinate(3, &[1, 2]));
        assert_eq!(LinearSubspace::zero(2).orthogonal_complement(), LinearSubspace::full(2));

        let diag = LinearSubspace::span(3, &[v(&[1, 1, 0])]).unwrap();
        let c = diag.orthogonal_complement();
        let expected = LinearSubspace::span(3, &[v(&[1, -1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(c, expected);
        assert_eq!(c.dim() + diag.dim(), 3);
        for b in c.basis() {
            assert!(b.dot(&v(&[1, 1, 0])).is_zero());
        }
    }

    #[test]
    fn intersections() {
        let a = LinearSubspace::coordinate(3, &[0, 1]);
        let b = LinearSubspace::coordinate(3, &[1, 2]);
        assert_eq!(a.intersect(&b).unwrap(), LinearSubspace::coordinate(3, &[1]));
        assert_eq!(a.intersect(&a).unwrap(), a);

        let p = LinearSubspace::span(2, &[v(&[1, 1])]).unwrap();
        let q = LinearSubspace::span(2, &[v(&[1, -1])]).unwrap();
        assert!(p.intersect(&q).unwrap().is_zero());
    }

    #[test]
    fn sums() {
        let e1 = LinearSubspace::coordinate(2, &[0]);
        let e2 = LinearSubspace::coordinate(2, &[1]);
        assert_eq!(e1.sum(&e2).unwrap(), LinearSubspace::full(2));
        assert_eq!(e1.sum(&LinearSubspace::zero(2)).unwrap(), e1);

        let a = LinearSubspace::span(3, &[v(&[1, 1, 0])]).unwrap();
        let b = LinearSubspace::span(3, &[v(&[1, -1, 0])]).unwrap();
        assert_eq!(a.sum(&b).unwrap(), LinearSubspace::coordinate(3, &[0, 1]));
    }

    #[test]
    fn projections() {
        let e1 = LinearSubspace::coordinate(2, &[0]);
        assert_eq!(e1.project(&v(&[1, 1])).unwrap(), v(&[1, 0]));
        assert_eq!(LinearSubspace::full(2).project(&v(&[3, -7])).unwrap(), v(&[3, -7]));

        let diag = LinearSubspace::span(3, &[v(&[1, 1, 0])]).unwrap();
        assert_eq!(diag.project(&v(&[2, 0, 0])).unwrap(), v(&[1, 1, 0]));
    }

    #[test]
    fn solve_identity_system() {
        let (x, k) = solve_affine(&Matrix::identity(3), &v(&[1, -2, 5])).unwrap().unwrap();
        assert_eq!(x, v(&[1, -2, 5]));
        assert!(k.is_zero());
    }

    #[test]
    fn solve_inconsistent_system() {
        assert!(solve_affine(&Matrix::zeros(2, 2), &v(&[0, 1])).unwrap().is_none());
    }

    #[test]
    fn solve_underdetermined_system() {
        let a = Matrix::from_ints(&[&[0, -2]]).unwrap();
        let (x, k) = solve_affine(&a, &v(&[0])).unwrap().unwrap();
        assert_eq!(x, v(&[0, 0]));
        assert_eq!(k, LinearSubspace::coordinate(2, &[0]));
    }

    #[test]
    fn determinants() {
        assert_eq!(Matrix::identity(4).determinant().unwrap(), int(1));
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(swap.determinant().unwrap(), int(-1));
        let m = Matrix::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).unwrap();
        assert_eq!(m.determinant().unwrap(), int(18));
    }

    #[test]
    fn orthogonality_check() {
        assert!(Matrix::from_ints(&[&[0, -1], &[1, 0]]).unwrap().is_orthogonal());
        assert!(!Matrix::from_ints(&[&[1, 1], &[0, 1]]).unwrap().is_orthogonal());
        let r = Matrix::from_rows(vec![
            vec![frac(3, 5), frac(-4, 5)],
            vec![frac(4, 5), frac(3, 5)],
        ])
        .unwrap();
        assert!(r.is_orthogonal());
    }
}
