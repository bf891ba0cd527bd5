//! Points of `E`, and affine subspaces of both `E` and `V`.
//!
//! `E` is identified with `V` through a single fixed basepoint (the point
//! with all coordinates zero), but the API keeps points and vectors apart:
//! `point - point` is a vector and `point + vector` is a point.

use std::fmt;
use std::ops::{Add, Sub};

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::linalg::{solve_affine, LinearSubspace, Matrix, Scalar, Vector};

/// A point of `E`, by coordinates relative to the global basepoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(Vector::from_ints(coords).into_coords())
    }

    /// The global basepoint.
    pub fn origin(n: usize) -> Self {
        Point(vec![Scalar::zero(); n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    /// The vector from the basepoint to this point.
    pub fn position(&self) -> Vector {
        Vector::new(self.0.clone())
    }

    pub fn at(position: Vector) -> Self {
        Point(position.into_coords())
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let half = Scalar::new(1.into(), 2.into());
        self + &(other - self).scale(&half)
    }
}

impl Sub for &Point {
    type Output = Vector;

    fn sub(self, rhs: &Point) -> Vector {
        &self.position() - &rhs.position()
    }
}

impl Add<&Vector> for &Point {
    type Output = Point;

    fn add(self, rhs: &Vector) -> Point {
        Point::at(&self.position() + rhs)
    }
}

impl Sub<&Vector> for &Point {
    type Output = Point;

    fn sub(self, rhs: &Vector) -> Point {
        Point::at(&self.position() - rhs)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.position())
    }
}

/// Affine subspace `U + mu` of `V` in standard form (`mu ∈ U⊥`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineSubspaceV {
    dir: LinearSubspace,
    mu: Vector,
}

impl AffineSubspaceV {
    /// Standard form of `U + shift`: the shift is replaced by its component
    /// orthogonal to `U`.
    pub fn standard_form(dir: LinearSubspace, shift: &Vector) -> Result<Self> {
        let along = dir.project(shift)?;
        Ok(AffineSubspaceV {
            mu: shift - &along,
            dir,
        })
    }

    pub fn linear(dir: LinearSubspace) -> Self {
        let n = dir.ambient();
        AffineSubspaceV {
            dir,
            mu: Vector::zeros(n),
        }
    }

    pub fn point(v: Vector) -> Self {
        AffineSubspaceV {
            dir: LinearSubspace::zero(v.dim()),
            mu: v,
        }
    }

    pub fn ambient(&self) -> usize {
        self.dir.ambient()
    }

    pub fn direction(&self) -> &LinearSubspace {
        &self.dir
    }

    /// The minimal-length element.
    pub fn mu(&self) -> &Vector {
        &self.mu
    }

    pub fn dim(&self) -> usize {
        self.dir.dim()
    }

    pub fn is_linear(&self) -> bool {
        self.mu.is_zero()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.dir.contains(&(v - &self.mu))
    }

    pub fn is_subset_of(&self, other: &AffineSubspaceV) -> bool {
        self.dir.is_subspace_of(&other.dir) && other.contains(&self.mu)
    }

    /// Smallest linear subspace containing the set.
    pub fn span(&self) -> LinearSubspace {
        self.dir.with_vector(&self.mu).expect("mu lives in the ambient space")
    }

    /// Vectors orthogonal to every element, i.e. `Span(M)⊥`.
    pub fn perp(&self) -> LinearSubspace {
        self.span().orthogonal_complement()
    }

    pub fn intersect(&self, other: &AffineSubspaceV) -> Result<Option<AffineSubspaceV>> {
        check_dim(self.ambient(), other.ambient())?;
        let (a, b) = stacked_constraints(
            [(&self.dir, &self.mu), (&other.dir, &other.mu)],
            self.ambient(),
        );
        Ok(solve_affine(&a, &b)?
            .map(|(x, kernel)| AffineSubspaceV::standard_form(kernel, &x).expect("dims agree")))
    }

    /// Smallest affine subspace containing both.
    pub fn hull(&self, other: &AffineSubspaceV) -> Result<AffineSubspaceV> {
        check_dim(self.ambient(), other.ambient())?;
        let dir = self
            .dir
            .sum(&other.dir)?
            .with_vector(&(&other.mu - &self.mu))?;
        AffineSubspaceV::standard_form(dir, &self.mu)
    }
}

impl fmt::Display for AffineSubspaceV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}", self.mu, self.dir)
    }
}

/// Builds the stacked linear system `N_i x = N_i p_i` describing an
/// intersection of affine subspaces, where `N_i` spans `Dir_i⊥`.
fn stacked_constraints<'a>(
    parts: impl IntoIterator<Item = (&'a LinearSubspace, &'a Vector)>,
    n: usize,
) -> (Matrix, Vector) {
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (dir, p) in parts {
        for normal in dir.orthogonal_complement().basis() {
            rhs.push(normal.dot(p));
            rows.push(normal.clone());
        }
    }
    let a = Matrix::from_row_vectors(&rows, n).expect("normals share the ambient dimension");
    (a, Vector::new(rhs))
}

/// Nonempty affine subspace of `E`: canonical point plus direction space.
///
/// The canonical point is the unique point whose position vector lies in
/// `Dir(B)⊥`, so derived equality is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineSubspaceE {
    point: Point,
    dir: LinearSubspace,
}

impl AffineSubspaceE {
    pub fn new(through: &Point, dir: LinearSubspace) -> Result<Self> {
        check_dim(dir.ambient(), through.dim())?;
        let pos = through.position();
        let along = dir.project(&pos)?;
        Ok(AffineSubspaceE {
            point: Point::at(&pos - &along),
            dir,
        })
    }

    pub fn whole(n: usize) -> Self {
        AffineSubspaceE {
            point: Point::origin(n),
            dir: LinearSubspace::full(n),
        }
    }

    pub fn singleton(p: Point) -> Self {
        let n = p.dim();
        AffineSubspaceE {
            point: p,
            dir: LinearSubspace::zero(n),
        }
    }

    /// Hyperplane `{x : <x, normal> = offset}`.
    pub fn hyperplane(normal: &Vector, offset: &Scalar) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroRoot);
        }
        let n = normal.dim();
        let dir = LinearSubspace::span(n, std::slice::from_ref(normal))?.orthogonal_complement();
        let through = Point::at(normal.scale(&(offset / normal.norm_squared())));
        AffineSubspaceE::new(&through, dir)
    }

    /// Solution set of `A x = b`, or `None` if it is empty.
    pub fn solutions(a: &Matrix, b: &Vector) -> Result<Option<Self>> {
        Ok(solve_affine(a, b)?.map(|(x, kernel)| {
            AffineSubspaceE::new(&Point::at(x), kernel).expect("dims agree")
        }))
    }

    pub fn ambient(&self) -> usize {
        self.dir.ambient()
    }

    /// Canonical representative point.
    pub fn point(&self) -> &Point {
        &self.point
    }

    pub fn direction(&self) -> &LinearSubspace {
        &self.dir
    }

    pub fn dim(&self) -> usize {
        self.dir.dim()
    }

    pub fn codim(&self) -> usize {
        self.dir.codim()
    }

    pub fn is_whole(&self) -> bool {
        self.dir.is_full()
    }

    pub fn contains_point(&self, x: &Point) -> Result<bool> {
        check_dim(self.ambient(), x.dim())?;
        Ok(self.dir.contains(&(x - &self.point)))
    }

    pub fn is_subset_of(&self, other: &AffineSubspaceE) -> bool {
        self.dir.is_subspace_of(&other.dir)
            && other.dir.contains(&(&self.point - &other.point))
    }

    /// `B1 ∩ B2`, or `None` when disjoint.
    pub fn intersect(&self, other: &AffineSubspaceE) -> Result<Option<AffineSubspaceE>> {
        check_dim(self.ambient(), other.ambient())?;
        let p1 = self.point.position();
        let p2 = other.point.position();
        let (a, b) = stacked_constraints([(&self.dir, &p1), (&other.dir, &p2)], self.ambient());
        AffineSubspaceE::solutions(&a, &b)
    }

    /// Affine hull of the union.
    pub fn hull(&self, other: &AffineSubspaceE) -> Result<AffineSubspaceE> {
        check_dim(self.ambient(), other.ambient())?;
        let dir = self
            .dir
            .sum(&other.dir)?
            .with_vector(&(&other.point - &self.point))?;
        AffineSubspaceE::new(&self.point, dir)
    }

    /// Same point set through `self` but with extra directions adjoined.
    pub fn extend(&self, extra: &LinearSubspace) -> Result<AffineSubspaceE> {
        AffineSubspaceE::new(&self.point, self.dir.sum(extra)?)
    }

    /// Image under `x ↦ A x + b`.
    pub fn image(&self, linear: &Matrix, translation: &Vector) -> Result<AffineSubspaceE> {
        let p = Point::at(&linear.mul_vec(&self.point.position()) + translation);
        AffineSubspaceE::new(&p, self.dir.image(linear)?)
    }
}

impl fmt::Display for AffineSubspaceE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}", self.point, self.dir)
    }
}

/// Smallest affine subspace of `E` containing the points.
pub fn affine_hull(points: &[Point]) -> Result<AffineSubspaceE> {
    let first = points.first().ok_or(Error::EmptyInput("affine hull of no points"))?;
    let n = first.dim();
    let mut diffs = Vec::with_capacity(points.len());
    for p in &points[1..] {
        check_dim(n, p.dim())?;
        diffs.push(p - first);
    }
    AffineSubspaceE::new(first, LinearSubspace::span(n, &diffs)?)
}
