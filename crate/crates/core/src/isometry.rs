//! Euclidean isometries, reflections and their basic invariants.
//!
//! An isometry is stored as `x ↦ A x + b` relative to the global basepoint.
//! The move-set `Mov(w) = {w(x) - x}` is the affine subspace
//! `im(A - I) + b`, kept in standard form `U + mu`, and the min-set is the
//! set of points moved by exactly `mu`. Reflection length is read off these
//! invariants: `dim U` for elliptic isometries, `dim U + 2` for hyperbolic
//! ones.

use std::fmt;

use num_traits::One;

use crate::affine::{AffineSubspaceE, AffineSubspaceV, Point};
use crate::error::{check_dim, Error, Result};
use crate::linalg::{int, signum, LinearSubspace, Matrix, Scalar, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Isometry {
    linear: Matrix,
    translation: Vector,
}

impl Isometry {
    /// `x ↦ A x + b`. Fails unless `AᵀA = I` exactly.
    pub fn new(linear: Matrix, translation: Vector) -> Result<Self> {
        if !linear.is_square() {
            return Err(Error::NotSquare {
                rows: linear.nrows(),
                cols: linear.ncols(),
            });
        }
        check_dim(linear.nrows(), translation.dim())?;
        if !linear.is_orthogonal() {
            return Err(Error::NotOrthogonal);
        }
        Ok(Isometry {
            linear,
            translation,
        })
    }

    pub fn identity(n: usize) -> Self {
        Isometry {
            linear: Matrix::identity(n),
            translation: Vector::zeros(n),
        }
    }

    /// The translation `t_λ`.
    pub fn translation(lambda: Vector) -> Self {
        Isometry {
            linear: Matrix::identity(lambda.dim()),
            translation: lambda,
        }
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn linear(&self) -> &Matrix {
        &self.linear
    }

    pub fn translation_part(&self) -> &Vector {
        &self.translation
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        assert_eq!(self.dim(), other.dim(), "composition dimension mismatch");
        Isometry {
            linear: self.linear.mul(&other.linear),
            translation: &self.linear.mul_vec(&other.translation) + &self.translation,
        }
    }

    pub fn inverse(&self) -> Isometry {
        let at = self.linear.transpose();
        let b = -&at.mul_vec(&self.translation);
        Isometry {
            linear: at,
            translation: b,
        }
    }

    pub fn apply(&self, x: &Point) -> Point {
        Point::at(&self.linear.mul_vec(&x.position()) + &self.translation)
    }

    /// Vector from `x` to `w(x)`.
    pub fn motion(&self, x: &Point) -> Vector {
        &self.apply(x) - x
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.linear.is_identity()
    }

    /// `A - I`, the linear part of the motion map.
    pub(crate) fn motion_linear(&self) -> Matrix {
        self.linear.sub(&Matrix::identity(self.dim()))
    }

    /// `Mov(w)` in standard form.
    pub fn move_set(&self) -> AffineSubspaceV {
        let u = self.motion_linear().column_space();
        AffineSubspaceV::standard_form(u, &self.translation).expect("dims agree")
    }

    /// `Min(w)`: the points moved by the minimal-length motion `mu`.
    pub fn min_set(&self) -> AffineSubspaceE {
        self.min_set_for(&self.move_set())
    }

    fn min_set_for(&self, mov: &AffineSubspaceV) -> AffineSubspaceE {
        // (A - I) x + b = mu
        let rhs = mov.mu() - &self.translation;
        AffineSubspaceE::solutions(&self.motion_linear(), &rhs)
            .expect("dims agree")
            .expect("the min-set is never empty")
    }

    pub fn is_elliptic(&self) -> bool {
        self.move_set().is_linear()
    }

    /// Reflection length from the basic invariants.
    pub fn reflection_length(&self) -> usize {
        let mov = self.move_set();
        scherk_length(&mov)
    }

    /// `+1` when orientation preserving, `-1` otherwise.
    pub fn orientation(&self) -> i32 {
        signum(&self.linear.determinant().expect("square"))
    }

    pub fn classify(&self) -> IsometryClass {
        let move_set = self.move_set();
        let min_set = self.min_set_for(&move_set);
        IsometryClass {
            tag: if move_set.is_linear() {
                Tag::Elliptic
            } else {
                Tag::Hyperbolic
            },
            length: scherk_length(&move_set),
            move_set,
            min_set,
        }
    }

    /// `w = t_mu ∘ u` with `u` elliptic and `Fix(u) = Min(w)`.
    pub fn standard_splitting(&self) -> (Vector, Isometry) {
        let mu = self.move_set().mu().clone();
        let u = Isometry {
            linear: self.linear.clone(),
            translation: &self.translation - &mu,
        };
        (mu, u)
    }
}

fn scherk_length(mov: &AffineSubspaceV) -> usize {
    if mov.is_linear() {
        mov.dim()
    } else {
        mov.dim() + 2
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> [")?;
        for (i, row) in self.linear.rows().iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{row}")?;
        }
        write!(f, "] x + {}", self.translation)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Elliptic,
    Hyperbolic,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Elliptic => "elliptic",
            Tag::Hyperbolic => "hyperbolic",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Basic invariants of an isometry plus its reflection length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometryClass {
    pub tag: Tag,
    pub move_set: AffineSubspaceV,
    pub min_set: AffineSubspaceE,
    pub length: usize,
}

/// A reflection, stored by its mirror and a canonical root.
///
/// The root is the RREF basis vector of `Dir(H)⊥` (leading coefficient 1),
/// not a unit vector; every formula divides by `<α, α>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Reflection {
    mirror: AffineSubspaceE,
    root: Vector,
}

impl Reflection {
    /// The reflection fixing the hyperplane `mirror`.
    pub fn new(mirror: AffineSubspaceE) -> Result<Self> {
        if mirror.codim() != 1 {
            return Err(Error::NotHyperplane(mirror.codim()));
        }
        let root = mirror.direction().orthogonal_complement().basis()[0].clone();
        Ok(Reflection { mirror, root })
    }

    /// Reflection across the hyperplane through `point` orthogonal to `root`.
    pub fn from_root(root: &Vector, point: &Point) -> Result<Self> {
        check_dim(root.dim(), point.dim())?;
        if root.is_zero() {
            return Err(Error::ZeroRoot);
        }
        let normal = LinearSubspace::span(root.dim(), std::slice::from_ref(root))?;
        Reflection::new(AffineSubspaceE::new(point, normal.orthogonal_complement())?)
    }

    /// The reflection across the perpendicular bisector of `x` and `y`; it
    /// swaps the two points.
    pub fn bisecting(x: &Point, y: &Point) -> Result<Self> {
        check_dim(x.dim(), y.dim())?;
        if x == y {
            return Err(Error::CoincidentPoints);
        }
        Reflection::from_root(&(y - x), &x.midpoint(y))
    }

    pub fn dim(&self) -> usize {
        self.root.dim()
    }

    pub fn mirror(&self) -> &AffineSubspaceE {
        &self.mirror
    }

    pub fn root(&self) -> &Vector {
        &self.root
    }

    pub fn to_isometry(&self) -> Isometry {
        let n = self.dim();
        let a = &self.root;
        let two_over = int(2) / a.norm_squared();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let row = (0..n)
                .map(|j| {
                    let delta = if i == j { Scalar::one() } else { int(0) };
                    delta - &two_over * &a[i] * &a[j]
                })
                .collect();
            rows.push(row);
        }
        let offset = &two_over * self.mirror.point().position().dot(a);
        Isometry {
            linear: Matrix::from_rows(rows).expect("square"),
            translation: a.scale(&offset),
        }
    }

    /// `x - 2 <x - p0, α> / <α, α> · α`.
    pub fn apply(&self, x: &Point) -> Point {
        let a = &self.root;
        let c = int(2) * (x - self.mirror.point()).dot(a) / a.norm_squared();
        x - &a.scale(&c)
    }

    /// The reflection `s r s` whose mirror is `s(H)`.
    pub fn conjugate_by(&self, s: &Reflection) -> Reflection {
        let s_iso = s.to_isometry();
        let mirror = self
            .mirror
            .image(s_iso.linear(), s_iso.translation_part())
            .expect("dims agree");
        Reflection::new(mirror).expect("isometries preserve codimension")
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r[root {}, through {}]", self.root, self.mirror.point())
    }
}

/// Which of the six descent/ascent situations `r w` falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductCase {
    /// `w` hyperbolic, `α ∈ U`.
    HyperbolicRootInside,
    /// `w` hyperbolic, `α ∉ U`, `mu ∈ U_α`.
    HyperbolicShiftAbsorbed,
    /// `w` hyperbolic, `α ∉ U`, `mu ∉ U_α`.
    HyperbolicShiftKept,
    /// `w` elliptic, `α ∉ U`.
    EllipticRootOutside,
    /// `w` elliptic, `α ∈ U`, `Fix(w) ⊆ H`.
    EllipticFixInMirror,
    /// `w` elliptic, `α ∈ U`, `Fix(w)` disjoint from `H`.
    EllipticFixOffMirror,
}

/// Type, length and move-set of `r w`, derived from the invariants of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductPrediction {
    pub case: ProductCase,
    pub tag: Tag,
    pub length: usize,
    pub move_set: AffineSubspaceV,
}

/// Predicts the class of `r ∘ w` without forming the product.
pub fn predict_product(r: &Reflection, w: &Isometry) -> Result<ProductPrediction> {
    check_dim(w.dim(), r.dim())?;
    let mov = w.move_set();
    let k = scherk_length(&mov);
    let u = mov.direction();
    let alpha = r.root();
    let root_inside = u.contains(alpha);

    let case = match (mov.is_linear(), root_inside) {
        (false, true) => ProductCase::HyperbolicRootInside,
        (false, false) => {
            if u.with_vector(alpha)?.contains(mov.mu()) {
                ProductCase::HyperbolicShiftAbsorbed
            } else {
                ProductCase::HyperbolicShiftKept
            }
        }
        (true, false) => ProductCase::EllipticRootOutside,
        (true, true) => {
            if w.min_set_for(&mov).is_subset_of(r.mirror()) {
                ProductCase::EllipticFixInMirror
            } else {
                ProductCase::EllipticFixOffMirror
            }
        }
    };
    let (tag, length) = match case {
        ProductCase::HyperbolicRootInside => (Tag::Hyperbolic, k - 1),
        ProductCase::HyperbolicShiftAbsorbed => (Tag::Elliptic, k - 1),
        ProductCase::HyperbolicShiftKept => (Tag::Hyperbolic, k + 1),
        ProductCase::EllipticRootOutside => (Tag::Elliptic, k + 1),
        ProductCase::EllipticFixInMirror => (Tag::Elliptic, k - 1),
        ProductCase::EllipticFixOffMirror => (Tag::Hyperbolic, k + 1),
    };

    let move_set = if root_inside {
        // A codimension-one subspace of Mov(w): the motions under w of the
        // points that w sends into the mirror, since r fixes their images.
        let inv = w.inverse();
        let preimage = r.mirror().image(inv.linear(), inv.translation_part())?;
        let through = w.motion(preimage.point());
        let dir = preimage.direction().image(&w.motion_linear())?;
        AffineSubspaceV::standard_form(dir, &through)?
    } else {
        AffineSubspaceV::standard_form(u.with_vector(alpha)?, mov.mu())?
    };

    Ok(ProductPrediction {
        case,
        tag,
        length,
        move_set,
    })
}

/// `ℓ(r w) < ℓ(w)`.
pub fn is_reflection_below(r: &Reflection, w: &Isometry) -> Result<bool> {
    let prediction = predict_product(r, w)?;
    Ok(prediction.length < w.reflection_length())
}

/// The reflection sending `x` to `w(x)`; it is always below `w`.
pub fn motion_reflection(w: &Isometry, x: &Point) -> Result<Reflection> {
    check_dim(w.dim(), x.dim())?;
    let y = w.apply(x);
    if &y == x {
        return Err(Error::FixedPoint);
    }
    Reflection::bisecting(x, &y)
}

/// `u ∈ [1, w]`: `ℓ(u) + ℓ(u⁻¹ w) = ℓ(w)`.
pub fn interval_contains(w: &Isometry, u: &Isometry) -> Result<bool> {
    check_dim(w.dim(), u.dim())?;
    let rest = u.inverse().compose(w);
    Ok(u.reflection_length() + rest.reflection_length() == w.reflection_length())
}

/// `u ≤ u'` in `[1, w]`: `ℓ(u) + ℓ(u⁻¹ u') + ℓ(u'⁻¹ w) = ℓ(w)`.
pub fn interval_leq(w: &Isometry, u: &Isometry, u2: &Isometry) -> Result<bool> {
    check_dim(w.dim(), u.dim())?;
    check_dim(w.dim(), u2.dim())?;
    let step = u.inverse().compose(u2);
    let rest = u2.inverse().compose(w);
    Ok(u.reflection_length() + step.reflection_length() + rest.reflection_length()
        == w.reflection_length())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    fn p(c: &[i64]) -> Point {
        Point::from_ints(c)
    }

    fn refl(root: &[i64], through: &[i64]) -> Reflection {
        Reflection::from_root(&v(root), &p(through)).unwrap()
    }

    fn glide() -> Isometry {
        Isometry::new(Matrix::from_ints(&[&[1, 0], &[0, -1]]).unwrap(), v(&[1, 0])).unwrap()
    }

    fn half_turn() -> Isometry {
        Isometry::new(Matrix::from_ints(&[&[-1, 0], &[0, -1]]).unwrap(), v(&[0, 0])).unwrap()
    }

    #[test]
    fn rejects_non_orthogonal_matrix() {
        let m = Matrix::from_ints(&[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(Isometry::new(m, v(&[0, 0])), Err(Error::NotOrthogonal));
    }

    #[test]
    fn reflect_across_x_axis() {
        let r = refl(&[0, 1], &[0, 0]);
        assert_eq!(r.apply(&p(&[0, 1])), p(&[0, -1]));
        assert_eq!(r.to_isometry().apply(&p(&[0, 1])), p(&[0, -1]));
    }

    #[test]
    fn reflect_across_vertical_line() {
        let r = refl(&[1, 0], &[1, 0]);
        assert_eq!(r.apply(&p(&[0, 0])), p(&[2, 0]));
        assert_eq!(r.to_isometry().apply(&p(&[0, 0])), p(&[2, 0]));
        let sq = r.to_isometry().compose(&r.to_isometry());
        assert!(sq.is_identity());
    }

    #[test]
    fn translations_cancel() {
        let t = Isometry::translation(v(&[2, 0])).compose(&Isometry::translation(v(&[-2, 0])));
        assert!(t.is_identity());
    }

    #[test]
    fn make_reflection_requires_hyperplane() {
        let line = AffineSubspaceE::new(&p(&[0, 0, 0]), LinearSubspace::coordinate(3, &[0])).unwrap();
        assert_eq!(Reflection::new(line), Err(Error::NotHyperplane(2)));
    }

    #[test]
    fn bisecting_reflections() {
        let r = Reflection::bisecting(&p(&[0, 0]), &p(&[2, 0])).unwrap();
        assert_eq!(r, refl(&[1, 0], &[1, 0]));
        let s = Reflection::bisecting(&p(&[0, 0]), &p(&[0, 2])).unwrap();
        assert_eq!(s, refl(&[0, 1], &[0, 1]));
        assert_eq!(Reflection::bisecting(&p(&[2, 0]), &p(&[0, 0])).unwrap(), r);
        assert_eq!(
            Reflection::bisecting(&p(&[1, 1]), &p(&[1, 1])),
            Err(Error::CoincidentPoints)
        );
    }

    #[test]
    fn move_sets() {
        let id = Isometry::identity(2);
        assert!(id.move_set().is_linear());
        assert_eq!(id.move_set().dim(), 0);

        let g = glide().move_set();
        assert_eq!(g.direction(), &LinearSubspace::coordinate(2, &[1]));
        assert_eq!(g.mu(), &v(&[1, 0]));
        assert!(!g.is_linear());

        let h = half_turn().move_set();
        assert!(h.is_linear());
        assert_eq!(h.dim(), 2);
    }

    #[test]
    fn min_sets() {
        let r = refl(&[1, -1], &[3, 0]);
        assert_eq!(&r.to_isometry().min_set(), r.mirror());
        assert_eq!(Isometry::identity(3).min_set(), AffineSubspaceE::whole(3));
        let axis = AffineSubspaceE::new(&p(&[0, 0]), LinearSubspace::coordinate(2, &[0])).unwrap();
        assert_eq!(glide().min_set(), axis);
    }

    #[test]
    fn classifications() {
        let c = Isometry::identity(2).classify();
        assert_eq!((c.tag, c.length), (Tag::Elliptic, 0));

        let c = Isometry::translation(v(&[0, 3])).classify();
        assert_eq!((c.tag, c.length, c.move_set.dim()), (Tag::Hyperbolic, 2, 0));

        let c = glide().classify();
        assert_eq!((c.tag, c.length), (Tag::Hyperbolic, 3));

        let c = half_turn().classify();
        assert_eq!((c.tag, c.length), (Tag::Elliptic, 2));
    }

    #[test]
    fn standard_splittings() {
        let (mu, u) = Isometry::translation(v(&[2, 0])).standard_splitting();
        assert_eq!(mu, v(&[2, 0]));
        assert!(u.is_identity());

        let (mu, u) = glide().standard_splitting();
        assert_eq!(mu, v(&[1, 0]));
        assert_eq!(u, refl(&[0, 1], &[0, 0]).to_isometry());
        assert_eq!(Isometry::translation(mu).compose(&u), glide());

        let (mu, u) = half_turn().standard_splitting();
        assert!(mu.is_zero());
        assert_eq!(u, half_turn());
    }

    #[test]
    fn product_predictions() {
        let t = Isometry::translation(v(&[2, 0]));

        let pred = predict_product(&refl(&[1, 0], &[1, 0]), &t).unwrap();
        assert_eq!(pred.case, ProductCase::HyperbolicShiftAbsorbed);
        assert_eq!((pred.tag, pred.length), (Tag::Elliptic, 1));

        let pred = predict_product(&refl(&[0, 1], &[0, 0]), &t).unwrap();
        assert_eq!(pred.case, ProductCase::HyperbolicShiftKept);
        assert_eq!((pred.tag, pred.length), (Tag::Hyperbolic, 3));

        let r = refl(&[0, 1], &[0, 1]);
        let pred = predict_product(&r, &half_turn()).unwrap();
        assert_eq!(pred.case, ProductCase::EllipticFixOffMirror);
        assert_eq!((pred.tag, pred.length), (Tag::Hyperbolic, 3));
        let rw = r.to_isometry().compose(&half_turn());
        assert_eq!(rw.apply(&p(&[1, 1])), p(&[-1, 3]));
        assert_eq!(pred.move_set, rw.move_set());
    }

    #[test]
    fn reflections_below() {
        let t = Isometry::translation(v(&[2, 0]));
        assert!(is_reflection_below(&refl(&[1, 0], &[1, 0]), &t).unwrap());
        assert!(!is_reflection_below(&refl(&[0, 1], &[0, 0]), &t).unwrap());
        let r = motion_reflection(&t, &p(&[0, 0])).unwrap();
        assert_eq!(r, refl(&[1, 0], &[1, 0]));
        assert_eq!(
            motion_reflection(&Isometry::identity(2), &p(&[0, 0])),
            Err(Error::FixedPoint)
        );
    }

    #[test]
    fn intervals() {
        let t = Isometry::translation(v(&[2, 0]));
        assert!(interval_contains(&t, &Isometry::identity(2)).unwrap());
        assert!(interval_contains(&t, &t).unwrap());
        let r = refl(&[1, 0], &[1, 0]).to_isometry();
        assert!(interval_contains(&t, &r).unwrap());
        assert!(interval_leq(&t, &Isometry::identity(2), &r).unwrap());
        assert!(interval_leq(&t, &r, &t).unwrap());
        assert!(!interval_leq(&t, &t, &r).unwrap());
        let off = refl(&[0, 1], &[0, 0]).to_isometry();
        assert!(!interval_contains(&t, &off).unwrap());
    }

    #[test]
    fn orientation_parity() {
        assert_eq!(glide().orientation(), -1);
        assert_eq!(half_turn().orientation(), 1);
        assert_eq!(Isometry::translation(v(&[1, 1])).orientation(), 1);
    }

    #[test]
    fn conjugation_moves_mirror() {
        let r = refl(&[1, 0], &[1, 0]);
        let s = refl(&[1, 0], &[0, 0]);
        let c = r.conjugate_by(&s);
        assert_eq!(c, refl(&[1, 0], &[-1, 0]));
        let lhs = s.to_isometry().compose(&r.to_isometry()).compose(&s.to_isometry());
        assert_eq!(lhs, c.to_isometry());
    }
}
