//! Reflection factorizations. `w = r_1 r_2 ⋯ r_k` lists the factors from
//! the outermost: `r_k` is applied first.

use std::fmt;

use crate::affine::AffineSubspaceE;
use crate::error::{check_dim, Error, Result};
use crate::isometry::{Isometry, Reflection};
use crate::linalg::{LinearSubspace, Matrix};
use crate::poset::{inv_map, PosetElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    target: Isometry,
    factors: Vec<Reflection>,
}

/// `r_1 ∘ r_2 ∘ ⋯ ∘ r_k`, the identity when empty.
pub fn product(n: usize, factors: &[Reflection]) -> Isometry {
    factors
        .iter()
        .fold(Isometry::identity(n), |acc, r| acc.compose(&r.to_isometry()))
}

impl Factorization {
    /// Fails unless the factors multiply to `target`.
    pub fn new(target: Isometry, factors: Vec<Reflection>) -> Result<Self> {
        for r in &factors {
            check_dim(target.dim(), r.dim())?;
        }
        if product(target.dim(), &factors) != target {
            return Err(Error::ProductMismatch);
        }
        Ok(Factorization { target, factors })
    }

    pub fn target(&self) -> &Isometry {
        &self.target
    }

    pub fn factors(&self) -> &[Reflection] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `s_i = r_{i+1} ⋯ r_k` for `i = 0..=k`; `s_0` is the target and `s_k`
    /// the identity.
    pub fn suffix_products(&self) -> Vec<Isometry> {
        let k = self.len();
        let mut out = vec![Isometry::identity(self.target.dim()); k + 1];
        for i in (0..k).rev() {
            out[i] = self.factors[i].to_isometry().compose(&out[i + 1]);
        }
        out
    }

    /// Prefix products `r_1 ⋯ r_i` for `i = 0..=k`.
    pub fn prefix_products(&self) -> Vec<Isometry> {
        let mut out = vec![Isometry::identity(self.target.dim())];
        for r in &self.factors {
            let next = out.last().expect("nonempty").compose(&r.to_isometry());
            out.push(next);
        }
        out
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", self.target)?;
        if self.factors.is_empty() {
            return write!(f, " id");
        }
        for r in &self.factors {
            write!(f, " {r}")?;
        }
        Ok(())
    }
}

/// A minimal factorization: chain-driven for elliptic `w`, split into a
/// translation and an elliptic part for hyperbolic `w`.
pub fn factor(w: &Isometry) -> Factorization {
    if w.is_elliptic() {
        factor_elliptic(w, None).expect("elliptic")
    } else {
        factor_hyperbolic(w).expect("hyperbolic")
    }
}

/// Factor an elliptic `w` along `chain = [Fix(w) = B_k, …, B_0 = E]`,
/// each `B_i` of codimension `i`. Without a chain, `Fix(w)` is widened one
/// coordinate direction at a time.
pub fn factor_elliptic(w: &Isometry, chain: Option<&[AffineSubspaceE]>) -> Result<Factorization> {
    if !w.is_elliptic() {
        return Err(Error::WrongIsometryType { expected: "elliptic" });
    }
    let elements: Vec<PosetElement> = match chain {
        Some(c) => c.iter().cloned().map(PosetElement::Elliptic).collect(),
        None => default_elliptic_chain(&w.min_set()),
    };
    chain_to_factorization(&elements, w)
}

fn default_elliptic_chain(fix: &AffineSubspaceE) -> Vec<PosetElement> {
    let n = fix.ambient();
    let mut b = fix.clone();
    let mut out = vec![PosetElement::Elliptic(b.clone())];
    while let Some(e) = b.direction().first_unit_outside() {
        b = b
            .extend(&LinearSubspace::span_unchecked(n, vec![e]))
            .expect("dims agree");
        out.push(PosetElement::Elliptic(b.clone()));
    }
    out
}

/// `w = t_μ u`: `t_μ` as reflections through `p + μ/2` and `p` for the
/// canonical point `p` of `Min(w)`, followed by a factorization of `u`.
pub fn factor_hyperbolic(w: &Isometry) -> Result<Factorization> {
    if w.is_elliptic() {
        return Err(Error::WrongIsometryType { expected: "hyperbolic" });
    }
    let p = w.min_set().point().clone();
    let (mu, u) = w.standard_splitting();
    let half = mu.scale(&crate::linalg::frac(1, 2));
    let mut factors = vec![
        Reflection::from_root(&mu, &(&p + &half))?,
        Reflection::from_root(&mu, &p)?,
    ];
    factors.extend(factor_elliptic(&u, None)?.factors);
    Factorization::new(w.clone(), factors)
}

/// Check that `chain` descends by covering steps from `inv(w)` to `e^E`.
fn validate_chain(chain: &[PosetElement], w: &Isometry) -> Result<()> {
    let n = w.dim();
    let first = chain.first().ok_or(Error::InvalidChain("empty chain".into()))?;
    for p in chain {
        check_dim(n, p.ambient())?;
        if matches!(p, PosetElement::New(_)) {
            return Err(Error::InvalidChain("new elements are not images of isometries".into()));
        }
    }
    if *first != inv_map(w) {
        return Err(Error::InvalidChain("the first element is not inv(w)".into()));
    }
    if *chain.last().expect("nonempty") != PosetElement::bottom(n) {
        return Err(Error::InvalidChain("the chain does not end at e^E".into()));
    }
    for (i, pair) in chain.windows(2).enumerate() {
        if !pair[1].is_covered_by(&pair[0])? {
            return Err(Error::InvalidChain(format!(
                "element {} is not covered by element {i}",
                i + 1
            )));
        }
    }
    Ok(())
}

/// The factorization whose suffixes `r_{i+1} ⋯ r_k` map to `chain[i]`.
pub fn chain_to_factorization(chain: &[PosetElement], w: &Isometry) -> Result<Factorization> {
    validate_chain(chain, w)?;
    let mut v = w.clone();
    let mut factors = Vec::with_capacity(chain.len() - 1);
    for pair in chain.windows(2) {
        let r = step(&v, &pair[0], &pair[1])?;
        v = r.to_isometry().compose(&v);
        if inv_map(&v) != pair[1] {
            return Err(Error::InvalidChain("step landed off the chain".into()));
        }
        factors.push(r);
    }
    Factorization::new(w.clone(), factors)
}

/// The reflection `r` with `inv(r v) = next`, where `next` is covered by
/// `inv(v) = current`.
fn step(v: &Isometry, current: &PosetElement, next: &PosetElement) -> Result<Reflection> {
    use PosetElement::*;
    match (current, next) {
        (Elliptic(b), Elliptic(c)) => {
            let extra = c
                .direction()
                .basis()
                .iter()
                .find(|e| !b.direction().contains(e))
                .expect("Dir(C) is larger than Dir(B)");
            let x = b.point() + extra;
            Reflection::bisecting(&x, &v.apply(&x))
        }
        (Hyperbolic(_), Elliptic(b)) => {
            let x = b.point();
            Reflection::bisecting(x, &v.apply(x))
        }
        (Hyperbolic(_), Hyperbolic(m2)) => {
            // Mov(r v) is the motion image of v⁻¹(H), so H = v(points
            // whose motion lands in M').
            let normals = m2.direction().orthogonal_complement();
            let nt = Matrix::from_row_vectors(normals.basis(), v.dim())?;
            let lhs = nt.mul(&v.motion_linear());
            let rhs = nt.mul_vec(&(m2.mu() - v.translation_part()));
            let preimage = AffineSubspaceE::solutions(&lhs, &rhs)?
                .ok_or_else(|| Error::InvalidChain("M' is not inside Mov(w)".into()))?;
            Reflection::new(preimage.image(v.linear(), v.translation_part())?)
        }
        _ => Err(Error::InvalidChain("hyperbolic element below an elliptic one".into())),
    }
}

/// `[inv(s_0), …, inv(s_k)]` for the suffix products of a minimal `f`.
pub fn factorization_to_chain(f: &Factorization) -> Result<Vec<PosetElement>> {
    if product(f.target.dim(), &f.factors) != f.target {
        return Err(Error::ProductMismatch);
    }
    let k = f.len();
    f.suffix_products()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let len = s.reflection_length();
            if len != k - i {
                return Err(Error::NotMinimal(format!(
                    "suffix {i} has reflection length {len}, expected {}",
                    k - i
                )));
            }
            Ok(inv_map(s))
        })
        .collect()
}

/// Move the factors at `positions` to the front (or back), keeping their
/// relative order; each swap `r r'` becomes `r' (r' r r')` or `(r r' r) r`.
pub fn rewrite_shift(f: &Factorization, positions: &[usize], to_front: bool) -> Result<Factorization> {
    let k = f.len();
    let mut selected = positions.to_vec();
    selected.sort_unstable();
    for (i, &p) in selected.iter().enumerate() {
        if p >= k {
            return Err(Error::IndexOutOfRange { index: p, len: k });
        }
        if i > 0 && selected[i - 1] == p {
            return Err(Error::DuplicatePosition(p));
        }
    }
    let mut fs = f.factors.clone();
    if to_front {
        for (slot, &p) in selected.iter().enumerate() {
            for i in (slot..p).rev() {
                // (a, b) → (b, bab)
                let conj = fs[i].conjugate_by(&fs[i + 1]);
                fs[i] = fs[i + 1].clone();
                fs[i + 1] = conj;
            }
        }
    } else {
        for (t, &p) in selected.iter().rev().enumerate() {
            let slot = k - 1 - t;
            for i in p..slot {
                // (a, b) → (aba, a)
                let conj = fs[i + 1].conjugate_by(&fs[i]);
                fs[i + 1] = fs[i].clone();
                fs[i] = conj;
            }
        }
    }
    Factorization::new(f.target.clone(), fs)
}

/// Product matches, length equals the reflection length, and roots are
/// independent when the target is elliptic.
pub fn verify_minimal(f: &Factorization) -> bool {
    if product(f.target.dim(), &f.factors) != f.target {
        return false;
    }
    if f.len() != f.target.reflection_length() {
        return false;
    }
    if f.target.is_elliptic() && !f.is_empty() {
        let roots: Vec<_> = f.factors.iter().map(|r| r.root().clone()).collect();
        let m = Matrix::from_row_vectors(&roots, f.target.dim()).expect("dims agree");
        return m.rank() == f.len();
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::AffineSubspaceV;
    use crate::affine::Point;
    use crate::linalg::{frac, Matrix, Vector};

    fn reflection_through(root: &[i64], p: &[i64]) -> Reflection {
        Reflection::from_root(&Vector::from_ints(root), &Point::from_ints(p)).unwrap()
    }

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    fn glide() -> Isometry {
        // Reflection in the x-axis followed by a shift along it.
        Isometry::new(Matrix::from_ints(&[&[1, 0], &[0, -1]]).unwrap(), v(&[1, 0])).unwrap()
    }

    fn mirror(r: &Reflection) -> (Vector, Point) {
        (r.root().clone(), r.mirror().point().clone())
    }

    #[test]
    fn identity_has_empty_factorization() {
        let f = factor(&Isometry::identity(3));
        assert!(f.is_empty());
        assert!(verify_minimal(&f));
        assert_eq!(factorization_to_chain(&f).unwrap(), vec![PosetElement::bottom(3)]);
    }

    #[test]
    fn minus_identity_along_given_chain() {
        let w = Isometry::new(Matrix::from_ints(&[&[-1, 0], &[0, -1]]).unwrap(), v(&[0, 0])).unwrap();
        let origin = AffineSubspaceE::singleton(Point::origin(2));
        let x_axis = AffineSubspaceE::new(&Point::origin(2), LinearSubspace::coordinate(2, &[0])).unwrap();
        let chain = [origin, x_axis.clone(), AffineSubspaceE::whole(2)];
        let f = factor_elliptic(&w, Some(&chain)).unwrap();
        assert_eq!(f.len(), 2);
        // The first step swaps (1,0) with (-1,0): mirror is the y-axis.
        assert_eq!(mirror(&f.factors()[0]), (v(&[1, 0]), Point::origin(2)));
        assert_eq!(f.factors()[1].mirror(), &x_axis);
        assert!(verify_minimal(&f));
        let elements = factorization_to_chain(&f).unwrap();
        assert_eq!(elements[1], PosetElement::Elliptic(x_axis));
    }

    #[test]
    fn reflection_factors_as_itself() {
        let r = reflection_through(&[1, 2], &[1, 1]);
        let f = factor(&r.to_isometry());
        assert_eq!(f.factors(), std::slice::from_ref(&r));
        assert_eq!(
            factorization_to_chain(&f).unwrap(),
            vec![PosetElement::Elliptic(r.mirror().clone()), PosetElement::bottom(2)]
        );
    }

    #[test]
    fn translation_as_parallel_mirrors() {
        let t = Isometry::translation(v(&[2, 0]));
        let f = factor_hyperbolic(&t).unwrap();
        assert_eq!(f.factors(), &[reflection_through(&[1, 0], &[1, 0]), reflection_through(&[1, 0], &[0, 0])]);
        let chain = factorization_to_chain(&f).unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(chain[0], PosetElement::Hyperbolic(AffineSubspaceV::point(v(&[2, 0]))));
    }

    #[test]
    fn glide_has_three_factors() {
        let f = factor_hyperbolic(&glide()).unwrap();
        let half = Point::new(vec![frac(1, 2), frac(0, 1)]);
        let expected = [
            Reflection::from_root(&v(&[1, 0]), &half).unwrap(),
            reflection_through(&[1, 0], &[0, 0]),
            reflection_through(&[0, 1], &[0, 0]),
        ];
        assert_eq!(f.factors(), &expected);
        assert!(verify_minimal(&f));
    }

    #[test]
    fn one_dimensional_translation() {
        let f = factor(&Isometry::translation(v(&[3])));
        assert_eq!(f.len(), 2);
        assert!(f.factors().iter().all(|r| r.mirror().dim() == 0));
        assert!(verify_minimal(&f));
    }

    #[test]
    fn wrong_type_errors() {
        assert_eq!(
            factor_hyperbolic(&Isometry::identity(2)),
            Err(Error::WrongIsometryType { expected: "hyperbolic" })
        );
        assert_eq!(
            factor_elliptic(&glide(), None),
            Err(Error::WrongIsometryType { expected: "elliptic" })
        );
    }

    #[test]
    fn chain_for_translation() {
        let t = Isometry::translation(v(&[2, 0]));
        let y_axis = AffineSubspaceE::new(&Point::origin(2), LinearSubspace::coordinate(2, &[1])).unwrap();
        let chain = [inv_map(&t), PosetElement::Elliptic(y_axis), PosetElement::bottom(2)];
        let f = chain_to_factorization(&chain, &t).unwrap();
        assert_eq!(f.factors(), factor_hyperbolic(&t).unwrap().factors());
        assert_eq!(factorization_to_chain(&f).unwrap(), chain.to_vec());
    }

    #[test]
    fn chain_with_hyperbolic_steps() {
        // Glide along a line in R³: Mov is a line, the chain passes h^{point}.
        let w = Isometry::new(
            Matrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]).unwrap(),
            v(&[0, 1, 0]),
        )
        .unwrap();
        let top = inv_map(&w);
        let PosetElement::Hyperbolic(m) = &top else { panic!("hyperbolic") };
        let p = m.intersect(&AffineSubspaceV::point(v(&[0, 1, 0]))).unwrap().unwrap();
        let plane = AffineSubspaceE::new(&Point::origin(3), LinearSubspace::coordinate(3, &[0, 2])).unwrap();
        let chain = [top.clone(), PosetElement::Hyperbolic(p), PosetElement::Elliptic(plane), PosetElement::bottom(3)];
        let f = chain_to_factorization(&chain, &w).unwrap();
        assert_eq!(factorization_to_chain(&f).unwrap(), chain.to_vec());
        assert!(verify_minimal(&f));
    }

    #[test]
    fn invalid_chains() {
        let t = Isometry::translation(v(&[2, 0]));
        assert!(chain_to_factorization(&[PosetElement::bottom(2)], &t).is_err());
        assert!(chain_to_factorization(&[inv_map(&t), PosetElement::bottom(2)], &t).is_err());
        assert!(chain_to_factorization(&[], &t).is_err());
        assert_eq!(chain_to_factorization(&[PosetElement::bottom(2)], &Isometry::identity(2)).unwrap().len(), 0);
    }

    #[test]
    fn non_minimal_chain_is_rejected() {
        let r = reflection_through(&[1, 0], &[0, 0]);
        let f = Factorization::new(Isometry::identity(2), vec![r.clone(), r]).unwrap();
        assert!(!verify_minimal(&f));
        assert!(matches!(factorization_to_chain(&f), Err(Error::NotMinimal(_))));
    }

    #[test]
    fn product_mismatch() {
        let r = reflection_through(&[1, 0], &[0, 0]);
        assert_eq!(Factorization::new(Isometry::identity(2), vec![r]), Err(Error::ProductMismatch));
    }

    #[test]
    fn shift_translation_factor_to_front() {
        let f = factor(&Isometry::translation(v(&[2, 0])));
        let g = rewrite_shift(&f, &[1], true).unwrap();
        assert_eq!(g.target(), f.target());
        assert_eq!(g.factors()[0], f.factors()[1]);
        assert_eq!(g.factors()[1], reflection_through(&[1, 0], &[-1, 0]));
        assert!(verify_minimal(&g));
    }

    #[test]
    fn trivial_shifts_are_identity() {
        let f = factor_hyperbolic(&glide()).unwrap();
        assert_eq!(rewrite_shift(&f, &[], true).unwrap(), f);
        assert_eq!(rewrite_shift(&f, &[0, 1, 2], true).unwrap(), f);
        assert_eq!(rewrite_shift(&f, &[0, 1, 2], false).unwrap(), f);
    }

    #[test]
    fn shift_to_back_keeps_order() {
        let f = factor_hyperbolic(&glide()).unwrap();
        let g = rewrite_shift(&f, &[0, 1], false).unwrap();
        assert_eq!(&g.factors()[1..], &f.factors()[..2]);
        let h = rewrite_shift(&f, &[2, 0], true).unwrap();
        assert_eq!(h.factors()[0], f.factors()[0]);
        assert_eq!(h.factors()[1], f.factors()[2]);
    }

    #[test]
    fn shift_errors() {
        let f = factor_hyperbolic(&glide()).unwrap();
        assert_eq!(rewrite_shift(&f, &[3], true), Err(Error::IndexOutOfRange { index: 3, len: 3 }));
        assert_eq!(rewrite_shift(&f, &[1, 1], true), Err(Error::DuplicatePosition(1)));
    }
}
