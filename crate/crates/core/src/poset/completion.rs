//! Meets and joins of arbitrary finite sets in the augmented poset.
//!
//! With top `h^M`, write `D = Dir(M)` and `S = Span(M)`. The hyperbolic and
//! new elements correspond to the subspaces of `S` other than `0` and `D`
//! (`h^{M'} ↦ Span(M')`, `n^U ↦ U`), ordered by inclusion, and
//! `e^B ≤ X` iff `Dir(B)⊥ ⊆ X`. Meets and joins are computed in that model.

use crate::affine::AffineSubspaceV;
use crate::error::{Error, Result};
use crate::linalg::LinearSubspace;

use super::context::PosetContext;
use super::PosetElement;

impl PosetContext {
    /// Greatest lower bound of `q`.
    pub fn dm_meet(&self, q: &[PosetElement]) -> Result<PosetElement> {
        self.prepare(q)?;
        let Some(m) = self.top_move_set() else {
            let mut c = elliptic(&q[0]).clone();
            for p in &q[1..] {
                c = c.hull(elliptic(p))?;
            }
            return Ok(PosetElement::Elliptic(c));
        };
        let mut y = m.span();
        let mut hull = None;
        for p in q {
            match p {
                PosetElement::Elliptic(b) => {
                    hull = Some(match hull {
                        None => b.clone(),
                        Some(c) => b.hull(&c)?,
                    });
                }
                _ => y = y.intersect(&p.signature())?,
            }
        }
        if let Some(c) = hull {
            return Ok(PosetElement::Elliptic(c.extend(&y.orthogonal_complement())?));
        }
        if y.is_zero() {
            return Ok(self.bottom());
        }
        self.element_from_space(&y)
    }

    /// Least upper bound of `q`.
    pub fn dm_join(&self, q: &[PosetElement]) -> Result<PosetElement> {
        self.prepare(q)?;
        let Some(m) = self.top_move_set() else {
            let mut c = elliptic(&q[0]).clone();
            for p in &q[1..] {
                c = c.intersect(elliptic(p))?.expect("both contain the top subspace");
            }
            return Ok(PosetElement::Elliptic(c));
        };
        let n = self.ambient();
        let mut z = LinearSubspace::zero(n);
        let mut only_elliptic = true;
        for p in q {
            only_elliptic &= matches!(p, PosetElement::Elliptic(_));
            z = z.sum(&p.signature())?;
        }
        if only_elliptic {
            let mut c = Some(elliptic(&q[0]).clone());
            for p in &q[1..] {
                c = match c {
                    Some(c) => c.intersect(elliptic(p))?,
                    None => None,
                };
            }
            if let Some(c) = c {
                return Ok(PosetElement::Elliptic(c));
            }
        }
        if &z == m.direction() {
            return Ok(self.top().clone());
        }
        self.element_from_space(&z)
    }

    /// The hyperbolic or new element corresponding to a subspace `Z` of
    /// `Span(M)` with `Z ∉ {0, Dir(M)}`: `n^Z` inside `Dir(M)`, otherwise
    /// `h^{Z ∩ M}`.
    pub(crate) fn element_from_space(&self, z: &LinearSubspace) -> Result<PosetElement> {
        let m = self.top_move_set().expect("hyperbolic context");
        debug_assert!(!z.is_zero() && z != m.direction() && z.is_subspace_of(&m.span()));
        if z.is_subspace_of(m.direction()) {
            return Ok(PosetElement::New(z.clone()));
        }
        let cut = AffineSubspaceV::linear(z.clone())
            .intersect(m)?
            .expect("a subspace leaving Dir(M) meets M");
        Ok(PosetElement::Hyperbolic(cut))
    }

    fn prepare(&self, q: &[PosetElement]) -> Result<()> {
        if q.is_empty() {
            return Err(Error::EmptyInput("meet or join of an empty set"));
        }
        if self.is_hyperbolic() && !self.is_augmented() {
            return Err(Error::InvalidContext(
                "complete meets and joins need the augmented poset".into(),
            ));
        }
        q.iter().try_for_each(|p| self.check(p))
    }
}

fn elliptic(p: &PosetElement) -> &crate::affine::AffineSubspaceE {
    match p {
        PosetElement::Elliptic(b) => b,
        _ => unreachable!("elliptic posets hold only elliptic elements"),
    }
}
