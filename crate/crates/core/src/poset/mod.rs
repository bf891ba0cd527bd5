//! The global poset of elliptic and hyperbolic elements, its model
//! subposets, and the augmented (completed) hyperbolic posets.
//!
//! Elements:
//! - `e^B` for every affine subspace `B` of `E`;
//! - `h^M` for every nonlinear affine subspace `M` of `V`;
//! - `n^U` for proper nontrivial linear subspaces `U ⊂ Dir(M)`, which only
//!   live in an augmented context with top `h^M`.
//!
//! Order: `e^B ≤ e^B'` iff `B ⊇ B'`; `h^M ≤ h^M'` iff `M ⊆ M'`;
//! `e^B < h^M` iff `Span(M)⊥ ⊆ Dir(B)`; nothing hyperbolic is below an
//! elliptic. The new elements are ordered by inclusion, `n^U < h^M'` iff
//! `U ⊆ Dir(M')`, and `e^B < n^U` iff `Dir(B)⊥ ⊆ U`.

mod completion;
mod context;
mod hasse;

use std::fmt;

use crate::affine::{AffineSubspaceE, AffineSubspaceV};
use crate::error::{check_dim, Error, Result};
use crate::isometry::{Isometry, Tag};
use crate::linalg::LinearSubspace;

pub use context::{Bowtie, JoinResult, MeetResult, PosetContext};
pub use hasse::{hasse_dot, HasseDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Elliptic,
    Hyperbolic,
    New,
}

impl Kind {
    pub fn letter(self) -> &'static str {
        match self {
            Kind::Elliptic => "e",
            Kind::Hyperbolic => "h",
            Kind::New => "n",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PosetElement {
    Elliptic(AffineSubspaceE),
    Hyperbolic(AffineSubspaceV),
    New(LinearSubspace),
}

impl PosetElement {
    pub fn elliptic(b: AffineSubspaceE) -> Self {
        PosetElement::Elliptic(b)
    }

    /// `h^M`; `M` must not contain the origin.
    pub fn hyperbolic(m: AffineSubspaceV) -> Result<Self> {
        if m.is_linear() {
            return Err(Error::InvalidSubspace(
                "hyperbolic elements need a nonlinear move-set".into(),
            ));
        }
        Ok(PosetElement::Hyperbolic(m))
    }

    pub fn new_element(u: LinearSubspace) -> Self {
        PosetElement::New(u)
    }

    /// `e^E`, the bottom of every model poset.
    pub fn bottom(n: usize) -> Self {
        PosetElement::Elliptic(AffineSubspaceE::whole(n))
    }

    pub fn kind(&self) -> Kind {
        match self {
            PosetElement::Elliptic(_) => Kind::Elliptic,
            PosetElement::Hyperbolic(_) => Kind::Hyperbolic,
            PosetElement::New(_) => Kind::New,
        }
    }

    pub fn ambient(&self) -> usize {
        match self {
            PosetElement::Elliptic(b) => b.ambient(),
            PosetElement::Hyperbolic(m) => m.ambient(),
            PosetElement::New(u) => u.ambient(),
        }
    }

    /// Dimension of the underlying subspace.
    pub fn dim(&self) -> usize {
        match self {
            PosetElement::Elliptic(b) => b.dim(),
            PosetElement::Hyperbolic(m) => m.dim(),
            PosetElement::New(u) => u.dim(),
        }
    }

    /// Rank in the graded poset: `codim B`, `dim M + 2`, `dim U + 1`.
    pub fn rank(&self) -> usize {
        match self {
            PosetElement::Elliptic(b) => b.codim(),
            PosetElement::Hyperbolic(m) => m.dim() + 2,
            PosetElement::New(u) => u.dim() + 1,
        }
    }

    pub fn leq(&self, other: &PosetElement) -> Result<bool> {
        check_dim(self.ambient(), other.ambient())?;
        use PosetElement::*;
        Ok(match (self, other) {
            (Elliptic(b), Elliptic(c)) => c.is_subset_of(b),
            (Hyperbolic(m), Hyperbolic(m2)) => m.is_subset_of(m2),
            (Elliptic(b), Hyperbolic(m)) => m.perp().is_subspace_of(b.direction()),
            (Hyperbolic(_), Elliptic(_)) => false,
            (New(u), New(u2)) => u.is_subspace_of(u2),
            (New(u), Hyperbolic(m)) => u.is_subspace_of(m.direction()),
            (Elliptic(b), New(u)) => b.direction().orthogonal_complement().is_subspace_of(u),
            (Hyperbolic(_), New(_)) | (New(_), Elliptic(_)) => false,
        })
    }

    pub fn lt(&self, other: &PosetElement) -> Result<bool> {
        Ok(self != other && self.leq(other)?)
    }

    pub fn comparable(&self, other: &PosetElement) -> Result<bool> {
        Ok(self.leq(other)? || other.leq(self)?)
    }

    /// `other` covers `self` in the global poset.
    pub fn is_covered_by(&self, other: &PosetElement) -> Result<bool> {
        Ok(self.lt(other)? && other.rank() == self.rank() + 1)
    }

    /// The linear subspace through which this element compares with
    /// hyperbolic and new elements: `Dir(B)⊥`, `Span(M)`, or `U`.
    pub(crate) fn signature(&self) -> LinearSubspace {
        match self {
            PosetElement::Elliptic(b) => b.direction().orthogonal_complement(),
            PosetElement::Hyperbolic(m) => m.span(),
            PosetElement::New(u) => u.clone(),
        }
    }
}

impl fmt::Display for PosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetElement::Elliptic(b) => write!(f, "e[{b}]"),
            PosetElement::Hyperbolic(m) => write!(f, "h[{m}]"),
            PosetElement::New(u) => write!(f, "n[{u}]"),
        }
    }
}

/// `e^{Fix(w)}` for elliptic `w`, `h^{Mov(w)}` for hyperbolic `w`.
pub fn inv_map(w: &Isometry) -> PosetElement {
    let class = w.classify();
    match class.tag {
        Tag::Elliptic => PosetElement::Elliptic(class.min_set),
        Tag::Hyperbolic => PosetElement::Hyperbolic(class.move_set),
    }
}
