use std::fmt;

use crate::affine::{AffineSubspaceE, AffineSubspaceV, Point};
use crate::error::{check_dim, Error, Result};
use crate::isometry::Isometry;
use crate::linalg::LinearSubspace;

use super::{inv_map, Kind, PosetElement};

/// Maximal lower bounds of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MeetResult {
    Unique(PosetElement),
    /// Every `e^B` with `Dir(B)⊥ = orth`.
    EllipticFamily { orth: LinearSubspace },
}

impl MeetResult {
    pub fn contains(&self, p: &PosetElement) -> bool {
        match self {
            MeetResult::Unique(q) => q == p,
            MeetResult::EllipticFamily { orth } => match p {
                PosetElement::Elliptic(b) => &b.direction().orthogonal_complement() == orth,
                _ => false,
            },
        }
    }

    pub fn unique(&self) -> Option<&PosetElement> {
        match self {
            MeetResult::Unique(p) => Some(p),
            MeetResult::EllipticFamily { .. } => None,
        }
    }

    /// One member of the result.
    pub fn representative(&self) -> PosetElement {
        match self {
            MeetResult::Unique(p) => p.clone(),
            MeetResult::EllipticFamily { orth } => PosetElement::Elliptic(
                AffineSubspaceE::new(&Point::origin(orth.ambient()), orth.orthogonal_complement())
                    .expect("dimensions agree"),
            ),
        }
    }
}

impl fmt::Display for MeetResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeetResult::Unique(p) => write!(f, "{p}"),
            MeetResult::EllipticFamily { orth } => {
                write!(f, "every e[B] with Dir(B)^perp = {orth}")
            }
        }
    }
}

/// Minimal upper bounds of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JoinResult {
    Unique(PosetElement),
    /// Every `h^{M'}` with `M' ⊆ within` and `Dir(M') = dir`.
    HyperbolicFamily { dir: LinearSubspace, within: AffineSubspaceV },
}

impl JoinResult {
    pub fn contains(&self, p: &PosetElement) -> bool {
        match self {
            JoinResult::Unique(q) => q == p,
            JoinResult::HyperbolicFamily { dir, within } => match p {
                PosetElement::Hyperbolic(m) => m.direction() == dir && m.is_subset_of(within),
                _ => false,
            },
        }
    }

    pub fn unique(&self) -> Option<&PosetElement> {
        match self {
            JoinResult::Unique(p) => Some(p),
            JoinResult::HyperbolicFamily { .. } => None,
        }
    }

    pub fn representative(&self) -> PosetElement {
        match self {
            JoinResult::Unique(p) => p.clone(),
            JoinResult::HyperbolicFamily { dir, within } => PosetElement::Hyperbolic(
                AffineSubspaceV::standard_form(dir.clone(), within.mu()).expect("dimensions agree"),
            ),
        }
    }
}

impl fmt::Display for JoinResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JoinResult::Unique(p) => write!(f, "{p}"),
            JoinResult::HyperbolicFamily { dir, within } => {
                write!(f, "every h[M'] with M' in {within} and Dir(M') = {dir}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bowtie {
    pub a: PosetElement,
    pub b: PosetElement,
    pub c: PosetElement,
    pub d: PosetElement,
}

/// A model poset: everything below `top`, plus the `n^U` when augmented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetContext {
    top: PosetElement,
    augmented: bool,
}

impl PosetContext {
    /// Augmentation requires a hyperbolic top.
    pub fn new(top: PosetElement, augmented: bool) -> Result<Self> {
        match top.kind() {
            Kind::New => Err(Error::InvalidContext("the top must be elliptic or hyperbolic".into())),
            Kind::Elliptic if augmented => {
                Err(Error::InvalidContext("only hyperbolic posets are augmented".into()))
            }
            _ => Ok(PosetContext { top, augmented }),
        }
    }

    /// The model poset `P(w)`, with top `inv(w)`.
    pub fn for_isometry(w: &Isometry, augmented: bool) -> Result<Self> {
        PosetContext::new(inv_map(w), augmented)
    }

    pub fn top(&self) -> &PosetElement {
        &self.top
    }

    pub fn is_augmented(&self) -> bool {
        self.augmented
    }

    pub fn ambient(&self) -> usize {
        self.top.ambient()
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.top.kind() == Kind::Hyperbolic
    }

    pub fn bottom(&self) -> PosetElement {
        PosetElement::bottom(self.ambient())
    }

    pub(crate) fn top_move_set(&self) -> Option<&AffineSubspaceV> {
        match &self.top {
            PosetElement::Hyperbolic(m) => Some(m),
            _ => None,
        }
    }

    pub fn contains(&self, p: &PosetElement) -> bool {
        self.check(p).is_ok()
    }

    pub fn check(&self, p: &PosetElement) -> Result<()> {
        check_dim(self.ambient(), p.ambient())?;
        if let PosetElement::New(u) = p {
            let m = self.top_move_set().filter(|_| self.augmented).ok_or_else(|| {
                Error::InvalidContext("new elements only exist in augmented posets".into())
            })?;
            if u.is_zero() || !u.is_subspace_of(m.direction()) || u == m.direction() {
                return Err(Error::NotBelowTop);
            }
            return Ok(());
        }
        if p.leq(&self.top)? {
            Ok(())
        } else {
            Err(Error::NotBelowTop)
        }
    }

    pub fn leq(&self, p: &PosetElement, q: &PosetElement) -> Result<bool> {
        self.check(p)?;
        self.check(q)?;
        p.leq(q)
    }

    pub fn rank(&self, p: &PosetElement) -> Result<usize> {
        self.check(p)?;
        Ok(p.rank())
    }

    /// Maximal lower bounds of `p` and `q`; always unique when augmented.
    pub fn meet(&self, p: &PosetElement, q: &PosetElement) -> Result<MeetResult> {
        self.check(p)?;
        self.check(q)?;
        if self.augmented {
            return self.dm_meet(&[p.clone(), q.clone()]).map(MeetResult::Unique);
        }
        use PosetElement::*;
        Ok(match (p, q) {
            (Elliptic(b1), Elliptic(b2)) => MeetResult::Unique(Elliptic(b1.hull(b2)?)),
            (Hyperbolic(m), Elliptic(b)) | (Elliptic(b), Hyperbolic(m)) => {
                MeetResult::Unique(Elliptic(b.extend(&m.perp())?))
            }
            (Hyperbolic(m1), Hyperbolic(m2)) => match m1.intersect(m2)? {
                Some(m3) => MeetResult::Unique(Hyperbolic(m3)),
                None => {
                    let orth = m1.span().intersect(&m2.span())?;
                    if orth.is_zero() {
                        MeetResult::Unique(self.bottom())
                    } else {
                        MeetResult::EllipticFamily { orth }
                    }
                }
            },
            _ => unreachable!("new elements are rejected outside augmented posets"),
        })
    }

    /// Minimal upper bounds of `p` and `q` below the top.
    pub fn join(&self, p: &PosetElement, q: &PosetElement) -> Result<JoinResult> {
        self.check(p)?;
        self.check(q)?;
        if self.augmented {
            return self.dm_join(&[p.clone(), q.clone()]).map(JoinResult::Unique);
        }
        use PosetElement::*;
        let top = match self.top_move_set() {
            None => {
                // Both contain the top's subspace, so they meet.
                let (Elliptic(b1), Elliptic(b2)) = (p, q) else {
                    unreachable!("elliptic posets hold only elliptic elements")
                };
                let c = b1.intersect(b2)?.expect("both contain the top subspace");
                return Ok(JoinResult::Unique(Elliptic(c)));
            }
            Some(m) => m,
        };
        Ok(match (p, q) {
            (Hyperbolic(m1), Hyperbolic(m2)) => JoinResult::Unique(Hyperbolic(m1.hull(m2)?)),
            (Hyperbolic(m), Elliptic(b)) | (Elliptic(b), Hyperbolic(m)) => {
                let z = m.span().sum(&b.direction().orthogonal_complement())?;
                JoinResult::Unique(self.element_from_space(&z)?)
            }
            (Elliptic(b1), Elliptic(b2)) => match b1.intersect(b2)? {
                Some(c) => JoinResult::Unique(Elliptic(c)),
                None => {
                    let z = b1
                        .direction()
                        .orthogonal_complement()
                        .sum(&b2.direction().orthogonal_complement())?;
                    if z == *top.direction() {
                        JoinResult::Unique(self.top.clone())
                    } else if z.is_subspace_of(top.direction()) {
                        JoinResult::HyperbolicFamily { dir: z, within: top.clone() }
                    } else {
                        JoinResult::Unique(self.element_from_space(&z)?)
                    }
                }
            },
            _ => unreachable!("new elements are rejected outside augmented posets"),
        })
    }

    /// Hyperbolic posets are lattices exactly when `dim M ≤ 1`.
    pub fn is_lattice(&self) -> bool {
        match &self.top {
            PosetElement::Hyperbolic(m) => self.augmented || m.dim() <= 1,
            _ => true,
        }
    }

    /// The bowtie `h^{μ+U}, h^{μ+d+U}, e^{U⊥}, e^{u+U⊥}` for a proper
    /// nontrivial `U ⊂ Dir(M)`, `d ∈ Dir(M) \ U`, `u` the first basis
    /// vector of `U`. Defaults to `U` spanned by the first basis vector.
    pub fn find_bowtie(&self, u: Option<&LinearSubspace>) -> Result<Bowtie> {
        let m = self
            .top_move_set()
            .ok_or_else(|| Error::InvalidContext("bowties need a hyperbolic top".into()))?;
        if self.augmented {
            return Err(Error::InvalidContext("augmented posets are lattices".into()));
        }
        let dm = m.direction();
        if dm.dim() < 2 {
            return Err(Error::InvalidContext(format!(
                "the top move-set has dimension {}, bowties need at least 2",
                dm.dim()
            )));
        }
        let u = match u {
            Some(u) => {
                check_dim(self.ambient(), u.ambient())?;
                if u.is_zero() || !u.is_subspace_of(dm) || u == dm {
                    return Err(Error::InvalidSubspace(
                        "U must be a proper nontrivial subspace of Dir(M)".into(),
                    ));
                }
                u.clone()
            }
            None => LinearSubspace::span_unchecked(self.ambient(), vec![dm.basis()[0].clone()]),
        };
        let d = dm
            .basis()
            .iter()
            .find(|v| !u.contains(v))
            .expect("U is proper in Dir(M)")
            .clone();
        let first = u.basis()[0].clone();
        let n = self.ambient();
        let m1 = AffineSubspaceV::standard_form(u.clone(), m.mu())?;
        let m2 = AffineSubspaceV::standard_form(u.clone(), &(m.mu() + &d))?;
        let perp = u.orthogonal_complement();
        let b1 = AffineSubspaceE::new(&Point::origin(n), perp.clone())?;
        let b2 = AffineSubspaceE::new(&Point::at(first), perp)?;
        Ok(Bowtie {
            a: PosetElement::Hyperbolic(m1),
            b: PosetElement::Hyperbolic(m2),
            c: PosetElement::Elliptic(b1),
            d: PosetElement::Elliptic(b2),
        })
    }

    /// `c, d` are maximal lower bounds of `a, b` and `a, b` are minimal
    /// upper bounds of `c, d`, all four distinct.
    pub fn is_bowtie(&self, t: &Bowtie) -> Result<bool> {
        let all = [&t.a, &t.b, &t.c, &t.d];
        for p in all {
            self.check(p)?;
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if all[i] == all[j] {
                    return Ok(false);
                }
            }
        }
        for lower in [&t.c, &t.d] {
            for upper in [&t.a, &t.b] {
                if !lower.leq(upper)? {
                    return Ok(false);
                }
            }
        }
        if t.a.comparable(&t.b)? || t.c.comparable(&t.d)? {
            return Ok(false);
        }
        let meet = self.meet(&t.a, &t.b)?;
        let join = self.join(&t.c, &t.d)?;
        Ok(meet.contains(&t.c) && meet.contains(&t.d) && join.contains(&t.a) && join.contains(&t.b))
    }

    /// `e^C ↦ Dir(C)⊥`, an isomorphism onto `Lin(Dir(B)⊥)` for top `e^B`.
    pub fn elliptic_iso(&self, p: &PosetElement) -> Result<LinearSubspace> {
        self.elliptic_top()?;
        self.check(p)?;
        match p {
            PosetElement::Elliptic(c) => Ok(c.direction().orthogonal_complement()),
            _ => unreachable!("elliptic posets hold only elliptic elements"),
        }
    }

    /// Inverse of [`elliptic_iso`](Self::elliptic_iso): `W ↦ e^{B + W⊥}`.
    pub fn elliptic_iso_inverse(&self, w: &LinearSubspace) -> Result<PosetElement> {
        let b = self.elliptic_top()?;
        check_dim(self.ambient(), w.ambient())?;
        if !w.is_subspace_of(&b.direction().orthogonal_complement()) {
            return Err(Error::InvalidSubspace("W must lie in Dir(B)^perp".into()));
        }
        Ok(PosetElement::Elliptic(AffineSubspaceE::new(b.point(), w.orthogonal_complement())?))
    }

    fn elliptic_top(&self) -> Result<&AffineSubspaceE> {
        match &self.top {
            PosetElement::Elliptic(b) => Ok(b),
            _ => Err(Error::InvalidContext("expected an elliptic top".into())),
        }
    }
}
