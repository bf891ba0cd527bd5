//! Finite restrictions of a model poset, with bounds computed by brute force
//! from `leq` alone.

use crate::affine::{AffineSubspaceE, AffineSubspaceV, Point};
use crate::error::{Error, Result};
use crate::linalg::{int, LinearSubspace, Vector};
use crate::poset::{Bowtie, JoinResult, MeetResult, PosetContext, PosetElement};

#[derive(Clone, Debug)]
pub struct FiniteUniverse {
    context: PosetContext,
    elements: Vec<PosetElement>,
    /// `order[i][j]` iff `elements[i] ≤ elements[j]`.
    order: Vec<Vec<bool>>,
}

impl FiniteUniverse {
    /// Duplicates are dropped; every element must lie in `context`.
    pub fn new(context: PosetContext, elements: Vec<PosetElement>) -> Result<Self> {
        let mut uniq: Vec<PosetElement> = Vec::with_capacity(elements.len());
        for p in elements {
            context.check(&p)?;
            if !uniq.contains(&p) {
                uniq.push(p);
            }
        }
        let order = uniq
            .iter()
            .map(|p| uniq.iter().map(|q| p.leq(q)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteUniverse { context, elements: uniq, order })
    }

    pub fn context(&self) -> &PosetContext {
        &self.context
    }

    pub fn elements(&self) -> &[PosetElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, p: &PosetElement) -> Option<usize> {
        self.elements.iter().position(|q| q == p)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order[i][j]
    }

    pub fn lower_bounds(&self, q: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&i| q.iter().all(|&j| self.order[i][j])).collect()
    }

    pub fn upper_bounds(&self, q: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&i| q.iter().all(|&j| self.order[j][i])).collect()
    }

    /// Maximal lower bounds of `q` within the universe.
    pub fn meet_indices(&self, q: &[usize]) -> Vec<usize> {
        let lower = self.lower_bounds(q);
        lower
            .iter()
            .copied()
            .filter(|&i| !lower.iter().any(|&j| j != i && self.order[i][j]))
            .collect()
    }

    /// Minimal upper bounds of `q` within the universe.
    pub fn join_indices(&self, q: &[usize]) -> Vec<usize> {
        let upper = self.upper_bounds(q);
        upper
            .iter()
            .copied()
            .filter(|&i| !upper.iter().any(|&j| j != i && self.order[j][i]))
            .collect()
    }

    pub fn definitional_meet(&self, q: &[PosetElement]) -> Result<Vec<PosetElement>> {
        let idx = self.indices(q)?;
        Ok(self.meet_indices(&idx).into_iter().map(|i| self.elements[i].clone()).collect())
    }

    pub fn definitional_join(&self, q: &[PosetElement]) -> Result<Vec<PosetElement>> {
        let idx = self.indices(q)?;
        Ok(self.join_indices(&idx).into_iter().map(|i| self.elements[i].clone()).collect())
    }

    fn indices(&self, q: &[PosetElement]) -> Result<Vec<usize>> {
        q.iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| Error::InvalidContext(format!("{p} is not in the universe")))
            })
            .collect()
    }

    /// Every bowtie of the universe, each unordered pair of pairs once.
    pub fn search_bowties(&self) -> Vec<Bowtie> {
        let n = self.len();
        let incomparable = |i: usize, j: usize| !self.order[i][j] && !self.order[j][i];
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !incomparable(a, b) {
                    continue;
                }
                let meet = self.meet_indices(&[a, b]);
                for (x, &c) in meet.iter().enumerate() {
                    for &d in &meet[x + 1..] {
                        if !incomparable(c, d) {
                            continue;
                        }
                        let join = self.join_indices(&[c, d]);
                        if join.contains(&a) && join.contains(&b) {
                            out.push(Bowtie {
                                a: self.elements[a].clone(),
                                b: self.elements[b].clone(),
                                c: self.elements[c].clone(),
                                d: self.elements[d].clone(),
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

/// `h^{M1}, h^{M2}` with a common direction `U`, and `e^{B1}, e^{B2}` with
/// `Dir(B1) = Dir(B2) = U⊥`.
pub fn is_normal_form_bowtie(t: &Bowtie) -> bool {
    use PosetElement::*;
    match (&t.a, &t.b, &t.c, &t.d) {
        (Hyperbolic(m1), Hyperbolic(m2), Elliptic(b1), Elliptic(b2)) => {
            let u = m1.direction();
            let perp = u.orthogonal_complement();
            m2.direction() == u && b1.direction() == &perp && b2.direction() == &perp
        }
        _ => false,
    }
}

/// All subspaces cut out by equations `x_i = c` with `c ∈ {0, 1}` that lie
/// in `context`: elliptic, hyperbolic and, when augmented, the coordinate
/// subspaces of `Dir(M)` as new elements.
pub fn curated_universe(context: &PosetContext) -> Result<FiniteUniverse> {
    let n = context.ambient();
    let mut elements = Vec::new();
    for pattern in 0..3usize.pow(n as u32) {
        let (free, values) = decode(pattern, n);
        let dir = LinearSubspace::coordinate(n, &free);
        let e = PosetElement::Elliptic(AffineSubspaceE::new(&Point::new(values.clone()), dir.clone())?);
        if context.contains(&e) {
            elements.push(e);
        }
        let m = AffineSubspaceV::standard_form(dir, &Vector::new(values))?;
        if !m.is_linear() {
            let h = PosetElement::Hyperbolic(m);
            if context.contains(&h) {
                elements.push(h);
            }
        }
    }
    if context.is_augmented() {
        for mask in 1..(1usize << n) {
            let axes: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let p = PosetElement::New(LinearSubspace::coordinate(n, &axes));
            if context.contains(&p) {
                elements.push(p);
            }
        }
    }
    FiniteUniverse::new(context.clone(), elements)
}

/// Base-3 digits: `0` free, `1` fixed at 0, `2` fixed at 1.
fn decode(mut pattern: usize, n: usize) -> (Vec<usize>, Vec<crate::linalg::Scalar>) {
    let mut free = Vec::new();
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let digit = pattern % 3;
        pattern /= 3;
        if digit == 0 {
            free.push(i);
        }
        values.push(int(i64::from(digit == 2)));
    }
    (free, values)
}

/// Compare a pairwise meet with the universe. `Err` describes the first
/// disagreement.
pub fn check_meet(u: &FiniteUniverse, q: &[usize], result: &MeetResult) -> std::result::Result<(), String> {
    let lower = u.lower_bounds(q);
    let definitional = u.meet_indices(q);
    let q_el: Vec<&PosetElement> = q.iter().map(|&i| &u.elements[i]).collect();
    match result {
        MeetResult::Unique(r) => check_unique(u, &q_el, &lower, &definitional, r, true),
        MeetResult::EllipticFamily { orth } => {
            let below_member = |p: &PosetElement| match p {
                PosetElement::Elliptic(b) => b.direction().orthogonal_complement().is_subspace_of(orth),
                _ => false,
            };
            let rep = result.representative();
            for q in &q_el {
                if !le(&rep, q) {
                    return Err(format!("family member {rep} is not below {q}"));
                }
            }
            for &i in &lower {
                if !below_member(&u.elements[i]) {
                    return Err(format!("lower bound {} is below no family member", u.elements[i]));
                }
            }
            for (i, p) in u.elements.iter().enumerate() {
                if result.contains(p) != definitional.contains(&i) {
                    return Err(format!("family and universe disagree on {p}"));
                }
            }
            Ok(())
        }
    }
}

/// Dual of [`check_meet`].
pub fn check_join(u: &FiniteUniverse, q: &[usize], result: &JoinResult) -> std::result::Result<(), String> {
    let upper = u.upper_bounds(q);
    let definitional = u.join_indices(q);
    let q_el: Vec<&PosetElement> = q.iter().map(|&i| &u.elements[i]).collect();
    match result {
        JoinResult::Unique(r) => check_unique(u, &q_el, &upper, &definitional, r, false),
        JoinResult::HyperbolicFamily { dir, within } => {
            let above_member = |p: &PosetElement| match p {
                PosetElement::Hyperbolic(m) => dir.is_subspace_of(m.direction()) && m.is_subset_of(within),
                _ => false,
            };
            let rep = result.representative();
            for q in &q_el {
                if !le(q, &rep) {
                    return Err(format!("family member {rep} is not above {q}"));
                }
            }
            for &i in &upper {
                if !above_member(&u.elements[i]) {
                    return Err(format!("upper bound {} is above no family member", u.elements[i]));
                }
            }
            for (i, p) in u.elements.iter().enumerate() {
                if result.contains(p) != definitional.contains(&i) {
                    return Err(format!("family and universe disagree on {p}"));
                }
            }
            Ok(())
        }
    }
}

/// `r` bounds `q`, dominates every universe bound, and is the unique
/// definitional answer whenever it lies in the universe.
fn check_unique(
    u: &FiniteUniverse,
    q: &[&PosetElement],
    bounds: &[usize],
    definitional: &[usize],
    r: &PosetElement,
    is_meet: bool,
) -> std::result::Result<(), String> {
    u.context.check(r).map_err(|e| format!("{r}: {e}"))?;
    let (word, rel): (&str, fn(&PosetElement, &PosetElement) -> bool) =
        if is_meet { ("lower", le) } else { ("upper", ge) };
    for p in q {
        if !rel(r, p) {
            return Err(format!("{r} is not a {word} bound of {p}"));
        }
    }
    for &i in bounds {
        if !rel(&u.elements[i], r) {
            return Err(format!("{word} bound {} is not dominated by {r}", u.elements[i]));
        }
    }
    if let Some(i) = u.index_of(r) {
        if definitional != [i] {
            return Err(format!("universe has {} extremal bounds besides {r}", definitional.len()));
        }
    }
    Ok(())
}

fn le(p: &PosetElement, q: &PosetElement) -> bool {
    p.leq(q).expect("dimensions agree")
}

fn ge(p: &PosetElement, q: &PosetElement) -> bool {
    q.leq(p).expect("dimensions agree")
}
