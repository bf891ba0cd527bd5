//! Seeded generators over small integer data. Everything is deterministic
//! for a given generator state.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::affine::{AffineSubspaceE, AffineSubspaceV, Point};
use crate::factorization::Factorization;
use crate::isometry::{interval_contains, motion_reflection, Isometry, Reflection};
use crate::linalg::{int, LinearSubspace, Vector};
use crate::poset::{inv_map, PosetElement};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector<R: Rng>(n: usize, bound: i64, rng: &mut R) -> Vector {
    Vector::new((0..n).map(|_| int(rng.gen_range(-bound..=bound))).collect())
}

fn random_nonzero<R: Rng>(n: usize, bound: i64, rng: &mut R) -> Vector {
    loop {
        let v = random_vector(n, bound, rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Integer root and mirror point, entries in `[-2, 2]`.
pub fn random_reflection<R: Rng>(n: usize, rng: &mut R) -> Reflection {
    let root = random_nonzero(n, 2, rng);
    let point = Point::at(random_vector(n, 2, rng));
    Reflection::from_root(&root, &point).expect("nonzero root")
}

/// A product of `k` random reflections, then a random integer translation
/// when `translate` is set.
pub fn random_isometry<R: Rng>(n: usize, k: usize, translate: bool, rng: &mut R) -> Isometry {
    let mut w = Isometry::identity(n);
    for _ in 0..k {
        w = w.compose(&random_reflection(n, rng).to_isometry());
    }
    if translate {
        w = Isometry::translation(random_vector(n, 2, rng)).compose(&w);
    }
    w
}

/// `count` isometries with `k` uniform in `0..=n+2` and a translation half
/// of the time.
pub fn corpus(n: usize, count: usize, seed: u64) -> Vec<Isometry> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(0..=n + 2);
            let translate = rng.gen_bool(0.5);
            random_isometry(n, k, translate, &mut rng)
        })
        .collect()
}

/// Peel off reflections `r` with `ℓ(r v) < ℓ(v)`, each swapping a random
/// integer point with its image.
pub fn random_minimal_factorization<R: Rng>(w: &Isometry, rng: &mut R) -> Factorization {
    let n = w.dim();
    let mut v = w.clone();
    let mut factors = Vec::with_capacity(w.reflection_length());
    while !v.is_identity() {
        let len = v.reflection_length();
        let r = (0..20)
            .map(|_| Point::at(random_vector(n, 3, rng)))
            .chain(std::iter::once(Point::origin(n)))
            .chain((0..n).map(|i| Point::at(Vector::unit(n, i))))
            .filter_map(|x| motion_reflection(&v, &x).ok())
            .find(|r| r.to_isometry().compose(&v).reflection_length() < len)
            .expect("some affine basis point is moved");
        v = r.to_isometry().compose(&v);
        factors.push(r);
    }
    Factorization::new(w.clone(), factors).expect("product telescopes to w")
}

/// Prefix products of random minimal factorizations; all lie in `[1, w]`.
pub fn sample_interval<R: Rng>(w: &Isometry, count: usize, rng: &mut R) -> Vec<Isometry> {
    (0..count)
        .map(|_| {
            let f = random_minimal_factorization(w, rng);
            let j = rng.gen_range(0..=f.len());
            let u = f.prefix_products().swap_remove(j);
            debug_assert!(interval_contains(w, &u).expect("dims agree"));
            u
        })
        .collect()
}

/// A random maximal chain of `P(w)`, descending from `inv(w)` to `e^E`.
pub fn random_maximal_chain<R: Rng>(w: &Isometry, rng: &mut R) -> Vec<PosetElement> {
    let n = w.dim();
    let mut current = inv_map(w);
    let mut chain = vec![current.clone()];
    loop {
        let next = match &current {
            PosetElement::Elliptic(b) if b.is_whole() => break,
            PosetElement::Elliptic(b) => {
                let v = loop {
                    let v = random_nonzero(n, 2, rng);
                    if !b.direction().contains(&v) {
                        break v;
                    }
                };
                let wider = b.direction().with_vector(&v).expect("dims agree");
                PosetElement::Elliptic(AffineSubspaceE::new(b.point(), wider).expect("dims agree"))
            }
            PosetElement::Hyperbolic(m) if m.dim() > 0 && rng.gen_bool(0.5) => {
                let v = loop {
                    let v = random_nonzero(n, 2, rng);
                    if m.direction().basis().iter().any(|d| d.dot(&v) != int(0)) {
                        break v;
                    }
                };
                let normal = LinearSubspace::span(n, &[v]).expect("dims agree").orthogonal_complement();
                let dir = m.direction().intersect(&normal).expect("dims agree");
                let through = random_point_of(m, rng);
                PosetElement::Hyperbolic(AffineSubspaceV::standard_form(dir, &through).expect("dims agree"))
            }
            PosetElement::Hyperbolic(m) => {
                let point = Point::at(random_vector(n, 2, rng));
                let b = AffineSubspaceE::new(&point, m.perp()).expect("dims agree");
                PosetElement::Elliptic(b)
            }
            PosetElement::New(_) => unreachable!("inv(w) is never new"),
        };
        chain.push(next.clone());
        current = next;
    }
    chain
}

fn random_point_of<R: Rng>(m: &AffineSubspaceV, rng: &mut R) -> Vector {
    m.direction()
        .basis()
        .iter()
        .fold(m.mu().clone(), |acc, d| acc.add_scaled(&int(rng.gen_range(-2..=2)), d))
}
