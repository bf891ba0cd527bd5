use isometry_intervals::affine::{AffineSubspaceE, AffineSubspaceV, Point};
use isometry_intervals::oracle::{
    check_join, check_meet, corpus, curated_universe, is_normal_form_bowtie, random_minimal_factorization, rng,
    sample_interval, FiniteUniverse,
};
use isometry_intervals::{
    interval_contains, interval_leq, inv_map, JoinResult, LinearSubspace, MeetResult, PosetContext, PosetElement,
    Vector,
};

fn hyperbolic_top(n: usize, dir_axes: &[usize], mu: &[i64], augmented: bool) -> PosetContext {
    let m = AffineSubspaceV::standard_form(LinearSubspace::coordinate(n, dir_axes), &Vector::from_ints(mu)).unwrap();
    PosetContext::new(PosetElement::Hyperbolic(m), augmented).unwrap()
}

fn elliptic_top(n: usize) -> PosetContext {
    PosetContext::new(PosetElement::Elliptic(AffineSubspaceE::singleton(Point::origin(n))), false).unwrap()
}

/// Curated contexts: plane and line tops in R³, a line top in R², and
/// elliptic tops.
fn contexts(augmented: bool) -> Vec<PosetContext> {
    let mut out = vec![
        hyperbolic_top(3, &[0, 1], &[0, 0, 1], augmented),
        hyperbolic_top(3, &[0], &[0, 0, 1], augmented),
        hyperbolic_top(2, &[0], &[0, 1], augmented),
    ];
    if !augmented {
        out.push(elliptic_top(2));
        out.push(elliptic_top(3));
    }
    out
}

fn universes(augmented: bool) -> Vec<FiniteUniverse> {
    contexts(augmented).iter().map(|c| curated_universe(c).unwrap()).collect()
}

#[test]
fn curated_universe_sizes() {
    let sizes: Vec<usize> = universes(false).iter().map(FiniteUniverse::len).collect();
    assert_eq!(sizes, vec![36, 12, 12, 4, 8]);
    let sizes: Vec<usize> = universes(true).iter().map(FiniteUniverse::len).collect();
    assert_eq!(sizes, vec![38, 12, 12]);
}

#[test]
fn order_axioms_hold_exhaustively() {
    for u in universes(false).iter().chain(universes(true).iter()) {
        let k = u.len();
        for i in 0..k {
            assert!(u.leq(i, i));
            for j in 0..k {
                if i != j && u.leq(i, j) {
                    assert!(!u.leq(j, i), "antisymmetry fails");
                    assert!(u.elements()[i].rank() < u.elements()[j].rank());
                }
                for m in 0..k {
                    if u.leq(i, j) && u.leq(j, m) {
                        assert!(u.leq(i, m), "transitivity fails");
                    }
                }
            }
        }
    }
}

#[test]
fn pairwise_meets_and_joins_match_brute_force() {
    for augmented in [false, true] {
        for u in universes(augmented) {
            let ctx = u.context().clone();
            for i in 0..u.len() {
                for j in i..u.len() {
                    let (p, q) = (&u.elements()[i], &u.elements()[j]);
                    let meet = ctx.meet(p, q).unwrap();
                    check_meet(&u, &[i, j], &meet).unwrap_or_else(|e| panic!("meet({p}, {q}): {e}"));
                    let join = ctx.join(p, q).unwrap();
                    check_join(&u, &[i, j], &join).unwrap_or_else(|e| panic!("join({p}, {q}): {e}"));
                }
            }
        }
    }
}

#[test]
fn complete_meets_and_joins_match_brute_force() {
    let mut subsets = 0;
    for u in universes(true).into_iter().chain([curated_universe(&elliptic_top(3)).unwrap()]) {
        let ctx = u.context().clone();
        let k = u.len();
        for i in 0..k {
            for j in i..k {
                for m in j..k {
                    let idx = [i, j, m];
                    let q: Vec<PosetElement> = idx.iter().map(|&x| u.elements()[x].clone()).collect();
                    let meet = MeetResult::Unique(ctx.dm_meet(&q).unwrap());
                    check_meet(&u, &idx, &meet).unwrap_or_else(|e| panic!("dm_meet{idx:?}: {e}"));
                    let join = JoinResult::Unique(ctx.dm_join(&q).unwrap());
                    check_join(&u, &idx, &join).unwrap_or_else(|e| panic!("dm_join{idx:?}: {e}"));
                    subsets += 1;
                }
            }
        }
    }
    assert!(subsets > 10_000);
}

#[test]
fn augmented_universes_are_lattices() {
    for u in universes(true) {
        for i in 0..u.len() {
            for j in 0..u.len() {
                assert!(u.meet_indices(&[i, j]).len() == 1);
                assert!(u.join_indices(&[i, j]).len() == 1);
            }
        }
    }
}

#[test]
fn new_elements_are_meets_and_joins() {
    let ctx = hyperbolic_top(3, &[0, 1], &[0, 0, 1], true);
    let plain = hyperbolic_top(3, &[0, 1], &[0, 0, 1], false);
    for axis in 0..2 {
        let u = LinearSubspace::coordinate(3, &[axis]);
        let t = plain.find_bowtie(Some(&u)).unwrap();
        let n = PosetElement::New(u);
        assert_eq!(ctx.dm_meet(&[t.a, t.b]).unwrap(), n);
        assert_eq!(ctx.dm_join(&[t.c, t.d]).unwrap(), n);
    }
}

#[test]
fn bowtie_search_matches_lattice_decision() {
    for u in universes(false).iter().chain(universes(true).iter()) {
        let found = u.search_bowties();
        assert_eq!(found.is_empty(), u.context().is_lattice(), "top {}", u.context().top());
        assert!(found.iter().all(is_normal_form_bowtie));
        for t in &found {
            assert!(u.context().is_bowtie(t).unwrap());
        }
    }
}

#[test]
fn covering_pairs_map_to_covering_pairs() {
    let mut r = rng(21);
    let mut pairs = 0;
    for n in 2..=4 {
        for w in corpus(n, 40, 300 + n as u64) {
            let f = random_minimal_factorization(&w, &mut r);
            let suffixes = f.suffix_products();
            for pair in suffixes.windows(2) {
                let (upper, lower) = (inv_map(&pair[0]), inv_map(&pair[1]));
                assert!(lower.leq(&upper).unwrap());
                assert_eq!(lower.rank() + 1, upper.rank());
                pairs += 1;
            }
        }
    }
    assert!(pairs > 100);
}

#[test]
fn interval_order_matches_invariant_order() {
    let mut r = rng(5);
    for n in 2..=3 {
        for w in corpus(n, 15, 500 + n as u64) {
            let top = inv_map(&w);
            let sample = sample_interval(&w, 6, &mut r);
            for u in &sample {
                assert!(interval_contains(&w, u).unwrap());
                assert!(inv_map(u).leq(&top).unwrap());
                for v in &sample {
                    let by_group = interval_leq(&w, u, v).unwrap();
                    let by_poset = inv_map(u).leq(&inv_map(v)).unwrap();
                    assert_eq!(by_group, by_poset, "w = {w}, u = {u}, v = {v}");
                    if inv_map(u) == inv_map(v) {
                        assert_eq!(u, v);
                    }
                }
            }
        }
    }
}

#[test]
fn elliptic_isomorphism_is_bijective_on_curated_family() {
    let ctx = elliptic_top(3);
    let u = curated_universe(&ctx).unwrap();
    let mut images = Vec::new();
    for p in u.elements() {
        let w = ctx.elliptic_iso(p).unwrap();
        assert_eq!(&ctx.elliptic_iso_inverse(&w).unwrap(), p);
        assert!(!images.contains(&w));
        images.push(w);
    }
    for (i, p) in u.elements().iter().enumerate() {
        for (j, q) in u.elements().iter().enumerate() {
            assert_eq!(p.leq(q).unwrap(), images[i].is_subspace_of(&images[j]));
        }
    }
}
