use std::fmt::Write;

use isometry_intervals::json::{
    AffineJson, ElementJson, FactorizationJson, IsometryJson, SubspaceJson, VectorJson,
};
use isometry_intervals::oracle::{random_maximal_chain, rng};
use isometry_intervals::{
    chain_to_factorization, factor, factorization_to_chain, Factorization, HasseDiagram, Isometry, JoinResult,
    MeetResult, PosetContext, PosetElement, Vector,
};
use serde_json::{json, Value};

use crate::input::{self, poset_err, ChainDoc, Failure, PosetDoc};

/// One result in every format the command supports.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub dot: Option<String>,
}

pub struct Options {
    pub dim: Option<usize>,
    pub seed: u64,
    pub augmented: bool,
}

fn ej(p: &PosetElement) -> Value {
    serde_json::to_value(ElementJson::from(p)).expect("serializable")
}

fn ij(w: &Isometry) -> Value {
    serde_json::to_value(IsometryJson::from(w)).expect("serializable")
}

fn vj(v: &Vector) -> Value {
    let coords: VectorJson = v.coords().iter().cloned().map(isometry_intervals::json::Rational).collect();
    serde_json::to_value(coords).expect("serializable")
}

fn to_value<T: serde::Serialize>(t: T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

pub fn analyze(text: &str, o: &Options) -> Result<Report, Failure> {
    let w = input::isometry(&input::parse(text)?, o.dim)?;
    let class = w.classify();
    let (mu, u) = w.standard_splitting();
    let json = json!({
        "isometry": ij(&w),
        "tag": class.tag.as_str(),
        "length": class.length,
        "orientation": w.orientation(),
        "move_set": to_value(AffineJson::from(&class.move_set)),
        "min_set": to_value(AffineJson::from(&class.min_set)),
        "splitting": { "shift": vj(&mu), "elliptic_part": ij(&u) },
        "invariant": ej(&isometry_intervals::inv_map(&w)),
    });
    let mut t = String::new();
    writeln!(t, "isometry: {w}").unwrap();
    writeln!(t, "type: {}", class.tag).unwrap();
    writeln!(t, "reflection length: {}", class.length).unwrap();
    writeln!(t, "orientation: {}", w.orientation()).unwrap();
    writeln!(t, "move-set: {}", class.move_set).unwrap();
    writeln!(t, "min-set: {}", class.min_set).unwrap();
    writeln!(t, "splitting: translate by {mu} after {u}").unwrap();
    Ok(Report { json, text: t, dot: None })
}

/// Canonical for seed 0, otherwise driven by a random maximal chain.
fn factorization(w: &Isometry, chain: Option<&str>, o: &Options) -> Result<Factorization, Failure> {
    if let Some(text) = chain {
        let doc: ChainDoc = input::parse(text)?;
        return chain_to_factorization(&doc.elements()?, w).map_err(poset_err);
    }
    if o.seed == 0 {
        return Ok(factor(w));
    }
    let chain = random_maximal_chain(w, &mut rng(o.seed));
    chain_to_factorization(&chain, w).map_err(poset_err)
}

pub fn factorize(text: &str, chain: Option<&str>, o: &Options) -> Result<Report, Failure> {
    let w = input::isometry(&input::parse(text)?, o.dim)?;
    let f = factorization(&w, chain, o)?;
    let mut t = format!("target: {w}\nlength: {}\n", f.len());
    for (i, r) in f.factors().iter().enumerate() {
        writeln!(t, "r{}: root {}, mirror through {}", i + 1, r.root(), r.mirror().point()).unwrap();
    }
    Ok(Report { json: to_value(FactorizationJson::from(&f)), text: t, dot: None })
}

pub fn chain(text: &str, chain: Option<&str>, o: &Options) -> Result<Report, Failure> {
    let w = input::isometry(&input::parse(text)?, o.dim)?;
    let f = factorization(&w, chain, o)?;
    let elements = factorization_to_chain(&f).map_err(poset_err)?;
    let mut t = String::new();
    for p in &elements {
        writeln!(t, "{} {p}", p.rank()).unwrap();
    }
    let dot = HasseDiagram::new(&elements).map_err(poset_err)?.to_dot();
    let json = json!({ "chain": elements.iter().map(ej).collect::<Vec<_>>() });
    Ok(Report { json, text: t, dot: Some(dot) })
}

fn context(doc: &PosetDoc, o: &Options) -> Result<PosetContext, Failure> {
    doc.context(o.augmented, o.dim)
}

pub fn order(text: &str, o: &Options) -> Result<Report, Failure> {
    let doc: PosetDoc = input::parse(text)?;
    let ctx = context(&doc, o)?;
    let (p, q) = (doc.operand("p")?, doc.operand("q")?);
    let leq = ctx.leq(&p, &q).map_err(poset_err)?;
    let geq = ctx.leq(&q, &p).map_err(poset_err)?;
    let json = json!({
        "leq": leq,
        "geq": geq,
        "comparable": leq || geq,
        "rank_p": p.rank(),
        "rank_q": q.rank(),
    });
    let t = format!("p <= q: {leq}\nq <= p: {geq}\nrank p: {}\nrank q: {}\n", p.rank(), q.rank());
    Ok(Report { json, text: t, dot: None })
}

pub fn meet(text: &str, o: &Options) -> Result<Report, Failure> {
    let doc: PosetDoc = input::parse(text)?;
    let ctx = context(&doc, o)?;
    let r = ctx.meet(&doc.operand("p")?, &doc.operand("q")?).map_err(poset_err)?;
    let json = match &r {
        MeetResult::Unique(p) => json!({ "kind": "unique", "element": ej(p) }),
        MeetResult::EllipticFamily { orth } => json!({
            "kind": "family",
            "orth": to_value(SubspaceJson::from(orth)),
            "representative": ej(&r.representative()),
        }),
    };
    Ok(Report { json, text: format!("{r}\n"), dot: None })
}

pub fn join(text: &str, o: &Options) -> Result<Report, Failure> {
    let doc: PosetDoc = input::parse(text)?;
    let ctx = context(&doc, o)?;
    let r = ctx.join(&doc.operand("p")?, &doc.operand("q")?).map_err(poset_err)?;
    let json = match &r {
        JoinResult::Unique(p) => json!({ "kind": "unique", "element": ej(p) }),
        JoinResult::HyperbolicFamily { dir, within } => json!({
            "kind": "family",
            "dir": to_value(SubspaceJson::from(dir)),
            "within": to_value(AffineJson::from(within)),
            "representative": ej(&r.representative()),
        }),
    };
    Ok(Report { json, text: format!("{r}\n"), dot: None })
}

pub fn bowtie(text: &str, o: &Options) -> Result<Report, Failure> {
    let doc: PosetDoc = input::parse(text)?;
    let ctx = context(&doc, o)?;
    let u = doc.u.as_ref().map(input::subspace).transpose()?;
    let b = ctx.find_bowtie(u.as_ref()).map_err(poset_err)?;
    let verified = ctx.is_bowtie(&b).map_err(poset_err)?;
    let json = json!({ "a": ej(&b.a), "b": ej(&b.b), "c": ej(&b.c), "d": ej(&b.d), "verified": verified });
    let t = format!("a: {}\nb: {}\nc: {}\nd: {}\nverified: {verified}\n", b.a, b.b, b.c, b.d);
    let shape = [ctx.bottom(), b.c, b.d, b.a, b.b, ctx.top().clone()];
    let dot = HasseDiagram::new(&shape).map_err(poset_err)?.to_dot();
    Ok(Report { json, text: t, dot: Some(dot) })
}

pub fn lattice(text: &str, o: &Options) -> Result<Report, Failure> {
    let doc: PosetDoc = input::parse(text)?;
    let ctx = context(&doc, o)?;
    let is_lattice = ctx.is_lattice();
    let mut json = json!({ "lattice": is_lattice, "augmented": ctx.is_augmented(), "top": ej(ctx.top()) });
    let mut t = format!("lattice: {is_lattice}\n");
    if !is_lattice {
        let b = ctx.find_bowtie(None).map_err(poset_err)?;
        json["bowtie"] = json!({ "a": ej(&b.a), "b": ej(&b.b), "c": ej(&b.c), "d": ej(&b.d) });
        writeln!(t, "bowtie: {} {} : {} {}", b.a, b.b, b.c, b.d).unwrap();
    }
    Ok(Report { json, text: t, dot: None })
}

/// Meet and join of a finite set, in the augmented poset when the top is
/// hyperbolic.
pub fn complete(text: &str, o: &Options) -> Result<Report, Failure> {
    let doc: PosetDoc = input::parse(text)?;
    let plain = context(&doc, o)?;
    let ctx = if plain.is_hyperbolic() && !plain.is_augmented() {
        PosetContext::new(plain.top().clone(), true).map_err(poset_err)?
    } else {
        plain
    };
    let q = doc.element_list()?;
    let m = ctx.dm_meet(&q).map_err(poset_err)?;
    let j = ctx.dm_join(&q).map_err(poset_err)?;
    let json = json!({ "meet": ej(&m), "join": ej(&j) });
    Ok(Report { json, text: format!("meet: {m}\njoin: {j}\n"), dot: None })
}

pub fn hasse(text: &str, o: &Options) -> Result<Report, Failure> {
    let doc: PosetDoc = input::parse(text)?;
    let elements = doc.element_list()?;
    if doc.has_context() {
        let ctx = context(&doc, o)?;
        for p in &elements {
            ctx.check(p).map_err(|e| Failure::Poset(format!("{p}: {e}")))?;
        }
    } else if let Some(p) = elements.first() {
        input::check_dim(o.dim, p.ambient())?;
    }
    let d = HasseDiagram::new(&elements).map_err(poset_err)?;
    let nodes: Vec<Value> = d
        .nodes
        .iter()
        .enumerate()
        .map(|(i, p)| json!({ "id": format!("n{i}"), "label": d.label(i), "element": ej(p) }))
        .collect();
    let edges: Vec<Value> = d.edges.iter().map(|(i, j)| json!([format!("n{i}"), format!("n{j}")])).collect();
    let mut t = String::new();
    for (i, p) in d.nodes.iter().enumerate() {
        writeln!(t, "n{i} {} {p}", d.label(i)).unwrap();
    }
    for (i, j) in &d.edges {
        writeln!(t, "n{i} < n{j}").unwrap();
    }
    Ok(Report { json: json!({ "nodes": nodes, "edges": edges }), text: t, dot: Some(d.to_dot()) })
}
