//! Seeded random instances and a finite-instance check of the cofibration
//! category axioms.
//!
//! Every instance is a pure function of its [`InstanceSpec`]; suites derive
//! one child spec per instance from the master seed, so results do not depend
//! on scheduling.

use std::collections::VecDeque;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cofib::{
    box_projection_is_product, box_subset, check_cofibration, codiagonal_factorization,
    compose_cofibrations, verify_retract, ProjectingDecomposition, RetractDiagram,
};
use crate::digraph::{gen_j, gen_line, gen_mn_cycle, pushout, DiGraph, GraphMap, PushoutSquare, Vertex, VertexSubset};
use crate::error::{Error, Result};
use crate::excision::{omega_pushout_dims, verify_e, verify_excision, verify_l_boundary};
use crate::field::Field;
use crate::pathhom::{is_homology_iso, relative_homology};

/// Rejection-sampling attempts before the layered fallback is used.
pub const COFIBRATION_RETRIES: usize = 32;

const CHILD_STREAM: u64 = u64::MAX;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceSpec {
    pub seed: u64,
    pub vertex_budget: usize,
    pub edge_density: f64,
    /// Homology and chain checks run in degrees below this cutoff.
    pub max_degree: usize,
}

impl InstanceSpec {
    pub fn new(seed: u64, vertex_budget: usize, edge_density: f64, max_degree: usize) -> Result<Self> {
        if !(0.0..=1.0).contains(&edge_density) {
            return Err(Error::Parameter(format!("edge density {edge_density} outside [0, 1]")));
        }
        if vertex_budget == 0 {
            return Err(Error::Parameter("vertex budget must be at least 1".into()));
        }
        Ok(InstanceSpec {
            seed,
            vertex_budget,
            edge_density,
            max_degree,
        })
    }

    /// The generator every sampler in this module starts from.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// An independent stream for secondary choices.
    pub fn aux_rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(stream);
        r
    }

    /// Spec for instance `index` of a suite: word `index` of a reserved
    /// stream of the master seed becomes the child seed.
    pub fn child(&self, index: u64) -> InstanceSpec {
        let mut r = self.aux_rng(CHILD_STREAM);
        r.set_word_pos(2 * index as u128);
        InstanceSpec {
            seed: r.next_u64(),
            ..self.clone()
        }
    }

    pub fn with_budget(&self, vertex_budget: usize) -> InstanceSpec {
        InstanceSpec {
            vertex_budget: vertex_budget.max(1),
            ..self.clone()
        }
    }
}

/// Each ordered pair of distinct vertices becomes an edge independently.
pub fn digraph_with<R: Rng>(rng: &mut R, n: usize, density: f64) -> DiGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    DiGraph::from_indices(n, &edges)
}

pub fn random_digraph(spec: &InstanceSpec) -> Result<DiGraph> {
    if spec.vertex_budget == 0 {
        return Err(Error::Parameter("vertex budget must be at least 1".into()));
    }
    Ok(digraph_with(&mut spec.rng(), spec.vertex_budget, spec.edge_density))
}

/// Random oriented tree on `n` vertices: each vertex after the first joins
/// an earlier one, with the edge direction chosen by a coin flip.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> DiGraph {
    let edges: Vec<_> = (1..n)
        .map(|v| {
            let p = rng.gen_range(0..v);
            if rng.gen_bool(0.5) {
                (p, v)
            } else {
                (v, p)
            }
        })
        .collect();
    DiGraph::from_indices(n, &edges)
}

/// Vertices reachable from `seeds`, seeds included.
pub fn successor_closure(g: &DiGraph, seeds: &[Vertex]) -> VertexSubset {
    let mut mask = vec![false; g.vertex_count()];
    let mut queue: VecDeque<Vertex> = seeds.iter().copied().collect();
    for &s in seeds {
        mask[s] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in g.out_neighbors(u) {
            if !mask[v] {
                mask[v] = true;
                queue.push_back(v);
            }
        }
    }
    VertexSubset::from_mask(mask)
}

/// A verified cofibration `A -> X` together with how it was found.
#[derive(Clone, Debug)]
pub struct CofibInstance {
    pub graph: DiGraph,
    pub sub: VertexSubset,
    pub decomposition: ProjectingDecomposition,
    /// Number of rejection-sampling attempts made.
    pub attempts: usize,
    pub fallback: bool,
}

impl CofibInstance {
    pub fn sub_graph(&self) -> DiGraph {
        self.graph.induced(&self.sub)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "graph": self.graph.to_json_value(),
            "subset": self.sub.labels(&self.graph),
            "fallback": self.fallback,
            "attempts": self.attempts,
        })
    }
}

/// Samples successor-closed subsets of `g` until one admits a projecting
/// decomposition. The whole graph is skipped as uninformative; one draw in
/// ten is the empty subset.
pub fn sample_cofibration_in<R: Rng>(
    g: &DiGraph,
    rng: &mut R,
    retries: usize,
) -> Option<(VertexSubset, ProjectingDecomposition, usize)> {
    let n = g.vertex_count();
    if n == 0 || rng.gen_ratio(1, 10) {
        let a = VertexSubset::empty(g);
        let d = check_cofibration(g, &a).expect("subset of g").decomposition?;
        return Some((a, d, 1));
    }
    for attempt in 1..=retries {
        let k = rng.gen_range(1..=n.min(2));
        let seeds = rand::seq::index::sample(rng, n, k).into_vec();
        let a = successor_closure(g, &seeds);
        if n > 1 && a.len() == n {
            continue;
        }
        let verdict = check_cofibration(g, &a).expect("subset of g");
        if let Some(d) = verdict.decomposition {
            return Some((a, d, attempt));
        }
    }
    None
}

/// Random cofibration on exactly `vertex_budget` vertices.
///
/// Falls back to a layered construction once the retries are spent: a random
/// graph on the first vertices forms `A`, and each further vertex gets a
/// single edge toward an earlier one.
pub fn random_cofibration(spec: &InstanceSpec) -> Result<CofibInstance> {
    let mut rng = spec.rng();
    let g = digraph_with(&mut rng, spec.vertex_budget, spec.edge_density);
    if let Some((sub, decomposition, attempts)) = sample_cofibration_in(&g, &mut rng, COFIBRATION_RETRIES) {
        return Ok(CofibInstance {
            graph: g,
            sub,
            decomposition,
            attempts,
            fallback: false,
        });
    }
    log::debug!("seed {}: rejection budget exhausted, using the layered fallback", spec.seed);
    let n = spec.vertex_budget;
    let k = if n == 1 { 1 } else { rng.gen_range(1..n) };
    let base = digraph_with(&mut rng, k, spec.edge_density);
    let mut edges: Vec<_> = base.edges().collect();
    for v in k..n {
        edges.push((v, rng.gen_range(0..v)));
    }
    let graph = DiGraph::from_indices(n, &edges);
    let sub = VertexSubset::from_mask((0..n).map(|v| v < k).collect());
    let decomposition = check_cofibration(&graph, &sub)?
        .decomposition
        .ok_or_else(|| Error::NotCofibration("layered fallback produced a non-cofibration".into()))?;
    Ok(CofibInstance {
        graph,
        sub,
        decomposition,
        attempts: COFIBRATION_RETRIES,
        fallback: true,
    })
}

/// A random map from `a` onto a graph with at most `max_target` vertices.
/// The target gets the edges the map needs plus random extras.
pub fn random_attaching_map<R: Rng>(a: &DiGraph, rng: &mut R, max_target: usize, density: f64) -> GraphMap {
    let m = rng.gen_range(1..=max_target.max(1));
    let vm: Vec<Vertex> = a.vertices().map(|_| rng.gen_range(0..m)).collect();
    let mut edges: Vec<_> = a
        .edges()
        .map(|(u, v)| (vm[u], vm[v]))
        .filter(|(u, v)| u != v)
        .collect();
    for u in 0..m {
        for v in 0..m {
            if u != v && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    let b = DiGraph::from_indices(m, &edges);
    GraphMap::new(a.clone(), b, vm).expect("every image edge was added")
}

#[derive(Clone, Debug)]
pub struct SquareInstance {
    pub cofibration: CofibInstance,
    pub square: PushoutSquare,
}

/// Pushout of a random cofibration along a random attaching map.
pub fn random_pushout_square(spec: &InstanceSpec, max_target: usize) -> Result<SquareInstance> {
    let c = random_cofibration(spec)?;
    let f = random_attaching_map(&c.sub_graph(), &mut spec.aux_rng(1), max_target, spec.edge_density);
    let square = pushout(&c.graph, &c.sub, &f)?;
    Ok(SquareInstance { cofibration: c, square })
}

fn fresh_label(g: &DiGraph) -> String {
    (0..)
        .map(|i| format!("w{i}"))
        .find(|l| g.index_of(l).is_none())
        .expect("unbounded supply")
}

/// Adds a vertex joined to `v` by one edge, in either direction; the map is
/// the inclusion.
fn attach_leaf(g: &DiGraph, v: Vertex, outward: bool) -> GraphMap {
    let n = g.vertex_count();
    let mut labels = g.labels().to_vec();
    labels.push(fresh_label(g));
    let mut edges: Vec<_> = g.edges().collect();
    edges.push(if outward { (v, n) } else { (n, v) });
    let h = DiGraph::build(labels, edges).expect("fresh label");
    GraphMap::new(g.clone(), h, g.vertices().collect()).expect("inclusion")
}

/// Vertices with exactly one neighbour, joined by a single edge.
fn leaves(g: &DiGraph) -> Vec<(Vertex, Vertex)> {
    g.vertices()
        .filter_map(|v| match (g.out_neighbors(v), g.in_neighbors(v)) {
            ([w], []) | ([], [w]) => Some((v, *w)),
            _ => None,
        })
        .collect()
}

/// Folds leaf `v` onto its neighbour `w`.
fn collapse_leaf(g: &DiGraph, v: Vertex, w: Vertex) -> GraphMap {
    let keep = VertexSubset::from_mask(g.vertices().map(|u| u != v).collect());
    let h = g.induced(&keep);
    let vm = g
        .vertices()
        .map(|u| keep.position(if u == v { w } else { u }).expect("kept"))
        .collect();
    GraphMap::new(g.clone(), h, vm).expect("collapsing a leaf is a map")
}

/// A composite of `steps` leaf attachments and leaf collapses starting at
/// `g`. Such maps induce isomorphisms on path homology; callers that rely on
/// this still verify it up to their cutoff.
pub fn random_weak_equivalence<R: Rng>(g: &DiGraph, rng: &mut R, steps: usize) -> GraphMap {
    let mut f = GraphMap::identity(g);
    for _ in 0..steps {
        let cur = f.codomain().clone();
        let ls = leaves(&cur);
        let step = if !ls.is_empty() && rng.gen_bool(0.5) {
            let (v, w) = ls[rng.gen_range(0..ls.len())];
            collapse_leaf(&cur, v, w)
        } else if cur.vertex_count() > 0 {
            let v = rng.gen_range(0..cur.vertex_count());
            attach_leaf(&cur, v, rng.gen_bool(0.5))
        } else {
            continue;
        };
        f = f.then(&step).expect("composable");
    }
    f
}

/// Pushout of a random cofibration along a random leaf-move map.
pub fn random_weak_equivalence_square(spec: &InstanceSpec, steps: usize) -> Result<SquareInstance> {
    let c = random_cofibration(spec)?;
    let f = random_weak_equivalence(&c.sub_graph(), &mut spec.aux_rng(2), steps);
    let square = pushout(&c.graph, &c.sub, &f)?;
    Ok(SquareInstance { cofibration: c, square })
}

/// A retract `A' -> X'` of a cofibration `A -> X`, with the outer leg.
#[derive(Clone, Debug)]
pub struct RetractInstance {
    pub outer: DiGraph,
    pub diagram: RetractDiagram,
}

/// Builds `X` either as the cylinder `X' □ I1` with `A = A' □ I1`, or as
/// `X' ⊔ Z` for a second cofibration `A_Z -> Z` folded onto one vertex.
pub fn random_retract(spec: &InstanceSpec) -> Result<RetractInstance> {
    let inner = random_cofibration(spec)?;
    let mut rng = spec.aux_rng(3);
    let (xi, ai) = (&inner.graph, &inner.sub);
    let n = xi.vertex_count();
    let other = random_cofibration(&spec.child(0).with_budget(spec.vertex_budget.min(3)))?;
    let fold_target = if other.sub.is_empty() {
        Some(rng.gen_range(0..n))
    } else {
        ai.members().first().copied()
    };
    match fold_target {
        Some(c) if rng.gen_bool(0.5) => {
            let outer = xi.disjoint_union(&other.graph);
            let m = other.graph.vertex_count();
            let outer_sub = VertexSubset::from_mask(
                (0..n + m)
                    .map(|v| if v < n { ai.contains(v) } else { other.sub.contains(v - n) })
                    .collect(),
            );
            let section = GraphMap::new(xi.clone(), outer.clone(), (0..n).collect())?;
            let rvm = (0..n + m).map(|v| if v < n { v } else { c }).collect();
            let retraction = GraphMap::new(outer.clone(), xi.clone(), rvm)?;
            Ok(RetractInstance {
                diagram: RetractDiagram {
                    outer_sub,
                    inner_sub: ai.clone(),
                    section,
                    retraction,
                },
                outer,
            })
        }
        _ => {
            let i1 = gen_line(1);
            let outer = xi.box_product(&i1);
            let outer_sub = box_subset(xi, ai, &i1, &VertexSubset::full(&i1));
            let section = GraphMap::new(xi.clone(), outer.clone(), (0..n).map(|v| 2 * v).collect())?;
            let retraction = GraphMap::new(outer.clone(), xi.clone(), (0..2 * n).map(|v| v / 2).collect())?;
            Ok(RetractInstance {
                diagram: RetractDiagram {
                    outer_sub,
                    inner_sub: ai.clone(),
                    section,
                    retraction,
                },
                outer,
            })
        }
    }
}

/// Axioms and closure properties exercised by the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    C1Identity,
    C1Composition,
    C2,
    C3Initial,
    C4Pushout,
    C4AcyclicPushout,
    Excision,
    OmegaPushout,
    ConeComparison,
    C5Factorization,
    C6,
    C7,
    LeftProperness,
    RetractClosure,
    BoxCofibration,
    BoxWeakEquivalence,
}

impl Axiom {
    pub const ALL: [Axiom; 16] = [
        Axiom::C1Identity,
        Axiom::C1Composition,
        Axiom::C2,
        Axiom::C3Initial,
        Axiom::C4Pushout,
        Axiom::C4AcyclicPushout,
        Axiom::Excision,
        Axiom::OmegaPushout,
        Axiom::ConeComparison,
        Axiom::C5Factorization,
        Axiom::C6,
        Axiom::C7,
        Axiom::LeftProperness,
        Axiom::RetractClosure,
        Axiom::BoxCofibration,
        Axiom::BoxWeakEquivalence,
    ];

    pub fn description(self) -> &'static str {
        match self {
            Axiom::C1Identity => "identities are cofibrations",
            Axiom::C1Composition => "composites of cofibrations are cofibrations",
            Axiom::C2 => "weak equivalences satisfy 2-out-of-6",
            Axiom::C3Initial => "the inclusion of the empty graph is a cofibration",
            Axiom::C4Pushout => "pushouts of cofibrations are cofibrations",
            Axiom::C4AcyclicPushout => "pushouts of acyclic cofibrations are acyclic",
            Axiom::Excision => "pushout squares of cofibrations preserve relative homology",
            Axiom::OmegaPushout => "chain dimensions are additive over pushouts of cofibrations",
            Axiom::ConeComparison => "the mapping cone maps isomorphically onto the relative complex",
            Axiom::C5Factorization => "the codiagonal factors through the cylinder on J",
            Axiom::C6 => "infinite coproducts of cofibrations",
            Axiom::C7 => "transfinite composites of acyclic cofibrations",
            Axiom::LeftProperness => "pushouts of weak equivalences along cofibrations are weak equivalences",
            Axiom::RetractClosure => "retracts of cofibrations are cofibrations",
            Axiom::BoxCofibration => "box products of cofibrations are cofibrations with product projection",
            Axiom::BoxWeakEquivalence => "box products of weak equivalences are weak equivalences",
        }
    }

    /// Axioms that are not exercised on finite instances.
    pub fn exemption(self) -> Option<&'static str> {
        match self {
            Axiom::C2 => Some("trivial-by-functoriality"),
            Axiom::C6 | Axiom::C7 => Some("out-of-scope-infinite"),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub description: &'static str,
    /// `checked`, `trivial-by-functoriality` or `out-of-scope-infinite`.
    pub status: &'static str,
    pub checked: usize,
    pub passed: usize,
    pub counterexamples: Vec<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NegativeControl {
    pub name: &'static str,
    pub expected: &'static str,
    pub observed: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub spec: InstanceSpec,
    pub instances: usize,
    pub checks: Vec<AxiomCheck>,
    pub negative_controls: Vec<NegativeControl>,
    pub all_passed: bool,
}

type Outcome = (Axiom, Option<Value>);

/// Records the result of one check; errors count as counterexamples.
fn record(out: &mut Vec<Outcome>, axiom: Axiom, check: impl FnOnce() -> Result<Option<Value>>) {
    let r = match check() {
        Ok(v) => v,
        Err(e) => Some(json!({ "error": e.to_string() })),
    };
    out.push((axiom, r));
}

fn fails(ok: bool, witness: impl FnOnce() -> Value) -> Option<Value> {
    (!ok).then(witness)
}

fn relative_acyclic<F: Field>(g: &DiGraph, a: &VertexSubset, cutoff: usize) -> Result<bool> {
    Ok(relative_homology::<F>(g, a, cutoff)?.is_acyclic())
}

fn square_json(sq: &PushoutSquare) -> Value {
    json!({
        "x": sq.x.to_json_value(),
        "subset": sq.a.labels(&sq.x),
        "b": sq.b().to_json_value(),
        "map": sq.attaching.label_map().into_iter().collect::<std::collections::BTreeMap<_, _>>(),
    })
}

/// Checks the pushed-forward inclusion of a square; shared with the
/// negative control.
fn pushout_stays_cofibration(sq: &PushoutSquare) -> Result<Option<Value>> {
    let v = check_cofibration(&sq.y, &sq.b_subset())?;
    Ok(fails(v.is_cofibration(), || {
        json!({ "square": square_json(sq), "verdict": v.to_json(&sq.y) })
    }))
}

/// Runs every per-instance check on instance `spec`.
pub fn run_instance<F: Field>(spec: &InstanceSpec) -> Vec<Outcome> {
    let k = spec.max_degree;
    let mut out = Vec::new();
    let mut rng = spec.aux_rng(10);
    let budget = rng.gen_range(1..=spec.vertex_budget);
    let small = spec.with_budget(budget);
    let c = match random_cofibration(&small) {
        Ok(c) => c,
        Err(e) => {
            out.push((Axiom::C4Pushout, Some(json!({ "seed": spec.seed, "error": e.to_string() }))));
            return out;
        }
    };
    let (x, a) = (&c.graph, &c.sub);

    record(&mut out, Axiom::C1Identity, || {
        let v = check_cofibration(x, &VertexSubset::full(x))?;
        Ok(fails(v.is_cofibration(), || json!({ "graph": x.to_json_value() })))
    });
    record(&mut out, Axiom::C3Initial, || {
        let v = check_cofibration(x, &VertexSubset::empty(x))?;
        Ok(fails(v.is_cofibration(), || json!({ "graph": x.to_json_value() })))
    });
    record(&mut out, Axiom::C1Composition, || {
        let inner = c.sub_graph();
        let Some((b, _, _)) = sample_cofibration_in(&inner, &mut rng, COFIBRATION_RETRIES) else {
            return Ok(None);
        };
        let lifted = VertexSubset::from_indices(x, b.members().iter().map(|&v| a.members()[v]))?;
        let v = compose_cofibrations(x, &lifted, a)?;
        Ok(fails(v.is_cofibration(), || {
            json!({ "instance": c.to_json(), "inner": lifted.labels(x) })
        }))
    });
    record(&mut out, Axiom::ConeComparison, || {
        let e = verify_e::<F>(x, a, k)?;
        let l = verify_l_boundary::<F>(x, a, k)?;
        Ok(fails(e.verified && l.holds, || {
            json!({ "instance": c.to_json(), "cone": e, "boundary": l })
        }))
    });

    let f = random_attaching_map(&c.sub_graph(), &mut rng, 6, spec.edge_density);
    match pushout(x, a, &f) {
        Ok(sq) => {
            record(&mut out, Axiom::C4Pushout, || pushout_stays_cofibration(&sq));
            record(&mut out, Axiom::Excision, || {
                let r = verify_excision::<F>(&sq, k)?;
                Ok(fails(r.verified, || json!({ "square": square_json(&sq), "report": r })))
            });
            record(&mut out, Axiom::OmegaPushout, || {
                let r = omega_pushout_dims::<F>(&sq, k)?;
                Ok(fails(r.holds, || json!({ "square": square_json(&sq), "report": r })))
            });
            if relative_acyclic::<F>(x, a, k).unwrap_or(false) {
                record(&mut out, Axiom::C4AcyclicPushout, || {
                    let ok = relative_acyclic::<F>(&sq.y, &sq.b_subset(), k)?;
                    Ok(fails(ok, || json!({ "square": square_json(&sq) })))
                });
            }
        }
        Err(e) => out.push((Axiom::C4Pushout, Some(json!({ "error": e.to_string() })))),
    }

    record(&mut out, Axiom::LeftProperness, || {
        let w = random_weak_equivalence(&c.sub_graph(), &mut rng, 3);
        if !is_homology_iso::<F>(&w, k)? {
            return Ok(Some(json!({ "error": "leaf moves changed homology", "map": w.label_map() })));
        }
        let sq = pushout(x, a, &w)?;
        let ok = is_homology_iso::<F>(&sq.x_to_y, k)?;
        Ok(fails(ok, || json!({ "square": square_json(&sq) })))
    });

    record(&mut out, Axiom::C5Factorization, || {
        let base = digraph_with(&mut rng, budget.min(3), spec.edge_density);
        let r = codiagonal_factorization(&base).verify::<F>(k)?;
        Ok(fails(r.verified, || json!({ "graph": base.to_json_value(), "report": r })))
    });

    record(&mut out, Axiom::RetractClosure, || {
        let r = random_retract(&small.child(1))?;
        let outer = check_cofibration(&r.outer, &r.diagram.outer_sub)?;
        if !outer.is_cofibration() {
            return Ok(Some(json!({ "error": "outer leg is not a cofibration", "graph": r.outer.to_json_value() })));
        }
        let v = verify_retract(&r.diagram)?;
        Ok(fails(v.is_cofibration(), || json!({ "graph": r.outer.to_json_value() })))
    });

    record(&mut out, Axiom::BoxCofibration, || {
        let p = random_cofibration(&small.child(2).with_budget(budget.min(3)))?;
        let q = random_cofibration(&small.child(3).with_budget(budget.min(3)))?;
        let g = p.graph.box_product(&q.graph);
        let s = box_subset(&p.graph, &p.sub, &q.graph, &q.sub);
        let v = check_cofibration(&g, &s)?;
        let ok = v.decomposition.as_ref().is_some_and(|d| {
            box_projection_is_product(d, &p.decomposition, &q.decomposition, q.graph.vertex_count())
        });
        Ok(fails(ok, || json!({ "left": p.to_json(), "right": q.to_json() })))
    });

    record(&mut out, Axiom::BoxWeakEquivalence, || {
        let g = digraph_with(&mut rng, budget.min(3), spec.edge_density);
        let h = digraph_with(&mut rng, budget.min(2), spec.edge_density);
        let w = random_weak_equivalence(&g, &mut rng, 2);
        let id = GraphMap::identity(&h);
        let ok = is_homology_iso::<F>(&w.box_product(&id), k)? && is_homology_iso::<F>(&id.box_product(&w), k)?;
        Ok(fails(ok, || json!({ "map": w.label_map(), "other": h.to_json_value() })))
    });
    out
}

fn negative_controls<F: Field>(cutoff: usize) -> Vec<NegativeControl> {
    let mut v = Vec::new();
    // an edge out of the ends of J
    let j = gen_j();
    let mut edges: Vec<_> = j.edges().collect();
    edges.push((j.vertex("2").unwrap(), j.vertex("1").unwrap()));
    let broken = DiGraph::build(j.labels().to_vec(), edges).expect("same labels");
    let ends = VertexSubset::from_labels(&broken, &["-2", "2"]).expect("J ends");
    let observed = pushout(&broken, &ends, &GraphMap::to_point(&broken.induced(&ends)))
        .and_then(|sq| pushout_stays_cofibration(&sq))
        .map_or_else(|e| format!("error: {e}"), |r| if r.is_some() { "flagged".into() } else { "accepted".into() });
    v.push(NegativeControl {
        name: "edge-out-injected",
        expected: "flagged",
        ok: observed == "flagged",
        observed,
    });
    // contracting either run of the (3,1)-cycle
    let c31 = gen_mn_cycle(3, 1).expect("fixed graph");
    for (name, labels) in [("contract-edge-23", ["2", "3"]), ("contract-edge-01", ["0", "1"])] {
        let a = VertexSubset::from_labels(&c31, &labels).expect("fixed labels");
        let observed = pushout(&c31, &a, &GraphMap::to_point(&c31.induced(&a)))
            .and_then(|sq| verify_excision::<F>(&sq, cutoff))
            .map_or_else(
                |e| match e {
                    Error::NotCofibration(_) => "rejected".to_string(),
                    e => format!("error: {e}"),
                },
                |_| "accepted".into(),
            );
        v.push(NegativeControl {
            name,
            expected: "rejected",
            ok: observed == "rejected",
            observed,
        });
    }
    v
}

/// Runs `instances` seeded instances in parallel and merges the results in
/// axiom order.
pub fn axiom_suite<F: Field>(spec: &InstanceSpec, instances: usize) -> AxiomReport {
    let outcomes: Vec<Vec<Outcome>> = (0..instances)
        .into_par_iter()
        .map(|i| run_instance::<F>(&spec.child(i as u64)))
        .collect();
    let mut checks: Vec<AxiomCheck> = Axiom::ALL
        .iter()
        .map(|&axiom| AxiomCheck {
            axiom,
            description: axiom.description(),
            status: axiom.exemption().unwrap_or("checked"),
            checked: 0,
            passed: 0,
            counterexamples: Vec::new(),
        })
        .collect();
    for (i, inst) in outcomes.into_iter().enumerate() {
        for (axiom, r) in inst {
            let c = checks.iter_mut().find(|c| c.axiom == axiom).expect("listed");
            c.checked += 1;
            match r {
                None => c.passed += 1,
                Some(w) => c.counterexamples.push(json!({ "instance": i, "witness": w })),
            }
        }
    }
    let negative_controls = negative_controls::<F>(spec.max_degree);
    let all_passed =
        checks.iter().all(|c| c.passed == c.checked) && negative_controls.iter().all(|n| n.ok);
    AxiomReport {
        spec: spec.clone(),
        instances,
        checks,
        negative_controls,
        all_passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F3};

    fn spec(seed: u64) -> InstanceSpec {
        InstanceSpec::new(seed, 6, 0.5, 3).unwrap()
    }

    #[test]
    fn generation_is_deterministic() {
        let a = random_digraph(&spec(42)).unwrap();
        let b = random_digraph(&spec(42)).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(spec(42).child(7), spec(42).child(7));
        assert_ne!(spec(42).child(7).seed, spec(42).child(8).seed);
    }

    #[test]
    fn degenerate_parameters() {
        let one = random_digraph(&InstanceSpec::new(1, 1, 0.5, 2).unwrap()).unwrap();
        assert_eq!((one.vertex_count(), one.edge_count()), (1, 0));
        let none = random_digraph(&InstanceSpec::new(1, 7, 0.0, 2).unwrap()).unwrap();
        assert_eq!(none.edge_count(), 0);
        assert!(InstanceSpec::new(1, 0, 0.5, 2).is_err());
        assert!(InstanceSpec::new(1, 3, 1.5, 2).is_err());
    }

    #[test]
    fn sampled_cofibrations_verify() {
        let base = spec(5);
        let mut fallbacks = 0;
        for i in 0..60 {
            let c = random_cofibration(&base.child(i)).unwrap();
            assert!(check_cofibration(&c.graph, &c.sub).unwrap().is_cofibration());
            fallbacks += c.fallback as usize;
        }
        assert!(fallbacks < 60);
    }

    #[test]
    fn single_attached_vertex() {
        // budget 2 forces k = 1 in the fallback: one vertex of height one
        let g = DiGraph::from_indices(2, &[(1, 0)]);
        let a = VertexSubset::from_indices(&g, [0]).unwrap();
        let d = check_cofibration(&g, &a).unwrap().decomposition.unwrap();
        assert_eq!(d.height(1), Some(1));
    }

    #[test]
    fn leaf_moves_are_weak_equivalences() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = digraph_with(&mut rng, 4, 0.4);
            let w = random_weak_equivalence(&g, &mut rng, 4);
            assert!(is_homology_iso::<Rational>(&w, 3).unwrap());
        }
    }

    #[test]
    fn trees_have_the_right_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let t = random_tree(&mut rng, 8);
        assert_eq!((t.vertex_count(), t.edge_count(), t.weak_component_count()), (8, 7, 1));
    }

    #[test]
    fn small_suite_passes() {
        let r = axiom_suite::<F3>(&InstanceSpec::new(11, 5, 0.35, 3).unwrap(), 12);
        assert!(r.all_passed, "{}", serde_json::to_string_pretty(&r).unwrap());
        let checked = |a: Axiom| r.checks.iter().find(|c| c.axiom == a).unwrap().checked;
        assert_eq!(checked(Axiom::C1Identity), 12);
        assert_eq!(checked(Axiom::C6), 0);
        assert!(r.negative_controls.iter().all(|n| n.ok));
    }
}
