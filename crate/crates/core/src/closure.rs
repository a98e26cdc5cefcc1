//! The closure order on 2x2 *congruence classes and its Hasse diagrams.
//!
//! `M ⪯ N` means the class of `M` lies in the closure of the class of `N`,
//! so arbitrarily small perturbations of `M` reach `N`. The relation is
//! decided by a rule table; Hasse diagrams exist only for finite vertex sets,
//! where they are the transitive reduction of the relation.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use num_complex::Complex64;

use crate::canonical::{CanonicalForm, PairKind, Unimodular};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::stratification::codimension;

/// Slack granted on the closed side of the cone and half-plane tests.
pub const CONDITION_TOL: f64 = 1e-9;

/// Nonnegative `(a, b)` with `l = a m + b n`, if they exist within tolerance.
/// Coefficients that are negative within tolerance are clamped to zero.
pub fn cone_coefficients(lambda: Unimodular, mu: Unimodular, nu: Unimodular) -> Option<(f64, f64)> {
    let (l, m, n) = (lambda.value(), mu.value(), nu.value());
    let det = (m.conj() * n).im;
    if det.abs() <= CONDITION_TOL {
        // Collinear generators: a ray when m = n, a line when m = -n.
        let along = (l * m.conj()).re;
        let off = (l * m.conj()).im.abs();
        if off > CONDITION_TOL {
            return None;
        }
        return if along >= 0.0 {
            Some((along, 0.0))
        } else if (m + n).norm() <= CONDITION_TOL {
            Some((0.0, -along))
        } else {
            None
        };
    }
    let a = (l * n.conj()).im / (m * n.conj()).im;
    let b = (l * m.conj()).im / (n * m.conj()).im;
    (a >= -CONDITION_TOL && b >= -CONDITION_TOL).then(|| (a.max(0.0), b.max(0.0)))
}

pub fn in_cone(lambda: Unimodular, mu: Unimodular, nu: Unimodular) -> bool {
    cone_coefficients(lambda, mu, nu).is_some()
}

fn ray_distance(p: Complex64, u: Complex64) -> f64 {
    let q = p * u.conj();
    if q.re >= 0.0 {
        q.im.abs()
    } else {
        p.norm()
    }
}

/// Euclidean distance from `l` to the closed cone `m R+ + n R+`.
pub fn cone_distance(lambda: Unimodular, mu: Unimodular, nu: Unimodular) -> f64 {
    if in_cone(lambda, mu, nu) {
        return 0.0;
    }
    let l = lambda.value();
    ray_distance(l, mu.value()).min(ray_distance(l, nu.value()))
}

/// `Im(l conj(t)) >= 0`, boundary included.
pub fn half_plane_ok(lambda: Unimodular, tau: Unimodular) -> bool {
    (lambda.value() * tau.value().conj()).im >= -CONDITION_TOL
}

#[derive(Clone, Copy, Debug)]
pub struct ArrowQuery {
    pub source: CanonicalForm,
    pub target: CanonicalForm,
}

impl ArrowQuery {
    pub fn new(source: CanonicalForm, target: CanonicalForm) -> Self {
        ArrowQuery { source, target }
    }
}

/// Whether `source ⪯ target`.
pub fn reachable(q: &ArrowQuery) -> bool {
    use CanonicalForm::*;
    if q.source == q.target {
        return true;
    }
    match (q.source, q.target) {
        (Zero, _) => true,
        (UnitDirectZero { .. }, Hyperbolic { .. }) => true,
        (UnitDirectZero { lambda }, UnitPair { mu, nu }) => in_cone(lambda, mu, nu),
        (UnitDirectZero { lambda }, DeltaTau { tau }) => half_plane_ok(lambda, tau),
        (UnitPair { mu, .. }, DeltaTau { tau }) if q.source.pair_kind() == Some(PairKind::Antipodal) => {
            (tau.value() * tau.value() - mu.value() * mu.value()).norm() <= CONDITION_TOL
        }
        _ => false,
    }
}

/// The strict codimension drop along every proper arrow.
pub fn codim_monotone_check(q: &ArrowQuery) -> bool {
    !reachable(q) || q.source == q.target || codimension(&q.source) > codimension(&q.target)
}

#[derive(Clone, Debug)]
pub struct HasseSubgraph {
    pub vertices: Vec<CanonicalForm>,
    /// Covering pairs `(lower, upper)` sorted by index.
    pub edges: Vec<(usize, usize)>,
}

pub const MAX_VERTICES: usize = 10_000;

struct BitRow(Vec<u64>);

impl BitRow {
    fn new(n: usize) -> Self {
        BitRow(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }
}

fn has_successors(f: &CanonicalForm) -> bool {
    matches!(f, CanonicalForm::Zero | CanonicalForm::UnitDirectZero { .. })
        || f.pair_kind() == Some(PairKind::Antipodal)
}

/// Transitive reduction of the closure order on `vertices`.
pub fn hasse_subgraph(vertices: &[CanonicalForm], exec: Execution) -> Result<HasseSubgraph> {
    if vertices.len() > MAX_VERTICES {
        return Err(Error::invalid(format!(
            "at most {MAX_VERTICES} vertices supported, got {}",
            vertices.len()
        )));
    }
    let mut seen = HashSet::new();
    for v in vertices {
        let key = v.to_string();
        if !seen.insert(key.clone()) {
            return Err(Error::DuplicateVertex(key));
        }
    }
    let n = vertices.len();
    let strict: Vec<BitRow> = exec.map_indexed(n, |u| {
        let mut row = BitRow::new(n);
        if has_successors(&vertices[u]) {
            for v in (0..n).filter(|&v| v != u) {
                if reachable(&ArrowQuery::new(vertices[u], vertices[v])) {
                    row.set(v);
                }
            }
        }
        row
    });
    let covers: Vec<Vec<usize>> = exec.map_indexed(n, |u| {
        let mut implied = BitRow::new(n);
        for w in strict[u].ones().filter(|&w| !strict[w].is_empty()) {
            for (acc, x) in implied.0.iter_mut().zip(&strict[w].0) {
                *acc |= x;
            }
        }
        strict[u].ones().filter(|&v| !implied.get(v)).collect()
    });
    let edges = covers
        .into_iter()
        .enumerate()
        .flat_map(|(u, vs)| vs.into_iter().map(move |v| (u, v)))
        .collect();
    Ok(HasseSubgraph { vertices: vertices.to_vec(), edges })
}

fn quoted(s: &str) -> String {
    format!("\"{s}\"")
}

/// Graphviz rendering with one rank per codimension level, lowest codimension on top.
pub fn to_dot(g: &HasseSubgraph) -> String {
    let names: Vec<String> = g.vertices.iter().map(|v| v.to_string()).collect();
    let mut levels: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
    for (v, name) in g.vertices.iter().zip(&names) {
        levels.entry(codimension(v)).or_default().push(name);
    }
    let mut out = String::from("digraph closure {\n  rankdir=BT;\n  node [shape=box];\n");
    for (codim, mut members) in levels.into_iter().rev() {
        members.sort_unstable();
        let ids: Vec<String> = members.iter().map(|m| quoted(m)).collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
        for m in members {
            let _ = writeln!(out, "  {} [label=\"{m}\\ncodim {codim}\"];", quoted(m));
        }
    }
    let mut edges: Vec<String> = g
        .edges
        .iter()
        .map(|&(u, v)| format!("  {} -> {};", quoted(&names[u]), quoted(&names[v])))
        .collect();
    edges.sort_unstable();
    for e in edges {
        out.push_str(&e);
        out.push('\n');
    }
    out.push_str("}\n");
    out
}
