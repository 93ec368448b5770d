//! Exchange-graph enumeration.
//!
//! Vertices are seeds in canonical form: mutable slots sorted by their
//! expansions in the initial frame, with `B`, `L` and names permuted in
//! step. Two clusters are the same vertex exactly when their mutable
//! expansions agree as sets.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::GraphError;
use crate::seed::QuantumSeed;
use crate::torus::{ExchangeRelation, TorusElement};

/// Directed edge: mutating vertex `from` in column `direction` gives `to`.
#[derive(Clone, Debug)]
pub struct Edge {
    pub from: usize,
    pub direction: usize,
    pub to: usize,
    /// Exchange relation written in the variables of `from`.
    pub relation: ExchangeRelation,
}

#[derive(Clone, Debug)]
pub struct ClusterVariable {
    pub label: String,
    pub expansion: TorusElement,
    pub frozen: bool,
}

#[derive(Clone, Debug)]
pub struct ExchangeGraph {
    pub initial: QuantumSeed,
    pub vertices: Vec<QuantumSeed>,
    pub edges: Vec<Edge>,
    pub variables: Vec<ClusterVariable>,
}

/// Canonical form of a seed with expansions.
pub fn canonicalize(seed: &QuantumSeed) -> Result<QuantumSeed, GraphError> {
    let exps = seed.expansions().ok_or(GraphError::MissingExpansions)?;
    let mut slots: Vec<usize> = seed.exchange_matrix().mutable_rows().to_vec();
    slots.sort_unstable();
    let mut by_expansion = slots.clone();
    by_expansion.sort_by(|&a, &b| exps[a].cmp(&exps[b]));
    let mut perm: Vec<usize> = (0..seed.rank()).collect();
    for (&slot, &old) in slots.iter().zip(&by_expansion) {
        perm[slot] = old;
    }
    Ok(seed.permute(&perm))
}

fn vertex_key(seed: &QuantumSeed) -> Vec<TorusElement> {
    let exps = seed.expansions().expect("vertices carry expansions");
    let mut rows = seed.exchange_matrix().mutable_rows().to_vec();
    rows.sort_unstable();
    rows.iter().map(|&r| exps[r].clone()).collect()
}

struct Registry {
    labels: BTreeMap<TorusElement, String>,
    variables: Vec<ClusterVariable>,
}

impl Registry {
    fn label_for(&mut self, expansion: &TorusElement, suggested: &str, frozen: bool) -> String {
        if let Some(l) = self.labels.get(expansion) {
            return l.clone();
        }
        let mut label = suggested.to_string();
        while self.variables.iter().any(|v| v.label == label) {
            label.push('\'');
        }
        self.labels.insert(expansion.clone(), label.clone());
        self.variables.push(ClusterVariable {
            label: label.clone(),
            expansion: expansion.clone(),
            frozen,
        });
        label
    }
}

/// Breadth-first closure of `seed` under all mutable mutations. Fails with
/// [`GraphError::BoundExceeded`] once more than `max_vertices` clusters appear.
pub fn enumerate(seed: &QuantumSeed, max_vertices: usize) -> Result<ExchangeGraph, GraphError> {
    seed.compatibility()?;
    let start = canonicalize(seed)?;
    let mut registry = Registry {
        labels: BTreeMap::new(),
        variables: Vec::new(),
    };
    let exps = start.expansions().expect("checked");
    for (i, e) in exps.iter().enumerate() {
        let frozen = !start.exchange_matrix().is_mutable_row(i);
        registry.label_for(e, &start.names()[i], frozen);
    }
    if max_vertices == 0 {
        return Err(GraphError::BoundExceeded(0));
    }

    let mut vertices = vec![start];
    let mut index: BTreeMap<Vec<TorusElement>, usize> = BTreeMap::new();
    index.insert(vertex_key(&vertices[0]), 0);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];

    while !frontier.is_empty() {
        let expanded: Vec<Vec<(usize, usize, QuantumSeed, ExchangeRelation)>> = frontier
            .par_iter()
            .map(|&v| {
                let s = &vertices[v];
                (0..s.mutable_count())
                    .map(|k| {
                        let m = s.mutate(k)?;
                        Ok((v, k, canonicalize(&m.seed)?, m.relation))
                    })
                    .collect::<Result<Vec<_>, GraphError>>()
            })
            .collect::<Result<_, _>>()?;

        let mut next = Vec::new();
        for (from, k, mut target, relation) in expanded.into_iter().flatten() {
            let key = vertex_key(&target);
            let to = match index.get(&key) {
                Some(&w) => w,
                None => {
                    if vertices.len() >= max_vertices {
                        return Err(GraphError::BoundExceeded(max_vertices));
                    }
                    let exps = target.expansions().expect("tracked").to_vec();
                    for (row, e) in exps.iter().enumerate() {
                        let label = registry.label_for(e, &target.names()[row], false);
                        target.rename(row, label);
                    }
                    let w = vertices.len();
                    index.insert(key, w);
                    vertices.push(target);
                    next.push(w);
                    w
                }
            };
            edges.push(Edge {
                from,
                direction: k,
                to,
                relation,
            });
        }
        frontier = next;
    }
    edges.sort_by_key(|e| (e.from, e.direction));
    Ok(ExchangeGraph {
        initial: seed.clone(),
        vertices,
        edges,
        variables: registry.variables,
    })
}

/// Summary of one vertex for machine-readable output.
#[derive(Clone, Debug, Serialize)]
pub struct VertexSummary {
    pub id: usize,
    pub cluster: Vec<String>,
    pub neighbors: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Adjacency {
    pub frozen: Vec<String>,
    pub vertices: Vec<VertexSummary>,
}

impl ExchangeGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn directed_edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges counted once per unordered pair of distinct vertices.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|e| (e.from.min(e.to), e.from.max(e.to)))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }

    pub fn degree(&self, v: usize) -> usize {
        self.undirected_edges()
            .iter()
            .filter(|(a, b)| *a == v || *b == v)
            .count()
    }

    /// Labels of the mutable slots of vertex `v`, in slot order.
    pub fn cluster_labels(&self, v: usize) -> Vec<String> {
        let s = &self.vertices[v];
        let mut rows = s.exchange_matrix().mutable_rows().to_vec();
        rows.sort_unstable();
        rows.iter().map(|&r| s.names()[r].clone()).collect()
    }

    /// Labels `(exchanged, new)` of the variables swapped along `e`.
    pub fn exchanged(&self, e: &Edge) -> (&str, &str) {
        let from = &self.vertices[e.from];
        let to = &self.vertices[e.to];
        let new = to
            .names()
            .iter()
            .find(|n| !from.names().contains(n))
            .expect("a mutation exchanges one variable");
        (&from.names()[e.relation.row], new)
    }

    /// Distinct cluster variables split into `(mutable, frozen)`.
    pub fn collect_variables(&self) -> (Vec<&ClusterVariable>, Vec<&ClusterVariable>) {
        self.variables.iter().partition(|v| !v.frozen)
    }

    pub fn variable(&self, label: &str) -> Option<&ClusterVariable> {
        self.variables.iter().find(|v| v.label == label)
    }

    /// Finds the variable with this expansion.
    pub fn variable_by_expansion(&self, e: &TorusElement) -> Option<&ClusterVariable> {
        self.variables.iter().find(|v| &v.expansion == e)
    }

    pub fn adjacency(&self) -> Adjacency {
        let (_, frozen) = self.collect_variables();
        let und = self.undirected_edges();
        Adjacency {
            frozen: frozen.iter().map(|v| v.label.clone()).collect(),
            vertices: (0..self.vertex_count())
                .map(|v| VertexSummary {
                    id: v,
                    cluster: self.cluster_labels(v),
                    neighbors: und
                        .iter()
                        .filter_map(|&(a, b)| {
                            if a == v {
                                Some(b)
                            } else if b == v {
                                Some(a)
                            } else {
                                None
                            }
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    /// Graphviz rendering. Vertices are labeled by their mutable variables;
    /// the frozen variables appear once, in a boxed node.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph exchange {\n");
        let (_, frozen) = self.collect_variables();
        if !frozen.is_empty() {
            let labels: Vec<&str> = frozen.iter().map(|v| v.label.as_str()).collect();
            let _ = writeln!(
                out,
                "  frozen [label=\"frozen: {}\", shape=box];",
                labels.join(", ")
            );
        }
        for v in 0..self.vertex_count() {
            let _ = writeln!(
                out,
                "  v{v} [label=\"{}\"];",
                self.cluster_labels(v).join(", ")
            );
        }
        for (a, b) in self.undirected_edges() {
            let _ = writeln!(out, "  v{a} -- v{b};");
        }
        out.push_str("}\n");
        out
    }

    /// Cluster-algebra type from the principal parts of the vertices.
    pub fn classify(&self) -> ClusterType {
        let n = self.initial.mutable_count();
        if n == 0 {
            return ClusterType::A(0);
        }
        if n <= 4 && self.vertices.iter().any(|s| path_order(s).is_some()) {
            ClusterType::A(n)
        } else {
            ClusterType::Unclassified
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClusterType {
    A(usize),
    Unclassified,
}

impl std::fmt::Display for ClusterType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClusterType::A(n) => write!(f, "A{n}"),
            ClusterType::Unclassified => f.write_str("unclassified"),
        }
    }
}

/// If the principal part of `seed` orients a path with unit weights, returns
/// the columns in path order.
pub fn path_order(seed: &QuantumSeed) -> Option<Vec<usize>> {
    let b = seed.exchange_matrix();
    let rows = b.mutable_rows();
    let n = b.cols();
    let mut adj = vec![Vec::new(); n];
    for c in 0..n {
        for d in c + 1..n {
            match b.get(rows[c], d).abs() {
                0 => {}
                1 => {
                    adj[c].push(d);
                    adj[d].push(c);
                }
                _ => return None,
            }
        }
    }
    if n == 1 {
        return Some(vec![0]);
    }
    let ends: Vec<usize> = (0..n).filter(|&c| adj[c].len() == 1).collect();
    if ends.len() != 2 || adj.iter().any(|a| a.len() > 2) {
        return None;
    }
    let mut order = vec![ends[0]];
    let mut prev = usize::MAX;
    let mut cur = ends[0];
    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order.len() == n).then_some(order)
}

/// Denominator vector of `v` relative to the initial seed: entry `c` is minus
/// the smallest exponent of the initial variable in column `c`.
pub fn denominator_vector(v: &TorusElement, initial: &QuantumSeed) -> Vec<i64> {
    let mins = v.min_exponents().unwrap_or_else(|| vec![0; initial.rank()]);
    initial
        .exchange_matrix()
        .mutable_rows()
        .iter()
        .map(|&r| -mins[r])
        .collect()
}

/// Almost positive roots (in simple-root coordinates indexed by column) of the
/// type A root system whose Dynkin path visits the columns in `path` order.
pub fn almost_positive_roots(path: &[usize]) -> Vec<Vec<i64>> {
    let n = path.len();
    let mut roots = Vec::new();
    for c in 0..n {
        let mut v = vec![0; n];
        v[c] = -1;
        roots.push(v);
    }
    for i in 0..n {
        for j in i..n {
            let mut v = vec![0; n];
            for &c in &path[i..=j] {
                v[c] = 1;
            }
            roots.push(v);
        }
    }
    roots
}

/// Renders a root as `α1+α2`, `-α3`.
pub fn render_root(root: &[i64]) -> String {
    let mut parts = Vec::new();
    for (c, &x) in root.iter().enumerate() {
        match x {
            0 => {}
            1 => parts.push(format!("α{}", c + 1)),
            -1 => parts.push(format!("-α{}", c + 1)),
            x => parts.push(format!("{x}α{}", c + 1)),
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+").replace("+-", "-")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::{ExchangeMatrix, QuasiCommutationMatrix};

    fn sl2() -> QuantumSeed {
        QuantumSeed::initial(
            vec!["a".into(), "b".into(), "c".into()],
            ExchangeMatrix::new(vec![vec![0], vec![-1], vec![-1]], vec![0]).unwrap(),
            QuasiCommutationMatrix::new(vec![vec![0, 1, 1], vec![-1, 0, 0], vec![-1, 0, 0]])
                .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn sl2_graph() {
        let g = enumerate(&sl2(), 100).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.directed_edge_count(), 2);
        assert_eq!(g.undirected_edges(), vec![(0, 1)]);
        let (m, f) = g.collect_variables();
        assert_eq!(m.len(), 2);
        assert_eq!(f.len(), 2);
        assert_eq!(g.classify(), ClusterType::A(1));
        let d = g.variable("a'").unwrap();
        assert_eq!(denominator_vector(&d.expansion, &g.initial), vec![1]);
        assert!(g.to_dot().contains("frozen: b, c"));
    }

    #[test]
    fn bound_is_reported() {
        assert!(matches!(
            enumerate(&sl2(), 1),
            Err(GraphError::BoundExceeded(1))
        ));
    }

    #[test]
    fn missing_expansions() {
        let bare = sl2().without_expansions();
        assert!(matches!(
            enumerate(&bare, 10),
            Err(GraphError::MissingExpansions)
        ));
    }

    #[test]
    fn roots_and_rendering() {
        let r = almost_positive_roots(&[0, 1]);
        assert_eq!(r.len(), 5);
        assert!(r.contains(&vec![1, 1]));
        assert_eq!(render_root(&[1, 1, 0]), "α1+α2");
        assert_eq!(render_root(&[0, -1]), "-α2");
        assert_eq!(almost_positive_roots(&[0, 1, 2]).len(), 9);
    }
}
