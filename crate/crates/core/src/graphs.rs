//! The two graphs attached to a class table and the queries made of them.
//!
//! The common-divisor graph has the distinct noncentral class sizes as
//! vertices, adjacent when they share a prime factor. The prime graph has the
//! primes dividing some class size as vertices, adjacent when one class size
//! is divisible by both.

use serde::{Serialize, Serializer};

use crate::arith;
use crate::classes::ClassTable;

/// Undirected graph over sorted, distinct `u64` labels.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    labels: Vec<u64>,
    adj: Vec<bool>, // row-major n*n; symmetric, irreflexive
}

impl LabeledGraph {
    /// Builds the graph on the given labels (sorted and deduplicated here)
    /// with adjacency decided by `related` on label pairs.
    pub fn from_relation(mut labels: Vec<u64>, related: impl Fn(u64, u64) -> bool) -> Self {
        labels.sort_unstable();
        labels.dedup();
        let n = labels.len();
        let mut adj = vec![false; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                if related(labels[i], labels[j]) {
                    adj[i * n + j] = true;
                    adj[j * n + i] = true;
                }
            }
        }
        LabeledGraph { labels, adj }
    }

    /// Builds from explicit edges given as index pairs. Self-loops are
    /// ignored; labels must already be sorted and distinct.
    pub fn from_index_edges(labels: Vec<u64>, edges: &[(usize, usize)]) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let n = labels.len();
        let mut adj = vec![false; n * n];
        for &(i, j) in edges {
            if i != j {
                adj[i * n + j] = true;
                adj[j * n + i] = true;
            }
        }
        LabeledGraph { labels, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> u64 {
        self.labels[i]
    }

    pub fn index_of_label(&self, label: u64) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.labels.len() + j]
    }

    pub fn degree(&self, i: usize) -> usize {
        let n = self.labels.len();
        (0..n).filter(|&j| self.adj[i * n + j]).count()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.labels.len();
        (0..n).filter(move |&j| self.adj[i * n + j])
    }

    /// Edge list as label pairs, each with the smaller label first, sorted.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let n = self.labels.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.adj[i * n + j] {
                    out.push((self.labels[i], self.labels[j]));
                }
            }
        }
        out
    }

    /// `ν(i) ∪ {i}` as a boolean row.
    pub fn closed_neighborhood(&self, i: usize) -> Vec<bool> {
        let n = self.labels.len();
        let mut row: Vec<bool> = (0..n).map(|j| self.adj[i * n + j]).collect();
        row[i] = true;
        row
    }

    /// GraphViz rendering with one node per label; deterministic order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph \"{}\" {{\n", name.replace('"', "\\\"")));
        for &l in &self.labels {
            out.push_str(&format!("  \"{l}\";\n"));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Common-divisor graph of the noncentral class sizes.
#[derive(Clone, Debug)]
pub struct SizeGraph {
    graph: LabeledGraph,
    /// (size, number of classes of that size) for human inspection; the graph
    /// itself discards multiplicity.
    multiplicity: Vec<(u64, usize)>,
}

impl SizeGraph {
    /// Vertices are the distinct sizes > 1; two sizes are adjacent exactly
    /// when their gcd exceeds 1.
    pub fn from_class_sizes(sizes: &[u64]) -> SizeGraph {
        let vertices: Vec<u64> = sizes.iter().copied().filter(|&s| s > 1).collect();
        let graph = LabeledGraph::from_relation(vertices, |a, b| arith::gcd(a, b) > 1);
        let mut multiplicity: Vec<(u64, usize)> = Vec::new();
        for &s in sizes.iter().filter(|&&s| s > 1) {
            match multiplicity.iter_mut().find(|(v, _)| *v == s) {
                Some((_, c)) => *c += 1,
                None => multiplicity.push((s, 1)),
            }
        }
        multiplicity.sort_unstable();
        SizeGraph { graph, multiplicity }
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn multiplicity(&self) -> &[(u64, usize)] {
        &self.multiplicity
    }
}

/// Prime graph on the primes dividing some class size.
#[derive(Clone, Debug)]
pub struct PrimeGraph {
    graph: LabeledGraph,
}

impl PrimeGraph {
    /// Vertices are the primes dividing at least one class size; `p` and `q`
    /// are adjacent when some class size is divisible by `p*q`.
    pub fn from_class_sizes(sizes: &[u64]) -> PrimeGraph {
        let mut primes: Vec<u64> = Vec::new();
        for &s in sizes {
            for p in arith::prime_divisors(s) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
        let graph = LabeledGraph::from_relation(primes, |p, q| {
            sizes.iter().any(|&s| s % (p * q) == 0)
        });
        PrimeGraph { graph }
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }
}

pub fn build_gamma(classes: &ClassTable) -> SizeGraph {
    SizeGraph::from_class_sizes(&classes.class_sizes())
}

pub fn build_delta(classes: &ClassTable) -> PrimeGraph {
    PrimeGraph::from_class_sizes(&classes.class_sizes())
}

// ----------------------------------------------------------------------
// Metrics
// ----------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Regularity {
    EmptyGraph,
    NotRegular,
    Regular(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Diameter {
    /// No vertices: no sensible diameter at all.
    Undefined,
    /// Disconnected.
    Infinite,
    Finite(usize),
}

impl Diameter {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(*d),
            _ => None,
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Undefined => s.serialize_str("undefined"),
            Diameter::Infinite => s.serialize_str("infinite"),
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GraphMetrics {
    /// Ascending degree sequence.
    pub degrees: Vec<usize>,
    pub regularity: Regularity,
    pub complete: bool,
    /// Vertex labels per connected component; components ordered by their
    /// smallest label, labels ascending within each.
    pub components: Vec<Vec<u64>>,
    pub diameter: Diameter,
}

/// Degree sequence, regularity, completeness, components (breadth-first) and
/// diameter (max eccentricity; infinite when disconnected, undefined when
/// empty). A single vertex counts as a complete graph of diameter 0.
pub fn metrics(g: &LabeledGraph) -> GraphMetrics {
    let n = g.vertex_count();
    if n == 0 {
        return GraphMetrics {
            degrees: vec![],
            regularity: Regularity::EmptyGraph,
            complete: false,
            components: vec![],
            diameter: Diameter::Undefined,
        };
    }

    let raw_degrees: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let mut degrees = raw_degrees.clone();
    degrees.sort_unstable();
    let regularity = if degrees[0] == degrees[n - 1] {
        Regularity::Regular(degrees[0])
    } else {
        Regularity::NotRegular
    };
    let complete = (0..n).all(|i| raw_degrees[i] == n - 1);

    let mut component_of = vec![usize::MAX; n];
    let mut components: Vec<Vec<u64>> = Vec::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut queue = vec![start];
        component_of[start] = id;
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for w in g.neighbors(v) {
                if component_of[w] == usize::MAX {
                    component_of[w] = id;
                    queue.push(w);
                }
            }
        }
        queue.sort_unstable();
        components.push(queue.into_iter().map(|i| g.label(i)).collect());
    }

    let diameter = if components.len() > 1 {
        Diameter::Infinite
    } else {
        Diameter::Finite((0..n).map(|v| eccentricity(g, v)).max().unwrap_or(0))
    };

    GraphMetrics {
        degrees,
        regularity,
        complete,
        components,
        diameter,
    }
}

fn eccentricity(g: &LabeledGraph, start: usize) -> usize {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    dist[start] = 0;
    let mut queue = vec![start];
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    dist.into_iter().filter(|&d| d != usize::MAX).max().unwrap()
}

/// Blocks of vertices with identical closed neighborhoods (the partner
/// relation). Blocks ordered by their smallest label.
pub fn partner_partition(g: &LabeledGraph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let mut blocks: Vec<(Vec<bool>, Vec<u64>)> = Vec::new();
    for i in 0..n {
        let key = g.closed_neighborhood(i);
        match blocks.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(g.label(i)),
            None => blocks.push((key, vec![g.label(i)])),
        }
    }
    let mut out: Vec<Vec<u64>> = blocks.into_iter().map(|(_, m)| m).collect();
    for block in &mut out {
        block.sort_unstable();
    }
    out.sort_by_key(|b| b[0]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_of_s4_is_a_path() {
        let gamma = SizeGraph::from_class_sizes(&[1, 3, 6, 6, 8]);
        assert_eq!(gamma.graph().labels(), &[3, 6, 8]);
        assert_eq!(gamma.graph().edges(), vec![(3, 6), (6, 8)]);
        assert_eq!(gamma.multiplicity(), &[(3, 1), (6, 2), (8, 1)]);
        let m = metrics(gamma.graph());
        assert_eq!(m.degrees, vec![1, 1, 2]);
        assert_eq!(m.regularity, Regularity::NotRegular);
        assert!(!m.complete);
        assert_eq!(m.components.len(), 1);
        assert_eq!(m.diameter, Diameter::Finite(2));
    }

    #[test]
    fn gamma_of_a5_is_complete() {
        let gamma = SizeGraph::from_class_sizes(&[1, 12, 12, 15, 20]);
        assert_eq!(gamma.graph().labels(), &[12, 15, 20]);
        let m = metrics(gamma.graph());
        assert_eq!(m.regularity, Regularity::Regular(2));
        assert!(m.complete);
        assert_eq!(m.diameter, Diameter::Finite(1));
    }

    #[test]
    fn gamma_of_abelian_group_is_empty() {
        let gamma = SizeGraph::from_class_sizes(&[1, 1, 1, 1]);
        assert_eq!(gamma.graph().vertex_count(), 0);
        let m = metrics(gamma.graph());
        assert_eq!(m.regularity, Regularity::EmptyGraph);
        assert_eq!(m.diameter, Diameter::Undefined);
        assert!(!m.complete);
        assert!(m.components.is_empty());
    }

    #[test]
    fn gamma_of_s3_is_two_isolated_vertices() {
        let gamma = SizeGraph::from_class_sizes(&[1, 2, 3]);
        let m = metrics(gamma.graph());
        assert_eq!(m.degrees, vec![0, 0]);
        assert_eq!(m.regularity, Regularity::Regular(0));
        assert!(!m.complete);
        assert_eq!(m.components.len(), 2);
        assert_eq!(m.diameter, Diameter::Infinite);
    }

    #[test]
    fn single_vertex_is_complete_and_zero_regular() {
        let gamma = SizeGraph::from_class_sizes(&[1, 5, 5]);
        let m = metrics(gamma.graph());
        assert_eq!(m.regularity, Regularity::Regular(0));
        assert!(m.complete);
        assert_eq!(m.diameter, Diameter::Finite(0));
    }

    #[test]
    fn delta_of_s4_is_an_edge() {
        let delta = PrimeGraph::from_class_sizes(&[1, 3, 6, 6, 8]);
        assert_eq!(delta.graph().labels(), &[2, 3]);
        assert_eq!(delta.graph().edges(), vec![(2, 3)]);
    }

    #[test]
    fn delta_of_s3_has_no_edge() {
        let delta = PrimeGraph::from_class_sizes(&[1, 2, 3]);
        assert_eq!(delta.graph().labels(), &[2, 3]);
        assert!(delta.graph().edges().is_empty());
    }

    #[test]
    fn delta_of_abelian_group_is_empty() {
        let delta = PrimeGraph::from_class_sizes(&[1, 1, 1]);
        assert_eq!(delta.graph().vertex_count(), 0);
    }

    #[test]
    fn partner_blocks_of_complete_graph_form_one_block() {
        let gamma = SizeGraph::from_class_sizes(&[1, 12, 12, 15, 20]);
        assert_eq!(partner_partition(gamma.graph()), vec![vec![12, 15, 20]]);
    }

    #[test]
    fn partner_blocks_of_path_are_singletons() {
        let gamma = SizeGraph::from_class_sizes(&[1, 3, 6, 6, 8]);
        assert_eq!(
            partner_partition(gamma.graph()),
            vec![vec![3], vec![6], vec![8]]
        );
    }

    #[test]
    fn partner_blocks_of_empty_graph_are_empty() {
        let gamma = SizeGraph::from_class_sizes(&[1, 1]);
        assert!(partner_partition(gamma.graph()).is_empty());
    }

    #[test]
    fn dot_output_is_deterministic() {
        let gamma = SizeGraph::from_class_sizes(&[1, 3, 6, 6, 8]);
        let dot = gamma.graph().to_dot("s4 gamma");
        assert_eq!(
            dot,
            "graph \"s4 gamma\" {\n  \"3\";\n  \"6\";\n  \"8\";\n  \"3\" -- \"6\";\n  \"6\" -- \"8\";\n}\n"
        );
    }

    #[test]
    fn diameter_three_witness_graph() {
        // Vertex set of the coprime direct product of S3 with the extraspecial
        // group of order 125: sizes {2,3} x {5} pairwise products.
        let gamma = SizeGraph::from_class_sizes(&[1, 2, 3, 5, 5, 10, 10, 15, 15]);
        assert_eq!(gamma.graph().labels(), &[2, 3, 5, 10, 15]);
        let m = metrics(gamma.graph());
        assert_eq!(m.components.len(), 1);
        assert_eq!(m.diameter, Diameter::Finite(3));
    }
}
