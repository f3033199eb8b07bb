//! Commuting graphs over bit-packed adjacency rows, with all-pairs BFS.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::structure::center;

/// Undirected simple graph on `0..n` with one bit row per vertex.
#[derive(Debug, Clone)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitGraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b);
        self.rows[a * self.words + b / 64] |= 1 << (b % 64);
        self.rows[b * self.words + a / 64] |= 1 << (a % 64);
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.rows[a * self.words..(a + 1) * self.words]
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(a))
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Distances from `source`; `u32::MAX` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        let mut visited = vec![0u64; self.words];
        let mut next = vec![0u64; self.words];
        visited[source / 64] |= 1 << (source % 64);
        dist[source] = 0;
        let mut frontier = vec![source];
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            next.iter_mut().for_each(|w| *w = 0);
            for &v in &frontier {
                for (acc, &w) in next.iter_mut().zip(self.row(v)) {
                    *acc |= w;
                }
            }
            frontier.clear();
            for (k, (acc, seen)) in next.iter_mut().zip(visited.iter_mut()).enumerate() {
                let fresh = *acc & !*seen;
                *seen |= fresh;
                let mut bits = fresh;
                while bits != 0 {
                    let v = k * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    dist[v] = level;
                    frontier.push(v);
                }
            }
        }
        dist
    }

    /// Component id per vertex, numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next_id = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            for (v, d) in self.bfs(s).into_iter().enumerate() {
                if d != u32::MAX {
                    comp[v] = next_id;
                }
            }
            next_id += 1;
        }
        comp
    }

    /// All-pairs BFS. Per-source passes run in parallel; the result does not
    /// depend on scheduling.
    pub fn diameter(&self) -> DiameterResult {
        if self.n == 0 {
            return DiameterResult {
                status: GraphStatus::EmptyVertexSet,
                diameter: None,
                eccentricities: Vec::new(),
                component_count: 0,
                witness_pair: None,
            };
        }
        let per_source: Vec<(u32, usize, bool)> = (0..self.n)
            .into_par_iter()
            .map(|s| {
                let dist = self.bfs(s);
                let mut ecc = 0;
                let mut far = s;
                let mut unreachable = None;
                for (v, &d) in dist.iter().enumerate() {
                    if d == u32::MAX {
                        unreachable.get_or_insert(v);
                    } else if d > ecc {
                        ecc = d;
                        far = v;
                    }
                }
                match unreachable {
                    Some(v) => (ecc, v, false),
                    None => (ecc, far, true),
                }
            })
            .collect();
        let connected = per_source[0].2;
        let component_count = if connected {
            1
        } else {
            self.components().into_iter().max().map_or(0, |m| m + 1)
        };
        let eccentricities: Vec<u32> = per_source.iter().map(|t| t.0).collect();
        if connected {
            let (src, &(d, far, _)) = per_source
                .iter()
                .enumerate()
                .max_by_key(|(i, t)| (t.0, std::cmp::Reverse(*i)))
                .expect("nonempty");
            DiameterResult {
                status: GraphStatus::Connected,
                diameter: Some(d),
                eccentricities,
                component_count,
                witness_pair: Some((src, far)),
            }
        } else {
            DiameterResult {
                status: GraphStatus::Disconnected,
                diameter: None,
                eccentricities,
                component_count,
                witness_pair: Some((0, per_source[0].1)),
            }
        }
    }
}

fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(k, &w)| {
        let mut bits = w;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = k * 64 + bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphStatus {
    Connected,
    Disconnected,
    EmptyVertexSet,
}

impl GraphStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphStatus::Connected => "connected",
            GraphStatus::Disconnected => "disconnected",
            GraphStatus::EmptyVertexSet => "empty-vertex-set",
        }
    }
}

/// Distances summary. Positions in `eccentricities` and `witness_pair` are
/// vertex positions of the graph it was computed from; for a disconnected
/// graph eccentricities are taken within each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiameterResult {
    pub status: GraphStatus,
    pub diameter: Option<u32>,
    pub eccentricities: Vec<u32>,
    pub component_count: usize,
    /// A pair realizing the diameter, or a pair in different components.
    pub witness_pair: Option<(usize, usize)>,
}

impl DiameterResult {
    pub fn connected(&self) -> bool {
        self.status == GraphStatus::Connected
    }
}

/// Commuting graph: vertices are the noncentral elements, edges join
/// distinct commuting vertices.
#[derive(Debug, Clone)]
pub struct CommutingGraph {
    vertices: Vec<usize>,
    position: Vec<u32>,
    graph: BitGraph,
    component_ids: Vec<usize>,
}

const NOT_A_VERTEX: u32 = u32::MAX;

pub fn build_commuting_graph(g: &FiniteGroup) -> CommutingGraph {
    let z = center(g);
    let vertices: Vec<usize> = (0..g.order()).filter(|&x| !z.contains(x)).collect();
    let mut position = vec![NOT_A_VERTEX; g.order()];
    for (i, &v) in vertices.iter().enumerate() {
        position[v] = i as u32;
    }
    let mut graph = BitGraph::new(vertices.len());
    for (i, &a) in vertices.iter().enumerate() {
        for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
            if g.commute(a, b) {
                graph.add_edge(i, j);
            }
        }
    }
    let component_ids = graph.components();
    CommutingGraph {
        vertices,
        position,
        graph,
        component_ids,
    }
}

impl CommutingGraph {
    /// Element indices of the vertices, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_position(&self, element: usize) -> Option<usize> {
        match self.position.get(element) {
            Some(&p) if p != NOT_A_VERTEX => Some(p as usize),
            _ => None,
        }
    }

    pub fn bit_graph(&self) -> &BitGraph {
        &self.graph
    }

    pub fn component_ids(&self) -> &[usize] {
        &self.component_ids
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        match (self.vertex_position(x), self.vertex_position(y)) {
            (Some(a), Some(b)) => self.graph.has_edge(a, b),
            _ => false,
        }
    }

    /// Edges as element-index pairs `(i, j)`, `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, &x) in self.vertices.iter().enumerate() {
            for b in self.graph.neighbors(a) {
                if b > a {
                    out.push((x, self.vertices[b]));
                }
            }
        }
        out
    }

    pub fn diameter(&self) -> DiameterResult {
        self.graph.diameter()
    }

    /// Element-index form of a diameter witness pair.
    pub fn witness_elements(&self, d: &DiameterResult) -> Option<(usize, usize)> {
        d.witness_pair
            .map(|(a, b)| (self.vertices[a], self.vertices[b]))
    }

    /// Shortest-path length between two noncentral elements.
    pub fn distance(&self, x: usize, y: usize) -> Result<Option<u32>> {
        let a = self.vertex_position(x).ok_or(GroupError::CentralElement(x))?;
        let b = self.vertex_position(y).ok_or(GroupError::CentralElement(y))?;
        let d = self.graph.bfs(a)[b];
        Ok((d != u32::MAX).then_some(d))
    }

    /// Distances from one element to every vertex, by vertex position.
    pub fn distances_from(&self, x: usize) -> Result<Vec<u32>> {
        let a = self.vertex_position(x).ok_or(GroupError::CentralElement(x))?;
        Ok(self.graph.bfs(a))
    }

    pub fn to_dot(&self, g: &FiniteGroup) -> String {
        let mut out = String::from("graph commuting {\n");
        for &v in &self.vertices {
            out.push_str(&format!(
                "  v{v} [label=\"{v} (o={})\"];\n",
                g.element_order(v)
            ));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  v{a} -- v{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct EdgeList<'a> {
            vertices: &'a [usize],
            edges: Vec<[usize; 2]>,
        }
        let edges = self.edges().into_iter().map(|(a, b)| [a, b]).collect();
        serde_json::to_string(&EdgeList {
            vertices: &self.vertices,
            edges,
        })
        .expect("edge list serializes")
    }
}

pub fn diameter(graph: &CommutingGraph) -> DiameterResult {
    graph.diameter()
}

pub fn distance(graph: &CommutingGraph, x: usize, y: usize) -> Result<Option<u32>> {
    graph.distance(x, y)
}

/// Commuting graph with vertices merged when they generate the same cyclic
/// subgroup; such vertices have equal closed neighborhoods.
#[derive(Debug, Clone)]
pub struct TwinReduction {
    /// Element indices of each class, ascending; classes ordered by their
    /// smallest member.
    pub classes: Vec<Vec<usize>>,
    /// Class index per vertex position of the full graph.
    pub class_of: Vec<usize>,
    pub reduced: BitGraph,
}

pub fn twin_reduce(g: &FiniteGroup, graph: &CommutingGraph) -> TwinReduction {
    let mut class_of = vec![usize::MAX; graph.vertices.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (pos, &x) in graph.vertices.iter().enumerate() {
        if class_of[pos] != usize::MAX {
            continue;
        }
        let o = g.element_order(x);
        let mut members: Vec<usize> = (1..o)
            .filter(|&k| crate::arith::gcd(k, o) == 1)
            .map(|k| g.pow(x, k))
            .collect();
        members.sort_unstable();
        members.dedup();
        let id = classes.len();
        for &m in &members {
            let p = graph
                .vertex_position(m)
                .expect("generators of a noncentral cyclic subgroup are noncentral");
            class_of[p] = id;
        }
        classes.push(members);
    }
    let mut reduced = BitGraph::new(classes.len());
    for a in 0..classes.len() {
        for b in a + 1..classes.len() {
            if g.commute(classes[a][0], classes[b][0]) {
                reduced.add_edge(a, b);
            }
        }
    }
    TwinReduction {
        classes,
        class_of,
        reduced,
    }
}

impl TwinReduction {
    /// Connectivity status and diameter of the original graph.
    pub fn diameter(&self) -> (GraphStatus, Option<u32>) {
        match self.classes.len() {
            0 => (GraphStatus::EmptyVertexSet, None),
            1 => (
                GraphStatus::Connected,
                Some(if self.classes[0].len() >= 2 { 1 } else { 0 }),
            ),
            _ => {
                let d = self.reduced.diameter();
                (d.status, d.diameter)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn brute_edges(g: &FiniteGroup) -> Vec<(usize, usize)> {
        let central: Vec<bool> = (0..g.order())
            .map(|x| (0..g.order()).all(|y| g.commute(x, y)))
            .collect();
        let mut out = Vec::new();
        for a in 0..g.order() {
            for b in a + 1..g.order() {
                if !central[a] && !central[b] && g.commute(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[test]
    fn s3_graph() {
        let g = symmetric(3);
        let cg = build_commuting_graph(&g);
        assert_eq!(cg.vertices().len(), 5);
        assert_eq!(cg.edges(), brute_edges(&g));
        assert_eq!(cg.edges().len(), 1);
        let (a, b) = cg.edges()[0];
        assert_eq!((g.element_order(a), g.element_order(b)), (3, 3));
        let d = cg.diameter();
        assert_eq!(d.status, GraphStatus::Disconnected);
        assert_eq!(d.component_count, 4);
        let tr = twin_reduce(&g, &cg);
        assert_eq!(tr.classes.len(), 4);
        assert_eq!(tr.reduced.edge_count(), 0);
    }

    #[test]
    fn q8_graph() {
        let g = quaternion();
        let cg = build_commuting_graph(&g);
        assert_eq!(cg.vertices().len(), 6);
        assert_eq!(cg.edges(), brute_edges(&g));
        assert_eq!(cg.edges().len(), 3);
        assert_eq!(cg.diameter().status, GraphStatus::Disconnected);
        let tr = twin_reduce(&g, &cg);
        assert_eq!(tr.classes.len(), 3);
        assert_eq!(tr.reduced.edge_count(), 0);
        assert_eq!(tr.diameter().0, GraphStatus::Disconnected);
    }

    #[test]
    fn abelian_graph_is_empty() {
        let g = cyclic(6);
        let cg = build_commuting_graph(&g);
        assert!(cg.vertices().is_empty());
        assert_eq!(cg.diameter().status, GraphStatus::EmptyVertexSet);
        assert_eq!(twin_reduce(&g, &cg).diameter(), (GraphStatus::EmptyVertexSet, None));
    }

    #[test]
    fn distances() {
        let g = crate::construct::direct_product(&symmetric(3), &symmetric(3)).unwrap();
        let cg = build_commuting_graph(&g);
        let v = cg.vertices()[0];
        assert_eq!(cg.distance(v, v).unwrap(), Some(0));
        let (a, b) = cg.edges()[0];
        assert_eq!(cg.distance(a, b).unwrap(), Some(1));
        assert_eq!(cg.distance(a, b).unwrap(), cg.distance(b, a).unwrap());
        assert_eq!(cg.distance(0, v).unwrap_err(), GroupError::CentralElement(0));
    }

    #[test]
    fn exports() {
        let g = symmetric(3);
        let cg = build_commuting_graph(&g);
        let json = cg.to_json();
        let (a, b) = cg.edges()[0];
        assert_eq!(
            json,
            format!(
                "{{\"vertices\":[1,2,3,4,5],\"edges\":[[{a},{b}]]}}"
            )
        );
        let dot = cg.to_dot(&g);
        assert!(dot.starts_with("graph commuting {"));
        assert!(dot.contains(&format!("v{a} -- v{b};")));
    }

    #[test]
    fn path_graph_diameter() {
        let mut bg = BitGraph::new(5);
        for i in 0..4 {
            bg.add_edge(i, i + 1);
        }
        let d = bg.diameter();
        assert_eq!(d.diameter, Some(4));
        assert_eq!(d.eccentricities, vec![4, 3, 2, 3, 4]);
        assert_eq!(d.witness_pair, Some((0, 4)));
    }
}
