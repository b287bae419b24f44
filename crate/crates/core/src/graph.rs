//! Simple undirected graphs, BFS distances and exhaustive shortest-path
//! enumeration.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

/// Dense edge identifier, `0..m` in the order edges were supplied.
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0} (pair ({0}, {0}))")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex out of range in pair ({u}, {v}): graph has {vertex_count} vertices")]
    VertexOutOfRange {
        u: usize,
        v: usize,
        vertex_count: usize,
    },
    #[error("vertex {vertex} out of range: graph has {vertex_count} vertices")]
    SourceOutOfRange { vertex: usize, vertex_count: usize },
}

/// Finite simple undirected graph with stable edge ids.
///
/// Each edge is stored as `(u, v)` with `u < v`. Edge ids follow the
/// construction order, which is the positional order used by labeling
/// files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    // (neighbor, edge id), sorted by neighbor
    adjacency: Vec<Vec<(usize, EdgeId)>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edge_list {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange { u, v, vertex_count });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if adjacency[a].iter().any(|&(w, _)| w == b) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            let id = edges.len();
            edges.push((a, b));
            adjacency[a].push((b, id));
            adjacency[b].push((a, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id]
    }

    /// Neighbors of `v` as `(neighbor, edge id)`, ascending by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.vertex_count).map(|v| self.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        bfs(self, 0).iter().all(Option::is_some)
    }

    /// Unweighted shortest-path distances from `source`; `None` marks
    /// unreachable vertices.
    pub fn distances(&self, source: usize) -> Result<Vec<Option<usize>>, GraphError> {
        if source >= self.vertex_count {
            return Err(GraphError::SourceOutOfRange {
                vertex: source,
                vertex_count: self.vertex_count,
            });
        }
        Ok(bfs(self, source))
    }
}

fn bfs(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &(w, _) in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// A shortest path, oriented from its smaller endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GeodesicPath {
    pub endpoints: (usize, usize),
    pub edge_ids: Vec<EdgeId>,
}

impl GeodesicPath {
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    pub fn contains(&self, edge: EdgeId) -> bool {
        self.edge_ids.contains(&edge)
    }
}

/// Every shortest path between every reachable unordered vertex pair at
/// distance at least one, each exactly once.
///
/// Output is sorted by `(min endpoint, max endpoint, edge-id sequence)`.
pub fn enumerate_geodesics(g: &Graph) -> Vec<GeodesicPath> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for source in 0..g.vertex_count() {
        let dist = bfs(g, source);
        let start = out.len();
        walk_forward(g, &dist, source, source, &mut stack, &mut out);
        out[start..].sort_by(|a, b| {
            (a.endpoints.1, &a.edge_ids).cmp(&(b.endpoints.1, &b.edge_ids))
        });
    }
    out
}

// Depth-first walk over the BFS layering rooted at `source`. Every walk
// that only steps to the next layer is a shortest path; recording only
// targets above `source` keeps one orientation per undirected path.
fn walk_forward(
    g: &Graph,
    dist: &[Option<usize>],
    source: usize,
    at: usize,
    stack: &mut Vec<EdgeId>,
    out: &mut Vec<GeodesicPath>,
) {
    let here = dist[at].unwrap();
    for &(next, edge) in g.neighbors(at) {
        if dist[next] != Some(here + 1) {
            continue;
        }
        stack.push(edge);
        if next > source {
            out.push(GeodesicPath {
                endpoints: (source, next),
                edge_ids: stack.clone(),
            });
        }
        walk_forward(g, dist, source, next, stack, out);
        stack.pop();
    }
}

/// Aggregate geodesic statistics of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeodesicCensus {
    /// Number of geodesic paths.
    pub total: u64,
    pub by_length: BTreeMap<usize, u64>,
    /// Geodesics through each edge, indexed by edge id.
    pub per_edge: Vec<u64>,
    /// Largest finite distance; 0 for edgeless graphs.
    pub diameter: usize,
}

impl GeodesicCensus {
    pub fn from_paths(g: &Graph, paths: &[GeodesicPath]) -> Self {
        let mut by_length = BTreeMap::new();
        let mut per_edge = vec![0u64; g.edge_count()];
        let mut diameter = 0;
        for p in paths {
            *by_length.entry(p.len()).or_insert(0) += 1;
            for &e in &p.edge_ids {
                per_edge[e] += 1;
            }
            diameter = diameter.max(p.len());
        }
        GeodesicCensus {
            total: paths.len() as u64,
            by_length,
            per_edge,
            diameter,
        }
    }

    /// `Some(k)` when every edge lies on exactly `k` geodesics.
    pub fn uniform_edge_count(&self) -> Option<u64> {
        let first = *self.per_edge.first()?;
        self.per_edge.iter().all(|&k| k == first).then_some(first)
    }
}

pub fn census(g: &Graph) -> GeodesicCensus {
    GeodesicCensus::from_paths(g, &enumerate_geodesics(g))
}

/// Counts geodesics without materializing them, by summing shortest-path
/// multiplicities over the BFS layering from each source.
pub fn count_geodesics(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let mut total = 0u64;
    let mut sigma = vec![0u64; n];
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for source in 0..n {
        sigma.iter_mut().for_each(|s| *s = 0);
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        sigma[source] = 1;
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[u] + 1 {
                    sigma[w] += sigma[u];
                }
            }
        }
        total += (source + 1..n).map(|t| sigma[t]).sum::<u64>();
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { u: 0, v: 3, .. })
        ));
    }

    #[test]
    fn edge_ids_follow_input_order() {
        let g = Graph::new(3, &[(0, 1), (2, 1), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(g.edge_between(2, 0), Some(2));
        assert_eq!(g.edge_between(0, 0), None);
    }

    #[test]
    fn distances_on_small_graphs() {
        assert_eq!(
            cycle(4).distances(0).unwrap(),
            vec![Some(0), Some(1), Some(2), Some(1)]
        );
        let c10 = cycle(10);
        for s in 0..10 {
            let d = c10.distances(s).unwrap();
            assert_eq!(d.iter().flatten().max(), Some(&5));
        }
        let empty = Graph::new(2, &[]).unwrap();
        assert_eq!(empty.distances(0).unwrap(), vec![Some(0), None]);
        assert!(empty.distances(2).is_err());
    }

    #[test]
    fn geodesics_of_small_cycles() {
        assert_eq!(enumerate_geodesics(&cycle(3)).len(), 3);
        let c4 = enumerate_geodesics(&cycle(4));
        assert_eq!(c4.len(), 8);
        // antipodal pair (0, 2): two routes
        let routes: Vec<_> = c4
            .iter()
            .filter(|p| p.endpoints == (0, 2))
            .map(|p| p.edge_ids.clone())
            .collect();
        assert_eq!(routes, vec![vec![0, 1], vec![3, 2]]);
    }

    #[test]
    fn census_of_single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let c = census(&g);
        assert_eq!(c.total, 1);
        assert_eq!(c.per_edge, vec![1]);
        assert_eq!(c.diameter, 1);
    }

    #[test]
    fn census_of_c10() {
        let c = census(&cycle(10));
        assert_eq!(c.total, 50);
        assert_eq!(c.uniform_edge_count(), Some(15));
        assert_eq!(c.diameter, 5);
        assert_eq!(count_geodesics(&cycle(10)), 50);
    }

    #[test]
    fn empty_and_disconnected() {
        let g = Graph::new(0, &[]).unwrap();
        assert!(enumerate_geodesics(&g).is_empty());
        let g = Graph::new(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let c = census(&g);
        assert_eq!(c.total, 4);
        assert_eq!(count_geodesics(&g), 4);
        assert!(!g.is_connected());
    }
}
