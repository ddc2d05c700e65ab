//! Simple undirected graphs on the vertices `1..=n`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Largest vertex count accepted by [`are_isomorphic`].
pub const MAX_ISOMORPHISM_VERTICES: usize = 12;

/// A loopless undirected graph on vertices `1..=n`.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
            neighbors: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Endpoints may come in either order,
    /// but loops and repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair
    /// `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..=n {
            for v in u + 1..=n {
                if adjacent(u, v) {
                    g.insert_unchecked(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if self.edges.contains(&(a, b)) {
            return Err(Error::DuplicateEdge { u: a, v: b });
        }
        self.insert_unchecked(a, b);
        Ok(())
    }

    fn insert_unchecked(&mut self, u: usize, v: usize) {
        self.edges.insert((u, v));
        let nu = &mut self.neighbors[u - 1];
        let at = nu.partition_point(|&x| x < v);
        nu.insert(at, v);
        let nv = &mut self.neighbors[v - 1];
        let at = nv.partition_point(|&x| x < u);
        nv.insert(at, u);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending lexicographic order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.contains(&(a, b))
    }

    /// Sorted neighbors of `v`.
    ///
    /// # Panics
    ///
    /// If `v` is not a vertex.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v - 1].len()
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Relabels vertex `v` as `perm[v - 1]`. `perm` must be a permutation of
    /// `1..=n`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        Graph::from_edges(
            self.n,
            self.edges().map(|(u, v)| (perm[u - 1], perm[v - 1])),
        )
    }

    /// Adjacency rows as bitmasks over 0-based vertices. Only meaningful for
    /// graphs with at most 16 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u16> {
        debug_assert!(self.n <= 16);
        self.neighbors
            .iter()
            .map(|ns| ns.iter().fold(0u16, |m, &w| m | 1 << (w - 1)))
            .collect()
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: perm.len(),
        });
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || seen[p - 1] {
            return Err(Error::NotABijection);
        }
        seen[p - 1] = true;
    }
    Ok(())
}

/// The path `1 - 2 - … - n`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ZeroParameter {
            name: "path length",
        });
    }
    Ok(Graph::from_fn(n, |u, v| v == u + 1))
}

/// `r` disjoint edges `{2j-1, 2j}`.
pub fn matching_graph(r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(Error::ZeroParameter {
            name: "matching size",
        });
    }
    Ok(Graph::from_fn(2 * r, |u, v| u % 2 == 1 && v == u + 1))
}

/// Returns the vertices of `g` in path order if `g` is a path, starting from
/// the smaller-labelled endpoint.
pub fn is_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 || g.edge_count() != n - 1 {
        return None;
    }
    if n == 1 {
        return Some(vec![1]);
    }
    if (1..=n).any(|v| g.degree(v) > 2 || g.degree(v) == 0) {
        return None;
    }
    let start = (1..=n).find(|&v| g.degree(v) == 1)?;
    let mut order = Vec::with_capacity(n);
    let mut prev = 0;
    let mut cur = start;
    loop {
        order.push(cur);
        match g.neighbors(cur).iter().copied().find(|&w| w != prev) {
            Some(next) if order.len() < n => {
                prev = cur;
                cur = next;
            }
            _ => break,
        }
    }
    // n - 1 edges, max degree 2 and a walk covering every vertex means a path.
    (order.len() == n && g.degree(cur) == 1).then_some(order)
}

/// True iff every vertex has degree exactly one.
pub fn is_matching(g: &Graph) -> bool {
    (1..=g.vertex_count()).all(|v| g.degree(v) == 1)
}

/// The subgraph induced by `vertices`, relabelled by rank: the smallest
/// vertex of the set becomes 1 and so on. Duplicates are ignored.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    let set: BTreeSet<usize> = vertices.iter().copied().collect();
    if let Some(&bad) = set.iter().find(|&&v| v == 0 || v > g.vertex_count()) {
        return Err(Error::VertexOutOfRange {
            vertex: bad,
            n: g.vertex_count(),
        });
    }
    let kept: Vec<usize> = set.into_iter().collect();
    Ok(Graph::from_fn(kept.len(), |a, b| {
        g.has_edge(kept[a - 1], kept[b - 1])
    }))
}

/// Exact isomorphism test for graphs with at most
/// [`MAX_ISOMORPHISM_VERTICES`] vertices.
///
/// Larger graphs are rejected with a capability error; use [`is_path`] or
/// [`is_matching`] for the structured families instead.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.vertex_count() > MAX_ISOMORPHISM_VERTICES {
            return Err(Error::CapabilityBound {
                what: "isomorphism testing",
                limit: MAX_ISOMORPHISM_VERTICES,
                found: x.vertex_count(),
            });
        }
    }
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<usize> = (1..=n).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return Ok(false);
    }

    // Map g's vertices in decreasing degree order, so that constrained
    // vertices are fixed early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(g.degree(v + 1)));
    let gm = g.adjacency_masks();
    let hm = h.adjacency_masks();
    let mut image = vec![usize::MAX; n];
    Ok(extend_isomorphism(&order, 0, &gm, &hm, &mut image, 0))
}

fn extend_isomorphism(
    order: &[usize],
    depth: usize,
    gm: &[u16],
    hm: &[u16],
    image: &mut [usize],
    used: u16,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for t in 0..hm.len() {
        if used & (1 << t) != 0 || gm[v].count_ones() != hm[t].count_ones() {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let g_adj = gm[v] & (1 << u) != 0;
            let h_adj = hm[t] & (1 << image[u]) != 0;
            g_adj == h_adj
        });
        if consistent {
            image[v] = t;
            if extend_isomorphism(order, depth + 1, gm, hm, image, used | 1 << t) {
                return true;
            }
        }
    }
    image[v] = usize::MAX;
    false
}
