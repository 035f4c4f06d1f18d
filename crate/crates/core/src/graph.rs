//! General adjacency-bitset graphs (thousands of vertices) used by the
//! extremal constructions and the counting oracles.

use crate::error::{Error, Result};
use crate::rng::indexed_bernoulli;
use crate::small::{triple_flag_index, SmallGraph};

/// Undirected loop-free graph with one bitset row per vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_pairs(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(sizes: &[u64]) -> Self {
        let n: u64 = sizes.iter().sum();
        let mut g = Graph::new(n as usize);
        let mut part = Vec::with_capacity(n as usize);
        for (idx, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(idx, s as usize));
        }
        for u in 0..g.n {
            for v in u + 1..g.n {
                if part[u] != part[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// G(n, num/den): every pair an edge independently, decided by the pair
    /// index alone so the result is seed-stable.
    pub fn random(n: usize, seed: u64, num: u64, den: u64) -> Self {
        let mut g = Graph::new(n);
        let p = num as f64 / den as f64;
        let mut idx = 0u64;
        for u in 0..n {
            for v in u + 1..n {
                if indexed_bernoulli(seed, idx, p) {
                    g.add_edge(u, v);
                }
                idx += 1;
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> u64 {
        (0..self.n).map(|u| self.degree(u) as u64).sum::<u64>() / 2
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// Size of the common neighborhood of `u` and `v`.
    pub fn codegree(&self, u: usize, v: usize) -> u32 {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(u);
        (0..self.words).flat_map(move |w| {
            let mut bits = row[w];
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// The subgraph induced on `verts` as a `SmallGraph` (at most 8 vertices).
    pub fn induced_small(&self, verts: &[usize]) -> Result<SmallGraph> {
        let mut g = SmallGraph::empty(verts.len())?;
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if self.has_edge(verts[i], verts[j]) {
                    g.set_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }
}

impl From<&SmallGraph> for Graph {
    fn from(s: &SmallGraph) -> Graph {
        let mut g = Graph::new(s.n());
        for u in 0..s.n() {
            for v in u + 1..s.n() {
                if s.edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// Classify the induced triple `{r, u, v}` rooted at `r` into the fixed flag
/// order 1..6: 1 empty, 2 edge away from the root, 3 edge at the root,
/// 4 path ending at the root, 5 path centered at the root, 6 triangle.
pub fn rooted_flag_index(g: &Graph, r: usize, u: usize, v: usize) -> Result<u8> {
    if r == u || r == v || u == v || r >= g.n() || u >= g.n() || v >= g.n() {
        return Err(Error::BadVertex(format!(
            "triple ({r},{u},{v}) on {} vertices",
            g.n()
        )));
    }
    Ok(triple_flag_index(
        g.has_edge(r, u),
        g.has_edge(r, v),
        g.has_edge(u, v),
    ))
}
