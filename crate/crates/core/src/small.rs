//! Graphs on at most 8 vertices: canonical codes, isomorphism-class
//! enumeration, and induced/subgraph counting.
//!
//! Canonicalization is brute force over vertex permutations (at most 8! of
//! them), with the permutation and pair-relabeling tables cached per order.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{rat, Rat};

pub const MAX_SMALL: usize = 8;

/// Index of the unordered pair `(i, j)`, `i < j`, in lexicographic order
/// among the pairs of `0..n`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Undirected loop-free graph on at most 8 vertices stored as an edge
/// bitmask over the lexicographic pair order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SmallGraph {
    n: u8,
    edges: u32,
}

impl SmallGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_SMALL {
            return Err(Error::TooLarge {
                got: n,
                limit: MAX_SMALL,
            });
        }
        Ok(SmallGraph {
            n: n as u8,
            edges: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SmallGraph::empty(n)?;
        for &(u, v) in edges {
            g.set_edge(u, v)?;
        }
        Ok(g)
    }

    /// Build from a raw edge bitmask in the fixed pair order.
    pub fn from_mask(n: usize, mask: u32) -> Result<Self> {
        if n > MAX_SMALL {
            return Err(Error::TooLarge {
                got: n,
                limit: MAX_SMALL,
            });
        }
        let bits = pair_count(n);
        if bits < 32 && mask >> bits != 0 {
            return Err(Error::BadVertex(format!(
                "edge mask has bits beyond C({n},2)"
            )));
        }
        Ok(SmallGraph {
            n: n as u8,
            edges: mask,
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u32 {
        self.edges
    }

    pub fn edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.edges >> pair_index(self.n(), i, j) & 1 == 1
    }

    pub fn set_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || u >= self.n() || v >= self.n() {
            return Err(Error::BadVertex(format!(
                "edge ({u},{v}) on {} vertices",
                self.n
            )));
        }
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.edges |= 1 << pair_index(self.n(), i, j);
        Ok(())
    }

    pub fn edge_count(&self) -> u32 {
        self.edges.count_ones()
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = SmallGraph::empty(n)?;
        g.edges = if pair_count(n) == 0 {
            0
        } else {
            (1u32 << pair_count(n)) - 1
        };
        Ok(g)
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n()).filter(|&u| u != v && self.edge(u, v)).count()
    }

    /// Apply a vertex relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[u8]) -> SmallGraph {
        let n = self.n();
        let mut out = 0u32;
        let mut m = self.edges;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            let (i, j) = pair_of_index(n, b);
            let (a, bb) = (perm[i] as usize, perm[j] as usize);
            let (a, bb) = if a < bb { (a, bb) } else { (bb, a) };
            out |= 1 << pair_index(n, a, bb);
        }
        SmallGraph {
            n: self.n,
            edges: out,
        }
    }

    /// Number of automorphisms (edge-set preserving permutations).
    pub fn automorphism_count(&self) -> usize {
        perms(self.n())
            .iter()
            .filter(|p| self.relabel(p).edges == self.edges)
            .count()
    }

    /// Number of 5-cycles using all five vertices; zero unless `n == 5`.
    pub fn spanning_c5_count(&self) -> u32 {
        if self.n != 5 {
            return 0;
        }
        cyclic_orders_5()
            .iter()
            .filter(|cyc| (0..5).all(|i| self.edge(cyc[i] as usize, cyc[(i + 1) % 5] as usize)))
            .count() as u32
    }
}

/// Inverse of `pair_index`.
fn pair_of_index(n: usize, idx: usize) -> (usize, usize) {
    let mut rem = idx;
    for i in 0..n {
        let row = n - 1 - i;
        if rem < row {
            return (i, i + 1 + rem);
        }
        rem -= row;
    }
    unreachable!("pair index out of range")
}

/// The 12 undirected cyclic orders of 5 labeled vertices (start fixed at 0,
/// reflections identified).
fn cyclic_orders_5() -> &'static Vec<[u8; 5]> {
    static ORDERS: OnceLock<Vec<[u8; 5]>> = OnceLock::new();
    ORDERS.get_or_init(|| {
        let mut out = Vec::with_capacity(12);
        for p in perms(4) {
            let (a, b, c, d) = (p[0] + 1, p[1] + 1, p[2] + 1, p[3] + 1);
            if a < d {
                out.push([0, a, b, c, d]);
            }
        }
        debug_assert_eq!(out.len(), 12);
        out
    })
}

/// All permutations of `0..n` for `n <= 8`, cached.
pub(crate) fn perms(n: usize) -> &'static [Vec<u8>] {
    static TABLES: OnceLock<Vec<Vec<Vec<u8>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| (0..=MAX_SMALL).map(all_perms).collect());
    &tables[n]
}

/// Permutations of `0..n` that fix 0, cached.
fn perms_fixing_zero(n: usize) -> &'static [Vec<u8>] {
    static TABLES: OnceLock<Vec<Vec<Vec<u8>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        (0..=MAX_SMALL)
            .map(|n| {
                if n == 0 {
                    return vec![Vec::new()];
                }
                all_perms(n).into_iter().filter(|p| p[0] == 0).collect()
            })
            .collect()
    });
    &tables[n]
}

fn all_perms(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    fn rec(k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out.sort();
    out
}

/// Permutation-invariant identifier of a (rooted or unrooted) small graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode {
    pub n: u8,
    pub code: u32,
}

/// Minimum edge bitmask over all vertex relabelings.
pub fn canonical_code(g: &SmallGraph) -> CanonicalCode {
    let mut best = u32::MAX;
    for p in perms(g.n()) {
        let m = g.relabel(p).edges;
        if m < best {
            best = m;
        }
    }
    if g.n() == 0 {
        best = 0;
    }
    CanonicalCode { n: g.n, code: best }
}

/// The canonical representative itself: the graph whose mask is the code.
pub fn canonical_form(g: &SmallGraph) -> SmallGraph {
    SmallGraph {
        n: g.n,
        edges: canonical_code(g).code,
    }
}

/// A small graph with one distinguished root vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RootedFlag {
    pub graph: SmallGraph,
    pub root: u8,
}

impl RootedFlag {
    pub fn new(graph: SmallGraph, root: usize) -> Result<Self> {
        if root >= graph.n() {
            return Err(Error::BadVertex(format!(
                "root {root} out of range for {} vertices",
                graph.n()
            )));
        }
        Ok(RootedFlag {
            graph,
            root: root as u8,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// Minimum edge bitmask over relabelings that put the root at vertex 0 —
/// root-preserving isomorphism invariance.
pub fn rooted_canonical_code(f: &RootedFlag) -> Result<CanonicalCode> {
    let n = f.n();
    if f.root as usize >= n {
        return Err(Error::BadVertex(format!("root {} out of range", f.root)));
    }
    // Move the root to position 0, then minimize over permutations fixing 0.
    let mut swap: Vec<u8> = (0..n as u8).collect();
    swap.swap(0, f.root as usize);
    let g0 = f.graph.relabel(&swap);
    let mut best = u32::MAX;
    for p in perms_fixing_zero(n) {
        let m = g0.relabel(p).edges;
        if m < best {
            best = m;
        }
    }
    if n == 0 {
        best = 0;
    }
    Ok(CanonicalCode {
        n: f.graph.n,
        code: best,
    })
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by (edge count, canonical code). Built by extending the classes
/// one order below with every possible new-vertex neighborhood.
pub fn enumerate_classes(n: usize) -> Result<Vec<SmallGraph>> {
    if n > 7 {
        return Err(Error::TooLarge { got: n, limit: 7 });
    }
    let mut classes = vec![SmallGraph::empty(0)?];
    for m in 1..=n {
        let mut seen: BTreeMap<(u32, u32), SmallGraph> = BTreeMap::new();
        for g in &classes {
            for nb in 0u32..1 << (m - 1) {
                let mut ext = SmallGraph::empty(m)?;
                for u in 0..m - 1 {
                    for v in u + 1..m - 1 {
                        if g.edge(u, v) {
                            ext.set_edge(u, v)?;
                        }
                    }
                }
                for u in 0..m - 1 {
                    if nb >> u & 1 == 1 {
                        ext.set_edge(u, m - 1)?;
                    }
                }
                let canon = canonical_form(&ext);
                let _ = seen.insert((canon.edge_count(), canon.mask()), canon);
            }
        }
        classes = seen.into_values().collect();
    }
    Ok(classes)
}

/// Call `f` with every size-`k` index combination from `0..n` in
/// lexicographic order.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Number of `|F|`-subsets of `V(G)` inducing a copy of `F`; zero when
/// `|F| > |G|` by convention.
pub fn count_induced(f: &SmallGraph, g: &Graph) -> u64 {
    let nf = f.n();
    if nf > g.n() {
        return 0;
    }
    let target = canonical_code(f);
    let mut count = 0u64;
    for_each_combination(g.n(), nf, |verts| {
        let sub = g
            .induced_small(verts)
            .expect("induced subgraph fits in a SmallGraph");
        if canonical_code(&sub) == target {
            count += 1;
        }
    });
    count
}

/// Induced density: `count_induced / C(|G|, |F|)`.
pub fn p_induced(f: &SmallGraph, g: &Graph) -> Rat {
    if f.n() > g.n() {
        return rat(0);
    }
    let c = count_induced(f, g);
    Rat::new(BigInt::from(c), binomial(g.n() as u64, f.n() as u64))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Number of not-necessarily-induced copies of `H` in `G`: labeled
/// edge-preserving embeddings divided by `|aut(H)|`.
pub fn nu_copies(h: &SmallGraph, g: &Graph) -> Result<u64> {
    if h.n() > 5 {
        return Err(Error::TooLarge {
            got: h.n(),
            limit: 5,
        });
    }
    let labeled = count_embeddings(h, g);
    let aut = h.automorphism_count() as u64;
    debug_assert!(labeled.is_multiple_of(aut));
    Ok(labeled / aut)
}

fn count_embeddings(h: &SmallGraph, g: &Graph) -> u64 {
    let nh = h.n();
    if nh == 0 {
        return 1;
    }
    let mut map = vec![usize::MAX; nh];
    let mut used = vec![false; g.n()];
    fn rec(h: &SmallGraph, g: &Graph, depth: usize, map: &mut [usize], used: &mut [bool]) -> u64 {
        if depth == h.n() {
            return 1;
        }
        let mut total = 0;
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            let blocked = map[..depth]
                .iter()
                .enumerate()
                .any(|(w, &mv)| h.edge(w, depth) && !g.has_edge(mv, v));
            if blocked {
                continue;
            }
            map[depth] = v;
            used[v] = true;
            total += rec(h, g, depth + 1, map, used);
            used[v] = false;
        }
        total
    }
    rec(h, g, 0, &mut map, &mut used)
}

/// Classify the rooted triple with root edges (`root_u`, `root_v`) and
/// non-root edge `uv` into the fixed 1..6 flag order.
pub(crate) fn triple_flag_index(root_u: bool, root_v: bool, uv: bool) -> u8 {
    match (u8::from(root_u) + u8::from(root_v), uv) {
        (0, false) => 1, // no edges
        (0, true) => 2,  // single edge away from the root
        (1, false) => 3, // single edge at the root
        (1, true) => 4,  // 2-path with the root as an endpoint
        (2, false) => 5, // 2-path centered at the root
        (2, true) => 6,  // triangle
        _ => unreachable!(),
    }
}
