//! Products of rooted 3-vertex flags, the unlabeling operator, the 21x34
//! table of unlabeled product coefficients over the 34 graphs of order 5,
//! and exact alignment of the computed table against the shipped data file.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::par;
use crate::poly::{rat, ratio, Rat};
use crate::small::{
    canonical_code, enumerate_classes, rooted_canonical_code, CanonicalCode, RootedFlag, SmallGraph,
};

/// Number of isomorphism classes of graphs on 5 vertices.
pub const NUM_F5: usize = 34;
/// Number of rooted 3-vertex flag types.
pub const NUM_X: usize = 6;
/// Number of unordered flag-type pairs (i, j), i <= j.
pub const NUM_PAIRS: usize = 21;
/// Common denominator of the table: 5 roots times 6 ordered splits.
pub const TABLE_SCALE: u32 = 30;

/// The internal, canonically ordered list of the 34 graphs of order 5.
pub fn five_classes() -> &'static [SmallGraph] {
    static CLASSES: OnceLock<Vec<SmallGraph>> = OnceLock::new();
    CLASSES.get_or_init(|| {
        let c = enumerate_classes(5).expect("order 5 enumeration");
        assert_eq!(c.len(), NUM_F5);
        c
    })
}

/// Index of a 5-vertex graph in the internal class order.
pub fn class_index(g: &SmallGraph) -> Option<usize> {
    static LOOKUP: OnceLock<BTreeMap<CanonicalCode, usize>> = OnceLock::new();
    let lookup = LOOKUP.get_or_init(|| {
        five_classes()
            .iter()
            .enumerate()
            .map(|(i, g)| (canonical_code(g), i))
            .collect()
    });
    lookup.get(&canonical_code(g)).copied()
}

/// The six rooted 3-vertex flags in the fixed order: empty; edge away from
/// the root; edge at the root; 2-path ending at the root; 2-path centered
/// at the root; triangle. Root is vertex 0.
pub fn x_flags() -> &'static [RootedFlag; NUM_X] {
    static FLAGS: OnceLock<[RootedFlag; NUM_X]> = OnceLock::new();
    FLAGS.get_or_init(|| {
        let edge_sets: [&[(usize, usize)]; NUM_X] = [
            &[],
            &[(1, 2)],
            &[(0, 1)],
            &[(0, 1), (1, 2)],
            &[(0, 1), (0, 2)],
            &[(0, 1), (0, 2), (1, 2)],
        ];
        edge_sets.map(|edges| {
            let g = SmallGraph::from_edges(3, edges).expect("3-vertex flag");
            RootedFlag::new(g, 0).expect("root 0")
        })
    })
}

/// Index in the pair list of (i, j), arguments in 1..=6 in either order.
pub fn pair_row(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    debug_assert!((1..=NUM_X).contains(&i) && i <= j && j <= NUM_X);
    (i - 1) * (2 * NUM_X + 2 - i) / 2 + (j - i)
}

/// All pair rows in order: (1,1), (1,2), ..., (1,6), (2,2), ..., (6,6).
pub fn pair_rows() -> [(usize, usize); NUM_PAIRS] {
    let mut out = [(0, 0); NUM_PAIRS];
    let mut r = 0;
    for i in 1..=NUM_X {
        for j in i..=NUM_X {
            out[r] = (i, j);
            r += 1;
        }
    }
    out
}

/// One representative per rooted 5-vertex flag class, each tagged with the
/// index of its underlying unrooted class.
fn rooted_five_classes() -> &'static [(RootedFlag, usize)] {
    static CLASSES: OnceLock<Vec<(RootedFlag, usize)>> = OnceLock::new();
    CLASSES.get_or_init(|| {
        let mut seen: BTreeMap<CanonicalCode, (RootedFlag, usize)> = BTreeMap::new();
        for (idx, g) in five_classes().iter().enumerate() {
            for root in 0..5 {
                let f = RootedFlag::new(*g, root).expect("root in range");
                let code = rooted_canonical_code(&f).expect("valid flag");
                let _ = seen.entry(code).or_insert((f, idx));
            }
        }
        seen.into_values().collect()
    })
}

/// Probability that a uniform ordered split of the non-root vertices of
/// `host` into two halves induces `f1` on the first half and `f2` on the
/// second, both including the root (root-preserving isomorphism).
fn split_probability(host: &RootedFlag, f1: &RootedFlag, f2: &RootedFlag) -> Rat {
    let code1 = rooted_canonical_code(f1).expect("flag");
    let code2 = rooted_canonical_code(f2).expect("flag");
    let others: Vec<usize> = (0..host.n()).filter(|&v| v != host.root as usize).collect();
    debug_assert_eq!(others.len(), 4);
    // The 6 ordered splits: each 2-subset as the first half, the rest second.
    let mut hits = 0u32;
    let mut total = 0u32;
    for a in 0..4 {
        for b in 0..4 {
            if a == b || others[a] > others[b] {
                continue;
            }
            let first = [others[a], others[b]];
            let second: Vec<usize> = (0..4)
                .filter(|&t| t != a && t != b)
                .map(|t| others[t])
                .collect();
            total += 1;
            if rooted_triple_code(host, &first) == code1
                && rooted_triple_code(host, &second) == code2
            {
                hits += 1;
            }
        }
    }
    debug_assert_eq!(total, 6);
    ratio(hits as i64, 6)
}

fn rooted_triple_code(host: &RootedFlag, pair: &[usize]) -> CanonicalCode {
    let r = host.root as usize;
    let verts = [r, pair[0], pair[1]];
    let mut sub = SmallGraph::empty(3).expect("triple");
    for i in 0..3 {
        for j in i + 1..3 {
            if host.graph.edge(verts[i], verts[j]) {
                sub.set_edge(i, j).expect("in range");
            }
        }
    }
    rooted_canonical_code(&RootedFlag::new(sub, 0).expect("root 0")).expect("valid")
}

/// The product of two rooted 3-flags expanded over rooted 5-flag classes:
/// class representative paired with the split probability p(f1, f2; class).
/// Zero-probability classes are omitted.
pub fn flag_product(f1: &RootedFlag, f2: &RootedFlag) -> Result<Vec<(RootedFlag, Rat)>> {
    if f1.n() != 3 || f2.n() != 3 {
        return Err(Error::Domain(format!(
            "flag product needs two 3-vertex flags, got {} and {}",
            f1.n(),
            f2.n()
        )));
    }
    let mut out = Vec::new();
    for (host, _) in rooted_five_classes() {
        let p = split_probability(host, f1, f2);
        if !p.is_zero() {
            out.push((*host, p));
        }
    }
    Ok(out)
}

/// Forget the root: the underlying graph together with the probability that
/// a uniformly chosen root of it reproduces the flag.
pub fn unlabel(f: &RootedFlag) -> (SmallGraph, Rat) {
    let code = rooted_canonical_code(f).expect("valid flag");
    let n = f.n();
    let matching = (0..n)
        .filter(|&v| {
            let g = RootedFlag::new(f.graph, v).expect("root in range");
            rooted_canonical_code(&g).expect("valid") == code
        })
        .count();
    (f.graph, ratio(matching as i64, n as i64))
}

/// The 21x34 table of unlabeled flag-product coefficients. Entries are
/// stored times 30, which makes every one of them a small integer.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    scaled: Vec<[u32; NUM_F5]>,
}

impl CoeffTable {
    /// Entry (i, j, class) as an exact rational in [0, 1].
    pub fn value(&self, i: usize, j: usize, class: usize) -> Rat {
        ratio(self.scaled(i, j, class) as i64, TABLE_SCALE as i64)
    }

    /// Entry (i, j, class) times 30.
    pub fn scaled(&self, i: usize, j: usize, class: usize) -> u32 {
        self.scaled[pair_row(i, j)][class]
    }

    pub fn scaled_rows(&self) -> &[[u32; NUM_F5]] {
        &self.scaled
    }
}

/// Compute the table: coefficient of each unrooted class in the unlabeled
/// product of flags i and j, summed over rooted classes as
/// `p(Xi, Xj; F') * q(F')`.
pub fn product_table() -> CoeffTable {
    let xs = x_flags();
    let rows = pair_rows();
    let scaled: Vec<[u32; NUM_F5]> = par::map_slice(&rows, |&(i, j)| {
        let mut row: [Rat; NUM_F5] = std::array::from_fn(|_| rat(0));
        let expansion = flag_product(&xs[i - 1], &xs[j - 1]).expect("3-vertex flags");
        for (host, p) in expansion {
            let (g, q) = unlabel(&host);
            let idx = class_index(&g).expect("order-5 class");
            row[idx] = &row[idx] + &(&p * &q);
        }
        let mut out = [0u32; NUM_F5];
        for (slot, v) in out.iter_mut().zip(row) {
            let scaled = v * rat(TABLE_SCALE as i64);
            assert!(
                scaled.is_integer(),
                "table entry times 30 must be an integer"
            );
            let as_int = i64::try_from(scaled.to_integer()).expect("small entry");
            assert!((0..=TABLE_SCALE as i64).contains(&as_int));
            *slot = as_int as u32;
        }
        out
    });
    CoeffTable { scaled }
}

/// Number of 5-subsets of `g` inducing each class, internal order: the
/// vector of P(F, g) over the order-5 classes in one pass.
pub fn induced_class_profile(g: &crate::graph::Graph) -> [u64; NUM_F5] {
    let mut counts = [0u64; NUM_F5];
    crate::small::for_each_combination(g.n(), 5, |verts| {
        let sub = g.induced_small(verts).expect("5 vertices fit");
        let idx = class_index(&sub).expect("every 5-vertex graph has a class");
        counts[idx] += 1;
    });
    counts
}

/// Spanning 5-cycle count of each class, internal order.
pub fn cf_opt_vector() -> [u32; NUM_F5] {
    let mut out = [0u32; NUM_F5];
    for (slot, g) in out.iter_mut().zip(five_classes()) {
        *slot = g.spanning_c5_count();
    }
    out
}

/// Edge density p(K2, F) = |E(F)|/10 of each class, internal order.
pub fn pk2_vector() -> [Rat; NUM_F5] {
    std::array::from_fn(|i| ratio(five_classes()[i].edge_count() as i64, 10))
}

/// The shipped table data: 23 rows of 34 integers in the source column
/// order (5-cycle counts; edge counts; the 21 product rows times 30).
#[derive(Clone, Debug)]
pub struct PaperData {
    pub copt: Vec<i64>,
    pub pk2_x10: Vec<i64>,
    pub rows: Vec<Vec<i64>>,
}

impl PaperData {
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row: Vec<i64> = line
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<i64>()
                        .map_err(|e| Error::Data(format!("line {}: {e}", lineno + 1)))
                })
                .collect::<Result<_>>()?;
            if row.len() != NUM_F5 {
                return Err(Error::Data(format!(
                    "line {}: expected {NUM_F5} columns, got {}",
                    lineno + 1,
                    row.len()
                )));
            }
            rows.push(row);
        }
        if rows.len() != 2 + NUM_PAIRS {
            return Err(Error::Data(format!(
                "expected {} rows, got {}",
                2 + NUM_PAIRS,
                rows.len()
            )));
        }
        let copt = rows.remove(0);
        let pk2_x10 = rows.remove(0);
        Ok(PaperData {
            copt,
            pk2_x10,
            rows,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
        PaperData::parse(&text)
    }

    /// Full 23-entry fingerprint of one column.
    fn column(&self, c: usize) -> Vec<i64> {
        let mut v = vec![self.copt[c], self.pk2_x10[c]];
        v.extend(self.rows.iter().map(|r| r[c]));
        v
    }
}

/// Bijection from internal class indices to data columns (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alignment {
    pub perm: Vec<usize>,
}

impl Alignment {
    /// Reorder a 34-entry slice from internal order into data-column order.
    pub fn to_paper_order<T: Clone>(&self, internal: &[T]) -> Vec<T> {
        let mut out: Vec<Option<T>> = vec![None; internal.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            out[p] = Some(internal[i].clone());
        }
        out.into_iter().map(|x| x.expect("bijection")).collect()
    }
}

fn computed_column(table: &CoeffTable, copt: &[u32; NUM_F5], c: usize) -> Vec<i64> {
    let mut v = vec![copt[c] as i64, five_classes()[c].edge_count() as i64];
    v.extend(table.scaled_rows().iter().map(|r| r[c] as i64));
    v
}

/// Find the unique column permutation under which the computed table and
/// header vectors reproduce the shipped data exactly.
pub fn align_to_paper(table: &CoeffTable, paper: &PaperData) -> Result<Alignment> {
    let copt = cf_opt_vector();

    // Duplicate columns on either side make the permutation ambiguous.
    let mut paper_cols: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for c in 0..NUM_F5 {
        paper_cols.entry(paper.column(c)).or_default().push(c);
    }
    let dups: Vec<usize> = paper_cols
        .values()
        .filter(|v| v.len() > 1)
        .flatten()
        .copied()
        .collect();
    if !dups.is_empty() {
        return Err(Error::AlignAmbiguous(dups));
    }

    let mut perm = vec![usize::MAX; NUM_F5];
    let mut unmatched: Vec<usize> = Vec::new();
    for (c, slot) in perm.iter_mut().enumerate() {
        let fp = computed_column(table, &copt, c);
        match paper_cols.get(&fp) {
            Some(cols) => *slot = cols[0],
            None => unmatched.push(c),
        }
    }
    if let Some(&c) = unmatched.first() {
        // Point at the closest data column and the first differing row.
        let fp = computed_column(table, &copt, c);
        let mut used: Vec<bool> = vec![false; NUM_F5];
        for &p in perm.iter().filter(|&&p| p != usize::MAX) {
            used[p] = true;
        }
        let (best, diff_row) = (0..NUM_F5)
            .filter(|&p| !used[p])
            .map(|p| {
                let pc = paper.column(p);
                let d = fp.iter().zip(&pc).filter(|(a, b)| a != b).count();
                let row = fp.iter().zip(&pc).position(|(a, b)| a != b).unwrap_or(0);
                (d, p, row)
            })
            .min()
            .map(|(_, p, row)| (p, row))
            .expect("at least one unused column");
        return Err(Error::AlignMismatch(format!(
            "computed class {c} matches no data column; closest is column {} (first difference in row {} of the 23-row layout)",
            best + 1,
            diff_row + 1,
        )));
    }
    Ok(Alignment { perm })
}
