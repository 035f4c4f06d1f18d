//! Exact 5-cycle counting: a naive 5-subset backend for small graphs and a
//! closed-walk trace backend for large ones.
//!
//! The trace backend is not taken on faith: the test suite equates it with
//! the naive count on every graph of order at most 6 and on random larger
//! graphs before anything else relies on it.

use crate::graph::Graph;
use crate::par;
use crate::small::for_each_combination;

/// Exact number of 5-cycle subgraphs. Dispatches to the naive backend for
/// orders up to 12 and the algebraic backend beyond.
pub fn count_c5(g: &Graph) -> u128 {
    if g.n() <= 12 {
        count_c5_naive(g)
    } else {
        count_c5_algebraic(g)
    }
}

/// Enumerate all 5-subsets and count the spanning 5-cycles of each.
pub fn count_c5_naive(g: &Graph) -> u128 {
    let mut total = 0u128;
    for_each_combination(g.n(), 5, |verts| {
        let sub = g
            .induced_small(verts)
            .expect("5 vertices fit in a SmallGraph");
        total += sub.spanning_c5_count() as u128;
    });
    total
}

/// Closed-walk method:
/// `10 * c5 = tr(A^5) - 5 * tr(A^3) - 5 * sum_i (d_i - 2) (A^3)_ii`,
/// subtracting the closed 5-walks that revisit a vertex.
pub fn count_c5_algebraic(g: &Graph) -> u128 {
    let n = g.n();
    if n < 5 {
        return 0;
    }
    let degs: Vec<i128> = (0..n).map(|v| g.degree(v) as i128).collect();

    // Per-row contributions: row i of A^2 by codegrees, then row i of A^3
    // via neighborhoods, accumulating the two traces and the diagonal term.
    let per_row = par::map_range(n, |i| {
        let row2: Vec<i128> = (0..n)
            .map(|j| if i == j { 0 } else { g.codegree(i, j) as i128 })
            .collect();
        // (A^2)_ii = d_i, excluded above; re-add where the walk formulas need it.
        let a3_ii: i128 = g.neighbors(i).map(|j| row2[j]).sum();
        let mut tr5_part: i128 = 0;
        for j in 0..n {
            if row2[j] == 0 && i != j {
                continue;
            }
            // (A^3)_ij = sum over k in N(j) of (A^2)_ik, with (A^2)_kk = d_k.
            let mut a3_ij: i128 = 0;
            for k in g.neighbors(j) {
                a3_ij += if k == i { degs[i] } else { row2[k] };
            }
            let a2_ij = if i == j { degs[i] } else { row2[j] };
            tr5_part += a2_ij * a3_ij;
        }
        (tr5_part, a3_ii)
    });

    let tr5: i128 = per_row.iter().map(|r| r.0).sum();
    let tr3: i128 = per_row.iter().map(|r| r.1).sum();
    let diag: i128 = per_row.iter().zip(&degs).map(|(r, d)| (d - 2) * r.1).sum();

    let ten_c5 = tr5 - 5 * tr3 - 5 * diag;
    debug_assert!(ten_c5 >= 0 && ten_c5 % 10 == 0);
    (ten_c5 / 10) as u128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::small::{pair_count, SmallGraph};

    #[test]
    fn known_counts() {
        let k5 = Graph::complete_multipartite(&[1; 5]);
        assert_eq!(count_c5(&k5), 12);
        assert_eq!(count_c5(&Graph::cycle(5)), 1);
        // Bipartite graphs have no odd cycle.
        let bip = Graph::complete_multipartite(&[7, 6]);
        assert_eq!(count_c5(&bip), 0);
        assert_eq!(count_c5(&Graph::complete_multipartite(&[2, 2, 2])), 24);
    }

    #[test]
    fn backends_agree_exhaustively_to_order_6() {
        for n in 5..=6usize {
            for mask in 0u32..1 << pair_count(n) {
                let s = SmallGraph::from_mask(n, mask).unwrap();
                let g: Graph = (&s).into();
                assert_eq!(
                    count_c5_naive(&g),
                    count_c5_algebraic(&g),
                    "n={n} mask={mask}"
                );
            }
        }
    }

    #[test]
    fn backends_agree_on_random_graphs() {
        let mut rng = SplitMix64::new(0xA5A5);
        for _ in 0..200 {
            let g = Graph::random(10, rng.next_u64(), 1, 2);
            assert_eq!(count_c5_naive(&g), count_c5_algebraic(&g));
        }
    }
}
