//! Turán and complete multipartite constructions with exact 5-cycle counts.
//!
//! The closed-form count groups the cyclic part-assignments by how many
//! distinct parts they touch (5, 4 or 3 — a 5-cycle cannot alternate
//! between fewer), which keeps it exact for any part sizes and any number
//! of parts.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::cert::lambda_fn;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{rat, Rat};

/// Sizes of the parts of a complete multipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartSizes(Vec<u64>);

impl PartSizes {
    pub fn new(sizes: Vec<u64>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::Domain(
                "part sizes must be positive and nonempty".into(),
            ));
        }
        Ok(PartSizes(sizes))
    }

    pub fn sizes(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// Balanced part sizes for the Turán graph: `n mod k` parts get the ceiling.
pub fn turan_parts(k: u64, n: u64) -> Result<PartSizes> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!(
            "turan parts need 1 <= k <= n, got k={k} n={n}"
        )));
    }
    let q = n / k;
    let r = n % k;
    let sizes = (0..k).map(|i| if i < r { q + 1 } else { q }).collect();
    PartSizes::new(sizes)
}

/// The complete k-partite graph on n vertices with near-equal parts.
pub fn turan_graph(k: u64, n: u64) -> Result<Graph> {
    Ok(Graph::complete_multipartite(turan_parts(k, n)?.sizes()))
}

fn falling(a: u64, m: u32) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..m as u64 {
        if i >= a {
            return 0;
        }
        acc *= (a - i) as u128;
    }
    acc
}

/// Exact 5-cycle count of the complete multipartite graph with the given
/// part sizes: one tenth of the sum over proper cyclic part-assignments of
/// the falling-factorial products of the touched parts.
pub fn c5_multipartite_closed(parts: &PartSizes) -> u128 {
    let a = parts.sizes();
    let k = a.len();
    if k <= 12 {
        c5_by_pattern_enumeration(a)
    } else {
        c5_by_symmetric_sums(a)
    }
}

/// Direct enumeration of the k^5 cyclic assignments (small k).
fn c5_by_pattern_enumeration(a: &[u64]) -> u128 {
    let k = a.len();
    let mut total: u128 = 0;
    let mut pattern = [0usize; 5];
    loop {
        let proper = (0..5).all(|i| pattern[i] != pattern[(i + 1) % 5]);
        if proper {
            let mut mult = [0u32; 12];
            for &p in &pattern {
                mult[p] += 1;
            }
            let mut term: u128 = 1;
            for (p, &m) in mult.iter().enumerate().take(k) {
                if m > 0 {
                    term *= falling(a[p], m);
                }
            }
            total += term;
        }
        // odometer over patterns
        let mut pos = 0;
        loop {
            if pos == 5 {
                debug_assert_eq!(total % 10, 0);
                return total / 10;
            }
            pattern[pos] += 1;
            if pattern[pos] < k {
                break;
            }
            pattern[pos] = 0;
            pos += 1;
        }
    }
}

/// Grouped closed form for many parts. A proper cyclic assignment touches
/// 5, 4 or 3 distinct parts; the three shapes contribute
///   5! e5,   30 * sum_w (a_w)_2 e3(rest),   5 * sum_{u!=v} (a_u)_2 (a_v)_2 e1(rest)
/// where the e_j are elementary symmetric polynomials of the sizes.
fn c5_by_symmetric_sums(a: &[u64]) -> u128 {
    let big = |x: u128| BigInt::from(x);
    // e1..e5 via the standard recurrence.
    let mut e = [
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
    ];
    e[0] = BigInt::one();
    for &x in a {
        for j in (1..=5).rev() {
            let add = &e[j - 1] * big(x as u128);
            e[j] = &e[j] + add;
        }
    }

    let mut total = BigInt::from(120) * &e[5];

    // One part doubled: 30 * sum_w (a_w)_2 * e3(a minus w).
    for &w in a {
        let e1w = &e[1] - big(w as u128);
        let e2w = &e[2] - big(w as u128) * &e1w;
        let e3w = &e[3] - big(w as u128) * &e2w;
        total += BigInt::from(30) * big(falling(w, 2)) * e3w;
    }

    // Two parts doubled plus a singleton: 5 * sum over ordered (u, v).
    for (i, &u) in a.iter().enumerate() {
        for (j, &v) in a.iter().enumerate() {
            if i == j {
                continue;
            }
            let rest = &e[1] - big(u as u128) - big(v as u128);
            total += BigInt::from(5) * big(falling(u, 2)) * big(falling(v, 2)) * rest;
        }
    }

    let q = &total / BigInt::from(10);
    debug_assert!((total % BigInt::from(10)).is_zero());
    q.to_u128().expect("count fits in u128")
}

/// Exact count, density, target value and gap for a Turán graph.
#[derive(Clone, Debug)]
pub struct TuranReport {
    pub k: u64,
    pub n: u64,
    pub count: u128,
    /// count / n^5, exact.
    pub density: Rat,
    pub lambda: Rat,
    /// density - lambda as a float, for quick reading.
    pub gap: f64,
}

pub fn turan_density_report(k: u64, n: u64) -> Result<TuranReport> {
    if k < 3 {
        return Err(Error::Domain(format!(
            "density report needs k >= 3, got {k}"
        )));
    }
    let parts = turan_parts(k, n)?;
    let count = c5_multipartite_closed(&parts);
    let n5 = rat(n as i64).pow(5);
    let density = Rat::new(BigInt::from(count), BigInt::one()) / n5;
    let lambda = lambda_fn().eval(&rat(k as i64)).expect("k >= 3");
    let gap = (&density - &lambda).to_f64().unwrap_or(f64::NAN);
    Ok(TuranReport {
        k,
        n,
        count,
        density,
        lambda,
        gap,
    })
}

/// Exact asymptotic 5-cycle density of the balanced k-partite graph:
/// `[(1/10)(k)_5 + (1/2)(k)_4 + (1/2)(k)_3] / k^5`. Used to cross-check
/// that the closed-form count converges to the target value.
pub fn balanced_limit_density(k: u64) -> Rat {
    let f = |m: u32| Rat::new(BigInt::from(falling(k, m)), BigInt::one());
    let num = Rat::new(BigInt::one(), BigInt::from(10)) * f(5)
        + Rat::new(BigInt::one(), BigInt::from(2)) * f(4)
        + Rat::new(BigInt::one(), BigInt::from(2)) * f(3);
    num / rat(k as i64).pow(5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c5::count_c5;
    use crate::rng::SplitMix64;

    #[test]
    fn turan_small_cases() {
        let t36 = turan_graph(3, 6).unwrap();
        assert_eq!(t36.edge_count(), 12);
        assert_eq!(t36, Graph::complete_multipartite(&[2, 2, 2]));
        let t25 = turan_graph(2, 5).unwrap();
        assert_eq!(t25, Graph::complete_multipartite(&[3, 2]));
        let t55 = turan_graph(5, 5).unwrap();
        assert_eq!(t55.edge_count(), 10);
        assert!(turan_graph(6, 5).is_err());
    }

    #[test]
    fn closed_count_known_values() {
        let p = |v: &[u64]| PartSizes::new(v.to_vec()).unwrap();
        assert_eq!(c5_multipartite_closed(&p(&[1, 1, 1, 1, 1])), 12);
        assert_eq!(c5_multipartite_closed(&p(&[3, 2])), 0);
        assert_eq!(c5_multipartite_closed(&p(&[2, 2, 2])), 24);
    }

    #[test]
    fn closed_count_matches_naive_on_random_size_vectors() {
        let mut rng = SplitMix64::new(0x7AB1E);
        for _ in 0..50 {
            let parts = 1 + rng.next_below(4);
            let mut sizes = Vec::new();
            let mut left = 9u64;
            for i in 0..parts {
                let take = if i + 1 == parts {
                    left
                } else {
                    1 + rng.next_below(left - (parts - i - 1))
                };
                sizes.push(take);
                left -= take;
                if left == 0 {
                    break;
                }
            }
            let sizes: Vec<u64> = sizes.into_iter().filter(|&s| s > 0).collect();
            if sizes.is_empty() {
                continue;
            }
            let parts = PartSizes::new(sizes.clone()).unwrap();
            let g = Graph::complete_multipartite(&sizes);
            assert_eq!(c5_multipartite_closed(&parts), count_c5(&g), "{sizes:?}");
        }
    }

    #[test]
    fn grouped_formula_agrees_with_enumeration() {
        // Force both paths on the same inputs.
        for sizes in [vec![2u64, 3, 1, 2], vec![1, 1, 4, 2, 1], vec![3, 3, 3]] {
            assert_eq!(
                c5_by_pattern_enumeration(&sizes),
                c5_by_symmetric_sums(&sizes),
                "{sizes:?}"
            );
        }
        // Many unit parts: K13 counted both ways.
        let k13 = vec![1u64; 13];
        let g = Graph::complete_multipartite(&k13);
        assert_eq!(c5_by_symmetric_sums(&k13), count_c5(&g));
    }

    #[test]
    fn density_report_values() {
        let r = turan_density_report(3, 6).unwrap();
        assert_eq!(r.count, 24);
        assert_eq!(r.density, Rat::new(24.into(), 7776.into()));
        let r55 = turan_density_report(5, 5).unwrap();
        assert_eq!(r55.count, 12);
        assert!(turan_density_report(2, 10).is_err());
    }

    #[test]
    fn limit_density_equals_lambda_symbolically() {
        // [(1/10)(k)_5 + (1/2)(k)_4 + (1/2)(k)_3] / k^5 = lambda(k) as
        // rational functions, via the falling-factorial expansion.
        use crate::poly::{ratio, PolyK, RatFnK};
        let falling_poly = |m: usize| {
            let mut acc = PolyK::one();
            for i in 0..m as i64 {
                acc = &acc * &PolyK::from_ints(&[-i, 1]);
            }
            acc
        };
        let num = &(&falling_poly(5).scale(&ratio(1, 10)) + &falling_poly(4).scale(&ratio(1, 2)))
            + &falling_poly(3).scale(&ratio(1, 2));
        let k5 = PolyK::from_ints(&[0, 0, 0, 0, 0, 1]);
        assert_eq!(RatFnK::new(num, k5), lambda_fn());
    }

    #[test]
    fn balanced_parts_give_limit_density_exactly() {
        // With all parts equal to n/k the count is a polynomial identity in
        // the part size; check the ratio approaches the closed-form limit.
        for k in [3u64, 4, 5] {
            let limit = balanced_limit_density(k);
            assert_eq!(limit, lambda_fn().eval(&rat(k as i64)).unwrap());
            let n = 60 * k;
            let parts = turan_parts(k, n).unwrap();
            let count = c5_multipartite_closed(&parts);
            let density = Rat::new(BigInt::from(count), BigInt::from(n).pow(5));
            let gap = (&density - &limit).to_f64().unwrap().abs();
            assert!(gap < 0.05 * limit.to_f64().unwrap(), "k={k} gap={gap}");
        }
    }

    #[test]
    fn turan_edge_density_tends_to_target() {
        let g = turan_graph(4, 200).unwrap();
        let expect = 1.0 - 1.0 / 4.0;
        let density = 2.0 * g.edge_count() as f64 / (200.0 * 199.0);
        assert!((density - expect).abs() < 0.01);
    }
}
