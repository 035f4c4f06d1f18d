//! The general edge-density machinery: the 5-cycle density `f` and edge
//! density `g` of the layered construction, the one-parameter reduction of
//! the constrained minimization, the secant line between consecutive
//! special densities, and the randomized construction realizing `f` at
//! finite order.
//!
//! The construction has `k - 1` independent sets of relative size `x`,
//! complete to each other and to a remainder `Y` of relative size `y`,
//! with a sparse quasi-random graph of density `rho` inside `Y`.

use num_traits::ToPrimitive;

use crate::cert::lambda_fn;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par;
use crate::poly::{rat, ratio, Rat};
use crate::rng::indexed_bernoulli;

/// Falling factorial `(a)_m = a (a-1) ... (a-m+1)`.
pub fn falling(a: i64, m: u32) -> i64 {
    (0..m as i64).map(|i| a - i).product()
}

/// Edge-density regime: integer `k >= 2` with
/// `1 - 1/k <= p <= 1 - 1/(k+1)` (closed endpoints accepted).
#[derive(Clone, Copy, Debug)]
pub struct Regime {
    pub k: u32,
    pub p: f64,
}

const P_EPS: f64 = 1e-12;

impl Regime {
    pub fn new(k: u32, p: f64) -> Result<Self> {
        if k < 2 {
            return Err(Error::Domain(format!("regime needs k >= 2, got {k}")));
        }
        let lo = 1.0 - 1.0 / k as f64;
        let hi = 1.0 - 1.0 / (k as f64 + 1.0);
        if !(lo - P_EPS..=hi + P_EPS).contains(&p) {
            return Err(Error::Domain(format!(
                "p = {p} outside [{lo}, {hi}] for k = {k}"
            )));
        }
        Ok(Regime { k, p })
    }

    /// The regime interval containing `p` in [1/2, 1).
    pub fn from_p(p: f64) -> Result<Self> {
        if !(0.5 - P_EPS..1.0).contains(&p) {
            return Err(Error::Domain(format!("p = {p} outside [1/2, 1)")));
        }
        let mut k = (1.0 / (1.0 - p)).floor() as u32;
        // Land exactly on a special density from below.
        if ((1.0 - 1.0 / (k as f64 + 1.0)) - p).abs() <= P_EPS {
            k += 1;
        }
        Regime::new(k.max(2), p)
    }
}

/// One point of the construction family.
#[derive(Clone, Copy, Debug)]
pub struct PPoint {
    pub x: f64,
    pub y: f64,
    pub rho: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    /// Interior optimum found on the grid and refined.
    OptimalGrid,
    /// Optimum at the edge of the feasible interval.
    Boundary,
    /// No feasible point.
    Infeasible,
}

#[derive(Clone, Copy, Debug)]
pub struct Solution {
    pub point: PPoint,
    pub value: f64,
    pub status: SolveStatus,
}

/// Limit 5-cycle density of the construction, grouped by how many vertices
/// each term draws from the `x`-parts and from `Y`.
pub fn f_value(k: u32, x: f64, y: f64, rho: f64) -> f64 {
    let b = k as i64 - 1;
    let fl = |m: u32| falling(b, m) as f64;
    let c50 = fl(5) / 10.0 + fl(4) / 2.0 + fl(3) / 2.0;
    let c41 = fl(4) / 2.0 + 1.5 * fl(3) + fl(2) / 2.0;
    let c32 = (0.5 + 0.5 * rho) * fl(3) + (1.0 + 0.5 * rho) * fl(2);
    let c23 = (0.5 * rho + 0.5 * rho * rho) * fl(2) + 0.5 * rho * fl(1);
    let c14 = 0.5 * rho * rho * rho * fl(1);
    c50 * x.powi(5)
        + c41 * x.powi(4) * y
        + c32 * x.powi(3) * y * y
        + c23 * x * x * y.powi(3)
        + c14 * x * y.powi(4)
}

/// Exact-rational twin of `f_value`.
pub fn f_value_exact(k: u32, x: &Rat, y: &Rat, rho: &Rat) -> Rat {
    let b = k as i64 - 1;
    let fl = |m: u32| rat(falling(b, m));
    let half = ratio(1, 2);
    let c50 = ratio(1, 10) * fl(5) + &half * fl(4) + &half * fl(3);
    let c41 = &half * fl(4) + ratio(3, 2) * fl(3) + &half * fl(2);
    let c32 = (&half + &(&half * rho)) * fl(3) + (rat(1) + &half * rho) * fl(2);
    let c23 = (&half * rho + &half * rho * rho) * fl(2) + &half * rho * fl(1);
    let c14 = &half * rho * rho * rho * fl(1);
    c50 * x.pow(5)
        + c41 * x.pow(4) * y
        + c32 * x.pow(3) * y.pow(2)
        + c23 * x.pow(2) * y.pow(3)
        + c14 * x * y.pow(4)
}

/// Limit edge density of the construction.
pub fn g_value(k: u32, x: f64, y: f64, rho: f64) -> f64 {
    let b = k as i64 - 1;
    falling(b, 2) as f64 * x * x + 2.0 * b as f64 * x * y + rho * y * y
}

/// Exact-rational twin of `g_value`.
pub fn g_value_exact(k: u32, x: &Rat, y: &Rat, rho: &Rat) -> Rat {
    let b = k as i64 - 1;
    rat(falling(b, 2)) * x * x + rat(2 * b) * x * y + rho * y * y
}

/// Solve `g = p` for `rho` given `x` (and `y = 1 - (k-1)x`), using the
/// density formula itself: `rho = (p - (k-1)_2 x^2 - 2(k-1)xy) / y^2`.
/// A vanishing `y` leaves no room for the quasi-random block.
pub fn rho_from(k: u32, p: f64, x: f64) -> Result<f64> {
    let b = k as f64 - 1.0;
    let y = 1.0 - b * x;
    if y <= 1e-9 {
        return Err(Error::Infeasible(format!(
            "degenerate partition: y = {y} at x = {x}"
        )));
    }
    let b2 = falling(k as i64 - 1, 2) as f64;
    Ok((p - b2 * x * x - 2.0 * b * x * y) / (y * y))
}

const RHO_EPS: f64 = 1e-9;

/// `rho` values realizable by some graph in the family: `[0, 1/2]` up to
/// roundoff. The open interval of the construction is closed here because
/// the minimum is an infimum and `f` is continuous (and increasing) in
/// `rho`; the boundary values are the Turán limits of the family.
fn rho_feasible(rho: f64) -> bool {
    (-RHO_EPS..=0.5 + RHO_EPS).contains(&rho)
}

const GRID_POINTS: usize = 10_000;

/// Global minimum of the reduced one-variable objective
/// `x -> f(k, x, 1-(k-1)x, rho_from(k, p, x))` by dense grid scan plus
/// golden-section refinement of every local basin. Deterministic.
pub fn fmin(k: u32, p: f64, tol: f64) -> Result<Solution> {
    let regime = Regime::new(k, p)?;
    let k = regime.k;
    let b = k as f64 - 1.0;
    let x_hi = (1.0 / b) * (1.0 - 1e-9);

    let objective = |x: f64| -> Option<f64> {
        let y = 1.0 - b * x;
        if !(0.0..=1.0).contains(&x) || y <= 1e-9 {
            return None;
        }
        let rho = rho_from(k, p, x).ok()?;
        if !rho_feasible(rho) {
            return None;
        }
        Some(f_value(k, x, y, rho.clamp(0.0, 0.5)))
    };

    let xs: Vec<f64> = (0..=GRID_POINTS)
        .map(|i| x_hi * i as f64 / GRID_POINTS as f64)
        .collect();
    let vals: Vec<Option<f64>> = par::map_slice(&xs, |&x| objective(x));

    let mut best: Option<(f64, f64, SolveStatus)> = None; // (value, x, status)
    let mut consider = |value: f64, x: f64, status: SolveStatus| {
        if best.is_none_or(|(bv, _, _)| value < bv) {
            best = Some((value, x, status));
        }
    };

    for i in 0..=GRID_POINTS {
        let Some(v) = vals[i] else { continue };
        let left = if i > 0 { vals[i - 1] } else { None };
        let right = if i < GRID_POINTS { vals[i + 1] } else { None };
        match (left, right) {
            (Some(l), Some(r)) => {
                if v <= l && v <= r {
                    // Interior local minimum: refine the bracket.
                    let (x_star, v_star) = golden_section(xs[i - 1], xs[i + 1], tol, |x| {
                        objective(x).unwrap_or(f64::INFINITY)
                    });
                    consider(v_star, x_star, SolveStatus::OptimalGrid);
                }
            }
            _ => {
                // Edge of a feasible run.
                consider(v, xs[i], SolveStatus::Boundary);
            }
        }
    }

    // The feasible set can shrink to a point the grid misses: at the upper
    // end of the regime only the x minimizing rho survives. Seed the two
    // balanced layouts and the rho-minimizer as extra candidates.
    let rho_of = |x: f64| rho_from(k, p, x).unwrap_or(f64::INFINITY);
    let (x_rho_min, _) = golden_section(0.0, x_hi, tol.min(1e-12), rho_of);
    for cand in [1.0 / k as f64, 1.0 / (k as f64 + 1.0), x_rho_min] {
        if (0.0..=x_hi).contains(&cand) {
            if let Some(v) = objective(cand) {
                consider(v, cand, SolveStatus::Boundary);
            }
        }
    }

    match best {
        None => Err(Error::Infeasible(format!(
            "no feasible x for k = {k}, p = {p}"
        ))),
        Some((value, x, status)) => {
            let y = 1.0 - b * x;
            let rho = rho_from(k, p, x)?.clamp(0.0, 0.5);
            Ok(Solution {
                point: PPoint { x, y, rho },
                value,
                status,
            })
        }
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

fn golden_section(mut a: f64, mut b: f64, tol: f64, f: impl Fn(f64) -> f64) -> (f64, f64) {
    let mut c = b - (b - a) * INV_PHI;
    let mut d = a + (b - a) * INV_PHI;
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * INV_PHI;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * INV_PHI;
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// `lambda(k)` as f64.
pub fn lambda_at(k: u32) -> f64 {
    lambda_fn()
        .eval(&rat(k as i64))
        .expect("k >= 1")
        .to_f64()
        .expect("finite")
}

/// Piecewise-linear interpolant through the points `(1 - 1/k, lambda(k))`.
pub fn secant_l(p: f64) -> Result<f64> {
    let regime = Regime::from_p(p)?;
    let k = regime.k;
    let (p0, p1) = (1.0 - 1.0 / k as f64, 1.0 - 1.0 / (k as f64 + 1.0));
    let (l0, l1) = (lambda_at(k), lambda_at(k + 1));
    Ok(l0 + (p - p0) * (l1 - l0) / (p1 - p0))
}

#[derive(Clone, Copy, Debug)]
pub struct CurveRow {
    pub p: f64,
    pub fmin: f64,
    pub l: f64,
    pub gap: f64,
    pub knot: bool,
}

/// Sampled minimization curve with the secant comparison. Besides the
/// uniform grid the rows include every special density `1 - 1/k` inside the
/// range; at those knots the exact closed form anchors the row, so
/// `fmin = L = lambda(k)` exactly there.
pub fn fmin_curve(from: f64, to: f64, step: f64, tol: f64) -> Result<Vec<CurveRow>> {
    if step <= 0.0 || to < from {
        return Err(Error::Domain("curve needs step > 0 and to >= from".into()));
    }
    let mut ps: Vec<f64> = Vec::new();
    let count = ((to - from) / step + 0.5).floor() as usize;
    for i in 0..=count {
        let p = from + step * i as f64;
        if p <= to + P_EPS {
            ps.push(p.min(to));
        }
    }
    let mut k = 2u32;
    loop {
        let knot = 1.0 - 1.0 / k as f64;
        if knot > to + P_EPS {
            break;
        }
        if knot >= from - P_EPS && ps.iter().all(|&p| (p - knot).abs() > P_EPS) {
            ps.push(knot);
        }
        k += 1;
    }
    ps.sort_by(|a, b| a.partial_cmp(b).expect("finite grid"));

    let rows = par::map_slice(&ps, |&p| -> Result<CurveRow> {
        if let Some(k) = knot_index(p) {
            let l = lambda_at(k);
            return Ok(CurveRow {
                p,
                fmin: l,
                l,
                gap: 0.0,
                knot: true,
            });
        }
        let fmin = fmin(Regime::from_p(p)?.k, p, tol)?.value;
        let l = secant_l(p)?;
        Ok(CurveRow {
            p,
            fmin,
            l,
            gap: fmin - l,
            knot: false,
        })
    });
    rows.into_iter().collect()
}

/// `Some(k)` when `p` is within roundoff of `1 - 1/k`.
pub fn knot_index(p: f64) -> Option<u32> {
    if !(0.0..1.0).contains(&p) {
        return None;
    }
    let k = (1.0 / (1.0 - p)).round() as u32;
    (k >= 2 && (p - (1.0 - 1.0 / k as f64)).abs() <= P_EPS).then_some(k)
}

/// The published reduced objective for `k = 2` after eliminating `y` and
/// `rho`: `x (2x^2 - 2x + p)(3x^4 - 5x^3 + (1+4p)x^2 + (1-4p)x + p^2) /
/// (2(x-1)^2)`.
pub fn k2_reduced(x: f64, p: f64) -> Result<f64> {
    if x == 1.0 {
        return Err(Error::Domain("x = 1 is a pole of the reduced form".into()));
    }
    let quad = 2.0 * x * x - 2.0 * x + p;
    let quart =
        3.0 * x.powi(4) - 5.0 * x.powi(3) + (1.0 + 4.0 * p) * x * x + (1.0 - 4.0 * p) * x + p * p;
    Ok(x * quad * quart / (2.0 * (x - 1.0) * (x - 1.0)))
}

/// One sample of the convention comparison at `k = 2`.
#[derive(Clone, Copy, Debug)]
pub struct ConventionSample {
    pub x: f64,
    pub p: f64,
    pub display: f64,
    /// f with `rho` from the density formula: `(p - 2xy)/y^2` at k = 2.
    pub f_density_rho: Option<f64>,
    /// f with the published substitution as written: `(p - x^2 - 2xy)/y^2`.
    pub f_literal_rho: Option<f64>,
    pub density_matches: bool,
    pub literal_matches: bool,
}

/// At each sample point, evaluate the published reduced objective and `f`
/// under both `rho` conventions, and report which one reproduces it.
pub fn k2_convention_report(samples: &[(f64, f64)]) -> Result<Vec<ConventionSample>> {
    samples
        .iter()
        .map(|&(x, p)| {
            let display = k2_reduced(x, p)?;
            let y = 1.0 - x;
            let density_rho = rho_from(2, p, x).ok();
            let literal_rho = if y > 1e-9 {
                Some((p - x * x - 2.0 * x * y) / (y * y))
            } else {
                None
            };
            let f_density_rho = density_rho.map(|r| f_value(2, x, y, r));
            let f_literal_rho = literal_rho.map(|r| f_value(2, x, y, r));
            let close = |v: Option<f64>| {
                v.is_some_and(|v| {
                    let scale = display.abs().max(1e-12);
                    (v - display).abs() <= 1e-9 * scale
                })
            };
            Ok(ConventionSample {
                x,
                p,
                display,
                f_density_rho,
                f_literal_rho,
                density_matches: close(f_density_rho),
                literal_matches: close(f_literal_rho),
            })
        })
        .collect()
}

/// Build the layered construction at order `n`: `k - 1` independent sets of
/// size `floor(x n)`, complete to each other and to the remainder `Y`, with
/// a seeded random balanced bipartite graph of edge probability `2 rho`
/// inside `Y`. Bit-for-bit reproducible from the seed.
pub fn build_construction(k: u32, n: usize, x: f64, rho: f64, seed: u64) -> Result<Graph> {
    if k < 2 {
        return Err(Error::Domain(format!("construction needs k >= 2, got {k}")));
    }
    if !(0.0..0.5).contains(&rho) {
        return Err(Error::Infeasible(format!("rho = {rho} outside [0, 1/2)")));
    }
    let (part, y_start) = construction_layout(k, n, x)?;
    let mut g = Graph::new(n);
    // The k-1 parts are complete to everything outside themselves.
    for u in 0..y_start {
        let pu = u / part;
        for v in u + 1..n {
            if v >= y_start || v / part != pu {
                g.add_edge(u, v);
            }
        }
    }
    // Balanced bipartite block inside Y, decided per pair index.
    let y_size = n - y_start;
    let half = y_size.div_ceil(2);
    for u in y_start..y_start + half {
        for v in y_start + half..n {
            let pair = pair_id(n, u, v);
            if indexed_bernoulli(seed, pair, 2.0 * rho) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Part size and start of the `Y` block for the construction.
pub fn construction_layout(k: u32, n: usize, x: f64) -> Result<(usize, usize)> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [0, 1]")));
    }
    let part = (x * n as f64).floor() as usize;
    let y_start = part * (k as usize - 1);
    if y_start > n {
        return Err(Error::Infeasible(format!(
            "{} parts of size {part} exceed {n} vertices",
            k - 1
        )));
    }
    Ok((part, y_start))
}

fn pair_id(n: usize, u: usize, v: usize) -> u64 {
    let (i, j) = if u < v {
        (u as u64, v as u64)
    } else {
        (v as u64, u as u64)
    };
    let n = n as u64;
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Degrees inside the `Y` block, for regularity checks.
pub fn y_block_degrees(g: &Graph, y_start: usize) -> Vec<usize> {
    (y_start..g.n())
        .map(|u| g.neighbors(u).filter(|&v| v >= y_start).count())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn f_at_turan_point_is_lambda() {
        for k in 3..=10u32 {
            let x = ratio(1, k as i64);
            let zero = rat(0);
            let exact = f_value_exact(k, &x, &x, &zero);
            assert_eq!(exact, lambda_fn().eval(&rat(k as i64)).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn f_special_values() {
        assert_eq!(f_value(2, 0.5, 0.5, 0.0), 0.0);
        // y = 0 leaves only the pure x-part term.
        let k = 5u32;
        let b = k as i64 - 1;
        let expect =
            (falling(b, 5) as f64 / 10.0 + falling(b, 4) as f64 / 2.0 + falling(b, 3) as f64 / 2.0)
                * 0.3f64.powi(5);
        assert!((f_value(k, 0.3, 0.0, 0.7) - expect).abs() < 1e-15);
    }

    #[test]
    fn g_special_values() {
        for k in 2..=8u32 {
            let x = 1.0 / k as f64;
            assert!((g_value(k, x, x, 0.0) - (1.0 - x)).abs() < 1e-12, "k = {k}");
        }
        assert_eq!(g_value(2, 0.5, 0.5, 0.0), 0.5);
        assert_eq!(g_value(4, 0.0, 1.0, 0.37), 0.37);
    }

    #[test]
    fn exact_and_float_evaluations_agree() {
        let mut rng = SplitMix64::new(0xF00D);
        for _ in 0..1000 {
            let k = 2 + rng.next_below(7) as u32;
            let xr = ratio(rng.next_below(1000) as i64, 1000 * (k as i64 - 1).max(1));
            let yr = rat(1) - rat(k as i64 - 1) * &xr;
            let rr = ratio(rng.next_below(500) as i64, 1000);
            let xf = xr.to_f64().unwrap();
            let yf = yr.to_f64().unwrap();
            let rf = rr.to_f64().unwrap();
            let fe = f_value_exact(k, &xr, &yr, &rr).to_f64().unwrap();
            let ff = f_value(k, xf, yf, rf);
            let ge = g_value_exact(k, &xr, &yr, &rr).to_f64().unwrap();
            let gf = g_value(k, xf, yf, rf);
            assert!((fe - ff).abs() <= 1e-12 * fe.abs().max(1.0));
            assert!((ge - gf).abs() <= 1e-12 * ge.abs().max(1.0));
        }
    }

    #[test]
    fn rho_examples() {
        // Boundary at the Turán point.
        assert!(rho_from(3, 2.0 / 3.0, 1.0 / 3.0).unwrap().abs() < 1e-12);
        // x = 0 at k = 2 pushes all density into Y: infeasible above 1/2.
        let r = rho_from(2, 0.55, 0.0).unwrap();
        assert!((r - 0.55).abs() < 1e-12 && !rho_feasible(r));
        // Plain arithmetic from the density formula.
        let r = rho_from(2, 0.55, 0.4).unwrap();
        assert!((r - (0.55 - 0.48) / 0.36).abs() < 1e-12);
        // Degenerate partition.
        assert!(rho_from(3, 0.7, 0.5).is_err());
    }

    #[test]
    fn solver_turan_endpoints() {
        for k in [2u32, 3, 4] {
            let p = 1.0 - 1.0 / k as f64;
            let sol = fmin(k, p, 1e-12).unwrap();
            assert!(
                (sol.value - lambda_at(k)).abs() < 1e-9,
                "k = {k}: {}",
                sol.value
            );
        }
        let sol = fmin(2, 0.5, 1e-12).unwrap();
        assert!(sol.value.abs() < 1e-12);
    }

    #[test]
    fn solver_right_endpoints() {
        for k in [2u32, 3, 4] {
            let p = 1.0 - 1.0 / (k as f64 + 1.0);
            let sol = fmin(k, p, 1e-12).unwrap();
            assert!(
                (sol.value - lambda_at(k + 1)).abs() < 1e-9,
                "k = {k}: {}",
                sol.value
            );
        }
    }

    #[test]
    fn solver_interior_point_k2() {
        let sol = fmin(2, 0.55, 1e-12).unwrap();
        assert!(
            sol.point.x > 1.0 / 3.0 && sol.point.x < 0.5,
            "x = {}",
            sol.point.x
        );
        // The solution satisfies the density constraint.
        let g = g_value(2, sol.point.x, sol.point.y, sol.point.rho);
        assert!((g - 0.55).abs() < 1e-10);
        // And the value agrees with the published reduced objective there.
        let direct = k2_reduced(sol.point.x, 0.55).unwrap();
        assert!((sol.value - direct).abs() < 1e-12);
    }

    #[test]
    fn solver_rejects_bad_regime() {
        assert!(fmin(3, 0.5, 1e-9).is_err());
        assert!(fmin(1, 0.5, 1e-9).is_err());
    }

    #[test]
    fn fmin_nondecreasing_within_regime() {
        let mut last = -1.0;
        for i in 0..=20 {
            let p = 0.5 + i as f64 * (1.0 / 6.0) / 20.0;
            let v = fmin(2, p, 1e-10).unwrap().value;
            assert!(v >= last - 1e-9, "p = {p}");
            last = v;
        }
    }

    #[test]
    fn secant_hits_knots() {
        for k in 2..=6u32 {
            let p = 1.0 - 1.0 / k as f64;
            assert!(
                (secant_l(p).unwrap() - lambda_at(k)).abs() < 1e-15,
                "k = {k}"
            );
        }
    }

    #[test]
    fn curve_rows_and_knots() {
        let rows = fmin_curve(0.5, 0.875, 0.005, 1e-10).unwrap();
        // 76 uniform grid rows plus the knots 2/3, 5/6, 6/7 that the grid misses.
        assert_eq!(rows.len(), 79);
        let knots: Vec<f64> = rows.iter().filter(|r| r.knot).map(|r| r.p).collect();
        for k in [2u32, 3, 4, 5, 6, 7] {
            let p = 1.0 - 1.0 / k as f64;
            assert!(
                knots.iter().any(|&q| (q - p).abs() <= P_EPS),
                "knot 1-1/{k}"
            );
        }
        for r in rows.iter().filter(|r| r.knot) {
            assert_eq!(r.fmin, r.l);
            assert_eq!(r.gap, 0.0);
        }
        // Rows are sorted and p-distinct.
        for w in rows.windows(2) {
            assert!(w[0].p < w[1].p);
        }
    }

    #[test]
    fn k2_display_examples() {
        assert_eq!(k2_reduced(0.0, 0.61).unwrap(), 0.0);
        assert!(k2_reduced(1.0, 0.6).is_err());
        let v = k2_reduced(0.4, 0.55).unwrap();
        assert!(v > 0.0);
    }

    #[test]
    fn density_convention_reproduces_the_display() {
        let mut samples = Vec::new();
        let mut rng = SplitMix64::new(0xC0);
        for _ in 0..20 {
            let x = 0.05 + 0.85 * rng.next_f64();
            let p = 0.5 + (1.0 / 6.0) * rng.next_f64();
            samples.push((x, p));
        }
        let report = k2_convention_report(&samples).unwrap();
        // Exactly one convention matches everywhere: the one that solves
        // g = p. The published inline substitution carries a stray x^2 term.
        assert!(report.iter().all(|s| s.density_matches));
        assert!(report.iter().any(|s| !s.literal_matches));
    }

    #[test]
    fn construction_is_reproducible_and_layered() {
        let a = build_construction(3, 90, 1.0 / 3.0, 0.2, 11).unwrap();
        let b = build_construction(3, 90, 1.0 / 3.0, 0.2, 11).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, build_construction(3, 90, 1.0 / 3.0, 0.2, 12).unwrap());
        // Parts are independent and complete to the rest.
        let (part, y_start) = construction_layout(3, 90, 1.0 / 3.0).unwrap();
        assert_eq!((part, y_start), (30, 60));
        assert!(!a.has_edge(0, 1));
        assert!(a.has_edge(0, part));
        assert!(a.has_edge(0, y_start));
        // Y-halves are independent sets internally.
        assert!(!a.has_edge(y_start, y_start + 1));
    }

    #[test]
    fn construction_near_turan_has_near_lambda_density() {
        // Vanishing rho with balanced parts approximates the Turán graph.
        let n = 500;
        let g = build_construction(3, n, 1.0 / 3.0, 1e-9, 5).unwrap();
        let density = crate::c5::count_c5(&g) as f64 / (n as f64).powi(5);
        let target = lambda_at(3);
        assert!(
            (density - target).abs() < 0.05 * target,
            "density {density}"
        );
    }

    #[test]
    fn construction_edge_density_tracks_g() {
        let (k, n, x) = (3u32, 200usize, 0.3f64);
        let rho = rho_from(k, 0.7, x).unwrap();
        let y = 1.0 - (k as f64 - 1.0) * x;
        let target = g_value(k, x, y, rho);
        let tol = 3.0 / (n as f64).sqrt();
        for seed in 0..10u64 {
            let g = build_construction(k, n, x, rho, seed).unwrap();
            let density = 2.0 * g.edge_count() as f64 / (n as f64 * (n as f64 - 1.0));
            assert!(
                (density - target).abs() / target < tol,
                "seed {seed}: {density}"
            );
        }
    }

    #[test]
    fn construction_rejects_bad_parameters() {
        assert!(build_construction(3, 30, 0.6, 0.1, 0).is_err());
        assert!(build_construction(2, 30, 0.4, 0.5, 0).is_err());
        assert!(build_construction(1, 30, 0.4, 0.1, 0).is_err());
    }
}
