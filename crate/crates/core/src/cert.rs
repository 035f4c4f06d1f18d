//! Symbolic reconstruction and verification of the positivity certificate:
//! the scalar weights, the factor matrices, positivity of the factor, the
//! 34 per-class coefficients as rational functions of `k`, the tight /
//! non-tight split, and the null space of the rectangular factor.
//!
//! A failed check here is an error, never a warning: the artifact exists to
//! prove these identities, so any mismatch is the signal that matters.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::flagalg::{five_classes, CoeffTable, NUM_F5, NUM_X};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::par;
use crate::poly::{rat, ratio, PolyK, Rat, RatFnK};

/// Scalar weight on the edge-density constraint:
/// `(60k^3 - 240k^2 + 360k - 192) / k^3`.
pub fn alpha_fn() -> RatFnK {
    RatFnK::new(
        PolyK::from_ints(&[-192, 360, -240, 60]),
        PolyK::from_ints(&[0, 0, 0, 1]),
    )
}

/// The target minimum 5-cycle density at edge density `1 - 1/k`:
/// `1/10 - 1/(2k) + 1/k^2 - 1/k^3 + 2/(5k^4)`.
pub fn lambda_fn() -> RatFnK {
    let k = RatFnK::var();
    let k2 = &k * &k;
    let k3 = &k2 * &k;
    let k4 = &k3 * &k;
    let mut acc = RatFnK::from_rat(ratio(1, 10));
    acc = &acc - &(&RatFnK::from_rat(ratio(1, 2)) * &k.recip());
    acc = &acc + &k2.recip();
    acc = &acc - &k3.recip();
    &acc + &(&RatFnK::from_rat(ratio(2, 5)) * &k4.recip())
}

/// Edge density at the Turán point: `(k - 1) / k`.
pub fn p_fn() -> RatFnK {
    RatFnK::new(PolyK::from_ints(&[-1, 1]), PolyK::from_ints(&[0, 1]))
}

/// The symmetric positive-definite 3x3 factor, polynomial in `k`.
pub fn matrix_a() -> [[PolyK; 3]; 3] {
    let a11 = PolyK::from_ints(&[96, -96, 32]);
    let a13 = PolyK::from_ints(&[0, -16, 4]);
    let a22 = PolyK::from_ints(&[-96, 96, -8, -30, 10]);
    let a23 = PolyK::from_ints(&[96, -80, -4, 35, -10]);
    let a33 = PolyK::from_ints(&[-96, 64, 24, -40, 10]);
    [
        [a11, PolyK::zero(), a13.clone()],
        [PolyK::zero(), a22, a23.clone()],
        [a13, a23, a33],
    ]
}

/// The 3x6 projection factor, polynomial in `k`.
pub fn matrix_b() -> [[PolyK; 6]; 3] {
    let c = PolyK::constant;
    [
        [
            PolyK::from_ints(&[-1, 1]),
            c(rat(1)),
            PolyK::from_ints(&[-2, 1]),
            PolyK::zero(),
            PolyK::from_ints(&[-3, 1]),
            c(rat(-1)),
        ],
        [
            PolyK::zero(),
            c(rat(2)),
            PolyK::from_ints(&[-2, 1]),
            PolyK::zero(),
            PolyK::from_ints(&[-4, 2]),
            c(rat(-2)),
        ],
        [
            PolyK::zero(),
            PolyK::zero(),
            PolyK::from_ints(&[-1, 1]),
            c(rat(-1)),
            PolyK::from_ints(&[-2, 2]),
            c(rat(-2)),
        ],
    ]
}

/// The 6x6 positive-semidefinite matrix `(3 / 2k^4) * B^T A B`.
pub fn matrix_m() -> Vec<Vec<RatFnK>> {
    let a = matrix_a();
    let b = matrix_b();
    let scale = RatFnK::new(PolyK::from_ints(&[3]), PolyK::from_ints(&[0, 0, 0, 0, 2]));
    let mut m = vec![vec![RatFnK::zero(); NUM_X]; NUM_X];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let mut acc = PolyK::zero();
            for r in 0..3 {
                for s in 0..3 {
                    acc = &acc + &(&(&b[r][i] * &a[r][s]) * &b[s][j]);
                }
            }
            *slot = &scale * &RatFnK::from_poly(acc);
        }
    }
    debug_assert!((0..NUM_X).all(|i| (0..NUM_X).all(|j| m[i][j] == m[j][i])));
    m
}

/// `B^T A B` evaluated at an integer `k >= 3`, as exact integers.
pub fn n_matrix(k: i64) -> Result<[[i128; 6]; 6]> {
    if k < 3 {
        return Err(Error::Domain(format!("k = {k}, need k >= 3")));
    }
    let a = matrix_a();
    let b = matrix_b();
    let kq = rat(k);
    let aval: Vec<Vec<i128>> = a
        .iter()
        .map(|row| row.iter().map(|p| rat_to_i128(&p.eval(&kq))).collect())
        .collect();
    let bval: Vec<Vec<i128>> = b
        .iter()
        .map(|row| row.iter().map(|p| rat_to_i128(&p.eval(&kq))).collect())
        .collect();
    let mut n = [[0i128; 6]; 6];
    for (i, row) in n.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let mut acc = 0i128;
            for r in 0..3 {
                for s in 0..3 {
                    acc += bval[r][i] * aval[r][s] * bval[s][j];
                }
            }
            *slot = acc;
        }
    }
    Ok(n)
}

fn rat_to_i128(r: &Rat) -> i128 {
    assert!(r.is_integer());
    r.to_integer().to_i128().expect("fits in i128")
}

/// Leading principal minors of the 3x3 factor, as polynomials in `k`.
pub fn principal_minors() -> [PolyK; 3] {
    let a = matrix_a();
    let m1 = a[0][0].clone();
    let m2 = &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0]);
    let det = |r: [usize; 3], c: [usize; 3]| -> PolyK {
        let t = |i: usize, j: usize| &a[r[i]][c[j]];
        let mut acc = &(t(0, 0) * &(&(t(1, 1) * t(2, 2)) - &(t(1, 2) * t(2, 1)))).clone()
            - &(t(0, 1) * &(&(t(1, 0) * t(2, 2)) - &(t(1, 2) * t(2, 0))));
        acc = &acc + &(t(0, 2) * &(&(t(1, 0) * t(2, 1)) - &(t(1, 1) * t(2, 0))));
        acc
    };
    let m3 = det([0, 1, 2], [0, 1, 2]);
    [m1, m2, m3]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsdMode {
    /// Exact minor positivity at one integer `k >= 3`.
    AtK(i64),
    /// Nonnegative-coefficient certificate after the shift `k = t + 3`,
    /// which proves positivity for every real `k >= 3` when it applies.
    Shift,
    /// Exact minor positivity for every integer `3 <= k <= kmax`.
    Range { kmax: i64 },
}

#[derive(Clone, Debug)]
pub enum PsdOutcome {
    AtK {
        k: i64,
        minors: Vec<Rat>,
        positive: bool,
    },
    Shift {
        verdicts: [ShiftVerdict; 3],
        proven: bool,
    },
    Range {
        from: i64,
        to: i64,
        all_positive: bool,
        first_failure: Option<i64>,
    },
}

impl PsdOutcome {
    pub fn is_positive(&self) -> bool {
        match self {
            PsdOutcome::AtK { positive, .. } => *positive,
            PsdOutcome::Shift { proven, .. } => *proven,
            PsdOutcome::Range { all_positive, .. } => *all_positive,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ShiftVerdict {
    pub coeffs_nonnegative: bool,
    pub constant_positive: bool,
}

impl ShiftVerdict {
    pub fn proven(&self) -> bool {
        self.coeffs_nonnegative && self.constant_positive
    }
}

/// Positivity of the 3x3 factor by leading principal minors.
pub fn psd_check_a(mode: PsdMode) -> Result<PsdOutcome> {
    let minors = principal_minors();
    match mode {
        PsdMode::AtK(k) => {
            if k < 3 {
                return Err(Error::Domain(format!("k = {k}, need k >= 3")));
            }
            let kq = rat(k);
            let vals: Vec<Rat> = minors.iter().map(|m| m.eval(&kq)).collect();
            let positive = vals.iter().all(|v| v.is_positive());
            Ok(PsdOutcome::AtK {
                k,
                minors: vals,
                positive,
            })
        }
        PsdMode::Shift => {
            let verdicts: Vec<ShiftVerdict> = minors
                .iter()
                .map(|m| {
                    let shifted = m.shift_variable(3);
                    ShiftVerdict {
                        coeffs_nonnegative: shifted.all_coeffs_nonnegative(),
                        constant_positive: shifted.coeff(0).is_positive(),
                    }
                })
                .collect();
            let verdicts: [ShiftVerdict; 3] = [verdicts[0], verdicts[1], verdicts[2]];
            let proven = verdicts.iter().all(|v| v.proven());
            Ok(PsdOutcome::Shift { verdicts, proven })
        }
        PsdMode::Range { kmax } => {
            if kmax < 3 {
                return Err(Error::Domain(format!("kmax = {kmax}, need kmax >= 3")));
            }
            let ks: Vec<i64> = (3..=kmax).collect();
            let bad = par::map_slice(&ks, |&k| {
                let kq = rat(k);
                minors.iter().any(|m| !m.eval(&kq).is_positive())
            });
            let first_failure = ks.iter().zip(&bad).find(|(_, &b)| b).map(|(&k, _)| k);
            Ok(PsdOutcome::Range {
                from: 3,
                to: kmax,
                all_positive: first_failure.is_none(),
                first_failure,
            })
        }
    }
}

/// The 34 coefficients `c_F` as rational functions of `k`:
/// `c_F = c_F^opt + alpha * p - alpha * p(K2, F) - c_F^M`, where `c_F^M`
/// contracts the matrix against the product table, doubling off-diagonal
/// rows.
pub fn cf_symbolic(table: &CoeffTable) -> Vec<RatFnK> {
    let alpha = alpha_fn();
    let p = p_fn();
    let alpha_p = &alpha * &p;
    let m = matrix_m();
    let classes = five_classes();
    (0..NUM_F5)
        .map(|f| {
            let copt = RatFnK::from_rat(rat(classes[f].spanning_c5_count() as i64));
            let pk2 = RatFnK::from_rat(ratio(classes[f].edge_count() as i64, 10));
            let mut cfm = RatFnK::zero();
            for i in 1..=NUM_X {
                for j in i..=NUM_X {
                    let coeff = table.value(i, j, f);
                    if coeff.is_zero() {
                        continue;
                    }
                    let mult = if i == j { rat(1) } else { rat(2) };
                    cfm = &cfm + &(&m[i - 1][j - 1] * &RatFnK::from_rat(mult * coeff));
                }
            }
            let mut cf = &copt + &alpha_p;
            cf = &cf - &(&alpha * &pk2);
            &cf - &cfm
        })
        .collect()
}

/// `c_F^M` at a fixed integer `k`, per class in internal order.
pub fn cfm_at_k(table: &CoeffTable, k: i64) -> Result<Vec<Rat>> {
    let n = n_matrix(k)?;
    // c_F^M = sum mult * (3 N_ij / 2k^4) * (scaled_ij / 30) = S_F / (20 k^4).
    let den = rat(20) * rat(k).pow(4);
    Ok((0..NUM_F5)
        .map(|f| {
            let mut acc: i128 = 0;
            for i in 1..=NUM_X {
                for j in i..=NUM_X {
                    let mult = if i == j { 1 } else { 2 };
                    acc += mult * n[i - 1][j - 1] * table.scaled(i, j, f) as i128;
                }
            }
            Rat::new(acc.into(), 1.into()) / &den
        })
        .collect())
}

/// Everything `verify_certificate` establishes, kept exact.
#[derive(Clone, Debug)]
pub struct CertReport {
    /// Per-class coefficient as a rational function of `k`, internal order.
    pub cf: Vec<RatFnK>,
    /// The `k^4` coefficient of `5k^4 c_F` per class; all other
    /// coefficients agree across classes.
    pub m_values: Vec<i64>,
    /// Classes with the minimal coefficient family (m = 60).
    pub tight: Vec<usize>,
    /// Classes strictly above the minimum, with their constant excess
    /// `c_F - 120 lambda`.
    pub nontight: Vec<(usize, Rat)>,
    /// `min_F c_F` equals `120 lambda` as a rational-function identity.
    pub min_cf_equals_120_lambda: bool,
    /// Positivity of the factor via the shift certificate.
    pub psd_shift: [ShiftVerdict; 3],
    pub psd_shift_proven: bool,
    /// Null space of the rectangular factor matches the expected basis.
    pub kernel_ok: bool,
}

const EXPECTED_LOWER_COEFFS: [i64; 4] = [240, -600, 600, -300];

/// Verify the whole certificate symbolically. Any structural failure is an
/// error carrying the offending class and polynomial.
pub fn verify_certificate(table: &CoeffTable) -> Result<CertReport> {
    let cf = cf_symbolic(table);
    let five_k4 = RatFnK::from_poly(PolyK::from_ints(&[0, 0, 0, 0, 5]));
    let lambda_120 = &RatFnK::from_rat(rat(120)) * &lambda_fn();

    let mut m_values = Vec::with_capacity(NUM_F5);
    for (f, c) in cf.iter().enumerate() {
        let scaled = &five_k4 * c;
        let poly = scaled.as_poly().ok_or_else(|| {
            Error::Certificate(format!(
                "5k^4 c_F is not a polynomial for class {f}: {scaled}"
            ))
        })?;
        if poly.degree() != Some(4) {
            return Err(Error::Certificate(format!(
                "5k^4 c_F has degree {:?} for class {f}: {poly}",
                poly.degree()
            )));
        }
        for (pow, want) in EXPECTED_LOWER_COEFFS.iter().enumerate() {
            if poly.coeff(pow) != rat(*want) {
                return Err(Error::Certificate(format!(
                    "class {f}: coefficient of k^{pow} is {}, expected {want}",
                    poly.coeff(pow)
                )));
            }
        }
        let lead = poly.coeff(4);
        if !lead.is_integer() {
            return Err(Error::Certificate(format!(
                "class {f}: k^4 coefficient {lead} is not an integer"
            )));
        }
        m_values.push(lead.to_integer().to_i64().expect("small coefficient"));
    }

    let min_m = *m_values.iter().min().expect("34 classes");
    if min_m != 60 {
        return Err(Error::Certificate(format!(
            "minimal k^4 coefficient is {min_m}, expected 60"
        )));
    }
    let tight: Vec<usize> = (0..NUM_F5).filter(|&f| m_values[f] == 60).collect();
    let mut nontight = Vec::new();
    for f in 0..NUM_F5 {
        if m_values[f] == 60 {
            // Tight class: c_F - 120 lambda must vanish identically.
            if !(&cf[f] - &lambda_120).is_zero() {
                return Err(Error::Certificate(format!(
                    "class {f} has m = 60 but c_F != 120 lambda"
                )));
            }
        } else {
            let excess = &cf[f] - &lambda_120;
            let value = excess.as_constant().ok_or_else(|| {
                Error::Certificate(format!("excess of class {f} is not constant: {excess}"))
            })?;
            if value.is_negative() {
                return Err(Error::Certificate(format!(
                    "negative excess for class {f}: {value}"
                )));
            }
            if value != ratio(m_values[f] - 60, 5) {
                return Err(Error::Certificate(format!(
                    "excess of class {f} is {value}, expected (m - 60)/5"
                )));
            }
            nontight.push((f, value));
        }
    }
    if tight.len() != 18 || nontight.len() != 16 {
        return Err(Error::Certificate(format!(
            "tight/non-tight split is {}/{}, expected 18/16",
            tight.len(),
            nontight.len()
        )));
    }

    let psd = psd_check_a(PsdMode::Shift)?;
    let (psd_shift, psd_shift_proven) = match psd {
        PsdOutcome::Shift { verdicts, proven } => (verdicts, proven),
        _ => unreachable!(),
    };

    let kernel_ok = kernel_rref()? == expected_kernel();
    if !kernel_ok {
        return Err(Error::Certificate(
            "null-space basis differs from the expected one".into(),
        ));
    }

    Ok(CertReport {
        cf,
        m_values,
        tight,
        nontight,
        min_cf_equals_120_lambda: true,
        psd_shift,
        psd_shift_proven,
        kernel_ok,
    })
}

/// Lower bound `(1/120) min_F c_F(k)` at an integer `k >= 3`; equals
/// `lambda(k)` whenever the certificate verifies.
pub fn lower_bound(table: &CoeffTable, k: i64) -> Result<Rat> {
    if k < 3 {
        return Err(Error::Domain(format!("k = {k}, need k >= 3")));
    }
    if let PsdOutcome::AtK {
        positive: false,
        minors,
        ..
    } = psd_check_a(PsdMode::AtK(k))?
    {
        return Err(Error::Certificate(format!(
            "factor is not positive definite at k = {k}: minors {minors:?}"
        )));
    }
    let kq = rat(k);
    let min = cf_symbolic(table)
        .iter()
        .map(|c| c.eval(&kq).expect("k >= 3 avoids every pole"))
        .min()
        .expect("34 classes");
    Ok(min / rat(120))
}

/// Row-reduced basis of the null space of the 3x6 factor over the field of
/// rational functions in `k`.
pub fn kernel_rref() -> Result<Vec<Vec<RatFnK>>> {
    let b = matrix_b();
    let mut rows: Vec<Vec<RatFnK>> = b
        .iter()
        .map(|row| row.iter().map(|p| RatFnK::from_poly(p.clone())).collect())
        .collect();
    let pivots = rref_in_place(&mut rows);
    if pivots.len() != 3 {
        return Err(Error::Certificate(format!(
            "rectangular factor has rank {}, expected 3",
            pivots.len()
        )));
    }
    let free: Vec<usize> = (0..6).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec<RatFnK>> = Vec::with_capacity(free.len());
    for &f in &free {
        let mut z = vec![RatFnK::zero(); 6];
        z[f] = RatFnK::one();
        for (r, &p) in pivots.iter().enumerate() {
            z[p] = -&rows[r][f];
        }
        basis.push(z);
    }
    let _ = rref_in_place(&mut basis);
    Ok(basis)
}

/// The expected null-space basis in row-reduced form.
pub fn expected_kernel() -> Vec<Vec<RatFnK>> {
    let p = |ints: &[i64]| RatFnK::from_poly(PolyK::from_ints(ints));
    let half = |ints: &[i64]| RatFnK::from_poly(PolyK::from_ints(ints).scale(&ratio(1, 2)));
    vec![
        vec![
            p(&[1]),
            p(&[0]),
            p(&[0]),
            p(&[-2, 2]),
            p(&[-1, 1]),
            p(&[2, -3, 1]),
        ],
        vec![p(&[0]), p(&[1]), p(&[0]), p(&[-2]), p(&[0]), p(&[1])],
        vec![
            p(&[0]),
            p(&[0]),
            p(&[1]),
            p(&[-1, 1]),
            half(&[-2, 1]),
            half(&[2, -3, 1]),
        ],
    ]
}

/// Gauss-Jordan elimination over rational functions; returns pivot columns.
#[allow(clippy::needless_range_loop)]
fn rref_in_place(rows: &mut [Vec<RatFnK>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].recip();
        for c in col..ncols {
            rows[rank][c] = &rows[rank][c] * &inv;
        }
        for r in 0..nrows {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    pivots
}

/// The non-tight classes as graph6 lines with their constant excesses,
/// internal canonical order.
pub fn nontight_export(report: &CertReport) -> Vec<(String, Rat)> {
    let classes = five_classes();
    report
        .nontight
        .iter()
        .map(|(f, excess)| {
            let g: Graph = (&classes[*f]).into();
            (write_graph6(&g), excess.clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagalg::product_table;

    #[test]
    fn scalar_functions_at_small_k() {
        assert_eq!(alpha_fn().eval(&rat(3)).unwrap(), ratio(116, 9));
        assert_eq!(lambda_fn().eval(&rat(3)).unwrap(), ratio(1, 81));
        assert_eq!(lambda_fn().eval(&rat(4)).unwrap(), ratio(3, 128));
        assert_eq!(p_fn().eval(&rat(3)).unwrap(), ratio(2, 3));
    }

    #[test]
    fn lambda_tends_to_one_tenth() {
        let l = lambda_fn();
        assert_eq!(l.num().degree(), l.den().degree());
        assert_eq!(
            l.num().leading().unwrap() / l.den().leading().unwrap(),
            ratio(1, 10)
        );
    }

    #[test]
    fn factor_entries_at_k3() {
        let a = matrix_a();
        assert_eq!(a[0][0].eval(&rat(3)), rat(96));
        assert_eq!(a[1][1].eval(&rat(3)), rat(120));
        let b = matrix_b();
        assert_eq!(b[0][0], PolyK::from_ints(&[-1, 1]));
        assert_eq!(b[0][5], PolyK::from_ints(&[-1]));
    }

    #[test]
    fn m_is_symmetric() {
        let m = matrix_m();
        for (i, row) in m.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                assert_eq!(*entry, m[j][i]);
            }
        }
    }

    #[test]
    fn minors_positive_at_k3_and_shifted() {
        match psd_check_a(PsdMode::AtK(3)).unwrap() {
            PsdOutcome::AtK {
                minors, positive, ..
            } => {
                assert!(positive);
                assert_eq!(minors[0], rat(96));
                assert_eq!(minors[1], rat(96 * 120));
            }
            _ => unreachable!(),
        }
        // First minor shifted: 32t^2 + 96t + 96.
        assert_eq!(
            principal_minors()[0].shift_variable(3),
            PolyK::from_ints(&[96, 96, 32])
        );
        assert!(psd_check_a(PsdMode::AtK(2)).is_err());
    }

    #[test]
    fn range_sweep_small() {
        match psd_check_a(PsdMode::Range { kmax: 50 }).unwrap() {
            PsdOutcome::Range {
                all_positive,
                first_failure,
                ..
            } => {
                assert!(all_positive);
                assert_eq!(first_failure, None);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn certificate_verifies() {
        let table = product_table();
        let report = verify_certificate(&table).unwrap();
        assert_eq!(report.tight.len(), 18);
        assert_eq!(report.nontight.len(), 16);
        assert!(report.min_cf_equals_120_lambda);
        assert!(report.kernel_ok);

        let mut ms: Vec<i64> = report
            .m_values
            .iter()
            .copied()
            .filter(|&m| m != 60)
            .collect();
        ms.sort();
        assert_eq!(
            ms,
            vec![61, 61, 62, 62, 62, 62, 64, 64, 64, 64, 65, 66, 66, 66, 66, 68]
        );
    }

    #[test]
    fn tight_family_polynomial() {
        // 5k^4 c_F for the empty class: 60k^4 - 300k^3 + 600k^2 - 600k + 240.
        let table = product_table();
        let cf = cf_symbolic(&table);
        let five_k4 = RatFnK::from_poly(PolyK::from_ints(&[0, 0, 0, 0, 5]));
        let empty = &five_k4 * &cf[0];
        assert_eq!(
            empty.as_poly().unwrap(),
            &PolyK::from_ints(&[240, -600, 600, -300, 60])
        );
        // The complete graph sits in the same family.
        let k5 = &five_k4 * &cf[NUM_F5 - 1];
        assert_eq!(k5.as_poly().unwrap(), empty.as_poly().unwrap());
        // Any tight class evaluates to 120 lambda(3) = 40/27 at k = 3.
        assert_eq!(cf[0].eval(&rat(3)).unwrap(), ratio(40, 27));
    }

    #[test]
    fn kernel_matches_expected_basis() {
        let kernel = kernel_rref().unwrap();
        assert_eq!(kernel, expected_kernel());
        // Every row is annihilated by the factor, symbolically.
        let b = matrix_b();
        for z in &kernel {
            for row in &b {
                let mut acc = RatFnK::zero();
                for (p, zc) in row.iter().zip(z) {
                    acc = &acc + &(&RatFnK::from_poly(p.clone()) * zc);
                }
                assert!(acc.is_zero());
            }
        }
        // First row at k = 3: (1, 0, 0, 4, 2, 2).
        let at3: Vec<Rat> = kernel[0].iter().map(|e| e.eval(&rat(3)).unwrap()).collect();
        assert_eq!(at3, vec![rat(1), rat(0), rat(0), rat(4), rat(2), rat(2)]);
    }

    #[test]
    fn lower_bound_matches_lambda() {
        let table = product_table();
        assert_eq!(lower_bound(&table, 3).unwrap(), ratio(1, 81));
        assert_eq!(
            lower_bound(&table, 4).unwrap(),
            lambda_fn().eval(&rat(4)).unwrap()
        );
        assert!(lower_bound(&table, 2).is_err());
    }

    #[test]
    fn nontight_export_shape() {
        let table = product_table();
        let report = verify_certificate(&table).unwrap();
        let lines = nontight_export(&report);
        assert_eq!(lines.len(), 16);
        for (_, excess) in &lines {
            assert!(excess.is_positive());
        }
        // Edge counts of the computed set, frozen from the export itself.
        let mut edges: Vec<u64> = lines
            .iter()
            .map(|(g6, _)| crate::graph6::parse_graph6(g6).unwrap().edge_count())
            .collect();
        edges.sort();
        assert_eq!(edges, vec![1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 6]);
        // The complete graph is tight, so it is not exported.
        let k5: Graph = (&crate::small::SmallGraph::complete(5).unwrap()).into();
        let k5_g6 = write_graph6(&k5);
        assert!(lines.iter().all(|(g6, _)| g6 != &k5_g6));
    }
}
