//! Exact arithmetic in the parameter `k`: arbitrary-precision rationals,
//! dense polynomials, and reduced ratios of polynomials.
//!
//! Everything the certificate check does happens in this tower, so all
//! comparisons downstream are exact equalities, never tolerances.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, reduced with positive denominator.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// f64 value of a rational, for reporting.
pub fn rat_to_f64(r: &Rat) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Dense polynomial in `k` with rational coefficients, ascending powers.
///
/// Invariant: no trailing zero coefficient, so the zero polynomial is the
/// empty coefficient list and `degree()` returns `None` for it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyK {
    coeffs: Vec<Rat>,
}

impl PolyK {
    pub fn zero() -> Self {
        PolyK { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyK::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = PolyK { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial `k`.
    pub fn var() -> Self {
        PolyK {
            coeffs: vec![rat(0), rat(1)],
        }
    }

    /// Build from integer coefficients, ascending powers.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        let mut p = PolyK {
            coeffs: coeffs.iter().map(|&c| rat(c)).collect(),
        };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = PolyK { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            let _ = self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> Rat {
        self.coeffs.get(power).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rat) -> PolyK {
        if s.is_zero() {
            return PolyK::zero();
        }
        PolyK {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Substitute `k = t + shift`, returning the polynomial in `t`.
    pub fn shift_variable(&self, shift: i64) -> PolyK {
        let mut acc = PolyK::zero();
        let t_plus = PolyK::from_ints(&[shift, 1]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &t_plus) + &PolyK::constant(c.clone());
        }
        acc
    }

    /// Euclidean division, panics on division by zero.
    pub fn div_rem(&self, d: &PolyK) -> (PolyK, PolyK) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let dlead = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![rat(0); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading().unwrap() / &dlead;
            let shift = rd - dd;
            quot[shift] = f.clone();
            // rem -= f * k^shift * d
            let mut new = rem.coeffs.clone();
            for (i, c) in d.coeffs.iter().enumerate() {
                new[i + shift] = &new[i + shift] - &(c * &f);
            }
            rem = PolyK::from_coeffs(new);
        }
        (PolyK::from_coeffs(quot), rem)
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &PolyK) -> PolyK {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn into_monic(self) -> PolyK {
        match self.leading() {
            None => self,
            Some(l) => {
                let inv = rat(1) / l;
                self.scale(&inv)
            }
        }
    }

    /// True when every coefficient is a nonnegative rational.
    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &PolyK {
    type Output = PolyK;
    fn add(self, rhs: &PolyK) -> PolyK {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        PolyK::from_coeffs(out)
    }
}

impl Sub for &PolyK {
    type Output = PolyK;
    fn sub(self, rhs: &PolyK) -> PolyK {
        self + &(-rhs)
    }
}

impl Neg for &PolyK {
    type Output = PolyK;
    fn neg(self) -> PolyK {
        PolyK {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PolyK {
    type Output = PolyK;
    fn mul(self, rhs: &PolyK) -> PolyK {
        if self.is_zero() || rhs.is_zero() {
            return PolyK::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PolyK::from_coeffs(out)
    }
}

impl fmt::Display for PolyK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (pow, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && pow > 0;
            if !unit_coeff {
                if !mag.is_integer() && pow > 0 {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
            }
            match pow {
                0 => {}
                1 => write!(f, "k")?,
                _ => write!(f, "k^{pow}")?,
            }
        }
        Ok(())
    }
}

/// Reduced ratio of two polynomials in `k`.
///
/// Invariants: the denominator is nonzero and monic (hence positive leading
/// coefficient) and shares no common factor with the numerator, so equal
/// rational functions compare equal structurally.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFnK {
    num: PolyK,
    den: PolyK,
}

impl RatFnK {
    pub fn new(num: PolyK, den: PolyK) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFnK {
                num,
                den: PolyK::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut n, r1) = num.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (d, r2) = den.div_rem(&g);
        debug_assert!(r2.is_zero());
        let lead = d.leading().unwrap().clone();
        let d = d.scale(&(rat(1) / &lead));
        n = n.scale(&(rat(1) / &lead));
        RatFnK { num: n, den: d }
    }

    pub fn zero() -> Self {
        RatFnK {
            num: PolyK::zero(),
            den: PolyK::one(),
        }
    }

    pub fn one() -> Self {
        RatFnK::from_poly(PolyK::one())
    }

    pub fn from_poly(p: PolyK) -> Self {
        RatFnK {
            num: p,
            den: PolyK::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        RatFnK::from_poly(PolyK::constant(c))
    }

    /// The variable `k`.
    pub fn var() -> Self {
        RatFnK::from_poly(PolyK::var())
    }

    pub fn num(&self) -> &PolyK {
        &self.num
    }

    pub fn den(&self) -> &PolyK {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The underlying polynomial when the denominator is 1.
    pub fn as_poly(&self) -> Option<&PolyK> {
        (self.den == PolyK::one()).then_some(&self.num)
    }

    /// The constant value when this is a degree-0 rational function.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(rat(0));
        }
        (self.den == PolyK::one() && self.num.degree() == Some(0)).then(|| self.num.coeff(0))
    }

    /// Evaluate at a rational point; `None` if the denominator vanishes there.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn recip(&self) -> RatFnK {
        assert!(!self.is_zero(), "reciprocal of zero rational function");
        RatFnK::new(self.den.clone(), self.num.clone())
    }
}

impl Add for &RatFnK {
    type Output = RatFnK;
    fn add(self, rhs: &RatFnK) -> RatFnK {
        RatFnK::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFnK {
    type Output = RatFnK;
    fn sub(self, rhs: &RatFnK) -> RatFnK {
        self + &(-rhs)
    }
}

impl Neg for &RatFnK {
    type Output = RatFnK;
    fn neg(self) -> RatFnK {
        RatFnK {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFnK {
    type Output = RatFnK;
    fn mul(self, rhs: &RatFnK) -> RatFnK {
        RatFnK::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for RatFnK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == PolyK::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
