//! Exact arithmetic in the cyclotomic field Q(ζ₂₄).
//!
//! Elements are stored in the power basis ζ⁰..ζ⁷ modulo the 24th
//! cyclotomic polynomial Φ₂₄(x) = x⁸ − x⁴ + 1, with arbitrary-precision
//! rational coefficients. This single field contains every scalar the
//! necklace-braid representations need: ±1, ±i, e^{±iπ/3}, e^{±2πi/3},
//! √2, and all (2n)-th roots of unity for n ≤ 4.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ScalarError;

/// Degree of Q(ζ₂₄) over Q, i.e. φ(24).
pub const DEGREE: usize = 8;

/// An element of Q(ζ₂₄), canonical in the power basis mod Φ₂₄.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    coeffs: [BigRational; DEGREE],
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self {
            coeffs: std::array::from_fn(|_| BigRational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut c = Self::zero();
        c.coeffs[0] = r;
        c
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    /// Builds n/d as an exact field element.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn from_coeffs(coeffs: [BigRational; DEGREE]) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational; DEGREE] {
        &self.coeffs
    }

    /// ζ₂₄^k for any integer k, reduced to the canonical basis.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(24) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        Self::from_poly(poly)
    }

    /// The primitive root ζ_order^power, for `order` dividing 24.
    pub fn root_of_unity(order: u32, power: i64) -> Result<Self, ScalarError> {
        if order == 0 || 24 % order != 0 {
            return Err(ScalarError::InvalidOrder(order));
        }
        Ok(Self::zeta_pow((24 / order as i64) * power))
    }

    /// Reduces an arbitrary-degree polynomial in ζ via ζ⁸ = ζ⁴ − 1.
    fn from_poly(mut poly: Vec<BigRational>) -> Self {
        for k in (DEGREE..poly.len()).rev() {
            let c = std::mem::replace(&mut poly[k], BigRational::zero());
            if !c.is_zero() {
                poly[k - 4] += &c;
                poly[k - 8] -= &c;
            }
        }
        let mut coeffs: [BigRational; DEGREE] = std::array::from_fn(|_| BigRational::zero());
        for (i, c) in poly.into_iter().take(DEGREE).enumerate() {
            coeffs[i] = c;
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True when the element lies in Q (only the ζ⁰ coordinate is nonzero).
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.coeffs[0]
    }

    /// Complex conjugation, i.e. the field automorphism ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        let mut acc = Self::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut term = Self::zeta_pow(-(k as i64));
                for t in term.coeffs.iter_mut() {
                    *t *= c;
                }
                acc = &acc + &term;
            }
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// against Φ₂₄.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // r0 = Φ₂₄, r1 = self; t tracks the Bézout coefficient of self.
        let mut r0 = phi24();
        let mut r1: Vec<BigRational> = self.coeffs.to_vec();
        trim(&mut r1);
        let mut t0: Vec<BigRational> = vec![];
        let mut t1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = std::mem::take(&mut r1);
            r1 = r;
            t0 = std::mem::take(&mut t1);
            t1 = t2;
        }
        // Φ₂₄ is irreducible, so the gcd is a nonzero constant.
        debug_assert_eq!(r0.len(), 1);
        let g = r0[0].clone();
        let inv_coeffs: Vec<BigRational> = t0.into_iter().map(|c| c / &g).collect();
        Ok(Self::from_poly(inv_coeffs))
    }

    /// Integer power, negative exponents via `inv`.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Numeric embedding ζ₂₄ ↦ e^{iπ/12}.
    pub fn embed(&self) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let x = c.to_f64().unwrap_or(f64::NAN);
                z += x * Complex64::from_polar(1.0, std::f64::consts::PI * k as f64 / 12.0);
            }
        }
        z
    }

    /// Serialized form: eight rational strings.
    pub fn to_strings(&self) -> [String; DEGREE] {
        std::array::from_fn(|i| format_rational(&self.coeffs[i]))
    }

    pub fn from_strings(strings: &[String]) -> Result<Self, ScalarError> {
        if strings.len() != DEGREE {
            return Err(ScalarError::Parse(format!(
                "expected {DEGREE} coefficients, got {}",
                strings.len()
            )));
        }
        let mut coeffs: [BigRational; DEGREE] = std::array::from_fn(|_| BigRational::zero());
        for (i, s) in strings.iter().enumerate() {
            coeffs[i] = parse_rational(s)?;
        }
        Ok(Self { coeffs })
    }
}

/// Formats a rational as "p" or "p/q".
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses "p" or "p/q" with q > 0 after normalization.
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let bad = |_| ScalarError::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.trim().parse().map_err(bad)?;
            Ok(BigRational::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(bad)?;
            let q: BigInt = q.trim().parse().map_err(bad)?;
            if q.is_zero() {
                return Err(ScalarError::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

fn phi24() -> Vec<BigRational> {
    let mut p = vec![BigRational::zero(); 9];
    p[0] = BigRational::one();
    p[4] = -BigRational::one();
    p[8] = BigRational::one();
    p
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    trim(&mut out);
    out
}

/// Division with remainder; `b` must be nonempty with nonzero lead.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    let lead = b.last().expect("nonzero divisor").clone();
    while rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let f = rem.last().expect("trimmed") / &lead;
        quot[k] = f.clone();
        for (i, bi) in b.iter().enumerate() {
            let v = bi * &f;
            rem[k + i] -= v;
        }
        trim(&mut rem);
    }
    (quot, rem)
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            coeffs: std::array::from_fn(|i| -self.coeffs[i].clone()),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let mut out = vec![BigRational::zero(); 2 * DEGREE - 1];
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in rhs.coeffs.iter().enumerate() {
                if !cj.is_zero() {
                    out[i + j] += ci * cj;
                }
            }
        }
        Cyclotomic::from_poly(out)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = format_rational(&c.abs());
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if k == 0 {
                write!(f, "{coeff}")?;
            } else if coeff == "1" {
                write!(f, "ζ^{k}")?;
            } else {
                write!(f, "{coeff}·ζ^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
