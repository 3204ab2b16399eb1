//! The scalar abstraction shared by every other module: a tagged value
//! that is either an exact element of Q(ζ₂₄) or an approximate complex
//! double. Arithmetic never mixes the two variants implicitly; the only
//! bridge is the explicit embedding `Scalar::embed` / `Scalar::to_approx`.

pub mod cyclotomic;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use serde::de::Error as DeError;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use cyclotomic::{format_rational, parse_rational, Cyclotomic};

/// Guard band for ordering real values through the numeric embedding:
/// exact values closer than this (but not exactly equal) refuse to order.
pub const REAL_CMP_GUARD: f64 = 1e-12;

/// Default comparison tolerance in approximate mode.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("order {0} does not divide 24")]
    InvalidOrder(u32),
    #[error("operand is not real")]
    NotReal,
    #[error("values within the {REAL_CMP_GUARD:e} guard band; refusing to order")]
    PrecisionLoss,
    #[error("{0}")]
    Parse(String),
}

/// Which arithmetic a value (or matrix, or representation) lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Approx,
}

/// A field scalar: exact cyclotomic or approximate complex double.
#[derive(Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Scalar {
    Exact(Cyclotomic),
    Approx(Complex64),
}

impl Scalar {
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Approx(_) => Mode::Approx,
        }
    }

    pub fn zero(mode: Mode) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(Cyclotomic::zero()),
            Mode::Approx => Scalar::Approx(Complex64::new(0.0, 0.0)),
        }
    }

    pub fn one(mode: Mode) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(Cyclotomic::one()),
            Mode::Approx => Scalar::Approx(Complex64::new(1.0, 0.0)),
        }
    }

    pub fn integer(mode: Mode, n: i64) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(Cyclotomic::from_integer(n)),
            Mode::Approx => Scalar::Approx(Complex64::new(n as f64, 0.0)),
        }
    }

    pub fn ratio(mode: Mode, n: i64, d: i64) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(Cyclotomic::from_ratio(n, d)),
            Mode::Approx => Scalar::Approx(Complex64::new(n as f64 / d as f64, 0.0)),
        }
    }

    pub fn from_rational(mode: Mode, r: BigRational) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(Cyclotomic::from_rational(r)),
            Mode::Approx => Scalar::Approx(Complex64::new(
                num_traits::ToPrimitive::to_f64(&r).unwrap_or(f64::NAN),
                0.0,
            )),
        }
    }

    /// ζ_order^power in the requested mode; `order` must divide 24 in
    /// exact mode (any order works in approx mode).
    pub fn root_of_unity(mode: Mode, order: u32, power: i64) -> Result<Self, ScalarError> {
        match mode {
            Mode::Exact => Ok(Scalar::Exact(Cyclotomic::root_of_unity(order, power)?)),
            Mode::Approx => {
                if order == 0 {
                    return Err(ScalarError::InvalidOrder(order));
                }
                let angle = 2.0 * std::f64::consts::PI * power as f64 / order as f64;
                Ok(Scalar::Approx(Complex64::from_polar(1.0, angle)))
            }
        }
    }

    pub fn complex(re: f64, im: f64) -> Self {
        Scalar::Approx(Complex64::new(re, im))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(c) => c.is_zero(),
            Scalar::Approx(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        match self {
            Scalar::Exact(c) => c.is_zero(),
            Scalar::Approx(z) => z.norm() <= tol,
        }
    }

    /// Equality that is exact in exact mode and toleranced in approx mode.
    pub fn eq_tol(&self, other: &Scalar, tol: f64) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            (Scalar::Approx(a), Scalar::Approx(b)) => (a - b).norm() <= tol,
            _ => panic!("mixed exact/approx scalar comparison"),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Exact(c) => Ok(Scalar::Exact(c.inv()?)),
            Scalar::Approx(z) => {
                if z.re == 0.0 && z.im == 0.0 {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Approx(z.inv()))
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Exact(c) => Scalar::Exact(c.conj()),
            Scalar::Approx(z) => Scalar::Approx(z.conj()),
        }
    }

    /// |self|² as a scalar of the same variant (always real).
    pub fn abs_sq(&self) -> Scalar {
        match self {
            Scalar::Exact(c) => Scalar::Exact(&c.conj() * c),
            Scalar::Approx(z) => Scalar::Approx(Complex64::new(z.norm_sqr(), 0.0)),
        }
    }

    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Exact(c) => Ok(Scalar::Exact(c.pow(e)?)),
            Scalar::Approx(z) => {
                if e < 0 && z.re == 0.0 && z.im == 0.0 {
                    return Err(ScalarError::DivisionByZero);
                }
                Ok(Scalar::Approx(z.powi(e as i32)))
            }
        }
    }

    /// Numeric embedding: ζ₂₄ ↦ e^{iπ/12} on exact values, identity on
    /// approximate ones.
    pub fn embed(&self) -> Complex64 {
        match self {
            Scalar::Exact(c) => c.embed(),
            Scalar::Approx(z) => *z,
        }
    }

    pub fn to_approx(&self) -> Scalar {
        Scalar::Approx(self.embed())
    }

    /// In exact mode reality is conjugation-invariance; in approx mode the
    /// imaginary part must sit below `tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        match self {
            Scalar::Exact(c) => *c == c.conj(),
            Scalar::Approx(z) => z.im.abs() <= tol,
        }
    }

    /// Orders two real scalars through the numeric embedding with a
    /// guard band: exact values that embed closer than the guard but are
    /// not exactly equal raise a precision error.
    pub fn cmp_real(&self, other: &Scalar, tol: f64) -> Result<Ordering, ScalarError> {
        if !self.is_real(tol) || !other.is_real(tol) {
            return Err(ScalarError::NotReal);
        }
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                if a == b {
                    return Ok(Ordering::Equal);
                }
                let delta = a.embed().re - b.embed().re;
                if delta.abs() < REAL_CMP_GUARD {
                    Err(ScalarError::PrecisionLoss)
                } else if delta < 0.0 {
                    Ok(Ordering::Less)
                } else {
                    Ok(Ordering::Greater)
                }
            }
            (Scalar::Approx(a), Scalar::Approx(b)) => {
                let delta = a.re - b.re;
                if delta.abs() <= REAL_CMP_GUARD {
                    Ok(Ordering::Equal)
                } else if delta < 0.0 {
                    Ok(Ordering::Less)
                } else {
                    Ok(Ordering::Greater)
                }
            }
            _ => panic!("mixed exact/approx scalar comparison"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    (Scalar::Approx(a), Scalar::Approx(b)) => Scalar::Approx(a $op b),
                    _ => panic!("mixed exact/approx scalar arithmetic"),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(c) => Scalar::Exact(-c),
            Scalar::Approx(z) => Scalar::Approx(-z),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(c) => write!(f, "{c}"),
            Scalar::Approx(z) => write!(f, "{z}"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// JSON encoding: exact scalars as eight rational strings, approximate
// scalars as a [re, im] pair.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(c) => {
                let strings = c.to_strings();
                let mut seq = serializer.serialize_seq(Some(strings.len()))?;
                for s in &strings {
                    seq.serialize_element(s)?;
                }
                seq.end()
            }
            Scalar::Approx(z) => {
                let mut seq = serializer.serialize_seq(Some(2))?;
                seq.serialize_element(&z.re)?;
                seq.serialize_element(&z.im)?;
                seq.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        scalar_from_value(&value).map_err(D::Error::custom)
    }
}

/// Accepted forms: `[re, im]` (approx), eight rational strings (exact),
/// a bare rational string (exact shorthand), or `{"zeta_pow": k}` for
/// ζ₂₄^k (exact shorthand).
pub fn scalar_from_value(value: &serde_json::Value) -> Result<Scalar, String> {
    match value {
        serde_json::Value::Array(items) if items.len() == 2 && items[0].is_number() => {
            let re = items[0].as_f64().ok_or("non-numeric real part")?;
            let im = items[1].as_f64().ok_or("non-numeric imaginary part")?;
            Ok(Scalar::Approx(Complex64::new(re, im)))
        }
        serde_json::Value::Array(items) => {
            let strings: Vec<String> = items
                .iter()
                .map(|v| {
                    v.as_str()
                        .map(str::to_owned)
                        .ok_or_else(|| format!("expected rational string, got {v}"))
                })
                .collect::<Result<_, _>>()?;
            Cyclotomic::from_strings(&strings)
                .map(Scalar::Exact)
                .map_err(|e| e.to_string())
        }
        serde_json::Value::String(s) => parse_rational(s)
            .map(|r| Scalar::Exact(Cyclotomic::from_rational(r)))
            .map_err(|e| e.to_string()),
        serde_json::Value::Object(map) => {
            let k = map
                .get("zeta_pow")
                .and_then(|v| v.as_i64())
                .ok_or("expected {\"zeta_pow\": <integer>}")?;
            Ok(Scalar::Exact(Cyclotomic::zeta_pow(k)))
        }
        other => Err(format!("cannot parse scalar from {other}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn sqrt2_exact() -> Scalar {
        Scalar::Exact(&Cyclotomic::zeta_pow(3) + &Cyclotomic::zeta_pow(-3))
    }

    #[test]
    fn embed_matches_double_sqrt2() {
        let z = sqrt2_exact().embed();
        assert!((z.re - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(z.im.abs() < 1e-15);
        assert_eq!(Scalar::zero(Mode::Exact).embed(), Complex64::new(0.0, 0.0));
        let pass = Scalar::complex(2.0, 3.0);
        assert_eq!(pass.embed(), Complex64::new(2.0, 3.0));
    }

    #[test]
    fn reality_checks() {
        let i = Scalar::root_of_unity(Mode::Exact, 4, 1).unwrap();
        assert!(!i.is_real(DEFAULT_TOL));
        assert!(Scalar::ratio(Mode::Exact, 1, 2).is_real(DEFAULT_TOL));
        assert!(Scalar::complex(1.0, 1e-12).is_real(DEFAULT_TOL));
        assert!(!Scalar::complex(1.0, 1e-3).is_real(DEFAULT_TOL));
    }

    #[test]
    fn real_ordering() {
        let half = Scalar::ratio(Mode::Exact, 1, 2);
        let one = Scalar::one(Mode::Exact);
        assert_eq!(half.cmp_real(&one, DEFAULT_TOL).unwrap(), Ordering::Less);
        let three_halves = Scalar::ratio(Mode::Exact, 3, 2);
        assert_eq!(
            sqrt2_exact().cmp_real(&three_halves, DEFAULT_TOL).unwrap(),
            Ordering::Less
        );
        assert_eq!(one.cmp_real(&one, DEFAULT_TOL).unwrap(), Ordering::Equal);
        let i = Scalar::root_of_unity(Mode::Exact, 4, 1).unwrap();
        assert!(matches!(
            i.cmp_real(&one, DEFAULT_TOL),
            Err(ScalarError::NotReal)
        ));
    }

    #[test]
    fn guard_band_raises_precision_error() {
        // 1 and 1 + 10⁻²⁰ are distinct exact values that embed identically.
        let one = Scalar::one(Mode::Exact);
        let tiny = BigRational::new(1.into(), num_bigint::BigInt::from(10u8).pow(20));
        let close = Scalar::Exact(Cyclotomic::from_rational(
            BigRational::from_integer(1.into()) + tiny,
        ));
        assert!(matches!(
            one.cmp_real(&close, DEFAULT_TOL),
            Err(ScalarError::PrecisionLoss)
        ));
    }

    #[test]
    #[should_panic(expected = "mixed exact/approx")]
    fn mixed_arithmetic_panics() {
        let _ = &Scalar::one(Mode::Exact) * &Scalar::one(Mode::Approx);
    }

    #[test]
    fn abs_sq_is_real() {
        let x = Scalar::Exact(&Cyclotomic::zeta_pow(5) * &Cyclotomic::from_ratio(3, 4));
        let m = x.abs_sq();
        assert!(m.is_real(0.0));
        assert!(m.eq_tol(&Scalar::ratio(Mode::Exact, 9, 16), 0.0));
        let z = Scalar::complex(3.0, 4.0).abs_sq();
        assert!(z.eq_tol(&Scalar::complex(25.0, 0.0), 1e-12));
    }

    #[test]
    fn json_forms() {
        let i = Scalar::root_of_unity(Mode::Exact, 4, 1).unwrap();
        let json = serde_json::to_string(&i).unwrap();
        assert_eq!(json, r#"["0","0","0","0","0","0","1","0"]"#);
        let back: Scalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, i);

        let z = Scalar::complex(2.5, -1.0);
        let json = serde_json::to_string(&z).unwrap();
        assert_eq!(json, "[2.5,-1.0]");
        let back: Scalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, z);

        let shorthand: Scalar = serde_json::from_str(r#""-3/2""#).unwrap();
        assert_eq!(shorthand, Scalar::ratio(Mode::Exact, -3, 2));
        let zeta: Scalar = serde_json::from_str(r#"{"zeta_pow": 8}"#).unwrap();
        assert_eq!(zeta, Scalar::Exact(Cyclotomic::zeta_pow(8)));
    }

    #[test]
    fn division() {
        let x = Scalar::ratio(Mode::Exact, 3, 5);
        let y = Scalar::ratio(Mode::Exact, 7, 2);
        assert!(x
            .div(&y)
            .unwrap()
            .eq_tol(&Scalar::ratio(Mode::Exact, 6, 35), 0.0));
        assert!(x.div(&Scalar::zero(Mode::Exact)).is_err());
        assert!(Scalar::complex(1.0, 0.0)
            .div(&Scalar::zero(Mode::Approx))
            .is_err());
    }
}
