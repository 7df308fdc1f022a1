//! Base fields: exact rationals or a prime field `F_p`.
//!
//! Every scalar is stored as a `BigRational`. In prime mode the stored value is
//! always the canonical integer representative in `[0, p)`, so equality and
//! hashing of scalars stay structural in both modes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Scalar = BigRational;

/// Largest prime modulus accepted; keeps `a * b` inside `u64` arithmetic.
pub const MAX_PRIME: u64 = 1 << 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported bound 2^32")]
    PrimeTooLarge(u64),
    #[error("denominator of {value} is divisible by the characteristic {p}")]
    DenominatorVanishes { value: String, p: u64 },
    #[error("field mismatch: {0} vs {1}")]
    Mismatch(FieldSpec, FieldSpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
#[derive(Default)]
pub enum FieldSpec {
    #[default]
    Rational,
    Prime { p: u64 },
}


impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime { p } => write!(f, "p:{p}"),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_PRIME {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec::Prime { p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => *p,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, FieldSpec::Rational)
    }

    pub fn ensure_same(&self, other: &FieldSpec) -> Result<(), FieldError> {
        if self == other {
            Ok(())
        } else {
            Err(FieldError::Mismatch(*self, *other))
        }
    }

    /// Maps an arbitrary rational into this field.
    pub fn normalize(&self, q: &BigRational) -> Result<Scalar, FieldError> {
        match self {
            FieldSpec::Rational => Ok(q.clone()),
            FieldSpec::Prime { p } => {
                let num = mod_u64(q.numer(), *p);
                let den = mod_u64(q.denom(), *p);
                if den == 0 {
                    return Err(FieldError::DenominatorVanishes { value: q.to_string(), p: *p });
                }
                let v = mul_mod(num, inv_mod(den, *p), *p);
                Ok(BigRational::from_integer(BigInt::from(v)))
            }
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.normalize(&BigRational::from_integer(BigInt::from(v)))
            .expect("integers always map into a field")
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    fn reduce(&self, v: Scalar) -> Scalar {
        match self {
            FieldSpec::Rational => v,
            FieldSpec::Prime { p } => {
                // operands are canonical integers, so results are integers too
                let r = mod_u64(v.numer(), *p);
                BigRational::from_integer(BigInt::from(r))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            FieldSpec::Rational => Some(a.recip()),
            FieldSpec::Prime { p } => {
                let v = mod_u64(a.numer(), *p);
                Some(BigRational::from_integer(BigInt::from(inv_mod(v, *p))))
            }
        }
    }

    /// Textual form used by the polynomial printer and the JSON formats.
    pub fn format(&self, a: &Scalar) -> String {
        a.to_string()
    }
}

pub(crate) fn mod_u64(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Parses `"3"`, `"-2/5"` into a rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}
