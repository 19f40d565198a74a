//! Exact scalar arithmetic over the rationals and over prime fields.
//!
//! Every identity check in this crate compares field elements for exact
//! equality, so scalars are kept in canonical form at all times: rationals
//! in lowest terms with positive denominator, prime-field elements reduced
//! to `0..p`. There is no floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The base field of an algebra: the rationals or F_p for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField { p: u64 },
}

impl FieldSpec {
    /// F_p, validating primality.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Field characteristic: 0 for the rationals, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::from_integer(*self, 0)
    }

    pub fn one(&self) -> Scalar {
        Scalar::from_integer(*self, 1)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { p } => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element.
///
/// Values are self-describing: a rational carries its reduced fraction, a
/// prime-field element carries its modulus. Mixing scalars from different
/// fields in arithmetic is a programming error and panics; the public
/// operations validate field agreement before any arithmetic runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { p, .. } => FieldSpec::PrimeField { p: *p },
        }
    }

    pub fn from_integer(field: FieldSpec, n: i64) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField { p } => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, p } => Scalar::Modular {
                value: mod_inverse(*value, *p),
                p: *p,
            },
        })
    }

    /// Exact division. Errors on a zero divisor.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inverse()?)
    }

    /// Division by a positive integer coefficient, as used by the 1/2, λ/2
    /// and 3/2 factors of the splitting constructions. In F_p a divisor
    /// that reduces to zero is a characteristic obstruction, not an
    /// ordinary division by zero.
    pub fn div_int(&self, divisor: u32) -> Result<Scalar> {
        if divisor == 0 {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Rational(r) => Ok(Scalar::Rational(r / BigRational::from(BigInt::from(divisor)))),
            Scalar::Modular { value, p } => {
                if u64::from(divisor).is_multiple_of(*p) {
                    return Err(Error::CharacteristicObstruction { p: *p, divisor });
                }
                let inv = mod_inverse(u64::from(divisor) % p, *p);
                Ok(Scalar::Modular {
                    value: mul_mod(*value, inv, *p),
                    p: *p,
                })
            }
        }
    }

    /// The canonical text form: `a` or `a/b` over the rationals (lowest
    /// terms, positive denominator), a decimal in `0..p` over F_p.
    pub fn render(&self) -> String {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => value.to_string(),
        }
    }

    /// Parses the text form relative to a field.
    pub fn parse(field: FieldSpec, text: &str) -> Result<Scalar> {
        let text = text.trim();
        match field {
            FieldSpec::Rationals => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (text, "1"),
                };
                let num: BigInt = num
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational `{text}`")))?;
                let den: BigInt = den
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational `{text}`")))?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            FieldSpec::PrimeField { p } => {
                let n: i64 = text
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad F_{p} element `{text}`")))?;
                Ok(Scalar::from_integer(field, n))
            }
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        debug_assert_eq!(
            self.field(),
            other.field(),
            "scalar arithmetic across fields"
        );
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse mod p by the extended Euclidean algorithm. `a` must be nonzero
/// mod the prime p.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of a zero divisor");
    t.rem_euclid(p as i128) as u64
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, p }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => unreachable!("field mismatch"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, p }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: mul_mod(*a, *b, *p),
                    p: *p,
                }
            }
            _ => unreachable!("field mismatch"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, p } => Scalar::Modular {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
