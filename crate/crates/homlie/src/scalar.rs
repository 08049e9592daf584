//! Exact field scalars over the rationals or a prime field.
//!
//! Every [`Scalar`] carries its [`Field`] descriptor so mixed-field
//! arithmetic is caught immediately. Rationals are arbitrary-precision and
//! always kept in lowest terms with a positive denominator; prime-field
//! values are canonical residues in `[0, p)`. Equality is therefore plain
//! structural equality of the stored representation.
//!
//! Arithmetic that cannot fail on well-formed operands (`+`, `-`, `*`,
//! unary `-`) is exposed through the standard operator traits and panics if
//! the operands belong to different fields; division and inversion return a
//! [`ScalarError`] on zero denominators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use thiserror::Error;

/// Errors from scalar construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    /// Division by zero or inversion of zero.
    #[error("division by zero")]
    DivisionByZero,
    /// A prime-field modulus that is not a prime number.
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    /// A scalar literal that does not parse in the given field.
    #[error("invalid scalar literal {0:?}")]
    InvalidLiteral(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum FieldRepr {
    Rationals,
    Prime(u64),
}

/// Descriptor of an exact coefficient field: the rationals or `GF(p)`.
///
/// Prime moduli are validated by trial division at construction, so a
/// `Field` value always names a genuine field. The type is `Copy` and is
/// carried by every [`Scalar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field(FieldRepr);

impl Field {
    /// The field of rational numbers.
    pub fn rationals() -> Field {
        Field(FieldRepr::Rationals)
    }

    /// The prime field `GF(p)`. Fails with [`ScalarError::NotPrime`] unless
    /// `p` is prime. Intended for small moduli; validation is trial
    /// division.
    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        if is_prime(p) {
            Ok(Field(FieldRepr::Prime(p)))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    /// `true` for the rational field.
    pub fn is_rationals(&self) -> bool {
        matches!(self.0, FieldRepr::Rationals)
    }

    /// The modulus for a prime field, `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            FieldRepr::Rationals => None,
            FieldRepr::Prime(p) => Some(p),
        }
    }

    /// The characteristic of the field (`0` for the rationals).
    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    /// Additive identity of this field.
    pub fn zero(&self) -> Scalar {
        Scalar::zero(*self)
    }

    /// Multiplicative identity of this field.
    pub fn one(&self) -> Scalar {
        Scalar::one(*self)
    }

    /// Embeds a machine integer into this field.
    pub fn integer(&self, n: i64) -> Scalar {
        Scalar::from_integer(*self, n)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            FieldRepr::Rationals => write!(f, "Q"),
            FieldRepr::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    if p % 3 == 0 {
        return p == 3;
    }
    let mut d = 5u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= p) {
        if p % d == 0 || p % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum ScalarRepr {
    Rational(BigRational),
    Residue(u64),
}

/// An exact element of a [`Field`].
///
/// Stored canonically: rationals in lowest terms with positive denominator,
/// residues reduced into `[0, p)`. Two scalars are equal exactly when their
/// stored representations are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: Field,
    repr: ScalarRepr,
}

impl Scalar {
    /// The zero of `field`.
    pub fn zero(field: Field) -> Scalar {
        match field.0 {
            FieldRepr::Rationals => Scalar {
                field,
                repr: ScalarRepr::Rational(BigRational::zero()),
            },
            FieldRepr::Prime(_) => Scalar {
                field,
                repr: ScalarRepr::Residue(0),
            },
        }
    }

    /// The one of `field`.
    pub fn one(field: Field) -> Scalar {
        Scalar::from_integer(field, 1)
    }

    /// Embeds a machine integer into `field` (reduced mod `p` for prime
    /// fields).
    pub fn from_integer(field: Field, n: i64) -> Scalar {
        match field.0 {
            FieldRepr::Rationals => Scalar {
                field,
                repr: ScalarRepr::Rational(BigRational::from_integer(BigInt::from(n))),
            },
            FieldRepr::Prime(p) => Scalar {
                field,
                repr: ScalarRepr::Residue(n.rem_euclid(p as i64) as u64),
            },
        }
    }

    /// The rational `num / den`. Fails with
    /// [`ScalarError::DivisionByZero`] when `den == 0`.
    pub fn rational(num: i64, den: i64) -> Result<Scalar, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar {
            field: Field::rationals(),
            repr: ScalarRepr::Rational(BigRational::new(BigInt::from(num), BigInt::from(den))),
        })
    }

    /// The field this scalar lives in.
    pub fn field(&self) -> Field {
        self.field
    }

    /// `true` when the scalar is the additive identity.
    pub fn is_zero(&self) -> bool {
        match &self.repr {
            ScalarRepr::Rational(r) => r.is_zero(),
            ScalarRepr::Residue(r) => *r == 0,
        }
    }

    /// `true` when the scalar is the multiplicative identity.
    pub fn is_one(&self) -> bool {
        match &self.repr {
            ScalarRepr::Rational(r) => r.is_one(),
            ScalarRepr::Residue(r) => *r == 1,
        }
    }

    /// Multiplicative inverse. Fails with
    /// [`ScalarError::DivisionByZero`] on zero.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let repr = match &self.repr {
            ScalarRepr::Rational(r) => ScalarRepr::Rational(r.recip()),
            ScalarRepr::Residue(r) => {
                let p = self.field.modulus().expect("residue implies prime field");
                ScalarRepr::Residue(mod_inverse(*r, p))
            }
        };
        Ok(Scalar {
            field: self.field,
            repr,
        })
    }

    /// `self / rhs`. Fails with [`ScalarError::DivisionByZero`] when `rhs`
    /// is zero.
    ///
    /// # Panics
    ///
    /// Panics if the operands belong to different fields.
    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Parses a scalar literal: `a` or `a/b` over the rationals (arbitrary
    /// precision), an integer (reduced to its canonical residue) over a
    /// prime field.
    pub fn parse(field: Field, text: &str) -> Result<Scalar, ScalarError> {
        let bad = || ScalarError::InvalidLiteral(text.to_string());
        match field.0 {
            FieldRepr::Rationals => {
                let (num_text, den_text) = match text.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (text, "1"),
                };
                let num: BigInt = num_text.parse().map_err(|_| bad())?;
                let den: BigInt = den_text.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                Ok(Scalar {
                    field,
                    repr: ScalarRepr::Rational(BigRational::new(num, den)),
                })
            }
            FieldRepr::Prime(p) => {
                let n: BigInt = text.parse().map_err(|_| bad())?;
                let p_big = BigInt::from(p);
                let r = ((n % &p_big) + &p_big) % &p_big;
                let (_, digits) = r.to_u64_digits();
                Ok(Scalar {
                    field,
                    repr: ScalarRepr::Residue(digits.first().copied().unwrap_or(0)),
                })
            }
        }
    }

    fn assert_same_field(&self, rhs: &Scalar) {
        assert!(
            self.field == rhs.field,
            "scalar field mismatch: {} vs {}",
            self.field,
            rhs.field
        );
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            ScalarRepr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            ScalarRepr::Residue(r) => write!(f, "{r}"),
        }
    }
}

/// Modular inverse for `0 < a < p`, `p` prime, by the extended Euclidean
/// algorithm.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse of a residue in a prime field");
    t0.rem_euclid(p as i128) as u64
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $rational:expr, $residue:expr) => {
        impl $trait for &Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &Scalar) -> Scalar {
                self.assert_same_field(rhs);
                let repr = match (&self.repr, &rhs.repr) {
                    (ScalarRepr::Rational(a), ScalarRepr::Rational(b)) => {
                        #[allow(clippy::redundant_closure_call)]
                        ScalarRepr::Rational($rational(a, b))
                    }
                    (ScalarRepr::Residue(a), ScalarRepr::Residue(b)) => {
                        let p = self.field.modulus().expect("residue implies prime field");
                        #[allow(clippy::redundant_closure_call)]
                        ScalarRepr::Residue($residue(*a, *b, p))
                    }
                    _ => unreachable!("field descriptor and representation always agree"),
                };
                Scalar {
                    field: self.field,
                    repr,
                }
            }
        }

        impl $trait for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, p: u64| ((a as u128 + b as u128) % p as u128) as u64
);
scalar_binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, p: u64| ((a as u128 + (p - b) as u128) % p as u128) as u64
);
scalar_binop!(
    Mul,
    mul,
    |a: &BigRational, b: &BigRational| a * b,
    |a: u64, b: u64, p: u64| ((a as u128 * b as u128) % p as u128) as u64
);

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        let repr = match &self.repr {
            ScalarRepr::Rational(r) => ScalarRepr::Rational(-r),
            ScalarRepr::Residue(r) => {
                let p = self.field.modulus().expect("residue implies prime field");
                ScalarRepr::Residue(if *r == 0 { 0 } else { p - r })
            }
        };
        Scalar {
            field: self.field,
            repr,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}
