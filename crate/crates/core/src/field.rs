//! Exact scalar fields: the rationals and prime fields.
//!
//! Every value has a unique canonical form, so `==` on scalars is a
//! structural comparison and the derived `Hash` is consistent with it.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("denominator of `{literal}` is divisible by {prime}")]
    NotInvertibleModP { literal: String, prime: u64 },
}

/// An exact field of scalars.
///
/// Arithmetic goes through by-reference methods so that big rationals are
/// not cloned on every operation.
pub trait Field: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    /// Parses the canonical string form (`"p/q"`, `"n"`), reducing mod p
    /// where applicable.
    fn parse(s: &str) -> Result<Self, ScalarParseError>;
    /// Tag written into files: `"Q"` or `"Fp:<p>"`.
    fn tag() -> String;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = Field::add(self, &Field::mul(a, b));
    }
}

/// Splits `"p/q"` into big integers, rejecting junk.
fn parse_fraction(s: &str) -> Result<(BigInt, BigInt), ScalarParseError> {
    let bad = || ScalarParseError::Malformed(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(s.to_string()));
    }
    Ok((num, den))
}

/// Arbitrary-precision rational in reduced form with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Q(BigRational);

impl Q {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Q(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    /// Reduction modulo `P`; `None` when the denominator is divisible by `P`.
    pub fn reduce_mod<const P: u64>(&self) -> Option<Fp<P>> {
        let p = BigInt::from(P);
        let n = modp(self.numer(), &p);
        let d = modp(self.denom(), &p);
        Fp::<P>::new(d).inv().map(|di| Field::mul(&Fp::<P>::new(n), &di))
    }
}

fn modp(x: &BigInt, p: &BigInt) -> u64 {
    let r = ((x % p) + p) % p;
    u64::try_from(r).expect("residue fits in u64")
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Q {
    fn from(v: i64) -> Self {
        Q(BigRational::from_integer(BigInt::from(v)))
    }
}

impl Field for Q {
    fn zero() -> Self {
        Q(BigRational::zero())
    }
    fn one() -> Self {
        Q(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Q(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Q(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Q(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Q(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Q(self.0.recip()))
        }
    }
    fn from_i64(v: i64) -> Self {
        Q::from(v)
    }
    fn parse(s: &str) -> Result<Self, ScalarParseError> {
        let (n, d) = parse_fraction(s)?;
        Ok(Q(BigRational::new(n, d)))
    }
    fn tag() -> String {
        "Q".to_string()
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.0.is_zero() || b.0.is_zero() {
            return;
        }
        // integer fast path avoids the gcd in Ratio's general add
        if a.0.is_integer() && b.0.is_integer() && self.0.is_integer() {
            let v = self.0.numer() + a.0.numer() * b.0.numer();
            self.0 = BigRational::from_integer(v);
        } else {
            self.0 = &self.0 + &a.0 * &b.0;
        }
    }
}

impl Q {
    pub fn abs(&self) -> Q {
        Q(self.0.abs())
    }
}

/// Element of the prime field with `P` elements, stored as a residue in `[0, P)`.
///
/// `P` must be prime and below 2^32 so products fit in `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const CHECK: () = assert!(P >= 2 && P < (1u64 << 32), "modulus out of range");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
    fn parse(s: &str) -> Result<Self, ScalarParseError> {
        let (n, d) = parse_fraction(s)?;
        let p = BigInt::from(P);
        let n = Fp::<P>::new(modp(&n, &p));
        let d = Fp::<P>::new(modp(&d, &p));
        let di = d.inv().ok_or_else(|| ScalarParseError::NotInvertibleModP { literal: s.to_string(), prime: P })?;
        Ok(Field::mul(&n, &di))
    }
    fn tag() -> String {
        format!("Fp:{P}")
    }
}

macro_rules! std_ops {
    ($($t:ty => [$($g:tt)*]),*) => {$(
        impl<$($g)*> Add for $t {
            type Output = Self;
            fn add(self, rhs: Self) -> Self {
                Field::add(&self, &rhs)
            }
        }
        impl<$($g)*> Sub for $t {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                Field::sub(&self, &rhs)
            }
        }
        impl<$($g)*> Mul for $t {
            type Output = Self;
            fn mul(self, rhs: Self) -> Self {
                Field::mul(&self, &rhs)
            }
        }
        impl<$($g)*> Neg for $t {
            type Output = Self;
            fn neg(self) -> Self {
                Field::neg(&self)
            }
        }
    )*};
}

std_ops!(Q => [], Fp<P> => [const P: u64]);
