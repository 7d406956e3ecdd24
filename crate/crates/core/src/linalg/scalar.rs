use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An exact coefficient field: a prime field GF(p) or the rationals.
///
/// All arithmetic is exact; there is no floating point anywhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    /// GF(p), elements stored as canonical representatives `0..p`.
    Prime(u64),
    /// Arbitrary-precision rationals with normalized sign and gcd.
    Rationals,
}

/// One element of a [`Field`]. The owning field is tracked by the container
/// (matrix, subspace, ...), not by the scalar itself.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Fp(u64),
    Rat(BigRational),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn gf(p: u64) -> Result<Field> {
        // Entries multiply inside u64; keep p small enough that p^2 fits.
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn rationals() -> Field {
        Field::Rationals
    }

    /// 0 for the rationals, p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(0),
            Field::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(1),
            Field::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => {
                let m = v.rem_euclid(*p as i64) as u64;
                Scalar::Fp(m)
            }
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    /// The k-th element of GF(p) (panics on the rationals); used by the
    /// exhaustive enumeration routines.
    pub fn element(&self, k: u64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp(k % p),
            Field::Rationals => panic!("element enumeration is only defined for prime fields"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + p - y) % p),
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp((p - x) % p),
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x * y) % p),
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => {
                if *x == 0 {
                    None
                } else {
                    // Fermat: x^(p-2) mod p.
                    let mut acc = 1u64;
                    let mut base = *x;
                    let mut e = p - 2;
                    while e > 0 {
                        if e & 1 == 1 {
                            acc = acc * base % p;
                        }
                        base = base * base % p;
                        e >>= 1;
                    }
                    Some(Scalar::Fp(acc))
                }
            }
            (Field::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(x.recip()))
                }
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let bi = self.inv(b).expect("division by zero");
        self.mul(a, &bi)
    }

    /// Deterministic total order on elements of one field (used only for
    /// canonical sorting, e.g. of polynomial factors).
    pub fn cmp(&self, a: &Scalar, b: &Scalar) -> Ordering {
        match (a, b) {
            (Scalar::Fp(x), Scalar::Fp(y)) => x.cmp(y),
            (Scalar::Rat(x), Scalar::Rat(y)) => x.cmp(y),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    /// Parse the serialized form: `"a"` or `"a/b"` over the rationals,
    /// a canonical representative `0..p` over GF(p).
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            Field::Prime(p) => {
                let neg = s.starts_with('-');
                let body = if neg { &s[1..] } else { s };
                let v: u64 = body
                    .parse()
                    .map_err(|_| Error::BadScalar(s.to_string()))?;
                let v = v % p;
                Ok(Scalar::Fp(if neg { (p - v) % p } else { v }))
            }
            Field::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let n: BigInt = num.parse().map_err(|_| Error::BadScalar(s.to_string()))?;
                let d: BigInt = den.parse().map_err(|_| Error::BadScalar(s.to_string()))?;
                if d.is_zero() {
                    return Err(Error::BadScalar(s.to_string()));
                }
                Ok(Scalar::Rat(BigRational::new(n, d)))
            }
        }
    }

    pub fn render(&self, a: &Scalar) -> String {
        match a {
            Scalar::Fp(x) => x.to_string(),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 0,
            Scalar::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 1,
            Scalar::Rat(x) => x.is_one(),
        }
    }

    /// Integer value when the scalar is an integer (used by factorization).
    pub fn as_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Fp(x) => Some(BigInt::from(*x)),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    Some(x.numer().clone())
                } else {
                    None
                }
            }
        }
    }

    pub fn rat(&self) -> &BigRational {
        match self {
            Scalar::Rat(x) => x,
            Scalar::Fp(_) => panic!("not a rational scalar"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(x) => write!(f, "{x}"),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

/// Convenience used all over the test suite.
pub fn scalars_from_i64(field: Field, vs: &[i64]) -> Vec<Scalar> {
    vs.iter().map(|v| field.from_i64(*v)).collect()
}

pub fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf_arithmetic_is_exact() {
        let f = Field::gf(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(f.add(&a, &b), f.from_i64(2));
        assert_eq!(f.mul(&a, &b), f.from_i64(2));
        assert_eq!(f.inv(&a).unwrap(), f.from_i64(2));
        assert_eq!(f.from_i64(-1), f.from_i64(4));
    }

    #[test]
    fn gf_requires_prime() {
        assert!(Field::gf(6).is_err());
        assert!(Field::gf(1).is_err());
        assert!(Field::gf(2).is_ok());
    }

    #[test]
    fn rational_parse_render_roundtrip() {
        let f = Field::rationals();
        for s in ["3", "-2", "7/3", "-7/3", "0"] {
            let v = f.parse(s).unwrap();
            assert_eq!(f.render(&v), *s);
        }
        // normalization
        assert_eq!(f.render(&f.parse("4/6").unwrap()), "2/3");
        assert_eq!(f.render(&f.parse("4/-6").unwrap()), "-2/3");
        assert!(f.parse("1/0").is_err());
    }

    #[test]
    fn gf_parse_canonicalizes() {
        let f = Field::gf(5).unwrap();
        assert_eq!(f.parse("7").unwrap(), f.from_i64(2));
        assert_eq!(f.parse("-1").unwrap(), f.from_i64(4));
        assert!(f.parse("x").is_err());
    }
}
