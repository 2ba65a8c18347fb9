//! Coefficient fields: arbitrary-precision rationals and prime fields.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The coefficient field of a polynomial ring.
///
/// Rationals are kept in lowest terms with a positive denominator (the
/// canonical form maintained by `BigRational`). Prime-field elements are
/// residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The field of rational numbers.
    Rationals,
    /// The prime field GF(p).
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Self {
        assert!(is_prime(p), "modulus {p} is not prime");
        FieldSpec::Prime(p)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::zero()),
            FieldSpec::Prime(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::one()),
            FieldSpec::Prime(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Fp(n.rem_euclid(*p as i64) as u64),
        }
    }

    /// The fraction a/b; panics if b vanishes in the field.
    pub fn fraction(&self, a: i64, b: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => {
                assert!(b != 0, "zero denominator");
                Scalar::Q(BigRational::new(BigInt::from(a), BigInt::from(b)))
            }
            FieldSpec::Prime(_) => {
                let bb = self.from_i64(b);
                assert!(!bb.is_zero(), "denominator vanishes mod p");
                self.mul(&self.from_i64(a), &self.inv(&bb))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Q(x)) => Scalar::Q(-x),
            (FieldSpec::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Q(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Q(x.recip())
            }
            (FieldSpec::Prime(p), Scalar::Fp(x)) => {
                assert!(*x != 0, "inverse of zero");
                Scalar::Fp(mod_pow(*x, p - 2, *p))
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }
}

/// An exact field element; the owning `FieldSpec` interprets it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp(u64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(x) => x.is_zero(),
            Scalar::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(x) => x.is_one(),
            Scalar::Fp(x) => *x == 1,
        }
    }

    /// True for rationals with negative sign; prime-field residues are never
    /// negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(x) => x.is_negative(),
            Scalar::Fp(_) => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(x) => {
                if x.is_integer() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Fp(x) => write!(f, "{x}"),
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    base = acc as u64;
    base
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let q = FieldSpec::Rationals;
        let half = q.fraction(2, 4);
        assert_eq!(half, q.fraction(1, 2));
        let neg = q.fraction(1, -2);
        assert!(neg.is_negative());
        assert_eq!(q.add(&neg, &q.fraction(1, 2)), q.zero());
    }

    #[test]
    fn prime_field_inverse() {
        let f = FieldSpec::prime(101);
        for n in 1..101 {
            let a = f.from_i64(n);
            assert!(f.mul(&a, &f.inv(&a)).is_one());
        }
    }

    #[test]
    #[should_panic]
    fn composite_modulus_rejected() {
        FieldSpec::prime(91);
    }
}
