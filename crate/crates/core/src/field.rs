//! Exact scalars over the rationals or a prime field.
//!
//! Every value carries its field; arithmetic between scalars of different
//! fields is a programming error and panics. All arithmetic is exact, there
//! is no rounding anywhere in the crate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use rand::Rng;
use std::fmt;

/// The coefficient field of a computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FieldSpec {
    /// The field of rational numbers.
    Rational,
    /// The prime field with `p` elements; `p` must be prime.
    Prime(u64),
}

impl FieldSpec {
    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Fp {
                p,
                val: v.rem_euclid(p as i64) as u64,
            },
        }
    }

    /// Parses a coefficient literal: an integer or `a/b` over the rationals,
    /// a residue over a prime field.
    pub fn parse(self, text: &str) -> Option<Scalar> {
        let text = text.trim();
        match self {
            FieldSpec::Rational => {
                if let Some((num, den)) = text.split_once('/') {
                    let n: i64 = num.trim().parse().ok()?;
                    let d: i64 = den.trim().parse().ok()?;
                    if d == 0 {
                        return None;
                    }
                    Some(Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d))))
                } else {
                    let n: i64 = text.parse().ok()?;
                    Some(self.from_i64(n))
                }
            }
            FieldSpec::Prime(_) => {
                let n: i64 = text.parse().ok()?;
                Some(self.from_i64(n))
            }
        }
    }

    /// A uniform random scalar (small random integer over the rationals).
    pub fn random<R: Rng>(self, rng: &mut R) -> Scalar {
        match self {
            FieldSpec::Rational => self.from_i64(rng.gen_range(-20..=20)),
            FieldSpec::Prime(p) => Scalar::Fp {
                p,
                val: rng.gen_range(0..p),
            },
        }
    }

    pub fn random_nonzero<R: Rng>(self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// An exact field element in canonical form: a reduced fraction or a residue
/// in `0..p`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u64, val: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rational,
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) if p == q => Scalar::Fp {
                p: *p,
                val: ((*a as u128 + *b as u128) % *p as u128) as u64,
            },
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { p - val },
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) if p == q => Scalar::Fp {
                p: *p,
                val: ((*a as u128 * *b as u128) % *p as u128) as u64,
            },
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Fp { p, val } => {
                assert!(*val != 0, "inverse of zero");
                Scalar::Fp {
                    p: *p,
                    val: fp_pow(*val, p - 2, *p),
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }
}

fn fp_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rational_canonical_form() {
        let f = FieldSpec::Rational;
        let half = f.parse("2/4").unwrap();
        assert_eq!(half, f.parse("1/2").unwrap());
        assert_eq!(half.add(&half), f.one());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::Prime(32003);
        let a = f.from_i64(-1);
        assert_eq!(a, f.from_i64(32002));
        assert!(a.mul(&a).is_one());
        let b = f.from_i64(12345);
        assert!(b.mul(&b.inv()).is_one());
    }

    #[test]
    fn random_nonzero_is_nonzero() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            assert!(!FieldSpec::Prime(5).random_nonzero(&mut rng).is_zero());
        }
    }

    #[test]
    #[should_panic(expected = "mixed-field")]
    fn mixed_fields_panic() {
        let _ = FieldSpec::Rational.one().add(&FieldSpec::Prime(5).one());
    }
}
