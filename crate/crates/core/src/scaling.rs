//! The group of coefficient sequences (a_1..a_N) with a_1 ≠ 0, multiplied by
//! truncated power-series composition: these are the automorphisms
//! x ↦ a_1 x + … + a_N x^N of k[x]/x^{N+1}.

use crate::field::{FieldSpec, Scalar};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalingError {
    #[error("leading coefficient must be nonzero")]
    ZeroLeading,
    #[error("empty coefficient sequence")]
    Empty,
    #[error("length mismatch: {0} vs {1}")]
    Length(usize, usize),
}

/// An element of the sequence group: coefficients a_1..a_N, a_1 ≠ 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalingSeq(Vec<Scalar>);

impl ScalingSeq {
    pub fn new(coeffs: Vec<Scalar>) -> Result<ScalingSeq, ScalingError> {
        let first = coeffs.first().ok_or(ScalingError::Empty)?;
        if first.is_zero() {
            return Err(ScalingError::ZeroLeading);
        }
        Ok(ScalingSeq(coeffs))
    }

    pub fn identity(field: FieldSpec, n: usize) -> ScalingSeq {
        assert!(n >= 1);
        let mut c = vec![field.zero(); n];
        c[0] = field.one();
        ScalingSeq(c)
    }

    pub fn is_identity(&self) -> bool {
        self.0[0].is_one() && self.0[1..].iter().all(Scalar::is_zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.0[0].field()
    }

    pub fn random<R: Rng>(field: FieldSpec, n: usize, rng: &mut R) -> ScalingSeq {
        let mut c = vec![field.random_nonzero(rng)];
        for _ in 1..n {
            c.push(field.random(rng));
        }
        ScalingSeq(c)
    }

    /// Composition product: `(a·b)_i = Σ_j a_j Σ_{k_1+…+k_j=i} b_{k_1}…b_{k_j}`
    /// (each k ≥ 1), i.e. the coefficients of f_a(f_b(x)) truncated at x^N.
    pub fn mul(&self, other: &ScalingSeq) -> Result<ScalingSeq, ScalingError> {
        if self.depth() != other.depth() {
            return Err(ScalingError::Length(self.depth(), other.depth()));
        }
        let n = self.depth();
        let field = self.field();
        // powers[j][i] = coefficient of x^{i+1} in f_b(x)^{j+1}
        let mut powers: Vec<Vec<Scalar>> = vec![other.0.clone()];
        for j in 1..n {
            let prev = &powers[j - 1];
            let mut next = vec![field.zero(); n];
            for (i1, c1) in prev.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for (i2, c2) in other.0.iter().enumerate() {
                    let deg = i1 + i2 + 1; // zero-based exponent minus 1
                    if deg < n {
                        next[deg] = next[deg].add(&c1.mul(c2));
                    }
                }
            }
            powers.push(next);
        }
        let mut out = vec![field.zero(); n];
        for (j, aj) in self.0.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            for i in 0..n {
                out[i] = out[i].add(&aj.mul(&powers[j][i]));
            }
        }
        ScalingSeq::new(out)
    }

    /// Group inverse: the unique b with `a·b = identity`, found by solving
    /// the triangular system coefficient by coefficient.
    pub fn inv(&self) -> ScalingSeq {
        let n = self.depth();
        let field = self.field();
        let mut b = vec![field.zero(); n];
        b[0] = self.0[0].inv();
        for i in 1..n {
            // (a·b)_i depends on b_i only through the j = 1 term a_1·b_i;
            // everything else involves b_1..b_{i-1}.
            let mut partial = ScalingSeq(b.clone());
            partial.0[i] = field.zero();
            let val = self.mul(&partial).expect("same depth").0[i].clone();
            b[i] = val.neg().div(&self.0[0]);
        }
        let out = ScalingSeq(b);
        debug_assert!(self.mul(&out).unwrap().is_identity());
        out
    }

    pub fn text(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(v: i64) -> Scalar {
        FieldSpec::Rational.from_i64(v)
    }

    #[test]
    fn identity_element() {
        let id = ScalingSeq::identity(FieldSpec::Rational, 3);
        assert_eq!(id.coeffs(), &[q(1), q(0), q(0)]);
        let a = ScalingSeq::new(vec![q(2), q(5), q(-1)]).unwrap();
        assert_eq!(a.mul(&id).unwrap(), a);
        assert_eq!(id.mul(&a).unwrap(), a);
    }

    #[test]
    fn depth_two_product_formula() {
        // (a1,a2)·(b1,b2) = (a1 b1, a1 b2 + a2 b1^2)
        let a = ScalingSeq::new(vec![q(2), q(3)]).unwrap();
        let b = ScalingSeq::new(vec![q(5), q(7)]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.coeffs(), &[q(10), q(2 * 7 + 3 * 25)]);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = FieldSpec::Prime(32003);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=5 {
            for _ in 0..20 {
                let a = ScalingSeq::random(f, n, &mut rng);
                assert!(a.mul(&a.inv()).unwrap().is_identity());
                assert!(a.inv().mul(&a).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn associative() {
        let f = FieldSpec::Prime(101);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = ScalingSeq::random(f, 4, &mut rng);
            let b = ScalingSeq::random(f, 4, &mut rng);
            let c = ScalingSeq::random(f, 4, &mut rng);
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn zero_leading_rejected() {
        assert_eq!(
            ScalingSeq::new(vec![q(0), q(1)]).unwrap_err(),
            ScalingError::ZeroLeading
        );
    }
}
