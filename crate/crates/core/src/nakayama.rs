//! The selfinjective Nakayama algebra: a cyclic quiver on `verts` vertices
//! with arrows b_i: i → i+1, modulo all paths of length `maxlen + 1`.
//!
//! Morphisms P_i → P_j form the space e_j A e_i with basis the paths
//! b(i, k) of length k ≡ j − i (mod verts), 0 ≤ k ≤ maxlen. The module also
//! houses the algebra automorphisms: the rotation `rho`, the scalings
//! `mu_c`, their composites, the inner-automorphism decision procedure, and
//! the normalization of an automorphism to rotation-times-scaling shape.

use crate::algebra::{Algebra, Factorization, Morph, Relation};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;
use crate::scaling::ScalingSeq;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NakayamaError {
    #[error("parameters must satisfy gcd(n, t) = 1 (got n = {0}, t = {1})")]
    NotCoprime(usize, usize),
    #[error("parameters must be positive")]
    ZeroParameter,
    #[error("scaling sequence too long: {0} coefficients, depth is {1}")]
    ScalingTooLong(usize, usize),
    #[error("automorphism does not send arrow {0} to a unit multiple of it")]
    NotNormalizable(usize),
}

/// Parameter triple (m, n, t); the main algebra has n·m vertices and maximal
/// path length t·m, the extended algebra has n·t·m vertices with the same
/// maximal length.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NakayamaSpec {
    pub m: usize,
    pub n: usize,
    pub t: usize,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NakayamaSpec {
    pub fn new(m: usize, n: usize, t: usize) -> Result<NakayamaSpec, NakayamaError> {
        if m == 0 || n == 0 || t == 0 {
            return Err(NakayamaError::ZeroParameter);
        }
        if gcd(n, t) != 1 {
            return Err(NakayamaError::NotCoprime(n, t));
        }
        Ok(NakayamaSpec { m, n, t })
    }

    /// The algebra with n·m vertices, radical length t·m.
    pub fn algebra(&self, field: FieldSpec) -> Nakayama {
        Nakayama {
            verts: self.n * self.m,
            maxlen: self.t * self.m,
            field,
        }
    }

    /// The extended algebra with n·t·m vertices, same radical length; the
    /// cyclic group of order t acts on it by rotation through n·m.
    pub fn extended_algebra(&self, field: FieldSpec) -> Nakayama {
        Nakayama {
            verts: self.n * self.t * self.m,
            maxlen: self.t * self.m,
            field,
        }
    }
}

/// The algebra itself: cyclic quiver on `verts` vertices, all paths of
/// length > `maxlen` set to zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Nakayama {
    pub verts: usize,
    pub maxlen: usize,
    pub field: FieldSpec,
}

impl Nakayama {
    pub fn new(verts: usize, maxlen: usize, field: FieldSpec) -> Nakayama {
        assert!(verts >= 1 && maxlen >= 1);
        Nakayama {
            verts,
            maxlen,
            field,
        }
    }

    /// Vertex index reduced into 0..verts.
    pub fn v(&self, i: i64) -> usize {
        i.rem_euclid(self.verts as i64) as usize
    }

    fn residue(&self, src: usize, dst: usize) -> usize {
        (dst + self.verts - src % self.verts) % self.verts
    }

    /// Path length of the `idx`-th basis element of Hom(P_src, P_dst).
    pub fn basis_len(&self, src: usize, dst: usize, idx: usize) -> usize {
        self.residue(src, dst) + idx * self.verts
    }

    /// Basis index of the length-k path from src (k must be admissible).
    pub fn idx_of_len(&self, src: usize, dst: usize, k: usize) -> usize {
        let r = self.residue(src, dst);
        debug_assert!(k % self.verts == r % self.verts && k <= self.maxlen);
        (k - r) / self.verts
    }

    /// Ascending admissible path lengths from i to j.
    pub fn hom_lengths(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.hom_dim(&i, &j))
            .map(|idx| self.basis_len(i, j, idx))
            .collect()
    }

    /// The single-path morphism b(i, k): P_i → P_{i+k}.
    pub fn path(&self, i: i64, k: usize) -> Morph<usize> {
        assert!(k <= self.maxlen);
        let src = self.v(i);
        let dst = self.v(i + k as i64);
        Morph::basis(self, src, dst, self.idx_of_len(src, dst, k))
    }

    /// The arrow b_i: P_i → P_{i+1}.
    pub fn arrow(&self, i: i64) -> Morph<usize> {
        self.path(i, 1)
    }

    /// Depth of the scaling group: the number of unit coefficients a scaling
    /// automorphism can carry, i.e. #{ j ≥ 1 : 1 + (j−1)·verts ≤ maxlen }.
    pub fn depth(&self) -> usize {
        (self.maxlen - 1) / self.verts + 1
    }

    /// Dimension of every vertex endomorphism ring.
    pub fn end_dim(&self) -> usize {
        self.maxlen / self.verts + 1
    }

    pub fn dim(&self) -> usize {
        self.verts * (self.maxlen + 1)
    }

    // ---- automorphisms -------------------------------------------------

    pub fn identity_automorphism(&self) -> Automorphism {
        self.rotation(0)
    }

    /// rho^l: e_i ↦ e_{i+l}, b_i ↦ b_{i+l}.
    pub fn rotation(&self, l: i64) -> Automorphism {
        let shift = self.v(l);
        let images = (0..self.verts)
            .map(|i| self.arrow(i as i64 + shift as i64))
            .collect();
        Automorphism { shift, images }
    }

    /// The unit u_c = Σ_j c_j · b(1, (j−1)·verts) in End(P_1).
    pub fn u_elem(&self, c: &ScalingSeq) -> Morph<usize> {
        let one = self.v(1);
        let mut u = Morph::zero(self, one, one);
        for (j, coeff) in c.coeffs().iter().enumerate() {
            let k = j * self.verts;
            u.coeffs[self.idx_of_len(one, one, k)] = coeff.clone();
        }
        u
    }

    /// mu_c: fixes every arrow except b_0 ↦ u_c · b_0. Sequences shorter
    /// than the depth are padded with zeros.
    pub fn scaling(&self, c: &ScalingSeq) -> Result<Automorphism, NakayamaError> {
        let n = self.depth();
        if c.depth() > n {
            return Err(NakayamaError::ScalingTooLong(c.depth(), n));
        }
        let mut coeffs = c.coeffs().to_vec();
        coeffs.resize(n, self.field.zero());
        let c = ScalingSeq::new(coeffs).expect("leading coefficient preserved");
        let mut images: Vec<Morph<usize>> = (0..self.verts).map(|i| self.arrow(i as i64)).collect();
        images[0] = self.u_elem(&c).compose(self, &self.arrow(0));
        Ok(Automorphism { shift: 0, images })
    }

    /// Conjugation x ↦ y⁻¹ x y by a blockwise unit y (one unit
    /// endomorphism per vertex).
    pub fn inner_automorphism(&self, y: &[Morph<usize>]) -> Automorphism {
        assert_eq!(y.len(), self.verts);
        let images = (0..self.verts)
            .map(|i| {
                let next = self.v(i as i64 + 1);
                y[next]
                    .inverse(self)
                    .compose(self, &self.arrow(i as i64))
                    .compose(self, &y[i])
            })
            .collect();
        Automorphism { shift: 0, images }
    }

    pub fn random_inner<R: Rng>(&self, rng: &mut R) -> Automorphism {
        let y: Vec<Morph<usize>> = (0..self.verts)
            .map(|i| {
                let mut m = Morph::zero(self, i, i);
                m.coeffs[0] = self.field.random_nonzero(rng);
                for c in m.coeffs.iter_mut().skip(1) {
                    *c = self.field.random(rng);
                }
                m
            })
            .collect();
        self.inner_automorphism(&y)
    }

    /// Decides whether `aut` is inner: searches for a blockwise unit y with
    /// b_i ∘ y_i = y_{i+1} ∘ aut(b_i) for every arrow. Returns the witness.
    pub fn is_inner(&self, aut: &Automorphism, seed: u64) -> Option<Vec<Morph<usize>>> {
        if aut.shift != 0 {
            // An inner automorphism fixes every idempotent: e_i y = y e_i
            // forces y block-diagonal, and a shifted automorphism would
            // need off-diagonal blocks, which kill the unit condition.
            return None;
        }
        let d = self.end_dim();
        let cols = self.verts * d;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..self.verts {
            let next = self.v(i as i64 + 1);
            let eq_dim = self.hom_dim(&i, &next);
            let mut block = vec![vec![self.field.zero(); cols]; eq_dim];
            for a in 0..d {
                let basis = Morph::basis(self, i, i, a);
                let lhs = self.arrow(i as i64).compose(self, &basis);
                for (r, c) in lhs.coeffs.iter().enumerate() {
                    block[r][i * d + a] = block[r][i * d + a].add(c);
                }
                let basis_next = Morph::basis(self, next, next, a);
                let rhs = basis_next.compose(self, &aut.images[i]);
                for (r, c) in rhs.coeffs.iter().enumerate() {
                    block[r][next * d + a] = block[r][next * d + a].sub(c);
                }
            }
            rows.extend(block);
        }
        let nrows = rows.len();
        let mat = Matrix::from_rows(self.field, rows).expect("consistent field");
        debug_assert_eq!(mat.rows, nrows);
        let kernel = mat.kernel_basis();
        let unit_ok = |v: &[Scalar]| (0..self.verts).all(|i| !v[i * d].is_zero());
        let extract = |v: &[Scalar]| -> Vec<Morph<usize>> {
            (0..self.verts)
                .map(|i| Morph {
                    src: i,
                    dst: i,
                    coeffs: v[i * d..(i + 1) * d].to_vec(),
                })
                .collect()
        };
        for v in &kernel {
            if unit_ok(v) {
                return Some(extract(v));
            }
        }
        if kernel.is_empty() {
            return None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..64 {
            let mut v = vec![self.field.zero(); cols];
            for kv in &kernel {
                let s = self.field.random(&mut rng);
                for (slot, entry) in v.iter_mut().zip(kv) {
                    *slot = slot.add(&entry.mul(&s));
                }
            }
            if unit_ok(&v) {
                return Some(extract(&v));
            }
        }
        None
    }

    /// Writes `[aut] = [rho^l ∘ mu_c]` modulo inner automorphisms, peeling
    /// one scaling factor per vertex; the result is certified through
    /// `is_inner` before being returned.
    pub fn normalize_automorphism(
        &self,
        aut: &Automorphism,
        seed: u64,
    ) -> Result<(usize, ScalingSeq), NakayamaError> {
        let l = aut.shift;
        // Strip the rotation: h fixes idempotents pointwise.
        let mut h = aut.then(self, &self.rotation(-(l as i64)));
        let mut factors: Vec<ScalingSeq> = Vec::new();
        for k in 0..self.verts {
            // h(b_k) must be (unit in End(P_{k+1}))·b_k; the coefficients
            // at path lengths 1, 1+verts, 1+2·verts, … form the k-th
            // scaling factor.
            let img = &h.images[k];
            let next = self.v(k as i64 + 1);
            let seq: Vec<Scalar> = (0..self.depth())
                .map(|j| img.coeffs[self.idx_of_len(k, next, 1 + j * self.verts)].clone())
                .collect();
            let a_k = ScalingSeq::new(seq).map_err(|_| NakayamaError::NotNormalizable(k))?;
            // Corrector rho^k ∘ mu_{a_k}⁻¹ ∘ rho^{-k}, applied after h.
            let corr = self
                .rotation(-(k as i64))
                .then(self, &self.scaling(&a_k.inv()).expect("depth matches"))
                .then(self, &self.rotation(k as i64));
            h = h.then(self, &corr);
            factors.push(a_k);
        }
        // The correctors were applied outermost-last, so the scaling factors
        // multiply with the last-extracted factor acting first.
        let mut c = factors
            .pop()
            .unwrap_or_else(|| ScalingSeq::identity(self.field, self.depth()));
        while let Some(a) = factors.pop() {
            c = c.mul(&a).expect("equal depths");
        }
        // Certify: aut composed with the inverse of rho^l mu_c is inner.
        let check = aut
            .then(self, &self.rotation(-(l as i64)))
            .then(self, &self.scaling(&c.inv()).expect("depth matches"));
        if self.is_inner(&check, seed).is_none() {
            return Err(NakayamaError::NotNormalizable(self.verts));
        }
        Ok((l, c))
    }
}

impl Algebra for Nakayama {
    type Label = usize;

    fn field(&self) -> FieldSpec {
        self.field
    }

    fn name(&self) -> String {
        format!("N({},{})", self.verts, self.maxlen)
    }

    fn projectives(&self) -> Vec<usize> {
        (0..self.verts).collect()
    }

    fn hom_dim(&self, src: &usize, dst: &usize) -> usize {
        let r = self.residue(*src, *dst);
        if r > self.maxlen {
            0
        } else {
            (self.maxlen - r) / self.verts + 1
        }
    }

    fn compose_basis(
        &self,
        src: &usize,
        mid: &usize,
        dst: &usize,
        g: usize,
        f: usize,
    ) -> Vec<(usize, Scalar)> {
        let k = self.basis_len(*src, *mid, f) + self.basis_len(*mid, *dst, g);
        if k > self.maxlen {
            Vec::new()
        } else {
            vec![(self.idx_of_len(*src, *dst, k), self.field.one())]
        }
    }

    fn identity_pos(&self, _l: &usize) -> usize {
        0
    }

    fn factor_basis(&self, src: &usize, dst: &usize, idx: usize) -> Factorization<usize> {
        let k = self.basis_len(*src, *dst, idx);
        match k {
            0 => Factorization::Identity,
            1 => Factorization::Generator,
            _ => {
                let mid = self.v(*src as i64 + 1);
                Factorization::Composite {
                    mid,
                    left: self.idx_of_len(mid, *dst, k - 1),
                    right: self.idx_of_len(*src, mid, 1),
                }
            }
        }
    }

    fn generators(&self) -> Vec<(usize, usize, usize)> {
        (0..self.verts)
            .map(|i| {
                let j = self.v(i as i64 + 1);
                (i, j, self.idx_of_len(i, j, 1))
            })
            .collect()
    }

    fn relations(&self) -> Vec<Relation<usize>> {
        // The ideal is generated by the paths of length maxlen + 1.
        (0..self.verts)
            .map(|i| {
                let steps: Vec<(usize, usize, usize)> = (0..=self.maxlen)
                    .map(|s| {
                        let a = self.v(i as i64 + s as i64);
                        let b = self.v(i as i64 + s as i64 + 1);
                        (a, b, self.idx_of_len(a, b, 1))
                    })
                    .collect();
                Relation {
                    src: i,
                    dst: self.v(i as i64 + self.maxlen as i64 + 1),
                    terms: vec![(self.field.one(), steps)],
                }
            })
            .collect()
    }

    fn label_text(&self, l: &usize) -> String {
        l.to_string()
    }

    fn basis_term_text(&self, src: &usize, dst: &usize, idx: usize, coeff: &Scalar) -> String {
        format!("{}*b({},{})", coeff, src, self.basis_len(*src, *dst, idx))
    }
}

/// An algebra automorphism preserving the idempotent span: e_i ↦ e_{i+shift}
/// together with the image of every arrow.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Automorphism {
    /// Rotation offset in 0..verts.
    pub shift: usize,
    /// images[i] = image of the arrow b_i, a morphism P_{i+shift} → P_{i+1+shift}.
    pub images: Vec<Morph<usize>>,
}

impl Automorphism {
    /// Image of a single path basis element b(i, k).
    fn apply_path(&self, alg: &Nakayama, i: usize, k: usize) -> Morph<usize> {
        let mut acc = Morph::identity(alg, alg.v(i as i64 + self.shift as i64));
        for s in 0..k {
            let step = &self.images[alg.v(i as i64 + s as i64)];
            acc = step.compose(alg, &acc);
        }
        acc
    }

    /// Linear-multiplicative extension to an arbitrary morphism.
    pub fn apply(&self, alg: &Nakayama, x: &Morph<usize>) -> Morph<usize> {
        let src = alg.v(x.src as i64 + self.shift as i64);
        let dst = alg.v(x.dst as i64 + self.shift as i64);
        let mut out = Morph::zero(alg, src, dst);
        for (idx, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = alg.basis_len(x.src, x.dst, idx);
            out = out.add(&self.apply_path(alg, x.src, k).scale(c));
        }
        out
    }

    /// Left-to-right composition: `self` is applied first, `other` second.
    pub fn then(&self, alg: &Nakayama, other: &Automorphism) -> Automorphism {
        let shift = alg.v(self.shift as i64 + other.shift as i64);
        let images = (0..alg.verts)
            .map(|i| other.apply(alg, &self.images[i]))
            .collect();
        Automorphism { shift, images }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::eval_relation;

    fn n42() -> Nakayama {
        // m=2, n=2, t=1: 4 vertices, maximal length 2
        Nakayama::new(4, 2, FieldSpec::Rational)
    }

    #[test]
    fn hom_lengths_examples() {
        let a = n42();
        assert_eq!(a.hom_lengths(0, 0), vec![0]);
        assert_eq!(a.hom_lengths(0, 2), vec![2]);
        assert_eq!(a.hom_lengths(0, 3), Vec::<usize>::new());
        for i in 0..4 {
            assert_eq!(a.hom_lengths(i, i)[0], 0);
        }
    }

    #[test]
    fn hom_dim_matches_enumeration() {
        for (verts, maxlen) in [(4, 2), (6, 4), (1, 3), (2, 6), (12, 4)] {
            let a = Nakayama::new(verts, maxlen, FieldSpec::Rational);
            for i in 0..verts {
                for j in 0..verts {
                    let brute = (0..=maxlen)
                        .filter(|k| (i + k) % verts == j % verts)
                        .count();
                    assert_eq!(a.hom_dim(&i, &j), brute, "({verts},{maxlen}) {i}->{j}");
                }
            }
        }
    }

    #[test]
    fn composition_truncates() {
        let a = n42();
        let e = Morph::identity(&a, 1);
        assert_eq!(e.compose(&a, &e), e);
        // b(2,1) ∘ b(1,1) = b(1,2)
        let left = a.path(2, 1).compose(&a, &a.path(1, 1));
        assert_eq!(left, a.path(1, 2));
        // b(3,1) ∘ b(1,2) = 0: length 3 > 2
        let zero = a.path(3, 1).compose(&a, &a.path(1, 2));
        assert!(zero.is_zero());
    }

    #[test]
    fn relations_vanish() {
        for (verts, maxlen) in [(4, 2), (6, 4), (1, 3), (2, 6)] {
            let a = Nakayama::new(verts, maxlen, FieldSpec::Rational);
            for rel in a.relations() {
                assert!(eval_relation(&a, &rel).is_zero());
            }
        }
    }

    #[test]
    fn associativity_random() {
        use rand::SeedableRng;
        let a = Nakayama::new(6, 4, FieldSpec::Prime(101));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let i = rng.gen_range(0..6usize);
            let j = rng.gen_range(0..6usize);
            let k = rng.gen_range(0..6usize);
            let l = rng.gen_range(0..6usize);
            let rand_morph = |s: usize, d: usize, rng: &mut ChaCha8Rng| {
                let mut m = Morph::zero(&a, s, d);
                for c in m.coeffs.iter_mut() {
                    *c = a.field.random(rng);
                }
                m
            };
            let f = rand_morph(i, j, &mut rng);
            let g = rand_morph(j, k, &mut rng);
            let h = rand_morph(k, l, &mut rng);
            let lhs = h.compose(&a, &g).compose(&a, &f);
            let rhs = h.compose(&a, &g.compose(&a, &f));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rotation_and_scaling_basics() {
        let a = n42();
        let id = a.rotation(0);
        let rho = a.rotation(1);
        // rho sends b(i,k) to b(i+1,k)
        assert_eq!(rho.apply(&a, &a.path(0, 2)), a.path(1, 2));
        assert_eq!(id.apply(&a, &a.path(0, 2)), a.path(0, 2));
        // scaling with (1,0,...) is the identity
        let c = ScalingSeq::identity(FieldSpec::Rational, a.depth());
        let mu = a.scaling(&c).unwrap();
        assert_eq!(mu, id);
    }

    #[test]
    fn scaling_on_one_vertex_algebra() {
        // verts=1, maxlen=2, depth 2: mu_{(1,1)} sends b ↦ b + b²
        let a = Nakayama::new(1, 2, FieldSpec::Rational);
        assert_eq!(a.depth(), 2);
        let c = ScalingSeq::new(vec![a.field.one(), a.field.one()]).unwrap();
        let mu = a.scaling(&c).unwrap();
        let img = mu.apply(&a, &a.arrow(0));
        let expect = a.path(0, 1).add(&a.path(0, 2));
        assert_eq!(img, expect);
        // mu fixes nothing else to check here (single arrow); on a larger
        // algebra mu fixes b_i for i ≠ 0:
        let b = Nakayama::new(2, 6, FieldSpec::Rational);
        let c = ScalingSeq::new(vec![b.field.from_i64(2)]).unwrap();
        let mu = b.scaling(&c).unwrap();
        assert_eq!(mu.apply(&b, &b.arrow(1)), b.arrow(1));
        assert_eq!(mu.apply(&b, &b.arrow(0)), b.arrow(0).scale(&b.field.from_i64(2)));
    }

    #[test]
    fn scaling_composition_matches_sequence_product() {
        let f = FieldSpec::Prime(32003);
        for (verts, maxlen) in [(1, 3), (2, 6), (6, 4)] {
            let a = Nakayama::new(verts, maxlen, f);
            let mut rng = ChaCha8Rng::seed_from_u64(9);
            for _ in 0..20 {
                let c1 = ScalingSeq::random(f, a.depth(), &mut rng);
                let c2 = ScalingSeq::random(f, a.depth(), &mut rng);
                let lhs = a
                    .scaling(&c1)
                    .unwrap()
                    .then(&a, &a.scaling(&c2).unwrap());
                let rhs = a.scaling(&c1.mul(&c2).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "verts={verts} maxlen={maxlen}");
            }
        }
    }

    #[test]
    fn inner_decision() {
        let a = n42();
        // identity is inner (y = 1)
        assert!(a.is_inner(&a.identity_automorphism(), 1).is_some());
        // rotation is not inner on more than one vertex
        assert!(a.is_inner(&a.rotation(1), 1).is_none());
        // nontrivial scaling is not inner
        let b = Nakayama::new(1, 2, FieldSpec::Rational);
        let c = ScalingSeq::new(vec![b.field.one(), b.field.one()]).unwrap();
        assert!(b.is_inner(&b.scaling(&c).unwrap(), 1).is_none());
        // a genuine inner automorphism is recognized, with a valid witness
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let fp = Nakayama::new(6, 4, FieldSpec::Prime(32003));
        let sigma = fp.random_inner(&mut rng);
        let y = fp.is_inner(&sigma, 3).expect("inner recognized");
        for i in 0..fp.verts {
            let next = fp.v(i as i64 + 1);
            let lhs = fp.arrow(i as i64).compose(&fp, &y[i]);
            let rhs = y[next].compose(&fp, &sigma.images[i]);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rotation_scaling_commute_modulo_inner() {
        let f = FieldSpec::Prime(32003);
        let a = Nakayama::new(2, 6, f);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let c = ScalingSeq::random(f, a.depth(), &mut rng);
        let mu = a.scaling(&c).unwrap();
        let rho = a.rotation(1);
        // d = (mu then rho) ∘ (rho then mu)⁻¹ should be inner
        let fwd = rho.then(&a, &mu);
        let bwd_inv = a
            .scaling(&c.inv())
            .unwrap()
            .then(&a, &a.rotation(-1));
        let d = fwd.then(&a, &bwd_inv);
        assert_eq!(d.shift, 0);
        assert!(a.is_inner(&d, 4).is_some());
    }

    #[test]
    fn normalize_roundtrip() {
        let f = FieldSpec::Prime(32003);
        for (verts, maxlen) in [(1, 3), (2, 6), (6, 4)] {
            let a = Nakayama::new(verts, maxlen, f);
            let mut rng = ChaCha8Rng::seed_from_u64(33);
            // identity normalizes to (0, id)
            let (l, c) = a.normalize_automorphism(&a.identity_automorphism(), 7).unwrap();
            assert_eq!(l, 0);
            assert!(c.is_identity());
            for round in 0..5 {
                let l_in = rng.gen_range(0..verts);
                let c_in = ScalingSeq::random(f, a.depth(), &mut rng);
                // mu_c applied first, then rho^l
                let aut = a
                    .scaling(&c_in)
                    .unwrap()
                    .then(&a, &a.rotation(l_in as i64));
                let (l_out, c_out) = a.normalize_automorphism(&aut, 100 + round).unwrap();
                assert_eq!(l_out, l_in);
                assert_eq!(c_out, c_in, "verts={verts}");
                // now precompose with a random inner automorphism
                let sigma = a.random_inner(&mut rng);
                let aut2 = sigma.then(&a, &aut);
                let (l2, c2) = a.normalize_automorphism(&aut2, 200 + round).unwrap();
                assert_eq!(l2, l_in);
                assert_eq!(c2, c_in);
            }
        }
    }
}
