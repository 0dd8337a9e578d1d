//! The based-algebra contract shared by the Nakayama algebra, the companion
//! algebra `R`, and smash products.
//!
//! An algebra here is presented through its projectives: a finite label set,
//! a finite basis of each hom space Hom(P_a, P_b), bilinear composition on
//! those bases, and a factorization of every basis morphism into arrow
//! generators. Everything downstream (complexes, equivalences, twists) is
//! generic over this trait.

use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;
use std::fmt::Debug;
use std::hash::Hash;

/// How a basis morphism decomposes into generators; used to extend
/// generator-level functor data to all morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factorization<L> {
    /// The identity of its endpoint.
    Identity,
    /// An arrow generator, given directly.
    Generator,
    /// `left ∘ right` through `mid`: `right` is a basis index in
    /// Hom(src, mid), `left` one in Hom(mid, dst).
    Composite { mid: L, left: usize, right: usize },
}

/// A formal linear combination of generator paths that evaluates to zero in
/// the algebra; the defining relations exposed for consistency checks.
///
/// Each path lists `(src, dst, basis index)` generator steps in application
/// order (first entry applied first). The empty path stands for the identity
/// of `src` (which must equal `dst` in that case).
#[derive(Clone, Debug)]
pub struct Relation<L> {
    pub src: L,
    pub dst: L,
    pub terms: Vec<(Scalar, Vec<(L, L, usize)>)>,
}

pub trait Algebra: Sync {
    type Label: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn field(&self) -> FieldSpec;
    /// Short name used in serialization headers.
    fn name(&self) -> String;
    fn projectives(&self) -> Vec<Self::Label>;
    fn hom_dim(&self, src: &Self::Label, dst: &Self::Label) -> usize;
    /// Coordinates of (basis g of Hom(mid,dst)) ∘ (basis f of Hom(src,mid))
    /// in the basis of Hom(src,dst).
    fn compose_basis(
        &self,
        src: &Self::Label,
        mid: &Self::Label,
        dst: &Self::Label,
        g: usize,
        f: usize,
    ) -> Vec<(usize, Scalar)>;
    /// Index of the identity in the basis of Hom(l, l).
    fn identity_pos(&self, l: &Self::Label) -> usize;
    fn factor_basis(&self, src: &Self::Label, dst: &Self::Label, idx: usize) -> Factorization<Self::Label>;
    /// The arrow generators as `(src, dst, basis index)` triples.
    fn generators(&self) -> Vec<(Self::Label, Self::Label, usize)>;
    /// The defining relations among the generators.
    fn relations(&self) -> Vec<Relation<Self::Label>>;
    fn label_text(&self, l: &Self::Label) -> String;
    /// Text of one basis element of Hom(src, dst) with a coefficient prefix.
    fn basis_term_text(&self, src: &Self::Label, dst: &Self::Label, idx: usize, coeff: &Scalar)
        -> String;
}

/// A morphism P_src → P_dst as dense coordinates in the hom basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morph<L> {
    pub src: L,
    pub dst: L,
    pub coeffs: Vec<Scalar>,
}

impl<L: Clone + Eq + Ord + Hash + Debug + Send + Sync> Morph<L> {
    pub fn zero<A: Algebra<Label = L>>(alg: &A, src: L, dst: L) -> Morph<L> {
        let dim = alg.hom_dim(&src, &dst);
        Morph {
            src,
            dst,
            coeffs: vec![alg.field().zero(); dim],
        }
    }

    pub fn identity<A: Algebra<Label = L>>(alg: &A, l: L) -> Morph<L> {
        let mut m = Morph::zero(alg, l.clone(), l.clone());
        m.coeffs[alg.identity_pos(&l)] = alg.field().one();
        m
    }

    pub fn basis<A: Algebra<Label = L>>(alg: &A, src: L, dst: L, idx: usize) -> Morph<L> {
        let mut m = Morph::zero(alg, src, dst);
        m.coeffs[idx] = alg.field().one();
        m
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Morph<L>) -> Morph<L> {
        assert_eq!(self.src, other.src);
        assert_eq!(self.dst, other.dst);
        Morph {
            src: self.src.clone(),
            dst: self.dst.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Morph<L> {
        Morph {
            src: self.src.clone(),
            dst: self.dst.clone(),
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn neg(&self) -> Morph<L> {
        Morph {
            src: self.src.clone(),
            dst: self.dst.clone(),
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    /// `self ∘ f` (apply `f` first).
    pub fn compose<A: Algebra<Label = L>>(&self, alg: &A, f: &Morph<L>) -> Morph<L> {
        assert_eq!(f.dst, self.src, "composition endpoint mismatch");
        let mut out = Morph::zero(alg, f.src.clone(), self.dst.clone());
        for (gi, gc) in self.coeffs.iter().enumerate() {
            if gc.is_zero() {
                continue;
            }
            for (fi, fc) in f.coeffs.iter().enumerate() {
                if fc.is_zero() {
                    continue;
                }
                let prod = gc.mul(fc);
                for (k, s) in alg.compose_basis(&f.src, &f.dst, &self.dst, gi, fi) {
                    out.coeffs[k] = out.coeffs[k].add(&s.mul(&prod));
                }
            }
        }
        out
    }

    /// Invertibility. Unit endomorphisms are exactly the elements with
    /// nonzero identity coefficient: every endomorphism ring in scope is
    /// local with nilpotent radical. Morphisms between distinct projectives
    /// may still be invertible (the algebra need not be basic); those are
    /// detected by solving for a two-sided inverse.
    pub fn is_unit<A: Algebra<Label = L>>(&self, alg: &A) -> bool {
        if self.src == self.dst {
            return !self.coeffs[alg.identity_pos(&self.src)].is_zero();
        }
        self.try_inverse(alg).is_some()
    }

    /// The two-sided inverse, if one exists: solves g∘self = id over the
    /// basis of Hom(dst, src) and checks self∘g = id.
    pub fn try_inverse<A: Algebra<Label = L>>(&self, alg: &A) -> Option<Morph<L>> {
        let field = alg.field();
        if self.is_zero() {
            return None;
        }
        let back = alg.hom_dim(&self.dst, &self.src);
        let end_src = alg.hom_dim(&self.src, &self.src);
        if back == 0 {
            return None;
        }
        let mut mat = Matrix::zero(field, end_src, back);
        for j in 0..back {
            let bj = Morph::basis(alg, self.dst.clone(), self.src.clone(), j);
            let col = bj.compose(alg, self);
            for i in 0..end_src {
                mat.set(i, j, col.coeffs[i].clone());
            }
        }
        let mut rhs = vec![field.zero(); end_src];
        rhs[alg.identity_pos(&self.src)] = field.one();
        let x = mat.solve(&rhs).expect("shape")?;
        let inv = Morph {
            src: self.dst.clone(),
            dst: self.src.clone(),
            coeffs: x,
        };
        if self.compose(alg, &inv) == Morph::identity(alg, self.dst.clone()) {
            Some(inv)
        } else {
            None
        }
    }

    /// Two-sided inverse of an invertible morphism.
    pub fn inverse<A: Algebra<Label = L>>(&self, alg: &A) -> Morph<L> {
        self.try_inverse(alg)
            .expect("inverse of a non-invertible morphism")
    }

    pub fn text<A: Algebra<Label = L>>(&self, alg: &A) -> String {
        let mut terms = Vec::new();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.push(alg.basis_term_text(&self.src, &self.dst, idx, c));
            }
        }
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        format!(
            "{}->{} : {}",
            alg.label_text(&self.src),
            alg.label_text(&self.dst),
            body
        )
    }
}

/// Evaluates a relation's terms under the algebra's own composition; sanity
/// oracle used by tests to confirm exposed relations really vanish.
pub fn eval_relation<A: Algebra>(alg: &A, rel: &Relation<A::Label>) -> Morph<A::Label> {
    let mut acc = Morph::zero(alg, rel.src.clone(), rel.dst.clone());
    for (coef, path) in &rel.terms {
        let mut cur = Morph::identity(alg, rel.src.clone());
        for (s, d, idx) in path {
            let step = Morph::basis(alg, s.clone(), d.clone(), *idx);
            cur = step.compose(alg, &cur);
        }
        assert_eq!(cur.dst, rel.dst, "relation path endpoint mismatch");
        acc = acc.add(&cur.scale(coef));
    }
    acc
}
