//! Machine-checked certificate suites.
//!
//! Every suite maps a parameter configuration to a list of [`Check`]
//! records: a stable check id, the instance it was evaluated on, a
//! three-valued verdict, and a digest of the witness data (isomorphism
//! chain maps, minimized shapes, counterexample counts). Verdicts are
//! conservative: a search that exhausts its budget reports `Unknown`,
//! which never counts as a pass.

use crate::algebra::{Algebra, Morph};
use crate::braid::{
    affine_relators, group_action, is_trivial_word, phi_n, psi_embed, semidirect_eq,
    semidirect_mul, ActionKind, BraidWord, FreeWord, Kind, Letter, SemidirectElement,
};
use crate::complex::{ChainMap, Complex};
use crate::field::FieldSpec;
use crate::homotopy::{find_iso, hom_space, homotopic, is_homotopy_iso, IsoResult};
use crate::nakayama::{Nakayama, NakayamaError, NakayamaSpec};
use crate::par;
use crate::ralg::{omega_equivalence, r_path_dimension, twist_object, twist_word, RAlgebra};
use crate::scaling::ScalingSeq;
use crate::smash::{ct_tilting_functor, SmashSpec};
use crate::tilting::{
    f_theta_object, standard_equivalence, apply_word, StdKind, Word,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;

/// Parameters of one verification run.
#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    pub m: usize,
    pub n: usize,
    pub t: usize,
    pub field: FieldSpec,
    pub seed: u64,
    /// Random-combination budget of the isomorphism search.
    pub budget: usize,
}

impl RunConfig {
    pub fn new(
        m: usize,
        n: usize,
        t: usize,
        field: FieldSpec,
        seed: u64,
        budget: usize,
    ) -> Result<RunConfig, NakayamaError> {
        NakayamaSpec::new(m, n, t)?;
        Ok(RunConfig {
            m,
            n,
            t,
            field,
            seed,
            budget,
        })
    }

    fn spec(&self) -> NakayamaSpec {
        NakayamaSpec::new(self.m, self.n, self.t).expect("validated at construction")
    }

    /// The base algebra N(nm, tm).
    pub fn algebra(&self) -> Nakayama {
        self.spec().algebra(self.field)
    }

    fn prefix(&self) -> String {
        format!("m={} n={} t={}", self.m, self.n, self.t)
    }

    /// Deterministic per-instance seed.
    fn subseed(&self, id: &str, instance: &str) -> u64 {
        fnv64(&format!("{}|{}|{}", id, instance, self.seed))
    }
}

/// The configurations exercised by a default full run: the smallest
/// parameter triples with gcd(n, t) = 1 covering the t = 1 branch, the
/// t > 1 branch, and the n = 1 degeneracy for both m = 2 and m = 3.
pub fn default_matrix() -> Vec<(usize, usize, usize)> {
    vec![(2, 3, 1), (3, 2, 1), (2, 3, 2), (3, 1, 2), (2, 1, 3)]
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

impl Verdict {
    pub fn text(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Unknown => "unknown",
        }
    }

    fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// One certificate record.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: &'static str,
    pub instance: String,
    pub verdict: Verdict,
    pub witness: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Stable line-oriented record form.
    pub fn record(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.id,
            self.instance,
            self.verdict.text(),
            self.witness
        )
    }
}

/// FNV-1a, used for witness digests and per-instance seeds.
pub fn fnv64(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn digest(s: &str) -> String {
    format!("{:016x}", fnv64(s))
}

fn chain_map_text<A: Algebra>(alg: &A, f: &ChainMap<A>) -> String {
    let mut out = String::new();
    for mat in &f.maps {
        for row in mat {
            for e in row {
                out.push_str(&e.text(alg));
                out.push(';');
            }
        }
        out.push('|');
    }
    out
}

/// Builds a check from an isomorphism search result; the witness digest
/// covers the found chain map or the two minimized shapes.
fn iso_check<A: Algebra>(
    alg: &A,
    id: &'static str,
    instance: String,
    lhs: &Complex<A>,
    rhs: &Complex<A>,
    res: &IsoResult<A>,
) -> Check {
    let verdict = match res {
        IsoResult::Witness(_) => Verdict::Pass,
        IsoResult::NonIso => Verdict::Fail,
        IsoResult::Unknown => Verdict::Unknown,
    };
    let witness = match res {
        IsoResult::Witness(f) => digest(&chain_map_text(alg, f)),
        _ => digest(&format!(
            "{:?}/{:?}",
            lhs.minimize(alg).graded_labels(),
            rhs.minimize(alg).graded_labels()
        )),
    };
    Check {
        id,
        instance,
        verdict,
        witness,
    }
}

fn bool_check(id: &'static str, instance: String, pass: bool, witness: String) -> Check {
    Check {
        id,
        instance,
        verdict: Verdict::from_bool(pass),
        witness: digest(&witness),
    }
}

// ---------------------------------------------------------------------------
// braid: braid relations among the one-step equivalences H_l
// ---------------------------------------------------------------------------

/// For m > 2: H_l H_{l+1} H_l ≅ H_{l+1} H_l H_{l+1} on every projective,
/// plus the commutation of non-adjacent indices. For m = 2 the group is
/// free, so the suite instead certifies that the two triple composites are
/// distinguished by some projective.
pub fn suite_braid(cfg: &RunConfig) -> Vec<Check> {
    if cfg.m < 2 {
        return Vec::new();
    }
    let m = cfg.m;
    let alg = cfg.algebra();
    if m == 2 {
        return suite_braid_free(cfg);
    }
    let mut jobs: Vec<(&'static str, String, String, String)> = Vec::new();
    for l in 0..m {
        let l2 = (l + 1) % m;
        for p in 0..alg.verts {
            jobs.push((
                "braid.triple",
                format!("{} l={} P={}", cfg.prefix(), l, p),
                format!("H{l} H{l2} H{l} @{p}"),
                format!("H{l2} H{l} H{l2} @{p}"),
            ));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            let d = (j - i) % m;
            if d == 1 || d == m - 1 {
                continue;
            }
            for p in 0..alg.verts {
                jobs.push((
                    "braid.commute",
                    format!("{} i={} j={} P={}", cfg.prefix(), i, j, p),
                    format!("H{i} H{j} @{p}"),
                    format!("H{j} H{i} @{p}"),
                ));
            }
        }
    }
    let cfg = *cfg;
    par::map_collect(jobs, move |(id, instance, lw, rw)| {
        let alg = cfg.algebra();
        let (lw, p) = split_job(&lw);
        let (rw, _) = split_job(&rw);
        let stalk = Complex::<Nakayama>::stalk(p, 0);
        let word_l = Word::parse(&lw, cfg.field).expect("well-formed word");
        let word_r = Word::parse(&rw, cfg.field).expect("well-formed word");
        let lhs = apply_word(&alg, cfg.m, &word_l, &stalk).expect("word applies");
        let rhs = apply_word(&alg, cfg.m, &word_r, &stalk).expect("word applies");
        let res = find_iso(&alg, &lhs, &rhs, cfg.subseed(id, &instance), cfg.budget);
        iso_check(&alg, id, instance, &lhs, &rhs, &res)
    })
}

/// At m = 2 the affine braid group on two strands is free, so the two
/// triple composites must define different self-equivalences: for each l
/// some projective has provably non-isomorphic images.
fn suite_braid_free(cfg: &RunConfig) -> Vec<Check> {
    let alg = cfg.algebra();
    let jobs: Vec<usize> = vec![0, 1];
    let verts = alg.verts;
    let cfg = *cfg;
    par::map_collect(jobs, move |l| {
        let alg = cfg.algebra();
        let id = "braid.free";
        let instance = format!("{} l={}", cfg.prefix(), l);
        let l2 = (l + 1) % 2;
        let mut separated = None;
        for p in 0..verts {
            let stalk = Complex::<Nakayama>::stalk(p, 0);
            let w1 = Word::parse(&format!("H{l} H{l2} H{l}"), cfg.field).expect("word");
            let w2 = Word::parse(&format!("H{l2} H{l} H{l2}"), cfg.field).expect("word");
            let lhs = apply_word(&alg, 2, &w1, &stalk).expect("word applies");
            let rhs = apply_word(&alg, 2, &w2, &stalk).expect("word applies");
            if matches!(
                find_iso(&alg, &lhs, &rhs, cfg.subseed(id, &instance), cfg.budget),
                IsoResult::NonIso
            ) {
                separated = Some(p);
                break;
            }
        }
        bool_check(
            id,
            instance,
            separated.is_some(),
            format!("separating projective:{separated:?}"),
        )
    })
}

fn split_job(text: &str) -> (String, usize) {
    let (word, p) = text.split_once('@').expect("job text carries a projective");
    (word.trim().to_string(), p.trim().parse().expect("index"))
}

// ---------------------------------------------------------------------------
// rot: the rotation composite at t = 1
// ---------------------------------------------------------------------------

/// Q_{m−1}² H_{m−2} … H_0 (P_i) ≅ P_{i−m−1}, with explicit witness maps.
pub fn suite_rot(cfg: &RunConfig) -> Vec<Check> {
    if cfg.m < 2 || cfg.t != 1 {
        return Vec::new();
    }
    let m = cfg.m;
    let mut word = (0..m - 1).map(|l| format!("H{l}")).collect::<Vec<_>>();
    word.push(format!("Q{}", m - 1));
    word.push(format!("Q{}", m - 1));
    let word_text = word.join(" ");
    let alg = cfg.algebra();
    let jobs: Vec<usize> = (0..alg.verts).collect();
    let cfg = *cfg;
    let wt = word_text;
    par::map_collect(jobs, move |i| {
        let alg = cfg.algebra();
        let id = "rot.composite";
        let instance = format!("{} P={}", cfg.prefix(), i);
        let word = Word::parse(&wt, cfg.field).expect("well-formed word");
        let lhs = apply_word(&alg, cfg.m, &word, &Complex::stalk(i, 0)).expect("word applies");
        let target = alg.v(i as i64 - cfg.m as i64 - 1);
        let rhs = Complex::<Nakayama>::stalk(target, 0);
        let res = find_iso(&alg, &lhs, &rhs, cfg.subseed(id, &instance), cfg.budget);
        iso_check(&alg, id, instance, &lhs, &rhs, &res)
    })
}

// ---------------------------------------------------------------------------
// omega: compatibility of the companion-algebra twists with H and Q
// ---------------------------------------------------------------------------

/// F_ω H_{m−i}(P_j) ≅ T_i F_ω(P_j) for 1 < i ≤ m and
/// F_ω Q_{m−1}(P_j)[1] ≅ T_1 F_ω(P_j), at t = 1.
pub fn suite_omega(cfg: &RunConfig) -> Vec<Check> {
    if cfg.m < 2 || cfg.t != 1 {
        return Vec::new();
    }
    let m = cfg.m;
    let nak = cfg.algebra();
    let jobs: Vec<(usize, usize)> = (1..=m)
        .flat_map(|i| (0..nak.verts).map(move |j| (i, j)))
        .collect();
    let cfg = *cfg;
    par::map_collect(jobs, move |(i, j)| {
        let nak = cfg.algebra();
        let r = RAlgebra::new(cfg.m, cfg.n, cfg.field).expect("m >= 2");
        let s = omega_equivalence(&nak, &r).expect("equivalence data builds");
        let pj = Complex::<Nakayama>::stalk(j, 0);
        let f_pj = f_theta_object(&r, &s, &pj).expect("image computes");
        let (id, lhs) = if i > 1 {
            let h = standard_equivalence(&nak, m, (m - i) as i64, StdKind::H)
                .expect("valid index");
            let hp = f_theta_object(&nak, &h, &pj).expect("image computes");
            (
                "omega.twist",
                f_theta_object(&r, &s, &hp).expect("image computes"),
            )
        } else {
            let q = standard_equivalence(&nak, m, (m - 1) as i64, StdKind::Q)
                .expect("valid index");
            let qp = f_theta_object(&nak, &q, &pj).expect("image computes");
            (
                "omega.shift",
                f_theta_object(&r, &s, &qp)
                    .expect("image computes")
                    .shift(&r, 1),
            )
        };
        let rhs = twist_object(&r, i, &f_pj);
        let instance = format!("{} i={} P={}", cfg.prefix(), i, j);
        let res = find_iso(&r, &lhs, &rhs, cfg.subseed(id, &instance), cfg.budget);
        iso_check(&r, id, instance, &lhs, &rhs, &res)
    })
}

// ---------------------------------------------------------------------------
// center: (T_m … T_1)^{m+1} against rotation and shift
// ---------------------------------------------------------------------------

/// (T_m … T_1)^{m+1}(P_{i,j}) ≅ τ^{m+1}(P_{i,j})[2m] over the companion
/// algebra, at t = 1.
pub fn suite_center(cfg: &RunConfig) -> Vec<Check> {
    if cfg.m < 2 || cfg.t != 1 {
        return Vec::new();
    }
    let r = RAlgebra::new(cfg.m, cfg.n, cfg.field).expect("m >= 2");
    let jobs = r.projectives();
    let cfg = *cfg;
    par::map_collect(jobs, move |p| {
        let r = RAlgebra::new(cfg.m, cfg.n, cfg.field).expect("m >= 2");
        let m = cfg.m;
        let word: Vec<usize> = (1..=m).collect::<Vec<_>>().repeat(m + 1);
        let id = "center.equation";
        let instance = format!("{} P=({},{})", cfg.prefix(), p.0, p.1);
        let lhs = twist_word(&r, &word, &Complex::stalk(p, 0));
        let rhs = r
            .rotate_complex(&Complex::stalk(p, 0), (m + 1) as i64)
            .shift(&r, 2 * m as i64);
        let res = find_iso(&r, &lhs, &rhs, cfg.subseed(id, &instance), cfg.budget);
        iso_check(&r, id, instance, &lhs, &rhs, &res)
    })
}

// ---------------------------------------------------------------------------
// picard: the scaling/rotation automorphism group
// ---------------------------------------------------------------------------

fn random_scaling(alg: &Nakayama, rng: &mut StdRng) -> ScalingSeq {
    ScalingSeq::random(alg.field(), alg.depth(), rng)
}

/// Scaling products, the explicit conjugator between ρμ_c and μ_c ρ,
/// non-innerness of nontrivial ρ^l μ_c, and normal-form round trips.
pub fn suite_picard(cfg: &RunConfig) -> Vec<Check> {
    let a = cfg.algebra();
    let mut out = Vec::new();

    // mu_c mu_c' = mu_{c c'} exactly
    {
        let id = "picard.mu-product";
        let instance = format!("{} samples=10", cfg.prefix());
        let mut rng = StdRng::seed_from_u64(cfg.subseed(id, &instance));
        let mut pass = true;
        for _ in 0..10 {
            let c1 = random_scaling(&a, &mut rng);
            let c2 = random_scaling(&a, &mut rng);
            let lhs = a
                .scaling(&c1)
                .expect("depth matches")
                .then(&a, &a.scaling(&c2).expect("depth matches"));
            let rhs = a
                .scaling(&c1.mul(&c2).expect("equal depths"))
                .expect("depth matches");
            pass &= lhs == rhs;
        }
        out.push(bool_check(id, instance, pass, format!("exact:{pass}")));
    }

    // rho mu_c = sigma ∘ (mu_c rho) with sigma = conjugation by 1 − e_1 + u_c
    {
        let id = "picard.rho-mu-conjugate";
        let instance = format!("{} samples=10", cfg.prefix());
        let mut rng = StdRng::seed_from_u64(cfg.subseed(id, &instance));
        let mut pass = true;
        for _ in 0..10 {
            let c = random_scaling(&a, &mut rng);
            let mut y: Vec<Morph<usize>> = (0..a.verts)
                .map(|i| Morph::identity(&a, i))
                .collect();
            y[a.v(1)] = a.u_elem(&c);
            let sigma = a.inner_automorphism(&y);
            let lhs = a
                .scaling(&c)
                .expect("depth matches")
                .then(&a, &a.rotation(1));
            let rhs = a
                .rotation(1)
                .then(&a, &a.scaling(&c).expect("depth matches"))
                .then(&a, &sigma);
            pass &= lhs == rhs;
        }
        out.push(bool_check(id, instance, pass, format!("exact:{pass}")));
    }

    // rho^l mu_c is never inner for (l, c) != (0, id)
    {
        let id = "picard.injectivity";
        let instance = format!("{} samples=50", cfg.prefix());
        let seed = cfg.subseed(id, &instance);
        let mut rng = StdRng::seed_from_u64(seed);
        let mut pass = true;
        let mut tried = 0;
        while tried < 50 {
            let l = rng.gen_range(0..a.verts.max(1));
            let c = random_scaling(&a, &mut rng);
            if l == 0 && c.is_identity() {
                continue;
            }
            // on a one-vertex quiver every rotation is trivial
            if a.verts == 1 && c.is_identity() {
                continue;
            }
            let aut = a
                .scaling(&c)
                .expect("depth matches")
                .then(&a, &a.rotation(l as i64));
            pass &= a.is_inner(&aut, seed ^ tried as u64).is_none();
            tried += 1;
        }
        out.push(bool_check(id, instance, pass, format!("noninner:{pass}")));
    }

    // normal form recovers (l, c) after multiplying by a random inner
    {
        let id = "picard.normal-form";
        let instance = format!("{} samples=10", cfg.prefix());
        let seed = cfg.subseed(id, &instance);
        let mut rng = StdRng::seed_from_u64(seed);
        let mut pass = true;
        for round in 0..10u64 {
            let l_in = rng.gen_range(0..a.verts);
            let c_in = random_scaling(&a, &mut rng);
            let aut = a
                .scaling(&c_in)
                .expect("depth matches")
                .then(&a, &a.rotation(l_in as i64));
            let sigma = a.random_inner(&mut rng);
            let aut2 = sigma.then(&a, &aut);
            match a.normalize_automorphism(&aut2, seed ^ round) {
                Ok((l_out, c_out)) => {
                    pass &= l_out == l_in && c_out.coeffs() == c_in.coeffs();
                }
                Err(_) => pass = false,
            }
        }
        out.push(bool_check(id, instance, pass, format!("roundtrip:{pass}")));
    }
    out
}

// ---------------------------------------------------------------------------
// smash: the cyclic-group-compatible tilting functor
// ---------------------------------------------------------------------------

/// Both compatibility axioms of (H̄_l, ψ_l) for every l, and the composite
/// identity F_{θ̄_l}(P̃_i) ≅ H̃_l H̃_{l+m} … H̃_{l+(t−1)m}(P̃_i).
pub fn suite_smash(cfg: &RunConfig) -> Vec<Check> {
    if cfg.m < 2 || cfg.t < 2 {
        return Vec::new();
    }
    let (m, t) = (cfg.m, cfg.t);
    let tm = t * m;
    let mut out = Vec::new();
    let spec = SmashSpec::new(cfg.m, cfg.n, cfg.t).expect("coprime parameters");
    for l in 0..m as i64 {
        let id = "smash.axioms";
        let instance = format!("{} l={}", cfg.prefix(), l);
        let ok = ct_tilting_functor(&spec, cfg.field, l).is_ok();
        out.push(bool_check(id, instance, ok, format!("axioms:{ok}")));
    }
    let alg = spec.base.extended_algebra(cfg.field);
    let jobs: Vec<(i64, usize)> = (0..m as i64)
        .flat_map(|l| (0..alg.verts).map(move |i| (l, i)))
        .collect();
    let cfg = *cfg;
    out.extend(par::map_collect(jobs, move |(l, i)| {
        let spec = SmashSpec::new(cfg.m, cfg.n, cfg.t).expect("coprime parameters");
        let alg = spec.base.extended_algebra(cfg.field);
        let id = "smash.composite";
        let instance = format!("{} l={} P={}", cfg.prefix(), l, i);
        match ct_tilting_functor(&spec, cfg.field, l) {
            Ok(ct) => {
                let stalk = Complex::<Nakayama>::stalk(i, 0);
                let lhs = f_theta_object(&alg, &ct.theta, &stalk).expect("image computes");
                let word_text = (0..t)
                    .rev()
                    .map(|k| format!("H{}", (l as usize + k * m) % tm))
                    .collect::<Vec<_>>()
                    .join(" ");
                let word = Word::parse(&word_text, cfg.field).expect("well-formed word");
                let rhs = apply_word(&alg, tm, &word, &stalk).expect("word applies");
                let res = find_iso(&alg, &lhs, &rhs, cfg.subseed(id, &instance), cfg.budget);
                iso_check(&alg, id, instance, &lhs, &rhs, &res)
            }
            Err(_) => bool_check(id, instance, false, "functor failed".into()),
        }
    }));
    out
}

// ---------------------------------------------------------------------------
// groups: scaling-group axioms, braid actions, embeddings, semidirect law
// ---------------------------------------------------------------------------

fn random_affine_word(rng: &mut StdRng, m: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(0..m);
            let e = if rng.gen_bool(0.5) { 1 } else { -1 };
            (Letter::S(i), e)
        })
        .collect();
    BraidWord::new(Kind::Affine(m), letters).expect("indices in range")
}

/// Group-theoretic certificates: twisted scaling-sequence group axioms,
/// free-group actions respecting the braid relators, the type-A and cover
/// embeddings, and the semidirect-product law.
pub fn suite_groups(cfg: &RunConfig) -> Vec<Check> {
    let a = cfg.algebra();
    let mut out = Vec::new();

    // the twisted product on scaling sequences is a group
    {
        let id = "groups.scaling-axioms";
        let instance = format!("{} depth={} samples=1000", cfg.prefix(), a.depth());
        let mut rng = StdRng::seed_from_u64(cfg.subseed(id, &instance));
        let e = ScalingSeq::identity(cfg.field, a.depth());
        let mut pass = true;
        for _ in 0..1000 {
            let c1 = random_scaling(&a, &mut rng);
            let c2 = random_scaling(&a, &mut rng);
            let c3 = random_scaling(&a, &mut rng);
            let assoc = c1
                .mul(&c2)
                .and_then(|x| x.mul(&c3))
                .expect("equal depths")
                == c2.mul(&c3).and_then(|x| c1.mul(&x)).expect("equal depths");
            let unit = c1.mul(&e).expect("equal depths") == c1
                && e.mul(&c1).expect("equal depths") == c1;
            let inv = c1.mul(&c1.inv()).expect("equal depths").is_identity()
                && c1.inv().mul(&c1).expect("equal depths").is_identity();
            pass &= assoc && unit && inv;
        }
        out.push(bool_check(id, instance, pass, format!("axioms:{pass}")));
    }

    // the free-group action respects every relator
    for mm in [2usize, 3, 4, 6] {
        let id = "groups.affine-action";
        let instance = format!("rank={mm}");
        let pass = if mm == 2 {
            // rank 2 is free: relator set empty, and a commutator must
            // remain nontrivial under the reduction oracle
            let w = BraidWord::parse(Kind::Affine(2), "s0 s1 s0^-1 s1^-1").unwrap();
            is_trivial_word(&w) == Ok(false)
        } else {
            affine_relators(mm)
                .iter()
                .all(|rel| is_trivial_word(rel) == Ok(true))
        };
        out.push(bool_check(id, instance, pass, format!("relators:{pass}")));
    }

    // the affine-to-type-A embedding kills every relator
    for nn in [3usize, 4, 5, 6] {
        let id = "groups.phi";
        let instance = format!("N={nn}");
        let pass = affine_relators(nn).iter().all(|rel| {
            phi_n(rel, nn)
                .map(|img| is_trivial_word(&img) == Ok(true))
                .unwrap_or(false)
        });
        out.push(bool_check(id, instance, pass, format!("relators:{pass}")));
    }

    // the cover embedding kills every relator
    for (mm, tt) in [(3usize, 2usize), (4, 2), (5, 2), (6, 2), (3, 3), (4, 3), (5, 3), (6, 3)] {
        let id = "groups.psi";
        let instance = format!("m={mm} t={tt}");
        let pass = affine_relators(mm).iter().all(|rel| {
            psi_embed(rel, tt)
                .map(|img| is_trivial_word(&img) == Ok(true))
                .unwrap_or(false)
        });
        out.push(bool_check(id, instance, pass, format!("relators:{pass}")));
    }

    // the cover embedding preserves nontriviality on samples
    {
        let id = "groups.psi-injective";
        let instance = "samples=100 maxlen=8".to_string();
        let mut rng = StdRng::seed_from_u64(cfg.subseed(id, &instance));
        let mut pass = true;
        let mut checked = 0;
        while checked < 100 {
            let mm = [2usize, 3, 4][rng.gen_range(0..3)];
            let tt = [2usize, 3][rng.gen_range(0..2)];
            let len = rng.gen_range(1..=8);
            let g = random_affine_word(&mut rng, mm, len);
            if is_trivial_word(&g) == Ok(true) {
                continue;
            }
            let img = psi_embed(&g, tt).expect("affine word");
            pass &= is_trivial_word(&img) == Ok(false);
            checked += 1;
        }
        out.push(bool_check(id, instance, pass, format!("nontrivial:{pass}")));
    }

    // associativity of the semidirect product on samples
    {
        let id = "groups.semidirect";
        let instance = "samples=100".to_string();
        let mut rng = StdRng::seed_from_u64(cfg.subseed(id, &instance));
        let mut pass = true;
        for _ in 0..100 {
            let mm = [2usize, 3][rng.gen_range(0..2)];
            let nn = rng.gen_range(1..=4usize);
            let el = |rng: &mut StdRng| {
                let len = rng.gen_range(0..5);
                let h = rng.gen_range(0..(nn * mm) as i64);
                SemidirectElement::new(mm, nn, random_affine_word(rng, mm, len), h)
            };
            let x = el(&mut rng);
            let y = el(&mut rng);
            let z = el(&mut rng);
            let l = semidirect_mul(&semidirect_mul(&x, &y), &z);
            let r = semidirect_mul(&x, &semidirect_mul(&y, &z));
            pass &= semidirect_eq(&l, &r) == Ok(true);
        }
        out.push(bool_check(id, instance, pass, format!("assoc:{pass}")));
    }

    // the action formulas stay consistent on one worked sample:
    // s_0 sends y_0 to y_1 in the rank-2 affine action
    {
        let id = "groups.action-sample";
        let instance = "affine rank=2 s0(y0)".to_string();
        let s0 = BraidWord::parse(Kind::Affine(2), "s0").unwrap();
        let y0 = FreeWord::gen(3, 0, 1);
        let got = group_action(ActionKind::Affine(2), &s0, &y0);
        let pass = got == Ok(FreeWord::gen(3, 1, 1));
        out.push(bool_check(id, instance, pass, format!("image:{pass}")));
    }
    out
}

// ---------------------------------------------------------------------------
// tilting: necessary endomorphism conditions on the images
// ---------------------------------------------------------------------------

/// The direct sum H of all images of a one-step equivalence satisfies
/// Hom(H, H[d]) = 0 for d ≠ 0 and dim End(H) = nm(tm+1).
pub fn suite_tilting(cfg: &RunConfig) -> Vec<Check> {
    if cfg.m < 2 {
        return Vec::new();
    }
    let mut jobs: Vec<(StdKind, i64)> = (0..cfg.m as i64).map(|l| (StdKind::H, l)).collect();
    if cfg.t == 1 {
        jobs.extend((0..cfg.m as i64).map(|l| (StdKind::Q, l)));
    }
    let cfg = *cfg;
    par::map_collect(jobs, move |(kind, l)| {
        let a = cfg.algebra();
        let id = match kind {
            StdKind::H => "tilting.h-conditions",
            StdKind::Q => "tilting.q-conditions",
        };
        let instance = format!("{} l={}", cfg.prefix(), l);
        let modulus = match kind {
            StdKind::H => cfg.m,
            StdKind::Q => a.maxlen,
        };
        match standard_equivalence(&a, modulus, l, kind) {
            Ok(s) => {
                let tc = s.tilting_complex(&a, &a);
                let mut pass = true;
                let mut dims = Vec::new();
                for d in -3i64..=3 {
                    let dim = hom_space(&a, &tc, &tc, d).len();
                    dims.push(dim);
                    if d == 0 {
                        pass &= dim == a.dim();
                    } else {
                        pass &= dim == 0;
                    }
                }
                bool_check(id, instance, pass, format!("dims:{dims:?}"))
            }
            Err(_) => bool_check(id, instance, false, "equivalence failed".into()),
        }
    })
}

// ---------------------------------------------------------------------------
// natural: rotation shifts the index, and the explicit scaling witness
// ---------------------------------------------------------------------------

/// ρ H_i ≅ H_{i+1} ρ on every projective, and the explicit natural
/// isomorphism (identity everywhere, u_c at the distinguished vertex)
/// between the two composites of H_0 with a scaling automorphism.
pub fn suite_natural(cfg: &RunConfig) -> Vec<Check> {
    if cfg.m < 2 {
        return Vec::new();
    }
    let m = cfg.m;
    let alg = cfg.algebra();
    let jobs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..alg.verts).map(move |p| (i, p)))
        .collect();
    let cfg2 = *cfg;
    let mut out = par::map_collect(jobs, move |(i, p)| {
        let alg = cfg2.algebra();
        let id = "natural.rho-shift";
        let instance = format!("{} i={} P={}", cfg2.prefix(), i, p);
        let stalk = Complex::<Nakayama>::stalk(p, 0);
        let lw = Word::parse(&format!("H{i} rho"), cfg2.field).expect("well-formed word");
        let rw = Word::parse(&format!("rho H{}", (i + 1) % m), cfg2.field)
            .expect("well-formed word");
        let lhs = apply_word(&alg, cfg2.m, &lw, &stalk).expect("word applies");
        let rhs = apply_word(&alg, cfg2.m, &rw, &stalk).expect("word applies");
        let res = find_iso(&alg, &lhs, &rhs, cfg2.subseed(id, &instance), cfg2.budget);
        iso_check(&alg, id, instance, &lhs, &rhs, &res)
    });
    out.push(natural_scaling_witness(cfg));
    out
}

/// Builds the two modified equivalence data sets
///   S  (for μ_c ∘ H_0):  S(β_0)   = S_{θ_0}(β_0) ∘ u_c,
///   S̃ (for H_0 ∘ μ_c):  S̃(β_{−1}) = u_c ∘ S_{θ_0}(β_{−1}),
/// validates both, and certifies the natural isomorphism with components
/// α_i = Id for i ≠ 0 and α_0 = u_c on the stalk of P_1.
fn natural_scaling_witness(cfg: &RunConfig) -> Check {
    let id = "natural.scaling-witness";
    let instance = format!("{} l=0", cfg.prefix());
    let a = cfg.algebra();
    let mut rng = StdRng::seed_from_u64(cfg.subseed(id, &instance));
    let c = random_scaling(&a, &mut rng);
    let theta = match standard_equivalence(&a, cfg.m, 0, StdKind::H) {
        Ok(s) => s,
        Err(_) => return bool_check(id, instance, false, "base equivalence failed".into()),
    };
    // u_c as a chain map on the stalk of P_1 = θ_0(P_0)
    let stalk1 = theta.obj[&0].clone();
    let u_chain = ChainMap::new(
        &a,
        stalk1.clone(),
        stalk1.clone(),
        vec![vec![vec![a.u_elem(&c)]]],
    )
    .expect("endomorphism of a stalk");
    let last = a.verts - 1;
    let mut arrows_s = BTreeMap::new();
    let mut arrows_st = BTreeMap::new();
    for (src, dst, idx) in a.generators() {
        let base = theta.image_basis(&src, &dst, idx).clone();
        let img_s = if src == 0 {
            base.compose(&a, &u_chain)
        } else {
            base.clone()
        };
        let img_st = if src == last {
            u_chain.compose(&a, &base)
        } else {
            base.clone()
        };
        arrows_s.insert((src, dst, idx), img_s);
        arrows_st.insert((src, dst, idx), img_st);
    }
    let obj: BTreeMap<usize, Complex<Nakayama>> = theta.obj.clone();
    let s = match crate::tilting::EquivData::new(&a, &a, obj.clone(), arrows_s) {
        Ok(s) => s,
        Err(_) => return bool_check(id, instance, false, "S fails relations".into()),
    };
    let st = match crate::tilting::EquivData::new(&a, &a, obj, arrows_st) {
        Ok(s) => s,
        Err(_) => return bool_check(id, instance, false, "S~ fails relations".into()),
    };
    // α_0 must itself be a homotopy isomorphism
    let mut pass = is_homotopy_iso(&a, &u_chain);
    // naturality squares: α_{dst} ∘ S(β) ≃ S̃(β) ∘ α_{src}
    for (src, dst, idx) in a.generators() {
        let sb = s.image_basis(&src, &dst, idx).clone();
        let stb = st.image_basis(&src, &dst, idx).clone();
        let lhs = if dst == 0 {
            u_chain.compose(&a, &sb)
        } else {
            sb
        };
        let rhs = if src == 0 {
            stb.compose(&a, &u_chain)
        } else {
            stb
        };
        pass &= homotopic(&a, &lhs, &rhs);
    }
    bool_check(
        id,
        instance,
        pass,
        format!("alpha:{} c:{}", pass, c.text()),
    )
}

// ---------------------------------------------------------------------------
// oracles: independent cross-checks of the foundations
// ---------------------------------------------------------------------------

/// Companion-algebra dimensions against path enumeration, hom bases
/// against explicit path walks, and idempotence of minimization.
pub fn suite_oracles(cfg: &RunConfig) -> Vec<Check> {
    let mut out = Vec::new();

    for m in 2..=4 {
        for n in 1..=3 {
            let id = "oracle.companion-dim";
            let instance = format!("m={m} n={n}");
            let by_paths = r_path_dimension(m, n);
            let closed = 4 * m * n - 2 * n;
            let by_alg = RAlgebra::new(m, n, FieldSpec::Rational)
                .expect("m >= 2")
                .dim();
            let pass = by_paths == closed && by_alg == closed;
            out.push(bool_check(id, instance, pass, format!("dim:{by_paths}")));
        }
    }

    // hom bases of the cyclic algebra against an explicit arrow walk
    {
        let a = cfg.algebra();
        let id = "oracle.hom-enumeration";
        let instance = cfg.prefix();
        let mut pass = true;
        for i in 0..a.verts {
            for j in 0..a.verts {
                let mut lens = Vec::new();
                let mut end = i;
                if end == j {
                    lens.push(0);
                }
                for l in 1..=a.maxlen {
                    end = (end + 1) % a.verts;
                    if end == j {
                        lens.push(l);
                    }
                }
                pass &= lens == a.hom_lengths(i, j) && lens.len() == a.hom_dim(&i, &j);
            }
        }
        out.push(bool_check(id, instance, pass, format!("walk:{pass}")));
    }

    // minimization is idempotent on random cones
    {
        let a = cfg.algebra();
        let id = "oracle.minimize-idempotent";
        let instance = format!("{} trials=200", cfg.prefix());
        let mut rng = StdRng::seed_from_u64(cfg.subseed(id, &instance));
        let mut pass = true;
        for _ in 0..200 {
            let rand_sum = |rng: &mut StdRng| {
                let k = rng.gen_range(1..=3);
                let mut x = Complex::<Nakayama>::zero();
                for _ in 0..k {
                    let p = rng.gen_range(0..a.verts);
                    let d = rng.gen_range(-2..=2i64);
                    x = x.direct_sum(&a, &Complex::stalk(p, d));
                }
                x
            };
            let x = rand_sum(&mut rng);
            let y = rand_sum(&mut rng);
            let basis = hom_space(&a, &x, &y, 0);
            let mut f = ChainMap::zero(&a, x.clone(), y.clone());
            for b in &basis {
                let s = a.field().random(&mut rng);
                f = f.add(&a, &b.scale(&s));
            }
            let cone = f.cone(&a);
            let m1 = cone.minimize(&a);
            let m2 = m1.minimize(&a);
            pass &= m1 == m2;
        }
        out.push(bool_check(id, instance, pass, format!("idempotent:{pass}")));
    }
    out
}

// ---------------------------------------------------------------------------
// driver
// ---------------------------------------------------------------------------

pub const SUITES: &[&str] = &[
    "braid", "rot", "omega", "center", "picard", "smash", "groups", "tilting", "natural",
    "oracles",
];

/// Runs one named suite at the given configuration. Suites whose
/// preconditions the configuration does not meet return no checks.
pub fn run_suite(name: &str, cfg: &RunConfig) -> Result<Vec<Check>, String> {
    match name {
        "braid" => Ok(suite_braid(cfg)),
        "rot" => Ok(suite_rot(cfg)),
        "omega" => Ok(suite_omega(cfg)),
        "center" => Ok(suite_center(cfg)),
        "picard" => Ok(suite_picard(cfg)),
        "smash" => Ok(suite_smash(cfg)),
        "groups" => Ok(suite_groups(cfg)),
        "tilting" => Ok(suite_tilting(cfg)),
        "natural" => Ok(suite_natural(cfg)),
        "oracles" => Ok(suite_oracles(cfg)),
        _ => Err(format!("unknown suite: {name}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(m: usize, n: usize, t: usize) -> RunConfig {
        RunConfig::new(m, n, t, FieldSpec::Rational, 7, 16).unwrap()
    }

    #[test]
    fn digests_are_stable() {
        assert_eq!(digest("abc"), digest("abc"));
        assert_ne!(digest("abc"), digest("abd"));
    }

    #[test]
    fn braid_suite_small() {
        // m = 3: the braid relation holds on every projective
        let checks = suite_braid(&cfg(3, 2, 1));
        assert!(!checks.is_empty());
        assert!(checks.iter().all(Check::passed), "{:?}", fails(&checks));
        // m = 2: the free group is certified by a separating projective
        let free = suite_braid(&cfg(2, 3, 1));
        assert_eq!(free.len(), 2);
        assert!(free.iter().all(|c| c.id == "braid.free" && c.passed()));
    }

    #[test]
    fn rot_suite_small() {
        let checks = suite_rot(&cfg(2, 3, 1));
        assert_eq!(checks.len(), 6);
        assert!(checks.iter().all(Check::passed), "{:?}", fails(&checks));
        // inapplicable configuration yields no checks
        assert!(suite_rot(&cfg(2, 3, 2)).is_empty());
    }

    #[test]
    fn picard_suite_small() {
        let checks = suite_picard(&cfg(2, 3, 1));
        assert_eq!(checks.len(), 4);
        assert!(checks.iter().all(Check::passed), "{:?}", fails(&checks));
    }

    #[test]
    fn groups_suite_small() {
        let checks = suite_groups(&cfg(2, 3, 1));
        assert!(checks.iter().all(Check::passed), "{:?}", fails(&checks));
    }

    #[test]
    fn oracle_suite_small() {
        let checks = suite_oracles(&cfg(2, 3, 1));
        assert!(checks.iter().all(Check::passed), "{:?}", fails(&checks));
    }

    #[test]
    fn natural_witness_small() {
        let c = natural_scaling_witness(&cfg(2, 3, 1));
        assert!(c.passed(), "{}", c.record());
    }

    #[test]
    fn records_are_deterministic() {
        let a = suite_rot(&cfg(2, 3, 1));
        let b = suite_rot(&cfg(2, 3, 1));
        let ra: Vec<String> = a.iter().map(Check::record).collect();
        let rb: Vec<String> = b.iter().map(Check::record).collect();
        assert_eq!(ra, rb);
    }

    fn fails(checks: &[Check]) -> Vec<String> {
        checks
            .iter()
            .filter(|c| !c.passed())
            .map(Check::record)
            .collect()
    }
}
