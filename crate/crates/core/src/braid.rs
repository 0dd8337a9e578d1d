//! Braid-group word apparatus: words in the type-A braid group B(A_n), the
//! affine braid group B(Ã_{n−1}), the extended group A_{m,n} with the two
//! central-ish generators r1, r2, and free groups; free-group actions used
//! as word-problem oracles; the embeddings φ_N (affine into type A) and ψ
//! (affine into the t-fold affine cover); and the semidirect product with
//! the rotation group C_{nm}.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("cannot parse word token `{0}`")]
    Parse(String),
    #[error("letter {0} outside the generator range of the presentation")]
    Range(String),
    #[error("operation undefined for this presentation")]
    Unsupported,
}

/// Presentation tag for a braid word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    /// B(A_n): generators s_1..s_n, braid and commuting relations.
    Artin(usize),
    /// B(Ã_{n−1}): generators s_i for i ∈ Z_n; free of rank 2 when n = 2.
    Affine(usize),
    /// A_{m,n}: generators s_1..s_m plus central r1 and order-n r2.
    Amn(usize, usize),
}

/// A single generator letter.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Letter {
    S(usize),
    R(usize),
}

/// A word in a tagged presentation: letters with (nonzero) exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidWord {
    pub kind: Kind,
    pub letters: Vec<(Letter, i64)>,
}

impl BraidWord {
    pub fn empty(kind: Kind) -> BraidWord {
        BraidWord {
            kind,
            letters: Vec::new(),
        }
    }

    fn check_letter(kind: Kind, l: Letter) -> Result<(), BraidError> {
        let ok = match (kind, l) {
            (Kind::Artin(n), Letter::S(i)) => (1..=n).contains(&i),
            (Kind::Affine(n), Letter::S(i)) => i < n,
            (Kind::Amn(m, _), Letter::S(i)) => (1..=m).contains(&i),
            (Kind::Amn(..), Letter::R(k)) => k == 1 || k == 2,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(BraidError::Range(format!("{:?}", l)))
        }
    }

    pub fn new(kind: Kind, letters: Vec<(Letter, i64)>) -> Result<BraidWord, BraidError> {
        for &(l, _) in &letters {
            Self::check_letter(kind, l)?;
        }
        let mut w = BraidWord { kind, letters };
        w.merge();
        Ok(w)
    }

    /// Merges adjacent equal letters and drops zero exponents (free
    /// reduction on the letter level; no relations are applied).
    fn merge(&mut self) {
        let mut out: Vec<(Letter, i64)> = Vec::with_capacity(self.letters.len());
        for &(l, e) in &self.letters {
            if e == 0 {
                continue;
            }
            if let Some(last) = out.last_mut() {
                if last.0 == l {
                    last.1 += e;
                    if last.1 == 0 {
                        out.pop();
                    }
                    continue;
                }
            }
            out.push((l, e));
        }
        self.letters = out;
    }

    pub fn mul(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.kind, other.kind, "presentation mismatch");
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        let mut w = BraidWord {
            kind: self.kind,
            letters,
        };
        w.merge();
        w
    }

    pub fn inv(&self) -> BraidWord {
        BraidWord {
            kind: self.kind,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(l, e)| (l, -e))
                .collect(),
        }
    }

    /// Parses `s0 s1^-1 r2^3` style text.
    pub fn parse(kind: Kind, text: &str) -> Result<BraidWord, BraidError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (head, exp) = match tok.split_once('^') {
                Some((h, e)) => (
                    h,
                    e.parse::<i64>().map_err(|_| BraidError::Parse(tok.into()))?,
                ),
                None => (tok, 1),
            };
            let letter = if let Some(num) = head.strip_prefix('s') {
                Letter::S(num.parse().map_err(|_| BraidError::Parse(tok.into()))?)
            } else if let Some(num) = head.strip_prefix('r') {
                Letter::R(num.parse().map_err(|_| BraidError::Parse(tok.into()))?)
            } else {
                return Err(BraidError::Parse(tok.into()));
            };
            letters.push((letter, exp));
        }
        BraidWord::new(kind, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(l, e)| {
                let name = match l {
                    Letter::S(i) => format!("s{}", i),
                    Letter::R(k) => format!("r{}", k),
                };
                if e == 1 {
                    name
                } else {
                    format!("{}^{}", name, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A word in a free group of the stated rank; the last generator is the
/// distinguished loop written `y`, the others are `y0..`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeWord {
    pub rank: usize,
    pub letters: Vec<(usize, i64)>,
}

impl FreeWord {
    pub fn empty(rank: usize) -> FreeWord {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn gen(rank: usize, i: usize, e: i64) -> FreeWord {
        assert!(i < rank);
        let mut w = FreeWord {
            rank,
            letters: vec![(i, e)],
        };
        w.reduce();
        w
    }

    /// Free reduction: the unique word without x·x⁻¹ factors.
    pub fn reduce(&mut self) {
        let mut out: Vec<(usize, i64)> = Vec::with_capacity(self.letters.len());
        for &(g, e) in &self.letters {
            if e == 0 {
                continue;
            }
            if let Some(last) = out.last_mut() {
                if last.0 == g {
                    last.1 += e;
                    if last.1 == 0 {
                        out.pop();
                    }
                    continue;
                }
            }
            out.push((g, e));
        }
        self.letters = out;
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        assert_eq!(self.rank, other.rank);
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        let mut w = FreeWord {
            rank: self.rank,
            letters,
        };
        w.reduce();
        w
    }

    pub fn inv(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses `y0 y1^-1 y` style text for the given rank.
    pub fn parse(rank: usize, text: &str) -> Result<FreeWord, BraidError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (head, exp) = match tok.split_once('^') {
                Some((h, e)) => (
                    h,
                    e.parse::<i64>().map_err(|_| BraidError::Parse(tok.into()))?,
                ),
                None => (tok, 1),
            };
            let g = if head == "y" {
                rank - 1
            } else if let Some(num) = head.strip_prefix('y') {
                let i: usize = num.parse().map_err(|_| BraidError::Parse(tok.into()))?;
                if i + 1 >= rank {
                    return Err(BraidError::Range(tok.into()));
                }
                i
            } else {
                return Err(BraidError::Parse(tok.into()));
            };
            letters.push((g, exp));
        }
        let mut w = FreeWord { rank, letters };
        w.reduce();
        Ok(w)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| {
                let name = if g + 1 == self.rank {
                    "y".to_string()
                } else {
                    format!("y{}", g)
                };
                if e == 1 {
                    name
                } else {
                    format!("{}^{}", name, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The free-group actions serving as word-problem oracles.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ActionKind {
    /// B(Ã_{m−1}) on F_{m+1}: generators y_0..y_{m−1} (loops around the
    /// punctures, indices cyclic mod m) and the distinguished loop y.
    Affine(usize),
    /// B(A_N) on F_{N+1}: same exchange formulas on y_0..y_N without
    /// wraparound; the distinguished generator is absent.
    Artin(usize),
}

impl ActionKind {
    pub fn rank(&self) -> usize {
        match self {
            ActionKind::Affine(m) => m + 1,
            ActionKind::Artin(n) => n + 1,
        }
    }

    /// Image of the free generator g under the braid generator s_i^{±1}:
    /// s_i sends y_i ↦ y_{i+1} and y_{i+1} ↦ y_{i+1}⁻¹ y_i y_{i+1},
    /// fixing everything else (including y).
    fn gen_image(&self, i: usize, positive: bool, g: usize) -> FreeWord {
        let rank = self.rank();
        let (a, b) = match self {
            // the two letters exchanged by s_i, cyclic mod m
            ActionKind::Affine(m) => (i % m, (i + 1) % m),
            // s_i (1 ≤ i ≤ N) exchanges y_{i−1} and y_i
            ActionKind::Artin(_) => (i - 1, i),
        };
        if positive {
            if g == a {
                FreeWord::gen(rank, b, 1)
            } else if g == b {
                // y_b⁻¹ y_a y_b
                FreeWord::gen(rank, b, -1)
                    .mul(&FreeWord::gen(rank, a, 1))
                    .mul(&FreeWord::gen(rank, b, 1))
            } else {
                FreeWord::gen(rank, g, 1)
            }
        } else if g == b {
            FreeWord::gen(rank, a, 1)
        } else if g == a {
            // y_a y_b y_a⁻¹
            FreeWord::gen(rank, a, 1)
                .mul(&FreeWord::gen(rank, b, 1))
                .mul(&FreeWord::gen(rank, a, -1))
        } else {
            FreeWord::gen(rank, g, 1)
        }
    }

    fn apply_gen(&self, i: usize, positive: bool, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::empty(self.rank());
        for &(g, e) in &w.letters {
            let img = self.gen_image(i, positive, g);
            let img = if e < 0 { img.inv() } else { img };
            for _ in 0..e.unsigned_abs() {
                out = out.mul(&img);
            }
        }
        out
    }
}

/// Applies a braid word to a free word through the chosen action, first
/// letter of the braid word acting last (usual function composition from
/// the right: the word `g h` acts as g∘h).
pub fn group_action(kind: ActionKind, g: &BraidWord, w: &FreeWord) -> Result<FreeWord, BraidError> {
    if w.rank != kind.rank() {
        return Err(BraidError::Range(format!("free rank {}", w.rank)));
    }
    match (kind, g.kind) {
        (ActionKind::Affine(m), Kind::Affine(n)) if m == n => {}
        (ActionKind::Artin(a), Kind::Artin(n)) if a == n => {}
        _ => return Err(BraidError::Unsupported),
    }
    let mut cur = w.clone();
    for &(l, e) in g.letters.iter().rev() {
        let i = match l {
            Letter::S(i) => i,
            Letter::R(_) => return Err(BraidError::Unsupported),
        };
        for _ in 0..e.unsigned_abs() {
            cur = kind.apply_gen(i, e > 0, &cur);
        }
    }
    Ok(cur)
}

/// Decides triviality of a word. For the affine group with two generators
/// (a free group) this is free reduction; otherwise the word is trivial
/// iff it fixes every generator of the faithful free-group action.
pub fn is_trivial_word(g: &BraidWord) -> Result<bool, BraidError> {
    match g.kind {
        Kind::Affine(2) => {
            // B(Ã_1) is free on s_0, s_1
            let mut w = FreeWord {
                rank: 2,
                letters: g
                    .letters
                    .iter()
                    .map(|&(l, e)| match l {
                        Letter::S(i) => (i, e),
                        Letter::R(_) => unreachable!("range-checked"),
                    })
                    .collect(),
            };
            w.reduce();
            Ok(w.is_empty())
        }
        Kind::Affine(m) if m >= 3 => {
            let action = ActionKind::Affine(m);
            fixes_all(action, g)
        }
        Kind::Artin(n) => {
            let action = ActionKind::Artin(n);
            fixes_all(action, g)
        }
        _ => Err(BraidError::Unsupported),
    }
}

fn fixes_all(action: ActionKind, g: &BraidWord) -> Result<bool, BraidError> {
    let rank = action.rank();
    for i in 0..rank {
        let y = FreeWord::gen(rank, i, 1);
        if group_action(action, g, &y)? != y {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The defining relators of B(Ã_{n−1}) for n ≥ 3: the braid relators
/// s_i s_{i+1} s_i (s_{i+1} s_i s_{i+1})⁻¹ around the cycle and the
/// commutators of non-adjacent generators.
pub fn affine_relators(n: usize) -> Vec<BraidWord> {
    assert!(n >= 3);
    let kind = Kind::Affine(n);
    let s = |i: usize, e: i64| (Letter::S(i % n), e);
    let mut out = Vec::new();
    for i in 0..n {
        out.push(
            BraidWord::new(
                kind,
                vec![s(i, 1), s(i + 1, 1), s(i, 1), s(i + 1, -1), s(i, -1), s(i + 1, -1)],
            )
            .unwrap(),
        );
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i) % n;
            if d != 1 && d != n - 1 {
                out.push(
                    BraidWord::new(kind, vec![s(i, 1), s(j, 1), s(i, -1), s(j, -1)]).unwrap(),
                );
            }
        }
    }
    out
}

/// The defining relators of B(A_n) on s_1..s_n.
pub fn artin_relators(n: usize) -> Vec<BraidWord> {
    let kind = Kind::Artin(n);
    let s = |i: usize, e: i64| (Letter::S(i), e);
    let mut out = Vec::new();
    for i in 1..n {
        out.push(
            BraidWord::new(
                kind,
                vec![s(i, 1), s(i + 1, 1), s(i, 1), s(i + 1, -1), s(i, -1), s(i + 1, -1)],
            )
            .unwrap(),
        );
    }
    for i in 1..=n {
        for j in i + 2..=n {
            out.push(BraidWord::new(kind, vec![s(i, 1), s(j, 1), s(i, -1), s(j, -1)]).unwrap());
        }
    }
    out
}

/// The homomorphism φ_N: B(Ã_{N−1}) → B(A_N): s_i ↦ s_{i+1} for
/// 0 ≤ i ≤ N−2 and s_{N−1} ↦ s_N·Π·s_1·Π⁻¹·s_N⁻¹ with Π = s_N…s_1.
pub fn phi_n(g: &BraidWord, cap_n: usize) -> Result<BraidWord, BraidError> {
    if g.kind != Kind::Affine(cap_n) {
        return Err(BraidError::Unsupported);
    }
    let kind = Kind::Artin(cap_n);
    let pi = BraidWord::new(
        kind,
        (1..=cap_n).rev().map(|i| (Letter::S(i), 1)).collect(),
    )
    .unwrap();
    let last_image = BraidWord::new(kind, vec![(Letter::S(cap_n), 1)])
        .unwrap()
        .mul(&pi)
        .mul(&BraidWord::new(kind, vec![(Letter::S(1), 1)]).unwrap())
        .mul(&pi.inv())
        .mul(&BraidWord::new(kind, vec![(Letter::S(cap_n), -1)]).unwrap());
    let mut out = BraidWord::empty(kind);
    for &(l, e) in &g.letters {
        let i = match l {
            Letter::S(i) => i,
            Letter::R(_) => return Err(BraidError::Unsupported),
        };
        let base = if i == cap_n - 1 {
            last_image.clone()
        } else {
            BraidWord::new(kind, vec![(Letter::S(i + 1), 1)]).unwrap()
        };
        let step = if e < 0 { base.inv() } else { base };
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&step);
        }
    }
    Ok(out)
}

/// The embedding ψ: B(Ã_{m−1}) → B(Ã_{tm−1}), s_i ↦ s_i s_{i+m} …
/// s_{i+(t−1)m} (the image letters commute pairwise).
pub fn psi_embed(g: &BraidWord, t: usize) -> Result<BraidWord, BraidError> {
    let m = match g.kind {
        Kind::Affine(m) => m,
        _ => return Err(BraidError::Unsupported),
    };
    assert!(t >= 1);
    let kind = Kind::Affine(t * m);
    let mut out = BraidWord::empty(kind);
    for &(l, e) in &g.letters {
        let i = match l {
            Letter::S(i) => i,
            Letter::R(_) => return Err(BraidError::Unsupported),
        };
        let base = BraidWord::new(
            kind,
            (0..t).map(|k| (Letter::S(i + k * m), 1)).collect(),
        )
        .unwrap();
        let step = if e < 0 { base.inv() } else { base };
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&step);
        }
    }
    Ok(out)
}

/// Shifts every generator index of an affine word by l (mod m): the
/// automorphism through which C_{nm} acts on B(Ã_{m−1}).
pub fn shift_word(g: &BraidWord, l: i64) -> BraidWord {
    let m = match g.kind {
        Kind::Affine(m) => m,
        _ => panic!("shift is defined for affine words"),
    };
    BraidWord {
        kind: g.kind,
        letters: g
            .letters
            .iter()
            .map(|&(letter, e)| match letter {
                Letter::S(i) => (
                    Letter::S((i as i64 + l).rem_euclid(m as i64) as usize),
                    e,
                ),
                Letter::R(_) => unreachable!("range-checked"),
            })
            .collect(),
    }
}

/// An element of B(Ã_{m−1}) ⋊ C_{nm}: the rotation class h acts on the
/// braid part by shifting generator indices by h mod m.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemidirectElement {
    pub m: usize,
    pub n: usize,
    pub g: BraidWord,
    /// Exponent of the rotation generator, reduced mod nm.
    pub h: i64,
}

impl SemidirectElement {
    pub fn new(m: usize, n: usize, g: BraidWord, h: i64) -> SemidirectElement {
        assert_eq!(g.kind, Kind::Affine(m));
        SemidirectElement {
            m,
            n,
            g,
            h: h.rem_euclid((n * m) as i64),
        }
    }

    pub fn identity(m: usize, n: usize) -> SemidirectElement {
        SemidirectElement::new(m, n, BraidWord::empty(Kind::Affine(m)), 0)
    }
}

/// (g₁, h₁)·(g₂, h₂) = (g₁·φ(h₁)(g₂), h₁ + h₂).
pub fn semidirect_mul(x: &SemidirectElement, y: &SemidirectElement) -> SemidirectElement {
    assert_eq!((x.m, x.n), (y.m, y.n), "parameter mismatch");
    SemidirectElement::new(
        x.m,
        x.n,
        x.g.mul(&shift_word(&y.g, x.h)),
        x.h + y.h,
    )
}

/// Equality test in the semidirect product: exponents agree and the braid
/// parts differ by a trivial word per the oracle.
pub fn semidirect_eq(x: &SemidirectElement, y: &SemidirectElement) -> Result<bool, BraidError> {
    if (x.m, x.n, x.h) != (y.m, y.n, y.h) {
        return Ok(false);
    }
    is_trivial_word(&x.g.mul(&y.g.inv()))
}
