//! Free groups `F_n`: reduced words, endomorphisms given by generator images,
//! and automorphisms built from Nielsen moves or inner conjugations.
//!
//! Generators are 0-based internally (`x_{i+1}` is index `i`); every textual
//! form (parsing and `Display`) is 1-based.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeGroupError {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("generator x{} does not exist in rank {rank}", .index + 1)]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("Nielsen move needs two distinct generators")]
    DegenerateMove,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// `x_generator` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupWord(Vec<Letter>);

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord(Vec::new())
    }

    /// Freely reduces the given letters.
    pub fn new<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord(out)
    }

    pub fn generator(i: usize) -> Self {
        GroupWord(vec![Letter::new(i, false)])
    }

    /// Build from `(index, ±1)` pairs, 0-based.
    pub fn from_signed(letters: &[(usize, i8)]) -> Self {
        Self::new(letters.iter().map(|&(g, e)| Letter::new(g, e < 0)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::empty();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Smallest rank containing every generator of the word.
    pub fn min_rank(&self) -> usize {
        self.0.iter().map(|l| l.generator + 1).max().unwrap_or(0)
    }

    /// Number of occurrences of `x_i^{±1}`.
    pub fn occurrences(&self, i: usize) -> usize {
        self.0.iter().filter(|l| l.generator == i).count()
    }

    /// Exponent sum of `x_i`.
    pub fn exponent_sum(&self, i: usize) -> i64 {
        self.0.iter().filter(|l| l.generator == i).map(|l| if l.inverse { -1 } else { 1 }).sum()
    }

    fn check_rank(&self, rank: usize) -> Result<(), FreeGroupError> {
        match self.0.iter().find(|l| l.generator >= rank) {
            Some(l) => Err(FreeGroupError::GeneratorOutOfRange { index: l.generator, rank }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        // group runs of the same letter into powers
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "x{}", l.generator + 1)?;
            match (l.inverse, run) {
                (false, 1) => {}
                (false, k) => write!(f, "^{k}")?,
                (true, k) => write!(f, "^-{k}")?,
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = FreeGroupError;

    /// Parses `"x1 x2^-1 x1^3"`; `""` and `"1"` are the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || FreeGroupError::Parse(s.to_string());
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == '*' || c == '.').filter(|t| !t.is_empty()) {
            if tok == "1" {
                continue;
            }
            let body = tok.strip_prefix('x').ok_or_else(err)?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| err())?),
                None => (body, 1),
            };
            let idx: usize = idx.parse().map_err(|_| err())?;
            if idx == 0 {
                return Err(err());
            }
            for _ in 0..exp.unsigned_abs() {
                letters.push(Letter::new(idx - 1, exp < 0));
            }
        }
        Ok(GroupWord::new(letters))
    }
}

/// An endomorphism of `F_n`, given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeGroupMap {
    images: Vec<GroupWord>,
}

impl FreeGroupMap {
    pub fn identity(n: usize) -> Self {
        FreeGroupMap { images: (0..n).map(GroupWord::generator).collect() }
    }

    pub fn new(images: Vec<GroupWord>) -> Result<Self, FreeGroupError> {
        let n = images.len();
        for w in &images {
            w.check_rank(n)?;
        }
        Ok(FreeGroupMap { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[GroupWord] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &GroupWord {
        &self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }

    pub fn apply(&self, w: &GroupWord) -> Result<GroupWord, FreeGroupError> {
        w.check_rank(self.rank())?;
        Ok(GroupWord::new(w.0.iter().flat_map(|l| {
            let img = &self.images[l.generator];
            let v: Vec<Letter> = if l.inverse { img.inverse().0 } else { img.0.clone() };
            v
        })))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, FreeGroupError> {
        if self.rank() != other.rank() {
            return Err(FreeGroupError::RankMismatch { expected: self.rank(), found: other.rank() });
        }
        let images = other.images.iter().map(|w| self.apply(w)).collect::<Result<_, _>>()?;
        Ok(FreeGroupMap { images })
    }

    /// `x_i ↦ g⁻¹ x_i g`.
    pub fn inner(g: &GroupWord, n: usize) -> Result<Self, FreeGroupError> {
        g.check_rank(n)?;
        let gi = g.inverse();
        Ok(FreeGroupMap { images: (0..n).map(|i| gi.mul(&GroupWord::generator(i)).mul(g)).collect() })
    }

    /// Abelianization: entry `(i, j)` is the exponent sum of `x_j` in the image of `x_i`.
    pub fn abelianization(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        self.images.iter().map(|w| (0..n).map(|j| w.exponent_sum(j)).collect()).collect()
    }
}

impl fmt::Display for FreeGroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{} -> {}", i + 1, w)?;
        }
        Ok(())
    }
}

/// Elementary Nielsen automorphisms (0-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NielsenGen {
    /// Exchange `x_i` and `x_j`.
    Swap(usize, usize),
    /// `x_i ↦ x_i⁻¹`.
    Invert(usize),
    /// `x_i ↦ x_j⁻¹ x_i`.
    LeftMul(usize, usize),
}

impl NielsenGen {
    fn max_index(&self) -> usize {
        match *self {
            NielsenGen::Swap(i, j) | NielsenGen::LeftMul(i, j) => i.max(j),
            NielsenGen::Invert(i) => i,
        }
    }

    pub fn validate(&self, n: usize) -> Result<(), FreeGroupError> {
        match *self {
            NielsenGen::Swap(i, j) | NielsenGen::LeftMul(i, j) if i == j => return Err(FreeGroupError::DegenerateMove),
            _ => {}
        }
        if self.max_index() >= n {
            return Err(FreeGroupError::GeneratorOutOfRange { index: self.max_index(), rank: n });
        }
        Ok(())
    }

    pub fn to_map(&self, n: usize) -> Result<FreeGroupMap, FreeGroupError> {
        self.validate(n)?;
        let mut images: Vec<GroupWord> = (0..n).map(GroupWord::generator).collect();
        match *self {
            NielsenGen::Swap(i, j) => images.swap(i, j),
            NielsenGen::Invert(i) => images[i] = images[i].inverse(),
            NielsenGen::LeftMul(i, j) => images[i] = GroupWord::generator(j).inverse().mul(&images[i]),
        }
        Ok(FreeGroupMap { images })
    }

    /// A sequence whose composite is the inverse move.
    pub fn inverse(&self) -> Vec<NielsenGen> {
        match *self {
            g @ (NielsenGen::Swap(..) | NielsenGen::Invert(_)) => vec![g],
            NielsenGen::LeftMul(i, j) => vec![NielsenGen::Invert(j), NielsenGen::LeftMul(i, j), NielsenGen::Invert(j)],
        }
    }
}

impl fmt::Display for NielsenGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NielsenGen::Swap(i, j) => write!(f, "swap {} {}", i + 1, j + 1),
            NielsenGen::Invert(i) => write!(f, "invert {}", i + 1),
            NielsenGen::LeftMul(i, j) => write!(f, "leftmul {} {}", i + 1, j + 1),
        }
    }
}

impl FromStr for NielsenGen {
    type Err = FreeGroupError;

    /// `"swap 1 2"`, `"invert 2"`, `"leftmul 1 2"` (1-based).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || FreeGroupError::Parse(s.to_string());
        let toks: Vec<&str> = s.split_whitespace().collect();
        let idx = |t: &str| -> Result<usize, FreeGroupError> {
            match t.trim_start_matches('x').parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(err()),
            }
        };
        let g = match toks.as_slice() {
            [op, i, j] if op.eq_ignore_ascii_case("swap") => NielsenGen::Swap(idx(i)?, idx(j)?),
            [op, i, j] if op.eq_ignore_ascii_case("leftmul") => NielsenGen::LeftMul(idx(i)?, idx(j)?),
            [op, i] if op.eq_ignore_ascii_case("invert") => NielsenGen::Invert(idx(i)?),
            _ => return Err(err()),
        };
        match g {
            NielsenGen::Swap(i, j) | NielsenGen::LeftMul(i, j) if i == j => Err(FreeGroupError::DegenerateMove),
            g => Ok(g),
        }
    }
}

/// `seq[0] ∘ seq[1] ∘ … ∘ seq[k-1]`: the last move is applied first.
pub fn nielsen_to_map(seq: &[NielsenGen], n: usize) -> Result<FreeGroupMap, FreeGroupError> {
    let mut acc = FreeGroupMap::identity(n);
    for g in seq {
        acc = acc.compose(&g.to_map(n)?)?;
    }
    Ok(acc)
}

/// The syntactic inverse: reverse the sequence and invert every move.
pub fn inverse_sequence(seq: &[NielsenGen]) -> Vec<NielsenGen> {
    seq.iter().rev().flat_map(|g| g.inverse()).collect()
}

pub fn inverse_of_sequence(seq: &[NielsenGen], n: usize) -> Result<FreeGroupMap, FreeGroupError> {
    nielsen_to_map(&inverse_sequence(seq), n)
}

/// `η : x_1 ↦ x_2⁻¹ x_1, x_2 ↦ x_2⁻¹`, an involution.
pub fn eta() -> Vec<NielsenGen> {
    vec![NielsenGen::LeftMul(0, 1), NielsenGen::Invert(1)]
}

/// `x_i ↦ x_i x_j`.
pub fn right_mul(i: usize, j: usize) -> Vec<NielsenGen> {
    vec![NielsenGen::Invert(i), NielsenGen::LeftMul(i, j), NielsenGen::Invert(i)]
}

/// `x_i ↦ x_j x_i`.
pub fn left_mul_positive(i: usize, j: usize) -> Vec<NielsenGen> {
    NielsenGen::LeftMul(i, j).inverse()
}

/// An automorphism together with its inverse. Inverses are never computed
/// from the images; they come from the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    forward: FreeGroupMap,
    inverse: FreeGroupMap,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism { forward: FreeGroupMap::identity(n), inverse: FreeGroupMap::identity(n) }
    }

    pub fn from_nielsen(seq: &[NielsenGen], n: usize) -> Result<Self, FreeGroupError> {
        Ok(Automorphism { forward: nielsen_to_map(seq, n)?, inverse: inverse_of_sequence(seq, n)? })
    }

    pub fn inner(g: &GroupWord, n: usize) -> Result<Self, FreeGroupError> {
        Ok(Automorphism { forward: FreeGroupMap::inner(g, n)?, inverse: FreeGroupMap::inner(&g.inverse(), n)? })
    }

    pub fn rank(&self) -> usize {
        self.forward.rank()
    }

    pub fn forward(&self) -> &FreeGroupMap {
        &self.forward
    }

    pub fn inverse_map(&self) -> &FreeGroupMap {
        &self.inverse
    }

    pub fn inverse(&self) -> Self {
        Automorphism { forward: self.inverse.clone(), inverse: self.forward.clone() }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self, FreeGroupError> {
        Ok(Automorphism { forward: self.forward.compose(&other.forward)?, inverse: other.inverse.compose(&self.inverse)? })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.rank());
        for _ in 0..k {
            acc = acc.compose(self).expect("same rank");
        }
        acc
    }
}

/// Named relations among Nielsen moves in rank `n`; each composite must be the identity.
pub fn relation_suite(n: usize) -> Vec<(String, Vec<NielsenGen>)> {
    use alloc::format;
    use NielsenGen::*;
    let mut out: Vec<(String, Vec<NielsenGen>)> = Vec::new();
    for i in 0..n {
        out.push((format!("invert {}^2", i + 1), vec![Invert(i), Invert(i)]));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if i < j {
                out.push((format!("swap {} {}^2", i + 1, j + 1), vec![Swap(i, j), Swap(i, j)]));
            }
            // conjugating a left multiplication by the transposition
            let mut rel = vec![Swap(i, j), LeftMul(i, j), Swap(i, j)];
            rel.extend(LeftMul(j, i).inverse());
            out.push((format!("swap·leftmul {} {}·swap = leftmul {} {}", i + 1, j + 1, j + 1, i + 1), rel));
            // inverting the multiplier inverts the move
            out.push((
                format!("(invert {}·leftmul {} {})^2", j + 1, i + 1, j + 1),
                vec![Invert(j), LeftMul(i, j), Invert(j), LeftMul(i, j)],
            ));
            // inverting x_i commutes with moves not involving it
            for k in 0..n {
                if k != i && k != j {
                    out.push((
                        format!("invert {} commutes with leftmul {} {}", k + 1, i + 1, j + 1),
                        commutator_seq(&[Invert(k)], &[LeftMul(i, j)]),
                    ));
                }
            }
        }
    }
    // disjoint left multiplications commute
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if i == j || k == l || i == k || i == l || j == k {
                        continue;
                    }
                    out.push((
                        format!("leftmul {} {} commutes with leftmul {} {}", i + 1, j + 1, k + 1, l + 1),
                        commutator_seq(&[LeftMul(i, j)], &[LeftMul(k, l)]),
                    ));
                }
            }
        }
    }
    if n >= 2 {
        let e = eta();
        let mut e2 = e.clone();
        e2.extend(e.iter().copied());
        out.push(("eta^2".to_string(), e2));
        let mut se = vec![Swap(0, 1)];
        se.extend(e.iter().copied());
        let mut se3 = Vec::new();
        for _ in 0..3 {
            se3.extend(se.iter().copied());
        }
        out.push(("(swap 1 2·eta)^3".to_string(), se3));
    }
    out
}

/// `a b a⁻¹ b⁻¹` as a sequence.
fn commutator_seq(a: &[NielsenGen], b: &[NielsenGen]) -> Vec<NielsenGen> {
    let mut out = a.to_vec();
    out.extend_from_slice(b);
    out.extend(inverse_sequence(a));
    out.extend(inverse_sequence(b));
    out
}
