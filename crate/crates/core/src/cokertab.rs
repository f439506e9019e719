//! Obstruction tables for the rank-two cokernel: level-one modular form
//! dimensions, the `H¹(GL₂(ℤ); ·)` decomposition assembled from the
//! two-row quotient characters, and dimension utilities for free Lie
//! algebras, the bracketing kernels `D_s(V)` and cyclic words.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::action::{ActionContext, ActionError, QuotientModule};
use crate::hopf::HopfDescriptor;
use crate::linalg::{rank_of, IndexedBasis, SparseVector};
use crate::nilrep::{quotient_character_on_support, NilRepError};
use crate::rational::Rational;
use crate::symfunc::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CokerError {
    #[error(transparent)]
    NilRep(#[from] NilRepError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("degree must be at least 1")]
    ZeroDegree,
}

/// Shift from the module degree to the cokernel degree in rank two.
pub const DEGREE_SHIFT: usize = 4;

/// `(dim M_w, dim S_w)` for level one.
pub fn modular_dims(weight: i64) -> (u64, u64) {
    if weight < 0 || weight % 2 != 0 || weight == 2 {
        return (0, 0);
    }
    if weight == 0 {
        return (1, 0);
    }
    let w = weight as u64;
    let m = w / 12 + u64::from(w % 12 != 2);
    (m, m - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormKind {
    Modular,
    Cusp,
}

impl FormKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FormKind::Modular => "modular",
            FormKind::Cusp => "cusp",
        }
    }

    pub fn dim(self, weight: u32) -> u64 {
        let (m, s) = modular_dims(i64::from(weight));
        match self {
            FormKind::Modular => m,
            FormKind::Cusp => s,
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionEntry {
    pub lambda: Partition,
    pub form_kind: FormKind,
    pub weight: u32,
    pub multiplicity: u64,
    pub module_degree: usize,
    pub cokernel_degree: usize,
}

/// A two-row shape `(p, q)` feeding the table, with its form space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Source {
    pub p: usize,
    pub q: usize,
    pub form_kind: FormKind,
    pub weight: u32,
}

/// Shapes `(2k, 2ℓ)` (cusp forms) and `(2k+1, 2ℓ+1)` (modular forms),
/// `k > ℓ ≥ 0`, of size at most `max_size` whose form space is nonzero.
pub fn sources(max_size: usize) -> Vec<Source> {
    let mut out = Vec::new();
    for l in 0..=max_size / 2 {
        for k in l + 1..=max_size / 2 {
            let weight = (2 * (k - l) + 2) as u32;
            let even = Source { p: 2 * k, q: 2 * l, form_kind: FormKind::Cusp, weight };
            let odd = Source { p: 2 * k + 1, q: 2 * l + 1, form_kind: FormKind::Modular, weight };
            for s in [even, odd] {
                if s.p + s.q <= max_size && s.form_kind.dim(weight) > 0 {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// The table of `H¹(GL₂(ℤ); \overline{Sym(L₍₂₎⊗𝕜²)})` in module degrees up
/// to `max_module_degree`, with characters taken over `GL_d`.
///
/// Constituents with more than `d` rows are invisible; everything with at
/// most `d` rows is exact. Entries are sorted by cokernel degree, then `λ`.
pub fn h1_table(max_module_degree: usize, d: usize) -> Result<Vec<ObstructionEntry>, CokerError> {
    let mut acc: BTreeMap<(usize, Partition, FormKind, u32), u64> = BTreeMap::new();
    for s in sources(max_module_degree) {
        let form_dim = s.form_kind.dim(s.weight);
        let size = s.p + s.q;
        for degree in size..=max_module_degree.min(2 * size) {
            let chi = quotient_character_on_support(s.p, s.q, degree, d)?;
            for (lambda, &m) in chi.terms() {
                debug_assert!(m > 0);
                *acc.entry((degree, lambda.clone(), s.form_kind, s.weight)).or_default() += m as u64 * form_dim;
            }
        }
    }
    let mut out: Vec<ObstructionEntry> = acc
        .into_iter()
        .map(|((degree, lambda, form_kind, weight), multiplicity)| ObstructionEntry {
            lambda,
            form_kind,
            weight,
            multiplicity,
            module_degree: degree,
            cokernel_degree: degree + DEGREE_SHIFT,
        })
        .collect();
    out.sort_by(|a, b| {
        (a.cokernel_degree, &a.lambda, a.form_kind, a.weight).cmp(&(b.cokernel_degree, &b.lambda, b.form_kind, b.weight))
    });
    Ok(out)
}

fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn totient(n: u64) -> u64 {
    let mut n = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

fn divisors(k: u64) -> impl Iterator<Item = u64> {
    (1..=k).filter(move |e| k.is_multiple_of(*e))
}

/// Dimension of the degree-`k` part of the free Lie algebra on `d` generators.
pub fn witt_dim(d: usize, k: usize) -> u128 {
    if k == 0 {
        return 0;
    }
    let k = k as u64;
    let total: i128 = divisors(k)
        .map(|e| i128::from(mobius(e)) * (d as i128).pow((k / e) as u32))
        .sum();
    (total / i128::from(k)) as u128
}

/// Number of necklaces of length `k` in `d` colours.
pub fn necklace_count(d: usize, k: usize) -> u128 {
    if k == 0 {
        return 1;
    }
    let k = k as u64;
    let total: u128 = divisors(k).map(|e| u128::from(totient(e)) * (d as u128).pow((k / e) as u32)).sum();
    total / u128::from(k)
}

/// A bracket of generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieBracket {
    Letter(u8),
    Bracket(Box<LieBracket>, Box<LieBracket>),
}

impl LieBracket {
    pub fn degree(&self) -> usize {
        match self {
            LieBracket::Letter(_) => 1,
            LieBracket::Bracket(a, b) => a.degree() + b.degree(),
        }
    }

    /// Expansion in the tensor algebra: word ↦ integer coefficient.
    pub fn expand(&self) -> BTreeMap<Vec<u8>, i64> {
        match self {
            LieBracket::Letter(a) => BTreeMap::from([(vec![*a], 1)]),
            LieBracket::Bracket(a, b) => {
                let (ea, eb) = (a.expand(), b.expand());
                let mut out = BTreeMap::new();
                for (u, cu) in &ea {
                    for (v, cv) in &eb {
                        let mut uv = u.clone();
                        uv.extend_from_slice(v);
                        let mut vu = v.clone();
                        vu.extend_from_slice(u);
                        *out.entry(uv).or_insert(0) += cu * cv;
                        *out.entry(vu).or_insert(0) -= cu * cv;
                    }
                }
                out.retain(|_, c| *c != 0);
                out
            }
        }
    }
}

impl fmt::Display for LieBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieBracket::Letter(a) => write!(f, "x{}", a + 1),
            LieBracket::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Lyndon words of length `k` over `0..d`, in lexicographic order (Duval).
pub fn lyndon_words(d: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if d == 0 || k == 0 {
        return out;
    }
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == k {
            out.push(w.clone());
        }
        let n = w.len();
        while w.len() < k {
            let c = w[w.len() - n];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if usize::from(last) + 1 == d {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

fn is_lyndon(w: &[u8]) -> bool {
    (1..w.len()).all(|i| w < &w[i..])
}

fn standard_bracketing(w: &[u8]) -> LieBracket {
    if w.len() == 1 {
        return LieBracket::Letter(w[0]);
    }
    // Standard factorization: the longest proper Lyndon suffix.
    let split = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("a single letter is Lyndon");
    LieBracket::Bracket(Box::new(standard_bracketing(&w[..split])), Box::new(standard_bracketing(&w[split..])))
}

/// The degree-`k` part of the Hall basis of the free Lie algebra on
/// `x_1 < … < x_d`: standard bracketings of Lyndon words, in lexicographic
/// order of the words.
pub fn hall_basis(d: usize, k: usize) -> Vec<LieBracket> {
    lyndon_words(d, k).iter().map(|w| standard_bracketing(w)).collect()
}

fn bracket_vectors(d: usize, s: usize) -> Vec<SparseVector> {
    let words: Vec<Vec<u8>> = all_words(d, s + 2);
    let index = IndexedBasis::new(words);
    let mut out = Vec::new();
    for a in 0..d {
        for b in hall_basis(d, s + 1) {
            let br = LieBracket::Bracket(Box::new(LieBracket::Letter(a as u8)), Box::new(b));
            let entries = br.expand().into_iter().map(|(w, c)| (index.index_of(&w).expect("word of the right length"), Rational::from(c)));
            out.push(SparseVector::from_entries(index.len(), entries));
        }
    }
    out
}

fn all_words(d: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                (0..d as u8).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// `dim D_s(V)`, the kernel of the bracket `V ⊗ L_{s+1}(V) → L_{s+2}(V)`,
/// assuming the bracket is onto.
pub fn d_space_dim(d: usize, s: usize) -> u128 {
    d as u128 * witt_dim(d, s + 1) - witt_dim(d, s + 2)
}

/// `(rank of the bracket map, dim of its kernel)` computed from the Hall
/// basis expanded in the tensor algebra.
pub fn d_space_explicit(d: usize, s: usize) -> (usize, usize) {
    let vectors = bracket_vectors(d, s);
    let r = rank_of(d.pow((s + 2) as u32), &vectors);
    (r, vectors.len() - r)
}

fn rotation_class(w: &[u8]) -> Vec<u8> {
    (0..w.len().max(1))
        .map(|i| {
            let mut r = w[i.min(w.len())..].to_vec();
            r.extend_from_slice(&w[..i.min(w.len())]);
            r
        })
        .min()
        .unwrap_or_default()
}

/// `(dim of the degree-k cyclic words, dim of the image of id − S on them)`.
///
/// The first value is the necklace count; the second is computed by
/// reducing every word and its antipode to rotation classes.
pub fn cyclic_word_dims(d: usize, k: usize) -> Result<(u128, usize), CokerError> {
    if k == 0 {
        return Err(CokerError::ZeroDegree);
    }
    let classes: BTreeSet<Vec<u8>> = all_words(d, k).iter().map(|w| rotation_class(w)).collect();
    let index = IndexedBasis::new(classes.into_iter().collect());
    let sign = if k.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let vectors: Vec<SparseVector> = index
        .keys()
        .iter()
        .map(|w| {
            let mut rev = w.clone();
            rev.reverse();
            let mut v = SparseVector::unit(index.len(), index.index_of(w).expect("class"));
            let r = index.index_of(&rotation_class(&rev)).expect("class");
            v.add_scaled(&SparseVector::unit(index.len(), r), &-sign.clone());
            v
        })
        .collect();
    Ok((necklace_count(d, k), rank_of(index.len(), &vectors)))
}

/// Dimension of the degree-`k` part of `T(V)/[T(V),T(V)]` computed through
/// the quotient module of the action machinery.
pub fn cyclic_dim_explicit(d: usize, k: usize) -> Result<usize, CokerError> {
    if k == 0 {
        return Err(CokerError::ZeroDegree);
    }
    let desc = HopfDescriptor::tensor(d, k).map_err(ActionError::from)?;
    let q = QuotientModule::new(ActionContext::new(desc, 1)?);
    Ok(q.quotient_dim(k)?)
}
