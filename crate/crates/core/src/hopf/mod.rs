//! Graded cocommutative Hopf algebras: the tensor algebra `T(V)` and the
//! enveloping algebra of the free class-two nilpotent Lie algebra on `V`.
//!
//! Both algebras are truncated at a fixed total degree `D`; every operation
//! silently drops terms above it. All structure maps are degree preserving
//! (multiplication adds degrees), so results in degree `≤ D` are exact.

mod element;
mod tensor;

pub use element::AlgebraElement;
pub(crate) use element::fmt_terms;
pub use tensor::TensorElement;

use alloc::vec;
use alloc::vec::Vec;

use crate::rational::{binomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("operands belong to different Hopf algebras")]
    DescriptorMismatch,
    #[error("tensor arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("invalid descriptor: dim V and truncation degree must both be at least 1")]
    InvalidDescriptor,
    #[error("word is not a valid basis word for this algebra")]
    InvalidWord,
    #[error("tensor factor index {0} out of range")]
    FactorOutOfRange(usize),
}

/// Which algebra a descriptor denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    /// `T(V)` with `V` primitive of degree 1.
    Tensor { dim: usize },
    /// `U(L₍₂₎(V))`: generators `x_1..x_d` in degree 1 and central
    /// `z_ij = [x_i, x_j]` (`i < j`) in degree 2.
    EnvelopingNil2 { dim: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HopfDescriptor {
    kind: AlgebraKind,
    truncation: usize,
}

/// A basis word.
///
/// For `T(V)` the entries are 0-based letters `v_{i+1}`. For the enveloping
/// algebra they are PBW exponents: `d` exponents of `x_1..x_d` followed by one
/// exponent per `z_ij` in lexicographic `(i, j)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }
}

impl HopfDescriptor {
    pub fn tensor(dim: usize, truncation: usize) -> Result<Self, HopfError> {
        Self::new(AlgebraKind::Tensor { dim }, truncation)
    }

    pub fn nil2(dim: usize, truncation: usize) -> Result<Self, HopfError> {
        Self::new(AlgebraKind::EnvelopingNil2 { dim }, truncation)
    }

    pub fn new(kind: AlgebraKind, truncation: usize) -> Result<Self, HopfError> {
        let dim = match kind {
            AlgebraKind::Tensor { dim } | AlgebraKind::EnvelopingNil2 { dim } => dim,
        };
        if dim == 0 || truncation == 0 || truncation > u8::MAX as usize {
            return Err(HopfError::InvalidDescriptor);
        }
        Ok(HopfDescriptor { kind, truncation })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Same algebra with a different truncation degree.
    pub fn with_truncation(&self, truncation: usize) -> Result<Self, HopfError> {
        Self::new(self.kind, truncation)
    }

    pub fn dim_v(&self) -> usize {
        match self.kind {
            AlgebraKind::Tensor { dim } | AlgebraKind::EnvelopingNil2 { dim } => dim,
        }
    }

    pub fn is_nil2(&self) -> bool {
        matches!(self.kind, AlgebraKind::EnvelopingNil2 { .. })
    }

    /// Number of central generators `z_ij`.
    pub fn num_z(&self) -> usize {
        match self.kind {
            AlgebraKind::Tensor { .. } => 0,
            AlgebraKind::EnvelopingNil2 { dim } => dim * (dim - 1) / 2,
        }
    }

    /// Position of `z_ij` (0-based, `i < j`) among the central generators.
    pub fn z_index(&self, i: usize, j: usize) -> usize {
        let d = self.dim_v();
        debug_assert!(i < j && j < d);
        i * (2 * d - i - 1) / 2 + (j - i - 1)
    }

    /// The pair `(i, j)` of the `k`-th central generator.
    pub fn z_pair(&self, k: usize) -> (usize, usize) {
        let d = self.dim_v();
        let mut k = k;
        for i in 0..d {
            let row = d - i - 1;
            if k < row {
                return (i, i + 1 + k);
            }
            k -= row;
        }
        panic!("central generator index out of range")
    }

    pub fn unit_word(&self) -> Word {
        match self.kind {
            AlgebraKind::Tensor { .. } => Word(Vec::new()),
            AlgebraKind::EnvelopingNil2 { dim } => Word(vec![0; dim + self.num_z()]),
        }
    }

    pub fn is_unit_word(&self, w: &Word) -> bool {
        match self.kind {
            AlgebraKind::Tensor { .. } => w.0.is_empty(),
            AlgebraKind::EnvelopingNil2 { .. } => w.0.iter().all(|e| *e == 0),
        }
    }

    /// Order used for printing: by degree, then `x_1`-heavy words first.
    pub fn display_cmp(&self, a: &Word, b: &Word) -> core::cmp::Ordering {
        self.degree(a).cmp(&self.degree(b)).then_with(|| match self.kind {
            AlgebraKind::Tensor { .. } => a.cmp(b),
            AlgebraKind::EnvelopingNil2 { .. } => b.cmp(a),
        })
    }

    /// Number of primitive basis generators: `d` for `T(V)`, `d + C(d,2)` otherwise.
    pub fn num_generators(&self) -> usize {
        self.dim_v() + self.num_z()
    }

    /// The basis word of the `g`-th primitive generator (`x`'s first, then `z`'s).
    pub fn generator_word(&self, g: usize) -> Word {
        match self.kind {
            AlgebraKind::Tensor { dim } => {
                assert!(g < dim);
                Word(vec![g as u8])
            }
            AlgebraKind::EnvelopingNil2 { dim } => {
                let mut w = vec![0u8; dim + self.num_z()];
                w[g] = 1;
                Word(w)
            }
        }
    }

    pub fn generator_degree(&self, g: usize) -> usize {
        if g < self.dim_v() {
            1
        } else {
            2
        }
    }

    pub fn validate_word(&self, w: &Word) -> Result<(), HopfError> {
        let ok = match self.kind {
            AlgebraKind::Tensor { dim } => w.0.iter().all(|l| (*l as usize) < dim),
            AlgebraKind::EnvelopingNil2 { dim } => w.0.len() == dim + self.num_z(),
        };
        if ok && self.degree(w) <= self.truncation {
            Ok(())
        } else {
            Err(HopfError::InvalidWord)
        }
    }

    pub fn degree(&self, w: &Word) -> usize {
        match self.kind {
            AlgebraKind::Tensor { .. } => w.0.len(),
            AlgebraKind::EnvelopingNil2 { dim } => {
                w.0[..dim].iter().map(|e| *e as usize).sum::<usize>()
                    + 2 * w.0[dim..].iter().map(|e| *e as usize).sum::<usize>()
            }
        }
    }

    /// Position in the PBW filtration: the number of Lie elements in the word.
    pub fn filtration(&self, w: &Word) -> usize {
        match self.kind {
            AlgebraKind::Tensor { .. } => w.0.len(),
            AlgebraKind::EnvelopingNil2 { .. } => w.0.iter().map(|e| *e as usize).sum(),
        }
    }

    /// All basis words of exactly the given degree, in increasing word order.
    pub fn basis_words(&self, degree: usize) -> Vec<Word> {
        let mut out = Vec::new();
        match self.kind {
            AlgebraKind::Tensor { dim } => {
                let mut cur = Vec::with_capacity(degree);
                fn rec(dim: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
                    if left == 0 {
                        out.push(Word(cur.clone()));
                        return;
                    }
                    for l in 0..dim {
                        cur.push(l as u8);
                        rec(dim, left - 1, cur, out);
                        cur.pop();
                    }
                }
                rec(dim, degree, &mut cur, &mut out);
            }
            AlgebraKind::EnvelopingNil2 { dim } => {
                let n = dim + self.num_z();
                let mut cur = vec![0u8; n];
                fn rec(dim: usize, pos: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
                    if pos == cur.len() {
                        if left == 0 {
                            out.push(Word(cur.clone()));
                        }
                        return;
                    }
                    let step = if pos < dim { 1 } else { 2 };
                    let mut e = 0;
                    while e * step <= left {
                        cur[pos] = e as u8;
                        rec(dim, pos + 1, left - e * step, cur, out);
                        e += 1;
                    }
                    cur[pos] = 0;
                }
                rec(dim, 0, degree, &mut cur, &mut out);
                out.sort();
            }
        }
        out
    }

    /// All `arity`-tuples of basis words whose degrees sum to `total`.
    pub fn tensor_basis(&self, arity: usize, total: usize) -> Vec<Vec<Word>> {
        let per_degree: Vec<Vec<Word>> = (0..=total).map(|k| self.basis_words(k)).collect();
        let mut out = Vec::new();
        let mut cur: Vec<Word> = Vec::with_capacity(arity);
        fn rec(per: &[Vec<Word>], arity: usize, left: usize, cur: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
            if cur.len() + 1 == arity {
                for w in &per[left] {
                    cur.push(w.clone());
                    out.push(cur.clone());
                    cur.pop();
                }
                return;
            }
            for k in 0..=left {
                for w in &per[k] {
                    cur.push(w.clone());
                    rec(per, arity, left - k, cur, out);
                    cur.pop();
                }
            }
        }
        if arity == 0 {
            if total == 0 {
                out.push(Vec::new());
            }
            return out;
        }
        rec(&per_degree, arity, total, &mut cur, &mut out);
        out.sort();
        out
    }

    // ---- word-level structure maps ----

    /// Product of two basis words, straightened and truncated.
    pub fn mul_words(&self, u: &Word, v: &Word) -> Vec<(Word, Rational)> {
        if self.degree(u) + self.degree(v) > self.truncation {
            return Vec::new();
        }
        match self.kind {
            AlgebraKind::Tensor { .. } => {
                let mut w = u.0.clone();
                w.extend_from_slice(&v.0);
                vec![(Word(w), Rational::ONE)]
            }
            AlgebraKind::EnvelopingNil2 { dim } => {
                let mut start = u.0.clone();
                for k in dim..start.len() {
                    start[k] += v.0[k];
                }
                let mut terms = vec![(start, Rational::ONE)];
                for j in 0..dim {
                    for _ in 0..v.0[j] {
                        terms = self.times_x(terms, j);
                    }
                }
                terms.into_iter().map(|(w, c)| (Word(w), c)).collect()
            }
        }
    }

    /// Right multiplication of normal-ordered terms by `x_j`:
    /// `x^a x_j = x^{a+e_j} - Σ_{k>j} a_k z_jk x^{a-e_k}`.
    fn times_x(&self, terms: Vec<(Vec<u8>, Rational)>, j: usize) -> Vec<(Vec<u8>, Rational)> {
        let dim = self.dim_v();
        let mut acc: alloc::collections::BTreeMap<Vec<u8>, Rational> = alloc::collections::BTreeMap::new();
        for (w, c) in terms {
            let mut lead = w.clone();
            lead[j] += 1;
            *acc.entry(lead).or_default() += &c;
            for k in (j + 1)..dim {
                let ak = w[k];
                if ak == 0 {
                    continue;
                }
                let mut t = w.clone();
                t[k] -= 1;
                t[dim + self.z_index(j, k)] += 1;
                *acc.entry(t).or_default() -= &c * &Rational::from_integer(ak as i64);
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// `Δ(w) = Σ w' ⊗ w''`.
    pub fn coproduct_word(&self, w: &Word) -> Vec<((Word, Word), Rational)> {
        match self.kind {
            AlgebraKind::Tensor { .. } => {
                let n = w.0.len();
                let mut acc: alloc::collections::BTreeMap<(Word, Word), Rational> = Default::default();
                for mask in 0u64..(1u64 << n) {
                    let mut left = Vec::new();
                    let mut right = Vec::new();
                    for (i, l) in w.0.iter().enumerate() {
                        if mask >> i & 1 == 0 {
                            left.push(*l);
                        } else {
                            right.push(*l);
                        }
                    }
                    *acc.entry((Word(left), Word(right))).or_default() += Rational::ONE;
                }
                acc.into_iter().collect()
            }
            AlgebraKind::EnvelopingNil2 { .. } => {
                // each generator power splits binomially; split pieces stay normal ordered
                let mut out: Vec<((Vec<u8>, Vec<u8>), Rational)> =
                    vec![((Vec::with_capacity(w.0.len()), Vec::with_capacity(w.0.len())), Rational::ONE)];
                for &e in &w.0 {
                    let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
                    for ((l, r), c) in &out {
                        for k in 0..=e {
                            let mut l2 = l.clone();
                            let mut r2 = r.clone();
                            l2.push(k);
                            r2.push(e - k);
                            next.push(((l2, r2), c * &binomial(e as usize, k as usize)));
                        }
                    }
                    out = next;
                }
                out.into_iter().map(|((l, r), c)| ((Word(l), Word(r)), c)).collect()
            }
        }
    }

    pub fn antipode_word(&self, w: &Word) -> Vec<(Word, Rational)> {
        match self.kind {
            AlgebraKind::Tensor { .. } => {
                let mut r = w.0.clone();
                r.reverse();
                let sign = if w.0.len().is_multiple_of(2) { Rational::ONE } else { -Rational::ONE };
                vec![(Word(r), sign)]
            }
            AlgebraKind::EnvelopingNil2 { dim } => {
                // S(z^c x_1^{a_1}..x_d^{a_d}) = (-1)^{|a|+|c|} z^c x_d^{a_d}..x_1^{a_1}
                let mut start = vec![0u8; w.0.len()];
                start[dim..].copy_from_slice(&w.0[dim..]);
                let mut terms = vec![(start, Rational::ONE)];
                for j in (0..dim).rev() {
                    for _ in 0..w.0[j] {
                        terms = self.times_x(terms, j);
                    }
                }
                let len: usize = w.0.iter().map(|e| *e as usize).sum();
                let sign = if len.is_multiple_of(2) { Rational::ONE } else { -Rational::ONE };
                terms.into_iter().map(|(t, c)| (Word(t), &c * &sign)).collect()
            }
        }
    }

    fn check(&self, other: &HopfDescriptor) -> Result<(), HopfError> {
        if self == other {
            Ok(())
        } else {
            Err(HopfError::DescriptorMismatch)
        }
    }

    /// Human-readable rendering of a basis word (`1` for the unit).
    pub fn format_word(&self, w: &Word) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::new();
        match self.kind {
            AlgebraKind::Tensor { .. } => {
                for l in &w.0 {
                    let _ = write!(s, "v{}", l + 1);
                }
            }
            AlgebraKind::EnvelopingNil2 { dim } => {
                for (k, e) in w.0.iter().enumerate() {
                    if *e == 0 {
                        continue;
                    }
                    if !s.is_empty() {
                        s.push(' ');
                    }
                    if k < dim {
                        let _ = write!(s, "x{}", k + 1);
                    } else {
                        let (i, j) = self.z_pair(k - dim);
                        let _ = write!(s, "z{}{}", i + 1, j + 1);
                    }
                    if *e > 1 {
                        let _ = write!(s, "^{e}");
                    }
                }
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}
