use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{HopfDescriptor, HopfError, TensorElement, Word};
use crate::rational::Rational;

/// A finite linear combination of basis words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    desc: HopfDescriptor,
    terms: BTreeMap<Word, Rational>,
}

impl AlgebraElement {
    pub fn zero(desc: HopfDescriptor) -> Self {
        AlgebraElement { desc, terms: BTreeMap::new() }
    }

    pub fn one(desc: HopfDescriptor) -> Self {
        Self::scalar(desc, Rational::ONE)
    }

    pub fn scalar(desc: HopfDescriptor, c: Rational) -> Self {
        let mut e = Self::zero(desc);
        e.add_term(desc.unit_word(), c);
        e
    }

    /// A single basis word; words above the truncation give zero.
    pub fn basis(desc: HopfDescriptor, w: Word) -> Result<Self, HopfError> {
        let mut e = Self::zero(desc);
        match desc.validate_word(&w) {
            Ok(()) => e.add_term(w, Rational::ONE),
            Err(_) if desc.degree(&w) > desc.truncation() && word_shape_ok(&desc, &w) => {}
            Err(err) => return Err(err),
        }
        Ok(e)
    }

    /// The `g`-th primitive generator (`x_{g+1}`, or a `z` for `g ≥ dim V`).
    pub fn generator(desc: HopfDescriptor, g: usize) -> Self {
        let mut e = Self::zero(desc);
        if desc.generator_degree(g) <= desc.truncation() {
            e.add_term(desc.generator_word(g), Rational::ONE);
        }
        e
    }

    /// For `T(V)`: the word `v_{l_1} v_{l_2} ...` from 0-based letters.
    pub fn letters(desc: HopfDescriptor, letters: &[u8]) -> Result<Self, HopfError> {
        if desc.is_nil2() {
            let mut acc = Self::one(desc);
            for l in letters {
                if *l as usize >= desc.dim_v() {
                    return Err(HopfError::InvalidWord);
                }
                acc = acc.mul(&Self::generator(desc, *l as usize))?;
            }
            Ok(acc)
        } else {
            Self::basis(desc, Word(letters.to_vec()))
        }
    }

    pub fn from_terms<I>(desc: HopfDescriptor, terms: I) -> Result<Self, HopfError>
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let mut e = Self::zero(desc);
        for (w, c) in terms {
            if !word_shape_ok(&desc, &w) {
                return Err(HopfError::InvalidWord);
            }
            if desc.degree(&w) <= desc.truncation() {
                e.add_term(w, c);
            }
        }
        Ok(e)
    }

    pub fn descriptor(&self) -> HopfDescriptor {
        self.desc
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Rational> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, HopfError> {
        self.desc.check(&other.desc)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, HopfError> {
        self.add(&other.scaled(&-Rational::ONE))
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.desc);
        }
        AlgebraElement { desc: self.desc, terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, HopfError> {
        self.desc.check(&other.desc)?;
        let mut out = Self::zero(self.desc);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let ab = a * b;
                for (w, c) in self.desc.mul_words(u, v) {
                    out.add_term(w, &c * &ab);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.desc);
        for _ in 0..k {
            acc = acc.mul(self).expect("same descriptor");
        }
        acc
    }

    /// `[a, b] = ab - ba`
    pub fn lie_bracket(&self, other: &Self) -> Result<Self, HopfError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn antipode(&self) -> Self {
        let mut out = Self::zero(self.desc);
        for (w, c) in &self.terms {
            for (s, d) in self.desc.antipode_word(w) {
                out.add_term(s, &d * c);
            }
        }
        out
    }

    pub fn counit(&self) -> Rational {
        self.terms
            .iter()
            .filter(|(w, _)| self.desc.is_unit_word(w))
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// `Δ^k(a)` as a tensor of arity `k + 1` (`k = 0` returns `a` itself).
    pub fn coproduct_iter(&self, k: usize) -> TensorElement {
        let mut t = TensorElement::from_algebra(self);
        for _ in 0..k {
            t = t.coproduct_last();
        }
        t
    }

    pub fn coproduct(&self) -> TensorElement {
        self.coproduct_iter(1)
    }

    /// Degree of every term, or `None` for zero / inhomogeneous elements.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|w| self.desc.degree(w));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Largest filtration index among the terms (`0` for zero).
    pub fn filtration_degree(&self) -> usize {
        self.terms.keys().map(|w| self.desc.filtration(w)).max().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|w| self.desc.degree(w)).max().unwrap_or(0)
    }

    /// Keeps only the terms of the given degree.
    pub fn degree_part(&self, degree: usize) -> Self {
        AlgebraElement {
            desc: self.desc,
            terms: self.terms.iter().filter(|(w, _)| self.desc.degree(w) == degree).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// Same element viewed with another truncation (terms above it are dropped).
    pub fn retruncate(&self, desc: HopfDescriptor) -> Result<Self, HopfError> {
        if desc.kind() != self.desc.kind() {
            return Err(HopfError::DescriptorMismatch);
        }
        Self::from_terms(desc, self.terms.iter().map(|(w, c)| (w.clone(), c.clone())))
    }

    pub fn to_string_pretty(&self) -> String {
        alloc::format!("{self}")
    }
}

pub(crate) fn word_shape_ok(desc: &HopfDescriptor, w: &Word) -> bool {
    match desc.kind() {
        super::AlgebraKind::Tensor { dim } => w.0.iter().all(|l| (*l as usize) < dim),
        super::AlgebraKind::EnvelopingNil2 { dim } => w.0.len() == dim + desc.num_z(),
    }
}

pub(crate) fn fmt_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, &'a Rational)>,
{
    let mut first = true;
    for (w, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        if mag.is_one() {
            write!(f, "{w}")?;
        } else {
            write!(f, "{mag}*{w}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sorted: Vec<(&Word, &Rational)> = self.terms.iter().collect();
        sorted.sort_by(|a, b| self.desc.display_cmp(a.0, b.0));
        let terms: Vec<(String, &Rational)> = sorted.into_iter().map(|(w, c)| (self.desc.format_word(w), c)).collect();
        fmt_terms(f, terms.into_iter())
    }
}
