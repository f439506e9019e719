use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::element::{fmt_terms, word_shape_ok};
use super::{AlgebraElement, HopfDescriptor, HopfError, Word};
use crate::rational::Rational;

/// An element of `H^{⊗n}`: a linear combination of `n`-tuples of basis words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    desc: HopfDescriptor,
    arity: usize,
    terms: BTreeMap<Vec<Word>, Rational>,
}

impl TensorElement {
    pub fn zero(desc: HopfDescriptor, arity: usize) -> Self {
        TensorElement { desc, arity, terms: BTreeMap::new() }
    }

    /// The pure tensor `w_1 ⊗ … ⊗ w_n` of basis words.
    pub fn pure(desc: HopfDescriptor, words: Vec<Word>) -> Result<Self, HopfError> {
        let mut t = Self::zero(desc, words.len());
        for w in &words {
            if !word_shape_ok(&desc, w) {
                return Err(HopfError::InvalidWord);
            }
        }
        let total: usize = words.iter().map(|w| desc.degree(w)).sum();
        if total <= desc.truncation() {
            t.add_term(words, Rational::ONE);
        }
        Ok(t)
    }

    pub fn from_terms<I>(desc: HopfDescriptor, arity: usize, terms: I) -> Result<Self, HopfError>
    where
        I: IntoIterator<Item = (Vec<Word>, Rational)>,
    {
        let mut t = Self::zero(desc, arity);
        for (ws, c) in terms {
            if ws.len() != arity {
                return Err(HopfError::ArityMismatch { expected: arity, found: ws.len() });
            }
            if ws.iter().any(|w| !word_shape_ok(&desc, w)) {
                return Err(HopfError::InvalidWord);
            }
            t.add_term(ws, c);
        }
        Ok(t)
    }

    pub fn from_algebra(a: &AlgebraElement) -> Self {
        let mut t = Self::zero(a.descriptor(), 1);
        for (w, c) in a.terms() {
            t.add_term(alloc::vec![w.clone()], c.clone());
        }
        t
    }

    /// `a_1 ⊗ … ⊗ a_n`.
    pub fn tensor_product(factors: &[AlgebraElement]) -> Result<Self, HopfError> {
        let desc = factors.first().map(|a| a.descriptor()).ok_or(HopfError::ArityMismatch { expected: 1, found: 0 })?;
        let mut acc = Self::zero(desc, 0);
        acc.add_term(Vec::new(), Rational::ONE);
        for a in factors {
            if a.descriptor() != desc {
                return Err(HopfError::DescriptorMismatch);
            }
            acc = acc.tensor(&Self::from_algebra(a))?;
        }
        Ok(acc)
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Result<Self, HopfError> {
        if self.desc != other.desc {
            return Err(HopfError::DescriptorMismatch);
        }
        let mut out = Self::zero(self.desc, self.arity + other.arity);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut ws = a.clone();
                ws.extend(b.iter().cloned());
                out.add_term(ws, x * y);
            }
        }
        Ok(out)
    }

    pub fn descriptor(&self) -> HopfDescriptor {
        self.desc
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, ws: &[Word]) -> Rational {
        self.terms.get(ws).cloned().unwrap_or_default()
    }

    /// Adds `c · ws`, dropping the term if it exceeds the truncation degree.
    pub fn add_term(&mut self, ws: Vec<Word>, c: Rational) {
        debug_assert_eq!(ws.len(), self.arity);
        if c.is_zero() {
            return;
        }
        if ws.iter().map(|w| self.desc.degree(w)).sum::<usize>() > self.desc.truncation() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(ws) {
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

    fn check(&self, other: &Self) -> Result<(), HopfError> {
        if self.desc != other.desc {
            return Err(HopfError::DescriptorMismatch);
        }
        if self.arity != other.arity {
            return Err(HopfError::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, HopfError> {
        self.check(other)?;
        let mut out = self.clone();
        for (ws, c) in &other.terms {
            out.add_term(ws.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, HopfError> {
        self.add(&other.scaled(&-Rational::ONE))
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) -> Result<(), HopfError> {
        self.check(other)?;
        for (ws, x) in &other.terms {
            self.add_term(ws.clone(), x * c);
        }
        Ok(())
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.desc, self.arity);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        }
        out
    }

    /// Applies a linear map given on basis words to factor `i`.
    pub fn map_factor<F>(&self, i: usize, mut f: F) -> Result<Self, HopfError>
    where
        F: FnMut(&Word) -> Vec<(Word, Rational)>,
    {
        if i >= self.arity {
            return Err(HopfError::FactorOutOfRange(i));
        }
        let mut out = Self::zero(self.desc, self.arity);
        for (ws, c) in &self.terms {
            for (w, d) in f(&ws[i]) {
                let mut nws = ws.clone();
                nws[i] = w;
                out.add_term(nws, c * &d);
            }
        }
        Ok(out)
    }

    pub fn antipode_factor(&self, i: usize) -> Result<Self, HopfError> {
        let desc = self.desc;
        self.map_factor(i, |w| desc.antipode_word(w))
    }

    /// Applies `Δ` to factor `i`; the two halves occupy positions `i, i+1`.
    pub fn coproduct_factor(&self, i: usize) -> Result<Self, HopfError> {
        if i >= self.arity {
            return Err(HopfError::FactorOutOfRange(i));
        }
        let mut out = Self::zero(self.desc, self.arity + 1);
        for (ws, c) in &self.terms {
            for ((l, r), d) in self.desc.coproduct_word(&ws[i]) {
                let mut nws = Vec::with_capacity(self.arity + 1);
                nws.extend(ws[..i].iter().cloned());
                nws.push(l);
                nws.push(r);
                nws.extend(ws[i + 1..].iter().cloned());
                out.add_term(nws, c * &d);
            }
        }
        Ok(out)
    }

    pub(crate) fn coproduct_last(&self) -> Self {
        self.coproduct_factor(self.arity - 1).expect("nonempty arity")
    }

    /// Applies `ε` to factor `i`, lowering the arity.
    pub fn counit_factor(&self, i: usize) -> Result<Self, HopfError> {
        if i >= self.arity {
            return Err(HopfError::FactorOutOfRange(i));
        }
        let mut out = Self::zero(self.desc, self.arity - 1);
        for (ws, c) in &self.terms {
            if self.desc.is_unit_word(&ws[i]) {
                let mut nws = ws.clone();
                nws.remove(i);
                out.add_term(nws, c.clone());
            }
        }
        Ok(out)
    }

    /// Inserts the unit `1` as a new factor at position `i`.
    pub fn insert_unit(&self, i: usize) -> Result<Self, HopfError> {
        if i > self.arity {
            return Err(HopfError::FactorOutOfRange(i));
        }
        let mut out = Self::zero(self.desc, self.arity + 1);
        for (ws, c) in &self.terms {
            let mut nws = ws.clone();
            nws.insert(i, self.desc.unit_word());
            out.add_term(nws, c.clone());
        }
        Ok(out)
    }

    /// Multiplies factors `i` and `i+1`.
    pub fn multiply_factors(&self, i: usize) -> Result<Self, HopfError> {
        if i + 1 >= self.arity {
            return Err(HopfError::FactorOutOfRange(i + 1));
        }
        let mut out = Self::zero(self.desc, self.arity - 1);
        for (ws, c) in &self.terms {
            for (w, d) in self.desc.mul_words(&ws[i], &ws[i + 1]) {
                let mut nws = Vec::with_capacity(self.arity - 1);
                nws.extend(ws[..i].iter().cloned());
                nws.push(w);
                nws.extend(ws[i + 2..].iter().cloned());
                out.add_term(nws, c * &d);
            }
        }
        Ok(out)
    }

    /// Reorders factors: output factor `k` is input factor `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self, HopfError> {
        if perm.len() != self.arity {
            return Err(HopfError::ArityMismatch { expected: self.arity, found: perm.len() });
        }
        let mut out = Self::zero(self.desc, self.arity);
        for (ws, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| ws[p].clone()).collect(), c.clone());
        }
        Ok(out)
    }

    /// Factorwise product `(a_1 ⊗ …)(b_1 ⊗ …) = a_1 b_1 ⊗ …`.
    pub fn componentwise_mul(&self, other: &Self) -> Result<Self, HopfError> {
        self.check(other)?;
        let mut out = Self::zero(self.desc, self.arity);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut partial: Vec<(Vec<Word>, Rational)> = alloc::vec![(Vec::with_capacity(self.arity), x * y)];
                for k in 0..self.arity {
                    let prods = self.desc.mul_words(&a[k], &b[k]);
                    let mut next = Vec::with_capacity(partial.len() * prods.len());
                    for (ws, c) in &partial {
                        for (w, d) in &prods {
                            let mut nws = ws.clone();
                            nws.push(w.clone());
                            next.push((nws, c * d));
                        }
                    }
                    partial = next;
                }
                for (ws, c) in partial {
                    out.add_term(ws, c);
                }
            }
        }
        Ok(out)
    }

    /// The single factor of an arity-one tensor as an algebra element.
    pub fn to_algebra(&self) -> Result<AlgebraElement, HopfError> {
        if self.arity != 1 {
            return Err(HopfError::ArityMismatch { expected: 1, found: self.arity });
        }
        AlgebraElement::from_terms(self.desc, self.terms.iter().map(|(ws, c)| (ws[0].clone(), c.clone())))
    }

    pub fn term_degree(&self, ws: &[Word]) -> usize {
        ws.iter().map(|w| self.desc.degree(w)).sum()
    }

    /// Total degree of every term, or `None` for zero / inhomogeneous tensors.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|ws| self.term_degree(ws));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Splits into homogeneous components by total degree.
    pub fn degree_parts(&self) -> BTreeMap<usize, TensorElement> {
        let mut out: BTreeMap<usize, TensorElement> = BTreeMap::new();
        for (ws, c) in &self.terms {
            let d = self.term_degree(ws);
            out.entry(d).or_insert_with(|| Self::zero(self.desc, self.arity)).add_term(ws.clone(), c.clone());
        }
        out
    }

    /// Least `i` with the tensor in `V_i = Σ U_{p_1} ⊗ … ⊗ U_{p_n}`, `p_1+…+p_n = i`.
    pub fn filtration_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|ws| ws.iter().map(|w| self.desc.filtration(w)).sum::<usize>())
            .max()
            .unwrap_or(0)
    }

    pub fn retruncate(&self, desc: HopfDescriptor) -> Result<Self, HopfError> {
        if desc.kind() != self.desc.kind() {
            return Err(HopfError::DescriptorMismatch);
        }
        Self::from_terms(desc, self.arity, self.terms.iter().map(|(w, c)| (w.clone(), c.clone())))
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sorted: Vec<(&Vec<Word>, &Rational)> = self.terms.iter().collect();
        sorted.sort_by(|a, b| {
            a.0.iter().zip(b.0.iter()).fold(core::cmp::Ordering::Equal, |acc, (x, y)| acc.then_with(|| self.desc.display_cmp(x, y)))
        });
        let terms: Vec<(String, &Rational)> = sorted
            .into_iter()
            .map(|(ws, c)| {
                let parts: Vec<String> = ws.iter().map(|w| self.desc.format_word(w)).collect();
                (parts.join(" ⊗ "), c)
            })
            .collect();
        fmt_terms(f, terms.into_iter())
    }
}
