//! PBW symmetrization `σ : Sym(𝔤) → U(𝔤)` and its graded inverse for the
//! class-two enveloping algebra, plus the straightening constants expressing
//! `XⁿYᵏ` and `YᵏXⁿ` in the symmetrized basis of the Heisenberg algebra.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::hopf::{AlgebraElement, HopfDescriptor, HopfError, TensorElement, Word};
use crate::linalg::{solve, IndexedBasis, SparseMatrix, SparseVector};
use crate::rational::{binomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PbwError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("PBW maps are implemented for the class-two enveloping algebra only")]
    WrongKind,
    #[error("element has filtration degree {found}, above the requested {bound}")]
    NotInFiltration { found: usize, bound: usize },
    #[error("no straightening coefficient with i = {i} for (n, k) = ({n}, {k})")]
    Degenerate { n: usize, k: usize, i: usize },
    #[error("symmetrized monomial is not in the span of the σ-basis")]
    NotInSpan,
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::ONE, |acc, k| acc * Rational::from_integer(k))
}

/// A polynomial in the symmetric algebra on the primitive basis
/// `x_1..x_d, z_12, ...` of `L₍₂₎(V)`. Monomials are exponent vectors in the
/// same layout as PBW words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    desc: HopfDescriptor,
    terms: BTreeMap<Word, Rational>,
}

impl SymPoly {
    pub fn zero(desc: HopfDescriptor) -> Result<Self, PbwError> {
        if !desc.is_nil2() {
            return Err(PbwError::WrongKind);
        }
        Ok(SymPoly { desc, terms: BTreeMap::new() })
    }

    pub fn monomial(desc: HopfDescriptor, exponents: Word) -> Result<Self, PbwError> {
        let mut p = Self::zero(desc)?;
        desc.validate_word(&exponents)?;
        p.terms.insert(exponents, Rational::ONE);
        Ok(p)
    }

    /// The monomial `Π g_k^{e_k}` from `(generator, exponent)` pairs.
    pub fn from_powers(desc: HopfDescriptor, powers: &[(usize, u8)]) -> Result<Self, PbwError> {
        let mut w = vec![0u8; desc.num_generators()];
        for &(g, e) in powers {
            *w.get_mut(g).ok_or(HopfError::InvalidWord)? += e;
        }
        Self::monomial(desc, Word(w))
    }

    pub fn from_terms<I>(desc: HopfDescriptor, terms: I) -> Result<Self, PbwError>
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let mut p = Self::zero(desc)?;
        for (w, c) in terms {
            desc.validate_word(&w)?;
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn descriptor(&self) -> HopfDescriptor {
        self.desc
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or(Rational::ZERO)
    }

    fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert(Rational::ZERO);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PbwError> {
        if self.desc != other.desc {
            return Err(HopfError::DescriptorMismatch.into());
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = SymPoly { desc: self.desc, terms: BTreeMap::new() };
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// Polynomial degree (number of Lie factors) of every term, if homogeneous.
    pub fn sym_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|w| self.desc.filtration(w));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// The standard coproduct `Δ(g) = g ⊗ 1 + 1 ⊗ g` extended multiplicatively.
    pub fn coproduct(&self) -> BTreeMap<(Word, Word), Rational> {
        let mut out: BTreeMap<(Word, Word), Rational> = BTreeMap::new();
        for (w, c) in &self.terms {
            let mut splits: Vec<(Vec<u8>, Vec<u8>, Rational)> = vec![(Vec::new(), Vec::new(), c.clone())];
            for &e in &w.0 {
                let mut next = Vec::new();
                for (l, r, coef) in &splits {
                    for b in 0..=e {
                        let mut l = l.clone();
                        let mut r = r.clone();
                        l.push(b);
                        r.push(e - b);
                        next.push((l, r, coef * &binomial(e as usize, b as usize)));
                    }
                }
                splits = next;
            }
            for (l, r, coef) in splits {
                *out.entry((Word(l), Word(r))).or_insert(Rational::ZERO) += coef;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let desc = self.desc;
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| desc.display_cmp(a.0, b.0));
        crate::hopf::fmt_terms(f, terms.into_iter().map(|(w, c)| (desc.format_word(w), c)))
    }
}

/// `σ(F_1^{a_1} ⋯ F_r^{a_r})` for arbitrary elements `F_k`: the average of all
/// orderings of the `Σ a_k` factors.
///
/// Runs over exponent sub-vectors rather than permutations, so the cost is
/// `Π (a_k + 1)` products instead of `(Σ a_k)!`.
pub fn symmetrized_power_product(desc: HopfDescriptor, factors: &[(AlgebraElement, usize)]) -> Result<AlgebraElement, PbwError> {
    for (f, _) in factors {
        if f.descriptor() != desc {
            return Err(HopfError::DescriptorMismatch.into());
        }
    }
    let a: Vec<usize> = factors.iter().map(|(_, e)| *e).collect();
    let total: usize = a.iter().sum();
    // Sum over distinct arrangements, built one factor at a time.
    let mut layer: BTreeMap<Vec<usize>, AlgebraElement> = BTreeMap::new();
    layer.insert(vec![0; a.len()], AlgebraElement::one(desc));
    for _ in 0..total {
        let mut next: BTreeMap<Vec<usize>, AlgebraElement> = BTreeMap::new();
        for (b, val) in &layer {
            for (k, (f, _)) in factors.iter().enumerate() {
                if b[k] == a[k] {
                    continue;
                }
                let mut nb = b.clone();
                nb[k] += 1;
                let prod = val.mul(f)?;
                match next.get_mut(&nb) {
                    Some(acc) => *acc = acc.add(&prod)?,
                    None => {
                        next.insert(nb, prod);
                    }
                }
            }
        }
        layer = next;
    }
    let sum = layer.remove(&a).unwrap_or_else(|| AlgebraElement::zero(desc));
    let weight = &a.iter().fold(Rational::ONE, |acc, &e| acc * factorial(e)) / &factorial(total);
    Ok(sum.scaled(&weight))
}

/// `σ(p)`, straightened into the PBW basis.
pub fn symmetrize(p: &SymPoly) -> Result<AlgebraElement, PbwError> {
    let desc = p.desc;
    let mut out = AlgebraElement::zero(desc);
    for (w, c) in &p.terms {
        let factors: Vec<(AlgebraElement, usize)> = w
            .0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(g, e)| (AlgebraElement::generator(desc, g), *e as usize))
            .collect();
        out = out.add(&symmetrized_power_product(desc, &factors)?.scaled(c))?;
    }
    Ok(out)
}

/// `π_i(u)`: collapse of `(id − ηε)^{⊗i} Δ^{i−1}(u)` to `Sym^i`, normalized so
/// that `π_i ∘ σ_i = id`. Vanishes on `U_{i−1}`.
pub fn pbw_inverse(u: &AlgebraElement, i: usize) -> Result<SymPoly, PbwError> {
    let desc = u.descriptor();
    let mut out = SymPoly::zero(desc)?;
    let found = u.filtration_degree();
    if found > i {
        return Err(PbwError::NotInFiltration { found, bound: i });
    }
    if i == 0 {
        return SymPoly::from_terms(desc, [(desc.unit_word(), u.counit())]);
    }
    let t = u.coproduct_iter(i - 1);
    let norm = factorial(i).recip();
    for (words, c) in t.terms() {
        if words.iter().any(|w| desc.is_unit_word(w)) {
            continue;
        }
        // Every surviving factor lies in U_1 without constant term, i.e. is a
        // single generator.
        let mut mono = vec![0u8; desc.num_generators()];
        for w in words {
            debug_assert_eq!(desc.filtration(w), 1);
            for (k, e) in w.0.iter().enumerate() {
                mono[k] += e;
            }
        }
        out.add_term(Word(mono), c * &norm);
    }
    Ok(out)
}

/// Coefficients of `XⁿYᵏ` (`c`) and `YᵏXⁿ` (`d`) in the basis
/// `σ(X^{n−i} Y^{k−i} [X,Y]^i)`, `0 ≤ i ≤ min(n, k)`, of the Heisenberg
/// enveloping algebra. Entry `0` is the leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StraighteningConstants {
    pub n: usize,
    pub k: usize,
    pub c: Vec<Rational>,
    pub d: Vec<Rational>,
}

impl StraighteningConstants {
    pub fn c(&self, i: usize) -> Result<&Rational, PbwError> {
        self.c.get(i).ok_or(PbwError::Degenerate { n: self.n, k: self.k, i })
    }

    pub fn d(&self, i: usize) -> Result<&Rational, PbwError> {
        self.d.get(i).ok_or(PbwError::Degenerate { n: self.n, k: self.k, i })
    }
}

pub fn straighten_constants(n: usize, k: usize) -> Result<StraighteningConstants, PbwError> {
    let desc = HopfDescriptor::nil2(2, (n + k).max(1))?;
    let x = AlgebraElement::generator(desc, 0);
    let y = AlgebraElement::generator(desc, 1);
    let z = AlgebraElement::generator(desc, 2);
    let m = n.min(k);
    let sigma_basis = (0..=m)
        .map(|i| symmetrized_power_product(desc, &[(x.clone(), n - i), (y.clone(), k - i), (z.clone(), i)]))
        .collect::<Result<Vec<_>, _>>()?;
    let words = IndexedBasis::new((0..=m).map(|i| Word(vec![(n - i) as u8, (k - i) as u8, i as u8])).collect());
    let vector = |e: &AlgebraElement| -> Result<SparseVector, PbwError> {
        let mut entries = Vec::new();
        for (w, c) in e.terms() {
            entries.push((words.index_of(w).ok_or(PbwError::NotInSpan)?, c.clone()));
        }
        Ok(SparseVector::from_entries(words.len(), entries))
    };
    let cols = sigma_basis.iter().map(&vector).collect::<Result<Vec<_>, _>>()?;
    let mat = SparseMatrix::from_columns(words.len(), &cols).expect("square");
    let coeffs = |e: &AlgebraElement| -> Result<Vec<Rational>, PbwError> {
        let sol = solve(&mat, &vector(e)?).expect("shapes agree").ok_or(PbwError::NotInSpan)?;
        Ok(sol.to_dense())
    };
    let c = coeffs(&x.pow(n).mul(&y.pow(k))?)?;
    let d = coeffs(&y.pow(k).mul(&x.pow(n))?)?;
    Ok(StraighteningConstants { n, k, c, d })
}

/// The class-two prediction `Σ_k (−1)^k C(j,k) σ(Y^k X^i) ⊗ Y^{j−k}` for the
/// image of `X^i ⊗ Y^j` under `x_1 ↦ x_2⁻¹x_1, x_2 ↦ x_2` (modulo conjugation).
pub fn eta_prediction(x: &AlgebraElement, y: &AlgebraElement, i: usize, j: usize) -> Result<TensorElement, PbwError> {
    let desc = x.descriptor();
    let mut out = TensorElement::zero(desc, 2);
    for k in 0..=j {
        let sign = if k % 2 == 0 { Rational::ONE } else { -Rational::ONE };
        let coef = sign * binomial(j, k);
        let left = symmetrized_power_product(desc, &[(x.clone(), i), (y.clone(), k)])?;
        let t = TensorElement::tensor_product(&[left, y.pow(j - k)])?;
        out.add_scaled(&t, &coef)?;
    }
    Ok(out)
}
