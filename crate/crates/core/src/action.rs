//! The Aut(F_n) action on `H^{⊗n}` coming from `Hom_H(F_n; H) ≅ H^{⊗n}`,
//! the conjugation action `⊛`, and the quotient `H^{⊗n}` modulo the span of
//! `(h - ε(h))⊛t`.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::freegroup::{Automorphism, FreeGroupError, GroupWord, Letter, NielsenGen};
use crate::hopf::{AlgebraElement, HopfDescriptor, HopfError, TensorElement, Word};
use crate::linalg::{IndexedBasis, RowReducer, SparseMatrix, SparseVector};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActionError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
    #[error("tensor arity {found} does not match rank {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("degree {degree} exceeds the truncation degree {truncation}")]
    DegreeTooLarge { degree: usize, truncation: usize },
    #[error("operation needs the {0} algebra")]
    WrongKind(&'static str),
    #[error("operator is not nilpotent on this component")]
    NotNilpotent,
}

/// A Hopf algebra together with the rank `n` of the free group acting on `H^{⊗n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ActionContext {
    desc: HopfDescriptor,
    n: usize,
}

impl ActionContext {
    pub fn new(desc: HopfDescriptor, n: usize) -> Result<Self, ActionError> {
        if n == 0 {
            return Err(ActionError::ZeroRank);
        }
        Ok(ActionContext { desc, n })
    }

    pub fn descriptor(&self) -> HopfDescriptor {
        self.desc
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Basis tensors of `H^{⊗n}` of the given total degree, sorted.
    pub fn basis(&self, degree: usize) -> Vec<Vec<Word>> {
        self.desc.tensor_basis(self.n, degree)
    }

    fn check(&self, t: &TensorElement) -> Result<(), ActionError> {
        if t.descriptor() != self.desc {
            return Err(HopfError::DescriptorMismatch.into());
        }
        if t.arity() != self.n {
            return Err(ActionError::ArityMismatch { expected: self.n, found: t.arity() });
        }
        Ok(())
    }

    pub fn act(&self, aut: &Automorphism, t: &TensorElement) -> Result<TensorElement, ActionError> {
        self.check(t)?;
        act(aut, t)
    }

    pub fn act_nielsen(&self, seq: &[NielsenGen], t: &TensorElement) -> Result<TensorElement, ActionError> {
        self.act(&Automorphism::from_nielsen(seq, self.n)?, t)
    }

    /// Matrix of `ρ(ψ)` on the degree component, columns indexed by [`Self::basis`].
    pub fn action_matrix(&self, aut: &Automorphism, degree: usize) -> Result<(IndexedBasis<Vec<Word>>, SparseMatrix), ActionError> {
        let basis = IndexedBasis::new(self.basis(degree));
        let mut cols = Vec::with_capacity(basis.len());
        for key in basis.keys() {
            let t = TensorElement::pure(self.desc, key.clone())?;
            cols.push(to_vector(&basis, &self.act(aut, &t)?));
        }
        let m = SparseMatrix::from_columns(basis.len(), &cols).expect("square");
        Ok((basis, m))
    }
}

/// `φ_k(w_1, …, w_k)` for the element of `Hom_H(F_n; H)` evaluating to `h`.
///
/// Each factor `h^i` is split by iterated coproducts, one Sweedler component
/// per occurrence of `x_i^{±1}` in reading order (antipode on inverse
/// letters); the components inside each word are multiplied. Splitting is
/// done lazily: at each occurrence the remainder `r` is replaced by the
/// terms of `Δ(r)`, which by coassociativity gives the same result as
/// expanding `Δ^{K-1}` up front.
pub fn hom_extend(h: &TensorElement, words: &[GroupWord]) -> Result<TensorElement, ActionError> {
    let desc = h.descriptor();
    let n = h.arity();
    for w in words {
        if w.min_rank() > n {
            return Err(FreeGroupError::GeneratorOutOfRange { index: w.min_rank() - 1, rank: n }.into());
        }
    }
    let k = words.len();
    let letters: Vec<(usize, Letter)> =
        words.iter().enumerate().flat_map(|(i, w)| w.letters().iter().map(move |l| (i, *l))).collect();
    let mut counts = vec![0usize; n];
    for (_, l) in &letters {
        counts[l.generator] += 1;
    }
    let unit = desc.unit_word();

    type State = BTreeMap<(Vec<Word>, Vec<Word>), Rational>;
    let mut out = TensorElement::zero(desc, k);
    for (ws, c) in h.terms() {
        if (0..n).any(|i| counts[i] == 0 && !desc.is_unit_word(&ws[i])) {
            continue;
        }
        let mut state: State = BTreeMap::new();
        state.insert((ws.clone(), vec![unit.clone(); k]), c.clone());
        let mut seen = vec![0usize; n];
        for &(wi, l) in &letters {
            let g = l.generator;
            seen[g] += 1;
            let last = seen[g] == counts[g];
            let mut next: State = BTreeMap::new();
            for ((rem, outs), c) in state {
                let pieces: Vec<((Word, Word), Rational)> = if last {
                    vec![((rem[g].clone(), unit.clone()), Rational::ONE)]
                } else {
                    desc.coproduct_word(&rem[g])
                };
                for ((a, b), d) in pieces {
                    let comp = if l.inverse { desc.antipode_word(&a) } else { vec![(a, Rational::ONE)] };
                    let cd = &c * &d;
                    for (s, e) in comp {
                        let cde = &cd * &e;
                        for (prod, f) in desc.mul_words(&outs[wi], &s) {
                            let mut rem2 = rem.clone();
                            rem2[g] = b.clone();
                            let mut outs2 = outs.clone();
                            outs2[wi] = prod;
                            *next.entry((rem2, outs2)).or_default() += &cde * &f;
                        }
                    }
                }
            }
            next.retain(|_, c| !c.is_zero());
            state = next;
        }
        for ((_, outs), c) in state {
            out.add_term(outs, c);
        }
    }
    Ok(out)
}

/// `ρ(ψ)(t) = φ_n(ψ⁻¹(x_1), …, ψ⁻¹(x_n))`, a left action.
pub fn act(aut: &Automorphism, t: &TensorElement) -> Result<TensorElement, ActionError> {
    if aut.rank() != t.arity() {
        return Err(ActionError::ArityMismatch { expected: aut.rank(), found: t.arity() });
    }
    hom_extend(t, aut.inverse_map().images())
}

/// `h ⊛ (h_1 ⊗ … ⊗ h_n) = h_(1) h_1 S(h_(2)) ⊗ … ⊗ h_(2n-1) h_n S(h_(2n))`.
pub fn conjugate(h: &AlgebraElement, t: &TensorElement) -> Result<TensorElement, ActionError> {
    let desc = t.descriptor();
    if h.descriptor() != desc {
        return Err(HopfError::DescriptorMismatch.into());
    }
    let n = t.arity();
    let split = h.coproduct_iter(2 * n - 1);
    let mut out = TensorElement::zero(desc, n);
    for (hs, c) in split.terms() {
        let lefts: Vec<AlgebraElement> = (0..n).map(|i| AlgebraElement::basis(desc, hs[2 * i].clone())).collect::<Result<_, _>>()?;
        let rights: Vec<AlgebraElement> =
            (0..n).map(|i| AlgebraElement::basis(desc, hs[2 * i + 1].clone()).map(|a| a.antipode())).collect::<Result<_, _>>()?;
        for (ts, d) in t.terms() {
            let mut factors = Vec::with_capacity(n);
            for i in 0..n {
                let mid = AlgebraElement::basis(desc, ts[i].clone())?;
                factors.push(lefts[i].mul(&mid)?.mul(&rights[i])?);
            }
            out.add_scaled(&TensorElement::tensor_product(&factors)?, &(c * d))?;
        }
    }
    Ok(out)
}

/// `v ⊛ t` for primitive `v`: `Σ_i t_1 ⊗ … ⊗ (v t_i - t_i v) ⊗ … ⊗ t_n`.
pub fn conjugate_primitive(v: &AlgebraElement, t: &TensorElement) -> Result<TensorElement, ActionError> {
    let desc = t.descriptor();
    if v.descriptor() != desc {
        return Err(HopfError::DescriptorMismatch.into());
    }
    let mut out = TensorElement::zero(desc, t.arity());
    for i in 0..t.arity() {
        let part = t.map_factor(i, |w| {
            let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
            for (g, c) in v.terms() {
                for (p, d) in desc.mul_words(g, w) {
                    *acc.entry(p).or_default() += c * &d;
                }
                for (p, d) in desc.mul_words(w, g) {
                    *acc.entry(p).or_default() -= c * &d;
                }
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        })?;
        out.add_scaled(&part, &Rational::ONE)?;
    }
    Ok(out)
}

pub fn to_vector(basis: &IndexedBasis<Vec<Word>>, t: &TensorElement) -> SparseVector {
    SparseVector::from_entries(
        basis.len(),
        t.terms().iter().map(|(ws, c)| (basis.index_of(ws).expect("tensor lies in the component"), c.clone())),
    )
}

pub fn from_vector(desc: HopfDescriptor, arity: usize, basis: &IndexedBasis<Vec<Word>>, v: &SparseVector) -> TensorElement {
    TensorElement::from_terms(desc, arity, v.entries().iter().map(|(i, c)| (basis.key(*i).clone(), c.clone())))
        .expect("basis keys are valid")
}

struct DegreeSpace {
    basis: IndexedBasis<Vec<Word>>,
    reducer: RowReducer,
}

/// The quotient `\overline{H^{⊗n}}`, with the subspace computed lazily per degree.
///
/// Per-degree data is write-once and may be read from several threads.
pub struct QuotientModule {
    ctx: ActionContext,
    cache: Vec<OnceBox<DegreeSpace>>,
}

impl core::fmt::Debug for QuotientModule {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("QuotientModule").field("ctx", &self.ctx).finish_non_exhaustive()
    }
}

impl QuotientModule {
    pub fn new(ctx: ActionContext) -> Self {
        let cache = (0..=ctx.desc.truncation()).map(|_| OnceBox::new()).collect();
        QuotientModule { ctx, cache }
    }

    pub fn context(&self) -> ActionContext {
        self.ctx
    }

    /// The spanning set `{v ⊛ t}` over primitive generators `v` and basis tensors `t`.
    pub fn tilde_spanning_set(&self, degree: usize) -> Result<Vec<TensorElement>, ActionError> {
        let desc = self.ctx.desc;
        self.check_degree(degree)?;
        let mut out = Vec::new();
        for g in 0..desc.num_generators() {
            let gd = desc.generator_degree(g);
            if gd > degree {
                continue;
            }
            let v = AlgebraElement::generator(desc, g);
            for key in self.ctx.basis(degree - gd) {
                let t = TensorElement::pure(desc, key)?;
                let c = conjugate_primitive(&v, &t)?;
                if !c.is_zero() {
                    out.push(c);
                }
            }
        }
        Ok(out)
    }

    fn check_degree(&self, degree: usize) -> Result<(), ActionError> {
        let truncation = self.ctx.desc.truncation();
        if degree > truncation {
            return Err(ActionError::DegreeTooLarge { degree, truncation });
        }
        Ok(())
    }

    fn space(&self, degree: usize) -> Result<&DegreeSpace, ActionError> {
        self.check_degree(degree)?;
        Ok(self.cache[degree].get_or_init(|| {
            let basis = IndexedBasis::new(self.ctx.basis(degree));
            let mut reducer = RowReducer::new(basis.len());
            for t in self.tilde_spanning_set(degree).expect("degree checked") {
                reducer.insert(&to_vector(&basis, &t));
            }
            Box::new(DegreeSpace { basis, reducer })
        }))
    }

    /// Reduced echelon basis of the subspace in the given degree.
    pub fn tilde_basis(&self, degree: usize) -> Result<Vec<TensorElement>, ActionError> {
        let sp = self.space(degree)?;
        Ok(sp.reducer.basis().map(|v| from_vector(self.ctx.desc, self.ctx.n, &sp.basis, v)).collect())
    }

    pub fn tilde_dim(&self, degree: usize) -> Result<usize, ActionError> {
        Ok(self.space(degree)?.reducer.rank())
    }

    pub fn ambient_dim(&self, degree: usize) -> Result<usize, ActionError> {
        Ok(self.space(degree)?.basis.len())
    }

    pub fn quotient_dim(&self, degree: usize) -> Result<usize, ActionError> {
        let sp = self.space(degree)?;
        Ok(sp.basis.len() - sp.reducer.rank())
    }

    /// Canonical representative of a homogeneous tensor.
    pub fn reduce(&self, t: &TensorElement) -> Result<TensorElement, ActionError> {
        self.ctx.check(t)?;
        if t.is_zero() {
            return Ok(t.clone());
        }
        let degree = t.homogeneous_degree().ok_or(ActionError::Inhomogeneous)?;
        let sp = self.space(degree)?;
        let v = sp.reducer.reduce(&to_vector(&sp.basis, t));
        Ok(from_vector(self.ctx.desc, self.ctx.n, &sp.basis, &v))
    }

    /// Like [`Self::reduce`], degree by degree.
    pub fn reduce_any(&self, t: &TensorElement) -> Result<TensorElement, ActionError> {
        self.ctx.check(t)?;
        let mut out = TensorElement::zero(self.ctx.desc, self.ctx.n);
        for part in t.degree_parts().values() {
            out.add_scaled(&self.reduce(part)?, &Rational::ONE)?;
        }
        Ok(out)
    }

    pub fn is_zero(&self, t: &TensorElement) -> Result<bool, ActionError> {
        Ok(self.reduce_any(t)?.is_zero())
    }
}

// ---- associated graded ----

/// `gr ρ(ψ)` on `V_i / V_{i-1}` and the linear action on `Sym^i(𝔤 ⊗ 𝕜^n)`,
/// over the same basis: tuples of PBW words of total filtration exactly `i`.
#[derive(Debug, Clone)]
pub struct GradedComparison {
    pub basis: IndexedBasis<Vec<Word>>,
    pub graded: SparseMatrix,
    pub direct: SparseMatrix,
}

impl GradedComparison {
    pub fn agree(&self) -> bool {
        self.graded == self.direct
    }
}

pub fn assoc_graded_matrix(ctx: &ActionContext, aut: &Automorphism, i: usize) -> Result<GradedComparison, ActionError> {
    let desc = ctx.desc;
    if !desc.is_nil2() {
        return Err(ActionError::WrongKind("enveloping"));
    }
    if 2 * i > desc.truncation() {
        return Err(ActionError::DegreeTooLarge { degree: 2 * i, truncation: desc.truncation() });
    }
    let filt = |ws: &[Word]| ws.iter().map(|w| desc.filtration(w)).sum::<usize>();
    let keys: Vec<Vec<Word>> = (i..=2 * i).flat_map(|g| ctx.basis(g)).filter(|ws| filt(ws) == i).collect();
    let basis = IndexedBasis::new(keys);

    let mut graded_cols = Vec::with_capacity(basis.len());
    for key in basis.keys() {
        let image = ctx.act(aut, &TensorElement::pure(desc, key.clone())?)?;
        graded_cols.push(SparseVector::from_entries(
            basis.len(),
            image.terms().iter().filter(|(ws, _)| filt(ws) == i).map(|(ws, c)| (basis.index_of(ws).expect("filtration i"), c.clone())),
        ));
    }

    // e_j ↦ Σ_k M_kj e_k with M_kj the exponent sum of x_j in ψ⁻¹(x_k)
    let m = aut.inverse_map().abelianization();
    let n = ctx.n;
    let ng = desc.num_generators();
    let mut direct_cols = Vec::with_capacity(basis.len());
    for key in basis.keys() {
        let mut poly: BTreeMap<Vec<Vec<u8>>, Rational> = BTreeMap::new();
        poly.insert(vec![vec![0u8; ng]; n], Rational::ONE);
        for (j, w) in key.iter().enumerate() {
            for (g, &e) in w.0.iter().enumerate() {
                for _ in 0..e {
                    let mut next: BTreeMap<Vec<Vec<u8>>, Rational> = BTreeMap::new();
                    for (mono, c) in &poly {
                        for (k, row) in m.iter().enumerate() {
                            if row[j] == 0 {
                                continue;
                            }
                            let mut mono2 = mono.clone();
                            mono2[k][g] += 1;
                            *next.entry(mono2).or_default() += c * &Rational::from_integer(row[j]);
                        }
                    }
                    next.retain(|_, c| !c.is_zero());
                    poly = next;
                }
            }
        }
        direct_cols.push(SparseVector::from_entries(
            basis.len(),
            poly.into_iter().map(|(mono, c)| {
                let ws: Vec<Word> = mono.into_iter().map(Word).collect();
                (basis.index_of(&ws).expect("same filtration"), c)
            }),
        ));
    }
    let graded = SparseMatrix::from_columns(basis.len(), &graded_cols).expect("square");
    let direct = SparseMatrix::from_columns(basis.len(), &direct_cols).expect("square");
    Ok(GradedComparison { basis, graded, direct })
}

// ---- the E/F experiment ----

/// How the unipotent matrices of GL_2(ℤ) are lifted to Aut(F_2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LiftConvention {
    /// `(1 1; 0 1)` ↦ `x_2 ↦ x_2 x_1`, `(1 0; 1 1)` ↦ `x_1 ↦ x_1 x_2`.
    Column,
    /// The transposed reading: `(1 1; 0 1)` ↦ `x_1 ↦ x_1 x_2`.
    Row,
}

impl LiftConvention {
    pub fn upper(self) -> Vec<NielsenGen> {
        match self {
            LiftConvention::Column => crate::freegroup::right_mul(1, 0),
            LiftConvention::Row => crate::freegroup::right_mul(0, 1),
        }
    }

    pub fn lower(self) -> Vec<NielsenGen> {
        match self {
            LiftConvention::Column => crate::freegroup::right_mul(0, 1),
            LiftConvention::Row => crate::freegroup::right_mul(1, 0),
        }
    }
}

/// `log(I + N) v = Σ_{k≥1} (-1)^{k+1} N^k v / k` for nilpotent `N`.
pub(crate) fn log_apply(n: &SparseMatrix, v: &SparseVector, max_steps: usize) -> Result<SparseVector, ActionError> {
    let mut out = SparseVector::zero(v.dim());
    let mut p = v.clone();
    for k in 1..=max_steps + 1 {
        p = n.mul_vec(&p).expect("square");
        if p.is_zero() {
            return Ok(out);
        }
        let c = Rational::new(if k % 2 == 1 { 1 } else { -1 }, k as i64);
        out.add_scaled(&p, &c);
    }
    Err(ActionError::NotNilpotent)
}

#[derive(Debug, Clone)]
pub struct EfDefect {
    pub convention: LiftConvention,
    /// `(id ⊗ ε)(([[E,F],E] - 2E)(x³ ⊗ y³))`.
    pub u: AlgebraElement,
    /// `24 [[x,y],y][[x,y],x]`.
    pub r: AlgebraElement,
    /// `c` with `u ≡ c [[x,y],y][[x,y],x]` modulo commutators, if one exists.
    pub constant: Option<Rational>,
    pub u_nonzero_mod_commutators: bool,
    pub matches: bool,
    /// Least `k` with `(ρ - id)^k = 0` on the component, for the two lifts.
    pub nilpotency: (usize, usize),
}

fn nilpotency_index(n: &SparseMatrix, limit: usize) -> Option<usize> {
    let mut p = n.clone();
    for k in 1..=limit {
        if p.is_zero() {
            return Some(k);
        }
        p = p.mul(n).expect("square");
    }
    None
}

/// `([[E,F],E] - 2E)(x³ ⊗ y³)` in `T(V)^{⊗2}`, `E = log ρ(upper)`, `F = log ρ(lower)`.
pub fn ef_defect_tensor(desc: HopfDescriptor, upper: &Automorphism, lower: &Automorphism) -> Result<(TensorElement, (usize, usize)), ActionError> {
    const DEG: usize = 6;
    if desc.dim_v() != 2 {
        return Err(ActionError::WrongKind("dim V = 2"));
    }
    if desc.truncation() < DEG {
        return Err(ActionError::DegreeTooLarge { degree: DEG, truncation: desc.truncation() });
    }
    let ctx = ActionContext::new(desc, 2)?;
    let (basis, a) = ctx.action_matrix(upper, DEG)?;
    let (_, b) = ctx.action_matrix(lower, DEG)?;
    let id = SparseMatrix::identity(basis.len());
    let na = sub_matrix(&a, &id);
    let nb = sub_matrix(&b, &id);
    let limit = basis.len();
    let nilpotency = (
        nilpotency_index(&na, DEG + 2).ok_or(ActionError::NotNilpotent)?,
        nilpotency_index(&nb, DEG + 2).ok_or(ActionError::NotNilpotent)?,
    );
    let e = |v: &SparseVector| log_apply(&na, v, limit);
    let f = |v: &SparseVector| log_apply(&nb, v, limit);

    let x3y3 = TensorElement::tensor_product(&[
        AlgebraElement::generator(desc, 0).pow(3),
        AlgebraElement::generator(desc, 1).pow(3),
    ])?;
    let v = to_vector(&basis, &x3y3);
    // [[E,F],E] = 2EFE - FEE - EEF
    let ev = e(&v)?;
    let efe = e(&f(&ev)?)?;
    let fee = f(&e(&ev)?)?;
    let eef = e(&e(&f(&v)?)?)?;
    let mut w = efe.scaled(&Rational::from_integer(2));
    w.add_scaled(&fee, &-Rational::ONE);
    w.add_scaled(&eef, &-Rational::ONE);
    w.add_scaled(&ev, &Rational::from_integer(-2));
    Ok((from_vector(desc, 2, &basis, &w), nilpotency))
}

/// Runs the E/F experiment on the degree-6 component of `T(V)^{⊗2}`, `dim V = 2`.
pub fn ef_defect(desc: HopfDescriptor, convention: LiftConvention) -> Result<EfDefect, ActionError> {
    if desc.is_nil2() {
        return Err(ActionError::WrongKind("tensor"));
    }
    let up = Automorphism::from_nielsen(&convention.upper(), 2)?;
    let lo = Automorphism::from_nielsen(&convention.lower(), 2)?;
    let (result, nilpotency) = ef_defect_tensor(desc, &up, &lo)?;
    let u = result.counit_factor(1)?.to_algebra()?;

    let r = ef_target(desc)?.scaled(&Rational::from_integer(24));
    let q = QuotientModule::new(ActionContext::new(desc, 1)?);
    let red_u = q.reduce(&TensorElement::from_algebra(&u))?;
    let constant = ef_constant(&q, &u)?;
    let matches = q.is_zero(&TensorElement::from_algebra(&u.sub(&r)?))?;
    Ok(EfDefect { convention, u_nonzero_mod_commutators: !red_u.is_zero(), u, r, constant, matches, nilpotency })
}

/// `[[x,y],y][[x,y],x]`.
pub fn ef_target(desc: HopfDescriptor) -> Result<AlgebraElement, ActionError> {
    let x = AlgebraElement::generator(desc, 0);
    let y = AlgebraElement::generator(desc, 1);
    let xy = x.lie_bracket(&y)?;
    Ok(xy.lie_bracket(&y)?.mul(&xy.lie_bracket(&x)?)?)
}

/// `c` with `u ≡ c [[x,y],y][[x,y],x]` modulo commutators.
pub fn ef_constant(q: &QuotientModule, u: &AlgebraElement) -> Result<Option<Rational>, ActionError> {
    let red_u = q.reduce_any(&TensorElement::from_algebra(u))?;
    let red_base = q.reduce(&TensorElement::from_algebra(&ef_target(u.descriptor())?))?;
    Ok(proportionality(&red_u, &red_base))
}

fn sub_matrix(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    let rows: Vec<SparseVector> = a
        .row_vectors()
        .iter()
        .zip(b.row_vectors())
        .map(|(x, y)| {
            let mut r = x.clone();
            r.add_scaled(y, &-Rational::ONE);
            r
        })
        .collect();
    SparseMatrix::from_rows(a.cols(), rows).expect("same shape")
}

/// `c` with `a = c b`, when `b ≠ 0`.
fn proportionality(a: &TensorElement, b: &TensorElement) -> Option<Rational> {
    let (ws, lead) = b.terms().iter().next()?;
    let c = &a.coefficient(ws) / lead;
    (b.scaled(&c) == *a).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_log_recovers_the_action() {
        // exp(log(I + N)) v = (I + N) v, on the degree-4 component of T(V)^{⊗2}.
        let desc = HopfDescriptor::tensor(2, 4).unwrap();
        let ctx = ActionContext::new(desc, 2).unwrap();
        let aut = Automorphism::from_nielsen(&LiftConvention::Column.upper(), 2).unwrap();
        let (basis, a) = ctx.action_matrix(&aut, 4).unwrap();
        let id = crate::linalg::SparseMatrix::identity(basis.len());
        let n = sub_matrix(&a, &id);
        for k in 0..basis.len() {
            let v = crate::linalg::SparseVector::from_entries(basis.len(), [(k, Rational::ONE)]);
            let mut term = v.clone();
            let mut exp = v.clone();
            for j in 1..=8i64 {
                term = log_apply(&n, &term, basis.len()).unwrap().scaled(&Rational::new(1, j));
                exp.add_scaled(&term, &Rational::ONE);
            }
            assert_eq!(exp, a.mul_vec(&v).unwrap());
        }
    }
}
