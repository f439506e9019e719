//! Explicit weight-space models of `Sym^p(L₍₂₎) ⊗ Sym^q(L₍₂₎)`, the two-row
//! Schur functors `S₍p,q₎(L₍₂₎)` as kernels of the Pieri map, and the
//! quotients by the image of the adjoint action, all computed one
//! `GL(V)`-weight space at a time.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{kernel_with_free_columns, sparse_rank, IndexedBasis, SparseMatrix, SparseVector};
use crate::rational::Rational;
use crate::symfunc::{dominant_to_schur, dominant_to_schur_on, lr_mult, schur_of_sum, schur_of_wedge2, Partition, SchurPoly, SymFuncError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NilRepError {
    #[error("dim V = {d} is too small to separate all constituents; need at least {needed}")]
    DimensionTooSmall { d: usize, needed: usize },
    #[error("two-row shapes need p ≥ q, got ({p}, {q})")]
    NotAPartition { p: usize, q: usize },
    #[error("the Pieri map needs q ≥ 1")]
    EmptySecondFactor,
    #[error("weight has length {found}, expected {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
}

/// The basis `x_1..x_d, z_ij (i < j)` of `L₍₂₎(V)` with its torus weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L2Basis {
    d: usize,
    weights: Vec<Vec<u32>>,
    pairs: Vec<(usize, usize)>,
}

impl L2Basis {
    pub fn new(d: usize) -> Self {
        let mut weights = Vec::new();
        let mut pairs = Vec::new();
        for i in 0..d {
            let mut w = vec![0; d];
            w[i] = 1;
            weights.push(w);
        }
        for i in 0..d {
            for j in i + 1..d {
                let mut w = vec![0; d];
                w[i] = 1;
                w[j] = 1;
                weights.push(w);
                pairs.push((i, j));
            }
        }
        L2Basis { d, weights, pairs }
    }

    pub fn dim_v(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, b: usize) -> &[u32] {
        &self.weights[b]
    }

    pub fn degree(&self, b: usize) -> usize {
        if b < self.d {
            1
        } else {
            2
        }
    }

    pub fn z_index(&self, i: usize, j: usize) -> usize {
        self.d + self.pairs.iter().position(|p| *p == (i, j)).expect("i < j < d")
    }

    /// `[x_r, b]` as `(index, sign)`, or `None` when it vanishes.
    pub fn ad_x(&self, r: usize, b: usize) -> Option<(usize, i64)> {
        if b >= self.d || b == r {
            return None;
        }
        Some(if r < b { (self.z_index(r, b), 1) } else { (self.z_index(b, r), -1) })
    }
}

/// A basis element of `Sym^p ⊗ Sym^q`: two sorted multisets of basis indices.
pub type BiMonomial = (Vec<u8>, Vec<u8>);

/// One torus-weight space of `Sym^p(L₍₂₎) ⊗ Sym^q(L₍₂₎)`.
#[derive(Debug, Clone)]
pub struct WeightSpace {
    pub p: usize,
    pub q: usize,
    pub weight: Vec<u32>,
    pub basis: IndexedBasis<BiMonomial>,
}

impl WeightSpace {
    pub fn new(l2: &L2Basis, p: usize, q: usize, weight: &[u32]) -> Self {
        let mut keys = Vec::new();
        for (a, rest) in multisets(l2, p, weight, false) {
            for (b, _) in multisets(l2, q, &rest, true) {
                keys.push((a.clone(), b));
            }
        }
        keys.sort();
        WeightSpace { p, q, weight: weight.to_vec(), basis: IndexedBasis::new(keys) }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Total degree of the weight (`x` counts 1, `z` counts 2).
    pub fn degree(&self) -> usize {
        self.weight.iter().map(|w| *w as usize).sum()
    }
}

/// Sorted multisets of size `k` with weight `≤ budget` (or `= budget` when
/// `exact`), paired with the unused budget.
fn multisets(l2: &L2Basis, k: usize, budget: &[u32], exact: bool) -> Vec<(Vec<u8>, Vec<u32>)> {
    fn go(l2: &L2Basis, k: usize, start: usize, budget: &mut Vec<u32>, cur: &mut Vec<u8>, exact: bool, out: &mut Vec<(Vec<u8>, Vec<u32>)>) {
        if cur.len() == k {
            if !exact || budget.iter().all(|b| *b == 0) {
                out.push((cur.clone(), budget.clone()));
            }
            return;
        }
        if exact {
            let left: u32 = budget.iter().sum();
            let need_min = (k - cur.len()) as u32;
            if left < need_min || left > 2 * need_min {
                return;
            }
        }
        for b in start..l2.len() {
            let w = l2.weight(b);
            if w.iter().zip(budget.iter()).all(|(x, y)| x <= y) {
                for (x, y) in w.iter().zip(budget.iter_mut()) {
                    *y -= x;
                }
                cur.push(b as u8);
                go(l2, k, b, budget, cur, exact, out);
                cur.pop();
                for (x, y) in w.iter().zip(budget.iter_mut()) {
                    *y += x;
                }
            }
        }
    }
    let mut out = Vec::new();
    go(l2, k, 0, &mut budget.to_vec(), &mut Vec::new(), exact, &mut out);
    out
}

fn insert_sorted(m: &[u8], b: u8) -> Vec<u8> {
    let mut v = m.to_vec();
    let pos = v.partition_point(|x| *x <= b);
    v.insert(pos, b);
    v
}

/// The multiplication map `Sym^p ⊗ Sym^q → Sym^{p+1} ⊗ Sym^{q−1}` moving one
/// factor from right to left, on one weight space. Columns index the source.
pub fn pieri_map_matrix(l2: &L2Basis, p: usize, q: usize, weight: &[u32]) -> Result<SparseMatrix, NilRepError> {
    if q == 0 {
        return Err(NilRepError::EmptySecondFactor);
    }
    check_weight(l2, weight)?;
    let src = WeightSpace::new(l2, p, q, weight);
    let dst = WeightSpace::new(l2, p + 1, q - 1, weight);
    Ok(pieri_between(&src, &dst))
}

fn pieri_between(src: &WeightSpace, dst: &WeightSpace) -> SparseMatrix {
    let cols: Vec<SparseVector> = src
        .basis
        .keys()
        .iter()
        .map(|(a, b)| {
            let mut entries: BTreeMap<usize, Rational> = BTreeMap::new();
            for (i, &g) in b.iter().enumerate() {
                let mut rest = b.clone();
                rest.remove(i);
                let key = (insert_sorted(a, g), rest);
                let idx = dst.basis.index_of(&key).expect("target monomial has the same weight");
                *entries.entry(idx).or_insert(Rational::ZERO) += Rational::ONE;
            }
            SparseVector::from_entries(dst.dim(), entries)
        })
        .collect();
    SparseMatrix::from_columns(dst.dim(), &cols).expect("column lengths agree")
}

fn check_weight(l2: &L2Basis, weight: &[u32]) -> Result<(), NilRepError> {
    if weight.len() != l2.dim_v() {
        return Err(NilRepError::WeightLength { expected: l2.dim_v(), found: weight.len() });
    }
    Ok(())
}

/// `ad(x_r)` applied to a vector of `src`, landing in `dst` (weight `src + e_r`).
fn ad_apply(l2: &L2Basis, r: usize, src: &WeightSpace, dst: &WeightSpace, v: &SparseVector) -> SparseVector {
    let mut entries: BTreeMap<usize, Rational> = BTreeMap::new();
    for (i, c) in v.entries() {
        let (a, b) = src.basis.key(*i);
        // Derivation rule on both symmetric factors.
        for side in 0..2 {
            let m = if side == 0 { a } else { b };
            for (pos, &g) in m.iter().enumerate() {
                // Skip repeated letters; multiplicity enters via the count.
                if pos > 0 && m[pos - 1] == g {
                    continue;
                }
                let Some((h, sign)) = l2.ad_x(r, g as usize) else { continue };
                let mult = m.iter().filter(|x| **x == g).count() as i64;
                let mut rest = m.clone();
                rest.remove(pos);
                let replaced = insert_sorted(&rest, h as u8);
                let key = if side == 0 { (replaced, b.clone()) } else { (a.clone(), replaced) };
                let idx = dst.basis.index_of(&key).expect("ad preserves the weight shift");
                *entries.entry(idx).or_insert(Rational::ZERO) += c * &Rational::from_integer(sign * mult);
            }
        }
    }
    SparseVector::from_entries(dst.dim(), entries)
}

/// Matrix of `Σ_r ad(x_r) : V ⊗ (Sym^p ⊗ Sym^q) → Sym^p ⊗ Sym^q` into the
/// weight space `weight`. Columns are indexed by `(r, source basis index)`
/// with `r` running over the coordinates where `weight_r > 0`.
pub fn adjoint_matrix(l2: &L2Basis, p: usize, q: usize, weight: &[u32]) -> Result<SparseMatrix, NilRepError> {
    check_weight(l2, weight)?;
    let dst = WeightSpace::new(l2, p, q, weight);
    let mut cols = Vec::new();
    for r in 0..l2.dim_v() {
        if weight[r] == 0 {
            continue;
        }
        let mut w = weight.to_vec();
        w[r] -= 1;
        let src = WeightSpace::new(l2, p, q, &w);
        for i in 0..src.dim() {
            cols.push(ad_apply(l2, r, &src, &dst, &SparseVector::unit(src.dim(), i)));
        }
    }
    Ok(SparseMatrix::from_columns(dst.dim(), &cols).expect("column lengths agree"))
}

/// A weight space, a kernel basis in it, and the free columns of that basis.
type Piece = ((WeightSpace, Vec<SparseVector>), Vec<usize>);

/// `S₍p,q₎(L₍₂₎)` realized weight space by weight space, with cached kernels.
#[derive(Debug)]
pub struct TwoRowModel {
    l2: L2Basis,
    p: usize,
    q: usize,
    cache: BTreeMap<Vec<u32>, Piece>,
}

impl TwoRowModel {
    pub fn new(p: usize, q: usize, d: usize) -> Result<Self, NilRepError> {
        if q > p {
            return Err(NilRepError::NotAPartition { p, q });
        }
        Ok(TwoRowModel { l2: L2Basis::new(d), p, q, cache: BTreeMap::new() })
    }

    pub fn basis(&self) -> &L2Basis {
        &self.l2
    }

    /// The weight space and a basis of the Schur-functor subspace in it.
    pub fn piece(&mut self, weight: &[u32]) -> &(WeightSpace, Vec<SparseVector>) {
        &self.entry(weight).0
    }

    fn entry(&mut self, weight: &[u32]) -> &Piece {
        if !self.cache.contains_key(weight) {
            let ws = WeightSpace::new(&self.l2, self.p, self.q, weight);
            let (kernel, free) = if self.q == 0 {
                ((0..ws.dim()).map(|i| SparseVector::unit(ws.dim(), i)).collect(), (0..ws.dim()).collect())
            } else {
                let dst = WeightSpace::new(&self.l2, self.p + 1, self.q - 1, weight);
                kernel_with_free_columns(&pieri_between(&ws, &dst))
            };
            self.cache.insert(weight.to_vec(), ((ws, kernel), free));
        }
        &self.cache[weight]
    }

    pub fn dim_at(&mut self, weight: &[u32]) -> usize {
        self.piece(weight).1.len()
    }

    /// Rank of `ad : V ⊗ S_{weight − e_r} → S_weight` summed over `r`.
    pub fn image_rank_at(&mut self, weight: &[u32]) -> usize {
        let mut sources = Vec::new();
        for r in 0..weight.len() {
            if weight[r] > 0 {
                let mut w = weight.to_vec();
                w[r] -= 1;
                sources.push((r, w));
            }
        }
        let ((dst, ker), free) = self.entry(weight).clone();
        // Kernel vectors restrict to unit vectors on the free columns, so
        // projecting onto them is injective on the kernel.
        let position: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut images = Vec::new();
        for (r, w) in sources {
            let ((src, src_ker), _) = self.entry(&w).clone();
            for v in &src_ker {
                let u = ad_apply(&self.l2, r, &src, &dst, v);
                let projected = u.entries().iter().filter_map(|(c, x)| position.get(c).map(|i| (*i, x.clone())));
                images.push(SparseVector::from_entries(free.len(), projected));
            }
        }
        sparse_rank(free.len(), &images, ker.len())
    }

    /// `dim ker(ad)` on `V ⊗ S_{weight − e_r}` (the source of the weight-`weight` image).
    pub fn ad_kernel_dim_at(&mut self, weight: &[u32]) -> usize {
        let mut source_dim = 0;
        for r in 0..weight.len() {
            if weight[r] > 0 {
                let mut w = weight.to_vec();
                w[r] -= 1;
                source_dim += self.dim_at(&w);
            }
        }
        source_dim - self.image_rank_at(weight)
    }
}

/// Upper bound on the number of rows of any constituent of the degree
/// `degree` piece of `S₍p,q₎(L₍₂₎)`.
pub fn rows_needed(p: usize, q: usize, degree: usize) -> usize {
    let size = p + q;
    let rows = if q > 0 { 2 } else if p > 0 { 1 } else { 0 };
    if degree < size {
        return 0;
    }
    degree.min(rows + 2 * (degree - size))
}

fn dominant_weights(degree: usize, d: usize) -> Vec<Partition> {
    Partition::with_max_rows(degree as u32, d)
}

fn padded(l: &Partition, d: usize) -> Vec<u32> {
    let mut w = l.parts().to_vec();
    w.resize(d, 0);
    w
}

fn character<F>(p: usize, q: usize, degree: usize, d: usize, needed: usize, mut f: F) -> Result<SchurPoly, NilRepError>
where
    F: FnMut(&mut TwoRowModel, &[u32]) -> usize,
{
    if d < needed {
        return Err(NilRepError::DimensionTooSmall { d, needed });
    }
    let mut model = TwoRowModel::new(p, q, d)?;
    let mut values = BTreeMap::new();
    for l in dominant_weights(degree, d) {
        let w = padded(&l, d);
        values.insert(l, f(&mut model, &w) as i64);
    }
    Ok(dominant_to_schur(&values, d)?)
}

/// Character of the degree-`degree` piece of `S₍p,q₎(L₍₂₎)` over `GL_d`.
pub fn schur2_character(p: usize, q: usize, degree: usize, d: usize) -> Result<SchurPoly, NilRepError> {
    character(p, q, degree, d, rows_needed(p, q, degree), |m, w| m.dim_at(w))
}

/// Character of the degree-`degree` piece of the quotient of `S₍p,q₎(L₍₂₎)`
/// by the image of the adjoint action.
pub fn quotient_character(p: usize, q: usize, degree: usize, d: usize) -> Result<SchurPoly, NilRepError> {
    character(p, q, degree, d, rows_needed(p, q, degree), |m, w| m.dim_at(w) - m.image_rank_at(w))
}

/// [`quotient_character`] over `GL_d` without the faithfulness check: exact
/// for the constituents with at most `d` rows, blind to the rest.
pub fn quotient_character_truncated(p: usize, q: usize, degree: usize, d: usize) -> Result<SchurPoly, NilRepError> {
    character(p, q, degree, d, 0, |m, w| m.dim_at(w) - m.image_rank_at(w))
}

/// The constituents with at most `d` rows of the degree-`degree` piece of
/// `S₍p,q₎(V ⊕ Λ²V)`, from the Littlewood–Richardson expansion.
pub fn ambient_constituents(p: usize, q: usize, degree: usize, d: usize) -> Result<Vec<Partition>, NilRepError> {
    if q > p {
        return Err(NilRepError::NotAPartition { p, q });
    }
    let lambda = Partition::new(vec![p as u32, q as u32]);
    let mut total = SchurPoly::zero();
    if degree >= p + q {
        let wedge_size = (degree - p - q) as u32;
        for (mu, nu, c) in schur_of_sum(&lambda) {
            if nu.size() == wedge_size && mu.len() <= d {
                let piece = lr_mult(&SchurPoly::single(mu), &schur_of_wedge2(&nu).restrict_rows(d)).restrict_rows(d);
                total.add_assign(&piece, c);
            }
        }
    }
    Ok(total.terms().keys().cloned().collect())
}

/// [`quotient_character_truncated`], evaluated only at the highest weights
/// of [`ambient_constituents`]. Much cheaper when the balanced weight
/// spaces are large; relies on the ambient expansion for the support.
pub fn quotient_character_on_support(p: usize, q: usize, degree: usize, d: usize) -> Result<SchurPoly, NilRepError> {
    let mut model = TwoRowModel::new(p, q, d)?;
    let mut values = BTreeMap::new();
    for l in ambient_constituents(p, q, degree, d)? {
        let w = padded(&l, d);
        values.insert(l, (model.dim_at(&w) - model.image_rank_at(&w)) as i64);
    }
    Ok(dominant_to_schur_on(&values, d)?)
}

/// Character of `ker(ad : V ⊗ [S₍p,q₎(L₍₂₎)]_{degree} → [S₍p,q₎(L₍₂₎)]_{degree+1})`.
pub fn ad_kernel_character(p: usize, q: usize, degree: usize, d: usize) -> Result<SchurPoly, NilRepError> {
    let needed = rows_needed(p, q, degree) + 1;
    character(p, q, degree + 1, d, needed.min(degree + 1), |m, w| m.ad_kernel_dim_at(w))
}
