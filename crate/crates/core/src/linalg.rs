//! Sparse linear algebra over ℚ: echelon forms, kernels and canonical
//! representatives modulo a subspace.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index ({row}, {col}) out of range for a {rows}x{cols} matrix")]
    OutOfRange { row: usize, col: usize, rows: usize, cols: usize },
}

/// A vector stored as sorted `(index, value)` pairs with no zero values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        SparseVector { dim, entries: alloc::vec![(i, Rational::ONE)] }
    }

    /// Builds a vector from unsorted entries, summing duplicates and dropping zeros.
    pub fn from_entries<I>(dim: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in entries {
            assert!(i < dim, "index {i} out of range for dimension {dim}");
            if v.is_zero() {
                continue;
            }
            *acc.entry(i).or_default() += v;
        }
        SparseVector { dim, entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVector {
            dim: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::ZERO; self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    fn get_ref(&self, i: usize) -> Option<&Rational> {
        self.entries.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn scale(&mut self, c: &Rational) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, v) in &mut self.entries {
            *v = &*v * c;
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        out.scale(c);
        out
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &SparseVector, c: &Rational) {
        debug_assert_eq!(self.dim, other.dim);
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = core::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => merged.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, w) = b.next().unwrap();
                    merged.push((*j, w * c));
                }
                (Some(_), Some(_)) => {
                    let (i, v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    let s = v + w * c;
                    if !s.is_zero() {
                        merged.push((i, s));
                    }
                }
                (Some(_), None) => merged.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, w) = b.next().unwrap();
                    merged.push((*j, w * c));
                }
                (None, None) => break,
            }
        }
        self.entries = merged;
    }

    pub fn dot(&self, other: &SparseVector) -> Rational {
        let mut acc = Rational::ZERO;
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, x) = &self.entries[i];
            let (b, y) = &other.entries[j];
            if a < b {
                i += 1;
            } else if a > b {
                j += 1;
            } else {
                acc += x * y;
                i += 1;
                j += 1;
            }
        }
        acc
    }
}

/// Row-major sparse matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVector>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: (0..rows).map(|_| SparseVector::zero(cols)).collect() }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, data: (0..n).map(|i| SparseVector::unit(n, i)).collect() }
    }

    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut per_row: Vec<Vec<(usize, Rational)>> = (0..rows).map(|_| Vec::new()).collect();
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(LinalgError::OutOfRange { row: r, col: c, rows, cols });
            }
            per_row[r].push((c, v));
        }
        Ok(SparseMatrix {
            rows,
            cols,
            data: per_row.into_iter().map(|e| SparseVector::from_entries(cols, e)).collect(),
        })
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVector>) -> Result<Self, LinalgError> {
        for r in &rows {
            if r.dim() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: r.dim() });
            }
        }
        Ok(SparseMatrix { rows: rows.len(), cols, data: rows })
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVector]) -> Result<Self, LinalgError> {
        let mut triplets = Vec::new();
        for (j, c) in columns.iter().enumerate() {
            if c.dim() != rows {
                return Err(LinalgError::DimensionMismatch { expected: rows, found: c.dim() });
            }
            triplets.extend(c.entries().iter().map(|(i, v)| (*i, j, v.clone())));
        }
        Self::from_triplets(rows, columns.len(), triplets)
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        SparseMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| SparseVector::from_dense(r)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[SparseVector] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r].get(c)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVector::nnz).sum()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Rational)>> = (0..self.cols).map(|_| Vec::new()).collect();
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row.entries() {
                cols[*j].push((i, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data: cols.into_iter().map(|e| SparseVector { dim: self.rows, entries: e }).collect(),
        }
    }

    pub fn mul_vec(&self, v: &SparseVector) -> Result<SparseVector, LinalgError> {
        if v.dim() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.dim() });
        }
        Ok(SparseVector {
            dim: self.rows,
            entries: self
                .data
                .iter()
                .enumerate()
                .filter_map(|(i, row)| {
                    let d = row.dot(v);
                    (!d.is_zero()).then_some((i, d))
                })
                .collect(),
        })
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = SparseVector::zero(other.cols);
                for (k, v) in row.entries() {
                    acc.add_scaled(&other.data[*k], v);
                }
                acc
            })
            .collect();
        Ok(SparseMatrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVector::is_zero)
    }
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: SparseMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Incrementally maintained reduced row-echelon basis of a subspace of ℚ^dim.
///
/// Every stored row has leading coefficient 1 at its pivot and zeros in all
/// other pivot columns, so [`RowReducer::reduce`] returns the canonical
/// representative of a coset.
#[derive(Debug, Clone, Default)]
pub struct RowReducer {
    dim: usize,
    rows: BTreeMap<usize, SparseVector>,
}

impl RowReducer {
    pub fn new(dim: usize) -> Self {
        RowReducer { dim, rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVector> + '_ {
        self.rows.values()
    }

    /// Canonical representative of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        debug_assert_eq!(v.dim(), self.dim);
        let coeffs: Vec<(usize, Rational)> = v
            .entries()
            .iter()
            .filter(|(i, _)| self.rows.contains_key(i))
            .map(|(i, c)| (*i, c.clone()))
            .collect();
        let mut out = v.clone();
        for (p, c) in coeffs {
            out.add_scaled(&self.rows[&p], &-c);
        }
        out
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVector) -> bool {
        let mut r = self.reduce(v);
        let Some((p, lead)) = r.leading() else {
            return false;
        };
        let inv = lead.recip();
        r.scale(&inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get_ref(p) {
                let c = -c;
                row.add_scaled(&r, &c);
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).is_zero()
    }
}

/// Forward-only elimination used when only the rank is needed.
#[derive(Debug, Clone, Default)]
pub struct RankCounter {
    dim: usize,
    rows: BTreeMap<usize, SparseVector>,
}

impl RankCounter {
    pub fn new(dim: usize) -> Self {
        RankCounter { dim, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, v: &SparseVector) -> bool {
        debug_assert_eq!(v.dim(), self.dim);
        let mut r = v.clone();
        while let Some((p, lead)) = r.leading() {
            match self.rows.get(&p) {
                Some(row) => {
                    let c = -lead;
                    r.add_scaled(row, &c);
                }
                None => {
                    let inv = lead.recip();
                    r.scale(&inv);
                    self.rows.insert(p, r);
                    return true;
                }
            }
        }
        false
    }
}

pub fn row_echelon(m: &SparseMatrix) -> Echelon {
    let mut red = RowReducer::new(m.cols());
    for row in m.row_vectors() {
        red.insert(row);
    }
    let pivots: Vec<usize> = red.pivots().collect();
    let rank = pivots.len();
    let mut rows: Vec<SparseVector> = red.rows.into_values().collect();
    rows.resize(m.rows().max(rank), SparseVector::zero(m.cols()));
    Echelon { matrix: SparseMatrix { rows: m.rows().max(rank), cols: m.cols(), data: rows }, pivots, rank }
}

pub fn rank(m: &SparseMatrix) -> usize {
    let mut rc = RankCounter::new(m.cols());
    for row in m.row_vectors() {
        rc.insert(row);
    }
    rc.rank()
}

/// Rank of a family of vectors of equal dimension.
pub fn rank_of(dim: usize, vectors: &[SparseVector]) -> usize {
    let mut rc = RankCounter::new(dim);
    for v in vectors {
        rc.insert(v);
    }
    rc.rank()
}

/// Rank of a family of sparse vectors, with pivots chosen to limit fill-in:
/// unit coefficients first, then columns that occur in few input vectors.
/// Stops early once the rank reaches `cap`.
pub fn sparse_rank(dim: usize, vectors: &[SparseVector], cap: usize) -> usize {
    let mut column_count = alloc::vec![0usize; dim];
    for v in vectors {
        for (i, _) in v.entries() {
            column_count[*i] += 1;
        }
    }
    // Pivot rows in insertion order. Row t has no entries in the pivot
    // columns of rows before t, so eliminating in that order terminates.
    let mut pivots: Vec<(usize, SparseVector)> = Vec::new();
    let mut dense = alloc::vec![Rational::ZERO; dim];
    for v in vectors {
        if pivots.len() >= cap {
            break;
        }
        for (i, c) in v.entries() {
            dense[*i] = c.clone();
        }
        for (p, row) in &pivots {
            if dense[*p].is_zero() {
                continue;
            }
            let c = -dense[*p].clone();
            for (i, x) in row.entries() {
                dense[*i] += &(&c * x);
            }
        }
        let mut best: Option<(bool, usize, usize)> = None;
        let mut entries = Vec::new();
        for (i, x) in dense.iter_mut().enumerate() {
            if x.is_zero() {
                continue;
            }
            let key = (!x.abs().is_one(), column_count[i], i);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
            entries.push((i, core::mem::replace(x, Rational::ZERO)));
        }
        if let Some((_, _, p)) = best {
            let inv = entries.iter().find(|(i, _)| *i == p).expect("pivot entry").1.recip();
            let row = SparseVector::from_entries(dim, entries.into_iter().map(|(i, x)| (i, &x * &inv)));
            pivots.push((p, row));
        }
    }
    pivots.len()
}

/// A basis of `{ v : m v = 0 }`, one vector per free column.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVector> {
    kernel_with_free_columns(m).0
}

/// [`kernel_basis`] together with its free columns: the `i`-th vector has a
/// 1 in the `i`-th free column and 0 in all the others.
pub fn kernel_with_free_columns(m: &SparseMatrix) -> (Vec<SparseVector>, Vec<usize>) {
    let mut red = RowReducer::new(m.cols());
    for row in m.row_vectors() {
        red.insert(row);
    }
    let n = m.cols();
    let mut is_pivot = alloc::vec![false; n];
    for p in red.pivots() {
        is_pivot[p] = true;
    }
    let mut free_entries: BTreeMap<usize, Vec<(usize, Rational)>> = (0..n)
        .filter(|c| !is_pivot[*c])
        .map(|c| (c, alloc::vec![(c, Rational::ONE)]))
        .collect();
    for (p, row) in &red.rows {
        for (c, v) in row.entries() {
            if let Some(e) = free_entries.get_mut(c) {
                e.push((*p, -v));
            }
        }
    }
    let free: Vec<usize> = free_entries.keys().copied().collect();
    (free_entries.into_values().map(|e| SparseVector::from_entries(n, e)).collect(), free)
}

/// Canonical representative of `v` modulo `span(span)`.
pub fn reduce_modulo(span: &[SparseVector], v: &SparseVector) -> Result<SparseVector, LinalgError> {
    let dim = v.dim();
    let mut red = RowReducer::new(dim);
    for s in span {
        if s.dim() != dim {
            return Err(LinalgError::DimensionMismatch { expected: dim, found: s.dim() });
        }
        red.insert(s);
    }
    Ok(red.reduce(v))
}

/// Some `x` with `m x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &SparseMatrix, b: &SparseVector) -> Result<Option<SparseVector>, LinalgError> {
    if b.dim() != m.rows() {
        return Err(LinalgError::DimensionMismatch { expected: m.rows(), found: b.dim() });
    }
    let n = m.cols();
    let mut red = RowReducer::new(n + 1);
    for (i, row) in m.row_vectors().iter().enumerate() {
        let mut e: Vec<(usize, Rational)> = row.entries().to_vec();
        let bi = b.get(i);
        if !bi.is_zero() {
            e.push((n, bi));
        }
        red.insert(&SparseVector { dim: n + 1, entries: e });
    }
    if red.rows.contains_key(&n) {
        return Ok(None);
    }
    let x = red.rows.iter().filter_map(|(p, row)| {
        let v = row.get(n);
        (!v.is_zero()).then_some((*p, v))
    });
    Ok(Some(SparseVector::from_entries(n, x)))
}

/// Fixed enumeration of a finite basis indexed by keys.
#[derive(Debug, Clone)]
pub struct IndexedBasis<K: Ord + Clone> {
    keys: Vec<K>,
    index: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> IndexedBasis<K> {
    pub fn new(keys: Vec<K>) -> Self {
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        IndexedBasis { keys, index }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    pub fn key(&self, i: usize) -> &K {
        &self.keys[i]
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|x| q(*x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn echelon_examples() {
        let e = row_echelon(&SparseMatrix::identity(2));
        assert_eq!(e.matrix, SparseMatrix::identity(2));
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rank, 2);

        let e = row_echelon(&SparseMatrix::zero(3, 3));
        assert!(e.matrix.is_zero());
        assert!(e.pivots.is_empty());

        let e = row_echelon(&dense(&[&[1, 2], &[2, 4]]));
        assert_eq!(e.matrix, dense(&[&[1, 2], &[0, 0]]));
        assert_eq!(e.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&SparseMatrix::identity(4)).is_empty());
        assert_eq!(kernel_basis(&SparseMatrix::zero(1, 3)).len(), 3);
        let k = kernel_basis(&dense(&[&[1, 1]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].to_dense(), vec![q(-1), q(1)]);
    }

    #[test]
    fn reduce_examples() {
        let v = SparseVector::from_dense(&[q(3), q(4)]);
        assert_eq!(reduce_modulo(&[], &v).unwrap(), v);
        let e1 = SparseVector::unit(2, 0);
        assert!(reduce_modulo(std::slice::from_ref(&e1), &e1).unwrap().is_zero());
        let r = reduce_modulo(&[SparseVector::from_dense(&[q(1), q(1)])], &SparseVector::from_dense(&[q(2), q(0)]));
        assert_eq!(r.unwrap().to_dense(), vec![q(0), q(-2)]);
        assert!(matches!(
            reduce_modulo(&[SparseVector::unit(3, 0)], &e1),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = dense(&[&[1, 1], &[1, -1]]);
        let x = solve(&m, &SparseVector::from_dense(&[q(2), q(0)])).unwrap().unwrap();
        assert_eq!(x.to_dense(), vec![q(1), q(1)]);
        let m = dense(&[&[1, 1], &[2, 2]]);
        assert!(solve(&m, &SparseVector::from_dense(&[q(1), q(3)])).unwrap().is_none());
    }

    fn small_matrix() -> impl Strategy<Value = SparseMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-2i64..3, c), r)
                .prop_map(|rows| SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|x| q(*x)).collect()).collect::<Vec<_>>()))
        })
    }

    proptest! {
        #[test]
        fn echelon_idempotent_and_rank_symmetric(m in small_matrix()) {
            let e = row_echelon(&m);
            let e2 = row_echelon(&e.matrix);
            prop_assert_eq!(&e2.matrix, &e.matrix);
            prop_assert_eq!(e.rank, rank(&m.transpose()));
            prop_assert_eq!(e.rank, rank(&m));
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in small_matrix()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(k.len(), m.cols() - rank(&m));
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().is_zero());
            }
            prop_assert_eq!(rank_of(m.cols(), &k), k.len());
        }

        #[test]
        fn reduce_zero_iff_in_span(m in small_matrix(), v in proptest::collection::vec(-2i64..3, 1..5)) {
            let span: Vec<SparseVector> = m.row_vectors().to_vec();
            let dim = m.cols();
            let v = SparseVector::from_dense(&v.iter().take(dim).map(|x| q(*x)).chain(core::iter::repeat(q(0))).take(dim).collect::<Vec<_>>());
            let r = reduce_modulo(&span, &v).unwrap();
            let mut with_v = span.clone();
            with_v.push(v.clone());
            let in_span = rank_of(dim, &span) == rank_of(dim, &with_v);
            prop_assert_eq!(r.is_zero(), in_span);
            prop_assert_eq!(reduce_modulo(&span, &r).unwrap(), r);
        }
    }
}
