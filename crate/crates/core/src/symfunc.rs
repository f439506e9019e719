//! Partitions and Schur-basis arithmetic: Littlewood–Richardson products,
//! Schur functors of `Λ²V`, of direct sums and of `L₍₂₎ = V ⊕ Λ²V`, and
//! decomposition of explicit torus characters.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymFuncError {
    #[error("invalid partition {0:?}")]
    Parse(String),
    #[error("weight multiset is not symmetric under permuting coordinates")]
    NotSymmetric,
    #[error("negative multiplicity {mult} for {lambda} while decomposing a character")]
    NegativeMultiplicity { lambda: Partition, mult: i64 },
    #[error("weight {0:?} has the wrong length or a negative entry")]
    BadWeight(Vec<i64>),
}

/// A partition, stored without trailing zeros.
///
/// Ordered by decreasing size, then reverse-lexicographically, so sorted
/// collections list `[3] [2,1] [1,1,1] [2] [1,1] [1] []`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(n: u32) -> Self {
        Self::new(vec![n])
    }

    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with `λ_i = 0` past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::new();
        for c in 0..self.first() {
            out.push(self.0.iter().filter(|p| **p > c).count() as u32);
        }
        Partition(out)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Every column has an even number of boxes.
    pub fn has_even_columns(&self) -> bool {
        self.conjugate().0.iter().all(|c| c % 2 == 0)
    }

    /// All partitions of `n`, in the crate's partition order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of `n` with at most `rows` parts.
    pub fn with_max_rows(n: u32, rows: usize) -> Vec<Partition> {
        Self::all(n).into_iter().filter(|p| p.len() <= rows).collect()
    }

    /// `dim S_λ(𝕜^d)` by the hook-content formula.
    pub fn dimension(&self, d: usize) -> u128 {
        if self.len() > d {
            return 0;
        }
        let conj = self.conjugate();
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                num *= (d + j - i) as u128;
                den *= (row as usize - j + conj.part(j) as usize - i - 1) as u128;
            }
        }
        num / den
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.size().cmp(&self.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `2,1`, `[2,1]`, `(2,1)`, `2 1` and the empty forms `[]`, `0`, ``.
impl FromStr for Partition {
    type Err = SymFuncError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        let mut parts = Vec::new();
        for tok in inner.split([',', ' ']).filter(|t| !t.is_empty()) {
            parts.push(tok.parse::<u32>().map_err(|_| SymFuncError::Parse(s.into()))?);
        }
        let p = Partition::new(parts.clone());
        let mut sorted = parts;
        sorted.retain(|x| *x != 0);
        if sorted != p.0 {
            return Err(SymFuncError::Parse(s.into()));
        }
        Ok(p)
    }
}

/// An integer combination of Schur functions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurPoly {
    terms: BTreeMap<Partition, i64>,
}

impl SchurPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::single(Partition::empty())
    }

    pub fn single(lambda: Partition) -> Self {
        Self::from_terms([(lambda, 1)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (l, c) in terms {
            p.add_term(l, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| *c > 0)
    }

    /// Number of irreducible summands counted with multiplicity.
    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, lambda: Partition, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(lambda.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other, 1);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other, -1);
        out
    }

    pub fn add_assign(&mut self, other: &Self, scale: i64) {
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c * scale);
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        lr_mult(self, other)
    }

    /// Drops partitions with more than `d` rows (those vanish on `𝕜^d`).
    pub fn restrict_rows(&self, d: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(l, _)| l.len() <= d).map(|(l, c)| (l.clone(), *c)))
    }

    /// Dimension of the represented `GL_d`-module (virtual if coefficients are negative).
    pub fn dimension(&self, d: usize) -> i128 {
        self.terms.iter().map(|(l, c)| *c as i128 * l.dimension(d) as i128).sum()
    }
}

impl fmt::Display for SchurPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "{}", if *c < 0 { " - " } else { " + " })?;
            } else if *c < 0 {
                write!(f, "-")?;
            }
            let m = c.abs();
            if m != 1 {
                write!(f, "{m}")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `c^λ_{μν}` for all `λ`, by enumerating Littlewood–Richardson tableaux of
/// shape `λ/μ` and content `ν`.
pub fn lr_coefficients(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, i64> {
    // counts[r][i]: number of letters i in row r of the skew part.
    struct State {
        shape: Vec<u32>,
        counts: Vec<Vec<u32>>,
    }
    fn place(letter: usize, nu: &Partition, st: &mut State, out: &mut BTreeMap<Partition, i64>) {
        if letter == nu.len() {
            *out.entry(Partition::new(st.shape.clone())).or_insert(0) += 1;
            return;
        }
        let old = st.shape.clone();
        let rows = old.len() + 1;
        if st.shape.len() < rows {
            st.shape.push(0);
            st.counts.push(vec![0; nu.len()]);
        }
        let mut adds = vec![0u32; rows];
        strip(letter, nu, nu.part(letter), 0, &old, &mut adds, st, out);
        st.shape.truncate(old.len());
        st.counts.truncate(old.len());
    }
    #[allow(clippy::too_many_arguments)]
    fn strip(
        letter: usize,
        nu: &Partition,
        left: u32,
        row: usize,
        old: &[u32],
        adds: &mut Vec<u32>,
        st: &mut State,
        out: &mut BTreeMap<Partition, i64>,
    ) {
        if left == 0 {
            place(letter + 1, nu, st, out);
            return;
        }
        if row >= adds.len() {
            return;
        }
        let cur = old.get(row).copied().unwrap_or(0);
        // Horizontal strip: stay weakly below the old row above.
        let cap = if row == 0 { left } else { old[row - 1] - cur };
        for a in (0..=cap.min(left)).rev() {
            if a > 0 && row > 0 && cur + a > st.shape[row - 1] {
                continue;
            }
            adds[row] = a;
            st.shape[row] = cur + a;
            st.counts[row][letter] = a;
            if lattice_ok(letter, row, &st.counts) {
                strip(letter, nu, left - a, row + 1, old, adds, st, out);
            }
            st.counts[row][letter] = 0;
            st.shape[row] = cur;
            adds[row] = 0;
        }
    }
    fn lattice_ok(letter: usize, row: usize, counts: &[Vec<u32>]) -> bool {
        if letter == 0 {
            return true;
        }
        let mine: u32 = counts[..=row].iter().map(|c| c[letter]).sum();
        let prev: u32 = counts[..row].iter().map(|c| c[letter - 1]).sum();
        mine <= prev
    }
    let mut out = BTreeMap::new();
    let mut st = State { shape: mu.0.clone(), counts: vec![vec![0; nu.len()]; mu.len()] };
    place(0, nu, &mut st, &mut out);
    out
}

pub fn lr_mult(a: &SchurPoly, b: &SchurPoly) -> SchurPoly {
    let mut out = SchurPoly::zero();
    for (mu, c1) in &a.terms {
        for (nu, c2) in &b.terms {
            // Fewer tableaux when the smaller partition is the content.
            let (big, small) = if mu.size() >= nu.size() { (mu, nu) } else { (nu, mu) };
            for (lambda, c) in lr_coefficients(big, small) {
                out.add_term(lambda, c * c1 * c2);
            }
        }
    }
    out
}

/// `Sym^k(Λ²V) = Σ s_λ` over partitions of `2k` with even columns.
pub fn sym_of_wedge2(k: u32) -> SchurPoly {
    SchurPoly::from_terms(Partition::all(k).into_iter().map(|mu| {
        let doubled = Partition(mu.0.iter().map(|p| 2 * p).collect());
        (doubled.conjugate(), 1)
    }))
}

/// `S_ν(Λ²V)` via the Jacobi–Trudi determinant `det(h_{ν_i − i + j})` with
/// `h_m = Sym^m(Λ²V)`.
pub fn schur_of_wedge2(nu: &Partition) -> SchurPoly {
    let l = nu.len();
    if l == 0 {
        return SchurPoly::one();
    }
    let h = |m: i64| if m < 0 { SchurPoly::zero() } else { sym_of_wedge2(m as u32) };
    let mut out = SchurPoly::zero();
    for (perm, sign) in permutations(l) {
        let mut term = SchurPoly::one();
        for (i, &j) in perm.iter().enumerate() {
            let m = nu.part(i) as i64 - i as i64 + j as i64;
            term = lr_mult(&term, &h(m));
            if term.is_zero() {
                break;
            }
        }
        out.add_assign(&term, sign);
    }
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if cur.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                go(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `S_λ(V ⊕ W) = ⊕ c^λ_{μν} S_μ(V) ⊗ S_ν(W)`: the triples `(μ, ν, c)` with `c > 0`.
pub fn schur_of_sum(lambda: &Partition) -> Vec<(Partition, Partition, i64)> {
    let n = lambda.size();
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for mu in Partition::all(a) {
            if !lambda.contains(&mu) {
                continue;
            }
            for nu in Partition::all(n - a) {
                if !lambda.contains(&nu) {
                    continue;
                }
                let c = lr_coefficients(&mu, &nu).get(lambda).copied().unwrap_or(0);
                if c > 0 {
                    out.push((mu.clone(), nu, c));
                }
            }
        }
    }
    out
}

/// A graded `GL(V)`-character: degree ↦ Schur expansion.
pub type GradedCharacter = BTreeMap<u32, SchurPoly>;

/// Total of all graded pieces.
pub fn total_character(g: &GradedCharacter) -> SchurPoly {
    let mut out = SchurPoly::zero();
    for p in g.values() {
        out.add_assign(p, 1);
    }
    out
}

/// `S_λ(L₍₂₎)` with `L₍₂₎ = V ⊕ Λ²V`; the `(μ, ν)` piece sits in degree `|μ| + 2|ν|`.
pub fn schur_of_l2(lambda: &Partition) -> GradedCharacter {
    let mut out: GradedCharacter = BTreeMap::new();
    for (mu, nu, c) in schur_of_sum(lambda) {
        let deg = mu.size() + 2 * nu.size();
        let piece = lr_mult(&SchurPoly::single(mu), &schur_of_wedge2(&nu)).scaled(c);
        out.entry(deg).or_default().add_assign(&piece, 1);
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// `𝒜_k`: partitions of `2k` with all columns even.
pub fn enumerate_a(k: u32) -> Vec<Partition> {
    sym_of_wedge2(k).terms.into_keys().collect()
}

/// `ℬ_m`: a row `(a)`, `1 ≤ a ≤ m`, placed above some `μ ∈ 𝒜_{m−a}` with `μ_1 ≤ a`.
pub fn enumerate_bm(m: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for a in 1..=m {
        for mu in enumerate_a(m - a) {
            if mu.first() <= a {
                let mut parts = vec![a];
                parts.extend_from_slice(&mu.0);
                out.push(Partition(parts));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Torus character of `S_λ(𝕜^d)`: exponent vector ↦ multiplicity (Kostka numbers),
/// via the branching rule `GL_d ↓ GL_{d−1}`.
pub fn schur_character(lambda: &Partition, d: usize) -> BTreeMap<Vec<u32>, i64> {
    let mut memo = BTreeMap::new();
    schur_character_memo(lambda, d, &mut memo)
}

type CharMemo = BTreeMap<(Vec<u32>, usize), BTreeMap<Vec<u32>, i64>>;

fn schur_character_memo(lambda: &Partition, d: usize, memo: &mut CharMemo) -> BTreeMap<Vec<u32>, i64> {
    if lambda.len() > d {
        return BTreeMap::new();
    }
    if d == 0 {
        return BTreeMap::from([(Vec::new(), 1)]);
    }
    if let Some(c) = memo.get(&(lambda.0.clone(), d)) {
        return c.clone();
    }
    let mut out = BTreeMap::new();
    // μ interlaces λ: λ_{i+1} ≤ μ_i ≤ λ_i, with at most d − 1 rows.
    let mut mus: Vec<Vec<u32>> = vec![Vec::new()];
    for i in 0..lambda.len().min(d - 1) {
        let lo = lambda.part(i + 1);
        let hi = lambda.part(i);
        mus = mus.into_iter().flat_map(|m| (lo..=hi).map(move |v| {
            let mut m = m.clone();
            m.push(v);
            m
        })).collect();
    }
    for m in mus {
        let mu = Partition::new(m);
        let extra = lambda.size() - mu.size();
        for (w, c) in schur_character_memo(&mu, d - 1, memo) {
            let mut w = w;
            w.push(extra);
            *out.entry(w).or_insert(0) += c;
        }
    }
    memo.insert((lambda.0.clone(), d), out.clone());
    out
}

/// Decomposes a polynomial `GL_d` torus character into Schur functions by
/// repeatedly removing the character of the highest remaining weight.
pub fn char_to_schur(weights: &BTreeMap<Vec<i64>, i64>, d: usize) -> Result<SchurPoly, SymFuncError> {
    let mut rest: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for (w, c) in weights {
        if w.len() != d || w.iter().any(|e| *e < 0) {
            return Err(SymFuncError::BadWeight(w.clone()));
        }
        if *c != 0 {
            *rest.entry(w.iter().map(|e| *e as u32).collect()).or_insert(0) += c;
        }
    }
    rest.retain(|_, c| *c != 0);
    // Adjacent transpositions generate the symmetric group.
    for (w, c) in &rest {
        for i in 1..d {
            let mut s = w.clone();
            s.swap(i - 1, i);
            if rest.get(&s) != Some(c) {
                return Err(SymFuncError::NotSymmetric);
            }
        }
    }
    let mut out = SchurPoly::zero();
    let mut memo = BTreeMap::new();
    // The lexicographically largest weight present is dominant and highest.
    while let Some((w, &c)) = rest.iter().next_back() {
        let lambda = Partition::new(w.clone());
        if c < 0 {
            return Err(SymFuncError::NegativeMultiplicity { lambda, mult: c });
        }
        for (v, k) in schur_character_memo(&lambda, d, &mut memo) {
            let e = rest.entry(v.clone()).or_insert(0);
            *e -= c * k;
            if *e == 0 {
                rest.remove(&v);
            }
        }
        out.add_term(lambda, c);
    }
    Ok(out)
}

/// Like [`char_to_schur`], but from the multiplicities at dominant weights
/// only (a symmetric character is determined by them). Keys are partitions
/// with at most `d` parts.
pub fn dominant_to_schur(values: &BTreeMap<Partition, i64>, d: usize) -> Result<SchurPoly, SymFuncError> {
    let mut rest: BTreeMap<Partition, i64> = BTreeMap::new();
    for (l, c) in values {
        if l.len() > d {
            return Err(SymFuncError::BadWeight(l.0.iter().map(|x| *x as i64).collect()));
        }
        if *c != 0 {
            rest.insert(l.clone(), *c);
        }
    }
    let mut out = SchurPoly::zero();
    let mut memo = BTreeMap::new();
    // Partition order puts lexicographically larger weights of a fixed size
    // first, so the first remaining key is always a highest weight.
    while let Some((lambda, &c)) = rest.iter().next() {
        let lambda = lambda.clone();
        if c < 0 {
            return Err(SymFuncError::NegativeMultiplicity { lambda, mult: c });
        }
        for (w, k) in schur_character_memo(&lambda, d, &mut memo) {
            if w.windows(2).all(|p| p[0] >= p[1]) {
                let mu = Partition::new(w);
                let e = rest.entry(mu.clone()).or_insert(0);
                *e -= c * k;
                if *e == 0 {
                    rest.remove(&mu);
                }
            }
        }
        out.add_term(lambda, c);
    }
    Ok(out)
}

/// [`dominant_to_schur`] for a character known to be supported on the keys
/// of `values`: only those weights are needed and only they are peeled.
pub fn dominant_to_schur_on(values: &BTreeMap<Partition, i64>, d: usize) -> Result<SchurPoly, SymFuncError> {
    let mut rest: BTreeMap<Partition, i64> = BTreeMap::new();
    for (l, c) in values {
        if l.len() > d {
            return Err(SymFuncError::BadWeight(l.0.iter().map(|x| *x as i64).collect()));
        }
        rest.insert(l.clone(), *c);
    }
    let mut out = SchurPoly::zero();
    let mut memo = BTreeMap::new();
    while let Some((lambda, c)) = rest.pop_first() {
        if c < 0 {
            return Err(SymFuncError::NegativeMultiplicity { lambda, mult: c });
        }
        if c == 0 {
            continue;
        }
        for (w, k) in schur_character_memo(&lambda, d, &mut memo) {
            if w.windows(2).all(|p| p[0] >= p[1]) {
                if let Some(e) = rest.get_mut(&Partition::new(w)) {
                    *e -= c * k;
                }
            }
        }
        out.add_term(lambda, c);
    }
    Ok(out)
}
