use hopfaut_core::symfunc::*;
use std::collections::BTreeMap;
use hopfaut_core::rational::Rational;
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn sp(terms: &[(&str, i64)]) -> SchurPoly {
    SchurPoly::from_terms(terms.iter().map(|(s, c)| (p(s), *c)))
}

fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = Rational::ONE;
    for c in 0..n {
        let Some(r) = (c..n).find(|r| !m[*r][c].is_zero()) else { return Rational::ZERO };
        if r != c {
            m.swap(r, c);
            d = -d;
        }
        d = &d * &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let v = &m[c][k] * &f;
                m[r][k] = &m[r][k] - &v;
            }
        }
    }
    d
}

/// `s_λ(x)` as the bialternant `det(x_i^{λ_j + n − j}) / det(x_i^{n − j})`.
fn schur_eval(lambda: &Partition, x: &[Rational]) -> Rational {
    let n = x.len();
    if lambda.len() > n {
        return Rational::ZERO;
    }
    let pow = |b: &Rational, e: u32| (0..e).fold(Rational::ONE, |acc, _| &acc * b);
    let num = (0..n).map(|i| (0..n).map(|j| pow(&x[i], lambda.part(j) + (n - 1 - j) as u32)).collect()).collect();
    let den = (0..n).map(|i| (0..n).map(|j| pow(&x[i], (n - 1 - j) as u32)).collect()).collect();
    &det(num) / &det(den)
}

fn poly_eval(f: &SchurPoly, x: &[Rational]) -> Rational {
    f.terms().iter().map(|(l, c)| schur_eval(l, x) * Rational::from_integer(*c)).sum()
}

fn points(n: usize, seed: i64) -> Vec<Rational> {
    (0..n).map(|i| Rational::from_integer(2 + i as i64 * 3 + seed)).collect()
}

fn pair_products(x: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::new();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            out.push(&x[i] * &x[j]);
        }
    }
    out
}

#[test]
fn partition_basics() {
    assert_eq!(p("2,1"), Partition::new(vec![1, 2]));
    assert_eq!(p("[3,1,1]").to_string(), "[3,1,1]");
    assert_eq!(p("").size(), 0);
    assert_eq!(p("[]"), Partition::empty());
    assert!("1,2".parse::<Partition>().is_err());
    assert!("a".parse::<Partition>().is_err());
    assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    assert_eq!(Partition::all(5).len(), 7);
    let mut v = [p("1"), p("1,1,1"), p("2"), p("3"), p("2,1"), p(""), p("1,1")];
    v.sort();
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    assert_eq!(s, ["[3]", "[2,1]", "[1,1,1]", "[2]", "[1,1]", "[1]", "[]"]);
    assert_eq!(p("2,1").dimension(3), 8);
    assert_eq!(p("1,1").dimension(5), 10);
    assert_eq!(p("1,1,1,1").dimension(3), 0);
    assert!(p("2,2").has_even_columns() && !p("2,1").has_even_columns());
}

#[test]
fn lr_examples() {
    assert_eq!(lr_mult(&sp(&[("1", 1)]), &sp(&[("1", 1)])), sp(&[("2", 1), ("1,1", 1)]));
    assert_eq!(lr_mult(&sp(&[("2,2", 1)]), &sp(&[("1,1", 1)])).coefficient(&p("3,3")), 1);
    let got = lr_mult(&sp(&[("1,1,1,1", 1), ("2,2", 1)]), &sp(&[("1,1", 1)]));
    let expect = sp(&[("2,1,1,1,1", 1), ("2,2,1,1", 2), ("1,1,1,1,1,1", 1), ("3,3", 1), ("3,2,1", 1)]);
    assert_eq!(got, expect);
    // A coefficient larger than one.
    assert_eq!(lr_mult(&sp(&[("2,1", 1)]), &sp(&[("2,1", 1)])).coefficient(&p("3,2,1")), 2);
}

#[test]
fn lr_products_match_evaluation() {
    let parts: Vec<Partition> = (0..=4).flat_map(Partition::all).collect();
    let x = points(4, 0);
    for a in &parts {
        for b in &parts {
            let prod = lr_mult(&SchurPoly::single(a.clone()), &SchurPoly::single(b.clone()));
            assert!(prod.is_nonnegative());
            assert!(prod.total_multiplicity() > 0);
            assert_eq!(poly_eval(&prod, &x), schur_eval(a, &x) * schur_eval(b, &x), "{a} {b}");
            // Sizes add.
            assert!(prod.terms().keys().all(|l| l.size() == a.size() + b.size()));
        }
    }
}

#[test]
fn lr_is_commutative_and_associative() {
    let parts: Vec<Partition> = (0..=3).flat_map(Partition::all).collect();
    for a in &parts {
        let sa = SchurPoly::single(a.clone());
        assert_eq!(lr_mult(&sa, &SchurPoly::one()), sa);
        for b in &parts {
            let sb = SchurPoly::single(b.clone());
            assert_eq!(lr_mult(&sa, &sb), lr_mult(&sb, &sa));
            for c in parts.iter().filter(|c| c.size() <= 2) {
                let sc = SchurPoly::single(c.clone());
                assert_eq!(lr_mult(&lr_mult(&sa, &sb), &sc), lr_mult(&sa, &lr_mult(&sb, &sc)));
            }
        }
    }
}

#[test]
fn sym_of_wedge2_examples() {
    assert_eq!(sym_of_wedge2(0), SchurPoly::one());
    assert_eq!(sym_of_wedge2(1), sp(&[("1,1", 1)]));
    assert_eq!(sym_of_wedge2(2), sp(&[("2,2", 1), ("1,1,1,1", 1)]));
    assert_eq!(sym_of_wedge2(3).terms().len(), 3);
}

#[test]
fn schur_of_wedge2_examples() {
    assert_eq!(schur_of_wedge2(&p("1,1")), sp(&[("2,1,1", 1)]));
    assert_eq!(schur_of_wedge2(&p("2,1")), sp(&[("3,2,1", 1), ("2,2,1,1", 1), ("2,1,1,1,1", 1)]));
    for k in 0..=4 {
        assert_eq!(schur_of_wedge2(&Partition::row(k)), sym_of_wedge2(k));
    }
}

#[test]
fn schur_of_wedge2_matches_plethysm_evaluation() {
    for d in 2..=5usize {
        let x = points(d, 1);
        let y = pair_products(&x);
        for n in 0..=4 {
            for nu in Partition::all(n) {
                let f = schur_of_wedge2(&nu);
                assert!(f.is_nonnegative() || f.is_zero());
                assert_eq!(poly_eval(&f, &x), schur_eval(&nu, &y), "{nu} d={d}");
                let big = d * (d - 1) / 2;
                assert_eq!(f.dimension(d), nu.dimension(big) as i128);
            }
        }
    }
}

#[test]
fn schur_of_sum_examples() {
    let row = schur_of_sum(&p("3"));
    assert_eq!(row.len(), 4);
    assert!(row.iter().all(|(m, n, c)| *c == 1 && m.len() <= 1 && n.len() <= 1));
    let got: Vec<(String, String, i64)> =
        schur_of_sum(&p("2,1")).into_iter().map(|(a, b, c)| (a.to_string(), b.to_string(), c)).collect();
    let expect = [
        ("[2,1]", "[]", 1),
        ("[2]", "[1]", 1),
        ("[1,1]", "[1]", 1),
        ("[1]", "[2]", 1),
        ("[1]", "[1,1]", 1),
        ("[]", "[2,1]", 1),
    ];
    let expect: Vec<(String, String, i64)> = expect.iter().map(|(a, b, c)| (a.to_string(), b.to_string(), *c)).collect();
    assert_eq!(got, expect);
}

#[test]
fn schur_of_sum_dimensions() {
    // dim S_λ(𝕜^3 ⊕ 𝕜^3) = Σ c (dim S_μ 𝕜^3)(dim S_ν 𝕜^3).
    for n in 0..=5 {
        for lambda in Partition::all(n) {
            let total: u128 = schur_of_sum(&lambda).iter().map(|(m, nu, c)| *c as u128 * m.dimension(3) * nu.dimension(3)).sum();
            assert_eq!(total, lambda.dimension(6), "{lambda}");
        }
    }
}

#[test]
fn schur_of_l2_examples() {
    let g = schur_of_l2(&p("1"));
    assert_eq!(g.len(), 2);
    assert_eq!(g[&1], sp(&[("1", 1)]));
    assert_eq!(g[&2], sp(&[("1,1", 1)]));
    let g = schur_of_l2(&p("2,1"));
    assert_eq!(g[&3], sp(&[("2,1", 1)]));
    let expect = sp(&[
        ("1,1,1,1,1", 1),
        ("2,1,1,1", 2),
        ("3,2", 1),
        ("2,2,1", 2),
        ("3,1", 1),
        ("2,1,1", 2),
        ("3,1,1", 1),
        ("1,1,1,1", 1),
        ("2,2", 1),
        ("2,1", 1),
        ("3,2,1", 1),
        ("2,2,1,1", 1),
        ("2,1,1,1,1", 1),
    ]);
    let total = total_character(&g);
    assert_eq!(total, expect);
    assert_eq!(total.terms().len(), 13);
    for n in 1..=4 {
        for lambda in Partition::all(n) {
            let g = schur_of_l2(&lambda);
            assert_eq!(g[&n], SchurPoly::single(lambda.clone()));
            assert!(g.values().all(|f| f.is_nonnegative()));
        }
    }
}

#[test]
fn bm_examples() {
    assert_eq!(enumerate_bm(1), vec![p("1")]);
    let b2: Vec<String> = enumerate_bm(2).iter().map(|x| x.to_string()).collect();
    assert_eq!(b2, ["[1,1,1]", "[2]"]);
    for m in 1..=6 {
        for l in enumerate_bm(m) {
            assert!(l.size() >= m && l.size() <= 2 * m);
        }
    }
}

#[test]
fn bm_appears_in_sym_of_l2() {
    // Every λ ∈ ℬ_m occurs in Sym^m(L₍₂₎).
    for m in 1..=5 {
        let total = total_character(&schur_of_l2(&Partition::row(m)));
        for l in enumerate_bm(m) {
            assert!(total.coefficient(&l) > 0, "{l}");
        }
    }
}

#[test]
fn characters_and_decomposition() {
    let w = |pairs: &[(&[i64], i64)]| -> BTreeMap<Vec<i64>, i64> { pairs.iter().map(|(v, c)| (v.to_vec(), *c)).collect() };
    assert_eq!(char_to_schur(&w(&[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)]), 3).unwrap(), sp(&[("1", 1)]));
    let wedge = w(&[(&[1, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)]);
    assert_eq!(char_to_schur(&wedge, 3).unwrap(), sp(&[("1,1", 1)]));
    // V ⊗ V.
    let mut vv = BTreeMap::new();
    for i in 0..3 {
        for j in 0..3 {
            let mut e = vec![0i64; 3];
            e[i] += 1;
            e[j] += 1;
            *vv.entry(e).or_insert(0) += 1;
        }
    }
    assert_eq!(char_to_schur(&vv, 3).unwrap(), sp(&[("2", 1), ("1,1", 1)]));
    assert_eq!(char_to_schur(&w(&[(&[1, 0], 1)]), 2), Err(SymFuncError::NotSymmetric));
    assert!(matches!(char_to_schur(&w(&[(&[1, 0], -1), (&[0, 1], -1)]), 2), Err(SymFuncError::NegativeMultiplicity { .. })));
    assert!(matches!(char_to_schur(&w(&[(&[1], 1)]), 2), Err(SymFuncError::BadWeight(_))));
}

#[test]
fn schur_characters_roundtrip() {
    for d in 1..=4 {
        for n in 0..=5 {
            for lambda in Partition::all(n) {
                let ch = schur_character(&lambda, d);
                let total: i64 = ch.values().sum();
                assert_eq!(total as u128, lambda.dimension(d));
                let ch: BTreeMap<Vec<i64>, i64> = ch.into_iter().map(|(w, c)| (w.into_iter().map(i64::from).collect(), c)).collect();
                let back = char_to_schur(&ch, d).unwrap();
                if lambda.len() <= d {
                    assert_eq!(back, SchurPoly::single(lambda.clone()));
                } else {
                    assert!(back.is_zero());
                }
            }
        }
    }
}

#[test]
fn dominant_decomposition_matches_full() {
    for d in 1..=4 {
        for n in 0..=5 {
            let mut total = SchurPoly::zero();
            let mut dom: BTreeMap<Partition, i64> = BTreeMap::new();
            for lambda in Partition::with_max_rows(n, d) {
                total.add_term(lambda.clone(), 1);
                for (w, c) in schur_character(&lambda, d) {
                    if w.windows(2).all(|p| p[0] >= p[1]) {
                        *dom.entry(Partition::new(w)).or_insert(0) += c;
                    }
                }
            }
            assert_eq!(dominant_to_schur(&dom, d).unwrap(), total);
        }
    }
}

proptest! {
    #[test]
    fn products_respect_dimension(a in 0u32..5, b in 0u32..5, ia in 0usize..7, ib in 0usize..7, d in 1usize..5) {
        let pa = Partition::all(a);
        let pb = Partition::all(b);
        let la = pa[ia % pa.len()].clone();
        let lb = pb[ib % pb.len()].clone();
        let prod = lr_mult(&SchurPoly::single(la.clone()), &SchurPoly::single(lb.clone()));
        prop_assert_eq!(prod.dimension(d), (la.dimension(d) * lb.dimension(d)) as i128);
    }
}
