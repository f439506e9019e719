use hopfaut_core::hopf::*;
use hopfaut_core::Rational;
use std::vec;
use proptest::prelude::*;

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn tv(d: usize, trunc: usize) -> HopfDescriptor {
    HopfDescriptor::tensor(d, trunc).unwrap()
}

fn u(d: usize, trunc: usize) -> HopfDescriptor {
    HopfDescriptor::nil2(d, trunc).unwrap()
}

fn gen(desc: HopfDescriptor, g: usize) -> AlgebraElement {
    AlgebraElement::generator(desc, g)
}

fn all_words(desc: HopfDescriptor, max: usize) -> Vec<Word> {
    (0..=max).flat_map(|k| desc.basis_words(k)).collect()
}

#[test]
fn products() {
    let t = tv(2, 4);
    let p = gen(t, 0).mul(&gen(t, 1)).unwrap();
    assert_eq!(p, AlgebraElement::letters(t, &[0, 1]).unwrap());

    let h = u(2, 4);
    let x1 = gen(h, 0);
    let x2 = gen(h, 1);
    let z = gen(h, 2);
    let lhs = x2.mul(&x1).unwrap();
    let rhs = x1.mul(&x2).unwrap().sub(&z).unwrap();
    assert_eq!(lhs, rhs);
    // x1 x2 is already a normal word
    assert_eq!(x1.mul(&x2).unwrap().terms().len(), 1);

    let one = AlgebraElement::one(h);
    assert_eq!(one.mul(&x2).unwrap(), x2);
    assert_eq!(x2.mul(&one).unwrap(), x2);
}

#[test]
fn brackets() {
    let t = tv(2, 4);
    let v = gen(t, 0);
    assert!(v.lie_bracket(&v).unwrap().is_zero());
    let w = gen(t, 1);
    let expect = AlgebraElement::letters(t, &[0, 1]).unwrap().sub(&AlgebraElement::letters(t, &[1, 0]).unwrap()).unwrap();
    assert_eq!(v.lie_bracket(&w).unwrap(), expect);

    let h = u(3, 4);
    assert_eq!(gen(h, 0).lie_bracket(&gen(h, 1)).unwrap(), gen(h, 3));
    assert_eq!(gen(h, 1).lie_bracket(&gen(h, 2)).unwrap(), gen(h, 5));
    // z is central
    assert!(gen(h, 3).lie_bracket(&gen(h, 2)).unwrap().is_zero());
}

#[test]
fn coproduct_examples() {
    let t = tv(2, 4);
    let v = gen(t, 0);
    let one = AlgebraElement::one(t);
    let expect = TensorElement::tensor_product(&[v.clone(), one.clone()])
        .unwrap()
        .add(&TensorElement::tensor_product(&[one.clone(), v.clone()]).unwrap())
        .unwrap();
    assert_eq!(v.coproduct(), expect);

    let w = gen(t, 1);
    let vw = v.mul(&w).unwrap();
    let mut expect = TensorElement::zero(t, 2);
    for pair in [[&vw, &one], [&v, &w], [&w, &v], [&one, &vw]] {
        expect = expect.add(&TensorElement::tensor_product(&[pair[0].clone(), pair[1].clone()]).unwrap()).unwrap();
    }
    assert_eq!(vw.coproduct(), expect);

    let d2 = v.coproduct_iter(2);
    assert_eq!(d2.arity(), 3);
    assert_eq!(d2.terms().len(), 3);
    for (ws, c) in d2.terms() {
        assert!(c.is_one());
        assert_eq!(ws.iter().filter(|w| !t.is_unit_word(w)).count(), 1);
    }
    assert_eq!(v.coproduct_iter(0), TensorElement::from_algebra(&v));
}

#[test]
fn antipode_examples() {
    let t = tv(2, 4);
    assert_eq!(gen(t, 0).antipode(), gen(t, 0).scaled(&r(-1)));
    assert_eq!(AlgebraElement::letters(t, &[0, 1]).unwrap().antipode(), AlgebraElement::letters(t, &[1, 0]).unwrap());
    assert_eq!(AlgebraElement::one(t).antipode(), AlgebraElement::one(t));

    let h = u(2, 4);
    let x12 = gen(h, 0).mul(&gen(h, 1)).unwrap();
    assert_eq!(x12.antipode(), x12.sub(&gen(h, 2)).unwrap());
    assert_eq!(gen(h, 2).antipode(), gen(h, 2).scaled(&r(-1)));
}

#[test]
fn counit_examples() {
    let t = tv(2, 4);
    assert_eq!(AlgebraElement::one(t).counit(), r(1));
    assert_eq!(gen(t, 0).counit(), r(0));
    let e = AlgebraElement::scalar(t, r(3)).add(&AlgebraElement::letters(t, &[0, 1]).unwrap()).unwrap();
    assert_eq!(e.counit(), r(3));
}

#[test]
fn truncation_drops_high_terms() {
    let t = tv(2, 2);
    let a = AlgebraElement::letters(t, &[0, 1]).unwrap();
    assert!(a.mul(&gen(t, 0)).unwrap().is_zero());
    assert!(AlgebraElement::letters(t, &[0, 1, 1]).unwrap().is_zero());
    let h = u(2, 3);
    assert!(gen(h, 2).mul(&gen(h, 2)).unwrap().is_zero());
}

#[test]
fn descriptor_mismatch() {
    let a = gen(tv(2, 4), 0);
    let b = gen(tv(3, 4), 0);
    assert_eq!(a.mul(&b), Err(HopfError::DescriptorMismatch));
    assert!(HopfDescriptor::tensor(0, 3).is_err());
    assert!(HopfDescriptor::nil2(2, 0).is_err());
}

#[test]
fn basis_counts() {
    let t = tv(2, 6);
    assert_eq!(t.basis_words(3).len(), 8);
    // U(L(2)) with d=2: Hilbert series 1/((1-t)^2 (1-t^2))
    let h = u(2, 6);
    let counts: Vec<usize> = (0..=6).map(|k| h.basis_words(k).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 6, 9, 12, 16]);
    assert_eq!(t.tensor_basis(2, 6).len(), 448);
}

#[test]
fn z_indexing_roundtrip() {
    let h = u(5, 4);
    for k in 0..h.num_z() {
        let (i, j) = h.z_pair(k);
        assert_eq!(h.z_index(i, j), k);
    }
    assert_eq!(h.format_word(&h.generator_word(h.dim_v() + h.z_index(1, 3))), "z24");
}

fn check_axioms(desc: HopfDescriptor, max: usize) {
    for w in all_words(desc, max) {
        let a = AlgebraElement::basis(desc, w.clone()).unwrap();
        let d = a.coproduct();
        // cocommutativity
        assert_eq!(d.permute(&[1, 0]).unwrap(), d, "cocommutativity at {}", desc.format_word(&w));
        // coassociativity
        assert_eq!(d.coproduct_factor(0).unwrap(), d.coproduct_factor(1).unwrap());
        // counit laws
        assert_eq!(d.counit_factor(0).unwrap().to_algebra().unwrap(), a);
        assert_eq!(d.counit_factor(1).unwrap().to_algebra().unwrap(), a);
        // antipode axiom
        let unit = AlgebraElement::scalar(desc, a.counit());
        let l = d.antipode_factor(0).unwrap().multiply_factors(0).unwrap().to_algebra().unwrap();
        let rr = d.antipode_factor(1).unwrap().multiply_factors(0).unwrap().to_algebra().unwrap();
        assert_eq!(l, unit, "S*id at {}", desc.format_word(&w));
        assert_eq!(rr, unit, "id*S at {}", desc.format_word(&w));
        // S^2 = id
        assert_eq!(a.antipode().antipode(), a);
    }
    let words = all_words(desc, max);
    for u1 in &words {
        for u2 in &words {
            if desc.degree(u1) + desc.degree(u2) > max {
                continue;
            }
            let a = AlgebraElement::basis(desc, u1.clone()).unwrap();
            let b = AlgebraElement::basis(desc, u2.clone()).unwrap();
            let lhs = a.mul(&b).unwrap().coproduct();
            let rhs = a.coproduct().componentwise_mul(&b.coproduct()).unwrap();
            assert_eq!(lhs, rhs, "bialgebra at {} * {}", desc.format_word(u1), desc.format_word(u2));
        }
    }
}

#[test]
fn axioms_tensor_algebra() {
    check_axioms(tv(2, 5), 5);
}

#[test]
fn axioms_nil2() {
    check_axioms(u(2, 5), 5);
    check_axioms(u(3, 4), 4);
}

#[test]
fn nil2_associativity_exhaustive() {
    let h = u(3, 5);
    let words = all_words(h, 3);
    for a in &words {
        for b in &words {
            for c in &words {
                if h.degree(a) + h.degree(b) + h.degree(c) > 5 {
                    continue;
                }
                let (a, b, c) = (
                    AlgebraElement::basis(h, a.clone()).unwrap(),
                    AlgebraElement::basis(h, b.clone()).unwrap(),
                    AlgebraElement::basis(h, c.clone()).unwrap(),
                );
                assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn tensor_ops() {
    let t = tv(2, 6);
    let a = AlgebraElement::letters(t, &[0, 1]).unwrap();
    let b = gen(t, 1);
    let ab = TensorElement::tensor_product(&[a.clone(), b.clone()]).unwrap();
    assert_eq!(ab.homogeneous_degree(), Some(3));
    assert_eq!(ab.multiply_factors(0).unwrap().to_algebra().unwrap(), a.mul(&b).unwrap());
    assert_eq!(ab.insert_unit(1).unwrap().counit_factor(1).unwrap(), ab);
    assert_eq!(ab.permute(&[1, 0]).unwrap(), TensorElement::tensor_product(&[b, a]).unwrap());
    assert!(ab.sub(&ab).unwrap().is_zero());
    assert_eq!(ab.to_string(), "v1v2 ⊗ v2");
    assert_eq!(ab.filtration_degree(), 3);
}

#[test]
fn display() {
    let h = u(2, 4);
    let e = gen(h, 1).mul(&gen(h, 0)).unwrap();
    assert_eq!(e.to_string(), "x1 x2 - z12");
    assert_eq!(AlgebraElement::zero(h).to_string(), "0");
    let half = Rational::new(1, 2);
    assert_eq!(gen(h, 0).pow(2).scaled(&half).to_string(), "1/2*x1^2");
}

fn arb_element(desc: HopfDescriptor, max: usize) -> impl Strategy<Value = AlgebraElement> {
    let words = all_words(desc, max);
    let n = words.len();
    proptest::collection::vec((0..n, -3i64..=3), 0..5).prop_map(move |ts| {
        AlgebraElement::from_terms(desc, ts.into_iter().map(|(i, c)| (words[i].clone(), r(c)))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn prop_bialgebra_nil2(a in arb_element(u(2, 5), 3), b in arb_element(u(2, 5), 2)) {
        let lhs = a.mul(&b).unwrap().coproduct();
        let rhs = a.coproduct().componentwise_mul(&b.coproduct()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn prop_assoc_nil2(a in arb_element(u(3, 5), 2), b in arb_element(u(3, 5), 2), c in arb_element(u(3, 5), 2)) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn prop_antipode_anti_multiplicative(a in arb_element(u(2, 5), 3), b in arb_element(u(2, 5), 2)) {
        let lhs = a.mul(&b).unwrap().antipode();
        let rhs = b.antipode().mul(&a.antipode()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn prop_truncation_independent(a in arb_element(u(2, 5), 3), b in arb_element(u(2, 5), 2)) {
        // the same product computed with two more degrees of headroom
        let big = u(2, 7);
        let a2 = a.retruncate(big).unwrap();
        let b2 = b.retruncate(big).unwrap();
        let p2 = a2.mul(&b2).unwrap().coproduct().retruncate(u(2, 5)).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().coproduct(), p2);
    }
}
