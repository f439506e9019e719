use hopfaut_core::nilrep::*;
use hopfaut_core::linalg::SparseMatrix;
use hopfaut_core::symfunc::{Partition, SchurPoly};
use hopfaut_core::Rational;
use hopfaut_core::linalg::rank;
use hopfaut_core::symfunc::schur_of_l2;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn sp(terms: &[&str]) -> SchurPoly {
    SchurPoly::from_terms(terms.iter().map(|s| (p(s), 1)))
}

#[test]
fn l2_basis_brackets() {
    let l2 = L2Basis::new(3);
    assert_eq!(l2.len(), 6);
    assert_eq!(l2.ad_x(0, 1), Some((l2.z_index(0, 1), 1)));
    assert_eq!(l2.ad_x(2, 0), Some((l2.z_index(0, 2), -1)));
    assert_eq!(l2.ad_x(1, 1), None);
    assert_eq!(l2.ad_x(0, l2.z_index(1, 2)), None);
    assert_eq!(l2.weight(l2.z_index(1, 2)), &[0, 1, 1]);
}

#[test]
fn pieri_identity_in_lowest_case() {
    let l2 = L2Basis::new(3);
    for w in [[1, 0, 0], [0, 1, 1]] {
        let m = pieri_map_matrix(&l2, 0, 1, &w).unwrap();
        assert_eq!(m, SparseMatrix::identity(1));
    }
    assert_eq!(pieri_map_matrix(&l2, 1, 0, &[1, 0, 0]), Err(NilRepError::EmptySecondFactor));
    assert!(matches!(pieri_map_matrix(&l2, 1, 1, &[1, 0]), Err(NilRepError::WeightLength { .. })));
}

#[test]
fn pieri_is_surjective() {
    let l2 = L2Basis::new(4);
    for (pp, q) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
        for w in [[1, 1, 1, 1], [2, 1, 1, 0], [2, 2, 1, 1], [3, 1, 1, 1], [2, 2, 2, 0]] {
            let m = pieri_map_matrix(&l2, pp, q, &w).unwrap();
            assert_eq!(rank(&m), m.rows(), "({pp},{q}) {w:?}");
        }
    }
}

#[test]
fn adjoint_on_sym1_is_the_bracket() {
    // ad : V ⊗ L → L at weight e_0 + e_1 hits z_01 from x_1 (r = 0) and x_0 (r = 1).
    let l2 = L2Basis::new(3);
    let m = adjoint_matrix(&l2, 1, 0, &[1, 1, 0]).unwrap();
    assert_eq!(m.rows(), 1);
    assert_eq!(m.cols(), 2);
    assert_eq!(m.row(0).to_dense(), vec![Rational::ONE, -Rational::ONE]);
}

#[test]
fn two_row_kernel_small_cases() {
    assert_eq!(schur2_character(1, 0, 1, 3).unwrap(), sp(&["1"]));
    assert_eq!(schur2_character(1, 1, 2, 3).unwrap(), sp(&["1,1"]));
    assert_eq!(
        schur2_character(2, 2, 6, 5),
        Err(NilRepError::DimensionTooSmall { d: 5, needed: 6 })
    );
    assert_eq!(TwoRowModel::new(1, 2, 3).unwrap_err(), NilRepError::NotAPartition { p: 1, q: 2 });
}

#[test]
fn two_row_matches_character_pipeline() {
    for n in 1..=3usize {
        for q in 0..=n / 2 {
            let pp = n - q;
            let g = schur_of_l2(&Partition::new(vec![pp as u32, q as u32]));
            for degree in n..=2 * n {
                let d = rows_needed(pp, q, degree).max(3);
                let got = schur2_character(pp, q, degree, d).unwrap();
                let expect = g.get(&(degree as u32)).cloned().unwrap_or_default();
                assert_eq!(got, expect, "({pp},{q}) degree {degree}");
            }
        }
    }
}

#[test]
fn lowest_degree_quotient_is_the_schur_functor() {
    for (pp, q) in [(1, 0), (2, 0), (1, 1), (2, 1), (3, 1), (2, 2)] {
        let l = Partition::new(vec![pp as u32, q as u32]);
        assert_eq!(quotient_character(pp, q, pp + q, 4).unwrap(), SchurPoly::single(l));
    }
}

#[test]
fn quotient_examples() {
    assert_eq!(quotient_character(3, 0, 4, 4).unwrap(), sp(&["2,1,1"]));
    assert_eq!(
        quotient_character(4, 2, 7, 4).unwrap(),
        sp(&["5,1,1", "4,2,1", "3,3,1", "4,1,1,1", "3,2,1,1"])
    );
    // By hand: [2,1]⊗[1,1] = [3,2]+[3,1,1]+[2,2,1]+[2,1,1,1], modulo the
    // injective image V⊗[2,2] = [3,2]+[2,2,1].
    assert_eq!(quotient_character(2, 2, 5, 4).unwrap(), sp(&["3,1,1", "2,1,1,1"]));
    // ([2]+[1,1])⊗[1,1] modulo V⊗[2,1].
    assert_eq!(quotient_character(2, 1, 4, 4).unwrap(), sp(&["2,1,1", "1,1,1,1"]));
    // Two degrees up from the bottom of Sym^4.
    assert_eq!(quotient_character(4, 0, 6, 5).unwrap(), sp(&["2,2,2", "2,1,1,1,1"]));
}

#[test]
fn adjoint_kernel_on_lowest_piece() {
    for n in 1..=3 {
        assert_eq!(ad_kernel_character(n, 0, n, 4).unwrap(), SchurPoly::single(Partition::row(n as u32 + 1)));
    }
    assert!(ad_kernel_character(1, 1, 2, 4).unwrap().is_zero());
    assert!(ad_kernel_character(2, 1, 3, 4).unwrap().is_zero());
}

#[test]
fn truncated_quotient_agrees_on_short_rows() {
    let full = quotient_character(2, 0, 4, 5).unwrap();
    let short = quotient_character_truncated(2, 0, 4, 3).unwrap();
    assert_eq!(full.restrict_rows(3), short);
}


#[test]
fn support_restricted_quotient_agrees() {
    for (p, q) in [(2, 0), (3, 0), (4, 0), (2, 1), (3, 1), (2, 2), (4, 2), (3, 3)] {
        for degree in p + q..=(p + q + 3).min(2 * (p + q)) {
            assert_eq!(
                quotient_character_on_support(p, q, degree, 4).unwrap(),
                quotient_character_truncated(p, q, degree, 4).unwrap(),
                "({p},{q}) degree {degree}"
            );
        }
    }
}
