//! Worked examples on catalog doubles: series, centers, radicals, Levi
//! complements, isotropy, duality, and the complexified nullspace check.

use num_traits::{One, Zero};

use drinfeld_lab::exactmath::{gauss, rat, rint, GaussRat, Mat, Poly, Rat};
use drinfeld_lab::invariants::{mia_census, ParamSet};
use drinfeld_lab::liecore::{bianchi_classify, levi_complement, BianchiType, Subspace};
use drinfeld_lab::manin::{build_double, catalog_triple, dualize, DoubleAlgebra, Params};

fn double(label: &str, params: Params) -> DoubleAlgebra {
    build_double(&catalog_triple(label, &params).unwrap()).unwrap()
}

fn v(entries: &[i64]) -> Vec<Rat> {
    entries.iter().map(|&x| rint(x)).collect()
}

#[test]
fn killing_signature_of_the_compact_double() {
    let d = double("(9|1)", Params::none());
    assert_eq!(d.algebra().killing_signature(), (0, 3, 3));
}

#[test]
fn series_profiles_of_three_representative_doubles() {
    let d = double("(1|1)", Params::none());
    let s = d.algebra().series_profile();
    assert_eq!((s.commutant, s.upper, s.lower), (0, (0, 0), (0, 0)));

    let d = double("(7_a|1)", Params::with_a(rint(2)));
    let s = d.algebra().series_profile();
    assert_eq!((s.commutant, s.upper, s.lower), (5, (5, 5), (1, 0)));

    let d = double("(2|2.i)", Params::none());
    let s = d.algebra().series_profile();
    assert_eq!((s.commutant, s.upper, s.lower), (3, (2, 0), (0, 0)));
}

#[test]
fn centers_of_catalog_doubles() {
    let d = double("(7_a|1)", Params::with_a(rint(2)));
    let expected = Subspace::span(6, &[v(&[0, 0, 0, 1, 0, 0])]);
    assert_eq!(d.algebra().center(), expected);

    let d = double("(2|2.i)", Params::none());
    let expected = Subspace::span(
        6,
        &[v(&[1, 0, 0, 0, 0, 0]), v(&[0, 1, 0, 0, -1, 0]), v(&[0, 0, 0, 0, 0, 1])],
    );
    assert_eq!(d.algebra().center(), expected);

    let abelian = double("(1|1)", Params::none());
    assert_eq!(abelian.algebra().center().dim(), 6);
}

#[test]
fn radicals_of_catalog_doubles() {
    let d = double("(8|1)", Params::none());
    let rad = d.algebra().radical().unwrap();
    assert_eq!(rad, d.dual_span());

    let d = double("(4|2.iii|b)", Params::with_b(rint(1)));
    let rad = d.algebra().radical().unwrap();
    let expected = Subspace::span(
        6,
        &[v(&[0, 0, 1, 0, 0, 0]), v(&[0, 0, 0, 1, 0, 0]), v(&[0, 0, 0, 0, 1, 0])],
    );
    assert_eq!(rad, expected);

    let d = double("(9|5|b)", Params::with_b(rint(1)));
    assert_eq!(d.algebra().radical().unwrap().dim(), 0);
}

#[test]
fn levi_complement_examples() {
    // for the abelian-dual case the primal span itself is a complement
    let d = double("(8|1)", Params::none());
    let rad = d.algebra().radical().unwrap();
    let s = levi_complement(d.algebra(), &rad).unwrap();
    assert_eq!(s, d.primal_span());

    // the scaled case has a family of complements; any one closes
    let d = double("(4|2.iii|b)", Params::with_b(rint(1)));
    let rad = d.algebra().radical().unwrap();
    let s = levi_complement(d.algebra(), &rad).unwrap();
    assert_eq!(s.dim(), 3);
    assert_eq!(s.intersection(&rad).dim(), 0);
    let br = d.algebra().bracket_span(&s, &s);
    assert!(s.contains(&br));

    // semisimple: the whole algebra is its own complement
    let d = double("(9|5|b)", Params::with_b(rint(1)));
    let rad = d.algebra().radical().unwrap();
    let s = levi_complement(d.algebra(), &rad).unwrap();
    assert_eq!(s.dim(), 6);
}

#[test]
fn subspace_predicates_on_catalog_doubles() {
    let d = double("(8|1)", Params::none());
    let p = d.algebra().predicates(&d.dual_span());
    assert!(p.is_subalgebra && p.is_abelian && p.is_ideal);

    let d = double("(7_a|1)", Params::with_a(rint(2)));
    let x1 = Subspace::span(6, &[v(&[1, 0, 0, 0, 0, 0])]);
    let p = d.algebra().predicates(&x1);
    assert!(p.is_subalgebra && p.is_abelian && !p.is_ideal);

    let whole = Subspace::full(6);
    let p = d.algebra().predicates(&whole);
    assert!(p.is_subalgebra && p.is_ideal && !p.is_abelian);
    let abelian = double("(1|1)", Params::none());
    assert!(abelian.algebra().predicates(&whole).is_abelian);
}

#[test]
fn isotropy_of_marked_subspaces() {
    let d = double("(5|1)", Params::none());
    // span{Xt1, X2, Xt3}
    let s = Subspace::span(
        6,
        &[v(&[0, 0, 0, 1, 0, 0]), v(&[0, 1, 0, 0, 0, 0]), v(&[0, 0, 0, 0, 0, 1])],
    );
    assert!(d.is_maximally_isotropic(&s));
    // span{X1, Xt1} pairs to 1
    let bad = Subspace::span(6, &[v(&[1, 0, 0, 0, 0, 0]), v(&[0, 0, 0, 1, 0, 0])]);
    assert!(!d.is_isotropic(&bad));
    assert!(d.is_maximally_isotropic(&d.dual_span()));
}

#[test]
fn dualize_swaps_the_subalgebra_types() {
    let t = catalog_triple("(9|5|b)", &Params::with_b(rint(1))).unwrap();
    let dual = dualize(&t);
    assert_eq!(bianchi_classify(dual.g()).unwrap(), BianchiType::Five);
    assert_eq!(bianchi_classify(dual.gt()).unwrap(), BianchiType::Nine);
    assert_eq!(dualize(&dual), t);

    let self_dual = catalog_triple("(1|1)", &Params::none()).unwrap();
    let d = dualize(&self_dual);
    assert_eq!(d.g(), self_dual.g());
    assert_eq!(d.gt(), self_dual.gt());
}

#[test]
fn the_self_paired_family_is_self_dual_up_to_normalization() {
    // dual (7_1|7_1|b) returns to the same constants after the basis
    // transformation X'_i = X_k A^k_i, X̃'^j = (A⁻¹)^j_k X̃^k, A = diag(1/b,1,1)
    let b = rint(2);
    let t = catalog_triple("(7_a|7_{1/a}|b)", &Params::with_ab(rint(1), b.clone())).unwrap();
    let dual = dualize(&t);
    let a = Mat::diag(vec![Rat::one() / b, Rat::one(), Rat::one()]);
    let a_inv_t = a.inverse().unwrap().transpose();
    let g_norm = dual.g().change_basis(&a).unwrap();
    let gt_norm = dual.gt().change_basis(&a_inv_t).unwrap();
    assert_eq!(&g_norm, t.g());
    assert_eq!(&gt_norm, t.gt());
}

#[test]
fn complexified_pencil_has_the_expected_nullspace() {
    // B − βK over the Gaussian rationals at β = −i/4 drops rank by three
    let d = double("(9|5|b)", Params::with_b(rint(1)));
    let k = d.algebra().killing_gram();
    let b = d.form();
    let beta = gauss(rint(0), rat(-1, 4));
    let mut m: Mat<GaussRat> = Mat::zero(6, 6);
    for i in 0..6 {
        for j in 0..6 {
            m[(i, j)] = gauss(b[(i, j)].clone(), Rat::zero())
                - beta.clone() * gauss(k[(i, j)].clone(), Rat::zero());
        }
    }
    let ns = m.nullspace();
    assert_eq!(ns.len(), 3);
    for vkt in &ns {
        assert!(m.mul_vec(vkt).iter().all(Zero::is_zero));
    }
}

#[test]
fn char_poly_of_the_split_pencil_matches_the_leibniz_oracle() {
    let d = double("(8|5.i|b)", Params::with_b(rint(1)));
    let k = d.algebra().killing_gram();
    let m = k.inverse().unwrap().mul(&d.form());
    let p = m.char_poly().unwrap();
    // (λ² − 1/16)³
    let quad = Poly::new(vec![rat(-1, 16), rint(0), rint(1)]);
    assert_eq!(p, quad.pow(3));
    assert_eq!(p, char_poly_leibniz(&m));
}

/// Brute-force det(λI − M) over all permutations: an independent oracle.
fn char_poly_leibniz(m: &Mat<Rat>) -> Poly<Rat> {
    let n = m.rows();
    let entry = |i: usize, j: usize| -> Poly<Rat> {
        if i == j {
            Poly::new(vec![-m[(i, j)].clone(), rint(1)])
        } else {
            Poly::new(vec![-m[(i, j)].clone()])
        }
    };
    let mut total = Poly::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    fn go(
        items: &mut Vec<usize>,
        k: usize,
        sign: i64,
        visit: &mut impl FnMut(&[usize], i64),
    ) {
        if k == items.len() {
            visit(items, sign);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            let s = if i == k { sign } else { -sign };
            go(items, k + 1, s, visit);
            items.swap(k, i);
        }
    }
    go(&mut perm, 0, 1, &mut |p: &[usize], sign: i64| {
        let mut term = Poly::new(vec![rint(sign)]);
        for (i, &j) in p.iter().enumerate() {
            term = term.mul(&entry(i, j));
        }
        total = total.add(&term);
    });
    total
}

#[test]
fn split_values_of_the_six_family_pairing() {
    use drinfeld_lab::invariants::{semisimple_split_coeffs, SplitInvariant};
    // {a/(4b(a−1)²), −a/(4b(1+a)²)} at a=2, b=1: s = 4/9, p = −1/36
    let d = double("(6_a|6_{1/a}.i|b)", Params::with_ab(rint(2), rint(1)));
    let q = semisimple_split_coeffs(&d).unwrap();
    assert_eq!(q, SplitInvariant { s: rat(4, 9), p: rat(-1, 36) });
    // invariant under a ↔ 1/a at the same b
    let d = double("(6_a|6_{1/a}.i|b)", Params::with_ab(rat(1, 2), rint(1)));
    assert_eq!(semisimple_split_coeffs(&d).unwrap(), q);
}

#[test]
fn levi_correction_rejects_a_non_abelian_radical() {
    use drinfeld_lab::liecore::LieError;
    // a nilpotent double is its own (non-abelian) radical
    let d = double("(2|2.i)", Params::none());
    let rad = d.algebra().radical().unwrap();
    assert_eq!(rad.dim(), 6);
    let err = levi_complement(d.algebra(), &rad).unwrap_err();
    assert!(matches!(err, LieError::Unsupported(_)));
}

#[test]
fn classifier_rejects_wrong_dimensions_and_bad_budgets() {
    use drinfeld_lab::isomorph::{search_iso, IsoError};
    use drinfeld_lab::liecore::LieError;
    let six = double("(1|1)", Params::none());
    let err = bianchi_classify(six.algebra()).unwrap_err();
    assert!(matches!(err, LieError::NotThreeDimensional(6)));
    let err = six.algebra().bracket_basis(0, 1); // fine: just exercise accessors
    assert!(err.iter().all(Zero::is_zero));
    let bad = search_iso(&six, &six, 0, &[rint(1)]).unwrap_err();
    assert!(matches!(bad, IsoError::BadBudget));
    let non_square: Mat<Rat> = Mat::zero(2, 3);
    assert!(non_square.char_poly().is_err());
}

#[test]
fn orientation_summary_of_the_free_rotation_double() {
    use drinfeld_lab::invariants::decomposition_orientations;
    // (7_0|1): decompositions pair rotation sides with the abelian side,
    // so the summary records 7_0|1-type pairs; any rotation-rotation pairs
    // carry a consistent orientation
    let summary = decomposition_orientations(&double("(7_0|1)", Params::none())).unwrap();
    assert!(summary.entries.iter().any(|e| e.starts_with("7_0|1")), "{summary:?}");
    assert!(summary.orientations.len() <= 1, "{summary:?}");
}

#[test]
fn duality_is_an_involution_on_the_whole_catalog() {
    use drinfeld_lab::manin::catalog_entries;
    for entry in catalog_entries() {
        let params = Params {
            a: entry.needs_a().then(|| rint(2)),
            b: entry.needs_b().then(|| rint(1)),
        };
        let t = catalog_triple(entry.label, &params).unwrap();
        assert_eq!(dualize(&dualize(&t)), t, "{}", entry.label);
        // both assemble to relabelings of one bracket table
        let d = build_double(&t).unwrap();
        let dd = build_double(&dualize(&t)).unwrap();
        let w = drinfeld_lab::isomorph::duality_witness(&t);
        assert!(w.verify().unwrap().is_valid());
        drop((d, dd));
    }
}

#[test]
fn search_finds_a_witness_inside_the_mixed_class() {
    use drinfeld_lab::isomorph::{search_iso, verify_matrix, SearchOutcome};
    let d = double("(8|1)", Params::none());
    let d2 = double("(8|2.iii)", Params::none());
    let out = search_iso(&d, &d2, 2_000_000, &[rint(1), rint(-1)]).unwrap();
    let SearchOutcome::Found(m) = out else { panic!("expected a witness, got {out:?}") };
    assert!(verify_matrix(&m, &d, &d2).unwrap().is_valid());
}

#[test]
fn census_families_of_four_one_are_the_three_isolated_spans() {
    let census = mia_census(&double("(4|1)", Params::none())).unwrap();
    assert!(census.complete);
    assert_eq!(census.family_count(), 3);
    // no one-parameter family survives the exact abelian condition
    assert!(census.families.iter().all(|f| f.param != ParamSet::Free));
    let spans: Vec<Subspace> = census
        .families
        .iter()
        .map(|f| Subspace::span(6, &f.witness_basis))
        .collect();
    let expected = [
        Subspace::span(
            6,
            &[v(&[0, 0, 0, 1, 0, 0]), v(&[0, 1, 0, 0, 0, 0]), v(&[0, 0, 1, 0, 0, 0])],
        ),
        Subspace::span(
            6,
            &[v(&[0, 0, 0, 1, 0, 0]), v(&[0, 0, 1, 0, 0, 0]), v(&[0, 0, 0, 0, 1, 0])],
        ),
        Subspace::span(
            6,
            &[v(&[0, 0, 0, 1, 0, 0]), v(&[0, 0, 0, 0, 1, 0]), v(&[0, 0, 0, 0, 0, 1])],
        ),
    ];
    for e in &expected {
        assert!(spans.contains(e), "missing family {e:?}");
    }
}

#[test]
fn ideal_census_families_are_isotropic() {
    // families that are ideals with [D, I] = I are isotropic by
    // ad-invariance; verify on the representatives the census covers
    for (label, params) in [
        ("(7_a|1)", Params::with_a(rint(2))),
        ("(6_a|1)", Params::with_a(rint(3))),
        ("(5|1)", Params::none()),
        ("(4|1)", Params::none()),
    ] {
        let d = double(label, params);
        let census = mia_census(&d).unwrap();
        for f in &census.families {
            let span = Subspace::span(6, &f.witness_basis);
            let p = d.algebra().predicates(&span);
            if p.is_ideal && d.algebra().bracket_span(&Subspace::full(6), &span) == span {
                assert!(d.is_isotropic(&span), "{label}: ideal family not isotropic");
            }
        }
    }
}
