//! Property suites: invariance of exact linear algebra under change of
//! basis, the pairing-preservation law of the canonical transformations,
//! cross-validation of the mixed compatibility identity, duality, and
//! witness algebra.

use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use drinfeld_lab::exactmath::{fmt_rat, parse_rat, rint, signature, Mat, Rat};
use drinfeld_lab::invariants::profile_of_double;
use drinfeld_lab::liecore::{bianchi_algebra, bianchi_classify, BianchiType};
use drinfeld_lab::manin::{
    assemble_bracket_table, build_double, catalog_entries, catalog_triple, dualize,
    mixed_jacobi_report, Params,
};

fn sample_params(label: &str) -> Params {
    let entry = catalog_entries().iter().find(|e| e.label == label).unwrap();
    Params {
        a: entry.needs_a().then(|| rint(2)),
        b: entry.needs_b().then(|| rint(1)),
    }
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_d0b1e5)
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Mat<Rat> {
    let mut m = Mat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = rint(rng.gen_range(-3i64..=3));
        }
    }
    m
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Mat<Rat> {
    loop {
        let m = random_matrix(rng, n);
        if !m.det().is_zero() {
            return m;
        }
    }
}

#[test]
fn canonical_pairing_survives_a_thousand_basis_transformations() {
    // X'_i = X_k A^k_i, X̃'^j = (A⁻¹)^j_k X̃^k leaves the pairing matrix fixed
    let mut rng = rng();
    let b = drinfeld_lab::manin::canonical_form();
    for _ in 0..1000 {
        let a = random_invertible(&mut rng, 3);
        let a_inv = a.inverse().unwrap();
        let mut c = Mat::zero(6, 6);
        for i in 0..3 {
            for j in 0..3 {
                c[(i, j)] = a[(j, i)].clone();
                c[(3 + i, 3 + j)] = a_inv[(i, j)].clone();
            }
        }
        assert_eq!(c.mul(&b).mul(&c.transpose()), b);
    }
}

#[test]
fn series_profile_is_basis_independent() {
    let mut rng = rng();
    for label in ["(7_a|1)", "(2|2.i)", "(3|3.i)", "(8|1)"] {
        let t = catalog_triple(label, &sample_params(label)).unwrap();
        let d = build_double(&t).unwrap();
        let baseline = d.algebra().series_profile();
        for _ in 0..5 {
            let p = random_invertible(&mut rng, 6);
            let moved = d.algebra().change_basis(&p).unwrap();
            assert_eq!(moved.series_profile(), baseline, "series moved for {label}");
        }
    }
}

#[test]
fn bianchi_classification_is_basis_independent() {
    let mut rng = rng();
    let types = [
        BianchiType::One,
        BianchiType::Two,
        BianchiType::Three,
        BianchiType::Four,
        BianchiType::Five,
        BianchiType::SixA(rint(2)),
        BianchiType::SixA(drinfeld_lab::exactmath::rat(1, 3)),
        BianchiType::Six0,
        BianchiType::SevenA(rint(3)),
        BianchiType::Seven0,
        BianchiType::Eight,
        BianchiType::Nine,
    ];
    for t in &types {
        let alg = bianchi_algebra(t).unwrap();
        for _ in 0..5 {
            let p = random_invertible(&mut rng, 3);
            let moved = alg.change_basis(&p).unwrap();
            assert_eq!(&bianchi_classify(&moved).unwrap(), t);
        }
    }
}

#[test]
fn killing_form_is_ad_invariant_on_catalog_doubles() {
    for entry in catalog_entries() {
        let t = catalog_triple(entry.label, &sample_params(entry.label)).unwrap();
        let d = build_double(&t).unwrap();
        let alg = d.algebra();
        let k = alg.killing_gram();
        let e = |i: usize| -> Vec<Rat> {
            (0..6).map(|t| if t == i { Rat::one() } else { Rat::zero() }).collect()
        };
        let pair = |u: &[Rat], w: &[Rat]| -> Rat {
            let kw = k.mul_vec(w);
            u.iter().zip(&kw).fold(Rat::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        };
        for x in 0..6 {
            for y in 0..6 {
                for z in 0..6 {
                    let lhs = pair(&alg.bracket(&e(x), &e(y)), &e(z))
                        + pair(&e(y), &alg.bracket(&e(x), &e(z)));
                    assert!(lhs.is_zero(), "{}: K not ad-invariant", entry.label);
                }
            }
        }
    }
}

#[test]
fn mixed_identity_is_equivalent_to_the_assembled_jacobi_identity() {
    // on every catalog pair (valid) and on sign-mutated pairs (mostly
    // invalid) the standalone mixed identity and the full 6-dimensional
    // Jacobi check agree
    for entry in catalog_entries() {
        let t = catalog_triple(entry.label, &sample_params(entry.label)).unwrap();
        let cases = mutations(t.g(), t.gt());
        for (f, ft) in cases {
            if !f.check_jacobi().is_valid() || !ft.check_jacobi().is_valid() {
                continue;
            }
            let mixed_ok = mixed_jacobi_report(&f, &ft).is_valid();
            let table = assemble_bracket_table(&f, &ft);
            let jacobi_ok = table.check_jacobi().is_valid();
            assert_eq!(
                mixed_ok, jacobi_ok,
                "{}: mixed identity and assembled Jacobi disagree",
                entry.label
            );
        }
    }
}

fn mutations(
    g: &drinfeld_lab::LieAlgebra,
    gt: &drinfeld_lab::LieAlgebra,
) -> Vec<(drinfeld_lab::LieAlgebra, drinfeld_lab::LieAlgebra)> {
    let mut out = vec![(g.clone(), gt.clone())];
    // swap the two sides without transposing index roles; often breaks the
    // mixed identity while both sides stay Lie algebras
    out.push((gt.clone(), g.clone()));
    // replace the dual side by so(3) or a Heisenberg table
    let nine = bianchi_algebra(&BianchiType::Nine).unwrap();
    let two = bianchi_algebra(&BianchiType::Two).unwrap();
    out.push((g.clone(), nine));
    out.push((g.clone(), two));
    out
}

#[test]
fn duality_preserves_profile_invariants() {
    for entry in catalog_entries() {
        let t = catalog_triple(entry.label, &sample_params(entry.label)).unwrap();
        let d = build_double(&t).unwrap();
        let dd = build_double(&dualize(&t)).unwrap();
        assert_eq!(
            d.algebra().killing_signature(),
            dd.algebra().killing_signature(),
            "{}",
            entry.label
        );
        assert_eq!(d.algebra().series_profile(), dd.algebra().series_profile());
    }
}

#[test]
fn witnesses_compose_invert_and_transport_the_killing_form() {
    use drinfeld_lab::isomorph::{catalog_iso, catalog_iso_pairs};
    for (from, to) in catalog_iso_pairs() {
        let params = sample_params(drinfeld_lab::manin::resolve_label_alias(from));
        let c = catalog_iso(from, to, &params).unwrap();
        // inversion
        let inv = c.invert().unwrap();
        assert!(inv.verify().unwrap().is_valid(), "{from} -> {to} inverse fails");
        // round trip composes to a self-witness
        let round = c.compose(&inv);
        assert!(round.verify().unwrap().is_valid());
        // Killing transport: C K_d Cᵀ = K_d'
        let kd = build_double(&c.from).unwrap().algebra().killing_gram();
        let kd2 = build_double(&c.to).unwrap().algebra().killing_gram();
        assert_eq!(c.matrix.mul(&kd).mul(&c.matrix.transpose()), kd2);
    }
    // a chained composition across one class
    let params = Params::with_b(rint(1));
    let c1 = catalog_iso("(9|5|b)", "(8|5.ii|b)", &params).unwrap();
    let c2 = catalog_iso("(9|5|b)", "(7_0|5.ii|b)", &params).unwrap();
    let chained = c1.invert().unwrap().compose(&c2);
    assert_eq!(chained.from.label(), "(8|5.ii|b)");
    assert_eq!(chained.to.label(), "(7_0|5.ii|b)");
    assert!(chained.verify().unwrap().is_valid());
}

#[test]
fn parse_emit_round_trip_over_the_full_catalog() {
    use drinfeld_lab::specio::{parse_algebra, triple_to_lalg};
    for entry in catalog_entries() {
        let t = catalog_triple(entry.label, &sample_params(entry.label)).unwrap();
        let text = triple_to_lalg(&t);
        let doc = parse_algebra(&text).unwrap_or_else(|e| panic!("{}: {e}", entry.label));
        let alg = doc.to_lie_algebra();
        assert_eq!(&alg, build_double(&t).unwrap().algebra(), "{}", entry.label);
        assert_eq!(text, triple_to_lalg(&t), "{}: emission is not stable", entry.label);
    }
}

#[test]
fn profiles_are_equal_for_both_decompositions_of_one_double() {
    // spot checks beyond signature/series: the full profile comparison the
    // classification uses treats a triple and its dual as the same double
    for label in ["(9|5|b)", "(7_0|4|b)", "(2|2.i)"] {
        let t = catalog_triple(label, &sample_params(label)).unwrap();
        let p = profile_of_double(&build_double(&t).unwrap()).unwrap();
        let q = profile_of_double(&build_double(&dualize(&t)).unwrap()).unwrap();
        assert_eq!(
            drinfeld_lab::isomorph::separating_invariant(&p, &q),
            None,
            "{label}: dual separated from itself"
        );
    }
}

proptest! {
    #[test]
    fn parser_never_panics_on_arbitrary_input(text in "[ -~\\n]{0,120}") {
        // errors are fine; panics are not
        let _ = drinfeld_lab::specio::parse_algebra(&text);
    }

    #[test]
    fn scalar_text_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..1_000_000) {
        let r = Rat::new(n.into(), d.into());
        let text = fmt_rat(&r);
        prop_assert!(!text.contains('.'));
        prop_assert_eq!(parse_rat(&text).unwrap(), r);
    }

    #[test]
    fn signature_is_congruence_invariant(seed in 0u64..500) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2usize..=5);
        let raw = random_matrix(&mut rng, n);
        let sym = raw.add(&raw.transpose());
        let p = random_invertible(&mut rng, n);
        let moved = p.transpose().mul(&sym).mul(&p);
        prop_assert_eq!(signature(&moved).unwrap(), signature(&sym).unwrap());
    }

    #[test]
    fn char_poly_is_similarity_invariant(seed in 0u64..200) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2usize..=4);
        let m = random_matrix(&mut rng, n);
        let p = random_invertible(&mut rng, n);
        let conj = p.inverse().unwrap().mul(&m).mul(&p);
        prop_assert_eq!(conj.char_poly().unwrap(), m.char_poly().unwrap());
    }

    #[test]
    fn rank_plus_nullity_is_the_column_count(seed in 0u64..200) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows = rng.gen_range(1usize..=5);
        let cols = rng.gen_range(1usize..=5);
        let mut m = Mat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = rint(rng.gen_range(-2i64..=2));
            }
        }
        prop_assert_eq!(m.rank() + m.nullspace().len(), cols);
    }
}
