//! The eleven Bianchi normal forms of 3-dimensional real Lie algebras and
//! an exact classifier.
//!
//! Types 1–5, 6_a, 6_0, 7_a, 7_0, 8, 9 in the usual conventions:
//! parameter a > 0 throughout, a ≠ 1 for 6_a. The classifier recovers the
//! type from isomorphism-invariant data: the dimension of the derived
//! algebra, nilpotency, the eigenvalue structure of ad on the derived
//! algebra, and the Killing signature for the simple types.

use num_traits::{One, Signed, Zero};

use crate::exactmath::{fmt_rat, rat_sqrt, rint, Mat, Rat};

use super::algebra::LieAlgebra;
use super::subspace::Subspace;
use super::LieError;

/// A Bianchi isomorphism class, with the exact parameter where one exists.
#[derive(Clone, Debug, PartialEq)]
pub enum BianchiType {
    One,
    Two,
    Three,
    Four,
    Five,
    SixA(Rat),
    Six0,
    SevenA(Rat),
    Seven0,
    Eight,
    Nine,
}

impl std::fmt::Display for BianchiType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BianchiType::One => write!(f, "1"),
            BianchiType::Two => write!(f, "2"),
            BianchiType::Three => write!(f, "3"),
            BianchiType::Four => write!(f, "4"),
            BianchiType::Five => write!(f, "5"),
            BianchiType::SixA(a) => write!(f, "6_{}", fmt_rat(a)),
            BianchiType::Six0 => write!(f, "6_0"),
            BianchiType::SevenA(a) => write!(f, "7_{}", fmt_rat(a)),
            BianchiType::Seven0 => write!(f, "7_0"),
            BianchiType::Eight => write!(f, "8"),
            BianchiType::Nine => write!(f, "9"),
        }
    }
}

/// Standard structure constants of a Bianchi type. Rejects parameters
/// outside the convention (a > 0, and a ≠ 1 for 6_a).
pub fn bianchi_algebra(t: &BianchiType) -> Result<LieAlgebra, LieError> {
    let one = Rat::one;
    let m1 = || -Rat::one();
    let br = |list: Vec<((usize, usize), Vec<(Rat, usize)>)>| LieAlgebra::from_brackets(3, &list);
    let alg = match t {
        BianchiType::One => LieAlgebra::abelian(3),
        BianchiType::Two => br(vec![((1, 2), vec![(one(), 0)])]),
        BianchiType::Three => br(vec![
            ((0, 1), vec![(m1(), 1), (m1(), 2)]),
            ((0, 2), vec![(m1(), 1), (m1(), 2)]),
        ]),
        BianchiType::Four => {
            br(vec![((0, 1), vec![(m1(), 1), (one(), 2)]), ((0, 2), vec![(m1(), 2)])])
        }
        BianchiType::Five => br(vec![((0, 1), vec![(m1(), 1)]), ((0, 2), vec![(m1(), 2)])]),
        BianchiType::SixA(a) => {
            if !a.is_positive() || a.is_one() {
                return Err(LieError::ParamDomain(format!(
                    "type 6_a needs a > 0, a ≠ 1, got {}",
                    fmt_rat(a)
                )));
            }
            br(vec![
                ((0, 1), vec![(-a.clone(), 1), (m1(), 2)]),
                ((0, 2), vec![(m1(), 1), (-a.clone(), 2)]),
            ])
        }
        BianchiType::Six0 => br(vec![((1, 2), vec![(one(), 0)]), ((2, 0), vec![(m1(), 1)])]),
        BianchiType::SevenA(a) => {
            if !a.is_positive() {
                return Err(LieError::ParamDomain(format!(
                    "type 7_a needs a > 0, got {}",
                    fmt_rat(a)
                )));
            }
            br(vec![
                ((0, 1), vec![(-a.clone(), 1), (one(), 2)]),
                ((0, 2), vec![(m1(), 1), (-a.clone(), 2)]),
            ])
        }
        BianchiType::Seven0 => br(vec![((1, 2), vec![(one(), 0)]), ((2, 0), vec![(one(), 1)])]),
        BianchiType::Eight => br(vec![
            ((0, 1), vec![(m1(), 2)]),
            ((1, 2), vec![(one(), 0)]),
            ((2, 0), vec![(one(), 1)]),
        ]),
        BianchiType::Nine => br(vec![
            ((0, 1), vec![(one(), 2)]),
            ((1, 2), vec![(one(), 0)]),
            ((2, 0), vec![(one(), 1)]),
        ]),
    };
    Ok(alg)
}

/// Classifies a 3-dimensional algebra into its Bianchi type, recovering the
/// exact rational parameter for 6_a and 7_a.
pub fn bianchi_classify(alg: &LieAlgebra) -> Result<BianchiType, LieError> {
    if alg.dim() != 3 {
        return Err(LieError::NotThreeDimensional(alg.dim()));
    }
    let derived = alg.derived_subalgebra();
    match derived.dim() {
        0 => Ok(BianchiType::One),
        1 => {
            if alg.center().contains(&derived) {
                Ok(BianchiType::Two)
            } else {
                Ok(BianchiType::Three)
            }
        }
        2 => classify_solvable_rank_two(alg, &derived),
        3 => {
            // simple: so(3) has definite Killing form, sl(2,ℝ) does not
            let (p, n, z) = alg.killing_signature();
            match (p, n, z) {
                (0, 3, 0) => Ok(BianchiType::Nine),
                (2, 1, 0) => Ok(BianchiType::Eight),
                _ => Err(LieError::Internal(format!(
                    "unexpected Killing signature ({p},{n},{z}) for a simple 3-dim algebra"
                ))),
            }
        }
        _ => unreachable!(),
    }
}

fn classify_solvable_rank_two(alg: &LieAlgebra, n: &Subspace) -> Result<BianchiType, LieError> {
    if alg.bracket_span(n, n).dim() != 0 {
        return Err(LieError::Internal(
            "2-dimensional derived algebra of a 3-dim algebra must be abelian".into(),
        ));
    }
    // any vector outside the derived algebra acts irreducibly enough
    let outside = n.standard_complement();
    let e = {
        let mut v = vec![Rat::zero(); 3];
        v[outside[0]] = Rat::one();
        v
    };
    // matrix of ad(e) restricted to the derived algebra, in its basis
    let basis = n.basis_vectors();
    let mut a = Mat::zero(2, 2);
    for (j, b) in basis.iter().enumerate() {
        let w = alg.bracket(&e, b);
        let coords = n
            .coordinates(&w)
            .ok_or_else(|| LieError::Internal("derived algebra is not ad-invariant".into()))?;
        for i in 0..2 {
            a[(i, j)] = coords[i].clone();
        }
    }
    let tr = a[(0, 0)].clone() + a[(1, 1)].clone();
    let det = a.det();
    if det.is_zero() {
        return Err(LieError::Internal("ad must act invertibly on the derived algebra".into()));
    }
    let disc = tr.clone() * tr.clone() - rint(4) * det.clone();
    if disc.is_zero() {
        // equal eigenvalues: scalar action is type 5, a Jordan block type 4
        let half_tr = tr / rint(2);
        let scalar = Mat::diag(vec![half_tr.clone(), half_tr]);
        if a == scalar {
            Ok(BianchiType::Five)
        } else {
            Ok(BianchiType::Four)
        }
    } else if disc.is_positive() {
        let root = rat_sqrt(&disc)
            .ok_or_else(|| LieError::IrrationalParameter(fmt_rat(&disc)))?;
        let l1 = (tr.clone() + root.clone()) / rint(2);
        let l2 = (tr - root) / rint(2);
        // normalize the eigenvalue ratio into [−1, 1); it is invariant under
        // rescaling e and swapping the eigenvalues
        let (big, small) = if l1.abs() >= l2.abs() { (l1, l2) } else { (l2, l1) };
        let r = small / big;
        if r == -Rat::one() {
            Ok(BianchiType::Six0)
        } else {
            let a = (Rat::one() + r.clone()) / (Rat::one() - r);
            Ok(BianchiType::SixA(a))
        }
    } else {
        // complex pair μ ± νi: μ = 0 is the isometry algebra 7_0, otherwise
        // the parameter is |μ/ν|
        if tr.is_zero() {
            Ok(BianchiType::Seven0)
        } else {
            let nu_sq = -disc / rint(4);
            let nu = rat_sqrt(&nu_sq)
                .ok_or_else(|| LieError::IrrationalParameter(fmt_rat(&nu_sq)))?;
            let mu = tr / rint(2);
            Ok(BianchiType::SevenA((mu / nu).abs()))
        }
    }
}
