//! Signature of the bilinear form restricted to the center.

use crate::exactmath::{signature, Mat};
use crate::manin::DoubleAlgebra;

use super::InvariantError;

/// Signature (p, n, z) of ⟨·,·⟩ on Z(𝒟); (0,0,0) for a trivial center.
pub fn center_form_signature(d: &DoubleAlgebra) -> Result<(usize, usize, usize), InvariantError> {
    let center = d.algebra().center();
    let basis = center.basis_vectors();
    let m = basis.len();
    if m == 0 {
        return Ok((0, 0, 0));
    }
    let mut gram = Mat::zero(m, m);
    for i in 0..m {
        for j in 0..m {
            gram[(i, j)] = d.pair(&basis[i], &basis[j]);
        }
    }
    Ok(signature(&gram)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rint;
    use crate::manin::{build_double, catalog_triple, Params};

    fn sig_of(label: &str) -> (usize, usize, usize) {
        let t = catalog_triple(label, &Params::none()).unwrap();
        center_form_signature(&build_double(&t).unwrap()).unwrap()
    }

    #[test]
    fn heisenberg_pair_centers_have_opposite_signatures() {
        assert_eq!(sig_of("(2|2.i)"), (0, 1, 2));
        assert_eq!(sig_of("(2|2.ii)"), (1, 0, 2));
    }

    #[test]
    fn semisimple_double_has_trivial_center() {
        let t = catalog_triple("(9|5|b)", &Params::with_b(rint(1))).unwrap();
        assert_eq!(center_form_signature(&build_double(&t).unwrap()).unwrap(), (0, 0, 0));
    }
}
