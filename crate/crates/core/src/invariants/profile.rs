//! Assembly of the full invariant profile of a double.

use crate::liecore::SeriesProfile;
use crate::manin::{build_double, DoubleAlgebra, ManinTriple};

use super::center_sig::center_form_signature;
use super::levi_class::{levi_restriction_class, LeviRestrictionClass};
use super::mia::{mia_census, MiaCensus};
use super::split::{semisimple_split_coeffs, SplitInvariant};
use super::InvariantError;

/// Everything the classification uses about one double. Refined invariants
/// are `None` exactly when their precondition fails (split coefficients need
/// a nondegenerate Killing form; the Levi restriction needs a non-semisimple,
/// non-solvable double with 3-dimensional abelian radical; the census needs
/// a 5-dimensional commutant).
#[derive(Clone, Debug)]
pub struct InvariantProfile {
    pub label: String,
    pub killing: (usize, usize, usize),
    pub series: SeriesProfile,
    pub split: Option<SplitInvariant>,
    pub levi: Option<LeviRestrictionClass>,
    pub center_signature: (usize, usize, usize),
    pub mia: Option<MiaCensus>,
}

impl InvariantProfile {
    /// The coarse block: Killing signature plus series dimensions.
    pub fn coarse(&self) -> ((usize, usize, usize), SeriesProfile) {
        (self.killing, self.series)
    }

    /// Table-style tuple (signature; dim[𝒟,𝒟]; dim 𝒟²,𝒟³; dim 𝒟₂,𝒟₃).
    pub fn table_row(&self) -> ((usize, usize, usize), usize, (usize, usize), (usize, usize)) {
        (self.killing, self.series.commutant, self.series.upper, self.series.lower)
    }
}

/// Computes the profile of an already-built double.
pub fn profile_of_double(d: &DoubleAlgebra) -> Result<InvariantProfile, InvariantError> {
    let alg = d.algebra();
    let killing = alg.killing_signature();
    let series = alg.series_profile();
    let split = match semisimple_split_coeffs(d) {
        Ok(s) => Some(s),
        Err(InvariantError::NotApplicable(_)) => None,
        Err(e) => return Err(e),
    };
    let levi = match levi_restriction_class(d) {
        Ok(c) => Some(c),
        Err(InvariantError::NotApplicable(_)) => None,
        Err(e) => return Err(e),
    };
    let center_signature = center_form_signature(d)?;
    let mia = if series.commutant == 5 { Some(mia_census(d)?) } else { None };
    Ok(InvariantProfile {
        label: d.source().display_label(),
        killing,
        series,
        split,
        levi,
        center_signature,
        mia,
    })
}

/// Builds the double of `t` and computes its profile.
pub fn invariant_profile(t: &ManinTriple) -> Result<InvariantProfile, InvariantError> {
    let d = build_double(t)
        .map_err(|e| InvariantError::Internal(format!("triple does not build: {e}")))?;
    profile_of_double(&d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rint};
    use crate::manin::{catalog_triple, Params};

    fn profile(label: &str, params: Params) -> InvariantProfile {
        invariant_profile(&catalog_triple(label, &params).unwrap()).unwrap()
    }

    #[test]
    fn profile_of_the_simple_double() {
        let p = profile("(9|5|b)", Params::with_b(rint(1)));
        assert_eq!(p.killing, (3, 3, 0));
        assert_eq!(p.series.commutant, 6);
        assert_eq!(p.series.upper, (6, 6));
        assert_eq!(p.series.lower, (6, 6));
        assert!(p.split.is_some());
        assert!(p.levi.is_none());
        assert!(p.mia.is_none());
    }

    #[test]
    fn profile_of_a_solvable_double() {
        let p = profile("(7_a|1)", Params::with_a(rint(1)));
        assert_eq!(p.killing, (0, 0, 6));
        assert_eq!(p.series.commutant, 5);
        assert_eq!(p.series.upper, (5, 5));
        assert_eq!(p.series.lower, (1, 0));
        assert!(p.split.is_none());
        assert!(p.mia.is_some());
    }

    #[test]
    fn profile_of_the_mixed_block() {
        let p = profile("(3|3.i)", Params::with_b(rat(1, 2)));
        assert_eq!(p.killing, (2, 1, 3));
        assert_eq!(p.series.commutant, 3);
        assert_eq!(p.series.upper, (3, 3));
        assert_eq!(p.series.lower, (3, 3));
        // B|_S = −1/(16b)·K_S distinguishes the scaling parameter
        assert_eq!(p.levi, Some(LeviRestrictionClass::Proportional(rat(-1, 8))));
    }
}
