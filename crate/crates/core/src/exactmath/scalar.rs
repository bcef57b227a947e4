//! Exact scalars: rationals and Gaussian rationals.
//!
//! `Rat` is a reduced fraction of arbitrary-precision integers with positive
//! denominator; both invariants are maintained by `num-rational` after every
//! operation. `GaussRat` adds an exact imaginary part, which is all the field
//! extension the complexified split-form criterion needs.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::ExactError;

/// Exact rational scalar.
pub type Rat = BigRational;

/// Exact Gaussian rational scalar (element of ℚ(i)).
pub type GaussRat = Complex<Rat>;

/// The rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The rational `n/1`.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The Gaussian rational `re + im·i`.
pub fn gauss(re: Rat, im: Rat) -> GaussRat {
    Complex::new(re, im)
}

/// Canonical decimal-free text form: `p` for integers, `p/q` otherwise,
/// with the sign on the numerator.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the canonical text form emitted by [`fmt_rat`]: an optionally
/// signed integer, or `p/q` with `q > 0` allowed in either sign position.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    let s = s.trim();
    let err = || ExactError::Parse(s.to_string());
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| err())?;
            Ok(Rat::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| err())?;
            let d: BigInt = den.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Exact square root of a nonnegative rational, when it exists in ℚ.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// The scalar operations the matrix code relies on. Implemented for [`Rat`]
/// and [`GaussRat`]; every operation is exact.
pub trait Field:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;
}

impl Field for Rat {
    fn from_int(n: i64) -> Self {
        rint(n)
    }
}

impl Field for GaussRat {
    fn from_int(n: i64) -> Self {
        Complex::new(rint(n), Rat::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-5", "2/3", "-7/4", "22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&r), s);
        }
        // non-canonical input still parses, emission canonicalizes
        assert_eq!(fmt_rat(&parse_rat("4/6").unwrap()), "2/3");
        assert_eq!(fmt_rat(&parse_rat("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_non_rationals() {
        for s in ["", "1.5", "a", "1/0", "1/2/3", "2 3"] {
            assert!(parse_rat(s).is_err(), "{s} should not parse");
        }
    }

    #[test]
    fn sqrt_of_perfect_squares() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-1, 1)), None);
        assert_eq!(rat_sqrt(&Rat::zero()), Some(Rat::zero()));
    }

    #[test]
    fn gaussian_arithmetic_is_exact() {
        let a = gauss(rat(1, 2), rat(1, 3));
        let b = gauss(rat(-1, 2), rat(2, 3));
        let prod = a.clone() * b.clone();
        // (1/2 + i/3)(-1/2 + 2i/3) = -1/4 - 2/9 + i(1/3 - 1/6)·... computed exactly
        assert_eq!(prod.re, rat(-1, 4) - rat(2, 9));
        assert_eq!(prod.im, rat(1, 3) - rat(1, 6));
        let q = a.clone() / b.clone();
        assert_eq!(q * b, a);
    }
}
