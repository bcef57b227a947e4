//! Multivariate polynomials in a handful of variables, used by the
//! subalgebra ansatz solvers. Exponent vectors are kept short because every
//! ansatz in this crate has at most four unknowns.

use num_traits::Zero;
use std::collections::BTreeMap;

use super::scalar::{fmt_rat, Rat};

/// Maximum number of variables an ansatz system may use.
pub const MAX_VARS: usize = 4;

type Expo = [u8; MAX_VARS];

/// A polynomial in up to [`MAX_VARS`] variables with rational coefficients.
#[derive(Clone, PartialEq, Default)]
pub struct MPoly {
    terms: BTreeMap<Expo, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert([0; MAX_VARS], c);
        }
        p
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS);
        let mut e = [0u8; MAX_VARS];
        e[i] = 1;
        let mut p = Self::zero();
        p.terms.insert(e, Rat::from_integer(1.into()));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&[0; MAX_VARS]).cloned(),
            _ => None,
        }
    }

    fn insert(&mut self, e: Expo, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.terms.insert(*e, -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut out = Self::zero();
        if s.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(*e, c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for k in 0..MAX_VARS {
                    e[k] += eb[k];
                }
                out.insert(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn degree_in(&self, v: usize) -> u8 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    /// Variables that actually occur.
    pub fn vars(&self) -> Vec<usize> {
        (0..MAX_VARS).filter(|&v| self.degree_in(v) > 0).collect()
    }

    /// Coefficients of this polynomial viewed as univariate in `v`; each
    /// coefficient is a polynomial in the remaining variables.
    pub fn coeffs_in(&self, v: usize) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![MPoly::zero(); d + 1];
        for (e, c) in &self.terms {
            let mut rest = *e;
            let k = rest[v] as usize;
            rest[v] = 0;
            out[k].insert(rest, c.clone());
        }
        out
    }

    /// Substitutes variable `v := value` (a polynomial), eliminating it.
    pub fn substitute(&self, v: usize, value: &MPoly) -> MPoly {
        let coeffs = self.coeffs_in(v);
        let mut out = MPoly::zero();
        let mut power = MPoly::constant(Rat::from_integer(1.into()));
        for c in coeffs {
            out = out.add(&c.mul(&power));
            power = power.mul(value);
        }
        out
    }

    pub fn eval(&self, values: &[Rat]) -> Rat {
        let mut total = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term *= values[v].clone();
                }
            }
            total += term;
        }
        total
    }
}

impl std::fmt::Debug for MPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["t0", "t1", "t2", "t3"];
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", fmt_rat(c))?;
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*{}", names[v])?,
                    _ => write!(f, "*{}^{}", names[v], k)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{rat, rint};
    use super::*;

    #[test]
    fn substitution_eliminates_a_variable() {
        // p = x² + xy − 2, substitute x := y + 1
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let p = x.mul(&x).add(&x.mul(&y)).sub(&MPoly::constant(rint(2)));
        let q = p.substitute(0, &y.add(&MPoly::constant(rint(1))));
        // (y+1)² + (y+1)y − 2 = 2y² + 3y − 1
        let expect = y
            .mul(&y)
            .scale(&rint(2))
            .add(&y.scale(&rint(3)))
            .sub(&MPoly::constant(rint(1)));
        assert_eq!(q, expect);
        assert_eq!(q.eval(&[rint(0), rat(1, 2), rint(0), rint(0)]), rint(1));
    }
}
