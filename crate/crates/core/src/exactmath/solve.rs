//! A small exact solver for the polynomial systems produced by the
//! subalgebra ansatz machinery.
//!
//! Systems here have at most [`MAX_VARS`](super::mpoly::MAX_VARS) unknowns
//! and low degree. The solver triangularizes by two complete moves: solving a
//! variable that occurs linearly with a nonzero constant coefficient, and
//! branching over the rational roots of an equation that involves a single
//! variable (the rational-root theorem finds all of them, so an equation with
//! no rational roots certifies infeasibility over ℚ). When neither move
//! applies the solver reports the system as undecided rather than guessing.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

use super::mpoly::{MPoly, MAX_VARS};
use super::scalar::Rat;

/// One solution family of a system: fixed values, eliminated expressions, or
/// free variables.
#[derive(Clone, Debug)]
pub struct Solution {
    pub bindings: Vec<Binding>,
}

#[derive(Clone, Debug)]
pub enum Binding {
    Fixed(Rat),
    /// Determined by the other variables through this expression.
    Expr(MPoly),
    Free,
}

/// Result of [`solve_system`].
#[derive(Clone, Debug)]
pub enum SolveOutcome {
    /// No rational solutions exist.
    Infeasible,
    /// The complete set of rational solutions, as a finite union of families.
    Solutions(Vec<Solution>),
    /// The solver's moves did not apply; nothing is claimed.
    Undecided,
}

impl Solution {
    pub fn free_vars(&self) -> Vec<usize> {
        self.bindings
            .iter()
            .enumerate()
            .filter_map(|(i, b)| matches!(b, Binding::Free).then_some(i))
            .collect()
    }

    /// Resolves all bindings given values for the free variables. Returns
    /// `None` if a required free value is missing.
    pub fn instantiate(&self, frees: &BTreeMap<usize, Rat>) -> Option<Vec<Rat>> {
        let n = self.bindings.len();
        let mut values: Vec<Option<Rat>> = vec![None; n];
        for (i, b) in self.bindings.iter().enumerate() {
            match b {
                Binding::Fixed(r) => values[i] = Some(r.clone()),
                Binding::Free => values[i] = Some(frees.get(&i)?.clone()),
                Binding::Expr(_) => {}
            }
        }
        // expressions may chain; resolve to a fixpoint
        for _ in 0..n {
            for (i, b) in self.bindings.iter().enumerate() {
                if values[i].is_some() {
                    continue;
                }
                if let Binding::Expr(e) = b {
                    if e.vars().iter().all(|&v| values[v].is_some()) {
                        let vals: Vec<Rat> = (0..MAX_VARS)
                            .map(|v| values.get(v).and_then(Clone::clone).unwrap_or_else(Rat::zero))
                            .collect();
                        values[i] = Some(e.eval(&vals));
                    }
                }
            }
        }
        values.into_iter().collect()
    }
}

/// Solves `polys = 0` in the first `nvars` variables.
pub fn solve_system(polys: &[MPoly], nvars: usize) -> SolveOutcome {
    assert!(nvars <= MAX_VARS);
    let active: Vec<bool> = (0..nvars).map(|_| true).collect();
    solve_rec(polys.to_vec(), active, nvars, 0)
}

fn solve_rec(polys: Vec<MPoly>, active: Vec<bool>, nvars: usize, depth: usize) -> SolveOutcome {
    if depth > 2 * MAX_VARS {
        return SolveOutcome::Undecided;
    }
    let mut sys: Vec<MPoly> = Vec::new();
    for p in polys {
        if let Some(c) = p.as_constant() {
            if !c.is_zero() {
                return SolveOutcome::Infeasible;
            }
        } else {
            sys.push(p);
        }
    }
    if sys.is_empty() {
        let bindings = (0..nvars)
            .map(|v| if active[v] { Binding::Free } else { Binding::Fixed(Rat::zero()) })
            .collect();
        return SolveOutcome::Solutions(vec![Solution { bindings }]);
    }

    // move 1: a variable occurring linearly with a constant coefficient.
    // Each candidate move is complete on its own, so the first decisive
    // result is the answer; an undecided sub-solve just means trying the
    // next elimination order.
    for (pi, p) in sys.iter().enumerate() {
        for v in p.vars() {
            if p.degree_in(v) != 1 {
                continue;
            }
            let coeffs = p.coeffs_in(v);
            let Some(c1) = coeffs[1].as_constant() else { continue };
            if c1.is_zero() {
                continue;
            }
            let expr = coeffs[0].scale(&(-Rat::from_integer(1.into()) / c1));
            let mut rest: Vec<MPoly> = Vec::new();
            for (qi, q) in sys.iter().enumerate() {
                if qi != pi {
                    rest.push(q.substitute(v, &expr));
                }
            }
            let mut sub_active = active.clone();
            sub_active[v] = false;
            match solve_rec(rest, sub_active, nvars, depth + 1) {
                SolveOutcome::Solutions(mut sols) => {
                    for s in &mut sols {
                        s.bindings[v] = Binding::Expr(expr.clone());
                    }
                    return SolveOutcome::Solutions(sols);
                }
                SolveOutcome::Infeasible => return SolveOutcome::Infeasible,
                SolveOutcome::Undecided => {}
            }
        }
    }

    // move 1b: a sign-definite equation Σ c_i·x_i^{2k_i} = 0 with all
    // coefficients of one sign forces every participating variable to zero
    // (complete over ℝ, a fortiori over ℚ)
    for p in &sys {
        if let Some(vars) = definite_square_vars(p) {
            let zero = MPoly::constant(Rat::zero());
            let mut rest: Vec<MPoly> = sys.clone();
            for q in &mut rest {
                for &v in &vars {
                    *q = q.substitute(v, &zero);
                }
            }
            let mut sub_active = active.clone();
            for &v in &vars {
                sub_active[v] = false;
            }
            return match solve_rec(rest, sub_active, nvars, depth + 1) {
                SolveOutcome::Solutions(mut sols) => {
                    for s in &mut sols {
                        for &v in &vars {
                            s.bindings[v] = Binding::Fixed(Rat::zero());
                        }
                    }
                    SolveOutcome::Solutions(sols)
                }
                other => other,
            };
        }
    }

    // move 2: an equation in a single variable; branch over rational roots
    'candidates: for (pi, p) in sys.iter().enumerate() {
        let vars = p.vars();
        if vars.len() != 1 {
            continue;
        }
        let v = vars[0];
        let coeffs: Vec<Rat> = p
            .coeffs_in(v)
            .iter()
            .map(|c| c.as_constant().expect("univariate coefficients are constants"))
            .collect();
        let Some(roots) = rational_roots(&coeffs) else { continue };
        if roots.is_empty() {
            return SolveOutcome::Infeasible;
        }
        let mut all = Vec::new();
        for r in roots {
            let value = MPoly::constant(r.clone());
            let mut rest: Vec<MPoly> = Vec::new();
            for (qi, q) in sys.iter().enumerate() {
                if qi != pi {
                    rest.push(q.substitute(v, &value));
                }
            }
            let mut sub_active = active.clone();
            sub_active[v] = false;
            match solve_rec(rest, sub_active, nvars, depth + 1) {
                SolveOutcome::Solutions(mut sols) => {
                    for s in &mut sols {
                        s.bindings[v] = Binding::Fixed(r.clone());
                    }
                    all.extend(sols);
                }
                SolveOutcome::Infeasible => {}
                SolveOutcome::Undecided => continue 'candidates,
            }
        }
        return if all.is_empty() { SolveOutcome::Infeasible } else { SolveOutcome::Solutions(all) };
    }

    SolveOutcome::Undecided
}

/// Recognizes Σ c_i·x_i^{2k_i} with every c_i of the same sign and no other
/// terms; such a polynomial vanishes only where each x_i does.
fn definite_square_vars(p: &MPoly) -> Option<Vec<usize>> {
    let vars = p.vars();
    if vars.len() < 2 {
        return None;
    }
    let mut sign = 0i8;
    let mut seen = Vec::new();
    for v in &vars {
        for (k, coeff) in p.coeffs_in(*v).iter().enumerate() {
            if k == 0 || coeff.is_zero() {
                continue;
            }
            // each term must be a pure even power of a single variable
            let c = coeff.as_constant()?;
            if k % 2 != 0 {
                return None;
            }
            let s = if c.is_positive() { 1 } else { -1 };
            if sign == 0 {
                sign = s;
            } else if sign != s {
                return None;
            }
            if !seen.contains(v) {
                seen.push(*v);
            }
        }
    }
    let constant_part = {
        let mut q = p.clone();
        for v in &vars {
            q = q.substitute(*v, &MPoly::constant(Rat::zero()));
        }
        q
    };
    if !constant_part.is_zero() {
        return None;
    }
    Some(seen)
}

/// All rational roots of a univariate polynomial with rational coefficients
/// (lowest degree first). Returns `None` when the integer divisor enumeration
/// would be too large to finish.
pub fn rational_roots(coeffs: &[Rat]) -> Option<Vec<Rat>> {
    let mut cs: Vec<Rat> = coeffs.to_vec();
    while cs.last().is_some_and(Zero::is_zero) {
        cs.pop();
    }
    if cs.is_empty() {
        // identically zero: every value is a root; callers treat this
        // separately, so report it as no isolated roots
        return Some(Vec::new());
    }
    if cs.len() == 1 {
        return Some(Vec::new());
    }
    // clear denominators to integer coefficients
    let mut denom = BigInt::from(1);
    for c in &cs {
        denom = num_integer::lcm(denom, c.denom().clone());
    }
    let ints: Vec<BigInt> =
        cs.iter().map(|c| (c.clone() * Rat::from_integer(denom.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    // factor out zero roots
    let k = ints.iter().take_while(|c| c.is_zero()).count();
    if k > 0 {
        roots.push(Rat::zero());
    }
    let ints = &ints[k..];
    if ints.len() <= 1 {
        return Some(roots);
    }
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let p_divs = divisors(&a0)?;
    let q_divs = divisors(&an)?;
    let eval = |x: &Rat| -> Rat {
        ints.iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x.clone() + Rat::from_integer(c.clone()))
    };
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i64, -1] {
                let cand = Rat::new(p.clone() * BigInt::from(sign), q.clone());
                if eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    if n.is_zero() {
        return Some(vec![BigInt::from(1)]);
    }
    if n > &BigInt::from(1_000_000_000_000i64) {
        return None;
    }
    let n = n.clone();
    let mut divs = Vec::new();
    let mut d = BigInt::from(1);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            divs.push(d.clone());
            divs.push(&n / &d);
        }
        d += BigInt::from(1);
    }
    Some(divs)
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{rat, rint};
    use super::*;

    #[test]
    fn roots_of_small_polynomials() {
        // 2x² − x − 1 = (2x + 1)(x − 1)
        let roots = rational_roots(&[rint(-1), rint(-1), rint(2)]).unwrap();
        assert_eq!(roots, vec![rat(-1, 2), rint(1)]);
        // x² + 1: no rational roots
        assert!(rational_roots(&[rint(1), rint(0), rint(1)]).unwrap().is_empty());
        // x³ − x = x(x−1)(x+1)
        let roots = rational_roots(&[rint(0), rint(-1), rint(0), rint(1)]).unwrap();
        assert_eq!(roots, vec![rint(-1), rint(0), rint(1)]);
    }

    #[test]
    fn linear_elimination_chain() {
        // x + y − 3 = 0, x − y − 1 = 0  →  x = 2, y = 1
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let p1 = x.add(&y).sub(&MPoly::constant(rint(3)));
        let p2 = x.sub(&y).sub(&MPoly::constant(rint(1)));
        let SolveOutcome::Solutions(sols) = solve_system(&[p1, p2], 2) else {
            panic!("expected solutions");
        };
        assert_eq!(sols.len(), 1);
        let vals = sols[0].instantiate(&BTreeMap::new()).unwrap();
        assert_eq!(vals[0], rint(2));
        assert_eq!(vals[1], rint(1));
    }

    #[test]
    fn branching_over_roots_with_free_remainder() {
        // u² = 0 with v unconstrained → family u = 0, v free
        let u = MPoly::var(0);
        let sq = u.mul(&u);
        let SolveOutcome::Solutions(sols) = solve_system(&[sq], 2) else {
            panic!("expected solutions");
        };
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].free_vars(), vec![1]);
        let vals =
            sols[0].instantiate(&[(1usize, rint(7))].into_iter().collect()).unwrap();
        assert_eq!(vals[0], rint(0));
        assert_eq!(vals[1], rint(7));
    }

    #[test]
    fn infeasible_systems() {
        // x² + 1 = 0 has no rational solutions
        let x = MPoly::var(0);
        let p = x.mul(&x).add(&MPoly::constant(rint(1)));
        assert!(matches!(solve_system(&[p], 1), SolveOutcome::Infeasible));
        // constant contradiction
        let c = MPoly::constant(rint(5));
        assert!(matches!(solve_system(&[c], 1), SolveOutcome::Infeasible));
    }
}
