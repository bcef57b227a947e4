//! Bounded backtracking search for isomorphism witnesses.
//!
//! The search first compares invariant profiles: a difference certifies
//! non-isomorphism immediately. Otherwise it builds candidate matrices row
//! by row, enforcing the pairing condition incrementally, deriving rows that
//! the target bracket table determines from rows already placed, and
//! checking every fully-determined bracket condition before descending.
//! Exhausting the budget is inconclusive; the search never claims
//! non-isomorphism on its own.

use num_traits::{One, Zero};

use crate::exactmath::{rat, rint, Mat, Rat};
use crate::invariants::profile_of_double;
use crate::manin::DoubleAlgebra;

use super::theorem::separating_invariant;
use super::IsoError;

/// Result of a witness search.
#[derive(Clone, Debug)]
pub enum SearchOutcome {
    /// A verified witness matrix (rows = target basis in source basis).
    Found(Mat<Rat>),
    /// Profiles differ; the named invariant certifies non-isomorphism.
    Distinct(String),
    /// Budget exhausted without a verdict.
    NotFoundWithinBudget,
}

/// Default entry pool for branching rows.
pub fn default_entries() -> Vec<Rat> {
    vec![rint(1), rint(-1), rat(1, 2), rat(-1, 2), rint(2), rint(-2)]
}

/// Searches for a witness from `d` to `d2` within `budget` branching nodes,
/// drawing branched row entries from `entries`.
pub fn search_iso(
    d: &DoubleAlgebra,
    d2: &DoubleAlgebra,
    budget: usize,
    entries: &[Rat],
) -> Result<SearchOutcome, IsoError> {
    if budget == 0 {
        return Err(IsoError::BadBudget);
    }
    let p = profile_of_double(d)?;
    let q = profile_of_double(d2)?;
    if let Some(invariant) = separating_invariant(&p, &q) {
        return Ok(SearchOutcome::Distinct(invariant));
    }
    let mut state = SearchState {
        source: d,
        target: d2,
        rows: vec![None; 6],
        nodes: 0,
        budget,
        candidates: candidate_rows(entries),
    };
    match state.descend() {
        Some(m) => Ok(SearchOutcome::Found(m)),
        None if state.nodes >= state.budget => Ok(SearchOutcome::NotFoundWithinBudget),
        None => Ok(SearchOutcome::NotFoundWithinBudget),
    }
}

struct SearchState<'a> {
    source: &'a DoubleAlgebra,
    target: &'a DoubleAlgebra,
    rows: Vec<Option<Vec<Rat>>>,
    nodes: usize,
    budget: usize,
    candidates: Vec<Vec<Rat>>,
}

impl SearchState<'_> {
    fn descend(&mut self) -> Option<Mat<Rat>> {
        if self.nodes >= self.budget {
            return None;
        }
        let Some(next) = self.rows.iter().position(Option::is_none) else {
            return self.finish();
        };
        let saved = self.rows.clone();
        let mut found = None;
        for ci in 0..self.candidates.len() {
            self.nodes += 1;
            if self.nodes >= self.budget {
                break;
            }
            self.rows = saved.clone();
            let cand = self.candidates[ci].clone();
            if !self.place(next, cand) {
                continue;
            }
            if let Some(m) = self.descend() {
                found = Some(m);
                break;
            }
        }
        if found.is_none() {
            self.rows = saved;
        }
        found
    }

    /// Sets a row, propagates derived rows, and checks all constraints that
    /// are decidable with the rows known so far.
    fn place(&mut self, index: usize, row: Vec<Rat>) -> bool {
        if !self.pairing_ok(index, &row) {
            return false;
        }
        self.rows[index] = Some(row);
        if !self.brackets_ok() {
            return false;
        }
        // derive rows the target bracket table now determines
        loop {
            let mut progressed = false;
            for a in 0..6 {
                for b in a + 1..6 {
                    let (Some(ra), Some(rb)) = (&self.rows[a], &self.rows[b]) else { continue };
                    let coeffs: Vec<(usize, &Rat)> = (0..6)
                        .map(|c| (c, self.target.algebra().c(a, b, c)))
                        .filter(|(_, v)| !v.is_zero())
                        .collect();
                    let unknown: Vec<usize> =
                        coeffs.iter().filter(|(c, _)| self.rows[*c].is_none()).map(|(c, _)| *c).collect();
                    let [c] = unknown[..] else { continue };
                    let mut vec = self.source.algebra().bracket(ra, rb);
                    for (cc, coef) in &coeffs {
                        if *cc == c {
                            continue;
                        }
                        let rc = self.rows[*cc].as_ref().expect("known row");
                        for (slot, entry) in vec.iter_mut().zip(rc) {
                            *slot -= (*coef).clone() * entry.clone();
                        }
                    }
                    let inv = self.target.algebra().c(a, b, c);
                    let derived: Vec<Rat> = vec.into_iter().map(|x| x / inv.clone()).collect();
                    if derived.iter().all(Zero::is_zero) {
                        return false;
                    }
                    if !self.pairing_ok(c, &derived) {
                        return false;
                    }
                    self.rows[c] = Some(derived);
                    if !self.brackets_ok() {
                        return false;
                    }
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
        true
    }

    /// Pairing conditions of a new row against itself and all known rows.
    fn pairing_ok(&self, index: usize, row: &[Rat]) -> bool {
        let b = self.target.form();
        for (other, known) in self.rows.iter().enumerate() {
            let expected = &b[(index, other)];
            match known {
                Some(r) if self.source.pair(row, r) != *expected => return false,
                _ => {}
            }
        }
        self.source.pair(row, row) == b[(index, index)]
    }

    /// Bracket conditions for every pair whose equation is fully determined.
    fn brackets_ok(&self) -> bool {
        for a in 0..6 {
            for b in a + 1..6 {
                let (Some(ra), Some(rb)) = (&self.rows[a], &self.rows[b]) else { continue };
                let mut determined = true;
                let mut rhs = vec![Rat::zero(); 6];
                for c in 0..6 {
                    let coef = self.target.algebra().c(a, b, c);
                    if coef.is_zero() {
                        continue;
                    }
                    match &self.rows[c] {
                        Some(rc) => {
                            for (slot, entry) in rhs.iter_mut().zip(rc) {
                                *slot += coef.clone() * entry.clone();
                            }
                        }
                        None => {
                            determined = false;
                            break;
                        }
                    }
                }
                if determined && self.source.algebra().bracket(ra, rb) != rhs {
                    return false;
                }
            }
        }
        true
    }

    fn finish(&self) -> Option<Mat<Rat>> {
        let rows: Vec<Vec<Rat>> =
            self.rows.iter().map(|r| r.clone().expect("all rows placed")).collect();
        let m = Mat::from_rows(rows);
        if m.det().is_zero() {
            return None;
        }
        Some(m)
    }
}

/// All candidate rows with small support over the entry pool, standard basis
/// vectors first so identity witnesses surface immediately.
fn candidate_rows(entries: &[Rat]) -> Vec<Vec<Rat>> {
    let mut rows = Vec::new();
    for i in 0..6 {
        let mut v = vec![Rat::zero(); 6];
        v[i] = Rat::one();
        rows.push(v);
    }
    let nonzero: Vec<Rat> = entries.iter().filter(|e| !e.is_zero()).cloned().collect();
    // supports of size 1..=3
    for s1 in 0..6 {
        for e1 in &nonzero {
            let mut v = vec![Rat::zero(); 6];
            v[s1] = e1.clone();
            push_unique(&mut rows, v);
        }
    }
    for s1 in 0..6 {
        for s2 in s1 + 1..6 {
            for e1 in &nonzero {
                for e2 in &nonzero {
                    let mut v = vec![Rat::zero(); 6];
                    v[s1] = e1.clone();
                    v[s2] = e2.clone();
                    push_unique(&mut rows, v);
                }
            }
        }
    }
    for s1 in 0..6 {
        for s2 in s1 + 1..6 {
            for s3 in s2 + 1..6 {
                for e1 in &nonzero {
                    for e2 in &nonzero {
                        for e3 in &nonzero {
                            let mut v = vec![Rat::zero(); 6];
                            v[s1] = e1.clone();
                            v[s2] = e2.clone();
                            v[s3] = e3.clone();
                            push_unique(&mut rows, v);
                        }
                    }
                }
            }
        }
    }
    rows
}

fn push_unique(rows: &mut Vec<Vec<Rat>>, v: Vec<Rat>) {
    if !rows.contains(&v) {
        rows.push(v);
    }
}
