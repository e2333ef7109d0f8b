// SPDX-License-Identifier: Apache-2.0

//! A small DPLL solver for the propositional theories of positive programs.
//!
//! Variables are `0..n`; a literal is `(var, polarity)`. The search branches
//! on the lowest unassigned variable, trying `false` first, which makes the
//! first model found small and keeps the minimization loops short.

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Lit {
        Lit { var, positive: false }
    }
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Cnf {
    vars: usize,
    clauses: Vec<Vec<Lit>>,
}

enum Propagation {
    Conflict,
    Done,
}

impl Cnf {
    pub fn new(vars: usize) -> Cnf {
        Cnf {
            vars,
            clauses: Vec::new(),
        }
    }

    pub fn add(&mut self, clause: Vec<Lit>) {
        debug_assert!(clause.iter().all(|l| l.var < self.vars));
        self.clauses.push(clause);
    }

    /// A model extending `fixed`, if any.
    pub fn solve(&self, fixed: &[Option<bool>]) -> Option<Vec<bool>> {
        debug_assert_eq!(fixed.len(), self.vars);
        let mut assign = fixed.to_vec();
        if self.search(&mut assign) {
            Some(assign.into_iter().map(|v| v.unwrap_or(false)).collect())
        } else {
            None
        }
    }

    fn propagate(&self, assign: &mut [Option<bool>]) -> Propagation {
        loop {
            let mut changed = false;
            for c in &self.clauses {
                let mut open = None;
                let mut n_open = 0;
                let mut sat = false;
                for &l in c {
                    match assign[l.var] {
                        Some(v) if v == l.positive => {
                            sat = true;
                            break;
                        }
                        Some(_) => {}
                        None => {
                            n_open += 1;
                            open = Some(l);
                        }
                    }
                }
                if sat {
                    continue;
                }
                match (n_open, open) {
                    (0, _) => return Propagation::Conflict,
                    (1, Some(l)) => {
                        assign[l.var] = Some(l.positive);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return Propagation::Done;
            }
        }
    }

    fn search(&self, assign: &mut Vec<Option<bool>>) -> bool {
        if let Propagation::Conflict = self.propagate(assign) {
            return false;
        }
        let Some(var) = assign.iter().position(Option::is_none) else {
            return true;
        };
        for value in [false, true] {
            let mut next = assign.clone();
            next[var] = Some(value);
            if self.search(&mut next) {
                *assign = next;
                return true;
            }
        }
        false
    }
}

/// Shrinks a model of `cnf` to a subset-minimal one, keeping the variables
/// marked in `frozen` at their values in `m`.
pub(crate) fn minimize(cnf: &Cnf, mut m: Vec<bool>, frozen: &[bool]) -> Vec<bool> {
    while let Some(smaller) = smaller_model(cnf, &m, frozen) {
        m = smaller;
    }
    m
}

/// A model strictly below `m` (with `frozen` variables held fixed), if any.
pub(crate) fn smaller_model(cnf: &Cnf, m: &[bool], frozen: &[bool]) -> Option<Vec<bool>> {
    let mut c = cnf.clone();
    let mut fixed = vec![None; m.len()];
    let mut drop = Vec::new();
    for (v, &val) in m.iter().enumerate() {
        if !val || frozen[v] {
            fixed[v] = Some(val);
        } else {
            drop.push(Lit::neg(v));
        }
    }
    if drop.is_empty() {
        return None;
    }
    c.add(drop);
    c.solve(&fixed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(cnf: &Cnf) -> Vec<Vec<bool>> {
        (0u32..1 << cnf.vars)
            .map(|m| (0..cnf.vars).map(|v| m & (1 << v) != 0).collect::<Vec<_>>())
            .filter(|a| cnf.clauses.iter().all(|c| c.iter().any(|l| a[l.var] == l.positive)))
            .collect()
    }

    #[test]
    fn unsat_and_sat() {
        let mut c = Cnf::new(2);
        c.add(vec![Lit::pos(0)]);
        c.add(vec![Lit::neg(0), Lit::pos(1)]);
        assert_eq!(c.solve(&[None, None]), Some(vec![true, true]));
        c.add(vec![Lit::neg(1)]);
        assert_eq!(c.solve(&[None, None]), None);
        assert_eq!(Cnf::new(0).solve(&[]), Some(vec![]));
        let mut e = Cnf::new(1);
        e.add(vec![]);
        assert_eq!(e.solve(&[None]), None);
    }

    #[test]
    fn minimize_disjunction() {
        let mut c = Cnf::new(2);
        c.add(vec![Lit::pos(0), Lit::pos(1)]);
        let m = minimize(&c, vec![true, true], &[false, false]);
        assert_eq!(m.iter().filter(|&&b| b).count(), 1);
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn agrees_with_enumeration(
            vars in 1usize..7,
            raw in proptest::collection::vec(proptest::collection::vec((0usize..7, any::<bool>()), 0..4), 0..10)
        ) {
            let mut c = Cnf::new(vars);
            for cl in raw {
                c.add(cl.into_iter().map(|(v, p)| Lit { var: v % vars, positive: p }).collect());
            }
            let all = brute(&c);
            let got = c.solve(&vec![None; vars]);
            prop_assert_eq!(got.is_some(), !all.is_empty());
            if let Some(m) = got {
                prop_assert!(all.contains(&m));
            }
        }
    }
}
