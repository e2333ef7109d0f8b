// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use super::{cycle_report, dependency_graph, normalize_basic, CycleReport};
use crate::error::{Error, Result};
use crate::program::{Atom, Interpretation, Program};
use crate::reduct::{stable_models, CANDIDATE_LIMIT};
use crate::semantics::is_supported_model;

/// One implication `premise ⇒ conclusion` evaluated on a program.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Implication {
    pub premise: bool,
    pub conclusion: bool,
    pub holds: bool,
    /// Interpretations showing the failure, if any.
    pub counterexample: Vec<Interpretation>,
}

impl Implication {
    fn new(premise: bool, conclusion: bool, counterexample: Vec<Interpretation>) -> Implication {
        let holds = !premise || conclusion;
        Implication {
            premise,
            conclusion,
            holds,
            counterexample: if holds { Vec::new() } else { counterexample },
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TheoremReport {
    pub cycles: CycleReport,
    pub stable_models: Vec<Interpretation>,
    pub supported_models: Vec<Interpretation>,
    /// Call-consistent ⇒ some stable model.
    pub call_consistent_has_model: Implication,
    /// Several stable models ⇒ an even cycle.
    pub several_models_need_even_cycle: Implication,
    /// Acyclic ⇒ exactly one stable model.
    pub acyclic_unique_model: Implication,
    /// No positive cycle ⇒ supported models are stable.
    pub supported_are_stable: Implication,
}

impl TheoremReport {
    pub fn all_hold(&self) -> bool {
        [
            &self.call_consistent_has_model,
            &self.several_models_need_even_cycle,
            &self.acyclic_unique_model,
            &self.supported_are_stable,
        ]
        .iter()
        .all(|i| i.holds)
    }
}

/// Evaluates the four dependency-graph implications on the `⊥`-free form
/// of a basic program by exhaustive model search.
pub fn check_dependency_theorem(p: &Program) -> Result<TheoremReport> {
    let q = normalize_basic(p)?;
    let lang: Vec<Atom> = q.language().into_iter().collect();
    if lang.len() > CANDIDATE_LIMIT {
        return Err(Error::guard("program language", lang.len(), CANDIDATE_LIMIT));
    }
    let cycles = cycle_report(&dependency_graph(&q)?);
    let stable = stable_models(&q)?;
    let supported: Vec<Interpretation> = (0..1u64 << lang.len())
        .map(|m| {
            lang.iter()
                .enumerate()
                .filter(|(k, _)| m & (1 << k) != 0)
                .map(|(_, a)| a.clone())
                .collect()
        })
        .filter(|i| is_supported_model(i, &q))
        .collect();
    let unsupported_stable: Vec<Interpretation> = supported.iter().filter(|i| !stable.contains(i)).cloned().collect();

    Ok(TheoremReport {
        call_consistent_has_model: Implication::new(cycles.call_consistent, !stable.is_empty(), Vec::new()),
        several_models_need_even_cycle: Implication::new(stable.len() > 1, cycles.has_even_cycle, stable.clone()),
        acyclic_unique_model: Implication::new(cycles.acyclic, stable.len() == 1, stable.clone()),
        supported_are_stable: Implication::new(
            !cycles.has_positive_cycle,
            unsupported_stable.is_empty(),
            unsupported_stable,
        ),
        cycles,
        stable_models: stable,
        supported_models: supported,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse_program;
    use crate::program::atom_set;

    #[test]
    fn even_loop_program() {
        let p = parse_program("p.\na :- [p, b : {p}].\nb :- [p, a : {p}].\n").unwrap();
        let r = check_dependency_theorem(&p).unwrap();
        assert_eq!(
            r.stable_models,
            vec![atom_set(["a", "p"]).unwrap(), atom_set(["b", "p"]).unwrap()]
        );
        assert!(r.call_consistent_has_model.premise && r.call_consistent_has_model.holds);
        assert!(r.several_models_need_even_cycle.premise && r.several_models_need_even_cycle.holds);
        assert!(r.all_hold());
    }

    #[test]
    fn acyclic_program() {
        let r = check_dependency_theorem(&parse_program("a.\nb :- a.\n").unwrap()).unwrap();
        assert!(r.acyclic_unique_model.premise && r.acyclic_unique_model.conclusion);
        assert!(r.all_hold());
    }

    #[test]
    fn positive_loop_breaks_support() {
        let r = check_dependency_theorem(&parse_program("a :- a.\n").unwrap()).unwrap();
        assert!(r.cycles.has_positive_cycle);
        assert!(!r.supported_are_stable.premise);
        assert_eq!(r.supported_models.len(), 2);
        assert_eq!(r.stable_models.len(), 1);
    }

    #[test]
    fn constraints_add_odd_loops() {
        let r = check_dependency_theorem(&parse_program("a.\n:- a.\n").unwrap()).unwrap();
        assert!(r.cycles.has_odd_cycle);
        assert!(r.stable_models.is_empty());
        assert!(r.all_hold());
    }
}
