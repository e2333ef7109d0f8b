// SPDX-License-Identifier: Apache-2.0

//! Disjunctive normal forms of c-atoms.

use std::fmt;

use serde::Serialize;

use super::AbstractCAtom;
use crate::program::{AtomSet, CAtom, Interpretation};

/// `S ∧ not N`. Both sides are sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Conjunction {
    pub positive: AtomSet,
    pub negative: AtomSet,
}

impl Conjunction {
    pub fn eval(&self, i: &Interpretation) -> bool {
        self.positive.is_subset(i) && self.negative.is_disjoint(i)
    }

    /// Whether `(S₁ ∧ L ∧ S₂) ∨ (S₁ ∧ not L ∧ S₂) ≡ S₁ ∧ S₂` applies.
    fn resolves_with(&self, other: &Conjunction) -> bool {
        let flipped = |x: &Conjunction, y: &Conjunction| {
            let mut d = x.positive.difference(&y.positive);
            match (d.next(), d.next()) {
                (Some(l), None) => {
                    y.negative.contains(l)
                        && y.positive.is_subset(&x.positive)
                        && x.negative.len() + 1 == y.negative.len()
                        && x.negative.iter().all(|n| y.negative.contains(n))
                }
                _ => false,
            }
        };
        flipped(self, other) || flipped(other, self)
    }
}

impl fmt::Display for Conjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lits: Vec<String> = self
            .positive
            .iter()
            .map(|a| a.to_string())
            .chain(self.negative.iter().map(|a| format!("not {a}")))
            .collect();
        if lits.is_empty() {
            f.write_str("true")
        } else {
            f.write_str(&lits.join(" & "))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Dnf {
    pub disjuncts: Vec<Conjunction>,
}

impl Dnf {
    fn new(mut disjuncts: Vec<Conjunction>) -> Dnf {
        disjuncts.sort();
        disjuncts.dedup();
        Dnf { disjuncts }
    }

    pub fn eval(&self, i: &Interpretation) -> bool {
        self.disjuncts.iter().any(|c| c.eval(i))
    }
}

impl fmt::Display for Dnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.disjuncts.is_empty() {
            return f.write_str("false");
        }
        for (k, c) in self.disjuncts.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "({c})")?;
        }
        Ok(())
    }
}

/// `⋁_{S ∈ A_c} S ∧ not (A_d \ S)`
pub fn dnf(a: &CAtom) -> Dnf {
    let domain = a.domain_set();
    Dnf::new(
        a.solutions()
            .map(|s| Conjunction {
                negative: domain.difference(&s).cloned().collect(),
                positive: s,
            })
            .collect(),
    )
}

/// `⋁_{W ⊎ V ∈ A*_c} W ∧ not (A_d \ (W ∪ V))`
pub fn simplified_dnf(a: &AbstractCAtom) -> Dnf {
    let domain: AtomSet = a.domain().iter().cloned().collect();
    Dnf::new(
        a.lattices()
            .iter()
            .map(|p| Conjunction {
                positive: p.base().clone(),
                negative: domain.difference(&p.top()).cloned().collect(),
            })
            .collect(),
    )
}

/// No pair of disjuncts differs in the polarity of exactly one literal.
pub fn is_maximally_simplified(f: &Dnf) -> bool {
    let ds = &f.disjuncts;
    ds.iter()
        .enumerate()
        .all(|(k, x)| ds[k + 1..].iter().all(|y| !x.resolves_with(y)))
}
