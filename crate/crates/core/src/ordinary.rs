// SPDX-License-Identifier: Apache-2.0

//! Textbook Gelfond-Lifschitz stable models of ordinary programs, kept
//! independent of the c-atom machinery so the two can be compared.
//!
//! Heads are atoms, elementary c-atoms or `⊥` (an integrity constraint);
//! bodies are atoms, `not a`, or elementary c-atoms.

use crate::error::{Error, Result};
use crate::program::{Atom, AtomSet, HeadElement, Interpretation, Literal, Program};

/// Largest language accepted by [`stable_models`].
pub const LIMIT: usize = 20;

struct OrdinaryRule {
    /// Empty for a constraint.
    head: Vec<Atom>,
    pos: Vec<Atom>,
    neg: Vec<Atom>,
}

fn rules_of(p: &Program) -> Result<Vec<OrdinaryRule>> {
    p.rules()
        .iter()
        .map(|r| {
            let mut head = Vec::new();
            for h in r.head() {
                if h.is_bottom() {
                    continue;
                }
                match h.as_elementary() {
                    Some(a) => head.push(a.clone()),
                    None => return Err(Error::not_in_class("ordinary", format!("head of `{r}`"))),
                }
            }
            let (mut pos, mut neg) = (Vec::new(), Vec::new());
            for l in r.body() {
                match l {
                    Literal::PositiveAtom(a) => pos.push(a.clone()),
                    Literal::NegativeAtom(a) => neg.push(a.clone()),
                    Literal::Constraint(c) => match c.as_elementary() {
                        Some(a) => pos.push(a.clone()),
                        None => return Err(Error::not_in_class("ordinary", format!("body literal `{l}`"))),
                    },
                    Literal::NegatedConstraint(_) => {
                        return Err(Error::not_in_class("ordinary", format!("body literal `{l}`")))
                    }
                }
            }
            Ok(OrdinaryRule { head, pos, neg })
        })
        .collect()
}

fn reduct<'r>(rules: &'r [OrdinaryRule], i: &Interpretation) -> Vec<&'r OrdinaryRule> {
    rules.iter().filter(|r| !r.neg.iter().any(|a| i.contains(a))).collect()
}

fn satisfies(m: &Interpretation, r: &OrdinaryRule) -> bool {
    !r.pos.iter().all(|a| m.contains(a)) || r.head.iter().any(|h| m.contains(h))
}

fn is_stable_rules(rules: &[OrdinaryRule], i: &Interpretation) -> bool {
    let red = reduct(rules, i);
    if !red.iter().all(|r| satisfies(i, r)) {
        return false;
    }
    if red.iter().all(|r| r.head.len() <= 1) {
        // least model of the definite part
        let mut m = AtomSet::new();
        loop {
            let before = m.len();
            for r in red.iter().filter(|r| r.head.len() == 1) {
                if r.pos.iter().all(|a| m.contains(a)) {
                    m.insert(r.head[0].clone());
                }
            }
            if m.len() == before {
                break;
            }
        }
        return m == *i;
    }
    let atoms: Vec<&Atom> = i.iter().collect();
    let full = (1u64 << atoms.len()) - 1;
    (0..full).all(|mask| {
        let j: AtomSet = atoms
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, a)| (*a).clone())
            .collect();
        !red.iter().all(|r| satisfies(&j, r))
    })
}

/// Whether `I` is a minimal model of the standard reduct `P^I`.
pub fn is_stable(p: &Program, i: &Interpretation) -> Result<bool> {
    Ok(is_stable_rules(&rules_of(p)?, i))
}

/// All stable models over subsets of `language(P)`, sorted.
pub fn stable_models(p: &Program) -> Result<Vec<Interpretation>> {
    let rules = rules_of(p)?;
    let lang: Vec<Atom> = p.language().into_iter().collect();
    if lang.len() > LIMIT {
        return Err(Error::guard("program language", lang.len(), LIMIT));
    }
    let mut out: Vec<Interpretation> = (0..1u64 << lang.len())
        .map(|m| {
            lang.iter()
                .enumerate()
                .filter(|(k, _)| m & (1 << k) != 0)
                .map(|(_, a)| a.clone())
                .collect()
        })
        .filter(|i| is_stable_rules(&rules, i))
        .collect();
    out.sort();
    Ok(out)
}

/// Rewrites every atom occurrence into its c-atom form: head atoms become
/// `({a},{{a}})`, body atoms `({a},{{a}})`, `not a` becomes `({a},{∅})`.
pub fn embed_catoms(p: &Program) -> Result<Program> {
    use crate::program::{CAtom, Rule};
    let rules = p
        .rules()
        .iter()
        .map(|r| {
            let head = r
                .head()
                .iter()
                .map(|h| match h {
                    HeadElement::HeadAtom(a) => HeadElement::HeadConstraint(CAtom::elementary(a.clone())),
                    other => other.clone(),
                })
                .collect();
            let body = r
                .body()
                .iter()
                .map(|l| match l {
                    Literal::PositiveAtom(a) => Literal::Constraint(CAtom::elementary(a.clone())),
                    Literal::NegativeAtom(a) => Literal::Constraint(CAtom::negated_elementary(a.clone())),
                    other => other.clone(),
                })
                .collect();
            Rule::new(head, body)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Program::new(rules).with_declared(p.declared().iter().cloned()))
}
