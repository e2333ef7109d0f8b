// SPDX-License-Identifier: Apache-2.0

//! Fixpoint semantics of positive basic programs by conditional
//! satisfaction, used as an independent oracle for the reduct.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::program::{CAtom, Interpretation, Literal, Program, Rule};
use crate::semantics::{complement, is_model, satisfies_catom};

pub use crate::abstraction::cond_satisfies_abstract;

/// Interval widths up to this are enumerated; wider ones are counted.
const ENUMERATION_WIDTH: u32 = 16;

/// `R ⊨_S A`: `R ⊨ A` and every `S'` with `R ∩ A_d ⊆ S' ⊆ S ∩ A_d` is
/// admissible.
pub fn cond_satisfies(r: &Interpretation, s: &Interpretation, a: &CAtom) -> bool {
    if !satisfies_catom(r, a) {
        return false;
    }
    let lo = a.mask_of(r);
    let hi = a.mask_of(s);
    if lo & !hi != 0 {
        return true;
    }
    let free = hi & !lo;
    if free.count_ones() <= ENUMERATION_WIDTH {
        let mut x = free;
        loop {
            if !a.contains_mask(lo | x) {
                return false;
            }
            if x == 0 {
                return true;
            }
            x = (x - 1) & free;
        }
    }
    let inside = a.masks().iter().filter(|&&m| m & lo == lo && m & !hi == 0).count();
    inside as u128 == 1u128 << free.count_ones()
}

fn check_positive_basic(p: &Program) -> Result<()> {
    for r in p.rules() {
        if r.head().len() != 1 || r.head()[0].as_elementary().is_none() {
            return Err(Error::not_in_class("positive basic", format!("head of `{r}`")));
        }
        if r.body().iter().any(Literal::is_negative) {
            return Err(Error::not_in_class(
                "positive basic",
                format!("negative literal in `{r}`"),
            ));
        }
    }
    Ok(())
}

fn body_cond_satisfied(r: &Rule, lo: &Interpretation, hi: &Interpretation) -> bool {
    r.body().iter().all(|l| match l {
        Literal::PositiveAtom(a) => lo.contains(a),
        Literal::Constraint(c) => cond_satisfies(lo, hi, c),
        _ => unreachable!("checked positive"),
    })
}

/// `T_P(R, S)`: heads of the rules whose body is conditionally satisfied
/// by `R` w.r.t. `S`.
pub fn tp_step(p: &Program, r: &Interpretation, s: &Interpretation) -> Result<Interpretation> {
    check_positive_basic(p)?;
    Ok(step(p, r, s))
}

fn step(p: &Program, r: &Interpretation, s: &Interpretation) -> Interpretation {
    p.rules()
        .iter()
        .filter(|rule| body_cond_satisfied(rule, r, s))
        .map(|rule| rule.head()[0].as_elementary().expect("elementary head").clone())
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixpointVerdict {
    Stable,
    NotStable,
    /// The candidate is not a model, so the operator is not monotone.
    NotAModel,
}

/// Iterates `T_P(·, I)` from `∅` and compares the fixpoint with `I`.
pub fn fixpoint_stable(p: &Program, i: &Interpretation) -> Result<FixpointVerdict> {
    check_positive_basic(p)?;
    if !is_model(i, p) {
        return Ok(FixpointVerdict::NotAModel);
    }
    let cap = p.language().len() + 2;
    let mut r = Interpretation::new();
    for _ in 0..cap {
        let next = step(p, &r, i);
        if next == r {
            return Ok(if r == *i {
                FixpointVerdict::Stable
            } else {
                FixpointVerdict::NotStable
            });
        }
        debug_assert!(r.is_subset(&next), "operator is not monotone");
        r = next;
    }
    panic!("fixpoint iteration exceeded {cap} steps");
}

/// Rewrites a normal constraint program with elementary heads into a
/// positive basic one: `not b` becomes `({b},{∅})` and `not A` becomes the
/// complement of `A`.
pub fn to_positive_basic(p: &Program) -> Result<Program> {
    let rules = p
        .rules()
        .iter()
        .map(|r| {
            match r.head() {
                [h] if h.as_elementary().is_some() => {}
                _ => {
                    return Err(Error::not_in_class(
                        "normal with elementary heads",
                        format!("head of `{r}`"),
                    ))
                }
            }
            let body = r
                .body()
                .iter()
                .map(|l| {
                    Ok(match l {
                        Literal::NegativeAtom(b) => Literal::Constraint(CAtom::negated_elementary(b.clone())),
                        Literal::NegatedConstraint(c) => Literal::Constraint(complement(c)?),
                        other => other.clone(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Rule::new(r.head().to_vec(), body)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Program::new(rules).with_declared(p.declared().iter().cloned()))
}

/// Models of `P` that are fixpoint stable, over subsets of `language(P)`.
pub fn fixpoint_stable_models(p: &Program) -> Result<Vec<Interpretation>> {
    check_positive_basic(p)?;
    let lang: Vec<_> = p.language().into_iter().collect();
    let limit = crate::reduct::CANDIDATE_LIMIT;
    if lang.len() > limit {
        return Err(Error::guard("program language", lang.len(), limit));
    }
    let mut out = Vec::new();
    for m in 0..1u64 << lang.len() {
        let i: Interpretation = lang
            .iter()
            .enumerate()
            .filter(|(k, _)| m & (1 << k) != 0)
            .map(|(_, a)| a.clone())
            .collect();
        if fixpoint_stable(p, &i)? == FixpointVerdict::Stable {
            out.push(i);
        }
    }
    out.sort();
    Ok(out)
}
