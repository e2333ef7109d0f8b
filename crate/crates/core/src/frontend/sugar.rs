// SPDX-License-Identifier: Apache-2.0

//! Translation of weight constraints, aggregates and negated c-atoms into
//! plain c-atoms.

use crate::error::{Error, Result};
use crate::program::{Atom, AtomSet, CAtom, HeadElement, Literal, Mask, Program, Rule};
use crate::semantics::complement;

use super::ast::*;

/// Largest number of entries in a weight constraint or aggregate.
pub const ENTRY_LIMIT: usize = 16;

fn solutions_by(domain: &[Atom], keep: impl Fn(&AtomSet) -> bool) -> Result<CAtom> {
    let n = domain.len();
    let sols: Vec<Vec<Atom>> = (0..(1 as Mask) << n)
        .map(|m| {
            domain
                .iter()
                .enumerate()
                .filter(|(k, _)| m & (1 << k) != 0)
                .map(|(_, a)| a.clone())
                .collect::<AtomSet>()
        })
        .filter(|s| keep(s))
        .map(|s| s.into_iter().collect())
        .collect();
    CAtom::new(domain.iter().cloned(), sols)
}

fn domain_of<'a>(atoms: impl Iterator<Item = &'a Atom>) -> Vec<Atom> {
    atoms.cloned().collect::<AtomSet>().into_iter().collect()
}

/// The c-atom whose solutions are the subsets `S` of the mentioned atoms
/// with `lower ≤ Σ {w | entry satisfied by S} ≤ upper`.
pub fn desugar_weight(w: &WeightConstraint) -> Result<CAtom> {
    if w.entries.len() > ENTRY_LIMIT {
        return Err(Error::guard("weight constraint entries", w.entries.len(), ENTRY_LIMIT));
    }
    let domain = domain_of(w.entries.iter().map(|e| &e.atom));
    solutions_by(&domain, |s| {
        let sum: i64 = w
            .entries
            .iter()
            .filter(|e| s.contains(&e.atom) != e.negated)
            .map(|e| e.weight)
            .sum();
        w.lower.is_none_or(|l| sum >= l) && w.upper.is_none_or(|u| sum <= u)
    })
}

pub fn desugar_aggregate(g: &Aggregate) -> Result<CAtom> {
    if g.entries.len() > ENTRY_LIMIT {
        return Err(Error::guard("aggregate entries", g.entries.len(), ENTRY_LIMIT));
    }
    let domain = domain_of(g.entries.iter().map(|(a, _)| a));
    solutions_by(&domain, |s| {
        let true_entries = g.entries.iter().filter(|(a, _)| s.contains(a));
        let value = match g.kind {
            AggregateKind::Sum => true_entries.map(|(_, v)| v).sum(),
            AggregateKind::Count => true_entries.count() as i64,
        };
        g.relop.holds(value, g.bound)
    })
}

/// Replaces every `not A` on a c-atom by the complement of `A`.
pub fn eliminate_negated_catoms(p: &Program) -> Result<Program> {
    let rules = p
        .rules()
        .iter()
        .map(|r| {
            let body = r
                .body()
                .iter()
                .map(|l| match l {
                    Literal::NegatedConstraint(c) => complement(c).map(Literal::Constraint),
                    other => Ok(other.clone()),
                })
                .collect::<Result<Vec<_>>>()?;
            Rule::new(r.head().to_vec(), body)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Program::new(rules).with_declared(p.declared().iter().cloned()))
}

fn item_catom(item: &BodyItem) -> Result<Option<CAtom>> {
    Ok(match item {
        BodyItem::Atom(_) => None,
        BodyItem::CAtom(c) => Some(c.clone()),
        BodyItem::Weight(w) => Some(desugar_weight(w)?),
        BodyItem::Aggregate(g) => Some(desugar_aggregate(g)?),
    })
}

/// Desugars a source program, keeping negated c-atoms as
/// [`Literal::NegatedConstraint`].
pub fn desugar(src: &SourceProgram) -> Result<Program> {
    let mut rules = Vec::new();
    let mut declared = Vec::new();
    for s in &src.statements {
        match s {
            Statement::Atoms(atoms, _) => declared.extend(atoms.iter().cloned()),
            Statement::Rule(r) => {
                let at = |e: Error| match e {
                    Error::Parse { .. } | Error::Guard { .. } => e,
                    other => Error::Parse {
                        line: r.span.line,
                        column: r.span.column,
                        message: other.to_string(),
                    },
                };
                let head = r
                    .head
                    .iter()
                    .map(|h| {
                        Ok(match h {
                            SourceHead::Bot => HeadElement::bottom(),
                            SourceHead::Atom(a) => HeadElement::HeadAtom(a.clone()),
                            SourceHead::CAtom(c) => HeadElement::HeadConstraint(c.clone()),
                            SourceHead::Weight(w) => HeadElement::HeadConstraint(desugar_weight(w)?),
                            SourceHead::Aggregate(g) => HeadElement::HeadConstraint(desugar_aggregate(g)?),
                        })
                    })
                    .collect::<Result<Vec<_>>>()
                    .map_err(at)?;
                let body = r
                    .body
                    .iter()
                    .map(|l| {
                        Ok(match (&l.item, l.negated) {
                            (BodyItem::Atom(a), false) => Literal::PositiveAtom(a.clone()),
                            (BodyItem::Atom(a), true) => Literal::NegativeAtom(a.clone()),
                            (item, negated) => {
                                let c = item_catom(item)?.expect("c-atom item");
                                if negated {
                                    Literal::NegatedConstraint(c)
                                } else {
                                    Literal::Constraint(c)
                                }
                            }
                        })
                    })
                    .collect::<Result<Vec<_>>>()
                    .map_err(at)?;
                rules.push(Rule::new(head, body).map_err(at)?);
            }
        }
    }
    Ok(Program::new(rules).with_declared(declared))
}

/// Desugars and eliminates negated c-atoms.
pub fn lower(src: &SourceProgram) -> Result<Program> {
    eliminate_negated_catoms(&desugar(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::{parse, parse_program};
    use crate::program::atom_set;
    use crate::semantics::satisfies_catom;
    use proptest::prelude::*;

    fn a(n: &str) -> Atom {
        Atom::new(n).unwrap()
    }

    fn catom(d: &[&str], c: &[&[&str]]) -> CAtom {
        CAtom::new(d.iter().map(|n| a(n)), c.iter().map(|s| s.iter().map(|n| a(n)))).unwrap()
    }

    fn body_catom(src: &str) -> CAtom {
        let p = desugar(&parse(src).unwrap()).unwrap();
        match &p.rules()[0].body()[0] {
            Literal::Constraint(c) | Literal::NegatedConstraint(c) => c.clone(),
            l => panic!("{l}"),
        }
    }

    #[test]
    fn weight_examples() {
        assert_eq!(body_catom("x :- 1 {a, b} 1."), catom(&["a", "b"], &[&["a"], &["b"]]));
        assert_eq!(body_catom("x :- 0 {a} 1."), catom(&["a"], &[&[], &["a"]]));
        assert_eq!(
            body_catom("x :- 1 {a=1, not b=1}."),
            catom(&["a", "b"], &[&[], &["a"], &["a", "b"]])
        );
        assert_eq!(body_catom("x :- 1 {a, not a} 1."), catom(&["a"], &[&[], &["a"]]));
    }

    #[test]
    fn aggregate_examples() {
        assert_eq!(
            body_catom("x :- #sum{p(-1)=-1, p(1)=1, p(2)=2} >= 1."),
            catom(
                &["p(-1)", "p(1)", "p(2)"],
                &[
                    &["p(1)"],
                    &["p(2)"],
                    &["p(-1)", "p(2)"],
                    &["p(1)", "p(2)"],
                    &["p(-1)", "p(1)", "p(2)"]
                ]
            )
        );
        assert_eq!(body_catom("x :- #count{} >= 0."), catom(&[], &[&[]]));
        assert_eq!(
            body_catom("x :- #count{a=1, b=1} >= 1."),
            catom(&["a", "b"], &[&["a"], &["b"], &["a", "b"]])
        );
    }

    #[test]
    fn negated_catoms() {
        let p = parse_program("x :- not [a : {a}].").unwrap();
        assert_eq!(p.to_string(), "x :- [a : {}].\n");
        let q = parse_program("a :- not [a, b : {a, b}].").unwrap();
        assert_eq!(q.to_string(), "a :- [a, b : {}, {a}, {b}].\n");
        let plain = parse_program("a :- not b, [c : {c}].").unwrap();
        assert_eq!(eliminate_negated_catoms(&plain).unwrap(), plain);
        let twice = parse_program("a :- not [a, b : {}, {a}, {b}].").unwrap();
        assert_eq!(twice.to_string(), "a :- [a, b : {a, b}].\n");
    }

    #[test]
    fn choice_detection() {
        let p = parse("x :- {a, b}.").unwrap();
        let Statement::Rule(r) = &p.statements[0] else { panic!() };
        let BodyItem::Weight(w) = &r.body[0].item else { panic!() };
        assert!(w.is_choice());
        assert_eq!(desugar_weight(w).unwrap().num_solutions(), 4);
    }

    #[test]
    fn entry_guard() {
        let entries: Vec<String> = (0..17).map(|k| format!("x{k}")).collect();
        let src = format!("y :- 1 {{{}}}.", entries.join(", "));
        assert!(matches!(desugar(&parse(&src).unwrap()), Err(Error::Guard { .. })));
    }

    fn weight_strategy() -> impl Strategy<Value = WeightConstraint> {
        let entry = (any::<bool>(), 0usize..5, -3i64..4).prop_map(|(negated, k, weight)| WeightEntry {
            negated,
            atom: Atom::new(&format!("x{k}")).unwrap(),
            weight,
        });
        (
            proptest::option::of(-4i64..6),
            proptest::option::of(-4i64..8),
            proptest::collection::vec(entry, 0..7),
        )
            .prop_map(|(lower, upper, entries)| WeightConstraint { lower, upper, entries })
    }

    fn aggregate_strategy() -> impl Strategy<Value = Aggregate> {
        let relop = prop_oneof![
            Just(Relop::Ge),
            Just(Relop::Le),
            Just(Relop::Eq),
            Just(Relop::Gt),
            Just(Relop::Lt)
        ];
        (
            any::<bool>(),
            proptest::collection::btree_map(0usize..6, -3i64..4, 0..6),
            relop,
            -3i64..6,
        )
            .prop_map(|(sum, entries, relop, bound)| Aggregate {
                kind: if sum { AggregateKind::Sum } else { AggregateKind::Count },
                entries: entries
                    .into_iter()
                    .map(|(k, v)| (Atom::new(&format!("x{k}")).unwrap(), v))
                    .collect(),
                relop,
                bound,
            })
    }

    fn all_interps() -> impl Iterator<Item = AtomSet> {
        (0u32..64).map(|m| {
            let names: Vec<String> = (0..6).filter(|k| m & (1 << k) != 0).map(|k| format!("x{k}")).collect();
            atom_set(names.iter().map(String::as_str)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn weight_matches_direct_evaluation(w in weight_strategy()) {
            let c = desugar_weight(&w).unwrap();
            for i in all_interps() {
                let mut sum = 0;
                for e in &w.entries {
                    if i.contains(&e.atom) != e.negated {
                        sum += e.weight;
                    }
                }
                let direct = w.lower.is_none_or(|l| sum >= l) && w.upper.is_none_or(|u| sum <= u);
                prop_assert_eq!(satisfies_catom(&i, &c), direct);
            }
        }

        #[test]
        fn aggregate_matches_direct_evaluation(g in aggregate_strategy()) {
            let c = desugar_aggregate(&g).unwrap();
            for i in all_interps() {
                let mut value = 0;
                for (a, v) in &g.entries {
                    if i.contains(a) {
                        value += match g.kind { AggregateKind::Sum => *v, AggregateKind::Count => 1 };
                    }
                }
                prop_assert_eq!(satisfies_catom(&i, &c), g.relop.holds(value, g.bound));
            }
        }

        #[test]
        fn double_complement(w in weight_strategy()) {
            let c = desugar_weight(&w).unwrap();
            prop_assert_eq!(complement(&complement(&c).unwrap()).unwrap(), c);
        }
    }
}
