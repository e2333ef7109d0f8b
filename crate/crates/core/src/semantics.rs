// SPDX-License-Identifier: Apache-2.0

//! Classical satisfaction of c-atoms, rules and programs.

use crate::error::{Error, Result};
use crate::program::{submasks, AtomSet, CAtom, HeadElement, Interpretation, Literal, Program, Rule, POWERSET_LIMIT};

/// `I ⊨ A` iff `I ∩ A_d ∈ A_c`.
pub fn satisfies_catom(i: &Interpretation, a: &CAtom) -> bool {
    a.contains_mask(a.mask_of(i))
}

pub fn satisfies_literal(i: &Interpretation, l: &Literal) -> bool {
    match l {
        Literal::PositiveAtom(a) => i.contains(a),
        Literal::NegativeAtom(a) => !i.contains(a),
        Literal::Constraint(c) => satisfies_catom(i, c),
        Literal::NegatedConstraint(c) => !satisfies_catom(i, c),
    }
}

pub fn satisfies_head_element(i: &Interpretation, h: &HeadElement) -> bool {
    match h {
        HeadElement::HeadAtom(a) => i.contains(a),
        HeadElement::HeadConstraint(c) => satisfies_catom(i, c),
    }
}

pub fn satisfies_body(i: &Interpretation, body: &[Literal]) -> bool {
    body.iter().all(|l| satisfies_literal(i, l))
}

pub fn satisfies_rule(i: &Interpretation, r: &Rule) -> bool {
    r.head().iter().any(|h| satisfies_head_element(i, h)) || !satisfies_body(i, r.body())
}

pub fn is_model(i: &Interpretation, p: &Program) -> bool {
    p.rules().iter().all(|r| satisfies_rule(i, r))
}

/// A model no proper subset of which is a model.
///
/// Atoms of `I` outside `At(P)` never affect satisfaction, so such an `I`
/// is never minimal; otherwise every proper subset of `I` is tested.
pub fn is_minimal_model(i: &Interpretation, p: &Program) -> bool {
    if !is_model(i, p) {
        return false;
    }
    let at = p.atoms();
    if !i.is_subset(&at) {
        return false;
    }
    let atoms: Vec<_> = i.iter().cloned().collect();
    assert!(atoms.len() <= 30, "is_minimal_model: interpretation too large");
    let full = (1u64 << atoms.len()) - 1;
    submasks(full).filter(|&m| m != full).all(|m| {
        let sub: AtomSet = atoms
            .iter()
            .enumerate()
            .filter(|(k, _)| m & (1 << k) != 0)
            .map(|(_, a)| a.clone())
            .collect();
        !is_model(&sub, p)
    })
}

/// A model in which every true atom is the head of some rule whose body is
/// true. A head c-atom `A` supports the atoms of `I ∩ A_d` when `I ⊨ A`.
pub fn is_supported_model(i: &Interpretation, p: &Program) -> bool {
    is_model(i, p)
        && i.iter().all(|a| {
            p.rules().iter().any(|r| {
                satisfies_body(i, r.body())
                    && r.head().iter().any(|h| match h {
                        HeadElement::HeadAtom(x) => x == a,
                        HeadElement::HeadConstraint(c) => c.domain().binary_search(a).is_ok() && satisfies_catom(i, c),
                    })
            })
        })
}

/// `(A_d, 2^{A_d} \ A_c)`, the reading of `not A`.
pub fn complement(a: &CAtom) -> Result<CAtom> {
    let n = a.domain().len();
    if n > POWERSET_LIMIT {
        return Err(Error::guard("complemented c-atom domain", n, POWERSET_LIMIT));
    }
    let masks = submasks(a.full_mask()).filter(|&m| !a.contains_mask(m)).collect();
    Ok(CAtom::from_masks(a.domain().to_vec(), masks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::program::{atom_set, Atom};
    use proptest::prelude::*;

    fn a(n: &str) -> Atom {
        Atom::new(n).unwrap()
    }

    fn set(ns: &[&str]) -> AtomSet {
        atom_set(ns.iter().copied()).unwrap()
    }

    fn catom(d: &[&str], c: &[&[&str]]) -> CAtom {
        CAtom::new(d.iter().map(|n| a(n)), c.iter().map(|s| s.iter().map(|n| a(n)))).unwrap()
    }

    fn sum_atom() -> CAtom {
        catom(
            &["p(-1)", "p(1)", "p(2)"],
            &[
                &["p(1)"],
                &["p(2)"],
                &["p(-1)", "p(2)"],
                &["p(1)", "p(2)"],
                &["p(-1)", "p(1)", "p(2)"],
            ],
        )
    }

    fn eight_solution_atom() -> CAtom {
        catom(
            &["a", "b", "c", "d"],
            &[
                &[],
                &["b"],
                &["c"],
                &["a", "c"],
                &["b", "c"],
                &["c", "d"],
                &["a", "b", "c"],
                &["b", "c", "d"],
            ],
        )
    }

    #[test]
    fn catom_satisfaction_examples() {
        assert!(satisfies_catom(&set(&["p(-1)", "p(1)", "p(2)"]), &sum_atom()));
        assert!(satisfies_catom(&set(&[]), &catom(&["a"], &[&[], &["a"]])));
        assert!(!satisfies_catom(&set(&["a", "b"]), &eight_solution_atom()));
        // atoms outside the domain are ignored
        assert!(satisfies_catom(&set(&["b", "zz"]), &eight_solution_atom()));
    }

    #[test]
    fn rule_satisfaction_examples() {
        let r = Rule::normal(a("a"), vec![Literal::PositiveAtom(a("b"))]);
        assert!(satisfies_rule(&set(&["a"]), &r));

        let unfounded = Rule::normal(
            a("d"),
            vec![Literal::Constraint(catom(&["b", "c"], &[&[], &["b"], &["b", "c"]]))],
        );
        assert!(satisfies_rule(&set(&["b", "c", "d"]), &unfounded));

        let disj = Rule::new(
            vec![
                HeadElement::HeadConstraint(CAtom::elementary(a("a"))),
                HeadElement::HeadConstraint(CAtom::elementary(a("b"))),
            ],
            vec![],
        )
        .unwrap();
        assert!(satisfies_rule(&set(&["a", "b"]), &disj));
        assert!(!satisfies_rule(&set(&[]), &disj));
    }

    #[test]
    fn nonminimal_model_of_single_fact() {
        let p = Program::new(vec![Rule::new(
            vec![HeadElement::HeadConstraint(catom(
                &["a", "b"],
                &[&["a"], &["b"], &["a", "b"]],
            ))],
            vec![],
        )
        .unwrap()]);
        let ab = set(&["a", "b"]);
        assert!(is_model(&ab, &p));
        assert!(!is_minimal_model(&ab, &p));
        assert!(is_minimal_model(&set(&["a"]), &p));
    }

    #[test]
    fn empty_program() {
        let p = Program::default();
        let e = set(&[]);
        assert!(is_model(&e, &p) && is_minimal_model(&e, &p) && is_supported_model(&e, &p));
    }

    #[test]
    fn supported_models() {
        // a ← not b.  b ← not a.
        let p = Program::new(vec![
            Rule::normal(a("a"), vec![Literal::NegativeAtom(a("b"))]),
            Rule::normal(a("b"), vec![Literal::NegativeAtom(a("a"))]),
        ]);
        assert!(is_supported_model(&set(&["a"]), &p));
        assert!(!is_supported_model(&set(&["a", "b"]), &p));
        assert!(!is_supported_model(&set(&[]), &p));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            complement(&CAtom::elementary(a("a"))).unwrap(),
            CAtom::negated_elementary(a("a"))
        );
        assert_eq!(
            complement(&catom(&["a", "b"], &[&["a", "b"]])).unwrap(),
            catom(&["a", "b"], &[&[], &["a"], &["b"]])
        );
        let x = eight_solution_atom();
        assert_eq!(complement(&complement(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn complement_guard() {
        let big = CAtom::new((0..21).map(|k| a(&format!("x{k}"))), Vec::<Vec<Atom>>::new()).unwrap();
        assert!(matches!(complement(&big), Err(Error::Guard { .. })));
    }

    fn arb_catom(max_domain: usize) -> impl Strategy<Value = CAtom> {
        (0..=max_domain).prop_flat_map(|n| {
            let domain: Vec<Atom> = (0..n).map(|k| Atom::new(&format!("x{k}")).unwrap()).collect();
            proptest::collection::vec(0u64..(1 << n), 0..(1 << n))
                .prop_map(move |masks| CAtom::from_masks(domain.clone(), masks))
        })
    }

    fn arb_interp() -> impl Strategy<Value = AtomSet> {
        proptest::collection::btree_set(0usize..8, 0..8)
            .prop_map(|ks| ks.into_iter().map(|k| Atom::new(&format!("x{k}")).unwrap()).collect())
    }

    proptest! {
        #[test]
        fn satisfaction_is_local(c in arb_catom(6), i in arb_interp()) {
            let local: AtomSet = i.iter().filter(|x| c.domain().contains(x)).cloned().collect();
            prop_assert_eq!(satisfies_catom(&i, &c), satisfies_catom(&local, &c));
        }

        #[test]
        fn complement_negates_satisfaction(c in arb_catom(6), i in arb_interp()) {
            let n = complement(&c).unwrap();
            prop_assert_eq!(satisfies_catom(&i, &n), !satisfies_catom(&i, &c));
        }
    }
}
