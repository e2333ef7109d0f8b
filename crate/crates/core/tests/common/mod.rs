// SPDX-License-Identifier: Apache-2.0

//! Seeded random generators for programs and c-atoms.

#![allow(dead_code)]

use catom::program::{Atom, CAtom, HeadElement, Literal, Program, Rule};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn atoms(n: usize) -> Vec<Atom> {
    (0..n).map(|k| Atom::new(&format!("x{k}")).unwrap()).collect()
}

/// Random c-atom over a random subset (size 0..=max_domain) of `pool`.
pub fn catom(rng: &mut Rng8, pool: &[Atom], max_domain: usize) -> CAtom {
    let size = rng.gen_range(0..=max_domain.min(pool.len()));
    let domain: Vec<Atom> = pool.choose_multiple(rng, size).cloned().collect();
    let n = domain.len();
    let density: f64 = rng.gen_range(0.2..0.9);
    let sols: Vec<Vec<Atom>> = (0u64..1 << n)
        .filter(|_| rng.gen_bool(density))
        .map(|m| {
            domain
                .iter()
                .enumerate()
                .filter(|(k, _)| m & (1 << k) != 0)
                .map(|(_, a)| a.clone())
                .collect()
        })
        .collect();
    CAtom::new(domain, sols).unwrap()
}

/// Random c-atom on exactly `n` fresh atoms `y0..`.
pub fn catom_exact(rng: &mut Rng8, n: usize) -> CAtom {
    let domain: Vec<Atom> = (0..n).map(|k| Atom::new(&format!("y{k}")).unwrap()).collect();
    let density: f64 = rng.gen_range(0.1..0.95);
    let sols: Vec<Vec<Atom>> = (0u64..1 << n)
        .filter(|_| rng.gen_bool(density))
        .map(|m| {
            domain
                .iter()
                .enumerate()
                .filter(|(k, _)| m & (1 << k) != 0)
                .map(|(_, a)| a.clone())
                .collect()
        })
        .collect();
    CAtom::new(domain, sols).unwrap()
}

fn program(rules: Vec<Rule>, pool: &[Atom]) -> Program {
    Program::new(rules).with_declared(pool.iter().cloned())
}

/// Negation-free rules with one elementary head and c-atom or atom bodies.
pub fn positive_basic(rng: &mut Rng8, max_atoms: usize, max_rules: usize, max_domain: usize) -> Program {
    let pool = atoms(rng.gen_range(1..=max_atoms));
    let rules = (0..rng.gen_range(1..=max_rules))
        .map(|_| {
            let h = pool.choose(rng).unwrap().clone();
            let body = (0..rng.gen_range(0..=2))
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        Literal::PositiveAtom(pool.choose(rng).unwrap().clone())
                    } else {
                        Literal::Constraint(catom(rng, &pool, max_domain))
                    }
                })
                .collect();
            if rng.gen_bool(0.3) {
                Rule::new(vec![HeadElement::HeadConstraint(CAtom::elementary(h))], body).unwrap()
            } else {
                Rule::normal(h, body)
            }
        })
        .collect();
    program(rules, &pool)
}

/// Ordinary normal (`disjunctive = false`) or disjunctive program with
/// negation and occasional integrity constraints.
pub fn ordinary(rng: &mut Rng8, max_atoms: usize, max_rules: usize, disjunctive: bool) -> Program {
    let pool = atoms(rng.gen_range(1..=max_atoms));
    let rules = (0..rng.gen_range(1..=max_rules))
        .map(|_| {
            let head = if rng.gen_bool(0.1) {
                vec![HeadElement::bottom()]
            } else {
                let k = if disjunctive { rng.gen_range(1..=3) } else { 1 };
                let mut hs: Vec<Atom> = pool.choose_multiple(rng, k).cloned().collect();
                hs.dedup();
                hs.into_iter().map(HeadElement::HeadAtom).collect()
            };
            let body = (0..rng.gen_range(0..=3))
                .map(|_| {
                    let a = pool.choose(rng).unwrap().clone();
                    if rng.gen_bool(0.4) {
                        Literal::NegativeAtom(a)
                    } else {
                        Literal::PositiveAtom(a)
                    }
                })
                .collect();
            Rule::new(head, body).unwrap()
        })
        .collect();
    program(rules, &pool)
}

/// Heads `⊥` or elementary; bodies of atoms, negative atoms and c-atoms.
/// Body literals never mention the rule's own head atom.
pub fn basic(rng: &mut Rng8, max_atoms: usize, max_rules: usize, max_domain: usize) -> Program {
    let pool = atoms(rng.gen_range(1..=max_atoms));
    let rules = (0..rng.gen_range(1..=max_rules))
        .map(|_| {
            let h = if rng.gen_bool(0.1) {
                None
            } else {
                pool.choose(rng).cloned()
            };
            let others: Vec<Atom> = pool.iter().filter(|a| Some(*a) != h.as_ref()).cloned().collect();
            let body = if others.is_empty() {
                Vec::new()
            } else {
                (0..rng.gen_range(0..=2))
                    .map(|_| {
                        let a = others.choose(rng).unwrap().clone();
                        match rng.gen_range(0..5) {
                            0 => Literal::PositiveAtom(a),
                            1 | 2 => Literal::NegativeAtom(a),
                            _ => Literal::Constraint(catom(rng, &others, max_domain)),
                        }
                    })
                    .collect()
            };
            let head = h.map_or_else(HeadElement::bottom, HeadElement::HeadAtom);
            Rule::new(vec![head], body).unwrap()
        })
        .collect();
    program(rules, &pool)
}

/// Single elementary heads; bodies with atoms, `not`, c-atoms and `not` on
/// c-atoms.
pub fn normal_constraint(rng: &mut Rng8, max_atoms: usize, max_rules: usize, max_domain: usize) -> Program {
    let pool = atoms(rng.gen_range(1..=max_atoms));
    let rules = (0..rng.gen_range(1..=max_rules))
        .map(|_| {
            let h = pool.choose(rng).unwrap().clone();
            let body = (0..rng.gen_range(0..=2))
                .map(|_| {
                    let a = pool.choose(rng).unwrap().clone();
                    match rng.gen_range(0..5) {
                        0 => Literal::PositiveAtom(a),
                        1 => Literal::NegativeAtom(a),
                        2 => Literal::NegatedConstraint(catom(rng, &pool, max_domain)),
                        _ => Literal::Constraint(catom(rng, &pool, max_domain)),
                    }
                })
                .collect();
            Rule::normal(h, body)
        })
        .collect();
    program(rules, &pool)
}

/// Arbitrary disjunctive constraint program: heads mix atoms, c-atoms and
/// `⊥`; bodies mix every literal kind except negated c-atoms.
pub fn disjunctive_constraint(rng: &mut Rng8, max_atoms: usize, max_rules: usize, max_domain: usize) -> Program {
    let pool = atoms(rng.gen_range(1..=max_atoms));
    let rules = (0..rng.gen_range(1..=max_rules))
        .map(|_| {
            let head = (0..rng.gen_range(1..=2))
                .map(|_| match rng.gen_range(0..6) {
                    0 => HeadElement::bottom(),
                    1 | 2 => HeadElement::HeadConstraint(catom(rng, &pool, max_domain)),
                    _ => HeadElement::HeadAtom(pool.choose(rng).unwrap().clone()),
                })
                .collect();
            let body = (0..rng.gen_range(0..=2))
                .map(|_| {
                    let a = pool.choose(rng).unwrap().clone();
                    match rng.gen_range(0..4) {
                        0 => Literal::PositiveAtom(a),
                        1 => Literal::NegativeAtom(a),
                        _ => Literal::Constraint(catom(rng, &pool, max_domain)),
                    }
                })
                .collect();
            Rule::new(head, body).unwrap()
        })
        .collect();
    program(rules, &pool)
}

/// Same as [`disjunctive_constraint`] but every head c-atom is elementary.
pub fn elementary_heads(rng: &mut Rng8, max_atoms: usize, max_rules: usize, max_domain: usize) -> Program {
    let pool = atoms(rng.gen_range(1..=max_atoms));
    let rules = (0..rng.gen_range(1..=max_rules))
        .map(|_| {
            let head = (0..rng.gen_range(1..=2))
                .map(|_| {
                    let a = pool.choose(rng).unwrap().clone();
                    if rng.gen_bool(0.5) {
                        HeadElement::HeadConstraint(CAtom::elementary(a))
                    } else {
                        HeadElement::HeadAtom(a)
                    }
                })
                .collect();
            let body = (0..rng.gen_range(0..=2))
                .map(|_| {
                    let a = pool.choose(rng).unwrap().clone();
                    match rng.gen_range(0..4) {
                        0 => Literal::PositiveAtom(a),
                        1 => Literal::NegativeAtom(a),
                        _ => Literal::Constraint(catom(rng, &pool, max_domain)),
                    }
                })
                .collect();
            Rule::new(head, body).unwrap()
        })
        .collect();
    program(rules, &pool)
}

pub fn subsets(p: &Program) -> Vec<catom::program::Interpretation> {
    let lang: Vec<Atom> = p.language().into_iter().collect();
    (0u64..1 << lang.len())
        .map(|m| {
            lang.iter()
                .enumerate()
                .filter(|(k, _)| m & (1 << k) != 0)
                .map(|(_, a)| a.clone())
                .collect()
        })
        .collect()
}

/// `2^{y0..y(n-1)}`
pub fn full_powerset(n: usize) -> CAtom {
    let domain: Vec<Atom> = (0..n).map(|k| Atom::new(&format!("y{k}")).unwrap()).collect();
    let sols: Vec<Vec<Atom>> = (0u64..1 << n)
        .map(|m| {
            (0..n)
                .filter(|k| m & (1 << k) != 0)
                .map(|k| domain[k].clone())
                .collect()
        })
        .collect();
    CAtom::new(domain, sols).unwrap()
}
