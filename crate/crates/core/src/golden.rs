// SPDX-License-Identifier: Apache-2.0

//! Worked examples with known answers. `catom selftest` runs them.

use std::collections::BTreeSet;

use crate::abstraction::{build_abstract, simplified_dnf, PrefixedPowerSet};
use crate::analysis::{dependency_graph, translate_normal, Edge, Sign};
use crate::fixpoint::{fixpoint_stable, to_positive_basic, FixpointVerdict};
use crate::frontend::{parse_catom, parse_program};
use crate::ordinary;
use crate::program::{atom_set, format_set, Atom, AtomSet, Interpretation, Program};
use crate::reduct::{gl_reduct, is_stable, least_model, stable_models, SpecialAtom};
use crate::semantics::{is_minimal_model, is_model};

pub const SUM_AGGREGATE: &str = include_str!("../examples/sum.lp");
pub const DISJUNCTION: &str = include_str!("../examples/disjunction.lp");
pub const SCHEDULE: &str = include_str!("../examples/schedule.lp");
pub const SUM_DISJUNCTION: &str = include_str!("../examples/sum_disjunction.lp");
pub const NONMINIMAL: &str = include_str!("../examples/nonminimal.lp");
pub const TAUTOLOGY: &str = include_str!("../examples/tautology.lp");
pub const EDGES: &str = include_str!("../examples/edges.lp");
pub const EVENLOOP: &str = include_str!("../examples/evenloop.lp");
pub const UNFOUNDED: &str = include_str!("../examples/unfounded.lp");

type Outcome = std::result::Result<(), String>;

pub struct GoldenCase {
    pub name: &'static str,
    check: fn() -> Outcome,
}

impl GoldenCase {
    pub fn run(&self) -> Outcome {
        (self.check)()
    }
}

pub fn cases() -> &'static [GoldenCase] {
    &CASES
}

static CASES: [GoldenCase; 13] = [
    GoldenCase {
        name: "abstract-three-lattices",
        check: abstract_three_lattices,
    },
    GoldenCase {
        name: "dnf-disjunction",
        check: dnf_disjunction,
    },
    GoldenCase {
        name: "dnf-two-disjuncts",
        check: dnf_two_disjuncts,
    },
    GoldenCase {
        name: "sum-aggregate-reduct",
        check: sum_aggregate_reduct,
    },
    GoldenCase {
        name: "disjunctive-heads",
        check: disjunctive_heads,
    },
    GoldenCase {
        name: "six-schedules",
        check: six_schedules,
    },
    GoldenCase {
        name: "sum-disjunction",
        check: sum_disjunction,
    },
    GoldenCase {
        name: "non-minimal-model",
        check: non_minimal_model,
    },
    GoldenCase {
        name: "translation-no-models",
        check: translation_no_models,
    },
    GoldenCase {
        name: "translation-tautology",
        check: translation_tautology,
    },
    GoldenCase {
        name: "lattice-edges",
        check: lattice_edges,
    },
    GoldenCase {
        name: "even-loop",
        check: even_loop,
    },
    GoldenCase {
        name: "unfounded-model",
        check: unfounded_model,
    },
];

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn ensure_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Outcome {
    ensure(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

fn program(src: &str) -> std::result::Result<Program, String> {
    parse_program(src).map_err(|e| e.to_string())
}

fn set(names: &[&str]) -> AtomSet {
    atom_set(names.iter().copied()).expect("valid names")
}

fn models(sets: &[&[&str]]) -> Vec<String> {
    let mut v: Vec<AtomSet> = sets.iter().map(|s| set(s)).collect();
    v.sort();
    v.iter().map(format_set).collect()
}

fn stable(p: &Program) -> std::result::Result<Vec<String>, String> {
    Ok(stable_models(p)
        .map_err(|e| e.to_string())?
        .iter()
        .map(format_set)
        .collect())
}

fn lattice(base: &[&str], free: &[&str]) -> PrefixedPowerSet {
    PrefixedPowerSet::new(set(base), set(free)).expect("disjoint parts")
}

fn abstract_three_lattices() -> Outcome {
    let c = parse_catom("[a, b, c, d : {}, {b}, {c}, {a, c}, {b, c}, {c, d}, {a, b, c}, {b, c, d}]")
        .map_err(|e| e.to_string())?;
    let abs = build_abstract(&c).map_err(|e| e.to_string())?;
    ensure_eq(
        abs.lattices().to_vec(),
        vec![
            lattice(&[], &["b", "c"]),
            lattice(&["c"], &["a", "b"]),
            lattice(&["c"], &["b", "d"]),
        ],
        "A*",
    )
}

fn dnf_disjunction() -> Outcome {
    let c = parse_catom("[a, b : {a}, {b}, {a, b}]").map_err(|e| e.to_string())?;
    let f = simplified_dnf(&build_abstract(&c).map_err(|e| e.to_string())?);
    ensure_eq(f.to_string().as_str(), "(a) | (b)", "simplified DNF")
}

fn dnf_two_disjuncts() -> Outcome {
    let c = parse_catom("[a, b, c, d : {d}, {a}, {a, b}, {a, c}, {a, b, c}]").map_err(|e| e.to_string())?;
    let f = simplified_dnf(&build_abstract(&c).map_err(|e| e.to_string())?);
    ensure_eq(
        f.to_string().as_str(),
        "(a & not d) | (d & not a & not b & not c)",
        "simplified DNF",
    )
}

fn sum_aggregate_reduct() -> Outcome {
    let p = program(SUM_AGGREGATE)?;
    let i = set(&["p(-1)", "p(1)", "p(2)"]);
    let r = gl_reduct(&p, &i).map_err(|e| e.to_string())?;
    let mut text = r.to_string();
    for g in &r.gamma {
        ensure(matches!(SpecialAtom::parse(g), Some(SpecialAtom::Theta(_))), || {
            format!("unexpected {g}")
        })?;
        text = text.replace(g.name(), "theta");
    }
    ensure_eq(
        text.as_str(),
        "p(1).\np(-1) :- p(2).\np(2) :- theta.\ntheta :- p(2).\n",
        "reduct",
    )?;
    let least = least_model(&r.program).map_err(|e| e.to_string())?;
    ensure_eq(format_set(&least), format_set(&set(&["p(1)"])), "least model")?;
    ensure_eq(stable(&p)?, Vec::new(), "stable models")
}

fn disjunctive_heads() -> Outcome {
    let p = program(DISJUNCTION)?;
    ensure(!is_stable(&p, &set(&["a", "b"])).map_err(|e| e.to_string())?, || {
        "{a, b} accepted".into()
    })?;
    ensure(is_stable(&p, &set(&["a"])).map_err(|e| e.to_string())?, || {
        "{a} rejected".into()
    })
}

fn six_schedules() -> Outcome {
    let p = program(SCHEDULE)?;
    ensure_eq(
        stable(&p)?,
        models(&[
            &[],
            &["a", "b"],
            &["a", "c"],
            &["a", "d", "e"],
            &["a", "d", "f"],
            &["a", "e", "f"],
        ]),
        "stable models",
    )
}

fn sum_disjunction() -> Outcome {
    let p = program(SUM_DISJUNCTION)?;
    ensure_eq(
        stable(&p)?,
        models(&[&["p(1)", "p(2)"], &["p(-1)", "p(1)"], &["p(-1)"]]),
        "stable models",
    )
}

fn non_minimal_model() -> Outcome {
    let p = program(NONMINIMAL)?;
    let ab = set(&["a", "b"]);
    ensure_eq(stable(&p)?, models(&[&["a"], &["b"], &["a", "b"]]), "stable models")?;
    ensure(is_model(&ab, &p) && !is_minimal_model(&ab, &p), || {
        "{a, b} should be a non-minimal model".into()
    })
}

fn translation_no_models() -> Outcome {
    let pn = translate_normal(&program(SUM_AGGREGATE)?).map_err(|e| e.to_string())?;
    let found = ordinary::stable_models(&pn).map_err(|e| e.to_string())?;
    ensure_eq(found.len(), 0, "stable models of the translation")
}

fn translation_tautology() -> Outcome {
    let p = program(TAUTOLOGY)?;
    let at = p.atoms();
    let pn = translate_normal(&p).map_err(|e| e.to_string())?;
    let found: Vec<String> = ordinary::stable_models(&pn)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|m| format_set(&m.intersection(&at).cloned().collect()))
        .collect();
    ensure_eq(found, models(&[&["a"]]), "projected stable models")
}

fn lattice_edges() -> Outcome {
    let g = dependency_graph(&program(EDGES)?).map_err(|e| e.to_string())?;
    let edge = |from: &str, to: &str, sign| Edge {
        from: Atom::new(from).expect("name"),
        to: Atom::new(to).expect("name"),
        sign,
    };
    let want: BTreeSet<Edge> = [
        edge("a", "a", Sign::Negative),
        edge("a", "c", Sign::Negative),
        edge("a", "b", Sign::Positive),
    ]
    .into_iter()
    .collect();
    ensure_eq(g.edges, want, "edges")
}

fn even_loop() -> Outcome {
    let p = program(EVENLOOP)?;
    ensure_eq(stable(&p)?, models(&[&["a", "p"], &["b", "p"]]), "stable models")
}

fn unfounded_model() -> Outcome {
    let p = program(UNFOUNDED)?;
    let i: Interpretation = set(&["b", "c", "d"]);
    let lang: Vec<Atom> = p.language().into_iter().collect();
    let all_models: Vec<String> = (0u32..1 << lang.len())
        .map(|m| {
            (0..lang.len())
                .filter(|k| m & (1 << k) != 0)
                .map(|k| lang[k].clone())
                .collect::<AtomSet>()
        })
        .filter(|s| is_model(s, &p))
        .map(|s| format_set(&s))
        .collect();
    ensure_eq(all_models, vec![format_set(&i)], "models")?;
    ensure(!is_stable(&p, &i).map_err(|e| e.to_string())?, || {
        "reduct accepts {b, c, d}".into()
    })?;
    let q = to_positive_basic(&p).map_err(|e| e.to_string())?;
    let verdict = fixpoint_stable(&q, &i).map_err(|e| e.to_string())?;
    ensure_eq(verdict, FixpointVerdict::NotStable, "fixpoint verdict")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::{Duration, Instant};

    #[test]
    fn every_case_passes_quickly() {
        for c in cases() {
            let start = Instant::now();
            assert_eq!(c.run(), Ok(()), "{}", c.name);
            assert!(
                start.elapsed() < Duration::from_secs(1),
                "{} took {:?}",
                c.name,
                start.elapsed()
            );
        }
    }

    #[test]
    fn sources_round_trip() {
        for src in [
            SUM_AGGREGATE,
            DISJUNCTION,
            SCHEDULE,
            SUM_DISJUNCTION,
            NONMINIMAL,
            TAUTOLOGY,
            EDGES,
            EVENLOOP,
            UNFOUNDED,
        ] {
            let p = parse_program(src).unwrap();
            assert_eq!(parse_program(&p.to_string()).unwrap(), p);
        }
    }
}
