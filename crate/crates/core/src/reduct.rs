// SPDX-License-Identifier: Apache-2.0

//! The generalized Gelfond-Lifschitz reduct and stable models.
//!
//! `P^I` is a positive disjunctive program over the atoms of `P` plus the
//! special atoms `θ_A`, `β_A` and `⊥`. `θ_A`/`β_A` are named after a hash of
//! the canonical c-atom, so repeated occurrences of a c-atom share them.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::abstraction::{build_abstract, satisfiable_sets, AbstractCAtom};
use crate::error::{Error, Result};
use crate::program::{Atom, AtomSet, CAtom, HeadElement, Interpretation, Literal, Program};
use crate::sat::{self, Cnf, Lit};
use crate::semantics::satisfies_catom;

/// Largest atom count accepted by [`minimal_models`].
pub const MINIMAL_MODELS_LIMIT: usize = 22;

/// Largest language accepted by [`stable_models`].
pub const CANDIDATE_LIMIT: usize = 20;

/// Stable identifier of a canonical c-atom (FNV-1a of its printed form).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CAtomId(pub u64);

impl CAtomId {
    pub fn of(a: &CAtom) -> CAtomId {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in a.to_string().bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        CAtomId(h)
    }
}

impl fmt::Display for CAtomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SpecialAtom {
    Theta(CAtomId),
    Beta(CAtomId),
    Bottom,
}

impl SpecialAtom {
    pub fn atom(self) -> Atom {
        Atom::reserved(self.to_string())
    }

    /// Recognizes a rendered special atom.
    pub fn parse(a: &Atom) -> Option<SpecialAtom> {
        let n = a.name();
        let id = |s: &str| u64::from_str_radix(s, 16).ok().map(CAtomId);
        if n == "__bot" {
            Some(SpecialAtom::Bottom)
        } else if let Some(h) = n.strip_prefix("__theta_") {
            id(h).map(SpecialAtom::Theta)
        } else if let Some(h) = n.strip_prefix("__beta_") {
            id(h).map(SpecialAtom::Beta)
        } else {
            None
        }
    }
}

impl fmt::Display for SpecialAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialAtom::Theta(id) => write!(f, "__theta_{id}"),
            SpecialAtom::Beta(id) => write!(f, "__beta_{id}"),
            SpecialAtom::Bottom => f.write_str("__bot"),
        }
    }
}

/// `h_1 ∨ … ∨ h_k ← b_1, …, b_m` over plain atoms.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct PositiveRule {
    pub head: Vec<Atom>,
    pub body: Vec<Atom>,
}

impl fmt::Display for PositiveRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<&str> = self.head.iter().map(Atom::name).collect();
        f.write_str(&head.join(" | "))?;
        if !self.body.is_empty() {
            let body: Vec<&str> = self.body.iter().map(Atom::name).collect();
            write!(f, " :- {}", body.join(", "))?;
        }
        f.write_str(".")
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct PositiveProgram {
    pub rules: Vec<PositiveRule>,
}

impl PositiveProgram {
    /// Reads a positive ordinary program: heads are atoms, elementary
    /// c-atoms or `⊥`, bodies are atoms or elementary c-atoms.
    pub fn from_program(p: &Program) -> Result<PositiveProgram> {
        let class = "positive ordinary";
        let rules = p
            .rules()
            .iter()
            .map(|r| {
                let head = r
                    .head()
                    .iter()
                    .map(|h| {
                        if h.is_bottom() {
                            Ok(SpecialAtom::Bottom.atom())
                        } else {
                            h.as_elementary()
                                .cloned()
                                .ok_or_else(|| Error::not_in_class(class, format!("head of `{r}`")))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                let body = r
                    .body()
                    .iter()
                    .map(|l| match l {
                        Literal::PositiveAtom(a) => Ok(a.clone()),
                        Literal::Constraint(c) if c.as_elementary().is_some() => Ok(c.as_elementary().unwrap().clone()),
                        _ => Err(Error::not_in_class(class, format!("body literal `{l}`"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(PositiveRule { head, body })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PositiveProgram { rules })
    }

    pub fn atoms(&self) -> AtomSet {
        self.rules
            .iter()
            .flat_map(|r| r.head.iter().chain(&r.body))
            .cloned()
            .collect()
    }

    pub fn is_normal(&self) -> bool {
        self.rules.iter().all(|r| r.head.len() <= 1)
    }

    pub fn is_model(&self, m: &Interpretation) -> bool {
        self.rules
            .iter()
            .all(|r| !r.body.iter().all(|b| m.contains(b)) || r.head.iter().any(|h| m.contains(h)))
    }
}

impl fmt::Display for PositiveProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// `P^I` together with `Γ`, the θ/β atoms it introduces.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct ReductProgram {
    pub program: PositiveProgram,
    pub gamma: AtomSet,
}

impl fmt::Display for ReductProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.program)
    }
}

struct Entry {
    id: CAtomId,
    abs: AbstractCAtom,
}

/// Per-program data reused across interpretations.
pub(crate) struct Reducer<'p> {
    program: &'p Program,
    catoms: HashMap<&'p CAtom, Entry>,
    bound: usize,
}

impl<'p> Reducer<'p> {
    pub fn new(program: &'p Program) -> Result<Self> {
        let mut catoms = HashMap::new();
        let (mut max_abs, mut max_dom) = (0, 0);
        for r in program.rules() {
            if r.body().iter().any(|l| matches!(l, Literal::NegatedConstraint(_))) {
                return Err(Error::NegatedConstraint);
            }
        }
        for c in program.catoms() {
            let abs = build_abstract(c)?;
            max_abs = max_abs.max(abs.len());
            max_dom = max_dom.max(c.domain().len());
            catoms.insert(
                c,
                Entry {
                    id: CAtomId::of(c),
                    abs,
                },
            );
        }
        let bound = program.rules().len() + catoms.len() * (max_abs + max_dom + 1);
        Ok(Reducer { program, catoms, bound })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn reduct(&self, i: &Interpretation) -> ReductProgram {
        let bot = SpecialAtom::Bottom.atom();
        let mut rules = Vec::new();
        let mut introduced: HashSet<PositiveRule> = HashSet::new();
        let mut gamma = AtomSet::new();

        for r in self.program.rules() {
            let keep = r.body().iter().all(|l| match l {
                Literal::NegativeAtom(a) => !i.contains(a),
                Literal::Constraint(c) => satisfies_catom(i, c),
                _ => true,
            });
            if !keep {
                continue;
            }
            let mut extra = Vec::new();

            let mut head: Vec<Atom> = Vec::with_capacity(r.head().len());
            for h in r.head() {
                let atom = match h {
                    HeadElement::HeadAtom(a) => a.clone(),
                    HeadElement::HeadConstraint(c) if !satisfies_catom(i, c) => bot.clone(),
                    HeadElement::HeadConstraint(c) => {
                        let beta = SpecialAtom::Beta(self.catoms[c].id).atom();
                        let t: Vec<Atom> = c.domain().iter().filter(|a| i.contains(*a)).cloned().collect();
                        for b in &t {
                            extra.push(PositiveRule {
                                head: vec![b.clone()],
                                body: vec![beta.clone()],
                            });
                        }
                        for b in c.domain().iter().filter(|a| !i.contains(*a)) {
                            extra.push(PositiveRule {
                                head: vec![bot.clone()],
                                body: vec![b.clone(), beta.clone()],
                            });
                        }
                        extra.push(PositiveRule {
                            head: vec![beta.clone()],
                            body: t,
                        });
                        gamma.insert(beta.clone());
                        beta
                    }
                };
                if !head.contains(&atom) {
                    head.push(atom);
                }
            }
            if head.len() > 1 {
                head.retain(|a| *a != bot);
            }

            let mut body = Vec::new();
            for l in r.body() {
                match l {
                    Literal::PositiveAtom(a) => body.push(a.clone()),
                    Literal::NegativeAtom(_) => {}
                    Literal::Constraint(c) => {
                        let e = &self.catoms[c];
                        let theta = SpecialAtom::Theta(e.id).atom();
                        for w in satisfiable_sets(&e.abs, i) {
                            extra.push(PositiveRule {
                                head: vec![theta.clone()],
                                body: w.into_iter().collect(),
                            });
                        }
                        gamma.insert(theta.clone());
                        body.push(theta);
                    }
                    Literal::NegatedConstraint(_) => unreachable!("rejected in Reducer::new"),
                }
            }

            rules.push(PositiveRule { head, body });
            for e in extra {
                if introduced.insert(e.clone()) {
                    rules.push(e);
                }
            }
        }
        let out = ReductProgram {
            program: PositiveProgram { rules },
            gamma,
        };
        assert!(
            out.program.rules.len() <= self.bound,
            "reduct has {} rules, bound is {}",
            out.program.rules.len(),
            self.bound
        );
        out
    }

    pub fn is_stable(&self, i: &Interpretation) -> bool {
        if i.iter().any(Atom::is_reserved) {
            return false;
        }
        let r = self.reduct(i);
        stable_in_reduct(&r, i)
    }
}

/// `P^I`. Fails on negated c-atoms in bodies and on c-atoms whose domain
/// is too large to abstract.
pub fn gl_reduct(p: &Program, i: &Interpretation) -> Result<ReductProgram> {
    Ok(Reducer::new(p)?.reduct(i))
}

/// `|P| + n·(M_{A*_c} + M_{A_d} + 1)` for the `n` distinct c-atoms of `P`.
pub fn reduct_size_bound(p: &Program) -> Result<usize> {
    Ok(Reducer::new(p)?.bound())
}

/// The least model of a positive normal program.
pub fn least_model(p: &PositiveProgram) -> Result<Interpretation> {
    if let Some(r) = p.rules.iter().find(|r| r.head.len() > 1) {
        return Err(Error::not_in_class("normal", format!("disjunctive rule `{r}`")));
    }
    let mut m = Interpretation::new();
    loop {
        let before = m.len();
        for r in &p.rules {
            if r.body.iter().all(|b| m.contains(b)) {
                m.extend(r.head.iter().cloned());
            }
        }
        if m.len() == before {
            return Ok(m);
        }
    }
}

struct Encoding {
    atoms: Vec<Atom>,
    cnf: Cnf,
}

impl Encoding {
    fn new(p: &PositiveProgram) -> Encoding {
        let atoms: Vec<Atom> = p.atoms().into_iter().collect();
        let idx = |a: &Atom| atoms.binary_search(a).unwrap();
        let mut cnf = Cnf::new(atoms.len());
        for r in &p.rules {
            cnf.add(
                r.body
                    .iter()
                    .map(|b| Lit::neg(idx(b)))
                    .chain(r.head.iter().map(|h| Lit::pos(idx(h))))
                    .collect(),
            );
        }
        Encoding { atoms, cnf }
    }

    fn decode(&self, m: &[bool]) -> Interpretation {
        self.atoms
            .iter()
            .zip(m)
            .filter(|(_, &v)| v)
            .map(|(a, _)| a.clone())
            .collect()
    }
}

/// All subset-minimal models, sorted.
pub fn minimal_models(p: &PositiveProgram) -> Result<Vec<Interpretation>> {
    let n = p.atoms().len();
    if n > MINIMAL_MODELS_LIMIT {
        return Err(Error::guard("positive program atom count", n, MINIMAL_MODELS_LIMIT));
    }
    let mut enc = Encoding::new(p);
    let free = vec![None; n];
    let frozen = vec![false; n];
    let mut out = Vec::new();
    while let Some(m) = enc.cnf.solve(&free) {
        let m = sat::minimize(&enc.cnf, m, &frozen);
        // later minimal models are never supersets of this one
        enc.cnf.add(
            m.iter()
                .enumerate()
                .filter(|(_, &v)| v)
                .map(|(k, _)| Lit::neg(k))
                .collect(),
        );
        out.push(enc.decode(&m));
    }
    out.sort();
    Ok(out)
}

/// Whether some minimal model `M` of `r.program` has `M \ Γ = I`.
fn stable_in_reduct(r: &ReductProgram, i: &Interpretation) -> bool {
    let p = &r.program;
    if p.is_normal() {
        let m = least_model(p).expect("normal reduct");
        return m.iter().filter(|a| !r.gamma.contains(*a)).eq(i.iter());
    }
    let enc = Encoding::new(p);
    if !i.iter().all(|a| enc.atoms.binary_search(a).is_ok()) {
        return false;
    }
    let is_gamma: Vec<bool> = enc.atoms.iter().map(|a| r.gamma.contains(a)).collect();
    let fixed: Vec<Option<bool>> = enc
        .atoms
        .iter()
        .zip(&is_gamma)
        .map(|(a, &g)| if g { None } else { Some(i.contains(a)) })
        .collect();
    let none_frozen = vec![false; enc.atoms.len()];
    let mut cnf = enc.cnf.clone();
    while let Some(m) = cnf.solve(&fixed) {
        // keep I fixed and shrink the Γ part first
        let m = sat::minimize(&cnf, m, &is_gamma.iter().map(|g| !g).collect::<Vec<_>>());
        if sat::smaller_model(&enc.cnf, &m, &none_frozen).is_none() {
            return true;
        }
        // every candidate whose Γ part contains this one is not minimal either
        let g: Vec<Lit> = (0..m.len()).filter(|&k| is_gamma[k] && m[k]).map(Lit::neg).collect();
        if g.is_empty() {
            return false;
        }
        cnf.add(g);
    }
    false
}

/// Whether `I` is a stable model of `P`: `I = M \ Γ` for a minimal model
/// `M` of `P^I`.
pub fn is_stable(p: &Program, i: &Interpretation) -> Result<bool> {
    Ok(Reducer::new(p)?.is_stable(i))
}

fn candidates(p: &Program) -> Result<Vec<Atom>> {
    let lang: Vec<Atom> = p.language().into_iter().collect();
    if lang.len() > CANDIDATE_LIMIT {
        return Err(Error::guard("program language", lang.len(), CANDIDATE_LIMIT));
    }
    Ok(lang)
}

fn subset(lang: &[Atom], m: u64) -> Interpretation {
    lang.iter()
        .enumerate()
        .filter(|(k, _)| m & (1 << k) != 0)
        .map(|(_, a)| a.clone())
        .collect()
}

/// All stable models over subsets of `language(P)`, sorted.
pub fn stable_models(p: &Program) -> Result<Vec<Interpretation>> {
    let red = Reducer::new(p)?;
    let lang = candidates(p)?;
    let out: BTreeSet<Interpretation> = (0..1u64 << lang.len())
        .map(|m| subset(&lang, m))
        .filter(|i| red.is_stable(i))
        .collect();
    Ok(out.into_iter().collect())
}

/// [`stable_models`] spread over `jobs` worker threads. The result is the
/// same as the sequential one.
pub fn stable_models_parallel(p: &Program, jobs: usize) -> Result<Vec<Interpretation>> {
    if jobs <= 1 {
        return stable_models(p);
    }
    let red = Reducer::new(p)?;
    let lang = candidates(p)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let out: BTreeSet<Interpretation> = pool.install(|| {
        (0..1u64 << lang.len())
            .into_par_iter()
            .map(|m| subset(&lang, m))
            .filter(|i| red.is_stable(i))
            .collect()
    });
    Ok(out.into_iter().collect())
}
