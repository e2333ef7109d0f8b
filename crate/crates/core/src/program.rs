// SPDX-License-Identifier: Apache-2.0

//! Atoms, constraint atoms, rules and programs.
//!
//! Every value here is canonical after construction: atom sets are sorted,
//! a c-atom stores its domain as a sorted vector and its admissible
//! solutions as a sorted vector of bitmasks over that domain. Two c-atoms
//! that denote the same pair `(A_d, A_c)` are therefore `==` and hash alike.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Name prefixes reserved for atoms introduced by program transformations.
pub const RESERVED_PREFIXES: [&str; 4] = ["__theta_", "__beta_", "__bot", "__f_"];

/// Largest domain a c-atom may have (solutions are stored as `u64` masks).
pub const MAX_DOMAIN: usize = 64;

/// Largest domain for operations that enumerate `2^{A_d}`.
pub const POWERSET_LIMIT: usize = 20;

pub type Mask = u64;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    /// Creates a user atom. Names must be nonempty, free of whitespace and
    /// must not start with one of [`RESERVED_PREFIXES`].
    pub fn new(name: &str) -> Result<Atom> {
        if name.is_empty() {
            return Err(Error::InvalidAtom {
                name: name.into(),
                reason: "empty name",
            });
        }
        if name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidAtom {
                name: name.into(),
                reason: "contains whitespace",
            });
        }
        if RESERVED_PREFIXES.iter().any(|p| name.starts_with(p)) {
            return Err(Error::InvalidAtom {
                name: name.into(),
                reason: "reserved prefix",
            });
        }
        Ok(Atom(name.into()))
    }

    pub(crate) fn reserved(name: String) -> Atom {
        debug_assert!(RESERVED_PREFIXES.iter().any(|p| name.starts_with(p)));
        Atom(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn is_reserved(&self) -> bool {
        RESERVED_PREFIXES.iter().any(|p| self.0.starts_with(p))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Atom {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

pub type AtomSet = BTreeSet<Atom>;

/// A set of atoms read as the atoms that are true.
pub type Interpretation = AtomSet;

/// Parses a list of atom names into a set. Convenience for tests and examples.
pub fn atom_set<'a>(names: impl IntoIterator<Item = &'a str>) -> Result<AtomSet> {
    names.into_iter().map(Atom::new).collect()
}

/// Parses `a, p(1,2), b`, splitting at commas outside parentheses. Blank
/// entries are skipped, so `""` is the empty set.
pub fn parse_atom_list(text: &str) -> Result<AtomSet> {
    let mut names = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                names.push(&text[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    names.push(&text[start..]);
    names
        .into_iter()
        .map(str::trim)
        .filter(|n| !n.is_empty())
        .map(Atom::new)
        .collect()
}

/// `{a, b}`
pub fn format_set(s: &AtomSet) -> String {
    let names: Vec<&str> = s.iter().map(Atom::name).collect();
    format!("{{{}}}", names.join(", "))
}

pub(crate) fn mask_of(domain: &[Atom], set: &AtomSet) -> Mask {
    domain
        .iter()
        .enumerate()
        .filter(|(_, a)| set.contains(*a))
        .fold(0, |m, (i, _)| m | (1 << i))
}

pub(crate) fn set_of(domain: &[Atom], mask: Mask) -> AtomSet {
    domain
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, a)| a.clone())
        .collect()
}

/// Iterates over all submasks of `mask`, including `0` and `mask` itself.
pub(crate) fn submasks(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// An abstract constraint atom `(A_d, A_c)` in explicit power-set form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CAtom {
    domain: Vec<Atom>,
    solutions: Vec<Mask>,
}

impl CAtom {
    pub fn new<D, C, S>(domain: D, solutions: C) -> Result<CAtom>
    where
        D: IntoIterator<Item = Atom>,
        C: IntoIterator<Item = S>,
        S: IntoIterator<Item = Atom>,
    {
        let domain: Vec<Atom> = domain.into_iter().collect::<AtomSet>().into_iter().collect();
        if domain.len() > MAX_DOMAIN {
            return Err(Error::guard("c-atom domain", domain.len(), MAX_DOMAIN));
        }
        let mut masks = Vec::new();
        for sol in solutions {
            let mut m: Mask = 0;
            for a in sol {
                match domain.binary_search(&a) {
                    Ok(i) => m |= 1 << i,
                    Err(_) => {
                        return Err(Error::MalformedCAtom(format!(
                            "solution atom `{a}` is not in the domain"
                        )))
                    }
                }
            }
            masks.push(m);
        }
        Ok(CAtom::from_masks(domain, masks))
    }

    /// `domain` must be sorted and duplicate free.
    pub(crate) fn from_masks(domain: Vec<Atom>, mut solutions: Vec<Mask>) -> CAtom {
        debug_assert!(domain.windows(2).all(|w| w[0] < w[1]));
        solutions.sort_unstable();
        solutions.dedup();
        CAtom { domain, solutions }
    }

    /// `({a}, {{a}})`
    pub fn elementary(a: Atom) -> CAtom {
        CAtom::from_masks(vec![a], vec![1])
    }

    /// `({a}, {∅})`, the c-atom reading of `not a`.
    pub fn negated_elementary(a: Atom) -> CAtom {
        CAtom::from_masks(vec![a], vec![0])
    }

    /// `(∅, ∅)`, satisfied by no interpretation.
    pub fn bottom() -> CAtom {
        CAtom::from_masks(Vec::new(), Vec::new())
    }

    pub fn domain(&self) -> &[Atom] {
        &self.domain
    }

    pub fn domain_set(&self) -> AtomSet {
        self.domain.iter().cloned().collect()
    }

    pub fn masks(&self) -> &[Mask] {
        &self.solutions
    }

    pub fn solutions(&self) -> impl Iterator<Item = AtomSet> + '_ {
        self.solutions.iter().map(|&m| set_of(&self.domain, m))
    }

    pub fn num_solutions(&self) -> usize {
        self.solutions.len()
    }

    pub fn full_mask(&self) -> Mask {
        if self.domain.len() == 64 {
            Mask::MAX
        } else {
            (1 << self.domain.len()) - 1
        }
    }

    /// Mask of `set ∩ A_d`.
    pub fn mask_of(&self, set: &AtomSet) -> Mask {
        mask_of(&self.domain, set)
    }

    pub fn set_of(&self, mask: Mask) -> AtomSet {
        set_of(&self.domain, mask)
    }

    pub fn contains_mask(&self, mask: Mask) -> bool {
        self.solutions.binary_search(&mask).is_ok()
    }

    pub fn contains(&self, set: &AtomSet) -> bool {
        set.iter().all(|a| self.domain.binary_search(a).is_ok()) && self.contains_mask(self.mask_of(set))
    }

    /// Returns the atom if this is `({a}, {{a}})`.
    pub fn as_elementary(&self) -> Option<&Atom> {
        (self.domain.len() == 1 && self.solutions == [1]).then(|| &self.domain[0])
    }

    /// True when `A_c = ∅`, i.e. the c-atom is some `⊥`.
    pub fn is_unsatisfiable(&self) -> bool {
        self.solutions.is_empty()
    }
}

impl fmt::Display for CAtom {
    /// Text form `[a, b : {}, {a}, {a, b}]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        write_list(f, &self.domain)?;
        f.write_str(if self.domain.is_empty() { ": " } else { " : " })?;
        let mut sets: Vec<AtomSet> = self.solutions().collect();
        sets.sort();
        for (k, s) in sets.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str("{")?;
            write_list(f, s)?;
            f.write_str("}")?;
        }
        f.write_str("]")
    }
}

pub(crate) fn write_list<'a>(f: &mut fmt::Formatter<'_>, atoms: impl IntoIterator<Item = &'a Atom>) -> fmt::Result {
    for (k, a) in atoms.into_iter().enumerate() {
        if k > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Literal {
    PositiveAtom(Atom),
    NegativeAtom(Atom),
    Constraint(CAtom),
    NegatedConstraint(CAtom),
}

impl Literal {
    pub fn atoms(&self) -> Vec<&Atom> {
        match self {
            Literal::PositiveAtom(a) | Literal::NegativeAtom(a) => vec![a],
            Literal::Constraint(c) | Literal::NegatedConstraint(c) => c.domain().iter().collect(),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Literal::NegativeAtom(_) | Literal::NegatedConstraint(_))
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::PositiveAtom(a) => write!(f, "{a}"),
            Literal::NegativeAtom(a) => write!(f, "not {a}"),
            Literal::Constraint(c) => write!(f, "{c}"),
            Literal::NegatedConstraint(c) => write!(f, "not {c}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum HeadElement {
    HeadAtom(Atom),
    HeadConstraint(CAtom),
}

impl HeadElement {
    pub fn bottom() -> HeadElement {
        HeadElement::HeadConstraint(CAtom::bottom())
    }

    /// The atom of an elementary head, in either spelling.
    pub fn as_elementary(&self) -> Option<&Atom> {
        match self {
            HeadElement::HeadAtom(a) => Some(a),
            HeadElement::HeadConstraint(c) => c.as_elementary(),
        }
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, HeadElement::HeadConstraint(c) if c.is_unsatisfiable())
    }

    pub fn atoms(&self) -> Vec<&Atom> {
        match self {
            HeadElement::HeadAtom(a) => vec![a],
            HeadElement::HeadConstraint(c) => c.domain().iter().collect(),
        }
    }
}

impl fmt::Display for HeadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeadElement::HeadAtom(a) => write!(f, "{a}"),
            HeadElement::HeadConstraint(c) if c.domain().is_empty() && c.is_unsatisfiable() => f.write_str("bot"),
            HeadElement::HeadConstraint(c) => write!(f, "{c}"),
        }
    }
}

/// A disjunctive rule `H_1 ∨ … ∨ H_k ← L_1, …, L_m`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rule {
    head: Vec<HeadElement>,
    body: Vec<Literal>,
}

impl Rule {
    pub fn new(head: Vec<HeadElement>, body: Vec<Literal>) -> Result<Rule> {
        if head.is_empty() {
            return Err(Error::not_in_class("well formed", "rule with an empty head"));
        }
        Ok(Rule { head, body })
    }

    pub fn fact(a: Atom) -> Rule {
        Rule {
            head: vec![HeadElement::HeadAtom(a)],
            body: Vec::new(),
        }
    }

    /// `h ← body` with an ordinary head atom.
    pub fn normal(h: Atom, body: Vec<Literal>) -> Rule {
        Rule {
            head: vec![HeadElement::HeadAtom(h)],
            body,
        }
    }

    pub fn head(&self) -> &[HeadElement] {
        &self.head
    }

    pub fn body(&self) -> &[Literal] {
        &self.body
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.head
            .iter()
            .flat_map(HeadElement::atoms)
            .chain(self.body.iter().flat_map(Literal::atoms))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, h) in self.head.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{h}")?;
        }
        if !self.body.is_empty() {
            f.write_str(" :- ")?;
            for (k, l) in self.body.iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{l}")?;
            }
        }
        f.write_str(".")
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Program {
    rules: Vec<Rule>,
    declared: AtomSet,
}

impl Program {
    pub fn new(rules: Vec<Rule>) -> Program {
        Program {
            rules,
            declared: AtomSet::new(),
        }
    }

    /// Extends the language of the program beyond the atoms in its rules.
    pub fn with_declared(mut self, atoms: impl IntoIterator<Item = Atom>) -> Program {
        self.declared.extend(atoms);
        self
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn declared(&self) -> &AtomSet {
        &self.declared
    }

    /// `At(P)`: the atoms occurring in rules, including c-atom domains.
    pub fn atoms(&self) -> AtomSet {
        self.rules.iter().flat_map(Rule::atoms).cloned().collect()
    }

    /// `At(P)` together with the declared atoms.
    pub fn language(&self) -> AtomSet {
        let mut l = self.atoms();
        l.extend(self.declared.iter().cloned());
        l
    }

    /// All distinct c-atoms occurring in the program, in first-occurrence order.
    pub fn catoms(&self) -> Vec<&CAtom> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for r in &self.rules {
            let heads = r.head.iter().filter_map(|h| match h {
                HeadElement::HeadConstraint(c) => Some(c),
                HeadElement::HeadAtom(_) => None,
            });
            let bodies = r.body.iter().filter_map(|l| match l {
                Literal::Constraint(c) | Literal::NegatedConstraint(c) => Some(c),
                _ => None,
            });
            for c in heads.chain(bodies) {
                if seen.insert(c) {
                    out.push(c);
                }
            }
        }
        out
    }

    pub fn classify(&self) -> ProgramClass {
        classify_program(self)
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.declared.is_empty() {
            f.write_str("#atoms ")?;
            write_list(f, &self.declared)?;
            f.write_str(".\n")?;
        }
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Syntactic program classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct ProgramClass {
    /// Every rule has exactly one head element.
    pub normal_constraint: bool,
    /// No rule body contains a negative literal.
    pub positive_constraint: bool,
    /// Positive, and every head is a single elementary c-atom.
    pub positive_basic: bool,
    /// Every head is a single element that is `⊥` or elementary.
    pub basic: bool,
    /// Normal constraint program whose c-atoms are all elementary.
    pub normal: bool,
    /// Disjunctive program whose c-atoms are all elementary.
    pub disjunctive_ordinary: bool,
}

fn literal_is_elementary(l: &Literal) -> bool {
    match l {
        Literal::PositiveAtom(_) | Literal::NegativeAtom(_) => true,
        Literal::Constraint(c) | Literal::NegatedConstraint(c) => c.as_elementary().is_some(),
    }
}

pub fn classify_program(p: &Program) -> ProgramClass {
    let rules = p.rules();
    let single_head = rules.iter().all(|r| r.head.len() == 1);
    let positive = rules.iter().all(|r| !r.body.iter().any(Literal::is_negative));
    let elementary_heads = rules.iter().all(|r| r.head.iter().all(|h| h.as_elementary().is_some()));
    let elementary_bodies = rules.iter().all(|r| r.body.iter().all(literal_is_elementary));
    let basic_heads = rules
        .iter()
        .all(|r| r.head.iter().all(|h| h.is_bottom() || h.as_elementary().is_some()));
    ProgramClass {
        normal_constraint: single_head,
        positive_constraint: positive,
        positive_basic: positive && single_head && elementary_heads,
        basic: single_head && basic_heads,
        normal: single_head && elementary_heads && elementary_bodies,
        disjunctive_ordinary: elementary_heads && elementary_bodies,
    }
}
