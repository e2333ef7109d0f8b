// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write;

use serde::Serialize;

use super::{check_basic, literal_catom};
use crate::abstraction::build_abstract;
use crate::error::Result;
use crate::program::{Atom, AtomSet, Program};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Edge {
    pub from: Atom,
    pub to: Atom,
    pub sign: Sign,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct DependencyGraph {
    pub vertices: AtomSet,
    pub edges: BTreeSet<Edge>,
}

impl DependencyGraph {
    pub fn has_edge(&self, from: &str, to: &str, sign: Sign) -> bool {
        self.edges
            .iter()
            .any(|e| e.from.name() == from && e.to.name() == to && e.sign == sign)
    }

    /// Graphviz text; negative edges are dashed and labelled `-`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph G {\n");
        for v in &self.vertices {
            writeln!(s, "  \"{v}\";").unwrap();
        }
        for e in &self.edges {
            match e.sign {
                Sign::Positive => writeln!(s, "  \"{}\" -> \"{}\";", e.from, e.to).unwrap(),
                Sign::Negative => writeln!(s, "  \"{}\" -> \"{}\" [style=dashed, label=\"-\"];", e.from, e.to).unwrap(),
            }
        }
        s.push_str("}\n");
        s
    }
}

/// `G_P` of a basic program. For a rule with head `u`, a body literal read
/// as the c-atom `A` and a member `W ⊎ V` of `A*_c`: `u →⁺ v` for `v ∈ W`
/// and `u →⁻ v` for `v ∈ A_d \ (W ∪ V)`. Rules with head `⊥` add no edges.
pub fn dependency_graph(p: &Program) -> Result<DependencyGraph> {
    check_basic(p)?;
    let mut g = DependencyGraph {
        vertices: p.atoms(),
        edges: BTreeSet::new(),
    };
    for r in p.rules() {
        let Some(u) = r.head()[0].as_elementary() else {
            continue;
        };
        for l in r.body() {
            let c = literal_catom(l)?;
            let abs = build_abstract(&c)?;
            let domain = c.domain_set();
            for m in abs.lattices() {
                for v in m.base() {
                    g.edges.insert(Edge {
                        from: u.clone(),
                        to: v.clone(),
                        sign: Sign::Positive,
                    });
                }
                for v in domain.difference(&m.top()) {
                    g.edges.insert(Edge {
                        from: u.clone(),
                        to: v.clone(),
                        sign: Sign::Negative,
                    });
                }
            }
        }
    }
    Ok(g)
}

/// A closed walk `vertices[0] → vertices[1] → … → vertices[0]`, with the
/// sign of each step.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub vertices: Vec<Atom>,
    pub signs: Vec<Sign>,
}

impl Witness {
    pub fn negative_edges(&self) -> usize {
        self.signs.iter().filter(|s| **s == Sign::Negative).count()
    }
}

/// Cycle flags of a dependency graph. Cycles are closed walks and are
/// classified by their number of negative edges.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct CycleReport {
    /// Some cycle uses positive edges only.
    pub has_positive_cycle: bool,
    /// Some cycle has an odd number of negative edges.
    pub has_odd_cycle: bool,
    /// Some cycle has an even number, at least two, of negative edges.
    pub has_even_cycle: bool,
    /// Some cycle has an even number of negative edges, zero included.
    pub has_even_cycle_literal: bool,
    pub call_consistent: bool,
    pub acyclic: bool,
    pub positive_witness: Option<Witness>,
    pub odd_witness: Option<Witness>,
    pub even_witness: Option<Witness>,
}

/// Search state: vertex, parity of negative edges, negative edges capped at 2.
type State = (usize, u8, u8);

pub fn cycle_report(g: &DependencyGraph) -> CycleReport {
    let verts: Vec<&Atom> = g.vertices.iter().collect();
    let index: HashMap<&Atom, usize> = verts.iter().enumerate().map(|(k, v)| (*v, k)).collect();
    let mut adj: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); verts.len()];
    for e in &g.edges {
        adj[index[&e.from]].push((index[&e.to], e.sign));
    }

    let mut report = CycleReport::default();
    let mut any_cycle = false;
    for s in 0..verts.len() {
        // BFS over product states; the start state is only reachable again
        // through at least one edge
        let mut parent: HashMap<State, (State, Sign)> = HashMap::new();
        let start: State = (s, 0, 0);
        let mut queue = VecDeque::from([start]);
        let mut expanded = std::collections::HashSet::from([start]);
        while let Some(st) = queue.pop_front() {
            let (v, par, cnt) = st;
            for &(t, sign) in &adj[v] {
                let neg = u8::from(sign == Sign::Negative);
                let next = (t, par ^ neg, (cnt + neg).min(2));
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                    e.insert((st, sign));
                    if expanded.insert(next) {
                        queue.push_back(next);
                    }
                }
            }
        }
        let walk = |end: State| -> Option<Witness> {
            parent.get(&end)?;
            let mut vertices = vec![verts[end.0].clone()];
            let mut signs = Vec::new();
            let mut cur = end;
            loop {
                let (prev, sign) = parent[&cur];
                signs.push(sign);
                vertices.push(verts[prev.0].clone());
                if prev == start {
                    break;
                }
                cur = prev;
            }
            vertices.reverse();
            signs.reverse();
            vertices.pop();
            Some(Witness { vertices, signs })
        };
        let found = |st: State| parent.contains_key(&st);
        if [(s, 0, 0), (s, 1, 1), (s, 1, 2), (s, 0, 2)].into_iter().any(found) {
            any_cycle = true;
        }
        if report.positive_witness.is_none() {
            report.positive_witness = walk((s, 0, 0));
        }
        if report.odd_witness.is_none() {
            report.odd_witness = walk((s, 1, 1)).or_else(|| walk((s, 1, 2)));
        }
        if report.even_witness.is_none() {
            report.even_witness = walk((s, 0, 2));
        }
    }
    report.has_positive_cycle = report.positive_witness.is_some();
    report.has_odd_cycle = report.odd_witness.is_some();
    report.has_even_cycle = report.even_witness.is_some();
    report.has_even_cycle_literal = report.has_even_cycle || report.has_positive_cycle;
    report.call_consistent = !report.has_odd_cycle;
    report.acyclic = !any_cycle;
    report
}
