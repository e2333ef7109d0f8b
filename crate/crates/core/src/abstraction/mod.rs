// SPDX-License-Identifier: Apache-2.0

//! Abstract representation `A* = (A_d, A*_c)` of a c-atom.
//!
//! `A*_c` is the set of maximal prefixed power sets `W ⊎ V` (sublattices of
//! `2^{A_d}` with bottom `W` and top `W ∪ V`) whose covered sets all lie in
//! `A_c`, with every member included in another member removed. The
//! construction follows the pairwise interval test: for each `p ⊆ q` in
//! `A_c`, `p ⊎ (q \ p)` is a candidate iff the number of admissible
//! solutions in the interval `[p, q]` equals `2^{|q \ p|}`.

mod dnf;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::program::{mask_of, set_of, submasks, Atom, AtomSet, CAtom, Interpretation, Mask, POWERSET_LIMIT};

pub use dnf::{dnf, is_maximally_simplified, simplified_dnf, Conjunction, Dnf};

/// `W ⊎ V`: the collection `{W ∪ X | X ⊆ V}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct PrefixedPowerSet {
    base: AtomSet,
    free: AtomSet,
}

impl PrefixedPowerSet {
    pub fn new(base: AtomSet, free: AtomSet) -> Result<Self> {
        if !base.is_disjoint(&free) {
            return Err(Error::MalformedCAtom(
                "prefixed power set with overlapping base and free atoms".into(),
            ));
        }
        Ok(PrefixedPowerSet { base, free })
    }

    /// Bottom element `W`.
    pub fn base(&self) -> &AtomSet {
        &self.base
    }

    /// `V`
    pub fn free(&self) -> &AtomSet {
        &self.free
    }

    /// Top element `W ∪ V`.
    pub fn top(&self) -> AtomSet {
        self.base.union(&self.free).cloned().collect()
    }

    pub fn covers(&self, s: &AtomSet) -> bool {
        covers(self, s)
    }

    pub fn is_included_in(&self, other: &PrefixedPowerSet) -> bool {
        included_in(self, other)
    }
}

impl fmt::Display for PrefixedPowerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        crate::program::write_list(f, &self.base)?;
        f.write_str("}+{")?;
        crate::program::write_list(f, &self.free)?;
        f.write_str("}")
    }
}

/// `W ⊆ S ⊆ W ∪ V`.
pub fn covers(p: &PrefixedPowerSet, s: &AtomSet) -> bool {
    p.base.is_subset(s) && s.iter().all(|a| p.base.contains(a) || p.free.contains(a))
}

/// Every set covered by `p` is covered by `q`. Checked as
/// `q.base ⊆ p.base ∧ p.top ⊆ q.top`, which is equivalent: the bottom and
/// top of `p` are both covered by `p`.
pub fn included_in(p: &PrefixedPowerSet, q: &PrefixedPowerSet) -> bool {
    q.base.is_subset(&p.base)
        && p.base
            .iter()
            .chain(p.free.iter())
            .all(|a| q.base.contains(a) || q.free.contains(a))
}

/// A lattice member as masks over the owning domain: `(base, top)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Interval {
    base: Mask,
    top: Mask,
}

impl Interval {
    fn covers(self, m: Mask) -> bool {
        m & self.base == self.base && m & !self.top == 0
    }

    fn included_in(self, other: Interval) -> bool {
        self.base & other.base == other.base && self.top & !other.top == 0
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbstractCAtom {
    domain: Vec<Atom>,
    lattices: Vec<PrefixedPowerSet>,
    intervals: Vec<Interval>,
}

impl AbstractCAtom {
    fn from_intervals(domain: Vec<Atom>, mut intervals: Vec<Interval>) -> Self {
        let mut pairs: Vec<(PrefixedPowerSet, Interval)> = intervals
            .drain(..)
            .map(|iv| {
                let p = PrefixedPowerSet {
                    base: set_of(&domain, iv.base),
                    free: set_of(&domain, iv.top & !iv.base),
                };
                (p, iv)
            })
            .collect();
        pairs.sort_by(|x, y| x.0.cmp(&y.0));
        let (lattices, intervals) = pairs.into_iter().unzip();
        AbstractCAtom {
            domain,
            lattices,
            intervals,
        }
    }

    /// Assembles an abstract c-atom from explicit members. Members must lie
    /// inside the domain; no maximality or redundancy check is made.
    pub fn from_parts(domain: AtomSet, lattices: Vec<PrefixedPowerSet>) -> Result<Self> {
        let domain: Vec<Atom> = domain.into_iter().collect();
        let mut intervals = Vec::with_capacity(lattices.len());
        for p in &lattices {
            if !p.top().iter().all(|a| domain.binary_search(a).is_ok()) {
                return Err(Error::MalformedCAtom(format!("{p} is not inside the domain")));
            }
            intervals.push(Interval {
                base: mask_of(&domain, &p.base),
                top: mask_of(&domain, &p.top()),
            });
        }
        Ok(Self::from_intervals(domain, intervals))
    }

    pub fn domain(&self) -> &[Atom] {
        &self.domain
    }

    /// `A*_c`, sorted by `(W, V)`.
    pub fn lattices(&self) -> &[PrefixedPowerSet] {
        &self.lattices
    }

    pub fn len(&self) -> usize {
        self.lattices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattices.is_empty()
    }

    fn t_mask(&self, i: &Interpretation) -> Mask {
        mask_of(&self.domain, i)
    }
}

#[derive(Serialize)]
struct AbstractJson<'a> {
    domain: &'a [Atom],
    lattices: &'a [PrefixedPowerSet],
}

impl Serialize for AbstractCAtom {
    /// `{"domain":[...],"lattices":[{"base":[...],"free":[...]}]}`
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AbstractJson {
            domain: &self.domain,
            lattices: &self.lattices,
        }
        .serialize(s)
    }
}

impl fmt::Display for AbstractCAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        f.write_str("{")?;
        crate::program::write_list(f, &self.domain)?;
        f.write_str("}, {")?;
        for (k, p) in self.lattices.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("})")
    }
}

/// Builds the unique abstract representation of `a`.
pub fn build_abstract(a: &CAtom) -> Result<AbstractCAtom> {
    let n = a.domain().len();
    if n > POWERSET_LIMIT {
        return Err(Error::guard("c-atom domain", n, POWERSET_LIMIT));
    }
    let sols = a.masks();

    let mut candidates = Vec::new();
    let mut tops = Vec::new();
    for &p in sols {
        tops.clear();
        for &q in sols {
            if q & p != p {
                continue;
            }
            let width = (q & !p).count_ones();
            let inside = sols.iter().filter(|&&w| w & p == p && w & !q == 0).count();
            if inside == 1 << width {
                tops.push(q);
            }
        }
        // for a fixed base only the maximal tops can survive
        for &q in &tops {
            if !tops.iter().any(|&q2| q2 != q && q2 & q == q) {
                candidates.push(Interval { base: p, top: q });
            }
        }
    }

    let survivors: Vec<Interval> = candidates
        .iter()
        .copied()
        .filter(|&c| !candidates.iter().any(|&d| d != c && c.included_in(d)))
        .collect();
    Ok(AbstractCAtom::from_intervals(a.domain().to_vec(), survivors))
}

/// `(A_d, ⋃ covered sets)`, the inverse of [`build_abstract`].
pub fn expand(a: &AbstractCAtom) -> Result<CAtom> {
    let n = a.domain.len();
    if n > POWERSET_LIMIT {
        return Err(Error::guard("c-atom domain", n, POWERSET_LIMIT));
    }
    let masks = a
        .intervals
        .iter()
        .flat_map(|iv| submasks(iv.top & !iv.base).map(move |x| iv.base | x))
        .collect();
    Ok(CAtom::from_masks(a.domain.clone(), masks))
}

/// `I ⊨ A` iff some member of `A*_c` covers `I ∩ A_d`.
pub fn satisfies_abstract(i: &Interpretation, a: &AbstractCAtom) -> bool {
    let t = a.t_mask(i);
    a.intervals.iter().any(|iv| iv.covers(t))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct CAtomClass {
    pub monotone: bool,
    pub antimonotone: bool,
    pub convex: bool,
}

/// Recognizes monotone, antimonotone and convex c-atoms from `A*` alone.
///
/// Monotone: every member reaches the full domain. Antimonotone: every
/// member has an empty base. Convex: for all members `m1, m2` with
/// `base(m1) ⊆ top(m2)`, the interval `[base(m1), top(m2)]` is included in
/// some member.
pub fn classify_catom(a: &AbstractCAtom) -> CAtomClass {
    let full: Mask = if a.domain.len() == 64 {
        Mask::MAX
    } else {
        (1 << a.domain.len()) - 1
    };
    let ivs = &a.intervals;
    let convex = ivs.iter().all(|m1| {
        ivs.iter().all(|m2| {
            m1.base & !m2.top != 0 || {
                let span = Interval {
                    base: m1.base,
                    top: m2.top,
                };
                ivs.iter().any(|&m3| span.included_in(m3))
            }
        })
    });
    CAtomClass {
        monotone: ivs.iter().all(|iv| iv.top == full),
        antimonotone: ivs.iter().all(|iv| iv.base == 0),
        convex,
    }
}

/// Members of `A*_c` covering `T_A^I = I ∩ A_d`.
pub fn abstract_satisfiable_sets(a: &AbstractCAtom, i: &Interpretation) -> Vec<PrefixedPowerSet> {
    let t = a.t_mask(i);
    a.intervals
        .iter()
        .zip(&a.lattices)
        .filter(|(iv, _)| iv.covers(t))
        .map(|(_, p)| p.clone())
        .collect()
}

/// The bases `W` of the abstract satisfiable sets, deduplicated and sorted.
pub fn satisfiable_sets(a: &AbstractCAtom, i: &Interpretation) -> Vec<AtomSet> {
    let mut out: Vec<AtomSet> = abstract_satisfiable_sets(a, i).into_iter().map(|p| p.base).collect();
    out.sort();
    out.dedup();
    out
}

/// `R ⊨_I A` decided on `A*`: some member includes
/// `(R ∩ A_d) ⊎ (T_A^I \ (R ∩ A_d))`. Expects `R ⊆ I`.
pub fn cond_satisfies_abstract(r: &Interpretation, i: &Interpretation, a: &AbstractCAtom) -> bool {
    let rm = a.t_mask(r);
    let t = a.t_mask(i);
    let probe = Interval { base: rm, top: rm | t };
    a.intervals.iter().any(|&iv| probe.included_in(iv))
}
