//! Exhaustive enumeration of spherical systems on a diagram, the primitive
//! filter, and classification against the family catalog.
//!
//! The search runs over every S^p. For a fixed S^p the admissible spherical
//! roots are the candidates passing (S) and (R′); Σ is then grown in
//! increasing candidate order, keeping only candidates pairwise compatible
//! under (Σ1) and (Σ2) with everything chosen so far.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::dictionary::{is_decomposable_with, DecompositionRule};
use crate::dynkin::{DynkinDiagram, NodeSet, Weight};
use crate::families::{family_catalog, FamilyDatum};
use crate::rank_one::RootCatalog;
use crate::system::{rank, SphericalSystem};
use crate::Error;

/// Default cap on search nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub node_budget: u64,
    pub max_rank: usize,
    pub require_independence: bool,
    /// Only systems with Supp Σ = S.
    pub cuspidal_only: bool,
    pub decomposition: DecompositionRule,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            max_rank: 9,
            require_independence: true,
            cuspidal_only: false,
            decomposition: DecompositionRule::default(),
        }
    }
}

type Key = (Vec<Weight>, NodeSet);

fn key(s: &SphericalSystem) -> Key {
    (s.sigma().to_vec(), s.sp())
}

/// Can `a` and `b` sit together in Σ as far as (Σ1) and (Σ2) go?
fn one_way(d: &DynkinDiagram, a: &Weight, b: &Weight) -> bool {
    if let Some((i, 2)) = a.single_node() {
        let p = d.pairing(i, b);
        if p % 2 != 0 || p > 0 {
            return false;
        }
    }
    let supp = a.support();
    if supp.len() == 2 && a.0.iter().all(|&c| c == 0 || c == 1) {
        let mut it = supp.iter();
        let (i, j) = (it.next().unwrap(), it.next().unwrap());
        if d.orthogonal(i, j) && d.pairing(i, b) != d.pairing(j, b) {
            return false;
        }
    }
    true
}

fn compatible(d: &DynkinDiagram, a: &Weight, b: &Weight) -> bool {
    a != b && one_way(d, a, b) && one_way(d, b, a)
}

struct Search<'a> {
    d: &'a DynkinDiagram,
    cands: Vec<Weight>,
    compat: Vec<Vec<bool>>,
    opts: EnumOptions,
    nodes: u64,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(
        &mut self,
        sp: NodeSet,
        allowed: &[bool],
        start: usize,
        covered: NodeSet,
        out: &mut Vec<SphericalSystem>,
    ) -> Result<(), Error> {
        self.nodes += 1;
        if self.nodes > self.opts.node_budget {
            return Err(Error::BudgetExceeded("enumeration node budget"));
        }
        let all = self.d.all_nodes();
        if !self.opts.cuspidal_only || covered == all {
            let sigma = self.chosen.iter().map(|&k| self.cands[k].clone()).collect();
            out.push(SphericalSystem::new(self.d.clone(), sp, sigma)?);
        }
        if self.opts.require_independence && self.chosen.len() == self.d.rank() {
            return Ok(());
        }
        if self.opts.cuspidal_only {
            let reach = (start..self.cands.len())
                .filter(|&k| allowed[k])
                .fold(covered, |acc, k| acc.union(self.cands[k].support()));
            if reach != all {
                return Ok(());
            }
        }
        for k in start..self.cands.len() {
            if !allowed[k] {
                continue;
            }
            self.chosen.push(k);
            let independent = !self.opts.require_independence || {
                let ws: Vec<Weight> = self.chosen.iter().map(|&c| self.cands[c].clone()).collect();
                rank(&ws) == ws.len()
            };
            if independent {
                let next: Vec<bool> = (0..self.cands.len()).map(|j| allowed[j] && self.compat[k][j]).collect();
                self.run(sp, &next, k + 1, covered.union(self.cands[k].support()), out)?;
            }
            self.chosen.pop();
        }
        Ok(())
    }
}

/// Every spherical system on `d`, one per automorphism class, in canonical
/// form and sorted.
pub fn enumerate_systems(d: &DynkinDiagram) -> Result<Vec<SphericalSystem>, Error> {
    enumerate_systems_with(d, EnumOptions::default())
}

pub fn enumerate_systems_with(d: &DynkinDiagram, opts: EnumOptions) -> Result<Vec<SphericalSystem>, Error> {
    if d.rank() > opts.max_rank {
        return Err(Error::BudgetExceeded("rank above the enumeration bound"));
    }
    let cat = RootCatalog::new(d);
    let mut cands: Vec<Weight> = cat
        .candidates()
        .iter()
        .map(|c| c.weight.clone())
        .filter(|w| !matches!(w.single_node(), Some((_, 1))))
        .collect();
    cands.sort();
    cands.dedup();
    let compat: Vec<Vec<bool>> = cands.iter().map(|a| cands.iter().map(|b| compatible(d, a, b)).collect()).collect();
    let autos = d.automorphisms();
    let mut search = Search { d, cands, compat, opts, nodes: 0, chosen: Vec::new() };
    let mut seen: BTreeMap<Key, SphericalSystem> = BTreeMap::new();
    let mut found = Vec::new();
    for bits in 0..1u64 << d.rank() {
        let sp = NodeSet(bits);
        let allowed: Vec<bool> = search.cands.iter().map(|w| cat.axiom_s(d, w, sp).is_some()).collect();
        found.clear();
        search.run(sp, &allowed, 0, NodeSet::EMPTY, &mut found)?;
        for s in found.drain(..) {
            let c = s.canonical_with(&autos);
            seen.entry(key(&c)).or_insert(c);
        }
    }
    Ok(seen.into_values().collect())
}

/// Cuspidal and indecomposable systems on `d`.
pub fn enumerate_primitive(d: &DynkinDiagram) -> Result<Vec<SphericalSystem>, Error> {
    enumerate_primitive_with(d, EnumOptions::default())
}

pub fn enumerate_primitive_with(d: &DynkinDiagram, opts: EnumOptions) -> Result<Vec<SphericalSystem>, Error> {
    let all = enumerate_systems_with(d, EnumOptions { cuspidal_only: true, ..opts })?;
    let mut out = Vec::new();
    for s in all {
        if is_primitive_with(&s, opts.decomposition)? {
            out.push(s);
        }
    }
    Ok(out)
}

pub fn is_primitive(sys: &SphericalSystem) -> Result<bool, Error> {
    is_primitive_with(sys, DecompositionRule::default())
}

pub fn is_primitive_with(sys: &SphericalSystem, rule: DecompositionRule) -> Result<bool, Error> {
    if !sys.is_cuspidal() {
        return Ok(false);
    }
    let colours = sys.colours()?;
    Ok(is_decomposable_with(sys, &colours, rule)?.is_none())
}

/// A catalog match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Catalog position, from 1.
    pub index: usize,
    /// Family label with parameter names.
    pub family: &'static str,
    pub params: Vec<usize>,
    /// Family label with parameters substituted.
    pub label: String,
}

impl Classification {
    fn of(f: &FamilyDatum, params: &[usize]) -> Classification {
        Classification { index: f.index, family: f.label, params: params.to_vec(), label: f.label_at(params) }
    }
}

/// Every catalog instantiation on one diagram, keyed by canonical form.
/// When several instantiations coincide the first in catalog order is the
/// answer and the rest are kept as aliases.
#[derive(Clone, Debug)]
pub struct Classifier {
    diagram: DynkinDiagram,
    entries: BTreeMap<Key, (SphericalSystem, Vec<Classification>)>,
}

impl Classifier {
    pub fn new(d: &DynkinDiagram) -> Classifier {
        let autos = d.automorphisms();
        let bound = d.rank().max(2);
        let mut entries: BTreeMap<Key, (SphericalSystem, Vec<Classification>)> = BTreeMap::new();
        for f in family_catalog() {
            for t in f.parameter_tuples(bound) {
                let Some(raw) = f.raw(&t) else { continue };
                if raw.components.iter().map(|c| c.1).sum::<usize>() != d.rank() {
                    continue;
                }
                let Ok(s) = raw.build() else { continue };
                if s.diagram() != d {
                    continue;
                }
                let c = s.canonical_with(&autos);
                entries.entry(key(&c)).or_insert_with(|| (c, Vec::new())).1.push(Classification::of(f, &t));
            }
        }
        Classifier { diagram: d.clone(), entries }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    /// All matches of `sys`, primary first.
    pub fn matches(&self, sys: &SphericalSystem) -> &[Classification] {
        if sys.diagram() != &self.diagram {
            return &[];
        }
        self.entries.get(&key(&sys.canonical())).map_or(&[], |e| &e.1)
    }

    pub fn classify(&self, sys: &SphericalSystem) -> Option<Classification> {
        self.matches(sys).first().cloned()
    }

    /// The catalog instantiations on this diagram, one per class.
    pub fn instances(&self) -> impl Iterator<Item = (&SphericalSystem, &Classification)> {
        self.entries.values().map(|(s, c)| (s, &c[0]))
    }
}

/// The family and parameters of `sys`, if it is a catalog instance.
pub fn classify(sys: &SphericalSystem) -> Option<Classification> {
    Classifier::new(sys.diagram()).classify(sys)
}

/// Catalog instantiations on `d`, canonical and sorted like the enumerator.
pub fn catalog_instances(d: &DynkinDiagram) -> Vec<(SphericalSystem, Classification)> {
    Classifier::new(d).instances().map(|(s, c)| (s.clone(), c.clone())).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StrictnessReport {
    pub strict: Vec<SphericalSystem>,
    pub non_strict: Vec<SphericalSystem>,
}

pub fn strictness_report(d: &DynkinDiagram) -> Result<StrictnessReport, Error> {
    let mut r = StrictnessReport::default();
    let cat = RootCatalog::new(d);
    for s in enumerate_primitive(d)? {
        if s.is_strict_with(&cat) {
            r.strict.push(s);
        } else {
            r.non_strict.push(s);
        }
    }
    Ok(r)
}

/// Number of distinct candidate spherical roots on `d`.
pub fn candidate_count(d: &DynkinDiagram) -> usize {
    let mut v: Vec<Weight> = RootCatalog::new(d).candidates().iter().map(|c| c.weight.clone()).collect();
    v.sort();
    v.dedup();
    v.len()
}
