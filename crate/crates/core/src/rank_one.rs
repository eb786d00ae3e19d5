//! The rank-one spherical systems with full support, as a declarative table,
//! and the axioms (S) and (R) driven by it.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::dynkin::{DynkinDiagram, Family, NodeSet, Weight};

/// Where a row lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    /// A connected diagram of the given family, rank in `min..=max`.
    Connected { family: Family, min: usize, max: usize },
    /// Two orthogonal simple roots, in one component or two.
    OrthogonalPair,
}

/// Coefficients of γ along the support, by Bourbaki position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coeffs {
    Const(i64),
    List(&'static [i64]),
    /// 1, 2, ..., 2, 1
    Hat,
    /// 2, ..., 2, 1, 1 (type D)
    Fork,
}

/// The prescribed trace S^p ∩ Supp γ, by Bourbaki position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trace {
    /// Positions `first..=n-skip_last`.
    Span {
        first: usize,
        skip_last: usize,
    },
    Set(&'static [usize]),
    AllBut(&'static [usize]),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankOneDatum {
    /// Label with the rank parameter written `n`, e.g. `b*(n)`.
    pub label: &'static str,
    pub support: Support,
    pub coeffs: Coeffs,
    pub trace: Trace,
}

const fn row(
    label: &'static str,
    family: Family,
    min: usize,
    max: usize,
    coeffs: Coeffs,
    trace: Trace,
) -> RankOneDatum {
    RankOneDatum { label, support: Support::Connected { family, min, max }, coeffs, trace }
}

const ANY: usize = usize::MAX;

static TABLE: [RankOneDatum; 15] = [
    row("a(n)", Family::A, 2, ANY, Coeffs::Const(1), Trace::Span { first: 2, skip_last: 1 }),
    row("a'(1)", Family::A, 1, 1, Coeffs::Const(2), Trace::Set(&[])),
    RankOneDatum {
        label: "aa(1,1)",
        support: Support::OrthogonalPair,
        coeffs: Coeffs::Const(1),
        trace: Trace::Set(&[]),
    },
    row("d(3)", Family::A, 3, 3, Coeffs::List(&[1, 2, 1]), Trace::Set(&[1, 3])),
    row("b(n)", Family::B, 2, ANY, Coeffs::Const(1), Trace::Span { first: 2, skip_last: 0 }),
    row("b'(n)", Family::B, 2, ANY, Coeffs::Const(2), Trace::Span { first: 2, skip_last: 0 }),
    row("b*(n)", Family::B, 2, ANY, Coeffs::Const(1), Trace::Span { first: 2, skip_last: 1 }),
    row("b**(3)", Family::B, 3, 3, Coeffs::List(&[1, 2, 3]), Trace::Set(&[1, 2])),
    row("c(n)", Family::C, 3, ANY, Coeffs::Hat, Trace::AllBut(&[2])),
    row("c*(n)", Family::C, 3, ANY, Coeffs::Hat, Trace::Span { first: 3, skip_last: 0 }),
    row("d(n)", Family::D, 4, ANY, Coeffs::Fork, Trace::Span { first: 2, skip_last: 0 }),
    row("f(4)", Family::F, 4, 4, Coeffs::List(&[1, 2, 3, 2]), Trace::Set(&[1, 2, 3])),
    row("g(2)", Family::G, 2, 2, Coeffs::List(&[2, 1]), Trace::Set(&[2])),
    row("g'(2)", Family::G, 2, 2, Coeffs::List(&[4, 2]), Trace::Set(&[2])),
    row("g*(2)", Family::G, 2, 2, Coeffs::Const(1), Trace::Set(&[])),
];

/// Label conventions identifying degenerate instances with table rows.
pub static ALIASES: [(&str, &str); 3] = [("d(2)", "aa(1,1)"), ("b'(1)", "a'(1)"), ("c*(2)", "b*(2)")];

pub fn rank_one_table() -> &'static [RankOneDatum] {
    &TABLE
}

/// ASCII form of a label: `′` becomes `'`, `∗` becomes `*`, spaces dropped.
pub fn normalize_label(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '′' | '’' => '\'',
            '∗' => '*',
            c => c,
        })
        .collect()
}

impl RankOneDatum {
    pub fn admits(&self, n: usize) -> bool {
        match self.support {
            Support::Connected { min, max, .. } => n >= min && n <= max,
            Support::OrthogonalPair => n == 2,
        }
    }

    /// Concrete label at rank `n`, e.g. `b*(3)`.
    pub fn label_at(&self, n: usize) -> String {
        self.label.replace("(n)", &format!("({})", n))
    }

    pub fn coefficients(&self, n: usize) -> Vec<i64> {
        match self.coeffs {
            Coeffs::Const(k) => vec![k; n],
            Coeffs::List(l) => l.to_vec(),
            Coeffs::Hat => (1..=n).map(|p| if p == 1 || p == n { 1 } else { 2 }).collect(),
            Coeffs::Fork => (1..=n).map(|p| if p + 2 <= n { 2 } else { 1 }).collect(),
        }
    }

    /// Positions (1-based) in S^p ∩ Supp γ.
    pub fn trace_positions(&self, n: usize) -> Vec<usize> {
        match self.trace {
            Trace::Span { first, skip_last } => (first..=n.saturating_sub(skip_last)).collect(),
            Trace::Set(s) => s.to_vec(),
            Trace::AllBut(s) => (1..=n).filter(|p| !s.contains(p)).collect(),
        }
    }

    /// The row on its own support: `(diagram, S^p, γ)`.
    pub fn instantiate(&self, n: usize) -> Option<(DynkinDiagram, NodeSet, Weight)> {
        if !self.admits(n) {
            return None;
        }
        let (d, coeffs) = match self.support {
            Support::Connected { family, .. } => {
                let (d, map) = DynkinDiagram::with_positions(&[(family, n)]).ok()?;
                let mut w = vec![0; n];
                for (p, c) in self.coefficients(n).into_iter().enumerate() {
                    w[map[0][p]] = c;
                }
                let sp = self.trace_positions(n).iter().map(|p| map[0][p - 1]).collect();
                return Some((d, sp, Weight(w)));
            }
            Support::OrthogonalPair => (DynkinDiagram::new(&[(Family::A, 1), (Family::A, 1)]).ok()?, vec![1, 1]),
        };
        Some((d, NodeSet::EMPTY, Weight(coeffs)))
    }
}

/// Looks up a row by label, either generic (`b*(n)`) or concrete (`b*(3)`),
/// resolving the aliases. Returns the row and the rank.
pub fn lookup(label: &str) -> Option<(&'static RankOneDatum, usize)> {
    let label = normalize_label(label);
    let label = ALIASES.iter().find(|(a, _)| *a == label).map(|(_, b)| String::from(*b)).unwrap_or(label);
    for r in TABLE.iter() {
        if r.label == label {
            let n = match r.support {
                Support::Connected { min, .. } => min,
                Support::OrthogonalPair => 2,
            };
            return Some((r, n));
        }
        if let Some(prefix) = r.label.strip_suffix("(n)") {
            if let Some(rest) = label.strip_prefix(prefix) {
                if let Some(num) = rest.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
                    if let Ok(n) = num.parse::<usize>() {
                        if r.admits(n) {
                            return Some((r, n));
                        }
                    }
                }
            }
        }
    }
    None
}

/// One embedding of a table row into a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub weight: Weight,
    /// The prescribed S^p ∩ Supp γ.
    pub trace: NodeSet,
    /// Concrete label, e.g. `b(3)`.
    pub label: String,
    /// Index into [`rank_one_table`].
    pub row: usize,
}

/// Every embedding of every row into `d`, without duplicates, ordered by
/// row then weight.
pub fn candidate_spherical_roots(d: &DynkinDiagram) -> Vec<Candidate> {
    let mut out: Vec<Candidate> = Vec::new();
    let rank = d.rank();
    for (ri, r) in TABLE.iter().enumerate() {
        let mut found: Vec<Candidate> = Vec::new();
        match r.support {
            Support::OrthogonalPair => {
                for i in 0..rank {
                    for j in i + 1..rank {
                        if d.orthogonal(i, j) {
                            let mut w = Weight::zero(rank);
                            w.0[i] = 1;
                            w.0[j] = 1;
                            found.push(Candidate {
                                weight: w,
                                trace: NodeSet::EMPTY,
                                label: String::from(r.label),
                                row: ri,
                            });
                        }
                    }
                }
            }
            Support::Connected { min, max, .. } => {
                for n in min..=max.min(rank) {
                    let Some((pd, ptrace, pw)) = r.instantiate(n) else { continue };
                    for emb in embeddings(&pd, d) {
                        let mut w = Weight::zero(rank);
                        for (p, &t) in emb.iter().enumerate() {
                            w.0[t] = pw.0[p];
                        }
                        let trace = ptrace.iter().map(|p| emb[p]).collect();
                        found.push(Candidate { weight: w, trace, label: r.label_at(n), row: ri });
                    }
                }
            }
        }
        found.sort_by(|a, b| (&a.weight, a.trace).cmp(&(&b.weight, b.trace)));
        found.dedup();
        out.extend(found);
    }
    out
}

/// Injective maps from the nodes of `pattern` into `d` preserving the Cartan
/// matrix entry by entry (induced subdiagrams of the same type).
pub fn embeddings(pattern: &DynkinDiagram, d: &DynkinDiagram) -> Vec<Vec<usize>> {
    embeddings_within(pattern, d, d.all_nodes())
}

/// [`embeddings`] with images restricted to `within`.
pub fn embeddings_within(pattern: &DynkinDiagram, d: &DynkinDiagram, within: NodeSet) -> Vec<Vec<usize>> {
    fn go(p: &DynkinDiagram, d: &DynkinDiagram, within: NodeSet, map: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = map.len();
        if i == p.rank() {
            out.push(map.clone());
            return;
        }
        for t in within.iter() {
            if map.contains(&t) {
                continue;
            }
            if (0..i).all(|j| p.cartan(i, j) == d.cartan(t, map[j]) && p.cartan(j, i) == d.cartan(map[j], t)) {
                map.push(t);
                go(p, d, within, map, out);
                map.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(pattern, d, within, &mut Vec::new(), &mut out);
    out
}

/// The candidates of a diagram, computed once, answering (S) and (R).
#[derive(Clone, Debug)]
pub struct RootCatalog {
    candidates: Vec<Candidate>,
}

impl RootCatalog {
    pub fn new(d: &DynkinDiagram) -> RootCatalog {
        RootCatalog { candidates: candidate_spherical_roots(d) }
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    /// Axiom (S) for γ under `sp`: the row witnessing it, if any.
    pub fn axiom_s<'a>(&'a self, d: &DynkinDiagram, gamma: &Weight, sp: NodeSet) -> Option<&'a Candidate> {
        let supp = gamma.support();
        if !sp.difference(supp).iter().all(|a| d.pairing(a, gamma) == 0) {
            return None;
        }
        let trace = sp.intersection(supp);
        self.candidates.iter().find(|c| c.weight == *gamma && c.trace == trace)
    }

    /// Axiom (R) fails for γ: 2γ satisfies (S) under the same `sp`.
    pub fn axiom_r_violated(&self, d: &DynkinDiagram, gamma: &Weight, sp: NodeSet) -> bool {
        self.axiom_s(d, &gamma.scaled(2), sp).is_some()
    }
}

pub fn axiom_s_holds(gamma: &Weight, sp: NodeSet, d: &DynkinDiagram) -> bool {
    RootCatalog::new(d).axiom_s(d, gamma, sp).is_some()
}

pub fn axiom_r_violated(gamma: &Weight, sp: NodeSet, d: &DynkinDiagram) -> bool {
    RootCatalog::new(d).axiom_r_violated(d, gamma, sp)
}
