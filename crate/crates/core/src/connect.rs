//! Strong Δ-adjacency, strongly Δ-connected components, and the
//! erasable / quasi-erasable / isolated tests.

use alloc::vec::Vec;

use crate::dictionary::{self, decomposes, is_distinguished, localize};
use crate::dynkin::NodeSet;
use crate::hilbert::DEFAULT_STATE_CAP;
use crate::system::{ColourMask, ColourSet, SphericalSystem};
use crate::Error;

/// A subset of Σ given by positions.
pub type SigmaSubset = u64;

fn support_of(sys: &SphericalSystem, sub: SigmaSubset) -> NodeSet {
    NodeSet(sub).iter().fold(NodeSet::EMPTY, |acc, k| acc.union(sys.sigma()[k].support()))
}

/// γ_i and γ_j are strongly Δ-adjacent: ρ(D)(γ_j) ≠ 0 for every colour D
/// meeting Supp γ_i, and symmetrically.
pub fn strongly_adjacent(sys: &SphericalSystem, colours: &ColourSet, i: usize, j: usize) -> bool {
    let one_way = |a: usize, b: usize| colours.meeting(sys.sigma()[a].support()).iter().all(|d| colours.rho[d][b] != 0);
    i != j && one_way(i, j) && one_way(j, i)
}

/// Strongly Δ-connected components, each a bitmask over Σ positions,
/// ordered by smallest member.
pub fn components(sys: &SphericalSystem, colours: &ColourSet) -> Vec<SigmaSubset> {
    let k = sys.sigma().len();
    let mut comp: Vec<usize> = (0..k).collect();
    for i in 0..k {
        for j in i + 1..k {
            if strongly_adjacent(sys, colours, i, j) {
                let (a, b) = (comp[i], comp[j]);
                if a != b {
                    let (lo, hi) = (a.min(b), a.max(b));
                    comp.iter_mut().filter(|c| **c == hi).for_each(|c| *c = lo);
                }
            }
        }
    }
    let mut out: Vec<SigmaSubset> = Vec::new();
    for i in 0..k {
        if comp[i] == i {
            out.push((0..k).filter(|&j| comp[j] == i).fold(0, |m, j| m | 1 << j));
        }
    }
    out
}

/// Δ(Σ′): colours meeting Supp Σ′ that vanish on Σ ∖ Σ′.
pub fn delta_of(sys: &SphericalSystem, colours: &ColourSet, sub: SigmaSubset) -> ColourMask {
    let k = sys.sigma().len();
    colours
        .meeting(support_of(sys, sub))
        .iter()
        .filter(|&d| (0..k).filter(|g| sub >> g & 1 == 0).all(|g| colours.rho[d][g] == 0))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentAnalysis {
    pub component: SigmaSubset,
    pub delta_of: ColourMask,
    pub isolated: bool,
    pub erasable: bool,
    pub quasi_erasable: bool,
}

fn subsets(m: ColourMask) -> impl Iterator<Item = ColourMask> {
    // Nonempty subsets of `m`, increasing as bitmasks.
    let full = m.0;
    let mut all: Vec<u64> = Vec::new();
    let mut s = full;
    while s != 0 {
        all.push(s);
        s = (s - 1) & full;
    }
    all.sort();
    all.into_iter().map(ColourMask)
}

/// Some nonempty distinguished Δ′ ⊆ Δ(Σ′) with a smooth quotient.
pub fn is_erasable(sys: &SphericalSystem, colours: &ColourSet, sub: SigmaSubset) -> Result<bool, Error> {
    for dp in subsets(delta_of(sys, colours, sub)) {
        if is_distinguished(colours, dp) {
            let (_, out) = dictionary::kernel_basis(sys, colours, dp, DEFAULT_STATE_CAP)?;
            if out.iter().all(|w| sys.sigma().contains(w)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Some nonempty distinguished Δ′ ⊆ Δ(Σ′) whose quotient is a spherical system.
pub fn is_quasi_erasable(sys: &SphericalSystem, colours: &ColourSet, sub: SigmaSubset) -> Result<bool, Error> {
    for dp in subsets(delta_of(sys, colours, sub)) {
        if is_distinguished(colours, dp) && dictionary::quotient(sys, colours, dp)?.is_valid_system {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Splitting the colours of the cuspidal core by Supp Σ′ and its complement
/// in Supp Σ gives a decomposition.
pub fn is_isolated(sys: &SphericalSystem, sub: SigmaSubset) -> Result<bool, Error> {
    let core = dictionary::decuspidalize(sys)?;
    let supp = sys.support();
    // Transport Σ′ to the core: localisation keeps every γ, in order.
    let (_, idx) = dictionary::induced(sys.diagram(), supp)?;
    let inner: NodeSet = support_of(sys, sub).iter().map(|i| idx[i]).collect();
    let outer: NodeSet = supp.difference(support_of(sys, sub)).iter().map(|i| idx[i]).collect();
    let colours = core.colours()?;
    let d1 = colours.meeting(inner);
    let d2 = colours.meeting(outer);
    if d1.is_empty() || d2.is_empty() || d1.0 & d2.0 != 0 {
        return Ok(false);
    }
    if !is_distinguished(&colours, d1) || !is_distinguished(&colours, d2) {
        return Ok(false);
    }
    decomposes(&core, &colours, d1, d2)
}

pub fn classify_component(
    sys: &SphericalSystem,
    colours: &ColourSet,
    sub: SigmaSubset,
) -> Result<ComponentAnalysis, Error> {
    Ok(ComponentAnalysis {
        component: sub,
        delta_of: delta_of(sys, colours, sub),
        isolated: is_isolated(sys, sub)?,
        erasable: is_erasable(sys, colours, sub)?,
        quasi_erasable: is_quasi_erasable(sys, colours, sub)?,
    })
}

/// The localisation (S^p ∩ Supp Σ′, Σ′).
pub fn localisation_of(sys: &SphericalSystem, sub: SigmaSubset) -> Result<SphericalSystem, Error> {
    localize(sys, support_of(sys, sub))
}

/// Σ1, Σ2 disjoint and nonempty, both quasi-erasable, at least one erasable:
/// the pattern certifying a decomposition.
pub fn lemma_erasable_prunes(
    sys: &SphericalSystem,
    colours: &ColourSet,
    s1: SigmaSubset,
    s2: SigmaSubset,
) -> Result<bool, Error> {
    if s1 == 0 || s2 == 0 || s1 & s2 != 0 {
        return Ok(false);
    }
    if !is_quasi_erasable(sys, colours, s1)? || !is_quasi_erasable(sys, colours, s2)? {
        return Ok(false);
    }
    Ok(is_erasable(sys, colours, s1)? || is_erasable(sys, colours, s2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{DynkinDiagram, Weight};

    fn sys(diag: &str, sp: &[usize], sigma: &[&[i64]]) -> SphericalSystem {
        let d = DynkinDiagram::parse(diag).unwrap();
        let sp = sp.iter().map(|i| i - 1).collect();
        let s = SphericalSystem::new(d, sp, sigma.iter().map(|w| Weight(w.to_vec())).collect()).unwrap();
        assert!(s.is_valid());
        s
    }

    #[test]
    fn ac_star_3_connected() {
        let s = sys("A3", &[], &[&[1, 1, 0], &[0, 1, 1]]);
        let c = s.colours().unwrap();
        assert!(strongly_adjacent(&s, &c, 0, 1));
        assert_eq!(components(&s, &c), vec![0b11]);
    }

    #[test]
    fn product_splits_and_is_isolated() {
        let s = sys("A1,A1,A1,A1", &[], &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let c = s.colours().unwrap();
        assert!(!strongly_adjacent(&s, &c, 0, 1));
        assert_eq!(components(&s, &c), vec![0b01, 0b10]);
        let a = classify_component(&s, &c, 0b01).unwrap();
        assert!(a.isolated && a.erasable && a.quasi_erasable);
        assert!(lemma_erasable_prunes(&s, &c, 0b01, 0b10).unwrap());
        assert!(!lemma_erasable_prunes(&s, &c, 0b11, 0).unwrap());
    }

    #[test]
    fn b_double_star_erasable() {
        let s = sys("B3", &[1, 2], &[&[1, 2, 3]]);
        let c = s.colours().unwrap();
        assert!(is_erasable(&s, &c, 0b1).unwrap());
    }
}
