//! Spherical systems (S^p, Σ): validation, colours and the ρ pairing.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::dynkin::{DynkinDiagram, NodeSet, Weight};
use crate::rank_one::RootCatalog;
use crate::Error;

/// A couple (S^p, Σ) on a diagram. Construction checks shapes only; the
/// axioms are checked by [`SphericalSystem::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SphericalSystem {
    diagram: DynkinDiagram,
    sp: NodeSet,
    sigma: Vec<Weight>,
}

/// An axiom failure with its witness. Node and Σ references are flat node
/// indices and positions in Σ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// 2α ∈ Σ but ½⟨α∨,γ⟩ is not a non-positive integer.
    Sigma1 { alpha: usize, gamma: usize },
    /// α ⊥ β, α+β ∈ Σ, but ⟨α∨,γ⟩ ≠ ⟨β∨,γ⟩.
    Sigma2 { alpha: usize, beta: usize, gamma: usize },
    /// No rank-one row realizes γ with the S^p trace.
    S { gamma: usize },
    /// Σ contains the simple root α.
    RPrime { alpha: usize },
    /// Σ is linearly dependent.
    Dependent,
    /// Σ lists the same weight twice.
    Repeated { gamma: usize },
}

/// One entry per axiom; `None` means the axiom holds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub sigma1: Option<Violation>,
    pub sigma2: Option<Violation>,
    pub s: Option<Violation>,
    pub r_prime: Option<Violation>,
    pub independent: Option<Violation>,
    pub distinct: Option<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        [&self.sigma1, &self.sigma2, &self.s, &self.r_prime, &self.independent, &self.distinct].into_iter().flatten()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidationOptions {
    /// Require Σ to be linearly independent.
    pub require_independence: bool,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        ValidationOptions { require_independence: true }
    }
}

/// A subset of colours, as a bitmask over colour indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColourMask(pub u64);

impl ColourMask {
    pub const EMPTY: ColourMask = ColourMask(0);

    pub fn full(k: usize) -> ColourMask {
        ColourMask(NodeSet::full(k).0)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, o: ColourMask) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        NodeSet(self.0).iter()
    }
}

impl FromIterator<usize> for ColourMask {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ColourMask::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// Colours (S∖S^p)/∼ and the integer matrix ρ(D)(γ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColourSet {
    /// Node classes, ordered by smallest node.
    pub classes: Vec<NodeSet>,
    /// `rho[d][k]` = ⟨ρ(D_d), γ_k⟩.
    pub rho: Vec<Vec<i64>>,
}

impl ColourSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// The colour containing node `i`, if `i ∉ S^p`.
    pub fn colour_of(&self, i: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(i))
    }

    /// Nodes of the colours in `m`.
    pub fn nodes(&self, m: ColourMask) -> NodeSet {
        m.iter().fold(NodeSet::EMPTY, |acc, d| acc.union(self.classes[d]))
    }

    /// Δ(S′): colours with a node in `s`.
    pub fn meeting(&self, s: NodeSet) -> ColourMask {
        (0..self.len()).filter(|&d| !self.classes[d].intersection(s).is_empty()).collect()
    }

    pub fn all(&self) -> ColourMask {
        ColourMask::full(self.len())
    }
}

impl SphericalSystem {
    pub fn new(diagram: DynkinDiagram, sp: NodeSet, sigma: Vec<Weight>) -> Result<SphericalSystem, Error> {
        let n = diagram.rank();
        if !sp.is_subset(diagram.all_nodes()) {
            return Err(Error::Shape(format!("S^p outside the {} nodes", n)));
        }
        if let Some(w) = sigma.iter().find(|w| w.0.len() != n) {
            return Err(Error::Shape(format!("weight of length {} on a rank {} diagram", w.0.len(), n)));
        }
        Ok(SphericalSystem { diagram, sp, sigma })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn sp(&self) -> NodeSet {
        self.sp
    }

    pub fn sigma(&self) -> &[Weight] {
        &self.sigma
    }

    /// Supp Σ.
    pub fn support(&self) -> NodeSet {
        self.sigma.iter().fold(NodeSet::EMPTY, |acc, w| acc.union(w.support()))
    }

    fn position(&self, w: &Weight) -> Option<usize> {
        self.sigma.iter().position(|g| g == w)
    }

    /// Whether 2α_i ∈ Σ.
    pub fn has_double(&self, i: usize) -> bool {
        self.sigma.iter().any(|w| w.single_node() == Some((i, 2)))
    }

    pub fn validate(&self) -> ValidationReport {
        self.validate_with(&RootCatalog::new(&self.diagram), ValidationOptions::default())
    }

    /// Validation against a precomputed catalog of the same diagram.
    pub fn validate_with(&self, cat: &RootCatalog, opts: ValidationOptions) -> ValidationReport {
        let d = &self.diagram;
        let n = d.rank();
        let mut r = ValidationReport::default();

        for (k, w) in self.sigma.iter().enumerate() {
            if r.distinct.is_none() && self.sigma[..k].contains(w) {
                r.distinct = Some(Violation::Repeated { gamma: k });
            }
            if r.r_prime.is_none() {
                if let Some((i, 1)) = w.single_node() {
                    r.r_prime = Some(Violation::RPrime { alpha: i });
                }
            }
            if r.s.is_none() && cat.axiom_s(d, w, self.sp).is_none() {
                r.s = Some(Violation::S { gamma: k });
            }
        }

        'sigma1: for alpha in 0..n {
            if !self.has_double(alpha) {
                continue;
            }
            for (k, w) in self.sigma.iter().enumerate() {
                if w.single_node() == Some((alpha, 2)) {
                    continue;
                }
                let p = d.pairing(alpha, w);
                if p % 2 != 0 || p > 0 {
                    r.sigma1 = Some(Violation::Sigma1 { alpha, gamma: k });
                    break 'sigma1;
                }
            }
        }

        'sigma2: for alpha in 0..n {
            for beta in alpha + 1..n {
                if !d.orthogonal(alpha, beta) || self.position(&pair_sum(n, alpha, beta)).is_none() {
                    continue;
                }
                for (k, w) in self.sigma.iter().enumerate() {
                    if d.pairing(alpha, w) != d.pairing(beta, w) {
                        r.sigma2 = Some(Violation::Sigma2 { alpha, beta, gamma: k });
                        break 'sigma2;
                    }
                }
            }
        }

        if opts.require_independence && rank(&self.sigma) < self.sigma.len() {
            r.independent = Some(Violation::Dependent);
        }
        r
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// Colours and ρ. Faults only if a class has inconsistent rows, which
    /// (Σ2) rules out.
    pub fn colours(&self) -> Result<ColourSet, Error> {
        let d = &self.diagram;
        let n = d.rank();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut i = i;
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for a in 0..n {
            for b in a + 1..n {
                if !self.sp.contains(a)
                    && !self.sp.contains(b)
                    && d.orthogonal(a, b)
                    && self.position(&pair_sum(n, a, b)).is_some()
                {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut classes: Vec<NodeSet> = Vec::new();
        let mut roots: Vec<usize> = Vec::new();
        for i in (0..n).filter(|&i| !self.sp.contains(i)) {
            let r = find(&mut parent, i);
            match roots.iter().position(|&x| x == r) {
                Some(c) => classes[c].insert(i),
                None => {
                    roots.push(r);
                    classes.push(NodeSet::singleton(i));
                }
            }
        }
        let mut rho = Vec::with_capacity(classes.len());
        for c in &classes {
            let mut row: Option<Vec<i64>> = None;
            for a in c.iter() {
                let this: Vec<i64> = self.sigma.iter().map(|w| self.rho_node(a, w)).collect();
                match &row {
                    Some(r) if *r != this => return Err(Error::InconsistentColour),
                    Some(_) => {}
                    None => row = Some(this),
                }
            }
            rho.push(row.unwrap_or_default());
        }
        Ok(ColourSet { classes, rho })
    }

    /// ρ(D_α)(w), halved when 2α ∈ Σ (floor division; exact on valid input).
    pub fn rho_node(&self, alpha: usize, w: &Weight) -> i64 {
        let p = self.diagram.pairing(alpha, w);
        if self.has_double(alpha) {
            p.div_euclid(2)
        } else {
            p
        }
    }

    /// ρ(D) on an arbitrary lattice element `Σ x_k γ_k`.
    pub fn rho_combination(colours: &ColourSet, d: usize, x: &[i64]) -> i64 {
        colours.rho[d].iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// No γ has 2γ realized by a rank-one row with the same S^p trace.
    pub fn is_strict(&self) -> bool {
        let cat = RootCatalog::new(&self.diagram);
        self.is_strict_with(&cat)
    }

    pub fn is_strict_with(&self, cat: &RootCatalog) -> bool {
        self.sigma.iter().all(|w| !cat.axiom_r_violated(&self.diagram, w, self.sp))
    }

    /// Supp Σ = S.
    pub fn is_cuspidal(&self) -> bool {
        self.support() == self.diagram.all_nodes()
    }

    /// The system transported by a diagram automorphism.
    pub fn map(&self, perm: &[usize]) -> SphericalSystem {
        SphericalSystem {
            diagram: self.diagram.clone(),
            sp: self.sp.map(perm),
            sigma: self.sigma.iter().map(|w| w.map(perm)).collect(),
        }
    }

    /// Canonical representative modulo diagram automorphisms: Σ sorted, then
    /// the smallest `(Σ, S^p)` over the automorphism group.
    pub fn canonical(&self) -> SphericalSystem {
        self.canonical_with(&self.diagram.automorphisms())
    }

    pub fn canonical_with(&self, autos: &[Vec<usize>]) -> SphericalSystem {
        let mut best: Option<(Vec<Weight>, NodeSet)> = None;
        for p in autos {
            let mut s: Vec<Weight> = self.sigma.iter().map(|w| w.map(p)).collect();
            s.sort();
            let key = (s, self.sp.map(p));
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        let (sigma, sp) = best.unwrap_or_else(|| {
            let mut s = self.sigma.clone();
            s.sort();
            (s, self.sp)
        });
        SphericalSystem { diagram: self.diagram.clone(), sp, sigma }
    }

    /// Equality up to diagram automorphism and order of Σ.
    pub fn equivalent(&self, other: &SphericalSystem) -> bool {
        self.diagram == other.diagram && self.canonical() == other.canonical()
    }
}

fn pair_sum(n: usize, a: usize, b: usize) -> Weight {
    let mut w = Weight::zero(n);
    w.0[a] = 1;
    w.0[b] = 1;
    w
}

/// Rank over ℚ of a list of integer vectors (fraction-free elimination).
pub fn rank(vs: &[Weight]) -> usize {
    let mut rows: Vec<Vec<i128>> = vs.iter().map(|w| w.0.iter().map(|&c| c as i128).collect()).collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c] != 0 {
                let (a, b) = (rows[r][c], rows[i][c]);
                let g = gcd(a, b);
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x = *x * (a / g) - y * (b / g);
                }
                let h = rows[i].iter().fold(0, |acc, &x| gcd(acc, x));
                if h > 1 {
                    rows[i].iter_mut().for_each(|x| *x /= h);
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Builds Σ from sparse `(node, coeff)` lists; a test and fixture helper.
pub fn weights(d: &DynkinDiagram, sparse: &[&[(usize, i64)]]) -> Vec<Weight> {
    sparse
        .iter()
        .map(|s| {
            let mut w = vec![0; d.rank()];
            for &(i, c) in s.iter() {
                w[i] = c;
            }
            Weight(w)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(diag: &str, sp: &[usize], sigma: &[&[i64]]) -> SphericalSystem {
        let d = DynkinDiagram::parse(diag).unwrap();
        let sp = sp.iter().map(|i| i - 1).collect();
        SphericalSystem::new(d, sp, sigma.iter().map(|w| Weight(w.to_vec())).collect()).unwrap()
    }

    #[test]
    fn aa_prime_111_valid() {
        let s = sys("A3", &[], &[&[1, 0, 1], &[0, 2, 0]]);
        assert!(s.validate().is_valid());
        let c = s.colours().unwrap();
        assert_eq!(c.classes, vec![NodeSet(0b101), NodeSet(0b010)]);
        assert_eq!(c.rho, vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn simple_root_rejected() {
        let r = sys("A1", &[], &[&[1]]).validate();
        assert_eq!(r.r_prime, Some(Violation::RPrime { alpha: 0 }));
    }

    #[test]
    fn sigma1_half_integer() {
        let r = sys("A2", &[], &[&[2, 0], &[1, 1]]).validate();
        assert_eq!(r.sigma1, Some(Violation::Sigma1 { alpha: 0, gamma: 1 }));
    }

    #[test]
    fn sigma2_failure() {
        // α1+α3 in A3 forces ⟨α1∨,γ⟩ = ⟨α3∨,γ⟩; α1+α2 breaks it.
        let r = sys("A4", &[], &[&[1, 0, 1, 0], &[0, 0, 1, 1]]).validate();
        assert!(matches!(r.sigma2, Some(Violation::Sigma2 { .. })));
    }

    #[test]
    fn dependence_and_repeats() {
        let s = sys("A1,A1,A1", &[], &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1], &[2, 0, 0]]);
        assert_eq!(s.validate().independent, Some(Violation::Dependent));
        let s = sys("A2", &[], &[&[1, 1], &[1, 1]]);
        assert_eq!(s.validate().distinct, Some(Violation::Repeated { gamma: 1 }));
    }

    #[test]
    fn strictness() {
        assert!(!sys("B3", &[2, 3], &[&[1, 1, 1]]).is_strict());
        assert!(sys("B3", &[2], &[&[1, 1, 1]]).is_strict());
        assert!(!sys("G2", &[2], &[&[2, 1]]).is_strict());
        assert!(sys("G2", &[2], &[&[4, 2]]).is_strict());
    }

    #[test]
    fn b_n_colour() {
        let s = sys("B4", &[2, 3, 4], &[&[1, 1, 1, 1]]);
        assert_eq!(s.colours().unwrap().rho, vec![vec![1]]);
    }

    #[test]
    fn cuspidality() {
        assert!(sys("G2", &[2], &[&[2, 1]]).is_cuspidal());
        assert!(!sys("A3", &[], &[&[1, 1, 0]]).is_cuspidal());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[Weight(vec![1, 1]), Weight(vec![2, 2])]), 1);
        assert_eq!(rank(&[Weight(vec![1, 2, 0]), Weight(vec![0, 1, 3]), Weight(vec![1, 0, -6])]), 2);
    }
}
