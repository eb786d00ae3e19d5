//! Dynkin diagrams with Bourbaki numbering, Cartan pairings, positive roots
//! and diagram automorphisms.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// Cartan-Killing family letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn from_char(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple component in canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Component {
        Component { family, rank }
    }

    fn is_canonical(self) -> bool {
        match self.family {
            Family::A => self.rank >= 1,
            Family::B => self.rank >= 2,
            Family::C => self.rank >= 3,
            Family::D => self.rank >= 4,
            Family::E => (6..=8).contains(&self.rank),
            Family::F => self.rank == 4,
            Family::G => self.rank == 2,
        }
    }

    /// Squared root lengths and bonds (0-based positions) of the component.
    fn layout(self) -> (Vec<i64>, Vec<(usize, usize)>) {
        let n = self.rank;
        let chain = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self.family {
            Family::A => (vec![2; n], chain(n)),
            Family::B => {
                let mut norms = vec![4; n];
                norms[n - 1] = 2;
                (norms, chain(n))
            }
            Family::C => {
                let mut norms = vec![2; n];
                norms[n - 1] = 4;
                (norms, chain(n))
            }
            Family::D => {
                let mut edges = chain(n - 1);
                edges.push((n - 3, n - 1));
                (vec![2; n], edges)
            }
            Family::E => {
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                (vec![2; n], edges)
            }
            Family::F => (vec![4, 4, 2, 2], chain(4)),
            Family::G => (vec![2, 6], chain(2)),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Stable node identifier: component index (0-based, in canonical order)
/// and Bourbaki position (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId {
    pub component: usize,
    pub index: usize,
}

impl fmt::Display for NodeId {
    /// `3` for the first component, `3'` for the second, `3''` for the third...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)?;
        for _ in 0..self.component {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// A set of nodes, as a bitmask over flat node indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeSet(pub u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn full(rank: usize) -> NodeSet {
        if rank >= 64 {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << rank) - 1)
        }
    }

    pub fn singleton(i: usize) -> NodeSet {
        NodeSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn union(self, o: NodeSet) -> NodeSet {
        NodeSet(self.0 | o.0)
    }

    pub fn intersection(self, o: NodeSet) -> NodeSet {
        NodeSet(self.0 & o.0)
    }

    pub fn difference(self, o: NodeSet) -> NodeSet {
        NodeSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: NodeSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits >> i & 1 == 1)
    }

    /// Image under a node permutation.
    pub fn map(self, perm: &[usize]) -> NodeSet {
        let mut out = NodeSet::EMPTY;
        for i in self.iter() {
            out.insert(perm[i]);
        }
        out
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = NodeSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// An element of the root lattice, as dense coefficients over flat node indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Weight {
        let mut w = Weight::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn support(&self) -> NodeSet {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// Image under a node permutation (`perm[i]` is the image of node `i`).
    pub fn map(&self, perm: &[usize]) -> Weight {
        let mut out = vec![0; self.0.len()];
        for (i, &c) in self.0.iter().enumerate() {
            out[perm[i]] = c;
        }
        Weight(out)
    }

    /// `Some(i)` if this weight is `k·α_i` for a single node.
    pub fn single_node(&self) -> Option<(usize, i64)> {
        let mut it = self.0.iter().enumerate().filter(|(_, &c)| c != 0);
        let (i, &c) = it.next()?;
        if it.next().is_some() {
            None
        } else {
            Some((i, c))
        }
    }
}

/// A semisimple Dynkin diagram: canonical components plus the Cartan matrix
/// over flat node indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    components: Vec<Component>,
    nodes: Vec<NodeId>,
    cartan: Vec<Vec<i64>>,
    norms: Vec<i64>,
}

/// A flat node index in the canonical diagram for every input position,
/// grouped by input component.
pub type PositionMap = Vec<Vec<usize>>;

fn canonical_parts(family: Family, rank: usize) -> Result<Vec<(Component, Vec<usize>)>, Error> {
    // Each part lists, per part-position, the input position (1-based).
    let bad = || Err(Error::InvalidDiagram(alloc::format!("{}{}", family.letter(), rank)));
    let one = |c: Component| Ok(vec![(c, (1..=c.rank).collect())]);
    match (family, rank) {
        (_, 0) => bad(),
        (Family::B, 1) | (Family::C, 1) => one(Component::new(Family::A, 1)),
        (Family::C, 2) => Ok(vec![(Component::new(Family::B, 2), vec![2, 1])]),
        (Family::D, 1) => bad(),
        (Family::D, 2) => Ok(vec![(Component::new(Family::A, 1), vec![1]), (Component::new(Family::A, 1), vec![2])]),
        (Family::D, 3) => Ok(vec![(Component::new(Family::A, 3), vec![2, 1, 3])]),
        _ => {
            let c = Component::new(family, rank);
            if c.is_canonical() {
                one(c)
            } else {
                bad()
            }
        }
    }
}

impl DynkinDiagram {
    /// Builds a diagram, canonicalizing degenerate ranks and sorting components.
    pub fn new(spec: &[(Family, usize)]) -> Result<DynkinDiagram, Error> {
        Ok(Self::with_positions(spec)?.0)
    }

    /// Like [`DynkinDiagram::new`], also returning where each input position
    /// (`map[component][bourbaki - 1]`) landed.
    pub fn with_positions(spec: &[(Family, usize)]) -> Result<(DynkinDiagram, PositionMap), Error> {
        let mut parts = Vec::new();
        for (c, &(family, rank)) in spec.iter().enumerate() {
            for (comp, pos) in canonical_parts(family, rank)? {
                parts.push((comp, c, pos));
            }
        }
        parts.sort_by_key(|p| p.0);
        if parts.iter().map(|p| p.0.rank).sum::<usize>() > 64 {
            return Err(Error::InvalidDiagram(String::from("total rank above 64")));
        }

        let n: usize = parts.iter().map(|p| p.0.rank).sum();
        let mut nodes = Vec::with_capacity(n);
        let mut norms = Vec::with_capacity(n);
        let mut cartan = vec![vec![0i64; n]; n];
        let mut map: PositionMap = spec.iter().map(|&(_, r)| vec![usize::MAX; r]).collect();
        let mut components = Vec::new();
        for (ci, (comp, input, pos)) in parts.iter().enumerate() {
            let offset = nodes.len();
            let (cn, edges) = comp.layout();
            for (k, &p) in pos.iter().enumerate() {
                nodes.push(NodeId { component: ci, index: k + 1 });
                map[*input][p - 1] = offset + k;
            }
            for k in 0..comp.rank {
                cartan[offset + k][offset + k] = 2;
            }
            for (a, b) in edges {
                let ip = -(cn[a].max(cn[b])) / 2;
                cartan[offset + a][offset + b] = 2 * ip / cn[a];
                cartan[offset + b][offset + a] = 2 * ip / cn[b];
            }
            norms.extend(cn);
            components.push(*comp);
        }
        Ok((DynkinDiagram { components, nodes, cartan, norms }, map))
    }

    /// Parses `"A3"`, `"F4,F4"`, `"b2, g2"` (case-insensitive).
    pub fn parse(s: &str) -> Result<DynkinDiagram, Error> {
        let mut spec = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let mut chars = tok.chars();
            let family =
                chars.next().and_then(Family::from_char).ok_or_else(|| Error::InvalidDiagram(String::from(tok)))?;
            let rank: usize = chars.as_str().parse().map_err(|_| Error::InvalidDiagram(String::from(tok)))?;
            spec.push((family, rank));
        }
        DynkinDiagram::new(&spec)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> NodeId {
        self.nodes[i]
    }

    pub fn index_of(&self, id: NodeId) -> Option<usize> {
        self.nodes.iter().position(|&n| n == id)
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.rank())
    }

    /// Flat indices of the nodes of component `c`.
    pub fn component_nodes(&self, c: usize) -> NodeSet {
        self.nodes.iter().enumerate().filter(|(_, n)| n.component == c).map(|(i, _)| i).collect()
    }

    /// ⟨α_i∨, α_j⟩.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared length of α_i, normalized per component (short roots have 2).
    pub fn norm(&self, i: usize) -> i64 {
        self.norms[i]
    }

    /// ⟨α_i∨, w⟩.
    pub fn pairing(&self, i: usize, w: &Weight) -> i64 {
        self.cartan[i].iter().zip(&w.0).map(|(a, c)| a * c).sum()
    }

    pub fn orthogonal(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] == 0
    }

    /// Bonds as `(i, j, multiplicity)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                if self.cartan[i][j] != 0 {
                    out.push((i, j, self.cartan[i][j] * self.cartan[j][i]));
                }
            }
        }
        out
    }

    /// Positive roots in simple-root coordinates, sorted by height then
    /// coordinates, computed by closure under root strings.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let n = self.rank();
        let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = (0..n).map(|i| Weight::simple(n, i).0).collect();
        set.extend(frontier.iter().cloned());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                let w = Weight(beta.clone());
                for i in 0..n {
                    if w.single_node() == Some((i, 1)) {
                        continue;
                    }
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if down[i] < 0 || !set.contains(&down) {
                            break;
                        }
                        p += 1;
                    }
                    if p - self.pairing(i, &w) > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if set.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            frontier = next;
        }
        let mut roots: Vec<Weight> = set.into_iter().map(Weight).collect();
        roots.sort_by_key(|r| (r.0.iter().sum::<i64>(), r.0.clone()));
        roots
    }

    /// dim G/P for the parabolic with Levi simple roots `sp`: the number of
    /// positive roots not supported inside `sp`.
    pub fn dim_flag(&self, sp: NodeSet) -> usize {
        self.positive_roots().iter().filter(|r| !r.support().is_subset(sp)).count()
    }

    /// dim 𝔤.
    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.positive_roots().len()
    }

    /// All node permutations preserving the Cartan matrix, identity first,
    /// in lexicographic order.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_automorphism(0, &mut perm, &mut used, &mut out);
        out
    }

    fn extend_automorphism(&self, i: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = self.rank();
        if i == n {
            out.push(perm.clone());
            return;
        }
        for t in 0..n {
            if used[t] || self.norms_class(i) != self.norms_class(t) {
                continue;
            }
            let ok = (0..i)
                .all(|j| self.cartan[i][j] == self.cartan[t][perm[j]] && self.cartan[j][i] == self.cartan[perm[j]][t]);
            if ok {
                perm[i] = t;
                used[t] = true;
                self.extend_automorphism(i + 1, perm, used, out);
                used[t] = false;
            }
        }
        perm[i] = usize::MAX;
    }

    // Cheap necessary condition for two nodes to be swapped: same component
    // shape and valency.
    fn norms_class(&self, i: usize) -> (Component, usize) {
        let c = self.components[self.nodes[i].component];
        let valency = (0..self.rank()).filter(|&j| j != i && self.cartan[i][j] != 0).count();
        (c, valency)
    }

    /// Renders a weight as `α1+2α2+α1'`.
    pub fn format_weight(&self, w: &Weight) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (i, &c) in w.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() || c < 0 {
                s.push(if c < 0 { '-' } else { '+' });
            }
            if c.abs() != 1 {
                let _ = write!(s, "{}", c.abs());
            }
            let _ = write!(s, "α{}", self.nodes[i]);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> DynkinDiagram {
        DynkinDiagram::parse(s).unwrap()
    }

    #[test]
    fn root_counts() {
        for (s, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A5", 15),
            ("B2", 4),
            ("B4", 16),
            ("C3", 9),
            ("D4", 12),
            ("D6", 30),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ] {
            assert_eq!(d(s).positive_roots().len(), count, "{}", s);
        }
    }

    #[test]
    fn g2_highest_root() {
        let roots = d("G2").positive_roots();
        assert_eq!(roots.last().unwrap().0, vec![3, 2]);
    }

    #[test]
    fn bourbaki_cartan_entries() {
        let b2 = d("B2");
        assert_eq!(b2.cartan(1, 0), -2);
        assert_eq!(b2.cartan(0, 1), -1);
        let c3 = d("C3");
        assert_eq!(c3.cartan(1, 2), -2);
        assert_eq!(c3.cartan(2, 1), -1);
        let g2 = d("G2");
        assert_eq!(g2.cartan(0, 1), -3);
        let f4 = d("F4");
        assert_eq!(f4.cartan(2, 1), -2);
        let d5 = d("D5");
        assert_eq!(d5.cartan(2, 4), -1);
        assert_eq!(d5.cartan(3, 4), 0);
        let e6 = d("E6");
        assert_eq!(e6.cartan(1, 3), -1);
        assert_eq!(e6.cartan(0, 2), -1);
    }

    #[test]
    fn canonicalization() {
        let (c2, map) = DynkinDiagram::with_positions(&[(Family::C, 2)]).unwrap();
        assert_eq!(c2.components(), &[Component::new(Family::B, 2)]);
        assert_eq!(map[0], vec![1, 0]);
        assert_eq!(d("D2"), d("A1,A1"));
        assert_eq!(d("D3"), d("A3"));
        assert_eq!(d("C3,A1").components()[0], Component::new(Family::A, 1));
        for bad in ["E9", "F5", "G3", "H2", "A0", "E5", "x"] {
            assert!(DynkinDiagram::parse(bad).is_err(), "{}", bad);
        }
    }

    #[test]
    fn automorphism_counts() {
        for (s, count) in [
            ("A1", 1),
            ("A3", 2),
            ("A2,A2", 8),
            ("D4", 6),
            ("D5", 2),
            ("E6", 2),
            ("F4", 1),
            ("B2,B2", 2),
            ("A1,A1,A1", 6),
        ] {
            assert_eq!(d(s).automorphisms().len(), count, "{}", s);
        }
    }

    #[test]
    fn dim_flag_examples() {
        let b3 = d("B3");
        assert_eq!(b3.dim_flag(NodeSet(0b110)), 5);
        assert_eq!(b3.dim_flag(b3.all_nodes()), 0);
        assert_eq!(d("A4").dim_flag(NodeSet::EMPTY), 10);
    }
}
