//! Tables: restricted root systems of symmetric spaces, spherical nilpotent
//! orbits of height 3 with their gradings, and model spaces.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::dynkin::{DynkinDiagram, Family, NodeSet, Weight};
use crate::families::RawSystem;
use crate::rank_one::RootCatalog;
use crate::system::{SphericalSystem, ValidationOptions};
use crate::Error;

use Family::{A, B, C, D, E, F, G};

type SymBuilder = fn(&[usize]) -> Option<RawSystem>;
type Expected = fn(&[usize]) -> (&'static str, Vec<usize>);

/// One row of the classification of involutions, by restricted root system.
#[derive(Clone, Copy)]
pub struct SymmetricDatum {
    /// Cartan label, e.g. `A III`, or `A×A` for a group G1×G1/G1.
    pub label: &'static str,
    /// Parameter range of this row when the label has several.
    pub case: &'static str,
    pub params: &'static [&'static str],
    /// Type of the restricted root system, e.g. `BC_{p+1}`.
    pub restricted_type: &'static str,
    /// Fixed-point subalgebra, as text.
    pub fixed: &'static str,
    /// Smallest admissible parameters.
    pub minimal: &'static [usize],
    /// Whether the group and its normaliser are both wonderful without
    /// simple spherical roots (B II, C II with q = 2).
    pub two_subgroups: bool,
    build: SymBuilder,
    expected: Expected,
}

impl core::fmt::Debug for SymmetricDatum {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("SymmetricDatum").field("label", &self.label).field("case", &self.case).finish()
    }
}

impl SymmetricDatum {
    /// Δ̃ as a system with empty S^p, or `None` outside this row's range.
    pub fn raw(&self, params: &[usize]) -> Option<RawSystem> {
        if params.len() != self.params.len() {
            return None;
        }
        (self.build)(params)
    }

    /// The restricted basis Δ̃.
    pub fn basis(&self, params: &[usize]) -> Result<(DynkinDiagram, Vec<Weight>), Error> {
        let s = self.raw(params).ok_or_else(|| bad(self.label, params))?.build()?;
        Ok((s.diagram().clone(), s.sigma().to_vec()))
    }

    /// The catalog family (label with names, parameters) of the normaliser.
    pub fn expected_family(&self, params: &[usize]) -> (&'static str, Vec<usize>) {
        (self.expected)(params)
    }
}

fn bad(label: &str, params: &[usize]) -> Error {
    Error::BadParameters(format!("{} at {:?}", label, params))
}

fn raw(c: &[(Family, usize)]) -> RawSystem {
    RawSystem::on(c)
}

fn even(n: usize) -> bool {
    n.is_multiple_of(2)
}

macro_rules! sym {
    ($label:expr, $case:expr, [$($p:expr),*], $ty:expr, $fixed:expr, [$($m:expr),*], $two:expr, $build:expr, $exp:expr) => {
        SymmetricDatum {
            label: $label,
            case: $case,
            params: &[$($p),*],
            restricted_type: $ty,
            fixed: $fixed,
            minimal: &[$($m),*],
            two_subgroups: $two,
            build: $build,
            expected: $exp,
        }
    };
}

static SYMMETRIC: [SymmetricDatum; 35] = [
    sym!("A I", "", ["n"], "A_n", "so(n+1)", [1], false, |v| Some(raw(&[(A, v[0])]).doubles(0, 1, v[0])), |v| (
        "ao(n)",
        vec![v[0]]
    )),
    sym!(
        "A II",
        "n odd, n ≥ 3",
        ["n"],
        "A_{(n-1)/2}",
        "sp(n+1)",
        [3],
        false,
        |v| (v[0] >= 3 && !even(v[0])).then(|| raw(&[(A, v[0])]).hats3(0, v[0])),
        |v| ("ac(n)", vec![v[0]])
    ),
    sym!(
        "A III",
        "q ≥ 2",
        ["p", "q"],
        "BC_{p+1}",
        "sl(p+1)+sl(p+q)+gl(1)",
        [1, 2],
        false,
        |v| {
            let (p, q) = (v[0], v[1]);
            let n = 2 * p + q;
            (p >= 1 && q >= 2).then(|| {
                let mut r = raw(&[(A, n)]);
                for i in 1..=p {
                    r = r.root(&[(0, i, 1), (0, n + 1 - i, 1)]);
                }
                r.seg(0, p + 1, p + q, 1)
            })
        },
        |v| ("aa(p+q+p)", vec![v[0], v[1]])
    ),
    sym!(
        "A III",
        "q = 1",
        ["p", "q"],
        "C_{p+1}",
        "sl(p+1)+sl(p+1)+gl(1)",
        [1, 1],
        false,
        |v| {
            let p = v[0];
            let n = 2 * p + 1;
            (p >= 1 && v[1] == 1).then(|| {
                let mut r = raw(&[(A, n)]);
                for i in 1..=p {
                    r = r.root(&[(0, i, 1), (0, n + 1 - i, 1)]);
                }
                r.root(&[(0, p + 1, 2)])
            })
        },
        |v| ("aa'(p+1+p)", vec![v[0]])
    ),
    sym!(
        "A IV",
        "n ≥ 2",
        ["n"],
        "A_1",
        "gl(n)",
        [2],
        false,
        |v| (v[0] >= 2).then(|| raw(&[(A, v[0])]).seg(0, 1, v[0], 1)),
        |v| ("a(n)", vec![v[0]])
    ),
    sym!(
        "A IV",
        "n = 1",
        ["n"],
        "A_1",
        "gl(1)",
        [1],
        false,
        |v| (v[0] == 1).then(|| raw(&[(A, 1)]).doubles(0, 1, 1)),
        |_| ("ao(n)", vec![1])
    ),
    sym!(
        "B I",
        "",
        ["p", "q"],
        "B_{p+1}",
        "so(p+1)+so(2n-p)",
        [1, 1],
        false,
        |v| {
            let (p, q) = (v[0], v[1]);
            (p >= 1 && q >= 1).then(|| raw(&[(B, p + q)]).doubles(0, 1, p).seg(0, p + 1, p + q, 2))
        },
        |v| ("bo(p+q)", vec![v[0], v[1]])
    ),
    sym!(
        "B II",
        "",
        ["n"],
        "A_1",
        "so(2n)",
        [2],
        true,
        |v| (v[0] >= 2).then(|| raw(&[(B, v[0])]).seg(0, 1, v[0], 2)),
        |v| ("b'(n)", vec![v[0]])
    ),
    sym!(
        "C I",
        "",
        ["n"],
        "C_n",
        "gl(n)",
        [3],
        false,
        |v| (v[0] >= 3).then(|| raw(&[(C, v[0])]).doubles(0, 1, v[0])),
        |v| ("co(n)", vec![v[0]])
    ),
    sym!(
        "C II",
        "q ≥ 3",
        ["p", "q"],
        "BC_{(p/2)+1}",
        "sp(p+2)+sp(2n-p-2)",
        [0, 3],
        false,
        |v| {
            let (p, q) = (v[0], v[1]);
            (even(p) && q >= 3).then(|| raw(&[(C, p + q)]).hats3(0, p + 1).hat(0, p + 1, p + q))
        },
        |v| if v[0] == 0 { ("c(n)", vec![v[1]]) } else { ("cc(p+q)", vec![v[0], v[1]]) }
    ),
    sym!(
        "C II",
        "q = 2",
        ["p", "q"],
        "C_{(p/2)+1}",
        "sp(n)+sp(n)",
        [2, 2],
        true,
        |v| {
            let (p, q) = (v[0], v[1]);
            let n = p + 2;
            (p >= 2 && even(p) && q == 2).then(|| raw(&[(C, n)]).hats3(0, n - 1).root(&[(0, n - 1, 2), (0, n, 2)]))
        },
        |v| ("cc'(p+2)", vec![v[0]])
    ),
    sym!(
        "D I",
        "q ≥ 2",
        ["p", "q"],
        "B_{p+1}",
        "so(p+1)+so(2n-p-1)",
        [1, 3],
        false,
        |v| {
            let (p, q) = (v[0], v[1]);
            let n = p + q;
            (p >= 1 && q >= 2 && n >= 4).then(|| raw(&[(D, n)]).doubles(0, 1, p).fork(0, p + 1, n))
        },
        |v| ("do(p+q)", vec![v[0], v[1]])
    ),
    sym!(
        "D I",
        "q = 0",
        ["p", "q"],
        "D_n",
        "so(n)+so(n)",
        [4, 0],
        false,
        |v| (v[0] >= 4 && v[1] == 0).then(|| raw(&[(D, v[0])]).doubles(0, 1, v[0])),
        |v| ("do(n)", vec![v[0]])
    ),
    sym!(
        "D II",
        "",
        ["n"],
        "A_1",
        "so(2n-1)",
        [4],
        false,
        |v| (v[0] >= 4).then(|| raw(&[(D, v[0])]).fork(0, 1, v[0])),
        |v| ("d(n)", vec![v[0]])
    ),
    sym!(
        "D III",
        "n even",
        ["n"],
        "C_{n/2}",
        "gl(n)",
        [4],
        false,
        |v| {
            let n = v[0];
            (n >= 4 && even(n)).then(|| raw(&[(D, n)]).hats3(0, n - 1).root(&[(0, n, 2)]))
        },
        // D4 has triality: this is do(1+3) there.
        |v| if v[0] == 4 { ("do(p+q)", vec![1, 3]) } else { ("dc'(n)", vec![v[0]]) }
    ),
    sym!(
        "D III",
        "n odd",
        ["n"],
        "BC_{(n-1)/2}",
        "gl(n)",
        [5],
        false,
        |v| {
            let n = v[0];
            (n >= 5 && !even(n))
                .then(|| raw(&[(D, n)]).hats3(0, n - 2).root(&[(0, n - 2, 1), (0, n - 1, 1), (0, n, 1)]))
        },
        |v| ("dc(n)", vec![v[0]])
    ),
    sym!("E I", "", [], "E_6", "sp(8)", [], false, |_| Some(raw(&[(E, 6)]).doubles(0, 1, 6)), |_| ("eo(n)", vec![6])),
    sym!(
        "E II",
        "",
        [],
        "F_4",
        "sl(6)+sl(2)",
        [],
        false,
        |_| Some(
            raw(&[(E, 6)])
                .root(&[(0, 1, 1), (0, 6, 1)])
                .root(&[(0, 3, 1), (0, 5, 1)])
                .doubles(0, 2, 2)
                .doubles(0, 4, 4)
        ),
        |_| ("ea(6)", vec![])
    ),
    sym!(
        "E III",
        "",
        [],
        "BC_2",
        "so(10)+gl(1)",
        [],
        false,
        |_| Some(raw(&[(E, 6)]).root(&[(0, 1, 1), (0, 3, 1), (0, 4, 1), (0, 5, 1), (0, 6, 1)]).root(&[
            (0, 2, 2),
            (0, 4, 2),
            (0, 3, 1),
            (0, 5, 1)
        ])),
        |_| ("ed(6)", vec![])
    ),
    sym!("E IV", "", [], "A_2", "f4", [], false, |_| Some(e_pair(raw(&[(E, 6)]))), |_| ("ef(6)", vec![])),
    sym!("E V", "", [], "E_7", "sl(8)", [], false, |_| Some(raw(&[(E, 7)]).doubles(0, 1, 7)), |_| ("eo(n)", vec![7])),
    sym!(
        "E VI",
        "",
        [],
        "F_4",
        "so(12)+sl(2)",
        [],
        false,
        |_| Some(raw(&[(E, 7)]).doubles(0, 1, 1).doubles(0, 3, 3).root(&[(0, 2, 1), (0, 4, 2), (0, 5, 1)]).root(&[
            (0, 5, 1),
            (0, 6, 2),
            (0, 7, 1)
        ])),
        |_| ("ec(7)", vec![])
    ),
    sym!("E VII", "", [], "C_3", "e6+gl(1)", [], false, |_| Some(e_pair(raw(&[(E, 7)])).doubles(0, 7, 7)), |_| (
        "ef(n)",
        vec![7]
    )),
    sym!("E VIII", "", [], "E_8", "so(16)", [], false, |_| Some(raw(&[(E, 8)]).doubles(0, 1, 8)), |_| (
        "eo(n)",
        vec![8]
    )),
    sym!("E IX", "", [], "F_4", "e7+sl(2)", [], false, |_| Some(e_pair(raw(&[(E, 8)])).doubles(0, 7, 8)), |_| (
        "ef(n)",
        vec![8]
    )),
    sym!("F I", "", [], "F_4", "sp(6)+sl(2)", [], false, |_| Some(raw(&[(F, 4)]).doubles(0, 1, 4)), |_| (
        "fo(4)",
        vec![]
    )),
    sym!(
        "F II",
        "",
        [],
        "BC_1",
        "so(9)",
        [],
        false,
        |_| Some(raw(&[(F, 4)]).root(&[(0, 1, 1), (0, 2, 2), (0, 3, 3), (0, 4, 2)])),
        |_| ("f(4)", vec![])
    ),
    sym!("G", "", [], "G_2", "sl(2)+sl(2)", [], false, |_| Some(raw(&[(G, 2)]).doubles(0, 1, 2)), |_| (
        "go(2)",
        vec![]
    )),
    // G1×G1 with G1 diagonal.
    sym!(
        "A×A",
        "",
        ["n"],
        "A_n",
        "sl(n+1)",
        [1],
        false,
        |v| (v[0] >= 1).then(|| raw(&[(A, v[0]), (A, v[0])]).diagonal(v[0])),
        |v| ("aa(p,p)", vec![v[0]])
    ),
    sym!(
        "B×B",
        "",
        ["n"],
        "B_n",
        "so(2n+1)",
        [2],
        false,
        |v| (v[0] >= 2).then(|| raw(&[(B, v[0]), (B, v[0])]).diagonal(v[0])),
        |v| ("bb(p,p)", vec![v[0]])
    ),
    sym!(
        "C×C",
        "",
        ["n"],
        "C_n",
        "sp(2n)",
        [3],
        false,
        |v| (v[0] >= 3).then(|| raw(&[(C, v[0]), (C, v[0])]).diagonal(v[0])),
        |v| ("cc(p,p)", vec![v[0]])
    ),
    sym!(
        "D×D",
        "",
        ["n"],
        "D_n",
        "so(2n)",
        [4],
        false,
        |v| (v[0] >= 4).then(|| raw(&[(D, v[0]), (D, v[0])]).diagonal(v[0])),
        |v| ("dd(p,p)", vec![v[0]])
    ),
    sym!(
        "E×E",
        "",
        ["n"],
        "E_n",
        "e_n",
        [6],
        false,
        |v| (6..=8).contains(&v[0]).then(|| raw(&[(E, v[0]), (E, v[0])]).diagonal(v[0])),
        |v| ("ee(p,p)", vec![v[0]])
    ),
    sym!("F×F", "", [], "F_4", "f4", [], false, |_| Some(raw(&[(F, 4), (F, 4)]).diagonal(4)), |_| ("ff(4,4)", vec![])),
    sym!("G×G", "", [], "G_2", "g2", [], false, |_| Some(raw(&[(G, 2), (G, 2)]).diagonal(2)), |_| ("gg(2,2)", vec![])),
];

// 2α1+α2+2α3+2α4+α5 and α2+α3+2α4+2α5+2α6.
fn e_pair(r: RawSystem) -> RawSystem {
    r.root(&[(0, 1, 2), (0, 2, 1), (0, 3, 2), (0, 4, 2), (0, 5, 1)]).root(&[
        (0, 2, 1),
        (0, 3, 1),
        (0, 4, 2),
        (0, 5, 2),
        (0, 6, 2),
    ])
}

pub fn symmetric_table() -> &'static [SymmetricDatum] {
    &SYMMETRIC
}

/// The row of `label` whose range contains `params`.
pub fn symmetric_row(label: &str, params: &[usize]) -> Result<&'static SymmetricDatum, Error> {
    let label = label.trim();
    let rows: Vec<&SymmetricDatum> = SYMMETRIC.iter().filter(|r| r.label.eq_ignore_ascii_case(label)).collect();
    if rows.is_empty() {
        return Err(Error::UnknownLabel(String::from(label)));
    }
    rows.into_iter().find(|r| r.raw(params).is_some()).ok_or_else(|| bad(label, params))
}

/// Σ = Δ̃, with S^p the simple roots orthogonal to Δ̃.
pub fn symmetric_system(label: &str, params: &[usize]) -> Result<SphericalSystem, Error> {
    let row = symmetric_row(label, params)?;
    let (d, sigma) = row.basis(params)?;
    with_unique_sp(d, sigma)
}

/// For B II and C II with q = 2: the system of the symmetric subgroup
/// itself, of index 2 in its normaliser. Its last spherical root is half
/// the last element of Δ̃, with S^p unchanged.
pub fn halved_companion(label: &str, params: &[usize]) -> Result<SphericalSystem, Error> {
    let row = symmetric_row(label, params)?;
    if !row.two_subgroups {
        return Err(Error::BadParameters(format!("{} has a single wonderful symmetric subgroup", row.label)));
    }
    let normaliser = symmetric_system(label, params)?;
    let mut sigma = normaliser.sigma().to_vec();
    let last = sigma.last_mut().expect("Δ̃ is nonempty");
    *last = Weight(last.0.iter().map(|c| c / 2).collect());
    let s = SphericalSystem::new(normaliser.diagram().clone(), normaliser.sp(), sigma)?;
    if !s.is_valid() {
        return Err(Error::InvalidSystem(String::from("halved companion")));
    }
    Ok(s)
}

// S^p is the set of simple roots orthogonal to every element of Δ̃. Search
// alone is not enough: for C II with p = 0 a proper subset also validates.
fn with_unique_sp(d: DynkinDiagram, sigma: Vec<Weight>) -> Result<SphericalSystem, Error> {
    let mut sp = NodeSet::default();
    for i in 0..d.rank() {
        if sigma.iter().all(|g| d.pairing(i, g) == 0) {
            sp.insert(i);
        }
    }
    let s = SphericalSystem::new(d, sp, sigma)?;
    let cat = RootCatalog::new(s.diagram());
    if s.validate_with(&cat, ValidationOptions::default()).is_valid() {
        Ok(s)
    } else {
        Err(Error::InvalidSystem(String::from("Δ̃ with its orthogonal simple roots")))
    }
}

/// The ℤ-grading of 𝔤 by a characteristic: level i ↦ dim 𝔤(i).
pub fn grading_dims(d: &DynkinDiagram, characteristic: &[i64]) -> Result<BTreeMap<i64, usize>, Error> {
    if characteristic.len() != d.rank() {
        return Err(Error::Shape(format!("characteristic of length {} on rank {}", characteristic.len(), d.rank())));
    }
    if characteristic.iter().any(|c| !(0..=2).contains(c)) {
        return Err(Error::BadParameters(String::from("characteristic entries must lie in 0..=2")));
    }
    let mut out = BTreeMap::new();
    out.insert(0, d.rank());
    for r in d.positive_roots() {
        let level: i64 = r.0.iter().zip(characteristic).map(|(a, b)| a * b).sum();
        if level == 0 {
            *out.entry(0).or_insert(0) += 2;
        } else {
            *out.entry(level).or_insert(0) += 1;
            *out.entry(-level).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Largest i with 𝔤(i) ≠ 0.
pub fn height(d: &DynkinDiagram, characteristic: &[i64]) -> Result<i64, Error> {
    Ok(grading_dims(d, characteristic)?.keys().copied().max().unwrap_or(0))
}

/// Height 2 or 3.
pub fn is_spherical_orbit(d: &DynkinDiagram, characteristic: &[i64]) -> Result<bool, Error> {
    Ok(matches!(height(d, characteristic)?, 2 | 3))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitDims {
    /// dim 𝔤(0) + dim 𝔤(1).
    pub dim_h: usize,
    /// dim 𝔤(1) + dim 𝔤(2).
    pub dim_hu: usize,
    pub dim_orbit: usize,
}

pub fn orbit_dims(d: &DynkinDiagram, characteristic: &[i64]) -> Result<OrbitDims, Error> {
    let g = grading_dims(d, characteristic)?;
    let at = |i: i64| g.get(&i).copied().unwrap_or(0);
    let dim_h = at(0) + at(1);
    Ok(OrbitDims { dim_h, dim_hu: at(1) + at(2), dim_orbit: d.dimension() - dim_h })
}

type OrbitBuilder = fn(&[usize]) -> Option<OrbitInstance>;

/// A spherical nilpotent orbit of height 3.
#[derive(Clone, Copy)]
pub struct OrbitDatum {
    /// Ambient type, e.g. `B_{2r+s+1}`.
    pub group: &'static str,
    pub params: &'static [&'static str],
    pub minimal: &'static [usize],
    /// The reductive part 𝔨 of the centraliser, as text.
    pub k: &'static str,
    /// The 𝔨-module 𝔫1/𝔫, as text.
    pub module: &'static str,
    build: OrbitBuilder,
}

impl core::fmt::Debug for OrbitDatum {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("OrbitDatum").field("group", &self.group).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInstance {
    pub diagram: DynkinDiagram,
    pub characteristic: Vec<i64>,
    /// Jordan block sizes, for classical types.
    pub partition: Option<Vec<usize>>,
}

impl OrbitDatum {
    pub fn instantiate(&self, params: &[usize]) -> Result<OrbitInstance, Error> {
        if params.len() != self.params.len() {
            return Err(bad(self.group, params));
        }
        (self.build)(params).ok_or_else(|| bad(self.group, params))
    }
}

fn orbit(f: Family, n: usize, ones: &[usize], partition: Option<Vec<usize>>) -> Option<OrbitInstance> {
    let diagram = DynkinDiagram::new(&[(f, n)]).ok()?;
    let mut characteristic = vec![0; n];
    for &i in ones {
        characteristic[i - 1] = 1;
    }
    Some(OrbitInstance { diagram, characteristic, partition })
}

fn blocks(parts: &[(usize, usize)]) -> Vec<usize> {
    parts.iter().flat_map(|&(size, mult)| core::iter::repeat_n(size, mult)).collect()
}

static HEIGHT3: [OrbitDatum; 11] = [
    OrbitDatum {
        group: "B_{2r+1}",
        params: &["r"],
        minimal: &[1],
        k: "sp(2r)",
        module: "V(ω1)",
        build: |v| {
            let r = v[0];
            let n = 2 * r + 1;
            (r >= 1).then(|| orbit(B, n, &[1, n], Some(blocks(&[(3, 1), (2, 2 * r)])))).flatten()
        },
    },
    OrbitDatum {
        group: "B_{2r+s+1}",
        params: &["r", "s"],
        minimal: &[1, 1],
        k: "sp(2r)+so(2s)",
        module: "V(ω1)",
        build: |v| {
            let (r, s) = (v[0], v[1]);
            (r >= 1 && s >= 1)
                .then(|| orbit(B, 2 * r + s + 1, &[1, 2 * r + 1], Some(blocks(&[(3, 1), (2, 2 * r), (1, 2 * s)]))))
                .flatten()
        },
    },
    OrbitDatum {
        group: "D_{2r+2}",
        params: &["r"],
        minimal: &[1],
        k: "sp(2r)",
        module: "V(ω1)",
        build: |v| {
            let r = v[0];
            let n = 2 * r + 2;
            (r >= 1).then(|| orbit(D, n, &[1, n - 1, n], Some(blocks(&[(3, 1), (2, 2 * r), (1, 1)])))).flatten()
        },
    },
    OrbitDatum {
        group: "D_{2r+s+2}",
        params: &["r", "s"],
        minimal: &[1, 1],
        k: "sp(2r)+so(2s+1)",
        module: "V(ω1)",
        build: |v| {
            let (r, s) = (v[0], v[1]);
            (r >= 1 && s >= 1)
                .then(|| orbit(D, 2 * r + s + 2, &[1, 2 * r + 1], Some(blocks(&[(3, 1), (2, 2 * r), (1, 2 * s + 1)]))))
                .flatten()
        },
    },
    OrbitDatum {
        group: "E_6",
        params: &[],
        minimal: &[],
        k: "sl(3)+sl(2)",
        module: "V(ω1')",
        build: |_| orbit(E, 6, &[4], None),
    },
    OrbitDatum {
        group: "E_7",
        params: &[],
        minimal: &[],
        k: "sl(2)+sp(6)",
        module: "V(ω1)",
        build: |_| orbit(E, 7, &[3], None),
    },
    OrbitDatum {
        group: "E_7",
        params: &[],
        minimal: &[],
        k: "sp(6)",
        module: "V(ω1)",
        build: |_| orbit(E, 7, &[2, 7], None),
    },
    OrbitDatum {
        group: "E_8",
        params: &[],
        minimal: &[],
        k: "f4+sl(2)",
        module: "V(ω1')",
        build: |_| orbit(E, 8, &[7], None),
    },
    OrbitDatum {
        group: "E_8",
        params: &[],
        minimal: &[],
        k: "sp(8)",
        module: "V(ω1)",
        build: |_| orbit(E, 8, &[2], None),
    },
    OrbitDatum {
        group: "F_4",
        params: &[],
        minimal: &[],
        k: "sl(2)+so(3)",
        module: "V(ω1)",
        build: |_| orbit(F, 4, &[2], None),
    },
    OrbitDatum {
        group: "G_2",
        params: &[],
        minimal: &[],
        k: "sl(2)",
        module: "V(ω1)",
        build: |_| orbit(G, 2, &[1], None),
    },
];

pub fn height3_table() -> &'static [OrbitDatum] {
    &HEIGHT3
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Any,
}

/// The model wonderful variety of a simple group.
#[derive(Clone, Copy)]
pub struct ModelDatum {
    pub family: Family,
    pub parity: Parity,
    /// The adjoint group of type B, whose model system differs.
    pub adjoint: bool,
    /// The subgroup H, as text.
    pub subgroup: &'static str,
    /// The catalog family of the model system.
    pub label: &'static str,
    instance: fn(usize) -> Option<Vec<usize>>,
}

impl core::fmt::Debug for ModelDatum {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("ModelDatum").field("family", &self.family).field("parity", &self.parity).finish()
    }
}

impl ModelDatum {
    pub fn applies(&self, n: usize) -> bool {
        match self.parity {
            Parity::Even => even(n),
            Parity::Odd => !even(n),
            Parity::Any => true,
        }
    }

    /// Catalog parameters of the model system at rank `n`.
    pub fn parameters(&self, n: usize) -> Option<Vec<usize>> {
        if self.applies(n) {
            (self.instance)(n)
        } else {
            None
        }
    }
}

static MODEL: [ModelDatum; 14] = [
    ModelDatum {
        family: A,
        parity: Parity::Even,
        adjoint: false,
        subgroup: "Sp(n)×GL(1)",
        label: "ac*(n)",
        instance: |n| (n >= 3).then(|| vec![n]),
    },
    ModelDatum {
        family: A,
        parity: Parity::Odd,
        adjoint: false,
        subgroup: "parabolic of semisimple type C_{(n-1)/2} in the symmetric subgroup A II",
        label: "ac*(n)",
        instance: |n| (n >= 3).then(|| vec![n]),
    },
    ModelDatum {
        family: B,
        parity: Parity::Even,
        adjoint: false,
        subgroup: "inside the parabolic of semisimple type A_{n-1} of B II, same radical, semisimple type C_{n/2}",
        label: "bc*(n)",
        instance: |n| (n >= 3).then(|| vec![n]),
    },
    ModelDatum {
        family: B,
        parity: Parity::Odd,
        adjoint: false,
        subgroup: "normaliser of the centraliser of a nilpotent element with characteristic (10…01)",
        label: "bc*(n)",
        instance: |n| (n >= 3).then(|| vec![n]),
    },
    ModelDatum {
        family: B,
        parity: Parity::Any,
        adjoint: true,
        subgroup: "adjoint group",
        label: "bc'(n)",
        instance: |n| (n >= 2).then(|| vec![n]),
    },
    ModelDatum {
        family: C,
        parity: Parity::Even,
        adjoint: false,
        subgroup: "parabolic of semisimple type C_{(n/2)-1}×C_{n/2} in C II with q = 2",
        label: "ac*(p)+c*(q)",
        instance: |n| (n >= 3).then(|| vec![n - 1, 2]),
    },
    ModelDatum {
        family: C,
        parity: Parity::Odd,
        adjoint: false,
        subgroup: "parabolic of semisimple type C_{(n-1)/2}×C_{(n-1)/2} in C II with q = 3",
        label: "ac*(p)+c*(q)",
        instance: |n| (n >= 3).then(|| vec![n - 1, 2]),
    },
    ModelDatum {
        family: D,
        parity: Parity::Even,
        adjoint: false,
        subgroup: "normaliser of the centraliser of a nilpotent element with characteristic (10…011)",
        label: "dc*(n)",
        instance: |n| (n >= 4).then(|| vec![n]),
    },
    ModelDatum {
        family: D,
        parity: Parity::Odd,
        adjoint: false,
        subgroup: "inside the parabolic of semisimple type A_{n-2} of D II, same radical, semisimple type C_{(n-1)/2}",
        label: "dc*(n)",
        instance: |n| (n >= 4).then(|| vec![n]),
    },
    ModelDatum {
        family: E,
        parity: Parity::Any,
        adjoint: false,
        subgroup: "E6: parabolic of semisimple type C_3 in E IV",
        label: "ec*(n)",
        instance: |n| (n == 6).then(|| vec![6]),
    },
    ModelDatum {
        family: E,
        parity: Parity::Any,
        adjoint: false,
        subgroup: "E7: normaliser of the centraliser of a nilpotent element with characteristic (010…01)",
        label: "ec*(n)",
        instance: |n| (n == 7).then(|| vec![7]),
    },
    ModelDatum {
        family: E,
        parity: Parity::Any,
        adjoint: false,
        subgroup: "E8: normaliser of the centraliser of a nilpotent element with characteristic (010…0)",
        label: "ec*(n)",
        instance: |n| (n == 8).then(|| vec![8]),
    },
    ModelDatum {
        family: F,
        parity: Parity::Any,
        adjoint: false,
        subgroup: "parabolic of semisimple type A_1×B_2 in F I",
        label: "fc*(4)",
        instance: |n| (n == 4).then(Vec::new),
    },
    ModelDatum {
        family: G,
        parity: Parity::Any,
        adjoint: false,
        subgroup: "normaliser of the centraliser of a nilpotent element with characteristic (10)",
        label: "g*(2)",
        instance: |n| (n == 2).then(Vec::new),
    },
];

pub fn model_table() -> &'static [ModelDatum] {
    &MODEL
}

/// The model system of the simple group of type `f` and rank `n`.
pub fn model_system(f: Family, n: usize, adjoint: bool) -> Result<SphericalSystem, Error> {
    let row = model_table()
        .iter()
        .find(|r| r.family == f && r.adjoint == adjoint && r.parameters(n).is_some())
        .ok_or_else(|| Error::BadParameters(format!("no model row for {}{}", f.letter(), n)))?;
    crate::families::instantiate(row.label, &row.parameters(n).expect("checked"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::classify;

    fn d(s: &str) -> DynkinDiagram {
        DynkinDiagram::parse(s).unwrap()
    }

    #[test]
    fn g_row() {
        let (_, b) = symmetric_row("G", &[]).unwrap().basis(&[]).unwrap();
        assert_eq!(b, vec![Weight(vec![2, 0]), Weight(vec![0, 2])]);
        let (_, b) = symmetric_row("A II", &[3]).unwrap().basis(&[3]).unwrap();
        assert_eq!(b, vec![Weight(vec![1, 2, 1])]);
        let (_, b) = symmetric_row("E IV", &[]).unwrap().basis(&[]).unwrap();
        assert!(b.len() == 2 && b.iter().all(|w| w.support().len() == 5));
    }

    #[test]
    fn every_row_at_minimal_rank() {
        for row in symmetric_table() {
            let s = symmetric_system(row.label, row.minimal)
                .unwrap_or_else(|e| panic!("{} {}: {:?}", row.label, row.case, e));
            let (fam, params) = row.expected_family(row.minimal);
            let c = classify(&s).unwrap_or_else(|| panic!("{} {}", row.label, row.case));
            assert_eq!((c.family, c.params), (fam, params), "{} {}", row.label, row.case);
        }
    }

    #[test]
    fn rows_above_minimal_rank() {
        for row in symmetric_table() {
            for bump in 1..=3 {
                let params: Vec<usize> = row.minimal.iter().map(|m| m + bump).collect();
                if params.is_empty() || row.raw(&params).is_none() {
                    continue;
                }
                let s = symmetric_system(row.label, &params).unwrap();
                let (fam, p) = row.expected_family(&params);
                let c = classify(&s).unwrap();
                assert_eq!((c.family, c.params), (fam, p), "{} {:?}", row.label, params);
            }
        }
    }

    #[test]
    fn halving() {
        let b = halved_companion("B II", &[3]).unwrap();
        assert_eq!(classify(&b).unwrap().label, "b(3)");
        let c = halved_companion("C II", &[2, 2]).unwrap();
        assert_eq!(classify(&c).unwrap().label, "cc(2+2)");
        assert!(halved_companion("A I", &[2]).is_err());
    }

    #[test]
    fn g2_heights() {
        let g2 = d("G2");
        assert_eq!(height(&g2, &[0, 1]).unwrap(), 2);
        assert_eq!(height(&g2, &[1, 0]).unwrap(), 3);
        assert_eq!(height(&g2, &[0, 2]).unwrap(), 4);
        let g = grading_dims(&g2, &[1, 0]).unwrap();
        assert_eq!(g.into_iter().collect::<Vec<_>>(), vec![(-3, 2), (-2, 1), (-1, 2), (0, 4), (1, 2), (2, 1), (3, 2)]);
        assert_eq!(orbit_dims(&g2, &[1, 0]).unwrap(), OrbitDims { dim_h: 6, dim_hu: 3, dim_orbit: 8 });
        assert!(grading_dims(&g2, &[3, 0]).is_err());
    }

    #[test]
    fn b3_orbit() {
        let b3 = d("B3");
        assert_eq!(orbit_dims(&b3, &[1, 0, 1]).unwrap().dim_orbit, 12);
        let z = orbit_dims(&b3, &[0, 0, 0]).unwrap();
        assert_eq!((z.dim_h, z.dim_orbit), (21, 0));
    }

    #[test]
    fn height3_rows() {
        for row in height3_table() {
            let o = row.instantiate(row.minimal).unwrap();
            assert_eq!(height(&o.diagram, &o.characteristic).unwrap(), 3, "{}", row.group);
        }
        let o = height3_table()[0].instantiate(&[1]).unwrap();
        assert_eq!(o.characteristic, vec![1, 0, 1]);
        assert_eq!(o.partition, Some(vec![3, 2, 2]));
    }

    #[test]
    fn model_rows() {
        assert_eq!(model_system(G, 2, false).unwrap(), crate::families::instantiate("g*(2)", &[]).unwrap());
        assert!(model_system(B, 4, true).is_ok());
        let c = model_table().iter().find(|r| r.family == C && r.parity == Parity::Even).unwrap();
        assert_eq!((c.label, c.parameters(4)), ("ac*(p)+c*(q)", Some(vec![3, 2])));
    }
}
