//! JSON interchange.
//!
//! Nodes are written `[component, index]`: the component counts from 1 in
//! the order the components are listed, the index is the Bourbaki position.
//! A weight is a list of `[component, index, coefficient]` terms. Colours
//! are named `D1`, `D2`, ... in order of their smallest node, and positions
//! in Σ count from 1.

use serde::{Deserialize, Serialize};
use spherical_core::appendix::OrbitDims;
use spherical_core::connect::ComponentAnalysis;
use spherical_core::dictionary::QuotientResult;
use spherical_core::enumerate::Classification;
use spherical_core::system::Violation;
use spherical_core::{
    ColourMask, ColourSet, DynkinDiagram, Error, Family, NodeSet, SphericalSystem, ValidationReport, Weight,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub family: String,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub components: Vec<ComponentJson>,
}

pub type NodeRef = [usize; 2];
pub type Term = [i64; 3];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemJson {
    pub diagram: DiagramJson,
    #[serde(default)]
    pub sp: Vec<NodeRef>,
    #[serde(default)]
    pub sigma: Vec<Vec<Term>>,
}

impl From<&DynkinDiagram> for DiagramJson {
    fn from(d: &DynkinDiagram) -> Self {
        let components = d
            .components()
            .iter()
            .map(|c| ComponentJson { family: c.family.letter().to_string(), rank: c.rank })
            .collect();
        DiagramJson { components }
    }
}

impl DiagramJson {
    fn spec(&self) -> Result<Vec<(Family, usize)>, Error> {
        self.components
            .iter()
            .map(|c| {
                let mut chars = c.family.chars();
                match (chars.next().and_then(Family::from_char), chars.next()) {
                    (Some(f), None) => Ok((f, c.rank)),
                    _ => Err(Error::InvalidDiagram(c.family.clone())),
                }
            })
            .collect()
    }

    pub fn to_diagram(&self) -> Result<DynkinDiagram, Error> {
        DynkinDiagram::new(&self.spec()?)
    }
}

pub fn node_ref(d: &DynkinDiagram, i: usize) -> NodeRef {
    let id = d.node(i);
    [id.component + 1, id.index]
}

pub fn node_refs(d: &DynkinDiagram, s: NodeSet) -> Vec<NodeRef> {
    s.iter().map(|i| node_ref(d, i)).collect()
}

pub fn weight_terms(d: &DynkinDiagram, w: &Weight) -> Vec<Term> {
    w.0.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let [comp, idx] = node_ref(d, i);
            [comp as i64, idx as i64, c]
        })
        .collect()
}

impl From<&SphericalSystem> for SystemJson {
    fn from(s: &SphericalSystem) -> Self {
        let d = s.diagram();
        SystemJson {
            diagram: d.into(),
            sp: node_refs(d, s.sp()),
            sigma: s.sigma().iter().map(|w| weight_terms(d, w)).collect(),
        }
    }
}

impl SystemJson {
    /// Builds the system on the canonical diagram. Components given in a
    /// non-canonical form (C2, D3, ...) are renumbered accordingly.
    pub fn to_system(&self) -> Result<SphericalSystem, Error> {
        let (d, map) = DynkinDiagram::with_positions(&self.diagram.spec()?)?;
        let at = |c: i64, i: i64| -> Result<usize, Error> {
            let bad = || Error::UnknownNode(format!("[{}, {}]", c, i));
            let (c, i) = (usize::try_from(c).map_err(|_| bad())?, usize::try_from(i).map_err(|_| bad())?);
            map.get(c.wrapping_sub(1)).and_then(|m| m.get(i.wrapping_sub(1))).copied().ok_or_else(bad)
        };
        let mut sp = NodeSet::EMPTY;
        for &[c, i] in &self.sp {
            sp.insert(at(c as i64, i as i64)?);
        }
        let mut sigma = Vec::with_capacity(self.sigma.len());
        for terms in &self.sigma {
            let mut w = Weight::zero(d.rank());
            for &[c, i, k] in terms {
                w.0[at(c, i)?] += k;
            }
            sigma.push(w);
        }
        SphericalSystem::new(d, sp, sigma)
    }
}

/// Parses a node list like `1,3,2'` (primes select later components).
pub fn parse_nodes(d: &DynkinDiagram, s: &str) -> Result<NodeSet, Error> {
    let mut out = NodeSet::EMPTY;
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let primes = tok.chars().rev().take_while(|&c| c == '\'').count();
        let idx: usize = tok[..tok.len() - primes].parse().map_err(|_| Error::UnknownNode(tok.to_string()))?;
        let i = (0..d.rank())
            .find(|&i| d.node(i).component == primes && d.node(i).index == idx)
            .ok_or_else(|| Error::UnknownNode(tok.to_string()))?;
        out.insert(i);
    }
    Ok(out)
}

pub fn colour_name(i: usize) -> String {
    format!("D{}", i + 1)
}

pub fn colour_names(m: ColourMask) -> Vec<String> {
    m.iter().map(colour_name).collect()
}

/// Parses `D1,D3` (the `D` is optional).
pub fn parse_colours(colours: &ColourSet, s: &str) -> Result<ColourMask, Error> {
    let mut m = ColourMask::EMPTY;
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let digits = tok.strip_prefix(['D', 'd']).unwrap_or(tok);
        match digits.parse::<usize>() {
            Ok(k) if (1..=colours.len()).contains(&k) => m.insert(k - 1),
            _ => return Err(Error::BadParameters(format!("no colour {}", tok))),
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationJson {
    pub axiom: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub nodes: Vec<NodeRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
}

impl ViolationJson {
    pub fn new(d: &DynkinDiagram, v: &Violation) -> Self {
        let (axiom, nodes, gamma) = match *v {
            Violation::Sigma1 { alpha, gamma } => ("Σ1", vec![alpha], Some(gamma)),
            Violation::Sigma2 { alpha, beta, gamma } => ("Σ2", vec![alpha, beta], Some(gamma)),
            Violation::S { gamma } => ("S", vec![], Some(gamma)),
            Violation::RPrime { alpha } => ("R'", vec![alpha], None),
            Violation::Dependent => ("independence", vec![], None),
            Violation::Repeated { gamma } => ("distinct", vec![], Some(gamma)),
        };
        ViolationJson {
            axiom: axiom.to_string(),
            nodes: nodes.into_iter().map(|i| node_ref(d, i)).collect(),
            gamma: gamma.map(|g| g + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationJson {
    pub valid: bool,
    pub violations: Vec<ViolationJson>,
}

impl ValidationJson {
    pub fn new(d: &DynkinDiagram, r: &ValidationReport) -> Self {
        ValidationJson { valid: r.is_valid(), violations: r.violations().map(|v| ViolationJson::new(d, v)).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColourJson {
    pub name: String,
    pub nodes: Vec<NodeRef>,
    /// ⟨ρ(D), γ⟩ for γ in Σ, in order.
    pub rho: Vec<i64>,
}

pub fn colours_json(d: &DynkinDiagram, c: &ColourSet) -> Vec<ColourJson> {
    c.classes
        .iter()
        .zip(&c.rho)
        .enumerate()
        .map(|(k, (nodes, rho))| ColourJson { name: colour_name(k), nodes: node_refs(d, *nodes), rho: rho.clone() })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientJson {
    pub delta_prime: Vec<String>,
    pub sp: Vec<NodeRef>,
    pub sigma: Vec<Vec<Term>>,
    /// The elements of Σ/Δ′ in Σ-coordinates.
    pub coords: Vec<Vec<i64>>,
    pub is_valid_system: bool,
    pub smooth: bool,
    pub homogeneous: bool,
}

impl QuotientJson {
    pub fn new(d: &DynkinDiagram, q: &QuotientResult) -> Self {
        QuotientJson {
            delta_prime: colour_names(q.delta_prime),
            sp: node_refs(d, q.sp_out),
            sigma: q.sigma_out.iter().map(|w| weight_terms(d, w)).collect(),
            coords: q.coords.clone(),
            is_valid_system: q.is_valid_system,
            smooth: q.smooth,
            homogeneous: q.homogeneous,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub index: usize,
    pub family: String,
    pub params: Vec<usize>,
    pub label: String,
}

impl From<&Classification> for ClassificationJson {
    fn from(c: &Classification) -> Self {
        ClassificationJson {
            index: c.index,
            family: c.family.to_string(),
            params: c.params.clone(),
            label: c.label.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentAnalysisJson {
    /// Positions in Σ.
    pub sigma: Vec<usize>,
    pub delta: Vec<String>,
    pub isolated: bool,
    pub erasable: bool,
    pub quasi_erasable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub localisation: Option<SystemJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationJson>,
}

impl ComponentAnalysisJson {
    pub fn new(a: &ComponentAnalysis) -> Self {
        ComponentAnalysisJson {
            sigma: (0..64).filter(|k| a.component >> k & 1 == 1).map(|k| k + 1).collect(),
            delta: colour_names(a.delta_of),
            isolated: a.isolated,
            erasable: a.erasable,
            quasi_erasable: a.quasi_erasable,
            localisation: None,
            classification: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratedJson {
    #[serde(flatten)]
    pub system: SystemJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strict: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub diagram: DiagramJson,
    pub characteristic: Vec<i64>,
    pub height: i64,
    pub spherical: bool,
    /// `[level, dim 𝔤(level)]`, by increasing level.
    pub grading: Vec<[i64; 2]>,
    pub dim_h: usize,
    pub dim_hu: usize,
    pub dim_orbit: usize,
}

impl OrbitJson {
    pub fn new(
        d: &DynkinDiagram,
        characteristic: &[i64],
        height: i64,
        grading: Vec<[i64; 2]>,
        dims: OrbitDims,
    ) -> Self {
        OrbitJson {
            diagram: d.into(),
            characteristic: characteristic.to_vec(),
            height,
            spherical: matches!(height, 2 | 3),
            grading,
            dim_h: dims.dim_h,
            dim_hu: dims.dim_hu,
            dim_orbit: dims.dim_orbit,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub kind: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
}

impl From<&Error> for ErrorJson {
    fn from(e: &Error) -> Self {
        ErrorJson { kind: e.kind().to_string(), message: e.to_string(), line: None, column: None }
    }
}

impl From<&serde_json::Error> for ErrorJson {
    fn from(e: &serde_json::Error) -> Self {
        ErrorJson { kind: "json".to_string(), message: e.to_string(), line: Some(e.line()), column: Some(e.column()) }
    }
}
