//! Localisation, distinguished colour subsets, quotients, decompositions,
//! affinity and the dimension identities.

use alloc::vec;
use alloc::vec::Vec;

use crate::dynkin::{DynkinDiagram, NodeSet, Weight};
use crate::hilbert;
use crate::lp;
use crate::system::{ColourMask, ColourSet, SphericalSystem};
use crate::Error;

/// Restriction to the nodes `s`: S^p ∩ S′ and the γ with Supp γ ⊆ S′, on the
/// induced subdiagram.
pub fn localize(sys: &SphericalSystem, s: NodeSet) -> Result<SphericalSystem, Error> {
    let d = sys.diagram();
    if !s.is_subset(d.all_nodes()) {
        return Err(Error::Shape(alloc::string::String::from("localisation outside the diagram")));
    }
    let (sub, idx) = induced(d, s)?;
    let keep: Vec<usize> = s.iter().collect();
    let sp = sys.sp().iter().filter(|i| s.contains(*i)).map(|i| idx[i]).collect();
    let sigma = sys
        .sigma()
        .iter()
        .filter(|w| w.support().is_subset(s))
        .map(|w| {
            let mut v = vec![0; keep.len()];
            for &i in &keep {
                v[idx[i]] = w.0[i];
            }
            Weight(v)
        })
        .collect();
    SphericalSystem::new(sub, sp, sigma)
}

/// The induced subdiagram on `s`, with a map from old flat indices to new
/// ones (`usize::MAX` outside `s`). Nodes keep their relative order.
pub fn induced(d: &DynkinDiagram, s: NodeSet) -> Result<(DynkinDiagram, Vec<usize>), Error> {
    use crate::dynkin::Family;
    // Split `s` into connected pieces, identify each by embedding the
    // candidate connected types of the same rank.
    let mut idx = vec![usize::MAX; d.rank()];
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    let mut seen = NodeSet::EMPTY;
    for i in s.iter() {
        if seen.contains(i) {
            continue;
        }
        let mut piece = vec![i];
        seen.insert(i);
        let mut k = 0;
        while k < piece.len() {
            let a = piece[k];
            for b in s.iter() {
                if !seen.contains(b) && d.cartan(a, b) != 0 {
                    seen.insert(b);
                    piece.push(b);
                }
            }
            k += 1;
        }
        piece.sort();
        pieces.push(piece);
    }
    let mut spec = Vec::new();
    let mut order: Vec<(usize, Vec<usize>)> = Vec::new();
    for piece in &pieces {
        let n = piece.len();
        let mut found = None;
        for fam in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            let Ok((pd, _)) = DynkinDiagram::with_positions(&[(fam, n)]) else { continue };
            if pd.components().len() != 1 {
                continue;
            }
            let within: NodeSet = piece.iter().copied().collect();
            if let Some(emb) = crate::rank_one::embeddings_within(&pd, d, within).into_iter().next() {
                found = Some((pd.components()[0], emb));
                break;
            }
        }
        let (comp, emb) = found.ok_or_else(|| Error::InvalidDiagram(alloc::format!("{:?}", piece)))?;
        spec.push((comp.family, comp.rank));
        order.push((spec.len() - 1, emb));
    }
    let (sub, map) = DynkinDiagram::with_positions(&spec)?;
    for (c, nodes) in order {
        for (p, &old) in nodes.iter().enumerate() {
            idx[old] = map[c][p];
        }
    }
    Ok((sub, idx))
}

/// Outcome of a quotient computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientResult {
    pub delta_prime: ColourMask,
    pub sp_out: NodeSet,
    pub sigma_out: Vec<Weight>,
    /// Hilbert basis elements in Σ-coordinates.
    pub coords: Vec<Vec<i64>>,
    pub is_valid_system: bool,
    pub smooth: bool,
    pub homogeneous: bool,
}

/// Is there φ ∈ ℤ>0Δ′ with ⟨ρ(φ),γ⟩ ≥ 0 for all γ ∈ Σ? The empty set is
/// distinguished.
pub fn is_distinguished(colours: &ColourSet, dp: ColourMask) -> bool {
    distinguished_witness(colours, dp).is_some()
}

/// A positive integer φ over Δ′ (in colour order), when one exists.
pub fn distinguished_witness(colours: &ColourSet, dp: ColourMask) -> Option<Vec<i64>> {
    let rows: Vec<usize> = dp.iter().collect();
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let k = colours.rho.first().map_or(0, |r| r.len());
    let sum = |g: usize| -> i64 { rows.iter().map(|&d| colours.rho[d][g]).sum() };
    if (0..k).all(|g| sum(g) >= 0) {
        return Some(vec![1; rows.len()]);
    }
    let dead = (0..k).any(|g| rows.iter().all(|&d| colours.rho[d][g] <= 0) && sum(g) < 0);
    if dead {
        return None;
    }
    // Constraints: one per γ, variables φ_D.
    let m: Vec<Vec<lp::Rational>> =
        (0..k).map(|g| rows.iter().map(|&d| lp::rat(colours.rho[d][g])).collect()).collect();
    let x = lp::feasible_nonneg(&m, &vec![true; rows.len()])?;
    Some(lp::to_integer_vector(&x).into_iter().map(|v| i64::try_from(v).expect("witness fits in i64")).collect())
}

/// Quotient by a distinguished subset; faults otherwise.
pub fn quotient(sys: &SphericalSystem, colours: &ColourSet, dp: ColourMask) -> Result<QuotientResult, Error> {
    quotient_capped(sys, colours, dp, hilbert::DEFAULT_STATE_CAP)
}

pub fn quotient_capped(
    sys: &SphericalSystem,
    colours: &ColourSet,
    dp: ColourMask,
    cap: usize,
) -> Result<QuotientResult, Error> {
    if !is_distinguished(colours, dp) {
        return Err(Error::NotDistinguished);
    }
    let (coords, sigma_out) = kernel_basis(sys, colours, dp, cap)?;
    let sp_out = sys.sp().union(colours.nodes(dp));
    let smooth = sigma_out.iter().all(|w| sys.sigma().contains(w));
    let homogeneous = sigma_out.is_empty();
    let is_valid_system =
        SphericalSystem::new(sys.diagram().clone(), sp_out, sigma_out.clone()).map(|q| q.is_valid()).unwrap_or(false);
    Ok(QuotientResult { delta_prime: dp, sp_out, sigma_out, coords, is_valid_system, smooth, homogeneous })
}

/// Σ/Δ′ without the distinguishedness check or validation.
pub fn kernel_basis(
    sys: &SphericalSystem,
    colours: &ColourSet,
    dp: ColourMask,
    cap: usize,
) -> Result<(Vec<Vec<i64>>, Vec<Weight>), Error> {
    let k = sys.sigma().len();
    let m: Vec<Vec<i64>> = dp.iter().map(|d| colours.rho[d].clone()).collect();
    let coords = hilbert::hilbert_basis_capped(&m, k, cap)?;
    let weights = coords.iter().map(|x| combine(sys, x)).collect();
    Ok((coords, weights))
}

/// Σ x_k γ_k.
pub fn combine(sys: &SphericalSystem, x: &[i64]) -> Weight {
    let mut w = Weight::zero(sys.diagram().rank());
    for (g, &c) in sys.sigma().iter().zip(x) {
        for (a, b) in w.0.iter_mut().zip(&g.0) {
            *a += c * b;
        }
    }
    w
}

pub fn is_smooth_subset(sys: &SphericalSystem, colours: &ColourSet, dp: ColourMask) -> Result<bool, Error> {
    Ok(quotient(sys, colours, dp)?.smooth)
}

pub fn is_homogeneous_subset(sys: &SphericalSystem, colours: &ColourSet, dp: ColourMask) -> Result<bool, Error> {
    Ok(quotient(sys, colours, dp)?.homogeneous)
}

/// {D_α : α ∈ Supp Σ}.
pub fn underline_empty(sys: &SphericalSystem, colours: &ColourSet) -> ColourMask {
    colours.meeting(sys.support())
}

/// The cuspidal core: localisation at Supp Σ.
pub fn decuspidalize(sys: &SphericalSystem) -> Result<SphericalSystem, Error> {
    localize(sys, sys.support())
}

/// Per-subset data used by the decomposition conditions.
#[derive(Clone, Debug)]
struct SubsetInfo {
    /// Σ ∖ Σ/Δ′, as positions in Σ.
    lost: u64,
    nodes: NodeSet,
    smooth: bool,
    valid: bool,
    /// dim G/P_{S^p/Δ′} + |Σ/Δ′|.
    dim: i64,
}

fn subset_info(
    sys: &SphericalSystem,
    colours: &ColourSet,
    dp: ColourMask,
    check_valid: bool,
) -> Result<SubsetInfo, Error> {
    let (_, out) = kernel_basis(sys, colours, dp, hilbert::DEFAULT_STATE_CAP)?;
    let mut lost = 0u64;
    for (k, g) in sys.sigma().iter().enumerate() {
        if !out.contains(g) {
            lost |= 1 << k;
        }
    }
    let smooth = out.iter().all(|w| sys.sigma().contains(w));
    let nodes = colours.nodes(dp);
    let sp = sys.sp().union(nodes);
    let dim = sys.diagram().dim_flag(sp) as i64 + out.len() as i64;
    let valid =
        !check_valid || SphericalSystem::new(sys.diagram().clone(), sp, out).map(|q| q.is_valid()).unwrap_or(false);
    Ok(SubsetInfo { lost, nodes, smooth, valid, dim })
}

fn conditions(d: &DynkinDiagram, a: &SubsetInfo, b: &SubsetInfo) -> bool {
    a.lost & b.lost == 0
        && a.nodes.iter().all(|i| b.nodes.iter().all(|j| d.cartan(i, j) == 0))
        && (a.smooth || b.smooth)
}

/// Do nonempty distinguished Δ1, Δ2 decompose the system, under the default
/// rule?
pub fn decomposes(sys: &SphericalSystem, colours: &ColourSet, d1: ColourMask, d2: ColourMask) -> Result<bool, Error> {
    decomposes_with(sys, colours, d1, d2, DecompositionRule::default())
}

pub fn decomposes_with(
    sys: &SphericalSystem,
    colours: &ColourSet,
    d1: ColourMask,
    d2: ColourMask,
    rule: DecompositionRule,
) -> Result<bool, Error> {
    if d1.is_empty() || d2.is_empty() {
        return Err(Error::EmptyColourSet);
    }
    if !is_distinguished(colours, d1) || !is_distinguished(colours, d2) {
        return Err(Error::NotDistinguished);
    }
    if d1.0 & d2.0 != 0 {
        return Ok(false);
    }
    let info = |m| subset_info(sys, colours, m, rule.require_valid_quotients);
    let (a, b) = (info(d1)?, info(d2)?);
    if !(a.valid && b.valid && conditions(sys.diagram(), &a, &b)) {
        return Ok(false);
    }
    Ok(!rule.dimension_count || {
        let c = info(ColourMask(d1.0 | d2.0))?;
        dimension_count(sys, &a, &b, &c)
    })
}

/// Options for the decomposition search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecompositionRule {
    /// Also require both quotients to be spherical systems.
    pub require_valid_quotients: bool,
    /// Also require dim X + dim X/Δ3 = dim X/Δ1 + dim X/Δ2, with
    /// Δ3 = Δ1 ∪ Δ2: the dimension of the fibre product the decomposition
    /// stands for.
    pub dimension_count: bool,
}

impl Default for DecompositionRule {
    fn default() -> Self {
        DecompositionRule { require_valid_quotients: false, dimension_count: true }
    }
}

fn dimension_count(sys: &SphericalSystem, a: &SubsetInfo, b: &SubsetInfo, c: &SubsetInfo) -> bool {
    let dim = sys.diagram().dim_flag(sys.sp()) as i64 + sys.sigma().len() as i64;
    dim + c.dim == a.dim + b.dim
}

/// First decomposing pair `(Δ1, Δ2)` with Δ1 < Δ2 as bitmasks, or `None`.
pub fn is_decomposable(sys: &SphericalSystem, colours: &ColourSet) -> Result<Option<(ColourMask, ColourMask)>, Error> {
    is_decomposable_with(sys, colours, DecompositionRule::default())
}

pub fn is_decomposable_with(
    sys: &SphericalSystem,
    colours: &ColourSet,
    rule: DecompositionRule,
) -> Result<Option<(ColourMask, ColourMask)>, Error> {
    let n = colours.len();
    if n < 2 {
        return Ok(None);
    }
    if n > 20 {
        return Err(Error::BudgetExceeded("more than 20 colours"));
    }
    let total = 1u64 << n;
    let mut info: Vec<Option<Option<SubsetInfo>>> = vec![None; total as usize];
    let get = |m: u64, info: &mut Vec<Option<Option<SubsetInfo>>>| -> Result<Option<SubsetInfo>, Error> {
        if let Some(x) = &info[m as usize] {
            return Ok(x.clone());
        }
        let cm = ColourMask(m);
        let v = if is_distinguished(colours, cm) {
            let s = subset_info(sys, colours, cm, rule.require_valid_quotients)?;
            if s.valid {
                Some(s)
            } else {
                None
            }
        } else {
            None
        };
        info[m as usize] = Some(v.clone());
        Ok(v)
    };
    for m1 in 1..total {
        let Some(a) = get(m1, &mut info)? else { continue };
        // m2 ranges over nonempty subsets of the complement, above m1.
        let rest = (total - 1) & !m1;
        let mut m2 = rest;
        let mut subs = Vec::new();
        while m2 != 0 {
            if m2 > m1 {
                subs.push(m2);
            }
            m2 = (m2 - 1) & rest;
        }
        subs.sort();
        for m2 in subs {
            let Some(b) = get(m2, &mut info)? else { continue };
            if !conditions(sys.diagram(), &a, &b) {
                continue;
            }
            if rule.dimension_count {
                let Some(c) = get(m1 | m2, &mut info)? else { continue };
                if !dimension_count(sys, &a, &b, &c) {
                    continue;
                }
            }
            return Ok(Some((ColourMask(m1), ColourMask(m2))));
        }
    }
    Ok(None)
}

/// Exists ξ ∈ ℤ≥0Σ with ⟨ρ(D),ξ⟩ > 0 for every colour D?
pub fn is_affine_feasible(sys: &SphericalSystem, colours: &ColourSet) -> bool {
    affine_witness(sys, colours).is_some()
}

pub fn affine_witness(sys: &SphericalSystem, colours: &ColourSet) -> Option<Vec<i64>> {
    let k = sys.sigma().len();
    let x = lp::feasible_int(&colours.rho, &vec![0; k], &vec![1; colours.len()])?;
    Some(lp::to_integer_vector(&x).into_iter().map(|v| i64::try_from(v).expect("witness fits in i64")).collect())
}

/// (dim G/H, rank Ξ(H)) = (dim G/P_{S^p} + |Σ|, |Δ| − |Σ|).
pub fn expected_dims(sys: &SphericalSystem, colours: &ColourSet) -> (i64, i64) {
    let dim = sys.diagram().dim_flag(sys.sp()) as i64 + sys.sigma().len() as i64;
    (dim, colours.len() as i64 - sys.sigma().len() as i64)
}
