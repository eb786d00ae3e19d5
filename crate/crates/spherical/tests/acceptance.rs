//! Acceptance criteria. Every criterion prints one PASS/FAIL line; the test
//! fails if any criterion does. All tolerances are exact.

mod common;

use std::collections::HashSet;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use spherical::{render_svg, render_text};
use spherical_core::appendix::{
    grading_dims, halved_companion, height, height3_table, is_spherical_orbit, symmetric_system, symmetric_table,
};
use spherical_core::dictionary::{
    self, decomposes, expected_dims, is_affine_feasible, is_distinguished, localize, quotient,
};
use spherical_core::enumerate::{catalog_instances, classify, enumerate_primitive, enumerate_systems, is_primitive};
use spherical_core::families::{family_catalog, instantiate, lookup_family};
use spherical_core::hilbert::{hilbert_basis, hilbert_basis_brute};
use spherical_core::rank_one::{lookup, rank_one_table, Support};
use spherical_core::{ColourMask, DynkinDiagram, SphericalSystem};

type Outcome = Result<String, String>;
/// Name, check, and wall-clock limit in milliseconds.
type Criterion = (&'static str, fn() -> Outcome, Option<u128>);

fn d(s: &str) -> DynkinDiagram {
    DynkinDiagram::parse(s).unwrap()
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for row in rank_one_table() {
        let (min, max) = match row.support {
            Support::Connected { min, max, .. } => (min, max.min(min + 4)),
            Support::OrthogonalPair => (2, 2),
        };
        for n in min..=max {
            let (dg, sp, g) = row.instantiate(n).ok_or(format!("{} at {}", row.label, n))?;
            let s = SphericalSystem::new(dg, sp, vec![g]).map_err(|e| e.to_string())?;
            if !s.is_valid() {
                return Err(format!("{} fails validation: {:?}", row.label_at(n), s.validate()));
            }
            checked += 1;
        }
    }
    for (alias, target) in [("d(2)", "aa(1,1)"), ("b'(1)", "a'(1)"), ("c*(2)", "b*(2)")] {
        let (a, an) = lookup(alias).ok_or(format!("alias {} unresolved", alias))?;
        let (t, tn) = lookup(target).ok_or(format!("{} unresolved", target))?;
        if a.instantiate(an) != t.instantiate(tn) {
            return Err(format!("{} and {} disagree", alias, target));
        }
    }
    Ok(format!("{} rows, {} instances, 3 aliases", rank_one_table().len(), checked))
}

const CRITERION_2: [&str; 22] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "A5", "B5", "C5", "D5", "A1,A1", "A1,A3",
    "B2,B2", "C3,C3", "G2,G2", "F4,F4",
];

fn canonical_set(v: impl IntoIterator<Item = SphericalSystem>) -> HashSet<SphericalSystem> {
    v.into_iter().map(|s| s.canonical()).collect()
}

fn criterion_2() -> Outcome {
    let mut total = 0;
    for name in CRITERION_2 {
        let dg = d(name);
        let found = canonical_set(enumerate_primitive(&dg).map_err(|e| format!("{}: {}", name, e))?);
        let expected = canonical_set(catalog_instances(&dg).into_iter().map(|(s, _)| s));
        if found != expected {
            return Err(format!(
                "{}: {} enumerated, {} in the catalog, {} extra, {} missing",
                name,
                found.len(),
                expected.len(),
                found.difference(&expected).count(),
                expected.difference(&found).count()
            ));
        }
        total += found.len();
    }
    for (name, count) in [("G2", 4), ("F4", 6)] {
        let n = enumerate_primitive(&d(name)).unwrap().len();
        if n != count {
            return Err(format!("{} has {} primitive systems, expected {}", name, n, count));
        }
    }
    Ok(format!("{} diagrams, {} primitive systems, exact set equality", CRITERION_2.len(), total))
}

/// The non-strict catalog families, by label: b(n), a(p)+b(q), ac*(p)+b(q),
/// cc(p+q) at q = 2, g(2).
fn catalog_says_non_strict(family: &str, params: &[usize]) -> bool {
    match family {
        "b(n)" | "a(p)+b(q)" | "ac*(p)+b(q)" | "g(2)" => true,
        "cc(p+q)" => params[1] == 2,
        _ => false,
    }
}

fn criterion_3() -> Outcome {
    let named: Vec<&str> = family_catalog()
        .iter()
        .filter(|f| !matches!(f.strict, spherical_core::families::Strictness::Strict))
        .map(|f| f.label)
        .collect();
    if named != ["b(n)", "a(p)+b(q)", "ac*(p)+b(q)", "cc(p+q)", "g(2)"] {
        return Err(format!("catalog marks {:?} as non-strict", named));
    }
    let mut non_strict = 0;
    for name in CRITERION_2 {
        let dg = d(name);
        for s in enumerate_primitive(&dg).unwrap() {
            let c = classify(&s).ok_or(format!("{}: unclassified primitive", name))?;
            if s.is_strict() == catalog_says_non_strict(c.family, &c.params) {
                return Err(format!("{}: {} has strictness {}", name, c.label, s.is_strict()));
            }
            non_strict += usize::from(!s.is_strict());
        }
    }
    Ok(format!("{} non-strict primitives, all from the five named families", non_strict))
}

fn criterion_4() -> Outcome {
    for row in symmetric_table() {
        let s = symmetric_system(row.label, row.minimal).map_err(|e| format!("{} {}: {}", row.label, row.case, e))?;
        let (family, params) = row.expected_family(row.minimal);
        let c = classify(&s).ok_or(format!("{} {}: unclassified", row.label, row.case))?;
        if (c.family, c.params.as_slice()) != (family, params.as_slice()) {
            return Err(format!("{} {}: {} instead of {}", row.label, row.case, c.label, family));
        }
    }
    for n in 2..=5 {
        let normaliser = symmetric_system("B II", &[n]).map_err(|e| e.to_string())?;
        let companion = halved_companion("B II", &[n]).map_err(|e| e.to_string())?;
        if normaliser != instantiate("b'(n)", &[n]).unwrap() || companion != instantiate("b(n)", &[n]).unwrap() {
            return Err(format!("B II at n = {}", n));
        }
    }
    let rows: HashSet<&str> = symmetric_table().iter().map(|r| r.label).collect();
    Ok(format!("{} rows ({} labels), B II gives b'(n) and b(n)", symmetric_table().len(), rows.len()))
}

/// Brute force: ξ ∈ {0..=bound}^Σ with ⟨ρ(D), ξ⟩ > 0 for every colour.
fn affine_brute(s: &SphericalSystem, bound: i64) -> bool {
    let c = s.colours().unwrap();
    let k = s.sigma().len();
    let mut x = vec![0i64; k];
    loop {
        if c.rho.iter().all(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>() > 0) {
            return true;
        }
        let mut j = 0;
        while j < k && x[j] == bound {
            x[j] = 0;
            j += 1;
        }
        if j == k {
            return false;
        }
        x[j] += 1;
    }
}

fn criterion_5() -> Outcome {
    let affine: Vec<(&str, Vec<usize>)> = vec![
        ("ac*(n)", vec![4]),
        ("ac*(n)", vec![6]),
        ("bc'(n)", vec![2]),
        ("bc'(n)", vec![3]),
        ("bc'(n)", vec![4]),
        ("bc'(n)", vec![5]),
        ("b**(3)", vec![]),
        ("b*(4)+b**(3)", vec![]),
        ("aa(1,1)+c*(n)", vec![3]),
        ("aa(1,1)+c*(n)", vec![4]),
        ("aa(1,1)+c*(n1)+c*(n2)", vec![3, 3]),
        ("aa(1,1)+c*(n1)+c*(n2)", vec![3, 4]),
        ("a'(1)+c*(q)", vec![3]),
        ("a'(1)+c*(q)", vec![4]),
        ("ds*(4)", vec![]),
        ("g(2)", vec![]),
        ("g'(2)", vec![]),
    ];
    let mut not_affine: Vec<(&str, Vec<usize>)> = (2..=5).map(|n| ("b*(n)", vec![n])).collect();
    not_affine.extend((3..=5).map(|n| ("c*(n)", vec![n])));
    for (want, list) in [(true, &affine), (false, &not_affine)] {
        for (label, p) in list.iter() {
            let s = instantiate(label, p).map_err(|e| format!("{} {:?}: {}", label, p, e))?;
            let c = s.colours().unwrap();
            let lp = is_affine_feasible(&s, &c);
            let brute = affine_brute(&s, 12);
            if lp != want || brute != want {
                return Err(format!("{} {:?}: feasibility {}, brute force {}", label, p, lp, brute));
            }
        }
    }
    Ok(format!("{} affine, {} not affine", affine.len(), not_affine.len()))
}

fn criterion_6() -> Outcome {
    for row in height3_table() {
        let o = row.instantiate(row.minimal).map_err(|e| e.to_string())?;
        let h = height(&o.diagram, &o.characteristic).unwrap();
        if h != 3 {
            return Err(format!("{} has height {}", row.group, h));
        }
    }
    let g2 = d("G2");
    for (ch, want) in [([0, 1], 2), ([1, 0], 3), ([0, 2], 4)] {
        if height(&g2, &ch).unwrap() != want {
            return Err(format!("G2 {:?}", ch));
        }
    }
    let mut tested = 0;
    let mut diagrams: Vec<DynkinDiagram> = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1,A1", "A1,A2"].map(d).to_vec();
    diagrams.extend(height3_table().iter().map(|r| r.instantiate(r.minimal).unwrap().diagram));
    for dg in &diagrams {
        let r = dg.rank();
        let total = if r <= 4 { 3usize.pow(r as u32) } else { 1 };
        for code in 0..total {
            let ch: Vec<i64> = (0..r).map(|i| (code / 3usize.pow(i as u32) % 3) as i64).collect();
            let g = grading_dims(dg, &ch).unwrap();
            if g.values().sum::<usize>() != dg.dimension() {
                return Err(format!("{} {:?}: grading does not sum to dim g", dg, ch));
            }
            let h = height(dg, &ch).unwrap();
            if is_spherical_orbit(dg, &ch).unwrap() != (h == 2 || h == 3) {
                return Err(format!("{} {:?}", dg, ch));
            }
            tested += 1;
        }
    }
    Ok(format!("{} height-3 rows as printed, {} characteristics summed", height3_table().len(), tested))
}

fn small_systems() -> Vec<SphericalSystem> {
    let mut out = Vec::new();
    for name in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1,A1", "A1,A2", "D4"] {
        out.extend(enumerate_systems(&d(name)).unwrap());
    }
    out
}

fn mapped_mask(
    from: &spherical_core::ColourSet,
    to: &spherical_core::ColourSet,
    m: ColourMask,
    perm: &[usize],
) -> ColourMask {
    m.iter().map(|k| to.classes.iter().position(|c| *c == from.classes[k].map(perm)).unwrap()).collect()
}

fn criterion_7() -> Outcome {
    // Hilbert bases against brute force.
    let mut runner = TestRunner::new(Config { cases: 600, failure_persistence: None, ..Config::default() });
    let matrices =
        (1usize..=4).prop_flat_map(|k| (Just(k), prop::collection::vec(prop::collection::vec(-4i64..=4, k), 1..=2)));
    runner
        .run(&matrices, |(k, m)| {
            let fast = hilbert_basis(&m, k).unwrap();
            let bound = 10;
            let brute = hilbert_basis_brute(&m, k, bound);
            let boxed: Vec<Vec<i64>> = fast.iter().filter(|v| v.iter().all(|&c| c <= bound)).cloned().collect();
            let (mut a, mut b) = (boxed, brute);
            a.sort();
            b.sort();
            prop_assert_eq!(a, b);
            Ok(())
        })
        .map_err(|e| format!("Hilbert basis: {}", e))?;

    // Dictionary invariants over enumerated systems.
    let systems = small_systems();
    let n = systems.len();
    let mut runner = TestRunner::new(Config { cases: 1200, failure_persistence: None, ..Config::default() });
    runner
        .run(&(0..n, any::<u64>(), any::<u64>()), |(i, r1, r2)| {
            let s = &systems[i];
            let c = s.colours().unwrap();
            let q = quotient(s, &c, ColourMask::EMPTY).unwrap();
            prop_assert_eq!(&q.sigma_out, &s.sigma().to_vec());
            prop_assert_eq!(q.sp_out, s.sp());
            prop_assert!(localize(s, s.support()).unwrap().is_cuspidal());
            let full = c.all().0;
            let distinguished: Vec<ColourMask> =
                (1..=full).filter(|m| m & !full == 0).map(ColourMask).filter(|&m| is_distinguished(&c, m)).collect();
            if !distinguished.is_empty() {
                let pick = |r: u64| distinguished[(r % distinguished.len() as u64) as usize];
                let (m1, m2) = (pick(r1), pick(r2));
                prop_assert_eq!(decomposes(s, &c, m1, m2).unwrap(), decomposes(s, &c, m2, m1).unwrap());
            }
            let m1 = ColourMask(r1 & full);
            for perm in s.diagram().automorphisms() {
                let t = s.map(&perm);
                let tc = t.colours().unwrap();
                prop_assert_eq!(t.is_valid(), s.is_valid());
                prop_assert_eq!(t.is_strict(), s.is_strict());
                prop_assert_eq!(is_distinguished(&tc, mapped_mask(&c, &tc, m1, &perm)), is_distinguished(&c, m1));
                prop_assert_eq!(is_affine_feasible(&t, &tc), is_affine_feasible(s, &c));
                prop_assert_eq!(is_primitive(&t).unwrap(), is_primitive(s).unwrap());
                prop_assert_eq!(
                    dictionary::is_decomposable(&t, &tc).unwrap().is_some(),
                    dictionary::is_decomposable(s, &c).unwrap().is_some()
                );
            }
            Ok(())
        })
        .map_err(|e| format!("dictionary: {}", e))?;
    Ok(format!("600 Hilbert instances, 1200 dictionary cases over {} systems", n))
}

fn dim_so(m: i64) -> i64 {
    m * (m - 1) / 2
}

fn dim_sl(m: i64) -> i64 {
    m * m - 1
}

fn criterion_8() -> Outcome {
    // (system, dim G − dim H, rank of the character group of H)
    let mut fixtures: Vec<(String, SphericalSystem, i64, i64)> = Vec::new();
    for n in 2..=5i64 {
        // SO(2n) in SO(2n+1)
        let s = instantiate("b(n)", &[n as usize]).unwrap();
        fixtures.push((format!("b({})", n), s, dim_so(2 * n + 1) - dim_so(2 * n), 0));
    }
    for n in 1..=5i64 {
        // N(SO(n+1)) in SL(n+1)
        let s = instantiate("ao(n)", &[n as usize]).unwrap();
        fixtures.push((format!("ao({})", n), s, dim_sl(n + 1) - dim_so(n + 1), 0));
    }
    // diagonal SL(2) in SL(2)×SL(2)
    fixtures.push(("aa(1,1)".into(), instantiate("aa(p,p)", &[1]).unwrap(), 2 * dim_sl(2) - dim_sl(2), 0));
    for (label, s, dim, rank) in &fixtures {
        let c = s.colours().unwrap();
        let got = expected_dims(s, &c);
        if got != (*dim, *rank) {
            return Err(format!("{}: {:?}, expected {:?}", label, got, (dim, rank)));
        }
    }
    Ok(format!("{} fixtures", fixtures.len()))
}

fn criterion_9() -> Outcome {
    let dir = common::golden_dir();
    let cases = common::golden_cases();
    for (label, sys) in &cases {
        for (ext, body) in [("txt", render_text(sys)), ("svg", render_svg(sys))] {
            let path = dir.join(format!("{}.{}", common::file_stem(label), ext));
            let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {}", path.display(), e))?;
            if want != body {
                return Err(format!("{} differs", path.display()));
            }
        }
    }
    Ok(format!("{} diagrams, text and SVG", cases.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("rank-one catalog", criterion_1, Some(1_000)),
        ("primitive lists", criterion_2, Some(600_000)),
        ("strictness", criterion_3, None),
        ("symmetric spaces", criterion_4, None),
        ("affinity", criterion_5, None),
        ("nilpotent heights", criterion_6, Some(1_000)),
        ("dictionary properties", criterion_7, None),
        ("dimension identities", criterion_8, None),
        ("rendering", criterion_9, None),
    ];
    let mut failed = Vec::new();
    for (k, (name, check, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut r = check();
        let ms = t.elapsed().as_millis();
        if let (Ok(_), Some(limit)) = (&r, limit) {
            if ms > *limit {
                r = Err(format!("over the {} ms limit", limit));
            }
        }
        match &r {
            Ok(detail) => println!("criterion {} ({}): PASS in {} ms: {}", k + 1, name, ms, detail),
            Err(detail) => {
                println!("criterion {} ({}): FAIL in {} ms: {}", k + 1, name, ms, detail);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}

#[test]
fn catalog_lookups_used_above_exist() {
    for label in ["b(n)", "a(p)+b(q)", "ac*(p)+b(q)", "cc(p+q)", "g(2)", "b'(n)", "ao(n)", "aa(p,p)"] {
        assert!(lookup_family(label).is_some(), "{}", label);
    }
}
