#![allow(dead_code)]

use std::path::PathBuf;

use spherical_core::families::instantiate;
use spherical_core::rank_one::{rank_one_table, Support};
use spherical_core::SphericalSystem;

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// File-name form of a label: `b*(3)` → `bstar_3`.
pub fn file_stem(label: &str) -> String {
    let mut s = String::new();
    for c in label.chars() {
        match c {
            '\'' => s.push_str("prime"),
            '*' => s.push_str("star"),
            '(' | ',' => s.push('_'),
            '+' => s.push_str("_plus_"),
            ')' => {}
            c => s.push(c),
        }
    }
    s
}

/// The rank-one rows at their smallest rank.
pub fn rank_one_cases() -> Vec<(String, SphericalSystem)> {
    rank_one_table()
        .iter()
        .map(|row| {
            let n = match row.support {
                Support::Connected { min, .. } => min,
                Support::OrthogonalPair => 2,
            };
            let (d, sp, gamma) = row.instantiate(n).expect("admissible");
            (row.label_at(n), SphericalSystem::new(d, sp, vec![gamma]).unwrap())
        })
        .collect()
}

pub const CATALOG_CASES: [(&str, &[usize]); 10] = [
    ("aa(p+q+p)", &[1, 2]),
    ("ac*(n)", &[4]),
    ("bo(p+q)", &[1, 2]),
    ("cc(p+q)", &[2, 2]),
    ("do(p+q)", &[1, 3]),
    ("ds*(4)", &[]),
    ("ef(6)", &[]),
    ("fd(4)", &[]),
    ("go(2)", &[]),
    ("b*(4)+b**(3)", &[]),
];

pub fn catalog_cases() -> Vec<(String, SphericalSystem)> {
    CATALOG_CASES
        .iter()
        .map(|(label, p)| {
            let f = spherical_core::families::lookup_family(label).unwrap();
            (f.label_at(p), instantiate(label, p).unwrap())
        })
        .collect()
}

pub fn golden_cases() -> Vec<(String, SphericalSystem)> {
    let mut v = rank_one_cases();
    v.extend(catalog_cases());
    v
}
