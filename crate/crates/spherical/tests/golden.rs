//! Rendered diagrams against the files in `tests/golden`. Set
//! `UPDATE_GOLDEN=1` to rewrite them after a reviewed change.

mod common;

use std::fs;

use common::{file_stem, golden_cases, golden_dir};
use spherical::{render_svg, render_text};

#[test]
fn golden_diagrams() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let dir = golden_dir();
    let mut mismatches = Vec::new();
    for (label, sys) in golden_cases() {
        for (ext, body) in [("txt", render_text(&sys)), ("svg", render_svg(&sys))] {
            let path = dir.join(format!("{}.{}", file_stem(&label), ext));
            if update {
                fs::write(&path, &body).unwrap();
                continue;
            }
            match fs::read_to_string(&path) {
                Ok(expected) if expected == body => {}
                Ok(_) => mismatches.push(format!("{} differs", path.display())),
                Err(e) => mismatches.push(format!("{}: {}", path.display(), e)),
            }
        }
    }
    assert!(mismatches.is_empty(), "{:#?}", mismatches);
}

#[test]
fn rendering_is_deterministic() {
    for (_, sys) in golden_cases() {
        assert_eq!(render_text(&sys), render_text(&sys));
        assert_eq!(render_svg(&sys), render_svg(&sys));
    }
}

#[test]
fn both_renderers_share_the_scene() {
    for (label, sys) in golden_cases() {
        let scene = spherical::DiagramScene::new(&sys);
        let svg = render_svg(&sys);
        let text = render_text(&sys);
        assert_eq!(svg.matches("<circle id=\"circle-").count(), scene.circles.len(), "{}", label);
        assert_eq!(svg.matches("<path id=\"join-").count(), scene.connectors.len(), "{}", label);
        assert_eq!(svg.matches("<g id=\"root-").count(), scene.roots.len(), "{}", label);
        let marks = text.chars().filter(|&c| c == 'o' || c == 'u').count();
        assert!(marks >= scene.circles.len(), "{}", label);
        assert_eq!(text.lines().filter(|l| l.starts_with('σ')).count(), scene.roots.len(), "{}", label);
    }
}
