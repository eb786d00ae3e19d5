//! Luna diagrams.
//!
//! A colour D_α is a circle under the vertex α when 2α ∈ Σ and around it
//! otherwise; circles of one colour are joined. Each spherical root adds a
//! decoration chosen by its rank-one row. [`DiagramScene`] holds all of this
//! on an integer grid and both renderers draw from it.

use std::fmt::Write;

use spherical_core::rank_one::{rank_one_table, RootCatalog};
use spherical_core::{DynkinDiagram, Family, SphericalSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NodeGlyph {
    /// Flat node index.
    pub node: usize,
    pub x: i32,
    /// 0 on the main row, 1 for the branch node of D and E.
    pub y: i32,
    pub in_sp: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
    /// The short end of a multiple bond.
    pub towards: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircleKind {
    Around,
    Under,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColourCircle {
    pub node: usize,
    pub colour: usize,
    pub kind: CircleKind,
}

/// A line joining two circles of one colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Connector {
    pub colour: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decoration {
    /// 2α: the circle sits under the vertex.
    Under,
    /// α + α′: the joined circles say it all.
    Joined,
    /// Shadowed circles along the support.
    Shadow,
    /// A zig-zag line along the support.
    ZigZag,
    /// The number 2 next to the support.
    Two,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootMark {
    /// Position in Σ.
    pub sigma: usize,
    pub formula: String,
    /// The concrete rank-one label, e.g. `b(3)`.
    pub label: String,
    pub decoration: Decoration,
    pub nodes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramScene {
    pub title: String,
    pub nodes: Vec<NodeGlyph>,
    pub bonds: Vec<Bond>,
    pub circles: Vec<ColourCircle>,
    pub connectors: Vec<Connector>,
    pub roots: Vec<RootMark>,
    pub width: i32,
}

fn decoration(row_label: &str) -> Decoration {
    match row_label {
        "a'(1)" => Decoration::Under,
        "aa(1,1)" => Decoration::Joined,
        "b'(n)" | "g'(2)" => Decoration::Two,
        "c(n)" | "d(n)" => Decoration::ZigZag,
        _ => Decoration::Shadow,
    }
}

fn layout(d: &DynkinDiagram) -> (Vec<(i32, i32)>, i32) {
    let mut pos = vec![(0, 0); d.rank()];
    let mut x0 = 0;
    let mut flat = 0;
    for c in d.components() {
        let n = c.rank;
        for k in 1..=n {
            let (x, y) = match c.family {
                Family::D if k == n => (n as i32 - 3, 1),
                Family::E if k == 1 => (0, 0),
                Family::E if k == 2 => (2, 1),
                Family::E => (k as i32 - 2, 0),
                _ => (k as i32 - 1, 0),
            };
            pos[flat] = (x0 + x, y);
            flat += 1;
        }
        let width = match c.family {
            Family::D => n as i32 - 1,
            Family::E => n as i32 - 1,
            _ => n as i32,
        };
        x0 += width + 1;
    }
    (pos, (x0 - 1).max(1))
}

impl DiagramScene {
    pub fn new(sys: &SphericalSystem) -> DiagramScene {
        let d = sys.diagram();
        let (pos, width) = layout(d);
        let nodes = (0..d.rank())
            .map(|i| NodeGlyph { node: i, x: pos[i].0, y: pos[i].1, in_sp: sys.sp().contains(i) })
            .collect();
        let bonds = d
            .edges()
            .into_iter()
            .map(|(a, b, _)| {
                let m = d.cartan(a, b).abs().max(d.cartan(b, a).abs()) as u8;
                let towards = match d.norm(a).cmp(&d.norm(b)) {
                    std::cmp::Ordering::Less => Some(a),
                    std::cmp::Ordering::Greater => Some(b),
                    std::cmp::Ordering::Equal => None,
                };
                Bond { a, b, multiplicity: m, towards }
            })
            .collect();

        let mut circles = Vec::new();
        let mut connectors = Vec::new();
        if let Ok(colours) = sys.colours() {
            for i in 0..d.rank() {
                if let Some(colour) = colours.colour_of(i) {
                    let kind = if sys.has_double(i) { CircleKind::Under } else { CircleKind::Around };
                    circles.push(ColourCircle { node: i, colour, kind });
                }
            }
            for (colour, class) in colours.classes.iter().enumerate() {
                let members: Vec<usize> = class.iter().collect();
                for w in members.windows(2) {
                    connectors.push(Connector { colour, a: w[0], b: w[1] });
                }
            }
        }

        let cat = RootCatalog::new(d);
        let roots = sys
            .sigma()
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let (label, decoration) = match cat.axiom_s(d, g, sys.sp()) {
                    Some(c) => (c.label.clone(), self::decoration(rank_one_table()[c.row].label)),
                    None => ("?".to_string(), Decoration::Shadow),
                };
                RootMark {
                    sigma: k,
                    formula: d.format_weight(g),
                    label,
                    decoration,
                    nodes: g.support().iter().collect(),
                }
            })
            .collect();

        DiagramScene { title: d.to_string(), nodes, bonds, circles, connectors, roots, width }
    }

    fn has_branch(&self) -> bool {
        self.nodes.iter().any(|n| n.y == 1)
    }

    fn circle_at(&self, node: usize) -> Option<&ColourCircle> {
        self.circles.iter().find(|c| c.node == node)
    }
}

fn node_name(d: &DynkinDiagram, i: usize) -> String {
    d.node(i).to_string()
}

const CELL: usize = 4;

fn put(line: &mut Vec<char>, at: usize, s: &str) {
    for (k, ch) in s.chars().enumerate() {
        if line.len() <= at + k {
            line.resize(at + k + 1, ' ');
        }
        line[at + k] = ch;
    }
}

fn finish(line: Vec<char>) -> String {
    line.into_iter().collect::<String>().trim_end().to_string()
}

/// Monospace drawing: `o` marks a circle around a vertex, `u` one under it;
/// vertices of S^p carry no mark. Then the joined colours and one line per
/// spherical root.
pub fn render_text(sys: &SphericalSystem) -> String {
    let scene = DiagramScene::new(sys);
    let d = sys.diagram();
    let mut above = Vec::new();
    let mut row = Vec::new();
    let mut below = Vec::new();
    let mut stem = Vec::new();
    let mut branch = Vec::new();
    let mut branch_marks = Vec::new();

    let mark = |n: &NodeGlyph| -> (&str, &str) {
        match scene.circle_at(n.node).map(|c| c.kind) {
            Some(CircleKind::Around) => ("o", " "),
            Some(CircleKind::Under) => (" ", "u"),
            None => (" ", " "),
        }
    };
    for n in &scene.nodes {
        let col = n.x as usize * CELL;
        let (a, u) = mark(n);
        let name = node_name(d, n.node);
        if n.y == 0 {
            put(&mut above, col, a);
            put(&mut row, col, &name);
            put(&mut below, col, u);
        } else {
            put(&mut stem, col, "|");
            put(&mut branch, col, &name);
            let m = if u != " " { u } else { a };
            put(&mut branch_marks, col, m);
        }
    }
    for b in &scene.bonds {
        let (na, nb) = (&scene.nodes[b.a], &scene.nodes[b.b]);
        if na.y != nb.y {
            continue;
        }
        let (l, r) = if na.x < nb.x { (na, nb) } else { (nb, na) };
        let start = l.x as usize * CELL + node_name(d, l.node).chars().count();
        let len = (r.x - l.x) as usize * CELL - (start - l.x as usize * CELL);
        let fill = match b.multiplicity {
            1 => '-',
            2 => '=',
            _ => '≡',
        };
        let mut seg: Vec<char> = vec![fill; len];
        if let Some(t) = b.towards {
            seg[len / 2] = if t == r.node { '>' } else { '<' };
        }
        put(&mut row, start, &seg.into_iter().collect::<String>());
    }

    let mut out = String::new();
    let _ = writeln!(out, "{}", scene.title);
    for line in [above, row, below] {
        let _ = writeln!(out, "{}", finish(line));
    }
    if scene.has_branch() {
        for line in [stem, branch, branch_marks] {
            let _ = writeln!(out, "{}", finish(line));
        }
    }
    if let Ok(colours) = sys.colours() {
        for (k, class) in colours.classes.iter().enumerate() {
            if class.len() > 1 {
                let names: Vec<String> = class.iter().map(|i| node_name(d, i)).collect();
                let _ = writeln!(out, "D{} joins {}", k + 1, names.join(", "));
            }
        }
    }
    for r in &scene.roots {
        let _ = writeln!(out, "σ{} = {}  [{}, {}]", r.sigma + 1, r.formula, r.label, decoration_name(r.decoration));
    }
    out
}

fn decoration_name(d: Decoration) -> &'static str {
    match d {
        Decoration::Under => "under",
        Decoration::Joined => "joined",
        Decoration::Shadow => "shadow",
        Decoration::ZigZag => "zig-zag",
        Decoration::Two => "2",
    }
}

const UNIT: i32 = 60;
const MARGIN: i32 = 40;

fn cx(n: &NodeGlyph) -> i32 {
    MARGIN + n.x * UNIT
}

fn cy(n: &NodeGlyph) -> i32 {
    MARGIN + n.y * UNIT
}

/// SVG 1.1 drawing of the same scene. Element ids are stable: `node-k`,
/// `bond-a-b`, `circle-k`, `join-a-b`, `root-k` with flat node indices and
/// Σ positions from 0.
pub fn render_svg(sys: &SphericalSystem) -> String {
    let scene = DiagramScene::new(sys);
    let d = sys.diagram();
    let rows = if scene.has_branch() { 2 } else { 1 };
    let join_base = MARGIN + (rows - 1) * UNIT + 34;
    let legend_top = join_base + 14 * (scene.connectors.len() as i32 + 1);
    let width = 2 * MARGIN + (scene.width - 1).max(0) * UNIT + 200;
    let height = legend_top + 20 * scene.roots.len() as i32 + 20;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = width,
        h = height
    );
    let _ = writeln!(s, r#"<title>{}</title>"#, scene.title);

    for b in &scene.bonds {
        let (na, nb) = (&scene.nodes[b.a], &scene.nodes[b.b]);
        let (x1, y1, x2, y2) = (cx(na), cy(na), cx(nb), cy(nb));
        let _ = writeln!(s, r#"<g id="bond-{}-{}" stroke="black" stroke-width="1.5">"#, b.a, b.b);
        let m = b.multiplicity as i32;
        for k in 0..m {
            let off = 4 * k - 2 * (m - 1);
            let (dx, dy) = if y1 == y2 { (0, off) } else { (off, 0) };
            let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, x1 + dx, y1 + dy, x2 + dx, y2 + dy);
        }
        if let Some(t) = b.towards {
            let mx = (x1 + x2) / 2;
            let dir = if t == b.b { 1 } else { -1 } * if x2 >= x1 { 1 } else { -1 };
            let _ = writeln!(
                s,
                r#"<polyline points="{},{} {},{} {},{}" fill="none"/>"#,
                mx - 5 * dir,
                y1 - 8,
                mx + 5 * dir,
                y1,
                mx - 5 * dir,
                y1 + 8
            );
        }
        let _ = writeln!(s, "</g>");
    }

    for r in &scene.roots {
        let _ = writeln!(s, r#"<g id="root-{}">"#, r.sigma);
        match r.decoration {
            Decoration::Shadow => {
                for &i in &r.nodes {
                    if let Some(c) = scene.circle_at(i) {
                        let n = &scene.nodes[i];
                        let (x, y) = match c.kind {
                            CircleKind::Around => (cx(n), cy(n)),
                            CircleKind::Under => (cx(n), cy(n) + 22),
                        };
                        let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="13" fill="#c8c8c8"/>"##, x, y);
                    }
                }
            }
            Decoration::ZigZag => {
                let xs: Vec<i32> = r.nodes.iter().map(|&i| cx(&scene.nodes[i])).collect();
                let y = r.nodes.iter().map(|&i| cy(&scene.nodes[i])).min().unwrap_or(MARGIN) - 20;
                let (lo, hi) = (*xs.iter().min().unwrap_or(&MARGIN), *xs.iter().max().unwrap_or(&MARGIN));
                let mut pts = Vec::new();
                let mut x = lo;
                let mut up = true;
                while x <= hi {
                    pts.push(format!("{},{}", x, if up { y - 4 } else { y + 4 }));
                    x += 10;
                    up = !up;
                }
                let _ = writeln!(
                    s,
                    r#"<polyline points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
                    pts.join(" ")
                );
            }
            Decoration::Two => {
                let n = &scene.nodes[r.nodes[0]];
                let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="14">2</text>"#, cx(n) - 4, cy(n) - 18);
            }
            Decoration::Under | Decoration::Joined => {}
        }
        let _ = writeln!(s, "</g>");
    }

    for c in &scene.circles {
        let n = &scene.nodes[c.node];
        let (y, r) = match c.kind {
            CircleKind::Around => (cy(n), 14),
            CircleKind::Under => (cy(n) + 22, 8),
        };
        let _ = writeln!(
            s,
            r#"<circle id="circle-{}" class="colour-{}" cx="{}" cy="{}" r="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            c.node,
            c.colour,
            cx(n),
            y,
            r
        );
    }

    for (k, j) in scene.connectors.iter().enumerate() {
        let (na, nb) = (&scene.nodes[j.a], &scene.nodes[j.b]);
        let low = |n: &NodeGlyph| match scene.circle_at(n.node).map(|c| c.kind) {
            Some(CircleKind::Under) => cy(n) + 30,
            _ => cy(n) + 14,
        };
        let y = join_base + 14 * k as i32;
        let _ = writeln!(
            s,
            r#"<path id="join-{}-{}" d="M {} {} V {} H {} V {}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            j.a,
            j.b,
            cx(na),
            low(na),
            y,
            cx(nb),
            low(nb)
        );
    }

    for n in &scene.nodes {
        let _ = writeln!(s, r#"<circle id="node-{}" cx="{}" cy="{}" r="5" fill="black"/>"#, n.node, cx(n), cy(n));
        let _ =
            writeln!(s, r#"<text x="{}" y="{}" font-size="10">{}</text>"#, cx(n) + 6, cy(n) - 8, node_name(d, n.node));
    }

    for (k, r) in scene.roots.iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="12">σ{} = {}  [{}, {}]</text>"#,
            MARGIN,
            legend_top + 20 * k as i32,
            r.sigma + 1,
            r.formula,
            r.label,
            decoration_name(r.decoration)
        );
    }
    let _ = writeln!(s, "</svg>");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use spherical_core::families::instantiate;
    use spherical_core::{NodeSet, Weight};

    #[test]
    fn empty_a3() {
        let d = DynkinDiagram::parse("A3").unwrap();
        let s = SphericalSystem::new(d.clone(), d.all_nodes(), vec![]).unwrap();
        assert_eq!(render_text(&s), "A3\n\n1---2---3\n\n");
        let svg = render_svg(&s);
        assert_eq!(svg.matches("<circle id=\"node-").count(), 3);
        assert!(!svg.contains("circle-"));
        // the flag variety: every vertex is a colour
        let b = SphericalSystem::new(d, NodeSet::EMPTY, vec![]).unwrap();
        assert_eq!(render_text(&b), "A3\no   o   o\n1---2---3\n\n");
    }

    #[test]
    fn a_prime() {
        let s =
            SphericalSystem::new(DynkinDiagram::parse("A1").unwrap(), NodeSet::EMPTY, vec![Weight(vec![2])]).unwrap();
        let t = render_text(&s);
        assert_eq!(t, "A1\n\n1\nu\nσ1 = 2α1  [a'(1), under]\n");
    }

    #[test]
    fn aa11_joined() {
        let s = instantiate("aa(p,p)", &[1]).unwrap();
        let scene = DiagramScene::new(&s);
        assert_eq!(scene.circles.len(), 2);
        assert!(scene.circles.iter().all(|c| c.kind == CircleKind::Around));
        assert_eq!(scene.connectors, vec![Connector { colour: 0, a: 0, b: 1 }]);
        assert!(render_svg(&s).contains("id=\"join-0-1\""));
    }

    #[test]
    fn layouts() {
        let (p, _) = layout(&DynkinDiagram::parse("D4").unwrap());
        assert_eq!(p, vec![(0, 0), (1, 0), (2, 0), (1, 1)]);
        let (p, w) = layout(&DynkinDiagram::parse("E6").unwrap());
        assert_eq!(p, vec![(0, 0), (2, 1), (1, 0), (2, 0), (3, 0), (4, 0)]);
        assert_eq!(w, 5);
        let (p, _) = layout(&DynkinDiagram::parse("A1,A1").unwrap());
        assert_eq!(p, vec![(0, 0), (2, 0)]);
    }

    #[test]
    fn g2_arrow_points_to_short() {
        let s = SphericalSystem::new(DynkinDiagram::parse("G2").unwrap(), NodeSet::EMPTY, vec![]).unwrap();
        assert_eq!(render_text(&s).lines().nth(2).unwrap(), "1≡<≡2");
        let s = SphericalSystem::new(DynkinDiagram::parse("B2").unwrap(), NodeSet::EMPTY, vec![]).unwrap();
        assert_eq!(render_text(&s).lines().nth(2).unwrap(), "1=>=2");
    }
}
