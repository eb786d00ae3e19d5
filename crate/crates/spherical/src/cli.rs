//! The `spherical` command.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use spherical_core::appendix::{self, symmetric_row, symmetric_table};
use spherical_core::connect;
use spherical_core::dictionary::{self, DecompositionRule};
use spherical_core::enumerate::{self, Classifier, EnumOptions};
use spherical_core::families::{family_catalog, lookup_family};
use spherical_core::rank_one::{normalize_label, rank_one_table, Support, ALIASES};
use spherical_core::{DynkinDiagram, Error, SphericalSystem};

use crate::json::*;
use crate::scene::{render_svg, render_text};

/// Environment variable overriding the enumeration node budget.
pub const BUDGET_VAR: &str = "SPHERICAL_SEARCH_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "spherical", version, about = "Spherical systems without simple spherical roots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// JSON system file; stdin when absent or `-`.
    #[arg(long, short)]
    system: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms.
    Validate(Input),
    /// Colours and the ρ matrix.
    Colours(Input),
    /// Quotient by a distinguished set of colours.
    Quotient {
        #[command(flatten)]
        input: Input,
        /// Colours such as `D1,D3`.
        #[arg(long, default_value = "")]
        colours: String,
    },
    /// Localisation at a set of simple roots.
    Localize {
        #[command(flatten)]
        input: Input,
        /// Nodes such as `1,2,1'`.
        #[arg(long)]
        nodes: String,
    },
    /// Strongly Δ-connected components of Σ.
    Components {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        classify: bool,
    },
    /// All systems on a diagram.
    Enumerate {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        primitive: bool,
        #[arg(long)]
        classify: bool,
        /// Keep dependent Σ.
        #[arg(long)]
        allow_dependent: bool,
    },
    /// Catalog family of a system.
    Classify(Input),
    /// Draw the Luna diagram.
    Diagram {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Rank-one table or primitive catalog.
    Catalog {
        #[arg(value_enum)]
        table: Table,
        #[arg(long)]
        label: Option<String>,
        /// Parameters, e.g. `1,2`, to instantiate a family.
        #[arg(long)]
        params: Option<String>,
    },
    /// Restricted root system of a symmetric space as a spherical system.
    Symmetric {
        #[arg(long)]
        label: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// The index-two companion (B II, C II with q = 2).
        #[arg(long)]
        halved: bool,
    },
    /// Grading and dimensions of a nilpotent orbit.
    Orbit {
        #[arg(long)]
        diagram: String,
        /// Characteristic, e.g. `1,0,1`.
        #[arg(long = "char")]
        characteristic: String,
    },
    /// Is there ξ ∈ ℤ≥0Σ positive on every colour?
    AffineCheck(Input),
    /// Dimension of G/H and rank of its character group.
    Identities(Input),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Svg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Table {
    Rank1,
    Families,
}

enum Failure {
    Domain(ErrorJson),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain((&e).into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Domain((&e).into())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

enum Output {
    Json(Value),
    Raw(String),
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

/// Runs the command line `argv` (program name first). Returns the exit
/// status: 0 on success, 1 on a domain error (reported as JSON on `out`),
/// 2 on a usage error.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{}", e.render());
            } else {
                let _ = write!(err, "{}", e.render());
            }
            return code;
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(Output::Json(v)) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"));
            0
        }
        Ok(Output::Raw(s)) => {
            let _ = write!(out, "{}", s);
            0
        }
        Err(Failure::Domain(e)) => {
            let v = json!({ "error": e });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"));
            1
        }
        Err(Failure::Io(e)) => {
            let v =
                json!({ "error": ErrorJson { kind: "io".into(), message: e.to_string(), line: None, column: None } });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"));
            1
        }
    }
}

fn read_system(input: &Input, stdin: &mut dyn Read) -> Result<SphericalSystem, Failure> {
    let text = match input.system.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
        Some(path) => std::fs::read_to_string(path)?,
    };
    let j: SystemJson = serde_json::from_str(&text)?;
    Ok(j.to_system()?)
}

fn require_valid(sys: &SphericalSystem) -> Result<(), Failure> {
    let r = sys.validate();
    if r.is_valid() {
        Ok(())
    } else {
        let v: Vec<String> = r.violations().map(|v| format!("{:?}", v)).collect();
        Err(Error::InvalidSystem(v.join("; ")).into())
    }
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::BadParameters(format!("{} entry {:?}", what, t)).into()))
        .collect()
}

/// Node budget from the environment, if set.
pub fn budget_from_env() -> Result<Option<u64>, Error> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| Error::BadParameters(format!("{}={}", BUDGET_VAR, v))),
        Err(_) => Ok(None),
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read) -> Result<Output, Failure> {
    Ok(match cmd {
        Command::Validate(input) => {
            let s = read_system(&input, stdin)?;
            Output::Json(to_value(&ValidationJson::new(s.diagram(), &s.validate())))
        }
        Command::Colours(input) => {
            let s = read_system(&input, stdin)?;
            require_valid(&s)?;
            let c = s.colours()?;
            Output::Json(json!({ "colours": colours_json(s.diagram(), &c) }))
        }
        Command::Quotient { input, colours } => {
            let s = read_system(&input, stdin)?;
            require_valid(&s)?;
            let c = s.colours()?;
            let m = parse_colours(&c, &colours)?;
            let q = dictionary::quotient(&s, &c, m)?;
            Output::Json(to_value(&QuotientJson::new(s.diagram(), &q)))
        }
        Command::Localize { input, nodes } => {
            let s = read_system(&input, stdin)?;
            let set = parse_nodes(s.diagram(), &nodes)?;
            Output::Json(to_value(&SystemJson::from(&dictionary::localize(&s, set)?)))
        }
        Command::Components { input, classify } => {
            let s = read_system(&input, stdin)?;
            require_valid(&s)?;
            let c = s.colours()?;
            let mut out = Vec::new();
            for sub in connect::components(&s, &c) {
                let mut j = ComponentAnalysisJson::new(&connect::classify_component(&s, &c, sub)?);
                if classify {
                    let l = connect::localisation_of(&s, sub)?;
                    let cusp = dictionary::decuspidalize(&l)?;
                    j.classification = enumerate::classify(&cusp).as_ref().map(Into::into);
                    j.localisation = Some((&l).into());
                }
                out.push(j);
            }
            Output::Json(to_value(&out))
        }
        Command::Enumerate { diagram, primitive, classify, allow_dependent } => {
            let d = DynkinDiagram::parse(&diagram)?;
            let mut opts = EnumOptions { require_independence: !allow_dependent, ..EnumOptions::default() };
            if let Some(b) = budget_from_env()? {
                opts.node_budget = b;
            }
            let systems = if primitive {
                enumerate::enumerate_primitive_with(&d, opts)?
            } else {
                enumerate::enumerate_systems_with(&d, opts)?
            };
            let classifier = classify.then(|| Classifier::new(&d));
            let out: Vec<EnumeratedJson> = systems
                .iter()
                .map(|s| EnumeratedJson {
                    system: s.into(),
                    classification: classifier.as_ref().and_then(|c| c.classify(s)).as_ref().map(Into::into),
                    strict: classify.then(|| s.is_strict()),
                })
                .collect();
            Output::Json(to_value(&out))
        }
        Command::Classify(input) => {
            let s = read_system(&input, stdin)?;
            require_valid(&s)?;
            let c = Classifier::new(s.diagram());
            let all: Vec<ClassificationJson> = c.matches(&s).iter().map(Into::into).collect();
            Output::Json(json!({
                "classification": all.first(),
                "aliases": all.get(1..).unwrap_or(&[]),
                "strict": s.is_strict(),
                "primitive": enumerate::is_primitive(&s)?,
            }))
        }
        Command::Diagram { input, format } => {
            let s = read_system(&input, stdin)?;
            require_valid(&s)?;
            Output::Raw(match format {
                Format::Text => render_text(&s),
                Format::Svg => render_svg(&s),
            })
        }
        Command::Catalog { table: Table::Rank1, label, .. } => Output::Json(rank1_catalog(label.as_deref())?),
        Command::Catalog { table: Table::Families, label, params } => {
            Output::Json(families_catalog(label.as_deref(), params.as_deref())?)
        }
        Command::Symmetric { label, n, p, q, halved } => {
            let rows: Vec<_> =
                symmetric_table().iter().filter(|r| r.label.eq_ignore_ascii_case(label.trim())).collect();
            let first = rows.first().ok_or_else(|| Error::UnknownLabel(label.clone()))?;
            let params: Vec<usize> = first
                .params
                .iter()
                .map(|name| match *name {
                    "n" => n,
                    "p" => p,
                    _ => q,
                })
                .map(|v| {
                    v.ok_or_else(|| Error::BadParameters(format!("{} needs --{}", label, first.params.join(" --"))))
                })
                .collect::<Result<_, _>>()?;
            let row = symmetric_row(&label, &params)?;
            let (d, basis) = row.basis(&params)?;
            let s = if halved {
                appendix::halved_companion(&label, &params)?
            } else {
                appendix::symmetric_system(&label, &params)?
            };
            let (family, fp) = row.expected_family(&params);
            let expected = lookup_family(family).map(|f| f.label_at(&fp));
            Output::Json(json!({
                "label": row.label,
                "case": row.case,
                "params": params,
                "restricted_type": row.restricted_type,
                "fixed": row.fixed,
                "basis": basis.iter().map(|w| weight_terms(&d, w)).collect::<Vec<_>>(),
                "system": SystemJson::from(&s),
                "expected": expected,
                "classification": enumerate::classify(&s).as_ref().map(ClassificationJson::from),
            }))
        }
        Command::Orbit { diagram, characteristic } => {
            let d = DynkinDiagram::parse(&diagram)?;
            let ch: Vec<i64> = parse_list(&characteristic, "characteristic")?;
            let g = appendix::grading_dims(&d, &ch)?;
            let h = appendix::height(&d, &ch)?;
            let dims = appendix::orbit_dims(&d, &ch)?;
            let grading = g.into_iter().map(|(k, v)| [k, v as i64]).collect();
            Output::Json(to_value(&OrbitJson::new(&d, &ch, h, grading, dims)))
        }
        Command::AffineCheck(input) => {
            let s = read_system(&input, stdin)?;
            require_valid(&s)?;
            let c = s.colours()?;
            let w = dictionary::affine_witness(&s, &c);
            Output::Json(json!({ "affine": w.is_some(), "witness": w }))
        }
        Command::Identities(input) => {
            let s = read_system(&input, stdin)?;
            require_valid(&s)?;
            let c = s.colours()?;
            let (dim, rank) = dictionary::expected_dims(&s, &c);
            Output::Json(json!({
                "dim": dim,
                "character_rank": rank,
                "dim_g": s.diagram().dimension(),
                "dim_h": s.diagram().dimension() as i64 - dim,
                "decomposable": dictionary::is_decomposable_with(&s, &c, DecompositionRule::default())?.is_some(),
            }))
        }
    })
}

fn rank1_catalog(label: Option<&str>) -> Result<Value, Failure> {
    let want = label.map(normalize_label);
    let want = want
        .map(|w| ALIASES.iter().find(|(a, _)| normalize_label(a) == w).map_or(w.clone(), |(_, t)| normalize_label(t)));
    let mut out = Vec::new();
    for row in rank_one_table() {
        let min = match row.support {
            Support::Connected { min, .. } => min,
            Support::OrthogonalPair => 2,
        };
        let n = (min..min + 8).find(|&n| row.admits(n)).unwrap_or(min);
        if let Some(w) = &want {
            let concrete = normalize_label(&row.label_at(n));
            if *w != normalize_label(row.label)
                && *w != concrete
                && !(min..=12).any(|k| row.admits(k) && normalize_label(&row.label_at(k)) == *w)
            {
                continue;
            }
        }
        let (d, sp, gamma) = row.instantiate(n).ok_or_else(|| Error::BadParameters(row.label.to_string()))?;
        let s = SphericalSystem::new(d, sp, vec![gamma])?;
        out.push(json!({
            "label": row.label,
            "instance": row.label_at(n),
            "system": SystemJson::from(&s),
            "valid": s.is_valid(),
            "diagram": render_text(&s),
        }));
    }
    if want.is_some() && out.is_empty() {
        return Err(Error::UnknownLabel(label.unwrap_or_default().to_string()).into());
    }
    Ok(Value::Array(out))
}

fn families_catalog(label: Option<&str>, params: Option<&str>) -> Result<Value, Failure> {
    let rows: Vec<_> = match label {
        Some(l) => vec![lookup_family(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?],
        None => family_catalog().iter().collect(),
    };
    let mut out = Vec::new();
    for f in rows {
        let mut v = json!({
            "index": f.index,
            "label": f.label,
            "params": f.params,
            "strictness": format!("{:?}", f.strict),
        });
        let given = match params {
            Some(p) => Some(parse_list(p, "parameter")?),
            None if f.params.is_empty() => Some(Vec::new()),
            None => None,
        };
        if let Some(p) = given {
            let s = f.instantiate(&p)?;
            v["instance"] = json!(f.label_at(&p));
            v["system"] = to_value(&SystemJson::from(&s));
            v["strict"] = json!(f.is_strict_at(&p));
        }
        out.push(v);
    }
    Ok(Value::Array(out))
}
