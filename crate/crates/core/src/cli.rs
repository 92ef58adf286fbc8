//! Command-line front end. The `drg` binary only parses arguments, calls
//! [`run`] and maps the outcome to an exit code.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::array::{parse_array, IntersectionArray};
use crate::atlas::{
    find_claw, is_geometric, max_clique, max_coclique, verify_drg, Graph, GraphFile, GeometricVerdict,
    NamedGraphSpec,
};
use crate::bounds::delsarte_bound;
use crate::error::Error;
use crate::feasibility::feasibility;
use crate::golden;
use crate::report;
use crate::search::{geometric_scan, post_filter, search_all, search_cases, taylor_classify, CaseSpec, SearchOptions, CASES};
use crate::spectral::{spectrum, DEFAULT_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "drg", version, about = "Intersection-array tools for distance-regular graphs without 4-claws")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues and multiplicities of an intersection array.
    Spectrum {
        #[arg(long)]
        array: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Feasibility report (conditions F1–F5, filters, post-filters).
    Feasible {
        #[arg(long)]
        array: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Enumerate feasible arrays for one case, a comma list, or `all`.
    Search {
        #[arg(long, default_value = "all")]
        case: String,
        /// Compare with the shipped table; exit 3 on any difference.
        #[arg(long)]
        check_golden: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build and inspect concrete graphs.
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    /// Valency lists of the Taylor-graph classification.
    Taylor {
        #[arg(long, default_value_t = 1000)]
        kmax: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Parameter scan for geometric graphs with smallest eigenvalue -5.
    Geoscan {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Family name, e.g. `johnson`.
    #[arg(long, conflicts_with = "edges")]
    pub name: Option<String>,
    /// Comma-separated integer parameters.
    #[arg(long, default_value = "")]
    pub params: String,
    /// Edge-list file (`u v` per line) or a JSON graph file.
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GraphCommand {
    Build {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Verify {
        #[command(flatten)]
        source: GraphSource,
    },
    Claw {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 4)]
        t: usize,
    },
    Clique {
        #[command(flatten)]
        source: GraphSource,
    },
    Geometric {
        #[command(flatten)]
        source: GraphSource,
    },
}

/// Printed output and exit code of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn fail(code: i32, msg: String) -> Self {
        Outcome { stdout: String::new(), stderr: msg, code }
    }
}

fn usage(e: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_USAGE, format!("error: {e}\n"))
}

fn internal(e: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_INVARIANT, format!("error: {e}\n"))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn parse_arr(s: &str) -> Result<IntersectionArray, Outcome> {
    let a = parse_array(s).map_err(usage)?;
    a.derive().map_err(usage)?;
    Ok(a)
}

pub fn run(cli: &Cli) -> Outcome {
    let r = match &cli.command {
        Command::Spectrum { array, tol, format } => cmd_spectrum(array, *tol, *format),
        Command::Feasible { array, tol, format } => cmd_feasible(array, *tol, *format),
        Command::Search { case, check_golden, jobs, out, format } => {
            cmd_search(case, *check_golden, *jobs, out.as_ref(), *format)
        }
        Command::Graph { command } => cmd_graph(command),
        Command::Taylor { kmax, format } => cmd_taylor(*kmax, *format),
        Command::Geoscan { format } => Ok(cmd_geoscan(*format)),
    };
    r.unwrap_or_else(|o| o)
}

pub fn cmd_spectrum(array: &str, tol: f64, format: Format) -> Result<Outcome, Outcome> {
    let a = parse_arr(array)?;
    let spec = spectrum(&a, tol).map_err(internal)?;
    let records = spec.records();
    Ok(Outcome::ok(match format {
        Format::Json => pretty(&json!({ "schema": "drg-spectrum/1", "array": a, "spectrum": records })),
        Format::Csv => {
            let mut s = String::from("i,kind,theta,multiplicity\n");
            for (i, r) in records.iter().enumerate() {
                let _ = writeln!(s, "{i},{},{},{}", r.kind, r.value, r.multiplicity);
            }
            s
        }
        Format::Text => {
            let mut s = format!("array {a}\n");
            for (i, r) in records.iter().enumerate() {
                let _ = writeln!(s, "theta_{i} = {}:{}  m = {}", r.kind, r.value, r.multiplicity);
            }
            s
        }
    }))
}

pub fn cmd_feasible(array: &str, tol: f64, format: Format) -> Result<Outcome, Outcome> {
    let a = parse_arr(array)?;
    let rep = feasibility(&a, tol).map_err(internal)?;
    let pf = rep.feasible().then(|| post_filter(&rep));
    Ok(Outcome::ok(match format {
        Format::Json | Format::Csv => {
            let mut j = rep.to_json();
            if let Some(pf) = &pf {
                j["post_filter"] = serde_json::to_value(pf).expect("serializable");
            }
            pretty(&j)
        }
        Format::Text => {
            let mut s = format!("array {a}: {}\n", rep.verdict());
            let checks = [
                ("F1", &rep.checks.f1),
                ("F2", &rep.checks.f2),
                ("F3", &rep.checks.f3),
                ("F4", &rep.checks.f4),
                ("F5", &rep.checks.f5),
            ];
            for (n, c) in checks {
                let _ = writeln!(s, "  {n} {}{}", if c.pass { "pass" } else { "FAIL" },
                    c.witness.as_deref().map(|w| format!(" ({w})")).unwrap_or_default());
            }
            for f in rep.filters.iter().filter(|f| f.fails()) {
                let _ = writeln!(s, "  filter {} fires: {} vs {}", f.name, f.lhs, f.rhs);
            }
            if let Some(pf) = &pf {
                for e in &pf.items {
                    let _ = writeln!(s, "  post-filter {} ({:?}): {}", e.name, e.outcome, e.detail);
                }
            }
            s
        }
    }))
}

fn select_cases(sel: &str) -> Result<Vec<&'static CaseSpec>, Outcome> {
    if sel.eq_ignore_ascii_case("all") {
        return Ok(CASES.iter().collect());
    }
    let mut out = Vec::new();
    for name in sel.split(',') {
        let name = name.trim().to_ascii_uppercase();
        let spec = CaseSpec::by_name(&name).ok_or_else(|| usage(format!("unknown case {name:?}")))?;
        if !out.contains(&spec) {
            out.push(spec);
        }
    }
    out.sort_by_key(|s| s.name);
    Ok(out)
}

pub fn cmd_search(
    case: &str,
    check_golden: bool,
    jobs: Option<usize>,
    out: Option<&PathBuf>,
    format: Format,
) -> Result<Outcome, Outcome> {
    let specs = select_cases(case)?;
    if jobs == Some(0) {
        return Err(usage("--jobs must be positive"));
    }
    let opts = SearchOptions { jobs, ..SearchOptions::default() };
    let all = specs.len() == CASES.len();
    let (results, notes) = if all {
        let combined = search_all(&opts).map_err(internal)?;
        let mut notes = String::new();
        for row in combined.rows.iter().filter(|r| r.discrepancy()) {
            let _ = writeln!(
                notes,
                "note: {} is listed under {} but its spectrum matches {}",
                row.array,
                row.reference.as_deref().unwrap_or("-"),
                row.computed.join(",")
            );
        }
        (combined.per_case, notes)
    } else {
        (search_cases(&specs, &opts).map_err(internal)?, String::new())
    };
    let body = match format {
        Format::Text => report::to_text(&results) + &notes,
        Format::Json => pretty(&report::to_json(&results)),
        Format::Csv => {
            let mut buf = Vec::new();
            report::write_csv(&results, &mut buf).map_err(internal)?;
            String::from_utf8(buf).expect("csv output is utf-8")
        }
    };
    let mut o = match out {
        Some(p) => {
            std::fs::write(p, &body).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            let n: usize = results.iter().map(|r| r.arrays.len()).sum();
            Outcome::ok(format!("wrote {n} arrays to {}\n", p.display()))
        }
        None => Outcome::ok(body),
    };
    if check_golden {
        let found: BTreeMap<&str, Vec<IntersectionArray>> =
            results.iter().map(|r| (r.case, r.arrays.clone())).collect();
        for d in golden::compare(&found) {
            let name = d.cases.join("+");
            if d.matches() {
                let _ = writeln!(o.stderr, "golden {name}: match");
                continue;
            }
            o.code = EXIT_INVARIANT;
            let _ = writeln!(o.stderr, "golden {name}: MISMATCH");
            for a in &d.missing {
                let _ = writeln!(o.stderr, "  - {a}");
            }
            for a in &d.extra {
                let _ = writeln!(o.stderr, "  + {a}");
            }
        }
    }
    Ok(o)
}

fn parse_params(s: &str) -> Result<Vec<usize>, Outcome> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| usage(format!("bad parameter {t:?}"))))
        .collect()
}

fn load_graph(src: &GraphSource) -> Result<(Graph, Option<NamedGraphSpec>), Outcome> {
    match (&src.name, &src.edges) {
        (Some(name), None) => {
            let spec = NamedGraphSpec::parse(name, &parse_params(&src.params)?).map_err(usage)?;
            let g = spec.build().map_err(usage)?;
            Ok((g, Some(spec)))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let g = if text.trim_start().starts_with('{') {
                let f: GraphFile = serde_json::from_str(&text).map_err(usage)?;
                f.graph()
            } else {
                Graph::from_edge_list(&text, None)
            };
            Ok((g.map_err(usage)?, None))
        }
        _ => Err(usage("give exactly one of --name or --edges")),
    }
}

pub fn cmd_graph(cmd: &GraphCommand) -> Result<Outcome, Outcome> {
    match cmd {
        GraphCommand::Build { source, format, out } => {
            let (g, spec) = load_graph(source)?;
            let body = match format {
                Format::Json => {
                    let params = spec.as_ref().map(|s| s.params().iter().map(|&p| p as i64).collect()).unwrap_or_default();
                    let f = GraphFile::new(&g, spec.as_ref().map(|s| s.family().to_string()), params);
                    pretty(&serde_json::to_value(f).expect("serializable"))
                }
                _ => g.to_edge_list(),
            };
            Ok(match out {
                Some(p) => {
                    std::fs::write(p, &body).map_err(|e| usage(format!("{}: {e}", p.display())))?;
                    Outcome::ok(format!("wrote {} vertices, {} edges to {}\n", g.n(), g.edge_count(), p.display()))
                }
                None => Outcome::ok(body),
            })
        }
        GraphCommand::Verify { source } => {
            let (g, spec) = load_graph(source)?;
            match verify_drg(&g) {
                Ok(cert) => {
                    let mut s = format!("distance-regular: {{{}}} on {} vertices\n", cert.array, cert.v);
                    if let Some(doc) = spec.as_ref().and_then(|s| s.documented_array()) {
                        if doc != cert.array {
                            return Err(internal(format!("computed {} but documented {doc}", cert.array)));
                        }
                        s.push_str("matches the documented array\n");
                    }
                    Ok(Outcome::ok(s))
                }
                Err(Error::NotDistanceRegular(w)) => Ok(Outcome::ok(format!("not distance-regular: {w}\n"))),
                Err(e) => Ok(Outcome::ok(format!("not distance-regular: {e}\n"))),
            }
        }
        GraphCommand::Claw { source, t } => {
            if *t < 1 {
                return Err(usage("--t must be positive"));
            }
            let (g, _) = load_graph(source)?;
            Ok(Outcome::ok(match find_claw(&g, *t) {
                None => format!("no {t}-claw\n"),
                Some(w) => format!("{t}-claw: center {} leaves {:?}\n", w.center, w.leaves),
            }))
        }
        GraphCommand::Clique { source } => {
            let (g, _) = load_graph(source)?;
            let c = max_clique(&g);
            let a = max_coclique(&g);
            let mut s = format!("clique number {}: {:?}\nindependence number {}: {:?}\n", c.len(), c, a.len(), a);
            if let Ok(cert) = verify_drg(&g) {
                if let Ok(spec) = spectrum(&cert.array, DEFAULT_TOL) {
                    if let Ok(b) = delsarte_bound(cert.array.k(), spec.theta_min()) {
                        let _ = writeln!(s, "Delsarte bound {}", b.floor());
                    }
                }
            }
            Ok(Outcome::ok(s))
        }
        GraphCommand::Geometric { source } => {
            let (g, _) = load_graph(source)?;
            let cert = match verify_drg(&g) {
                Ok(c) => c,
                Err(e) => return Ok(Outcome::ok(format!("not geometric: {e}\n"))),
            };
            Ok(Outcome::ok(match is_geometric(&g, &cert) {
                GeometricVerdict::Geometric { clique_size, cover } => {
                    let mut s = format!(
                        "geometric: {} Delsarte cliques of size {clique_size}, each edge covered once\n",
                        cover.len()
                    );
                    for c in &cover {
                        let _ = writeln!(s, "  {c:?}");
                    }
                    s
                }
                GeometricVerdict::NotGeometric { reason } => format!("not geometric: {reason}\n"),
            }))
        }
    }
}

pub fn cmd_taylor(kmax: i64, format: Format) -> Result<Outcome, Outcome> {
    let r = taylor_classify(kmax).map_err(usage)?;
    Ok(Outcome::ok(match format {
        Format::Json | Format::Csv => pretty(&json!({ "schema": "drg-taylor/1", "report": r })),
        Format::Text => {
            let mut s = format!("kmax {kmax}; admissible l: {:?}\n", r.ell_values);
            for b in &r.branches {
                let _ = writeln!(s, "{}: k in {:?}", b.name, b.valencies());
                for c in &b.constraints {
                    let _ = writeln!(s, "  constraint: {c}");
                }
                for c in &b.candidates {
                    let _ = writeln!(
                        s,
                        "  {{{}}} theta1={} theta3={} m1={} m3={}{}",
                        c.array,
                        c.theta1,
                        c.theta3,
                        c.m1,
                        c.m3,
                        if c.clique_inequality { "" } else { " (violates k-3a1/2-1 <= 1+theta1)" }
                    );
                }
            }
            s
        }
    }))
}

pub fn cmd_geoscan(format: Format) -> Outcome {
    let r = geometric_scan();
    Outcome::ok(match format {
        Format::Json | Format::Csv => pretty(&json!({ "schema": "drg-geoscan/1", "report": r })),
        Format::Text => {
            let mut s = format!("theta_D = {}\npairs (psi1,k): {:?}\n", r.theta_d, r.pairs);
            for c in &r.candidates {
                let verdict = if c.rejected_by.is_empty() { "survives".to_string() } else { c.rejected_by.join(",") };
                let _ = writeln!(s, "  psi1={} k={} tau2={} psi2={} {{{}}}: {verdict}", c.psi1, c.k, c.tau2, c.psi2, c.array);
            }
            let names: Vec<String> = r.survivors.iter().map(|a| format!("{{{a}}}")).collect();
            let _ = writeln!(s, "survivors: {}", names.join(" "));
            s
        }
    })
}
