use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use raag_depth::depth::{depth_of_complex, DepthReport, ExactCohomology, Methods};
use raag_depth::lie::{
    clique_series_dims, lie_dims_direct, lie_dims_pbw_inversion, raag_presentation, ul_dims_normal_form,
    ul_dims_quotient, GradedDims,
};
use raag_depth::resolution::{check_exactness, froberg_complex, minimal_resolution, truncated_ext, ExtTruncation};
use raag_depth::verify::{self, Faults, SurfaceReport, VerifyConfig};
use raag_depth::{parse_graph, Error, FlagComplex, Graph, Limits};
use serde_json::{json, Value};

use crate::output::{Check, Document, Status};
use crate::{Cli, Command, Fault, GraphInput, Method, ResolutionChoice};

/// Largest vertex count accepted by `verify`.
const VERIFY_VERTEX_CAP: usize = 7;

struct Timer {
    enabled: bool,
    marks: BTreeMap<String, f64>,
}

impl Timer {
    fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            *self.marks.entry(phase.to_string()).or_default() += start.elapsed().as_secs_f64();
        }
        out
    }
}

/// A failure that ends the command.
struct Failure {
    status: Status,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Inconsistent(_) | Error::NotPbwSeries(_) => Status::Disagreement,
            _ => Status::InputError,
        };
        Failure { status, message: e.to_string() }
    }
}

fn input_error(message: String) -> Failure {
    Failure { status: Status::InputError, message }
}

type Outcome = Result<(), Failure>;

pub fn run(cli: &Cli) -> (Document, Status) {
    let mut doc = Document::default();
    let mut timer = Timer { enabled: cli.timings, marks: BTreeMap::new() };
    let limits = Limits::default();
    let outcome = match &cli.command {
        Command::Depth { input, method } => cmd_depth(&mut doc, &mut timer, input, *method, &limits),
        Command::Ext { input, weights, pmax, resolution } => {
            cmd_ext(&mut doc, &mut timer, input, *weights, *pmax, *resolution, &limits)
        }
        Command::Hilbert { input, weights } => cmd_hilbert(&mut doc, &mut timer, input, *weights, &limits),
        Command::LieDims { input, weights } => cmd_lie_dims(&mut doc, &mut timer, input, *weights, &limits),
        Command::Surface { genus, weights, pmax } => cmd_surface(&mut doc, &mut timer, *genus, *weights, *pmax, &limits),
        Command::Verify { max_vertices, algebra_vertices, weights, ul_weights, seed, inject_fault } => {
            let faults = Faults {
                cohomology: inject_fault.contains(&Fault::Cohomology),
                froberg: inject_fault.contains(&Fault::Froberg),
            };
            let cfg = VerifyConfig {
                max_vertices: *max_vertices,
                algebra_vertices: *algebra_vertices,
                ul_weight: *ul_weights,
                lie_weight: *weights,
                seed: *seed,
                faults,
            };
            cmd_verify(&mut doc, &mut timer, cfg, &limits)
        }
        Command::Batch { paths, method } => cmd_batch(&mut doc, &mut timer, paths, *method, &limits),
    };
    doc.timings = timer.marks;
    let mut status = if doc.failed_checks() { Status::Disagreement } else { Status::Ok };
    if let Err(f) = outcome {
        doc.error = Some(f.message);
        status = status.worst(f.status);
    }
    (doc, status)
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load(doc: &mut Document, input: &GraphInput, limits: &Limits) -> Result<Graph, Failure> {
    let path = input.edges.as_ref().or(input.json.as_ref()).expect("clap requires one input");
    let g = read_graph(path)?;
    g.check_limits(limits)?;
    doc.input = json!({
        "path": path.display().to_string(),
        "graph": g.to_document(),
        "n_vertices": g.n_vertices(),
        "n_edges": g.n_edges(),
    });
    doc.human.push(format!("graph: {} vertices, {} edges", g.n_vertices(), g.n_edges()));
    Ok(g)
}

fn methods_for(m: Method) -> Methods {
    match m {
        Method::NP => Methods { n_p: true, ext_table: false, disconnecting: false },
        Method::ExtTable => Methods { n_p: false, ext_table: true, disconnecting: false },
        Method::Disconnecting => Methods { n_p: false, ext_table: false, disconnecting: true },
        Method::All => Methods::ALL,
    }
}

fn labels(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v).to_string()).collect()
}

/// Each depth value with the method that produced it.
fn depth_values(r: &DepthReport) -> Vec<Value> {
    if r.abelian {
        let why = if r.trivial { "trivial group" } else { "abelian branch" };
        return vec![json!({"method": "abelian", "depth": r.depth, "provenance": why})];
    }
    [
        ("disconnecting", r.depth_disconnecting, "disconnecting simplices"),
        ("n_p", r.depth_n_p, "n_P"),
        ("ext_table", r.depth_ext_table, "link-cohomology table"),
    ]
    .into_iter()
    .filter_map(|(m, v, prov)| v.map(|d| json!({"method": m, "depth": d, "provenance": prov})))
    .collect()
}

fn depth_result(g: &Graph, r: &DepthReport) -> Value {
    json!({
        "depth": r.depth,
        "values": depth_values(r),
        "abelian": r.abelian,
        "agreement": r.agreement,
        "witness": r.witness.as_ref().map(|w| labels(g, w)),
        "witness_split": r.witness_split.as_ref().map(|(a, b)| [labels(g, a), labels(g, b)]),
        "report": r,
    })
}

fn depth_lines(g: &Graph, r: &DepthReport) -> Vec<String> {
    let mut out = vec![format!("depth {}", r.depth)];
    if r.abelian {
        out.push(format!("  {}: {}", if r.trivial { "trivial group" } else { "abelian branch" }, r.depth));
        return out;
    }
    let mut shown = Vec::new();
    if let Some(d) = r.depth_disconnecting {
        let w = r.witness.as_ref().map(|w| labels(g, w).join(",")).unwrap_or_default();
        out.push(format!("  disconnecting simplices: {d} (σ = {{{w}}})"));
        shown.push(d.to_string());
    }
    if let Some(d) = r.depth_n_p {
        out.push(format!("  n_P: {d}"));
        shown.push(d.to_string());
    }
    if let Some(d) = r.depth_ext_table {
        out.push(format!("  link-cohomology table: {d}"));
        shown.push(d.to_string());
    }
    out.push(format!("methods: {}, agreement {}", shown.join("/"), r.agreement));
    out
}

fn depth_report(g: &Graph, methods: Methods, limits: &Limits) -> Result<DepthReport, Failure> {
    let p = FlagComplex::build(g, limits)?;
    Ok(depth_of_complex(&p, methods, &ExactCohomology)?)
}

fn cmd_depth(doc: &mut Document, timer: &mut Timer, input: &GraphInput, method: Method, limits: &Limits) -> Outcome {
    let g = load(doc, input, limits)?;
    let r = timer.time("depth", || depth_report(&g, methods_for(method), limits))?;
    doc.human.extend(depth_lines(&g, &r));
    doc.results = depth_result(&g, &r);
    let shown: Vec<String> = depth_values(&r).iter().map(|v| format!("{} {}", v["provenance"].as_str().unwrap_or_default(), v["depth"])).collect();
    doc.checks.push(Check::new("method-agreement", r.agreement, shown.join(", ")));
    Ok(())
}

fn ext_lines(e: &ExtTruncation) -> Vec<String> {
    let header: Vec<String> = (e.n_min..=e.n_max).map(|n| format!("{n:>6}")).collect();
    let mut out = vec![format!("Ext^p weight blocks (n = {} ..= {})", e.n_min, e.n_max), format!("  n  {}", header.join(""))];
    for (p, row) in e.rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| c.map_or(format!("{:>6}", "·"), |d| format!("{d:>6}"))).collect();
        out.push(format!("  p={p}{}", cells.join("")));
    }
    out.push(e.verdict());
    out
}

fn cmd_ext(
    doc: &mut Document,
    timer: &mut Timer,
    input: &GraphInput,
    weights: usize,
    pmax: Option<usize>,
    choice: ResolutionChoice,
    limits: &Limits,
) -> Outcome {
    let g = load(doc, input, limits)?;
    let res = timer.time("resolution", || -> Result<_, Failure> {
        Ok(match choice {
            ResolutionChoice::Froberg => froberg_complex(&g, weights, limits)?,
            ResolutionChoice::Minimal => {
                let dim = FlagComplex::build(&g, limits)?.dim();
                let p = pmax.unwrap_or((dim + 2).max(1) as usize);
                minimal_resolution(&raag_presentation(&g), p, weights, limits)?
            }
        })
    })?;
    let exact = timer.time("exactness", || check_exactness(&res));
    let mut ext = timer.time("ext", || truncated_ext(&res, weights))?;
    if let Some(p) = pmax {
        ext.rows.truncate(p + 1);
    }
    let report = timer.time("depth", || depth_report(&g, Methods::ALL, limits))?;
    doc.human.push(format!("resolution ranks {:?}", res.ranks()));
    doc.human.extend(ext_lines(&ext));
    let least = ext.least_nonzero().map(|t| t.0);
    let detail = match least {
        Some(p) => format!("truncated Ext least p = {p}, depth {}", report.depth),
        None => format!("no nonzero Ext row within the window; depth {}", report.depth),
    };
    doc.checks.push(Check::new(
        "exactness",
        exact.is_exact(),
        exact.first_failure().map_or("exact through the window".into(), |f| {
            format!("{} at degree {}, weight {}", f.kind, f.degree, f.weight)
        }),
    ));
    if !report.trivial {
        doc.checks.push(Check::new("ext-vs-depth", least.map_or(true, |p| p == report.depth), detail));
    }
    doc.results = json!({
        "resolution": {"kind": res.kind(), "ranks": res.ranks(), "terminates": res.terminates()},
        "ext": ext,
        "least_nonzero_p": least,
        "provenance": "truncated Ext",
        "verdict": ext.verdict(),
        "depth": report.depth,
    });
    Ok(())
}

fn dims_line(name: &str, d: &GradedDims) -> String {
    format!("  {name}: {:?}", d.dims)
}

fn cmd_hilbert(doc: &mut Document, timer: &mut Timer, input: &GraphInput, weights: usize, limits: &Limits) -> Outcome {
    let g = load(doc, input, limits)?;
    let nf = timer.time("normal_forms", || ul_dims_normal_form(&g, weights, limits))?;
    let cs = timer.time("clique_series", || clique_series_dims(&g, weights, limits))?;
    let quotient = if g.n_vertices() <= limits.max_generators {
        Some(timer.time("tensor_quotient", || ul_dims_quotient(&raag_presentation(&g), weights, limits))?)
    } else {
        None
    };
    doc.human.push(format!("dim UL(r), r = 0..={weights}"));
    doc.human.push(dims_line("lex normal forms", &nf));
    doc.human.push(dims_line("clique series", &cs));
    if let Some(q) = &quotient {
        doc.human.push(dims_line("tensor quotient", q));
    }
    let agree = nf == cs && quotient.as_ref().map_or(true, |q| *q == nf);
    doc.checks.push(Check::new(
        "hilbert-agreement",
        agree,
        if quotient.is_some() { "three methods" } else { "two methods; tensor quotient skipped above the generator cap" },
    ));
    doc.results = json!({
        "ul_dims": [
            {"provenance": "lex normal forms", "dims": nf},
            {"provenance": "clique series", "dims": cs},
            {"provenance": "tensor quotient", "dims": quotient},
        ],
    });
    Ok(())
}

fn cmd_lie_dims(doc: &mut Document, timer: &mut Timer, input: &GraphInput, weights: usize, limits: &Limits) -> Outcome {
    let g = load(doc, input, limits)?;
    let pbw = timer.time("pbw", || -> Result<_, Failure> {
        Ok(lie_dims_pbw_inversion(&clique_series_dims(&g, weights, limits)?, weights)?)
    })?;
    let direct = timer.time("lyndon", || lie_dims_direct(&raag_presentation(&g), weights, limits))?;
    doc.human.push(format!("dim L(r), r = 1..={weights}"));
    doc.human.push(dims_line("PBW inversion", &pbw));
    doc.human.push(dims_line("Lyndon brackets", &direct));
    doc.checks.push(Check::new("lie-agreement", pbw == direct, "PBW inversion vs Lyndon-bracket ranks"));
    doc.results = json!({
        "lie_dims": [
            {"provenance": "PBW inversion of the clique series", "dims": pbw},
            {"provenance": "Lyndon-bracket ranks", "dims": direct},
        ],
    });
    Ok(())
}

fn show(d: Option<u64>) -> String {
    d.map_or("not computed".into(), |d| d.to_string())
}

fn surface_checks(r: &SurfaceReport) -> Vec<Check> {
    let g = r.genus as u64;
    let mut out = vec![
        Check::new("l1", r.lie_dims.get(1) == Some(2 * g), format!("l1 = {}, 2g = {}", show(r.lie_dims.get(1)), 2 * g)),
        Check::new(
            "l2",
            r.lie_dims.get(2) == Some(r.l2_closed_form as u64),
            format!("l2 = {}, 2g² − g − 1 = {}", show(r.lie_dims.get(2)), r.l2_closed_form),
        ),
        Check::new(
            "v1-basis",
            r.v1_count == r.l2_closed_form && r.v1_rank == r.l2_closed_form,
            format!("{} listed brackets, rank {}", r.v1_count, r.v1_rank),
        ),
        Check::new("ul-recurrence", r.recurrence_holds, "u_r = 2g·u_{r−1} − u_{r−2}"),
        Check::new("pbw", r.pbw_agrees, "PBW inversion of UL matches Lyndon-bracket ranks"),
    ];
    if let Some(e) = &r.ext {
        let ok = e.row_vanishes(0) && e.row_vanishes(1) && e.least_nonzero().map(|t| t.0) == Some(2);
        out.push(Check::new("ext", ok, e.verdict()));
    }
    out
}

fn cmd_surface(doc: &mut Document, timer: &mut Timer, genus: usize, weights: usize, pmax: usize, limits: &Limits) -> Outcome {
    doc.input = json!({"genus": genus, "weights": weights, "pmax": pmax});
    let r = timer.time("surface", || verify::surface_report(genus, weights, (pmax > 0).then_some(pmax), limits))?;
    doc.human.push(format!("surface group of genus {genus}"));
    doc.human.push(dims_line("dim L(r), r = 1..", &r.lie_dims));
    doc.human.push(dims_line("dim UL(r), r = 0..", &r.ul_dims));
    if let Some(e) = &r.ext {
        doc.human.extend(ext_lines(e));
    }
    doc.checks.extend(surface_checks(&r));
    doc.results = json!({
        "lie_dims": {"provenance": "Lyndon-bracket ranks", "dims": r.lie_dims},
        "ul_dims": {"provenance": "tensor quotient", "dims": r.ul_dims},
        "ext": r.ext.as_ref().map(|e| json!({
            "provenance": "truncated Ext",
            "table": e,
            "least_nonzero_p": e.least_nonzero().map(|t| t.0),
            "verdict": e.verdict(),
        })),
        "report": r,
    });
    Ok(())
}

fn cmd_verify(doc: &mut Document, timer: &mut Timer, cfg: VerifyConfig, limits: &Limits) -> Outcome {
    if cfg.max_vertices > VERIFY_VERTEX_CAP {
        return Err(input_error(format!("--max-vertices {} exceeds the cap {VERIFY_VERTEX_CAP}", cfg.max_vertices)));
    }
    for w in [cfg.ul_weight, cfg.lie_weight] {
        if w > limits.max_weight {
            return Err(input_error(format!("weight {w} exceeds max_weight {}", limits.max_weight)));
        }
    }
    doc.input = json!({
        "max_vertices": cfg.max_vertices,
        "algebra_vertices": cfg.algebra_vertices,
        "ul_weights": cfg.ul_weight,
        "weights": cfg.lie_weight,
        "seed": cfg.seed,
        "faults": cfg.faults,
    });
    let swept: Vec<Value> = (0..=cfg.max_vertices)
        .map(|n| json!({"vertices": n, "graphs": 1u64 << (n * n.saturating_sub(1) / 2)}))
        .collect();
    let outcomes = timer.time("verify", || verify::run_all(&cfg));
    doc.human.push(format!(
        "labeled graphs on exactly {} vertices: {}",
        cfg.max_vertices,
        1u64 << (cfg.max_vertices * cfg.max_vertices.saturating_sub(1) / 2)
    ));
    for o in &outcomes {
        let detail = match &o.witness {
            None => format!("{} cases; {}", o.cases, o.summary),
            Some(w) => {
                let graph = w.graph.as_ref().map_or(String::new(), |g| serde_json::to_string(g).expect("serializes"));
                format!("{}; witness {graph} {}", o.summary, w.detail)
            }
        };
        doc.checks.push(Check::new(&o.id, o.passed, detail));
    }
    doc.results = json!({"graphs_swept": swept, "outcomes": outcomes});
    Ok(())
}

fn expand(paths: &[PathBuf]) -> Result<Vec<PathBuf>, Failure> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut entries: Vec<PathBuf> = fs::read_dir(p)
                .map_err(|e| input_error(format!("{}: {e}", p.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            entries.sort();
            out.extend(entries);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

fn cmd_batch(doc: &mut Document, timer: &mut Timer, paths: &[PathBuf], method: Method, limits: &Limits) -> Outcome {
    let files = expand(paths)?;
    doc.input = json!({"files": files.iter().map(|p| p.display().to_string()).collect::<Vec<_>>()});
    let mut results = Vec::new();
    let mut errors = 0;
    let mut disagreements = 0;
    for f in &files {
        let name = f.display().to_string();
        let one = timer.time("depth", || -> Result<(Graph, DepthReport), Failure> {
            let g = read_graph(f)?;
            g.check_limits(limits)?;
            let r = depth_report(&g, methods_for(method), limits)?;
            Ok((g, r))
        });
        match one {
            Ok((g, r)) => {
                doc.human.push(format!("{name}: depth {} ({} vertices, agreement {})", r.depth, g.n_vertices(), r.agreement));
                disagreements += usize::from(!r.agreement);
                results.push(json!({"file": name, "graph": g.to_document(), "result": depth_result(&g, &r)}));
            }
            Err(e) => {
                doc.human.push(format!("{name}: error: {}", e.message));
                errors += 1;
                results.push(json!({"file": name, "error": e.message}));
            }
        }
    }
    doc.checks.push(Check::new(
        "method-agreement",
        disagreements == 0,
        format!("{} files, {disagreements} disagreements", files.len()),
    ));
    doc.results = Value::Array(results);
    if errors > 0 {
        return Err(input_error(format!("{errors} of {} files could not be processed", files.len())));
    }
    Ok(())
}
