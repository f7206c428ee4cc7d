//! Command-line surface: argument parsing, command dispatch and report output.
//!
//! Every command returns an [`Output`] holding a human-readable table, a JSON
//! value and an exit code; `main` decides where each goes.

pub mod document;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use symrig::cycles::{gf2_rank, is_circuit, is_cycle};
use symrig::fogelsanger::{
    fog_decompose, overlap_growth_check, verify_fog_properties, verify_z2_fog_properties, z2_fog_decompose,
    FogDecomposition, PropertyReport, Status,
};
use symrig::generators::{
    gen_bricard, gen_crosspolytope, gen_hexahedron_pair, gen_split_pair, gen_symmetric_stacked, gen_trivial_pair,
};
use symrig::lowerbound::{check_lower_bound, g2};
use symrig::rigidity::{
    gamma_rigidity_with_witness, is_generically_rigid, is_inf_rigid, symmetric_block_split, BlockData, Framework,
    GammaFramework, PointGroup, RigidityReport, DEFAULT_TRIALS,
};
use symrig::symmetric::{classify, rigidity_conditions, Classification};
use symrig::{Involution, MultiComplex, VertexId};

pub use document::{ComplexDocument, GroupDoc};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable or malformed input; exit code 2.
    Input(String),
    /// Valid input that fails a check or an analysis; exit code 1.
    Failure(String),
}

impl CliError {
    pub fn input(e: symrig::Error) -> Self {
        CliError::Input(e.to_string())
    }

    pub fn failure(e: symrig::Error) -> Self {
        CliError::Failure(e.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failure(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Failure(m) => m,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

#[derive(Parser, Debug)]
#[command(name = "symrig", version, about = "Symmetric rigidity of simplicial cycles")]
pub struct Cli {
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    pub json: Option<String>,
    /// Print the JSON report instead of the table.
    #[arg(long, global = true)]
    pub json_only: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the structural checks on a document.
    Validate { path: String },
    /// Face counts, cycle structure and the symmetric classification.
    Analyze(AnalyzeArgs),
    /// Infinitesimal or symmetric generic rigidity of the graph.
    Rigidity(RigidityArgs),
    /// Fogelsanger decomposition at an edge.
    Decompose(DecomposeArgs),
    /// Write a named instance as a document.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    pub path: String,
    /// Report the edge excess over the stacked-sphere count.
    #[arg(long)]
    pub g2: bool,
    /// Test whether the complex is a circuit.
    #[arg(long)]
    pub circuit: bool,
    /// Classify the complex under its involution.
    #[arg(long)]
    pub classify: bool,
    /// Evaluate the rigidity conditions for the group with this many +1 entries.
    #[arg(long)]
    pub group: Option<usize>,
    /// Print the mod-2 boundary.
    #[arg(long)]
    pub boundary: bool,
}

#[derive(Args, Debug)]
pub struct RigidityArgs {
    pub path: String,
    /// Ambient dimension; defaults to the document's group, then k + 1.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Number of +1 entries of the diagonal point group.
    #[arg(long)]
    pub group: Option<usize>,
    /// Generic samples to draw when the document has no coordinates.
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Split the rank into symmetric and anti-symmetric blocks.
    #[arg(long)]
    pub block: bool,
    /// Fail instead of sampling when the document has no coordinates.
    #[arg(long)]
    pub no_sample: bool,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    pub path: String,
    /// Edge as `u,v`.
    #[arg(long)]
    pub edge: String,
    /// Use the symmetric decomposition, which keeps every part invariant.
    #[arg(long)]
    pub z2: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Check the decomposition properties; exit 1 if any fails.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Crosspolytope,
    TrivialPair,
    Stacked,
    Bricard,
    HexahedronPair,
    SplitPair,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    pub kind: GenKind,
    /// Dimension of the generated complex.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Symmetric stackings to apply.
    #[arg(long, default_value_t = 0)]
    pub stacks: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Overlap for split pairs.
    #[arg(long, default_value_t = 0)]
    pub h: usize,
    /// Write the document here instead of stdout.
    #[arg(long)]
    pub out: Option<String>,
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Validate { path } => cmd_validate(&ComplexDocument::read(path)?),
        Command::Analyze(a) => cmd_analyze(&ComplexDocument::read(&a.path)?, a),
        Command::Rigidity(a) => cmd_rigidity(&ComplexDocument::read(&a.path)?, a),
        Command::Decompose(a) => cmd_decompose(&ComplexDocument::read(&a.path)?, a),
        Command::Gen(a) => cmd_gen(a),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cmd_validate(doc: &ComplexDocument) -> Result<Output, CliError> {
    let s = doc.complex()?;
    let mut text = format!(
        "complex: k = {}, {} facets ({} distinct), {} vertices\ncycle: {}\n",
        s.dim(),
        s.len(),
        s.support().count(),
        s.vertices().len(),
        yes(is_cycle(&s))
    );
    let mut report = json!({
        "command": "validate",
        "k": s.dim(),
        "facets": s.len(),
        "vertices": s.vertices().len(),
        "cycle": is_cycle(&s),
    });
    let sigma = doc.involution()?;
    if let Some(sigma) = &sigma {
        symrig::symmetric::validate(&s, sigma).map_err(CliError::failure)?;
        text += &format!("involution: valid, {} pairs\n", sigma.len());
        report["involution_pairs"] = json!(sigma.len());
    }
    let group = doc.point_group()?;
    if let Some(coords) = doc.coordinates()? {
        let d = group.map(|g| g.d).or_else(|| coords.values().next().map(Vec::len)).unwrap_or(s.dim() + 1);
        let f = Framework::new(s.graph(), coords, d).map_err(CliError::failure)?;
        if let (Some(sigma), Some(group)) = (&sigma, group) {
            GammaFramework::new(f, sigma.clone(), group).map_err(CliError::failure)?;
            text += &format!("coordinates: symmetric under t = {}, d = {}\n", group.t, group.d);
        } else {
            text += &format!("coordinates: complete in dimension {d}\n");
        }
        report["coordinates"] = json!(true);
    }
    report["valid"] = json!(true);
    text += "valid\n";
    Ok(Output::ok(text, report))
}

fn classification_value(c: &Classification) -> Value {
    let mut v = json!({ "kind": c.kind() });
    match c {
        Classification::Reducible { witness } => v["witness"] = to_value(&ComplexDocument::from_complex(witness)),
        Classification::SplitPair { circuit, overlap } => {
            v["overlap"] = json!(overlap);
            v["circuit"] = to_value(&ComplexDocument::from_complex(circuit));
        }
        Classification::TrivialIrreducible { .. } => v["overlap"] = json!(0),
        Classification::Circuit => {}
    }
    v
}

pub fn cmd_analyze(doc: &ComplexDocument, a: &AnalyzeArgs) -> Result<Output, CliError> {
    let s = doc.complex()?;
    let sigma = doc.involution()?;
    let none = !(a.g2 || a.circuit || a.classify || a.boundary || a.group.is_some());
    let symmetric = || -> Result<_, CliError> {
        let sigma = sigma.clone().ok_or_else(|| CliError::Failure("analysis needs an involution".into()))?;
        symrig::symmetric::validate(&s, &sigma).map_err(CliError::failure)
    };
    let mut text = String::new();
    let mut report = serde_json::Map::new();
    if a.circuit || none {
        let (cycle, circuit) = (is_cycle(&s), is_circuit(&s));
        text += &format!(
            "cycle: {}\ncircuit: {}\nGF(2) rank: {}\nstrongly connected: {}\n",
            yes(cycle),
            yes(circuit),
            gf2_rank(&s),
            yes(s.is_strongly_connected())
        );
        report.insert(
            "circuit".into(),
            json!({ "cycle": cycle, "circuit": circuit, "rank": gf2_rank(&s), "strongly_connected": s.is_strongly_connected() }),
        );
    }
    if a.g2 || none {
        if sigma.is_some() {
            let r = check_lower_bound(&symmetric()?);
            text += &format!(
                "g2: {}\nbound: {}\nsatisfied: {}\nequality: {}\nhypotheses: {} ({})\n",
                r.g2,
                r.bound,
                yes(r.satisfied),
                yes(r.equality),
                yes(r.hypotheses_hold),
                r.hypothesis_note
            );
            report.insert("g2".into(), to_value(&r));
        } else {
            text += &format!("g2: {}\n", g2(&s));
            report.insert("g2".into(), json!({ "g2": g2(&s) }));
        }
    }
    if a.classify || (none && sigma.is_some()) {
        let c = classify(&symmetric()?).map_err(CliError::failure)?;
        text += &format!("class: {:?}", c.kind());
        if let Some(h) = c.overlap() {
            text += &format!(" (h = {h})");
        }
        text += "\n";
        report.insert("classify".into(), classification_value(&c));
    }
    if let Some(t) = a.group {
        let r = rigidity_conditions(&symmetric()?, t).map_err(CliError::failure)?;
        text += &format!(
            "threshold c({}, {}): {}\nsplit condition: {}\nseparator condition: {}\nhypotheses: {}\n",
            r.k,
            r.t,
            r.threshold,
            yes(r.cond_ii),
            yes(r.cond_iii),
            yes(r.hypotheses_hold)
        );
        report.insert("conditions".into(), to_value(&r));
    }
    if a.boundary {
        let b = s.boundary();
        text += &format!("boundary: {} faces of dimension {}\n", b.len(), b.dim());
        for f in b.support() {
            text += &format!("  {f}\n");
        }
        report.insert("boundary".into(), to_value(&ComplexDocument::from_complex(&b)));
    }
    Ok(Output::ok(text, Value::Object(report)))
}

fn block_text(b: &BlockData) -> String {
    format!(
        "symmetric block rank: {}\nanti-symmetric block rank: {}\ntrivial motions (sym/ant): {}/{} (expected {}/{})\nblock law: {}\n",
        b.rank_sym,
        b.rank_ant,
        b.trivial_sym,
        b.trivial_ant,
        b.expected_trivial_sym,
        b.expected_trivial_ant,
        if b.consistent { "holds" } else { "VIOLATED" }
    )
}

fn report_text(r: &RigidityReport) -> String {
    let mut text = format!(
        "dimension: {}\nrank: {} (rigid rank {})\ndegrees of freedom: {}\ntrivial motions: {}\nverdict: {}\n",
        r.d,
        r.rank,
        r.target,
        r.dof,
        r.trivial_dim,
        r.verdict()
    );
    if r.trial_ranks.len() > 1 {
        let ranks: Vec<String> = r.trial_ranks.iter().map(ToString::to_string).collect();
        text += &format!("trial ranks: {}\n", ranks.join(", "));
    }
    if !r.degenerate_edges.is_empty() {
        text += &format!("degenerate edges: {}\n", r.degenerate_edges.len());
    }
    text
}

pub fn cmd_rigidity(doc: &ComplexDocument, a: &RigidityArgs) -> Result<Output, CliError> {
    let s = doc.complex()?;
    let graph = s.graph();
    let sigma = doc.involution()?;
    let doc_group = doc.point_group()?;
    let d = a.dim.or(doc_group.map(|g| g.d)).unwrap_or(s.dim() + 1);
    let t = a.group.or(doc_group.map(|g| g.t));
    let group = t.map(|t| PointGroup::new(t, d).map_err(CliError::input)).transpose()?;
    let pairing = sigma.unwrap_or_else(Involution::empty);

    let (mut report, witness): (RigidityReport, Option<GammaFramework>) = match doc.coordinates()? {
        Some(coords) => {
            let f = Framework::new(graph, coords, d).map_err(CliError::failure)?;
            let report = is_inf_rigid(&f).map_err(CliError::failure)?;
            let gf = match group {
                Some(g) if !pairing.is_empty() => Some(GammaFramework::new(f, pairing, g).map_err(CliError::failure)?),
                _ => None,
            };
            (report, gf)
        }
        None if a.no_sample => {
            return Err(CliError::Failure("document has no coordinates and sampling is disabled".into()))
        }
        None => match group {
            Some(g) => {
                let (r, w) =
                    gamma_rigidity_with_witness(&graph, &pairing, g, a.trials, a.seed).map_err(CliError::failure)?;
                (r, Some(w))
            }
            None => (is_generically_rigid(&graph, d, a.trials, a.seed).map_err(CliError::failure)?, None),
        },
    };
    if a.block {
        let w = witness.ok_or_else(|| CliError::Failure("block split needs a symmetric framework (--group)".into()))?;
        report.block = Some(symmetric_block_split(&w).map_err(CliError::failure)?);
    }
    let mut text = report_text(&report);
    if let Some(b) = &report.block {
        text += &block_text(b);
    }
    let mut json = to_value(&report);
    json["verdict"] = json!(report.verdict());
    let code = if report.block.as_ref().is_some_and(|b| !b.consistent) { 1 } else { 0 };
    Ok(Output { text, json, code })
}

fn parse_edge(s: &str) -> Result<(VertexId, VertexId), CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let parse = |p: &str| p.parse::<u32>().map(VertexId).map_err(|_| CliError::Input(format!("bad edge {s:?}")));
    match parts.as_slice() {
        [u, v] => Ok((parse(u)?, parse(v)?)),
        _ => Err(CliError::Input(format!("edge {s:?} should be written u,v"))),
    }
}

fn property_text(r: &PropertyReport) -> String {
    r.checks
        .iter()
        .map(|c| {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::NotApplicable => "n/a",
            };
            match &c.detail {
                Some(d) => format!("  ({}) {status}: {d}\n", c.property),
                None => format!("  ({}) {status}\n", c.property),
            }
        })
        .collect()
}

fn part_document(part: &MultiComplex, sigma: Option<&Involution>) -> ComplexDocument {
    let doc = ComplexDocument::from_complex(part);
    match sigma {
        Some(s) => doc.with_involution(&s.induced(&part.vertices())),
        None => doc,
    }
}

pub fn cmd_decompose(doc: &ComplexDocument, a: &DecomposeArgs) -> Result<Output, CliError> {
    let (u, v) = parse_edge(&a.edge)?;
    let (decomposition, sigma): (FogDecomposition, Option<Involution>) = if a.z2 {
        let s = doc.symmetric()?;
        let d = z2_fog_decompose(&s, u, v, a.seed).map_err(CliError::failure)?;
        (d, Some(s.involution().clone()))
    } else {
        (fog_decompose(&doc.complex()?, u, v, a.seed).map_err(CliError::failure)?, None)
    };
    let mut text = format!("edge: {u}{v}\nparts: {}\n", decomposition.len());
    for (i, p) in decomposition.parts.iter().enumerate() {
        text += &format!("  part {}: {} facets, {} vertices\n", i + 1, p.len(), p.vertices().len());
    }
    let parts: Vec<ComplexDocument> = decomposition.parts.iter().map(|p| part_document(p, sigma.as_ref())).collect();
    let mut json = json!({
        "edge": [u, v],
        "symmetric": a.z2,
        "parts": parts,
    });
    let mut code = 0;
    if a.verify {
        let mut report = match &sigma {
            Some(s) => verify_z2_fog_properties(&decomposition, s),
            None => verify_fog_properties(&decomposition),
        };
        if let Some(s) = &sigma {
            report.checks.extend(overlap_growth_check(&decomposition, s).checks);
        }
        text += "properties:\n";
        text += &property_text(&report);
        if !report.all_passed() {
            code = 1;
        }
        json["properties"] = to_value(&report);
    }
    Ok(Output { text, json, code })
}

pub fn generate(a: &GenArgs) -> Result<ComplexDocument, CliError> {
    let fail = CliError::failure;
    Ok(match a.kind {
        GenKind::Crosspolytope => ComplexDocument::from_symmetric(&gen_crosspolytope(a.k).map_err(fail)?),
        GenKind::TrivialPair => ComplexDocument::from_symmetric(&gen_trivial_pair(a.k).map_err(fail)?),
        GenKind::Stacked => {
            ComplexDocument::from_symmetric(&gen_symmetric_stacked(a.k, a.stacks, a.seed).map_err(fail)?)
        }
        GenKind::HexahedronPair => ComplexDocument::from_symmetric(&gen_hexahedron_pair()),
        GenKind::SplitPair => ComplexDocument::from_symmetric(&gen_split_pair(a.k, a.h, a.seed).map_err(fail)?),
        GenKind::Bricard => {
            let gf = gen_bricard(a.seed).map_err(fail)?;
            let b2 = gen_crosspolytope(2).map_err(fail)?;
            ComplexDocument::from_symmetric(&b2).with_coordinates(gf.framework()).with_group(gf.group())
        }
    })
}

pub fn cmd_gen(a: &GenArgs) -> Result<Output, CliError> {
    let doc = generate(a)?;
    let json = to_value(&doc);
    let text = match &a.out {
        Some(path) => {
            std::fs::write(path, doc.to_json() + "\n").map_err(|e| CliError::Input(format!("{path}: {e}")))?;
            format!("wrote {path}: k = {}, {} facets\n", doc.k, doc.facets.len())
        }
        None => doc.to_json() + "\n",
    };
    Ok(Output::ok(text, json))
}
