//! `odiam`: generators, orienters, verifiers and oracles over the text
//! formats of `oriented_diameter::io`.
//!
//! Exit codes: 0 success, 1 a checked property does not hold, 2 bad usage
//! or input.

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};

use oriented_diameter::hardness::{
    build_reduction, orientation_from_partition, partition_dp, PartitionInstance, ReductionInstance,
};
use oriented_diameter::io::{parse_set, Bundle, BundleRecord};
use oriented_diameter::lower_bound::NestedTriangles;
use oriented_diameter::oriented::{
    brute_force_od, brute_force_weighted_witness, weighted_directed_diameter, BruteForce, Digraph,
};
use oriented_diameter::planar_orient::{improved_bound, improved_orient};
use oriented_diameter::scalar::{format_rational, parse_rational};
use oriented_diameter::schnyder::initial_orient;
use oriented_diameter::separator::cycle_separator;
use oriented_diameter::trigrid::TriGrid;
use oriented_diameter::{Error, Orientation, PlaneGraph, Rational};

#[derive(Parser)]
#[command(name = "odiam", version, about = "Strong orientations with small diameter")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph.
    #[command(subcommand)]
    Gen(Gen),
    /// Orient a graph.
    Orient {
        #[arg(value_enum)]
        method: Method,
        #[command(flatten)]
        input: Input,
    },
    /// Directed diameter of the arcs (weighted when W lines are present).
    Diameter {
        #[command(flatten)]
        input: Input,
    },
    /// Check that the arcs orient the graph, strongly, within a diameter.
    Verify {
        /// Fail unless the diameter is at most this (p/q allowed when weighted).
        #[arg(long)]
        max_diameter: Option<String>,
        #[command(flatten)]
        input: Input,
    },
    /// Exhaustive oracle.
    Brute {
        /// Decide "weighted diameter <= threshold" instead of computing OD.
        #[arg(long, action = ArgAction::Set, num_args = 0..=1, default_value_t = false, default_missing_value = "true")]
        weighted: bool,
        /// Threshold p/q for the weighted decision (default: the `# D` annotation).
        #[arg(long)]
        threshold: Option<String>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Largest edge count to enumerate.
        #[arg(long, default_value_t = 24)]
        budget: usize,
        /// Also print the witness orientation.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Balanced simple cycle separator.
    Separator {
        #[command(flatten)]
        input: Input,
    },
    /// Verify a generated instance.
    #[command(subcommand)]
    Check(Check),
}

#[derive(Subcommand)]
enum Gen {
    /// Triangular grid T_r.
    Trigrid {
        #[arg(long)]
        r: usize,
    },
    /// Nested triangles with m levels.
    Nested {
        #[arg(long)]
        m: usize,
    },
    /// Random triangulation.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Partition gadget.
    Reduction {
        /// Comma-separated positive integers.
        #[arg(long)]
        set: String,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Rebuild the gadget from its `# S` line and test the equivalence.
    Reduction {
        /// Largest edge count for the exhaustive side.
        #[arg(long, default_value_t = 24)]
        budget: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Trigrid,
    Schnyder,
    Improved,
}

#[derive(Args)]
struct Input {
    /// Input files, read in order (standard input when none).
    files: Vec<String>,
}

/// Failure kinds mapped to exit codes.
enum Fail {
    Violated(String),
    Usage(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

type Run = Result<String, Fail>;

impl Input {
    fn read(&self) -> Result<Bundle, Fail> {
        let mut text = String::new();
        if self.files.is_empty() {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Fail::Usage(format!("stdin: {e}")))?;
        } else {
            for f in &self.files {
                let part = std::fs::read_to_string(f).map_err(|e| Fail::Usage(format!("{f}: {e}")))?;
                text.push_str(&part);
                if !text.ends_with('\n') {
                    text.push('\n');
                }
            }
        }
        parse_any(&text)
    }
}

/// Text, or one JSON record per non-empty chunk when the input starts with `{`.
fn parse_any(text: &str) -> Result<Bundle, Fail> {
    if !text.trim_start().starts_with('{') {
        return Ok(Bundle::parse(text)?);
    }
    let mut merged = Bundle::default();
    let stream = serde_json::Deserializer::from_str(text).into_iter::<BundleRecord>();
    for rec in stream {
        let b = rec.map_err(|e| Fail::Usage(format!("json: {e}")))?.to_bundle()?;
        if b.graph.is_some() {
            if merged.graph.is_some() {
                return Err(Fail::Usage("second graph in one stream".into()));
            }
            merged.graph = b.graph;
        }
        merged.arcs.extend(b.arcs);
        merged.weights.extend(b.weights);
        if b.cycle.is_some() {
            merged.cycle = b.cycle;
        }
        merged.comments.extend(b.comments);
    }
    Ok(merged)
}

fn render(b: &Bundle, format: Format) -> String {
    match format {
        Format::Text => b.write(),
        Format::Json => {
            let mut s = serde_json::to_string(&BundleRecord::from_bundle(b)).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn graph_of(b: &Bundle) -> Result<&PlaneGraph, Fail> {
    b.graph
        .as_ref()
        .ok_or_else(|| Fail::Usage("input has no graph".into()))
}

fn arcs_bundle(g: &PlaneGraph, o: &Orientation, comments: Vec<String>) -> Bundle {
    Bundle {
        arcs: o.arcs(g),
        comments,
        ..Bundle::default()
    }
}

fn gen(cmd: &Gen, format: Format) -> Run {
    let bundle = match cmd {
        Gen::Trigrid { r } => {
            let t = TriGrid::generate(*r);
            let comments = t
                .coords()
                .iter()
                .enumerate()
                .map(|(v, c)| format!("C {v} {} {} {}", c.i, c.j, c.k))
                .collect();
            Bundle {
                graph: Some(t.graph().clone()),
                comments,
                ..Bundle::default()
            }
        }
        Gen::Nested { m } => {
            let t = NestedTriangles::new(*m)?;
            let comments = (1..=*m)
                .map(|i| {
                    let l = t.level(i);
                    format!("T {i} {} {} {}", l.u, l.v, l.w)
                })
                .collect();
            Bundle {
                graph: Some(t.into_graph()),
                comments,
                ..Bundle::default()
            }
        }
        Gen::Random { n, seed } => Bundle {
            graph: Some(PlaneGraph::random_triangulation(*n, *seed)?),
            ..Bundle::default()
        },
        Gen::Reduction { set } => {
            let inst = PartitionInstance::new(parse_set(set)?)?;
            let ri = build_reduction(&inst)?;
            reduction_bundle(&ri)
        }
    };
    Ok(render(&bundle, format))
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn reduction_bundle(ri: &ReductionInstance) -> Bundle {
    let values: Vec<String> = ri.set.values().iter().map(|v| v.to_string()).collect();
    let comments = vec![
        format!("S {}", values.join(",")),
        format!("D {}", format_rational(&ri.d_threshold)),
        format!("s {}", ri.names.s),
        format!("t {}", ri.names.t),
        format!("top {}", join(&ri.names.top)),
        format!("bottom {}", join(&ri.names.bottom)),
    ];
    let weights = ri
        .graph
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| (u, v, *ri.weights.get(e)))
        .collect();
    Bundle {
        graph: Some(ri.graph.clone()),
        weights,
        comments,
        ..Bundle::default()
    }
}

fn orient(method: Method, input: &Input, format: Format) -> Run {
    let b = input.read()?;
    let g = graph_of(&b)?;
    let out = match method {
        Method::Trigrid => {
            let coords = b
                .coordinates(g.vertex_count())?
                .ok_or_else(|| Fail::Usage("grid input needs `# C v i j k` coordinate lines".into()))?;
            let t = TriGrid::from_coordinates(g.clone(), coords)?;
            let o = t.orient()?;
            arcs_bundle(g, &o, vec![format!("r {}", t.r())])
        }
        Method::Schnyder => {
            let init = initial_orient(g)?;
            let [lm, lr, ll] = init.report.leaves;
            arcs_bundle(
                g,
                &init.orientation,
                vec![
                    format!("bound {}", init.bound),
                    format!("leaves {lm} {lr} {ll}"),
                    format!("delta0 {}", init.report.delta0),
                ],
            )
        }
        Method::Improved => {
            let o = improved_orient(g)?;
            let d = Digraph::new(g, &o)?
                .diameter()
                .ok_or_else(|| Fail::Violated("orientation is not strong".into()))?;
            arcs_bundle(
                g,
                &o,
                vec![
                    format!("diameter {d}"),
                    format!("bound {}", improved_bound(g.vertex_count(), 6.0)),
                ],
            )
        }
    };
    Ok(render(&out, format))
}

/// Digraph straight from the arc list; vertices are `0..=max id`.
fn digraph_of_arcs(b: &Bundle) -> Result<Digraph, Fail> {
    if b.arcs.is_empty() {
        return Err(Fail::Usage("input has no A lines".into()));
    }
    let n = match &b.graph {
        Some(g) => g.vertex_count(),
        None => b.arcs.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0) + 1,
    };
    if let Some(&(u, v)) = b.arcs.iter().find(|&&(u, v)| u >= n || v >= n) {
        return Err(Fail::Usage(format!("arc {u} {v} out of range")));
    }
    Ok(Digraph::from_arcs(n, &b.arcs))
}

fn arc_weights(b: &Bundle) -> Result<Vec<Rational>, Fail> {
    let mut map = std::collections::HashMap::new();
    for &(u, v, w) in &b.weights {
        map.insert((u.min(v), u.max(v)), w);
    }
    b.arcs
        .iter()
        .map(|&(u, v)| {
            map.get(&(u.min(v), u.max(v)))
                .copied()
                .ok_or_else(|| Fail::Usage(format!("no weight for arc {u} {v}")))
        })
        .collect()
}

fn diameter(input: &Input) -> Run {
    let b = input.read()?;
    let dg = digraph_of_arcs(&b)?;
    if b.weights.is_empty() {
        match dg.diameter() {
            Some(d) => Ok(format!("{d}\n")),
            None => Err(Fail::Violated("not strongly connected".into())),
        }
    } else {
        let w = arc_weights(&b)?;
        match dg.weighted_diameter(&w) {
            Some(d) => Ok(format!("{}\n", format_rational(&d))),
            None => Err(Fail::Violated("not strongly connected".into())),
        }
    }
}

fn verify(max: Option<&str>, input: &Input) -> Run {
    let b = input.read()?;
    let g = graph_of(&b)?;
    let o = b.orientation(g)?;
    let mut out = String::new();
    if b.weights.is_empty() {
        let d = Digraph::new(g, &o)?
            .diameter()
            .ok_or_else(|| Fail::Violated("not strongly connected".into()))?;
        out.push_str(&format!("strong\ndiameter {d}\n"));
        if let Some(m) = max {
            let limit = parse_rational(m).ok_or_else(|| Fail::Usage(format!("bad bound `{m}`")))?;
            if Rational::from_integer(d as i64) > limit {
                return Err(Fail::Violated(format!("diameter {d} exceeds {m}")));
            }
        }
    } else {
        let w = b.weight_map(g)?;
        let d = weighted_directed_diameter(g, &o, &w)?
            .ok_or_else(|| Fail::Violated("not strongly connected".into()))?;
        out.push_str(&format!("strong\ndiameter {}\n", format_rational(&d)));
        if let Some(m) = max {
            let limit = parse_rational(m).ok_or_else(|| Fail::Usage(format!("bad bound `{m}`")))?;
            if d > limit {
                return Err(Fail::Violated(format!("diameter {} exceeds {m}", format_rational(&d))));
            }
        }
    }
    Ok(out)
}

/// Rational weights over a common denominator, as integers.
fn common_scale(ws: &[Rational], limit: &Rational) -> Result<(Vec<u64>, u64), Fail> {
    let lcm = ws
        .iter()
        .chain(std::iter::once(limit))
        .fold(1i64, |acc, r| num_integer::lcm(acc, *r.denom()));
    let scale = |r: &Rational| -> Result<u64, Fail> {
        let v = r.numer() * (lcm / r.denom());
        u64::try_from(v).map_err(|_| Fail::Usage("negative weight".into()))
    };
    let scaled = ws.iter().map(scale).collect::<Result<Vec<_>, _>>()?;
    Ok((scaled, scale(limit)?))
}

#[allow(clippy::too_many_arguments)]
fn brute(
    weighted: bool,
    threshold: Option<&str>,
    jobs: Option<usize>,
    budget: usize,
    witness: bool,
    input: &Input,
    format: Format,
) -> Run {
    let b = input.read()?;
    let g = graph_of(&b)?;
    let opts = BruteForce {
        budget,
        jobs,
        ..BruteForce::default()
    };
    if !weighted {
        let (d, o) = brute_force_od(g, &opts)?;
        let mut out = format!("{d}\n");
        if witness {
            out.push_str(&render(&arcs_bundle(g, &o, Vec::new()), format));
        }
        return Ok(out);
    }
    let w = b.weight_map(g)?;
    let limit = match threshold {
        Some(t) => parse_rational(t).ok_or_else(|| Fail::Usage(format!("bad threshold `{t}`")))?,
        None => b
            .threshold()?
            .ok_or_else(|| Fail::Usage("no --threshold and no `# D` line".into()))?,
    };
    let (scaled, lim) = common_scale(w.as_slice(), &limit)?;
    let sw = oriented_diameter::WeightMap::from_vec(scaled)?;
    let hit = brute_force_weighted_witness(g, &sw, &lim, &opts)?;
    let mut out = format!("{}\n", hit.is_some());
    if let (true, Some(o)) = (witness, &hit) {
        out.push_str(&render(&arcs_bundle(g, o, Vec::new()), format));
    }
    Ok(out)
}

fn separator(input: &Input, format: Format) -> Run {
    let b = input.read()?;
    let g = graph_of(&b)?;
    let sep = cycle_separator(g)?;
    if sep.exceeds_size_target() {
        eprintln!(
            "warning: separator has {} vertices, above 4 sqrt(n) = {:.1}",
            sep.len(),
            4.0 * (g.vertex_count() as f64).sqrt()
        );
    }
    let out = Bundle {
        cycle: Some(sep.cycle.clone()),
        comments: vec![format!("inside {} outside {}", sep.inside.len(), sep.outside.len())],
        ..Bundle::default()
    };
    Ok(render(&out, format))
}

fn check_reduction(budget: usize, jobs: Option<usize>, input: &Input) -> Run {
    let b = input.read()?;
    let values = b
        .partition_set()?
        .ok_or_else(|| Fail::Usage("no `# S` line".into()))?;
    let ri = build_reduction(&PartitionInstance::new(values)?)?;
    let g = graph_of(&b)?;
    if *g != ri.graph {
        return Err(Fail::Violated("graph differs from the gadget of the set".into()));
    }
    if b.weight_map(g)? != ri.weights {
        return Err(Fail::Violated("weights differ from the gadget of the set".into()));
    }
    if b.threshold()? != Some(ri.d_threshold) {
        return Err(Fail::Violated("threshold differs from the gadget of the set".into()));
    }
    let mut out = String::from("gadget ok\n");
    let partition = partition_dp(&ri.set)?;
    match &partition {
        Some((a, bset)) => {
            let o = orientation_from_partition(&ri, a, bset)?;
            let d = weighted_directed_diameter(&ri.graph, &o, &ri.weights)?
                .ok_or_else(|| Fail::Violated("partition orientation is not strong".into()))?;
            if d > ri.d_threshold {
                return Err(Fail::Violated(format!(
                    "partition orientation has diameter {} > D",
                    format_rational(&d)
                )));
            }
            out.push_str(&format!("partition yes\nforward ok {}\n", format_rational(&d)));
        }
        None => out.push_str("partition no\n"),
    }
    if ri.graph.edge_count() > budget.min(63) {
        out.push_str("roundtrip skipped\n");
        return Ok(out);
    }
    let opts = BruteForce {
        budget,
        jobs,
        ..BruteForce::default()
    };
    let decision = oriented_diameter::oriented::brute_force_weighted_decision(
        &ri.graph,
        &ri.scaled_weights(),
        &ri.scaled_threshold(),
        &opts,
    )?;
    out.push_str(&format!("decision {decision}\n"));
    if decision != partition.is_some() {
        return Err(Fail::Violated(format!(
            "{out}roundtrip disagrees: partition {} but decision {decision}",
            if partition.is_some() { "exists" } else { "does not exist" }
        )));
    }
    out.push_str("roundtrip agree\n");
    Ok(out)
}

fn run(cli: &Cli) -> Run {
    let f = cli.format;
    match &cli.command {
        Command::Gen(g) => gen(g, f),
        Command::Orient { method, input } => orient(*method, input, f),
        Command::Diameter { input } => diameter(input),
        Command::Verify { max_diameter, input } => verify(max_diameter.as_deref(), input),
        Command::Brute {
            weighted,
            threshold,
            jobs,
            budget,
            witness,
            input,
        } => brute(*weighted, threshold.as_deref(), *jobs, *budget, *witness, input, f),
        Command::Separator { input } => separator(input, f),
        Command::Check(Check::Reduction { budget, jobs, input }) => check_reduction(*budget, *jobs, input),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe downstream is not our failure
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Fail::Violated(msg)) => {
            eprintln!("odiam: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("odiam: {msg}");
            ExitCode::from(2)
        }
    }
}
