use clap::{Parser, Subcommand, ValueEnum};
use fairvd::faireval::fair_evaluate;
use fairvd::fairvc::{solve_bnb, solve_brute, solve_dp, Decision, DEFAULT_BRUTE_CAP};
use fairvd::kernel::{model_check, KernelReport};
use fairvd::modec::min_width;
use fairvd::params::{min_twin_cover, neighborhood_diversity};
use fairvd::reductions::*;
use fairvd::{Error, Formula, Graph, LabeledGraph, VertexSet};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

#[derive(Parser, Debug)]
#[command(name = "fairvd", version, about = "Fair vertex deletion toolkit")]
struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Twin cover size, neighbourhood diversity and modular width.
    Params { graph: PathBuf },
    /// Minimum fair vertex cover, or a decision with --k.
    Fairvc {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        brute_cap: usize,
        /// Seconds per branch-and-bound call.
        #[arg(long, default_value_t = 60)]
        time_budget: u64,
    },
    /// Model check a sentence on the twin-cover kernel.
    Mc { graph: PathBuf, sentence: PathBuf },
    /// Minimum fair cost of a set satisfying a one-free-variable formula.
    Faireval { graph: PathBuf, formula: PathBuf },
    /// Write a hardness instance.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        spec: PathBuf,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// Brute-force oracles.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Compare dp, brute force and branch and bound on one graph.
    Xcheck {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        brute_cap: usize,
        #[arg(long, default_value_t = 60)]
        time_budget: u64,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Are there W_1..W_l satisfying the formula with l-fair cost at most k?
    Lfair {
        graph: PathBuf,
        formula: PathBuf,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_LFAIR_CAP)]
        cap: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Dp,
    Brute,
    Bnb,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GenKind {
    Mcc,
    Binpack,
}

enum Failure {
    Input(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) | Error::InvalidState(_) => Failure::Resource(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Res<T> = Result<T, Failure>;

/// Everything a command reports, in both output modes.
struct Outcome {
    command: &'static str,
    input: Vec<String>,
    result: String,
    cost: Option<usize>,
    witness: Option<VertexSet>,
    kernel: Option<Value>,
    timings: Vec<(&'static str, f64)>,
    lines: Vec<String>,
    yes: bool,
}

impl Outcome {
    fn new(command: &'static str, input: &[&Path]) -> Self {
        Outcome {
            command,
            input: input.iter().map(|p| p.display().to_string()).collect(),
            result: String::new(),
            cost: None,
            witness: None,
            kernel: None,
            timings: Vec::new(),
            lines: Vec::new(),
            yes: true,
        }
    }

    fn time<T>(&mut self, phase: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.push((phase, start.elapsed().as_secs_f64()));
        out
    }

    fn text(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            let _ = writeln!(s, "{l}");
        }
        if let Some(c) = self.cost {
            let _ = writeln!(s, "cost {c}");
        }
        if let Some(w) = &self.witness {
            s.push_str("cover");
            for v in w.iter() {
                let _ = write!(s, " {v}");
            }
            s.push('\n');
        }
        s
    }

    fn json(&self) -> Value {
        let timings: serde_json::Map<String, Value> = self.timings.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        json!({
            "command": self.command,
            "input": self.input,
            "result": self.result,
            "cost": self.cost,
            "witness": self.witness.as_ref().map(|w| w.ids().to_vec()),
            "kernel": self.kernel,
            "timings": timings,
        })
    }
}

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Res<()> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Res<Graph> {
    Graph::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_formula(path: &Path) -> Res<Formula> {
    Formula::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

/// Refuses to print a cover that does not check out.
fn verified_cover(g: &Graph, w: VertexSet, cost: usize) -> Res<VertexSet> {
    if !g.is_vertex_cover(&w)? || g.fair_cost(&w)? != cost {
        return Err(Failure::Resource(format!("internal error: witness does not verify at cost {cost}")));
    }
    Ok(w)
}

fn kernel_json(r: &KernelReport) -> Value {
    json!({
        "n": r.reduced.graph.n(),
        "bound": r.bound.to_string(),
        "cover_size": r.cover_size,
        "removed": r.removed.iter().map(|x| json!({"vertex": x.vertex, "rule": x.rule.to_string()})).collect::<Vec<_>>(),
    })
}

fn params(path: &Path) -> Res<Outcome> {
    let mut out = Outcome::new("params", &[path]);
    let g = load_graph(path)?;
    let tc = out.time("twin_cover", || min_twin_cover(&g, g.n())).expect("V is a twin cover");
    let (nd, _) = out.time("neighborhood_diversity", || neighborhood_diversity(&g));
    let mw = out.time("modular_width", || min_width(&g))?;
    out.lines = vec![format!("n {} m {}", g.n(), g.m()), format!("twin_cover {}", tc.size()), format!("neighborhood_diversity {nd}"), format!("modular_width {mw}")];
    out.result = format!("twin_cover={} neighborhood_diversity={nd} modular_width={mw}", tc.size());
    Ok(out)
}

/// Smallest `k` with a yes answer, by increasing `k`.
fn bnb_optimum(g: &Graph, budget: Duration) -> Res<(usize, VertexSet)> {
    for k in 0..=g.max_degree() {
        match solve_bnb(g, k, budget) {
            Decision::Yes(w) => return Ok((k, w)),
            Decision::No => {}
            Decision::Unknown => return Err(Failure::Resource(format!("branch and bound ran out of time at k={k}"))),
        }
    }
    Err(Failure::Resource("branch and bound found no cover".into()))
}

fn fairvc(path: &Path, method: Method, k: Option<usize>, cap: usize, budget: Duration) -> Res<Outcome> {
    let mut out = Outcome::new("fairvc", &[path]);
    let g = load_graph(path)?;
    let found = match (method, k) {
        (Method::Bnb, Some(k)) => match out.time("bnb", || solve_bnb(&g, k, budget)) {
            Decision::Yes(w) => Some(w),
            Decision::No => None,
            Decision::Unknown => return Err(Failure::Resource(format!("branch and bound ran out of time at k={k}"))),
        },
        (Method::Bnb, None) => Some(out.time("bnb", || bnb_optimum(&g, budget))?.1),
        (Method::Dp, _) => Some(out.time("dp", || solve_dp(&g))?.cover),
        (Method::Brute, _) => Some(out.time("brute", || solve_brute(&g, cap))?.cover),
    };
    let found = found.filter(|w| k.is_none_or(|k| g.fair_cost(w).is_ok_and(|c| c <= k)));
    match found {
        Some(w) => {
            let cost = g.fair_cost(&w)?;
            out.witness = Some(verified_cover(&g, w, cost)?);
            out.cost = Some(cost);
            out.result = if k.is_some() { "yes".into() } else { "optimal".into() };
            if k.is_some() {
                out.lines.push("yes".into());
            }
        }
        None => {
            out.yes = false;
            out.result = "no".into();
            out.lines.push("no".into());
        }
    }
    Ok(out)
}

fn mc(graph: &Path, sentence: &Path) -> Res<Outcome> {
    let mut out = Outcome::new("mc", &[graph, sentence]);
    let g = load_graph(graph)?;
    let f = load_formula(sentence)?;
    let (value, report) = out.time("model_check", || model_check(&g, &f))?;
    out.yes = value;
    out.result = value.to_string();
    out.lines.push(value.to_string());
    out.lines.extend(report.dump().lines().map(String::from));
    out.kernel = Some(kernel_json(&report));
    Ok(out)
}

fn faireval(graph: &Path, formula: &Path) -> Res<Outcome> {
    let mut out = Outcome::new("faireval", &[graph, formula]);
    let g = load_graph(graph)?;
    let f = load_formula(formula)?;
    match out.time("fair_evaluate", || fair_evaluate(&g, &f))? {
        Some(sol) => {
            let itp = f.free_vars().iter().map(|x| (x.clone(), sol.cover.clone())).collect();
            if !f.evaluate(&LabeledGraph::unlabeled(g.clone()), &itp)? || g.fair_cost(&sol.cover)? != sol.cost {
                return Err(Failure::Resource("internal error: witness does not verify".into()));
            }
            out.result = "optimal".into();
            out.cost = Some(sol.cost);
            out.witness = Some(sol.cover);
        }
        None => {
            out.yes = false;
            out.result = "unsat".into();
            out.lines.push("unsat".into());
        }
    }
    Ok(out)
}

fn gen(kind: GenKind, spec: &Path, prefix: &Path) -> Res<Outcome> {
    let mut out = Outcome::new("gen", &[spec]);
    let text = read(spec)?;
    let mut files = Vec::new();
    match kind {
        GenKind::Mcc => {
            let (inst, opts) = MccInstance::parse_spec(&text)?;
            let h = gen_fairvc_from_mcc(&inst, opts);
            files.push((with_suffix(prefix, "g"), h.graph_text()));
            files.push((with_suffix(prefix, "map"), h.map_text()));
            out.lines.push(format!("k {}", h.k));
            out.lines.push(format!("n {} m {}", h.graph.n(), h.graph.m()));
            out.lines.push(format!("modulator {}", h.modulator_size));
        }
        GenKind::Binpack => {
            let inst = BinPackingInstance::parse_spec(&text)?;
            let lf = gen_lfair_from_binpacking(&inst);
            files.push((with_suffix(prefix, "g"), format!("# l={} k={}\n{}", lf.l, lf.k, lf.graph.to_text())));
            files.push((with_suffix(prefix, "f"), lf.formula.to_file_text()));
            let mut map = format!("# l={}\n# k={}\nrole universal 0\n", lf.l, lf.k);
            let mut next = 1;
            for (i, &s) in inst.sizes.iter().enumerate() {
                let _ = write!(map, "role item_{i}");
                for v in next..next + s {
                    let _ = write!(map, " {v}");
                }
                map.push('\n');
                next += s;
            }
            files.push((with_suffix(prefix, "map"), map));
            out.lines.push(format!("l {} k {}", lf.l, lf.k));
            out.lines.push(format!("n {} m {}", lf.graph.n(), lf.graph.m()));
        }
    }
    for (path, body) in &files {
        write(path, body)?;
        out.lines.push(format!("wrote {}", path.display()));
    }
    out.result = "written".into();
    Ok(out)
}

fn lfair(graph: &Path, formula: &Path, l: usize, k: usize, cap: usize) -> Res<Outcome> {
    let mut out = Outcome::new("oracle lfair", &[graph, formula]);
    let g = load_graph(graph)?;
    let f = load_formula(formula)?;
    let yes = out.time("oracle", || lfair_brute_oracle(&g, &f, l, k, cap))?;
    out.yes = yes;
    out.result = if yes { "yes" } else { "no" }.into();
    out.lines.push(out.result.clone());
    Ok(out)
}

fn xcheck(path: &Path, cap: usize, budget: Duration) -> Res<Outcome> {
    let mut out = Outcome::new("xcheck", &[path]);
    let g = load_graph(path)?;
    let dp = out.time("dp", || solve_dp(&g))?;
    let dp_ok = g.is_vertex_cover(&dp.cover)? && g.fair_cost(&dp.cover)? == dp.cost;
    out.lines.push(format!("dp {}", dp.cost));
    let mut agree = dp_ok;
    if g.n() <= cap {
        let brute = out.time("brute", || solve_brute(&g, cap))?;
        out.lines.push(format!("brute {}", brute.cost));
        agree &= brute.cost == dp.cost;
    } else {
        out.lines.push("brute skipped".into());
    }
    let at = out.time("bnb", || solve_bnb(&g, dp.cost, budget));
    let below = (dp.cost > 0).then(|| out.time("bnb", || solve_bnb(&g, dp.cost - 1, budget)));
    if matches!(at, Decision::Unknown) || matches!(below, Some(Decision::Unknown)) {
        return Err(Failure::Resource("branch and bound ran out of time".into()));
    }
    let bnb_ok = matches!(at, Decision::Yes(_)) && !matches!(below, Some(Decision::Yes(_)));
    out.lines.push(format!("bnb {}", if bnb_ok { dp.cost.to_string() } else { "disagrees".into() }));
    agree &= bnb_ok;
    out.lines.push(format!("agree {agree}"));
    out.yes = agree;
    out.result = if agree { "agree" } else { "disagree" }.into();
    out.cost = Some(dp.cost);
    out.witness = Some(verified_cover(&g, dp.cover, dp.cost)?);
    Ok(out)
}

fn run(cli: &Cli) -> Res<Outcome> {
    let secs = Duration::from_secs;
    match &cli.command {
        Command::Params { graph } => params(graph),
        Command::Fairvc { graph, method, k, brute_cap, time_budget } => fairvc(graph, *method, *k, *brute_cap, secs(*time_budget)),
        Command::Mc { graph, sentence } => mc(graph, sentence),
        Command::Faireval { graph, formula } => faireval(graph, formula),
        Command::Gen { kind, spec, output } => gen(*kind, spec, output),
        Command::Oracle { which: OracleCommand::Lfair { graph, formula, l, k, cap } } => lfair(graph, formula, *l, *k, *cap),
        Command::Xcheck { graph, brute_cap, time_budget } => xcheck(graph, *brute_cap, secs(*time_budget)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json());
            } else {
                print!("{}", out.text());
            }
            ExitCode::from(if out.yes { 0 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
