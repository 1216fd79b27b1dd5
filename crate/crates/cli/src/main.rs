use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use weyl_alcove::characters::CharacterCache;
use weyl_alcove::closed_subsets::{
    classify, closed_subset_from, closure, enumerate_closed, is_closed, ClosedSubset, DEFAULT_MAX_ALCOVE,
};
use weyl_alcove::fusion::FusionRing;
use weyl_alcove::modular::modular_data;
use weyl_alcove::regression::{chart_report, run, run_all, Workbench, CRITERIA};
use weyl_alcove::{AlgebraId, Error, Rational, RootSystem, Weight};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "alcove", version, about = "Fusion rings, closed subsets and modular data over the level-k Weyl alcove")]
struct Cli {
    /// Simple Lie type, e.g. A2, B13, E7.
    #[arg(long, global = true)]
    algebra: Option<AlgebraId>,

    /// Level k.
    #[arg(long, global = true)]
    level: Option<u32>,

    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Character cache directory (overrides WEYL_ALCOVE_CACHE).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Refuse alcoves with more weights than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ALCOVE)]
    max_alcove: usize,

    /// Also compute the S-matrix exactly in the cyclotomic field.
    #[arg(long, global = true)]
    exact_s: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the weights of the alcove.
    Alcove,
    /// Fusion product of two weights.
    Fuse { lambda: Weight, gamma: Weight },
    /// Smallest closed subset containing the given weights.
    Closure { weights: Vec<Weight> },
    /// Every closed subset, with its classification.
    EnumerateClosed,
    /// Classify a closed subset.
    Classify {
        #[arg(required = true)]
        weights: Vec<Weight>,
    },
    /// Twists, quantum dimensions, S-matrix and degenerate objects of a closed subset.
    Modular {
        #[arg(required = true)]
        weights: Vec<Weight>,
    },
    /// Root shifts of each dull fundamental weight, computed and printed.
    Chart,
    /// Run the reproduction criteria.
    #[command(alias = "verify-paper")]
    Verify {
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<u8>,
    },
}

enum Failure {
    Usage(String),
    Invariant(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Invariant(e.to_string())
        }
    }
}

struct Context {
    cli: Cli,
    cache: CharacterCache,
}

impl Context {
    fn instance(&self) -> Result<(AlgebraId, u32), Failure> {
        match (self.cli.algebra, self.cli.level) {
            (Some(a), Some(k)) => Ok((a, k)),
            _ => Err(Failure::Usage("--algebra and --level are required for this command".into())),
        }
    }

    fn ring(&self) -> Result<FusionRing, Failure> {
        let (a, k) = self.instance()?;
        Ok(FusionRing::with_bound(
            RootSystem::new(a)?,
            k,
            self.cache.clone(),
            Some(self.cli.max_alcove),
        )?)
    }

    fn emit(&self, command: &str, payload: Value, text: impl FnOnce() -> String) {
        if self.cli.json {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "algebra": self.cli.algebra.map(|a| a.to_string()),
                "level": self.cli.level,
                "command": command,
                "payload": payload,
            });
            let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        } else {
            // A closed pipe (e.g. `| head`) is not an error worth a panic.
            let _ = write!(std::io::stdout(), "{}", text());
        }
    }
}

fn rational(r: &Rational) -> Value {
    json!({ "num": r.numer(), "den": r.denom() })
}

fn labels(w: &Weight) -> Value {
    json!(w.labels())
}

fn subset_json(ring: &FusionRing, s: &ClosedSubset) -> Value {
    json!({
        "members": s.weights(ring).iter().map(labels).collect::<Vec<_>>(),
        "classification": classify(ring, s),
    })
}

fn closed_input(ring: &FusionRing, weights: &[Weight]) -> Result<ClosedSubset, Failure> {
    let idx = weights.iter().map(|w| ring.index(w)).collect::<Result<Vec<_>, _>>()?;
    if !is_closed(ring, &idx)? {
        let c = closure(ring, weights)?;
        return Err(Failure::Usage(format!(
            "the given set is not closed; its closure is {}",
            c.notation(ring)
        )));
    }
    Ok(closed_subset_from(ring, weights)?)
}

fn execute(ctx: &Context) -> Result<(), Failure> {
    match &ctx.cli.command {
        Command::Alcove => {
            let ring = ctx.ring()?;
            let ws = ring.alcove().weights();
            let payload = ws
                .iter()
                .map(|w| json!({ "weight": labels(w), "notation": w.notation() }))
                .collect();
            ctx.emit("alcove", Value::Array(payload), || {
                let mut s = String::new();
                for w in ws {
                    s += &format!("{:<24} {}\n", w.to_string(), w.notation());
                }
                s += &format!("{} weights\n", ws.len());
                s
            });
        }
        Command::Fuse { lambda, gamma } => {
            let ring = ctx.ring()?;
            let v = ring.fuse(lambda, gamma)?;
            let payload = v.iter().map(|(w, m)| json!([labels(w), m])).collect();
            ctx.emit("fuse", Value::Array(payload), || {
                v.iter().map(|(w, m)| format!("{w} ×{m}\n")).collect()
            });
        }
        Command::Closure { weights } => {
            let ring = ctx.ring()?;
            let c = closure(&ring, weights)?;
            ctx.emit("closure", subset_json(&ring, &c), || {
                format!("{}  {}\n", c.notation(&ring), classify(&ring, &c))
            });
        }
        Command::EnumerateClosed => {
            let ring = ctx.ring()?;
            let all = enumerate_closed(&ring, ctx.cli.max_alcove)?;
            let payload = all.iter().map(|s| subset_json(&ring, s)).collect();
            ctx.emit("enumerate-closed", Value::Array(payload), || {
                let mut out = String::new();
                for s in &all {
                    out += &format!("{:<24} {}\n", classify(&ring, s).to_string(), s.notation(&ring));
                }
                out += &format!("{} closed subsets\n", all.len());
                out
            });
        }
        Command::Classify { weights } => {
            let ring = ctx.ring()?;
            let c = closed_input(&ring, weights)?;
            ctx.emit("classify", subset_json(&ring, &c), || format!("{}\n", classify(&ring, &c)));
        }
        Command::Modular { weights } => {
            let ring = ctx.ring()?;
            let c = closed_input(&ring, weights)?;
            let data = modular_data(&ring, &c, ctx.cli.exact_s)?;
            let names: Vec<String> = data.members.iter().map(|&i| ring.weight(i).notation()).collect();
            let payload = json!({
                "members": data.members.iter().map(|&i| labels(ring.weight(i))).collect::<Vec<_>>(),
                "qdims": data.qdims,
                "twists": data.twists.iter().map(rational).collect::<Vec<_>>(),
                "s_matrix": data.s_matrix.iter()
                    .map(|row| row.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "s_exact": data.s_exact.as_ref().map(|m| m.iter()
                    .map(|row| row.iter().map(|z| z.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>()),
                "verdict": data.report.verdict,
                "degenerates": data.report.degenerates.iter().map(|d| json!({
                    "weight": labels(&d.weight),
                    "parity": d.parity,
                    "invertible": d.invertible,
                })).collect::<Vec<_>>(),
                "ring": data.report.ring,
            });
            ctx.emit("modular", payload, || {
                let mut s = String::new();
                s += &format!("{:<16} {:>14}  twist t (C = e^(πi t))\n", "weight", "qdim");
                for (k, name) in names.iter().enumerate() {
                    s += &format!("{:<16} {:>14.9}  {}\n", name, data.qdims[k], data.twists[k]);
                }
                s += "\nS-matrix (unnormalized):\n";
                for row in &data.s_matrix {
                    let cells: Vec<String> = row.iter().map(|z| format!("{:>9.5}{:+.5}i", z.re, z.im)).collect();
                    s += &format!("  {}\n", cells.join("  "));
                }
                if let Some(exact) = &data.s_exact {
                    s += "\nS-matrix (exact, in powers of ζ):\n";
                    for (k, row) in exact.iter().enumerate() {
                        for (m, z) in row.iter().enumerate() {
                            s += &format!("  S[{}, {}] = {}\n", names[k], names[m], z);
                        }
                    }
                }
                s += "\ndegenerate objects:\n";
                for d in &data.report.degenerates {
                    s += &format!(
                        "  {} ({}, {})\n",
                        d.weight.notation(),
                        d.parity,
                        if d.invertible { "invertible" } else { "not invertible" }
                    );
                }
                s += &format!("degenerate ring: {}\nverdict: {}\n", data.report.ring, data.report.verdict);
                s
            });
        }
        Command::Chart => {
            let a = ctx
                .cli
                .algebra
                .ok_or_else(|| Failure::Usage("--algebra is required for chart".into()))?;
            let rs = RootSystem::new(a)?;
            let report = chart_report(&rs)?;
            let payload = serde_json::to_value(&report).expect("serializable");
            ctx.emit("chart", payload, || {
                let mut s = String::new();
                if report.rows.is_empty() {
                    s += "no dull fundamental weights\n";
                }
                for row in &report.rows {
                    s += &format!("λ{}: computed {}\n", row.i, row.computed.join(", "));
                    match &row.printed {
                        Some(p) => s += &format!(
                            "     expected {}{}\n",
                            p.join(", "),
                            if row.matches { "" } else { "  (differs)" }
                        ),
                        None => s += "     no expected entry\n",
                    }
                }
                for e in &report.excluded {
                    s += &format!("excluded: {e}\n");
                }
                s
            });
        }
        Command::Verify { criterion } => {
            let wb = Workbench::new(ctx.cache.clone());
            let reports = match criterion {
                Some(id) => {
                    if !CRITERIA.iter().any(|c| c.0 == *id) {
                        return Err(Failure::Usage(format!("no criterion {id}; expected 1-{}", CRITERIA.len())));
                    }
                    vec![run(&wb, *id)?]
                }
                None => run_all(&wb),
            };
            let payload = serde_json::to_value(&reports).expect("serializable");
            ctx.emit("verify", payload, || {
                let mut s = String::new();
                for r in &reports {
                    s += &format!("{r}\n");
                    for d in &r.details {
                        s += &format!("    {d}\n");
                    }
                }
                s
            });
            if reports.iter().any(|r| !r.passed) {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = match &cli.cache_dir {
        Some(d) => CharacterCache::at(d),
        None => CharacterCache::from_env(),
    };
    let ctx = Context { cli, cache };
    match execute(&ctx) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `alcove --help` for usage");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
