//! Command-line driver: runs suites and writes a JSONL report.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::completion::{self, complete, presentation_suite, Completion, Side, Target};
use crate::cosetgraph::{check_axioms, AxiomInputs, CosetGraph};
use crate::error::{Error, Result};
use crate::fp::{parse_presentation_file, todd_coxeter, EnumOptions, Strategy};
use crate::lab::{self, Lab};
use crate::report::{Report, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Hlt,
    Felsch,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphTarget {
    M24,
    He,
}

#[derive(Debug, Parser)]
#[command(name = "amalgam", version, about = "Verification suites for the (3,2;2,2) amalgams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Coset-table cache directory (AMALGAM_CACHE takes precedence).
    #[arg(long, global = true, default_value = ".cache")]
    pub cache: PathBuf,
    /// Disable the coset-table cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, global = true, default_value_t = 5_000_000)]
    pub max_cosets: usize,
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Hlt)]
    pub strategy: StrategyArg,
    /// Concurrent suite jobs (defaults to the number of cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Omit per-check timings so reports are byte-stable.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structure of G1, G2, B, their modules and the complements in G1.
    Structure,
    /// Twists, inner-equivalence sweep and faithfulness.
    Amalgams,
    /// Coset enumeration of a member group or a completion.
    Complete {
        #[arg(long, value_enum, required_unless_present = "presentation")]
        target: Option<Target>,
        /// Enumerate a presentation file (with `sub:` lines for the subgroup) instead.
        #[arg(long, conflicts_with = "target")]
        presentation: Option<PathBuf>,
    },
    /// Coset graph of a completion and the local axioms.
    Graph {
        #[arg(long, value_enum)]
        completion: GraphTarget,
        /// Required for the He graph.
        #[arg(long)]
        deep: bool,
        /// Write the edge list of the graph to this path.
        #[arg(long)]
        edges: Option<PathBuf>,
        /// Extra base vertices for the local checks.
        #[arg(long, default_value_t = 5)]
        spot_checks: usize,
    },
    /// Everything except the He graph (unless --deep).
    All {
        #[arg(long)]
        deep: bool,
    },
}

struct Ctx {
    cache: Option<PathBuf>,
    max_cosets: usize,
    strategy: StrategyArg,
}

impl Ctx {
    fn opts(&self, strategy: Strategy) -> EnumOptions {
        EnumOptions { strategy, max_cosets: self.max_cosets }
    }

    fn cache(&self) -> Option<&Path> {
        self.cache.as_deref()
    }
}

type Job = Box<dyn Fn(&Ctx) -> Result<Vec<Suite>> + Send + Sync>;

fn resource(e: &Error) -> bool {
    matches!(e, Error::CosetLimit { .. } | Error::TooLarge { .. })
}

/// Parses `args` and runs; returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    run(&cli)
}

pub fn run(cli: &Cli) -> i32 {
    let cache = if cli.no_cache {
        None
    } else {
        Some(std::env::var_os("AMALGAM_CACHE").map(PathBuf::from).unwrap_or_else(|| cli.cache.clone()))
    };
    let ctx = Ctx { cache, max_cosets: cli.max_cosets, strategy: cli.strategy };
    let mut report = Report::default();
    let jobs = match jobs_for(&cli.command, &mut report) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let results: Vec<(String, Result<Vec<Suite>>)> =
        pool.install(|| jobs.par_iter().map(|(name, job)| (name.clone(), job(&ctx))).collect());
    let mut exhausted = false;
    for (name, r) in results {
        match r {
            Ok(suites) => suites.into_iter().for_each(|s| report.add(s)),
            Err(e) => {
                exhausted |= resource(&e);
                let mut s = Suite::new(&name);
                s.error("job", &e);
                report.add(s);
            }
        }
    }
    let text = report.to_jsonl(!cli.no_timing);
    let written = match &cli.out {
        Some(p) => std::fs::write(p, &text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    if exhausted {
        EXIT_RESOURCE
    } else if report.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn jobs_for(cmd: &Command, report: &mut Report) -> Result<Vec<(String, Job)>> {
    let mut jobs: Vec<(String, Job)> = Vec::new();
    match cmd {
        Command::Structure => jobs.extend(structure_jobs()),
        Command::Amalgams => jobs.push(lab_job("amalgams", lab::amalgam_suite)),
        Command::Complete { target: Some(t), .. } => {
            record_inputs(report, &[*t])?;
            jobs.push(("presentations".into(), Box::new(|_| Ok(vec![presentation_suite()]))));
            let t = *t;
            jobs.push((format!("complete.{}", t.name()), Box::new(move |ctx| complete_job(ctx, t))));
        }
        Command::Complete { presentation: Some(path), .. } => {
            let text = std::fs::read_to_string(path)?;
            report.add_input("presentation", text.as_bytes());
            jobs.push(("complete.file".into(), Box::new(move |ctx| file_job(ctx, &text))));
        }
        Command::Complete { .. } => return Err(Error::Range("complete needs --target or --presentation".into())),
        Command::Graph { completion, deep, edges, spot_checks } => {
            let t = graph_target(*completion);
            record_inputs(report, &[t])?;
            let (deep, edges, spot) = (*deep, edges.clone(), *spot_checks);
            jobs.push((format!("graph.{}", t.name()), Box::new(move |ctx| graph_job(ctx, t, deep, edges.as_deref(), spot))));
        }
        Command::All { deep } => {
            let targets = [Target::G1, Target::G2, Target::B, Target::M24, Target::He, Target::A16];
            record_inputs(report, &targets)?;
            jobs.extend(structure_jobs());
            jobs.push(lab_job("amalgams", lab::amalgam_suite));
            jobs.push(("presentations".into(), Box::new(|_| Ok(vec![presentation_suite()]))));
            for t in targets {
                jobs.push((format!("complete.{}", t.name()), Box::new(move |ctx| complete_job(ctx, t))));
            }
            jobs.push(("graph.m24".into(), Box::new(|ctx| graph_job(ctx, Target::M24, false, None, 5))));
            let deep = *deep;
            jobs.push(("graph.he".into(), Box::new(move |ctx| graph_job(ctx, Target::He, deep, None, 0))));
        }
    }
    Ok(jobs)
}

fn lab_job(name: &str, suite: fn(&Lab) -> Suite) -> (String, Job) {
    (name.to_string(), Box::new(move |_: &Ctx| Ok(vec![suite(&Lab::new()?)])))
}

fn structure_jobs() -> Vec<(String, Job)> {
    vec![
        lab_job("structure.g1", lab::structure_suite_g1),
        lab_job("structure.g2", lab::structure_suite_g2),
        lab_job("structure.b", lab::structure_suite_b),
        lab_job("modules", lab::module_suite),
        lab_job("complements", lab::complement_suite),
    ]
}

fn record_inputs(report: &mut Report, targets: &[Target]) -> Result<()> {
    for t in targets {
        report.add_input(t.name(), t.presentation()?.to_text().as_bytes());
    }
    Ok(())
}

fn graph_target(g: GraphTarget) -> Target {
    match g {
        GraphTarget::M24 => Target::M24,
        GraphTarget::He => Target::He,
    }
}

/// Enumerates with the configured strategy; with `both`, also checks that the
/// two strategies produce the same standardised table.
fn enumerate(ctx: &Ctx, inst: &completion::Instance, s: &mut Suite) -> Result<Completion> {
    let c = match ctx.strategy {
        StrategyArg::Hlt | StrategyArg::Both => complete(inst, ctx.opts(Strategy::Hlt), ctx.cache())?,
        StrategyArg::Felsch => complete(inst, ctx.opts(Strategy::Felsch), ctx.cache())?,
    };
    if ctx.strategy == StrategyArg::Both {
        let other = todd_coxeter(&inst.presentation, &inst.subgroup, ctx.opts(Strategy::Felsch))?;
        s.holds(&format!("{}.strategies_agree", inst.name), other.data() == c.table.data());
    }
    Ok(c)
}

fn complete_job(ctx: &Ctx, t: Target) -> Result<Vec<Suite>> {
    let mut s = Suite::new(&format!("complete.{}", t.name()));
    let inst = t.instance()?;
    let c = enumerate(ctx, &inst, &mut s)?;
    s.eq(&format!("{}.index", inst.name), inst.expected_index, c.table.index());
    s.eq(&format!("{}.image_order", inst.name), inst.expected_order, c.image_order);
    if t == Target::A16 {
        s.holds("a16.generators_even", c.image.gens().iter().all(|g| g.is_even()));
        let a13 = &c.image.gens()[12];
        let moved: Vec<usize> = a13.cycle_type().into_iter().filter(|&l| l > 1).collect();
        s.eq("a16.a13_cycle_type", "[2, 2, 2, 2]".to_string(), format!("{moved:?}"));
    }
    Ok(vec![s])
}

fn file_job(ctx: &Ctx, text: &str) -> Result<Vec<Suite>> {
    let mut s = Suite::new("complete.file");
    let f = parse_presentation_file(text)?;
    let opts = ctx.opts(if ctx.strategy == StrategyArg::Felsch { Strategy::Felsch } else { Strategy::Hlt });
    let t = todd_coxeter(&f.presentation, &f.subgroup, opts)?;
    let valid = t.validate(&f.presentation, &f.subgroup);
    s.record("file.closed", valid.is_ok(), "valid closed table", valid.map(|_| "valid".to_string()).unwrap_or_else(|e| e.to_string()));
    s.record("file.index", true, "", t.index());
    if ctx.strategy == StrategyArg::Both {
        let other = todd_coxeter(&f.presentation, &f.subgroup, ctx.opts(Strategy::Felsch))?;
        s.holds("file.strategies_agree", other.data() == t.data());
    }
    Ok(vec![s])
}

fn graph_job(ctx: &Ctx, t: Target, deep: bool, edges: Option<&Path>, spot: usize) -> Result<Vec<Suite>> {
    let mut s = Suite::new(&format!("graph.{}", t.name()));
    if t == Target::He && !deep {
        s.skip("he", "needs --deep");
        return Ok(vec![s]);
    }
    let first = enumerate(ctx, &t.instance_on(Side::First)?, &mut s)?;
    let second = enumerate(ctx, &t.instance_on(Side::Second)?, &mut s)?;
    s.eq("image_order.first_side", t.group_order(), first.image_order);
    s.eq("image_order.second_side", t.group_order(), second.image_order);
    let d = CosetGraph::build(&first.table, &second.table)?;
    if let Some(p) = edges {
        std::fs::write(p, d.edge_list())?;
    }
    let first_gens: Vec<usize> = (0..12).collect();
    let second_gens: Vec<usize> = (0..11).chain([12]).collect();
    let inp = AxiomInputs {
        graph: &d,
        first_gens: &first_gens,
        second_gens: &second_gens,
        first_bound: completion::G1_ORDER,
        second_bound: completion::G2_ORDER,
        group_order: t.group_order(),
        spot_checks: spot,
    };
    check_axioms(&inp, &mut s)?;
    Ok(vec![s])
}
