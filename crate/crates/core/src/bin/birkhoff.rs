use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use birkhoff::acceptance::{self, Status, Tier};
use birkhoff::bounds::bound_report;
use birkhoff::builders::{build_g_set, iterate_doubling};
use birkhoff::constructions::{
    apex_three_cycles, diagonal_copies_with, even_pairing_stabilizer_with, fano_clique, k_cycle_clique, klein_four,
    order_216_group, pair_swaps, projective_plane_clique, seven_point_independent_set, star_clique, transposition_star,
};
use birkhoff::graph::{build_graph_with, cycles_of_length_with, symmetric_group_with};
use birkhoff::solvers::symmetric::{clique_number, independence_number, k_cycle_clique_classes, k_cycle_clique_number};
use birkhoff::solvers::{
    check_clique, check_independent, is_maximal_clique, is_maximal_independent, Verification, VerifyMode,
};
use birkhoff::{BitGraph, Budget, Error, PermSet};

/// `println!` that exits quietly once stdout is closed.
macro_rules! say {
    ($($arg:tt)*) => {
        if writeln!(io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    };
}

#[derive(Parser)]
#[command(
    name = "birkhoff",
    version,
    about = "Cliques and independent sets in the Birkhoff polytope graph"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for searches and verification.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Seed for sampled verification and property suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest adjacency matrix to materialize, in bytes.
    #[arg(long = "mem-budget", global = true)]
    mem_budget: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bounds for α(n).
    Bounds {
        #[arg(long)]
        n: usize,
    },
    /// Build an explicit set and write it as JSON.
    Construct {
        family: Family,
        #[command(flatten)]
        params: Params,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Check a set read from a JSON file.
    Verify {
        kind: VerifyKind,
        #[arg(long)]
        file: PathBuf,
        /// Degree of the ambient symmetric group for maximality checks.
        #[arg(long)]
        ambient: Option<usize>,
        /// Check every pair even for large sets.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Exact optimum searches.
    Solve {
        target: Target,
        #[command(flatten)]
        params: Params,
        /// Group all maximum cliques up to similarity.
        #[arg(long)]
        classify: bool,
    },
    /// Write a graph in DIMACS format.
    Export {
        #[arg(long)]
        family: ExportFamily,
        #[command(flatten)]
        params: Params,
        /// Read a vertex set from a JSON file (family `file`).
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Run the acceptance criteria.
    Acceptance {
        #[arg(long, default_value = "quick")]
        tier: TierArg,
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Args, Clone, Copy)]
struct Params {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    T1,
    T2,
    TClique,
    KCycle,
    Fano,
    Projective,
    #[value(name = "Hn")]
    Hn,
    #[value(name = "Kn")]
    Kn,
    #[value(name = "Gn")]
    Gn,
    #[value(name = "G7")]
    G7,
    #[value(name = "G9")]
    G9,
    Klein,
    GSet,
    Co55,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFamily {
    Sym,
    Ck,
    T1,
    T2,
    TClique,
    KCycle,
    Fano,
    Projective,
    #[value(name = "Hn")]
    Hn,
    #[value(name = "Kn")]
    Kn,
    #[value(name = "Gn")]
    Gn,
    #[value(name = "G7")]
    G7,
    #[value(name = "G9")]
    G9,
    Klein,
    GSet,
    Co55,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Clique,
    Independent,
    MaximalClique,
    MaximalIndependent,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Omega,
    Alpha,
    OmegaKCycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Quick,
    Full,
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget(_) => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = Result<bool, Failure>;

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required")))
}

fn build_family(family: Family, p: Params, budget: &Budget) -> Result<PermSet, Failure> {
    Ok(match family {
        Family::T1 => transposition_star(need(p.n, "n")?)?,
        Family::T2 => apex_three_cycles(need(p.n, "n")?)?,
        Family::TClique => star_clique(need(p.n, "n")?)?,
        Family::KCycle => k_cycle_clique(need(p.n, "n")?, need(p.k, "k")?)?,
        Family::Fano => fano_clique(),
        Family::Projective => projective_plane_clique(need(p.q, "q")?)?,
        Family::Hn => diagonal_copies_with(need(p.n, "n")?, budget)?.elements,
        Family::Kn => pair_swaps(need(p.n, "n")?)?.elements,
        Family::Gn => even_pairing_stabilizer_with(need(p.n, "n")?, budget)?.elements,
        Family::G7 => seven_point_independent_set(),
        Family::G9 => order_216_group().elements,
        Family::Klein => klein_four(p.n.unwrap_or(4))?.elements,
        Family::GSet => build_g_set(need(p.n, "n")?, budget)?,
        Family::Co55 => {
            let seed = build_g_set(need(p.n, "n")?, budget)?;
            iterate_doubling(&seed, need(p.k, "k")?, budget)?
        }
    })
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn print_json(v: &serde_json::Value) {
    say!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn cmd_bounds(n: usize, as_json: bool) -> CliResult {
    if !(4..=64).contains(&n) {
        return Err(Failure::Usage(format!("--n must lie in 4..=64, got {n}")));
    }
    let r = bound_report(n)?;
    if as_json {
        say!("{}", r.to_json());
    } else {
        say!("n = {} = 2^{} + {}", r.n, r.m, r.q);
        say!("f  = {}", r.f);
        say!("g  = {}", r.g);
        say!("h  = {}", r.h);
        match &r.cj {
            Some(cj) => say!("cj = {cj}"),
            None => say!("cj = undefined"),
        }
        say!("best known = {} via {}", r.best_known, r.provenance);
    }
    Ok(true)
}

fn independence_status(s: &PermSet, budget: &Budget) -> String {
    let v = check_independent(s, VerifyMode::Auto, budget);
    let c = check_clique(s, VerifyMode::Auto, budget);
    if v.ok {
        format!("independent: yes{}", if v.exhaustive { "" } else { " (sampled)" })
    } else if c.ok {
        "clique: yes".into()
    } else {
        "independent: no, clique: no".into()
    }
}

fn cmd_construct(family: Family, p: Params, output: Option<&Path>, as_json: bool, budget: &Budget) -> CliResult {
    let set = build_family(family, p, budget)?;
    let status = independence_status(&set, budget);
    match output {
        Some(path) => {
            fs::write(path, set.to_json())?;
            if as_json {
                print_json(&json!({
                    "size": set.len(),
                    "degree": set.degree(),
                    "status": status,
                    "file": path.display().to_string(),
                }));
            } else {
                say!("{} elements on {} points, {status}", set.len(), set.degree());
                say!("written to {}", path.display());
            }
        }
        None => {
            say!("{}", set.to_json());
            eprintln!("{} elements on {} points, {status}", set.len(), set.degree());
        }
    }
    Ok(true)
}

fn read_set(path: &Path) -> Result<PermSet, Failure> {
    let text = fs::read_to_string(path)?;
    Ok(PermSet::from_json(&text)?)
}

fn report_pairs(kind: &str, v: &Verification, as_json: bool) -> bool {
    if as_json {
        print_json(&json!({
            "check": kind,
            "pass": v.ok,
            "pairs_checked": v.pairs_checked,
            "exhaustive": v.exhaustive,
            "violation": v.violation.as_ref().map(|(a, b)| vec![a.to_string(), b.to_string()]),
        }));
    } else if v.ok {
        say!(
            "{kind}: pass ({} pairs, {})",
            v.pairs_checked,
            if v.exhaustive { "exhaustive" } else { "sampled" }
        );
    } else {
        let (a, b) = v.violation.as_ref().expect("violation");
        say!("{kind}: fail, pair {a} and {b}");
    }
    v.ok
}

fn cmd_verify(
    kind: VerifyKind,
    file: &Path,
    ambient: Option<usize>,
    exhaustive: bool,
    as_json: bool,
    budget: &Budget,
) -> CliResult {
    let set = read_set(file)?;
    let mode = if exhaustive {
        VerifyMode::Exhaustive
    } else {
        VerifyMode::Auto
    };
    let m = ambient.unwrap_or(set.degree());
    let (name, report) = match kind {
        VerifyKind::Clique => return Ok(report_pairs("clique", &check_clique(&set, mode, budget), as_json)),
        VerifyKind::Independent => {
            return Ok(report_pairs(
                "independent",
                &check_independent(&set, mode, budget),
                as_json,
            ))
        }
        VerifyKind::MaximalClique => ("maximal-clique", is_maximal_clique(&set, m, budget)),
        VerifyKind::MaximalIndependent => ("maximal-independent", is_maximal_independent(&set, m, budget)),
    };
    let report = match report {
        Ok(r) => r,
        Err(Error::NotIndependent(a, b)) => {
            let msg = format!("{name}: fail, not independent: pair {a} and {b}");
            if as_json {
                print_json(&json!({"check": name, "pass": false, "violation": [a, b]}));
            } else {
                say!("{msg}");
            }
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    if as_json {
        print_json(&json!({
            "check": name,
            "pass": report.maximal,
            "ambient": m,
            "method": report.method,
            "checked": report.checked,
            "extension": report.extension.as_ref().map(ToString::to_string),
        }));
    } else if report.maximal {
        say!("{name}: pass in Sym({m}) ({} checked)", report.checked);
    } else {
        let ext = report.extension.as_ref().map(ToString::to_string).unwrap_or_default();
        say!("{name}: fail in Sym({m}), extendable by {ext}");
    }
    Ok(report.maximal)
}

fn cmd_solve(target: Target, p: Params, classify: bool, as_json: bool, budget: &Budget) -> CliResult {
    let n = need(p.n, "n")?;
    if classify {
        let k = match target {
            Target::OmegaKCycle => need(p.k, "k")?,
            _ => return Err(Failure::Usage("--classify needs the omega-k-cycle target".into())),
        };
        let cls = k_cycle_clique_classes(n, k, budget)?;
        let reps = |list: &[birkhoff::solvers::SimilarityClass]| -> Vec<Vec<String>> {
            list.iter()
                .map(|c| {
                    let mut v = cls.cliques[c.representative].to_strings();
                    v.sort();
                    v
                })
                .collect()
        };
        if as_json {
            print_json(&json!({
                "best_size": cls.size,
                "cliques_through_anchor": cls.cliques.len(),
                "classes": cls.classes.len(),
                "classes_with_inversion": cls.classes_with_inversion.len(),
                "representatives": reps(&cls.classes),
                "representatives_with_inversion": reps(&cls.classes_with_inversion),
            }));
        } else {
            say!("size {}", cls.size);
            say!("maximum cliques through the anchor: {}", cls.cliques.len());
            say!("classes: {}", cls.classes.len());
            say!("classes up to inversion: {}", cls.classes_with_inversion.len());
            for (i, r) in reps(&cls.classes).iter().enumerate() {
                say!("class {}: {{{}}}", i + 1, r.join(", "));
            }
        }
        return Ok(true);
    }
    let r = match target {
        Target::Omega => clique_number(n, budget)?,
        Target::Alpha => independence_number(n, budget)?,
        Target::OmegaKCycle => k_cycle_clique_number(n, need(p.k, "k")?, budget)?,
    };
    if as_json {
        say!("{}", r.to_json());
    } else {
        say!("{}", r.size);
        say!("witness: {{{}}}", r.witness.to_strings().join(", "));
        say!(
            "subproblems: {}, nodes: {}, {:.2}s",
            r.subproblems,
            r.node_count,
            r.elapsed.as_secs_f64()
        );
    }
    Ok(true)
}

fn cmd_export(
    family: ExportFamily,
    p: Params,
    file: Option<&Path>,
    output: Option<&Path>,
    as_json: bool,
    budget: &Budget,
) -> CliResult {
    let set = match family {
        ExportFamily::Sym => symmetric_group_with(need(p.n, "n")?, budget)?,
        ExportFamily::Ck => cycles_of_length_with(need(p.n, "n")?, need(p.k, "k")?, budget)?,
        ExportFamily::File => read_set(file.ok_or_else(|| Failure::Usage("--file is required".into()))?)?,
        other => {
            let fam = match other {
                ExportFamily::T1 => Family::T1,
                ExportFamily::T2 => Family::T2,
                ExportFamily::TClique => Family::TClique,
                ExportFamily::KCycle => Family::KCycle,
                ExportFamily::Fano => Family::Fano,
                ExportFamily::Projective => Family::Projective,
                ExportFamily::Hn => Family::Hn,
                ExportFamily::Kn => Family::Kn,
                ExportFamily::Gn => Family::Gn,
                ExportFamily::G7 => Family::G7,
                ExportFamily::G9 => Family::G9,
                ExportFamily::Klein => Family::Klein,
                ExportFamily::GSet => Family::GSet,
                ExportFamily::Co55 => Family::Co55,
                ExportFamily::Sym | ExportFamily::Ck | ExportFamily::File => unreachable!(),
            };
            build_family(fam, p, budget)?
        }
    };
    let g: BitGraph = build_graph_with(&set, budget)?;
    write_out(output, &g.to_dimacs_string())?;
    if let Some(path) = output {
        if as_json {
            print_json(&json!({
                "vertices": g.order(),
                "edges": g.edge_count(),
                "file": path.display().to_string(),
            }));
        } else {
            say!(
                "{} vertices, {} edges written to {}",
                g.order(),
                g.edge_count(),
                path.display()
            );
        }
    }
    Ok(true)
}

fn cmd_acceptance(tier: TierArg, criterion: Option<usize>, as_json: bool, budget: &Budget) -> CliResult {
    let tier = match tier {
        TierArg::Quick => Tier::Quick,
        TierArg::Full => Tier::Full,
    };
    let outcomes =
        match criterion {
            Some(id) => vec![acceptance::run_criterion(id, tier, budget)
                .ok_or_else(|| Failure::Usage(format!("no criterion {id}")))?],
            None => {
                let mut all = Vec::new();
                for id in 1..=acceptance::CRITERIA.len() {
                    let o = acceptance::run_criterion(id, tier, budget).expect("known criterion");
                    if !as_json {
                        say!("{}", o.line());
                        for note in &o.notes {
                            say!("       {note}");
                        }
                    }
                    all.push(o);
                }
                all
            }
        };
    if as_json {
        print_json(&serde_json::to_value(&outcomes).expect("serializable"));
    } else if criterion.is_some() {
        for o in &outcomes {
            say!("{}", o.line());
            for note in &o.notes {
                say!("       {note}");
            }
        }
    } else {
        say!(
            "{}",
            acceptance::scoreboard(&outcomes).lines().last().unwrap_or_default()
        );
    }
    Ok(outcomes.iter().all(|o| o.status != Status::Fail))
}

fn run(cli: Cli) -> CliResult {
    let mut budget = Budget {
        workers: cli.workers,
        ..Budget::default()
    };
    if let Some(s) = cli.seed {
        budget.seed = s;
    }
    if let Some(m) = cli.mem_budget {
        budget.mem_bytes = m;
    }
    let j = cli.json;
    match cli.command {
        Command::Bounds { n } => cmd_bounds(n, j),
        Command::Construct { family, params, output } => cmd_construct(family, params, output.as_deref(), j, &budget),
        Command::Verify {
            kind,
            file,
            ambient,
            exhaustive,
        } => cmd_verify(kind, &file, ambient, exhaustive, j, &budget),
        Command::Solve {
            target,
            params,
            classify,
        } => cmd_solve(target, params, classify, j, &budget),
        Command::Export {
            family,
            params,
            file,
            output,
        } => cmd_export(family, params, file.as_deref(), output.as_deref(), j, &budget),
        Command::Acceptance { tier, criterion } => cmd_acceptance(tier, criterion, j, &budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
