//! `zdg`: build lattices from adjunct expressions, print their derived graphs,
//! enumerate small lattices and run the property suites.
//!
//! Exit codes: 0 success, 1 property failure, 2 usage or parse error,
//! 3 size cap exceeded. `ZDG_MAX_N` replaces the built-in size caps.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zdg_core::adjunct::{adjunct_decompose, eval_adjunct_expr, is_dismantlable, is_lower_dismantlable, parse_adjunct_expr};
use zdg_core::derived::{comparability_graph, cover_graph, incomparability_graph, zero_divisor_graph};
use zdg_core::enumerate::{all_lattices_capped, lower_dismantlable_capped, ALL_LATTICES_CAP, LOWER_DISMANTLABLE_CAP};
use zdg_core::graph::{parse_edge_list, to_dot, to_edge_list};
use zdg_core::tree::{is_realizable_capped, DEFAULT_REALIZE_CAP};
use zdg_core::verify::{run_suite, Limits, Suite};
use zdg_core::{Error, Lattice};

#[derive(Parser)]
#[command(name = "zdg", version, about = "Lattices built by adjuncts and their zero-divisor graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarise the lattice of an adjunct expression.
    Build(Input),
    /// Print a graph derived from the lattice of an adjunct expression.
    Graph {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "zdg")]
        kind: GraphKind,
        /// Emit Graphviz DOT instead of an edge list.
        #[arg(long)]
        dot: bool,
        /// Drop 0 and 1 before building cover, incomparability or comparability graphs.
        #[arg(long)]
        exclude_bounds: bool,
    },
    /// Count lattices up to isomorphism for every size up to MAX_N.
    Enumerate {
        max_n: usize,
        #[arg(long, value_enum, default_value = "all-lattices")]
        kind: EnumKind,
    },
    /// Run a property suite.
    Check {
        /// thm2, thm4, thm6, thm7, thm8, thm9, thm1-roundtrip, lemma1, lemma2, cor1 or all
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Find a rooted tree whose non-ancestor graph is the given graph.
    Realize {
        /// Edge-list file: comma-separated vertices, then one `u v` per line.
        file: PathBuf,
    },
}

#[derive(Args)]
struct Input {
    /// Adjunct expression such as "C(0,a,1) ]_0^1 C(b)".
    expr: Option<String>,
    /// Read the expression from a file instead.
    #[arg(long, conflicts_with = "expr")]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Zdg,
    Cover,
    Incomp,
    Comparability,
    Compare,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    AllLattices,
    LowerDismantlable,
}

enum Failure {
    Usage(String),
    Cap(String),
    Property,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeCapExceeded { .. } => Failure::Cap(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

fn cap_override() -> Result<Option<usize>, Failure> {
    match std::env::var("ZDG_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("ZDG_MAX_N must be a number, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<Lattice, Failure> {
    let text = match (&input.expr, &input.file) {
        (Some(e), _) => e.clone(),
        (None, Some(f)) => read(f)?,
        (None, None) => return Err(Failure::Usage("give an expression or --file".into())),
    };
    Ok(eval_adjunct_expr(&parse_adjunct_expr(text.trim())?)?)
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn build(input: &Input) -> Result<(), Failure> {
    let l = load(input)?;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    println!(
        "{}, {}, {}, lower-dismantlable: {}",
        plural(l.len(), "element"),
        plural(l.atoms().len(), "atom"),
        plural(l.dual_atoms().len(), "dual atom"),
        yes_no(is_lower_dismantlable(&l)?)
    );
    if is_dismantlable(&l)? {
        let e = adjunct_decompose(&l)?;
        let pairs: Vec<String> = e.pairs().iter().map(|(a, b)| format!("({a},{b})")).collect();
        println!("adjunct pairs: {}", if pairs.is_empty() { "none".into() } else { pairs.join(", ") });
        println!("representation: {e}");
    }
    Ok(())
}

fn graph(input: &Input, kind: GraphKind, dot: bool, exclude_bounds: bool) -> Result<(), Failure> {
    let l = load(input)?;
    let bounds = if exclude_bounds { vec![l.bottom(), l.top()] } else { Vec::new() };
    let zdg = zero_divisor_graph(&l);
    let g = match kind {
        GraphKind::Zdg => zdg.clone(),
        GraphKind::Cover => cover_graph(&l, &bounds),
        GraphKind::Incomp => incomparability_graph(&l, &bounds),
        GraphKind::Comparability => comparability_graph(&l, &bounds),
        GraphKind::Compare => {
            let inc = incomparability_graph(&l, &[l.bottom(), l.top()]);
            println!("equal: {}", zdg == inc);
            return Ok(());
        }
    };
    if dot {
        // zero-divisors are highlighted in graphs that contain other elements
        let highlight: BTreeSet<String> = zdg.vertices().map(str::to_owned).collect();
        let show = !matches!(kind, GraphKind::Zdg);
        print!("{}", to_dot(&g, show.then_some(&highlight)));
    } else {
        print!("{}", to_edge_list(&g));
    }
    Ok(())
}

fn enumerate(max_n: usize, kind: EnumKind) -> Result<(), Failure> {
    let cap = cap_override()?;
    let counts: Vec<usize> = match kind {
        EnumKind::AllLattices => {
            let cap = cap.unwrap_or(ALL_LATTICES_CAP);
            (1..=max_n)
                .map(|n| all_lattices_capped(n, cap).map(|v| v.len()))
                .collect::<Result<_, _>>()?
        }
        EnumKind::LowerDismantlable => {
            let all = lower_dismantlable_capped(max_n, cap.unwrap_or(LOWER_DISMANTLABLE_CAP))?;
            (1..=max_n).map(|n| all.iter().filter(|g| g.lattice.len() == n).count()).collect()
        }
    };
    for (n, c) in counts.iter().enumerate() {
        println!("n={}: {c}", n + 1);
    }
    Ok(())
}

fn check(suite: Suite, max_n: Option<usize>) -> Result<(), Failure> {
    let reports = run_suite(suite, Limits { max_n, cap: cap_override()? })?;
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Property)
    }
}

fn realize(file: &PathBuf) -> Result<(), Failure> {
    let g = parse_edge_list(&read(file)?)?;
    let cap = cap_override()?.unwrap_or(DEFAULT_REALIZE_CAP);
    match is_realizable_capped(&g, cap)? {
        Some(t) => print!("{}", t.to_text()),
        None => println!("not realizable"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build(input) => build(input),
        Command::Graph {
            input,
            kind,
            dot,
            exclude_bounds,
        } => graph(input, *kind, *dot, *exclude_bounds),
        Command::Enumerate { max_n, kind } => enumerate(*max_n, *kind),
        Command::Check { suite, max_n } => check(*suite, *max_n),
        Command::Realize { file } => realize(file),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
