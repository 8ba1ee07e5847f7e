use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mulattice::document::{Built, DocumentKind, LatticeDocument};
use mulattice::suite::{self, Corpus, SuiteReport};
use mulattice::{enumerate, hasse};

mod render;

#[derive(Parser)]
#[command(
    name = "mulattice",
    version,
    about = "Essential, mu- and irreducible elements of finite lattices and quantales"
)]
struct Cli {
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-element report: essential, mu, irreducible, atom, with witnesses.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Use closed-form verdicts where the input kind has one.
        #[arg(long)]
        fast: bool,
        /// Compare closed-form verdicts against brute force; exit 3 on disagreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// Run the theorem suite over a corpus, or the worked examples.
    Verify(VerifyArgs),
    /// Hasse diagram in DOT format.
    Hasse {
        #[command(flatten)]
        input: Input,
        /// Output path (default: standard output).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Count lattices up to isomorphism, optionally writing each as a document.
    Enumerate {
        /// Largest size to enumerate.
        max_size: usize,
        /// Keep every labelling instead of one per isomorphism class.
        #[arg(long)]
        no_dedupe: bool,
        /// Directory to write one document per lattice into.
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Counts of mu, essential and irreducible ideals of Z_n, as CSV.
    ScanZn {
        /// Inclusive range such as 2..100.
        #[arg(value_parser = parse_range)]
        range: (u64, u64),
        /// Decide essential and mu from exponent vectors.
        #[arg(long)]
        fast: bool,
    },
    /// Look for a witness of a boundary phenomenon among small lattices.
    Search {
        /// One of: mu-not-essential-not-irreducible-nonmodular, muclosed-converse, pcmu-maximality.
        query: String,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        /// Write the outcome as JSON.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    /// Lattice document (JSON); `-` reads standard input.
    #[arg(conflicts_with_all = ["zn", "powerset", "chain"])]
    file: Option<PathBuf>,
    /// Ideals of Z_n.
    #[arg(long, conflicts_with_all = ["powerset", "chain"])]
    zn: Option<u64>,
    /// Subsets of {1..k}.
    #[arg(long, conflicts_with = "chain")]
    powerset: Option<usize>,
    /// Chain with k elements.
    #[arg(long)]
    chain: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Reproduce the worked examples instead of running the checks.
    #[arg(long)]
    paper_examples: bool,
    /// Z_n for n in an inclusive range such as 2..500.
    #[arg(long, value_parser = parse_range)]
    zn_range: Option<(u64, u64)>,
    /// Powersets of up to k points.
    #[arg(long)]
    powersets: Option<usize>,
    /// Alexandrov frames of all preorders on up to k points.
    #[arg(long)]
    preorders: Option<usize>,
    /// All lattices with up to n elements.
    #[arg(long)]
    enumerate: Option<usize>,
    /// Chains with up to k elements.
    #[arg(long)]
    chains: Option<usize>,
    /// The product fixtures (M3 x 2, N5 x 2).
    #[arg(long)]
    products: bool,
    /// Extra lattice documents.
    #[arg(long)]
    file: Vec<PathBuf>,
    /// Restrict to the named checks (repeatable).
    #[arg(long)]
    check: Vec<String>,
    /// Also write the report as JSON.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// List check names and exit.
    #[arg(long)]
    list: bool,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<mulattice::Error> for Failure {
    fn from(e: mulattice::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn io_error(path: &Path, e: io::Error) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

type CmdResult = Result<(), Failure>;

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected a range like 2..100, got {s:?}"))?;
    let a: u64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: u64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

impl Input {
    fn document(&self) -> Result<LatticeDocument, Failure> {
        if let Some(n) = self.zn {
            return Ok(LatticeDocument::new(DocumentKind::Zn { n }));
        }
        if let Some(points) = self.powerset {
            return Ok(LatticeDocument::new(DocumentKind::Powerset { points }));
        }
        if let Some(length) = self.chain {
            return Ok(LatticeDocument::new(DocumentKind::Chain { length }));
        }
        match &self.file {
            Some(path) => read_document(path),
            None => Err(Failure::Input(
                "no input: give a document path or one of --zn, --powerset, --chain".to_string(),
            )),
        }
    }

    fn build(&self) -> Result<Built, Failure> {
        Ok(self.document()?.build()?)
    }
}

fn read_document(path: &Path) -> Result<LatticeDocument, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| io_error(path, e))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| io_error(path, e))?
    };
    Ok(LatticeDocument::from_json(&text)?)
}

fn write_output(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_error(p, e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("standard output: {e}"))),
    }
}

fn analyze(input: &Input, fast: bool, cross_check: bool) -> CmdResult {
    let built = input.build()?;
    let report = render::analysis(&built, fast);
    print!("{}", report.text);
    if cross_check {
        let disagreements = render::cross_check(&built);
        if !disagreements.is_empty() {
            for d in &disagreements {
                eprintln!("{d}");
            }
            return Err(Failure::Verification(format!(
                "{} element(s) where the closed form disagrees with brute force",
                disagreements.len()
            )));
        }
        println!(
            "cross-check: {} closed-form verdicts agree",
            report.fast_available
        );
    }
    Ok(())
}

fn corpus(args: &VerifyArgs) -> Result<Corpus, Failure> {
    let explicit = args.zn_range.is_some()
        || args.powersets.is_some()
        || args.preorders.is_some()
        || args.enumerate.is_some()
        || args.chains.is_some()
        || args.products
        || !args.file.is_empty();
    if !explicit {
        return Ok(Corpus::default_corpus()?);
    }
    let mut c = Corpus::new();
    if let Some(k) = args.powersets {
        c.with_powersets(k)?;
    }
    if let Some((a, b)) = args.zn_range {
        c.with_zn_range(a, b)?;
    }
    if let Some(k) = args.preorders {
        c.with_preorders(k)?;
    }
    if let Some(n) = args.enumerate {
        c.with_enumerated(n)?;
    }
    if let Some(k) = args.chains {
        c.with_chains(k)?;
    }
    if args.products {
        c.with_products(&suite::fixture_products())?;
    }
    for path in &args.file {
        c.push(path.display().to_string(), read_document(path)?)?;
    }
    Ok(c)
}

fn verify(args: &VerifyArgs) -> CmdResult {
    if args.list {
        let names = if args.paper_examples {
            suite::example_names()
        } else {
            suite::check_names()
        };
        for name in names {
            println!("{name}");
        }
        return Ok(());
    }
    let report: SuiteReport = if args.paper_examples {
        suite::run_paper_examples()
    } else {
        suite::run_suite(&corpus(args)?, &args.check)?
    };
    print!("{}", report.summary());
    if let Some(path) = &args.output {
        let json = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
        fs::write(path, json).map_err(|e| io_error(path, e))?;
    }
    let failed = report.failures().count();
    if failed > 0 {
        return Err(Failure::Verification(format!("{failed} check(s) failed")));
    }
    Ok(())
}

fn hasse_cmd(input: &Input, output: Option<&Path>) -> CmdResult {
    let built = input.build()?;
    write_output(output, &hasse::to_dot(built.lattice()))
}

fn enumerate_cmd(max_size: usize, dedupe: bool, dir: Option<&Path>) -> CmdResult {
    let all = enumerate::enumerate_lattices(max_size, dedupe)?;
    if let Some(dir) = dir {
        fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    }
    println!("size,lattices,modular,distributive");
    for size in 1..=max_size {
        let of_size: Vec<_> = all.iter().filter(|l| l.len() == size).collect();
        let modular = of_size.iter().filter(|l| l.is_modular()).count();
        let distributive = of_size.iter().filter(|l| l.is_distributive()).count();
        println!("{size},{},{modular},{distributive}", of_size.len());
        if let Some(dir) = dir {
            for (i, l) in of_size.iter().enumerate() {
                let path = dir.join(format!("lattice-{size}-{i}.json"));
                let doc = LatticeDocument::explicit(l, None);
                fs::write(&path, doc.to_json()).map_err(|e| io_error(&path, e))?;
            }
        }
    }
    Ok(())
}

fn scan_zn((from, to): (u64, u64), fast: bool) -> CmdResult {
    let from = from.max(2);
    let rows = render::scan_rows(from, to, fast)?;
    println!("n,ideals,essential,mu,irreducible");
    for r in rows {
        println!(
            "{},{},{},{},{}",
            r.n, r.ideals, r.essential, r.mu, r.irreducible
        );
    }
    Ok(())
}

fn search(query: &str, max_size: usize, output: Option<&Path>) -> CmdResult {
    let outcome = suite::counterexample_search(query, max_size)?;
    match &outcome.witness {
        Some(w) => {
            let elements: Vec<String> = w
                .elements
                .iter()
                .map(|e| format!("{}={}", e.role, e.label))
                .collect();
            println!(
                "{query}: witness after {} lattice(s): {} ({})",
                outcome.lattices_scanned,
                elements.join(", "),
                w.detail
            );
            print!("{}", w.document.to_json());
        }
        None => println!(
            "{query}: no witness among {} lattice(s) of size <= {max_size}",
            outcome.lattices_scanned
        ),
    }
    if let Some(path) = output {
        let json = serde_json::to_string_pretty(&outcome).expect("outcome serializes") + "\n";
        fs::write(path, json).map_err(|e| io_error(path, e))?;
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Input(format!("--threads: {e}")))?;
    }
    match &cli.command {
        Command::Analyze {
            input,
            fast,
            cross_check,
        } => analyze(input, *fast, *cross_check),
        Command::Verify(args) => verify(args),
        Command::Hasse { input, output } => hasse_cmd(input, output.as_deref()),
        Command::Enumerate {
            max_size,
            no_dedupe,
            write,
        } => enumerate_cmd(*max_size, !no_dedupe, write.as_deref()),
        Command::ScanZn { range, fast } => scan_zn(*range, *fast),
        Command::Search {
            query,
            max_size,
            output,
        } => search(query, *max_size, output.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}
