//! Command-line front end: generation, counting, classification, mesh
//! compilation, bijections, don't-care analysis and the verification suites.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad patterns, violated
//! preconditions), 2 on usage errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use treepat::bijections::bits::{bits_from_string, bits_from_tree, bits_to_string, bits_to_tree, BitScheme};
use treepat::bijections::motzkin::{
    motzkin_catastrophes_from_tree, motzkin_catastrophes_to_tree, motzkin_from_tree_123,
    motzkin_left_factor_from_tree, motzkin_left_factor_to_tree, motzkin_to_tree_123,
    motzkin_two_colored_from_tree, motzkin_two_colored_to_tree, Flavor, MotzkinPath,
};
use treepat::bijections::partition::{partition_from_tree, partition_to_tree, Rgs, Side};
use treepat::bijections::wilf::{preset_configs, wilf_transform, TransformDir};
use treepat::counting::{classify_wilf, count_series, match_oeis, table_report, Engine};
use treepat::generate::{algorithm_s, AlgorithmH, GenStep};
use treepat::mesh::MeshPattern;
use treepat::pattern::TreePattern;
use treepat::tree::BinaryTree;
use treepat::verify::{run_suite, SUITES};

#[derive(Parser)]
#[command(name = "treepat", version, about = "Pattern-avoiding binary trees: generate, count, map, verify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate all avoiders of the given friendly patterns as a slide Gray code
    Generate(GenerateArgs),
    /// Count avoiders for n = 1..=N
    Count(CountArgs),
    /// Group all patterns of size K by their counting sequences
    Classify(ClassifyArgs),
    /// Compile a tree pattern to its mesh permutation pattern
    Mesh(MeshArgs),
    /// Apply one of the bijections, forward or inverse
    Biject(BijectArgs),
    /// Report which edges of a pattern can flip without changing the avoiders
    Dontcare(DontcareArgs),
    /// Run a named verification suite
    Verify(VerifyArgs),
    /// Reproduce the classification table for patterns of size K
    Table(TableArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TreeFormat {
    Preorder,
    Paren,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    /// greedy with history
    S,
    /// history-free
    H,
}

#[derive(Args)]
struct GenerateArgs {
    /// Patterns like 132:10 (repeatable; intersection of avoider sets)
    #[arg(long = "pattern")]
    patterns: Vec<String>,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "h")]
    algorithm: Algorithm,
    #[arg(long, value_enum, default_value = "preorder")]
    format: TreeFormat,
    /// Append the slide (vertex, direction, steps) to every line
    #[arg(long)]
    deltas: bool,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long = "pattern")]
    patterns: Vec<String>,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "brute")]
    engine: EngineArg,
    /// Also report matching embedded sequences
    #[arg(long)]
    oeis: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Brute,
    H,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    k: usize,
    #[arg(long = "n-max", default_value = "12")]
    n_max: usize,
}

#[derive(Args)]
struct MeshArgs {
    #[arg(long)]
    pattern: String,
    /// Drop the cell left of and above the largest value
    #[arg(long)]
    minus: bool,
    /// Also report the tameness test
    #[arg(long)]
    tame: bool,
    #[arg(long, value_enum, default_value = "preorder")]
    format: TreeFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    Bits132,
    Bits123,
    Bits213,
    Motzkin123,
    MotzkinLeftFactor,
    MotzkinCatastrophes,
    Motzkin2colored,
    PartitionLeft,
    PartitionRight,
    WilfSubtree,
    WilfSubtreeBits,
    WilfPathmove,
    WilfLmove1,
    WilfLmove2,
    WilfLmove3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Args)]
struct BijectArgs {
    #[arg(long, value_enum)]
    map: MapName,
    #[arg(long, value_enum, default_value = "forward")]
    direction: Direction,
    /// The object to map: a tree (forward) or the target object (inverse)
    #[arg(long)]
    input: String,
    /// Optional size check against the input
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct DontcareArgs {
    #[arg(long)]
    pattern: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    k: usize,
    #[arg(long = "n-max", default_value = "12")]
    n_max: usize,
    #[arg(long, value_enum, default_value = "preorder")]
    format: TreeFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn parse_patterns(strs: &[String]) -> treepat::Result<Vec<TreePattern>> {
    strs.iter().map(|s| TreePattern::parse(s)).collect()
}

fn render_tree(t: &BinaryTree, format: TreeFormat, delta: Option<&GenStep>) -> String {
    match format {
        TreeFormat::Preorder => {
            let mut line = t.to_string();
            if let Some(step) = delta {
                if let Some(op) = step.op {
                    line.push_str(&format!(" ({},{},{})", op.vertex, op.dir, op.steps));
                }
            }
            line
        }
        TreeFormat::Paren => t.to_paren(),
        TreeFormat::Json => {
            let mut obj = serde_json::json!({ "preorder": t.preorder().values() });
            if let Some(step) = delta {
                if let Some(op) = step.op {
                    obj["delta"] = serde_json::json!({
                        "vertex": op.vertex,
                        "dir": op.dir,
                        "steps": op.steps,
                    });
                }
            }
            obj.to_string()
        }
    }
}

fn run(cli: Cli) -> treepat::Result<()> {
    match cli.command {
        Command::Generate(args) => {
            let pats = parse_patterns(&args.patterns)?;
            let steps: Vec<GenStep> = match args.algorithm {
                Algorithm::S => algorithm_s(args.n, &pats)?,
                Algorithm::H => AlgorithmH::new(args.n, &pats)?.collect_all()?,
            };
            for step in &steps {
                let delta = if args.deltas { Some(step) } else { None };
                println!("{}", render_tree(&step.tree, args.format, delta));
            }
            Ok(())
        }
        Command::Count(args) => {
            let pats = parse_patterns(&args.patterns)?;
            let engine = match args.engine {
                EngineArg::Brute => Engine::Brute,
                EngineArg::H => Engine::AlgoH,
            };
            let series = count_series(&pats, args.n, engine)?;
            println!(
                "{}",
                series
                    .counts
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            if args.oeis {
                for m in match_oeis(&series) {
                    if m.flagged {
                        println!("match: {} (offset {})", m.id, m.offset);
                    } else {
                        println!("match: {}", m.id);
                    }
                }
            }
            Ok(())
        }
        Command::Classify(args) => {
            let c = classify_wilf(args.k, args.n_max)?;
            print!("{}", c.to_text());
            Ok(())
        }
        Command::Mesh(args) => {
            let pat = TreePattern::parse(&args.pattern)?;
            let mesh = if args.minus {
                MeshPattern::sigma_minus(&pat)
            } else {
                MeshPattern::from_tree_pattern(&pat)
            };
            match args.format {
                TreeFormat::Json => println!("{}", mesh.to_json()),
                _ => println!("{mesh}"),
            }
            if args.tame {
                match mesh.is_tame() {
                    Ok(true) => println!("tame: yes"),
                    Ok(false) => println!("tame: no (condition {})", mesh.tame_violation().unwrap()),
                    Err(e) => println!("tame: n/a ({e})"),
                }
            }
            Ok(())
        }
        Command::Biject(args) => {
            let out = apply_map(args.map, args.direction, &args.input, args.n)?;
            println!("{out}");
            Ok(())
        }
        Command::Dontcare(args) => {
            let pat = TreePattern::parse(&args.pattern)?;
            let dc = pat.dont_care_edges();
            let verts = dc
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            // display string with hyphens at the flippable positions
            let tau = pat.shape().preorder();
            let display: String = tau.values()[1..]
                .iter()
                .zip(pat.edge_string().chars())
                .map(|(&v, c)| if dc.contains(&(v as usize)) { '-' } else { c })
                .collect();
            println!("vertices: {{{verts}}}");
            println!("display: {display}");
            Ok(())
        }
        Command::Verify(args) => {
            if !SUITES.contains(&args.suite.as_str()) {
                return Err(treepat::Error::UnknownSuite(format!(
                    "{} (known: {})",
                    args.suite,
                    SUITES.join(", ")
                )));
            }
            let report = run_suite(&args.suite, args.n)?;
            println!("{}", report.summary());
            for f in &report.failures {
                println!("failure: {f}");
            }
            if report.passed() {
                Ok(())
            } else {
                Err(treepat::Error::Internal(format!(
                    "suite {} failed",
                    args.suite
                )))
            }
        }
        Command::Table(args) => {
            let rep = table_report(args.k, args.n_max)?;
            match args.format {
                TreeFormat::Json => println!("{}", rep.to_json()),
                _ => print!("{}", rep.to_text()),
            }
            Ok(())
        }
    }
}

fn check_n(n: Option<usize>, got: usize) -> treepat::Result<()> {
    match n {
        Some(want) if want != got => Err(treepat::Error::InvalidInput(format!(
            "input has size {got}, --n says {want}"
        ))),
        _ => Ok(()),
    }
}

fn apply_map(
    map: MapName,
    dir: Direction,
    input: &str,
    n: Option<usize>,
) -> treepat::Result<String> {
    let fwd = dir == Direction::Forward;
    let tree_in = || -> treepat::Result<BinaryTree> {
        let t = BinaryTree::parse(input)?;
        check_n(n, t.n())?;
        Ok(t)
    };
    match map {
        MapName::Bits132 | MapName::Bits123 | MapName::Bits213 => {
            let scheme = match map {
                MapName::Bits132 => BitScheme::S132,
                MapName::Bits123 => BitScheme::S123,
                _ => BitScheme::S213,
            };
            if fwd {
                Ok(bits_to_string(&bits_from_tree(&tree_in()?, scheme)?))
            } else {
                let bits = bits_from_string(input)?;
                check_n(n, bits.len() + 1)?;
                Ok(bits_to_tree(&bits, scheme).to_string())
            }
        }
        MapName::Motzkin123 => {
            if fwd {
                Ok(motzkin_from_tree_123(&tree_in()?)?.to_string())
            } else {
                let p = MotzkinPath::parse(input, Flavor::Plain)?;
                check_n(n, p.len())?;
                Ok(motzkin_to_tree_123(&p)?.to_string())
            }
        }
        MapName::MotzkinLeftFactor => {
            if fwd {
                Ok(motzkin_left_factor_from_tree(&tree_in()?)?.to_string())
            } else {
                let p = MotzkinPath::parse(input, Flavor::LeftFactor)?;
                check_n(n, p.len() + 1)?;
                Ok(motzkin_left_factor_to_tree(&p)?.to_string())
            }
        }
        MapName::MotzkinCatastrophes => {
            if fwd {
                Ok(motzkin_catastrophes_from_tree(&tree_in()?)?.to_string())
            } else {
                let p = MotzkinPath::parse(input, Flavor::Catastrophes)?;
                check_n(n, p.len())?;
                Ok(motzkin_catastrophes_to_tree(&p)?.to_string())
            }
        }
        MapName::Motzkin2colored => {
            if fwd {
                Ok(motzkin_two_colored_from_tree(&tree_in()?)?.to_string())
            } else {
                let p = MotzkinPath::parse(input, Flavor::TwoColored)?;
                check_n(n, p.len() + 1)?;
                Ok(motzkin_two_colored_to_tree(&p)?.to_string())
            }
        }
        MapName::PartitionLeft | MapName::PartitionRight => {
            let side = if map == MapName::PartitionLeft {
                Side::Left
            } else {
                Side::Right
            };
            if fwd {
                Ok(partition_from_tree(&tree_in()?, side).to_string())
            } else {
                let x = Rgs::parse(input)?;
                check_n(n, x.len())?;
                Ok(partition_to_tree(&x, side)?.to_string())
            }
        }
        MapName::WilfSubtree
        | MapName::WilfSubtreeBits
        | MapName::WilfPathmove
        | MapName::WilfLmove1
        | MapName::WilfLmove2
        | MapName::WilfLmove3 => {
            let key = match map {
                MapName::WilfSubtree => "subtree",
                MapName::WilfSubtreeBits => "subtree-bits",
                MapName::WilfPathmove => "pathmove",
                MapName::WilfLmove1 => "lmove1",
                MapName::WilfLmove2 => "lmove2",
                _ => "lmove3",
            };
            let cfg = preset_configs()
                .into_iter()
                .find(|(name, _)| *name == key)
                .map(|(_, c)| c)
                .expect("preset exists");
            let tdir = if fwd {
                TransformDir::Forward
            } else {
                TransformDir::Inverse
            };
            Ok(wilf_transform(&tree_in()?, &cfg, tdir)?.to_string())
        }
    }
}
