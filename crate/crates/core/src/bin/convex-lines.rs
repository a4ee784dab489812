use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use convex_lines::construct::{ConstructionSpec, Options};
use convex_lines::io::{parse_family_file, serialize_family_file, FamilyFile};
use convex_lines::svg::{render_svg, Highlight, RenderOptions, Viewport};
use convex_lines::verify::{self, BoundsParams, Prune, Requirements};
use convex_lines::{Error, Rat, Side, SignVector};

/// Exact line arrangements: generate, verify and render families of lines.
#[derive(Parser)]
#[command(name = "convex-lines", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family and write it in the text format.
    Generate(GenerateArgs),
    /// Check a family against concurrency, cup, cap, convexity and unboundedness limits.
    Verify(VerifyArgs),
    /// Look for lines in convex position.
    Search(SearchArgs),
    /// Evaluate the lower and upper bound formulas.
    Bounds(BoundsArgs),
    /// Draw a family as SVG.
    Render(RenderArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// pencil, base_pq2, base_2q, recursive_pq, prop32_even, prop32_odd,
    /// thm12 (thm12_even / thm12_odd), figure10
    #[arg(long)]
    kind: String,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Number of lines (pencil only).
    #[arg(long)]
    count: Option<usize>,
    /// Multiplies every starting contraction radius (a rational literal).
    #[arg(long, default_value = "1")]
    epsilon_scale: Rat,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Family file, or - for standard input.
    file: PathBuf,
    /// Fail on l concurrent lines.
    #[arg(long)]
    l: Option<usize>,
    /// Same as --l.
    #[arg(long)]
    max_concurrency: Option<usize>,
    /// Fail on a (p+1)-cup.
    #[arg(long)]
    p: Option<usize>,
    /// Fail on a (q+1)-cap.
    #[arg(long)]
    q: Option<usize>,
    /// Fail on n lines in convex position.
    #[arg(long, value_name = "N")]
    no_convex: Option<usize>,
    /// Fail on a 4-cell unbounded to this side (repeatable).
    #[arg(long, value_name = "SIDE")]
    check_unbounded: Vec<Side>,
    #[arg(long, default_value = "off")]
    prune: Prune,
}

#[derive(Args)]
struct SearchArgs {
    file: PathBuf,
    /// Look for n lines in convex position; without it, report the largest such subset.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value = "off")]
    prune: Prune,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    l: usize,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// The constant of the upper bound (a rational literal, at least 1).
    #[arg(long, default_value = "1")]
    c: Rat,
}

#[derive(Args)]
struct RenderArgs {
    file: PathBuf,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    /// x0,y0,x1,y1
    #[arg(long, allow_hyphen_values = true)]
    viewport: Option<Viewport>,
    /// Sign vector of the cell to fill, e.g. +-+ in slope order.
    #[arg(long, conflicts_with = "highlight_lines")]
    highlight_signs: Option<String>,
    /// Comma-separated line indices whose common cell is filled.
    #[arg(long, value_delimiter = ',')]
    highlight_lines: Option<Vec<usize>>,
}

enum Failure {
    Usage(String),
    Property,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn read_input(path: &Path) -> Result<FamilyFile, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(e.to_string()))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    parse_family_file(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn generate(a: GenerateArgs) -> Result<(), Failure> {
    let spec = ConstructionSpec::from_parts(&a.kind, |key| match key {
        "p" => a.p,
        "q" => a.q,
        "l" => a.l,
        "n" => a.n,
        "k" => a.k,
        "count" => a.count,
        _ => None,
    })?;
    let opts = Options::new(a.epsilon_scale)?;
    let family = spec.build_with(&opts).map_err(|e| match e {
        Error::ConstructionFailed { .. } => {
            eprintln!("{e}");
            Failure::Property
        }
        e => Failure::Usage(e.to_string()),
    })?;
    let file = FamilyFile::from_spec(&spec, family);
    write_output(a.output.as_deref(), &serialize_family_file(&file))
}

fn verify_cmd(a: VerifyArgs) -> Result<(), Failure> {
    let file = read_input(&a.file)?;
    let l = match (a.l, a.max_concurrency) {
        (Some(x), Some(y)) if x != y => return Err(Failure::Usage("--l and --max-concurrency disagree".into())),
        (x, y) => x.or(y),
    };
    let req = Requirements { l, p: a.p, q: a.q, no_convex: a.no_convex, unbounded: a.check_unbounded, prune: a.prune };
    let report = verify::check(&file.family, &req);
    print!("{report}");
    if report.pass() { Ok(()) } else { Err(Failure::Property) }
}

fn search(a: SearchArgs) -> Result<(), Failure> {
    let file = read_input(&a.file)?;
    let f = &file.family;
    let join = |s: &[usize]| s.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    match a.n {
        Some(n) => {
            if n < 2 || n > f.len() {
                return Err(Failure::Usage(format!("--n must lie in 2..={}", f.len())));
            }
            match verify::exists_n_convex(f, n, a.prune) {
                Some(s) => {
                    println!("convex_{n}: lines {}", join(&s));
                    Err(Failure::Property)
                }
                None => {
                    println!("convex_{n}: none");
                    Ok(())
                }
            }
        }
        None => {
            let s = verify::largest_convex_subset(f, a.prune);
            println!("largest_convex: {} lines {}", s.len(), join(&s));
            Ok(())
        }
    }
}

fn bounds(a: BoundsArgs) -> Result<(), Failure> {
    let params = BoundsParams::new(a.c)?;
    println!("c: {}", params.c());
    if let Some(n) = a.n {
        if let Some(v) = verify::known_exact(a.l, n) {
            println!("exact: {v}");
        }
        if n >= 5 {
            println!("lower: {}", verify::lower_bound_value(a.l, n)?);
        }
        println!("upper: {}", verify::upper_bound_value(a.l, n, &params)?);
    }
    if let (Some(p), Some(q)) = (a.p, a.q) {
        println!("f_l: {}", verify::f_l_bound(a.l, p, q, &params)?);
    } else if a.n.is_none() {
        return Err(Failure::Usage("bounds needs --n, or --p with --q".into()));
    }
    Ok(())
}

fn render(a: RenderArgs) -> Result<(), Failure> {
    let file = read_input(&a.file)?;
    let highlight = match (a.highlight_signs, a.highlight_lines) {
        (Some(s), _) => {
            let signs = s
                .chars()
                .map(|ch| match ch {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    _ => Err(Failure::Usage(format!("sign vector may only contain + and -, got {ch:?}"))),
                })
                .collect::<Result<Vec<i8>, _>>()?;
            Some(Highlight::Cell(SignVector(signs)))
        }
        (None, Some(lines)) => Some(Highlight::Subset(lines)),
        (None, None) => None,
    };
    let opts = RenderOptions { viewport: a.viewport, highlight, ..RenderOptions::default() };
    let svg = render_svg(&file.family, &opts)?;
    write_output(a.output.as_deref(), &svg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Search(a) => search(a),
        Command::Bounds(a) => bounds(a),
        Command::Render(a) => render(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
