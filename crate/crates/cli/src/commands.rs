use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pratt_core::analysis::{
    chain_union, classify, continuum_witness, dominated_classes, infinite_crossword, strongly_indecomposable,
    UnionRoute,
};
use pratt_core::constructions::{
    antichain_family, coordinate_family, cx_encode, cx_evaluate, cx_separate, cx_stratum, grid_chains, omega_infty,
    order_comonoid, sunflower_extract, CxParams, CxPoint, Direction, Flavor, ProductUpsets,
};
use pratt_core::crossword::validate;
use pratt_core::lattice::{is_free_family, Freeness};
use pratt_core::{
    close, is_comonoid, solve_diagonal, ComonoidCheck, Crossword, Error, Family, GroundSet, Preorder, Rule,
    SolveOutcome, Word, DEFAULT_BUDGET,
};

use crate::error::{CliError, CliResult};
use crate::format::{self, Chains};
use crate::{EXIT_BUDGET, EXIT_NEGATIVE, EXIT_OK};

#[derive(Debug, Parser)]
#[command(name = "pratt", version, about = "Finite Pratt comonoids: crossword diagonals, closures and constructions")]
pub(crate) struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Budget {
    /// Search nodes allowed per target diagonal
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a built-in family or pair of chains
    Gen {
        /// Write to this file instead of standard output
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
        #[command(subcommand)]
        what: Construction,
    },
    /// Decide whether a family is a Pratt comonoid
    Check {
        file: PathBuf,
        #[command(flatten)]
        budget: Budget,
        /// Write the counterexample crossword to this file
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Compute the smallest Pratt comonoid containing a family
    Close {
        file: PathBuf,
        #[command(flatten)]
        budget: Budget,
        /// Annotate each word with the rule that produced it
        #[arg(long)]
        trace: bool,
        /// Write the closure to this file instead of standard output
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search for a crossword with a given diagonal
    Solve {
        file: PathBuf,
        /// Target diagonal as a bitstring
        target: String,
        #[command(flatten)]
        budget: Budget,
        /// Write the crossword found to this file
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Report T1, discreteness and complement closure
    Classify { file: PathBuf },
    /// Strongly indecomposable elements and domination
    Analyze {
        file: PathBuf,
        /// Zero of the semilattice, as a bitstring (default: the empty word)
        #[arg(long)]
        base: Option<String>,
    },
    /// Chain constructions on a descending and an ascending chain
    Chains {
        #[arg(value_enum)]
        mode: ChainMode,
        file: PathBuf,
        /// Write the crossword produced to this file
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Extract a sunflower from a tuples file
    Sunflower {
        file: PathBuf,
        /// Number of petals required
        #[arg(short, long, default_value_t = 2)]
        threshold: usize,
    },
    /// Queries on the finite counterexample evaluator
    Cx {
        #[command(flatten)]
        params: CxArgs,
        #[command(subcommand)]
        query: CxQuery,
    },
    /// Look for a join of members above a meet of other members
    Freeness { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum Construction {
    /// Down-sets of the chain 0 < .. < n-1
    DownSets { n: usize },
    /// Up-sets of the chain 0 < .. < n-1
    UpSets { n: usize },
    /// Down-sets together with up-sets of the chain
    DownUp { n: usize },
    /// All subsets of n points
    PowerSet { n: usize },
    /// The chain 0 < .. < n-1 < ∞ with every down-set but {0..n-1}
    Omega { n: usize },
    /// The coordinate words e_i on the subsets of {0..m-1}
    Coordinate {
        m: usize,
        /// Add the complement of each e_i
        #[arg(long)]
        complements: bool,
    },
    /// Words e_n = {a | n ∈ S_a} for an antichain of sets S_a, written "0,1;1,2"
    Antichain { members: String },
    /// Up-sets (or down-sets) of a product of chains with the given sizes, written "2,3"
    Product {
        sizes: String,
        #[arg(long)]
        down: bool,
    },
    /// Row and column chains of an r x c grid
    Grid { rows: usize, cols: usize },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ChainMode {
    /// Union of the meets x_n ∧ y_n with a witness crossword
    Union,
    /// Index sequences and pairwise independent words above their union
    Continuum,
    /// Crossword whose rows and columns are chain members
    Crossword,
}

#[derive(Debug, Args)]
struct CxArgs {
    /// Pairs (n, γ) per point
    #[arg(long, default_value_t = 2)]
    prefix_len: usize,
    /// Generators u_n have n below this bound
    #[arg(long, default_value_t = 64)]
    n_bound: usize,
    /// Strata γ range below this bound
    #[arg(long, default_value_t = 8)]
    gamma_max: usize,
    /// Free bits per point
    #[arg(long, default_value_t = 2)]
    island_bits: usize,
}

/// Points are written `n:γ,n:γ/bits`, for example `3:1,5:0/01`.
#[derive(Debug, Subcommand)]
enum CxQuery {
    /// Encoding of a point as a bitstring
    Encode { point: String },
    /// Membership of a point in the generator w_{n,γ}
    Eval { n: usize, gamma: usize, point: String },
    /// Whether every γ in the point is below beta
    Stratum { beta: usize, point: String },
    /// A generator containing the first point but not the second
    Separate { first: String, second: String },
}

#[derive(Debug, Default)]
pub(crate) struct Report {
    pub out: String,
    pub err: String,
}

impl Report {
    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn rows(&mut self, c: &Crossword) {
        for r in c.rows() {
            self.line(r.to_bits());
        }
    }
}

fn load(path: &Path, report: &mut Report) -> CliResult<Family> {
    let loaded = format::load_structure(path)?;
    for w in &loaded.warnings {
        let _ = writeln!(report.err, "warning: {w}");
    }
    Ok(loaded.family)
}

fn parse_word(text: &str, size: usize, what: &str) -> CliResult<Word> {
    let word = if text == "-" { Some(Word::empty(0)) } else { Word::parse_bits(text) };
    match word {
        Some(w) if w.len() == size => Ok(w),
        Some(w) => Err(CliError::Usage(format!("{what} has length {}, expected {size}", w.len()))),
        None => Err(CliError::Usage(format!("{what} `{text}` is not a bitstring"))),
    }
}

fn parse_list(text: &str, what: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| CliError::Usage(format!("invalid {what} entry `{s}`"))))
        .collect()
}

fn emit_witness(path: Option<&Path>, c: &Crossword) -> CliResult<()> {
    match path {
        Some(p) => format::write(p, &format::write_crossword(c)),
        None => Ok(()),
    }
}

fn word_labels(ground: &GroundSet, w: &Word) -> String {
    let names: Vec<String> = w.iter().map(|a| ground.label(a)).collect();
    format!("{{{}}}", names.join(", "))
}

pub(crate) fn execute(cli: Cli, report: &mut Report) -> CliResult<u8> {
    match cli.command {
        Command::Gen { output, what } => gen(what, output.as_deref(), report),
        Command::Check { file, budget, witness } => check(&file, budget.budget, witness.as_deref(), report),
        Command::Close { file, budget, trace, output } => {
            close_cmd(&file, budget.budget, trace, output.as_deref(), report)
        }
        Command::Solve { file, target, budget, witness } => {
            solve(&file, &target, budget.budget, witness.as_deref(), report)
        }
        Command::Classify { file } => classify_cmd(&file, report),
        Command::Analyze { file, base } => analyze(&file, base.as_deref(), report),
        Command::Chains { mode, file, witness } => chains(mode, &file, witness.as_deref(), report),
        Command::Sunflower { file, threshold } => sunflower(&file, threshold, report),
        Command::Cx { params, query } => cx(&params, query, report),
        Command::Freeness { file } => freeness(&file, report),
    }
}

fn gen(what: Construction, output: Option<&Path>, report: &mut Report) -> CliResult<u8> {
    let chain_family = |n: usize, d: Direction| order_comonoid(&Preorder::chain(n), d);
    let text = match what {
        Construction::DownSets { n } => format::write_structure(&chain_family(n, Direction::Down)?),
        Construction::UpSets { n } => format::write_structure(&chain_family(n, Direction::Up)?),
        Construction::DownUp { n } => {
            let down = chain_family(n, Direction::Down)?;
            format::write_structure(&down.with(chain_family(n, Direction::Up)?.words().iter().cloned())?)
        }
        Construction::PowerSet { n } => format::write_structure(&Family::power_set(n)?),
        Construction::Omega { n } => format::write_structure(&omega_infty(n)?),
        Construction::Coordinate { m, complements } => {
            let flavor = if complements { Flavor::WithComplements } else { Flavor::EOnly };
            format::write_structure(&coordinate_family(m, flavor)?)
        }
        Construction::Antichain { members } => {
            let sets = members
                .split(';')
                .map(|s| parse_list(s, "antichain member"))
                .collect::<CliResult<Vec<_>>>()?;
            format::write_structure(&antichain_family(&sets)?)
        }
        Construction::Product { sizes, down } => {
            let factors: Vec<Preorder> = parse_list(&sizes, "chain size")?.into_iter().map(Preorder::chain).collect();
            let product = ProductUpsets::new(&factors)?;
            let direction = if down { Direction::Down } else { Direction::Up };
            format::write_structure(&order_comonoid(product.order(), direction)?)
        }
        Construction::Grid { rows, cols } => {
            let g = grid_chains(rows, cols)?;
            format::write_chains(&Chains { ground: g.ground(), xs: g.xs.clone(), ys: g.ys.clone() })
        }
    };
    match output {
        Some(p) => {
            format::write(p, &text)?;
            report.line(format!("wrote {}", p.display()));
        }
        None => report.out.push_str(&text),
    }
    Ok(EXIT_OK)
}

fn check(file: &Path, budget: u64, witness: Option<&Path>, report: &mut Report) -> CliResult<u8> {
    let w = load(file, report)?;
    report.line(format!("family: {} words over {} points", w.len(), w.size()));
    match is_comonoid(&w, budget)? {
        ComonoidCheck::Ok => {
            report.line("COMONOID");
            Ok(EXIT_OK)
        }
        ComonoidCheck::MissingBound(b) => {
            report.line("NOT A COMONOID");
            report.line(format!("missing bound {b}"));
            Ok(EXIT_NEGATIVE)
        }
        ComonoidCheck::Counterexample(c) => {
            report.line("NOT A COMONOID");
            report.line(format!("diagonal {} is not a member", c.diagonal()));
            report.line("crossword:");
            report.rows(&c);
            emit_witness(witness, &c)?;
            Ok(EXIT_NEGATIVE)
        }
        ComonoidCheck::BudgetExceeded => {
            report.line(format!("UNDECIDED: budget of {budget} nodes exceeded"));
            Ok(EXIT_BUDGET)
        }
    }
}

fn rule_text(rule: &Rule) -> String {
    match rule {
        Rule::Seed | Rule::Bound => rule.name().to_string(),
        Rule::DisjointUnion(x, y) | Rule::Meet(x, y) | Rule::Join(x, y) => format!("{} {x} {y}", rule.name()),
        Rule::Diagonal(c) => {
            let rows: Vec<String> = c.rows().iter().map(Word::to_bits).collect();
            format!("{} {}", rule.name(), rows.join(" "))
        }
    }
}

fn close_cmd(file: &Path, budget: u64, trace: bool, output: Option<&Path>, report: &mut Report) -> CliResult<u8> {
    let seed = load(file, report)?;
    let c = close(&seed, budget)?;
    let status = if c.certified { "certified" } else { "not certified, budget exceeded" };
    let mut text = format!(
        "# closure of {} seed words: {} words after {} rounds, {status}\n",
        seed.len(),
        c.family.len(),
        c.rounds
    );
    let body = format::write_structure(&c.family);
    if trace {
        for line in body.lines() {
            let word = Word::parse_bits(line).filter(|w| w.len() == c.family.size());
            match word.and_then(|w| c.trace.iter().find(|e| e.word == w)) {
                Some(e) => {
                    let _ = writeln!(text, "{line}  # round {}: {}", e.round, rule_text(&e.rule));
                }
                None => {
                    text.push_str(line);
                    text.push('\n');
                }
            }
        }
    } else {
        text.push_str(&body);
    }
    match output {
        Some(p) => {
            format::write(p, &text)?;
            report.line(text.lines().next().unwrap_or_default().trim_start_matches("# "));
        }
        None => report.out.push_str(&text),
    }
    Ok(if c.certified { EXIT_OK } else { EXIT_BUDGET })
}

fn solve(file: &Path, target: &str, budget: u64, witness: Option<&Path>, report: &mut Report) -> CliResult<u8> {
    let w = load(file, report)?;
    let z = parse_word(target, w.size(), "target")?;
    match solve_diagonal(&w, &z, budget)? {
        SolveOutcome::Found(c) => {
            report.line(format!("FOUND diagonal {z}"));
            report.rows(&c);
            emit_witness(witness, &c)?;
            Ok(EXIT_OK)
        }
        SolveOutcome::Unsat => {
            report.line(format!("UNSAT (exhaustive): no crossword has diagonal {z}"));
            Ok(EXIT_NEGATIVE)
        }
        SolveOutcome::BudgetExceeded => {
            report.line(format!("UNDECIDED: budget of {budget} nodes exceeded"));
            Ok(EXIT_BUDGET)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify_cmd(file: &Path, report: &mut Report) -> CliResult<u8> {
    let w = load(file, report)?;
    let c = classify(&w);
    let g = w.ground();
    report.line(format!("points {}", w.size()));
    report.line(format!("words {}", w.len()));
    match c.t1_failure {
        None => report.line("t1 yes"),
        Some((a, b)) => report.line(format!("t1 no: no member contains {} but not {}", g.label(a), g.label(b))),
    }
    report.line(format!("discrete {}", yes_no(c.discrete)));
    report.line(format!("complement-closed {}", yes_no(c.complement_closed)));
    Ok(EXIT_OK)
}

fn analyze(file: &Path, base: Option<&str>, report: &mut Report) -> CliResult<u8> {
    let w = load(file, report)?;
    let base = match base {
        Some(b) => parse_word(b, w.size(), "base")?,
        None => Word::empty(w.size()),
    };
    let si = strongly_indecomposable(&w, &base)?;
    report.line(format!("base {base}"));
    report.line(format!("strongly indecomposable {}", si.elements.len()));
    for (i, class) in si.classes.iter().enumerate() {
        let words: Vec<String> = class.iter().map(Word::to_bits).collect();
        report.line(format!("class {i}: {}", words.join(" ")));
    }
    if base.is_empty() {
        let g = w.ground();
        for a in 0..w.size() {
            let d = dominated_classes(a, &w)?;
            let parts: Vec<String> =
                d.classes.iter().map(|c| format!("{} (meet {})", c.members.len(), word_labels(g, &c.meet))).collect();
            report.line(format!("element {} dominates {}", g.label(a), parts.join(", ")));
        }
    }
    Ok(EXIT_OK)
}

fn chains(mode: ChainMode, file: &Path, witness: Option<&Path>, report: &mut Report) -> CliResult<u8> {
    let c = format::parse_chains(&format::read(file)?, &file.display().to_string())?;
    match mode {
        ChainMode::Union => {
            let u = chain_union(&c.xs, &c.ys)?;
            let route = match u.route {
                UnionRoute::NearDisjoint => "near-disjoint",
                UnionRoute::Dual => "dual",
            };
            report.line(format!("union {}", u.union));
            report.line(format!("route {route}"));
            report.line("crossword:");
            report.rows(&u.witness);
            emit_witness(witness, &u.witness)?;
        }
        ChainMode::Continuum => {
            let cw = continuum_witness(&c.xs, &c.ys)?;
            let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            report.line(format!("m {}", list(&cw.m)));
            report.line(format!("n {}", list(&cw.n)));
            report.line(format!("z {}", cw.z));
            for (i, zi) in cw.zs.iter().enumerate() {
                report.line(format!("z{i} {zi}"));
            }
        }
        ChainMode::Crossword => {
            let cw = infinite_crossword(&c.xs, &c.ys)?;
            let members = Family::canonicalize(c.ground.clone(), c.xs.iter().chain(&c.ys).cloned())?;
            let v = validate(&cw, &members)?;
            let mut seen: Vec<Word> = cw.rows().iter().cloned().chain(cw.cols()).collect();
            seen.sort_unstable();
            seen.dedup();
            report.line(format!("rows and columns in the chains {}", yes_no(v.is_crossword())));
            report.line(format!("distinct rows and columns {}", seen.len()));
            report.line(format!("diagonal {}", cw.diagonal()));
            report.line("crossword:");
            report.rows(&cw);
            emit_witness(witness, &cw)?;
        }
    }
    Ok(EXIT_OK)
}

fn sunflower(file: &Path, threshold: usize, report: &mut Report) -> CliResult<u8> {
    let tuples = format::parse_tuples(&format::read(file)?, &file.display().to_string())?;
    match sunflower_extract(&tuples, threshold) {
        Ok(s) => {
            let join = |v: &[String]| v.join(" ");
            report.line(format!("split {}", s.split));
            report.line(format!("perm {}", s.perm.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")));
            report.line(format!("core {}", join(&s.core)));
            for (k, tail) in s.picked.iter().zip(&s.tails) {
                report.line(format!("tuple {k} tail {}", join(tail)));
            }
            Ok(EXIT_OK)
        }
        Err(Error::NoSunflower { threshold }) => {
            report.line(format!("NO SUNFLOWER with {threshold} petals"));
            Ok(EXIT_NEGATIVE)
        }
        Err(e) => Err(e.into()),
    }
}

fn parse_point(text: &str) -> CliResult<CxPoint> {
    let bad = |why: &str| CliError::Usage(format!("point `{text}`: {why}"));
    let (pairs, bits) = text.split_once('/').ok_or_else(|| bad("expected `n:γ,../bits`"))?;
    let aprime = pairs
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|p| {
            let (n, g) = p.split_once(':').ok_or_else(|| bad("pairs are written n:γ"))?;
            Ok((n.parse().map_err(|_| bad("invalid n"))?, g.parse().map_err(|_| bad("invalid γ"))?))
        })
        .collect::<CliResult<Vec<(usize, usize)>>>()?;
    let adoubleprime = bits
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(bad("bits must be `0` or `1`")),
        })
        .collect::<CliResult<Vec<bool>>>()?;
    Ok(CxPoint::new(aprime, adoubleprime))
}

fn cx(args: &CxArgs, query: CxQuery, report: &mut Report) -> CliResult<u8> {
    let p = CxParams::new(args.prefix_len, args.n_bound, args.gamma_max, args.island_bits)?;
    match query {
        CxQuery::Encode { point } => {
            let bits: String = cx_encode(&p, &parse_point(&point)?)?.iter().map(|&b| if b { '1' } else { '0' }).collect();
            report.line(bits);
        }
        CxQuery::Eval { n, gamma, point } => {
            report.line(if cx_evaluate(&p, n, gamma, &parse_point(&point)?)? { "1" } else { "0" });
        }
        CxQuery::Stratum { beta, point } => {
            report.line(yes_no(cx_stratum(&p, &parse_point(&point)?, beta)?));
        }
        CxQuery::Separate { first, second } => {
            match cx_separate(&p, &parse_point(&first)?, &parse_point(&second)?) {
                Ok(s) => {
                    report.line(format!("generator n={} beta={}", s.n, s.beta));
                    report.line(format!("first differing bit {}", s.bit));
                    report.line(format!("strata {} {}", s.strata.0, s.strata.1));
                }
                Err(Error::IdenticalPoints) => {
                    report.line("IDENTICAL POINTS: no generator separates them");
                    return Ok(EXIT_NEGATIVE);
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(EXIT_OK)
}

fn freeness(file: &Path, report: &mut Report) -> CliResult<u8> {
    let w = load(file, report)?;
    match is_free_family(&w)? {
        Freeness::Free => {
            report.line("FREE");
            Ok(EXIT_OK)
        }
        Freeness::Relation(r) => {
            let words = |idx: &[usize]| idx.iter().map(|&i| w.words()[i].to_bits()).collect::<Vec<_>>().join(" ");
            report.line("NOT FREE");
            report.line(format!("join of {}", words(&r.joinands)));
            report.line(format!("contains meet of {}", words(&r.meetands)));
            Ok(EXIT_NEGATIVE)
        }
    }
}
