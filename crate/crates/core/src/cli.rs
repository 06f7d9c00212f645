//! The `treepat` command line. Every subcommand is a thin layer over the
//! library; [`run`] takes the argument list and output streams so it can be
//! driven from tests.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::classify::{
    incomparable_pairs, json_ints, wilf_classify, write_csv, write_json, WilfClass,
};
use crate::error::Error;
use crate::gentree::{comb_recurrence_coeffs, GenTreeTable};
use crate::gf::GfEngine;
use crate::matcher::{Matcher, Mode};
use crate::oeis::OeisClient;
use crate::oracle::{count_avoiders, sequence_brute};
use crate::pattern_set::{canonical_set, PatternSet};
use crate::perm::{count_avoiding_perms, perm_to_tree, tree_to_perm, Permutation};
use crate::ratfun::RationalGf;
use crate::tree::{enumerate_trees, Tree, TreeIndex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "treepat",
    version,
    about = "Pattern avoidance in full binary trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Bfile,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List n-leaf trees in canonical order, optionally only the avoiders.
    Enumerate {
        #[arg(long, short = 'n')]
        leaves: usize,
        /// Keep only trees avoiding these patterns.
        #[arg(long = "avoid")]
        avoid: Vec<String>,
        #[arg(long, default_value = "noncontiguous")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Avoidance generating function of a pattern set.
    Gf {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, default_value_t = 15)]
        terms: usize,
        /// Also look the sequence up in the OEIS.
        #[arg(long)]
        oeis: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Avoidance counts av(1), ..., av(terms) from the generating function.
    Sequence {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, default_value_t = 15)]
        terms: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Brute-force avoidance counts.
    Oracle {
        #[arg(long = "pattern", short = 'p', required = true)]
        patterns: Vec<String>,
        #[arg(long, short = 'n')]
        n: usize,
        /// Print counts for every size 1..=n instead of just n.
        #[arg(long)]
        up_to: bool,
        #[arg(long, default_value = "noncontiguous")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Group pattern sets into Wilf classes.
    Classify {
        /// Incomparable pairs of K1- and K2-leaf trees.
        #[arg(long, num_args = 2, value_names = ["K1", "K2"])]
        pairs: Option<Vec<usize>>,
        /// Every single k-leaf pattern.
        #[arg(long)]
        single: Option<usize>,
        /// An explicit set, patterns separated by ';'. Repeatable.
        #[arg(long = "set")]
        sets: Vec<String>,
        #[arg(long, default_value_t = 15)]
        terms: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Avoiders of the k-leaf left comb via the generating tree.
    Gentree {
        #[arg(long, short = 'k')]
        k: usize,
        #[arg(long, default_value_t = 15)]
        terms: usize,
        /// Also print the table of counts by label.
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Trees and 231-avoiding permutations.
    Perm {
        #[command(subcommand)]
        action: PermCommand,
    },
    /// Look a sequence up in the OEIS (bundled cache, then the network).
    Annotate {
        /// Terms, space or comma separated.
        #[arg(required = true, num_args = 1..)]
        terms: Vec<String>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct SetArgs {
    /// Tree literal like "((L L) L)" or index like t4_2. Repeatable.
    #[arg(long = "pattern", short = 'p', required = true)]
    pub patterns: Vec<String>,
    /// Keep patterns that contain other patterns of the set.
    #[arg(long)]
    pub no_minimize: bool,
}

#[derive(Subcommand, Debug)]
pub enum PermCommand {
    /// The 231-avoiding permutation of a tree.
    FromTree { tree: String },
    /// The tree of a 231-avoiding permutation.
    ToTree { perm: String },
    /// Permutations of length n avoiding every given pattern.
    Count {
        #[arg(long, short = 'n')]
        n: usize,
        #[arg(long = "avoid", required = true)]
        avoid: Vec<String>,
        #[arg(long)]
        up_to: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Compute(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Compute(e.into())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parse and execute a command line (the first item is the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_COMPUTE
        }
    }
}

/// A tree literal or a canonical index such as `t4_2`.
pub fn parse_pattern(s: &str) -> crate::error::Result<Tree> {
    let trimmed = s.trim();
    if trimmed.starts_with('(') || trimmed == "L" {
        Tree::parse(trimmed)
    } else {
        Tree::from_index(trimmed.parse::<TreeIndex>()?)
    }
}

fn patterns(raw: &[String]) -> std::result::Result<Vec<Tree>, Failure> {
    raw.iter()
        .map(|s| parse_pattern(s).map_err(|e| Failure::Usage(format!("bad pattern {s:?}: {e}"))))
        .collect()
}

fn pattern_set(raw: &[String], minimize: bool) -> std::result::Result<PatternSet, Failure> {
    Ok(canonical_set(patterns(raw)?, minimize)?)
}

fn compute_gf(set: &PatternSet, minimize: bool) -> RationalGf {
    if minimize {
        GfEngine::new().gf_set(set)
    } else {
        GfEngine::without_minimization().gf_set(set)
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Enumerate {
            leaves,
            avoid,
            mode,
            format,
        } => {
            let mut trees = enumerate_trees(leaves)?;
            let mut indexed: Vec<(usize, Tree)> = trees
                .drain(..)
                .enumerate()
                .map(|(i, t)| (i + 1, t))
                .collect();
            if !avoid.is_empty() {
                let m = Matcher::new(&patterns(&avoid)?)?;
                indexed.retain(|(_, t)| m.avoids(t, mode));
            }
            let label = |i: usize| TreeIndex::new(leaves, i as u128).to_string();
            match format {
                Format::Plain => {
                    for (i, t) in &indexed {
                        writeln!(out, "{}\t{t}", label(*i))?;
                    }
                }
                Format::Json => {
                    let rows: Vec<_> = indexed
                        .iter()
                        .map(|(i, t)| json!({"index": label(*i), "tree": t.render()}))
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&rows).map_err(Error::from)?
                    )?;
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(out);
                    w.write_record(["index", "tree"]).map_err(Error::from)?;
                    for (i, t) in &indexed {
                        w.write_record([label(*i), t.render()])
                            .map_err(Error::from)?;
                    }
                    w.flush()?;
                }
                Format::Bfile => return Err(unsupported("enumerate", format)),
            }
            Ok(())
        }
        Command::Gf {
            set,
            terms,
            oeis,
            format,
        } => {
            let minimize = !set.no_minimize;
            let ps = pattern_set(&set.patterns, minimize)?;
            let gf = compute_gf(&ps, minimize);
            let seq = gf.series(terms)?.split_off(1);
            let growth = gf.growth_rate().ok();
            let ids = if oeis {
                annotate(&seq, err)
            } else {
                Vec::new()
            };
            match format {
                Format::Plain => {
                    writeln!(out, "patterns: {ps}")?;
                    writeln!(out, "gf: {gf}")?;
                    writeln!(out, "sequence: {}", join(&seq, ","))?;
                    match growth {
                        Some(g) => writeln!(out, "growth rate: {g}")?,
                        None => writeln!(out, "growth rate: n/a")?,
                    }
                    if oeis {
                        writeln!(out, "oeis: {}", ids.join(" "))?;
                    }
                }
                Format::Json => {
                    let doc = json!({
                        "patterns": ps.literals(),
                        "gf": gf.to_json(),
                        "sequence": json_ints(&seq),
                        "growth_rate": growth,
                        "oeis": ids,
                    });
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&doc).map_err(Error::from)?
                    )?;
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(out);
                    w.write_record(["patterns", "gf_num", "gf_den", "terms", "growth_rate"])
                        .map_err(Error::from)?;
                    w.write_record([
                        ps.literals().join(","),
                        join(gf.num().coeffs(), " "),
                        join(gf.den().coeffs(), " "),
                        join(&seq, " "),
                        growth.map(|g| g.to_string()).unwrap_or_default(),
                    ])
                    .map_err(Error::from)?;
                    w.flush()?;
                }
                Format::Bfile => write_bfile(out, &seq)?,
            }
            Ok(())
        }
        Command::Sequence { set, terms, format } => {
            let minimize = !set.no_minimize;
            let ps = pattern_set(&set.patterns, minimize)?;
            let seq = compute_gf(&ps, minimize).series(terms)?.split_off(1);
            write_sequence(out, &seq, format)
        }
        Command::Oracle {
            patterns: raw,
            n,
            up_to,
            mode,
            format,
        } => {
            if n == 0 {
                return Err(Failure::Usage("n must be positive".into()));
            }
            let ps = pattern_set(&raw, true)?;
            if up_to {
                let seq: Vec<BigInt> = sequence_brute(n, &ps, mode)?
                    .into_iter()
                    .map(BigInt::from)
                    .collect();
                write_sequence(out, &seq, format)
            } else {
                let count = count_avoiders(n, &ps, mode)?;
                write_count(out, n, count, format)
            }
        }
        Command::Classify {
            pairs,
            single,
            sets,
            terms,
            format,
        } => {
            let mut all: Vec<PatternSet> = Vec::new();
            if let Some(p) = pairs {
                all.extend(incomparable_pairs(p[0], p[1])?);
            }
            if let Some(k) = single {
                all.extend(enumerate_trees(k)?.into_iter().map(PatternSet::single));
            }
            for s in &sets {
                let raw: Vec<String> = s.split(';').map(str::to_string).collect();
                all.push(pattern_set(&raw, true)?);
            }
            if all.is_empty() {
                return Err(Failure::Usage(
                    "nothing to classify: give --pairs, --single or --set".into(),
                ));
            }
            let classes = wilf_classify(&all, terms);
            match format {
                Format::Plain => write_classes(out, &classes)?,
                Format::Json => {
                    write_json(&classes, &mut *out)?;
                    writeln!(out)?;
                }
                Format::Csv => write_csv(&classes, out)?,
                Format::Bfile => return Err(unsupported("classify", format)),
            }
            Ok(())
        }
        Command::Gentree {
            k,
            terms,
            table,
            format,
        } => {
            if k < 3 {
                return Err(Failure::Usage(format!("k must be at least 3, got {k}")));
            }
            let tab = GenTreeTable::build(k, terms)?;
            let seq = tab.totals();
            let rec = comb_recurrence_coeffs(k)?;
            match format {
                Format::Plain => {
                    writeln!(out, "sequence: {}", join(&seq, ","))?;
                    writeln!(out, "recurrence: {}", recurrence_text(&rec))?;
                    if table {
                        for (n, row) in tab.rows().iter().enumerate() {
                            writeln!(out, "{}\t{}", n + 1, join(row, " "))?;
                        }
                    }
                }
                Format::Json => {
                    let mut doc = json!({
                        "k": k,
                        "sequence": json_ints(&seq),
                        "recurrence": json_ints(&rec),
                    });
                    if table {
                        let rows: Vec<_> = tab.rows().iter().map(|r| json_ints(r)).collect();
                        doc["table"] = json!(rows);
                    }
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&doc).map_err(Error::from)?
                    )?;
                }
                _ => write_sequence(out, &seq, format)?,
            }
            Ok(())
        }
        Command::Perm { action } => match action {
            PermCommand::FromTree { tree } => {
                let t = parse_pattern(&tree)
                    .map_err(|e| Failure::Usage(format!("bad tree {tree:?}: {e}")))?;
                writeln!(out, "{}", tree_to_perm(&t))?;
                Ok(())
            }
            PermCommand::ToTree { perm } => {
                let p: Permutation = perm.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
                writeln!(out, "{}", perm_to_tree(&p)?)?;
                Ok(())
            }
            PermCommand::Count {
                n,
                avoid,
                up_to,
                format,
            } => {
                let pats = avoid
                    .iter()
                    .map(|s| s.parse::<Permutation>())
                    .collect::<crate::error::Result<Vec<_>>>()
                    .map_err(|e| Failure::Usage(e.to_string()))?;
                if up_to {
                    let seq: Vec<BigInt> = (1..=n)
                        .map(|m| BigInt::from(count_avoiding_perms(m, &pats)))
                        .collect();
                    write_sequence(out, &seq, format)
                } else {
                    write_count(out, n, count_avoiding_perms(n, &pats), format)
                }
            }
        },
        Command::Annotate { terms, format } => {
            let mut seq = Vec::new();
            for part in terms.iter().flat_map(|t| t.split(',')) {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                seq.push(
                    part.parse::<BigInt>()
                        .map_err(|_| Failure::Usage(format!("not an integer: {part:?}")))?,
                );
            }
            let ids = annotate(&seq, err);
            match format {
                Format::Json => {
                    let doc = json!({"sequence": json_ints(&seq), "oeis": ids});
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&doc).map_err(Error::from)?
                    )?;
                }
                _ => {
                    for id in ids {
                        writeln!(out, "{id}")?;
                    }
                }
            }
            Ok(())
        }
    }
}

fn annotate(seq: &[BigInt], err: &mut dyn Write) -> Vec<String> {
    let (client, mut warnings) = OeisClient::from_env();
    let a = client.annotate(seq);
    warnings.extend(a.warnings);
    for w in warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    a.ids
}

fn unsupported(command: &str, format: Format) -> Failure {
    let name = format
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    Failure::Usage(format!("{command} does not support --format {name}"))
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn recurrence_text(coeffs: &[BigInt]) -> String {
    let mut s = String::from("a(n) =");
    for (i, c) in coeffs.iter().enumerate() {
        let term = format!("a(n-{})", i + 1);
        let mag = c.magnitude().to_string();
        let body = if mag == "1" {
            term
        } else {
            format!("{mag} {term}")
        };
        match (i, c.sign() == num_bigint::Sign::Minus) {
            (0, false) => s += &format!(" {body}"),
            (0, true) => s += &format!(" -{body}"),
            (_, false) => s += &format!(" + {body}"),
            (_, true) => s += &format!(" - {body}"),
        }
    }
    s
}

fn write_bfile(out: &mut dyn Write, seq: &[BigInt]) -> std::io::Result<()> {
    for (i, a) in seq.iter().enumerate() {
        writeln!(out, "{} {a}", i + 1)?;
    }
    Ok(())
}

fn write_sequence(out: &mut dyn Write, seq: &[BigInt], format: Format) -> Outcome {
    match format {
        Format::Plain => writeln!(out, "{}", join(seq, ","))?,
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&json_ints(seq)).map_err(Error::from)?
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "a"]).map_err(Error::from)?;
            for (i, a) in seq.iter().enumerate() {
                w.write_record([(i + 1).to_string(), a.to_string()])
                    .map_err(Error::from)?;
            }
            w.flush()?;
        }
        Format::Bfile => write_bfile(out, seq)?,
    }
    Ok(())
}

fn write_count(out: &mut dyn Write, n: usize, count: u64, format: Format) -> Outcome {
    match format {
        Format::Plain => writeln!(out, "{count}")?,
        Format::Json => writeln!(out, "{}", json!({"n": n, "count": count}))?,
        Format::Csv => writeln!(out, "n,count\n{n},{count}")?,
        Format::Bfile => writeln!(out, "{n} {count}")?,
    }
    Ok(())
}

fn write_classes(out: &mut dyn Write, classes: &[WilfClass]) -> std::io::Result<()> {
    for (i, c) in classes.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        writeln!(out, "Class {}: {}", c.id, c.gf)?;
        writeln!(out, "  {}", join(&c.sequence_prefix, ","))?;
        for m in &c.members {
            writeln!(out, "  {m}")?;
        }
    }
    Ok(())
}
