//! `numcurve`: invariants, duplications and corpus checks for numerical semigroups.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use numcurve::corpus::{self, Bound, CorpusSpec};
use numcurve::homogeneity::{is_homogeneous_ideal, is_homogeneous_semigroup};
use numcurve::report::{dup_report, homtype_report, info_report};
use numcurve::search::{search, Predicate};
use numcurve::semigroup::parse_integer_list;
use numcurve::validate::{validate_semigroups, ExecMode};
use numcurve::{DuplicationInput, Error, NumericalSemigroup, SemigroupIdeal};

use output::{Format, HomogReport};

const EXIT_STRICT: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DISAGREEMENT: u8 = 3;

#[derive(Parser)]
#[command(name = "numcurve", version, about = "Numerical semigroups, ideals and numerical duplication")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and tangent-cone predicates of a semigroup (and an ideal).
    Info {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build S ⋈^b E and evaluate every duplication theorem from both sides.
    Dup {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sweep a corpus and cross-check every theorem.
    Validate {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Stream the corpus instances that satisfy a named predicate.
    Search {
        /// Predicate name, e.g. mpure-and-not-symmetric or homtype-candidate.
        #[arg(long)]
        predicate: String,
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Homogeneity of a semigroup, an ideal, or a duplication.
    Homog {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Principal-ideal duplications S ⋈^b ({s} + S) with 2s + b in Ap_m(S).
    HomtypeSearch {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct InstanceArgs {
    /// Semigroup generators, e.g. 6,7,10.
    #[arg(long)]
    sgp: String,
    /// Ideal generators relative to the semigroup, e.g. 5,8.
    #[arg(long)]
    ideal: Option<String>,
    /// Odd element of the semigroup used as the duplication shift.
    #[arg(long)]
    b: Option<i64>,
    /// Exit with status 1 when a reported predicate is false.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct CorpusArgs {
    /// Restrict the corpus to this single semigroup.
    #[arg(long)]
    sgp: Option<String>,
    #[arg(long, default_value_t = 8)]
    max_genus: usize,
    #[arg(long)]
    max_mult: Option<i64>,
    /// Largest number of minimal generators of an enumerated ideal.
    #[arg(long, default_value_t = 2)]
    ideal_gens: usize,
    /// Largest min(E) (default f(S) + m).
    #[arg(long)]
    ideal_min: Option<i64>,
    /// Largest b (default f(S) + 2m).
    #[arg(long)]
    b_bound: Option<i64>,
    /// Leave out canonical ideals with more generators than the budget.
    #[arg(long)]
    no_canonical: bool,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
#[group(multiple = false)]
struct OutputArgs {
    /// One pretty-printed JSON document.
    #[arg(long)]
    json: bool,
    /// One compact JSON document per line.
    #[arg(long)]
    jsonl: bool,
    /// CSV rows.
    #[arg(long)]
    csv: bool,
}

impl OutputArgs {
    fn format(&self, default: Format) -> Format {
        if self.json {
            Format::Json
        } else if self.jsonl {
            Format::Jsonl
        } else if self.csv {
            Format::Csv
        } else {
            default
        }
    }
}

impl CorpusArgs {
    fn spec(&self) -> CorpusSpec {
        CorpusSpec {
            max_genus: self.max_genus,
            max_multiplicity: self.max_mult,
            ideal_gen_budget: self.ideal_gens,
            ideal_min_bound: self
                .ideal_min
                .map_or(Bound::FrobeniusPlusMultiples(1), Bound::Absolute),
            b_bound: self
                .b_bound
                .map_or(Bound::FrobeniusPlusMultiples(2), Bound::Absolute),
            include_canonical_ideals: !self.no_canonical,
        }
    }

    fn semigroups(&self) -> Result<Vec<NumericalSemigroup>, Error> {
        match &self.sgp {
            Some(g) => Ok(vec![NumericalSemigroup::parse(g)?]),
            None => Ok(corpus::corpus_semigroups(&self.spec())),
        }
    }

    fn mode(&self) -> ExecMode {
        if self.sequential {
            ExecMode::Sequential
        } else {
            ExecMode::default()
        }
    }
}

struct Parsed {
    semigroup: NumericalSemigroup,
    ideal: Option<SemigroupIdeal>,
    input: Option<DuplicationInput>,
}

impl InstanceArgs {
    fn parse(&self, need_ideal: bool, need_b: bool) -> Result<Parsed, Error> {
        let semigroup = NumericalSemigroup::parse(&self.sgp)?;
        let ideal = match &self.ideal {
            Some(raw) => Some(SemigroupIdeal::from_generators(
                &semigroup,
                &parse_integer_list(raw)?,
            )?),
            None if need_ideal => return Err(missing("--ideal")),
            None => None,
        };
        let input = match (self.b, &ideal) {
            (Some(b), Some(e)) => Some(DuplicationInput::new(e.clone(), b)?),
            (Some(_), None) => return Err(missing("--ideal")),
            (None, _) if need_b => return Err(missing("--b")),
            (None, _) => None,
        };
        Ok(Parsed {
            semigroup,
            ideal,
            input,
        })
    }
}

fn missing(flag: &str) -> Error {
    Error::Parse {
        input: String::new(),
        reason: format!("{flag} is required"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn strict_code(strict: bool, holds: bool) -> u8 {
    if strict && !holds {
        EXIT_STRICT
    } else {
        0
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Info { instance, out } => {
            let p = instance.parse(false, false)?;
            let doc = info_report(&p.semigroup, p.ideal.as_ref());
            output::report(&doc, out.format(Format::Table));
            Ok(strict_code(instance.strict, doc.all_hold()))
        }
        Command::Dup { instance, out } => {
            let p = instance.parse(true, true)?;
            let doc = dup_report(p.input.as_ref().expect("checked by parse"));
            output::report(&doc, out.format(Format::Table));
            if !doc.all_agree() {
                return Ok(EXIT_DISAGREEMENT);
            }
            Ok(strict_code(instance.strict, doc.all_hold()))
        }
        Command::Validate { corpus, out } => {
            let semigroups = corpus.semigroups()?;
            let summary = validate_semigroups(&semigroups, &corpus.spec(), corpus.mode());
            output::validation(&summary, out.format(Format::Table));
            Ok(if summary.is_clean() { 0 } else { EXIT_DISAGREEMENT })
        }
        Command::Search {
            predicate,
            corpus,
            out,
        } => {
            let predicate: Predicate = predicate.parse()?;
            let semigroups = corpus.semigroups()?;
            let hits = search(&semigroups, &corpus.spec(), predicate, corpus.mode());
            output::search_hits(&hits, predicate, out.format(Format::Jsonl));
            Ok(0)
        }
        Command::Homog { instance, out } => {
            let p = instance.parse(false, false)?;
            let report = HomogReport {
                semigroup: is_homogeneous_semigroup(&p.semigroup),
                ideal: p.ideal.as_ref().map(is_homogeneous_ideal),
                duplication: p
                    .input
                    .as_ref()
                    .map(numcurve::homogeneity::is_homogeneous_duplication),
            };
            output::homog(&report, out.format(Format::Table));
            if report.duplication.as_ref().is_some_and(|d| !d.agree()) {
                return Ok(EXIT_DISAGREEMENT);
            }
            Ok(strict_code(instance.strict, report.all_hold()))
        }
        Command::HomtypeSearch { instance, out } => {
            let p = instance.parse(false, false)?;
            let doc = homtype_report(&p.semigroup);
            output::homtype(&doc, out.format(Format::Table));
            let found = doc.homtype_candidates.as_ref().is_some_and(|c| !c.is_empty());
            Ok(strict_code(instance.strict, found))
        }
    }
}
