use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use sgpcalc::parse::{parse_ideal, parse_semigroup};
use sgpcalc::report::{ideal_section, Document, SAMUEL_UPTO};
use sgpcalc::search::{run_search, SearchConfig};
use sgpcalc::{ring_from_literal, CliError};
use sgpcalc_core::classify::classify;
use sgpcalc_core::invariants::{samuel_length, InvariantReport};
use sgpcalc_core::propositions::{Evaluator, Instance, PropositionId};
use sgpcalc_core::{FractionalIdeal, IdealArithmetic, NumericalSemigroup, SemigroupRing};

#[derive(Parser)]
#[command(
    name = "sgpcalc",
    version,
    about = "Exact calculator for numerical semigroup rings"
)]
struct Cli {
    /// Emit JSON instead of `key: value` lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring invariants of a semigroup such as `<4,6,7>`.
    Invariants { semigroup: String },
    /// Elias, Burch and Ulrich verdicts for an ideal such as `(7,8)`.
    Classify {
        semigroup: String,
        ideal: String,
        /// Exponent `a` at which to test `t^a ∈ m (t^a R :_Q I)`.
        #[arg(long = "witness")]
        witnesses: Vec<i64>,
    },
    /// Evaluates one proposition on an explicit instance.
    Check {
        proposition: String,
        semigroup: String,
        #[arg(long = "I")]
        i: Option<String>,
        #[arg(long = "J")]
        j: Option<String>,
        #[arg(long = "K")]
        k: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<i64>,
    },
    /// Runs propositions over the enumerated corpus.
    Search {
        #[arg(long, default_value_t = 8)]
        max_genus: usize,
        /// Largest ideal generator; defaults to `c + 2e` per semigroup.
        #[arg(long)]
        gen_bound: Option<i64>,
        #[arg(long, default_value_t = 4)]
        max_gens: usize,
        /// Generators per ideal in statements about pairs of ideals.
        #[arg(long, default_value_t = 2)]
        pair_max_gens: usize,
        /// Comma-separated proposition ids; all by default.
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
        /// Violations per semigroup and proposition that carry a full
        /// certificate; later ones are listed by instance and witness.
        #[arg(long, default_value_t = 2)]
        certificates: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Lengths `ℓ(R/m^n)` for `n = 1..=upto`.
    Hilbert {
        semigroup: String,
        #[arg(long)]
        upto: u32,
    },
}

fn ideal_arg(ring: &SemigroupRing, text: &str) -> Result<FractionalIdeal, CliError> {
    Ok(ring.ideal(&parse_ideal(text)?)?)
}

fn invariants_of(ring: &SemigroupRing) -> Result<InvariantReport, CliError> {
    Ok(InvariantReport::compute(ring, SAMUEL_UPTO)?)
}

fn run(cli: Cli) -> Result<String, CliError> {
    let emit = |doc: Document| {
        if cli.json {
            doc.to_json()
        } else {
            doc.to_table()
        }
    };
    match cli.command {
        Command::Invariants { semigroup } => {
            let ring = ring_from_literal(&semigroup)?;
            Ok(emit(Document {
                invariants: Some(invariants_of(&ring)?),
                ..Document::default()
            }))
        }
        Command::Classify {
            semigroup,
            ideal,
            witnesses,
        } => {
            let ring = ring_from_literal(&semigroup)?;
            let e = ideal_arg(&ring, &ideal)?;
            let witnesses = (!witnesses.is_empty()).then_some(witnesses.as_slice());
            let classification = classify(&ring, &e, witnesses)?;
            Ok(emit(Document {
                invariants: Some(invariants_of(&ring)?),
                ideal: Some(ideal_section(&ring, &e)?),
                classification: Some(classification),
                ..Document::default()
            }))
        }
        Command::Check {
            proposition,
            semigroup,
            i,
            j,
            k,
            x,
        } => {
            let id: PropositionId = proposition.parse()?;
            let ring = ring_from_literal(&semigroup)?;
            let parse = |t: &Option<String>| t.as_deref().map(|t| ideal_arg(&ring, t)).transpose();
            let inst = Instance {
                i: parse(&i)?,
                j: parse(&j)?,
                k: parse(&k)?,
                x,
            };
            let outcome = Evaluator::new(&ring)?.outcome(id, &inst)?;
            let ideal = inst
                .i
                .as_ref()
                .map(|i| ideal_section(&ring, i))
                .transpose()?;
            Ok(emit(Document {
                invariants: Some(invariants_of(&ring)?),
                ideal,
                outcomes: Some(vec![outcome]),
                ..Document::default()
            }))
        }
        Command::Search {
            max_genus,
            gen_bound,
            max_gens,
            pair_max_gens,
            props,
            certificates,
            jobs,
            out,
        } => {
            if max_gens == 0 || pair_max_gens == 0 || gen_bound.is_some_and(|b| b < 1) {
                return Err(CliError::Usage("search bounds must be positive".into()));
            }
            let props = if props.is_empty() {
                PropositionId::ALL.to_vec()
            } else {
                props
                    .iter()
                    .map(|p| p.parse())
                    .collect::<Result<Vec<_>, _>>()?
            };
            let config = SearchConfig {
                max_genus,
                gen_bound,
                max_gens,
                pair_max_gens,
                props,
                certificates_per_semigroup: certificates,
                jobs,
            };
            let report = run_search(&config)?;
            let text = report.to_json();
            match out {
                Some(path) => {
                    std::fs::write(&path, &text)?;
                    let mut summary = String::new();
                    for (id, s) in &report.propositions {
                        summary.push_str(&format!(
                            "{id}: instances {} hypotheses {} violations {}\n",
                            s.instances_checked,
                            s.hypotheses_held,
                            s.violations.len()
                        ));
                    }
                    Ok(summary)
                }
                None => Ok(text),
            }
        }
        Command::Hilbert { semigroup, upto } => {
            let gens = parse_semigroup(&semigroup)?;
            let s = NumericalSemigroup::new(&gens)?;
            let needed = s.conductor().max(0) + (upto as i64 + 2) * s.multiplicity();
            let ring =
                SemigroupRing::new(Arc::new(NumericalSemigroup::with_window(&gens, needed)?));
            let lengths = (1..=upto)
                .map(|n| samuel_length(&ring, n))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(emit(Document {
                invariants: Some(invariants_of(&ring)?),
                hilbert: Some(lengths),
                ..Document::default()
            }))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
