//! `trpic` — batch verification driver for the derived Picard group engine.
//!
//! Subcommands:
//!   verify <suite|all> [--m --n --t --field --seed --budget --format]
//!   apply  <word> <object> [config flags]
//!   group  {reduce|act|trivial|map} …
//!
//! Reports are deterministic given the seed; the exit status is the
//! conjunction of all checks, and an `unknown` verdict never passes.

use clap::{Args, Parser, Subcommand};
use std::process::ExitCode;
use trpic_core::braid::{
    group_action, is_trivial_word, phi_n, psi_embed, ActionKind, BraidWord, FreeWord, Kind,
};
use trpic_core::complex::Complex;
use trpic_core::nakayama::Nakayama;
use trpic_core::tilting::{apply_word, Word};
use trpic_core::verify::{default_matrix, run_suite, RunConfig, SUITES};
use trpic_core::FieldSpec;

#[derive(Parser)]
#[command(name = "trpic", version, about = "Exact homotopy-category verification suites")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a named certificate suite (or `all`) and print the report.
    Verify {
        /// braid | rot | omega | center | picard | smash | groups |
        /// tilting | natural | oracles | all
        suite: String,
        #[command(flatten)]
        opts: ConfigOpts,
    },
    /// Apply a functor word to an object and print the minimized image.
    Apply {
        /// Whitespace-separated word, e.g. "H0 H1 Q1 rho^3 mu[1,2] shift^-1".
        word: String,
        /// A projective label such as `P4`.
        object: String,
        #[command(flatten)]
        opts: ConfigOpts,
    },
    /// Free-group and braid-group word operations.
    Group {
        #[command(subcommand)]
        sub: GroupCmd,
    },
}

#[derive(Args)]
struct ConfigOpts {
    /// Braid-index modulus m (vertices = n·m, maximal path length = t·m).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Scalar field: `q` (rationals) or `fp:<prime>`.
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Random-combination budget of the isomorphism search.
    #[arg(long, default_value_t = 24)]
    budget: usize,
    /// Output format: `text` or `records` (line-oriented, byte-stable).
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Freely reduce a word in the free group of the given rank.
    Reduce {
        #[arg(long)]
        rank: usize,
        word: String,
    },
    /// Apply a braid word to a free-group word through the standard action.
    Act {
        /// Affine braid group rank (generators s_0..s_{rank-1}).
        #[arg(long)]
        affine: Option<usize>,
        /// Type-A braid group rank (generators s_1..s_rank).
        #[arg(long)]
        artin: Option<usize>,
        word: String,
        target: String,
    },
    /// Decide whether a braid word is trivial.
    Trivial {
        #[arg(long)]
        affine: Option<usize>,
        #[arg(long)]
        artin: Option<usize>,
        word: String,
    },
    /// Map a word through an embedding: `--phi N` (affine N into type-A N)
    /// or `--psi T --rank M` (affine M into affine T·M).
    Map {
        #[arg(long)]
        phi: Option<usize>,
        #[arg(long)]
        psi: Option<usize>,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        word: String,
    },
}

fn parse_field(text: &str) -> Result<FieldSpec, String> {
    if text == "q" {
        return Ok(FieldSpec::Rational);
    }
    if let Some(p) = text.strip_prefix("fp:") {
        let p: u64 = p.parse().map_err(|_| format!("bad prime: {p}"))?;
        return Ok(FieldSpec::Prime(p));
    }
    Err(format!("unknown field {text:?}; use q or fp:<prime>"))
}

fn configs(opts: &ConfigOpts) -> Result<Vec<RunConfig>, String> {
    let field = parse_field(&opts.field)?;
    let triples: Vec<(usize, usize, usize)> = match (opts.m, opts.n, opts.t) {
        (None, None, None) => default_matrix(),
        (m, n, t) => vec![(m.unwrap_or(2), n.unwrap_or(3), t.unwrap_or(1))],
    };
    triples
        .into_iter()
        .map(|(m, n, t)| {
            RunConfig::new(m, n, t, field, opts.seed, opts.budget)
                .map_err(|e| format!("invalid configuration (m={m}, n={n}, t={t}): {e}"))
        })
        .collect()
}

fn cmd_verify(suite: &str, opts: &ConfigOpts) -> Result<bool, String> {
    let suites: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(format!(
            "unknown suite {suite:?}; choose one of {} or all",
            SUITES.join(", ")
        ));
    };
    let records = opts.format == "records";
    if !records && opts.format != "text" {
        return Err(format!("unknown format {:?}; use text or records", opts.format));
    }
    let cfgs = configs(opts)?;
    let mut all_pass = true;
    for name in suites {
        for cfg in &cfgs {
            let checks = run_suite(name, cfg)?;
            if checks.is_empty() {
                continue;
            }
            let passed = checks.iter().filter(|c| c.passed()).count();
            all_pass &= passed == checks.len();
            if records {
                for c in &checks {
                    println!("{}", c.record());
                }
            } else {
                println!(
                    "suite {name} (m={} n={} t={} field={} seed={}):",
                    cfg.m, cfg.n, cfg.t, cfg.field, cfg.seed
                );
                for c in &checks {
                    println!(
                        "  [{}] {} {} witness={}",
                        c.verdict.text(),
                        c.id,
                        c.instance,
                        c.witness
                    );
                }
                println!("  {passed}/{} passed", checks.len());
            }
        }
    }
    Ok(all_pass)
}

fn parse_object(alg: &Nakayama, text: &str) -> Result<Complex<Nakayama>, String> {
    let idx: usize = text
        .strip_prefix('P')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| format!("objects are projective labels like P4 (got {text:?})"))?;
    if idx >= alg.verts {
        return Err(format!("vertex {idx} out of range (0..{})", alg.verts));
    }
    Ok(Complex::stalk(idx, 0))
}

fn cmd_apply(word_text: &str, object: &str, opts: &ConfigOpts) -> Result<bool, String> {
    let cfgs = configs(opts)?;
    let cfg = cfgs[0];
    let alg = cfg.algebra();
    let word = Word::parse(word_text, cfg.field).map_err(|e| format!("word parse error: {e}"))?;
    let x = parse_object(&alg, object)?;
    let img = apply_word(&alg, cfg.m, &word, &x).map_err(|e| format!("{e}"))?;
    let labels = img.graded_labels();
    if labels.len() == 1 && labels[0].0 == 0 {
        println!("P{}", labels[0].1);
    }
    print!("{}", img.text(&alg));
    Ok(true)
}

fn braid_kind(affine: Option<usize>, artin: Option<usize>) -> Result<Kind, String> {
    match (affine, artin) {
        (Some(m), None) => Ok(Kind::Affine(m)),
        (None, Some(n)) => Ok(Kind::Artin(n)),
        _ => Err("choose exactly one of --affine <rank> or --artin <rank>".into()),
    }
}

fn cmd_group(sub: &GroupCmd) -> Result<bool, String> {
    match sub {
        GroupCmd::Reduce { rank, word } => {
            let mut w = FreeWord::parse(*rank, word).map_err(|e| format!("{e}"))?;
            w.reduce();
            println!("{w}");
            Ok(true)
        }
        GroupCmd::Act {
            affine,
            artin,
            word,
            target,
        } => {
            let kind = braid_kind(*affine, *artin)?;
            let (action, rank) = match kind {
                Kind::Affine(m) => (ActionKind::Affine(m), m + 1),
                Kind::Artin(n) => (ActionKind::Artin(n), n + 1),
                _ => return Err("act supports affine and type-A words".into()),
            };
            let g = BraidWord::parse(kind, word).map_err(|e| format!("{e}"))?;
            let w = FreeWord::parse(rank, target).map_err(|e| format!("{e}"))?;
            let img = group_action(action, &g, &w).map_err(|e| format!("{e}"))?;
            println!("{img}");
            Ok(true)
        }
        GroupCmd::Trivial { affine, artin, word } => {
            let kind = braid_kind(*affine, *artin)?;
            let g = BraidWord::parse(kind, word).map_err(|e| format!("{e}"))?;
            let verdict = is_trivial_word(&g).map_err(|e| format!("{e}"))?;
            println!("{}", if verdict { "trivial" } else { "nontrivial" });
            Ok(true)
        }
        GroupCmd::Map {
            phi,
            psi,
            rank,
            word,
        } => match (phi, psi) {
            (Some(n), None) => {
                let g = BraidWord::parse(Kind::Affine(*n), word).map_err(|e| format!("{e}"))?;
                let img = phi_n(&g, *n).map_err(|e| format!("{e}"))?;
                println!("{img}");
                Ok(true)
            }
            (None, Some(t)) => {
                let g = BraidWord::parse(Kind::Affine(*rank), word).map_err(|e| format!("{e}"))?;
                let img = psi_embed(&g, *t).map_err(|e| format!("{e}"))?;
                println!("{img}");
                Ok(true)
            }
            _ => Err("choose exactly one of --phi <N> or --psi <t> (with --rank <m>)".into()),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Verify { suite, opts } => cmd_verify(suite, opts),
        Cmd::Apply { word, object, opts } => cmd_apply(word, object, opts),
        Cmd::Group { sub } => cmd_group(sub),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

// The suites themselves are exercised by the acceptance tests of the core
// crate; here we only smoke-test the argument plumbing.
#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_parsing() {
        assert_eq!(parse_field("q"), Ok(FieldSpec::Rational));
        assert_eq!(parse_field("fp:32003"), Ok(FieldSpec::Prime(32003)));
        assert!(parse_field("f2").is_err());
    }

    #[test]
    fn verify_rejects_noncoprime() {
        let opts = ConfigOpts {
            m: Some(3),
            n: Some(2),
            t: Some(2),
            field: "q".into(),
            seed: 7,
            budget: 8,
            format: "text".into(),
        };
        assert!(configs(&opts).is_err());
    }

    #[test]
    fn apply_example_matches_rotation_lemma() {
        // on N(6,2): the t = 1 composite carries P4 to P1
        let opts = ConfigOpts {
            m: Some(2),
            n: Some(3),
            t: Some(1),
            field: "q".into(),
            seed: 7,
            budget: 8,
            format: "text".into(),
        };
        let cfg = configs(&opts).unwrap()[0];
        let alg = cfg.algebra();
        // words apply left to right: H0 acts first, then Q1 twice
        let word = Word::parse("H0 Q1 Q1", cfg.field).unwrap();
        let img = apply_word(&alg, cfg.m, &word, &Complex::stalk(4, 0)).unwrap();
        assert_eq!(img.graded_labels(), vec![(0, 1)]);
    }
}
