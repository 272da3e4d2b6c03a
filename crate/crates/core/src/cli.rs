// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit status:
//!
//! | status | meaning |
//! |--------|---------|
//! | 0 | success; "bent" for `bent-check` |
//! | 1 | "not bent" for `bent-check` |
//! | 2 | usage, parse, capacity or budget error |
//! | 3 | internal inconsistency |

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2poly::classify_degree2;
use crate::hcoeff::{h_direct, h_from_spectrum, h_table, HRoute, HValue, Valuation};
use crate::nonexistence::{check_all, verify_witness, NonexistenceReport};
use crate::rotsym::{Monomial, Sanf};
use crate::search::{exhaustive_search, search_checkpointed, SearchMode, SearchTask, Shard};
use crate::walsh::{is_bent, walsh_spectrum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "rotbent", version, about = "Homogeneous rotation-symmetric bent function toolkit")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Walsh,
    Valuation,
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Full,
    EarlyAbort,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Direct,
    Spectral,
    Auto,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide bentness of a SANF.
    BentCheck {
        sanf: String,
        #[arg(short = 'n', long = "vars")]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// List every homogeneous quadratic rotation-symmetric bent SANF.
    ClassifyDeg2 {
        #[arg(short = 'n', long = "vars")]
        n: usize,
    },
    /// Exhaustive search over homogeneous degree-d SANFs.
    Search {
        #[arg(short = 'n', long = "vars")]
        n: usize,
        #[arg(short = 'd', long = "degree")]
        d: usize,
        #[arg(long, value_enum, default_value_t = Mode::EarlyAbort)]
        mode: Mode,
        /// Run only shard I of T, written I/T.
        #[arg(long)]
        shard: Option<Shard>,
        /// JSON-lines checkpoint file; completed shards are skipped on rerun.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow runs beyond the per-run candidate budget.
        #[arg(long)]
        long_run: bool,
    },
    /// Run the structural nonexistence checkers.
    Nonexist {
        sanf: String,
        #[arg(short = 'n', long = "vars")]
        n: usize,
        /// One line per checker instead of full traces.
        #[arg(long)]
        compare: bool,
    },
    /// Print the Walsh spectrum.
    Spectrum {
        sanf: String,
        #[arg(short = 'n', long = "vars")]
        n: usize,
    },
    /// Print h_f(u) and its 2-adic valuation.
    Hcoeff {
        sanf: String,
        #[arg(short = 'n', long = "vars")]
        n: usize,
        /// u as a 0/1 string, position 1 first.
        u: Option<String>,
        /// Every u, by increasing weight.
        #[arg(long)]
        all_u: bool,
        #[arg(long, value_enum, default_value_t = Route::Auto)]
        route: Route,
    },
}

/// `bent-check` record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BentCheckRecord {
    pub sanf: String,
    pub n: usize,
    pub bent: bool,
    pub walsh: Option<bool>,
    pub valuation: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub n: usize,
    pub count: usize,
    pub sanfs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub n: usize,
    pub d: usize,
    pub orbit_count: usize,
    pub candidates_tested: u64,
    pub bent: Vec<String>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonexistRecord {
    pub sanf: String,
    pub n: usize,
    pub reports: Vec<NonexistenceReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub sanf: String,
    pub n: usize,
    pub values: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcoeffRecord {
    pub u: String,
    pub value: i64,
    pub v2: Valuation,
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Inconsistent(_) => EXIT_INTERNAL,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::BentCheck { sanf, n, method } => bent_check(sanf, *n, *method, json, out),
        Command::ClassifyDeg2 { n } => {
            let sanfs: Vec<String> = classify_degree2(*n)?.iter().map(Sanf::to_string).collect();
            if json {
                emit_json(
                    out,
                    &ClassifyRecord {
                        n: *n,
                        count: sanfs.len(),
                        sanfs,
                    },
                )?;
            } else {
                for s in &sanfs {
                    writeln!(out, "{s}")?;
                }
                writeln!(out, "count: {}", sanfs.len())?;
            }
            Ok(EXIT_OK)
        }
        Command::Search {
            n,
            d,
            mode,
            shard,
            out: path,
            long_run,
        } => {
            let mode = match mode {
                Mode::Full => SearchMode::Full,
                Mode::EarlyAbort => SearchMode::EarlyAbort,
            };
            let mut task = SearchTask::new(*n, *d).mode(mode).long_run(*long_run);
            task.shard = *shard;
            let result = match path {
                Some(path) => search_checkpointed(&task, path, |rec, resumed| {
                    let _ = writeln!(
                        err,
                        "shard {}/{}: {} bent / {} tested{}",
                        rec.shard_index,
                        rec.shard_total,
                        rec.bent.len(),
                        rec.candidates_tested,
                        if resumed { " (from checkpoint)" } else { "" }
                    );
                })?,
                None => exhaustive_search(&task)?,
            };
            if json {
                emit_json(
                    out,
                    &SearchRecord {
                        n: result.n,
                        d: result.d,
                        orbit_count: result.orbit_count,
                        candidates_tested: result.candidates_tested,
                        bent: result.bent_sanfs.iter().map(Sanf::to_string).collect(),
                        elapsed_ms: result.elapsed.as_millis(),
                    },
                )?;
            } else {
                for s in &result.bent_sanfs {
                    writeln!(out, "{s}")?;
                }
                writeln!(out, "{result}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Nonexist { sanf, n, compare } => nonexist(sanf, *n, *compare, json, out),
        Command::Spectrum { sanf, n } => {
            let f = Sanf::parse(*n, sanf)?;
            let values = walsh_spectrum(&f.truth_table()?).values().to_vec();
            if json {
                emit_json(
                    out,
                    &SpectrumRecord {
                        sanf: f.to_string(),
                        n: *n,
                        values,
                    },
                )?;
            } else {
                let text: Vec<String> = values.iter().map(i32::to_string).collect();
                writeln!(out, "{}", text.join(" "))?;
            }
            Ok(EXIT_OK)
        }
        Command::Hcoeff {
            sanf,
            n,
            u,
            all_u,
            route,
        } => hcoeff(sanf, *n, u.as_deref(), *all_u, *route, json, out),
    }
}

fn bent_check(text: &str, n: usize, method: Method, json: bool, out: &mut dyn Write) -> Result<i32> {
    let f = Sanf::parse(n, text)?;
    let anf = f.to_anf()?;
    let walsh = matches!(method, Method::Walsh | Method::Auto).then(|| is_bent(&anf_table(&anf)));
    let valuation = match method {
        Method::Walsh => None,
        // bent functions need even n; the criterion is stated for even n only
        _ if n % 2 == 1 => Some(false),
        _ => Some(crate::hcoeff::bent_by_valuation(&anf, HRoute::Auto)?),
    };
    let bent = match (walsh, valuation) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Inconsistent(format!(
                "Walsh says {a}, valuation says {b} for {f} on {n} variables"
            )))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => unreachable!("some method always runs"),
    };
    if json {
        emit_json(
            out,
            &BentCheckRecord {
                sanf: f.to_string(),
                n,
                bent,
                walsh,
                valuation,
            },
        )?;
    } else {
        writeln!(out, "{}", if bent { "bent" } else { "not bent" })?;
    }
    Ok(if bent { EXIT_OK } else { EXIT_NEGATIVE })
}

fn anf_table(anf: &crate::boolfn::AnfForm) -> crate::boolfn::TruthTable {
    crate::boolfn::TruthTable::from_anf(anf)
}

fn nonexist(text: &str, n: usize, compare: bool, json: bool, out: &mut dyn Write) -> Result<i32> {
    let f = Sanf::parse(n, text)?;
    if f.homogeneous_degree().is_none() {
        return Err(Error::NotHomogeneous);
    }
    let reports = check_all(&f)?;
    for r in reports.iter().filter(|r| r.has_witness()) {
        if !verify_witness(&f, r)? {
            return Err(Error::Inconsistent(format!(
                "{} witness {} does not reproduce its valuation",
                r.checker,
                r.witness_u0.map(|u| u.bitstring()).unwrap_or_default()
            )));
        }
    }
    if json {
        emit_json(
            out,
            &NonexistRecord {
                sanf: f.to_string(),
                n,
                reports,
            },
        )?;
    } else if compare {
        writeln!(out, "{:<12} {:<13} rule", "checker", "verdict")?;
        for r in &reports {
            writeln!(
                out,
                "{:<12} {:<13} {}",
                r.checker,
                r.verdict.to_string(),
                r.rule.as_deref().unwrap_or("-")
            )?;
        }
    } else {
        for r in &reports {
            writeln!(out, "{r}")?;
        }
    }
    Ok(EXIT_OK)
}

fn hcoeff(
    text: &str,
    n: usize,
    u: Option<&str>,
    all_u: bool,
    route: Route,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let f = Sanf::parse(n, text)?;
    let anf = f.to_anf()?;
    let records: Vec<HcoeffRecord> = match (u, all_u) {
        (Some(u), false) => {
            let u = Monomial::from_bitstring(u)?;
            if u.n() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: u.n(),
                });
            }
            let hv = match route {
                Route::Direct => h_direct(anf.monomials(), &u)?,
                Route::Spectral => h_from_spectrum(&walsh_spectrum(&anf_table(&anf)), &u)?,
                Route::Auto => match h_direct(anf.monomials(), &u) {
                    Err(Error::Capacity { .. }) => {
                        h_from_spectrum(&walsh_spectrum(&anf_table(&anf)), &u)?
                    }
                    other => other?,
                },
            };
            vec![record(&u, hv)]
        }
        (None, true) => {
            let route = match route {
                Route::Direct => HRoute::Direct,
                Route::Spectral => HRoute::Spectral,
                Route::Auto => HRoute::Auto,
            };
            let h = h_table(&anf, route)?;
            let mut us: Vec<u64> = (0..1u64 << n).collect();
            us.sort_by_key(|&u| (u.count_ones(), Monomial::new(n, u).expect("u < 2^n")));
            us.into_iter()
                .map(|u| Ok(record(&Monomial::new(n, u)?, HValue::new(h[u as usize]))))
                .collect::<Result<_>>()?
        }
        _ => {
            return Err(Error::Precondition(
                "give exactly one of a u bitstring or --all-u".into(),
            ))
        }
    };
    for r in &records {
        if json {
            emit_json(out, r)?;
        } else if all_u {
            writeln!(out, "u={} value={} v2={}", r.u, r.value, r.v2)?;
        } else {
            writeln!(out, "value={} v2={}", r.value, r.v2)?;
        }
    }
    Ok(EXIT_OK)
}

fn record(u: &Monomial, hv: HValue) -> HcoeffRecord {
    HcoeffRecord {
        u: u.bitstring(),
        value: hv.value,
        v2: hv.valuation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("rotbent").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn bent_check_statuses() {
        assert_eq!(call(&["bent-check", "x1x5", "-n", "8"]).0, 0);
        let (code, out, _) = call(&["bent-check", "x1x2x3+x1x2x4", "-n", "6"]);
        assert_eq!((code, out.trim()), (1, "not bent"));
        assert_eq!(call(&["bent-check", "x1x2x3", "-n", "7"]).0, 1);
        assert_eq!(call(&["bent-check", "x1x9", "-n", "8"]).0, 2);
        assert_eq!(call(&["bent-check", "", "-n", "8"]).0, 2);
        assert_eq!(call(&["bent-check"]).0, 2);
    }

    #[test]
    fn spectrum_and_hcoeff_text() {
        assert_eq!(call(&["spectrum", "x1x2", "-n", "2"]).1.trim(), "2 2 2 -2");
        assert_eq!(
            call(&["hcoeff", "x1x2", "-n", "2", "11"]).1.trim(),
            "value=-2 v2=1"
        );
        let (code, out, _) = call(&["hcoeff", "x1x2", "-n", "2", "--all-u"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("u=00 value=1 v2=0"));
        assert_eq!(call(&["spectrum", "", "-n", "2"]).0, 2);
    }

    #[test]
    fn classify_counts() {
        let (code, out, _) = call(&["classify-deg2", "-n", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().last(), Some("count: 2"));
        assert_eq!(call(&["classify-deg2", "-n", "5"]).0, 2);
    }

    #[test]
    fn json_roundtrips() {
        let (_, out, _) = call(&["--format", "json", "nonexist", "x1x2x3", "-n", "10"]);
        let rec: NonexistRecord = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(Sanf::parse(10, &rec.sanf).unwrap().to_string(), "x1x2x3");
        let (_, out, _) = call(&["bent-check", "x1x5", "-n", "8", "--format", "json"]);
        let rec: BentCheckRecord = serde_json::from_str(out.trim()).unwrap();
        assert!(rec.bent);
    }
}
