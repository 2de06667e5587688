mod input;
mod suites;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use partmzv::mzv::{bimzv, degree, weight_limit, zdegree_limit, Limit, MzvLin};
use partmzv::partition_eval::{moller_transform, qbracket_enum, FunctionSpec, PartitionFunction};
use partmzv::qbracket_fast::{qbracket_fast, quasimod_detect};
use partmzv::word_algebra::{
    basis_words, derive, iota_s, iota_s_explicit, iota_s_genseries, model_convert, quasi_shuffle,
    regularize, shuffle,
};
use partmzv::{Error, Model, WordSum};

#[derive(Debug)]
pub enum CliError {
    /// Malformed input; exit code 2.
    Input(String),
    /// The computation was refused; exit code 1.
    Refused(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidInput(_) => CliError::Input(e.to_string()),
            _ => CliError::Refused(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "partmzv",
    version,
    about = "q-brackets of functions on partitions and multiple zeta values"
)]
struct Cli {
    /// monomial, seki, binomial or binomial-shifted (default seki)
    #[arg(long, global = true, value_parser = input::parse_model)]
    model: Option<Model>,
    /// Truncation order of q-series
    #[arg(long, global = true, default_value_t = 30)]
    order: usize,
    /// Print JSON
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Print plain text (default)
    #[arg(long, global = true)]
    text: bool,
    /// Timing and progress on stderr
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Auto,
    Genseries,
    Explicit,
}

#[derive(Clone, Copy, ValueEnum)]
enum At {
    Degree,
    Weight,
}

#[derive(Subcommand)]
enum Cmd {
    /// q-bracket of a word sum, or of a function given with --function
    Qbracket {
        wordsum: Option<String>,
        /// Function spec as JSON, e.g. {"kind":"shifted_symmetric_Q","k":4}
        #[arg(long)]
        function: Option<String>,
        /// Sum over partitions instead of the fast route
        #[arg(long)]
        enumerate: bool,
    },
    /// Quasi-shuffle product in the chosen model
    Stuffle { a: String, b: String },
    /// Shuffle product (seki model)
    Shuffle { a: String, b: String },
    /// The involution ι (seki model)
    Iota {
        wordsum: String,
        #[arg(long, value_enum, default_value_t = Route::Auto)]
        route: Route,
    },
    /// The derivation D = q d/dq on word sums
    Derive { wordsum: String },
    /// Polynomial in (1;0) with coefficients free of (1;0)-divergences
    Regularize { wordsum: String },
    /// The bi-MZV value, a polynomial in T with MZV coefficients
    Bimzv { wordsum: String },
    /// Degree of a word and the positions attaining it
    Degree { word: String },
    /// Limit of (1-q)^D ⟨f⟩ as q → 1, with D the largest degree among the terms unless given
    Limit {
        wordsum: String,
        #[arg(long, value_enum, default_value_t = At::Degree)]
        at: At,
        /// Exponent D
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Fit the q-bracket by a polynomial in G2, G4, G6
    Quasimod {
        wordsum: String,
        /// Largest weight of the fit (default: the largest weight among the words)
        #[arg(long)]
        max_weight: Option<u32>,
    },
    /// Möller transform, at a partition or as a q-bracket
    Moller {
        wordsum: String,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Value at a partition
    Eval {
        wordsum: Option<String>,
        #[arg(long)]
        partition: String,
        #[arg(long)]
        function: Option<String>,
    },
    /// Run a verification suite
    Verify {
        /// double-shuffle, iota, oracle, bloch-okounkov, moller, limits, sum-formula, quasimod, three-one or all
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Words of weight at most K
    Basis {
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        count: bool,
    },
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Output {
            json,
            text: text.into(),
            ok: true,
        }
    }
}

fn read_ws(s: &str, flag: Option<Model>) -> Result<(Model, WordSum), CliError> {
    let (m, w) = input::wordsum(s)?;
    Ok((input::model(flag, &[m])?, w))
}

/// Reads the input in the flagged model and rewrites it in the seki model.
fn read_seki(s: &str, flag: Option<Model>) -> Result<WordSum, CliError> {
    let (m, w) = read_ws(s, flag)?;
    Ok(model_convert(m, Model::Seki, &w))
}

fn function(
    wordsum: Option<&str>,
    spec: Option<&str>,
    flag: Option<Model>,
) -> Result<PartitionFunction, CliError> {
    match (wordsum, spec) {
        (Some(s), None) => {
            let (m, w) = read_ws(s, flag)?;
            Ok(PartitionFunction::word(m, w))
        }
        (None, Some(j)) => {
            let f: FunctionSpec = serde_json::from_str(j)
                .map_err(|e| CliError::Input(format!("malformed function spec: {e}")))?;
            Ok(f.build()?)
        }
        _ => Err(CliError::Input(
            "give exactly one of a word sum or --function".into(),
        )),
    }
}

fn mzv_json(z: &MzvLin) -> Value {
    json!({ "mzv": z.to_json(), "value": z.eval() })
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let flag = cli.model;
    let order = cli.order;
    Ok(match &cli.cmd {
        Cmd::Qbracket {
            wordsum,
            function: spec,
            enumerate,
        } => {
            let f = function(wordsum.as_deref(), spec.as_deref(), flag)?;
            let series = match (&f, enumerate) {
                (PartitionFunction::Word(m, w), false) => qbracket_fast(*m, w, order),
                _ => qbracket_enum(&f, order),
            };
            Output::new(
                json!({ "order": order, "series": series }),
                series.to_string(),
            )
        }
        Cmd::Stuffle { a, b } => {
            let (ma, u) = input::wordsum(a)?;
            let (mb, v) = input::wordsum(b)?;
            let m = input::model(flag, &[ma, mb])?;
            let p = quasi_shuffle(m, &u, &v);
            Output::new(p.to_json(m), p.to_string())
        }
        Cmd::Shuffle { a, b } => {
            let p = shuffle(&read_seki(a, flag)?, &read_seki(b, flag)?);
            Output::new(p.to_json(Model::Seki), p.to_string())
        }
        Cmd::Iota { wordsum, route } => {
            let s = read_seki(wordsum, flag)?;
            let p = match route {
                Route::Auto => iota_s(&s),
                Route::Genseries => s.map_linear(iota_s_genseries),
                Route::Explicit => s.map_linear(iota_s_explicit),
            };
            Output::new(p.to_json(Model::Seki), p.to_string())
        }
        Cmd::Derive { wordsum } => {
            let (m, s) = read_ws(wordsum, flag)?;
            let p = derive(m, &s);
            Output::new(p.to_json(m), p.to_string())
        }
        Cmd::Regularize { wordsum } => {
            let (m, s) = read_ws(wordsum, flag)?;
            let r = regularize(&model_convert(m, Model::Binomial, &s));
            let coeffs: Vec<Value> = r
                .coeffs
                .iter()
                .map(|c| c.to_json(Model::Binomial))
                .collect();
            let text: Vec<String> = r
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| format!("(1;0)^{j}: {c}"))
                .collect();
            Output::new(
                json!({ "model": Model::Binomial, "coeffs": coeffs }),
                text.join("\n"),
            )
        }
        Cmd::Bimzv { wordsum } => {
            let (m, s) = read_ws(wordsum, flag)?;
            let v = bimzv(&model_convert(m, Model::Binomial, &s))?;
            Output::new(
                json!({ "bimzv": v.to_json(), "values": v.eval() }),
                format!("{v}\n{:?}", v.eval()),
            )
        }
        Cmd::Degree { word } => {
            let (m, w) = input::word(word)?;
            input::model(flag, &[m])?;
            let (d, arg) = degree(&w);
            Output::new(
                json!({ "degree": d, "argmax": arg }),
                format!("{d} (attained at {arg:?})"),
            )
        }
        Cmd::Limit {
            wordsum,
            at,
            degree: target,
        } => {
            let s = read_seki(wordsum, flag)?;
            let top = s.iter().map(|(w, _)| degree(w).0).max().unwrap_or(0);
            let d = target.unwrap_or(top);
            if top > d {
                return Err(CliError::Refused(format!(
                    "divergent: a term has degree {top} > {d}"
                )));
            }
            let mut z = MzvLin::zero();
            for (w, c) in s.iter() {
                if degree(w).0 < d {
                    continue;
                }
                let l = match at {
                    At::Degree => zdegree_limit(w)?,
                    At::Weight => weight_limit(w)?,
                };
                match l {
                    Limit::Value(v) => z.add_scaled(&v, c),
                    Limit::Divergent => {
                        return Err(CliError::Refused(format!(
                            "divergent: {w} grows logarithmically"
                        )))
                    }
                }
            }
            let mut j = mzv_json(&z);
            j["degree"] = json!(d);
            Output::new(j, format!("{z} = {:.12}", z.eval()))
        }
        Cmd::Quasimod {
            wordsum,
            max_weight,
        } => {
            let (m, s) = read_ws(wordsum, flag)?;
            let wt = max_weight.or(s.max_weight()).unwrap_or(0);
            let f = qbracket_fast(m, &s, order);
            match quasimod_detect(&f, wt)? {
                Some(p) => Output::new(
                    json!({ "consistent": true, "order": order, "max_weight": wt, "form": p }),
                    format!("consistent with quasimodular to order {order}: {p}"),
                ),
                None => Output::new(
                    json!({ "consistent": false, "order": order, "max_weight": wt }),
                    format!("not consistent with a quasimodular form of weight <= {wt} to order {order}"),
                ),
            }
        }
        Cmd::Moller { wordsum, partition } => {
            let f = function(Some(wordsum), None, flag)?;
            match partition {
                Some(p) => {
                    let l = input::partition(p)?;
                    let v = moller_transform(&f, &l);
                    Output::new(
                        json!({ "partition": l, "value": v.to_string() }),
                        v.to_string(),
                    )
                }
                None => {
                    let g = PartitionFunction::custom("moller", move |l| moller_transform(&f, l));
                    let series = qbracket_enum(&g, order);
                    Output::new(
                        json!({ "order": order, "series": series }),
                        series.to_string(),
                    )
                }
            }
        }
        Cmd::Eval {
            wordsum,
            partition,
            function: spec,
        } => {
            let f = function(wordsum.as_deref(), spec.as_deref(), flag)?;
            let l = input::partition(partition)?;
            let v = f.eval(&l);
            Output::new(
                json!({ "partition": l, "value": v.to_string() }),
                v.to_string(),
            )
        }
        Cmd::Verify { suite } => {
            let names: Vec<&str> = if suite == "all" {
                suites::NAMES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut reports = Vec::new();
            let mut text = Vec::new();
            let mut all_ok = true;
            for name in names {
                let t = Instant::now();
                let cases = suites::run(name)
                    .ok_or_else(|| CliError::Input(format!("unknown suite {name:?}")))?;
                if cli.verbose {
                    eprintln!(
                        "{name}: {} cases in {:.1}s",
                        cases.len(),
                        t.elapsed().as_secs_f64()
                    );
                }
                let failed = cases.iter().filter(|c| !c.pass).count();
                all_ok &= failed == 0;
                let status = if failed == 0 { "PASS" } else { "FAIL" };
                text.push(format!(
                    "{status} {name}: {} of {} cases pass",
                    cases.len() - failed,
                    cases.len()
                ));
                for c in &cases {
                    if !c.pass || cli.verbose {
                        let s = if c.pass { "ok  " } else { "FAIL" };
                        text.push(
                            format!("  {s} {} {}", c.name, c.detail)
                                .trim_end()
                                .to_string(),
                        );
                    }
                }
                reports.push(json!({ "suite": name, "pass": failed == 0, "cases": cases }));
            }
            Output {
                json: json!({ "pass": all_ok, "suites": reports }),
                text: text.join("\n"),
                ok: all_ok,
            }
        }
        Cmd::Basis { weight, count } => {
            let words = basis_words(*weight);
            if *count {
                Output::new(json!(words.len()), words.len().to_string())
            } else {
                let ws: Vec<Value> = words
                    .iter()
                    .map(|w| json!(w.0.iter().map(|l| [l.k, l.d]).collect::<Vec<_>>()))
                    .collect();
                let text: Vec<String> = words.iter().map(|w| w.to_string()).collect();
                Output::new(Value::Array(ws), text.join("\n"))
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let t = Instant::now();
    let r = run(&cli);
    if cli.verbose {
        eprintln!("finished in {:.2}s", t.elapsed().as_secs_f64());
    }
    match r {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                );
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Refused(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
