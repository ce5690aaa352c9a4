mod commands;
mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pcval::{Error, ErrorKind};

use commands::{Report, Status};
use config::{ConfigFile, Format, SessionConfig};

/// Valuations on K(X) from pseudo-convergent sequences over K = Q(t^Q).
#[derive(Parser, Debug)]
#[command(name = "pcval", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Coefficient field: `q` or `fp:<p>`.
    #[arg(long, global = true)]
    backend: Option<String>,
    /// Largest sequence index any computation may touch (at least 8).
    #[arg(long, global = true)]
    max_index: Option<usize>,
    /// Depth for definitional checks and scans.
    #[arg(long, global = true)]
    depth: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// JSON file with default settings.
    #[arg(long, global = true, env = "PCVAL_CONFIG")]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SeqArg {
    /// Fixture name (E1..E5, E1^2) or `@file` holding a JSON sequence spec.
    #[arg(long)]
    pub seq: String,
}

#[derive(Args, Debug)]
pub struct FnArg {
    /// Rational function in X over K, e.g. "(X - t)/t^(1/2)".
    #[arg(long = "fn")]
    pub function: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Valuation of an element of K.
    Val { expr: String },
    /// φ(x) and its valuation.
    Eval {
        #[command(flatten)]
        f: FnArg,
        #[arg(long)]
        at: String,
    },
    /// The law v(φ(sₙ)) = λδₙ + γ, with a scan past the certification index.
    Profile {
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        f: FnArg,
        /// Scan rows to print past the certification index.
        #[arg(long, default_value_t = 5)]
        rows: usize,
    },
    /// The dominant degree λ.
    Degdom {
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        f: FnArg,
    },
    /// w_E(φ) and membership in W_E.
    We {
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        f: FnArg,
    },
    /// v_E(φ) and membership in V_E.
    Ve {
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        f: FnArg,
    },
    /// Membership in V_E or W_E, checked against the definitional oracle.
    Member {
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        f: FnArg,
        #[arg(long, default_value = "V")]
        ring: String,
        /// Also run the definitional oracle to `--depth`.
        #[arg(long)]
        check: bool,
    },
    /// Rank of V_E, with the minimal polynomial and overring when rank 2.
    Rank {
        #[command(flatten)]
        seq: SeqArg,
    },
    /// Whether two sequences are equivalent.
    Equiv {
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long)]
        seq2: String,
        /// Also run the definitional oracle to `--depth`.
        #[arg(long)]
        check: bool,
    },
    /// The monomial valuation v_{α,δ}(φ).
    Monomial {
        #[command(flatten)]
        f: FnArg,
        #[arg(long)]
        alpha: String,
        /// Rational, `a + b*sqrt(d)`, or `inf`.
        #[arg(long)]
        delta: String,
    },
    /// The linear law of v(φ(x)) on an annulus θ₁ < v(x − s) < θ₂.
    Annulus {
        #[command(flatten)]
        f: FnArg,
        #[arg(long)]
        center: String,
        #[arg(long)]
        from: String,
        /// Rational, `a + b*sqrt(d)`, or `inf`.
        #[arg(long)]
        to: String,
    },
    /// Whether V_E lies in Ω(s, γ), and the function c/(X − s)^k with Ω = B(c/(X − s)^k).
    Omega {
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long)]
        center: String,
        #[arg(long)]
        radius: String,
    },
    /// Tracks membership in W_{sₙ} against V_E.
    Converge {
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long = "fn", required = true)]
        functions: Vec<String>,
    },
    /// Breadths at which w(φ) reaches a target with positive slope.
    Enumerate {
        #[command(flatten)]
        f: FnArg,
        #[arg(long)]
        target: String,
        #[arg(long = "center", default_value = "0")]
        centers: Vec<String>,
    },
    /// A constructible set holding V_E and none of the sample rings.
    Separate {
        #[command(flatten)]
        seq: SeqArg,
        /// Functions in V_E cutting out the closed set B(Φ).
        #[arg(long = "fn", required = true)]
        functions: Vec<String>,
        #[arg(long = "sample")]
        sample: Vec<String>,
    },
    /// The residue-field separator ψ for the ball of radius δ about s (F_p backend).
    ResidueSep {
        #[arg(long)]
        center: String,
        #[arg(long)]
        delta: String,
    },
    /// Integrality of φ on a probe grid against w_E(φ) ≥ 0 on a sample.
    IntrCheck {
        #[command(flatten)]
        f: FnArg,
        #[arg(long = "sample")]
        sample: Vec<String>,
    },
    /// Lists the named sequences.
    Fixtures,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Val { .. } => "val",
            Command::Eval { .. } => "eval",
            Command::Profile { .. } => "profile",
            Command::Degdom { .. } => "degdom",
            Command::We { .. } => "we",
            Command::Ve { .. } => "ve",
            Command::Member { .. } => "member",
            Command::Rank { .. } => "rank",
            Command::Equiv { .. } => "equiv",
            Command::Monomial { .. } => "monomial",
            Command::Annulus { .. } => "annulus",
            Command::Omega { .. } => "omega",
            Command::Converge { .. } => "converge",
            Command::Enumerate { .. } => "enumerate",
            Command::Separate { .. } => "separate",
            Command::ResidueSep { .. } => "residue-sep",
            Command::IntrCheck { .. } => "intr-check",
            Command::Fixtures => "fixtures",
        }
    }
}

fn session(g: &Global) -> Result<SessionConfig, Error> {
    let mut cfg = SessionConfig::default();
    cfg.apply(SessionConfig::load(g.config.as_deref())?)?;
    cfg.apply(ConfigFile { backend: g.backend.clone(), max_index: g.max_index, depth: g.depth, format: g.format })?;
    Ok(cfg)
}

fn exit_code(e: &Error) -> u8 {
    match e.kind() {
        ErrorKind::Precondition => 2,
        ErrorKind::Parse => 3,
        ErrorKind::Uncertified => 4,
    }
}

/// Prints to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let format = cli.global.format.unwrap_or(Format::Text);
    let outcome = session(&cli.global).and_then(|cfg| commands::run(&cli.command, &cfg).map(|r| (cfg, r)));
    match outcome {
        Ok((cfg, Report { text, json, status })) => {
            match cfg.format {
                Format::Text => emit(&text),
                Format::Json => {
                    let doc = serde_json::json!({
                        "command": name,
                        "config": cfg,
                        "status": status,
                        "result": json,
                    });
                    emit(&serde_json::to_string_pretty(&doc).expect("serializable report"));
                }
            }
            match status {
                Status::Computed => ExitCode::SUCCESS,
                Status::Undecided => ExitCode::from(4),
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            match format {
                Format::Text => eprintln!("error: {e}"),
                Format::Json => {
                    let doc = serde_json::json!({
                        "command": name,
                        "status": "error",
                        "exit_code": code,
                        "error": e.to_string(),
                    });
                    emit(&serde_json::to_string_pretty(&doc).expect("serializable error"));
                }
            }
            ExitCode::from(code)
        }
    }
}
