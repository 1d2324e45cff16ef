//! Argument parsing and the four subcommands.

use std::ffi::OsString;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use minuscule::verify::{self, Suite, SweepBounds};
use minuscule::{AmbientQuiver, MinusculeSpace, Partition, VertexSet};

use crate::render;
use crate::report::{ReportDoc, SummaryDoc};
use crate::schubert::SchubertSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "minuscule",
    version,
    about = "Singular and Gorenstein loci of minuscule Schubert varieties"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct Target {
    /// Space as <family><rank>/<node>, e.g. A6/4, D5/5, E6/1.
    #[arg(long)]
    pub space: String,
    /// Schubert variety as λ=…, partition=…, ideal=0x… or word=….
    pub schubert: Option<String>,
    /// Partition (type A only), e.g. 3,2,1,1.
    #[arg(long, conflicts_with_all = ["schubert", "ideal", "word"])]
    pub partition: Option<String>,
    /// Hex vertex mask, bit v-1 standing for vertex v.
    #[arg(long, conflicts_with_all = ["schubert", "word"])]
    pub ideal: Option<String>,
    /// Reduced word, comma separated, of an element of W^P.
    #[arg(long, conflicts_with = "schubert")]
    pub word: Option<String>,
    /// Write the document here instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DrawFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report for one Schubert variety (the whole space by default).
    Analyze {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// One summary per Schubert variety of the space.
    Enumerate {
        #[arg(long)]
        space: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Exhaustive invariant sweeps.
    Verify {
        /// A space, or `all` for the built-in list.
        #[arg(long, default_value = "all")]
        space: String,
        /// heap, imrac, gorenstein-locus, stability, partition, typea-oracles or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Layered drawing of a Schubert quiver.
    Render {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = DrawFormat::Ascii)]
        format: DrawFormat,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
        },
    }
}

fn parse_space(s: &str) -> Result<AmbientQuiver> {
    let space: MinusculeSpace = s.parse().with_context(|| format!("invalid space {s:?}"))?;
    Ok(AmbientQuiver::build(space)?)
}

impl Target {
    fn spec(&self) -> Result<SchubertSpec> {
        Ok(
            match (&self.schubert, &self.partition, &self.ideal, &self.word) {
                (Some(s), ..) => s.parse()?,
                (_, Some(p), ..) => SchubertSpec::Partition(p.parse::<Partition>()?),
                (_, _, Some(m), _) if m == "full" => SchubertSpec::Full,
                (_, _, Some(m), _) => SchubertSpec::Ideal(VertexSet::from_hex(m)?),
                (_, _, _, Some(w)) => SchubertSpec::Word(SchubertSpec::parse_word(w)?),
                _ => SchubertSpec::Full,
            },
        )
    }
}

/// Sends `doc` to `out` when given, otherwise returns it as stdout.
fn emit(doc: String, out: Option<&std::path::Path>) -> Result<String> {
    match out {
        Some(path) => {
            std::fs::write(path, doc).with_context(|| format!("writing {}", path.display()))?;
            Ok(String::new())
        }
        None => Ok(doc),
    }
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Analyze { target, format } => {
            let amb = parse_space(&target.space)?;
            let ideal = target.spec()?.resolve(&amb)?;
            let doc = ReportDoc::new(&ideal);
            let text = match format {
                ReportFormat::Json => doc.to_json(),
                ReportFormat::Text => format!("{}\n{}", doc.to_text(), render::ascii(&ideal)),
            };
            Ok(Outcome::ok(emit(text, target.out.as_deref())?))
        }
        Command::Enumerate { space, format, out } => {
            let amb = parse_space(&space)?;
            let docs: Vec<SummaryDoc> = amb
                .enumerate_ideals()
                .map(|i| SummaryDoc::new(&i))
                .collect();
            let text = match format {
                ReportFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&docs)?;
                    s.push('\n');
                    s
                }
                ReportFormat::Text => docs.iter().map(|d| d.to_line() + "\n").collect(),
            };
            Ok(Outcome::ok(emit(text, out.as_deref())?))
        }
        Command::Verify { space, suite, out } => {
            let suites = Suite::parse_list(&suite)?;
            let spaces = if space == "all" {
                SweepBounds::from_env()?.spaces()
            } else {
                vec![space
                    .parse::<MinusculeSpace>()
                    .with_context(|| format!("invalid space {space:?}"))?]
            };
            if spaces.is_empty() {
                bail!("no spaces to verify");
            }
            let report = verify::run(&spaces, &suites);
            let stdout = emit(report.to_string(), out.as_deref())?;
            Ok(Outcome {
                code: if report.passed() {
                    EXIT_OK
                } else {
                    EXIT_VERIFY_FAILED
                },
                stdout,
                stderr: String::new(),
            })
        }
        Command::Render { target, format } => {
            let amb = parse_space(&target.space)?;
            let ideal = target.spec()?.resolve(&amb)?;
            let text = match format {
                DrawFormat::Ascii => render::ascii(&ideal),
                DrawFormat::Svg => render::svg(&ideal),
            };
            Ok(Outcome::ok(emit(text, target.out.as_deref())?))
        }
    }
}
