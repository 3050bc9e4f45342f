use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use famspring::exceptional::{lookup, records_of, ExceptionalType};
use famspring::report::{class_report, exceptional_section, fourier_section, parse_flavor, sequence_report, Report};
use famspring::springer::GroupKind;
use famspring::verify::{run, Bounds, Scope};

#[derive(Parser)]
#[command(name = "famspring", version, about = "Families, Springer correspondence and nonabelian Fourier matrices")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Sp,
    So,
    Gl,
}

impl From<Group> for GroupKind {
    fn from(g: Group) -> Self {
        match g {
            Group::Sp => GroupKind::Symplectic,
            Group::So => GroupKind::Orthogonal,
            Group::Gl => GroupKind::GeneralLinear,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the pipeline on a unipotent class or a raw sequence.
    Class {
        #[arg(long, value_enum)]
        group: Option<Group>,
        /// Jordan type, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "sequence", requires = "group")]
        partition: Option<Vec<u32>>,
        /// Sequence entries, comma separated.
        #[arg(long, value_delimiter = ',', requires = "flavor")]
        sequence: Option<Vec<u32>>,
        /// C or BD.
        #[arg(long)]
        flavor: Option<String>,
        /// Sequence length minus one.
        #[arg(long)]
        n_override: Option<usize>,
    },
    /// Batch verification over classes and seeded random sequences.
    Verify {
        scope: Scope,
        #[arg(long)]
        max_rank: u32,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Fourier matrix of a catalog group.
    Fourier {
        #[arg(long)]
        group: String,
    },
    /// Exceptional family tables.
    Exceptional {
        #[arg(long = "type")]
        ty: ExceptionalType,
        #[arg(long)]
        class: Option<String>,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let report = match build(cli.command, command) {
        Ok(r) => r,
        Err(msg) => return usage(msg),
    };
    match cli.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    if let Some(f) = report.first_failure() {
        eprintln!("verification failed: {}", f.claim);
        if let Some(w) = &f.witness {
            eprintln!("witness: {w}");
        }
    }
    ExitCode::from(status(&report))
}

/// 1 when any verification fails, 0 otherwise.
fn status(report: &Report) -> u8 {
    u8::from(report.failed())
}

fn build(cmd: Command, command: Vec<String>) -> Result<Report, String> {
    match cmd {
        Command::Class {
            group,
            partition,
            sequence,
            flavor,
            n_override,
        } => {
            if let Some(entries) = sequence {
                let flavor = flavor.as_deref().and_then(parse_flavor).ok_or("--flavor must be C or BD")?;
                return sequence_report(entries, flavor, command).map_err(|e| e.to_string());
            }
            match (group, partition) {
                (Some(g), Some(p)) => class_report(g.into(), p, n_override, command).map_err(|e| e.to_string()),
                _ => Err("give --group with --partition, or --sequence with --flavor".into()),
            }
        }
        Command::Verify {
            scope,
            max_rank,
            samples,
            seed,
        } => Ok(run(
            scope,
            &Bounds {
                max_rank,
                samples,
                seed,
            },
            command,
        )),
        Command::Fourier { group } => {
            let (results, vs) = fourier_section(&group).map_err(|e| e.to_string())?;
            let mut report = Report::new(command, json!({ "group": group }));
            report.results = results;
            report.verifications = vs;
            Ok(report)
        }
        Command::Exceptional { ty, class } => {
            let records = match &class {
                Some(c) => vec![lookup(ty, c).map_err(|e| e.to_string())?],
                None => records_of(ty),
            };
            let (results, vs) = exceptional_section(ty, &records);
            let mut report = Report::new(command, json!({ "type": ty, "class": class }));
            report.results = results;
            report.verifications = vs;
            Ok(report)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use famspring::report::Verification;

    #[test]
    fn failed_verification_exits_one() {
        let mut r = Report::new(vec![], json!({}));
        r.verifications.push(Verification::pass("a"));
        r.verifications.push(Verification::reported("b", "note".into()));
        assert_eq!(status(&r), 0);
        r.verifications.push(Verification::fail("c", json!({ "x": 1 })));
        assert_eq!(status(&r), 1);
    }
}
