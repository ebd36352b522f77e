use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyphor::orthoscheme::Family;
use hyphor::report::{parse_p_list, run_curve, run_popt, run_table, run_validate, run_volume, CurveKind};

#[derive(Parser)]
#[command(name = "hyphor", version, about = "Hyp-hor packing densities of frustum orthoscheme tilings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Densities of one family as CSV
    Table {
        /// 4,4 | 6,3 | 3,6
        #[arg(long)]
        family: Family,
        /// comma list or inclusive integer range lo..hi
        #[arg(long)]
        p: String,
    },
    /// Sampled density curve as CSV
    Curve {
        /// 2d-type1 | 2d-type2 | 2d-horo | 2d-surface | 3d-36
        #[arg(long)]
        kind: CurveKind,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        step: f64,
    },
    /// Optimal real p of the [p,3,6] family as JSON
    Popt,
    /// Admissibility of a ball pair as JSON (defaults: maximal balls)
    Validate {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        r: f64,
        #[arg(long, allow_negative_numbers = true)]
        s: Option<f64>,
        #[arg(long)]
        h: Option<f64>,
    },
    /// Volume of a frustum orthoscheme as JSON
    Volume {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        r: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.cmd {
        Cmd::Table { family, p } => match parse_p_list(&p) {
            Ok(ps) => run_table(family, &ps),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        Cmd::Curve { kind, from, to, step } => run_curve(kind, from, to, step),
        Cmd::Popt => run_popt().map(|s| s + "\n"),
        Cmd::Validate { p, q, r, s, h } => run_validate(p, q, r, s, h).map(|s| s + "\n"),
        Cmd::Volume { p, q, r } => run_volume(p, q, r).map(|s| s + "\n"),
    };
    match out {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
