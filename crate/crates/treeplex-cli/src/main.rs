//! `treeplex`: enumerate planar marked trees and their companion
//! structures, verify the poset results about them, and export Hasse
//! diagrams.

mod commands;
mod dot;
mod formats;
mod report;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = commands::Cli::parse();
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
