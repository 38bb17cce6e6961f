//! Command-line surface: argument parsing and dispatch.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use crate::dot::poset_to_dot;
use crate::formats::{HypertreeJson, TreeJson, TriangulationJson};
use crate::report::{run_checks, Suite};
use treeplex_core::{
    associahedron, boolean_lattice, boolean_star, build_pnr_poset, cyclohedron, enumerate_ncht,
    enumerate_partial_triangulations, enumerate_planar_trees, enumerate_symmetric_triangulations,
    ncht_poset, sym_tri_poset, tri_poset,
};

#[derive(Parser)]
#[command(
    name = "treeplex",
    version,
    about = "Enumerate planar marked trees, verify their poset structure, and export Hasse diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// List a family as a JSON array in canonical order.
    Enumerate {
        /// Family to list.
        #[arg(long, value_enum)]
        kind: EnumerateKind,
        /// Size parameter: marks for trees and hypertrees, polygon corners
        /// for triangulations, half-polygon size for symmetric ones.
        #[arg(long)]
        n: u32,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute structural facts and report one verdict per check.
    Verify {
        /// Check group to run.
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Workload bound: checks that need more marks are skipped.
        #[arg(long, default_value_t = 4)]
        n: u32,
        /// Worker threads; the report bytes do not depend on this.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report rendering.
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a poset's Hasse diagram as Graphviz DOT.
    ExportDot {
        /// Poset to render.
        #[arg(long, value_enum)]
        kind: DotKind,
        /// Size parameter for the chosen poset.
        #[arg(long)]
        n: u32,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumerateKind {
    PlanarTrees,
    Triangulations,
    SymTriangulations,
    Ncht,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Planar,
    Polytopes,
    Reduced,
}

impl SuiteArg {
    fn to_filter(self) -> Option<Suite> {
        match self {
            SuiteArg::All => None,
            SuiteArg::Planar => Some(Suite::Planar),
            SuiteArg::Polytopes => Some(Suite::Polytopes),
            SuiteArg::Reduced => Some(Suite::Reduced),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DotKind {
    /// All planar trees on `n` marks.
    Pnr,
    /// Partial triangulations of the `n`-gon.
    Tri,
    /// Half-turn symmetric triangulations of the `2n`-gon.
    SymTri,
    /// Face lattice of the associahedron on `n+2` polygon corners.
    Assoc,
    /// Face lattice of the cyclohedron on `n` spokes.
    Cyclo,
    /// Boolean lattice on `n` atoms.
    Bool,
    /// Boolean lattice minus its bottom element.
    BoolStar,
    /// Noncrossing hypertrees on `n` vertices.
    Ncht,
}

fn guard(n: u32, lo: u32, hi: u32, what: &str) -> Result<()> {
    if !(lo..=hi).contains(&n) {
        bail!("--n {n} out of range: {what} supports {lo}..={hi}");
    }
    Ok(())
}

/// JSON enumeration body for `enumerate`.
pub fn enumerate_json(kind: EnumerateKind, n: u32) -> Result<String> {
    let body = match kind {
        EnumerateKind::PlanarTrees => {
            guard(n, 3, 6, "planar-trees")?;
            let records: Vec<TreeJson> = enumerate_planar_trees(n)
                .expect("range checked")
                .iter()
                .map(TreeJson::from)
                .collect();
            serde_json::to_string_pretty(&records)?
        }
        EnumerateKind::Triangulations => {
            guard(n, 3, 11, "triangulations")?;
            let records: Vec<TriangulationJson> = enumerate_partial_triangulations(n)
                .expect("range checked")
                .iter()
                .map(TriangulationJson::from)
                .collect();
            serde_json::to_string_pretty(&records)?
        }
        EnumerateKind::SymTriangulations => {
            guard(n, 2, 5, "sym-triangulations")?;
            let records: Vec<TriangulationJson> = enumerate_symmetric_triangulations(n)
                .expect("range checked")
                .iter()
                .map(TriangulationJson::from)
                .collect();
            serde_json::to_string_pretty(&records)?
        }
        EnumerateKind::Ncht => {
            guard(n, 3, 7, "ncht")?;
            let records: Vec<HypertreeJson> = enumerate_ncht(n)
                .expect("range checked")
                .iter()
                .map(HypertreeJson::from)
                .collect();
            serde_json::to_string_pretty(&records)?
        }
    };
    Ok(body + "\n")
}

/// DOT rendering body for `export-dot`.
pub fn export_dot_string(kind: DotKind, n: u32) -> Result<String> {
    let (name, poset) = match kind {
        DotKind::Pnr => {
            guard(n, 3, 4, "pnr")?;
            (format!("pnr-{n}"), build_pnr_poset(n).expect("range checked"))
        }
        DotKind::Tri => {
            guard(n, 3, 7, "tri")?;
            (format!("tri-{n}"), tri_poset(n).expect("range checked"))
        }
        DotKind::SymTri => {
            guard(n, 2, 4, "sym-tri")?;
            (format!("sym-tri-{n}"), sym_tri_poset(n).expect("range checked"))
        }
        DotKind::Assoc => {
            guard(n, 2, 6, "assoc")?;
            (format!("assoc-{n}"), associahedron(n).expect("range checked"))
        }
        DotKind::Cyclo => {
            guard(n, 2, 4, "cyclo")?;
            (format!("cyclo-{n}"), cyclohedron(n).expect("range checked"))
        }
        DotKind::Bool => {
            guard(n, 0, 6, "bool")?;
            (format!("bool-{n}"), boolean_lattice(n))
        }
        DotKind::BoolStar => {
            guard(n, 1, 6, "bool-star")?;
            (format!("bool-star-{n}"), boolean_star(n))
        }
        DotKind::Ncht => {
            guard(n, 3, 5, "ncht")?;
            (format!("ncht-{n}"), ncht_poset(n).expect("range checked"))
        }
    };
    Ok(poset_to_dot(&name, &poset))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Execute a parsed command line; the returned code becomes the process
/// exit status.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Enumerate { kind, n, out } => {
            let body = enumerate_json(kind, n)?;
            emit(&body, out.as_ref())?;
            Ok(0)
        }
        Command::Verify { suite, n, jobs, format, out } => {
            if jobs == 0 {
                bail!("--jobs must be at least 1");
            }
            let report = run_checks(suite.to_filter(), n, jobs);
            let body = match format {
                FormatArg::Text => report.to_text(),
                FormatArg::Json => report.to_json(),
            };
            emit(&body, out.as_ref())?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::ExportDot { kind, n, out } => {
            let body = export_dot_string(kind, n)?;
            emit(&body, out.as_ref())?;
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arguments_parse() {
        let cli = Cli::try_parse_from([
            "treeplex",
            "enumerate",
            "--kind",
            "planar-trees",
            "--n",
            "3",
        ])
        .unwrap();
        assert!(matches!(
            cli.command,
            Command::Enumerate { kind: EnumerateKind::PlanarTrees, n: 3, out: None }
        ));
        let cli = Cli::try_parse_from([
            "treeplex", "verify", "--suite", "reduced", "--n", "5", "--jobs", "4",
        ])
        .unwrap();
        assert!(matches!(
            cli.command,
            Command::Verify { suite: SuiteArg::Reduced, n: 5, jobs: 4, .. }
        ));
        assert!(Cli::try_parse_from(["treeplex", "enumerate", "--kind", "nonsense", "--n", "3"])
            .is_err());
    }

    #[test]
    fn enumeration_bodies() {
        let trees: Vec<TreeJson> =
            serde_json::from_str(&enumerate_json(EnumerateKind::PlanarTrees, 3).unwrap()).unwrap();
        assert_eq!(trees.len(), 5);
        let tris: Vec<TriangulationJson> =
            serde_json::from_str(&enumerate_json(EnumerateKind::Triangulations, 4).unwrap())
                .unwrap();
        assert_eq!(tris.len(), 3);
        let sym: Vec<TriangulationJson> =
            serde_json::from_str(&enumerate_json(EnumerateKind::SymTriangulations, 2).unwrap())
                .unwrap();
        assert_eq!(sym.len(), 3);
        let hts: Vec<HypertreeJson> =
            serde_json::from_str(&enumerate_json(EnumerateKind::Ncht, 3).unwrap()).unwrap();
        assert_eq!(hts.len(), 4);
    }

    #[test]
    fn guards_name_their_ranges() {
        let err = enumerate_json(EnumerateKind::PlanarTrees, 9).unwrap_err();
        assert!(err.to_string().contains("3..=6"), "{err}");
        let err = export_dot_string(DotKind::Pnr, 5).unwrap_err();
        assert!(err.to_string().contains("3..=4"), "{err}");
    }

    #[test]
    fn dot_bodies() {
        let dot = export_dot_string(DotKind::Pnr, 3).unwrap();
        assert_eq!(dot.matches(" -> ").count(), 6);
        let dot = export_dot_string(DotKind::BoolStar, 3).unwrap();
        assert_eq!(dot.matches(" -> ").count(), 9);
    }
}
