//! JSON schemas for enumeration output and verification reports.

use serde::{Deserialize, Serialize};
use treeplex_core::{NoncrossingHypertree, PartialTriangulation, PlanarTree};

/// One vertex of a serialized planar tree.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexJson {
    pub id: String,
    /// Mark in `1..=n`, or `null` for unmarked vertices.
    pub label: Option<u32>,
    /// Neighbor ids in counterclockwise order.
    pub rotation: Vec<String>,
}

/// A planar tree with its canonical code.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TreeJson {
    pub n: u32,
    pub code: String,
    pub vertices: Vec<VertexJson>,
}

impl From<&PlanarTree> for TreeJson {
    fn from(t: &PlanarTree) -> Self {
        let vertices = (0..t.vertex_count())
            .map(|v| VertexJson {
                id: format!("v{v}"),
                label: t.label(v),
                rotation: t.rotation(v).iter().map(|w| format!("v{w}")).collect(),
            })
            .collect();
        TreeJson { n: t.n(), code: t.canonical_code(), vertices }
    }
}

/// A partial triangulation of a convex polygon.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TriangulationJson {
    pub ngon: u32,
    pub diagonals: Vec<(u32, u32)>,
}

impl From<&PartialTriangulation> for TriangulationJson {
    fn from(pt: &PartialTriangulation) -> Self {
        TriangulationJson { ngon: pt.ngon(), diagonals: pt.diagonals().to_vec() }
    }
}

/// A noncrossing hypertree.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HypertreeJson {
    pub n: u32,
    pub hyperedges: Vec<Vec<u32>>,
}

impl From<&NoncrossingHypertree> for HypertreeJson {
    fn from(h: &NoncrossingHypertree) -> Self {
        HypertreeJson { n: h.n(), hyperedges: h.hyperedges().to_vec() }
    }
}

/// Outcome of a single verification check.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub expected: String,
    pub computed: String,
    /// `"pass"`, `"fail"`, or `"skip"` (gated out by the `--n` bound).
    pub verdict: String,
}

/// A full verification report.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub n_max: u32,
    pub checks: Vec<CheckResult>,
    /// `"pass"` iff no check failed.
    pub overall: String,
}

impl Report {
    pub fn new(suite: String, n_max: u32, checks: Vec<CheckResult>) -> Self {
        let overall = if checks.iter().any(|c| c.verdict == "fail") {
            "fail".to_string()
        } else {
            "pass".to_string()
        };
        Report { suite, n_max, checks, overall }
    }

    pub fn passed(&self) -> bool {
        self.overall == "pass"
    }

    /// Stable human-readable rendering; one line per check.  Scheduling
    /// details (thread count) are deliberately absent so the bytes depend
    /// only on the requested suite and bound.
    pub fn to_text(&self) -> String {
        let mut out = format!("verify suite={} n={}\n", self.suite, self.n_max);
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(0);
        for c in &self.checks {
            out.push_str(&format!(
                "{:<width$}  {:<4}  expected {} / computed {}\n",
                c.name,
                c.verdict,
                c.expected,
                c.computed,
                width = width
            ));
        }
        out.push_str(&format!("overall {}\n", self.overall));
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
