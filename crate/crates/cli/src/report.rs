//! Output payloads. Every vertex is reported by its label.

use serde::Serialize;
use tollhull::solver::{Phase, TraceRecord};
use tollhull::{AtomDecomposition, Block, Graph, HullResult, VertexSet};

pub fn labels(g: &Graph, s: &VertexSet) -> Vec<String> {
    g.labels_of(s)
}

/// Space-separated labels, `-` when empty.
pub fn words(labels: &[String]) -> String {
    if labels.is_empty() {
        "-".into()
    } else {
        labels.join(" ")
    }
}

#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub command: &'static str,
    pub input: InputDigest,
    pub result: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEntry>>,
}

#[derive(Serialize)]
pub struct InputDigest {
    pub source: String,
    pub order: usize,
    pub size: usize,
    pub sha256: String,
}

#[derive(Serialize)]
pub struct FamilyEntry {
    pub interior: Vec<String>,
    #[serde(rename = "type")]
    pub kind: u8,
    pub granularity: usize,
    pub chosen: Vec<String>,
    pub rule: Option<u8>,
}

#[derive(Serialize)]
pub struct HullPayload {
    pub hull_number: usize,
    pub hull_set: Vec<String>,
    pub path: &'static str,
    pub family: Vec<FamilyEntry>,
    pub extreme: Vec<String>,
    pub merge_iterations: usize,
    pub diagnostics: Vec<String>,
}

impl HullPayload {
    pub fn new(g: &Graph, r: &HullResult) -> Self {
        HullPayload {
            hull_number: r.hull_number,
            hull_set: labels(g, &r.hull_set),
            path: match r.path {
                tollhull::solver::SolvePath::Complete => "complete",
                tollhull::solver::SolvePath::Prime => "prime",
                tollhull::solver::SolvePath::Decomposition => "decomposition",
            },
            family: r
                .family
                .iter()
                .map(|b| FamilyEntry {
                    interior: labels(g, &b.interior),
                    kind: b.kind.number(),
                    granularity: b.granularity,
                    chosen: labels(g, &b.chosen),
                    rule: b.selection.choice.map(|c| c.number()),
                })
                .collect(),
            extreme: labels(g, &r.extreme),
            merge_iterations: r.merge_iterations(),
            diagnostics: r.diagnostics.clone(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("hull_number {}\nhull_set {}\npath {}\n", self.hull_number, self.hull_set.join(" "), self.path);
        for b in &self.family {
            let rule = b.rule.map_or("-".to_string(), |r| r.to_string());
            out += &format!(
                "block {} type {} granularity {} chosen {} rule {rule}\n",
                b.interior.join(","),
                b.kind,
                b.granularity,
                b.chosen.join(",")
            );
        }
        out += &format!("extreme {}\nmerge_iterations {}\n", words(&self.extreme), self.merge_iterations);
        for d in &self.diagnostics {
            out += &format!("diagnostic {d}\n");
        }
        out
    }
}

#[derive(Serialize)]
pub struct TraceEntry {
    pub phase: &'static str,
    pub iteration: usize,
    pub f_circ: Option<Vec<String>>,
    pub f_prime: Vec<Vec<String>>,
    pub m_prime: Vec<Vec<String>>,
    pub f_bullet: Vec<String>,
    #[serde(rename = "type")]
    pub kind: Option<u8>,
    pub k: Option<usize>,
    pub rule: Option<u8>,
    pub chosen: Vec<String>,
    pub note: Option<String>,
}

impl TraceEntry {
    pub fn new(g: &Graph, t: &TraceRecord) -> Self {
        TraceEntry {
            phase: match t.phase {
                Phase::Initial => "initial",
                Phase::Merge => "merge",
            },
            iteration: t.iteration,
            f_circ: t.f_circ.as_ref().map(|s| labels(g, s)),
            f_prime: t.f_prime.iter().map(|s| labels(g, s)).collect(),
            m_prime: t.m_prime.iter().map(|s| labels(g, s)).collect(),
            f_bullet: labels(g, &t.f_bullet),
            kind: t.kind.map(|k| k.number()),
            k: t.k,
            rule: t.choice.map(|c| c.number()),
            chosen: labels(g, &t.chosen),
            note: t.note.clone(),
        }
    }

    pub fn text(&self) -> String {
        let sets = |v: &[Vec<String>]| {
            if v.is_empty() {
                "-".to_string()
            } else {
                v.iter().map(|s| s.join(",")).collect::<Vec<_>>().join(" ")
            }
        };
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let mut line = format!(
            "trace {} {} block {} type {} k {} rule {} chosen {}",
            self.phase,
            self.iteration,
            self.f_bullet.join(","),
            opt(self.kind.map(|k| k.to_string())),
            opt(self.k.map(|k| k.to_string())),
            opt(self.rule.map(|r| r.to_string())),
            if self.chosen.is_empty() { "-".into() } else { self.chosen.join(",") },
        );
        if let Some(c) = &self.f_circ {
            line += &format!(" f_circ {} f_prime {} m_prime {}", c.join(","), sets(&self.f_prime), sets(&self.m_prime));
        }
        if let Some(n) = &self.note {
            line += &format!(" note {n}");
        }
        line
    }
}

#[derive(Serialize)]
pub struct AtomEntry {
    pub vertices: Vec<String>,
    pub border: Vec<String>,
    pub interior: Vec<String>,
    pub extremal: bool,
}

#[derive(Serialize)]
pub struct AtomsPayload {
    pub prime: bool,
    pub atoms: Vec<AtomEntry>,
}

impl AtomsPayload {
    pub fn new(g: &Graph, d: &AtomDecomposition) -> Self {
        AtomsPayload {
            prime: d.is_prime(),
            atoms: d
                .atoms
                .iter()
                .zip(&d.extremal)
                .map(|(a, &extremal)| {
                    let b = Block::of(g, &a.vertices);
                    AtomEntry {
                        vertices: labels(g, &a.vertices),
                        border: labels(g, &b.border),
                        interior: labels(g, &b.interior),
                        extremal,
                    }
                })
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("prime {}\n", self.prime);
        for a in &self.atoms {
            out += &format!(
                "atom {}{}\n",
                a.vertices.join(","),
                if a.extremal { " extremal" } else { "" }
            );
        }
        out
    }
}

#[derive(Serialize)]
pub struct IntervalPayload {
    pub x: String,
    pub y: String,
    pub interval: Vec<String>,
}

#[derive(Serialize)]
pub struct ClosurePayload {
    pub set: Vec<String>,
    pub interval: Vec<String>,
    pub hull: Vec<String>,
    pub convex: bool,
    pub concave: bool,
}

#[derive(Serialize)]
pub struct ExtremePayload {
    pub extreme: Vec<String>,
}

#[derive(Serialize)]
pub struct EnumeratePayload {
    pub hull_number: usize,
    pub count: usize,
    pub sets: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: &'static str,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyPayload {
    pub solver: usize,
    pub oracle: Option<usize>,
    pub agree: bool,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

impl VerifyPayload {
    pub fn text(&self) -> String {
        let mut out = format!(
            "solver {}\noracle {}\n",
            self.solver,
            self.oracle.map_or("skipped".to_string(), |o| o.to_string())
        );
        for c in &self.checks {
            out += &format!("check {} {} {}\n", c.name, c.status, c.detail);
        }
        for w in &self.warnings {
            out += &format!("warning {w}\n");
        }
        out += if self.agree { "verdict agree\n" } else { "verdict MISMATCH\n" };
        out
    }
}

#[derive(Serialize)]
pub struct GenPayload {
    pub model: String,
    pub seed: u64,
    pub order: usize,
    pub size: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub written_to: Option<String>,
}
