//! Machine-readable and human-readable run reports.
//!
//! The JSON form is byte-stable for identical inputs and version, except for the
//! values inside each level's `timings` object.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::frobenius::{FrobeniusLadder, LMethod, LevelRecord};
use crate::ideal::{Engine, Path};
use crate::poly::Polynomial;
use crate::problem::{Preset, ProblemFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProblemEcho {
    pub preset: Option<Preset>,
    pub characteristic: u32,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub e_max: u32,
    pub l_method: LMethod,
    pub engine: &'static str,
}

impl ProblemEcho {
    pub fn new(problem: &ProblemFile, e_max: u32, l_method: LMethod, engine: Engine) -> ProblemEcho {
        ProblemEcho {
            preset: problem.preset,
            characteristic: problem.characteristic(),
            variables: problem.variables().to_vec(),
            generators: problem.generators.iter().map(Polynomial::to_string).collect(),
            e_max,
            l_method,
            engine: match engine {
                Engine::Auto => "auto",
                Engine::Groebner => "groebner",
            },
        }
    }
}

/// Outcome of re-running a level on the Gröbner path.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossCheck {
    pub path: Path,
    pub agrees: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timings {
    pub k_ms: f64,
    pub l_ms: f64,
    pub check_ms: f64,
    pub total_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LevelReport {
    pub e: u32,
    pub q: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<Path>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_generator_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_generators: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_generator_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contained_raw: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contained_mod_bracket: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<CrossCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl LevelReport {
    pub fn from_record(rec: &LevelRecord) -> LevelReport {
        let t = rec.timings;
        LevelReport {
            e: rec.e,
            q: rec.q,
            path: Some(rec.path),
            k_generator_count: Some(rec.k.generators().len()),
            k_generators: Some(rec.k.generators().iter().map(Polynomial::to_string).collect()),
            l_generator_count: Some(rec.l.generators().len()),
            contained_raw: Some(rec.contained_raw),
            contained_mod_bracket: Some(rec.contained_mod_bracket),
            witnesses: Some(rec.witnesses.iter().map(Polynomial::to_string).collect()),
            cross_check: None,
            error: None,
            timings: Some(Timings {
                k_ms: micros(t.k_ms),
                l_ms: micros(t.l_ms),
                check_ms: micros(t.check_ms),
                total_ms: micros(t.k_ms + t.l_ms + t.check_ms),
            }),
        }
    }

    pub fn failed(e: u32, q: u64, error: String) -> LevelReport {
        LevelReport {
            e,
            q,
            path: None,
            k_generator_count: None,
            k_generators: None,
            l_generator_count: None,
            contained_raw: None,
            contained_mod_bracket: None,
            witnesses: None,
            cross_check: None,
            error: Some(error),
            timings: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub problem: ProblemEcho,
    pub levels: Vec<LevelReport>,
    pub version: String,
}

impl Report {
    pub fn new(problem: ProblemEcho, ladder: &FrobeniusLadder) -> Report {
        let p = problem.characteristic as u64;
        let mut levels: Vec<LevelReport> = ladder.levels.iter().map(LevelReport::from_record).collect();
        for f in &ladder.failures {
            levels.push(LevelReport::failed(f.e, p.saturating_pow(f.e), f.error.to_string()));
        }
        levels.sort_by_key(|l| l.e);
        Report {
            problem,
            levels,
            version: format!("frobenius-core {}", crate::VERSION),
        }
    }

    pub fn has_errors(&self) -> bool {
        self.levels.iter().any(|l| l.error.is_some())
    }
}

/// Milliseconds rounded to whole microseconds.
fn micros(ms: f64) -> f64 {
    (ms * 1000.0).round() / 1000.0
}

pub fn render_report(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report)
                .map_err(|e| crate::error::Error::Internal(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => Ok(render_text(report)),
    }
}

fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let pr = &r.problem;
    let _ = writeln!(
        out,
        "ideal ({}) in GF({})[{}]{}",
        pr.generators.join(", "),
        pr.characteristic,
        pr.variables.join(", "),
        pr.preset.map(|p| format!("  [{p}]")).unwrap_or_default()
    );
    let _ = writeln!(
        out,
        "levels 1..={}, L via {}, engine {}",
        pr.e_max,
        match pr.l_method {
            LMethod::Recursion => "recursion",
            LMethod::BruteForce => "brute force",
        },
        pr.engine
    );
    let _ = writeln!(
        out,
        "{:>3} {:>8} {:<9} {:>5} {:>5} {:>8} {:>12} {:>10}  witnesses",
        "e", "q", "path", "#K", "#L", "K<=L", "K<=L+I[q]", "ms"
    );
    for l in &r.levels {
        if let Some(err) = &l.error {
            let _ = writeln!(out, "{:>3} {:>8} error: {err}", l.e, l.q);
            continue;
        }
        let path = l.path.map(|p| p.to_string()).unwrap_or_default();
        let ms = l.timings.as_ref().map(|t| t.total_ms).unwrap_or(0.0);
        let _ = writeln!(
            out,
            "{:>3} {:>8} {:<9} {:>5} {:>5} {:>8} {:>12} {:>10.1}  {}",
            l.e,
            l.q,
            path,
            l.k_generator_count.unwrap_or(0),
            l.l_generator_count.unwrap_or(0),
            yes_no(l.contained_raw),
            yes_no(l.contained_mod_bracket),
            ms,
            l.witnesses.as_deref().unwrap_or_default().join(", ")
        );
        if let Some(c) = &l.cross_check {
            let _ = writeln!(
                out,
                "    cross-check on {} path: {}{}",
                c.path,
                if c.agrees { "agrees" } else { "DISAGREES" },
                c.error.as_deref().map(|e| format!(" ({e})")).unwrap_or_default()
            );
        }
    }
    let _ = writeln!(out, "{}", r.version);
    out
}
