use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use super::PathWitness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Procedure {
    /// Precolors a path of length `2k - 2`; palette `f(k, Δ) + 3 - k`.
    Main,
    /// Precolors the radius-`s` balls around the ends of a path of length
    /// `k + 2s + 1`; palette `f(k, Δ) - f(s, Δ)`.
    Improved,
}

impl fmt::Display for Procedure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Procedure::Main => "main",
            Procedure::Improved => "improved",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    Precolor,
    /// Vertices colored by decreasing distance to the center, first pass.
    Outer,
    /// Vertices near the center, colored last.
    Center,
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::Precolor => "precolor",
            Phase::Outer => "outer",
            Phase::Center => "center",
        })
    }
}

/// One vertex of the coloring order. Precolored vertices carry only their
/// color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub vertex: usize,
    pub phase: Phase,
    /// Root on the witness path (a vertex id).
    pub root: Option<usize>,
    /// Distance from the vertex to its root.
    pub d: Option<usize>,
    /// Distance from the root to the path center.
    pub dprime: Option<usize>,
    pub walks: Option<usize>,
    pub nice_count: Option<usize>,
    /// Nice count without the repeated-color clause.
    pub literal_nice: Option<usize>,
    pub analytic_bound: Option<usize>,
    pub available: Option<usize>,
    pub color: Option<usize>,
}

impl StepRecord {
    pub(crate) fn precolored(vertex: usize, color: usize) -> Self {
        StepRecord {
            vertex,
            phase: Phase::Precolor,
            root: None,
            d: None,
            dprime: None,
            walks: None,
            nice_count: None,
            literal_nice: None,
            analytic_bound: None,
            available: None,
            color: Some(color),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProcedureReport {
    pub procedure: Procedure,
    pub k: usize,
    pub s: Option<usize>,
    pub delta: usize,
    pub palette_size: usize,
    /// Minimum nice count every greedy step must reach.
    pub required_nice: usize,
    pub witness: PathWitness,
    /// Center vertex or vertices of the witness.
    pub center: Vec<usize>,
    /// Original vertices colored in the center phase.
    pub center_set_size: usize,
    /// Vertices of the augmented graph (original or not) that the main
    /// procedure's center region would contain; `None` for the other one.
    pub center_set_augmented_size: Option<usize>,
    /// Largest distance from a center-phase vertex to a precolored vertex,
    /// when that geometry is checked.
    pub center_to_precolor_max_distance: Option<usize>,
    pub steps: Vec<StepRecord>,
    pub colors_used: usize,
    pub success: bool,
}

/// A greedy step whose nice count fell below what the argument promises.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceShortfall {
    pub vertex: usize,
    pub nice_count: usize,
    pub required: usize,
    pub analytic_bound: Option<usize>,
}

impl ProcedureReport {
    pub fn greedy_steps(&self) -> impl Iterator<Item = &StepRecord> {
        self.steps.iter().filter(|s| s.phase != Phase::Precolor)
    }

    pub fn min_nice(&self) -> Option<usize> {
        self.greedy_steps().filter_map(|s| s.nice_count).min()
    }

    /// Steps where the nice count is below `required_nice` or below the
    /// step's own analytic bound.
    pub fn nice_shortfalls(&self) -> Vec<NiceShortfall> {
        self.greedy_steps()
            .filter_map(|s| {
                let nice = s.nice_count?;
                let below_bound = s.analytic_bound.is_some_and(|b| nice < b);
                (nice < self.required_nice || below_bound).then_some(NiceShortfall {
                    vertex: s.vertex,
                    nice_count: nice,
                    required: self.required_nice,
                    analytic_bound: s.analytic_bound,
                })
            })
            .collect()
    }

    /// Line-oriented rendering: `#`-prefixed header lines, then one
    /// `key=value` line per step.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        let _ = writeln!(out, "# procedure {}", self.procedure);
        let _ = writeln!(out, "# k {} s {} delta {}", self.k, opt(self.s), self.delta);
        let _ = writeln!(
            out,
            "# palette {} required_nice {}",
            self.palette_size, self.required_nice
        );
        let _ = writeln!(out, "# witness {}", join(&self.witness.vertices));
        let _ = writeln!(out, "# center {}", join(&self.center));
        let _ = writeln!(
            out,
            "# center_set {} augmented {}",
            self.center_set_size,
            opt(self.center_set_augmented_size)
        );
        if let Some(d) = self.center_to_precolor_max_distance {
            let _ = writeln!(out, "# center_to_precolor_max_distance {d}");
        }
        let _ = writeln!(
            out,
            "# success {} colors_used {} min_nice {}",
            self.success,
            self.colors_used,
            opt(self.min_nice())
        );
        for s in &self.steps {
            let _ = writeln!(
                out,
                "vertex={} phase={} root={} d={} dprime={} walks={} nice={} literal={} bound={} available={} color={}",
                s.vertex,
                s.phase,
                opt(s.root),
                opt(s.d),
                opt(s.dprime),
                opt(s.walks),
                opt(s.nice_count),
                opt(s.literal_nice),
                opt(s.analytic_bound),
                opt(s.available),
                opt(s.color),
            );
        }
        out
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
