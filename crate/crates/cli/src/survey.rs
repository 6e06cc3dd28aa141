use std::fmt::Write as _;

use powercolor::bounds;
use powercolor::{
    exact_gap, from_graph6, run_improved_procedure, run_main_procedure, verify_coloring, Graph,
    OracleLimits, PartialColoring, ProcedureError, ProcedureReport,
};
use rayon::prelude::*;

use crate::error::{CliError, Kind};

pub const HEADER: &str = "graph6,n,delta,diameter,k,chi,gap,procedure_used,palette,ok";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub graph6: String,
    pub n: usize,
    pub delta: usize,
    pub diameter: Option<usize>,
    pub k: usize,
    pub chi: Option<usize>,
    pub gap: Option<String>,
    pub procedure_used: &'static str,
    pub palette: Option<usize>,
    pub ok: bool,
}

impl SurveyRow {
    pub fn to_csv(&self) -> String {
        let opt = |v: &Option<usize>| v.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.graph6,
            self.n,
            self.delta,
            opt(&self.diameter),
            self.k,
            opt(&self.chi),
            self.gap.clone().unwrap_or_default(),
            self.procedure_used,
            opt(&self.palette),
            self.ok
        )
    }
}

/// Which procedure applies: the ball procedure with the largest `s` the
/// diameter allows, else the path procedure.
fn choose_procedure(k: usize, delta: usize, diameter: usize) -> Option<Option<usize>> {
    if delta < 3 || k < 3 {
        return None;
    }
    if let Some(max_s) = bounds::max_improved_s(k) {
        if let Some(s) = (1..=max_s).rev().find(|&s| diameter > k + 2 * s) {
            return Some(Some(s));
        }
    }
    (diameter + 2 >= 2 * k).then_some(None)
}

fn run(
    g: &Graph,
    k: usize,
    s: Option<usize>,
) -> Result<(PartialColoring, ProcedureReport), ProcedureError> {
    match s {
        Some(s) => run_improved_procedure(g, k, s),
        None => run_main_procedure(g, k),
    }
}

pub fn survey_row(line: &str, k: usize, limits: &OracleLimits) -> Result<SurveyRow, CliError> {
    let g = from_graph6(line)?;
    let n = g.vertex_count();
    let delta = g.max_degree();
    let diameter = g.diameter().ok().map(|(d, _)| d);
    let mut row = SurveyRow {
        graph6: line.to_string(),
        n,
        delta,
        diameter,
        k,
        chi: None,
        gap: None,
        procedure_used: "none",
        palette: None,
        ok: false,
    };
    if delta >= 2 && n <= limits.max_vertices {
        if let Ok(record) = exact_gap(&g, k, limits) {
            row.chi = Some(record.chi);
            row.gap = Some(record.gap.to_string());
        }
    }
    if let Some(s) = diameter.and_then(|d| choose_procedure(k, delta, d)) {
        row.procedure_used = if s.is_some() { "improved" } else { "main" };
        let palette = match s {
            Some(s) => bounds::palette_improved(k, delta, s),
            None => bounds::palette_main(k, delta),
        };
        row.palette = palette.ok().and_then(|p| p.try_into().ok());
        if let Ok((coloring, report)) = run(&g, k, s) {
            row.ok =
                report.success && verify_coloring(&g, k, &coloring).is_ok_and(|v| v.is_empty());
        }
    }
    Ok(row)
}

/// Runs the survey over `input` on `jobs` worker threads. Returns the CSV
/// text and one diagnostic per skipped line, both in input order.
pub fn survey(
    input: &str,
    k: usize,
    limits: &OracleLimits,
    jobs: usize,
) -> Result<(String, Vec<String>), CliError> {
    let lines: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::new(Kind::Internal, format!("cannot start worker pool: {e}")))?;
    let rows: Vec<Result<SurveyRow, CliError>> = pool.install(|| {
        lines
            .par_iter()
            .map(|&(_, l)| survey_row(l, k, limits))
            .collect()
    });

    let mut csv = String::from(HEADER);
    csv.push('\n');
    let mut skipped = Vec::new();
    for ((number, _), row) in lines.iter().zip(rows) {
        match row {
            Ok(row) => {
                let _ = writeln!(csv, "{}", row.to_csv());
            }
            Err(e) => skipped.push(format!("line {number}: skipped, {e}")),
        }
    }
    Ok((csv, skipped))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn procedure_choice() {
        assert_eq!(choose_procedure(3, 3, 4), Some(None));
        assert_eq!(choose_procedure(3, 3, 3), None);
        assert_eq!(choose_procedure(3, 2, 40), None);
        assert_eq!(choose_procedure(17, 3, 23), Some(Some(1)));
        assert_eq!(choose_procedure(17, 3, 19), None);
        assert_eq!(choose_procedure(17, 3, 32), Some(Some(1)));
        assert_eq!(choose_procedure(29, 3, 34), Some(Some(2)));
        assert_eq!(choose_procedure(29, 3, 33), Some(Some(1)));
    }

    #[test]
    fn petersen_row() {
        let row = survey_row("IheA@GUAo", 2, &OracleLimits::default()).unwrap();
        assert_eq!(row.to_csv(), "IheA@GUAo,10,3,2,2,10,0,none,,false");
    }

    #[test]
    fn prism_row_runs_main() {
        let prism = powercolor::generators::prism(10).unwrap();
        let row = survey_row(
            &powercolor::to_graph6(&prism).unwrap(),
            3,
            &OracleLimits::default(),
        )
        .unwrap();
        assert_eq!(
            (row.procedure_used, row.palette, row.ok),
            ("main", Some(21), true)
        );
        let chi = powercolor::exact_chromatic(&prism.power(3), &OracleLimits::default()).unwrap();
        assert_eq!(row.chi, Some(chi));
    }

    #[test]
    fn empty_and_malformed_input() {
        let (csv, skipped) = survey("", 2, &OracleLimits::default(), 1).unwrap();
        assert_eq!(csv, format!("{HEADER}\n"));
        assert!(skipped.is_empty());
        let (csv, skipped) = survey("C~\n!!bad\nC~\n", 2, &OracleLimits::default(), 2).unwrap();
        assert_eq!(csv.lines().count(), 3);
        assert_eq!(skipped.len(), 1);
        assert!(skipped[0].starts_with("line 2:"));
    }
}
