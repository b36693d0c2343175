//! Per-instance classification rows, the `(n,k)` plane dataset, and the
//! closed-form-versus-oracle verification sweep.

use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cayley::{is_2gen_monoid_graph, is_group_graph, loopless_semigroup_obstruction};
use crate::cores::{
    build_retraction, classify_core, has_spoked_min_odd_cycle, is_endomorphism_transitive,
    retraction_target, CoreStatus,
};
use crate::error::{Error, Result};
use crate::gp::{build_gp, is_bipartite_gp, GPParams};
use crate::hom::{is_core_oracle, is_endo_transitive_oracle, verify_retraction, SearchBudget};
use crate::symmetry::{
    aut_group_bruteforce, expected_aut_order, is_group, is_vertex_transitive, orbits,
};

/// Largest `n` for which rows carry a brute-force automorphism count by default.
pub const DEFAULT_AUT_FOUND_MAX_N: usize = 12;

/// First line of every plane CSV file.
pub const PLANE_CSV_VERSION: &str = "# gp-plane v1";

/// Column order of the plane CSV.
pub const PLANE_CSV_COLUMNS: &str = "n,k,bipartite,core,vertex_transitive,group_graph,\
two_gen_monoid_graph,loopless_obstruction,aut_order_expected,aut_order_found";

/// Everything known about one `G(n,k)` in closed form, plus an optional brute-force `|Aut|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneRow {
    pub n: usize,
    pub k: usize,
    pub bipartite: bool,
    pub core: bool,
    pub vertex_transitive: bool,
    pub group_graph: bool,
    pub two_gen_monoid_graph: bool,
    pub loopless_obstruction: bool,
    pub aut_order_expected: Option<usize>,
    pub aut_order_found: Option<usize>,
}

/// `brute_aut` forces the automorphism count above [`DEFAULT_AUT_FOUND_MAX_N`].
pub fn classify_row(params: GPParams, brute_aut: bool, budget: SearchBudget) -> Result<PlaneRow> {
    let aut_order_found = if brute_aut || params.n() <= DEFAULT_AUT_FOUND_MAX_N {
        Some(aut_group_bruteforce(&build_gp(params), budget)?.len())
    } else {
        None
    };
    Ok(PlaneRow {
        n: params.n(),
        k: params.k(),
        bipartite: is_bipartite_gp(params),
        core: classify_core(params).is_core(),
        vertex_transitive: is_vertex_transitive(params),
        group_graph: is_group_graph(params),
        two_gen_monoid_graph: is_2gen_monoid_graph(params),
        loopless_obstruction: loopless_semigroup_obstruction(params),
        aut_order_expected: expected_aut_order(params),
        aut_order_found,
    })
}

impl PlaneRow {
    pub fn csv_line(&self) -> String {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.k,
            self.bipartite,
            self.core,
            self.vertex_transitive,
            self.group_graph,
            self.two_gen_monoid_graph,
            self.loopless_obstruction,
            opt(self.aut_order_expected),
            opt(self.aut_order_found)
        )
    }
}

impl fmt::Display for PlaneRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        writeln!(f, "G({},{})", self.n, self.k)?;
        writeln!(f, "  bipartite             {}", yn(self.bipartite))?;
        writeln!(f, "  core                  {}", yn(self.core))?;
        writeln!(f, "  vertex-transitive     {}", yn(self.vertex_transitive))?;
        writeln!(f, "  group graph           {}", yn(self.group_graph))?;
        writeln!(f, "  2-gen monoid graph    {}", yn(self.two_gen_monoid_graph))?;
        writeln!(f, "  loopless obstruction  {}", yn(self.loopless_obstruction))?;
        writeln!(f, "  |Aut| expected        {}", opt(self.aut_order_expected))?;
        write!(f, "  |Aut| found           {}", opt(self.aut_order_found))
    }
}

/// Rows for every valid `(n,k)` with `n <= n_max`, ordered by `(n,k)`.
pub fn scan(n_max: usize, budget: SearchBudget) -> Result<Vec<PlaneRow>> {
    GPParams::all_up_to(n_max)
        .into_par_iter()
        .map(|p| classify_row(p, false, budget))
        .collect()
}

pub fn plane_csv(rows: &[PlaneRow]) -> String {
    let mut out = format!("{PLANE_CSV_VERSION}\n{PLANE_CSV_COLUMNS}\n");
    for r in rows {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}

/// A family of closed-form claims checked against an oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Closed-form core test vs. exhaustive endomorphism search vs. spoked odd cycles.
    Core,
    /// Explicit retractions of non-cores.
    Retraction,
    /// Endomorphism-transitivity closed form vs. search.
    EndoTransitive,
    /// Automorphism order and orbit count vs. brute force.
    Aut,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Core, Check::Retraction, Check::EndoTransitive, Check::Aut];

    pub fn name(self) -> &'static str {
        match self {
            Check::Core => "core",
            Check::Retraction => "retraction",
            Check::EndoTransitive => "endo-transitive",
            Check::Aut => "aut",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == name)
            .ok_or_else(|| Error::Domain(format!("unknown check '{name}'")))
    }

    /// Largest `n` the oracle is run at.
    pub fn ceiling(self) -> usize {
        match self {
            Check::Core => 16,
            Check::Retraction => 40,
            Check::EndoTransitive | Check::Aut => 12,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "kebab-case")]
pub enum Outcome {
    Agree,
    Disagree(String),
    Inconclusive(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyLine {
    pub check: Check,
    pub n: usize,
    pub k: usize,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub lines: Vec<VerifyLine>,
}

impl VerifyReport {
    pub fn disagreements(&self) -> usize {
        self.lines.iter().filter(|l| matches!(l.outcome, Outcome::Disagree(_))).count()
    }

    pub fn inconclusive(&self) -> usize {
        self.lines.iter().filter(|l| matches!(l.outcome, Outcome::Inconclusive(_))).count()
    }

    /// 0 all agree, 2 some disagreement, 3 no disagreement but some budget ran out.
    pub fn exit_code(&self) -> i32 {
        if self.disagreements() > 0 {
            2
        } else if self.inconclusive() > 0 {
            3
        } else {
            0
        }
    }

    /// One line per non-agreeing instance, then per-check totals.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            match &l.outcome {
                Outcome::Agree => {}
                Outcome::Disagree(d) => {
                    let _ = writeln!(out, "DISAGREE {} G({},{}): {d}", l.check.name(), l.n, l.k);
                }
                Outcome::Inconclusive(d) => {
                    let _ = writeln!(out, "INCONCLUSIVE {} G({},{}): {d}", l.check.name(), l.n, l.k);
                }
            }
        }
        for c in Check::ALL {
            let of: Vec<_> = self.lines.iter().filter(|l| l.check == c).collect();
            if of.is_empty() {
                continue;
            }
            let agree = of.iter().filter(|l| l.outcome == Outcome::Agree).count();
            let _ = writeln!(out, "{}: {agree}/{} agree", c.name(), of.len());
        }
        out
    }
}

fn outcome_of(r: Result<Option<String>>) -> Outcome {
    match r {
        Ok(None) => Outcome::Agree,
        Ok(Some(d)) => Outcome::Disagree(d),
        Err(Error::BudgetExhausted { expansions }) => {
            Outcome::Inconclusive(format!("budget exhausted after {expansions} expansions"))
        }
        Err(e) => Outcome::Disagree(e.to_string()),
    }
}

fn run_check(check: Check, params: GPParams, budget: SearchBudget) -> Result<Option<String>> {
    match check {
        Check::Core => {
            if is_bipartite_gp(params) {
                return Ok(None);
            }
            let closed = classify_core(params).is_core();
            let oracle = is_core_oracle(&build_gp(params), budget)?;
            let cycle = has_spoked_min_odd_cycle(params)?;
            Ok((closed != oracle || closed != cycle)
                .then(|| format!("closed form {closed}, oracle {oracle}, spoked cycle {cycle}")))
        }
        Check::Retraction => {
            if !matches!(classify_core(params).status, CoreStatus::NotCore(_)) {
                return Ok(None);
            }
            let f = build_retraction(params)?;
            let target = retraction_target(params);
            let ok = verify_retraction(&build_gp(params), &f, &target)
                && target.len() == params.inner_len();
            Ok((!ok).then(|| "retraction failed verification".to_string()))
        }
        Check::EndoTransitive => {
            let closed = is_endomorphism_transitive(params);
            let oracle = is_endo_transitive_oracle(&build_gp(params), budget)?;
            Ok((closed != oracle).then(|| format!("closed form {closed}, oracle {oracle}")))
        }
        Check::Aut => {
            let aut = aut_group_bruteforce(&build_gp(params), budget)?;
            let mut problems = Vec::new();
            if !is_group(&aut) {
                problems.push("enumerated set is not a group".to_string());
            }
            if let Some(e) = expected_aut_order(params) {
                if e != aut.len() {
                    problems.push(format!("expected |Aut| {e}, found {}", aut.len()));
                }
            }
            let transitive = orbits(params.vertex_count(), &aut).len() == 1;
            if transitive != is_vertex_transitive(params) {
                problems.push(format!("orbit count says transitive = {transitive}"));
            }
            Ok((!problems.is_empty()).then(|| problems.join("; ")))
        }
    }
}

/// Runs `checks` on every `(n,k)` with `n <= min(n_max, check.ceiling())`.
pub fn verify(n_max: usize, checks: &[Check], budget: SearchBudget) -> VerifyReport {
    let mut jobs: Vec<(Check, GPParams)> = Vec::new();
    for &c in checks {
        for p in GPParams::all_up_to(n_max.min(c.ceiling())) {
            jobs.push((c, p));
        }
    }
    let lines = jobs
        .into_par_iter()
        .map(|(check, p)| VerifyLine {
            check,
            n: p.n(),
            k: p.k(),
            outcome: outcome_of(run_check(check, p, budget)),
        })
        .collect();
    VerifyReport { lines }
}

/// DOT of `G(n,k)` with the retraction image filled and each vertex annotated with its image.
pub fn retraction_dot(params: GPParams) -> Result<String> {
    let f = build_retraction(params)?;
    let g = build_gp(params);
    let target = retraction_target(params);
    let mut out = String::new();
    let _ = writeln!(out, "graph \"retraction {params}\" {{");
    for v in 0..g.order() {
        let fill = if target.contains(&v) { ", style=filled, fillcolor=lightgray" } else { "" };
        let _ = writeln!(
            out,
            "  \"{}\" [xlabel=\"{}\"{fill}];",
            g.label(v),
            g.label(f.get(v))
        );
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", g.label(a), g.label(b));
    }
    out.push_str("}\n");
    Ok(out)
}

/// JSON form of a retraction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetractionJson {
    pub n: usize,
    pub k: usize,
    pub map: Vec<usize>,
    pub target: Vec<usize>,
}

pub fn retraction_json(params: GPParams) -> Result<RetractionJson> {
    Ok(RetractionJson {
        n: params.n(),
        k: params.k(),
        map: build_retraction(params)?.images().to_vec(),
        target: retraction_target(params),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, k: usize) -> GPParams {
        GPParams::new(n, k).unwrap()
    }

    #[test]
    fn petersen_row() {
        let r = classify_row(p(5, 2), false, SearchBudget::default()).unwrap();
        assert!(r.core && r.vertex_transitive && !r.group_graph && r.two_gen_monoid_graph);
        assert_eq!(r.aut_order_found, Some(120));
        assert_eq!(r.aut_order_expected, None);
    }

    #[test]
    fn mobius_kantor_row() {
        let r = classify_row(p(8, 3), false, SearchBudget::default()).unwrap();
        assert!(r.bipartite && r.group_graph && !r.core);
    }

    #[test]
    fn large_rows_skip_brute_force() {
        let r = classify_row(p(15, 3), false, SearchBudget::default()).unwrap();
        assert!(!r.core);
        assert_eq!(r.aut_order_found, None);
    }

    #[test]
    fn csv_header_and_order() {
        let rows = scan(6, SearchBudget::default()).unwrap();
        let csv = plane_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], PLANE_CSV_VERSION);
        assert_eq!(lines[1], PLANE_CSV_COLUMNS);
        assert_eq!(lines.len(), 2 + 6);
        assert!(lines[2].starts_with("3,1,"));
    }

    #[test]
    fn small_verify_agrees() {
        let report = verify(8, &Check::ALL, SearchBudget::default());
        assert_eq!(report.exit_code(), 0, "{}", report.render());
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let report = verify(6, &[Check::Core], SearchBudget::expansions(2));
        assert_eq!(report.disagreements(), 0);
        assert_eq!(report.exit_code(), 3);
    }

    #[test]
    fn retraction_outputs() {
        let j = retraction_json(p(15, 3)).unwrap();
        assert_eq!(j.target.len(), 5);
        assert!(retraction_dot(p(15, 3)).unwrap().contains("fillcolor"));
        assert!(retraction_json(p(5, 2)).is_err());
    }
}
