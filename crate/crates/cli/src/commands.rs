use std::path::Path;
use std::time::Instant;

use eulerfpt::format::parse_graph;
use eulerfpt::large_euler::{EulerBudget, ThresholdParams};
use eulerfpt::reductions::{
    has_multicolored_clique, is_hamiltonian, reduce_3sat_4occ, reduce_hamiltonian_cubic, reduce_multicolored_clique,
    sat_witness, verify_reduction, CnfFormula, PartitionedGraph, ReductionError, ReductionOutput, TargetCheck,
};
use eulerfpt::{
    brute_large_euler, decide_large_euler_undirected, directed_large_euler_small_k, solve_k_circuit,
    solve_long_circuit, solve_range_circuit, CircuitAnswer, EulerCertificate, EulerError, Graph, LargeEulerOutcome,
    LongCycleOracle, SearchMode, SolveError, SolverConfig, Verdict,
};

use crate::args::{Command, ModeArg, Options, ReduceKind};
use crate::report::{
    Certificate, CheckStatus, FEntry, ReduceReport, Requirement, RunResult, Stats, ThresholdReport, VerdictLabel,
};
use crate::CliError;

/// Largest source graph handed to the Hamiltonicity oracle.
const HAMILTON_LIMIT: usize = 24;
/// Largest formula handed to brute-force SAT.
const SAT_LIMIT: usize = 24;

pub enum Report {
    Run(RunResult),
    Reduce {
        report: ReduceReport,
        target_text: Option<String>,
    },
    Thresholds(ThresholdReport),
}

pub fn dispatch(command: &Command, opts: &Options, echo: Vec<String>) -> Result<Report, CliError> {
    let started = Instant::now();
    let mut result = match command {
        Command::LongCircuit { file, k } => {
            let g = load_graph(file)?;
            let config = solver_config(opts, &g)?;
            let oracle = LongCycleOracle::BruteExact {
                edge_budget: opts.cycle_budget,
            };
            let answer = solve_long_circuit(&g, *k, oracle, &config);
            circuit_result(
                &g,
                answer,
                Requirement::CircuitLength {
                    lo: (*k).max(1),
                    hi: usize::MAX,
                },
            )?
        }
        Command::RangeCircuit { file, k, k_prime } => {
            let g = load_graph(file)?;
            let config = solver_config(opts, &g)?;
            let answer = solve_range_circuit(&g, *k, *k_prime, &config);
            circuit_result(
                &g,
                answer,
                Requirement::CircuitLength {
                    lo: (*k).max(1),
                    hi: *k_prime,
                },
            )?
        }
        Command::KCircuit { file, k } => {
            let g = load_graph(file)?;
            let config = solver_config(opts, &g)?;
            let answer = solve_k_circuit(&g, *k, &config);
            circuit_result(&g, answer, Requirement::CircuitLength { lo: *k, hi: *k })?
        }
        Command::LargeEuler { file, k } => {
            let g = load_graph(file)?;
            large_euler(&g, *k, opts)?
        }
        Command::EulerK { file, k } => {
            let g = load_graph(file)?;
            let found = brute_large_euler(&g, *k, true, opts.brute_budget);
            euler_result(&g, *k, true, found.map(outcome_of), None)?
        }
        Command::Reduce {
            kind,
            input,
            out,
            sidecar,
            k,
            check,
        } => {
            return reduce(*kind, input, out.as_deref(), sidecar.as_deref(), *k, *check, opts, echo);
        }
        Command::Thresholds { k } => return thresholds(*k),
    };
    result.command = echo;
    result.seed = opts.seed;
    if opts.timing {
        result.stats.wall_time_ms = Some(started.elapsed().as_millis() as u64);
    }
    Ok(Report::Run(result))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn solver_config(opts: &Options, g: &Graph) -> Result<SolverConfig, CliError> {
    let mode = match opts.mode {
        Some(ModeArg::Exhaustive) => SearchMode::ExhaustiveTrails,
        Some(ModeArg::Randomized) => SearchMode::Randomized,
        None if g.m() <= 16 => SearchMode::ExhaustiveTrails,
        None => SearchMode::Randomized,
    };
    let config = SolverConfig {
        mode,
        seed: opts.seed,
        epsilon: opts.epsilon,
        max_trials: opts.max_trials,
    };
    config.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(config)
}

fn blank(verdict: VerdictLabel) -> RunResult {
    RunResult {
        command: Vec::new(),
        verdict,
        certificate: None,
        stats: Stats::default(),
        seed: 0,
        note: None,
    }
}

fn circuit_result(
    g: &Graph,
    answer: Result<CircuitAnswer, SolveError>,
    req: Requirement,
) -> Result<RunResult, CliError> {
    let answer = match answer {
        Ok(a) => a,
        Err(e @ (SolveError::CycleBudgetExceeded { .. } | SolveError::PaletteTooLarge(_))) => {
            let mut r = blank(VerdictLabel::Inconclusive);
            r.note = Some(e.to_string());
            return Ok(r);
        }
        Err(e @ (SolveError::RangeInverted { .. } | SolveError::InvalidEpsilon(_) | SolveError::ZeroTrials)) => {
            return Err(CliError::Usage(e.to_string()))
        }
        Err(e) => return Err(CliError::Data(e.to_string())),
    };
    let mut r = blank(match answer.verdict {
        Verdict::Yes => VerdictLabel::Yes,
        Verdict::No => VerdictLabel::No,
        Verdict::NoWithConfidence => VerdictLabel::NoWithConfidence,
    });
    r.stats.trials_used = answer.trials_used;
    r.stats.nodes_explored = answer.nodes_explored;
    r.certificate = answer.certificate.map(|c| Certificate::from_circuit(g, &c));
    check_yes(g, &r, req)?;
    Ok(r)
}

fn check_yes(g: &Graph, r: &RunResult, req: Requirement) -> Result<(), CliError> {
    if r.verdict == VerdictLabel::Yes && !r.certificate.as_ref().is_some_and(|c| c.verify(g, req)) {
        return Err(CliError::Internal("certificate failed re-verification".into()));
    }
    Ok(())
}

fn outcome_of(found: Option<EulerCertificate>) -> LargeEulerOutcome {
    match found {
        Some(c) => LargeEulerOutcome::Yes(c),
        None => LargeEulerOutcome::No,
    }
}

fn euler_result(
    g: &Graph,
    k: i64,
    exact: bool,
    outcome: Result<LargeEulerOutcome, EulerError>,
    budget_note: Option<&str>,
) -> Result<RunResult, CliError> {
    let r = match outcome {
        Ok(LargeEulerOutcome::Yes(c)) => {
            let mut r = blank(VerdictLabel::Yes);
            r.certificate = Some(Certificate::from_vertex_set(&c));
            r
        }
        Ok(LargeEulerOutcome::No) => blank(VerdictLabel::No),
        Ok(LargeEulerOutcome::Inconclusive(why)) => {
            let mut r = blank(VerdictLabel::Inconclusive);
            r.note = Some(why);
            r
        }
        Err(e @ EulerError::BudgetExceeded { .. }) => {
            let mut r = blank(VerdictLabel::Inconclusive);
            r.note = Some(match budget_note {
                Some(extra) => format!("{e}; {extra}"),
                None => e.to_string(),
            });
            r
        }
        Err(e) => return Err(CliError::Data(e.to_string())),
    };
    check_yes(g, &r, Requirement::EulerSet { k, exact })?;
    Ok(r)
}

fn large_euler(g: &Graph, k: i64, opts: &Options) -> Result<RunResult, CliError> {
    if !g.is_directed() {
        let budget = EulerBudget {
            brute_vertices: opts.brute_budget,
            path_nodes: opts.path_nodes,
        };
        return euler_result(g, k, false, decide_large_euler_undirected(g, k, &budget), None);
    }
    if k <= 3 {
        let found = directed_large_euler_small_k(g, k.max(1));
        return euler_result(g, k, false, found.map(outcome_of), None);
    }
    let found = brute_large_euler(g, k, false, opts.brute_budget);
    let note = "the directed problem is NP-complete for every fixed k >= 4, so no polynomial-time fallback exists";
    euler_result(g, k, false, found.map(outcome_of), Some(note))
}

#[allow(clippy::too_many_arguments)]
fn reduce(
    kind: ReduceKind,
    input: &Path,
    out: Option<&Path>,
    sidecar: Option<&Path>,
    k: Option<i64>,
    check: bool,
    opts: &Options,
    echo: Vec<String>,
) -> Result<Report, CliError> {
    if k.is_some() && kind != ReduceKind::Sat {
        return Err(CliError::Usage("--k only applies to the 3sat construction".into()));
    }
    let text = read(input)?;
    let data = |e: ReductionError| CliError::Data(format!("{}: {e}", input.display()));
    let brute = TargetCheck::Brute {
        budget: opts.brute_budget,
    };
    let mut note = None;
    let (output, name, source_answer, status) = match kind {
        ReduceKind::Subdivision => {
            let g = parse_graph(&text).map_err(|e| data(e.into()))?;
            let output = reduce_hamiltonian_cubic(&g).map_err(data)?;
            let src = (check && g.n() <= HAMILTON_LIMIT)
                .then(|| is_hamiltonian(&g))
                .transpose()
                .map_err(data)?;
            let status = two_sided(check, src, &output, brute, &mut note)?;
            (output, "subdivision", src, status)
        }
        ReduceKind::Mcc => {
            let p = PartitionedGraph::parse(&text).map_err(data)?;
            let output = reduce_multicolored_clique(&p).map_err(data)?;
            let src = check.then(|| has_multicolored_clique(&p));
            let status = two_sided(check, src, &output, brute, &mut note)?;
            (output, "mcc", src, status)
        }
        ReduceKind::Sat => {
            let f = CnfFormula::parse_dimacs(&text).map_err(data)?;
            let k = k.unwrap_or(4 * (f.num_vars() + f.clauses().len()) as i64);
            let output = reduce_3sat_4occ(&f, k).map_err(data)?;
            let assignment = (check && f.num_vars() <= SAT_LIMIT).then(|| f.solve_brute());
            let src = assignment.as_ref().map(|a| a.is_some());
            let status = match assignment {
                Some(Some(a)) => {
                    let w = sat_witness(&f, &a).map_err(data)?;
                    match verify_reduction(true, &output, TargetCheck::Witness(&w)) {
                        Ok(true) => CheckStatus::Agree,
                        Ok(false) | Err(ReductionError::WitnessRejected) => CheckStatus::Disagree,
                        Err(e) => return Err(data(e)),
                    }
                }
                _ => two_sided(check, src, &output, brute, &mut note)?,
            };
            (output, "3sat", src, status)
        }
    };

    let target_text = eulerfpt::format::write_graph(&output.target);
    let sidecar_path = sidecar.map(Path::to_path_buf).or_else(|| {
        out.map(|p| {
            let mut s = p.as_os_str().to_owned();
            s.push(".prov");
            s.into()
        })
    });
    let write = |path: &Path, body: &str| {
        std::fs::write(path, body).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
    };
    if let Some(path) = out {
        write(path, &target_text)?;
    }
    if let Some(path) = &sidecar_path {
        write(path, &output.sidecar())?;
    }
    let report = ReduceReport {
        command: echo,
        kind: name.to_string(),
        target_vertices: output.target.n(),
        target_edges: output.target.m(),
        parameter: output.parameter,
        source_answer,
        check: status,
        note,
    };
    Ok(Report::Reduce {
        report,
        target_text: out.is_none().then_some(target_text),
    })
}

/// Brute force on the target side, when the source side was decided.
fn two_sided(
    check: bool,
    src: Option<bool>,
    output: &ReductionOutput,
    brute: TargetCheck<'_>,
    note: &mut Option<String>,
) -> Result<CheckStatus, CliError> {
    if !check {
        return Ok(CheckStatus::NotRequested);
    }
    let Some(src) = src else {
        *note = Some("source instance too large for the exact oracle".into());
        return Ok(CheckStatus::Skipped);
    };
    match verify_reduction(src, output, brute) {
        Ok(true) => Ok(CheckStatus::Agree),
        Ok(false) => Ok(CheckStatus::Disagree),
        Err(ReductionError::Euler(e @ EulerError::BudgetExceeded { .. })) => {
            *note = Some(e.to_string());
            Ok(CheckStatus::Skipped)
        }
        Err(e) => Err(CliError::Data(e.to_string())),
    }
}

fn thresholds(k: u64) -> Result<Report, CliError> {
    let p = ThresholdParams::new(k).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Report::Thresholds(ThresholdReport {
        k,
        f: p.f_table
            .iter()
            .map(|(&ell, v)| FEntry {
                ell,
                value: v.to_string(),
            })
            .collect(),
        delta_k: p.delta_k.to_string(),
        tw_threshold: p.tw_threshold.to_string(),
    }))
}
