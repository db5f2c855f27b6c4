//! Verification suites: named bundles of checks swept over a grid.
//!
//! Records come back in deterministic grid order regardless of how many
//! worker threads ran the checks.

use num_traits::Signed;
use rayon::prelude::*;

use qmeixner::{
    check_identity, quasi_orth_sums_auto, rat_int, scan_monotonicity, verify_bounds_qo1,
    verify_bounds_qo2, verify_consecutive_qo2, verify_first_zeros, verify_gap2_node_interlacing,
    verify_gap2_shift1_node_interlacing, verify_nonmonotone_example, verify_order2_vs_orthogonal,
    verify_origin_node_interlacing, verify_orthogonal_interlacing, verify_qo2_real_interlacing,
    verify_raise_shift1_node_interlacing, verify_zero_separation, IdentityKind, MeixnerParams,
    QSumError, Rational, Verdict,
};

use crate::grid::GridSpec;
use crate::report::{ReportRecord, Summary};

pub const SUITES: &[&str] = &[
    "identities",
    "orthogonal",
    "qo1",
    "qo2",
    "order2-vs-orth",
    "consecutive-qo2",
    "qsums",
    "monotonicity",
    "all",
];

type Task = Box<dyn Fn() -> Verdict + Send + Sync>;

fn params(n: usize, beta: &Rational, c: &Rational) -> MeixnerParams {
    MeixnerParams::new(n, beta.clone(), c.clone()).expect("grid c values are valid")
}

fn regime_order(beta: &Rational) -> Option<usize> {
    if beta.is_positive() {
        Some(0)
    } else if beta > &rat_int(-1) {
        Some(1)
    } else if beta > &rat_int(-2) {
        Some(2)
    } else {
        None
    }
}

/// Quasi-orthogonality sums as one pass/fail record: the low moments must
/// be consistent with zero and the order moment distinctly nonzero.
fn qsums_verdict(p: &MeixnerParams, r: usize) -> Verdict {
    const ID: &str = "qsums";
    match quasi_orth_sums_auto(p, r) {
        Ok(report) => {
            let last = report.moments.len() - 1;
            let low_ok = report.moments[..last]
                .iter()
                .all(|m| m.consistent_with_zero());
            let mut v = if !low_ok {
                Verdict::fail(ID)
                    .with_params(p)
                    .with_detail("a low moment exceeds its tail bound")
            } else if !report.moments[last].distinctly_nonzero() {
                Verdict::not_applicable(ID)
                    .with_params(p)
                    .with_detail("inconclusive at the truncation cap; raise the truncation point")
            } else {
                Verdict::pass(ID)
                    .with_params(p)
                    .with_detail(format!("r={r}, X={}", report.truncation_x))
            };
            for m in &report.moments {
                v = v
                    .with_value(&format!("S_{}", m.m), m.partial_sum.clone())
                    .with_value(&format!("B_{}", m.m), m.tail_bound.clone());
            }
            v
        }
        Err(QSumError::WeightNotPositive) => Verdict::not_applicable(ID)
            .with_params(p)
            .with_detail("weight parameter not positive"),
        Err(e) => Verdict::not_applicable(ID)
            .with_params(p)
            .with_detail(format!("{e}")),
    }
}

fn push_grid_tasks<F>(tasks: &mut Vec<Task>, grid: &GridSpec, make: F)
where
    F: Fn(usize, &Rational, &Rational) -> Option<Task>,
{
    for beta in &grid.beta_values {
        for c in &grid.c_values {
            for n in grid.n_min..=grid.n_max {
                if let Some(task) = make(n, beta, c) {
                    tasks.push(task);
                }
            }
        }
    }
}

fn identities_tasks(grid: &GridSpec) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    for kind in IdentityKind::ALL {
        push_grid_tasks(&mut tasks, grid, move |n, beta, c| {
            if n < kind.min_degree() {
                return None;
            }
            let p = params(n, beta, c);
            Some(Box::new(move || check_identity(kind, &p)))
        });
    }
    tasks
}

fn orthogonal_tasks(grid: &GridSpec) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    let checks: [fn(&MeixnerParams) -> Verdict; 3] = [
        verify_first_zeros,
        verify_orthogonal_interlacing,
        verify_zero_separation,
    ];
    for check in checks {
        push_grid_tasks(&mut tasks, grid, move |n, beta, c| {
            if !beta.is_positive() {
                return None;
            }
            let p = params(n, beta, c);
            Some(Box::new(move || check(&p)))
        });
    }
    tasks
}

fn qo1_tasks(grid: &GridSpec) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    let checks: [fn(&MeixnerParams) -> Verdict; 5] = [
        verify_bounds_qo1,
        verify_origin_node_interlacing,
        verify_gap2_node_interlacing,
        verify_gap2_shift1_node_interlacing,
        verify_raise_shift1_node_interlacing,
    ];
    for check in checks {
        push_grid_tasks(&mut tasks, grid, move |n, beta, c| {
            if regime_order(beta) != Some(1) {
                return None;
            }
            let p = params(n, beta, c);
            Some(Box::new(move || check(&p)))
        });
    }
    tasks
}

fn qo2_tasks(grid: &GridSpec) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    let checks: [fn(&MeixnerParams) -> Verdict; 2] =
        [verify_qo2_real_interlacing, verify_bounds_qo2];
    for check in checks {
        push_grid_tasks(&mut tasks, grid, move |n, beta, c| {
            if regime_order(beta) != Some(2) {
                return None;
            }
            let p = params(n, beta, c);
            Some(Box::new(move || check(&p)))
        });
    }
    tasks
}

fn order2_vs_orth_tasks(grid: &GridSpec) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    push_grid_tasks(&mut tasks, grid, |n, beta, c| {
        if regime_order(beta) != Some(2) {
            return None;
        }
        let p = params(n, beta, c);
        Some(Box::new(move || verify_order2_vs_orthogonal(&p)))
    });
    tasks
}

fn consecutive_qo2_tasks(grid: &GridSpec) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    push_grid_tasks(&mut tasks, grid, |n, beta, c| {
        if regime_order(beta) != Some(2) {
            return None;
        }
        let p = params(n, beta, c);
        Some(Box::new(move || verify_consecutive_qo2(&p)))
    });
    tasks
}

fn qsums_tasks(grid: &GridSpec) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    let half = Rational::new(1.into(), 2.into());
    for beta in &grid.beta_values {
        let Some(r) = regime_order(beta) else {
            continue;
        };
        for c in &grid.c_values {
            // representative points: moderate c keeps truncation small
            if c > &half {
                continue;
            }
            for n in [r + 2, r + 3] {
                if n < grid.n_min || n > grid.n_max {
                    continue;
                }
                let p = params(n, beta, c);
                tasks.push(Box::new(move || qsums_verdict(&p, r)));
            }
        }
    }
    tasks
}

fn monotonicity_tasks(grid: &GridSpec) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    for beta in &grid.beta_values {
        if regime_order(beta) != Some(1) {
            continue;
        }
        for c in &grid.c_values {
            let beta = beta.clone();
            let c = c.clone();
            let n_max = grid.n_max;
            tasks.push(Box::new(move || scan_monotonicity(&beta, &c, n_max)));
        }
    }
    tasks.push(Box::new(verify_nonmonotone_example));
    tasks
}

fn suite_tasks(suite: &str, grid: &GridSpec) -> Option<Vec<Task>> {
    Some(match suite {
        "identities" => identities_tasks(grid),
        "orthogonal" => orthogonal_tasks(grid),
        "qo1" => qo1_tasks(grid),
        "qo2" => qo2_tasks(grid),
        "order2-vs-orth" => order2_vs_orth_tasks(grid),
        "consecutive-qo2" => consecutive_qo2_tasks(grid),
        "qsums" => qsums_tasks(grid),
        "monotonicity" => monotonicity_tasks(grid),
        "all" => {
            let mut tasks = identities_tasks(grid);
            tasks.extend(orthogonal_tasks(grid));
            tasks.extend(qo1_tasks(grid));
            tasks.extend(qo2_tasks(grid));
            tasks.extend(order2_vs_orth_tasks(grid));
            tasks.extend(consecutive_qo2_tasks(grid));
            tasks.extend(qsums_tasks(grid));
            tasks.extend(monotonicity_tasks(grid));
            tasks
        }
        _ => return None,
    })
}

/// Runs a suite over the grid. `None` for an unrecognized suite name.
/// Records preserve task order even with multiple jobs.
pub fn run_suite(
    suite: &str,
    grid: &GridSpec,
    jobs: usize,
    timing: bool,
) -> Option<(Vec<ReportRecord>, Summary)> {
    let tasks = suite_tasks(suite, grid)?;
    let run_one = |task: &Task| -> (Verdict, Option<u128>) {
        if timing {
            let start = std::time::Instant::now();
            let v = task();
            (v, Some(start.elapsed().as_millis()))
        } else {
            (task(), None)
        }
    };
    let outcomes: Vec<(Verdict, Option<u128>)> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| tasks.par_iter().map(run_one).collect())
    } else {
        tasks.iter().map(run_one).collect()
    };
    let records: Vec<ReportRecord> = outcomes
        .iter()
        .map(|(v, ms)| ReportRecord::from_verdict(v, &grid.width, *ms))
        .collect();
    let summary = Summary::tally(&records);
    Some((records, summary))
}
