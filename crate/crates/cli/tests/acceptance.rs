//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (run with `cargo test --test acceptance -- --nocapture`
//! to see the lines for passing criteria too).

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qmeixner::rational::pow10;
use qmeixner::{
    check_identity, count_real_roots, parse_rational, quadratic_zeros, quasi_orth_sums, rat,
    rat_int, verify_bounds_qo1, verify_bounds_qo2, verify_consecutive_qo2,
    verify_gap2_node_interlacing, verify_gap2_shift1_node_interlacing, verify_order2_vs_orthogonal,
    verify_origin_node_interlacing, verify_qo2_real_interlacing,
    verify_raise_shift1_node_interlacing, zeros_of, Bound, IdentityKind, MeixnerParams,
    QuadraticZeros, Rational, Status, Verdict,
};
use qmeixner_cli::table::{reference_table, TableId};

type Table1Reference = [((i64, i64), (i64, i64), [&'static str; 3]); 9];

fn conclude(name: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("acceptance {name}: PASS");
    } else {
        println!("acceptance {name}: FAIL");
        for f in &failures {
            println!("  - {f}");
        }
        panic!("acceptance {name} failed ({} problems)", failures.len());
    }
}

fn params(n: usize, beta: Rational, c: Rational) -> MeixnerParams {
    MeixnerParams::new(n, beta, c).unwrap()
}

/// One unit in the last printed place of a decimal string like
/// `0.999961` or `3.549e-14`.
fn ulp_of(printed: &str) -> Rational {
    let (mantissa, exp) = match printed.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().unwrap()),
        None => (printed, 0),
    };
    let places = mantissa
        .split_once('.')
        .map_or(0, |(_, frac)| frac.len() as i64);
    pow10(exp - places)
}

fn check_cell(
    failures: &mut Vec<String>,
    label: &str,
    computed_midpoint: &Rational,
    rendered: &str,
    printed: &str,
) {
    let expected = parse_rational(printed).unwrap();
    let ulp = ulp_of(printed);
    let err = (computed_midpoint - &expected).abs();
    if err > ulp {
        failures.push(format!(
            "{label}: computed {computed_midpoint} differs from {printed} by more than one ulp"
        ));
    }
    if rendered != printed {
        failures.push(format!(
            "{label}: rendered `{rendered}`, reference `{printed}`"
        ));
    }
}

const QO1_BETAS: [(i64, i64); 3] = [(-9, 10), (-1, 2), (-1, 10)];
const QO2_BETAS: [(i64, i64); 3] = [(-19, 10), (-3, 2), (-11, 10)];
const ORTH_BETAS: [(i64, i64); 3] = [(1, 2), (3, 2), (5, 1)];
const C_GRID: [(i64, i64); 5] = [(1, 10), (1, 5), (1, 2), (4, 5), (9, 10)];

#[test]
fn criterion_1_table1_reproduction() {
    let reference: Table1Reference = [
        (
            (-199, 100),
            (1, 10),
            ["3.549e-14", "0.999999999987", "2.0000000038"],
        ),
        ((-199, 100), (1, 2), ["1.351e-6", "0.999961", "2.00059"]),
        ((-199, 100), (4, 5), ["0.001545", "0.990203", "2.02091"]),
        (
            (-3, 2),
            (1, 10),
            ["1.953e-12", "0.99999999904", "2.00000054"],
        ),
        ((-3, 2), (1, 2), ["0.0000535", "0.9982", "2.0474"]),
        ((-3, 2), (4, 5), ["0.0405146", "0.811339", "2.93765"]),
        (
            (-101, 100),
            (1, 10),
            ["1.230e-13", "0.999999999911", "2.0000024"],
        ),
        ((-101, 100), (1, 2), ["2.418e-6", "0.999893", "2.1284"]),
        ((-101, 100), (4, 5), ["0.000973697", "0.994013", "3.8303"]),
    ];
    let mut failures = Vec::new();
    let table = reference_table(TableId::Table1);
    let width = pow10(-22);
    for (row_idx, (beta, c, cells)) in reference.iter().enumerate() {
        let p = params(10, rat(beta.0, beta.1), rat(c.0, c.1));
        let zeros = zeros_of(&p, &width);
        if zeros.real_count() != 10 {
            failures.push(format!("row {row_idx}: expected 10 real zeros"));
            continue;
        }
        for (i, printed) in cells.iter().enumerate() {
            check_cell(
                &mut failures,
                &format!("table1 row {row_idx} x{}", i + 1),
                &zeros.get(i).midpoint(),
                &table.rows[row_idx][3 + i],
                printed,
            );
        }
    }
    conclude("1 (table 1 reproduction)", failures);
}

#[test]
fn criterion_2_table2_reproduction() {
    let reference: [((i64, i64), [&str; 5]); 2] = [
        (
            (-19, 10),
            [
                "0.00000904",
                "0.999651",
                "2.006685",
                "3.445917",
                "6.1727379",
            ],
        ),
        (
            (-9, 5),
            ["0.0000169239", "0.999321", "2.0144", "3.48815", "6.24811"],
        ),
    ];
    let mut failures = Vec::new();
    let table = reference_table(TableId::Table2);
    let width = pow10(-22);
    let mut second_zeros = Vec::new();
    for (row_idx, (beta, cells)) in reference.iter().enumerate() {
        let p = params(5, rat(beta.0, beta.1), rat(1, 5));
        let zeros = zeros_of(&p, &width);
        if zeros.real_count() != 5 {
            failures.push(format!("row {row_idx}: expected 5 real zeros"));
            continue;
        }
        for (i, printed) in cells.iter().enumerate() {
            check_cell(
                &mut failures,
                &format!("table2 row {row_idx} x{}", i + 1),
                &zeros.get(i).midpoint(),
                &table.rows[row_idx][1 + i],
                printed,
            );
        }
        second_zeros.push(zeros.get(1).clone());
    }
    // x_{2,5} decreases as beta increases from -19/10 to -9/5
    if second_zeros.len() == 2 && second_zeros[1].hi() >= second_zeros[0].lo() {
        failures.push("second zero did not decrease as beta increased".to_string());
    }
    conclude("2 (table 2 reproduction)", failures);
}

#[test]
fn criterion_3_identity_suite_exact() {
    let betas: Vec<Rational> = QO1_BETAS
        .iter()
        .chain(&QO2_BETAS)
        .chain(&ORTH_BETAS)
        .map(|&(n, d)| rat(n, d))
        .collect();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for beta in &betas {
        for &(cn, cd) in &C_GRID {
            for n in 0..=12usize {
                let p = params(n, beta.clone(), rat(cn, cd));
                for kind in IdentityKind::ALL {
                    if n < kind.min_degree() {
                        continue;
                    }
                    let v = check_identity(kind, &p);
                    checked += 1;
                    if !v.passed() {
                        failures.push(format!("{v}"));
                    }
                }
            }
        }
    }
    assert!(checked > 2500, "expected a substantial grid, got {checked}");
    conclude("3 (identity suite, exact zero tolerance)", failures);
}

#[test]
fn criterion_4_evaluation_cross_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);
    let mut failures = Vec::new();
    let mut samples = 0usize;
    while samples < 1000 {
        let n = rng.random_range(0..=12usize);
        // noninteger beta avoids every series pole
        let denom = rng.random_range(2..=12i64);
        let mut numer = rng.random_range(-60..=60i64);
        if numer % denom == 0 {
            numer += 1;
        }
        let beta = rat(numer, denom);
        let c = rat(rng.random_range(1..=39i64), 40);
        let x = rat(rng.random_range(-200..=200i64), rng.random_range(1..=30i64));
        let p = params(n, beta.clone(), c.clone());
        let via_series = p.eval_series(&x).expect("noninteger beta has no poles");
        let via_recurrence = p.eval_recurrence(&x);
        if via_series != via_recurrence {
            failures.push(format!("n={n} beta={beta} c={c} x={x}: routes disagree"));
        }
        samples += 1;
    }
    conclude("4 (series/recurrence cross-oracle, 1000 samples)", failures);
}

#[test]
fn criterion_5_bound_suites() {
    let mut failures = Vec::new();
    for &(bn, bd) in &QO1_BETAS {
        for &(cn, cd) in &C_GRID {
            for n in 2..=10usize {
                let v = verify_bounds_qo1(&params(n, rat(bn, bd), rat(cn, cd)));
                if v.status != Status::Pass {
                    failures.push(format!("{v}"));
                }
            }
        }
    }
    for &(bn, bd) in &QO2_BETAS {
        for &(cn, cd) in &C_GRID {
            for n in 3..=10usize {
                let beta = rat(bn, bd);
                let c = rat(cn, cd);
                let applicable = rat_int(n as i64) > &beta / (&c - rat_int(1));
                let v = verify_bounds_qo2(&params(n, beta, c));
                let expected = if applicable {
                    Status::Pass
                } else {
                    Status::NotApplicable
                };
                if v.status != expected {
                    failures.push(format!("expected {expected:?}: {v}"));
                }
            }
        }
    }
    conclude("5 (zero-bound suites)", failures);
}

#[test]
fn criterion_6_interlacing_suites() {
    let mut failures = Vec::new();
    let mut tally = (0usize, 0usize, 0usize); // pass, not-applicable, degenerate
    let mut audit = |v: Verdict| match v.status {
        Status::Pass => tally.0 += 1,
        Status::NotApplicable => tally.1 += 1,
        Status::Degenerate => {
            tally.2 += 1;
            // degenerate verdicts must carry exact common-zero evidence
            let has_evidence = v
                .witnesses
                .iter()
                .any(|w| w.name == "common_zero" || w.name == "node" || w.name == "A_n");
            if !has_evidence {
                failures.push(format!("degenerate without evidence: {v}"));
            }
        }
        Status::Fail => failures.push(format!("{v}")),
    };

    for &(bn, bd) in &QO1_BETAS {
        for &(cn, cd) in &C_GRID {
            for n in 2..=10usize {
                let p = params(n, rat(bn, bd), rat(cn, cd));
                audit(verify_origin_node_interlacing(&p));
                audit(verify_gap2_node_interlacing(&p));
                audit(verify_gap2_shift1_node_interlacing(&p));
                audit(verify_raise_shift1_node_interlacing(&p));
            }
        }
    }
    for &(bn, bd) in &QO2_BETAS {
        for &(cn, cd) in &C_GRID {
            for n in 1..=10usize {
                let p = params(n, rat(bn, bd), rat(cn, cd));
                audit(verify_qo2_real_interlacing(&p));
                audit(verify_order2_vs_orthogonal(&p));
                audit(verify_consecutive_qo2(&p));
            }
        }
    }
    println!(
        "  interlacing sweep: {} PASS, {} NOT_APPLICABLE, {} DEGENERATE",
        tally.0, tally.1, tally.2
    );
    assert!(tally.0 > 200, "sweep too small: {} passes", tally.0);
    conclude("6 (interlacing suites, no failures)", failures);
}

#[test]
fn criterion_7_zero_separation() {
    let mut failures = Vec::new();
    let width = rat(1, 1_000_000);
    let one = rat_int(1);
    for &(bn, bd) in &ORTH_BETAS {
        for c in [rat(1, 5), rat(1, 2)] {
            for n in 2..=10usize {
                let p = params(n, rat(bn, bd), c.clone());
                let zeros = zeros_of(&p, &width);
                if zeros.real_count() != n {
                    failures.push(format!("beta={bn}/{bd} c={c} n={n}: missing real zeros"));
                    continue;
                }
                for (i, w) in zeros.intervals().windows(2).enumerate() {
                    if (w[1].lo() - w[0].hi()) <= one {
                        failures.push(format!(
                            "beta={bn}/{bd} c={c} n={n}: gap {}-{} not above 1",
                            i,
                            i + 1
                        ));
                    }
                }
            }
        }
    }
    conclude("7 (consecutive zeros more than 1 apart)", failures);
}

#[test]
fn criterion_8_quasi_orthogonality_sums() {
    let cases = [
        (3usize, rat(-1, 2), rat(1, 2), 1usize),
        (4, rat(-3, 2), rat(1, 5), 2),
        (2, rat_int(1), rat(1, 2), 0),
    ];
    let mut failures = Vec::new();
    for (n, beta, c, r) in cases {
        let p = params(n, beta.clone(), c.clone());
        let report = quasi_orth_sums(&p, r, 200).unwrap();
        let last = report.moments.len() - 1;
        assert_eq!(last, n - r);
        for moment in &report.moments[..last] {
            if !moment.consistent_with_zero() {
                failures.push(format!(
                    "n={n} beta={beta} r={r} m={}: |sum| above tail bound",
                    moment.m
                ));
            }
        }
        if !report.moments[last].distinctly_nonzero() {
            failures.push(format!(
                "n={n} beta={beta} r={r} m={last}: order moment not distinctly nonzero"
            ));
        }
    }
    conclude("8 (quasi-orthogonality sums)", failures);
}

#[test]
fn criterion_9_degenerate_quadratic() {
    let mut failures = Vec::new();
    match quadratic_zeros(&params(2, rat(-9, 8), rat(1, 2))).unwrap() {
        QuadraticZeros::Double(root) if root == rat(3, 8) => {}
        other => failures.push(format!("expected double root 3/8, got {other:?}")),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x9d2a);
    for _ in 0..50 {
        let beta = rat(rng.random_range(-500..=500), rng.random_range(1..=80));
        let c = rat(rng.random_range(1..=99), 100);
        let p = params(2, beta.clone(), c.clone());
        let distinct = count_real_roots(&p.coeffs(), &Bound::NegInf, &Bound::PosInf);
        let classified = quadratic_zeros(&p).unwrap();
        let consistent = matches!(
            (&classified, distinct),
            (QuadraticZeros::TwoReal(_), 2)
                | (QuadraticZeros::Double(_), 1)
                | (QuadraticZeros::ComplexPair, 0)
        );
        if !consistent {
            failures.push(format!(
                "beta={beta} c={c}: classification {classified:?} vs {distinct} distinct roots"
            ));
        }
    }
    conclude("9 (degenerate quadratic classification)", failures);
}
