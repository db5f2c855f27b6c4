//! Cross-checks the two independent evaluation routes against each other
//! and against the closed forms at special points, over a parameter grid
//! spanning all three regimes.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qmeixner::{check_identity, pochhammer, rat, rat_int, IdentityKind, MeixnerParams, Rational};

fn beta_grid() -> Vec<Rational> {
    [
        (-19, 10),
        (-3, 2),
        (-11, 10),
        (-9, 10),
        (-1, 2),
        (-1, 10),
        (1, 2),
        (3, 2),
        (5, 1),
    ]
    .iter()
    .map(|&(n, d)| rat(n, d))
    .collect()
}

fn c_grid() -> Vec<Rational> {
    vec![rat(1, 5), rat(1, 2), rat(4, 5)]
}

#[test]
fn series_and_recurrence_agree_on_the_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for beta in beta_grid() {
        for c in c_grid() {
            for n in 0..=15usize {
                let p = MeixnerParams::new(n, beta.clone(), c.clone()).unwrap();
                for _ in 0..10 {
                    let x = rat(rng.random_range(-500..=500), rng.random_range(1..=60));
                    let via_series = p.eval_series(&x).expect("grid avoids series poles");
                    assert_eq!(
                        via_series,
                        p.eval_recurrence(&x),
                        "n={n} beta={beta} c={c} x={x}"
                    );
                }
            }
        }
    }
}

#[test]
fn coefficient_vectors_are_monic_and_evaluate_consistently() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    for beta in [rat(-19, 10), rat(-1, 2), rat(5, 1)] {
        for c in c_grid() {
            for n in 0..=15usize {
                let p = MeixnerParams::new(n, beta.clone(), c.clone()).unwrap();
                let poly = p.coeffs();
                assert_eq!(poly.degree(), Some(n));
                assert!(poly.is_monic());
                let x = rat(rng.random_range(-100..=100), rng.random_range(1..=20));
                assert_eq!(poly.eval(&x), p.eval_recurrence(&x));
            }
        }
    }
}

#[test]
fn closed_forms_hold_across_the_grid() {
    for beta in beta_grid() {
        for c in c_grid() {
            for n in 0..=12usize {
                let p = MeixnerParams::new(n, beta.clone(), c.clone()).unwrap();
                let cm1 = &c - Rational::one();
                let poch = pochhammer(&beta, n);

                let at_zero = p.eval_recurrence(&Rational::zero());
                assert_eq!(&at_zero * (&cm1 / &c).pow(n as i32), poch);
                assert_eq!(at_zero, p.value_at_zero());

                let at_minus_beta = p.eval_recurrence(&-beta.clone());
                assert_eq!(at_minus_beta * cm1.pow(n as i32), poch);

                if !at_zero.is_zero() {
                    let at_one = p.eval_recurrence(&Rational::one());
                    let n_r = rat_int(n as i64);
                    let expected = (&beta * &c + &c * &n_r - &n_r) / (&beta * &c);
                    assert_eq!(at_one / at_zero, expected);
                }
            }
        }
    }
}

#[test]
fn identities_pass_on_a_medium_grid() {
    for beta in [rat(-19, 10), rat(-9, 10), rat(-1, 10), rat(3, 2)] {
        for c in [rat(1, 5), rat(4, 5)] {
            for n in 0..=12usize {
                let p = MeixnerParams::new(n, beta.clone(), c.clone()).unwrap();
                for kind in IdentityKind::ALL {
                    let v = check_identity(kind, &p);
                    if n >= kind.min_degree() {
                        assert!(v.passed(), "{v}");
                    }
                }
            }
        }
    }
}
