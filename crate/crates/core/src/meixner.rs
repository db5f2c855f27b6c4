//! Monic Meixner polynomials `M_n(x; beta, c)` over exact rationals.
//!
//! Two independent evaluation routes are provided:
//!
//! - [`MeixnerParams::eval_series`]: the terminating hypergeometric sum
//!   `(c/(c-1))^n (beta)_n sum_k (-n)_k (-x)_k (1-1/c)^k / ((beta)_k k!)`,
//!   which is undefined when a denominator Pochhammer vanishes against a
//!   nonzero numerator;
//! - [`MeixnerParams::eval_recurrence`]: the three-term recurrence
//!   `M_n = (x + (bc + cn - c + n - 1)/(c-1)) M_{n-1} - c(n-1)(b+n-2)/(c-1)^2 M_{n-2}`
//!   from `M_{-1} = 0`, `M_0 = 1`, valid for every rational `beta`.
//!
//! The recurrence is the canonical route; the series serves as a
//! cross-check oracle. [`MeixnerParams::coeffs`] runs the same recurrence
//! with `x` kept symbolic and yields the exact monic coefficient vector.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::rational::{rat_int, Rational};

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, k: usize) -> Rational {
    let mut prod = Rational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        prod *= &factor;
        factor += Rational::one();
    }
    prod
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("parameter c must differ from 0 and 1")]
    CExcluded,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// `(beta)_k` vanished in a denominator against a nonzero numerator.
    #[error("series pole: (beta)_{k} vanishes with nonzero numerator partner")]
    Pole { k: usize },
}

/// One polynomial of the family: degree `n` and parameters `(beta, c)`,
/// with `c` outside `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeixnerParams {
    n: usize,
    beta: Rational,
    c: Rational,
}

impl MeixnerParams {
    pub fn new(n: usize, beta: Rational, c: Rational) -> Result<Self, ParamError> {
        if c.is_zero() || c.is_one() {
            return Err(ParamError::CExcluded);
        }
        Ok(MeixnerParams { n, beta, c })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// Same parameters, different degree.
    pub fn with_degree(&self, n: usize) -> Self {
        MeixnerParams { n, ..self.clone() }
    }

    /// Same degree and `c`, with `beta` shifted by an integer.
    pub fn shift_beta(&self, t: i64) -> Self {
        MeixnerParams {
            n: self.n,
            beta: &self.beta + rat_int(t),
            c: self.c.clone(),
        }
    }

    /// Recurrence coefficients `(B_k, C_k)` for the step
    /// `M_k = (x + B_k) M_{k-1} - C_k M_{k-2}`.
    fn step_coeffs(&self, k: usize) -> (Rational, Rational) {
        let k_r = rat_int(k as i64);
        let cm1 = &self.c - Rational::one();
        let b = (&self.beta * &self.c + &self.c * &k_r - &self.c + &k_r - Rational::one()) / &cm1;
        let c = &self.c * rat_int(k as i64 - 1) * (&self.beta + k_r - rat_int(2)) / (&cm1 * &cm1);
        (b, c)
    }

    /// Terminating hypergeometric sum, computed exactly term by term.
    ///
    /// Terms whose numerator and denominator both vanish are dropped;
    /// a vanishing denominator against a nonzero numerator is a
    /// [`SeriesError::Pole`].
    pub fn eval_series(&self, x: &Rational) -> Result<Rational, SeriesError> {
        let z = Rational::one() - self.c.recip();
        let minus_n = -rat_int(self.n as i64);
        let minus_x = -x.clone();

        let mut sum = Rational::zero();
        let mut num = Rational::one(); // (-n)_k (-x)_k z^k
        let mut den = Rational::one(); // (beta)_k k!
        for k in 0..=self.n {
            if k > 0 {
                let j = rat_int(k as i64 - 1);
                num *= (&minus_n + &j) * (&minus_x + &j) * &z;
                den *= (&self.beta + &j) * rat_int(k as i64);
            }
            if den.is_zero() {
                if num.is_zero() {
                    continue;
                }
                return Err(SeriesError::Pole { k });
            }
            sum += &num / &den;
        }

        let scale = (&self.c / (&self.c - Rational::one())).pow(self.n as i32);
        Ok(scale * pochhammer(&self.beta, self.n) * sum)
    }

    /// Three-term recurrence evaluation at a rational point.
    pub fn eval_recurrence(&self, x: &Rational) -> Rational {
        let mut prev = Rational::zero(); // M_{-1}
        let mut cur = Rational::one(); // M_0
        for k in 1..=self.n {
            let (b, c) = self.step_coeffs(k);
            let next = (x + b) * &cur - c * &prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Exact monic coefficient vector, by running the recurrence with `x`
    /// symbolic.
    pub fn coeffs(&self) -> Poly {
        let mut prev = Poly::zero();
        let mut cur = Poly::one();
        for k in 1..=self.n {
            let (b, c) = self.step_coeffs(k);
            let shifted = Poly::new(vec![b, Rational::one()]); // x + B_k
            let next = &(&shifted * &cur) - &prev.scaled(&c);
            prev = cur;
            cur = next;
        }
        debug_assert_eq!(cur.degree(), Some(self.n));
        debug_assert!(cur.is_monic());
        cur
    }

    /// `M_n(0) = (c/(c-1))^n (beta)_n` in closed form.
    pub fn value_at_zero(&self) -> Rational {
        (&self.c / (&self.c - Rational::one())).pow(self.n as i32) * pochhammer(&self.beta, self.n)
    }
}

/// `M_n` coefficients for a possibly negative degree: `M_{-1} = 0`.
pub(crate) fn meixner_poly(n: i64, beta: &Rational, c: &Rational) -> Poly {
    if n < 0 {
        return Poly::zero();
    }
    MeixnerParams::new(n as usize, beta.clone(), c.clone())
        .expect("caller guarantees valid c")
        .coeffs()
}
