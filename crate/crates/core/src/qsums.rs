//! Truncated discrete quasi-orthogonality sums.
//!
//! For order `r`, the moments `sum_{x>=0} x^m M_n(x; beta, c) w(x; beta+r, c)`
//! with weight `w(x; b, c) = c^x (b)_x / x!` vanish for `m <= n-r-1` and are
//! nonzero at `m = n-r`. The sums are evaluated exactly up to a truncation
//! point together with a rigorous geometric bound on the neglected tail, so
//! "vanishes" and "distinctly nonzero" become checkable statements about
//! exact rationals.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::identity::{check_identity, IdentityKind};
use crate::meixner::MeixnerParams;
use crate::rational::{rat_int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSum {
    pub m: usize,
    /// `sum_{x=0}^{X} x^m M_n(x) w(x)`, exact.
    pub partial_sum: Rational,
    /// Upper bound on `|sum_{x>X} x^m M_n(x) w(x)|`, exact.
    pub tail_bound: Rational,
}

impl MomentSum {
    /// The truncated sum is within its own tail bound of zero, i.e. the
    /// data is consistent with the full series vanishing.
    pub fn consistent_with_zero(&self) -> bool {
        self.partial_sum.abs() <= self.tail_bound
    }

    /// The truncated sum exceeds twice the tail bound, certifying the full
    /// series is nonzero.
    pub fn distinctly_nonzero(&self) -> bool {
        self.partial_sum.abs() > rat_int(2) * &self.tail_bound
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSumReport {
    pub order_r: usize,
    pub truncation_x: u64,
    /// Moments for `m = 0 ..= n - r`.
    pub moments: Vec<MomentSum>,
}

impl QSumReport {
    /// All moments below `n - r` consistent with zero and the last moment
    /// distinctly nonzero.
    pub fn conclusive(&self) -> bool {
        let last = self.moments.len() - 1;
        self.moments[..last]
            .iter()
            .all(MomentSum::consistent_with_zero)
            && self.moments[last].distinctly_nonzero()
    }

    pub fn largest_magnitude(&self) -> Rational {
        self.moments
            .iter()
            .map(|ms| ms.partial_sum.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSumError {
    #[error("weight parameter beta + r must be positive")]
    WeightNotPositive,
    #[error("order r exceeds the degree")]
    OrderExceedsDegree,
    #[error("truncation point too small to dominate the tail")]
    TailNotBounded,
}

/// Exact truncated moments with tail bounds.
///
/// The tail is dominated coefficientwise: for `x >= 1`,
/// `|x^m M_n(x) w(x)| <= S x^{n+m} w(x)` with `S` the sum of the absolute
/// coefficients of `M_n`, and the ratio of consecutive dominating terms is
/// at most `rho = c ((X+2)/(X+1))^{n+m} max(1, (X+1+b)/(X+2))` beyond the
/// truncation point. `rho < 1` yields the geometric bound
/// `S u_{X+1} / (1 - rho)`; otherwise the truncation point is too small.
pub fn quasi_orth_sums(p: &MeixnerParams, r: usize, x_max: u64) -> Result<QSumReport, QSumError> {
    let b = p.beta() + rat_int(r as i64);
    if !b.is_positive() {
        return Err(QSumError::WeightNotPositive);
    }
    if p.n() < r {
        return Err(QSumError::OrderExceedsDegree);
    }
    let x_max = x_max.max(1);
    let n_moments = p.n() - r;
    let poly = p.coeffs();
    let c = p.c();

    let mut sums = vec![Rational::zero(); n_moments + 1];
    let mut weight = Rational::one(); // w(0) = 1
    for x in 0..=x_max {
        let x_r = rat_int(x as i64);
        let term_base = poly.eval(&x_r) * &weight;
        let mut x_pow = Rational::one(); // x^0 = 1, also at x = 0
        for s in sums.iter_mut() {
            *s += &x_pow * &term_base;
            x_pow *= &x_r;
        }
        // advance to w(x+1) = w(x) * c (b + x) / (x + 1)
        weight = weight * c * (&b + &x_r) / (&x_r + Rational::one());
    }
    // `weight` now holds w(X+1)

    let coeff_sum: Rational = poly
        .coeffs()
        .iter()
        .map(Signed::abs)
        .fold(Rational::zero(), |acc, a| acc + a);
    let x1 = rat_int(x_max as i64 + 1);
    let x2 = rat_int(x_max as i64 + 2);
    let step = &x2 / &x1;
    let b_factor = {
        let f = (&x1 + &b) / &x2;
        if f > Rational::one() {
            f
        } else {
            Rational::one()
        }
    };

    let mut moments = Vec::with_capacity(n_moments + 1);
    for (m, partial_sum) in sums.into_iter().enumerate() {
        let rho = c * step.pow((p.n() + m) as i32) * &b_factor;
        if rho >= Rational::one() {
            return Err(QSumError::TailNotBounded);
        }
        let head = x1.pow((p.n() + m) as i32) * &weight;
        let tail_bound = &coeff_sum * head / (Rational::one() - rho);
        moments.push(MomentSum {
            m,
            partial_sum,
            tail_bound,
        });
    }
    Ok(QSumReport {
        order_r: r,
        truncation_x: x_max,
        moments,
    })
}

/// Grows the truncation point (doubling from 200) until the report is
/// conclusive and the largest tail bound drops below `1e-12` times the
/// largest moment magnitude, capped at 6400.
pub fn quasi_orth_sums_auto(p: &MeixnerParams, r: usize) -> Result<QSumReport, QSumError> {
    let target_ratio = Rational::new(1.into(), 1_000_000_000_000i64.into());
    let mut x_max = 200u64;
    loop {
        match quasi_orth_sums(p, r, x_max) {
            Ok(report) => {
                let worst_bound = report
                    .moments
                    .iter()
                    .map(|ms| ms.tail_bound.clone())
                    .max()
                    .unwrap();
                let threshold = report.largest_magnitude() * &target_ratio;
                if (report.conclusive() && worst_bound < threshold) || x_max >= 6400 {
                    return Ok(report);
                }
            }
            Err(QSumError::TailNotBounded) if x_max < 6400 => {}
            Err(e) => return Err(e),
        }
        x_max *= 2;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("beta out of the supported range (noninteger, beta > -2)")]
    UnsupportedBeta,
    #[error("c must lie strictly between 0 and 1")]
    UnsupportedC,
    #[error("degree too small for this quasi-orthogonality order")]
    DegreeTooSmall,
}

/// Quasi-orthogonality order of `M_n(x; beta, c)` by exact expansion over
/// the nearest orthogonal family.
///
/// `beta > 0` is plain orthogonality (order 0). For `-1 < beta < 0` the
/// two-term expansion over `beta + 1` with nonzero end coefficients gives
/// order 1; for `-2 < beta < -1` the three-term expansion over `beta + 2`
/// gives order 2. Both expansions are re-verified by exact coefficient
/// comparison. Order `r` requires `n >= r + 1`.
pub fn quasi_orth_order_by_expansion(
    beta: &Rational,
    c: &Rational,
    n: usize,
) -> Result<usize, OrderError> {
    if !c.is_positive() || c >= &Rational::one() {
        return Err(OrderError::UnsupportedC);
    }
    if beta.denom().is_one() && !beta.is_positive() {
        return Err(OrderError::UnsupportedBeta);
    }
    if beta <= &rat_int(-2) {
        return Err(OrderError::UnsupportedBeta);
    }
    if beta.is_positive() {
        return Ok(0);
    }
    let p = MeixnerParams::new(n, beta.clone(), c.clone()).expect("c validated above");
    if beta > &rat_int(-1) {
        if n < 2 {
            return Err(OrderError::DegreeTooSmall);
        }
        let v = check_identity(IdentityKind::Order1, &p);
        assert!(v.passed(), "two-term expansion must hold: {v}");
        // end coefficients 1 and -nc/(c-1) are nonzero for n >= 1
        Ok(1)
    } else {
        if n < 3 {
            return Err(OrderError::DegreeTooSmall);
        }
        let v = check_identity(IdentityKind::Order2, &p);
        assert!(v.passed(), "three-term expansion must hold: {v}");
        // end coefficients 1 and n(n-1)(c/(c-1))^2 are nonzero for n >= 2
        Ok(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn params(n: usize, beta: Rational, c: Rational) -> MeixnerParams {
        MeixnerParams::new(n, beta, c).unwrap()
    }

    #[test]
    fn order_detection_per_regime() {
        assert_eq!(
            quasi_orth_order_by_expansion(&rat(1, 2), &rat(1, 2), 4),
            Ok(0)
        );
        assert_eq!(
            quasi_orth_order_by_expansion(&rat(-1, 2), &rat(1, 2), 4),
            Ok(1)
        );
        assert_eq!(
            quasi_orth_order_by_expansion(&rat(-3, 2), &rat(1, 2), 4),
            Ok(2)
        );
        assert_eq!(
            quasi_orth_order_by_expansion(&rat(-5, 2), &rat(1, 2), 4),
            Err(OrderError::UnsupportedBeta)
        );
        assert_eq!(
            quasi_orth_order_by_expansion(&rat_int(-1), &rat(1, 2), 4),
            Err(OrderError::UnsupportedBeta)
        );
        assert_eq!(
            quasi_orth_order_by_expansion(&rat(-3, 2), &rat(1, 2), 2),
            Err(OrderError::DegreeTooSmall)
        );
    }

    #[test]
    fn order1_sums_vanish_below_the_order() {
        let report = quasi_orth_sums(&params(3, rat(-1, 2), rat(1, 2)), 1, 200).unwrap();
        assert_eq!(report.moments.len(), 3);
        assert!(report.moments[0].consistent_with_zero());
        assert!(report.moments[1].consistent_with_zero());
        assert!(report.moments[2].distinctly_nonzero());
        assert!(report.conclusive());
    }

    #[test]
    fn order2_sums_vanish_below_the_order() {
        let report = quasi_orth_sums(&params(4, rat(-3, 2), rat(1, 5)), 2, 200).unwrap();
        assert!(report.moments[0].consistent_with_zero());
        assert!(report.moments[1].consistent_with_zero());
        assert!(report.moments[2].distinctly_nonzero());
    }

    #[test]
    fn plain_orthogonality_as_order_zero() {
        let report = quasi_orth_sums(&params(2, rat_int(1), rat(1, 2)), 0, 200).unwrap();
        assert!(report.moments[0].consistent_with_zero());
        assert!(report.moments[1].consistent_with_zero());
        assert!(report.moments[2].distinctly_nonzero());
    }

    #[test]
    fn weight_must_be_positive() {
        assert_eq!(
            quasi_orth_sums(&params(3, rat(-3, 2), rat(1, 2)), 1, 200),
            Err(QSumError::WeightNotPositive)
        );
    }

    #[test]
    fn tiny_truncation_cannot_bound_the_tail() {
        assert_eq!(
            quasi_orth_sums(&params(6, rat(1, 2), rat(9, 10)), 0, 1),
            Err(QSumError::TailNotBounded)
        );
    }

    #[test]
    fn auto_truncation_handles_slow_decay() {
        let report = quasi_orth_sums_auto(&params(4, rat(-1, 2), rat(4, 5)), 1).unwrap();
        assert!(report.conclusive(), "X = {}", report.truncation_x);
    }
}
