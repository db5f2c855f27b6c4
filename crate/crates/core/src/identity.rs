//! Exact verification of the five mixed recurrence identities that connect
//! `M_n(x; beta, c)` with neighbours at shifted `beta`.
//!
//! Each check expands both sides symbolically (shifted-`beta` members are
//! always computed by the recurrence, which has no poles) and compares the
//! coefficient vectors. These are polynomial identities in `x`, so the
//! comparison is exact with zero tolerance.

use num_traits::One;

use crate::meixner::{meixner_poly, MeixnerParams};
use crate::poly::Poly;
use crate::rational::{rat_int, Rational};
use crate::verdict::Verdict;

/// The five identity families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// `M_n(b) = M_n(b+1) - nc/(c-1) M_{n-1}(b+1)`: the two-term expansion
    /// over the `beta+1` family.
    Order1,
    /// `M_n(b) = M_n(b+2) + 2nc/(1-c) M_{n-1}(b+2) + n(n-1)(c/(c-1))^2 M_{n-2}(b+2)`:
    /// the three-term expansion over the `beta+2` family.
    Order2,
    /// `(b+n)/(1-c) M_n(b) = (x - C_n) M_n(b+1) - M_{n+1}(b+1)` with
    /// `C_n = -b + (n+1)c/(1-c)`.
    RaiseShift1,
    /// `(b/n + 1) M_n(b) = (b/n + 1 - c) M_n(b+2) + c (x - A_n) M_{n-1}(b+2)`
    /// with `A_n = b/(c-1) - b - n - 1`.
    NodeShift2,
    /// `(x + b(c-2)/(c-1) + n) M_n(b) =
    ///  -(b+n-1)(b-cn+n)/(c-1)^2 M_{n-1}(b) + (x+b)(x+b+1) M_{n-1}(b+2)`.
    MixedShift2,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 5] = [
        IdentityKind::Order1,
        IdentityKind::Order2,
        IdentityKind::RaiseShift1,
        IdentityKind::NodeShift2,
        IdentityKind::MixedShift2,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            IdentityKind::Order1 => "identity-order1",
            IdentityKind::Order2 => "identity-order2",
            IdentityKind::RaiseShift1 => "identity-raise-shift1",
            IdentityKind::NodeShift2 => "identity-node-shift2",
            IdentityKind::MixedShift2 => "identity-mixed-shift2",
        }
    }

    /// Smallest degree at which every member of the identity is defined.
    pub fn min_degree(&self) -> usize {
        match self {
            IdentityKind::RaiseShift1 => 0,
            _ => 1,
        }
    }
}

/// The node `C_n = -beta + (n+1)c/(1-c)` of [`IdentityKind::RaiseShift1`].
pub fn node_c(p: &MeixnerParams) -> Rational {
    let one = Rational::one();
    -p.beta().clone() + rat_int(p.n() as i64 + 1) * p.c() / (one - p.c())
}

/// The node `A_n = beta/(c-1) - beta - n - 1` of [`IdentityKind::NodeShift2`].
pub fn node_a(p: &MeixnerParams) -> Rational {
    p.beta() / (p.c() - Rational::one()) - p.beta() - rat_int(p.n() as i64 + 1)
}

fn sides(kind: IdentityKind, p: &MeixnerParams) -> (Poly, Poly) {
    let n = p.n() as i64;
    let (beta, c) = (p.beta(), p.c());
    let one = Rational::one();
    let m = |deg: i64, shift: i64| meixner_poly(deg, &(beta + rat_int(shift)), c);

    match kind {
        IdentityKind::Order1 => {
            let k = rat_int(n) * c / (c - &one);
            (m(n, 0), &m(n, 1) - &m(n - 1, 1).scaled(&k))
        }
        IdentityKind::Order2 => {
            let k1 = rat_int(2 * n) * c / (&one - c);
            let k2 = rat_int(n * (n - 1)) * (c / (c - &one)).pow(2);
            let rhs = &(&m(n, 2) + &m(n - 1, 2).scaled(&k1)) + &m(n - 2, 2).scaled(&k2);
            (m(n, 0), rhs)
        }
        IdentityKind::RaiseShift1 => {
            let scale = (beta + rat_int(n)) / (&one - c);
            let lhs = m(n, 0).scaled(&scale);
            let rhs = &(&Poly::linear(&node_c(p)) * &m(n, 1)) - &m(n + 1, 1);
            (lhs, rhs)
        }
        IdentityKind::NodeShift2 => {
            let ratio = beta / rat_int(n) + &one;
            let lhs = m(n, 0).scaled(&ratio);
            let rhs = &m(n, 2).scaled(&(&ratio - c))
                + &(&Poly::linear(&node_a(p)) * &m(n - 1, 2)).scaled(c);
            (lhs, rhs)
        }
        IdentityKind::MixedShift2 => {
            let shift = beta * (c - rat_int(2)) / (c - &one) + rat_int(n);
            let lhs = &Poly::new(vec![shift, one.clone()]) * &m(n, 0);
            let cm1 = c - &one;
            let k = -(beta + rat_int(n - 1)) * (beta - c * rat_int(n) + rat_int(n)) / (&cm1 * &cm1);
            let quad = &Poly::linear(&-beta.clone()) * &Poly::linear(&-(beta + &one));
            let rhs = &m(n - 1, 0).scaled(&k) + &(&quad * &m(n - 1, 2));
            (lhs, rhs)
        }
    }
}

/// Expands both sides of the identity and compares coefficients exactly.
///
/// Returns PASS when every coefficient agrees, FAIL with the first
/// differing index and both values otherwise, and DEGENERATE below the
/// smallest degree at which the identity is defined.
pub fn check_identity(kind: IdentityKind, p: &MeixnerParams) -> Verdict {
    if p.n() < kind.min_degree() {
        return Verdict::degenerate(kind.id())
            .with_params(p)
            .with_detail(format!(
                "identity undefined below degree {}",
                kind.min_degree()
            ));
    }
    let (lhs, rhs) = sides(kind, p);
    let diff = &lhs - &rhs;
    match diff.degree() {
        None => Verdict::pass(kind.id()).with_params(p),
        Some(_) => {
            let i = diff
                .coeffs()
                .iter()
                .position(|c| !num_traits::Zero::is_zero(c))
                .unwrap();
            Verdict::fail(kind.id())
                .with_params(p)
                .with_value("coeff_index", rat_int(i as i64))
                .with_value("lhs_coeff", lhs.coeff(i))
                .with_value("rhs_coeff", rhs.coeff(i))
                .with_detail(format!("coefficient of x^{i} differs"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::verdict::Status;

    fn params(n: usize, beta: Rational, c: Rational) -> MeixnerParams {
        MeixnerParams::new(n, beta, c).unwrap()
    }

    #[test]
    fn order1_minimal_case() {
        let v = check_identity(IdentityKind::Order1, &params(1, rat(-1, 2), rat(1, 2)));
        assert_eq!(v.status, Status::Pass);
    }

    #[test]
    fn raise_shift1_with_explicit_node() {
        let p = params(2, rat(-1, 2), rat(1, 2));
        assert_eq!(node_c(&p), rat(7, 2));
        let v = check_identity(IdentityKind::RaiseShift1, &p);
        assert_eq!(v.status, Status::Pass);
    }

    #[test]
    fn mixed_shift2_at_table_parameters() {
        let v = check_identity(
            IdentityKind::MixedShift2,
            &params(5, rat(-19, 10), rat(1, 5)),
        );
        assert_eq!(v.status, Status::Pass);
    }

    #[test]
    fn node_shift2_undefined_at_degree_zero() {
        let v = check_identity(IdentityKind::NodeShift2, &params(0, rat(-1, 2), rat(1, 2)));
        assert_eq!(v.status, Status::Degenerate);
    }

    #[test]
    fn all_kinds_on_a_small_grid() {
        for beta in [rat(-19, 10), rat(-1, 2), rat(3, 2)] {
            for c in [rat(1, 5), rat(4, 5)] {
                for n in 0..=8usize {
                    for kind in IdentityKind::ALL {
                        let v = check_identity(kind, &params(n, beta.clone(), c.clone()));
                        let expect = if n < kind.min_degree() {
                            Status::Degenerate
                        } else {
                            Status::Pass
                        };
                        assert_eq!(v.status, expect, "{kind:?} n={n} beta={beta} c={c}: {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn node_a_matches_direct_arithmetic() {
        // beta = -3/2, c = 1/2, n = 5: A_5 = 3 + 3/2 - 6 = -3/2
        let p = params(5, rat(-3, 2), rat(1, 2));
        assert_eq!(node_a(&p), rat(-3, 2));
        // beta = -9/5, c = 1/2, n = 4: A_4 = 18/5 + 9/5 - 5 = 2/5
        let p = params(4, rat(-9, 5), rat(1, 2));
        assert_eq!(node_a(&p), rat(2, 5));
    }
}
