//! Rigorous real-zero isolation for exact rational polynomials.
//!
//! [`isolate_zeros`] produces a [`ZeroSet`]: sorted, pairwise disjoint
//! [`IsolatingInterval`]s covering every distinct real root with its exact
//! multiplicity (from square-free decomposition). Rational roots found
//! exactly (linear factors, or bisection midpoints that land on a root)
//! collapse to point intervals. [`refine`] narrows a bracket by pure
//! bisection on exact signs, and [`zeros_of`] composes coefficient
//! expansion, isolation and refinement for one Meixner polynomial.

use thiserror::Error;

use crate::meixner::MeixnerParams;
use crate::poly::Poly;
use crate::rational::{rat, rat_int, Rational};
use crate::sturm::{bisect_step, bisect_to_width, isolate_squarefree, Refined, SqfRoot};

/// A closed rational interval `[lo, hi]` isolating one distinct real root.
///
/// For a bracket, the root lies strictly inside and the endpoints are not
/// roots; when the root is known exactly, `lo == hi == exact`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    lo: Rational,
    hi: Rational,
    exact: Option<Rational>,
    multiplicity: usize,
}

impl IsolatingInterval {
    fn bracket(lo: Rational, hi: Rational, multiplicity: usize) -> Self {
        debug_assert!(lo < hi);
        IsolatingInterval {
            lo,
            hi,
            exact: None,
            multiplicity,
        }
    }

    fn at_point(r: Rational, multiplicity: usize) -> Self {
        IsolatingInterval {
            lo: r.clone(),
            hi: r.clone(),
            exact: Some(r),
            multiplicity,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn exact(&self) -> Option<&Rational> {
        self.exact.as_ref()
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    /// Closed containment test.
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// The whole interval lies strictly below `x`.
    pub fn strictly_below(&self, x: &Rational) -> bool {
        &self.hi < x
    }

    /// The whole interval lies strictly above `x`.
    pub fn strictly_above(&self, x: &Rational) -> bool {
        &self.lo > x
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RefineError {
    #[error("no sign change over the bracket")]
    NoSignChange,
}

/// All real zeros of one polynomial: sorted, strictly disjoint isolating
/// intervals with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSet {
    poly: Poly,
    degree: usize,
    intervals: Vec<IsolatingInterval>,
    /// Index of the square-free polynomial whose sign changes narrow
    /// interval `i`.
    owners: Vec<usize>,
    factors: Vec<Poly>,
}

impl ZeroSet {
    /// The polynomial these zeros belong to.
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// Degree of the source polynomial.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of distinct real roots.
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Number of real roots counted with multiplicity.
    pub fn real_count(&self) -> usize {
        self.intervals.iter().map(|iv| iv.multiplicity).sum()
    }

    pub fn intervals(&self) -> &[IsolatingInterval] {
        &self.intervals
    }

    pub fn get(&self, i: usize) -> &IsolatingInterval {
        &self.intervals[i]
    }

    /// One bisection step on interval `i` (no-op for exact roots).
    pub(crate) fn refine_interval_once(&mut self, i: usize) {
        let iv = &self.intervals[i];
        if iv.exact.is_some() {
            return;
        }
        let f = &self.factors[self.owners[i]];
        let mult = iv.multiplicity;
        self.intervals[i] = match bisect_step(f, &iv.lo, &iv.hi) {
            Refined::Exact(r) => IsolatingInterval::at_point(r, mult),
            Refined::Bracket { lo, hi } => IsolatingInterval::bracket(lo, hi, mult),
        };
    }

    /// Narrows every interval to width <= `width`.
    pub fn refine_all(&mut self, width: &Rational) {
        for i in 0..self.intervals.len() {
            let iv = &self.intervals[i];
            if iv.exact.is_some() || &iv.width() <= width {
                continue;
            }
            let f = &self.factors[self.owners[i]];
            let mult = iv.multiplicity;
            self.intervals[i] = match bisect_to_width(f, iv.lo.clone(), iv.hi.clone(), width) {
                Refined::Exact(r) => IsolatingInterval::at_point(r, mult),
                Refined::Bracket { lo, hi } => IsolatingInterval::bracket(lo, hi, mult),
            };
        }
    }

    /// Splits the zeros strictly below / strictly above `point`, refining
    /// on demand so that every root is on a definite side. Returns
    /// `(below, at, above)` where `at` is the multiplicity of `point` as a
    /// root (0 when it is not one).
    pub fn partition_at(&self, point: &Rational) -> (ZeroSet, usize, ZeroSet) {
        let mut work = self.clone();
        let mut at = 0usize;
        // The refiner vanishing at `point` means the root isolated by the
        // bracket containing `point` is `point` itself.
        for i in 0..work.intervals.len() {
            let iv = &work.intervals[i];
            if !iv.contains(point) {
                continue;
            }
            if let Some(e) = &iv.exact {
                if e == point {
                    at = iv.multiplicity;
                }
                continue;
            }
            let owner = work.owners[i];
            if work.factors[owner].sign_at(point) == 0 {
                let mult = iv.multiplicity;
                work.intervals[i] = IsolatingInterval::at_point(point.clone(), mult);
                at = mult;
            }
        }
        for _ in 0..MAX_SEPARATION_ROUNDS {
            let mut touched = false;
            for i in 0..work.intervals.len() {
                let iv = &work.intervals[i];
                if iv.exact.as_ref() == Some(point) {
                    continue;
                }
                if iv.contains(point) {
                    work.refine_interval_once(i);
                    touched = true;
                }
            }
            if !touched {
                break;
            }
        }
        let split = |keep: &dyn Fn(&IsolatingInterval) -> bool| -> ZeroSet {
            let mut intervals = Vec::new();
            let mut owners = Vec::new();
            for (iv, owner) in work.intervals.iter().zip(&work.owners) {
                if keep(iv) {
                    intervals.push(iv.clone());
                    owners.push(*owner);
                }
            }
            ZeroSet {
                poly: work.poly.clone(),
                degree: work.degree,
                intervals,
                owners,
                factors: work.factors.clone(),
            }
        };
        let below = split(&|iv: &IsolatingInterval| iv.strictly_below(point));
        let above = split(&|iv: &IsolatingInterval| iv.strictly_above(point));
        (below, at, above)
    }
}

const MAX_SEPARATION_ROUNDS: usize = 4096;

/// Isolates every distinct real root of `p` with multiplicity.
///
/// Constants yield an empty set; the zero polynomial is rejected.
pub fn isolate_zeros(p: &Poly) -> ZeroSet {
    let degree = p
        .degree()
        .expect("cannot isolate zeros of the zero polynomial");
    let mut factors = Vec::new();
    let mut entries: Vec<(IsolatingInterval, usize)> = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        let owner = factors.len();
        let isolation = isolate_squarefree(&factor);
        for root in isolation.roots {
            let iv = match root {
                SqfRoot::Exact(r) => IsolatingInterval::at_point(r, mult),
                SqfRoot::Bracket { lo, hi } => IsolatingInterval::bracket(lo, hi, mult),
            };
            entries.push((iv, owner));
        }
        // Brackets carry sign changes of the deflated refiner, not of the
        // full factor (an exactly-hit root may sit inside a bracket).
        factors.push(isolation.refiner);
    }

    separate(&mut entries, &factors);
    entries.sort_by(|a, b| a.0.lo.cmp(&b.0.lo));
    debug_assert!(entries.windows(2).all(|w| w[0].0.hi < w[1].0.lo));

    let (intervals, owners) = entries.into_iter().unzip();
    ZeroSet {
        poly: p.clone(),
        degree,
        intervals,
        owners,
        factors,
    }
}

/// Refines overlapping pairs until all intervals are strictly disjoint.
/// Distinct roots always separate, so this terminates.
fn separate(entries: &mut [(IsolatingInterval, usize)], factors: &[Poly]) {
    for _ in 0..MAX_SEPARATION_ROUNDS {
        let mut overlap = false;
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                let (a, b) = (&entries[i].0, &entries[j].0);
                if a.lo <= b.hi && b.lo <= a.hi {
                    overlap = true;
                    for k in [i, j] {
                        let (iv, owner) = &entries[k];
                        if iv.exact.is_some() {
                            continue;
                        }
                        let mult = iv.multiplicity;
                        entries[k].0 = match bisect_step(&factors[*owner], &iv.lo, &iv.hi) {
                            Refined::Exact(r) => IsolatingInterval::at_point(r, mult),
                            Refined::Bracket { lo, hi } => IsolatingInterval::bracket(lo, hi, mult),
                        };
                    }
                }
            }
        }
        if !overlap {
            return;
        }
    }
    unreachable!("coprime square-free factors have distinct roots");
}

/// Narrows an isolating interval to width <= `width` by bisection on the
/// exact signs of `p`. Point intervals pass through unchanged; a bracket
/// without a sign change of odd total multiplicity is rejected.
pub fn refine(
    p: &Poly,
    iv: &IsolatingInterval,
    width: &Rational,
) -> Result<IsolatingInterval, RefineError> {
    if iv.exact.is_some() {
        return Ok(iv.clone());
    }
    if p.sign_at(&iv.lo) as i32 * p.sign_at(&iv.hi) as i32 >= 0 {
        return Err(RefineError::NoSignChange);
    }
    Ok(
        match bisect_to_width(p, iv.lo.clone(), iv.hi.clone(), width) {
            Refined::Exact(r) => IsolatingInterval::at_point(r, iv.multiplicity),
            Refined::Bracket { lo, hi } => IsolatingInterval::bracket(lo, hi, iv.multiplicity),
        },
    )
}

/// All real zeros of `M_n(x; beta, c)`, each interval narrowed to
/// width <= `width`.
pub fn zeros_of(params: &MeixnerParams, width: &Rational) -> ZeroSet {
    let mut set = isolate_zeros(&params.coeffs());
    set.refine_all(width);
    set
}

/// Closed-form classification of the degree-2 polynomial by the exact sign
/// of the discriminant `4 beta c + (c+1)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadraticZeros {
    TwoReal(ZeroSet),
    Double(Rational),
    ComplexPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum QuadraticError {
    #[error("classification requires degree 2")]
    DegreeNotTwo,
}

pub fn quadratic_zeros(params: &MeixnerParams) -> Result<QuadraticZeros, QuadraticError> {
    if params.n() != 2 {
        return Err(QuadraticError::DegreeNotTwo);
    }
    let (beta, c) = (params.beta(), params.c());
    let one = rat_int(1);
    let disc = rat_int(4) * beta * c + (c + &one) * (c + &one);
    Ok(match crate::rational::sign(&disc) {
        0 => {
            let root = (rat_int(2) * beta * c + c + &one) / (rat_int(2) * (&one - c));
            QuadraticZeros::Double(root)
        }
        1 => QuadraticZeros::TwoReal(zeros_of(params, &rat(1, 1_000_000_000))),
        _ => QuadraticZeros::ComplexPair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sturm::{count_real_roots, Bound};

    fn params(n: usize, beta: Rational, c: Rational) -> MeixnerParams {
        MeixnerParams::new(n, beta, c).unwrap()
    }

    fn product_of_linear(roots: &[i64]) -> Poly {
        roots
            .iter()
            .fold(Poly::one(), |acc, &r| &acc * &Poly::linear(&rat_int(r)))
    }

    #[test]
    fn constant_has_no_zeros() {
        let set = isolate_zeros(&Poly::from_integers(&[1]));
        assert!(set.is_empty());
        assert_eq!(set.real_count(), 0);
    }

    #[test]
    fn isolates_two_rational_roots() {
        // M_2(x; 2, 1/2) = (x-1)(x-6)
        let set = isolate_zeros(&params(2, rat_int(2), rat(1, 2)).coeffs());
        assert_eq!(set.real_count(), 2);
        assert!(set.get(0).contains(&rat_int(1)));
        assert!(set.get(1).contains(&rat_int(6)));
    }

    #[test]
    fn double_root_is_exact_with_multiplicity_two() {
        let set = isolate_zeros(&params(2, rat(-9, 8), rat(1, 2)).coeffs());
        assert_eq!(set.len(), 1);
        assert_eq!(set.get(0).exact(), Some(&rat(3, 8)));
        assert_eq!(set.get(0).multiplicity(), 2);
        assert_eq!(set.real_count(), 2);
    }

    #[test]
    fn intervals_are_sorted_and_disjoint() {
        let p = product_of_linear(&[-3, 0, 2, 5, 9]);
        let set = isolate_zeros(&p);
        assert_eq!(set.real_count(), 5);
        for w in set.intervals().windows(2) {
            assert!(w[0].hi() < w[1].lo());
        }
    }

    #[test]
    fn refine_narrows_sqrt_two_bracket() {
        let p = Poly::from_integers(&[-2, 0, 1]);
        let iv = IsolatingInterval::bracket(rat_int(1), rat_int(2), 1);
        let width = rat(1, 1 << 20);
        let out = refine(&p, &iv, &width).unwrap();
        assert!(out.width() <= width);
        assert!(out.lo() < out.hi());
    }

    #[test]
    fn refine_keeps_exact_roots_untouched() {
        let p = Poly::from_integers(&[-2, 0, 1]);
        let iv = IsolatingInterval::at_point(rat(3, 8), 2);
        assert_eq!(refine(&p, &iv, &rat(1, 1024)).unwrap(), iv);
    }

    #[test]
    fn refine_rejects_bracket_without_sign_change() {
        let lin = Poly::linear(&rat_int(1));
        let p = &lin * &lin; // (x-1)^2 > 0 away from 1
        let iv = IsolatingInterval::bracket(rat_int(0), rat_int(2), 2);
        assert_eq!(refine(&p, &iv, &rat(1, 8)), Err(RefineError::NoSignChange));
    }

    #[test]
    fn zeros_of_linear_is_exact() {
        // M_1 zero is beta c/(1-c) = -3/2 at these parameters
        let set = zeros_of(&params(1, rat(-3, 2), rat(1, 2)), &rat(1, 1000));
        assert_eq!(set.len(), 1);
        assert_eq!(set.get(0).exact(), Some(&rat(-3, 2)));
    }

    #[test]
    fn degree_ten_zero_count_matches_sturm() {
        let p = params(10, rat(-3, 2), rat(1, 2)).coeffs();
        assert_eq!(
            count_real_roots(&p, &Bound::At(rat_int(0)), &Bound::PosInf),
            10
        );
        let set = isolate_zeros(&p);
        assert_eq!(set.real_count(), 10);
        let (below, at, above) = set.partition_at(&rat_int(0));
        assert_eq!((below.real_count(), at, above.real_count()), (0, 0, 10));
    }

    #[test]
    fn complex_pair_quadratic_has_no_real_zeros() {
        let p = params(2, rat(-7, 4), rat(3, 4));
        assert_eq!(
            count_real_roots(&p.coeffs(), &Bound::NegInf, &Bound::PosInf),
            0
        );
        assert!(isolate_zeros(&p.coeffs()).is_empty());
    }

    #[test]
    fn quadratic_classification_examples() {
        match quadratic_zeros(&params(2, rat(-9, 8), rat(1, 2))).unwrap() {
            QuadraticZeros::Double(r) => assert_eq!(r, rat(3, 8)),
            other => panic!("expected double root, got {other:?}"),
        }
        match quadratic_zeros(&params(2, rat_int(2), rat(1, 2))).unwrap() {
            QuadraticZeros::TwoReal(set) => {
                assert_eq!(set.real_count(), 2);
                assert!(set.get(0).contains(&rat_int(1)));
                assert!(set.get(1).contains(&rat_int(6)));
            }
            other => panic!("expected two real roots, got {other:?}"),
        }
        assert_eq!(
            quadratic_zeros(&params(2, rat(-7, 4), rat(3, 4))).unwrap(),
            QuadraticZeros::ComplexPair
        );
        assert_eq!(
            quadratic_zeros(&params(3, rat(-7, 4), rat(3, 4))),
            Err(QuadraticError::DegreeNotTwo)
        );
    }

    #[test]
    fn partition_at_splits_signed_zeros() {
        // M_5(x; -1/2, 1/2): one negative zero, four positive
        let set = zeros_of(&params(5, rat(-1, 2), rat(1, 2)), &rat(1, 1024));
        let (below, at, above) = set.partition_at(&rat_int(0));
        assert_eq!(at, 0);
        assert_eq!(below.real_count(), 1);
        assert_eq!(above.real_count(), 4);
    }

    #[test]
    fn partition_at_detects_exact_root() {
        // (x-1)(x-6) partitioned at 1
        let set = isolate_zeros(&params(2, rat_int(2), rat(1, 2)).coeffs());
        let (below, at, above) = set.partition_at(&rat_int(1));
        assert_eq!(at, 1);
        assert_eq!(below.real_count(), 0);
        assert_eq!(above.real_count(), 1);
    }
}
