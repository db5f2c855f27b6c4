//! Verifiers for the zero-location and interlacing properties of the
//! orthogonal (`beta > 0`) and quasi-orthogonal (`-2 < beta < 0`) regimes.
//!
//! All decisions are exact: interval comparisons refine isolating
//! intervals on demand, threshold comparisons are rational, and every
//! non-vanishing hypothesis (common zeros, node hits) is tested by exact
//! polynomial evaluation or gcd, never by numeric closeness. Boundary
//! equality cases return NOT_APPLICABLE since the checked statements use
//! strict inequalities.

// errors carry exact rational witnesses and are rare-path
#![allow(clippy::result_large_err)]

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::identity::{node_a, node_c};
use crate::meixner::MeixnerParams;
use crate::poly::Poly;
use crate::rational::{exact_str, rat, rat_int, Rational};
use crate::verdict::Verdict;
use crate::zeros::{isolate_zeros, IsolatingInterval, ZeroSet};

const MAX_ROUNDS: usize = 4096;

/// Width to which witnessed intervals are narrowed before reporting.
/// Decisions never depend on it; only the readability of witnesses does.
fn witness_width() -> Rational {
    rat(1, 10_000_000_000)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterlaceError {
    #[error("set sizes {big} vs {small} do not fit any interlacing pattern")]
    SizeMismatch { big: usize, small: usize },
    #[error(
        "the polynomials share a real zero near [{}, {}]",
        exact_str(lo),
        exact_str(hi)
    )]
    CommonZero { lo: Rational, hi: Rational },
    #[error("interval separation did not converge")]
    Unresolved,
}

/// A located root: a point or a bracket, strictly comparable once disjoint.
#[derive(Debug, Clone)]
struct Pos {
    lo: Rational,
    hi: Rational,
}

impl Pos {
    fn of(iv: &IsolatingInterval) -> Pos {
        Pos {
            lo: iv.lo().clone(),
            hi: iv.hi().clone(),
        }
    }

    fn point(r: &Rational) -> Pos {
        Pos {
            lo: r.clone(),
            hi: r.clone(),
        }
    }

    fn lt(&self, other: &Pos) -> bool {
        self.hi < other.lo
    }
}

/// An isolating interval around a real zero shared by both polynomials,
/// if one exists. This is the exact evidence used for DEGENERATE verdicts.
pub fn common_real_zero(pa: &Poly, pb: &Poly) -> Option<IsolatingInterval> {
    let g = Poly::gcd(pa, pb);
    if g.degree().is_none_or(|d| d == 0) {
        return None;
    }
    isolate_zeros(&g).intervals().first().cloned()
}

/// Refines intervals across the given sets until all are strictly disjoint.
fn separate_sets(sets: &mut [&mut ZeroSet]) -> Result<(), InterlaceError> {
    for _ in 0..MAX_ROUNDS {
        let mut overlap = false;
        for a in 0..sets.len() {
            for b in a + 1..sets.len() {
                for i in 0..sets[a].len() {
                    for j in 0..sets[b].len() {
                        let (x, y) = (sets[a].get(i), sets[b].get(j));
                        if x.lo() <= y.hi() && y.lo() <= x.hi() {
                            overlap = true;
                            sets[a].refine_interval_once(i);
                            sets[b].refine_interval_once(j);
                        }
                    }
                }
            }
        }
        if !overlap {
            return Ok(());
        }
    }
    Err(InterlaceError::Unresolved)
}

/// Refines until no interval of `set` contains `point`. The point must not
/// be a root of the set's polynomial.
fn exclude_point(set: &mut ZeroSet, point: &Rational) -> Result<(), InterlaceError> {
    for _ in 0..MAX_ROUNDS {
        let mut touched = false;
        for i in 0..set.len() {
            if set.get(i).contains(point) {
                set.refine_interval_once(i);
                touched = true;
            }
        }
        if !touched {
            return Ok(());
        }
    }
    Err(InterlaceError::Unresolved)
}

fn positions(set: &ZeroSet) -> Vec<Pos> {
    set.intervals().iter().map(Pos::of).collect()
}

/// `big[0] < small[0] < big[1] < ... < small[k-1] < big[k]`: every element
/// of `small` strictly between consecutive elements of `big`. Returns the
/// index of the first violated slot.
fn between(big: &[Pos], small: &[Pos]) -> Result<(), usize> {
    debug_assert_eq!(big.len(), small.len() + 1);
    for (i, s) in small.iter().enumerate() {
        if !(big[i].lt(s) && s.lt(&big[i + 1])) {
            return Err(i);
        }
    }
    Ok(())
}

/// `first[0] < second[0] < first[1] < second[1] < ...` for equal sizes.
fn alternate(first: &[Pos], second: &[Pos]) -> Result<(), usize> {
    debug_assert_eq!(first.len(), second.len());
    for i in 0..first.len() {
        if !first[i].lt(&second[i]) {
            return Err(i);
        }
        if i + 1 < first.len() && !second[i].lt(&first[i + 1]) {
            return Err(i);
        }
    }
    Ok(())
}

/// Strict interlacing test: `a` must have one root more than `b`, and the
/// i-th root of `b` must lie strictly between the i-th and (i+1)-th roots
/// of `a`. A shared real zero is reported as an error with exact evidence.
pub fn check_interlacing(a: &ZeroSet, b: &ZeroSet) -> Result<bool, InterlaceError> {
    if a.len() != b.len() + 1 {
        return Err(InterlaceError::SizeMismatch {
            big: a.len(),
            small: b.len(),
        });
    }
    if b.is_empty() {
        return Ok(true);
    }
    if let Some(iv) = common_real_zero(a.poly(), b.poly()) {
        return Err(InterlaceError::CommonZero {
            lo: iv.lo().clone(),
            hi: iv.hi().clone(),
        });
    }
    let mut sa = a.clone();
    let mut sb = b.clone();
    separate_sets(&mut [&mut sa, &mut sb])?;
    Ok(between(&positions(&sa), &positions(&sb)).is_ok())
}

/// Interlacing of `big` against `small` augmented by one exact `node`.
///
/// Supports both size patterns that arise: `|big| = |small| + 1` (node
/// fills a gap, between-pattern) and `|big| = |small| + 2` is rejected.
/// A node landing exactly on a zero of either polynomial is the violated
/// common-zero hypothesis and yields DEGENERATE.
pub fn check_interlacing_with_node(
    big: &ZeroSet,
    small: &ZeroSet,
    node: &Rational,
) -> Result<Verdict, InterlaceError> {
    const ID: &str = "node-interlacing";
    if big.poly().eval(node).is_zero() || small.poly().eval(node).is_zero() {
        return Ok(Verdict::degenerate(ID)
            .with_value("node", node.clone())
            .with_detail("node is a zero of one of the polynomials"));
    }
    let merged_len = small.len() + 1;
    if big.len() != merged_len && big.len() != merged_len + 1 {
        return Err(InterlaceError::SizeMismatch {
            big: big.len(),
            small: merged_len,
        });
    }
    if let Some(iv) = common_real_zero(big.poly(), small.poly()) {
        return Err(InterlaceError::CommonZero {
            lo: iv.lo().clone(),
            hi: iv.hi().clone(),
        });
    }

    let mut sb = big.clone();
    let mut ss = small.clone();
    separate_sets(&mut [&mut sb, &mut ss])?;
    exclude_point(&mut sb, node)?;
    exclude_point(&mut ss, node)?;

    let mut merged = positions(&ss);
    merged.push(Pos::point(node));
    merged.sort_by(|a, b| a.lo.cmp(&b.lo));
    let big_pos = positions(&sb);

    let outcome = if big_pos.len() == merged.len() {
        alternate(&merged, &big_pos)
    } else {
        between(&big_pos, &merged)
    };
    Ok(match outcome {
        Ok(()) => Verdict::pass(ID).with_value("node", node.clone()),
        Err(i) => Verdict::fail(ID)
            .with_value("node", node.clone())
            .with_value("violation_index", rat_int(i as i64))
            .with_detail(format!("interlacing breaks at position {i}")),
    })
}

fn in_unit_interval(c: &Rational) -> bool {
    c.is_positive() && c < &Rational::one()
}

fn beta_in_open(beta: &Rational, lo: i64, hi: i64) -> bool {
    &rat_int(lo) < beta && beta < &rat_int(hi)
}

/// `beta/(c-1)`, the threshold degree above which all zeros are real and
/// positive in the order-2 regime.
pub fn realness_threshold(p: &MeixnerParams) -> Rational {
    p.beta() / (p.c() - Rational::one())
}

fn na(id: &str, p: &MeixnerParams, why: &str) -> Verdict {
    Verdict::not_applicable(id).with_params(p).with_detail(why)
}

fn degenerate_common_zero(id: &str, p: &MeixnerParams, iv: &IsolatingInterval) -> Verdict {
    Verdict::degenerate(id)
        .with_params(p)
        .with_interval("common_zero", iv.lo().clone(), iv.hi().clone())
        .with_detail("polynomials share a real zero (nonconstant gcd)")
}

fn map_node_check(result: Result<Verdict, InterlaceError>, id: &str, p: &MeixnerParams) -> Verdict {
    match result {
        Ok(v) => v.with_id(id).with_params(p),
        Err(InterlaceError::CommonZero { lo, hi }) => Verdict::degenerate(id)
            .with_params(p)
            .with_interval("common_zero", lo, hi)
            .with_detail("polynomials share a real zero (nonconstant gcd)"),
        Err(e) => Verdict::fail(id)
            .with_params(p)
            .with_detail(format!("internal interlacing engine error: {e}")),
    }
}

/// First-zero bounds in the orthogonal regime `beta > 0`.
///
/// For `n = 1` the single zero is exactly `beta c/(1-c)` (and `<= beta`
/// when `c <= 1/2`); for `n >= 2` with `n > beta c/(1-c)` strictly, the
/// two smallest zeros straddle 1. The boundary `n = beta c/(1-c)` places a
/// zero exactly at 1 and is NOT_APPLICABLE.
pub fn verify_first_zeros(p: &MeixnerParams) -> Verdict {
    const ID: &str = "orth-first-zeros";
    let (beta, c) = (p.beta(), p.c());
    if !beta.is_positive() || !in_unit_interval(c) {
        return na(ID, p, "requires beta > 0 and 0 < c < 1");
    }
    let expected = beta * c / (Rational::one() - c);
    if p.n() == 0 {
        return na(ID, p, "degree 0 has no zeros");
    }
    if p.n() == 1 {
        let root = -p.coeffs().coeff(0);
        if root != expected {
            return Verdict::fail(ID)
                .with_params(p)
                .with_value("zero", root)
                .with_value("expected", expected);
        }
        if c <= &rat(1, 2) && &root > beta {
            return Verdict::fail(ID)
                .with_params(p)
                .with_value("zero", root)
                .with_detail("zero exceeds beta although c <= 1/2");
        }
        return Verdict::pass(ID).with_params(p).with_value("zero", root);
    }
    let n_r = rat_int(p.n() as i64);
    if n_r == expected {
        return na(ID, p, "boundary case: 1 is itself a zero");
    }
    if n_r < expected {
        return na(ID, p, "degree below beta c/(1-c)");
    }
    let zeros = isolate_zeros(&p.coeffs());
    let (negative, at_zero, _) = zeros.partition_at(&Rational::zero());
    let (below_one, at_one, _) = zeros.partition_at(&Rational::one());
    let ok =
        at_zero == 0 && negative.real_count() == 0 && at_one == 0 && below_one.real_count() == 1;
    let mut v = if ok {
        Verdict::pass(ID)
    } else {
        Verdict::fail(ID)
    }
    .with_params(p);
    if let Some(iv) = below_one.intervals().first() {
        v = v.with_interval("y1", iv.lo().clone(), iv.hi().clone());
    }
    v.with_value("threshold", expected)
}

/// Zero bounds in the order-1 regime `-1 < beta < 0`: the smallest zero is
/// negative and the second exceeds 1.
pub fn verify_bounds_qo1(p: &MeixnerParams) -> Verdict {
    const ID: &str = "qo1-bounds";
    if !beta_in_open(p.beta(), -1, 0) || !in_unit_interval(p.c()) {
        return na(ID, p, "requires -1 < beta < 0 and 0 < c < 1");
    }
    if p.n() < 2 {
        return na(ID, p, "requires degree >= 2");
    }
    let zeros = isolate_zeros(&p.coeffs());
    let (below0, at0, _) = zeros.partition_at(&Rational::zero());
    let (below1, at1, above1) = zeros.partition_at(&Rational::one());
    let ok = at0 == 0 && at1 == 0 && below0.real_count() == 1 && below1.real_count() == 1;
    let mut v = if ok {
        Verdict::pass(ID)
    } else {
        Verdict::fail(ID)
    }
    .with_params(p);
    if let Some(iv) = below0.intervals().first() {
        v = v.with_interval("z1", iv.lo().clone(), iv.hi().clone());
    }
    if let Some(iv) = above1.intervals().first() {
        v = v.with_interval("z2", iv.lo().clone(), iv.hi().clone());
    }
    v
}

/// Zero bounds in the order-2 regime `-2 < beta < -1` for
/// `n > beta/(c-1)`: the chain
/// `0 < x_1 < -beta-1 < x_2 < 1 < -beta < 2 < x_3` holds.
pub fn verify_bounds_qo2(p: &MeixnerParams) -> Verdict {
    const ID: &str = "qo2-bounds";
    if !beta_in_open(p.beta(), -2, -1) || !in_unit_interval(p.c()) {
        return na(ID, p, "requires -2 < beta < -1 and 0 < c < 1");
    }
    if p.n() < 3 {
        return na(ID, p, "requires degree >= 3");
    }
    let threshold = realness_threshold(p);
    if rat_int(p.n() as i64) <= threshold {
        return na(ID, p, "degree not above beta/(c-1)");
    }
    let marks = [
        (Rational::zero(), 0usize),
        (-p.beta() - Rational::one(), 1),
        (Rational::one(), 2),
        (rat_int(2), 2),
    ];
    let zeros = isolate_zeros(&p.coeffs());
    let mut ok = true;
    for (mark, want_below) in &marks {
        let (below, at, _) = zeros.partition_at(mark);
        if at != 0 || below.real_count() != *want_below {
            ok = false;
            break;
        }
    }
    let mut v = if ok {
        Verdict::pass(ID)
    } else {
        Verdict::fail(ID)
    }
    .with_params(p);
    let mut refined = zeros.clone();
    refined.refine_all(&witness_width());
    for (i, iv) in refined.intervals().iter().take(3).enumerate() {
        v = v.with_interval(&format!("x{}", i + 1), iv.lo().clone(), iv.hi().clone());
    }
    v.with_value("minus_beta_minus_1", -p.beta() - Rational::one())
        .with_value("minus_beta", -p.beta().clone())
        .with_value("threshold", threshold)
}

/// Order-2 regime, `n > beta/(c-1)`: all `n` zeros are real, simple and
/// positive, and they interlace with the `n-1` zeros of the orthogonal
/// neighbour at `beta + 2` and degree `n-1`.
pub fn verify_qo2_real_interlacing(p: &MeixnerParams) -> Verdict {
    const ID: &str = "qo2-real-interlace";
    if !beta_in_open(p.beta(), -2, -1) || !in_unit_interval(p.c()) {
        return na(ID, p, "requires -2 < beta < -1 and 0 < c < 1");
    }
    if p.n() == 0 {
        return na(ID, p, "degree 0 has no zeros");
    }
    if rat_int(p.n() as i64) <= realness_threshold(p) {
        return na(ID, p, "degree not above beta/(c-1)");
    }
    let zeros = isolate_zeros(&p.coeffs());
    let all_simple = zeros.intervals().iter().all(|iv| iv.multiplicity() == 1);
    let (below, at, _) = zeros.partition_at(&Rational::zero());
    if zeros.real_count() != p.n() || !all_simple || at != 0 || !below.is_empty() {
        return Verdict::fail(ID)
            .with_params(p)
            .with_value("real_count", rat_int(zeros.real_count() as i64))
            .with_detail("zeros are not all real, simple and positive");
    }
    let neighbour = isolate_zeros(&p.shift_beta(2).with_degree(p.n() - 1).coeffs());
    match check_interlacing(&zeros, &neighbour) {
        Ok(true) => Verdict::pass(ID)
            .with_params(p)
            .with_value("threshold", realness_threshold(p)),
        Ok(false) => Verdict::fail(ID)
            .with_params(p)
            .with_detail("zeros do not interlace with the beta+2 neighbour"),
        Err(InterlaceError::CommonZero { lo, hi }) => Verdict::degenerate(ID)
            .with_params(p)
            .with_interval("common_zero", lo, hi)
            .with_detail("polynomials share a real zero (nonconstant gcd)"),
        Err(e) => Verdict::fail(ID)
            .with_params(p)
            .with_detail(format!("internal interlacing engine error: {e}")),
    }
}

/// Order-1 regime: the zeros of `x M_{n-1}(x)` interlace with those of
/// `M_n(x)` (same `beta`), i.e. the origin acts as an extra node.
pub fn verify_origin_node_interlacing(p: &MeixnerParams) -> Verdict {
    const ID: &str = "qo1-origin-node";
    if !beta_in_open(p.beta(), -1, 0) || !in_unit_interval(p.c()) {
        return na(ID, p, "requires -1 < beta < 0 and 0 < c < 1");
    }
    if p.n() < 3 {
        return na(ID, p, "requires degree >= 3");
    }
    let big = isolate_zeros(&p.coeffs());
    let small = isolate_zeros(&p.with_degree(p.n() - 1).coeffs());
    map_node_check(
        check_interlacing_with_node(&big, &small, &Rational::zero()),
        ID,
        p,
    )
}

/// Order-1 regime: positive zeros of `(x - node) M_{n-2}(x; beta, c)` with
/// `node = (beta c + (c+1)(n-1))/(1-c)` interlace with the positive zeros
/// of `M_n(x; beta, c)`.
pub fn verify_gap2_node_interlacing(p: &MeixnerParams) -> Verdict {
    const ID: &str = "qo1-gap2-node";
    if !beta_in_open(p.beta(), -1, 0) || !in_unit_interval(p.c()) {
        return na(ID, p, "requires -1 < beta < 0 and 0 < c < 1");
    }
    if p.n() < 4 {
        return na(ID, p, "requires degree >= 4");
    }
    let (beta, c) = (p.beta(), p.c());
    let one = Rational::one();
    let node = (beta * c + (c + &one) * rat_int(p.n() as i64 - 1)) / (&one - c);
    let big_poly = p.coeffs();
    let small_poly = p.with_degree(p.n() - 2).coeffs();
    if big_poly.eval(&node).is_zero() || small_poly.eval(&node).is_zero() {
        return Verdict::degenerate(ID)
            .with_params(p)
            .with_value("node", node)
            .with_detail("node is a common zero of the pair");
    }
    let (_, at_big, big) = isolate_zeros(&big_poly).partition_at(&Rational::zero());
    let (_, at_small, small) = isolate_zeros(&small_poly).partition_at(&Rational::zero());
    if at_big != 0 || at_small != 0 {
        return Verdict::degenerate(ID)
            .with_params(p)
            .with_detail("zero at the origin");
    }
    map_node_check(check_interlacing_with_node(&big, &small, &node), ID, p)
}

/// Order-1 regime: zeros of `(x - node) M_{n-2}(x; beta+1, c)` with
/// `node = (beta c + n - 1)/(1-c)` interlace with the `n-1` positive zeros
/// of `M_n(x; beta, c)`.
pub fn verify_gap2_shift1_node_interlacing(p: &MeixnerParams) -> Verdict {
    const ID: &str = "qo1-gap2-shift1-node";
    if !beta_in_open(p.beta(), -1, 0) || !in_unit_interval(p.c()) {
        return na(ID, p, "requires -1 < beta < 0 and 0 < c < 1");
    }
    if p.n() < 3 {
        return na(ID, p, "requires degree >= 3");
    }
    let one = Rational::one();
    let node = (p.beta() * p.c() + rat_int(p.n() as i64 - 1)) / (&one - p.c());
    let big_poly = p.coeffs();
    let small_poly = p.shift_beta(1).with_degree(p.n() - 2).coeffs();
    if big_poly.eval(&node).is_zero() || small_poly.eval(&node).is_zero() {
        return Verdict::degenerate(ID)
            .with_params(p)
            .with_value("node", node)
            .with_detail("node is a common zero of the pair");
    }
    let (_, at_big, big) = isolate_zeros(&big_poly).partition_at(&Rational::zero());
    if at_big != 0 {
        return Verdict::degenerate(ID)
            .with_params(p)
            .with_detail("zero at the origin");
    }
    let small = isolate_zeros(&small_poly);
    map_node_check(check_interlacing_with_node(&big, &small, &node), ID, p)
}

/// Order-1 regime: the `n+1` zeros of `(x - C_n) M_n(x; beta, c)`
/// interlace with the `n+1` zeros of `M_{n+1}(x; beta+1, c)`, where
/// `C_n = -beta + (n+1)c/(1-c)`.
pub fn verify_raise_shift1_node_interlacing(p: &MeixnerParams) -> Verdict {
    const ID: &str = "qo1-raise-shift1-node";
    if !beta_in_open(p.beta(), -1, 0) || !in_unit_interval(p.c()) {
        return na(ID, p, "requires -1 < beta < 0 and 0 < c < 1");
    }
    if p.n() < 2 {
        return na(ID, p, "requires degree >= 2");
    }
    let node = node_c(p);
    let small_poly = p.coeffs();
    if small_poly.eval(&node).is_zero() {
        return Verdict::degenerate(ID)
            .with_params(p)
            .with_value("node", node)
            .with_detail("node is a common zero of the pair");
    }
    let big = isolate_zeros(&p.shift_beta(1).with_degree(p.n() + 1).coeffs());
    let small = isolate_zeros(&small_poly);
    map_node_check(check_interlacing_with_node(&big, &small, &node), ID, p)
}

/// Order-2 regime versus the orthogonal family at `beta + 2`, same degree.
///
/// With `A_n = beta/(c-1) - beta - n - 1` and `t = beta/(c-1)`:
/// for `n >= t - (beta+1)` the node satisfies `A_n <= 0` and full
/// interlacing holds; for `t < n < t - (beta+1)` (so `0 < A_n < 1`),
/// interlacing holds if and only if `A_n` lies below the smallest zero of
/// the `beta+2` polynomial, unless `A_n` is a shared zero (DEGENERATE).
/// Degrees with `n <= t` (complex zeros) are NOT_APPLICABLE.
pub fn verify_order2_vs_orthogonal(p: &MeixnerParams) -> Verdict {
    const ID: &str = "qo2-vs-orthogonal";
    if !beta_in_open(p.beta(), -2, -1) || !in_unit_interval(p.c()) {
        return na(ID, p, "requires -2 < beta < -1 and 0 < c < 1");
    }
    if p.n() < 3 {
        return na(ID, p, "requires degree >= 3");
    }
    let n_r = rat_int(p.n() as i64);
    let t = realness_threshold(p);
    let case_a_from = &t - (p.beta() + Rational::one());
    let a_n = node_a(p);

    let mine = isolate_zeros(&p.coeffs());
    let shifted = isolate_zeros(&p.shift_beta(2).coeffs());

    if n_r >= case_a_from {
        if a_n.is_positive() {
            return Verdict::fail(ID)
                .with_params(p)
                .with_value("A_n", a_n)
                .with_detail("node should be <= 0 in the interlacing case");
        }
        let interlaced = match full_alternation(&mine, &shifted) {
            Ok(b) => b,
            Err(InterlaceError::CommonZero { lo, hi }) => {
                return Verdict::degenerate(ID)
                    .with_params(p)
                    .with_interval("common_zero", lo, hi)
                    .with_detail("polynomials share a real zero (nonconstant gcd)")
            }
            Err(e) => {
                return Verdict::fail(ID)
                    .with_params(p)
                    .with_detail(format!("internal interlacing engine error: {e}"))
            }
        };
        let mut v = if interlaced {
            Verdict::pass(ID)
        } else {
            Verdict::fail(ID)
        };
        v = v
            .with_params(p)
            .with_value("A_n", a_n)
            .with_detail("full interlacing case");
        return v;
    }

    if t < n_r && n_r < case_a_from {
        // 0 < A_n < 1 here; the only possible common zero is A_n itself.
        if p.coeffs().eval(&a_n).is_zero() {
            return Verdict::degenerate(ID)
                .with_params(p)
                .with_value("A_n", a_n)
                .with_detail("A_n is a common zero; interlacing cannot hold");
        }
        let interlaced = match full_alternation(&mine, &shifted) {
            Ok(b) => b,
            Err(InterlaceError::CommonZero { lo, hi }) => {
                return Verdict::degenerate(ID)
                    .with_params(p)
                    .with_interval("common_zero", lo, hi)
                    .with_detail("polynomials share a real zero (nonconstant gcd)")
            }
            Err(e) => {
                return Verdict::fail(ID)
                    .with_params(p)
                    .with_detail(format!("internal interlacing engine error: {e}"))
            }
        };
        // y_1: smallest zero of the beta+2 polynomial, compared exactly to A_n
        let mut shifted_ref = shifted.clone();
        if exclude_point(&mut shifted_ref, &a_n).is_err() {
            return Verdict::fail(ID)
                .with_params(p)
                .with_detail("could not separate A_n from the shifted zeros");
        }
        let y1 = shifted_ref.get(0);
        let node_below = y1.strictly_above(&a_n);
        let ok = interlaced == node_below;
        let v = if ok {
            Verdict::pass(ID)
        } else {
            Verdict::fail(ID)
        };
        return v
            .with_params(p)
            .with_value("A_n", a_n)
            .with_interval("y1", y1.lo().clone(), y1.hi().clone())
            .with_detail(format!(
                "window case: interlaced={interlaced}, node below y1={node_below}"
            ));
    }

    na(
        ID,
        p,
        "degree not above beta/(c-1): smallest zeros are complex",
    )
}

/// Equal-size alternation `mine[0] < other[0] < mine[1] < ...`.
fn full_alternation(mine: &ZeroSet, other: &ZeroSet) -> Result<bool, InterlaceError> {
    if mine.len() != other.len() {
        return Err(InterlaceError::SizeMismatch {
            big: mine.len(),
            small: other.len(),
        });
    }
    if let Some(iv) = common_real_zero(mine.poly(), other.poly()) {
        return Err(InterlaceError::CommonZero {
            lo: iv.lo().clone(),
            hi: iv.hi().clone(),
        });
    }
    let mut sa = mine.clone();
    let mut sb = other.clone();
    separate_sets(&mut [&mut sa, &mut sb])?;
    Ok(alternate(&positions(&sa), &positions(&sb)).is_ok())
}

/// Order-2 regime, consecutive degrees: the `n` zeros of
/// `(x + beta) M_{n-1}(x)` interlace with the `n+1` zeros of
/// `(x + beta + 1) M_n(x)` in the fixed pattern that places `-beta-1`
/// second among the large set and `-beta` third among the small set.
pub fn verify_consecutive_qo2(p: &MeixnerParams) -> Verdict {
    const ID: &str = "qo2-consecutive";
    if !beta_in_open(p.beta(), -2, -1) || !in_unit_interval(p.c()) {
        return na(ID, p, "requires -2 < beta < -1 and 0 < c < 1");
    }
    if p.n() < 4 {
        return na(ID, p, "requires degree >= 4");
    }
    if rat_int(p.n() as i64 - 1) <= realness_threshold(p) {
        return na(ID, p, "degree - 1 not above beta/(c-1)");
    }
    let node_big = -p.beta() - Rational::one();
    let node_small = -p.beta().clone();
    let poly_n = p.coeffs();
    let poly_prev = p.with_degree(p.n() - 1).coeffs();

    if let Some(iv) = common_real_zero(&poly_n, &poly_prev) {
        return degenerate_common_zero(ID, p, &iv);
    }
    if poly_n.eval(&node_big).is_zero() || poly_prev.eval(&node_small).is_zero() {
        return Verdict::degenerate(ID)
            .with_params(p)
            .with_value("minus_beta_minus_1", node_big)
            .with_value("minus_beta", node_small)
            .with_detail("an augmented node is itself a zero");
    }

    let mut zeros_n = isolate_zeros(&poly_n);
    let mut zeros_prev = isolate_zeros(&poly_prev);
    let (below, at, _) = zeros_n.partition_at(&Rational::zero());
    if at != 0 || !below.is_empty() {
        return Verdict::fail(ID)
            .with_params(p)
            .with_detail("smallest zero is not positive");
    }
    if separate_sets(&mut [&mut zeros_n, &mut zeros_prev]).is_err()
        || exclude_point(&mut zeros_n, &node_big).is_err()
        || exclude_point(&mut zeros_n, &node_small).is_err()
        || exclude_point(&mut zeros_prev, &node_big).is_err()
        || exclude_point(&mut zeros_prev, &node_small).is_err()
    {
        return Verdict::fail(ID)
            .with_params(p)
            .with_detail("internal interlacing engine error: separation failed");
    }

    let mut big = positions(&zeros_n);
    big.push(Pos::point(&node_big));
    big.sort_by(|a, b| a.lo.cmp(&b.lo));
    let mut small = positions(&zeros_prev);
    small.push(Pos::point(&node_small));
    small.sort_by(|a, b| a.lo.cmp(&b.lo));

    let node_positions_ok = big.len() > 1
        && big[1].lo == node_big
        && big[1].hi == node_big
        && small.len() > 2
        && small[2].lo == node_small
        && small[2].hi == node_small;
    let pattern_ok = node_positions_ok && between(&big, &small).is_ok();

    let v = if pattern_ok {
        Verdict::pass(ID)
    } else {
        Verdict::fail(ID)
    };
    v.with_params(p)
        .with_value("minus_beta_minus_1", node_big)
        .with_value("minus_beta", node_small)
}

/// Consecutive zeros of the orthogonal-regime polynomial are more than one
/// unit apart.
///
/// Starts from intervals of width 1e-6 and keeps narrowing any pair whose
/// gap straddles 1 until the comparison is decided (the minimal gap can
/// exceed 1 by less than 1e-6 at small `c` and large degree).
pub fn verify_zero_separation(p: &MeixnerParams) -> Verdict {
    const ID: &str = "orth-zero-separation";
    if !p.beta().is_positive() || !in_unit_interval(p.c()) {
        return na(ID, p, "requires beta > 0 and 0 < c < 1");
    }
    if p.n() < 2 {
        return na(ID, p, "requires degree >= 2");
    }
    let mut zeros = isolate_zeros(&p.coeffs());
    zeros.refine_all(&rat(1, 1_000_000));
    if zeros.len() != p.n() {
        return Verdict::fail(ID)
            .with_params(p)
            .with_detail("expected all zeros real and simple");
    }
    let one = Rational::one();
    for i in 0..zeros.len() - 1 {
        let mut decided = false;
        for _ in 0..MAX_ROUNDS {
            if (zeros.get(i + 1).lo() - zeros.get(i).hi()) > one {
                decided = true;
                break;
            }
            if (zeros.get(i + 1).hi() - zeros.get(i).lo()) <= one {
                break;
            }
            zeros.refine_interval_once(i);
            zeros.refine_interval_once(i + 1);
        }
        if !decided {
            return Verdict::fail(ID)
                .with_params(p)
                .with_interval("left", zeros.get(i).lo().clone(), zeros.get(i).hi().clone())
                .with_interval(
                    "right",
                    zeros.get(i + 1).lo().clone(),
                    zeros.get(i + 1).hi().clone(),
                )
                .with_detail("gap of at most one unit");
        }
    }
    Verdict::pass(ID).with_params(p)
}

/// Classical interlacing of consecutive degrees in the orthogonal regime.
pub fn verify_orthogonal_interlacing(p: &MeixnerParams) -> Verdict {
    const ID: &str = "orth-interlacing";
    if !p.beta().is_positive() || !in_unit_interval(p.c()) {
        return na(ID, p, "requires beta > 0 and 0 < c < 1");
    }
    if p.n() < 2 {
        return na(ID, p, "requires degree >= 2");
    }
    let a = isolate_zeros(&p.coeffs());
    let b = isolate_zeros(&p.with_degree(p.n() - 1).coeffs());
    match check_interlacing(&a, &b) {
        Ok(true) => Verdict::pass(ID).with_params(p),
        Ok(false) => Verdict::fail(ID).with_params(p),
        Err(InterlaceError::CommonZero { lo, hi }) => Verdict::degenerate(ID)
            .with_params(p)
            .with_interval("common_zero", lo, hi)
            .with_detail("polynomials share a real zero (nonconstant gcd)"),
        Err(e) => Verdict::fail(ID)
            .with_params(p)
            .with_detail(format!("internal interlacing engine error: {e}")),
    }
}

fn compare_roots(
    a: &mut ZeroSet,
    i: usize,
    b: &mut ZeroSet,
    j: usize,
) -> Result<std::cmp::Ordering, InterlaceError> {
    use std::cmp::Ordering;
    let evidence = common_real_zero(a.poly(), b.poly());
    for _ in 0..MAX_ROUNDS {
        let (x, y) = (a.get(i), b.get(j));
        if x.hi() < y.lo() {
            return Ok(Ordering::Less);
        }
        if y.hi() < x.lo() {
            return Ok(Ordering::Greater);
        }
        if let (Some(ex), Some(ey)) = (x.exact(), y.exact()) {
            if ex == ey {
                return Ok(Ordering::Equal);
            }
        }
        a.refine_interval_once(i);
        b.refine_interval_once(j);
    }
    if evidence.is_some() {
        Ok(std::cmp::Ordering::Equal)
    } else {
        Err(InterlaceError::Unresolved)
    }
}

/// Monotonicity scan of the smallest zero.
///
/// In the order-1 regime, asserts that the single negative zero strictly
/// increases with the degree from 2 to `n_max` and stays strictly above
/// the lower bound `beta c/(1-c)` (which is the degree-1 zero exactly).
/// In the order-2 regime, the smallest zeros are positive and the second
/// zero is not monotone in `beta`: the scan reproduces the fixed reference
/// instance `n = 5`, `c = 1/5`, `beta = -19/10` versus `-9/5`, asserting
/// that the second zero decreases as `beta` increases.
pub fn scan_monotonicity(beta: &Rational, c: &Rational, n_max: usize) -> Verdict {
    if beta_in_open(beta, -1, 0) && in_unit_interval(c) {
        return scan_negative_zero_monotone(beta, c, n_max);
    }
    if beta_in_open(beta, -2, -1) && in_unit_interval(c) {
        return verify_nonmonotone_example();
    }
    Verdict::not_applicable("zero-monotonicity")
        .with_detail("requires beta in (-2,-1) or (-1,0) and 0 < c < 1")
}

fn scan_negative_zero_monotone(beta: &Rational, c: &Rational, n_max: usize) -> Verdict {
    const ID: &str = "qo1-negative-zero-monotone";
    let bound = beta * c / (Rational::one() - c);
    if n_max < 2 {
        return Verdict::not_applicable(ID).with_detail("requires n_max >= 2");
    }
    let mut sets: Vec<ZeroSet> = Vec::new();
    for n in 2..=n_max {
        let p = MeixnerParams::new(n, beta.clone(), c.clone()).expect("valid c");
        let zeros = isolate_zeros(&p.coeffs());
        let (below, at, _) = zeros.partition_at(&Rational::zero());
        if at != 0 || below.real_count() != 1 {
            return Verdict::fail(ID)
                .with_value("beta", beta.clone())
                .with_value("c", c.clone())
                .with_detail(format!("degree {n}: expected exactly one negative zero"));
        }
        // strictly above the bound
        if zeros.poly().eval(&bound).is_zero() {
            return Verdict::fail(ID)
                .with_value("bound", bound)
                .with_detail(format!("degree {n}: zero exactly at the lower bound"));
        }
        let mut z = below;
        if exclude_point(&mut z, &bound).is_err() {
            return Verdict::fail(ID).with_detail("separation from the bound failed");
        }
        if !z.get(0).strictly_above(&bound) {
            return Verdict::fail(ID)
                .with_value("bound", bound.clone())
                .with_interval("z1", z.get(0).lo().clone(), z.get(0).hi().clone())
                .with_detail(format!("degree {n}: negative zero not above the bound"));
        }
        sets.push(z);
    }
    for k in 0..sets.len() - 1 {
        let (left, right) = sets.split_at_mut(k + 1);
        let a = &mut left[k];
        let b = &mut right[0];
        match compare_roots(a, 0, b, 0) {
            Ok(std::cmp::Ordering::Less) => {}
            Ok(_) => {
                return Verdict::fail(ID)
                    .with_interval("z1_n", a.get(0).lo().clone(), a.get(0).hi().clone())
                    .with_interval("z1_next", b.get(0).lo().clone(), b.get(0).hi().clone())
                    .with_detail(format!(
                        "negative zero does not increase at degree {}",
                        k + 3
                    ));
            }
            Err(e) => {
                return Verdict::fail(ID).with_detail(format!("comparison failed: {e}"));
            }
        }
    }
    let mut v = Verdict::pass(ID).with_value("bound", bound);
    for (k, set) in sets.iter_mut().enumerate() {
        set.refine_all(&witness_width());
        let iv = set.get(0);
        v = v.with_interval(&format!("z1_{}", k + 2), iv.lo().clone(), iv.hi().clone());
    }
    v.with_detail(format!("beta={}, c={}", exact_str(beta), exact_str(c)))
}

/// The fixed non-monotonicity instance: at `n = 5`, `c = 1/5`, the second
/// zero decreases when `beta` moves from `-19/10` up to `-9/5`.
pub fn verify_nonmonotone_example() -> Verdict {
    const ID: &str = "qo2-nonmonotone-example";
    let c = rat(1, 5);
    let low = MeixnerParams::new(5, rat(-19, 10), c.clone()).unwrap();
    let high = MeixnerParams::new(5, rat(-9, 5), c).unwrap();
    let mut z_low = isolate_zeros(&low.coeffs());
    let mut z_high = isolate_zeros(&high.coeffs());
    if z_low.real_count() != 5 || z_high.real_count() != 5 {
        return Verdict::fail(ID).with_detail("expected five real zeros on both sides");
    }
    let outcome = compare_roots(&mut z_high, 1, &mut z_low, 1);
    z_high.refine_all(&witness_width());
    z_low.refine_all(&witness_width());
    match outcome {
        Ok(std::cmp::Ordering::Less) => Verdict::pass(ID)
            .with_interval(
                "x2_beta_-9/5",
                z_high.get(1).lo().clone(),
                z_high.get(1).hi().clone(),
            )
            .with_interval(
                "x2_beta_-19/10",
                z_low.get(1).lo().clone(),
                z_low.get(1).hi().clone(),
            )
            .with_interval(
                "x1_beta_-19/10",
                z_low.get(0).lo().clone(),
                z_low.get(0).hi().clone(),
            )
            .with_detail("second zero decreases as beta increases"),
        Ok(_) => Verdict::fail(ID).with_detail("second zero did not decrease"),
        Err(e) => Verdict::fail(ID).with_detail(format!("comparison failed: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::verdict::Status;
    use crate::zeros::zeros_of;

    fn params(n: usize, beta: Rational, c: Rational) -> MeixnerParams {
        MeixnerParams::new(n, beta, c).unwrap()
    }

    fn set_of_roots(roots: &[i64]) -> ZeroSet {
        let p = roots
            .iter()
            .fold(Poly::one(), |acc, &r| &acc * &Poly::linear(&rat_int(r)));
        isolate_zeros(&p)
    }

    #[test]
    fn interlacing_of_integer_sets() {
        let a = set_of_roots(&[1, 3, 5]);
        let b = set_of_roots(&[2, 4]);
        assert_eq!(check_interlacing(&a, &b), Ok(true));

        let a = set_of_roots(&[1, 2]);
        let b = set_of_roots(&[3]);
        assert_eq!(check_interlacing(&a, &b), Ok(false));
    }

    #[test]
    fn interlacing_size_mismatch_is_an_error() {
        let a = set_of_roots(&[1, 3]);
        let b = set_of_roots(&[2, 4]);
        assert!(matches!(
            check_interlacing(&a, &b),
            Err(InterlaceError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn interlacing_detects_common_zero() {
        let a = set_of_roots(&[1, 3, 5]);
        let b = set_of_roots(&[3, 4]);
        assert!(matches!(
            check_interlacing(&a, &b),
            Err(InterlaceError::CommonZero { .. })
        ));
    }

    #[test]
    fn orthogonal_consecutive_degrees_interlace() {
        let p = params(5, rat_int(2), rat(1, 2));
        let a = zeros_of(&p, &rat(1, 1024));
        let b = zeros_of(&p.with_degree(4), &rat(1, 1024));
        assert_eq!(check_interlacing(&a, &b), Ok(true));
    }

    #[test]
    fn node_interlacing_equal_sizes() {
        // zeros of M_3(-1/2, 1/2) against zeros of M_2 augmented by the origin
        let p = params(3, rat(-1, 2), rat(1, 2));
        let big = isolate_zeros(&p.coeffs());
        let small = isolate_zeros(&p.with_degree(2).coeffs());
        let v = check_interlacing_with_node(&big, &small, &Rational::zero()).unwrap();
        assert_eq!(v.status, Status::Pass);
    }

    #[test]
    fn node_interlacing_raise_shift_instance() {
        // big = zeros of M_3(1/2, 1/2), small = zeros of M_2(-1/2, 1/2), node C_2 = 7/2
        let big = isolate_zeros(&params(3, rat(1, 2), rat(1, 2)).coeffs());
        let small = isolate_zeros(&params(2, rat(-1, 2), rat(1, 2)).coeffs());
        let v = check_interlacing_with_node(&big, &small, &rat(7, 2)).unwrap();
        assert_eq!(v.status, Status::Pass);
    }

    #[test]
    fn node_interlacing_rejects_size_mismatch() {
        let big = set_of_roots(&[1, 3, 5]);
        let small = set_of_roots(&[2, 4, 6]);
        assert!(matches!(
            check_interlacing_with_node(&big, &small, &rat_int(7)),
            Err(InterlaceError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn node_on_a_zero_is_degenerate() {
        let big = set_of_roots(&[1, 3, 5]);
        let small = set_of_roots(&[2, 4]);
        // the node coincides with a zero of the smaller polynomial
        let v = check_interlacing_with_node(&big, &small, &rat_int(4)).unwrap();
        assert_eq!(v.status, Status::Degenerate);
        assert!(v.witnesses.iter().any(|w| w.name == "node"));
        // and with a zero of the larger one
        let v = check_interlacing_with_node(&big, &small, &rat_int(5)).unwrap();
        assert_eq!(v.status, Status::Degenerate);
    }

    #[test]
    fn qo1_bounds_examples() {
        assert_eq!(
            verify_bounds_qo1(&params(5, rat(-1, 2), rat(1, 2))).status,
            Status::Pass
        );
        assert_eq!(
            verify_bounds_qo1(&params(2, rat(-9, 10), rat(1, 10))).status,
            Status::Pass
        );
        assert_eq!(
            verify_bounds_qo1(&params(5, rat(1, 2), rat(1, 2))).status,
            Status::NotApplicable
        );
    }

    #[test]
    fn qo2_bounds_examples() {
        assert_eq!(
            verify_bounds_qo2(&params(10, rat(-3, 2), rat(1, 2))).status,
            Status::Pass
        );
        assert_eq!(
            verify_bounds_qo2(&params(10, rat(-101, 100), rat(4, 5))).status,
            Status::Pass
        );
        // beta/(c-1) = 7.5 > 3
        assert_eq!(
            verify_bounds_qo2(&params(3, rat(-3, 2), rat(4, 5))).status,
            Status::NotApplicable
        );
    }

    #[test]
    fn order2_vs_orthogonal_cases() {
        // full interlacing case, A_5 = -3/2
        let v = verify_order2_vs_orthogonal(&params(5, rat(-3, 2), rat(1, 2)));
        assert_eq!(v.status, Status::Pass, "{v}");
        // window case: 3.6 < 4 < 4.4, A_4 = 2/5
        let v = verify_order2_vs_orthogonal(&params(4, rat(-9, 5), rat(1, 2)));
        assert_eq!(v.status, Status::Pass, "{v}");
        // threshold 13/6 <= 3: full interlacing case again
        let v = verify_order2_vs_orthogonal(&params(3, rat(-3, 2), rat(1, 10)));
        assert_eq!(v.status, Status::Pass, "{v}");
    }

    #[test]
    fn consecutive_qo2_cases() {
        let v = verify_consecutive_qo2(&params(5, rat(-19, 10), rat(1, 5)));
        assert_eq!(v.status, Status::Pass, "{v}");
        let v = verify_consecutive_qo2(&params(4, rat(-3, 2), rat(1, 10)));
        assert_eq!(v.status, Status::Pass, "{v}");
        // n - 1 = 3 < beta/(c-1) = 7.5
        let v = verify_consecutive_qo2(&params(4, rat(-3, 2), rat(4, 5)));
        assert_eq!(v.status, Status::NotApplicable, "{v}");
    }

    #[test]
    fn first_zero_examples() {
        let v = verify_first_zeros(&params(1, rat_int(3), rat(1, 2)));
        assert_eq!(v.status, Status::Pass, "{v}");
        let v = verify_first_zeros(&params(3, rat_int(2), rat(1, 2)));
        assert_eq!(v.status, Status::Pass, "{v}");
        // boundary: n = beta c/(1-c) = 2 puts a zero exactly at 1
        let v = verify_first_zeros(&params(2, rat_int(2), rat(1, 2)));
        assert_eq!(v.status, Status::NotApplicable, "{v}");
    }

    #[test]
    fn monotonicity_branches() {
        let v = scan_monotonicity(&rat(-1, 2), &rat(1, 2), 8);
        assert_eq!(v.status, Status::Pass, "{v}");
        let v = scan_monotonicity(&rat(-19, 10), &rat(1, 5), 5);
        assert_eq!(v.status, Status::Pass, "{v}");
        let v = scan_monotonicity(&rat_int(3), &rat(1, 2), 8);
        assert_eq!(v.status, Status::NotApplicable);
    }

    #[test]
    fn separation_in_orthogonal_regime() {
        let v = verify_zero_separation(&params(7, rat_int(2), rat(1, 2)));
        assert_eq!(v.status, Status::Pass, "{v}");
    }
}
