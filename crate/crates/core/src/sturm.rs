//! Sturm chains: exact real-root counting and isolation for square-free
//! polynomials.
//!
//! Sign-variation counts give the exact number of distinct real roots in a
//! half-open interval `(lo, hi]`; recursive bisection at dyadic midpoints
//! turns the count into isolating intervals. Endpoints of every produced
//! bracket are non-roots, so each bracket carries a strict sign change.

use num_traits::{One, Signed};

use crate::poly::Poly;
use crate::rational::{sign, Rational};

/// An interval endpoint for root counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(Rational),
    PosInf,
}

/// The signed-remainder chain `p, p', -rem(p, p'), ...`.
///
/// Every element after the second is normalised by a positive scalar
/// (divided by |leading coefficient|), which leaves all sign patterns
/// unchanged. The final nonzero element is `gcd(p, p')` up to a constant.
pub fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        let neg = -&r;
        let norm = neg.leading().unwrap().abs().recip();
        chain.push(neg.scaled(&norm));
    }
    chain
}

fn sign_at_bound(q: &Poly, bound: &Bound) -> i8 {
    match bound {
        Bound::At(x) => q.sign_at(x),
        Bound::PosInf => q.leading().map_or(0, sign),
        Bound::NegInf => {
            let s = q.leading().map_or(0, sign);
            if q.degree().is_some_and(|d| d % 2 == 1) {
                -s
            } else {
                s
            }
        }
    }
}

fn variations(chain: &[Poly], bound: &Bound) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for q in chain {
        let s = sign_at_bound(q, bound);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Exact number of distinct real roots of `p` in `(lo, hi]`.
///
/// Multiple roots are counted once: the count runs on the square-free part
/// of `p`. Constants (including zero) have no isolated roots.
pub fn count_real_roots(p: &Poly, lo: &Bound, hi: &Bound) -> usize {
    if p.degree().is_none_or(|d| d == 0) {
        return 0;
    }
    if let (Bound::At(a), Bound::At(b)) = (lo, hi) {
        if a >= b {
            return 0;
        }
    }
    if matches!(lo, Bound::PosInf) || matches!(hi, Bound::NegInf) {
        return 0;
    }
    let chain = sturm_chain(&p.squarefree_part());
    variations(&chain, lo) - variations(&chain, hi)
}

/// One isolated root of a square-free polynomial: either an exact rational
/// or an open bracket `(lo, hi)` with a strict sign change.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum SqfRoot {
    Exact(Rational),
    Bracket { lo: Rational, hi: Rational },
}

/// Smallest power of two that is >= the Cauchy bound of `f`.
fn dyadic_bound(f: &Poly) -> Rational {
    let cauchy = f.cauchy_bound();
    let mut b = Rational::one();
    while b < cauchy {
        b *= Rational::from_integer(2.into());
    }
    b
}

struct Isolation<'a> {
    f: &'a Poly,
    chain: Vec<Poly>,
    out: Vec<(Rational, Rational)>,
}

impl Isolation<'_> {
    /// Splits `(a, b]` until every sub-interval holds one root. All
    /// endpoints are dyadic and non-roots; an exact hit at a midpoint
    /// aborts with the root so the caller can deflate.
    fn split(&mut self, a: Rational, b: Rational, va: usize, vb: usize) -> Result<(), Rational> {
        match va - vb {
            0 => Ok(()),
            1 => {
                self.out.push((a, b));
                Ok(())
            }
            _ => {
                let mid = (&a + &b) / Rational::from_integer(2.into());
                if self.f.sign_at(&mid) == 0 {
                    return Err(mid);
                }
                let vm = variations(&self.chain, &Bound::At(mid.clone()));
                self.split(a, mid.clone(), va, vm)?;
                self.split(mid, b, vm, vb)
            }
        }
    }
}

/// Output of [`isolate_squarefree`]: the roots plus the polynomial whose
/// sign changes bracket the non-exact ones.
pub(crate) struct SqfIsolation {
    pub roots: Vec<SqfRoot>,
    /// The input with any exactly-hit rational roots divided out. Bracket
    /// endpoints carry a strict sign change of this polynomial (the
    /// original may have a deflated root inside a bracket).
    pub refiner: Poly,
}

/// Isolates every real root of a square-free `f` (degree >= 1).
///
/// Rationals hit exactly during bisection are deflated out and reported
/// as [`SqfRoot::Exact`]; linear leftovers yield their root exactly. The
/// result is unsorted and brackets may still touch or contain exact
/// points; the caller separates them.
pub(crate) fn isolate_squarefree(f: &Poly) -> SqfIsolation {
    let mut roots = Vec::new();
    let mut g = f.monic();
    loop {
        match g.degree() {
            None | Some(0) => break,
            Some(1) => {
                roots.push(SqfRoot::Exact(-g.coeff(0)));
                break;
            }
            Some(_) => {}
        }
        let bound = dyadic_bound(&g);
        let chain = sturm_chain(&g);
        let va = variations(&chain, &Bound::At(-bound.clone()));
        let vb = variations(&chain, &Bound::At(bound.clone()));
        let mut iso = Isolation {
            f: &g,
            chain,
            out: Vec::new(),
        };
        match iso.split(-bound.clone(), bound, va, vb) {
            Ok(()) => {
                for (lo, hi) in iso.out {
                    debug_assert!(g.sign_at(&lo) as i32 * g.sign_at(&hi) as i32 == -1);
                    roots.push(SqfRoot::Bracket { lo, hi });
                }
                break;
            }
            Err(root) => {
                g = g.div_exact(&Poly::linear(&root));
                roots.push(SqfRoot::Exact(root));
            }
        }
    }
    SqfIsolation { roots, refiner: g }
}

/// Result of bisecting a sign-change bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Refined {
    Bracket { lo: Rational, hi: Rational },
    Exact(Rational),
}

/// One bisection step on a bracket with `f(lo) f(hi) < 0`.
pub(crate) fn bisect_step(f: &Poly, lo: &Rational, hi: &Rational) -> Refined {
    let mid = (lo + hi) / Rational::from_integer(2.into());
    match f.sign_at(&mid) {
        0 => Refined::Exact(mid),
        s if s == f.sign_at(lo) => Refined::Bracket {
            lo: mid,
            hi: hi.clone(),
        },
        _ => Refined::Bracket {
            lo: lo.clone(),
            hi: mid,
        },
    }
}

/// Bisects until the bracket width is <= `width` (or the root is hit).
pub(crate) fn bisect_to_width(
    f: &Poly,
    mut lo: Rational,
    mut hi: Rational,
    width: &Rational,
) -> Refined {
    while &(&hi - &lo) > width {
        match bisect_step(f, &lo, &hi) {
            Refined::Exact(r) => return Refined::Exact(r),
            Refined::Bracket { lo: l, hi: h } => {
                lo = l;
                hi = h;
            }
        }
    }
    Refined::Bracket { lo, hi }
}
