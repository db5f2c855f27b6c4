//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending order of degree: `coeffs[i]` is the
//! coefficient of `x^i`. The zero polynomial has an empty coefficient vector.
//! All arithmetic (including division with remainder, gcd and square-free
//! decomposition) is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{sign, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming leading zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    /// The monic linear polynomial `x - root`.
    pub fn linear(root: &Rational) -> Self {
        Poly::new(vec![-root.clone(), Rational::one()])
    }

    /// Convenience constructor from small integers (mostly for tests).
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Poly::new(
            coeffs
                .iter()
                .map(|&c| crate::rational::rat_int(c))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact sign of `self(x)`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign(&self.eval(x))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect();
        Poly::new(coeffs)
    }

    pub fn scaled(&self, k: &Rational) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Same roots, leading coefficient 1. Panics on the zero polynomial.
    pub fn monic(&self) -> Poly {
        let lead = self.leading().expect("monic of zero polynomial");
        if lead.is_one() {
            self.clone()
        } else {
            let inv = lead.recip();
            self.scaled(&inv)
        }
    }

    /// Division with remainder: returns `(q, r)` with `self = q*div + r`
    /// and `deg r < deg div`. Panics if `div` is zero.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        let d = div.degree().expect("division by zero polynomial");
        if self.is_zero() || self.coeffs.len() < div.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = div.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lead_inv;
            for (j, dc) in div.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[i - d + j] -= t;
            }
            quot[i - d] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, div: &Poly) -> Poly {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Monic greatest common divisor (1 for coprime inputs, 0 only for gcd(0,0)).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut f = a.clone();
        let mut g = b.clone();
        while !g.is_zero() {
            let (_, r) = f.div_rem(&g);
            f = g;
            g = r;
        }
        if f.is_zero() {
            f
        } else {
            f.monic()
        }
    }

    /// The monic product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Poly {
        let d = match self.degree() {
            None | Some(0) => return Poly::one(),
            Some(d) => d,
        };
        let g = Poly::gcd(self, &self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        debug_assert!(g.degree().unwrap() < d);
        self.div_exact(&g).monic()
    }

    /// Yun's square-free decomposition: returns monic pairs `(f, m)` with
    /// `self = lc * prod f^m`, each `f` square-free of degree >= 1 and the
    /// `f` pairwise coprime. Constants decompose to an empty list.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().is_none_or(|d| d == 0) {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let g = Poly::gcd(&f, &df);
        if g.degree() == Some(0) {
            out.push((f, 1));
            return out;
        }
        let mut b = f.div_exact(&g);
        let mut c = df.div_exact(&g);
        let mut d = &c - &b.derivative();
        let mut mult = 1;
        loop {
            let factor = Poly::gcd(&b, &d);
            if factor.degree().is_some_and(|dg| dg >= 1) {
                out.push((factor.clone(), mult));
            }
            b = b.div_exact(&factor);
            if b.degree() == Some(0) {
                break;
            }
            c = d.div_exact(&factor);
            d = &c - &b.derivative();
            mult += 1;
        }
        out
    }

    /// Cauchy root bound: every real root r satisfies |r| < bound.
    pub fn cauchy_bound(&self) -> Rational {
        let lead = self.leading().expect("root bound of zero polynomial");
        let mut max = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = (c / lead).abs();
            if a > max {
                max = a;
            }
        }
        max + Rational::one()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Poly::new(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", crate::rational::exact_str(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{}", if show_coeff { "*" } else { "" }, i)?,
            }
        }
        Ok(())
    }
}
