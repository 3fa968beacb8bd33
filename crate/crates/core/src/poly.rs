//! Dense univariate polynomials with exact rational coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::{Rational, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPoly,
    #[error("operation undefined for a constant polynomial")]
    ConstantPoly,
}

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// The highest stored coefficient is always nonzero, so the zero polynomial
/// is the empty coefficient list and structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Poly {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, exp: usize) -> Poly {
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        Poly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients in ascending degree order,
    /// trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Poly {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// Ascending-degree integer coefficients, e.g. `[-2, 0, 1]` is `x^2 - 2`.
    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `Π (x − r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Poly {
        roots.iter().fold(Poly::one(), |acc, r| {
            &acc * &Poly::from_coeffs(vec![-r.clone(), Rational::one()])
        })
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn leading_sign(&self) -> Sign {
        self.leading_coeff().map_or(Sign::Zero, Sign::of)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn sign_at(&self, x: &Rational) -> Sign {
        Sign::of(&self.eval(x))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        (0..exp).fold(Poly::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Divides by the leading coefficient. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        let Some(lead) = divisor.leading_coeff() else {
            return Err(PolyError::DivisionByZeroPoly);
        };
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = lead.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len() - dlen + 1];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let factor = top * &lead_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &factor * d;
            }
            quot[shift] = factor;
        }
        rem.truncate(dlen - 1);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    /// Exact quotient; `None` when `divisor` is zero or does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        match self.divmod(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    /// True when the gcd with `other` is a nonzero constant.
    pub fn is_coprime_with(&self, other: &Poly) -> bool {
        self.gcd(other).is_ok_and(|g| g.is_constant())
    }

    /// `p / gcd(p, p′)`, made monic: same roots, each simple.
    pub fn squarefree_part(&self) -> Result<Poly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPoly);
        }
        let g = self.gcd(&self.derivative())?;
        let part = self
            .exact_div(&g)
            .expect("gcd divides its argument");
        Ok(part.monic())
    }

    /// Yun's squarefree factorization: `p = lc(p) · Π fᵢ^{mᵢ}` with the `fᵢ`
    /// monic, squarefree, nonconstant and pairwise coprime. Multiplicities
    /// are strictly increasing.
    pub fn squarefree_factorization(&self) -> Result<Vec<(Poly, u32)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPoly);
        }
        let mut out = Vec::new();
        if self.is_constant() {
            return Ok(out);
        }
        let f = self.monic();
        let df = f.derivative();
        let b = f.gcd(&df)?;
        let mut c = f.exact_div(&b).expect("gcd divides f");
        let mut d = &df.exact_div(&b).expect("gcd divides f'") - &c.derivative();
        let mut multiplicity = 1;
        while !c.is_constant() {
            let a = c.gcd(&d)?;
            c = c.exact_div(&a).expect("gcd divides c");
            d = &d.exact_div(&a).expect("gcd divides d") - &c.derivative();
            if !a.is_constant() {
                out.push((a, multiplicity));
            }
            multiplicity += 1;
        }
        Ok(out)
    }

    /// A positive integer strictly larger than the magnitude of every real
    /// root: `floor(1 + max_{i<n} |aᵢ/aₙ|) + 1` (Cauchy bound, plus one).
    pub fn crb(&self) -> Result<BigInt, PolyError> {
        let Some(lead) = self.leading_coeff() else {
            return Err(PolyError::ZeroPoly);
        };
        if self.is_constant() {
            return Err(PolyError::ConstantPoly);
        }
        let max_ratio = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|a| (a / lead).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Ok((Rational::one() + max_ratio).floor().to_integer() + BigInt::one())
    }

    /// Divides by the positive rational that makes the coefficients coprime
    /// integers. Signs of all coefficients are preserved.
    pub fn primitive_positive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let denom_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numer_gcd = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
            .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
        self.scale(&Rational::new(denom_lcm, numer_gcd))
    }

    /// Largest bit length among all numerators and denominators.
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    /// Canonical total order: by degree, then coefficients from the top down.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    fn zip_with(&self, other: &Poly, f: impl Fn(&Rational, &Rational) -> Rational) -> Poly {
        let zero = Rational::zero();
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs(
            (0..len)
                .map(|i| {
                    f(
                        self.coeffs.get(i).unwrap_or(&zero),
                        other.coeffs.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self.zip_with(rhs, |a, b| a - b)
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
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;

            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    /// Renders in the formula syntax accepted by the command-line parser,
    /// e.g. `3*x^3 - 1/2*x + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match exp {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}*")?;
                    }
                    f.write_str("x")?;
                    if exp > 1 {
                        write!(f, "^{exp}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
