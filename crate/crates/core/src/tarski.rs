//! Tarski queries via signed remainder sequences.
//!
//! For `p ≠ 0` the sequence `p₁ = p`, `p₂ = p′·q`, `pᵢ = −(pᵢ₋₂ mod pᵢ₋₁)`
//! determines `N(p, q) = #{p = 0, q > 0} − #{p = 0, q < 0}` as the difference
//! between the sign variations of the leading coefficients at −∞ and +∞.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::{Poly, Rational, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TarskiError {
    #[error("Tarski query against the zero polynomial")]
    ZeroP,
    #[error("zero entry in a sign sequence")]
    ZeroEntry,
    #[error("polynomial index {index} out of range for {len} polynomials")]
    IndexOutOfRange { index: usize, len: usize },
}

/// Counters accumulated over a run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QueryStats {
    pub tarski_query_count: u64,
    pub max_intermediate_degree: usize,
    pub max_coefficient_bitsize: u64,
}

impl QueryStats {
    /// Folds in the stats of an independently computed branch.
    pub fn merge(&mut self, other: &QueryStats) {
        self.tarski_query_count += other.tarski_query_count;
        self.max_intermediate_degree = self.max_intermediate_degree.max(other.max_intermediate_degree);
        self.max_coefficient_bitsize = self.max_coefficient_bitsize.max(other.max_coefficient_bitsize);
    }

    fn record(&mut self, seq: &RemainderSequence) {
        self.tarski_query_count += 1;
        if let Some(&d) = seq.degrees.iter().max() {
            self.max_intermediate_degree = self.max_intermediate_degree.max(d);
        }
        let bits = seq.polys.iter().map(Poly::max_coeff_bits).max().unwrap_or(0);
        self.max_coefficient_bitsize = self.max_coefficient_bitsize.max(bits);
    }
}

/// How remainders are rescaled while the sequence is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Keep the remainders exactly as produced by division.
    None,
    /// Divide each entry by its positive content (see
    /// [`Poly::primitive_positive`]); leading signs are unchanged.
    PositiveContent,
}

/// The nonzero prefix `p₁ … p_k` of the signed remainder sequence of
/// `(p, p′·q)`, with leading-coefficient signs and degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemainderSequence {
    pub polys: Vec<Poly>,
    pub leading_signs: Vec<Sign>,
    pub degrees: Vec<usize>,
}

impl RemainderSequence {
    pub fn new(p: &Poly, q: &Poly, normalization: Normalization) -> Result<Self, TarskiError> {
        if p.is_zero() {
            return Err(TarskiError::ZeroP);
        }
        let polys = match normalization {
            Normalization::None => {
                let mut polys = Vec::new();
                let mut prev = p.clone();
                let mut cur = &p.derivative() * q;
                while !cur.is_zero() {
                    let next = -prev.rem(&cur).expect("divisor is nonzero");
                    polys.push(prev);
                    prev = cur;
                    cur = next;
                }
                polys.push(prev);
                polys
            }
            Normalization::PositiveContent => {
                let mut ints = Vec::new();
                let mut prev = primitive_ints(p);
                let mut cur = primitive_ints(&(&p.derivative() * q));
                while !cur.is_empty() {
                    let next: Vec<BigInt> = pseudo_rem_positive(&prev, &cur).into_iter().map(|c| -c).collect();
                    ints.push(prev);
                    prev = cur;
                    cur = make_primitive(next);
                }
                ints.push(prev);
                ints.into_iter()
                    .map(|c| Poly::from_coeffs(c.into_iter().map(Rational::from_integer).collect()))
                    .collect()
            }
        };

        let leading_signs = polys.iter().map(Poly::leading_sign).collect();
        let degrees = polys
            .iter()
            .map(|f| f.degree().finite().expect("sequence entries are nonzero"))
            .collect();
        Ok(RemainderSequence {
            polys,
            leading_signs,
            degrees,
        })
    }

    /// Sign changes at +∞ (the leading signs themselves).
    pub fn variations_at_pos_infinity(&self) -> usize {
        sign_variations(&self.leading_signs).expect("leading signs are nonzero")
    }

    /// Sign changes at −∞: `(−1)^{deg pᵢ}·aᵢ`.
    pub fn variations_at_neg_infinity(&self) -> usize {
        let signs: Vec<Sign> = self
            .leading_signs
            .iter()
            .zip(&self.degrees)
            .map(|(&s, &d)| if d % 2 == 1 { -s } else { s })
            .collect();
        sign_variations(&signs).expect("leading signs are nonzero")
    }

    pub fn tarski_query(&self) -> i64 {
        self.variations_at_neg_infinity() as i64 - self.variations_at_pos_infinity() as i64
    }
}

fn primitive_ints(f: &Poly) -> Vec<BigInt> {
    f.primitive_positive().into_coeffs().into_iter().map(|c| c.to_integer()).collect()
}

fn make_primitive(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    let content = coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in &mut coeffs {
            *c /= &content;
        }
    }
    coeffs
}

/// Remainder of `a` by `b` scaled by a positive integer, computed without
/// fractions. Coefficients are ascending; the result has no leading zeros.
fn pseudo_rem_positive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lead = b.last().expect("divisor is nonzero");
    let (scale, flip) = (lead.abs(), lead.is_negative());
    let mut r = a.to_vec();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let top = r.pop().expect("nonempty");
        if !top.is_zero() {
            for c in r.iter_mut() {
                *c *= &scale;
            }
            let t = if flip { -top } else { top };
            for (j, d) in b[..b.len() - 1].iter().enumerate() {
                r[shift + j] -= &t * d;
            }
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

/// Number of adjacent pairs of opposite sign.
pub fn sign_variations(signs: &[Sign]) -> Result<usize, TarskiError> {
    if signs.iter().any(|s| s.is_zero()) {
        return Err(TarskiError::ZeroEntry);
    }
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

/// `N(p, q)`: roots of `p` where `q > 0` minus roots where `q < 0`.
///
/// Roots of `p` at which `q` vanishes contribute nothing; the sign
/// determination pipeline only calls this with `q` coprime to `p`.
pub fn tarski_query(p: &Poly, q: &Poly, stats: &mut QueryStats) -> Result<i64, TarskiError> {
    let seq = RemainderSequence::new(p, q, Normalization::PositiveContent)?;
    stats.record(&seq);
    Ok(seq.tarski_query())
}

/// `N(I) = N(p, Π_{i∈I} qᵢ)`.
pub fn tarski_query_subset(
    p: &Poly,
    qs: &[Poly],
    subset: &[usize],
    stats: &mut QueryStats,
) -> Result<i64, TarskiError> {
    let mut product = Poly::one();
    for &i in subset {
        let q = qs.get(i).ok_or(TarskiError::IndexOutOfRange {
            index: i,
            len: qs.len(),
        })?;
        product = &product * q;
    }
    tarski_query(p, &product, stats)
}

/// Number of distinct real roots, `N(p, 1)`.
pub fn count_real_roots(p: &Poly, stats: &mut QueryStats) -> Result<usize, TarskiError> {
    tarski_query(p, &Poly::one(), stats).map(|n| n as usize)
}
