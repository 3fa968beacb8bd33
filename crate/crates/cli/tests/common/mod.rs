//! Test-only oracles and random instance generators. Nothing here goes
//! through the remainder-sequence or matrix-equation code under test: root
//! information comes either from construction (known rational roots) or from
//! a plain Sturm chain with bisection at rational points.

#![allow(dead_code)]

use std::collections::BTreeSet;

use bkr_core::{Fml, Poly, RawFormula, Rational, Rel, Relation, Sign, SignAssignment};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_rational(rng: &mut StdRng, max_num: i64, max_den: i64) -> Rational {
    ratio(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

pub fn random_nonzero_rational(rng: &mut StdRng, max_num: i64, max_den: i64) -> Rational {
    loop {
        let r = random_rational(rng, max_num, max_den);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Polynomial with exactly `degree` (nonzero leading coefficient).
pub fn random_poly(rng: &mut StdRng, degree: usize, max_num: i64, max_den: i64) -> Poly {
    let mut coeffs: Vec<Rational> = (0..degree).map(|_| random_rational(rng, max_num, max_den)).collect();
    coeffs.push(random_nonzero_rational(rng, max_num, max_den));
    Poly::from_coeffs(coeffs)
}

pub fn distinct_rationals(rng: &mut StdRng, count: usize, max_num: i64, max_den: i64) -> Vec<Rational> {
    let mut set = BTreeSet::new();
    while set.len() < count {
        set.insert(random_rational(rng, max_num, max_den));
    }
    set.into_iter().collect()
}

/// A polynomial with known distinct rational roots and random nonzero scale.
#[derive(Clone, Debug)]
pub struct RootedPoly {
    pub poly: Poly,
    pub roots: Vec<Rational>,
}

pub fn random_rooted_poly(rng: &mut StdRng, max_degree: usize) -> RootedPoly {
    let degree = rng.gen_range(1..=max_degree);
    let roots = distinct_rationals(rng, degree, 6, 3);
    let scale = random_nonzero_rational(rng, 5, 3);
    RootedPoly {
        poly: Poly::from_roots(&roots).scale(&scale),
        roots,
    }
}

/// Random polynomial of degree `0..=max_degree` not vanishing at any of `avoid`.
pub fn random_poly_avoiding(rng: &mut StdRng, max_degree: usize, avoid: &[Rational]) -> Poly {
    loop {
        let degree = rng.gen_range(0..=max_degree);
        let q = random_poly(rng, degree, 5, 3);
        if avoid.iter().all(|r| !q.eval(r).is_zero()) {
            return q;
        }
    }
}

pub fn sign_vector(qs: &[Poly], x: &Rational) -> SignAssignment {
    SignAssignment(qs.iter().map(|q| q.sign_at(x)).collect())
}

/// Sign vectors of `qs` at the given points, as a set.
pub fn signs_at_points(qs: &[Poly], points: &[Rational]) -> BTreeSet<SignAssignment> {
    points.iter().map(|x| sign_vector(qs, x)).collect()
}

// ---------------------------------------------------------------------------
// Sturm-chain root isolation

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]).unwrap();
        chain.push(-r);
    }
    chain.pop();
    chain
}

fn variations_at(chain: &[Poly], x: &Rational) -> usize {
    let signs: Vec<Sign> = chain.iter().map(|f| f.sign_at(x)).filter(|s| !s.is_zero()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct roots of squarefree `p` in the open interval `(a, b)`,
/// for endpoints where `p` does not vanish.
fn roots_between(chain: &[Poly], a: &Rational, b: &Rational) -> usize {
    variations_at(chain, a) - variations_at(chain, b)
}

fn cauchy_bound(p: &Poly) -> Rational {
    let lead = p.leading_coeff().unwrap().clone();
    let max = p.coeffs().iter().map(|c| (c / &lead).abs()).max().unwrap();
    max + int(2)
}

/// Disjoint open intervals `(a, b)`, sorted, each containing exactly one
/// real root of the squarefree nonconstant `p`, with `p(a), p(b) ≠ 0`.
pub fn isolate_roots(p: &Poly) -> Vec<(Rational, Rational)> {
    let chain = sturm_chain(p);
    let bound = cauchy_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        match roots_between(&chain, &a, &b) {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let width = &b - &a;
                let m = (2..)
                    .flat_map(|den: i64| (1..den).map(move |num| ratio(num, den)))
                    .map(|t| &a + &width * t)
                    .find(|m| !p.eval(m).is_zero())
                    .unwrap();
                stack.push((a, m.clone()));
                stack.push((m, b));
            }
        }
    }
    out.sort();
    out
}

/// Every sign vector `polys` realizes over ℝ, computed by isolating the
/// roots of the squarefree part of the product and inspecting each root and
/// one point in each gap.
pub fn realizable_signs(polys: &[Poly]) -> BTreeSet<SignAssignment> {
    let nonconstant: Vec<&Poly> = polys.iter().filter(|g| !g.is_constant()).collect();
    if nonconstant.is_empty() {
        return [sign_vector(polys, &int(0))].into_iter().collect();
    }
    let product = nonconstant.iter().fold(Poly::one(), |acc, g| &acc * *g);
    let s = product.squarefree_part().unwrap();
    let intervals = isolate_roots(&s);
    let bound = cauchy_bound(&s);

    let mut samples = vec![-bound.clone(), bound];
    samples.extend(intervals.iter().map(|(_, b)| b.clone()));
    let mut out = signs_at_points(polys, &samples);

    let chains: Vec<Option<Vec<Poly>>> = polys
        .iter()
        .map(|g| (!g.is_constant()).then(|| sturm_chain(&g.squarefree_part().unwrap())))
        .collect();
    for (a, b) in &intervals {
        let signs = polys
            .iter()
            .zip(&chains)
            .map(|(g, chain)| match chain {
                Some(chain) if roots_between(chain, a, b) > 0 => Sign::Zero,
                _ => g.sign_at(b),
            })
            .collect();
        out.insert(SignAssignment(signs));
    }
    out
}

/// Brute-force verdicts `(∀x φ, ∃x φ)` from the realizable sign vectors.
pub fn oracle_decide(raw: &RawFormula) -> (bool, bool) {
    let mut polys = Vec::new();
    collect_polys(raw, &mut polys);
    let realizable = realizable_signs(&polys);
    let truths: Vec<bool> = realizable.iter().map(|s| eval_with_signs(raw, &polys, s.signs())).collect();
    (truths.iter().all(|&t| t), truths.iter().any(|&t| t))
}

fn collect_polys(raw: &RawFormula, out: &mut Vec<Poly>) {
    match raw {
        RawFormula::Atom(p, _) => {
            if !out.contains(p) {
                out.push(p.clone());
            }
        }
        RawFormula::Not(a) => collect_polys(a, out),
        RawFormula::And(a, b) | RawFormula::Or(a, b) => {
            collect_polys(a, out);
            collect_polys(b, out);
        }
    }
}

fn eval_with_signs(raw: &RawFormula, polys: &[Poly], signs: &[Sign]) -> bool {
    match raw {
        RawFormula::Atom(p, rel) => {
            let i = polys.iter().position(|q| q == p).unwrap();
            rel.holds(signs[i])
        }
        RawFormula::Not(a) => !eval_with_signs(a, polys, signs),
        RawFormula::And(a, b) => eval_with_signs(a, polys, signs) && eval_with_signs(b, polys, signs),
        RawFormula::Or(a, b) => eval_with_signs(a, polys, signs) || eval_with_signs(b, polys, signs),
    }
}

// ---------------------------------------------------------------------------
// Random formulas

const RELS: [Rel; 6] = [Rel::Gt, Rel::Geq, Rel::Eq, Rel::Lt, Rel::Leq, Rel::Neq];

/// Random polynomial for formula atoms: either dense with small coefficients
/// or a product of linear factors over a small shared root pool, so that
/// atoms frequently share roots.
pub fn random_atom_poly(rng: &mut StdRng) -> Poly {
    loop {
        let p = random_atom_poly_unbounded(rng);
        if coefficients_within(&p, 20) {
            return p;
        }
    }
}

fn random_atom_poly_unbounded(rng: &mut StdRng) -> Poly {
    if rng.gen_bool(0.5) {
        let degree = rng.gen_range(0..=3);
        random_poly(rng, degree, 20, 20)
    } else {
        let pool = [int(-1), int(0), int(1), int(2), ratio(1, 2), ratio(-3, 2)];
        let k = rng.gen_range(1..=3);
        let roots: Vec<Rational> = (0..k).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
        let extra = if rng.gen_bool(0.3) { Poly::from_ints(&[2, 0, 1]) } else { Poly::one() };
        &Poly::from_roots(&roots).scale(&random_nonzero_rational(rng, 3, 2)) * &extra
    }
}

pub fn random_formula(rng: &mut StdRng, atoms: usize) -> RawFormula {
    if atoms <= 1 {
        let atom = RawFormula::atom(random_atom_poly(rng), RELS[rng.gen_range(0..RELS.len())]);
        return if rng.gen_bool(0.15) { RawFormula::not(atom) } else { atom };
    }
    let left = rng.gen_range(1..atoms);
    let a = random_formula(rng, left);
    let b = random_formula(rng, atoms - left);
    let f = if rng.gen_bool(0.5) { RawFormula::and(a, b) } else { RawFormula::or(a, b) };
    if rng.gen_bool(0.15) {
        RawFormula::not(f)
    } else {
        f
    }
}

/// Formula negation in the desugared grammar, built with the same rules as
/// the input sugar.
pub fn dual(fml: &Fml) -> Fml {
    match fml {
        Fml::Atom(p, Relation::Gt) => Fml::Atom(-p, Relation::Geq),
        Fml::Atom(p, Relation::Geq) => Fml::Atom(-p, Relation::Gt),
        Fml::Atom(p, Relation::Eq) => Fml::or(Fml::Atom(p.clone(), Relation::Gt), Fml::Atom(-p, Relation::Gt)),
        Fml::And(a, b) => Fml::or(dual(a), dual(b)),
        Fml::Or(a, b) => Fml::and(dual(a), dual(b)),
    }
}

/// Rank by plain forward elimination on a row list; independent of the
/// library's Gauss–Jordan routine.
pub fn oracle_rank(rows: &[Vec<Rational>]) -> usize {
    let mut rows: Vec<Vec<Rational>> = rows.to_vec();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for i in rank + 1..rows.len() {
            let factor = &rows[i][col] / &rows[rank][col];
            let pivot_row = rows[rank].clone();
            for (x, y) in rows[i][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * y;
            }
        }
        rank += 1;
    }
    rank
}

/// True when every coefficient has numerator and denominator at most `bound`
/// in absolute value.
pub fn coefficients_within(p: &Poly, bound: i64) -> bool {
    let bound = BigInt::from(bound);
    p.coeffs().iter().all(|c| c.numer().abs() <= bound && c.denom() <= &bound)
}
