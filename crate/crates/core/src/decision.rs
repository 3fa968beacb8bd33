//! Formulas of univariate real arithmetic and the universal/existential
//! deciders built on sign determination.
//!
//! Deciding `∀x φ` or `∃x φ` only needs the set of sign vectors that the
//! polynomials of `φ` realize over ℝ. That set is computed by splitting the
//! polynomials into a coprime squarefree basis `Q`, then solving sign
//! determination at the roots of each `qᵢ` (assignments where `qᵢ` vanishes)
//! and at the roots of an auxiliary polynomial whose roots separate and
//! bracket all roots of `Q` (assignments where nothing vanishes).

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::fork::{fork_map, Fork, Sequential};
use crate::poly::PolyError;
use crate::signdet::{
    calc_data_with, naive_find_consistent_signs_at_roots_with_limit, SignAssignment, SignDetError,
    DEFAULT_NAIVE_LIMIT,
};
use crate::tarski::QueryStats;
use crate::{Poly, Rational, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecisionError {
    #[error("polynomial {index} is constant; constants have no place in a factor basis")]
    ConstantInput { index: usize },
    #[error("auxiliary polynomial needs a nonempty basis")]
    EmptyQ,
    #[error(transparent)]
    SignDet(#[from] SignDetError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The three atomic relations `p > 0`, `p ≥ 0`, `p = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Gt,
    Geq,
    Eq,
}

impl Relation {
    pub fn holds(self, sign: Sign) -> bool {
        match self {
            Relation::Gt => sign == Sign::Positive,
            Relation::Geq => sign != Sign::Negative,
            Relation::Eq => sign == Sign::Zero,
        }
    }
}

/// Relations accepted on input, including the sugared ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rel {
    Gt,
    Geq,
    Eq,
    Lt,
    Leq,
    Neq,
}

impl Rel {
    pub fn holds(self, sign: Sign) -> bool {
        match self {
            Rel::Gt => sign == Sign::Positive,
            Rel::Geq => sign != Sign::Negative,
            Rel::Eq => sign == Sign::Zero,
            Rel::Lt => sign == Sign::Negative,
            Rel::Leq => sign != Sign::Positive,
            Rel::Neq => sign != Sign::Zero,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Gt => ">",
            Rel::Geq => ">=",
            Rel::Eq => "=",
            Rel::Lt => "<",
            Rel::Leq => "<=",
            Rel::Neq => "!=",
        }
    }
}

/// Input formula: atoms `p rel 0` with negation and the full relation set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RawFormula {
    Atom(Poly, Rel),
    Not(Box<RawFormula>),
    And(Box<RawFormula>, Box<RawFormula>),
    Or(Box<RawFormula>, Box<RawFormula>),
}

impl RawFormula {
    pub fn atom(p: Poly, rel: Rel) -> RawFormula {
        RawFormula::Atom(p, rel)
    }

    pub fn and(a: RawFormula, b: RawFormula) -> RawFormula {
        RawFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: RawFormula, b: RawFormula) -> RawFormula {
        RawFormula::Or(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: RawFormula) -> RawFormula {
        RawFormula::Not(Box::new(a))
    }

    /// Truth value at a rational point.
    pub fn eval(&self, x: &Rational) -> bool {
        match self {
            RawFormula::Atom(p, rel) => rel.holds(p.sign_at(x)),
            RawFormula::Not(a) => !a.eval(x),
            RawFormula::And(a, b) => a.eval(x) && b.eval(x),
            RawFormula::Or(a, b) => a.eval(x) || b.eval(x),
        }
    }

    /// Rewrites into the negation-free `>`/`≥`/`=` grammar:
    /// `p<0 ↦ −p>0`, `p≤0 ↦ −p≥0`, `p≠0 ↦ p>0 ∨ −p>0`, and negations pushed
    /// to the atoms with `¬(p>0) ↦ −p≥0`, `¬(p≥0) ↦ −p>0`, `¬(p=0) ↦ p≠0`.
    pub fn desugar(&self) -> Fml {
        self.desugar_polarity(false)
    }

    fn desugar_polarity(&self, negated: bool) -> Fml {
        match self {
            RawFormula::Atom(p, rel) => {
                let rel = if negated {
                    match rel {
                        Rel::Gt => Rel::Leq,
                        Rel::Geq => Rel::Lt,
                        Rel::Eq => Rel::Neq,
                        Rel::Lt => Rel::Geq,
                        Rel::Leq => Rel::Gt,
                        Rel::Neq => Rel::Eq,
                    }
                } else {
                    *rel
                };
                match rel {
                    Rel::Gt => Fml::Atom(p.clone(), Relation::Gt),
                    Rel::Geq => Fml::Atom(p.clone(), Relation::Geq),
                    Rel::Eq => Fml::Atom(p.clone(), Relation::Eq),
                    Rel::Lt => Fml::Atom(-p, Relation::Gt),
                    Rel::Leq => Fml::Atom(-p, Relation::Geq),
                    Rel::Neq => Fml::or(Fml::Atom(p.clone(), Relation::Gt), Fml::Atom(-p, Relation::Gt)),
                }
            }
            RawFormula::Not(a) => a.desugar_polarity(!negated),
            RawFormula::And(a, b) if negated => Fml::or(a.desugar_polarity(true), b.desugar_polarity(true)),
            RawFormula::Or(a, b) if negated => Fml::and(a.desugar_polarity(true), b.desugar_polarity(true)),
            RawFormula::And(a, b) => Fml::and(a.desugar_polarity(false), b.desugar_polarity(false)),
            RawFormula::Or(a, b) => Fml::or(a.desugar_polarity(false), b.desugar_polarity(false)),
        }
    }
}

/// Formula over concrete polynomials in the grammar
/// `p > 0 | p ≥ 0 | p = 0 | φ ∨ ψ | φ ∧ ψ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Fml {
    Atom(Poly, Relation),
    And(Box<Fml>, Box<Fml>),
    Or(Box<Fml>, Box<Fml>),
}

impl Fml {
    pub fn and(a: Fml, b: Fml) -> Fml {
        Fml::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Fml, b: Fml) -> Fml {
        Fml::Or(Box::new(a), Box::new(b))
    }
}

/// Formula structure whose atoms index a side table of polynomials.
/// Atoms over constant polynomials are resolved to `Const`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Const(bool),
    Atom { index: usize, relation: Relation },
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Const(b) => write!(f, "{b}"),
            Formula::Atom { index, relation } => {
                let rel = match relation {
                    Relation::Gt => ">",
                    Relation::Geq => ">=",
                    Relation::Eq => "=",
                };
                write!(f, "#{index} {rel} 0")
            }
            Formula::And(a, b) => write!(f, "({a} /\\ {b})"),
            Formula::Or(a, b) => write!(f, "({a} \\/ {b})"),
        }
    }
}

/// Splits a formula into its structure and the list of distinct nonconstant
/// polynomials it mentions, in order of first occurrence.
pub fn convert(fml: &Fml) -> (Formula, Vec<Poly>) {
    fn walk(fml: &Fml, polys: &mut Vec<Poly>) -> Formula {
        match fml {
            Fml::Atom(p, relation) => {
                if p.is_constant() {
                    return Formula::Const(relation.holds(p.leading_sign()));
                }
                let index = match polys.iter().position(|q| q == p) {
                    Some(i) => i,
                    None => {
                        polys.push(p.clone());
                        polys.len() - 1
                    }
                };
                Formula::Atom {
                    index,
                    relation: *relation,
                }
            }
            Fml::And(a, b) => Formula::And(Box::new(walk(a, polys)), Box::new(walk(b, polys))),
            Fml::Or(a, b) => Formula::Or(Box::new(walk(a, polys)), Box::new(walk(b, polys))),
        }
    }
    let mut polys = Vec::new();
    let structure = walk(fml, &mut polys);
    (structure, polys)
}

/// Truth value of the structure when each side-table polynomial has the
/// sign given by `signs`.
pub fn lookup_sem(formula: &Formula, signs: &[Sign]) -> bool {
    match formula {
        Formula::Const(b) => *b,
        Formula::Atom { index, relation } => relation.holds(signs[*index]),
        Formula::And(a, b) => lookup_sem(a, signs) && lookup_sem(b, signs),
        Formula::Or(a, b) => lookup_sem(a, signs) || lookup_sem(b, signs),
    }
}

/// Truth value of the formula at the rational point `x`.
pub fn fml_sem(fml: &Fml, x: &Rational) -> bool {
    match fml {
        Fml::Atom(p, relation) => relation.holds(p.sign_at(x)),
        Fml::And(a, b) => fml_sem(a, x) && fml_sem(b, x),
        Fml::Or(a, b) => fml_sem(a, x) || fml_sem(b, x),
    }
}

/// `g = c · Π basis[i]^e` for the listed `(i, e)` pairs; only the sign of
/// `c` is kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub sign: Sign,
    pub factors: Vec<(usize, u32)>,
}

impl Factorization {
    /// Sign of `g` given the signs of the basis polynomials.
    pub fn sign_from(&self, basis_signs: &[Sign]) -> Sign {
        self.factors
            .iter()
            .fold(self.sign, |acc, &(i, e)| acc * basis_signs[i].pow(e))
    }
}

/// Pairwise coprime, squarefree, monic, nonconstant polynomials together
/// with a factorization of every input over them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeBasis {
    pub basis: Vec<Poly>,
    pub factorizations: Vec<Factorization>,
}

impl CoprimeBasis {
    pub fn max_degree(&self) -> usize {
        self.basis.iter().filter_map(|q| q.degree().finite()).max().unwrap_or(0)
    }
}

/// Coprime squarefree basis by gcd-splitting of the squarefree factors of
/// every input; no factorization into irreducibles is attempted.
pub fn coprime_basis(polys: &[Poly]) -> Result<CoprimeBasis, DecisionError> {
    if let Some(index) = polys.iter().position(Poly::is_constant) {
        return Err(DecisionError::ConstantInput { index });
    }
    let mut pool: Vec<Poly> = Vec::new();
    for g in polys {
        for (f, _) in g.squarefree_factorization()? {
            if !pool.contains(&f) {
                pool.push(f);
            }
        }
    }

    // Replace any pair sharing a factor d by d, a/d, b/d until none remain.
    // Every split lowers the total degree, so this terminates.
    'refine: loop {
        for i in 0..pool.len() {
            for j in i + 1..pool.len() {
                let d = pool[i].gcd(&pool[j])?;
                if d.is_constant() {
                    continue;
                }
                let b = pool.swap_remove(j);
                let a = pool.swap_remove(i);
                for part in [a.exact_div(&d), b.exact_div(&d), Some(d.clone())] {
                    let part = part.expect("gcd divides both").monic();
                    if !part.is_constant() && !pool.contains(&part) {
                        pool.push(part);
                    }
                }
                continue 'refine;
            }
        }
        break;
    }
    pool.sort_by(Poly::canonical_cmp);

    let factorizations = polys
        .iter()
        .map(|g| {
            let mut rest = g.clone();
            let mut factors = Vec::new();
            for (i, q) in pool.iter().enumerate() {
                let mut exp = 0;
                while let Some(quot) = rest.exact_div(q) {
                    rest = quot;
                    exp += 1;
                }
                if exp > 0 {
                    factors.push((i, exp));
                }
            }
            debug_assert!(rest.is_constant() && !rest.is_zero());
            Factorization {
                sign: g.leading_sign(),
                factors,
            }
        })
        .collect();
    Ok(CoprimeBasis {
        basis: pool,
        factorizations,
    })
}

/// `(x − B)(x + B)·(Π qᵢ)′` with `B = crb(Π qᵢ)`: coprime with every `qᵢ`,
/// with a root between any two roots of the product and roots below and
/// above all of them.
pub fn build_aux_poly(basis: &[Poly]) -> Result<Poly, DecisionError> {
    if basis.is_empty() {
        return Err(DecisionError::EmptyQ);
    }
    let product = basis.iter().fold(Poly::one(), |acc, q| &acc * q);
    let bound = Rational::from_integer(product.crb()?);
    let outer = Poly::from_roots(&[bound.clone(), -bound]);
    Ok(&outer * &product.derivative())
}

/// Which restricted sign determination routine to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Method {
    /// Recursive combine-and-reduce.
    #[default]
    Bkr,
    /// One matrix equation over all `2ⁿ` candidates.
    Naive,
}

/// Consistent sign assignments of a polynomial list together with the
/// factor basis used to compute them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignDetermination {
    pub assignments: Vec<SignAssignment>,
    /// Basis of the nonconstant inputs.
    pub basis: CoprimeBasis,
}

/// Method selection plus the fork strategy for independent subproblems.
#[derive(Clone, Copy, Debug)]
pub struct Engine<F = Sequential> {
    pub method: Method,
    /// Upper bound on the list length handed to the naive method.
    pub naive_limit: usize,
    pub fork: F,
}

impl Default for Engine<Sequential> {
    fn default() -> Self {
        Engine::new(Method::Bkr)
    }
}

impl Engine<Sequential> {
    pub fn new(method: Method) -> Self {
        Engine {
            method,
            naive_limit: DEFAULT_NAIVE_LIMIT,
            fork: Sequential,
        }
    }
}

impl<F: Fork> Engine<F> {
    pub fn with_fork<G: Fork>(self, fork: G) -> Engine<G> {
        Engine {
            method: self.method,
            naive_limit: self.naive_limit,
            fork,
        }
    }

    pub fn with_naive_limit(mut self, limit: usize) -> Self {
        self.naive_limit = limit;
        self
    }

    /// Sign vectors of `qs` at the roots of `p` with the configured method.
    pub fn find_consistent_signs_at_roots(
        &self,
        p: &Poly,
        qs: &[Poly],
        stats: &mut QueryStats,
    ) -> Result<Vec<SignAssignment>, SignDetError> {
        match self.method {
            Method::Bkr => calc_data_with(p, qs, &self.fork, &(), stats).map(|s| s.signs),
            Method::Naive => naive_find_consistent_signs_at_roots_with_limit(p, qs, self.naive_limit, stats),
        }
    }

    /// All sign vectors realized by `polys` over ℝ, sorted and distinct.
    /// Constant polynomials are allowed and keep their fixed sign.
    pub fn find_consistent_signs(
        &self,
        polys: &[Poly],
        stats: &mut QueryStats,
    ) -> Result<SignDetermination, DecisionError> {
        let variable: Vec<usize> = (0..polys.len()).filter(|&i| !polys[i].is_constant()).collect();
        let nonconstant: Vec<Poly> = variable.iter().map(|&i| polys[i].clone()).collect();
        let basis = coprime_basis(&nonconstant)?;
        let q = &basis.basis;
        if self.method == Method::Naive && q.len() > self.naive_limit {
            return Err(SignDetError::NTooLarge {
                n: q.len(),
                limit: self.naive_limit,
            }
            .into());
        }

        let basis_assignments = if q.is_empty() {
            vec![SignAssignment::default()]
        } else {
            // Subproblem i < n: the others at the roots of q[i]; subproblem n:
            // all of q at the roots of the auxiliary polynomial.
            let aux = build_aux_poly(q)?;
            let tasks: Vec<usize> = (0..=q.len()).collect();
            let results = fork_map(&self.fork, &tasks, &|&i| {
                let mut local = QueryStats::default();
                let found = if i < q.len() {
                    let mut others = q.clone();
                    let root_poly = others.remove(i);
                    self.find_consistent_signs_at_roots(&root_poly, &others, &mut local)
                        .map(|signs| signs.into_iter().map(|s| s.with_inserted(i, Sign::Zero)).collect())
                } else {
                    self.find_consistent_signs_at_roots(&aux, q, &mut local)
                };
                (found, local)
            });
            let mut all = Vec::new();
            for (found, local) in results {
                stats.merge(&local);
                all.extend(found?);
            }
            all
        };

        let mut assignments: Vec<SignAssignment> = basis_assignments
            .iter()
            .map(|b| {
                let mut next_variable = 0;
                SignAssignment(
                    polys
                        .iter()
                        .map(|g| {
                            if g.is_constant() {
                                g.leading_sign()
                            } else {
                                let f = &basis.factorizations[next_variable];
                                next_variable += 1;
                                f.sign_from(b.signs())
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        assignments.sort();
        assignments.dedup();
        Ok(SignDetermination { assignments, basis })
    }

    pub fn decide_existential(&self, fml: &Fml, stats: &mut QueryStats) -> Result<bool, DecisionError> {
        let (structure, polys) = convert(fml);
        let found = self.find_consistent_signs(&polys, stats)?;
        Ok(found.assignments.iter().any(|s| lookup_sem(&structure, s.signs())))
    }

    pub fn decide_universal(&self, fml: &Fml, stats: &mut QueryStats) -> Result<bool, DecisionError> {
        let (structure, polys) = convert(fml);
        let found = self.find_consistent_signs(&polys, stats)?;
        Ok(found.assignments.iter().all(|s| lookup_sem(&structure, s.signs())))
    }
}

/// Realizable sign vectors of `polys` with the default engine.
pub fn find_consistent_signs(polys: &[Poly], stats: &mut QueryStats) -> Result<Vec<SignAssignment>, DecisionError> {
    Engine::default().find_consistent_signs(polys, stats).map(|d| d.assignments)
}

/// `∃x φ`.
pub fn decide_existential(fml: &Fml) -> Result<bool, DecisionError> {
    Engine::default().decide_existential(fml, &mut QueryStats::default())
}

/// `∀x φ`.
pub fn decide_universal(fml: &Fml) -> Result<bool, DecisionError> {
    Engine::default().decide_universal(fml, &mut QueryStats::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Negative as N, Positive as P, Zero as Z};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn sa(v: &[Sign]) -> SignAssignment {
        SignAssignment(v.to_vec())
    }

    /// x² − 2 = 0 ∧ 3x > 0
    fn running_example() -> Fml {
        Fml::and(Fml::Atom(p(&[-2, 0, 1]), Relation::Eq), Fml::Atom(p(&[0, 3]), Relation::Gt))
    }

    #[test]
    fn conversion() {
        let (structure, polys) = convert(&running_example());
        assert_eq!(polys, vec![p(&[-2, 0, 1]), p(&[0, 3])]);
        assert_eq!(
            structure,
            Formula::And(
                Box::new(Formula::Atom { index: 0, relation: Relation::Eq }),
                Box::new(Formula::Atom { index: 1, relation: Relation::Gt }),
            )
        );

        let dup = Fml::or(Fml::Atom(p(&[1, 1]), Relation::Gt), Fml::Atom(p(&[1, 1]), Relation::Gt));
        let (_, polys) = convert(&dup);
        assert_eq!(polys, vec![p(&[1, 1])]);

        let (structure, polys) = convert(&Fml::Atom(p(&[1]), Relation::Gt));
        assert_eq!(structure, Formula::Const(true));
        assert!(polys.is_empty());

        for (rel, expected) in [(Relation::Eq, true), (Relation::Gt, false), (Relation::Geq, true)] {
            assert_eq!(convert(&Fml::Atom(Poly::zero(), rel)).0, Formula::Const(expected));
        }
    }

    #[test]
    fn lookup_semantics() {
        let (structure, _) = convert(&running_example());
        assert!(!lookup_sem(&structure, &[Z, N]));
        assert!(lookup_sem(&structure, &[Z, P]));
        let constant = Formula::Or(Box::new(Formula::Const(true)), Box::new(Formula::Const(false)));
        assert!(lookup_sem(&constant, &[N, N]));
    }

    #[test]
    fn pointwise_semantics() {
        assert!(!fml_sem(&running_example(), &int(0)));
        assert!(!fml_sem(&running_example(), &int(2)));
        assert!(fml_sem(&Fml::Atom(p(&[0, 3]), Relation::Gt), &int(1)));
    }

    #[test]
    fn desugaring() {
        let x_minus_1 = p(&[-1, 1]);
        assert_eq!(
            RawFormula::atom(x_minus_1.clone(), Rel::Lt).desugar(),
            Fml::Atom(p(&[1, -1]), Relation::Gt)
        );
        assert_eq!(
            RawFormula::not(RawFormula::atom(x_minus_1.clone(), Rel::Gt)).desugar(),
            Fml::Atom(p(&[1, -1]), Relation::Geq)
        );
        assert_eq!(
            RawFormula::not(RawFormula::atom(x_minus_1.clone(), Rel::Eq)).desugar(),
            Fml::or(Fml::Atom(x_minus_1.clone(), Relation::Gt), Fml::Atom(p(&[1, -1]), Relation::Gt))
        );
        // desugaring preserves pointwise truth
        let raw = RawFormula::not(RawFormula::or(
            RawFormula::atom(x_minus_1.clone(), Rel::Leq),
            RawFormula::not(RawFormula::atom(p(&[-4, 0, 1]), Rel::Neq)),
        ));
        let fml = raw.desugar();
        for x in -4..=4 {
            assert_eq!(raw.eval(&int(x)), fml_sem(&fml, &int(x)), "x = {x}");
        }
    }

    #[test]
    fn bases() {
        let b = coprime_basis(&[p(&[-1, 0, 1]), p(&[-1, 1])]).unwrap();
        assert_eq!(b.basis, vec![p(&[-1, 1]), p(&[1, 1])]);
        assert_eq!(b.factorizations[0].factors, vec![(0, 1), (1, 1)]);
        assert_eq!(b.factorizations[1].factors, vec![(0, 1)]);

        let b = coprime_basis(&[p(&[0, 0, 1])]).unwrap();
        assert_eq!(b.basis, vec![p(&[0, 1])]);
        assert_eq!(b.factorizations[0].factors, vec![(0, 2)]);

        let b = coprime_basis(&[p(&[-2, 0, 1]), p(&[0, 3])]).unwrap();
        assert_eq!(b.basis, vec![p(&[0, 1]), p(&[-2, 0, 1])]);
        assert_eq!(b.factorizations[1], Factorization { sign: P, factors: vec![(0, 1)] });

        // x²(x−1): squarefree factors x and x−1 must both be in the basis
        let b = coprime_basis(&[p(&[0, 0, -1, 1])]).unwrap();
        assert_eq!(b.basis, vec![p(&[-1, 1]), p(&[0, 1])]);
        assert_eq!(b.factorizations[0].factors, vec![(0, 1), (1, 2)]);

        let b = coprime_basis(&[p(&[0, 0, -1]), p(&[4, 4, 1])]).unwrap();
        assert_eq!(b.factorizations[0].sign, N);
        assert_eq!(b.factorizations[1].factors, vec![(1, 2)]);

        assert_eq!(coprime_basis(&[p(&[0, 1]), p(&[3])]), Err(DecisionError::ConstantInput { index: 1 }));
    }

    #[test]
    fn aux_polynomials() {
        assert_eq!(build_aux_poly(&[p(&[0, 1])]).unwrap(), p(&[-4, 0, 1]));
        // x³ − 2x: crb = floor(1 + 2) + 1 = 4
        let expected = &p(&[-16, 0, 1]) * &p(&[-2, 0, 3]);
        assert_eq!(build_aux_poly(&[p(&[-2, 0, 1]), p(&[0, 1])]).unwrap(), expected);
        assert_eq!(build_aux_poly(&[p(&[-1, 1])]).unwrap(), p(&[-9, 0, 1]));
        assert_eq!(build_aux_poly(&[]), Err(DecisionError::EmptyQ));
    }

    #[test]
    fn consistent_signs() {
        let mut stats = QueryStats::default();
        let found = find_consistent_signs(&[p(&[-2, 0, 1]), p(&[0, 3])], &mut stats).unwrap();
        let mut expected = vec![
            sa(&[P, N]),
            sa(&[Z, N]),
            sa(&[N, N]),
            sa(&[N, Z]),
            sa(&[N, P]),
            sa(&[Z, P]),
            sa(&[P, P]),
        ];
        expected.sort();
        assert_eq!(found, expected);

        assert_eq!(
            find_consistent_signs(&[p(&[0, 1])], &mut stats).unwrap(),
            vec![sa(&[N]), sa(&[Z]), sa(&[P])]
        );
        assert_eq!(find_consistent_signs(&[p(&[1, 0, 1])], &mut stats).unwrap(), vec![sa(&[P])]);
        assert_eq!(find_consistent_signs(&[], &mut stats).unwrap(), vec![sa(&[])]);
        assert_eq!(
            find_consistent_signs(&[p(&[-3]), p(&[0, 1])], &mut stats).unwrap(),
            vec![sa(&[N, N]), sa(&[N, Z]), sa(&[N, P])]
        );
    }

    #[test]
    fn deciders() {
        assert!(!decide_universal(&running_example()).unwrap());
        assert!(decide_existential(&running_example()).unwrap());
        assert!(decide_universal(&Fml::Atom(p(&[1, 0, 1]), Relation::Gt)).unwrap());
        assert!(!decide_existential(&Fml::Atom(p(&[1, 0, 1]), Relation::Eq)).unwrap());
    }

    #[test]
    fn naive_engine_agrees() {
        let mut stats = QueryStats::default();
        let polys = [p(&[-2, 0, 1]), p(&[0, 3]), p(&[-1, 1])];
        let bkr = Engine::new(Method::Bkr).find_consistent_signs(&polys, &mut stats).unwrap();
        let mut naive_stats = QueryStats::default();
        let naive = Engine::new(Method::Naive).find_consistent_signs(&polys, &mut naive_stats).unwrap();
        assert_eq!(bkr, naive);
        // n = 3 factors: 3·2² + 2³
        assert_eq!(naive_stats.tarski_query_count, 20);
    }
}
