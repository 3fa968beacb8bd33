//! Randomized self-check and a small query-count benchmark.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use bkr_core::{Engine, Fml, Method, Poly, QueryStats, Rational, Relation, SignAssignment};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[derive(Clone, Debug, Default)]
pub struct Summary {
    pub cases: usize,
    pub seed: u64,
    pub failures: Vec<String>,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for failure in &self.failures {
            writeln!(f, "FAIL {failure}")?;
        }
        writeln!(
            f,
            "selftest: {} cases, seed {}, {} failures",
            self.cases,
            self.seed,
            self.failures.len()
        )
    }
}

fn rational(rng: &mut StdRng, bound: i64) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-bound..=bound)), BigInt::from(rng.gen_range(1..=3)))
}

/// Checks, on `cases` random instances with known rational roots, that both
/// methods return exactly the sign vectors found by evaluating at the roots.
pub fn run(cases: usize, seed: u64, force: bool) -> Summary {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut summary = Summary {
        cases,
        seed,
        failures: Vec::new(),
    };
    for case in 0..cases {
        let mut roots = BTreeSet::new();
        let degree = rng.gen_range(1..=6);
        while roots.len() < degree {
            roots.insert(rational(&mut rng, 6));
        }
        let roots: Vec<Rational> = roots.into_iter().collect();
        let p = Poly::from_roots(&roots);
        let qs: Vec<Poly> = (0..rng.gen_range(0..=5))
            .map(|_| loop {
                let coeffs: Vec<Rational> = (0..=rng.gen_range(0..=4)).map(|_| rational(&mut rng, 5)).collect();
                let q = Poly::from_coeffs(coeffs);
                if !q.is_zero() && roots.iter().all(|r| !q.eval(r).is_zero()) {
                    break q;
                }
            })
            .collect();

        let expected: BTreeSet<SignAssignment> = roots
            .iter()
            .map(|r| SignAssignment(qs.iter().map(|q| q.sign_at(r)).collect()))
            .collect();
        for method in [Method::Bkr, Method::Naive] {
            let mut engine = Engine::new(method);
            if force {
                engine = engine.with_naive_limit(usize::MAX);
            }
            let got = engine.find_consistent_signs_at_roots(&p, &qs, &mut QueryStats::default());
            match got {
                Ok(got) if got.iter().cloned().collect::<BTreeSet<_>>() == expected && got.len() == expected.len() => {}
                Ok(got) => summary.failures.push(format!(
                    "case {case} ({method:?}): p = {p}, qs = [{}]: got {} assignments, expected {}",
                    join(&qs),
                    got.len(),
                    expected.len()
                )),
                Err(e) => summary.failures.push(format!("case {case} ({method:?}): {e}")),
            }
        }
    }
    summary
}

fn join(qs: &[Poly]) -> String {
    qs.iter().map(|q| q.to_string()).collect::<Vec<_>>().join("; ")
}

/// `∃x (x − 1 > 0 ∧ … ∧ x − n > 0)` for `n = 1..=max_factors`, run with both
/// methods.
pub fn bench(max_factors: usize) -> String {
    let mut out = String::from("factors  bkr_queries  bkr_ms  naive_queries  naive_ms\n");
    for n in 1..=max_factors {
        let fml = (2..=n as i64).fold(Fml::Atom(Poly::from_ints(&[-1, 1]), Relation::Gt), |acc, k| {
            Fml::and(acc, Fml::Atom(Poly::from_ints(&[-k, 1]), Relation::Gt))
        });
        let mut row = format!("{n:>7}");
        for method in [Method::Bkr, Method::Naive] {
            let mut stats = QueryStats::default();
            let start = Instant::now();
            let engine = Engine::new(method).with_naive_limit(usize::MAX);
            match engine.decide_existential(&fml, &mut stats) {
                Ok(_) => row.push_str(&format!(
                    "  {:>11}  {:>6}",
                    stats.tarski_query_count,
                    start.elapsed().as_millis()
                )),
                Err(e) => row.push_str(&format!("  error: {e}")),
            }
        }
        out.push_str(&row);
        out.push('\n');
    }
    out
}
