use bkr_core::Fork;

/// Runs the two branches of every fork on the rayon thread pool.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rayon;

impl Fork for Rayon {
    fn join<A, B, RA, RB>(&self, a: A, b: B) -> (RA, RB)
    where
        A: FnOnce() -> RA + Send,
        B: FnOnce() -> RB + Send,
        RA: Send,
        RB: Send,
    {
        rayon::join(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bkr_core::{calc_data, signdet::calc_data_with, Poly, QueryStats};

    #[test]
    fn matches_sequential() {
        let roots: Vec<_> = (-3..=3).map(|r: i64| bkr_core::Rational::from_integer(r.into())).collect();
        let p = Poly::from_roots(&roots);
        // odd at every integer, so coprime with p
        let qs: Vec<Poly> = (0..6).map(|k| Poly::from_ints(&[2 * k + 1, 0, 2, -2])).collect();
        let mut seq = QueryStats::default();
        let mut par = QueryStats::default();
        let a = calc_data(&p, &qs, &mut seq).unwrap();
        let b = calc_data_with(&p, &qs, &Rayon, &(), &mut par).unwrap();
        assert_eq!(a, b);
        assert_eq!(seq, par);
    }
}
