//! Sign determination at the roots of a polynomial.
//!
//! A [`SignDetSystem`] holds candidate sign assignments `Σ̃` for a list of
//! polynomials `qs`, index subsets `S`, and the matrix
//! `M[i][j] = Π_{k ∈ Sᵢ} Σ̃ⱼ[k]`. With `v[i] = N(p, Π_{k ∈ Sᵢ} q_k)` and
//! `w[j]` the number of roots of `p` at which `qs` has signs `Σ̃ⱼ`, the
//! system satisfies `M·w = v`. When `M` is invertible the consistent
//! assignments are exactly those with `w[j] ≠ 0`.
//!
//! [`calc_data`] builds such a system recursively: a fixed 2×2 system per
//! polynomial, Kronecker-product combination of two halves, and a reduction
//! after every step that drops inconsistent columns and keeps a basis of
//! rows, so the system never grows past the number of roots of `p`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::fork::{Fork, Sequential};
use crate::matrix::{solve_kronecker, Mat, MatrixError, Vector};
use crate::tarski::{count_real_roots, tarski_query_subset, QueryStats, TarskiError};
use crate::{Poly, Rational, Sign};

/// Largest number of polynomials the naive method accepts by default.
pub const DEFAULT_NAIVE_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SignDetError {
    #[error("p must be a nonzero polynomial")]
    ZeroP,
    #[error("q[{index}] shares a root with p")]
    NotCoprime { index: usize },
    #[error("subset index {index} out of range for {len} polynomials")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("naive sign determination refuses {n} polynomials (limit {limit})")]
    NTooLarge { n: usize, limit: usize },
    #[error("internal invariant violated: w[{index}] is not a non-negative integer")]
    InvalidRootCount { index: usize },
    #[error("internal invariant violated: {0}")]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Tarski(TarskiError),
}

impl From<TarskiError> for SignDetError {
    fn from(err: TarskiError) -> Self {
        match err {
            TarskiError::ZeroP => SignDetError::ZeroP,
            TarskiError::IndexOutOfRange { index, len } => SignDetError::IndexOutOfRange { index, len },
            other => SignDetError::Tarski(other),
        }
    }
}

/// One sign per polynomial of the owning list.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignAssignment(pub Vec<Sign>);

impl SignAssignment {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn from_i8s(values: &[i8]) -> Option<SignAssignment> {
        values.iter().map(|&v| Sign::from_i8(v)).collect::<Option<Vec<_>>>().map(SignAssignment)
    }

    pub fn to_i8s(&self) -> Vec<i8> {
        self.0.iter().map(|s| s.to_i8()).collect()
    }

    /// The same assignment with `sign` inserted at `position`.
    pub fn with_inserted(&self, position: usize, sign: Sign) -> SignAssignment {
        let mut signs = self.0.clone();
        signs.insert(position, sign);
        SignAssignment(signs)
    }

    fn concat(&self, other: &SignAssignment) -> SignAssignment {
        let mut signs = self.0.clone();
        signs.extend_from_slice(&other.0);
        SignAssignment(signs)
    }
}

impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// Sorted, duplicate-free list of 0-based polynomial indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSubset(Vec<usize>);

impl IndexSubset {
    pub fn new(mut indices: Vec<usize>) -> IndexSubset {
        indices.sort_unstable();
        indices.dedup();
        IndexSubset(indices)
    }

    pub fn empty() -> IndexSubset {
        IndexSubset(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// `self ∪ (other + shift)`; stays sorted because every shifted index
    /// lies above the indices of `self` whenever `self ⊆ {0..shift}`.
    fn union_shifted(&self, other: &IndexSubset, shift: usize) -> IndexSubset {
        let mut indices = self.0.clone();
        indices.extend(other.0.iter().map(|i| i + shift));
        IndexSubset::new(indices)
    }
}

/// The triple `(M, S, Σ̃)` threaded through base, combine and reduce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignDetSystem {
    pub matrix: Mat,
    pub subsets: Vec<IndexSubset>,
    pub signs: Vec<SignAssignment>,
}

impl SignDetSystem {
    /// No candidate assignments: `p` has no real roots.
    pub fn empty() -> SignDetSystem {
        SignDetSystem {
            matrix: Mat::zeros(0, 0),
            subsets: Vec::new(),
            signs: Vec::new(),
        }
    }

    /// The system for an empty polynomial list when `p` has roots.
    pub fn trivial() -> SignDetSystem {
        SignDetSystem {
            matrix: Mat::identity(1),
            subsets: alloc::vec![IndexSubset::empty()],
            signs: alloc::vec![SignAssignment::default()],
        }
    }

    /// Unreduced one-polynomial system: subsets `[{}, {0}]`, signs
    /// `[(+1), (−1)]`, matrix `[[1, 1], [1, −1]]`.
    pub fn base() -> SignDetSystem {
        let subsets = alloc::vec![IndexSubset::empty(), IndexSubset(alloc::vec![0])];
        let signs = alloc::vec![
            SignAssignment(alloc::vec![Sign::Positive]),
            SignAssignment(alloc::vec![Sign::Negative]),
        ];
        SignDetSystem {
            matrix: build_matrix(&subsets, &signs).expect("indices are valid"),
            subsets,
            signs,
        }
    }
}

/// Points in the recursion at which a [`StageObserver`] is notified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    /// The fixed one-polynomial system, before its reduction.
    Base,
    /// A Kronecker-combined system, before its reduction.
    Combine,
    /// The output of a reduction.
    Reduce,
}

/// Receives every intermediate system built by [`calc_data_with`].
pub trait StageObserver: Sync {
    fn observe(&self, stage: Stage, p: &Poly, qs: &[Poly], system: &SignDetSystem);
}

impl StageObserver for () {
    fn observe(&self, _: Stage, _: &Poly, _: &[Poly], _: &SignDetSystem) {}
}

/// `M[i][j] = Π_{k ∈ subsets[i]} signs[j][k]`; the empty product is 1.
pub fn build_matrix(subsets: &[IndexSubset], signs: &[SignAssignment]) -> Result<Mat, SignDetError> {
    let mut m = Mat::zeros(subsets.len(), signs.len());
    for (i, subset) in subsets.iter().enumerate() {
        for (j, sigma) in signs.iter().enumerate() {
            let mut product = Sign::Positive;
            for &k in subset.indices() {
                let s = sigma.0.get(k).ok_or(SignDetError::IndexOutOfRange {
                    index: k,
                    len: sigma.len(),
                })?;
                product *= *s;
            }
            m[(i, j)] = Rational::from_integer(product.to_i8().into());
        }
    }
    Ok(m)
}

/// The Tarski-query vector `v[i] = N(subsets[i])`.
pub fn build_rhs(
    p: &Poly,
    qs: &[Poly],
    subsets: &[IndexSubset],
    stats: &mut QueryStats,
) -> Result<Vector, SignDetError> {
    subsets
        .iter()
        .map(|s| {
            tarski_query_subset(p, qs, s.indices(), stats)
                .map(|n| Rational::from_integer(n.into()))
                .map_err(SignDetError::from)
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Vector)
}

fn check_root_counts(w: &Vector) -> Result<(), SignDetError> {
    match w.iter().position(|x| !x.is_integer() || x.is_negative()) {
        Some(index) => Err(SignDetError::InvalidRootCount { index }),
        None => Ok(()),
    }
}

/// Solves `M·w = v`; every entry of `w` must be a root count.
pub fn solve_w(system: &SignDetSystem, v: &Vector) -> Result<Vector, SignDetError> {
    let w = system.matrix.invert()?.mat_vec(v)?;
    check_root_counts(&w)?;
    Ok(w)
}

/// Kronecker combination. `n1` is the length of the first polynomial list;
/// subsets of the second system are shifted by it. Assignments and subsets
/// are ordered first-system-major, matching the block layout of the
/// Kronecker product.
pub fn combine_systems(first: &SignDetSystem, n1: usize, second: &SignDetSystem) -> SignDetSystem {
    let signs = first
        .signs
        .iter()
        .flat_map(|a| second.signs.iter().map(move |b| a.concat(b)))
        .collect();
    let subsets = first
        .subsets
        .iter()
        .flat_map(|a| second.subsets.iter().map(move |b| a.union_shifted(b, n1)))
        .collect();
    SignDetSystem {
        matrix: first.matrix.kronecker(&second.matrix),
        subsets,
        signs,
    }
}

/// Deletes the assignments with zero root count, then keeps a basis of the
/// remaining rows so the matrix is square and invertible again.
pub fn reduce_system(
    p: &Poly,
    qs: &[Poly],
    system: &SignDetSystem,
    stats: &mut QueryStats,
) -> Result<SignDetSystem, SignDetError> {
    let v = build_rhs(p, qs, &system.subsets, stats)?;
    let w = solve_w(system, &v)?;

    let consistent: Vec<usize> = (0..w.len()).filter(|&j| !w[j].is_zero()).collect();
    let pruned = system.matrix.take_cols(&consistent);
    let rows = pruned.rows_to_keep();
    let matrix = pruned.take_rows(&rows);
    if !matrix.is_square() {
        return Err(MatrixError::NotSquare {
            rows: matrix.rows(),
            cols: matrix.cols(),
        }
        .into());
    }
    Ok(SignDetSystem {
        matrix,
        subsets: rows.iter().map(|&i| system.subsets[i].clone()).collect(),
        signs: consistent.iter().map(|&j| system.signs[j].clone()).collect(),
    })
}

/// The reduced system for a single polynomial `q`.
pub fn base_case(p: &Poly, q: &Poly, stats: &mut QueryStats) -> Result<SignDetSystem, SignDetError> {
    base_case_observed(p, q, &(), stats)
}

fn base_case_observed<O: StageObserver>(
    p: &Poly,
    q: &Poly,
    observer: &O,
    stats: &mut QueryStats,
) -> Result<SignDetSystem, SignDetError> {
    let qs = core::slice::from_ref(q);
    let system = SignDetSystem::base();
    observer.observe(Stage::Base, p, qs, &system);
    let reduced = reduce_system(p, qs, &system, stats)?;
    observer.observe(Stage::Reduce, p, qs, &reduced);
    Ok(reduced)
}

fn check_inputs(p: &Poly, qs: &[Poly]) -> Result<(), SignDetError> {
    if p.is_zero() {
        return Err(SignDetError::ZeroP);
    }
    match qs.iter().position(|q| !p.is_coprime_with(q)) {
        Some(index) => Err(SignDetError::NotCoprime { index }),
        None => Ok(()),
    }
}

/// Reduced system whose assignments are exactly the sign vectors of `qs`
/// at the real roots of `p`. Every `q` must be coprime with `p`.
pub fn calc_data(p: &Poly, qs: &[Poly], stats: &mut QueryStats) -> Result<SignDetSystem, SignDetError> {
    calc_data_with(p, qs, &Sequential, &(), stats)
}

/// [`calc_data`] with a fork strategy for the two recursive halves and an
/// observer notified at every stage. Each branch counts its own queries;
/// the counts are merged into `stats`.
pub fn calc_data_with<F: Fork, O: StageObserver>(
    p: &Poly,
    qs: &[Poly],
    fork: &F,
    observer: &O,
    stats: &mut QueryStats,
) -> Result<SignDetSystem, SignDetError> {
    check_inputs(p, qs)?;
    let (system, branch_stats) = recurse(p, qs, fork, observer);
    stats.merge(&branch_stats);
    system
}

fn recurse<F: Fork, O: StageObserver>(
    p: &Poly,
    qs: &[Poly],
    fork: &F,
    observer: &O,
) -> (Result<SignDetSystem, SignDetError>, QueryStats) {
    let mut stats = QueryStats::default();
    let result = match qs {
        [] => count_real_roots(p, &mut stats)
            .map_err(SignDetError::from)
            .map(|n| if n == 0 { SignDetSystem::empty() } else { SignDetSystem::trivial() }),
        [q] => base_case_observed(p, q, observer, &mut stats),
        _ => {
            let (left, right) = qs.split_at(qs.len() / 2);
            let ((first, first_stats), (second, second_stats)) = fork.join(
                || recurse(p, left, fork, observer),
                || recurse(p, right, fork, observer),
            );
            stats.merge(&first_stats);
            stats.merge(&second_stats);
            first.and_then(|first| {
                let second = second?;
                let combined = combine_systems(&first, left.len(), &second);
                observer.observe(Stage::Combine, p, qs, &combined);
                let reduced = reduce_system(p, qs, &combined, &mut stats)?;
                observer.observe(Stage::Reduce, p, qs, &reduced);
                Ok(reduced)
            })
        }
    };
    (result, stats)
}

/// All sign vectors of `qs` realized at real roots of `p`.
pub fn find_consistent_signs_at_roots(
    p: &Poly,
    qs: &[Poly],
    stats: &mut QueryStats,
) -> Result<Vec<SignAssignment>, SignDetError> {
    calc_data(p, qs, stats).map(|s| s.signs)
}

/// Single-shot matrix equation over all `2ⁿ` candidate assignments and all
/// `2ⁿ` subsets. Issues exactly `2ⁿ` Tarski queries.
pub fn naive_find_consistent_signs_at_roots(
    p: &Poly,
    qs: &[Poly],
    stats: &mut QueryStats,
) -> Result<Vec<SignAssignment>, SignDetError> {
    naive_find_consistent_signs_at_roots_with_limit(p, qs, DEFAULT_NAIVE_LIMIT, stats)
}

pub fn naive_find_consistent_signs_at_roots_with_limit(
    p: &Poly,
    qs: &[Poly],
    limit: usize,
    stats: &mut QueryStats,
) -> Result<Vec<SignAssignment>, SignDetError> {
    let n = qs.len();
    if n > limit || n >= usize::BITS as usize - 1 {
        return Err(SignDetError::NTooLarge { n, limit });
    }
    check_inputs(p, qs)?;
    let subsets = all_subsets(n);
    let signs = all_sign_assignments(n);
    let v = build_rhs(p, qs, &subsets, stats)?;
    // M is the n-th Kronecker power of the base matrix.
    let factors = alloc::vec![SignDetSystem::base().matrix; n];
    let w = solve_kronecker(&factors, &v)?;
    check_root_counts(&w)?;
    Ok(signs
        .into_iter()
        .zip(w.iter())
        .filter(|(_, count)| !count.is_zero())
        .map(|(sigma, _)| sigma)
        .collect())
}

/// All subsets of `{0..n}` in Kronecker order: index bit `n−1−k` selects `k`.
pub fn all_subsets(n: usize) -> Vec<IndexSubset> {
    (0..1usize << n)
        .map(|t| IndexSubset((0..n).filter(|k| t >> (n - 1 - k) & 1 == 1).collect()))
        .collect()
}

/// All `±1` vectors of length `n` in Kronecker order: index bit `n−1−k` set
/// means entry `k` is `−1`.
pub fn all_sign_assignments(n: usize) -> Vec<SignAssignment> {
    (0..1usize << n)
        .map(|t| {
            SignAssignment(
                (0..n)
                    .map(|k| if t >> (n - 1 - k) & 1 == 1 { Sign::Negative } else { Sign::Positive })
                    .collect(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use Sign::{Negative as N, Positive as P};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn sa(v: &[Sign]) -> SignAssignment {
        SignAssignment(v.to_vec())
    }

    fn subset(v: &[usize]) -> IndexSubset {
        IndexSubset::new(v.to_vec())
    }

    fn cubic() -> Poly {
        p(&[0, -1, 0, 1])
    }

    fn ell() -> Vec<Poly> {
        vec![p(&[2, 0, 0, 3]), p(&[-1, 0, 2])]
    }

    fn h() -> Mat {
        Mat::from_ints(&[&[1, 1], &[1, -1]])
    }

    #[test]
    fn matrices_from_definition() {
        let m = build_matrix(&[subset(&[]), subset(&[0])], &[sa(&[P]), sa(&[N])]).unwrap();
        assert_eq!(m, h());
        assert_eq!(build_matrix(&[subset(&[])], &[sa(&[N])]).unwrap(), Mat::from_ints(&[&[1]]));
        let subsets = [subset(&[]), subset(&[1]), subset(&[0]), subset(&[0, 1])];
        let signs = [sa(&[P, P]), sa(&[P, N]), sa(&[N, P]), sa(&[N, N])];
        assert_eq!(build_matrix(&subsets, &signs).unwrap(), h().kronecker(&h()));
        assert_eq!(
            build_matrix(&[subset(&[3])], &[sa(&[P])]),
            Err(SignDetError::IndexOutOfRange { index: 3, len: 1 })
        );
    }

    #[test]
    fn right_hand_sides() {
        let mut stats = QueryStats::default();
        let v = build_rhs(&cubic(), &ell()[..1], &[subset(&[]), subset(&[0])], &mut stats).unwrap();
        assert_eq!(v, Vector::from_ints(&[3, 1]));
        let subsets = [subset(&[]), subset(&[1]), subset(&[0]), subset(&[0, 1])];
        let v = build_rhs(&cubic(), &ell(), &subsets, &mut stats).unwrap();
        assert_eq!(v, Vector::from_ints(&[3, 1, 1, -1]));
        let v = build_rhs(&p(&[1, 0, 1]), &[p(&[0, 1])], &[subset(&[]), subset(&[0])], &mut stats)
            .unwrap();
        assert_eq!(v, Vector::from_ints(&[0, 0]));
        assert_eq!(stats.tarski_query_count, 8);
    }

    #[test]
    fn solving() {
        let w = solve_w(&SignDetSystem::base(), &Vector::from_ints(&[3, 1])).unwrap();
        assert_eq!(w, Vector::from_ints(&[2, 1]));

        let combined = combine_systems(&SignDetSystem::base(), 1, &SignDetSystem::base());
        let w = solve_w(&combined, &Vector::from_ints(&[3, 1, 1, -1])).unwrap();
        assert_eq!(w, Vector::from_ints(&[1, 1, 1, 0]));

        assert!(solve_w(&SignDetSystem::empty(), &Vector::default()).unwrap().is_empty());
        // v inconsistent with any root-count vector
        assert_eq!(
            solve_w(&SignDetSystem::base(), &Vector::from_ints(&[1, 0])),
            Err(SignDetError::InvalidRootCount { index: 0 })
        );
    }

    #[test]
    fn base_cases() {
        let mut stats = QueryStats::default();
        let sys = base_case(&cubic(), &ell()[0], &mut stats).unwrap();
        assert_eq!(sys, SignDetSystem::base());
        assert_eq!(stats.tarski_query_count, 2);

        let sys = base_case(&p(&[1, 0, 1]), &p(&[0, 1]), &mut stats).unwrap();
        assert_eq!(sys, SignDetSystem::empty());

        let sys = base_case(&p(&[-1, 1]), &p(&[0, 1]), &mut stats).unwrap();
        assert_eq!(sys.signs, vec![sa(&[P])]);
        assert_eq!(sys.subsets, vec![subset(&[])]);
        assert_eq!(sys.matrix, Mat::identity(1));
    }

    #[test]
    fn combination() {
        let combined = combine_systems(&SignDetSystem::base(), 1, &SignDetSystem::base());
        assert_eq!(
            combined.subsets,
            vec![subset(&[]), subset(&[1]), subset(&[0]), subset(&[0, 1])]
        );
        assert_eq!(
            combined.signs,
            vec![sa(&[P, P]), sa(&[P, N]), sa(&[N, P]), sa(&[N, N])]
        );
        assert_eq!(combined.matrix, h().kronecker(&h()));
        assert_eq!(build_matrix(&combined.subsets, &combined.signs).unwrap(), combined.matrix);

        let with_empty = combine_systems(&SignDetSystem::base(), 1, &SignDetSystem::empty());
        assert!(with_empty.signs.is_empty());
        assert_eq!(with_empty.matrix, Mat::zeros(0, 0));

        let with_trivial = combine_systems(&SignDetSystem::base(), 1, &SignDetSystem::trivial());
        assert_eq!(with_trivial.signs, SignDetSystem::base().signs);
    }

    #[test]
    fn reduction_of_the_combined_example() {
        let mut stats = QueryStats::default();
        let combined = combine_systems(&SignDetSystem::base(), 1, &SignDetSystem::base());
        let reduced = reduce_system(&cubic(), &ell(), &combined, &mut stats).unwrap();
        assert_eq!(reduced.signs, vec![sa(&[P, P]), sa(&[P, N]), sa(&[N, P])]);
        assert_eq!(reduced.matrix.rows(), 3);
        assert!(reduced.matrix.invert().is_ok());
        assert_eq!(build_matrix(&reduced.subsets, &reduced.signs).unwrap(), reduced.matrix);
        assert_eq!(stats.tarski_query_count, 4);

        // nothing to prune
        let again = reduce_system(&cubic(), &ell(), &reduced, &mut stats).unwrap();
        assert_eq!(again, reduced);

        let none = reduce_system(&p(&[1, 0, 1]), &ell(), &combined, &mut stats).unwrap();
        assert_eq!(none, SignDetSystem::empty());
    }

    #[test]
    fn full_recursion() {
        let mut stats = QueryStats::default();
        let sys = calc_data(&cubic(), &ell(), &mut stats).unwrap();
        assert_eq!(sys.signs, vec![sa(&[P, P]), sa(&[P, N]), sa(&[N, P])]);
        assert_eq!(stats.tarski_query_count, 8);

        let sys = calc_data(&cubic(), &[], &mut stats).unwrap();
        assert_eq!(sys.signs, vec![SignAssignment::default()]);
        let sys = calc_data(&p(&[1, 0, 1]), &[p(&[0, 1])], &mut stats).unwrap();
        assert!(sys.signs.is_empty());
        let sys = calc_data(&p(&[1, 0, 1]), &[], &mut stats).unwrap();
        assert!(sys.signs.is_empty());

        assert_eq!(
            calc_data(&cubic(), &[p(&[1]), p(&[-1, 1])], &mut stats),
            Err(SignDetError::NotCoprime { index: 1 })
        );
        assert_eq!(calc_data(&Poly::zero(), &[], &mut stats), Err(SignDetError::ZeroP));
    }

    #[test]
    fn consistent_signs_at_roots() {
        let mut stats = QueryStats::default();
        assert_eq!(
            find_consistent_signs_at_roots(&cubic(), &ell()[..1], &mut stats).unwrap(),
            vec![sa(&[P]), sa(&[N])]
        );
        assert_eq!(
            find_consistent_signs_at_roots(&p(&[-1, 1]), &[p(&[0, 1]), p(&[1, 1])], &mut stats)
                .unwrap(),
            vec![sa(&[P, P])]
        );
    }

    #[test]
    fn naive_method() {
        let mut stats = QueryStats::default();
        let signs = naive_find_consistent_signs_at_roots(&cubic(), &ell(), &mut stats).unwrap();
        assert_eq!(signs, vec![sa(&[P, P]), sa(&[P, N]), sa(&[N, P])]);
        assert_eq!(stats.tarski_query_count, 4);

        let mut stats = QueryStats::default();
        let signs = naive_find_consistent_signs_at_roots(&cubic(), &ell()[..1], &mut stats).unwrap();
        assert_eq!(signs, vec![sa(&[P]), sa(&[N])]);
        assert_eq!(stats.tarski_query_count, 2);

        let mut stats = QueryStats::default();
        let signs = naive_find_consistent_signs_at_roots(&cubic(), &[], &mut stats).unwrap();
        assert_eq!(signs, vec![SignAssignment::default()]);
        assert_eq!(stats.tarski_query_count, 1);
        let signs = naive_find_consistent_signs_at_roots(&p(&[1, 0, 1]), &[], &mut stats).unwrap();
        assert!(signs.is_empty());

        let many = vec![p(&[1, 0, 1]); 3];
        assert_eq!(
            naive_find_consistent_signs_at_roots_with_limit(&cubic(), &many, 2, &mut stats),
            Err(SignDetError::NTooLarge { n: 3, limit: 2 })
        );
    }

    #[test]
    fn naive_enumeration_is_a_kronecker_power() {
        let mut power = Mat::identity(1);
        for n in 0..5 {
            let m = build_matrix(&all_subsets(n), &all_sign_assignments(n)).unwrap();
            assert_eq!(m, power);
            power = power.kronecker(&h());
        }
    }
}
