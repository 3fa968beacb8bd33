//! Fork–join strategies for the independent branches of the recursion.

use alloc::vec::Vec;

/// Runs two independent computations, possibly concurrently.
pub trait Fork: Sync {
    fn join<A, B, RA, RB>(&self, a: A, b: B) -> (RA, RB)
    where
        A: FnOnce() -> RA + Send,
        B: FnOnce() -> RB + Send,
        RA: Send,
        RB: Send;
}

/// Runs both closures in order on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Fork for Sequential {
    fn join<A, B, RA, RB>(&self, a: A, b: B) -> (RA, RB)
    where
        A: FnOnce() -> RA + Send,
        B: FnOnce() -> RB + Send,
        RA: Send,
        RB: Send,
    {
        let ra = a();
        (ra, b())
    }
}

/// Maps `f` over `items` by recursive halving through `fork`, keeping the
/// input order.
pub fn fork_map<F, T, R, G>(fork: &F, items: &[T], f: &G) -> Vec<R>
where
    F: Fork,
    T: Sync,
    R: Send,
    G: Fn(&T) -> R + Sync,
{
    match items.len() {
        0 => Vec::new(),
        1 => alloc::vec![f(&items[0])],
        n => {
            let (left, right) = items.split_at(n / 2);
            let (mut a, b) = fork.join(|| fork_map(fork, left, f), || fork_map(fork, right, f));
            a.extend(b);
            a
        }
    }
}
