//! Weak compositions: the index set of every fixed-weight sum.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// An ordered tuple of nonnegative parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Streams every `k`-tuple of nonnegative integers summing to `n`, in
/// lexicographic order.
///
/// `k = 0` yields the single empty tuple when `n = 0` and nothing otherwise.
#[derive(Clone, Debug)]
pub struct WeakCompositions {
    current: Option<Vec<u32>>,
}

pub fn weak_compositions(n: u32, k: usize) -> WeakCompositions {
    let current = match k {
        0 if n == 0 => Some(Vec::new()),
        0 => None,
        _ => {
            let mut first = vec![0; k];
            first[k - 1] = n;
            Some(first)
        }
    };
    WeakCompositions { current }
}

impl Iterator for WeakCompositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.current.take()?;
        let k = current.len();
        // Successor: bump the rightmost position (other than the last) that
        // still has mass behind it, and park the remaining mass at the end.
        let mut successor = None;
        let mut suffix = 0u32;
        for i in (0..k.saturating_sub(1)).rev() {
            suffix += current[i + 1];
            if suffix > 0 {
                let mut next = current.clone();
                next[i] += 1;
                for slot in next.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                next[k - 1] = suffix - 1;
                successor = Some(next);
                break;
            }
        }
        self.current = successor;
        Some(Composition::new(current))
    }
}

/// Compositions of `n` into exactly `k` positive parts, in lexicographic
/// order.
pub fn compositions(n: u32, k: usize) -> impl Iterator<Item = Composition> {
    let shifted = if (k as u64) <= u64::from(n) { Some(weak_compositions(n - k as u32, k)) } else { None };
    shifted.into_iter().flatten().map(|c| Composition::new(c.into_parts().into_iter().map(|p| p + 1).collect()))
}

/// All compositions of `n` ordered by length, then lexicographically.
pub fn all_compositions(n: u32) -> impl Iterator<Item = Composition> {
    (1..=n as usize).flat_map(move |k| compositions(n, k))
}

/// `C(n+k-1, k-1)`, the number of items [`weak_compositions`] yields.
pub fn count_weak_compositions(n: u32, k: usize) -> BigUint {
    if k == 0 {
        return if n == 0 { BigUint::one() } else { BigUint::zero() };
    }
    let top = u64::from(n) + k as u64 - 1;
    let pick = (k as u64 - 1).min(u64::from(n));
    let mut acc = BigUint::one();
    for i in 0..pick {
        acc = acc * (top - i) / (i + 1);
    }
    acc
}
