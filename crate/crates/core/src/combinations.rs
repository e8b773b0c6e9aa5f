//! k-subsets of `0..cells` as bitmasks, in increasing numeric order.
//!
//! The subsets are ranked colexicographically, which coincides with numeric
//! order of the masks, so any rank range can be enumerated independently.

use crate::counting::binomial_u64;

/// The mask of rank `rank` among the k-subsets of `0..cells`.
///
/// Callers guarantee `cells <= 64` and `rank < C(cells, k)`.
pub fn unrank(cells: usize, k: usize, mut rank: u64) -> u64 {
    let mut mask = 0u64;
    let mut hi = cells;
    for r in (1..=k).rev() {
        // largest c with C(c, r) <= rank
        let mut c = r - 1;
        while c + 1 < hi && binomial_u64(c + 1, r).expect("fits a word") <= rank {
            c += 1;
        }
        rank -= binomial_u64(c, r).expect("fits a word");
        mask |= 1 << c;
        hi = c;
    }
    mask
}

/// Gosper's hack: the next larger mask with the same popcount.
#[inline]
pub fn next_same_popcount(x: u64) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let c = x & x.wrapping_neg();
    let (r, overflow) = x.overflowing_add(c);
    if overflow || r == 0 {
        return None;
    }
    Some((((r ^ x) >> 2) / c) | r)
}

/// Masks with ranks `start..start + len`.
pub struct KSubsets {
    current: Option<u64>,
    left: u64,
}

impl KSubsets {
    pub fn range(cells: usize, k: usize, start: u64, len: u64) -> Self {
        let total = binomial_u64(cells, k).expect("fits a word");
        let len = len.min(total.saturating_sub(start));
        Self {
            current: (len > 0).then(|| unrank(cells, k, start)),
            left: len,
        }
    }

    pub fn all(cells: usize, k: usize) -> Self {
        Self::range(cells, k, 0, u64::MAX)
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.left == 0 {
            return None;
        }
        let x = self.current?;
        self.left -= 1;
        self.current = if self.left > 0 {
            next_same_popcount(x)
        } else {
            None
        };
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.left as usize, Some(self.left as usize))
    }
}
