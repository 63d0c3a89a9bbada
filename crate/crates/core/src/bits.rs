//! Fixed-width bitmask helpers shared by the group and graph kernels.
//!
//! Masks are little slices of `u64` words; all sets in this crate are over
//! index ranges small enough that one or two words is the common case.

/// Number of 64-bit words needed to hold `n` bits.
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

pub fn set_bit(mask: &mut [u64], i: usize) {
    mask[i / 64] |= 1u64 << (i % 64);
}

pub fn clear_bit(mask: &mut [u64], i: usize) {
    mask[i / 64] &= !(1u64 << (i % 64));
}

pub fn test_bit(mask: &[u64], i: usize) -> bool {
    mask[i / 64] >> (i % 64) & 1 == 1
}

pub fn count_ones(mask: &[u64]) -> usize {
    mask.iter().map(|w| w.count_ones() as usize).sum()
}

/// Popcount of `a & b` without allocating.
pub fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// True iff `a` is a subset of `b`.
pub fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Indices of the set bits, ascending.
pub fn iter_ones(mask: &[u64]) -> impl Iterator<Item = usize> + '_ {
    mask.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}
