//! Helpers for `u64` vertex sets.

#[inline(always)]
pub const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline(always)]
pub const fn contains(set: u64, v: usize) -> bool {
    (set >> v) & 1 == 1
}

/// Iterates set bits in ascending order.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn iter(set: u64) -> Bits {
    Bits(set)
}

/// Drops bit `v` and shifts every higher bit down by one.
#[inline]
pub fn remove_index(set: u64, v: usize) -> u64 {
    let low = set & low_mask(v);
    let high = if v + 1 >= 64 { 0 } else { set >> (v + 1) };
    low | (high << v)
}
