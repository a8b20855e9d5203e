//! Fixed-length bitset used as the membership table of a semigroup.

const WORD: usize = 64;

/// A bitset over `0..len`. Bits past `len` in the last word are kept clear so
/// that derived equality and hashing only see the logical contents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct MemberTable {
    len: usize,
    words: Vec<u64>,
}

impl MemberTable {
    pub(crate) fn new(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub(crate) fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut t = Self::new(len);
        for i in 0..len {
            if f(i) {
                t.set(i);
            }
        }
        t
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    /// Shrinks the table to `len` bits, clearing anything past the new end.
    pub(crate) fn truncate(&mut self, len: usize) {
        if len >= self.len {
            return;
        }
        self.len = len;
        self.words.truncate(len.div_ceil(WORD));
        let rem = len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub(crate) fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    /// Highest index whose bit is clear, if any.
    pub(crate) fn last_zero(&self) -> Option<usize> {
        (0..self.len).rev().find(|&i| !self.get(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_and_get() {
        let mut t = MemberTable::new(130);
        t.set(0);
        t.set(64);
        t.set(129);
        assert!(t.get(0) && t.get(64) && t.get(129));
        assert!(!t.get(1));
        assert_eq!(t.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(t.count_ones(), 3);
        assert_eq!(t.last_zero(), Some(128));
    }

    #[test]
    fn truncate_clears_tail_bits() {
        let mut a = MemberTable::from_fn(100, |_| true);
        a.truncate(70);
        let b = MemberTable::from_fn(70, |_| true);
        assert_eq!(a, b);
        assert_eq!(a.count_ones(), 70);
    }
}
