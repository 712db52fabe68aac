//! Compact bitmap over vertex slots.
//!
//! Graphs here have at most a few hundred slots, so a handful of `u64`
//! words is enough; all hot solver loops reduce to word operations.

/// Fixed-capacity bitmap over `len` slots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotSet {
    words: Vec<u64>,
    len: usize,
}

impl SlotSet {
    pub fn new(len: usize) -> Self {
        SlotSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, slot: usize) -> bool {
        debug_assert!(slot < self.len);
        self.words[slot / 64] >> (slot % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, slot: usize) {
        debug_assert!(slot < self.len);
        self.words[slot / 64] |= 1 << (slot % 64);
    }

    #[inline]
    pub fn remove(&mut self, slot: usize) {
        debug_assert!(slot < self.len);
        self.words[slot / 64] &= !(1 << (slot % 64));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn union_with(&mut self, other: &SlotSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &SlotSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset_of(&self, other: &SlotSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &SlotSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Lowest slot set in `self` but not in `other`, if any.
    pub fn first_missing_from(&self, other: &SlotSet) -> Option<usize> {
        debug_assert_eq!(self.len, other.len);
        for (i, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let diff = a & !b;
            if diff != 0 {
                return Some(i * 64 + diff.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }
}

impl std::fmt::Debug for SlotSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for SlotSet {
    /// Collects slots into a set sized to hold the largest one.
    /// Mostly a test convenience; prefer `new` + `insert` with a known size.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let slots: Vec<usize> = iter.into_iter().collect();
        let len = slots.iter().max().map_or(0, |m| m + 1);
        let mut set = SlotSet::new(len);
        for s in slots {
            set.insert(s);
        }
        set
    }
}
