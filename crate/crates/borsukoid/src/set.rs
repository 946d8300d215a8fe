//! Fixed-width sets of ground-set indices, packed into a single machine word.

use std::fmt;

/// Largest supported ground-set size. Everything in this crate works on
/// matroids with at most 64 elements so that a subset fits in one `u64`.
pub const MAX_GROUND: usize = 64;

/// A subset of `{0, ..., n-1}` stored as a bit mask.
///
/// The natural order on `ElementSet` is the numeric order of the masks,
/// which is also the canonical order used for basis families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_mask(mask: u64) -> Self {
        ElementSet(mask)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut mask = 0u64;
        for i in indices {
            debug_assert!(i < MAX_GROUND);
            mask |= 1 << i;
        }
        ElementSet(mask)
    }

    /// The full set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == MAX_GROUND {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_GROUND);
        ElementSet(1 << i)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_GROUND && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < MAX_GROUND);
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < MAX_GROUND {
            self.0 &= !(1 << i);
        }
    }

    pub fn with(self, i: usize) -> Self {
        let mut s = self;
        s.insert(i);
        s
    }

    pub fn without(self, i: usize) -> Self {
        let mut s = self;
        s.remove(i);
        s
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        ElementSet(self.0 ^ other.0)
    }

    /// Complement within the ground set `{0, ..., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        ElementSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

/// Iterator over the indices of the set bits, in increasing order.
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

/// All `r`-subsets of `{0, ..., n-1}` in increasing mask order (Gosper's hack).
pub fn subsets_of_size(n: usize, r: usize) -> Vec<ElementSet> {
    debug_assert!(n <= MAX_GROUND);
    if r > n {
        return Vec::new();
    }
    if r == 0 {
        return vec![ElementSet::EMPTY];
    }
    let full = ElementSet::full(n).mask();
    let mut out = Vec::new();
    let mut v: u64 = (1u64 << r) - 1;
    while v <= full {
        out.push(ElementSet(v));
        // next combination in numeric order
        let t = v | (v - 1);
        if t == u64::MAX {
            break;
        }
        v = (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1));
    }
    out
}

/// Binomial coefficient with saturation, used for sizing guards.
pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
