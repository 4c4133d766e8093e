//! Ground-set elements and fixed-width subset masks.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

/// Index of an element of the ground set, 0-based internally.
///
/// Displays 1-based (`e1`, `e2`, ...) so traces read like the usual
/// `E = {e1, ..., en}` notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }

    /// Builds an element from its 1-based label. Returns `None` for 0.
    pub fn from_label(label: usize) -> Option<Self> {
        label.checked_sub(1).map(ElementId)
    }

    pub fn label(self) -> usize {
        self.0 + 1
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0 + 1)
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId(i)
    }
}

/// A subset of a ground set of `n` elements, one bit per element.
///
/// Only the low `n` bits are ever set. Ordering compares masks as unsigned
/// integers (element `i` has weight `2^i`), which is the "mask order" used
/// by exhaustive enumerations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    n: usize,
    words: Vec<u64>,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

impl SubsetMask {
    pub fn empty(n: usize) -> Self {
        SubsetMask {
            n,
            words: vec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut m = Self::empty(n);
        for (w, word) in m.words.iter_mut().enumerate() {
            let lo = w * WORD_BITS;
            let bits = (n - lo).min(WORD_BITS);
            *word = if bits == WORD_BITS {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            };
        }
        m
    }

    /// Mask of the elements with index in `range`.
    pub fn range(n: usize, range: std::ops::Range<usize>) -> Self {
        let mut m = Self::empty(n);
        for i in range {
            m.insert(ElementId(i));
        }
        m
    }

    /// Panics if an index is out of range.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Self {
        let mut m = Self::empty(n);
        for i in indices {
            assert!(i < n, "element index {i} outside ground set of size {n}");
            m.insert(ElementId(i));
        }
        m
    }

    /// Builds a mask from 1-based labels; `None` if a label is 0 or exceeds `n`.
    pub fn from_labels<I: IntoIterator<Item = usize>>(n: usize, labels: I) -> Option<Self> {
        let mut m = Self::empty(n);
        for l in labels {
            if l == 0 || l > n {
                return None;
            }
            m.insert(ElementId(l - 1));
        }
        Some(m)
    }

    /// Interprets the low `n` bits of `bits` as a subset. Requires `n <= 64`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n <= WORD_BITS, "from_bits needs n <= 64, got {n}");
        let mut m = Self::empty(n);
        if n > 0 {
            let keep = if n == WORD_BITS {
                u64::MAX
            } else {
                (1u64 << n) - 1
            };
            assert!(bits & !keep == 0, "bits outside ground set of size {n}");
            m.words[0] = bits;
        }
        m
    }

    /// Low word of the mask; the whole mask when `n <= 64`.
    pub fn to_bits(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, e: ElementId) -> bool {
        e.0 < self.n && self.words[e.0 / WORD_BITS] >> (e.0 % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, e: ElementId) {
        assert!(e.0 < self.n, "{e} outside ground set of size {}", self.n);
        self.words[e.0 / WORD_BITS] |= 1 << (e.0 % WORD_BITS);
    }

    pub fn remove(&mut self, e: ElementId) {
        if e.0 < self.n {
            self.words[e.0 / WORD_BITS] &= !(1 << (e.0 % WORD_BITS));
        }
    }

    /// `self + e`
    pub fn with(&self, e: ElementId) -> Self {
        let mut m = self.clone();
        m.insert(e);
        m
    }

    /// `self - e`
    pub fn without(&self, e: ElementId) -> Self {
        let mut m = self.clone();
        m.remove(e);
        m
    }

    /// `self + add - drop`, the basis-exchange set used by fundamental circuits
    /// and the adjacency oracle.
    pub fn exchange(&self, add: ElementId, drop: ElementId) -> Self {
        let mut m = self.clone();
        m.insert(add);
        m.remove(drop);
        m
    }

    fn check_same_ground(&self, other: &Self) {
        debug_assert_eq!(self.n, other.n, "subset masks over different ground sets");
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same_ground(other);
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same_ground(other);
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_same_ground(other);
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    /// `|self ∩ other|` without allocating.
    pub fn intersection_count(&self, other: &Self) -> usize {
        self.check_same_ground(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same_ground(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection_count(other) == 0
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        SubsetMask {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Elements in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(ElementId(w * WORD_BITS + bit))
            })
        })
    }

    /// Lowest element, if any.
    pub fn first(&self) -> Option<ElementId> {
        self.iter().next()
    }

    /// 1-based labels in ascending order.
    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(ElementId::label).collect()
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Every subset of a ground set of size `n <= 30`, in mask order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = SubsetMask> {
    assert!(n <= 30, "refusing to enumerate 2^{n} subsets");
    (0u64..1 << n).map(move |bits| SubsetMask::from_bits(n, bits))
}
