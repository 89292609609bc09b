//! Bitset subsets of the ambient vertex set `[m] = {1, ..., m}`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest ambient vertex count a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 63;

/// A subset of `{1, ..., 63}` stored as a bitmask; vertex `v` lives in bit `v - 1`.
///
/// Ordering is lexicographic on the ascending vertex lists, so `{1,2} < {1,3} < {2}`
/// and the empty set sorts first. Faces, facets and subsets all use this type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

/// A face of a complex. Dimension is `len - 1`, so the empty simplex has dimension `-1`.
pub type Simplex = VertexSet;

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., m}`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_VERTICES, "vertex count {m} exceeds {MAX_VERTICES}");
        if m == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - m))
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        VertexSet(1 << (v - 1))
    }

    /// Builds a set from vertex labels. Panics on labels outside `1..=63`;
    /// use [`VertexSet::try_from_vertices`] for untrusted input.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        vertices
            .into_iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.with(v))
    }

    /// Returns the first out-of-range label on failure.
    pub fn try_from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self, usize> {
        let mut set = VertexSet::EMPTY;
        for v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(v);
            }
            set = set.with(v);
        }
        Ok(set)
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | VertexSet::singleton(v).0)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !VertexSet::singleton(v).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self != other && self.is_subset(other)
    }

    #[must_use]
    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Codimension-one faces, in lexicographic order.
    pub fn boundary_faces(self) -> Vec<VertexSet> {
        let mut faces: Vec<_> = self.iter().map(|v| self.without(v)).collect();
        faces.sort();
        faces
    }

    /// Every subset of `self` (including `self` and the empty set), in no particular order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Re-indexes `self ∩ mask` onto `1..=|mask|`, preserving vertex order.
    #[must_use]
    pub fn compress(self, mask: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for (k, v) in mask.iter().enumerate() {
            if self.contains(v) {
                out |= 1 << k;
            }
        }
        VertexSet(out)
    }

    /// Inverse of [`VertexSet::compress`]: sends vertex `k` to the `k`-th vertex of `mask`.
    #[must_use]
    pub fn expand(self, mask: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for (k, v) in mask.iter().enumerate() {
            if self.0 & (1 << k) != 0 {
                out = out.with(v);
            }
        }
        out
    }

    /// Signed position of `v` inside the set: the number of members smaller than `v`.
    pub fn position(self, v: usize) -> usize {
        (self.0 & ((1u64 << (v - 1)) - 1)).count_ones() as usize
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(deserializer)?;
        VertexSet::try_from_vertices(raw)
            .map_err(|v| serde::de::Error::custom(format!("vertex {v} outside 1..={MAX_VERTICES}")))
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Iterator over all submasks of a mask (Gosper-free submask walk).
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let current = self.next?;
        self.next = if current == self.mask {
            None
        } else {
            Some(((current | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(VertexSet(current))
    }
}

/// All `k`-element subsets of `{1..m}` in lexicographic order.
pub fn subsets_of_size(m: usize, k: usize) -> Vec<VertexSet> {
    use itertools::Itertools;
    (1..=m)
        .combinations(k)
        .map(VertexSet::from_vertices)
        .collect()
}

/// Every nonempty subset of `{1..m}`, ordered by size and then lexicographically.
pub fn subsets_by_size(m: usize) -> Vec<VertexSet> {
    (1..=m).flat_map(|k| subsets_of_size(m, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let a = VertexSet::from_vertices([1, 2]);
        let b = VertexSet::from_vertices([1, 3]);
        let c = VertexSet::from_vertices([2]);
        assert!(VertexSet::EMPTY < a);
        assert!(a < b && b < c);
        assert!(VertexSet::from_vertices([1]) < a);
    }

    #[test]
    fn compress_and_expand_invert() {
        let mask = VertexSet::from_vertices([2, 5, 7]);
        let s = VertexSet::from_vertices([5, 7]);
        let c = s.compress(mask);
        assert_eq!(c, VertexSet::from_vertices([2, 3]));
        assert_eq!(c.expand(mask), s);
    }

    #[test]
    fn subsets_cover_power_set() {
        let s = VertexSet::from_vertices([1, 4, 6]);
        let mut all: Vec<_> = s.subsets().collect();
        all.sort();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], VertexSet::EMPTY);
        assert!(all.iter().all(|x| x.is_subset(s)));
    }

    #[test]
    fn full_and_extremes() {
        assert_eq!(VertexSet::full(3).to_vec(), vec![1, 2, 3]);
        assert_eq!(VertexSet::full(63).len(), 63);
        assert_eq!(VertexSet::from_vertices([3, 9]).max_vertex(), Some(9));
        assert_eq!(VertexSet::from_vertices([3, 9]).position(9), 1);
        assert_eq!(VertexSet::try_from_vertices([0]), Err(0));
    }

    #[test]
    fn sized_subsets_are_lexicographic() {
        let all = subsets_by_size(3);
        assert_eq!(all.len(), 7);
        assert_eq!(all[0], VertexSet::from_vertices([1]));
        assert_eq!(all[3], VertexSet::from_vertices([1, 2]));
        assert_eq!(all[6], VertexSet::full(3));
    }
}
