//! Fixed-width bit sets over variable (equivalently, vertex) indices.
//!
//! Every graph vertex is also a polynomial variable, so a single set type
//! serves as vertex set, square-free monomial support and simplicial face.
//! The width is 64; larger inputs are rejected at construction time.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported number of vertices / variables.
pub const MAX_VARS: usize = 64;

/// A subset of `0..MAX_VARS`.
///
/// `Ord` is lexicographic on the sorted member list, which is the canonical
/// order used for every set-valued output.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u64);

/// Vertex sets share the representation of variable sets.
pub type VertexSet = VarSet;

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        if n >= 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_VARS);
        VarSet(1u64 << i)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARS && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        VarSet(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        VarSet(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VarSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VarSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VarSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member, if any.
    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// One past the largest member (0 for the empty set).
    #[inline]
    pub fn bound(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Position of `i` among the members in increasing order.
    #[inline]
    pub fn rank_of(self, i: usize) -> usize {
        (self.0 & ((1u64 << i) - 1)).count_ones() as usize
    }

    /// Re-embed through an index map: member `i` becomes `map[i]`.
    pub fn map_through(self, map: &[usize]) -> Self {
        self.iter().map(|i| map[i]).collect()
    }

    /// All subsets of `self` with exactly `k` members, in lexicographic order.
    pub fn subsets_of_size(self, k: usize) -> Vec<VarSet> {
        let members = self.to_vec();
        let mut out = Vec::new();
        if k > members.len() {
            return out;
        }
        let n = members.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.iter().map(|&j| members[j]).collect());
            // rightmost position that can still advance
            let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + n - k) else {
                return out;
            };
            idx[pos] += 1;
            for j in pos + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// All subsets of `self` (2^len of them), in increasing bit order.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut cur = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = VarSet(cur);
            if cur == full {
                done = true;
            } else {
                cur = (cur.wrapping_sub(full)) & full;
            }
            Some(out)
        })
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let t = diff.trailing_zeros();
        // both agree below t; the side lacking t is smaller only if it ends there
        let (lacks, has_is_self) = if self.0 >> t & 1 == 1 {
            (other.0, true)
        } else {
            (self.0, false)
        };
        let lacks_smaller = lacks >> t == 0;
        match (lacks_smaller, has_is_self) {
            (true, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Less,
            (false, false) => Ordering::Greater,
        }
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical monomial order: degree first, then lexicographic.
pub fn graded_cmp(a: &VarSet, b: &VarSet) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VarSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for VarSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        Members(self.0)
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
