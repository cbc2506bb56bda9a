//! Linear compositions, multisets in an interval, and orthoscheme spines.
//!
//! A linear composition of `n` is an integer row vector whose first and last
//! entries may be zero but whose internal entries are positive. Compositions
//! label the faces of the orthoscheme of `n`-point multisets in an interval;
//! merging two adjacent entries passes to a facet. Sending a composition to
//! the set of its proper-prefix partial sums identifies the merge order with
//! inclusion of nonempty subsets of `{0, .., n}`, so the poset is a Boolean
//! lattice with its minimum removed.

use std::collections::BTreeSet;
use std::fmt;

use crate::exact::Rat;
use crate::{Error, Result};

/// An integer vector `[a_l a_1 .. a_k a_r]` with nonnegative ends, positive
/// interior, and entry sum `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearComposition {
    entries: Vec<u64>,
}

impl LinearComposition {
    /// Validates a raw vector, reporting the first violated rule.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        Self::with_expected_sum(entries, None)
    }

    /// Validates a raw vector and additionally checks its sum against `n`.
    pub fn with_expected_sum(entries: Vec<i64>, expected: Option<u64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::CompositionTooShort { len: entries.len() });
        }
        for (pos, &e) in entries.iter().enumerate() {
            if e < 0 {
                return Err(Error::NegativeEntry { position: pos + 1 });
            }
            let internal = pos > 0 && pos + 1 < entries.len();
            if internal && e == 0 {
                return Err(Error::ZeroInternalEntry { position: pos + 1 });
            }
        }
        let sum: u64 = entries.iter().map(|&e| e as u64).sum();
        if sum == 0 {
            return Err(Error::ZeroTotal);
        }
        if let Some(n) = expected {
            if sum != n {
                return Err(Error::SumMismatch {
                    expected: n,
                    actual: sum,
                });
            }
        }
        Ok(LinearComposition {
            entries: entries.into_iter().map(|e| e as u64).collect(),
        })
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<u64>) -> Self {
        debug_assert!(entries.len() >= 2);
        debug_assert!(entries[1..entries.len() - 1].iter().all(|&e| e > 0));
        LinearComposition { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is always at least 2
    }

    pub fn n(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// Number of internal entries, which is also the dimension of the labeled
    /// orthoscheme face.
    pub fn dimension(&self) -> usize {
        self.len() - 2
    }

    /// Merges the entries on either side of gap `i in [k+1]`, replacing
    /// `a_{i-1}` and `a_i` by their sum. A length-2 composition cannot merge:
    /// a single-entry vector is not a composition.
    pub fn merge_at(&self, i: usize) -> Result<LinearComposition> {
        if self.len() == 2 {
            return Err(Error::CompositionTooShort { len: 1 });
        }
        if i < 1 || i >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.len() - 1,
            });
        }
        let mut entries = self.entries.clone();
        entries[i - 1] += entries[i];
        entries.remove(i);
        Ok(LinearComposition { entries })
    }

    /// The set of proper-prefix partial sums `{a_l, a_l + a_1, .., n - a_r}`.
    pub fn to_cutset(&self) -> CutSet {
        let mut cuts = BTreeSet::new();
        let mut acc = 0u64;
        for &e in &self.entries[..self.len() - 1] {
            acc += e;
            cuts.insert(acc);
        }
        CutSet { n: self.n(), cuts }
    }

    /// The merge partial order: true iff every merge cut of `self` is a cut of
    /// `other`, equivalently iff `self` is reachable from `other` by merges.
    pub fn leq(&self, other: &LinearComposition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::MismatchedN {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(self.to_cutset().cuts.is_subset(&other.to_cutset().cuts))
    }

    /// All single-merge results, deduplicated and in canonical order.
    pub fn lower_covers(&self) -> Vec<LinearComposition> {
        let mut covers: Vec<LinearComposition> = Vec::new();
        for i in 1..self.len() {
            if let Ok(merged) = self.merge_at(i) {
                covers.push(merged);
            }
        }
        covers.sort_by(compare_canonical);
        covers.dedup();
        covers
    }

    /// The spine of the labeled orthoscheme: one vertex per gap, obtained by
    /// merging at every other position, and one edge per internal entry. The
    /// edge after gap `i` has squared length `a_i` in units of the interval
    /// length squared.
    pub fn spine(&self) -> LinearSpine {
        let total = self.n();
        let mut vertices = Vec::with_capacity(self.len() - 1);
        let mut before = 0u64;
        for &e in &self.entries[..self.len() - 1] {
            before += e;
            vertices.push(LinearComposition {
                entries: vec![before, total - before],
            });
        }
        let weights = self.entries[1..self.len() - 1].to_vec();
        LinearSpine { vertices, weights }
    }
}

impl fmt::Display for LinearComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// Canonical order for composition listings: ascending length, then
/// lexicographic on entries.
pub fn compare_canonical(a: &LinearComposition, b: &LinearComposition) -> std::cmp::Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.entries.cmp(&b.entries))
}

/// A nonempty set of cut positions in `{0, .., n}`; the image of a linear
/// composition under prefix sums.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CutSet {
    n: u64,
    cuts: BTreeSet<u64>,
}

impl CutSet {
    pub fn new(n: u64, cuts: BTreeSet<u64>) -> Result<Self> {
        if cuts.is_empty() {
            return Err(Error::EmptyCutSet);
        }
        if let Some(&max) = cuts.iter().next_back() {
            if max > n {
                return Err(Error::CutOutOfRange { cut: max, n });
            }
        }
        Ok(CutSet { n, cuts })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn cuts(&self) -> &BTreeSet<u64> {
        &self.cuts
    }

    /// Inverse of `LinearComposition::to_cutset`: successive differences of
    /// the sorted cuts, padded by the first cut and `n - last`.
    pub fn to_composition(&self) -> LinearComposition {
        let sorted: Vec<u64> = self.cuts.iter().copied().collect();
        let mut entries = Vec::with_capacity(sorted.len() + 1);
        entries.push(sorted[0]);
        for w in sorted.windows(2) {
            entries.push(w[1] - w[0]);
        }
        entries.push(self.n - sorted[sorted.len() - 1]);
        LinearComposition { entries }
    }
}

/// All linear compositions of `n` in canonical order; there are `2^{n+1} - 1`
/// of them, one per nonempty subset of `{0, .., n}`.
pub fn enumerate_linear(n: u64) -> Vec<LinearComposition> {
    assert!(n >= 1, "compositions require n >= 1");
    assert!(n <= 20, "subset enumeration is exponential in n");
    let positions: Vec<u64> = (0..=n).collect();
    let mut out = Vec::with_capacity((1usize << (n + 1)) - 1);
    for mask in 1u64..(1 << (n + 1)) {
        let cuts: BTreeSet<u64> = positions
            .iter()
            .filter(|&&p| mask & (1 << p) != 0)
            .copied()
            .collect();
        out.push(CutSet { n, cuts }.to_composition());
    }
    out.sort_by(compare_canonical);
    out
}

/// An `n`-point multiset in a closed interval: exact rational support points
/// with positive multiplicities. Endpoints always index the outer composition
/// slots even when absent from the multiset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multiset1D {
    interval: (Rat, Rat),
    support: Vec<(Rat, u64)>,
}

impl Multiset1D {
    /// Builds a multiset, sorting the support and merging duplicate
    /// coordinates by adding multiplicities.
    pub fn new(interval: (Rat, Rat), points: Vec<(Rat, u64)>) -> Result<Self> {
        let (lo, hi) = interval;
        if lo >= hi {
            return Err(Error::DegenerateInterval);
        }
        if points.is_empty() {
            return Err(Error::EmptyMultiset);
        }
        let mut support: Vec<(Rat, u64)> = Vec::new();
        let mut sorted = points;
        sorted.sort_by_key(|&(x, _)| x);
        for (x, m) in sorted {
            if m == 0 {
                return Err(Error::ZeroMultiplicity);
            }
            if x < lo || x > hi {
                return Err(Error::PointOutsideDomain);
            }
            match support.last_mut() {
                Some((last, lm)) if *last == x => *lm += m,
                _ => support.push((x, m)),
            }
        }
        Ok(Multiset1D { interval, support })
    }

    pub fn interval(&self) -> (Rat, Rat) {
        self.interval
    }

    pub fn support(&self) -> &[(Rat, u64)] {
        &self.support
    }

    pub fn n(&self) -> u64 {
        self.support.iter().map(|&(_, m)| m).sum()
    }

    /// The multiplicity vector `[m_l m_1 .. m_k m_r]` with endpoint slots
    /// always present.
    pub fn composition(&self) -> LinearComposition {
        let (lo, hi) = self.interval;
        let mut entries = vec![0u64];
        for &(x, m) in &self.support {
            if x == lo {
                entries[0] = m;
            } else if x < hi {
                entries.push(m);
            }
        }
        let right = self
            .support
            .iter()
            .find(|&&(x, _)| x == hi)
            .map(|&(_, m)| m)
            .unwrap_or(0);
        entries.push(right);
        LinearComposition { entries }
    }
}

/// The spine of an orthoscheme: the path through its totally ordered vertices.
/// Vertex `i` is the length-2 composition splitting the mass at gap `i`; the
/// edge between vertices `i` and `i+1` carries the `i`-th internal entry as
/// its squared length in units of the interval length squared.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearSpine {
    vertices: Vec<LinearComposition>,
    weights: Vec<u64>,
}

impl LinearSpine {
    pub fn vertices(&self) -> &[LinearComposition] {
        &self.vertices
    }

    /// Squared edge lengths in units of the interval length squared.
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    /// Exact squared length of edge `i` for an interval of length `unit`.
    pub fn edge_sq_length(&self, i: usize, unit: Rat) -> Rat {
        Rat::from(self.weights[i]) * unit * unit
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(entries: &[i64]) -> LinearComposition {
        LinearComposition::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert_eq!(comp(&[0, 1, 1, 1, 0]).n(), 3);
        assert!(matches!(
            LinearComposition::new(vec![1, 0, 1]),
            Err(Error::ZeroInternalEntry { position: 2 })
        ));
        assert_eq!(comp(&[3, 4, 1, 2, 1]).n(), 11);
        assert!(matches!(
            LinearComposition::new(vec![5]),
            Err(Error::CompositionTooShort { len: 1 })
        ));
        assert!(matches!(
            LinearComposition::new(vec![1, -1, 1]),
            Err(Error::NegativeEntry { position: 2 })
        ));
        assert!(matches!(
            LinearComposition::new(vec![0, 0]),
            Err(Error::ZeroTotal)
        ));
        assert!(matches!(
            LinearComposition::with_expected_sum(vec![1, 1], Some(3)),
            Err(Error::SumMismatch {
                expected: 3,
                actual: 2
            })
        ));
    }

    #[test]
    fn merge_examples() {
        assert_eq!(
            comp(&[0, 1, 1, 1, 0]).merge_at(1).unwrap(),
            comp(&[1, 1, 1, 0])
        );
        assert_eq!(
            comp(&[3, 4, 1, 2, 1]).merge_at(3).unwrap(),
            comp(&[3, 4, 3, 1])
        );
        assert!(comp(&[3, 8]).merge_at(1).is_err());
        assert!(comp(&[0, 1, 0]).merge_at(3).is_err());
    }

    #[test]
    fn cutset_examples() {
        let cuts =
            |c: &LinearComposition| -> Vec<u64> { c.to_cutset().cuts().iter().copied().collect() };
        assert_eq!(cuts(&comp(&[0, 1, 1, 1, 0])), vec![0, 1, 2, 3]);
        assert_eq!(cuts(&comp(&[3, 4, 1, 2, 1])), vec![3, 7, 8, 10]);
        assert_eq!(cuts(&comp(&[7, 0])), vec![7]);
        assert_eq!(cuts(&comp(&[0, 7])), vec![0]);
    }

    #[test]
    fn cutset_round_trip_exhaustive() {
        for c in enumerate_linear(6) {
            assert_eq!(c.to_cutset().to_composition(), c);
        }
    }

    #[test]
    fn cutset_validation() {
        assert!(CutSet::new(3, BTreeSet::new()).is_err());
        assert!(CutSet::new(3, BTreeSet::from([4])).is_err());
        let c = CutSet::new(3, BTreeSet::from([0, 2])).unwrap();
        assert_eq!(c.to_composition(), comp(&[0, 2, 1]));
    }

    #[test]
    fn leq_examples() {
        let top = comp(&[0, 1, 1, 1, 0]);
        assert!(comp(&[1, 1, 1, 0]).leq(&top).unwrap());
        assert!(top.leq(&top).unwrap());
        assert!(comp(&[3, 8]).leq(&comp(&[3, 4, 1, 2, 1])).unwrap());
        assert!(!comp(&[4, 7]).leq(&comp(&[3, 4, 1, 2, 1])).unwrap());
        assert!(comp(&[1, 1]).leq(&comp(&[0, 1, 0])).is_err());
    }

    #[test]
    fn lower_cover_examples() {
        assert_eq!(comp(&[0, 1, 1, 1, 0]).lower_covers().len(), 4);
        assert!(comp(&[3, 8]).lower_covers().is_empty());
        assert_eq!(
            comp(&[0, 2, 1, 0]).lower_covers(),
            vec![comp(&[0, 2, 1]), comp(&[0, 3, 0]), comp(&[2, 1, 0])]
        );
    }

    #[test]
    fn enumeration_counts() {
        let one = enumerate_linear(1);
        assert_eq!(one.len(), 3);
        assert_eq!(one, vec![comp(&[0, 1]), comp(&[1, 0]), comp(&[0, 1, 0])]);
        assert_eq!(enumerate_linear(2).len(), 7);
        assert_eq!(enumerate_linear(8).len(), 511);
        assert_eq!(enumerate_linear(12).len(), 8191);
    }

    #[test]
    fn comp_map_examples() {
        let r = |p: i64, q: i64| Rat::new(p, q).unwrap();
        let unit = (r(0, 1), r(1, 1));
        let x = Multiset1D::new(
            unit,
            vec![
                (r(0, 1), 3),
                (r(1, 4), 4),
                (r(1, 2), 1),
                (r(3, 4), 2),
                (r(1, 1), 1),
            ],
        )
        .unwrap();
        assert_eq!(x.composition(), comp(&[3, 4, 1, 2, 1]));

        let corner = Multiset1D::new(unit, vec![(r(0, 1), 5)]).unwrap();
        assert_eq!(corner.composition(), comp(&[5, 0]));

        let interior =
            Multiset1D::new(unit, vec![(r(1, 5), 1), (r(2, 5), 1), (r(3, 5), 1)]).unwrap();
        assert_eq!(interior.composition(), comp(&[0, 1, 1, 1, 0]));
    }

    #[test]
    fn multiset_merges_duplicates_and_validates() {
        let r = |p: i64, q: i64| Rat::new(p, q).unwrap();
        let unit = (r(0, 1), r(1, 1));
        let x = Multiset1D::new(unit, vec![(r(1, 2), 1), (r(1, 2), 2)]).unwrap();
        assert_eq!(x.support(), &[(r(1, 2), 3)]);
        assert!(Multiset1D::new(unit, vec![]).is_err());
        assert!(Multiset1D::new(unit, vec![(r(2, 1), 1)]).is_err());
        assert!(Multiset1D::new(unit, vec![(r(1, 2), 0)]).is_err());
        assert!(Multiset1D::new((r(1, 1), r(1, 1)), vec![(r(1, 1), 1)]).is_err());
    }

    #[test]
    fn spine_worked_example() {
        let spine = comp(&[3, 4, 1, 2, 1]).spine();
        assert_eq!(
            spine.vertices(),
            &[comp(&[3, 8]), comp(&[7, 4]), comp(&[8, 3]), comp(&[10, 1])]
        );
        assert_eq!(spine.weights(), &[4, 1, 2]);
        assert_eq!(spine.edge_sq_length(0, Rat::one()), Rat::integer(4));

        let point = comp(&[5, 2]).spine();
        assert_eq!(point.vertices(), &[comp(&[5, 2])]);
        assert_eq!(point.edge_count(), 0);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(comp(&[0, 1, 1, 1, 0]).dimension(), 3);
        assert_eq!(comp(&[4, 3]).dimension(), 0);
        assert_eq!(comp(&[3, 4, 1, 2, 1]).dimension(), 3);
    }
}
