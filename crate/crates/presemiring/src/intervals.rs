//! Canonical unions of rational subintervals and finite or cofinite
//! subsets of the naturals.
//!
//! An [`IntervalUnionSet`] is kept canonical: parts are sorted, pairwise
//! disjoint, and no two adjacent parts can be merged. Canonical form is
//! unique for a given point set, so structural equality is set equality.

use crate::rational::Rat;
use std::fmt;

/// A bounded rational interval with open or closed endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat, lo_closed: bool, hi_closed: bool) -> RatInterval {
        RatInterval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        }
    }

    pub fn closed(lo: Rat, hi: Rat) -> RatInterval {
        RatInterval::new(lo, hi, true, true)
    }

    /// True when the interval contains no points.
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn length(&self) -> Rat {
        if self.is_empty() {
            Rat::ZERO
        } else {
            self.hi.sub(&self.lo)
        }
    }

    fn intersect(&self, other: &RatInterval) -> RatInterval {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            std::cmp::Ordering::Greater => (self.lo, self.lo_closed),
            std::cmp::Ordering::Less => (other.lo, other.lo_closed),
            std::cmp::Ordering::Equal => (self.lo, self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            std::cmp::Ordering::Less => (self.hi, self.hi_closed),
            std::cmp::Ordering::Greater => (other.hi, other.hi_closed),
            std::cmp::Ordering::Equal => (self.hi, self.hi_closed && other.hi_closed),
        };
        RatInterval::new(lo, hi, lo_closed, hi_closed)
    }

    /// True when the two intervals overlap or touch without a gap, so
    /// their union is a single interval.
    fn merges_with(&self, next: &RatInterval) -> bool {
        // Assumes self.lo <= next.lo after sorting.
        match self.hi.cmp(&next.lo) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Equal => self.hi_closed || next.lo_closed,
            std::cmp::Ordering::Less => false,
        }
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' },
        )
    }
}

/// A finite union of rational subintervals in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalUnionSet {
    parts: Vec<RatInterval>,
}

impl IntervalUnionSet {
    pub fn empty() -> IntervalUnionSet {
        IntervalUnionSet { parts: Vec::new() }
    }

    /// Canonicalizes an arbitrary collection of intervals: drops empty
    /// parts, sorts, and merges overlapping or touching parts.
    pub fn from_parts(parts: Vec<RatInterval>) -> IntervalUnionSet {
        let mut parts: Vec<RatInterval> = parts.into_iter().filter(|p| !p.is_empty()).collect();
        parts.sort_by(|a, b| {
            a.lo.cmp(&b.lo)
                .then_with(|| b.lo_closed.cmp(&a.lo_closed))
                .then_with(|| a.hi.cmp(&b.hi))
        });
        let mut merged: Vec<RatInterval> = Vec::with_capacity(parts.len());
        for part in parts {
            match merged.last_mut() {
                Some(last) if last.merges_with(&part) => {
                    match part.hi.cmp(&last.hi) {
                        std::cmp::Ordering::Greater => {
                            last.hi = part.hi;
                            last.hi_closed = part.hi_closed;
                        }
                        std::cmp::Ordering::Equal => {
                            last.hi_closed = last.hi_closed || part.hi_closed;
                        }
                        std::cmp::Ordering::Less => {}
                    }
                }
                _ => merged.push(part),
            }
        }
        IntervalUnionSet { parts: merged }
    }

    pub fn parts(&self) -> &[RatInterval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn union(&self, other: &IntervalUnionSet) -> IntervalUnionSet {
        let mut parts = self.parts.clone();
        parts.extend(other.parts.iter().copied());
        IntervalUnionSet::from_parts(parts)
    }

    pub fn intersect(&self, other: &IntervalUnionSet) -> IntervalUnionSet {
        let mut parts = Vec::new();
        for a in &self.parts {
            for b in &other.parts {
                parts.push(a.intersect(b));
            }
        }
        IntervalUnionSet::from_parts(parts)
    }

    /// Complement within the closed interval [lo, hi].
    pub fn complement_within(&self, lo: Rat, hi: Rat) -> IntervalUnionSet {
        let mut parts = Vec::new();
        let mut cursor = lo;
        let mut cursor_closed = true;
        for p in &self.parts {
            parts.push(RatInterval::new(cursor, p.lo, cursor_closed, !p.lo_closed));
            cursor = p.hi;
            cursor_closed = !p.hi_closed;
        }
        parts.push(RatInterval::new(cursor, hi, cursor_closed, true));
        IntervalUnionSet::from_parts(parts)
    }

    /// Total length; degenerate points contribute zero.
    pub fn length(&self) -> Rat {
        self.parts
            .iter()
            .fold(Rat::ZERO, |acc, p| acc.add(&p.length()))
    }

    /// True when every part lies inside [lo, hi].
    pub fn within(&self, lo: Rat, hi: Rat) -> bool {
        self.parts.iter().all(|p| p.lo >= lo && p.hi <= hi)
    }
}

impl fmt::Display for IntervalUnionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "empty");
        }
        let rendered: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", rendered.join("+"))
    }
}

/// A subset of the naturals that is finite or has finite complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCofiniteSet {
    /// When true, the set is the naturals minus `elems`; otherwise it is
    /// `elems` itself.
    cofinite: bool,
    elems: Vec<u64>,
}

impl FiniteCofiniteSet {
    pub fn finite(mut elems: Vec<u64>) -> FiniteCofiniteSet {
        elems.sort_unstable();
        elems.dedup();
        FiniteCofiniteSet {
            cofinite: false,
            elems,
        }
    }

    pub fn cofinite(mut excluded: Vec<u64>) -> FiniteCofiniteSet {
        excluded.sort_unstable();
        excluded.dedup();
        FiniteCofiniteSet {
            cofinite: true,
            elems: excluded,
        }
    }

    pub fn empty() -> FiniteCofiniteSet {
        FiniteCofiniteSet::finite(Vec::new())
    }

    pub fn everything() -> FiniteCofiniteSet {
        FiniteCofiniteSet::cofinite(Vec::new())
    }

    pub fn is_cofinite(&self) -> bool {
        self.cofinite
    }

    fn merge(a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = a.to_vec();
        out.extend_from_slice(b);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn common(a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().filter(|x| b.binary_search(x).is_ok()).copied().collect()
    }

    fn without(a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().filter(|x| b.binary_search(x).is_err()).copied().collect()
    }

    pub fn union(&self, other: &FiniteCofiniteSet) -> FiniteCofiniteSet {
        match (self.cofinite, other.cofinite) {
            (false, false) => FiniteCofiniteSet::finite(Self::merge(&self.elems, &other.elems)),
            (false, true) => FiniteCofiniteSet::cofinite(Self::without(&other.elems, &self.elems)),
            (true, false) => FiniteCofiniteSet::cofinite(Self::without(&self.elems, &other.elems)),
            (true, true) => FiniteCofiniteSet::cofinite(Self::common(&self.elems, &other.elems)),
        }
    }

    pub fn intersect(&self, other: &FiniteCofiniteSet) -> FiniteCofiniteSet {
        match (self.cofinite, other.cofinite) {
            (false, false) => FiniteCofiniteSet::finite(Self::common(&self.elems, &other.elems)),
            (false, true) => FiniteCofiniteSet::finite(Self::without(&self.elems, &other.elems)),
            (true, false) => FiniteCofiniteSet::finite(Self::without(&other.elems, &self.elems)),
            (true, true) => FiniteCofiniteSet::cofinite(Self::merge(&self.elems, &other.elems)),
        }
    }

    pub fn complement(&self) -> FiniteCofiniteSet {
        FiniteCofiniteSet {
            cofinite: !self.cofinite,
            elems: self.elems.clone(),
        }
    }
}

impl fmt::Display for FiniteCofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.elems.iter().map(|e| e.to_string()).collect();
        write!(
            f,
            "{}{{{}}}",
            if self.cofinite { "cof" } else { "fin" },
            rendered.join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn touching_intervals_merge() {
        // [0,1/2) and [1/2,3/4] cover [0,3/4] with no gap.
        let a = RatInterval::new(r(0, 1), r(1, 2), true, false);
        let b = RatInterval::closed(r(1, 2), r(3, 4));
        let u = IntervalUnionSet::from_parts(vec![a, b]);
        assert_eq!(u.parts().len(), 1);
        assert_eq!(u.parts()[0], RatInterval::closed(r(0, 1), r(3, 4)));
    }

    #[test]
    fn open_touching_intervals_do_not_merge() {
        let a = RatInterval::new(r(0, 1), r(1, 2), true, false);
        let b = RatInterval::new(r(1, 2), r(1, 1), false, true);
        let u = IntervalUnionSet::from_parts(vec![a, b]);
        assert_eq!(u.parts().len(), 2);
        assert_eq!(u.length(), r(1, 1));
    }

    #[test]
    fn degenerate_and_empty_parts() {
        let point = RatInterval::closed(r(1, 3), r(1, 3));
        assert!(!point.is_empty());
        assert_eq!(point.length(), Rat::ZERO);
        let void = RatInterval::new(r(1, 3), r(1, 3), true, false);
        assert!(void.is_empty());
        let u = IntervalUnionSet::from_parts(vec![void]);
        assert!(u.is_empty());
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let parts = vec![
            RatInterval::new(r(1, 4), r(3, 4), false, true),
            RatInterval::closed(r(0, 1), r(1, 2)),
            RatInterval::closed(r(7, 8), r(7, 8)),
        ];
        let once = IntervalUnionSet::from_parts(parts);
        let twice = IntervalUnionSet::from_parts(once.parts().to_vec());
        assert_eq!(once, twice);
    }

    #[test]
    fn union_intersect_complement() {
        let a = IntervalUnionSet::from_parts(vec![RatInterval::closed(r(0, 1), r(1, 2))]);
        let b = IntervalUnionSet::from_parts(vec![RatInterval::closed(r(1, 4), r(3, 4))]);
        let u = a.union(&b);
        assert_eq!(u.parts(), &[RatInterval::closed(r(0, 1), r(3, 4))]);
        let i = a.intersect(&b);
        assert_eq!(i.parts(), &[RatInterval::closed(r(1, 4), r(1, 2))]);
        let c = a.complement_within(r(0, 1), r(1, 1));
        assert_eq!(c.parts(), &[RatInterval::new(r(1, 2), r(1, 1), false, true)]);
        // Complement is an involution within the same bounds.
        assert_eq!(c.complement_within(r(0, 1), r(1, 1)), a);
    }

    #[test]
    fn cofinite_algebra() {
        let f = FiniteCofiniteSet::finite(vec![1, 2]);
        let c = FiniteCofiniteSet::cofinite(vec![2, 3]);
        assert_eq!(f.union(&c), FiniteCofiniteSet::cofinite(vec![3]));
        assert_eq!(f.intersect(&c), FiniteCofiniteSet::finite(vec![1]));
        assert_eq!(f.complement().complement(), f);
        assert_eq!(
            FiniteCofiniteSet::everything().intersect(&f),
            f
        );
        assert_eq!(f.to_string(), "fin{1,2}");
        assert_eq!(c.to_string(), "cof{2,3}");
    }
}
