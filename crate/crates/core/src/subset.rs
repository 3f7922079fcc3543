//! Finite subsets of `1..=64` packed into a single `u64`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest ground-set element representable by a [`Subset`].
pub const MAX_ELEMENT: usize = 64;

/// A set of positive integers, bit `e - 1` standing for element `e`.
///
/// Ordering and iteration are by the standard order on integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The interval `a..=b`; empty when `a > b`.
    pub fn interval(a: usize, b: usize) -> Subset {
        if a > b || b == 0 {
            return Subset::EMPTY;
        }
        let a = a.max(1);
        assert!(b <= MAX_ELEMENT, "interval end {b} exceeds {MAX_ELEMENT}");
        let hi = if b == 64 { u64::MAX } else { (1u64 << b) - 1 };
        let lo = (1u64 << (a - 1)) - 1;
        Subset(hi & !lo)
    }

    pub fn singleton(e: usize) -> Subset {
        assert!((1..=MAX_ELEMENT).contains(&e), "element {e} out of range");
        Subset(1u64 << (e - 1))
    }

    /// Builds a subset, rejecting elements outside `1..=bound` and repeats.
    pub fn from_elements(bound: usize, elements: &[usize]) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for &e in elements {
            if e == 0 || e > bound || e > MAX_ELEMENT {
                return Err(Error::ElementOutOfRange { element: e, bound });
            }
            if s.contains(e) {
                return Err(Error::Parse(format!("repeated element {e}")));
            }
            s.insert(e);
        }
        Ok(s)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Subset {
        Subset(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_ELEMENT).contains(&e) && self.0 & (1u64 << (e - 1)) != 0
    }

    pub fn insert(&mut self, e: usize) {
        *self = self.union(Subset::singleton(e));
    }

    pub fn remove(&mut self, e: usize) {
        if self.contains(e) {
            self.0 &= !(1u64 << (e - 1));
        }
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, if any.
    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// `{e + by : e in self}`.
    pub fn shift_up(self, by: usize) -> Subset {
        self.iter().map(|e| e + by).collect()
    }

    /// `{e - by : e in self}`; every element must exceed `by`.
    pub fn shift_down(self, by: usize) -> Subset {
        self.iter()
            .map(|e| {
                assert!(e > by, "shift_down would leave the positive integers");
                e - by
            })
            .collect()
    }

    /// Image under an arbitrary map on elements.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Subset {
        self.iter().map(f).collect()
    }

    /// Ascending iterator over the elements.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compact digit string such as `"237"`; only meaningful when every
    /// element is a single digit.
    pub fn digits(self) -> String {
        self.iter().map(|e| e.to_string()).collect()
    }

    /// Parses either `{3,4,6,7}` / `3,4,6,7` / `3 4 6 7`, or a bare digit
    /// string `3467` (single-digit elements only).
    pub fn parse(text: &str, bound: usize) -> Result<Subset> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() {
            return Ok(Subset::EMPTY);
        }
        let elements: Vec<usize> = if inner.contains(|c: char| c == ',' || c.is_whitespace()) {
            inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad subset element {p:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            inner
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad subset digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Subset::from_elements(bound, &elements)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the ascending element lists.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
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

impl FromStr for Subset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Subset> {
        Subset::parse(s, MAX_ELEMENT)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        Subset::from_elements(MAX_ELEMENT, &v).map_err(serde::de::Error::custom)
    }
}

/// All `k`-subsets of `1..=d` in lexicographic order.
pub fn k_subsets(d: usize, k: usize) -> Vec<Subset> {
    fn rec(start: usize, d: usize, k: usize, acc: Subset, out: &mut Vec<Subset>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for e in start..=d {
            if d - e + 1 < k {
                break;
            }
            let mut next = acc;
            next.insert(e);
            rec(e + 1, d, k - 1, next, out);
        }
    }
    let mut out = Vec::new();
    if k <= d {
        rec(1, d, k, Subset::EMPTY, &mut out);
    }
    out
}
