//! Quantum minors `[S|T]`, their Plücker counterparts, and the formal
//! expansion of a quantum minor as a signed sum of words.
//!
//! The embedding of `m x n` matrices into `Gr(m, m+n)` reverses the column
//! order, so the minor `[S|T]` corresponds to the maximal minor on the
//! columns `(1..=m \ S) ∪ (w(T) + m)` where `w(t) = n - t + 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{k_subsets, Subset};

/// An `m`-subset of `1..=m+n` naming a Plücker coordinate.
pub type PluckerIndex = Subset;

/// Longest element of `S_len` acting on `1..=len`: `t ↦ len - t + 1`.
pub fn reverse_in(len: usize, t: usize) -> usize {
    debug_assert!((1..=len).contains(&t));
    len - t + 1
}

/// `I ∩ 1..=m`.
pub fn p1(set: Subset, m: usize) -> Subset {
    set.intersection(Subset::interval(1, m))
}

/// `I ∩ m+1..=m+n`.
pub fn p2(set: Subset, m: usize, n: usize) -> Subset {
    set.intersection(Subset::interval(m + 1, m + n))
}

/// Row and column sets of a quantum minor. The empty minor is the unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinorIndex {
    #[serde(rename = "S")]
    pub rows: Subset,
    #[serde(rename = "T")]
    pub cols: Subset,
}

impl MinorIndex {
    pub const UNIT: MinorIndex = MinorIndex {
        rows: Subset::EMPTY,
        cols: Subset::EMPTY,
    };

    /// Checked constructor for an `m x n` ambient matrix.
    pub fn new(m: usize, n: usize, rows: Subset, cols: Subset) -> Result<MinorIndex> {
        if rows.len() != cols.len() {
            return Err(Error::SizeMismatch {
                left: rows.len(),
                right: cols.len(),
            });
        }
        if let Some(r) = rows.max_element().filter(|&r| r > m) {
            return Err(Error::ElementOutOfRange { element: r, bound: m });
        }
        if let Some(c) = cols.max_element().filter(|&c| c > n) {
            return Err(Error::ElementOutOfRange { element: c, bound: n });
        }
        Ok(MinorIndex { rows, cols })
    }

    pub fn from_lists(m: usize, n: usize, rows: &[usize], cols: &[usize]) -> Result<MinorIndex> {
        MinorIndex::new(
            m,
            n,
            Subset::from_elements(m, rows)?,
            Subset::from_elements(n, cols)?,
        )
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn is_unit(&self) -> bool {
        self.rows.is_empty()
    }

    /// `[1..=n | 1..=n]`.
    pub fn determinant(n: usize) -> MinorIndex {
        MinorIndex {
            rows: Subset::interval(1, n),
            cols: Subset::interval(1, n),
        }
    }

    /// Paper-style compact text such as `[12|23]`; single-digit indices only.
    pub fn compact(&self) -> String {
        format!("[{}|{}]", self.rows.digits(), self.cols.digits())
    }

    /// Parses `[1 2|2 3]`, `[12|23]` or `[1,2|2,3]`.
    pub fn parse(text: &str) -> Result<MinorIndex> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("minor {t:?} must look like [S|T]")))?;
        let (s, tt) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("minor {t:?} is missing '|'")))?;
        let rows = Subset::parse(s, crate::subset::MAX_ELEMENT)?;
        let cols = Subset::parse(tt, crate::subset::MAX_ELEMENT)?;
        if rows.len() != cols.len() {
            return Err(Error::SizeMismatch {
                left: rows.len(),
                right: cols.len(),
            });
        }
        Ok(MinorIndex { rows, cols })
    }

    /// Checks the index against an `m x n` ambient matrix.
    pub fn check(&self, m: usize, n: usize) -> Result<()> {
        MinorIndex::new(m, n, self.rows, self.cols).map(|_| ())
    }
}

impl fmt::Display for MinorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: Subset| {
            s.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "[{}|{}]", join(self.rows), join(self.cols))
    }
}

impl FromStr for MinorIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<MinorIndex> {
        MinorIndex::parse(s)
    }
}

/// `[S|T] ↦ (1..=m \ S) ∪ (w_n(T) + m)`.
pub fn minor_to_plucker(m: usize, n: usize, minor: &MinorIndex) -> Result<PluckerIndex> {
    minor.check(m, n)?;
    let cols = minor.cols.map(|t| reverse_in(n, t) + m);
    Ok(Subset::interval(1, m).difference(minor.rows).union(cols))
}

/// `I ↦ [1..=m \ p1(I) | w_n(p2(I) - m)]`.
pub fn plucker_to_minor(m: usize, n: usize, set: PluckerIndex) -> Result<MinorIndex> {
    if set.len() != m {
        return Err(Error::SizeMismatch {
            left: set.len(),
            right: m,
        });
    }
    if let Some(e) = set.max_element().filter(|&e| e > m + n) {
        return Err(Error::ElementOutOfRange {
            element: e,
            bound: m + n,
        });
    }
    let rows = Subset::interval(1, m).difference(p1(set, m));
    let cols = p2(set, m, n).map(|e| reverse_in(n, e - m));
    Ok(MinorIndex { rows, cols })
}

/// Every non-unit minor of an `m x n` matrix, by size, then rows, then columns.
pub fn all_minors(m: usize, n: usize) -> Vec<MinorIndex> {
    let mut out = Vec::new();
    for r in 1..=m.min(n) {
        for rows in k_subsets(m, r) {
            for cols in k_subsets(n, r) {
                out.push(MinorIndex { rows, cols });
            }
        }
    }
    out
}

/// One summand `(-q)^exponent · X_{s1,c1} ⋯ X_{sr,cr}` of a quantum minor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExpansionTerm {
    /// Exponent of `(-q)`, the inversion count of the column permutation.
    pub exponent: usize,
    /// Generator positions `(row, col)`, rows strictly increasing.
    pub word: Vec<(usize, usize)>,
}

/// Formal expansion of a quantum minor; no commutation relations are applied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumMinorExpansion {
    pub terms: Vec<ExpansionTerm>,
}

/// Longest minor accepted by [`expand_quantum_minor`] (`8! = 40320` terms).
pub const MAX_EXPANSION_SIZE: usize = 8;

/// Expands `[S|T]_q` as the sum over column permutations `σ` of
/// `(-q)^{inv(σ)} X_{s1,σ(t1)} ⋯ X_{sr,σ(tr)}`. Terms are listed with the
/// column permutations in lexicographic order.
pub fn expand_quantum_minor(minor: &MinorIndex) -> Result<QuantumMinorExpansion> {
    let r = minor.size();
    if r == 0 {
        return Err(Error::EmptyMinor);
    }
    if minor.rows.len() != minor.cols.len() {
        return Err(Error::SizeMismatch {
            left: minor.rows.len(),
            right: minor.cols.len(),
        });
    }
    if r > MAX_EXPANSION_SIZE {
        return Err(Error::ScaleLimit(format!("a {r}x{r} minor expansion")));
    }
    let rows = minor.rows.to_vec();
    let cols = minor.cols.to_vec();
    let mut perm: Vec<usize> = (0..r).collect();
    let mut terms = Vec::new();
    loop {
        let exponent = inversions(&perm);
        let word = rows.iter().zip(&perm).map(|(&s, &p)| (s, cols[p])).collect();
        terms.push(ExpansionTerm { exponent, word });
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(QuantumMinorExpansion { terms })
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
        .sum()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl fmt::Display for QuantumMinorExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms.iter().enumerate() {
            let negative = term.exponent % 2 == 1;
            match (i, negative) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            match term.exponent {
                0 => {}
                1 => f.write_str("q ")?,
                e => write!(f, "q^{e} ")?,
            }
            let symbols: Vec<String> = term
                .word
                .iter()
                .map(|&(r, c)| {
                    if r < 10 && c < 10 {
                        format!("X{r}{c}")
                    } else {
                        format!("X_{{{r},{c}}}")
                    }
                })
                .collect();
            f.write_str(&symbols.join(" "))?;
        }
        Ok(())
    }
}
