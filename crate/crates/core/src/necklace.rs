//! Grassmann necklaces of type `(m, m+n)`, Gale orders and the vanishing
//! test for Plücker coordinates on a cell.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::CauchonDiagram;
use crate::error::{Error, Result};
use crate::minor::{all_minors, minor_to_plucker, reverse_in, MinorIndex, PluckerIndex};
use crate::subset::Subset;

/// The cyclic order `i < i+1 < … < d < 1 < … < i-1` on `1..=d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaleOrder {
    d: usize,
    base: usize,
}

impl GaleOrder {
    pub fn new(d: usize, base: usize) -> Result<GaleOrder> {
        if base == 0 || base > d {
            return Err(Error::ElementOutOfRange {
                element: base,
                bound: d,
            });
        }
        Ok(GaleOrder { d, base })
    }

    pub fn ground(&self) -> usize {
        self.d
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// Position of `e` in the rotated order, starting from 0.
    pub fn rank(&self, e: usize) -> usize {
        (e + self.d - self.base) % self.d
    }

    /// Elements of `set` listed in increasing rotated order.
    pub fn sorted(&self, set: Subset) -> Vec<usize> {
        let upper = set.intersection(Subset::interval(self.base, self.d));
        let lower = set.intersection(Subset::interval(1, self.base - 1));
        upper.iter().chain(lower.iter()).collect()
    }

    /// Componentwise comparison after sorting both sets in this order.
    pub fn leq(&self, s: Subset, t: Subset) -> Result<bool> {
        if s.len() != t.len() {
            return Err(Error::SizeMismatch {
                left: s.len(),
                right: t.len(),
            });
        }
        for set in [s, t] {
            if let Some(e) = set.max_element().filter(|&e| e > self.d) {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    bound: self.d,
                });
            }
        }
        Ok(self.leq_unchecked(s, t))
    }

    pub(crate) fn leq_unchecked(&self, s: Subset, t: Subset) -> bool {
        let (a, b) = (self.sorted(s), self.sorted(t));
        a.iter().zip(&b).all(|(&x, &y)| self.rank(x) <= self.rank(y))
    }
}

/// `S ≤_i T` in the Gale order based at `i` on `1..=d`.
pub fn gale_leq(order: GaleOrder, s: Subset, t: Subset) -> Result<bool> {
    order.leq(s, t)
}

/// The first necklace axiom found to fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NecklaceViolation {
    /// Wrong number of terms.
    TermCount { expected: usize, found: usize },
    /// Term `term` (1-based) does not have `m` elements.
    TermSize { term: usize, size: usize },
    /// Term `term` contains an element outside `1..=m+n`.
    OutOfRange { term: usize, element: usize },
    /// `i ∈ I_i` but `I_{i+1}` is not `I_i` with `i` exchanged for one element.
    Exchange { i: usize },
    /// `i ∉ I_i` but `I_{i+1} ≠ I_i`.
    Stationary { i: usize },
    /// Matrix cells require `I_1 = 1..=m`.
    FirstTerm,
}

impl fmt::Display for NecklaceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NecklaceViolation::TermCount { expected, found } => {
                write!(f, "expected {expected} terms, found {found}")
            }
            NecklaceViolation::TermSize { term, size } => {
                write!(f, "term I_{term} has {size} elements")
            }
            NecklaceViolation::OutOfRange { term, element } => {
                write!(f, "term I_{term} contains out-of-range element {element}")
            }
            NecklaceViolation::Exchange { i } => {
                write!(f, "{i} ∈ I_{i} but the next term is not a single exchange of I_{i}")
            }
            NecklaceViolation::Stationary { i } => {
                write!(f, "{i} ∉ I_{i} but the next term differs")
            }
            NecklaceViolation::FirstTerm => write!(f, "I_1 is not 1..=m"),
        }
    }
}

/// Checks the necklace axioms cyclically; with `matrix_cell` also demands
/// `I_1 = 1..=m`.
pub fn validate_necklace(
    m: usize,
    n: usize,
    terms: &[Subset],
    matrix_cell: bool,
) -> std::result::Result<(), NecklaceViolation> {
    let d = m + n;
    if terms.len() != d {
        return Err(NecklaceViolation::TermCount {
            expected: d,
            found: terms.len(),
        });
    }
    for (idx, t) in terms.iter().enumerate() {
        if let Some(e) = t.max_element().filter(|&e| e > d) {
            return Err(NecklaceViolation::OutOfRange {
                term: idx + 1,
                element: e,
            });
        }
        if t.len() != m {
            return Err(NecklaceViolation::TermSize {
                term: idx + 1,
                size: t.len(),
            });
        }
    }
    for i in 1..=d {
        let cur = terms[i - 1];
        let next = terms[i % d];
        if cur.contains(i) {
            let rest = cur.difference(Subset::singleton(i));
            // `next` must be `rest ∪ {j}`; j = i is allowed.
            if !rest.is_subset(next) || next.len() != m {
                return Err(NecklaceViolation::Exchange { i });
            }
        } else if next != cur {
            return Err(NecklaceViolation::Stationary { i });
        }
    }
    if matrix_cell && terms[0] != Subset::interval(1, m) {
        return Err(NecklaceViolation::FirstTerm);
    }
    Ok(())
}

/// A Grassmann necklace `(I_1, …, I_{m+n})` of `m`-subsets of `1..=m+n`,
/// each term stored in the standard order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "NecklaceJson")]
pub struct GrassmannNecklace {
    m: usize,
    n: usize,
    terms: Vec<Subset>,
}

#[derive(Deserialize)]
struct NecklaceJson {
    m: usize,
    n: usize,
    terms: Vec<Subset>,
}

impl TryFrom<NecklaceJson> for GrassmannNecklace {
    type Error = String;

    fn try_from(j: NecklaceJson) -> std::result::Result<Self, String> {
        GrassmannNecklace::new(j.m, j.n, j.terms, false).map_err(|v| v.to_string())
    }
}

impl GrassmannNecklace {
    pub fn new(
        m: usize,
        n: usize,
        terms: Vec<Subset>,
        matrix_cell: bool,
    ) -> std::result::Result<GrassmannNecklace, NecklaceViolation> {
        validate_necklace(m, n, &terms, matrix_cell)?;
        Ok(GrassmannNecklace { m, n, terms })
    }

    pub(crate) fn new_unchecked(m: usize, n: usize, terms: Vec<Subset>) -> GrassmannNecklace {
        debug_assert_eq!(validate_necklace(m, n, &terms, false), Ok(()));
        GrassmannNecklace { m, n, terms }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn terms(&self) -> &[Subset] {
        &self.terms
    }

    /// `I_i` for `i` in `1..=m+n`.
    pub fn term(&self, i: usize) -> Subset {
        self.terms[i - 1]
    }

    pub fn is_matrix_cell(&self) -> bool {
        self.terms[0] == Subset::interval(1, self.m)
    }

    /// `I_i ≤_i I_j` for every pair of terms.
    pub fn is_gale_consistent(&self) -> bool {
        let d = self.m + self.n;
        (1..=d).all(|i| {
            let order = GaleOrder { d, base: i };
            self.terms.iter().all(|&t| order.leq_unchecked(self.term(i), t))
        })
    }

    /// `"123,234,…"`; `None` when `m + n > 9` makes digits ambiguous.
    pub fn compact(&self) -> Option<String> {
        (self.m + self.n <= 9).then(|| {
            self.terms
                .iter()
                .map(|t| t.digits())
                .collect::<Vec<_>>()
                .join(",")
        })
    }

    /// Parses the compact digit-string form, accepted only for `m + n ≤ 9`.
    /// Parentheses around the list are optional.
    pub fn parse_compact(m: usize, n: usize, text: &str) -> Result<GrassmannNecklace> {
        if m + n > 9 {
            return Err(Error::Parse(
                "compact necklace form needs m + n <= 9; use JSON".into(),
            ));
        }
        let t = text.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(t);
        let terms = t
            .split(',')
            .map(|p| Subset::parse(p.trim(), 9))
            .collect::<Result<Vec<_>>>()?;
        GrassmannNecklace::new(m, n, terms, false).map_err(|v| Error::Parse(v.to_string()))
    }
}

impl fmt::Display for GrassmannNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.compact() {
            Some(s) => f.write_str(&s),
            None => {
                let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

/// The necklace read off the chains rooted at the border boxes: box `k`
/// gives `I_{m+n-k+1} = (1..=m \ {x_i}) ∪ {w_n(y_i) + m}` and `I_1 = 1..=m`.
pub fn necklace_from_diagram(diagram: &CauchonDiagram) -> GrassmannNecklace {
    let (m, n) = diagram.shape();
    let d = m + n;
    let mut terms = vec![Subset::EMPTY; d];
    terms[0] = Subset::interval(1, m);
    for (idx, chain) in diagram.border_chains().into_iter().enumerate() {
        let k = idx + 1;
        let rows: Subset = chain.steps().iter().map(|s| s.row).collect();
        let cols: Subset = chain
            .steps()
            .iter()
            .map(|s| reverse_in(n, s.col) + m)
            .collect();
        terms[d - k] = Subset::interval(1, m).difference(rows).union(cols);
    }
    GrassmannNecklace::new_unchecked(m, n, terms)
}

fn require_m_subset(m: usize, d: usize, t: Subset) -> Result<()> {
    if t.len() != m {
        return Err(Error::SizeMismatch {
            left: t.len(),
            right: m,
        });
    }
    if let Some(e) = t.max_element().filter(|&e| e > d) {
        return Err(Error::ElementOutOfRange { element: e, bound: d });
    }
    Ok(())
}

/// Whether `Δ_T` vanishes on the cell: some `i` has `I_i ≰_i T`.
pub fn vanishes(necklace: &GrassmannNecklace, t: PluckerIndex) -> Result<bool> {
    let d = necklace.m + necklace.n;
    require_m_subset(necklace.m, d, t)?;
    Ok(vanishes_unchecked(necklace, t))
}

pub(crate) fn vanishes_unchecked(necklace: &GrassmannNecklace, t: PluckerIndex) -> bool {
    let d = necklace.m + necklace.n;
    (1..=d).any(|i| !GaleOrder { d, base: i }.leq_unchecked(necklace.term(i), t))
}

/// Every non-unit quantum minor lying in the H-prime of `diagram`.
pub fn vanishing_minor_set(diagram: &CauchonDiagram) -> Vec<MinorIndex> {
    let (m, n) = diagram.shape();
    let necklace = necklace_from_diagram(diagram);
    all_minors(m, n)
        .into_iter()
        .filter(|mi| {
            let p = minor_to_plucker(m, n, mi).expect("enumerated minor is in range");
            vanishes_unchecked(&necklace, p)
        })
        .collect()
}

/// `L_i ≤_i K_i` for all `i`, i.e. the H-prime of `l` is contained in that of `k`.
pub fn necklace_leq(l: &GrassmannNecklace, k: &GrassmannNecklace) -> Result<bool> {
    if l.shape() != k.shape() {
        return Err(Error::ShapeMismatch(l.m, l.n, k.m, k.n));
    }
    Ok(necklace_leq_unchecked(l, k))
}

pub(crate) fn necklace_leq_unchecked(l: &GrassmannNecklace, k: &GrassmannNecklace) -> bool {
    let d = l.m + l.n;
    (1..=d).all(|i| GaleOrder { d, base: i }.leq_unchecked(l.term(i), k.term(i)))
}
