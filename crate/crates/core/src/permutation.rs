//! Restricted permutations and the reduced word of `c^m`.
//!
//! Permutations are in one-line notation on `1..=d` and compose right to
//! left: `(σ ∘ τ)(i) = σ(τ(i))`. The grid word places `s_1` in the
//! bottom-left square and increases the index by one for every step up or to
//! the right; reading it left to right, top to bottom gives a reduced word
//! for `c^m`, and deleting the letters in white squares gives the
//! permutation of a Cauchon diagram.
//!
//! Squares passed to [`restricted_subword`], [`w_xy`] and [`chain_set_via_permutations`]
//! are in pipe-dream coordinates.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::diagram::{enumerate, CauchonDiagram, Chain, PipeSquare, Square};
use crate::error::{Error, Result};
use crate::minor::{p1, p2, reverse_in, MinorIndex};
use crate::necklace::GrassmannNecklace;
use crate::subset::{Subset, MAX_ELEMENT};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let d = images.len();
        if d > MAX_ELEMENT {
            return Err(Error::TooLarge(d));
        }
        let mut seen = vec![false; d + 1];
        for &x in &images {
            if x == 0 || x > d || seen[x] {
                return Err(Error::NotAPermutation(d));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(d: usize) -> Permutation {
        Permutation((1..=d).collect())
    }

    /// The elementary transposition `s_i = (i i+1)` in `S_d`.
    pub fn transposition(d: usize, i: usize) -> Permutation {
        assert!(i >= 1 && i < d, "s_{i} is not in S_{d}");
        let mut p = Permutation::identity(d);
        p.0.swap(i - 1, i);
        p
    }

    /// `c = (1 2 … d)` raised to the power `k`.
    pub fn coxeter_power(d: usize, k: usize) -> Permutation {
        Permutation((1..=d).map(|i| (i - 1 + k) % d + 1).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn apply_set(&self, set: Subset) -> Subset {
        set.map(|i| self.apply(i))
    }

    /// `{σ(1), …, σ(k)}`.
    pub fn prefix_image(&self, k: usize) -> Subset {
        self.0[..k].iter().copied().collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation(other.0.iter().map(|&j| self.apply(j)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Right multiplication by `s_i`, in place.
    fn mul_transposition(&mut self, i: usize) {
        self.0.swap(i - 1, i);
    }

    /// Number of inversions, i.e. the Coxeter length.
    pub fn length(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }

    pub fn parse(text: &str) -> Result<Permutation> {
        let t = text.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .or_else(|| t.strip_prefix('[').and_then(|s| s.strip_suffix(']')))
            .unwrap_or(t);
        let images = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Permutation> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Permutation> {
        Permutation::parse(s)
    }
}

/// `-n ≤ σ(i) - i ≤ m` for every `i`.
pub fn is_restricted(sigma: &Permutation, m: usize, n: usize) -> Result<bool> {
    if sigma.degree() != m + n {
        return Err(Error::SizeMismatch {
            left: sigma.degree(),
            right: m + n,
        });
    }
    Ok(sigma
        .images()
        .iter()
        .enumerate()
        .all(|(i, &x)| x + n > i && x <= i + 1 + m))
}

fn require_restricted(v: &Permutation, m: usize, n: usize) -> Result<()> {
    if !is_restricted(v, m, n)? {
        return Err(Error::NotRestricted { m, n });
    }
    Ok(())
}

/// Strong Bruhat order via the tableau criterion: for every `k`, the sorted
/// prefix `σ(1..=k)` is entrywise at most the sorted prefix of `τ`.
pub fn bruhat_leq(sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    if sigma.degree() != tau.degree() {
        return Err(Error::SizeMismatch {
            left: sigma.degree(),
            right: tau.degree(),
        });
    }
    let mut a = Vec::with_capacity(sigma.degree());
    let mut b = Vec::with_capacity(tau.degree());
    for k in 0..sigma.degree() {
        a.push(sigma.0[k]);
        b.push(tau.0[k]);
        a.sort_unstable();
        b.sort_unstable();
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One letter `s_index` of the grid word, at a pipe-dream square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub square: PipeSquare,
    pub index: usize,
}

/// The `mn` letters of the grid word in reading order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridWord {
    m: usize,
    n: usize,
    letters: Vec<Letter>,
}

impl GridWord {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    /// Product of the letters kept by `keep`, composed right to left.
    pub fn product_where(&self, keep: impl Fn(&Letter) -> bool) -> Permutation {
        let mut p = Permutation::identity(self.m + self.n);
        for letter in self.letters.iter().filter(|l| keep(l)) {
            p.mul_transposition(letter.index);
        }
        p
    }

    pub fn product(&self) -> Permutation {
        self.product_where(|_| true)
    }
}

impl fmt::Display for GridWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (row, chunk) in self.letters.chunks(self.n).enumerate() {
            if row > 0 {
                f.write_str(" ")?;
            }
            f.write_str("(")?;
            let parts: Vec<String> = chunk.iter().map(|l| format!("s{}", l.index)).collect();
            f.write_str(&parts.join(" "))?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// The letter at pipe-dream square `(a, b)` is `s_{a+b-m-1}`.
pub fn grid_word(m: usize, n: usize) -> GridWord {
    let letters = (1..=m)
        .flat_map(|r| (1..=n).map(move |c| Square::new(r, c)))
        .map(|sq| {
            let p = sq.to_pipe(m);
            Letter {
                square: p,
                index: p.row + p.col - m - 1,
            }
        })
        .collect();
    GridWord { m, n, letters }
}

/// `w = c^m`, the product of the full grid word.
pub fn w_of(m: usize, n: usize) -> Permutation {
    Permutation::coxeter_power(m + n, m)
}

/// Product of the letters sitting in black squares.
pub fn subword_permutation(diagram: &CauchonDiagram) -> Permutation {
    let (m, n) = diagram.shape();
    grid_word(m, n).product_where(|l| diagram.is_black(l.square.to_standard(m)))
}

/// Reads the permutation off the pipe dream: black squares are crossings,
/// white squares a pair of elbows. The pipe entering the south-east border
/// at label `i` leaves the north-west border at label `v(i)`.
pub fn pipe_dream_permutation(diagram: &CauchonDiagram) -> Permutation {
    let (m, n) = diagram.shape();
    #[derive(Clone, Copy)]
    enum Heading {
        North,
        West,
    }
    let trace = |mut row: usize, mut col: usize, mut heading: Heading| -> usize {
        loop {
            if diagram.is_white(Square::new(row, col)) {
                heading = match heading {
                    Heading::North => Heading::West,
                    Heading::West => Heading::North,
                };
            }
            match heading {
                Heading::North if row == 1 => return m + col,
                Heading::North => row -= 1,
                Heading::West if col == 1 => return m - row + 1,
                Heading::West => col -= 1,
            }
        }
    };
    let mut images = Vec::with_capacity(m + n);
    // Bottom edge, labels 1..=n left to right.
    for c in 1..=n {
        images.push(trace(m, c, Heading::North));
    }
    // Right edge, labels n+1..=n+m bottom to top.
    for j in 1..=m {
        images.push(trace(m - j + 1, n, Heading::West));
    }
    Permutation(images)
}

/// The restricted permutation of a diagram, computed by pipe tracing and by
/// the black-square subword; the two must agree.
pub fn permutation_from_diagram(diagram: &CauchonDiagram) -> Permutation {
    let traced = pipe_dream_permutation(diagram);
    let word = subword_permutation(diagram);
    assert_eq!(
        traced, word,
        "pipe dream and subword disagree on\n{diagram}"
    );
    traced
}

/// Inverse of [`permutation_from_diagram`] for one shape.
pub struct InverseTable {
    m: usize,
    n: usize,
    table: HashMap<Permutation, CauchonDiagram>,
}

/// Largest `mn` for which the inverse table is built.
pub const MAX_INVERSE_CELLS: usize = 25;

impl InverseTable {
    pub fn build(m: usize, n: usize) -> Result<InverseTable> {
        if m * n > MAX_INVERSE_CELLS {
            return Err(Error::ScaleLimit(format!("a {m}x{n} inverse table")));
        }
        let table = enumerate(m, n)?
            .map(|d| (permutation_from_diagram(&d), d))
            .collect();
        Ok(InverseTable { m, n, table })
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&self, v: &Permutation) -> Result<&CauchonDiagram> {
        require_restricted(v, self.m, self.n)?;
        self.table.get(v).ok_or(Error::NotRestricted {
            m: self.m,
            n: self.n,
        })
    }
}

type TableCache = Mutex<HashMap<(usize, usize), Arc<InverseTable>>>;

fn inverse_table(m: usize, n: usize) -> Result<Arc<InverseTable>> {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&(m, n)) {
        return Ok(Arc::clone(t));
    }
    let built = Arc::new(InverseTable::build(m, n)?);
    let mut guard = cache.lock().expect("cache lock");
    Ok(Arc::clone(guard.entry((m, n)).or_insert(built)))
}

/// The unique diagram whose restricted permutation is `v`.
pub fn diagram_from_permutation(v: &Permutation, m: usize, n: usize) -> Result<CauchonDiagram> {
    require_restricted(v, m, n)?;
    inverse_table(m, n)?.get(v).cloned()
}

fn check_pipe_square(m: usize, n: usize, sq: PipeSquare) -> Result<()> {
    if sq.row == 0 || sq.row > m || sq.col <= m || sq.col > m + n {
        return Err(Error::SquareOutOfRange {
            row: sq.row,
            col: sq.col,
            rows: m,
            cols: m + n,
        });
    }
    Ok(())
}

/// `v_{x,y}`: the subword of black letters weakly northwest of `(x, y)`
/// (pipe rows `≥ x`, pipe columns `≤ y`).
pub fn restricted_subword(diagram: &CauchonDiagram, sq: PipeSquare) -> Result<Permutation> {
    let (m, n) = diagram.shape();
    check_pipe_square(m, n, sq)?;
    Ok(grid_word(m, n).product_where(|l| {
        l.square.row >= sq.row && l.square.col <= sq.col && diagram.is_black(l.square.to_standard(m))
    }))
}

/// `w_{x,y}`: as [`restricted_subword`] with every square black.
pub fn w_xy(m: usize, n: usize, sq: PipeSquare) -> Result<Permutation> {
    check_pipe_square(m, n, sq)?;
    Ok(grid_word(m, n).product_where(|l| l.square.row >= sq.row && l.square.col <= sq.col))
}

/// `v_{x,y} w_{x,y}^{-1} (1..=m)`.
pub fn chain_set_via_permutations(diagram: &CauchonDiagram, sq: PipeSquare) -> Result<Subset> {
    let (m, n) = diagram.shape();
    let v = restricted_subword(diagram, sq)?;
    let w = w_xy(m, n, sq)?;
    Ok(v.compose(&w.inverse()).apply_set(Subset::interval(1, m)))
}

/// `(1..=m \ {x_i}) ∪ {y_i}` for a chain, in pipe-dream coordinates.
pub fn chain_set(m: usize, chain: &Chain) -> Subset {
    let pipe: Vec<PipeSquare> = chain.steps().iter().map(|s| s.to_pipe(m)).collect();
    let rows: Subset = pipe.iter().map(|p| p.row).collect();
    let cols: Subset = pipe.iter().map(|p| p.col).collect();
    Subset::interval(1, m).difference(rows).union(cols)
}

fn check_border_index(m: usize, n: usize, k: usize, max: usize) -> Result<()> {
    let _ = (m, n);
    if k == 0 || k > max {
        return Err(Error::BorderBoxOutOfRange { k, max });
    }
    Ok(())
}

/// `1..=m+k \ v(1..=k)` for `k ≤ n`, otherwise
/// `(1..=m+n \ v(1..=k)) ∪ 1..=k-n`.
pub fn border_interval_set(v: &Permutation, k: usize, m: usize, n: usize) -> Result<Subset> {
    require_restricted(v, m, n)?;
    check_border_index(m, n, k, m + n - 1)?;
    let image = v.prefix_image(k);
    Ok(if k <= n {
        Subset::interval(1, m + k).difference(image)
    } else {
        Subset::interval(1, m + n)
            .difference(image)
            .union(Subset::interval(1, k - n))
    })
}

/// `ω = w_m w_{m,n}`: reverses `1..=m` and `m+1..=m+n` separately.
pub fn omega(m: usize, n: usize) -> Permutation {
    Permutation(
        (1..=m + n)
            .map(|i| {
                if i <= m {
                    reverse_in(m, i)
                } else {
                    m + reverse_in(n, i - m)
                }
            })
            .collect(),
    )
}

/// The necklace expressed through `v` alone: with `J_k = ω v(1..=k)`,
/// `I_{m+n-k+1} = (1..=m ∪ m+n-k+1..=m+n) \ J_k` for `k ≤ n` and
/// `(1..=m+n \ J_k) ∪ m+n-k+1..=m` for `k > n`.
pub fn necklace_from_permutation(v: &Permutation, m: usize, n: usize) -> Result<GrassmannNecklace> {
    require_restricted(v, m, n)?;
    let d = m + n;
    let om = omega(m, n);
    let mut terms = vec![Subset::EMPTY; d];
    for k in 1..=d {
        let image = om.apply_set(v.prefix_image(k));
        let start = d - k + 1;
        terms[d - k] = if k <= n {
            Subset::interval(1, m)
                .union(Subset::interval(start, d))
                .difference(image)
        } else {
            Subset::interval(1, d)
                .difference(image)
                .union(Subset::interval(start, m))
        };
    }
    GrassmannNecklace::new(m, n, terms, true)
        .map_err(|e| Error::Parse(format!("permutation formula produced an invalid necklace: {e}")))
}

/// The Ore-set minor attached to border box `k` by `v`, with
/// `I_k = v(1..=k)`: `[w_m(p1(I_k)) | m+1..=m+k \ p2(I_k) - m]` for `k ≤ n`
/// and `[w_m(p1(I_k) \ 1..=k-n) | m+1..=m+n \ p2(I_k) - m]` for `k > n`.
pub fn fy_minor(v: &Permutation, k: usize, m: usize, n: usize) -> Result<MinorIndex> {
    require_restricted(v, m, n)?;
    check_border_index(m, n, k, m + n - 1)?;
    let image = v.prefix_image(k);
    let (row_part, col_range) = if k <= n {
        (p1(image, m), Subset::interval(m + 1, m + k))
    } else {
        (
            p1(image, m).difference(Subset::interval(1, k - n)),
            Subset::interval(m + 1, m + n),
        )
    };
    let rows = row_part.map(|i| reverse_in(m, i));
    let cols = col_range.difference(p2(image, m, n)).shift_down(m);
    MinorIndex::new(m, n, rows, cols)
}
