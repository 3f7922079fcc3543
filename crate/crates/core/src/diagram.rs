//! Cauchon diagrams: validation, enumeration, border boxes and chains.
//!
//! Squares use the standard convention: rows `1..=m` from top to bottom and
//! columns `1..=n` from left to right. The pipe-dream numbering (rows
//! `1..=m` from bottom to top, columns `m+1..=m+n` from left to right) is
//! only reachable through [`Square::to_pipe`] and [`PipeSquare::to_standard`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::subset::MAX_ELEMENT;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn is_white(self) -> bool {
        self == Color::White
    }

    pub fn is_black(self) -> bool {
        self == Color::Black
    }

    fn symbol(self) -> char {
        match self {
            Color::White => '+',
            Color::Black => '0',
        }
    }
}

/// A square in standard coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Square {
    pub row: usize,
    pub col: usize,
}

impl Square {
    pub const fn new(row: usize, col: usize) -> Square {
        Square { row, col }
    }

    pub fn to_pipe(self, m: usize) -> PipeSquare {
        PipeSquare {
            row: m - self.row + 1,
            col: self.col + m,
        }
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A square in pipe-dream coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PipeSquare {
    pub row: usize,
    pub col: usize,
}

impl PipeSquare {
    pub const fn new(row: usize, col: usize) -> PipeSquare {
        PipeSquare { row, col }
    }

    pub fn to_standard(self, m: usize) -> Square {
        Square {
            row: m - self.row + 1,
            col: self.col - m,
        }
    }
}

impl fmt::Display for PipeSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A black square with a white square to its left and a white square above.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub square: Square,
    pub white_left: Square,
    pub white_above: Square,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "black {} has white {} to its left and white {} above",
            self.square, self.white_left, self.white_above
        )
    }
}

/// An `m x n` black/white colouring with no Cauchon requirement.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Grid {
    m: usize,
    n: usize,
    cells: Vec<Color>,
}

impl Grid {
    pub fn new(m: usize, n: usize, rows: Vec<Vec<Color>>) -> Result<Grid> {
        check_shape(m, n)?;
        let found_cols = rows.first().map_or(0, Vec::len);
        if rows.len() != m || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                rows: m,
                cols: n,
                found_rows: rows.len(),
                found_cols,
            });
        }
        Ok(Grid {
            m,
            n,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    /// Grid of a single colour.
    pub fn filled(m: usize, n: usize, color: Color) -> Result<Grid> {
        check_shape(m, n)?;
        Ok(Grid {
            m,
            n,
            cells: vec![color; m * n],
        })
    }

    /// Row-major cells; `cells.len()` must be `m * n`.
    pub fn from_cells(m: usize, n: usize, cells: Vec<Color>) -> Result<Grid> {
        check_shape(m, n)?;
        if cells.len() != m * n {
            return Err(Error::DimensionMismatch {
                rows: m,
                cols: n,
                found_rows: cells.len() / n.max(1),
                found_cols: n,
            });
        }
        Ok(Grid { m, n, cells })
    }

    /// Grid with the listed squares black and everything else white.
    pub fn with_black(m: usize, n: usize, black: &[(usize, usize)]) -> Result<Grid> {
        let mut g = Grid::filled(m, n, Color::White)?;
        for &(r, c) in black {
            g.check_square(Square::new(r, c))?;
            g.cells[(r - 1) * n + (c - 1)] = Color::Black;
        }
        Ok(g)
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Color] {
        &self.cells
    }

    pub fn color(&self, sq: Square) -> Color {
        self.cells[(sq.row - 1) * self.n + (sq.col - 1)]
    }

    pub fn set(&mut self, sq: Square, color: Color) {
        self.cells[(sq.row - 1) * self.n + (sq.col - 1)] = color;
    }

    fn check_square(&self, sq: Square) -> Result<()> {
        if sq.row == 0 || sq.row > self.m || sq.col == 0 || sq.col > self.n {
            return Err(Error::SquareOutOfRange {
                row: sq.row,
                col: sq.col,
                rows: self.m,
                cols: self.n,
            });
        }
        Ok(())
    }

    /// Every black square that has white both to its left and above,
    /// witnessed by the nearest such white squares.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for r in 1..=self.m {
            for c in 1..=self.n {
                let sq = Square::new(r, c);
                if self.color(sq).is_white() {
                    continue;
                }
                let left = (1..c).rev().find(|&b| self.color(Square::new(r, b)).is_white());
                let above = (1..r).rev().find(|&a| self.color(Square::new(a, c)).is_white());
                if let (Some(b), Some(a)) = (left, above) {
                    out.push(Violation {
                        square: sq,
                        white_left: Square::new(r, b),
                        white_above: Square::new(a, c),
                    });
                }
            }
        }
        out
    }

    pub fn validate(self) -> Result<CauchonDiagram> {
        let v = self.violations();
        if v.is_empty() {
            Ok(CauchonDiagram(self))
        } else {
            Err(Error::NotCauchon(v))
        }
    }

    /// Rows top to bottom, `'+'` white and `'0'` black, joined by `'\n'`.
    pub fn to_text(&self) -> String {
        self.row_strings().join("\n")
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.cells
            .chunks(self.n)
            .map(|row| row.iter().map(|c| c.symbol()).collect())
            .collect()
    }

    /// Parses the `+`/`0` text form. Lines may be separated by real
    /// newlines, by a literal `\n` escape, or by `/`.
    pub fn parse(text: &str) -> Result<Grid> {
        let normalized = text.replace("\\n", "\n").replace('/', "\n");
        let lines: Vec<&str> = normalized
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        Grid::from_row_strings(&lines)
    }

    pub fn from_row_strings<S: AsRef<str>>(lines: &[S]) -> Result<Grid> {
        if lines.is_empty() {
            return Err(Error::EmptyShape);
        }
        let n = lines[0].as_ref().chars().count();
        let mut rows = Vec::with_capacity(lines.len());
        for (i, line) in lines.iter().enumerate() {
            let row: Vec<Color> = line
                .as_ref()
                .chars()
                .map(|ch| match ch {
                    '+' => Ok(Color::White),
                    '0' => Ok(Color::Black),
                    _ => Err(Error::BadCharacter { row: i + 1, ch }),
                })
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::RaggedRows {
                    row: i + 1,
                    expected: n,
                    found: row.len(),
                });
            }
            rows.push(row);
        }
        Grid::new(lines.len(), n, rows)
    }
}

fn check_shape(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyShape);
    }
    if m + n > MAX_ELEMENT {
        return Err(Error::TooLarge(m + n));
    }
    Ok(())
}

/// A grid known to satisfy the Cauchon condition.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CauchonDiagram(Grid);

impl CauchonDiagram {
    pub fn all_white(m: usize, n: usize) -> Result<CauchonDiagram> {
        Ok(CauchonDiagram(Grid::filled(m, n, Color::White)?))
    }

    pub fn all_black(m: usize, n: usize) -> Result<CauchonDiagram> {
        Ok(CauchonDiagram(Grid::filled(m, n, Color::Black)?))
    }

    /// Parses and validates the text form.
    pub fn parse(text: &str) -> Result<CauchonDiagram> {
        Grid::parse(text)?.validate()
    }

    pub fn with_black(m: usize, n: usize, black: &[(usize, usize)]) -> Result<CauchonDiagram> {
        Grid::with_black(m, n, black)?.validate()
    }

    pub fn grid(&self) -> &Grid {
        &self.0
    }

    pub fn into_grid(self) -> Grid {
        self.0
    }

    pub fn rows(&self) -> usize {
        self.0.m
    }

    pub fn cols(&self) -> usize {
        self.0.n
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.0.m, self.0.n)
    }

    pub fn color(&self, sq: Square) -> Color {
        self.0.color(sq)
    }

    pub fn is_white(&self, sq: Square) -> bool {
        self.0.color(sq).is_white()
    }

    pub fn is_black(&self, sq: Square) -> bool {
        self.0.color(sq).is_black()
    }

    pub fn to_text(&self) -> String {
        self.0.to_text()
    }

    pub fn squares(&self) -> impl Iterator<Item = Square> {
        let (m, n) = self.shape();
        (1..=m).flat_map(move |r| (1..=n).map(move |c| Square::new(r, c)))
    }

    pub fn black_count(&self) -> usize {
        self.0.cells.iter().filter(|c| c.is_black()).count()
    }

    /// Keeps the top `rows` rows and the left `cols` columns.
    pub fn truncate(&self, rows: usize, cols: usize) -> Result<CauchonDiagram> {
        let (m, n) = self.shape();
        if rows == 0 || cols == 0 || rows > m || cols > n {
            return Err(Error::SquareOutOfRange {
                row: rows,
                col: cols,
                rows: m,
                cols: n,
            });
        }
        let cells = (1..=rows)
            .flat_map(|r| (1..=cols).map(move |c| Square::new(r, c)))
            .map(|sq| self.color(sq))
            .collect();
        // Removing bottom rows or right columns cannot create a violation.
        Ok(CauchonDiagram(Grid::from_cells(rows, cols, cells)?))
    }

    fn check_square(&self, sq: Square) -> Result<()> {
        self.0.check_square(sq)
    }

    /// The white square nearest to `sq` in the northwest region: strictly
    /// northwest when `sq` is white, weakly northwest when it is black.
    pub fn nearest_white(&self, sq: Square) -> Result<Option<Square>> {
        self.check_square(sq)?;
        Ok(if self.is_white(sq) {
            self.nearest_white_in(sq.row - 1, sq.col - 1)
        } else {
            self.nearest_white_in(sq.row, sq.col)
        })
    }

    /// Nearest white square among rows `1..=max_row` and columns
    /// `1..=max_col`. On a Cauchon diagram the bottom-most row containing a
    /// white square and the right-most such column meet in a white square.
    fn nearest_white_in(&self, max_row: usize, max_col: usize) -> Option<Square> {
        let found = (1..=max_row).rev().find_map(|a| {
            (1..=max_col)
                .rev()
                .find(|&b| self.is_white(Square::new(a, b)))
                .map(|b| Square::new(a, b))
        });
        if let Some(hit) = found {
            debug_assert!(
                (1..=max_row).all(|a| {
                    (hit.col + 1..=max_col).all(|b| self.is_black(Square::new(a, b)))
                }),
                "no simultaneous minimiser: diagram is not Cauchon"
            );
        }
        found
    }

    pub fn chain_rooted_at(&self, root: Square) -> Result<Chain> {
        self.check_square(root)?;
        let mut steps = Vec::new();
        let mut current = if self.is_white(root) {
            Some(root)
        } else {
            self.nearest_white_in(root.row, root.col)
        };
        while let Some(sq) = current {
            steps.push(sq);
            current = self.nearest_white_in(sq.row - 1, sq.col - 1);
        }
        Ok(Chain(steps))
    }

    /// The square holding border box `k`.
    pub fn border_box(&self, k: usize) -> Result<Square> {
        border_box_square(self.rows(), self.cols(), k)
    }

    /// Chains rooted at border boxes `1..=m+n-1`, in box order.
    pub fn border_chains(&self) -> Vec<Chain> {
        let (m, n) = self.shape();
        (1..m + n)
            .map(|k| {
                let sq = border_box_square(m, n, k).expect("k in range");
                self.chain_rooted_at(sq).expect("border square in range")
            })
            .collect()
    }
}

impl fmt::Display for CauchonDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for CauchonDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<CauchonDiagram> {
        CauchonDiagram::parse(s)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    m: usize,
    n: usize,
    rows: Vec<String>,
}

impl Serialize for CauchonDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            m: self.rows(),
            n: self.cols(),
            rows: self.0.row_strings(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CauchonDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = DiagramJson::deserialize(deserializer)?;
        let grid = Grid::from_row_strings(&j.rows).map_err(serde::de::Error::custom)?;
        if grid.rows() != j.m || grid.cols() != j.n {
            return Err(serde::de::Error::custom(Error::DimensionMismatch {
                rows: j.m,
                cols: j.n,
                found_rows: grid.rows(),
                found_cols: grid.cols(),
            }));
        }
        grid.validate().map_err(serde::de::Error::custom)
    }
}

/// Chain of white squares, south-east-most first; strictly decreasing in
/// both coordinates. Empty for a black root with nothing white weakly
/// northwest of it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Chain(Vec<Square>);

impl Chain {
    pub fn steps(&self) -> &[Square] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Square> {
        self.0.first().copied()
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(", "))
    }
}

impl Serialize for Chain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|s| [s.row, s.col]))
    }
}

/// Border box `k` of an `m x n` diagram: boxes `1..=n` run left to right
/// along the bottom row, boxes `n..=m+n-1` run bottom to top up the
/// rightmost column.
pub fn border_box_square(m: usize, n: usize, k: usize) -> Result<Square> {
    if k == 0 || k >= m + n {
        return Err(Error::BorderBoxOutOfRange {
            k,
            max: m + n - 1,
        });
    }
    Ok(if k <= n {
        Square::new(m, k)
    } else {
        Square::new(m + n - k, n)
    })
}

/// Streams every `m x n` Cauchon diagram in lexicographic order of the
/// row-major colour string, White before Black.
pub fn enumerate(m: usize, n: usize) -> Result<Diagrams> {
    check_shape(m, n)?;
    Ok(Diagrams {
        m,
        n,
        current: None,
        done: false,
    })
}

pub struct Diagrams {
    m: usize,
    n: usize,
    current: Option<Vec<Color>>,
    done: bool,
}

impl Diagrams {
    // Black at `p` is allowed iff it does not see white both left and above
    // among the earlier cells.
    fn black_allowed(&self, cells: &[Color], p: usize) -> bool {
        let (r, c) = (p / self.n, p % self.n);
        let white_left = (0..c).any(|b| cells[r * self.n + b].is_white());
        let white_above = (0..r).any(|a| cells[a * self.n + c].is_white());
        !(white_left && white_above)
    }
}

impl Iterator for Diagrams {
    type Item = CauchonDiagram;

    fn next(&mut self) -> Option<CauchonDiagram> {
        if self.done {
            return None;
        }
        let size = self.m * self.n;
        let cells = match self.current.take() {
            None => vec![Color::White; size],
            Some(mut cells) => {
                let p = (0..size)
                    .rev()
                    .find(|&p| cells[p].is_white() && self.black_allowed(&cells, p));
                match p {
                    None => {
                        self.done = true;
                        return None;
                    }
                    Some(p) => {
                        cells[p] = Color::Black;
                        cells[p + 1..].fill(Color::White);
                        cells
                    }
                }
            }
        };
        self.current = Some(cells.clone());
        Some(CauchonDiagram(Grid {
            m: self.m,
            n: self.n,
            cells,
        }))
    }
}
