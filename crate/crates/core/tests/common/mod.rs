//! Test-only oracles, written independently of the library algorithms.

#![allow(dead_code)]

use cauchon::{CauchonDiagram, Color, Grid, MinorIndex, Square, Subset};

/// Cauchon condition straight from the definition.
pub fn is_cauchon(cells: &[bool], m: usize, n: usize) -> bool {
    let black = |r: usize, c: usize| cells[r * n + c];
    for r in 0..m {
        for c in 0..n {
            if black(r, c) {
                let left = (0..c).any(|b| !black(r, b));
                let above = (0..r).any(|a| !black(a, c));
                if left && above {
                    return false;
                }
            }
        }
    }
    true
}

/// Every Cauchon diagram of a shape found by filtering all `2^(mn)` grids,
/// returned as row-major colour strings.
pub fn brute_force_diagrams(m: usize, n: usize) -> Vec<String> {
    let size = m * n;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << size) {
        // Bit `size - 1 - p` is cell `p`, so ascending masks run in
        // lexicographic order with white before black.
        let cells: Vec<bool> = (0..size).map(|p| mask >> (size - 1 - p) & 1 == 1).collect();
        if is_cauchon(&cells, m, n) {
            out.push(cells.iter().map(|&b| if b { '0' } else { '+' }).collect());
        }
    }
    out
}

pub fn flat(d: &CauchonDiagram) -> String {
    d.to_text().replace('\n', "")
}

/// Whether the minor lies in the H-prime of `d`, decided by the absence of
/// a vertex-disjoint path system in the graph whose vertices are the white
/// squares. Row `i` enters at its right-most white square, paths move west
/// along rows or south along columns between consecutive white squares, and
/// column `j` is left from its bottom-most white square.
pub fn path_oracle_vanishes(d: &CauchonDiagram, minor: &MinorIndex) -> bool {
    let (m, n) = d.shape();
    let white = |r: usize, c: usize| d.is_white(Square::new(r, c));
    let id = |r: usize, c: usize| (r - 1) * n + (c - 1);
    let cells = m * n;
    // Node 2v is the entry of square v, 2v+1 its exit.
    let source = 2 * cells;
    let sink = source + 1;
    let nodes = sink + 1;
    let mut cap = vec![vec![0i32; nodes]; nodes];
    for r in 1..=m {
        for c in 1..=n {
            if !white(r, c) {
                continue;
            }
            let v = id(r, c);
            cap[2 * v][2 * v + 1] = 1;
            if let Some(b) = (1..c).rev().find(|&b| white(r, b)) {
                cap[2 * v + 1][2 * id(r, b)] = 1;
            }
            if let Some(a) = (r + 1..=m).find(|&a| white(a, c)) {
                cap[2 * v + 1][2 * id(a, c)] = 1;
            }
        }
    }
    for s in minor.rows.iter() {
        match (1..=n).rev().find(|&c| white(s, c)) {
            Some(c) => cap[source][2 * id(s, c)] = 1,
            None => return true,
        }
    }
    for t in minor.cols.iter() {
        match (1..=m).rev().find(|&r| white(r, t)) {
            Some(r) => cap[2 * id(r, t) + 1][sink] = 1,
            None => return true,
        }
    }
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; nodes];
        prev[source] = source;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for v in 0..nodes {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    stack.push(v);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut v = sink;
        while v != source {
            let u = prev[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
    flow < minor.size()
}

/// Plücker index of a minor, written out directly.
pub fn plucker_of(m: usize, n: usize, minor: &MinorIndex) -> Subset {
    let mut out: Vec<usize> = (1..=m).filter(|i| !minor.rows.contains(*i)).collect();
    out.extend(minor.cols.iter().map(|t| m + n - t + 1));
    Subset::from_elements(m + n, &out).unwrap()
}

pub fn minor_of(m: usize, n: usize, set: Subset) -> MinorIndex {
    let rows: Vec<usize> = (1..=m).filter(|i| !set.contains(*i)).collect();
    let cols: Vec<usize> = (m + 1..=m + n).rev().filter(|&j| set.contains(j)).map(|j| m + n - j + 1).collect();
    MinorIndex::from_lists(m, n, &rows, &cols).unwrap()
}

/// All `k`-subsets of `1..=d`.
pub fn subsets(d: usize, k: usize) -> Vec<Subset> {
    (0u64..1 << d)
        .filter(|b| b.count_ones() as usize == k)
        .map(Subset::from_bits)
        .collect()
}

/// The Gale order `≤_i` spelt out: rotate so `i` is smallest, sort, and
/// compare entrywise.
pub fn gale_leq_oracle(d: usize, i: usize, s: Subset, t: Subset) -> bool {
    let key = |e: usize| (e + d - i) % d;
    let mut a: Vec<usize> = s.iter().map(key).collect();
    let mut b: Vec<usize> = t.iter().map(key).collect();
    a.sort();
    b.sort();
    a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| x <= y)
}

/// Necklace recovered from the path oracle: `I_i` is the `≤_i`-minimum of
/// the non-vanishing Plücker indices.
pub fn necklace_oracle(d: &CauchonDiagram) -> Vec<Subset> {
    let (m, n) = d.shape();
    let total = m + n;
    let alive: Vec<Subset> = subsets(total, m)
        .into_iter()
        .filter(|&t| !path_oracle_vanishes(d, &minor_of(m, n, t)))
        .collect();
    (1..=total)
        .map(|i| {
            let mins: Vec<Subset> = alive
                .iter()
                .copied()
                .filter(|&s| alive.iter().all(|&t| gale_leq_oracle(total, i, s, t)))
                .collect();
            assert_eq!(mins.len(), 1, "no Gale minimum at {i} for\n{d}");
            mins[0]
        })
        .collect()
}

/// Vanishing Plücker indices by the path oracle, as a bitmask over the
/// `m`-subsets in the order returned by [`subsets`].
pub fn vanishing_mask_oracle(d: &CauchonDiagram) -> u128 {
    let (m, n) = d.shape();
    subsets(m + n, m)
        .iter()
        .enumerate()
        .filter(|(_, &t)| path_oracle_vanishes(d, &minor_of(m, n, t)))
        .fold(0, |acc, (i, _)| acc | 1u128 << i)
}

/// A pseudo-random Cauchon diagram: cells are coloured in reading order,
/// black only where allowed, using the bits of `seed`.
pub fn random_diagram(m: usize, n: usize, seed: u64) -> CauchonDiagram {
    let mut seed = seed | 1;
    let mut rows = vec![vec![Color::White; n]; m];
    for r in 0..m {
        for c in 0..n {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            let left = (0..c).any(|b| rows[r][b] == Color::White);
            let above = (0..r).any(|a| rows[a][c] == Color::White);
            if !(left && above) && !seed.is_multiple_of(3) {
                rows[r][c] = Color::Black;
            }
        }
    }
    Grid::new(m, n, rows).unwrap().validate().unwrap()
}
