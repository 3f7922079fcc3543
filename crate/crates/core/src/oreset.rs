//! Separating Ore set generators and the containment order on H-primes.
//!
//! Every border box `k` of a diagram `K` carries the quantum minor read off
//! its chain. The non-unit ones form a generating set `E_K` which avoids `K`
//! and meets every H-prime not contained in `K`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{enumerate, CauchonDiagram, Chain, Square};
use crate::error::{Error, Result};
use crate::minor::{minor_to_plucker, plucker_to_minor, MinorIndex, PluckerIndex};
use crate::necklace::{
    necklace_from_diagram, necklace_leq_unchecked, vanishes_unchecked, GrassmannNecklace,
};
use crate::permutation::{fy_minor, permutation_from_diagram};
use crate::subset::{k_subsets, Subset};

/// Largest `m + n` accepted by the exhaustive routines in this module.
pub const MAX_EXHAUSTIVE_D: usize = 8;

/// Largest `m + n` for which the vanishing-set oracle is also evaluated.
pub const MAX_ORACLE_D: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OreEntry {
    pub k: usize,
    pub chain: Chain,
    pub minor: MinorIndex,
    #[serde(skip)]
    pub plucker: PluckerIndex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OreSetGenerators {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "generators")]
    pub entries: Vec<OreEntry>,
}

impl OreSetGenerators {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn minors(&self) -> Vec<MinorIndex> {
        self.entries.iter().map(|e| e.minor).collect()
    }

    pub fn contains_minor(&self, minor: &MinorIndex) -> bool {
        self.entries.iter().any(|e| e.minor == *minor)
    }

    fn require_square(&self) -> Result<()> {
        if self.m != self.n {
            return Err(Error::NotSquare { m: self.m, n: self.n });
        }
        Ok(())
    }
}

/// The minor `[x_1 … x_t | y_1 … y_t]` of a chain in standard coordinates.
pub fn chain_minor(m: usize, n: usize, chain: &Chain) -> MinorIndex {
    let rows: Subset = chain.steps().iter().map(|s| s.row).collect();
    let cols: Subset = chain.steps().iter().map(|s| s.col).collect();
    MinorIndex::new(m, n, rows, cols).expect("chain squares are strictly decreasing in both coordinates")
}

/// Generators in ascending border-box order, units dropped.
///
/// Both the chain construction and the permutation formula are evaluated;
/// a disagreement is a bug and panics.
pub fn ore_generators(diagram: &CauchonDiagram) -> OreSetGenerators {
    let (m, n) = diagram.shape();
    let d = m + n;
    let necklace = necklace_from_diagram(diagram);
    let v = permutation_from_diagram(diagram);
    let mut entries = Vec::new();
    for (idx, chain) in diagram.border_chains().into_iter().enumerate() {
        let k = idx + 1;
        let minor = chain_minor(m, n, &chain);
        let plucker = necklace.term(d - k + 1);
        assert_eq!(
            minor_to_plucker(m, n, &minor).expect("minor in range"),
            plucker,
            "chain at box {k} disagrees with the necklace"
        );
        assert_eq!(
            plucker_to_minor(m, n, plucker).expect("necklace term is an m-subset"),
            minor
        );
        assert_eq!(
            fy_minor(&v, k, m, n).expect("v is restricted"),
            minor,
            "permutation formula disagrees at box {k} of\n{diagram}"
        );
        if chain.is_empty() {
            continue;
        }
        entries.push(OreEntry {
            k,
            chain,
            minor,
            plucker,
        });
    }
    OreSetGenerators { m, n, entries }
}

/// Bitmask over the `m`-subsets of `1..=m+n` in lexicographic order.
pub type VanishingMask = u128;

/// Every diagram of one shape together with its necklace and the mask of
/// Plücker coordinates vanishing on it.
pub struct ShapeTable {
    m: usize,
    n: usize,
    diagrams: Vec<CauchonDiagram>,
    necklaces: Vec<GrassmannNecklace>,
    masks: Vec<VanishingMask>,
    rank: HashMap<Subset, usize>,
}

impl ShapeTable {
    pub fn build(m: usize, n: usize) -> Result<ShapeTable> {
        if m + n > MAX_EXHAUSTIVE_D {
            return Err(Error::ScaleLimit(format!("an exhaustive sweep over {m}x{n}")));
        }
        let subsets = k_subsets(m + n, m);
        let rank: HashMap<Subset, usize> = subsets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let diagrams: Vec<CauchonDiagram> = enumerate(m, n)?.collect();
        let necklaces: Vec<GrassmannNecklace> =
            diagrams.par_iter().map(necklace_from_diagram).collect();
        let masks = necklaces
            .par_iter()
            .map(|nk| {
                subsets
                    .iter()
                    .enumerate()
                    .filter(|(_, &t)| vanishes_unchecked(nk, t))
                    .fold(0, |acc, (i, _)| acc | 1u128 << i)
            })
            .collect();
        Ok(ShapeTable {
            m,
            n,
            diagrams,
            necklaces,
            masks,
            rank,
        })
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn diagrams(&self) -> &[CauchonDiagram] {
        &self.diagrams
    }

    pub fn necklaces(&self) -> &[GrassmannNecklace] {
        &self.necklaces
    }

    pub fn masks(&self) -> &[VanishingMask] {
        &self.masks
    }

    pub fn index_of(&self, diagram: &CauchonDiagram) -> Option<usize> {
        self.diagrams.iter().position(|d| d == diagram)
    }

    pub fn bit(&self, t: PluckerIndex) -> VanishingMask {
        1u128 << self.rank[&t]
    }

    pub fn mask_of(&self, diagram: &CauchonDiagram) -> VanishingMask {
        match self.index_of(diagram) {
            Some(i) => self.masks[i],
            None => {
                let nk = necklace_from_diagram(diagram);
                self.rank
                    .iter()
                    .filter(|(&t, _)| vanishes_unchecked(&nk, t))
                    .fold(0, |acc, (_, &i)| acc | 1u128 << i)
            }
        }
    }

    /// The separating report for `e`, built for `k`, against every diagram
    /// of the table. Diagrams are visited in enumeration order.
    pub fn separation(&self, e: &OreSetGenerators, k: &CauchonDiagram) -> SeparationReport {
        let k_mask = self.mask_of(k);
        let bits: Vec<(usize, VanishingMask)> =
            e.entries.iter().map(|g| (g.k, self.bit(g.plucker))).collect();
        let vanishing_on_k: Vec<usize> = bits
            .iter()
            .filter(|(_, b)| k_mask & b != 0)
            .map(|&(k, _)| k)
            .collect();
        let witnesses: Vec<Witness> = self
            .diagrams
            .iter()
            .zip(&self.masks)
            .filter(|(_, &l_mask)| l_mask & !k_mask != 0)
            .map(|(l, &l_mask)| Witness {
                l: l.clone(),
                generator_k: bits.iter().find(|(_, b)| l_mask & b != 0).map(|&(k, _)| k),
            })
            .collect();
        let separating = vanishing_on_k.is_empty() && witnesses.iter().all(|w| w.generator_k.is_some());
        SeparationReport {
            k: k.clone(),
            generators: e.entries.clone(),
            separating,
            vanishing_on_k,
            witnesses,
        }
    }
}

/// A diagram `L` not contained in `K` and the first generator meeting it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(rename = "L")]
    pub l: CauchonDiagram,
    pub generator_k: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    #[serde(rename = "K")]
    pub k: CauchonDiagram,
    pub generators: Vec<OreEntry>,
    pub separating: bool,
    /// Border indices of generators lying in `K`; empty when all is well.
    pub vanishing_on_k: Vec<usize>,
    pub witnesses: Vec<Witness>,
}

impl SeparationReport {
    pub fn uncaught(&self) -> impl Iterator<Item = &CauchonDiagram> {
        self.witnesses
            .iter()
            .filter(|w| w.generator_k.is_none())
            .map(|w| &w.l)
    }

    pub fn witness_for(&self, l: &CauchonDiagram) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.l == *l)
    }
}

/// Checks that `e` avoids `k` and meets every H-prime not contained in `k`.
pub fn is_separating(e: &OreSetGenerators, k: &CauchonDiagram) -> Result<SeparationReport> {
    let (m, n) = k.shape();
    if (e.m, e.n) != (m, n) {
        return Err(Error::ShapeMismatch(e.m, e.n, m, n));
    }
    Ok(ShapeTable::build(m, n)?.separation(e, k))
}

/// Containment of H-primes on all diagrams of one shape: `leq(l, k)` holds
/// when the prime of diagram `l` lies inside that of diagram `k`.
pub struct HPrimePoset {
    m: usize,
    n: usize,
    diagrams: Vec<CauchonDiagram>,
    words: usize,
    rows: Vec<u64>,
}

impl HPrimePoset {
    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn diagrams(&self) -> &[CauchonDiagram] {
        &self.diagrams
    }

    pub fn leq(&self, l: usize, k: usize) -> bool {
        self.rows[l * self.words + k / 64] >> (k % 64) & 1 == 1
    }

    /// Indices weakly above `l`.
    pub fn up_set(&self, l: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.leq(l, k)).collect()
    }

    /// Number of related pairs, including the diagonal.
    pub fn relation_size(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| (0..self.len()).all(|l| l == k || !self.leq(l, k)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&l| (0..self.len()).all(|k| k == l || !self.leq(l, k)))
            .collect()
    }

    /// Pairs `l < k` with nothing strictly between them.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let size = self.len();
        (0..size)
            .into_par_iter()
            .flat_map_iter(|l| {
                (0..size)
                    .filter(move |&k| k != l && self.leq(l, k))
                    .filter(move |&k| {
                        !(0..size).any(|j| j != l && j != k && self.leq(l, j) && self.leq(j, k))
                    })
                    .map(move |k| (l, k))
                    .collect::<Vec<_>>()
            })
            .collect()
    }
}

/// Builds the containment relation through the necklace order. When
/// `m + n` is at most [`MAX_ORACLE_D`] every entry is also compared with
/// vanishing-set containment and a disagreement panics.
pub fn hprime_poset(m: usize, n: usize) -> Result<HPrimePoset> {
    let table = ShapeTable::build(m, n)?;
    let size = table.len();
    let words = size.div_ceil(64);
    let oracle = m + n <= MAX_ORACLE_D;
    let rows: Vec<u64> = (0..size)
        .into_par_iter()
        .flat_map_iter(|l| {
            let mut row = vec![0u64; words];
            for k in 0..size {
                let fast = necklace_leq_unchecked(&table.necklaces[l], &table.necklaces[k]);
                if oracle {
                    let slow = table.masks[l] & !table.masks[k] == 0;
                    assert_eq!(
                        fast, slow,
                        "necklace order and vanishing sets disagree on\n{}\nvs\n{}",
                        table.diagrams[l], table.diagrams[k]
                    );
                }
                if fast {
                    row[k / 64] |= 1u64 << (k % 64);
                }
            }
            row
        })
        .collect();
    Ok(HPrimePoset {
        m,
        n,
        diagrams: table.diagrams,
        words,
        rows,
    })
}

/// The generators of `K` viewed in `O_q(GL_n)`, with the flag telling
/// whether `K` survives there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlVariant {
    pub generators: OreSetGenerators,
    pub survives: bool,
}

pub fn main_diagonal_white(diagram: &CauchonDiagram) -> bool {
    (1..=diagram.rows()).all(|i| diagram.is_white(Square::new(i, i)))
}

pub fn gl_variant(diagram: &CauchonDiagram) -> Result<GlVariant> {
    let (m, n) = diagram.shape();
    if m != n {
        return Err(Error::NotSquare { m, n });
    }
    let generators = ore_generators(diagram);
    let survives = main_diagonal_white(diagram);
    if survives {
        assert!(
            generators.contains_minor(&MinorIndex::determinant(n)),
            "white diagonal without the quantum determinant among the generators of\n{diagram}"
        );
    }
    Ok(GlVariant {
        generators,
        survives,
    })
}

/// Drops generators whose chain starts on the main diagonal, keeping the
/// quantum determinant itself.
pub fn prune_main_diagonal(e: &OreSetGenerators) -> Result<OreSetGenerators> {
    e.require_square()?;
    let det = MinorIndex::determinant(e.n);
    let entries = e
        .entries
        .iter()
        .filter(|g| {
            g.minor == det || g.chain.first().is_none_or(|s| s.row != s.col)
        })
        .cloned()
        .collect();
    Ok(OreSetGenerators {
        m: e.m,
        n: e.n,
        entries,
    })
}

/// Removes the quantum determinant, which becomes a unit in `O_q(SL_n)`.
pub fn sl_variant(e: &OreSetGenerators) -> Result<OreSetGenerators> {
    e.require_square()?;
    let det = MinorIndex::determinant(e.n);
    if !e.contains_minor(&det) {
        return Err(Error::MissingDeterminant);
    }
    Ok(OreSetGenerators {
        m: e.m,
        n: e.n,
        entries: e.entries.iter().filter(|g| g.minor != det).cloned().collect(),
    })
}
