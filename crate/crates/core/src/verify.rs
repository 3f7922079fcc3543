//! Exhaustive sweeps comparing independent constructions over every diagram
//! of every shape up to a bound on `m + n`.

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{enumerate, CauchonDiagram};
use crate::error::{Error, Result};
use crate::necklace::{necklace_from_diagram, necklace_leq_unchecked};
use crate::oreset::{chain_minor, ShapeTable, MAX_EXHAUSTIVE_D};
use crate::oreset::ore_generators;
use crate::permutation::{
    bruhat_leq, border_interval_set, chain_set, chain_set_via_permutations, fy_minor,
    is_restricted, necklace_from_permutation, pipe_dream_permutation, subword_permutation, w_of,
    Permutation,
};

/// Counterexamples listed in a report are capped at this many.
pub const MAX_REPORTED: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub max_d: usize,
    pub shapes: Vec<(usize, usize)>,
    pub checked: usize,
    pub failures: usize,
    pub counterexamples: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// All shapes `(m, n)` with `m, n ≥ 1` and `m + n ≤ max_d`.
pub fn shapes_up_to(max_d: usize) -> Vec<(usize, usize)> {
    (2..=max_d)
        .flat_map(|d| (1..d).map(move |m| (m, d - m)))
        .collect()
}

/// The shapes a sweep visits: `m + n ≤ max_d`, and `mn ≤ max_mn` if set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Scope {
    pub max_d: usize,
    pub max_mn: Option<usize>,
}

impl Scope {
    pub fn new(max_d: usize) -> Scope {
        Scope { max_d, max_mn: None }
    }

    pub fn with_max_mn(self, max_mn: usize) -> Scope {
        Scope {
            max_mn: Some(max_mn),
            ..self
        }
    }

    pub fn shapes(&self) -> Vec<(usize, usize)> {
        shapes_up_to(self.max_d)
            .into_iter()
            .filter(|&(m, n)| self.max_mn.is_none_or(|b| m * n <= b))
            .collect()
    }
}

impl From<usize> for Scope {
    fn from(max_d: usize) -> Scope {
        Scope::new(max_d)
    }
}

fn check_bound(max_d: usize, limit: usize, what: &str) -> Result<()> {
    if max_d > limit {
        return Err(Error::ScaleLimit(format!("{what} with m+n = {max_d}")));
    }
    Ok(())
}

/// Runs `check` on every diagram of every shape, collecting per-diagram
/// counts of checks and failure messages in enumeration order.
fn sweep_diagrams<F>(name: &str, scope: Scope, parallel: bool, check: F) -> Result<SweepReport>
where
    F: Fn(&CauchonDiagram) -> (usize, Vec<String>) + Sync,
{
    let shapes = scope.shapes();
    let mut report = SweepReport {
        name: name.to_string(),
        max_d: scope.max_d,
        shapes: shapes.clone(),
        checked: 0,
        failures: 0,
        counterexamples: Vec::new(),
    };
    for (m, n) in shapes {
        let diagrams: Vec<CauchonDiagram> = enumerate(m, n)?.collect();
        let results: Vec<(usize, Vec<String>)> = if parallel {
            diagrams.par_iter().map(&check).collect()
        } else {
            diagrams.iter().map(&check).collect()
        };
        for (count, bad) in results {
            report.checked += count;
            report.failures += bad.len();
            let room = MAX_REPORTED.saturating_sub(report.counterexamples.len());
            report.counterexamples.extend(bad.into_iter().take(room));
        }
    }
    Ok(report)
}

fn one_line(d: &CauchonDiagram) -> String {
    d.grid().row_strings().join("/")
}

/// Chain minor against `fy_minor(v, k)` at every border box.
pub fn verify_minor_routes(scope: impl Into<Scope>, parallel: bool) -> Result<SweepReport> {
    let scope = scope.into();
    check_bound(scope.max_d, MAX_EXHAUSTIVE_D, "the minor sweep")?;
    sweep_diagrams("minor routes", scope, parallel, |d| {
        let (m, n) = d.shape();
        let v = pipe_dream_permutation(d);
        let bad = d
            .border_chains()
            .iter()
            .enumerate()
            .filter_map(|(idx, chain)| {
                let k = idx + 1;
                let expected = chain_minor(m, n, chain);
                let got = fy_minor(&v, k, m, n).ok();
                (got != Some(expected)).then(|| {
                    format!(
                        "{}: box {k} chain minor {expected} but permutation gives {got:?}",
                        one_line(d)
                    )
                })
            })
            .collect();
        (m + n - 1, bad)
    })
}

/// Necklace from chains against the necklace from `v`.
pub fn verify_necklace_routes(scope: impl Into<Scope>, parallel: bool) -> Result<SweepReport> {
    let scope = scope.into();
    check_bound(scope.max_d, MAX_EXHAUSTIVE_D, "the necklace sweep")?;
    sweep_diagrams("necklace routes", scope, parallel, |d| {
        let (m, n) = d.shape();
        let from_chains = necklace_from_diagram(d);
        let from_v = necklace_from_permutation(&pipe_dream_permutation(d), m, n);
        let bad = match from_v {
            Ok(nk) if nk == from_chains => vec![],
            other => vec![format!(
                "{}: chains give {from_chains}, permutation gives {other:?}",
                one_line(d)
            )],
        };
        (1, bad)
    })
}

/// `v_{x,y} w_{x,y}^{-1}(1..=m)` against the chain set, at every square.
pub fn verify_square_sets(scope: impl Into<Scope>, parallel: bool) -> Result<SweepReport> {
    let scope = scope.into();
    check_bound(scope.max_d, MAX_EXHAUSTIVE_D, "the square-set sweep")?;
    sweep_diagrams("square sets", scope, parallel, |d| {
        let (m, _) = d.shape();
        let bad = d
            .squares()
            .filter_map(|sq| {
                let chain = d.chain_rooted_at(sq).expect("square in range");
                let expected = chain_set(m, &chain);
                let got = chain_set_via_permutations(d, sq.to_pipe(m)).expect("square in range");
                (got != expected).then(|| {
                    format!("{}: square {sq} chain set {expected} but {got}", one_line(d))
                })
            })
            .collect();
        (d.rows() * d.cols(), bad)
    })
}

/// The interval form of the border-box sets against their chains.
pub fn verify_border_sets(scope: impl Into<Scope>, parallel: bool) -> Result<SweepReport> {
    let scope = scope.into();
    check_bound(scope.max_d, MAX_EXHAUSTIVE_D, "the border-set sweep")?;
    sweep_diagrams("border sets", scope, parallel, |d| {
        let (m, n) = d.shape();
        let v = pipe_dream_permutation(d);
        let bad = d
            .border_chains()
            .iter()
            .enumerate()
            .filter_map(|(idx, chain)| {
                let k = idx + 1;
                let expected = chain_set(m, chain);
                let got = border_interval_set(&v, k, m, n).expect("restricted");
                (got != expected).then(|| {
                    format!("{}: box {k} chain set {expected} but {got}", one_line(d))
                })
            })
            .collect();
        (m + n - 1, bad)
    })
}

/// Pipe tracing against the black-square subword.
pub fn verify_trace_vs_subword(scope: impl Into<Scope>, parallel: bool) -> Result<SweepReport> {
    let scope = scope.into();
    check_bound(scope.max_d, MAX_EXHAUSTIVE_D, "the pipe-dream sweep")?;
    sweep_diagrams("pipe dream vs subword", scope, parallel, |d| {
        let (m, n) = d.shape();
        let traced = pipe_dream_permutation(d);
        let word = subword_permutation(d);
        let mut bad = Vec::new();
        if traced != word {
            bad.push(format!("{}: trace {traced} but subword {word}", one_line(d)));
        }
        if !is_restricted(&traced, m, n).expect("degree m+n") {
            bad.push(format!("{}: {traced} is not restricted", one_line(d)));
        }
        (1, bad)
    })
}

/// For every `K`: no generator vanishes on `K`, and every `L` not contained
/// in `K` meets some generator.
pub fn verify_separating(scope: impl Into<Scope>, parallel: bool) -> Result<SweepReport> {
    let scope = scope.into();
    check_bound(scope.max_d, MAX_EXHAUSTIVE_D, "the separating sweep")?;
    let shapes = scope.shapes();
    let mut report = SweepReport {
        name: "separating".to_string(),
        max_d: scope.max_d,
        shapes: shapes.clone(),
        checked: 0,
        failures: 0,
        counterexamples: Vec::new(),
    };
    for (m, n) in shapes {
        let table = ShapeTable::build(m, n)?;
        let check = |i: usize| -> (usize, Vec<String>) {
            let k = &table.diagrams()[i];
            let e = ore_generators(k);
            let r = table.separation(&e, k);
            let mut bad: Vec<String> = r
                .vanishing_on_k
                .iter()
                .map(|g| format!("{}: generator at box {g} lies in K", one_line(k)))
                .collect();
            bad.extend(
                r.uncaught()
                    .map(|l| format!("{}: no generator meets {}", one_line(k), one_line(l))),
            );
            (table.len(), bad)
        };
        let results: Vec<(usize, Vec<String>)> = if parallel {
            (0..table.len()).into_par_iter().map(check).collect()
        } else {
            (0..table.len()).map(check).collect()
        };
        for (count, bad) in results {
            report.checked += count;
            report.failures += bad.len();
            let room = MAX_REPORTED.saturating_sub(report.counterexamples.len());
            report.counterexamples.extend(bad.into_iter().take(room));
        }
    }
    Ok(report)
}

/// Necklace order against vanishing-set containment for every pair.
pub fn verify_containment(scope: impl Into<Scope>, parallel: bool) -> Result<SweepReport> {
    let scope = scope.into();
    check_bound(scope.max_d, MAX_EXHAUSTIVE_D, "the containment sweep")?;
    let shapes = scope.shapes();
    let mut report = SweepReport {
        name: "containment".to_string(),
        max_d: scope.max_d,
        shapes: shapes.clone(),
        checked: 0,
        failures: 0,
        counterexamples: Vec::new(),
    };
    for (m, n) in shapes {
        let table = ShapeTable::build(m, n)?;
        let nk = table.necklaces();
        let masks = table.masks();
        let check = |l: usize| -> Vec<String> {
            (0..table.len())
                .filter(|&k| {
                    necklace_leq_unchecked(&nk[l], &nk[k]) != (masks[l] & !masks[k] == 0)
                })
                .map(|k| {
                    format!(
                        "{} vs {}",
                        one_line(&table.diagrams()[l]),
                        one_line(&table.diagrams()[k])
                    )
                })
                .collect()
        };
        let results: Vec<Vec<String>> = if parallel {
            (0..table.len()).into_par_iter().map(check).collect()
        } else {
            (0..table.len()).map(check).collect()
        };
        report.checked += table.len() * table.len();
        for bad in results {
            report.failures += bad.len();
            let room = MAX_REPORTED.saturating_sub(report.counterexamples.len());
            report.counterexamples.extend(bad.into_iter().take(room));
        }
    }
    Ok(report)
}

/// Largest `d` for which [`verify_counts`] walks all of `S_d`.
pub const MAX_COUNT_D: usize = 8;

/// Three counts per shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeCount {
    pub m: usize,
    pub n: usize,
    pub diagrams: usize,
    pub restricted: usize,
    pub below_coxeter_power: usize,
}

impl ShapeCount {
    pub fn agrees(&self) -> bool {
        self.diagrams == self.restricted && self.restricted == self.below_coxeter_power
    }
}

/// Visits all of `S_d` in lexicographic order.
pub fn for_each_permutation(d: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (1..=d).collect();
    loop {
        f(&p);
        let Some(i) = (1..d).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..d).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Diagram count, restricted-permutation count and the size of the Bruhat
/// interval below `c^m`, plus a check that the diagram permutations are
/// exactly the restricted ones.
pub fn shape_counts(m: usize, n: usize) -> Result<(ShapeCount, Vec<String>)> {
    let d = m + n;
    check_bound(d, MAX_COUNT_D, "counting over the symmetric group")?;
    let mut from_diagrams: Vec<Permutation> = enumerate(m, n)?.map(|dg| pipe_dream_permutation(&dg)).collect();
    let diagrams = from_diagrams.len();
    from_diagrams.sort();
    let top = w_of(m, n);
    let mut restricted_list = Vec::new();
    let mut below = 0;
    for_each_permutation(d, |p| {
        let sigma = Permutation::new(p.to_vec()).expect("valid permutation");
        if p.iter().enumerate().all(|(i, &x)| x + n > i && x <= i + 1 + m) {
            restricted_list.push(sigma.clone());
        }
        if bruhat_leq(&sigma, &top).expect("same degree") {
            below += 1;
        }
    });
    let mut bad = Vec::new();
    let mut dedup = from_diagrams.clone();
    dedup.dedup();
    if dedup.len() != from_diagrams.len() {
        bad.push(format!("({m},{n}): two diagrams share a permutation"));
    }
    if dedup != restricted_list {
        bad.push(format!("({m},{n}): diagram permutations differ from the restricted set"));
    }
    Ok((
        ShapeCount {
            m,
            n,
            diagrams,
            restricted: restricted_list.len(),
            below_coxeter_power: below,
        },
        bad,
    ))
}

pub fn verify_counts(scope: impl Into<Scope>) -> Result<(Vec<ShapeCount>, SweepReport)> {
    let scope = scope.into();
    check_bound(scope.max_d, MAX_COUNT_D, "counting over the symmetric group")?;
    let shapes = scope.shapes();
    let mut counts = Vec::new();
    let mut report = SweepReport {
        name: "counts".to_string(),
        max_d: scope.max_d,
        shapes: shapes.clone(),
        checked: 0,
        failures: 0,
        counterexamples: Vec::new(),
    };
    for (m, n) in shapes {
        let (c, mut bad) = shape_counts(m, n)?;
        if !c.agrees() {
            bad.push(format!(
                "({m},{n}): {} diagrams, {} restricted, {} below c^m",
                c.diagrams, c.restricted, c.below_coxeter_power
            ));
        }
        report.checked += 1;
        report.failures += bad.len();
        report.counterexamples.extend(bad);
        counts.push(c);
    }
    Ok((counts, report))
}
