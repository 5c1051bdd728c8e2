//! Exhaustive superimposition search.
//!
//! Flipping a shape in place costs one move per coin of the start position
//! that is not also a coin of the target position. The target may be any
//! lattice translate of the flipped shape, so the minimum move count is
//! `|start| - max_t |start ∩ (flip(start) + t)|`. [`solve`] computes that
//! maximum exactly and returns every translation attaining it.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{
    classify_triangle, connected_components, AxialCoord, CoinSet, FlipKind, Translation,
    TriangleClass,
};

/// Dense histograms are used while the translation box stays under this many
/// cells; sparse shapes fall back to a hash map.
const DENSE_HISTOGRAM_LIMIT: i128 = 1 << 24;

/// A flip followed by a translation: one way of laying the target shape over
/// the start shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub flip: FlipKind,
    pub shift: Translation,
}

impl Placement {
    pub fn new(flip: FlipKind, shift: Translation) -> Self {
        Self { flip, shift }
    }

    /// The coin positions the start shape must end up in.
    pub fn target(&self, start: &CoinSet) -> Result<CoinSet> {
        start.flipped(self.flip)?.translated(self.shift)
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} shifted by {}", self.flip, self.shift)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapResult {
    pub flip: FlipKind,
    pub total_coins: usize,
    pub max_overlap: usize,
    pub min_moves: usize,
    /// Every maximising placement, ordered by `(shift.da, shift.db)`.
    pub optimal_placements: Vec<Placement>,
}

/// Maximum overlap between `start` and every translate of its flipped image.
///
/// Any translation with nonzero overlap is a difference `s - f` of a start
/// coin and a flipped coin, so tallying all such differences enumerates the
/// complete search space and counts each translation's overlap at once.
pub fn solve(start: &CoinSet, flip: FlipKind) -> Result<OverlapResult> {
    if start.is_empty() {
        return Err(Error::EmptyShape);
    }
    let flipped = start.flipped(flip)?;
    let tally = tally_differences(start, &flipped)?;

    let max_overlap = tally.iter().map(|&(_, n)| n).max().unwrap_or(0);
    let mut optimal_placements: Vec<Placement> = tally
        .into_iter()
        .filter(|&(_, n)| n == max_overlap)
        .map(|(shift, _)| Placement::new(flip, shift))
        .collect();
    optimal_placements.sort_unstable_by_key(|p| (p.shift.da, p.shift.db));

    Ok(OverlapResult {
        flip,
        total_coins: start.len(),
        max_overlap,
        min_moves: start.len() - max_overlap,
        optimal_placements,
    })
}

/// Returns `(t, |start ∩ (flipped + t)|)` for every `t` with nonzero overlap.
fn tally_differences(start: &CoinSet, flipped: &CoinSet) -> Result<Vec<(Translation, usize)>> {
    let (Some(bs), Some(bf)) = (start.bounds(), flipped.bounds()) else {
        return Ok(Vec::new());
    };
    let lo_a = i128::from(bs.a.0) - i128::from(bf.a.1);
    let hi_a = i128::from(bs.a.1) - i128::from(bf.a.0);
    let lo_b = i128::from(bs.b.0) - i128::from(bf.b.1);
    let hi_b = i128::from(bs.b.1) - i128::from(bf.b.0);
    for v in [lo_a, hi_a, lo_b, hi_b] {
        i64::try_from(v).map_err(|_| Error::Overflow)?;
    }
    let (width, height) = (hi_a - lo_a + 1, hi_b - lo_b + 1);
    let diff = |s: &AxialCoord, f: &AxialCoord| (s.a - f.a, s.b - f.b);

    if width * height <= DENSE_HISTOGRAM_LIMIT {
        let (lo_a, lo_b) = (lo_a as i64, lo_b as i64);
        let (width, height) = (width as usize, height as usize);
        let mut counts = vec![0usize; width * height];
        for s in start {
            for f in flipped {
                let (da, db) = diff(s, f);
                counts[(da - lo_a) as usize * height + (db - lo_b) as usize] += 1;
            }
        }
        Ok(counts
            .into_iter()
            .enumerate()
            .filter(|&(_, n)| n > 0)
            .map(|(i, n)| {
                let shift =
                    Translation::new(lo_a + (i / height) as i64, lo_b + (i % height) as i64);
                (shift, n)
            })
            .collect())
    } else {
        let mut counts: HashMap<(i64, i64), usize> = HashMap::new();
        for s in start {
            for f in flipped {
                *counts.entry(diff(s, f)).or_default() += 1;
            }
        }
        Ok(counts
            .into_iter()
            .map(|((da, db), n)| (Translation::new(da, db), n))
            .collect())
    }
}

pub fn count_optimal_placements(start: &CoinSet, flip: FlipKind) -> Result<usize> {
    Ok(solve(start, flip)?.optimal_placements.len())
}

/// One connected cluster of coins outside the overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Protrusion {
    pub coins: CoinSet,
    pub size: usize,
    pub triangle: Option<TriangleClass>,
}

impl Protrusion {
    fn from_component(coins: CoinSet) -> Result<Self> {
        let triangle = classify_triangle(&coins)?;
        Ok(Self {
            size: coins.len(),
            coins,
            triangle,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtrusionReport {
    pub placement: Placement,
    /// Clusters of coins that have to move.
    pub source_components: Vec<Protrusion>,
    /// Clusters of empty target positions they move into.
    pub target_components: Vec<Protrusion>,
    /// Source cluster sizes, largest first, zero-padded to the requested
    /// arity.
    pub size_multiset: Vec<usize>,
}

impl ProtrusionReport {
    pub fn moves(&self) -> usize {
        self.source_components.iter().map(|p| p.size).sum()
    }

    pub fn all_triangular(&self) -> bool {
        self.source_components
            .iter()
            .chain(&self.target_components)
            .all(|p| p.triangle.is_some())
    }

    /// Target cluster sizes, padded like `size_multiset`.
    pub fn target_size_multiset(&self) -> Vec<usize> {
        sizes(&self.target_components, self.size_multiset.len())
    }
}

fn sizes(components: &[Protrusion], arity: usize) -> Vec<usize> {
    let mut out: Vec<usize> = components.iter().map(|p| p.size).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    if out.len() < arity {
        out.resize(arity, 0);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoinMove {
    pub from: AxialCoord,
    pub to: AxialCoord,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MovePlan {
    pub moves: Vec<CoinMove>,
}

impl MovePlan {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Lifts every `from` coin and sets it down on its `to` position.
    /// Returns `None` if a source is missing or a destination is occupied.
    pub fn apply(&self, start: &CoinSet) -> Option<CoinSet> {
        let mut coins = start.clone();
        for m in &self.moves {
            if !coins.remove(&m.from) {
                return None;
            }
        }
        for m in &self.moves {
            if !coins.insert(m.to) {
                return None;
            }
        }
        Some(coins)
    }
}

impl OverlapResult {
    pub fn is_optimal(&self, placement: &Placement) -> bool {
        placement.flip == self.flip
            && self
                .optimal_placements
                .binary_search_by_key(&(placement.shift.da, placement.shift.db), |p| {
                    (p.shift.da, p.shift.db)
                })
                .is_ok()
    }

    /// Target set for `placement`, rejecting placements that do not attain
    /// the maximum overlap.
    fn optimal_target(&self, start: &CoinSet, placement: &Placement) -> Result<CoinSet> {
        let target = placement.target(start)?;
        if !self.is_optimal(placement) {
            return Err(Error::NotOptimal {
                placement: placement.to_string(),
                overlap: start.intersection_len(&target),
                max_overlap: self.max_overlap,
            });
        }
        Ok(target)
    }

    /// Decomposes the coins outside the overlap into connected clusters.
    /// `arity` is the minimum length of `size_multiset`; `None` uses the
    /// number of clusters found.
    pub fn protrusions(
        &self,
        start: &CoinSet,
        placement: &Placement,
        arity: Option<usize>,
    ) -> Result<ProtrusionReport> {
        let target = self.optimal_target(start, placement)?;
        let source_components = connected_components(&start.difference(&target))
            .into_iter()
            .map(Protrusion::from_component)
            .collect::<Result<Vec<_>>>()?;
        let target_components = connected_components(&target.difference(start))
            .into_iter()
            .map(Protrusion::from_component)
            .collect::<Result<Vec<_>>>()?;
        let size_multiset = sizes(&source_components, arity.unwrap_or(source_components.len()));
        Ok(ProtrusionReport {
            placement: *placement,
            source_components,
            target_components,
            size_multiset,
        })
    }

    /// Pairs the coins to move with the free target positions, both in
    /// lexicographic order.
    pub fn move_plan(&self, start: &CoinSet, placement: &Placement) -> Result<MovePlan> {
        let target = self.optimal_target(start, placement)?;
        let moves = start
            .difference(&target)
            .into_iter()
            .zip(target.difference(start))
            .map(|(from, to)| CoinMove { from, to })
            .collect();
        Ok(MovePlan { moves })
    }
}

pub fn protrusions(
    start: &CoinSet,
    placement: &Placement,
    arity: Option<usize>,
) -> Result<ProtrusionReport> {
    solve(start, placement.flip)?.protrusions(start, placement, arity)
}

pub fn move_plan(start: &CoinSet, placement: &Placement) -> Result<MovePlan> {
    solve(start, placement.flip)?.move_plan(start, placement)
}
