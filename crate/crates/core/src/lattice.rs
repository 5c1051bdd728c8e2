//! Coin positions on the triangular (penny-packing) lattice.
//!
//! A coin at axial coordinate `(a, b)` sits at `a·(1, 0) + b·(1/2, √3/2)` in
//! the plane, with unit coin diameter. Every flip used by the puzzles maps
//! integer coordinates to integer coordinates, so nothing here touches
//! floating point except [`AxialCoord::embed`], which exists for rendering.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// The six unit-distance offsets of the triangular lattice.
pub const NEIGHBOR_OFFSETS: [(i64, i64); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AxialCoord {
    pub a: i64,
    pub b: i64,
}

impl AxialCoord {
    pub const ORIGIN: AxialCoord = AxialCoord { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// Point reflection through the origin: `(a, b) -> (-a, -b)`.
    pub fn rotate180(self) -> Result<Self> {
        Ok(Self::new(neg(self.a)?, neg(self.b)?))
    }

    /// Reflection across the vertical axis (negates embedded x):
    /// `(a, b) -> (-a-b, b)`.
    pub fn mirror_horizontal(self) -> Result<Self> {
        Ok(Self::new(neg(add(self.a, self.b)?)?, self.b))
    }

    /// Reflection across the horizontal axis (negates embedded y):
    /// `(a, b) -> (a+b, -b)`.
    pub fn mirror_vertical(self) -> Result<Self> {
        Ok(Self::new(add(self.a, self.b)?, neg(self.b)?))
    }

    pub fn translate(self, t: Translation) -> Result<Self> {
        Ok(Self::new(add(self.a, t.da)?, add(self.b, t.db)?))
    }

    pub fn neighbors(self) -> Result<[AxialCoord; 6]> {
        let mut out = [AxialCoord::ORIGIN; 6];
        for (slot, &(da, db)) in out.iter_mut().zip(NEIGHBOR_OFFSETS.iter()) {
            *slot = self.translate(Translation::new(da, db))?;
        }
        Ok(out)
    }

    /// Squared Euclidean distance between the embedded points, which is the
    /// integer `da² + da·db + db²`.
    pub fn squared_distance(self, other: AxialCoord) -> i128 {
        let da = i128::from(self.a) - i128::from(other.a);
        let db = i128::from(self.b) - i128::from(other.b);
        da * da + da * db + db * db
    }

    pub fn is_adjacent(self, other: AxialCoord) -> bool {
        self.squared_distance(other) == 1
    }

    /// Embedded plane position. Only meant for drawing.
    pub fn embed(self) -> (f64, f64) {
        let a = self.a as f64;
        let b = self.b as f64;
        (a + 0.5 * b, b * 3f64.sqrt() / 2.0)
    }
}

impl fmt::Display for AxialCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

fn neg(x: i64) -> Result<i64> {
    x.checked_neg().ok_or(Error::Overflow)
}

fn add(x: i64, y: i64) -> Result<i64> {
    x.checked_add(y).ok_or(Error::Overflow)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Translation {
    pub da: i64,
    pub db: i64,
}

impl Translation {
    pub const IDENTITY: Translation = Translation { da: 0, db: 0 };

    pub const fn new(da: i64, db: i64) -> Self {
        Self { da, db }
    }
}

impl fmt::Display for Translation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.da, self.db)
    }
}

/// Orientation change applied to a shape before it is slid over the original.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlipKind {
    Rotate180,
    MirrorHorizontal,
    MirrorVertical,
}

impl FlipKind {
    pub const ALL: [FlipKind; 3] = [
        FlipKind::Rotate180,
        FlipKind::MirrorHorizontal,
        FlipKind::MirrorVertical,
    ];

    pub fn apply(self, c: AxialCoord) -> Result<AxialCoord> {
        match self {
            FlipKind::Rotate180 => c.rotate180(),
            FlipKind::MirrorHorizontal => c.mirror_horizontal(),
            FlipKind::MirrorVertical => c.mirror_vertical(),
        }
    }

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            FlipKind::Rotate180 => "rot180",
            FlipKind::MirrorHorizontal => "mirror-h",
            FlipKind::MirrorVertical => "mirror-v",
        }
    }
}

impl fmt::Display for FlipKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite set of coin positions. Iteration is in lexicographic `(a, b)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CoinSet {
    coins: BTreeSet<AxialCoord>,
}

impl CoinSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.coins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coins.is_empty()
    }

    pub fn contains(&self, c: &AxialCoord) -> bool {
        self.coins.contains(c)
    }

    /// Returns `false` if the coin was already present.
    pub fn insert(&mut self, c: AxialCoord) -> bool {
        self.coins.insert(c)
    }

    pub fn remove(&mut self, c: &AxialCoord) -> bool {
        self.coins.remove(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = &AxialCoord> + '_ {
        self.coins.iter()
    }

    /// Lexicographically smallest coin.
    pub fn first(&self) -> Option<AxialCoord> {
        self.coins.first().copied()
    }

    pub fn flipped(&self, flip: FlipKind) -> Result<CoinSet> {
        self.coins.iter().map(|&c| flip.apply(c)).collect()
    }

    pub fn translated(&self, t: Translation) -> Result<CoinSet> {
        self.coins.iter().map(|&c| c.translate(t)).collect()
    }

    pub fn difference(&self, other: &CoinSet) -> CoinSet {
        self.coins.difference(&other.coins).copied().collect()
    }

    pub fn intersection_len(&self, other: &CoinSet) -> usize {
        self.coins.intersection(&other.coins).count()
    }

    pub fn bounds(&self) -> Option<Bounds> {
        let mut iter = self.coins.iter();
        let first = iter.next()?;
        let mut bounds = Bounds::point(*first);
        for c in iter {
            bounds.include(*c);
        }
        Some(bounds)
    }
}

impl FromIterator<AxialCoord> for CoinSet {
    fn from_iter<I: IntoIterator<Item = AxialCoord>>(iter: I) -> Self {
        Self {
            coins: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a CoinSet {
    type Item = &'a AxialCoord;
    type IntoIter = std::collections::btree_set::Iter<'a, AxialCoord>;

    fn into_iter(self) -> Self::IntoIter {
        self.coins.iter()
    }
}

impl IntoIterator for CoinSet {
    type Item = AxialCoord;
    type IntoIter = std::collections::btree_set::IntoIter<AxialCoord>;

    fn into_iter(self) -> Self::IntoIter {
        self.coins.into_iter()
    }
}

/// Inclusive ranges of `a`, `b` and `a + b` over a nonempty coin set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub a: (i64, i64),
    pub b: (i64, i64),
    pub sum: (i64, i64),
}

impl Bounds {
    fn point(c: AxialCoord) -> Self {
        let s = c.a.saturating_add(c.b);
        Self {
            a: (c.a, c.a),
            b: (c.b, c.b),
            sum: (s, s),
        }
    }

    fn include(&mut self, c: AxialCoord) {
        let s = c.a.saturating_add(c.b);
        self.a = (self.a.0.min(c.a), self.a.1.max(c.a));
        self.b = (self.b.0.min(c.b), self.b.1.max(c.b));
        self.sum = (self.sum.0.min(s), self.sum.1.max(s));
    }
}

/// Splits `set` into maximal touching clusters, ordered by their smallest
/// member.
pub fn connected_components(set: &CoinSet) -> Vec<CoinSet> {
    let mut seen = BTreeSet::new();
    let mut components = Vec::new();
    for &start in set {
        if !seen.insert(start) {
            continue;
        }
        let mut component = CoinSet::new();
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            component.insert(c);
            for (da, db) in NEIGHBOR_OFFSETS {
                let Some(n) =
                    c.a.checked_add(da)
                        .zip(c.b.checked_add(db))
                        .map(|(a, b)| AxialCoord::new(a, b))
                else {
                    continue;
                };
                if set.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        components.push(component);
    }
    components
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Up,
    Down,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Up => "up",
            Orientation::Down => "down",
        })
    }
}

/// A coin set recognised as a `rows`-row triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriangleClass {
    pub orientation: Orientation,
    pub rows: u64,
}

/// Recognises a translate of the `k`-row up-triangle
/// `{a ≥ 0, b ≥ 0, a + b ≤ k - 1}` or of its 180° image.
///
/// A single coin is reported as `Up`.
pub fn classify_triangle(component: &CoinSet) -> Result<Option<TriangleClass>> {
    let bounds = component.bounds().ok_or(Error::EmptyShape)?;
    let Some(rows) = triangular_root(component.len() as u64) else {
        return Ok(None);
    };
    let span = rows as i128 - 1;

    // Every member inside the candidate triangle plus matching cardinality
    // means the sets are equal.
    let (a0, b0) = (bounds.a.0 as i128, bounds.b.0 as i128);
    let up = component
        .iter()
        .all(|c| (c.a as i128 - a0) + (c.b as i128 - b0) <= span);
    if up {
        return Ok(Some(TriangleClass {
            orientation: Orientation::Up,
            rows,
        }));
    }

    let (a1, b1) = (bounds.a.1 as i128, bounds.b.1 as i128);
    let down = component
        .iter()
        .all(|c| (a1 - c.a as i128) + (b1 - c.b as i128) <= span);
    Ok(down.then_some(TriangleClass {
        orientation: Orientation::Down,
        rows,
    }))
}

/// `k` with `k(k+1)/2 == n`, if `n` is triangular.
fn triangular_root(n: u64) -> Option<u64> {
    // k = (sqrt(8n + 1) - 1) / 2
    let disc = 8u128 * u128::from(n) + 1;
    let root = isqrt(disc);
    if root * root != disc {
        return None;
    }
    Some(((root - 1) / 2) as u64)
}

fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[(i64, i64)]) -> CoinSet {
        points.iter().map(|&(a, b)| AxialCoord::new(a, b)).collect()
    }

    #[test]
    fn rotate180_examples() {
        assert_eq!(AxialCoord::new(0, 0).rotate180(), Ok(AxialCoord::new(0, 0)));
        assert_eq!(
            AxialCoord::new(2, 1).rotate180(),
            Ok(AxialCoord::new(-2, -1))
        );
        assert_eq!(
            AxialCoord::new(-3, 5).rotate180(),
            Ok(AxialCoord::new(3, -5))
        );
    }

    #[test]
    fn mirror_examples() {
        let h = |a, b| AxialCoord::new(a, b).mirror_horizontal().unwrap();
        assert_eq!(h(0, 0), AxialCoord::new(0, 0));
        assert_eq!(h(1, 0), AxialCoord::new(-1, 0));
        assert_eq!(h(0, 1), AxialCoord::new(-1, 1));

        let v = |a, b| AxialCoord::new(a, b).mirror_vertical().unwrap();
        assert_eq!(v(0, 0), AxialCoord::new(0, 0));
        assert_eq!(v(0, 1), AxialCoord::new(1, -1));
        assert_eq!(v(2, 0), AxialCoord::new(2, 0));
    }

    #[test]
    fn mirrors_act_on_embedding_as_advertised() {
        for a in -5..=5 {
            for b in -5..=5 {
                let c = AxialCoord::new(a, b);
                let (x, y) = c.embed();
                let (hx, hy) = c.mirror_horizontal().unwrap().embed();
                let (vx, vy) = c.mirror_vertical().unwrap().embed();
                assert!((hx + x).abs() < 1e-12 && (hy - y).abs() < 1e-12);
                assert!((vx - x).abs() < 1e-12 && (vy + y).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(
            AxialCoord::new(i64::MIN, 0).rotate180(),
            Err(Error::Overflow)
        );
        assert_eq!(
            AxialCoord::new(i64::MAX, 1).mirror_vertical(),
            Err(Error::Overflow)
        );
        assert_eq!(
            AxialCoord::new(i64::MAX, 0).translate(Translation::new(1, 0)),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn involutions_on_grid() {
        for a in -50..=50 {
            for b in -50..=50 {
                let c = AxialCoord::new(a, b);
                for flip in FlipKind::ALL {
                    assert_eq!(flip.apply(flip.apply(c).unwrap()).unwrap(), c, "{flip} {c}");
                }
            }
        }
    }

    #[test]
    fn translate_examples() {
        assert_eq!(
            set(&[(0, 0)]).translated(Translation::new(1, 2)).unwrap(),
            set(&[(1, 2)])
        );
        let s = set(&[(0, 0), (4, -1), (2, 2)]);
        assert_eq!(s.translated(Translation::IDENTITY).unwrap(), s);
        assert_eq!(
            set(&[(0, 0), (1, 0)])
                .translated(Translation::new(-1, 0))
                .unwrap(),
            set(&[(-1, 0), (0, 0)])
        );
    }

    #[test]
    fn neighbors_are_unit_distance() {
        let origin = AxialCoord::ORIGIN.neighbors().unwrap();
        assert_eq!(
            origin.iter().copied().collect::<BTreeSet<_>>(),
            [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)]
                .into_iter()
                .map(|(a, b)| AxialCoord::new(a, b))
                .collect()
        );
        let c = AxialCoord::new(2, 2);
        for n in c.neighbors().unwrap() {
            assert_eq!(n.squared_distance(c), 1);
            let (x0, y0) = c.embed();
            let (x1, y1) = n.embed();
            assert!(((x1 - x0).powi(2) + (y1 - y0).powi(2) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn components_examples() {
        assert!(connected_components(&CoinSet::new()).is_empty());
        assert_eq!(
            connected_components(&set(&[(0, 0), (1, 0)])),
            vec![set(&[(0, 0), (1, 0)])]
        );
        assert_eq!(
            connected_components(&set(&[(3, 3), (0, 0)])),
            vec![set(&[(0, 0)]), set(&[(3, 3)])]
        );
        // (0,1) and (1,0) touch via the (1,-1) offset.
        assert_eq!(connected_components(&set(&[(0, 1), (1, 0)])).len(), 1);
        // (0,0) and (1,1) are √3 apart.
        assert_eq!(connected_components(&set(&[(0, 0), (1, 1)])).len(), 2);
    }

    #[test]
    fn classify_examples() {
        let up = |rows| {
            Some(TriangleClass {
                orientation: Orientation::Up,
                rows,
            })
        };
        assert_eq!(classify_triangle(&set(&[(0, 0)])), Ok(up(1)));
        assert_eq!(
            classify_triangle(&set(&[(0, 0), (1, 0), (0, 1)])),
            Ok(up(2))
        );
        assert_eq!(
            classify_triangle(&set(&[(5, 5), (4, 5), (5, 4)])),
            Ok(Some(TriangleClass {
                orientation: Orientation::Down,
                rows: 2
            }))
        );
        assert_eq!(classify_triangle(&set(&[(0, 0), (1, 0), (2, 0)])), Ok(None));
        assert_eq!(classify_triangle(&CoinSet::new()), Err(Error::EmptyShape));
    }

    /// Brute-force congruence: compare against every translate of both
    /// triangle orientations within a window.
    #[test]
    fn classify_matches_enumerated_triangles() {
        fn reference(component: &CoinSet) -> Option<TriangleClass> {
            for rows in 1..=4i64 {
                let base: CoinSet = (0..rows)
                    .flat_map(|a| (0..rows - a).map(move |b| AxialCoord::new(a, b)))
                    .collect();
                for (orientation, shape) in [
                    (Orientation::Up, base.clone()),
                    (
                        Orientation::Down,
                        base.flipped(FlipKind::Rotate180).unwrap(),
                    ),
                ] {
                    for da in -6..=6 {
                        for db in -6..=6 {
                            if shape.translated(Translation::new(da, db)).unwrap() == *component {
                                return Some(TriangleClass {
                                    orientation,
                                    rows: rows as u64,
                                });
                            }
                        }
                    }
                }
            }
            None
        }

        // Every subset of a small patch of up to three coins, plus some
        // larger hand-picked sets.
        let patch: Vec<AxialCoord> = (0..3)
            .flat_map(|a| (0..3).map(move |b| AxialCoord::new(a, b)))
            .collect();
        for mask in 1u32..(1 << patch.len()) {
            if mask.count_ones() > 3 {
                continue;
            }
            let s: CoinSet = patch
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &c)| c)
                .collect();
            assert_eq!(classify_triangle(&s).unwrap(), reference(&s), "{s:?}");
        }
        let six_up = set(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)]);
        let six_down = six_up.flipped(FlipKind::Rotate180).unwrap();
        let six_bent = set(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]);
        for s in [six_up, six_down, six_bent] {
            assert_eq!(classify_triangle(&s).unwrap(), reference(&s));
        }
    }

    #[test]
    fn triangular_root_recognises_triangular_numbers() {
        let roots: Vec<_> = (0..=15).filter_map(triangular_root).collect();
        assert_eq!(roots, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(triangular_root(5050), Some(100));
        assert_eq!(triangular_root(5051), None);
    }
}
