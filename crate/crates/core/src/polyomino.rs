//! Directed column-convex polyominoes.
//!
//! A polyomino is stored column by column as vertical segments. The generator
//! [`enumerate_dccp`] builds directed ones directly from the characterization
//! "bottoms are non-decreasing and each column starts inside the previous
//! one". The cell-level checkers [`is_column_convex`] and [`is_directed`] work
//! on raw [`CellSet2D`] values and never look at that characterization, so the
//! two can be checked against each other (see [`enumerate_fixed_polyominoes`]).

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigUint;

use crate::binomial::binomial;
use crate::{Error, Result};

/// One column: `height` cells starting at row `bottom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColumnSegment {
    pub bottom: i64,
    pub height: u32,
}

impl ColumnSegment {
    pub fn new(bottom: i64, height: u32) -> Result<Self> {
        if height == 0 {
            return Err(Error::shape("column height must be at least 1"));
        }
        Ok(Self { bottom, height })
    }

    /// Highest occupied row.
    pub fn top(&self) -> i64 {
        self.bottom + i64::from(self.height) - 1
    }

    pub fn overlaps(&self, other: &ColumnSegment) -> bool {
        self.bottom <= other.top() && other.bottom <= self.top()
    }
}

/// A column-convex polyomino in canonical translation: the first column
/// starts at row 0 and sits at column index 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnConvexPolyomino {
    columns: Vec<ColumnSegment>,
}

impl ColumnConvexPolyomino {
    /// Builds a polyomino from its columns, translating it so that the first
    /// column starts at row 0. Fails on an empty column list, a zero height
    /// or two adjacent columns without a shared edge.
    pub fn new(columns: Vec<ColumnSegment>) -> Result<Self> {
        let first = columns
            .first()
            .ok_or_else(|| Error::shape("a polyomino needs at least one column"))?;
        let shift = first.bottom;
        if columns.iter().any(|c| c.height == 0) {
            return Err(Error::shape("column height must be at least 1"));
        }
        if columns.windows(2).any(|w| !w[0].overlaps(&w[1])) {
            return Err(Error::shape("adjacent columns do not share an edge"));
        }
        let columns = columns
            .into_iter()
            .map(|c| ColumnSegment {
                bottom: c.bottom - shift,
                height: c.height,
            })
            .collect();
        Ok(Self { columns })
    }

    pub fn from_heights_bottoms(heights: &[u32], bottoms: &[i64]) -> Result<Self> {
        if heights.len() != bottoms.len() {
            return Err(Error::shape("heights and bottoms differ in length"));
        }
        let columns = heights
            .iter()
            .zip(bottoms)
            .map(|(&h, &b)| ColumnSegment::new(b, h))
            .collect::<Result<Vec<_>>>()?;
        Self::new(columns)
    }

    pub fn columns(&self) -> &[ColumnSegment] {
        &self.columns
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn area(&self) -> u64 {
        self.columns.iter().map(|c| u64::from(c.height)).sum()
    }

    pub fn heights(&self) -> Vec<u32> {
        self.columns.iter().map(|c| c.height).collect()
    }

    pub fn bottoms(&self) -> Vec<i64> {
        self.columns.iter().map(|c| c.bottom).collect()
    }

    /// Directedness read off the column data: each column starts no lower
    /// than the previous one and no higher than its top cell.
    pub fn has_directed_columns(&self) -> bool {
        self.columns
            .windows(2)
            .all(|w| w[0].bottom <= w[1].bottom && w[1].bottom <= w[0].top())
    }

    /// Cell set with column `i` (1-based) spanning rows `bottom..=top`.
    pub fn rasterize(&self) -> CellSet2D {
        let mut cells = BTreeSet::new();
        for (i, c) in self.columns.iter().enumerate() {
            let x = i as i64 + 1;
            for y in c.bottom..=c.top() {
                cells.insert((x, y));
            }
        }
        CellSet2D { cells }
    }
}

impl Ord for ColumnConvexPolyomino {
    /// Lexicographic on the height vector, then on the bottom vector.
    fn cmp(&self, other: &Self) -> Ordering {
        let heights = self.columns.iter().map(|c| c.height);
        heights
            .cmp(other.columns.iter().map(|c| c.height))
            .then_with(|| {
                let bottoms = self.columns.iter().map(|c| c.bottom);
                bottoms.cmp(other.columns.iter().map(|c| c.bottom))
            })
    }
}

impl PartialOrd for ColumnConvexPolyomino {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite set of unit squares addressed as `(column, row)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellSet2D {
    cells: BTreeSet<(i64, i64)>,
}

impl CellSet2D {
    pub fn new(cells: impl IntoIterator<Item = (i64, i64)>) -> Self {
        Self {
            cells: cells.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: (i64, i64)) -> bool {
        self.cells.contains(&cell)
    }

    /// Cells in lexicographic `(column, row)` order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.cells.iter().copied()
    }

    /// Number of distinct occupied columns.
    pub fn width(&self) -> usize {
        let mut cols: Vec<i64> = self.cells.iter().map(|c| c.0).collect();
        cols.dedup();
        cols.len()
    }

    /// Translates so that the leftmost column is column 1 and its lowest
    /// cell is on row 0, matching [`ColumnConvexPolyomino::rasterize`].
    pub fn normalized(&self) -> Self {
        let Some(&(x0, y0)) = self.cells.first() else {
            return self.clone();
        };
        Self::new(self.cells.iter().map(|&(x, y)| (x - x0 + 1, y - y0)))
    }

    /// Edge connectivity.
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.cells.first() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((x, y)) = queue.pop_front() {
            for n in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                if self.cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == self.cells.len()
    }
}

impl FromIterator<(i64, i64)> for CellSet2D {
    fn from_iter<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        Self::new(iter)
    }
}

/// True iff every occupied column is one contiguous run of rows.
pub fn is_column_convex(c: &CellSet2D) -> bool {
    let mut prev: Option<(i64, i64)> = None;
    for (x, y) in c.iter() {
        if let Some((px, py)) = prev {
            if px == x && y != py + 1 {
                return false;
            }
        }
        prev = Some((x, y));
    }
    true
}

/// True iff every cell is reachable by North/East steps inside `c` from the
/// root, where the root is the unique cell with neither a South nor a West
/// neighbour in `c`. No such unique cell means not directed.
pub fn is_directed(c: &CellSet2D) -> bool {
    let mut roots = c
        .iter()
        .filter(|&(x, y)| !c.contains((x, y - 1)) && !c.contains((x - 1, y)));
    let (Some(root), None) = (roots.next(), roots.next()) else {
        return false;
    };
    let mut seen = BTreeSet::from([root]);
    let mut queue = VecDeque::from([root]);
    while let Some((x, y)) = queue.pop_front() {
        for n in [(x + 1, y), (x, y + 1)] {
            if c.contains(n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == c.len()
}

/// Number of directed column-convex polyominoes with `k` columns and area
/// `n`: `C(n + k - 2, n - k)`, zero when `n < k`.
pub fn count_dccp(k: usize, n: usize) -> Result<BigUint> {
    if k < 1 || n < 1 {
        return Err(Error::domain("count_dccp needs k >= 1 and n >= 1"));
    }
    binomial(n as i64 + k as i64 - 2, n as i64 - k as i64)
}

/// Every directed column-convex polyomino of width `k` and area `n`, ordered
/// lexicographically by heights and then by bottoms.
pub fn enumerate_dccp(k: usize, n: usize) -> Result<Vec<ColumnConvexPolyomino>> {
    if k < 1 {
        return Err(Error::domain("enumerate_dccp needs k >= 1"));
    }
    let mut out = Vec::new();
    if n < k {
        return Ok(out);
    }
    let mut heights = Vec::with_capacity(k);
    compositions(n as u32, k, &mut heights, &mut |heights| {
        let mut bottoms = Vec::with_capacity(k);
        bottoms.push(0);
        place_bottoms(heights, &mut bottoms, &mut out);
    });
    Ok(out)
}

/// Compositions of `total` into `parts` positive parts, lexicographic order.
fn compositions(total: u32, parts: usize, acc: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if parts == 1 {
        acc.push(total);
        emit(acc);
        acc.pop();
        return;
    }
    for first in 1..=total - (parts as u32 - 1) {
        acc.push(first);
        compositions(total - first, parts - 1, acc, emit);
        acc.pop();
    }
}

fn place_bottoms(heights: &[u32], bottoms: &mut Vec<i64>, out: &mut Vec<ColumnConvexPolyomino>) {
    let i = bottoms.len();
    if i == heights.len() {
        let columns = heights
            .iter()
            .zip(bottoms.iter())
            .map(|(&height, &bottom)| ColumnSegment { bottom, height })
            .collect();
        out.push(ColumnConvexPolyomino { columns });
        return;
    }
    let prev = bottoms[i - 1];
    for b in prev..prev + i64::from(heights[i - 1]) {
        bottoms.push(b);
        place_bottoms(heights, bottoms, out);
        bottoms.pop();
    }
}

/// All fixed polyominoes (edge-connected cell sets up to translation) with
/// exactly `n` cells, found with Redelmeier's algorithm and returned
/// normalized and sorted. Makes no assumption about convexity or direction.
pub fn enumerate_fixed_polyominoes(n: usize) -> Vec<CellSet2D> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut seen = BTreeSet::from([(0, 0)]);
    let mut current = Vec::with_capacity(n);
    redelmeier(n, alloc::vec![(0, 0)], &mut current, &mut seen, &mut out);
    let mut out: Vec<CellSet2D> = out.into_iter().map(|c| c.normalized()).collect();
    out.sort();
    out
}

// Cells are confined to y > 0, or y == 0 and x >= 0, so that (0, 0) is the
// lowest-then-leftmost cell of every polyomino grown from it.
fn admissible((x, y): (i64, i64)) -> bool {
    y > 0 || (y == 0 && x >= 0)
}

fn redelmeier(
    n: usize,
    mut untried: Vec<(i64, i64)>,
    current: &mut Vec<(i64, i64)>,
    seen: &mut BTreeSet<(i64, i64)>,
    out: &mut Vec<CellSet2D>,
) {
    while let Some(cell) = untried.pop() {
        current.push(cell);
        if current.len() == n {
            out.push(current.iter().copied().collect());
        } else {
            let (x, y) = cell;
            let fresh: Vec<_> = [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)]
                .into_iter()
                .filter(|&c| admissible(c) && !seen.contains(&c))
                .collect();
            seen.extend(fresh.iter().copied());
            let mut next = untried.clone();
            next.extend(fresh.iter().copied());
            redelmeier(n, next, current, seen, out);
            for c in &fresh {
                seen.remove(c);
            }
        }
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn poly(heights: &[u32], bottoms: &[i64]) -> ColumnConvexPolyomino {
        ColumnConvexPolyomino::from_heights_bottoms(heights, bottoms).unwrap()
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_dccp(1, 5).unwrap(), BigUint::from(1u32));
        assert_eq!(count_dccp(2, 3).unwrap(), BigUint::from(3u32));
        assert_eq!(count_dccp(3, 2).unwrap(), BigUint::from(0u32));
        assert!(matches!(count_dccp(0, 3), Err(Error::Domain(_))));
        assert!(matches!(count_dccp(2, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_dccp(1, 3).unwrap(), vec![poly(&[3], &[0])]);
        assert_eq!(
            enumerate_dccp(2, 3).unwrap(),
            vec![
                poly(&[1, 2], &[0, 0]),
                poly(&[2, 1], &[0, 0]),
                poly(&[2, 1], &[0, 1])
            ]
        );
        assert_eq!(enumerate_dccp(2, 2).unwrap(), vec![poly(&[1, 1], &[0, 0])]);
        assert!(enumerate_dccp(3, 2).unwrap().is_empty());
        assert!(matches!(enumerate_dccp(0, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn enumeration_is_sorted_and_deterministic() {
        let a = enumerate_dccp(3, 7).unwrap();
        let b = enumerate_dccp(3, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rasterize_examples() {
        assert_eq!(
            poly(&[2], &[0]).rasterize(),
            CellSet2D::new([(1, 0), (1, 1)])
        );
        assert_eq!(
            poly(&[2, 1], &[0, 1]).rasterize(),
            CellSet2D::new([(1, 0), (1, 1), (2, 1)])
        );
        assert_eq!(
            poly(&[1, 2], &[0, 0]).rasterize(),
            CellSet2D::new([(1, 0), (2, 0), (2, 1)])
        );
    }

    #[test]
    fn checker_examples() {
        assert!(!is_column_convex(&CellSet2D::new([(1, 0), (1, 2)])));
        assert!(is_column_convex(&CellSet2D::new([(1, 0), (2, 0)])));
        assert!(is_directed(&CellSet2D::new([(1, 0), (2, 0), (2, 1)])));
        assert!(!is_directed(&CellSet2D::new([(1, 1), (2, 1), (2, 0)])));
    }

    #[test]
    fn constructor_rejects_bad_shapes() {
        assert!(ColumnConvexPolyomino::new(vec![]).is_err());
        assert!(ColumnSegment::new(0, 0).is_err());
        // columns [0,0] and [2,3] do not touch
        assert!(ColumnConvexPolyomino::from_heights_bottoms(&[1, 2], &[0, 2]).is_err());
        // translated to canonical position
        let p = ColumnConvexPolyomino::from_heights_bottoms(&[2, 2], &[5, 6]).unwrap();
        assert_eq!(p.bottoms(), vec![0, 1]);
    }

    #[test]
    fn fixed_polyomino_counts() {
        // A001168
        let expected = [1usize, 2, 6, 19, 63, 216, 760];
        for (i, &e) in expected.iter().enumerate() {
            let all = enumerate_fixed_polyominoes(i + 1);
            assert_eq!(all.len(), e, "size {}", i + 1);
            assert!(all.iter().all(|c| c.is_connected() && c.len() == i + 1));
        }
    }

    #[test]
    fn normalized_is_translation_invariant() {
        let a = CellSet2D::new([(4, 7), (4, 8), (5, 6)]);
        let b = CellSet2D::new([(-2, 0), (-2, 1), (-1, -1)]);
        assert_eq!(a.normalized(), b.normalized());
        assert_eq!(a.normalized(), CellSet2D::new([(1, 0), (1, 1), (2, -1)]));
    }
}
