//! Directed plateau polyhypercubes.
//!
//! Axis 1 is the stacking axis: stratum `s` (1-based) is the slab `x_1 = s`.
//! Axes `2..=d` are the lateral axes. A [`Plateau`] stores one extent and one
//! offset per lateral axis, in axis order, so index `0` is axis 2.
//!
//! Two independent routes are provided. [`enumerate_dpp`] assembles objects
//! from one directed column-convex polyomino per lateral axis.
//! [`oracle_enumerate_dpp`] stacks arbitrary boxes, rasterizes them and keeps
//! what [`generic_is_valid_dpp`] accepts on raw cells.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigUint;

use crate::polyomino::{enumerate_dccp, CellSet2D, ColumnConvexPolyomino, ColumnSegment};
use crate::{Error, Result};

/// Default cap on the number of partial stackings the oracle may visit.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// One hyperrectangular stratum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Plateau {
    extents: Vec<u32>,
    offsets: Vec<i64>,
}

impl Plateau {
    pub fn new(extents: Vec<u32>, offsets: Vec<i64>) -> Result<Self> {
        if extents.len() != offsets.len() {
            return Err(Error::shape("plateau extents and offsets differ in length"));
        }
        if extents.contains(&0) {
            return Err(Error::shape("plateau extents must be at least 1"));
        }
        Ok(Self { extents, offsets })
    }

    pub fn extents(&self) -> &[u32] {
        &self.extents
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    /// Number of cells in the stratum.
    pub fn volume(&self) -> u64 {
        self.extents.iter().map(|&e| u64::from(e)).product()
    }

    fn segment(&self, axis: usize) -> ColumnSegment {
        ColumnSegment {
            bottom: self.offsets[axis],
            height: self.extents[axis],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedPlateauPolyhypercube {
    dimension: usize,
    strata: Vec<Plateau>,
}

impl DirectedPlateauPolyhypercube {
    /// Validates the stack and translates it so that the first stratum has
    /// all offsets zero. Every lateral trace must be a directed
    /// column-convex polyomino.
    pub fn new(dimension: usize, strata: Vec<Plateau>) -> Result<Self> {
        if dimension < 3 {
            return Err(Error::domain("dimension must be at least 3"));
        }
        let first = strata
            .first()
            .ok_or_else(|| Error::shape("a polyhypercube needs at least one stratum"))?;
        if strata.iter().any(|p| p.extents.len() != dimension - 1) {
            return Err(Error::shape(
                "every plateau needs one extent per lateral axis",
            ));
        }
        let shift = first.offsets.clone();
        let strata: Vec<Plateau> = strata
            .into_iter()
            .map(|p| Plateau {
                offsets: p.offsets.iter().zip(&shift).map(|(o, s)| o - s).collect(),
                extents: p.extents,
            })
            .collect();
        let out = Self { dimension, strata };
        for axis in 0..dimension - 1 {
            let trace = out.trace(axis)?;
            if !trace.has_directed_columns() {
                return Err(Error::shape("a lateral trace is not directed"));
            }
        }
        Ok(out)
    }

    /// Inverse of projection: stacks the plateaus whose trace on lateral
    /// axis `l` is `traces[l - 2]`.
    pub fn from_projections(dimension: usize, traces: &[ColumnConvexPolyomino]) -> Result<Self> {
        if dimension < 3 {
            return Err(Error::domain("dimension must be at least 3"));
        }
        if traces.len() != dimension - 1 {
            return Err(Error::shape("need exactly one trace per lateral axis"));
        }
        let k = traces[0].width();
        if traces.iter().any(|t| t.width() != k) {
            return Err(Error::shape("all traces must have the same width"));
        }
        let strata = (0..k)
            .map(|s| Plateau {
                extents: traces.iter().map(|t| t.columns()[s].height).collect(),
                offsets: traces.iter().map(|t| t.columns()[s].bottom).collect(),
            })
            .collect();
        Self::new(dimension, strata)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of strata.
    pub fn width(&self) -> usize {
        self.strata.len()
    }

    pub fn strata(&self) -> &[Plateau] {
        &self.strata
    }

    fn trace(&self, axis: usize) -> Result<ColumnConvexPolyomino> {
        ColumnConvexPolyomino::new(self.strata.iter().map(|p| p.segment(axis)).collect())
    }

    /// Projection onto the plane spanned by axis 1 and axis `l`, `2 <= l <= d`.
    pub fn project(&self, l: usize) -> Result<ColumnConvexPolyomino> {
        if l < 2 || l > self.dimension {
            return Err(Error::domain("projection axis must lie in 2..=d"));
        }
        self.trace(l - 2)
    }

    /// All `d - 1` projections in axis order.
    pub fn projections(&self) -> Vec<ColumnConvexPolyomino> {
        (0..self.dimension - 1)
            .map(|axis| self.trace(axis).expect("validated at construction"))
            .collect()
    }

    /// Sum of the projection areas, i.e. the sum of all extents.
    pub fn lateral_area(&self) -> u64 {
        self.strata
            .iter()
            .flat_map(|p| p.extents.iter())
            .map(|&e| u64::from(e))
            .sum()
    }

    /// Number of cells.
    pub fn hypervolume(&self) -> u64 {
        self.strata.iter().map(Plateau::volume).sum()
    }

    pub fn rasterize(&self) -> CellSetD {
        let mut cells = BTreeSet::new();
        for (s, plateau) in self.strata.iter().enumerate() {
            push_box(s as i64 + 1, plateau, &mut cells);
        }
        CellSetD {
            dimension: self.dimension,
            cells,
        }
    }
}

impl Ord for DirectedPlateauPolyhypercube {
    /// Dimension first, then lexicographic on the projections in axis order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.dimension.cmp(&other.dimension).then_with(|| {
            (0..self.dimension - 1)
                .map(|a| self.trace(a).expect("valid"))
                .cmp((0..other.dimension - 1).map(|a| other.trace(a).expect("valid")))
        })
    }
}

impl PartialOrd for DirectedPlateauPolyhypercube {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn push_box(x1: i64, plateau: &Plateau, cells: &mut BTreeSet<Vec<i64>>) {
    let mut point: Vec<i64> = core::iter::once(x1)
        .chain(plateau.offsets.iter().copied())
        .collect();
    loop {
        cells.insert(point.clone());
        // odometer increment over the lateral coordinates
        let mut axis = 0;
        loop {
            if axis == plateau.extents.len() {
                return;
            }
            let lo = plateau.offsets[axis];
            let hi = lo + i64::from(plateau.extents[axis]) - 1;
            if point[axis + 1] < hi {
                point[axis + 1] += 1;
                break;
            }
            point[axis + 1] = lo;
            axis += 1;
        }
    }
}

/// A finite set of cells of `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellSetD {
    dimension: usize,
    cells: BTreeSet<Vec<i64>>,
}

impl CellSetD {
    pub fn new(dimension: usize, cells: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        let cells: BTreeSet<Vec<i64>> = cells.into_iter().collect();
        if cells.iter().any(|c| c.len() != dimension) {
            return Err(Error::shape(
                "cell coordinate count differs from the dimension",
            ));
        }
        Ok(Self { dimension, cells })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: &[i64]) -> bool {
        self.cells.contains(cell)
    }

    /// Cells in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &[i64]> + '_ {
        self.cells.iter().map(Vec::as_slice)
    }

    /// Translates so that the minimum along axis 1 is 1 and the minimum
    /// along every other axis is 0.
    pub fn normalized(&self) -> Self {
        let mut mins = vec![i64::MAX; self.dimension];
        for c in &self.cells {
            for (m, &x) in mins.iter_mut().zip(c) {
                *m = (*m).min(x);
            }
        }
        if let Some(m) = mins.first_mut() {
            *m -= 1;
        }
        let cells = self
            .cells
            .iter()
            .map(|c| c.iter().zip(&mins).map(|(x, m)| x - m).collect())
            .collect();
        Self {
            dimension: self.dimension,
            cells,
        }
    }

    /// Connectivity through shared `(d-1)`-faces.
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.cells.first() else {
            return false;
        };
        let seen = self.flood(start, &[1, -1]);
        seen.len() == self.cells.len()
    }

    fn flood<'a>(&'a self, start: &'a Vec<i64>, steps: &[i64]) -> BTreeSet<&'a Vec<i64>> {
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        let mut probe = Vec::with_capacity(self.dimension);
        while let Some(cell) = queue.pop_front() {
            for axis in 0..self.dimension {
                for &step in steps {
                    probe.clear();
                    probe.extend_from_slice(cell);
                    probe[axis] += step;
                    if let Some(n) = self.cells.get(&probe) {
                        if seen.insert(n) {
                            queue.push_back(n);
                        }
                    }
                }
            }
        }
        seen
    }

    /// Image of the cells in the plane of axis 1 and axis `l` (1-based),
    /// as `(x_1, x_l)` pairs.
    pub fn project_plane(&self, l: usize) -> Result<CellSet2D> {
        if l < 2 || l > self.dimension {
            return Err(Error::domain("projection axis must lie in 2..=d"));
        }
        Ok(self.cells.iter().map(|c| (c[0], c[l - 1])).collect())
    }

    /// Sum over `l = 2..=d` of the number of cells in [`Self::project_plane`].
    pub fn lateral_area(&self) -> u64 {
        (2..=self.dimension)
            .map(|l| self.project_plane(l).map_or(0, |p| p.len() as u64))
            .sum()
    }

    /// Number of distinct axis-1 coordinates.
    pub fn width(&self) -> usize {
        self.cells
            .iter()
            .map(|c| c[0])
            .collect::<BTreeSet<_>>()
            .len()
    }
}

/// Definition-level check on raw cells: connected, every axis-1 slab is a
/// full box, the slabs are contiguous, and every cell is reachable from the
/// root by positive unit steps. The root is the unique cell with no
/// neighbour one step below it on any axis.
pub fn generic_is_valid_dpp(c: &CellSetD) -> bool {
    if c.is_empty() || c.dimension < 2 || !c.is_connected() {
        return false;
    }
    let mut slabs: BTreeMap<i64, Vec<&Vec<i64>>> = BTreeMap::new();
    for cell in &c.cells {
        slabs.entry(cell[0]).or_default().push(cell);
    }
    let (first, last) = match (slabs.keys().next(), slabs.keys().next_back()) {
        (Some(&a), Some(&b)) => (a, b),
        _ => return false,
    };
    if (last - first + 1) as usize != slabs.len() {
        return false;
    }
    for slab in slabs.values() {
        let mut lo = vec![i64::MAX; c.dimension];
        let mut hi = vec![i64::MIN; c.dimension];
        for cell in slab {
            for a in 1..c.dimension {
                lo[a] = lo[a].min(cell[a]);
                hi[a] = hi[a].max(cell[a]);
            }
        }
        let box_volume: i64 = (1..c.dimension).map(|a| hi[a] - lo[a] + 1).product();
        if box_volume != slab.len() as i64 {
            return false;
        }
    }

    let mut probe = Vec::with_capacity(c.dimension);
    let mut roots = c.cells.iter().filter(|cell| {
        (0..c.dimension).all(|a| {
            probe.clear();
            probe.extend_from_slice(cell);
            probe[a] -= 1;
            !c.cells.contains(&probe)
        })
    });
    let (Some(root), None) = (roots.next(), roots.next()) else {
        return false;
    };
    c.flood(root, &[1]).len() == c.len()
}

/// Counter shared by the oracle search.
struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

struct OracleSearch {
    dimension: usize,
    width: usize,
    area: u64,
    window: i64,
    budget: Budget,
    found: BTreeSet<CellSetD>,
}

impl OracleSearch {
    fn stack(&mut self, strata: &mut Vec<Plateau>, used: u64) -> Result<()> {
        if strata.len() == self.width {
            let mut cells = BTreeSet::new();
            for (s, p) in strata.iter().enumerate() {
                push_box(s as i64 + 1, p, &mut cells);
            }
            let set = CellSetD {
                dimension: self.dimension,
                cells,
            };
            if set.lateral_area() == self.area && generic_is_valid_dpp(&set) {
                self.found.insert(set.normalized());
            }
            return Ok(());
        }
        let lateral = self.dimension as u64 - 1;
        let later = (self.width - strata.len() - 1) as u64 * lateral;
        let Some(spare) = self.area.checked_sub(used + later) else {
            return Ok(());
        };
        let mut extents = Vec::with_capacity(self.dimension - 1);
        let mut offsets = Vec::with_capacity(self.dimension - 1);
        self.place_axes(strata, &mut extents, &mut offsets, used, spare)
    }

    /// Chooses extent and offset on each lateral axis of the next stratum.
    /// `spare` bounds the total extent of this stratum.
    fn place_axes(
        &mut self,
        strata: &mut Vec<Plateau>,
        extents: &mut Vec<u32>,
        offsets: &mut Vec<i64>,
        used: u64,
        spare: u64,
    ) -> Result<()> {
        let axis = extents.len();
        let lateral = self.dimension - 1;
        if axis == lateral {
            self.budget.tick()?;
            let total: u64 = extents.iter().map(|&e| u64::from(e)).sum();
            strata.push(Plateau {
                extents: extents.clone(),
                offsets: offsets.clone(),
            });
            let r = self.stack(strata, used + total);
            strata.pop();
            return r;
        }
        let taken: u64 = extents.iter().map(|&e| u64::from(e)).sum();
        let remaining_axes = (lateral - axis - 1) as u64;
        let max_extent = spare.saturating_sub(taken + remaining_axes);
        for extent in 1..=max_extent as u32 {
            let span = i64::from(extent);
            let (lo, hi) = match strata.last() {
                None => (0, 0),
                Some(prev) => {
                    // consecutive slabs must share a face to be connected
                    let p_lo = prev.offsets[axis];
                    let p_hi = p_lo + i64::from(prev.extents[axis]) - 1;
                    (p_lo - span + 1, p_hi)
                }
            };
            let lo = lo.max(-self.window);
            let hi = hi.min(self.window - span + 1);
            for offset in lo..=hi {
                extents.push(extent);
                offsets.push(offset);
                let r = self.place_axes(strata, extents, offsets, used, spare);
                extents.pop();
                offsets.pop();
                r?;
            }
        }
        Ok(())
    }
}

/// Brute-force list of directed plateau polyhypercubes as normalized cell
/// sets, sorted. Stacks `k` boxes inside the window `[-n, n]` on every
/// lateral axis and keeps those accepted by [`generic_is_valid_dpp`] whose
/// measured lateral area is `n`. Fails with [`Error::BudgetExceeded`] once
/// more than `budget` partial stackings have been visited.
pub fn oracle_enumerate_dpp(d: usize, k: usize, n: usize, budget: u64) -> Result<Vec<CellSetD>> {
    check_dims(d, k)?;
    let mut search = OracleSearch {
        dimension: d,
        width: k,
        area: n as u64,
        window: n as i64,
        budget: Budget {
            limit: budget,
            used: 0,
        },
        found: BTreeSet::new(),
    };
    search.stack(&mut Vec::with_capacity(k), 0)?;
    Ok(search.found.into_iter().collect())
}

/// Count from [`oracle_enumerate_dpp`].
pub fn oracle_count_dpp(d: usize, k: usize, n: usize, budget: u64) -> Result<BigUint> {
    oracle_enumerate_dpp(d, k, n, budget).map(|v| BigUint::from(v.len()))
}

fn check_dims(d: usize, k: usize) -> Result<()> {
    if d < 3 {
        return Err(Error::domain("dimension must be at least 3"));
    }
    if k < 1 {
        return Err(Error::domain("width must be at least 1"));
    }
    Ok(())
}

/// Every directed plateau polyhypercube of dimension `d`, width `k` and
/// lateral area `n`, built from one directed column-convex trace per
/// lateral axis. Sorted by the tuple of projections.
pub fn enumerate_dpp(d: usize, k: usize, n: usize) -> Result<Vec<DirectedPlateauPolyhypercube>> {
    check_dims(d, k)?;
    let lateral = d - 1;
    let mut out = Vec::new();
    if n < lateral * k {
        return Ok(out);
    }
    // one axis takes at most n minus the minimum of the others
    let max_area = n - (lateral - 1) * k;
    let by_area: Vec<Vec<ColumnConvexPolyomino>> = (0..=max_area)
        .map(|j| enumerate_dccp(k, j))
        .collect::<Result<_>>()?;
    let mut traces = Vec::with_capacity(lateral);
    assemble(d, n, &by_area, &mut traces, &mut out)?;
    out.sort();
    Ok(out)
}

fn assemble(
    d: usize,
    remaining: usize,
    by_area: &[Vec<ColumnConvexPolyomino>],
    traces: &mut Vec<ColumnConvexPolyomino>,
    out: &mut Vec<DirectedPlateauPolyhypercube>,
) -> Result<()> {
    let lateral = d - 1;
    if traces.len() == lateral - 1 {
        for p in by_area.get(remaining).into_iter().flatten() {
            traces.push(p.clone());
            out.push(DirectedPlateauPolyhypercube::from_projections(d, traces)?);
            traces.pop();
        }
        return Ok(());
    }
    for j in 0..=remaining.min(by_area.len() - 1) {
        for p in &by_area[j] {
            traces.push(p.clone());
            assemble(d, remaining - j, by_area, traces, out)?;
            traces.pop();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plateau(extents: &[u32], offsets: &[i64]) -> Plateau {
        Plateau::new(extents.to_vec(), offsets.to_vec()).unwrap()
    }

    fn dpp(d: usize, strata: &[(&[u32], &[i64])]) -> DirectedPlateauPolyhypercube {
        DirectedPlateauPolyhypercube::new(d, strata.iter().map(|(e, o)| plateau(e, o)).collect())
            .unwrap()
    }

    #[test]
    fn projection_of_a_box() {
        let p = dpp(3, &[(&[2, 3], &[0, 0])]);
        assert_eq!(p.project(2).unwrap().heights(), vec![2]);
        assert_eq!(p.project(3).unwrap().heights(), vec![3]);
        assert!(matches!(p.project(1), Err(Error::Domain(_))));
        assert!(matches!(p.project(4), Err(Error::Domain(_))));
    }

    #[test]
    fn projection_of_stacked_unit_strata() {
        let p = dpp(3, &[(&[1, 1], &[0, 0]), (&[1, 1], &[0, 0])]);
        let expect = ColumnConvexPolyomino::from_heights_bottoms(&[1, 1], &[0, 0]).unwrap();
        assert_eq!(p.project(2).unwrap(), expect);
        assert_eq!(p.project(3).unwrap(), expect);
    }

    #[test]
    fn lateral_area_examples() {
        assert_eq!(dpp(3, &[(&[4, 7], &[0, 0])]).lateral_area(), 11);
        assert_eq!(dpp(4, &[(&[1, 1, 1], &[0, 0, 0])]).lateral_area(), 3);
        assert_eq!(
            dpp(3, &[(&[2, 1], &[0, 0]), (&[1, 2], &[1, 0])]).lateral_area(),
            6
        );
    }

    #[test]
    fn constructor_translates_and_validates() {
        let p = dpp(3, &[(&[2, 2], &[5, -3]), (&[1, 1], &[6, -2])]);
        assert_eq!(p.strata()[0].offsets(), &[0, 0]);
        assert_eq!(p.strata()[1].offsets(), &[1, 1]);
        // second stratum starts below the first on axis 2
        let bad = DirectedPlateauPolyhypercube::new(
            3,
            alloc::vec![plateau(&[2, 1], &[0, 0]), plateau(&[2, 1], &[-1, 0])],
        );
        assert!(matches!(bad, Err(Error::InvalidShape(_))));
        assert!(DirectedPlateauPolyhypercube::new(2, alloc::vec![plateau(&[1], &[0])]).is_err());
        assert!(DirectedPlateauPolyhypercube::new(3, alloc::vec![plateau(&[1], &[0])]).is_err());
    }

    #[test]
    fn rasterize_examples() {
        let one = dpp(3, &[(&[1, 1], &[0, 0])]).rasterize();
        assert_eq!(one, CellSetD::new(3, [alloc::vec![1, 0, 0]]).unwrap());
        let two = dpp(3, &[(&[2, 1], &[0, 0])]).rasterize();
        assert_eq!(
            two,
            CellSetD::new(3, [alloc::vec![1, 0, 0], alloc::vec![1, 1, 0]]).unwrap()
        );
        let p = dpp(4, &[(&[2, 3, 1], &[0, 0, 0]), (&[1, 2, 2], &[1, 2, 0])]);
        assert_eq!(p.rasterize().len() as u64, p.hypervolume());
        assert_eq!(p.hypervolume(), 6 + 4);
    }

    #[test]
    fn enumerate_examples() {
        let boxes = enumerate_dpp(3, 1, 4).unwrap();
        let shapes: Vec<Vec<u32>> = boxes
            .iter()
            .map(|p| p.strata()[0].extents().to_vec())
            .collect();
        assert_eq!(
            shapes,
            alloc::vec![alloc::vec![1, 3], alloc::vec![2, 2], alloc::vec![3, 1]]
        );

        let stacked = enumerate_dpp(3, 2, 4).unwrap();
        assert_eq!(
            stacked,
            alloc::vec![dpp(3, &[(&[1, 1], &[0, 0]), (&[1, 1], &[0, 0])])]
        );

        assert_eq!(enumerate_dpp(4, 1, 5).unwrap().len(), 6);
        assert!(enumerate_dpp(3, 2, 3).unwrap().is_empty());
        assert!(matches!(enumerate_dpp(2, 1, 3), Err(Error::Domain(_))));
        assert!(matches!(enumerate_dpp(3, 0, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn generic_checker_examples() {
        assert!(generic_is_valid_dpp(
            &dpp(3, &[(&[2, 3], &[0, 0])]).rasterize()
        ));
        let l_shape = CellSetD::new(
            3,
            [
                alloc::vec![1, 0, 0],
                alloc::vec![1, 1, 0],
                alloc::vec![1, 0, 1],
            ],
        )
        .unwrap();
        assert!(!generic_is_valid_dpp(&l_shape));
        // second stratum hangs below the first: not directed
        let hang = CellSetD::new(
            3,
            [
                alloc::vec![1, 1, 0],
                alloc::vec![2, 0, 0],
                alloc::vec![2, 1, 0],
            ],
        )
        .unwrap();
        assert!(!generic_is_valid_dpp(&hang));
        // gap along axis 1
        let gap = CellSetD::new(3, [alloc::vec![1, 0, 0], alloc::vec![3, 0, 0]]).unwrap();
        assert!(!generic_is_valid_dpp(&gap));
    }

    #[test]
    fn oracle_examples() {
        let b = DEFAULT_NODE_BUDGET;
        assert_eq!(oracle_count_dpp(3, 2, 5, b).unwrap(), BigUint::from(6u32));
        assert_eq!(oracle_count_dpp(4, 1, 3, b).unwrap(), BigUint::from(1u32));
        assert_eq!(oracle_count_dpp(3, 1, 2, b).unwrap(), BigUint::from(1u32));
        assert!(matches!(
            oracle_count_dpp(2, 1, 2, b),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn oracle_respects_budget() {
        assert_eq!(
            oracle_count_dpp(3, 2, 8, 5),
            Err(Error::BudgetExceeded { budget: 5 })
        );
    }

    #[test]
    fn cell_set_lateral_area_matches_structured() {
        for p in enumerate_dpp(4, 2, 8).unwrap() {
            assert_eq!(p.rasterize().lateral_area(), p.lateral_area());
        }
    }
}
