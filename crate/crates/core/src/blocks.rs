//! Invariant partitions (block systems) of a group action.

use crate::error::{Error, Result};
use crate::group::{is_transitive, PermutationGroup};
use crate::perm::Permutation;

/// A partition of the domain into disjoint nonempty cells. Cells are sorted
/// by their smallest point and each cell is sorted, so equal partitions
/// compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl BlockSystem {
    /// Builds a system from a cell-index map, renumbering cells by their
    /// smallest contained point.
    pub fn from_cell_map(cell_of_raw: &[usize]) -> BlockSystem {
        let degree = cell_of_raw.len();
        // Map raw labels to canonical indices ordered by first occurrence;
        // first occurrence order equals smallest-point order.
        let mut canonical: Vec<Option<usize>> = vec![None; degree];
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut cell_of = vec![0; degree];
        for p in 0..degree {
            let raw = cell_of_raw[p];
            let idx = match canonical[raw] {
                Some(i) => i,
                None => {
                    let i = cells.len();
                    canonical[raw] = Some(i);
                    cells.push(Vec::new());
                    i
                }
            };
            cells[idx].push(p);
            cell_of[p] = idx;
        }
        BlockSystem { cells, cell_of }
    }

    pub fn singletons(degree: usize) -> BlockSystem {
        BlockSystem {
            cells: (0..degree).map(|p| vec![p]).collect(),
            cell_of: (0..degree).collect(),
        }
    }

    pub fn one_cell(degree: usize) -> BlockSystem {
        BlockSystem {
            cells: vec![(0..degree).collect()],
            cell_of: vec![0; degree],
        }
    }

    pub fn degree(&self) -> usize {
        self.cell_of.len()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell_of(&self, point: usize) -> usize {
        self.cell_of[point]
    }

    /// Trivial means all singletons or a single cell.
    pub fn is_trivial(&self) -> bool {
        self.cells.len() <= 1 || self.cells.len() == self.degree()
    }

    /// Checks G-invariance: every generator maps each cell onto a cell.
    /// Returns the index of the first violating generator.
    pub fn check_invariant(&self, gens: &[Permutation]) -> std::result::Result<(), usize> {
        for (gen_index, g) in gens.iter().enumerate() {
            for cell in &self.cells {
                let target = self.cell_of[g.image(cell[0])];
                if cell.iter().any(|&p| self.cell_of[g.image(p)] != target)
                    || self.cells[target].len() != cell.len()
                {
                    return Err(gen_index);
                }
            }
        }
        Ok(())
    }

    pub fn is_invariant(&self, group: &PermutationGroup) -> bool {
        self.check_invariant(group.generators()).is_ok()
    }
}

/// The partition of the domain into N-orbits. If N is normal in an ambient
/// transitive group, the result is a block system for that group.
pub fn orbit_partition(subgroup: &PermutationGroup) -> BlockSystem {
    let degree = subgroup.degree();
    let mut cell_of = vec![usize::MAX; degree];
    for (index, orbit) in subgroup.orbits().into_iter().enumerate() {
        for &p in &orbit {
            cell_of[p] = index;
        }
    }
    BlockSystem::from_cell_map(&cell_of)
}

/// The finest G-invariant partition in which `a` and `b` share a cell
/// (union-find merge algorithm). Returns the one-cell system iff no proper
/// system merges them.
pub fn minimal_block_system(
    group: &PermutationGroup,
    a: usize,
    b: usize,
) -> Result<BlockSystem> {
    let degree = group.degree();
    for &p in &[a, b] {
        if p >= degree {
            return Err(Error::PointOutOfRange { point: p, degree });
        }
    }
    if a == b {
        return Err(Error::EqualPoints);
    }
    if !is_transitive(group) {
        return Err(Error::NotTransitive);
    }
    let mut uf = UnionFind::new(degree);
    uf.union(a, b);
    let mut queue = vec![(a, b)];
    while let Some((x, y)) = queue.pop() {
        for g in group.generators() {
            let (gx, gy) = (g.image(x), g.image(y));
            if uf.union(gx, gy) {
                queue.push((gx, gy));
            }
        }
    }
    let roots: Vec<usize> = (0..degree).map(|p| uf.find(p)).collect();
    Ok(BlockSystem::from_cell_map(&roots))
}

/// A maximal G-invariant partition: a proper system whose quotient action is
/// primitive, obtained by iterated coarsening. Requires a transitive,
/// imprimitive group.
pub fn some_maximal_block_system(group: &PermutationGroup) -> Result<BlockSystem> {
    if !is_transitive(group) {
        return Err(Error::NotTransitive);
    }
    let degree = group.degree();
    // cell_of for the current coarsening of the original domain.
    let mut system = match first_nontrivial_system(group)? {
        Some(s) => s,
        None => return Err(Error::PrimitiveInput),
    };
    loop {
        let quotient = induced_cell_action(group, &system);
        match first_nontrivial_system(&quotient)? {
            None => return Ok(system),
            Some(coarser) => {
                // Compose: point -> cell -> coarser cell.
                let cell_of: Vec<usize> = (0..degree)
                    .map(|p| coarser.cell_of(system.cell_of(p)))
                    .collect();
                system = BlockSystem::from_cell_map(&cell_of);
            }
        }
    }
}

/// The finest nontrivial system merging 0 with the smallest possible point,
/// or None when the action is primitive. Degree <= 2 admits none.
fn first_nontrivial_system(group: &PermutationGroup) -> Result<Option<BlockSystem>> {
    let degree = group.degree();
    for b in 1..degree {
        let system = minimal_block_system(group, 0, b)?;
        if system.cell_count() > 1 {
            return Ok(Some(system));
        }
    }
    Ok(None)
}

/// Induced action on cells, for internal use while coarsening; the public
/// quotient operation with error checking lives in `quotient`.
pub(crate) fn induced_cell_action(
    group: &PermutationGroup,
    system: &BlockSystem,
) -> PermutationGroup {
    let gens = group
        .generators()
        .iter()
        .map(|g| induced_cell_permutation(g, system).expect("system invariant under group"))
        .collect();
    PermutationGroup::new(system.cell_count(), gens).expect("induced degree consistent")
}

pub(crate) fn induced_cell_permutation(
    g: &Permutation,
    system: &BlockSystem,
) -> Option<Permutation> {
    let mut images = Vec::with_capacity(system.cell_count());
    for cell in system.cells() {
        let target = system.cell_of(g.image(cell[0]));
        if cell.iter().any(|&p| system.cell_of(g.image(p)) != target) {
            return None;
        }
        images.push(target);
    }
    Permutation::from_images(images).ok()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if two distinct classes were merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // Smaller root wins so cell numbering is stable.
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
