//! Constructions lifting distinguishing colorings through a block system.
//!
//! Both take a block system whose kernel is semiregular (for a semiprimitive
//! group, any block-action kernel is: it is an intransitive normal
//! subgroup).

use crate::blocks::BlockSystem;
use crate::chain::StabilizerChain;
use crate::classify::is_semiregular;
use crate::coloring::{stabilizer_is_trivial, Coloring};
use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::quotient::{kernel_of_block_action, quotient_action};

/// Lifts a distinguishing coloring of the quotient action to one of the full
/// domain: each point takes its cell's color, then one point of a chosen
/// color-0 cell moves to color 1.
///
/// The moved-point argument needs a cell of size >= 2; a singleton chosen
/// cell forces the kernel to be trivial, in which case the plain lift is
/// already distinguishing and is returned unmoved.
pub fn extend_partition(
    group: &PermutationGroup,
    system: &BlockSystem,
    quotient_coloring: &Coloring,
) -> Result<Coloring> {
    let kernel = kernel_of_block_action(group, system)?;
    if !is_semiregular(&kernel) {
        return Err(Error::PreconditionFailed(
            "kernel of the block action is not semiregular".into(),
        ));
    }
    if quotient_coloring.len() != system.cell_count() {
        return Err(Error::LengthMismatch {
            got: quotient_coloring.len(),
            want: system.cell_count(),
        });
    }
    if quotient_coloring.color_count() < 2 {
        return Err(Error::PreconditionFailed(
            "quotient coloring must use at least two colors".into(),
        ));
    }
    let quotient = quotient_action(group, system)?;
    let quotient_chain = StabilizerChain::build(quotient.image());
    if stabilizer_is_trivial(&quotient_chain, quotient_coloring)?.is_some() {
        return Err(Error::PreconditionFailed(
            "quotient coloring is not distinguishing".into(),
        ));
    }
    let mut colors: Vec<usize> = (0..group.degree())
        .map(|p| quotient_coloring.color(system.cell_of(p)))
        .collect();
    // Smallest-index color-0 cell; its smallest point is the moved point.
    let chosen = (0..system.cell_count())
        .find(|&c| quotient_coloring.color(c) == 0)
        .expect("color 0 is nonempty");
    let cell = &system.cells()[chosen];
    if cell.len() >= 2 {
        colors[cell[0]] = 1;
    }
    Coloring::new(colors)
}

/// Builds a subset meeting the i-th cell (smallest-point order) in exactly
/// i-1 points, returned as its 2-coloring (color 1 = in the subset). With a
/// semiregular kernel and every cell of size >= cell count - 1, its setwise
/// stabilizer is trivial, so the group has distinguishing number 2.
pub fn graded_subset(group: &PermutationGroup, system: &BlockSystem) -> Result<Coloring> {
    let m = system.cell_count();
    if m < 2 {
        return Err(Error::PreconditionFailed(
            "need at least two cells".into(),
        ));
    }
    for cell in system.cells() {
        if cell.len() + 1 < m {
            return Err(Error::PreconditionFailed(format!(
                "cell of size {} is too small for {} cells",
                cell.len(),
                m
            )));
        }
    }
    let kernel = kernel_of_block_action(group, system)?;
    if !is_semiregular(&kernel) {
        return Err(Error::PreconditionFailed(
            "kernel of the block action is not semiregular".into(),
        ));
    }
    let mut subset = Vec::new();
    for (i, cell) in system.cells().iter().enumerate() {
        subset.extend(cell.iter().take(i));
    }
    Coloring::from_subset(group.degree(), &subset)
}
