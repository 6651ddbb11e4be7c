//! Quotient actions on block systems and their kernels.

use crate::blocks::{induced_cell_permutation, BlockSystem};
use crate::chain::{BuildOptions, StabilizerChain};
use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// The action induced on the cells of a block system, with the generator
/// correspondence kept index-aligned with the source group.
#[derive(Clone, Debug)]
pub struct QuotientAction {
    image: PermutationGroup,
    /// `gen_images[i]` is the cell permutation induced by the i-th generator
    /// of the source group (before normalization).
    gen_images: Vec<Permutation>,
    system: BlockSystem,
}

impl PartialEq for QuotientAction {
    fn eq(&self, other: &Self) -> bool {
        self.gen_images == other.gen_images && self.system == other.system
    }
}

impl QuotientAction {
    pub fn image(&self) -> &PermutationGroup {
        &self.image
    }

    pub fn gen_images(&self) -> &[Permutation] {
        &self.gen_images
    }

    pub fn system(&self) -> &BlockSystem {
        &self.system
    }
}

/// Computes the quotient action of `group` on the cells of `system`.
pub fn quotient_action(
    group: &PermutationGroup,
    system: &BlockSystem,
) -> Result<QuotientAction> {
    let mut gen_images = Vec::with_capacity(group.generators().len());
    for (gen_index, g) in group.generators().iter().enumerate() {
        match induced_cell_permutation(g, system) {
            Some(q) => gen_images.push(q),
            None => return Err(Error::NotInvariant { gen_index }),
        }
    }
    let image = PermutationGroup::new(system.cell_count(), gen_images.clone())?;
    Ok(QuotientAction {
        image,
        gen_images,
        system: system.clone(),
    })
}

/// Generators of the kernel of the action on cells: the subgroup fixing
/// every cell setwise.
///
/// Works on the extended domain `points + cells`, forcing every cell point
/// into the base; the strong generators below those levels are then exactly
/// the elements acting trivially on cells. This is the usual
/// homomorphism-kernel construction with the quotient's chain carrying its
/// point preimages along.
pub fn kernel_of_block_action(
    group: &PermutationGroup,
    system: &BlockSystem,
) -> Result<PermutationGroup> {
    let n = group.degree();
    let m = system.cell_count();
    let mut extended_gens = Vec::with_capacity(group.generators().len());
    for (gen_index, g) in group.generators().iter().enumerate() {
        let induced = induced_cell_permutation(g, system)
            .ok_or(Error::NotInvariant { gen_index })?;
        let mut images: Vec<usize> = Vec::with_capacity(n + m);
        images.extend(g.images().iter().copied());
        images.extend(induced.images().iter().map(|&c| n + c));
        extended_gens.push(Permutation::from_images(images)?);
    }
    let chain = StabilizerChain::build_with_options(
        n + m,
        &extended_gens,
        &BuildOptions {
            base_prefix: (n..n + m).collect(),
        },
    );
    let kernel_gens: Vec<Permutation> = if chain.level_count() <= m {
        Vec::new()
    } else {
        chain
            .level_generators(m)
            .iter()
            .map(|g| restrict(g, n))
            .collect()
    };
    PermutationGroup::new(n, kernel_gens)
}

/// Restricts an extended-domain permutation to the first `n` points.
fn restrict(g: &Permutation, n: usize) -> Permutation {
    Permutation::from_images(g.images()[..n].to_vec())
        .expect("extended permutations preserve the point range")
}
