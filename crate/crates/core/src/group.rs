use crate::error::{Error, Result};
use crate::orbit;
use crate::perm::Permutation;

/// A permutation group given by generators on a fixed domain `{0, …, n-1}`.
///
/// Generators are normalized on construction: identities are dropped and
/// duplicates removed. The trivial group has an empty generator list but
/// keeps its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        let mut kept: Vec<Permutation> = Vec::new();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
            if !g.is_identity() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(PermutationGroup {
            degree,
            generators: kept,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_trivial_group(&self) -> bool {
        self.generators.is_empty()
    }

    /// One orbit on the domain per cell, in the deterministic order used by
    /// `orbit::orbit`.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if seen[p] {
                continue;
            }
            let orb = orbit::orbit(&self.generators, p, self.degree).expect("point in range");
            for &q in &orb {
                seen[q] = true;
            }
            out.push(orb);
        }
        out
    }
}

/// True iff the group has a single orbit. Degree 0 and 1 are transitive by
/// convention.
pub fn is_transitive(group: &PermutationGroup) -> bool {
    if group.degree() <= 1 {
        return true;
    }
    let orb = orbit::orbit(group.generators(), 0, group.degree()).expect("point in range");
    orb.len() == group.degree()
}
