//! Base and strong generating sets.
//!
//! Chains are built by a randomized Schreier–Sims pass followed by a full
//! deterministic Schreier-generator verification, so the resulting order and
//! membership tests are exact, never probabilistic. Orbits are only ever
//! extended (never rebuilt), which keeps transversal witnesses stable while
//! the verification loop runs to a fixpoint.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;
use crate::rng::SplitMix64;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Strong generators fixing all earlier base points.
    gens: Vec<Permutation>,
    /// Basic orbit of `base_point`, in discovery order.
    orbit: Vec<usize>,
    /// Transversal: `transversal[p]` maps `base_point` to `p`.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            transversal,
        }
    }

    /// Extends the basic orbit after `self.gens` changed. Existing witnesses
    /// are preserved.
    fn extend_orbit(&mut self) {
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            for g in &self.gens {
                let q = g.image(p);
                if self.transversal[q].is_none() {
                    let w = self.transversal[p]
                        .as_ref()
                        .expect("orbit point has witness")
                        .compose_unchecked(g);
                    self.transversal[q] = Some(w);
                    self.orbit.push(q);
                }
            }
        }
    }
}

/// A verified base and strong generating set for a permutation group.
///
/// Immutable after construction; all queries are read-only.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
    order: BigUint,
}

/// Options for chain construction.
#[derive(Clone, Debug, Default)]
pub(crate) struct BuildOptions {
    /// Forced initial base points, in order.
    pub base_prefix: Vec<usize>,
}

impl StabilizerChain {
    /// Builds and verifies a chain for the group.
    pub fn build(group: &PermutationGroup) -> StabilizerChain {
        Self::build_with_options(group.degree(), group.generators(), &BuildOptions::default())
    }

    /// Builds a chain whose base starts with the given points (in order).
    pub fn build_with_base(group: &PermutationGroup, prefix: &[usize]) -> Result<StabilizerChain> {
        for &p in prefix {
            if p >= group.degree() {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: group.degree(),
                });
            }
        }
        Ok(Self::build_with_options(
            group.degree(),
            group.generators(),
            &BuildOptions {
                base_prefix: prefix.to_vec(),
            },
        ))
    }

    pub(crate) fn build_with_options(
        degree: usize,
        gens: &[Permutation],
        opts: &BuildOptions,
    ) -> StabilizerChain {
        let mut builder = Builder {
            degree,
            levels: Vec::new(),
        };
        for &p in &opts.base_prefix {
            builder.levels.push(Level::new(degree, p));
        }
        for g in gens {
            builder.add(g.clone());
        }
        builder.random_phase(gens);
        builder.verify();
        let mut order = BigUint::one();
        for level in &builder.levels {
            order *= BigUint::from(level.orbit.len());
        }
        StabilizerChain {
            degree,
            levels: builder.levels,
            order,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// Order as `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.order).ok()
    }

    /// Base points, one per level.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    pub fn base_point(&self, level: usize) -> usize {
        self.levels[level].base_point
    }

    pub fn basic_orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    pub fn transversal_element(&self, level: usize, point: usize) -> Option<&Permutation> {
        self.levels[level].transversal[point].as_ref()
    }

    /// Strong generators of the whole group (the level-0 set), or the
    /// original trivial list.
    pub fn strong_generators(&self) -> &[Permutation] {
        static EMPTY: Vec<Permutation> = Vec::new();
        self.levels.first().map(|l| &l.gens).unwrap_or(&EMPTY)
    }

    /// Strong generators fixing the first `level` base points.
    pub fn level_generators(&self, level: usize) -> &[Permutation] {
        &self.levels[level].gens
    }

    /// Sifts `p` through the chain: returns the residue and the level at
    /// which sifting stopped (level == level_count means fully sifted).
    pub fn sift(&self, p: &Permutation) -> (Permutation, usize) {
        let mut residue = p.clone();
        for (i, level) in self.levels.iter().enumerate() {
            let delta = residue.image(level.base_point);
            match &level.transversal[delta] {
                Some(u) => {
                    residue = residue.compose_unchecked(&u.inverse());
                }
                None => return (residue, i),
            }
        }
        (residue, self.levels.len())
    }

    /// Membership test: true iff `p` sifts to the identity.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        let (residue, level) = self.sift(p);
        Ok(level == self.levels.len() && residue.is_identity())
    }

    /// Streams every group element exactly once as a product of transversal
    /// elements, provided the order does not exceed `cap`.
    pub fn elements(&self, cap: u64) -> Result<Elements<'_>> {
        match self.order_u64() {
            Some(o) if o <= cap => Ok(Elements::new(self)),
            _ => Err(Error::OrderExceedsCap {
                order: self.order.to_string(),
                cap,
            }),
        }
    }

    /// Generators of the stabilizer of `point`, with orbit-stabilizer
    /// guaranteed by the verified chain.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermutationGroup> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let gens = if self.levels.first().map(|l| l.base_point) == Some(point) {
            self.levels
                .get(1)
                .map(|l| l.gens.clone())
                .unwrap_or_default()
        } else {
            let group = PermutationGroup::new(self.degree, self.strong_generators().to_vec())
                .expect("strong generators share the chain degree");
            let chain = Self::build_with_base(&group, &[point])?;
            chain
                .levels
                .get(1)
                .map(|l| l.gens.clone())
                .unwrap_or_default()
        };
        PermutationGroup::new(self.degree, gens)
    }

    /// The unique-up-to-stabilizer element mapping `pairs[i].0` to
    /// `pairs[i].1` for all `i`, if one exists.
    pub fn element_mapping(&self, pairs: &[(usize, usize)]) -> Result<Option<Permutation>> {
        let points: Vec<usize> = pairs.iter().map(|&(a, _)| a).collect();
        let group = PermutationGroup::new(self.degree, self.strong_generators().to_vec())?;
        let chain = Self::build_with_base(&group, &points)?;
        let mut outer = Permutation::identity(self.degree);
        for (i, &(_, target)) in pairs.iter().enumerate() {
            let delta = outer.inverse().image(target);
            match chain.levels[i].transversal[delta].as_ref() {
                Some(u) => outer = u.compose_unchecked(&outer),
                None => return Ok(None),
            }
        }
        Ok(Some(outer))
    }

    /// Rebuilds the generated group from the strong generators.
    pub fn group(&self) -> PermutationGroup {
        PermutationGroup::new(self.degree, self.strong_generators().to_vec())
            .expect("strong generators share the chain degree")
    }
}

struct Builder {
    degree: usize,
    levels: Vec<Level>,
}

impl Builder {
    /// Sifts `g` and installs any nontrivial residue as a strong generator.
    /// Returns true if the chain changed.
    fn add(&mut self, g: Permutation) -> bool {
        let (residue, stuck) = self.sift(&g);
        if residue.is_identity() {
            return false;
        }
        if stuck == self.levels.len() {
            let point = self.choose_base_point(&residue);
            self.levels.push(Level::new(self.degree, point));
        }
        for i in 0..=stuck {
            self.levels[i].gens.push(residue.clone());
            self.levels[i].extend_orbit();
        }
        true
    }

    fn sift(&self, p: &Permutation) -> (Permutation, usize) {
        let mut residue = p.clone();
        for (i, level) in self.levels.iter().enumerate() {
            let delta = residue.image(level.base_point);
            match &level.transversal[delta] {
                Some(u) => residue = residue.compose_unchecked(&u.inverse()),
                None => return (residue, i),
            }
        }
        (residue, self.levels.len())
    }

    /// First point moved by the generator.
    fn choose_base_point(&self, g: &Permutation) -> usize {
        g.first_moved_point().expect("nonidentity permutation")
    }

    /// Monte-Carlo acceleration: sift a few pseudo-random words so the
    /// verification pass starts close to complete. Seed is fixed so builds
    /// are reproducible.
    fn random_phase(&mut self, gens: &[Permutation]) {
        if gens.is_empty() {
            return;
        }
        let mut rng = SplitMix64::new(0x5eed_0bb5 ^ (self.degree as u64) << 8);
        let mut consecutive_clean = 0;
        let mut rounds = 0;
        while consecutive_clean < 8 && rounds < 64 {
            rounds += 1;
            let len = 2 + rng.below(5) as usize;
            let mut word = Permutation::identity(self.degree);
            for _ in 0..len {
                let g = &gens[rng.below(gens.len() as u64) as usize];
                word = word.compose_unchecked(g);
            }
            if self.add(word) {
                consecutive_clean = 0;
            } else {
                consecutive_clean += 1;
            }
        }
    }

    /// Deterministic verification: every Schreier generator at every level
    /// must sift to the identity. Runs to a fixpoint, so the final chain is
    /// an exact BSGS.
    fn verify(&mut self) {
        loop {
            let mut changed = false;
            let mut i = 0;
            while i < self.levels.len() {
                let mut oi = 0;
                while oi < self.levels[i].orbit.len() {
                    let mut gi = 0;
                    while gi < self.levels[i].gens.len() {
                        let p = self.levels[i].orbit[oi];
                        let u = self.levels[i].transversal[p]
                            .as_ref()
                            .expect("orbit point has witness")
                            .clone();
                        let g = self.levels[i].gens[gi].clone();
                        let q = g.image(p);
                        let v = self.levels[i].transversal[q]
                            .as_ref()
                            .expect("orbit closed under generators")
                            .clone();
                        // Schreier generator u·g·v^{-1} fixes the base point.
                        let schreier = u.compose_unchecked(&g).compose_unchecked(&v.inverse());
                        if self.add(schreier) {
                            changed = true;
                        }
                        gi += 1;
                    }
                    oi += 1;
                }
                i += 1;
            }
            if !changed {
                break;
            }
        }
    }
}

/// Iterator over all elements of a chain's group, each exactly once.
pub struct Elements<'a> {
    chain: &'a StabilizerChain,
    indices: Vec<usize>,
    /// `partials[i]` is the product of transversal picks for levels i..,
    /// composed innermost-first.
    partials: Vec<Permutation>,
    done: bool,
}

impl<'a> Elements<'a> {
    fn new(chain: &'a StabilizerChain) -> Self {
        let k = chain.levels.len();
        let indices = vec![0; k];
        let mut partials = vec![Permutation::identity(chain.degree); k + 1];
        for i in (0..k).rev() {
            let p = chain.levels[i].orbit[0];
            let u = chain.levels[i].transversal[p].as_ref().unwrap();
            partials[i] = partials[i + 1].compose_unchecked(u);
        }
        Elements {
            chain,
            indices,
            partials,
            done: false,
        }
    }
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let k = self.chain.levels.len();
        let current = self.partials[0].clone();
        // Odometer increment, shallowest level fastest.
        let mut level = 0;
        loop {
            if level == k {
                self.done = true;
                return Some(current);
            }
            self.indices[level] += 1;
            if self.indices[level] < self.chain.levels[level].orbit.len() {
                break;
            }
            self.indices[level] = 0;
            level += 1;
        }
        for i in (0..=level).rev() {
            let p = self.chain.levels[i].orbit[self.indices[i]];
            let u = self.chain.levels[i].transversal[p].as_ref().unwrap();
            self.partials[i] = self.partials[i + 1].compose_unchecked(u);
        }
        Some(current)
    }
}
