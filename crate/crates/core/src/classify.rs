//! Primitivity-type predicates.
//!
//! Quasiprimitivity ("every nontrivial normal subgroup is transitive") and
//! semiprimitivity ("every normal subgroup is transitive or semiregular")
//! quantify over all normal subgroups. Both reduce to a finite element scan:
//! any nontrivial normal subgroup contains an element of prime order, and the
//! normal closure of that element is contained in the subgroup. Hence
//!   quasiprimitive  <=>  transitive and every prime-order closure is
//!                        transitive;
//!   semiprimitive   <=>  transitive and every prime-order closure seeded by
//!                        an element with a fixed point is transitive
//! (a normal subgroup that is not semiregular contains a prime-order element
//! fixing a point). The scans are exact and never sample; groups larger than
//! the element cap report `OrderExceedsCap` instead of guessing.

use crate::blocks::minimal_block_system;
use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::{is_transitive, PermutationGroup};

use crate::perm::Permutation;

/// Default cap on element scans used by the predicates.
pub const DEFAULT_ELEMENT_CAP: u64 = 10_000_000;

/// True iff the group is transitive and admits no nontrivial invariant
/// partition. Degree 0 and 1 are never primitive (there is no nontrivial
/// partition to refute); a transitive degree-2 group is primitive.
pub fn is_primitive(group: &PermutationGroup) -> bool {
    if group.degree() <= 1 {
        return false;
    }
    if !is_transitive(group) {
        return false;
    }
    for b in 1..group.degree() {
        let system = minimal_block_system(group, 0, b).expect("transitive, distinct points");
        if system.cell_count() > 1 {
            return false;
        }
    }
    true
}

/// True iff every orbit of the group has size equal to the group order
/// (equivalently, all point stabilizers are trivial).
pub fn is_semiregular(subgroup: &PermutationGroup) -> bool {
    let chain = StabilizerChain::build(subgroup);
    let order = chain.order();
    for orbit in subgroup.orbits() {
        if num_bigint::BigUint::from(orbit.len()) != *order {
            return false;
        }
    }
    true
}

/// Smallest subgroup containing `seeds` and closed under conjugation by the
/// group's generators.
pub fn normal_closure(
    group: &PermutationGroup,
    group_chain: &StabilizerChain,
    seeds: &[Permutation],
) -> Result<PermutationGroup> {
    for (index, s) in seeds.iter().enumerate() {
        if !group_chain.contains(s)? {
            return Err(Error::SeedNotInGroup { index });
        }
    }
    let mut closure_gens: Vec<Permutation> = seeds
        .iter()
        .filter(|s| !s.is_identity())
        .cloned()
        .collect();
    closure_gens.dedup();
    let mut chain = StabilizerChain::build(
        &PermutationGroup::new(group.degree(), closure_gens.clone())?,
    );
    let mut head = 0;
    while head < closure_gens.len() {
        let current = closure_gens[head].clone();
        head += 1;
        for g in group.generators() {
            let conj = current.conjugate_by(g);
            if !chain.contains(&conj)? {
                closure_gens.push(conj);
                chain = StabilizerChain::build(&PermutationGroup::new(
                    group.degree(),
                    closure_gens.clone(),
                )?);
            }
        }
    }
    PermutationGroup::new(group.degree(), closure_gens)
}

/// Streams every element of prime order exactly once, flagged by whether it
/// fixes a point.
pub fn prime_order_elements(
    chain: &StabilizerChain,
    cap: u64,
) -> Result<impl Iterator<Item = (Permutation, bool)> + '_> {
    let elements = chain.elements(cap)?;
    Ok(elements.filter_map(|p| {
        if is_prime(p.order()) {
            let fixed = p.has_fixed_point();
            Some((p, fixed))
        } else {
            None
        }
    }))
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// True iff the group is transitive and the normal closure of every
/// prime-order element is transitive.
pub fn is_quasiprimitive(group: &PermutationGroup, cap: u64) -> Result<bool> {
    scan_normal_closures(group, cap, false)
}

/// True iff the group is transitive and the normal closure of every
/// prime-order element with a fixed point is transitive.
pub fn is_semiprimitive(group: &PermutationGroup, cap: u64) -> Result<bool> {
    scan_normal_closures(group, cap, true)
}

fn scan_normal_closures(
    group: &PermutationGroup,
    cap: u64,
    require_fixed_point: bool,
) -> Result<bool> {
    if !is_transitive(group) {
        return Ok(false);
    }
    let chain = StabilizerChain::build(group);
    if chain.order_u64().map(|o| o <= cap) != Some(true) {
        // Over cap: still try for the partial verdict before giving up.
        // A prime-order power of any generator seeds a normal subgroup; if
        // one of those closures already fails, the answer is a definite
        // "false" even though the full scan is out of reach.
        for g in group.generators() {
            let seed = prime_order_power(g);
            if require_fixed_point && !seed.has_fixed_point() {
                continue;
            }
            let closure = normal_closure(group, &chain, &[seed])?;
            if !is_transitive(&closure) {
                return Ok(false);
            }
        }
        return Err(Error::OrderExceedsCap {
            order: chain.order().to_string(),
            cap,
        });
    }
    // Scan one representative per conjugation orbit: conjugate elements have
    // the same normal closure.
    let reps = conjugacy_representatives_of_prime_order(group, &chain, cap)?;
    for rep in reps {
        if require_fixed_point && !rep.has_fixed_point() {
            continue;
        }
        let closure = normal_closure(group, &chain, &[rep])?;
        if !is_transitive(&closure) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A power of `g` of prime order (g must be nonidentity).
fn prime_order_power(g: &Permutation) -> Permutation {
    let mut order = g.order();
    let mut h = g.clone();
    loop {
        let p = smallest_prime_factor(order);
        if p == order {
            return h;
        }
        // Raise to the (order/p)-th power to kill all other primes.
        let e = order / p;
        h = pow(&h, e);
        order = p;
    }
}

pub(crate) fn pow(g: &Permutation, mut e: u64) -> Permutation {
    let mut acc = Permutation::identity(g.degree());
    let mut base = g.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.compose_unchecked(&base);
        }
        base = base.compose_unchecked(&base);
        e >>= 1;
    }
    acc
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

/// Representatives of the conjugation orbits on prime-order elements, found
/// by closing each unvisited element under conjugation by the generators.
fn conjugacy_representatives_of_prime_order(
    group: &PermutationGroup,
    chain: &StabilizerChain,
    cap: u64,
) -> Result<Vec<Permutation>> {
    use std::collections::HashSet;
    let mut visited: HashSet<Permutation> = HashSet::new();
    let mut reps = Vec::new();
    for (p, _) in prime_order_elements(chain, cap)? {
        if visited.contains(&p) {
            continue;
        }
        reps.push(p.clone());
        let mut queue = vec![p.clone()];
        visited.insert(p);
        while let Some(x) = queue.pop() {
            for g in group.generators() {
                let c = x.conjugate_by(g);
                if visited.insert(c.clone()) {
                    queue.push(c);
                }
            }
        }
    }
    Ok(reps)
}
