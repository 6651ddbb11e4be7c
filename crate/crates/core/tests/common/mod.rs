//! Brute-force oracles, independent of the chain/search implementation
//! paths they are used to check. Everything here works on explicit element
//! sets produced by breadth-first closure of the generators.
//!
//! Each integration test binary compiles its own copy and uses a subset.
#![allow(dead_code)]

use std::collections::HashSet;

use permdn_core::perm::Permutation;
use permdn_core::rng::SplitMix64;
use permdn_core::PermutationGroup;

/// All elements of the generated group, by breadth-first closure.
pub fn brute_closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut out = vec![Permutation::identity(degree)];
    seen.insert(out[0].clone());
    let mut head = 0;
    while head < out.len() {
        let current = out[head].clone();
        head += 1;
        for g in gens {
            let next = current.compose(g).unwrap();
            if seen.insert(next.clone()) {
                out.push(next);
            }
        }
    }
    out
}

pub fn preserves_coloring(p: &Permutation, colors: &[usize]) -> bool {
    (0..p.degree()).all(|i| colors[p.image(i)] == colors[i])
}

fn is_distinguishing(elements: &[Permutation], colors: &[usize]) -> bool {
    !elements
        .iter()
        .any(|p| !p.is_identity() && preserves_coloring(p, colors))
}

/// Every restricted-growth string of length n over exactly k labels, via a
/// plain recursive enumerator (kept separate from the library's).
pub fn rgs_exactly(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(a: &mut Vec<usize>, max: usize, n: usize, k: usize, out: &mut Vec<Vec<usize>>) {
        if a.len() == n {
            if max + 1 == k {
                out.push(a.clone());
            }
            return;
        }
        for label in 0..=(max + 1).min(k - 1) {
            a.push(label);
            rec(a, max.max(label), n, k, out);
            a.pop();
        }
    }
    if n == 0 || k == 0 || k > n {
        return out;
    }
    let mut a = vec![0];
    rec(&mut a, 0, n, k, &mut out);
    out
}

/// Distinguishing number by scanning every canonical coloring against every
/// group element, smallest k first. Returns (k, witness coloring).
pub fn brute_distinguishing_number(
    degree: usize,
    elements: &[Permutation],
) -> (usize, Vec<usize>) {
    for k in 1..=degree.max(1) {
        for colors in rgs_exactly(degree, k) {
            if is_distinguishing(elements, &colors) {
                return (k, colors);
            }
        }
    }
    unreachable!("the discrete coloring distinguishes a faithful action");
}

/// All set partitions of the domain as cell maps (restricted-growth form).
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(rgs_exactly(n, k));
    }
    out
}

fn partition_invariant(gens: &[Permutation], cell_of: &[usize]) -> bool {
    let cell_count = cell_of.iter().max().map_or(0, |&m| m + 1);
    for g in gens {
        let mut image_cell = vec![usize::MAX; cell_count];
        for p in 0..cell_of.len() {
            let (from, to) = (cell_of[p], cell_of[g.image(p)]);
            if image_cell[from] == usize::MAX {
                image_cell[from] = to;
            } else if image_cell[from] != to {
                return false;
            }
        }
    }
    true
}

pub fn brute_is_transitive(degree: usize, elements: &[Permutation]) -> bool {
    if degree <= 1 {
        return true;
    }
    let reachable: HashSet<usize> = elements.iter().map(|p| p.image(0)).collect();
    reachable.len() == degree
}

/// Primitive iff transitive with no nontrivial invariant partition; degree
/// 0 and 1 are not primitive by convention (there is nothing to refute).
pub fn brute_is_primitive(degree: usize, gens: &[Permutation], elements: &[Permutation]) -> bool {
    if degree <= 1 || !brute_is_transitive(degree, elements) {
        return false;
    }
    for cell_of in all_partitions(degree) {
        let cells = cell_of.iter().max().unwrap() + 1;
        if cells == 1 || cells == degree {
            continue;
        }
        if partition_invariant(gens, &cell_of) {
            return false;
        }
    }
    true
}

fn sorted_key(elements: &[Permutation]) -> Vec<Vec<usize>> {
    let mut key: Vec<Vec<usize>> = elements.iter().map(|p| p.images().to_vec()).collect();
    key.sort();
    key
}

/// Every normal subgroup as an explicit element list, by closing the
/// lattice: start at the trivial subgroup and repeatedly adjoin a conjugacy
/// class representative and take the generated normal subgroup. Every
/// normal subgroup is a join of class closures, so this enumeration is
/// complete.
pub fn all_normal_subgroups(degree: usize, elements: &[Permutation]) -> Vec<Vec<Permutation>> {
    // Conjugacy class representatives.
    let mut in_class: HashSet<Permutation> = HashSet::new();
    let mut reps: Vec<Permutation> = Vec::new();
    for e in elements {
        if in_class.contains(e) {
            continue;
        }
        reps.push(e.clone());
        for g in elements {
            in_class.insert(e.conjugate_by(g));
        }
    }
    let closure_of = |seed: &[Permutation]| -> Vec<Permutation> {
        // All conjugates of the seed, then subgroup closure.
        let mut conjugates: Vec<Permutation> = Vec::new();
        let mut seen = HashSet::new();
        for s in seed {
            for g in elements {
                let c = s.conjugate_by(g);
                if seen.insert(c.clone()) {
                    conjugates.push(c);
                }
            }
        }
        brute_closure(degree, &conjugates)
    };
    let mut normals: Vec<Vec<Permutation>> = vec![vec![Permutation::identity(degree)]];
    let mut keys: HashSet<Vec<Vec<usize>>> = HashSet::new();
    keys.insert(sorted_key(&normals[0]));
    let mut head = 0;
    while head < normals.len() {
        let base = normals[head].clone();
        head += 1;
        for rep in &reps {
            if base.contains(rep) {
                continue;
            }
            let mut seed = base.clone();
            seed.push(rep.clone());
            let bigger = closure_of(&seed);
            if keys.insert(sorted_key(&bigger)) {
                normals.push(bigger);
            }
        }
    }
    normals
}

pub fn brute_is_semiregular(_degree: usize, elements: &[Permutation]) -> bool {
    elements
        .iter()
        .all(|p| p.is_identity() || !p.has_fixed_point())
}

pub fn brute_is_quasiprimitive(degree: usize, elements: &[Permutation]) -> bool {
    if !brute_is_transitive(degree, elements) {
        return false;
    }
    all_normal_subgroups(degree, elements)
        .iter()
        .all(|n| n.len() == 1 || brute_is_transitive(degree, n))
}

pub fn brute_is_semiprimitive(degree: usize, elements: &[Permutation]) -> bool {
    if !brute_is_transitive(degree, elements) {
        return false;
    }
    all_normal_subgroups(degree, elements)
        .iter()
        .all(|n| brute_is_transitive(degree, n) || brute_is_semiregular(degree, n))
}

/// Seeded corpus of random subgroups of Sym(n), n <= 8, order <= max_order.
pub fn random_subgroup_corpus(
    seed: u64,
    count: usize,
    max_order: usize,
) -> Vec<PermutationGroup> {
    let mut rng = SplitMix64::new(seed);
    let mut corpus = Vec::new();
    while corpus.len() < count {
        let degree = 2 + rng.below(7) as usize; // 2..=8
        let gen_count = 1 + rng.below(3) as usize;
        let gens: Vec<Permutation> = (0..gen_count)
            .map(|_| random_permutation(&mut rng, degree))
            .collect();
        let elements = brute_closure(degree, &gens);
        if elements.len() <= max_order {
            corpus.push(PermutationGroup::new(degree, gens).unwrap());
        }
    }
    corpus
}

pub fn random_permutation(rng: &mut SplitMix64, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for i in (1..degree).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        images.swap(i, j);
    }
    Permutation::from_images(images).unwrap()
}
