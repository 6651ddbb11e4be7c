//! Distinguishing-number computation.
//!
//! Upper bounds come from certificates (random sampling, exhaustive
//! enumeration, or a base coloring); lower bounds come from exhaustive
//! refutation. Exhaustive refutation runs over label-canonical colorings
//! (restricted-growth strings), which is sound because relabeling colors
//! does not change the colorwise stabilizer. Two shortcuts keep refutation
//! exact at large orders:
//!
//! * pigeonhole: if |G| > k^n then every k-coloring has a nontrivial
//!   stabilizer (its orbit among all k^n colorings is too small to be
//!   regular);
//! * the k = 2 case enumerates subsets as bitmasks and walks whole orbits,
//!   so each subset is touched once.
//!
//! All searches are deterministic for a fixed seed and independent of the
//! worker count: parallel workers race over disjoint index classes and the
//! smallest successful index always wins.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::One;

use crate::chain::StabilizerChain;
use crate::coloring::{scan_preserver, Coloring, SCAN_THRESHOLD};
use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;
use crate::rng::SplitMix64;

/// Limits and reproducibility knobs for the search driver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Random colorings sampled per color count.
    pub trials: u64,
    /// Seed for all randomized sampling.
    pub seed: u64,
    /// Cap on colorings examined by one exhaustive refutation.
    pub coloring_budget: u64,
    /// Worker threads for exhaustive and random sweeps.
    pub workers: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            trials: 1000,
            seed: 0,
            coloring_budget: 1 << 25,
            workers: 1,
        }
    }
}

/// How a value of k was ruled out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefutationMode {
    /// Every canonical coloring with exactly k colors was examined.
    Exhaustive,
    /// |G| > k^n, so no k-coloring can have a regular orbit.
    Pigeonhole,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    pub k: usize,
    pub mode: RefutationMode,
    pub examined: u64,
}

/// Outcome of one exhaustive pass at a fixed k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefuteOutcome {
    /// No coloring with exactly k colors distinguishes.
    Refuted { mode: RefutationMode, examined: u64 },
    /// A distinguishing coloring was found (so k is an upper bound).
    Found { coloring: Coloring, examined: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DNumberResult {
    pub lo: usize,
    pub hi: usize,
    /// Distinguishing coloring witnessing the upper bound.
    pub certificate: Coloring,
    pub refutations: Vec<Refutation>,
}

impl DNumberResult {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn value(&self) -> Option<usize> {
        self.is_exact().then_some(self.lo)
    }

    pub fn colorings_examined(&self) -> u64 {
        self.refutations.iter().map(|r| r.examined).sum()
    }
}

/// Checks colorings against a fixed chain, caching the prime-order elements
/// for small groups. A nontrivial colorwise stabilizer is a subgroup and
/// therefore contains a prime-order element, so scanning only those is
/// exact.
pub(crate) struct Checker<'a> {
    chain: &'a StabilizerChain,
    scan: Option<Vec<Permutation>>,
}

impl<'a> Checker<'a> {
    pub(crate) fn new(chain: &'a StabilizerChain) -> Checker<'a> {
        let scan = match chain.order_u64() {
            Some(order) if order <= SCAN_THRESHOLD => {
                let elements = chain
                    .elements(SCAN_THRESHOLD)
                    .expect("order within scan threshold");
                Some(
                    elements
                        .filter(|p| crate::classify::is_prime(p.order()))
                        .collect(),
                )
            }
            _ => None,
        };
        Checker { chain, scan }
    }

    /// Some nonidentity color-preserving element, or None when the
    /// colorwise stabilizer is trivial.
    pub(crate) fn find_preserver(&self, coloring: &Coloring) -> Option<Permutation> {
        match &self.scan {
            Some(elements) => scan_preserver(elements, coloring).cloned(),
            None => crate::coloring::stabilizer_is_trivial(self.chain, coloring)
                .expect("coloring length checked by caller"),
        }
    }

    fn is_distinguishing(&self, coloring: &Coloring) -> bool {
        self.find_preserver(coloring).is_none()
    }
}

/// Samples uniform k-colorings and returns the first distinguishing one (in
/// trial order), canonicalized. Reproducible for a fixed seed and
/// independent of the worker count.
pub fn random_search(
    chain: &StabilizerChain,
    k: usize,
    trials: u64,
    seed: u64,
) -> Result<Option<Coloring>> {
    let checker = Checker::new(chain);
    Ok(random_search_with(&checker, chain.degree(), k, trials, seed, 1))
}

fn trial_coloring(degree: usize, k: usize, seed: u64, key: u64, trial: u64) -> Coloring {
    let mut rng = SplitMix64::new(
        seed.wrapping_mul(0x9e3779b97f4a7c15)
            .wrapping_add(key << 32)
            .wrapping_add(trial),
    );
    // Sample uniformly, then relabel by first occurrence so unused colors
    // disappear and the result is label-canonical.
    let mut map = vec![usize::MAX; k];
    let mut next = 0;
    let colors: Vec<usize> = (0..degree)
        .map(|_| {
            let raw = rng.below(k as u64) as usize;
            if map[raw] == usize::MAX {
                map[raw] = next;
                next += 1;
            }
            map[raw]
        })
        .collect();
    Coloring::new(colors).expect("first-occurrence labels are contiguous")
}

fn random_search_with(
    checker: &Checker<'_>,
    degree: usize,
    k: usize,
    trials: u64,
    seed: u64,
    workers: usize,
) -> Option<Coloring> {
    if k == 0 || degree == 0 {
        return None;
    }
    let key = k as u64;
    let run = |stride: usize, offset: usize, best: &AtomicU64| -> Option<(u64, Coloring)> {
        let mut found = None;
        let mut t = offset as u64;
        while t < trials {
            if t >= best.load(Ordering::Relaxed) {
                break;
            }
            let c = trial_coloring(degree, k, seed, key, t);
            if checker.is_distinguishing(&c) {
                best.fetch_min(t, Ordering::Relaxed);
                found = Some((t, c));
                break;
            }
            t += stride as u64;
        }
        found
    };
    let best = AtomicU64::new(u64::MAX);
    let results: Vec<Option<(u64, Coloring)>> = if workers <= 1 {
        vec![run(1, 0, &best)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let run = &run;
                    let best = &best;
                    scope.spawn(move || run(workers, w, best))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };
    results
        .into_iter()
        .flatten()
        .min_by_key(|(t, _)| *t)
        .map(|(_, c)| c)
}

/// Stirling number of the second kind, saturating at `u64::MAX`.
pub(crate) fn stirling2(n: usize, k: usize) -> u64 {
    if k == 0 {
        return if n == 0 { 1 } else { 0 };
    }
    if k > n {
        return 0;
    }
    // row[j] = S(i, j)
    let mut row = vec![0u64; k + 1];
    row[0] = 1; // S(0,0)
    for _i in 1..=n {
        for j in (1..=k).rev() {
            let kept = (j as u64).saturating_mul(row[j]);
            row[j] = kept.saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row[k]
}

/// Exhaustive verdict at a fixed number of colors: either a refutation (no
/// coloring with exactly k colors distinguishes) or a certificate.
///
/// Fails with `BudgetExceeded` when the canonical coloring count is over
/// budget and no shortcut applies.
pub fn exhaustive_refute(
    chain: &StabilizerChain,
    k: usize,
    budget: u64,
) -> Result<RefuteOutcome> {
    let checker = Checker::new(chain);
    exhaustive_refute_with(&checker, chain, k, budget, 1)
}

fn exhaustive_refute_with(
    checker: &Checker<'_>,
    chain: &StabilizerChain,
    k: usize,
    budget: u64,
    workers: usize,
) -> Result<RefuteOutcome> {
    let n = chain.degree();
    if k == 0 || k > n.max(1) {
        return Ok(RefuteOutcome::Refuted {
            mode: RefutationMode::Exhaustive,
            examined: 0,
        });
    }
    if k == 1 {
        // The monochrome coloring distinguishes exactly the trivial group.
        return Ok(if chain.order() == &BigUint::one() {
            RefuteOutcome::Found {
                coloring: Coloring::monochrome(n),
                examined: 1,
            }
        } else {
            RefuteOutcome::Refuted {
                mode: RefutationMode::Exhaustive,
                examined: 1,
            }
        });
    }
    // Pigeonhole: with |G| > k^n, no orbit on k-colorings is regular.
    let functions = BigUint::from(k).pow(n as u32);
    if chain.order() > &functions {
        return Ok(RefuteOutcome::Refuted {
            mode: RefutationMode::Pigeonhole,
            examined: 0,
        });
    }
    if k == 2 && n <= 28 {
        let total: u64 = 1 << n;
        if total > budget {
            return Err(Error::BudgetExceeded { examined: 0 });
        }
        return Ok(sweep_subsets(chain, budget));
    }
    let count = stirling2(n, k);
    if count > budget {
        return Err(Error::BudgetExceeded { examined: 0 });
    }
    Ok(rgs_scan(checker, n, k, count, workers))
}

/// Walks subset orbits under the group using bitmasks. A subset
/// distinguishes iff its orbit has size |G|; every subset is visited exactly
/// once, so the verdict is exhaustive over all 2^n subsets.
fn sweep_subsets(chain: &StabilizerChain, _budget: u64) -> RefuteOutcome {
    let n = chain.degree();
    let order = chain
        .order_u64()
        .expect("pigeonhole pass guarantees |G| <= 2^n <= 2^28");
    let gens: Vec<&Permutation> = chain.strong_generators().iter().collect();
    let total: u64 = 1 << n;
    let full: u64 = total - 1;
    let mut visited = vec![0u64; total.div_ceil(64) as usize];
    let mark = |visited: &mut [u64], m: u64| {
        visited[(m >> 6) as usize] |= 1 << (m & 63);
    };
    let seen = |visited: &[u64], m: u64| visited[(m >> 6) as usize] >> (m & 63) & 1 == 1;
    // Empty and full sets are monochrome, not 2-colorings.
    mark(&mut visited, 0);
    mark(&mut visited, full);
    let mut queue: Vec<u64> = Vec::new();
    for seed in 1..full {
        if seen(&visited, seed) {
            continue;
        }
        mark(&mut visited, seed);
        queue.clear();
        queue.push(seed);
        let mut size: u64 = 0;
        let mut head = 0;
        while head < queue.len() {
            let mask = queue[head];
            head += 1;
            size += 1;
            for g in &gens {
                let mut image: u64 = 0;
                let mut rest = mask;
                while rest != 0 {
                    let p = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    image |= 1 << g.image(p);
                }
                if !seen(&visited, image) {
                    mark(&mut visited, image);
                    queue.push(image);
                }
            }
        }
        if size == order {
            let subset: Vec<usize> = (0..n).filter(|&p| seed >> p & 1 == 1).collect();
            let coloring = Coloring::from_subset(n, &subset)
                .expect("proper nonempty subset")
                .canonical();
            return RefuteOutcome::Found {
                coloring,
                examined: total,
            };
        }
    }
    RefuteOutcome::Refuted {
        mode: RefutationMode::Exhaustive,
        examined: total,
    }
}

/// Enumerates restricted-growth strings of length n using exactly k labels,
/// in lexicographic order. The callback returns true to stop; the return
/// value is the number of strings visited by this call.
pub(crate) fn for_each_rgs_exactly_k(
    n: usize,
    k: usize,
    mut on_each: impl FnMut(u64, &[usize]) -> bool,
) {
    fn rec(
        a: &mut Vec<usize>,
        pm: usize,
        n: usize,
        k: usize,
        index: &mut u64,
        f: &mut impl FnMut(u64, &[usize]) -> bool,
    ) -> bool {
        let i = a.len();
        if i == n {
            if pm + 1 == k {
                let stop = f(*index, a);
                *index += 1;
                return stop;
            }
            return false;
        }
        // Even introducing a new label at every remaining position cannot
        // reach k labels: prune.
        if pm + 1 + (n - i) < k {
            return false;
        }
        let cap = (pm + 1).min(k - 1);
        for label in 0..=cap {
            a.push(label);
            let stop = rec(a, pm.max(label), n, k, index, f);
            a.pop();
            if stop {
                return true;
            }
        }
        false
    }
    if n == 0 || k == 0 || k > n {
        return;
    }
    let mut a = Vec::with_capacity(n);
    a.push(0);
    let mut index = 0u64;
    rec(&mut a, 0, n, k, &mut index, &mut on_each);
}

/// Exhaustive scan over canonical colorings with exactly k colors. Workers
/// partition the index space by residue; the smallest successful index wins,
/// so the outcome and the reported examined count are worker-independent.
fn rgs_scan(checker: &Checker<'_>, n: usize, k: usize, count: u64, workers: usize) -> RefuteOutcome {
    let best = AtomicU64::new(u64::MAX);
    let run = |stride: u64, offset: u64| -> Option<(u64, Coloring)> {
        let mut found: Option<(u64, Coloring)> = None;
        for_each_rgs_exactly_k(n, k, |index, labels| {
            if index % stride != offset {
                return false;
            }
            if index >= best.load(Ordering::Relaxed) {
                return true;
            }
            let coloring = Coloring::new(labels.to_vec()).expect("rgs labels are canonical");
            if checker.is_distinguishing(&coloring) {
                best.fetch_min(index, Ordering::Relaxed);
                found = Some((index, coloring));
                return true;
            }
            false
        });
        found
    };
    let results: Vec<Option<(u64, Coloring)>> = if workers <= 1 {
        vec![run(1, 0)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let run = &run;
                    scope.spawn(move || run(workers as u64, w as u64))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };
    match results.into_iter().flatten().min_by_key(|(i, _)| *i) {
        Some((index, coloring)) => RefuteOutcome::Found {
            coloring,
            examined: index + 1,
        },
        None => RefuteOutcome::Refuted {
            mode: RefutationMode::Exhaustive,
            examined: count,
        },
    }
}

/// Computes the distinguishing number with certificates and per-k
/// refutation records.
///
/// Ascends k from 2: a random certificate search first, then an exhaustive
/// pass that either finds a certificate or refutes k. When a refutation runs
/// out of budget the result degrades to bounds (never a guessed exact
/// value); the upper bound always materializes, in the worst case from a
/// greedy-base coloring.
pub fn distinguishing_number(group: &PermutationGroup, limits: &SearchLimits) -> DNumberResult {
    let chain = StabilizerChain::build(group);
    distinguishing_number_for_chain(&chain, limits)
}

pub fn distinguishing_number_for_chain(
    chain: &StabilizerChain,
    limits: &SearchLimits,
) -> DNumberResult {
    let n = chain.degree();
    if chain.order() == &BigUint::one() {
        return DNumberResult {
            lo: 1,
            hi: 1,
            certificate: Coloring::monochrome(n),
            refutations: Vec::new(),
        };
    }
    let checker = Checker::new(chain);
    let mut refutations: Vec<Refutation> = Vec::new();
    let mut lo = 2usize;
    // Constructive fallback: coloring a greedy base with fresh colors always
    // distinguishes, so an upper bound of (greedy base size + 1) is free.
    let greedy = crate::bounds::greedy_base(chain);
    let fallback_k = (greedy.len() + 1).min(n);
    let mut budget_hit = false;
    let mut k = 2usize;
    while k <= n {
        // Pigeonhole refutation costs nothing; take it before sampling.
        if chain.order() > &BigUint::from(k).pow(n as u32) {
            refutations.push(Refutation {
                k,
                mode: RefutationMode::Pigeonhole,
                examined: 0,
            });
            lo = k + 1;
            k += 1;
            continue;
        }
        if let Some(c) =
            random_search_with(&checker, n, k, limits.trials, limits.seed, limits.workers)
        {
            return DNumberResult {
                lo,
                hi: c.color_count(),
                certificate: c,
                refutations,
            };
        }
        if !budget_hit {
            match exhaustive_refute_with(&checker, chain, k, limits.coloring_budget, limits.workers)
            {
                Ok(RefuteOutcome::Refuted { mode, examined }) => {
                    refutations.push(Refutation { k, mode, examined });
                    lo = k + 1;
                }
                Ok(RefuteOutcome::Found { coloring, .. }) => {
                    return DNumberResult {
                        lo,
                        hi: coloring.color_count(),
                        certificate: coloring,
                        refutations,
                    };
                }
                Err(_) => {
                    budget_hit = true;
                }
            }
        }
        if budget_hit && k >= fallback_k {
            let base_coloring = base_coloring(n, &greedy);
            debug_assert!(checker.is_distinguishing(&base_coloring));
            return DNumberResult {
                lo,
                hi: base_coloring.color_count(),
                certificate: base_coloring,
                refutations,
            };
        }
        k += 1;
    }
    // k never exceeds n: the discrete coloring distinguishes any faithful
    // action, so the loop must have returned by k = n.
    unreachable!("no distinguishing coloring found up to the degree");
}

/// Colors the base points 1..=b and everything else 0; the colorwise
/// stabilizer fixes every base point and is therefore trivial.
fn base_coloring(degree: usize, base: &[usize]) -> Coloring {
    let mut colors = vec![0usize; degree];
    for (i, &p) in base.iter().enumerate() {
        colors[p] = i + 1;
    }
    Coloring::new(colors)
        .expect("base points are distinct")
        .canonical()
}
