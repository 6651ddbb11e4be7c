//! The binary [24,12,8] and ternary [12,6,6] Golay codes, built from
//! quadratic-residue generator polynomials found by exhaustive division.
//!
//! These give machine-checkable witnesses for the Mathieu groups: a degree-24
//! permutation preserving the octad set lies in M24, and a degree-12
//! permutation preserving the hexad set (the blocks of S(5,6,12)) lies in
//! M12. The catalog's bundled Mathieu generators are validated against these
//! invariants rather than taken on faith.

use std::collections::{HashMap, HashSet};

use crate::perm::Permutation;

/// Binary polynomial division check: does `divisor` divide `target` over F2?
/// Polynomials are bitmasks, bit i = coefficient of x^i.
fn divides_f2(divisor: u64, target: u64) -> bool {
    let d = 63 - divisor.leading_zeros();
    let mut rem = target;
    while rem != 0 {
        let r = 63 - rem.leading_zeros();
        if r < d {
            return false;
        }
        rem ^= divisor << (r - d);
    }
    true
}

/// Degree-11 divisors of x^23 + 1 over F2 (the two quadratic-residue
/// generator polynomials), smallest bitmask first.
pub fn golay_generator_polynomials() -> Vec<u64> {
    let target: u64 = (1 << 23) | 1;
    let mut out = Vec::new();
    for middle in 0u64..(1 << 10) {
        let candidate = 1 | (middle << 1) | (1 << 11);
        if divides_f2(candidate, target) {
            out.push(candidate);
        }
    }
    out
}

/// The extended binary Golay code on 24 coordinates: positions 0..22 carry
/// the cyclic structure of Z_23, position 23 is the parity extension. The
/// projective line of F_23 is numbered the same way (23 = infinity), so
/// PSL(2,23) acts on the same points.
pub struct BinaryGolay {
    codewords: HashSet<u32>,
    octads: Vec<u32>,
}

impl BinaryGolay {
    pub fn new() -> BinaryGolay {
        Self::from_polynomial(golay_generator_polynomials()[0])
    }

    pub fn from_polynomial(generator: u64) -> BinaryGolay {
        // Basis: x^i * g for i = 0..12, parity-extended to 24 bits.
        let basis: Vec<u32> = (0..12)
            .map(|i| {
                let word = (generator << i) as u32;
                let parity = word.count_ones() & 1;
                word | parity << 23
            })
            .collect();
        let mut codewords = HashSet::with_capacity(1 << 12);
        for combo in 0u32..(1 << 12) {
            let mut word = 0u32;
            for (i, b) in basis.iter().enumerate() {
                if combo >> i & 1 == 1 {
                    word ^= b;
                }
            }
            codewords.insert(word);
        }
        let mut octads: Vec<u32> = codewords
            .iter()
            .copied()
            .filter(|w| w.count_ones() == 8)
            .collect();
        octads.sort_unstable();
        BinaryGolay { codewords, octads }
    }

    pub fn octads(&self) -> &[u32] {
        &self.octads
    }

    pub fn dodecads(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .codewords
            .iter()
            .copied()
            .filter(|w| w.count_ones() == 12)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_codeword(&self, word: u32) -> bool {
        self.codewords.contains(&(word & 0x00ff_ffff))
    }

    /// Weight distribution sanity: [24,12,8] has 759 octads and 2576
    /// dodecads.
    pub fn shape_ok(&self) -> bool {
        self.codewords.len() == 1 << 12
            && self.octads.len() == 759
            && self
                .codewords
                .iter()
                .all(|w| matches!(w.count_ones(), 0 | 8 | 12 | 16 | 24))
    }

    /// True iff the coordinate permutation maps every codeword to a
    /// codeword (degree 24).
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        debug_assert_eq!(p.degree(), 24);
        self.codewords
            .iter()
            .all(|&w| self.codewords.contains(&permute_mask(w, p)))
    }
}

impl Default for BinaryGolay {
    fn default() -> Self {
        Self::new()
    }
}

pub fn permute_mask(mask: u32, p: &Permutation) -> u32 {
    let mut out = 0u32;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << p.image(i);
    }
    out
}

/// Monic degree-5 divisors of x^11 - 1 over F3, as coefficient arrays
/// (constant first, including the leading 1).
pub fn ternary_generator_polynomials() -> Vec<[u8; 6]> {
    // Polynomial helpers over F3, coefficient vectors with index = degree.
    fn divides(divisor: &[u8], target: &[u8]) -> bool {
        let mut rem = target.to_vec();
        let d = divisor.len() - 1;
        loop {
            let r = match rem.iter().rposition(|&c| c != 0) {
                Some(r) => r,
                None => return true,
            };
            if r < d {
                return false;
            }
            // rem -= lead * x^(r-d) * divisor  (divisor is monic)
            let lead = rem[r];
            for (j, &c) in divisor.iter().enumerate() {
                let idx = r - d + j;
                rem[idx] = (rem[idx] + 3 - lead * c % 3) % 3;
            }
        }
    }
    // x^11 - 1 = x^11 + 2 over F3.
    let mut target = vec![0u8; 12];
    target[0] = 2;
    target[11] = 1;
    let mut out = Vec::new();
    for combo in 0..3u32.pow(5) {
        let mut coeffs = [0u8; 6];
        let mut c = combo;
        for item in coeffs.iter_mut().take(5) {
            *item = (c % 3) as u8;
            c /= 3;
        }
        coeffs[5] = 1;
        if coeffs[0] != 0 && divides(&coeffs, &target) {
            out.push(coeffs);
        }
    }
    out
}

/// The extended ternary Golay code's block design: the 132 hexads of
/// S(5,6,12) as 12-bit masks. Coordinates 0..10 carry the cyclic structure
/// of Z_11 (the projective line of F_11 with 11 = infinity).
pub struct SteinerS5612 {
    hexads: Vec<u16>,
    hexad_set: HashSet<u16>,
}

impl SteinerS5612 {
    pub fn new() -> SteinerS5612 {
        Self::from_polynomial(&ternary_generator_polynomials()[0])
    }

    pub fn from_polynomial(generator: &[u8; 6]) -> SteinerS5612 {
        // Basis of the [11,6] cyclic code: x^i * g for i = 0..6.
        let mut basis = Vec::new();
        for i in 0..6 {
            let mut word = [0u8; 12];
            for (j, &c) in generator.iter().enumerate() {
                word[i + j] = c;
            }
            // Parity extension: coordinate 11 makes the total sum 0 mod 3.
            let sum: u32 = word[..11].iter().map(|&c| c as u32).sum();
            word[11] = ((3 - sum % 3) % 3) as u8;
            basis.push(word);
        }
        let mut hexad_set = HashSet::new();
        for combo in 0..3u32.pow(6) {
            let mut word = [0u8; 12];
            let mut c = combo;
            for b in &basis {
                let mult = (c % 3) as u8;
                c /= 3;
                if mult != 0 {
                    for (w, &bc) in word.iter_mut().zip(b.iter()) {
                        *w = (*w + mult * bc) % 3;
                    }
                }
            }
            let support: u16 = word
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, _)| 1u16 << i)
                .sum();
            if support.count_ones() == 6 {
                hexad_set.insert(support);
            }
        }
        let mut hexads: Vec<u16> = hexad_set.iter().copied().collect();
        hexads.sort_unstable();
        SteinerS5612 { hexads, hexad_set }
    }

    pub fn hexads(&self) -> &[u16] {
        &self.hexads
    }

    /// S(5,6,12) has exactly 132 blocks and every 5-set lies in exactly one.
    pub fn shape_ok(&self) -> bool {
        if self.hexads.len() != 132 {
            return false;
        }
        // Spot-check the Steiner property on all 5-subsets.
        let mut five_sets: HashMap<u16, u32> = HashMap::new();
        for &h in &self.hexads {
            for drop in 0..12 {
                if h >> drop & 1 == 1 {
                    *five_sets.entry(h & !(1 << drop)).or_insert(0) += 1;
                }
            }
        }
        five_sets.len() == 792 && five_sets.values().all(|&c| c == 1)
    }

    /// The unique block containing a 5-set, if the input has 5 bits.
    pub fn block_through(&self, five_set: u16) -> Option<u16> {
        self.hexads
            .iter()
            .copied()
            .find(|&h| h & five_set == five_set)
    }

    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        debug_assert_eq!(p.degree(), 12);
        self.hexads
            .iter()
            .all(|&h| self.hexad_set.contains(&permute_mask12(h, p)))
    }

    /// Extends a map on some points (typically 5) to an S(5,6,12)
    /// automorphism with those images, if one exists. Depth-first search
    /// over the remaining images, pruning whenever a fully assigned hexad
    /// fails to land on a hexad. The design is sharply 5-transitive, so a
    /// 5-point seed determines at most one completion.
    pub fn complete_automorphism(&self, base: &[(usize, usize)]) -> Option<Permutation> {
        let mut image = [usize::MAX; 12];
        let mut used = [false; 12];
        for &(a, b) in base {
            if a >= 12 || b >= 12 || image[a] != usize::MAX || used[b] {
                return None;
            }
            image[a] = b;
            used[b] = true;
        }
        let free: Vec<usize> = (0..12).filter(|&p| image[p] == usize::MAX).collect();
        self.dfs_complete(&mut image, &mut used, &free, 0)
    }

    fn dfs_complete(
        &self,
        image: &mut [usize; 12],
        used: &mut [bool; 12],
        free: &[usize],
        depth: usize,
    ) -> Option<Permutation> {
        if depth == free.len() {
            let p = Permutation::from_images(image.to_vec()).ok()?;
            return self.is_automorphism(&p).then_some(p);
        }
        let point = free[depth];
        for candidate in 0..12 {
            if used[candidate] {
                continue;
            }
            image[point] = candidate;
            used[candidate] = true;
            if self.partial_ok(image) {
                if let Some(p) = self.dfs_complete(image, used, free, depth + 1) {
                    return Some(p);
                }
            }
            image[point] = usize::MAX;
            used[candidate] = false;
        }
        None
    }

    /// Every hexad whose points all have assigned images must map onto a
    /// hexad.
    fn partial_ok(&self, image: &[usize; 12]) -> bool {
        let assigned: u16 = (0..12)
            .filter(|&p| image[p] != usize::MAX)
            .map(|p| 1u16 << p)
            .sum();
        for &h in &self.hexads {
            if h & assigned == h {
                let mut target = 0u16;
                for (p, &im) in image.iter().enumerate() {
                    if h >> p & 1 == 1 {
                        target |= 1 << im;
                    }
                }
                if !self.hexad_set.contains(&target) {
                    return false;
                }
            }
        }
        true
    }
}

impl Default for SteinerS5612 {
    fn default() -> Self {
        Self::new()
    }
}

pub fn permute_mask12(mask: u16, p: &Permutation) -> u16 {
    let mut out = 0u16;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << p.image(i);
    }
    out
}
