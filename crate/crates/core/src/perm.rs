use std::fmt;

use crate::cycles;
use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}`, stored as its image array: entry `i` is
/// the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image array, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n {
                return Err(Error::PointOutOfRange {
                    point: im,
                    degree: n,
                });
            }
            if seen[im] {
                return Err(Error::RepeatedPoint(im));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    /// A transposition of `a` and `b` on `degree` points.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for &p in &[a, b] {
            if p >= degree {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree,
                });
            }
        }
        images.swap(a, b);
        Ok(Permutation { images })
    }

    /// The single cycle `(points[0] points[1] …)` on `degree` points.
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Self> {
        cycles::from_cycles(degree, &[points.to_vec()])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// First applies `self`, then `other`: the result maps `i` to
    /// `other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        let images = self.images.iter().map(|&im| other.images[im]).collect();
        Permutation { images }
    }

    /// The unique permutation `r` with `compose(self, r) = identity`.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }

    /// Multiplicative order, computed as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord: u64 = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.images[point] == point
    }

    pub fn has_fixed_point(&self) -> bool {
        self.images.iter().enumerate().any(|(i, &im)| i == im)
    }

    /// Smallest moved point, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &im)| *i != im).map(|(i, _)| i)
    }

    /// Disjoint cycles of length >= 2, each rotated to start at its smallest
    /// point and sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p);
                p = self.images[p];
            }
            out.push(cyc);
        }
        out
    }

    /// Conjugate `other^-1 * self * other` under the left-to-right
    /// composition convention: apply `other^-1`, then `self`, then `other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        // (other^-1 ; self ; other)(i) = other(self(other^-1(i)))
        let mut images = vec![0; self.degree()];
        for i in 0..self.degree() {
            images[other.images[i]] = other.images[self.images[i]];
        }
        Permutation { images }
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&cycles::format_cycles(self))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self)
    }
}
