//! Group constructors: symmetric/alternating/cyclic/dihedral families,
//! linear and semilinear groups on vectors, projective actions, affine
//! groups, wreath products, actions on subsets and partitions, and coset
//! actions derived from small groups.

use std::collections::HashMap;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::gf::Gf;
use crate::group::PermutationGroup;
use crate::perm::Permutation;

pub fn symmetric_group(n: usize) -> PermutationGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::transposition(n, 0, 1).unwrap());
    }
    if n >= 3 {
        let cycle: Vec<usize> = (0..n).collect();
        gens.push(Permutation::cycle(n, &cycle).unwrap());
    }
    PermutationGroup::new(n, gens).unwrap()
}

pub fn alternating_group(n: usize) -> PermutationGroup {
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(Permutation::cycle(n, &[0, 1, 2]).unwrap());
        if n > 3 {
            let cycle: Vec<usize> = if n % 2 == 1 {
                (0..n).collect()
            } else {
                (1..n).collect()
            };
            gens.push(Permutation::cycle(n, &cycle).unwrap());
        }
    }
    PermutationGroup::new(n, gens).unwrap()
}

pub fn cyclic_group(n: usize) -> PermutationGroup {
    let cycle: Vec<usize> = (0..n).collect();
    let gens = if n >= 2 {
        vec![Permutation::cycle(n, &cycle).unwrap()]
    } else {
        Vec::new()
    };
    PermutationGroup::new(n, gens).unwrap()
}

/// Dihedral group of order 2n acting on n points.
pub fn dihedral_group(n: usize) -> PermutationGroup {
    assert!(n >= 3, "dihedral action needs at least 3 points");
    let rotation = Permutation::cycle(n, &(0..n).collect::<Vec<_>>()).unwrap();
    let reflection =
        Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
    PermutationGroup::new(n, vec![rotation, reflection]).unwrap()
}

/// One-dimensional affine group over F_p with a chosen multiplier:
/// `⟨x+1, mx⟩`. With a primitive root this is AGL(1,p); with a smaller
/// multiplicative order it is a proper Frobenius subgroup.
pub fn affine_multiplier(p: u64, multiplier: u64) -> Result<PermutationGroup> {
    let gf = Gf::new(p)?;
    let n = gf.order();
    let translation =
        Permutation::from_images((0..n).map(|x| gf.add(x, 1)).collect()).unwrap();
    let scaling = Permutation::from_images(
        (0..n).map(|x| gf.mul(x, multiplier as usize)).collect(),
    )?;
    PermutationGroup::new(n, vec![translation, scaling])
}

/// AΓL(1, q): all maps x -> a x^(p^j) + b on the q field elements.
pub fn one_dim_affine_semilinear(q: u64) -> Result<PermutationGroup> {
    let gf = Gf::new(q)?;
    let n = gf.order();
    let zeta = gf.generator();
    let translation =
        Permutation::from_images((0..n).map(|x| gf.add(x, 1)).collect()).unwrap();
    let scaling =
        Permutation::from_images((0..n).map(|x| gf.mul(x, zeta)).collect()).unwrap();
    let frobenius =
        Permutation::from_images((0..n).map(|x| gf.frobenius(x)).collect()).unwrap();
    PermutationGroup::new(n, vec![translation, scaling, frobenius])
}

/// Square matrix over a small field, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub d: usize,
    pub entries: Vec<usize>,
}

impl Mat {
    pub fn identity(d: usize) -> Mat {
        let mut entries = vec![0; d * d];
        for i in 0..d {
            entries[i * d + i] = 1;
        }
        Mat { d, entries }
    }

    pub fn at(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.d + j]
    }

    pub fn apply(&self, gf: &Gf, v: &[usize]) -> Vec<usize> {
        (0..self.d)
            .map(|i| {
                let mut acc = 0;
                for (j, &vj) in v.iter().enumerate().take(self.d) {
                    acc = gf.add(acc, gf.mul(self.at(i, j), vj));
                }
                acc
            })
            .collect()
    }
}

fn decode(mut value: usize, d: usize, q: usize) -> Vec<usize> {
    let mut v = vec![0; d];
    for item in v.iter_mut() {
        *item = value % q;
        value /= q;
    }
    v
}

fn encode(v: &[usize], q: usize) -> usize {
    v.iter().rev().fold(0, |acc, &c| acc * q + c)
}

/// Permutation of the q^d - 1 nonzero vectors induced by a matrix. Vectors
/// are numbered by their base-q value minus one (least-significant
/// coordinate first).
fn matrix_on_nonzero_vectors(gf: &Gf, d: usize, m: &Mat) -> Permutation {
    let q = gf.order();
    let n = q.pow(d as u32) - 1;
    let images = (0..n)
        .map(|i| encode(&m.apply(gf, &decode(i + 1, d, q)), q) - 1)
        .collect();
    Permutation::from_images(images).expect("invertible matrix permutes nonzero vectors")
}

/// Standard generators of GL(d, q): a primitive scaling of the first
/// coordinate, a transvection, and the coordinate cycle.
fn gl_matrices(gf: &Gf, d: usize) -> Vec<Mat> {
    let zeta = gf.generator();
    let mut out = Vec::new();
    let mut diag = Mat::identity(d);
    diag.entries[0] = zeta;
    out.push(diag);
    if d >= 2 {
        let mut transvection = Mat::identity(d);
        transvection.entries[1] = 1; // row 0 += row 1
        out.push(transvection);
        let mut cycle = Mat {
            d,
            entries: vec![0; d * d],
        };
        for i in 0..d {
            cycle.entries[i * d + (i + d - 1) % d] = 1; // e_i -> e_{i+1}
        }
        out.push(cycle);
    }
    out
}

/// GL(d, q) acting on the q^d - 1 nonzero vectors.
pub fn general_linear_on_vectors(d: usize, q: u64) -> Result<PermutationGroup> {
    let gf = Gf::new(q)?;
    let n = gf.order().pow(d as u32) - 1;
    if n > 10_000 {
        return Err(Error::DegreeTooLarge(n));
    }
    let gens = gl_matrices(&gf, d)
        .iter()
        .map(|m| matrix_on_nonzero_vectors(&gf, d, m))
        .collect();
    PermutationGroup::new(n, gens)
}

/// SL(2, q) (q prime) on the q^2 - 1 nonzero vectors: elementary matrices.
pub fn special_linear2_on_vectors(q: u64) -> Result<PermutationGroup> {
    let gf = Gf::new(q)?;
    if gf.extension_degree() != 1 {
        return Err(Error::UnsupportedField(q));
    }
    let mut lower = Mat::identity(2);
    lower.entries[2] = 1; // row 1 += row 0
    let mut upper = Mat::identity(2);
    upper.entries[1] = 1;
    let gens = [upper, lower]
        .iter()
        .map(|m| matrix_on_nonzero_vectors(&gf, 2, m))
        .collect();
    PermutationGroup::new(gf.order() * gf.order() - 1, gens)
}

/// ΓL(2, q) on nonzero vectors: GL(2, q) plus the coordinatewise Frobenius.
pub fn gamma_linear2_on_vectors(q: u64) -> Result<PermutationGroup> {
    let gf = Gf::new(q)?;
    let qn = gf.order();
    let n = qn * qn - 1;
    let mut gens: Vec<Permutation> = gl_matrices(&gf, 2)
        .iter()
        .map(|m| matrix_on_nonzero_vectors(&gf, 2, m))
        .collect();
    let frob = Permutation::from_images(
        (0..n)
            .map(|i| {
                let v = decode(i + 1, 2, qn);
                encode(&[gf.frobenius(v[0]), gf.frobenius(v[1])], qn) - 1
            })
            .collect(),
    )?;
    gens.push(frob);
    PermutationGroup::new(n, gens)
}

/// Affine group on the q^d vectors: translations together with the given
/// linear permutations of nonzero vectors, re-read as maps fixing zero.
///
/// A single basis translation suffices: conjugating by an irreducible
/// linear part reaches a spanning set of translations.
pub fn affine_from_linear(
    q: u64,
    d: usize,
    linear_gens_on_all_vectors: Vec<Permutation>,
) -> Result<PermutationGroup> {
    let gf = Gf::new(q)?;
    let n = gf.order().pow(d as u32);
    let translation = Permutation::from_images(
        (0..n)
            .map(|value| {
                let mut v = decode(value, d, gf.order());
                v[0] = gf.add(v[0], 1);
                encode(&v, gf.order())
            })
            .collect(),
    )?;
    let mut gens = vec![translation];
    gens.extend(linear_gens_on_all_vectors);
    PermutationGroup::new(n, gens)
}

/// Lifts matrices to permutations of all q^d vectors (zero included).
pub fn matrices_on_all_vectors(q: u64, d: usize, mats: &[Mat]) -> Result<Vec<Permutation>> {
    let gf = Gf::new(q)?;
    let n = gf.order().pow(d as u32);
    mats.iter()
        .map(|m| {
            Permutation::from_images(
                (0..n)
                    .map(|value| encode(&m.apply(&gf, &decode(value, d, gf.order())), gf.order()))
                    .collect(),
            )
        })
        .collect()
}

/// AGL(d, q): the full affine group on q^d points.
pub fn affine_general_linear(d: usize, q: u64) -> Result<PermutationGroup> {
    let gf = Gf::new(q)?;
    let linear = matrices_on_all_vectors(q, d, &gl_matrices(&gf, d))?;
    affine_from_linear(q, d, linear)
}

/// Projective line P1(q): points 0..q-1 are the affine field elements,
/// point q is infinity.
pub const fn projective_line_degree(q: usize) -> usize {
    q + 1
}

fn moebius(gf: &Gf, m: &Mat) -> Permutation {
    let q = gf.order();
    let images = (0..=q)
        .map(|point| {
            let (x, y) = if point == q { (1, 0) } else { (point, 1) };
            let xx = gf.add(gf.mul(m.at(0, 0), x), gf.mul(m.at(0, 1), y));
            let yy = gf.add(gf.mul(m.at(1, 0), x), gf.mul(m.at(1, 1), y));
            if yy == 0 {
                q
            } else {
                gf.mul(xx, gf.inv(yy))
            }
        })
        .collect();
    Permutation::from_images(images).expect("invertible matrix acts on the projective line")
}

fn psl2_matrices(gf: &Gf) -> Vec<Mat> {
    let zeta = gf.generator();
    let mut out = Vec::new();
    // Translations x -> x + zeta^j for a basis of the field.
    for j in 0..gf.extension_degree() {
        let b = gf.pow(zeta, j as u64);
        out.push(Mat {
            d: 2,
            entries: vec![1, b, 0, 1],
        });
    }
    // x -> zeta^2 x, determinant 1.
    out.push(Mat {
        d: 2,
        entries: vec![zeta, 0, 0, gf.inv(zeta)],
    });
    // x -> -1/x.
    out.push(Mat {
        d: 2,
        entries: vec![0, gf.neg(1), 1, 0],
    });
    out
}

/// PSL(2, q) on the projective line (degree q + 1).
pub fn psl2(q: u64) -> Result<PermutationGroup> {
    let gf = Gf::new(q)?;
    let gens = psl2_matrices(&gf).iter().map(|m| moebius(&gf, m)).collect();
    PermutationGroup::new(gf.order() + 1, gens)
}

/// PGL(2, q) on the projective line.
pub fn pgl2(q: u64) -> Result<PermutationGroup> {
    let gf = Gf::new(q)?;
    let mut gens: Vec<Permutation> =
        psl2_matrices(&gf).iter().map(|m| moebius(&gf, m)).collect();
    let zeta = gf.generator();
    gens.push(moebius(
        &gf,
        &Mat {
            d: 2,
            entries: vec![zeta, 0, 0, 1],
        },
    ));
    PermutationGroup::new(gf.order() + 1, gens)
}

/// The field automorphism x -> x^(p^power) as a projective-line permutation.
pub fn projective_frobenius(q: u64, power: u32) -> Result<Permutation> {
    let gf = Gf::new(q)?;
    let n = gf.order();
    let e = (gf.characteristic() as u64).pow(power);
    Ok(Permutation::from_images(
        (0..=n)
            .map(|point| if point == n { n } else { gf.pow(point, e) })
            .collect(),
    )
    .expect("field automorphisms permute the line"))
}

/// PSL(2, q) extended by the field automorphism of the given power:
/// PΓL(2, q) when power = 1 and q = p^e with the full automorphism.
pub fn psl2_extended(q: u64, frobenius_power: u32) -> Result<PermutationGroup> {
    let gf = Gf::new(q)?;
    let mut gens: Vec<Permutation> =
        psl2_matrices(&gf).iter().map(|m| moebius(&gf, m)).collect();
    gens.push(projective_frobenius(q, frobenius_power)?);
    PermutationGroup::new(gf.order() + 1, gens)
}

/// PΓL(2, q): PGL(2, q) plus the Frobenius.
pub fn pgammal2(q: u64) -> Result<PermutationGroup> {
    let gf = Gf::new(q)?;
    let mut gens = pgl2(q)?.generators().to_vec();
    gens.push(projective_frobenius(q, 1)?);
    PermutationGroup::new(gf.order() + 1, gens)
}

/// M10 = A6.2_3: PSL(2, 9) extended by the product of a nonsquare scaling
/// with the Frobenius (an element of PΓL outside both PGL and PΣL).
pub fn m10() -> Result<PermutationGroup> {
    let gf = Gf::new(9)?;
    let n = gf.order();
    let zeta = gf.generator();
    let mut gens: Vec<Permutation> =
        psl2_matrices(&gf).iter().map(|m| moebius(&gf, m)).collect();
    let twisted = Permutation::from_images(
        (0..=n)
            .map(|point| {
                if point == n {
                    n
                } else {
                    gf.mul(zeta, gf.frobenius(point))
                }
            })
            .collect(),
    )
    .expect("semilinear map permutes the line");
    gens.push(twisted);
    PermutationGroup::new(n + 1, gens)
}

/// Projective plane points for F_q^3: nonzero vectors with last nonzero
/// coordinate 1, ordered by base-q value.
fn plane_points(gf: &Gf) -> Vec<Vec<usize>> {
    let q = gf.order();
    let n = q * q * q;
    let mut points = Vec::new();
    for value in 1..n {
        let v = decode(value, 3, q);
        let last = v.iter().rposition(|&c| c != 0).unwrap();
        if v[last] == 1 {
            points.push(v);
        }
    }
    points
}

fn plane_action<F>(gf: &Gf, points: &[Vec<usize>], f: F) -> Permutation
where
    F: Fn(&[usize]) -> Vec<usize>,
{
    let index: HashMap<Vec<usize>, usize> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let images = points
        .iter()
        .map(|p| {
            let mut w = f(p);
            let last = w.iter().rposition(|&c| c != 0).expect("nonzero image");
            let scale = gf.inv(w[last]);
            for c in w.iter_mut() {
                *c = gf.mul(*c, scale);
            }
            index[&w]
        })
        .collect();
    Permutation::from_images(images).expect("projective action is a bijection")
}

/// PGL(3, q) on the q^2 + q + 1 projective points. For q = 3 this equals
/// PSL(3, 3).
pub fn pgl3(q: u64) -> Result<PermutationGroup> {
    let gf = Gf::new(q)?;
    let points = plane_points(&gf);
    let gens = gl_matrices(&gf, 3)
        .iter()
        .map(|m| plane_action(&gf, &points, |v| m.apply(&gf, v)))
        .collect();
    PermutationGroup::new(points.len(), gens)
}

/// PΓL(3, q): PGL(3, q) plus the coordinatewise Frobenius.
pub fn pgammal3(q: u64) -> Result<PermutationGroup> {
    let gf = Gf::new(q)?;
    let points = plane_points(&gf);
    let mut gens: Vec<Permutation> = gl_matrices(&gf, 3)
        .iter()
        .map(|m| plane_action(&gf, &points, |v| m.apply(&gf, v)))
        .collect();
    gens.push(plane_action(&gf, &points, |v| {
        v.iter().map(|&c| gf.frobenius(c)).collect()
    }));
    PermutationGroup::new(points.len(), gens)
}

/// Sym(bottom) wr Sym(top) in its imprimitive action on top*bottom points;
/// the blocks are the `top` consecutive runs of `bottom` points.
pub fn wreath_imprimitive(top: usize, bottom: usize) -> Result<PermutationGroup> {
    let n = top
        .checked_mul(bottom)
        .filter(|&n| n <= 10_000)
        .ok_or(Error::DegreeTooLarge(usize::MAX))?;
    let mut gens = Vec::new();
    // Sym(bottom) inside the first block.
    if bottom >= 2 {
        gens.push(Permutation::transposition(n, 0, 1).unwrap());
    }
    if bottom >= 3 {
        gens.push(Permutation::cycle(n, &(0..bottom).collect::<Vec<_>>()).unwrap());
    }
    // Sym(top) permuting the blocks.
    if top >= 2 {
        let swap = Permutation::from_images(
            (0..n)
                .map(|p| match p / bottom {
                    0 => bottom + p % bottom,
                    1 => p % bottom,
                    _ => p,
                })
                .collect(),
        )
        .unwrap();
        gens.push(swap);
    }
    if top >= 3 {
        let cycle = Permutation::from_images(
            (0..n)
                .map(|p| (p / bottom + 1) % top * bottom + p % bottom)
                .collect(),
        )
        .unwrap();
        gens.push(cycle);
    }
    PermutationGroup::new(n, gens)
}

/// Sym(m) wr Sym(k) in its product action on the m^k tuples.
pub fn wreath_product_action(m: usize, k: usize) -> Result<PermutationGroup> {
    let n = m.pow(k as u32);
    if n > 100 {
        return Err(Error::DegreeTooLarge(n));
    }
    let mut gens = Vec::new();
    let coord = |value: usize, i: usize| value / m.pow(i as u32) % m;
    let with_coord = |value: usize, i: usize, c: usize| {
        let old = coord(value, i);
        value - old * m.pow(i as u32) + c * m.pow(i as u32)
    };
    // Sym(m) on coordinate 0.
    for base_gen in symmetric_group(m).generators() {
        gens.push(
            Permutation::from_images(
                (0..n)
                    .map(|v| with_coord(v, 0, base_gen.image(coord(v, 0))))
                    .collect(),
            )
            .unwrap(),
        );
    }
    // Sym(k) permuting coordinates.
    for top_gen in symmetric_group(k).generators() {
        gens.push(
            Permutation::from_images(
                (0..n)
                    .map(|v| {
                        let mut w = 0;
                        for i in 0..k {
                            w += coord(v, i) * m.pow(top_gen.image(i) as u32);
                        }
                        w
                    })
                    .collect(),
            )
            .unwrap(),
        );
    }
    PermutationGroup::new(n, gens)
}

/// The action induced on k-subsets of the domain (subsets ordered
/// lexicographically as sorted tuples).
pub fn action_on_subsets(group: &PermutationGroup, k: usize) -> PermutationGroup {
    let n = group.degree();
    let subsets = k_subsets(n, k);
    let index: HashMap<Vec<usize>, usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let gens = group
        .generators()
        .iter()
        .map(|g| {
            Permutation::from_images(
                subsets
                    .iter()
                    .map(|s| {
                        let mut image: Vec<usize> = s.iter().map(|&p| g.image(p)).collect();
                        image.sort_unstable();
                        index[&image]
                    })
                    .collect(),
            )
            .unwrap()
        })
        .collect();
    PermutationGroup::new(subsets.len(), gens).unwrap()
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for p in start..n {
            current.push(p);
            rec(p + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// The 15 partitions of a 5-point set into parts of sizes 1, 2, 2, encoded
/// as (fixed point, pairing); the induced degree-15 action of a group on 5
/// points.
pub fn action_on_122_partitions(group: &PermutationGroup) -> PermutationGroup {
    assert_eq!(group.degree(), 5);
    let objects = partitions_122();
    let index: HashMap<[usize; 5], usize> = objects
        .iter()
        .enumerate()
        .map(|(i, o)| (*o, i))
        .collect();
    let gens = group
        .generators()
        .iter()
        .map(|g| {
            Permutation::from_images(
                objects
                    .iter()
                    .map(|&[f, a, b, c, d]| {
                        let key = canonical_122(
                            g.image(f),
                            (g.image(a), g.image(b)),
                            (g.image(c), g.image(d)),
                        );
                        index[&key]
                    })
                    .collect(),
            )
            .unwrap()
        })
        .collect();
    PermutationGroup::new(objects.len(), gens).unwrap()
}

/// Encoded as [fixed, a, b, c, d] with {a,b} < {c,d} lexicographically and
/// each pair sorted.
fn partitions_122() -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for f in 0..5 {
        let rest: Vec<usize> = (0..5).filter(|&p| p != f).collect();
        let [w, x, y, z] = [rest[0], rest[1], rest[2], rest[3]];
        for (p1, p2) in [((w, x), (y, z)), ((w, y), (x, z)), ((w, z), (x, y))] {
            out.push(canonical_122(f, p1, p2));
        }
    }
    out
}

/// Index of the 1|2|2 partition with the given fixed point and pairs.
pub fn partition_122_index(f: usize, p1: (usize, usize), p2: (usize, usize)) -> usize {
    let objects = partitions_122();
    let key = canonical_122(f, p1, p2);
    objects.iter().position(|o| *o == key).expect("valid partition")
}

fn canonical_122(f: usize, p1: (usize, usize), p2: (usize, usize)) -> [usize; 5] {
    let sort_pair = |(a, b): (usize, usize)| if a < b { (a, b) } else { (b, a) };
    let (p1, p2) = (sort_pair(p1), sort_pair(p2));
    let (p1, p2) = if p1 < p2 { (p1, p2) } else { (p2, p1) };
    [f, p1.0, p1.1, p2.0, p2.1]
}

/// The action of `group` on the right cosets of `subgroup`, with cosets
/// numbered by the lexicographically smallest image array of their
/// representatives. Both groups must be enumerable within `cap`.
pub fn coset_action(
    group: &PermutationGroup,
    subgroup: &PermutationGroup,
    cap: u64,
) -> Result<PermutationGroup> {
    let g_chain = StabilizerChain::build(group);
    let h_chain = StabilizerChain::build(subgroup);
    let h_elements: Vec<Permutation> = h_chain.elements(cap)?.collect();
    let rep = |g: &Permutation| -> Permutation {
        h_elements
            .iter()
            .map(|h| h.compose_unchecked(g))
            .min()
            .expect("subgroup is nonempty")
    };
    let mut reps: Vec<Permutation> = Vec::new();
    for g in g_chain.elements(cap)? {
        let r = rep(&g);
        if !reps.contains(&r) {
            reps.push(r);
        }
    }
    reps.sort();
    let index: HashMap<&Permutation, usize> =
        reps.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let degree = reps.len();
    let gens = group
        .generators()
        .iter()
        .map(|s| {
            Permutation::from_images(
                reps.iter()
                    .map(|r| index[&rep(&r.compose_unchecked(s))])
                    .collect(),
            )
            .unwrap()
        })
        .collect();
    PermutationGroup::new(degree, gens)
}

/// Relabels the action onto an invariant point set (sorted); fails if some
/// generator moves a point out of the set.
pub fn restriction(group: &PermutationGroup, points: &[usize]) -> Result<PermutationGroup> {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let position: HashMap<usize, usize> = sorted
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    let gens = group
        .generators()
        .iter()
        .map(|g| {
            let images = sorted
                .iter()
                .map(|&p| {
                    position.get(&g.image(p)).copied().ok_or_else(|| {
                        Error::PreconditionFailed(format!(
                            "point set is not invariant: {} leaves it",
                            p
                        ))
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermutationGroup::new(sorted.len(), gens)
}
