use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Orbit of `point` under the generators, in breadth-first discovery order
/// (generators applied in list order). The smallest closed set containing
/// `point`.
pub fn orbit(gens: &[Permutation], point: usize, degree: usize) -> Result<Vec<usize>> {
    if point >= degree {
        return Err(Error::PointOutOfRange { point, degree });
    }
    let mut in_orbit = vec![false; degree];
    in_orbit[point] = true;
    let mut orb = vec![point];
    let mut head = 0;
    while head < orb.len() {
        let p = orb[head];
        head += 1;
        for g in gens {
            let q = g.image(p);
            if !in_orbit[q] {
                in_orbit[q] = true;
                orb.push(q);
            }
        }
    }
    Ok(orb)
}

/// Orbit together with Schreier witnesses: for each orbit member `q`, a
/// permutation in the generated group mapping `point` to `q`.
pub fn orbit_with_witnesses(
    gens: &[Permutation],
    point: usize,
    degree: usize,
) -> Result<(Vec<usize>, HashMap<usize, Permutation>)> {
    if point >= degree {
        return Err(Error::PointOutOfRange { point, degree });
    }
    let mut witness: HashMap<usize, Permutation> = HashMap::new();
    witness.insert(point, Permutation::identity(degree));
    let mut orb = vec![point];
    let mut head = 0;
    while head < orb.len() {
        let p = orb[head];
        head += 1;
        for g in gens {
            let q = g.image(p);
            if !witness.contains_key(&q) {
                let w = witness[&p].compose_unchecked(g);
                witness.insert(q, w);
                orb.push(q);
            }
        }
    }
    Ok((orb, witness))
}
