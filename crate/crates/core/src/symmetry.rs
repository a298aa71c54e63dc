//! Combinatorial automorphisms via flag extension, isomorphism testing, flag
//! orbits, zigzag transitivity, and special-cut class enumeration.

use std::collections::HashMap;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::families;
use crate::flags::{for_each_flag, FlagIndex};
use crate::util::UnionFind;
use crate::zigzag::ZigzagDecomposition;

/// The automorphism group represented on flags. The action is free, so each
/// automorphism is identified by the image of the base flag; full flag
/// permutations are materialized on demand.
pub struct AutomorphismGroup {
    pub base_flag: u32,
    /// image of the base flag under every automorphism, sorted
    pub base_images: Vec<u32>,
    /// flag -> orbit id, orbits numbered by least member
    pub flag_orbits: Vec<u32>,
    pub orbit_count: usize,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.base_images.len()
    }
}

/// Extends `from -> to` along the sigma-labeled flag graphs; returns the full
/// flag map when the extension is consistent and bijective.
fn try_extend(f1: &FlagIndex, f2: &FlagIndex, from: u32, to: u32) -> Option<Vec<u32>> {
    debug_assert_eq!(f1.dim(), f2.dim());
    debug_assert_eq!(f1.len(), f2.len());
    let n = f1.len();
    let d1 = f1.dim() + 1;
    let mut map = vec![u32::MAX; n];
    let mut inv = vec![u32::MAX; n];
    map[from as usize] = to;
    inv[to as usize] = from;
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        let y = map[x as usize];
        for i in 1..=d1 {
            let x2 = f1.sigma_unchecked(i, x);
            let y2 = f2.sigma_unchecked(i, y);
            if map[x2 as usize] == u32::MAX {
                if inv[y2 as usize] != u32::MAX {
                    return None;
                }
                map[x2 as usize] = y2;
                inv[y2 as usize] = x2;
                stack.push(x2);
            } else if map[x2 as usize] != y2 {
                return None;
            }
        }
    }
    // connectivity of the flag graph guarantees completeness
    debug_assert!(map.iter().all(|&v| v != u32::MAX));
    Some(map)
}

/// Computes the automorphism group of a complex with connected flag graph and
/// connected residues (so flag maps induce face maps).
pub fn automorphisms(fi: &FlagIndex) -> AutomorphismGroup {
    let n = fi.len();
    let mut base_images = Vec::new();
    let mut uf = UnionFind::new(n);
    for g in 0..n as u32 {
        if let Some(map) = try_extend(fi, fi, 0, g) {
            base_images.push(g);
            for f in 0..n as u32 {
                uf.union(f, map[f as usize]);
            }
        }
    }
    let (flag_orbits, orbit_count) = uf.class_ids();
    AutomorphismGroup {
        base_flag: 0,
        base_images,
        flag_orbits,
        orbit_count,
    }
}

/// Materializes one automorphism (by base-flag image) as a flag permutation.
pub fn flag_permutation(fi: &FlagIndex, base_image: u32) -> Option<Vec<u32>> {
    try_extend(fi, fi, 0, base_image)
}

/// Derives the induced element permutation of a flag permutation.
pub fn element_map(k: &Complex, fi: &FlagIndex, flag_map: &[u32]) -> Vec<Vec<u32>> {
    let d = k.dim();
    let mut first: Vec<Vec<u32>> = (0..=d).map(|lvl| vec![u32::MAX; k.size(lvl)]).collect();
    for_each_flag(k, |f, faces| {
        for (lvl, &x) in faces.iter().enumerate() {
            if first[lvl][x as usize] == u32::MAX {
                first[lvl][x as usize] = f;
            }
        }
    });
    let mut out: Vec<Vec<u32>> = (0..=d).map(|lvl| vec![0u32; k.size(lvl)]).collect();
    for lvl in 0..=d {
        for x in 0..k.size(lvl) {
            let f = first[lvl][x];
            let image = fi.flag(k, flag_map[f as usize]);
            out[lvl][x] = image.face(lvl);
        }
    }
    out
}

/// Flag-extension isomorphism test.
pub fn is_isomorphic(k1: &Complex, k2: &Complex) -> bool {
    if k1.dim() != k2.dim() || k1.counts() != k2.counts() {
        return false;
    }
    let cap = crate::flag_cap_from_env();
    let (Ok(f1), Ok(f2)) = (FlagIndex::build(k1, cap), FlagIndex::build(k2, cap)) else {
        return false;
    };
    if f1.len() != f2.len() {
        return false;
    }
    (0..f2.len() as u32).any(|g| try_extend(&f1, &f2, 0, g).is_some())
}

/// Whether the group acts transitively on zigzags: zigzags touching a common
/// flag orbit are equivalent, and that relation generates the orbit partition.
pub fn is_z_transitive(group: &AutomorphismGroup, zd: &ZigzagDecomposition) -> bool {
    zigzag_orbit_count(group, zd) == 1
}

pub fn zigzag_orbit_count(group: &AutomorphismGroup, zd: &ZigzagDecomposition) -> usize {
    let mut uf = UnionFind::new(zd.len());
    let mut first = vec![u32::MAX; group.orbit_count];
    for f in 0..group.flag_orbits.len() as u32 {
        let orbit = group.flag_orbits[f as usize] as usize;
        let z = zd.zigzag_of_flag(f);
        if first[orbit] == u32::MAX {
            first[orbit] = z;
        } else {
            uf.union(first[orbit], z);
        }
    }
    uf.class_count()
}

/// Structural uniformity: all zigzags share length, signature, and
/// intersection vector.
pub fn is_z_uniform(zd: &ZigzagDecomposition) -> bool {
    if zd.len() <= 1 {
        return true;
    }
    let z0 = &zd.zigzags()[0];
    let iv0 = zd.int_vector(0);
    (1..zd.len() as u32).all(|i| {
        let z = &zd.zigzags()[i as usize];
        z.length == z0.length && z.signature == z0.signature && zd.int_vector(i) == iv0
    })
}

/// Enumerates the isomorphism classes of special cuts of the 600-cell with k
/// removed vertices: orbit representatives of independent k-sets under the
/// symmetry group, then deduplication of the resulting complexes.
pub fn enumerate_special_cut_classes(k: usize) -> Result<(usize, Vec<Vec<u32>>)> {
    if k == 0 || k > 3 {
        return Err(Error::ParameterOutOfRange(format!(
            "special cut enumeration supports k in 1..=3, got {k}"
        )));
    }
    let (_, adj) = families::cell600_graph();
    let n = adj.len();
    let non_adjacent = |a: u32, b: u32| a != b && !adj[a as usize].contains(&b);

    // all independent k-subsets, lexicographically
    let mut tuples: Vec<Vec<u32>> = Vec::new();
    match k {
        1 => {
            for a in 0..n as u32 {
                tuples.push(vec![a]);
            }
        }
        2 => {
            for a in 0..n as u32 {
                for b in (a + 1)..n as u32 {
                    if non_adjacent(a, b) {
                        tuples.push(vec![a, b]);
                    }
                }
            }
        }
        _ => {
            for a in 0..n as u32 {
                for b in (a + 1)..n as u32 {
                    if !non_adjacent(a, b) {
                        continue;
                    }
                    for c in (b + 1)..n as u32 {
                        if non_adjacent(a, c) && non_adjacent(b, c) {
                            tuples.push(vec![a, b, c]);
                        }
                    }
                }
            }
        }
    }
    let index: HashMap<Vec<u32>, u32> = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i as u32))
        .collect();
    let gens = families::cell600_aut_generators();
    let mut uf = UnionFind::new(tuples.len());
    for (i, t) in tuples.iter().enumerate() {
        for gen in &gens {
            let mut image: Vec<u32> = t.iter().map(|&v| gen[v as usize]).collect();
            image.sort_unstable();
            uf.union(i as u32, index[&image]);
        }
    }
    let (classes, _) = uf.class_ids();
    let mut reps: Vec<Vec<u32>> = Vec::new();
    let mut seen_class = vec![false; tuples.len()];
    for (i, t) in tuples.iter().enumerate() {
        let c = classes[i] as usize;
        if !seen_class[c] {
            seen_class[c] = true;
            reps.push(t.clone());
        }
    }

    // deduplicate the cut polytopes by invariants, then isomorphism
    let k600 = families::cell600();
    let cap = crate::flag_cap_from_env();
    let mut survivors: Vec<(Vec<usize>, String, Complex, Vec<u32>)> = Vec::new();
    for rep in reps {
        let cut = families::special_cut(&k600, &rep)?;
        let fi = FlagIndex::build(&cut, cap)?;
        let zd = ZigzagDecomposition::build(&fi);
        let invariant = (cut.counts(), zd.z_vector_string());
        let duplicate = survivors.iter().any(|(counts, z, existing, _)| {
            *counts == invariant.0 && *z == invariant.1 && is_isomorphic(existing, &cut)
        });
        if !duplicate {
            survivors.push((invariant.0, invariant.1, cut, rep));
        }
    }
    let reps_out: Vec<Vec<u32>> = survivors.into_iter().map(|(_, _, _, r)| r).collect();
    Ok((reps_out.len(), reps_out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::ops;

    fn index(k: &Complex) -> FlagIndex {
        FlagIndex::build(k, crate::DEFAULT_FLAG_CAP).unwrap()
    }

    #[test]
    fn simplex_is_regular() {
        let k = families::simplex(4).unwrap();
        let fi = index(&k);
        let group = automorphisms(&fi);
        assert_eq!(group.orbit_count, 1);
        assert_eq!(group.order(), fi.len());
    }

    #[test]
    fn platonic_group_orders() {
        for (k, expected) in [
            (families::simplex(3).unwrap(), 24),
            (families::cube(3).unwrap(), 48),
            (families::dodecahedron(), 120),
        ] {
            let fi = index(&k);
            let group = automorphisms(&fi);
            assert_eq!(group.order(), expected);
            assert_eq!(group.orbit_count * group.order(), fi.len());
        }
    }

    #[test]
    fn half_cube_4_is_cross_polytope() {
        assert!(is_isomorphic(
            &families::half_cube(4).unwrap(),
            &families::cross_polytope(4).unwrap()
        ));
    }

    #[test]
    fn wythoff_zero_is_identity() {
        let g3 = families::cube(3).unwrap();
        let w = crate::wythoff::wythoff(&g3, &[0]).unwrap();
        assert!(is_isomorphic(&g3, &w));
    }

    #[test]
    fn simplex_and_cross_differ() {
        assert!(!is_isomorphic(
            &families::simplex(4).unwrap(),
            &families::cross_polytope(4).unwrap()
        ));
    }

    #[test]
    fn bipyramid_alpha2_is_dual_prism3() {
        let bp = ops::bipyramid(&families::simplex(2).unwrap());
        let dual_prism = families::prism_map(3).unwrap().dual();
        assert!(is_isomorphic(&bp, &dual_prism));
    }

    #[test]
    fn antiprism3_is_octahedron() {
        assert!(is_isomorphic(
            &families::antiprism_map(3).unwrap(),
            &families::cross_polytope(3).unwrap()
        ));
    }

    #[test]
    fn great_dodecahedron_group_order() {
        let fi = index(&families::great_dodecahedron());
        assert_eq!(automorphisms(&fi).order(), 120);
    }
}
