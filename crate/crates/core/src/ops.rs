//! Structural constructions on complexes: products, pyramids, bipyramids,
//! facet augmentation, and quotients by a fixed-point free involution.

use std::collections::HashMap;

use crate::complex::{Complex, FaceRef};
use crate::error::{Error, Result};

/// Extended element table for product construction: all proper elements plus
/// the top, with their "polytope dimension" (top counts as dim d+1).
struct Extended {
    /// (dim, idx) per code; the last code is the top
    dims: Vec<usize>,
    refs: Vec<Option<(usize, u32)>>,
    top: u32,
    code: HashMap<(usize, u32), u32>,
}

fn extend(k: &Complex) -> Extended {
    let mut dims = Vec::new();
    let mut refs = Vec::new();
    let mut code = HashMap::new();
    for lvl in 0..=k.dim() {
        for i in 0..k.size(lvl) {
            code.insert((lvl, i as u32), dims.len() as u32);
            dims.push(lvl);
            refs.push(Some((lvl, i as u32)));
        }
    }
    let top = dims.len() as u32;
    dims.push(k.dim() + 1);
    refs.push(None);
    Extended {
        dims,
        refs,
        top,
        code,
    }
}

impl Extended {
    /// Codes covered by `c`: the top covers all facets, proper elements cover
    /// their cover lists, vertices cover nothing (the empty face pairs only
    /// with the empty face of the other factor).
    fn covered(&self, k: &Complex, c: u32) -> Vec<u32> {
        match self.refs[c as usize] {
            None => (0..k.size(k.dim()))
                .map(|i| self.code[&(k.dim(), i as u32)])
                .collect(),
            Some((0, _)) => Vec::new(),
            Some((lvl, i)) => k
                .covers(lvl, i as usize)
                .iter()
                .map(|&x| self.code[&(lvl - 1, x)])
                .collect(),
        }
    }
}

/// The direct product. Proper faces are pairs (F, G) of nonempty faces of the
/// factors (each possibly the whole factor), excluding the pair of both tops;
/// the result is a (d1 + d2 + 1)-complex.
pub fn product(k1: &Complex, k2: &Complex) -> Complex {
    let d = k1.dim() + k2.dim() + 1;
    let e1 = extend(k1);
    let e2 = extend(k2);
    let mut level_sizes = vec![0u32; d + 1];
    let mut index: HashMap<(u32, u32), u32> = HashMap::new();
    for a in 0..e1.dims.len() as u32 {
        for b in 0..e2.dims.len() as u32 {
            if a == e1.top && b == e2.top {
                continue;
            }
            let dim = e1.dims[a as usize] + e2.dims[b as usize];
            index.insert((a, b), level_sizes[dim]);
            level_sizes[dim] += 1;
        }
    }
    let mut covers: Vec<Vec<Vec<u32>>> = level_sizes
        .iter()
        .map(|&n| vec![Vec::new(); n as usize])
        .collect();
    for a in 0..e1.dims.len() as u32 {
        for b in 0..e2.dims.len() as u32 {
            if a == e1.top && b == e2.top {
                continue;
            }
            let dim = e1.dims[a as usize] + e2.dims[b as usize];
            if dim == 0 {
                continue;
            }
            let id = index[&(a, b)] as usize;
            let cs = &mut covers[dim][id];
            for a2 in e1.covered(k1, a) {
                cs.push(index[&(a2, b)]);
            }
            for b2 in e2.covered(k2, b) {
                cs.push(index[&(a, b2)]);
            }
        }
    }
    Complex::new(d, covers)
}

/// Pyramid: one new apex joined to every face; the old top becomes the base
/// facet of the (d+1)-complex.
pub fn pyramid(k: &Complex) -> Complex {
    let d = k.dim();
    let mut covers: Vec<Vec<Vec<u32>>> = Vec::with_capacity(d + 2);
    // dim 0: original vertices, then the apex
    covers.push(vec![Vec::new(); k.size(0) + 1]);
    let apex = k.size(0) as u32;
    for lvl in 1..=d {
        let n = k.size(lvl);
        let n_cone = k.size(lvl - 1);
        let mut level = Vec::with_capacity(n + n_cone);
        for i in 0..n {
            level.push(k.covers(lvl, i).to_vec());
        }
        // cone over (lvl-1)-element i sits at index n + i
        for i in 0..n_cone {
            let mut cs = vec![i as u32];
            if lvl == 1 {
                cs.push(apex);
            } else {
                let n_below = k.size(lvl - 1) as u32;
                for &y in k.covers(lvl - 1, i) {
                    cs.push(n_below + y);
                }
            }
            level.push(cs);
        }
        covers.push(level);
    }
    // dim d+1: the base (old top), then cones over facets
    let mut topmost = Vec::with_capacity(1 + k.size(d));
    topmost.push((0..k.size(d) as u32).collect::<Vec<u32>>());
    for i in 0..k.size(d) {
        let mut cs = vec![i as u32];
        if d == 0 {
            cs.push(apex);
        } else {
            let n_below = k.size(d) as u32;
            for &y in k.covers(d, i) {
                cs.push(n_below + y);
            }
        }
        topmost.push(cs);
    }
    covers.push(topmost);
    Complex::new(d + 1, covers)
}

/// Bipyramid: two new apexes, each joined to every proper face; no face
/// contains both apexes and the old top is not a face of the result.
pub fn bipyramid(k: &Complex) -> Complex {
    let d = k.dim();
    let mut covers: Vec<Vec<Vec<u32>>> = Vec::with_capacity(d + 2);
    covers.push(vec![Vec::new(); k.size(0) + 2]);
    let apex = [k.size(0) as u32, k.size(0) as u32 + 1];
    for lvl in 1..=(d + 1) {
        let n = if lvl <= d { k.size(lvl) } else { 0 };
        let n_cone = k.size(lvl - 1);
        let mut level = Vec::with_capacity(n + 2 * n_cone);
        for i in 0..n {
            level.push(k.covers(lvl, i).to_vec());
        }
        for side in 0..2 {
            for i in 0..n_cone {
                let mut cs = vec![i as u32];
                if lvl == 1 {
                    cs.push(apex[side]);
                } else {
                    let base = if lvl - 1 <= d { k.size(lvl - 1) as u32 } else { 0 };
                    let span = k.size(lvl - 2) as u32;
                    for &y in k.covers(lvl - 1, i) {
                        cs.push(base + side as u32 * span + y);
                    }
                }
                level.push(cs);
            }
        }
        covers.push(level);
    }
    Complex::new(d + 1, covers)
}

/// Replaces the given facet by the cone over its boundary: the facet is
/// removed, a new apex is added, and every proper face G strictly below the
/// facet gains a companion face G + apex.
pub fn augment(k: &Complex, facet: FaceRef) -> Result<Complex> {
    let d = k.dim();
    if facet.dim != d || facet.idx >= k.size(d) {
        return Err(Error::NotAFacet {
            face: facet,
            expected: d,
        });
    }
    // strict downset of the facet per dimension
    let mut downset: Vec<Vec<u32>> = vec![Vec::new(); d];
    let mut frontier: Vec<u32> = k.covers(d, facet.idx).to_vec();
    for lvl in (0..d).rev() {
        frontier.sort_unstable();
        frontier.dedup();
        downset[lvl] = frontier.clone();
        let mut next = Vec::new();
        if lvl > 0 {
            for &x in &downset[lvl] {
                next.extend_from_slice(k.covers(lvl, x as usize));
            }
        }
        frontier = next;
    }
    // cone index per dimension: position of x within downset[lvl]
    let cone_pos = |lvl: usize, x: u32| -> u32 {
        downset[lvl].binary_search(&x).expect("in downset") as u32
    };

    let mut covers: Vec<Vec<Vec<u32>>> = Vec::with_capacity(d + 1);
    covers.push(vec![Vec::new(); k.size(0) + 1]);
    let apex = k.size(0) as u32;
    for lvl in 1..=d {
        let keep_all = lvl < d;
        let n = if keep_all { k.size(lvl) } else { k.size(lvl) - 1 };
        let mut level: Vec<Vec<u32>> = Vec::new();
        // originals, skipping the removed facet at the top level
        let old_to_new: Vec<u32> = if keep_all {
            (0..k.size(lvl) as u32).collect()
        } else {
            let mut map = Vec::with_capacity(k.size(lvl));
            let mut next = 0u32;
            for i in 0..k.size(lvl) {
                if i == facet.idx {
                    map.push(u32::MAX);
                } else {
                    map.push(next);
                    next += 1;
                }
            }
            map
        };
        for i in 0..k.size(lvl) {
            if !keep_all && i == facet.idx {
                continue;
            }
            level.push(k.covers(lvl, i).to_vec());
        }
        // cones over the (lvl-1)-dimensional downset
        for &x in &downset[lvl - 1] {
            let mut cs = vec![x];
            if lvl == 1 {
                cs.push(apex);
            } else {
                let base = k.size(lvl - 1) as u32;
                for &y in k.covers(lvl - 1, x as usize) {
                    cs.push(base + cone_pos(lvl - 2, y));
                }
            }
            level.push(cs);
        }
        let _ = (n, old_to_new);
        covers.push(level);
    }
    let out = Complex::new(d, covers);
    out.check_axioms()?;
    Ok(out)
}

/// An involution on elements, one permutation per dimension.
pub type ElementInvolution = Vec<Vec<u32>>;

/// Quotient by a fixed-point free involutive automorphism: elements become
/// orbits, with orbits comparable when any representatives are.
pub fn quotient(k: &Complex, inv: &ElementInvolution) -> Result<Complex> {
    let d = k.dim();
    if inv.len() != d + 1 || (0..=d).any(|lvl| inv[lvl].len() != k.size(lvl)) {
        return Err(Error::NotAnAutomorphism(
            "involution has wrong shape".to_string(),
        ));
    }
    for lvl in 0..=d {
        for i in 0..k.size(lvl) {
            let j = inv[lvl][i];
            if j as usize >= k.size(lvl) || inv[lvl][j as usize] != i as u32 {
                return Err(Error::NotAnAutomorphism(format!(
                    "not an involution at ({lvl}:{i})"
                )));
            }
            if j as usize == i {
                return Err(Error::InvolutionHasFixedElement(FaceRef {
                    dim: lvl,
                    idx: i,
                }));
            }
        }
    }
    // automorphism: covers must be preserved
    for lvl in 1..=d {
        for i in 0..k.size(lvl) {
            let mut mapped: Vec<u32> = k
                .covers(lvl, i)
                .iter()
                .map(|&c| inv[lvl - 1][c as usize])
                .collect();
            mapped.sort_unstable();
            if mapped != k.covers(lvl, inv[lvl][i] as usize) {
                return Err(Error::NotAnAutomorphism(format!(
                    "covers not preserved at ({lvl}:{i})"
                )));
            }
        }
    }
    // orbits, represented by their least member
    let mut orbit_id: Vec<Vec<u32>> = Vec::with_capacity(d + 1);
    let mut covers: Vec<Vec<Vec<u32>>> = Vec::with_capacity(d + 1);
    for lvl in 0..=d {
        let mut ids = vec![u32::MAX; k.size(lvl)];
        let mut next = 0u32;
        for i in 0..k.size(lvl) {
            if ids[i] == u32::MAX {
                ids[i] = next;
                ids[inv[lvl][i] as usize] = next;
                next += 1;
            }
        }
        orbit_id.push(ids);
        covers.push(vec![Vec::new(); next as usize]);
    }
    for lvl in 1..=d {
        let mut seen = vec![false; covers[lvl].len()];
        for i in 0..k.size(lvl) {
            let o = orbit_id[lvl][i] as usize;
            if seen[o] {
                continue;
            }
            seen[o] = true;
            let mut cs: Vec<u32> = k
                .covers(lvl, i)
                .iter()
                .map(|&c| orbit_id[lvl - 1][c as usize])
                .collect();
            cs.sort_unstable();
            cs.dedup();
            covers[lvl][o] = cs;
        }
    }
    let out = Complex::new(d, covers);
    out.check_axioms()
        .map_err(|e| Error::InvalidResult(format!("quotient violates the axioms: {e}")))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn square_times_segment_is_cube() {
        let p = product(
            &families::polygon(4).unwrap(),
            &families::segment(),
        );
        assert_eq!(p.counts(), vec![8, 12, 6]);
        assert!(p.validate_structure().axioms_pass());
    }

    #[test]
    fn product_of_triangles_counts_and_euler() {
        let c3 = families::polygon(3).unwrap();
        let p = product(&c3, &c3);
        assert_eq!(p.counts(), vec![9, 18, 15, 6]);
        // Euler relation for 4-polytopes
        assert_eq!(9 - 18 + 15 - 6, 0);
        assert!(p.validate_structure().axioms_pass());
    }

    #[test]
    fn pyramid_of_square_is_square_pyramid() {
        let p = pyramid(&families::polygon(4).unwrap());
        assert_eq!(p.counts(), vec![5, 8, 5]);
        assert!(p.validate_structure().axioms_pass());
    }

    #[test]
    fn bipyramid_of_square_is_octahedron() {
        let p = bipyramid(&families::polygon(4).unwrap());
        assert_eq!(p.counts(), vec![6, 12, 8]);
        assert!(p.validate_structure().axioms_pass());
    }

    #[test]
    fn augment_cube_replaces_square_with_four_triangles() {
        let cube = families::cube(3).unwrap();
        let out = augment(&cube, FaceRef { dim: 2, idx: 0 }).unwrap();
        assert_eq!(out.counts(), vec![9, 16, 9]);
        assert!(out.validate_structure().axioms_pass());
    }

    #[test]
    fn augment_rejects_non_facet() {
        let cube = families::cube(3).unwrap();
        assert!(augment(&cube, FaceRef { dim: 1, idx: 0 }).is_err());
    }

    #[test]
    fn quotient_rejects_fixed_elements() {
        let sq = families::polygon(4).unwrap();
        // reflection fixing two vertices
        let inv = vec![vec![0, 3, 2, 1], vec![3, 2, 1, 0]];
        match quotient(&sq, &inv) {
            Err(Error::InvolutionHasFixedElement(f)) => {
                assert_eq!(f, FaceRef { dim: 0, idx: 0 })
            }
            other => panic!("expected fixed-element error, got {other:?}"),
        }
    }

    #[test]
    fn quotient_of_hexagon_is_triangle_like() {
        let hex = families::polygon(6).unwrap();
        let inv = vec![
            vec![3, 4, 5, 0, 1, 2],
            vec![3, 4, 5, 0, 1, 2],
        ];
        let q = quotient(&hex, &inv).unwrap();
        assert_eq!(q.counts(), vec![3, 3]);
        assert!(q.validate_structure().axioms_pass());
    }
}
