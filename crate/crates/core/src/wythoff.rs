//! The Wythoff kaleidoscope construction K(V) and its derived conveniences.
//!
//! Faces of dimension k are pairs (S, c): S an admissible subset of the
//! dimensions {0..d} with |S| = k, and c a connected component of the flag
//! graph restricted to the colors of S together with its passive neighbors.
//! Two faces are incident when S nests and the flag sets intersect.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::flags::FlagIndex;

/// Every maximal run of consecutive dimensions in `s` must contain a ringed
/// dimension.
fn admissible(s: u32, ringed: u32, d: usize) -> bool {
    let mut x = 0usize;
    while x <= d {
        if s >> x & 1 == 1 {
            let mut hit = false;
            let mut y = x;
            while y <= d && s >> y & 1 == 1 {
                hit |= ringed >> y & 1 == 1;
                y += 1;
            }
            if !hit {
                return false;
            }
            x = y;
        } else {
            x += 1;
        }
    }
    true
}

/// Enabled sigma colors for the face type S: the colors of S itself plus the
/// passive dimensions (not in S, not ringed, not adjacent to S along the
/// Coxeter path).
fn colors(s: u32, ringed: u32, d: usize) -> Vec<bool> {
    let mut enabled = vec![false; d + 2];
    for x in 0..=d {
        let in_s = s >> x & 1 == 1;
        let passive = !in_s
            && ringed >> x & 1 == 0
            && (x == 0 || s >> (x - 1) & 1 == 0)
            && (x == d || s >> (x + 1) & 1 == 0);
        if in_s || passive {
            enabled[x + 1] = true;
        }
    }
    enabled
}

/// The Wythoff construction K(V) for a nonempty V inside {0..=d}.
pub fn wythoff(k: &Complex, v: &[usize]) -> Result<Complex> {
    let d = k.dim();
    if v.is_empty() || v.iter().any(|&x| x > d) {
        return Err(Error::BadRingedSubset(d));
    }
    let mut ringed: u32 = 0;
    for &x in v {
        ringed |= 1 << x;
    }
    let fi = FlagIndex::build(k, crate::flag_cap_from_env())?;
    if !fi.flag_graph_connected() {
        return Err(Error::InvalidResult(
            "Wythoff construction needs a connected flag graph".to_string(),
        ));
    }
    let n_flags = fi.len();

    // per admissible S: component labels per flag, component count, and the
    // global face index offset at its dimension
    let full: u32 = if d + 1 == 32 { u32::MAX } else { (1 << (d + 1)) - 1 };
    let mut comp: Vec<Option<(Vec<u32>, usize, u32)>> = vec![None; full as usize + 1];
    let mut level_sizes = vec![0u32; d + 1];
    for s in 0..=full {
        let size = s.count_ones() as usize;
        if size > d || !admissible(s, ringed, d) {
            continue;
        }
        let (labels, count) = fi.components_with_colors(&colors(s, ringed, d));
        let offset = level_sizes[size];
        level_sizes[size] += count as u32;
        comp[s as usize] = Some((labels, count, offset));
    }

    let mut covers: Vec<Vec<Vec<u32>>> = level_sizes
        .iter()
        .map(|&n| vec![Vec::new(); n as usize])
        .collect();
    for s in 0..=full {
        let Some((labels, _, offset)) = comp[s as usize].as_ref() else {
            continue;
        };
        let size = s.count_ones() as usize;
        if size == 0 {
            continue;
        }
        for x in 0..=d {
            if s >> x & 1 == 0 {
                continue;
            }
            let sub = s & !(1 << x);
            let Some((sub_labels, _, sub_offset)) = comp[sub as usize].as_ref() else {
                continue;
            };
            // incidence: the component pair occurs at some flag
            let mut pairs: Vec<(u32, u32)> = (0..n_flags)
                .map(|f| (labels[f], sub_labels[f]))
                .collect();
            pairs.sort_unstable();
            pairs.dedup();
            for (c, c_sub) in pairs {
                covers[size][(offset + c) as usize].push(sub_offset + c_sub);
            }
        }
    }
    let out = Complex::new(d, covers);
    out.check_axioms().map_err(|e| {
        Error::InvalidResult(format!("Wythoff output violates the axioms: {e}"))
    })?;
    Ok(out)
}

/// The medial complex Med(K) = K({1}).
pub fn medial(k: &Complex) -> Result<Complex> {
    wythoff(k, &[1])
}

/// The order complex: the dual of K({0..=d}), verified simplicial.
pub fn order_complex(k: &Complex) -> Result<Complex> {
    let all: Vec<usize> = (0..=k.dim()).collect();
    let out = wythoff(k, &all)?.dual();
    let sets = out.vertex_sets();
    let d = out.dim();
    for s in &sets[d] {
        if s.len() != d + 1 {
            return Err(Error::InvalidResult(
                "order complex is not simplicial".to_string(),
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn identity_and_dual_counts() {
        let g3 = families::cube(3).unwrap();
        let same = wythoff(&g3, &[0]).unwrap();
        assert_eq!(same.counts(), g3.counts());
        let dual = wythoff(&g3, &[2]).unwrap();
        assert_eq!(dual.counts(), vec![6, 12, 8]);
    }

    #[test]
    fn medial_of_cube_is_cuboctahedron() {
        let m = medial(&families::cube(3).unwrap()).unwrap();
        assert_eq!(m.counts(), vec![12, 24, 14]);
        assert!(m.validate_structure().axioms_pass());
    }

    #[test]
    fn truncated_cube_counts() {
        let t = wythoff(&families::cube(3).unwrap(), &[0, 1]).unwrap();
        assert_eq!(t.counts(), vec![24, 36, 14]);
    }

    #[test]
    fn rhombicuboctahedron_counts() {
        let r = wythoff(&families::cube(3).unwrap(), &[0, 2]).unwrap();
        assert_eq!(r.counts(), vec![24, 48, 26]);
    }

    #[test]
    fn omnitruncated_cube_counts() {
        let o = wythoff(&families::cube(3).unwrap(), &[0, 1, 2]).unwrap();
        assert_eq!(o.counts(), vec![48, 72, 26]);
    }

    #[test]
    fn rectified_simplex_counts() {
        let r = wythoff(&families::simplex(4).unwrap(), &[1]).unwrap();
        assert_eq!(r.counts(), vec![10, 30, 30, 10]);
    }

    #[test]
    fn medial_of_beta4_is_24cell() {
        let m = medial(&families::cross_polytope(4).unwrap()).unwrap();
        assert_eq!(m.counts(), vec![24, 96, 96, 24]);
    }

    #[test]
    fn order_complex_of_cube_is_barycentric() {
        let oc = order_complex(&families::cube(3).unwrap()).unwrap();
        assert_eq!(oc.size(2), 48);
        assert!(oc.validate_structure().axioms_pass());
    }

    #[test]
    fn empty_subset_rejected() {
        assert!(wythoff(&families::cube(3).unwrap(), &[]).is_err());
        assert!(wythoff(&families::cube(3).unwrap(), &[5]).is_err());
    }
}
