//! The 600-cell from exact icosian arithmetic, its dual, the 24-cell, and
//! special cuts of independent vertex sets.

use std::collections::BTreeMap;

use crate::complex::{Complex, LevelBuilder};
use crate::error::{Error, Result};

use super::exact::{dot, icosian_units, Quat, Q5};

/// Vertices (as unit icosians) and the edge adjacency of the 600-cell.
/// Two vertices are adjacent exactly when their inner product is phi/2.
pub fn cell600_graph() -> (Vec<Quat>, Vec<Vec<u32>>) {
    let verts = icosian_units();
    let phi_half_16 = (4, 4);
    let mut adj = vec![Vec::new(); verts.len()];
    for i in 0..verts.len() {
        for j in (i + 1)..verts.len() {
            if dot(&verts[i].0, &verts[j].0) == phi_half_16 {
                adj[i].push(j as u32);
                adj[j].push(i as u32);
            }
        }
    }
    (verts, adj)
}

/// The 600-cell: 120 vertices, 720 edges, 1200 triangles, 600 tetrahedra,
/// with triangles and cells found as cliques of the edge graph.
pub fn cell600() -> Complex {
    let (verts, adj) = cell600_graph();
    let n = verts.len();
    let mut builder: LevelBuilder<Vec<u32>> = LevelBuilder::new(3);
    for v in 0..n as u32 {
        builder.add(0, vec![v], Vec::new());
    }
    for (i, nbrs) in adj.iter().enumerate() {
        for &j in nbrs {
            if (j as usize) > i {
                builder.add(1, vec![i as u32, j], vec![i as u32, j]);
            }
        }
    }
    let is_adj = |a: u32, b: u32| adj[a as usize].contains(&b);
    let mut triangles: Vec<[u32; 3]> = Vec::new();
    for i in 0..n as u32 {
        for &j in &adj[i as usize] {
            if j <= i {
                continue;
            }
            for &l in &adj[i as usize] {
                if l > j && is_adj(j, l) {
                    triangles.push([i, j, l]);
                }
            }
        }
    }
    for t in &triangles {
        let es = vec![
            builder.get(1, &vec![t[0], t[1]]).unwrap(),
            builder.get(1, &vec![t[0], t[2]]).unwrap(),
            builder.get(1, &vec![t[1], t[2]]).unwrap(),
        ];
        builder.add(2, t.to_vec(), es);
    }
    for t in &triangles {
        for &w in &adj[t[0] as usize] {
            if w > t[2] && is_adj(t[1], w) && is_adj(t[2], w) {
                let fs = vec![
                    builder.get(2, &t.to_vec()).unwrap(),
                    builder.get(2, &vec![t[0], t[1], w]).unwrap(),
                    builder.get(2, &vec![t[0], t[2], w]).unwrap(),
                    builder.get(2, &vec![t[1], t[2], w]).unwrap(),
                ];
                builder.add(3, vec![t[0], t[1], t[2], w], fs);
            }
        }
    }
    let k = builder.finish(3);
    debug_assert_eq!(k.counts(), vec![120, 720, 1200, 600]);
    k
}

/// The 120-cell, as the dual of the 600-cell.
pub fn cell120() -> Complex {
    cell600().dual()
}

/// The 24-cell, as the medial of the 4-dimensional cross-polytope.
pub fn cell24() -> Result<Complex> {
    crate::wythoff::wythoff(&super::cross_polytope(4)?, &[1])
}

/// Indices of the inscribed 24-cell used for the snub cut: the unit and
/// half-integer icosians (the binary tetrahedral subgroup).
pub fn snub24_cut_vertices() -> Vec<u32> {
    let verts = icosian_units();
    let mut out = Vec::new();
    for (i, q) in verts.iter().enumerate() {
        let golden = q
            .0
            .iter()
            .any(|c| *c == Q5::PHI_HALF || *c == Q5::PHI_HALF.neg() || *c == Q5::PHI_INV_HALF || *c == Q5::PHI_INV_HALF.neg());
        if !golden {
            out.push(i as u32);
        }
    }
    debug_assert_eq!(out.len(), 24);
    out
}

/// Special cut: removes every face meeting the independent vertex set and
/// caps each removed vertex with an icosahedral cell over the 20 retained
/// triangles of its vertex figure.
pub fn special_cut(k600: &Complex, cut: &[u32]) -> Result<Complex> {
    if k600.dim() != 3 || k600.counts() != vec![120, 720, 1200, 600] {
        return Err(Error::ParameterOutOfRange(
            "special cuts are defined on the 600-cell".to_string(),
        ));
    }
    let mut cut_sorted = cut.to_vec();
    cut_sorted.sort_unstable();
    cut_sorted.dedup();
    if cut_sorted.len() != cut.len() {
        return Err(Error::ParameterOutOfRange(
            "cut vertices must be distinct".to_string(),
        ));
    }
    let in_cut = |v: u32| cut_sorted.binary_search(&v).is_ok();
    // independence
    for e in 0..k600.size(1) {
        let vs = k600.covers(1, e);
        if in_cut(vs[0]) && in_cut(vs[1]) {
            return Err(Error::NotIndependent(vs[0] as usize, vs[1] as usize));
        }
    }
    let sets = k600.vertex_sets();
    // keep map per dimension
    let mut keep: Vec<Vec<u32>> = Vec::with_capacity(4);
    for lvl in 0..=3 {
        let mut map = vec![u32::MAX; k600.size(lvl)];
        let mut next = 0u32;
        for (i, s) in sets[lvl].iter().enumerate() {
            if s.iter().all(|&v| !in_cut(v)) {
                map[i] = next;
                next += 1;
            }
        }
        keep.push(map);
    }
    let mut covers: Vec<Vec<Vec<u32>>> = Vec::with_capacity(4);
    for lvl in 0..=3 {
        let mut level = Vec::new();
        for i in 0..k600.size(lvl) {
            if keep[lvl][i] == u32::MAX {
                continue;
            }
            if lvl == 0 {
                level.push(Vec::new());
            } else {
                let cs: Vec<u32> = k600
                    .covers(lvl, i)
                    .iter()
                    .map(|&c| {
                        let id = keep[lvl - 1][c as usize];
                        debug_assert_ne!(id, u32::MAX);
                        id
                    })
                    .collect();
                level.push(cs);
            }
        }
        covers.push(level);
    }
    // neighbor sets
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); k600.size(0)];
    for e in 0..k600.size(1) {
        let vs = k600.covers(1, e);
        adj[vs[0] as usize].push(vs[1]);
        adj[vs[1] as usize].push(vs[0]);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    // one icosahedral cell per removed vertex
    for &v in &cut_sorted {
        let ring = &adj[v as usize];
        let mut cell = Vec::new();
        for (t, s) in sets[2].iter().enumerate() {
            if s.iter().all(|&x| ring.binary_search(&x).is_ok()) {
                let id = keep[2][t];
                debug_assert_ne!(id, u32::MAX);
                cell.push(id);
            }
        }
        if cell.len() != 20 {
            return Err(Error::InvalidResult(format!(
                "vertex figure of {v} has {} retained triangles, expected 20",
                cell.len()
            )));
        }
        covers[3].push(cell);
    }
    let out = Complex::new(3, covers);
    out.check_axioms()?;
    Ok(out)
}

/// The snub 24-cell: the special cut along the inscribed 24-cell.
pub fn snub24() -> Result<Complex> {
    special_cut(&cell600(), &snub24_cut_vertices())
}

/// Vertex permutations generating the full symmetry group of the 600-cell:
/// left and right multiplications by icosian generators plus quaternion
/// conjugation.
pub fn cell600_aut_generators() -> Vec<Vec<u32>> {
    let verts = icosian_units();
    let index: BTreeMap<Quat, u32> = verts
        .iter()
        .enumerate()
        .map(|(i, q)| (*q, i as u32))
        .collect();
    let gens_q = icosian_group_generators();
    let mut out = Vec::new();
    for g in &gens_q {
        out.push(verts.iter().map(|v| index[&g.mul(*v)]).collect());
        out.push(verts.iter().map(|v| index[&v.mul(*g)]).collect());
    }
    out.push(verts.iter().map(|v| index[&v.conjugate()]).collect());
    out
}

/// Quaternions generating the full group of 120 unit icosians.
pub fn icosian_group_generators() -> Vec<Quat> {
    let omega = Quat([Q5::HALF, Q5::HALF, Q5::HALF, Q5::HALF]);
    let i_unit = Quat([Q5::ZERO, Q5::ONE, Q5::ZERO, Q5::ZERO]);
    let golden = Quat([Q5::PHI_HALF, Q5::HALF, Q5::PHI_INV_HALF, Q5::ZERO]);
    vec![omega, i_unit, golden]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell600_counts_and_validity() {
        let k = cell600();
        assert_eq!(k.counts(), vec![120, 720, 1200, 600]);
        assert!(k.validate_structure().axioms_pass());
        // simplicial flag count (d+1)! * facets
        assert_eq!(crate::flags::FlagIndex::count_flags(&k), 24 * 600);
    }

    #[test]
    fn icosian_generators_span_the_group() {
        let gens = icosian_group_generators();
        let mut seen: std::collections::BTreeSet<Quat> = gens.iter().copied().collect();
        let mut frontier: Vec<Quat> = gens.clone();
        while let Some(q) = frontier.pop() {
            for g in &gens {
                for prod in [q.mul(*g), g.mul(q)] {
                    if seen.insert(prod) {
                        frontier.push(prod);
                    }
                }
            }
        }
        assert_eq!(seen.len(), 120);
    }

    #[test]
    fn snub_cut_set_is_independent_24() {
        let cut = snub24_cut_vertices();
        assert_eq!(cut.len(), 24);
        let (_, adj) = cell600_graph();
        for &a in &cut {
            for &b in &cut {
                assert!(!adj[a as usize].contains(&b) || a == b);
            }
        }
    }

    #[test]
    fn snub24_validates() {
        let s = snub24().unwrap();
        // 96 vertices; 24 icosahedra + 120 tetrahedra... cells counted below
        assert_eq!(s.size(0), 96);
        assert_eq!(s.size(3), 600 - 480 + 24);
        assert!(s.validate_structure().axioms_pass());
    }

    #[test]
    fn adjacent_cut_is_rejected() {
        let k = cell600();
        let vs = k.covers(1, 0);
        match special_cut(&k, &[vs[0], vs[1]]) {
            Err(Error::NotIndependent(_, _)) => {}
            other => panic!("expected independence error, got {other:?}"),
        }
    }
}
