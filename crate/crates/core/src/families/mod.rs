//! Constructors for the named complexes: classical families, golden-ratio
//! polyhedra, half-cubes, the 600-cell and its derivatives, snubs, and the
//! type-{3,4} simplicial complexes.

use std::collections::BTreeMap;

use crate::complex::{Complex, LevelBuilder};
use crate::error::{Error, Result};
use crate::flags::{for_each_flag, FlagIndex};
use crate::ops::{self, ElementInvolution};

mod cell600;
pub mod exact;

pub use cell600::{
    cell120, cell24, cell600, cell600_aut_generators, cell600_graph, snub24,
    snub24_cut_vertices, special_cut,
};

use exact::{dot, Q5};

/// The 0-dimensional complex with two vertices.
pub fn segment() -> Complex {
    Complex::new(0, vec![vec![Vec::new(), Vec::new()]])
}

/// The m-gon as a 1-dimensional complex. m = 2 (the digon) is allowed for use
/// as a product factor; the CLI restricts generation to m >= 3.
pub fn polygon(m: usize) -> Result<Complex> {
    if m < 2 {
        return Err(Error::ParameterOutOfRange(format!("polygon m = {m} < 2")));
    }
    let edges = (0..m)
        .map(|i| vec![i as u32, ((i + 1) % m) as u32])
        .collect();
    Ok(Complex::new(1, vec![vec![Vec::new(); m], edges]))
}

fn subset_levels(dim: usize) -> Vec<BTreeMap<Vec<u8>, u32>> {
    (0..=dim).map(|_| BTreeMap::new()).collect()
}

fn finish_subsets(dim: usize, levels: Vec<BTreeMap<Vec<u8>, u32>>) -> Complex {
    let mut covers: Vec<Vec<Vec<u32>>> = (0..=dim)
        .map(|k| vec![Vec::new(); levels[k].len()])
        .collect();
    for k in 1..=dim {
        for (set, &id) in &levels[k] {
            let cs = &mut covers[k][id as usize];
            for drop in 0..set.len() {
                let mut sub = set.clone();
                sub.remove(drop);
                cs.push(levels[k - 1][&sub]);
            }
        }
    }
    Complex::new(dim, covers)
}

/// The d-simplex (a (d-1)-complex): faces are the nonempty proper subsets of
/// d+1 points.
pub fn simplex(d: usize) -> Result<Complex> {
    if d < 2 {
        return Err(Error::ParameterOutOfRange(format!("simplex d = {d} < 2")));
    }
    let mut levels = subset_levels(d - 1);
    let n = d + 1;
    // enumerate subsets of {0..=d} of each size in lexicographic order
    for size in 1..=d {
        let mut set: Vec<u8> = (0..size as u8).collect();
        loop {
            let id = levels[size - 1].len() as u32;
            levels[size - 1].insert(set.clone(), id);
            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if set[i] < (n - size + i) as u8 {
                    set[i] += 1;
                    for j in i + 1..size {
                        set[j] = set[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    set.clear();
                    break;
                }
            }
            if set.is_empty() {
                break;
            }
        }
    }
    Ok(finish_subsets(d - 1, levels))
}

fn cross_polytope_levels(d: usize) -> Vec<BTreeMap<Vec<u8>, u32>> {
    // labels 2i / 2i+1 are +e_i / -e_i; faces are sets with no opposite pair
    let mut levels = subset_levels(d - 1);
    fn rec(
        d: usize,
        start: u8,
        set: &mut Vec<u8>,
        levels: &mut Vec<BTreeMap<Vec<u8>, u32>>,
    ) {
        if !set.is_empty() {
            let k = set.len() - 1;
            let id = levels[k].len() as u32;
            levels[k].insert(set.clone(), id);
        }
        if set.len() == d {
            return;
        }
        for axis in start..(d as u8) {
            for sign in 0..2u8 {
                set.push(2 * axis + sign);
                rec(d, axis + 1, set, levels);
                set.pop();
            }
        }
    }
    let mut set = Vec::new();
    rec(d, 0, &mut set, &mut levels);
    levels
}

/// The d-dimensional cross-polytope beta_d (a (d-1)-complex).
pub fn cross_polytope(d: usize) -> Result<Complex> {
    if d < 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "cross-polytope d = {d} < 2"
        )));
    }
    Ok(finish_subsets(d - 1, cross_polytope_levels(d)))
}

/// The d-cube gamma_d = dual(beta_d).
pub fn cube(d: usize) -> Result<Complex> {
    Ok(cross_polytope(d)?.dual())
}

/// The antipodal involution of beta_d (negate every vertex label).
pub fn antipodal_cross(d: usize) -> Result<(Complex, ElementInvolution)> {
    if d < 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "cross-polytope d = {d} < 2"
        )));
    }
    let levels = cross_polytope_levels(d);
    let mut inv: ElementInvolution = Vec::with_capacity(d);
    for level in &levels {
        let mut table = vec![0u32; level.len()];
        for (set, &id) in level {
            let mut negated: Vec<u8> = set.iter().map(|&l| l ^ 1).collect();
            negated.sort_unstable();
            table[id as usize] = level[&negated];
        }
        inv.push(table);
    }
    Ok((finish_subsets(d - 1, levels), inv))
}

/// The antipodal involution of gamma_d, transported through duality.
pub fn antipodal_cube(d: usize) -> Result<(Complex, ElementInvolution)> {
    let (beta, inv) = antipodal_cross(d)?;
    let mirrored: ElementInvolution = inv.into_iter().rev().collect();
    // same index spaces, dimensions relabeled
    let gamma = beta.dual();
    for (lvl, table) in mirrored.iter().enumerate() {
        debug_assert_eq!(table.len(), gamma.size(lvl));
    }
    Ok((gamma, mirrored))
}

/// The folded cube: gamma_d modulo its antipodal involution.
pub fn folded_cube(d: usize) -> Result<Complex> {
    if d < 3 {
        return Err(Error::ParameterOutOfRange(format!(
            "folded cube d = {d} < 3"
        )));
    }
    let (gamma, inv) = antipodal_cube(d)?;
    ops::quotient(&gamma, &inv)
}

/// The m-gonal prism as a 2-complex.
pub fn prism_map(m: usize) -> Result<Complex> {
    if m < 2 {
        return Err(Error::ParameterOutOfRange(format!("prism m = {m} < 2")));
    }
    Ok(ops::product(&polygon(m)?, &segment()))
}

/// The m-gonal antiprism as a 2-complex: 2m triangles and two m-gons.
pub fn antiprism_map(m: usize) -> Result<Complex> {
    if m < 3 {
        return Err(Error::ParameterOutOfRange(format!("antiprism m = {m} < 3")));
    }
    let m32 = m as u32;
    let a = |i: usize| (i % m) as u32;
    let b = |i: usize| m32 + (i % m) as u32;
    let mut builder: LevelBuilder<Vec<u32>> = LevelBuilder::new(2);
    for v in 0..2 * m as u32 {
        builder.add(0, vec![v], Vec::new());
    }
    let mut edge = |u: u32, v: u32, builder: &mut LevelBuilder<Vec<u32>>| -> u32 {
        let mut key = vec![u, v];
        key.sort_unstable();
        builder.add(1, key, vec![u, v])
    };
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for i in 0..m {
        top.push(edge(a(i), a(i + 1), &mut builder));
        bottom.push(edge(b(i), b(i + 1), &mut builder));
    }
    for i in 0..m {
        edge(a(i), b(i), &mut builder);
        edge(b(i), a(i + 1), &mut builder);
    }
    builder.add(2, (0..m32).collect(), top);
    builder.add(2, (m32..2 * m32).collect(), bottom);
    for i in 0..m {
        let t1 = vec![
            edge(a(i), a(i + 1), &mut builder),
            edge(a(i), b(i), &mut builder),
            edge(b(i), a(i + 1), &mut builder),
        ];
        let mut key = vec![a(i), a(i + 1), b(i)];
        key.sort_unstable();
        builder.add(2, key, t1);
        let t2 = vec![
            edge(b(i), b(i + 1), &mut builder),
            edge(b(i), a(i + 1), &mut builder),
            edge(b(i + 1), a(i + 1), &mut builder),
        ];
        let mut key = vec![b(i), b(i + 1), a(i + 1)];
        key.sort_unstable();
        builder.add(2, key, t2);
    }
    Ok(builder.finish(2))
}

/// Icosahedron vertex coordinates: cyclic permutations of (0, ±1, ±phi).
fn icosahedron_coords() -> Vec<[Q5; 3]> {
    let mut coords = Vec::with_capacity(12);
    for axis in 0..3 {
        for s1 in [Q5::ONE, Q5::ONE.neg()] {
            for s2 in [Q5::PHI, Q5::PHI.neg()] {
                let mut c = [Q5::ZERO; 3];
                c[(axis + 1) % 3] = s1;
                c[(axis + 2) % 3] = s2;
                coords.push(c);
            }
        }
    }
    coords
}

fn icosahedron_adjacency() -> (Vec<[Q5; 3]>, Vec<Vec<u32>>) {
    let coords = icosahedron_coords();
    // adjacent iff <u, v> = phi
    let phi16 = (8, 8);
    let mut adj = vec![Vec::new(); 12];
    for i in 0..12 {
        for j in (i + 1)..12 {
            if dot(&coords[i], &coords[j]) == phi16 {
                adj[i].push(j as u32);
                adj[j].push(i as u32);
            }
        }
    }
    (coords, adj)
}

fn complex_from_triangles(n: usize, adj: &[Vec<u32>]) -> Complex {
    let mut builder: LevelBuilder<Vec<u32>> = LevelBuilder::new(2);
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
    for i in 0..n as u32 {
        for &j in &adj[i as usize] {
            if j <= i {
                continue;
            }
            for &l in &adj[i as usize] {
                if l <= j || !adj[j as usize].contains(&l) {
                    continue;
                }
                let es = vec![
                    builder.get(1, &vec![i, j]).unwrap(),
                    builder.get(1, &vec![i, l]).unwrap(),
                    builder.get(1, &vec![j, l]).unwrap(),
                ];
                builder.add(2, vec![i, j, l], es);
            }
        }
    }
    builder.finish(2)
}

pub fn icosahedron() -> Complex {
    let (_, adj) = icosahedron_adjacency();
    complex_from_triangles(12, &adj)
}

/// The icosahedron with its central involution (vertex negation, extended to
/// all faces).
pub fn antipodal_icosahedron() -> (Complex, ElementInvolution) {
    let (coords, adj) = icosahedron_adjacency();
    let k = complex_from_triangles(12, &adj);
    let vmap: Vec<u32> = coords
        .iter()
        .map(|c| {
            let neg = [c[0].neg(), c[1].neg(), c[2].neg()];
            coords.iter().position(|&x| x == neg).unwrap() as u32
        })
        .collect();
    let inv = extend_vertex_involution(&k, &vmap).expect("negation is an automorphism");
    (k, inv)
}

pub fn dodecahedron() -> Complex {
    icosahedron().dual()
}

pub fn antipodal_dodecahedron() -> (Complex, ElementInvolution) {
    let (ico, inv) = antipodal_icosahedron();
    (ico.dual(), inv.into_iter().rev().collect())
}

/// The Petersen map on the projective plane: the dodecahedron folded by its
/// central involution.
pub fn petersen() -> Complex {
    let (dode, inv) = antipodal_dodecahedron();
    ops::quotient(&dode, &inv).expect("central fold of the dodecahedron")
}

/// Great dodecahedron {5, 5/2}: vertices and edges of the icosahedron, one
/// pentagonal face through the five neighbors of each vertex.
pub fn great_dodecahedron() -> Complex {
    let (_, adj) = icosahedron_adjacency();
    let mut builder: LevelBuilder<Vec<u32>> = LevelBuilder::new(2);
    for v in 0..12u32 {
        builder.add(0, vec![v], Vec::new());
    }
    for (i, nbrs) in adj.iter().enumerate() {
        for &j in nbrs {
            if (j as usize) > i {
                builder.add(1, vec![i as u32, j], vec![i as u32, j]);
            }
        }
    }
    for v in 0..12usize {
        let ring = &adj[v];
        let mut es = Vec::new();
        for (p, &x) in ring.iter().enumerate() {
            for &y in ring.iter().skip(p + 1) {
                if adj[x as usize].contains(&y) {
                    es.push(builder.get(1, &vec![x.min(y), x.max(y)]).unwrap());
                }
            }
        }
        assert_eq!(es.len(), 5, "vertex link is a pentagon");
        builder.add(2, vec![v as u32], es);
    }
    builder.finish(2)
}

/// Extends a vertex permutation to an element involution on a complex whose
/// faces are determined by their vertex sets.
pub fn extend_vertex_involution(k: &Complex, vmap: &[u32]) -> Result<ElementInvolution> {
    let sets = k.vertex_sets();
    let mut inv = Vec::with_capacity(k.dim() + 1);
    for lvl in 0..=k.dim() {
        let index: BTreeMap<&Vec<u32>, u32> = sets[lvl]
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i as u32))
            .collect();
        if index.len() != k.size(lvl) {
            return Err(Error::NotAnAutomorphism(format!(
                "faces at dim {lvl} are not determined by vertex sets"
            )));
        }
        let mut table = Vec::with_capacity(k.size(lvl));
        for s in &sets[lvl] {
            let mut image: Vec<u32> = s.iter().map(|&v| vmap[v as usize]).collect();
            image.sort_unstable();
            let &target = index.get(&image).ok_or_else(|| {
                Error::NotAnAutomorphism(format!("vertex map does not preserve dim-{lvl} faces"))
            })?;
            table.push(target);
        }
        inv.push(table);
    }
    Ok(inv)
}

/// The half-cube (demicube) as a (d-1)-complex.
///
/// Vertices are the even subsets of d coordinates; besides the simplex faces
/// (vertex sets pairwise at symmetric difference two) there are sub-half-cube
/// faces obtained by fixing coordinates.
pub fn half_cube(d: usize) -> Result<Complex> {
    if d < 3 {
        return Err(Error::ParameterOutOfRange(format!("half-cube d = {d} < 3")));
    }
    if d > 24 {
        return Err(Error::ParameterOutOfRange(format!("half-cube d = {d} too large")));
    }
    let full: u32 = (1u32 << d) - 1;
    let dim = d - 1;

    // vertices: even masks, ascending
    let mut vid: BTreeMap<u32, u32> = BTreeMap::new();
    for mask in 0..=full {
        if mask.count_ones() % 2 == 0 {
            let id = vid.len() as u32;
            vid.insert(mask, id);
        }
    }

    // claw faces (u, J): u odd, |J| >= 3; dimension |J| - 1
    // sub-half-cube faces (A, pat): |A| in 3..=d-1, pat on the complement;
    // dimension |A|
    let mut claw_idx: Vec<BTreeMap<(u32, u32), u32>> = vec![BTreeMap::new(); d + 1];
    let mut hc_idx: Vec<BTreeMap<(u32, u32), u32>> = vec![BTreeMap::new(); d];
    let mut edge_idx: BTreeMap<(u32, u32), u32> = BTreeMap::new();

    let odd_masks: Vec<u32> = (0..=full)
        .filter(|m| m.count_ones() % 2 == 1)
        .collect();
    // enumerate J masks grouped by popcount
    let mut masks_by_size: Vec<Vec<u32>> = vec![Vec::new(); d + 1];
    for m in 1..=full {
        masks_by_size[m.count_ones() as usize].push(m);
    }

    // edges
    for (&v, _) in &vid {
        for &pair in &masks_by_size[2] {
            let w = v ^ pair;
            if w > v {
                let id = edge_idx.len() as u32;
                edge_idx.insert((v, w), id);
            }
        }
    }
    for size in 3..=d {
        for &u in &odd_masks {
            for &j_mask in &masks_by_size[size] {
                let id = claw_idx[size].len() as u32;
                claw_idx[size].insert((u, j_mask), id);
            }
        }
    }
    for a_size in 3..=(d - 1) {
        for &a_mask in &masks_by_size[a_size] {
            let outside = full & !a_mask;
            // submasks of `outside` in increasing order
            let mut pat = 0u32;
            loop {
                let id = hc_idx[a_size].len() as u32;
                hc_idx[a_size].insert((a_mask, pat), id);
                if pat == outside {
                    break;
                }
                pat = pat.wrapping_sub(outside) & outside;
            }
        }
    }

    // assemble covers; per dimension k: claws of |J| = k+1 first, then
    // sub-half-cubes of |A| = k
    let mut covers: Vec<Vec<Vec<u32>>> = Vec::with_capacity(dim + 1);
    covers.push(vec![Vec::new(); vid.len()]);
    // dim 1: edges
    let mut e_cov = vec![Vec::new(); edge_idx.len()];
    for (&(v, w), &id) in &edge_idx {
        e_cov[id as usize] = vec![vid[&v], vid[&w]];
    }
    covers.push(e_cov);
    for k in 2..=dim {
        let claws = &claw_idx[k + 1];
        let n_claws = claws.len();
        let hcs = &hc_idx[k];
        let n_hc = hcs.len();
        let mut level = vec![Vec::new(); n_claws + n_hc];
        for (&(u, j_mask), &id) in claws {
            let cs = &mut level[id as usize];
            if k == 2 {
                // triangle: three edges
                let mut bits = [0u32; 3];
                let mut t = j_mask;
                for slot in bits.iter_mut() {
                    *slot = t & t.wrapping_neg();
                    t ^= *slot;
                }
                for a in 0..3 {
                    for b in (a + 1)..3 {
                        let x = u ^ bits[a];
                        let y = u ^ bits[b];
                        cs.push(edge_idx[&(x.min(y), x.max(y))]);
                    }
                }
            } else {
                let mut t = j_mask;
                while t != 0 {
                    let bit = t & t.wrapping_neg();
                    t ^= bit;
                    cs.push(claw_idx[k][&(u, j_mask ^ bit)]);
                }
            }
        }
        if n_hc > 0 {
            for (&(a_mask, pat), &id) in hcs {
                let cs = &mut level[n_claws + id as usize];
                // claw facets: odd completions of pat inside A
                for &u in &odd_masks {
                    if u & !a_mask == pat {
                        cs.push(claw_idx[k][&(u, a_mask)]);
                    }
                }
                // sub-half-cube facets when they still have dimension >= 3
                if k >= 4 {
                    let prev_claws = claw_idx[k].len() as u32;
                    let mut t = a_mask;
                    while t != 0 {
                        let bit = t & t.wrapping_neg();
                        t ^= bit;
                        for val in [0u32, 1] {
                            let new_pat = pat | (bit * val);
                            cs.push(prev_claws + hc_idx[k - 1][&(a_mask ^ bit, new_pat)]);
                        }
                    }
                }
            }
        }
        covers.push(level);
    }
    Ok(Complex::new(dim, covers))
}

/// Type-{3,4} incidence: every codimension-2 element lies below exactly 3 or
/// 4 facets.
pub fn is_type34(k: &Complex) -> bool {
    let d = k.dim();
    if d < 2 {
        return false;
    }
    let cof = k.cofaces();
    for x in 0..k.size(d - 2) {
        let mut facets: Vec<u32> = Vec::new();
        for &mid in &cof[d - 2][x] {
            facets.extend_from_slice(&cof[d - 1][mid as usize]);
        }
        facets.sort_unstable();
        facets.dedup();
        if facets.len() != 3 && facets.len() != 4 {
            return false;
        }
    }
    true
}

/// The type-{3,4} simplicial complex of a partition: the dual of the product
/// of simplices whose dimensions are the part sizes.
pub fn type34(parts: &[usize]) -> Result<Complex> {
    if parts.is_empty() || parts.iter().any(|&p| p == 0) {
        return Err(Error::ParameterOutOfRange(
            "partition parts must be nonempty".to_string(),
        ));
    }
    let mut factors: Vec<Complex> = Vec::new();
    for &p in parts {
        factors.push(if p == 1 { segment() } else { simplex(p)? });
    }
    let mut prod = factors[0].clone();
    for f in &factors[1..] {
        prod = ops::product(&prod, f);
    }
    Ok(prod.dual())
}

/// Alternation of a map: keep one orientation class of flags as vertices,
/// with a polygon per face, a polygon per vertex, and a triangle per dropped
/// flag. This realizes the snubs combinatorially.
pub(crate) fn alternation(k: &Complex) -> Result<Complex> {
    if k.dim() != 2 {
        return Err(Error::ParameterOutOfRange(
            "alternation needs a 2-complex".to_string(),
        ));
    }
    let fi = FlagIndex::build(k, crate::DEFAULT_FLAG_CAP)?;
    if !fi.is_orientable() {
        return Err(Error::NotOrientable);
    }
    // orientation class of flag 0
    let mut class = vec![u8::MAX; fi.len()];
    class[0] = 0;
    let mut stack = vec![0u32];
    while let Some(f) = stack.pop() {
        for i in 1..=3 {
            let g = fi.sigma_unchecked(i, f);
            if class[g as usize] == u8::MAX {
                class[g as usize] = 1 - class[f as usize];
                stack.push(g);
            }
        }
    }
    let mut ev_id = vec![u32::MAX; fi.len()];
    let mut n_even = 0u32;
    for f in 0..fi.len() {
        if class[f] == 0 {
            ev_id[f] = n_even;
            n_even += 1;
        }
    }

    let mut by_face: Vec<Vec<u32>> = vec![Vec::new(); k.size(2)];
    let mut by_vertex: Vec<Vec<u32>> = vec![Vec::new(); k.size(0)];
    for_each_flag(k, |f, faces| {
        if class[f as usize] == 0 {
            by_face[faces[2] as usize].push(f);
            by_vertex[faces[0] as usize].push(f);
        }
    });

    let mut builder: LevelBuilder<Vec<u32>> = LevelBuilder::new(2);
    for v in 0..n_even {
        builder.add(0, vec![v], Vec::new());
    }
    let mut add_edge = |a: u32, b: u32, builder: &mut LevelBuilder<Vec<u32>>| -> u32 {
        let key = vec![a.min(b), a.max(b)];
        builder.add(1, key.clone(), key)
    };
    let mut add_cycle = |members: &[u32],
                         step: &dyn Fn(u32) -> u32,
                         builder: &mut LevelBuilder<Vec<u32>>|
     -> Result<()> {
        let start = *members.iter().min().unwrap();
        let mut cycle = vec![start];
        let mut cur = step(start);
        while cur != start {
            cycle.push(cur);
            cur = step(cur);
        }
        if cycle.len() != members.len() {
            return Err(Error::InvalidResult(
                "alternation: flags at a face do not form one cycle".to_string(),
            ));
        }
        let mut es = Vec::with_capacity(cycle.len());
        for i in 0..cycle.len() {
            let a = ev_id[cycle[i] as usize];
            let b = ev_id[cycle[(i + 1) % cycle.len()] as usize];
            es.push(add_edge(a, b, builder));
        }
        let mut key: Vec<u32> = cycle.iter().map(|&f| ev_id[f as usize]).collect();
        key.sort_unstable();
        builder.add(2, key, es);
        Ok(())
    };

    for members in by_face.iter().filter(|m| !m.is_empty()) {
        add_cycle(
            members,
            &|f| fi.sigma_unchecked(1, fi.sigma_unchecked(2, f)),
            &mut builder,
        )?;
    }
    for members in by_vertex.iter().filter(|m| !m.is_empty()) {
        add_cycle(
            members,
            &|f| fi.sigma_unchecked(2, fi.sigma_unchecked(3, f)),
            &mut builder,
        )?;
    }
    // a triangle per dropped flag
    for g in 0..fi.len() as u32 {
        if class[g as usize] != 1 {
            continue;
        }
        let corners = [
            ev_id[fi.sigma_unchecked(1, g) as usize],
            ev_id[fi.sigma_unchecked(2, g) as usize],
            ev_id[fi.sigma_unchecked(3, g) as usize],
        ];
        let es = vec![
            add_edge(corners[0], corners[1], &mut builder),
            add_edge(corners[0], corners[2], &mut builder),
            add_edge(corners[1], corners[2], &mut builder),
        ];
        let mut key = corners.to_vec();
        key.sort_unstable();
        builder.add(2, key, es);
    }
    let out = builder.finish(2);
    out.check_axioms()?;
    Ok(out)
}

/// Snub cube, from the embedded canonical face list.
pub fn snub_cube() -> Complex {
    crate::hasse::read_string(include_str!("data/snub_cube.hasse"), "snub_cube.hasse")
        .expect("embedded snub cube data")
}

/// Snub dodecahedron, from the embedded canonical face list.
pub fn snub_dodecahedron() -> Complex {
    crate::hasse::read_string(
        include_str!("data/snub_dodecahedron.hasse"),
        "snub_dodecahedron.hasse",
    )
    .expect("embedded snub dodecahedron data")
}

/// Named family of constructors reachable from the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Alpha { d: usize },
    Beta { d: usize },
    Gamma { d: usize },
    HalfCube { d: usize },
    Polygon { m: usize },
    Segment,
    PrismMap { m: usize },
    AntiprismMap { m: usize },
    Icosahedron,
    Dodecahedron,
    SnubCube,
    SnubDodecahedron,
    GreatDodecahedron,
    Cell600,
    Cell120,
    Cell24,
    Petersen,
    FoldedCube { d: usize },
    Type34 { parts: Vec<usize> },
}

impl Family {
    pub fn build(&self) -> Result<Complex> {
        match self {
            Family::Alpha { d } => simplex(*d),
            Family::Beta { d } => cross_polytope(*d),
            Family::Gamma { d } => cube(*d),
            Family::HalfCube { d } => half_cube(*d),
            Family::Polygon { m } => polygon(*m),
            Family::Segment => Ok(segment()),
            Family::PrismMap { m } => prism_map(*m),
            Family::AntiprismMap { m } => antiprism_map(*m),
            Family::Icosahedron => Ok(icosahedron()),
            Family::Dodecahedron => Ok(dodecahedron()),
            Family::SnubCube => Ok(snub_cube()),
            Family::SnubDodecahedron => Ok(snub_dodecahedron()),
            Family::GreatDodecahedron => Ok(great_dodecahedron()),
            Family::Cell600 => Ok(cell600()),
            Family::Cell120 => Ok(cell120()),
            Family::Cell24 => cell24(),
            Family::Petersen => Ok(petersen()),
            Family::FoldedCube { d } => folded_cube(*d),
            Family::Type34 { parts } => type34(parts),
        }
    }

    /// Parses CLI family names; the excluded constructions are rejected with
    /// an explicit message rather than approximated.
    pub fn from_cli(
        name: &str,
        d: Option<usize>,
        m: Option<usize>,
        partition: Option<&[usize]>,
    ) -> Result<Family> {
        let need_d = || {
            d.ok_or_else(|| Error::ParameterOutOfRange(format!("family {name} requires --d")))
        };
        let need_m = || {
            m.ok_or_else(|| Error::ParameterOutOfRange(format!("family {name} requires --m")))
        };
        Ok(match name {
            "alpha" => Family::Alpha { d: need_d()? },
            "beta" => Family::Beta { d: need_d()? },
            "gamma" => Family::Gamma { d: need_d()? },
            "half_cube" => Family::HalfCube { d: need_d()? },
            "polygon" => {
                let m = need_m()?;
                if m < 3 {
                    return Err(Error::ParameterOutOfRange(format!("polygon m = {m} < 3")));
                }
                Family::Polygon { m }
            }
            "segment" => Family::Segment,
            "prism_map" => {
                let m = need_m()?;
                if m < 3 {
                    return Err(Error::ParameterOutOfRange(format!("prism m = {m} < 3")));
                }
                Family::PrismMap { m }
            }
            "antiprism_map" => Family::AntiprismMap { m: need_m()? },
            "icosahedron" => Family::Icosahedron,
            "dodecahedron" => Family::Dodecahedron,
            "snub_cube" => Family::SnubCube,
            "snub_dodecahedron" => Family::SnubDodecahedron,
            "great_dodecahedron" => Family::GreatDodecahedron,
            "cell600" => Family::Cell600,
            "cell120" => Family::Cell120,
            "cell24" => Family::Cell24,
            "petersen" => Family::Petersen,
            "folded_cube" => Family::FoldedCube { d: need_d()? },
            "type34" => Family::Type34 {
                parts: partition
                    .ok_or_else(|| {
                        Error::ParameterOutOfRange("type34 requires --partition".to_string())
                    })?
                    .to_vec(),
            },
            "gosset_221" | "gosset_321" | "gosset_421" | "2_21" | "3_21" | "4_21" => {
                return Err(Error::Unsupported(format!(
                    "{name} is excluded: the construction needs E-series root system machinery that is out of scope"
                )))
            }
            "grand_antiprism" => {
                return Err(Error::Unsupported(
                    "grand_antiprism is excluded: no combinatorial construction is in scope"
                        .to_string(),
                ))
            }
            other => {
                return Err(Error::ParameterOutOfRange(format!(
                    "unknown family `{other}`"
                )))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_counts() {
        assert_eq!(simplex(4).unwrap().counts(), vec![5, 10, 10, 5]);
        assert_eq!(cross_polytope(3).unwrap().counts(), vec![6, 12, 8]);
        assert_eq!(cube(4).unwrap().counts(), vec![16, 32, 24, 8]);
        assert_eq!(polygon(7).unwrap().counts(), vec![7, 7]);
        assert_eq!(antiprism_map(4).unwrap().counts(), vec![8, 16, 10]);
        assert_eq!(prism_map(6).unwrap().counts(), vec![12, 18, 8]);
    }

    #[test]
    fn half_cube_small_cases() {
        let h3 = half_cube(3).unwrap();
        assert_eq!(h3.counts(), vec![4, 6, 4]);
        assert!(h3.validate_structure().axioms_pass());
        let h4 = half_cube(4).unwrap();
        assert_eq!(h4.counts(), vec![8, 24, 32, 16]);
        assert!(h4.validate_structure().axioms_pass());
        let h5 = half_cube(5).unwrap();
        assert!(h5.validate_structure().axioms_pass());
        assert_eq!(FlagIndex::count_flags(&h5), 5760);
    }

    #[test]
    fn icosahedron_and_great_dodecahedron() {
        let ico = icosahedron();
        assert_eq!(ico.counts(), vec![12, 30, 20]);
        assert!(ico.validate_structure().axioms_pass());
        let gd = great_dodecahedron();
        assert_eq!(gd.counts(), vec![12, 30, 12]);
        assert!(gd.validate_structure().axioms_pass());
        // chi = -6 by direct count
        assert_eq!(12i64 - 30 + 12, -6);
        // not a lattice: two adjacent faces meet in two vertices
        assert_eq!(gd.validate_structure().lattice, Some(false));
    }

    #[test]
    fn petersen_counts() {
        let p = petersen();
        assert_eq!(p.counts(), vec![10, 15, 6]);
        assert!(p.validate_structure().axioms_pass());
    }

    #[test]
    fn folded_cube_is_not_a_lattice() {
        let f4 = folded_cube(4).unwrap();
        let report = f4.validate_structure();
        assert!(report.axioms_pass());
        assert_eq!(report.lattice, Some(false));
    }

    #[test]
    fn type34_partitions() {
        // {1},{2..d} is the bipyramid over a simplex; counts must agree
        let t = type34(&[1, 3]).unwrap();
        let b = ops::bipyramid(&simplex(3).unwrap());
        assert_eq!(t.counts(), b.counts());
        assert!(t.validate_structure().axioms_pass());
    }

    #[test]
    #[ignore = "regenerates the embedded snub data files"]
    fn regenerate_snub_data() {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/src/families/data");
        let sc = alternation(&cube(3).unwrap()).unwrap();
        std::fs::write(
            format!("{dir}/snub_cube.hasse"),
            crate::hasse::write_string(&sc),
        )
        .unwrap();
        let sd = alternation(&dodecahedron()).unwrap();
        std::fs::write(
            format!("{dir}/snub_dodecahedron.hasse"),
            crate::hasse::write_string(&sd),
        )
        .unwrap();
    }

    #[test]
    fn snub_data_matches_alternation() {
        let sc = snub_cube();
        assert_eq!(sc, alternation(&cube(3).unwrap()).unwrap());
        assert_eq!(sc.counts(), vec![24, 60, 38]);
        let sd = snub_dodecahedron();
        assert_eq!(sd, alternation(&dodecahedron()).unwrap());
        assert_eq!(sd.counts(), vec![60, 150, 92]);
    }

    #[test]
    fn type34_incidence_property() {
        // every codimension-2 face lies below 3 or 4 facets
        for parts in [vec![2usize, 2], vec![1, 1, 1], vec![1, 2], vec![1, 1, 2]] {
            let k = type34(&parts).unwrap();
            assert!(is_type34(&k), "partition {parts:?}");
        }
    }
}
