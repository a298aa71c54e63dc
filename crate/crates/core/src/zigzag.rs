//! Zigzag decompositions: orbits of the translation operator paired with
//! their reverses, signatures, typed intersections, and the z-vector and
//! intersection-vector reports.

use std::collections::HashMap;

use crate::flags::FlagIndex;
use crate::util::UnionFind;

pub type Signature = (u32, u32);

/// Normalized intersection pairs with multiplicities, sorted ascending by
/// (total, first component).
pub type IntersectionVector = Vec<((u32, u32), u32)>;

#[derive(Debug, Clone)]
pub struct Zigzag {
    pub length: usize,
    pub signature: Signature,
    /// whether the reverse orbit coincides with the forward orbit
    pub self_reverse: bool,
    /// least flag id of the zigzag (always on the forward orbit)
    pub min_flag: u32,
    /// sigma_1 hits landing on the flag's own reverse; the zigzag touches its
    /// reversal in place there, which is not a crossing (nonzero only in
    /// dimension 1)
    pub degenerate: u32,
}

impl Zigzag {
    pub fn is_simple(&self) -> bool {
        self.signature == (0, 0)
    }
}

/// Partition of all flags into zigzags (forward orbit plus reverse orbit),
/// with signatures and all pairwise typed intersections.
pub struct ZigzagDecomposition {
    zigzags: Vec<Zigzag>,
    flag_zigzag: Vec<u32>,
    /// true on the reverse orbit
    flag_reversed: Vec<bool>,
    /// position along the T-traversal of the orbit, counted from its least flag
    flag_pos: Vec<u32>,
    /// intersection counts scanned from the first id, sorted by (i << 32 | j)
    cross: Vec<(u64, (u32, u32))>,
}

impl ZigzagDecomposition {
    pub fn build(fi: &FlagIndex) -> ZigzagDecomposition {
        let n = fi.len();
        let mut flag_zigzag = vec![u32::MAX; n];
        let mut flag_reversed = vec![false; n];
        let mut flag_pos = vec![0u32; n];
        let mut zigzags: Vec<Zigzag> = Vec::new();

        for start in 0..n as u32 {
            if flag_zigzag[start as usize] != u32::MAX {
                continue;
            }
            let id = zigzags.len() as u32;
            // forward orbit; `start` is its least member since flags are
            // visited in ascending order
            let mut length = 0usize;
            let mut f = start;
            loop {
                flag_zigzag[f as usize] = id;
                flag_pos[f as usize] = length as u32;
                length += 1;
                f = fi.translate(f);
                if f == start {
                    break;
                }
            }
            let rev = fi.reverse(start);
            let self_reverse = flag_zigzag[rev as usize] == id;
            if !self_reverse {
                debug_assert_eq!(flag_zigzag[rev as usize], u32::MAX);
                // trace the reverse orbit, then rebase positions on its least
                // member
                let mut members = Vec::with_capacity(length);
                let mut g = rev;
                loop {
                    members.push(g);
                    g = fi.translate(g);
                    if g == rev {
                        break;
                    }
                }
                assert_eq!(members.len(), length, "reverse orbit length differs");
                let min_at = members
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, &m)| m)
                    .map(|(i, _)| i)
                    .unwrap();
                for (i, &m) in members.iter().enumerate() {
                    flag_zigzag[m as usize] = id;
                    flag_reversed[m as usize] = true;
                    flag_pos[m as usize] =
                        ((i + length - min_at) % length) as u32;
                }
            }
            zigzags.push(Zigzag {
                length,
                signature: (0, 0),
                self_reverse,
                min_flag: start,
                degenerate: 0,
            });
        }

        // one pass over forward flags classifies sigma_1 hits
        let mut self_raw: Vec<(u32, u32)> = vec![(0, 0); zigzags.len()];
        let mut cross: HashMap<u64, (u32, u32)> = HashMap::new();
        let sigma1 = fi.sigma_table(1);
        for f in 0..n {
            if flag_reversed[f] {
                continue;
            }
            let z1 = flag_zigzag[f];
            let g = sigma1[f] as usize;
            let z2 = flag_zigzag[g];
            if z1 == z2 {
                // a hit on the flag's own reverse is the zigzag meeting its
                // reversal in place, not a crossing
                if g as u32 == fi.reverse(f as u32) {
                    zigzags[z1 as usize].degenerate += 1;
                    continue;
                }
                let hit_forward = if zigzags[z1 as usize].self_reverse {
                    flag_pos[g] % 2 == 0
                } else {
                    !flag_reversed[g]
                };
                let e = &mut self_raw[z1 as usize];
                if hit_forward {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            } else {
                let hit_forward = if zigzags[z2 as usize].self_reverse {
                    flag_pos[g] % 2 == 0
                } else {
                    !flag_reversed[g]
                };
                let e = &mut cross.entry(((z1 as u64) << 32) | z2 as u64).or_insert((0, 0));
                if hit_forward {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            }
        }
        for (z, raw) in self_raw.iter().enumerate() {
            // each self-intersection is witnessed by two flags of the scan
            if !zigzags[z].self_reverse {
                assert!(
                    raw.0 % 2 == 0 && raw.1 % 2 == 0,
                    "odd self-intersection scan counts"
                );
            }
            zigzags[z].signature = (raw.0 / 2, raw.1 / 2);
        }

        // canonical order: (length, signature, least flag)
        let mut order: Vec<u32> = (0..zigzags.len() as u32).collect();
        order.sort_by_key(|&z| {
            let zz = &zigzags[z as usize];
            (zz.length, zz.signature, zz.min_flag)
        });
        let mut relabel = vec![0u32; zigzags.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old as usize] = new as u32;
        }
        let zigzags: Vec<Zigzag> = order
            .iter()
            .map(|&old| zigzags[old as usize].clone())
            .collect();
        for z in flag_zigzag.iter_mut() {
            *z = relabel[*z as usize];
        }
        let mut cross: Vec<(u64, (u32, u32))> = cross
            .into_iter()
            .map(|(key, v)| {
                let i = relabel[(key >> 32) as usize] as u64;
                let j = relabel[(key & 0xffff_ffff) as usize] as u64;
                ((i << 32) | j, v)
            })
            .collect();
        cross.sort_unstable_by_key(|&(key, _)| key);

        ZigzagDecomposition {
            zigzags,
            flag_zigzag,
            flag_reversed,
            flag_pos,
            cross,
        }
    }

    pub fn zigzags(&self) -> &[Zigzag] {
        &self.zigzags
    }

    pub fn len(&self) -> usize {
        self.zigzags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zigzags.is_empty()
    }

    pub fn flag_count(&self) -> usize {
        self.flag_zigzag.len()
    }

    /// (zigzag id, reversed-orbit flag, position along the traversal).
    pub fn flag_location(&self, f: u32) -> (u32, bool, u32) {
        (
            self.flag_zigzag[f as usize],
            self.flag_reversed[f as usize],
            self.flag_pos[f as usize],
        )
    }

    pub fn zigzag_of_flag(&self, f: u32) -> u32 {
        self.flag_zigzag[f as usize]
    }

    /// Raw typed intersection counts of two distinct zigzags, scanned from
    /// the flags of the first; swapping the arguments may swap the types.
    pub fn intersection(&self, i: u32, j: u32) -> (u32, u32) {
        debug_assert_ne!(i, j);
        let key = ((i as u64) << 32) | j as u64;
        match self.cross.binary_search_by_key(&key, |&(k, _)| k) {
            Ok(at) => self.cross[at].1,
            Err(_) => (0, 0),
        }
    }

    /// Records scanned from zigzag i, as (partner, (type I, type II)).
    fn records_of(&self, i: u32) -> &[(u64, (u32, u32))] {
        let lo = self
            .cross
            .partition_point(|&(k, _)| k < (i as u64) << 32);
        let hi = self
            .cross
            .partition_point(|&(k, _)| k < ((i as u64) + 1) << 32);
        &self.cross[lo..hi]
    }

    /// Normalized intersection vector of one zigzag.
    pub fn int_vector(&self, i: u32) -> IntersectionVector {
        let mut counts: HashMap<(u32, u32), u32> = HashMap::new();
        for &(_, (a, b)) in self.records_of(i) {
            if (a, b) == (0, 0) {
                continue;
            }
            let pair = (a.min(b), a.max(b));
            *counts.entry(pair).or_insert(0) += 1;
        }
        let mut out: Vec<((u32, u32), u32)> = counts.into_iter().collect();
        out.sort_by_key(|&((a, b), _)| (a + b, a));
        out
    }

    /// The length identity l = 2(n_I + n_II) + sum m_k (c_I + c_II), checked
    /// for every zigzag (degenerate in-place hits, which only occur in
    /// dimension 1, are accounted separately).
    pub fn length_identity_holds(&self) -> bool {
        (0..self.zigzags.len() as u32).all(|i| {
            let z = &self.zigzags[i as usize];
            let ints: u64 = self
                .int_vector(i)
                .iter()
                .map(|&((a, b), m)| (a + b) as u64 * m as u64)
                .sum();
            z.length as u64
                == 2 * (z.signature.0 + z.signature.1) as u64 + z.degenerate as u64 + ints
        })
    }

    /// Conservation: forward and reverse orbits together account for every
    /// flag exactly once.
    pub fn flag_bookkeeping_holds(&self) -> bool {
        let total: usize = self
            .zigzags
            .iter()
            .map(|z| if z.self_reverse { z.length } else { 2 * z.length })
            .sum();
        total == self.flag_zigzag.len()
    }

    /// `l^m` groups: the z-vector string. Simple zigzags first in increasing
    /// length, then self-intersecting ones as `l_{a,b}^m`, the two parts
    /// separated by a semicolon.
    pub fn z_vector_string(&self) -> String {
        let mut simple: Vec<(usize, usize)> = Vec::new();
        let mut selfint: Vec<(usize, Signature, usize)> = Vec::new();
        for z in &self.zigzags {
            if z.is_simple() {
                match simple.last_mut() {
                    Some((l, m)) if *l == z.length => *m += 1,
                    _ => simple.push((z.length, 1)),
                }
            } else {
                match selfint.last_mut() {
                    Some((l, s, m)) if *l == z.length && *s == z.signature => *m += 1,
                    _ => selfint.push((z.length, z.signature, 1)),
                }
            }
        }
        // zigzags are already sorted by (length, signature), so the groups
        // emerge in order
        let mut parts: Vec<String> = Vec::new();
        let mut head: Vec<String> = simple
            .iter()
            .map(|&(l, m)| format!("{l}{}", exponent(m)))
            .collect();
        if !head.is_empty() {
            parts.push(head.join(", "));
        }
        head = selfint
            .iter()
            .map(|&(l, (a, b), m)| format!("{l}_{{{a},{b}}}{}", exponent(m)))
            .collect();
        if !head.is_empty() {
            parts.push(head.join(", "));
        }
        parts.join("; ")
    }

    pub fn int_vector_string(&self, i: u32) -> String {
        format_int_vector(&self.int_vector(i))
    }

    /// Multiset of zigzag lengths (for duality checks).
    pub fn length_multiset(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.zigzags.iter().map(|z| z.length).collect();
        out.sort_unstable();
        out
    }

    pub fn is_z_knotted(&self) -> bool {
        self.zigzags.len() == 1
    }

    /// Adjacency of the zigzag graph Z(K): distinct zigzags are adjacent when
    /// their intersection signature is not (0,0).
    pub fn zigzag_graph(&self) -> Vec<Vec<u32>> {
        let n = self.zigzags.len();
        let mut adj = vec![Vec::new(); n];
        for &(key, (a, b)) in &self.cross {
            if (a, b) == (0, 0) {
                continue;
            }
            let i = (key >> 32) as u32;
            let j = (key & 0xffff_ffff) as u32;
            adj[i as usize].push(j);
        }
        for row in adj.iter_mut() {
            row.sort_unstable();
            row.dedup();
        }
        adj
    }

    pub fn zigzag_graph_connected(&self) -> bool {
        let n = self.zigzags.len();
        if n <= 1 {
            return true;
        }
        let mut uf = UnionFind::new(n);
        for &(key, (a, b)) in &self.cross {
            if (a, b) != (0, 0) {
                uf.union((key >> 32) as u32, (key & 0xffff_ffff) as u32);
            }
        }
        uf.class_count() == 1
    }
}

fn exponent(m: usize) -> String {
    match m {
        1 => String::new(),
        2..=9 => format!("^{m}"),
        _ => format!("^{{{m}}}"),
    }
}

pub fn format_int_vector(v: &IntersectionVector) -> String {
    v.iter()
        .map(|&((a, b), m)| format!("({a},{b}){}", exponent(m as usize)))
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::ops;

    fn decompose(k: &crate::Complex) -> (FlagIndex, ZigzagDecomposition) {
        let fi = FlagIndex::build(k, crate::DEFAULT_FLAG_CAP).unwrap();
        let zd = ZigzagDecomposition::build(&fi);
        (fi, zd)
    }

    #[test]
    fn tetrahedron_zigzags() {
        let (fi, zd) = decompose(&families::simplex(3).unwrap());
        assert_eq!(fi.len(), 24);
        assert_eq!(zd.len(), 3);
        for z in zd.zigzags() {
            assert_eq!(z.length, 4);
            assert_eq!(z.signature, (0, 0));
            assert!(!z.self_reverse);
        }
        assert!(zd.flag_bookkeeping_holds());
        assert!(zd.length_identity_holds());
        assert_eq!(zd.z_vector_string(), "4^3");
        // each pair of distinct zigzags meets with type pair (1,1)
        for i in 0..3u32 {
            assert_eq!(zd.int_vector(i), vec![((1, 1), 2)]);
        }
    }

    #[test]
    fn polygon_zigzag_is_the_polygon() {
        let (_, zd) = decompose(&families::polygon(7).unwrap());
        assert_eq!(zd.z_vector_string(), "7");
        assert!(zd.is_z_knotted());
        assert_eq!(zd.zigzags()[0].signature, (0, 0));
        assert!(zd.length_identity_holds());
    }

    #[test]
    fn cross_polytope_zigzags() {
        let (_, zd) = decompose(&families::cross_polytope(4).unwrap());
        assert_eq!(zd.z_vector_string(), "8^{24}");
        for i in 0..zd.len() as u32 {
            assert_eq!(zd.int_vector(i), vec![((0, 2), 4)]);
        }
        assert!(zd.length_identity_holds());
    }

    #[test]
    fn dodecahedron_zigzags() {
        let (_, zd) = decompose(&families::dodecahedron());
        assert_eq!(zd.z_vector_string(), "10^6");
        for i in 0..zd.len() as u32 {
            assert_eq!(zd.int_vector(i), vec![((0, 2), 5)]);
        }
        // dual has the same z-vector
        let (_, zi) = decompose(&families::icosahedron());
        assert_eq!(zi.length_multiset(), zd.length_multiset());
    }

    #[test]
    fn square_pyramid_is_z_knotted_with_halved_signature() {
        let pyr = ops::pyramid(&families::polygon(4).unwrap());
        let (fi, zd) = decompose(&pyr);
        assert_eq!(fi.len(), 32);
        assert!(zd.is_z_knotted());
        let z = &zd.zigzags()[0];
        assert_eq!(z.length, 16);
        assert_eq!(z.signature, (4, 4));
        assert!(zd.length_identity_holds());
        assert_eq!(zd.z_vector_string(), "16_{4,4}");
    }

    #[test]
    fn bipyramid_over_triangle() {
        let bp = ops::bipyramid(&families::simplex(2).unwrap());
        let (_, zd) = decompose(&bp);
        assert_eq!(zd.z_vector_string(), "18_{6,3}");
        assert!(zd.length_identity_holds());
    }

    #[test]
    fn great_dodecahedron_zigzags() {
        let (_, zd) = decompose(&families::great_dodecahedron());
        assert_eq!(zd.z_vector_string(), "6^{10}");
        for i in 0..zd.len() as u32 {
            assert_eq!(zd.int_vector(i), vec![((0, 2), 3)]);
        }
    }

    #[test]
    fn petersen_zigzags() {
        let (fi, zd) = decompose(&families::petersen());
        assert!(!fi.is_orientable());
        assert_eq!(zd.z_vector_string(), "5^6");
        for i in 0..zd.len() as u32 {
            assert_eq!(zd.int_vector(i), vec![((0, 1), 5)]);
        }
    }

    #[test]
    fn snub_cube_zigzags_self_intersect() {
        let (_, zd) = decompose(&families::snub_cube());
        assert_eq!(zd.z_vector_string(), "30_{3,0}^4");
        for i in 0..zd.len() as u32 {
            assert_eq!(zd.int_vector(i), vec![((4, 4), 3)]);
        }
        assert!(zd.length_identity_holds());
    }

    #[test]
    fn snub_dodecahedron_zigzags_self_intersect() {
        let (_, zd) = decompose(&families::snub_dodecahedron());
        assert_eq!(zd.z_vector_string(), "50_{5,0}^6");
        for i in 0..zd.len() as u32 {
            assert_eq!(zd.int_vector(i), vec![((4, 4), 5)]);
        }
    }

    #[test]
    fn intersection_scan_is_symmetric_on_small_corpus() {
        for k in [
            families::simplex(4).unwrap(),
            families::cube(3).unwrap(),
            families::great_dodecahedron(),
        ] {
            let (_, zd) = decompose(&k);
            for i in 0..zd.len() as u32 {
                for j in 0..zd.len() as u32 {
                    if i != j {
                        assert_eq!(zd.intersection(i, j), zd.intersection(j, i));
                    }
                }
            }
        }
    }

    #[test]
    fn evenness_for_oriented_even_dimensional() {
        // alpha_5 has dimension 4
        let (fi, zd) = decompose(&families::simplex(5).unwrap());
        assert!(fi.is_orientable());
        for z in zd.zigzags() {
            assert_eq!(z.length % 2, 0);
        }
    }

    #[test]
    fn formatting_rules() {
        assert_eq!(exponent(1), "");
        assert_eq!(exponent(6), "^6");
        assert_eq!(exponent(12), "^{12}");
        assert_eq!(
            format_int_vector(&vec![((0, 2), 4), ((1, 1), 1)]),
            "(0,2)^4, (1,1)"
        );
    }
}
