//! Flag enumeration, the sigma operators, the translation operator, and
//! reverse flags.
//!
//! Flags are indexed by their lexicographic rank over (facet, cover position,
//! cover position, ...), so ids are dense, deterministic, and never require a
//! per-flag hash table: the sigma image of a flag is re-ranked from prefix
//! sums of chain counts.

use crate::complex::{color_components, Complex, DiamondTable, FaceRef};
use crate::error::{Error, Result};
use crate::util::UnionFind;

/// A maximal chain, one element per dimension `0..=d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag(pub Vec<u32>);

impl Flag {
    pub fn face(&self, dim: usize) -> u32 {
        self.0[dim]
    }
}

struct Ranker {
    /// prefix[k]: per element of dimension k, running chain totals over its
    /// cover list (row length deg+1), CSR-flattened
    prefix_off: Vec<Vec<usize>>,
    prefix: Vec<Vec<u64>>,
    facet_offset: Vec<u64>,
}

impl Ranker {
    fn build(k: &Complex) -> Ranker {
        let d = k.dim();
        let mut chains_below: Vec<Vec<u64>> = Vec::with_capacity(d + 1);
        chains_below.push(vec![1u64; k.size(0)]);
        for lvl in 1..=d {
            let mut counts = Vec::with_capacity(k.size(lvl));
            for i in 0..k.size(lvl) {
                let mut c = 0u64;
                for &x in k.covers(lvl, i) {
                    c += chains_below[lvl - 1][x as usize];
                }
                counts.push(c);
            }
            chains_below.push(counts);
        }
        let mut prefix_off: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
        let mut prefix: Vec<Vec<u64>> = Vec::with_capacity(d + 1);
        prefix_off.push(Vec::new());
        prefix.push(Vec::new());
        for lvl in 1..=d {
            let mut off = Vec::with_capacity(k.size(lvl) + 1);
            let mut data = Vec::new();
            for i in 0..k.size(lvl) {
                off.push(data.len());
                let mut run = 0u64;
                data.push(0);
                for &x in k.covers(lvl, i) {
                    run += chains_below[lvl - 1][x as usize];
                    data.push(run);
                }
            }
            off.push(data.len());
            prefix_off.push(off);
            prefix.push(data);
        }
        let mut facet_offset = Vec::with_capacity(k.size(d) + 1);
        let mut run = 0u64;
        facet_offset.push(0);
        for i in 0..k.size(d) {
            run += chains_below[d][i];
            facet_offset.push(run);
        }
        Ranker {
            prefix_off,
            prefix,
            facet_offset,
        }
    }

    fn total(&self) -> u64 {
        *self.facet_offset.last().unwrap()
    }

    #[inline]
    fn pref(&self, lvl: usize, elem: u32, pos: usize) -> u64 {
        self.prefix[lvl][self.prefix_off[lvl][elem as usize] + pos]
    }
}

#[inline]
fn position_of(covers: &[u32], x: u32) -> usize {
    covers.binary_search(&x).expect("cover present")
}

/// Dense flag ids with per-color sigma tables.
pub struct FlagIndex {
    dim: usize,
    len: usize,
    sigma: Vec<Vec<u32>>,
    ranker: Ranker,
}

impl FlagIndex {
    /// Number of flags, by chain-count DP (no enumeration).
    pub fn count_flags(k: &Complex) -> u64 {
        Ranker::build(k).total()
    }

    /// Enumerates all flags and fills the sigma tables. Fails if the flag
    /// count exceeds `cap` or the diamond property does not hold.
    pub fn build(k: &Complex, cap: u64) -> Result<FlagIndex> {
        let dt = DiamondTable::build(k)
            .map_err(|w| Error::InvalidResult(format!("diamond property fails: {w}")))?;
        Self::build_with(k, &dt, cap)
    }

    pub fn build_with(k: &Complex, dt: &DiamondTable, cap: u64) -> Result<FlagIndex> {
        let d = k.dim();
        let ranker = Ranker::build(k);
        let total = ranker.total();
        if total > cap {
            return Err(Error::FlagCapExceeded { count: total, cap });
        }
        if total == 0 {
            return Err(Error::InvalidResult("complex has no flags".into()));
        }
        let len = total as usize;
        let mut sigma: Vec<Vec<u32>> = (0..=d).map(|_| vec![0u32; len]).collect();

        // odometer over (facet, positions); base[k] accumulates the rank
        // contribution of the chain above dimension k-1
        let mut faces = vec![0u32; d + 1];
        let mut pos = vec![0usize; d + 1];
        let mut base = vec![0u64; d + 1];
        faces[d] = 0;
        base[d] = 0;
        for lvl in (0..d).rev() {
            faces[lvl] = k.covers(lvl + 1, faces[lvl + 1] as usize)[0];
            pos[lvl] = 0;
            base[lvl] = base[lvl + 1];
        }
        let mut counter: u64 = 0;
        loop {
            let rank = base[0];
            debug_assert_eq!(rank, counter);
            let fid = rank as usize;

            for i in 1..=(d + 1) {
                let image: u64 = if i == d + 1 {
                    if d == 0 {
                        let (a, b) = dt.middles(k, 1, None, None);
                        let other = if a == faces[0] { b } else { a };
                        ranker.facet_offset[other as usize]
                    } else {
                        let lower = faces[d - 1];
                        let (f0, f1) = dt.middles(k, d + 1, Some(lower), None);
                        let other = if f0 == faces[d] { f1 } else { f0 };
                        let p = position_of(k.covers(d, other as usize), lower);
                        ranker.facet_offset[other as usize]
                            + ranker.pref(d, other, p)
                            + (rank - base[d - 1])
                    }
                } else if i == 1 {
                    // swap the vertex inside its edge; chains below a vertex
                    // count 1, so the rank moves by the position delta
                    let other_pos = 1 - pos[0];
                    rank - pos[0] as u64 + other_pos as u64
                } else {
                    let lvl = i - 1; // dimension of the face being swapped
                    let lower = faces[lvl - 1];
                    let upper = faces[lvl + 1];
                    let m = dt.other_middle(k, i, Some(lower), Some(upper), faces[lvl]);
                    let p_up = position_of(k.covers(lvl + 1, upper as usize), m);
                    let p_lo = position_of(k.covers(lvl, m as usize), lower);
                    base[lvl + 1]
                        + ranker.pref(lvl + 1, upper, p_up)
                        + ranker.pref(lvl, m, p_lo)
                        + (rank - base[lvl - 1])
                };
                debug_assert!(image < total);
                sigma[i - 1][fid] = image as u32;
            }

            counter += 1;
            if counter == total {
                break;
            }
            // advance the odometer
            let mut carry = 0usize;
            loop {
                if carry == d {
                    faces[d] += 1;
                    debug_assert!((faces[d] as usize) < k.size(d));
                    base[d] = ranker.facet_offset[faces[d] as usize];
                    break;
                }
                let parent = faces[carry + 1];
                let cs = k.covers(carry + 1, parent as usize);
                if pos[carry] + 1 < cs.len() {
                    pos[carry] += 1;
                    faces[carry] = cs[pos[carry]];
                    base[carry] = base[carry + 1] + ranker.pref(carry + 1, parent, pos[carry]);
                    break;
                }
                carry += 1;
            }
            for lvl in (0..carry).rev() {
                faces[lvl] = k.covers(lvl + 1, faces[lvl + 1] as usize)[0];
                pos[lvl] = 0;
                base[lvl] = base[lvl + 1];
            }
        }

        let fi = FlagIndex {
            dim: d,
            len,
            sigma,
            ranker,
        };
        fi.assert_involutions();
        Ok(fi)
    }

    fn assert_involutions(&self) {
        for table in &self.sigma {
            for f in 0..self.len as u32 {
                let g = table[f as usize];
                assert_ne!(g, f, "sigma has a fixed flag");
                assert_eq!(table[g as usize], f, "sigma table is not an involution");
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// sigma_i for i in 1..=d+1, checked.
    pub fn sigma(&self, i: usize, f: u32) -> Result<u32> {
        if i < 1 || i > self.dim + 1 {
            return Err(Error::SigmaIndexOutOfRange {
                index: i,
                max: self.dim + 1,
            });
        }
        Ok(self.sigma[i - 1][f as usize])
    }

    #[inline]
    pub(crate) fn sigma_unchecked(&self, i: usize, f: u32) -> u32 {
        self.sigma[i - 1][f as usize]
    }

    pub fn sigma_table(&self, i: usize) -> &[u32] {
        &self.sigma[i - 1]
    }

    /// The translation operator T = sigma_{d+1} ... sigma_1 (sigma_1 first).
    #[inline]
    pub fn translate(&self, f: u32) -> u32 {
        let mut g = f;
        for table in &self.sigma {
            g = table[g as usize];
        }
        g
    }

    #[inline]
    pub fn translate_inv(&self, f: u32) -> u32 {
        let mut g = f;
        for table in self.sigma.iter().rev() {
            g = table[g as usize];
        }
        g
    }

    /// The reverse flag, computed by the sigma word equivalent to the
    /// anti-diagonal of the triangular face array (equality with the
    /// column-by-column construction is covered by tests).
    pub fn reverse(&self, f: u32) -> u32 {
        let mut g = f;
        for k in (1..=self.dim).rev() {
            for i in 1..=k {
                g = self.sigma[i - 1][g as usize];
            }
        }
        g
    }

    /// Unrank: the flag with the given id.
    pub fn flag(&self, k: &Complex, id: u32) -> Flag {
        let d = self.dim;
        let mut faces = vec![0u32; d + 1];
        let mut r = id as u64;
        let facet = match self.ranker.facet_offset.binary_search(&r) {
            Ok(at) => at,
            Err(at) => at - 1,
        };
        faces[d] = facet as u32;
        r -= self.ranker.facet_offset[facet];
        for lvl in (1..=d).rev() {
            let x = faces[lvl];
            let off = self.ranker.prefix_off[lvl][x as usize];
            let deg = k.covers(lvl, x as usize).len();
            let row = &self.ranker.prefix[lvl][off..=off + deg];
            let j = match row.binary_search(&r) {
                Ok(at) => at.min(deg - 1),
                Err(at) => at - 1,
            };
            faces[lvl - 1] = k.covers(lvl, x as usize)[j];
            r -= row[j];
        }
        debug_assert_eq!(r, 0);
        Flag(faces)
    }

    /// Rank: the id of a flag.
    pub fn id_of(&self, k: &Complex, flag: &Flag) -> u32 {
        let d = self.dim;
        let mut r = self.ranker.facet_offset[flag.0[d] as usize];
        for lvl in (1..=d).rev() {
            let x = flag.0[lvl];
            let p = position_of(k.covers(lvl, x as usize), flag.0[lvl - 1]);
            r += self.ranker.pref(lvl, x, p);
        }
        r as u32
    }

    /// Orientability: the sigma-colored flag graph is bipartite.
    pub fn is_orientable(&self) -> bool {
        let mut color = vec![u8::MAX; self.len];
        let mut stack = Vec::new();
        for start in 0..self.len as u32 {
            if color[start as usize] != u8::MAX {
                continue;
            }
            color[start as usize] = 0;
            stack.push(start);
            while let Some(f) = stack.pop() {
                let c = color[f as usize];
                for table in &self.sigma {
                    let g = table[f as usize];
                    if color[g as usize] == u8::MAX {
                        color[g as usize] = 1 - c;
                        stack.push(g);
                    } else if color[g as usize] == c {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn flag_graph_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.len);
        for table in &self.sigma {
            for f in 0..self.len as u32 {
                uf.union(f, table[f as usize]);
            }
        }
        uf.class_count() == 1
    }

    /// Residue connectivity: for every element x, the flags containing x form
    /// one component under the sigma moves that fix x.
    pub fn check_residues(&self, k: &Complex) -> std::result::Result<(), FaceRef> {
        let d = self.dim;
        for c in 1..=(d + 1) {
            let (comp, _) = color_components(&self.sigma, self.len, |j| j != c);
            let mut first = vec![u32::MAX; k.size(c - 1)];
            let mut bad: Option<FaceRef> = None;
            for_each_flag(k, |id, faces| {
                let x = faces[c - 1] as usize;
                if first[x] == u32::MAX {
                    first[x] = comp[id as usize];
                } else if first[x] != comp[id as usize] && bad.is_none() {
                    bad = Some(FaceRef { dim: c - 1, idx: x });
                }
            });
            if let Some(face) = bad {
                return Err(face);
            }
        }
        Ok(())
    }

    /// Connected components of the flag graph restricted to the given colors
    /// (`enabled[i]` for sigma_i, index 1-based with a dummy slot 0).
    pub fn components_with_colors(&self, enabled: &[bool]) -> (Vec<u32>, usize) {
        color_components(&self.sigma, self.len, |c| enabled[c])
    }
}

/// Visits every flag in id order together with its face array, without
/// building sigma tables.
pub fn for_each_flag(k: &Complex, mut visit: impl FnMut(u32, &[u32])) {
    let d = k.dim();
    if (0..=d).any(|lvl| k.size(lvl) == 0) {
        return;
    }
    let mut faces = vec![0u32; d + 1];
    let mut pos = vec![0usize; d + 1];
    faces[d] = 0;
    for lvl in (0..d).rev() {
        faces[lvl] = k.covers(lvl + 1, faces[lvl + 1] as usize)[0];
        pos[lvl] = 0;
    }
    let mut id: u32 = 0;
    loop {
        visit(id, &faces);
        id += 1;
        let mut carry = 0usize;
        loop {
            if carry == d {
                if faces[d] as usize + 1 == k.size(d) {
                    return;
                }
                faces[d] += 1;
                break;
            }
            let parent = faces[carry + 1] as usize;
            let cs = k.covers(carry + 1, parent);
            if pos[carry] + 1 < cs.len() {
                pos[carry] += 1;
                faces[carry] = cs[pos[carry]];
                break;
            }
            carry += 1;
        }
        for lvl in (0..carry).rev() {
            faces[lvl] = k.covers(lvl + 1, faces[lvl + 1] as usize)[0];
            pos[lvl] = 0;
        }
    }
}

/// The reverse flag by the column-by-column triangular array construction.
pub fn reverse_flag(k: &Complex, dt: &DiamondTable, f: &Flag) -> Flag {
    let d = k.dim();
    let mut prev: Vec<u32> = f.0.clone();
    let mut anti = vec![0u32; d + 1];
    anti[d] = prev[d];
    for j in 2..=(d + 1) {
        let height = d + 2 - j;
        let mut col = vec![0u32; height];
        for i in 1..=height {
            let lower = if i >= 2 { Some(col[i - 2]) } else { None };
            let upper = prev[i]; // x_{i+1, j-1}
            let cur = prev[i - 1]; // x_{i, j-1}
            col[i - 1] = dt.other_middle(k, i, lower, Some(upper), cur);
        }
        anti[height - 1] = col[height - 1];
        prev = col;
    }
    Flag(anti)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn simplex_flag_count() {
        let a3 = families::simplex(3).unwrap();
        assert_eq!(FlagIndex::count_flags(&a3), 24);
        let cube = families::cube(3).unwrap();
        assert_eq!(FlagIndex::count_flags(&cube), 48);
    }

    #[test]
    fn sigma_is_involution_and_commutes() {
        let g3 = families::cube(3).unwrap();
        let fi = FlagIndex::build(&g3, 1 << 20).unwrap();
        let d = g3.dim();
        for f in 0..fi.len() as u32 {
            for i in 1..=(d + 1) {
                let g = fi.sigma(i, f).unwrap();
                assert_ne!(g, f);
                assert_eq!(fi.sigma(i, g).unwrap(), f);
                for j in (i + 2)..=(d + 1) {
                    let a = fi.sigma(j, fi.sigma(i, f).unwrap()).unwrap();
                    let b = fi.sigma(i, fi.sigma(j, f).unwrap()).unwrap();
                    assert_eq!(a, b, "sigma_{i} sigma_{j} must commute");
                }
            }
        }
    }

    #[test]
    fn sigma_index_out_of_range_errors() {
        let a3 = families::simplex(3).unwrap();
        let fi = FlagIndex::build(&a3, 1 << 20).unwrap();
        assert!(fi.sigma(0, 0).is_err());
        assert!(fi.sigma(4, 0).is_err());
    }

    #[test]
    fn sigma_1_moves_to_other_endpoint() {
        let a3 = families::simplex(3).unwrap();
        let fi = FlagIndex::build(&a3, 1 << 20).unwrap();
        for f in 0..fi.len() as u32 {
            let flag = fi.flag(&a3, f);
            let img = fi.flag(&a3, fi.sigma(1, f).unwrap());
            assert_ne!(flag.face(0), img.face(0));
            for k in 1..=2 {
                assert_eq!(flag.face(k), img.face(k));
            }
            let edge = flag.face(1);
            let vs = a3.covers(1, edge as usize);
            assert!(vs.contains(&img.face(0)));
        }
    }

    #[test]
    fn sigma_2_matches_brute_force_search() {
        // the unique flag differing exactly in the edge slot, found by
        // scanning the whole flag list
        let a3 = families::simplex(3).unwrap();
        let fi = FlagIndex::build(&a3, 1 << 20).unwrap();
        let mut all: Vec<Flag> = Vec::new();
        for_each_flag(&a3, |_, faces| all.push(Flag(faces.to_vec())));
        for f in 0..fi.len() as u32 {
            let target = fi.flag(&a3, f);
            let image = fi.flag(&a3, fi.sigma(2, f).unwrap());
            let brute: Vec<&Flag> = all
                .iter()
                .filter(|g| {
                    g.face(0) == target.face(0)
                        && g.face(2) == target.face(2)
                        && g.face(1) != target.face(1)
                })
                .collect();
            assert_eq!(brute.len(), 1);
            assert_eq!(brute[0], &image);
        }
    }

    #[test]
    fn rank_unrank_roundtrip() {
        let k = families::cross_polytope(4).unwrap();
        let fi = FlagIndex::build(&k, 1 << 20).unwrap();
        for f in 0..fi.len() as u32 {
            let flag = fi.flag(&k, f);
            assert_eq!(fi.id_of(&k, &flag), f);
        }
    }

    #[test]
    fn translate_inverse() {
        let g3 = families::cube(3).unwrap();
        let fi = FlagIndex::build(&g3, 1 << 20).unwrap();
        for f in 0..fi.len() as u32 {
            assert_eq!(fi.translate_inv(fi.translate(f)), f);
        }
    }

    #[test]
    fn reverse_word_matches_triangular_array() {
        for k in [
            families::simplex(4).unwrap(),
            families::cube(3).unwrap(),
            families::cross_polytope(3).unwrap(),
        ] {
            let dt = DiamondTable::build(&k).unwrap();
            let fi = FlagIndex::build(&k, 1 << 22).unwrap();
            for f in 0..fi.len() as u32 {
                let by_word = fi.flag(&k, fi.reverse(f));
                let by_array = reverse_flag(&k, &dt, &fi.flag(&k, f));
                assert_eq!(by_word, by_array);
            }
        }
    }

    #[test]
    fn reverse_is_involution_on_simplex4() {
        let k = families::simplex(4).unwrap();
        let fi = FlagIndex::build(&k, 1 << 22).unwrap();
        for f in 0..fi.len() as u32 {
            assert_eq!(fi.reverse(fi.reverse(f)), f);
        }
    }

    #[test]
    fn reverse_on_polygon_swaps_endpoint() {
        let p = families::polygon(5).unwrap();
        let dt = DiamondTable::build(&p).unwrap();
        let fi = FlagIndex::build(&p, 1 << 12).unwrap();
        for f in 0..fi.len() as u32 {
            let flag = fi.flag(&p, f);
            let rev = reverse_flag(&p, &dt, &flag);
            assert_eq!(rev.face(1), flag.face(1));
            assert_ne!(rev.face(0), flag.face(0));
        }
    }

    #[test]
    fn flag_cap_is_enforced() {
        let k = families::cube(3).unwrap();
        match FlagIndex::build(&k, 10) {
            Err(Error::FlagCapExceeded { count, cap }) => {
                assert_eq!(count, 48);
                assert_eq!(cap, 10);
            }
            Err(other) => panic!("expected cap error, got {other:?}"),
            Ok(_) => panic!("expected cap error"),
        }
    }
}
