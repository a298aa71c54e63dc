//! The ranked-poset data model and the complex axioms.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::util::UnionFind;

/// Reference to a proper element: its dimension and its index at that dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceRef {
    pub dim: usize,
    pub idx: usize,
}

impl fmt::Display for FaceRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.dim, self.idx)
    }
}

/// Elements above this count skip the lattice test in validation reports.
const LATTICE_CAP: usize = 4096;

/// A d-dimensional complex stored as an explicit Hasse diagram.
///
/// Proper elements have dimensions `0..=d`; the bottom (dimension -1) and top
/// (dimension d+1) are implicit. `covers[k][i]` lists the indices of the
/// (k-1)-dimensional elements covered by the i-th k-dimensional element;
/// vertices cover nothing. Faces are *not* identified with their vertex sets:
/// quotients and star polyhedra need the raw cover relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    dim: usize,
    covers: Vec<Vec<Vec<u32>>>,
}

impl Complex {
    /// Builds a complex from raw cover lists. Cover lists are sorted; indices
    /// must be in range (checked).
    pub fn new(dim: usize, mut covers: Vec<Vec<Vec<u32>>>) -> Complex {
        assert_eq!(covers.len(), dim + 1, "one element list per dimension");
        for k in 0..=dim {
            let below = if k == 0 { 0 } else { covers[k - 1].len() };
            for cs in covers[k].iter_mut() {
                cs.sort_unstable();
                cs.dedup();
                if let Some(&max) = cs.last() {
                    assert!(k > 0 && (max as usize) < below, "cover index out of range");
                }
                assert!(k > 0 || cs.is_empty(), "vertices cover nothing");
            }
        }
        Complex { dim, covers }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of elements of dimension `k`.
    pub fn size(&self, k: usize) -> usize {
        self.covers[k].len()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.covers.iter().map(|lvl| lvl.len()).collect()
    }

    pub fn element_count(&self) -> usize {
        self.covers.iter().map(|lvl| lvl.len()).sum()
    }

    pub fn covers(&self, k: usize, i: usize) -> &[u32] {
        &self.covers[k][i]
    }

    /// Coface lists, mirroring `covers`: `cofaces[k][i]` lists the
    /// (k+1)-dimensional elements covering element `(k, i)`.
    pub fn cofaces(&self) -> Vec<Vec<Vec<u32>>> {
        let mut out: Vec<Vec<Vec<u32>>> = (0..=self.dim)
            .map(|k| vec![Vec::new(); self.size(k)])
            .collect();
        for k in 1..=self.dim {
            for (i, cs) in self.covers[k].iter().enumerate() {
                for &c in cs {
                    out[k - 1][c as usize].push(i as u32);
                }
            }
        }
        out
    }

    /// Sorted vertex set of every element (downward closure to dimension 0).
    pub fn vertex_sets(&self) -> Vec<Vec<Vec<u32>>> {
        let mut out: Vec<Vec<Vec<u32>>> = Vec::with_capacity(self.dim + 1);
        out.push((0..self.size(0) as u32).map(|i| vec![i]).collect());
        for k in 1..=self.dim {
            let mut lvl = Vec::with_capacity(self.size(k));
            for cs in &self.covers[k] {
                let mut vs: Vec<u32> = Vec::new();
                for &c in cs {
                    vs.extend_from_slice(&out[k - 1][c as usize]);
                }
                vs.sort_unstable();
                vs.dedup();
                lvl.push(vs);
            }
            out.push(lvl);
        }
        out
    }

    /// The dual complex: same elements with the order reversed, so the element
    /// `(k, i)` becomes `(d - k, i)`.
    pub fn dual(&self) -> Complex {
        let d = self.dim;
        let cof = self.cofaces();
        let mut covers: Vec<Vec<Vec<u32>>> = Vec::with_capacity(d + 1);
        for k in 0..=d {
            // dual dimension k keeps the index space of original dimension
            // d - k; covers in the dual are cofaces in the original
            let orig = d - k;
            if k == 0 {
                covers.push(vec![Vec::new(); self.size(orig)]);
            } else {
                covers.push(cof[orig].clone());
            }
        }
        Complex::new(d, covers)
    }

    /// Global dense id across all dimensions (dimension-major).
    pub fn global_id(&self, f: FaceRef) -> usize {
        let mut off = 0;
        for k in 0..f.dim {
            off += self.size(k);
        }
        off + f.idx
    }

    /// Quick structural check of axioms (i)-(iii): ranked plus diamond.
    pub fn check_axioms(&self) -> Result<()> {
        let report = self.validate_structure();
        if !report.ranked {
            return Err(Error::InvalidResult(format!(
                "not ranked (witness {:?})",
                report.ranked_witness
            )));
        }
        if !report.diamond {
            return Err(Error::InvalidResult(format!(
                "diamond property fails ({})",
                report
                    .diamond_witness
                    .map(|w| w.to_string())
                    .unwrap_or_default()
            )));
        }
        Ok(())
    }

    /// Structural part of validation: rankedness, diamond, lattice.
    pub fn validate_structure(&self) -> ValidationReport {
        let mut report = ValidationReport {
            dim: self.dim,
            counts: self.counts(),
            ranked: true,
            ranked_witness: None,
            diamond: true,
            diamond_witness: None,
            flag_count: None,
            flag_graph_connected: None,
            residues_connected: None,
            residue_witness: None,
            lattice: None,
            orientable: None,
        };

        // Ranked: with covers pinned one level down, the only failures are
        // levels with no elements, non-vertices covering nothing, and
        // non-facets covered by nothing.
        'ranked: {
            for k in 0..=self.dim {
                if self.size(k) == 0 {
                    report.ranked = false;
                    break 'ranked;
                }
            }
            for k in 1..=self.dim {
                if let Some(i) = self.covers[k].iter().position(|cs| cs.is_empty()) {
                    report.ranked = false;
                    report.ranked_witness = Some(FaceRef { dim: k, idx: i });
                    break 'ranked;
                }
            }
            let mut covered = vec![false; 0];
            for k in (0..self.dim).rev() {
                covered = vec![false; self.size(k)];
                for cs in &self.covers[k + 1] {
                    for &c in cs {
                        covered[c as usize] = true;
                    }
                }
                if let Some(i) = covered.iter().position(|&c| !c) {
                    report.ranked = false;
                    report.ranked_witness = Some(FaceRef { dim: k, idx: i });
                    break 'ranked;
                }
            }
            let _ = covered;
        }

        if report.ranked {
            match DiamondTable::build(self) {
                Ok(_) => {}
                Err(w) => {
                    report.diamond = false;
                    report.diamond_witness = Some(w);
                }
            }
        } else {
            report.diamond = false;
        }

        if self.element_count() <= LATTICE_CAP && report.ranked {
            report.lattice = Some(self.is_lattice());
        }
        report
    }

    /// Full validation: the structural axioms plus flag-graph connectivity,
    /// residue connectivity, and orientability (whenever the flag count fits
    /// under `flag_cap`).
    pub fn validate(&self, flag_cap: u64) -> ValidationReport {
        let mut report = self.validate_structure();
        if !(report.ranked && report.diamond) {
            return report;
        }
        let fi = match crate::flags::FlagIndex::build(self, flag_cap) {
            Ok(fi) => fi,
            Err(Error::FlagCapExceeded { count, .. }) => {
                report.flag_count = Some(count);
                return report;
            }
            Err(_) => return report,
        };
        report.flag_count = Some(fi.len() as u64);
        report.flag_graph_connected = Some(fi.flag_graph_connected());
        match fi.check_residues(self) {
            Ok(()) => report.residues_connected = Some(true),
            Err(face) => {
                report.residues_connected = Some(false);
                report.residue_witness = Some(face);
            }
        }
        report.orientable = Some(fi.is_orientable());
        report
    }

    /// Lattice test: unique joins and meets for every pair of proper elements.
    pub fn is_lattice(&self) -> bool {
        let n = self.element_count();
        let words = n.div_ceil(64);
        // upward closure bitsets, global ids
        let mut up = vec![0u64; n * words];
        let cof = self.cofaces();
        let mut gid = 0usize;
        let mut gids: Vec<Vec<usize>> = Vec::new();
        for k in 0..=self.dim {
            gids.push((0..self.size(k)).map(|i| gid + i).collect());
            gid += self.size(k);
        }
        for k in (0..=self.dim).rev() {
            for i in 0..self.size(k) {
                let g = gids[k][i];
                up[g * words + g / 64] |= 1 << (g % 64);
                let row_ptr = g * words;
                for &c in &cof[k][i] {
                    let src = gids[k + 1][c as usize] * words;
                    for w in 0..words {
                        let v = up[src + w];
                        up[row_ptr + w] |= v;
                    }
                }
            }
        }
        let unique_bound = |closure: &[u64], boundary: &dyn Fn(usize) -> Vec<usize>| -> bool {
            let mut tmp = vec![0u64; words];
            for a in 0..n {
                for b in (a + 1)..n {
                    for w in 0..words {
                        tmp[w] = closure[a * words + w] & closure[b * words + w];
                    }
                    // minimal elements of the (possibly empty) common bound set
                    let mut minimals = 0;
                    for w in 0..words {
                        let mut bits = tmp[w];
                        while bits != 0 {
                            let g = w * 64 + bits.trailing_zeros() as usize;
                            bits &= bits - 1;
                            let below = boundary(g);
                            if below
                                .iter()
                                .all(|&h| tmp[h / 64] & (1 << (h % 64)) == 0)
                            {
                                minimals += 1;
                                if minimals > 1 {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
            true
        };
        let to_face = |g: usize| -> FaceRef {
            let mut k = 0;
            let mut rem = g;
            while rem >= self.size(k) {
                rem -= self.size(k);
                k += 1;
            }
            FaceRef { dim: k, idx: rem }
        };
        let covers_of = |g: usize| -> Vec<usize> {
            let f = to_face(g);
            self.covers[f.dim]
                .get(f.idx)
                .map(|cs| cs.iter().map(|&c| self.global_id(FaceRef { dim: f.dim - 1, idx: c as usize })).collect())
                .unwrap_or_default()
        };
        if !unique_bound(&up, &covers_of) {
            return false;
        }
        // meets: same test on the dual
        self.dual_is_join_unique()
    }

    fn dual_is_join_unique(&self) -> bool {
        let dual = self.dual();
        let n = dual.element_count();
        let words = n.div_ceil(64);
        let mut up = vec![0u64; n * words];
        let cof = dual.cofaces();
        let mut gids: Vec<Vec<usize>> = Vec::new();
        let mut gid = 0usize;
        for k in 0..=dual.dim {
            gids.push((0..dual.size(k)).map(|i| gid + i).collect());
            gid += dual.size(k);
        }
        for k in (0..=dual.dim).rev() {
            for i in 0..dual.size(k) {
                let g = gids[k][i];
                up[g * words + g / 64] |= 1 << (g % 64);
                let row_ptr = g * words;
                for &c in &cof[k][i] {
                    let src = gids[k + 1][c as usize] * words;
                    for w in 0..words {
                        let v = up[src + w];
                        up[row_ptr + w] |= v;
                    }
                }
            }
        }
        let to_face = |g: usize| -> FaceRef {
            let mut k = 0;
            let mut rem = g;
            while rem >= dual.size(k) {
                rem -= dual.size(k);
                k += 1;
            }
            FaceRef { dim: k, idx: rem }
        };
        let mut tmp = vec![0u64; words];
        for a in 0..n {
            for b in (a + 1)..n {
                for w in 0..words {
                    tmp[w] = up[a * words + w] & up[b * words + w];
                }
                let mut minimals = 0;
                for w in 0..words {
                    let mut bits = tmp[w];
                    while bits != 0 {
                        let g = w * 64 + bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        let f = to_face(g);
                        let below: Vec<usize> = dual.covers[f.dim][f.idx]
                            .iter()
                            .map(|&c| dual.global_id(FaceRef { dim: f.dim - 1, idx: c as usize }))
                            .collect();
                        if below.iter().all(|&h| tmp[h / 64] & (1 << (h % 64)) == 0) {
                            minimals += 1;
                            if minimals > 1 {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

/// Witness for a diamond-property failure: the rank-2 interval that does not
/// contain exactly two middles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondFailure {
    pub lower: Option<FaceRef>,
    pub upper: Option<FaceRef>,
    pub middles: usize,
}

impl fmt::Display for DiamondFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_opt = |x: &Option<FaceRef>| match x {
            Some(r) => r.to_string(),
            None => "-".to_string(),
        };
        write!(
            f,
            "interval [{}, {}] has {} middles, expected 2",
            fmt_opt(&self.lower),
            fmt_opt(&self.upper),
            self.middles
        )
    }
}

/// Precomputed middles of every rank-2 interval, including the intervals
/// through the implicit bottom and top. Sigma lookups read this table.
pub struct DiamondTable {
    dim: usize,
    /// `inner[i - 2][upper]` for levels `2..=d`: entries `(lower, m0, m1)`
    /// sorted by `lower`; the middles sit at dimension `i - 1`.
    inner: Vec<Vec<Vec<(u32, u32, u32)>>>,
    /// the two facets above each (d-1)-dimensional element
    top_pairs: Vec<(u32, u32)>,
    /// for d = 0 the single bottom-top interval
    bottom_top: Option<(u32, u32)>,
}

impl DiamondTable {
    pub fn build(k: &Complex) -> std::result::Result<DiamondTable, DiamondFailure> {
        let d = k.dim();
        // bottom intervals: every 1-dimensional element covers exactly 2 vertices
        if d >= 1 {
            for (i, cs) in (0..k.size(1)).map(|i| (i, k.covers(1, i))) {
                if cs.len() != 2 {
                    return Err(DiamondFailure {
                        lower: None,
                        upper: Some(FaceRef { dim: 1, idx: i }),
                        middles: cs.len(),
                    });
                }
            }
        }
        let mut inner: Vec<Vec<Vec<(u32, u32, u32)>>> = Vec::new();
        for lvl in 2..=d {
            let mut per_upper: Vec<Vec<(u32, u32, u32)>> = Vec::with_capacity(k.size(lvl));
            for y in 0..k.size(lvl) {
                let mut pairs: Vec<(u32, u32)> = Vec::new();
                for &m in k.covers(lvl, y) {
                    for &x in k.covers(lvl - 1, m as usize) {
                        pairs.push((x, m));
                    }
                }
                pairs.sort_unstable();
                let mut grouped: Vec<(u32, u32, u32)> = Vec::new();
                let mut it = pairs.into_iter().peekable();
                while let Some((x, m0)) = it.next() {
                    let mut mids = vec![m0];
                    while let Some(&(x2, m2)) = it.peek() {
                        if x2 == x {
                            mids.push(m2);
                            it.next();
                        } else {
                            break;
                        }
                    }
                    if mids.len() != 2 {
                        return Err(DiamondFailure {
                            lower: Some(FaceRef { dim: lvl - 2, idx: x as usize }),
                            upper: Some(FaceRef { dim: lvl, idx: y }),
                            middles: mids.len(),
                        });
                    }
                    grouped.push((x, mids[0], mids[1]));
                }
                per_upper.push(grouped);
            }
            inner.push(per_upper);
        }
        // top intervals
        let mut top_pairs = Vec::new();
        let mut bottom_top = None;
        if d == 0 {
            if k.size(0) != 2 {
                return Err(DiamondFailure {
                    lower: None,
                    upper: None,
                    middles: k.size(0),
                });
            }
            bottom_top = Some((0, 1));
        } else {
            let mut above: Vec<Vec<u32>> = vec![Vec::new(); k.size(d - 1)];
            for (f, cs) in (0..k.size(d)).map(|f| (f, k.covers(d, f))) {
                for &x in cs {
                    above[x as usize].push(f as u32);
                }
            }
            top_pairs.reserve(above.len());
            for (x, fs) in above.into_iter().enumerate() {
                if fs.len() != 2 {
                    return Err(DiamondFailure {
                        lower: Some(FaceRef { dim: d - 1, idx: x }),
                        upper: None,
                        middles: fs.len(),
                    });
                }
                top_pairs.push((fs[0], fs[1]));
            }
        }
        Ok(DiamondTable {
            dim: d,
            inner,
            top_pairs,
            bottom_top,
        })
    }

    /// The two middles of the rank-2 interval crossed by `sigma_i`:
    /// `lower` is the flag face at dimension i-2 (None for the bottom),
    /// `upper` at dimension i (None for the top).
    pub fn middles(
        &self,
        k: &Complex,
        i: usize,
        lower: Option<u32>,
        upper: Option<u32>,
    ) -> (u32, u32) {
        debug_assert!(i >= 1 && i <= self.dim + 1);
        if self.dim == 0 {
            return self.bottom_top.expect("d=0 diamond");
        }
        if i == 1 {
            let cs = k.covers(1, upper.expect("edge above a vertex") as usize);
            (cs[0], cs[1])
        } else if i == self.dim + 1 {
            self.top_pairs[lower.expect("ridge below top") as usize]
        } else {
            let row = &self.inner[i - 2][upper.expect("upper face") as usize];
            let lo = lower.expect("lower face");
            let at = row.binary_search_by_key(&lo, |e| e.0).expect("diamond pair");
            (row[at].1, row[at].2)
        }
    }

    /// The middle other than `current`.
    pub fn other_middle(
        &self,
        k: &Complex,
        i: usize,
        lower: Option<u32>,
        upper: Option<u32>,
        current: u32,
    ) -> u32 {
        let (a, b) = self.middles(k, i, lower, upper);
        if a == current {
            b
        } else {
            debug_assert_eq!(b, current);
            a
        }
    }
}

/// Outcome of validating a complex, with witnesses for failures.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub dim: usize,
    pub counts: Vec<usize>,
    pub ranked: bool,
    pub ranked_witness: Option<FaceRef>,
    pub diamond: bool,
    pub diamond_witness: Option<DiamondFailure>,
    pub flag_count: Option<u64>,
    pub flag_graph_connected: Option<bool>,
    pub residues_connected: Option<bool>,
    pub residue_witness: Option<FaceRef>,
    /// None when the complex is too large for the pairwise test.
    pub lattice: Option<bool>,
    pub orientable: Option<bool>,
}

impl ValidationReport {
    /// Axioms (i)-(iii): bottom/top, ranked, diamond.
    pub fn axioms_pass(&self) -> bool {
        self.ranked && self.diamond
    }

    /// Axioms plus the connectivity requirements used by the analyses.
    pub fn all_pass(&self) -> bool {
        self.axioms_pass()
            && self.flag_graph_connected != Some(false)
            && self.residues_connected != Some(false)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.dim)?;
        writeln!(
            f,
            "counts {}",
            self.counts
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        )?;
        write!(f, "ranked: {}", if self.ranked { "pass" } else { "FAIL" })?;
        if let Some(w) = self.ranked_witness {
            write!(f, " (witness {w})")?;
        }
        writeln!(f)?;
        write!(f, "diamond: {}", if self.diamond { "pass" } else { "FAIL" })?;
        if let Some(w) = &self.diamond_witness {
            write!(f, " ({w})")?;
        }
        writeln!(f)?;
        let opt = |v: Option<bool>| match v {
            Some(true) => "pass",
            Some(false) => "FAIL",
            None => "skipped",
        };
        if let Some(n) = self.flag_count {
            writeln!(f, "flags: {n}")?;
        }
        writeln!(f, "flag graph connected: {}", opt(self.flag_graph_connected))?;
        write!(f, "residues connected: {}", opt(self.residues_connected))?;
        if let Some(w) = self.residue_witness {
            write!(f, " (witness {w})")?;
        }
        writeln!(f)?;
        writeln!(
            f,
            "lattice: {}",
            match self.lattice {
                Some(true) => "true",
                Some(false) => "false",
                None => "skipped",
            }
        )?;
        writeln!(
            f,
            "orientable: {}",
            match self.orientable {
                Some(true) => "true",
                Some(false) => "false",
                None => "skipped",
            }
        )
    }
}

/// Builds a complex level by level while deduplicating elements by a key.
///
/// Used by constructors that discover faces from vertex data: the key is
/// whatever identifies a face canonically (usually its vertex set).
pub struct LevelBuilder<K: Ord + Clone> {
    keys: Vec<BTreeMap<K, u32>>,
    covers: Vec<Vec<Vec<u32>>>,
}

impl<K: Ord + Clone> LevelBuilder<K> {
    pub fn new(dim: usize) -> Self {
        LevelBuilder {
            keys: (0..=dim).map(|_| BTreeMap::new()).collect(),
            covers: (0..=dim).map(|_| Vec::new()).collect(),
        }
    }

    pub fn add(&mut self, dim: usize, key: K, covers: Vec<u32>) -> u32 {
        if let Some(&id) = self.keys[dim].get(&key) {
            return id;
        }
        let id = self.covers[dim].len() as u32;
        self.keys[dim].insert(key, id);
        self.covers[dim].push(covers);
        id
    }

    pub fn get(&self, dim: usize, key: &K) -> Option<u32> {
        self.keys[dim].get(key).copied()
    }

    pub fn add_cover(&mut self, dim: usize, id: u32, cover: u32) {
        self.covers[dim][id as usize].push(cover);
    }

    pub fn finish(self, dim: usize) -> Complex {
        Complex::new(dim, self.covers)
    }
}

/// Connected components of the flag graph restricted to a color set are used
/// in several places; this helper runs the union-find over selected sigma
/// tables.
pub(crate) fn color_components(
    sigma: &[Vec<u32>],
    n: usize,
    colors_enabled: impl Fn(usize) -> bool,
) -> (Vec<u32>, usize) {
    let mut uf = UnionFind::new(n);
    for (c, table) in sigma.iter().enumerate() {
        if colors_enabled(c + 1) {
            for f in 0..n as u32 {
                uf.union(f, table[f as usize]);
            }
        }
    }
    uf.class_ids()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn cube_validates_and_is_lattice() {
        let cube = families::cube(3).unwrap();
        assert_eq!(cube.counts(), vec![8, 12, 6]);
        let report = cube.validate(crate::DEFAULT_FLAG_CAP);
        assert!(report.all_pass());
        assert_eq!(report.lattice, Some(true));
        assert_eq!(report.orientable, Some(true));
        assert_eq!(report.flag_count, Some(48));
    }

    #[test]
    fn three_middle_diamond_fails_with_witness() {
        // a "triangle" with a tripled edge: the bottom-to-face interval has
        // three middles
        let covers = vec![
            vec![vec![], vec![]],
            vec![vec![0, 1], vec![0, 1], vec![0, 1]],
            vec![vec![0, 1, 2]],
        ];
        let k = Complex::new(2, covers);
        let report = k.validate_structure();
        assert!(report.ranked);
        assert!(!report.diamond);
        let w = report.diamond_witness.unwrap();
        assert_eq!(w.middles, 3);
        assert_eq!(w.upper, Some(FaceRef { dim: 2, idx: 0 }));
    }

    #[test]
    fn dual_is_involution() {
        let k = families::simplex(4).unwrap();
        assert_eq!(k.dual().dual(), k);
        let b3 = families::cross_polytope(3).unwrap();
        let dual = b3.dual();
        assert_eq!(dual.counts(), vec![8, 12, 6]);
    }
}
