//! Maps as flag systems: three involutions (a, b, c) on flags with
//! a^2 = b^2 = c^2 = (ac)^2 = 1, the six triality operations, the
//! vertex/face/zigzag census, and vertex twisting on oriented maps.

use std::collections::BTreeSet;
use std::fmt;

use crate::complex::{Complex, LevelBuilder};
use crate::error::{Error, Result};
use crate::flags::{for_each_flag, FlagIndex};
use crate::util::UnionFind;

/// A map given by its flag set and the involutions a = sigma_1, b = sigma_2,
/// c = sigma_3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagSystem {
    a: Vec<u32>,
    b: Vec<u32>,
    c: Vec<u32>,
}

/// The six Lins operations (identity omitted).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinsOp {
    Dual,
    Skew,
    Phial,
    /// (phial M)* -- the skew-dual
    SkewDual,
    /// (skew M)* -- the skew-phial
    PhialDual,
}

impl LinsOp {
    pub const ALL: [LinsOp; 5] = [
        LinsOp::Dual,
        LinsOp::Skew,
        LinsOp::Phial,
        LinsOp::SkewDual,
        LinsOp::PhialDual,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LinsOp::Dual => "dual",
            LinsOp::Skew => "skew",
            LinsOp::Phial => "phial",
            LinsOp::SkewDual => "skew_dual",
            LinsOp::PhialDual => "phial_dual",
        }
    }

    pub fn parse(s: &str) -> Result<LinsOp> {
        Ok(match s {
            "dual" => LinsOp::Dual,
            "skew" => LinsOp::Skew,
            "phial" => LinsOp::Phial,
            "skew_dual" => LinsOp::SkewDual,
            "phial_dual" => LinsOp::PhialDual,
            other => {
                return Err(Error::ParameterOutOfRange(format!(
                    "unknown Lins operation `{other}`"
                )))
            }
        })
    }
}

fn compose(p: &[u32], q: &[u32]) -> Vec<u32> {
    // apply q first, then p
    q.iter().map(|&x| p[x as usize]).collect()
}

fn is_involution(p: &[u32]) -> bool {
    p.iter()
        .enumerate()
        .all(|(i, &x)| (x as usize) < p.len() && p[x as usize] == i as u32)
}

impl FlagSystem {
    pub fn new(a: Vec<u32>, b: Vec<u32>, c: Vec<u32>) -> Result<FlagSystem> {
        let n = a.len();
        if b.len() != n || c.len() != n || n == 0 {
            return Err(Error::InvalidFlagSystem(
                "involutions must share a nonempty flag set".to_string(),
            ));
        }
        for (name, p) in [("a", &a), ("b", &b), ("c", &c)] {
            if !is_involution(p) {
                return Err(Error::InvalidFlagSystem(format!(
                    "{name} is not an involution"
                )));
            }
        }
        let ac = compose(&a, &c);
        if !is_involution(&ac) {
            return Err(Error::InvalidFlagSystem("(ac)^2 != 1".to_string()));
        }
        let fs = FlagSystem { a, b, c };
        if !fs.connected() {
            return Err(Error::InvalidFlagSystem(
                "flag action is not connected".to_string(),
            ));
        }
        Ok(fs)
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }
    pub fn b(&self) -> &[u32] {
        &self.b
    }
    pub fn c(&self) -> &[u32] {
        &self.c
    }

    fn connected(&self) -> bool {
        let mut uf = UnionFind::new(self.len());
        for f in 0..self.len() as u32 {
            uf.union(f, self.a[f as usize]);
            uf.union(f, self.b[f as usize]);
            uf.union(f, self.c[f as usize]);
        }
        uf.class_count() == 1
    }

    /// Flags of a valid 2-complex with a, b, c = sigma_1, sigma_2, sigma_3.
    pub fn from_complex(k: &Complex) -> Result<FlagSystem> {
        if k.dim() != 2 {
            return Err(Error::ParameterOutOfRange(
                "flag systems are the d = 2 representation".to_string(),
            ));
        }
        let fi = FlagIndex::build(k, crate::flag_cap_from_env())?;
        FlagSystem::new(
            fi.sigma_table(1).to_vec(),
            fi.sigma_table(2).to_vec(),
            fi.sigma_table(3).to_vec(),
        )
    }

    /// Rebuilds the complex whose faces are the orbits of <b,c>, <a,c>,
    /// <a,b>. Fails when the orbit poset violates the complex axioms (a flag
    /// system can be a map without being a valid complex).
    pub fn to_complex(&self) -> Result<Complex> {
        let (v_of, _) = self.orbits(false, true, true);
        let (e_of, _) = self.orbits(true, false, true);
        let (f_of, _) = self.orbits(true, true, false);
        let mut builder: LevelBuilder<u32> = LevelBuilder::new(2);
        let mut seen_v: BTreeSet<u32> = BTreeSet::new();
        for f in 0..self.len() as u32 {
            if seen_v.insert(v_of[f as usize]) {
                builder.add(0, v_of[f as usize], Vec::new());
            }
        }
        // edges cover the vertices whose orbits they meet
        let mut edge_covers: Vec<BTreeSet<u32>> = Vec::new();
        let mut edge_ids: Vec<u32> = Vec::new();
        {
            let mut seen_e: std::collections::BTreeMap<u32, usize> = Default::default();
            for f in 0..self.len() as u32 {
                let e = e_of[f as usize];
                let slot = *seen_e.entry(e).or_insert_with(|| {
                    edge_covers.push(BTreeSet::new());
                    edge_ids.push(e);
                    edge_covers.len() - 1
                });
                edge_covers[slot].insert(v_of[f as usize]);
            }
        }
        let mut edge_real: std::collections::BTreeMap<u32, u32> = Default::default();
        for (slot, e) in edge_ids.iter().enumerate() {
            let covers: Vec<u32> = edge_covers[slot]
                .iter()
                .map(|v| builder.get(0, v).unwrap())
                .collect();
            let id = builder.add(1, *e, covers);
            edge_real.insert(*e, id);
        }
        let mut face_covers: Vec<BTreeSet<u32>> = Vec::new();
        let mut face_ids: Vec<u32> = Vec::new();
        {
            let mut seen_f: std::collections::BTreeMap<u32, usize> = Default::default();
            for f in 0..self.len() as u32 {
                let fo = f_of[f as usize];
                let slot = *seen_f.entry(fo).or_insert_with(|| {
                    face_covers.push(BTreeSet::new());
                    face_ids.push(fo);
                    face_covers.len() - 1
                });
                face_covers[slot].insert(edge_real[&e_of[f as usize]]);
            }
        }
        for (slot, fo) in face_ids.iter().enumerate() {
            builder.add(2, *fo, face_covers[slot].iter().copied().collect());
        }
        let out = builder.finish(2);
        out.check_axioms().map_err(|e| {
            Error::InvalidResult(format!("orbit faces violate the complex axioms: {e}"))
        })?;
        Ok(out)
    }

    /// Orbit labels of the subgroup generated by the selected involutions.
    fn orbits(&self, use_a: bool, use_b: bool, use_c: bool) -> (Vec<u32>, usize) {
        let mut uf = UnionFind::new(self.len());
        for f in 0..self.len() as u32 {
            if use_a {
                uf.union(f, self.a[f as usize]);
            }
            if use_b {
                uf.union(f, self.b[f as usize]);
            }
            if use_c {
                uf.union(f, self.c[f as usize]);
            }
        }
        uf.class_ids()
    }

    /// Orbits of <ac, b>: the zigzags.
    fn zigzag_orbits(&self) -> (Vec<u32>, usize) {
        let ac = compose(&self.a, &self.c);
        let mut uf = UnionFind::new(self.len());
        for f in 0..self.len() as u32 {
            uf.union(f, ac[f as usize]);
            uf.union(f, self.b[f as usize]);
        }
        uf.class_ids()
    }

    /// One of the six triality relabelings.
    pub fn lins(&self, op: LinsOp) -> FlagSystem {
        let ac = compose(&self.a, &self.c);
        let (a, b, c) = match op {
            LinsOp::Dual => (self.c.clone(), self.b.clone(), self.a.clone()),
            LinsOp::Skew => (ac, self.b.clone(), self.c.clone()),
            LinsOp::Phial => (self.a.clone(), self.b.clone(), compose(&self.a, &self.c)),
            LinsOp::SkewDual => (compose(&self.a, &self.c), self.b.clone(), self.a.clone()),
            LinsOp::PhialDual => (self.c.clone(), self.b.clone(), compose(&self.a, &self.c)),
        };
        FlagSystem::new(a, b, c).expect("triality preserves the involution laws")
    }

    pub fn census(&self) -> MapCensus {
        let n = self.len();
        let (v_of, nv) = self.orbits(false, true, true);
        let (e_of, ne) = self.orbits(true, false, true);
        let (f_of, nf) = self.orbits(true, true, false);
        let (z_of, nz) = self.zigzag_orbits();
        let orbit_sizes = |labels: &[u32], count: usize| -> Vec<u32> {
            let mut sizes = vec![0u32; count];
            for &l in labels {
                sizes[l as usize] += 1;
            }
            sizes
        };
        let halved_multiset = |labels: &[u32], count: usize| -> Vec<(u32, u32)> {
            let mut m: std::collections::BTreeMap<u32, u32> = Default::default();
            for s in orbit_sizes(labels, count) {
                *m.entry(s / 2).or_insert(0) += 1;
            }
            m.into_iter().collect()
        };
        let _ = e_of;
        let v_vector = halved_multiset(&v_of, nv);
        let p_vector = halved_multiset(&f_of, nf);
        let z_vector = halved_multiset(&z_of, nz);
        let chi = nv as i64 - ne as i64 + nf as i64;
        // orientable when the (a, b, c)-graph is bipartite
        let orientable = {
            let mut color = vec![u8::MAX; n];
            let mut ok = true;
            let mut stack = vec![0u32];
            color[0] = 0;
            while let Some(f) = stack.pop() {
                for p in [&self.a, &self.b, &self.c] {
                    let g = p[f as usize];
                    if color[g as usize] == u8::MAX {
                        color[g as usize] = 1 - color[f as usize];
                        stack.push(g);
                    } else if color[g as usize] == color[f as usize] {
                        ok = false;
                    }
                }
            }
            ok
        };
        MapCensus {
            flags: n,
            vertices: nv,
            edges: ne,
            faces: nf,
            v_vector,
            p_vector,
            z_vector,
            chi,
            orientable,
        }
    }

    /// Vertex ids as used by the census and by `twist`: orbits of <b,c>,
    /// numbered by least flag.
    pub fn vertex_labels(&self) -> (Vec<u32>, usize) {
        self.orbits(false, true, true)
    }

    /// The skeleton graph on census vertex ids.
    pub fn skeleton(&self) -> Vec<BTreeSet<u32>> {
        let (v_of, nv) = self.orbits(false, true, true);
        let mut adj: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); nv];
        for f in 0..self.len() as u32 {
            let u = v_of[f as usize];
            let w = v_of[self.a[f as usize] as usize];
            if u != w {
                adj[u as usize].insert(w);
                adj[w as usize].insert(u);
            }
        }
        adj
    }

    /// Reverses the rotation at the given vertices of an oriented map and
    /// rebuilds the flag system.
    pub fn twist(&self, vertices: &BTreeSet<u32>) -> Result<FlagSystem> {
        let rot = RotationSystem::from_flag_system(self)?;
        let rot = rot.twist(vertices);
        Ok(rot.to_flag_system())
    }

    /// Extension-based isomorphism of flag systems.
    pub fn isomorphic(&self, other: &FlagSystem) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let n = self.len();
        'cand: for start in 0..n as u32 {
            let mut map = vec![u32::MAX; n];
            let mut inv = vec![u32::MAX; n];
            map[0] = start;
            inv[start as usize] = 0;
            let mut stack = vec![0u32];
            while let Some(x) = stack.pop() {
                let y = map[x as usize];
                for (p, q) in [
                    (&self.a, &other.a),
                    (&self.b, &other.b),
                    (&self.c, &other.c),
                ] {
                    let x2 = p[x as usize];
                    let y2 = q[y as usize];
                    if map[x2 as usize] == u32::MAX {
                        if inv[y2 as usize] != u32::MAX {
                            continue 'cand;
                        }
                        map[x2 as usize] = y2;
                        inv[y2 as usize] = x2;
                        stack.push(x2);
                    } else if map[x2 as usize] != y2 {
                        continue 'cand;
                    }
                }
            }
            return true;
        }
        false
    }

    pub fn to_text(&self) -> String {
        let fmt_row = |name: &str, p: &[u32]| {
            let body = p
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            format!("{name}: {body}\n")
        };
        format!(
            "flags {}\n{}{}{}",
            self.len(),
            fmt_row("a", &self.a),
            fmt_row("b", &self.b),
            fmt_row("c", &self.c)
        )
    }

    pub fn from_text(text: &str, file: &str) -> Result<FlagSystem> {
        let err = |line: usize, msg: String| Error::Parse {
            file: file.to_string(),
            line,
            msg,
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (no, head) = lines.next().ok_or_else(|| err(1, "empty file".into()))?;
        let mut toks = head.split_whitespace();
        if toks.next() != Some("flags") {
            return Err(err(no, "expected `flags n` header".into()));
        }
        let n: usize = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err(no, "expected `flags n` header".into()))?;
        let mut rows: Vec<(char, Vec<u32>)> = Vec::new();
        for (no, line) in lines {
            let (name, rest) = line
                .split_once(':')
                .ok_or_else(|| err(no, "expected `a: ...`".into()))?;
            let name = name.trim();
            if !matches!(name, "a" | "b" | "c") {
                return Err(err(no, format!("unknown involution `{name}`")));
            }
            let mut row = Vec::with_capacity(n);
            for t in rest.split_whitespace() {
                row.push(
                    t.parse::<u32>()
                        .map_err(|_| err(no, format!("bad image `{t}`")))?,
                );
            }
            if row.len() != n {
                return Err(err(no, format!("expected {n} images, got {}", row.len())));
            }
            rows.push((name.chars().next().unwrap(), row));
        }
        let take = |ch: char, rows: &[(char, Vec<u32>)]| -> Result<Vec<u32>> {
            rows.iter()
                .find(|(c, _)| *c == ch)
                .map(|(_, r)| r.clone())
                .ok_or_else(|| err(0, format!("missing involution `{ch}`")))
        };
        FlagSystem::new(take('a', &rows)?, take('b', &rows)?, take('c', &rows)?)
    }
}

/// Census of a map: the v-, p-, z-vectors as (value, multiplicity) multisets,
/// Euler characteristic, and orientability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapCensus {
    pub flags: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub v_vector: Vec<(u32, u32)>,
    pub p_vector: Vec<(u32, u32)>,
    pub z_vector: Vec<(u32, u32)>,
    pub chi: i64,
    pub orientable: bool,
}

impl MapCensus {
    /// Genus for oriented maps, crosscap number otherwise.
    pub fn genus(&self) -> i64 {
        if self.orientable {
            (2 - self.chi) / 2
        } else {
            2 - self.chi
        }
    }

    /// Sum over i of i * v_i (and likewise for p and z): twice the edges.
    pub fn edge_identity_holds(&self) -> bool {
        let total = |v: &[(u32, u32)]| -> i64 {
            v.iter().map(|&(x, m)| x as i64 * m as i64).sum()
        };
        let e2 = 2 * self.edges as i64;
        total(&self.v_vector) == e2 && total(&self.p_vector) == e2 && total(&self.z_vector) == e2
    }
}

impl fmt::Display for MapCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_vec = |v: &[(u32, u32)]| {
            v.iter()
                .map(|&(x, m)| {
                    if m == 1 {
                        x.to_string()
                    } else if m < 10 {
                        format!("{x}^{m}")
                    } else {
                        format!("{x}^{{{m}}}")
                    }
                })
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(
            f,
            "flags {}  v {}  e {}  f {}",
            self.flags, self.vertices, self.edges, self.faces
        )?;
        writeln!(f, "v-vector: {}", fmt_vec(&self.v_vector))?;
        writeln!(f, "p-vector: {}", fmt_vec(&self.p_vector))?;
        writeln!(f, "z-vector: {}", fmt_vec(&self.z_vector))?;
        writeln!(f, "chi: {}", self.chi)?;
        writeln!(
            f,
            "{}: {}",
            if self.orientable { "genus" } else { "crosscap" },
            self.genus()
        )?;
        write!(f, "orientable: {}", self.orientable)
    }
}

/// Rotation-system view of an oriented map: darts with edge reversal and a
/// cyclic successor around each vertex.
struct RotationSystem {
    /// dart of each flag: the <c>-orbit id
    dart_of: Vec<u32>,
    /// one representative flag per dart, the one in the positive class
    positive_flag: Vec<u32>,
    alpha: Vec<u32>,
    sigma: Vec<u32>,
    sigma_inv: Vec<u32>,
    /// census vertex id of each dart
    vertex_of: Vec<u32>,
}

impl RotationSystem {
    fn from_flag_system(fs: &FlagSystem) -> Result<RotationSystem> {
        let n = fs.len();
        // orientation classes; the class of flag 0 is positive
        let mut class = vec![u8::MAX; n];
        class[0] = 0;
        let mut stack = vec![0u32];
        while let Some(f) = stack.pop() {
            for p in [&fs.a, &fs.b, &fs.c] {
                let g = p[f as usize];
                if class[g as usize] == u8::MAX {
                    class[g as usize] = 1 - class[f as usize];
                    stack.push(g);
                } else if class[g as usize] == class[f as usize] {
                    return Err(Error::NotOrientable);
                }
            }
        }
        // darts: orbits of <c>
        let mut dart_of = vec![u32::MAX; n];
        let mut positive_flag = Vec::new();
        for f in 0..n as u32 {
            if dart_of[f as usize] != u32::MAX {
                continue;
            }
            let g = fs.c[f as usize];
            let id = positive_flag.len() as u32;
            dart_of[f as usize] = id;
            dart_of[g as usize] = id;
            positive_flag.push(if class[f as usize] == 0 { f } else { g });
        }
        let nd = positive_flag.len();
        let mut alpha = vec![0u32; nd];
        let mut sigma = vec![0u32; nd];
        let mut sigma_inv = vec![0u32; nd];
        let (v_of, _) = fs.orbits(false, true, true);
        let mut vertex_of = vec![0u32; nd];
        for d in 0..nd {
            let fp = positive_flag[d];
            alpha[d] = dart_of[fs.a[fp as usize] as usize];
            sigma[d] = dart_of[fs.b[fp as usize] as usize];
            vertex_of[d] = v_of[fp as usize];
        }
        for d in 0..nd as u32 {
            sigma_inv[sigma[d as usize] as usize] = d;
        }
        Ok(RotationSystem {
            dart_of,
            positive_flag,
            alpha,
            sigma,
            sigma_inv,
            vertex_of,
        })
    }

    fn twist(mut self, vertices: &BTreeSet<u32>) -> RotationSystem {
        let nd = self.alpha.len();
        let mut new_sigma = self.sigma.clone();
        for d in 0..nd {
            if vertices.contains(&self.vertex_of[d]) {
                new_sigma[d] = self.sigma_inv[d];
            }
        }
        let mut new_inv = vec![0u32; nd];
        for d in 0..nd as u32 {
            new_inv[new_sigma[d as usize] as usize] = d;
        }
        self.sigma = new_sigma;
        self.sigma_inv = new_inv;
        self
    }

    /// flags = darts x {0,1}: a crosses the edge (flip side), c flips side,
    /// b rotates within the vertex by the side.
    fn to_flag_system(&self) -> FlagSystem {
        let nd = self.alpha.len();
        let n = 2 * nd;
        let id = |d: u32, s: u32| -> u32 { 2 * d + s };
        let mut a = vec![0u32; n];
        let mut b = vec![0u32; n];
        let mut c = vec![0u32; n];
        for d in 0..nd as u32 {
            for s in 0..2u32 {
                a[id(d, s) as usize] = id(self.alpha[d as usize], 1 - s);
                c[id(d, s) as usize] = id(d, 1 - s);
                b[id(d, s) as usize] = if s == 0 {
                    id(self.sigma[d as usize], 1)
                } else {
                    id(self.sigma_inv[d as usize], 0)
                };
            }
        }
        FlagSystem::new(a, b, c).expect("rotation system rebuild")
    }
}

/// Census z-vector of a complex computed through the flag-system route;
/// lengths only (flag systems carry no reverse-orbit pairing).
pub fn census_of_complex(k: &Complex) -> Result<MapCensus> {
    Ok(FlagSystem::from_complex(k)?.census())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn cube_fs() -> FlagSystem {
        FlagSystem::from_complex(&families::cube(3).unwrap()).unwrap()
    }

    #[test]
    fn cube_census() {
        let census = cube_fs().census();
        assert_eq!(census.flags, 48);
        assert_eq!(census.v_vector, vec![(3, 8)]);
        assert_eq!(census.p_vector, vec![(4, 6)]);
        assert_eq!(census.z_vector, vec![(6, 4)]);
        assert_eq!(census.chi, 2);
        assert!(census.orientable);
        assert!(census.edge_identity_holds());
    }

    #[test]
    fn involution_laws_after_lins_ops() {
        let fs = cube_fs();
        for op in LinsOp::ALL {
            let out = fs.lins(op);
            assert_eq!(out.len(), fs.len());
        }
    }

    #[test]
    fn dual_skew_phial_are_reflections() {
        let fs = FlagSystem::from_complex(&families::dodecahedron()).unwrap();
        for op in [LinsOp::Dual, LinsOp::Skew, LinsOp::Phial] {
            let twice = fs.lins(op).lins(op);
            assert_eq!(twice, fs);
        }
    }

    #[test]
    fn triality_group_is_sym3() {
        // skew . phial and phial . skew are the two 3-cycles; together with
        // the three reflections and the identity that is Sym(3)
        let fs = cube_fs();
        let sp = fs.lins(LinsOp::Phial).lins(LinsOp::Skew);
        let ps = fs.lins(LinsOp::Skew).lins(LinsOp::Phial);
        assert_ne!(sp, ps);
        assert_eq!(sp.lins(LinsOp::Skew), fs.lins(LinsOp::Phial));
        // six distinct relabelings on the cube
        let mut all = vec![fs.clone()];
        for op in LinsOp::ALL {
            all.push(fs.lins(op));
        }
        for i in 0..all.len() {
            for j in (i + 1)..all.len() {
                assert_ne!(all[i], all[j]);
            }
        }
    }

    #[test]
    fn skew_cube_is_toroidal() {
        let skewed = cube_fs().lins(LinsOp::Skew);
        let census = skewed.census();
        assert_eq!(census.chi, 0);
        assert!(census.orientable);
        assert_eq!(census.vertices, 8);
        assert_eq!(census.p_vector, vec![(6, 4)]);
    }

    #[test]
    fn phial_tetrahedron_is_projective() {
        let fs = FlagSystem::from_complex(&families::simplex(3).unwrap()).unwrap();
        let census = fs.lins(LinsOp::Phial).census();
        assert_eq!(census.chi, 1);
        assert!(!census.orientable);
    }

    #[test]
    fn petersen_zigzag_census() {
        let fs = FlagSystem::from_complex(&families::petersen()).unwrap();
        let census = fs.census();
        assert_eq!(census.z_vector, vec![(5, 6)]);
        assert!(!census.orientable);
        assert_eq!(census.chi, 1);
    }

    #[test]
    fn round_trip_to_complex() {
        let dode = families::dodecahedron();
        let fs = FlagSystem::from_complex(&dode).unwrap();
        let back = fs.to_complex().unwrap();
        assert!(crate::symmetry::is_isomorphic(&dode, &back));
    }

    #[test]
    fn text_round_trip() {
        let fs = cube_fs();
        let text = fs.to_text();
        let back = FlagSystem::from_text(&text, "t").unwrap();
        assert_eq!(fs, back);
    }

    #[test]
    fn empty_twist_is_isomorphic() {
        let fs = cube_fs();
        let twisted = fs.twist(&BTreeSet::new()).unwrap();
        assert!(fs.isomorphic(&twisted));
    }

    #[test]
    fn twist_rejects_non_orientable() {
        let fs = FlagSystem::from_complex(&families::petersen()).unwrap();
        assert!(fs.twist(&BTreeSet::new()).is_err());
    }

    #[test]
    fn twisting_one_part_of_the_cube_gives_skew() {
        let fs = cube_fs();
        let adj = fs.skeleton();
        // 2-color the skeleton
        let mut part = vec![u8::MAX; adj.len()];
        part[0] = 0;
        let mut stack = vec![0u32];
        while let Some(v) = stack.pop() {
            for &w in &adj[v as usize] {
                if part[w as usize] == u8::MAX {
                    part[w as usize] = 1 - part[v as usize];
                    stack.push(w);
                }
            }
        }
        let class0: BTreeSet<u32> = (0..adj.len() as u32)
            .filter(|&v| part[v as usize] == 0)
            .collect();
        let twisted = fs.twist(&class0).unwrap();
        assert!(twisted.isomorphic(&fs.lins(LinsOp::Skew)));
    }
}
