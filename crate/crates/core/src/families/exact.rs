//! Exact arithmetic over Z[sqrt5]/4 for vertex coordinates of the golden-ratio
//! polytopes, and icosian quaternions.
//!
//! Coordinates are stored as (a + b*sqrt5)/4 with integer a, b; inner products
//! and quaternion products are accumulated with denominator 16 and compared or
//! reduced exactly, so adjacency tests are bit-reproducible.

/// (a + b*sqrt5) / 4
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Q5 {
    pub a: i64,
    pub b: i64,
}

impl Q5 {
    pub const ZERO: Q5 = Q5 { a: 0, b: 0 };
    pub const ONE: Q5 = Q5 { a: 4, b: 0 };
    pub const HALF: Q5 = Q5 { a: 2, b: 0 };
    /// phi / 2
    pub const PHI_HALF: Q5 = Q5 { a: 1, b: 1 };
    /// 1 / (2 phi) = (sqrt5 - 1)/4
    pub const PHI_INV_HALF: Q5 = Q5 { a: -1, b: 1 };
    /// phi = (1 + sqrt5)/2
    pub const PHI: Q5 = Q5 { a: 2, b: 2 };

    pub fn neg(self) -> Q5 {
        Q5 {
            a: -self.a,
            b: -self.b,
        }
    }
}

/// Denominator-16 accumulator value.
pub type Den16 = (i64, i64);

#[inline]
fn mul16(u: Q5, v: Q5) -> Den16 {
    (u.a * v.a + 5 * u.b * v.b, u.a * v.b + u.b * v.a)
}

pub fn dot<const N: usize>(u: &[Q5; N], v: &[Q5; N]) -> Den16 {
    let mut acc = (0i64, 0i64);
    for i in 0..N {
        let (a, b) = mul16(u[i], v[i]);
        acc.0 += a;
        acc.1 += b;
    }
    acc
}

/// Quaternion with Q5 components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quat(pub [Q5; 4]);

impl Quat {
    pub fn conjugate(self) -> Quat {
        let [w, x, y, z] = self.0;
        Quat([w, x.neg(), y.neg(), z.neg()])
    }

    pub fn neg(self) -> Quat {
        let [w, x, y, z] = self.0;
        Quat([w.neg(), x.neg(), y.neg(), z.neg()])
    }

    pub fn mul(self, o: Quat) -> Quat {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        let comps: [Den16; 4] = [
            sub4(mul16(a, e), mul16(b, f), mul16(c, g), mul16(d, h)),
            add_quat(mul16(a, f), mul16(b, e), mul16(c, h), neg16(mul16(d, g))),
            add_quat(mul16(a, g), neg16(mul16(b, h)), mul16(c, e), mul16(d, f)),
            add_quat(mul16(a, h), mul16(b, g), neg16(mul16(c, f)), mul16(d, e)),
        ];
        let mut out = [Q5::ZERO; 4];
        for (i, (p, q)) in comps.iter().enumerate() {
            assert!(p % 4 == 0 && q % 4 == 0, "product left the icosian lattice");
            out[i] = Q5 { a: p / 4, b: q / 4 };
        }
        Quat(out)
    }
}

#[inline]
fn neg16(x: Den16) -> Den16 {
    (-x.0, -x.1)
}

#[inline]
fn sub4(w: Den16, x: Den16, y: Den16, z: Den16) -> Den16 {
    (w.0 - x.0 - y.0 - z.0, w.1 - x.1 - y.1 - z.1)
}

#[inline]
fn add_quat(w: Den16, x: Den16, y: Den16, z: Den16) -> Den16 {
    (w.0 + x.0 + y.0 + z.0, w.1 + x.1 + y.1 + z.1)
}

/// Even permutations of (0, 1, 2, 3).
pub fn even_permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(12);
    let mut perm = [0usize, 1, 2, 3];
    permute(&mut perm, 0, &mut out);
    out
}

fn permute(perm: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 4 {
        if parity_even(perm) {
            out.push(*perm);
        }
        return;
    }
    for i in k..4 {
        perm.swap(k, i);
        permute(perm, k + 1, out);
        perm.swap(k, i);
    }
}

fn parity_even(perm: &[usize; 4]) -> bool {
    let mut inv = 0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

/// The 120 unit icosians: 8 unit-axis quaternions, 16 half-integer ones, and
/// 96 with components from even permutations of (phi/2, 1/2, 1/(2phi), 0)
/// with free signs on the nonzero slots.
pub fn icosian_units() -> Vec<Quat> {
    let mut out = Vec::with_capacity(120);
    for i in 0..4 {
        for s in [Q5::ONE, Q5::ONE.neg()] {
            let mut c = [Q5::ZERO; 4];
            c[i] = s;
            out.push(Quat(c));
        }
    }
    for signs in 0..16u32 {
        let mut c = [Q5::ZERO; 4];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = if signs >> i & 1 == 0 {
                Q5::HALF
            } else {
                Q5::HALF.neg()
            };
        }
        out.push(Quat(c));
    }
    let pattern = [Q5::PHI_HALF, Q5::HALF, Q5::PHI_INV_HALF, Q5::ZERO];
    for perm in even_permutations4() {
        for signs in 0..8u32 {
            let mut c = [Q5::ZERO; 4];
            let mut bit = 0;
            for (slot, &src) in perm.iter().enumerate() {
                let v = pattern[src];
                if v == Q5::ZERO {
                    c[slot] = v;
                } else {
                    c[slot] = if signs >> bit & 1 == 0 { v } else { v.neg() };
                    bit += 1;
                }
            }
            out.push(Quat(c));
        }
    }
    debug_assert_eq!(out.len(), 120);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn icosians_are_distinct_units() {
        let units = icosian_units();
        let mut sorted = units.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 120);
        for q in &units {
            // |q|^2 = 1 -> (16, 0) at denominator 16
            assert_eq!(dot(&q.0, &q.0), (16, 0));
        }
    }

    #[test]
    fn icosians_closed_under_multiplication() {
        let units = icosian_units();
        let set: std::collections::BTreeSet<Quat> = units.iter().copied().collect();
        for a in units.iter().take(10) {
            for b in units.iter() {
                assert!(set.contains(&a.mul(*b)));
            }
        }
    }
}
