/// Union-find over dense indices.
pub struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    pub fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = x;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // attach the larger root id under the smaller so representatives
            // are the minimal member of each class
            if ra < rb {
                self.parent[rb as usize] = ra;
            } else {
                self.parent[ra as usize] = rb;
            }
        }
    }

    /// Number of classes.
    pub fn class_count(&mut self) -> usize {
        (0..self.parent.len() as u32)
            .filter(|&i| self.find(i) == i)
            .count()
    }

    /// Map every index to a dense class id, classes numbered by first appearance.
    pub fn class_ids(&mut self) -> (Vec<u32>, usize) {
        let n = self.parent.len();
        let mut ids = vec![u32::MAX; n];
        let mut next = 0u32;
        let mut out = vec![0u32; n];
        for i in 0..n as u32 {
            let r = self.find(i);
            if ids[r as usize] == u32::MAX {
                ids[r as usize] = next;
                next += 1;
            }
            out[i as usize] = ids[r as usize];
        }
        (out, next as usize)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
