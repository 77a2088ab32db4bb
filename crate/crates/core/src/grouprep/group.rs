use std::collections::VecDeque;

use super::GroupError;

/// A finite group given by its full multiplication table.
///
/// Element indices are arbitrary; `words[g]` lists generator positions
/// whose ordered product is `g`, found by breadth-first search from the
/// identity so that `words[g] = words[parent[g]] ++ [gen]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    size: usize,
    mul: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
    generators: Vec<usize>,
    words: Vec<Vec<usize>>,
    /// `(parent, generator position)` with `g = parent · generators[pos]`;
    /// `None` for the identity.
    parent: Vec<Option<(usize, usize)>>,
    /// Elements in breadth-first order (identity first).
    bfs_order: Vec<usize>,
}

impl GroupData {
    /// Validates `table` as a group law and `generators` as a generating set.
    ///
    /// Associativity is checked exhaustively for groups of order at most 200.
    pub fn new(table: Vec<Vec<usize>>, generators: Vec<usize>) -> Result<Self, GroupError> {
        let size = table.len();
        if size == 0 {
            return Err(GroupError::InvalidTable(
                "empty multiplication table".into(),
            ));
        }
        let mut mul = Vec::with_capacity(size * size);
        for (i, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(GroupError::InvalidTable(format!(
                    "row {i} has length {}, expected {size}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= size) {
                return Err(GroupError::InvalidTable(format!(
                    "entry {bad} out of range in row {i}"
                )));
            }
            mul.extend_from_slice(row);
        }
        let at = |a: usize, b: usize| mul[a * size + b];
        let identity = (0..size)
            .find(|&e| (0..size).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| GroupError::InvalidTable("no identity element".into()))?;
        let inverse = (0..size)
            .map(|g| {
                (0..size)
                    .find(|&h| at(g, h) == identity && at(h, g) == identity)
                    .ok_or_else(|| GroupError::InvalidTable(format!("element {g} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if size <= 200 {
            for a in 0..size {
                for b in 0..size {
                    let ab = at(a, b);
                    for c in 0..size {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(GroupError::InvalidTable(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        if let Some(&bad) = generators.iter().find(|&&g| g >= size) {
            return Err(GroupError::InvalidTable(format!(
                "generator {bad} out of range"
            )));
        }

        let mut words = vec![Vec::new(); size];
        let mut parent = vec![None; size];
        let mut seen = vec![false; size];
        let mut bfs_order = Vec::with_capacity(size);
        let mut queue = VecDeque::from([identity]);
        seen[identity] = true;
        while let Some(h) = queue.pop_front() {
            bfs_order.push(h);
            for (pos, &s) in generators.iter().enumerate() {
                let g = at(h, s);
                if !seen[g] {
                    seen[g] = true;
                    let mut w = words[h].clone();
                    w.push(pos);
                    words[g] = w;
                    parent[g] = Some((h, pos));
                    queue.push_back(g);
                }
            }
        }
        if bfs_order.len() != size {
            return Err(GroupError::NotGenerated {
                reached: bfs_order.len(),
                size,
            });
        }
        Ok(GroupData {
            size,
            mul,
            inverse,
            identity,
            generators,
            words,
            parent,
            bfs_order,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn word(&self, g: usize) -> &[usize] {
        &self.words[g]
    }

    pub fn parent(&self, g: usize) -> Option<(usize, usize)> {
        self.parent[g]
    }

    /// Elements ordered so that every element's parent precedes it.
    pub fn bfs_order(&self) -> &[usize] {
        &self.bfs_order
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.size).all(|g| self.mul(z, g) == self.mul(g, z))
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut acc = g;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    /// The dihedral group of order `2n`, element `a^k b^e` stored at index
    /// `k + n·e`, generated by `a` (index 1) and `b` (index `n`).
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n < 2 {
            return Err(GroupError::InvalidTable(format!(
                "dihedral group needs n >= 2, got {n}"
            )));
        }
        let table = (0..2 * n)
            .map(|x| {
                let (k1, e1) = (x % n, x / n);
                (0..2 * n)
                    .map(|y| {
                        let (k2, e2) = (y % n, y / n);
                        let k = if e1 == 0 { k1 + k2 } else { k1 + n - k2 } % n;
                        k + n * (e1 ^ e2)
                    })
                    .collect()
            })
            .collect();
        GroupData::new(table, vec![1, n])
    }

    /// The cyclic group of order `n` generated by index 1 (`g^k` at index `k`).
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        GroupData::new(table, vec![1 % n.max(1)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_relations() {
        let n = 6;
        let g = GroupData::dihedral(n).unwrap();
        let (a, b) = (1, n);
        assert_eq!(g.size(), 12);
        assert_eq!(g.power(a, n), g.identity());
        assert_eq!(g.power(b, 2), g.identity());
        assert_eq!(g.power(g.mul(b, a), 2), g.identity());
        assert!(g.is_central(g.power(a, 3)));
        assert!(!g.is_central(a));
        for x in 0..g.size() {
            let w = g.word(x);
            let prod = w
                .iter()
                .fold(g.identity(), |acc, &p| g.mul(acc, g.generators()[p]));
            assert_eq!(prod, x);
        }
    }

    #[test]
    fn rejects_bad_tables() {
        // Not associative: a "group" on {0,1,2} with a twisted row.
        let t = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
        assert!(GroupData::new(t, vec![1, 2]).is_err());
        let c4 = GroupData::cyclic(4).unwrap();
        assert_eq!(c4.element_order(1), 4);
        let table: Vec<Vec<usize>> = (0..4)
            .map(|i| (0..4).map(|j| (i + j) % 4).collect())
            .collect();
        assert!(matches!(
            GroupData::new(table, vec![2]),
            Err(GroupError::NotGenerated {
                reached: 2,
                size: 4
            })
        ));
    }
}
