//! Finite groups given by multiplication tables.

use serde::Serialize;

use crate::error::{Error, Result};

/// `table[g][h] = g·h` on elements `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupTable {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupTable {
    /// Validates the group axioms, naming the first one that fails.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let g = GroupTable { names, table };
        g.validate()?;
        Ok(g)
    }

    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| format!("r{i}")).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable { names, table }
    }

    /// Permutations of three points, composed right to left.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [2, 1, 0], [0, 2, 1]];
        let names = ["e", "r", "rr", "s01", "s02", "s12"].iter().map(|s| s.to_string()).collect();
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        GroupTable { names, table }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        (0..self.order())
            .find(|&e| (0..self.order()).all(|g| self.table[e][g] == g && self.table[g][e] == g))
            .expect("validated group has an identity")
    }

    pub fn inverse(&self, g: usize) -> usize {
        let e = self.identity();
        (0..self.order())
            .find(|&h| self.table[g][h] == e)
            .expect("validated group has inverses")
    }

    /// Parity of left multiplication by `g`, as ±1.
    pub fn sign(&self, g: usize) -> i64 {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.table[g][x];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.table.len();
        if n == 0 {
            return Err(Error::validation("nonempty", "a group has at least one element"));
        }
        if self.names.len() != n {
            return Err(Error::validation("shape", format!("{} names for {n} rows", self.names.len())));
        }
        for (a, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::validation("shape", format!("row {a} has {} entries, expected {n}", row.len())));
            }
            if let Some(b) = row.iter().position(|&c| c >= n) {
                return Err(Error::validation(
                    "closure",
                    format!("{}·{} is outside the group", self.names[a], self.names[b]),
                ));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| self.table[e][g] == g && self.table[g][e] == g))
            .ok_or_else(|| Error::validation("identity", "no two-sided identity element"))?;
        for g in 0..n {
            if !(0..n).any(|h| self.table[g][h] == e && self.table[h][g] == e) {
                return Err(Error::validation("inverses", format!("{} has no inverse", self.names[g])));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let l = self.table[self.table[a][b]][c];
                    let r = self.table[a][self.table[b][c]];
                    if l != r {
                        return Err(Error::validation(
                            "associativity",
                            format!(
                                "({}·{})·{} ≠ {}·({}·{})",
                                self.names[a], self.names[b], self.names[c], self.names[a], self.names[b], self.names[c]
                            ),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_groups_are_groups() {
        GroupTable::cyclic(2).validate().unwrap();
        GroupTable::cyclic(5).validate().unwrap();
        GroupTable::symmetric3().validate().unwrap();
    }

    #[test]
    fn s3_signs_and_inverses() {
        let g = GroupTable::symmetric3();
        let signs: Vec<i64> = (0..6).map(|x| g.sign(x)).collect();
        assert_eq!(signs, vec![1, 1, 1, -1, -1, -1]);
        assert_eq!(g.inverse(1), 2);
        assert_eq!(g.inverse(3), 3);
        assert_eq!(g.identity(), 0);
        assert_eq!(GroupTable::cyclic(2).sign(1), -1);
    }

    #[test]
    fn missing_inverse_is_named() {
        // a monoid {e, z} with z·z = z
        let bad = GroupTable {
            names: vec!["e".into(), "z".into()],
            table: vec![vec![0, 1], vec![1, 1]],
        };
        let err = bad.validate().unwrap_err().to_string();
        assert!(err.contains("inverses"), "{err}");
    }
}
