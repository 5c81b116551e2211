//! Finite groups given by multiplication tables.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates distinct names, closure, identity, inverses and
    /// associativity.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidGroup("a group needs an identity".into()));
        }
        if let Some(dup) = names.iter().enumerate().find(|(i, a)| names[..*i].contains(a)) {
            return Err(Error::DuplicateName(dup.1.clone()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&c| c >= n))
        {
            return Err(Error::InvalidGroup("table is not square over the elements".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("{} has no inverse", names[g])))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup("multiplication is not associative".into()));
                    }
                }
            }
        }
        Ok(Self {
            names,
            table,
            identity,
            inverses,
        })
    }

    /// ℤ/n with elements named `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let names = (0..n).map(|k| k.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(names, table).expect("cyclic group table is valid")
    }

    /// The symmetric group on three letters, generated by `s = (0 1)` and
    /// `r = (0 1 2)`.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [1, 2, 0],
            [2, 0, 1],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
        ];
        Self::from_permutations(
            &["1", "r", "r2", "s", "sr", "rs"],
            &perms.iter().map(|p| p.to_vec()).collect::<Vec<_>>(),
        )
    }

    /// ℤ/2 × ℤ/2.
    pub fn klein() -> Self {
        let names = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
        let table = (0..4).map(|x: usize| (0..4).map(|y: usize| x ^ y).collect()).collect();
        Self::new(names, table).expect("klein table is valid")
    }

    /// The group of the given permutations, which must be closed under
    /// composition; `(a·b)(i) = a(b(i))`.
    pub fn from_permutations<S: AsRef<str>>(names: &[S], perms: &[Vec<usize>]) -> Self {
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index(&b.iter().map(|&i| a[i]).collect()))
                    .collect()
            })
            .collect();
        Self::new(names.iter().map(|s| s.as_ref().to_string()).collect(), table)
            .expect("permutation group table is valid")
    }

    pub fn with_names<S: AsRef<str>>(mut self, names: &[S]) -> Self {
        assert_eq!(names.len(), self.names.len());
        self.names = names.iter().map(|s| s.as_ref().to_string()).collect();
        self
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Elements in the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![self.identity];
        seen[self.identity] = true;
        while let Some(g) = stack.pop() {
            for &s in gens {
                let h = self.mul(g, s);
                if !seen[h] {
                    seen[h] = true;
                    stack.push(h);
                }
            }
        }
        (0..self.order()).filter(|&g| seen[g]).collect()
    }
}
