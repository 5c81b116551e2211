use std::fmt;

/// A signed generator. `gen` indexes the symbol table of the owning
/// presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Self { gen, inv: false }
    }

    pub fn neg(gen: usize) -> Self {
        Self { gen, inv: true }
    }

    pub fn inverse(self) -> Self {
        Self {
            gen: self.gen,
            inv: !self.inv,
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

/// A group word in multiplication order: `[a, b]` denotes `a·b`, so `b` is
/// applied first when read as a composite of morphisms. Always freely
/// reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Self(Vec::new());
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn generator(gen: usize) -> Self {
        Self(vec![Letter::pos(gen)])
    }

    /// From `(generator, exponent)` pairs, exponents of any sign.
    pub fn from_powers(powers: &[(usize, i64)]) -> Self {
        let mut w = Self::identity();
        for &(g, e) in powers {
            let letter = if e < 0 { Letter::neg(g) } else { Letter::pos(g) };
            for _ in 0..e.unsigned_abs() {
                w.push(letter);
            }
        }
        w
    }

    fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn mul(&self, other: &Word) -> Self {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn contains(&self, gen: usize) -> bool {
        self.0.iter().any(|l| l.gen == gen)
    }

    pub fn occurrences(&self, gen: usize) -> usize {
        self.0.iter().filter(|l| l.gen == gen).count()
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.0.iter().filter(|l| l.gen == gen).map(|l| l.exponent()).sum()
    }

    /// Conjugates away matching first and last letters.
    pub fn cyclically_reduced(&self) -> Self {
        let mut s = 0;
        let mut e = self.0.len();
        while e - s >= 2 && self.0[s] == self.0[e - 1].inverse() {
            s += 1;
            e -= 1;
        }
        Self(self.0[s..e].to_vec())
    }

    /// Cyclic rotation starting at letter `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut letters = self.0[k..].to_vec();
        letters.extend_from_slice(&self.0[..k]);
        Self::new(letters)
    }

    /// Replaces every occurrence of `gen` by `image` (and its inverse by the
    /// inverse of `image`).
    pub fn substitute(&self, gen: usize, image: &Word) -> Self {
        let inverse = image.inverse();
        let mut w = Self::identity();
        for &l in &self.0 {
            if l.gen == gen {
                let piece = if l.inv { &inverse } else { image };
                for &p in &piece.0 {
                    w.push(p);
                }
            } else {
                w.push(l);
            }
        }
        w
    }

    /// Inserts `piece` before position `at` and reduces.
    pub fn insert(&self, at: usize, piece: &Word) -> Self {
        let mut letters = self.0[..at].to_vec();
        letters.extend_from_slice(&piece.0);
        letters.extend_from_slice(&self.0[at..]);
        Self::new(letters)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|l| {
                if l.inv {
                    format!("{}^-1", names[l.gen])
                } else {
                    names[l.gen].clone()
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| {
                if l.inv {
                    format!("g{}^-1", l.gen)
                } else {
                    format!("g{}", l.gen)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// All freely reduced words of length at most `radius` over generators
/// `gens`, in shortlex order (length first, then letter order).
pub fn reduced_words(gens: &[usize], radius: usize) -> Vec<Word> {
    let mut letters: Vec<Letter> = Vec::with_capacity(2 * gens.len());
    for &g in gens {
        letters.push(Letter::pos(g));
        letters.push(Letter::neg(g));
    }
    let mut out = vec![Word::identity()];
    let mut frontier = vec![Word::identity()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.0.last() == Some(&l.inverse()) {
                    continue;
                }
                let mut v = w.clone();
                v.0.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_inverse() {
        let w = Word::new([Letter::pos(0), Letter::pos(1), Letter::neg(1)]);
        assert_eq!(w, Word::generator(0));
        let u = Word::from_powers(&[(0, 2), (1, -1)]);
        assert!(u.mul(&u.inverse()).is_empty());
        assert_eq!(u.exponent_sum(0), 2);
    }

    #[test]
    fn cyclic_reduction() {
        let w = Word::from_powers(&[(1, 1), (0, 1), (1, -1)]);
        assert_eq!(w.cyclically_reduced(), Word::generator(0));
    }

    #[test]
    fn substitution() {
        let w = Word::from_powers(&[(0, 1), (1, -1)]);
        let image = Word::from_powers(&[(2, 1), (0, 1)]);
        // a b^-1 with b := c a  gives  a a^-1 c^-1 = c^-1
        assert_eq!(w.substitute(1, &image), Word::from_powers(&[(2, -1)]));
    }

    #[test]
    fn ball_sizes() {
        // free group of rank k: 1 + 2k((2k-1)^r - 1)/(2k-2) words
        assert_eq!(reduced_words(&[0], 3).len(), 7);
        assert_eq!(reduced_words(&[0, 1], 1).len(), 5);
        assert_eq!(reduced_words(&[0, 1], 2).len(), 17);
        assert_eq!(reduced_words(&[], 4).len(), 1);
    }
}
