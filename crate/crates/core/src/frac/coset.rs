use crate::frac::presentation::GroupPresentation;
use crate::frac::word::{Letter, Word};

/// Default row budget for coset enumeration.
pub const DEFAULT_COSET_ROWS: usize = 100_000;

const UNDEF: usize = usize::MAX;

/// A closed coset table over the trivial subgroup, i.e. the regular
/// representation of a finite group. Row 0 is the identity coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    /// Symbol index of each generator; column `2k` is generator `k`,
    /// column `2k + 1` its inverse.
    gens: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    fn column(&self, l: Letter) -> Option<usize> {
        let k = self.gens.iter().position(|&g| g == l.gen)?;
        Some(2 * k + usize::from(l.inv))
    }

    /// The coset reached from the identity by reading `w` left to right.
    /// `None` if `w` mentions a symbol that is not a generator.
    pub fn trace(&self, w: &Word) -> Option<usize> {
        let mut c = 0;
        for &l in w.letters() {
            c = self.rows[c][self.column(l)?];
        }
        Some(c)
    }
}

struct Enumeration {
    cols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    max_rows: usize,
}

struct OutOfRows;

fn inv_col(x: usize) -> usize {
    x ^ 1
}

impl Enumeration {
    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = c;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize, OutOfRows> {
        if self.table.len() >= self.max_rows {
            return Err(OutOfRows);
        }
        let n = self.table.len();
        self.table.push(vec![UNDEF; self.cols]);
        self.parent.push(n);
        self.table[c][x] = n;
        self.table[n][inv_col(x)] = c;
        Ok(n)
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut Vec<usize>) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (keep, kill) = (k.min(l), k.max(l));
        self.parent[kill] = keep;
        queue.push(kill);
    }

    fn coincidence(&mut self, k: usize, l: usize) {
        let mut queue = Vec::new();
        self.merge(k, l, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.table[e][x];
                if f == UNDEF {
                    continue;
                }
                self.table[f][inv_col(x)] = UNDEF;
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.table[e1][x] != UNDEF {
                    let t = self.table[e1][x];
                    self.merge(f1, t, &mut queue);
                } else if self.table[f1][inv_col(x)] != UNDEF {
                    let t = self.table[f1][inv_col(x)];
                    self.merge(e1, t, &mut queue);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][inv_col(x)] = e1;
                }
            }
        }
    }

    /// Scans relator `w` at coset `a`, defining new cosets until the scan
    /// completes.
    fn scan_and_fill(&mut self, a: usize, w: &[usize]) -> Result<(), OutOfRows> {
        let (mut f, mut b) = (a, a);
        let (mut i, mut j) = (0, w.len());
        loop {
            while i < j && self.table[f][w[i]] != UNDEF {
                f = self.table[f][w[i]];
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.table[b][inv_col(w[j - 1])] != UNDEF {
                b = self.table[b][inv_col(w[j - 1])];
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.table[f][w[i]] = b;
                self.table[b][inv_col(w[i])] = f;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// Todd–Coxeter enumeration of the cosets of the trivial subgroup, HLT
/// strategy: each live coset in order has every relator scanned and its
/// row completed. `None` when more than `max_rows` rows would be needed.
pub fn coset_enumerate(p: &GroupPresentation, max_rows: usize) -> Option<CosetTable> {
    if max_rows == 0 {
        return None;
    }
    let gens = p.generators().to_vec();
    let col = |l: &Letter| -> usize {
        let k = gens.iter().position(|&g| g == l.gen).expect("relator over generators");
        2 * k + usize::from(l.inv)
    };
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| r.letters().iter().map(col).collect())
        .collect();
    let cols = 2 * gens.len();
    let mut e = Enumeration {
        cols,
        table: vec![vec![UNDEF; cols]],
        parent: vec![0],
        max_rows,
    };
    let mut a = 0;
    while a < e.table.len() {
        if e.live(a) {
            for r in &relators {
                if e.scan_and_fill(a, r).is_err() {
                    return None;
                }
                if !e.live(a) {
                    break;
                }
            }
            for x in 0..cols {
                if !e.live(a) {
                    break;
                }
                if e.table[a][x] == UNDEF && e.define(a, x).is_err() {
                    return None;
                }
            }
        }
        a += 1;
    }
    // compact: live rows renumbered in order, row 0 stays first
    let live: Vec<usize> = (0..e.table.len()).filter(|&c| e.live(c)).collect();
    let mut index = vec![UNDEF; e.table.len()];
    for (k, &c) in live.iter().enumerate() {
        index[c] = k;
    }
    let mut rows = Vec::with_capacity(live.len());
    for &c in &live {
        let row: Vec<usize> = e.table[c].clone();
        rows.push(row.into_iter().map(|t| index[e.rep(t)]).collect::<Vec<usize>>());
    }
    Some(CosetTable { gens, rows })
}
