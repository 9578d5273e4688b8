//! HLT coset enumeration with union-find coincidence handling.

use crate::error::{Error, Result};
use crate::fpgroup::{Presentation, Word};

use super::table::CosetTable;

const UNDEF: usize = usize::MAX;

/// Column of a letter: `2g` for generator `g`, `2g+1` for its inverse.
pub(crate) fn column(letter: i32) -> usize {
    let g = letter.unsigned_abs() as usize - 1;
    if letter > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

fn inv(col: usize) -> usize {
    col ^ 1
}

struct Enumerator {
    ncols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    live: usize,
    max: usize,
    queue: Vec<usize>,
}

impl Enumerator {
    fn new(ncols: usize, max: usize) -> Self {
        Enumerator { ncols, table: vec![vec![UNDEF; ncols]], parent: vec![0], live: 1, max, queue: Vec::new() }
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        if self.live >= self.max {
            return Err(Error::ResourceLimit { max: self.max });
        }
        let d = self.table.len();
        self.table.push(vec![UNDEF; self.ncols]);
        self.parent.push(d);
        self.live += 1;
        self.table[c][x] = d;
        self.table[d][inv(x)] = c;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut k = c;
        while self.parent[k] != r {
            let next = self.parent[k];
            self.parent[k] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill] = keep;
        self.live -= 1;
        self.queue.push(kill);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let f = self.table[e][x];
                if f == UNDEF {
                    continue;
                }
                self.table[f][inv(x)] = UNDEF;
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                if self.table[e1][x] != UNDEF {
                    let t = self.table[e1][x];
                    self.merge(f1, t);
                } else if self.table[f1][inv(x)] != UNDEF {
                    let t = self.table[f1][inv(x)];
                    self.merge(e1, t);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][inv(x)] = e1;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() - 1);
        loop {
            while i <= j && self.table[f][w[i]] != UNDEF {
                f = self.table[f][w[i]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][inv(w[j])] != UNDEF {
                b = self.table[b][inv(w[j])];
                if j == 0 {
                    self.coincidence(f, b);
                    return Ok(());
                }
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.table[f][w[i]] = b;
                self.table[b][inv(w[i])] = f;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    /// Renumbers live cosets in BFS order from coset 0, scanning columns in order.
    fn standardize(&mut self) -> Vec<Vec<usize>> {
        let mut order = vec![0usize];
        let mut newnum = vec![UNDEF; self.table.len()];
        newnum[0] = 0;
        let mut k = 0;
        while k < order.len() {
            let c = order[k];
            k += 1;
            for x in 0..self.ncols {
                let d = self.table[c][x];
                if newnum[d] == UNDEF {
                    newnum[d] = order.len();
                    order.push(d);
                }
            }
        }
        order.iter().map(|&c| self.table[c].iter().map(|&d| newnum[d]).collect()).collect()
    }
}

/// Enumerates the cosets of `⟨sub⟩` in `p`.
///
/// `max_cosets` bounds the number of simultaneously live cosets.
pub fn todd_coxeter(p: &Presentation, sub: &[Word], max_cosets: usize) -> Result<CosetTable> {
    for w in sub {
        if w.max_gen() > p.num_generators() {
            return Err(Error::InvalidPresentation("subgroup word references an undeclared generator".into()));
        }
    }
    let ncols = 2 * p.num_generators();
    let cols = |w: &Word| -> Vec<usize> { w.letters().iter().map(|&l| column(l)).collect() };
    let rels: Vec<Vec<usize>> = p.relators().iter().map(cols).collect();
    let subs: Vec<Vec<usize>> = sub.iter().map(cols).collect();

    let mut e = Enumerator::new(ncols, max_cosets.max(1));
    for w in &subs {
        e.scan_and_fill(0, w)?;
    }
    let mut c = 0;
    while c < e.table.len() {
        for r in &rels {
            if !e.is_live(c) {
                break;
            }
            e.scan_and_fill(c, r)?;
        }
        if e.is_live(c) {
            for x in 0..ncols {
                if e.table[c][x] == UNDEF {
                    e.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    let table = e.standardize();
    let t = CosetTable::from_parts(p.clone(), sub.to_vec(), table);
    t.verify()?;
    Ok(t)
}
