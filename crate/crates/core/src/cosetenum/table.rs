use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::fpgroup::{Presentation, Word};

use super::enumerate::column;

/// A coset table for `⟨subgroup_words⟩` in `parent`.
///
/// Cosets are numbered from 0; coset 0 is the subgroup itself. Column `2g`
/// holds the action of generator `g`, column `2g+1` that of its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    parent: Presentation,
    subgroup_words: Vec<Word>,
    table: Vec<Vec<usize>>,
    complete: bool,
}

impl CosetTable {
    pub(crate) fn from_parts(parent: Presentation, subgroup_words: Vec<Word>, table: Vec<Vec<usize>>) -> Self {
        let n = table.len();
        let complete = table.iter().all(|row| row.iter().all(|&d| d < n));
        CosetTable { parent, subgroup_words, table, complete }
    }

    pub fn parent(&self) -> &Presentation {
        &self.parent
    }

    pub fn subgroup_words(&self) -> &[Word] {
        &self.subgroup_words
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Number of cosets.
    pub fn index(&self) -> usize {
        self.table.len()
    }

    /// Image of `coset` under one signed letter.
    pub fn act(&self, coset: usize, letter: i32) -> usize {
        self.table[coset][column(letter)]
    }

    /// Image of `start` under the right action of `w`.
    pub fn trace(&self, w: &Word, start: usize) -> Result<usize> {
        if !self.complete {
            return Err(Error::IncompleteTable);
        }
        if start >= self.index() {
            return Err(Error::InvalidArgument(format!("coset {start} out of range")));
        }
        if w.max_gen() > self.parent.num_generators() {
            return Err(Error::InvalidArgument("word references an undeclared generator".into()));
        }
        Ok(w.letters().iter().fold(start, |c, &l| self.act(c, l)))
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        Ok(self.trace(w, 0)? == 0)
    }

    /// Permutation induced by generator `g`.
    pub fn permutation(&self, g: usize) -> Vec<usize> {
        self.table.iter().map(|row| row[2 * g]).collect()
    }

    /// Checks the four table invariants.
    pub fn verify(&self) -> Result<()> {
        if !self.complete {
            return Err(Error::IncompleteTable);
        }
        let n = self.index();
        for g in 0..self.parent.num_generators() {
            let mut seen = vec![false; n];
            for c in 0..n {
                let d = self.table[c][2 * g];
                if seen[d] || self.table[d][2 * g + 1] != c {
                    return Err(Error::Invariant(format!("generator {g} does not act as a permutation")));
                }
                seen[d] = true;
            }
        }
        for w in &self.subgroup_words {
            if self.trace(w, 0)? != 0 {
                return Err(Error::Invariant("a subgroup word moves coset 0".into()));
            }
        }
        for r in self.parent.relators() {
            for c in 0..n {
                if self.trace(r, c)? != c {
                    return Err(Error::Invariant(format!("relator moves coset {c}")));
                }
            }
        }
        Ok(())
    }

    /// Minimal-length coset representatives from a BFS over generators
    /// `g0, g0⁻¹, g1, …`.
    pub fn transversal(&self) -> Result<Vec<Word>> {
        if !self.complete {
            return Err(Error::IncompleteTable);
        }
        let n = self.index();
        let mut reps: Vec<Option<Word>> = vec![None; n];
        reps[0] = Some(Word::empty());
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            let rc = reps[c].clone().unwrap_or_default();
            for g in 0..self.parent.num_generators() {
                for letter in [g as i32 + 1, -(g as i32 + 1)] {
                    let d = self.act(c, letter);
                    if reps[d].is_none() {
                        reps[d] = Some(rc.mul(&Word::from_letters([letter])));
                        queue.push_back(d);
                    }
                }
            }
        }
        reps.into_iter().map(|r| r.ok_or(Error::Invariant("unreachable coset".into()))).collect()
    }
}
