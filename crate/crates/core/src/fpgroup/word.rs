use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A freely reduced word over signed generators.
///
/// Letters are 1-based signed indices: `k` is generator `k-1` and `-k` its
/// inverse. Construction always reduces, so no letter is followed by its
/// inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Generator `g` (0-based) raised to `exp`.
    pub fn gen_pow(g: usize, exp: i64) -> Self {
        let letter = g as i32 + 1;
        let l = if exp < 0 { -letter } else { letter };
        Word(vec![l; exp.unsigned_abs() as usize])
    }

    pub fn gen(g: usize) -> Self {
        Word::gen_pow(g, 1)
    }

    pub fn from_letters<I: IntoIterator<Item = i32>>(letters: I) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "letter 0 is not a generator");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Builds a word from `(generator, exponent)` syllables.
    pub fn from_syllables(syl: &[(usize, i64)]) -> Self {
        Word::from_letters(syl.iter().flat_map(|&(g, e)| Word::gen_pow(g, e).0))
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index referenced, plus one.
    pub fn max_gen(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn mul(&self, o: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(o.0.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::empty(), |acc, _| acc.mul(&base))
    }

    /// `w · self · w⁻¹`.
    pub fn conjugate_by(&self, w: &Word) -> Word {
        w.mul(self).mul(&w.inverse())
    }

    /// Removes cancelling pairs across the ends.
    pub fn cyclically_reduced(&self) -> Word {
        let v = &self.0;
        let (mut i, mut j) = (0, v.len());
        while j - i >= 2 && v[i] == -v[j - 1] {
            i += 1;
            j -= 1;
        }
        Word(v[i..j].to_vec())
    }

    /// Exponent sum of each of `ngens` generators.
    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut sums = vec![0; ngens];
        for &l in &self.0 {
            sums[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        sums
    }

    /// Replaces every generator by a word. `images[g]` is the image of generator `g`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        Word::from_letters(self.0.iter().flat_map(|&l| {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 { img.clone() } else { img.inverse() }.0
        }))
    }

    /// Shifts every generator index by `offset`.
    pub fn shifted(&self, offset: usize) -> Word {
        Word(self.0.iter().map(|&l| l.signum() * (l.abs() + offset as i32)).collect())
    }

    /// Folds the word through a group: `mul(acc, image)` left to right.
    pub fn evaluate<T, F>(&self, images: &[T], inverses: &[T], identity: T, mut mul: F) -> T
    where
        T: Clone,
        F: FnMut(&T, &T) -> T,
    {
        self.0.iter().fold(identity, |acc, &l| {
            let g = l.unsigned_abs() as usize - 1;
            mul(&acc, if l > 0 { &images[g] } else { &inverses[g] })
        })
    }

    /// Canonical representative of the cyclic word up to rotation and inversion.
    pub fn cyclic_canonical(&self) -> Word {
        let w = self.cyclically_reduced();
        if w.is_empty() {
            return w;
        }
        let rotations = |v: &Vec<i32>| -> Vec<Vec<i32>> {
            (0..v.len()).map(|i| v[i..].iter().chain(v[..i].iter()).copied().collect()).collect()
        };
        let inv = w.inverse();
        rotations(&w.0).into_iter().chain(rotations(&inv.0)).min().map(Word).unwrap_or_default()
    }

    /// Renders with generator names, collapsing runs into powers.
    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            let run = (j - i) as i64 * l.signum() as i64;
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(&names[l.unsigned_abs() as usize - 1]);
            if run != 1 {
                let _ = write!(out, "^{run}");
            }
            i = j;
        }
        out
    }
}

/// Reduces a raw sequence of `(generator name, ±1)` symbols against `gens`.
pub fn free_reduce(symbols: &[(&str, i32)], gens: &[String]) -> Result<Word> {
    let letters = symbols
        .iter()
        .map(|&(name, sign)| {
            let g = gens
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            Ok(if sign < 0 { -(g as i32 + 1) } else { g as i32 + 1 })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Word::from_letters(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["a".into(), "b".into()]
    }

    #[test]
    fn cancels_adjacent_inverse() {
        let w = free_reduce(&[("a", 1), ("a", -1), ("b", 1)], &names()).unwrap();
        assert_eq!(w, Word::gen(1));
    }

    #[test]
    fn keeps_non_cancelling_square() {
        let ab = Word::from_letters([1, 2]);
        assert_eq!(ab.pow(2).letters(), &[1, 2, 1, 2]);
    }

    #[test]
    fn collapses_to_empty() {
        let w = free_reduce(&[("b", 1), ("a", -1), ("a", 1), ("b", -1)], &names()).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn unknown_symbol_is_an_error() {
        assert_eq!(free_reduce(&[("c", 1)], &names()), Err(Error::UnknownGenerator("c".into())));
    }

    #[test]
    fn render_runs() {
        let w = Word::from_syllables(&[(0, 6), (1, -2), (0, 1)]);
        assert_eq!(w.render(&names()), "a^6 b^-2 a");
        assert_eq!(Word::empty().render(&names()), "1");
    }

    #[test]
    fn cyclic_reduction_and_canonical_form() {
        let w = Word::from_letters([-2, 1, 1, 2]);
        assert_eq!(w.cyclically_reduced(), Word::from_letters([1, 1]));
        let x = Word::from_letters([1, 2, 3]);
        let y = Word::from_letters([3, 1, 2]);
        assert_eq!(x.cyclic_canonical(), y.cyclic_canonical());
        assert_eq!(x.cyclic_canonical(), x.inverse().cyclic_canonical());
    }

    #[test]
    fn substitution() {
        // a -> b a, b -> 1
        let images = vec![Word::from_letters([2, 1]), Word::empty()];
        assert_eq!(Word::from_letters([1, 2, 1]).substitute(&images), Word::from_letters([2, 1, 2, 1]));
        assert!(Word::from_letters([1, 2, -1]).substitute(&images).is_empty());
    }
}
