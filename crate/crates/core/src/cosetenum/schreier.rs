use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::fpgroup::{Presentation, Word};

use super::table::CosetTable;

/// Schreier generators `s(c, g) = rep(c)·g·rep(c·g)⁻¹` with their labels.
struct SchreierData {
    /// `label[c][g]` is the index into `words`, or `None` for a trivial generator.
    label: Vec<Vec<Option<usize>>>,
    words: Vec<Word>,
    names: Vec<String>,
}

fn schreier_data(t: &CosetTable) -> Result<SchreierData> {
    let reps = t.transversal()?;
    let ngens = t.parent().num_generators();
    let mut label = vec![vec![None; ngens]; t.index()];
    let mut words = Vec::new();
    let mut names = Vec::new();
    for (c, rep) in reps.iter().enumerate() {
        for g in 0..ngens {
            let d = t.act(c, g as i32 + 1);
            let w = rep.mul(&Word::gen(g)).mul(&reps[d].inverse());
            if !w.is_empty() {
                label[c][g] = Some(words.len());
                words.push(w);
                names.push(format!("{}_{}", t.parent().generators()[g], c));
            }
        }
    }
    Ok(SchreierData { label, words, names })
}

/// Nontrivial Schreier generators, ordered by coset then generator.
pub fn schreier_generators(t: &CosetTable) -> Result<Vec<Word>> {
    Ok(schreier_data(t)?.words)
}

fn rewrite_from(t: &CosetTable, data: &SchreierData, w: &Word, start: usize) -> (Word, usize) {
    let mut c = start;
    let mut out = Vec::new();
    for &l in w.letters() {
        let g = l.unsigned_abs() as usize - 1;
        if l > 0 {
            if let Some(i) = data.label[c][g] {
                out.push(i as i32 + 1);
            }
            c = t.act(c, l);
        } else {
            let d = t.act(c, l);
            if let Some(i) = data.label[d][g] {
                out.push(-(i as i32 + 1));
            }
            c = d;
        }
    }
    (Word::from_letters(out), c)
}

/// A presentation of a subgroup together with its embedding in the parent.
#[derive(Clone, Debug)]
pub struct SubgroupPresentation {
    pub presentation: Presentation,
    /// `inclusion[i]` is generator `i` written in the parent's generators.
    pub inclusion: Vec<Word>,
    table: CosetTable,
    data_images: Vec<Word>,
}

impl SubgroupPresentation {
    /// Rewrites a parent word lying in the subgroup into the subgroup's generators.
    pub fn rewrite(&self, w: &Word) -> Result<Word> {
        let data = schreier_data(&self.table)?;
        let (sw, end) = rewrite_from(&self.table, &data, w, 0);
        if end != 0 {
            return Err(Error::InvalidArgument("word is not in the subgroup".into()));
        }
        Ok(sw.substitute(&self.data_images))
    }
}

/// Tietze pass: drops generators killed by length-1 relators, eliminates one
/// generator of every length-2 relator in two distinct generators, then
/// cyclically reduces and deduplicates.
fn simplify(ngens: usize, mut rels: Vec<Word>) -> (Vec<bool>, Vec<Word>, Vec<Word>) {
    let mut alive = vec![true; ngens];
    // images of every original generator in terms of original indices
    let mut images: Vec<Word> = (0..ngens).map(Word::gen).collect();
    loop {
        rels = rels.iter().map(Word::cyclically_reduced).filter(|r| !r.is_empty()).collect();
        let pick = rels.iter().find_map(|r| match r.letters() {
            [x] => Some((x.unsigned_abs() as usize - 1, Word::empty())),
            [x, y] if x.abs() != y.abs() => {
                let (x, y) = (*x, *y);
                // x y = 1 gives y = x⁻¹; eliminate the later generator
                let (keep, drop) = if x.abs() < y.abs() { (x, y) } else { (y, x) };
                let img = Word::from_letters([-keep]);
                Some((drop.unsigned_abs() as usize - 1, if drop > 0 { img } else { img.inverse() }))
            }
            _ => None,
        });
        let Some((g, img)) = pick else { break };
        alive[g] = false;
        let mut subst: Vec<Word> = (0..ngens).map(Word::gen).collect();
        subst[g] = img;
        rels = rels.iter().map(|r| r.substitute(&subst)).collect();
        images = images.iter().map(|w| w.substitute(&subst)).collect();
    }
    let mut seen = HashSet::new();
    rels.retain(|r| seen.insert(r.cyclic_canonical()));
    (alive, images, rels)
}

pub fn reidemeister_schreier(t: &CosetTable) -> Result<SubgroupPresentation> {
    let data = schreier_data(t)?;
    let mut rels = Vec::new();
    for c in 0..t.index() {
        for r in t.parent().relators() {
            rels.push(rewrite_from(t, &data, r, c).0);
        }
    }
    let n = data.words.len();
    let (alive, images, rels) = simplify(n, rels);

    let mut renumber = vec![Word::empty(); n];
    let mut names = Vec::new();
    let mut inclusion = Vec::new();
    for i in (0..n).filter(|&i| alive[i]) {
        renumber[i] = Word::gen(names.len());
        names.push(data.names[i].clone());
        inclusion.push(data.words[i].clone());
    }
    let rels: Vec<Word> = rels.iter().map(|r| r.substitute(&renumber)).collect();
    let data_images: Vec<Word> = images.iter().map(|w| w.substitute(&renumber)).collect();
    let name = format!("{}_sub{}", t.parent().name(), t.index());
    Ok(SubgroupPresentation {
        presentation: Presentation::new(name, names, rels)?,
        inclusion,
        table: t.clone(),
        data_images,
    })
}
