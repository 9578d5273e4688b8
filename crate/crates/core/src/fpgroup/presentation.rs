use std::collections::HashSet;

use super::word::Word;
use crate::error::{Error, Result};

/// A finitely presented group `⟨generators | relators⟩`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    name: String,
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(name: impl Into<String>, generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.as_str()) {
                return Err(Error::InvalidPresentation(format!("duplicate generator `{g}`")));
            }
        }
        for r in &relators {
            if r.max_gen() > generators.len() {
                return Err(Error::InvalidPresentation(format!(
                    "relator references generator {} but only {} are declared",
                    r.max_gen(),
                    generators.len()
                )));
            }
        }
        Ok(Presentation { name: name.into(), generators, relators })
    }

    /// Convenience constructor from generator names and relator syllables.
    pub fn from_syllables(name: &str, gens: &[&str], rels: &[&[(usize, i64)]]) -> Result<Self> {
        Presentation::new(
            name,
            gens.iter().map(|s| s.to_string()).collect(),
            rels.iter().map(|r| Word::from_syllables(r)).collect(),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Parses a word in this presentation's generators.
    pub fn word(&self, text: &str) -> Result<Word> {
        crate::presfile::parse_word(text, &self.generators)
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.render(&self.generators)
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.max_gen() > self.generators.len() {
            return Err(Error::InvalidPresentation("word references an undeclared generator".into()));
        }
        Ok(())
    }
}

/// The same generators with `extra` appended to the relators.
pub fn quotient(p: &Presentation, extra: &[Word]) -> Result<Presentation> {
    for w in extra {
        p.check_word(w)?;
    }
    let mut relators = p.relators.clone();
    relators.extend(extra.iter().cloned());
    Presentation::new(format!("{}/extra", p.name), p.generators.clone(), relators)
}
