use std::collections::HashSet;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use super::word::Word;
use crate::error::{Error, Result};

/// Generator names and relator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::Range(format!("duplicate generator name {n}")));
            }
        }
        let mut out = Vec::with_capacity(relators.len());
        for r in relators {
            if r.max_gen().is_some_and(|g| g >= names.len()) {
                return Err(Error::Range("relator uses an undeclared generator".into()));
            }
            let r = r.free_reduce();
            if r.is_empty() {
                return Err(Error::Range("empty relator".into()));
            }
            out.push(r);
        }
        Ok(Presentation { names, relators: out })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_gens(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Word for a product of named generators.
    pub fn word(&self, names: &[&str]) -> Result<Word> {
        let ix = names
            .iter()
            .map(|n| self.index_of(n).ok_or_else(|| Error::UnknownGenerator(n.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_gens(&ix))
    }

    pub fn with_relators(&self, extra: impl IntoIterator<Item = Word>) -> Result<Presentation> {
        let mut rels = self.relators.clone();
        rels.extend(extra);
        Presentation::new(self.names.clone(), rels)
    }

    /// Sub-presentation on the listed generators, keeping the relators that use only them.
    pub fn restrict(&self, gens: &[usize]) -> Result<Presentation> {
        let mut map = vec![usize::MAX; self.names.len()];
        for (new, &old) in gens.iter().enumerate() {
            map[old] = new;
        }
        let rels = self
            .relators
            .iter()
            .filter(|r| r.letters().iter().all(|&l| map[l.unsigned_abs() as usize - 1] != usize::MAX))
            .map(|r| r.rename(&map))
            .collect();
        Presentation::new(gens.iter().map(|&g| self.names[g].clone()).collect(), rels)
    }

    /// Generators that square to the identity by a relator `x^2`.
    pub fn involutions(&self) -> Vec<bool> {
        let mut inv = vec![false; self.names.len()];
        for r in &self.relators {
            if let [a, b] = r.letters() {
                if a == b {
                    inv[a.unsigned_abs() as usize - 1] = true;
                }
            }
        }
        inv
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("gens:");
        for n in &self.names {
            s.push(' ');
            s.push_str(n);
        }
        s.push('\n');
        for r in &self.relators {
            let _ = writeln!(s, "rel: {}", format_word(r, &self.names));
        }
        s
    }

    /// SHA-256 of the canonical text together with subgroup words.
    pub fn content_hash(&self, subgroup: &[Word]) -> [u8; 32] {
        let mut h = Sha256::new();
        h.update(self.to_text().as_bytes());
        for w in subgroup {
            h.update(b"sub: ");
            h.update(format_word(w, &self.names).as_bytes());
            h.update(b"\n");
        }
        h.finalize().into()
    }
}

/// Prints a word, recognising a leading commutator of two letters and proper powers.
pub fn format_word(w: &Word, names: &[String]) -> String {
    let l = w.letters();
    if let Some((period, k)) = proper_power(l) {
        if period > 1 {
            let base = Word::from_letters(l[..period].to_vec());
            return format!("({})^{k}", base.display(names));
        }
    }
    if l.len() >= 4 && l[0] < 0 && l[1] < 0 && l[2] == -l[0] && l[3] == -l[1] && l[0] != l[1] {
        let x = Word::from_letters(vec![l[2]]);
        let y = Word::from_letters(vec![l[3]]);
        let mut s = format!("[{},{}]", x.display(names), y.display(names));
        if l.len() > 4 {
            s.push('*');
            s.push_str(&Word::from_letters(l[4..].to_vec()).display(names).to_string());
        }
        return s;
    }
    w.display(names).to_string()
}

fn proper_power(l: &[i32]) -> Option<(usize, usize)> {
    let n = l.len();
    (1..n).filter(|p| n.is_multiple_of(*p)).find(|&p| (p..n).all(|i| l[i] == l[i - p])).map(|p| (p, n / p))
}
