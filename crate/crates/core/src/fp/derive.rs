//! Relators of the completion presentations, derived by multiplying matrices.

use std::collections::HashMap;

use super::presentation::Presentation;
use super::word::Word;
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::mataction::{eval_matrix, GeneratorTable, WordTable};

/// An automorphism of the shared matrix group, tabulated on all its elements.
pub struct MatrixTwist {
    forward: HashMap<u64, Gf2Matrix>,
    backward: HashMap<u64, Gf2Matrix>,
    images: Vec<Gf2Matrix>,
}

impl MatrixTwist {
    /// Extends generator images breadth-first; fails unless they define an automorphism.
    pub fn new(table: &GeneratorTable, images: Vec<Gf2Matrix>) -> Result<Self> {
        let shared = table.shared_indices();
        if images.len() != shared.len() {
            return Err(Error::Range("one image per shared generator is required".into()));
        }
        let gens: Vec<Gf2Matrix> = shared.iter().map(|&k| table.gens()[k].matrix.clone()).collect();
        let id = Gf2Matrix::identity(table.dim());
        let mut forward = HashMap::new();
        forward.insert(id.key(), id.clone());
        let mut queue = vec![id];
        let mut k = 0;
        while k < queue.len() {
            let g = queue[k].clone();
            let phi_g = forward[&g.key()].clone();
            for (s, img) in gens.iter().zip(&images) {
                let h = g.mul(s);
                let phi_h = phi_g.mul(img);
                match forward.get(&h.key()) {
                    Some(x) if *x != phi_h => {
                        return Err(Error::Verification("generator images do not define a homomorphism".into()))
                    }
                    Some(_) => {}
                    None => {
                        forward.insert(h.key(), phi_h);
                        queue.push(h);
                    }
                }
            }
            k += 1;
        }
        let mut backward = HashMap::with_capacity(forward.len());
        for g in &queue {
            let img = &forward[&g.key()];
            if !forward.contains_key(&img.key()) || backward.insert(img.key(), g.clone()).is_some() {
                return Err(Error::Verification("generator images do not define an automorphism".into()));
            }
        }
        Ok(MatrixTwist { forward, backward, images })
    }

    pub fn identity(table: &GeneratorTable) -> Result<Self> {
        let images = table.shared_indices().iter().map(|&k| table.gens()[k].matrix.clone()).collect();
        MatrixTwist::new(table, images)
    }

    pub fn apply(&self, g: &Gf2Matrix) -> Option<&Gf2Matrix> {
        self.forward.get(&g.key())
    }

    pub fn apply_inverse(&self, g: &Gf2Matrix) -> Option<&Gf2Matrix> {
        self.backward.get(&g.key())
    }

    pub fn images(&self) -> &[Gf2Matrix] {
        &self.images
    }
}

/// A presentation on all table generators together with the generator subsets of its members.
pub struct DerivedPresentation {
    pub presentation: Presentation,
    /// Generators of the first member (shared ones plus the `B` extra).
    pub first: Vec<usize>,
    /// Generators of the second member (shared ones plus the `C` extra).
    pub second: Vec<usize>,
    pub shared: Vec<usize>,
    pairs: HashMap<(usize, usize), usize>,
}

impl DerivedPresentation {
    pub fn first_presentation(&self) -> Result<Presentation> {
        self.presentation.restrict(&self.first)
    }

    pub fn second_presentation(&self) -> Result<Presentation> {
        self.presentation.restrict(&self.second)
    }

    pub fn shared_presentation(&self) -> Result<Presentation> {
        self.presentation.restrict(&self.shared)
    }

    /// The relator derived for the pair `(i, j)` of 0-based generator indices, `i < j`.
    pub fn relator(&self, i: usize, j: usize) -> Option<&Word> {
        self.pairs.get(&(i, j)).map(|&k| &self.presentation.relators()[k])
    }
}

/// Derives the presentation of the universal completion of the amalgam twisted by `sigma`.
///
/// Pairs inside the first member give `[ai,aj] w` where `w` is a word for the
/// inverse commutator in the shared group, or `(ai aj)^k` when the commutator
/// leaves the shared group or `ai aj` has odd order. Pairs with the `C` extra use `sigma`-images for the
/// shared letter and pull the correcting word back through `sigma`.
pub fn derive_presentation(table: &GeneratorTable, sigma: &MatrixTwist) -> Result<DerivedPresentation> {
    let shared = table.shared_indices();
    let words = WordTable::new(table, &shared)?;
    let mats = table.matrices();
    let nc = table.c_extra();
    let mut rels = Vec::new();
    let mut pairs = HashMap::new();
    for i in 0..mats.len() {
        rels.push(Word::gen(i).pow(2));
    }
    let first: Vec<usize> = table.b_indices();
    for (x, &i) in first.iter().enumerate() {
        for &j in &first[x + 1..] {
            pairs.insert((i, j), rels.len());
            rels.push(pair_relator(i, j, &mats[i], &mats[j], &words, None)?);
        }
    }
    for &i in &shared {
        let img = &sigma.images()[i];
        pairs.insert((i, nc), rels.len());
        rels.push(pair_relator(i, nc, img, &mats[nc], &words, Some(sigma))?);
    }
    let presentation = Presentation::new(table.names(), rels)?;
    let derived = DerivedPresentation { presentation, first, second: table.c_indices(), shared, pairs };
    self_test(table, sigma, &derived)?;
    Ok(derived)
}

fn pair_relator(
    i: usize,
    j: usize,
    mi: &Gf2Matrix,
    mj: &Gf2Matrix,
    words: &WordTable,
    sigma: Option<&MatrixTwist>,
) -> Result<Word> {
    let inv_i = mi.inverse().ok_or(Error::Singular)?;
    let inv_j = mj.inverse().ok_or(Error::Singular)?;
    let comm = inv_i.mul(&inv_j).mul(mi).mul(mj);
    let correction = comm.inverse().ok_or(Error::Singular)?;
    let odd = mi.mul(mj).order() % 2 == 1;
    let pulled = match sigma {
        _ if odd => None,
        Some(s) if words.contains(&correction) => s.apply_inverse(&correction).cloned(),
        None if words.contains(&correction) => Some(correction),
        _ => None,
    };
    let (gi, gj) = (Word::gen(i), Word::gen(j));
    match pulled {
        Some(c) => Ok(Word::commutator(&gi, &gj).concat(&words.factor(&c)?)),
        None => {
            let k = mi.mul(mj).order();
            Ok(gi.concat(&gj).pow(k as i64))
        }
    }
}

/// Evaluates every relator at the matrix assignment of each member.
fn self_test(table: &GeneratorTable, sigma: &MatrixTwist, d: &DerivedPresentation) -> Result<()> {
    let id = Gf2Matrix::identity(table.dim());
    let mats = table.matrices();
    let mut second = mats.clone();
    for &i in &d.shared {
        second[i] = sigma.images()[i].clone();
    }
    for r in d.presentation.relators() {
        let gens: Vec<usize> = r.letters().iter().map(|l| l.unsigned_abs() as usize - 1).collect();
        let in_first = gens.iter().all(|g| d.first.contains(g));
        let in_second = gens.iter().all(|g| d.second.contains(g));
        if in_first && eval_matrix(r, &mats) != id {
            return Err(Error::Verification(format!("relator {r:?} fails in the first member")));
        }
        if in_second && eval_matrix(r, &second) != id {
            return Err(Error::Verification(format!("relator {r:?} fails in the second member")));
        }
        if !in_first && !in_second {
            return Err(Error::Verification(format!("relator {r:?} spans both members")));
        }
    }
    Ok(())
}
