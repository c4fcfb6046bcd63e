//! Root-element generators inside `L_{n+1}(2)`, the action on nonzero row
//! vectors, and factorisation of elements into generator words.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fp::Word;
use crate::gf2::Gf2Matrix;
use crate::perm::{PermGroup, Permutation};

/// A named root element `I + E(row, col)`, positions 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootGenerator {
    pub name: String,
    pub row: usize,
    pub col: usize,
    pub matrix: Gf2Matrix,
}

/// Generators of `B_n`, `C_n` and their intersection inside `AGL_n(2) <= L_{n+1}(2)`.
///
/// Order of the list: the shared generators, then the one extra generator of
/// `B_n`, then the one extra generator of `C_n`. For `n = 4` this is exactly
/// `a1, .., a13`.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    n: usize,
    gens: Vec<RootGenerator>,
    shared: usize,
}

impl GeneratorTable {
    pub fn new(n: usize) -> Result<Self> {
        if !(3..=8).contains(&n) {
            return Err(Error::Range(format!("n = {n} outside 3..=8")));
        }
        let d = n + 1;
        let mut positions = Vec::new();
        for i in 2..=d {
            for j in 1..i {
                positions.push((i, j));
            }
        }
        for i in 2..=n - 1 {
            for j in i + 1..=n - 1 {
                positions.push((i, j));
            }
        }
        let shared = positions.len();
        positions.push((n - 1, n));
        positions.push((n, n + 1));
        let gens = positions
            .into_iter()
            .enumerate()
            .map(|(k, (row, col))| RootGenerator {
                name: format!("a{}", k + 1),
                row,
                col,
                matrix: Gf2Matrix::elementary(d, row - 1, col - 1),
            })
            .collect();
        Ok(GeneratorTable { n, gens, shared })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n + 1
    }

    pub fn gens(&self) -> &[RootGenerator] {
        &self.gens
    }

    pub fn names(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.name.clone()).collect()
    }

    pub fn matrices(&self) -> Vec<Gf2Matrix> {
        self.gens.iter().map(|g| g.matrix.clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// Matrix of generator `a{k}` (1-based, as in the naming).
    pub fn a(&self, k: usize) -> &Gf2Matrix {
        &self.gens[k - 1].matrix
    }

    pub fn shared_indices(&self) -> Vec<usize> {
        (0..self.shared).collect()
    }

    pub fn b_extra(&self) -> usize {
        self.shared
    }

    pub fn c_extra(&self) -> usize {
        self.shared + 1
    }

    pub fn b_indices(&self) -> Vec<usize> {
        (0..=self.shared).collect()
    }

    pub fn c_indices(&self) -> Vec<usize> {
        (0..self.shared).chain([self.shared + 1]).collect()
    }

    /// Product of the named generators, left to right.
    pub fn product(&self, ks: &[usize]) -> Gf2Matrix {
        ks.iter().fold(Gf2Matrix::identity(self.dim()), |acc, &k| acc.mul(self.a(k)))
    }
}

/// The four generator-image maps of the shared group used to twist the amalgam (`n = 4`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Twist {
    Identity,
    Alpha,
    Beta,
    AlphaBeta,
}

impl Twist {
    pub const ALL: [Twist; 4] = [Twist::Identity, Twist::Alpha, Twist::Beta, Twist::AlphaBeta];

    pub fn name(self) -> &'static str {
        match self {
            Twist::Identity => "id",
            Twist::Alpha => "alpha",
            Twist::Beta => "beta",
            Twist::AlphaBeta => "alphabeta",
        }
    }

    pub fn parse(s: &str) -> Option<Twist> {
        Twist::ALL.into_iter().find(|t| t.name() == s)
    }

    /// Images of the shared generators `a1..a11`, each as a list of `a`-indices (1-based).
    pub fn image_words(self) -> Vec<Vec<usize>> {
        let alpha = matches!(self, Twist::Alpha | Twist::AlphaBeta);
        let beta = matches!(self, Twist::Beta | Twist::AlphaBeta);
        (1..=11)
            .map(|k| match k {
                3 | 11 if alpha => vec![7, k],
                1 if beta => vec![1, 7, 9],
                2 if beta => vec![2, 7, 8],
                _ => vec![k],
            })
            .collect()
    }

    /// Images of the shared generators as matrices; requires the `n = 4` table.
    pub fn images(self, table: &GeneratorTable) -> Result<Vec<Gf2Matrix>> {
        if table.n() != 4 {
            return Err(Error::Range("twists are defined for n = 4".into()));
        }
        Ok(self.image_words().iter().map(|w| table.product(w)).collect())
    }
}

/// `|GL_n(2)|`.
pub fn gl_order(n: usize) -> u128 {
    (0..n).map(|i| (1u128 << n) - (1u128 << i)).product()
}

/// `|AGL_n(2)|`.
pub fn agl_order(n: usize) -> u128 {
    (1u128 << n) * gl_order(n)
}

/// The action of `d x d` matrices on the `2^d - 1` nonzero row vectors;
/// point `k` is the vector with integer value `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VectorAction {
    dim: usize,
}

impl VectorAction {
    pub fn new(dim: usize) -> Result<Self> {
        if !(1..=20).contains(&dim) {
            return Err(Error::Range(format!("vector action of dimension {dim}")));
        }
        Ok(VectorAction { dim })
    }

    pub fn degree(&self) -> usize {
        (1 << self.dim) - 1
    }

    pub fn point(&self, v: u64) -> u32 {
        v as u32 - 1
    }

    pub fn vector(&self, p: u32) -> u64 {
        p as u64 + 1
    }

    pub fn to_permutation(&self, m: &Gf2Matrix) -> Result<Permutation> {
        if !m.is_square() || m.ncols() != self.dim {
            return Err(Error::Dimension(format!("expected a {0}x{0} matrix", self.dim)));
        }
        if !m.is_invertible() {
            return Err(Error::Singular);
        }
        let images = (1..=self.degree() as u64).map(|v| m.apply_row(v) as u32 - 1).collect();
        Permutation::from_images(images)
    }

    pub fn group(&self, ms: &[Gf2Matrix]) -> Result<PermGroup> {
        let gens = ms.iter().map(|m| self.to_permutation(m)).collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.degree(), gens)
    }

    /// Recovers the matrix of a permutation induced by a linear map.
    pub fn to_matrix(&self, p: &Permutation) -> Result<Gf2Matrix> {
        let rows = (0..self.dim).map(|i| self.vector(p.image(self.point(1 << i)))).collect();
        let m = Gf2Matrix::from_rows(rows, self.dim)?;
        if self.to_permutation(&m)? != *p {
            return Err(Error::Verification("permutation is not linear".into()));
        }
        Ok(m)
    }
}

/// Breadth-first word table over a matrix group of side at most 8.
pub struct WordTable {
    gens: Vec<usize>,
    matrices: Vec<Gf2Matrix>,
    parent: HashMap<u64, (u64, u32)>,
    identity: u64,
}

const ROOT: u32 = u32::MAX;

impl WordTable {
    /// `gens` are indices into `table`; words use those indices as letters.
    pub fn new(table: &GeneratorTable, gens: &[usize]) -> Result<Self> {
        if table.dim() > 8 {
            return Err(Error::Range("word tables need matrices of side at most 8".into()));
        }
        let matrices: Vec<Gf2Matrix> = gens.iter().map(|&k| table.gens()[k].matrix.clone()).collect();
        let id = Gf2Matrix::identity(table.dim());
        let mut parent = HashMap::new();
        parent.insert(id.key(), (id.key(), ROOT));
        let mut queue = vec![id.clone()];
        let mut k = 0;
        while k < queue.len() {
            let g = queue[k].clone();
            for (s, m) in matrices.iter().enumerate() {
                let h = g.mul(m);
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(h.key()) {
                    e.insert((g.key(), s as u32));
                    queue.push(h);
                }
            }
            k += 1;
            if queue.len() > 1 << 22 {
                return Err(Error::TooLarge { what: "word table", size: queue.len() as u128, limit: 1 << 22 });
            }
        }
        Ok(WordTable { gens: gens.to_vec(), matrices, parent, identity: id.key() })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn contains(&self, m: &Gf2Matrix) -> bool {
        self.parent.contains_key(&m.key())
    }

    /// A shortest word (letters are indices into the generator table) for `m`.
    pub fn factor(&self, m: &Gf2Matrix) -> Result<Word> {
        let mut key = m.key();
        let mut rev = Vec::new();
        while key != self.identity {
            let &(p, s) = self.parent.get(&key).ok_or_else(|| Error::NotInGroup(format!("{m:?}")))?;
            rev.push(self.gens[s as usize]);
            key = p;
        }
        rev.reverse();
        Ok(Word::from_gens(&rev))
    }

    pub fn generator_matrices(&self) -> &[Gf2Matrix] {
        &self.matrices
    }
}

/// Evaluates a word (letters index `images`) as a matrix product.
pub fn eval_matrix(w: &Word, images: &[Gf2Matrix]) -> Gf2Matrix {
    let dim = images[0].ncols();
    w.eval(images, Gf2Matrix::identity(dim), |a, b| a.mul(b), |a| a.inverse().expect("invertible generator"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n4_positions_match_the_table() {
        let t = GeneratorTable::new(4).unwrap();
        let pos: Vec<(usize, usize)> = t.gens().iter().map(|g| (g.row, g.col)).collect();
        assert_eq!(
            pos,
            vec![
                (2, 1),
                (3, 1),
                (3, 2),
                (4, 1),
                (4, 2),
                (4, 3),
                (5, 1),
                (5, 2),
                (5, 3),
                (5, 4),
                (2, 3),
                (3, 4),
                (4, 5)
            ]
        );
        assert_eq!(t.b_extra(), 11);
        assert_eq!(t.c_extra(), 12);
    }

    #[test]
    fn root_elements_are_involutions() {
        let t = GeneratorTable::new(4).unwrap();
        for g in t.gens() {
            assert_eq!(g.matrix.order(), 2);
        }
        assert_eq!(t.product(&[3, 11]).order(), 3);
    }

    #[test]
    fn permutation_round_trip() {
        let t = GeneratorTable::new(4).unwrap();
        let act = VectorAction::new(5).unwrap();
        let m = t.product(&[1, 3, 11, 12]);
        let p = act.to_permutation(&m).unwrap();
        assert_eq!(act.to_matrix(&p).unwrap(), m);
        assert!(act.to_permutation(&Gf2Matrix::identity(5)).unwrap().is_identity());
        assert!(act.to_permutation(&Gf2Matrix::zero(5, 5)).is_err());
    }

    #[test]
    fn agl_orders() {
        assert_eq!(gl_order(3), 168);
        assert_eq!(agl_order(4), 16 * 20160);
    }
}
