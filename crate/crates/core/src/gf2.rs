//! Linear algebra over GF(2) with one machine word per row.
//!
//! Coordinate `i` of a vector is bit `i` of its word. When vectors are
//! written as strings (`"1100"`), the leftmost character is coordinate 0.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient dimension for which [`all_subspaces`] will enumerate.
pub const MAX_ENUM_DIM: usize = 7;

#[inline]
fn mask(dim: usize) -> u64 {
    if dim == 64 {
        u64::MAX
    } else {
        (1u64 << dim) - 1
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > 64 {
        return Err(Error::Dimension(format!("dimension {dim} outside 1..=64")));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    bits: u64,
    dim: u8,
}

impl Gf2Vector {
    pub fn new(bits: u64, dim: usize) -> Result<Self> {
        check_dim(dim)?;
        if bits & !mask(dim) != 0 {
            return Err(Error::Dimension(format!("bits {bits:#x} exceed dimension {dim}")));
        }
        Ok(Gf2Vector { bits, dim: dim as u8 })
    }

    pub fn zero(dim: usize) -> Self {
        Gf2Vector { bits: 0, dim: dim as u8 }
    }

    pub fn unit(i: usize, dim: usize) -> Self {
        Gf2Vector { bits: 1 << i, dim: dim as u8 }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        let mut dim = 0;
        for c in s.chars().filter(|c| !c.is_whitespace()) {
            match c {
                '0' => {}
                '1' => bits |= 1 << dim,
                _ => return Err(Error::Dimension(format!("bad bit character {c:?}"))),
            }
            dim += 1;
        }
        Gf2Vector::new(bits, dim)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn dim(self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn get(self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn dot(self, other: Gf2Vector) -> bool {
        (self.bits & other.bits).count_ones() & 1 == 1
    }
}

impl std::ops::Add for Gf2Vector {
    type Output = Gf2Vector;
    fn add(self, rhs: Gf2Vector) -> Gf2Vector {
        debug_assert_eq!(self.dim, rhs.dim);
        Gf2Vector { bits: self.bits ^ rhs.bits, dim: self.dim }
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A dense matrix over GF(2); row `i` is a packed word, column `j` is bit `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Matrix {
    rows: Vec<u64>,
    ncols: usize,
}

impl Gf2Matrix {
    pub fn from_rows(rows: Vec<u64>, ncols: usize) -> Result<Self> {
        check_dim(ncols)?;
        if rows.iter().any(|r| r & !mask(ncols) != 0) {
            return Err(Error::Dimension("row wider than ncols".into()));
        }
        Ok(Gf2Matrix { rows, ncols })
    }

    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let vs = rows.iter().map(|r| Gf2Vector::parse(r)).collect::<Result<Vec<_>>>()?;
        let ncols = vs.first().map(|v| v.dim()).unwrap_or(1);
        if vs.iter().any(|v| v.dim() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Gf2Matrix::from_rows(vs.iter().map(|v| v.bits()).collect(), ncols)
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Gf2Matrix { rows: vec![0; nrows], ncols }
    }

    pub fn identity(n: usize) -> Self {
        Gf2Matrix { rows: (0..n).map(|i| 1u64 << i).collect(), ncols: n }
    }

    /// Identity plus a single 1 at `(row, col)` (0-indexed, `row != col`).
    pub fn elementary(n: usize, row: usize, col: usize) -> Self {
        assert_ne!(row, col);
        let mut m = Gf2Matrix::identity(n);
        m.rows[row] |= 1 << col;
        m
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> Gf2Vector {
        Gf2Vector { bits: self.rows[i], dim: self.ncols as u8 }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Row vector times matrix.
    #[inline]
    pub fn apply_row(&self, v: u64) -> u64 {
        let mut out = 0;
        let mut v = v;
        while v != 0 {
            let i = v.trailing_zeros() as usize;
            out ^= self.rows[i];
            v &= v - 1;
        }
        out
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.ncols, other.nrows(), "matrix shapes do not chain");
        Gf2Matrix {
            rows: self.rows.iter().map(|&r| other.apply_row(r)).collect(),
            ncols: other.ncols,
        }
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut rows = vec![0u64; self.ncols];
        for (i, &r) in self.rows.iter().enumerate() {
            for (j, out) in rows.iter_mut().enumerate() {
                if r >> j & 1 == 1 {
                    *out |= 1 << i;
                }
            }
        }
        Gf2Matrix { rows, ncols: self.rows.len() }
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.ncols
    }

    pub fn inverse(&self) -> Option<Gf2Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.ncols;
        let mut a = self.rows.clone();
        let mut inv: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r] >> col & 1 == 1)?;
            a.swap(col, piv);
            inv.swap(col, piv);
            for r in 0..n {
                if r != col && a[r] >> col & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(Gf2Matrix { rows: inv, ncols: n })
    }

    /// Multiplicative order of an invertible square matrix.
    pub fn order(&self) -> u64 {
        let id = Gf2Matrix::identity(self.ncols);
        let mut p = self.clone();
        let mut k = 1;
        while p != id {
            p = p.mul(self);
            k += 1;
        }
        k
    }

    /// Packs a square matrix of side <= 8 into a single word (row-major).
    pub fn key(&self) -> u64 {
        debug_assert!(self.ncols <= 8 && self.rows.len() <= 8);
        self.rows.iter().enumerate().fold(0, |acc, (i, &r)| acc | r << (8 * i))
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, _) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        f.write_str("]")
    }
}

/// Reduced row-echelon form (zero rows dropped to the bottom) and rank.
///
/// The pivot of a row is its lowest set bit; pivots increase down the rows.
pub fn rref(m: &Gf2Matrix) -> (Gf2Matrix, usize) {
    let mut rows = m.rows.clone();
    let mut rank = 0;
    for col in 0..m.ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r] >> col & 1 == 1) else {
            continue;
        };
        rows.swap(rank, piv);
        let p = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row >> col & 1 == 1 {
                *row ^= p;
            }
        }
        rank += 1;
    }
    (Gf2Matrix { rows, ncols: m.ncols }, rank)
}

fn echelon(vectors: impl IntoIterator<Item = u64>, dim: usize) -> Vec<u64> {
    let m = Gf2Matrix { rows: vectors.into_iter().collect(), ncols: dim };
    let (r, rank) = rref(&m);
    r.rows[..rank].to_vec()
}

/// A subspace stored by its canonical reduced echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: Vec<u64>,
    ambient_dim: usize,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { basis: Vec::new(), ambient_dim }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { basis: (0..ambient_dim).map(|i| 1u64 << i).collect(), ambient_dim }
    }

    pub fn span(vectors: impl IntoIterator<Item = u64>, ambient_dim: usize) -> Self {
        Subspace { basis: echelon(vectors, ambient_dim), ambient_dim }
    }

    pub fn from_matrix(m: &Gf2Matrix) -> Self {
        Subspace::span(m.rows.iter().copied(), m.ncols)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Gf2Matrix {
        Gf2Matrix { rows: self.basis.clone(), ncols: self.ambient_dim }
    }

    /// Reduces `v` against the basis; zero iff `v` lies in the subspace.
    #[inline]
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &b in &self.basis {
            if v >> b.trailing_zeros() & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    #[inline]
    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|&v| self.contains(v))
    }

    /// All `2^dim` vectors, in the order of their coordinates on the basis.
    pub fn vectors(&self) -> Vec<u64> {
        let k = self.basis.len();
        (0u64..1 << k)
            .map(|c| {
                self.basis.iter().enumerate().fold(0, |acc, (i, &b)| if c >> i & 1 == 1 { acc ^ b } else { acc })
            })
            .collect()
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Dimension(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        Ok(Subspace::span(self.basis.iter().chain(&other.basis).copied(), self.ambient_dim))
    }

    /// Zassenhaus intersection on doubled rows `[a | a]`, `[b | 0]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let d = self.ambient_dim;
        let mut rows: Vec<u128> = self
            .basis
            .iter()
            .map(|&a| a as u128 | (a as u128) << d)
            .chain(other.basis.iter().map(|&b| b as u128))
            .collect();
        let mut rank = 0;
        for col in 0..2 * d {
            let Some(piv) = (rank..rows.len()).find(|&r| rows[r] >> col & 1 == 1) else {
                continue;
            };
            rows.swap(rank, piv);
            let p = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row >> col & 1 == 1 {
                    *row ^= p;
                }
            }
            rank += 1;
        }
        let low = mask(d) as u128;
        let meet = rows[..rank].iter().filter(|&&r| r & low == 0).map(|&r| (r >> d) as u64);
        Ok(Subspace::span(meet, d))
    }

    /// Image under the row action of a matrix.
    pub fn image(&self, m: &Gf2Matrix) -> Subspace {
        Subspace::span(self.basis.iter().map(|&v| m.apply_row(v)), m.ncols())
    }

    pub fn is_invariant(&self, m: &Gf2Matrix) -> bool {
        self.basis.iter().all(|&v| self.contains(m.apply_row(v)))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, &b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{:?}", Gf2Vector { bits: b, dim: self.ambient_dim as u8 })?;
        }
        write!(f, ">")
    }
}

/// Coordinates on `V / kernel`, using the non-pivot columns of the kernel's
/// echelon basis. Projection and lift are mutually inverse linear maps
/// between `V / kernel` and `GF(2)^(d - k)`.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    kernel: Subspace,
    free_cols: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(kernel: Subspace) -> Self {
        let pivots: u64 = kernel.basis.iter().map(|b| 1u64 << b.trailing_zeros()).fold(0, |a, b| a | b);
        let free_cols = (0..kernel.ambient_dim).filter(|&c| pivots >> c & 1 == 0).collect();
        QuotientSpace { kernel, free_cols }
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn dim(&self) -> usize {
        self.free_cols.len()
    }

    pub fn project(&self, v: u64) -> u64 {
        let r = self.kernel.reduce(v);
        self.free_cols.iter().enumerate().fold(0, |acc, (i, &c)| acc | (r >> c & 1) << i)
    }

    pub fn lift(&self, coords: u64) -> u64 {
        self.free_cols.iter().enumerate().fold(0, |acc, (i, &c)| acc | (coords >> i & 1) << c)
    }

    /// Full preimage of a subspace of the quotient.
    pub fn lift_subspace(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient_dim != self.dim() {
            return Err(Error::Dimension("subspace does not live in this quotient".into()));
        }
        Ok(Subspace::span(
            self.kernel.basis.iter().copied().chain(s.basis.iter().map(|&c| self.lift(c))),
            self.kernel.ambient_dim,
        ))
    }

    pub fn project_subspace(&self, s: &Subspace) -> Subspace {
        Subspace::span(s.basis.iter().map(|&v| self.project(v)), self.dim())
    }

    /// Matrix of the induced action of `m` on the quotient; `m` must leave the kernel invariant.
    pub fn induced(&self, m: &Gf2Matrix) -> Result<Gf2Matrix> {
        if !self.kernel.is_invariant(m) {
            return Err(Error::Dimension("kernel is not invariant".into()));
        }
        let rows = (0..self.dim()).map(|i| self.project(m.apply_row(self.lift(1 << i)))).collect();
        Gf2Matrix::from_rows(rows, self.dim().max(1))
    }
}

/// Number of `k`-dimensional subspaces of `GF(2)^n`.
pub fn gaussian_binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (1u128 << (n - i)) - 1;
        den *= (1u128 << (i + 1)) - 1;
    }
    num / den
}

/// Every subspace of `GF(2)^d`, each exactly once in canonical form, ordered by dimension.
pub fn all_subspaces(d: usize) -> Result<Vec<Subspace>> {
    if d == 0 || d > MAX_ENUM_DIM {
        return Err(Error::Dimension(format!("all_subspaces needs 1 <= d <= {MAX_ENUM_DIM}, got {d}")));
    }
    let mut out = Vec::new();
    for k in 0..=d {
        // pivot sets of size k
        for pivots in 0u64..1 << d {
            if pivots.count_ones() as usize != k {
                continue;
            }
            let piv: Vec<usize> = (0..d).filter(|&c| pivots >> c & 1 == 1).collect();
            // free positions: in row r, columns > piv[r] that are not pivots
            let free: Vec<(usize, usize)> = piv
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| ((p + 1)..d).filter(move |&c| pivots >> c & 1 == 0).map(move |c| (r, c)))
                .collect();
            for fill in 0u64..1 << free.len() {
                let mut basis: Vec<u64> = piv.iter().map(|&p| 1u64 << p).collect();
                for (i, &(r, c)) in free.iter().enumerate() {
                    if fill >> i & 1 == 1 {
                        basis[r] |= 1 << c;
                    }
                }
                out.push(Subspace { basis, ambient_dim: d });
            }
        }
    }
    Ok(out)
}

/// Quadratic form stored as its polar (Gram) matrix plus diagonal values `q(e_i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticForm {
    dim: usize,
    gram: Vec<u64>,
    diag: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormType {
    Plus,
    Minus,
}

impl QuadraticForm {
    pub fn new(gram: Vec<u64>, diag: u64) -> Result<Self> {
        let dim = gram.len();
        check_dim(dim)?;
        for i in 0..dim {
            if gram[i] >> i & 1 == 1 {
                return Err(Error::Form("polar form is not alternating".into()));
            }
            for j in 0..dim {
                if (gram[i] >> j & 1) != (gram[j] >> i & 1) {
                    return Err(Error::Form("polar form is not symmetric".into()));
                }
            }
        }
        Ok(QuadraticForm { dim, gram, diag })
    }

    pub fn zero(dim: usize) -> Self {
        QuadraticForm { dim, gram: vec![0; dim], diag: 0 }
    }

    /// Builds a form from its values, checking that they really are quadratic.
    pub fn from_values(dim: usize, q: impl Fn(u64) -> bool) -> Result<Self> {
        check_dim(dim)?;
        let diag = (0..dim).fold(0u64, |acc, i| acc | (q(1 << i) as u64) << i);
        let mut gram = vec![0u64; dim];
        for i in 0..dim {
            for j in 0..dim {
                if i != j {
                    let b = q(1 << i | 1 << j) ^ q(1 << i) ^ q(1 << j);
                    gram[i] |= (b as u64) << j;
                }
            }
        }
        let form = QuadraticForm::new(gram, diag)?;
        if dim <= 16 {
            for v in 0u64..1 << dim {
                if form.value(v) != q(v) {
                    return Err(Error::Form(format!("values are not a quadratic form at {v:#b}")));
                }
            }
        }
        Ok(form)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &[u64] {
        &self.gram
    }

    pub fn polar(&self, u: u64, v: u64) -> bool {
        let mut acc = 0u64;
        let mut u = u;
        while u != 0 {
            let i = u.trailing_zeros() as usize;
            acc ^= self.gram[i];
            u &= u - 1;
        }
        (acc & v).count_ones() & 1 == 1
    }

    pub fn value(&self, v: u64) -> bool {
        let mut q = (self.diag & v).count_ones() & 1 == 1;
        let mut rest = v;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // pairs i < j
            q ^= (self.gram[i] & rest).count_ones() & 1 == 1;
        }
        q
    }

    pub fn is_nondegenerate(&self) -> bool {
        Gf2Matrix { rows: self.gram.clone(), ncols: self.dim }.rank() == self.dim
    }

    /// Number of vectors (including zero) on which the form vanishes.
    pub fn zero_count(&self) -> u64 {
        assert!(self.dim <= 24, "zero_count enumerates the whole space");
        (0u64..1 << self.dim).filter(|&v| !self.value(v)).count() as u64
    }

    /// Plus or minus type of a non-degenerate form in even dimension.
    pub fn form_type(&self) -> Option<FormType> {
        if !self.dim.is_multiple_of(2) || !self.is_nondegenerate() {
            return None;
        }
        let m = self.dim / 2;
        let zeros = self.zero_count();
        let plus = (1u64 << (2 * m - 1)) + (1u64 << (m - 1));
        let minus = (1u64 << (2 * m - 1)) - (1u64 << (m - 1));
        if zeros == plus {
            Some(FormType::Plus)
        } else if zeros == minus {
            Some(FormType::Minus)
        } else {
            None
        }
    }

    pub fn is_invariant(&self, m: &Gf2Matrix) -> bool {
        (0u64..1 << self.dim.min(20)).all(|v| self.value(v) == self.value(m.apply_row(v)))
    }
}

pub fn is_totally_singular(s: &Subspace, q: &QuadraticForm) -> bool {
    s.basis().iter().all(|&v| !q.value(v)) && is_totally_isotropic(s, q)
}

pub fn is_totally_isotropic(s: &Subspace, q: &QuadraticForm) -> bool {
    let b = s.basis();
    b.iter().enumerate().all(|(i, &u)| b[i + 1..].iter().all(|&v| !q.polar(u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span_size(rows: &[u64]) -> usize {
        let mut seen = std::collections::HashSet::new();
        for c in 0u64..1 << rows.len() {
            seen.insert(rows.iter().enumerate().fold(0, |a, (i, &r)| if c >> i & 1 == 1 { a ^ r } else { a }));
        }
        seen.len()
    }

    #[test]
    fn rref_examples() {
        let id = Gf2Matrix::identity(3);
        assert_eq!(rref(&id), (id.clone(), 3));
        let z = Gf2Matrix::zero(2, 4);
        assert_eq!(rref(&z), (z.clone(), 0));
        let m = Gf2Matrix::parse_rows(&["1100", "0110", "1010"]).unwrap();
        // exhaustive span enumeration: 4 vectors means rank 2
        assert_eq!(span_size(m.rows()), 4);
        assert_eq!(rref(&m).1, 2);
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        assert_eq!(all_subspaces(1).unwrap().len(), 2);
        for d in 1..=MAX_ENUM_DIM {
            let total: u128 = (0..=d).map(|k| gaussian_binomial(d, k)).sum();
            let subs = all_subspaces(d).unwrap();
            assert_eq!(subs.len() as u128, total, "d = {d}");
            let uniq: std::collections::HashSet<_> = subs.iter().collect();
            assert_eq!(uniq.len(), subs.len());
        }
        assert_eq!(all_subspaces(4).unwrap().len(), 67);
        assert_eq!(all_subspaces(6).unwrap().len(), 2825);
        assert!(all_subspaces(8).is_err());
        assert!(all_subspaces(0).is_err());
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::span([0b0001], 4);
        let b = Subspace::span([0b0010], 4);
        assert_eq!(a.intersection(&a).unwrap(), a);
        let s = a.sum(&b).unwrap();
        assert_eq!(s.basis(), &[0b0001, 0b0010]);
        assert_eq!(a.intersection(&b).unwrap().dim(), 0);
        assert!(a.sum(&Subspace::zero(5)).is_err());
        assert!(a.intersection(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn quotient_round_trip() {
        let k = Subspace::span([0b0110, 0b1000], 4);
        let q = QuotientSpace::new(k.clone());
        assert_eq!(q.dim(), 2);
        for c in 0..4 {
            assert_eq!(q.project(q.lift(c)), c);
        }
        for v in 0..16u64 {
            assert_eq!(k.contains(v), q.project(v) == 0);
        }
        let lifted = q.lift_subspace(&Subspace::full(2)).unwrap();
        assert_eq!(lifted, Subspace::full(4));
    }

    #[test]
    fn inverse_and_order() {
        let m = Gf2Matrix::parse_rows(&["110", "011", "001"]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Gf2Matrix::identity(3));
        assert_eq!(m.order(), 4);
        assert!(Gf2Matrix::parse_rows(&["11", "11"]).unwrap().inverse().is_none());
        let e = Gf2Matrix::elementary(5, 4, 0);
        assert_eq!(e.mul(&e), Gf2Matrix::identity(5));
    }

    #[test]
    fn hyperbolic_form_is_plus_type() {
        // x0 x1 + x2 x3 + x4 x5
        let q = QuadraticForm::from_values(6, |v| {
            let b = |i: usize| v >> i & 1 == 1;
            (b(0) & b(1)) ^ (b(2) & b(3)) ^ (b(4) & b(5))
        })
        .unwrap();
        assert_eq!(q.form_type(), Some(FormType::Plus));
        assert!(is_totally_singular(&Subspace::span([0b000001, 0b000100, 0b010000], 6), &q));
        assert!(is_totally_singular(&Subspace::zero(6), &q));
        assert!(!is_totally_singular(&Subspace::span([0b000011], 6), &q));
        // x0^2 + x0 x1 + x1^2 is anisotropic on a plane: minus type in dim 2
        let m = QuadraticForm::from_values(2, |v| v != 0).unwrap();
        assert_eq!(m.form_type(), Some(FormType::Minus));
    }

    #[test]
    fn non_quadratic_values_rejected() {
        // cubic term x0 x1 x2
        assert!(QuadraticForm::from_values(3, |v| v == 0b111).is_err());
    }
}
