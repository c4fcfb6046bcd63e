//! GF(2)-modules from sections of 2-groups, quadratic forms from squaring,
//! the indecomposable module `W`, and classification of complements.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::Word;
use crate::gf2::{all_subspaces, is_totally_isotropic, is_totally_singular, Gf2Matrix, QuadraticForm, Subspace};
use crate::mataction::GeneratorTable;
use crate::perm::{
    fingerprint, subgroup_conjugacy_classes, subgroup_key, PermGroup, Permutation, StructureFingerprint,
};

/// A vector space with a list of acting matrices (row vectors, `v -> v M`).
#[derive(Clone, Debug)]
pub struct GroupModule {
    dim: usize,
    actors: Vec<Gf2Matrix>,
}

impl GroupModule {
    pub fn new(dim: usize, actors: Vec<Gf2Matrix>) -> Result<Self> {
        for m in &actors {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::Dimension(format!("actor is not {dim}x{dim}")));
            }
            if !m.is_invertible() {
                return Err(Error::Singular);
            }
        }
        Ok(GroupModule { dim, actors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actors(&self) -> &[Gf2Matrix] {
        &self.actors
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        self.actors.iter().all(|m| s.is_invariant(m))
    }

    /// Every invariant subspace, by filtering the full subspace list (dimension at most 7).
    pub fn invariant_subspaces(&self) -> Result<Vec<Subspace>> {
        Ok(all_subspaces(self.dim)?.into_iter().filter(|s| self.is_invariant(s)).collect())
    }

    /// Smallest invariant subspace containing `v`.
    pub fn spin(&self, v: u64) -> Subspace {
        let mut basis = vec![v];
        let mut s = Subspace::span([v], self.dim);
        let mut k = 0;
        while k < basis.len() {
            let b = basis[k];
            for m in &self.actors {
                let w = m.apply_row(b);
                if !s.contains(w) {
                    s = Subspace::span(s.basis().iter().copied().chain([w]), self.dim);
                    basis.push(w);
                }
            }
            k += 1;
        }
        s
    }

    /// Every invariant subspace, as sums of cyclic submodules closed to a fixed point.
    /// Works for any dimension the seed loop can afford (`2^dim - 1` seeds).
    pub fn invariant_subspaces_by_spinning(&self) -> Result<Vec<Subspace>> {
        if self.dim > 20 {
            return Err(Error::TooLarge { what: "module dimension for spinning", size: self.dim as u128, limit: 20 });
        }
        let mut found: HashSet<Subspace> = HashSet::new();
        found.insert(Subspace::zero(self.dim));
        let cyclic: Vec<Subspace> = (1..1u64 << self.dim).map(|v| self.spin(v)).collect();
        let mut cyclic_set: Vec<Subspace> = cyclic.into_iter().collect::<HashSet<_>>().into_iter().collect();
        cyclic_set.sort();
        let mut frontier: Vec<Subspace> = cyclic_set.clone();
        found.extend(cyclic_set.iter().cloned());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for c in &cyclic_set {
                    let s = a.sum(c)?;
                    if found.insert(s.clone()) {
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<Subspace> = found.into_iter().collect();
        out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Whether `line` (a 1-space) has an invariant complement inside the module.
    pub fn has_invariant_complement(&self, sub: &Subspace) -> Result<bool> {
        let want = self.dim - sub.dim();
        Ok(self
            .invariant_subspaces()?
            .iter()
            .any(|s| s.dim() == want && s.intersection(sub).map(|i| i.dim() == 0).unwrap_or(false)))
    }
}

/// An elementary abelian section `P/K` of a permutation 2-group with explicit coordinates.
pub struct Section {
    dim: usize,
    basis: Vec<Permutation>,
    coords: HashMap<Permutation, u64>,
}

impl Section {
    /// `k` must be normal in `p` with elementary abelian quotient.
    pub fn new(p: &PermGroup, k: &PermGroup) -> Result<Section> {
        if !k.is_normal_in(p) {
            return Err(Error::Verification("kernel is not normal".into()));
        }
        for (i, a) in p.gens().iter().enumerate() {
            if !k.contains(&a.then(a)) {
                return Err(Error::Verification("quotient is not elementary abelian".into()));
            }
            for b in &p.gens()[i + 1..] {
                if !k.contains(&Permutation::commutator(a, b)) {
                    return Err(Error::Verification("quotient is not abelian".into()));
                }
            }
        }
        let mut basis: Vec<Permutation> = Vec::new();
        let mut span = k.clone();
        for g in p.gens() {
            if !span.contains(g) {
                basis.push(g.clone());
                let gens: Vec<Permutation> = k.gens().iter().chain(basis.iter()).cloned().collect();
                span = PermGroup::new(p.degree(), gens)?;
            }
        }
        let dim = basis.len();
        if dim > 20 {
            return Err(Error::TooLarge { what: "section dimension", size: dim as u128, limit: 20 });
        }
        let kernel = k.elements()?;
        let mut coords = HashMap::with_capacity(kernel.len() << dim);
        for c in 0..1u64 << dim {
            let lift = Section::product(&basis, c, p.identity());
            for x in &kernel {
                coords.insert(lift.then(x), c);
            }
        }
        if coords.len() as u128 != p.order() {
            return Err(Error::Verification("section coordinates do not cover the group".into()));
        }
        Ok(Section { dim, basis, coords })
    }

    fn product(basis: &[Permutation], c: u64, id: Permutation) -> Permutation {
        basis.iter().enumerate().filter(|(i, _)| c >> i & 1 == 1).fold(id, |acc, (_, b)| acc.then(b))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self, g: &Permutation) -> Option<u64> {
        self.coords.get(g).copied()
    }

    pub fn lift(&self, c: u64) -> Permutation {
        let id = Permutation::identity(self.basis[0].degree());
        Section::product(&self.basis, c, id)
    }

    /// Image of a subgroup of `P` in the section.
    pub fn subspace_of(&self, h: &PermGroup) -> Result<Subspace> {
        let vs = h
            .gens()
            .iter()
            .map(|g| self.coords(g).ok_or_else(|| Error::NotInGroup("subgroup element outside the section".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(vs, self.dim))
    }

    /// Matrix of conjugation by `x`.
    pub fn actor(&self, x: &Permutation) -> Result<Gf2Matrix> {
        let rows = self
            .basis
            .iter()
            .map(|b| self.coords(&b.conjugate(x)).ok_or_else(|| Error::Verification("actor does not normalise".into())))
            .collect::<Result<Vec<_>>>()?;
        Gf2Matrix::from_rows(rows, self.dim)
    }

    pub fn module(&self, actors: &[Permutation]) -> Result<GroupModule> {
        GroupModule::new(self.dim, actors.iter().map(|x| self.actor(x)).collect::<Result<_>>()?)
    }

    /// The form `q(a K) = 1` iff `a^2 = z`, for a central involution `z` with `K = <z>`.
    pub fn squaring_form(&self, z: &Permutation) -> Result<QuadraticForm> {
        let id = Permutation::identity(z.degree());
        let mut values: Vec<Option<bool>> = vec![None; 1 << self.dim];
        for (g, &c) in &self.coords {
            let sq = g.then(g);
            let v = if sq == *z {
                true
            } else if sq == id {
                false
            } else {
                return Err(Error::Verification("a square lies outside <z>".into()));
            };
            match values[c as usize] {
                Some(w) if w != v => return Err(Error::Verification("squaring is not constant on cosets".into())),
                _ => values[c as usize] = Some(v),
            }
        }
        QuadraticForm::from_values(self.dim, |v| values[v as usize] == Some(true))
    }

    /// Checks that the polar form of `q` is the commutator form `[a,b] = z`.
    pub fn polar_is_commutator_form(&self, q: &QuadraticForm, z: &Permutation) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let c = Permutation::commutator(&self.basis[i], &self.basis[j]);
                q.polar(1 << i, 1 << j) == (c == *z)
            })
        })
    }
}

/// Outcome of the count of invariant `(n-1)`-spaces in `Q_n / <r>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotropicCount {
    pub n: usize,
    pub invariant_subspaces: usize,
    /// Quadratic form vanishes on the subspace.
    pub totally_singular: usize,
    /// Polar bilinear form vanishes on the subspace.
    pub totally_isotropic: usize,
}

/// The module `Q_n / <r>` for `B_n ∩ C_n`, with the squaring form, from the generator table.
pub fn q_module(n: usize) -> Result<(GroupModule, QuadraticForm)> {
    let t = GeneratorTable::new(n)?;
    let d = t.dim();
    // coordinates: (i,1) for i = 2..n, then (n+1, j) for j = 2..n (1-indexed)
    let mut positions = Vec::new();
    for i in 2..=n {
        positions.push((i - 1, 0));
    }
    for j in 2..=n {
        positions.push((d - 1, j - 1));
    }
    let dim = positions.len();
    let lift = |v: u64| -> Gf2Matrix {
        let mut m = Gf2Matrix::identity(d);
        for (k, &(r, c)) in positions.iter().enumerate() {
            if v >> k & 1 == 1 {
                m.set(r, c, true);
            }
        }
        m
    };
    let coords = |m: &Gf2Matrix| -> Result<u64> {
        let mut rest = m.clone();
        let mut v = 0;
        for (k, &(r, c)) in positions.iter().enumerate() {
            if m.get(r, c) {
                v |= 1 << k;
                rest.set(r, c, false);
            }
        }
        rest.set(d - 1, 0, false);
        if rest != Gf2Matrix::identity(d) {
            return Err(Error::Verification("conjugate left Q_n".into()));
        }
        Ok(v)
    };
    let mut actors = Vec::new();
    for k in t.shared_indices() {
        let g = &t.gens()[k].matrix;
        let gi = g.inverse().ok_or(Error::Singular)?;
        let rows = (0..dim).map(|b| coords(&gi.mul(&lift(1 << b)).mul(g))).collect::<Result<Vec<_>>>()?;
        actors.push(Gf2Matrix::from_rows(rows, dim)?);
    }
    let q = QuadraticForm::from_values(dim, |v| {
        let m = lift(v);
        m.mul(&m).get(d - 1, 0)
    })?;
    Ok((GroupModule::new(dim, actors)?, q))
}

/// Counts the `B_n ∩ C_n`-invariant `(n-1)`-subspaces of `Q_n/<r>` that are totally
/// singular, and separately those that are totally isotropic for the polar form.
pub fn count_invariant_isotropic(n: usize) -> Result<IsotropicCount> {
    if !(4..=6).contains(&n) {
        return Err(Error::Range(format!("n = {n} outside 4..=6")));
    }
    let (m, q) = q_module(n)?;
    let subs = if m.dim() <= 7 { m.invariant_subspaces()? } else { m.invariant_subspaces_by_spinning()? };
    let target: Vec<&Subspace> = subs.iter().filter(|s| s.dim() == n - 1).collect();
    Ok(IsotropicCount {
        n,
        invariant_subspaces: subs.len(),
        totally_singular: target.iter().filter(|s| is_totally_singular(s, &q)).count(),
        totally_isotropic: target.iter().filter(|s| is_totally_isotropic(s, &q)).count(),
    })
}

/// The 64-element module `W`: pairs `(v, a)` with `v` in `V = F_2^3` and `a` in `V*`,
/// added with the twist `eps`. Elements are packed as `v | a << 3`; a functional
/// `a` acts by `v -> parity(v & a)`.
pub struct WModule {
    /// Images of the coordinate basis under the packed-pair bijection.
    basis: Vec<u8>,
    coords: [u8; 64],
    module: GroupModule,
    form: QuadraticForm,
}

fn parity(x: u8) -> bool {
    x.count_ones() % 2 == 1
}

/// `eps(a, b)`: the nonzero vector of `ker a ∩ ker b`, or 0 when `a = b` or one is 0.
pub fn w_epsilon(a: u8, b: u8) -> u8 {
    if a == b || a == 0 || b == 0 {
        return 0;
    }
    (1..8u8).find(|&v| !parity(v & a) && !parity(v & b)).expect("two distinct functionals share a kernel vector")
}

pub fn w_add(x: u8, y: u8) -> u8 {
    let (v, a) = (x & 7, x >> 3);
    let (w, b) = (y & 7, y >> 3);
    ((v ^ w ^ w_epsilon(a, b)) & 7) | (a ^ b) << 3
}

/// `q_W(v, a) = 1` iff `a != 0` and `v ∈ ker a`.
pub fn w_quadratic(x: u8) -> bool {
    let (v, a) = (x & 7, x >> 3);
    a != 0 && !parity(v & a)
}

/// Action of `g ∈ GL_3(2)` on a packed pair: `(v, a) -> (v g, a g^{-T})`.
pub fn w_act(g: &Gf2Matrix, x: u8) -> u8 {
    let gi_t = g.inverse().expect("invertible").transpose();
    let v = g.apply_row((x & 7) as u64) as u8;
    let a = gi_t.apply_row((x >> 3) as u64) as u8;
    v | a << 3
}

/// Generators of `L_3(2)`: the six root elements of `GL_3(2)`.
pub fn l32_generators() -> Vec<Gf2Matrix> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                out.push(Gf2Matrix::elementary(3, i, j));
            }
        }
    }
    out
}

impl WModule {
    pub fn build() -> Result<WModule> {
        // abelian group axioms, exhaustively
        for x in 0..64u8 {
            if w_add(x, 0) != x || w_add(x, x) != 0 {
                return Err(Error::Verification("identity or inverse law fails in W".into()));
            }
            for y in 0..64u8 {
                if w_add(x, y) != w_add(y, x) {
                    return Err(Error::Verification("W is not commutative".into()));
                }
                for z in 0..64u8 {
                    if w_add(w_add(x, y), z) != w_add(x, w_add(y, z)) {
                        return Err(Error::Verification("W is not associative".into()));
                    }
                }
            }
        }
        let gens = l32_generators();
        for g in &gens {
            for x in 0..64u8 {
                for y in 0..64u8 {
                    if w_act(g, w_add(x, y)) != w_add(w_act(g, x), w_act(g, y)) {
                        return Err(Error::Verification("L_3(2) does not act additively on W".into()));
                    }
                }
            }
        }
        let basis: Vec<u8> = vec![1, 2, 4, 8, 16, 32];
        let mut coords = [u8::MAX; 64];
        for c in 0..64u8 {
            let x = (0..6).filter(|i| c >> i & 1 == 1).fold(0, |acc, i| w_add(acc, basis[i]));
            coords[x as usize] = c;
        }
        if coords.contains(&u8::MAX) {
            return Err(Error::Verification("W coordinates are not a bijection".into()));
        }
        let actors = gens
            .iter()
            .map(|g| Gf2Matrix::from_rows(basis.iter().map(|&b| coords[w_act(g, b) as usize] as u64).collect(), 6))
            .collect::<Result<Vec<_>>>()?;
        let module = GroupModule::new(6, actors)?;
        let lifts = {
            let mut l = [0u8; 64];
            for x in 0..64u8 {
                l[coords[x as usize] as usize] = x;
            }
            l
        };
        let form = QuadraticForm::from_values(6, |c| w_quadratic(lifts[c as usize]))?;
        Ok(WModule { basis, coords, module, form })
    }

    pub fn module(&self) -> &GroupModule {
        &self.module
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn basis(&self) -> &[u8] {
        &self.basis
    }

    /// Coordinates of a packed pair.
    pub fn coords(&self, x: u8) -> u64 {
        self.coords[x as usize] as u64
    }

    pub fn subspace(&self, elements: &[u8]) -> Subspace {
        Subspace::span(elements.iter().map(|&x| self.coords(x)), 6)
    }

    /// `V_0 = {(v, 0)}`.
    pub fn v0(&self) -> Subspace {
        self.subspace(&[1, 2, 4])
    }

    /// Whether a set of packed pairs is closed under the twisted addition.
    pub fn is_subgroup(elements: &[u8]) -> bool {
        elements.iter().all(|&x| elements.iter().all(|&y| elements.contains(&w_add(x, y))))
    }

    /// The witnesses `U_2` and `U_3` for the stabiliser of `v = e0` and `U = <e1, e2>`:
    /// `U_2 = {0, (v, a_i)}`, `U_3 = {0, (u_i + v, a_i)}` with `ker a_i = <v, u_i>`.
    pub fn witnesses() -> (Vec<u8>, Vec<u8>) {
        let v = 1u8;
        let u = [2u8, 4, 6];
        let alpha = [4u8, 2, 6];
        let u2 = std::iter::once(0).chain(alpha.iter().map(|&a| v | a << 3)).collect();
        let u3 = std::iter::once(0).chain(u.iter().zip(&alpha).map(|(&ui, &a)| (ui ^ v) | a << 3)).collect();
        (u2, u3)
    }

    /// Generators of the `S_3` fixing `e0` and the 2-space `<e1, e2>`.
    pub fn witness_stabiliser() -> Vec<Gf2Matrix> {
        vec![
            Gf2Matrix::from_rows(vec![1, 4, 2], 3).expect("permutation matrix"),
            Gf2Matrix::from_rows(vec![1, 4, 6], 3).expect("invertible"),
        ]
    }

    /// Dimension of the space of quadratic forms invariant under the action.
    pub fn invariant_form_dimension(&self) -> usize {
        invariant_quadratic_forms_dim(&self.module)
    }
}

/// `V ⊕ V*` for `L_3(2)`, for comparison with `W`.
pub fn v_plus_vstar() -> Result<GroupModule> {
    let actors = l32_generators()
        .iter()
        .map(|g| {
            let gi_t = g.inverse().ok_or(Error::Singular)?.transpose();
            let rows: Vec<u64> = (0..3).map(|i| g.rows()[i]).chain((0..3).map(|i| gi_t.rows()[i] << 3)).collect();
            Gf2Matrix::from_rows(rows, 6)
        })
        .collect::<Result<Vec<_>>>()?;
    GroupModule::new(6, actors)
}

/// Dimension of the space of quadratic forms `q` with `q(v M) = q(v)` for every actor.
/// Monomials `x_i x_j` (`i <= j`) are the unknowns; each `(v, M)` gives a linear equation.
pub fn invariant_quadratic_forms_dim(m: &GroupModule) -> usize {
    let d = m.dim();
    let monomials: Vec<(usize, usize)> = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).collect();
    let eval = |v: u64| -> u128 {
        monomials
            .iter()
            .enumerate()
            .filter(|(_, &(i, j))| v >> i & 1 == 1 && v >> j & 1 == 1)
            .fold(0u128, |acc, (k, _)| acc | 1 << k)
    };
    let mut rows: Vec<u128> = Vec::new();
    for a in m.actors() {
        for v in 0..1u64 << d {
            let r = eval(v) ^ eval(a.apply_row(v));
            if r != 0 {
                rows.push(r);
            }
        }
    }
    // rank over GF(2)
    let mut rank = 0;
    for bit in 0..monomials.len() {
        if let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) {
            rows.swap(rank, p);
            let piv = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row >> bit & 1 == 1 {
                    *row ^= piv;
                }
            }
            rank += 1;
        }
    }
    monomials.len() - rank
}

/// Lifts of a two-generator presentation found inside a complement, first in
/// breadth-first element order.
pub fn find_generating_pair(l: &PermGroup, relators: &[Word]) -> Result<(Permutation, Permutation)> {
    let elements = l.elements()?;
    let order = l.order();
    let id = l.identity();
    for x in &elements {
        for y in &elements {
            let imgs = [x.clone(), y.clone()];
            if relators.iter().all(|r| eval_perm(r, &imgs, &id) == id)
                && PermGroup::new(l.degree(), imgs.to_vec())?.order() == order
            {
                return Ok((x.clone(), y.clone()));
            }
        }
    }
    Err(Error::NoSolution("no generating pair satisfies the presentation".into()))
}

pub fn eval_perm(w: &Word, images: &[Permutation], id: &Permutation) -> Permutation {
    w.eval(images, id.clone(), |a, b| a.then(b), |a| a.inverse())
}

/// One conjugacy class of complements.
#[derive(Clone, Debug, Serialize)]
pub struct ComplementClass {
    /// Generators `X, Y` of a representative preimage (together with `z`).
    #[serde(skip)]
    pub representative: PermGroup,
    pub class_size: usize,
    pub fingerprint: StructureFingerprint,
    /// Whether `<z>` has an invariant complement in each listed module.
    pub semisimple: Vec<bool>,
}

pub struct ComplementReport {
    pub pairs_checked: usize,
    pub pairs_kept: usize,
    pub complements: usize,
    pub classes: Vec<ComplementClass>,
}

/// Classifies complements to `Q/<z>` in `G/<z>` whose generators satisfy `relators`.
///
/// For each pair `(u x, v y)` with `u, v` in `Q`, keeps those whose relator values
/// lie in `{1, z}`; their preimages `<u x, v y, z>` are grouped into `G`-classes.
/// Every complement has exactly one element over each of the cosets `xQ`, `yQ`
/// in `G/<z>`, so the sweep meets every complement. `flag_subgroups` are
/// elementary abelian normal subgroups containing `z`; for each, the report says
/// whether `<z>` has an invariant complement under the class representative.
pub fn classify_complements(
    g: &PermGroup,
    q: &PermGroup,
    z: &Permutation,
    lifts: (&Permutation, &Permutation),
    relators: &[Word],
    flag_subgroups: &[&PermGroup],
) -> Result<ComplementReport> {
    let q_elems = q.elements()?;
    let id = g.identity();
    let zid = [id.clone(), z.clone()];
    let kept: Vec<(Permutation, Permutation)> = q_elems
        .par_iter()
        .flat_map_iter(|u| {
            let x = u.then(lifts.0);
            let id = &id;
            let zid = &zid;
            q_elems.iter().filter_map(move |v| {
                let y = v.then(lifts.1);
                let imgs = [x.clone(), y.clone()];
                relators.iter().all(|r| zid.contains(&eval_perm(r, &imgs, id))).then_some((x.clone(), y))
            })
        })
        .collect();
    let quotient_order = g.order() / q.order();
    let mut subs: Vec<PermGroup> = Vec::new();
    let mut keys: HashSet<Vec<Permutation>> = HashSet::new();
    for (x, y) in &kept {
        let p = PermGroup::new(g.degree(), vec![x.clone(), y.clone(), z.clone()])?;
        if p.order() != 2 * quotient_order {
            return Err(Error::Verification(format!("preimage of order {} is not a complement", p.order())));
        }
        if keys.insert(subgroup_key(&p)?) {
            subs.push(p);
        }
    }
    if subs.is_empty() {
        return Err(Error::NoSolution("no lift satisfies the presentation".into()));
    }
    let classes = subgroup_conjugacy_classes(g, &subs)?;
    let mut out = Vec::new();
    for class in &classes.classes {
        let rep = subs[class[0].0].clone();
        let fp = fingerprint(&rep)?;
        let mut flags = Vec::new();
        for e in flag_subgroups {
            let sec = Section::new(e, &PermGroup::trivial(g.degree()))?;
            let module = sec.module(rep.gens())?;
            let zline = Subspace::span([sec.coords(z).ok_or_else(|| Error::NotInGroup("z".into()))?], sec.dim());
            flags.push(module.has_invariant_complement(&zline)?);
        }
        out.push(ComplementClass { representative: rep, class_size: class.len(), fingerprint: fp, semisimple: flags });
    }
    Ok(ComplementReport { pairs_checked: q_elems.len() * q_elems.len(), pairs_kept: kept.len(), complements: subs.len(), classes: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w_module_facts() {
        let w = WModule::build().unwrap();
        let subs = w.module().invariant_subspaces().unwrap();
        assert_eq!(subs.len(), 3);
        assert!(subs.contains(&w.v0()));
        assert!(w.module().actors().iter().all(|m| w.form().is_invariant(m)));
        assert_eq!(w.invariant_form_dimension(), 1);
        assert_eq!(v_plus_vstar().unwrap().invariant_subspaces().unwrap().len(), 4);
    }

    #[test]
    fn w_witnesses() {
        let (u2, u3) = WModule::witnesses();
        assert!(WModule::is_subgroup(&u2) && WModule::is_subgroup(&u3));
        assert!(u2.iter().any(|&x| w_quadratic(x)));
        assert!(u3.iter().any(|&x| w_quadratic(x)));
        for g in WModule::witness_stabiliser() {
            for set in [&u2, &u3] {
                assert!(set.iter().all(|&x| set.contains(&w_act(&g, x))));
            }
        }
    }

    #[test]
    fn q_values_on_v0_vanish() {
        for v in 0..8u8 {
            assert!(!w_quadratic(v));
        }
    }

    #[test]
    fn spinning_agrees_with_filtering() {
        let (m, _) = q_module(4).unwrap();
        let a = m.invariant_subspaces().unwrap();
        let b = m.invariant_subspaces_by_spinning().unwrap();
        let mut a = a;
        a.sort_by(|x, y| x.dim().cmp(&y.dim()).then_with(|| x.cmp(y)));
        assert_eq!(a, b);
    }
}
