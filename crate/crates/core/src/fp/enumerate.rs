//! Todd–Coxeter coset enumeration (HLT with lookahead, and Felsch).

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::presentation::Presentation;
use super::word::Word;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

const UNDEF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Hlt,
    Felsch,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub strategy: Strategy,
    /// Bound on coset rows held at once, live or not yet reclaimed.
    pub max_cosets: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { strategy: Strategy::Hlt, max_cosets: 5_000_000 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumStats {
    pub defined: u64,
    pub max_live: usize,
    pub coincidences: u64,
    pub compactions: u32,
    pub elapsed_ms: u64,
}

/// A closed, standardized coset table: `image(c, g)` for each coset and generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    index: usize,
    data: Vec<u32>,
    stats: EnumStats,
}

impl CosetTable {
    pub(crate) fn from_parts(ngens: usize, index: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != ngens * index {
            return Err(Error::Cache("table size does not match its header".into()));
        }
        if data.iter().any(|&x| x as usize >= index) {
            return Err(Error::Cache("table entry out of range".into()));
        }
        Ok(CosetTable { ngens, index, data, stats: EnumStats::default() })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn num_gens(&self) -> usize {
        self.ngens
    }

    pub fn stats(&self) -> &EnumStats {
        &self.stats
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn image(&self, coset: usize, gen: usize) -> u32 {
        self.data[coset * self.ngens + gen]
    }

    pub fn permutation(&self, gen: usize) -> Result<Permutation> {
        Permutation::from_images((0..self.index).map(|c| self.image(c, gen)).collect())
    }

    /// Coset reached from `coset` by reading `w`.
    pub fn trace(&self, coset: usize, w: &Word, inverses: &[Permutation]) -> usize {
        let mut c = coset;
        for &l in w.letters() {
            let g = l.unsigned_abs() as usize - 1;
            c = if l > 0 { self.image(c, g) as usize } else { inverses[g].image(c as u32) as usize };
        }
        c
    }

    /// Checks that the table is a valid closed coset table for the presentation
    /// and subgroup: bijective columns, relators trivial everywhere, and
    /// subgroup words fixing coset 0.
    pub fn validate(&self, p: &Presentation, subgroup: &[Word]) -> Result<()> {
        if p.num_gens() != self.ngens {
            return Err(Error::Verification("generator count mismatch".into()));
        }
        let perms = (0..self.ngens).map(|g| self.permutation(g)).collect::<Result<Vec<_>>>()?;
        let inverses: Vec<Permutation> = perms.iter().map(|q| q.inverse()).collect();
        for (i, r) in p.relators().iter().enumerate() {
            for c in 0..self.index {
                if self.trace(c, r, &inverses) != c {
                    return Err(Error::Verification(format!("relator {i} is not trivial at coset {c}")));
                }
            }
        }
        for (i, w) in subgroup.iter().enumerate() {
            if self.trace(0, w, &inverses) != 0 {
                return Err(Error::Verification(format!("subgroup generator {i} moves coset 0")));
            }
        }
        Ok(())
    }

    /// Permutation group generated by the generator columns.
    pub fn permutation_image(&self) -> Result<PermGroup> {
        let gens = (0..self.ngens).map(|g| self.permutation(g)).collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.index, gens)
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the group presented by `p`.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], opts: EnumOptions) -> Result<CosetTable> {
    if opts.max_cosets == 0 {
        return Err(Error::Range("max_cosets must be at least 1".into()));
    }
    let start = Instant::now();
    let mut e = Enumerator::new(p, subgroup, opts.max_cosets);
    match opts.strategy {
        Strategy::Hlt => e.run_hlt()?,
        Strategy::Felsch => e.run_felsch()?,
    }
    let mut t = e.standardize(p.num_gens());
    t.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(t)
}

struct Full;

struct Enumerator {
    ncols: usize,
    /// column for letter `l`: `letter_col[gen][0]` forward, `[1]` inverse
    letter_col: Vec<[usize; 2]>,
    inv_col: Vec<usize>,
    relators: Vec<Vec<usize>>,
    subgroup: Vec<Vec<usize>>,
    /// cyclic conjugates of relators grouped by their first column
    conjugates: Vec<Vec<Vec<usize>>>,
    table: Vec<u32>,
    forward: Vec<u32>,
    next_id: u32,
    live: usize,
    capacity: usize,
    queue: Vec<u32>,
    deductions: Vec<(u32, usize)>,
    track_deductions: bool,
    stats: EnumStats,
}

impl Enumerator {
    fn new(p: &Presentation, subgroup: &[Word], capacity: usize) -> Self {
        let inv = p.involutions();
        let mut letter_col = Vec::with_capacity(p.num_gens());
        let mut inv_col = Vec::new();
        for &is_inv in &inv {
            let c = inv_col.len();
            if is_inv {
                letter_col.push([c, c]);
                inv_col.push(c);
            } else {
                letter_col.push([c, c + 1]);
                inv_col.push(c + 1);
                inv_col.push(c);
            }
        }
        let ncols = inv_col.len();
        let to_cols = |w: &Word| -> Vec<usize> {
            w.letters()
                .iter()
                .map(|&l| letter_col[l.unsigned_abs() as usize - 1][usize::from(l < 0)])
                .collect()
        };
        let mut relators: Vec<Vec<usize>> = Vec::new();
        for r in p.relators() {
            let cols = to_cols(r);
            // x^2 for a shared involution column holds automatically
            if cols.len() == 2 && cols[0] == cols[1] && inv_col[cols[0]] == cols[0] {
                continue;
            }
            if !relators.contains(&cols) {
                relators.push(cols);
            }
        }
        let mut conjugates = vec![Vec::new(); ncols];
        for r in &relators {
            for k in 0..r.len() {
                let rot: Vec<usize> = r[k..].iter().chain(&r[..k]).copied().collect();
                if !conjugates[rot[0]].contains(&rot) {
                    conjugates[rot[0]].push(rot);
                }
            }
        }
        let subgroup = subgroup.iter().map(|w| to_cols(&w.free_reduce())).collect();
        let mut e = Enumerator {
            ncols,
            letter_col,
            inv_col,
            relators,
            subgroup,
            conjugates,
            table: Vec::new(),
            forward: Vec::new(),
            next_id: 0,
            live: 0,
            capacity,
            queue: Vec::new(),
            deductions: Vec::new(),
            track_deductions: false,
            stats: EnumStats::default(),
        };
        e.new_coset().ok();
        e
    }

    #[inline]
    fn get(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.ncols + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.table[c as usize * self.ncols + col] = v;
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn new_coset(&mut self) -> Result<u32, Full> {
        if self.next_id as usize >= self.capacity {
            return Err(Full);
        }
        let c = self.next_id;
        self.next_id += 1;
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.forward.push(c);
        self.live += 1;
        self.stats.defined += 1;
        self.stats.max_live = self.stats.max_live.max(self.live);
        Ok(c)
    }

    fn define(&mut self, c: u32, col: usize) -> Result<u32, Full> {
        let d = self.new_coset()?;
        self.set(c, col, d);
        self.set(d, self.inv_col[col], c);
        if self.track_deductions {
            self.deductions.push((c, col));
        }
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.forward[r as usize] != r {
            r = self.forward[r as usize];
        }
        let mut x = c;
        while self.forward[x as usize] != r {
            let next = self.forward[x as usize];
            self.forward[x as usize] = r;
            x = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.forward[drop as usize] = keep;
        self.live -= 1;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.stats.coincidences += 1;
        self.merge(a, b);
        let mut k = 0;
        while k < self.queue.len() {
            let e = self.queue[k];
            k += 1;
            for col in 0..self.ncols {
                let f = self.get(e, col);
                if f == UNDEF {
                    continue;
                }
                let icol = self.inv_col[col];
                if self.get(f, icol) == e {
                    self.set(f, icol, UNDEF);
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let g = self.get(e1, col);
                if g != UNDEF {
                    self.merge(f1, g);
                } else {
                    let h = self.get(f1, icol);
                    if h != UNDEF {
                        self.merge(e1, h);
                    } else {
                        self.set(e1, col, f1);
                        self.set(f1, icol, e1);
                        if self.track_deductions {
                            self.deductions.push((e1, col));
                        }
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `w` from coset `c`; fills gaps by defining new cosets when `fill`.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> Result<(), Full> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut i = 0usize;
        let mut b = c;
        let mut j = w.len() - 1;
        loop {
            while i <= j {
                let x = self.get(f, w[i]);
                if x == UNDEF {
                    break;
                }
                f = x;
                i += 1;
            }
            if i > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j >= i {
                let x = self.get(b, self.inv_col[w[j]]);
                if x == UNDEF {
                    break;
                }
                b = x;
                if j == 0 {
                    // whole word read backwards; i must be 0 here
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
                self.set(f, w[i], b);
                self.set(b, self.inv_col[w[i]], f);
                if self.track_deductions {
                    self.deductions.push((f, w[i]));
                }
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn scan_subgroup(&mut self) -> Result<(), Full> {
        let subgroup = std::mem::take(&mut self.subgroup);
        let mut out = Ok(());
        for w in &subgroup {
            if let Err(e) = self.scan(0, w, true) {
                out = Err(e);
                break;
            }
        }
        self.subgroup = subgroup;
        out
    }

    fn limit_error(&self) -> Error {
        Error::CosetLimit { limit: self.capacity, live: self.live, defined: self.stats.defined }
    }

    /// Renumbers live cosets consecutively, preserving order; returns the new id of
    /// the first live coset at or after `pointer`.
    fn compact(&mut self, pointer: u32) -> u32 {
        let n = self.next_id as usize;
        let mut map = vec![UNDEF; n];
        let mut k = 0u32;
        let mut new_pointer = UNDEF;
        for c in 0..n {
            if self.forward[c] == c as u32 {
                if new_pointer == UNDEF && c as u32 >= pointer {
                    new_pointer = k;
                }
                map[c] = k;
                k += 1;
            }
        }
        let mut table = Vec::with_capacity(k as usize * self.ncols);
        for c in 0..n {
            if map[c] != UNDEF {
                let row = &self.table[c * self.ncols..(c + 1) * self.ncols];
                table.extend(row.iter().map(|&x| if x == UNDEF { UNDEF } else { map[x as usize] }));
            }
        }
        self.table = table;
        self.forward = (0..k).collect();
        self.next_id = k;
        self.stats.compactions += 1;
        if new_pointer == UNDEF {
            k
        } else {
            new_pointer
        }
    }

    /// Scans every live coset under every relator without defining anything.
    fn lookahead(&mut self) {
        let relators = std::mem::take(&mut self.relators);
        let mut c = 0u32;
        while c < self.next_id {
            if self.is_live(c) {
                for r in &relators {
                    if !self.is_live(c) {
                        break;
                    }
                    let _ = self.scan(c, r, false);
                }
            }
            c += 1;
        }
        self.relators = relators;
    }

    fn run_hlt(&mut self) -> Result<()> {
        let mut c = 0u32;
        loop {
            let step = self.hlt_from(&mut c);
            match step {
                Ok(()) => return Ok(()),
                Err(Full) => {
                    self.lookahead();
                    c = self.compact(c);
                    if self.next_id as usize >= self.capacity {
                        return Err(self.limit_error());
                    }
                }
            }
        }
    }

    fn hlt_from(&mut self, c: &mut u32) -> Result<(), Full> {
        if *c == 0 {
            self.scan_subgroup()?;
        }
        let relators = std::mem::take(&mut self.relators);
        let result = (|| {
            while *c < self.next_id {
                if self.is_live(*c) {
                    for r in &relators {
                        if !self.is_live(*c) {
                            break;
                        }
                        self.scan(*c, r, true)?;
                    }
                    for col in 0..self.ncols {
                        if !self.is_live(*c) {
                            break;
                        }
                        if self.get(*c, col) == UNDEF {
                            self.define(*c, col)?;
                        }
                    }
                }
                *c += 1;
            }
            Ok(())
        })();
        self.relators = relators;
        result
    }

    fn process_deductions(&mut self) {
        while let Some((c, col)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            let n = self.conjugates[col].len();
            for k in 0..n {
                if !self.is_live(c) {
                    break;
                }
                let w = std::mem::take(&mut self.conjugates[col][k]);
                let _ = self.scan(c, &w, false);
                self.conjugates[col][k] = w;
            }
            if !self.is_live(c) {
                continue;
            }
            let d = self.get(c, col);
            if d == UNDEF {
                continue;
            }
            let icol = self.inv_col[col];
            let n = self.conjugates[icol].len();
            for k in 0..n {
                if !self.is_live(d) {
                    break;
                }
                let w = std::mem::take(&mut self.conjugates[icol][k]);
                let _ = self.scan(d, &w, false);
                self.conjugates[icol][k] = w;
            }
        }
    }

    fn run_felsch(&mut self) -> Result<()> {
        self.track_deductions = true;
        if self.scan_subgroup().is_err() {
            return Err(self.limit_error());
        }
        self.process_deductions();
        let mut c = 0u32;
        loop {
            while c < self.next_id && !(self.is_live(c) && (0..self.ncols).any(|col| self.get(c, col) == UNDEF)) {
                c += 1;
            }
            if c >= self.next_id {
                return Ok(());
            }
            let col = (0..self.ncols).find(|&col| self.get(c, col) == UNDEF).expect("undefined entry");
            if self.define(c, col).is_err() {
                c = self.compact(c);
                if self.define(c, col).is_err() {
                    return Err(self.limit_error());
                }
            }
            self.process_deductions();
        }
    }

    fn standardize(&mut self, ngens: usize) -> CosetTable {
        let n = self.next_id as usize;
        let mut map = vec![UNDEF; n];
        let mut order = Vec::with_capacity(self.live);
        map[0] = 0;
        order.push(0u32);
        let mut k = 0;
        while k < order.len() {
            let c = order[k];
            for g in 0..ngens {
                let d = self.get(c, self.letter_col[g][0]);
                if map[d as usize] == UNDEF {
                    map[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
            k += 1;
        }
        let mut data = Vec::with_capacity(order.len() * ngens);
        for &c in &order {
            for g in 0..ngens {
                data.push(map[self.get(c, self.letter_col[g][0]) as usize]);
            }
        }
        CosetTable { ngens, index: order.len(), data, stats: self.stats }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::parse_presentation;

    fn s3() -> Presentation {
        parse_presentation("gens: x y\nrel: x^2\nrel: y^2\nrel: (x*y)^3").unwrap()
    }

    fn both(p: &Presentation, sub: &[Word]) -> usize {
        let h = todd_coxeter(p, sub, EnumOptions { strategy: Strategy::Hlt, max_cosets: 10_000 }).unwrap();
        let f = todd_coxeter(p, sub, EnumOptions { strategy: Strategy::Felsch, max_cosets: 10_000 }).unwrap();
        assert_eq!(h, CosetTable { stats: h.stats, ..f.clone() });
        h.validate(p, sub).unwrap();
        h.index()
    }

    #[test]
    fn s3_indices() {
        assert_eq!(both(&s3(), &[Word::gen(0)]), 3);
        assert_eq!(both(&s3(), &[]), 6);
        let img = todd_coxeter(&s3(), &[], EnumOptions::default()).unwrap().permutation_image().unwrap();
        assert_eq!(img.order(), 6);
    }

    #[test]
    fn non_involution_generators() {
        let p = parse_presentation("gens: x y\nrel: x^2\nrel: y^3\nrel: (x*y)^7\nrel: [x,y]^4").unwrap();
        assert_eq!(both(&p, &[]), 168);
        assert_eq!(both(&p, &[Word::gen(1)]), 56);
        let p = parse_presentation("gens: a b\nrel: a^3\nrel: b^3\nrel: (a*b)^3\nrel: (a^-1*b)^3").unwrap();
        assert_eq!(both(&p, &[]), 27);
    }

    #[test]
    fn limit_is_reported() {
        let p = parse_presentation("gens: x y\nrel: x^2\nrel: y^3\nrel: (x*y)^7\nrel: [x,y]^4").unwrap();
        let e = todd_coxeter(&p, &[], EnumOptions { strategy: Strategy::Hlt, max_cosets: 50 }).unwrap_err();
        assert!(matches!(e, Error::CosetLimit { .. }));
        let e = todd_coxeter(&p, &[], EnumOptions { strategy: Strategy::Felsch, max_cosets: 50 }).unwrap_err();
        assert!(matches!(e, Error::CosetLimit { .. }));
    }
}
