//! Stabilizer chains (base and strong generating set).
//!
//! Transversals are Schreier vectors: each orbit point remembers the
//! generator that first reached it, so coset representatives are rebuilt on
//! demand and memory stays linear in the degree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::permutation::Permutation;
use crate::error::{Error, Result};

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Clone, Debug)]
pub struct Level {
    base: u32,
    gens: Vec<Permutation>,
    gens_inv: Vec<Permutation>,
    orbit: Vec<u32>,
    schreier: Vec<u32>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut schreier = vec![NOT_IN_ORBIT; degree];
        schreier[base as usize] = ROOT;
        Level { base, gens: Vec::new(), gens_inv: Vec::new(), orbit: vec![base], schreier }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    #[inline]
    pub fn in_orbit(&self, p: u32) -> bool {
        self.schreier[p as usize] != NOT_IN_ORBIT
    }

    /// Adds a generator and extends the orbit; existing orbit entries keep their position.
    fn add_gen(&mut self, g: Permutation) {
        let idx = self.gens.len() as u32;
        self.gens_inv.push(g.inverse());
        self.gens.push(g);
        let start = self.orbit.len();
        let g = &self.gens[idx as usize];
        for k in 0..start {
            let q = g.image(self.orbit[k]);
            if self.schreier[q as usize] == NOT_IN_ORBIT {
                self.schreier[q as usize] = idx;
                self.orbit.push(q);
            }
        }
        let mut k = start;
        while k < self.orbit.len() {
            let p = self.orbit[k];
            for (gi, g) in self.gens.iter().enumerate() {
                let q = g.image(p);
                if self.schreier[q as usize] == NOT_IN_ORBIT {
                    self.schreier[q as usize] = gi as u32;
                    self.orbit.push(q);
                }
            }
            k += 1;
        }
    }

    /// Coset representative mapping the base point to `p`.
    pub fn rep(&self, p: u32) -> Permutation {
        let mut path = Vec::new();
        let mut q = p;
        while self.schreier[q as usize] != ROOT {
            let gi = self.schreier[q as usize] as usize;
            path.push(gi);
            q = self.gens_inv[gi].image(q);
        }
        let mut r = Permutation::identity(self.schreier.len());
        for &gi in path.iter().rev() {
            r.then_assign(&self.gens[gi]);
        }
        r
    }

    /// Replaces `g` by `g * rep(g(base))^-1`; returns false if `g(base)` is outside the orbit.
    #[inline]
    fn strip(&self, g: &mut Permutation) -> bool {
        let mut q = g.image(self.base);
        if self.schreier[q as usize] == NOT_IN_ORBIT {
            return false;
        }
        while self.schreier[q as usize] != ROOT {
            let gi = self.schreier[q as usize] as usize;
            let inv = &self.gens_inv[gi];
            g.then_assign(inv);
            q = inv.image(q);
        }
        true
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    fn skeleton(gens: &[Permutation], degree: usize, prefix: &[u32]) -> Result<StabChain> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::Range("generator degree mismatch".into()));
        }
        if prefix.iter().any(|&p| p as usize >= degree) {
            return Err(Error::Range("base point outside domain".into()));
        }
        let mut chain = StabChain { degree, levels: prefix.iter().map(|&b| Level::new(b, degree)).collect() };
        for g in gens.iter().filter(|g| !g.is_identity()) {
            chain.insert_strong(g.clone(), 0);
        }
        Ok(chain)
    }

    /// Adds `g` to every level from `from` down to the first level whose base `g` moves,
    /// appending a new level if `g` fixes the whole base.
    fn insert_strong(&mut self, g: Permutation, from: usize) -> usize {
        let mut j = from;
        while j < self.levels.len() && g.fixes(self.levels[j].base) {
            j += 1;
        }
        if j == self.levels.len() {
            let b = g.first_moved().expect("identity inserted as strong generator");
            self.levels.push(Level::new(b, self.degree));
        }
        for l in from..=j {
            self.levels[l].add_gen(g.clone());
        }
        j
    }

    /// Deterministic Schreier-Sims. `prefix` becomes the start of the base.
    pub fn schreier_sims(gens: &[Permutation], degree: usize, prefix: &[u32]) -> Result<StabChain> {
        let mut chain = StabChain::skeleton(gens, degree, prefix)?;
        if chain.levels.is_empty() {
            return Ok(chain);
        }
        let mut checked: Vec<Vec<usize>> = Vec::new();
        let mut i = chain.levels.len() - 1;
        loop {
            checked.resize_with(chain.levels.len(), Vec::new);
            let mut jumped = None;
            let mut k = 0;
            'scan: while k < chain.levels[i].orbit.len() {
                if checked[i].len() <= k {
                    checked[i].resize(chain.levels[i].orbit.len(), 0);
                }
                while checked[i][k] < chain.levels[i].gens.len() {
                    let s = checked[i][k];
                    checked[i][k] += 1;
                    let level = &chain.levels[i];
                    let beta = level.orbit[k];
                    // skip the tree edges of the Schreier vector: they sift to the identity
                    let img = level.gens[s].image(beta);
                    if level.schreier[img as usize] == s as u32 && level.gens_inv[s].image(img) == beta {
                        continue;
                    }
                    let mut h = level.rep(beta);
                    h.then_assign(&level.gens[s]);
                    let (res, _) = chain.sift_from(h, i);
                    if !res.is_identity() {
                        let j = chain.insert_strong(res, i + 1);
                        jumped = Some(j);
                        break 'scan;
                    }
                }
                k += 1;
            }
            match jumped {
                Some(j) => i = j,
                None if i == 0 => break,
                None => i -= 1,
            }
        }
        Ok(chain)
    }

    /// Randomised Schreier-Sims that stops once the chain certifies `order`.
    ///
    /// The order of a partial chain never exceeds the group order, so reaching
    /// a known upper bound proves the chain complete. Errors if the bound is not
    /// reached within `patience` consecutive non-improving random elements.
    pub fn with_known_order(
        gens: &[Permutation],
        degree: usize,
        prefix: &[u32],
        order: u128,
        seed: u64,
        patience: usize,
    ) -> Result<StabChain> {
        let mut chain = StabChain::skeleton(gens, degree, prefix)?;
        if chain.order() == order {
            return Ok(chain);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pool = ProductReplacement::new(gens, degree, &mut rng);
        let mut idle = 0;
        while chain.order() < order {
            let g = pool.next(&mut rng);
            let (res, _) = chain.sift_from(g, 0);
            if res.is_identity() {
                idle += 1;
                if idle > patience {
                    return Err(Error::Verification(format!(
                        "random Schreier-Sims stalled at order {} below target {order}",
                        chain.order()
                    )));
                }
            } else {
                idle = 0;
                chain.insert_strong(res, 1);
            }
        }
        if chain.order() != order {
            return Err(Error::Verification(format!(
                "chain order {} exceeds the claimed bound {order}",
                chain.order()
            )));
        }
        Ok(chain)
    }

    /// Sifts through levels `from..`; returns the residue and the level where it stopped.
    pub fn sift_from(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            if !level.strip(&mut g) {
                return (g, l);
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_from(g.clone(), 0).0.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Orbit lengths down the chain.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// The chain of the stabilizer of the first `k` base points.
    pub fn tail(&self, k: usize) -> StabChain {
        StabChain { degree: self.degree, levels: self.levels[k.min(self.levels.len())..].to_vec() }
    }

    /// Generators of the stabilizer of the first `k` base points.
    pub fn stabilizer_gens(&self, k: usize) -> Vec<Permutation> {
        self.levels.get(k).map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// Calls `f` on every element exactly once.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation)) {
        let transversals: Vec<Vec<Permutation>> =
            self.levels.iter().map(|l| l.orbit.iter().map(|&p| l.rep(p)).collect()).collect();
        fn walk(t: &[Vec<Permutation>], depth: usize, acc: &Permutation, f: &mut dyn FnMut(&Permutation)) {
            if depth == 0 {
                f(acc);
                return;
            }
            // element = r_{k-1} ... r_0; build from the deepest level outward
            for r in &t[depth - 1] {
                walk(t, depth - 1, &acc.then(r), f);
            }
        }
        walk(&transversals, transversals.len(), &Permutation::identity(self.degree), &mut f);
    }
}

/// Product replacement random element generator.
struct ProductReplacement {
    state: Vec<Permutation>,
    acc: Permutation,
}

impl ProductReplacement {
    fn new(gens: &[Permutation], degree: usize, rng: &mut impl Rng) -> Self {
        let mut state: Vec<Permutation> = gens.to_vec();
        if state.is_empty() {
            state.push(Permutation::identity(degree));
        }
        while state.len() < 10 {
            let k = state.len() % gens.len().max(1);
            state.push(state[k].clone());
        }
        let mut pr = ProductReplacement { state, acc: Permutation::identity(degree) };
        for _ in 0..50 {
            pr.next(rng);
        }
        pr
    }

    fn next(&mut self, rng: &mut impl Rng) -> Permutation {
        let n = self.state.len();
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let sj = if rng.gen_bool(0.5) { self.state[j].clone() } else { self.state[j].inverse() };
        if rng.gen_bool(0.5) {
            self.state[i] = self.state[i].then(&sj);
        } else {
            self.state[i] = sj.then(&self.state[i]);
        }
        self.acc = self.acc.then(&self.state[i]);
        self.acc.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Vec<Permutation> {
        let cyc: Vec<u32> = (0..n as u32).collect();
        vec![Permutation::from_cycles(n, &[&[0, 1]]).unwrap(), Permutation::from_cycles(n, &[&cyc]).unwrap()]
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..9 {
            let c = StabChain::schreier_sims(&sym(n), n, &[]).unwrap();
            assert_eq!(c.order(), (1..=n as u128).product::<u128>());
        }
    }

    #[test]
    fn known_order_chain_matches() {
        let gens = sym(7);
        let c = StabChain::with_known_order(&gens, 7, &[6, 5], 5040, 1, 1000).unwrap();
        assert_eq!(c.base()[..2], [6, 5]);
        assert_eq!(c.order(), 5040);
        assert!(StabChain::with_known_order(&gens, 7, &[], 10080, 1, 200).is_err());
    }

    #[test]
    fn element_iteration_covers_group() {
        let c = StabChain::schreier_sims(&sym(4), 4, &[]).unwrap();
        let mut all = std::collections::HashSet::new();
        c.for_each_element(|g| {
            all.insert(g.clone());
        });
        assert_eq!(all.len(), 24);
    }
}
