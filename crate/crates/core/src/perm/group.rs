use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use super::chain::StabChain;
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Element lists are only materialised below this order.
pub const MAX_EXHAUSTIVE: u128 = 1 << 16;
/// Streaming element walks (histograms, centres) are allowed below this order.
pub const MAX_STREAMED: u128 = 1 << 20;

const KNOWN_ORDER_SEED: u64 = 0x5eed_0fa5;
const KNOWN_ORDER_PATIENCE: usize = 2000;

/// A permutation group given by generators, with a lazily built stabilizer chain.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup { degree: self.degree, gens: self.gens.clone(), chain }
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::Range(format!("all generators must have degree {degree}")));
        }
        Ok(PermGroup { degree, gens, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, gens: Vec::new(), chain: OnceLock::new() }
    }

    pub(crate) fn with_chain(degree: usize, gens: Vec<Permutation>, chain: StabChain) -> Self {
        let lock = OnceLock::new();
        let _ = lock.set(chain);
        PermGroup { degree, gens, chain: lock }
    }

    /// A group whose order is known in advance (e.g. by an index computation);
    /// the chain is built randomly and certified by reaching `order`.
    pub fn with_known_order(degree: usize, gens: Vec<Permutation>, order: u128) -> Result<Self> {
        let chain = StabChain::with_known_order(&gens, degree, &[], order, KNOWN_ORDER_SEED, KNOWN_ORDER_PATIENCE)?;
        PermGroup::new(degree, gens).inspect(|g| {
            let _ = g.chain.set(chain);
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| {
            StabChain::schreier_sims(&self.gens, self.degree, &[]).expect("generators validated at construction")
        })
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(|g| g.is_identity())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Chain whose base begins with `prefix`, built from the known order.
    pub fn chain_with_base(&self, prefix: &[u32]) -> Result<StabChain> {
        let order = self.order();
        StabChain::with_known_order(&self.gens, self.degree, prefix, order, KNOWN_ORDER_SEED, KNOWN_ORDER_PATIENCE)
    }

    /// Pointwise stabilizer of `points`, by base change.
    pub fn stabilizer(&self, points: &[u32]) -> Result<PermGroup> {
        if points.is_empty() {
            return Ok(self.clone());
        }
        let chain = self.chain_with_base(points)?;
        let tail = chain.tail(points.len());
        let gens = chain.stabilizer_gens(points.len());
        Ok(PermGroup::with_chain(self.degree, gens, tail))
    }

    pub fn orbit(&self, p: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[p as usize] = true;
        let mut orbit = vec![p];
        let mut k = 0;
        while k < orbit.len() {
            let q = orbit[k];
            for g in &self.gens {
                let r = g.image(q);
                if !seen[r as usize] {
                    seen[r as usize] = true;
                    orbit.push(r);
                }
            }
            k += 1;
        }
        orbit
    }

    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree as u32 {
            if !seen[p as usize] {
                let o = self.orbit(p);
                for &q in &o {
                    seen[q as usize] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    pub fn is_two_transitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Ok(false);
        }
        if self.degree <= 1 {
            return Ok(true);
        }
        let stab = self.stabilizer(&[0])?;
        Ok(stab.orbit(1).len() == self.degree - 1)
    }

    /// Restriction to an invariant set of points; point `points[i]` becomes `i`.
    pub fn restrict(&self, points: &[u32]) -> Result<PermGroup> {
        let mut index = HashMap::with_capacity(points.len());
        for (i, &p) in points.iter().enumerate() {
            index.insert(p, i as u32);
        }
        let lookup = |p: u32| index.get(&p).copied();
        let gens = self
            .gens
            .iter()
            .map(|g| g.restrict(points, &lookup).ok_or_else(|| Error::Range("point set is not invariant".into())))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(points.len(), gens)
    }

    fn guard(&self, limit: u128, what: &'static str) -> Result<u128> {
        let order = self.order();
        if order > limit {
            return Err(Error::TooLarge { what, size: order, limit });
        }
        Ok(order)
    }

    /// All elements in breadth-first order from the identity (generator order fixed).
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        self.guard(MAX_EXHAUSTIVE, "group for element enumeration")?;
        let id = self.identity();
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(id.clone());
        let mut out = vec![id];
        let mut k = 0;
        while k < out.len() {
            for s in &self.gens {
                let h = out[k].then(s);
                if seen.insert(h.clone()) {
                    out.push(h);
                }
            }
            k += 1;
        }
        Ok(out)
    }

    pub fn for_each_element(&self, f: impl FnMut(&Permutation)) -> Result<()> {
        self.guard(MAX_STREAMED, "group for element walk")?;
        self.chain().for_each_element(f);
        Ok(())
    }

    pub fn is_normalized_by(&self, g: &Permutation) -> bool {
        self.gens.iter().all(|h| self.contains(&h.conjugate(g)))
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g) && g.gens.iter().all(|x| self.is_normalized_by(x))
    }

    /// Smallest subgroup containing `subset` normalised by this group.
    pub fn normal_closure(&self, subset: &[Permutation]) -> PermGroup {
        let mut gens: Vec<Permutation> = subset.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut sub = PermGroup::new(self.degree, gens.clone()).expect("degree checked by caller");
        let mut k = 0;
        while k < gens.len() {
            for x in &self.gens {
                let c = gens[k].conjugate(x);
                if !sub.contains(&c) {
                    gens.push(c);
                    sub = PermGroup::new(self.degree, gens.clone()).expect("same degree");
                }
            }
            k += 1;
        }
        sub
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                comms.push(Permutation::commutator(a, b));
            }
        }
        self.normal_closure(&comms)
    }

    pub fn is_two_group(&self) -> bool {
        self.order().is_power_of_two()
    }

    /// Frattini subgroup of a 2-group: normal closure of generator squares and commutators.
    pub fn frattini(&self) -> Result<PermGroup> {
        if !self.is_two_group() {
            return Err(Error::NotTwoGroup(self.order()));
        }
        let mut seeds: Vec<Permutation> = self.gens.iter().map(|g| g.then(g)).collect();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                seeds.push(Permutation::commutator(a, b));
            }
        }
        Ok(self.normal_closure(&seeds))
    }

    /// Elements of this group commuting with every element of `others` (given by generators).
    pub fn centralizer_of(&self, others: &[Permutation]) -> Result<PermGroup> {
        let mut found = Vec::new();
        self.for_each_element(|g| {
            if others.iter().all(|h| g.then(h) == h.then(g)) {
                found.push(g.clone());
            }
        })?;
        Ok(self.subgroup_from_elements(found))
    }

    pub fn center(&self) -> Result<PermGroup> {
        let gens = self.gens.clone();
        self.centralizer_of(&gens)
    }

    /// Elements normalising the subgroup `h`.
    pub fn normalizer_of(&self, h: &PermGroup) -> Result<PermGroup> {
        let mut found = Vec::new();
        self.for_each_element(|g| {
            if h.is_normalized_by(g) {
                found.push(g.clone());
            }
        })?;
        Ok(self.subgroup_from_elements(found))
    }

    /// A generating set picked greedily from an element list of a subgroup.
    pub fn subgroup_from_elements(&self, elements: Vec<Permutation>) -> PermGroup {
        let mut sub = PermGroup::trivial(self.degree);
        let mut gens = Vec::new();
        let target = elements.len() as u128;
        for e in elements {
            if sub.order() >= target {
                break;
            }
            if !sub.contains(&e) {
                gens.push(e);
                sub = PermGroup::new(self.degree, gens.clone()).expect("same degree");
            }
        }
        sub
    }

    /// Conjugacy classes of elements (exhaustive), in breadth-first element order.
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<Permutation>>> {
        let elements = self.elements()?;
        let mut seen: HashSet<Permutation> = HashSet::with_capacity(elements.len());
        let mut classes = Vec::new();
        for e in elements {
            if seen.contains(&e) {
                continue;
            }
            seen.insert(e.clone());
            let mut class = vec![e];
            let mut k = 0;
            while k < class.len() {
                for g in &self.gens {
                    let c = class[k].conjugate(g);
                    if seen.insert(c.clone()) {
                        class.push(c);
                    }
                }
                k += 1;
            }
            classes.push(class);
        }
        Ok(classes)
    }

    /// Largest normal `p`-subgroup: the elements whose normal closure is a `p`-group.
    pub fn o_p(&self, p: u64) -> Result<PermGroup> {
        let mut gens = Vec::new();
        for class in self.conjugacy_classes()? {
            let closure = PermGroup::new(self.degree, class.clone())?;
            if is_power_of(closure.order(), p) {
                gens.push(class[0].clone());
            }
        }
        Ok(self.normal_closure(&gens))
    }

    /// Action on the right cosets of a subgroup `h` (exhaustive).
    ///
    /// Cosets are numbered in order of first appearance along the breadth-first
    /// element list, so the identity coset is point 0.
    pub fn coset_action(&self, h: &PermGroup) -> Result<CosetAction> {
        let elements = self.elements()?;
        let sub = h.elements()?;
        let mut label: HashMap<Permutation, u32> = HashMap::with_capacity(elements.len());
        let mut reps = Vec::new();
        for e in &elements {
            if label.contains_key(e) {
                continue;
            }
            let c = reps.len() as u32;
            for x in &sub {
                label.insert(x.then(e), c);
            }
            reps.push(e.clone());
        }
        if reps.len() * sub.len() != elements.len() {
            return Err(Error::Verification("subgroup is not contained in the group".into()));
        }
        let gens = self
            .gens
            .iter()
            .map(|s| Permutation::from_images(reps.iter().map(|r| label[&r.then(s)]).collect()))
            .collect::<Result<Vec<_>>>()?;
        let image = PermGroup::new(reps.len(), gens)?;
        Ok(CosetAction { image, reps, label })
    }

    /// Exact order when an upper bound is known a priori (e.g. the group is a
    /// quotient of a group of order `bound`): restricts to growing unions of
    /// orbits, stopping once the restricted order reaches `bound`.
    pub fn order_bounded_by(&self, bound: u128) -> Result<u128> {
        let mut points: Vec<u32> = Vec::new();
        let mut best = 1;
        for orbit in self.orbits() {
            if orbit.len() == 1 {
                continue;
            }
            points.extend(orbit);
            points.sort_unstable();
            best = self.restrict(&points)?.order();
            if best > bound {
                return Err(Error::Verification(format!("order exceeds the bound {bound}")));
            }
            if best == bound {
                break;
            }
        }
        Ok(best)
    }

}

/// The permutation action of a group on the right cosets of a subgroup.
pub struct CosetAction {
    pub image: PermGroup,
    pub reps: Vec<Permutation>,
    label: HashMap<Permutation, u32>,
}

impl CosetAction {
    pub fn coset_of(&self, g: &Permutation) -> Option<u32> {
        self.label.get(g).copied()
    }

    /// Image of a group element in the coset action.
    pub fn image_of(&self, g: &Permutation) -> Option<Permutation> {
        let images = self.reps.iter().map(|r| self.coset_of(&r.then(g))).collect::<Option<Vec<_>>>()?;
        Permutation::from_images(images).ok()
    }

    /// Image of a subgroup in the coset action.
    pub fn image_of_group(&self, h: &PermGroup) -> Option<PermGroup> {
        let gens = h.gens().iter().map(|g| self.image_of(g)).collect::<Option<Vec<_>>>()?;
        PermGroup::new(self.reps.len(), gens).ok()
    }
}

pub(crate) fn is_power_of(mut n: u128, p: u64) -> bool {
    let p = p as u128;
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Canonical key of a small subgroup: its sorted element list.
pub fn subgroup_key(g: &PermGroup) -> Result<Vec<Permutation>> {
    let mut e = g.elements()?;
    e.sort_unstable();
    Ok(e)
}

/// Breadth-first closure of `gens` as an independent check of a chain's order.
pub fn closure_order(gens: &[Permutation], degree: usize, limit: usize) -> Option<usize> {
    let id = Permutation::identity(degree);
    let mut seen = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.then(s);
            if seen.insert(h.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(h);
            }
        }
    }
    Some(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize) -> PermGroup {
        let cyc: Vec<u32> = (0..n as u32).collect();
        PermGroup::new(
            n,
            vec![Permutation::from_cycles(n, &[&[0, 1]]).unwrap(), Permutation::from_cycles(n, &[&cyc]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn trivial_and_symmetric() {
        assert_eq!(PermGroup::trivial(5).order(), 1);
        assert_eq!(s(3).order(), 6);
        assert_eq!(s(5).stabilizer(&[]).unwrap().order(), 120);
        assert_eq!(s(5).stabilizer(&[0, 1]).unwrap().order(), 6);
    }

    #[test]
    fn centre_and_derived() {
        let s4 = s(4);
        assert_eq!(s4.center().unwrap().order(), 1);
        assert_eq!(s4.derived_subgroup().order(), 12);
        let c = PermGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()]).unwrap();
        assert!(c.center().unwrap().same_group(&c));
        assert!(s(3).frattini().is_err());
    }

    #[test]
    fn o2_of_s4_is_klein() {
        let o2 = s(4).o_p(2).unwrap();
        assert_eq!(o2.order(), 4);
        assert!(o2.is_normal_in(&s(4)));
    }

    #[test]
    fn coset_action_of_s4_on_klein() {
        let s4 = s(4);
        let v = s4.o_p(2).unwrap();
        let act = s4.coset_action(&v).unwrap();
        assert_eq!(act.image.degree(), 6);
        assert_eq!(act.image.order(), 6);
    }

    #[test]
    fn closure_agrees_with_chain() {
        let g = s(6);
        assert_eq!(closure_order(g.gens(), 6, 10_000), Some(720));
    }
}
