use std::collections::HashMap;

use super::group::{PermGroup, MAX_EXHAUSTIVE};
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Images for the generators of a domain group, in generator order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenMap {
    images: Vec<Permutation>,
}

impl GenMap {
    pub fn new(images: Vec<Permutation>) -> Self {
        GenMap { images }
    }

    pub fn identity(domain: &PermGroup) -> Self {
        GenMap { images: domain.gens().to_vec() }
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }
}

/// A homomorphism stored as a full element table.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    table: HashMap<Permutation, Permutation>,
    image_size: usize,
}

impl Homomorphism {
    pub fn apply(&self, g: &Permutation) -> Option<&Permutation> {
        self.table.get(g)
    }

    pub fn domain_size(&self) -> usize {
        self.table.len()
    }

    pub fn is_bijective(&self) -> bool {
        self.image_size == self.table.len()
    }

    pub fn kernel(&self) -> Vec<Permutation> {
        self.table.iter().filter(|(_, v)| v.is_identity()).map(|(k, _)| k.clone()).collect()
    }

    /// Image of a subgroup (given by generators) as a group on the target degree.
    pub fn map_group(&self, h: &PermGroup, target_degree: usize) -> Result<PermGroup> {
        let gens = h
            .gens()
            .iter()
            .map(|g| self.apply(g).cloned().ok_or_else(|| Error::NotInGroup(format!("{g:?}"))))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(target_degree, gens)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Homomorphism) -> Option<Homomorphism> {
        let mut table = HashMap::with_capacity(self.table.len());
        for (k, v) in &self.table {
            table.insert(k.clone(), other.apply(v)?.clone());
        }
        let mut values: Vec<&Permutation> = table.values().collect();
        values.sort_unstable();
        values.dedup();
        let image_size = values.len();
        Some(Homomorphism { table, image_size })
    }

    /// Whether two homomorphisms agree on every element.
    pub fn same_map(&self, other: &Homomorphism) -> bool {
        self.table.len() == other.table.len() && self.table.iter().all(|(k, v)| other.apply(k) == Some(v))
    }
}

/// Extends a generator map by breadth-first enumeration of the domain, assigning
/// `phi(g*s) = phi(g)*phi(s)` and failing on any inconsistent reassignment.
pub fn extend_homomorphism(m: &GenMap, domain: &PermGroup) -> Result<Option<Homomorphism>> {
    let order = domain.order();
    if order > MAX_EXHAUSTIVE {
        return Err(Error::TooLarge {
            what: "domain for exhaustive homomorphism check (use a presentation instead)",
            size: order,
            limit: MAX_EXHAUSTIVE,
        });
    }
    if m.images.len() != domain.gens().len() {
        return Err(Error::Range("generator map has the wrong number of images".into()));
    }
    let Some(first) = m.images.first() else {
        let id = domain.identity();
        return Ok(Some(Homomorphism { table: HashMap::from([(id.clone(), id)]), image_size: 1 }));
    };
    let target_id = Permutation::identity(first.degree());
    let mut table: HashMap<Permutation, Permutation> = HashMap::with_capacity(order as usize);
    let mut queue = vec![domain.identity()];
    table.insert(domain.identity(), target_id);
    let mut k = 0;
    while k < queue.len() {
        let g = queue[k].clone();
        let phi_g = table[&g].clone();
        for (s, phi_s) in domain.gens().iter().zip(&m.images) {
            let h = g.then(s);
            let phi_h = phi_g.then(phi_s);
            match table.get(&h) {
                Some(existing) if *existing != phi_h => return Ok(None),
                Some(_) => {}
                None => {
                    table.insert(h.clone(), phi_h);
                    queue.push(h);
                }
            }
        }
        k += 1;
    }
    let mut values: Vec<&Permutation> = table.values().collect();
    values.sort_unstable();
    values.dedup();
    let image_size = values.len();
    Ok(Some(Homomorphism { table, image_size }))
}

pub fn verify_homomorphism(m: &GenMap, domain: &PermGroup) -> Result<bool> {
    Ok(extend_homomorphism(m, domain)?.is_some())
}

/// Partition of subgroups into conjugacy classes, with a conjugating element
/// taking each class representative to each member.
pub struct SubgroupClasses {
    pub classes: Vec<Vec<(usize, Permutation)>>,
}

/// Sorts `subs` into `g`-conjugacy classes by breadth-first search over conjugates.
pub fn subgroup_conjugacy_classes(g: &PermGroup, subs: &[PermGroup]) -> Result<SubgroupClasses> {
    let order = g.order();
    if order > MAX_EXHAUSTIVE {
        return Err(Error::TooLarge { what: "group for subgroup conjugacy", size: order, limit: MAX_EXHAUSTIVE });
    }
    let keys = subs.iter().map(super::group::subgroup_key).collect::<Result<Vec<_>>>()?;
    let mut index: HashMap<&Vec<Permutation>, usize> = HashMap::new();
    for (i, k) in keys.iter().enumerate() {
        index.entry(k).or_insert(i);
    }
    let mut class_of = vec![usize::MAX; subs.len()];
    let mut classes: Vec<Vec<(usize, Permutation)>> = Vec::new();
    for i in 0..subs.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = Vec::new();
        // orbit of the subgroup under conjugation, tracking the conjugator
        let mut seen: HashMap<Vec<Permutation>, Permutation> = HashMap::new();
        seen.insert(keys[i].clone(), g.identity());
        let mut queue = vec![keys[i].clone()];
        let mut k = 0;
        while k < queue.len() {
            let cur = queue[k].clone();
            let w = seen[&cur].clone();
            for s in g.gens() {
                let mut next: Vec<Permutation> = cur.iter().map(|x| x.conjugate(s)).collect();
                next.sort_unstable();
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), w.then(s));
                    queue.push(next);
                }
            }
            k += 1;
        }
        for (j, key) in keys.iter().enumerate() {
            if class_of[j] == usize::MAX {
                if let Some(w) = seen.get(key) {
                    class_of[j] = c;
                    members.push((j, w.clone()));
                }
            }
        }
        classes.push(members);
    }
    Ok(SubgroupClasses { classes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::new(
            3,
            vec![Permutation::from_cycles(3, &[&[0, 1]]).unwrap(), Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn identity_map_is_a_homomorphism() {
        let g = s3();
        let h = extend_homomorphism(&GenMap::identity(&g), &g).unwrap().unwrap();
        assert!(h.is_bijective());
        assert_eq!(h.domain_size(), 6);
    }

    #[test]
    fn swapped_generators_fail() {
        let g = s3();
        let m = GenMap::new(vec![g.gens()[1].clone(), g.gens()[0].clone()]);
        assert!(!verify_homomorphism(&m, &g).unwrap());
    }

    #[test]
    fn sign_map_has_kernel_a3() {
        let g = s3();
        let t = Permutation::from_cycles(2, &[&[0, 1]]).unwrap();
        let m = GenMap::new(vec![t, Permutation::identity(2)]);
        let h = extend_homomorphism(&m, &g).unwrap().unwrap();
        assert_eq!(h.kernel().len(), 3);
        assert!(!h.is_bijective());
    }

    #[test]
    fn point_stabilisers_of_s3_are_conjugate() {
        let g = s3();
        let a = PermGroup::new(3, vec![Permutation::from_cycles(3, &[&[0, 1]]).unwrap()]).unwrap();
        let b = PermGroup::new(3, vec![Permutation::from_cycles(3, &[&[1, 2]]).unwrap()]).unwrap();
        let cls = subgroup_conjugacy_classes(&g, &[a.clone(), b.clone()]).unwrap();
        assert_eq!(cls.classes.len(), 1);
        let (_, w) = &cls.classes[0][1];
        assert_eq!(subgroup_key(&b).unwrap(), {
            let mut e: Vec<_> = a.elements().unwrap().iter().map(|x| x.conjugate(w)).collect();
            e.sort_unstable();
            e
        });
    }

    use super::super::group::subgroup_key;
}
