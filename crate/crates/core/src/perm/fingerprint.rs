use std::collections::BTreeMap;

use serde::Serialize;

use super::group::{PermGroup, MAX_EXHAUSTIVE};
use crate::error::Result;

/// Isomorphism invariants of a small group. Equal fingerprints are a necessary,
/// not a sufficient, condition for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureFingerprint {
    pub order: u128,
    pub element_order_histogram: BTreeMap<u64, u64>,
    pub center_order: u128,
    /// `None` for non-solvable groups.
    pub derived_length: Option<usize>,
    /// Elementary divisors of the abelianization (prime powers, ascending).
    pub abelianization_invariants: Vec<u64>,
    pub involution_count: u64,
}

pub fn fingerprint(g: &PermGroup) -> Result<StructureFingerprint> {
    let mut histogram = BTreeMap::new();
    g.for_each_element(|x| *histogram.entry(x.order()).or_insert(0u64) += 1)?;
    let center_order = g.center()?.order();

    let mut derived_length = Some(0);
    let mut cur = g.clone();
    while cur.order() > 1 {
        let next = cur.derived_subgroup();
        if next.order() == cur.order() {
            derived_length = None;
            break;
        }
        derived_length = derived_length.map(|d| d + 1);
        cur = next;
    }

    let abelianization_invariants = abelian_invariants(g)?;
    let involution_count = histogram.get(&2).copied().unwrap_or(0);
    Ok(StructureFingerprint {
        order: g.order(),
        element_order_histogram: histogram,
        center_order,
        derived_length,
        abelianization_invariants,
        involution_count,
    })
}

fn abelian_invariants(g: &PermGroup) -> Result<Vec<u64>> {
    let derived = g.derived_subgroup();
    let index = g.order() / derived.order();
    if index == 1 {
        return Ok(Vec::new());
    }
    let quotient = if g.order() <= MAX_EXHAUSTIVE { g.coset_action(&derived)?.image } else { g.clone() };
    // the action on cosets of G' is regular, so the image is G/G' itself
    let elements = quotient.elements()?;
    let mut out = Vec::new();
    let mut m = index as u64;
    let mut p = 2u64;
    while m > 1 {
        if !m.is_multiple_of(p) {
            p += 1;
            continue;
        }
        let mut top = 0;
        while m.is_multiple_of(p) {
            m /= p;
            top += 1;
        }
        // d[k] = number of cyclic p-factors of exponent at least k
        let log_count = |k: u32| -> u32 {
            let pk = p.pow(k);
            let n = elements.iter().filter(|a| pk.is_multiple_of(a.order()) || a.order() == 1).count() as u64;
            let mut e = 0;
            let mut x = n;
            while x.is_multiple_of(p) && x > 1 {
                x /= p;
                e += 1;
            }
            e
        };
        let logs: Vec<u32> = (0..=top + 1).map(log_count).collect();
        let d: Vec<u32> = (1..logs.len()).map(|k| logs[k] - logs[k - 1]).collect();
        for k in 0..d.len() {
            let next = d.get(k + 1).copied().unwrap_or(0);
            for _ in 0..d[k] - next {
                out.push(p.pow(k as u32 + 1));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn s3_fingerprint() {
        let g = PermGroup::new(
            3,
            vec![Permutation::from_cycles(3, &[&[0, 1]]).unwrap(), Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()],
        )
        .unwrap();
        let f = fingerprint(&g).unwrap();
        assert_eq!(f.order, 6);
        assert_eq!(f.involution_count, 3);
        assert_eq!(f.center_order, 1);
        assert_eq!(f.derived_length, Some(2));
        assert_eq!(f.abelianization_invariants, vec![2]);
        assert_eq!(f.element_order_histogram.values().sum::<u64>(), 6);
    }

    #[test]
    fn abelian_invariants_of_c2_x_c4() {
        let g = PermGroup::new(
            6,
            vec![
                Permutation::from_cycles(6, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(6, &[&[2, 3, 4, 5]]).unwrap(),
            ],
        )
        .unwrap();
        let f = fingerprint(&g).unwrap();
        assert_eq!(f.abelianization_invariants, vec![2, 4]);
        assert_eq!(f.center_order, 8);
        assert_eq!(f.derived_length, Some(1));
    }
}
