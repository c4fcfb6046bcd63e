//! The bipartite coset graph `Δ` of a completion, its distance-two graph `Γ`
//! on the valency-7 part, the local axioms and the ball-stabiliser towers.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fp::CosetTable;
use crate::lab::reference_l32;
use crate::perm::{fingerprint, PermGroup, Permutation};
use crate::report::Suite;

const VERTEX_SEED: u64 = 0x0c05_e7a9;

/// `Δ` with vertices `0..n1` (first part) and `n1..n1+n2` (second part).
pub struct CosetGraph {
    n1: usize,
    n2: usize,
    /// Neighbours of first-part vertices, sorted, as second-part indices.
    adj1: Vec<Vec<u32>>,
    /// Neighbours of second-part vertices, sorted, as first-part indices.
    adj2: Vec<Vec<u32>>,
    /// Generator actions on the combined vertex set.
    gens: Vec<Permutation>,
}

impl CosetGraph {
    /// Edges are the orbit of `(0, 0)` under the simultaneous action on both tables.
    pub fn build(first: &CosetTable, second: &CosetTable) -> Result<CosetGraph> {
        if first.num_gens() != second.num_gens() {
            return Err(Error::Verification("tables have different generator counts".into()));
        }
        let (n1, n2) = (first.index(), second.index());
        let ngens = first.num_gens();
        let mut seen: HashSet<u64> = HashSet::new();
        let key = |u: u32, w: u32| (u as u64) * n2 as u64 + w as u64;
        seen.insert(key(0, 0));
        let mut queue = VecDeque::from([(0u32, 0u32)]);
        let mut adj1 = vec![Vec::new(); n1];
        let mut adj2 = vec![Vec::new(); n2];
        while let Some((u, w)) = queue.pop_front() {
            adj1[u as usize].push(w);
            adj2[w as usize].push(u);
            for g in 0..ngens {
                let e = (first.image(u as usize, g), second.image(w as usize, g));
                if seen.insert(key(e.0, e.1)) {
                    queue.push_back(e);
                }
            }
        }
        adj1.iter_mut().for_each(|l| l.sort_unstable());
        adj2.iter_mut().for_each(|l| l.sort_unstable());
        let gens = (0..ngens)
            .map(|g| {
                let images = (0..n1)
                    .map(|u| first.image(u, g))
                    .chain((0..n2).map(|w| n1 as u32 + second.image(w, g)))
                    .collect();
                Permutation::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CosetGraph { n1, n2, adj1, adj2, gens })
    }

    pub fn parts(&self) -> (usize, usize) {
        (self.n1, self.n2)
    }

    pub fn degree(&self) -> usize {
        self.n1 + self.n2
    }

    pub fn edge_count(&self) -> usize {
        self.adj1.iter().map(Vec::len).sum()
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    /// Constant valency of each part, if constant.
    pub fn valencies(&self) -> (Option<usize>, Option<usize>) {
        fn constant(lists: &[Vec<u32>]) -> Option<usize> {
            let v = lists.first()?.len();
            lists.iter().all(|l| l.len() == v).then_some(v)
        }
        (constant(&self.adj1), constant(&self.adj2))
    }

    /// Neighbours in `Δ` of a combined vertex id.
    pub fn neighbours(&self, v: u32) -> Vec<u32> {
        let v = v as usize;
        if v < self.n1 {
            self.adj1[v].iter().map(|&w| self.n1 as u32 + w).collect()
        } else {
            self.adj2[v - self.n1].clone()
        }
    }

    /// `Γ(u)`: first-part vertices at distance two, sorted.
    pub fn gamma_neighbours(&self, u: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self.adj1[u as usize]
            .iter()
            .flat_map(|&w| self.adj2[w as usize].iter().copied())
            .filter(|&v| v != u)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Adjacency lists of `Γ`.
    pub fn gamma(&self) -> Vec<Vec<u32>> {
        (0..self.n1 as u32).map(|u| self.gamma_neighbours(u)).collect()
    }

    /// Combined vertex ids at `Δ`-distance at most `r` from `v`, sorted.
    pub fn delta_ball(&self, v: u32, r: usize) -> Vec<u32> {
        bfs_ball(v, r, |x| self.neighbours(x))
    }

    /// First-part vertices at `Γ`-distance at most `r` from `u`, sorted.
    pub fn gamma_ball(&self, u: u32, r: usize) -> Vec<u32> {
        bfs_ball(u, r, |x| self.gamma_neighbours(x))
    }

    /// Edge list, one `u w` pair per line with combined vertex ids.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for (u, ws) in self.adj1.iter().enumerate() {
            for w in ws {
                let _ = writeln!(out, "{u} {}", self.n1 as u32 + w);
            }
        }
        out
    }

    /// An element mapping vertex `0` to `v`, as a product of generators.
    pub fn transporter(&self, v: u32) -> Option<Permutation> {
        let n = self.degree();
        let mut parent: Vec<Option<(u32, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for (g, p) in self.gens.iter().enumerate() {
                let y = p.image(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    parent[y as usize] = Some((x, g));
                    queue.push_back(y);
                }
            }
        }
        if !seen[v as usize] {
            return None;
        }
        let mut letters = Vec::new();
        let mut x = v;
        while let Some((p, g)) = parent[x as usize] {
            letters.push(g);
            x = p;
        }
        Some(letters.iter().rev().fold(Permutation::identity(n), |acc, &g| acc.then(&self.gens[g])))
    }
}

fn bfs_ball(v: u32, r: usize, next: impl Fn(u32) -> Vec<u32>) -> Vec<u32> {
    let mut seen = HashSet::from([v]);
    let mut frontier = vec![v];
    for _ in 0..r {
        let mut nf = Vec::new();
        for &x in &frontier {
            for y in next(x) {
                if seen.insert(y) {
                    nf.push(y);
                }
            }
        }
        frontier = nf;
    }
    let mut out: Vec<u32> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

fn connected(adj: &[Vec<u32>]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let mut seen = vec![false; adj.len()];
    seen[0] = true;
    let mut stack = vec![0u32];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x as usize] {
            if !seen[y as usize] {
                seen[y as usize] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == adj.len()
}

/// Orders of pointwise ball stabilisers and their successive quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTower {
    pub orders: Vec<u128>,
}

impl DistanceTower {
    pub fn quotients(&self) -> Vec<u128> {
        self.orders.windows(2).map(|w| w[0] / w[1]).collect()
    }

    pub fn divides(&self) -> bool {
        self.orders.windows(2).all(|w| w[1] != 0 && w[0] % w[1] == 0)
    }
}

/// Vertex stabiliser with a certified order.
pub struct Stabiliser {
    pub group: PermGroup,
    pub order: u128,
}

impl Stabiliser {
    /// `gens` generate the stabiliser of a vertex and form a quotient of a group of order `bound`.
    pub fn new(gens: Vec<Permutation>, bound: u128) -> Result<Stabiliser> {
        let degree = gens[0].degree();
        let g = PermGroup::new(degree, gens)?;
        let order = g.order_bounded_by(bound)?;
        let group = PermGroup::with_known_order(degree, g.gens().to_vec(), order)?;
        Ok(Stabiliser { group, order })
    }

    /// Order of the pointwise stabiliser of `points`, as `|G| / |G restricted to points|`.
    pub fn restricted_kernel_order(&self, points: &[u32]) -> Result<u128> {
        Ok(self.order / self.group.restrict(points)?.order())
    }

    /// Order of the pointwise stabiliser of `points`, by base change.
    pub fn base_change_order(&self, points: &[u32]) -> Result<u128> {
        Ok(self.group.stabilizer(points)?.order())
    }

    pub fn conjugate(&self, by: &Permutation) -> Result<Stabiliser> {
        let gens = self.group.gens().iter().map(|g| g.conjugate(by)).collect();
        Ok(Stabiliser {
            group: PermGroup::with_known_order(self.group.degree(), gens, self.order)?,
            order: self.order,
        })
    }
}

/// The `Δ`-tower up to radius `r`: base change, cross-checked by restriction.
pub fn delta_tower(d: &CosetGraph, x: u32, gx: &Stabiliser, r: usize) -> Result<DistanceTower> {
    tower((0..=r).map(|i| d.delta_ball(x, i)).collect(), gx)
}

/// The `Γ`-tower `G(x) ≥ Q_1(x) ≥ ...` up to radius `r`.
pub fn gamma_tower(d: &CosetGraph, x: u32, gx: &Stabiliser, r: usize) -> Result<DistanceTower> {
    tower((0..=r).map(|i| d.gamma_ball(x, i)).collect(), gx)
}

/// Base change runs in the action on the largest ball, which must be faithful
/// (checked by order); restriction to each ball is the cross-check.
fn tower(balls: Vec<Vec<u32>>, gx: &Stabiliser) -> Result<DistanceTower> {
    let big = balls.last().ok_or_else(|| Error::Range("empty tower".into()))?;
    let local = gx.group.restrict(big)?;
    let faithful = local.order() == gx.order;
    let mut orders = Vec::new();
    for ball in &balls {
        let a = if faithful {
            let pos: Vec<u32> = ball.iter().map(|p| big.binary_search(p).expect("balls are nested") as u32).collect();
            local.stabilizer(&pos)?.order()
        } else {
            gx.base_change_order(ball)?
        };
        let b = gx.restricted_kernel_order(ball)?;
        if a != b {
            return Err(Error::Verification(format!(
                "ball stabiliser orders disagree: {a} by base change, {b} by restriction"
            )));
        }
        orders.push(a);
    }
    Ok(DistanceTower { orders })
}

/// Inputs for `check_axioms`: the graph, and generator indices of the two
/// vertex stabilisers (the subgroup generators of each table).
pub struct AxiomInputs<'a> {
    pub graph: &'a CosetGraph,
    pub first_gens: &'a [usize],
    pub second_gens: &'a [usize],
    /// Orders of the groups the two stabilisers are quotients of.
    pub first_bound: u128,
    pub second_bound: u128,
    pub group_order: u128,
    pub spot_checks: usize,
}

/// Expected values of the checks (from the distance factors).
pub const DELTA_QUOTIENTS: [u128; 6] = [168, 8, 8, 1, 2, 1];
pub const GAMMA_ORDERS: [u128; 3] = [16, 2, 1];

pub fn check_axioms(inp: &AxiomInputs, s: &mut Suite) -> Result<()> {
    let d = inp.graph;
    let (n1, n2) = d.parts();
    let (v1, v2) = d.valencies();
    s.eq("delta.first_part", inp.group_order / inp.first_bound, n1 as u128);
    s.eq("delta.second_part", inp.group_order / inp.second_bound, n2 as u128);
    s.record("delta.valency_first", v1 == Some(7), 7, format!("{v1:?}"));
    s.record("delta.valency_second", v2 == Some(3), 3, format!("{v2:?}"));
    s.eq("delta.edges_double_count", n1 * 7, n2 * 3);
    s.eq("delta.edges", n1 * 7, d.edge_count());

    let gamma = d.gamma();
    let valency_ok = gamma.iter().all(|l| l.len() == 14);
    s.record("a1.gamma_valency", valency_ok, 14, if valency_ok { "14".into() } else { "not constant 14".to_string() });
    s.holds("a1.gamma_connected", connected(&gamma));
    let mut unique = true;
    for (u, l) in gamma.iter().enumerate() {
        for &v in l.iter().filter(|&&v| v as usize > u) {
            let other = &gamma[v as usize];
            let common = l.iter().filter(|w| other.binary_search(w).is_ok()).count();
            unique &= common == 1;
        }
    }
    s.holds("a2.unique_triangle", unique);
    let triangles: HashSet<[u32; 3]> = (0..n2)
        .map(|w| {
            let l = &d.adj2[w];
            [l[0], l[1], l[2]]
        })
        .collect();
    s.eq("a2.triangle_count", n2, triangles.len());

    let first: Vec<Permutation> = inp.first_gens.iter().map(|&g| d.gens[g].clone()).collect();
    let second: Vec<Permutation> = inp.second_gens.iter().map(|&g| d.gens[g].clone()).collect();
    let gx = Stabiliser::new(first, inp.first_bound)?;
    let gw = Stabiliser::new(second, inp.second_bound)?;
    s.eq("stabiliser.first_order", inp.first_bound, gx.order);
    s.eq("stabiliser.second_order", inp.second_bound, gw.order);
    let whole = PermGroup::new(d.degree(), d.gens.clone())?;
    s.eq("delta.vertex_orbit", n1, whole.orbit(0).len());

    local_checks(d, 0, &gx, s, "")?;
    let gamma_x = d.gamma_neighbours(0);
    // arc-transitivity: transitive on vertices and G(x) transitive on Γ(x)
    let gx_on_gamma = gx.group.restrict(&gamma_x)?;
    s.holds("a3.arc_transitive", whole.orbit(0).len() == n1 && gx_on_gamma.is_transitive());
    let arcs = arc_orbit(d, &gamma_x)?;
    s.eq("a3.arc_orbit", n1 * 14, arcs);

    let tri = d.neighbours(n1 as u32);
    let s3 = gw.group.restrict(&tri)?;
    s.eq("a5.triangle_action_order", 6, s3.order());

    let mut rng = ChaCha8Rng::seed_from_u64(VERTEX_SEED);
    for k in 0..inp.spot_checks {
        let v = rng.gen_range(1..n1 as u32);
        let g = d.transporter(v).ok_or_else(|| Error::Verification("vertex not reached".into()))?;
        let gv = gx.conjugate(&g)?;
        local_checks(d, v, &gv, s, &format!("spot{k}."))?;
    }
    Ok(())
}

fn local_checks(d: &CosetGraph, x: u32, gx: &Stabiliser, s: &mut Suite, prefix: &str) -> Result<()> {
    let delta_x = d.neighbours(x);
    let gamma_x = d.gamma_neighbours(x);
    let on_triangles = gx.group.restrict(&delta_x)?;
    if prefix.is_empty() {
        s.eq("a4.triangle_action_order", 168, on_triangles.order());
        s.holds("a4.two_transitive", on_triangles.is_two_transitive()?);
        s.holds("a4.fingerprint_is_l32", fingerprint(&on_triangles)? == fingerprint(&reference_l32()?)?);
        // kernel of the action on Γ(x) ∪ Δ(x) restricted to the triangles
        let mut local: Vec<u32> = gamma_x.iter().chain(&delta_x).copied().collect();
        local.sort_unstable();
        let h = gx.group.restrict(&local)?;
        let pos: Vec<u32> =
            delta_x.iter().map(|p| local.binary_search(p).expect("in local") as u32).collect();
        let kernel = h.stabilizer(&pos)?;
        s.eq("a6.kernel_order", 8, kernel.order());
        let elementary = kernel.gens().iter().all(|a| a.then(a).is_identity())
            && kernel.gens().iter().all(|a| kernel.gens().iter().all(|b| a.then(b) == b.then(a)));
        s.holds("a6.kernel_elementary_abelian", elementary);
    } else {
        s.eq(&format!("{prefix}a4.triangle_action_order"), 168, on_triangles.order());
    }
    let dt = delta_tower(d, x, gx, 6)?;
    s.record(
        &format!("{prefix}tower.delta"),
        dt.divides() && dt.quotients() == DELTA_QUOTIENTS,
        format!("{DELTA_QUOTIENTS:?}"),
        format!("{:?}", dt.quotients()),
    );
    let gt = gamma_tower(d, x, gx, 3)?;
    s.record(
        &format!("{prefix}a7.tower.gamma"),
        gt.orders[1..] == GAMMA_ORDERS,
        format!("{GAMMA_ORDERS:?}"),
        format!("{:?}", &gt.orders[1..]),
    );
    Ok(())
}

/// Size of the orbit of the arc `(0, y)` under the completion, `y` the first `Γ`-neighbour.
fn arc_orbit(d: &CosetGraph, gamma_0: &[u32]) -> Result<usize> {
    let y = *gamma_0.first().ok_or_else(|| Error::Verification("isolated vertex".into()))?;
    let n1 = d.n1 as u64;
    let key = |a: u32, b: u32| a as u64 * n1 + b as u64;
    let mut seen = HashSet::from([key(0, y)]);
    let mut queue = VecDeque::from([(0u32, y)]);
    while let Some((a, b)) = queue.pop_front() {
        for g in &d.gens {
            let e = (g.image(a), g.image(b));
            if seen.insert(key(e.0, e.1)) {
                queue.push_back(e);
            }
        }
    }
    Ok(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_and_tower_on_small_graph() {
        // K_{3,3}-like: first part {0,1,2} and second part {3,4,5} complete bipartite
        let d = CosetGraph {
            n1: 3,
            n2: 3,
            adj1: vec![vec![0, 1, 2]; 3],
            adj2: vec![vec![0, 1, 2]; 3],
            gens: vec![Permutation::identity(6)],
        };
        assert_eq!(d.delta_ball(0, 1), vec![0, 3, 4, 5]);
        assert_eq!(d.gamma_neighbours(0), vec![1, 2]);
        assert_eq!(d.edge_count(), 9);
        assert_eq!(d.edge_list().lines().count(), 9);
        let t = DistanceTower { orders: vec![24, 4, 1] };
        assert_eq!(t.quotients(), vec![6, 4]);
        assert!(t.divides());
    }
}
