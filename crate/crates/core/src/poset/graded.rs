//! Finite graded posets given by their Hasse diagrams.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// A graded poset stored as a Hasse diagram.
///
/// `degrees` are chain counts weighted by the per-cover multiplicities the
/// poset was built with; `chains` are the plain saturated-chain counts. The
/// two agree whenever every multiplicity is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPoset {
    dims: Vec<usize>,
    below: Vec<Vec<usize>>,
    above: Vec<Vec<usize>>,
    multiplicities: Vec<Vec<u64>>,
    degrees: Vec<BigUint>,
    chains: Vec<BigUint>,
}

impl GradedPoset {
    /// Build from per-node dimensions and the covers below each node,
    /// together with a multiplicity for each cover. Nodes must be listed so
    /// that every cover below a node has a smaller index.
    pub fn new(dims: Vec<usize>, below: Vec<Vec<(usize, u64)>>) -> Self {
        let n = dims.len();
        assert_eq!(below.len(), n);
        let mut above = vec![Vec::new(); n];
        let mut lower = Vec::with_capacity(n);
        let mut mults = Vec::with_capacity(n);
        for (v, covers) in below.into_iter().enumerate() {
            let mut covers = covers;
            covers.sort_unstable();
            for &(u, _) in &covers {
                assert!(u < v, "covers must point to earlier nodes");
                assert_eq!(dims[u] + 1, dims[v], "covers must raise dimension by one");
                above[u].push(v);
            }
            lower.push(covers.iter().map(|&(u, _)| u).collect::<Vec<_>>());
            mults.push(covers.iter().map(|&(_, m)| m).collect::<Vec<_>>());
        }
        for list in &mut above {
            list.sort_unstable();
        }
        let mut degrees = Vec::with_capacity(n);
        let mut chains = Vec::with_capacity(n);
        for v in 0..n {
            if lower[v].is_empty() {
                degrees.push(BigUint::one());
                chains.push(BigUint::one());
                continue;
            }
            let mut d = BigUint::zero();
            let mut c = BigUint::zero();
            for (&u, &m) in lower[v].iter().zip(&mults[v]) {
                d += &degrees[u] * BigUint::from(m);
                c += &chains[u];
            }
            degrees.push(d);
            chains.push(c);
        }
        GradedPoset {
            dims,
            below: lower,
            above,
            multiplicities: mults,
            degrees,
            chains,
        }
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn degree(&self, v: usize) -> &BigUint {
        &self.degrees[v]
    }

    pub fn chain_count(&self, v: usize) -> &BigUint {
        &self.chains[v]
    }

    pub fn covers_below(&self, v: usize) -> &[usize] {
        &self.below[v]
    }

    pub fn covers_above(&self, v: usize) -> &[usize] {
        &self.above[v]
    }

    /// Multiplicity attached to the cover `u < v`, if it is one.
    pub fn cover_multiplicity(&self, u: usize, v: usize) -> Option<u64> {
        self.below[v]
            .iter()
            .position(|&x| x == u)
            .map(|k| self.multiplicities[v][k])
    }

    /// All covers as `(lower, upper)` pairs, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .below
            .iter()
            .enumerate()
            .flat_map(|(v, us)| us.iter().map(move |&u| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn cover_count(&self) -> usize {
        self.below.iter().map(Vec::len).sum()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.below[v].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.above[v].is_empty())
            .collect()
    }

    pub fn max_dim(&self) -> usize {
        self.dims.iter().copied().max().unwrap_or(0)
    }

    /// Order relation generated by the covers.
    pub fn leq(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        if self.dims[u] >= self.dims[v] {
            return false;
        }
        self.down_set(v).contains(&u)
    }

    /// All elements below or equal to `v`, sorted.
    pub fn down_set(&self, v: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(x) = stack.pop() {
            for &u in &self.below[x] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        (0..self.len()).filter(|&x| seen[x]).collect()
    }

    /// Number of elements in each dimension, indexed by dimension.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.max_dim() + 1];
        for &d in &self.dims {
            sizes[d] += 1;
        }
        sizes
    }

    /// Induced sub-poset on a down-closed set of elements; returns the
    /// sub-poset with plain (unweighted) chain counts as degrees.
    pub fn induced(&self, members: &[usize]) -> GradedPoset {
        let mut local = vec![usize::MAX; self.len()];
        for (k, &v) in members.iter().enumerate() {
            local[v] = k;
        }
        let dims = members.iter().map(|&v| self.dims[v]).collect();
        let below = members
            .iter()
            .map(|&v| {
                self.below[v]
                    .iter()
                    .filter(|&&u| local[u] != usize::MAX)
                    .map(|&u| (local[u], 1))
                    .collect()
            })
            .collect();
        GradedPoset::new(dims, below)
    }
}

/// Search for injective maps `phi` from `src` into `dst` with
/// `dim(phi(v)) = dim(v) + dim_shift`, equal degrees, and sending covers to
/// covers. When `bijective` is set the map must also be onto and reflect
/// covers, i.e. be an isomorphism of graded posets. At most `limit` maps are
/// returned, in the deterministic order of the backtracking.
pub fn find_embeddings(
    src: &GradedPoset,
    dst: &GradedPoset,
    dim_shift: usize,
    bijective: bool,
    limit: usize,
) -> Vec<Vec<usize>> {
    if bijective && (src.len() != dst.len() || src.cover_count() != dst.cover_count()) {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..src.len()).collect();
    order.sort_by_key(|&v| (src.dim(v), v));
    let candidates: Vec<Vec<usize>> = (0..src.len())
        .map(|v| {
            (0..dst.len())
                .filter(|&x| dst.dim(x) == src.dim(v) + dim_shift && dst.degree(x) == src.degree(v))
                .collect()
        })
        .collect();
    let mut assignment = vec![usize::MAX; src.len()];
    let mut used = vec![false; dst.len()];
    let mut found = Vec::new();
    backtrack(
        src,
        dst,
        &order,
        0,
        &candidates,
        &mut assignment,
        &mut used,
        &mut found,
        limit,
    );
    found
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    src: &GradedPoset,
    dst: &GradedPoset,
    order: &[usize],
    pos: usize,
    candidates: &[Vec<usize>],
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if found.len() >= limit {
        return;
    }
    if pos == order.len() {
        found.push(assignment.clone());
        return;
    }
    let v = order[pos];
    for &x in &candidates[v] {
        if used[x] {
            continue;
        }
        let covers_ok = src
            .covers_below(v)
            .iter()
            .all(|&u| dst.covers_below(x).contains(&assignment[u]));
        if !covers_ok {
            continue;
        }
        assignment[v] = x;
        used[x] = true;
        backtrack(
            src,
            dst,
            order,
            pos + 1,
            candidates,
            assignment,
            used,
            found,
            limit,
        );
        used[x] = false;
        assignment[v] = usize::MAX;
        if found.len() >= limit {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> GradedPoset {
        // 0 < 1, 2 < 3
        GradedPoset::new(
            vec![0, 1, 1, 2],
            vec![vec![], vec![(0, 1)], vec![(0, 1)], vec![(1, 1), (2, 1)]],
        )
    }

    #[test]
    fn chain_counts() {
        let p = diamond();
        assert_eq!(p.degree(3), &BigUint::from(2u32));
        assert_eq!(p.chain_count(3), &BigUint::from(2u32));
        assert_eq!(p.rank_sizes(), vec![1, 2, 1]);
        assert!(p.leq(0, 3));
        assert!(!p.leq(1, 2));
        assert_eq!(p.cover_pairs(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn weighted_degrees() {
        let p = GradedPoset::new(vec![0, 1, 2], vec![vec![], vec![(0, 1)], vec![(1, 2)]]);
        assert_eq!(p.degree(2), &BigUint::from(2u32));
        assert_eq!(p.chain_count(2), &BigUint::from(1u32));
        assert_eq!(p.cover_multiplicity(1, 2), Some(2));
        assert_eq!(p.cover_multiplicity(0, 2), None);
    }

    #[test]
    fn diamond_automorphisms() {
        let p = diamond();
        let isos = find_embeddings(&p, &p, 0, true, 10);
        assert_eq!(isos.len(), 2);
    }

    #[test]
    fn shifted_embedding() {
        let p = diamond();
        // chain of length 3 on top of a bottom element
        let q = GradedPoset::new(
            vec![0, 1, 2, 2, 3],
            vec![
                vec![],
                vec![(0, 1)],
                vec![(1, 1)],
                vec![(1, 1)],
                vec![(2, 1), (3, 1)],
            ],
        );
        let maps = find_embeddings(&p, &q, 1, false, 10);
        assert_eq!(maps.len(), 2);
        assert!(maps.iter().all(|m| m[0] == 1 && m[3] == 4));
    }
}
