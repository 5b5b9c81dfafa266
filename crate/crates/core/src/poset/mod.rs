//! Parabolic quotients `W_P \ W` as graded posets under the Bruhat order.
//!
//! A coset `W_P w` (with `w` its minimal representative) is identified by the
//! weight `w^{-1} * lambda_P`, where `lambda_P` is the sum of the fundamental
//! weights of the marked nodes. The dimension of the Schubert variety is the
//! number of positive roots `beta` with `<w^{-1} lambda_P, beta^vee> < 0`.
//!
//! Covers are the pairs `mu -> s_beta mu` that raise the dimension by one.
//! Each cover carries the Chevalley multiplicity `<mu, beta^vee>`, so
//! [`QuotientPoset::degree`] is the degree in the embedding given by
//! `lambda_P`. On minuscule quotients every multiplicity is 1 and the degree
//! is the number of saturated chains from the point class.

pub mod export;
pub mod graded;

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::lattice::{CartanDatum, CartanType, Weight, WeylWord};

pub use graded::{find_embeddings, GradedPoset};

pub type NodeId = usize;

/// Default cap on the number of cosets enumerated.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetNode {
    pub id: NodeId,
    /// Reduced word of the minimal-length representative `w`.
    pub min_word: WeylWord,
    /// `w^{-1}` applied to the defining weight.
    pub fingerprint: Weight,
    pub dim: usize,
}

#[derive(Debug, Clone)]
pub struct QuotientPoset {
    datum: CartanDatum,
    marked: Vec<usize>,
    nodes: Vec<CosetNode>,
    index: HashMap<Weight, NodeId>,
    hasse: GradedPoset,
}

/// Whether the maximal parabolic of `node` is cominuscule.
pub fn is_cominuscule_node(t: CartanType, rank: usize, node: usize) -> bool {
    match t {
        CartanType::A => (1..=rank).contains(&node),
        CartanType::B => node == 1,
        CartanType::C => node == rank,
        CartanType::D => node == 1 || node == rank - 1 || node == rank,
        CartanType::E6 => node == 1 || node == 6,
        CartanType::E7 => node == 7,
    }
}

/// Whether the maximal parabolic of `node` is minuscule.
pub fn is_minuscule_node(t: CartanType, rank: usize, node: usize) -> bool {
    match t {
        CartanType::B => node == rank,
        CartanType::C => node == 1,
        _ => is_cominuscule_node(t, rank, node),
    }
}

/// Build `W_P \ W` for `P = P_I`, with the default size cap.
pub fn build_quotient_poset(datum: &CartanDatum, marked: &[usize]) -> Result<QuotientPoset> {
    build_quotient_poset_capped(datum, marked, DEFAULT_ORBIT_CAP)
}

pub fn build_quotient_poset_capped(
    datum: &CartanDatum,
    marked: &[usize],
    cap: usize,
) -> Result<QuotientPoset> {
    if marked.is_empty() {
        return Err(Error::EmptySubset);
    }
    let rank = datum.rank();
    for &i in marked {
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
    }
    let mut marked: Vec<usize> = marked.to_vec();
    marked.sort_unstable();
    marked.dedup();

    let base = Weight::fundamental_sum(rank, &marked);
    let mut nodes = vec![CosetNode {
        id: 0,
        min_word: WeylWord::identity(),
        fingerprint: base.clone(),
        dim: 0,
    }];
    let mut index = HashMap::from([(base, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(id) = queue.pop_front() {
        for i in 1..=rank {
            if nodes[id].fingerprint.coords()[i - 1] <= 0 {
                continue;
            }
            let next = datum.reflect_unchecked(i, &nodes[id].fingerprint);
            if index.contains_key(&next) {
                continue;
            }
            if nodes.len() >= cap {
                return Err(Error::OrbitTooLarge { cap });
            }
            let new_id = nodes.len();
            let mut letters = nodes[id].min_word.letters().to_vec();
            letters.push(i);
            nodes.push(CosetNode {
                id: new_id,
                min_word: WeylWord::new(letters),
                fingerprint: next.clone(),
                dim: nodes[id].dim + 1,
            });
            index.insert(next, new_id);
            queue.push_back(new_id);
        }
    }

    let roots = datum.positive_roots().len();
    let mut below: Vec<Vec<(usize, u64)>> = vec![Vec::new(); nodes.len()];
    for node in &nodes {
        debug_assert_eq!(node.dim, inversion_dim(datum, &node.fingerprint));
        for r in 0..roots {
            let c = datum.coroot_pairing(&node.fingerprint, r);
            if c <= 0 {
                continue;
            }
            let up = datum.reflect_in_root(r, &node.fingerprint);
            let up_id = index[&up];
            if nodes[up_id].dim == node.dim + 1 {
                below[up_id].push((node.id, c as u64));
            }
        }
    }
    let dims = nodes.iter().map(|n| n.dim).collect();
    let hasse = GradedPoset::new(dims, below);
    Ok(QuotientPoset {
        datum: datum.clone(),
        marked,
        nodes,
        index,
        hasse,
    })
}

/// Number of positive roots pairing negatively with `mu`.
fn inversion_dim(datum: &CartanDatum, mu: &Weight) -> usize {
    (0..datum.positive_roots().len())
        .filter(|&r| datum.coroot_pairing(mu, r) < 0)
        .count()
}

impl QuotientPoset {
    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    /// The marked nodes `I` of `P = P_I`.
    pub fn marked(&self) -> &[usize] {
        &self.marked
    }

    pub fn label(&self) -> String {
        let nodes: Vec<String> = self.marked.iter().map(|i| i.to_string()).collect();
        format!("{}/P{}", self.datum.label(), nodes.join(","))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[CosetNode] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> Result<&CosetNode> {
        self.nodes.get(id).ok_or(Error::ForeignNode(id))
    }

    pub fn hasse(&self) -> &GradedPoset {
        &self.hasse
    }

    pub fn bottom(&self) -> NodeId {
        0
    }

    pub fn top(&self) -> NodeId {
        self.hasse.maximal_elements()[0]
    }

    pub fn dim(&self, id: NodeId) -> usize {
        self.nodes[id].dim
    }

    pub fn top_dim(&self) -> usize {
        self.nodes[self.top()].dim
    }

    pub fn defining_weight(&self) -> Weight {
        Weight::fundamental_sum(self.datum.rank(), &self.marked)
    }

    pub fn is_cominuscule(&self) -> bool {
        self.marked.len() == 1
            && is_cominuscule_node(self.datum.cartan_type(), self.datum.rank(), self.marked[0])
    }

    pub fn is_minuscule(&self) -> bool {
        self.marked.len() == 1
            && is_minuscule_node(self.datum.cartan_type(), self.datum.rank(), self.marked[0])
    }

    fn require_cominuscule(&self) -> Result<()> {
        if self.is_cominuscule() {
            Ok(())
        } else {
            Err(Error::NotCominuscule(self.label()))
        }
    }

    fn check(&self, id: NodeId) -> Result<()> {
        if id < self.nodes.len() {
            Ok(())
        } else {
            Err(Error::ForeignNode(id))
        }
    }

    /// Look up the coset with the given fingerprint weight.
    pub fn find(&self, fingerprint: &Weight) -> Option<NodeId> {
        self.index.get(fingerprint).copied()
    }

    /// Coset `W_P w` of an arbitrary word `w`.
    pub fn coset_of(&self, word: &WeylWord) -> Result<NodeId> {
        let mu = self.datum.act(&word.inverse(), &self.defining_weight())?;
        Ok(self.index[&mu])
    }

    /// Bruhat order on the quotient, by descent recursion on the minimal
    /// representatives: pick a simple reflection `s` lowering `w`; if it
    /// also lowers `v` compare `(sv, sw)`, otherwise compare `(v, sw)`.
    pub fn bruhat_leq(&self, v: NodeId, w: NodeId) -> Result<bool> {
        self.check(v)?;
        self.check(w)?;
        let mut lo = self.nodes[v].fingerprint.clone();
        let mut hi = self.nodes[w].fingerprint.clone();
        let mut lo_dim = self.nodes[v].dim;
        let mut hi_dim = self.nodes[w].dim;
        loop {
            if lo_dim > hi_dim {
                return Ok(false);
            }
            if hi_dim == 0 {
                return Ok(lo_dim == 0);
            }
            let i = hi
                .coords()
                .iter()
                .position(|&c| c < 0)
                .expect("non-identity coset has a descent")
                + 1;
            hi = self.datum.reflect_unchecked(i, &hi);
            hi_dim -= 1;
            if lo.coords()[i - 1] < 0 {
                lo = self.datum.reflect_unchecked(i, &lo);
                lo_dim -= 1;
            }
        }
    }

    /// Degree of the Schubert variety in the embedding given by the
    /// defining weight.
    pub fn degree(&self, id: NodeId) -> Result<BigUint> {
        self.require_cominuscule()?;
        self.check(id)?;
        Ok(self.hasse.degree(id).clone())
    }

    /// Plain count of saturated chains from the point class; defined on any
    /// quotient.
    pub fn chain_count(&self, id: NodeId) -> Result<BigUint> {
        self.check(id)?;
        Ok(self.hasse.chain_count(id).clone())
    }

    /// Poincare duality partner: the coset of `w w_0`, i.e. the fingerprint
    /// `w_0 * mu`.
    pub fn poincare_dual(&self, id: NodeId) -> Result<NodeId> {
        self.require_cominuscule()?;
        self.check(id)?;
        let all: Vec<usize> = (1..=self.datum.rank()).collect();
        let w0 = self.datum.longest_element(&all)?;
        let mu = self.datum.act_unchecked(&w0, &self.nodes[id].fingerprint);
        Ok(self.index[&mu])
    }

    /// The interval below `id`, with covers restricted and plain chain
    /// counts as degrees.
    pub fn lower_interval(&self, id: NodeId) -> Result<Interval> {
        self.check(id)?;
        let members = self.hasse.down_set(id);
        let poset = self.hasse.induced(&members);
        Ok(Interval {
            ambient_ids: members,
            poset,
        })
    }

    pub fn nodes_by_dim_deg(&self, dim: usize, degree: &BigUint) -> Vec<NodeId> {
        self.nodes
            .iter()
            .filter(|n| n.dim == dim && self.hasse.degree(n.id) == degree)
            .map(|n| n.id)
            .collect()
    }

    pub fn nodes_of_dim(&self, dim: usize) -> Vec<NodeId> {
        self.nodes
            .iter()
            .filter(|n| n.dim == dim)
            .map(|n| n.id)
            .collect()
    }

    /// The Poincare polynomial coefficients `#{nodes of dim d}`.
    pub fn poincare_polynomial(&self) -> Vec<usize> {
        self.hasse.rank_sizes()
    }

    /// `"dim:deg"` label of a node.
    pub fn dim_deg_label(&self, id: NodeId) -> String {
        format!("{}:{}", self.nodes[id].dim, self.hasse.degree(id))
    }
}

/// A lower interval `[bottom, v]` of a quotient.
#[derive(Debug, Clone)]
pub struct Interval {
    /// Ids in the ambient quotient, sorted; local index `k` is `ambient_ids[k]`.
    pub ambient_ids: Vec<NodeId>,
    pub poset: GradedPoset,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.ambient_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ambient_ids.is_empty()
    }

    pub fn local_of(&self, ambient: NodeId) -> Option<usize> {
        self.ambient_ids.binary_search(&ambient).ok()
    }
}
