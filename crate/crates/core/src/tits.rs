//! Tits correspondences `G/P <- G/(P cap Q) -> G/Q` on Schubert cells.
//!
//! For a coset `W_Q w` with maximal representative `w`, the transform of the
//! Schubert variety `Y_w subset G/Q` is the Schubert variety of `W_P w` in
//! `G/P`. The maximal representative is `w0_Q w_min`, with `w0_Q` the longest
//! element of the Levi of `Q`.

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{CartanDatum, WeylWord};
use crate::poset::export::big_to_json;
use crate::poset::{build_quotient_poset, find_embeddings, NodeId, QuotientPoset};

#[derive(Debug, Clone)]
pub struct TitsContext {
    datum: CartanDatum,
    p: Vec<usize>,
    q: Vec<usize>,
    poset_p: QuotientPoset,
    poset_q: QuotientPoset,
    w0_q: WeylWord,
    d_tau: usize,
    d_eta: usize,
    transform: Vec<NodeId>,
}

/// Build the context for `P = P_I`, `Q = P_J`.
pub fn build_context(datum: &CartanDatum, i: &[usize], j: &[usize]) -> Result<TitsContext> {
    let poset_p = build_quotient_poset(datum, i)?;
    let poset_q = build_quotient_poset(datum, j)?;
    let p = poset_p.marked().to_vec();
    let q = poset_q.marked().to_vec();
    if p == q {
        return Err(Error::Tits(format!(
            "P and Q coincide ({})",
            poset_p.label()
        )));
    }
    let mut r: Vec<usize> = p.iter().chain(&q).copied().collect();
    r.sort_unstable();
    r.dedup();
    let dim_r = datum.flag_dimension(&r);
    let d_tau = dim_r - datum.flag_dimension(&q);
    let d_eta = dim_r - datum.flag_dimension(&p);
    let levi = datum.complement(&q);
    let w0_q = if levi.is_empty() {
        WeylWord::identity()
    } else {
        datum.longest_element(&levi)?
    };
    let transform = poset_q
        .nodes()
        .iter()
        .map(|n| poset_p.coset_of(&w0_q.concat(&n.min_word)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TitsContext {
        datum: datum.clone(),
        p,
        q,
        poset_p,
        poset_q,
        w0_q,
        d_tau,
        d_eta,
        transform,
    })
}

impl TitsContext {
    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn p(&self) -> &[usize] {
        &self.p
    }

    pub fn q(&self) -> &[usize] {
        &self.q
    }

    pub fn poset_p(&self) -> &QuotientPoset {
        &self.poset_p
    }

    pub fn poset_q(&self) -> &QuotientPoset {
        &self.poset_q
    }

    pub fn w0_q(&self) -> &WeylWord {
        &self.w0_q
    }

    /// Fiber dimension of `tau: G/(P cap Q) -> G/Q`.
    pub fn d_tau(&self) -> usize {
        self.d_tau
    }

    /// Fiber dimension of `eta: G/(P cap Q) -> G/P`.
    pub fn d_eta(&self) -> usize {
        self.d_eta
    }

    pub fn label(&self) -> String {
        let fmt = |s: &[usize]| {
            s.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "{} P={{{}}} Q={{{}}}",
            self.datum.label(),
            fmt(&self.p),
            fmt(&self.q)
        )
    }

    fn check_q(&self, v: NodeId) -> Result<()> {
        if v < self.poset_q.len() {
            Ok(())
        } else {
            Err(Error::ForeignNode(v))
        }
    }

    /// `w0_Q * w_min` for a coset of `G/Q`.
    pub fn max_rep(&self, v: NodeId) -> Result<WeylWord> {
        let n = self.poset_q.node(v)?;
        Ok(self.w0_q.concat(&n.min_word))
    }

    /// The node of `G/P` carrying `T(Y_v)`.
    pub fn tits_transform(&self, v: NodeId) -> Result<NodeId> {
        self.check_q(v)?;
        Ok(self.transform[v])
    }

    /// `dim T(Y_v) = dim Y_v + d_tau`, i.e. `eta` is generically injective on
    /// `tau^{-1}(Y_v)`.
    pub fn injectivity_check(&self, v: NodeId) -> Result<bool> {
        self.check_q(v)?;
        Ok(self.poset_p.dim(self.transform[v]) == self.poset_q.dim(v) + self.d_tau)
    }

    /// Search for a divisor `Y_s subset Y_c` of `G/Q` with `T(Y_s) = x` and
    /// `eta` generically injective over both `Y_s` and `Y_c`, where `Y_s` is already known
    /// to have irreducible representatives of every multiple inside `Y_c`
    /// through a general point of it (`c in q_containers[s]`).
    /// Deterministic: smallest `(s, c)`.
    pub fn tits_flexibility_witness(
        &self,
        x: NodeId,
        q_containers: &[Vec<NodeId>],
    ) -> Result<Option<TitsWitness>> {
        if x >= self.poset_p.len() {
            return Err(Error::ForeignNode(x));
        }
        if q_containers.len() != self.poset_q.len() {
            return Err(Error::Tits(format!(
                "container table has {} entries, {} has {}",
                q_containers.len(),
                self.poset_q.label(),
                self.poset_q.len()
            )));
        }
        for (s, listed) in q_containers.iter().enumerate() {
            if self.transform[s] != x || !self.injectivity_check(s)? {
                continue;
            }
            let mut containers = listed.clone();
            containers.sort_unstable();
            for c in containers {
                if !self.poset_q.hasse().covers_above(s).contains(&c) {
                    return Err(Error::Tits(format!(
                        "container {c} does not cover {s} in {}",
                        self.poset_q.label()
                    )));
                }
                if self.injectivity_check(c)? {
                    return Ok(Some(TitsWitness {
                        p: self.p.clone(),
                        q: self.q.clone(),
                        source: s,
                        source_cover: c,
                        source_label: self.q_label(s),
                        cover_image: self.transform[c],
                    }));
                }
            }
        }
        Ok(None)
    }

    /// `"dim:deg"` for a `G/Q` node; plain chain count when `G/Q` is not
    /// cominuscule.
    pub fn q_label(&self, v: NodeId) -> String {
        format!(
            "{}:{}",
            self.poset_q.dim(v),
            self.poset_q.hasse().chain_count(v)
        )
    }

    /// Transform table as JSON.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.poset_q.len())
            .map(|v| {
                let t = self.transform[v];
                json!({
                    "src": {"id": v, "dim": self.poset_q.dim(v), "deg": big_to_json(self.poset_q.hasse().chain_count(v))},
                    "dst": {"id": t, "dim": self.poset_p.dim(t), "deg": big_to_json(self.poset_p.hasse().degree(t))},
                    "injective": self.poset_p.dim(t) == self.poset_q.dim(v) + self.d_tau,
                })
            })
            .collect();
        json!({
            "context": {
                "type": self.datum.label(),
                "P": self.p,
                "Q": self.q,
                "d_tau": self.d_tau,
                "d_eta": self.d_eta,
            },
            "rows": rows,
        })
    }
}

/// A divisor `Y_s subset Y_c` in `G/Q` whose transform certifies flexibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TitsWitness {
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub source: NodeId,
    pub source_cover: NodeId,
    pub source_label: String,
    pub cover_image: NodeId,
}

/// Apply [`TitsContext::tits_flexibility_witness`] to every node of `G/P`.
pub fn certify_all(
    ctx: &TitsContext,
    q_containers: &[Vec<NodeId>],
) -> Result<Vec<Option<TitsWitness>>> {
    (0..ctx.poset_p.len())
        .map(|x| ctx.tits_flexibility_witness(x, q_containers))
        .collect()
}

/// For every node of `G/P`, the images `T(Y_c)` of all containers used by a
/// valid witness; these are the containers of the transformed
/// representatives.
pub fn transported_containers(
    ctx: &TitsContext,
    q_containers: &[Vec<NodeId>],
) -> Result<Vec<Vec<NodeId>>> {
    let mut out = vec![Vec::new(); ctx.poset_p.len()];
    for (s, cs) in q_containers.iter().enumerate() {
        if !ctx.injectivity_check(s)? {
            continue;
        }
        for &c in cs {
            if ctx.injectivity_check(c)? {
                out[ctx.transform[s]].push(ctx.transform[c]);
            }
        }
    }
    for list in &mut out {
        list.sort_unstable();
        list.dedup();
    }
    Ok(out)
}

/// One row of the transform table for the Cayley plane inside `E7/P1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    /// Node of `E7/P1`.
    pub source: NodeId,
    pub source_dim: usize,
    /// Chain count inside the interval.
    pub source_degree: BigUint,
    /// Node of `E7/P7`.
    pub target: NodeId,
    pub target_dim: usize,
    pub target_degree: BigUint,
}

/// The 27-node interval of `E7/P1` swept by the transform of a point of
/// `E7/P7`, together with its transforms back into `E7/P7`.
#[derive(Debug, Clone)]
pub struct Table1 {
    pub rows: Vec<Table1Row>,
    /// Local interval index to `E6/P6` node, when supplied.
    pub interval: crate::poset::Interval,
}

/// Compute the table from the contexts `(P={1}, Q={7})` and
/// `(P={7}, Q={1})` of `E7`.
pub fn table1(to_p1: &TitsContext, to_p7: &TitsContext) -> Result<Table1> {
    let label = to_p1.datum.label();
    if label != "E7" || to_p1.p != [1] || to_p1.q != [7] || to_p7.p != [7] || to_p7.q != [1] {
        return Err(Error::Tits(format!(
            "table needs E7 contexts (1,7) and (7,1), got {} and {}",
            to_p1.label(),
            to_p7.label()
        )));
    }
    let apex = to_p1.tits_transform(to_p1.poset_q.bottom())?;
    let interval = to_p1.poset_p.lower_interval(apex)?;
    if interval.len() != 27 {
        return Err(Error::Tits(format!(
            "interval below node {apex} of E7/P1 has {} nodes, expected 27",
            interval.len()
        )));
    }
    let mut rows = Vec::with_capacity(27);
    for (local, &y) in interval.ambient_ids.iter().enumerate() {
        let t = to_p7.tits_transform(y)?;
        rows.push(Table1Row {
            source: y,
            source_dim: to_p7.poset_q.dim(y),
            source_degree: interval.poset.degree(local).clone(),
            target: t,
            target_dim: to_p7.poset_p.dim(t),
            target_degree: to_p7.poset_p.hasse().degree(t).clone(),
        });
    }
    rows.sort_by_key(|r| (r.source_dim, r.source));
    Ok(Table1 { rows, interval })
}

/// Isomorphisms between the interval and a reference poset (e.g. `E6/P6`),
/// as maps from local interval indices.
pub fn interval_isomorphisms(table: &Table1, reference: &QuotientPoset) -> Vec<Vec<NodeId>> {
    find_embeddings(&table.interval.poset, reference.hasse(), 0, true, 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_cartan, CartanType};

    fn e6() -> CartanDatum {
        build_cartan(CartanType::E6, 6).unwrap()
    }

    #[test]
    fn fiber_dimensions() {
        let c = build_context(&e6(), &[6], &[1]).unwrap();
        assert_eq!(c.d_tau(), 8);
        let c = build_context(&e6(), &[6], &[5]).unwrap();
        assert_eq!((c.d_tau(), c.d_eta()), (1, 10));
        let e7 = build_cartan(CartanType::E7, 7).unwrap();
        let c = build_context(&e7, &[7], &[6]).unwrap();
        assert_eq!((c.d_tau(), c.d_eta()), (1, 16));
        assert!(build_context(&e7, &[7], &[7]).is_err());
    }

    #[test]
    fn max_reps() {
        let d = e6();
        let c = build_context(&d, &[1], &[6]).unwrap();
        assert_eq!(d.length(c.w0_q()).unwrap(), 20);
        for v in 0..c.poset_q().len() {
            let w = c.max_rep(v).unwrap();
            assert_eq!(d.length(&w).unwrap(), c.poset_q().dim(v) + 20);
        }
        let top = c.max_rep(c.poset_q().top()).unwrap();
        assert_eq!(d.length(&top).unwrap(), 36);
        assert!(c.max_rep(27).is_err());
    }

    #[test]
    fn points_transform_to_lines_and_quadrics() {
        let d = e6();
        let lines = build_context(&d, &[6], &[5]).unwrap();
        let t = lines.tits_transform(0).unwrap();
        assert_eq!(lines.poset_p().dim_deg_label(t), "1:1");
        let quadrics = build_context(&d, &[6], &[1]).unwrap();
        let t = quadrics.tits_transform(0).unwrap();
        assert_eq!(quadrics.poset_p().dim_deg_label(t), "8:2");
        assert!(quadrics.injectivity_check(0).unwrap());
        assert!(!quadrics
            .injectivity_check(quadrics.poset_q().top())
            .unwrap());
    }

    #[test]
    fn transform_is_monotone_and_bounded() {
        let d = e6();
        for (i, j) in [(6, 1), (6, 5), (5, 6), (1, 6)] {
            let c = build_context(&d, &[i], &[j]).unwrap();
            let (pq, pp) = (c.poset_q(), c.poset_p());
            for v in 0..pq.len() {
                let tv = c.tits_transform(v).unwrap();
                assert!(pp.dim(tv) <= pq.dim(v) + c.d_tau());
                for &w in pq.hasse().covers_above(v) {
                    assert!(pp.bruhat_leq(tv, c.tits_transform(w).unwrap()).unwrap());
                }
            }
        }
    }
}
