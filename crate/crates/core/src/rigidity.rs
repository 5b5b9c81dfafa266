//! Multi-rigidity criteria for Schubert classes on cominuscule varieties.
//!
//! Classical families are decided by the clauses on the associated sequence
//! `mu = (mu_1^{i_1}, ..., mu_t^{i_t})`; the exceptional ones by the
//! transcribed diagrams in [`crate::golden`].

use std::fmt;

use serde::Serialize;

use crate::classical::{
    associated_sequence, GrIndex, IsotropicFamily, IsotropicIndex, QuadricIndex, QuadricVariant,
};
use crate::error::Result;
use crate::golden::{Decoration, GoldenDiagram};
use crate::poset::{NodeId, QuotientPoset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    MultiRigid,
    Flexible,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::MultiRigid => "MultiRigid",
            Status::Flexible => "Flexible",
        })
    }
}

/// A classification together with the clause that decided it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub source: String,
}

impl Verdict {
    fn rigid(source: impl Into<String>) -> Self {
        Verdict {
            status: Status::MultiRigid,
            source: source.into(),
        }
    }

    fn flexible(source: impl Into<String>) -> Self {
        Verdict {
            status: Status::Flexible,
            source: source.into(),
        }
    }

    pub fn is_rigid(&self) -> bool {
        self.status == Status::MultiRigid
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.status, self.source)
    }
}

/// Multi-rigid iff
/// * `i_j >= 2` for `1 < j < t`,
/// * `mu_{j-1} <= mu_j - 2` for `1 < j <= t`,
/// * `i_1 >= 2` if `mu_1 > 0`, and `i_t >= 2` if `mu_t < n-k`.
///
/// On projective space (`k = 1`) the last clause would also reject the
/// point and the fundamental class; there the rigid classes are exactly
/// those two, which is also what the annihilator symmetry with `k = n-1`
/// forces.
pub fn classify_gr(idx: &GrIndex) -> Verdict {
    let (k, n) = (idx.k(), idx.n());
    if k == 1 {
        let a = idx.lambda()[0];
        return if a == 1 {
            Verdict::rigid("point of projective space")
        } else if a == n {
            Verdict::rigid("fundamental class of projective space")
        } else {
            Verdict::flexible(format!("non-maximal linear space P^{}", a - 1))
        };
    }
    let mu = associated_sequence(idx.lambda()).expect("valid index");
    let t = mu.t();
    for j in 2..t {
        if mu.mult(j) < 2 {
            return Verdict::flexible(format!("i_{j} = 1 at interior j = {j}"));
        }
    }
    for j in 2..=t {
        if mu.mu(j - 1) + 2 > mu.mu(j) {
            return Verdict::flexible(format!("mu_{} = mu_{j} - 1", j - 1));
        }
    }
    if mu.mu(1) > 0 && mu.mult(1) < 2 {
        return Verdict::flexible("i_1 = 1 with mu_1 > 0");
    }
    if mu.mu(t) < n - k && mu.mult(t) < 2 {
        return Verdict::flexible("i_t = 1 with mu_t < n-k");
    }
    Verdict::rigid("all clauses hold")
}

/// Shared clauses for `LG(n,2n)` (`bound = n`, `slack = 2`) and
/// `OG(n,2n)` (`bound = n-1`, `slack = 3`):
/// * `i_j >= 2` and `mu_{j-1} <= mu_j - 2` for `1 < j <= t`,
/// * `i_1 >= 2` if `mu_1 > 0`,
/// * `lambda_s <= n - slack` if `lambda_s < bound`.
fn classify_isotropic_clauses(idx: &IsotropicIndex, bound: usize, slack: usize) -> Verdict {
    if idx.lambda().is_empty() {
        return Verdict::rigid("fundamental class");
    }
    let mu = associated_sequence(idx.lambda()).expect("valid index");
    let t = mu.t();
    for j in 2..=t {
        if mu.mult(j) < 2 {
            return Verdict::flexible(format!("i_{j} = 1 with j > 1"));
        }
        if mu.mu(j - 1) + 2 > mu.mu(j) {
            return Verdict::flexible(format!("mu_{} = mu_{j} - 1", j - 1));
        }
    }
    if mu.mu(1) > 0 && mu.mult(1) < 2 {
        return Verdict::flexible("i_1 = 1 with mu_1 > 0");
    }
    let last = *idx.lambda().last().expect("nonempty");
    if last < bound && last + slack > idx.n() {
        return Verdict::flexible(format!("lambda_s = {last} exceeds n-{slack}"));
    }
    Verdict::rigid("all clauses hold")
}

pub fn classify_lg(idx: &IsotropicIndex) -> Verdict {
    debug_assert_eq!(idx.family(), IsotropicFamily::LG);
    classify_isotropic_clauses(idx, idx.n(), 2)
}

pub fn classify_og(idx: &IsotropicIndex) -> Verdict {
    debug_assert_eq!(idx.family(), IsotropicFamily::OG);
    classify_isotropic_clauses(idx, idx.n() - 1, 3)
}

pub fn classify_isotropic(idx: &IsotropicIndex) -> Verdict {
    match idx.family() {
        IsotropicFamily::LG => classify_lg(idx),
        IsotropicFamily::OG => classify_og(idx),
    }
}

/// Rigid exactly for the point, the fundamental class and, for `n` even,
/// the two classes of maximal linear spaces.
pub fn classify_quadric(idx: &QuadricIndex) -> Verdict {
    match idx.variant() {
        QuadricVariant::Linear(1) => Verdict::rigid("point"),
        QuadricVariant::CoLinear(0) => Verdict::rigid("fundamental class"),
        QuadricVariant::MaxLinear(_) => Verdict::rigid("maximal linear space, n even"),
        QuadricVariant::Linear(j) if idx.is_maximal_linear() => {
            Verdict::flexible(format!("maximal linear space P^{}, n odd", j - 1))
        }
        QuadricVariant::Linear(j) => {
            Verdict::flexible(format!("non-maximal linear space P^{}", j - 1))
        }
        QuadricVariant::CoLinear(j) => {
            Verdict::flexible(format!("tangent section of codimension {j}"))
        }
    }
}

/// Rigid iff the transcribed diagram encircles the node. The diagram is
/// validated against the poset first.
pub fn classify_exceptional(
    poset: &QuotientPoset,
    node: NodeId,
    golden: &GoldenDiagram,
) -> Result<Verdict> {
    golden.validate(poset)?;
    poset.node(node)?;
    let rec = golden.record(node).expect("validated");
    Ok(if rec.decoration == Decoration::Rigid {
        Verdict::rigid("encircled in the diagram")
    } else {
        Verdict::flexible(format!("diagram decoration {}", rec.decoration))
    })
}
