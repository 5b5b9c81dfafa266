//! Witnesses for flexibility: descriptors of irreducible representatives of
//! every multiple of a Schubert class.
//!
//! Each witness may name a *container*: a Schubert variety of one larger
//! dimension that contains the representatives and meets them in a general
//! point. Containers are what the Tits transform needs to push a witness
//! from `G/Q` to `G/P`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::classical::{
    ann_index, associated_sequence, coset_to_isotropic, coset_to_quadric, dual_index, gr_dimension,
    isotropic_to_coset, quadric_to_coset, GrIndex, IsotropicFamily, IsotropicIndex, QuadricIndex,
    QuadricVariant,
};
use crate::error::{Error, Result};
use crate::golden::{Decoration, GoldenDiagram};
use crate::poset::{find_embeddings, NodeId, QuotientPoset};
use crate::rigidity::{classify_gr, classify_isotropic, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum WitnessKind {
    Bertini,
    LinearSpace,
    Divisor,
    QuadricExplicit,
    ModuliGr,
    ModuliIsotropic,
    Cone,
    Tits,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuadricConstruction {
    /// Hypersurface of degree `m` in the next linear space.
    NonMaximalLinear,
    /// Section by a general hypersurface of degree `m` inside a tangent
    /// section of one smaller codimension.
    TangentSection,
    /// `n` odd: cones over curves of degree `m`, by induction on `n`.
    OddMaximalInduction,
}

/// Incidence construction on `G(k,n)` from a plane curve of degree `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrModuli {
    pub k: usize,
    pub n: usize,
    /// 1: direct, some `i_j = 1` with `n-k > mu_j > 0`;
    /// 2: some `mu_{j+1} - mu_j = 1`, reduced to 1 through `W -> Ann(W)`.
    pub case: u8,
    /// Annihilator image of `lambda` (case 2 only), on `G(n-k,n)`.
    pub via: Option<Vec<usize>>,
    /// `u = i_1 + ... + i_j` for the direct construction.
    pub u: usize,
    /// Flag dimensions `lambda_1, ..., lambda_u + 1, ..., lambda_k` of the
    /// direct construction.
    pub flag_dims: Vec<usize>,
    /// Index of the containing Schubert variety on `G(k,n)`.
    pub container: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IsotropicBranch {
    /// Obstructed in `G(s,F)` for a maximal isotropic `F`.
    A,
    /// `OG` with `lambda_s` one below the largest allowed entry, through
    /// `G(s+1,F)`.
    B,
    /// `LG` with `mu_t = n-s` and `i_t = 1`.
    C1,
    /// `LG` with `lambda_s = n-1`.
    C2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotropicModuli {
    pub branch: IsotropicBranch,
    /// `dim F`.
    pub f_dim: usize,
    /// For `OG`: whether `F` lies in the same family as the variety.
    pub same_component: Option<bool>,
    /// The sequence used inside `G(s,F)` or `G(s+1,F)`.
    pub grassmannian_lambda: Option<Vec<usize>>,
    pub grassmannian: Option<GrModuli>,
    /// Index of the containing Schubert variety, when known.
    pub container: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ConstructionWitness {
    /// `node` is the unique divisor of `cover`, of the same degree.
    Bertini {
        cover: NodeId,
        cover_label: String,
    },
    /// A non-maximal linear space: hypersurfaces in the linear space `cover`.
    LinearSpace {
        cover: NodeId,
        cover_label: String,
    },
    /// The Schubert divisor: hypersurface sections of the whole variety.
    Divisor {
        top: NodeId,
    },
    QuadricExplicit {
        construction: QuadricConstruction,
        container: Option<String>,
    },
    ModuliGr(GrModuli),
    ModuliIsotropic(IsotropicModuli),
    /// Cone with vertex `apex` over a flexible class of `sub`.
    Cone {
        apex: NodeId,
        apex_label: String,
        sub: String,
        preimage: NodeId,
        preimage_label: String,
        preimage_kinds: Vec<WitnessKind>,
    },
    Tits {
        p: Vec<usize>,
        q: Vec<usize>,
        source: NodeId,
        source_label: String,
        source_cover: NodeId,
        cover_image: NodeId,
    },
}

impl ConstructionWitness {
    pub fn kind(&self) -> WitnessKind {
        match self {
            ConstructionWitness::Bertini { .. } => WitnessKind::Bertini,
            ConstructionWitness::LinearSpace { .. } => WitnessKind::LinearSpace,
            ConstructionWitness::Divisor { .. } => WitnessKind::Divisor,
            ConstructionWitness::QuadricExplicit { .. } => WitnessKind::QuadricExplicit,
            ConstructionWitness::ModuliGr(_) => WitnessKind::ModuliGr,
            ConstructionWitness::ModuliIsotropic(_) => WitnessKind::ModuliIsotropic,
            ConstructionWitness::Cone { .. } => WitnessKind::Cone,
            ConstructionWitness::Tits { .. } => WitnessKind::Tits,
        }
    }

    /// Short human-readable form, e.g. `ModuliGr(case 1, u=1)`.
    pub fn summary(&self) -> String {
        match self {
            ConstructionWitness::Bertini { cover_label, .. } => {
                format!("Bertini(in {cover_label})")
            }
            ConstructionWitness::LinearSpace { cover_label, .. } => {
                format!("LinearSpace(in {cover_label})")
            }
            ConstructionWitness::Divisor { .. } => "Divisor".to_string(),
            ConstructionWitness::QuadricExplicit { construction, .. } => {
                format!("QuadricExplicit({construction:?})")
            }
            ConstructionWitness::ModuliGr(g) => format!("ModuliGr(case {}, u={})", g.case, g.u),
            ConstructionWitness::ModuliIsotropic(m) => format!("ModuliIsotropic({:?})", m.branch),
            ConstructionWitness::Cone {
                apex_label,
                sub,
                preimage_label,
                ..
            } => format!("Cone(apex {apex_label}, {sub} {preimage_label})"),
            ConstructionWitness::Tits {
                q, source_label, ..
            } => {
                let q: Vec<String> = q.iter().map(|x| x.to_string()).collect();
                format!("Tits(Q={{{}}}, from {source_label})", q.join(","))
            }
        }
    }
}

fn one() -> BigUint {
    BigUint::one()
}

/// A cover `c` of `node` with `dim c >= 2`, `node` its only divisor and
/// equal degrees.
pub fn bertini_witness(poset: &QuotientPoset, node: NodeId) -> Option<ConstructionWitness> {
    bertini_covers(poset, node)
        .first()
        .map(|&c| ConstructionWitness::Bertini {
            cover: c,
            cover_label: poset.dim_deg_label(c),
        })
}

fn bertini_covers(poset: &QuotientPoset, node: NodeId) -> Vec<NodeId> {
    if !poset.is_cominuscule() || node >= poset.len() {
        return Vec::new();
    }
    let h = poset.hasse();
    h.covers_above(node)
        .iter()
        .copied()
        .filter(|&c| {
            poset.dim(c) >= 2 && h.covers_below(c) == [node] && h.degree(c) == h.degree(node)
        })
        .collect()
}

fn linear_covers(poset: &QuotientPoset, node: NodeId) -> Vec<NodeId> {
    if !poset.is_cominuscule() || node >= poset.len() {
        return Vec::new();
    }
    let h = poset.hasse();
    if h.degree(node) != &one() || poset.dim(node) == 0 {
        return Vec::new();
    }
    h.covers_above(node)
        .iter()
        .copied()
        .filter(|&c| h.degree(c) == &one())
        .collect()
}

/// A positive-dimensional linear space contained in a larger one.
pub fn linear_witness(poset: &QuotientPoset, node: NodeId) -> Option<ConstructionWitness> {
    linear_covers(poset, node)
        .first()
        .map(|&c| ConstructionWitness::LinearSpace {
            cover: c,
            cover_label: poset.dim_deg_label(c),
        })
}

/// The Schubert divisor of a variety of Picard number one and dimension at
/// least two.
pub fn divisor_witness(poset: &QuotientPoset, node: NodeId) -> Option<ConstructionWitness> {
    let top = poset.top();
    (poset.marked().len() == 1
        && node < poset.len()
        && poset.top_dim() >= 2
        && poset.dim(node) + 1 == poset.top_dim())
    .then_some(ConstructionWitness::Divisor { top })
}

/// Linear-space and divisor witnesses together.
pub fn linear_and_divisor_witness(poset: &QuotientPoset, node: NodeId) -> Vec<ConstructionWitness> {
    linear_witness(poset, node)
        .into_iter()
        .chain(divisor_witness(poset, node))
        .collect()
}

/// Bertini, linear-space and divisor witnesses with their containers.
pub fn poset_witnesses(
    poset: &QuotientPoset,
    node: NodeId,
) -> (Vec<ConstructionWitness>, Vec<NodeId>) {
    let mut witnesses = Vec::new();
    let mut containers = Vec::new();
    if let Some(w) = bertini_witness(poset, node) {
        witnesses.push(w);
        containers.extend(bertini_covers(poset, node));
    }
    if let Some(w) = linear_witness(poset, node) {
        witnesses.push(w);
        containers.extend(linear_covers(poset, node));
    }
    if let Some(w) = divisor_witness(poset, node) {
        witnesses.push(w);
        containers.push(poset.top());
    }
    containers.sort_unstable();
    containers.dedup();
    (witnesses, containers)
}

pub fn quadric_witness(idx: &QuadricIndex) -> Option<ConstructionWitness> {
    let n = idx.n();
    let (construction, container) = match idx.variant() {
        QuadricVariant::Linear(j) if j >= 2 && !idx.is_maximal_linear() => (
            QuadricConstruction::NonMaximalLinear,
            QuadricIndex::new(n, QuadricVariant::Linear(j + 1)).ok(),
        ),
        QuadricVariant::Linear(_) if idx.is_maximal_linear() => (
            QuadricConstruction::OddMaximalInduction,
            QuadricIndex::new(n, QuadricVariant::CoLinear(n.div_ceil(2) - 1)).ok(),
        ),
        QuadricVariant::CoLinear(j) if j >= 1 => (
            QuadricConstruction::TangentSection,
            QuadricIndex::new(n, QuadricVariant::CoLinear(j - 1)).ok(),
        ),
        _ => return None,
    };
    Some(ConstructionWitness::QuadricExplicit {
        construction,
        container: container.map(|c| c.to_string()),
    })
}

/// The containing class of a quadric witness.
pub fn quadric_container(idx: &QuadricIndex) -> Option<QuadricIndex> {
    let n = idx.n();
    match idx.variant() {
        QuadricVariant::Linear(j) if j >= 2 && !idx.is_maximal_linear() => {
            QuadricIndex::new(n, QuadricVariant::Linear(j + 1))
                .ok()
                .or_else(|| {
                    // n even: P L_{n/2} lies in both maximal spaces
                    QuadricIndex::new(
                        n,
                        QuadricVariant::MaxLinear(crate::classical::MaxComponent::Plus),
                    )
                    .ok()
                })
        }
        QuadricVariant::Linear(_) if idx.is_maximal_linear() => {
            QuadricIndex::new(n, QuadricVariant::CoLinear(n.div_ceil(2) - 1)).ok()
        }
        QuadricVariant::CoLinear(j) if j >= 1 => {
            QuadricIndex::new(n, QuadricVariant::CoLinear(j - 1)).ok()
        }
        _ => None,
    }
}

fn gr_direct(idx: &GrIndex) -> Option<GrModuli> {
    let mu = associated_sequence(idx.lambda()).expect("valid index");
    let nk = idx.n() - idx.k();
    let mut u = 0;
    for j in 1..=mu.t() {
        u += mu.mult(j);
        if mu.mult(j) == 1 && mu.mu(j) > 0 && mu.mu(j) < nk {
            let mut flag_dims = idx.lambda().to_vec();
            flag_dims[u - 1] += 1;
            return Some(GrModuli {
                k: idx.k(),
                n: idx.n(),
                case: 1,
                via: None,
                u,
                container: flag_dims.clone(),
                flag_dims,
            });
        }
    }
    None
}

fn has_unit_gap(idx: &GrIndex) -> bool {
    let mu = associated_sequence(idx.lambda()).expect("valid index");
    (1..mu.t()).any(|j| mu.mu(j + 1) == mu.mu(j) + 1)
}

/// The incidence construction, directly or through `W -> Ann(W)`.
pub fn moduli_witness_gr(idx: &GrIndex) -> Option<ConstructionWitness> {
    gr_moduli(idx).map(ConstructionWitness::ModuliGr)
}

fn gr_moduli(idx: &GrIndex) -> Option<GrModuli> {
    if let Some(m) = gr_direct(idx) {
        return Some(m);
    }
    if !has_unit_gap(idx) {
        return None;
    }
    let image = ann_index(idx);
    let inner = gr_direct(&image)?;
    let back = GrIndex::new(image.k(), image.n(), inner.container.clone()).ok()?;
    Some(GrModuli {
        k: idx.k(),
        n: idx.n(),
        case: 2,
        via: Some(image.lambda().to_vec()),
        u: inner.u,
        flag_dims: inner.flag_dims,
        container: ann_index(&back).lambda().to_vec(),
    })
}

/// `1` iff `nu` is the Poincare dual of `lambda`, for complementary
/// dimensions.
pub fn pairing(nu: &GrIndex, lambda: &GrIndex) -> Result<u8> {
    let total = lambda.k() * (lambda.n() - lambda.k());
    if nu.k() != lambda.k() || nu.n() != lambda.n() {
        return Err(Error::InvalidIndex(format!(
            "{nu} and {lambda} live on different Grassmannians"
        )));
    }
    let (a, b) = (gr_dimension(nu), gr_dimension(lambda));
    if a + b != total {
        return Err(Error::NotComplementary {
            left: a,
            right: b,
            total,
        });
    }
    Ok(u8::from(*nu == dual_index(lambda)))
}

fn gr_obstructed(k: usize, n: usize, lambda: &[usize]) -> Option<GrIndex> {
    let idx = GrIndex::new(k, n, lambda.to_vec()).ok()?;
    (!classify_gr(&idx).is_rigid()).then_some(idx)
}

/// Branch of the isotropic construction; errors on multi-rigid classes.
pub fn moduli_witness_isotropic(idx: &IsotropicIndex) -> Result<Option<ConstructionWitness>> {
    if classify_isotropic(idx).is_rigid() {
        return Err(Error::InvalidIndex(format!("{idx} is multi-rigid")));
    }
    Ok(isotropic_moduli(idx).map(ConstructionWitness::ModuliIsotropic))
}

fn isotropic_moduli(idx: &IsotropicIndex) -> Option<IsotropicModuli> {
    let s = idx.s();
    let lambda = idx.lambda();
    let (f_dim, same_for_a) = match idx.family() {
        IsotropicFamily::LG => (idx.n(), None),
        // OG(N,2N): F is in the same family iff s = N (mod 2)
        IsotropicFamily::OG => (idx.n(), Some(s % 2 == idx.n() % 2)),
    };
    let bound = idx.max_entry();
    let keep = |c: &[usize]| -> Option<Vec<usize>> {
        IsotropicIndex::new(idx.family(), idx.n(), c.to_vec())
            .ok()
            .map(|i| i.lambda().to_vec())
    };
    if s >= 1 && s < f_dim {
        if let Some(g) = gr_obstructed(s, f_dim, lambda) {
            let m = gr_moduli(&g);
            let container = m.as_ref().and_then(|m| keep(&m.container));
            return Some(IsotropicModuli {
                branch: IsotropicBranch::A,
                f_dim,
                same_component: same_for_a,
                grassmannian_lambda: Some(lambda.to_vec()),
                grassmannian: m,
                container,
            });
        }
    }
    if idx.family() == IsotropicFamily::OG && s >= 1 && lambda[s - 1] + 1 == bound {
        let mut extended = lambda.to_vec();
        extended.push(f_dim);
        if let Some(g) = gr_obstructed(s + 1, f_dim, &extended) {
            let m = gr_moduli(&g);
            let container = m.as_ref().and_then(|m| {
                let (last, rest) = m.container.split_last()?;
                (*last == f_dim).then(|| keep(rest)).flatten()
            });
            return Some(IsotropicModuli {
                branch: IsotropicBranch::B,
                f_dim,
                same_component: Some(s % 2 != idx.n() % 2),
                grassmannian_lambda: Some(extended),
                grassmannian: m,
                container,
            });
        }
    }
    if idx.family() == IsotropicFamily::LG && s >= 1 {
        let mu = associated_sequence(lambda).expect("valid index");
        let t = mu.t();
        let n = idx.n();
        let branch = if mu.mu(t) == n - s && mu.mult(t) == 1 {
            Some(IsotropicBranch::C1)
        } else if lambda[s - 1] + 1 == n {
            Some(IsotropicBranch::C2)
        } else {
            None
        };
        if let Some(branch) = branch {
            return Some(IsotropicModuli {
                branch,
                f_dim,
                same_component: None,
                grassmannian_lambda: None,
                grassmannian: None,
                container: None,
            });
        }
    }
    None
}

/// Per-node witnesses and containers on one poset.
#[derive(Debug, Clone)]
pub struct Certification {
    pub witnesses: Vec<Vec<ConstructionWitness>>,
    pub containers: Vec<Vec<NodeId>>,
}

impl Certification {
    pub fn empty(len: usize) -> Self {
        Certification {
            witnesses: vec![Vec::new(); len],
            containers: vec![Vec::new(); len],
        }
    }

    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn add(
        &mut self,
        node: NodeId,
        w: ConstructionWitness,
        containers: impl IntoIterator<Item = NodeId>,
    ) {
        self.witnesses[node].push(w);
        let list = &mut self.containers[node];
        list.extend(containers);
        list.sort_unstable();
        list.dedup();
    }

    pub fn kinds(&self, node: NodeId) -> BTreeSet<WitnessKind> {
        self.witnesses[node].iter().map(|w| w.kind()).collect()
    }

    pub fn is_certified(&self, node: NodeId) -> bool {
        !self.witnesses[node].is_empty()
    }
}

/// Bertini, linear-space and divisor witnesses on every node.
pub fn certify_poset(poset: &QuotientPoset) -> Certification {
    let mut cert = Certification::empty(poset.len());
    for v in 0..poset.len() {
        let (ws, cs) = poset_witnesses(poset, v);
        for w in ws {
            cert.add(v, w, []);
        }
        cert.containers[v] = cs;
    }
    cert
}

/// Poset witnesses plus the family-specific ones on `C_n/P_n` or `D_n/P_n`.
pub fn certify_isotropic(poset: &QuotientPoset) -> Result<Certification> {
    let mut cert = certify_poset(poset);
    for v in 0..poset.len() {
        let idx = coset_to_isotropic(poset, v)?;
        if classify_isotropic(&idx).is_rigid() {
            continue;
        }
        if let Some(m) = isotropic_moduli(&idx) {
            let container = match &m.container {
                Some(c) => {
                    let ci = IsotropicIndex::new(idx.family(), idx.n(), c.clone())?;
                    vec![isotropic_to_coset(poset, &ci)?]
                }
                None => Vec::new(),
            };
            cert.add(v, ConstructionWitness::ModuliIsotropic(m), container);
        }
    }
    Ok(cert)
}

/// Poset witnesses plus the explicit quadric constructions on `B_m/P_1` or
/// `D_m/P_1`.
pub fn certify_quadric(poset: &QuotientPoset) -> Result<Certification> {
    let mut cert = certify_poset(poset);
    for v in 0..poset.len() {
        let idx = coset_to_quadric(poset, v)?;
        if let Some(w) = quadric_witness(&idx) {
            let container = match quadric_container(&idx) {
                Some(c) => vec![quadric_to_coset(poset, &c)?],
                None => Vec::new(),
            };
            cert.add(v, w, container);
        }
    }
    Ok(cert)
}

/// An injective, cover-preserving map from `sub` into the interval below
/// `apex`, raising dimension by one and preserving degrees. Maps
/// `sub` node ids to `ambient` node ids.
pub fn cone_embedding(
    sub: &QuotientPoset,
    ambient: &QuotientPoset,
    apex: NodeId,
) -> Result<Vec<NodeId>> {
    let interval = ambient.lower_interval(apex)?;
    let maps = find_embeddings(sub.hasse(), &interval.poset, 1, false, 2);
    match maps.first() {
        Some(m) => Ok(m.iter().map(|&l| interval.ambient_ids[l]).collect()),
        None => Err(Error::NoEmbedding(format!(
            "{} below {} of {}",
            sub.label(),
            ambient.dim_deg_label(apex),
            ambient.label()
        ))),
    }
}

/// Number of distinct cone embeddings (capped at `limit`).
pub fn cone_embedding_count(
    sub: &QuotientPoset,
    ambient: &QuotientPoset,
    apex: NodeId,
    limit: usize,
) -> Result<usize> {
    let interval = ambient.lower_interval(apex)?;
    Ok(find_embeddings(sub.hasse(), &interval.poset, 1, false, limit).len())
}

/// Add a cone witness to `phi(v)` for every certified node `v` of `sub`.
pub fn certify_cones(
    cert: &mut Certification,
    ambient: &QuotientPoset,
    apex: NodeId,
    sub: &QuotientPoset,
    sub_name: &str,
    sub_cert: &Certification,
) -> Result<()> {
    let phi = cone_embedding(sub, ambient, apex)?;
    for v in 0..sub.len() {
        if !sub_cert.is_certified(v) {
            continue;
        }
        let containers: Vec<NodeId> = sub_cert.containers[v].iter().map(|&c| phi[c]).collect();
        cert.add(
            phi[v],
            ConstructionWitness::Cone {
                apex,
                apex_label: ambient.dim_deg_label(apex),
                sub: sub_name.to_string(),
                preimage: v,
                preimage_label: sub.dim_deg_label(v),
                preimage_kinds: sub_cert.kinds(v).into_iter().collect(),
            },
            containers,
        );
    }
    Ok(())
}

fn decoration_kind(d: Decoration) -> Option<WitnessKind> {
    match d {
        Decoration::Rigid => None,
        Decoration::Plus => Some(WitnessKind::Bertini),
        Decoration::Star => Some(WitnessKind::Cone),
        Decoration::T => Some(WitnessKind::Tits),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecorationEntry {
    pub node: NodeId,
    pub label: String,
    pub decoration: String,
    pub certified: Vec<WitnessKind>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecorationReport {
    pub variety: String,
    pub entries: Vec<DecorationEntry>,
    pub rigid: usize,
    pub witnessed: usize,
    /// Non-rigid nodes without any witness.
    pub violations: usize,
    pub failures: usize,
}

impl DecorationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.violations == 0
    }

    /// A table in diagram order (by dimension, then node id).
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<5} {:<10} {:<6} {:<40} result\n",
            "node", "dim:deg", "mark", "certified"
        );
        for e in &self.entries {
            let kinds: Vec<String> = e.certified.iter().map(|k| k.to_string()).collect();
            out.push_str(&format!(
                "{:<5} {:<10} {:<6} {:<40} {}\n",
                e.node,
                e.label,
                e.decoration,
                if kinds.is_empty() {
                    "-".to_string()
                } else {
                    kinds.join(",")
                },
                if e.pass { "pass" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "{}: {} rigid, {} witnessed, {} violations, {} failures\n",
            self.variety, self.rigid, self.witnessed, self.violations, self.failures
        ));
        out
    }
}

/// Compare the decorations of the transcribed diagram with the certified
/// witnesses: rigid nodes must certify nothing, `+` needs Bertini, `*` a
/// cone and `T` a Tits witness.
pub fn verify_decorations(
    poset: &QuotientPoset,
    golden: &GoldenDiagram,
    cert: &Certification,
) -> Result<DecorationReport> {
    golden.validate(poset)?;
    if cert.len() != poset.len() {
        return Err(Error::Golden(format!(
            "certification covers {} nodes, {} has {}",
            cert.len(),
            poset.label(),
            poset.len()
        )));
    }
    let decorations = golden.decorations();
    let mut order: Vec<NodeId> = (0..poset.len()).collect();
    order.sort_by_key(|&v| (poset.dim(v), v));
    let mut entries = Vec::new();
    let (mut rigid, mut witnessed, mut violations, mut failures) = (0, 0, 0, 0);
    for v in order {
        let kinds = cert.kinds(v);
        let d = decorations[v];
        let pass = match decoration_kind(d) {
            None => kinds.is_empty(),
            Some(k) => kinds.contains(&k),
        };
        if d == Decoration::Rigid {
            rigid += 1;
        } else if kinds.is_empty() {
            violations += 1;
        } else {
            witnessed += 1;
        }
        if !pass {
            failures += 1;
        }
        entries.push(DecorationEntry {
            node: v,
            label: poset.dim_deg_label(v),
            decoration: d.to_string(),
            certified: kinds.into_iter().collect(),
            pass,
        });
    }
    Ok(DecorationReport {
        variety: poset.label(),
        entries,
        rigid,
        witnessed,
        violations,
        failures,
    })
}

/// Status implied by a certification: flexible iff some witness exists.
pub fn certified_status(cert: &Certification, node: NodeId) -> Status {
    if cert.is_certified(node) {
        Status::Flexible
    } else {
        Status::MultiRigid
    }
}
