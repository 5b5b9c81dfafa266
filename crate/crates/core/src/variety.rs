//! Text selectors for the supported varieties and their Schubert classes,
//! and a single classification entry point over all of them.
//!
//! Varieties: `gr:k,n`, `lg:n`, `og:n` (for `OG(n,2n)`), `quad:n`, `E6`,
//! `E7`. A class may follow after one more colon (`gr:2,4:2,4`) or be given
//! separately. Class syntax: comma sequences for `lambda` (`-` for the
//! empty sequence), `linear-j | colinear-j | max-plus | max-minus` on
//! quadrics, and `dim:deg` on the exceptional varieties, with `a`
//! (maximal) or `b` (non-maximal) to tell apart linear spaces of equal
//! dimension. `#id` selects a node id on any variety.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::classical::{
    coset_to_gr, coset_to_isotropic, coset_to_quadric, gr_to_coset, isotropic_to_coset,
    isotropic_type, quadric_to_coset, quadric_type, GrIndex, IsotropicFamily, IsotropicIndex,
    MaxComponent, QuadricIndex, QuadricVariant,
};
use crate::constructions::{
    certify_isotropic, certify_poset, certify_quadric, moduli_witness_gr, Certification,
    ConstructionWitness,
};
use crate::error::{Error, Result};
use crate::exceptional::{certify_e6, certify_e7, e6_poset};
use crate::golden::GoldenData;
use crate::lattice::{build_cartan, CartanType};
use crate::poset::{build_quotient_poset, NodeId, QuotientPoset};
use crate::rigidity::{
    classify_exceptional, classify_gr, classify_isotropic, classify_quadric, Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variety {
    Grassmannian { k: usize, n: usize },
    Lagrangian { n: usize },
    Spinor { n: usize },
    Quadric { n: usize },
    E6,
    E7,
}

fn parse_usize(tok: &str, what: &str) -> Result<usize> {
    tok.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what} {tok:?}")))
}

/// Split `family:params[:class]` into a variety and the optional class.
pub fn parse_selector(s: &str) -> Result<(Variety, Option<String>)> {
    let s = s.trim();
    let (family, rest) = s.split_once(':').unwrap_or((s, ""));
    let (params, class) = match rest.split_once(':') {
        Some((p, c)) => (p, Some(c.to_string())),
        None => (rest, None),
    };
    let variety = match family.to_ascii_lowercase().as_str() {
        "gr" => {
            let (k, n) = params
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected gr:k,n, got {s:?}")))?;
            let (k, n) = (parse_usize(k, "k")?, parse_usize(n, "n")?);
            if k == 0 || k >= n {
                return Err(Error::Parse(format!("G({k},{n}) needs 0 < k < n")));
            }
            Variety::Grassmannian { k, n }
        }
        "lg" => Variety::Lagrangian {
            n: parse_usize(params, "n")?,
        },
        "og" => Variety::Spinor {
            n: parse_usize(params, "n")?,
        },
        "quad" => Variety::Quadric {
            n: parse_usize(params, "n")?,
        },
        "e6" if rest.is_empty() => Variety::E6,
        "e7" if rest.is_empty() => Variety::E7,
        // exceptional varieties take no parameters, so `E6:12:45` carries a class
        "e6" => return Ok((Variety::E6, Some(rest.to_string()))),
        "e7" => return Ok((Variety::E7, Some(rest.to_string()))),
        _ => return Err(Error::Parse(format!("unknown variety {s:?}"))),
    };
    match variety {
        Variety::Lagrangian { n } if n < 2 => Err(Error::Parse("lg:n needs n >= 2".into())),
        Variety::Spinor { n } if n < 3 => Err(Error::Parse("og:n needs n >= 3".into())),
        Variety::Quadric { n } if n < 3 => Err(Error::Parse("quad:n needs n >= 3".into())),
        _ => Ok((variety, class)),
    }
}

impl FromStr for Variety {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_selector(s)? {
            (v, None) => Ok(v),
            (_, Some(c)) => Err(Error::Parse(format!(
                "unexpected class {c:?} in variety selector"
            ))),
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variety::Grassmannian { k, n } => write!(f, "G({k},{n})"),
            Variety::Lagrangian { n } => write!(f, "LG({n},{})", 2 * n),
            Variety::Spinor { n } => write!(f, "OG({n},{})", 2 * n),
            Variety::Quadric { n } => write!(f, "Q^{n}"),
            Variety::E6 => f.write_str("E6/P6"),
            Variety::E7 => f.write_str("E7/P7"),
        }
    }
}

fn parse_lambda(tok: &str) -> Result<Vec<usize>> {
    let t = tok.trim();
    if t.is_empty() || t == "-" || t == "()" {
        return Ok(Vec::new());
    }
    t.trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|x| parse_usize(x, "entry"))
        .collect()
}

fn parse_quadric_variant(tok: &str) -> Result<QuadricVariant> {
    let t = tok.trim().to_ascii_lowercase();
    let j = |rest: &str| parse_usize(rest, "quadric index");
    if let Some(rest) = t.strip_prefix("linear-") {
        Ok(QuadricVariant::Linear(j(rest)?))
    } else if let Some(rest) = t.strip_prefix("colinear-") {
        Ok(QuadricVariant::CoLinear(j(rest)?))
    } else if t == "max-plus" {
        Ok(QuadricVariant::MaxLinear(MaxComponent::Plus))
    } else if t == "max-minus" {
        Ok(QuadricVariant::MaxLinear(MaxComponent::Minus))
    } else {
        Err(Error::Parse(format!("bad quadric class {tok:?}")))
    }
}

/// Degree-one nodes with no degree-one cover are maximal linear spaces.
fn is_maximal_linear(poset: &QuotientPoset, v: NodeId) -> bool {
    let h = poset.hasse();
    !h.covers_above(v)
        .iter()
        .any(|&c| *h.degree(c) == BigUint::from(1u32))
}

impl Variety {
    pub fn cartan(&self) -> (CartanType, usize, usize) {
        match *self {
            Variety::Grassmannian { k, n } => (CartanType::A, n - 1, k),
            Variety::Lagrangian { n } => {
                let (t, r) = isotropic_type(IsotropicFamily::LG, n).expect("validated");
                (t, r, r)
            }
            Variety::Spinor { n } => {
                let (t, r) = isotropic_type(IsotropicFamily::OG, n).expect("validated");
                (t, r, r)
            }
            Variety::Quadric { n } => {
                let (t, r) = quadric_type(n).expect("validated");
                (t, r, 1)
            }
            Variety::E6 => (CartanType::E6, 6, 6),
            Variety::E7 => (CartanType::E7, 7, 7),
        }
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self, Variety::E6 | Variety::E7)
    }

    pub fn poset(&self) -> Result<QuotientPoset> {
        let (t, r, node) = self.cartan();
        build_quotient_poset(&build_cartan(t, r)?, &[node])
    }

    /// Parse a class token into a node of `poset` (built by [`Variety::poset`]).
    pub fn parse_class(&self, poset: &QuotientPoset, tok: &str) -> Result<NodeId> {
        let t = tok.trim();
        if let Some(id) = t.strip_prefix('#') {
            let id = parse_usize(id, "node id")?;
            poset.node(id)?;
            return Ok(id);
        }
        let bad = |e: Error| Error::Parse(format!("class {tok:?}: {e}"));
        match *self {
            Variety::Grassmannian { k, n } => {
                let idx = GrIndex::new(k, n, parse_lambda(t)?).map_err(bad)?;
                gr_to_coset(poset, &idx)
            }
            Variety::Lagrangian { n } | Variety::Spinor { n } => {
                let fam = self.family().expect("isotropic");
                let idx = IsotropicIndex::new(fam, n, parse_lambda(t)?).map_err(bad)?;
                isotropic_to_coset(poset, &idx)
            }
            Variety::Quadric { n } => {
                let idx = QuadricIndex::new(n, parse_quadric_variant(t)?).map_err(bad)?;
                quadric_to_coset(poset, &idx)
            }
            Variety::E6 | Variety::E7 => {
                let (body, pick) = match t.chars().last() {
                    Some('a') => (&t[..t.len() - 1], Some(true)),
                    Some('b') => (&t[..t.len() - 1], Some(false)),
                    _ => (t, None),
                };
                let (d, g) = body
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("class {tok:?} is not dim:deg")))?;
                let dim = parse_usize(d, "dimension")?;
                let deg: BigUint = g
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad degree in {tok:?}")))?;
                let found = poset.nodes_by_dim_deg(dim, &deg);
                let chosen: Vec<NodeId> = match pick {
                    None => found,
                    Some(maximal) => found
                        .into_iter()
                        .filter(|&v| is_maximal_linear(poset, v) == maximal)
                        .collect(),
                };
                match chosen.as_slice() {
                    [v] => Ok(*v),
                    [] => Err(Error::Parse(format!("no class {tok:?} on {self}"))),
                    _ => Err(Error::Parse(format!(
                        "class {tok:?} is ambiguous on {self}; append a (maximal) or b (non-maximal)"
                    ))),
                }
            }
        }
    }

    fn family(&self) -> Option<IsotropicFamily> {
        match self {
            Variety::Lagrangian { .. } => Some(IsotropicFamily::LG),
            Variety::Spinor { .. } => Some(IsotropicFamily::OG),
            _ => None,
        }
    }

    /// The class token of a node, inverse to [`Variety::parse_class`].
    pub fn class_label(&self, poset: &QuotientPoset, v: NodeId) -> Result<String> {
        let seq = |l: &[usize]| {
            if l.is_empty() {
                "-".to_string()
            } else {
                l.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            }
        };
        Ok(match self {
            Variety::Grassmannian { .. } => seq(coset_to_gr(poset, v)?.lambda()),
            Variety::Lagrangian { .. } | Variety::Spinor { .. } => {
                seq(coset_to_isotropic(poset, v)?.lambda())
            }
            Variety::Quadric { .. } => {
                let s = coset_to_quadric(poset, v)?.to_string();
                s.split_once(' ').map(|(_, c)| c.to_string()).unwrap_or(s)
            }
            Variety::E6 | Variety::E7 => {
                let label = poset.dim_deg_label(v);
                let deg = poset.hasse().degree(v).clone();
                if poset.nodes_by_dim_deg(poset.dim(v), &deg).len() > 1 {
                    format!(
                        "{label}{}",
                        if is_maximal_linear(poset, v) {
                            "a"
                        } else {
                            "b"
                        }
                    )
                } else {
                    label
                }
            }
        })
    }

    /// Verdict from the classical criteria or the transcribed diagrams.
    pub fn verdict(
        &self,
        poset: &QuotientPoset,
        v: NodeId,
        golden: &GoldenData,
    ) -> Result<Verdict> {
        Ok(match self {
            Variety::Grassmannian { .. } => classify_gr(&coset_to_gr(poset, v)?),
            Variety::Lagrangian { .. } | Variety::Spinor { .. } => {
                classify_isotropic(&coset_to_isotropic(poset, v)?)
            }
            Variety::Quadric { .. } => classify_quadric(&coset_to_quadric(poset, v)?),
            Variety::E6 => classify_exceptional(poset, v, &golden.e6)?,
            Variety::E7 => classify_exceptional(poset, v, &golden.e7)?,
        })
    }

    /// Every witness the engines produce on this variety.
    pub fn certification(&self, poset: &QuotientPoset) -> Result<Certification> {
        match self {
            Variety::Grassmannian { .. } => {
                let mut cert = certify_poset(poset);
                for v in 0..poset.len() {
                    if let Some(w) = moduli_witness_gr(&coset_to_gr(poset, v)?) {
                        let container = match &w {
                            ConstructionWitness::ModuliGr(m) => {
                                let c = GrIndex::new(m.k, m.n, m.container.clone())?;
                                vec![gr_to_coset(poset, &c)?]
                            }
                            _ => Vec::new(),
                        };
                        cert.add(v, w, container);
                    }
                }
                Ok(cert)
            }
            Variety::Lagrangian { .. } | Variety::Spinor { .. } => certify_isotropic(poset),
            Variety::Quadric { .. } => certify_quadric(poset),
            Variety::E6 => certify_e6(poset),
            Variety::E7 => {
                let e6 = e6_poset()?;
                let e6_cert = certify_e6(&e6)?;
                certify_e7(poset, &e6, &e6_cert)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub variety: String,
    pub class: String,
    pub node: NodeId,
    pub dim: usize,
    pub degree: String,
    pub verdict: Verdict,
    pub witnesses: Vec<ConstructionWitness>,
}

impl Classification {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} ({}:{}): {}\n",
            self.variety, self.class, self.dim, self.degree, self.verdict
        );
        if !self.verdict.is_rigid() {
            let kinds: Vec<String> = self.witnesses.iter().map(|w| w.summary()).collect();
            out.push_str(&format!("witnesses: {{{}}}\n", kinds.join(", ")));
        }
        out
    }
}

/// Verdict plus all certifiable witnesses of one class.
pub fn classify_class(
    variety: &Variety,
    class: &str,
    golden: &GoldenData,
) -> Result<Classification> {
    let poset = variety.poset()?;
    let v = variety.parse_class(&poset, class)?;
    let cert = variety.certification(&poset)?;
    classification_of(variety, &poset, &cert, v, golden)
}

pub fn classification_of(
    variety: &Variety,
    poset: &QuotientPoset,
    cert: &Certification,
    v: NodeId,
    golden: &GoldenData,
) -> Result<Classification> {
    let verdict = variety.verdict(poset, v, golden)?;
    Ok(Classification {
        variety: variety.to_string(),
        class: variety.class_label(poset, v)?,
        node: v,
        dim: poset.dim(v),
        degree: poset.hasse().degree(v).to_string(),
        verdict,
        witnesses: cert.witnesses[v].clone(),
    })
}
