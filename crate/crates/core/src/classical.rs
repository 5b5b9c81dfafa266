//! Schubert indexing for the classical cominuscule families.
//!
//! All sequences are 1-based and strictly increasing:
//!
//! * `G(k,n)`: `0 < lambda_1 < ... < lambda_k <= n`, the class of
//!   `{W : dim(W cap F_{lambda_i}) >= i}`.
//! * `LG(n,2n)`: `0 < lambda_1 < ... < lambda_s <= n`, `0 <= s <= n`.
//! * `OG(n,2n)`: `0 < lambda_1 < ... < lambda_s <= n-1`, `0 <= s <= n-1`.
//! * Quadric `Q^n`: linear spaces `P L_j` and tangent sections `P L_j^perp cap Q`.
//!
//! The translations to cosets go through `epsilon` coordinates. For `G(k,n)`
//! the weight is the indicator vector of `lambda`; for `LG` and `OG` it is
//! the sign vector with `+` exactly on `lambda` (for `OG` the last sign is
//! fixed by parity). The defining weight of each quotient corresponds to the
//! point class.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{CartanType, Weight};
use crate::poset::{NodeId, QuotientPoset};

fn check_increasing(lambda: &[usize], lo: usize, hi: usize) -> Result<()> {
    for (k, &x) in lambda.iter().enumerate() {
        if x < lo || x > hi {
            return Err(Error::InvalidIndex(format!(
                "entry {x} outside {lo}..={hi} in {lambda:?}"
            )));
        }
        if k > 0 && lambda[k - 1] >= x {
            return Err(Error::InvalidIndex(format!(
                "sequence {lambda:?} is not strictly increasing"
            )));
        }
    }
    Ok(())
}

fn fmt_seq(lambda: &[usize]) -> String {
    let parts: Vec<String> = lambda.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// A Schubert index on `G(k,n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrIndex {
    k: usize,
    n: usize,
    lambda: Vec<usize>,
}

impl GrIndex {
    pub fn new(k: usize, n: usize, lambda: Vec<usize>) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidIndex(format!("G({k},{n}) needs 0 < k < n")));
        }
        if lambda.len() != k {
            return Err(Error::InvalidIndex(format!(
                "G({k},{n}) index needs {k} entries, got {}",
                lambda.len()
            )));
        }
        check_increasing(&lambda, 1, n)?;
        Ok(GrIndex { k, n, lambda })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    /// All indices on `G(k,n)`, in lexicographic order.
    pub fn all(k: usize, n: usize) -> Result<Vec<GrIndex>> {
        if k == 0 || k >= n {
            return Err(Error::InvalidIndex(format!("G({k},{n}) needs 0 < k < n")));
        }
        Ok(subsets(n, k)
            .into_iter()
            .map(|lambda| GrIndex { k, n, lambda })
            .collect())
    }
}

impl fmt::Display for GrIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{}) {}", self.k, self.n, fmt_seq(&self.lambda))
    }
}

/// All `size`-subsets of `1..=n` as increasing sequences, lexicographically.
pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < size - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, size, &mut Vec::new(), &mut out);
    out
}

/// `mu = (mu_1^{i_1}, ..., mu_t^{i_t})`, the grouping of `lambda_i - i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedSequence {
    /// `(mu_j, i_j)`, strictly increasing in `mu_j`.
    pub pairs: Vec<(usize, usize)>,
}

impl AssociatedSequence {
    pub fn t(&self) -> usize {
        self.pairs.len()
    }

    /// `mu_j`, 1-based.
    pub fn mu(&self, j: usize) -> usize {
        self.pairs[j - 1].0
    }

    /// `i_j`, 1-based.
    pub fn mult(&self, j: usize) -> usize {
        self.pairs[j - 1].1
    }

    /// Recover `lambda`.
    pub fn to_lambda(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &(mu, i) in &self.pairs {
            for _ in 0..i {
                let pos = out.len() + 1;
                out.push(mu + pos);
            }
        }
        out
    }
}

impl fmt::Display for AssociatedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(m, i)| format!("{m}^{i}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn associated_sequence(lambda: &[usize]) -> Result<AssociatedSequence> {
    check_increasing(lambda, 1, usize::MAX)?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (pos, &x) in lambda.iter().enumerate() {
        let tilde = x - (pos + 1);
        match pairs.last_mut() {
            Some((mu, count)) if *mu == tilde => *count += 1,
            _ => pairs.push((tilde, 1)),
        }
    }
    Ok(AssociatedSequence { pairs })
}

/// `sum (lambda_i - i)`.
pub fn gr_dimension(idx: &GrIndex) -> usize {
    idx.lambda
        .iter()
        .enumerate()
        .map(|(pos, &x)| x - (pos + 1))
        .sum()
}

/// Poincare dual: `lambda*_i = n - lambda_{k-i+1} + 1`.
pub fn dual_index(idx: &GrIndex) -> GrIndex {
    let lambda = idx.lambda.iter().rev().map(|&x| idx.n - x + 1).collect();
    GrIndex {
        k: idx.k,
        n: idx.n,
        lambda,
    }
}

/// Image under `W -> Ann(W)`, `G(k,n) -> G(n-k,n)`: the sorted
/// `{n+1-x : x not in lambda}`.
pub fn ann_index(idx: &GrIndex) -> GrIndex {
    let mut lambda: Vec<usize> = (1..=idx.n)
        .filter(|x| !idx.lambda.contains(x))
        .map(|x| idx.n + 1 - x)
        .collect();
    lambda.sort_unstable();
    GrIndex {
        k: idx.n - idx.k,
        n: idx.n,
        lambda,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsotropicFamily {
    LG,
    OG,
}

impl fmt::Display for IsotropicFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsotropicFamily::LG => "LG",
            IsotropicFamily::OG => "OG",
        })
    }
}

/// A Schubert index on `LG(n,2n)` or `OG(n,2n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsotropicIndex {
    family: IsotropicFamily,
    n: usize,
    lambda: Vec<usize>,
}

impl IsotropicIndex {
    pub fn new(family: IsotropicFamily, n: usize, lambda: Vec<usize>) -> Result<Self> {
        let max = match family {
            IsotropicFamily::LG => n,
            IsotropicFamily::OG => n.saturating_sub(1),
        };
        if max == 0 {
            return Err(Error::InvalidIndex(format!(
                "{family}({n},{}) is degenerate",
                2 * n
            )));
        }
        check_increasing(&lambda, 1, max)?;
        Ok(IsotropicIndex { family, n, lambda })
    }

    pub fn family(&self) -> IsotropicFamily {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn s(&self) -> usize {
        self.lambda.len()
    }

    /// Largest allowed entry: `n` for `LG`, `n-1` for `OG`.
    pub fn max_entry(&self) -> usize {
        match self.family {
            IsotropicFamily::LG => self.n,
            IsotropicFamily::OG => self.n - 1,
        }
    }

    /// All indices of the family, ordered by length then lexicographically.
    pub fn all(family: IsotropicFamily, n: usize) -> Result<Vec<IsotropicIndex>> {
        let probe = IsotropicIndex::new(family, n, Vec::new())?;
        let max = probe.max_entry();
        Ok((0..=max)
            .flat_map(|s| subsets(max, s))
            .map(|lambda| IsotropicIndex { family, n, lambda })
            .collect())
    }

    /// Dimension of the Schubert variety.
    pub fn dimension(&self) -> usize {
        let base: usize = self
            .lambda
            .iter()
            .enumerate()
            .map(|(pos, &x)| x - (pos + 1))
            .sum();
        let r = self.n - self.s();
        match self.family {
            IsotropicFamily::LG => base + r * (r + 1) / 2,
            IsotropicFamily::OG => base + r * (r - 1) / 2,
        }
    }
}

impl fmt::Display for IsotropicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({},{}) {}",
            self.family,
            self.n,
            2 * self.n,
            fmt_seq(&self.lambda)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MaxComponent {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadricVariant {
    /// `P L_j`, a linear space of dimension `j - 1`.
    Linear(usize),
    /// `P L_j^perp cap Q`, of dimension `n - j`.
    CoLinear(usize),
    /// `P L_{n/2+1}`, one class per component (n even).
    MaxLinear(MaxComponent),
}

/// A Schubert class on the quadric `Q^n subset P^{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadricIndex {
    n: usize,
    variant: QuadricVariant,
}

impl QuadricIndex {
    pub fn new(n: usize, variant: QuadricVariant) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidIndex(format!("quadric Q^{n} needs n >= 2")));
        }
        let ok = match variant {
            QuadricVariant::Linear(j) => {
                j >= 1 && j <= n.div_ceil(2) && (n % 2 == 1 || j < n / 2 + 1)
            }
            QuadricVariant::CoLinear(j) => {
                if n % 2 == 1 {
                    j < n.div_ceil(2)
                } else {
                    j < n / 2
                }
            }
            QuadricVariant::MaxLinear(_) => n.is_multiple_of(2),
        };
        if !ok {
            return Err(Error::InvalidIndex(format!(
                "{variant:?} is not a class on Q^{n}"
            )));
        }
        Ok(QuadricIndex { n, variant })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> QuadricVariant {
        self.variant
    }

    pub fn dimension(&self) -> usize {
        match self.variant {
            QuadricVariant::Linear(j) => j - 1,
            QuadricVariant::CoLinear(j) => self.n - j,
            QuadricVariant::MaxLinear(_) => self.n / 2,
        }
    }

    /// Whether this is a maximal isotropic linear space.
    pub fn is_maximal_linear(&self) -> bool {
        match self.variant {
            QuadricVariant::Linear(j) => self.n % 2 == 1 && j == self.n.div_ceil(2),
            QuadricVariant::MaxLinear(_) => true,
            QuadricVariant::CoLinear(_) => false,
        }
    }
}

impl fmt::Display for QuadricIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.variant {
            QuadricVariant::Linear(j) => format!("linear-{j}"),
            QuadricVariant::CoLinear(j) => format!("colinear-{j}"),
            QuadricVariant::MaxLinear(MaxComponent::Plus) => "max-plus".to_string(),
            QuadricVariant::MaxLinear(MaxComponent::Minus) => "max-minus".to_string(),
        };
        write!(f, "Q^{} {v}", self.n)
    }
}

/// Every Schubert class on `Q^n`.
pub fn quadric_classes(n: usize) -> Result<Vec<QuadricIndex>> {
    if n < 2 {
        return Err(Error::InvalidIndex(format!("quadric Q^{n} needs n >= 2")));
    }
    let mut out = Vec::new();
    if n % 2 == 1 {
        let m = n.div_ceil(2);
        out.extend((1..=m).map(QuadricVariant::Linear));
        out.extend((0..m).map(QuadricVariant::CoLinear));
    } else {
        out.extend((1..=n / 2).map(QuadricVariant::Linear));
        out.push(QuadricVariant::MaxLinear(MaxComponent::Plus));
        out.push(QuadricVariant::MaxLinear(MaxComponent::Minus));
        out.extend((0..n / 2).map(QuadricVariant::CoLinear));
    }
    Ok(out
        .into_iter()
        .map(|variant| QuadricIndex { n, variant })
        .collect())
}

/// The Cartan type and rank realizing `Q^n` as `G/P_1`.
pub fn quadric_type(n: usize) -> Result<(CartanType, usize)> {
    match n {
        0..=2 => Err(Error::InvalidIndex(format!(
            "Q^{n} has no simple realization as G/P1"
        ))),
        _ if n % 2 == 1 => Ok((CartanType::B, n.div_ceil(2))),
        _ => Ok((CartanType::D, n / 2 + 1)),
    }
}

// Epsilon coordinates to fundamental-weight coordinates.

fn eps_to_weight_a(x: &[i64]) -> Weight {
    Weight((0..x.len() - 1).map(|i| x[i] - x[i + 1]).collect())
}

/// `B_m` and `C_m`; `last` is the coefficient of `x_m` in the last coordinate.
fn eps_to_weight_bc(x: &[i64], last: i64) -> Weight {
    let m = x.len();
    let mut w: Vec<i64> = (0..m - 1).map(|i| x[i] - x[i + 1]).collect();
    w.push(last * x[m - 1]);
    Weight(w)
}

/// `D_m`, with `x` doubled (entries as given, result halved).
fn eps_to_weight_d(x: &[i64], halve: bool) -> Weight {
    let m = x.len();
    let mut w: Vec<i64> = (0..m - 1).map(|i| x[i] - x[i + 1]).collect();
    w.push(x[m - 2] + x[m - 1]);
    if halve {
        for c in &mut w {
            debug_assert!(*c % 2 == 0);
            *c /= 2;
        }
    }
    Weight(w)
}

fn check_ambient(poset: &QuotientPoset, t: CartanType, rank: usize, node: usize) -> Result<()> {
    let d = poset.datum();
    if d.cartan_type() != t || d.rank() != rank || poset.marked() != [node] {
        return Err(Error::InvalidIndex(format!(
            "index needs {t}{rank}/P{node}, poset is {}",
            poset.label()
        )));
    }
    Ok(())
}

fn lookup(poset: &QuotientPoset, w: &Weight) -> Result<NodeId> {
    poset.find(w).ok_or_else(|| {
        Error::InvalidIndex(format!("weight {w} is not a coset of {}", poset.label()))
    })
}

/// Coset weight of a Grassmannian index in `A_{n-1}/P_k`.
pub fn gr_weight(idx: &GrIndex) -> Weight {
    let x: Vec<i64> = (1..=idx.n)
        .map(|i| i64::from(idx.lambda.contains(&i)))
        .collect();
    eps_to_weight_a(&x)
}

pub fn gr_to_coset(poset: &QuotientPoset, idx: &GrIndex) -> Result<NodeId> {
    check_ambient(poset, CartanType::A, idx.n - 1, idx.k)?;
    lookup(poset, &gr_weight(idx))
}

pub fn coset_to_gr(poset: &QuotientPoset, node: NodeId) -> Result<GrIndex> {
    let d = poset.datum();
    if d.cartan_type() != CartanType::A || poset.marked().len() != 1 {
        return Err(Error::InvalidIndex(format!(
            "{} is not a Grassmannian",
            poset.label()
        )));
    }
    let n = d.rank() + 1;
    let k = poset.marked()[0];
    // Invert x_i - x_{i+1} = m_i with sum x = k.
    let m = poset.node(node)?.fingerprint.coords().to_vec();
    let mut x = vec![0i64; n];
    for i in (0..n - 1).rev() {
        x[i] = x[i + 1] + m[i];
    }
    let shift = (k as i64 - x.iter().sum::<i64>()) / n as i64;
    let lambda = (0..n)
        .filter(|&i| x[i] + shift == 1)
        .map(|i| i + 1)
        .collect();
    GrIndex::new(k, n, lambda)
}

fn isotropic_signs(idx: &IsotropicIndex) -> Vec<i64> {
    let mut x: Vec<i64> = (1..=idx.n)
        .map(|i| if idx.lambda.contains(&i) { 1 } else { -1 })
        .collect();
    if idx.family == IsotropicFamily::OG {
        let minus = x[..idx.n - 1].iter().filter(|&&v| v < 0).count();
        x[idx.n - 1] = if minus % 2 == 0 { 1 } else { -1 };
    }
    x
}

/// The quotient realizing the family: `C_n/P_n` for `LG`, `D_n/P_n` for `OG`.
pub fn isotropic_type(family: IsotropicFamily, n: usize) -> Result<(CartanType, usize)> {
    match family {
        IsotropicFamily::LG if n >= 2 => Ok((CartanType::C, n)),
        IsotropicFamily::OG if n >= 3 => Ok((CartanType::D, n)),
        _ => Err(Error::InvalidIndex(format!(
            "{family}({n},{}) has no realization in the supported types",
            2 * n
        ))),
    }
}

pub fn isotropic_weight(idx: &IsotropicIndex) -> Weight {
    let x = isotropic_signs(idx);
    match idx.family {
        IsotropicFamily::LG => eps_to_weight_bc(&x, 1),
        IsotropicFamily::OG => eps_to_weight_d(&x, true),
    }
}

pub fn isotropic_to_coset(poset: &QuotientPoset, idx: &IsotropicIndex) -> Result<NodeId> {
    let (t, r) = isotropic_type(idx.family, idx.n)?;
    check_ambient(poset, t, r, r)?;
    lookup(poset, &isotropic_weight(idx))
}

pub fn coset_to_isotropic(poset: &QuotientPoset, node: NodeId) -> Result<IsotropicIndex> {
    let d = poset.datum();
    let n = d.rank();
    let family = match d.cartan_type() {
        CartanType::C => IsotropicFamily::LG,
        CartanType::D => IsotropicFamily::OG,
        _ => {
            return Err(Error::InvalidIndex(format!(
                "{} is not an isotropic Grassmannian",
                poset.label()
            )))
        }
    };
    check_ambient(poset, d.cartan_type(), n, n)?;
    let m = poset.node(node)?.fingerprint.coords().to_vec();
    // Recover the signs from the last coordinate downwards.
    let mut x = vec![0i64; n];
    match family {
        IsotropicFamily::LG => {
            x[n - 1] = m[n - 1];
        }
        IsotropicFamily::OG => {
            // doubled: y_{n-1} + y_n = 2 m_n, y_{n-1} - y_n = 2 m_{n-1}
            x[n - 1] = m[n - 1] - m[n - 2];
        }
    }
    for i in (0..n - 1).rev() {
        let step = match family {
            IsotropicFamily::LG => m[i],
            IsotropicFamily::OG => 2 * m[i],
        };
        x[i] = x[i + 1] + step;
    }
    let bound = match family {
        IsotropicFamily::LG => n,
        IsotropicFamily::OG => n - 1,
    };
    let lambda = (0..bound).filter(|&i| x[i] > 0).map(|i| i + 1).collect();
    IsotropicIndex::new(family, n, lambda)
}

pub fn quadric_weight(idx: &QuadricIndex) -> Result<Weight> {
    let (t, rank) = quadric_type(idx.n)?;
    let mut x = vec![0i64; rank];
    match idx.variant {
        QuadricVariant::Linear(j) => x[j - 1] = 1,
        QuadricVariant::CoLinear(j) => x[j] = -1,
        QuadricVariant::MaxLinear(MaxComponent::Plus) => x[rank - 1] = 1,
        QuadricVariant::MaxLinear(MaxComponent::Minus) => x[rank - 1] = -1,
    }
    Ok(match t {
        CartanType::B => eps_to_weight_bc(&x, 2),
        _ => eps_to_weight_d(&x, false),
    })
}

pub fn quadric_to_coset(poset: &QuotientPoset, idx: &QuadricIndex) -> Result<NodeId> {
    let (t, rank) = quadric_type(idx.n)?;
    check_ambient(poset, t, rank, 1)?;
    lookup(poset, &quadric_weight(idx)?)
}

pub fn coset_to_quadric(poset: &QuotientPoset, node: NodeId) -> Result<QuadricIndex> {
    let d = poset.datum();
    let n = match d.cartan_type() {
        CartanType::B => 2 * d.rank() - 1,
        CartanType::D => 2 * d.rank() - 2,
        _ => {
            return Err(Error::InvalidIndex(format!(
                "{} is not a quadric",
                poset.label()
            )))
        }
    };
    check_ambient(poset, d.cartan_type(), d.rank(), 1)?;
    let target = &poset.node(node)?.fingerprint;
    for idx in quadric_classes(n)? {
        if &quadric_weight(&idx)? == target {
            return Ok(idx);
        }
    }
    Err(Error::InvalidIndex(format!(
        "node {node} has no quadric index"
    )))
}
