//! Root systems, weights and Weyl words in exact integer arithmetic.
//!
//! Dynkin nodes follow Bourbaki numbering for every type:
//!
//! | type | diagram                                              |
//! |------|------------------------------------------------------|
//! | A_n  | `1 - 2 - ... - n`                                    |
//! | B_n  | `1 - 2 - ... - (n-1) => n`   (alpha_n short)         |
//! | C_n  | `1 - 2 - ... - (n-1) <= n`   (alpha_n long)          |
//! | D_n  | `1 - ... - (n-2)`, with `n-1` and `n` both on `n-2`  |
//! | E6   | `1 - 3 - 4 - 5 - 6`, with `2` on `4`                 |
//! | E7   | `1 - 3 - 4 - 5 - 6 - 7`, with `2` on `4`             |
//!
//! With this numbering the Cayley plane is `E6/P6` and the Freudenthal
//! variety is `E7/P7`.
//!
//! Weights are written in fundamental-weight coordinates and roots in
//! simple-root coordinates. The Cartan matrix is stored row-wise as
//! `cartan[i][j] = <alpha_i, alpha_j^vee>`, so row `i` is `alpha_i` written in
//! fundamental weights and `s_i(v) = v - v_i * row_i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::E6 => "E6",
            CartanType::E7 => "E7",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E6" => Ok(CartanType::E6),
            "E7" => Ok(CartanType::E7),
            other => Err(Error::InvalidCartan {
                type_label: other.to_string(),
                rank: 0,
            }),
        }
    }
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("integer overflow in root/weight arithmetic")
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Sum of the fundamental weights indexed by `subset` (1-based).
    pub fn fundamental_sum(rank: usize, subset: &[usize]) -> Self {
        let mut coords = vec![0; rank];
        for &i in subset {
            coords[i - 1] += 1;
        }
        Weight(coords)
    }

    /// The all-ones weight `rho`, strictly dominant.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A word in the simple reflections; letters are 1-based node indices.
///
/// The word `[i_1, ..., i_k]` denotes `s_{i_1} s_{i_2} ... s_{i_k}`, so the
/// rightmost letter acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }

    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &WeylWord) -> WeylWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        WeylWord(letters)
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

/// A simple Lie type together with its Cartan matrix and positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    cartan_type: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i) / 2`, scaled so the short roots get 1.
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    /// Coefficients of each positive coroot in the simple coroots, aligned
    /// with `positive_roots`.
    coroots: Vec<Vec<i64>>,
    /// Each positive root written in fundamental-weight coordinates.
    roots_as_weights: Vec<Vec<i64>>,
}

impl CartanDatum {
    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn coroot(&self, root_index: usize) -> &[i64] {
        &self.coroots[root_index]
    }

    pub fn root_as_weight(&self, root_index: usize) -> &[i64] {
        &self.roots_as_weights[root_index]
    }

    pub fn label(&self) -> String {
        match self.cartan_type {
            CartanType::E6 | CartanType::E7 => self.cartan_type.to_string(),
            t => format!("{t}{}", self.rank),
        }
    }

    fn check_letter(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    fn check_weight(&self, v: &Weight) -> Result<()> {
        if v.rank() != self.rank {
            Err(Error::WeightLength {
                got: v.rank(),
                expected: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// Pairing `<beta, alpha_i^vee>` for `beta` in simple-root coordinates.
    fn root_pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().zip(&self.cartan).fold(0i64, |acc, (&b, row)| {
            checked(acc.checked_add(checked(b.checked_mul(row[i]))))
        })
    }

    /// Pairing `<v, beta^vee>` of a weight with the coroot of the positive
    /// root at `root_index`.
    pub fn coroot_pairing(&self, v: &Weight, root_index: usize) -> i64 {
        v.0.iter()
            .zip(&self.coroots[root_index])
            .fold(0i64, |acc, (&a, &b)| {
                checked(acc.checked_add(checked(a.checked_mul(b))))
            })
    }

    /// Simple reflection `s_i` on a weight.
    pub fn reflect(&self, i: usize, v: &Weight) -> Result<Weight> {
        self.check_letter(i)?;
        self.check_weight(v)?;
        Ok(self.reflect_unchecked(i, v))
    }

    pub(crate) fn reflect_unchecked(&self, i: usize, v: &Weight) -> Weight {
        let c = v.0[i - 1];
        if c == 0 {
            return v.clone();
        }
        let row = &self.cartan[i - 1];
        Weight(
            v.0.iter()
                .zip(row)
                .map(|(&x, &r)| checked(x.checked_sub(checked(c.checked_mul(r)))))
                .collect(),
        )
    }

    /// Reflection in the positive root at `root_index`.
    pub fn reflect_in_root(&self, root_index: usize, v: &Weight) -> Weight {
        let c = self.coroot_pairing(v, root_index);
        if c == 0 {
            return v.clone();
        }
        let beta = &self.roots_as_weights[root_index];
        Weight(
            v.0.iter()
                .zip(beta)
                .map(|(&x, &b)| checked(x.checked_sub(checked(c.checked_mul(b)))))
                .collect(),
        )
    }

    /// Action of a word on a weight, rightmost letter first.
    pub fn act(&self, word: &WeylWord, v: &Weight) -> Result<Weight> {
        self.check_weight(v)?;
        for &l in word.letters() {
            self.check_letter(l)?;
        }
        Ok(self.act_unchecked(word, v))
    }

    pub(crate) fn act_unchecked(&self, word: &WeylWord, v: &Weight) -> Weight {
        word.letters()
            .iter()
            .rev()
            .fold(v.clone(), |acc, &l| self.reflect_unchecked(l, &acc))
    }

    /// Simple reflection on a root in simple-root coordinates.
    fn reflect_root(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        let c = self.root_pairing(beta, i - 1);
        let mut out = beta.to_vec();
        out[i - 1] = checked(out[i - 1].checked_sub(c));
        out
    }

    fn act_on_root(&self, word: &[usize], beta: &[i64]) -> Vec<i64> {
        word.iter()
            .rev()
            .fold(beta.to_vec(), |acc, &l| self.reflect_root(l, &acc))
    }

    /// Length of the element represented by `word`: the number of positive
    /// roots it sends to negative roots.
    pub fn length(&self, word: &WeylWord) -> Result<usize> {
        for &l in word.letters() {
            self.check_letter(l)?;
        }
        Ok(self
            .positive_roots
            .iter()
            .filter(|beta| is_negative(&self.act_on_root(word.letters(), beta)))
            .count())
    }

    pub fn is_reduced(&self, word: &WeylWord) -> Result<bool> {
        Ok(self.length(word)? == word.len())
    }

    /// Whether two words represent the same group element, compared through
    /// their action on the strictly dominant weight `rho`.
    pub fn same_element(&self, a: &WeylWord, b: &WeylWord) -> Result<bool> {
        let rho = Weight::rho(self.rank);
        Ok(self.act(a, &rho)? == self.act(b, &rho)?)
    }

    /// Reduced word for the longest element of the parabolic subgroup
    /// generated by `{s_i : i in subset}`.
    ///
    /// Greedy: append the smallest letter `i` in the subset with
    /// `w(alpha_i) > 0` until none remains.
    pub fn longest_element(&self, subset: &[usize]) -> Result<WeylWord> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        for &i in subset {
            self.check_letter(i)?;
        }
        let mut gens: Vec<usize> = subset.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let mut word: Vec<usize> = Vec::new();
        loop {
            let next = gens.iter().copied().find(|&i| {
                let mut alpha = vec![0i64; self.rank];
                alpha[i - 1] = 1;
                !is_negative(&self.act_on_root(&word, &alpha))
            });
            match next {
                Some(i) => word.push(i),
                None => break,
            }
        }
        Ok(WeylWord(word))
    }

    /// Number of positive roots whose support lies inside `subset`.
    pub fn roots_supported_on(&self, subset: &[usize]) -> usize {
        self.positive_roots
            .iter()
            .filter(|beta| {
                beta.iter()
                    .enumerate()
                    .all(|(j, &c)| c == 0 || subset.contains(&(j + 1)))
            })
            .count()
    }

    /// Complement of a subset of simple indices.
    pub fn complement(&self, subset: &[usize]) -> Vec<usize> {
        (1..=self.rank).filter(|i| !subset.contains(i)).collect()
    }

    /// `dim G/P_I`: positive roots not supported on the complement of `I`.
    pub fn flag_dimension(&self, marked: &[usize]) -> usize {
        self.positive_roots.len() - self.roots_supported_on(&self.complement(marked))
    }

    /// Order of the parabolic subgroup generated by `subset`, via
    /// `|W| = prod_{beta > 0} (ht(beta) + 1) / ht(beta)`.
    pub fn weyl_group_order(&self, subset: &[usize]) -> BigUint {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for beta in &self.positive_roots {
            let supported = beta
                .iter()
                .enumerate()
                .all(|(j, &c)| c == 0 || subset.contains(&(j + 1)));
            if supported {
                let h: i64 = beta.iter().sum();
                num *= BigUint::from((h + 1) as u64);
                den *= BigUint::from(h as u64);
            }
        }
        num / den
    }
}

fn is_negative(beta: &[i64]) -> bool {
    beta.iter().any(|&c| c < 0)
}

fn cartan_matrix(t: CartanType, rank: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |a: usize, b: usize| {
        m[a - 1][b - 1] = -1;
        m[b - 1][a - 1] = -1;
    };
    match t {
        CartanType::A | CartanType::B | CartanType::C => {
            for i in 1..rank {
                link(i, i + 1);
            }
        }
        CartanType::D => {
            for i in 1..rank - 1 {
                link(i, i + 1);
            }
            link(rank - 2, rank);
        }
        CartanType::E6 | CartanType::E7 => {
            link(1, 3);
            link(2, 4);
            for i in 3..rank {
                link(i, i + 1);
            }
        }
    }
    // Double bond between n-1 and n.
    match t {
        CartanType::B => m[rank - 2][rank - 1] = -2,
        CartanType::C => m[rank - 1][rank - 2] = -2,
        _ => {}
    }
    m
}

fn symmetrizer(t: CartanType, rank: usize) -> Vec<i64> {
    match t {
        CartanType::B => (1..=rank).map(|i| if i == rank { 1 } else { 2 }).collect(),
        CartanType::C => (1..=rank).map(|i| if i == rank { 2 } else { 1 }).collect(),
        _ => vec![1; rank],
    }
}

/// Build the Cartan datum for a type and rank, generating the positive roots
/// by closure from the simple roots.
pub fn build_cartan(t: CartanType, rank: usize) -> Result<CartanDatum> {
    let valid = match t {
        CartanType::A => rank >= 1,
        CartanType::B | CartanType::C => rank >= 2,
        CartanType::D => rank >= 3,
        CartanType::E6 => rank == 6,
        CartanType::E7 => rank == 7,
    };
    if !valid {
        return Err(Error::InvalidCartan {
            type_label: t.to_string(),
            rank,
        });
    }
    let cartan = cartan_matrix(t, rank);
    let sym = symmetrizer(t, rank);
    let mut datum = CartanDatum {
        cartan_type: t,
        rank,
        cartan,
        symmetrizer: sym,
        positive_roots: Vec::new(),
        coroots: Vec::new(),
        roots_as_weights: Vec::new(),
    };
    datum.positive_roots = generate_positive_roots(&datum);
    datum.coroots = datum
        .positive_roots
        .iter()
        .map(|beta| coroot_of(&datum, beta))
        .collect();
    datum.roots_as_weights = datum
        .positive_roots
        .iter()
        .map(|beta| {
            (0..rank)
                .map(|j| {
                    beta.iter()
                        .zip(&datum.cartan)
                        .map(|(&b, row)| b * row[j])
                        .sum()
                })
                .collect()
        })
        .collect();
    Ok(datum)
}

/// Convenience for the E-types and classical types given as a label like
/// `"E6"`, `"D5"`, `"A3"`.
pub fn build_cartan_from_label(label: &str) -> Result<CartanDatum> {
    let label = label.trim();
    let upper = label.to_ascii_uppercase();
    if upper == "E6" || upper == "E7" {
        let t: CartanType = upper.parse()?;
        return build_cartan(t, if t == CartanType::E6 { 6 } else { 7 });
    }
    let bad = || Error::InvalidCartan {
        type_label: label.to_string(),
        rank: 0,
    };
    let (head, tail) = upper.split_at(1.min(upper.len()));
    let t: CartanType = head.parse().map_err(|_| bad())?;
    let rank: usize = tail.parse().map_err(|_| bad())?;
    build_cartan(t, rank)
}

fn generate_positive_roots(datum: &CartanDatum) -> Vec<Vec<i64>> {
    use std::collections::HashSet;
    let rank = datum.rank;
    let mut roots: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            v
        })
        .collect();
    let mut seen: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer_start = 0;
    while layer_start < roots.len() {
        let layer_end = roots.len();
        for r in layer_start..layer_end {
            let beta = roots[r].clone();
            for i in 0..rank {
                // alpha_i-string through beta: p - q = <beta, alpha_i^vee>.
                let mut p = 0i64;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if seen.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - datum.root_pairing(&beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        roots.push(up);
                    }
                }
            }
        }
        layer_start = layer_end;
    }
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}

/// Coefficients of `beta^vee = 2 beta / (beta, beta)` in the simple coroots.
fn coroot_of(datum: &CartanDatum, beta: &[i64]) -> Vec<i64> {
    // (alpha_i, alpha_j) = cartan[i][j] * d_j
    let rank = datum.rank;
    let mut norm2 = 0i64;
    for i in 0..rank {
        for j in 0..rank {
            norm2 += beta[i] * beta[j] * datum.cartan[i][j] * datum.symmetrizer[j];
        }
    }
    let d_beta = norm2 / 2;
    beta.iter()
        .zip(&datum.symmetrizer)
        .map(|(&b, &d)| {
            debug_assert_eq!((b * d) % d_beta, 0);
            b * d / d_beta
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_datum() {
        let d = build_cartan(CartanType::A, 1).unwrap();
        assert_eq!(d.cartan_matrix(), &[vec![2]]);
        assert_eq!(d.positive_roots().len(), 1);
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            (CartanType::A, 4, 10),
            (CartanType::B, 3, 9),
            (CartanType::C, 4, 16),
            (CartanType::D, 5, 20),
            (CartanType::D, 6, 30),
            (CartanType::E6, 6, 36),
            (CartanType::E7, 7, 63),
        ];
        for (t, r, n) in cases {
            assert_eq!(
                build_cartan(t, r).unwrap().positive_roots().len(),
                n,
                "{t}{r}"
            );
        }
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(build_cartan(CartanType::A, 0).is_err());
        assert!(build_cartan(CartanType::B, 1).is_err());
        assert!(build_cartan(CartanType::D, 2).is_err());
        assert!(build_cartan(CartanType::E6, 7).is_err());
        assert!(build_cartan(CartanType::E7, 6).is_err());
    }

    #[test]
    fn cartan_entries() {
        for (t, r) in [(CartanType::B, 4), (CartanType::C, 3), (CartanType::E7, 7)] {
            let d = build_cartan(t, r).unwrap();
            for (i, row) in d.cartan_matrix().iter().enumerate() {
                for (j, &c) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(c, 2);
                    } else {
                        assert!(c <= 0);
                    }
                }
            }
        }
        let b = build_cartan(CartanType::B, 2).unwrap();
        assert_eq!(b.cartan_matrix(), &[vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn highest_roots() {
        let e6 = build_cartan(CartanType::E6, 6).unwrap();
        assert_eq!(e6.positive_roots().last().unwrap(), &vec![1, 2, 2, 3, 2, 1]);
        let e7 = build_cartan(CartanType::E7, 7).unwrap();
        assert_eq!(
            e7.positive_roots().last().unwrap(),
            &vec![2, 2, 3, 4, 3, 2, 1]
        );
    }

    #[test]
    fn reflections() {
        let a1 = build_cartan(CartanType::A, 1).unwrap();
        assert_eq!(
            a1.reflect(1, &Weight::new(vec![1])).unwrap(),
            Weight::new(vec![-1])
        );
        let a2 = build_cartan(CartanType::A, 2).unwrap();
        let v = Weight::new(vec![1, 0]);
        assert_eq!(a2.reflect(1, &v).unwrap(), Weight::new(vec![-1, 1]));
        assert!(a2.reflect(3, &v).is_err());
        assert!(a2.reflect(0, &v).is_err());
        assert!(a2.reflect(1, &Weight::new(vec![1])).is_err());
    }

    #[test]
    fn act_conventions() {
        let a2 = build_cartan(CartanType::A, 2).unwrap();
        let v = Weight::new(vec![1, 0]);
        assert_eq!(a2.act(&WeylWord::identity(), &v).unwrap(), v);
        assert_eq!(a2.act(&WeylWord::new(vec![1, 1]), &v).unwrap(), v);
        // s1 s2 [1,0]: s2 fixes [1,0] (coordinate 2 is zero), then s1 gives [-1,1].
        assert_eq!(
            a2.act(&WeylWord::new(vec![1, 2]), &v).unwrap(),
            Weight::new(vec![-1, 1])
        );
        // s2 s1 [1,0] = s2 [-1,1] = [0,-1].
        assert_eq!(
            a2.act(&WeylWord::new(vec![2, 1]), &v).unwrap(),
            Weight::new(vec![0, -1])
        );
    }

    #[test]
    fn lengths() {
        let e6 = build_cartan(CartanType::E6, 6).unwrap();
        assert_eq!(e6.length(&WeylWord::identity()).unwrap(), 0);
        assert_eq!(e6.length(&WeylWord::new(vec![1, 1])).unwrap(), 0);
        assert_eq!(e6.length(&WeylWord::new(vec![1, 3, 1])).unwrap(), 3);
        let w0 = e6.longest_element(&[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(w0.len(), 36);
        assert_eq!(e6.length(&w0).unwrap(), 36);
    }

    #[test]
    fn longest_elements() {
        let a1 = build_cartan(CartanType::A, 1).unwrap();
        assert_eq!(a1.longest_element(&[1]).unwrap(), WeylWord::new(vec![1]));
        let e6 = build_cartan(CartanType::E6, 6).unwrap();
        let d5 = e6.longest_element(&[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(e6.length(&d5).unwrap(), 20);
        assert_eq!(e6.roots_supported_on(&[1, 2, 3, 4, 5]), 20);
        assert_eq!(e6.longest_element(&[]), Err(Error::EmptySubset));
        // w0 of E6 acts as minus the diagram automorphism on weights.
        let w0 = e6.longest_element(&[1, 2, 3, 4, 5, 6]).unwrap();
        let v = Weight::new(vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(
            e6.act(&w0, &v).unwrap(),
            Weight::new(vec![0, 0, 0, 0, 0, -1])
        );
    }

    #[test]
    fn weyl_orders() {
        let e6 = build_cartan(CartanType::E6, 6).unwrap();
        assert_eq!(
            e6.weyl_group_order(&[1, 2, 3, 4, 5, 6]),
            BigUint::from(51840u32)
        );
        let e7 = build_cartan(CartanType::E7, 7).unwrap();
        assert_eq!(
            e7.weyl_group_order(&[1, 2, 3, 4, 5, 6, 7]),
            BigUint::from(2_903_040u32)
        );
        let b3 = build_cartan(CartanType::B, 3).unwrap();
        assert_eq!(b3.weyl_group_order(&[1, 2, 3]), BigUint::from(48u32));
    }

    #[test]
    fn labels() {
        assert_eq!(build_cartan_from_label("e7").unwrap().rank(), 7);
        assert_eq!(
            build_cartan_from_label("D5")
                .unwrap()
                .positive_roots()
                .len(),
            20
        );
        assert!(build_cartan_from_label("F4").is_err());
    }
}
