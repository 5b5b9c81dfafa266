#![allow(dead_code)]

use std::collections::BTreeMap;

use schubert::golden::GoldenData;
use schubert::variety::Variety;

/// `(value, multiplicity)` pairs of `lambda_i - i`, counted through a map.
fn runs(lambda: &[usize]) -> Vec<(i64, usize)> {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for (i, &x) in lambda.iter().enumerate() {
        *counts.entry(x as i64 - (i as i64 + 1)).or_default() += 1;
    }
    counts.into_iter().collect()
}

/// Rigidity on `G(k,n)` read straight off the three bullets; projective
/// space keeps only the point and the whole space rigid.
pub fn gr_rigid_oracle(k: usize, n: usize, lambda: &[usize]) -> bool {
    if k == 1 {
        return lambda[0] == 1 || lambda[0] == n;
    }
    let r = runs(lambda);
    let t = r.len();
    let interior = r
        .iter()
        .enumerate()
        .all(|(j, &(_, i))| j == 0 || j == t - 1 || i >= 2);
    let gaps = r.windows(2).all(|w| w[0].0 <= w[1].0 - 2);
    let first = r[0].0 == 0 || r[0].1 >= 2;
    let last = r[t - 1].0 >= (n - k) as i64 || r[t - 1].1 >= 2;
    interior && gaps && first && last
}

/// Rigidity on `LG(n,2n)` (`max = n`, `cut = n-2`) or `OG(n,2n)`
/// (`max = n-1`, `cut = n-3`).
pub fn isotropic_rigid_oracle(lagrangian: bool, n: usize, lambda: &[usize]) -> bool {
    if lambda.is_empty() {
        return true;
    }
    let (max, cut) = if lagrangian {
        (n as i64, n as i64 - 2)
    } else {
        (n as i64 - 1, n as i64 - 3)
    };
    let r = runs(lambda);
    let tail = r.iter().skip(1).all(|&(_, i)| i >= 2) && r.windows(2).all(|w| w[0].0 <= w[1].0 - 2);
    let first = r[0].0 == 0 || r[0].1 >= 2;
    let last = *lambda.last().unwrap() as i64;
    let top = last >= max || last <= cut;
    tail && first && top
}

/// All strictly increasing sequences in `1..=max` of length `<= len`.
pub fn sequences(max: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << max) {
        if mask.count_ones() as usize <= len {
            out.push((1..=max).filter(|x| mask & (1 << (x - 1)) != 0).collect());
        }
    }
    out
}

/// Count standard Young tableaux of a shape (rows weakly decreasing) by
/// filling `1, 2, ...` one cell at a time.
pub fn syt_count(shape: &[usize]) -> u64 {
    fn fill(shape: &[usize], filled: &mut Vec<usize>, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            let c = filled[r];
            if c < shape[r] && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                total += fill(shape, filled, left - 1);
                filled[r] -= 1;
            }
        }
        total
    }
    let shape: Vec<usize> = shape.iter().copied().filter(|&x| x > 0).collect();
    let cells = shape.iter().sum();
    fill(&shape, &mut vec![0; shape.len()], cells)
}

/// Shape of the Schubert variety `lambda` on `G(k,n)`: rows `lambda_i - i`,
/// largest first.
pub fn gr_shape(lambda: &[usize]) -> Vec<usize> {
    let mut rows: Vec<usize> = lambda.iter().enumerate().map(|(i, &x)| x - i - 1).collect();
    rows.reverse();
    rows
}

/// `lambda*_i = n + 1 - lambda_{k+1-i}`.
pub fn dual_formula(n: usize, lambda: &[usize]) -> Vec<usize> {
    lambda.iter().rev().map(|&x| n + 1 - x).collect()
}

pub fn dichotomy_varieties() -> Vec<Variety> {
    let mut out = Vec::new();
    for n in 2..=8 {
        for k in 1..n {
            out.push(Variety::Grassmannian { k, n });
        }
    }
    for n in 2..=5 {
        out.push(Variety::Lagrangian { n });
    }
    for n in 3..=6 {
        out.push(Variety::Spinor { n });
    }
    for n in 3..=12 {
        out.push(Variety::Quadric { n });
    }
    out.push(Variety::E6);
    out.push(Variety::E7);
    out
}

/// Classes that are flexible without a witness, or rigid with one.
pub fn dichotomy_violations() -> Vec<String> {
    let golden = GoldenData::embedded();
    let mut bad = Vec::new();
    for v in dichotomy_varieties() {
        let poset = v.poset().unwrap();
        let cert = v.certification(&poset).unwrap();
        for node in 0..poset.len() {
            let rigid = v.verdict(&poset, node, &golden).unwrap().is_rigid();
            if rigid == cert.is_certified(node) {
                bad.push(format!(
                    "{v} {} rigid={rigid}",
                    v.class_label(&poset, node).unwrap()
                ));
            }
        }
    }
    bad
}
