//! One line per acceptance criterion; the test fails if any line fails.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use schubert::classical::{
    coset_to_gr, dual_index, gr_to_coset, GrIndex, IsotropicFamily, IsotropicIndex,
};
use schubert::constructions::pairing;
use schubert::exceptional::{e6_poset, e7_poset, verify_e6, verify_e7, verify_table1};
use schubert::golden::{GoldenData, GoldenDiagram};
use schubert::lattice::{build_cartan, CartanType};
use schubert::poset::{build_quotient_poset, NodeId, QuotientPoset};
use schubert::rigidity::{classify_gr, classify_isotropic};
use schubert::tits::{build_context, TitsContext};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn has_label(p: &QuotientPoset, label: &str) -> bool {
    (0..p.len()).any(|v| p.dim_deg_label(v) == label)
}

fn shape_matches(p: &QuotientPoset, g: &GoldenDiagram, top: usize) -> Result<(), String> {
    g.validate(p).map_err(|e| e.to_string())?;
    ensure(p.top_dim() == top, format!("top dimension {}", p.top_dim()))?;
    let mut golden_counts: BTreeMap<usize, usize> = BTreeMap::new();
    for r in &g.records {
        *golden_counts.entry(r.dim).or_default() += 1;
    }
    let computed: BTreeMap<usize, usize> = p
        .poincare_polynomial()
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .collect();
    ensure(computed == golden_counts, "per-dimension counts differ")
}

fn criterion1() -> Check {
    let g = GoldenData::embedded();
    let p = e6_poset().map_err(|e| e.to_string())?;
    ensure(p.len() == 27, format!("{} nodes", p.len()))?;
    shape_matches(&p, &g.e6, 16)?;
    for l in ["0:1", "8:2", "11:12", "12:45", "12:33", "16:78"] {
        ensure(has_label(&p, l), format!("missing {l}"))?;
    }
    Ok("27 nodes, dims 0..16, all degrees match the diagram".into())
}

fn criterion2() -> Check {
    let g = GoldenData::embedded();
    let p = e7_poset().map_err(|e| e.to_string())?;
    ensure(p.len() == 56, format!("{} nodes", p.len()))?;
    shape_matches(&p, &g.e7, 27)?;
    for l in [
        "20:3648", "19:1710", "19:1938", "21:5586", "22:7524", "27:13110",
    ] {
        ensure(has_label(&p, l), format!("missing {l}"))?;
    }
    Ok("56 nodes, dims 0..27, all degrees match the diagram".into())
}

fn criterion3() -> Check {
    let r = verify_table1(&GoldenData::embedded()).map_err(|e| e.to_string())?;
    ensure(r.passed(), format!("{}/{} rows", r.matched, r.total))?;
    for (s, t) in [
        ("0:1*", "10:2*"),
        ("4:1*", "14:110*"),
        ("12:45", "22:7524"),
        ("16:78*", "26:13110"),
    ] {
        ensure(
            r.rows
                .iter()
                .any(|row| row.computed_source == s && row.computed_target == t),
            format!("row {s} -> {t} missing"),
        )?;
    }
    Ok(format!("{}/{} rows with asterisks", r.matched, r.total))
}

fn criterion4() -> Check {
    let e6 = build_cartan(CartanType::E6, 6).map_err(|e| e.to_string())?;
    let e7 = build_cartan(CartanType::E7, 7).map_err(|e| e.to_string())?;
    let cases: [(&_, &[usize], usize); 9] = [
        (&e6, &[6], 16),
        (&e7, &[7], 27),
        (&e6, &[5], 25),
        (&e6, &[5, 6], 26),
        (&e6, &[1, 6], 24),
        (&e7, &[1], 33),
        (&e7, &[1, 7], 43),
        (&e7, &[6], 42),
        (&e7, &[6, 7], 43),
    ];
    for (d, marked, want) in cases {
        let got = d.flag_dimension(marked);
        ensure(
            got == want,
            format!("{} P{marked:?}: {got} != {want}", d.label()),
        )?;
    }
    let ctx = build_context(&e6, &[6], &[1]).map_err(|e| e.to_string())?;
    ensure(ctx.d_tau() == 8, format!("d_tau = {}", ctx.d_tau()))?;
    Ok("9 dimensions and d_tau = 8".into())
}

/// A chain of linear spaces `P^0 subset ... subset P^r` in `source` whose
/// images under `map` (into `target`) carry the given labels.
fn linear_chain_maps(
    source: &QuotientPoset,
    target: &QuotientPoset,
    map: &dyn Fn(NodeId) -> NodeId,
    want: &[&str],
) -> bool {
    let one = BigUint::from(1u32);
    fn go(
        s: &QuotientPoset,
        t: &QuotientPoset,
        map: &dyn Fn(NodeId) -> NodeId,
        v: NodeId,
        want: &[&str],
        one: &BigUint,
    ) -> bool {
        if t.dim_deg_label(map(v)) != want[0] {
            return false;
        }
        want.len() == 1
            || s.hasse()
                .covers_above(v)
                .iter()
                .any(|&c| s.hasse().chain_count(c) == one && go(s, t, map, c, &want[1..], one))
    }
    go(source, target, map, source.bottom(), want, &one)
}

fn criterion5() -> Check {
    let e6 = build_cartan(CartanType::E6, 6).map_err(|e| e.to_string())?;
    let e7 = build_cartan(CartanType::E7, 7).map_err(|e| e.to_string())?;
    let c61 = build_context(&e6, &[6], &[1]).map_err(|e| e.to_string())?;
    let t = |v| c61.tits_transform(v).unwrap();
    ensure(
        linear_chain_maps(
            c61.poset_q(),
            c61.poset_p(),
            &t,
            &["8:2", "9:9", "10:21", "11:33", "12:45"],
        ),
        "E6/P1 chain",
    )?;
    // linear spaces of E7/P7, sent to E7/P6 and back
    let c67: TitsContext = build_context(&e7, &[6], &[7]).map_err(|e| e.to_string())?;
    let c76 = build_context(&e7, &[7], &[6]).map_err(|e| e.to_string())?;
    let round = |v| c76.tits_transform(c67.tits_transform(v).unwrap()).unwrap();
    ensure(
        linear_chain_maps(
            c76.poset_p(),
            c76.poset_p(),
            &round,
            &["17:78", "18:520", "19:1710"],
        ),
        "E7/P7 round-trip chain",
    )?;
    Ok("(8:2)..(12:45) and (17:78)..(19:1710)".into())
}

fn criterion6() -> Check {
    let g = GoldenData::embedded();
    let r6 = verify_e6(&g).map_err(|e| e.to_string())?;
    let r7 = verify_e7(&g).map_err(|e| e.to_string())?;
    ensure(
        r6.passed() && r6.rigid == 8 && r6.entries.len() == 27,
        r6.to_table(),
    )?;
    ensure(
        r7.passed() && r7.rigid == 14 && r7.entries.len() == 56,
        r7.to_table(),
    )?;
    Ok(format!(
        "E6 {} rigid/{} witnessed, E7 {} rigid/{} witnessed, 0 violations",
        r6.rigid, r6.witnessed, r7.rigid, r7.witnessed
    ))
}

fn criterion7() -> Check {
    let mut count = 0;
    for n in 2..=8 {
        for k in 1..n {
            for idx in GrIndex::all(k, n).map_err(|e| e.to_string())? {
                count += 1;
                let oracle = common::gr_rigid_oracle(k, n, idx.lambda());
                ensure(classify_gr(&idx).is_rigid() == oracle, format!("{idx}"))?;
            }
        }
    }
    for (fam, lagrangian, lo) in [
        (IsotropicFamily::LG, true, 2),
        (IsotropicFamily::OG, false, 3),
    ] {
        for n in lo..=5 {
            for idx in IsotropicIndex::all(fam, n).map_err(|e| e.to_string())? {
                count += 1;
                let oracle = common::isotropic_rigid_oracle(lagrangian, n, idx.lambda());
                ensure(
                    classify_isotropic(&idx).is_rigid() == oracle,
                    format!("{idx}"),
                )?;
            }
        }
    }
    Ok(format!("{count} classes agree with the clause oracle"))
}

fn criterion8() -> Check {
    let mut count = 0;
    for n in 2..=6 {
        for seq in common::sequences(n, n) {
            let lg = IsotropicIndex::new(IsotropicFamily::LG, n, seq.clone())
                .map_err(|e| e.to_string())?;
            let og = IsotropicIndex::new(IsotropicFamily::OG, n + 1, seq.clone())
                .map_err(|e| e.to_string())?;
            ensure(
                classify_isotropic(&lg).status == classify_isotropic(&og).status,
                format!("{seq:?} at n = {n}"),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} sequences agree"))
}

fn grassmannian(k: usize, n: usize) -> Result<QuotientPoset, String> {
    build_cartan(CartanType::A, n - 1)
        .and_then(|d| build_quotient_poset(&d, &[k]))
        .map_err(|e| e.to_string())
}

fn criterion9() -> Check {
    let mut count = 0;
    for n in 2..=7 {
        for k in 1..n {
            let p = grassmannian(k, n)?;
            for v in 0..p.len() {
                let idx = coset_to_gr(&p, v).map_err(|e| e.to_string())?;
                let syt = common::syt_count(&common::gr_shape(idx.lambda()));
                ensure(*p.hasse().degree(v) == BigUint::from(syt), format!("{idx}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} degrees equal tableau counts"))
}

fn criterion10() -> Check {
    for n in 2..=8 {
        for k in 1..n {
            let p = grassmannian(k, n)?;
            for idx in GrIndex::all(k, n).map_err(|e| e.to_string())? {
                let v = gr_to_coset(&p, &idx).map_err(|e| e.to_string())?;
                let d = p.poincare_dual(v).map_err(|e| e.to_string())?;
                let got = coset_to_gr(&p, d).map_err(|e| e.to_string())?;
                ensure(
                    got.lambda() == common::dual_formula(n, idx.lambda()),
                    format!("{idx}"),
                )?;
            }
        }
    }
    for p in [e6_poset(), e7_poset()] {
        let p = p.map_err(|e| e.to_string())?;
        for v in 0..p.len() {
            let d = p.poincare_dual(v).map_err(|e| e.to_string())?;
            ensure(p.poincare_dual(d).unwrap() == v, "not an involution")?;
            ensure(
                p.dim(v) + p.dim(d) == p.top_dim(),
                "dimensions not complementary",
            )?;
        }
    }
    let mut pairs = 0;
    for (k, n) in [(2, 5), (3, 6)] {
        let all = GrIndex::all(k, n).map_err(|e| e.to_string())?;
        for nu in &all {
            for lambda in &all {
                let dn = schubert::classical::gr_dimension(nu);
                let dl = schubert::classical::gr_dimension(lambda);
                match pairing(nu, lambda) {
                    Ok(x) => {
                        let want =
                            u8::from(nu.lambda() == common::dual_formula(n, lambda.lambda()));
                        ensure(
                            x == want && dn + dl == k * (n - k),
                            format!("{nu} . {lambda}"),
                        )?;
                        ensure(*nu == dual_index(lambda) || x == 0, "dual mismatch")?;
                        pairs += 1;
                    }
                    Err(_) => ensure(dn + dl != k * (n - k), format!("{nu} . {lambda} rejected"))?,
                }
            }
        }
    }
    Ok(format!(
        "duals for n <= 8, E6/E7 involutions, {pairs} pairings"
    ))
}

fn criterion11() -> Check {
    let bad = common::dichotomy_violations();
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok(format!(
        "{} varieties checked",
        common::dichotomy_varieties().len()
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("E6/P6 poset", criterion1),
        ("E7/P7 poset", criterion2),
        ("transform table", criterion3),
        ("dimension table", criterion4),
        ("transform chains", criterion5),
        ("decoration verification", criterion6),
        ("classifier oracle", criterion7),
        ("LG/OG coincidence", criterion8),
        ("degree oracle", criterion9),
        ("duality", criterion10),
        ("dichotomy", criterion11),
    ];
    let mut failed = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} ({ms} ms)", k + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL {name}: {why} ({ms} ms)", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
