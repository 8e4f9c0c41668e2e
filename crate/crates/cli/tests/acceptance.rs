//! Acceptance checks over the catalog corpus. Runs without the libtest harness and
//! prints one PASS/FAIL line per criterion.

mod oracle;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use clap::Parser;
use gt_cli::{run, Cli};
use gt_core::catalog::{self, CorpusEntry};
use gt_core::crowns::{
    crown_params, crown_power, monolithic_structure, verify_d_formula, verify_normal_dichotomy, Prediction,
};
use gt_core::generation::{find_graph_subgroup, find_index_pair, find_index_witness};
use gt_core::invariants::SupernaturalNumber;
use gt_core::perm_core::{
    chief_series, fixed_point_free_classify, structure_flags, sylow_subgroup, FiniteGroup, GroupHom, PGroupShape,
    Permutation,
};
use gt_core::towers::{
    exponent_witness_2gen, find_tower_witness, tower_from_chain, tower_invariants, verify_tower_witness, TowerTarget,
};
use gt_core::{Error, Limits};
use oracle::*;

const CROWN_TIME_LIMIT: Duration = Duration::from_secs(60);
const GRAPH_TIME_LIMIT: Duration = Duration::from_secs(600);
const INDEX_ORDER_LIMIT: u64 = 100;
const DICHOTOMY_ORDER_LIMIT: u64 = 2000;
const FPF_ACTING_ORDER_LIMIT: usize = 16;
const FPF_MODULE_ORDER_LIMIT: u64 = 27;
const SEED: u64 = 0;

type Outcome = Result<String, String>;

fn lim() -> Limits {
    Limits::with_seed(SEED)
}

fn elements(g: &FiniteGroup) -> Vec<Permutation> {
    closure(g.degree(), g.generators())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s3_a4() -> Vec<(&'static str, FiniteGroup)> {
    vec![("S3", catalog::symmetric(3)), ("A4", catalog::alternating(4))]
}

fn crown_formula() -> Outcome {
    let start = Instant::now();
    let l = lim();
    let expected = [2usize, 3, 4];
    let mut independent = 0;
    for (name, g) in s3_a4() {
        let m = monolithic_structure(&g, &l).map_err(|e| e.to_string())?.ok_or("not monolithic")?;
        for k in 1..=3 {
            let c = verify_d_formula(&m, k, &l).map_err(|e| format!("{name} k={k}: {e}"))?;
            let want = expected[k - 1];
            ensure(c.matches && c.brute_force == want && c.predicted == Prediction::Exact(want), || {
                format!("{name} k={k}: predicted {:?}, brute force {}", c.predicted, c.brute_force)
            })?;
            let power = crown_power(&m, k, &l).map_err(|e| e.to_string())?;
            // The exhaustive oracle is affordable up to order 54.
            if power.group.order() <= 54 {
                let els = elements(&power.group);
                let d = d_brute(&els, 4);
                ensure(d == Some(want), || format!("{name} k={k}: oracle d = {d:?}"))?;
                independent += 1;
            }
        }
    }
    let t = start.elapsed();
    ensure(t < CROWN_TIME_LIMIT, || format!("took {t:?}"))?;
    Ok(format!(
        "d = 2, 3, 4 for S3 and A4, {independent} cases re-derived by exhaustive search, {:.1}s",
        t.as_secs_f64()
    ))
}

fn normal_dichotomy() -> Outcome {
    let l = lim();
    let mut cases = 0;
    for (name, g) in s3_a4() {
        let m = monolithic_structure(&g, &l).map_err(|e| e.to_string())?.ok_or("not monolithic")?;
        for k in 1..=3 {
            let power = crown_power(&m, k, &l).map_err(|e| e.to_string())?;
            if power.group.order() > DICHOTOMY_ORDER_LIMIT {
                continue;
            }
            let c = verify_normal_dichotomy(&m, k, &l).map_err(|e| format!("{name} k={k}: {e}"))?;
            ensure(c.holds && c.violations == 0, || format!("{name} k={k}: {} violations", c.violations))?;

            let els = elements(&power.group);
            let normals = normal_subgroups(&els);
            ensure(normals.len() == c.normal_subgroups, || {
                format!("{name} k={k}: oracle finds {} normal subgroups, engine {}", normals.len(), c.normal_subgroups)
            })?;
            let socle: BTreeSet<Permutation> = elements(&power.socle_product()).into_iter().collect();
            let bad = normals.iter().filter(|n| !socle.is_subset(n) && !n.is_subset(&socle)).count();
            ensure(bad == 0, || format!("{name} k={k}: oracle finds {bad} violations"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} crown powers, zero violations"))
}

fn graph_witnesses(corpus: &[CorpusEntry]) -> Outcome {
    let start = Instant::now();
    let l = lim();
    for e in corpus {
        let g = &e.group;
        let series = chief_series(g, &l).map_err(|err| format!("{}: {err}", e.name))?;
        let r = find_graph_subgroup(g, &series, 3, &l).map_err(|err| format!("{}: {err}", e.name))?;
        ensure(r.witness.len() <= 3, || format!("{}: {} elements", e.name, r.witness.len()))?;
        let all = elements(g);
        for m in series.terms() {
            let mset = set(&elements(m));
            let mut gens = r.witness.clone();
            gens.extend(m.generators().iter().cloned());
            let hm = closure(g.degree(), &gens);
            ensure(graph_mod(&hm, &mset) == graph_mod(&all, &mset), || {
                format!("{}: graphs differ modulo a term of order {}", e.name, m.order())
            })?;
        }
    }
    let t = start.elapsed();
    ensure(t < GRAPH_TIME_LIMIT, || format!("took {t:?}"))?;
    Ok(format!("{} groups, every level re-verified, {:.1}s", corpus.len(), t.as_secs_f64()))
}

/// `1`, `Z(G)`, each Sylow subgroup and `G`, without repeats.
fn index_candidates(g: &FiniteGroup, l: &Limits) -> Result<Vec<FiniteGroup>, String> {
    let all = elements(g);
    let center: Vec<Permutation> =
        all.iter().filter(|x| g.generators().iter().all(|s| x.then(s) == s.then(x))).cloned().collect();
    let mut out = vec![FiniteGroup::trivial(g.degree()), FiniteGroup::new(g.degree(), center).unwrap()];
    for p in primes_of(g.order()) {
        out.push(sylow_subgroup(g, p, l).map_err(|e| e.to_string())?);
    }
    out.push(g.clone());
    let mut seen: BTreeSet<BTreeSet<Permutation>> = BTreeSet::new();
    Ok(out.into_iter().filter(|h| seen.insert(elements(h).into_iter().collect())).collect())
}

fn index_pairs(corpus: &[CorpusEntry]) -> Outcome {
    let l = lim();
    let mut cases = 0;
    let mut groups = 0;
    for e in corpus.iter().filter(|e| e.group.order() <= INDEX_ORDER_LIMIT) {
        let g = &e.group;
        groups += 1;
        let series = chief_series(g, &l).map_err(|err| format!("{}: {err}", e.name))?;
        let terms: Vec<Vec<Permutation>> = series.terms().iter().map(elements).collect();
        let cands = index_candidates(g, &l)?;
        for x in &cands {
            for c in &cands {
                if !x.is_subgroup_of(c) {
                    continue;
                }
                let pair = find_index_pair(g, &series, x, c, &l).map_err(|err| format!("{}: {err}", e.name))?;
                let mut kgens = x.generators().to_vec();
                kgens.extend([pair.a.clone(), pair.b.clone()]);
                for m in &terms {
                    let mut cm_gens = c.generators().to_vec();
                    cm_gens.extend(m.iter().cloned());
                    let cm = set(&closure(g.degree(), &cm_gens));
                    let mut km_gens = kgens.clone();
                    km_gens.extend(m.iter().cloned());
                    let km = closure(g.degree(), &km_gens);
                    let meet = km.iter().filter(|y| cm.contains(y)).count();
                    let lhs = primes_of(g.order() / cm.len() as u64);
                    let rhs = primes_of((km.len() / meet) as u64);
                    ensure(lhs.is_subset(&rhs), || {
                        format!("{}: |X| = {}, |C| = {}: {lhs:?} not within {rhs:?}", e.name, x.order(), c.order())
                    })?;
                }
                cases += 1;
            }
        }
    }

    // No single element of S3 has order divisible by both 2 and 3.
    let s3 = catalog::symmetric(3);
    let one = FiniteGroup::trivial(3);
    let oracle_single = elements(&s3).iter().any(|a| primes_of(order_of(a)) == BTreeSet::from([2, 3]));
    ensure(!oracle_single, || "oracle finds a single S3 element of order 6".into())?;
    let series = chief_series(&s3, &l).map_err(|e| e.to_string())?;
    match find_index_witness(&s3, &series, &one, &one, 1, &l) {
        Err(Error::NoWitness(_)) => {}
        other => return Err(format!("S3 single-element search returned {other:?}")),
    }
    Ok(format!("{cases} (X, C) pairs over {groups} groups re-verified, S3 single-element negative reproduced"))
}

fn index_equality(corpus: &[CorpusEntry]) -> Outcome {
    let l = lim();
    let mut cases = 0;
    for e in corpus.iter().filter(|e| e.group.order() <= INDEX_ORDER_LIMIT) {
        let g = &e.group;
        let series = chief_series(g, &l).map_err(|err| format!("{}: {err}", e.name))?;
        for c in index_candidates(g, &l)? {
            let pair = find_index_pair(g, &series, &c, &c, &l).map_err(|err| format!("{}: {err}", e.name))?;
            let mut gens = c.generators().to_vec();
            gens.extend([pair.a.clone(), pair.b.clone()]);
            let k = closure(g.degree(), &gens).len() as u64;
            let lhs = primes_of(g.order() / c.order());
            let rhs = primes_of(k / c.order());
            ensure(lhs.is_subset(&rhs) && rhs.is_subset(&lhs), || {
                format!("{}: |C| = {}: {lhs:?} vs {rhs:?}", e.name, c.order())
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases with X = C, equality in both directions"))
}

fn exponent_pairs(corpus: &[CorpusEntry]) -> Outcome {
    let start = Instant::now();
    let l = lim();
    let mut count = 0;
    for e in corpus {
        let g = &e.group;
        if !structure_flags(g, &l).map_err(|err| format!("{}: {err}", e.name))?.supersolvable {
            continue;
        }
        let pair = exponent_witness_2gen(g, &l).map_err(|err| format!("{}: {err}", e.name))?;
        let h = closure(g.degree(), &[pair.c1.clone(), pair.c2.clone()]);
        let (eh, eg) = (exponent_of(&h), exponent_of(&elements(g)));
        ensure(eh == eg, || format!("{}: exp(H) = {eh}, exp(G) = {eg}", e.name))?;
        count += 1;
    }
    Ok(format!("{count} supersolvable groups, exp(<c1, c2>) = exp(G) for all, {:.1}s", start.elapsed().as_secs_f64()))
}

fn crown_s_below_r(corpus: &[CorpusEntry]) -> Outcome {
    let l = lim();
    let mut count = 0;
    for e in corpus.iter().filter(|e| !e.group.is_trivial()) {
        let Some(m) = monolithic_structure(&e.group, &l).map_err(|err| format!("{}: {err}", e.name))? else {
            continue;
        };
        if !m.socle_abelian || m.complement.is_none() {
            continue;
        }
        let p = crown_params(&m, &l).map_err(|err| format!("{}: {err}", e.name))?;
        ensure(p.s < p.r, || format!("{}: s = {}, r = {}", e.name, p.s, p.r))?;
        let socle = elements(&m.socle).len() as u64;
        ensure(p.q.checked_pow(p.r) == Some(socle), || format!("{}: q^r = {}^{} but |A| = {socle}", e.name, p.q, p.r))?;
        count += 1;
    }
    Ok(format!("{count} abelian-complemented monolithic groups, s < r for all"))
}

/// Automorphisms of a group given by its element list, as permutations of element indices.
fn automorphisms(els: &[Permutation], gens: &[Permutation]) -> Vec<Permutation> {
    let index: BTreeMap<&Permutation, usize> = els.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let gi: Vec<usize> = gens.iter().map(|g| index[g]).collect();
    let mul = |a: usize, b: usize| index[&els[a].then(&els[b])];
    let orders: Vec<u64> = els.iter().map(order_of).collect();
    let options: Vec<Vec<usize>> =
        gi.iter().map(|&g| (0..els.len()).filter(|&y| orders[y] == orders[g]).collect()).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gi.len()];
    'outer: loop {
        let images: Vec<usize> = choice.iter().zip(&options).map(|(&c, o)| o[c]).collect();
        let mut map = vec![usize::MAX; els.len()];
        let id = index[&Permutation::identity(els[0].degree())];
        map[id] = id;
        let mut queue = vec![id];
        let mut ok = true;
        let mut head = 0;
        while ok && head < queue.len() {
            let x = queue[head];
            head += 1;
            for (&s, &fs) in gi.iter().zip(&images) {
                let (y, fy) = (mul(x, s), mul(map[x], fs));
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push(y);
                } else if map[y] != fy {
                    ok = false;
                    break;
                }
            }
        }
        if ok && map.iter().collect::<HashSet<_>>().len() == els.len() {
            out.push(Permutation::from_images(map.iter().map(|&v| v as u32).collect()).unwrap());
        }
        let mut pos = choice.len();
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < options[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
    out
}

fn prime_power_base(n: u64) -> Option<u64> {
    let ps = primes_of(n);
    (ps.len() == 1).then(|| *ps.iter().next().unwrap())
}

fn fpf_consistency(corpus: &[CorpusEntry]) -> Outcome {
    let l = lim();
    let mut actions = 0;
    let mut shapes: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut saw_q8_on_c3c3 = false;
    for e in corpus.iter().filter(|e| e.group.order() <= FPF_MODULE_ORDER_LIMIT) {
        if prime_power_base(e.group.order()).is_none() {
            continue;
        }
        let els = elements(&e.group);
        let n = els.len();
        let index: BTreeMap<&Permutation, usize> = els.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let regular: Vec<Permutation> = e
            .group
            .generators()
            .iter()
            .map(|g| Permutation::from_images(els.iter().map(|x| index[&x.then(g)] as u32).collect()).unwrap())
            .collect();
        let q_reg = FiniteGroup::new(n, regular).unwrap();
        let auts = automorphisms(&els, e.group.generators());
        let fpf = |a: &Permutation| a.is_identity() || (0..n).all(|i| els[i].is_identity() || a.apply(i) != i);
        let mut subgroups: BTreeSet<Vec<Permutation>> = BTreeSet::new();
        for p in primes_of(auts.len() as u64) {
            let pool: Vec<&Permutation> = auts
                .iter()
                .filter(|a| !a.is_identity() && prime_power_base(order_of(a)) == Some(p) && fpf(a))
                .collect();
            let accept = |gens: &[Permutation]| -> Option<Vec<Permutation>> {
                let mut h = closure_capped(n, gens, FPF_ACTING_ORDER_LIMIT)?;
                if prime_power_base(h.len() as u64) != Some(p) || !h.iter().all(&fpf) {
                    return None;
                }
                h.sort();
                Some(h)
            };
            let mut layer: Vec<(Vec<Permutation>, Vec<Permutation>)> = Vec::new();
            for &a in &pool {
                if let Some(h) = accept(std::slice::from_ref(a)) {
                    if subgroups.insert(h.clone()) {
                        layer.push((h, vec![a.clone()]));
                    }
                }
            }
            while !layer.is_empty() {
                let mut next = Vec::new();
                for (members, gens) in &layer {
                    for &a in &pool {
                        if members.binary_search(a).is_ok() {
                            continue;
                        }
                        let mut g2 = gens.clone();
                        g2.push(a.clone());
                        if let Some(h) = accept(&g2) {
                            if subgroups.insert(h.clone()) {
                                next.push((h, g2));
                            }
                        }
                    }
                }
                layer = next;
            }
        }
        for members in &subgroups {
            let s = FiniteGroup::new(n, members.iter().filter(|x| !x.is_identity()).cloned().collect()).unwrap();
            let action = GroupHom::identity(&s, &l).map_err(|err| err.to_string())?;
            let r = fixed_point_free_classify(&s, &q_reg, &action, &l).map_err(|err| format!("{}: {err}", e.name))?;
            ensure(r.hypothesis_holds, || {
                format!("{}: engine rejects a fixed-point-free action of order {}", e.name, s.order())
            })?;
            ensure(r.classification != PGroupShape::Other, || {
                format!("{}: acting group of order {} classified as other", e.name, s.order())
            })?;
            // Independent shape: cyclic, or a 2-group with a unique involution.
            let cyclic = members.iter().any(|x| order_of(x) == members.len() as u64);
            let involutions = members.iter().filter(|x| order_of(x) == 2).count();
            let expected = if cyclic {
                PGroupShape::Cyclic
            } else if members.len() >= 8 && involutions == 1 && members.len().is_power_of_two() {
                PGroupShape::GeneralizedQuaternion
            } else {
                PGroupShape::Other
            };
            ensure(r.classification == expected, || {
                format!("{}: {:?} vs oracle {expected:?}", e.name, r.classification)
            })?;
            if e.name == "C 3 x C 3" && members.len() == 8 && expected == PGroupShape::GeneralizedQuaternion {
                saw_q8_on_c3c3 = true;
            }
            *shapes
                .entry(match expected {
                    PGroupShape::Cyclic => "cyclic",
                    PGroupShape::GeneralizedQuaternion => "quaternion",
                    PGroupShape::Other => "other",
                })
                .or_default() += 1;
            actions += 1;
        }
    }
    ensure(saw_q8_on_c3c3, || "no quaternion action on C3 x C3 was enumerated".into())?;
    Ok(format!("{actions} fixed-point-free actions {shapes:?}, never (holds, other); Q8 on C3 x C3 included"))
}

const TOWER_GROUPS: [&str; 10] =
    ["S 4", "A 4", "D 12", "Q8", "C 12", "A 5", "C 3 x S 3", "C 2 x D 8", "C 2 x A 4", "S 5"];

fn towers(corpus: &[CorpusEntry]) -> Outcome {
    let l = lim();
    for name in TOWER_GROUPS {
        let e = corpus.iter().find(|e| e.name == name).ok_or_else(|| format!("{name} missing from the corpus"))?;
        let g = &e.group;
        let err = |x: Error| format!("{name}: {x}");
        let chain = chief_series(g, &l).map_err(err)?;
        let t = tower_from_chain(g, &chain, &l).map_err(err)?;
        let inv = tower_invariants(&t, &l).map_err(err)?;
        let all = elements(g);
        let (v, ed) = graph_of(&all);
        let graph: (BTreeSet<u64>, BTreeSet<(u64, u64)>) = (inv.graph.vertices().clone(), inv.graph.edges().clone());
        ensure(graph == (v, ed), || format!("{name}: union graph {}", inv.graph))?;
        let exp = exponent_of(&all);
        ensure(inv.exponent == SupernaturalNumber::from_natural(exp), || {
            format!("{name}: lcm exponent {} vs {exp}", inv.exponent)
        })?;

        let w = find_tower_witness(&t, 3, TowerTarget::PrimeGraph, None, None, &l).map_err(err)?;
        for depth in 0..=t.depth() {
            let checks = verify_tower_witness(&t.truncated(depth), TowerTarget::PrimeGraph, &w.tuple, None, None, &l)
                .map_err(err)?;
            ensure(checks.len() == depth + 1 && checks.iter().all(|c| c.pass), || {
                format!("{name}: prefix {depth} fails")
            })?;
        }
        for m in t.kernels() {
            let mset = set(&elements(m));
            let mut gens = w.tuple.clone();
            gens.extend(m.generators().iter().cloned());
            let hm = closure(g.degree(), &gens);
            ensure(graph_mod(&hm, &mset) == graph_mod(&all, &mset), || format!("{name}: oracle level mismatch"))?;
        }
    }
    Ok(format!(
        "{} groups: union graph = Γ(G), lcm exponent = exp(G), witness coherent on every prefix",
        TOWER_GROUPS.len()
    ))
}

const REPORT_COMMANDS: [&[&str]; 12] = [
    &["analyze", "S 3"],
    &["analyze", "C 1"],
    &["analyze", "A 4"],
    &["witness", "prime-graph", "S 5", "--max-gens", "3"],
    &["witness", "index-primes", "S 3", "--X", "C 1", "--C", "C 1"],
    &["witness", "index-primes", "S 4", "--X", "trivial", "--C", "sylow 2"],
    &["witness", "exponent", "S 3"],
    &["crown", "verify", "--L", "S 3", "--k", "2"],
    &["crown", "build", "--L", "S 3", "--k", "1"],
    &["crown", "verify", "--L", "A 4", "--k", "2"],
    &["tower", "run", "S 4"],
    &["tower", "run", "C 12", "--chain", "sylow", "--target", "exponent"],
];

fn report_suite() -> Result<String, String> {
    let mut out = String::new();
    for args in REPORT_COMMANDS {
        let mut argv = vec!["gt", "--json", "--seed", "0"];
        argv.extend_from_slice(args);
        let cli = Cli::try_parse_from(&argv).map_err(|e| e.to_string())?;
        out.push_str(&run(&cli).map_err(|e| format!("{args:?}: {e}"))?.to_json());
        out.push('\n');
    }
    Ok(out)
}

fn binary_suite() -> Result<Vec<Vec<u8>>, String> {
    REPORT_COMMANDS
        .iter()
        .map(|args| {
            let out = Command::new(env!("CARGO_BIN_EXE_gt"))
                .args(["--json", "--seed", "0"])
                .args(*args)
                .output()
                .map_err(|e| e.to_string())?;
            ensure(out.status.success(), || format!("{args:?} exited with {}", out.status))?;
            Ok(out.stdout)
        })
        .collect()
}

fn determinism() -> Outcome {
    let (a, b) = (report_suite()?, report_suite()?);
    ensure(a == b, || "library reports differ between runs".into())?;
    let (x, y) = (binary_suite()?, binary_suite()?);
    ensure(x == y, || "binary reports differ between runs".into())?;
    let from_binary: Vec<u8> = x.concat();
    ensure(from_binary == a.as_bytes(), || "binary and library reports differ".into())?;
    Ok(format!("{} reports byte-identical across two runs, in process and through the binary", REPORT_COMMANDS.len()))
}

fn main() -> ExitCode {
    let corpus = catalog::standard_corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("crown formula exactness", Box::new(crown_formula)),
        ("normal dichotomy", Box::new(normal_dichotomy)),
        ("prime-graph witnesses", Box::new(|| graph_witnesses(&corpus))),
        ("index-prime witnesses", Box::new(|| index_pairs(&corpus))),
        ("index-prime equality", Box::new(|| index_equality(&corpus))),
        ("exponent witnesses", Box::new(|| exponent_pairs(&corpus))),
        ("s < r", Box::new(|| crown_s_below_r(&corpus))),
        ("fixed-point-free consistency", Box::new(|| fpf_consistency(&corpus))),
        ("tower exactness", Box::new(|| towers(&corpus))),
        ("determinism", Box::new(determinism)),
    ];
    println!("acceptance: corpus of {} groups, seed {SEED}", corpus.len());
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
