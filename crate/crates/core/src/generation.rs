//! Generation numbers, Gaschütz lifting and witness searches along normal series.

use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{prime_divisors, Integer};
use crate::invariants::PrimeGraph;
use crate::limits::Budget;
use crate::perm_core::{CayleyTable, Elt, FiniteGroup, IndexSubgroup, NormalSeries, Permutation};
use crate::{Error, Limits, Result};

/// True iff `tuple` generates `g`.
pub fn generates(g: &FiniteGroup, tuple: &[Permutation]) -> Result<bool> {
    for x in tuple {
        if !g.contains(x)? {
            return Err(Error::NotAMember(x.to_string()));
        }
    }
    Ok(FiniteGroup::new(g.degree(), tuple.to_vec())?.order() == g.order())
}

/// Exact `d(G)` or `d_X(G)` with its witness.
#[derive(Debug, Clone)]
pub struct GenerationCertificate {
    pub group: FiniteGroup,
    pub count: usize,
    pub witness: Vec<Permutation>,
    /// Set when no shorter tuple generates, by completed exhaustive search.
    pub exhaustive_below: bool,
}

/// Product-replacement sampler over table indices.
pub(crate) struct ProductReplacement<'a> {
    t: &'a CayleyTable,
    slots: Vec<Elt>,
    acc: Elt,
    rng: ChaCha8Rng,
}

impl<'a> ProductReplacement<'a> {
    pub(crate) fn new(t: &'a CayleyTable, seed: u64) -> Self {
        let mut slots: Vec<Elt> = t.gens().to_vec();
        if slots.is_empty() {
            slots.push(t.identity());
        }
        let base = slots.clone();
        while slots.len() < 10 {
            slots.push(base[slots.len() % base.len()]);
        }
        let mut pr = ProductReplacement { t, slots, acc: t.identity(), rng: ChaCha8Rng::seed_from_u64(seed) };
        for _ in 0..60 {
            pr.next();
        }
        pr
    }

    pub(crate) fn next(&mut self) -> Elt {
        let n = self.slots.len();
        let i = self.rng.gen_range(0..n);
        let mut j = self.rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        self.slots[i] = if self.rng.gen::<bool>() {
            self.t.mul(self.slots[i], self.slots[j])
        } else {
            self.t.mul(self.slots[j], self.slots[i])
        };
        self.acc = self.t.mul(self.acc, self.slots[i]);
        self.acc
    }
}

/// A `d`-tuple `c` with `⟨x, c⟩ = G`, by layered search over subgroups.
fn exhaustive_tuple(t: &CayleyTable, x: &IndexSubgroup, d: usize, budget: &mut Budget) -> Result<Option<Vec<Elt>>> {
    let n = t.len();
    if x.order() == n {
        return Ok(Some(vec![t.identity(); d]));
    }
    let mut layer: Vec<(IndexSubgroup, Vec<Elt>)> = vec![(x.clone(), Vec::new())];
    for depth in 0..d {
        let last = depth + 1 == d;
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut next = Vec::new();
        for (h, tuple) in &layer {
            // Conjugating the whole tuple preserves generation, so with no fixed part
            // the first element ranges over class representatives.
            let candidates = if depth == 0 && x.order() == 1 { t.classes().reps.clone() } else { t.coset_reps(h) };
            for c in candidates {
                if h.contains(c) {
                    continue;
                }
                budget.spend(1)?;
                let k = t.extend(h, &[c]);
                if k.order() == n {
                    let mut out = tuple.clone();
                    out.push(c);
                    out.resize(d, t.identity());
                    return Ok(Some(out));
                }
                if !last && seen.insert(k.members().clone()) {
                    let mut tup = tuple.clone();
                    tup.push(c);
                    next.push((k, tup));
                }
            }
        }
        layer = next;
    }
    Ok(None)
}

fn certificate_in(
    t: &CayleyTable,
    g: &FiniteGroup,
    x: &IndexSubgroup,
    limits: &Limits,
) -> Result<GenerationCertificate> {
    let n = t.len();
    if x.order() == n {
        return Ok(GenerationCertificate { group: g.clone(), count: 0, witness: Vec::new(), exhaustive_below: true });
    }
    // Greedy upper bound.
    let mut greedy = Vec::new();
    let mut h = x.clone();
    for &s in t.gens() {
        if !h.contains(s) {
            greedy.push(s);
            h = t.extend(&h, &[s]);
        }
    }
    let mut upper = greedy.len();
    let mut witness = greedy;
    let mut pr = ProductReplacement::new(t, limits.seed);
    'sizes: for d in 1..upper {
        for _ in 0..limits.random_tuples {
            let tuple: Vec<Elt> = (0..d).map(|_| pr.next()).collect();
            if t.extend(x, &tuple).order() == n {
                upper = d;
                witness = tuple;
                break 'sizes;
            }
        }
    }
    let mut budget = Budget::new("generation certification", limits.search_budget);
    for d in 1..upper {
        if let Some(tuple) = exhaustive_tuple(t, x, d, &mut budget)? {
            upper = d;
            witness = tuple;
            break;
        }
    }
    Ok(GenerationCertificate { group: g.clone(), count: upper, witness: t.perms(&witness), exhaustive_below: true })
}

/// Exact `d(G)`.
pub fn min_generators(g: &FiniteGroup, limits: &Limits) -> Result<GenerationCertificate> {
    let t = g.table(limits)?;
    certificate_in(&t, g, &t.trivial(), limits)
}

/// Exact `d_X(G)`, the least `d` with `G = ⟨X, g₁, …, g_d⟩`.
pub fn relative_min_generators(g: &FiniteGroup, x: &FiniteGroup, limits: &Limits) -> Result<GenerationCertificate> {
    if !x.is_subgroup_of(g) {
        return Err(Error::NotASubgroup(format!("{x:?} is not contained in {g:?}")));
    }
    let t = g.table(limits)?;
    let xs = t.locate(x)?;
    certificate_in(&t, g, &xs, limits)
}

/// Elements of `n` sorted by word length in `n`'s generators, then by index.
pub(crate) fn by_word_length(t: &CayleyTable, n: &IndexSubgroup) -> Vec<(usize, Elt)> {
    let mut len = vec![usize::MAX; t.len()];
    len[0] = 0;
    let mut queue = vec![t.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in n.gens() {
            for y in [t.mul(x, s), t.mul(x, t.inv(s))] {
                if len[y as usize] == usize::MAX {
                    len[y as usize] = len[x as usize] + 1;
                    queue.push(y);
                }
            }
        }
    }
    let mut out: Vec<(usize, Elt)> = queue.iter().map(|&x| (len[x as usize], x)).collect();
    out.sort();
    out
}

/// Tuples over `pool` (sorted by length) of total length exactly `total`, in lexicographic order.
pub(crate) fn tuples_of_length(
    pool: &[(usize, Elt)],
    m: usize,
    total: usize,
    prefix: &mut Vec<Elt>,
    visit: &mut dyn FnMut(&[Elt]) -> Result<bool>,
) -> Result<bool> {
    if prefix.len() == m {
        return if total == 0 { visit(prefix) } else { Ok(false) };
    }
    for &(l, x) in pool {
        if l > total {
            break;
        }
        if prefix.len() + 1 == m && l != total {
            continue;
        }
        prefix.push(x);
        let found = tuples_of_length(pool, m, total - l, prefix, visit)?;
        prefix.pop();
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Gaschütz search inside `ambient`, which must contain `n` and the partial elements.
pub(crate) fn gaschutz_in(
    t: &CayleyTable,
    ambient: &IndexSubgroup,
    n: &IndexSubgroup,
    partial: &[Elt],
    budget: &mut Budget,
) -> Result<Option<Vec<Elt>>> {
    let m = partial.len();
    let pool = by_word_length(t, n);
    let max_len = pool.last().map_or(0, |p| p.0);
    let mut found: Option<Vec<Elt>> = None;
    for total in 0..=m * max_len {
        let mut visit = |us: &[Elt]| -> Result<bool> {
            budget.spend(1)?;
            let lifted: Vec<Elt> = partial.iter().zip(us).map(|(&g, &u)| t.mul(g, u)).collect();
            if t.closure(&lifted).order() == ambient.order() {
                found = Some(us.to_vec());
                return Ok(true);
            }
            Ok(false)
        };
        if tuples_of_length(&pool, m, total, &mut Vec::new(), &mut visit)? {
            break;
        }
    }
    Ok(found)
}

/// `u₁, …, u_m ∈ N` with `⟨g₁u₁, …, g_m u_m⟩ = G`, searched in ascending total word length.
pub fn gaschutz_lift(
    g: &FiniteGroup,
    n: &FiniteGroup,
    partial: &[Permutation],
    m: usize,
    limits: &Limits,
) -> Result<Vec<Permutation>> {
    if partial.len() != m {
        return Err(Error::Precondition(format!("{} partial elements supplied for m = {m}", partial.len())));
    }
    if !crate::perm_core::is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let t = g.table(limits)?;
    let ns = t.locate(n)?;
    let mut idx = Vec::with_capacity(m);
    for x in partial {
        idx.push(t.index_of(x).ok_or_else(|| Error::NotAMember(x.to_string()))?);
    }
    if t.extend(&ns, &idx).order() != t.len() {
        return Err(Error::Precondition("partial elements do not generate G modulo N".into()));
    }
    let mut budget = Budget::new("Gaschütz lifting", limits.search_budget);
    match gaschutz_in(&t, &t.whole(), &ns, &idx, &mut budget)? {
        Some(us) => {
            let us = t.perms(&us);
            let lifted: Vec<Permutation> = partial.iter().zip(&us).map(|(a, b)| a.then(b)).collect();
            if !generates(g, &lifted)? {
                return Err(Error::InvariantViolation("lifted tuple does not generate".into()));
            }
            Ok(us)
        }
        None => {
            let d = certificate_in(&t, g, &t.trivial(), limits)?.count;
            if d > m {
                Err(Error::Precondition(format!("d(G) = {d} exceeds m = {m}")))
            } else {
                Err(Error::InvariantViolation("no lift found although d(G) ≤ m".into()))
            }
        }
    }
}

/// A value recorded by a per-level check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Observation {
    Graph(PrimeGraph),
    Primes(BTreeSet<u64>),
    Natural(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelCheck {
    pub level: usize,
    pub expected: Observation,
    pub observed: Observation,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct WitnessReport {
    pub series: NormalSeries,
    pub witness: Vec<Permutation>,
    pub checks: Vec<LevelCheck>,
}

impl WitnessReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// The subgroup generated by the witness.
    pub fn subgroup(&self) -> FiniteGroup {
        FiniteGroup::new(self.series.ambient().degree(), self.witness.clone()).expect("witness shares the degree")
    }
}

fn require_ambient(g: &FiniteGroup, series: &NormalSeries) -> Result<()> {
    if !series.ambient().same_as(g) {
        return Err(Error::Precondition("series is not a series of G".into()));
    }
    Ok(())
}

fn located_terms(t: &CayleyTable, series: &NormalSeries) -> Result<Vec<IndexSubgroup>> {
    series.terms().iter().map(|m| t.locate(m)).collect()
}

/// `Γ(HM/M)` from the orders modulo `M` of the elements of `H`.
pub(crate) fn graph_mod(t: &CayleyTable, h: &IndexSubgroup, m: &IndexSubgroup) -> PrimeGraph {
    let mut orders: BTreeSet<u64> = BTreeSet::new();
    for x in h.iter() {
        orders.insert(t.order_mod(x, m) as u64);
    }
    PrimeGraph::from_orders(orders)
}

/// Graph features of every level, as bits.
struct FeatureMasks {
    masks: Vec<FixedBitSet>,
    full: FixedBitSet,
}

impl FeatureMasks {
    fn new(t: &CayleyTable, terms: &[IndexSubgroup]) -> Self {
        let n = t.len();
        let mut features: Vec<(usize, u64, u64)> = Vec::new();
        let mut per_level_orders: Vec<Vec<u64>> = Vec::new();
        for (i, m) in terms.iter().enumerate() {
            let orders: Vec<u64> = (0..n as Elt).map(|x| t.order_mod(x, m) as u64).collect();
            let graph = PrimeGraph::from_orders(orders.iter().copied());
            features.extend(graph.vertices().iter().map(|&p| (i, p, 0)));
            features.extend(graph.edges().iter().map(|&(p, q)| (i, p, q)));
            per_level_orders.push(orders);
        }
        let width = features.len();
        let mut masks = vec![FixedBitSet::with_capacity(width); n];
        for (bit, &(level, p, q)) in features.iter().enumerate() {
            let need = if q == 0 { p } else { p * q };
            for (x, mask) in masks.iter_mut().enumerate() {
                if per_level_orders[level][x].is_multiple_of(need) {
                    mask.insert(bit);
                }
            }
        }
        let mut full = FixedBitSet::with_capacity(width);
        full.insert_range(..);
        FeatureMasks { masks, full }
    }

    fn covers(&self, h: &IndexSubgroup) -> bool {
        let mut acc = FixedBitSet::with_capacity(self.full.len());
        for x in h.iter() {
            acc.union_with(&self.masks[x as usize]);
            if acc == self.full {
                return true;
            }
        }
        acc == self.full
    }
}

fn graph_checks(t: &CayleyTable, terms: &[IndexSubgroup], h: &IndexSubgroup) -> Vec<LevelCheck> {
    let whole = t.whole();
    terms
        .iter()
        .enumerate()
        .map(|(level, m)| {
            let expected = graph_mod(t, &whole, m);
            let observed = graph_mod(t, h, m);
            LevelCheck {
                level,
                pass: expected == observed,
                expected: Observation::Graph(expected),
                observed: Observation::Graph(observed),
            }
        })
        .collect()
}

/// Candidate tracking for smallest-order searches: ties go to the first found.
struct Best {
    order: usize,
    tuple: Vec<Elt>,
    subgroup: Option<IndexSubgroup>,
}

impl Best {
    fn offer(&mut self, h: &IndexSubgroup, tuple: &[Elt]) {
        if self.subgroup.is_none() || h.order() < self.order {
            self.order = h.order();
            self.tuple = tuple.to_vec();
            self.subgroup = Some(h.clone());
        }
    }
}

fn radical(n: u64) -> usize {
    prime_divisors(n).into_iter().product::<u64>() as usize
}

/// A `d`-tuple generating a subgroup `H` of least order with `Γ(HM_i/M_i) = Γ(G/M_i)` at every level.
///
/// With `d ≥ 3` a witness always exists, so exhausting the search is an
/// invariant violation; with `d ≤ 2` exhaustion is a legitimate negative.
pub fn find_graph_subgroup(g: &FiniteGroup, series: &NormalSeries, d: usize, limits: &Limits) -> Result<WitnessReport> {
    require_ambient(g, series)?;
    if d == 0 {
        return Err(Error::Precondition("at least one generator is required".into()));
    }
    let t = g.table(limits)?;
    let terms = located_terms(&t, series)?;
    let features = FeatureMasks::new(&t, &terms);
    let n = t.len();
    let floor = radical(n as u64);
    let mut budget = Budget::new("prime-graph witness search", limits.search_budget);
    let mut best = Best { order: usize::MAX, tuple: Vec::new(), subgroup: None };
    let reps = t.classes().reps.clone();

    for &a in &reps {
        budget.spend(1)?;
        let h = t.closure(&[a]);
        if h.order() < best.order && features.covers(&h) {
            best.offer(&h, &[a]);
        }
    }
    if d >= 2 && best.order > floor {
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        for &a in &reps {
            let ha = t.closure(&[a]);
            let oa = t.order(a) as usize;
            for b in t.coset_reps(&ha) {
                if ha.contains(b) || oa.lcm(&(t.order(b) as usize)) >= best.order {
                    continue;
                }
                budget.spend(1)?;
                let h = t.extend(&ha, &[b]);
                if h.order() < best.order && seen.insert(h.members().clone()) && features.covers(&h) {
                    best.offer(&h, &[a, b]);
                }
            }
            if best.order <= floor {
                break;
            }
        }
    }
    if d >= 3 && best.subgroup.is_none() {
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut pairs: Vec<(IndexSubgroup, Elt, Elt)> = Vec::new();
        for &a in &reps {
            let ha = t.closure(&[a]);
            for b in t.coset_reps(&ha) {
                budget.spend(1)?;
                let h = t.extend(&ha, &[b]);
                if seen.insert(h.members().clone()) {
                    pairs.push((h, a, b));
                }
            }
        }
        pairs.sort_by_key(|(h, a, b)| (h.order(), *a, *b));
        for (h, a, b) in &pairs {
            if h.order() >= best.order {
                break;
            }
            for c in t.coset_reps(h) {
                budget.spend(1)?;
                let k = t.extend(h, &[c]);
                if k.order() < best.order && seen.insert(k.members().clone()) && features.covers(&k) {
                    best.offer(&k, &[*a, *b, c]);
                }
            }
        }
    }
    let Some(h) = best.subgroup else {
        return Err(if d >= 3 {
            Error::InvariantViolation(format!("no {d}-generated prime-graph witness found"))
        } else {
            Error::NoWitness(format!("no {d}-generated subgroup preserves the prime graph at every level"))
        });
    };
    let mut tuple = best.tuple;
    tuple.resize(d, t.identity());
    let checks = graph_checks(&t, &terms, &h);
    if checks.iter().any(|c| !c.pass) {
        return Err(Error::InvariantViolation("feature masks disagree with recomputed graphs".into()));
    }
    Ok(WitnessReport { series: series.clone(), witness: t.perms(&tuple), checks })
}

/// `(π(|G : CM|), π(|KM : CM ∩ KM|))` for one level.
pub(crate) fn index_sides(
    t: &CayleyTable,
    c: &IndexSubgroup,
    k: &IndexSubgroup,
    m: &IndexSubgroup,
) -> (BTreeSet<u64>, BTreeSet<u64>) {
    let cm = t.join(c, m);
    let km = t.join(k, m);
    let mut meet = cm.members().clone();
    meet.intersect_with(km.members());
    let meet_order = meet.count_ones(..);
    let lhs = prime_divisors((t.len() / cm.order()) as u64);
    let rhs = prime_divisors((km.order() / meet_order) as u64);
    (lhs, rhs)
}

fn index_checks(t: &CayleyTable, terms: &[IndexSubgroup], c: &IndexSubgroup, k: &IndexSubgroup) -> Vec<LevelCheck> {
    terms
        .iter()
        .enumerate()
        .map(|(level, m)| {
            let (lhs, rhs) = index_sides(t, c, k, m);
            LevelCheck {
                level,
                pass: lhs.is_subset(&rhs),
                expected: Observation::Primes(lhs),
                observed: Observation::Primes(rhs),
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct IndexWitness {
    /// The elements adjoined to `X`.
    pub elements: Vec<Permutation>,
    pub report: WitnessReport,
}

fn require_chain(g: &FiniteGroup, x: &FiniteGroup, c: &FiniteGroup) -> Result<()> {
    if !x.is_subgroup_of(c) {
        return Err(Error::NotASubgroup("X is not contained in C".into()));
    }
    if !c.is_subgroup_of(g) {
        return Err(Error::NotASubgroup("C is not contained in G".into()));
    }
    Ok(())
}

/// `d` elements `a₁, …` with `π(|G : CM_i|) ⊆ π(|KM_i : CM_i ∩ KM_i|)` at every level,
/// `K = ⟨X, a₁, …⟩`, choosing `K` of least order.
pub fn find_index_witness(
    g: &FiniteGroup,
    series: &NormalSeries,
    x: &FiniteGroup,
    c: &FiniteGroup,
    d: usize,
    limits: &Limits,
) -> Result<IndexWitness> {
    require_ambient(g, series)?;
    require_chain(g, x, c)?;
    let t = g.table(limits)?;
    let terms = located_terms(&t, series)?;
    let xs = t.locate(x)?;
    let cs = t.locate(c)?;
    let passes = |k: &IndexSubgroup| {
        terms.iter().all(|m| {
            let (lhs, rhs) = index_sides(&t, &cs, k, m);
            lhs.is_subset(&rhs)
        })
    };
    let mut budget = Budget::new("index-prime witness search", limits.search_budget);
    let mut best = Best { order: usize::MAX, tuple: Vec::new(), subgroup: None };
    let mut layer: Vec<(IndexSubgroup, Vec<Elt>)> = vec![(xs.clone(), Vec::new())];
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(xs.members().clone());
    if passes(&xs) {
        best.offer(&xs, &[]);
    }
    for depth in 0..d {
        let mut next = Vec::new();
        for (h, tuple) in &layer {
            let candidates = if depth == 0 && xs.order() == 1 { t.classes().reps.clone() } else { t.coset_reps(h) };
            for a in candidates {
                if h.contains(a) {
                    continue;
                }
                budget.spend(1)?;
                let k = t.extend(h, &[a]);
                if !seen.insert(k.members().clone()) {
                    continue;
                }
                let mut tup = tuple.clone();
                tup.push(a);
                if k.order() < best.order && passes(&k) {
                    best.offer(&k, &tup);
                }
                next.push((k, tup));
            }
        }
        layer = next;
    }
    let Some(k) = best.subgroup else {
        return Err(Error::NoWitness(format!("no {d} elements satisfy the index-prime containments")));
    };
    let mut tuple = best.tuple;
    tuple.resize(d, t.identity());
    let checks = index_checks(&t, &terms, &cs, &k);
    let elements = t.perms(&tuple);
    let mut witness = x.generators().to_vec();
    witness.extend(elements.iter().cloned());
    Ok(IndexWitness { elements, report: WitnessReport { series: series.clone(), witness, checks } })
}

#[derive(Debug, Clone)]
pub struct IndexPair {
    pub a: Permutation,
    pub b: Permutation,
    pub report: WitnessReport,
}

/// The two-element case of [`find_index_witness`]; exhaustion on a chief series is an invariant violation.
pub fn find_index_pair(
    g: &FiniteGroup,
    series: &NormalSeries,
    x: &FiniteGroup,
    c: &FiniteGroup,
    limits: &Limits,
) -> Result<IndexPair> {
    match find_index_witness(g, series, x, c, 2, limits) {
        Ok(w) => Ok(IndexPair { a: w.elements[0].clone(), b: w.elements[1].clone(), report: w.report }),
        Err(Error::NoWitness(msg)) if series.is_chief(limits)? => Err(Error::InvariantViolation(msg)),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone)]
pub struct CssVerdict {
    pub holds: bool,
    pub index_primes: BTreeSet<u64>,
    pub pair: IndexPair,
}

/// Exhibits `a, b` with at least two primes dividing `|⟨a,b,X⟩ : C ∩ ⟨a,b,X⟩|`.
pub fn verify_css(g: &FiniteGroup, x: &FiniteGroup, c: &FiniteGroup, limits: &Limits) -> Result<CssVerdict> {
    require_chain(g, x, c)?;
    let lhs = prime_divisors(g.order() / c.order());
    if lhs.len() < 2 {
        return Err(Error::Precondition(format!(
            "|G : C| = {} has fewer than two prime divisors",
            g.order() / c.order()
        )));
    }
    let series = crate::perm_core::chief_series(g, limits)?;
    let pair = find_index_pair(g, &series, x, c, limits)?;
    let t = g.table(limits)?;
    let k = t.locate(&pair.report.subgroup())?;
    let cs = t.locate(c)?;
    let (_, rhs) = index_sides(&t, &cs, &k, &t.trivial());
    Ok(CssVerdict { holds: rhs.len() >= 2, index_primes: rhs, pair })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::perm_core::{chief_series, direct_product, NormalSeries};

    fn p(deg: usize, cycles: &[&[usize]]) -> Permutation {
        let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(deg, &c).unwrap()
    }

    #[test]
    fn generation_checks() {
        let s3 = catalog::symmetric(3);
        assert!(generates(&s3, &[p(3, &[&[0, 1]]), p(3, &[&[0, 1, 2]])]).unwrap());
        assert!(!generates(&s3, &[p(3, &[&[0, 1, 2]])]).unwrap());
        assert!(generates(&s3, s3.generators()).unwrap());
        assert!(generates(&catalog::cyclic(3), &[p(3, &[&[0, 1]])]).is_err());
    }

    #[test]
    fn minimal_generator_counts() {
        let l = Limits::default();
        assert_eq!(min_generators(&catalog::cyclic(6), &l).unwrap().count, 1);
        let s4 = min_generators(&catalog::symmetric(4), &l).unwrap();
        assert_eq!(s4.count, 2);
        assert!(s4.exhaustive_below);
        assert!(generates(&catalog::symmetric(4), &s4.witness).unwrap());
        let e8 = direct_product(&catalog::cyclic(2), &catalog::dihedral(4).unwrap());
        assert_eq!(min_generators(&e8, &l).unwrap().count, 3);
        assert_eq!(min_generators(&catalog::cyclic(1), &l).unwrap().count, 0);
    }

    #[test]
    fn relative_counts() {
        let l = Limits::default();
        let s3 = catalog::symmetric(3);
        assert_eq!(relative_min_generators(&s3, &catalog::alternating(3), &l).unwrap().count, 1);
        assert_eq!(relative_min_generators(&s3, &s3, &l).unwrap().count, 0);
        assert_eq!(relative_min_generators(&s3, &FiniteGroup::trivial(3), &l).unwrap().count, 2);
    }

    #[test]
    fn gaschutz_examples() {
        let l = Limits::default();
        let s3 = catalog::symmetric(3);
        let a3 = catalog::alternating(3);
        let us = gaschutz_lift(&s3, &a3, &[p(3, &[&[0, 1]]), Permutation::identity(3)], 2, &l).unwrap();
        let lifted = vec![p(3, &[&[0, 1]]).then(&us[0]), us[1].clone()];
        assert!(generates(&s3, &lifted).unwrap());

        let us = gaschutz_lift(&s3, &FiniteGroup::trivial(3), s3.generators(), 2, &l).unwrap();
        assert!(us.iter().all(|u| u.is_identity()));

        let v = catalog::dihedral(4).unwrap();
        let first = FiniteGroup::new(4, vec![p(4, &[&[0, 1]])]).unwrap();
        let us = gaschutz_lift(&v, &first, &[Permutation::identity(4), p(4, &[&[2, 3]])], 2, &l).unwrap();
        assert_eq!(us[0], p(4, &[&[0, 1]]));
    }

    #[test]
    fn graph_witness_on_s3() {
        let l = Limits::default();
        let s3 = catalog::symmetric(3);
        let series = chief_series(&s3, &l).unwrap();
        let r = find_graph_subgroup(&s3, &series, 3, &l).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.witness.len(), 3);
        assert_eq!(r.subgroup().order(), 6);
    }

    #[test]
    fn graph_witness_on_cyclic() {
        let l = Limits::default();
        let c12 = catalog::cyclic(12);
        let series = chief_series(&c12, &l).unwrap();
        let r = find_graph_subgroup(&c12, &series, 3, &l).unwrap();
        assert!(r.witness[1].is_identity() && r.witness[2].is_identity());
        assert_eq!(r.subgroup().order(), 12);
    }

    #[test]
    fn graph_witness_on_s5() {
        let l = Limits::default();
        let s5 = catalog::symmetric(5);
        let series =
            NormalSeries::new(&s5, vec![s5.clone(), catalog::alternating(5), FiniteGroup::trivial(5)]).unwrap();
        let r = find_graph_subgroup(&s5, &series, 3, &l).unwrap();
        assert!(r.all_pass());
        let h = r.subgroup();
        let gamma = crate::invariants::prime_graph(&h, &l).unwrap();
        assert_eq!(gamma, crate::invariants::prime_graph(&s5, &l).unwrap());
        assert!(h.generators().iter().any(|x| !catalog::alternating(5).has(x)));
    }

    #[test]
    fn index_pair_on_s3() {
        let l = Limits::default();
        let s3 = catalog::symmetric(3);
        let one = FiniteGroup::trivial(3);
        let series = chief_series(&s3, &l).unwrap();
        let pair = find_index_pair(&s3, &series, &one, &one, &l).unwrap();
        assert!(pair.report.all_pass());
        assert_eq!(pair.report.subgroup().order(), 6);
        let single = find_index_witness(&s3, &series, &one, &one, 1, &l);
        assert!(matches!(single, Err(Error::NoWitness(_))));
    }

    #[test]
    fn index_pair_with_c_whole() {
        let l = Limits::default();
        let s4 = catalog::symmetric(4);
        let series = chief_series(&s4, &l).unwrap();
        let pair = find_index_pair(&s4, &series, &FiniteGroup::trivial(4), &s4, &l).unwrap();
        assert!(pair.a.is_identity() && pair.b.is_identity());
        assert!(pair.report.checks.iter().all(|c| c.expected == Observation::Primes(BTreeSet::new())));
    }

    #[test]
    fn css_examples() {
        let l = Limits::default();
        let s3 = catalog::symmetric(3);
        let one = FiniteGroup::trivial(3);
        assert!(verify_css(&s3, &one, &one, &l).unwrap().holds);
        let s4 = catalog::symmetric(4);
        let p2 = crate::perm_core::sylow_subgroup(&s4, 2, &l).unwrap();
        assert!(matches!(verify_css(&s4, &FiniteGroup::trivial(4), &p2, &l), Err(Error::Precondition(_))));
        let g = direct_product(&s3, &catalog::cyclic(5));
        let one = FiniteGroup::trivial(g.degree());
        let v = verify_css(&g, &one, &one, &l).unwrap();
        assert!(v.holds);
        assert_eq!(v.index_primes, BTreeSet::from([2, 3, 5]));
    }
}
