//! Quotient towers along normal chains, with level-by-level witness searches.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{p_part, prime_divisors, prime_power_base, Integer};
use crate::generation::{
    by_word_length, find_graph_subgroup, find_index_pair, find_index_witness, gaschutz_in, min_generators,
    tuples_of_length, LevelCheck, Observation,
};
use crate::invariants::{exponent, graph_union, prime_graph, sn_lcm, PrimeGraph, SupernaturalNumber};
use crate::limits::Budget;
use crate::perm_core::{
    frattini, is_solvable, normal_hall_in, quotient, structure_flags, CayleyTable, Elt, FiniteGroup, GroupHom,
    IndexSubgroup, NormalSeries, Permutation,
};
use crate::{Error, Limits, Result};

/// `Q_i = G/M_i` for a descending chain `G = M₀ ≥ M₁ ≥ ⋯`, coarsest level first.
#[derive(Debug, Clone)]
pub struct QuotientTower {
    source: FiniteGroup,
    kernels: Vec<FiniteGroup>,
    levels: Vec<FiniteGroup>,
    maps: Vec<GroupHom>,
    projections: Vec<GroupHom>,
}

impl QuotientTower {
    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn levels(&self) -> &[FiniteGroup] {
        &self.levels
    }

    /// `π_i : Q_{i+1} → Q_i`.
    pub fn maps(&self) -> &[GroupHom] {
        &self.maps
    }

    /// `G → Q_i`.
    pub fn projections(&self) -> &[GroupHom] {
        &self.projections
    }

    /// The chain terms `M_i`.
    pub fn kernels(&self) -> &[FiniteGroup] {
        &self.kernels
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level_orders(&self) -> Vec<u64> {
        self.levels.iter().map(|q| q.order()).collect()
    }

    /// The prefix with levels `0..=depth`.
    pub fn truncated(&self, depth: usize) -> QuotientTower {
        let depth = depth.min(self.depth());
        QuotientTower {
            source: self.source.clone(),
            kernels: self.kernels[..=depth].to_vec(),
            levels: self.levels[..=depth].to_vec(),
            maps: self.maps[..depth].to_vec(),
            projections: self.projections[..=depth].to_vec(),
        }
    }

    /// The chain closed off by the trivial group, as a normal series of the source.
    fn series(&self) -> Result<NormalSeries> {
        let mut terms = self.kernels.clone();
        if !terms.last().expect("non-empty").is_trivial() {
            terms.push(FiniteGroup::trivial(self.source.degree()));
        }
        NormalSeries::new(&self.source, terms)
    }
}

/// `G → G/M`; the source itself stands in for `G/1`.
fn projection(g: &FiniteGroup, m: &FiniteGroup, limits: &Limits) -> Result<(FiniteGroup, GroupHom)> {
    if m.is_trivial() {
        Ok((g.clone(), GroupHom::identity(g, limits)?))
    } else {
        quotient(g, m, limits)
    }
}

/// Builds the tower of quotients along `chain`, verifying every connecting map.
pub fn tower_from_chain(g: &FiniteGroup, chain: &NormalSeries, limits: &Limits) -> Result<QuotientTower> {
    if !chain.ambient().same_as(g) {
        return Err(Error::Precondition("chain is not a series of G".into()));
    }
    let mut levels = Vec::new();
    let mut projections = Vec::new();
    for m in chain.terms() {
        let (q, p) = projection(g, m, limits)?;
        levels.push(q);
        projections.push(p);
    }
    let mut maps = Vec::new();
    for i in 0..levels.len() - 1 {
        // Level generators are the images of the source generators, in order.
        let images = projections[i].generator_images().to_vec();
        let map = GroupHom::new(&levels[i + 1], &levels[i], images, limits)?;
        if !map.is_epimorphism() {
            return Err(Error::InvariantViolation(format!("connecting map {i} is not surjective")));
        }
        for s in g.generators() {
            if projections[i].apply(s)? != map.apply(&projections[i + 1].apply(s)?)? {
                return Err(Error::InvariantViolation(format!("projections disagree at level {i}")));
            }
        }
        maps.push(map);
    }
    Ok(QuotientTower { source: g.clone(), kernels: chain.terms().to_vec(), levels, maps, projections })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerInvariants {
    pub graph: PrimeGraph,
    pub exponent: SupernaturalNumber,
    pub order: SupernaturalNumber,
}

/// Union of level graphs and lcms of level exponents and orders.
pub fn tower_invariants(t: &QuotientTower, limits: &Limits) -> Result<TowerInvariants> {
    let mut graphs = Vec::new();
    let mut exp = SupernaturalNumber::one();
    let mut order = SupernaturalNumber::one();
    for q in &t.levels {
        graphs.push(prime_graph(q, limits)?);
        exp = sn_lcm(&exp, &SupernaturalNumber::from_natural(exponent(q, limits)?));
        order = sn_lcm(&order, &SupernaturalNumber::from_natural(q.order()));
    }
    Ok(TowerInvariants { graph: graph_union(&graphs), exponent: exp, order })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TowerTarget {
    PrimeGraph,
    IndexPrimes,
    Exponent,
}

#[derive(Debug, Clone)]
pub struct TowerWitness {
    pub target: TowerTarget,
    /// Elements of the source.
    pub tuple: Vec<Permutation>,
    pub per_level: Vec<LevelCheck>,
}

impl TowerWitness {
    pub fn all_pass(&self) -> bool {
        self.per_level.iter().all(|c| c.pass)
    }
}

fn check_subgroups(g: &FiniteGroup, x: &FiniteGroup, c: &FiniteGroup) -> Result<()> {
    if !x.is_subgroup_of(c) || !c.is_subgroup_of(g) {
        return Err(Error::NotASubgroup("expected X ≤ C ≤ G".into()));
    }
    Ok(())
}

/// Re-checks `tuple` at every level of `t` through the projections.
///
/// For `IndexPrimes` a level passes when `π(|Q : C̄|) ⊆ π(|K̄ : C̄ ∩ K̄|)` with `K = ⟨X, tuple⟩`.
pub fn verify_tower_witness(
    t: &QuotientTower,
    target: TowerTarget,
    tuple: &[Permutation],
    x: Option<&FiniteGroup>,
    c: Option<&FiniteGroup>,
    limits: &Limits,
) -> Result<Vec<LevelCheck>> {
    let trivial = FiniteGroup::trivial(t.source.degree());
    let x = x.unwrap_or(&trivial);
    let c = c.unwrap_or(&trivial);
    check_subgroups(&t.source, x, c)?;
    let mut checks = Vec::with_capacity(t.levels.len());
    for (level, (q, proj)) in t.levels.iter().zip(&t.projections).enumerate() {
        let images = tuple.iter().map(|y| proj.apply(y)).collect::<Result<Vec<_>>>()?;
        let check = match target {
            TowerTarget::PrimeGraph => {
                let expected = prime_graph(q, limits)?;
                let observed = prime_graph(&q.subgroup(images)?, limits)?;
                LevelCheck {
                    level,
                    pass: expected == observed,
                    expected: Observation::Graph(expected),
                    observed: Observation::Graph(observed),
                }
            }
            TowerTarget::Exponent => {
                let expected = exponent(q, limits)?;
                let observed = exponent(&q.subgroup(images)?, limits)?;
                LevelCheck {
                    level,
                    pass: expected == observed,
                    expected: Observation::Natural(expected),
                    observed: Observation::Natural(observed),
                }
            }
            TowerTarget::IndexPrimes => {
                let tq = q.table(limits)?;
                let cbar = tq.locate(&proj.image_of(c)?)?;
                let mut gens = proj.image_of(x)?.generators().to_vec();
                gens.extend(images);
                let kbar = tq.locate(&q.subgroup(gens)?)?;
                let expected = prime_divisors((tq.len() / cbar.order()) as u64);
                let observed = prime_divisors((kbar.order() / tq.intersection(&cbar, &kbar).order()) as u64);
                LevelCheck {
                    level,
                    pass: expected.is_subset(&observed),
                    expected: Observation::Primes(expected),
                    observed: Observation::Primes(observed),
                }
            }
        };
        checks.push(check);
    }
    Ok(checks)
}

/// Bits `(level, p)` met by an element whose order modulo `M_i` has full `p`-part `p_part(exp(G/M_i), p)`.
fn exponent_features(t: &CayleyTable, terms: &[IndexSubgroup]) -> (Vec<u128>, u128) {
    let mut wanted: Vec<(usize, u64)> = Vec::new();
    let orders_mod: Vec<Vec<u64>> =
        terms.iter().map(|m| (0..t.len() as Elt).map(|x| t.order_mod(x, m) as u64).collect()).collect();
    let mut exps = Vec::new();
    for (i, orders) in orders_mod.iter().enumerate() {
        let e = orders.iter().fold(1u64, |acc, &o| acc.lcm(&o));
        for p in prime_divisors(e) {
            wanted.push((i, p));
        }
        exps.push(e);
    }
    let mut masks = vec![0u128; t.len()];
    for (bit, &(i, p)) in wanted.iter().enumerate() {
        let need = p_part(exps[i], p);
        for (x, mask) in masks.iter_mut().enumerate() {
            if orders_mod[i][x].is_multiple_of(need) {
                *mask |= 1 << bit;
            }
        }
    }
    let full = if wanted.len() == 128 { u128::MAX } else { (1u128 << wanted.len()) - 1 };
    (masks, full)
}

/// A pair (or single element) with `exp(HM_i/M_i) = exp(G/M_i)` at every level.
fn exponent_search(g: &FiniteGroup, series: &NormalSeries, d: usize, limits: &Limits) -> Result<Vec<Permutation>> {
    let t = g.table(limits)?;
    let terms = series.terms().iter().map(|m| t.locate(m)).collect::<Result<Vec<_>>>()?;
    let (masks, full) = exponent_features(&t, &terms);
    if full.count_ones() as usize != masks.iter().fold(0u128, |a, &m| a | m).count_ones() as usize {
        return Err(Error::InvariantViolation("exponent features are not realised by G".into()));
    }
    let covers = |h: &IndexSubgroup| h.iter().fold(0u128, |a, x| a | masks[x as usize]) == full;
    let mut budget = Budget::new("exponent witness search", limits.search_budget);
    let reps = t.classes().reps.clone();
    for &a in &reps {
        budget.spend(1)?;
        if covers(&t.closure(&[a])) {
            let mut out = vec![t.element(a).clone()];
            out.resize(d, g.identity());
            return Ok(out);
        }
    }
    if d >= 2 {
        for &a in &reps {
            let ha = t.closure(&[a]);
            for b in t.coset_reps(&ha) {
                if ha.contains(b) {
                    continue;
                }
                budget.spend(1)?;
                if covers(&t.extend(&ha, &[b])) {
                    let mut out = t.perms(&[a, b]);
                    out.resize(d, g.identity());
                    return Ok(out);
                }
            }
        }
    }
    Err(Error::NoWitness(format!("no {d}-generated subgroup attains the exponent at every level")))
}

/// A `d`-tuple of the source whose images meet `target` at every level simultaneously.
///
/// `X` and `C` apply to `IndexPrimes` only. Exhaustion is an invariant violation
/// for prime graphs with `d ≥ 3` and for index primes with `d = 2` on a chief chain.
pub fn find_tower_witness(
    t: &QuotientTower,
    d: usize,
    target: TowerTarget,
    x: Option<&FiniteGroup>,
    c: Option<&FiniteGroup>,
    limits: &Limits,
) -> Result<TowerWitness> {
    if target != TowerTarget::IndexPrimes && (x.is_some() || c.is_some()) {
        return Err(Error::Precondition("X and C apply to the index-primes target only".into()));
    }
    if t.source.is_trivial() {
        let per_level = verify_tower_witness(t, target, &[], x, c, limits)?;
        return Ok(TowerWitness { target, tuple: Vec::new(), per_level });
    }
    if d == 0 {
        return Err(Error::Precondition("at least one generator is required".into()));
    }
    let series = t.series()?;
    let g = &t.source;
    let tuple = match target {
        TowerTarget::PrimeGraph => find_graph_subgroup(g, &series, d, limits)?.witness,
        TowerTarget::IndexPrimes => {
            let trivial = FiniteGroup::trivial(g.degree());
            let xg = x.unwrap_or(&trivial);
            let cg = c.unwrap_or(&trivial);
            if d == 2 {
                let pair = find_index_pair(g, &series, xg, cg, limits)?;
                vec![pair.a, pair.b]
            } else {
                find_index_witness(g, &series, xg, cg, d, limits)?.elements
            }
        }
        TowerTarget::Exponent => {
            if d > 2 {
                return Err(Error::Unsupported("exponent witnesses are searched with d ≤ 2".into()));
            }
            exponent_search(g, &series, d, limits)?
        }
    };
    let per_level = verify_tower_witness(t, target, &tuple, x, c, limits)?;
    if per_level.iter().any(|l| !l.pass) {
        return Err(Error::InvariantViolation("tower witness fails a level on re-verification".into()));
    }
    Ok(TowerWitness { target, tuple, per_level })
}

/// `G = M₀ > M₁ > ⋯ > 1` with `M_i/M_{i+1}` a Sylow `p_i`-subgroup of `G/M_{i+1}` and `p₀ < p₁ < ⋯`.
#[derive(Debug, Clone)]
pub struct SylowTowerChain {
    pub group: FiniteGroup,
    pub terms: Vec<FiniteGroup>,
    pub primes: Vec<u64>,
}

impl SylowTowerChain {
    pub fn series(&self) -> Result<NormalSeries> {
        NormalSeries::new(&self.group, self.terms.clone())
    }

    /// `|M_i / M_{i+1}|` for each `i`.
    pub fn factor_orders(&self) -> Vec<u64> {
        self.terms.windows(2).map(|w| w[0].order() / w[1].order()).collect()
    }
}

/// Splits off normal Hall subgroups for ever larger primes, smallest prime first.
pub fn sylow_tower(g: &FiniteGroup, limits: &Limits) -> Result<SylowTowerChain> {
    if !structure_flags(g, limits)?.supersolvable {
        return Err(Error::Precondition("G is not supersolvable".into()));
    }
    let t = g.table(limits)?;
    let n = g.order();
    let primes: Vec<u64> = prime_divisors(n).into_iter().collect();
    let mut terms = vec![t.whole()];
    for (i, &p) in primes.iter().enumerate() {
        let above: BTreeSet<u64> = primes[i + 1..].iter().copied().collect();
        let next = normal_hall_in(&t, &above)
            .ok_or_else(|| Error::InvariantViolation(format!("no normal Hall subgroup for primes above {p}")))?;
        let prev = terms.last().expect("non-empty");
        let factor = (prev.order() / next.order()) as u64;
        let ok = next.is_subgroup_of(prev)
            && factor == p_part(n, p)
            && !(n / prev.order() as u64).is_multiple_of(p)
            && !(next.order() as u64).is_multiple_of(p);
        if !ok {
            return Err(Error::InvariantViolation(format!("Sylow tower condition fails at prime {p}")));
        }
        terms.push(next);
    }
    Ok(SylowTowerChain { group: g.clone(), terms: terms.iter().map(|m| t.to_group(m)).collect(), primes })
}

#[derive(Debug, Clone)]
pub struct ExponentPair {
    pub c1: Permutation,
    pub c2: Permutation,
    pub exponent: u64,
    /// Per Sylow-tower level: `exp(H_i)` against `exp(G/M_i)`.
    pub levels: Vec<LevelCheck>,
}

fn normal_closure_under(t: &CayleyTable, g: Elt, h: &IndexSubgroup) -> IndexSubgroup {
    let mut n = t.closure(&[g]);
    loop {
        let fresh: Vec<Elt> = n
            .gens()
            .iter()
            .flat_map(|&a| h.gens().iter().map(move |&s| (a, s)))
            .map(|(a, s)| t.conj(a, s))
            .filter(|&y| !n.contains(y))
            .collect();
        if fresh.is_empty() {
            return n;
        }
        n = t.extend(&n, &fresh);
    }
}

fn exponent_in(t: &CayleyTable, h: &IndexSubgroup) -> u64 {
    h.iter().fold(1u64, |acc, x| acc.lcm(&(t.order(x) as u64)))
}

/// A pair generating a subgroup of full exponent, built level by level along the Sylow tower.
///
/// At each level the current pair is perturbed inside `M_i` to generate a `p_i'`-complement
/// `H̃` modulo `M_{i+1}`, a maximal-order element `g` of the Sylow factor is adjoined
/// through `⟨g⟩^H̃ H̃`, and a Gaschütz search restores two generators.
pub fn exponent_witness_2gen(g: &FiniteGroup, limits: &Limits) -> Result<ExponentPair> {
    let chain = sylow_tower(g, limits)?;
    let tower = tower_from_chain(g, &chain.series()?, limits)?;
    let mut x = g.identity();
    let mut y = g.identity();
    let mut h_order = 1usize;
    let mut budget = Budget::new("exponent pair construction", limits.search_budget);
    let mut levels =
        vec![LevelCheck { level: 0, expected: Observation::Natural(1), observed: Observation::Natural(1), pass: true }];
    for i in 0..chain.primes.len() {
        let q = &tower.levels[i + 1];
        let proj = &tower.projections[i + 1];
        let tq = q.table(limits)?;
        let factor = tq.locate(&proj.image_of(&chain.terms[i])?)?;
        let xq = tq.index_of(&proj.apply(&x)?).expect("projection lands in the level");
        let yq = tq.index_of(&proj.apply(&y)?).expect("projection lands in the level");

        // A complement to the Sylow factor over the current pair.
        let pool = by_word_length(&tq, &factor);
        let max_len = pool.last().map_or(0, |p| p.0);
        let mut lifted: Option<(Elt, Elt)> = None;
        for total in 0..=2 * max_len {
            let mut visit = |uv: &[Elt]| -> Result<bool> {
                budget.spend(1)?;
                let (a, b) = (tq.mul(xq, uv[0]), tq.mul(yq, uv[1]));
                if tq.closure(&[a, b]).order() == h_order {
                    lifted = Some((a, b));
                    return Ok(true);
                }
                Ok(false)
            };
            if tuples_of_length(&pool, 2, total, &mut Vec::new(), &mut visit)? {
                break;
            }
        }
        let (a, b) = lifted.ok_or_else(|| Error::InvariantViolation(format!("no complement at level {}", i + 1)))?;
        let complement = tq.closure(&[a, b]);

        let top = factor.iter().max_by_key(|&e| (tq.order(e), std::cmp::Reverse(e))).expect("factor is non-empty");
        let n = normal_closure_under(&tq, top, &complement);
        let k = tq.join(&n, &complement);
        let us = gaschutz_in(&tq, &k, &n, &[a, b], &mut budget)?
            .ok_or_else(|| Error::InvariantViolation(format!("no two-element lift at level {}", i + 1)))?;
        let (xn, yn) = (tq.mul(a, us[0]), tq.mul(b, us[1]));

        let expected = exponent_in(&tq, &tq.whole());
        let observed = exponent_in(&tq, &k);
        levels.push(LevelCheck {
            level: i + 1,
            pass: expected == observed,
            expected: Observation::Natural(expected),
            observed: Observation::Natural(observed),
        });
        h_order = k.order();
        x = proj.preimage(tq.element(xn), limits)?.expect("projection is onto");
        y = proj.preimage(tq.element(yn), limits)?.expect("projection is onto");
    }
    let want = exponent(g, limits)?;
    let got = exponent(&g.subgroup(vec![x.clone(), y.clone()])?, limits)?;
    if got != want {
        return Err(Error::InvariantViolation(format!("pair reaches exponent {got}, expected {want}")));
    }
    Ok(ExponentPair { c1: x, c2: y, exponent: got, levels })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemidirectReport {
    pub prime: u64,
    pub normal_order: u64,
    pub frattini_order: u64,
    pub d: usize,
    pub holds: bool,
}

fn hypothesis(ok: bool, name: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("hypothesis fails: {name}")))
    }
}

/// Checks each hypothesis on `G = P ⋊ H` with `P = ⟨g⟩^H`, then computes `d(G)`.
pub fn verify_semidirect_2gen(
    p: &FiniteGroup,
    h: &FiniteGroup,
    g: &Permutation,
    big: &FiniteGroup,
    limits: &Limits,
) -> Result<SemidirectReport> {
    hypothesis(is_solvable(big)?, "G is solvable")?;
    hypothesis(h.is_subgroup_of(big), "H ≤ G")?;
    hypothesis(min_generators(h, limits)?.count <= 2, "H is 2-generated")?;
    hypothesis(big.contains(g)?, "g ∈ G")?;
    let prime = prime_power_base(g.order()).filter(|_| g.order() > 1);
    hypothesis(prime.is_some(), "g is a non-trivial p-element")?;
    let prime = prime.expect("checked");
    hypothesis(!h.order().is_multiple_of(prime), "p does not divide |H|")?;
    let t = big.table(limits)?;
    let hs = t.locate(h)?;
    let closure = normal_closure_under(&t, t.index_of(g).expect("g ∈ G"), &hs);
    hypothesis(p.is_subgroup_of(big) && t.locate(p)?.same_members(&closure), "P = ⟨g⟩^H")?;
    hypothesis(prime_power_base(p.order()) == Some(prime), "⟨g⟩^H is a p-group")?;
    hypothesis(t.intersection(&closure, &hs).order() == 1, "⟨g⟩^H ∩ H = 1")?;
    hypothesis(p.order() * h.order() == big.order(), "G = ⟨g⟩^H H")?;
    let d = min_generators(big, limits)?.count;
    Ok(SemidirectReport {
        prime,
        normal_order: p.order(),
        frattini_order: frattini(p, limits)?.order(),
        d,
        holds: d <= 2,
    })
}
