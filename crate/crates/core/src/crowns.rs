//! Monolithic groups and their crown-based powers.
//!
//! For a monolithic `L` with socle `A`, the crown-based power `L_k` is the
//! subgroup of `L^k` of tuples whose coordinates agree modulo `A`.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::arith::{exact_log, prime_divisors, prime_power_base};
use crate::generation::{min_generators, relative_min_generators};
use crate::perm_core::{
    self, is_isomorphic, minimal_normal_subgroups, quotient, CayleyTable, Elt, FiniteGroup, GroupHom, IndexSubgroup,
    Permutation,
};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone)]
pub struct MonolithicStructure {
    pub group: FiniteGroup,
    pub socle: FiniteGroup,
    pub socle_abelian: bool,
    pub complement: Option<FiniteGroup>,
}

impl MonolithicStructure {
    /// `|L : A|`.
    pub fn top_order(&self) -> u64 {
        self.group.order() / self.socle.order()
    }
}

/// `Some` iff `L` has exactly one minimal normal subgroup.
pub fn monolithic_structure(l: &FiniteGroup, limits: &Limits) -> Result<Option<MonolithicStructure>> {
    let mins = minimal_normal_subgroups(l, limits)?;
    if mins.len() != 1 {
        return Ok(None);
    }
    let socle = mins.into_iter().next().expect("one minimal normal subgroup");
    let socle_abelian = socle.is_abelian();
    let complement = if socle_abelian { complements(l, &socle, limits)?.into_iter().next() } else { None };
    Ok(Some(MonolithicStructure { group: l.clone(), socle, socle_abelian, complement }))
}

/// Elements of `L` generating `L` modulo `a`, chosen greedily from the table generators.
fn top_generators(t: &CayleyTable, a: &IndexSubgroup) -> Vec<Elt> {
    let mut h = a.clone();
    let mut out = Vec::new();
    for &g in t.gens() {
        if !h.contains(g) {
            out.push(g);
            h = t.extend(&h, &[g]);
        }
    }
    out
}

fn complements_in(t: &CayleyTable, a: &IndexSubgroup) -> Vec<IndexSubgroup> {
    let tops = top_generators(t, a);
    let target = t.len() / a.order();
    let a_elems: Vec<Elt> = a.iter().collect();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut out = Vec::new();
    let mut choice = vec![0usize; tops.len()];
    loop {
        let lifted: Vec<Elt> = tops.iter().zip(&choice).map(|(&g, &i)| t.mul(g, a_elems[i])).collect();
        let h = t.closure(&lifted);
        if h.order() == target && seen.insert(h.members().clone()) {
            out.push(h);
        }
        // Odometer over A^r.
        let mut pos = tops.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < a_elems.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// All complements of the abelian normal subgroup `A` in `L`.
pub fn complements(l: &FiniteGroup, a: &FiniteGroup, limits: &Limits) -> Result<Vec<FiniteGroup>> {
    if !perm_core::is_normal(l, a)? {
        return Err(Error::NotNormal);
    }
    if !a.is_abelian() {
        return Err(Error::Precondition("complement enumeration needs an abelian normal subgroup".into()));
    }
    let t = l.table(limits)?;
    let am = t.locate(a)?;
    Ok(complements_in(&t, &am).iter().map(|h| t.to_group(h)).collect())
}

#[derive(Debug, Clone)]
pub struct CrownPower {
    pub base: MonolithicStructure,
    pub k: usize,
    pub group: FiniteGroup,
    /// The `k` coordinate copies of `A`.
    pub socle_factors: Vec<FiniteGroup>,
    /// `l ↦ (l, …, l)`.
    pub diagonal: GroupHom,
}

impl CrownPower {
    /// `A^k`, the product of the socle factors.
    pub fn socle_product(&self) -> FiniteGroup {
        let gens = self.socle_factors.iter().flat_map(|f| f.generators().iter().cloned()).collect();
        FiniteGroup::new(self.group.degree(), gens).expect("factors share the degree")
    }

    /// Coordinate `i` of an element, as an element of `L`.
    pub fn coordinate(&self, x: &Permutation, i: usize) -> Permutation {
        let deg = self.base.group.degree();
        x.restricted(i * deg, deg)
    }
}

fn diagonal_element(l: &Permutation, k: usize) -> Permutation {
    let deg = l.degree();
    let total = deg * k;
    (0..k).fold(Permutation::identity(total), |acc, i| acc.then(&l.shifted(i * deg, total)))
}

/// Builds `L_k` on `k` disjoint copies of the points of `L`.
pub fn crown_power(m: &MonolithicStructure, k: usize, limits: &Limits) -> Result<CrownPower> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if m.socle_abelian && m.complement.is_none() {
        return Err(Error::Precondition("abelian socle without a complement".into()));
    }
    let deg = m.group.degree();
    let total = deg * k;
    let expected =
        (0..k).try_fold(m.top_order(), |acc, _| acc.checked_mul(m.socle.order())).ok_or(Error::OrderOverflow)?;
    let diag_images: Vec<Permutation> = m.group.generators().iter().map(|g| diagonal_element(g, k)).collect();
    let socle_factors: Vec<FiniteGroup> = (0..k)
        .map(|i| {
            let gens = m.socle.generators().iter().map(|a| a.shifted(i * deg, total)).collect();
            FiniteGroup::new(total, gens)
        })
        .collect::<Result<_>>()?;
    let mut gens = diag_images.clone();
    for f in &socle_factors {
        gens.extend(f.generators().iter().cloned());
    }
    let group = FiniteGroup::new(total, gens)?;
    if group.order() != expected {
        return Err(Error::InvariantViolation(format!("crown power has order {}, expected {expected}", group.order())));
    }
    let diagonal = GroupHom::new(&m.group, &group, diag_images, limits)?;
    Ok(CrownPower { base: m.clone(), k, group, socle_factors, diagonal })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrownParams {
    pub q: u64,
    pub r: u32,
    pub s: u32,
    pub theta: u32,
}

/// Coordinates of every element of an elementary abelian subgroup over a basis.
struct Coordinates {
    basis: Vec<Elt>,
    p: u64,
    coords: Vec<Option<Vec<u64>>>,
}

impl Coordinates {
    fn new(t: &CayleyTable, a: &IndexSubgroup, basis: Vec<Elt>, p: u64) -> Self {
        let mut coords = vec![None; t.len()];
        let r = basis.len();
        let mut v = vec![0u64; r];
        loop {
            coords[Self::eval_in(t, &basis, &v) as usize] = Some(v.clone());
            let mut pos = r;
            loop {
                if pos == 0 {
                    debug_assert_eq!(coords.iter().filter(|c| c.is_some()).count(), a.order());
                    return Coordinates { basis, p, coords };
                }
                pos -= 1;
                v[pos] += 1;
                if v[pos] < p {
                    break;
                }
                v[pos] = 0;
            }
        }
    }

    fn eval_in(t: &CayleyTable, images: &[Elt], v: &[u64]) -> Elt {
        images.iter().zip(v).fold(t.identity(), |acc, (&b, &c)| t.mul(acc, t.pow(b, c)))
    }
}

fn params_in(t: &CayleyTable, a: &IndexSubgroup, comps: &[IndexSubgroup]) -> Result<CrownParams> {
    let order = a.order() as u64;
    let p = prime_power_base(order).ok_or_else(|| Error::InvariantViolation("socle is not a p-group".into()))?;
    let gens = t.gens().to_vec();
    // A is irreducible, so the orbit of any non-trivial v spans it.
    let v = a.iter().find(|&x| x != t.identity()).expect("non-trivial socle");
    let mut orbit = vec![(v, t.identity())];
    let mut seen = FixedBitSet::with_capacity(t.len());
    seen.insert(v as usize);
    let mut head = 0;
    while head < orbit.len() {
        let (x, word) = orbit[head];
        head += 1;
        for &g in &gens {
            let y = t.conj(x, g);
            if !seen.put(y as usize) {
                orbit.push((y, t.mul(word, g)));
            }
        }
    }
    let mut basis: Vec<(Elt, Elt)> = Vec::new();
    let mut span = t.trivial();
    for &(x, w) in &orbit {
        if !span.contains(x) {
            span = t.extend(&span, &[x]);
            basis.push((x, w));
        }
    }
    if span.order() != a.order() {
        return Err(Error::InvariantViolation("socle is not generated by one orbit".into()));
    }
    let coords = Coordinates::new(t, a, basis.iter().map(|b| b.0).collect(), p);
    let mut q = 0u64;
    for w in a.iter() {
        // φ(v) = w forces φ(v^h) = w^h on the basis.
        let images: Vec<Elt> = basis.iter().map(|&(_, h)| t.conj(w, h)).collect();
        let phi = |x: Elt| Coordinates::eval_in(t, &images, coords.coords[x as usize].as_ref().expect("in A"));
        let commutes =
            coords.basis.iter().zip(&images).all(|(&b, &fb)| gens.iter().all(|&g| phi(t.conj(b, g)) == t.conj(fb, g)));
        if commutes {
            q += 1;
        }
    }
    debug_assert!(coords.p == p);
    let r = exact_log(order, q)
        .ok_or_else(|| Error::InvariantViolation(format!("|A| = {order} is not a power of q = {q}")))?;

    let classes = a_conjugacy_classes(t, a, comps);
    let s = exact_log(classes as u64, q)
        .ok_or_else(|| Error::InvariantViolation(format!("{classes} complement classes is not a power of q = {q}")))?;
    let central = a.gens().iter().all(|&x| gens.iter().all(|&g| t.conj(x, g) == x));
    Ok(CrownParams { q, r, s, theta: u32::from(!central) })
}

fn a_conjugacy_classes(t: &CayleyTable, a: &IndexSubgroup, comps: &[IndexSubgroup]) -> usize {
    let mut assigned: HashSet<FixedBitSet> = HashSet::new();
    let mut classes = 0;
    for c in comps {
        if assigned.contains(c.members()) {
            continue;
        }
        classes += 1;
        for x in a.iter() {
            let mut m = FixedBitSet::with_capacity(t.len());
            for y in c.iter() {
                m.insert(t.conj(y, x) as usize);
            }
            assigned.insert(m);
        }
    }
    classes
}

/// `(q, r, s, θ)` for an abelian complemented socle.
pub fn crown_params(m: &MonolithicStructure, limits: &Limits) -> Result<CrownParams> {
    if !m.socle_abelian {
        return Err(Error::Unsupported("parameters need an abelian socle".into()));
    }
    if m.complement.is_none() {
        return Err(Error::Precondition("socle has no complement".into()));
    }
    if m.socle.order() > limits.socle_parameter_cap {
        return Err(Error::cap("socle order for crown parameters", limits.socle_parameter_cap, m.socle.order()));
    }
    let t = m.group.table(limits)?;
    let a = t.locate(&m.socle)?;
    params_in(&t, &a, &complements_in(&t, &a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Prediction {
    Exact(usize),
    AtMost(usize),
}

fn is_simple(g: &FiniteGroup, limits: &Limits) -> Result<bool> {
    let mins = minimal_normal_subgroups(g, limits)?;
    Ok(mins.len() == 1 && mins[0].same_as(g))
}

fn top_quotient_rank(m: &MonolithicStructure, limits: &Limits) -> Result<usize> {
    let (top, _) = quotient(&m.group, &m.socle, limits)?;
    Ok(min_generators(&top, limits)?.count)
}

/// The value of `d(L_k)` given by the generation formulas, or the bound 3 for
/// almost simple `L` with `k = 2`.
pub fn predicted_d(m: &MonolithicStructure, k: usize, limits: &Limits) -> Result<Prediction> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let d_top = top_quotient_rank(m, limits)?;
    if k == 1 {
        if m.group.generators().len() <= 1 || is_cyclic(&m.group, limits)? {
            return Err(Error::Unsupported("the k = 1 formula is stated for non-cyclic L".into()));
        }
        return Ok(Prediction::Exact(d_top.max(2)));
    }
    if m.socle_abelian {
        let p = crown_params(m, limits)?;
        let rounds = (k as u32 + p.s).div_ceil(p.r) as usize;
        return Ok(Prediction::Exact(d_top.max(p.theta as usize + rounds)));
    }
    if k == 2 && is_simple(&m.socle, limits)? {
        return Ok(Prediction::AtMost(3));
    }
    Err(Error::Unsupported(format!("no formula for a non-abelian socle with k = {k}")))
}

fn is_cyclic(g: &FiniteGroup, limits: &Limits) -> Result<bool> {
    if g.is_trivial() {
        return Ok(true);
    }
    Ok(g.elements(limits)?.iter().any(|x| x.order() == g.order()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DFormulaCheck {
    pub predicted: Prediction,
    pub brute_force: usize,
    pub matches: bool,
}

/// Compares [`predicted_d`] with an exhaustive computation of `d(L_k)`.
pub fn verify_d_formula(m: &MonolithicStructure, k: usize, limits: &Limits) -> Result<DFormulaCheck> {
    let predicted = predicted_d(m, k, limits)?;
    let power = crown_power(m, k, limits)?;
    let brute_force = min_generators(&power.group, limits)?.count;
    let matches = match predicted {
        Prediction::Exact(d) => d == brute_force,
        Prediction::AtMost(d) => brute_force <= d,
    };
    Ok(DFormulaCheck { predicted, brute_force, matches })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DichotomyCheck {
    pub normal_subgroups: usize,
    pub violations: usize,
    pub holds: bool,
}

/// Every normal subgroup of `L_k` contains the socle or is contained in it.
pub fn verify_normal_dichotomy(m: &MonolithicStructure, k: usize, limits: &Limits) -> Result<DichotomyCheck> {
    let power = crown_power(m, k, limits)?;
    if power.group.order() > limits.normal_enumeration_cap {
        return Err(Error::cap(
            "crown power order for normal enumeration",
            limits.normal_enumeration_cap,
            power.group.order(),
        ));
    }
    let t = power.group.table(limits)?;
    let soc = perm_core::socle_in(&t);
    let normals = perm_core::normal_subgroups_in(&t);
    let violations = normals.iter().filter(|n| !soc.is_subgroup_of(n) && !n.is_subgroup_of(&soc)).count();
    Ok(DichotomyCheck { normal_subgroups: normals.len(), violations, holds: violations == 0 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelativeBound {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

/// `d_Y(L) ≤ max{2, d_{AY}(L)}`, or with `t` given,
/// `d_{diag(Y)}(L_t) ≤ max{2, d_{YA}(L)}` for a non-abelian socle and `t ≤ |π(A)| + 1`.
pub fn verify_relative_bound(
    m: &MonolithicStructure,
    y: &FiniteGroup,
    t: Option<usize>,
    limits: &Limits,
) -> Result<RelativeBound> {
    if !y.is_subgroup_of(&m.group) {
        return Err(Error::NotASubgroup("Y is not contained in L".into()));
    }
    let mut ay_gens = y.generators().to_vec();
    ay_gens.extend(m.socle.generators().iter().cloned());
    let ay = FiniteGroup::new(m.group.degree(), ay_gens)?;
    let rhs = relative_min_generators(&m.group, &ay, limits)?.count.max(2);
    let lhs = match t {
        None => relative_min_generators(&m.group, y, limits)?.count,
        Some(t) => {
            if m.socle_abelian {
                return Err(Error::Precondition("the diagonal bound needs a non-abelian socle".into()));
            }
            let bound = prime_divisors(m.socle.order()).len() + 1;
            if t == 0 || t > bound {
                return Err(Error::Precondition(format!("t = {t} must lie in 1..={bound}")));
            }
            let power = crown_power(m, t, limits)?;
            let diag_y = power.diagonal.image_of(y)?;
            relative_min_generators(&power.group, &diag_y, limits)?.count
        }
    };
    Ok(RelativeBound { lhs, rhs, holds: lhs <= rhs })
}

/// An isomorphism `G → L_k` when one exists.
pub fn is_crown_power_of(
    g: &FiniteGroup,
    m: &MonolithicStructure,
    k: usize,
    limits: &Limits,
) -> Result<Option<GroupHom>> {
    let expected =
        (0..k).try_fold(m.top_order(), |acc, _| acc.checked_mul(m.socle.order())).ok_or(Error::OrderOverflow)?;
    if g.order() != expected {
        return Err(Error::Precondition(format!("|G| = {} but |L_k| = {expected}", g.order())));
    }
    let power = crown_power(m, k, limits)?;
    is_isomorphic(g, &power.group, limits)
}
