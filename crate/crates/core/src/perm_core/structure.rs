//! Normal structure: closures, minimal normal subgroups, chief series,
//! quotients, Sylow and Hall subgroups, the Frattini subgroup.

use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::group::FiniteGroup;
use super::hom::{CosetAction, GroupHom};
use super::perm::Permutation;
use super::table::{CayleyTable, Elt, IndexSubgroup};
use crate::arith::{is_prime, p_part, prime_divisors};
use crate::limits::Budget;
use crate::{Error, Limits, Result};

/// `p` then `q`, with the degree check.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch { expected: p.degree(), found: q.degree() });
    }
    Ok(p.then(q))
}

pub fn element_order(p: &Permutation) -> u64 {
    p.order()
}

pub fn build_group(generators: Vec<Permutation>, degree: usize) -> Result<FiniteGroup> {
    FiniteGroup::new(degree, generators)
}

pub fn contains(g: &FiniteGroup, p: &Permutation) -> Result<bool> {
    g.contains(p)
}

fn require_subgroup(g: &FiniteGroup, h: &FiniteGroup) -> Result<()> {
    if h.degree() != g.degree() {
        return Err(Error::DegreeMismatch { expected: g.degree(), found: h.degree() });
    }
    if !h.is_subgroup_of(g) {
        return Err(Error::NotASubgroup(format!("{h:?} is not contained in {g:?}")));
    }
    Ok(())
}

/// Smallest subgroup containing `s` and closed under conjugation by `g`.
pub fn normal_closure(g: &FiniteGroup, s: &[Permutation]) -> Result<FiniteGroup> {
    for x in s {
        if !g.contains(x)? {
            return Err(Error::NotAMember(x.to_string()));
        }
    }
    let mut gens: Vec<Permutation> = s.iter().filter(|x| !x.is_identity()).cloned().collect();
    let mut h = FiniteGroup::new(g.degree(), gens.clone())?;
    'restart: loop {
        for x in h.generators() {
            for t in g.generators() {
                let c = x.conjugate_by(t);
                if !h.has(&c) {
                    gens.push(c);
                    h = FiniteGroup::new(g.degree(), gens.clone())?;
                    continue 'restart;
                }
            }
        }
        return Ok(h);
    }
}

pub fn is_normal(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    require_subgroup(g, h)?;
    Ok(h.generators().iter().all(|x| g.generators().iter().all(|t| h.has(&x.conjugate_by(t)))))
}

/// Commutator subgroup, by normal closure of generator commutators.
pub fn derived_subgroup(g: &FiniteGroup) -> Result<FiniteGroup> {
    let gens = g.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.inverse().then(&b.inverse()).then(a).then(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

/// Inclusion-minimal members of `{ncl(M, x) : x ∉ M}`, i.e. the normal
/// subgroups `K` of the table's group with `K/M` minimal normal in `G/M`.
pub(crate) fn minimal_normal_over(t: &CayleyTable, m: &IndexSubgroup) -> Vec<IndexSubgroup> {
    let classes = t.classes();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut candidates: Vec<IndexSubgroup> = Vec::new();
    for &x in &classes.reps {
        if m.contains(x) {
            continue;
        }
        let k = t.normal_closure_over(m, &[x]);
        if seen.insert(k.members().clone()) {
            candidates.push(k);
        }
    }
    candidates
        .iter()
        .filter(|k| !candidates.iter().any(|other| other.order() < k.order() && other.is_subgroup_of(k)))
        .cloned()
        .collect()
}

pub fn minimal_normal_subgroups(g: &FiniteGroup, limits: &Limits) -> Result<Vec<FiniteGroup>> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup("minimal normal subgroups"));
    }
    let t = g.table(limits)?;
    Ok(minimal_normal_over(&t, &t.trivial()).iter().map(|k| t.to_group(k)).collect())
}

pub(crate) fn socle_in(t: &CayleyTable) -> IndexSubgroup {
    minimal_normal_over(t, &t.trivial()).iter().fold(t.trivial(), |acc, k| t.join(&acc, k))
}

pub fn socle(g: &FiniteGroup, limits: &Limits) -> Result<FiniteGroup> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup("socle"));
    }
    let t = g.table(limits)?;
    Ok(t.to_group(&socle_in(&t)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    Chief,
    User,
}

/// `G = M₀ ≥ M₁ ≥ ⋯ ≥ M_n = 1`, every term normal in `G`.
#[derive(Debug, Clone)]
pub struct NormalSeries {
    ambient: FiniteGroup,
    terms: Vec<FiniteGroup>,
    kind: SeriesKind,
}

impl NormalSeries {
    /// Validates a user-supplied descending series.
    pub fn new(ambient: &FiniteGroup, terms: Vec<FiniteGroup>) -> Result<Self> {
        NormalSeries::checked(ambient, terms, SeriesKind::User)
    }

    fn checked(ambient: &FiniteGroup, terms: Vec<FiniteGroup>, kind: SeriesKind) -> Result<Self> {
        let (Some(first), Some(last)) = (terms.first(), terms.last()) else {
            return Err(Error::Precondition("a normal series needs at least one term".into()));
        };
        if !first.same_as(ambient) {
            return Err(Error::Precondition("first term of a series must be the ambient group".into()));
        }
        if !last.is_trivial() {
            return Err(Error::Precondition("last term of a series must be trivial".into()));
        }
        for w in terms.windows(2) {
            require_subgroup(&w[0], &w[1])?;
        }
        for term in &terms {
            if !is_normal(ambient, term)? {
                return Err(Error::NotNormal);
            }
        }
        Ok(NormalSeries { ambient: ambient.clone(), terms, kind })
    }

    /// The two-term series `G ≥ 1`.
    pub fn trivial(ambient: &FiniteGroup) -> Self {
        let mut terms = vec![ambient.clone()];
        if !ambient.is_trivial() {
            terms.push(FiniteGroup::trivial(ambient.degree()));
        }
        NormalSeries { ambient: ambient.clone(), terms, kind: SeriesKind::User }
    }

    pub fn ambient(&self) -> &FiniteGroup {
        &self.ambient
    }

    pub fn terms(&self) -> &[FiniteGroup] {
        &self.terms
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    /// Number of factors.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn orders(&self) -> Vec<u64> {
        self.terms.iter().map(|t| t.order()).collect()
    }

    /// The series truncated to its first `len + 1` terms, closed off by the trivial group.
    pub fn truncated(&self, len: usize) -> NormalSeries {
        let mut terms: Vec<FiniteGroup> = self.terms[..=len.min(self.length())].to_vec();
        if !terms.last().expect("non-empty").is_trivial() {
            terms.push(FiniteGroup::trivial(self.ambient.degree()));
        }
        NormalSeries { ambient: self.ambient.clone(), terms, kind: SeriesKind::User }
    }

    /// Checks that every factor is minimal normal in the corresponding quotient.
    pub fn is_chief(&self, limits: &Limits) -> Result<bool> {
        let t = self.ambient.table(limits)?;
        for w in self.terms.windows(2) {
            let upper = t.locate(&w[0])?;
            let lower = t.locate(&w[1])?;
            if upper.order() == lower.order() {
                return Ok(false);
            }
            let minimal = minimal_normal_over(&t, &lower);
            if !minimal.iter().any(|k| k.same_members(&upper)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub(crate) fn chief_series_in(t: &CayleyTable) -> Vec<IndexSubgroup> {
    let mut ascending = vec![t.trivial()];
    loop {
        let m = ascending.last().expect("non-empty");
        if m.order() == t.len() {
            break;
        }
        let next = minimal_normal_over(t, m)
            .into_iter()
            .min_by_key(|k| k.order())
            .expect("a proper normal subgroup has a minimal normal cover");
        ascending.push(next);
    }
    ascending.reverse();
    ascending
}

pub fn chief_series(g: &FiniteGroup, limits: &Limits) -> Result<NormalSeries> {
    let t = g.table(limits)?;
    let terms = chief_series_in(&t).iter().map(|k| t.to_group(k)).collect::<Vec<_>>();
    let mut terms = terms;
    terms[0] = g.clone();
    Ok(NormalSeries { ambient: g.clone(), terms, kind: SeriesKind::Chief })
}

/// All normal subgroups, by joining normal closures of classes.
pub(crate) fn normal_subgroups_in(t: &CayleyTable) -> Vec<IndexSubgroup> {
    let classes = t.classes();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut all: Vec<IndexSubgroup> = Vec::new();
    let triv = t.trivial();
    seen.insert(triv.members().clone());
    all.push(triv);
    let mut basic: Vec<IndexSubgroup> = Vec::new();
    for &x in classes.reps.iter().skip(1) {
        let k = t.normal_closure(&[x]);
        if seen.insert(k.members().clone()) {
            basic.push(k.clone());
            all.push(k);
        }
    }
    let mut frontier: Vec<IndexSubgroup> = basic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &basic {
                if b.is_subgroup_of(a) {
                    continue;
                }
                let j = t.join(a, b);
                if seen.insert(j.members().clone()) {
                    next.push(j.clone());
                    all.push(j);
                }
            }
        }
        frontier = next;
    }
    all.sort_by_key(|k| k.order());
    all
}

pub fn normal_subgroups(g: &FiniteGroup, limits: &Limits) -> Result<Vec<FiniteGroup>> {
    if g.order() > limits.normal_enumeration_cap {
        return Err(Error::cap("order for normal-subgroup enumeration", limits.normal_enumeration_cap, g.order()));
    }
    let t = g.table(limits)?;
    Ok(normal_subgroups_in(&t).iter().map(|k| t.to_group(k)).collect())
}

/// `G/N` as the action of `G` on the cosets of `N`, with the canonical epimorphism.
pub fn quotient(g: &FiniteGroup, n: &FiniteGroup, limits: &Limits) -> Result<(FiniteGroup, GroupHom)> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let index = g.order() / n.order();
    if index > limits.quotient_degree_cap {
        return Err(Error::cap("quotient degree", limits.quotient_degree_cap, index));
    }
    let normal = n.elements(limits)?;
    let probe = CosetAction::new(normal.clone(), vec![g.identity()]);
    let mut reps = vec![g.identity()];
    let mut canon: HashSet<Permutation> = HashSet::new();
    canon.insert(probe.canonical(&g.identity()));
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head].clone();
        head += 1;
        for s in g.generators() {
            let x = r.then(s);
            if canon.insert(probe.canonical(&x)) {
                reps.push(x);
            }
        }
    }
    debug_assert_eq!(reps.len() as u64, index);
    let action = CosetAction::new(normal, reps);
    let images: Vec<Permutation> = g.generators().iter().map(|s| action.act(s)).collect();
    let target = FiniteGroup::new(action.index(), images)?;
    Ok((target.clone(), GroupHom::from_coset_action(g, target, action)))
}

pub(crate) fn sylow_in(t: &CayleyTable, p: u64) -> IndexSubgroup {
    let target = p_part(t.len() as u64, p) as usize;
    let mut sub = t.trivial();
    while sub.order() < target {
        let norm = t.normalizer(&sub);
        let y = norm
            .iter()
            .find(|&y| !sub.contains(y) && sub.contains(t.pow(y, p)))
            .expect("p divides |N(P):P| while P is not Sylow");
        let ord = t.order(y) as u64;
        let y = t.pow(y, ord / p_part(ord, p));
        sub = t.extend(&sub, &[y]);
    }
    sub
}

pub fn sylow_subgroup(g: &FiniteGroup, p: u64, limits: &Limits) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if !g.order().is_multiple_of(p) {
        return Err(Error::Precondition(format!("{p} does not divide |G| = {}", g.order())));
    }
    let t = g.table(limits)?;
    Ok(t.to_group(&sylow_in(&t, p)))
}

pub(crate) fn normal_hall_in(t: &CayleyTable, primes: &BTreeSet<u64>) -> Option<IndexSubgroup> {
    let n = t.len() as u64;
    let mut gens: Vec<Elt> = Vec::new();
    for &q in primes {
        if n.is_multiple_of(q) {
            gens.extend_from_slice(sylow_in(t, q).gens());
        }
    }
    let k = t.normal_closure(&gens);
    let order = k.order() as u64;
    let pi_order = prime_divisors(order).is_subset(primes);
    let pi_prime_index = prime_divisors(n / order).is_disjoint(primes);
    (pi_order && pi_prime_index).then_some(k)
}

/// The normal Hall `π`-subgroup, when it exists.
pub fn normal_hall_subgroup(g: &FiniteGroup, primes: &BTreeSet<u64>, limits: &Limits) -> Result<Option<FiniteGroup>> {
    let t = g.table(limits)?;
    Ok(normal_hall_in(&t, primes).map(|k| t.to_group(&k)))
}

/// Every subgroup, reached by repeatedly joining cyclic subgroups.
pub(crate) fn all_subgroups_in(t: &CayleyTable, budget: &mut Budget) -> Result<Vec<IndexSubgroup>> {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let triv = t.trivial();
    seen.insert(triv.members().clone());
    let mut cyclic: Vec<IndexSubgroup> = Vec::new();
    for x in 1..t.len() as Elt {
        let c = t.closure(&[x]);
        if seen.insert(c.members().clone()) {
            cyclic.push(c);
        }
    }
    let mut all = vec![triv];
    all.extend(cyclic.iter().cloned());
    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for c in &cyclic {
                if c.is_subgroup_of(h) {
                    continue;
                }
                budget.spend(1)?;
                let j = t.join(h, c);
                if seen.insert(j.members().clone()) {
                    next.push(j.clone());
                    all.push(j);
                }
            }
        }
        frontier = next;
    }
    Ok(all)
}

pub(crate) fn maximal_subgroups_in(t: &CayleyTable, budget: &mut Budget) -> Result<Vec<IndexSubgroup>> {
    let all = all_subgroups_in(t, budget)?;
    let proper: Vec<&IndexSubgroup> = all.iter().filter(|h| h.order() < t.len()).collect();
    Ok(proper
        .iter()
        .filter(|h| !proper.iter().any(|k| k.order() > h.order() && h.is_subgroup_of(k)))
        .map(|h| (*h).clone())
        .collect())
}

pub(crate) fn frattini_in(t: &CayleyTable, budget: &mut Budget) -> Result<IndexSubgroup> {
    let maximal = maximal_subgroups_in(t, budget)?;
    if maximal.is_empty() {
        return Ok(t.whole());
    }
    let mut m = t.whole().members().clone();
    for h in &maximal {
        m.intersect_with(h.members());
    }
    Ok(t.from_members(m))
}

/// Intersection of all maximal subgroups.
pub fn frattini(g: &FiniteGroup, limits: &Limits) -> Result<FiniteGroup> {
    if g.order() > limits.frattini_cap {
        return Err(Error::cap("order for Frattini computation", limits.frattini_cap, g.order()));
    }
    let t = g.table(limits)?;
    let mut budget = Budget::new("subgroup lattice enumeration", limits.search_budget);
    Ok(t.to_group(&frattini_in(&t, &mut budget)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub solvable: bool,
    pub supersolvable: bool,
    pub nilpotent: bool,
}

pub fn is_solvable(g: &FiniteGroup) -> Result<bool> {
    let mut d = g.clone();
    loop {
        if d.is_trivial() {
            return Ok(true);
        }
        let next = derived_subgroup(&d)?;
        if next.order() == d.order() {
            return Ok(false);
        }
        d = next;
    }
}

pub fn structure_flags(g: &FiniteGroup, limits: &Limits) -> Result<StructureFlags> {
    let solvable = is_solvable(g)?;
    let t = g.table(limits)?;
    let supersolvable = solvable && {
        let series = chief_series_in(&t);
        series.windows(2).all(|w| is_prime((w[0].order() / w[1].order()) as u64))
    };
    let nilpotent = prime_divisors(t.len() as u64).into_iter().all(|p| t.is_normal(&sylow_in(&t, p)));
    Ok(StructureFlags { solvable, supersolvable, nilpotent })
}

/// `G × H` acting on disjoint point sets, `G` first.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let degree = g.degree() + h.degree();
    let mut gens: Vec<Permutation> = g.generators().iter().map(|x| x.shifted(0, degree)).collect();
    gens.extend(h.generators().iter().map(|x| x.shifted(g.degree(), degree)));
    FiniteGroup::new(degree, gens).expect("degrees agree by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn p(deg: usize, cycles: &[&[usize]]) -> Permutation {
        let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(deg, &c).unwrap()
    }

    fn orders(gs: &[FiniteGroup]) -> Vec<u64> {
        let mut o: Vec<u64> = gs.iter().map(|g| g.order()).collect();
        o.sort();
        o
    }

    #[test]
    fn normal_closure_examples() {
        let s3 = catalog::symmetric(3);
        assert_eq!(normal_closure(&s3, &[p(3, &[&[0, 1, 2]])]).unwrap().order(), 3);
        assert!(normal_closure(&s3, &[Permutation::identity(3)]).unwrap().is_trivial());
        let s4 = catalog::symmetric(4);
        assert_eq!(normal_closure(&s4, &[p(4, &[&[0, 1], &[2, 3]])]).unwrap().order(), 4);
        let c3 = catalog::cyclic(3);
        assert!(matches!(normal_closure(&c3, &[p(3, &[&[0, 1]])]), Err(Error::NotAMember(_))));
    }

    #[test]
    fn normality_examples() {
        let s3 = catalog::symmetric(3);
        let a3 = catalog::alternating(3);
        assert!(is_normal(&s3, &a3).unwrap());
        let t = FiniteGroup::new(3, vec![p(3, &[&[0, 1]])]).unwrap();
        assert!(!is_normal(&s3, &t).unwrap());
        assert!(is_normal(&s3, &s3).unwrap());
        let s4 = catalog::symmetric(4);
        assert!(matches!(is_normal(&s3, &s4), Err(Error::DegreeMismatch { .. })));
        let c4 = FiniteGroup::new(3, vec![p(3, &[&[0, 1, 2]])]).unwrap();
        assert!(is_normal(&s3, &c4).unwrap());
    }

    #[test]
    fn minimal_normal_examples() {
        let l = Limits::default();
        assert_eq!(orders(&minimal_normal_subgroups(&catalog::symmetric(3), &l).unwrap()), vec![3]);
        assert_eq!(orders(&minimal_normal_subgroups(&catalog::dihedral(4).unwrap(), &l).unwrap()), vec![2, 2, 2]);
        let a5 = catalog::alternating(5);
        let mins = minimal_normal_subgroups(&a5, &l).unwrap();
        assert_eq!(mins.len(), 1);
        assert!(mins[0].same_as(&a5));
        assert!(matches!(minimal_normal_subgroups(&catalog::cyclic(1), &l), Err(Error::TrivialGroup(_))));
    }

    #[test]
    fn socle_examples() {
        let l = Limits::default();
        assert_eq!(socle(&catalog::symmetric(4), &l).unwrap().order(), 4);
        assert_eq!(socle(&catalog::symmetric(3), &l).unwrap().order(), 3);
        assert_eq!(socle(&catalog::alternating(5), &l).unwrap().order(), 60);
        // C6 has two minimal normal subgroups whose join is everything
        assert_eq!(socle(&catalog::cyclic(6), &l).unwrap().order(), 6);
    }

    #[test]
    fn chief_series_examples() {
        let l = Limits::default();
        let s = chief_series(&catalog::symmetric(4), &l).unwrap();
        assert_eq!(s.orders(), vec![24, 12, 4, 1]);
        assert_eq!(s.kind(), SeriesKind::Chief);
        assert!(s.is_chief(&l).unwrap());
        assert_eq!(chief_series(&catalog::cyclic(4), &l).unwrap().orders(), vec![4, 2, 1]);
        let t = chief_series(&catalog::cyclic(1), &l).unwrap();
        assert_eq!(t.length(), 0);
        assert!(!NormalSeries::trivial(&catalog::symmetric(4)).is_chief(&l).unwrap());
    }

    #[test]
    fn user_series_validation() {
        let s4 = catalog::symmetric(4);
        let v4 = normal_closure(&s4, &[p(4, &[&[0, 1], &[2, 3]])]).unwrap();
        let ok = NormalSeries::new(&s4, vec![s4.clone(), v4.clone(), FiniteGroup::trivial(4)]).unwrap();
        assert_eq!(ok.length(), 2);
        let t = FiniteGroup::new(4, vec![p(4, &[&[0, 1]])]).unwrap();
        assert!(NormalSeries::new(&s4, vec![s4.clone(), t, FiniteGroup::trivial(4)]).is_err());
        assert!(NormalSeries::new(&s4, vec![s4.clone(), v4]).is_err());
    }

    #[test]
    fn quotient_examples() {
        let l = Limits::default();
        let s4 = catalog::symmetric(4);
        let v4 = normal_closure(&s4, &[p(4, &[&[0, 1], &[2, 3]])]).unwrap();
        let (q, hom) = quotient(&s4, &v4, &l).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.degree(), 6);
        assert!(hom.is_epimorphism());
        assert!(hom.kernel(&l).unwrap().same_as(&v4));
        assert!(crate::perm_core::is_isomorphic(&q, &catalog::symmetric(3), &l).unwrap().is_some());

        let (q, _) = quotient(&s4, &catalog::alternating(4), &l).unwrap();
        assert_eq!(q.order(), 2);
        let (q, hom) = quotient(&s4, &FiniteGroup::trivial(4), &l).unwrap();
        assert_eq!(q.order(), 24);
        assert!(hom.kernel(&l).unwrap().is_trivial());

        let t = FiniteGroup::new(4, vec![p(4, &[&[0, 1]])]).unwrap();
        assert!(matches!(quotient(&s4, &t, &l), Err(Error::NotNormal)));
        let tight = Limits { quotient_degree_cap: 5, ..Limits::default() };
        assert!(matches!(quotient(&s4, &v4, &tight), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn sylow_examples() {
        let l = Limits::default();
        assert_eq!(sylow_subgroup(&catalog::symmetric(4), 2, &l).unwrap().order(), 8);
        assert_eq!(sylow_subgroup(&catalog::symmetric(3), 3, &l).unwrap().order(), 3);
        assert_eq!(sylow_subgroup(&catalog::cyclic(6), 2, &l).unwrap().order(), 2);
        assert_eq!(sylow_subgroup(&catalog::alternating(5), 2, &l).unwrap().order(), 4);
        assert!(sylow_subgroup(&catalog::symmetric(3), 5, &l).is_err());
        assert!(sylow_subgroup(&catalog::symmetric(3), 4, &l).is_err());
    }

    #[test]
    fn normal_hall_examples() {
        let l = Limits::default();
        let s3 = catalog::symmetric(3);
        let h = normal_hall_subgroup(&s3, &BTreeSet::from([3]), &l).unwrap().unwrap();
        assert_eq!(h.order(), 3);
        assert!(normal_hall_subgroup(&s3, &BTreeSet::from([2]), &l).unwrap().is_none());
        let all = normal_hall_subgroup(&s3, &BTreeSet::from([2, 3, 7]), &l).unwrap().unwrap();
        assert!(all.same_as(&s3));
    }

    #[test]
    fn frattini_examples() {
        let l = Limits::default();
        assert_eq!(frattini(&catalog::cyclic(4), &l).unwrap().order(), 2);
        assert!(frattini(&catalog::symmetric(3), &l).unwrap().is_trivial());
        let q8 = catalog::quaternion8();
        let f = frattini(&q8, &l).unwrap();
        assert_eq!(f.order(), 2);
        let t = q8.table(&l).unwrap();
        assert!(t.locate(&f).unwrap().same_members(&t.center()));
        assert!(matches!(frattini(&catalog::symmetric(6), &l), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn structure_flag_examples() {
        let l = Limits::default();
        let f = structure_flags(&catalog::symmetric(3), &l).unwrap();
        assert_eq!(f, StructureFlags { solvable: true, supersolvable: true, nilpotent: false });
        let f = structure_flags(&catalog::alternating(4), &l).unwrap();
        assert!(f.solvable && !f.supersolvable && !f.nilpotent);
        let f = structure_flags(&catalog::cyclic(12), &l).unwrap();
        assert!(f.solvable && f.supersolvable && f.nilpotent);
        let f = structure_flags(&catalog::alternating(5), &l).unwrap();
        assert!(!f.solvable && !f.supersolvable && !f.nilpotent);
    }

    #[test]
    fn direct_product_examples() {
        let g = direct_product(&catalog::cyclic(2), &catalog::cyclic(3));
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert_eq!(direct_product(&catalog::symmetric(3), &catalog::symmetric(3)).order(), 36);
        let s3 = catalog::symmetric(3);
        let g = direct_product(&s3, &catalog::cyclic(1));
        assert_eq!(g.degree(), 4);
        assert!(crate::perm_core::is_isomorphic(&g, &s3, &Limits::default()).unwrap().is_some());
    }

    #[test]
    fn normal_subgroup_enumeration() {
        let l = Limits::default();
        let ns = normal_subgroups(&catalog::symmetric(4), &l).unwrap();
        assert_eq!(orders(&ns), vec![1, 4, 12, 24]);
        let ns = normal_subgroups(&catalog::dihedral(8).unwrap(), &l).unwrap();
        // 1, Z, three of order 4, whole group
        assert_eq!(orders(&ns), vec![1, 2, 4, 4, 4, 8]);
    }
}
