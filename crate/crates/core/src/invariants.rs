//! Element-order invariants: prime graphs and supernatural exponents.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{is_prime, prime_divisors, Integer};
use crate::perm_core::FiniteGroup;
use crate::{Error, Limits, Result};

/// Vertices are primes; `{p, q}` is an edge iff some element has order divisible by `pq`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeGraph {
    vertices: BTreeSet<u64>,
    edges: BTreeSet<(u64, u64)>,
}

impl PrimeGraph {
    pub fn new(vertices: BTreeSet<u64>, edges: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let mut norm = BTreeSet::new();
        for (p, q) in edges {
            if p == q {
                return Err(Error::Precondition(format!("self-loop at {p}")));
            }
            if !vertices.contains(&p) || !vertices.contains(&q) {
                return Err(Error::Precondition(format!("edge {{{p},{q}}} has an endpoint outside the vertex set")));
            }
            norm.insert((p.min(q), p.max(q)));
        }
        if let Some(v) = vertices.iter().find(|&&v| !is_prime(v)) {
            return Err(Error::Precondition(format!("vertex {v} is not prime")));
        }
        Ok(PrimeGraph { vertices, edges: norm })
    }

    /// The graph realised by a collection of element orders.
    pub fn from_orders(orders: impl IntoIterator<Item = u64>) -> Self {
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for n in orders {
            let ps: Vec<u64> = prime_divisors(n).into_iter().collect();
            for (i, &p) in ps.iter().enumerate() {
                vertices.insert(p);
                for &q in &ps[i + 1..] {
                    edges.insert((p, q));
                }
            }
        }
        PrimeGraph { vertices, edges }
    }

    pub fn vertices(&self) -> &BTreeSet<u64> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(u64, u64)> {
        &self.edges
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        self.edges.contains(&(p.min(q), p.max(q)))
    }

    /// Vertex and edge containment, without requiring equal vertex sets.
    pub fn is_subgraph_of(&self, other: &PrimeGraph) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }
}

impl fmt::Display for PrimeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.vertices.iter().map(|p| p.to_string()).collect();
        let e: Vec<String> = self.edges.iter().map(|(p, q)| format!("{p}-{q}")).collect();
        write!(f, "V{{{}}} E{{{}}}", v.join(","), e.join(","))
    }
}

/// Relation between two prime graphs on the same vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphRelation {
    Equal,
    Subset,
    Superset,
    Incomparable,
}

/// `Subset` means equal vertex sets with the edges of `a` among those of `b`.
pub fn graph_compare(a: &PrimeGraph, b: &PrimeGraph) -> GraphRelation {
    if a.vertices != b.vertices {
        return GraphRelation::Incomparable;
    }
    match (a.edges.is_subset(&b.edges), b.edges.is_subset(&a.edges)) {
        (true, true) => GraphRelation::Equal,
        (true, false) => GraphRelation::Subset,
        (false, true) => GraphRelation::Superset,
        (false, false) => GraphRelation::Incomparable,
    }
}

pub fn graph_union(graphs: &[PrimeGraph]) -> PrimeGraph {
    let mut out = PrimeGraph::default();
    for g in graphs {
        out.vertices.extend(g.vertices.iter().copied());
        out.edges.extend(g.edges.iter().copied());
    }
    out
}

pub fn prime_set(g: &FiniteGroup) -> BTreeSet<u64> {
    prime_divisors(g.order())
}

/// One order per conjugacy class when a table is affordable, otherwise every element.
pub fn element_orders(g: &FiniteGroup, limits: &Limits) -> Result<Vec<u64>> {
    if g.order() <= limits.table_cap {
        let t = g.table(limits)?;
        return Ok(t.classes().reps.iter().map(|&r| t.order(r) as u64).collect());
    }
    Ok(g.elements(limits)?.iter().map(|x| x.order()).collect())
}

pub fn prime_graph(g: &FiniteGroup, limits: &Limits) -> Result<PrimeGraph> {
    Ok(PrimeGraph::from_orders(element_orders(g, limits)?))
}

/// Least common multiple of the element orders.
pub fn exponent(g: &FiniteGroup, limits: &Limits) -> Result<u64> {
    Ok(element_orders(g, limits)?.into_iter().fold(1, |acc, n| acc.lcm(&n)))
}

/// Primes dividing `|G : H|`.
pub fn index_primes(g: &FiniteGroup, h: &FiniteGroup) -> Result<BTreeSet<u64>> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotASubgroup(format!("{h:?} is not contained in {g:?}")));
    }
    Ok(prime_divisors(g.order() / h.order()))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exponent {
    Finite(BigUint),
    Infinite,
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(n) => write!(f, "{n}"),
            Exponent::Infinite => write!(f, "inf"),
        }
    }
}

/// Formal product `∏ p^{n(p)}` with `n(p)` natural or infinite; absent primes have exponent zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SupernaturalNumber {
    exponents: BTreeMap<u64, Exponent>,
}

impl SupernaturalNumber {
    pub fn one() -> Self {
        SupernaturalNumber::default()
    }

    pub fn from_natural(n: u64) -> Self {
        let mut s = SupernaturalNumber::one();
        for (p, e) in crate::arith::factorize(n) {
            s.exponents.insert(p, Exponent::Finite(BigUint::from(e)));
        }
        s
    }

    /// `self` with the exponent of `p` replaced.
    pub fn with(mut self, p: u64, e: Exponent) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        match e {
            Exponent::Finite(ref n) if n.is_zero() => {
                self.exponents.remove(&p);
            }
            e => {
                self.exponents.insert(p, e);
            }
        }
        Ok(self)
    }

    pub fn exponent_of(&self, p: u64) -> Exponent {
        self.exponents.get(&p).cloned().unwrap_or(Exponent::Finite(BigUint::zero()))
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.exponents.keys().copied()
    }

    pub fn is_finite(&self) -> bool {
        self.exponents.values().all(|e| matches!(e, Exponent::Finite(_)))
    }

    /// The value as an ordinary integer when finite.
    pub fn to_natural(&self) -> Option<BigUint> {
        let mut acc = BigUint::one();
        for (&p, e) in &self.exponents {
            let Exponent::Finite(n) = e else { return None };
            let n: u32 = n.try_into().ok()?;
            acc *= BigUint::from(p).pow(n);
        }
        Some(acc)
    }

    /// Sorted `p^e` factors.
    pub fn factors(&self) -> Vec<String> {
        self.exponents.iter().map(|(p, e)| format!("{p}^{e}")).collect()
    }
}

impl fmt::Display for SupernaturalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        write!(f, "{}", self.factors().join(" * "))
    }
}

impl Serialize for SupernaturalNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.factors().serialize(s)
    }
}

/// Entrywise maximum.
pub fn sn_lcm(a: &SupernaturalNumber, b: &SupernaturalNumber) -> SupernaturalNumber {
    let mut out = a.clone();
    for (&p, e) in &b.exponents {
        let slot = out.exponents.entry(p).or_insert_with(|| e.clone());
        if *e > *slot {
            *slot = e.clone();
        }
    }
    out
}

/// Entrywise `≤`.
pub fn sn_divides(a: &SupernaturalNumber, b: &SupernaturalNumber) -> bool {
    a.exponents.iter().all(|(&p, e)| *e <= b.exponent_of(p))
}
