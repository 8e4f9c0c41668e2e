use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::Rng;

use super::chain::StabChain;
use super::perm::Permutation;
use super::table::CayleyTable;
use crate::{Error, Limits, Result};

/// A permutation group together with a stabilizer-chain certificate.
///
/// Cloning is cheap; the underlying data is shared and immutable.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u64,
    table: OnceLock<Arc<CayleyTable>>,
}

impl FiniteGroup {
    /// Runs Schreier–Sims on `generators`.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        let chain = StabChain::new(degree, &generators);
        let order = chain.order()?;
        Ok(FiniteGroup { inner: Arc::new(Inner { degree, generators, chain, order, table: OnceLock::new() }) })
    }

    pub fn trivial(degree: usize) -> Self {
        FiniteGroup::new(degree.max(1), Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    pub fn chain(&self) -> &StabChain {
        &self.inner.chain
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: p.degree() });
        }
        Ok(self.inner.chain.contains(p))
    }

    /// Membership without the degree check; foreign-degree elements are never members.
    pub fn has(&self, p: &Permutation) -> bool {
        self.inner.chain.contains(p)
    }

    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.degree() == other.degree()
            && other.order().is_multiple_of(self.order())
            && self.generators().iter().all(|g| other.has(g))
    }

    /// Equality as subgroups of the same symmetric group.
    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// The subgroup generated by `gens`, which must be elements of `self`.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<FiniteGroup> {
        for g in &gens {
            if !self.contains(g)? {
                return Err(Error::NotAMember(g.to_string()));
            }
        }
        FiniteGroup::new(self.degree(), gens)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    /// All elements in lexicographic order of their image arrays.
    pub fn elements(&self, limits: &Limits) -> Result<Vec<Permutation>> {
        if let Some(t) = self.inner.table.get() {
            return Ok(t.elements().to_vec());
        }
        if self.order() > limits.enumeration_cap {
            return Err(Error::cap("group order for enumeration", limits.enumeration_cap, self.order()));
        }
        let mut els = self.inner.chain.elements();
        els.sort();
        Ok(els)
    }

    /// The multiplication table, built once and shared.
    pub fn table(&self, limits: &Limits) -> Result<Arc<CayleyTable>> {
        if let Some(t) = self.inner.table.get() {
            return Ok(t.clone());
        }
        if self.order() > limits.table_cap {
            return Err(Error::cap("group order for multiplication table", limits.table_cap, self.order()));
        }
        Ok(self.inner.table.get_or_init(|| Arc::new(CayleyTable::new(self))).clone())
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        self.inner.chain.random_element(rng)
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {}, degree {}, gens [", self.order(), self.degree())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}
