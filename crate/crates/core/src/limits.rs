/// Caps and budgets for the exhaustive parts of the engine.
///
/// None of these values are intrinsic to the mathematics; they only keep
/// desk-scale computations from running away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest order for which the element list may be materialised.
    pub enumeration_cap: u64,
    /// Largest order for which a full multiplication table is built.
    pub table_cap: u64,
    /// Largest permutation degree produced by a coset-action quotient.
    pub quotient_degree_cap: u64,
    /// Largest order accepted by the Frattini subgroup computation.
    pub frattini_cap: u64,
    /// Largest order for which all normal subgroups are enumerated.
    pub normal_enumeration_cap: u64,
    /// Largest socle order accepted when computing crown parameters.
    pub socle_parameter_cap: u64,
    /// Node visits allowed in an isomorphism search.
    pub isomorphism_budget: u64,
    /// Subgroup closures allowed in a single witness or generation search.
    pub search_budget: u64,
    /// Random tuples tried per tuple size before exhaustive certification.
    pub random_tuples: usize,
    /// Seed for every randomised phase.
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_cap: 10_000,
            table_cap: 4096,
            quotient_degree_cap: 10_000,
            frattini_cap: 500,
            normal_enumeration_cap: 2000,
            socle_parameter_cap: 4096,
            isomorphism_budget: 10_000_000,
            search_budget: 5_000_000,
            random_tuples: 200,
            seed: 0,
        }
    }
}

impl Limits {
    pub fn with_seed(seed: u64) -> Self {
        Limits { seed, ..Limits::default() }
    }
}

/// Counts expensive steps against a budget.
#[derive(Debug)]
pub(crate) struct Budget {
    what: &'static str,
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(what: &'static str, limit: u64) -> Self {
        Budget { what, limit, used: 0 }
    }

    pub(crate) fn spend(&mut self, steps: u64) -> crate::Result<()> {
        self.used += steps;
        if self.used > self.limit {
            return Err(crate::Error::BudgetExceeded { what: self.what, budget: self.limit });
        }
        Ok(())
    }
}
