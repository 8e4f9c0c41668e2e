//! Deterministic Schreier–Sims stabilizer chains.
//!
//! Base points are chosen as the smallest point moved by the element that
//! forces a new level, so the same generators always yield the same chain.

use rand::Rng;

use super::perm::Permutation;
use crate::{Error, Result};

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `slot[x]` is the index into `reps` of the transversal element sending `base` to `x`.
    slot: Vec<Option<u32>>,
    reps: Vec<Permutation>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Level { base, gens: Vec::new(), orbit: Vec::new(), slot: vec![None; degree], reps: Vec::new() };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        self.orbit.clear();
        self.reps.clear();
        self.slot.iter_mut().for_each(|s| *s = None);
        self.orbit.push(self.base);
        self.reps.push(Permutation::identity(degree));
        self.slot[self.base] = Some(0);
        let mut head = 0;
        while head < self.orbit.len() {
            let u = self.orbit[head];
            let ru = self.reps[head].clone();
            for s in &self.gens {
                let v = s.apply(u);
                if self.slot[v].is_none() {
                    self.slot[v] = Some(self.reps.len() as u32);
                    self.orbit.push(v);
                    self.reps.push(ru.then(s));
                }
            }
            head += 1;
        }
    }

    fn rep(&self, point: usize) -> Option<&Permutation> {
        self.slot[point].map(|i| &self.reps[i as usize])
    }
}

/// Strong generating set with transversals; certifies order and membership.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut chain = StabChain { degree, levels: Vec::new() };
        let Some(first) = gens.iter().filter_map(|g| g.smallest_moved_point()).min() else {
            return chain;
        };
        let mut top = Level::new(first, degree);
        top.gens = gens;
        top.rebuild(degree);
        chain.levels.push(top);

        let mut i = 0isize;
        while i >= 0 {
            let level = i as usize;
            match chain.failing_schreier_generator(level) {
                None => i -= 1,
                Some((residue, reached)) => {
                    if reached == chain.levels.len() {
                        let base = residue.smallest_moved_point().expect("non-identity residue");
                        chain.levels.push(Level::new(base, degree));
                    }
                    for l in level + 1..=reached {
                        chain.levels[l].gens.push(residue.clone());
                        chain.levels[l].rebuild(degree);
                    }
                    i = reached as isize;
                }
            }
        }
        chain
    }

    /// The first Schreier generator of `level` that does not sift through the
    /// levels below it, as `(residue, level where sifting stopped)`.
    fn failing_schreier_generator(&self, level: usize) -> Option<(Permutation, usize)> {
        let lv = &self.levels[level];
        for (pos, &u) in lv.orbit.iter().enumerate() {
            let ru = &lv.reps[pos];
            for s in &lv.gens {
                let v = s.apply(u);
                let rv = lv.rep(v).expect("orbit closed under generators");
                let y = ru.then(s).then(&rv.inverse());
                if y.is_identity() {
                    continue;
                }
                let (residue, reached) = self.sift_from(y, level + 1);
                if reached < self.levels.len() || !residue.is_identity() {
                    return Some((residue, reached));
                }
            }
        }
        None
    }

    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, lv) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(lv.base);
            match lv.rep(beta) {
                Some(r) => g = g.then(&r.inverse()),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && {
            let (residue, reached) = self.sift_from(g.clone(), 0);
            reached == self.levels.len() && residue.is_identity()
        }
    }

    pub fn order(&self) -> Result<u64> {
        self.levels.iter().try_fold(1u64, |acc, lv| acc.checked_mul(lv.orbit.len() as u64)).ok_or(Error::OrderOverflow)
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for lv in &self.levels {
            for g in &lv.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Every element, as products of transversal elements (deepest level first).
    pub fn elements(&self) -> Vec<Permutation> {
        let mut current = vec![Permutation::identity(self.degree)];
        for lv in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(current.len() * lv.reps.len());
            for r in &lv.reps {
                for g in &current {
                    next.push(g.then(r));
                }
            }
            current = next;
        }
        current
    }

    /// Uniformly distributed random element.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for lv in self.levels.iter().rev() {
            let r = &lv.reps[rng.gen_range(0..lv.reps.len())];
            g = g.then(r);
        }
        g
    }
}
