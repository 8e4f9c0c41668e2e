//! Isomorphism testing by backtracking over generator images.

use std::collections::BTreeMap;

use super::group::FiniteGroup;
use super::hom::GroupHom;
use super::table::{CayleyTable, Elt};
use crate::limits::Budget;
use crate::{Limits, Result};

const NONE: Elt = Elt::MAX;

/// Multiset of (element order, class size) pairs.
fn class_profile(t: &CayleyTable) -> BTreeMap<(u32, u32), usize> {
    let classes = t.classes();
    let mut out = BTreeMap::new();
    for (i, &r) in classes.reps.iter().enumerate() {
        *out.entry((t.order(r), classes.sizes[i])).or_insert(0) += 1;
    }
    out
}

/// Greedy generating set: elements of largest order first, skipping those already generated.
fn greedy_generators(t: &CayleyTable) -> Vec<Elt> {
    let mut els: Vec<Elt> = (0..t.len() as Elt).collect();
    els.sort_by_key(|&x| (std::cmp::Reverse(t.order(x)), x));
    let mut gens = Vec::new();
    let mut sub = t.trivial();
    for x in els {
        if sub.order() == t.len() {
            break;
        }
        if !sub.contains(x) {
            gens.push(x);
            sub = t.extend(&sub, &[x]);
        }
    }
    gens
}

struct Search<'a> {
    g: &'a CayleyTable,
    h: &'a CayleyTable,
    gens: Vec<Elt>,
    candidates: Vec<Vec<Elt>>,
    images: Vec<Elt>,
    budget: Budget,
}

impl Search<'_> {
    /// Extends the partial map over `⟨gens[..k]⟩`; `None` on inconsistency.
    fn partial_map(&mut self, k: usize) -> Result<Option<Vec<Elt>>> {
        let mut map = vec![NONE; self.g.len()];
        let mut used = vec![false; self.h.len()];
        map[0] = 0;
        used[0] = true;
        let mut queue = vec![0 as Elt];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            self.budget.spend(1)?;
            for j in 0..k {
                let y = self.g.mul(x, self.gens[j]);
                let fy = self.h.mul(map[x as usize], self.images[j]);
                let slot = map[y as usize];
                if slot == NONE {
                    if used[fy as usize] {
                        return Ok(None);
                    }
                    used[fy as usize] = true;
                    map[y as usize] = fy;
                    queue.push(y);
                } else if slot != fy {
                    return Ok(None);
                }
            }
        }
        Ok(Some(map))
    }

    fn descend(&mut self, k: usize) -> Result<Option<Vec<Elt>>> {
        if k == self.gens.len() {
            return self.partial_map(k);
        }
        for idx in 0..self.candidates[k].len() {
            let c = self.candidates[k][idx];
            self.images[k] = c;
            if self.partial_map(k + 1)?.is_none() {
                continue;
            }
            if let Some(m) = self.descend(k + 1)? {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }
}

/// A verified isomorphism `G → H`, or `None` when the groups are not isomorphic.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup, limits: &Limits) -> Result<Option<GroupHom>> {
    if g.order() != h.order() {
        return Ok(None);
    }
    let tg = g.table(limits)?;
    let th = h.table(limits)?;
    if class_profile(&tg) != class_profile(&th) {
        return Ok(None);
    }
    let gens = greedy_generators(&tg);
    let cg = tg.classes();
    let ch = th.classes();
    let size_g = |x: Elt| cg.sizes[cg.class_of[x as usize] as usize];
    let size_h = |y: Elt| ch.sizes[ch.class_of[y as usize] as usize];
    let candidates: Vec<Vec<Elt>> = gens
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            // Composing with an inner automorphism of H lets the first image be a class representative.
            let pool: Vec<Elt> = if i == 0 { ch.reps.clone() } else { (0..th.len() as Elt).collect() };
            let mut c: Vec<Elt> =
                pool.into_iter().filter(|&y| th.order(y) == tg.order(x) && size_h(y) == size_g(x)).collect();
            c.sort_by_key(|&y| (size_h(y), y));
            c
        })
        .collect();
    let mut search = Search {
        g: &tg,
        h: &th,
        images: vec![0; gens.len()],
        gens,
        candidates,
        budget: Budget::new("isomorphism search", limits.isomorphism_budget),
    };
    let Some(map) = search.descend(0)? else {
        return Ok(None);
    };
    let images = g
        .generators()
        .iter()
        .map(|x| {
            let ix = tg.index_of(x).expect("generator is an element");
            th.element(map[ix as usize]).clone()
        })
        .collect();
    GroupHom::new(g, h, images, limits).map(Some)
}
