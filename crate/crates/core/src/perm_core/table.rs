//! Enumerated groups: elements indexed `0..n`, a full multiplication table,
//! and subgroups stored as bitsets over the indices.
//!
//! Index 0 is always the identity (it is the lexicographically smallest image
//! array). Products follow [`Permutation::then`]: `mul(a, b)` is `a` then `b`.

use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use super::group::FiniteGroup;
use super::perm::Permutation;
use crate::{Error, Result};

pub type Elt = u32;

pub struct CayleyTable {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, Elt>,
    n: usize,
    mul: Vec<Elt>,
    inv: Vec<Elt>,
    orders: Vec<u32>,
    gens: Vec<Elt>,
    classes: OnceLock<Classes>,
}

/// Conjugacy classes; class `c` has representative `reps[c]`, its smallest index.
#[derive(Debug, Clone)]
pub struct Classes {
    pub reps: Vec<Elt>,
    pub class_of: Vec<u32>,
    pub sizes: Vec<u32>,
}

/// A subgroup of an enumerated group: member bitset plus a generating list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSubgroup {
    members: FixedBitSet,
    gens: Vec<Elt>,
    order: usize,
}

impl IndexSubgroup {
    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn gens(&self) -> &[Elt] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, x: Elt) -> bool {
        self.members.contains(x as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elt> + '_ {
        self.members.ones().map(|i| i as Elt)
    }

    pub fn is_subgroup_of(&self, other: &IndexSubgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn same_members(&self, other: &IndexSubgroup) -> bool {
        self.members == other.members
    }
}

impl CayleyTable {
    pub(crate) fn new(group: &FiniteGroup) -> Self {
        let degree = group.degree();
        let mut elements = group.chain().elements();
        elements.sort();
        let n = elements.len();
        let index: HashMap<Permutation, Elt> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i as Elt)).collect();
        let mut gens: Vec<Elt> = Vec::new();
        for g in group.generators() {
            let gi = index[g];
            if gi != 0 && !gens.contains(&gi) {
                gens.push(gi);
            }
        }

        let mut mul = vec![0 as Elt; n * n];
        let mut done = vec![false; n];
        for i in 0..n {
            mul[i * n] = i as Elt;
        }
        done[0] = true;
        for &s in &gens {
            let sp = &elements[s as usize];
            for i in 0..n {
                mul[i * n + s as usize] = index[&elements[i].then(sp)];
            }
            done[s as usize] = true;
        }
        // Column v = column u followed by generator s, along a spanning tree.
        let mut visited = vec![false; n];
        visited[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &s in &gens {
                let v = mul[u * n + s as usize] as usize;
                if visited[v] {
                    continue;
                }
                visited[v] = true;
                if !done[v] {
                    for i in 0..n {
                        let iu = mul[i * n + u] as usize;
                        mul[i * n + v] = mul[iu * n + s as usize];
                    }
                    done[v] = true;
                }
                queue.push(v);
            }
        }
        debug_assert_eq!(queue.len(), n);

        let inv = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        CayleyTable { degree, elements, index, n, mul, inv, orders, gens, classes: OnceLock::new() }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity(&self) -> Elt {
        0
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, x: Elt) -> &Permutation {
        &self.elements[x as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elt> {
        self.index.get(p).copied()
    }

    /// Indices of the group's (non-identity) generators.
    pub fn gens(&self) -> &[Elt] {
        &self.gens
    }

    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        self.mul[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elt) -> Elt {
        self.inv[a as usize]
    }

    #[inline]
    pub fn order(&self, a: Elt) -> u32 {
        self.orders[a as usize]
    }

    pub fn pow(&self, a: Elt, k: u64) -> Elt {
        let mut acc = 0;
        for _ in 0..k % self.order(a) as u64 {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: Elt, g: Elt) -> Elt {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, a: Elt, b: Elt) -> Elt {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn classes(&self) -> &Classes {
        self.classes.get_or_init(|| {
            let mut class_of = vec![u32::MAX; self.n];
            let mut reps = Vec::new();
            let mut sizes = Vec::new();
            for x in 0..self.n {
                if class_of[x] != u32::MAX {
                    continue;
                }
                let id = reps.len() as u32;
                reps.push(x as Elt);
                class_of[x] = id;
                let mut queue = vec![x as Elt];
                let mut head = 0;
                while head < queue.len() {
                    let y = queue[head];
                    head += 1;
                    for &s in &self.gens {
                        let z = self.conj(y, s);
                        if class_of[z as usize] == u32::MAX {
                            class_of[z as usize] = id;
                            queue.push(z);
                        }
                    }
                }
                sizes.push(queue.len() as u32);
            }
            Classes { reps, class_of, sizes }
        })
    }

    pub fn whole(&self) -> IndexSubgroup {
        let mut members = FixedBitSet::with_capacity(self.n);
        members.insert_range(..);
        IndexSubgroup { members, gens: self.gens.clone(), order: self.n }
    }

    pub fn trivial(&self) -> IndexSubgroup {
        let mut members = FixedBitSet::with_capacity(self.n);
        members.insert(0);
        IndexSubgroup { members, gens: Vec::new(), order: 1 }
    }

    pub fn closure(&self, gens: &[Elt]) -> IndexSubgroup {
        self.extend(&self.trivial(), gens)
    }

    /// `⟨h, extra⟩`.
    pub fn extend(&self, h: &IndexSubgroup, extra: &[Elt]) -> IndexSubgroup {
        let new: Vec<Elt> = extra.iter().copied().filter(|&x| !h.contains(x)).collect();
        if new.is_empty() {
            return h.clone();
        }
        let mut gens = h.gens.clone();
        for &x in &new {
            if !gens.contains(&x) {
                gens.push(x);
            }
        }
        let mut members = h.members.clone();
        let mut list: Vec<Elt> = h.iter().collect();
        let initial = list.len();
        for i in 0..initial {
            let e = list[i];
            for &g in &new {
                let y = self.mul(e, g);
                if !members.put(y as usize) {
                    list.push(y);
                }
            }
        }
        let mut head = initial;
        while head < list.len() {
            let e = list[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(e, g);
                if !members.put(y as usize) {
                    list.push(y);
                }
            }
        }
        IndexSubgroup { order: list.len(), members, gens }
    }

    pub fn join(&self, a: &IndexSubgroup, b: &IndexSubgroup) -> IndexSubgroup {
        self.extend(a, &b.gens)
    }

    /// The subgroup whose member set is `members`, with greedily chosen generators.
    ///
    /// `members` must already be closed under multiplication.
    pub fn from_members(&self, members: FixedBitSet) -> IndexSubgroup {
        let mut h = self.trivial();
        for x in members.ones() {
            if !h.contains(x as Elt) {
                h = self.extend(&h, &[x as Elt]);
            }
        }
        debug_assert!(h.members == members, "member set is not a subgroup");
        h
    }

    pub fn intersection(&self, a: &IndexSubgroup, b: &IndexSubgroup) -> IndexSubgroup {
        let mut m = a.members.clone();
        m.intersect_with(&b.members);
        self.from_members(m)
    }

    /// Closure of `gens` under conjugation by the whole group.
    pub fn normal_closure(&self, gens: &[Elt]) -> IndexSubgroup {
        self.normal_closure_over(&self.trivial(), gens)
    }

    /// Normal closure of `⟨h, extra⟩`, where `h` is assumed normal.
    pub fn normal_closure_over(&self, h: &IndexSubgroup, extra: &[Elt]) -> IndexSubgroup {
        let mut n = self.extend(h, extra);
        'outer: loop {
            for &x in n.gens.clone().iter() {
                for &g in &self.gens {
                    let c = self.conj(x, g);
                    if !n.contains(c) {
                        n = self.extend(&n, &[c]);
                        continue 'outer;
                    }
                }
            }
            return n;
        }
    }

    pub fn is_normal(&self, h: &IndexSubgroup) -> bool {
        h.gens.iter().all(|&x| self.gens.iter().all(|&g| h.contains(self.conj(x, g))))
    }

    /// Normal in `ambient` (only conjugation by `ambient`'s generators is checked).
    pub fn is_normal_in(&self, h: &IndexSubgroup, ambient: &IndexSubgroup) -> bool {
        h.gens.iter().all(|&x| ambient.gens.iter().all(|&g| h.contains(self.conj(x, g))))
    }

    pub fn normalizer(&self, h: &IndexSubgroup) -> IndexSubgroup {
        let mut m = FixedBitSet::with_capacity(self.n);
        for g in 0..self.n as Elt {
            if h.gens.iter().all(|&x| h.contains(self.conj(x, g))) {
                m.insert(g as usize);
            }
        }
        self.from_members(m)
    }

    pub fn centralizer(&self, xs: &[Elt]) -> IndexSubgroup {
        let mut m = FixedBitSet::with_capacity(self.n);
        for g in 0..self.n as Elt {
            if xs.iter().all(|&x| self.mul(x, g) == self.mul(g, x)) {
                m.insert(g as usize);
            }
        }
        self.from_members(m)
    }

    pub fn center(&self) -> IndexSubgroup {
        self.centralizer(&self.gens.clone())
    }

    /// Right-coset labels `Hx` for every element, numbered in order of first appearance.
    pub fn coset_labels(&self, h: &IndexSubgroup) -> (Vec<u32>, usize) {
        let mut label = vec![u32::MAX; self.n];
        let mut count = 0u32;
        for x in 0..self.n as Elt {
            if label[x as usize] != u32::MAX {
                continue;
            }
            for m in h.iter() {
                label[self.mul(m, x) as usize] = count;
            }
            count += 1;
        }
        (label, count as usize)
    }

    /// One representative (the smallest index) of each right coset of `h`.
    pub fn coset_reps(&self, h: &IndexSubgroup) -> Vec<Elt> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut reps = Vec::new();
        for x in 0..self.n as Elt {
            if seen.contains(x as usize) {
                continue;
            }
            reps.push(x);
            for m in h.iter() {
                seen.insert(self.mul(m, x) as usize);
            }
        }
        reps
    }

    /// Least `k ≥ 1` with `x^k ∈ n`.
    pub fn order_mod(&self, x: Elt, n: &IndexSubgroup) -> u32 {
        let mut y = x;
        let mut k = 1;
        while !n.contains(y) {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn to_group(&self, h: &IndexSubgroup) -> FiniteGroup {
        let gens = h.gens.iter().map(|&x| self.element(x).clone()).collect();
        FiniteGroup::new(self.degree, gens).expect("generators share the table's degree")
    }

    /// Locates a subgroup given as a permutation group inside this table.
    pub fn locate(&self, h: &FiniteGroup) -> Result<IndexSubgroup> {
        if h.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: h.degree() });
        }
        let mut gens = Vec::new();
        for g in h.generators() {
            let gi =
                self.index_of(g).ok_or_else(|| Error::NotASubgroup(format!("generator {g} lies outside the group")))?;
            if gi != 0 && !gens.contains(&gi) {
                gens.push(gi);
            }
        }
        Ok(self.closure(&gens))
    }

    pub fn perms(&self, xs: &[Elt]) -> Vec<Permutation> {
        xs.iter().map(|&x| self.element(x).clone()).collect()
    }
}
