//! Brute-force reference computations built from permutation products only.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use gt_core::perm_core::Permutation;

pub fn closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    closure_capped(degree, gens, usize::MAX).expect("uncapped")
}

/// The generated subgroup, or `None` once it exceeds `cap` elements.
pub fn closure_capped(degree: usize, gens: &[Permutation], cap: usize) -> Option<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let x = out[head].clone();
        head += 1;
        for s in gens {
            let y = x.then(s);
            if seen.insert(y.clone()) {
                out.push(y);
                if out.len() > cap {
                    return None;
                }
            }
        }
    }
    Some(out)
}

pub fn set(els: &[Permutation]) -> HashSet<Permutation> {
    els.iter().cloned().collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn primes_of(mut n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.insert(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.insert(n);
    }
    out
}

/// Least `n ≥ 1` with `x^n ∈ m`.
pub fn order_mod(x: &Permutation, m: &HashSet<Permutation>) -> u64 {
    let mut y = x.clone();
    let mut n = 1;
    while !m.contains(&y) {
        y = y.then(x);
        n += 1;
    }
    n
}

pub fn order_of(x: &Permutation) -> u64 {
    let id = Permutation::identity(x.degree());
    order_mod(x, &HashSet::from([id]))
}

pub fn exponent_of(els: &[Permutation]) -> u64 {
    els.iter().map(order_of).fold(1, lcm)
}

pub type Graph = (BTreeSet<u64>, BTreeSet<(u64, u64)>);

/// The prime graph of `H/M` for `M ≤ H`, from element orders modulo `M`.
pub fn graph_mod(h: &[Permutation], m: &HashSet<Permutation>) -> Graph {
    let vertices = primes_of((h.len() / m.len()) as u64);
    let orders: BTreeSet<u64> = h.iter().map(|x| order_mod(x, m)).collect();
    let mut edges = BTreeSet::new();
    for &p in &vertices {
        for &q in &vertices {
            if p < q && orders.iter().any(|o| o % (p * q) == 0) {
                edges.insert((p, q));
            }
        }
    }
    (vertices, edges)
}

pub fn graph_of(els: &[Permutation]) -> Graph {
    let id = Permutation::identity(els[0].degree());
    graph_mod(els, &HashSet::from([id]))
}

/// Smallest `d` such that some `d`-tuple generates the group, with the first entry
/// taken up to conjugacy.
pub fn d_brute(els: &[Permutation], max: usize) -> Option<usize> {
    let n = els.len();
    let degree = els[0].degree();
    if n == 1 {
        return Some(0);
    }
    let mut reps: Vec<Permutation> = Vec::new();
    let mut covered: HashSet<Permutation> = HashSet::new();
    for x in els {
        if covered.insert(x.clone()) {
            reps.push(x.clone());
            for g in els {
                covered.insert(x.conjugate_by(g));
            }
        }
    }
    fn search(degree: usize, els: &[Permutation], n: usize, prefix: &mut Vec<Permutation>, left: usize) -> bool {
        if closure(degree, prefix).len() == n {
            return true;
        }
        if left == 0 {
            return false;
        }
        for x in els {
            prefix.push(x.clone());
            let hit = search(degree, els, n, prefix, left - 1);
            prefix.pop();
            if hit {
                return true;
            }
        }
        false
    }
    for d in 1..=max {
        for r in &reps {
            let mut prefix = vec![r.clone()];
            if search(degree, els, n, &mut prefix, d - 1) {
                return Some(d);
            }
        }
    }
    None
}

/// A few elements generating the subgroup with the given members.
fn small_gens(degree: usize, members: &BTreeSet<Permutation>) -> Vec<Permutation> {
    let mut gens = Vec::new();
    let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    for x in members {
        if !span.contains(x) {
            gens.push(x.clone());
            span = set(&closure(degree, &gens));
        }
    }
    gens
}

/// All normal subgroups, as joins of normal closures of single elements.
pub fn normal_subgroups(els: &[Permutation]) -> Vec<BTreeSet<Permutation>> {
    let degree = els[0].degree();
    let mut found: BTreeSet<BTreeSet<Permutation>> = BTreeSet::new();
    let mut done: HashSet<Permutation> = HashSet::new();
    for x in els {
        if done.contains(x) {
            continue;
        }
        let class: BTreeSet<Permutation> = els.iter().map(|g| x.conjugate_by(g)).collect();
        done.extend(class.iter().cloned());
        let conj: Vec<Permutation> = class.into_iter().collect();
        found.insert(closure(degree, &conj).into_iter().collect());
    }
    let mut list: Vec<(BTreeSet<Permutation>, Vec<Permutation>)> =
        found.iter().map(|m| (m.clone(), small_gens(degree, m))).collect();
    let mut start = 0;
    while start < list.len() {
        let end = list.len();
        for i in start..end {
            for j in 0..i {
                let (a, b) = (&list[i], &list[j]);
                if a.0.is_subset(&b.0) || b.0.is_subset(&a.0) {
                    continue;
                }
                let mut gens = a.1.clone();
                gens.extend(b.1.iter().cloned());
                let join: BTreeSet<Permutation> = closure(degree, &gens).into_iter().collect();
                if found.insert(join.clone()) {
                    let g = small_gens(degree, &join);
                    list.push((join, g));
                }
            }
        }
        start = end;
    }
    found.into_iter().collect()
}
