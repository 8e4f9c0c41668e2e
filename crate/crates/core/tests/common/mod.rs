//! Brute-force oracles built only from permutation arithmetic.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use gt_core::perm_core::{FiniteGroup, Permutation};

pub fn perm(deg: usize, cycles: &[&[usize]]) -> Permutation {
    let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(deg, &c).unwrap()
}

/// Every element of `⟨gens⟩` by breadth-first closure.
pub fn closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for s in gens {
            let y = x.then(s);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    queue
}

pub fn elements(g: &FiniteGroup) -> Vec<Permutation> {
    closure(g.degree(), g.generators())
}

/// Order by repeated multiplication.
pub fn order_of(x: &Permutation) -> u64 {
    let mut y = x.clone();
    let mut n = 1;
    while !y.is_identity() {
        y = y.then(x);
        n += 1;
    }
    n
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

pub fn exponent_of(els: &[Permutation]) -> u64 {
    els.iter().map(order_of).fold(1, lcm)
}

/// Vertices and edges of the prime graph from element orders.
pub fn graph_of(els: &[Permutation]) -> (BTreeSet<u64>, BTreeSet<(u64, u64)>) {
    let vertices = primes_of(els.len() as u64);
    let orders: BTreeSet<u64> = els.iter().map(order_of).collect();
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

pub fn graph_pair(g: &gt_core::invariants::PrimeGraph) -> (BTreeSet<u64>, BTreeSet<(u64, u64)>) {
    (g.vertices().clone(), g.edges().clone())
}

pub fn generated_order(degree: usize, tuple: &[Permutation]) -> usize {
    closure(degree, tuple).len()
}

pub fn is_normal_brute(g: &[Permutation], h: &[Permutation]) -> bool {
    let set: HashSet<&Permutation> = h.iter().collect();
    g.iter().all(|x| h.iter().all(|y| set.contains(&y.conjugate_by(x))))
}

/// Least `k` such that some `k`-tuple of elements generates, searching tuples exhaustively.
pub fn d_brute(g: &FiniteGroup) -> usize {
    let els = elements(g);
    let n = els.len();
    if n == 1 {
        return 0;
    }
    fn search(els: &[Permutation], degree: usize, k: usize, prefix: &mut Vec<Permutation>, n: usize) -> bool {
        if prefix.len() == k {
            return generated_order(degree, prefix) == n;
        }
        for x in els {
            prefix.push(x.clone());
            let ok = search(els, degree, k, prefix, n);
            prefix.pop();
            if ok {
                return true;
            }
        }
        false
    }
    (1..=n).find(|&k| search(&els, g.degree(), k, &mut Vec::new(), n)).expect("the elements generate")
}

/// `G/N` orders and prime graph computed on coset representatives.
pub fn quotient_orders(g: &[Permutation], n: &[Permutation]) -> Vec<u64> {
    let nset: HashSet<&Permutation> = n.iter().collect();
    g.iter()
        .map(|x| {
            let mut y = x.clone();
            let mut k = 1;
            while !nset.contains(&y) {
                y = y.then(x);
                k += 1;
            }
            k
        })
        .collect()
}
