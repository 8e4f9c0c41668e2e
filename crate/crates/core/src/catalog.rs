//! Standard small groups and the test corpus built from them.
//!
//! Catalog tokens: `C n` (cyclic), `S n` (symmetric), `A n` (alternating),
//! `D n` (dihedral of order `n`), `Q8`, and direct products joined by `x`.

use crate::perm_core::{direct_product, FiniteGroup, Permutation};
use crate::{Error, Result};

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let c: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[c]).expect("valid cycle")
}

pub fn cyclic(n: usize) -> FiniteGroup {
    if n <= 1 {
        return FiniteGroup::trivial(1);
    }
    FiniteGroup::new(n, vec![cycle(n, 0..n)]).expect("cyclic group")
}

pub fn symmetric(n: usize) -> FiniteGroup {
    match n {
        0 | 1 => FiniteGroup::trivial(1),
        2 => cyclic(2),
        _ => FiniteGroup::new(n, vec![cycle(n, 0..n), cycle(n, [0, 1])]).expect("symmetric group"),
    }
}

pub fn alternating(n: usize) -> FiniteGroup {
    match n {
        0..=2 => FiniteGroup::trivial(n.max(1)),
        3 => cyclic(3),
        _ => {
            let long = if n % 2 == 1 { cycle(n, 0..n) } else { cycle(n, 1..n) };
            FiniteGroup::new(n, vec![cycle(n, [0, 1, 2]), long]).expect("alternating group")
        }
    }
}

/// Dihedral group of order `n`; `D 2` is cyclic and `D 4` is the Klein group.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Precondition(format!("dihedral order must be even, got {n}")));
    }
    let m = n / 2;
    Ok(match m {
        1 => cyclic(2),
        2 => FiniteGroup::new(4, vec![cycle(4, [0, 1]), cycle(4, [2, 3])]).expect("Klein group"),
        _ => {
            let reflection: Vec<u32> = (0..m).map(|i| ((m - i) % m) as u32).collect();
            let reflection = Permutation::from_images(reflection).expect("reflection");
            FiniteGroup::new(m, vec![cycle(m, 0..m), reflection]).expect("dihedral group")
        }
    })
}

/// Quaternion group of order 8 in its regular representation.
pub fn quaternion8() -> FiniteGroup {
    // Element 2u + s stands for (−1)^s·e_u with units e = 1, i, j, k.
    fn mul(a: usize, b: usize) -> usize {
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let (u, sign) = UNIT[a / 2][b / 2];
        2 * u + ((a % 2 + b % 2 + sign) % 2)
    }
    let right = |g: usize| Permutation::from_images((0..8).map(|x| mul(x, g) as u32).collect()).expect("regular");
    FiniteGroup::new(8, vec![right(2), right(4)]).expect("quaternion group")
}

/// Canonical token for a single factor, folding coincidences such as `S 2 = C 2`.
fn canonical_factor(kind: char, n: usize) -> String {
    let cyclic_order = match (kind, n) {
        ('S', 0 | 1) | ('A', 0..=2) => Some(1),
        ('S', 2) | ('D', 2) => Some(2),
        ('A', 3) => Some(3),
        _ => None,
    };
    match cyclic_order {
        Some(m) => format!("C {m}"),
        None => format!("{kind} {n}"),
    }
}

fn factor(text: &str) -> Result<(String, FiniteGroup)> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q8") || t.eq_ignore_ascii_case("q 8") {
        return Ok(("Q8".into(), quaternion8()));
    }
    let mut chars = t.chars();
    let kind = chars.next().map(|c| c.to_ascii_uppercase());
    let rest = chars.as_str().trim();
    let n: usize = rest.parse().map_err(|_| Error::Precondition(format!("unknown catalog token '{t}'")))?;
    let g = match kind {
        Some('C') => cyclic(n),
        Some('S') => symmetric(n),
        Some('A') => alternating(n),
        Some('D') => dihedral(n)?,
        _ => return Err(Error::Precondition(format!("unknown catalog token '{t}'"))),
    };
    if n == 0 {
        return Err(Error::Precondition(format!("catalog parameter must be positive in '{t}'")));
    }
    Ok((canonical_factor(kind.expect("checked"), n), g))
}

/// Parses `C 2 x S 3`-style expressions into a group and its canonical name.
pub fn parse(text: &str) -> Result<(String, FiniteGroup)> {
    let parts: Vec<&str> = text.split(['x', '×']).collect();
    let mut names = Vec::new();
    let mut group: Option<FiniteGroup> = None;
    for part in parts {
        if part.trim().is_empty() {
            return Err(Error::Precondition(format!("empty factor in '{text}'")));
        }
        let (name, g) = factor(part)?;
        names.push(name);
        group = Some(match group {
            None => g,
            Some(acc) => direct_product(&acc, &g),
        });
    }
    Ok((names.join(" x "), group.expect("at least one factor")))
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub group: FiniteGroup,
}

/// Distinct single catalog groups of order at most `max_order`, by canonical name.
pub fn single_groups(max_order: u64) -> Vec<CorpusEntry> {
    let mut names: Vec<String> = Vec::new();
    let mut push = |name: String| {
        if !names.contains(&name) {
            names.push(name);
        }
    };
    for n in 1..=max_order as usize {
        push(canonical_factor('C', n));
    }
    let mut fact = 1u64;
    for n in 1..=12usize {
        fact *= n as u64;
        if fact <= max_order {
            push(canonical_factor('S', n));
        }
        if fact / 2 <= max_order {
            push(canonical_factor('A', n));
        }
    }
    for n in (2..=max_order as usize).step_by(2) {
        push(canonical_factor('D', n));
    }
    if max_order >= 8 {
        push("Q8".into());
    }
    names
        .into_iter()
        .map(|name| {
            let (name, group) = parse(&name).expect("catalog names parse");
            CorpusEntry { name, group }
        })
        .collect()
}

/// Single groups of order at most `max_single` plus unordered products of
/// two non-trivial ones with order at most `max_product`.
pub fn corpus(max_single: u64, max_product: u64) -> Vec<CorpusEntry> {
    let singles = single_groups(max_single);
    let mut out = singles.clone();
    let factors: Vec<&CorpusEntry> = singles.iter().filter(|e| !e.group.is_trivial()).collect();
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            if a.group.order() * b.group.order() <= max_product {
                out.push(CorpusEntry {
                    name: format!("{} x {}", a.name, b.name),
                    group: direct_product(&a.group, &b.group),
                });
            }
        }
    }
    out
}

/// The corpus used by the acceptance checks.
pub fn standard_corpus() -> Vec<CorpusEntry> {
    corpus(200, 400)
}
