use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A bijection of `{0, …, degree-1}` stored as its image array.
///
/// Products read left to right: `p.then(&q)` sends `x` to `q(p(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::EmptyDegree);
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= images.len() || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::InvalidPermutation(format!("point {} out of range for degree {degree}", x + 1)));
                }
                if used[x] {
                    return Err(Error::InvalidPermutation(format!("point {} repeated in cycle list", x + 1)));
                }
                used[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        let zero_based: Vec<Vec<usize>> =
            cycles.into_iter().map(|(_, c)| c.into_iter().map(|x| x - 1).collect()).collect();
        for cycle in &zero_based {
            if let Some(&x) = cycle.iter().find(|&&x| x >= degree) {
                return Err(Error::InvalidPermutation(format!("point {} out of range for degree {degree}", x + 1)));
            }
        }
        Permutation::from_cycles(degree, &zero_based)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` followed by `other`. Panics if the degrees differ.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g⁻¹ · self · g`, the conjugate moved along `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn pow(&self, exponent: i64) -> Permutation {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut e = exponent.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i)
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut order = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            order = order.lcm(&len);
        }
        order
    }

    /// Places `self` on points `offset..offset+degree` of a permutation of `total` points.
    pub fn shifted(&self, offset: usize, total: usize) -> Permutation {
        assert!(offset + self.degree() <= total);
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation { images }
    }

    /// Restriction to points `offset..offset+len`, which must be an invariant block.
    pub fn restricted(&self, offset: usize, len: usize) -> Permutation {
        let images = self.images[offset..offset + len].iter().map(|&x| x - offset as u32).collect();
        Permutation { images }
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<u32>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.images
    }
}

/// 1-based cycle notation.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `(a b c)(d e)` into 1-based cycles, remembering the column of each cycle.
///
/// Positions in errors are 1-based character columns of `text`.
pub(crate) fn parse_cycle_list(text: &str) -> Result<Vec<(usize, Vec<usize>)>> {
    let mut cycles = Vec::new();
    let mut chars = text.char_indices().peekable();
    let err = |pos: usize, msg: &str| Error::Parse { position: pos + 1, message: msg.to_string() };
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c != '(' {
            return Err(err(pos, &format!("expected '(' but found '{c}'")));
        }
        chars.next();
        let start = pos;
        let mut cycle = Vec::new();
        let mut closed = false;
        while let Some(&(p, c)) = chars.peek() {
            if c.is_whitespace() || c == ',' {
                chars.next();
            } else if c == ')' {
                chars.next();
                closed = true;
                break;
            } else if c.is_ascii_digit() {
                let mut value: usize = 0;
                while let Some(&(_, d)) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        value = value
                            .checked_mul(10)
                            .and_then(|x| x.checked_add(v as usize))
                            .ok_or_else(|| err(p, "point number too large"))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                if value == 0 {
                    return Err(err(p, "points are numbered from 1"));
                }
                if cycle.contains(&value) {
                    return Err(err(p, &format!("point {value} repeated within a cycle")));
                }
                cycle.push(value);
            } else {
                return Err(err(p, &format!("unexpected character '{c}' in cycle")));
            }
        }
        if !closed {
            return Err(err(start, "unclosed cycle"));
        }
        if cycle.len() > 1 {
            cycles.push((start, cycle));
        }
    }
    Ok(cycles)
}
