//! Fixed-point-free actions of p-groups on q-groups.

use serde::Serialize;

use super::group::FiniteGroup;
use super::hom::GroupHom;
use crate::arith::prime_power_base;
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PGroupShape {
    Cyclic,
    GeneralizedQuaternion,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FpfClassification {
    pub hypothesis_holds: bool,
    pub classification: PGroupShape,
}

fn prime_power_order(g: &FiniteGroup, name: &str) -> Result<Option<u64>> {
    if g.is_trivial() {
        return Ok(None);
    }
    prime_power_base(g.order())
        .map(Some)
        .ok_or_else(|| Error::Precondition(format!("{name} has order {}, not a prime power", g.order())))
}

/// Whether `P` is cyclic or generalized quaternion.
pub fn classify_p_group(p: &FiniteGroup, limits: &Limits) -> Result<PGroupShape> {
    let Some(prime) = prime_power_order(p, "P")? else {
        return Ok(PGroupShape::Cyclic);
    };
    let els = p.elements(limits)?;
    if els.iter().any(|x| x.order() == p.order()) {
        return Ok(PGroupShape::Cyclic);
    }
    let involutions = els.iter().filter(|x| x.order() == 2).count();
    if prime == 2 && p.order() >= 8 && involutions == 1 {
        return Ok(PGroupShape::GeneralizedQuaternion);
    }
    Ok(PGroupShape::Other)
}

/// Checks whether every non-trivial element of `P` centralizes only the
/// identity of `Q`, where `P` acts on `Q` by conjugation through `action`.
pub fn fixed_point_free_classify(
    p: &FiniteGroup,
    q: &FiniteGroup,
    action: &GroupHom,
    limits: &Limits,
) -> Result<FpfClassification> {
    prime_power_order(p, "P")?;
    prime_power_order(q, "Q")?;
    if !action.source().same_as(p) {
        return Err(Error::Precondition("action is not defined on P".into()));
    }
    if action.target().degree() != q.degree() {
        return Err(Error::DegreeMismatch { expected: q.degree(), found: action.target().degree() });
    }
    for a in action.generator_images() {
        if !q.generators().iter().all(|x| q.has(&x.conjugate_by(a))) {
            return Err(Error::Precondition(format!("{a} does not normalize Q")));
        }
    }
    let q_elements = q.elements(limits)?;
    let mut holds = true;
    'outer: for a in p.elements(limits)? {
        if a.is_identity() {
            continue;
        }
        let image = action.apply(&a)?;
        for x in &q_elements {
            if !x.is_identity() && x.conjugate_by(&image) == *x {
                holds = false;
                break 'outer;
            }
        }
    }
    Ok(FpfClassification { hypothesis_holds: holds, classification: classify_p_group(p, limits)? })
}
