use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::group::FiniteGroup;
use super::perm::Permutation;
use crate::{Error, Limits, Result};

/// A homomorphism given by the images of the source generators.
///
/// Every constructed value has been verified: maps built from generator
/// images are checked on every edge of the source's Cayley graph, and coset
/// actions are homomorphisms by construction.
#[derive(Clone)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    generator_images: Vec<Permutation>,
    map: Arc<Mapping>,
}

enum Mapping {
    /// Image of every source element.
    Table(HashMap<Permutation, Permutation>),
    /// Right action on the cosets of a normal subgroup.
    Cosets(CosetAction),
}

pub(crate) struct CosetAction {
    normal: Vec<Permutation>,
    reps: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
}

impl CosetAction {
    pub(crate) fn new(normal: Vec<Permutation>, reps: Vec<Permutation>) -> Self {
        let mut action = CosetAction { normal, reps, lookup: HashMap::new() };
        let canon: Vec<Permutation> = action.reps.iter().map(|r| action.canonical(r)).collect();
        action.lookup = canon.into_iter().enumerate().map(|(i, c)| (c, i)).collect();
        action
    }

    pub(crate) fn canonical(&self, x: &Permutation) -> Permutation {
        self.normal.iter().map(|m| x.then(m)).min().expect("normal subgroup is non-empty")
    }

    pub(crate) fn coset_of(&self, x: &Permutation) -> Option<usize> {
        self.lookup.get(&self.canonical(x)).copied()
    }

    pub(crate) fn act(&self, g: &Permutation) -> Permutation {
        let images =
            self.reps.iter().map(|r| self.coset_of(&r.then(g)).expect("coset action is closed") as u32).collect();
        Permutation::from_images(images).expect("coset action is a bijection")
    }

    pub(crate) fn index(&self) -> usize {
        self.reps.len()
    }

    pub(crate) fn rep(&self, coset: usize) -> &Permutation {
        &self.reps[coset]
    }
}

impl GroupHom {
    /// Checks that `images` extend to a homomorphism `source → target`.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, images: Vec<Permutation>, limits: &Limits) -> Result<Self> {
        if images.len() != source.generators().len() {
            return Err(Error::Precondition(format!(
                "{} generator images supplied for {} generators",
                images.len(),
                source.generators().len()
            )));
        }
        for img in &images {
            if !target.contains(img)? {
                return Err(Error::NotAMember(img.to_string()));
            }
        }
        if source.order() > limits.enumeration_cap {
            return Err(Error::cap("homomorphism source order", limits.enumeration_cap, source.order()));
        }
        let mut map: HashMap<Permutation, Permutation> = HashMap::with_capacity(source.order() as usize);
        let id = source.identity();
        map.insert(id.clone(), target.identity());
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head].clone();
            head += 1;
            let fx = map[&x].clone();
            for (s, fs) in source.generators().iter().zip(&images) {
                let y = x.then(s);
                let fy = fx.then(fs);
                match map.get(&y) {
                    Some(existing) if *existing != fy => {
                        return Err(Error::Precondition("generator images do not define a homomorphism".into()))
                    }
                    Some(_) => {}
                    None => {
                        map.insert(y.clone(), fy);
                        queue.push(y);
                    }
                }
            }
        }
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            generator_images: images,
            map: Arc::new(Mapping::Table(map)),
        })
    }

    pub(crate) fn from_coset_action(source: &FiniteGroup, target: FiniteGroup, action: CosetAction) -> Self {
        let generator_images = source.generators().iter().map(|g| action.act(g)).collect();
        GroupHom { source: source.clone(), target, generator_images, map: Arc::new(Mapping::Cosets(action)) }
    }

    pub fn identity(group: &FiniteGroup, limits: &Limits) -> Result<Self> {
        GroupHom::new(group, group, group.generators().to_vec(), limits)
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    pub fn apply(&self, x: &Permutation) -> Result<Permutation> {
        if !self.source.contains(x)? {
            return Err(Error::NotAMember(x.to_string()));
        }
        Ok(match &*self.map {
            Mapping::Table(m) => m[x].clone(),
            Mapping::Cosets(a) => a.act(x),
        })
    }

    /// True iff the images generate the whole target.
    pub fn is_epimorphism(&self) -> bool {
        self.image().order() == self.target.order()
    }

    pub fn image(&self) -> FiniteGroup {
        FiniteGroup::new(self.target.degree(), self.generator_images.clone()).expect("images share target degree")
    }

    /// Image of a subgroup of the source.
    pub fn image_of(&self, h: &FiniteGroup) -> Result<FiniteGroup> {
        let gens = h.generators().iter().map(|g| self.apply(g)).collect::<Result<Vec<_>>>()?;
        FiniteGroup::new(self.target.degree(), gens)
    }

    pub fn kernel(&self, limits: &Limits) -> Result<FiniteGroup> {
        let mut gens = Vec::new();
        for x in self.source.elements(limits)? {
            if self.apply(&x)?.is_identity() {
                gens.push(x);
            }
        }
        let k = FiniteGroup::new(self.source.degree(), gens)?;
        Ok(k)
    }

    pub fn is_injective(&self, limits: &Limits) -> Result<bool> {
        Ok(self.source.order() == self.image().order() || self.kernel(limits)?.is_trivial())
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &GroupHom, limits: &Limits) -> Result<GroupHom> {
        let images = self.generator_images.iter().map(|x| next.apply(x)).collect::<Result<Vec<_>>>()?;
        GroupHom::new(&self.source, &next.target, images, limits)
    }

    /// Some preimage of `y`, by scanning source elements.
    pub fn preimage(&self, y: &Permutation, limits: &Limits) -> Result<Option<Permutation>> {
        if let Mapping::Cosets(a) = &*self.map {
            return Ok(Some(a.rep(y.apply(0)).clone()).filter(|x| a.act(x) == *y));
        }
        for x in self.source.elements(limits)? {
            if self.apply(&x)? == *y {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom(|source| {}, |target| {}, images [", self.source.order(), self.target.order())?;
        for (i, g) in self.generator_images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}
