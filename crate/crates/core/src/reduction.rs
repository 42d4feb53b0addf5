//! Structural reductions for abelian groups: Sylow parts, the group
//! `zel(G)`, and removal of unessential orbits.

use crate::arith;
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// The Sylow subgroups of an abelian group, each acting on all points.
#[derive(Debug, Clone)]
pub struct SylowDecomposition {
    pub parts: Vec<(usize, PermGroup)>,
}

impl SylowDecomposition {
    pub fn primes(&self) -> Vec<usize> {
        self.parts.iter().map(|(p, _)| *p).collect()
    }
}

/// `g^(m / p^k)` where `m` is the order of `g` and `p^k` its `p`-part.
fn p_component(g: &Permutation, p: usize) -> Permutation {
    let m = g.order();
    g.pow(m / arith::p_part(m, p))
}

/// Splits an abelian group into its Sylow subgroups, ordered by prime.
///
/// Since the group is abelian, the `p`-components of the generators already
/// generate the Sylow `p`-subgroup.
pub fn sylow_decomposition(group: &PermGroup) -> Result<SylowDecomposition> {
    if !group.is_abelian() {
        return Err(GroupError::NotNilpotent);
    }
    let order = group.order()?;
    let mut parts = Vec::new();
    for (p, _) in arith::factorize(order) {
        let gens = group
            .generators()
            .iter()
            .map(|g| p_component(g, p))
            .collect();
        let part = PermGroup::new(group.degree(), gens)?.with_cap(group.cap());
        debug_assert_eq!(part.order().ok(), Some(arith::p_part(order, p)));
        parts.push((p, part));
    }
    Ok(SylowDecomposition { parts })
}

/// Elements of `restriction(pointwise_stabilizer(G, other), orbit)`, sorted.
fn constituent_of_kernel(
    group: &PermGroup,
    orbit: &[usize],
    other: &[usize],
) -> Result<Vec<Permutation>> {
    let kernel = group.pointwise_stabilizer(other)?;
    kernel.restricted_elements(orbit)
}

/// The factor of `zel(G)` on `orbit`: the intersection, over all other
/// orbits, of the constituent on `orbit` of their pointwise stabilizers.
/// Elements act on `orbit` relabeled by sorted order.
pub fn zel_factor(group: &PermGroup, orbit_index: usize) -> Result<Vec<Permutation>> {
    let orbits = group.orbits();
    let classes = orbits.classes();
    if classes.len() < 2 {
        return Err(GroupError::Transitive);
    }
    let orbit = &classes[orbit_index];
    let mut acc: Option<Vec<Permutation>> = None;
    for (j, other) in classes.iter().enumerate() {
        if j == orbit_index {
            continue;
        }
        let set = constituent_of_kernel(group, orbit, other)?;
        acc = Some(match acc {
            None => set,
            Some(prev) => prev
                .into_iter()
                .filter(|x| set.binary_search(x).is_ok())
                .collect(),
        });
        if acc.as_ref().is_some_and(|a| a.len() == 1) {
            break;
        }
    }
    Ok(acc.unwrap_or_default())
}

/// Extends a permutation of `orbit` (relabeled by sorted order) to all points.
fn extend_by_identity(local: &Permutation, orbit: &[usize], degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for (k, &x) in orbit.iter().enumerate() {
        images[x] = orbit[local.apply(k)];
    }
    Permutation::from_images_unchecked(images)
}

/// The direct product over orbits of the [`zel_factor`]s, acting on all points.
///
/// Transitive groups are rejected: the defining intersection is empty there.
pub fn zel(group: &PermGroup) -> Result<PermGroup> {
    let orbits = group.orbits();
    if orbits.len() < 2 {
        return Err(GroupError::Transitive);
    }
    let mut gens = Vec::new();
    for (i, orbit) in orbits.classes().iter().enumerate() {
        let factor = zel_factor(group, i)?;
        let local = PermGroup::from_elements(orbit.len(), factor)?;
        gens.extend(
            local
                .generators()
                .iter()
                .map(|g| extend_by_identity(g, orbit, group.degree())),
        );
    }
    PermGroup::new(group.degree(), gens).map(|z| z.with_cap(group.cap()))
}

/// Whether `zel(G) <= G`.
pub fn zel_condition(group: &PermGroup) -> Result<bool> {
    zel(group)?.is_subgroup_of(group)
}

/// An orbit `Δ' ≠ orbit` whose pointwise stabilizer acts trivially on
/// `orbit`, which makes `orbit` unessential. Requires a quasiregular group.
pub fn has_unessential_witness(group: &PermGroup, orbit: &[usize]) -> Result<Option<Vec<usize>>> {
    if let Some(point) = group.first_irregular_orbit()? {
        return Err(GroupError::NotQuasiregular { point });
    }
    let orbits = group.orbits();
    let me = orbits.class_index(orbit).ok_or(GroupError::NotAnOrbit)?;
    for (j, other) in orbits.classes().iter().enumerate() {
        if j == me {
            continue;
        }
        if constituent_of_kernel(group, &orbits.classes()[me], other)?.len() == 1 {
            return Ok(Some(other.clone()));
        }
    }
    Ok(None)
}

/// The constituent on the complement of `orbit`.
pub fn remove_orbit(group: &PermGroup, orbit: &[usize]) -> Result<PermGroup> {
    let orbits = group.orbits();
    let idx = orbits.class_index(orbit).ok_or(GroupError::NotAnOrbit)?;
    let rest: Vec<usize> = (0..group.degree())
        .filter(|&x| orbits.class_of(x) != idx)
        .collect();
    group.restriction(&rest)
}
