//! Finitely generated permutation groups with enumeration-backed subroutines.
//!
//! Every subgroup computation (stabilizers, membership, intersections) filters
//! the memoized element list, so groups are limited to the enumeration cap.

use std::collections::{HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use crate::arith;
use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// Default bound on the number of elements materialized by [`PermGroup::elements`].
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// A permutation group given by generators, with a lazily enumerated element list.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    cap: usize,
    elements: OnceLock<Arc<Vec<Permutation>>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

/// The orbits of a group, ordered by minimal point; each class is sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    classes: Vec<Vec<usize>>,
    point_to_class: Vec<usize>,
}

impl OrbitPartition {
    fn from_labels(labels: &[usize]) -> Self {
        // relabel roots in order of first (= minimal) point
        let n = labels.len();
        let mut class_of_root = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut point_to_class = vec![0; n];
        for x in 0..n {
            let r = labels[x];
            if class_of_root[r] == usize::MAX {
                class_of_root[r] = classes.len();
                classes.push(Vec::new());
            }
            let c = class_of_root[r];
            classes[c].push(x);
            point_to_class[x] = c;
        }
        OrbitPartition {
            classes,
            point_to_class,
        }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, point: usize) -> usize {
        self.point_to_class[point]
    }

    pub fn class_index(&self, set: &[usize]) -> Option<usize> {
        let first = *set.first()?;
        let c = *self.point_to_class.get(first)?;
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        (self.classes[c] == sorted).then_some(c)
    }

    /// Sizes of the classes, in class order.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Breadth-first closure of `generators` under right multiplication.
///
/// Fails with [`GroupError::CapExceeded`] as soon as more than `cap` elements are found.
pub fn enumerate_elements(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    let mut out = Vec::new();
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.then(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(GroupError::CapExceeded {
                        cap,
                        partial: seen.len(),
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    out.sort_unstable();
    Ok(out)
}

fn restrict_perm(p: &Permutation, domain: &[usize], index: &[usize]) -> Permutation {
    Permutation::from_images_unchecked(domain.iter().map(|&x| index[p.apply(x)]).collect())
}

impl PermGroup {
    /// Creates a group from generators; identities and duplicates are dropped.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut gens: Vec<Permutation> = Vec::with_capacity(generators.len());
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(PermGroup {
            degree,
            generators: gens,
            cap: DEFAULT_ELEMENT_CAP,
            elements: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            cap: DEFAULT_ELEMENT_CAP,
            elements: OnceLock::new(),
        }
    }

    /// Builds a group from a complete, closed element list.
    ///
    /// The element list is memoized as given; a small generating set is
    /// extracted greedily.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(e) = elements.iter().find(|e| e.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: e.degree(),
            });
        }
        // high-order elements first, so cyclic groups get a single generator
        let mut candidates: Vec<(std::cmp::Reverse<usize>, &Permutation)> = elements
            .iter()
            .map(|e| (std::cmp::Reverse(e.order()), e))
            .collect();
        candidates.sort();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current: Vec<Permutation> = vec![Permutation::identity(degree)];
        for (_, e) in candidates {
            if current.binary_search(e).is_err() {
                gens.push(e.clone());
                current = enumerate_elements(degree, &gens, elements.len().max(1))?;
                if current.len() == elements.len() {
                    break;
                }
            }
        }
        debug_assert_eq!(current, elements);
        let g = PermGroup {
            degree,
            generators: gens,
            cap: DEFAULT_ELEMENT_CAP.max(elements.len()),
            elements: OnceLock::new(),
        };
        let _ = g.elements.set(Arc::new(elements));
        Ok(g)
    }

    /// Returns the same group with a different enumeration cap.
    pub fn with_cap(mut self, cap: usize) -> Self {
        if self.cap != cap {
            self.cap = cap;
            if self.elements.get().is_some_and(|e| e.len() > cap) {
                self.elements = OnceLock::new();
            }
        }
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// All group elements in sorted order, enumerated once and memoized.
    pub fn elements(&self) -> Result<&[Permutation]> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let e = enumerate_elements(self.degree, &self.generators, self.cap)?;
        Ok(self.elements.get_or_init(|| Arc::new(e)))
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.elements()?.len())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Ok(false);
        }
        Ok(self.elements()?.binary_search(p).is_ok())
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Same element set (requires both to be enumerable).
    pub fn same_elements(&self, other: &PermGroup) -> Result<bool> {
        Ok(self.degree == other.degree && self.elements()? == other.elements()?)
    }

    pub fn orbits(&self) -> OrbitPartition {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        for g in &self.generators {
            for x in 0..self.degree {
                let a = find(&mut parent, x);
                let b = find(&mut parent, g.apply(x));
                if a != b {
                    // keep the smaller root so roots are class minima
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi] = lo;
                }
            }
        }
        let labels: Vec<usize> = (0..self.degree).map(|x| find(&mut parent, x)).collect();
        OrbitPartition::from_labels(&labels)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// All elements fixing every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        let elems = self
            .elements()?
            .iter()
            .filter(|g| points.iter().all(|&x| g.apply(x) == x))
            .cloned()
            .collect();
        PermGroup::from_elements(self.degree, elems)
    }

    /// All elements mapping `points` onto itself.
    pub fn setwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        let mut member = vec![false; self.degree];
        for &x in points {
            member[x] = true;
        }
        let elems = self
            .elements()?
            .iter()
            .filter(|g| points.iter().all(|&x| member[g.apply(x)]))
            .cloned()
            .collect();
        PermGroup::from_elements(self.degree, elems)
    }

    /// The constituent on an invariant set, relabeled by sorted order of `points`.
    pub fn restriction(&self, points: &[usize]) -> Result<PermGroup> {
        let (domain, index) = self.check_invariant(points)?;
        let gens = self
            .generators
            .iter()
            .map(|g| restrict_perm(g, &domain, &index))
            .collect();
        PermGroup::new(domain.len(), gens).map(|g| g.with_cap(self.cap))
    }

    /// Restriction of every element to `points`, as a set; used when the
    /// restricted element list itself is needed.
    pub(crate) fn restricted_elements(&self, points: &[usize]) -> Result<Vec<Permutation>> {
        let (domain, index) = self.check_invariant(points)?;
        let mut out: Vec<Permutation> = self
            .elements()?
            .iter()
            .map(|g| restrict_perm(g, &domain, &index))
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    fn check_invariant(&self, points: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
        let mut domain = points.to_vec();
        domain.sort_unstable();
        domain.dedup();
        let mut index = vec![usize::MAX; self.degree];
        for (k, &x) in domain.iter().enumerate() {
            if x >= self.degree {
                return Err(GroupError::InvalidPermutation(format!(
                    "point {x} out of range for degree {}",
                    self.degree
                )));
            }
            index[x] = k;
        }
        for (gi, g) in self.generators.iter().enumerate() {
            for &x in &domain {
                if index[g.apply(x)] == usize::MAX {
                    return Err(GroupError::NotInvariant {
                        generator: gi,
                        point: x,
                    });
                }
            }
        }
        Ok((domain, index))
    }

    /// Whether `self` is a subgroup of `other`; only `other` is enumerated.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(GroupError::DegreeMismatch {
                expected: other.degree,
                found: self.degree,
            });
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The action of `self` on the orbits of `sub`, classes indexed by minimal point.
    pub fn induced_on_orbits(&self, sub: &PermGroup) -> Result<PermGroup> {
        if sub.degree != self.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: sub.degree,
            });
        }
        let blocks = sub.orbits();
        let k = blocks.len();
        let mut gens = Vec::with_capacity(self.generators.len());
        for (gi, g) in self.generators.iter().enumerate() {
            let mut images = vec![0; k];
            for (c, class) in blocks.classes().iter().enumerate() {
                let target = blocks.class_of(g.apply(class[0]));
                if blocks.classes()[target].len() != class.len() {
                    return Err(GroupError::NotBlockSystem {
                        generator: gi,
                        point: class[0],
                    });
                }
                if let Some(&x) = class
                    .iter()
                    .find(|&&x| blocks.class_of(g.apply(x)) != target)
                {
                    return Err(GroupError::NotBlockSystem {
                        generator: gi,
                        point: x,
                    });
                }
                images[c] = target;
            }
            gens.push(Permutation::from_images(images)?);
        }
        PermGroup::new(k, gens).map(|g| g.with_cap(self.cap))
    }

    /// Pairwise-commuting generators.
    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// The prime `p` when `|G|` is a positive power of `p`.
    pub fn p_group_prime(&self) -> Result<Option<usize>> {
        Ok(arith::prime_power_base(self.order()?))
    }

    /// Every transitive constituent is cyclic.
    pub fn cyclic_constituents(&self) -> Result<bool> {
        for class in self.orbits().classes() {
            let c = self.restriction(class)?;
            let order = c.order()?;
            if !c.elements()?.iter().any(|g| g.order() == order) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every transitive constituent is regular.
    pub fn is_quasiregular(&self) -> Result<bool> {
        Ok(self.first_irregular_orbit()?.is_none())
    }

    pub(crate) fn first_irregular_orbit(&self) -> Result<Option<usize>> {
        for class in self.orbits().classes() {
            if self.restriction(class)?.order()? != class.len() {
                return Ok(Some(class[0]));
            }
        }
        Ok(None)
    }

    /// The conjugate group under the point relabeling `sigma`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<PermGroup> {
        if sigma.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: sigma.degree(),
            });
        }
        let gens = self.generators.iter().map(|g| g.relabel(sigma)).collect();
        PermGroup::new(self.degree, gens).map(|g| g.with_cap(self.cap))
    }

    /// The subgroup generated by `self` and `other`, both on the same points.
    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        if self.degree != other.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let gens = self
            .generators
            .iter()
            .chain(&other.generators)
            .cloned()
            .collect();
        PermGroup::new(self.degree, gens).map(|g| g.with_cap(self.cap))
    }
}
