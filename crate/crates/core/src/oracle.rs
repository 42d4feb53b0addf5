//! Brute-force 2-closure: all automorphisms of the 2-orbit coloring.
//!
//! Images are assigned point by point in ascending order. A partial
//! assignment survives only while every assigned pair keeps its color, and
//! candidate images must agree with the source point on the diagonal color
//! and on the multisets of row and column colors.

use crate::error::{GroupError, Result};
use crate::group::{PermGroup, DEFAULT_ELEMENT_CAP};
use crate::perm::Permutation;
use crate::two_orbit::TwoOrbitColoring;

/// Bounds for the automorphism search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_degree: usize,
    /// Maximum number of visited search nodes.
    pub node_budget: u64,
    /// Maximum size of the returned group.
    pub max_elements: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_degree: 14,
            node_budget: 50_000_000,
            max_elements: DEFAULT_ELEMENT_CAP,
        }
    }
}

struct Search<'a> {
    coloring: &'a TwoOrbitColoring,
    signature: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    limits: OracleLimits,
    found: Vec<Permutation>,
}

impl Search<'_> {
    fn extend(&mut self, point: usize) -> Result<()> {
        let n = self.coloring.degree();
        if point == n {
            if self.found.len() >= self.limits.max_elements {
                return Err(GroupError::CapExceeded {
                    cap: self.limits.max_elements,
                    partial: self.found.len(),
                });
            }
            self.found
                .push(Permutation::from_images_unchecked(self.image.clone()));
            return Ok(());
        }
        for cand in 0..n {
            if self.used[cand] || self.signature[cand] != self.signature[point] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limits.node_budget {
                return Err(GroupError::BudgetExceeded {
                    budget: self.limits.node_budget,
                });
            }
            let c = self.coloring;
            let consistent = (0..point).all(|k| {
                let fk = self.image[k];
                c.color(k, point) == c.color(fk, cand) && c.color(point, k) == c.color(cand, fk)
            });
            if !consistent {
                continue;
            }
            self.image[point] = cand;
            self.used[cand] = true;
            self.extend(point + 1)?;
            self.used[cand] = false;
        }
        Ok(())
    }
}

/// Point classes that no color-preserving permutation can mix: diagonal
/// color plus sorted row and column color multisets.
fn point_signatures(coloring: &TwoOrbitColoring) -> Vec<usize> {
    let n = coloring.degree();
    let keys: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..n)
        .map(|a| {
            let mut row = coloring.row(a).to_vec();
            row.sort_unstable();
            let mut col: Vec<u32> = (0..n).map(|b| coloring.color(b, a)).collect();
            col.sort_unstable();
            (coloring.color(a, a), row, col)
        })
        .collect();
    let mut distinct = keys.clone();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).unwrap())
        .collect()
}

/// Every permutation preserving `coloring`, sorted.
pub fn automorphisms(
    coloring: &TwoOrbitColoring,
    limits: OracleLimits,
) -> Result<Vec<Permutation>> {
    let n = coloring.degree();
    if n > limits.max_degree {
        return Err(GroupError::DegreeTooLarge {
            degree: n,
            bound: limits.max_degree,
        });
    }
    let mut search = Search {
        coloring,
        signature: point_signatures(coloring),
        image: vec![0; n],
        used: vec![false; n],
        nodes: 0,
        limits,
        found: Vec::new(),
    };
    search.extend(0)?;
    let mut found = search.found;
    found.sort_unstable();
    Ok(found)
}

/// The 2-closure of `group`: the automorphism group of its 2-orbit coloring.
pub fn two_closure(group: &PermGroup, limits: OracleLimits) -> Result<PermGroup> {
    if group.degree() > limits.max_degree {
        return Err(GroupError::DegreeTooLarge {
            degree: group.degree(),
            bound: limits.max_degree,
        });
    }
    let coloring = TwoOrbitColoring::of_group(group);
    let elems = automorphisms(&coloring, limits)?;
    PermGroup::from_elements(group.degree(), elems)
}

pub fn is_2_closed_oracle(group: &PermGroup, limits: OracleLimits) -> Result<bool> {
    let closure = two_closure(group, limits)?;
    Ok(closure.order()? == group.order()?)
}
