//! Inductive 2-closedness test for groups with cyclic transitive constituents.
//!
//! Transitive groups are 2-closed. Otherwise the group is split into Sylow
//! parts and each `p`-part is reduced until it becomes transitive or a
//! `zel` obstruction is found:
//!
//! * `Z = zel(P)` nontrivial: `P` is 2-closed iff `Z <= P` and the action of
//!   `P` on the orbits of `Z` is 2-closed.
//! * `Z` trivial: every orbit is unessential, so the orbit containing the
//!   minimal point is dropped.

use std::fmt;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::oracle::{self, OracleLimits};
use crate::reduction;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepKind {
    /// Precondition check on the input group.
    Validate,
    /// Group with only fixed points (including degree 0).
    TrivialBase,
    TransitiveBase,
    SylowSplit {
        primes: Vec<usize>,
    },
    /// Decision for one Sylow part begins.
    SylowPart {
        prime: usize,
    },
    ZelNotInside,
    ZelReduce {
        orbit_sizes: Vec<usize>,
    },
    OrbitRemoval {
        orbit: Vec<usize>,
    },
}

/// One criterion step together with the group it was applied to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    pub degree: usize,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<Step>,
    pub verdict: bool,
}

impl StepKind {
    pub fn name(&self) -> &'static str {
        match self {
            StepKind::Validate => "Validate",
            StepKind::TrivialBase => "TrivialBase",
            StepKind::TransitiveBase => "TransitiveBase",
            StepKind::SylowSplit { .. } => "SylowSplit",
            StepKind::SylowPart { .. } => "SylowPart",
            StepKind::ZelNotInside => "ZelNotInside",
            StepKind::ZelReduce { .. } => "ZelReduce",
            StepKind::OrbitRemoval { .. } => "OrbitRemoval",
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<14} degree={} order={}",
            self.kind.name(),
            self.degree,
            self.order
        )?;
        match &self.kind {
            StepKind::SylowSplit { primes } => write!(f, " primes={}", join(primes)),
            StepKind::SylowPart { prime } => write!(f, " p={prime}"),
            StepKind::ZelReduce { orbit_sizes } => {
                write!(f, " zel-orbit-sizes={}", join(orbit_sizes))
            }
            StepKind::OrbitRemoval { orbit } => write!(f, " orbit={{{}}}", join(orbit)),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            writeln!(f, "{:>3}. {}", i + 1, step)?;
        }
        writeln!(
            f,
            "verdict: {}",
            if self.verdict {
                "2-closed"
            } else {
                "not 2-closed"
            }
        )
    }
}

impl ReductionTrace {
    pub fn step_names(&self) -> Vec<&'static str> {
        self.steps.iter().map(|s| s.kind.name()).collect()
    }
}

struct Tracer {
    steps: Vec<Step>,
}

impl Tracer {
    fn push(&mut self, kind: StepKind, group: &PermGroup) -> Result<()> {
        self.steps.push(Step {
            kind,
            degree: group.degree(),
            order: group.order()?,
        });
        Ok(())
    }
}

fn is_base_case(group: &PermGroup, tracer: &mut Tracer) -> Result<bool> {
    if group.is_trivial() && group.degree() != 1 {
        tracer.push(StepKind::TrivialBase, group)?;
        return Ok(true);
    }
    if group.is_transitive() {
        tracer.push(StepKind::TransitiveBase, group)?;
        return Ok(true);
    }
    Ok(false)
}

/// Reduction chain for a `p`-group with cyclic constituents.
fn decide_p_group(mut group: PermGroup, tracer: &mut Tracer) -> Result<bool> {
    loop {
        debug_assert!(group.cyclic_constituents().unwrap_or(true));
        if is_base_case(&group, tracer)? {
            return Ok(true);
        }
        let z = reduction::zel(&group)?;
        if !z.is_trivial() {
            if !z.is_subgroup_of(&group)? {
                tracer.push(StepKind::ZelNotInside, &group)?;
                return Ok(false);
            }
            tracer.push(
                StepKind::ZelReduce {
                    orbit_sizes: z.orbits().sizes(),
                },
                &group,
            )?;
            group = group.induced_on_orbits(&z)?;
        } else {
            let orbit = group.orbits().classes()[0].clone();
            tracer.push(
                StepKind::OrbitRemoval {
                    orbit: orbit.clone(),
                },
                &group,
            )?;
            group = reduction::remove_orbit(&group, &orbit)?;
        }
    }
}

/// Decides whether `group` is 2-closed and records every reduction step.
///
/// Requires every transitive constituent to be cyclic; other inputs are
/// refused with [`GroupError::PreconditionFailed`].
pub fn decide_2_closed(group: &PermGroup) -> Result<(bool, ReductionTrace)> {
    if !group.cyclic_constituents()? {
        return Err(GroupError::PreconditionFailed(
            "some transitive constituent is not cyclic".into(),
        ));
    }
    let mut tracer = Tracer { steps: Vec::new() };
    tracer.push(StepKind::Validate, group)?;
    let verdict = decide_validated(group, &mut tracer)?;
    Ok((
        verdict,
        ReductionTrace {
            steps: tracer.steps,
            verdict,
        },
    ))
}

fn decide_validated(group: &PermGroup, tracer: &mut Tracer) -> Result<bool> {
    if is_base_case(group, tracer)? {
        return Ok(true);
    }
    if group.p_group_prime()?.is_some() {
        return decide_p_group(group.clone(), tracer);
    }
    let sylow = reduction::sylow_decomposition(group)?;
    tracer.push(
        StepKind::SylowSplit {
            primes: sylow.primes(),
        },
        group,
    )?;
    for (prime, part) in sylow.parts {
        tracer.push(StepKind::SylowPart { prime }, &part)?;
        if !decide_p_group(part, tracer)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of running the criterion next to the brute-force oracle.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub decided: bool,
    pub oracle: bool,
    pub closure_order: usize,
    pub group_order: usize,
    pub trace: ReductionTrace,
}

impl OracleReport {
    pub fn mismatch(&self) -> bool {
        self.decided != self.oracle
    }
}

pub fn decide_with_oracle_check(group: &PermGroup, limits: OracleLimits) -> Result<OracleReport> {
    let (decided, trace) = decide_2_closed(group)?;
    let closure = oracle::two_closure(group, limits)?;
    let closure_order = closure.order()?;
    let group_order = group.order()?;
    Ok(OracleReport {
        decided,
        oracle: closure_order == group_order,
        closure_order,
        group_order,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn cyclic(n: usize) -> PermGroup {
        let c: Vec<usize> = (0..n).collect();
        PermGroup::new(n, vec![Permutation::from_cycles(n, &[c]).unwrap()]).unwrap()
    }

    #[test]
    fn transitive_base_case() {
        let (v, t) = decide_2_closed(&cyclic(8)).unwrap();
        assert!(v);
        assert_eq!(t.step_names(), vec!["Validate", "TransitiveBase"]);
    }

    #[test]
    fn trivial_group() {
        let (v, t) = decide_2_closed(&PermGroup::trivial(4)).unwrap();
        assert!(v);
        assert_eq!(t.step_names(), vec!["Validate", "TrivialBase"]);
        assert!(decide_2_closed(&PermGroup::trivial(0)).unwrap().0);
    }

    #[test]
    fn refuses_noncyclic_constituents() {
        let k = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(matches!(
            decide_2_closed(&k),
            Err(GroupError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn diagonal_transposition_is_closed() {
        // (0 1)(2 3): (0 1) alone would send the 2-orbit of (0,2) to that of (1,2)
        let g = PermGroup::new(
            4,
            vec![Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap()],
        )
        .unwrap();
        let (v, t) = decide_2_closed(&g).unwrap();
        assert!(v);
        assert_eq!(
            t.step_names(),
            vec!["Validate", "OrbitRemoval", "TransitiveBase"]
        );
    }

    #[test]
    fn trace_rendering() {
        let (_, t) = decide_2_closed(&cyclic(6)).unwrap();
        assert_eq!(
            t.to_string(),
            "  1. Validate       degree=6 order=6\n  2. TransitiveBase degree=6 order=6\nverdict: 2-closed\n"
        );
    }
}
