//! The 2-orbits of a permutation group as a coloring of `Ω × Ω`.

use std::fmt;
use std::str::FromStr;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Coloring of ordered pairs by the orbit of the group on `Ω × Ω`.
///
/// Colors are numbered by first occurrence in row-major order, so two
/// colorings describe the same partition exactly when they are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoOrbitColoring {
    degree: usize,
    color: Vec<u32>,
    num_colors: usize,
}

impl TwoOrbitColoring {
    /// Computes the pair orbits of `group` from its generators.
    pub fn of_group(group: &PermGroup) -> Self {
        let n = group.degree();
        let mut parent: Vec<usize> = (0..n * n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in group.generators() {
            let img = g.images();
            for a in 0..n {
                for b in 0..n {
                    let x = find(&mut parent, a * n + b);
                    let y = find(&mut parent, img[a] * n + img[b]);
                    if x != y {
                        parent[x.max(y)] = x.min(y);
                    }
                }
            }
        }
        let labels: Vec<usize> = (0..n * n).map(|x| find(&mut parent, x)).collect();
        Self::canonical(n, &labels)
    }

    fn canonical(degree: usize, labels: &[usize]) -> Self {
        let mut id_of = std::collections::HashMap::new();
        let color: Vec<u32> = labels
            .iter()
            .map(|&l| {
                let next = id_of.len() as u32;
                *id_of.entry(l).or_insert(next)
            })
            .collect();
        TwoOrbitColoring {
            degree,
            color,
            num_colors: id_of.len(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    #[inline]
    pub fn color(&self, a: usize, b: usize) -> u32 {
        self.color[a * self.degree + b]
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.color[a * self.degree..(a + 1) * self.degree]
    }

    /// Whether `p` maps every color class onto itself.
    pub fn preserves(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        let img = p.images();
        Ok((0..self.degree)
            .all(|a| (0..self.degree).all(|b| self.color(a, b) == self.color(img[a], img[b]))))
    }

    /// Whether both colorings induce the same partition of `Ω × Ω`.
    pub fn same_partition(&self, other: &TwoOrbitColoring) -> Result<bool> {
        if self.degree != other.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(self.color == other.color)
    }

    /// Cells of each color as `(a, b)` pairs, in color order.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.num_colors];
        for a in 0..self.degree {
            for b in 0..self.degree {
                out[self.color(a, b) as usize].push((a, b));
            }
        }
        out
    }
}

/// One row per point, colors separated by single spaces.
impl fmt::Display for TwoOrbitColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 0..self.degree {
            let row: Vec<String> = self.row(a).iter().map(u32::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for TwoOrbitColoring {
    type Err = GroupError;

    /// Parses the matrix format written by `Display`, re-canonicalizing ids.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<Vec<usize>> = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<usize>().map_err(|_| {
                            GroupError::InvalidPermutation(format!("bad color id {t:?}"))
                        })
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(GroupError::DegreeMismatch {
                expected: n,
                found: r.len(),
            });
        }
        let labels: Vec<usize> = rows.into_iter().flatten().collect();
        Ok(Self::canonical(n, &labels))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cs: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cs).unwrap()
    }

    #[test]
    fn trivial_group_has_discrete_pairs() {
        let c = TwoOrbitColoring::of_group(&PermGroup::trivial(2));
        assert_eq!(c.num_colors(), 4);
        assert_eq!(c.to_string(), "0 1\n2 3\n");
    }

    #[test]
    fn transposition_on_two_points() {
        let g = PermGroup::new(2, vec![cyc(2, &[&[0, 1]])]).unwrap();
        let c = TwoOrbitColoring::of_group(&g);
        assert_eq!(c.num_colors(), 2);
        assert_eq!(c.to_string(), "0 1\n1 0\n");
    }

    #[test]
    fn regular_cyclic_colors_by_difference() {
        // brute force for C_4: pair (a,b) lies in the class of difference b-a mod 4
        let g = PermGroup::new(4, vec![cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        let c = TwoOrbitColoring::of_group(&g);
        assert_eq!(c.num_colors(), 4);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(c.color(a, b), ((b + 4 - a) % 4) as u32);
            }
        }
    }

    #[test]
    fn preservation() {
        let g = PermGroup::new(3, vec![cyc(3, &[&[0, 1]])]).unwrap();
        let c = TwoOrbitColoring::of_group(&g);
        assert!(c.preserves(&cyc(3, &[&[0, 1]])).unwrap());
        assert!(!c.preserves(&cyc(3, &[&[0, 2]])).unwrap());
        assert!(c.preserves(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn same_partition_compares_partitions() {
        let t = TwoOrbitColoring::of_group(&PermGroup::trivial(3));
        let c3 = PermGroup::new(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        let c = TwoOrbitColoring::of_group(&c3);
        assert!(t.same_partition(&t).unwrap());
        assert_eq!((t.num_colors(), c.num_colors()), (9, 3));
        assert!(!t.same_partition(&c).unwrap());
    }

    #[test]
    fn text_round_trip() {
        let g = PermGroup::new(5, vec![cyc(5, &[&[0, 1, 2], &[3, 4]])]).unwrap();
        let c = TwoOrbitColoring::of_group(&g);
        let back: TwoOrbitColoring = c.to_string().parse().unwrap();
        assert_eq!(back, c);
        assert!("0 1\n2".parse::<TwoOrbitColoring>().is_err());
    }
}
