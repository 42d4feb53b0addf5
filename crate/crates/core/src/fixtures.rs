//! Named example groups and seeded random instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Adds `shift` (mod `len`) on the block `start..start + len`.
fn shift_block(images: &mut [usize], start: usize, len: usize, shift: usize) {
    for k in 0..len {
        images[start + k] = start + (k + shift) % len;
    }
}

fn check_prime(p: usize) -> Result<()> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(GroupError::NotPrime(p))
    }
}

/// The generators `a`, `b` of the elementary abelian group of order `p^2` on
/// three orbits of size `p`, placed at `offset` inside a set of `degree` points.
///
/// `a` shifts orbits 1 and 3, `b` shifts orbits 2 and 3, so the kernels of
/// the three orbits are `<b>`, `<a>` and `<a b^-1>`.
fn example1_generators(p: usize, offset: usize, degree: usize) -> (Vec<usize>, Vec<usize>) {
    let mut a: Vec<usize> = (0..degree).collect();
    let mut b = a.clone();
    shift_block(&mut a, offset, p, 1);
    shift_block(&mut a, offset + 2 * p, p, 1);
    shift_block(&mut b, offset + p, p, 1);
    shift_block(&mut b, offset + 2 * p, p, 1);
    (a, b)
}

/// Elementary abelian group of order `p^2` with three orbits of size `p`
/// whose point stabilizers are pairwise distinct.
pub fn example1(p: usize) -> Result<PermGroup> {
    check_prime(p)?;
    let (a, b) = example1_generators(p, 0, 3 * p);
    PermGroup::new(
        3 * p,
        vec![
            Permutation::from_images_unchecked(a),
            Permutation::from_images_unchecked(b),
        ],
    )
}

/// Two copies of [`example1`] on points `0..3p` and `3p..6p`, glued so each
/// element acts the same way on both copies.
pub fn example2(p: usize) -> Result<PermGroup> {
    check_prime(p)?;
    let n = 6 * p;
    let (mut a, mut b) = example1_generators(p, 0, n);
    let (a2, b2) = example1_generators(p, 3 * p, n);
    a[3 * p..].copy_from_slice(&a2[3 * p..]);
    b[3 * p..].copy_from_slice(&b2[3 * p..]);
    PermGroup::new(
        n,
        vec![
            Permutation::from_images_unchecked(a),
            Permutation::from_images_unchecked(b),
        ],
    )
}

/// A block of points carrying the regular action of `Z_{m1} x ... x Z_{mk}`.
struct Block {
    start: usize,
    moduli: Vec<usize>,
}

impl Block {
    fn len(&self) -> usize {
        self.moduli.iter().product()
    }

    /// Writes the translation by `shift` (one entry per modulus) into `images`.
    fn translate(&self, images: &mut [usize], shift: &[usize]) {
        let len = self.len();
        let mut digits = vec![0; self.moduli.len()];
        for x in 0..len {
            // mixed radix, first modulus least significant
            let mut rest = x;
            for (d, &m) in digits.iter_mut().zip(&self.moduli) {
                *d = rest % m;
                rest /= m;
            }
            let mut y = 0;
            let mut scale = 1;
            for ((&d, &m), &s) in digits.iter().zip(&self.moduli).zip(shift) {
                y += scale * ((d + s) % m);
                scale *= m;
            }
            images[self.start + x] = self.start + y;
        }
    }
}

fn assemble(blocks: &[Block], shifts: &[Vec<Vec<usize>>]) -> PermGroup {
    let degree: usize = blocks.iter().map(Block::len).sum();
    let gens = shifts
        .iter()
        .map(|per_block| {
            let mut images: Vec<usize> = (0..degree).collect();
            for (block, shift) in blocks.iter().zip(per_block) {
                block.translate(&mut images, shift);
            }
            Permutation::from_images_unchecked(images)
        })
        .collect();
    PermGroup::new(degree, gens).expect("generators built on the assembled degree")
}

fn prime_powers_up_to(primes: &[usize], bound: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for &p in primes {
        let mut q = p;
        while q <= bound {
            out.push(q);
            q *= p;
        }
    }
    out
}

/// A deterministic abelian group whose transitive constituents are cyclic.
///
/// Orbit sizes are prime powers (occasionally 1) with total at most
/// `max_degree`; each orbit carries a regular cyclic action and every
/// generator shifts several orbits at once. Equal-size orbits sometimes reuse
/// the same shift of an earlier orbit, giving diagonal actions.
pub fn random_abelian_cyclic(seed: u64, max_degree: usize) -> PermGroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_degree = max_degree.max(1);
    let primes: Vec<usize> = {
        let pool: Vec<usize> = [2, 3, 5, 7]
            .into_iter()
            .filter(|&p| p <= max_degree)
            .collect();
        if pool.is_empty() {
            vec![]
        } else if rng.gen_bool(0.6) {
            vec![*pool.choose(&mut rng).unwrap()]
        } else {
            let mut two: Vec<usize> = pool.choose_multiple(&mut rng, 2).copied().collect();
            two.sort_unstable();
            two
        }
    };
    let mut sizes = Vec::new();
    let mut used = 0;
    let target = rng.gen_range(1..=max_degree);
    // most instances use many orbits of one small size, where the
    // interesting non-closed configurations live
    if let Some(&p) = primes.first().filter(|_| rng.gen_bool(0.7)) {
        let size = if p * p <= max_degree / 3 && rng.gen_bool(0.25) {
            p * p
        } else {
            p
        };
        let count = rng.gen_range(1..=max_degree / size);
        sizes = vec![size; count];
        used = size * count;
        if used < max_degree && rng.gen_bool(0.2) {
            sizes.push(1);
            used += 1;
        }
    }
    while sizes.is_empty() || used < target {
        let choices = prime_powers_up_to(&primes, max_degree - used);
        let size = if choices.is_empty() || rng.gen_bool(0.08) {
            1
        } else {
            *choices.choose(&mut rng).unwrap()
        };
        sizes.push(size);
        used += size;
    }
    let mut blocks = Vec::new();
    let mut start = 0;
    for &s in &sizes {
        blocks.push(Block {
            start,
            moduli: vec![s],
        });
        start += s;
    }

    let num_gens = if sizes.len() >= 3 {
        rng.gen_range(2..=(sizes.len() - 1).min(4))
    } else {
        rng.gen_range(1..=2)
    };
    let mut shifts: Vec<Vec<Vec<usize>>> = vec![Vec::with_capacity(sizes.len()); num_gens];
    for (i, &s) in sizes.iter().enumerate() {
        let twin = (0..i).rfind(|&j| sizes[j] == s);
        let copy = twin.is_some() && rng.gen_bool(0.25);
        for gen_shifts in shifts.iter_mut() {
            let shift = match twin {
                Some(j) if copy => gen_shifts[j][0],
                _ => rng.gen_range(0..s),
            };
            gen_shifts.push(vec![shift]);
        }
        // one generator must act as a full cycle so the block stays an orbit
        if s > 1 && shifts.iter().all(|g| arith::gcd(g[i][0], s) != 1) {
            let k = rng.gen_range(0..num_gens);
            let unit = loop {
                let u = rng.gen_range(1..s);
                if arith::gcd(u, s) == 1 {
                    break u;
                }
            };
            shifts[k][i][0] = unit;
        }
    }
    assemble(&blocks, &shifts)
}

/// A deterministic abelian group on at most `max_degree` points whose
/// orbits carry regular actions of arbitrary abelian groups; constituents
/// need not be cyclic.
pub fn random_abelian(seed: u64, max_degree: usize) -> PermGroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_degree = max_degree.max(1);
    let mut blocks = Vec::new();
    let mut start = 0;
    let target = rng.gen_range(1..=max_degree);
    while start < target {
        let room = max_degree - start;
        let moduli = random_moduli(&mut rng, room);
        let block = Block { start, moduli };
        start += block.len();
        blocks.push(block);
    }
    let num_gens = rng.gen_range(1..=3);
    let shifts = (0..num_gens)
        .map(|_| {
            blocks
                .iter()
                .map(|b| b.moduli.iter().map(|&m| rng.gen_range(0..m)).collect())
                .collect()
        })
        .collect::<Vec<_>>();
    assemble(&blocks, &shifts)
}

/// Cyclic factor orders with product at most `room` (empty for a fixed point).
fn random_moduli(rng: &mut ChaCha8Rng, room: usize) -> Vec<usize> {
    let mut moduli = Vec::new();
    let mut product = 1;
    while product * 2 <= room && (moduli.is_empty() || rng.gen_bool(0.35)) {
        let m = rng.gen_range(2..=room / product);
        moduli.push(m);
        product *= m;
    }
    moduli
}

/// A deterministic transitive abelian group: the regular action of a random
/// `Z_{m1} x ... x Z_{mk}` on `2..=max_degree` points.
pub fn random_transitive_abelian(seed: u64, max_degree: usize) -> PermGroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_degree = max_degree.max(2);
    let moduli = random_moduli(&mut rng, max_degree);
    let block = Block { start: 0, moduli };
    let k = block.moduli.len();
    let shifts: Vec<Vec<Vec<usize>>> = (0..k)
        .map(|i| {
            let mut e = vec![0; k];
            e[i] = 1;
            vec![e]
        })
        .collect();
    assemble(&[block], &shifts)
}
