//! Seeded random instances for property runs: words, combinatorial galleries,
//! saturated subsystems, and galleries positioned anywhere in the chamber
//! complex. Every generator draws from an explicit RNG, so runs are
//! reproducible from their seed alone.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::comb::{CombGallery, Word};
use crate::gallery::Gallery;
use crate::roots::RootSystem;
use crate::subsys::Subsystem;
use crate::weyl::WeylGroup;

/// The stream cipher RNG used for all property runs.
pub type Rng = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng {
    Rng::seed_from_u64(seed)
}

/// Uniform-enough draw below `n`; the tiny modulo bias is irrelevant for
/// test-case generation and keeps the dependency surface minimal.
pub fn below(rng: &mut Rng, n: usize) -> usize {
    assert!(n > 0);
    (rng.next_u64() % n as u64) as usize
}

pub fn random_word(rng: &mut Rng, rs: &RootSystem, len: usize) -> Word {
    let letters = (0..len).map(|_| below(rng, rs.rank())).collect();
    Word::new(rs.clone(), letters).expect("letters drawn below the rank")
}

pub fn random_comb_gallery(rng: &mut Rng, rs: &RootSystem, len: usize) -> CombGallery {
    let word = random_word(rng, rs, len);
    let bits = (0..len).map(|_| rng.next_u64() & 1 == 1).collect();
    CombGallery::new(word, bits).expect("bit count matches word length")
}

/// A random saturated subsystem generated by one to `max_gens` roots.
pub fn random_saturated(rng: &mut Rng, rs: &RootSystem, max_gens: usize) -> Subsystem {
    let count = 1 + below(rng, max_gens);
    let gens: Vec<usize> = (0..count).map(|_| below(rng, rs.roots().len())).collect();
    Subsystem::saturate(rs, &gens).expect("generators are nonempty")
}

/// A random gallery of the given length starting at a random chamber: a
/// random combinatorial gallery moved by a random Weyl element.
pub fn random_gallery(rng: &mut Rng, weyl: &WeylGroup, len: usize) -> Gallery {
    let g = random_comb_gallery(rng, weyl.system(), len).gal();
    let w = &weyl.elements()[below(rng, weyl.order())];
    g.acted(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Family;

    #[test]
    fn reproducible_from_seed() {
        let rs = RootSystem::build_standard(Family::A, 3).unwrap();
        let a = random_comb_gallery(&mut rng(7), &rs, 6);
        let b = random_comb_gallery(&mut rng(7), &rs, 6);
        assert_eq!(a, b);
        let p = random_saturated(&mut rng(11), &rs, 2);
        let q = random_saturated(&mut rng(11), &rs, 2);
        assert_eq!(p.root_indices(), q.root_indices());
    }

    #[test]
    fn random_galleries_are_valid_and_saturated_subsystems_saturated() {
        let rs = RootSystem::build_standard(Family::A, 3).unwrap();
        let weyl = WeylGroup::enumerate(&rs).unwrap();
        let mut r = rng(3);
        for len in 0..6 {
            let g = random_gallery(&mut r, &weyl, len);
            assert_eq!(g.len(), len);
            let psi = random_saturated(&mut r, &rs, 2);
            assert!(psi.is_saturated());
        }
    }
}
