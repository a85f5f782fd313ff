//! Weyl group enumeration and the Bruhat order.
//!
//! Elements are enumerated by breadth-first closure over the simple
//! reflections of the fundamental chamber, so the stored words are reduced and
//! the identity comes first. The chamber map `w -> wA` is a bijection onto the
//! chambers of the arrangement, which gives deterministic chamber lookups.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::Matrix;
use crate::roots::{Chamber, RootSystem, Sign, WeylElement};
use crate::Result;

/// Hard cap on the enumeration; the systems in scope stay far below it.
const BUDGET: usize = 200_000;

/// Complete enumeration of the group generated by the reflections of a root
/// system, with the chamber `wA` cached per element.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    system: RootSystem,
    elements: Vec<WeylElement>,
    chambers: Vec<Chamber>,
    by_signs: BTreeMap<Vec<Sign>, usize>,
}

impl WeylGroup {
    /// Breadth-first closure over right multiplication by the simple
    /// reflections; deterministic order, identity first, words reduced.
    pub fn enumerate(system: &RootSystem) -> Result<WeylGroup> {
        let gens: Vec<WeylElement> = (0..system.rank())
            .map(|l| system.simple_reflection(l))
            .collect();
        let mut elements: Vec<WeylElement> = alloc::vec![WeylElement::identity(system.dim())];
        let mut seen: BTreeMap<Matrix, usize> = BTreeMap::new();
        seen.insert(elements[0].matrix().clone(), 0);
        let mut frontier: Vec<usize> = alloc::vec![0];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &idx in &frontier {
                for g in &gens {
                    let w = elements[idx].compose(g);
                    if !seen.contains_key(w.matrix()) {
                        seen.insert(w.matrix().clone(), elements.len());
                        next.push(elements.len());
                        elements.push(w);
                        if elements.len() > BUDGET {
                            return Err(Error::BudgetExceeded(
                                "Weyl group larger than the enumeration budget".to_string(),
                            ));
                        }
                    }
                }
            }
            frontier = next;
        }
        let chambers: Vec<Chamber> = elements
            .iter()
            .map(|w| system.act_on_chamber(w, system.fundamental_chamber()))
            .collect();
        let by_signs: BTreeMap<Vec<Sign>, usize> = chambers
            .iter()
            .enumerate()
            .map(|(i, c)| (c.signs().to_vec(), i))
            .collect();
        if by_signs.len() != chambers.len() {
            return Err(Error::Internal(
                "w -> wA failed to be injective".to_string(),
            ));
        }
        Ok(WeylGroup {
            system: system.clone(),
            elements,
            chambers,
            by_signs,
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn chamber(&self, i: usize) -> &Chamber {
        &self.chambers[i]
    }

    /// The element `w` with `wA = c`, when `c` is a chamber of this
    /// arrangement.
    pub fn element_of_chamber(&self, c: &Chamber) -> Option<&WeylElement> {
        self.by_signs
            .get(c.signs())
            .map(|&i| &self.elements[i])
    }
}

/// Length of `w`: the number of positive roots sent to negative roots.
pub fn length(rs: &RootSystem, w: &WeylElement) -> usize {
    rs.positive_indices()
        .iter()
        .filter(|&&i| w.apply(rs.root(i)).lex_sign() < 0)
        .count()
}

/// Whether the simple reflection `letter` is a right descent of `w`, i.e.
/// `l(w s) < l(w)`.
pub fn is_right_descent(rs: &RootSystem, w: &WeylElement, letter: usize) -> bool {
    w.apply(rs.simple_root(letter)).lex_sign() < 0
}

/// The lexicographically smallest reduced word of `w`, recomputed from the
/// matrix by peeling right descents.
pub fn reduced_word(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    let mut w = w.clone();
    let mut rev = Vec::new();
    while !w.is_identity() {
        let letter = (0..rs.rank())
            .find(|&l| is_right_descent(rs, &w, l))
            .expect("a non-identity element has a right descent");
        w = w.compose(&rs.simple_reflection(letter));
        rev.push(letter);
    }
    rev.reverse();
    rev
}

/// Bruhat order `x <= y`, decided by the subword descent recursion on a fixed
/// reduced word of `y`: scanning that word right to left, fold each letter
/// into `x` whenever it is a right descent; `x <= y` exactly when `x` is
/// reduced to the identity.
pub fn bruhat_leq(rs: &RootSystem, x: &WeylElement, y: &WeylElement) -> bool {
    if length(rs, x) > length(rs, y) {
        return false;
    }
    let word = reduced_word(rs, y);
    let mut u = x.clone();
    for &letter in word.iter().rev() {
        if is_right_descent(rs, &u, letter) {
            u = u.compose(&rs.simple_reflection(letter));
        }
    }
    u.is_identity()
}

/// Strict Bruhat order.
pub fn bruhat_lt(rs: &RootSystem, x: &WeylElement, y: &WeylElement) -> bool {
    x != y && bruhat_leq(rs, x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Family;

    #[test]
    fn orders() {
        let a2 = RootSystem::build_standard(Family::A, 2).unwrap();
        assert_eq!(WeylGroup::enumerate(&a2).unwrap().order(), 6);
        let b2 = RootSystem::build_standard(Family::B, 2).unwrap();
        assert_eq!(WeylGroup::enumerate(&b2).unwrap().order(), 8);
        let a3 = RootSystem::build_standard(Family::A, 3).unwrap();
        assert_eq!(WeylGroup::enumerate(&a3).unwrap().order(), 24);
    }

    #[test]
    fn identity_first_and_words_reduced() {
        let a2 = RootSystem::build_standard(Family::A, 2).unwrap();
        let w = WeylGroup::enumerate(&a2).unwrap();
        assert!(w.elements()[0].is_identity());
        for e in w.elements() {
            assert_eq!(e.word().unwrap().len(), length(&a2, e));
        }
    }

    #[test]
    fn bruhat_basics() {
        let a2 = RootSystem::build_standard(Family::A, 2).unwrap();
        let id = WeylElement::identity(a2.dim());
        let s1 = a2.simple_reflection(0);
        let s1s2 = a2.element_from_word(&[0, 1]);
        let s2s1 = a2.element_from_word(&[1, 0]);
        let w = WeylGroup::enumerate(&a2).unwrap();
        for e in w.elements() {
            assert!(bruhat_leq(&a2, &id, e));
        }
        assert!(bruhat_leq(&a2, &s1, &s1s2));
        assert!(!bruhat_leq(&a2, &s1s2, &s2s1));
    }
}
