//! Root subsystems, saturation, chamber projection, and chamber lifting.
//!
//! A subsystem keeps a reference copy of its parent system together with its
//! own arrangement, so chambers over the subsystem reuse all of the chamber
//! machinery. Saturation (`span(Psi) meet Phi = Psi`) is computed once at
//! construction; it is exactly the condition under which chambers lift.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::linalg::{
    gram_schmidt, in_span, inner, orthogonal_complement, span_basis, strict_feasible, Vector,
};
use crate::roots::{Chamber, RootSystem, SimpleSystemCache};
use crate::weyl::WeylGroup;
use crate::Result;

/// Paired memos for the parent and subsystem arrangements, used by the
/// lifting predicates.
#[derive(Default, Debug)]
pub struct LiftCaches {
    pub parent: SimpleSystemCache,
    pub sub: SimpleSystemCache,
}

impl LiftCaches {
    pub fn new() -> Self {
        Self::default()
    }
}

/// A root subsystem of a fixed parent system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subsystem {
    parent: RootSystem,
    root_indices: Vec<usize>,
    system: RootSystem,
    span: Vec<Vector>,
    saturated: bool,
}

impl Subsystem {
    /// The saturation of a nonempty set of parent roots: all parent roots in
    /// the linear span of the generators. Always saturated.
    pub fn saturate(parent: &RootSystem, generators: &[usize]) -> Result<Subsystem> {
        if generators.is_empty() {
            return Err(Error::NotASubsystem("empty generating set".to_string()));
        }
        let gens: Vec<Vector> = generators.iter().map(|&i| parent.root(i).clone()).collect();
        let span = span_basis(&gens);
        let root_indices: Vec<usize> = (0..parent.roots().len())
            .filter(|&i| in_span(parent.root(i), &span))
            .collect();
        Self::assemble(parent, root_indices)
    }

    /// A subsystem consisting of exactly the given parent roots; validates
    /// closure under the subsystem's own reflections. Unlike [`Self::saturate`]
    /// the result may be unsaturated.
    pub fn from_root_subset(parent: &RootSystem, subset: &[usize]) -> Result<Subsystem> {
        if subset.is_empty() {
            return Err(Error::NotASubsystem("empty root set".to_string()));
        }
        let mut indices = subset.to_vec();
        indices.sort_unstable();
        indices.dedup();
        let vectors: Vec<Vector> = indices.iter().map(|&i| parent.root(i).clone()).collect();
        for a in &vectors {
            for b in &vectors {
                let r = crate::roots::reflect(a, b);
                if !vectors.contains(&r) {
                    return Err(Error::NotASubsystem(format!(
                        "not stable under its own reflections: reflecting {} through {} gives {}",
                        b, a, r
                    )));
                }
            }
        }
        Self::assemble(parent, indices)
    }

    /// The whole parent as a subsystem of itself.
    pub fn full(parent: &RootSystem) -> Subsystem {
        Self::assemble(parent, (0..parent.roots().len()).collect())
            .expect("a root system is a subsystem of itself")
    }

    fn assemble(parent: &RootSystem, root_indices: Vec<usize>) -> Result<Subsystem> {
        let vectors: Vec<Vector> = root_indices
            .iter()
            .map(|&i| parent.root(i).clone())
            .collect();
        let system =
            RootSystem::from_roots(&vectors).map_err(|e| Error::NotASubsystem(e.to_string()))?;
        let span = span_basis(&vectors);
        let saturated = (0..parent.roots().len())
            .all(|i| root_indices.binary_search(&i).is_ok() || !in_span(parent.root(i), &span));
        Ok(Subsystem {
            parent: parent.clone(),
            root_indices,
            system,
            span,
            saturated,
        })
    }

    pub fn parent(&self) -> &RootSystem {
        &self.parent
    }

    /// The subsystem as a root system in the same ambient space; chambers over
    /// the subsystem are chambers of this arrangement.
    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    /// Indices of the subsystem's roots in the parent's root list, ascending.
    pub fn root_indices(&self) -> &[usize] {
        &self.root_indices
    }

    /// Basis of the linear span of the subsystem.
    pub fn span(&self) -> &[Vector] {
        &self.span
    }

    /// Whether `span(Psi) meet Phi = Psi`.
    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn contains_parent_root(&self, index: usize) -> bool {
        self.root_indices.binary_search(&index).is_ok()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.system.root_index(v).is_some()
    }

    /// The unique chamber of the subsystem arrangement containing `c`: the
    /// restriction of the sign vector of `c` to the subsystem walls, with the
    /// witness reused. Defined for any subsystem, saturated or not.
    pub fn project_chamber(&self, c: &Chamber) -> Chamber {
        self.system
            .chamber_of_point(c.witness())
            .expect("a point off all parent walls is off all subsystem walls")
    }

    /// Whether the parent chamber `c` lifts the subsystem chamber `d`, i.e.
    /// the simple system of `d` is contained in the simple system of `c`.
    pub fn lifts(&self, c: &Chamber, d: &Chamber) -> bool {
        let mut caches = LiftCaches::new();
        self.lifts_cached(&mut caches, c, d)
    }

    /// As [`Self::lifts`], reusing memoized simple systems.
    pub fn lifts_cached(&self, caches: &mut LiftCaches, c: &Chamber, d: &Chamber) -> bool {
        let cs: Vec<&Vector> = caches
            .parent
            .get(&self.parent, c)
            .into_iter()
            .map(|i| self.parent.root(i))
            .collect();
        caches
            .sub
            .get(&self.system, d)
            .into_iter()
            .all(|i| cs.contains(&self.system.root(i)))
    }

    /// Whether the positive system of `d` is contained in the positive system
    /// of `c` (weaker than lifting).
    pub fn positive_contained(&self, c: &Chamber, d: &Chamber) -> bool {
        self.system
            .positive_system(d)
            .iter()
            .all(|&i| inner(c.witness(), self.system.root(i)).is_positive())
    }

    /// Canonical chamber of the parent lifting `d`, following the ordering
    /// construction of the existence proof: fix the deterministic orthogonal
    /// complement of `span(Psi)`, orthogonalize it by rational Gram-Schmidt,
    /// and order the ambient space lexicographically over these coordinates
    /// with ties (vectors inside the span) broken by the witness of `d`. The
    /// fundamental chamber of the resulting positive system lifts `d`.
    ///
    /// Errors when the subsystem is unsaturated, which is exactly the
    /// obstruction to lifting: an unsaturated subsystem admits no lifting
    /// chamber at all (the B2 short-root phenomenon).
    pub fn construct_lift(&self, d: &Chamber) -> Result<Chamber> {
        if !self.saturated {
            return Err(Error::NotSaturated(
                "lifting a chamber requires a saturated subsystem".to_string(),
            ));
        }
        let dim = self.parent.dim();
        let complement = gram_schmidt(&orthogonal_complement(&self.span, dim));
        let mut positives: Vec<Vector> = Vec::with_capacity(self.parent.roots().len() / 2);
        for root in self.parent.roots() {
            let coords: Vec<_> = complement
                .iter()
                .map(|f| inner(root, f) / inner(f, f))
                .collect();
            let lex = coords.iter().find(|c| !c.is_zero());
            let positive = match lex {
                Some(c) => c.is_positive(),
                None => {
                    // The root lies in span(Psi); by saturation it is a root of
                    // Psi, so the witness of d decides its sign. This is the
                    // ordering property (*): a root of the span is positive
                    // exactly when it is positive on d.
                    assert!(
                        self.contains(root),
                        "saturated subsystem misses a root of its span"
                    );
                    inner(root, d.witness()).is_positive()
                }
            };
            if positive {
                positives.push(root.clone());
            }
        }
        assert_eq!(positives.len() * 2, self.parent.roots().len());
        let witness = strict_feasible(&positives, &[]).ok_or_else(|| {
            Error::Internal("constructed ordering has an empty fundamental chamber".to_string())
        })?;
        let chamber = self
            .parent
            .chamber_of_point(&witness)
            .expect("feasible witness is off every wall");
        assert!(self.lifts(&chamber, d), "constructed chamber fails to lift");
        Ok(chamber)
    }

    /// Every parent chamber lifting `d`, in Weyl enumeration order. Empty for
    /// unsaturated subsystems.
    pub fn all_lifts(&self, d: &Chamber) -> Result<Vec<Chamber>> {
        let weyl = WeylGroup::enumerate(&self.parent)?;
        Ok(self.all_lifts_with(&weyl, d))
    }

    /// As [`Self::all_lifts`], reusing an existing enumeration.
    pub fn all_lifts_with(&self, weyl: &WeylGroup, d: &Chamber) -> Vec<Chamber> {
        let mut caches = LiftCaches::new();
        weyl.chambers()
            .iter()
            .filter(|c| self.lifts_cached(&mut caches, c, d))
            .cloned()
            .collect()
    }

    /// The lifting criterion through an intermediate chamber: `c` lifts the
    /// projection of `d` if and only if `X = Psi^s(d_Psi)` sits inside
    /// `Phi^s(c) meet Phi^+(d)` and regenerates the subsystem by saturation.
    /// Always equal to `lifts(c, project_chamber(d))`.
    pub fn lemma2_check(&self, c: &Chamber, d: &Chamber) -> bool {
        let d_psi = self.project_chamber(d);
        let x: Vec<Vector> = self
            .system
            .simple_system(&d_psi)
            .iter()
            .map(|&i| self.system.root(i).clone())
            .collect();
        let cs: Vec<Vector> = self
            .parent
            .simple_system(c)
            .iter()
            .map(|&i| self.parent.root(i).clone())
            .collect();
        let contained = x
            .iter()
            .all(|v| cs.contains(v) && inner(d.witness(), v).is_positive());
        if !contained {
            return false;
        }
        let gens: Vec<usize> = x
            .iter()
            .map(|v| {
                self.parent
                    .root_index(v)
                    .expect("subsystem roots are parent roots")
            })
            .collect();
        let regenerated =
            Subsystem::saturate(&self.parent, &gens).expect("nonempty generating set");
        regenerated.root_indices == self.root_indices
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_int;
    use crate::roots::Family;

    fn a3() -> RootSystem {
        RootSystem::build_standard(Family::A, 3).unwrap()
    }

    fn root_idx(rs: &RootSystem, coords: &[i64]) -> usize {
        rs.root_index(&Vector::from_ints(coords)).unwrap()
    }

    #[test]
    fn saturate_examples() {
        let rs = a3();
        // span{alpha1+alpha2, alpha3} meets the system in a six-root A2 copy.
        let psi1 = Subsystem::saturate(
            &rs,
            &[root_idx(&rs, &[1, 0, -1, 0]), root_idx(&rs, &[0, 0, 1, -1])],
        )
        .unwrap();
        assert_eq!(psi1.root_indices().len(), 6);
        assert!(psi1.is_saturated());
        assert!(psi1.contains(&Vector::from_ints(&[1, 0, 0, -1])));
        // span{alpha2+alpha3} meets the system in just the pair.
        let psi2 = Subsystem::saturate(&rs, &[root_idx(&rs, &[0, 1, 0, -1])]).unwrap();
        assert_eq!(psi2.root_indices().len(), 2);
        let full = Subsystem::saturate(&rs, &(0..12).collect::<Vec<_>>()).unwrap();
        assert_eq!(full.root_indices().len(), 12);
    }

    #[test]
    fn b2_short_roots_unsaturated() {
        let b2 = RootSystem::build_standard(Family::B, 2).unwrap();
        let shorts: Vec<usize> = (0..b2.roots().len())
            .filter(|&i| inner(b2.root(i), b2.root(i)) == rat_int(1))
            .collect();
        let psi = Subsystem::from_root_subset(&b2, &shorts).unwrap();
        assert!(!psi.is_saturated());
        // The saturation of the same generators is the whole system.
        let sat = Subsystem::saturate(&b2, &shorts).unwrap();
        assert!(sat.is_saturated());
        assert_eq!(sat.root_indices().len(), 8);
    }

    #[test]
    fn rank_one_saturated_in_a2() {
        let a2 = RootSystem::build_standard(Family::A, 2).unwrap();
        let psi = Subsystem::saturate(&a2, &[root_idx(&a2, &[1, -1, 0])]).unwrap();
        assert!(psi.is_saturated());
        assert_eq!(psi.root_indices().len(), 2);
    }

    #[test]
    fn projection_restricts_signs() {
        let rs = a3();
        let psi = Subsystem::saturate(
            &rs,
            &[root_idx(&rs, &[1, 0, -1, 0]), root_idx(&rs, &[0, 0, 1, -1])],
        )
        .unwrap();
        let a = rs.fundamental_chamber();
        let a_psi = psi.project_chamber(a);
        for (h, hp) in psi.system().hyperplanes().iter().enumerate() {
            let parent_wall = rs.wall_of(&hp.normal).unwrap();
            assert_eq!(
                a_psi.signs()[h],
                a.sign(parent_wall),
                "projection must restrict the sign vector"
            );
        }
        let full = Subsystem::full(&rs);
        assert_eq!(&full.project_chamber(a), a);
    }

    #[test]
    fn construct_lift_lifts() {
        let rs = a3();
        let psi = Subsystem::saturate(
            &rs,
            &[root_idx(&rs, &[1, 0, -1, 0]), root_idx(&rs, &[0, 0, 1, -1])],
        )
        .unwrap();
        let d = psi.project_chamber(rs.fundamental_chamber());
        let c = psi.construct_lift(&d).unwrap();
        assert!(psi.lifts(&c, &d));
        assert_eq!(psi.project_chamber(&c), d);
        let lifts = psi.all_lifts(&d).unwrap();
        assert!(lifts.contains(&c));
    }

    #[test]
    fn unsaturated_subsystem_has_no_lifts() {
        let b2 = RootSystem::build_standard(Family::B, 2).unwrap();
        let shorts: Vec<usize> = (0..8)
            .filter(|&i| inner(b2.root(i), b2.root(i)) == rat_int(1))
            .collect();
        let psi = Subsystem::from_root_subset(&b2, &shorts).unwrap();
        let d = psi.project_chamber(b2.fundamental_chamber());
        assert!(matches!(
            psi.construct_lift(&d),
            Err(Error::NotSaturated(_))
        ));
        assert!(psi.all_lifts(&d).unwrap().is_empty());
    }
}
