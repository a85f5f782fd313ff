//! Finite root systems, reflections, chambers, and positive/simple systems.
//!
//! A root system here is a finite set of nonzero rational vectors, reduced,
//! closed under negation and under its own reflections. It need not span the
//! ambient space and need not be crystallographic. Chambers are the connected
//! components of the complement of the reflection arrangement; each one is
//! stored as a sign vector over the walls together with an exact rational
//! witness point, so every predicate reduces to sign tests on the witness.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::linalg::{inner, nonneg_combination, rat_int, strict_feasible, Matrix, Rat, Vector};
use crate::Result;

/// Standard families available from [`RootSystem::build_standard`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
            Family::G2 => write!(f, "G2"),
        }
    }
}

/// Side of a hyperplane.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Sign of a nonzero rational; `None` for zero.
    pub fn of(r: &Rat) -> Option<Sign> {
        if r.is_positive() {
            Some(Sign::Plus)
        } else if r.is_negative() {
            Some(Sign::Minus)
        } else {
            None
        }
    }
}

/// Index of a wall in the owning system's hyperplane list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HyperplaneId(pub usize);

/// Wall of the arrangement. `normal` is the representative of `{alpha, -alpha}`
/// whose first nonzero coordinate is positive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hyperplane {
    pub normal: Vector,
}

/// Element of the group generated by the reflections of a root system: an
/// orthogonal rational matrix, with an optional word in the simple reflections
/// kept as metadata. Equality, ordering, and hashing use the matrix only.
#[derive(Clone, Debug)]
pub struct WeylElement {
    matrix: Matrix,
    word: Option<Vec<usize>>,
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        WeylElement {
            matrix: Matrix::identity(dim),
            word: Some(Vec::new()),
        }
    }

    pub fn from_matrix(matrix: Matrix) -> Self {
        WeylElement { matrix, word: None }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Word in simple reflections recorded at construction, if any.
    pub fn word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.apply(v)
    }

    /// Group product `self * other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                Some(w)
            }
            _ => None,
        };
        WeylElement {
            matrix: self.matrix.mul(&other.matrix),
            word,
        }
    }

    /// Inverse element. The matrix is orthogonal with respect to the standard
    /// scalar product, so the inverse is the transpose.
    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            matrix: self.matrix.transpose(),
            word: self.word.as_ref().map(|w| {
                let mut r = w.clone();
                r.reverse();
                r
            }),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}
impl Eq for WeylElement {}
impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.matrix.cmp(&other.matrix)
    }
}

/// Connected component of the arrangement complement: a sign per wall plus a
/// rational interior point certifying that the sign vector is realizable.
/// Equality compares the sign vectors; chambers are only comparable within a
/// fixed arrangement.
#[derive(Clone, Debug)]
pub struct Chamber {
    signs: Vec<Sign>,
    witness: Vector,
}

impl Chamber {
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, h: HyperplaneId) -> Sign {
        self.signs[h.0]
    }

    pub fn witness(&self) -> &Vector {
        &self.witness
    }
}

impl PartialEq for Chamber {
    fn eq(&self, other: &Self) -> bool {
        self.signs == other.signs
    }
}
impl Eq for Chamber {}

/// The reflection of `v` through the hyperplane perpendicular to `alpha`.
pub fn reflect(alpha: &Vector, v: &Vector) -> Vector {
    assert!(!alpha.is_zero(), "cannot reflect through the zero vector");
    let c = rat_int(2) * inner(v, alpha) / inner(alpha, alpha);
    v.sub(&alpha.scaled(&c))
}

/// A finite reduced root system with its canonical arrangement data: roots and
/// walls ordered lexicographically, the lexicographic positive system, its
/// fundamental chamber, and the simple roots.
///
/// Equality is structural: same ambient dimension and same root set. The
/// family tag is display metadata and the remaining fields are canonical
/// functions of the roots.
#[derive(Clone, Eq, Debug)]
pub struct RootSystem {
    family: Option<(Family, usize)>,
    dim: usize,
    roots: Vec<Vector>,
    hyperplanes: Vec<Hyperplane>,
    root_hyperplane: Vec<usize>,
    positive: Vec<usize>,
    simples: Vec<usize>,
    fundamental: Chamber,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.roots == other.roots
    }
}

impl RootSystem {
    /// Standard integer-coordinate realization of a classical family: `A_n` in
    /// the sum-zero hyperplane of dimension `n+1`, `B_n`/`C_n`/`D_n` in
    /// dimension `n`, and `G2` in dimension 3 inside the sum-zero plane.
    pub fn build_standard(family: Family, rank: usize) -> Result<RootSystem> {
        let mut roots: Vec<Vector> = Vec::new();
        let mut push = |cs: Vec<i64>| roots.push(Vector::from_ints(&cs));
        match family {
            Family::A => {
                if rank < 1 {
                    return Err(Error::InvalidRank { family: "A", rank });
                }
                let d = rank + 1;
                for i in 0..d {
                    for j in 0..d {
                        if i != j {
                            let mut c = alloc::vec![0i64; d];
                            c[i] = 1;
                            c[j] = -1;
                            push(c);
                        }
                    }
                }
            }
            Family::B | Family::C | Family::D => {
                if rank < 2 {
                    let name = match family {
                        Family::B => "B",
                        Family::C => "C",
                        _ => "D",
                    };
                    return Err(Error::InvalidRank { family: name, rank });
                }
                let d = rank;
                for i in 0..d {
                    for j in (i + 1)..d {
                        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            let mut c = alloc::vec![0i64; d];
                            c[i] = si;
                            c[j] = sj;
                            push(c);
                        }
                    }
                }
                let axis = match family {
                    Family::B => Some(1),
                    Family::C => Some(2),
                    _ => None,
                };
                if let Some(len) = axis {
                    for i in 0..d {
                        for s in [len, -len] {
                            let mut c = alloc::vec![0i64; d];
                            c[i] = s;
                            push(c);
                        }
                    }
                }
            }
            Family::G2 => {
                if rank != 2 {
                    return Err(Error::InvalidRank { family: "G2", rank });
                }
                for (i, j) in [(0, 1), (1, 2), (0, 2)] {
                    for s in [1, -1] {
                        let mut c = alloc::vec![0i64; 3];
                        c[i] = s;
                        c[j] = -s;
                        push(c);
                    }
                }
                for perm in [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]] {
                    for s in [1i64, -1] {
                        push(perm.iter().map(|&x| s * x).collect());
                    }
                }
            }
        }
        let mut rs = Self::from_roots(&roots)?;
        rs.family = Some((family, rank));
        Ok(rs)
    }

    /// Validate an arbitrary set of vectors as a root system.
    pub fn from_roots(vs: &[Vector]) -> Result<RootSystem> {
        let Some(first) = vs.first() else {
            return Err(Error::NotARootSystem("empty root set".to_string()));
        };
        let dim = first.dim();
        if vs.iter().any(|v| v.dim() != dim) {
            return Err(Error::NotARootSystem("mixed ambient dimensions".to_string()));
        }
        if vs.iter().any(Vector::is_zero) {
            return Err(Error::NotARootSystem("zero vector present".to_string()));
        }
        let mut roots: Vec<Vector> = vs.to_vec();
        roots.sort();
        roots.dedup();
        for v in &roots {
            if roots.binary_search(&v.neg()).is_err() {
                return Err(Error::NotARootSystem(format!(
                    "not closed under negation: missing {}",
                    v.neg()
                )));
            }
        }
        // Reduced: the only multiple of a root that is a root is its negative.
        for (i, a) in roots.iter().enumerate() {
            let p = a.coords().iter().position(|c| !c.is_zero()).unwrap();
            for b in roots.iter().skip(i + 1) {
                if b.coords()[p].is_zero() {
                    continue;
                }
                let c = &b.coords()[p] / &a.coords()[p];
                if a.scaled(&c) == *b && c != rat_int(-1) && c != rat_int(1) {
                    return Err(Error::NotARootSystem(format!(
                        "not reduced: {} and {} are proportional",
                        a, b
                    )));
                }
            }
        }
        for a in &roots {
            for b in &roots {
                let r = reflect(a, b);
                if roots.binary_search(&r).is_err() {
                    return Err(Error::NotARootSystem(format!(
                        "not stable under its reflections: reflecting {} through {} gives {}",
                        b, a, r
                    )));
                }
            }
        }

        let positive: Vec<usize> = (0..roots.len()).filter(|&i| roots[i].lex_sign() > 0).collect();
        let hyperplanes: Vec<Hyperplane> = positive
            .iter()
            .map(|&i| Hyperplane {
                normal: roots[i].clone(),
            })
            .collect();
        let root_hyperplane: Vec<usize> = roots
            .iter()
            .map(|r| {
                let canon = if r.lex_sign() > 0 { r.clone() } else { r.neg() };
                hyperplanes
                    .iter()
                    .position(|h| h.normal == canon)
                    .expect("canonical representative present")
            })
            .collect();

        let positive_vectors: Vec<Vector> = positive.iter().map(|&i| roots[i].clone()).collect();
        let witness = strict_feasible(&positive_vectors, &[]).ok_or_else(|| {
            Error::Internal("lexicographic positive system has an empty fundamental chamber".to_string())
        })?;
        let fundamental = Chamber {
            signs: alloc::vec![Sign::Plus; hyperplanes.len()],
            witness,
        };

        let mut rs = RootSystem {
            family: None,
            dim,
            roots,
            hyperplanes,
            root_hyperplane,
            positive,
            simples: Vec::new(),
            fundamental,
        };
        let mut simples = rs.simple_system(&rs.fundamental);
        // Word letters index the simple roots in descending lexicographic
        // order; for the standard A/B/C realizations this reproduces the
        // textbook numbering alpha_1, ..., alpha_n.
        simples.sort_by(|&a, &b| rs.roots[b].cmp(&rs.roots[a]));
        rs.simples = simples;
        Ok(rs)
    }

    pub fn family(&self) -> Option<(Family, usize)> {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Vector {
        &self.roots[i]
    }

    pub fn root_index(&self, v: &Vector) -> Option<usize> {
        self.roots.binary_search(v).ok()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, h: HyperplaneId) -> &Hyperplane {
        &self.hyperplanes[h.0]
    }

    /// Wall of the root with the given index.
    pub fn wall_of_root(&self, root_index: usize) -> HyperplaneId {
        HyperplaneId(self.root_hyperplane[root_index])
    }

    /// Wall perpendicular to `v`, if `v` is (up to sign) a root.
    pub fn wall_of(&self, v: &Vector) -> Option<HyperplaneId> {
        self.root_index(v).map(|i| self.wall_of_root(i))
    }

    /// Indices of the lexicographically positive roots; these are exactly the
    /// canonical wall normals, in the same order as [`Self::hyperplanes`].
    pub fn positive_indices(&self) -> &[usize] {
        &self.positive
    }

    /// The fundamental chamber of the canonical (lexicographic) positive
    /// system.
    pub fn fundamental_chamber(&self) -> &Chamber {
        &self.fundamental
    }

    /// Indices of the simple roots of the fundamental chamber, in the order
    /// used by word letters.
    pub fn simple_indices(&self) -> &[usize] {
        &self.simples
    }

    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn simple_root(&self, letter: usize) -> &Vector {
        &self.roots[self.simples[letter]]
    }

    /// The simple reflection with the given letter index.
    pub fn simple_reflection(&self, letter: usize) -> WeylElement {
        WeylElement {
            matrix: Matrix::reflection(self.simple_root(letter)),
            word: Some(alloc::vec![letter]),
        }
    }

    /// Product of simple reflections, left to right.
    pub fn element_from_word(&self, word: &[usize]) -> WeylElement {
        let mut m = Matrix::identity(self.dim);
        for &l in word {
            m = m.mul(&Matrix::reflection(self.simple_root(l)));
        }
        WeylElement {
            matrix: m,
            word: Some(word.to_vec()),
        }
    }

    /// Whether a root is positive for the canonical positive system. This is
    /// equivalent to lexicographic positivity of its coordinates.
    pub fn is_positive_root(&self, v: &Vector) -> bool {
        debug_assert!(self.root_index(v).is_some());
        v.lex_sign() > 0
    }

    /// The chamber containing `x`; errors if `x` lies on some wall.
    pub fn chamber_of_point(&self, x: &Vector) -> Result<Chamber> {
        let mut signs = Vec::with_capacity(self.hyperplanes.len());
        for h in &self.hyperplanes {
            match Sign::of(&inner(x, &h.normal)) {
                Some(s) => signs.push(s),
                None => return Err(Error::PointOnWall(h.normal.to_string())),
            }
        }
        Ok(Chamber {
            signs,
            witness: x.clone(),
        })
    }

    /// Image of a chamber under the reflection through `L_alpha`.
    pub fn reflect_chamber(&self, alpha: &Vector, c: &Chamber) -> Chamber {
        self.chamber_of_point(&reflect(alpha, c.witness()))
            .expect("reflections permute chambers")
    }

    /// Image of a chamber under a Weyl element.
    pub fn act_on_chamber(&self, w: &WeylElement, c: &Chamber) -> Chamber {
        self.chamber_of_point(&w.apply(c.witness()))
            .expect("the Weyl group permutes chambers")
    }

    /// Indices of the roots positive on `c`, ascending.
    pub fn positive_system(&self, c: &Chamber) -> Vec<usize> {
        (0..self.roots.len())
            .filter(|&i| inner(c.witness(), &self.roots[i]).is_positive())
            .collect()
    }

    /// Indices of the simple system of `c`: the indecomposable elements of its
    /// positive system, ascending. A positive root is decomposable exactly
    /// when it is a nonnegative rational combination of the other positive
    /// roots, decided by exact feasibility.
    pub fn simple_system(&self, c: &Chamber) -> Vec<usize> {
        let pos = self.positive_system(c);
        pos.iter()
            .copied()
            .filter(|&i| {
                let others: Vec<Vector> = pos
                    .iter()
                    .filter(|&&j| j != i)
                    .map(|&j| self.roots[j].clone())
                    .collect();
                nonneg_combination(&self.roots[i], &others).is_none()
            })
            .collect()
    }

    /// Simple system of `c` computed from wall geometry instead: the walls of
    /// `c` are the non-redundant sign constraints, and the simple roots are
    /// their representatives positive on `c`. Cross-checked against
    /// [`Self::simple_system`] in tests.
    pub fn simple_system_by_walls(&self, c: &Chamber) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.hyperplanes.len())
            .filter(|&h| self.attached(c, HyperplaneId(h)))
            .map(|h| {
                let n = &self.hyperplanes[h].normal;
                let idx = self.root_index(n).expect("normal is a root");
                match c.signs[h] {
                    Sign::Plus => idx,
                    Sign::Minus => self.root_index(&n.neg()).expect("roots are negation-closed"),
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether the closure of `c` meets the wall in a set with nonempty
    /// interior in the wall, i.e. whether the wall supports a facet of `c`.
    pub fn attached(&self, c: &Chamber, h: HyperplaneId) -> bool {
        let strict: Vec<Vector> = (0..self.hyperplanes.len())
            .filter(|&k| k != h.0)
            .map(|k| match c.signs[k] {
                Sign::Plus => self.hyperplanes[k].normal.clone(),
                Sign::Minus => self.hyperplanes[k].normal.neg(),
            })
            .collect();
        strict_feasible(&strict, core::slice::from_ref(&self.hyperplanes[h.0].normal)).is_some()
    }

    /// Whether `c` and `d` share a codimension-one face inside the wall:
    /// `c` is attached to it and `d` is `c` or its mirror image.
    pub fn connected_through(&self, c: &Chamber, d: &Chamber, h: HyperplaneId) -> bool {
        if !self.attached(c, h) {
            return false;
        }
        d == c || *d == self.reflect_chamber(&self.hyperplanes[h.0].normal, c)
    }

    /// Whether the wall separates the two chambers.
    pub fn separates(&self, h: HyperplaneId, c: &Chamber, d: &Chamber) -> bool {
        c.signs[h.0] != d.signs[h.0]
    }
}

/// Memo for simple systems keyed by chamber sign vectors. Enumeration-heavy
/// callers (gallery lifting, brute-force oracles) revisit the same few
/// chambers many times; the memo keeps those calls to one feasibility solve
/// per chamber.
#[derive(Default, Debug)]
pub struct SimpleSystemCache {
    map: alloc::collections::BTreeMap<Vec<Sign>, Vec<usize>>,
}

impl SimpleSystemCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, rs: &RootSystem, c: &Chamber) -> Vec<usize> {
        if let Some(hit) = self.map.get(c.signs()) {
            return hit.clone();
        }
        let computed = rs.simple_system(c);
        self.map.insert(c.signs().to_vec(), computed.clone());
        computed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_int as _unused_rat;

    fn a2() -> RootSystem {
        RootSystem::build_standard(Family::A, 2).unwrap()
    }

    #[test]
    fn standard_counts() {
        assert_eq!(a2().roots().len(), 6);
        let b2 = RootSystem::build_standard(Family::B, 2).unwrap();
        assert_eq!(b2.roots().len(), 8);
        let (short, long): (Vec<_>, Vec<_>) = b2
            .roots()
            .iter()
            .partition(|r| inner(r, r) == rat_int(1));
        assert_eq!((short.len(), long.len()), (4, 4));
        assert_eq!(
            RootSystem::build_standard(Family::A, 3).unwrap().roots().len(),
            12
        );
        assert_eq!(
            RootSystem::build_standard(Family::G2, 2).unwrap().roots().len(),
            12
        );
        assert!(RootSystem::build_standard(Family::A, 0).is_err());
    }

    #[test]
    fn from_roots_validation() {
        let a = Vector::from_ints(&[1, -1, 0]);
        assert!(RootSystem::from_roots(&[a.clone(), a.neg()]).is_ok());
        assert!(matches!(
            RootSystem::from_roots(&[a.clone()]),
            Err(Error::NotARootSystem(_))
        ));
        // Short roots of B2 form a valid system of type A1 x A1.
        let shorts = [
            Vector::from_ints(&[1, 0]),
            Vector::from_ints(&[-1, 0]),
            Vector::from_ints(&[0, 1]),
            Vector::from_ints(&[0, -1]),
        ];
        assert!(RootSystem::from_roots(&shorts).is_ok());
        // A scaled copy of a root breaks reducedness.
        let doubled = [
            a.clone(),
            a.neg(),
            a.scaled(&rat_int(2)),
            a.scaled(&rat_int(-2)),
        ];
        assert!(matches!(
            RootSystem::from_roots(&doubled),
            Err(Error::NotARootSystem(_))
        ));
    }

    #[test]
    fn reflect_basics() {
        let rs = a2();
        let a1 = rs.simple_root(0).clone();
        let a2v = rs.simple_root(1).clone();
        assert_eq!(reflect(&a1, &a1), a1.neg());
        // Fixed hyperplane.
        let orth = Vector::from_ints(&[1, 1, 1]);
        assert_eq!(reflect(&a1, &orth), orth);
        // In A2, reflecting alpha2 through alpha1 gives alpha1 + alpha2.
        assert_eq!(reflect(&a1, &a2v), a1.add(&a2v));
    }

    #[test]
    fn simple_roots_standard_order() {
        let rs = RootSystem::build_standard(Family::A, 3).unwrap();
        assert_eq!(rs.rank(), 3);
        assert_eq!(rs.simple_root(0), &Vector::from_ints(&[1, -1, 0, 0]));
        assert_eq!(rs.simple_root(1), &Vector::from_ints(&[0, 1, -1, 0]));
        assert_eq!(rs.simple_root(2), &Vector::from_ints(&[0, 0, 1, -1]));
        let b2 = RootSystem::build_standard(Family::B, 2).unwrap();
        assert_eq!(b2.simple_root(0), &Vector::from_ints(&[1, -1]));
        assert_eq!(b2.simple_root(1), &Vector::from_ints(&[0, 1]));
    }

    #[test]
    fn fundamental_chamber_data() {
        let rs = a2();
        let a = rs.fundamental_chamber();
        let pos = rs.positive_system(a);
        assert_eq!(pos.len(), 3);
        let simples = rs.simple_system(a);
        let mut expected = rs.simple_indices().to_vec();
        expected.sort_unstable();
        assert_eq!(simples, expected);
        assert_eq!(rs.simple_system_by_walls(a), simples);
    }

    #[test]
    fn chamber_predicates() {
        let rs = a2();
        let a = rs.fundamental_chamber().clone();
        let a1 = rs.simple_root(0).clone();
        let sum = rs.simple_root(0).add(rs.simple_root(1));
        let wall_a1 = rs.wall_of(&a1).unwrap();
        let wall_sum = rs.wall_of(&sum).unwrap();
        assert!(rs.attached(&a, wall_a1));
        // alpha1 + alpha2 is decomposable, so its wall is not a wall of A.
        assert!(!rs.attached(&a, wall_sum));
        let ra = rs.reflect_chamber(&a1, &a);
        assert!(rs.connected_through(&a, &ra, wall_a1));
        assert!(rs.connected_through(&a, &a, wall_a1));
        assert!(!rs.connected_through(&a, &rs.reflect_chamber(&sum, &a), wall_sum));
        assert!(rs.separates(wall_a1, &a, &ra));
        assert!(!rs.separates(wall_sum, &a, &ra));
    }

    #[test]
    fn equivariance_of_chamber_of_point() {
        let rs = a2();
        let a = rs.fundamental_chamber();
        let a1 = rs.simple_root(0).clone();
        let moved = rs.chamber_of_point(&reflect(&a1, a.witness())).unwrap();
        assert_eq!(moved, rs.reflect_chamber(&a1, a));
    }
}
