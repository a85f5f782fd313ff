//! Labelled galleries: validation, subgalleries and gluing, projection to a
//! subsystem, the unique lifting recursion, p-pairs with sign and cosign, and
//! the multi-segment glued construction.
//!
//! Conventions: chambers are indexed 0..=n and walls 1..=n, so wall `i`
//! connects chambers `i-1` and `i`. Wall labels are canonical hyperplane
//! representatives; the sign of the labelling root is not part of gallery
//! identity.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::Error;
use crate::linalg::Vector;
use crate::roots::{Chamber, HyperplaneId, RootSystem, WeylElement};
use crate::subsys::{LiftCaches, Subsystem};
use crate::Result;

/// Alternating sequence of chambers and walls in which consecutive chambers
/// are connected through the intervening wall.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gallery {
    system: RootSystem,
    chambers: Vec<Chamber>,
    walls: Vec<HyperplaneId>,
}

impl Gallery {
    /// Validates the connectedness invariant at every step.
    pub fn new(
        system: RootSystem,
        chambers: Vec<Chamber>,
        walls: Vec<HyperplaneId>,
    ) -> Result<Gallery> {
        assert_eq!(chambers.len(), walls.len() + 1, "ragged gallery");
        for i in 0..walls.len() {
            if !system.connected_through(&chambers[i], &chambers[i + 1], walls[i]) {
                return Err(Error::NotAGallery {
                    index: i + 1,
                    reason: format!(
                        "chambers on both sides of wall {} do not share a face inside it",
                        system.hyperplane(walls[i]).normal
                    ),
                });
            }
        }
        Ok(Gallery {
            system,
            chambers,
            walls,
        })
    }

    /// The length-zero gallery at a chamber.
    pub fn trivial(system: RootSystem, chamber: Chamber) -> Gallery {
        Gallery {
            system,
            chambers: alloc::vec![chamber],
            walls: Vec::new(),
        }
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn walls(&self) -> &[HyperplaneId] {
        &self.walls
    }

    /// Number of walls.
    pub fn len(&self) -> usize {
        self.walls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }

    pub fn initial(&self) -> &Chamber {
        &self.chambers[0]
    }

    pub fn final_chamber(&self) -> &Chamber {
        self.chambers.last().expect("galleries are nonempty")
    }

    pub fn chamber(&self, i: usize) -> &Chamber {
        &self.chambers[i]
    }

    /// Normal of the `i`-th wall, `i` 1-based.
    pub fn wall_normal(&self, i: usize) -> &Vector {
        &self.system.hyperplane(self.walls[i - 1]).normal
    }

    /// The gallery from chamber `i` to chamber `j`.
    pub fn subgallery(&self, i: usize, j: usize) -> Result<Gallery> {
        if i > j || j > self.len() {
            return Err(Error::SubgalleryRange {
                lo: i,
                hi: j,
                len: self.len(),
            });
        }
        Ok(Gallery {
            system: self.system.clone(),
            chambers: self.chambers[i..=j].to_vec(),
            walls: self.walls[i..j].to_vec(),
        })
    }

    /// Concatenation; the final chamber of `self` must be the initial chamber
    /// of `other`.
    pub fn glue(&self, other: &Gallery) -> Result<Gallery> {
        if self.final_chamber() != other.initial() {
            return Err(Error::GlueMismatch);
        }
        let mut chambers = self.chambers.clone();
        chambers.extend_from_slice(&other.chambers[1..]);
        let mut walls = self.walls.clone();
        walls.extend_from_slice(&other.walls);
        Ok(Gallery {
            system: self.system.clone(),
            chambers,
            walls,
        })
    }

    /// The image gallery under a Weyl element: chambers and wall labels are
    /// both transported.
    pub fn acted(&self, w: &WeylElement) -> Gallery {
        let chambers = self
            .chambers
            .iter()
            .map(|c| self.system.act_on_chamber(w, c))
            .collect();
        let walls = self
            .walls
            .iter()
            .map(|&h| {
                let image = w.apply(&self.system.hyperplane(h).normal);
                self.system
                    .wall_of(&image)
                    .expect("the Weyl group permutes walls")
            })
            .collect();
        Gallery {
            system: self.system.clone(),
            chambers,
            walls,
        }
    }

    /// 1-based positions of the walls whose normal lies in the subsystem.
    pub fn indices_in(&self, psi: &Subsystem) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| psi.contains(self.wall_normal(i)))
            .collect()
    }

    /// Projection to the subsystem: keep the subsystem walls, project the
    /// chambers standing at those positions. The skipped chambers project
    /// equally (checked), so the result is a well-defined gallery over the
    /// subsystem arrangement.
    pub fn project(&self, psi: &Subsystem) -> Gallery {
        let indices = self.indices_in(psi);
        let mut chambers = Vec::with_capacity(indices.len() + 1);
        let mut walls = Vec::with_capacity(indices.len());
        chambers.push(psi.project_chamber(&self.chambers[0]));
        for &i in &indices {
            walls.push(
                psi.system()
                    .wall_of(self.wall_normal(i))
                    .expect("wall normal is a subsystem root"),
            );
            chambers.push(psi.project_chamber(&self.chambers[i]));
        }
        // Walking the gallery between subsystem walls never changes the
        // projected chamber.
        let mut t = 0;
        for j in 0..=self.len() {
            if t < indices.len() && j == indices[t] {
                t += 1;
            }
            assert_eq!(
                psi.project_chamber(&self.chambers[j]),
                chambers[t],
                "chamber {} projects off the projected gallery",
                j
            );
        }
        Gallery::new(psi.system().clone(), chambers, walls)
            .expect("projection of a gallery is a gallery")
    }

    /// The unique gallery over the parent system lifting `delta` (a gallery
    /// over the subsystem arrangement) whose `anchor`-th chamber is `c`.
    /// Built by the two-directional recursion: away from the anchor, repeat
    /// the current chamber when `delta` repeats, otherwise reflect it through
    /// the crossed wall.
    pub fn lift(delta: &Gallery, psi: &Subsystem, anchor: usize, c: &Chamber) -> Result<Gallery> {
        assert_eq!(
            delta.system,
            *psi.system(),
            "lift input must be a gallery over the subsystem arrangement"
        );
        if anchor > delta.len() {
            return Err(Error::IndexRange {
                index: anchor,
                len: delta.len(),
            });
        }
        let mut caches = LiftCaches::new();
        if !psi.lifts_cached(&mut caches, c, &delta.chambers[anchor]) {
            return Err(Error::DoesNotLift(format!(
                "the anchor chamber does not lift chamber {} of the gallery",
                anchor
            )));
        }
        let parent = psi.parent();
        let m = delta.len();
        let mut chambers: Vec<Option<Chamber>> = alloc::vec![None; m + 1];
        chambers[anchor] = Some(c.clone());
        for j in (1..=anchor).rev() {
            let right = chambers[j].clone().expect("filled right to left");
            let next = if delta.chambers[j - 1] == delta.chambers[j] {
                right
            } else {
                parent.reflect_chamber(delta.wall_normal(j), &right)
            };
            chambers[j - 1] = Some(next);
        }
        for j in anchor..m {
            let left = chambers[j].clone().expect("filled left to right");
            let next = if delta.chambers[j + 1] == delta.chambers[j] {
                left
            } else {
                parent.reflect_chamber(delta.wall_normal(j + 1), &left)
            };
            chambers[j + 1] = Some(next);
        }
        let chambers: Vec<Chamber> = chambers.into_iter().map(Option::unwrap).collect();
        for (j, ch) in chambers.iter().enumerate() {
            assert!(
                psi.lifts_cached(&mut caches, ch, &delta.chambers[j]),
                "lifted chamber {} fails to lift its target",
                j
            );
        }
        let walls = delta
            .walls
            .iter()
            .map(|&h| {
                parent
                    .wall_of(&psi.system().hyperplane(h).normal)
                    .expect("subsystem walls are parent walls")
            })
            .collect();
        let lifted = Gallery::new(parent.clone(), chambers, walls)?;
        assert_eq!(
            &lifted.project(psi),
            delta,
            "a lifting projects back onto the lifted gallery"
        );
        Ok(lifted)
    }

    /// Lifting anchored at the initial chamber.
    pub fn lift_from_start(delta: &Gallery, psi: &Subsystem, c: &Chamber) -> Result<Gallery> {
        Self::lift(delta, psi, 0, c)
    }

    /// Lifting anchored at the final chamber.
    pub fn lift_from_end(delta: &Gallery, psi: &Subsystem, c: &Chamber) -> Result<Gallery> {
        Self::lift(delta, psi, delta.len(), c)
    }
}

/// A pair of galleries whose wall sequences match along an increasing index
/// map, together with the sign and cosign recording wall separations of the
/// corresponding chambers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PPair {
    small: Gallery,
    big: Gallery,
    p: Vec<usize>,
    sign: Vec<i8>,
    cosign: Vec<i8>,
}

impl PPair {
    /// Validates the map and the wall equalities, then computes sign and
    /// cosign: entry `i` of the sign is `+1` when the shared wall does not
    /// separate the `i`-th chamber of the small gallery from the `p(i)`-th
    /// chamber of the big one, and the cosign does the same one chamber
    /// earlier on both sides.
    pub fn new(small: Gallery, big: Gallery, p: Vec<usize>) -> Result<PPair> {
        assert_eq!(
            small.system, big.system,
            "p-pairs relate galleries over one arrangement"
        );
        if p.len() != small.len() {
            return Err(Error::MalformedMap(format!(
                "map length {} does not match gallery length {}",
                p.len(),
                small.len()
            )));
        }
        for w in p.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::MalformedMap(
                    "map is not strictly increasing".to_string(),
                ));
            }
        }
        if let Some(&last) = p.last() {
            if p[0] < 1 || last > big.len() {
                return Err(Error::MalformedMap(format!(
                    "image must lie in [1,{}]",
                    big.len()
                )));
            }
        }
        let mut sign = Vec::with_capacity(p.len());
        let mut cosign = Vec::with_capacity(p.len());
        for (i, &pi) in p.iter().enumerate() {
            let i = i + 1;
            let wall = small.walls[i - 1];
            if big.walls[pi - 1] != wall {
                return Err(Error::WallMismatch {
                    position: i,
                    expected: small.wall_normal(i).to_string(),
                    found: big.wall_normal(pi).to_string(),
                });
            }
            let sep_sign = small
                .system
                .separates(wall, &small.chambers[i], &big.chambers[pi]);
            let sep_cosign =
                small
                    .system
                    .separates(wall, &small.chambers[i - 1], &big.chambers[pi - 1]);
            sign.push(if sep_sign { -1 } else { 1 });
            cosign.push(if sep_cosign { -1 } else { 1 });
        }
        Ok(PPair {
            small,
            big,
            p,
            sign,
            cosign,
        })
    }

    pub fn small(&self) -> &Gallery {
        &self.small
    }

    pub fn big(&self) -> &Gallery {
        &self.big
    }

    /// The increasing index map, 1-based.
    pub fn p(&self) -> &[usize] {
        &self.p
    }

    pub fn sign(&self) -> &[i8] {
        &self.sign
    }

    pub fn cosign(&self) -> &[i8] {
        &self.cosign
    }

    pub fn is_positive(&self) -> bool {
        self.sign.iter().chain(&self.cosign).all(|&e| e == 1)
    }
}

/// How to pick the anchor chamber when lifting a projected gallery.
#[derive(Clone, Debug)]
pub enum LiftChoice {
    /// Anchor at position 0 with the canonical constructed lift.
    Canonical,
    /// Anchor at the given position with the given chamber.
    Anchored { index: usize, chamber: Chamber },
}

/// Project `gamma` to the subsystem, lift the projection, and pair the lifting
/// with `gamma` along the positions of the subsystem walls. The resulting
/// p-pair always has positive sign and cosign; this is asserted.
pub fn build_lifted_pair(gamma: &Gallery, psi: &Subsystem, choice: &LiftChoice) -> Result<PPair> {
    let projected = gamma.project(psi);
    let delta = match choice {
        LiftChoice::Canonical => {
            let c = psi.construct_lift(&projected.chambers[0])?;
            Gallery::lift_from_start(&projected, psi, &c)?
        }
        LiftChoice::Anchored { index, chamber } => {
            Gallery::lift(&projected, psi, *index, chamber)?
        }
    };
    let p = gamma.indices_in(psi);
    let pair = PPair::new(delta, gamma.clone(), p)?;
    if !pair.is_positive() {
        return Err(Error::Internal(
            "a lifted pair must have positive sign and cosign".to_string(),
        ));
    }
    Ok(pair)
}

/// A cut of a gallery into consecutive segments, the index `q` of the segment
/// whose subsystem is supplied externally, the anchor used to lift segment
/// `q`, and the junction root sets that choose the neighbouring subsystems.
/// Entry `l` of `junctions` configures segment `l`; `None` (or a missing
/// entry) selects the default, the simple system of the projected junction
/// chamber, which keeps the previous segment's subsystem.
#[derive(Clone, Debug)]
pub struct GluePlan {
    pub cuts: Vec<usize>,
    pub q: usize,
    pub anchor: LiftChoice,
    pub junctions: Vec<Option<Vec<usize>>>,
}

/// The glued construction: lift segment `q` over `psi_q`, extend to the right
/// and to the left through junction subsystems chosen inside the simple
/// system of the already-lifted boundary chamber, glue the segment liftings,
/// and pair the result with `gamma` along the offset-glued index map. The
/// glued pair has positive sign and cosign; this is asserted.
pub fn glued_construction(gamma: &Gallery, psi_q: &Subsystem, plan: &GluePlan) -> Result<PPair> {
    let cuts = &plan.cuts;
    if cuts.first() != Some(&0)
        || cuts.last() != Some(&gamma.len())
        || cuts.windows(2).any(|w| w[0] > w[1])
    {
        return Err(Error::MalformedMap(format!(
            "cuts must increase from 0 to {}",
            gamma.len()
        )));
    }
    let k = cuts.len() - 1;
    if k == 0 || plan.q >= k {
        return Err(Error::MalformedMap(
            "segment index out of range".to_string(),
        ));
    }
    let parent = gamma.system();
    let mut subsystems: Vec<Option<Subsystem>> = alloc::vec![None; k];
    let mut deltas: Vec<Option<Gallery>> = alloc::vec![None; k];

    let seg_q = gamma.subgallery(cuts[plan.q], cuts[plan.q + 1])?;
    let projected_q = seg_q.project(psi_q);
    deltas[plan.q] = Some(match &plan.anchor {
        LiftChoice::Canonical => {
            let c = psi_q.construct_lift(&projected_q.chambers[0])?;
            Gallery::lift_from_start(&projected_q, psi_q, &c)?
        }
        LiftChoice::Anchored { index, chamber } => {
            Gallery::lift(&projected_q, psi_q, *index, chamber)?
        }
    });
    subsystems[plan.q] = Some(psi_q.clone());

    // Extend to the right: the final chamber of the previous lifted segment
    // anchors the next one.
    for l in plan.q + 1..k {
        let boundary = deltas[l - 1].as_ref().unwrap().final_chamber().clone();
        let junction_chamber = gamma.chamber(cuts[l]);
        let prev_psi = subsystems[l - 1].as_ref().unwrap();
        let psi = junction_subsystem(
            parent,
            prev_psi,
            &boundary,
            junction_chamber,
            plan.junctions.get(l).and_then(Option::as_deref),
        )?;
        let seg = gamma.subgallery(cuts[l], cuts[l + 1])?;
        deltas[l] = Some(Gallery::lift_from_start(
            &seg.project(&psi),
            &psi,
            &boundary,
        )?);
        subsystems[l] = Some(psi);
    }
    // Extend to the left symmetrically, anchoring at final chambers.
    for l in (0..plan.q).rev() {
        let boundary = deltas[l + 1].as_ref().unwrap().initial().clone();
        let junction_chamber = gamma.chamber(cuts[l + 1]);
        let next_psi = subsystems[l + 1].as_ref().unwrap();
        let psi = junction_subsystem(
            parent,
            next_psi,
            &boundary,
            junction_chamber,
            plan.junctions.get(l).and_then(Option::as_deref),
        )?;
        let seg = gamma.subgallery(cuts[l], cuts[l + 1])?;
        deltas[l] = Some(Gallery::lift_from_end(&seg.project(&psi), &psi, &boundary)?);
        subsystems[l] = Some(psi);
    }

    let mut glued = deltas[0].take().unwrap();
    for delta in deltas.iter().skip(1) {
        glued = glued.glue(delta.as_ref().unwrap())?;
    }
    let mut p = Vec::new();
    for l in 0..k {
        let seg = gamma.subgallery(cuts[l], cuts[l + 1])?;
        for i in seg.indices_in(subsystems[l].as_ref().unwrap()) {
            p.push(i + cuts[l]);
        }
    }
    let pair = PPair::new(glued, gamma.clone(), p)?;
    if !pair.is_positive() {
        return Err(Error::Internal(
            "a glued pair must have positive sign and cosign".to_string(),
        ));
    }
    Ok(pair)
}

/// Resolve and validate one junction: the chosen roots must be nonempty, lie
/// in the simple system of the lifted boundary chamber, and be positive on
/// the junction chamber of the base gallery. Their saturation is the next
/// segment's subsystem; the default choice keeps the previous subsystem.
fn junction_subsystem(
    parent: &RootSystem,
    prev_psi: &Subsystem,
    boundary: &Chamber,
    junction_chamber: &Chamber,
    choice: Option<&[usize]>,
) -> Result<Subsystem> {
    let simple = parent.simple_system(boundary);
    let gens: Vec<usize> = match choice {
        Some(indices) => indices.to_vec(),
        None => {
            let projected = prev_psi.project_chamber(junction_chamber);
            prev_psi
                .system()
                .simple_system(&projected)
                .iter()
                .map(|&i| {
                    parent
                        .root_index(prev_psi.system().root(i))
                        .expect("subsystem roots are parent roots")
                })
                .collect()
        }
    };
    if gens.is_empty() {
        return Err(Error::BadJunction("empty junction root set".to_string()));
    }
    for &g in &gens {
        if !simple.contains(&g) {
            return Err(Error::BadJunction(format!(
                "root {} is not simple for the lifted boundary chamber",
                parent.root(g)
            )));
        }
        if !crate::linalg::inner(junction_chamber.witness(), parent.root(g)).is_positive() {
            return Err(Error::BadJunction(format!(
                "root {} is not positive on the junction chamber",
                parent.root(g)
            )));
        }
    }
    Subsystem::saturate(parent, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Family;

    /// The worked A3 gallery: chambers given by words in the simple
    /// reflections, walls by their labelling roots.
    fn a3_example_gallery(rs: &RootSystem) -> Gallery {
        let chamber_words: [&[usize]; 9] = [
            &[],
            &[],
            &[2],
            &[2],
            &[2, 0],
            &[2, 0, 1],
            &[2, 0, 1, 0],
            &[2, 0, 1, 0],
            &[2, 0, 1],
        ];
        let wall_roots: [&[i64]; 8] = [
            &[0, 1, -1, 0],
            &[0, 0, 1, -1],
            &[0, 1, 0, -1],
            &[1, -1, 0, 0],
            &[1, 0, 0, -1],
            &[0, 1, 0, -1],
            &[1, 0, -1, 0],
            &[0, 1, 0, -1],
        ];
        let chambers: Vec<Chamber> = chamber_words
            .iter()
            .map(|w| rs.act_on_chamber(&rs.element_from_word(w), rs.fundamental_chamber()))
            .collect();
        let walls: Vec<HyperplaneId> = wall_roots
            .iter()
            .map(|r| rs.wall_of(&Vector::from_ints(r)).unwrap())
            .collect();
        Gallery::new(rs.clone(), chambers, walls).unwrap()
    }

    fn chamber_of_word(rs: &RootSystem, word: &[usize]) -> Chamber {
        rs.act_on_chamber(&rs.element_from_word(word), rs.fundamental_chamber())
    }

    #[test]
    fn subgallery_and_glue_roundtrip() {
        let rs = RootSystem::build_standard(Family::A, 3).unwrap();
        let g = a3_example_gallery(&rs);
        assert_eq!(g.len(), 8);
        assert_eq!(g.subgallery(0, 8).unwrap(), g);
        let left = g.subgallery(0, 5).unwrap();
        let right = g.subgallery(5, 8).unwrap();
        assert_eq!(left.glue(&right).unwrap(), g);
        let point = g.subgallery(3, 3).unwrap();
        assert_eq!(point.len(), 0);
        assert_eq!(point.glue(&g.subgallery(3, 8).unwrap()).unwrap().len(), 5);
        assert!(g.subgallery(4, 2).is_err());
        assert!(g
            .subgallery(0, 2)
            .unwrap()
            .glue(&g.subgallery(5, 8).unwrap())
            .is_err());
    }

    #[test]
    fn a3_projection_matches_worked_example() {
        let rs = RootSystem::build_standard(Family::A, 3).unwrap();
        let g = a3_example_gallery(&rs);
        let psi1 = Subsystem::saturate(
            &rs,
            &[
                rs.root_index(&Vector::from_ints(&[1, 0, -1, 0])).unwrap(),
                rs.root_index(&Vector::from_ints(&[0, 0, 1, -1])).unwrap(),
            ],
        )
        .unwrap();
        let left = g.subgallery(0, 5).unwrap();
        assert_eq!(left.indices_in(&psi1), alloc::vec![2, 5]);
        let projected = left.project(&psi1);
        assert_eq!(projected.len(), 2);
        assert_eq!(projected.wall_normal(1), &Vector::from_ints(&[0, 0, 1, -1]));
        assert_eq!(projected.wall_normal(2), &Vector::from_ints(&[1, 0, 0, -1]));
        let expected_chambers = [
            psi1.project_chamber(&chamber_of_word(&rs, &[])),
            psi1.project_chamber(&chamber_of_word(&rs, &[2])),
            psi1.project_chamber(&chamber_of_word(&rs, &[2, 0, 1])),
        ];
        assert_eq!(projected.chambers(), &expected_chambers);
        // The two orderings of the commuting first reflections name the same
        // final chamber.
        assert_eq!(
            psi1.project_chamber(&chamber_of_word(&rs, &[2, 0, 1])),
            psi1.project_chamber(&chamber_of_word(&rs, &[0, 2, 1]))
        );

        // Lifting the projection anchored at the alternative initial chamber.
        let anchor = chamber_of_word(&rs, &[0]);
        let lifted = Gallery::lift_from_start(&projected, &psi1, &anchor).unwrap();
        let expected: Vec<Chamber> = [
            alloc::vec![0usize],
            alloc::vec![0, 2],
            alloc::vec![0, 2, 1],
        ]
        .iter()
        .map(|w| chamber_of_word(&rs, w))
        .collect();
        assert_eq!(lifted.chambers(), &expected);

        // Projecting along the whole system is the identity.
        let full = Subsystem::full(&rs);
        assert_eq!(g.project(&full), g);
    }

    #[test]
    fn a3_second_segment_and_glued_pair() {
        let rs = RootSystem::build_standard(Family::A, 3).unwrap();
        let g = a3_example_gallery(&rs);
        let psi2 = Subsystem::saturate(
            &rs,
            &[rs.root_index(&Vector::from_ints(&[0, 1, 0, -1])).unwrap()],
        )
        .unwrap();
        let right = g.subgallery(5, 8).unwrap();
        assert_eq!(right.indices_in(&psi2), alloc::vec![1, 3]);
        let projected = right.project(&psi2);
        let anchor = chamber_of_word(&rs, &[0, 2, 1]);
        let lifted = Gallery::lift_from_start(&projected, &psi2, &anchor).unwrap();
        let expected: Vec<Chamber> = [
            alloc::vec![0usize, 2, 1],
            alloc::vec![0, 2, 1, 0],
            alloc::vec![0, 2, 1],
        ]
        .iter()
        .map(|w| chamber_of_word(&rs, w))
        .collect();
        assert_eq!(lifted.chambers(), &expected);

        // The glued construction with the worked junction reproduces the
        // displayed gallery and index map.
        let psi1 = Subsystem::saturate(
            &rs,
            &[
                rs.root_index(&Vector::from_ints(&[1, 0, -1, 0])).unwrap(),
                rs.root_index(&Vector::from_ints(&[0, 0, 1, -1])).unwrap(),
            ],
        )
        .unwrap();
        let plan = GluePlan {
            cuts: alloc::vec![0, 5, 8],
            q: 0,
            anchor: LiftChoice::Anchored {
                index: 0,
                chamber: chamber_of_word(&rs, &[0]),
            },
            junctions: alloc::vec![
                None,
                Some(alloc::vec![rs
                    .root_index(&Vector::from_ints(&[0, 1, 0, -1]))
                    .unwrap()])
            ],
        };
        let pair = glued_construction(&g, &psi1, &plan).unwrap();
        assert_eq!(pair.p(), &[2, 5, 6, 8]);
        assert!(pair.is_positive());
        let delta_words: [&[usize]; 5] = [&[0], &[0, 2], &[0, 2, 1], &[0, 2, 1, 0], &[0, 2, 1]];
        let expected: Vec<Chamber> = delta_words
            .iter()
            .map(|w| chamber_of_word(&rs, w))
            .collect();
        assert_eq!(pair.small().chambers(), &expected);
    }

    #[test]
    fn lifted_pair_is_positive_and_identity_for_full_subsystem() {
        let rs = RootSystem::build_standard(Family::A, 3).unwrap();
        let g = a3_example_gallery(&rs);
        let full = Subsystem::full(&rs);
        let pair = build_lifted_pair(&g, &full, &LiftChoice::Canonical).unwrap();
        assert!(pair.is_positive());
        // Lifting along the whole system anchored at its own initial chamber
        // reproduces the gallery itself.
        let pair2 = build_lifted_pair(
            &g,
            &full,
            &LiftChoice::Anchored {
                index: 0,
                chamber: g.initial().clone(),
            },
        )
        .unwrap();
        assert_eq!(pair2.small(), &g);
        assert_eq!(pair2.p(), (1..=8).collect::<Vec<_>>());
    }

    #[test]
    fn rank_one_cuts_reproduce_the_gallery() {
        // Cutting into single steps and lifting each over the rank-one
        // subsystem of its wall gives back the original gallery.
        let rs = RootSystem::build_standard(Family::A, 3).unwrap();
        let g = a3_example_gallery(&rs);
        let first_wall_root = rs.root_index(g.wall_normal(1)).unwrap();
        let psi0 = Subsystem::saturate(&rs, &[first_wall_root]).unwrap();
        let junctions: Vec<Option<Vec<usize>>> = (0..g.len())
            .map(|l| {
                if l == 0 {
                    return None;
                }
                // The representative of the wall that is positive on the
                // chamber before it.
                let normal = g.wall_normal(l + 1).clone();
                let witness = g.chamber(l).witness();
                let signed = if crate::linalg::inner(witness, &normal).is_positive() {
                    normal
                } else {
                    normal.neg()
                };
                Some(alloc::vec![rs.root_index(&signed).unwrap()])
            })
            .collect();
        let plan = GluePlan {
            cuts: (0..=g.len()).collect(),
            q: 0,
            anchor: LiftChoice::Anchored {
                index: 0,
                chamber: g.initial().clone(),
            },
            junctions,
        };
        let pair = glued_construction(&g, &psi0, &plan).unwrap();
        assert_eq!(pair.small(), &g);
        assert_eq!(pair.p(), (1..=g.len()).collect::<Vec<_>>());
    }

    #[test]
    fn ppair_rejects_wall_mismatch() {
        let rs = RootSystem::build_standard(Family::A, 3).unwrap();
        let g = a3_example_gallery(&rs);
        let small = g.subgallery(0, 1).unwrap();
        // Position 2 of the big gallery carries a different wall.
        assert!(matches!(
            PPair::new(small.clone(), g.clone(), alloc::vec![2]),
            Err(Error::WallMismatch { .. })
        ));
        assert!(PPair::new(small.clone(), g.clone(), alloc::vec![1]).is_ok());
        assert!(matches!(
            PPair::new(small, g, alloc::vec![9]),
            Err(Error::MalformedMap(_))
        ));
    }

    #[test]
    fn identity_ppair_is_positive() {
        let rs = RootSystem::build_standard(Family::A, 3).unwrap();
        let g = a3_example_gallery(&rs);
        let pair = PPair::new(g.clone(), g.clone(), (1..=8).collect()).unwrap();
        assert!(pair.is_positive());
    }
}
