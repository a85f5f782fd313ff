//! Independent brute-force oracles and exhaustive scans backing the test
//! suites: lifting existence and uniqueness, positivity of lifted pairs,
//! order-criterion equivalence, a t-chain Bruhat oracle, and the structural
//! invariants of reflections, projections, and foldings.
//!
//! Every function returns a [`Report`] rather than asserting, so the same
//! scans serve the unit tests, the acceptance suite, and the command line.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::comb::{
    gal_inverse, order_lhd, order_lhd_bruhat, order_lt, order_lt_bruhat, CombGallery, Word,
};
use crate::gallery::{build_lifted_pair, Gallery, LiftChoice};
use crate::linalg::inner;
use crate::roots::{Chamber, HyperplaneId, RootSystem, Sign};
use crate::sample::{below, random_comb_gallery, random_saturated, rng};
use crate::subsys::{LiftCaches, Subsystem};
use crate::weyl::{bruhat_leq, length, WeylGroup};
use crate::Result;

/// Outcome of one scan: how many cases ran and which failed.
#[derive(Clone, Debug)]
pub struct Report {
    pub name: String,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl Report {
    fn new(name: &str) -> Report {
        Report {
            name: String::from(name),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, message: String) {
        // Keep reports bounded; the count of cases still reflects the scan.
        if self.failures.len() < 32 {
            self.failures.push(message);
        }
    }
}

/// All distinct saturated subsystems generated by up to `max_gens` roots.
pub fn saturated_subsystems(rs: &RootSystem, max_gens: usize) -> Vec<Subsystem> {
    let n = rs.roots().len();
    let mut seen: BTreeMap<Vec<usize>, Subsystem> = BTreeMap::new();
    let mut add = |gens: &[usize], seen: &mut BTreeMap<Vec<usize>, Subsystem>| {
        let psi = Subsystem::saturate(rs, gens).expect("nonempty generators");
        seen.entry(psi.root_indices().to_vec()).or_insert(psi);
    };
    if max_gens >= 1 {
        for i in 0..n {
            add(&[i], &mut seen);
        }
    }
    if max_gens >= 2 {
        for i in 0..n {
            for j in (i + 1)..n {
                add(&[i, j], &mut seen);
            }
        }
    }
    assert!(max_gens <= 2, "generator scans beyond pairs are not needed");
    seen.into_values().collect()
}

/// All nonempty reflection-closed subsets of the roots. Exponential in the
/// number of roots; intended for the small systems of the scans.
pub fn all_subsystems(rs: &RootSystem) -> Vec<Subsystem> {
    let n = rs.roots().len();
    assert!(n <= 12, "subset scan is exponential in the root count");
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if let Ok(psi) = Subsystem::from_root_subset(rs, &subset) {
            out.push(psi);
        }
    }
    out
}

/// All galleries of length at most `max_len` over the given arrangement, in
/// deterministic order. Walks every attached wall from every chamber, both
/// crossing and staying.
pub fn enumerate_galleries(system: &RootSystem, max_len: usize) -> Result<Vec<Gallery>> {
    let weyl = WeylGroup::enumerate(system)?;
    let mut frontier: Vec<Gallery> = weyl
        .chambers()
        .iter()
        .map(|c| Gallery::trivial(system.clone(), c.clone()))
        .collect();
    let mut out = frontier.clone();
    let mut attached_memo: BTreeMap<(Vec<Sign>, usize), bool> = BTreeMap::new();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for g in &frontier {
            let last = g.final_chamber().clone();
            for h in 0..system.hyperplanes().len() {
                let key = (last.signs().to_vec(), h);
                let attached = *attached_memo
                    .entry(key)
                    .or_insert_with(|| system.attached(&last, HyperplaneId(h)));
                if !attached {
                    continue;
                }
                let wall = HyperplaneId(h);
                let across = system.reflect_chamber(&system.hyperplane(wall).normal, &last);
                for target in [last.clone(), across] {
                    let step = Gallery::new(
                        system.clone(),
                        alloc::vec![last.clone(), target],
                        alloc::vec![wall],
                    )
                    .expect("attached wall yields a valid step");
                    next.push(g.glue(&step).expect("chambers match"));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(out)
}

/// Lifting existence: over every saturated subsystem generated by one or two
/// roots and every chamber of its arrangement, the canonical lift succeeds,
/// lifts the chamber, appears among the enumerated lifts, and every lift
/// projects back onto the chamber.
pub fn theorem1_scan(rs: &RootSystem) -> Result<Report> {
    let mut report = Report::new("lifting existence");
    let weyl = WeylGroup::enumerate(rs)?;
    for psi in saturated_subsystems(rs, 2) {
        let psi_weyl = WeylGroup::enumerate(psi.system())?;
        for d in psi_weyl.chambers() {
            report.cases += 1;
            let lifts = psi.all_lifts_with(&weyl, d);
            if lifts.is_empty() {
                report.fail(format!(
                    "no chamber lifts a chamber of the subsystem on {:?}",
                    psi.root_indices()
                ));
                continue;
            }
            match psi.construct_lift(d) {
                Ok(c) => {
                    if !lifts.contains(&c) {
                        report.fail(String::from(
                            "constructed lift missing from the enumeration",
                        ));
                    }
                }
                Err(e) => report.fail(format!("canonical lift failed: {}", e)),
            }
            for c in &lifts {
                if &psi.project_chamber(c) != d {
                    report.fail(String::from("a lifting chamber projects elsewhere"));
                }
            }
        }
    }
    Ok(report)
}

/// Lifting obstruction: across every reflection-closed subset, a lifting pair
/// exists only for saturated subsystems, and unsaturated ones admit none.
pub fn theorem1_obstruction_scan(rs: &RootSystem) -> Result<Report> {
    let mut report = Report::new("lifting obstruction");
    let weyl = WeylGroup::enumerate(rs)?;
    for psi in all_subsystems(rs) {
        let psi_weyl = WeylGroup::enumerate(psi.system())?;
        let mut caches = LiftCaches::new();
        let mut any_lift = false;
        for d in psi_weyl.chambers() {
            for c in weyl.chambers() {
                report.cases += 1;
                if psi.lifts_cached(&mut caches, c, d) {
                    any_lift = true;
                }
            }
        }
        if any_lift && !psi.is_saturated() {
            report.fail(format!(
                "unsaturated subsystem {:?} admits a lifting pair",
                psi.root_indices()
            ));
        }
        if !any_lift && psi.is_saturated() {
            report.fail(format!(
                "saturated subsystem {:?} admits no lifting pair",
                psi.root_indices()
            ));
        }
    }
    Ok(report)
}

/// Uniqueness of gallery lifting: for every saturated subsystem generated by
/// one or two roots, every subsystem gallery up to `max_len`, and every
/// anchor (position, lifting chamber), brute-force enumeration of all parent
/// galleries with the same wall sequence finds exactly one lifting, equal to
/// the recursion's output.
pub fn theorem2_uniqueness_scan(rs: &RootSystem, max_len: usize) -> Result<Report> {
    let mut report = Report::new("unique gallery lifting");
    let weyl = WeylGroup::enumerate(rs)?;
    for psi in saturated_subsystems(rs, 2) {
        let mut caches = LiftCaches::new();
        let mut attached_memo: BTreeMap<(Vec<Sign>, usize), bool> = BTreeMap::new();
        for delta in enumerate_galleries(psi.system(), max_len)? {
            for anchor in 0..=delta.len() {
                for c in psi.all_lifts_with(&weyl, delta.chamber(anchor)) {
                    report.cases += 1;
                    let predicted = match Gallery::lift(&delta, &psi, anchor, &c) {
                        Ok(g) => g,
                        Err(e) => {
                            report.fail(format!("lift failed on a valid anchor: {}", e));
                            continue;
                        }
                    };
                    let found = brute_force_liftings(
                        rs,
                        &psi,
                        &delta,
                        anchor,
                        &c,
                        &mut caches,
                        &mut attached_memo,
                    );
                    if found.len() != 1 {
                        report.fail(format!(
                            "{} liftings found for a length-{} gallery",
                            found.len(),
                            delta.len()
                        ));
                        continue;
                    }
                    if found[0] != predicted.chambers() {
                        report.fail(String::from(
                            "brute-force lifting disagrees with the recursion",
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// All chamber sequences with the given wall sequence and anchored chamber
/// whose every member lifts the corresponding chamber of `delta` and whose
/// steps are genuine gallery steps.
fn brute_force_liftings(
    rs: &RootSystem,
    psi: &Subsystem,
    delta: &Gallery,
    anchor: usize,
    c: &Chamber,
    caches: &mut LiftCaches,
    attached_memo: &mut BTreeMap<(Vec<Sign>, usize), bool>,
) -> Vec<Vec<Chamber>> {
    let m = delta.len();
    let walls: Vec<HyperplaneId> = (1..=m)
        .map(|i| rs.wall_of(delta.wall_normal(i)).expect("wall of parent"))
        .collect();
    let mut results = Vec::new();
    // Each non-anchor step picks "stay" or "cross"; enumerate all patterns.
    for mask in 0u32..(1 << m) {
        let mut chambers: Vec<Option<Chamber>> = alloc::vec![None; m + 1];
        chambers[anchor] = Some(c.clone());
        let mut valid = true;
        let mut place = |j_from: usize, j_to: usize, wall_pos: usize, chambers: &mut Vec<Option<Chamber>>| {
            let from = chambers[j_from].clone().unwrap();
            let cross = mask >> wall_pos & 1 == 1;
            let to = if cross {
                rs.reflect_chamber(&rs.hyperplane(walls[wall_pos]).normal, &from)
            } else {
                from
            };
            chambers[j_to] = Some(to);
        };
        for j in (0..anchor).rev() {
            place(j + 1, j, j, &mut chambers);
        }
        for j in anchor..m {
            place(j, j + 1, j, &mut chambers);
        }
        let chambers: Vec<Chamber> = chambers.into_iter().map(Option::unwrap).collect();
        // Gallery validity: each step's wall must be attached to the chamber
        // it leaves (stay and cross alike).
        for (j, &wall) in walls.iter().enumerate() {
            let key = (chambers[j].signs().to_vec(), wall.0);
            let attached = *attached_memo
                .entry(key)
                .or_insert_with(|| rs.attached(&chambers[j], wall));
            if !attached {
                valid = false;
                break;
            }
        }
        if !valid {
            continue;
        }
        if (0..=m).all(|j| psi.lifts_cached(caches, &chambers[j], delta.chamber(j))) {
            results.push(chambers);
        }
    }
    results
}

/// Positivity of lifted pairs on random galleries: seeded random galleries
/// over random saturated subsystems, lifted at random anchors, always give
/// positive sign and cosign.
pub fn theorem3_random_scan(
    rs: &RootSystem,
    runs: usize,
    max_len: usize,
    seed: u64,
) -> Result<Report> {
    let mut report = Report::new("lifted pair positivity");
    let weyl = WeylGroup::enumerate(rs)?;
    let mut rng = rng(seed);
    while (report.cases as usize) < runs {
        let len = below(&mut rng, max_len + 1);
        let gallery = crate::sample::random_gallery(&mut rng, &weyl, len);
        let psi = random_saturated(&mut rng, rs, 2);
        let projected = gallery.project(&psi);
        let anchor = below(&mut rng, projected.len() + 1);
        let lifts = psi.all_lifts_with(&weyl, projected.chamber(anchor));
        if lifts.is_empty() {
            return Err(crate::error::Error::Internal(String::from(
                "saturated subsystem with no lifting chamber",
            )));
        }
        let chamber = lifts[below(&mut rng, lifts.len())].clone();
        report.cases += 1;
        match build_lifted_pair(
            &gallery,
            &psi,
            &LiftChoice::Anchored {
                index: anchor,
                chamber,
            },
        ) {
            Ok(pair) => {
                if !pair.is_positive() {
                    report.fail(String::from("lifted pair with nonpositive sign or cosign"));
                }
            }
            Err(e) => report.fail(format!("lifted pair construction failed: {}", e)),
        }
    }
    Ok(report)
}

/// Equivalence of the two formulations of each order, over every pair of
/// galleries of every word of length at most `max_len`.
pub fn order_equivalence_scan(rs: &RootSystem, max_len: usize) -> Result<Report> {
    let mut report = Report::new("order criterion equivalence");
    let rank = rs.rank();
    let mut words: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    for _ in 0..max_len {
        words = words
            .iter()
            .flat_map(|w| {
                (0..rank).map(move |l| {
                    let mut next = w.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
        for letters in &words {
            let word = Word::new(rs.clone(), letters.clone())?;
            let galleries = word.galleries();
            for a in &galleries {
                for b in &galleries {
                    report.cases += 1;
                    if order_lhd(a, b) != order_lhd_bruhat(a, b) {
                        report.fail(format!(
                            "first-order criteria disagree on {:?} vs {:?} over {:?}",
                            a.bits(),
                            b.bits(),
                            letters
                        ));
                    }
                    if order_lt(a, b) != order_lt_bruhat(a, b) {
                        report.fail(format!(
                            "second-order criteria disagree on {:?} vs {:?} over {:?}",
                            a.bits(),
                            b.bits(),
                            letters
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// The Bruhat order against an independent oracle: the reflection-chain order
/// (reachability by reflection multiplications that increase length), checked
/// on every ordered pair of Weyl elements.
pub fn bruhat_oracle_scan(rs: &RootSystem) -> Result<Report> {
    let mut report = Report::new("Bruhat order oracle");
    let weyl = WeylGroup::enumerate(rs)?;
    let n = weyl.order();
    let index: BTreeMap<_, _> = weyl
        .elements()
        .iter()
        .enumerate()
        .map(|(i, w)| (w.matrix().clone(), i))
        .collect();
    // Edges u -> u t for each reflection t that increases length.
    let reflections: Vec<_> = rs
        .positive_indices()
        .iter()
        .map(|&i| crate::linalg::Matrix::reflection(rs.root(i)))
        .collect();
    let mut reach: Vec<Vec<bool>> = alloc::vec![alloc::vec![false; n]; n];
    let lengths: Vec<usize> = weyl.elements().iter().map(|w| length(rs, w)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| lengths[i]);
    for &i in order.iter().rev() {
        reach[i][i] = true;
        for t in &reflections {
            let m = weyl.elements()[i].matrix().mul(t);
            let j = index[&m];
            if lengths[j] > lengths[i] {
                let (left, right) = if i < j {
                    let (a, b) = reach.split_at_mut(j);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = reach.split_at_mut(i);
                    (&mut b[0], &a[j])
                };
                for k in 0..n {
                    left[k] = left[k] || right[k];
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            report.cases += 1;
            let expected = reach[i][j];
            if bruhat_leq(rs, &weyl.elements()[i], &weyl.elements()[j]) != expected {
                report.fail(format!(
                    "subword and chain orders disagree on pair ({}, {})",
                    i, j
                ));
            }
        }
    }
    Ok(report)
}

/// Equivariance of positive and simple systems under the Weyl action.
pub fn equivariance_scan(rs: &RootSystem) -> Result<Report> {
    let mut report = Report::new("positive and simple system equivariance");
    let weyl = WeylGroup::enumerate(rs)?;
    let a = rs.fundamental_chamber();
    let base_pos: Vec<_> = rs.positive_system(a);
    let base_simple: Vec<_> = rs.simple_system(a);
    for (w, chamber) in weyl.elements().iter().zip(weyl.chambers()) {
        report.cases += 1;
        let mut expected_pos: Vec<usize> = base_pos
            .iter()
            .map(|&i| rs.root_index(&w.apply(rs.root(i))).expect("root image"))
            .collect();
        expected_pos.sort_unstable();
        if rs.positive_system(chamber) != expected_pos {
            report.fail(String::from("positive system is not equivariant"));
        }
        let mut expected_simple: Vec<usize> = base_simple
            .iter()
            .map(|&i| rs.root_index(&w.apply(rs.root(i))).expect("root image"))
            .collect();
        expected_simple.sort_unstable();
        if rs.simple_system(chamber) != expected_simple {
            report.fail(String::from("simple system is not equivariant"));
        }
        if rs.simple_system_by_walls(chamber) != rs.simple_system(chamber) {
            report.fail(String::from(
                "wall-geometry simple system disagrees with indecomposability",
            ));
        }
        if rs.positive_system(chamber).len() * 2 != rs.roots().len() {
            report.fail(String::from("positive system is not half the roots"));
        }
    }
    Ok(report)
}

/// Projection compatibility: for chambers connected through a wall, the wall
/// either lies outside the subsystem and the projections agree, or lies
/// inside and the projections are connected through it, agreeing exactly for
/// equal chambers.
pub fn projection_compatibility_scan(rs: &RootSystem) -> Result<Report> {
    let mut report = Report::new("projection compatibility");
    let weyl = WeylGroup::enumerate(rs)?;
    let subsystems = saturated_subsystems(rs, 2);
    for c in weyl.chambers() {
        for h in 0..rs.hyperplanes().len() {
            let wall = HyperplaneId(h);
            if !rs.attached(c, wall) {
                continue;
            }
            let normal = rs.hyperplane(wall).normal.clone();
            for d in [c.clone(), rs.reflect_chamber(&normal, c)] {
                for psi in &subsystems {
                    report.cases += 1;
                    let cp = psi.project_chamber(c);
                    let dp = psi.project_chamber(&d);
                    if psi.contains(&normal) {
                        let sub_wall = psi.system().wall_of(&normal).expect("subsystem wall");
                        if !psi.system().connected_through(&cp, &dp, sub_wall) {
                            report.fail(String::from(
                                "projections not connected through a subsystem wall",
                            ));
                        }
                        if (cp == dp) != (*c == d) {
                            report.fail(String::from(
                                "projection collapses or separates wrongly inside the subsystem",
                            ));
                        }
                    } else if cp != dp {
                        report.fail(String::from(
                            "projections differ across a wall outside the subsystem",
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Wall separation against root signs: a wall separates two Weyl chambers
/// exactly when the pulled-back roots have opposite signs.
pub fn separation_sign_scan(rs: &RootSystem) -> Result<Report> {
    let mut report = Report::new("separation against pulled-back root signs");
    let weyl = WeylGroup::enumerate(rs)?;
    for (x, cx) in weyl.elements().iter().zip(weyl.chambers()) {
        for (y, cy) in weyl.elements().iter().zip(weyl.chambers()) {
            for i in 0..rs.roots().len() {
                report.cases += 1;
                let alpha = rs.root(i);
                let wall = rs.wall_of_root(i);
                let same_side = !rs.separates(wall, cx, cy);
                let sx = x.inverse().apply(alpha).lex_sign();
                let sy = y.inverse().apply(alpha).lex_sign();
                if same_side != (sx == sy) {
                    report.fail(format!(
                        "separation and root signs disagree at root {}",
                        alpha
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// Folding transforms: folding at `j` reflects the later `beta` values (and
/// strictly later `tbeta` values) through the folded wall, and double
/// foldings preserve the endpoint. Exhaustive over one word.
pub fn folding_scan(rs: &RootSystem, letters: &[usize]) -> Result<Report> {
    let mut report = Report::new("folding transforms");
    let word = Word::new(rs.clone(), letters.to_vec())?;
    let n = word.len();
    for gamma in word.galleries() {
        let betas: Vec<_> = (1..=n).map(|i| gamma.beta(i)).collect();
        let tbetas: Vec<_> = (1..=n).map(|i| gamma.beta_tilde(i)).collect();
        for j in 1..=n {
            let folded = gamma.fold(j)?;
            for i in 1..=n {
                report.cases += 1;
                let expected_beta = if i < j {
                    betas[i - 1].clone()
                } else {
                    crate::roots::reflect(&betas[j - 1], &betas[i - 1])
                };
                if folded.beta(i) != expected_beta {
                    report.fail(format!("beta transform fails at ({}, {})", i, j));
                }
                let expected_tbeta = if i <= j {
                    tbetas[i - 1].clone()
                } else {
                    crate::roots::reflect(&tbetas[j - 1], &tbetas[i - 1])
                };
                if folded.beta_tilde(i) != expected_tbeta {
                    report.fail(format!("tbeta transform fails at ({}, {})", i, j));
                }
            }
        }
        // Endpoint preservation for every applicable double folding.
        for i in 1..=n {
            for j in (i + 1)..=n {
                let bi = &betas[i - 1];
                let bj = &betas[j - 1];
                if bi == bj || *bi == bj.neg() {
                    report.cases += 1;
                    match gamma.double_fold(i, j) {
                        Ok(d) => {
                            if d.pi() != gamma.pi() {
                                report.fail(format!(
                                    "double folding moved the endpoint at ({}, {})",
                                    i, j
                                ));
                            }
                        }
                        Err(e) => report.fail(format!("double folding refused: {}", e)),
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Round trip of the gallery correspondence over every word of length up to
/// `max_len` (exhaustive) plus seeded random galleries of length `max_len`.
pub fn correspondence_roundtrip_scan(
    rs: &RootSystem,
    max_len: usize,
    samples: usize,
    seed: u64,
) -> Result<Report> {
    let mut report = Report::new("gallery correspondence round trip");
    let rank = rs.rank();
    let mut words: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    let mut check = |g: &CombGallery, report: &mut Report| {
        report.cases += 1;
        let gallery = g.gal();
        if gallery.len() != g.len() {
            report.fail(String::from("length mismatch across the correspondence"));
        }
        match gal_inverse(&gallery) {
            Ok(back) => {
                if &back != g {
                    report.fail(String::from("correspondence failed to round-trip"));
                }
            }
            Err(e) => report.fail(format!("inverse failed: {}", e)),
        }
    };
    for _ in 0..max_len {
        words = words
            .iter()
            .flat_map(|w| {
                (0..rank).map(move |l| {
                    let mut next = w.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
        for letters in &words {
            let word = Word::new(rs.clone(), letters.clone())?;
            for g in word.galleries() {
                check(&g, &mut report);
            }
        }
    }
    let mut rng = rng(seed);
    for _ in 0..samples {
        let g = random_comb_gallery(&mut rng, rs, max_len);
        check(&g, &mut report);
    }
    Ok(report)
}

/// The lifting criterion through an intermediate chamber agrees with the
/// direct definition on every chamber pair and every saturated subsystem.
pub fn lift_criterion_scan(rs: &RootSystem) -> Result<Report> {
    let mut report = Report::new("lifting criterion equivalence");
    let weyl = WeylGroup::enumerate(rs)?;
    for psi in saturated_subsystems(rs, 2) {
        let mut caches = LiftCaches::new();
        for c in weyl.chambers() {
            for d in weyl.chambers() {
                report.cases += 1;
                let via_criterion = psi.lemma2_check(c, d);
                let direct = psi.lifts_cached(&mut caches, c, &psi.project_chamber(d));
                if via_criterion != direct {
                    report.fail(String::from(
                        "criterion and direct lifting test disagree",
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// Containment of positive systems is strictly weaker than lifting: scan for
/// witnesses that containment does not imply lifting (there must be at least
/// one in a rank-one subsystem of a rank-two system), while lifting always
/// implies containment.
pub fn containment_gap_scan(rs: &RootSystem) -> Result<Report> {
    let mut report = Report::new("positive containment against lifting");
    let weyl = WeylGroup::enumerate(rs)?;
    let mut gap_seen = false;
    for psi in saturated_subsystems(rs, 1) {
        let psi_weyl = WeylGroup::enumerate(psi.system())?;
        let mut caches = LiftCaches::new();
        for d in psi_weyl.chambers() {
            for c in weyl.chambers() {
                report.cases += 1;
                let lifts = psi.lifts_cached(&mut caches, c, d);
                let contained = psi.positive_contained(c, d);
                if lifts && !contained {
                    report.fail(String::from("lifting without positive containment"));
                }
                if contained && !lifts {
                    gap_seen = true;
                }
            }
        }
    }
    if !gap_seen {
        report.fail(String::from(
            "expected some chamber with containment but no lifting",
        ));
    }
    Ok(report)
}

/// Check that `inner` is symmetric and reflections are isometric involutions
/// on every pair of roots.
pub fn reflection_scan(rs: &RootSystem) -> Result<Report> {
    let mut report = Report::new("reflection isometries");
    for a in rs.roots() {
        for b in rs.roots() {
            report.cases += 1;
            if inner(a, b) != inner(b, a) {
                report.fail(String::from("inner product asymmetry"));
            }
            let r = crate::roots::reflect(a, b);
            if rs.root_index(&r).is_none() {
                report.fail(String::from("reflection leaves the root system"));
            }
            if crate::roots::reflect(a, &r) != *b {
                report.fail(String::from("reflection is not an involution"));
            }
            if inner(&r, &r) != inner(b, b) {
                report.fail(String::from("reflection changes lengths"));
            }
        }
    }
    Ok(report)
}
