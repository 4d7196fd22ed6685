//! Cyclic-order matching of chord endpoints on a face, with the
//! forbidden-arc test for 2-cuts. Shared by the classifier and the
//! generator.

use std::fmt;

use thiserror::Error;

use crate::planar::FaceWalk;

/// How the chords `a_i b_i` sit on the region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionOrder {
    /// `a_1 … a_m, b_m … b_1`
    Nested,
    /// `a_1 … a_m, b_1 … b_m`
    Crossing,
}

impl RegionOrder {
    pub fn tag(self) -> &'static str {
        match self {
            RegionOrder::Nested => "ord1",
            RegionOrder::Crossing => "ord2",
        }
    }
}

impl fmt::Display for RegionOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Where one 2-cut landed relative to the two forbidden arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutArcRecord {
    pub cut: [usize; 2],
    /// Offsets along the region, measured from `a_1` in the matched direction.
    pub offsets: [usize; 2],
    pub in_first_arc: bool,
    pub in_second_arc: bool,
}

impl CutArcRecord {
    pub fn is_clear(&self) -> bool {
        !self.in_first_arc && !self.in_second_arc
    }
}

/// A successful match: labelled chords in the theorem's order plus the
/// arc check for every 2-cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionMatch {
    pub order: RegionOrder,
    /// `(a_i, b_i)` for `i = 1..=m`.
    pub chords: Vec<(usize, usize)>,
    /// Whether the order reads along the stored walk (`true`) or against it.
    pub forward: bool,
    pub transcript: Vec<CutArcRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderViolation {
    #[error("fewer than two chords")]
    TooFewChords,
    #[error("region walk repeats a vertex")]
    NotSimple,
    #[error("vertex {0} is not on the region")]
    OffRegion(usize),
    #[error("a_1, b_1, a_m, b_m are not pairwise distinct")]
    EndsNotDistinct,
    #[error("endpoints are not in {0} order")]
    WrongOrder(RegionOrder),
    #[error("2-cut {{{}, {}}} lies in a forbidden arc", .0[0], .0[1])]
    CutInArc([usize; 2]),
}

/// Offsets of the region's vertices measured from `start` in one direction.
fn offsets(region: &FaceWalk, start: usize, forward: bool) -> Option<Vec<(usize, usize)>> {
    let l = region.len();
    let s = region.boundary.iter().position(|&v| v == start)?;
    Some(
        region
            .boundary
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let d = if forward { (i + l - s) % l } else { (s + l - i) % l };
                (v, d)
            })
            .collect(),
    )
}

fn offset_of(table: &[(usize, usize)], v: usize) -> Result<usize, OrderViolation> {
    table
        .iter()
        .find(|&&(w, _)| w == v)
        .map(|&(_, d)| d)
        .ok_or(OrderViolation::OffRegion(v))
}

/// Checks labelled chords against `order` on `region`, reading the region
/// in direction `forward` starting from `a_1`. Returns the arc transcript.
pub fn verify_directed(
    region: &FaceWalk,
    chords: &[(usize, usize)],
    order: RegionOrder,
    forward: bool,
    cuts: &[[usize; 2]],
) -> Result<Vec<CutArcRecord>, OrderViolation> {
    let m = chords.len();
    if m < 2 {
        return Err(OrderViolation::TooFewChords);
    }
    if !region.is_simple() {
        return Err(OrderViolation::NotSimple);
    }
    let l = region.len();
    let table = offsets(region, chords[0].0, forward).ok_or(OrderViolation::OffRegion(chords[0].0))?;
    let pa: Vec<usize> = chords.iter().map(|c| offset_of(&table, c.0)).collect::<Result<_, _>>()?;
    let pb: Vec<usize> = chords.iter().map(|c| offset_of(&table, c.1)).collect::<Result<_, _>>()?;

    let ends = [pa[0], pb[0], pa[m - 1], pb[m - 1]];
    for i in 0..4 {
        for j in i + 1..4 {
            if ends[i] == ends[j] {
                return Err(OrderViolation::EndsNotDistinct);
            }
        }
    }

    let a_ok = pa.windows(2).all(|w| w[0] <= w[1]);
    let (b_seq, first_arc, second_arc) = match order {
        // a_1 ≤ … ≤ a_m < b_m ≤ … ≤ b_1; arcs [b_1, a_1] and [a_m, b_m]
        RegionOrder::Nested => {
            let seq: Vec<usize> = pb.iter().rev().copied().collect();
            (seq, (pb[0], l), (pa[m - 1], pb[m - 1]))
        }
        // a_1 ≤ … ≤ a_m < b_1 ≤ … ≤ b_m; arcs [b_m, a_1] and [a_m, b_1]
        RegionOrder::Crossing => (pb.clone(), (pb[m - 1], l), (pa[m - 1], pb[0])),
    };
    let b_ok = b_seq.windows(2).all(|w| w[0] <= w[1]) && pa[m - 1] < b_seq[0];
    if !a_ok || !b_ok {
        return Err(OrderViolation::WrongOrder(order));
    }

    // the first arc wraps round to a_1 at offset 0
    let in_first = |d: usize| d == 0 || (first_arc.0 <= d && d < first_arc.1);
    let in_second = |d: usize| second_arc.0 <= d && d <= second_arc.1;
    let mut transcript = Vec::with_capacity(cuts.len());
    for &cut in cuts {
        let offs = [offset_of(&table, cut[0])?, offset_of(&table, cut[1])?];
        let rec = CutArcRecord {
            cut,
            offsets: offs,
            in_first_arc: offs.iter().all(|&d| in_first(d)),
            in_second_arc: offs.iter().all(|&d| in_second(d)),
        };
        if !rec.is_clear() {
            return Err(OrderViolation::CutInArc(cut));
        }
        transcript.push(rec);
    }
    Ok(transcript)
}

/// Labelled check in either reading direction of the region.
pub fn verify_labelled(
    region: &FaceWalk,
    chords: &[(usize, usize)],
    order: RegionOrder,
    cuts: &[[usize; 2]],
) -> Result<RegionMatch, OrderViolation> {
    let mut err = OrderViolation::WrongOrder(order);
    for forward in [true, false] {
        match verify_directed(region, chords, order, forward, cuts) {
            Ok(transcript) => {
                return Ok(RegionMatch {
                    order,
                    chords: chords.to_vec(),
                    forward,
                    transcript,
                })
            }
            Err(e @ OrderViolation::CutInArc(_)) => err = e,
            Err(e @ OrderViolation::EndsNotDistinct) if !matches!(err, OrderViolation::CutInArc(_)) => err = e,
            Err(e) if matches!(e, OrderViolation::TooFewChords | OrderViolation::NotSimple) => return Err(e),
            Err(_) => {}
        }
    }
    Err(err)
}

/// The only labelling compatible with `order` once `a_1`'s position and
/// the reading direction are fixed. `None` if some endpoint is off the
/// region or the chords cannot be put in that order.
fn forced_labelling(
    region: &FaceWalk,
    chords: &[(usize, usize)],
    order: RegionOrder,
    start: usize,
    forward: bool,
) -> Option<Vec<(usize, usize)>> {
    let table = offsets(region, start, forward)?;
    let pos = |v: usize| table.iter().find(|&&(w, _)| w == v).map(|&(_, d)| d);
    let mut spans = Vec::with_capacity(chords.len());
    for &(x, y) in chords {
        let (px, py) = (pos(x)?, pos(y)?);
        spans.push(if px < py { (px, py, x, y) } else { (py, px, y, x) });
    }
    match order {
        RegionOrder::Nested => spans.sort_by(|s, t| s.0.cmp(&t.0).then(t.1.cmp(&s.1))),
        RegionOrder::Crossing => spans.sort_by(|s, t| s.0.cmp(&t.0).then(s.1.cmp(&t.1))),
    }
    Some(spans.into_iter().map(|(_, _, a, b)| (a, b)).collect())
}

fn endpoints(chords: &[(usize, usize)]) -> Vec<usize> {
    let mut ends: Vec<usize> = chords.iter().flat_map(|&(a, b)| [a, b]).collect();
    ends.sort_unstable();
    ends.dedup();
    ends
}

/// Searches every rotation, reflection and chord relabelling for an
/// arrangement of the unlabelled `chords` on `region` in either order that
/// keeps every cut out of the forbidden arcs. Nested order is tried first,
/// then crossing; within an order, forward before reverse, then starts in
/// walk order.
pub fn match_region(region: &FaceWalk, chords: &[(usize, usize)], cuts: &[[usize; 2]]) -> Option<RegionMatch> {
    if chords.len() < 2 || !region.is_simple() {
        return None;
    }
    let ends = endpoints(chords);
    if !ends.iter().all(|&v| region.contains(v)) || !cuts.iter().flatten().all(|&v| region.contains(v)) {
        return None;
    }
    for order in [RegionOrder::Nested, RegionOrder::Crossing] {
        for forward in [true, false] {
            for &start in region.boundary.iter().filter(|v| ends.contains(v)) {
                let Some(labelled) = forced_labelling(region, chords, order, start, forward) else {
                    continue;
                };
                if labelled[0].0 != start {
                    continue;
                }
                if let Ok(transcript) = verify_directed(region, &labelled, order, forward, cuts) {
                    return Some(RegionMatch {
                        order,
                        chords: labelled,
                        forward,
                        transcript,
                    });
                }
            }
        }
    }
    None
}

/// Order-only test used for pruning: whether the chords can be arranged in
/// either order, ignoring endpoint distinctness and the cut arcs. Holds for
/// every subset of a set for which it holds.
pub fn order_pattern_possible(region: &FaceWalk, chords: &[(usize, usize)]) -> bool {
    if chords.len() < 2 {
        return true;
    }
    let ends = endpoints(chords);
    if !ends.iter().all(|&v| region.contains(v)) {
        return false;
    }
    for order in [RegionOrder::Nested, RegionOrder::Crossing] {
        for forward in [true, false] {
            for &start in region.boundary.iter().filter(|v| ends.contains(v)) {
                let Some(labelled) = forced_labelling(region, chords, order, start, forward) else {
                    continue;
                };
                let table = offsets(region, start, forward).expect("start is on the region");
                let pos = |v: usize| table.iter().find(|&&(w, _)| w == v).unwrap().1;
                let pa: Vec<usize> = labelled.iter().map(|c| pos(c.0)).collect();
                let pb: Vec<usize> = labelled.iter().map(|c| pos(c.1)).collect();
                let m = labelled.len();
                let ok = match order {
                    RegionOrder::Nested => pb.windows(2).all(|w| w[0] >= w[1]) && pa[m - 1] < pb[m - 1],
                    RegionOrder::Crossing => pb.windows(2).all(|w| w[0] <= w[1]) && pa[m - 1] < pb[0],
                };
                if ok {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn walk(v: &[usize]) -> FaceWalk {
        FaceWalk { boundary: v.to_vec() }
    }

    // outer face of the 4-rung ladder: a0 a1 a2 a3 b3 b2 b1 b0
    fn ladder_outer() -> FaceWalk {
        walk(&[0, 1, 2, 3, 7, 6, 5, 4])
    }

    const LADDER_CUTS: [[usize; 2]; 8] = [[0, 5], [1, 4], [1, 5], [1, 6], [2, 5], [2, 6], [2, 7], [3, 6]];

    #[test]
    fn twisted_prism_chords_cross_on_the_ladder() {
        let chords = [(3, 4), (7, 0)];
        let found = match_region(&ladder_outer(), &chords, &LADDER_CUTS).unwrap();
        assert_eq!(found.order, RegionOrder::Crossing);
        assert_eq!(found.transcript.len(), 8);
        assert!(found.transcript.iter().all(CutArcRecord::is_clear));
        assert!(match_region(&ladder_outer(), &chords, &[]).is_some());
    }

    #[test]
    fn inner_chords_on_the_ladder_hit_a_cut() {
        // a1-b2 and a2-b1 leave the cut {a0, b1} inside an arc
        assert_eq!(
            verify_labelled(&ladder_outer(), &[(1, 6), (2, 5)], RegionOrder::Crossing, &LADDER_CUTS),
            Err(OrderViolation::CutInArc([0, 5]))
        );
        assert!(verify_labelled(&ladder_outer(), &[(1, 6), (2, 5)], RegionOrder::Crossing, &[]).is_ok());
    }

    #[test]
    fn nested_order_on_a_hexagon() {
        let r = walk(&[0, 1, 2, 3, 4, 5]);
        assert_eq!(match_region(&r, &[(0, 3), (1, 2)], &[]).unwrap().order, RegionOrder::Nested);
        let found = match_region(&r, &[(0, 4), (1, 3)], &[]).unwrap();
        assert_eq!(found.order, RegionOrder::Nested);
        assert_eq!(found.chords, vec![(0, 4), (1, 3)]);
    }

    #[test]
    fn labelled_verifier_reads_both_directions() {
        let r = ladder_outer();
        let m = verify_labelled(&r, &[(3, 4), (7, 0)], RegionOrder::Crossing, &LADDER_CUTS).unwrap();
        assert_eq!(m.transcript.len(), 8);
        let m = verify_labelled(&r, &[(0, 7), (4, 3)], RegionOrder::Crossing, &LADDER_CUTS).unwrap();
        assert!(!m.forward);
        assert_eq!(
            verify_labelled(&r, &[(3, 4), (7, 0)], RegionOrder::Nested, &LADDER_CUTS),
            Err(OrderViolation::WrongOrder(RegionOrder::Nested))
        );
        assert_eq!(
            verify_labelled(&r, &[(3, 4)], RegionOrder::Nested, &[]),
            Err(OrderViolation::TooFewChords)
        );
    }

    #[test]
    fn end_distinctness() {
        // chords sharing b_1 = b_m cannot be matched
        let r = walk(&[0, 1, 2, 3, 4, 5, 6, 7]);
        assert!(match_region(&r, &[(0, 3), (1, 4), (2, 5)], &[]).is_some());
        assert!(match_region(&r, &[(0, 4), (1, 4)], &[]).is_none());
    }

    #[test]
    fn pattern_is_weaker_than_match() {
        let r = walk(&[0, 1, 2, 3, 4, 5]);
        assert!(order_pattern_possible(&r, &[(0, 3), (1, 2)]));
        assert!(!order_pattern_possible(&r, &[(0, 9), (1, 2)]));
    }
}
