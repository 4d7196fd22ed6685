//! Odd-face conditions for planar, 3-connected factors.

use crate::graph::Graph;
use crate::planar::{FaceWalk, PlanarEmbedding};

use super::verdict::{fmt_walk, Branch, Certificate, Verdict, Witness};
use super::ReplayError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm1Condition {
    /// Two odd faces, vertex-disjoint (indices into the odd faces).
    C1 { faces: [usize; 2] },
    /// Four odd faces meeting pairwise in a vertex or an edge, no three
    /// sharing a vertex.
    C2,
    /// Every odd face except `face` passes through `apex`, `face` avoids
    /// `apex` and meets every other odd face.
    C3 { apex: usize, face: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm1Certificate {
    pub embedding: PlanarEmbedding,
    pub odd_faces: Vec<FaceWalk>,
    pub condition: Thm1Condition,
}

/// Outcome of evaluating all three conditions on one list of odd faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thm1Evaluation {
    pub c1: Option<[usize; 2]>,
    pub c2: bool,
    pub c3: Option<(usize, usize)>,
}

impl Thm1Evaluation {
    pub fn fired(&self) -> [bool; 3] {
        [self.c1.is_some(), self.c2, self.c3.is_some()]
    }

    /// The condition that holds, if exactly one does.
    pub fn unique(&self) -> Option<Thm1Condition> {
        match (self.c1, self.c2, self.c3) {
            (Some(faces), false, None) => Some(Thm1Condition::C1 { faces }),
            (None, true, None) => Some(Thm1Condition::C2),
            (None, false, Some((apex, face))) => Some(Thm1Condition::C3 { apex, face }),
            _ => None,
        }
    }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().filter(|v| b.contains(v)).copied().collect()
}

/// Evaluates C1, C2 and C3 on the odd faces of a 3-connected plane graph.
pub fn evaluate(odd: &[FaceWalk]) -> Thm1Evaluation {
    let sets: Vec<Vec<usize>> = odd.iter().map(FaceWalk::vertex_set).collect();
    let k = sets.len();

    let c1 = (k == 2 && intersect(&sets[0], &sets[1]).is_empty()).then_some([0, 1]);

    let c2 = k == 4 && {
        let mut ok = true;
        for i in 0..4 {
            for j in i + 1..4 {
                let common = intersect(&sets[i], &sets[j]);
                ok &= match common.len() {
                    1 => true,
                    2 => odd[i].has_edge(common[0], common[1]) && odd[j].has_edge(common[0], common[1]),
                    _ => false,
                };
                for l in j + 1..4 {
                    ok &= intersect(&common, &sets[l]).is_empty();
                }
            }
        }
        ok
    };

    let mut c3 = None;
    if k >= 4 {
        'search: for f in 0..k {
            if !(0..k).all(|g| g == f || !intersect(&sets[f], &sets[g]).is_empty()) {
                continue;
            }
            let others: Vec<usize> = (0..k).filter(|&g| g != f).collect();
            for &u in &sets[others[0]] {
                if !sets[f].contains(&u) && others.iter().all(|&g| sets[g].contains(&u)) {
                    c3 = Some((u, f));
                    break 'search;
                }
            }
        }
    }
    Thm1Evaluation { c1, c2, c3 }
}

/// Decides a planar, 3-connected factor from the odd faces of its
/// (unique up to reflection) embedding.
pub fn check_theorem1(h: &Graph, embedding: &PlanarEmbedding) -> Verdict {
    debug_assert_eq!(embedding.graph(), h);
    let odd = embedding.odd_faces();
    let eval = evaluate(&odd);
    match eval.unique() {
        Some(condition) => {
            let branch = match condition {
                Thm1Condition::C1 { .. } => Branch::Thm1C1,
                Thm1Condition::C2 => Branch::Thm1C2,
                Thm1Condition::C3 { .. } => Branch::Thm1C3,
            };
            Verdict::accept(
                branch,
                Certificate::Thm1(Thm1Certificate {
                    embedding: embedding.clone(),
                    odd_faces: odd,
                    condition,
                }),
            )
        }
        None => {
            let fired = eval.fired();
            let message = if fired.iter().any(|&b| b) {
                "conditions are not exclusive"
            } else {
                "no condition holds"
            };
            Verdict::reject("Thm1", message, Witness::OddFaces { faces: odd, fired })
        }
    }
}

impl Thm1Certificate {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, f) in self.odd_faces.iter().enumerate() {
            out.push_str(&format!("odd face {i}: {}\n", fmt_walk(f)));
        }
        match self.condition {
            Thm1Condition::C1 { faces } => {
                out.push_str(&format!("disjoint odd faces: {} {}\n", faces[0], faces[1]))
            }
            Thm1Condition::C2 => out.push_str("four odd faces meet pairwise, no common triple\n"),
            Thm1Condition::C3 { apex, face } => out.push_str(&format!("apex: {apex}\nfree face: {face}\n")),
        }
        out
    }

    /// Re-derives the faces from the stored rotation and checks the named
    /// condition, and only it, holds for `h`.
    pub fn replay(&self, h: &Graph) -> Result<(), ReplayError> {
        if self.embedding.graph() != h {
            return Err(ReplayError::GraphMismatch);
        }
        PlanarEmbedding::new(h.clone(), self.embedding.rotation().to_vec())
            .map_err(|e| ReplayError::Embedding(e.to_string()))?;
        if !h.is_k_connected(3) {
            return Err(ReplayError::Condition("factor is not 3-connected".into()));
        }
        if self.embedding.odd_faces() != self.odd_faces {
            return Err(ReplayError::Condition("odd faces differ from the embedding".into()));
        }
        match evaluate(&self.odd_faces).unique() {
            Some(c) if c == self.condition => Ok(()),
            _ => Err(ReplayError::Condition("stated condition does not hold uniquely".into())),
        }
    }
}
