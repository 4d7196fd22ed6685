//! Planar factors of connectivity two.

use crate::graph::{Bipartition, Graph};
use crate::planar::{face_contains_vertices, FaceWalk, PlanarEmbedding};

use super::verdict::{fmt_walk, Branch, Certificate, Verdict, Witness};
use super::ReplayError;

/// One 2-cut with the two components it leaves and an odd cycle in each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub cut: [usize; 2],
    pub components: [Vec<usize>; 2],
    /// Odd closed walks, in the vertex ids of the factor.
    pub odd_cycles: [Vec<usize>; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm2Certificate {
    pub embedding: PlanarEmbedding,
    pub odd_regions: Vec<FaceWalk>,
    /// The two odd regions containing no 2-cut.
    pub cut_free: [FaceWalk; 2],
    pub cuts: Vec<CutWitness>,
}

fn odd_cycle_in(h: &Graph, component: &[usize]) -> Option<Vec<usize>> {
    match h.induced_subgraph(component).bipartition() {
        Bipartition::Bipartite(_) => None,
        Bipartition::NotBipartite { odd_cycle } => Some(odd_cycle.iter().map(|&i| component[i]).collect()),
    }
}

/// Component test on every 2-cut; the first failing cut is the witness.
fn cut_witnesses(h: &Graph) -> Result<Vec<CutWitness>, Witness> {
    let mut out = Vec::new();
    for cs in h.enumerate_cuts(2) {
        let cut = [cs.vertices[0], cs.vertices[1]];
        let bad = |bipartite_component| Witness::BadCut {
            cut,
            components: cs.components.clone(),
            bipartite_component,
        };
        if cs.components.len() != 2 {
            return Err(bad(None));
        }
        let mut cycles = Vec::with_capacity(2);
        for (i, comp) in cs.components.iter().enumerate() {
            match odd_cycle_in(h, comp) {
                Some(c) => cycles.push(c),
                None => return Err(bad(Some(i))),
            }
        }
        let [c0, c1]: [Vec<usize>; 2] = cycles.try_into().unwrap();
        out.push(CutWitness {
            cut,
            components: [cs.components[0].clone(), cs.components[1].clone()],
            odd_cycles: [c0, c1],
        });
    }
    Ok(out)
}

/// Decides a planar factor of connectivity 2 on one embedding: exactly two
/// odd regions contain no 2-cut, and every 2-cut leaves exactly two
/// non-bipartite components.
pub fn check_theorem2(h: &Graph, embedding: &PlanarEmbedding) -> Verdict {
    debug_assert_eq!(embedding.graph(), h);
    let cuts = cut_witnesses(h);
    let all_cuts: Vec<[usize; 2]> = match &cuts {
        Ok(c) => c.iter().map(|w| w.cut).collect(),
        Err(_) => h.enumerate_cuts(2).iter().map(|c| [c.vertices[0], c.vertices[1]]).collect(),
    };
    let odd = embedding.odd_faces();
    let free: Vec<FaceWalk> = odd
        .iter()
        .filter(|f| !all_cuts.iter().any(|c| face_contains_vertices(f, c)))
        .cloned()
        .collect();
    // both conditions are reported when both fail
    let mut problems = Vec::new();
    if free.len() != 2 {
        problems.push(format!("{} odd regions contain no 2-cut", free.len()));
    }
    match (cuts, free.len()) {
        (Ok(cuts), 2) => {
            let [f0, f1]: [FaceWalk; 2] = free.try_into().unwrap();
            Verdict::accept(
                Branch::Thm2,
                Certificate::Thm2(Thm2Certificate {
                    embedding: embedding.clone(),
                    odd_regions: odd,
                    cut_free: [f0, f1],
                    cuts,
                }),
            )
        }
        (Ok(_), _) => Verdict::reject("Thm2", problems.join("; "), Witness::CutFreeOddRegions(free)),
        (Err(w), _) => {
            problems.push(
                match &w {
                    Witness::BadCut {
                        bipartite_component: Some(_),
                        ..
                    } => "a 2-cut leaves a bipartite component",
                    _ => "a 2-cut leaves more than two components",
                }
                .to_string(),
            );
            Verdict::reject("Thm2", problems.join("; "), w)
        }
    }
}

impl Thm2Certificate {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.odd_regions {
            out.push_str(&format!("odd region: {}\n", fmt_walk(f)));
        }
        for f in &self.cut_free {
            out.push_str(&format!("cut-free odd region: {}\n", fmt_walk(f)));
        }
        for c in &self.cuts {
            out.push_str(&format!(
                "cut {} {}: odd cycles [{}] [{}]\n",
                c.cut[0],
                c.cut[1],
                c.odd_cycles[0].iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
                c.odd_cycles[1].iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
            ));
        }
        out
    }

    pub fn replay(&self, h: &Graph) -> Result<(), ReplayError> {
        if self.embedding.graph() != h {
            return Err(ReplayError::GraphMismatch);
        }
        PlanarEmbedding::new(h.clone(), self.embedding.rotation().to_vec())
            .map_err(|e| ReplayError::Embedding(e.to_string()))?;
        if h.vertex_connectivity() != 2 {
            return Err(ReplayError::Condition("connectivity is not 2".into()));
        }
        if self.embedding.odd_faces() != self.odd_regions {
            return Err(ReplayError::Condition("odd regions differ from the embedding".into()));
        }
        let listed: Vec<[usize; 2]> = self.cuts.iter().map(|c| c.cut).collect();
        let actual: Vec<[usize; 2]> = h.enumerate_cuts(2).iter().map(|c| [c.vertices[0], c.vertices[1]]).collect();
        if listed != actual {
            return Err(ReplayError::Condition("2-cut list is incomplete".into()));
        }
        for c in &self.cuts {
            let mut removed = vec![false; h.n()];
            removed[c.cut[0]] = true;
            removed[c.cut[1]] = true;
            let comps = h.components_avoiding(&removed);
            if comps.len() != 2 {
                return Err(ReplayError::Condition(format!("cut {:?} leaves {} components", c.cut, comps.len())));
            }
            for (comp, cycle) in c.components.iter().zip(&c.odd_cycles) {
                let closed = cycle.len() % 2 == 1
                    && cycle.iter().all(|v| comp.contains(v))
                    && (0..cycle.len()).all(|i| h.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                if !closed {
                    return Err(ReplayError::Condition(format!("bad odd cycle for cut {:?}", c.cut)));
                }
            }
        }
        let free: Vec<&FaceWalk> = self
            .odd_regions
            .iter()
            .filter(|f| !listed.iter().any(|c| face_contains_vertices(f, c)))
            .collect();
        if free.len() != 2 || free[0] != &self.cut_free[0] || free[1] != &self.cut_free[1] {
            return Err(ReplayError::Condition("cut-free odd regions differ".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::planar_embedding;

    /// Two triangular prisms `0..6` and `6..10 + {a, b}` sharing the edge
    /// `ab = {0, 1}` of a triangle, bottoms kept.
    pub(crate) fn glued_prisms() -> Graph {
        // prism 1: top 0 1 2, bottom 3 4 5; prism 2: top 0 1 6, bottom 7 8 9
        Graph::from_edge_list(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
                (1, 6),
                (6, 0),
                (7, 8),
                (8, 9),
                (9, 7),
                (0, 7),
                (1, 8),
                (6, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn glued_prisms_accept() {
        let h = glued_prisms();
        assert_eq!(h.vertex_connectivity(), 2);
        let v = check_theorem2(&h, &planar_embedding(&h).unwrap());
        assert_eq!(v.branch, Branch::Thm2);
        let Certificate::Thm2(c) = &v.certificate else { panic!() };
        // 4 odd regions, or 2 when both triangles through ab open into one square
        assert!(matches!(c.odd_regions.len(), 2 | 4));
        assert_eq!(c.cuts.len(), 1);
        assert_eq!(c.cuts[0].cut, [0, 1]);
        c.replay(&h).unwrap();
    }

    #[test]
    fn glued_k4s_reject_on_bipartite_component() {
        let h = Graph::from_edge_list(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)],
        )
        .unwrap();
        let v = check_theorem2(&h, &planar_embedding(&h).unwrap());
        assert!(!v.accepted);
        let r = v.reject_reason().unwrap();
        assert!(matches!(
            r.witness,
            Witness::BadCut {
                bipartite_component: Some(_),
                ..
            }
        ));
    }

    #[test]
    fn prisms_glued_along_a_spoke_reject_on_count() {
        // share the spoke 0-3 of both prisms
        let h = Graph::from_edge_list(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
                (0, 6),
                (6, 7),
                (7, 0),
                (3, 8),
                (8, 9),
                (9, 3),
                (6, 8),
                (7, 9),
            ],
        )
        .unwrap();
        assert_eq!(h.vertex_connectivity(), 2);
        let v = check_theorem2(&h, &planar_embedding(&h).unwrap());
        assert!(!v.accepted);
        assert!(v.reject_reason().unwrap().message.starts_with("4 odd regions contain no 2-cut"));
    }
}
