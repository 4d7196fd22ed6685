//! Factors built by augmentation: start from a planar bipartite graph that
//! is 3-connected or semi-hyper-2-connected and add monochromatic chords on
//! one region in an admissible cyclic order.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classify::{base_shape, match_region, order_pattern_possible, verify_labelled, RegionOrder};
use crate::graph::{Bipartition, Graph, TwoColoring};
use crate::planar::{enumerate_embeddings, planar_embedding, FaceWalk, PlanarEmbedding, DEFAULT_EMBED_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanError {
    #[error("base is not planar")]
    NotPlanar,
    #[error("base is not bipartite (odd cycle {odd_cycle:?})")]
    NotBipartite { odd_cycle: Vec<usize> },
    #[error("base is neither 3-connected nor semi-hyper-2-connected (connectivity {connectivity})")]
    BadConnectivity { connectivity: usize },
    #[error("base has {n} vertices, above the embedding cap {cap}")]
    EmbeddingCap { n: usize, cap: usize },
    #[error("invalid plan: {0}")]
    Invalid(String),
}

/// A base graph with chosen embedding and region, and the ordered chords
/// `(a_1, b_1) … (a_m, b_m)` to add.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationPlan {
    base: Graph,
    embedding: PlanarEmbedding,
    region: FaceWalk,
    chords: Vec<(usize, usize)>,
    order: RegionOrder,
}

struct CheckedBase {
    coloring: TwoColoring,
    cuts: Vec<[usize; 2]>,
}

fn check_base(base: &Graph) -> Result<CheckedBase, PlanError> {
    let coloring = match base.bipartition() {
        Bipartition::Bipartite(c) => c,
        Bipartition::NotBipartite { odd_cycle } => return Err(PlanError::NotBipartite { odd_cycle }),
    };
    if planar_embedding(base).is_none() {
        return Err(PlanError::NotPlanar);
    }
    let shape = base_shape(base).ok_or(PlanError::BadConnectivity {
        connectivity: base.vertex_connectivity(),
    })?;
    Ok(CheckedBase {
        coloring,
        cuts: shape.cuts().to_vec(),
    })
}

impl AugmentationPlan {
    /// Validates every condition on the plan, including the minimum degree
    /// of the augmented graph.
    pub fn new(
        base: Graph,
        embedding: PlanarEmbedding,
        region: FaceWalk,
        chords: Vec<(usize, usize)>,
        order: RegionOrder,
    ) -> Result<Self, PlanError> {
        let checked = check_base(&base)?;
        if embedding.graph() != &base {
            return Err(PlanError::Invalid("embedding is of a different graph".into()));
        }
        let embedding = PlanarEmbedding::new(base.clone(), embedding.rotation().to_vec())
            .map_err(|e| PlanError::Invalid(e.to_string()))?;
        if !embedding.faces().contains(&region) {
            return Err(PlanError::Invalid("region is not a face of the embedding".into()));
        }
        for &(a, b) in &chords {
            if a >= base.n() || b >= base.n() || a == b || base.has_edge(a, b) {
                return Err(PlanError::Invalid(format!("{a}-{b} is not a new edge")));
            }
            if !checked.coloring.is_monochromatic(a, b) {
                return Err(PlanError::Invalid(format!("{a}-{b} joins the two colour classes")));
            }
        }
        if let Some(&v) = checked.cuts.iter().flatten().find(|&&v| !region.contains(v)) {
            return Err(PlanError::Invalid(format!("2-cut vertex {v} is off the region")));
        }
        verify_labelled(&region, &chords, order, &checked.cuts).map_err(|e| PlanError::Invalid(e.to_string()))?;
        let plan = AugmentationPlan {
            base,
            embedding,
            region,
            chords,
            order,
        };
        let h = plan.apply();
        if h.min_degree() < 3 {
            return Err(PlanError::Invalid(format!("augmented graph has minimum degree {}", h.min_degree())));
        }
        Ok(plan)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn embedding(&self) -> &PlanarEmbedding {
        &self.embedding
    }

    pub fn region(&self) -> &FaceWalk {
        &self.region
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn order(&self) -> RegionOrder {
        self.order
    }

    /// `base + a_1 b_1 + … + a_m b_m`.
    pub fn apply(&self) -> Graph {
        self.base.add_edges(&self.chords).expect("chords were validated")
    }

    /// Sorted chord set, used to identify plans that add the same edges.
    pub fn key(&self) -> Vec<(usize, usize)> {
        let mut k: Vec<(usize, usize)> = self.chords.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        k.sort_unstable();
        k
    }

    pub fn to_text(&self) -> String {
        let edges: Vec<String> = self.base.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        let region: Vec<String> = self.region.boundary.iter().map(usize::to_string).collect();
        let chords: Vec<String> = self.chords.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        format!(
            "base: {} {}\nregion: {}\nchords: {}\norder: {}\n",
            self.base.n(),
            edges.join(" "),
            region.join(" "),
            chords.join(" "),
            self.order
        )
    }
}

pub fn apply_plan(plan: &AugmentationPlan) -> Graph {
    plan.apply()
}

/// Every plan with between 2 and `max_m` chords, over every embedding of
/// the base (all of them when it is semi-hyper-2-connected) and every face
/// holding all 2-cuts. Plans adding the same chord set are reported once.
pub fn enumerate_plans(base: &Graph, max_m: usize) -> Result<Vec<AugmentationPlan>, PlanError> {
    enumerate_plans_with_cap(base, max_m, DEFAULT_EMBED_CAP)
}

pub fn enumerate_plans_with_cap(base: &Graph, max_m: usize, cap: usize) -> Result<Vec<AugmentationPlan>, PlanError> {
    let checked = check_base(base)?;
    let embeddings = if checked.cuts.is_empty() {
        vec![planar_embedding(base).expect("checked planar")]
    } else {
        enumerate_embeddings(base, cap).map_err(|_| PlanError::EmbeddingCap { n: base.n(), cap })?
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for emb in &embeddings {
        for region in emb.faces() {
            if !checked.cuts.iter().flatten().all(|&v| region.contains(v)) {
                continue;
            }
            let mut candidates = Vec::new();
            let verts = region.vertex_set();
            for (i, &u) in verts.iter().enumerate() {
                for &v in &verts[i + 1..] {
                    if checked.coloring.is_monochromatic(u, v) && !base.has_edge(u, v) {
                        candidates.push((u, v));
                    }
                }
            }
            let mut chosen = Vec::new();
            extend_subsets(
                &candidates,
                0,
                max_m,
                &mut chosen,
                &mut |subset: &[(usize, usize)]| {
                    if !order_pattern_possible(&region, subset) {
                        return false;
                    }
                    if subset.len() >= 2 {
                        if let Some(m) = match_region(&region, subset, &checked.cuts) {
                            let h = base.add_edges(subset).expect("candidates are new edges");
                            if h.min_degree() >= 3 {
                                let plan = AugmentationPlan {
                                    base: base.clone(),
                                    embedding: emb.clone(),
                                    region: region.clone(),
                                    chords: m.chords,
                                    order: m.order,
                                };
                                if seen.insert(plan.key()) {
                                    out.push(plan);
                                }
                            }
                        }
                    }
                    true
                },
            );
        }
    }
    Ok(out)
}

/// Depth-first over subsets in lexicographic order; `visit` returning
/// false prunes every superset of the current subset.
fn extend_subsets(
    items: &[(usize, usize)],
    from: usize,
    max: usize,
    chosen: &mut Vec<(usize, usize)>,
    visit: &mut dyn FnMut(&[(usize, usize)]) -> bool,
) {
    if chosen.len() == max {
        return;
    }
    for i in from..items.len() {
        chosen.push(items[i]);
        if visit(chosen) {
            extend_subsets(items, i + 1, max, chosen, visit);
        }
        chosen.pop();
    }
}

/// Up to `count` plans drawn without replacement from the enumeration,
/// returned in enumeration order. Fixed seed, fixed output.
pub fn sample_plans(base: &Graph, max_m: usize, count: usize, seed: u64) -> Result<Vec<AugmentationPlan>, PlanError> {
    let all = enumerate_plans(base, max_m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = rand::seq::index::sample(&mut rng, all.len(), count.min(all.len())).into_vec();
    picked.sort_unstable();
    Ok(picked.into_iter().map(|i| all[i].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{check_theorem4, is_3_polytope};
    use crate::products::{kronecker, make_family, twisted_prism, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        make_family(spec).unwrap()
    }

    fn k2() -> Graph {
        fam(FamilySpec::Complete(2))
    }

    #[test]
    fn base_preconditions() {
        assert!(matches!(
            enumerate_plans(&fam(FamilySpec::Complete(4)), 2),
            Err(PlanError::NotBipartite { .. })
        ));
        assert_eq!(
            enumerate_plans(&fam(FamilySpec::CompleteBipartite(3, 3)), 2),
            Err(PlanError::NotPlanar)
        );
        assert!(matches!(
            enumerate_plans(&fam(FamilySpec::Path(4)), 2),
            Err(PlanError::BadConnectivity { connectivity: 1 })
        ));
    }

    #[test]
    fn cube_plans_are_sound() {
        let cube = fam(FamilySpec::Cube);
        let plans = enumerate_plans(&cube, 2).unwrap();
        assert!(!plans.is_empty());
        for p in &plans {
            let h = p.apply();
            assert_eq!((h.n(), h.m()), (8, 14));
            assert!(is_3_polytope(&kronecker(&h, &k2())));
            assert!(check_theorem4(&h).accepted);
        }
        // two crossing chords on the face 0 1 3 2
        assert!(plans.iter().any(|p| p.key() == vec![(0, 3), (1, 2)]));
    }

    #[test]
    fn ladder_rebuilds_the_twisted_prism() {
        let ladder = fam(FamilySpec::Ladder(4));
        let plans = enumerate_plans(&ladder, 2).unwrap();
        let target = twisted_prism(2).unwrap();
        assert!(plans.iter().any(|p| p.apply() == target));
        for p in &plans {
            assert!(is_3_polytope(&kronecker(&p.apply(), &k2())));
        }
    }

    #[test]
    fn hexagon_base_has_no_plan() {
        // every vertex needs a chord, and no chord set within the two
        // colour classes gives a valid factor
        let c6 = fam(FamilySpec::Cycle(6));
        assert!(enumerate_plans(&c6, 6).unwrap().is_empty());
    }

    #[test]
    fn plan_constructor_checks() {
        let cube = fam(FamilySpec::Cube);
        let emb = planar_embedding(&cube).unwrap();
        let faces = emb.faces();
        let f = faces.iter().find(|f| f.contains(0) && f.contains(3) && f.contains(1) && f.contains(2)).unwrap();
        let ok = AugmentationPlan::new(cube.clone(), emb.clone(), f.clone(), vec![(0, 3), (1, 2)], RegionOrder::Crossing);
        assert!(ok.is_ok());
        let wrong_order =
            AugmentationPlan::new(cube.clone(), emb.clone(), f.clone(), vec![(0, 3), (1, 2)], RegionOrder::Nested);
        assert!(wrong_order.is_err());
        // chords on two disjoint faces cannot share one region
        let g = faces.iter().find(|g| g.contains(4) && g.contains(7) && g.contains(5) && g.contains(6)).unwrap();
        let split = AugmentationPlan::new(cube.clone(), emb.clone(), g.clone(), vec![(0, 3), (4, 7)], RegionOrder::Crossing);
        assert!(split.is_err());
        let bichromatic = AugmentationPlan::new(cube, emb, f.clone(), vec![(0, 3), (1, 7)], RegionOrder::Crossing);
        assert!(bichromatic.is_err());
    }

    #[test]
    fn sampling_is_reproducible() {
        let cube = fam(FamilySpec::Cube);
        let a = sample_plans(&cube, 3, 10, 1).unwrap();
        let b = sample_plans(&cube, 3, 10, 1).unwrap();
        assert_eq!(a, b);
        assert!(a.len() <= 10);
        assert!(matches!(
            sample_plans(&fam(FamilySpec::Complete(4)), 2, 10, 1),
            Err(PlanError::NotBipartite { .. })
        ));
    }

    #[test]
    fn round_trip_through_theorem4() {
        for p in enumerate_plans(&fam(FamilySpec::Ladder(4)), 3).unwrap() {
            let h = p.apply();
            let v = check_theorem4(&h);
            assert!(v.accepted);
            let again = AugmentationPlan::new(
                p.base().clone(),
                p.embedding().clone(),
                p.region().clone(),
                p.chords().to_vec(),
                p.order(),
            );
            assert_eq!(again.as_ref(), Ok(&p));
        }
    }
}
