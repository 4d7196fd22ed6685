//! Decision procedures: the brute-force oracle, the three criteria for
//! Kronecker factors of `K_2`, and the Cartesian and strong predicates.

mod region;
mod theorem1;
mod theorem2;
mod theorem4;
mod verdict;

use thiserror::Error;

use crate::graph::{Bipartition, Graph};
use crate::planar::{is_outerplanar_2connected, is_planar, test_planarity, Planarity, DEFAULT_EMBED_CAP};
use crate::products::{kronecker, product, ProductKind};

pub use region::{
    match_region, order_pattern_possible, verify_directed, verify_labelled, CutArcRecord, OrderViolation,
    RegionMatch, RegionOrder,
};
pub use theorem1::{check_theorem1, evaluate as evaluate_theorem1, Thm1Certificate, Thm1Condition, Thm1Evaluation};
pub use theorem2::{check_theorem2, CutWitness, Thm2Certificate};
pub use theorem4::{check_theorem4, check_theorem4_with_cap, Thm4Certificate};
pub(crate) use theorem4::base_shape;
pub use verdict::{Branch, Certificate, RejectReason, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("certificate does not describe this graph")]
    GraphMismatch,
    #[error("stored rotation is not a planar embedding: {0}")]
    Embedding(String),
    #[error("{0}")]
    Condition(String),
}

impl Certificate {
    /// Mechanically re-checks the certificate against `h`; `Ok` for
    /// [`Certificate::None`].
    pub fn replay(&self, h: &Graph) -> Result<(), ReplayError> {
        match self {
            Certificate::None => Ok(()),
            Certificate::Thm1(c) => c.replay(h),
            Certificate::Thm2(c) => c.replay(h),
            Certificate::Thm4(c) => c.replay(h),
        }
    }
}

/// Planar and 3-connected with at least four vertices.
pub fn is_3_polytope(g: &Graph) -> bool {
    let n = g.n();
    n >= 4 && g.m() <= 3 * n - 6 && g.min_degree() >= 3 && is_planar(g) && g.is_k_connected(3)
}

pub(crate) fn kronecker_oracle(h: &Graph) -> bool {
    is_3_polytope(&kronecker(h, &k2()))
}

fn k2() -> Graph {
    Graph::from_edges_unchecked(2, &[(0, 1)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Largest graph whose embeddings are enumerated exhaustively.
    pub embed_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            embed_cap: DEFAULT_EMBED_CAP,
        }
    }
}

/// Decides whether `H ∧ K_2` is 3-polytopal without building it.
pub fn classify_kronecker_factor(h: &Graph) -> Verdict {
    classify_kronecker_factor_with(h, &ClassifyOptions::default())
}

pub fn classify_kronecker_factor_with(h: &Graph, opts: &ClassifyOptions) -> Verdict {
    if !h.is_connected() {
        return Verdict::reject(
            "Input",
            "factor is disconnected",
            Witness::Components(h.connected_components()),
        );
    }
    if h.n() < 4 {
        return Verdict::reject("Input", "fewer than 4 vertices", Witness::TooFewVertices(h.n()));
    }
    let degrees = h.degrees();
    if let Some(v) = (0..h.n()).find(|&v| degrees[v] < 3) {
        return Verdict::reject(
            "Input",
            "minimum degree below 3",
            Witness::LowDegree {
                vertex: v,
                degree: degrees[v],
            },
        );
    }
    if let Some(&v) = h.cut_vertices().first() {
        return Verdict::reject("Input", "factor has a cut vertex", Witness::CutVertex(v));
    }
    if let Bipartition::Bipartite(c) = h.bipartition() {
        return Verdict::reject("Input", "product is disconnected", Witness::Bipartite(c));
    }
    match test_planarity(h) {
        Planarity::Planar(emb) => {
            if h.is_k_connected(3) {
                check_theorem1(h, &emb)
            } else {
                check_theorem2(h, &emb)
            }
        }
        Planarity::NonPlanar(_) => check_theorem4_with_cap(h, opts.embed_cap),
    }
}

fn is_path(g: &Graph) -> bool {
    g.n() >= 2 && g.is_connected() && g.m() == g.n() - 1 && g.max_degree() <= 2
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && g.degrees().iter().all(|&d| d == 2)
}

fn is_k2(g: &Graph) -> bool {
    g.n() == 2 && g.m() == 1
}

/// Decides whether `H ⋆ J` is 3-polytopal for the given product. The
/// smaller factor plays the role of `J`.
pub fn classify_product(h: &Graph, j: &Graph, kind: ProductKind) -> Verdict {
    classify_product_with(h, j, kind, &ClassifyOptions::default())
}

pub fn classify_product_with(h: &Graph, j: &Graph, kind: ProductKind, opts: &ClassifyOptions) -> Verdict {
    let (h, j) = if j.n() <= h.n() { (h, j) } else { (j, h) };
    let sizes = Witness::Factors(h.n(), j.n());
    if j.n() == 0 {
        return Verdict::reject("Input", "empty factor", sizes);
    }
    match kind {
        ProductKind::Kronecker => {
            if j.n() == 1 {
                return Verdict::reject("Kronecker", "product has no edges", sizes);
            }
            if !is_k2(j) {
                return Verdict::reject("Kronecker", "smaller factor is not K2", sizes);
            }
            classify_kronecker_factor_with(h, opts)
        }
        // a one-vertex factor leaves the other factor unchanged
        _ if j.n() == 1 => Verdict::oracle(is_3_polytope(&product(h, j, kind))),
        ProductKind::Cartesian => {
            if is_k2(j) && is_outerplanar_2connected(h) {
                Verdict::accept(Branch::CartesianK2Outerplanar, Certificate::None)
            } else if (is_path(h) && is_cycle(j)) || (is_cycle(h) && is_path(j)) {
                Verdict::accept(Branch::CartesianPathCycle, Certificate::None)
            } else {
                Verdict::reject(
                    "Cartesian",
                    "not K2 with an outerplanar 2-connected graph, nor a path with a polygon",
                    sizes,
                )
            }
        }
        ProductKind::Strong => {
            let p3 = |g: &Graph| g.n() == 3 && is_path(g);
            if (is_k2(h) && is_k2(j)) || (p3(h) && p3(j)) {
                Verdict::accept(Branch::StrongSmall, Certificate::None)
            } else {
                Verdict::reject("Strong", "pair is neither K2,K2 nor P3,P3", sizes)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::{make_family, FamilySpec};

    fn fam(s: &str) -> Graph {
        make_family(s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn oracle_basics() {
        assert!(is_3_polytope(&fam("complete:4")));
        assert!(is_3_polytope(&fam("prism:6")));
        assert!(!is_3_polytope(&fam("complete_bipartite:3,3")));
        assert!(!is_3_polytope(&fam("cycle:5")));
        assert!(!is_3_polytope(&fam("complete:3")));
    }

    #[test]
    fn dispatch() {
        let v = classify_kronecker_factor(&fam("wheel:3"));
        assert_eq!(v.branch, Branch::Thm1C3);
        let v = classify_kronecker_factor(&fam("square_pyramid"));
        assert!(!v.accepted);
        let v = classify_kronecker_factor(&fam("cube"));
        assert_eq!(v.reject_reason().unwrap().message, "product is disconnected");
        let v = classify_kronecker_factor(&fam("cycle:5"));
        assert!(matches!(v.reject_reason().unwrap().witness, Witness::LowDegree { .. }));
        assert_eq!(classify_kronecker_factor(&fam("twisted_prism:2")).branch, Branch::Thm4Ord2);
        let two = fam("complete:4").disjoint_union(&fam("complete:4"));
        assert!(matches!(classify_kronecker_factor(&two).reject_reason().unwrap().witness, Witness::Components(_)));
    }

    #[test]
    fn products() {
        use ProductKind::*;
        let k2 = fam("complete:2");
        assert!(classify_product(&fam("diamond"), &k2, Cartesian).accepted);
        assert!(classify_product(&fam("path:4"), &fam("cycle:7"), Cartesian).accepted);
        assert!(classify_product(&fam("cycle:7"), &fam("path:4"), Cartesian).accepted);
        assert!(!classify_product(&fam("complete:4"), &k2, Cartesian).accepted);
        assert!(classify_product(&fam("path:3"), &fam("path:3"), Strong).accepted);
        assert!(classify_product(&k2, &k2, Strong).accepted);
        assert!(!classify_product(&fam("path:3"), &k2, Strong).accepted);
        assert!(!classify_product(&fam("wheel:3"), &fam("path:3"), Kronecker).accepted);
        assert!(classify_product(&k2, &fam("prism:3"), Kronecker).accepted);
        let k1 = Graph::empty(1);
        assert_eq!(classify_product(&fam("complete:4"), &k1, Strong), Verdict::oracle(true));
        assert!(!classify_product(&fam("complete:4"), &k1, Kronecker).accepted);
    }
}
