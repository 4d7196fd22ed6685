//! The general criterion: a planar bipartite spanning subgraph plus chords
//! placed on one region in a prescribed cyclic order.

use crate::graph::{Graph, TwoColoring};
use crate::planar::{enumerate_embeddings, planar_embedding, FaceWalk, PlanarEmbedding, DEFAULT_EMBED_CAP};

use super::region::{match_region, verify_directed, CutArcRecord, RegionOrder};
use super::verdict::{fmt_coloring, fmt_walk, Branch, Certificate, Verdict, Witness};
use super::{kronecker_oracle, ReplayError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm4Certificate {
    pub coloring: TwoColoring,
    /// Removed edges `(a_i, b_i)` in the order they appear on the region.
    pub removed: Vec<(usize, usize)>,
    /// Embedding of the bipartite spanning subgraph.
    pub base: PlanarEmbedding,
    pub region: FaceWalk,
    pub order: RegionOrder,
    /// Whether the order reads along the region walk or against it.
    pub forward: bool,
    pub cut_transcript: Vec<CutArcRecord>,
}

/// What the spanning subgraph must look like, and its 2-cuts.
pub(crate) enum BaseShape {
    ThreeConnected,
    SemiHyper(Vec<[usize; 2]>),
}

impl BaseShape {
    pub(crate) fn cuts(&self) -> &[[usize; 2]] {
        match self {
            BaseShape::ThreeConnected => &[],
            BaseShape::SemiHyper(c) => c,
        }
    }
}

/// `Some` iff `g` is 3-connected or semi-hyper-2-connected.
pub(crate) fn base_shape(g: &Graph) -> Option<BaseShape> {
    if !g.is_biconnected() {
        return None;
    }
    if g.is_k_connected(3) {
        return Some(BaseShape::ThreeConnected);
    }
    let cuts = g.enumerate_cuts(2);
    if cuts.iter().all(|c| c.components.len() == 2) {
        Some(BaseShape::SemiHyper(
            cuts.iter().map(|c| [c.vertices[0], c.vertices[1]]).collect(),
        ))
    } else {
        None
    }
}

fn has_disjoint_pair(edges: &[(usize, usize)]) -> bool {
    edges.iter().enumerate().any(|(i, &(a, b))| {
        edges[i + 1..]
            .iter()
            .any(|&(c, d)| a != c && a != d && b != c && b != d)
    })
}

/// Searches vertex colourings in increasing index order; the edges made
/// monochromatic are the candidates for removal. Uses the default
/// embedding cap.
pub fn check_theorem4(h: &Graph) -> Verdict {
    check_theorem4_with_cap(h, DEFAULT_EMBED_CAP)
}

pub fn check_theorem4_with_cap(h: &Graph, cap: usize) -> Verdict {
    let n = h.n();
    if n < 4 {
        return Verdict::reject("Thm4", "fewer than 4 vertices", Witness::TooFewVertices(n));
    }
    if n > 64 {
        return Verdict::delegated(kronecker_oracle(h));
    }
    let total = 1u64 << (n - 1);
    let mut delegated = false;
    for index in 0..total {
        let coloring = TwoColoring::from_index(n, index);
        let removed: Vec<(usize, usize)> = h
            .edges()
            .into_iter()
            .filter(|&(u, v)| coloring.is_monochromatic(u, v))
            .collect();
        if removed.len() < 2 || !has_disjoint_pair(&removed) {
            continue;
        }
        let base = h.delete_edges(&removed).expect("removed edges come from h");
        if base.min_degree() < 2 {
            continue;
        }
        let Some(shape) = base_shape(&base) else { continue };
        let Some(first) = planar_embedding(&base) else { continue };
        let embeddings = match shape {
            BaseShape::ThreeConnected => vec![first],
            BaseShape::SemiHyper(_) => match enumerate_embeddings(&base, cap) {
                Ok(e) => e,
                Err(_) => {
                    delegated = true;
                    continue;
                }
            },
        };
        for emb in embeddings {
            for region in emb.faces() {
                if let Some(m) = match_region(&region, &removed, shape.cuts()) {
                    let branch = match m.order {
                        RegionOrder::Nested => Branch::Thm4Ord1,
                        RegionOrder::Crossing => Branch::Thm4Ord2,
                    };
                    let cert = Thm4Certificate {
                        coloring,
                        removed: m.chords,
                        base: emb,
                        region,
                        order: m.order,
                        forward: m.forward,
                        cut_transcript: m.transcript,
                    };
                    return Verdict::accept(branch, Certificate::Thm4(Box::new(cert)));
                }
            }
        }
    }
    if delegated {
        return Verdict::delegated(kronecker_oracle(h));
    }
    Verdict::reject(
        "Thm4",
        "no colouring yields an admissible spanning subgraph",
        Witness::ColoringsExhausted(total),
    )
}

impl Thm4Certificate {
    pub fn to_text(&self) -> String {
        let mut out = format!("coloring: {}\n", fmt_coloring(&self.coloring));
        let chords: Vec<String> = self.removed.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        out.push_str(&format!("removed: {}\n", chords.join(" ")));
        out.push_str(&format!("region: {}\n", fmt_walk(&self.region)));
        out.push_str(&format!(
            "order: {} {}\n",
            self.order,
            if self.forward { "forward" } else { "reverse" }
        ));
        for rec in &self.cut_transcript {
            out.push_str(&format!(
                "cut {} {}: offsets {} {} clear\n",
                rec.cut[0], rec.cut[1], rec.offsets[0], rec.offsets[1]
            ));
        }
        out
    }

    /// Rebuilds `h` from the base and the removed edges and re-checks every
    /// condition from scratch.
    pub fn replay(&self, h: &Graph) -> Result<(), ReplayError> {
        let base = self.base.graph();
        if base.n() != h.n() {
            return Err(ReplayError::GraphMismatch);
        }
        if self.removed.iter().any(|&(a, b)| base.has_edge(a, b)) {
            return Err(ReplayError::Condition("a removed edge is still in the base".into()));
        }
        let rebuilt = base
            .add_edges(&self.removed)
            .map_err(|e| ReplayError::Condition(e.to_string()))?;
        if &rebuilt != h || rebuilt.m() != base.m() + self.removed.len() {
            return Err(ReplayError::GraphMismatch);
        }
        if h.min_degree() < 3 {
            return Err(ReplayError::Condition("minimum degree below 3".into()));
        }
        if self.coloring.color.len() != h.n() || !self.coloring.is_proper_for(base) {
            return Err(ReplayError::Condition("colouring is not proper on the base".into()));
        }
        if !self.removed.iter().all(|&(a, b)| self.coloring.is_monochromatic(a, b)) {
            return Err(ReplayError::Condition("a removed edge joins different colours".into()));
        }
        let emb = PlanarEmbedding::new(base.clone(), self.base.rotation().to_vec())
            .map_err(|e| ReplayError::Embedding(e.to_string()))?;
        let shape =
            base_shape(base).ok_or_else(|| ReplayError::Condition("base is neither 3-connected nor semi-hyper".into()))?;
        if !emb.faces().contains(&self.region) {
            return Err(ReplayError::Condition("region is not a face of the base".into()));
        }
        if !shape.cuts().iter().flatten().all(|&v| self.region.contains(v)) {
            return Err(ReplayError::Condition("a 2-cut is off the region".into()));
        }
        let transcript = verify_directed(&self.region, &self.removed, self.order, self.forward, shape.cuts())
            .map_err(|e| ReplayError::Condition(e.to_string()))?;
        if transcript != self.cut_transcript {
            return Err(ReplayError::Condition("cut transcript differs".into()));
        }
        Ok(())
    }
}
