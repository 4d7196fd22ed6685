use std::fmt;

use crate::graph::TwoColoring;
use crate::planar::FaceWalk;

use super::theorem1::Thm1Certificate;
use super::theorem2::Thm2Certificate;
use super::theorem4::Thm4Certificate;

/// Which rule produced a verdict. The `Display` strings are stable and
/// appear in CSV output and on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Branch {
    /// Decided by the brute-force oracle alone.
    Oracle,
    Thm1C1,
    Thm1C2,
    Thm1C3,
    Thm2,
    Thm4Ord1,
    Thm4Ord2,
    /// `K_2 □ B` with `B` outerplanar and 2-connected.
    CartesianK2Outerplanar,
    /// Path times polygon.
    CartesianPathCycle,
    /// `K_2 ⊠ K_2` or `P_3 ⊠ P_3`.
    StrongSmall,
    Reject(RejectReason),
    /// The embedding cap was exceeded; `accepted` comes from the oracle.
    Delegated,
}

impl Branch {
    pub fn tag(&self) -> &'static str {
        match self {
            Branch::Oracle => "Oracle",
            Branch::Thm1C1 => "Thm1-C1",
            Branch::Thm1C2 => "Thm1-C2",
            Branch::Thm1C3 => "Thm1-C3",
            Branch::Thm2 => "Thm2",
            Branch::Thm4Ord1 => "Thm4-ord1",
            Branch::Thm4Ord2 => "Thm4-ord2",
            Branch::CartesianK2Outerplanar => "Cart-K2-outerplanar",
            Branch::CartesianPathCycle => "Cart-path-cycle",
            Branch::StrongSmall => "Strong-small",
            Branch::Reject(_) => "Reject",
            Branch::Delegated => "Delegated",
        }
    }

    pub fn is_reject(&self) -> bool {
        matches!(self, Branch::Reject(_))
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Reject(r) => write!(f, "Reject({r})"),
            other => f.write_str(other.tag()),
        }
    }
}

/// Why a graph was rejected, with something concrete to look at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectReason {
    /// Rule that rejected, e.g. `"Thm1"` or `"Input"`.
    pub rule: &'static str,
    pub message: String,
    pub witness: Witness,
}

impl RejectReason {
    pub fn new(rule: &'static str, message: impl Into<String>, witness: Witness) -> Self {
        RejectReason {
            rule,
            message: message.into(),
            witness,
        }
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    None,
    Components(Vec<Vec<usize>>),
    TooFewVertices(usize),
    LowDegree { vertex: usize, degree: usize },
    CutVertex(usize),
    /// A proper 2-colouring: the Kronecker product with `K_2` splits in two.
    Bipartite(TwoColoring),
    /// The odd faces, with which of the three face conditions held.
    OddFaces { faces: Vec<FaceWalk>, fired: [bool; 3] },
    /// Odd regions containing no 2-cut (there should be exactly two).
    CutFreeOddRegions(Vec<FaceWalk>),
    /// A 2-cut leaving the wrong number of components, or a bipartite one.
    BadCut {
        cut: [usize; 2],
        components: Vec<Vec<usize>>,
        bipartite_component: Option<usize>,
    },
    /// Number of vertex colourings examined without success.
    ColoringsExhausted(u64),
    /// Factor sizes `(|V(H)|, |V(J)|)` after ordering.
    Factors(usize, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::None => f.write_str("none"),
            Witness::Components(c) => write!(f, "components {}", fmt_sets(c)),
            Witness::TooFewVertices(n) => write!(f, "{n} vertices"),
            Witness::LowDegree { vertex, degree } => write!(f, "vertex {vertex} has degree {degree}"),
            Witness::CutVertex(v) => write!(f, "cut vertex {v}"),
            Witness::Bipartite(c) => write!(f, "proper colouring {}", fmt_coloring(c)),
            Witness::OddFaces { faces, fired } => write!(
                f,
                "odd faces {} (C1={} C2={} C3={})",
                fmt_faces(faces),
                fired[0],
                fired[1],
                fired[2]
            ),
            Witness::CutFreeOddRegions(fs) => write!(f, "cut-free odd regions {}", fmt_faces(fs)),
            Witness::BadCut {
                cut,
                components,
                bipartite_component,
            } => {
                write!(f, "cut {{{}, {}}} leaves {}", cut[0], cut[1], fmt_sets(components))?;
                if let Some(i) = bipartite_component {
                    write!(f, "; component {i} is bipartite")?;
                }
                Ok(())
            }
            Witness::ColoringsExhausted(k) => write!(f, "{k} colourings examined"),
            Witness::Factors(a, b) => write!(f, "factor orders {a} and {b}"),
        }
    }
}

pub(crate) fn fmt_sets(sets: &[Vec<usize>]) -> String {
    let parts: Vec<String> = sets
        .iter()
        .map(|s| format!("{{{}}}", s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    parts.join(" ")
}

pub(crate) fn fmt_walk(f: &FaceWalk) -> String {
    f.boundary.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn fmt_faces(faces: &[FaceWalk]) -> String {
    let parts: Vec<String> = faces.iter().map(|f| format!("[{}]", fmt_walk(f))).collect();
    parts.join(" ")
}

pub(crate) fn fmt_coloring(c: &TwoColoring) -> String {
    c.color.iter().map(|b| char::from(b'0' + b)).collect()
}

/// Branch-specific evidence for an accepted verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    None,
    Thm1(Thm1Certificate),
    Thm2(Thm2Certificate),
    Thm4(Box<Thm4Certificate>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub accepted: bool,
    pub branch: Branch,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn accept(branch: Branch, certificate: Certificate) -> Self {
        Verdict {
            accepted: true,
            branch,
            certificate,
        }
    }

    pub fn reject(rule: &'static str, message: impl Into<String>, witness: Witness) -> Self {
        Verdict {
            accepted: false,
            branch: Branch::Reject(RejectReason::new(rule, message, witness)),
            certificate: Certificate::None,
        }
    }

    pub fn oracle(accepted: bool) -> Self {
        Verdict {
            accepted,
            branch: Branch::Oracle,
            certificate: Certificate::None,
        }
    }

    pub fn delegated(accepted: bool) -> Self {
        Verdict {
            accepted,
            branch: Branch::Delegated,
            certificate: Certificate::None,
        }
    }

    pub fn reject_reason(&self) -> Option<&RejectReason> {
        match &self.branch {
            Branch::Reject(r) => Some(r),
            _ => None,
        }
    }

    /// First line of the text form: `ACCEPT <branch>`, `REJECT (<reason>)`,
    /// or `DELEGATED (oracle: accept|reject)`.
    pub fn headline(&self) -> String {
        match &self.branch {
            Branch::Reject(r) => format!("REJECT ({r})"),
            Branch::Delegated => format!(
                "DELEGATED (oracle: {})",
                if self.accepted { "accept" } else { "reject" }
            ),
            b if self.accepted => format!("ACCEPT {}", b.tag()),
            b => format!("REJECT ({})", b.tag()),
        }
    }

    /// Line-oriented text form: the headline, then `key: value` lines.
    pub fn to_text(&self) -> String {
        let mut out = self.headline();
        out.push('\n');
        if let Branch::Reject(r) = &self.branch {
            out.push_str(&format!("witness: {}\n", r.witness));
        }
        match &self.certificate {
            Certificate::None => {}
            Certificate::Thm1(c) => out.push_str(&c.to_text()),
            Certificate::Thm2(c) => out.push_str(&c.to_text()),
            Certificate::Thm4(c) => out.push_str(&c.to_text()),
        }
        out
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.headline())
    }
}
