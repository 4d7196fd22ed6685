//! Kronecker, Cartesian and strong products, and the named graph families
//! used throughout the crate and the command line.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest family parameter accepted.
pub const MAX_FAMILY_PARAMETER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProductKind {
    Kronecker,
    Cartesian,
    Strong,
}

impl ProductKind {
    pub const ALL: [ProductKind; 3] = [ProductKind::Kronecker, ProductKind::Cartesian, ProductKind::Strong];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Kronecker => "kronecker",
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "kronecker" | "direct" | "tensor" => Ok(ProductKind::Kronecker),
            "cartesian" | "box" => Ok(ProductKind::Cartesian),
            "strong" => Ok(ProductKind::Strong),
            other => Err(FamilyError::UnknownProduct(other.to_string())),
        }
    }
}

/// Product graph; vertex `(a, x)` gets index `a * |V(J)| + x`.
pub fn product(h: &Graph, j: &Graph, kind: ProductKind) -> Graph {
    let nj = j.n();
    let idx = |a: usize, x: usize| a * nj + x;
    let mut edges = Vec::new();
    let he = h.edges();
    let je = j.edges();
    if matches!(kind, ProductKind::Kronecker | ProductKind::Strong) {
        for &(a, b) in &he {
            for &(x, y) in &je {
                edges.push((idx(a, x), idx(b, y)));
                edges.push((idx(a, y), idx(b, x)));
            }
        }
    }
    if matches!(kind, ProductKind::Cartesian | ProductKind::Strong) {
        for a in 0..h.n() {
            for &(x, y) in &je {
                edges.push((idx(a, x), idx(a, y)));
            }
        }
        for &(a, b) in &he {
            for x in 0..nj {
                edges.push((idx(a, x), idx(b, x)));
            }
        }
    }
    Graph::from_edges_unchecked(h.n() * nj, &edges)
}

pub fn kronecker(h: &Graph, j: &Graph) -> Graph {
    product(h, j, ProductKind::Kronecker)
}

pub fn cartesian(h: &Graph, j: &Graph) -> Graph {
    product(h, j, ProductKind::Cartesian)
}

pub fn strong(h: &Graph, j: &Graph) -> Graph {
    product(h, j, ProductKind::Strong)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("unknown product kind `{0}`")]
    UnknownProduct(String),
    #[error("family `{family}` expects {expected} parameter(s), got {got}")]
    Arity {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("bad parameter `{0}`")]
    BadParameter(String),
    #[error("parameter {value} out of range for `{family}` (allowed {min}..={max})")]
    OutOfRange {
        family: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A named family member, parsed from `name:p1,p2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `n`-gon plus an apex (the `n`-gonal pyramid); the apex is vertex `n`.
    Wheel(usize),
    /// `C_n □ K_2`.
    Prism(usize),
    /// `P_n □ K_2`: rails `a_i = i`, `b_i = n + i`.
    Ladder(usize),
    PseudoDoubleWheel(usize),
    TwistedPrism(usize),
    Cube,
    Diamond,
    SquarePyramid,
}

impl FamilySpec {
    fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "complete_bipartite",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::Prism(_) => "prism",
            FamilySpec::Ladder(_) => "ladder",
            FamilySpec::PseudoDoubleWheel(_) => "pseudo_double_wheel",
            FamilySpec::TwistedPrism(_) => "twisted_prism",
            FamilySpec::Cube => "cube",
            FamilySpec::Diamond => "diamond",
            FamilySpec::SquarePyramid => "square_pyramid",
        }
    }

    fn check(&self) -> Result<(), FamilyError> {
        let range = |family, value: usize, min: usize| {
            if value < min || value > MAX_FAMILY_PARAMETER {
                Err(FamilyError::OutOfRange {
                    family,
                    value,
                    min,
                    max: MAX_FAMILY_PARAMETER,
                })
            } else {
                Ok(())
            }
        };
        let name = self.name();
        match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::PseudoDoubleWheel(n) => range(name, n, 1),
            FamilySpec::Cycle(n) | FamilySpec::Wheel(n) | FamilySpec::Prism(n) => range(name, n, 3),
            FamilySpec::Ladder(n) | FamilySpec::TwistedPrism(n) => range(name, n, 2),
            FamilySpec::CompleteBipartite(a, b) => range(name, a, 1).and(range(name, b, 1)),
            FamilySpec::Cube | FamilySpec::Diamond | FamilySpec::SquarePyramid => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Prism(n)
            | FamilySpec::Ladder(n)
            | FamilySpec::PseudoDoubleWheel(n)
            | FamilySpec::TwistedPrism(n) => write!(f, "{}:{n}", self.name()),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "{}:{a},{b}", self.name()),
            FamilySpec::Cube | FamilySpec::Diamond | FamilySpec::SquarePyramid => f.write_str(self.name()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n, p),
            None => (s, ""),
        };
        let params: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| FamilyError::BadParameter(p.to_string())))
                .collect::<Result<_, _>>()?
        };
        let arity = |family: &'static str, expected: usize| {
            if params.len() == expected {
                Ok(())
            } else {
                Err(FamilyError::Arity {
                    family,
                    expected,
                    got: params.len(),
                })
            }
        };
        let spec = match name {
            "path" => arity("path", 1).map(|_| FamilySpec::Path(params[0])),
            "cycle" => arity("cycle", 1).map(|_| FamilySpec::Cycle(params[0])),
            "complete" => arity("complete", 1).map(|_| FamilySpec::Complete(params[0])),
            "complete_bipartite" => {
                arity("complete_bipartite", 2).map(|_| FamilySpec::CompleteBipartite(params[0], params[1]))
            }
            "wheel" | "pyramid" => arity("wheel", 1).map(|_| FamilySpec::Wheel(params[0])),
            "prism" => arity("prism", 1).map(|_| FamilySpec::Prism(params[0])),
            "ladder" => arity("ladder", 1).map(|_| FamilySpec::Ladder(params[0])),
            "pseudo_double_wheel" => arity("pseudo_double_wheel", 1).map(|_| FamilySpec::PseudoDoubleWheel(params[0])),
            "twisted_prism" => arity("twisted_prism", 1).map(|_| FamilySpec::TwistedPrism(params[0])),
            "cube" => arity("cube", 0).map(|_| FamilySpec::Cube),
            "diamond" => arity("diamond", 0).map(|_| FamilySpec::Diamond),
            "square_pyramid" => arity("square_pyramid", 0).map(|_| FamilySpec::SquarePyramid),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }?;
        spec.check()?;
        Ok(spec)
    }
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

pub fn make_family(spec: FamilySpec) -> Result<Graph, FamilyError> {
    spec.check()?;
    let g = match spec {
        FamilySpec::Path(n) => {
            let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges_unchecked(n, &e)
        }
        FamilySpec::Cycle(n) => Graph::from_edges_unchecked(n, &cycle_edges(n)),
        FamilySpec::Complete(n) => {
            let mut e = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    e.push((i, j));
                }
            }
            Graph::from_edges_unchecked(n, &e)
        }
        FamilySpec::CompleteBipartite(a, b) => {
            let mut e = Vec::new();
            for i in 0..a {
                for j in 0..b {
                    e.push((i, a + j));
                }
            }
            Graph::from_edges_unchecked(a + b, &e)
        }
        FamilySpec::Wheel(n) => {
            let mut e = cycle_edges(n);
            e.extend((0..n).map(|i| (i, n)));
            Graph::from_edges_unchecked(n + 1, &e)
        }
        FamilySpec::Prism(n) => {
            let c = Graph::from_edges_unchecked(n, &cycle_edges(n));
            cartesian(&c, &make_family(FamilySpec::Complete(2))?)
        }
        FamilySpec::Ladder(n) => {
            let mut e = Vec::new();
            for i in 0..n {
                e.push((i, n + i));
                if i + 1 < n {
                    e.push((i, i + 1));
                    e.push((n + i, n + i + 1));
                }
            }
            Graph::from_edges_unchecked(2 * n, &e)
        }
        FamilySpec::PseudoDoubleWheel(n) => pseudo_double_wheel(n)?,
        FamilySpec::TwistedPrism(n) => twisted_prism(n)?,
        FamilySpec::Cube => {
            let mut e = Vec::new();
            for v in 0..8usize {
                for b in 0..3 {
                    let w = v ^ (1 << b);
                    if v < w {
                        e.push((v, w));
                    }
                }
            }
            Graph::from_edges_unchecked(8, &e)
        }
        FamilySpec::Diamond => Graph::from_edges_unchecked(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        FamilySpec::SquarePyramid => make_family(FamilySpec::Wheel(4))?,
    };
    Ok(g)
}

/// Quadrangulation on `4n + 4` vertices: a `(4n + 2)`-cycle whose even
/// vertices join apex `4n + 2` and odd vertices join apex `4n + 3`.
pub fn pseudo_double_wheel(n: usize) -> Result<Graph, FamilyError> {
    FamilySpec::PseudoDoubleWheel(n).check()?;
    let len = 4 * n + 2;
    let (p, q) = (len, len + 1);
    let mut e = cycle_edges(len);
    for i in 0..len {
        e.push((i, if i % 2 == 0 { p } else { q }));
    }
    Ok(Graph::from_edges_unchecked(len + 2, &e))
}

/// The `2n`-rung ladder `a_0..a_{2n-1}` / `b_0..b_{2n-1}` closed by the two
/// crossing chords `a_{2n-1} b_0` and `b_{2n-1} a_0`. Vertex `a_i` is `i`,
/// `b_i` is `2n + i`.
pub fn twisted_prism(n: usize) -> Result<Graph, FamilyError> {
    FamilySpec::TwistedPrism(n).check()?;
    let rungs = 2 * n;
    let ladder = make_family(FamilySpec::Ladder(rungs))?;
    let (a, b) = (|i: usize| i, |i: usize| rungs + i);
    Ok(ladder.add_edges(&[(a(rungs - 1), b(0)), (b(rungs - 1), a(0))])?)
}

/// Replaces edge `uv` by a path with `length` edges; `length` must be even
/// and at least 2. New vertices are appended in path order from `u`.
pub fn subdivide_even(g: &Graph, edge: (usize, usize), length: usize) -> Result<Graph, FamilyError> {
    let (u, v) = edge;
    if !g.has_edge(u, v) {
        return Err(FamilyError::BadParameter(format!("{u}-{v} is not an edge")));
    }
    if length < 2 || length % 2 != 0 {
        return Err(FamilyError::BadParameter(format!("subdivision length {length} is not even")));
    }
    let base = g.n();
    let mut e: Vec<_> = g.edges().into_iter().filter(|&(a, b)| (a, b) != (u.min(v), u.max(v))).collect();
    let mut prev = u;
    for i in 0..length - 1 {
        e.push((prev, base + i));
        prev = base + i;
    }
    e.push((prev, v));
    Ok(Graph::from_edge_list(base + length - 1, &e)?)
}
