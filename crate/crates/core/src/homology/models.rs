//! Explicit triangulations used as test models.

use std::fmt;
use std::str::FromStr;

use super::complex::{connected_sum, suspend, SimplicialComplex};
use super::HomologyError;

/// The 6-vertex, 10-triangle triangulation of `ℝP²` (antipodal quotient of
/// the icosahedron): vertex 0 over a pentagon 1..5, closed up by a twist.
pub fn rp2_minimal() -> SimplicialComplex {
    SimplicialComplex::new([
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 3, 5],
        [1, 3, 4],
        [2, 4, 5],
        [1, 3, 5],
    ])
    .expect("static model")
}

/// Boundary of the `n`-simplex on vertices `0..=n`: a triangulated `S^{n-1}`.
pub fn simplex_boundary(n: usize) -> SimplicialComplex {
    let facets = (0..=n).map(|skip| (0..=n).filter(move |&v| v != skip));
    SimplicialComplex::new(facets).expect("n ≥ 1")
}

/// Triangulated circle with `n ≥ 3` vertices.
pub fn circle(n: usize) -> SimplicialComplex {
    assert!(n >= 3, "a simplicial circle needs at least 3 vertices");
    SimplicialComplex::new((0..n).map(|i| [i, (i + 1) % n])).expect("static model")
}

/// Staircase triangulation of `|K| × |L|` using the vertex orders of both.
pub fn product(k: &SimplicialComplex, l: &SimplicialComplex) -> SimplicialComplex {
    let kv = k.vertices();
    let lv = l.vertices();
    let id = |a: usize, b: usize| {
        let i = kv.binary_search(&a).expect("vertex of K");
        let j = lv.binary_search(&b).expect("vertex of L");
        i * lv.len() + j
    };
    let (p, q) = (k.dimension(), l.dimension());
    let mut facets = Vec::new();
    for sigma in k.facets() {
        for tau in l.facets() {
            staircases(p, q, &mut |path| {
                facets.push(path.iter().map(|&(i, j)| id(sigma[i], tau[j])).collect::<Vec<_>>());
            });
        }
    }
    SimplicialComplex::new(facets).expect("product of pure complexes is pure")
}

// Monotone lattice paths from (0,0) to (p,q).
fn staircases(p: usize, q: usize, visit: &mut impl FnMut(&[(usize, usize)])) {
    fn go(p: usize, q: usize, path: &mut Vec<(usize, usize)>, visit: &mut impl FnMut(&[(usize, usize)])) {
        let (i, j) = *path.last().unwrap();
        if (i, j) == (p, q) {
            visit(path);
            return;
        }
        if i < p {
            path.push((i + 1, j));
            go(p, q, path, visit);
            path.pop();
        }
        if j < q {
            path.push((i, j + 1));
            go(p, q, path, visit);
            path.pop();
        }
    }
    go(p, q, &mut vec![(0, 0)], visit);
}

/// `S² × S¹` as the product of the tetrahedron boundary and a triangle.
pub fn s2_times_s1() -> SimplicialComplex {
    product(&simplex_boundary(3), &circle(3))
}

/// `S³` as the boundary of the 4-simplex.
pub fn s3() -> SimplicialComplex {
    simplex_boundary(4)
}

/// Connected sum of `r ≥ 1` copies of `Susp(ℝP²)`.
pub fn realize_suspension_sum(r: usize) -> Result<SimplicialComplex, HomologyError> {
    if r == 0 {
        return Err(HomologyError::ZeroSummands);
    }
    let piece = suspend(&rp2_minimal());
    let mut acc = piece.clone();
    for _ in 1..r {
        acc = connected_sum(&acc, &piece)?;
    }
    Ok(acc)
}

/// Named models accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Rp2,
    /// `sus_rp2^k`; `sus_rp2` is `k = 1`.
    SuspensionSum(usize),
    S3,
    S2xS1,
}

impl Model {
    pub fn build(self) -> Result<SimplicialComplex, HomologyError> {
        match self {
            Model::Rp2 => Ok(rp2_minimal()),
            Model::SuspensionSum(k) => realize_suspension_sum(k),
            Model::S3 => Ok(s3()),
            Model::S2xS1 => Ok(s2_times_s1()),
        }
    }
}

impl FromStr for Model {
    type Err = HomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || HomologyError::UnknownModel(s.to_string());
        match s {
            "rp2" => Ok(Model::Rp2),
            "sus_rp2" => Ok(Model::SuspensionSum(1)),
            "s3" => Ok(Model::S3),
            "s2xs1" => Ok(Model::S2xS1),
            _ => {
                let k = s.strip_prefix("sus_rp2^").ok_or_else(unknown)?;
                match k.parse::<usize>() {
                    Ok(k) if k >= 1 => Ok(Model::SuspensionSum(k)),
                    _ => Err(unknown()),
                }
            }
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Rp2 => f.write_str("rp2"),
            Model::SuspensionSum(1) => f.write_str("sus_rp2"),
            Model::SuspensionSum(k) => write!(f, "sus_rp2^{k}"),
            Model::S3 => f.write_str("s3"),
            Model::S2xS1 => f.write_str("s2xs1"),
        }
    }
}
