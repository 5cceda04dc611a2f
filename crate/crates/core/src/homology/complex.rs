use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use super::matrix::IntegerMatrix;
use super::snf::invariant_factors;
use super::HomologyError;

/// A pure simplicial complex given by its facets. Each facet is stored as an
/// ascending vertex list; the complex is the downward closure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    dimension: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn new<F, I>(facets: F) -> Result<Self, HomologyError>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut set = BTreeSet::new();
        let mut dimension = None;
        for facet in facets {
            let mut f: Vec<usize> = facet.into_iter().collect();
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(HomologyError::RepeatedVertex(f));
            }
            if f.is_empty() {
                return Err(HomologyError::Empty);
            }
            let d = f.len() - 1;
            if *dimension.get_or_insert(d) != d {
                return Err(HomologyError::NotPure);
            }
            set.insert(f);
        }
        let dimension = dimension.ok_or(HomologyError::Empty)?;
        Ok(SimplicialComplex {
            dimension,
            facets: set.into_iter().collect(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.facets.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    /// All `k`-simplices, lexicographically ordered.
    pub fn simplices(&self, k: usize) -> Vec<Vec<usize>> {
        if k > self.dimension {
            return Vec::new();
        }
        let mut out = BTreeSet::new();
        for facet in &self.facets {
            subsets(facet, k + 1, &mut |s| {
                out.insert(s.to_vec());
            });
        }
        out.into_iter().collect()
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dimension).map(|k| self.simplices(k).len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// `{σ \ {v} : v ∈ σ}` over the facets containing `v`.
    pub fn link(&self, v: usize) -> Result<SimplicialComplex, HomologyError> {
        let faces = self
            .facets
            .iter()
            .filter(|f| f.contains(&v))
            .map(|f| f.iter().copied().filter(|&x| x != v).collect::<Vec<_>>());
        SimplicialComplex::new(faces)
    }

    /// Replaces `facet` by the cone from a fresh vertex over its boundary.
    /// Returns the subdivided complex and the new vertex.
    pub fn stellar_subdivide(&self, facet: &[usize]) -> Result<(SimplicialComplex, usize), HomologyError> {
        let idx = self
            .facets
            .iter()
            .position(|f| f == facet)
            .ok_or_else(|| HomologyError::NotAFacet(facet.to_vec()))?;
        let apex = self.vertices().last().map_or(0, |v| v + 1);
        let mut facets = self.facets.clone();
        facets.remove(idx);
        for skip in 0..facet.len() {
            let mut f: Vec<usize> = facet
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &x)| x)
                .collect();
            f.push(apex);
            facets.push(f);
        }
        Ok((SimplicialComplex::new(facets)?, apex))
    }
}

fn subsets(items: &[usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(items: &[usize], start: usize, k: usize, buf: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if buf.len() == k {
            visit(buf);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - buf.len() {
                break;
            }
            buf.push(items[i]);
            go(items, i + 1, k, buf, visit);
            buf.pop();
        }
    }
    go(items, 0, k, &mut Vec::with_capacity(k), visit);
}

/// Simplicial chain complex with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    /// Rank of the chain group `C_n` for `n = 0..=dimension`.
    chain_ranks: Vec<usize>,
    /// `boundaries[n - 1]` is `∂_n : C_n → C_{n-1}` (rows index `(n-1)`-simplices).
    boundaries: Vec<IntegerMatrix>,
}

impl ChainComplex {
    pub fn dimension(&self) -> usize {
        self.chain_ranks.len() - 1
    }

    pub fn chain_ranks(&self) -> &[usize] {
        &self.chain_ranks
    }

    /// `∂_n` for `1 ≤ n ≤ dimension`.
    pub fn boundary(&self, n: usize) -> &IntegerMatrix {
        &self.boundaries[n - 1]
    }

    /// Whether `∂_{n-1} ∘ ∂_n = 0` for every `n`.
    pub fn boundary_squared_vanishes(&self) -> bool {
        self.boundaries.windows(2).all(|w| (&w[0] * &w[1]).is_zero())
    }
}

/// `∂[v_0,…,v_n] = Σ (−1)^i [v_0,…,v̂_i,…,v_n]` on ascending vertex tuples,
/// with simplices ordered lexicographically.
pub fn chain_complex(k: &SimplicialComplex) -> ChainComplex {
    let bases: Vec<Vec<Vec<usize>>> = (0..=k.dimension()).map(|n| k.simplices(n)).collect();
    let mut boundaries = Vec::with_capacity(k.dimension());
    for n in 1..=k.dimension() {
        let index: BTreeMap<&[usize], usize> = bases[n - 1]
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let mut m = IntegerMatrix::zeros(bases[n - 1].len(), bases[n].len());
        let mut face = Vec::with_capacity(n);
        for (col, simplex) in bases[n].iter().enumerate() {
            for i in 0..simplex.len() {
                face.clear();
                face.extend(simplex.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x));
                let row = index[face.as_slice()];
                m.set(row, col, if i % 2 == 0 { 1 } else { -1 });
            }
        }
        boundaries.push(m);
    }
    ChainComplex {
        chain_ranks: bases.iter().map(Vec::len).collect(),
        boundaries,
    }
}

/// A finitely generated abelian group `ℤ^rank ⊕ ℤ/d_1 ⊕ … ⊕ ℤ/d_k`, `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroupDecomp {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupDecomp {
    pub fn new(rank: usize, torsion: impl IntoIterator<Item = u64>) -> Self {
        AbelianGroupDecomp {
            rank,
            torsion: torsion.into_iter().map(BigInt::from).collect(),
        }
    }

    pub fn trivial() -> Self {
        Self::new(0, [])
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Dimension of `G ⊗ ℤ/p` for a prime `p`.
    pub fn mod_p_dimension(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.rank + self.torsion.iter().filter(|d| (*d % &p) == BigInt::from(0)).count()
    }
}

impl std::fmt::Display for AbelianGroupDecomp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Serialize for AbelianGroupDecomp {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let torsion: Vec<serde_json::Value> = self
            .torsion
            .iter()
            .map(|d| match u64::try_from(d) {
                Ok(x) => serde_json::Value::from(x),
                Err(_) => serde_json::Value::from(d.to_string()),
            })
            .collect();
        let mut st = serializer.serialize_struct("AbelianGroupDecomp", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("torsion", &torsion)?;
        st.end()
    }
}

/// `H_0, …, H_dim` of the chain complex.
pub fn homology_groups(c: &ChainComplex) -> Vec<AbelianGroupDecomp> {
    let dim = c.dimension();
    // Invariant factors of ∂_n for n = 1..=dim; ∂_0 and ∂_{dim+1} are zero.
    let factors: Vec<Vec<BigInt>> = (1..=dim).map(|n| invariant_factors(c.boundary(n))).collect();
    let rank_of = |n: usize| if n == 0 || n > dim { 0 } else { factors[n - 1].len() };
    (0..=dim)
        .map(|n| {
            let kernel = c.chain_ranks[n] - rank_of(n);
            let rank = kernel - rank_of(n + 1);
            let torsion = if n < dim {
                factors[n].iter().filter(|d| !d.is_one()).cloned().collect()
            } else {
                Vec::new()
            };
            AbelianGroupDecomp { rank, torsion }
        })
        .collect()
}

/// Shorthand for `homology_groups(&chain_complex(k))`.
pub fn homology(k: &SimplicialComplex) -> Vec<AbelianGroupDecomp> {
    homology_groups(&chain_complex(k))
}

/// Reduced homology: `H̃_0` drops one free summand.
pub fn reduced_homology(k: &SimplicialComplex) -> Vec<AbelianGroupDecomp> {
    let mut h = homology(k);
    h[0].rank -= 1;
    h
}

/// Joins `K` with two new apex vertices.
pub fn suspend(k: &SimplicialComplex) -> SimplicialComplex {
    let top = *k.vertices().last().expect("complexes are nonempty");
    let (north, south) = (top + 1, top + 2);
    let facets = k.facets().iter().flat_map(|f| {
        [north, south]
            .into_iter()
            .map(move |apex| f.iter().copied().chain([apex]).collect::<Vec<_>>())
    });
    SimplicialComplex::new(facets).expect("suspension of a pure complex is pure")
}

/// How a vertex link classifies in a 3-dimensional pseudomanifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    /// Link has the homology of `S²`.
    Regular,
    /// Link has the homology of `ℝP²`.
    Singular,
}

pub fn vertex_kind(k: &SimplicialComplex, v: usize) -> Result<VertexKind, HomologyError> {
    if k.dimension() != 3 {
        return Err(HomologyError::NotThreeDimensional(k.dimension()));
    }
    let link = k.link(v)?;
    let h = homology(&link);
    let sphere = [
        AbelianGroupDecomp::new(1, []),
        AbelianGroupDecomp::trivial(),
        AbelianGroupDecomp::new(1, []),
    ];
    let projective = [
        AbelianGroupDecomp::new(1, []),
        AbelianGroupDecomp::new(0, [2]),
        AbelianGroupDecomp::trivial(),
    ];
    if h == sphere {
        Ok(VertexKind::Regular)
    } else if h == projective {
        Ok(VertexKind::Singular)
    } else {
        Err(HomologyError::MalformedLink {
            vertex: v,
            homology: h.iter().map(ToString::to_string).collect(),
        })
    }
}

/// Vertices whose link has the homology of `ℝP²`.
pub fn singular_vertex_count(k: &SimplicialComplex) -> Result<usize, HomologyError> {
    let mut count = 0;
    for v in k.vertices() {
        if vertex_kind(k, v)? == VertexKind::Singular {
            count += 1;
        }
    }
    Ok(count)
}

// A facet all of whose vertices are regular. When none exists, subdivide a
// facet that has a regular triangle: the tetrahedron over that triangle and
// the new interior vertex is regular.
fn regular_facet(k: &SimplicialComplex) -> Result<(SimplicialComplex, Vec<usize>), HomologyError> {
    let mut kinds = BTreeMap::new();
    for v in k.vertices() {
        kinds.insert(v, vertex_kind(k, v)?);
    }
    let regular = |v: &usize| kinds[v] == VertexKind::Regular;
    if let Some(f) = k.facets().iter().find(|f| f.iter().all(regular)) {
        return Ok((k.clone(), f.clone()));
    }
    for f in k.facets() {
        if let Some(skip) = f.iter().position(|v| !regular(v)) {
            let face: Vec<usize> = f
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            if face.iter().all(regular) {
                let (sub, apex) = k.stellar_subdivide(f)?;
                let mut facet = face;
                facet.push(apex);
                return Ok((sub, facet));
            }
        }
    }
    Err(HomologyError::NoRegularFacet)
}

/// Connected sum of two closed 3-dimensional pseudomanifolds.
///
/// A facet away from singular vertices is removed from each summand and the
/// two boundary spheres are identified, matching vertices in ascending order.
/// The second summand's other vertices are relabelled above the first's.
pub fn connected_sum(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Result<SimplicialComplex, HomologyError> {
    for k in [k1, k2] {
        if k.dimension() != 3 {
            return Err(HomologyError::NotThreeDimensional(k.dimension()));
        }
    }
    let (a, fa) = regular_facet(k1)?;
    let (b, fb) = regular_facet(k2)?;

    let mut next = a.vertices().last().map_or(0, |v| v + 1);
    let mut relabel: BTreeMap<usize, usize> = fb.iter().copied().zip(fa.iter().copied()).collect();
    for v in b.vertices() {
        relabel.entry(v).or_insert_with(|| {
            next += 1;
            next - 1
        });
    }

    let facets = a.facets().iter().filter(|f| **f != fa).cloned().chain(
        b.facets()
            .iter()
            .filter(|f| **f != fb)
            .map(|f| f.iter().map(|v| relabel[v]).collect()),
    );
    SimplicialComplex::new(facets)
}
