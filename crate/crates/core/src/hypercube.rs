//! Immutable combinatorial model of the hypercube Q_n: vertices as bit
//! masks, a dense edge indexing, Hamming-weight layers, and the action of
//! the hyperoctahedral group (coordinate permutations and complements).

use crate::error::{Error, Result};

/// Largest supported dimension; keeps every edge index in machine-word range.
pub const MAX_DIMENSION: usize = 16;

pub(crate) fn check_dimension(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_DIMENSION {
        return Err(Error::Dimension {
            n,
            min,
            max: MAX_DIMENSION,
        });
    }
    Ok(())
}

/// A vertex of Q_n, stored as an n-bit coordinate mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CubeVertex(pub u32);

impl CubeVertex {
    pub fn mask(self) -> u32 {
        self.0
    }

    /// Hamming weight, i.e. the index of the layer containing this vertex.
    pub fn weight(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn in_range(self, n: usize) -> bool {
        self.0 < (1u32 << n)
    }

    /// Coordinate string, most significant bit first.
    pub fn bitstring(self, n: usize) -> String {
        (0..n).rev().map(|d| if self.0 >> d & 1 == 1 { '1' } else { '0' }).collect()
    }
}

fn check_vertex(v: CubeVertex, n: usize) -> Result<()> {
    if !v.in_range(n) {
        return Err(Error::VertexOutOfRange { mask: v.0, n });
    }
    Ok(())
}

/// A hypercube edge identified by the coordinate it spans and its lower
/// endpoint (the one with that coordinate equal to 0).
///
/// Edges carry a dense index `dim * 2^(n-1) + rank(base)`, where `rank`
/// counts `base` among the vertices with bit `dim` clear. The mapping is a
/// bijection onto `[0, n * 2^(n-1))`, so edge sets are plain bit vectors
/// with O(1) membership.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeIndex {
    dim: usize,
    base: CubeVertex,
}

impl EdgeIndex {
    pub fn new(n: usize, dim: usize, base: CubeVertex) -> Result<Self> {
        check_dimension(n, 1)?;
        if dim >= n {
            return Err(Error::CoordinateOutOfRange { dim, n });
        }
        check_vertex(base, n)?;
        if base.0 >> dim & 1 == 1 {
            return Err(Error::InvalidEdgeBase { base: base.0, dim });
        }
        Ok(EdgeIndex {
            dim,
            base,
        })
    }

    /// Builds the edge joining two adjacent vertices, in either order.
    pub fn from_endpoints(n: usize, a: CubeVertex, b: CubeVertex) -> Result<Self> {
        check_dimension(n, 1)?;
        check_vertex(a, n)?;
        check_vertex(b, n)?;
        let diff = a.0 ^ b.0;
        if diff == 0 || !diff.is_power_of_two() {
            return Err(Error::NotAnEdge { a: a.0, b: b.0 });
        }
        let dim = diff.trailing_zeros() as usize;
        let base = CubeVertex(a.0 & !diff);
        Ok(EdgeIndex { dim, base })
    }

    pub fn dim(self) -> usize {
        self.dim
    }

    pub fn base(self) -> CubeVertex {
        self.base
    }

    /// The endpoint with bit `dim` set.
    pub fn upper(self) -> CubeVertex {
        CubeVertex(self.base.0 | 1 << self.dim)
    }

    /// Both endpoints, lower first.
    pub fn endpoints(self) -> (CubeVertex, CubeVertex) {
        (self.base, self.upper())
    }

    pub fn dense_id(self, n: usize) -> usize {
        debug_assert!(self.dim < n);
        self.dim * (1 << (n - 1)) + rank_without_bit(self.base.0, self.dim)
    }

    pub fn from_dense_id(n: usize, id: usize) -> Result<Self> {
        check_dimension(n, 1)?;
        let half = 1usize << (n - 1);
        if id >= n * half {
            return Err(Error::CoordinateOutOfRange { dim: id / half, n });
        }
        let dim = id / half;
        let base = CubeVertex(unrank_without_bit(id % half, dim));
        Ok(EdgeIndex { dim, base })
    }
}

// Rank of `mask` among masks with bit `dim` clear, ascending: drop bit `dim`.
fn rank_without_bit(mask: u32, dim: usize) -> usize {
    let low = mask & ((1 << dim) - 1);
    let high = mask >> (dim + 1);
    (high << dim | low) as usize
}

fn unrank_without_bit(rank: usize, dim: usize) -> u32 {
    let rank = rank as u32;
    let low = rank & ((1 << dim) - 1);
    let high = rank >> dim;
    high << (dim + 1) | low
}

/// Number of edges of Q_n.
pub fn edge_count(n: usize) -> Result<usize> {
    check_dimension(n, 1)?;
    Ok(n << (n - 1))
}

/// The n neighbors of `v` in Q_n, in ascending coordinate order.
pub fn neighbors(v: CubeVertex, n: usize) -> Result<Vec<CubeVertex>> {
    check_dimension(n, 1)?;
    check_vertex(v, n)?;
    Ok((0..n).map(|d| CubeVertex(v.0 ^ (1 << d))).collect())
}

/// Hamming-weight layer of a vertex.
pub fn layer(v: CubeVertex) -> usize {
    v.weight()
}

/// Size of layer i of Q_n, i.e. binomial(n, i). Each vertex of layer i has
/// i neighbors in layer i-1 and n-i in layer i+1.
pub fn layer_size(n: usize, i: usize) -> Result<u64> {
    check_dimension(n, 1)?;
    if i > n {
        return Err(Error::CoordinateOutOfRange { dim: i, n });
    }
    let mut acc = 1u64;
    for j in 0..i.min(n - i) {
        acc = acc * (n - j) as u64 / (j + 1) as u64;
    }
    Ok(acc)
}

/// An automorphism of Q_n: permute the coordinates, then complement the
/// ones selected by `flip`. These n!·2^n maps form the full automorphism
/// group of the hypercube and preserve adjacency.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeAutomorphism {
    perm: Vec<usize>,
    flip: u32,
}

impl CubeAutomorphism {
    /// `perm[d]` is the image coordinate of input coordinate `d`.
    pub fn new(perm: Vec<usize>, flip: u32) -> Result<Self> {
        let n = perm.len();
        check_dimension(n, 1)?;
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidPermutation { n });
            }
            seen[p] = true;
        }
        if flip >= 1 << n {
            return Err(Error::InvalidFlipMask { flip, n });
        }
        Ok(CubeAutomorphism { perm, flip })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((0..n).collect(), 0)
    }

    pub fn dimension(&self) -> usize {
        self.perm.len()
    }

    /// Image of a vertex. Panics if the mask is out of range.
    pub fn apply_vertex(&self, v: CubeVertex) -> CubeVertex {
        let n = self.perm.len();
        assert!(v.in_range(n), "vertex {} out of range for Q_{}", v.0, n);
        let mut out = 0u32;
        for (d, &p) in self.perm.iter().enumerate() {
            if v.0 >> d & 1 == 1 {
                out |= 1 << p;
            }
        }
        CubeVertex(out ^ self.flip)
    }

    /// Image of an edge; adjacency is preserved, so this is total.
    pub fn apply_edge(&self, e: EdgeIndex) -> EdgeIndex {
        let n = self.perm.len();
        let (a, b) = e.endpoints();
        EdgeIndex::from_endpoints(n, self.apply_vertex(a), self.apply_vertex(b))
            .expect("automorphism maps edges to edges")
    }

    /// An automorphism carrying `from` to `to`: translate `from.base` to the
    /// origin, swap the spanned coordinates, translate to `to.base`. Its
    /// existence for every edge pair is what makes Q_n edge-transitive.
    pub fn edge_transporter(n: usize, from: EdgeIndex, to: EdgeIndex) -> Result<Self> {
        check_dimension(n, 1)?;
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(from.dim(), to.dim());
        // flip = perm(from.base) ^ to.base, so from.base lands on to.base.
        let swapped = {
            let b = from.base().0;
            let mut out = 0u32;
            for (d, &p) in perm.iter().enumerate() {
                if b >> d & 1 == 1 {
                    out |= 1 << p;
                }
            }
            out
        };
        Self::new(perm, swapped ^ to.base().0)
    }
}

/// Applies `a` to a vertex; free-function form of [`CubeAutomorphism::apply_vertex`].
pub fn apply_automorphism(a: &CubeAutomorphism, v: CubeVertex) -> CubeVertex {
    a.apply_vertex(v)
}
