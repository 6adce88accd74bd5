//! The four graph families and the vertex maps between them.
//!
//! * `cayley(n)`: the Cayley graph of `S_n` with the star transpositions
//!   `(1 2), …, (1 n)`; `g ~ t·g`.
//! * `partial(d, n)`: repetition-free `d`-tuples, adjacent when they differ
//!   in exactly one coordinate.
//! * `schreier(k, n)`: repetition-free `k`-tuples with the generators acting
//!   on values; a generator that fixes a tuple gives a loop.
//! * `k2(n)`: ordered pairs `(i, j)`, adjacent when they share the second
//!   coordinate or are transposes of each other.
//!
//! Adjacency is a dense symmetric `u8` matrix. Off the diagonal an entry is an
//! edge multiplicity; on the diagonal it is the loop count, each loop adding
//! one to the row sum.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    enumerate_tuples, factorial, falling_factorial, permutation_from_tuple, rank_tuple, DTuple,
    Permutation, StarTransposition,
};
use crate::error::{invalid, Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    Cayley,
    Partial,
    Schreier,
    K2,
}

/// Which graph, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum GraphKind {
    Cayley { n: usize },
    Partial { d: usize, n: usize },
    Schreier { k: usize, n: usize },
    K2 { n: usize },
}

impl GraphKind {
    pub fn family(&self) -> FamilyTag {
        match self {
            GraphKind::Cayley { .. } => FamilyTag::Cayley,
            GraphKind::Partial { .. } => FamilyTag::Partial,
            GraphKind::Schreier { .. } => FamilyTag::Schreier,
            GraphKind::K2 { .. } => FamilyTag::K2,
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            GraphKind::Cayley { n }
            | GraphKind::Partial { n, .. }
            | GraphKind::Schreier { n, .. }
            | GraphKind::K2 { n } => n,
        }
    }

    /// Length of the tuples labelling the vertices (`n` for permutations).
    fn tuple_len(&self) -> usize {
        match *self {
            GraphKind::Cayley { n } => n,
            GraphKind::Partial { d, .. } => d,
            GraphKind::Schreier { k, .. } => k,
            GraphKind::K2 { .. } => 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            GraphKind::Cayley { n } if n < 2 => invalid(format!("cayley graph needs n >= 2, got {n}")),
            GraphKind::Partial { d, n } if d < 1 || d > n => {
                invalid(format!("partial permutation graph needs 1 <= d <= n, got d={d}, n={n}"))
            }
            GraphKind::Schreier { k, n } if k < 1 || k + 1 > n => {
                invalid(format!("schreier graph needs 1 <= k <= n-1, got k={k}, n={n}"))
            }
            GraphKind::K2 { n } if n < 2 => invalid(format!("k2 graph needs n >= 2, got {n}")),
            _ => Ok(()),
        }
    }

    /// Exact vertex count, `None` if it does not fit in `u128`.
    pub fn vertex_count(&self) -> Option<u128> {
        falling_factorial(self.n(), self.tuple_len())
    }

    /// The common row sum every graph of this kind has.
    pub fn regular_degree(&self) -> usize {
        match *self {
            GraphKind::Cayley { n } | GraphKind::Schreier { n, .. } | GraphKind::K2 { n } => n - 1,
            GraphKind::Partial { d, n } => d * (n - d),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Cayley { n } => write!(f, "cayley(n={n})"),
            GraphKind::Partial { d, n } => write!(f, "partial(d={d},n={n})"),
            GraphKind::Schreier { k, n } => write!(f, "schreier(k={k},n={n})"),
            GraphKind::K2 { n } => write!(f, "k2(n={n})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexLabel {
    Permutation(Permutation),
    Tuple(DTuple),
}

impl VertexLabel {
    /// The label's value sequence: permutation images or tuple entries.
    pub fn values(&self) -> &[u32] {
        match self {
            VertexLabel::Permutation(p) => p.images(),
            VertexLabel::Tuple(t) => t.entries(),
        }
    }

    pub fn as_permutation(&self) -> Option<&Permutation> {
        match self {
            VertexLabel::Permutation(p) => Some(p),
            VertexLabel::Tuple(_) => None,
        }
    }

    pub fn as_tuple(&self) -> Option<&DTuple> {
        match self {
            VertexLabel::Tuple(t) => Some(t),
            VertexLabel::Permutation(_) => None,
        }
    }
}

/// Serialized as its value sequence.
impl Serialize for VertexLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.values().serialize(serializer)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Permutation(p) => p.fmt(f),
            VertexLabel::Tuple(t) => t.fmt(f),
        }
    }
}

/// Undirected multigraph with loops, stored densely.
#[derive(Debug, Clone)]
pub struct LoopyGraph {
    kind: GraphKind,
    labels: Vec<VertexLabel>,
    adjacency: Vec<u8>,
    neighbors: Vec<Vec<(usize, u8)>>,
}

impl LoopyGraph {
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn family(&self) -> FamilyTag {
        self.kind.family()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u8 {
        self.adjacency[u * self.vertex_count() + v]
    }

    pub fn loops(&self, v: usize) -> u8 {
        self.multiplicity(v, v)
    }

    /// Row `v` of the adjacency matrix.
    pub fn row(&self, v: usize) -> &[u8] {
        let n = self.vertex_count();
        &self.adjacency[v * n..(v + 1) * n]
    }

    /// Distinct off-diagonal neighbours of `v` with multiplicities, ascending.
    pub fn neighbors(&self, v: usize) -> &[(usize, u8)] {
        &self.neighbors[v]
    }

    /// Row sum, each loop counted once.
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|&m| m as usize).sum()
    }

    /// Number of non-loop edges, with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.neighbors
            .iter()
            .map(|nb| nb.iter().map(|&(_, m)| m as usize).sum::<usize>())
            .sum::<usize>()
            / 2
    }

    pub fn loop_count(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.loops(v) as usize).sum()
    }

    pub fn has_loops(&self) -> bool {
        (0..self.vertex_count()).any(|v| self.loops(v) > 0)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|u| (u + 1..n).all(|v| self.multiplicity(u, v) == self.multiplicity(v, u)))
    }

    /// Common row sum, if every row has the same one.
    pub fn regularity(&self) -> Option<usize> {
        let d0 = self.degree(0);
        (1..self.vertex_count()).all(|v| self.degree(v) == d0).then_some(d0)
    }

    pub fn max_edge_multiplicity(&self) -> u8 {
        self.neighbors
            .iter()
            .flat_map(|nb| nb.iter().map(|&(_, m)| m))
            .max()
            .unwrap_or(0)
    }

    /// Vertex index of a label, by rank.
    pub fn index_of(&self, values: &[u32]) -> Result<usize> {
        if values.len() != self.kind.tuple_len() {
            return Err(Error::DimensionMismatch {
                expected: self.kind.tuple_len(),
                found: values.len(),
            });
        }
        let t = DTuple::new(values.to_vec(), self.kind.n())?;
        Ok(rank_tuple(&t).0)
    }

    /// Every entry of the adjacency matrix as `i64`, row-major.
    pub fn dense_i64(&self) -> Vec<i64> {
        self.adjacency.iter().map(|&m| m as i64).collect()
    }

    fn from_adjacency(kind: GraphKind, labels: Vec<VertexLabel>, adjacency: Vec<u8>) -> Result<Self> {
        let n = labels.len();
        let neighbors = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| v != u && adjacency[u * n + v] > 0)
                    .map(|v| (v, adjacency[u * n + v]))
                    .collect()
            })
            .collect();
        let g = LoopyGraph {
            kind,
            labels,
            adjacency,
            neighbors,
        };
        debug_assert!(g.is_symmetric(), "{kind} built asymmetric");
        Ok(g)
    }
}

/// Build any of the four families, refusing anything larger than
/// `limits.max_graph_vertices`.
pub fn build(kind: GraphKind, limits: &Limits) -> Result<LoopyGraph> {
    kind.validate()?;
    let required = kind.vertex_count().unwrap_or(u128::MAX);
    Limits::check(limits.max_graph_vertices, required, kind.to_string())?;
    let n = kind.n();
    let tuples = enumerate_tuples(kind.tuple_len(), n)?;
    let size = tuples.len();
    let mut adjacency = vec![0u8; size * size];
    let mut bump = |u: usize, v: usize| -> Result<()> {
        let slot = &mut adjacency[u * size + v];
        *slot = slot.checked_add(1).ok_or(Error::Overflow("edge multiplicity"))?;
        Ok(())
    };

    match kind {
        GraphKind::Cayley { .. } | GraphKind::Schreier { .. } => {
            // t·g permutes values, on permutation images and on tuples alike
            for (u, x) in tuples.iter().enumerate() {
                for t in StarTransposition::all(n) {
                    let y = x.apply_transposition(t)?;
                    bump(u, rank_tuple(&y).0)?;
                }
            }
        }
        GraphKind::Partial { .. } => {
            for (u, x) in tuples.iter().enumerate() {
                let entries = x.entries();
                for pos in 0..entries.len() {
                    for value in 1..=n as u32 {
                        if x.contains(value) {
                            continue;
                        }
                        let mut changed = entries.to_vec();
                        changed[pos] = value;
                        bump(u, rank_tuple(&DTuple::new(changed, n)?).0)?;
                    }
                }
            }
        }
        GraphKind::K2 { .. } => {
            for (u, x) in tuples.iter().enumerate() {
                let (i, j) = (x.entries()[0], x.entries()[1]);
                for l in (1..=n as u32).filter(|&l| l != i && l != j) {
                    bump(u, rank_tuple(&DTuple::new(vec![l, j], n)?).0)?;
                }
                bump(u, rank_tuple(&DTuple::new(vec![j, i], n)?).0)?;
            }
        }
    }

    let labels = match kind {
        GraphKind::Cayley { .. } => tuples
            .into_iter()
            .map(|t| Permutation::new(t.entries().to_vec()).map(VertexLabel::Permutation))
            .collect::<Result<Vec<_>>>()?,
        _ => tuples.into_iter().map(VertexLabel::Tuple).collect(),
    };
    let g = LoopyGraph::from_adjacency(kind, labels, adjacency)?;
    for u in 0..g.vertex_count() {
        if let Some(&(v, m)) = g.neighbors(u).iter().find(|&&(_, m)| m > 1) {
            return Err(Error::UnexpectedMultiEdge {
                graph: kind.to_string(),
                u,
                v,
                multiplicity: m,
            });
        }
    }
    Ok(g)
}

pub fn build_cayley_star(n: usize) -> Result<LoopyGraph> {
    build(GraphKind::Cayley { n }, &Limits::default())
}

pub fn build_partial_permutation(d: usize, n: usize) -> Result<LoopyGraph> {
    build(GraphKind::Partial { d, n }, &Limits::default())
}

pub fn build_schreier(k: usize, n: usize) -> Result<LoopyGraph> {
    build(GraphKind::Schreier { k, n }, &Limits::default())
}

pub fn build_k2(n: usize) -> Result<LoopyGraph> {
    build(GraphKind::K2 { n }, &Limits::default())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    Isomorphism,
    CosetProjection,
    CoveringProjection,
}

/// A total map between vertex sets, by vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap {
    pub kind: MapKind,
    pub domain: GraphKind,
    pub codomain: GraphKind,
    pub domain_size: usize,
    pub codomain_size: usize,
    pub assignment: Vec<usize>,
}

impl VertexMap {
    pub fn new(
        kind: MapKind,
        domain: GraphKind,
        codomain: GraphKind,
        codomain_size: usize,
        assignment: Vec<usize>,
    ) -> Result<Self> {
        let map = VertexMap {
            kind,
            domain,
            codomain,
            domain_size: assignment.len(),
            codomain_size,
            assignment,
        };
        map.validate()?;
        Ok(map)
    }

    /// Totality and range; bijectivity for isomorphisms.
    pub fn validate(&self) -> Result<()> {
        if self.assignment.len() != self.domain_size {
            return Err(Error::DimensionMismatch {
                expected: self.domain_size,
                found: self.assignment.len(),
            });
        }
        if let Some(&bad) = self.assignment.iter().find(|&&v| v >= self.codomain_size) {
            return invalid(format!("assignment target {bad} outside codomain of size {}", self.codomain_size));
        }
        if self.kind == MapKind::Isomorphism && !self.is_bijective() {
            return invalid("isomorphism assignment is not a bijection");
        }
        Ok(())
    }

    pub fn apply(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// Number of preimages of each codomain vertex.
    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.codomain_size];
        for &v in &self.assignment {
            sizes[v] += 1;
        }
        sizes
    }

    /// The common fiber size, if all fibers agree.
    pub fn uniform_fiber_size(&self) -> Option<usize> {
        let sizes = self.fiber_sizes();
        let first = *sizes.first()?;
        sizes.iter().all(|&s| s == first).then_some(first)
    }

    pub fn is_bijective(&self) -> bool {
        self.domain_size == self.codomain_size && self.fiber_sizes().iter().all(|&s| s == 1)
    }
}

/// `φ(a_1, …, a_{n-1}) = π_(a_0, a_1, …, a_{n-1})`, `a_0` the missing value:
/// `partial(n-1, n) → cayley(n)`.
pub fn iso_partial_to_cayley(n: usize) -> Result<VertexMap> {
    let domain = GraphKind::Partial { d: n.saturating_sub(1), n };
    let codomain = GraphKind::Cayley { n };
    codomain.validate()?;
    let tuples = enumerate_tuples(n - 1, n)?;
    let assignment = tuples
        .iter()
        .map(|a| {
            let missing = (1..=n as u32).find(|v| !a.contains(*v)).expect("one value missing");
            let mut c = Vec::with_capacity(n);
            c.push(missing);
            c.extend_from_slice(a.entries());
            let pi = permutation_from_tuple(&c)?;
            Ok(rank_tuple(&DTuple::new(pi.images().to_vec(), n)?).0)
        })
        .collect::<Result<Vec<_>>>()?;
    let size = assignment.len();
    VertexMap::new(MapKind::Isomorphism, domain, codomain, size, assignment)
}

/// `π ↦ (π(n), π(n-1), …, π(n-k+1))`: `cayley(n) → schreier(k, n)`.
pub fn schreier_projection(k: usize, n: usize) -> Result<VertexMap> {
    let codomain = GraphKind::Schreier { k, n };
    codomain.validate()?;
    let perms = enumerate_tuples(n, n)?;
    let assignment = perms
        .iter()
        .map(|p| {
            let images = p.entries();
            let tail: Vec<u32> = (0..k).map(|j| images[n - 1 - j]).collect();
            Ok(rank_tuple(&DTuple::new(tail, n)?).0)
        })
        .collect::<Result<Vec<_>>>()?;
    let size = enumerate_size(codomain)?;
    VertexMap::new(MapKind::CosetProjection, GraphKind::Cayley { n }, codomain, size, assignment)
}

/// `π ↦ (π⁻¹(1), π⁻¹(n))`: `cayley(n) → k2(n)`.
pub fn covering_projection(n: usize) -> Result<VertexMap> {
    let codomain = GraphKind::K2 { n };
    codomain.validate()?;
    let perms = enumerate_tuples(n, n)?;
    let assignment = perms
        .iter()
        .map(|p| {
            let pi = Permutation::new(p.entries().to_vec())?;
            let pair = vec![pi.preimage(1), pi.preimage(n as u32)];
            Ok(rank_tuple(&DTuple::new(pair, n)?).0)
        })
        .collect::<Result<Vec<_>>>()?;
    let size = enumerate_size(codomain)?;
    VertexMap::new(MapKind::CoveringProjection, GraphKind::Cayley { n }, codomain, size, assignment)
}

fn enumerate_size(kind: GraphKind) -> Result<usize> {
    kind.vertex_count()
        .and_then(|c| usize::try_from(c).ok())
        .ok_or(Error::Overflow("vertex count"))
}

/// Outcome of a structural check on a vertex map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapCheck {
    pub holds: bool,
    /// First violation found, in vertex-index terms.
    pub failure: Option<String>,
}

impl MapCheck {
    fn pass() -> Self {
        MapCheck {
            holds: true,
            failure: None,
        }
    }

    fn fail(msg: String) -> Self {
        MapCheck {
            holds: false,
            failure: Some(msg),
        }
    }
}

fn check_map_dims(map: &VertexMap, top: &LoopyGraph, base: &LoopyGraph) -> Result<()> {
    map.validate()?;
    if map.domain_size != top.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: top.vertex_count(),
            found: map.domain_size,
        });
    }
    if map.codomain_size != base.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: base.vertex_count(),
            found: map.codomain_size,
        });
    }
    Ok(())
}

/// Local-isomorphism check: at every top vertex `v`, the edges at `v`
/// (loops included, with multiplicity) map bijectively onto the edges at
/// `map(v)`.
pub fn verify_cover(map: &VertexMap, top: &LoopyGraph, base: &LoopyGraph) -> Result<MapCheck> {
    check_map_dims(map, top, base)?;
    let mut image_row = vec![0usize; base.vertex_count()];
    for v in 0..top.vertex_count() {
        image_row.iter_mut().for_each(|c| *c = 0);
        let mv = map.apply(v);
        image_row[mv] += top.loops(v) as usize;
        for &(u, m) in top.neighbors(v) {
            image_row[map.apply(u)] += m as usize;
        }
        let base_row = base.row(mv);
        if let Some(w) = (0..base.vertex_count()).find(|&w| image_row[w] != base_row[w] as usize) {
            return Ok(MapCheck::fail(format!(
                "at top vertex {v} (image {mv}): {} edges land on base vertex {w}, base has {}",
                image_row[w], base_row[w]
            )));
        }
    }
    Ok(MapCheck::pass())
}

/// Bijectivity plus `A[u][v] = B[map(u)][map(v)]` for every pair.
pub fn verify_isomorphism(map: &VertexMap, from: &LoopyGraph, to: &LoopyGraph) -> Result<MapCheck> {
    check_map_dims(map, from, to)?;
    if !map.is_bijective() {
        return Ok(MapCheck::fail("map is not a bijection".into()));
    }
    let n = from.vertex_count();
    for u in 0..n {
        for v in u..n {
            let a = from.multiplicity(u, v);
            let b = to.multiplicity(map.apply(u), map.apply(v));
            if a != b {
                return Ok(MapCheck::fail(format!(
                    "pair ({u},{v}) has multiplicity {a}, image pair ({},{}) has {b}",
                    map.apply(u),
                    map.apply(v)
                )));
            }
        }
    }
    Ok(MapCheck::pass())
}

/// `map(t·g) = t·map(g)` for every Cayley vertex `g` and star transposition `t`.
pub fn verify_equivariance(map: &VertexMap, top: &LoopyGraph, base: &LoopyGraph) -> Result<MapCheck> {
    check_map_dims(map, top, base)?;
    if top.family() != FamilyTag::Cayley {
        return invalid("equivariance is checked from a cayley graph");
    }
    let n = top.kind().n();
    if base.kind().n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: base.kind().n(),
        });
    }
    for g in 0..top.vertex_count() {
        let g_label = DTuple::new(top.label(g).values().to_vec(), n)?;
        let image = DTuple::new(base.label(map.apply(g)).values().to_vec(), n)?;
        for t in StarTransposition::all(n) {
            let tg = rank_tuple(&g_label.apply_transposition(t)?).0;
            let t_image = base.index_of(image.apply_transposition(t)?.entries())?;
            if map.apply(tg) != t_image {
                return Ok(MapCheck::fail(format!(
                    "generator (1 {}) at vertex {g}: map(t·g) = {}, t·map(g) = {t_image}",
                    t.moved(),
                    map.apply(tg)
                )));
            }
        }
    }
    Ok(MapCheck::pass())
}

/// A proper 2-colouring with colours `+1` / `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColoring {
    pub colors: Vec<i8>,
}

impl TwoColoring {
    pub fn color(&self, v: usize) -> i8 {
        self.colors[v]
    }

    /// Sizes of the `+1` and `-1` classes.
    pub fn class_sizes(&self) -> (usize, usize) {
        let plus = self.colors.iter().filter(|&&c| c > 0).count();
        (plus, self.colors.len() - plus)
    }
}

/// Breadth-first 2-colouring; the lowest-index vertex of each component gets `+1`.
pub fn bipartition(g: &LoopyGraph) -> Result<TwoColoring> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.loops(v) > 0) {
        return Err(Error::NotBipartite {
            graph: g.kind().to_string(),
            reason: format!("vertex {v} carries a loop"),
        });
    }
    let mut colors = vec![0i8; g.vertex_count()];
    let mut queue = VecDeque::new();
    for root in 0..g.vertex_count() {
        if colors[root] != 0 {
            continue;
        }
        colors[root] = 1;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in g.neighbors(u) {
                if colors[v] == 0 {
                    colors[v] = -colors[u];
                    queue.push_back(v);
                } else if colors[v] == colors[u] {
                    return Err(Error::NotBipartite {
                        graph: g.kind().to_string(),
                        reason: format!("odd closed walk through edge ({u},{v})"),
                    });
                }
            }
        }
    }
    Ok(TwoColoring { colors })
}

/// Every maximal clique of `partial(d, n)`: fix `d - 1` positions to
/// distinct values and let the remaining position range over the values
/// left over. Each clique is a sorted list of vertex indices.
pub fn maximal_cliques_partial(d: usize, n: usize) -> Result<Vec<Vec<usize>>> {
    if d == n {
        return invalid(format!("partial({d},{n}) has no edges, hence no cliques of size >= 2"));
    }
    GraphKind::Partial { d, n }.validate()?;
    let mut cliques = Vec::new();
    for free_pos in 0..d {
        let frames: Vec<Vec<u32>> = if d == 1 {
            vec![Vec::new()]
        } else {
            enumerate_tuples(d - 1, n)?
                .into_iter()
                .map(|t| t.entries().to_vec())
                .collect()
        };
        for frame in frames {
            let mut clique: Vec<usize> = (1..=n as u32)
                .filter(|v| !frame.contains(v))
                .map(|v| {
                    let mut entries = frame.clone();
                    entries.insert(free_pos, v);
                    DTuple::new(entries, n).map(|t| rank_tuple(&t).0)
                })
                .collect::<Result<_>>()?;
            clique.sort_unstable();
            cliques.push(clique);
        }
    }
    Ok(cliques)
}

/// `d · n! / (n-d+1)!`, the number of maximal cliques of `partial(d, n)`.
pub fn partial_clique_count(d: usize, n: usize) -> u128 {
    d as u128 * factorial(n).unwrap_or(0) / factorial(n - d + 1).unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::parity;

    #[test]
    fn cayley_small_cases() {
        let g2 = build_cayley_star(2).unwrap();
        assert_eq!((g2.vertex_count(), g2.edge_count()), (2, 1));

        let g3 = build_cayley_star(3).unwrap();
        assert_eq!(g3.vertex_count(), 6);
        assert_eq!(g3.regularity(), Some(2));
        // walk the cycle: a connected 2-regular graph on 6 vertices
        let mut prev = usize::MAX;
        let mut cur = 0;
        let mut visited = [false; 6];
        for _ in 0..6 {
            visited[cur] = true;
            let next = g3.neighbors(cur).iter().map(|&(v, _)| v).find(|&v| v != prev).unwrap();
            prev = cur;
            cur = next;
        }
        assert_eq!(cur, 0);
        assert!(visited.iter().all(|&b| b));

        let g4 = build_cayley_star(4).unwrap();
        assert_eq!((g4.vertex_count(), g4.regularity()), (24, Some(3)));
        let coloring = bipartition(&g4).unwrap();
        for v in 0..24 {
            let sign = parity(g4.label(v).as_permutation().unwrap()).value() as i8;
            assert_eq!(coloring.color(v), sign);
        }
    }

    #[test]
    fn cayley_capacity() {
        assert!(matches!(
            build(GraphKind::Cayley { n: 99 }, &Limits::default()),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(build_cayley_star(1), Err(Error::InvalidArgument(_))));
        assert!(matches!(
            build(GraphKind::Cayley { n: 5 }, &Limits::uniform(100)),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn partial_examples() {
        let g = build_partial_permutation(2, 4).unwrap();
        assert_eq!((g.vertex_count(), g.regularity()), (12, Some(4)));
        let k = build_partial_permutation(1, 5).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(k.multiplicity(u, v), u8::from(u != v));
            }
        }
        let e = build_partial_permutation(4, 4).unwrap();
        assert_eq!((e.vertex_count(), e.edge_count()), (24, 0));
        assert!(build_partial_permutation(5, 4).is_err());
        assert!(build_partial_permutation(0, 4).is_err());
    }

    #[test]
    fn schreier_examples() {
        let g = build_schreier(1, 4).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.neighbors(0), &[(1, 1), (2, 1), (3, 1)]);
        for v in 1..4 {
            assert_eq!(g.loops(v), 2);
            assert_eq!(g.neighbors(v), &[(0, 1)]);
        }
        let g = build_schreier(2, 4).unwrap();
        assert_eq!((g.vertex_count(), g.regularity()), (12, Some(3)));
        assert!(build_schreier(4, 4).is_err());
        assert!(build_schreier(0, 4).is_err());
    }

    #[test]
    fn k2_examples() {
        let g = build_k2(2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.regularity()), (2, 1, Some(1)));
        let g = build_k2(4).unwrap();
        assert_eq!((g.vertex_count(), g.regularity(), g.has_loops()), (12, Some(3), false));
        let g = build_k2(5).unwrap();
        assert_eq!((g.vertex_count(), g.regularity()), (20, Some(4)));
        assert!(build_k2(1).is_err());
    }

    #[test]
    fn iso_examples() {
        let m = iso_partial_to_cayley(2).unwrap();
        let cayley = build_cayley_star(2).unwrap();
        // (1) -> (1 2), (2) -> identity
        assert_eq!(cayley.label(m.apply(0)).values(), &[2, 1]);
        assert_eq!(cayley.label(m.apply(1)).values(), &[1, 2]);

        let m = iso_partial_to_cayley(3).unwrap();
        let p = build_partial_permutation(2, 3).unwrap();
        let c = build_cayley_star(3).unwrap();
        let v = p.index_of(&[2, 3]).unwrap();
        assert!(c.label(m.apply(v)).as_permutation().unwrap().is_identity());
    }

    #[test]
    fn projection_examples() {
        let m = schreier_projection(3, 4).unwrap();
        assert!(m.is_bijective());
        let m = schreier_projection(1, 4).unwrap();
        let s = build_schreier(1, 4).unwrap();
        let four = s.index_of(&[4]).unwrap();
        assert_eq!(m.apply(0), four);
        assert_eq!(m.fiber_sizes()[four], 6);
        assert_eq!(schreier_projection(2, 4).unwrap().uniform_fiber_size(), Some(2));

        let c = covering_projection(4).unwrap();
        let k2 = build_k2(4).unwrap();
        let cay = build_cayley_star(4).unwrap();
        assert_eq!(k2.label(c.apply(0)).values(), &[1, 4]);
        let t14 = cay.index_of(&[4, 2, 3, 1]).unwrap();
        assert_eq!(k2.label(c.apply(t14)).values(), &[4, 1]);
        assert_eq!(covering_projection(5).unwrap().uniform_fiber_size(), Some(6));
    }

    #[test]
    fn cover_checks() {
        let top = build_cayley_star(4).unwrap();
        let base = build_k2(4).unwrap();
        let map = covering_projection(4).unwrap();
        assert!(verify_cover(&map, &top, &base).unwrap().holds);

        let p = build_partial_permutation(3, 4).unwrap();
        let iso = iso_partial_to_cayley(4).unwrap();
        assert!(verify_cover(&iso, &p, &top).unwrap().holds);
        assert!(verify_isomorphism(&iso, &p, &top).unwrap().holds);

        let mut corrupt = map.clone();
        let other = (1..24).find(|&v| corrupt.assignment[v] != corrupt.assignment[0]).unwrap();
        corrupt.assignment.swap(0, other);
        let check = verify_cover(&corrupt, &top, &base).unwrap();
        assert!(!check.holds);
        assert!(check.failure.is_some());

        assert!(matches!(verify_cover(&map, &base, &top), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn bipartition_examples() {
        let c = bipartition(&build_cayley_star(3).unwrap()).unwrap();
        assert_eq!(c.class_sizes(), (3, 3));
        assert_eq!(c.color(0), 1);
        assert!(matches!(
            bipartition(&build_partial_permutation(1, 3).unwrap()),
            Err(Error::NotBipartite { .. })
        ));
        assert!(matches!(
            bipartition(&build_schreier(1, 4).unwrap()),
            Err(Error::NotBipartite { .. })
        ));
    }

    #[test]
    fn clique_examples() {
        let cl = maximal_cliques_partial(2, 4).unwrap();
        assert_eq!(cl.len(), 8);
        assert!(cl.iter().all(|c| c.len() == 3));
        assert_eq!(maximal_cliques_partial(1, 5).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
        let g = build_partial_permutation(3, 4).unwrap();
        let cl = maximal_cliques_partial(3, 4).unwrap();
        assert_eq!(cl.len(), g.edge_count());
        for c in &cl {
            assert_eq!(c.len(), 2);
            assert_eq!(g.multiplicity(c[0], c[1]), 1);
        }
        assert!(maximal_cliques_partial(4, 4).is_err());
        assert_eq!(partial_clique_count(2, 4), 8);
    }
}
