//! Regular subdivisions of point configurations.
//!
//! `subd_w(A)` is read off the lower faces of the lifted configuration
//! `(a_e, w_e)`: a cell is the set of labels on which some affine functional
//! `f` satisfies `f(a_e) + w_e = 0` while `f(a_e) + w_e >= 0` everywhere.
//! Cells are label sets, so coincident points are handled naturally.

mod geometry;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::config::PointConfiguration;
use crate::error::Result;
use crate::poly::WeightVector;

pub use geometry::Geometry;

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    geometry::combinations(n, k, &mut |s| out.push(s.to_vec()));
    out
}

/// Sorted nonempty set of label indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell(Vec<usize>);

impl Cell {
    pub fn new(mut members: Vec<usize>) -> Cell {
        members.sort_unstable();
        members.dedup();
        Cell(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn is_subset(&self, other: &Cell) -> bool {
        self.0.iter().all(|e| other.contains(*e))
    }

    pub fn intersection(&self, other: &Cell) -> Cell {
        Cell(self.0.iter().copied().filter(|e| other.contains(*e)).collect())
    }

    /// Membership mask over `n` labels.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &e in &self.0 {
            m[e] = true;
        }
        m
    }

    /// Labels of `n` not in the cell.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|e| !self.contains(*e)).collect()
    }

    pub fn labels<'a>(&self, labels: &'a [String]) -> Vec<&'a str> {
        self.0.iter().map(|&e| labels[e].as_str()).collect()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| (e + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Sorted list of maximal cells; determines the subdivision.
pub type Signature = Vec<Cell>;

/// A regular subdivision with its full face poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    n: usize,
    rank: usize,
    cells: Vec<Cell>,
    maximal: Vec<usize>,
    face_edges: Vec<(usize, usize)>,
    uncovered: BTreeMap<usize, Cell>,
}

impl Subdivision {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn maximal_indices(&self) -> &[usize] {
        &self.maximal
    }

    pub fn maximal_cells(&self) -> impl Iterator<Item = &Cell> {
        self.maximal.iter().map(move |&i| &self.cells[i])
    }

    pub fn is_maximal(&self, idx: usize) -> bool {
        self.maximal.binary_search(&idx).is_ok()
    }

    /// Pairs `(f, g)` of cell indices with `cells[f]` a facet of `cells[g]`.
    pub fn face_edges(&self) -> &[(usize, usize)] {
        &self.face_edges
    }

    /// Labels in no cell, with the minimal cell whose hull contains them.
    pub fn uncovered(&self) -> &BTreeMap<usize, Cell> {
        &self.uncovered
    }

    pub fn num_labels(&self) -> usize {
        self.n
    }

    pub fn signature(&self) -> Signature {
        self.maximal_cells().cloned().collect()
    }

    /// Single maximal cell containing every label.
    pub fn is_trivial(&self) -> bool {
        self.maximal.len() == 1 && self.cells[self.maximal[0]].len() == self.n
    }

    /// Every maximal cell is a simplex.
    pub fn is_triangulation(&self) -> bool {
        self.maximal_cells().all(|c| c.len() == self.rank)
    }

    pub fn index_of(&self, cell: &Cell) -> Option<usize> {
        self.cells.binary_search(cell).ok()
    }

    /// Cells of affine codimension one.
    pub fn ridges<'a>(&'a self, geom: &'a Geometry) -> impl Iterator<Item = &'a Cell> + 'a {
        self.cells
            .iter()
            .filter(move |c| self.rank >= 1 && geom.rank_of(c.members()) + 1 == self.rank)
    }
}

type FacetMap = HashMap<Cell, Vec<Cell>>;

/// All faces of the given cells, sorted, with their facet lists.
fn collect_faces(geom: &Geometry, maximal: &[Cell]) -> (Vec<Cell>, FacetMap) {
    let mut facets: HashMap<Cell, Vec<Cell>> = HashMap::new();
    let mut all: BTreeSet<Cell> = BTreeSet::new();
    let mut stack: Vec<Cell> = maximal.to_vec();
    while let Some(c) = stack.pop() {
        if !all.insert(c.clone()) {
            continue;
        }
        let fs = geom.facets(&c);
        for f in &fs {
            if !all.contains(f) {
                stack.push(f.clone());
            }
        }
        facets.insert(c, fs);
    }
    (all.into_iter().collect(), facets)
}

/// Builds the face poset of the subdivision with the given maximal cells.
pub fn subdivision_from_maximal(geom: &Geometry, maximal: Vec<Cell>) -> Subdivision {
    let n = geom.len();
    let (cells, facets) = collect_faces(geom, &maximal);
    let index = |c: &Cell| cells.binary_search(c).expect("collected cell");
    let mut max_idx: Vec<usize> = maximal.iter().map(index).collect();
    max_idx.sort_unstable();
    max_idx.dedup();
    let mut face_edges: Vec<(usize, usize)> = facets
        .iter()
        .flat_map(|(g, fs)| fs.iter().map(move |f| (index(f), index(g))))
        .collect();
    face_edges.sort_unstable();

    let covered: BTreeSet<usize> = maximal.iter().flat_map(|c| c.members().iter().copied()).collect();
    let mut uncovered = BTreeMap::new();
    for e in (0..n).filter(|e| !covered.contains(e)) {
        let mut containing: Vec<&Cell> = cells.iter().filter(|c| geom.hull_contains(c, e)).collect();
        containing.sort_by_key(|c| c.len());
        if let Some(min) = containing.first() {
            uncovered.insert(e, (*min).clone());
        }
    }
    Subdivision {
        n,
        rank: geom.rank(),
        cells,
        maximal: max_idx,
        face_edges,
        uncovered,
    }
}

/// `subd_w(A)`.
pub fn regular_subdivision(config: &PointConfiguration, w: &WeightVector) -> Result<Subdivision> {
    w.check_len(config.len())?;
    let geom = Geometry::new(config);
    Ok(regular_subdivision_with(&geom, w))
}

pub fn regular_subdivision_with(geom: &Geometry, w: &WeightVector) -> Subdivision {
    subdivision_from_maximal(geom, geom.maximal_cells(w))
}

/// All faces of the subconfiguration on `cell`, the cell itself included.
pub fn faces_of_cell(config: &PointConfiguration, cell: &Cell) -> Vec<Cell> {
    collect_faces(&Geometry::new(config), std::slice::from_ref(cell)).0
}

/// Every cell of `fine` lies in a cell of `coarse`.
pub fn refines(fine: &Subdivision, coarse: &Subdivision) -> bool {
    signature_refines(&fine.signature(), &coarse.signature())
}

pub fn signature_refines(fine: &[Cell], coarse: &[Cell]) -> bool {
    fine.iter().all(|c| coarse.iter().any(|d| c.is_subset(d)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConePosition {
    Interior,
    Boundary,
    Outside,
}

/// Position of `w` relative to the secondary cone of `t`.
pub fn in_secondary_cone(config: &PointConfiguration, t: &Subdivision, w: &WeightVector) -> Result<ConePosition> {
    let s = regular_subdivision(config, w)?;
    Ok(if s.signature() == t.signature() {
        ConePosition::Interior
    } else if refines(t, &s) {
        ConePosition::Boundary
    } else {
        ConePosition::Outside
    })
}

/// Maximal cells joined along shared interior codimension-one cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyGraph {
    pub nodes: Vec<Cell>,
    pub edges: Vec<(usize, usize, Cell)>,
}

impl AdjacencyGraph {
    pub fn degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|(a, b, _)| *a == node || *b == node).count()
    }

    /// A tree in which every edge touches one common center node.
    pub fn is_star(&self) -> bool {
        if self.nodes.len() <= 2 {
            return self.edges.len() + 1 == self.nodes.len();
        }
        self.edges.len() + 1 == self.nodes.len()
            && (0..self.nodes.len()).any(|c| self.degree(c) == self.edges.len())
    }

    pub fn center(&self) -> Option<usize> {
        (0..self.nodes.len()).max_by_key(|&c| self.degree(c))
    }
}

pub fn adjacency_graph_with(geom: &Geometry, t: &Subdivision) -> AdjacencyGraph {
    let nodes: Vec<Cell> = t.maximal_cells().cloned().collect();
    let mut edges = Vec::new();
    for ridge in t.ridges(geom) {
        if !geom.is_interior_ridge(ridge) {
            continue;
        }
        let owners: Vec<usize> = nodes
            .iter()
            .enumerate()
            .filter(|(_, m)| ridge.is_subset(m))
            .map(|(i, _)| i)
            .collect();
        debug_assert_eq!(owners.len(), 2, "interior ridge {ridge} lies in {} maximal cells", owners.len());
        if owners.len() == 2 {
            edges.push((owners[0], owners[1], ridge.clone()));
        }
    }
    AdjacencyGraph { nodes, edges }
}

pub fn adjacency_graph(config: &PointConfiguration, t: &Subdivision) -> AdjacencyGraph {
    adjacency_graph_with(&Geometry::new(config), t)
}

/// Maximal cells together with the interior codimension-one cells.
pub fn kappa_cells_with(geom: &Geometry, t: &Subdivision) -> Vec<Cell> {
    let g = adjacency_graph_with(geom, t);
    let mut out: Vec<Cell> = g.nodes;
    out.extend(g.edges.into_iter().map(|(_, _, c)| c));
    out.sort();
    out.dedup();
    out
}

pub fn kappa_cells(config: &PointConfiguration, t: &Subdivision) -> Vec<Cell> {
    kappa_cells_with(&Geometry::new(config), t)
}

#[cfg(test)]
mod tests;
