//! The layer-peeling filling algorithm.
//!
//! Layer `P_k` collects the boxes of the residual diagram whose up-left
//! neighbor is absent; each box of `P_k` receives `k` when the box directly
//! below it is outside `P_k` and the marked `k'` when it is inside. Peeling
//! repeats until the diagram is exhausted; the resulting filling is a GSYT
//! whose row word is amenable.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::shapes::{Cell, SkewShape};
use crate::tableaux::Tableau;
use crate::words::Letter;

/// One peeled layer: its index `k`, its cells, and its edge-connected
/// components (each a path, ordered by their smallest cell).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    k: u32,
    cells: Vec<Cell>,
    components: Vec<Vec<Cell>>,
}

impl Layer {
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Cells sorted by `(row, col)`.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn components(&self) -> &[Vec<Cell>] {
        &self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn unite(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[b] = a;
        }
    }
}

fn edge_components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let mut uf = UnionFind::new(cells.len());
    for (i, c) in cells.iter().enumerate() {
        for neighbor in [Some(c.right()), Some(c.down())].into_iter().flatten() {
            if let Ok(j) = cells.binary_search(&neighbor) {
                uf.unite(i, j);
            }
        }
    }
    let mut grouped: Vec<(usize, Vec<Cell>)> = Vec::new();
    for (i, &c) in cells.iter().enumerate() {
        let root = uf.find(i);
        match grouped.iter_mut().find(|(r, _)| *r == root) {
            Some((_, group)) => group.push(c),
            None => grouped.push((root, vec![c])),
        }
    }
    grouped.sort_by_key(|(_, g)| g[0]);
    grouped.into_iter().map(|(_, g)| g).collect()
}

/// Peels the diagram into layers `P_1, P_2, ...` until nothing remains.
pub fn compute_layers(shape: &SkewShape) -> Vec<Layer> {
    let mut residual: HashSet<Cell> = shape.cells().iter().copied().collect();
    let mut layers = Vec::new();
    let mut k = 1;
    while !residual.is_empty() {
        let mut cells: Vec<Cell> = residual
            .iter()
            .filter(|c| c.up_left().is_none_or(|ul| !residual.contains(&ul)))
            .copied()
            .collect();
        cells.sort();
        debug_assert!(!cells.is_empty());
        for c in &cells {
            residual.remove(c);
        }
        let components = edge_components(&cells);
        layers.push(Layer {
            k,
            cells,
            components,
        });
        k += 1;
    }
    layers
}

/// Fills each layer by the `k` / marked-`k` rule and assembles the tableau.
pub fn canonical_filling(shape: &SkewShape) -> Tableau {
    let layers = compute_layers(shape);
    let mut entries = Vec::with_capacity(shape.ncells());
    for layer in &layers {
        for &cell in layer.cells() {
            let below_in_layer = layer.cells.binary_search(&cell.down()).is_ok();
            let letter = if below_in_layer {
                Letter::marked(layer.k)
            } else {
                Letter::unmarked(layer.k)
            };
            entries.push((cell, letter));
        }
    }
    Tableau::new(shape.clone(), entries).expect("layers partition the shape")
}

/// True when some layer splits into two or more components.
pub fn layer_has_disconnection(shape: &SkewShape) -> bool {
    compute_layers(shape).iter().any(|l| !l.is_connected())
}

/// The first and last boxes of a layer path: the first has no path neighbor
/// above or to the right, the last none to the left or below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathEndpoints {
    pub first: Cell,
    pub last: Cell,
}

/// Locates the endpoints of a path component, rejecting cell sets that are
/// not paths directed from top-right to bottom-left.
pub fn path_endpoints(component: &[Cell]) -> Result<PathEndpoints> {
    if component.is_empty() {
        return Err(Error::NotAPath);
    }
    let mut cells = component.to_vec();
    cells.sort();
    cells.dedup();
    let contains = |cell: Cell| cells.binary_search(&cell).is_ok();

    // A path: connected, max degree two, and (beyond a singleton) exactly
    // two cells of degree one.
    if edge_components(&cells).len() != 1 {
        return Err(Error::NotAPath);
    }
    let degree = |c: &Cell| -> usize {
        [c.up(), c.left(), Some(c.right()), Some(c.down())]
            .into_iter()
            .flatten()
            .filter(|&n| contains(n))
            .count()
    };
    let degrees: Vec<usize> = cells.iter().map(degree).collect();
    if degrees.iter().any(|&d| d > 2) {
        return Err(Error::NotAPath);
    }
    if cells.len() > 1 && degrees.iter().filter(|&&d| d == 1).count() != 2 {
        return Err(Error::NotAPath);
    }

    let firsts: Vec<Cell> = cells
        .iter()
        .filter(|c| !c.up().is_some_and(contains) && !contains(c.right()))
        .copied()
        .collect();
    let lasts: Vec<Cell> = cells
        .iter()
        .filter(|c| !c.left().is_some_and(contains) && !contains(c.down()))
        .copied()
        .collect();
    match (&firsts[..], &lasts[..]) {
        (&[first], &[last]) => Ok(PathEndpoints { first, last }),
        _ => Err(Error::NotAPath),
    }
}
