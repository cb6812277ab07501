//! Exhaustive enumeration of the triangulations carried by a labeled graph.
//!
//! The search walks the graph's edges in lexicographic order and, at each
//! edge, decides every still-undecided face through it at once (a face is
//! decided at its smallest edge). Each face set is therefore produced at most
//! once. Branches die as soon as an edge would exceed two faces or a vertex
//! link closes into a cycle that misses some neighbour.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::complex::{
    classify_surface, enumerate_cliques3, Edge, LabeledGraph, SurfaceClass, SurfaceName, Triangle, Triangulation,
};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("closed triangulations need 3 | 2E, but the graph has {0} edges")]
    FaceCountNotIntegral(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnumerationMode {
    /// Every edge in exactly two faces.
    Closed,
    /// Every edge in one or two faces.
    WithBoundary,
}

#[derive(Clone, Debug)]
pub struct EnumerationTask {
    graph: LabeledGraph,
    mode: EnumerationMode,
    target: Option<SurfaceName>,
}

impl EnumerationTask {
    pub fn new(
        graph: LabeledGraph,
        mode: EnumerationMode,
        target: Option<SurfaceName>,
    ) -> Result<EnumerationTask, EnumerationError> {
        if mode == EnumerationMode::Closed && !(2 * graph.edge_count()).is_multiple_of(3) {
            return Err(EnumerationError::FaceCountNotIntegral(graph.edge_count()));
        }
        Ok(EnumerationTask { graph, mode, target })
    }

    /// Mode implied by the surface: bounded surfaces need `WithBoundary`.
    pub fn for_surface(graph: LabeledGraph, target: SurfaceName) -> Result<EnumerationTask, EnumerationError> {
        let mode = if target.has_boundary() {
            EnumerationMode::WithBoundary
        } else {
            EnumerationMode::Closed
        };
        EnumerationTask::new(graph, mode, Some(target))
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn mode(&self) -> EnumerationMode {
        self.mode
    }

    pub fn target(&self) -> Option<SurfaceName> {
        self.target
    }
}

/// Every triangulation found for a task, in canonical order; the index is
/// the triangulation's ID.
#[derive(Clone, Debug)]
pub struct Catalog {
    task: EnumerationTask,
    triangulations: Vec<Triangulation>,
    /// Valid complexes that the surface filter turned away.
    filtered_out: Vec<(Triangulation, SurfaceClass)>,
}

impl Catalog {
    pub fn task(&self) -> &EnumerationTask {
        &self.task
    }

    pub fn triangulations(&self) -> &[Triangulation] {
        &self.triangulations
    }

    pub fn get(&self, id: usize) -> Option<&Triangulation> {
        self.triangulations.get(id)
    }

    pub fn len(&self) -> usize {
        self.triangulations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangulations.is_empty()
    }

    pub fn filtered_out(&self) -> &[(Triangulation, SurfaceClass)] {
        &self.filtered_out
    }

    pub fn id_of(&self, t: &Triangulation) -> Option<usize> {
        self.triangulations.binary_search(t).ok()
    }

    /// Builds a catalog from already known triangulations (e.g. read back
    /// from disk), re-sorted into canonical order.
    pub fn from_parts(task: EnumerationTask, mut triangulations: Vec<Triangulation>) -> Catalog {
        triangulations.sort();
        triangulations.dedup();
        Catalog {
            task,
            triangulations,
            filtered_out: Vec::new(),
        }
    }
}

struct Search {
    mode: EnumerationMode,
    n_vertices: usize,
    /// neighbours per vertex in the graph
    degree: Vec<usize>,
    tris: Vec<[usize; 3]>,
    tri_edges: Vec<[usize; 3]>,
    /// triangles whose smallest edge is this one
    owned: Vec<Vec<usize>>,
    /// vertices whose incident edges all have index ≤ this one
    closes: Vec<Vec<usize>>,
    edge_mult: Vec<u8>,
    chosen: Vec<bool>,
    found: Vec<Vec<usize>>,
}

#[derive(PartialEq, Eq)]
enum LinkState {
    Ok,
    Dead,
}

impl Search {
    fn allowed(&self, m: u8) -> bool {
        match self.mode {
            EnumerationMode::Closed => m == 2,
            EnumerationMode::WithBoundary => m == 1 || m == 2,
        }
    }

    /// Checks the partial link of `v`. A finished vertex must have a single
    /// cycle (closed) or a single cycle or path (with boundary) through all
    /// of its neighbours.
    fn link_state(&self, v: usize, finished: bool) -> LinkState {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n_vertices];
        let mut touched = Vec::new();
        for (t, corners) in self.tris.iter().enumerate() {
            if !self.chosen[t] || !corners.contains(&v) {
                continue;
            }
            let mut others = corners.iter().copied().filter(|&c| c != v);
            let (a, b) = (others.next().unwrap(), others.next().unwrap());
            adj[a].push(b);
            adj[b].push(a);
            touched.push(a);
            touched.push(b);
        }
        touched.sort_unstable();
        touched.dedup();
        if touched.iter().any(|&u| adj[u].len() > 2) {
            return LinkState::Dead;
        }
        let mut seen = vec![false; self.n_vertices];
        let mut components = 0;
        let mut has_cycle = false;
        let mut cycle_len = 0;
        for &s in &touched {
            if seen[s] {
                continue;
            }
            components += 1;
            let mut stack = vec![s];
            seen[s] = true;
            let mut size = 0;
            let mut deg_sum = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                deg_sum += adj[x].len();
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            if deg_sum / 2 == size {
                has_cycle = true;
                cycle_len = size;
            }
        }
        if has_cycle && (components > 1 || cycle_len < self.degree[v]) {
            return LinkState::Dead;
        }
        if finished {
            let covers = touched.len() == self.degree[v] && components == 1;
            let shape_ok = match self.mode {
                EnumerationMode::Closed => has_cycle,
                EnumerationMode::WithBoundary => true,
            };
            if !covers || !shape_ok {
                return LinkState::Dead;
            }
        }
        LinkState::Ok
    }

    fn run(&mut self, edge: usize) {
        if edge == self.edge_mult.len() {
            let faces: Vec<usize> = (0..self.tris.len()).filter(|&t| self.chosen[t]).collect();
            self.found.push(faces);
            return;
        }
        let owned = self.owned[edge].clone();
        let base = self.edge_mult[edge];
        for mask in 0u32..(1 << owned.len()) {
            let picked: Vec<usize> = owned
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &t)| t)
                .collect();
            if !self.allowed(base + picked.len() as u8) {
                continue;
            }
            let mut ok = true;
            for &t in &picked {
                self.chosen[t] = true;
                for &e in &self.tri_edges[t] {
                    self.edge_mult[e] += 1;
                    if self.edge_mult[e] > 2 {
                        ok = false;
                    }
                }
            }
            if ok {
                let mut check: Vec<(usize, bool)> = picked
                    .iter()
                    .flat_map(|&t| self.tris[t])
                    .map(|v| (v, false))
                    .collect();
                check.extend(self.closes[edge].iter().map(|&v| (v, true)));
                ok = check.iter().all(|&(v, fin)| {
                    let fin = fin || self.closes[edge].contains(&v);
                    self.link_state(v, fin) == LinkState::Ok
                });
            }
            if ok {
                self.run(edge + 1);
            }
            for &t in &picked {
                self.chosen[t] = false;
                for &e in &self.tri_edges[t] {
                    self.edge_mult[e] -= 1;
                }
            }
        }
    }
}

/// Raw search: all face sets meeting the edge-multiplicity and link rules,
/// before any surface classification.
fn search_face_sets(graph: &LabeledGraph, mode: EnumerationMode) -> Vec<Vec<Triangle>> {
    let vertices = graph.vertices();
    let vidx = |v| vertices.binary_search(&v).unwrap();
    let edges: Vec<Edge> = graph.edges().collect();
    let eidx: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let cliques = enumerate_cliques3(graph);
    let tris: Vec<[usize; 3]> = cliques.iter().map(|t| t.vertices().map(vidx)).collect();
    let tri_edges: Vec<[usize; 3]> = cliques.iter().map(|t| t.edges().map(|e| eidx[&e])).collect();
    let mut owned = vec![Vec::new(); edges.len()];
    for (t, es) in tri_edges.iter().enumerate() {
        owned[*es.iter().min().unwrap()].push(t);
    }
    let mut last_edge = vec![0usize; vertices.len()];
    for (i, e) in edges.iter().enumerate() {
        for v in e.vertices() {
            last_edge[vidx(v)] = last_edge[vidx(v)].max(i);
        }
    }
    let mut closes = vec![Vec::new(); edges.len()];
    for (v, &e) in last_edge.iter().enumerate() {
        closes[e].push(v);
    }
    let degree = vertices.iter().map(|&v| graph.neighbors(v).len()).collect();
    let mut search = Search {
        mode,
        n_vertices: vertices.len(),
        degree,
        tris,
        tri_edges,
        owned,
        closes,
        edge_mult: vec![0; edges.len()],
        chosen: vec![false; cliques.len()],
        found: Vec::new(),
    };
    search.run(0);
    search
        .found
        .into_iter()
        .map(|set| set.into_iter().map(|t| cliques[t]).collect())
        .collect()
}

/// Complete, duplicate-free catalog of triangulations for `task`.
pub fn enumerate_triangulations(task: &EnumerationTask) -> Catalog {
    let mut kept = BTreeSet::new();
    let mut filtered = BTreeMap::new();
    for faces in search_face_sets(&task.graph, task.mode) {
        let t = Triangulation::new(task.graph.clone(), faces).expect("search respects edge multiplicities");
        let class = classify_surface(&t);
        let wanted = class.is_manifold && task.target.is_none_or(|s| s == class.name);
        if wanted {
            kept.insert(t);
        } else {
            filtered.insert(t, class);
        }
    }
    Catalog {
        task: task.clone(),
        triangulations: kept.into_iter().collect(),
        filtered_out: filtered.into_iter().collect(),
    }
}

/// Face set `Δ(G) \ F(t)` over all 3-cliques of `t`'s graph.
pub fn complement_faces(t: &Triangulation) -> Vec<Triangle> {
    enumerate_cliques3(t.graph())
        .into_iter()
        .filter(|f| !t.contains_face(*f))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    /// `(i, j)` with `i < j`, sorted.
    pub pairs: Vec<(usize, usize)>,
    /// IDs whose complement is not in the catalog.
    pub leftovers: Vec<usize>,
}

pub fn complement_pairing(catalog: &Catalog) -> Pairing {
    let index: BTreeMap<Vec<Triangle>, usize> = catalog
        .triangulations()
        .iter()
        .enumerate()
        .map(|(i, t)| (t.face_list(), i))
        .collect();
    let mut pairs = Vec::new();
    let mut leftovers = Vec::new();
    for (i, t) in catalog.triangulations().iter().enumerate() {
        match index.get(&complement_faces(t)) {
            Some(&j) if j > i => pairs.push((i, j)),
            Some(&j) if j < i => {}
            _ => leftovers.push(i),
        }
    }
    Pairing { pairs, leftovers }
}
