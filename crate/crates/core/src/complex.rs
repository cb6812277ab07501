//! Vertex-labeled graphs and abstract simplicial 2-complexes.
//!
//! A [`Triangulation`] is a face set over a fixed [`LabeledGraph`]; two
//! triangulations are equal exactly when their face sets are. Faces are kept
//! in a `BTreeSet`, so iteration order is the canonical encoding used for IDs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("unknown graph {0:?} (expected k2222, k6, k5 or octahedron)")]
    UnknownGraph(String),
    #[error("unknown surface {0:?}")]
    UnknownSurface(String),
    #[error("invalid vertex label {0:?}")]
    BadLabel(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexLabel),
    #[error("edge {0}{1} is a loop or uses an undeclared vertex")]
    BadEdge(VertexLabel, VertexLabel),
    #[error("triangle needs three distinct labels, got {0}{1}{2}")]
    BadTriangle(VertexLabel, VertexLabel, VertexLabel),
    #[error("face {0} is not a 3-cycle of the graph")]
    FaceNotInGraph(Triangle),
    #[error("edge {0} lies in no face")]
    UncoveredEdge(Edge),
    #[error("edge {0} lies in {1} faces")]
    OverfullEdge(Edge, usize),
}

/// Symbolic vertex name with a stable total order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabel(char);

impl VertexLabel {
    pub fn new(c: char) -> Result<VertexLabel, ComplexError> {
        if c.is_ascii_alphanumeric() {
            Ok(VertexLabel(c))
        } else {
            Err(ComplexError::BadLabel(c.to_string()))
        }
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for VertexLabel {
    type Err = ComplexError;
    fn from_str(s: &str) -> Result<VertexLabel, ComplexError> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => VertexLabel::new(c),
            _ => Err(ComplexError::BadLabel(s.to_string())),
        }
    }
}

/// Labels `A`, `B`, ... for a string of characters.
pub fn labels(chars: &str) -> Vec<VertexLabel> {
    chars.chars().map(|c| VertexLabel::new(c).expect("alphanumeric label")).collect()
}

/// Unordered vertex pair, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge([VertexLabel; 2]);

impl Edge {
    pub fn new(u: VertexLabel, v: VertexLabel) -> Edge {
        if u <= v {
            Edge([u, v])
        } else {
            Edge([v, u])
        }
    }

    pub fn vertices(self) -> [VertexLabel; 2] {
        self.0
    }

    pub fn contains(self, v: VertexLabel) -> bool {
        self.0.contains(&v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0[0], self.0[1])
    }
}

/// Sorted triple of distinct labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle([VertexLabel; 3]);

impl Triangle {
    pub fn new(a: VertexLabel, b: VertexLabel, c: VertexLabel) -> Result<Triangle, ComplexError> {
        if a == b || b == c || a == c {
            return Err(ComplexError::BadTriangle(a, b, c));
        }
        let mut v = [a, b, c];
        v.sort();
        Ok(Triangle(v))
    }

    /// Parses `"ABC"` in any vertex order.
    pub fn parse(s: &str) -> Result<Triangle, ComplexError> {
        let l: Vec<char> = s.chars().collect();
        if l.len() != 3 {
            return Err(ComplexError::BadLabel(s.to_string()));
        }
        Triangle::new(VertexLabel::new(l[0])?, VertexLabel::new(l[1])?, VertexLabel::new(l[2])?)
    }

    pub fn vertices(self) -> [VertexLabel; 3] {
        self.0
    }

    pub fn edges(self) -> [Edge; 3] {
        let [a, b, c] = self.0;
        [Edge::new(a, b), Edge::new(a, c), Edge::new(b, c)]
    }

    pub fn contains(self, v: VertexLabel) -> bool {
        self.0.contains(&v)
    }

    /// The edge opposite `v`, if `v` is a corner.
    pub fn opposite(self, v: VertexLabel) -> Option<Edge> {
        let [a, b, c] = self.0;
        match v {
            _ if v == a => Some(Edge::new(b, c)),
            _ if v == b => Some(Edge::new(a, c)),
            _ if v == c => Some(Edge::new(a, b)),
            _ => None,
        }
    }

    /// Direction (+1 / −1) in which edge `e` is traversed by the reference
    /// orientation `(u, v, w)`, `u < v < w`.
    pub fn edge_direction(self, e: Edge) -> Option<i8> {
        let [u, v, w] = self.0;
        let [x, y] = e.vertices();
        match (x, y) {
            _ if (x, y) == (u, v) || (x, y) == (v, w) => Some(1),
            _ if (x, y) == (u, w) => Some(-1),
            _ => None,
        }
    }

    pub fn shared_vertices(self, other: Triangle) -> Vec<VertexLabel> {
        self.0.iter().copied().filter(|v| other.contains(*v)).collect()
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

/// Simple graph on labeled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    vertices: Vec<VertexLabel>,
    edges: BTreeSet<Edge>,
}

impl LabeledGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexLabel>,
        edges: impl IntoIterator<Item = (VertexLabel, VertexLabel)>,
    ) -> Result<LabeledGraph, ComplexError> {
        let mut vs: Vec<VertexLabel> = Vec::new();
        for v in vertices {
            if vs.contains(&v) {
                return Err(ComplexError::DuplicateVertex(v));
            }
            vs.push(v);
        }
        vs.sort();
        let mut es = BTreeSet::new();
        for (u, v) in edges {
            if u == v || vs.binary_search(&u).is_err() || vs.binary_search(&v).is_err() {
                return Err(ComplexError::BadEdge(u, v));
            }
            es.insert(Edge::new(u, v));
        }
        Ok(LabeledGraph { vertices: vs, edges: es })
    }

    /// Complete graph on `chars` minus the listed pairs.
    pub fn complete_minus(chars: &str, missing: &[(char, char)]) -> LabeledGraph {
        let vs = labels(chars);
        let missing: Vec<Edge> = missing
            .iter()
            .map(|&(a, b)| Edge::new(VertexLabel(a), VertexLabel(b)))
            .collect();
        let mut edges = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !missing.contains(&Edge::new(u, v)) {
                    edges.push((u, v));
                }
            }
        }
        LabeledGraph::new(vs, edges).expect("well-formed by construction")
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: VertexLabel, v: VertexLabel) -> bool {
        self.edges.contains(&Edge::new(u, v))
    }

    pub fn has_vertex(&self, v: VertexLabel) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: VertexLabel) -> Vec<VertexLabel> {
        self.vertices
            .iter()
            .copied()
            .filter(|&u| u != v && self.has_edge(u, v))
            .collect()
    }

    /// Subgraph induced on `keep`.
    pub fn induced(&self, keep: &[VertexLabel]) -> LabeledGraph {
        let vs: Vec<VertexLabel> = self.vertices.iter().copied().filter(|v| keep.contains(v)).collect();
        let es = self
            .edges
            .iter()
            .filter(|e| e.vertices().iter().all(|v| keep.contains(v)))
            .map(|e| (e.0[0], e.0[1]));
        LabeledGraph::new(vs, es.collect::<Vec<_>>()).expect("subgraph of a valid graph")
    }
}

/// The graphs the library knows by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphName {
    /// `K_{2,2,2,2}` on `A..H`, parts `{A,E} {B,F} {C,G} {D,H}`.
    K2222,
    /// `K_6` on `A..E, O`.
    K6,
    /// `K_5` on `A..E`.
    K5,
    /// `K_{2,2,2}` on `B C D F G H`, parts `{B,F} {C,G} {D,H}`.
    Octahedron,
}

impl GraphName {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphName::K2222 => "k2222",
            GraphName::K6 => "k6",
            GraphName::K5 => "k5",
            GraphName::Octahedron => "octahedron",
        }
    }
}

impl fmt::Display for GraphName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphName {
    type Err = ComplexError;
    fn from_str(s: &str) -> Result<GraphName, ComplexError> {
        match s.to_ascii_lowercase().as_str() {
            "k2222" => Ok(GraphName::K2222),
            "k6" => Ok(GraphName::K6),
            "k5" => Ok(GraphName::K5),
            "octahedron" | "k222" => Ok(GraphName::Octahedron),
            _ => Err(ComplexError::UnknownGraph(s.to_string())),
        }
    }
}

pub fn build_graph(name: GraphName) -> LabeledGraph {
    match name {
        GraphName::K2222 => {
            LabeledGraph::complete_minus("ABCDEFGH", &[('A', 'E'), ('B', 'F'), ('C', 'G'), ('D', 'H')])
        }
        GraphName::K6 => LabeledGraph::complete_minus("ABCDEO", &[]),
        GraphName::K5 => LabeledGraph::complete_minus("ABCDE", &[]),
        GraphName::Octahedron => {
            LabeledGraph::complete_minus("BCDFGH", &[('B', 'F'), ('C', 'G'), ('D', 'H')])
        }
    }
}

/// All 3-cliques, in canonical order.
pub fn enumerate_cliques3(graph: &LabeledGraph) -> Vec<Triangle> {
    let vs = graph.vertices();
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            if !graph.has_edge(a, b) {
                continue;
            }
            for &c in &vs[j + 1..] {
                if graph.has_edge(a, c) && graph.has_edge(b, c) {
                    out.push(Triangle([a, b, c]));
                }
            }
        }
    }
    out
}

/// Face set over a graph: every graph edge lies in one or two faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    graph: LabeledGraph,
    faces: BTreeSet<Triangle>,
}

impl Triangulation {
    pub fn new(graph: LabeledGraph, faces: impl IntoIterator<Item = Triangle>) -> Result<Triangulation, ComplexError> {
        let faces: BTreeSet<Triangle> = faces.into_iter().collect();
        let mut mult: BTreeMap<Edge, usize> = graph.edges().map(|e| (e, 0)).collect();
        for f in &faces {
            for e in f.edges() {
                match mult.get_mut(&e) {
                    Some(m) => *m += 1,
                    None => return Err(ComplexError::FaceNotInGraph(*f)),
                }
            }
        }
        for (e, m) in mult {
            match m {
                0 => return Err(ComplexError::UncoveredEdge(e)),
                1 | 2 => {}
                _ => return Err(ComplexError::OverfullEdge(e, m)),
            }
        }
        Ok(Triangulation { graph, faces })
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    /// Faces in canonical order.
    pub fn faces(&self) -> impl Iterator<Item = Triangle> + '_ {
        self.faces.iter().copied()
    }

    pub fn face_list(&self) -> Vec<Triangle> {
        self.faces.iter().copied().collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains_face(&self, f: Triangle) -> bool {
        self.faces.contains(&f)
    }

    pub fn edge_multiplicity(&self, e: Edge) -> usize {
        self.faces.iter().filter(|f| f.edges().contains(&e)).count()
    }

    /// Sub-complex on the faces whose corners all lie in `keep`; the graph
    /// shrinks to the edges those faces use.
    pub fn restrict(&self, keep: &[VertexLabel]) -> Result<Triangulation, ComplexError> {
        let faces: Vec<Triangle> = self
            .faces
            .iter()
            .copied()
            .filter(|f| f.vertices().iter().all(|v| keep.contains(v)))
            .collect();
        let vs: BTreeSet<VertexLabel> = faces.iter().flat_map(|f| f.vertices()).collect();
        let es: BTreeSet<Edge> = faces.iter().flat_map(|f| f.edges()).collect();
        let graph = LabeledGraph::new(vs, es.iter().map(|e| (e.0[0], e.0[1])))?;
        Triangulation::new(graph, faces)
    }

    pub fn link(&self, v: VertexLabel) -> VertexLink {
        vertex_link(self, v)
    }
}

impl PartialOrd for Triangulation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Triangulation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.faces.iter().cmp(other.faces.iter())
    }
}

/// Shape of a vertex link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexLink {
    /// Interior vertex: the link closes up.
    Cycle(Vec<VertexLabel>),
    /// Boundary vertex.
    Path(Vec<VertexLabel>),
    /// More than one fragment, a branching, or nothing at all.
    Singular { fragments: usize },
}

impl VertexLink {
    pub fn is_manifold(&self) -> bool {
        !matches!(self, VertexLink::Singular { .. })
    }
}

/// Assembles the rotation fragments around `v` (the edges opposite `v` in
/// its faces) into a single cycle or path, if they form one.
pub fn vertex_link(t: &Triangulation, v: VertexLabel) -> VertexLink {
    let mut adj: BTreeMap<VertexLabel, Vec<VertexLabel>> = BTreeMap::new();
    for f in t.faces() {
        if let Some(e) = f.opposite(v) {
            let [a, b] = e.vertices();
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
    }
    if adj.is_empty() || adj.values().any(|n| n.len() > 2) {
        return VertexLink::Singular {
            fragments: usize::from(!adj.is_empty()),
        };
    }
    let mut seen: BTreeSet<VertexLabel> = BTreeSet::new();
    let mut pieces = Vec::new();
    // walk paths from their endpoints first, then whatever cycles remain
    let ends: Vec<VertexLabel> = adj.iter().filter(|(_, n)| n.len() == 1).map(|(k, _)| *k).collect();
    let starts = ends.into_iter().chain(adj.keys().copied().collect::<Vec<_>>());
    for start in starts {
        if seen.contains(&start) {
            continue;
        }
        let mut walk = vec![start];
        seen.insert(start);
        let mut prev = None;
        let mut cur = start;
        let closed;
        loop {
            let next = adj[&cur].iter().copied().find(|&n| Some(n) != prev && !seen.contains(&n));
            match next {
                Some(n) => {
                    seen.insert(n);
                    walk.push(n);
                    prev = Some(cur);
                    cur = n;
                }
                None => {
                    closed = adj[&cur].len() == 2 && adj[&cur].contains(&start) && walk.len() > 2;
                    break;
                }
            }
        }
        pieces.push((walk, closed));
    }
    if pieces.len() != 1 {
        return VertexLink::Singular { fragments: pieces.len() };
    }
    let (walk, closed) = pieces.pop().unwrap();
    if closed {
        VertexLink::Cycle(walk)
    } else {
        VertexLink::Path(walk)
    }
}

/// Compact surfaces the classifier can name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceName {
    Sphere,
    Torus,
    KleinBottle,
    ProjectivePlane,
    MoebiusBand,
    Disk,
    Other,
}

impl SurfaceName {
    pub fn as_str(self) -> &'static str {
        match self {
            SurfaceName::Sphere => "sphere",
            SurfaceName::Torus => "torus",
            SurfaceName::KleinBottle => "klein-bottle",
            SurfaceName::ProjectivePlane => "projective-plane",
            SurfaceName::MoebiusBand => "moebius",
            SurfaceName::Disk => "disk",
            SurfaceName::Other => "other",
        }
    }

    pub fn has_boundary(self) -> bool {
        matches!(self, SurfaceName::MoebiusBand | SurfaceName::Disk)
    }
}

impl fmt::Display for SurfaceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SurfaceName {
    type Err = ComplexError;
    fn from_str(s: &str) -> Result<SurfaceName, ComplexError> {
        Ok(match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "sphere" => SurfaceName::Sphere,
            "torus" => SurfaceName::Torus,
            "klein-bottle" | "klein" => SurfaceName::KleinBottle,
            "projective-plane" | "rp2" => SurfaceName::ProjectivePlane,
            "moebius" | "mobius" | "möbius" | "moebius-band" => SurfaceName::MoebiusBand,
            "disk" => SurfaceName::Disk,
            "other" => SurfaceName::Other,
            _ => return Err(ComplexError::UnknownSurface(s.to_string())),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceClass {
    pub euler: i64,
    pub orientable: bool,
    pub boundary_components: usize,
    pub is_manifold: bool,
    pub name: SurfaceName,
}

/// Tries to orient every face consistently, starting from face `start`
/// (index into canonical order). `None` when the faces are not connected
/// through interior edges.
pub fn orientability_from(t: &Triangulation, start: usize) -> Option<bool> {
    let faces = t.face_list();
    if faces.is_empty() {
        return None;
    }
    let mut by_edge: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for e in f.edges() {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut orient: Vec<Option<i8>> = vec![None; faces.len()];
    let start = start % faces.len();
    orient[start] = Some(1);
    let mut queue = VecDeque::from([start]);
    let mut consistent = true;
    while let Some(i) = queue.pop_front() {
        let oi = orient[i].unwrap();
        for e in faces[i].edges() {
            let di = faces[i].edge_direction(e).unwrap();
            for &j in &by_edge[&e] {
                if j == i {
                    continue;
                }
                let dj = faces[j].edge_direction(e).unwrap();
                // neighbours must traverse the shared edge in opposite directions
                let want = -oi * di * dj;
                match orient[j] {
                    None => {
                        orient[j] = Some(want);
                        queue.push_back(j);
                    }
                    Some(o) if o != want => consistent = false,
                    Some(_) => {}
                }
            }
        }
    }
    if orient.iter().any(Option::is_none) {
        return None;
    }
    Some(consistent)
}

pub fn classify_surface(t: &Triangulation) -> SurfaceClass {
    let v = t.graph().vertices().len() as i64;
    let e = t.graph().edge_count() as i64;
    let f = t.face_count() as i64;
    let euler = v - e + f;

    let links_ok = t.graph().vertices().iter().all(|&x| vertex_link(t, x).is_manifold());
    let orientation = orientability_from(t, 0);
    let connected = orientation.is_some();
    let orientable = orientation.unwrap_or(false);

    let boundary: Vec<Edge> = t.graph().edges().filter(|&e| t.edge_multiplicity(e) == 1).collect();
    let boundary_components = count_components(&boundary);
    let is_manifold = links_ok && connected;

    let name = if !is_manifold {
        SurfaceName::Other
    } else {
        match (boundary_components, euler, orientable) {
            (0, 2, true) => SurfaceName::Sphere,
            (0, 0, true) => SurfaceName::Torus,
            (0, 0, false) => SurfaceName::KleinBottle,
            (0, 1, false) => SurfaceName::ProjectivePlane,
            (1, 1, true) => SurfaceName::Disk,
            (1, 0, false) => SurfaceName::MoebiusBand,
            _ => SurfaceName::Other,
        }
    };
    SurfaceClass {
        euler,
        orientable,
        boundary_components,
        is_manifold,
        name,
    }
}

/// Boundary edges grouped into closed walks (one per component).
pub fn boundary_cycles(t: &Triangulation) -> Vec<Vec<Edge>> {
    let boundary: Vec<Edge> = t.graph().edges().filter(|&e| t.edge_multiplicity(e) == 1).collect();
    let mut remaining: BTreeSet<Edge> = boundary.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&first) = remaining.iter().next() {
        remaining.remove(&first);
        let mut comp = vec![first];
        let mut frontier = vec![first];
        while let Some(e) = frontier.pop() {
            let touching: Vec<Edge> = remaining
                .iter()
                .copied()
                .filter(|o| e.vertices().iter().any(|&v| o.contains(v)))
                .collect();
            for o in touching {
                remaining.remove(&o);
                comp.push(o);
                frontier.push(o);
            }
        }
        out.push(comp);
    }
    out
}

fn count_components(edges: &[Edge]) -> usize {
    let mut parent: BTreeMap<VertexLabel, VertexLabel> = BTreeMap::new();
    fn find(p: &mut BTreeMap<VertexLabel, VertexLabel>, x: VertexLabel) -> VertexLabel {
        let up = *p.entry(x).or_insert(x);
        if up == x {
            x
        } else {
            let root = find(p, up);
            p.insert(x, root);
            root
        }
    }
    for e in edges {
        let [a, b] = e.vertices();
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent.insert(ra, rb);
        }
    }
    let keys: Vec<VertexLabel> = parent.keys().copied().collect();
    keys.into_iter()
        .map(|k| find(&mut parent, k))
        .collect::<BTreeSet<_>>()
        .len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(s: &str) -> Triangle {
        Triangle::parse(s).unwrap()
    }

    /// Minimal Möbius band on K5: faces {i, i+1, i+3} mod 5 over ABCDE.
    fn moebius_fixture() -> Triangulation {
        let names = ['A', 'B', 'C', 'D', 'E'];
        let faces = (0..5).map(|i| {
            let l = |k: usize| VertexLabel::new(names[k % 5]).unwrap();
            Triangle::new(l(i), l(i + 1), l(i + 3)).unwrap()
        });
        Triangulation::new(build_graph(GraphName::K5), faces).unwrap()
    }

    #[test]
    fn graph_sizes() {
        let k2222 = build_graph(GraphName::K2222);
        assert_eq!((k2222.vertices().len(), k2222.edge_count()), (8, 24));
        assert!(!k2222.has_edge(VertexLabel('A'), VertexLabel('E')));
        assert!(!k2222.has_edge(VertexLabel('D'), VertexLabel('H')));
        let k6 = build_graph(GraphName::K6);
        assert_eq!((k6.vertices().len(), k6.edge_count()), (6, 15));
        let k5 = build_graph(GraphName::K5);
        assert_eq!((k5.vertices().len(), k5.edge_count()), (5, 10));
        let oct = build_graph(GraphName::Octahedron);
        assert_eq!((oct.vertices().len(), oct.edge_count()), (6, 12));
        assert!("k7".parse::<GraphName>().is_err());
    }

    #[test]
    fn clique_counts() {
        assert_eq!(enumerate_cliques3(&build_graph(GraphName::K2222)).len(), 32);
        assert_eq!(enumerate_cliques3(&build_graph(GraphName::K6)).len(), 20);
        assert_eq!(enumerate_cliques3(&build_graph(GraphName::K5)).len(), 10);
        assert_eq!(enumerate_cliques3(&build_graph(GraphName::Octahedron)).len(), 8);
        let c = enumerate_cliques3(&build_graph(GraphName::K5));
        assert!(c.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn moebius_fixture_classifies() {
        let t = moebius_fixture();
        let class = classify_surface(&t);
        assert_eq!(class.euler, 0);
        assert!(!class.orientable);
        assert_eq!(class.boundary_components, 1);
        assert_eq!(class.name, SurfaceName::MoebiusBand);
        let cycles = boundary_cycles(&t);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 5);
        for v in t.graph().vertices() {
            assert!(matches!(t.link(*v), VertexLink::Path(ref p) if p.len() == 4));
        }
    }

    #[test]
    fn octahedron_boundary_is_a_sphere() {
        let g = build_graph(GraphName::Octahedron);
        let t = Triangulation::new(g.clone(), enumerate_cliques3(&g)).unwrap();
        let class = classify_surface(&t);
        assert_eq!((class.euler, class.orientable, class.name), (2, true, SurfaceName::Sphere));
    }

    #[test]
    fn disk_and_pinch_point() {
        let g = LabeledGraph::complete_minus("ABCD", &[('B', 'D')]);
        let disk = Triangulation::new(g, [tri("ABC"), tri("ACD")]).unwrap();
        assert_eq!(classify_surface(&disk).name, SurfaceName::Disk);

        // two triangles glued at a single vertex: χ fine, link is not
        let g = LabeledGraph::new(
            labels("ABCDE"),
            [('A', 'B'), ('A', 'C'), ('B', 'C'), ('A', 'D'), ('A', 'E'), ('D', 'E')]
                .map(|(a, b)| (VertexLabel(a), VertexLabel(b))),
        )
        .unwrap();
        let bowtie = Triangulation::new(g, [tri("ABC"), tri("ADE")]).unwrap();
        assert_eq!(bowtie.link(VertexLabel('A')), VertexLink::Singular { fragments: 2 });
        let class = classify_surface(&bowtie);
        assert!(!class.is_manifold);
        assert_eq!(class.name, SurfaceName::Other);
    }

    #[test]
    fn triangulation_invariants_enforced() {
        let g = build_graph(GraphName::K5);
        assert!(matches!(
            Triangulation::new(g.clone(), [tri("ABC")]),
            Err(ComplexError::UncoveredEdge(_))
        ));
        let all = enumerate_cliques3(&g);
        assert!(matches!(Triangulation::new(g, all), Err(ComplexError::OverfullEdge(_, 3))));
        let k2222 = build_graph(GraphName::K2222);
        assert!(matches!(
            Triangulation::new(k2222, [tri("ABE")]),
            Err(ComplexError::FaceNotInGraph(_))
        ));
    }

    #[test]
    fn orientation_directions() {
        let f = tri("ABC");
        assert_eq!(f.edge_direction(Edge::new(VertexLabel('A'), VertexLabel('B'))), Some(1));
        assert_eq!(f.edge_direction(Edge::new(VertexLabel('B'), VertexLabel('C'))), Some(1));
        assert_eq!(f.edge_direction(Edge::new(VertexLabel('A'), VertexLabel('C'))), Some(-1));
        assert_eq!(f.edge_direction(Edge::new(VertexLabel('A'), VertexLabel('D'))), None);
    }

    #[test]
    fn orientability_ignores_start_face() {
        let t = moebius_fixture();
        for s in 0..t.face_count() {
            assert_eq!(orientability_from(&t, s), Some(false));
        }
        let g = build_graph(GraphName::Octahedron);
        let sphere = Triangulation::new(g.clone(), enumerate_cliques3(&g)).unwrap();
        for s in 0..sphere.face_count() {
            assert_eq!(orientability_from(&sphere, s), Some(true));
        }
    }
}
