//! Exact intersection predicates and the embedding certifier.
//!
//! Two closed faces are admissible when their intersection is exactly the
//! convex hull of their shared vertices. `R³` goes through orientation
//! predicates; other dimensions go through the barycentric intersection
//! polytope of the two faces.

use std::fmt;

use rayon::prelude::*;

use crate::complex::{Triangle, VertexLabel};
use crate::geometry::{is_degenerate_triangle, normal_vector, GeometricComplex, GeometryError, Point};
use crate::numeric::{determinant, solve_linear, LinearSolution, QuadExt, Sign};

/// Sign of the determinant of `p₁ − p₀, …, p_d − p₀` for `d + 1` points in
/// `R^d`.
pub fn orientation_sign(points: &[Point]) -> Result<Sign, GeometryError> {
    let d = points.len().saturating_sub(1);
    if let Some(p) = points.iter().find(|p| p.dim() != d) {
        return Err(GeometryError::DimensionMismatch(d, p.dim()));
    }
    let rows: Vec<Vec<QuadExt>> = points[1..].iter().map(|p| p.sub(&points[0])).collect();
    Ok(det_small(&rows)?.sign())
}

fn det_small(m: &[Vec<QuadExt>]) -> Result<QuadExt, GeometryError> {
    Ok(match m.len() {
        0 => QuadExt::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        3 => {
            let minor = |a: usize, b: usize| &(&m[1][a] * &m[2][b]) - &(&m[1][b] * &m[2][a]);
            &(&(&m[0][0] * &minor(1, 2)) - &(&m[0][1] * &minor(0, 2))) + &(&m[0][2] * &minor(0, 1))
        }
        _ => determinant(m)?,
    })
}

fn orient3(a: &[QuadExt], b: &[QuadExt], c: &[QuadExt], d: &[QuadExt]) -> Sign {
    let diff = |p: &[QuadExt]| -> Vec<QuadExt> { p.iter().zip(a).map(|(x, y)| x - y).collect() };
    det_small(&[diff(b), diff(c), diff(d)]).expect("3x3").sign()
}

fn orient2(a: &[QuadExt], b: &[QuadExt], c: &[QuadExt]) -> Sign {
    let l = &(&b[0] - &a[0]) * &(&c[1] - &a[1]);
    let r = &(&b[1] - &a[1]) * &(&c[0] - &a[0]);
    (&l - &r).sign()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    InteriorCrossing,
    CoplanarOverlap,
    Containment,
    EdgeThroughFace,
    VertexInFace,
    DegenerateFace,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::InteriorCrossing => "interior_crossing",
            ViolationKind::CoplanarOverlap => "coplanar_overlap",
            ViolationKind::Containment => "containment",
            ViolationKind::EdgeThroughFace => "edge_through_face",
            ViolationKind::VertexInFace => "vertex_in_face",
            ViolationKind::DegenerateFace => "degenerate_face",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: String,
}

/// A face with its three positions, vertex `i` at `points[i]`.
#[derive(Clone, Debug)]
pub struct PlacedTriangle {
    pub labels: [VertexLabel; 3],
    pub points: [Point; 3],
}

impl PlacedTriangle {
    pub fn new(labels: [VertexLabel; 3], points: [Point; 3]) -> PlacedTriangle {
        PlacedTriangle { labels, points }
    }

    pub fn from_complex(g: &GeometricComplex, f: Triangle) -> PlacedTriangle {
        PlacedTriangle {
            labels: f.vertices(),
            points: g.face_points(f),
        }
    }

    fn name(&self) -> String {
        self.labels.iter().map(|l| l.as_char()).collect()
    }

    fn edge_name(&self, i: usize, j: usize) -> String {
        format!("{}{}", self.labels[i], self.labels[j])
    }

    fn coords(&self) -> [&[QuadExt]; 3] {
        [self.points[0].coords(), self.points[1].coords(), self.points[2].coords()]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    pub faces: (Triangle, Triangle),
    pub shared: Vec<VertexLabel>,
    pub violation: Option<Violation>,
}

impl PairVerdict {
    pub fn is_admissible(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for PairVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vs {} (shared {}): ", self.faces.0, self.faces.1, self.shared.len())?;
        match &self.violation {
            None => write!(f, "admissible"),
            Some(v) => write!(f, "{} ({})", v.kind, v.witness),
        }
    }
}

/// Decides whether two closed triangles meet exactly in the hull of the
/// vertices they share by label. Shared labels must carry identical points.
pub fn triangle_pair_check(t1: &PlacedTriangle, t2: &PlacedTriangle) -> Result<Option<Violation>, GeometryError> {
    let dim = t1.points[0].dim();
    if let Some(p) = t1.points.iter().chain(&t2.points).find(|p| p.dim() != dim) {
        return Err(GeometryError::DimensionMismatch(dim, p.dim()));
    }
    let mut shared = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if t1.labels[i] == t2.labels[j] {
                if t1.points[i] != t2.points[j] {
                    return Err(GeometryError::CoincidentVertices(t1.labels[i], t2.labels[j]));
                }
                shared.push((i, j));
            }
        }
    }
    for t in [t1, t2] {
        let [a, b, c] = &t.points;
        if is_degenerate_triangle(a, b, c)? {
            return Ok(Some(Violation {
                kind: ViolationKind::DegenerateFace,
                witness: format!("face {} has collinear vertices", t.name()),
            }));
        }
    }
    if shared.len() == 3 {
        return Ok(None);
    }
    if dim == 3 {
        Ok(check_3d(t1, t2, &shared))
    } else {
        check_flats(t1, t2, &shared)
    }
}

/// Pair check on the faces of a complex.
pub fn pair_intersection_check(g: &GeometricComplex, f1: Triangle, f2: Triangle) -> Result<PairVerdict, GeometryError> {
    let violation = triangle_pair_check(&PlacedTriangle::from_complex(g, f1), &PlacedTriangle::from_complex(g, f2))?;
    Ok(PairVerdict {
        faces: (f1, f2),
        shared: f1.shared_vertices(f2),
        violation,
    })
}

/// Coordinates in the plane obtained by deleting the first axis along
/// which `normal` is nonzero.
fn drop_axis(normal: &[QuadExt]) -> usize {
    normal.iter().position(|x| !x.is_zero()).expect("nondegenerate triangle has a normal")
}

fn project2(p: &[QuadExt], axis: usize) -> [QuadExt; 2] {
    let mut it = p.iter().enumerate().filter(|(i, _)| *i != axis).map(|(_, x)| x.clone());
    [it.next().unwrap(), it.next().unwrap()]
}

fn on_segment_2d(p: &[QuadExt; 2], a: &[QuadExt; 2], b: &[QuadExt; 2]) -> bool {
    (0..2).all(|i| {
        let (lo, hi) = if a[i].cmp_exact(&b[i]).expect("one context").is_le() {
            (&a[i], &b[i])
        } else {
            (&b[i], &a[i])
        };
        lo.cmp_exact(&p[i]).expect("one context").is_le() && p[i].cmp_exact(hi).expect("one context").is_le()
    })
}

fn segments_meet_2d(p: &[QuadExt; 2], q: &[QuadExt; 2], a: &[QuadExt; 2], b: &[QuadExt; 2]) -> bool {
    let o1 = orient2(p, q, a);
    let o2 = orient2(p, q, b);
    let o3 = orient2(a, b, p);
    let o4 = orient2(a, b, q);
    if o1 != o2 && o3 != o4 && o1 != Sign::Zero && o2 != Sign::Zero && o3 != Sign::Zero && o4 != Sign::Zero {
        return true;
    }
    (o1 == Sign::Zero && on_segment_2d(a, p, q))
        || (o2 == Sign::Zero && on_segment_2d(b, p, q))
        || (o3 == Sign::Zero && on_segment_2d(p, a, b))
        || (o4 == Sign::Zero && on_segment_2d(q, a, b))
}

fn in_triangle_2d(p: &[QuadExt; 2], t: &[[QuadExt; 2]; 3]) -> bool {
    let s = [orient2(&t[0], &t[1], p), orient2(&t[1], &t[2], p), orient2(&t[2], &t[0], p)];
    !(s.contains(&Sign::Positive) && s.contains(&Sign::Negative))
}

fn segment_meets_triangle_2d(p: &[QuadExt; 2], q: &[QuadExt; 2], t: &[[QuadExt; 2]; 3]) -> bool {
    in_triangle_2d(p, t)
        || in_triangle_2d(q, t)
        || (0..3).any(|i| segments_meet_2d(p, q, &t[i], &t[(i + 1) % 3]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Contact {
    Interior,
    Boundary,
    Coplanar,
}

fn segment_meets_triangle_3d(p: &[QuadExt], q: &[QuadExt], t: [&[QuadExt]; 3]) -> Option<Contact> {
    let o1 = orient3(t[0], t[1], t[2], p);
    let o2 = orient3(t[0], t[1], t[2], q);
    if o1 == o2 {
        if o1 != Sign::Zero {
            return None;
        }
        let axis = drop_axis(&triangle_normal(t));
        let t2 = t.map(|v| project2(v, axis));
        return segment_meets_triangle_2d(&project2(p, axis), &project2(q, axis), &t2).then_some(Contact::Coplanar);
    }
    if o1 == o2.flip() || o1 == Sign::Zero || o2 == Sign::Zero {
        let s = [orient3(p, q, t[0], t[1]), orient3(p, q, t[1], t[2]), orient3(p, q, t[2], t[0])];
        if s.contains(&Sign::Positive) && s.contains(&Sign::Negative) {
            return None;
        }
        return Some(if s.contains(&Sign::Zero) { Contact::Boundary } else { Contact::Interior });
    }
    None
}

fn triangle_normal(t: [&[QuadExt]; 3]) -> Vec<QuadExt> {
    let u: Vec<QuadExt> = t[1].iter().zip(t[0]).map(|(x, y)| x - y).collect();
    let v: Vec<QuadExt> = t[2].iter().zip(t[0]).map(|(x, y)| x - y).collect();
    normal_vector(&[u, v]).expect("3x3 minors")
}

fn point_in_triangle_3d(p: &[QuadExt], t: [&[QuadExt]; 3]) -> bool {
    if orient3(t[0], t[1], t[2], p) != Sign::Zero {
        return false;
    }
    let axis = drop_axis(&triangle_normal(t));
    in_triangle_2d(&project2(p, axis), &t.map(|v| project2(v, axis)))
}

fn others(shared: &[usize]) -> Vec<usize> {
    (0..3).filter(|i| !shared.contains(i)).collect()
}

fn check_3d(t1: &PlacedTriangle, t2: &PlacedTriangle, shared: &[(usize, usize)]) -> Option<Violation> {
    let c1 = t1.coords();
    let c2 = t2.coords();
    let s1: Vec<usize> = shared.iter().map(|s| s.0).collect();
    let s2: Vec<usize> = shared.iter().map(|s| s.1).collect();
    let r1 = others(&s1);
    let r2 = others(&s2);
    let coplanar = r2.iter().all(|&j| orient3(c1[0], c1[1], c1[2], c2[j]) == Sign::Zero);

    let violates = match shared.len() {
        2 => {
            if !coplanar {
                false
            } else {
                let (p, q) = (c1[s1[0]], c1[s1[1]]);
                let axis = drop_axis(&triangle_normal(c1));
                let [p, q, a, b] = [p, q, c1[r1[0]], c2[r2[0]]].map(|v| project2(v, axis));
                orient2(&p, &q, &a) == orient2(&p, &q, &b)
            }
        }
        1 => {
            segment_meets_triangle_3d(c1[r1[0]], c1[r1[1]], c2).is_some()
                || segment_meets_triangle_3d(c2[r2[0]], c2[r2[1]], c1).is_some()
        }
        _ => (0..3).any(|i| {
            segment_meets_triangle_3d(c1[i], c1[(i + 1) % 3], c2).is_some()
                || segment_meets_triangle_3d(c2[i], c2[(i + 1) % 3], c1).is_some()
        }),
    };
    if !violates {
        return None;
    }

    if coplanar {
        let inside = |a: [&[QuadExt]; 3], b: [&[QuadExt]; 3]| a.iter().all(|p| point_in_triangle_3d(p, b));
        if inside(c1, c2) || inside(c2, c1) {
            let (small, big) = if inside(c1, c2) { (t1, t2) } else { (t2, t1) };
            return Some(Violation {
                kind: ViolationKind::Containment,
                witness: format!("face {} lies within face {}", small.name(), big.name()),
            });
        }
        return Some(Violation {
            kind: ViolationKind::CoplanarOverlap,
            witness: format!("faces {} and {} overlap in a common plane", t1.name(), t2.name()),
        });
    }
    for (a, ra, cb, b) in [(t1, &r1, c2, t2), (t2, &r2, c1, t1)] {
        if let Some(&i) = ra.iter().find(|&&i| point_in_triangle_3d(a.points[i].coords(), cb)) {
            return Some(Violation {
                kind: ViolationKind::VertexInFace,
                witness: format!("vertex {} lies in face {}", a.labels[i], b.name()),
            });
        }
    }
    for (a, ca, cb, b) in [(t1, c1, c2, t2), (t2, c2, c1, t1)] {
        for i in 0..3 {
            let j = (i + 1) % 3;
            let (lo, hi) = (i.min(j), i.max(j));
            if point_shared(a, lo, hi, b) {
                continue;
            }
            match segment_meets_triangle_3d(ca[lo], ca[hi], cb) {
                Some(Contact::Boundary) => {
                    return Some(Violation {
                        kind: ViolationKind::InteriorCrossing,
                        witness: format!("edge {} crosses the boundary of face {}", a.edge_name(lo, hi), b.name()),
                    })
                }
                Some(_) => {
                    return Some(Violation {
                        kind: ViolationKind::EdgeThroughFace,
                        witness: format!("edge {} passes through face {}", a.edge_name(lo, hi), b.name()),
                    })
                }
                _ => {}
            }
        }
    }
    Some(Violation {
        kind: ViolationKind::EdgeThroughFace,
        witness: format!("faces {} and {} cross", t1.name(), t2.name()),
    })
}

/// Edge `(i, j)` of `a` has an endpoint shared with `b`; such an edge always
/// touches `b` at that endpoint.
fn point_shared(a: &PlacedTriangle, i: usize, j: usize, b: &PlacedTriangle) -> bool {
    b.labels.contains(&a.labels[i]) || b.labels.contains(&a.labels[j])
}

/// Any-dimension route. Writes both faces as `p₀ + s·u + t·v` and solves
/// for the common points of their affine planes; by the dimension of the
/// solution set the planes meet in nothing, a point, a line or coincide.
/// On a line the barycentric constraints cut out an interval whose two
/// endpoints bound the intersection.
pub(crate) fn check_flats(t1: &PlacedTriangle, t2: &PlacedTriangle, shared: &[(usize, usize)]) -> Result<Option<Violation>, GeometryError> {
    let dim = t1.points[0].dim();
    let s1: Vec<usize> = shared.iter().map(|s| s.0).collect();
    let (a0, b0) = (&t1.points[0], &t2.points[0]);
    let dirs = [t1.points[1].sub(a0), t1.points[2].sub(a0), t2.points[1].sub(b0), t2.points[2].sub(b0)];
    let m: Vec<Vec<QuadExt>> = (0..dim)
        .map(|r| vec![dirs[0][r].clone(), dirs[1][r].clone(), -&dirs[2][r], -&dirs[3][r]])
        .collect();
    // (s, t, s', t') ↦ barycentric weights of both faces
    let weights = |x: &[QuadExt]| -> [QuadExt; 6] {
        [
            &(&QuadExt::one() - &x[0]) - &x[1],
            x[0].clone(),
            x[1].clone(),
            &(&QuadExt::one() - &x[2]) - &x[3],
            x[2].clone(),
            x[3].clone(),
        ]
    };
    let candidates: Vec<[QuadExt; 6]> = match solve_linear(&m, &b0.sub(a0))? {
        LinearSolution::Inconsistent { .. } => Vec::new(),
        LinearSolution::Unique(x) => {
            let w = weights(&x);
            if w.iter().all(|v| v.sign() != Sign::Negative) { vec![w] } else { Vec::new() }
        }
        LinearSolution::Parametric { particular, null_space, .. } if null_space.len() == 1 => {
            let alpha = weights(&particular);
            let moved: Vec<QuadExt> = particular.iter().zip(&null_space[0]).map(|(p, n)| p + n).collect();
            let beta: Vec<QuadExt> = weights(&moved).iter().zip(&alpha).map(|(x, y)| x - y).collect();
            match feasible_interval(&alpha, &beta) {
                None => Vec::new(),
                Some((lo, hi)) => [lo, hi]
                    .iter()
                    .map(|tau| {
                        let x: Vec<QuadExt> = particular.iter().zip(&null_space[0]).map(|(p, n)| p + &(n * tau)).collect();
                        weights(&x)
                    })
                    .collect(),
            }
        }
        LinearSolution::Parametric { .. } => return Ok(coplanar_verdict(t1, t2, shared)),
    };
    let mut bad: Vec<&[QuadExt; 6]> = candidates
        .iter()
        .filter(|w| (0..3).any(|i| !s1.contains(&i) && !w[i].is_zero()))
        .collect();
    if bad.is_empty() {
        return Ok(None);
    }
    let support = |w: &[QuadExt; 6]| {
        let n1 = w[..3].iter().filter(|x| !x.is_zero()).count();
        let n2 = w[3..].iter().filter(|x| !x.is_zero()).count();
        (n1, n2)
    };
    bad.sort_by_key(|w| {
        let (n1, n2) = support(w);
        (n1.min(n2) != 1, !(n1 == 2 && n2 == 2))
    });
    let w = bad[0];
    let (n1, n2) = support(w);
    let mut point = vec![QuadExt::zero(); dim];
    for (wk, p) in w[..3].iter().zip(&t1.points) {
        for (x, c) in point.iter_mut().zip(p.coords()) {
            *x = &*x + &(wk * c);
        }
    }
    let kind = if n1 == 1 || n2 == 1 {
        ViolationKind::VertexInFace
    } else if n1 == 2 && n2 == 2 {
        ViolationKind::InteriorCrossing
    } else {
        ViolationKind::EdgeThroughFace
    };
    Ok(Some(Violation {
        kind,
        witness: format!("faces {} and {} meet at {}", t1.name(), t2.name(), Point::new(point)?),
    }))
}

/// Interval of `τ` with `α + τ·β ≥ 0` componentwise.
fn feasible_interval(alpha: &[QuadExt], beta: &[QuadExt]) -> Option<(QuadExt, QuadExt)> {
    let mut lo: Option<QuadExt> = None;
    let mut hi: Option<QuadExt> = None;
    for (a, b) in alpha.iter().zip(beta) {
        match b.sign() {
            Sign::Zero => {
                if a.sign() == Sign::Negative {
                    return None;
                }
            }
            s => {
                let root = -&(a / b);
                let (slot, want) = if s == Sign::Positive {
                    (&mut lo, std::cmp::Ordering::Greater)
                } else {
                    (&mut hi, std::cmp::Ordering::Less)
                };
                if slot.as_ref().is_none_or(|old| root.cmp_exact(old).expect("one context") == want) {
                    *slot = Some(root);
                }
            }
        }
    }
    let (lo, hi) = (lo?, hi?);
    lo.cmp_exact(&hi).expect("one context").is_le().then_some((lo, hi))
}

/// Both faces in one plane: redo the check in the affine frame of `t1`.
fn coplanar_verdict(t1: &PlacedTriangle, t2: &PlacedTriangle, shared: &[(usize, usize)]) -> Option<Violation> {
    let frame = |p: &Point| -> [QuadExt; 2] {
        let x = frame_coords(p, t1).expect("coplanar point has frame coordinates");
        [x[0].clone(), x[1].clone()]
    };
    let c1 = [[QuadExt::zero(), QuadExt::zero()], [QuadExt::one(), QuadExt::zero()], [QuadExt::zero(), QuadExt::one()]];
    let c2 = t2.points.clone().map(|p| frame(&p));
    if !overlap_2d(&c1, &c2, shared) {
        return None;
    }
    let inside = |a: &[[QuadExt; 2]; 3], b: &[[QuadExt; 2]; 3]| a.iter().all(|p| in_triangle_2d(p, b));
    for (small, big, cs, cb) in [(t1, t2, &c1, &c2), (t2, t1, &c2, &c1)] {
        if inside(cs, cb) {
            return Some(Violation {
                kind: ViolationKind::Containment,
                witness: format!("face {} lies within face {}", small.name(), big.name()),
            });
        }
    }
    Some(Violation {
        kind: ViolationKind::CoplanarOverlap,
        witness: format!("faces {} and {} overlap in a common plane", t1.name(), t2.name()),
    })
}

/// Whether two triangles in the plane meet outside the hull of their shared
/// vertices.
fn overlap_2d(c1: &[[QuadExt; 2]; 3], c2: &[[QuadExt; 2]; 3], shared: &[(usize, usize)]) -> bool {
    let s1: Vec<usize> = shared.iter().map(|s| s.0).collect();
    let s2: Vec<usize> = shared.iter().map(|s| s.1).collect();
    let r1 = others(&s1);
    let r2 = others(&s2);
    match shared.len() {
        2 => {
            let (p, q) = (&c1[s1[0]], &c1[s1[1]]);
            orient2(p, q, &c1[r1[0]]) == orient2(p, q, &c2[r2[0]])
        }
        1 => {
            segment_meets_triangle_2d(&c1[r1[0]], &c1[r1[1]], c2) || segment_meets_triangle_2d(&c2[r2[0]], &c2[r2[1]], c1)
        }
        _ => (0..3).any(|i| {
            segment_meets_triangle_2d(&c1[i], &c1[(i + 1) % 3], c2) || segment_meets_triangle_2d(&c2[i], &c2[(i + 1) % 3], c1)
        }),
    }
}

fn frame_coords(p: &Point, t: &PlacedTriangle) -> Option<Vec<QuadExt>> {
    let a0 = &t.points[0];
    let u = t.points[1].sub(a0);
    let v = t.points[2].sub(a0);
    let m: Vec<Vec<QuadExt>> = (0..p.dim()).map(|r| vec![u[r].clone(), v[r].clone()]).collect();
    match solve_linear(&m, &p.sub(a0)) {
        Ok(LinearSolution::Unique(x)) => Some(x),
        _ => None,
    }
}

#[cfg(test)]
fn in_triangle_nd(p: &Point, t: &PlacedTriangle) -> bool {
    match frame_coords(p, t) {
        Some(x) => {
            let rest = &(&QuadExt::one() - &x[0]) - &x[1];
            x.iter().chain(std::iter::once(&rest)).all(|w| w.sign() != Sign::Negative)
        }
        None => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub faces: Vec<Triangle>,
    pub pairs_checked: usize,
    /// Violating pairs in canonical pair order.
    pub violations: Vec<PairVerdict>,
}

impl EmbeddingReport {
    pub fn embedded(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every unordered pair of faces. Pairs are processed in parallel
/// and reported in lexicographic order of the sorted face list.
pub fn verify_embedding(g: &GeometricComplex) -> Result<EmbeddingReport, GeometryError> {
    let mut faces = g.triangulation().face_list();
    faces.sort();
    let pairs: Vec<(Triangle, Triangle)> = faces
        .iter()
        .enumerate()
        .flat_map(|(i, f)| faces[i + 1..].iter().map(move |h| (*f, *h)))
        .collect();
    let verdicts: Vec<PairVerdict> = pairs
        .par_iter()
        .map(|(a, b)| pair_intersection_check(g, *a, *b))
        .collect::<Result<_, _>>()?;
    Ok(EmbeddingReport {
        faces,
        pairs_checked: pairs.len(),
        violations: verdicts.into_iter().filter(|v| !v.is_admissible()).collect(),
    })
}

/// Checks only pairs with one face from each list.
pub fn cross_pair_violations(
    g: &GeometricComplex,
    first: &[Triangle],
    second: &[Triangle],
) -> Result<Vec<PairVerdict>, GeometryError> {
    let pairs: Vec<(Triangle, Triangle)> = first
        .iter()
        .flat_map(|f| second.iter().filter(move |h| *h != f).map(move |h| (*f, *h)))
        .collect();
    let verdicts: Vec<PairVerdict> = pairs
        .par_iter()
        .map(|(a, b)| pair_intersection_check(g, *a, *b))
        .collect::<Result<_, _>>()?;
    Ok(verdicts.into_iter().filter(|v| !v.is_admissible()).collect())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_graph, labels, GraphName, SurfaceName, Triangulation};
    use crate::enumerate::{complement_faces, complement_pairing, enumerate_triangulations, Catalog, EnumerationTask};
    use crate::geometry::{construction_coords, default_viewpoint, orthogonal_project, schlegel_project, Construction, Placement, RealizationParams};
    use crate::numeric::{rational, Rational};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn catalog(g: GraphName, s: SurfaceName) -> Catalog {
        enumerate_triangulations(&EnumerationTask::for_surface(build_graph(g), s).unwrap())
    }

    fn coords(c: Construction, k: Option<Rational>) -> Placement {
        construction_coords(c, k.map(RealizationParams::new).as_ref()).unwrap()
    }

    fn embedded_count(cat: &Catalog, p: &Placement) -> Vec<bool> {
        cat.triangulations()
            .iter()
            .map(|t| verify_embedding(&GeometricComplex::new(t.clone(), p).unwrap()).unwrap().embedded())
            .collect()
    }

    fn tri(names: &str, pts: [[i64; 3]; 3]) -> PlacedTriangle {
        let l = labels(names);
        PlacedTriangle::new([l[0], l[1], l[2]], pts.map(|c| Point::from_ints(&c)))
    }

    #[test]
    fn orientation_basics() {
        let p = |c: &[i64]| Point::from_ints(c);
        let unit = [p(&[0, 0, 0]), p(&[1, 0, 0]), p(&[0, 1, 0]), p(&[0, 0, 1])];
        assert_eq!(orientation_sign(&unit).unwrap(), Sign::Positive);
        let mut swapped = unit.clone();
        swapped.swap(1, 2);
        assert_eq!(orientation_sign(&swapped).unwrap(), Sign::Negative);
        let flat = [p(&[0, 0, 0]), p(&[1, 0, 0]), p(&[0, 1, 0]), p(&[1, 1, 0])];
        assert_eq!(orientation_sign(&flat).unwrap(), Sign::Zero);
        let four = [p(&[0, 0, 0, 0]), p(&[1, 0, 0, 0]), p(&[0, 1, 0, 0]), p(&[0, 0, 1, 0]), p(&[0, 0, 0, 1])];
        assert_eq!(orientation_sign(&four).unwrap(), Sign::Positive);
    }

    #[test]
    fn simple_pairs() {
        let a = tri("ABC", [[0, 0, 0], [1, 0, 0], [0, 1, 0]]);
        let b = tri("ABD", [[0, 0, 0], [1, 0, 0], [0, 0, 1]]);
        assert_eq!(triangle_pair_check(&a, &b).unwrap(), None);
        let far = tri("DEF", [[0, 0, 2], [1, 0, 2], [0, 1, 3]]);
        assert_eq!(triangle_pair_check(&a, &far).unwrap(), None);
        let folded = tri("ABD", [[0, 0, 0], [1, 0, 0], [1, 1, 0]]);
        assert!(triangle_pair_check(&a, &folded).unwrap().is_some());
        let unfolded = tri("ABD", [[0, 0, 0], [1, 0, 0], [1, -1, 0]]);
        assert_eq!(triangle_pair_check(&a, &unfolded).unwrap(), None);
        let pierce = tri("DEF", [[0, 0, -1], [1, 1, 1], [-1, 1, 1]]);
        assert!(triangle_pair_check(&a, &pierce).unwrap().is_some());
        let touch = tri("ADE", [[0, 0, 0], [1, 1, 0], [0, 0, 1]]);
        assert_eq!(
            triangle_pair_check(&a, &touch).unwrap().map(|v| v.kind),
            Some(ViolationKind::InteriorCrossing)
        );
    }

    #[test]
    fn flats_route_agrees_on_lifted_pairs() {
        // the same configurations with a zero fourth coordinate
        let lift = |t: &PlacedTriangle| {
            PlacedTriangle::new(
                t.labels,
                t.points.clone().map(|p| {
                    let mut c = p.coords().to_vec();
                    c.push(QuadExt::zero());
                    Point::new(c).unwrap()
                }),
            )
        };
        let a = tri("ABC", [[0, 0, 0], [2, 0, 0], [0, 2, 0]]);
        for b in [
            tri("ABD", [[0, 0, 0], [2, 0, 0], [0, 0, 1]]),
            tri("ABD", [[0, 0, 0], [2, 0, 0], [1, 1, 0]]),
            tri("DEF", [[0, 0, -1], [1, 1, 1], [-1, 1, 1]]),
            tri("AEF", [[0, 0, 0], [1, 1, 1], [1, 1, -1]]),
            tri("DEF", [[3, 3, 0], [4, 3, 0], [3, 4, 0]]),
        ] {
            let want = triangle_pair_check(&a, &b).unwrap().is_some();
            assert_eq!(triangle_pair_check(&lift(&a), &lift(&b)).unwrap().is_some(), want);
        }
    }

    #[test]
    fn schlegel16cell_embeds_all_tori() {
        let cat = catalog(GraphName::K2222, SurfaceName::Torus);
        let p = coords(Construction::Schlegel16Cell, Some(rational(4, 1)));
        assert!(embedded_count(&cat, &p).iter().all(|e| *e));
    }

    #[test]
    fn suspension_embeds_one_torus_per_pair() {
        let cat = catalog(GraphName::K2222, SurfaceName::Torus);
        let p = coords(Construction::Suspension, Some(rational(14, 5)));
        let ok = embedded_count(&cat, &p);
        assert_eq!(ok.iter().filter(|e| **e).count(), 6);
        let good = ok.iter().position(|e| *e).unwrap();
        let comp = complement_faces(&cat.triangulations()[good]);
        let t = Triangulation::new(build_graph(GraphName::K2222), comp).unwrap();
        let report = verify_embedding(&GeometricComplex::new(t, &p).unwrap()).unwrap();
        let fgh = Triangle::parse("FGH").unwrap();
        assert!(report.violations.iter().any(|v| {
            (v.faces.0 == fgh || v.faces.1 == fgh)
                && matches!(
                    v.violation.as_ref().unwrap().kind,
                    ViolationKind::Containment | ViolationKind::CoplanarOverlap
                )
        }));
    }

    #[test]
    fn rp2_and_moebius_embed() {
        let cat = catalog(GraphName::K6, SurfaceName::ProjectivePlane);
        let p = coords(Construction::Rp2Simplex, None);
        assert!(embedded_count(&cat, &p).iter().all(|e| *e));
        let cat = catalog(GraphName::K5, SurfaceName::MoebiusBand);
        let p = coords(Construction::Moebius, None);
        assert!(embedded_count(&cat, &p).iter().all(|e| *e));
        let _ = orthogonal_project;
    }

    #[test]
    fn projected_hyperoctahedron_embeds_all_tori() {
        let cat = catalog(GraphName::K2222, SurfaceName::Torus);
        let p = coords(Construction::StdHyperoctahedron, None);
        let facet = labels("ABCD");
        let proj = schlegel_project(&p, &facet, &default_viewpoint(&p, &facet).unwrap()).unwrap();
        assert!(embedded_count(&cat, &proj).iter().all(|e| *e));
    }

    #[test]
    fn scaling_preserves_verdicts() {
        let cat = catalog(GraphName::K2222, SurfaceName::Torus);
        let p = coords(Construction::Suspension, Some(rational(14, 5)));
        let r = rational(7, 3);
        for t in cat.triangulations() {
            let g = GeometricComplex::new(t.clone(), &p).unwrap();
            let a = verify_embedding(&g).unwrap();
            let b = verify_embedding(&g.scaled(&r)).unwrap();
            let kinds = |r: &EmbeddingReport| {
                r.violations
                    .iter()
                    .map(|v| (v.faces, v.violation.as_ref().unwrap().kind))
                    .collect::<Vec<_>>()
            };
            assert_eq!(kinds(&a), kinds(&b));
        }
    }

    #[test]
    fn complementary_cross_pairs_are_admissible() {
        let cat = catalog(GraphName::K2222, SurfaceName::Torus);
        let p = coords(Construction::Schlegel16Cell, Some(rational(4, 1)));
        let pairing = complement_pairing(&cat);
        assert_eq!(pairing.pairs.len(), 6);
        for (i, j) in pairing.pairs {
            let a = &cat.triangulations()[i];
            let b = &cat.triangulations()[j];
            let g = GeometricComplex::new(a.clone(), &p).unwrap();
            assert!(cross_pair_violations(&g, &a.face_list(), &b.face_list()).unwrap().is_empty());
        }
    }

    fn random_triangle(rng: &mut ChaCha8Rng, names: &str, dim: usize) -> PlacedTriangle {
        let l = labels(names);
        let pt = |rng: &mut ChaCha8Rng| {
            Point::new((0..dim).map(|_| QuadExt::from(rational(rng.gen_range(-6..=6), rng.gen_range(1..=3)))).collect()).unwrap()
        };
        PlacedTriangle::new([l[0], l[1], l[2]], [pt(rng), pt(rng), pt(rng)])
    }

    fn generic(a: &PlacedTriangle, b: &PlacedTriangle) -> bool {
        let pts: Vec<&Point> = a.points.iter().chain(&b.points).collect();
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    for l in k + 1..6 {
                        let four = [pts[i], pts[j], pts[k], pts[l]].map(|p| p.clone());
                        if orientation_sign(&four).unwrap() == Sign::Zero {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn float_intersects(a: &PlacedTriangle, b: &PlacedTriangle) -> bool {
        let f = |t: &PlacedTriangle| t.points.clone().map(|p| p.to_f64());
        let (a, b) = (f(a), f(b));
        let orient = |p: &[f64], q: &[f64], r: &[f64], s: &[f64]| {
            let u = [q[0] - p[0], q[1] - p[1], q[2] - p[2]];
            let v = [r[0] - p[0], r[1] - p[1], r[2] - p[2]];
            let w = [s[0] - p[0], s[1] - p[1], s[2] - p[2]];
            u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0])
        };
        let seg_hits = |p: &[f64], q: &[f64], t: &[Vec<f64>; 3]| {
            let o1 = orient(&t[0], &t[1], &t[2], p);
            let o2 = orient(&t[0], &t[1], &t[2], q);
            if o1 * o2 > 0.0 {
                return false;
            }
            let s = [orient(p, q, &t[0], &t[1]), orient(p, q, &t[1], &t[2]), orient(p, q, &t[2], &t[0])];
            s.iter().all(|x| *x > 0.0) || s.iter().all(|x| *x < 0.0)
        };
        (0..3).any(|i| seg_hits(&a[i], &a[(i + 1) % 3], &b) || seg_hits(&b[i], &b[(i + 1) % 3], &a))
    }

    #[test]
    fn random_pairs_match_float_oracle_and_flats_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut checked = 0;
        let mut hits = 0;
        while checked < 1000 {
            let a = random_triangle(&mut rng, "ABC", 3);
            let b = random_triangle(&mut rng, "DEF", 3);
            if !generic(&a, &b) {
                continue;
            }
            checked += 1;
            let exact = triangle_pair_check(&a, &b).unwrap().is_some();
            hits += exact as usize;
            assert_eq!(exact, float_intersects(&a, &b));
            let shared: Vec<(usize, usize)> = Vec::new();
            assert_eq!(check_flats(&a, &b, &shared).unwrap().is_some(), exact);
            assert_eq!(triangle_pair_check(&b, &a).unwrap().is_some(), exact);
        }
        assert!(hits > 50 && hits < 950, "{hits}");
    }

    #[test]
    fn admissible_disjoint_pairs_in_four_space_sample_clear() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut seen = 0;
        while seen < 40 {
            let a = random_triangle(&mut rng, "ABC", 4);
            let b = random_triangle(&mut rng, "DEF", 4);
            if triangle_pair_check(&a, &b).unwrap().is_some() {
                continue;
            }
            seen += 1;
            let n = 6;
            for i in 0..=n {
                for j in 0..=n - i {
                    let (s, t) = (rational(i, n), rational(j, n));
                    let w = [Rational::from_integer(1.into()) - &s - &t, s, t];
                    let mut c = vec![QuadExt::zero(); 4];
                    for (wk, p) in w.iter().zip(&a.points) {
                        for (x, y) in c.iter_mut().zip(p.coords()) {
                            *x = &*x + &y.scale(wk);
                        }
                    }
                    assert!(!in_triangle_nd(&Point::new(c).unwrap(), &b));
                }
            }
        }
    }
}
