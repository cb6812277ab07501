//! Exact point sets: the named constructions, Schlegel and orthogonal
//! projections, and squared-length metrics.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::complex::{labels, ComplexError, Edge, GraphName, SurfaceName, Triangle, Triangulation, VertexLabel};
use crate::numeric::{determinant, rank, rational, solve_linear, FieldContext, LinearSolution, NumericError, QuadExt, Rational, Sign};
use crate::verify::orientation_sign;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("construction {0} needs the homothety parameter k")]
    MissingParameter(Construction),
    #[error("construction {construction} requires k > {bound}, got k = {k}")]
    ParameterOutOfRange {
        construction: Construction,
        bound: Box<Rational>,
        k: Box<Rational>,
    },
    #[error("unknown construction {0:?}")]
    UnknownConstruction(String),
    #[error("points of dimension {0} and {1} mixed")]
    DimensionMismatch(usize, usize),
    #[error("no position for vertex {0}")]
    MissingVertex(VertexLabel),
    #[error("vertices {0} and {1} share a position")]
    CoincidentVertices(VertexLabel, VertexLabel),
    #[error("face {0} is degenerate")]
    DegenerateFace(Triangle),
    #[error("facet vertices do not span a hyperplane")]
    DegenerateFacet,
    #[error("viewpoint lies on the facet hyperplane")]
    ViewpointOnHyperplane,
    #[error("viewpoint is not strictly outside the facet (vertex {0} is on its side)")]
    ViewpointNotOutside(VertexLabel),
    #[error("projection line through {0} is parallel to the facet hyperplane")]
    ParallelLine(VertexLabel),
    #[error("axis {axis} out of range for dimension {dim}")]
    BadAxis { axis: usize, dim: usize },
    #[error("expected {expected} points, got {got}")]
    Arity { expected: usize, got: usize },
}

/// Point in `R^n` with exact coordinates sharing one field context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point(Vec<QuadExt>);

impl Point {
    pub fn new(coords: Vec<QuadExt>) -> Result<Point, GeometryError> {
        let mut ctx = FieldContext::RATIONAL;
        for c in &coords {
            if !c.is_rational() {
                ctx = ctx.join(c.context())?;
            }
        }
        let coords = coords.iter().map(|c| c.lift_to(ctx)).collect::<Result<_, _>>()?;
        Ok(Point(coords))
    }

    pub fn from_ints(coords: &[i64]) -> Point {
        Point(coords.iter().map(|&c| QuadExt::from_int(c)).collect())
    }

    pub fn origin(dim: usize) -> Point {
        Point(vec![QuadExt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[QuadExt] {
        &self.0
    }

    pub fn context(&self) -> FieldContext {
        self.0
            .iter()
            .find(|c| !c.is_rational())
            .map_or(FieldContext::RATIONAL, QuadExt::context)
    }

    /// `self − other` as a vector.
    pub fn sub(&self, other: &Point) -> Vec<QuadExt> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    pub fn offset(&self, v: &[QuadExt]) -> Point {
        Point(self.0.iter().zip(v).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, r: &Rational) -> Point {
        Point(self.0.iter().map(|c| c.scale(r)).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(QuadExt::to_f64).collect()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn dot(a: &[QuadExt], b: &[QuadExt]) -> QuadExt {
    a.iter().zip(b).fold(QuadExt::zero(), |acc, (x, y)| acc + x * y)
}

pub(crate) fn scale_vec(v: &[QuadExt], s: &QuadExt) -> Vec<QuadExt> {
    v.iter().map(|x| x * s).collect()
}

pub fn distance_sq(p: &Point, q: &Point) -> QuadExt {
    let d = p.sub(q);
    dot(&d, &d)
}

/// Vector orthogonal to the `n − 1` rows (each of length `n`), by cofactor
/// expansion.
pub(crate) fn normal_vector(rows: &[Vec<QuadExt>]) -> Result<Vec<QuadExt>, NumericError> {
    let n = rows.len() + 1;
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<QuadExt>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let d = if minor.is_empty() { QuadExt::one() } else { determinant(&minor)? };
            Ok(if j % 2 == 0 { d } else { -d })
        })
        .collect()
}

pub fn centroid(points: &[&Point]) -> Point {
    let dim = points[0].dim();
    let inv = Rational::new(1.into(), (points.len() as i64).into());
    let mut acc = vec![QuadExt::zero(); dim];
    for p in points {
        for (a, c) in acc.iter_mut().zip(p.coords()) {
            *a = &*a + c;
        }
    }
    Point(acc.iter().map(|a| a.scale(&inv)).collect())
}

/// Labeled point set.
pub type Placement = BTreeMap<VertexLabel, Point>;

/// A triangulation with a position for every vertex.
#[derive(Clone, Debug)]
pub struct GeometricComplex {
    triangulation: Triangulation,
    placement: Placement,
    dim: usize,
}

impl GeometricComplex {
    /// Checks that every vertex is placed, all points share a dimension and
    /// field, distinct labels get distinct points and no face is degenerate.
    pub fn new(triangulation: Triangulation, placement: &Placement) -> Result<GeometricComplex, GeometryError> {
        let vertices = triangulation.graph().vertices().to_vec();
        let mut ctx = FieldContext::RATIONAL;
        let mut dim = None;
        for v in &vertices {
            let p = placement.get(v).ok_or(GeometryError::MissingVertex(*v))?;
            match dim {
                None => dim = Some(p.dim()),
                Some(d) if d != p.dim() => return Err(GeometryError::DimensionMismatch(d, p.dim())),
                _ => {}
            }
            ctx = ctx.join(p.context())?;
        }
        let dim = dim.unwrap_or(0);
        let mut own = Placement::new();
        for v in &vertices {
            let p = Point::new(placement[v].coords().iter().map(|c| c.lift_to(ctx)).collect::<Result<_, _>>()?)?;
            own.insert(*v, p);
        }
        for (i, u) in vertices.iter().enumerate() {
            for w in &vertices[i + 1..] {
                if own[u] == own[w] {
                    return Err(GeometryError::CoincidentVertices(*u, *w));
                }
            }
        }
        for f in triangulation.faces() {
            let [a, b, c] = f.vertices();
            if is_degenerate_triangle(&own[&a], &own[&b], &own[&c])? {
                return Err(GeometryError::DegenerateFace(f));
            }
        }
        Ok(GeometricComplex {
            triangulation,
            placement: own,
            dim,
        })
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.triangulation
    }

    pub fn placement(&self) -> &Placement {
        &self.placement
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, v: VertexLabel) -> &Point {
        &self.placement[&v]
    }

    pub fn face_points(&self, f: Triangle) -> [Point; 3] {
        f.vertices().map(|v| self.placement[&v].clone())
    }

    /// Same complex with every coordinate multiplied by `r`.
    pub fn scaled(&self, r: &Rational) -> GeometricComplex {
        GeometricComplex {
            triangulation: self.triangulation.clone(),
            placement: self.placement.iter().map(|(k, p)| (*k, p.scaled(r))).collect(),
            dim: self.dim,
        }
    }
}

pub(crate) fn is_degenerate_triangle(a: &Point, b: &Point, c: &Point) -> Result<bool, NumericError> {
    Ok(rank(&[b.sub(a), c.sub(a)])? < 2)
}

/// The named coordinate sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Bipyramidal suspension of `K_{2,2,2,2}` in `R³`: six vertices in the
    /// plane `z = 0`, poles `A`, `E` on the `z` axis.
    Suspension,
    /// Schlegel-type diagram of the hyperoctahedron in `R³`: outer regular
    /// tetrahedron `ABCD`, inner image `EFGH` under `x ↦ −x/k`.
    Schlegel16Cell,
    /// Regular 4-simplex `ABCDE` around the origin `O` in `R⁴`.
    Rp2Simplex,
    /// Integer points in `R³`: `A` at the origin inside tetrahedron `BCDE`.
    Moebius,
    /// `±e_i` in `R⁴`.
    StdHyperoctahedron,
    /// Regular 5-simplex in `R⁵`: `e_1..e_5` and one point on the diagonal.
    StdSimplex5,
    /// `±e_i` in `R³`.
    StdOctahedron,
}

impl Construction {
    pub const ALL: [Construction; 7] = [
        Construction::Suspension,
        Construction::Schlegel16Cell,
        Construction::Rp2Simplex,
        Construction::Moebius,
        Construction::StdHyperoctahedron,
        Construction::StdSimplex5,
        Construction::StdOctahedron,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Construction::Suspension => "suspension",
            Construction::Schlegel16Cell => "schlegel16cell",
            Construction::Rp2Simplex => "rp2-simplex",
            Construction::Moebius => "moebius",
            Construction::StdHyperoctahedron => "std-hyperoctahedron",
            Construction::StdSimplex5 => "std-simplex5",
            Construction::StdOctahedron => "std-octahedron",
        }
    }

    pub fn graph(self) -> GraphName {
        match self {
            Construction::Suspension | Construction::Schlegel16Cell | Construction::StdHyperoctahedron => {
                GraphName::K2222
            }
            Construction::Rp2Simplex | Construction::StdSimplex5 => GraphName::K6,
            Construction::Moebius => GraphName::K5,
            Construction::StdOctahedron => GraphName::Octahedron,
        }
    }

    /// Surface whose triangulations this point set is meant to carry.
    pub fn surface(self) -> SurfaceName {
        match self.graph() {
            GraphName::K2222 => SurfaceName::Torus,
            GraphName::K6 => SurfaceName::ProjectivePlane,
            GraphName::K5 => SurfaceName::MoebiusBand,
            GraphName::Octahedron => SurfaceName::Sphere,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Construction::Suspension
            | Construction::Schlegel16Cell
            | Construction::Moebius
            | Construction::StdOctahedron => 3,
            Construction::Rp2Simplex | Construction::StdHyperoctahedron => 4,
            Construction::StdSimplex5 => 5,
        }
    }

    /// Lower bound on `k` (exclusive), for constructions that take one.
    pub fn k_bound(self) -> Option<Rational> {
        match self {
            Construction::Suspension => Some(rational(2, 1)),
            Construction::Schlegel16Cell => Some(rational(3, 1)),
            _ => None,
        }
    }

    pub fn default_k(self) -> Option<Rational> {
        match self {
            Construction::Suspension => Some(rational(14, 5)),
            Construction::Schlegel16Cell => Some(rational(4, 1)),
            _ => None,
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Construction {
    type Err = GeometryError;
    fn from_str(s: &str) -> Result<Construction, GeometryError> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Construction::ALL
            .into_iter()
            .find(|c| c.as_str() == norm)
            .ok_or_else(|| GeometryError::UnknownConstruction(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationParams {
    /// Reciprocal magnitude of the (negative) homothety ratio.
    pub k: Rational,
}

impl RealizationParams {
    pub fn new(k: Rational) -> RealizationParams {
        RealizationParams { k }
    }
}

fn place(names: &str, points: Vec<Point>) -> Placement {
    labels(names).into_iter().zip(points).collect()
}

/// Exact coordinates for `construction`. `params` is required, and
/// bounds-checked, for the two constructions that take `k`.
pub fn construction_coords(
    construction: Construction,
    params: Option<&RealizationParams>,
) -> Result<Placement, GeometryError> {
    let k = match construction.k_bound() {
        Some(bound) => {
            let k = params.ok_or(GeometryError::MissingParameter(construction))?.k.clone();
            if k <= bound {
                return Err(GeometryError::ParameterOutOfRange {
                    construction,
                    bound: Box::new(bound),
                    k: Box::new(k),
                });
            }
            Some(k)
        }
        None => None,
    };
    let int = QuadExt::from_int;
    let p = |c: Vec<QuadExt>| Point::new(c).expect("single context");
    Ok(match construction {
        Construction::Suspension => {
            let ctx = FieldContext::new(2, 3)?;
            let r2 = ctx.sqrt_d1();
            let r6 = ctx.sqrt_d1d2();
            let r8 = r2.scale(&rational(2, 1));
            let inv_k = k.unwrap().recip();
            let s = |x: &QuadExt| x.scale(&inv_k);
            place(
                "ABCDEFGH",
                vec![
                    p(vec![int(0), int(0), r8.clone()]),
                    p(vec![-s(&r8), int(0), int(0)]),
                    p(vec![s(&r2), s(&r6), int(0)]),
                    p(vec![s(&r2), -s(&r6), int(0)]),
                    p(vec![int(0), int(0), -&r8]),
                    p(vec![r8.clone(), int(0), int(0)]),
                    p(vec![-&r2, -&r6, int(0)]),
                    p(vec![-&r2, r6.clone(), int(0)]),
                ],
            )
        }
        Construction::Schlegel16Cell => {
            let ctx = FieldContext::new(2, 3)?;
            let r2 = ctx.sqrt_d1();
            let r6 = ctx.sqrt_d1d2();
            let r8 = r2.scale(&rational(2, 1));
            let inv_k = k.unwrap().recip();
            let s = |x: &QuadExt| x.scale(&inv_k);
            place(
                "ABCDEFGH",
                vec![
                    p(vec![int(0), int(0), int(3)]),
                    p(vec![r8.clone(), int(0), int(-1)]),
                    p(vec![-&r2, r6.clone(), int(-1)]),
                    p(vec![-&r2, -&r6, int(-1)]),
                    p(vec![int(0), int(0), -s(&int(3))]),
                    p(vec![-s(&r8), int(0), s(&int(1))]),
                    p(vec![s(&r2), -s(&r6), s(&int(1))]),
                    p(vec![s(&r2), s(&r6), s(&int(1))]),
                ],
            )
        }
        Construction::Rp2Simplex => {
            let ctx = FieldContext::quadratic(5)?;
            // 4/√5 = (4/5)√5 and 1/√5 = (1/5)√5
            let top = ctx.sqrt_d1().scale(&rational(4, 5));
            let low = ctx.sqrt_d1().scale(&rational(-1, 5));
            let q = |x, y, z, w: &QuadExt| p(vec![int(x), int(y), int(z), w.clone()]);
            place(
                "ABCDEO",
                vec![
                    q(0, 0, 0, &top),
                    q(1, 1, 1, &low),
                    q(1, -1, -1, &low),
                    q(-1, 1, -1, &low),
                    q(-1, -1, 1, &low),
                    q(0, 0, 0, &int(0)),
                ],
            )
        }
        Construction::Moebius => place(
            "ABCDE",
            [[0, 0, 0], [1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]
                .iter()
                .map(|c| Point::from_ints(c))
                .collect(),
        ),
        Construction::StdHyperoctahedron => {
            let mut pts = Vec::new();
            for sign in [1, -1] {
                for i in 0..4 {
                    let mut c = [0i64; 4];
                    c[i] = sign;
                    pts.push(Point::from_ints(&c));
                }
            }
            place("ABCDEFGH", pts)
        }
        Construction::StdSimplex5 => {
            // e_1..e_5 plus t·(1,…,1) at distance √2 from each: 5t² − 2t − 1 = 0
            let ctx = FieldContext::quadratic(6)?;
            let t = &QuadExt::from(rational(1, 5)) - &ctx.sqrt_d1().scale(&rational(1, 5));
            let mut pts: Vec<Point> = (0..5)
                .map(|i| {
                    let mut c = [0i64; 5];
                    c[i] = 1;
                    Point::from_ints(&c)
                })
                .collect();
            pts.push(p(vec![t; 5]));
            place("ABCDEO", pts)
        }
        Construction::StdOctahedron => {
            // facet FGH = e_1, e_2, e_3; BCD opposite
            let mut pts = Vec::new();
            for sign in [-1, 1] {
                for i in 0..3 {
                    let mut c = [0i64; 3];
                    c[i] = sign;
                    pts.push(Point::from_ints(&c));
                }
            }
            place("BCDFGH", pts)
        }
    })
}

/// Coordinates of `p` in the affine frame `(f₀; f₁ − f₀, …)` of the facet,
/// when `p` lies in its affine hull.
fn frame_coords(facet: &[&Point], p: &Point) -> Option<Vec<QuadExt>> {
    let dirs: Vec<Vec<QuadExt>> = facet[1..].iter().map(|f| f.sub(facet[0])).collect();
    let n = p.dim();
    let m: Vec<Vec<QuadExt>> = (0..n).map(|r| dirs.iter().map(|d| d[r].clone()).collect()).collect();
    match solve_linear(&m, &p.sub(facet[0])).ok()? {
        LinearSolution::Unique(x) => Some(x),
        _ => None,
    }
}

fn facet_points<'a>(points: &'a Placement, facet: &[VertexLabel]) -> Result<Vec<&'a Point>, GeometryError> {
    facet
        .iter()
        .map(|v| points.get(v).ok_or(GeometryError::MissingVertex(*v)))
        .collect()
}

fn facet_side(facet: &[&Point], p: &Point) -> Result<Sign, GeometryError> {
    let mut pts: Vec<Point> = facet.iter().map(|f| (*f).clone()).collect();
    pts.push(p.clone());
    orientation_sign(&pts)
}

/// Default viewpoint: the facet centroid pushed outward along the facet
/// normal by a tenth of the distance from the point set's centroid to the
/// facet hyperplane.
pub fn default_viewpoint(points: &Placement, facet: &[VertexLabel]) -> Result<Point, GeometryError> {
    let fpts = facet_points(points, facet)?;
    let rows: Vec<Vec<QuadExt>> = fpts[1..].iter().map(|f| f.sub(fpts[0])).collect();
    let normal = normal_vector(&rows)?;
    let c = centroid(&fpts);
    let all: Vec<&Point> = points.values().collect();
    let g = centroid(&all);
    let out = c.sub(&g);
    let along = dot(&normal, &out);
    if along.is_zero() {
        return Err(GeometryError::ViewpointOnHyperplane);
    }
    let t = (&along / &dot(&normal, &normal)).scale(&rational(1, 10));
    Ok(c.offset(&scale_vec(&normal, &t)))
}

/// Central projection from `viewpoint` onto the hyperplane spanned by
/// `facet`, in the facet's affine frame coordinates (`n − 1` of them).
pub fn schlegel_project(
    points: &Placement,
    facet: &[VertexLabel],
    viewpoint: &Point,
) -> Result<Placement, GeometryError> {
    let fpts = facet_points(points, facet)?;
    let n = viewpoint.dim();
    if fpts.len() != n {
        return Err(GeometryError::Arity { expected: n, got: fpts.len() });
    }
    if let Some(p) = points.values().find(|p| p.dim() != n) {
        return Err(GeometryError::DimensionMismatch(n, p.dim()));
    }
    let dirs: Vec<Vec<QuadExt>> = fpts[1..].iter().map(|f| f.sub(fpts[0])).collect();
    if rank(&dirs)? < n - 1 {
        return Err(GeometryError::DegenerateFacet);
    }
    let view_side = facet_side(&fpts, viewpoint)?;
    if view_side == Sign::Zero {
        return Err(GeometryError::ViewpointOnHyperplane);
    }
    let mut out = Placement::new();
    for (label, p) in points {
        let side = facet_side(&fpts, p)?;
        if side == view_side {
            return Err(GeometryError::ViewpointNotOutside(*label));
        }
        let coords = if side == Sign::Zero {
            frame_coords(&fpts, p).expect("point on the hyperplane has frame coordinates")
        } else {
            // viewpoint + t·(p − viewpoint) = f₀ + Σ sᵢ·dirᵢ
            let ray = p.sub(viewpoint);
            let m: Vec<Vec<QuadExt>> = (0..n)
                .map(|r| {
                    std::iter::once(ray[r].clone())
                        .chain(dirs.iter().map(|d| -&d[r]))
                        .collect()
                })
                .collect();
            match solve_linear(&m, &fpts[0].sub(viewpoint))? {
                LinearSolution::Unique(x) => x[1..].to_vec(),
                _ => return Err(GeometryError::ParallelLine(*label)),
            }
        };
        out.insert(*label, Point::new(coords)?);
    }
    Ok(out)
}

/// Deletes coordinate `drop_axis` from every point.
pub fn orthogonal_project(points: &Placement, drop_axis: usize) -> Result<Placement, GeometryError> {
    points
        .iter()
        .map(|(k, p)| {
            if drop_axis >= p.dim() {
                return Err(GeometryError::BadAxis { axis: drop_axis, dim: p.dim() });
            }
            let c = p
                .coords()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop_axis)
                .map(|(_, c)| c.clone())
                .collect();
            Ok((*k, Point::new(c)?))
        })
        .collect()
}

/// Squared circumradius of an affinely independent point set (a simplex of
/// any dimension up to the ambient one), with the circumcenter taken in the
/// simplex's affine hull.
pub fn simplex_circumradius_sq(points: &[&Point]) -> Result<Option<QuadExt>, GeometryError> {
    let p0 = points[0];
    let dirs: Vec<Vec<QuadExt>> = points[1..].iter().map(|p| p.sub(p0)).collect();
    if rank(&dirs)? < dirs.len() {
        return Ok(None);
    }
    // center = p0 + Σ λⱼ dirⱼ with 2·dirᵢ·(center − p0) = |dirᵢ|²
    let gram: Vec<Vec<QuadExt>> = dirs
        .iter()
        .map(|di| dirs.iter().map(|dj| dot(di, dj).scale(&rational(2, 1))).collect())
        .collect();
    let rhs: Vec<QuadExt> = dirs.iter().map(|d| dot(d, d)).collect();
    let LinearSolution::Unique(lambda) = solve_linear(&gram, &rhs)? else {
        return Ok(None);
    };
    let mut offset = vec![QuadExt::zero(); p0.dim()];
    for (l, d) in lambda.iter().zip(&dirs) {
        for (o, x) in offset.iter_mut().zip(d) {
            *o = &*o + &(l * x);
        }
    }
    Ok(Some(dot(&offset, &offset)))
}

/// Squared inradius of a tetrahedron in `R³`. Returned only when all four
/// faces have equal area, where the incenter is the centroid and the value
/// stays inside the field.
pub fn tetra_inradius_sq(points: &[&Point]) -> Result<Option<QuadExt>, GeometryError> {
    if points.len() != 4 || points.iter().any(|p| p.dim() != 3) {
        return Err(GeometryError::Arity { expected: 4, got: points.len() });
    }
    let faces = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let normals: Vec<Vec<QuadExt>> = faces
        .iter()
        .map(|f| normal_vector(&[points[f[1]].sub(points[f[0]]), points[f[2]].sub(points[f[0]])]))
        .collect::<Result<_, _>>()?;
    // |n|² is (2·area)²
    let areas: Vec<QuadExt> = normals.iter().map(|n| dot(n, n)).collect();
    if areas.iter().any(|a| a != &areas[0]) || areas[0].is_zero() {
        return Ok(None);
    }
    let g = centroid(points);
    let h = dot(&normals[0], &g.sub(points[faces[0][0]]));
    Ok(Some(&(&h * &h) / &areas[0]))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ShapeCensus {
    pub equilateral: usize,
    pub isosceles: usize,
    pub scalene: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricReport {
    /// Per graph edge, in canonical edge order.
    pub edge_lengths_sq: Vec<(Edge, QuadExt)>,
    /// Distinct squared edge lengths, ascending.
    pub distinct_lengths_sq: Vec<QuadExt>,
    pub census: ShapeCensus,
    /// Present when the vertices form a simplex.
    pub circumradius_sq: Option<QuadExt>,
    /// Present for equifacial tetrahedra in `R³`.
    pub inradius_sq: Option<QuadExt>,
}

pub fn metric_report(g: &GeometricComplex) -> Result<MetricReport, GeometryError> {
    let t = g.triangulation();
    let edge_lengths_sq: Vec<(Edge, QuadExt)> = t
        .graph()
        .edges()
        .map(|e| {
            let [a, b] = e.vertices();
            (e, distance_sq(g.point(a), g.point(b)))
        })
        .collect();
    let mut distinct: Vec<QuadExt> = Vec::new();
    for (_, l) in &edge_lengths_sq {
        if !distinct.contains(l) {
            distinct.push(l.clone());
        }
    }
    distinct.sort_by(|a, b| a.cmp_exact(b).expect("one context"));
    let mut census = ShapeCensus::default();
    for f in t.faces() {
        let [a, b, c] = f.vertices().map(|v| g.point(v));
        let (x, y, z) = (distance_sq(a, b), distance_sq(b, c), distance_sq(a, c));
        let equal_pairs = [x == y, y == z, x == z].iter().filter(|&&e| e).count();
        match equal_pairs {
            3 => census.equilateral += 1,
            1 => census.isosceles += 1,
            _ => census.scalene += 1,
        }
    }
    let pts: Vec<&Point> = t.graph().vertices().iter().map(|v| g.point(*v)).collect();
    let circumradius_sq = if pts.len() <= g.dim() + 1 {
        simplex_circumradius_sq(&pts)?
    } else {
        None
    };
    let inradius_sq = if pts.len() == 4 && g.dim() == 3 {
        tetra_inradius_sq(&pts)?
    } else {
        None
    };
    Ok(MetricReport {
        edge_lengths_sq,
        distinct_lengths_sq: distinct,
        census,
        circumradius_sq,
        inradius_sq,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    StrictInterior,
    Touching,
    Outside,
}

impl fmt::Display for Containment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Containment::StrictInterior => "strict_interior",
            Containment::Touching => "touching",
            Containment::Outside => "outside",
        })
    }
}

/// Where the four `inner` points sit relative to the closed tetrahedron
/// `outer`.
pub fn tetra_containment(outer: &[Point; 4], inner: &[Point; 4]) -> Result<Containment, GeometryError> {
    let faces = [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 3, 1], [1, 2, 3, 0]];
    let mut touching = false;
    for [a, b, c, opp] in faces {
        let tri = [outer[a].clone(), outer[b].clone(), outer[c].clone()];
        let with = |p: &Point| {
            let mut v = tri.to_vec();
            v.push(p.clone());
            orientation_sign(&v)
        };
        let inside = with(&outer[opp])?;
        if inside == Sign::Zero {
            return Err(GeometryError::DegenerateFacet);
        }
        for p in inner {
            match with(p)? {
                Sign::Zero => touching = true,
                s if s != inside => return Ok(Containment::Outside),
                _ => {}
            }
        }
    }
    Ok(if touching { Containment::Touching } else { Containment::StrictInterior })
}

/// Image of `p` under the homothety with center `center` and ratio `ratio`.
pub fn homothety(p: &Point, center: &Point, ratio: &Rational) -> Point {
    let v: Vec<QuadExt> = p.sub(center).iter().map(|x| x.scale(ratio)).collect();
    center.offset(&v)
}

/// Ratio `r` with `b − center = r·(a − center)`, if one exists.
pub fn homothety_ratio(a: &Point, b: &Point, center: &Point) -> Option<QuadExt> {
    let da = a.sub(center);
    let db = b.sub(center);
    let i = da.iter().position(|x| !x.is_zero())?;
    let r = &db[i] / &da[i];
    da.iter().zip(&db).all(|(x, y)| &(x * &r) == y).then_some(r)
}
