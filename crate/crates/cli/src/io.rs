//! File formats: catalog JSON, exact-coordinate JSON, OFF and OBJ.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use surfreal_core::complex::{build_graph, VertexLabel};
use surfreal_core::enumerate::complement_pairing;
use surfreal_core::{
    parse_rational, Catalog, EnumerationTask, FieldContext, GeometricComplex, GraphName, Placement, Point, QuadExt,
    SurfaceName, Triangle, Triangulation,
};

use crate::error::CliError;

/// Significant digits written for each float coordinate.
pub const FLOAT_DIGITS: usize = 17;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub graph: String,
    pub surface: String,
    pub triangulations: Vec<CatalogEntry>,
    pub pairs: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: usize,
    pub faces: Vec<[String; 3]>,
}

pub fn catalog_file(graph: GraphName, surface: SurfaceName, catalog: &Catalog) -> CatalogFile {
    let triangulations = catalog
        .triangulations()
        .iter()
        .enumerate()
        .map(|(id, t)| CatalogEntry {
            id,
            faces: t
                .face_list()
                .iter()
                .map(|f| f.vertices().map(|v| v.to_string()))
                .collect(),
        })
        .collect();
    let pairs = complement_pairing(catalog).pairs.iter().map(|&(i, j)| [i, j]).collect();
    CatalogFile {
        graph: graph.to_string(),
        surface: surface.to_string(),
        triangulations,
        pairs,
    }
}

pub fn catalog_json(graph: GraphName, surface: SurfaceName, catalog: &Catalog) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(&catalog_file(graph, surface, catalog))? + "\n")
}

/// Rebuilds a catalog from its JSON form, re-validating every face set.
pub fn read_catalog(text: &str) -> Result<(GraphName, SurfaceName, Catalog), CliError> {
    let file: CatalogFile = serde_json::from_str(text)?;
    let graph: GraphName = file.graph.parse()?;
    let surface: SurfaceName = file.surface.parse()?;
    let g = build_graph(graph);
    let mut ts = Vec::new();
    for entry in &file.triangulations {
        let faces = entry
            .faces
            .iter()
            .map(|[a, b, c]| Triangle::new(a.parse()?, b.parse()?, c.parse()?))
            .collect::<Result<Vec<_>, _>>()?;
        ts.push(Triangulation::new(g.clone(), faces)?);
    }
    let task = EnumerationTask::for_surface(g, surface)?;
    Ok((graph, surface, Catalog::from_parts(task, ts)))
}

/// Lossless form of a field element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    pub a: String,
    pub b: String,
    pub c: String,
    pub e: String,
    pub d1: u64,
    pub d2: u64,
}

impl ExactValue {
    pub fn from_value(x: &QuadExt) -> ExactValue {
        let [a, b, c, e] = x.coefficients().map(|r| r.to_string());
        let ctx = x.context();
        ExactValue {
            a,
            b,
            c,
            e,
            d1: ctx.d1(),
            d2: ctx.d2(),
        }
    }

    pub fn to_value(&self) -> Result<QuadExt, CliError> {
        let ctx = FieldContext::new(self.d1, self.d2)?;
        Ok(QuadExt::new(
            parse_rational(&self.a)?,
            parse_rational(&self.b)?,
            parse_rational(&self.c)?,
            parse_rational(&self.e)?,
            ctx,
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordinateFile {
    pub construction: String,
    pub k: Option<String>,
    pub dim: usize,
    pub vertices: BTreeMap<String, Vec<ExactValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<[String; 3]>>,
}

pub fn coordinate_file(construction: &str, k: Option<String>, placement: &Placement, faces: Option<&[Triangle]>) -> CoordinateFile {
    CoordinateFile {
        construction: construction.to_string(),
        k,
        dim: placement.values().next().map_or(0, Point::dim),
        vertices: placement
            .iter()
            .map(|(l, p)| (l.to_string(), p.coords().iter().map(ExactValue::from_value).collect()))
            .collect(),
        faces: faces.map(|fs| fs.iter().map(|f| f.vertices().map(|v| v.to_string())).collect()),
    }
}

pub fn read_coordinates(file: &CoordinateFile) -> Result<Placement, CliError> {
    file.vertices
        .iter()
        .map(|(l, cs)| {
            let label: VertexLabel = l.parse()?;
            let coords = cs.iter().map(ExactValue::to_value).collect::<Result<Vec<_>, _>>()?;
            Ok((label, Point::new(coords)?))
        })
        .collect()
}

fn float_coords(p: &Point) -> String {
    p.coords()
        .iter()
        .map(|c| c.to_decimal_string(FLOAT_DIGITS))
        .collect::<Vec<_>>()
        .join(" ")
}

fn vertex_order(g: &GeometricComplex) -> Vec<VertexLabel> {
    g.triangulation().graph().vertices().to_vec()
}

fn face_indices(g: &GeometricComplex, f: Triangle) -> [usize; 3] {
    let order = vertex_order(g);
    f.vertices().map(|v| order.iter().position(|u| *u == v).expect("face vertex in graph"))
}

fn require_3d(g: &GeometricComplex) -> Result<(), CliError> {
    if g.dim() != 3 {
        return Err(CliError::Usage(format!(
            "mesh export needs points in 3-space, got dimension {}; project first or export json",
            g.dim()
        )));
    }
    Ok(())
}

/// OFF text: header, `V F E`, vertex lines in graph order, `3 i j k` faces.
pub fn write_off(g: &GeometricComplex) -> Result<String, CliError> {
    require_3d(g)?;
    let t = g.triangulation();
    let mut s = String::from("OFF\n");
    writeln!(s, "{} {} {}", t.graph().vertices().len(), t.face_count(), t.graph().edge_count()).unwrap();
    for v in vertex_order(g) {
        writeln!(s, "{}", float_coords(g.point(v))).unwrap();
    }
    for f in t.faces() {
        let [i, j, k] = face_indices(g, f);
        writeln!(s, "3 {i} {j} {k}").unwrap();
    }
    Ok(s)
}

/// OBJ text with one-based face indices.
pub fn write_obj(g: &GeometricComplex) -> Result<String, CliError> {
    require_3d(g)?;
    let t = g.triangulation();
    let mut s = String::new();
    for v in vertex_order(g) {
        writeln!(s, "v {}", float_coords(g.point(v))).unwrap();
    }
    for f in t.faces() {
        let [i, j, k] = face_indices(g, f);
        writeln!(s, "f {} {} {}", i + 1, j + 1, k + 1).unwrap();
    }
    Ok(s)
}

/// Parses the face lines of an OFF file back into index triples.
pub fn read_off_faces(text: &str) -> Result<(usize, Vec<[usize; 3]>), CliError> {
    let bad = || CliError::Usage("malformed OFF".into());
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    if lines.next() != Some("OFF") {
        return Err(bad());
    }
    let counts: Vec<usize> = lines
        .next()
        .ok_or_else(bad)?
        .split_whitespace()
        .map(|x| x.parse().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let (nv, nf) = (*counts.first().ok_or_else(bad)?, *counts.get(1).ok_or_else(bad)?);
    let mut lines = lines.skip(nv);
    let mut faces = Vec::new();
    for _ in 0..nf {
        let nums: Vec<usize> = lines
            .next()
            .ok_or_else(bad)?
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        if nums.len() != 4 || nums[0] != 3 {
            return Err(bad());
        }
        faces.push([nums[1], nums[2], nums[3]]);
    }
    Ok((nv, faces))
}
