//! Command implementations. Each returns its stdout text, exit code and the
//! files to write; `main` performs the writes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use surfreal_core::complex::{enumerate_cliques3, labels};
use surfreal_core::geometry::{
    default_viewpoint, distance_sq, metric_report, orthogonal_project, schlegel_project, simplex_circumradius_sq,
    tetra_inradius_sq,
};
use surfreal_core::{
    build_graph, complement_pairing, construction_coords, enumerate_triangulations, parse_rational, verify_embedding,
    Catalog, Construction, EmbeddingReport, EnumerationTask, GeometricComplex, GraphName, Placement, Point, QuadExt,
    RealizationParams, Rational, SurfaceName, Triangulation,
};

use crate::error::CliError;
use crate::io;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_EXPECTATION: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
    pub files: Vec<(PathBuf, String)>,
}

impl Output {
    fn new(stdout: String, code: u8) -> Output {
        Output {
            stdout,
            code,
            files: Vec::new(),
        }
    }

    fn with_file(mut self, path: Option<&PathBuf>, content: String) -> Output {
        if let Some(p) = path {
            self.files.push((p.clone(), content));
        }
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Off,
    Obj,
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Format, CliError> {
        match s.to_ascii_lowercase().as_str() {
            "off" => Ok(Format::Off),
            "obj" => Ok(Format::Obj),
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(CliError::Usage(format!("unknown format {s:?}"))),
        }
    }
}

/// Exact parse of `p/q`, an integer or a decimal.
pub fn parse_k(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|_| CliError::Usage(format!("k must be a rational like 14/5 or 2.8, got {s:?}")))
}

/// `x`, `y`, `z`, `w` or a zero-based index.
pub fn parse_axis(s: &str) -> Result<usize, CliError> {
    match s {
        "x" => Ok(0),
        "y" => Ok(1),
        "z" => Ok(2),
        "w" => Ok(3),
        _ => s.parse().map_err(|_| CliError::Usage(format!("bad axis {s:?}"))),
    }
}

pub fn catalog_for(graph: GraphName, surface: SurfaceName) -> Result<Catalog, CliError> {
    Ok(enumerate_triangulations(&EnumerationTask::for_surface(build_graph(graph), surface)?))
}

/// Which point set to use, and how to transform it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SceneSpec {
    pub construction: Construction,
    pub k: Option<Rational>,
    pub drop_axis: Option<usize>,
    pub schlegel_facet: Option<String>,
    pub restrict: Option<String>,
}

impl SceneSpec {
    pub fn new(construction: Construction) -> SceneSpec {
        SceneSpec {
            construction,
            k: None,
            drop_axis: None,
            schlegel_facet: None,
            restrict: None,
        }
    }

    pub fn with_k(mut self, k: Rational) -> SceneSpec {
        self.k = Some(k);
        self
    }

    /// `k` as given, or the construction's default.
    pub fn effective_k(&self) -> Option<Rational> {
        self.construction.k_bound()?;
        self.k.clone().or_else(|| self.construction.default_k())
    }

    pub fn placement(&self) -> Result<Placement, CliError> {
        let params = self.effective_k().map(RealizationParams::new);
        let mut p = construction_coords(self.construction, params.as_ref())?;
        if let Some(facet) = &self.schlegel_facet {
            let facet = labels(facet);
            let view = default_viewpoint(&p, &facet)?;
            p = schlegel_project(&p, &facet, &view)?;
        }
        if let Some(axis) = self.drop_axis {
            p = orthogonal_project(&p, axis)?;
        }
        if let Some(keep) = &self.restrict {
            let keep = labels(keep);
            p.retain(|l, _| keep.contains(l));
        }
        Ok(p)
    }

    pub fn triangulation(&self, t: &Triangulation) -> Result<Triangulation, CliError> {
        match &self.restrict {
            Some(keep) => Ok(t.restrict(&labels(keep))?),
            None => Ok(t.clone()),
        }
    }

    pub fn catalog(&self) -> Result<Catalog, CliError> {
        catalog_for(self.construction.graph(), self.construction.surface())
    }

    pub fn describe(&self) -> String {
        let mut s = self.construction.to_string();
        if let Some(k) = self.effective_k() {
            write!(s, " k={k}").unwrap();
        }
        if let Some(f) = &self.schlegel_facet {
            write!(s, " schlegel-facet={f}").unwrap();
        }
        if let Some(a) = self.drop_axis {
            write!(s, " drop-axis={a}").unwrap();
        }
        if let Some(r) = &self.restrict {
            write!(s, " restrict={r}").unwrap();
        }
        s
    }
}

pub fn selected_ids(catalog: &Catalog, id: Option<usize>) -> Result<Vec<usize>, CliError> {
    match id {
        Some(i) if i < catalog.len() => Ok(vec![i]),
        Some(i) => Err(CliError::Usage(format!("no triangulation {i}; the catalog has {}", catalog.len()))),
        None => Ok((0..catalog.len()).collect()),
    }
}

pub fn enumerate(graph: GraphName, surface: SurfaceName, expect: Option<usize>, out: Option<&PathBuf>) -> Result<Output, CliError> {
    let catalog = catalog_for(graph, surface)?;
    let mut text = format!("{} triangulations\n", catalog.len());
    let code = match expect {
        Some(n) if n != catalog.len() => {
            writeln!(text, "expected {n}").unwrap();
            EXIT_EXPECTATION
        }
        _ => EXIT_OK,
    };
    let json = io::catalog_json(graph, surface, &catalog)?;
    Ok(Output::new(text, code).with_file(out, json))
}

pub fn pairs(graph: GraphName, surface: SurfaceName) -> Result<Output, CliError> {
    let catalog = catalog_for(graph, surface)?;
    let pairing = complement_pairing(&catalog);
    let total = enumerate_cliques3(&build_graph(graph)).len();
    let mut text = String::new();
    let mut ok = pairing.leftovers.is_empty();
    for &(i, j) in &pairing.pairs {
        let a = catalog.triangulations()[i].face_list();
        let b = catalog.triangulations()[j].face_list();
        let common = a.iter().filter(|f| b.contains(f)).count();
        let union = a.len() + b.len() - common;
        ok &= common == 0 && union == total;
        writeln!(text, "pair {i} {j}: common faces {common}, union {union}/{total}").unwrap();
    }
    writeln!(text, "{} pairs, {} unpaired", pairing.pairs.len(), pairing.leftovers.len()).unwrap();
    Ok(Output::new(text, if ok { EXIT_OK } else { EXIT_EXPECTATION }))
}

/// Embedding reports for the selected triangulations, in ID order.
pub fn run_verification(spec: &SceneSpec, id: Option<usize>) -> Result<Vec<(usize, EmbeddingReport)>, CliError> {
    let catalog = spec.catalog()?;
    let placement = spec.placement()?;
    selected_ids(&catalog, id)?
        .into_iter()
        .map(|i| {
            let t = spec.triangulation(&catalog.triangulations()[i])?;
            let g = GeometricComplex::new(t, &placement)?;
            Ok((i, verify_embedding(&g)?))
        })
        .collect()
}

pub fn violation_summary(r: &EmbeddingReport) -> String {
    let mut kinds: BTreeMap<&str, usize> = BTreeMap::new();
    for v in &r.violations {
        *kinds.entry(v.violation.as_ref().expect("violating pair").kind.as_str()).or_default() += 1;
    }
    kinds.iter().map(|(k, n)| format!("{k}x{n}")).collect::<Vec<_>>().join(" ")
}

#[derive(serde::Serialize)]
struct VerifyJson {
    scene: String,
    results: Vec<VerifyEntry>,
}

#[derive(serde::Serialize)]
struct VerifyEntry {
    id: usize,
    embedded: bool,
    pairs_checked: usize,
    violations: Vec<String>,
}

pub fn verify(spec: &SceneSpec, id: Option<usize>, details: bool, out: Option<&PathBuf>) -> Result<Output, CliError> {
    let results = run_verification(spec, id)?;
    let dim = spec.placement()?.values().next().map_or(0, Point::dim);
    let mut text = format!("{} dim={dim}\n", spec.describe());
    for (i, r) in &results {
        let verdict = if r.embedded() { "PASS" } else { "FAIL" };
        writeln!(text, "{i:>3} {verdict} pairs={} violations={} {}", r.pairs_checked, r.violations.len(), violation_summary(r))
            .unwrap();
        if details {
            for v in &r.violations {
                writeln!(text, "      {v}").unwrap();
            }
        }
    }
    let passed = results.iter().filter(|(_, r)| r.embedded()).count();
    writeln!(text, "{passed}/{} embedded", results.len()).unwrap();
    let json = VerifyJson {
        scene: spec.describe(),
        results: results
            .iter()
            .map(|(i, r)| VerifyEntry {
                id: *i,
                embedded: r.embedded(),
                pairs_checked: r.pairs_checked,
                violations: r.violations.iter().map(|v| v.to_string()).collect(),
            })
            .collect(),
    };
    let code = if passed == results.len() { EXIT_OK } else { EXIT_VERIFY };
    Ok(Output::new(text, code).with_file(out, serde_json::to_string_pretty(&json)? + "\n"))
}

pub fn export(spec: &SceneSpec, id: usize, format: Format, out: Option<&PathBuf>) -> Result<Output, CliError> {
    let catalog = spec.catalog()?;
    let i = selected_ids(&catalog, Some(id))?[0];
    let t = spec.triangulation(&catalog.triangulations()[i])?;
    let placement = spec.placement()?;
    let g = GeometricComplex::new(t, &placement)?;
    let content = match format {
        Format::Off => io::write_off(&g)?,
        Format::Obj => io::write_obj(&g)?,
        Format::Json | Format::Text => {
            let faces = g.triangulation().face_list();
            let file = io::coordinate_file(
                spec.construction.as_str(),
                spec.effective_k().map(|k| k.to_string()),
                g.placement(),
                Some(&faces),
            );
            serde_json::to_string_pretty(&file)? + "\n"
        }
    };
    let stdout = if out.is_some() { format!("{} triangulation {i}\n", spec.describe()) } else { content.clone() };
    Ok(Output::new(stdout, EXIT_OK).with_file(out, content))
}

fn pairwise(points: &[(char, &Point)]) -> BTreeMap<String, Vec<String>> {
    let mut by_len: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut lens: Vec<(QuadExt, String)> = Vec::new();
    for (i, (a, p)) in points.iter().enumerate() {
        for (b, q) in &points[i + 1..] {
            lens.push((distance_sq(p, q), format!("{a}{b}")));
        }
    }
    for (l, name) in lens {
        by_len.entry(l.to_string()).or_default().push(name);
    }
    by_len
}

pub fn metrics(spec: &SceneSpec, subset: Option<&str>, id: Option<usize>) -> Result<Output, CliError> {
    let placement = spec.placement()?;
    let chosen: Vec<(char, &Point)> = placement
        .iter()
        .filter(|(l, _)| subset.is_none_or(|s| s.contains(l.as_char())))
        .map(|(l, p)| (l.as_char(), p))
        .collect();
    let mut text = format!("{}\n", spec.describe());
    let origin = Point::origin(chosen.first().map_or(0, |c| c.1.dim()));
    for (l, p) in &chosen {
        writeln!(text, "|{l}|^2 = {}", distance_sq(p, &origin)).unwrap();
    }
    for (len, names) in pairwise(&chosen) {
        writeln!(text, "d^2 = {len}: {}", names.join(" ")).unwrap();
    }
    let pts: Vec<&Point> = chosen.iter().map(|c| c.1).collect();
    if pts.len() >= 2 && pts.len() <= pts[0].dim() + 1 {
        if let Some(r) = simplex_circumradius_sq(&pts)? {
            writeln!(text, "circumradius^2 = {r}").unwrap();
        }
        if pts.len() == 4 && pts[0].dim() == 3 {
            if let Some(r) = tetra_inradius_sq(&pts)? {
                writeln!(text, "inradius^2 = {r}").unwrap();
            }
        }
    }
    if let Some(i) = id {
        let catalog = spec.catalog()?;
        let i = selected_ids(&catalog, Some(i))?[0];
        let g = GeometricComplex::new(spec.triangulation(&catalog.triangulations()[i])?, &placement)?;
        let m = metric_report(&g)?;
        let lens = m.distinct_lengths_sq.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        writeln!(text, "triangulation {i}: edge lengths^2 {{{lens}}}").unwrap();
        writeln!(
            text,
            "census: {} equilateral, {} isosceles, {} scalene",
            m.census.equilateral, m.census.isosceles, m.census.scalene
        )
        .unwrap();
    }
    Ok(Output::new(text, EXIT_OK))
}
