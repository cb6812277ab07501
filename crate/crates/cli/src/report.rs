//! The full reproduction run: every catalog, pairing, realization, metric
//! and threshold check, one tagged line each.

use std::fmt::Write as _;

use serde::Serialize;
use surfreal_core::complex::{enumerate_cliques3, labels};
use surfreal_core::geometry::{
    centroid, distance_sq, homothety, homothety_ratio, metric_report, simplex_circumradius_sq, tetra_containment,
    tetra_inradius_sq, Containment, ShapeCensus,
};
use surfreal_core::numeric::rational;
use surfreal_core::verify::cross_pair_violations;
use surfreal_core::{
    build_graph, complement_pairing, classify_surface, Construction, GeometricComplex, GraphName, Point, QuadExt,
    SurfaceName, Triangle, ViolationKind,
};

use crate::commands::{catalog_for, run_verification, SceneSpec};
use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub tag: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    /// Measured facts that differ from the commonly quoted statement.
    pub notes: Vec<String>,
}

impl Report {
    fn check(&mut self, tag: &str, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            tag: tag.to_string(),
            ok,
            detail: detail.into(),
        });
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn find(&self, tag: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.tag == tag)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            writeln!(s, "[{}] {} {}", c.tag, if c.ok { "PASS" } else { "FAIL" }, c.detail).unwrap();
        }
        for n in &self.notes {
            writeln!(s, "note: {n}").unwrap();
        }
        let passed = self.checks.iter().filter(|c| c.ok).count();
        writeln!(s, "{passed}/{} checks passed", self.checks.len()).unwrap();
        s
    }
}

const SURFACES: [(GraphName, SurfaceName, &str); 3] = [
    (GraphName::K2222, SurfaceName::Torus, "torus"),
    (GraphName::K6, SurfaceName::ProjectivePlane, "projective-plane"),
    (GraphName::K5, SurfaceName::MoebiusBand, "moebius"),
];

fn embedded_count(spec: &SceneSpec) -> Result<(usize, usize), CliError> {
    let r = run_verification(spec, None)?;
    Ok((r.iter().filter(|(_, r)| r.embedded()).count(), r.len()))
}

pub fn build_report() -> Result<Report, CliError> {
    let mut rep = Report::default();

    for (graph, surface, name) in SURFACES {
        let catalog = catalog_for(graph, surface)?;
        rep.check(
            &format!("count-{name}"),
            catalog.len() == 12,
            format!("{graph}/{surface}: {} triangulations", catalog.len()),
        );
        let pairing = complement_pairing(&catalog);
        let total = enumerate_cliques3(&build_graph(graph)).len();
        let disjoint = pairing.pairs.iter().all(|&(i, j)| {
            let a = catalog.triangulations()[i].face_list();
            let b = catalog.triangulations()[j].face_list();
            !a.iter().any(|f| b.contains(f)) && a.len() + b.len() == total
        });
        rep.check(
            &format!("pairs-{name}"),
            pairing.pairs.len() == 6 && pairing.leftovers.is_empty() && disjoint,
            format!(
                "{} complementary pairs, {} unpaired, face-disjoint with union {total}: {}",
                pairing.pairs.len(),
                pairing.leftovers.len(),
                if disjoint { "yes" } else { "no" }
            ),
        );
    }

    let sphere = catalog_for(GraphName::Octahedron, SurfaceName::Sphere)?;
    rep.check(
        "count-octahedron-sphere",
        sphere.len() == 1,
        format!("octahedron/sphere: {} triangulation", sphere.len()),
    );

    let schlegel = SceneSpec::new(Construction::Schlegel16Cell).with_k(rational(4, 1));
    let (ok, n) = embedded_count(&schlegel)?;
    rep.check("torus-schlegel16cell", ok == n && n == 12, format!("k=4: {ok}/{n} embedded in 3-space"));

    let tori = catalog_for(GraphName::K2222, SurfaceName::Torus)?;
    let placement = schlegel.placement()?;
    let mut cross = 0;
    for &(i, j) in &complement_pairing(&tori).pairs {
        let a = &tori.triangulations()[i];
        let b = &tori.triangulations()[j];
        let g = GeometricComplex::new(a.clone(), &placement)?;
        cross += cross_pair_violations(&g, &a.face_list(), &b.face_list())?.len();
    }
    rep.check(
        "torus-pairs-meet-in-skeleton",
        cross == 0,
        format!("k=4: complementary pairs meet only in the common 1-skeleton, {cross} violating cross pairs"),
    );

    suspension_checks(&mut rep)?;

    let hyper = SceneSpec {
        schlegel_facet: Some("ABCD".into()),
        ..SceneSpec::new(Construction::StdHyperoctahedron)
    };
    let (ok, n) = embedded_count(&hyper)?;
    rep.check(
        "torus-projected-16cell",
        ok == n && n == 12,
        format!("unit 16-cell projected from facet ABCD: {ok}/{n} embedded in 3-space"),
    );

    let rp2 = SceneSpec::new(Construction::Rp2Simplex);
    let (ok, n) = embedded_count(&rp2)?;
    rep.check("rp2-simplex-4space", ok == n && n == 12, format!("{ok}/{n} embedded in 4-space"));
    let s5 = SceneSpec::new(Construction::StdSimplex5);
    let (ok, n) = embedded_count(&s5)?;
    rep.check("rp2-regular-5simplex", ok == n && n == 12, format!("{ok}/{n} embedded in 5-space"));

    let moebius = SceneSpec::new(Construction::Moebius);
    let (ok, n) = embedded_count(&moebius)?;
    rep.check("moebius-integer-points", ok == n && n == 12, format!("{ok}/{n} embedded in 3-space"));
    moebius_subcomplex_checks(&mut rep)?;

    metric_checks(&mut rep)?;
    threshold_checks(&mut rep)?;
    Ok(rep)
}

fn suspension_checks(rep: &mut Report) -> Result<(), CliError> {
    let spec = SceneSpec::new(Construction::Suspension).with_k(rational(14, 5));
    let results = run_verification(&spec, None)?;
    let tori = spec.catalog()?;
    let fgh = Triangle::parse("FGH")?;
    let ok: Vec<bool> = results.iter().map(|(_, r)| r.embedded()).collect();
    let passed = ok.iter().filter(|e| **e).count();
    let pairing = complement_pairing(&tori);
    let one_per_pair = pairing.pairs.iter().all(|&(i, j)| ok[i] != ok[j]);
    let failing_hit_fgh = results.iter().filter(|(_, r)| !r.embedded()).all(|(_, r)| {
        r.violations.iter().any(|v| {
            (v.faces.0 == fgh || v.faces.1 == fgh)
                && matches!(
                    v.violation.as_ref().map(|x| x.kind),
                    Some(ViolationKind::Containment | ViolationKind::CoplanarOverlap)
                )
        })
    });
    let with_fgh = tori.triangulations().iter().filter(|t| t.contains_face(fgh)).count();
    let fails_iff_fgh = results
        .iter()
        .all(|(i, r)| r.embedded() != tori.triangulations()[*i].contains_face(fgh));
    rep.check(
        "suspension-one-per-pair",
        one_per_pair && failing_hit_fgh && fails_iff_fgh,
        format!(
            "k=14/5: {passed}/{} embedded, exactly one of each complementary pair; a torus fails iff it has face FGH ({with_fgh} do), always by containment or coplanar overlap with FGH",
            ok.len()
        ),
    );
    let mut listed = Vec::new();
    if let Some((i, r)) = results.iter().find(|(_, r)| !r.embedded()) {
        for v in &r.violations {
            let kind = v.violation.as_ref().map(|x| x.kind);
            if matches!(kind, Some(ViolationKind::Containment)) {
                let other = if v.faces.0 == fgh { v.faces.1 } else { v.faces.0 };
                listed.push(other.to_string());
            }
        }
        rep.notes.push(format!(
            "suspension k=14/5, torus {i}: faces lying within FGH: {}",
            listed.join(" ")
        ));
    }
    rep.notes.push(format!(
        "suspension k=14/5 embeds {passed} of 12 tori: every torus without face FGH embeds"
    ));
    Ok(())
}

fn moebius_subcomplex_checks(rep: &mut Report) -> Result<(), CliError> {
    let rp2 = catalog_for(GraphName::K6, SurfaceName::ProjectivePlane)?;
    let bands = catalog_for(GraphName::K5, SurfaceName::MoebiusBand)?;
    let spec = SceneSpec {
        drop_axis: Some(3),
        restrict: Some("ABCDE".into()),
        ..SceneSpec::new(Construction::Rp2Simplex)
    };
    let placement = spec.placement()?;
    let direct = SceneSpec::new(Construction::Moebius).placement()?;
    let mut fine = placement == direct;
    for t in rp2.triangulations() {
        let sub = t.restrict(&labels("ABCDE"))?;
        let class = classify_surface(&sub);
        fine &= class.name == SurfaceName::MoebiusBand && bands.id_of(&sub).is_some();
    }
    rep.check(
        "moebius-from-rp2-projection",
        fine,
        "dropping w from the 4-space points gives the integer points; deleting O from each projective plane leaves a cataloged Moebius band",
    );
    let total = enumerate_cliques3(&build_graph(GraphName::K5)).len();
    let pairing = complement_pairing(&bands);
    let mut pair_ok = pairing.pairs.len() == 6;
    for &(i, j) in &pairing.pairs {
        let a = &bands.triangulations()[i];
        let b = &bands.triangulations()[j];
        let g = GeometricComplex::new(a.clone(), &direct)?;
        pair_ok &= a.face_count() + b.face_count() == total
            && cross_pair_violations(&g, &a.face_list(), &b.face_list())?.is_empty();
    }
    rep.check(
        "moebius-pairs-fill-4simplex",
        pair_ok,
        format!("each complementary pair of bands splits the {total} triangles of K5 and meets only in the 1-skeleton"),
    );
    Ok(())
}

fn metric_checks(rep: &mut Report) -> Result<(), CliError> {
    let p = SceneSpec::new(Construction::Schlegel16Cell).with_k(rational(4, 1)).placement()?;
    let outer: Vec<&Point> = labels("ABCD").iter().map(|l| &p[l]).collect();
    let edges: Vec<QuadExt> = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .map(|(i, j)| distance_sq(outer[i], outer[j]))
        .collect();
    let circ = simplex_circumradius_sq(&outer)?;
    let inr = tetra_inradius_sq(&outer)?;
    let int = QuadExt::from_int;
    rep.check(
        "outer-tetrahedron-radii",
        edges.iter().all(|e| e == &int(24)) && circ == Some(int(9)) && inr == Some(int(1)),
        format!(
            "edge^2 = {}, circumradius^2 = {}, inradius^2 = {}",
            edges[0],
            circ.map_or("none".into(), |x| x.to_string()),
            inr.map_or("none".into(), |x| x.to_string())
        ),
    );

    let o = Point::origin(3);
    let inner_ok = [('A', 'E'), ('B', 'F'), ('C', 'G'), ('D', 'H')]
        .iter()
        .all(|(a, b)| homothety(&p[&labels(&a.to_string())[0]], &o, &rational(-1, 4)) == p[&labels(&b.to_string())[0]]);
    rep.check("inner-tetrahedron-homothety", inner_ok, "x -> -x/4 maps A, B, C, D onto E, F, G, H");

    let s = SceneSpec::new(Construction::Suspension).with_k(rational(14, 5)).placement()?;
    let plane = |c: &str| -> Vec<Point> {
        labels(c)
            .iter()
            .map(|l| Point::new(s[l].coords()[..2].to_vec()).expect("one field"))
            .collect()
    };
    let center_ok = ["BCD", "FGH"].iter().all(|t| {
        let pts = plane(t);
        let refs: Vec<&Point> = pts.iter().collect();
        centroid(&refs) == Point::origin(2)
            && pts.iter().all(|q| distance_sq(q, &Point::origin(2)) == distance_sq(&pts[0], &Point::origin(2)))
    });
    let ratio_ok = [("F", "B"), ("G", "C"), ("H", "D")].iter().all(|(a, b)| {
        homothety_ratio(&s[&labels(a)[0]], &s[&labels(b)[0]], &Point::origin(3)) == Some(QuadExt::from(rational(-5, 14)))
    });
    rep.check(
        "suspension-homothety-center",
        center_ok && ratio_ok,
        "BCD and FGH share the circumcenter at the origin; x -> -5x/14 maps F, G, H onto B, C, D",
    );

    let r = SceneSpec::new(Construction::Rp2Simplex).placement()?;
    let five: Vec<&Point> = labels("ABCDE").iter().map(|l| &r[l]).collect();
    let o4 = &r[&labels("O")[0]];
    let mut dist_ok = true;
    for i in 0..5 {
        dist_ok &= distance_sq(five[i], o4) == QuadExt::from(rational(16, 5));
        for j in i + 1..5 {
            dist_ok &= distance_sq(five[i], five[j]) == int(8);
        }
    }
    rep.check(
        "rp2-simplex-distances",
        dist_ok && simplex_circumradius_sq(&five)? == Some(QuadExt::from(rational(16, 5))),
        "all 10 squared distances are 8; all 5 squared norms and the circumradius^2 are 16/5",
    );

    let bands = catalog_for(GraphName::K5, SurfaceName::MoebiusBand)?;
    let m = SceneSpec::new(Construction::Moebius).placement()?;
    let mut census_ok = true;
    for t in bands.triangulations() {
        let rep_m = metric_report(&GeometricComplex::new(t.clone(), &m)?)?;
        census_ok &= rep_m.distinct_lengths_sq == vec![int(3), int(8)]
            && rep_m.census == ShapeCensus { equilateral: 2, isosceles: 3, scalene: 0 };
    }
    rep.check(
        "moebius-census",
        census_ok,
        "every band: squared edge lengths {3, 8}; 2 equilateral and 3 isosceles faces",
    );

    let oct = SceneSpec {
        schlegel_facet: Some("FGH".into()),
        ..SceneSpec::new(Construction::StdOctahedron)
    }
    .placement()?;
    let outer: Vec<&Point> = labels("FGH").iter().map(|l| &oct[l]).collect();
    let c = centroid(&outer);
    let ratios: Vec<Option<QuadExt>> = [("F", "B"), ("G", "C"), ("H", "D")]
        .iter()
        .map(|(a, b)| homothety_ratio(&oct[&labels(a)[0]], &oct[&labels(b)[0]], &c))
        .collect();
    let ratio = ratios[0].clone();
    let neg = ratio.as_ref().is_some_and(|r| r.sign() == surfreal_core::Sign::Negative);
    rep.check(
        "octahedron-diagram-homothety",
        ratios.iter().all(|r| r == &ratio) && neg,
        format!(
            "projected inner triangle is the outer one scaled by {}",
            ratio.map_or("none".into(), |r| r.to_string())
        ),
    );
    Ok(())
}

fn threshold_checks(rep: &mut Report) -> Result<(), CliError> {
    let p = SceneSpec::new(Construction::Schlegel16Cell).with_k(rational(4, 1)).placement()?;
    let outer: [Point; 4] = labels("ABCD").iter().map(|l| p[l].clone()).collect::<Vec<_>>().try_into().expect("four");
    let o = Point::origin(3);
    let mut line = Vec::new();
    let mut ok = true;
    for (k, want) in [
        ((2, 1), Containment::Outside),
        ((5, 2), Containment::Outside),
        ((3, 1), Containment::Touching),
        ((7, 2), Containment::StrictInterior),
        ((4, 1), Containment::StrictInterior),
    ] {
        let kr = rational(k.0, k.1);
        let inner = outer.clone().map(|q| homothety(&q, &o, &-kr.recip()));
        let got = tetra_containment(&outer, &inner)?;
        ok &= got == want;
        line.push(format!("k={kr}: {got}"));
    }
    rep.check("k-threshold", ok, line.join(", "));
    Ok(())
}
