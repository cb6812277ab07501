//! Exact enumeration, geometric realization, and embedding certification for
//! small vertex-labeled surface triangulations: the torus on `K_{2,2,2,2}`,
//! the projective plane on `K_6`, and the Möbius band on `K_5`.

pub mod numeric;
pub mod complex;
pub mod enumerate;
pub mod geometry;
pub mod verify;

pub use complex::{
    build_graph, classify_surface, GraphName, LabeledGraph, SurfaceClass, SurfaceName, Triangle, Triangulation,
    VertexLabel,
};
pub use enumerate::{complement_pairing, enumerate_triangulations, Catalog, EnumerationMode, EnumerationTask, Pairing};
pub use geometry::{construction_coords, Construction, GeometricComplex, GeometryError, Placement, Point, RealizationParams};
pub use numeric::{parse_rational, FieldContext, QuadExt, Rational, Sign};
pub use verify::{verify_embedding, EmbeddingReport, PairVerdict, ViolationKind};
