//! Simplicial complexes, chains, links, cones and staircase products.

mod chain;
#[allow(clippy::module_inception)]
mod complex;
mod homology;
mod io;
mod product;
mod simplex;

pub use chain::Chain;
pub use complex::{build_cone, build_suspension, SimplicialComplex};
pub use homology::{is_acyclic, is_homology_sphere, simplicial_homology};
pub use io::{load_complex, parse_complex_file, write_complex_file, ComplexFile};
pub use product::{product_size, product_staircase, staircase_count, ProductComplex};
pub use simplex::{Simplex, Vertex};

pub(crate) use simplex::{count_in, delete, is_subset};
