//! Small example complexes, also shipped as JSON files under `zoo/`.

mod rp3_data;

use crate::complex::{product_staircase, ComplexFile, SimplicialComplex, Vertex};
use crate::pseudomanifold::orient;

pub const NAMES: [&str; 15] = [
    "s2",
    "s3",
    "rp2",
    "t2",
    "rp3",
    "pinched_torus",
    "pinched_torus_user",
    "sigma_t2",
    "sigma_rp3",
    "cp2",
    "s2xs2",
    "pinched_torus_x_interval",
    "wedge_of_triangles",
    "delta3",
    "pinched_torus_extra_point",
];

fn named(name: &str, facets: Vec<Vec<Vertex>>) -> SimplicialComplex {
    SimplicialComplex::from_facets(name, facets).expect("zoo complexes are valid")
}

fn renamed(mut k: SimplicialComplex, name: &str) -> SimplicialComplex {
    k.set_name(name);
    k
}

/// The n-sphere as the boundary of the (n+1)-simplex.
pub fn sphere(n: usize) -> SimplicialComplex {
    let all: Vec<Vertex> = (0..=n as Vertex + 1).collect();
    let facets = (0..all.len()).map(|i| crate::complex::delete(&all, i)).collect();
    named(&format!("s{n}"), facets)
}

pub fn simplex(n: usize) -> SimplicialComplex {
    named(&format!("delta{n}"), vec![(0..=n as Vertex).collect()])
}

/// 6-vertex projective plane.
pub fn rp2() -> SimplicialComplex {
    let f = [
        [0, 1, 3], [0, 1, 4], [0, 2, 3], [0, 2, 5], [0, 4, 5],
        [1, 2, 4], [1, 2, 5], [1, 3, 5], [2, 3, 4], [3, 4, 5],
    ];
    named("rp2", f.iter().map(|s| s.to_vec()).collect())
}

/// 7-vertex torus.
pub fn torus() -> SimplicialComplex {
    let facets = (0..7u32)
        .flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]])
        .collect();
    named("t2", facets)
}

pub fn rp3() -> SimplicialComplex {
    named("rp3", rp3_data::RP3_FACETS.iter().map(|s| s.to_vec()).collect())
}

/// Torus with a meridian circle collapsed to the point 0: a cylinder through
/// `rings` triangles of vertices, with the first and last coned off to 0.
pub fn pinched_torus_with_rings(rings: u32) -> SimplicialComplex {
    let v = |ring: u32, i: u32| 1 + 3 * ring + i % 3;
    let mut facets = Vec::new();
    for i in 0..3 {
        for r in 0..rings - 1 {
            facets.push(vec![v(r, i), v(r, i + 1), v(r + 1, i)]);
            facets.push(vec![v(r, i + 1), v(r + 1, i), v(r + 1, i + 1)]);
        }
        facets.push(vec![0, v(0, i), v(0, i + 1)]);
        facets.push(vec![0, v(rings - 1, i), v(rings - 1, i + 1)]);
    }
    named("pinched_torus", facets)
}

pub fn pinched_torus() -> SimplicialComplex {
    pinched_torus_with_rings(2)
}

/// 9-vertex complex projective plane.
pub fn cp2() -> SimplicialComplex {
    let f = [
        [0, 1, 2, 3, 4], [0, 1, 2, 3, 7], [0, 1, 2, 4, 6], [0, 1, 2, 6, 8], [0, 1, 2, 7, 8], [0, 1, 3, 4, 5],
        [0, 1, 3, 5, 7], [0, 1, 4, 5, 6], [0, 1, 5, 6, 7], [0, 1, 6, 7, 8], [0, 2, 3, 4, 7], [0, 2, 4, 5, 6],
        [0, 2, 4, 5, 8], [0, 2, 4, 7, 8], [0, 2, 5, 6, 8], [0, 3, 4, 5, 8], [0, 3, 4, 7, 8], [0, 3, 5, 6, 7],
        [0, 3, 5, 6, 8], [0, 3, 6, 7, 8], [1, 2, 3, 4, 6], [1, 2, 3, 5, 7], [1, 2, 3, 5, 8], [1, 2, 3, 6, 8],
        [1, 2, 5, 7, 8], [1, 3, 4, 5, 8], [1, 3, 4, 6, 8], [1, 4, 5, 6, 7], [1, 4, 5, 7, 8], [1, 4, 6, 7, 8],
        [2, 3, 4, 6, 7], [2, 3, 5, 6, 7], [2, 3, 5, 6, 8], [2, 4, 5, 6, 7], [2, 4, 5, 7, 8], [3, 4, 6, 7, 8],
    ];
    named("cp2", f.iter().map(|s| s.to_vec()).collect())
}

/// Sign applied to the propagated orientation of `cp2` so that the square of
/// the generator of `H^2` evaluates to +1.
pub const CP2_ORIENTATION_SIGN: i8 = 1;

pub fn wedge_of_triangles() -> SimplicialComplex {
    named("wedge_of_triangles", vec![vec![0, 1, 2], vec![0, 3, 4]])
}

/// The zoo entry with its optional stratification and orientation blocks.
pub fn entry(name: &str) -> Option<ComplexFile> {
    let k = match name {
        "s2" => sphere(2),
        "s3" => sphere(3),
        "rp2" => rp2(),
        "t2" => torus(),
        "rp3" => rp3(),
        "pinched_torus" => pinched_torus(),
        "pinched_torus_user" => {
            let mut f = ComplexFile::new(renamed(pinched_torus(), name));
            f.stratification = Some(vec![vec![vec![0]], vec![vec![0]]]);
            return Some(f);
        }
        "pinched_torus_extra_point" => {
            // vertex 4 lies on the middle ring, away from the pinch point
            let mut f = ComplexFile::new(renamed(pinched_torus_with_rings(3), name));
            f.stratification = Some(vec![vec![vec![0], vec![4]], vec![vec![0], vec![4]]]);
            return Some(f);
        }
        "sigma_t2" => renamed(torus().suspension(), name),
        "sigma_rp3" => renamed(rp3().suspension(), name),
        "cp2" => {
            let k = cp2();
            let o = orient(&k).expect("cp2 is orientable");
            let o = if CP2_ORIENTATION_SIGN < 0 { o.reversed() } else { o };
            let mut f = ComplexFile::new(k.clone());
            f.orientation = Some(o.to_facet_signs(&k));
            return Some(f);
        }
        "s2xs2" => renamed(product_staircase(&sphere(2), &sphere(2)).into_complex(), name),
        "pinched_torus_x_interval" => renamed(product_staircase(&pinched_torus(), &simplex(1)).into_complex(), name),
        "wedge_of_triangles" => wedge_of_triangles(),
        "delta3" => simplex(3),
        _ => return None,
    };
    Some(ComplexFile::new(k))
}

pub fn complex(name: &str) -> Option<SimplicialComplex> {
    entry(name).map(|f| f.complex)
}
