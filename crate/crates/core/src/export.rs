//! Mesh serialization: Wavefront OBJ for viewers and CSV for numeric
//! post-processing.
//!
//! OBJ knows only three coordinates, so the fourth is carried as a comment
//! line after each vertex; viewers ignore it, scripts can parse it back.
//! All floating-point values are printed with the shortest representation
//! that round-trips, so identical meshes serialize to identical bytes.

use crate::weierstrass::{CurvatureReport, SurfaceMesh};

/// Shortest round-trip decimal form of a double.
fn fmt(v: f64) -> String {
    format!("{}", v)
}

/// Wavefront OBJ text: `v X¹ X² X³` per node (row-major), each followed by
/// a `# x4 <value>` comment carrying the fourth coordinate, then 1-based
/// counter-clockwise quad faces.
pub fn obj_string(mesh: &SurfaceMesh) -> String {
    let g = mesh.grid();
    let n = g.len();
    let mut out = String::with_capacity(n * 48);
    out.push_str(&format!(
        "# conformal immersion mesh, target {}, {} x {} nodes\n",
        mesh.target().tag(),
        g.nx(),
        g.ny()
    ));
    for idx in 0..n {
        out.push_str(&format!(
            "v {} {} {}\n# x4 {}\n",
            fmt(mesh.coord(0)[idx]),
            fmt(mesh.coord(1)[idx]),
            fmt(mesh.coord(2)[idx]),
            fmt(mesh.coord(3)[idx]),
        ));
    }
    for face in mesh.quad_faces() {
        out.push_str(&format!(
            "f {} {} {} {}\n",
            face[0] + 1,
            face[1] + 1,
            face[2] + 1,
            face[3] + 1
        ));
    }
    out
}

/// CSV table, one row per node in row-major order.  Curvature columns hold
/// NaN where the report marks the node invalid (boundary or degenerate).
pub fn csv_string(mesh: &SurfaceMesh, curv: &CurvatureReport) -> String {
    let g = mesh.grid();
    let mut out = String::with_capacity(g.len() * 96);
    out.push_str("x,y,X1,X2,X3,X4,u,H_formula,H_mesh,K_formula,K_mesh\n");
    for j in 0..g.ny() {
        for i in 0..g.nx() {
            let idx = g.idx(i, j);
            let (hf, hm, kf, km) = if curv.valid[idx] {
                (
                    curv.h_formula[idx],
                    curv.h_mesh[idx],
                    curv.k_formula[idx],
                    curv.k_mesh[idx],
                )
            } else {
                (f64::NAN, f64::NAN, f64::NAN, f64::NAN)
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}\n",
                fmt(g.x(i)),
                fmt(g.y(j)),
                fmt(mesh.coord(0)[idx]),
                fmt(mesh.coord(1)[idx]),
                fmt(mesh.coord(2)[idx]),
                fmt(mesh.coord(3)[idx]),
                fmt(mesh.factor()[idx]),
                fmt(hf),
                fmt(hm),
                fmt(kf),
                fmt(km),
            ));
        }
    }
    out
}

// ===========================================================================
// Tests
// ===========================================================================
