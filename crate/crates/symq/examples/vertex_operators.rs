//! Vertex operators on the bosonic Fock space: the simple operator V_α(z),
//! matrix elements of the generalized operator, and regularized traces.
//!
//! Run with: cargo run --example vertex_operators

use symq::deformed::DeformationParams;
use symq::partition::Partition;
use symq::rat::{int, rat};
use symq::vertex::{
    dim_sigma, hl_trace_identity_check, trace_series, vertex_matrix_element, vertex_simple,
    Insertions, VertexSpec,
};
use symq::{Basis, SymFunc};

fn main() {
    // V_α(z) on the vacuum: z^n coefficients are replicated h_n
    let v = vertex_simple(&int(2), &SymFunc::one(Basis::P), 3);
    for (zp, state) in &v {
        println!("z^{zp}: {}", state.convert(Basis::S));
    }
    println!(
        "dim check: coefficient of s(2,1) at z^3 is dim_(2,1)(2) = {}",
        dim_sigma(&int(2), &Partition::new(vec![2, 1]))
    );

    // a generalized vertex operator with Hall-Littlewood deformation
    let spec = VertexSpec {
        z: Insertions::new(&["z1"], &[int(1)]),
        w: Insertions::new(&["w1"], &[int(1)]),
        params: DeformationParams::HallLittlewood { t: rat(1, 2) },
    };
    let lam = Partition::new(vec![1]);
    let me = vertex_matrix_element(&lam, &lam, &spec).unwrap();
    println!("\n⟨P_(1), V Q_(1)⟩ = {me}  (two computation routes agree)");

    // the empty-insertion trace generates partition numbers in (p r)
    let empty = VertexSpec {
        z: Insertions::empty(),
        w: Insertions::empty(),
        params: DeformationParams::HallLittlewood { t: rat(1, 2) },
    };
    let s = trace_series(&empty, 6).unwrap();
    println!("\ntrace with no insertions: {s}");

    // the Hall-Littlewood trace identity, exact to degree 4 in q
    hl_trace_identity_check(
        &int(1),
        &int(0),
        &int(1),
        &int(0),
        &[rat(1, 2)],
        &[],
        &[rat(1, 3)],
        &[],
        4,
    )
    .unwrap();
    println!("Hall-Littlewood trace identity verified to degree 4");
}
