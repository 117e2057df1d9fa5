//! Cauchy identities: the classical Schur kernels, the deformed three-way
//! identity, and replicated arguments.
//!
//! Run with: cargo run --example cauchy_kernels

use symq::deformed::cauchy::{deformed_cauchy_check, replicated_cauchy_check};
use symq::deformed::DeformationParams;
use symq::rat::{int, rat};
use symq::symfunc::cauchy_schur_check;

fn main() {
    cauchy_schur_check(2, 2, 4, &int(1)).unwrap();
    println!("classical kernels (direct and dual) verified in 2+2 variables to degree 4");

    for params in [
        DeformationParams::Schur,
        DeformationParams::HallLittlewood { t: rat(1, 2) },
        DeformationParams::Jack { alpha: rat(3, 2) },
        DeformationParams::Macdonald { q: rat(1, 3), t: rat(1, 2) },
        DeformationParams::Kappa { q: rat(1, 2), kappa: 3, alpha: int(2) },
    ] {
        deformed_cauchy_check(&params, 2, 2, 4).unwrap();
        println!("three-way Cauchy identity verified for {}", params.label());
    }

    let mac = DeformationParams::Macdonald { q: rat(1, 3), t: rat(1, 2) };
    for (tau, eta) in [(int(2), int(1)), (rat(1, 2), int(2))] {
        replicated_cauchy_check(&mac, &tau, &eta, 2, 2, 4).unwrap();
        println!("replicated Cauchy verified at (τ, η) = ({tau}, {eta})");
    }
}
