//! Transfer-matrix eigenfrequencies of the 2N-piece composite string.
//!
//! Run with: cargo run --example string_spectrum

use symq::string2n::{dispersion, eigenfrequencies, omega_eigenvalues, StringConfig};

fn main() {
    // uniform string: spectrum at the even integers
    let uniform = StringConfig::new(1.0, 1).unwrap();
    let roots = eigenfrequencies(&uniform, 10.5, 0.01);
    println!("x = 1, N = 1: {roots:?}");

    // a composite string with moderate tension contrast
    let cfg = StringConfig::new(0.25, 2).unwrap();
    println!(
        "\nx = 1/4, N = 2 (ε = {:.4}), dispersion at ω = 1: {:.6}",
        cfg.eps(),
        dispersion(&cfg, 1.0)
    );
    let roots = eigenfrequencies(&cfg, 9.0, 0.005);
    println!("spectrum to ω = 9: {roots:?}");

    // extreme tension: branches collapse toward ω = 2Nn
    let extreme = StringConfig::new(1e-6, 2).unwrap();
    let roots = eigenfrequencies(&extreme, 13.0, 1e-4);
    println!("\nx = 1e-6, N = 2, roots near multiples of 4:");
    for target in [4.0, 8.0, 12.0] {
        let nearest = roots
            .iter()
            .copied()
            .min_by(|a, b| (a - target).abs().partial_cmp(&(b - target).abs()).unwrap())
            .unwrap();
        println!("  target {target}: nearest root {nearest:.6}");
    }

    // eigenvalues of a single transfer matrix
    let (l1, l2) = omega_eigenvalues(0.5, 1.0);
    println!("\nΩ(1/2, 1) eigenvalues: {l1:.6} and {l2:.6}");
}
