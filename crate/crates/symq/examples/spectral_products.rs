//! Numerical Ruelle-type spectral products and the factorization identity
//! for restricted q-series.
//!
//! Run with: cargo run --example spectral_products

use num_complex::Complex64;
use symq::qspectral::{check_spectral_identities, ruelle_plus_product, ruelle_product, SpectralParams};

fn main() {
    // θ = i gives q = e^{-2π}
    let p = SpectralParams::new(1.0, Complex64::new(0.0, 0.0), 1, Complex64::i()).unwrap();
    let (v, s) = ruelle_product(&p, 1e-12).unwrap();
    println!("prod (1 - q^n) at θ = i: {:.12}  (s = {s})", v.re);
    let (vp, sp) = ruelle_plus_product(&p, 1e-12).unwrap();
    println!("prod (1 + q^n) at θ = i: {:.12}  (s = {sp})", vp.re);

    // finite products of (1 - q^{lm})^{-1} against ratios of infinite ones
    for theta in [Complex64::i(), Complex64::new(0.1, 0.5), Complex64::new(0.3, 0.7)] {
        let rep = check_spectral_identities(3, 5, theta, Complex64::new(0.1, 0.0), 1e-8).unwrap();
        println!(
            "θ = {theta}: max deviation {:.3e} over m <= 5, r <= 3 (pass: {})",
            rep.max_deviation, rep.passed
        );
    }
}
