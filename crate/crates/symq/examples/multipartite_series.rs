//! Multipartite generating functions F and G, their Bell-polynomial
//! coefficient families, and the q-specialization.
//!
//! Run with: cargo run --example multipartite_series

use symq::multigen::{
    beta, brute_force_count, coefficient_p, expand_f, expand_g, specialize_to_q,
    specialize_to_q_direct, Kind, MultiGenConfig,
};
use symq::partition::MultiIndex;

fn main() {
    let cfg = MultiGenConfig::new(2, 6);

    println!("β_2(1) to degree 3: {}", beta(2, 1, 3));

    let f = expand_f(&cfg);
    let g = expand_g(&cfg);
    println!("\ncoefficients of z^2 x1^a x2^b in F (multipartitions into 2 parts):");
    for a in 0..=2u32 {
        for b in 0..=2u32 {
            if a + b == 0 {
                continue;
            }
            let c = f.coeff(&[2, a, b]);
            let brute = brute_force_count(&MultiIndex::new(vec![a, b]), 2, false);
            println!("  ({a},{b}): series {c}, enumeration {brute}");
        }
    }
    println!("distinct-part counts from G at z^2 x1^2 x2^1: {}", g.coeff(&[2, 2, 1]));

    // the Bell-polynomial route to the z-slices (all-zero index kept)
    let p2 = coefficient_p(2, &MultiGenConfig::new(1, 4));
    println!("\nP_2 for m = 1 to degree 4: {p2}");

    // specialization X = (q, q^2, ..., q^r)
    let s = specialize_to_q(2, 6, Kind::F);
    println!("\nF specialized at r = 2, degree 6 (z, q):");
    println!("  exp form     = {s}");
    println!(
        "  direct match = {}",
        s == specialize_to_q_direct(2, 6, Kind::F)
    );
}
