//! q-Pochhammer products and the Euler exponent/coefficient recursion.
//!
//! Run with: cargo run --example euler_products

use symq::qspectral::{euler_expand, euler_function_series, euler_invert};
use symq::rat::format_rat;

fn main() {
    // (q;q)_inf: the pentagonal-number series
    println!("(q;q)_inf to degree 12: {}", euler_function_series(12));

    // prod (1-q^n)^{-1}: partition numbers from the divisor-sum recursion
    let b = euler_expand(&vec![1i64; 12], 12).unwrap();
    let ps: Vec<String> = b.iter().map(format_rat).collect();
    println!("partition numbers: {}", ps.join(", "));

    // a two-parameter product and its inversion
    let a = vec![2i64, 0, -1, 1, 0, 0, 3, -2, 0, 1];
    let b = euler_expand(&a, 10).unwrap();
    let back = euler_invert(&b, 10).unwrap();
    println!("\nexponents        {a:?}");
    let shown: Vec<String> = back.iter().map(format_rat).collect();
    println!("round trip       [{}]", shown.join(", "));
}
