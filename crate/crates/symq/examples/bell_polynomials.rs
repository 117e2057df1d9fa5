//! Bell polynomials by recurrence and by Faà di Bruno's partition sum.
//!
//! Run with: cargo run --example bell_polynomials

use symq::bell::{bell_faa_di_bruno_rat, bell_generating_check, bell_recurrence_rat};
use symq::rat::int;

fn main() {
    // all-ones arguments generate the set-partition Bell numbers
    let ones: Vec<_> = (0..8).map(|_| int(1)).collect();
    print!("Bell numbers:");
    for n in 0..=8u32 {
        print!(" {}", bell_recurrence_rat(n, &ones).unwrap());
    }
    println!();

    // the two routes agree on arbitrary rational inputs
    let g = [int(2), int(-3), int(5), int(1), int(-1), int(4)];
    for n in 0..=6u32 {
        let a = bell_recurrence_rat(n, &g).unwrap();
        let b = bell_faa_di_bruno_rat(n, &g).unwrap();
        println!("Y_{n} = {a}  (recurrence = Faà di Bruno: {})", a == b);
    }

    // exp(Σ g_n z^n/n!) has coefficients Y_n/n!
    println!(
        "generating-function link to degree 6: {}",
        bell_generating_check(&g, 6).unwrap()
    );
}
