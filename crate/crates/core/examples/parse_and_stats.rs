//! Build IVIFNs from exact decimals and print their derived statistics.

use ivifn::{Ivifn, Rational};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = Ivifn::new(
        Rational::parse("0.1")?,
        Rational::parse("0.3")?,
        Rational::parse("2/10")?,
        Rational::parse("0.4")?,
    )?;
    let st = a.stats();
    println!("a   = {a}");
    println!("S   = {}  (score)", st.s);
    println!("H   = {}  (accuracy)", st.h);
    println!("E1  = {}", st.e1);
    println!("E2  = {}", st.e2);
    println!("E3  = {}", st.e3);
    println!("T   = {}", st.t);
    println!("G   = {}", st.g);
    println!("pi  = [{}, {}]", st.pi_lo, st.pi_hi);

    // Invalid inputs are rejected with the offending field.
    for bad in [
        ["0.6", "0.7", "0.2", "0.4"],
        ["0.3", "0.1", "0", "0"],
        ["-0.1", "0", "0", "0"],
    ] {
        let [p, q, r, s] = bad.map(|t| Rational::parse(t).unwrap());
        println!("{bad:?} -> {}", Ivifn::new(p, q, r, s).unwrap_err());
    }
    Ok(())
}
