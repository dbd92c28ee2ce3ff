// Principal minors over GF(2) and over the integers.
//
// `cargo run --example gf2_minors`

use smallcover::{BitMatrix, Result};

pub fn run() -> Result<()> {
    // rows are written left to right: "110" has entries (0,0) and (0,1) set
    let a: BitMatrix = "110,011,101".parse()?;
    println!("A = {a}");
    println!("det over GF(2): {}", u8::from(a.det_gf2()?));
    println!("det over Z:     {}", a.principal_minor_int(&[0, 1, 2])?);
    match a.vanishing_principal_minor()? {
        Some(s) => println!("first vanishing principal minor: {s:?}"),
        None => println!("all principal minors are 1"),
    }

    let b: BitMatrix = "100,110,011".parse()?;
    println!("\nB = {b}");
    println!("all principal minors 1: {}", b.all_principal_minors_one()?);
    let poly: Vec<String> = b.char_poly_int()?.iter().map(|c| c.to_string()).collect();
    println!("char poly coefficients (x^3 first): [{}]", poly.join(", "));
    let inv = b.inverse_gf2()?;
    println!("B^-1 = {inv}");
    println!("B * B^-1 = {}", b.mul_gf2(&inv)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
