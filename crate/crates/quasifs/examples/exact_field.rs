//! Exact arithmetic in cyclotomic fields: construction, the coefficient
//! grammar, and inversion.
//!
//!     cargo run --example exact_field

use quasifs::field::CycloField;

fn main() {
    // Q(zeta_12): the 12th cyclotomic polynomial has degree phi(12) = 4.
    let field = CycloField::new(12);
    println!(
        "Q(zeta_12) has degree {} over Q; Phi_12 coefficients (constant first): {:?}",
        field.degree(),
        field
            .min_poly()
            .iter()
            .map(quasifs::field::format_rational)
            .collect::<Vec<_>>()
    );

    let z = field.zeta();
    println!("zeta^12 = {}", z.pow(12));
    println!("zeta^6  = {}", z.pow(6));

    // Every scalar prints in the same grammar the bundle files use.
    let a = field.parse("-1/2*z^3 + z + 2/7").unwrap();
    println!("a       = {a}");
    println!("a^2     = {}", &a * &a);

    let inv = a.inverse().unwrap();
    println!("a^-1    = {inv}");
    println!("a * a^-1 = {}", &a * &inv);

    // Parsing rejects exponents that were not reduced modulo the conductor.
    match field.parse("z^12") {
        Err(e) => println!("parsing \"z^12\": {e}"),
        Ok(_) => unreachable!(),
    }
}
