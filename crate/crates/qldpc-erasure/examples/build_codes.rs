//! Construct CSS codes with the hypergraph product and round-trip them
//! through the alist + manifest on-disk format.
//!
//!     cargo run --release --example build_codes

use qldpc_erasure::code::{regular_ldpc, repetition_code, CssCode};

fn main() {
    // Square product of the length-3 repetition code: the smallest
    // interesting code in this crate, 13 qubits encoding 1.
    let rep3 = repetition_code(3);
    let small = CssCode::hypergraph_product("hgp-rep3", &rep3, &rep3);
    println!("{:<12} [[{},{}]]", small.name(), small.n(), small.k());

    // A seeded (3,4)-regular [32,8] factor gives a [[1600,64]] code. Seeds
    // differ in girth and distance; 6 is a well-behaved instance.
    let factor = regular_ldpc(32, 3, 4, 6).expect("degrees divide");
    let medium = CssCode::hypergraph_product("hgp-reg32", &factor, &factor);
    println!("{:<12} [[{},{}]]", medium.name(), medium.n(), medium.k());

    // Codes persist as a directory: h1.alist, h2.alist, code.json.
    let dir = std::env::temp_dir().join("qldpc-erasure-example-code");
    medium.save_dir(&dir).expect("writable temp dir");
    let loaded = CssCode::load_dir(&dir).expect("round trip");
    assert_eq!(loaded.fingerprint(), medium.fingerprint());
    println!("saved and reloaded from {}", dir.display());
    println!("fingerprint {}", &loaded.fingerprint()[..16]);

    // Decoding Pauli-Z errors instead of Pauli-X is the same machinery on
    // the role-swapped code.
    let z_side = medium.role_swapped();
    println!("z-side view: [[{},{}]]", z_side.n(), z_side.k());
}
