//! Build a catalog group and inspect it.
//!
//! cargo run --example build_group -- t27:p=11,q=5,n=2

use p2q2::catalog::{build, GroupSpec};
use p2q2::group::{abelian_invariants, center, conjugacy_classes, derived_subgroup, order_histogram};

fn main() {
    let spec: GroupSpec =
        std::env::args().nth(1).unwrap_or_else(|| "t33:p=5,q=2".into()).parse().unwrap_or_else(|e| panic!("{e}"));
    let b = build(&spec).expect("buildable spec");
    let g = &b.group;
    println!("{spec}: {}", g.presentation());
    println!("order {}, abelian {}", g.order(), g.is_abelian());
    println!("K generators {:?}, H generators {:?}", b.k_generators(), b.h_generators());
    println!("centre {}, derived subgroup {}", center(g).order(), derived_subgroup(g).order());
    println!("abelianisation {:?}", abelian_invariants(g));
    println!("element orders {:?}", order_histogram(g));
    println!("{} conjugacy classes", conjugacy_classes(g).len());
    let x = g.mul(g.generator(0), g.generator(g.gen_count() - 1));
    println!("g0*g_last = {}, of order {}", g.format_element(x), g.element_order(x));
}
