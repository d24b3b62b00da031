//! Split automorphisms of G = H ⋊ K into (α β; γ δ) and check the conditions.
//!
//! cargo run --release --example matrix_conditions -- t22:p=5,q=2

use p2q2::autom::{brute_aut, matrix_of, verify_aut_matrix, Automorphism, DEFAULT_BUDGET};
use p2q2::catalog::{build, GroupSpec};

fn main() {
    let spec: GroupSpec = std::env::args().nth(1).unwrap_or_else(|| "t22:p=5,q=2".into()).parse().expect("spec");
    let b = build(&spec).expect("buildable");
    let g = &b.group;
    let aut = brute_aut(g, DEFAULT_BUDGET).expect("within budget");

    let mut gamma_trivial = 0;
    for a in aut.elements() {
        let m = matrix_of(&b, a);
        verify_aut_matrix(&b, &m).expect("automorphisms satisfy every condition");
        gamma_trivial += m.gamma.iter().all(|&x| x == 0) as usize;
    }
    println!("{spec}: all {} automorphisms pass (i)-(v); γ trivial for {gamma_trivial}", aut.order());

    let shown = &aut.elements()[aut.order() / 2];
    let m = matrix_of(&b, shown);
    let fmt = |v: &[usize]| v.iter().map(|&x| g.format_element(x)).collect::<Vec<_>>().join(", ");
    println!(
        "sample: α = [{}], β = [{}], γ = [{}], δ = [{}]",
        fmt(&m.alpha),
        fmt(&m.beta),
        fmt(&m.gamma),
        fmt(&m.delta)
    );

    // A map that collapses one H generator is caught.
    let mut imgs: Vec<usize> = shown.images().iter().map(|&x| x as usize).collect();
    let last = imgs.len() - 1;
    imgs[last] = imgs[last - 1];
    let broken = Automorphism::from_images(&imgs);
    match verify_aut_matrix(&b, &matrix_of(&b, &broken)) {
        Ok(()) => println!("broken map unexpectedly passes"),
        Err(v) => println!("broken map: {v}"),
    }
}
