//! Produce verification reports through the library and render them the way the CLI does.
//!
//! cargo run --release --example cli_report -- json

use p2q2::autom::{verify, VerifyOptions};
use p2q2::catalog::GroupSpec;
use p2q2::cli::{render_reports, Format};

fn main() {
    let format = match std::env::args().nth(1).as_deref() {
        Some("json") => Format::Json,
        Some("csv") => Format::Csv,
        _ => Format::Md,
    };
    let reports: Vec<_> = ["t3:p=3,q=2", "t23:p=5,q=2", "t35:p=5,q=2"]
        .iter()
        .map(|s| verify(&s.parse::<GroupSpec>().unwrap(), &VerifyOptions::default()))
        .collect();
    print!("{}", render_reports(&reports, format));
}
