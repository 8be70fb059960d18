//! Library-side equivalent of `ewgeom verify`: load a scenario, run two
//! suites on the float backend, print the report.

use ewgeom::cli::{load_scenario, verify, Overrides};
use ewgeom::numeric::Backend;

fn main() -> ewgeom::Result<()> {
    let path = std::env::args().nth(1);
    let sc = load_scenario(path.as_deref().map(std::path::Path::new))?;
    let ov = Overrides {
        suites: vec!["signatures".into(), "lagrangian-audit".into()],
        backend: Some(Backend::Float),
        tol: None,
    };
    let report = verify(&sc, &ov)?;
    print!("{}", report.to_text());
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
