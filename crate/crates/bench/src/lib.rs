//! Fixtures shared by the benchmarks.

use ade_core::{enumerate_roots, parse_diagram, RootSystem};

pub fn root_system(spec: &str) -> RootSystem {
    enumerate_roots(&parse_diagram(spec).expect("valid spec")).expect("finite root system")
}
