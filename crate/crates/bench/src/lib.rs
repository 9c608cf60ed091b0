//! Fixtures shared by the benchmarks.

use scarf_core::polycore::{int, rat};
use scarf_core::{HypergeqParams, RomanovskiParams, ScarfParams};

/// Romanovski parameters with a large finite-orthogonality window.
pub fn romanovski_wide() -> RomanovskiParams {
    RomanovskiParams::new(rat(21, 2), int(-10)).unwrap()
}

/// The `(a, b) = (10, 5)` Scarf II well, ten bound states.
pub fn scarf_benchmark() -> ScarfParams {
    ScarfParams::unit(int(10), int(5)).unwrap()
}

/// One tuple per canonical family with a master-formula path.
pub fn canonical_tuples() -> Vec<(&'static str, HypergeqParams)> {
    vec![
        ("jacobi", HypergeqParams::jacobi(rat(1, 2), rat(3, 2))),
        ("laguerre", HypergeqParams::laguerre(rat(1, 3))),
        ("hermite", HypergeqParams::hermite()),
        ("romanovski", romanovski_wide().hypergeq()),
    ]
}
