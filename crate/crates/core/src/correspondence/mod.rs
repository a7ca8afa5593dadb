//! Identities relating `B(p)`, the Ihara zeta of `G_N(p)` and the zeta
//! function of `X_0(N)` over `F_p`.

pub mod fixtures;
pub mod hasse_weil;
pub mod table;
pub mod verify;

pub use fixtures::{eigenform_fixture, EigenformFixture, FixtureColumn, OrbitValue};
pub use hasse_weil::{
    brandt_three_term, cusp_eigenvalue_polynomial, hasse_weil_zeta, hecke_charpoly_s2, mu,
    reciprocal_transform, HasseWeilZeta, WeilWindow,
};
pub use table::{table_primes, table_report, RowStatus, TableReport, TableRow};
pub use verify::{brandt_tree_count, eichler_mass_check, ids, verify_brandt, verify_theorems};
