//! The generalized spin-star model: two central spins A and B, each coupled
//! by XY exchange to all `N` spins of a bath with no internal coupling.
//!
//! Three independent engines produce the central-pair state:
//!
//! - closed forms for the two preparations over the bath ground state,
//! - the sector engine, which diagonalizes the at most 4x4 block the total
//!   `S_z` and the bath `J²` leave invariant, and scales to any `N`,
//! - the full-register [`Oracle`], for `N <= 8`.

mod closed_form;
mod config;
mod hamiltonian;
mod oracle;
mod sector;
mod trajectory;

pub use closed_form::{
    case1_frequency, case2_frequency, closed_form_case1, closed_form_case2, closed_form_case2_cov_xx,
    concurrence_case2, f_n, f_n_printed, ClosedFormPoint,
};
pub use config::{InitialState, SpinStarConfig, BATH_OFFSET, SITE_A, SITE_B};
pub use hamiltonian::{
    bath_j_squared, bath_subset_j_squared, build_general_heisenberg, build_spin_star_hamiltonian, total_sz,
    MAX_DENSE_BATH,
};
pub use oracle::{oracle_evolve, Oracle, OracleRun, ORACLE_MAX_BATH};
pub use sector::{
    ladder, reduce_sector_to_pair, sector_evolve, sector_hamiltonian, CoupledBasisLabel, SectorHamiltonian,
    SectorPropagator, SectorState,
};
pub use trajectory::{
    grid_extrema, refine_extremum, trajectory, uniform_grid, Engine, Extremum, PairDynamics, TimeSeries,
    TrajectoryPoint,
};
