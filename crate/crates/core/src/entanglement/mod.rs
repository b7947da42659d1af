//! Two-qubit entanglement and correlation measures.
//!
//! The states reaching this module are mostly X states, the form every
//! two-spin marginal takes when an isotropic-exchange ensemble starts in a
//! `σz` product eigenstate. For them the Peres–Horodecki test, the Wootters
//! concurrence and the `σx`/`σy` covariances all reduce to the two numbers
//! `|c|` and `sqrt(a e)`.

mod covariance;
mod measures;
mod xstate;

pub use covariance::{
    concurrence_from_covariances, covariance, covariance_pair_x, marginal_first, marginal_second, CovariancePair,
    REAL_CAST_TOL,
};
pub use measures::{
    concurrence_wootters, concurrence_x, is_separable, partial_transpose, EIGEN_CLIP, SEPARABILITY_SLACK,
};
pub use xstate::{
    matrix_to_x_state, off_x_residue, random_x_state, x_state_to_matrix, TwoQubitDensity, XStateDensity, STATE_TOL,
    X_FORM_TOL,
};
