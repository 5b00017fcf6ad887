//! k-path detection and approximate counting.
//!
//! Several decision procedures with different promises and error behavior,
//! plus a randomized estimator for the number of k-vertex paths. All of
//! them reduce to walk sums over an exterior algebra; what varies is the
//! coding (Vandermonde, random signs, random edge weights, polynomial edge
//! variables) and whether the coding is lifted to squared dimension.

pub mod count;
pub mod detect;
pub mod few;
pub mod kernel;
pub mod representative;

pub use count::{
    approx_count_paths, bernoulli_moment_check, parse_ratio, trial_count, CountEstimate,
    CountOptions, MomentMode, MomentReport, TrialDistribution,
};
pub use detect::{detect_deterministic, detect_random_edge_weights, detect_unambiguous};
pub use few::{
    build_walk_circuit, detect_few_paths, expand_to_edge_circuit, zero_test_prime_encoding,
    zero_test_random_field,
};
pub use kernel::{sum_squared_path_determinants, PathSquareKernel};
pub use representative::{detect_representative, representative_families, RepresentativeFamily};

use crate::error::{Error, Result};

/// Upper bound on k for algorithms whose state is a dense extensor over a
/// k-dimensional exterior algebra (unlifted codings): 2^k coefficients per
/// vertex.
pub const MAX_PATH_K: usize = 20;

/// Upper bound on k for algorithms that square the coding via lifting;
/// their working set grows like C(k, k/2)² per vertex.
pub const MAX_PATH_K_LIFTED: usize = 14;

pub(crate) fn check_k(k: usize, max: usize) -> Result<()> {
    if k == 0 || k > max {
        Err(Error::KOutOfRange { k, max })
    } else {
        Ok(())
    }
}
