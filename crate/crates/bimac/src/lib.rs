//! Exact computer algebra for double (bisymmetric) Macdonald polynomials.
//!
//! The crate builds, from scratch and without floating point, the objects
//! needed to study Macdonald polynomials in two sets of variables: rational
//! functions in `q, t`, partitions and superpartitions with their orders,
//! symmetric functions in one and two alphabets, plethystic substitution,
//! classical and double Macdonald polynomials, double Kostka coefficients,
//! B-type nabla operators and the non-stable superspace sector.

pub mod bisym;
pub mod coeffs;
pub mod linalg;
pub mod macdonald;
pub mod nabla;
pub mod partitions;
pub mod plethysm;
pub mod superspace;
pub mod symfunc;

use thiserror::Error;

/// Errors surfaced by the high-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Coeff(#[from] coeffs::CoeffError),
    #[error(transparent)]
    Partition(#[from] partitions::PartitionError),
    #[error(transparent)]
    GramSchmidt(#[from] symfunc::GramSchmidtError),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(String, String),
    #[error("not enough variables: {0}")]
    InsufficientVariables(String),
    #[error("input is not homogeneous")]
    Inhomogeneous,
    #[error("expected an integer, found {0}")]
    NotInteger(String),
    #[error("not in the span of the sector basis: {0}")]
    OutsideSpan(String),
}

mod memo {
    use std::collections::HashMap;
    use std::hash::Hash;
    use std::sync::{Arc, Mutex, OnceLock};

    pub(crate) type Store<K, V> = OnceLock<Mutex<HashMap<K, Arc<V>>>>;

    /// Returns the cached value for `key`, computing it outside the lock on a miss.
    pub(crate) fn memoize<K: Eq + Hash + Clone, V>(store: &Store<K, V>, key: &K, build: impl FnOnce() -> V) -> Arc<V> {
        let map = store.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(v) = map.lock().expect("cache lock").get(key) {
            return Arc::clone(v);
        }
        let built = Arc::new(build());
        let mut guard = map.lock().expect("cache lock");
        Arc::clone(guard.entry(key.clone()).or_insert(built))
    }
}
