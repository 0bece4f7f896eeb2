//! Wiener, edge-Wiener, Szeged, edge-Szeged, PI and vertex-PI indices of
//! benzenoid systems, computed from the boundary cycle alone.
//!
//! The fast path never materialises the molecular graph: [`quotient`] turns
//! the boundary into three weighted quotient trees in `O(|Z|)` time and
//! [`indices`] evaluates every index on those trees. [`oracle`] computes the
//! same values by brute force on the explicit graph.
//!
//! ```
//! use std::collections::HashSet;
//! use hexcut::{boundary::from_hexagons, indices::compute_all, lattice::HexCoord};
//!
//! let naphthalene: HashSet<HexCoord> = [HexCoord::new(0, 0), HexCoord::new(1, 0)].into();
//! let z = from_hexagons(&naphthalene).unwrap();
//! let report = compute_all(&z).unwrap();
//! assert_eq!(report.values.szeged, 243);
//! assert_eq!(report.values.edge_wiener, 127);
//! ```

pub mod boundary;
pub mod formats;
pub mod generators;
pub mod indices;
pub mod lattice;
pub mod oracle;
pub mod quotient;
pub mod treealgo;

use thiserror::Error;

/// Any failure from the library, for callers that do not care which stage failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Lattice(#[from] lattice::LatticeError),
    #[error(transparent)]
    Boundary(#[from] boundary::BoundaryError),
    #[error(transparent)]
    Format(#[from] formats::FormatError),
    #[error(transparent)]
    Quotient(#[from] quotient::QuotientError),
    #[error(transparent)]
    Tree(#[from] treealgo::TreeError),
    #[error(transparent)]
    Index(#[from] indices::IndexError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error(transparent)]
    Generator(#[from] generators::GeneratorError),
}

impl Error {
    pub fn is_overflow(&self) -> bool {
        matches!(
            self,
            Error::Tree(treealgo::TreeError::Overflow)
                | Error::Index(indices::IndexError::Tree(treealgo::TreeError::Overflow))
        )
    }

    pub fn is_bound_exceeded(&self) -> bool {
        matches!(
            self,
            Error::Oracle(oracle::OracleError::BoundExceeded { .. })
                | Error::Tree(treealgo::TreeError::BoundExceeded { .. })
        )
    }
}
