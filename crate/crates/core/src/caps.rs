//! Enumeration caps.
//!
//! Every exhaustive search in the crate checks its size parameter against a
//! [`Caps`] value before starting. The defaults keep each search at desk
//! scale; [`Caps::long_runs`] raises the limits for the expensive runs.

use crate::error::{Error, Result};

/// Upper limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Node count for labeled DAG enumeration and canonicalization.
    pub dag_nodes: usize,
    /// Matrix size for the walk over `M(n)` and its conjugation orbits.
    pub mn_size: usize,
    /// Cube dimension for walks over all characteristic matrices of the cube
    /// (`2^(2n^2)` candidates).
    pub cube_dim: usize,
    /// Free candidate bits for reduced matrices over products of simplices.
    pub product_free_bits: usize,
    /// Square matrix size for bit-level enumeration helpers.
    pub matrix_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            dag_nodes: 5,
            mn_size: 5,
            cube_dim: 3,
            product_free_bits: 24,
            matrix_dim: 16,
        }
    }
}

impl Caps {
    /// Limits for explicitly requested long runs.
    pub fn long_runs() -> Self {
        Caps {
            dag_nodes: 6,
            mn_size: 6,
            cube_dim: 3,
            product_free_bits: 32,
            matrix_dim: 16,
        }
    }

    /// No limits beyond what the bit-level representations can hold.
    pub fn unbounded() -> Self {
        Caps {
            dag_nodes: 8,
            mn_size: 8,
            cube_dim: 4,
            product_free_bits: 40,
            matrix_dim: 64,
        }
    }

    pub(crate) fn check(what: &'static str, requested: usize, cap: usize) -> Result<()> {
        if requested > cap {
            Err(Error::CapExceeded {
                what,
                requested,
                cap,
            })
        } else {
            Ok(())
        }
    }
}
