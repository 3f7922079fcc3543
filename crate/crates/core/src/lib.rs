//! Cauchon diagrams and the combinatorics of torus-invariant primes in
//! quantum matrices.
//!
//! A Cauchon diagram on an `m x n` grid determines a Grassmann necklace in
//! `Gr(m, m+n)` through chains of nearest white squares, and a restricted
//! permutation of `1..=m+n` through its pipe dream. Both routes lead to the
//! same family of quantum minors, which generates a separating Ore set for
//! the corresponding H-prime.
//!
//! ```
//! use cauchon::{necklace_from_diagram, permutation_from_diagram, CauchonDiagram};
//!
//! let d: CauchonDiagram = "++0+\n000+\n0+++".parse().unwrap();
//! assert_eq!(necklace_from_diagram(&d).to_string(), "123,234,346,246,256,267,237");
//! assert_eq!(permutation_from_diagram(&d).to_string(), "3 1 4 6 2 5 7");
//! ```

pub mod diagram;
pub mod error;
pub mod minor;
pub mod necklace;
pub mod oreset;
pub mod permutation;
pub mod subset;
pub mod verify;

pub use diagram::{
    border_box_square, enumerate, CauchonDiagram, Chain, Color, Grid, PipeSquare, Square,
    Violation,
};
pub use error::{Error, Result};
pub use minor::{
    all_minors, expand_quantum_minor, minor_to_plucker, plucker_to_minor, MinorIndex,
    PluckerIndex, QuantumMinorExpansion,
};
pub use necklace::{
    gale_leq, necklace_from_diagram, necklace_leq, validate_necklace, vanishes,
    vanishing_minor_set, GaleOrder, GrassmannNecklace, NecklaceViolation,
};
pub use oreset::{
    gl_variant, hprime_poset, is_separating, ore_generators, prune_main_diagonal, sl_variant,
    GlVariant, HPrimePoset, OreEntry, OreSetGenerators, SeparationReport,
};
pub use permutation::{
    border_interval_set, bruhat_leq, chain_set_via_permutations, diagram_from_permutation,
    fy_minor, grid_word, is_restricted, necklace_from_permutation, permutation_from_diagram,
    Permutation,
};
pub use subset::Subset;
