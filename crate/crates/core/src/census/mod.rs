//! Exhaustive censuses and the closed forms they are compared against.

pub mod bounds;
pub mod coprime;
pub mod exec;
pub mod fibers;
pub mod formulas;
pub mod splitting;
pub mod toeplitz;

pub use bounds::{bounds_check, BoundsTriple, Rational};
pub use coprime::{coprime_all_count, coprime_census, coprime_monic_count, sigma_count, CoprimeCensus, CountPair};
pub use exec::{with_workers, DEFAULT_EXHAUSTIVE_CEILING};
pub use fibers::{enumerate_fibers, sample_fibers, FiberRecord, FiberReport, FiberSample, PolyClass};
pub use formulas::{conjectured_fiber_size, conjectured_singer_count};
pub use splitting::{
    basis_classes, count_ordered_bases_n, default_alpha, enumerate_splitting_subspaces, fiber_via_n,
    pointed_splitting_counts, split_census, verify_elemsplit, ElemSplitReport, SplitCensus, SplitContext,
    Subspace,
};
pub use toeplitz::{
    binomial_irreducibility, fermat_condition_search, toeplitz_census, toeplitz_via_trinomial, BinomialVerdict,
    FermatWitness, TrinomialRoute,
};
