//! Exact computations for the quantum ε-electrical algebra: operators on
//! tensor modules, Fock spaces via q-wedges, and the degree combinatorics of
//! cyclotomic electric KLR algebras.
//!
//! ```
//! use qelectric::fock::FockVector;
//! use qelectric::partitions::Partition;
//!
//! // v_∅ · E_0 · E_-1 adds the boxes of contents 0 and -1
//! let v = FockVector::vacuum().act_word_offsets(&[0, -1]).unwrap();
//! assert_eq!(v.terms().len(), 1);
//! assert!(v.terms().contains_key(&"1,1".parse::<Partition>().unwrap()));
//! ```

pub mod charges;
pub mod fock;
pub mod klr;
pub mod partitions;
pub mod scalars;
pub mod tableaux;
pub mod tensor;
pub mod verify;

pub use charges::{ChargeVector, Residue};
pub use partitions::{Cell, Multipartition, Partition, Step};
pub use scalars::{qint, LaurentPoly, Scalar};
pub use tableaux::UpDownTableau;
pub use tensor::TensorVector;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/scalars.md")]
    pub struct Scalars;
    #[doc = include_str!("../../../book/src/tableaux.md")]
    pub struct Tableaux;
    #[doc = include_str!("../../../book/src/tensor.md")]
    pub struct Tensor;
    #[doc = include_str!("../../../book/src/fock.md")]
    pub struct Fock;
    #[doc = include_str!("../../../book/src/klr.md")]
    pub struct Klr;
    #[doc = include_str!("../../../book/src/verify.md")]
    pub struct Verify;
}
