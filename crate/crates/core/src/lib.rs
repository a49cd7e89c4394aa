//! Path homology of finite digraphs over exact fields, with executable
//! checks of the cofibration structure on the category of digraphs.
//!
//! ```
//! use pathhom::digraph::gen_cycle;
//! use pathhom::pathhom::homology;
//! use pathhom::{Rational, F5};
//!
//! let c3 = gen_cycle(3)?;
//! assert_eq!(homology::<Rational>(&c3, 4)?.betti, [1, 1, 0, 0]);
//! assert_eq!(homology::<F5>(&c3, 4)?.betti, [1, 1, 0, 0]);
//! # Ok::<(), pathhom::Error>(())
//! ```

pub mod cofib;
pub mod digraph;
pub mod error;
pub mod excision;
pub mod field;
pub mod harness;
pub mod linalg;
pub mod pathhom;

pub use digraph::{DiGraph, GraphMap, Heights, PushoutSquare, Vertex, VertexSubset};
pub use error::{Error, Result};
pub use field::{Field, FieldChoice, Fp, Rational, F2, F3, F5, F7};

pub type RationalChain = pathhom::Chain<Rational>;
pub type RationalMatrix = linalg::LabeledMatrix<Rational>;
pub type RationalComplex = pathhom::PathComplex<Rational>;
