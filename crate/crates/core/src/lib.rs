//! Exact computations in the free bialgebra `k⟨Σ⟩` over a partitioned
//! alphabet `Σ = G ⊔ L` with `k = ℚ`.

pub mod alphabet;
pub mod check;
pub mod dualforms;
pub mod error;
pub mod freealg;
mod json;
pub mod matrix;
pub mod par;
pub mod poly;
pub mod rational;
pub mod rep;
pub mod sweedler;
pub mod tensor;
mod text;

pub use alphabet::{Alphabet, Letter, LetterKind, Word};
pub use dualforms::Series;
pub use error::{Error, Result};
pub use json::render as render_json;
pub use matrix::Matrix;
pub use par::Exec;
pub use poly::NCPoly;
pub use rational::Q;
pub use rep::{DualVector, MatRep};
pub use sweedler::{HankelSlice, LinRep};
pub use tensor::{Tensor2, Tensor3};
