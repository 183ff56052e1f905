//! Thompson groups F, F₃ and F₄ as tree-pair diagrams, Jones's construction
//! of links from group elements, subgroup membership tests and exact link
//! invariants.

pub mod action;
pub mod error;
pub mod invariants;
pub mod link;
pub mod morphisms;
pub mod planar;
pub mod poly;
pub mod strip;
pub mod tait;
pub mod tree;
pub mod word;

pub use error::{Error, Result};
pub use tree::{Arity, Tree, TreeDiagram};
pub use word::{GeneratorWord, NormalForm};
pub use link::{build_link, canonical_pd, LinkDiagram, PdCode};
pub use poly::LaurentPoly;
pub use tait::{TaitGraph, TwoColoring};
