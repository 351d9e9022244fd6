//! Finite Gray-categories: validation, model-structure predicates, path
//! objects, adjoint biequivalences, computads, cofibrant replacement and
//! nerves of Gray-groupoids.

pub mod adjunctions;
pub mod category;
pub mod computads;
pub mod constructions;
pub mod corpus;
pub mod cell;
pub mod enumerate;
pub mod equivalence;
pub mod error;
pub mod functor;
pub mod gray;
pub mod model;
pub mod mutation;
pub mod nerve;
pub mod path_object;
pub mod replacement;
pub mod report;
pub mod sesqui;
pub mod simplicial;
pub mod tabulate;
pub mod text;

pub use category::{validate_category, validate_functor, Category, Functor};
pub use cell::{Cell, Table};
pub use error::{Error, Result, StructuralError};
pub use functor::{validate_gray_functor, GrayFunctor};
pub use gray::{validate_gray_category, GrayCategory, GrayIndex, HomView};
pub use report::{ValidationReport, Violation};
pub use sesqui::{validate_sesqui_functor, validate_sesquicategory, validate_two_category, SesquiFunctor, Sesquicategory, TwoCategory};
