//! Finitely presented groups: words, presentations and coset enumeration.

mod cache;
mod derive;
mod enumerate;
mod parse;
mod presentation;
mod word;

pub use cache::{decode_table, encode_table, read_cache, write_cache};
pub use derive::{derive_presentation, DerivedPresentation, MatrixTwist};
pub use enumerate::{todd_coxeter, CosetTable, EnumOptions, EnumStats, Strategy};
pub use parse::{parse_presentation, parse_presentation_file, PresentationFile};
pub use presentation::{format_word, Presentation};
pub use word::{Word, WordDisplay};
