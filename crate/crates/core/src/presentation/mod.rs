//! Finite quandle presentations: free-quandle words, terms, the text format
//! and the coset-style enumerator.

mod consequence;
mod enumerate;
mod eval;
mod parser;
mod term;
mod tietze;
mod word;

pub use consequence::{
    consequence_step, is_consequence_bounded, move_additions, ConsequenceError, Move, RelationPair,
    Verdict,
};
pub use enumerate::{
    enumerate_presentation, EnumerationError, EnumerationResult, EnumerationStats,
    FiniteRealization, Outcome, DEFAULT_BUDGET,
};
pub use eval::{check_induced_hom, evaluate_term, evaluate_word, EvalError, InducedHom};
pub use parser::{parse_presentation, parse_term, ParseError};
pub use term::{Presentation, PresentationError, Relation, Term};
pub use tietze::{tietze_apply, Certificate, TietzeError, TietzeMove, TietzeResult, SEARCH_DEPTH};
pub use word::{cyclically_reduce, inverse_word, reduce, FreeQuandleElement, Letter};
