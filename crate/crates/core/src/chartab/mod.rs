//! Exact character tables of small groups.

mod cyclotomic;
mod dixon;
mod modp;

pub use cyclotomic::{CyclotomicInteger, Evaluator};
pub use dixon::{
    class_constants, class_constants_with_cap, dixon_character_table,
    dixon_character_table_with_cap, rationality_counts, Character, CharacterTable,
    ClassConstants, DEFAULT_CHARACTER_CAP, PRIME_SEARCH_BOUND,
};
pub use modp::{is_prime, prime_one_mod, Zp};
