//! The free unital associative algebra on a finite alphabet, over the scalars
//! and over the scalars extended by a central indeterminate `t`.

mod poly;
mod word;

pub use poly::{FreePoly, FreeTPoly};
pub use word::{enumerate_words, render_word, Word};
