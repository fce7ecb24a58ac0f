//! Bijective decompositions and sign-reversing involutions on weighted
//! paths: the prefix/core split, the four-step cancellation behind the
//! continued fraction, and the core-word involution.

pub mod cfrac2;
pub mod coreword;
pub mod penaud;

pub use cfrac2::cfrac2_involution;
pub use coreword::{enumerate_core_words, CoreWord, Letter};
pub use penaud::{penaud_merge, penaud_split};
