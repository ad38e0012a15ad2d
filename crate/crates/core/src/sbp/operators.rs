//! Diagonal-norm SBP first-derivative operators generated from order
//! conditions by exact rational elimination.
