//! Computer algebra for finite-dimensional pointed Hopf algebras over finite
//! fields: exact field arithmetic, noncommutative rewriting with Diamond Lemma
//! confluence checks, coproduct and antipode machinery, Hochschild-type
//! cohomology ranks, and a catalog of parametrized presentations.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod cohomology;
pub mod field;
pub mod freealg;
pub mod hopf;
pub mod linalg;
pub mod rewrite;
