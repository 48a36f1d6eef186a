//! Interactive certificates for polynomial-matrix computations over prime fields.
//!
//! The crate is layered bottom-up: [`ff`] (field arithmetic), [`upoly`]
//! (polynomials and rational functions), [`matfield`] (linear algebra over the
//! field), [`polymat`] (polynomial matrices and the Prover-side oracles),
//! [`transcript`] (messages, encoding, challenges), [`protocols`] (Verifier
//! state machines and honest Provers) and [`adversary`] (cheating Provers and
//! soundness experiments).

pub mod ff;
pub mod upoly;
pub mod matfield;
pub mod polymat;
pub mod transcript;
pub mod protocols;
pub mod adversary;
pub mod instances;
