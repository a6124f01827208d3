//! Hopf structure on finite quotients: coproduct tables, axiom checks,
//! antipode, group-likes, skew-primitives and the coradical filtration.

mod algebra;
mod antipode;
mod bialgebra;
mod identities;
mod iso;
mod presentation;
mod structure;
mod tails;
mod yd;

pub use algebra::{AlgebraError, FiniteAlgebra};
pub use antipode::{Antipode, AntipodeReport};
pub use bialgebra::{BialgebraReport, HopfAlgebra, HopfError};
pub use identities::{verify_identity, Identity, IdentityCheck, IdentityError, IdentityReport};
pub use iso::{find_pq_iso, iso_check, IsoReport, PqFamily, PqIsoError, PqIsoWitness};
pub use presentation::{HopfPresentation, PresentationError, PresentationSpec};
pub use structure::{FiltrationReport, GroupLikes, SkewPrimitiveSpace};
pub use tails::{coproduct_tail, tail_coefficients, TailKind};
pub use yd::{bosonize, YDRealization, YdElement, YdError, YdGroup};
