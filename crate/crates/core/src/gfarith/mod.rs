//! Scalars: F_p, polynomials over F_p, and the extension fields F_{p^k}.

mod ext;
mod factor;
mod field;
mod poly;

pub use ext::{ExtField, FqElem};
pub use factor::{factor, irreducibles, is_irreducible, Factorization};
pub use field::{PrimeField, MAX_CHARACTERISTIC};
pub use poly::{monic_polys, FpPoly};
