//! Complexified Pauli quaternions and the kinematics built on them.
//!
//! The algebra is spanned by `σ₀ = 1, σx, σy, σz` over the complex numbers,
//! with `σx σy = i σz` (and cyclic). On top of it the crate provides:
//!
//! * [`biquat`]: the product, quaternionic conjugate, square norm and inverse.
//! * [`reflsum`]: the reflection-symmetric sum `(A + B + iA×B) / (1 + A·B)`,
//!   reciprocal vectors, and velocity composition.
//! * [`lorentz`]: boost rotors acting on events, the ordinary real
//!   Lorentz boost for comparison, and the `c → 0` rotational limits.
//! * [`pauli_matrix`]: the 2×2 complex matrix representation, used as an
//!   independent evaluation path, and spin-term extraction.
//! * [`check`]: seeded property campaigns over every identity above.
//!
//! Dot and cross products are bilinear throughout. Nothing in the algebra
//! ever takes a complex conjugate of a component.
//!
//! ```
//! use pauliquat::{BiQuaternion, CVec3};
//!
//! let sx = BiQuaternion::SIGMA_X;
//! let sy = BiQuaternion::SIGMA_Y;
//! assert_eq!(sx * sy, BiQuaternion::SIGMA_Z.scale(pauliquat::I));
//! ```

pub mod biquat;
pub mod check;
pub mod cli;
pub mod error;
pub mod lorentz;
pub mod pauli_matrix;
pub mod reflsum;
pub mod vector;

pub use biquat::BiQuaternion;
pub use error::{Error, Result};
pub use lorentz::{BoostRotor, Event, LimitKind, RotationalLimitValue, TransformedEvent};
pub use pauli_matrix::Mat2c;
pub use reflsum::{ReflSumResult, Sign};
pub use vector::{CVec3, Cplx, RVec3};

/// The imaginary unit, `β` in the basis relation `σx σy = β σz`.
pub const I: Cplx = Cplx::new(0.0, 1.0);

/// Smallest `|A A*|` for which an inverse is returned.
pub const EPS_NULL: f64 = 1e-12;

/// Smallest denominator magnitude accepted by the reflection-symmetric
/// sum, reciprocals and velocity compositions.
pub const EPS_DEG: f64 = 1e-9;
