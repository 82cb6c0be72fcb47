//! New fronts from old: grid Legendrianization, framed push-offs and
//! positive Whitehead doubles.

pub mod legendrianize;
pub mod pushoff;
pub mod whitehead;

pub use legendrianize::legendrianize;
pub use pushoff::{push_off, PushOffCase, PushOffResult};
pub use whitehead::{whitehead_double, whitehead_double_once};
