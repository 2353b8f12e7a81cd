//! Weak order intervals of the symmetric group, the diagrams and posets that
//! parametrize them, and the 0-Hecke modules they carry.

pub mod caps;
pub mod classes;
pub mod comp;
pub mod descent;
pub mod diagram;
pub mod error;
pub mod exec;
pub mod families;
pub mod hecke;
pub mod perm;
pub mod poset;
pub mod subset;
pub mod verify;

pub use caps::Caps;
pub use comp::Composition;
pub use diagram::{Diagram, Filling};
pub use error::{Error, Result};
pub use exec::Mode;
pub use perm::{Perm, Side, WeakInterval};
pub use poset::Poset;
pub use subset::Subset;
