//! Walls, semistable cones and GIT fans of quiver moduli problems, computed
//! in exact arithmetic.

pub mod error;
pub mod gitfan;
pub mod polyhedral;
pub mod quiver;
pub mod schofield;
pub mod special;
pub mod walls;

pub use error::{Error, ErrorKind, Result};
pub use polyhedral::{Cone, ConeKey, HRep, VRep};
pub use quiver::{pair, subdim_vectors, DimVector, Quiver, StabParam};
pub use schofield::Session;
pub use walls::{project_along, WallTable};
pub use gitfan::{fan_f_vector, Fan, FanCone};
