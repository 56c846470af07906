pub mod cli;
pub mod convexgeom;
pub mod exactnum;
pub mod groebner;
pub mod matrixpencil;
pub mod mpoly;
pub mod realroots;
