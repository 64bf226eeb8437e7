//! Alexander polynomials, finitely presented groups of nest-curve
//! complements, and Seiberg-Witten basic classes under knot surgery.

pub mod cli;
pub mod fpgroups;
pub mod knots;
pub mod laurent;
pub mod nestcurves;
pub mod swcalc;

mod json_int;
