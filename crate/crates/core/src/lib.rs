pub mod bigint_serde;
pub mod divide_map;
pub mod dynkin;
pub mod error;
pub mod matrix;
pub mod seifert;

pub use divide_map::*;
pub use dynkin::{body_euler, build_gamma, check_flag_edges, counts, gamma_to_dot, Gamma, GammaCounts};
pub use error::{DivideError, Result};
pub use matrix::IntMatrix;
pub use seifert::{char_poly, lefschetz_number, matrix_n, monodromy_matrix, newton_power_sums, signature, trace_powers, CharPoly};
pub mod generators;
pub mod theorem;
pub mod walks;
pub mod report;
pub mod render;
