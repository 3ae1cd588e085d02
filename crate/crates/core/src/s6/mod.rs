//! The surface `S6(E)`: Δ, the affine model, the point-to-sextic-field
//! pipeline, orbit cases, twists and the `S3` cover.

mod cover;
mod formulas;
mod orbit;
mod pipeline;
mod surface;

pub use cover::{s3_cover, s3_cover_identity, s3_residual, twist_transport, twist_transport_inverse};
pub use formulas::{
    delta_formula, delta_oracle, delta_polynomial, delta_terms, s3_oracle, s3_rhs_polynomial, s6_equation,
    s6_rhs_polynomial, sextic_poly, sextic_poly_printed, sextic_resultant_oracle,
};
pub use orbit::{classify_orbit, classify_pair, orbit_classifier, rho_index, OrbitCase};
pub use pipeline::{point_to_sextic_field, Certificates, ConstructionRecord, K3Record, PointRecord, SexticConstruction};
pub use surface::{intersection_cubic, s6_model, to_short_weierstrass, S6Model, S6Point};
