//! Utility-aware multimodal contrastive learning at desk scale.
//!
//! The crate trains small dual encoders with a utility-aware InfoNCE
//! objective, estimates quadratic visual-demand models from observational
//! data, ranks candidate images by a utility-regularized similarity score,
//! and numerically checks the objective's information-theoretic bound and
//! its conditional-logit reading.
//!
//! Module map:
//! - [`imaging`]: image decoding and raw visual attributes (colorfulness,
//!   brightness, symmetry, aesthetic proxy) plus min-max scaling.
//! - [`encoder`]: deterministic featurizers and the trainable image/text
//!   towers producing unit-norm embeddings.
//! - [`contrastive`]: standard and utility-aware InfoNCE, exact gradients,
//!   and the Adam training loop.
//! - [`demand`]: quadratic demand regression by pivoted-QR least squares.
//! - [`scoring`]: the visual-utility term, utility-aware scores, and
//!   candidate ranking.
//! - [`analysis`]: mutual-information bound checks, conditional-logit
//!   equivalence, and occlusion heatmaps.
//! - [`datagen`]: procedural synthetic corpora with controlled attributes
//!   and planted demand outcomes.
//! - [`dataset`]: CSV manifests and JSON schemas shared by the pipeline.

pub mod analysis;
pub mod contrastive;
pub mod datagen;
pub mod dataset;
pub mod demand;
pub mod encoder;
pub mod error;
pub mod imaging;
pub mod numeric;
pub mod scoring;

pub use error::{Error, Result};
