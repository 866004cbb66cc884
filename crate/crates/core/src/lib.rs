//! Indentation detection on the boundary of solid binary blobs.
//!
//! The pipeline:
//!
//! 1. [`raster`]: decode a binary mask, label 8-connected blobs and trace
//!    each blob's outer boundary into a closed counter-clockwise point loop.
//! 2. [`spectral`]: move the coordinate channels to the frequency domain,
//!    optionally low-pass them, and rebuild first and second derivatives.
//! 3. [`curvature`]: combine the derivatives into a signed curvature profile.
//! 4. [`indent`]: split the profile into same-sign regions and keep the
//!    concave ones whose peak curvature exceeds a severity threshold.
//!
//! [`hull`] implements the convex-hull gap counting baseline and [`synth`]
//! produces shapes with closed-form curvature for testing.

pub mod curvature;
pub mod error;
pub mod geom;
pub mod hull;
pub mod indent;
pub mod raster;
pub mod spectral;
pub mod synth;

pub use curvature::{curvature_profile, radius_at, total_turning, CurvatureProfile, RadiusOfCurvature};
pub use error::{DecodeError, Error, Result};
pub use geom::{BoundaryTrace, Point};
pub use hull::{convex_hull, hull_gap_count, HullGapReport};
pub use indent::{count_indentations, segment_regions, CurvatureRegion, IndentationReport, Segmentation, Severity, Sign};
pub use raster::{decode_mask, label_components, trace_boundary, BinaryMask, Component, MaskFormat};
pub use spectral::{apply_lowpass, forward, inverse, reconstruct_derivative, resample_uniform, DerivativeOperator, SpectralCurve};
