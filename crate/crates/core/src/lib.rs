//! Two-sided quaternion Fourier transform on uniform 2D grids, closed-form
//! quaternion Gaussian and Hermite-type signal families, and the
//! Miyachi / Hardy / Cowling-Price uncertainty functionals.
//!
//! The crate is `no_std` and needs only `alloc`; file formats and the
//! command-line front end live in the `hqft` crate.

#![no_std]

extern crate alloc;

mod error;
mod fft;

pub mod analytic;
pub mod field;
pub mod grid;
pub mod hermite;
pub mod qft;
pub mod quat;
pub mod up;

pub use analytic::{verify_envelope, AnalyticSignal, Envelope, EnvelopeFit, ExactTransform, Polynomial2};
pub use error::{Error, Result};
pub use field::{Domain, Frequency, QField, Samples, Spatial, SpectrumField};
pub use grid::Grid2D;
pub use qft::{check_scaling, iqft, iqft_direct, iqft_on, qft_direct, qft_fast, ScalingReport};
pub use quat::Quaternion;
pub use up::{
    classify, cowling_price_check, evaluate, hardy_check, miyachi_functional, miyachi_nested, witness_subcritical,
    CowlingPriceReport, HardyReport, NestedPoint, NestedSeries, NestedVerdict, Regime, UpParams, UpReport, WindowValue,
};
