//! Chest-radiograph pneumonia classification pipeline.
//!
//! The crate covers the full workflow for frontal chest x-rays: manifest-driven
//! dataset ingestion, histogram-based contrast enhancement, U-Net lung
//! segmentation, CNN classifiers (a small base model and a densely connected
//! backbone with binary / multiclass / hierarchical heads), gradient-based
//! visual explanation, and evaluation reports with confusion matrices and
//! ROC/AUC.
//!
//! Most capabilities have a runnable example under `examples/`; the `cxr`
//! binary exposes the same stages as subcommands.

pub mod checkpoint;
pub mod cli;
pub mod enhance;
pub mod eval;
pub mod explain;
pub mod gray;
pub mod ingest;
pub mod lungseg;
pub mod models;
pub mod nn;
pub mod npy;
pub mod synth;
