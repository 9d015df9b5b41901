//! Homotopy coherent diagrams over finite posets and their homotopy
//! colimits.

pub mod coend;
pub mod cofinal;
pub mod compare;
pub mod diagram;
pub mod file;
pub mod lemma1;
pub mod lemma2;
pub mod pipeline;
pub mod rectify;

pub use coend::{classical_hocolim, coend_phi, coend_psi, fresh_apex, ClassicalHocolim, Cyl, Hocolim};
pub use compare::{compare_models, embedding, epsilon_map, kappa_map, restriction_map, tau_map, ModelComparison};
pub use diagram::{coherent_from_strict, nondegenerate_atoms, AtomAction, CoherentDiagram, ConeExtension, StrictDiagram};
pub use lemma1::{lemma1_decomposition, Lemma1, Lemma1Report};
pub use lemma2::{alpha_pullback_check, lemma2_pushout_verify, Lemma2Report, NerveCheck};
pub use rectify::{standard_rectification, ObjectAudit, Rectification, RectificationAudit};
pub use cofinal::{cofinality_check, CofinalityReport, CommaAudit};
pub use pipeline::{total_space_pipeline, FaceAudit, PipelineReport, TotalSpace};
pub use file::{load_complex, load_diagram, ComplexFile, DiagramFile, LoadedDiagram};
