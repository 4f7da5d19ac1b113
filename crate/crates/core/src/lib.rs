//! Tournaments (complete oriented graphs) and their degree invariants.
//!
//! The crate covers signed degrees and directionality, counting of cyclic
//! triads, constant-time prediction of how both change under a single edge
//! reversal, and an exhaustive verification engine that checks the
//! identities tying them together over every labeled tournament up to a
//! given size.
//!
//! ```
//! use tournament_core::{transitive_tournament, triads};
//!
//! let t = transitive_tournament(4);
//! assert_eq!(t.local_directionality(), 20);
//! assert_eq!(triads::c3_fast(&t), 0);
//! ```

pub mod enumeration;
pub mod error;
pub mod flip;
pub mod report;
pub mod tournament;
pub mod triads;
pub mod trn;

pub use enumeration::{
    enumerate_all, random_tournament, rotational_tournament, transitive_tournament,
    verify_property, Counterexample, Detail, Instance, Property, SampleSpec, Sweep,
    VerificationReport,
};
pub use error::{Error, Result};
pub use flip::{
    cone_extend, flip_edge, flip_triad_census, predict_flip, ConeDirection, FlipCase, FlipReport,
    IncrementalTracker, TriadCensus,
};
pub use report::{analyze_report, AnalysisReport};
pub use tournament::{DegreeSummary, Tournament};
pub use triads::TriadClass;
pub use trn::{parse_trn, write_trn};
