//! Generators for every graph used by the family construction.

pub mod assembly;
pub mod catalog;
mod expansion;
pub mod gadget;
mod ladder;
mod petersen;
mod ring;

pub use assembly::{assemble_hg, AssembledHG, AssemblyError, At, FamilyParams, LadderPattern, Rung, Strand, StrandPos};
pub use expansion::{meredith_expand, triangle_family, triangle_replace, Expansion, ExpansionError};
pub use gadget::{find_gadget, petersen_triangle_hosts, CandidateSpace, GadgetError, GadgetSearchError, GadgetSpec, SearchSummary};
pub use petersen::{double_one_factor, perfect_matchings, petersen, MatchingError};
pub use ladder::{synthesize_ladder_pattern, try_pattern, NearMiss, PatternTrial, SynthesisError};
pub use ring::{block_ring, BlockTemplate, RingError};
