//! Elementary hash functions, the sampling operator, composite bucket
//! keys, and the inner-product-search transform.

pub mod fwht;
pub mod mips;
pub mod params;
pub mod sampling;

pub use fwht::fwht_normalized;
pub use mips::{mips_transform, MipsMode, MipsTransform};
pub use params::{composite_hash_key, AcHashParts, CompositeKey, HasherParams, Scheme};
pub use sampling::{apply_sampling, SamplingPlan};
