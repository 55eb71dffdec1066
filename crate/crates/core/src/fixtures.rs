//! The three bundled examples: the nilpotent R^8 algebra, su(3), and the
//! left-invariant frame on S^3 x (S^1)^5.

use crate::error::{Error, Result};
use crate::io::InputDocument;

pub const R8: &str = include_str!("../fixtures/r8.json");
pub const SU3: &str = include_str!("../fixtures/su3.json");
pub const S3T5: &str = include_str!("../fixtures/s3t5.json");

pub const NAMES: [&str; 3] = ["r8", "su3", "s3t5"];

pub fn example_json(name: &str) -> Result<&'static str> {
    match name {
        "r8" => Ok(R8),
        "su3" => Ok(SU3),
        "s3t5" => Ok(S3T5),
        other => Err(Error::UnknownExample(other.to_string())),
    }
}

pub fn example_document(name: &str) -> Result<InputDocument> {
    InputDocument::from_json(example_json(name)?)
}
