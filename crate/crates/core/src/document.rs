//! JSON document for automorphisms:
//! `{"algebra": "poly" | "free", "n": 2, "images": ["x1 + x2^2", "x2"]}`.

use serde::{Deserialize, Serialize};

use crate::endomorphism::Endomorphism;
use crate::error::{Error, Result};
use crate::parse::parse_polynomial;
use crate::polynomial::AlgebraMode;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismDocument {
    pub algebra: AlgebraMode,
    pub n: usize,
    pub images: Vec<String>,
}

impl AutomorphismDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    /// Parses every image; an image syntax error is reported with its index.
    pub fn to_endomorphism(&self) -> Result<Endomorphism> {
        if self.n == 0 {
            return Err(Error::Document("n must be at least 1".into()));
        }
        if self.images.len() != self.n {
            return Err(Error::Document(format!(
                "expected {} images, found {}",
                self.n,
                self.images.len()
            )));
        }
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(k, s)| {
                parse_polynomial(s, self.algebra, self.n).map_err(|mut e| {
                    e.message = format!("image {}: {}", k + 1, e.message);
                    Error::Parse(e)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Endomorphism::new(images)
    }
}

impl From<&Endomorphism> for AutomorphismDocument {
    fn from(phi: &Endomorphism) -> Self {
        AutomorphismDocument {
            algebra: phi.mode(),
            n: phi.n(),
            images: phi.images().iter().map(ToString::to_string).collect(),
        }
    }
}

pub fn parse_automorphism(json: &str) -> Result<Endomorphism> {
    AutomorphismDocument::from_json(json)?.to_endomorphism()
}

pub fn automorphism_json(phi: &Endomorphism) -> String {
    AutomorphismDocument::from(phi).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let json = r#"{"algebra":"free","n":2,"images":["x1 + x2*x1","x2"]}"#;
        let phi = parse_automorphism(json).unwrap();
        assert_eq!(phi.mode(), AlgebraMode::Free);
        assert_eq!(automorphism_json(&phi), r#"{"algebra":"free","n":2,"images":["x2*x1 + x1","x2"]}"#);
        assert_eq!(parse_automorphism(&automorphism_json(&phi)).unwrap(), phi);
    }

    #[test]
    fn rejects_bad_documents() {
        let wrong_count = r#"{"algebra":"poly","n":3,"images":["x1","x2"]}"#;
        assert!(matches!(parse_automorphism(wrong_count), Err(Error::Document(_))));
        let bad_algebra = r#"{"algebra":"lie","n":1,"images":["x1"]}"#;
        assert!(matches!(parse_automorphism(bad_algebra), Err(Error::Document(_))));
        let bad_image = r#"{"algebra":"poly","n":2,"images":["x1","x3"]}"#;
        match parse_automorphism(bad_image) {
            Err(Error::Parse(e)) => {
                assert_eq!(e.offset, 1);
                assert!(e.message.starts_with("image 2"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
