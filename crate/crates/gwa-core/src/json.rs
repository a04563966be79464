//! JSON schema for algebra presentations:
//!
//! ```json
//! {"base": {"vars": ["h"], "laurent": [false], "field": "rational"},
//!  "a": ["h"],
//!  "sigma": [{"h": "h-1"}],
//!  "sigma_inverse": [{"h": "h+1"}]}
//! ```
//!
//! `field` is either the string `"rational"` or `{"cyclotomic": m}`.
//! Variables omitted from a sigma map are fixed.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::automorphism::RingAutomorphism;
use crate::coeff::FieldDesc;
use crate::error::{KernelError, Result};
use crate::expr::parse_poly;
use crate::gwa::GwaPresentation;
use crate::poly::{Poly, PolyRing};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub base: BaseSpec,
    pub a: Vec<String>,
    pub sigma: Vec<BTreeMap<String, String>>,
    pub sigma_inverse: Vec<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BaseSpec {
    pub vars: Vec<String>,
    pub laurent: Vec<bool>,
    pub field: FieldSpec,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Cyclotomic { cyclotomic: u32 },
}

impl FieldSpec {
    pub fn to_desc(&self) -> Result<FieldDesc> {
        match self {
            FieldSpec::Named(s) if s == "rational" => Ok(FieldDesc::Rational),
            FieldSpec::Named(s) => Err(KernelError::InvalidInput(format!(
                "unknown field `{s}`; use \"rational\" or {{\"cyclotomic\": m}}"
            ))),
            FieldSpec::Cyclotomic { cyclotomic } => {
                if *cyclotomic == 0 {
                    Err(KernelError::InvalidInput("conductor must be >= 1".into()))
                } else {
                    Ok(FieldDesc::Cyclotomic {
                        conductor: *cyclotomic,
                    })
                }
            }
        }
    }
}

fn images_from_map(
    ring: &Arc<PolyRing>,
    map: &BTreeMap<String, String>,
) -> Result<Vec<Poly>> {
    for name in map.keys() {
        if ring.var_index(name).is_none() {
            return Err(KernelError::VariableAbsent(name.clone()));
        }
    }
    let mut images = Vec::with_capacity(ring.nvars());
    for (i, v) in ring.vars().iter().enumerate() {
        match map.get(v) {
            Some(src) => images.push(parse_poly(src, ring)?),
            None => images.push(Poly::var(ring, i)),
        }
    }
    Ok(images)
}

pub fn presentation_from_spec(spec: &AlgebraSpec) -> Result<Arc<GwaPresentation>> {
    let field = spec.base.field.to_desc()?;
    let ring = PolyRing::new(spec.base.vars.clone(), spec.base.laurent.clone(), field)?;
    if spec.sigma.len() != spec.a.len() || spec.sigma_inverse.len() != spec.a.len() {
        return Err(KernelError::InvalidInput(
            "a, sigma, sigma_inverse must have the same length".into(),
        ));
    }
    let a: Vec<Poly> = spec
        .a
        .iter()
        .map(|s| parse_poly(s, &ring))
        .collect::<Result<_>>()?;
    let mut sigma = Vec::with_capacity(spec.sigma.len());
    for (fwd, inv) in spec.sigma.iter().zip(&spec.sigma_inverse) {
        sigma.push(RingAutomorphism::new(
            &ring,
            images_from_map(&ring, fwd)?,
            images_from_map(&ring, inv)?,
        )?);
    }
    GwaPresentation::new(ring, a, sigma)
}

pub fn presentation_from_json(src: &str) -> Result<Arc<GwaPresentation>> {
    let spec: AlgebraSpec =
        serde_json::from_str(src).map_err(|e| KernelError::InvalidInput(e.to_string()))?;
    presentation_from_spec(&spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    const WEYL1: &str = r#"{
        "base": {"vars": ["h"], "laurent": [false], "field": "rational"},
        "a": ["h"],
        "sigma": [{"h": "h-1"}],
        "sigma_inverse": [{"h": "h+1"}]
    }"#;

    #[test]
    fn first_weyl_round_trips() {
        let a = presentation_from_json(WEYL1).unwrap();
        assert_eq!(*a, *GwaPresentation::first_weyl());
    }

    #[test]
    fn quantum_plane_loads() {
        let src = r#"{
            "base": {"vars": ["h"], "laurent": [true], "field": "rational"},
            "a": ["h"],
            "sigma": [{"h": "2*h"}],
            "sigma_inverse": [{"h": "1/2*h"}]
        }"#;
        let a = presentation_from_json(src).unwrap();
        assert!(a.base().is_laurent(0));
    }

    #[test]
    fn cyclotomic_field_spec() {
        let src = r#"{
            "base": {"vars": ["h"], "laurent": [false], "field": {"cyclotomic": 3}},
            "a": ["h"],
            "sigma": [{"h": "h-1"}],
            "sigma_inverse": [{"h": "h+1"}]
        }"#;
        let a = presentation_from_json(src).unwrap();
        assert_eq!(
            a.base().field(),
            FieldDesc::Cyclotomic { conductor: 3 }
        );
    }

    #[test]
    fn bad_inverse_is_rejected() {
        let src = r#"{
            "base": {"vars": ["h"], "laurent": [false], "field": "rational"},
            "a": ["h"],
            "sigma": [{"h": "h-1"}],
            "sigma_inverse": [{"h": "h+2"}]
        }"#;
        assert!(matches!(
            presentation_from_json(src),
            Err(KernelError::NotInvertible(_))
        ));
    }
}
