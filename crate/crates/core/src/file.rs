//! JSON group files: `{"name":..,"degree":n,"generators":[[..],..]}`.
//!
//! Serialization is compact with keys in the order name, degree,
//! generators; `name` is omitted when absent.

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct RawGroupFile {
    #[serde(default)]
    name: Option<String>,
    degree: i64,
    generators: Vec<Vec<i64>>,
}

pub fn parse_group_file(text: &str) -> Result<GroupFile> {
    let raw: RawGroupFile =
        serde_json::from_str(text).map_err(|e| GroupError::FormatError(e.to_string()))?;
    if raw.degree <= 0 {
        return Err(GroupError::FormatError(format!(
            "degree must be positive, got {}",
            raw.degree
        )));
    }
    let degree = raw.degree as usize;
    let mut generators = Vec::with_capacity(raw.generators.len());
    for (k, images) in raw.generators.iter().enumerate() {
        if images.len() != degree {
            return Err(GroupError::FormatError(format!(
                "generator {k} has {} images, expected {degree}",
                images.len()
            )));
        }
        let perm = Permutation::from_images(images)?;
        generators.push(perm.images().to_vec());
    }
    Ok(GroupFile {
        name: raw.name,
        degree,
        generators,
    })
}

pub fn serialize_group_file(file: &GroupFile) -> String {
    serde_json::to_string(file).expect("group file serializes")
}

impl GroupFile {
    pub fn from_group(g: &FiniteGroup, name: Option<&str>) -> Self {
        GroupFile {
            name: name.map(str::to_owned),
            degree: g.degree(),
            generators: g
                .generator_perms()
                .iter()
                .map(|p| p.images().to_vec())
                .collect(),
        }
    }

    pub fn permutations(&self) -> Result<Vec<Permutation>> {
        self.generators
            .iter()
            .map(|g| Permutation::from_images(g))
            .collect()
    }

    pub fn to_group(&self) -> Result<FiniteGroup> {
        FiniteGroup::generate(self.degree, &self.permutations()?)
    }

    pub fn to_group_with_cap(&self, cap: usize) -> Result<FiniteGroup> {
        FiniteGroup::generate_with_cap(self.degree, &self.permutations()?, cap)
    }
}

pub fn read_group_file(path: &std::path::Path) -> Result<GroupFile> {
    let text = std::fs::read_to_string(path)?;
    parse_group_file(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_file() {
        let f = parse_group_file(r#"{"degree":3,"generators":[[1,0,2],[1,2,0]]}"#).unwrap();
        assert_eq!(f.to_group().unwrap().order(), 6);
        assert_eq!(f.name, None);
    }

    #[test]
    fn trivial_file() {
        let f = parse_group_file(r#"{"degree":1,"generators":[]}"#).unwrap();
        assert_eq!(f.to_group().unwrap().order(), 1);
    }

    #[test]
    fn non_bijection_is_malformed() {
        let err = parse_group_file(r#"{"degree":3,"generators":[[0,0,2]]}"#).unwrap_err();
        assert!(matches!(err, GroupError::MalformedPermutation(_)));
        let err = parse_group_file(r#"{"degree":3,"generators":[[0,-1,2]]}"#).unwrap_err();
        assert!(matches!(err, GroupError::MalformedPermutation(_)));
    }

    #[test]
    fn wrong_arity_is_format_error() {
        let err = parse_group_file(r#"{"degree":3,"generators":[[0,1]]}"#).unwrap_err();
        assert!(matches!(err, GroupError::FormatError(_)));
        let err = parse_group_file(r#"{"degree":3}"#).unwrap_err();
        assert!(matches!(err, GroupError::FormatError(_)));
        assert!(parse_group_file("not json").is_err());
    }

    #[test]
    fn exact_serialization() {
        let f = GroupFile {
            name: Some("S3".into()),
            degree: 3,
            generators: vec![vec![1, 0, 2], vec![1, 2, 0]],
        };
        assert_eq!(
            serialize_group_file(&f),
            r#"{"name":"S3","degree":3,"generators":[[1,0,2],[1,2,0]]}"#
        );
        let anon = GroupFile { name: None, ..f };
        assert_eq!(
            serialize_group_file(&anon),
            r#"{"degree":3,"generators":[[1,0,2],[1,2,0]]}"#
        );
    }
}
