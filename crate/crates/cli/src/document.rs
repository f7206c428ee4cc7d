//! The JSON document format for complexes, involutions and coordinates.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use symrig::rigidity::{Framework, PointGroup, Vector};
use symrig::{Involution, MultiComplex, SymmetricComplex, VertexId};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub t: usize,
    pub d: usize,
}

/// A k-multicomplex with optional involution, coordinates and point group.
///
/// Coordinates are rationals written as `"num/den"` (or plain integers) so
/// documents stay exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub k: usize,
    pub facets: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<[u32; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<BTreeMap<u32, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupDoc>,
}

impl ComplexDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid document: {e}")))
    }

    pub fn read(path: &str) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_complex(s: &MultiComplex) -> Self {
        let counts: Vec<(Vec<u32>, usize)> = s.counts().map(|(f, m)| (f.iter().map(|v| v.0).collect(), m)).collect();
        let simple = counts.iter().all(|&(_, m)| m == 1);
        ComplexDocument {
            k: s.dim(),
            multiplicities: (!simple).then(|| counts.iter().map(|&(_, m)| m).collect()),
            facets: counts.into_iter().map(|(f, _)| f).collect(),
            involution: None,
            coordinates: None,
            group: None,
        }
    }

    pub fn from_symmetric(s: &SymmetricComplex) -> Self {
        ComplexDocument::from_complex(s.complex()).with_involution(s.involution())
    }

    pub fn with_involution(mut self, sigma: &Involution) -> Self {
        self.involution = Some(sigma.pairs().into_iter().map(|(a, b)| [a.0, b.0]).collect());
        self
    }

    pub fn with_coordinates(mut self, f: &Framework) -> Self {
        self.coordinates =
            Some(f.coords().iter().map(|(v, p)| (v.0, p.iter().map(|x| x.to_string()).collect())).collect());
        self
    }

    pub fn with_group(mut self, group: PointGroup) -> Self {
        self.group = Some(GroupDoc { t: group.t, d: group.d });
        self
    }

    /// Structural errors here are input errors.
    pub fn complex(&self) -> Result<MultiComplex, CliError> {
        let mults = match &self.multiplicities {
            Some(m) if m.len() != self.facets.len() => {
                return Err(CliError::Input(format!("{} multiplicities for {} facets", m.len(), self.facets.len())))
            }
            Some(m) => m.clone(),
            None => vec![1; self.facets.len()],
        };
        let mut counts = Vec::with_capacity(self.facets.len());
        for (f, m) in self.facets.iter().zip(mults) {
            let face = symrig::Face::new(f.iter().copied()).map_err(CliError::input)?;
            counts.push((face, m));
        }
        MultiComplex::from_counts(self.k, counts).map_err(CliError::input)
    }

    /// Involution errors (fixed or repeated vertices) are validation failures.
    pub fn involution(&self) -> Result<Option<Involution>, CliError> {
        let Some(pairs) = &self.involution else { return Ok(None) };
        Involution::new(pairs.iter().map(|&[a, b]| (VertexId(a), VertexId(b)))).map(Some).map_err(CliError::failure)
    }

    pub fn symmetric(&self) -> Result<SymmetricComplex, CliError> {
        let s = self.complex()?;
        let sigma = self.involution()?.ok_or_else(|| CliError::Failure("document has no involution".into()))?;
        symrig::symmetric::validate(&s, &sigma).map_err(CliError::failure)
    }

    pub fn point_group(&self) -> Result<Option<PointGroup>, CliError> {
        self.group.map(|g| PointGroup::new(g.t, g.d).map_err(CliError::input)).transpose()
    }

    pub fn coordinates(&self) -> Result<Option<BTreeMap<VertexId, Vector>>, CliError> {
        let Some(coords) = &self.coordinates else { return Ok(None) };
        let mut out = BTreeMap::new();
        for (&v, p) in coords {
            let parsed = p
                .iter()
                .map(|x| x.parse::<BigRational>().map_err(|e| CliError::Input(format!("coordinate {x:?} of {v}: {e}"))))
                .collect::<Result<Vector, _>>()?;
            out.insert(VertexId(v), parsed);
        }
        Ok(Some(out))
    }
}
