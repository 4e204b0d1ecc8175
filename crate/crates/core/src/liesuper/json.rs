use serde::{Deserialize, Serialize};

use super::{LieSuperalgebra, MatrixRealization};
use crate::error::{Error, Result};
use crate::field::sparse::add_entry;
use crate::field::{ExactMatrix, Field, FieldTag, SparseVec};
use crate::superspace::{BasisVector, GradedSuperSpace, Parity};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub basis: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketJson {
    pub left: String,
    pub right: String,
    pub result: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub parities: Vec<Parity>,
    pub matrices: Vec<Vec<Vec<String>>>,
}

/// Serialized form of a [`LieSuperalgebra`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub basis: Vec<BasisVector>,
    pub brackets: Vec<BracketJson>,
    pub field: FieldTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationJson>,
}

impl<F: Field> LieSuperalgebra<F> {
    /// Nonzero brackets are emitted once, for `left ≤ right` in basis order.
    pub fn to_json(&self) -> AlgebraJson {
        let n = self.dim();
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in a..n {
                let v = self.bracket_basis(a, b);
                if v.is_empty() {
                    continue;
                }
                brackets.push(BracketJson {
                    left: self.name(a).to_string(),
                    right: self.name(b).to_string(),
                    result: v
                        .iter()
                        .map(|(&c, x)| TermJson {
                            basis: self.name(c).to_string(),
                            coeff: x.to_scalar_string(),
                        })
                        .collect(),
                });
            }
        }
        let representation = self.realization.as_ref().map(|r| RepresentationJson {
            parities: r.rep.clone(),
            matrices: r
                .matrices
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|i| m.row(i).iter().map(|x| x.to_scalar_string()).collect())
                        .collect()
                })
                .collect(),
        });
        AlgebraJson {
            basis: self.space.basis().to_vec(),
            brackets,
            field: F::TAG,
            representation,
        }
    }

    /// Reads the schema. Rational data may be loaded over ℚ(i), not the
    /// other way round. The result is not validated here.
    pub fn from_json(j: &AlgebraJson) -> Result<Self> {
        if j.field == FieldTag::Qi && F::TAG == FieldTag::Q {
            return Err(Error::Parse("algebra is defined over Qi, requested Q".into()));
        }
        let space = GradedSuperSpace::new(j.basis.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut alg = LieSuperalgebra::abelian(space);
        let idx = |alg: &LieSuperalgebra<F>, name: &str| {
            alg.index_of(name)
                .ok_or_else(|| Error::Parse(format!("unknown basis element {name:?}")))
        };
        for br in &j.brackets {
            let a = idx(&alg, &br.left)?;
            let b = idx(&alg, &br.right)?;
            let mut v = SparseVec::new();
            for t in &br.result {
                let c = idx(&alg, &t.basis)?;
                let x = F::parse_scalar(&t.coeff).map_err(|e| Error::Parse(e.to_string()))?;
                add_entry(&mut v, c, x);
            }
            alg.set_bracket(a, b, v);
        }
        if let Some(r) = &j.representation {
            let d = r.parities.len();
            let mut matrices = Vec::new();
            for m in &r.matrices {
                if m.len() != d || m.iter().any(|row| row.len() != d) {
                    return Err(Error::Parse("representation matrix has wrong shape".into()));
                }
                let rows = m
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|s| F::parse_scalar(s).map_err(|e| Error::Parse(e.to_string())))
                            .collect::<Result<Vec<F>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                matrices.push(ExactMatrix::from_rows(d, rows));
            }
            if matrices.len() != alg.dim() {
                return Err(Error::Parse("one representation matrix per basis element".into()));
            }
            alg.realization = Some(MatrixRealization {
                rep: r.parities.clone(),
                matrices,
            });
        }
        Ok(alg)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: AlgebraJson = serde_json::from_str(s)?;
        Self::from_json(&j)
    }
}
