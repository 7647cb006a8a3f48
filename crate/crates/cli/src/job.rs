//! Job files: a field, a generator and optional deformation parameters.

use serde::Deserialize;
use skewcoh::deformation::{adversarial_params, builtin_transvection_gamma, DeformationError, DeformationParams};
use skewcoh::{CyclicGroup, FieldSpec, GroupError, LinalgError, Matrix, Scalar};
use thiserror::Error;

/// Anything wrong with the input; maps to exit code 2.
#[derive(Debug, Error)]
pub enum JobError {
    #[error("cannot read {path}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed job: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad field: {0}")]
    Field(LinalgError),
    #[error("bad entry {0:?}")]
    Entry(String),
    #[error("generator has no rows")]
    EmptyGenerator,
    #[error("generator row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("bad SKEWCOH_MAX_ORDER value {0:?}")]
    MaxOrderEnv(String),
    #[error("deformation: {0}")]
    Deformation(#[from] DeformationError),
    #[error("preset {preset:?} needs the transvection [[1,1],[0,1]] over a prime field")]
    PresetNeedsTransvection { preset: String },
    #[error("deformations need a prime field (use --deform-prime or a prime job field)")]
    DeformNeedsPrime,
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldJob {
    Prime { p: u64 },
    Rational,
}

/// A matrix entry: an integer or a string like `"-3"` or `"2/5"`.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    Builtin,
    Zero,
    Adversarial,
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum DeformationJob {
    Preset {
        preset: Preset,
    },
    /// `lambda[i][k]` is `λ(g^i ⊗ v_{k+1})` as `N` coefficients; `kappa_v1v2` is `2 × N`.
    Explicit {
        lambda: Vec<[Vec<Entry>; 2]>,
        kappa_v1v2: Vec<Vec<Entry>>,
    },
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct JobSpec {
    pub field: FieldJob,
    pub generator: Vec<Vec<Entry>>,
    #[serde(default)]
    pub deformation: Option<DeformationJob>,
}

impl JobSpec {
    pub fn load(path: &str) -> Result<Self, JobError> {
        let text = std::fs::read_to_string(path).map_err(|source| JobError::Io {
            path: path.to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, JobError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn field(&self) -> Result<FieldSpec, JobError> {
        match self.field {
            FieldJob::Prime { p } => FieldSpec::prime(p).map_err(JobError::Field),
            FieldJob::Rational => Ok(FieldSpec::Rational),
        }
    }

    pub fn generator_matrix(&self) -> Result<Matrix, JobError> {
        let field = self.field()?;
        let n = self.generator.len();
        if n == 0 {
            return Err(JobError::EmptyGenerator);
        }
        let rows = entries_to_rows(field, &self.generator, n)?;
        Matrix::from_rows(field, n, rows).map_err(JobError::Field)
    }

    pub fn group(&self, max_order: usize) -> Result<CyclicGroup, JobError> {
        let field = self.field()?;
        Ok(CyclicGroup::from_generator_with_bound(field, self.generator_matrix()?, max_order)?)
    }
}

fn entry(field: FieldSpec, e: &Entry) -> Result<Scalar, JobError> {
    match e {
        Entry::Int(x) => Ok(field.from_i64(*x)),
        Entry::Text(t) => field.parse_scalar(t).map_err(|_| JobError::Entry(t.clone())),
    }
}

fn entries_to_rows(field: FieldSpec, rows: &[Vec<Entry>], width: usize) -> Result<Vec<Vec<Scalar>>, JobError> {
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            if row.len() != width {
                return Err(JobError::Ragged {
                    row: r,
                    expected: width,
                    found: row.len(),
                });
            }
            row.iter().map(|e| entry(field, e)).collect()
        })
        .collect()
}

/// `max_order` flag, then `SKEWCOH_MAX_ORDER`, then the library default.
pub fn resolve_max_order(flag: Option<usize>, env: Option<String>) -> Result<usize, JobError> {
    if let Some(k) = flag {
        return Ok(k);
    }
    match env {
        Some(v) => v.trim().parse().map_err(|_| JobError::MaxOrderEnv(v)),
        None => Ok(skewcoh::group::DEFAULT_MAX_ORDER),
    }
}

fn is_transvection(gr: &CyclicGroup) -> bool {
    let f = gr.field();
    gr.dim() == 2 && *gr.generator() == Matrix::from_i64(f, &[&[1, 1], &[0, 1]])
}

/// Parameters for `deform`. `prime` replaces the job's group by the transvection over `F_p`.
pub fn deformation_params(job: &JobSpec, prime: Option<u64>, max_order: usize) -> Result<DeformationParams, JobError> {
    let group = match prime {
        Some(p) => {
            let f = FieldSpec::prime(p).map_err(JobError::Field)?;
            CyclicGroup::from_generator_with_bound(f, Matrix::from_i64(f, &[&[1, 1], &[0, 1]]), max_order)?
        }
        None => job.group(max_order)?,
    };
    let p = match group.field() {
        FieldSpec::Prime(p) => p,
        FieldSpec::Rational => return Err(JobError::DeformNeedsPrime),
    };
    let chosen = job.deformation.clone().unwrap_or(DeformationJob::Preset { preset: Preset::Builtin });
    match chosen {
        DeformationJob::Preset { preset } => {
            if preset != Preset::Zero && !is_transvection(&group) {
                return Err(JobError::PresetNeedsTransvection {
                    preset: format!("{preset:?}").to_lowercase(),
                });
            }
            Ok(match preset {
                Preset::Builtin => builtin_transvection_gamma(p)?,
                Preset::Adversarial => adversarial_params(p)?,
                Preset::Zero => DeformationParams::zero(group)?,
            })
        }
        DeformationJob::Explicit { lambda, kappa_v1v2 } => {
            let f = group.field();
            let n = group.order();
            let lambda = lambda
                .iter()
                .map(|[a, b]| {
                    let conv = |v: &Vec<Entry>| -> Result<Vec<Scalar>, JobError> {
                        v.iter().map(|e| entry(f, e)).collect()
                    };
                    Ok([conv(a)?, conv(b)?])
                })
                .collect::<Result<Vec<_>, JobError>>()?;
            let kappa = Matrix::from_rows(f, n, entries_to_rows(f, &kappa_v1v2, n)?).map_err(JobError::Field)?;
            Ok(DeformationParams::new(group, lambda, kappa)?)
        }
    }
}
