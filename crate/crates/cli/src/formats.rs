//! JSON instance and solution files.
//!
//! ```text
//! {"kind":"hospital","departments":[..],"patients":[{"id":..,"compatible":[..]}],"beds":[{"id":..,"department":..}]}
//! {"kind":"courses","num_courses":N,"conflicts":[[i,j],..]}          i < j
//! {"kind":"hospital_solution","admitted":K,"assignment":{"p":"b",..}}
//! {"kind":"schedule","num_colors":K,"slots":{"0":c,..}}               0-based slots
//! ```

use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use flowcolor::{Assignment, Bed, Coloring, ConflictGraph, HospitalInstance, Patient};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InstanceFile {
    Hospital {
        departments: Vec<String>,
        patients: Vec<PatientRecord>,
        beds: Vec<BedRecord>,
    },
    Courses {
        num_courses: usize,
        conflicts: Vec<[usize; 2]>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatientRecord {
    pub id: String,
    pub compatible: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BedRecord {
    pub id: String,
    pub department: String,
}

/// A loaded, validated instance.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Hospital(HospitalInstance),
    Courses(ConflictGraph),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Hospital(_) => "hospital",
            Self::Courses(_) => "courses",
        }
    }
}

impl InstanceFile {
    pub fn from_hospital(inst: &HospitalInstance) -> Self {
        Self::Hospital {
            departments: inst.departments().to_vec(),
            patients: inst
                .patients()
                .iter()
                .map(|p| PatientRecord {
                    id: p.id.clone(),
                    compatible: p.compatible.clone(),
                })
                .collect(),
            beds: inst
                .beds()
                .iter()
                .map(|b| BedRecord {
                    id: b.id.clone(),
                    department: b.department.clone(),
                })
                .collect(),
        }
    }

    pub fn from_courses(g: &ConflictGraph) -> Self {
        Self::Courses {
            num_courses: g.num_courses(),
            conflicts: g.conflicts().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }

    pub fn into_instance(self) -> Result<Instance> {
        match self {
            Self::Hospital {
                departments,
                patients,
                beds,
            } => {
                let patients = patients
                    .into_iter()
                    .map(|p| Patient {
                        id: p.id,
                        compatible: p.compatible,
                    })
                    .collect();
                let beds = beds
                    .into_iter()
                    .map(|b| Bed {
                        id: b.id,
                        department: b.department,
                    })
                    .collect();
                Ok(Instance::Hospital(HospitalInstance::new(departments, patients, beds)?))
            }
            Self::Courses {
                num_courses,
                conflicts,
            } => {
                if let Some([i, j]) = conflicts.iter().find(|[i, j]| i >= j) {
                    bail!("conflict [{i}, {j}] must list the smaller course first");
                }
                let g = ConflictGraph::from_edges(num_courses, conflicts.into_iter().map(|[i, j]| (i, j)))?;
                Ok(Instance::Courses(g))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SolutionFile {
    HospitalSolution {
        admitted: usize,
        assignment: BTreeMap<String, String>,
    },
    Schedule {
        num_colors: usize,
        #[serde(deserialize_with = "course_keys")]
        slots: BTreeMap<usize, usize>,
    },
}

// Buffered (tagged) deserialization hands map keys over as strings.
fn course_keys<'de, D: serde::Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, usize>, D::Error> {
    BTreeMap::<String, usize>::deserialize(d)?
        .into_iter()
        .map(|(k, v)| {
            k.parse()
                .map(|k| (k, v))
                .map_err(|_| serde::de::Error::custom(format!("course key {k:?} is not a non-negative integer")))
        })
        .collect()
}

impl SolutionFile {
    pub fn from_assignment(a: &Assignment) -> Self {
        Self::HospitalSolution {
            admitted: a.admitted_count(),
            assignment: a.assigned.clone(),
        }
    }

    pub fn from_coloring(c: &Coloring) -> Self {
        Self::Schedule {
            num_colors: c.num_colors(),
            slots: c.colors().iter().copied().enumerate().collect(),
        }
    }

    /// Instance kind this solution answers.
    pub fn instance_kind(&self) -> &'static str {
        match self {
            Self::HospitalSolution { .. } => "hospital",
            Self::Schedule { .. } => "courses",
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("file types always serialize");
    s.push('\n');
    s
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text).context("malformed instance file")?;
    file.into_instance().context("invalid instance")
}

pub fn parse_solution(text: &str) -> Result<SolutionFile> {
    serde_json::from_str(text).context("malformed solution file")
}
