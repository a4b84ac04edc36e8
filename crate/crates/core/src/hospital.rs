//! Patient-to-bed assignment as maximum bipartite matching.
//!
//! The flow network has a unit edge from the source to each patient, a unit
//! edge from each patient to every bed whose department the patient accepts,
//! and a unit edge from each bed to the sink. Its maximum flow value is the
//! largest number of patients that can be admitted, and the saturated
//! patient-to-bed edges of an integral maximum flow form such an assignment.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::FlowNetwork;
use crate::maxflow::{max_flow, saturated_edges};
use crate::report::ValidationReport;

/// Size limit (patients and beds, each) for [`brute_force_max_matching`].
pub const BRUTE_FORCE_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Patient {
    pub id: String,
    pub compatible: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bed {
    pub id: String,
    pub department: String,
}

/// A validated hospital instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HospitalInstance {
    departments: Vec<String>,
    patients: Vec<Patient>,
    beds: Vec<Bed>,
    // department indices, derived from the names above
    bed_dept: Vec<usize>,
    patient_depts: Vec<Vec<usize>>,
}

impl HospitalInstance {
    pub fn new(departments: Vec<String>, patients: Vec<Patient>, beds: Vec<Bed>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidInstance(msg));
        let mut dept_index = HashMap::new();
        for (i, d) in departments.iter().enumerate() {
            if dept_index.insert(d.as_str(), i).is_some() {
                return invalid(format!("duplicate department {d:?}"));
            }
        }
        let lookup = |d: &str| dept_index.get(d).copied();

        let mut seen = HashSet::new();
        let mut patient_depts = Vec::with_capacity(patients.len());
        for p in &patients {
            if !seen.insert(p.id.as_str()) {
                return invalid(format!("duplicate patient id {:?}", p.id));
            }
            if p.compatible.is_empty() {
                return invalid(format!("patient {:?} has no compatible department", p.id));
            }
            let mut depts = Vec::with_capacity(p.compatible.len());
            for d in &p.compatible {
                match lookup(d) {
                    Some(i) => depts.push(i),
                    None => return invalid(format!("patient {:?} names unknown department {d:?}", p.id)),
                }
            }
            depts.sort_unstable();
            depts.dedup();
            patient_depts.push(depts);
        }

        let mut seen = HashSet::new();
        let mut bed_dept = Vec::with_capacity(beds.len());
        for b in &beds {
            if !seen.insert(b.id.as_str()) {
                return invalid(format!("duplicate bed id {:?}", b.id));
            }
            match lookup(&b.department) {
                Some(i) => bed_dept.push(i),
                None => return invalid(format!("bed {:?} in unknown department {:?}", b.id, b.department)),
            }
        }

        Ok(Self {
            departments,
            patients,
            beds,
            bed_dept,
            patient_depts,
        })
    }

    pub fn departments(&self) -> &[String] {
        &self.departments
    }

    pub fn patients(&self) -> &[Patient] {
        &self.patients
    }

    pub fn beds(&self) -> &[Bed] {
        &self.beds
    }

    /// Whether patient `p` accepts bed `b` (both by position).
    pub fn compatible(&self, p: usize, b: usize) -> bool {
        self.patient_depts[p].binary_search(&self.bed_dept[b]).is_ok()
    }

    pub fn compatible_pair_count(&self) -> usize {
        (0..self.patients.len())
            .map(|p| (0..self.beds.len()).filter(|&b| self.compatible(p, b)).count())
            .sum()
    }

    fn patient_position(&self, id: &str) -> Option<usize> {
        self.patients.iter().position(|p| p.id == id)
    }

    fn bed_position(&self, id: &str) -> Option<usize> {
        self.beds.iter().position(|b| b.id == id)
    }
}

/// Partial map from patient id to bed id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment {
    pub assigned: BTreeMap<String, String>,
}

impl Assignment {
    pub fn admitted_count(&self) -> usize {
        self.assigned.len()
    }
}

/// Vertex numbering of the hospital flow network: source `0`, patients
/// `1..=|P|`, beds `|P|+1..=|P|+|B|`, sink last.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlowLegend {
    pub num_patients: usize,
    pub num_beds: usize,
}

impl FlowLegend {
    pub const SOURCE: usize = 0;

    pub fn sink(&self) -> usize {
        self.num_patients + self.num_beds + 1
    }

    pub fn patient_vertex(&self, p: usize) -> usize {
        1 + p
    }

    pub fn bed_vertex(&self, b: usize) -> usize {
        1 + self.num_patients + b
    }

    pub fn patient_of(&self, v: usize) -> Option<usize> {
        (1..=self.num_patients).contains(&v).then(|| v - 1)
    }

    pub fn bed_of(&self, v: usize) -> Option<usize> {
        let first = 1 + self.num_patients;
        (first..first + self.num_beds).contains(&v).then(|| v - first)
    }

    pub fn patient_vertices(&self) -> Vec<usize> {
        (0..self.num_patients).map(|p| self.patient_vertex(p)).collect()
    }

    pub fn bed_vertices(&self) -> Vec<usize> {
        (0..self.num_beds).map(|b| self.bed_vertex(b)).collect()
    }
}

pub fn build_flow_network(inst: &HospitalInstance) -> (FlowNetwork, FlowLegend) {
    let legend = FlowLegend {
        num_patients: inst.patients.len(),
        num_beds: inst.beds.len(),
    };
    let mut net = FlowNetwork::new(legend.sink() + 1, FlowLegend::SOURCE, legend.sink())
        .expect("source and sink are distinct and in range");
    let add = |net: &mut FlowNetwork, u, v| net.add_edge(u, v, 1).expect("ids from legend are valid");
    for p in 0..legend.num_patients {
        add(&mut net, FlowLegend::SOURCE, legend.patient_vertex(p));
    }
    for p in 0..legend.num_patients {
        for b in 0..legend.num_beds {
            if inst.compatible(p, b) {
                add(&mut net, legend.patient_vertex(p), legend.bed_vertex(b));
            }
        }
    }
    for b in 0..legend.num_beds {
        add(&mut net, legend.bed_vertex(b), legend.sink());
    }
    (net, legend)
}

/// Maximum assignment, read off the saturated patient-to-bed edges of a
/// maximum flow.
pub fn solve(inst: &HospitalInstance) -> Assignment {
    let (net, legend) = build_flow_network(inst);
    let flow = max_flow(&net);
    let pairs = saturated_edges(&net, &flow, &legend.patient_vertices(), &legend.bed_vertices());
    let assigned: BTreeMap<String, String> = pairs
        .into_iter()
        .map(|(u, v)| {
            let p = legend.patient_of(u).expect("patient vertex");
            let b = legend.bed_of(v).expect("bed vertex");
            (inst.patients[p].id.clone(), inst.beds[b].id.clone())
        })
        .collect();
    debug_assert_eq!(assigned.len() as u64, flow.value);
    Assignment { assigned }
}

/// Edge flows induced by an assignment on the network from
/// [`build_flow_network`], indexed like `FlowNetwork::edges`.
///
/// Returns `None` when the assignment names unknown ids or uses a
/// patient-to-bed edge the network does not contain.
pub fn flow_from_assignment(
    inst: &HospitalInstance,
    net: &FlowNetwork,
    legend: &FlowLegend,
    a: &Assignment,
) -> Option<Vec<u64>> {
    let mut flow = vec![0u64; net.edge_count()];
    for (pid, bid) in &a.assigned {
        let p = inst.patient_position(pid)?;
        let b = inst.bed_position(bid)?;
        let (pv, bv) = (legend.patient_vertex(p), legend.bed_vertex(b));
        for (u, v) in [(FlowLegend::SOURCE, pv), (pv, bv), (bv, legend.sink())] {
            flow[net.edge_index(u, v)?] += 1;
        }
    }
    Some(flow)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssignmentViolation {
    UnknownPatient(String),
    UnknownBed(String),
    BedMultiplyAssigned { bed: String, patients: Vec<String> },
    Incompatible { patient: String, bed: String, department: String },
}

impl fmt::Display for AssignmentViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnknownPatient(p) => write!(f, "unknown patient {p:?}"),
            Self::UnknownBed(b) => write!(f, "unknown bed {b:?}"),
            Self::BedMultiplyAssigned { bed, patients } => {
                write!(f, "bed multiply assigned: {bed:?} holds {}", patients.join(", "))
            }
            Self::Incompatible {
                patient,
                bed,
                department,
            } => write!(
                f,
                "compatibility: patient {patient:?} cannot use bed {bed:?} in department {department:?}"
            ),
        }
    }
}

pub fn validate(inst: &HospitalInstance, a: &Assignment) -> ValidationReport<AssignmentViolation> {
    let mut violations = Vec::new();
    let mut occupants: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for (pid, bid) in &a.assigned {
        let p = inst.patient_position(pid);
        let b = inst.bed_position(bid);
        if p.is_none() {
            violations.push(AssignmentViolation::UnknownPatient(pid.clone()));
        }
        if b.is_none() {
            violations.push(AssignmentViolation::UnknownBed(bid.clone()));
        }
        if let Some(b) = b {
            occupants.entry(inst.beds[b].id.as_str()).or_default().push(pid.clone());
            if let Some(p) = p {
                if !inst.compatible(p, b) {
                    violations.push(AssignmentViolation::Incompatible {
                        patient: pid.clone(),
                        bed: bid.clone(),
                        department: inst.beds[b].department.clone(),
                    });
                }
            }
        }
    }
    for (bed, patients) in occupants {
        if patients.len() > 1 {
            violations.push(AssignmentViolation::BedMultiplyAssigned {
                bed: bed.to_string(),
                patients,
            });
        }
    }
    ValidationReport { violations }
}

/// Exact maximum admitted count by exhaustive search: each patient either
/// takes a free compatible bed or stays unassigned.
pub fn brute_force_max_matching(inst: &HospitalInstance) -> Result<usize> {
    for (what, actual) in [("patients", inst.patients.len()), ("beds", inst.beds.len())] {
        if actual > BRUTE_FORCE_LIMIT {
            return Err(Error::OracleGuard {
                what,
                actual,
                limit: BRUTE_FORCE_LIMIT,
            });
        }
    }

    fn search(inst: &HospitalInstance, p: usize, used: &mut [bool]) -> usize {
        if p == inst.patients.len() {
            return 0;
        }
        let mut best = search(inst, p + 1, used);
        for b in 0..used.len() {
            if !used[b] && inst.compatible(p, b) {
                used[b] = true;
                best = best.max(1 + search(inst, p + 1, used));
                used[b] = false;
            }
        }
        best
    }

    Ok(search(inst, 0, &mut vec![false; inst.beds.len()]))
}
