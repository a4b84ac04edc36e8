//! Seeded random instances.
//!
//! Each instance is fully determined by its `GenConfig`. Random draws are
//! consumed in a fixed order: for hospitals, one shuffle of the bed
//! departments first, then each patient's set size followed by its
//! departments; for conflict graphs,
//! one Bernoulli draw per pair `(i, j)`, `i < j`, in lexicographic order.

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::ConflictGraph;
use crate::hospital::{Bed, HospitalInstance, Patient};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    pub n: usize,
    pub num_departments: usize,
    pub compat_min: usize,
    pub compat_max: usize,
    pub density: f64,
}

impl Default for GenConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            n: 0,
            num_departments: 5,
            compat_min: 1,
            compat_max: 3,
            density: 0.3,
        }
    }
}

impl GenConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        Self {
            n,
            seed,
            ..Self::default()
        }
    }

    pub fn with_density(self, density: f64) -> Self {
        Self { density, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.num_departments == 0 {
            return Err(Error::Config("need at least one department".into()));
        }
        if !(1 <= self.compat_min && self.compat_min <= self.compat_max && self.compat_max <= self.num_departments) {
            return Err(Error::Config(format!(
                "need 1 <= compat_min ({}) <= compat_max ({}) <= departments ({})",
                self.compat_min, self.compat_max, self.num_departments
            )));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::Config(format!("density {} is not a probability", self.density)));
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// `n` patients and `n` beds. Beds are spread evenly over the departments
/// (counts differ by at most one) in shuffled order, so each bed's department
/// is uniform on its own. Each patient gets a uniform number of distinct
/// departments in `[compat_min, compat_max]`.
pub fn gen_hospital(cfg: &GenConfig) -> Result<HospitalInstance> {
    cfg.validate()?;
    let mut rng = cfg.rng();
    let departments: Vec<String> = (1..=cfg.num_departments).map(|d| format!("d{d}")).collect();

    let mut bed_depts: Vec<usize> = (0..cfg.n).map(|b| b % cfg.num_departments).collect();
    bed_depts.shuffle(&mut rng);
    let beds = bed_depts
        .into_iter()
        .enumerate()
        .map(|(b, d)| Bed {
            id: format!("b{}", b + 1),
            department: departments[d].clone(),
        })
        .collect();

    let patients = (1..=cfg.n)
        .map(|p| {
            let size = rng.gen_range(cfg.compat_min..=cfg.compat_max);
            let mut picked = sample(&mut rng, cfg.num_departments, size).into_vec();
            picked.sort_unstable();
            Patient {
                id: format!("p{p}"),
                compatible: picked.into_iter().map(|d| departments[d].clone()).collect(),
            }
        })
        .collect();

    HospitalInstance::new(departments, patients, beds)
}

/// Erdős–Rényi G(n, density).
pub fn gen_conflict_graph(cfg: &GenConfig) -> Result<ConflictGraph> {
    cfg.validate()?;
    let mut rng = cfg.rng();
    let mut g = ConflictGraph::new(cfg.n);
    for u in 0..cfg.n {
        for v in u + 1..cfg.n {
            if rng.gen_bool(cfg.density) {
                g.push_unchecked(u, v);
            }
        }
    }
    Ok(g)
}
