//! Randomized cross-check campaigns: per case family, draw validated
//! tensors, run the closed-form criterion against both oracles, and
//! aggregate agreement counts. Everything flows from one recorded seed,
//! so a summary is replayable byte for byte.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analysis::{burnside_dim, closed_form_irreducible, commutant_dim, Verdict};
use crate::sampling::{sample_tensor, Family};
use crate::scalar::{Mode, DEFAULT_TOL};

/// Shared run configuration: arithmetic mode, tolerance, seed, sample
/// count per family.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub mode: Mode,
    pub tol: f64,
    pub seed: u64,
    pub samples: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Approx,
            tol: DEFAULT_TOL,
            seed: 0,
            samples: 500,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilySummary {
    pub family: &'static str,
    pub samples: usize,
    pub irreducible: usize,
    pub reducible: usize,
    pub closed_form_abstained: usize,
    pub disagreements: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub disagreement_dumps: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignSummary {
    pub seed: u64,
    pub mode: Mode,
    pub tol: f64,
    pub samples_per_family: usize,
    pub families: Vec<FamilySummary>,
    pub total_disagreements: usize,
}

impl CampaignSummary {
    pub fn all_agree(&self) -> bool {
        self.total_disagreements == 0
    }
}

/// Runs the full cross-check campaign over every case family.
pub fn run_campaign(config: &RunConfig) -> Result<CampaignSummary, crate::linalg::LinalgError> {
    let mut families = Vec::with_capacity(Family::ALL.len());
    for (family_idx, family) in Family::ALL.into_iter().enumerate() {
        families.push(run_family(config, family, family_idx as u64)?);
    }
    let total_disagreements = families.iter().map(|f| f.disagreements).sum();
    Ok(CampaignSummary {
        seed: config.seed,
        mode: config.mode,
        tol: config.tol,
        samples_per_family: config.samples,
        families,
        total_disagreements,
    })
}

/// Runs one family of the campaign; the per-family generator is derived
/// from the master seed, so families are independent and replayable.
pub fn run_family(
    config: &RunConfig,
    family: Family,
    family_idx: u64,
) -> Result<FamilySummary, crate::linalg::LinalgError> {
    let mut rng =
        ChaCha8Rng::seed_from_u64(config.seed ^ family_idx.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut summary = FamilySummary {
        family: family.name(),
        samples: config.samples,
        irreducible: 0,
        reducible: 0,
        closed_form_abstained: 0,
        disagreements: 0,
        disagreement_dumps: Vec::new(),
    };
    for idx in 0..config.samples {
        let tp = sample_tensor(&mut rng, config.mode, family, idx);
        let rep = tp.build_rep();
        let dim = rep.dim();
        let commutant = commutant_dim(&rep, config.tol)?;
        let burnside = burnside_dim(&rep, config.tol)?;
        let oracle_irreducible = commutant == 1;
        if oracle_irreducible {
            summary.irreducible += 1;
        } else {
            summary.reducible += 1;
        }
        let mut mismatch = (commutant == 1) != (burnside == dim * dim);
        match closed_form_irreducible(&tp, config.tol) {
            Ok(cf) => {
                mismatch |= (cf.verdict == Verdict::Irreducible) != oracle_irreducible;
            }
            Err(_) => summary.closed_form_abstained += 1,
        }
        if mismatch {
            summary.disagreements += 1;
            if summary.disagreement_dumps.len() < 5 {
                summary.disagreement_dumps.push(format!(
                    "sample {idx}: commutant {commutant}, burnside {burnside}, params {:?}",
                    tp.factors()
                ));
            }
        }
    }
    Ok(summary)
}
