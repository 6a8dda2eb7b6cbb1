use std::fmt;
use std::str::FromStr;

use bvf_core::VerificationReport;
use rayon::prelude::*;

use crate::checks;
use crate::profile::Profile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Hardy,
    LemmaDc,
    HardyLittlewood,
    Radial,
    Periodic,
    All,
}

type Group = fn(&Profile) -> Vec<VerificationReport>;

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "hardy",
        "lemma-dc",
        "hardy-littlewood",
        "radial",
        "periodic",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hardy => "hardy",
            Suite::LemmaDc => "lemma-dc",
            Suite::HardyLittlewood => "hardy-littlewood",
            Suite::Radial => "radial",
            Suite::Periodic => "periodic",
            Suite::All => "all",
        }
    }

    fn groups(self) -> Vec<Group> {
        let lemma: [Group; 4] = [
            checks::hilbert_pairs,
            checks::cross_algorithm,
            checks::lemma_dc,
            checks::kernel_series,
        ];
        let growth: [Group; 2] = [checks::growth_plateau, checks::growth_divergent];
        let radial: [Group; 2] = [checks::radial_constants, checks::radial_agreement];
        match self {
            Suite::Hardy => vec![checks::hardy],
            Suite::LemmaDc => lemma.to_vec(),
            Suite::HardyLittlewood => growth.to_vec(),
            Suite::Radial => radial.to_vec(),
            Suite::Periodic => vec![checks::periodic],
            Suite::All => {
                let mut all = lemma.to_vec();
                all.push(checks::hardy);
                all.extend(growth);
                all.push(checks::periodic);
                all.extend(radial);
                all
            }
        }
    }

    /// Runs every check of the suite. Groups run in parallel; the report
    /// order is fixed by the suite definition, not by completion order.
    pub fn run(self, profile: &Profile) -> Vec<VerificationReport> {
        self.groups()
            .par_iter()
            .map(|g| g(profile))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "hardy" => Suite::Hardy,
            "lemma-dc" => Suite::LemmaDc,
            "hardy-littlewood" => Suite::HardyLittlewood,
            "radial" => Suite::Radial,
            "periodic" => Suite::Periodic,
            "all" => Suite::All,
            other => {
                return Err(format!(
                    "unknown suite `{other}` (expected one of {})",
                    Suite::NAMES.join(", ")
                ))
            }
        })
    }
}
