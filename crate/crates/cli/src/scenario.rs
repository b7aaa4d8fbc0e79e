//! Scenario files: a JSON object naming a command plus its parameters,
//! executable via `osculant run <file.json>`.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use crate::report::Report;
use crate::runners::{
    run_polarity_rnc, run_search_cubics, run_segre_parity, run_segre_section, run_splitting,
    run_togliatti, run_veronese, PolarityRncOptions, SegreParityOptions, SegreSectionOptions,
    SplittingOptions, SystemSpec, TogliattiModel, TogliattiOptions, TogliattiVariety,
    VeroneseOptions,
};

/// One scenario: the command tag plus whichever parameters it uses.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certify: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub force: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_factors: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tuples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seeds: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variety: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<String>,
    /// Linear forms as integer coefficient lists, graded-lex variable order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forms: Option<Vec<Vec<i64>>>,
    /// Hyperplane tensor as an integer coefficient list in binary-counter
    /// order, first factor most significant.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperplane: Option<Vec<i64>>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("invalid scenario JSON")
    }

    pub fn execute(&self) -> Result<Report> {
        let seed = self.seed.unwrap_or(0);
        let samples = self.samples.unwrap_or(3);
        let report = match self.command.as_str() {
            "togliatti" => {
                let model = match self.model.as_deref() {
                    None | Some("projection") => TogliattiModel::Projection,
                    Some("segre-section") => TogliattiModel::SegreSection,
                    Some(other) => bail!("unknown togliatti model {other:?}"),
                };
                let variety = match self.variety.as_deref() {
                    None | Some("togliatti") => TogliattiVariety::Togliatti,
                    Some("veronese-full") => TogliattiVariety::VeroneseFull,
                    Some(other) => bail!("unknown togliatti variety {other:?}"),
                };
                run_togliatti(&TogliattiOptions {
                    seed,
                    samples,
                    model,
                    variety,
                    hyperplane: self.hyperplane.clone(),
                })
            }
            "veronese" => run_veronese(&VeroneseOptions {
                n: self.n.unwrap_or(1),
                seed,
                samples,
                center_size: self.center_size,
                certify: self.certify.unwrap_or(true),
                force: self.force.unwrap_or(false),
                forms: self.forms.clone(),
            }),
            "segre-section" => run_segre_section(&SegreSectionOptions {
                n_factors: self.n_factors.unwrap_or(3),
                seed,
                force: self.force.unwrap_or(false),
                hyperplane: self.hyperplane.clone(),
            }),
            "polarity-rnc" => run_polarity_rnc(&PolarityRncOptions {
                degree: self.degree.unwrap_or(3),
                tuples: self.tuples.unwrap_or(100),
                seed,
            }),
            "search-cubics" => run_search_cubics(),
            "splitting" => {
                let system = match (&self.system, &self.forms) {
                    (_, Some(rows)) => SystemSpec::Forms(rows.clone()),
                    (Some(s), None) if s == "togliatti" => SystemSpec::Togliatti,
                    (Some(s), None) if s == "random" => SystemSpec::Random,
                    (None, None) => SystemSpec::Togliatti,
                    (Some(other), None) => bail!("unknown splitting system {other:?}"),
                };
                run_splitting(&SplittingOptions {
                    system,
                    seeds: self.seeds.unwrap_or(5),
                    seed,
                })
            }
            "segre-parity" => run_segre_parity(&SegreParityOptions {
                n_max: self.n_max.unwrap_or(6),
            }),
            other => bail!("unknown command {other:?}"),
        };
        Ok(report)
    }
}
