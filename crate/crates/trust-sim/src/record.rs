use serde::{Deserialize, Serialize};
use subjective_logic::DiscountVariant;

/// Header of the record CSV produced by [`ExplorationRecord::to_csv_row`].
pub const CSV_HEADER: &str =
    "run,pl,nb,exploration,candidate,agent,reachable,dG_base,dG_cand,dE_base,dE_cand";

/// One subject agent of one exploration: the distances of the
/// baseline-derived and candidate-derived opinions from the subject's
/// ground-truth opinion, under both metrics. Subjects the explorer
/// never resolved carry `reachable = false` and no distances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExplorationRecord {
    #[serde(rename = "run")]
    pub run_id: u32,
    #[serde(rename = "pl")]
    pub pl_percent: u32,
    #[serde(rename = "nb")]
    pub n_bootstrap: u32,
    #[serde(rename = "exploration")]
    pub exploration_idx: u32,
    pub candidate: DiscountVariant,
    pub agent: u32,
    pub reachable: bool,
    #[serde(rename = "dG_base")]
    pub d_g_baseline: Option<f64>,
    #[serde(rename = "dG_cand")]
    pub d_g_candidate: Option<f64>,
    #[serde(rename = "dE_base")]
    pub d_e_baseline: Option<f64>,
    #[serde(rename = "dE_cand")]
    pub d_e_candidate: Option<f64>,
}

impl ExplorationRecord {
    /// The canonical output ordering of a record stream.
    pub fn sort_key(&self) -> (u32, u32, u32, u32, DiscountVariant, u32) {
        (
            self.run_id,
            self.pl_percent,
            self.n_bootstrap,
            self.exploration_idx,
            self.candidate,
            self.agent,
        )
    }

    /// One CSV line under [`CSV_HEADER`]; floats carry 17 significant
    /// digits so parsing them back is lossless, absent distances are
    /// empty fields.
    pub fn to_csv_row(&self) -> String {
        fn field(v: Option<f64>) -> String {
            v.map(|x| format!("{x:.16e}")).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.run_id,
            self.pl_percent,
            self.n_bootstrap,
            self.exploration_idx,
            self.candidate,
            self.agent,
            self.reachable,
            field(self.d_g_baseline),
            field(self.d_g_candidate),
            field(self.d_e_baseline),
            field(self.d_e_candidate),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ExplorationRecord {
        ExplorationRecord {
            run_id: 3,
            pl_percent: 10,
            n_bootstrap: 14,
            exploration_idx: 7,
            candidate: DiscountVariant::G2,
            agent: 31,
            reachable: true,
            d_g_baseline: Some(0.123_456_789_012_345_67),
            d_g_candidate: Some(1.0 / 3.0),
            d_e_baseline: Some(0.0),
            d_e_candidate: Some(f64::MIN_POSITIVE),
        }
    }

    #[test]
    fn csv_round_trip_is_lossless() {
        let record = sample();
        let data = format!("{CSV_HEADER}\n{}\n", record.to_csv_row());
        let mut reader = csv::Reader::from_reader(data.as_bytes());
        let parsed: Vec<ExplorationRecord> =
            reader.deserialize().collect::<Result<_, _>>().unwrap();
        assert_eq!(parsed, vec![record]);
    }

    #[test]
    fn unreachable_records_serialize_empty_distance_fields() {
        let record = ExplorationRecord {
            reachable: false,
            d_g_baseline: None,
            d_g_candidate: None,
            d_e_baseline: None,
            d_e_candidate: None,
            ..sample()
        };
        assert_eq!(record.to_csv_row(), "3,10,14,7,g2,31,false,,,,");
        let data = format!("{CSV_HEADER}\n{}\n", record.to_csv_row());
        let mut reader = csv::Reader::from_reader(data.as_bytes());
        let parsed: Vec<ExplorationRecord> =
            reader.deserialize().collect::<Result<_, _>>().unwrap();
        assert_eq!(parsed, vec![record]);
    }

    #[test]
    fn sort_key_orders_by_grid_then_candidate_then_agent() {
        let a = sample();
        let mut b = a;
        b.agent = 32;
        let mut c = a;
        c.candidate = DiscountVariant::G3;
        let mut rows = vec![c, b, a];
        rows.sort_by_key(ExplorationRecord::sort_key);
        assert_eq!(rows, vec![a, b, c]);
    }
}
