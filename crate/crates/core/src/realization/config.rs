use serde::{Deserialize, Serialize};

use super::{extend_realization, mk_affine_realization, Character, FiniteGroup, Turn, YDRealization};
use crate::error::RealizationError;
use crate::rack::F4;

/// JSON description of a realization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RealizationConfig {
    Affine {
        m: usize,
        k: usize,
    },
    Extended {
        m: usize,
        k: usize,
        /// `"C<n>"`.
        extra: String,
        /// `χ1(c) = ζ_n^j`.
        chi1_exponent: i64,
    },
    Table {
        cayley: Vec<Vec<usize>>,
        gmap: Vec<usize>,
        /// `dot[h][i]` is the code of `h · i`.
        dot: Vec<Vec<u8>>,
        /// `χ(h) = ζ_N^k` given as `[k, N]`.
        chi: Vec<[i64; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

impl Default for RealizationConfig {
    fn default() -> Self {
        RealizationConfig::Affine { m: 1, k: 0 }
    }
}

impl RealizationConfig {
    pub fn from_json(text: &str) -> Result<Self, RealizationError> {
        serde_json::from_str(text).map_err(|e| RealizationError::Config(e.to_string()))
    }

    /// Builds and validates the realization.
    pub fn build(&self) -> Result<YDRealization, RealizationError> {
        match self {
            RealizationConfig::Affine { m, k } => mk_affine_realization(*m, *k),
            RealizationConfig::Extended { m, k, extra, chi1_exponent } => {
                let n: usize = extra
                    .strip_prefix('C')
                    .and_then(|s| s.parse().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| RealizationError::Config(format!("extra group `{extra}` is not C<n>")))?;
                let base = mk_affine_realization(*m, *k)?;
                extend_realization(&base, &FiniteGroup::cyclic(n), &Character::cyclic(n, *chi1_exponent))
            }
            RealizationConfig::Table { cayley, gmap, dot, chi, labels } => {
                let group = FiniteGroup::from_table(cayley.clone(), labels.clone())?;
                let n = group.size();
                if gmap.len() != 4 || gmap.iter().any(|&g| g >= n) {
                    return Err(RealizationError::Config("gmap must list 4 group indices".into()));
                }
                if dot.len() != n || dot.iter().any(|row| row.len() != 4 || row.iter().any(|&c| c >= 4)) {
                    return Err(RealizationError::Config("dot must have one row of 4 codes per element".into()));
                }
                if chi.len() != n || chi.iter().any(|&[_, d]| d < 1 || d > u32::MAX as i64) {
                    return Err(RealizationError::Config("chi must have one [k, N] pair per element".into()));
                }
                let dot = dot.iter().map(|row| [0, 1, 2, 3].map(|i| F4::new(row[i]))).collect();
                let chi = Character::new(chi.iter().map(|&[k, d]| Turn::new(k, d as u32)).collect());
                YDRealization::new(group, dot, [gmap[0], gmap[1], gmap[2], gmap[3]], chi)
            }
        }
    }

    /// The table form of an already built realization.
    pub fn table_of(r: &YDRealization) -> Self {
        let g = r.group();
        RealizationConfig::Table {
            cayley: g.rows(),
            gmap: r.gmap().to_vec(),
            dot: r.dot_table().iter().map(|row| row.iter().map(|x| x.code()).collect()).collect(),
            chi: g
                .elements()
                .map(|h| {
                    let t = r.chi().turn(h);
                    [t.num(), t.order() as i64]
                })
                .collect(),
            labels: Some(g.labels().to_vec()),
        }
    }
}
