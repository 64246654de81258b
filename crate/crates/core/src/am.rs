//! The Assmus–Mattson hypothesis, evaluated on a pair of weight distributions.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::WeightDistribution;

/// Largest `w ≤ v` with `w - floor((w + q - 2) / (q - 1)) < d`, by descending scan.
pub fn largest_w(v: usize, q: usize, d: usize) -> usize {
    assert!(q >= 2 && d >= 1);
    (0..=v)
        .rev()
        .find(|&w| w - (w + q - 2) / (q - 1) < d)
        .unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmReport {
    pub t: usize,
    pub d: usize,
    pub d_perp: usize,
    pub w: usize,
    pub w_perp: usize,
    /// Number of `i` in `1..=v-t` with `A⊥_i ≠ 0`.
    pub s: usize,
    pub hypothesis_holds: bool,
    /// Weights whose supports hold t-designs; empty unless the hypothesis holds.
    pub primal_design_weights: BTreeSet<usize>,
    pub dual_design_weights: BTreeSet<usize>,
}

/// Binary Assmus–Mattson. `wd` is the code's distribution and `dual_wd` its dual's.
pub fn assmus_mattson(
    wd: &WeightDistribution,
    dual_wd: &WeightDistribution,
    t: usize,
) -> Result<AmReport> {
    let v = wd.length();
    if dual_wd.length() != v {
        return Err(Error::InvalidParameters(
            "distributions have different lengths".into(),
        ));
    }
    let d = wd
        .min_distance()
        .ok_or_else(|| Error::InvalidParameters("zero code has no minimum distance".into()))?;
    if t >= d {
        return Err(Error::InvalidParameters(format!(
            "need t < d, got t={t} d={d}"
        )));
    }
    let d_perp = dual_wd.min_distance().unwrap_or(v + 1);
    let w = largest_w(v, 2, d);
    let w_perp = largest_w(v, 2, d_perp);
    let s = (1..=v - t).filter(|&i| !dual_wd.count(i).is_zero()).count();
    let holds = s <= d - t;
    let (primal, dual) = if holds {
        (
            wd.nonzero()
                .map(|(i, _)| i)
                .filter(|&i| i >= d && i <= w)
                .collect(),
            dual_wd
                .nonzero()
                .map(|(i, _)| i)
                .filter(|&i| i >= d_perp && i <= (v - t).min(w_perp))
                .collect(),
        )
    } else {
        (BTreeSet::new(), BTreeSet::new())
    };
    Ok(AmReport {
        t,
        d,
        d_perp,
        w,
        w_perp,
        s,
        hypothesis_holds: holds,
        primal_design_weights: primal,
        dual_design_weights: dual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{build_cyclic, dual, extend};
    use crate::design::{extract_design, verify_t_design, EnumerationMode};
    use crate::gf2::Gf2mField;
    use crate::weights::{brute_weight_distribution, macwilliams_transform};

    fn scan_oracle(v: usize, q: usize, d: usize) -> usize {
        let mut best = 0;
        for w in 0..=v {
            let lhs = w as i64 - ((w + q - 2) / (q - 1)) as i64;
            if lhs < d as i64 {
                best = w;
            }
        }
        best
    }

    #[test]
    fn largest_w_examples() {
        assert_eq!(largest_w(64, 2, 4), 64);
        assert_eq!(largest_w(13, 3, 4), scan_oracle(13, 3, 4));
        assert_eq!(largest_w(13, 3, 4), 7);
        assert_eq!(largest_w(5, 3, 10), 5);
        for v in 0..40 {
            for q in 2..6 {
                for d in 1..12 {
                    assert_eq!(largest_w(v, q, d), scan_oracle(v, q, d));
                }
            }
        }
    }

    #[test]
    fn m6_e2_hypothesis_fails() {
        let f = Gf2mField::new(6).unwrap();
        let c = extend(&build_cyclic(&f, &[2u32].into_iter().collect()).unwrap()).unwrap();
        let dual_wd = brute_weight_distribution(&dual(&c)).unwrap();
        let wd = macwilliams_transform(&dual_wd, 13).unwrap();
        let r = assmus_mattson(&wd, &dual_wd, 2).unwrap();
        assert_eq!(r.d, 4);
        assert_eq!(r.s, 3);
        assert!(!r.hypothesis_holds);
        // same s from the transformed primal
        let dual_again = macwilliams_transform(&wd, 51).unwrap();
        assert_eq!(assmus_mattson(&wd, &dual_again, 2).unwrap().s, 3);
    }

    #[test]
    fn self_dual_m5_yields_3_designs() {
        let f = Gf2mField::new(5).unwrap();
        let c = extend(&build_cyclic(&f, &[1u32, 2].into_iter().collect()).unwrap()).unwrap();
        let wd = brute_weight_distribution(&c).unwrap();
        let dual_wd = brute_weight_distribution(&dual(&c)).unwrap();
        assert_eq!(wd, dual_wd);
        let r = assmus_mattson(&wd, &dual_wd, 3).unwrap();
        assert!(r.hypothesis_holds);
        assert_eq!(
            r.primal_design_weights,
            [8, 12, 16, 20, 24, 32]
                .into_iter()
                .filter(|&i| !wd.count(i).is_zero())
                .collect()
        );
        for &k in r.primal_design_weights.iter().filter(|&&k| k < 32) {
            let d = extract_design(&c, k, EnumerationMode::Exhaustive).unwrap();
            assert!(
                verify_t_design(&d, 3).unwrap().certificate().is_some(),
                "weight {k}"
            );
        }
    }

    #[test]
    fn t_at_least_d_is_rejected() {
        let wd =
            WeightDistribution::from_sparse(7, [(0usize, 1u32), (3, 7), (4, 7), (7, 1)]).unwrap();
        let dual_wd = WeightDistribution::from_sparse(7, [(0usize, 1u32), (4, 7)]).unwrap();
        assert!(assmus_mattson(&wd, &dual_wd, 3).is_err());
        assert!(assmus_mattson(&wd, &dual_wd, 2).is_ok());
    }
}
