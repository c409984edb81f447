//! Closed-form evaluators for the counting and lower-bound formulas.
//!
//! All logarithms are binary unless a name says otherwise. Order-of-growth
//! statements are reported with their hypotheses as text and never given
//! invented constants.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::Result;

/// A named bound value with the formula inputs that produced it.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub name: String,
    pub inputs: String,
    /// The numeric value; `None` for order-of-growth rows.
    pub value: Option<f64>,
    pub citation: String,
}

/// Base-2 logarithm of the number of labelled n-vertex graphs of local
/// boxicity at most d: `n*d*(3*log2 n + 7*log2 d)`.
///
/// Returned as a logarithm to avoid overflow; requires `n, d >= 2` (the
/// underlying estimate is derived for localities at least 2).
pub fn counting_upper(n: usize, d: usize) -> Result<BoundReport> {
    if n < 2 || d < 2 {
        return Err(Error::BadParameter(format!(
            "counting bound needs n, d >= 2; got n = {n}, d = {d}"
        )));
    }
    let value = n as f64 * d as f64 * (3.0 * libm::log2(n as f64) + 7.0 * libm::log2(d as f64));
    Ok(BoundReport {
        name: String::from("counting-upper-log2"),
        inputs: format!("n={n} d={d}"),
        value: Some(value),
        citation: String::from("census of d-local codes: log2(count) <= n*d*(3 log n + 7 log d)"),
    })
}

/// Inputs accepted by the lower-bound table.
#[derive(Clone, Copy, Debug, Default)]
pub struct LowerBoundParams {
    pub n: Option<usize>,
    pub epsilon: Option<f64>,
    pub delta: Option<usize>,
    pub np: Option<f64>,
    pub m: Option<usize>,
    pub genus: Option<usize>,
}

/// The numeric lower-bound thresholds applicable to the given parameters,
/// plus the order-of-growth rows with their hypotheses.
pub fn lower_bound_table(params: &LowerBoundParams) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    if let Some(eps) = params.epsilon {
        if !(0.0 < eps && eps < 1.0) {
            return Err(Error::BadParameter(format!(
                "epsilon must lie in (0,1), got {eps}"
            )));
        }
    }
    if let Some(n) = params.n {
        if n < 2 {
            return Err(Error::BadParameter(String::from("n must be at least 2")));
        }
        out.push(BoundReport {
            name: String::from("almost-all-graphs"),
            inputs: format!("n={n}"),
            value: Some(n as f64 / (21.0 * libm::log2(n as f64))),
            citation: String::from("almost all n-vertex graphs: local boxicity >= n/(21 log n)"),
        });
    }
    if let (Some(eps), Some(delta)) = (params.epsilon, params.delta) {
        out.push(BoundReport {
            name: String::from("almost-all-bounded-degree"),
            inputs: format!("epsilon={eps} delta={delta}"),
            value: Some(eps * delta as f64 / 21.0),
            citation: String::from(
                "almost all graphs of maximum degree D = O(n^(1-eps)): local boxicity >= eps*D/21",
            ),
        });
    }
    if let (Some(eps), Some(np)) = (params.epsilon, params.np) {
        out.push(BoundReport {
            name: String::from("sparse-random-graph"),
            inputs: format!("epsilon={eps} np={np}"),
            value: Some(eps * np / 41.0),
            citation: String::from(
                "binomial random graph with np in [1-eps, n^(1-eps)]: local boxicity >= eps*np/41 a.a.s.",
            ),
        });
    }
    if let Some(m) = params.m {
        out.push(BoundReport {
            name: String::from("edges-order-of-growth"),
            inputs: format!("m={m}"),
            value: None,
            citation: String::from(
                "order of growth only (hypothesis m = Theta(n^2)): almost all graphs with m edges have local boxicity Omega(sqrt(m)/log m); no constant is stated",
            ),
        });
    }
    if let Some(g) = params.genus {
        out.push(BoundReport {
            name: String::from("genus-order-of-growth"),
            inputs: format!("g={g}"),
            value: None,
            citation: String::from(
                "order of growth only (hypothesis g = Theta(n^2)): almost all graphs of Euler genus g have local boxicity Omega(sqrt(g)/log g); no constant is stated",
            ),
        });
    }
    Ok(out)
}

/// The regular-graph count comparison column `(n/(e^2 D))^{Dn/2}` as a
/// base-2 logarithm: `(D n / 2) * log2(n / (e^2 D))`.
pub fn regular_count_log2(n: usize, delta: usize) -> Result<f64> {
    if delta == 0 || delta + 2 > n {
        return Err(Error::BadParameter(format!(
            "regular-graph count needs 1 <= delta <= n-2; got delta = {delta}, n = {n}"
        )));
    }
    let e2 = libm::exp(2.0);
    Ok(delta as f64 * n as f64 / 2.0 * libm::log2(n as f64 / (e2 * delta as f64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_values() {
        assert_eq!(counting_upper(4, 2).unwrap().value, Some(104.0)); // 8 * (6 + 7)
        assert_eq!(counting_upper(8, 2).unwrap().value, Some(256.0)); // 16 * 16
        assert_eq!(counting_upper(2, 2).unwrap().value, Some(40.0)); // 4 * (3 + 7)
        assert!(counting_upper(1, 2).is_err());
        assert!(counting_upper(4, 1).is_err());
    }

    #[test]
    fn lower_bound_values() {
        let reports = lower_bound_table(&LowerBoundParams {
            n: Some(1024),
            epsilon: Some(0.5),
            delta: Some(42),
            np: None,
            m: None,
            genus: None,
        })
        .unwrap();
        let all_graphs = reports
            .iter()
            .find(|r| r.name == "almost-all-graphs")
            .unwrap();
        assert!((all_graphs.value.unwrap() - 1024.0 / 210.0).abs() < 1e-12);
        let degree = reports
            .iter()
            .find(|r| r.name == "almost-all-bounded-degree")
            .unwrap();
        assert!((degree.value.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_graph_threshold() {
        let reports = lower_bound_table(&LowerBoundParams {
            epsilon: Some(0.41),
            np: Some(100.0),
            ..Default::default()
        })
        .unwrap();
        let rg = reports
            .iter()
            .find(|r| r.name == "sparse-random-graph")
            .unwrap();
        assert!((rg.value.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn omega_rows_have_no_value() {
        let reports = lower_bound_table(&LowerBoundParams {
            m: Some(100),
            genus: Some(9),
            ..Default::default()
        })
        .unwrap();
        assert_eq!(reports.len(), 2);
        assert!(reports.iter().all(|r| r.value.is_none()));
        assert!(reports
            .iter()
            .all(|r| r.citation.contains("order of growth")));
    }

    #[test]
    fn epsilon_range_checked() {
        assert!(lower_bound_table(&LowerBoundParams {
            epsilon: Some(1.5),
            ..Default::default()
        })
        .is_err());
    }
}
