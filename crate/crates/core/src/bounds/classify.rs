use serde::Serialize;

use super::GammaTarget;

/// What kind of function a bound is for a given `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundClassification {
    /// The bound is `W`.
    FrechetLower,
    /// A quasi-copula with some rectangle of negative volume.
    ProperQuasiCopula,
    /// A copula different from both `W` and `M`.
    ProperCopulaStrict,
    /// The bound is `M`.
    FrechetUpper,
}

impl BoundClassification {
    pub fn is_copula(&self) -> bool {
        !matches!(self, BoundClassification::ProperQuasiCopula)
    }
}

/// `Ḡ_t` is `W` at `t = -1`, a proper quasi-copula on `(-1, 0)`, a copula
/// other than `W`, `M` on `[0, 1/2)` and `M` on `[1/2, 1]`.
pub fn classify_upper(t: GammaTarget) -> BoundClassification {
    let t = t.value();
    if t <= -1.0 {
        BoundClassification::FrechetLower
    } else if t < 0.0 {
        BoundClassification::ProperQuasiCopula
    } else if t < 0.5 {
        BoundClassification::ProperCopulaStrict
    } else {
        BoundClassification::FrechetUpper
    }
}

/// Mirror image of [`classify_upper`] under `t -> -t`: `M` at `t = 1`, proper
/// quasi-copula on `(0, 1)`, strict copula on `(-1/2, 0]`, `W` on
/// `[-1, -1/2]`.
pub fn classify_lower(t: GammaTarget) -> BoundClassification {
    let t = t.value();
    if t >= 1.0 {
        BoundClassification::FrechetUpper
    } else if t > 0.0 {
        BoundClassification::ProperQuasiCopula
    } else if t > -0.5 {
        BoundClassification::ProperCopulaStrict
    } else {
        BoundClassification::FrechetLower
    }
}
