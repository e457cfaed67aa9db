//! Perversities: classical ones indexed by codimension, general ones indexed
//! by stratum, and the product perversities on products of stratified spaces.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pseudomanifold::{Stratification, Stratum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassicalName {
    Zero,
    LowerMiddle,
    UpperMiddle,
    Top,
}

impl ClassicalName {
    pub const ALL: [ClassicalName; 4] = [Self::Zero, Self::LowerMiddle, Self::UpperMiddle, Self::Top];

    pub fn symbol(self) -> &'static str {
        match self {
            Self::Zero => "0̄",
            Self::LowerMiddle => "m̄",
            Self::UpperMiddle => "n̄",
            Self::Top => "t̄",
        }
    }
}

impl fmt::Display for ClassicalName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Zero => "zero",
            Self::LowerMiddle => "lower-middle",
            Self::UpperMiddle => "upper-middle",
            Self::Top => "top",
        })
    }
}

impl FromStr for ClassicalName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('_', "-").as_str() {
            "zero" => Ok(Self::Zero),
            "lower-middle" => Ok(Self::LowerMiddle),
            "upper-middle" => Ok(Self::UpperMiddle),
            "top" => Ok(Self::Top),
            _ => Err(Error::ParseError(format!("unknown perversity `{s}`"))),
        }
    }
}

/// `0̄(k) = 0`, `m̄(k) = ⌊(k-2)/2⌋`, `n̄(k) = ⌈(k-2)/2⌉`, `t̄(k) = k-2`.
pub fn classical_perversity(name: ClassicalName, codim: usize) -> Result<i64> {
    if codim < 2 {
        return Err(Error::CodimTooSmall(codim));
    }
    let t = codim as i64 - 2;
    Ok(match name {
        ClassicalName::Zero => 0,
        ClassicalName::LowerMiddle => t / 2,
        ClassicalName::UpperMiddle => (t + 1) / 2,
        ClassicalName::Top => t,
    })
}

fn nbar(codim: usize) -> i64 {
    if codim == 0 {
        0
    } else {
        (codim as i64 - 1) / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Perversity {
    Classical { name: ClassicalName },
    /// Values on singular strata, by stratum id.
    General {
        #[serde(skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        values: BTreeMap<usize, i64>,
    },
}

impl Perversity {
    pub fn classical(name: ClassicalName) -> Self {
        Self::Classical { name }
    }

    pub fn name(&self) -> String {
        match self {
            Self::Classical { name } => name.to_string(),
            Self::General { name, .. } => name.clone().unwrap_or_else(|| "general".into()),
        }
    }

    /// Value on a stratum; 0 on regular strata.
    pub fn value(&self, s: &Stratum) -> Result<i64> {
        if s.regular {
            return Ok(0);
        }
        match self {
            Self::Classical { name } => classical_perversity(*name, s.codim),
            Self::General { values, .. } => values.get(&s.id).copied().ok_or(Error::StrataMismatch),
        }
    }

    /// Checks `0 <= p(S) <= t̄(codim S)` on every singular stratum, and that a
    /// general perversity names exactly the singular strata.
    pub fn validate(&self, strat: &Stratification) -> Result<()> {
        if let Self::General { values, .. } = self {
            let singular: Vec<usize> = strat.singular().map(|s| s.id).collect();
            if !values.keys().copied().eq(singular.iter().copied()) {
                return Err(Error::StrataMismatch);
            }
        }
        for s in strat.singular() {
            let v = self.value(s)?;
            let max = classical_perversity(ClassicalName::Top, s.codim)?;
            if v < 0 || v > max {
                return Err(Error::PerversityOutOfRange {
                    stratum: s.id,
                    value: v,
                    max,
                });
            }
        }
        Ok(())
    }

    /// The same perversity as explicit per-stratum values.
    pub fn to_general(&self, strat: &Stratification) -> Result<Perversity> {
        let values = strat
            .singular()
            .map(|s| Ok((s.id, self.value(s)?)))
            .collect::<Result<_>>()?;
        Ok(Self::General {
            name: Some(self.name()),
            values,
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PerversityFile {
    name: Option<String>,
    values: BTreeMap<String, i64>,
}

/// Parses `{"name": "...", "values": {"<stratum id>": <value>, ...}}`.
pub fn parse_perversity_file(text: &str) -> Result<Perversity> {
    let f: PerversityFile = serde_json::from_str(text).map_err(|e| Error::ParseError(e.to_string()))?;
    let values = f
        .values
        .into_iter()
        .map(|(k, v)| {
            k.parse::<usize>()
                .map(|id| (id, v))
                .map_err(|_| Error::ParseError(format!("bad stratum id `{k}`")))
        })
        .collect::<Result<_>>()?;
    Ok(Perversity::General { name: f.name, values })
}

/// `Q_k` on a product stratum with the given factor codimensions:
/// `2s - 2 + Σ n̄(S_i)` over the `s` singular factors, and 0 when none is.
pub fn qk_value(codims: &[usize]) -> i64 {
    let s = codims.iter().filter(|&&c| c > 0).count() as i64;
    if s == 0 {
        return 0;
    }
    2 * s - 2 + codims.iter().map(|&c| nbar(c)).sum::<i64>()
}

/// `Q_ρ`: each block of the partition is treated as one factor whose
/// codimension is the sum over the block, then `Q_k` is applied.
pub fn q_rho_value(codims: &[usize], blocks: &[Vec<usize>]) -> i64 {
    let merged: Vec<usize> = blocks.iter().map(|b| b.iter().map(|&i| codims[i]).sum()).collect();
    qk_value(&merged)
}

fn factor_codims(s: &Stratum) -> Result<&[usize]> {
    s.factor_codims.as_deref().ok_or(Error::NotProductStratification)
}

fn product_values(strat: &Stratification, f: impl Fn(&[usize]) -> Result<i64>) -> Result<BTreeMap<usize, i64>> {
    strat
        .singular()
        .map(|s| Ok((s.id, f(factor_codims(s)?)?)))
        .collect()
}

/// `Q_{n̄,n̄}` on a two-factor product stratification.
pub fn product_perversity_qnn(strat: &Stratification) -> Result<Perversity> {
    let values = product_values(strat, |c| {
        if c.len() != 2 {
            return Err(Error::NotProductStratification);
        }
        Ok(match (c[0] > 0, c[1] > 0) {
            (true, true) => nbar(c[0]) + nbar(c[1]) + 2,
            (true, false) => nbar(c[0]),
            (false, true) => nbar(c[1]),
            (false, false) => 0,
        })
    })?;
    Ok(Perversity::General {
        name: Some("Q_nn".into()),
        values,
    })
}

/// `Q_k` on a product of `k` stratified spaces.
pub fn partition_perversity_qk(strat: &Stratification) -> Result<Perversity> {
    let values = product_values(strat, |c| Ok(qk_value(c)))?;
    Ok(Perversity::General {
        name: Some("Q_k".into()),
        values,
    })
}

/// `Q_ρ` for a partition of the factor indices.
pub fn partition_perversity_rho(strat: &Stratification, blocks: &[Vec<usize>]) -> Result<Perversity> {
    let values = product_values(strat, |c| {
        let mut seen: Vec<usize> = blocks.iter().flatten().copied().collect();
        seen.sort_unstable();
        if !seen.iter().copied().eq(0..c.len()) {
            return Err(Error::NotProductStratification);
        }
        Ok(q_rho_value(c, blocks))
    })?;
    Ok(Perversity::General {
        name: Some("Q_rho".into()),
        values,
    })
}

/// `p(S) <= q(S)` on every singular stratum.
pub fn perversity_leq(p: &Perversity, q: &Perversity, strat: &Stratification) -> Result<bool> {
    for s in strat.singular() {
        if p.value(s)? > q.value(s)? {
            return Ok(false);
        }
    }
    Ok(true)
}
