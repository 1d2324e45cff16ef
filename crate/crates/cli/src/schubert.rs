//! Text forms naming one Schubert variety of a space.

use std::fmt;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use minuscule::{AmbientQuiver, Grid, Ideal, Partition, VertexSet, WeylWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchubertSpec {
    /// Type A only.
    Partition(Partition),
    Ideal(VertexSet),
    Word(WeylWord),
    Full,
}

impl SchubertSpec {
    pub fn parse_word(s: &str) -> Result<WeylWord> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(WeylWord(Vec::new()));
        }
        let letters = s
            .split(',')
            .map(|l| {
                l.trim()
                    .parse::<usize>()
                    .with_context(|| format!("bad letter {l:?} in word"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeylWord(letters))
    }

    pub fn resolve<'a>(&self, amb: &'a AmbientQuiver) -> Result<Ideal<'a>> {
        let ideal = match self {
            SchubertSpec::Partition(lambda) => {
                let grid =
                    Grid::new(amb).context("partitions name type A Schubert varieties only")?;
                grid.partition_to_ideal(lambda)?
            }
            SchubertSpec::Ideal(mask) => amb.ideal(*mask)?,
            SchubertSpec::Word(word) => amb.ideal_from_word(word)?,
            SchubertSpec::Full => amb.full_ideal(),
        };
        Ok(ideal)
    }
}

impl fmt::Display for SchubertSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchubertSpec::Partition(p) => write!(f, "partition={p}"),
            SchubertSpec::Ideal(m) => write!(f, "ideal={}", m.to_hex()),
            SchubertSpec::Word(w) => write!(f, "word={w}"),
            SchubertSpec::Full => f.write_str("ideal=full"),
        }
    }
}

impl FromStr for SchubertSpec {
    type Err = anyhow::Error;

    /// `λ=3,2,1,1`, `partition=3,2,1,1`, `ideal=0x7f`, `ideal=full` or
    /// `word=4,3,5`.
    fn from_str(s: &str) -> Result<Self> {
        let (key, value) = s
            .split_once('=')
            .ok_or_else(|| anyhow!("expected λ=…, partition=…, ideal=… or word=…, got {s:?}"))?;
        match key.trim() {
            "λ" | "lambda" | "partition" => Ok(SchubertSpec::Partition(value.parse()?)),
            "ideal" if value.trim() == "full" => Ok(SchubertSpec::Full),
            "ideal" => Ok(SchubertSpec::Ideal(VertexSet::from_hex(value.trim())?)),
            "word" => Ok(SchubertSpec::Word(Self::parse_word(value)?)),
            other => bail!("unknown Schubert variety key {other:?}"),
        }
    }
}
