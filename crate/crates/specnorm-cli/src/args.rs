//! Minimal flag parser: `--key value` or `--key=value` after a positional
//! subcommand.

use std::collections::BTreeMap;

use crate::{CliError, Result};

#[derive(Debug, Default)]
pub struct Args {
    positional: Vec<String>,
    flags: BTreeMap<String, String>,
}

impl Args {
    pub fn parse(tokens: &[String]) -> Result<Self> {
        let mut out = Args::default();
        let mut iter = tokens.iter().peekable();
        while let Some(tok) = iter.next() {
            if let Some(stripped) = tok.strip_prefix("--") {
                let (key, value) = match stripped.split_once('=') {
                    Some((k, v)) => (k.to_string(), v.to_string()),
                    None => {
                        let value = iter
                            .next()
                            .ok_or_else(|| CliError::Usage(format!("flag --{stripped} needs a value")))?;
                        (stripped.to_string(), value.clone())
                    }
                };
                if out.flags.insert(key.clone(), value).is_some() {
                    return Err(CliError::Usage(format!("flag --{key} given twice")));
                }
            } else {
                out.positional.push(tok.clone());
            }
        }
        Ok(out)
    }

    pub fn positional(&self) -> &[String] {
        &self.positional
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.flags.get(key).map(String::as_str)
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key)
            .ok_or_else(|| CliError::Usage(format!("missing required flag --{key}")))
    }

    pub fn parse_value<T: std::str::FromStr>(&self, key: &str) -> Result<T> {
        let raw = self.require(key)?;
        raw.parse()
            .map_err(|_| CliError::Usage(format!("invalid value `{raw}` for --{key}")))
    }

    pub fn parse_or<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T> {
        match self.get(key) {
            None => Ok(default),
            Some(raw) => raw
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid value `{raw}` for --{key}"))),
        }
    }

    /// Error on flags the command does not know, so typos fail loudly.
    pub fn reject_unknown(&self, known: &[&str]) -> Result<()> {
        for key in self.flags.keys() {
            if !known.contains(&key.as_str()) {
                return Err(CliError::Usage(format!("unknown flag --{key}")));
            }
        }
        Ok(())
    }
}
