//! Settings resolved from a `key = value` file, command-line flags and
//! `JSOB_*` environment variables, in increasing precedence.

use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use jsob_core::algebra::rational::{self, ExactRational};
use num_traits::Signed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CliConfig {
    pub default_k: ExactRational,
    pub output_format: Format,
    /// `None` disables the polynomial cache.
    pub cache_path: Option<PathBuf>,
    pub float_digits: usize,
}

/// Raw, unvalidated values from one source.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Layer {
    pub default_k: Option<String>,
    pub output_format: Option<String>,
    pub cache_path: Option<String>,
    pub float_digits: Option<String>,
}

pub const KEYS: [&str; 4] = ["default_k", "output_format", "cache_path", "float_digits"];

impl Layer {
    fn slot(&mut self, key: &str) -> Option<&mut Option<String>> {
        match key {
            "default_k" => Some(&mut self.default_k),
            "output_format" => Some(&mut self.output_format),
            "cache_path" => Some(&mut self.cache_path),
            "float_digits" => Some(&mut self.float_digits),
            _ => None,
        }
    }

    /// Parses `key = value` lines; `#` starts a comment line.
    pub fn parse_file(text: &str) -> Result<Self, String> {
        let mut layer = Self::default();
        for (number, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected `key = value`", number + 1))?;
            let key = key.trim();
            let value = value.trim().trim_matches('"').to_string();
            let slot = layer.slot(key).ok_or_else(|| {
                format!("config line {}: unknown key {key:?} (known: {})", number + 1, KEYS.join(", "))
            })?;
            *slot = Some(value);
        }
        Ok(layer)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        Self::parse_file(&text)
    }

    /// Reads `JSOB_DEFAULT_K`, `JSOB_OUTPUT_FORMAT`, `JSOB_CACHE_PATH` and
    /// `JSOB_FLOAT_DIGITS` through `lookup`.
    pub fn from_env(lookup: impl Fn(&str) -> Option<String>) -> Self {
        let mut layer = Self::default();
        for key in KEYS {
            *layer.slot(key).unwrap() = lookup(&format!("JSOB_{}", key.to_uppercase()));
        }
        layer
    }

    /// `self` wins wherever it is set.
    pub fn over(self, lower: Layer) -> Layer {
        Layer {
            default_k: self.default_k.or(lower.default_k),
            output_format: self.output_format.or(lower.output_format),
            cache_path: self.cache_path.or(lower.cache_path),
            float_digits: self.float_digits.or(lower.float_digits),
        }
    }
}

impl CliConfig {
    pub fn from_layer(layer: Layer) -> Result<Self, String> {
        let default_k = match layer.default_k {
            Some(text) => rational::parse(&text).map_err(|e| format!("default_k: {e}"))?,
            None => rational::int(0),
        };
        if default_k.is_negative() {
            return Err(format!("default_k must be nonnegative, got {}", rational::format(&default_k)));
        }
        let output_format = match layer.output_format {
            Some(text) => Format::from_str(&text, true).map_err(|_| format!("output_format: unknown format {text:?}"))?,
            None => Format::Pretty,
        };
        let cache_path = layer.cache_path.filter(|p| !p.is_empty()).map(PathBuf::from);
        let float_digits = match layer.float_digits {
            Some(text) => text.parse::<usize>().map_err(|_| format!("float_digits: not an integer: {text:?}"))?,
            None => 12,
        };
        if !(6..=30).contains(&float_digits) {
            return Err(format!("float_digits must be in 6..=30, got {float_digits}"));
        }
        Ok(Self { default_k, output_format, cache_path, float_digits })
    }

    /// Environment over flags over file.
    pub fn resolve(file: Option<&Path>, flags: Layer, env: Layer) -> Result<Self, String> {
        let file = match file {
            Some(path) => Layer::load(path)?,
            None => Layer::default(),
        };
        Self::from_layer(env.over(flags.over(file)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let file = Layer::parse_file("# comment\ndefault_k = 2\noutput_format = csv\nfloat_digits=8\n").unwrap();
        let flags = Layer { default_k: Some("3".into()), ..Layer::default() };
        let env = Layer { output_format: Some("json".into()), ..Layer::default() };
        let cfg = CliConfig::from_layer(env.over(flags.over(file))).unwrap();
        assert_eq!(cfg.default_k, rational::int(3));
        assert_eq!(cfg.output_format, Format::Json);
        assert_eq!(cfg.float_digits, 8);
        assert_eq!(cfg.cache_path, None);
    }

    #[test]
    fn rejects_bad_values() {
        assert!(Layer::parse_file("colour = red").is_err());
        assert!(Layer::parse_file("default_k 2").is_err());
        let bad = |layer: Layer| CliConfig::from_layer(layer).is_err();
        assert!(bad(Layer { default_k: Some("-1".into()), ..Layer::default() }));
        assert!(bad(Layer { float_digits: Some("5".into()), ..Layer::default() }));
        assert!(bad(Layer { output_format: Some("xml".into()), ..Layer::default() }));
    }

    #[test]
    fn env_names() {
        let env = Layer::from_env(|k| (k == "JSOB_CACHE_PATH").then(|| "/tmp/c.json".to_string()));
        assert_eq!(env.cache_path.as_deref(), Some("/tmp/c.json"));
        assert_eq!(env.default_k, None);
    }
}
