use std::io::Read;

use partmzv::word_algebra::parse::parse_wordsum;
use partmzv::{Error, Letter, Model, Partition, Word, WordSum};

use crate::CliError;

fn read_arg(s: &str) -> Result<String, CliError> {
    if s == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        Ok(s.to_string())
    }
}

/// Reads a word sum given as compact text, a JSON word sum `{"model":…,"terms":[…]}`,
/// or a JSON word `[[k,d],…]`. `-` reads from stdin.
pub fn wordsum(s: &str) -> Result<(Option<Model>, WordSum), CliError> {
    let s = read_arg(s)?;
    let t = s.trim();
    if t.starts_with('{') || t.starts_with('[') {
        let v: serde_json::Value =
            serde_json::from_str(t).map_err(|e| CliError::Input(format!("malformed JSON: {e}")))?;
        if v.is_array() {
            let pairs: Vec<[u32; 2]> = serde_json::from_value(v)
                .map_err(|e| CliError::Input(format!("malformed word JSON: {e}")))?;
            let letters = pairs
                .iter()
                .map(|p| Letter::new(p[0], p[1]))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok((None, WordSum::from_word(Word(letters))));
        }
        let (m, ws) = WordSum::from_json(&v)?;
        return Ok((Some(m), ws));
    }
    Ok((None, parse_wordsum(t)?))
}

/// Like [`wordsum`], but the input must be a single word with coefficient one.
pub fn word(s: &str) -> Result<(Option<Model>, Word), CliError> {
    let (m, ws) = wordsum(s)?;
    let mut it = ws.iter();
    match (it.next(), it.next()) {
        (Some((w, c)), None) if *c == num_traits::One::one() => Ok((m, w.clone())),
        _ => Err(CliError::Input(format!("expected a single word, got {ws}"))),
    }
}

pub fn partition(s: &str) -> Result<Partition, CliError> {
    let parts: Vec<u32> = serde_json::from_str(s.trim())
        .map_err(|e| CliError::Input(format!("malformed partition: {e}")))?;
    Ok(Partition::new(parts)?)
}

/// The model from `--model`, or from the JSON input, defaulting to seki. A disagreement is an input error.
pub fn model(flag: Option<Model>, found: &[Option<Model>]) -> Result<Model, CliError> {
    let mut m = flag;
    for &f in found.iter().flatten() {
        match m {
            None => m = Some(f),
            Some(x) if x != f => {
                return Err(CliError::Input(format!(
                    "model {f} in the input conflicts with {x}"
                )));
            }
            _ => {}
        }
    }
    Ok(m.unwrap_or(Model::Seki))
}

pub fn parse_model(s: &str) -> Result<Model, String> {
    s.parse::<Model>().map_err(|e: Error| e.to_string())
}
