//! Labelled samples and the line-oriented sample file format.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::word::{parse_word, Word};

/// A labelled example: `true` is `+`.
pub type Example = (Word, bool);

/// A finite set of labelled examples, kept in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sample {
    examples: Vec<Example>,
}

impl Sample {
    pub fn new() -> Self {
        Sample::default()
    }

    /// Builds a sample; duplicates collapse, conflicting labels are an error.
    pub fn from_examples<I: IntoIterator<Item = Example>>(it: I) -> Result<Self> {
        let mut s = Sample::new();
        for (w, l) in it {
            s.insert(w, l)?;
        }
        Ok(s)
    }

    pub fn insert(&mut self, w: Word, label: bool) -> Result<()> {
        if let Some((_, l)) = self.examples.iter().find(|(v, _)| *v == w) {
            if *l != label {
                return Err(Error::Precondition("a word appears with both labels".into()));
            }
            return Ok(());
        }
        self.examples.push((w, label));
        Ok(())
    }

    pub fn pos(&mut self, w: Word) -> Result<()> {
        self.insert(w, true)
    }

    pub fn neg(&mut self, w: Word) -> Result<()> {
        self.insert(w, false)
    }

    pub fn len(&self) -> usize {
        self.examples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.examples.is_empty()
    }

    pub fn examples(&self) -> &[Example] {
        &self.examples
    }

    pub fn iter(&self) -> impl Iterator<Item = &Example> {
        self.examples.iter()
    }

    pub fn positives(&self) -> impl Iterator<Item = &Word> {
        self.examples.iter().filter(|e| e.1).map(|e| &e.0)
    }

    pub fn negatives(&self) -> impl Iterator<Item = &Word> {
        self.examples.iter().filter(|e| !e.1).map(|e| &e.0)
    }

    pub fn label_of(&self, w: &Word) -> Option<bool> {
        self.examples.iter().find(|(v, _)| v == w).map(|e| e.1)
    }

    /// Renders one `+ word` / `- word` line per example.
    pub fn render(&self, alpha: &Alphabet) -> String {
        let mut out = String::new();
        for (w, l) in &self.examples {
            out.push(if *l { '+' } else { '-' });
            out.push(' ');
            out.push_str(&w.render(alpha));
            out.push('\n');
        }
        out
    }
}

/// Parses a sample file: `+ <word>` or `- <word>` per line; blank lines and
/// `#` comments are ignored.
pub fn parse_sample(text: &str, alpha: &Alphabet) -> Result<Sample> {
    let mut s = Sample::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: String| Error::Parse { pos: lineno + 1, msg };
        let (label, rest) = match line.split_at(1) {
            ("+", r) => (true, r),
            ("-", r) => (false, r),
            _ => return Err(bad(format!("line {} must start with `+` or `-`", lineno + 1))),
        };
        let w = parse_word(rest.trim(), alpha).map_err(|e| match e {
            Error::Parse { msg, .. } => bad(format!("line {}: {msg}", lineno + 1)),
            other => other,
        })?;
        s.insert(w, label).map_err(|_| bad(format!("line {}: word appears with both labels", lineno + 1)))?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let a = Alphabet::binary();
        let text = "# fixed set\n+ eps\n+ 0^21^20^2\n\n- 0\n- (01)^{1260}\n";
        let s = parse_sample(text, &a).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(parse_sample(&s.render(&a), &a).unwrap(), s);
    }

    #[test]
    fn conflicting_labels() {
        let a = Alphabet::binary();
        assert!(parse_sample("+ 01\n- 01\n", &a).is_err());
        assert!(parse_sample("* 01\n", &a).is_err());
        assert_eq!(parse_sample("+ 01\n+ 01\n", &a).unwrap().len(), 1);
    }
}
