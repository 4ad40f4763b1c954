use std::fs;
use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use heffter::format::{parse_csv, parse_json, parse_text, set_to_csv, set_to_json, set_to_text, Document};
use heffter::PartialArray;

use crate::{Failure, Global};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn render_set(f: Format, set: &[PartialArray]) -> String {
    let mut s = match f {
        Format::Text => set_to_text(set),
        Format::Json => set_to_json(set),
        Format::Csv => set_to_csv(set),
    };
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

pub fn emit(g: &Global, text: &str) -> Result<(), Failure> {
    match &g.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::new(2, format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::new(4, format!("stdout: {e}")))
        }
    }
}

/// Reads any of the three formats, recognised by content.
pub fn read_document(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))?;
    let trimmed = text.trim_start();
    let doc = if trimmed.starts_with('{') {
        parse_json(&text)
    } else if trimmed.starts_with("member,") {
        parse_csv(&text)
    } else {
        parse_text(&text)
    };
    Ok(doc?)
}
