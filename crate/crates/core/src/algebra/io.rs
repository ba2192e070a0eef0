use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{AlgebraError, FinAlg, RawAlgebra};

/// JSON rendering of algebra files: one table row per line, fields in the
/// documented order, no trailing whitespace.
pub trait AlgebraJson {
    fn to_json(&self) -> String;
}

impl AlgebraJson for RawAlgebra {
    fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let quote = |s: &str| serde_json::to_string(s).expect("string serializes");
        if let Some(name) = &self.name {
            let _ = writeln!(out, "  \"name\": {},", quote(name));
        }
        let _ = writeln!(out, "  \"size\": {},", self.size);
        let _ = writeln!(out, "  \"unit\": {},", self.unit);
        match self.zero {
            Some(z) => {
                let _ = writeln!(out, "  \"zero\": {z},");
            }
            None => out.push_str("  \"zero\": null,\n"),
        }
        let mut tables: Vec<(&str, &Vec<Vec<usize>>)> = vec![
            ("join", &self.join),
            ("meet", &self.meet),
            ("prod", &self.prod),
        ];
        if let Some(l) = &self.ldiv {
            tables.push(("ldiv", l));
        }
        if let Some(r) = &self.rdiv {
            tables.push(("rdiv", r));
        }
        let last = tables.len() - 1;
        for (i, (key, rows)) in tables.into_iter().enumerate() {
            let _ = writeln!(out, "  \"{key}\": [");
            for (r, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                let sep = if r + 1 < rows.len() { "," } else { "" };
                let _ = writeln!(out, "    [{}]{sep}", cells.join(", "));
            }
            out.push_str(if i == last { "  ]\n" } else { "  ],\n" });
        }
        out.push_str("}\n");
        out
    }
}

impl AlgebraJson for FinAlg {
    fn to_json(&self) -> String {
        self.to_raw().to_json()
    }
}

/// Reads and validates an algebra file.
pub fn read_algebra(path: impl AsRef<Path>) -> Result<FinAlg, AlgebraError> {
    let text = fs::read_to_string(path)?;
    let raw: RawAlgebra = serde_json::from_str(&text)?;
    FinAlg::from_raw(&raw)
}

pub fn write_algebra(path: impl AsRef<Path>, alg: &FinAlg) -> Result<(), AlgebraError> {
    fs::write(path, alg.to_json())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_parses_back() {
        let raw = RawAlgebra {
            name: Some("two".into()),
            size: 2,
            unit: 1,
            zero: Some(0),
            join: vec![vec![0, 1], vec![1, 1]],
            meet: vec![vec![0, 0], vec![0, 1]],
            prod: vec![vec![0, 0], vec![0, 1]],
            ldiv: None,
            rdiv: None,
        };
        let text = raw.to_json();
        let back: RawAlgebra = serde_json::from_str(&text).unwrap();
        assert_eq!(back, raw);
        let full = FinAlg::from_raw(&raw).unwrap().to_json();
        assert!(full.contains("\"ldiv\": ["));
        assert!(full.contains("    [1, 1],\n"));
    }

    #[test]
    fn missing_zero_field_means_none() {
        let text = r#"{"size": 1, "unit": 0, "join": [[0]], "meet": [[0]], "prod": [[0]]}"#;
        let raw: RawAlgebra = serde_json::from_str(text).unwrap();
        assert_eq!(raw.zero, None);
        assert!(FinAlg::from_raw(&raw).is_ok());
    }
}
