use crate::Failure;
use serde::Serialize;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

pub struct Sink {
    writer: Box<dyn Write>,
    pretty: bool,
}

impl Sink {
    pub fn open(path: Option<&Path>, pretty: bool) -> Result<Sink, Failure> {
        let writer: Box<dyn Write> = match path {
            None => Box::new(BufWriter::new(std::io::stdout())),
            Some(p) => {
                let f = File::create(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
                Box::new(BufWriter::new(f))
            }
        };
        Ok(Sink { writer, pretty })
    }

    pub fn pretty(&self) -> bool {
        self.pretty
    }

    /// One NDJSON record.
    pub fn json<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        serde_json::to_writer(&mut self.writer, value).map_err(|e| Failure::Input(e.to_string()))?;
        self.writer.write_all(b"\n")?;
        Ok(())
    }

    pub fn text(&mut self, s: &str) -> Result<(), Failure> {
        self.writer.write_all(s.as_bytes())?;
        self.writer.flush()?;
        Ok(())
    }

    /// Writes the table in pretty mode; flushes either way.
    pub fn table(&mut self, t: &Table) -> Result<(), Failure> {
        if self.pretty {
            self.writer.write_all(t.render().as_bytes())?;
        }
        self.writer.flush()?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<(), Failure> {
        self.writer.flush()?;
        Ok(())
    }
}

pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Table {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<const N: usize>(&mut self, cells: [String; N]) {
        self.rows.push(cells.to_vec());
    }

    pub fn render(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        for r in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}
