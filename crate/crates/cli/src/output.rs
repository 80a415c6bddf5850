use std::io::{self, Write};

use serde_json::{Map, Value};

use crate::args::Format;

/// Writes records (JSON objects) in the selected format, one per line.
/// CSV takes its header from the first record.
pub struct Emitter {
    format: Format,
    out: io::BufWriter<io::Stdout>,
    header: Option<Vec<String>>,
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Number(x) => x.to_string(),
        other => other.to_string(),
    }
}

fn csv_line(fields: &[String]) -> io::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(fields).map_err(io::Error::other)?;
    w.into_inner().map_err(|e| io::Error::other(e.to_string()))
}

impl Emitter {
    pub fn new(format: Format) -> Self {
        Emitter { format, out: io::BufWriter::new(io::stdout()), header: None }
    }

    pub fn record(&mut self, v: &Value) -> io::Result<()> {
        let empty = Map::new();
        let obj = v.as_object().unwrap_or(&empty);
        match self.format {
            Format::Json | Format::Graph6 | Format::Dot => {
                serde_json::to_writer(&mut self.out, v)?;
                writeln!(self.out)
            }
            Format::Table => {
                let parts: Vec<String> = obj.iter().map(|(k, v)| format!("{k}={}", cell(v))).collect();
                writeln!(self.out, "{}", parts.join("  "))
            }
            Format::Csv => {
                if self.header.is_none() {
                    let header: Vec<String> = obj.keys().cloned().collect();
                    self.out.write_all(&csv_line(&header)?)?;
                    self.header = Some(header);
                }
                let header = self.header.as_ref().expect("set above");
                let row: Vec<String> = header.iter().map(|k| obj.get(k).map(cell).unwrap_or_default()).collect();
                self.out.write_all(&csv_line(&row)?)
            }
        }
    }

    pub fn line(&mut self, s: &str) -> io::Result<()> {
        writeln!(self.out, "{s}")
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}
