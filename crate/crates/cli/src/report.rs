//! Accumulates one command's output as text lines and as a JSON object.

use serde_json::{Map, Value};
use varinterp::interp::Radicality;

pub(crate) struct Report {
    lines: Vec<String>,
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut fields = Map::new();
        fields.insert("command".into(), Value::from(command));
        Report { lines: Vec::new(), fields }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.into(), value.into());
    }

    pub fn status(&mut self, status: &str) {
        self.line(format!("status: {status}"));
        self.field("status", status);
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&Value::Object(self.fields.clone())).expect("plain JSON values");
            s.push('\n');
            s
        } else {
            self.lines.iter().map(|l| format!("{l}\n")).collect()
        }
    }
}

pub(crate) fn radicality_name(r: Radicality) -> &'static str {
    match r {
        Radicality::Radical => "radical",
        Radicality::NotRadical => "not radical",
        Radicality::Undecided => "undecided",
    }
}
