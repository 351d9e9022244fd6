//! Flat key=value reports and exit statuses.

use std::fmt::Write as _;

use graycat::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Failed = 1,
    Inconclusive = 2,
    InputError = 3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

/// Ordered entries; the status is the worst one recorded.
#[derive(Debug, Default)]
pub struct Report {
    entries: Vec<(String, String)>,
    status: Option<Status>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    fn raise(&mut self, s: Status) {
        self.status = Some(self.status.map_or(s, |t| t.max(s)));
    }

    /// A property the command asserts: failure sets exit status 1.
    pub fn assert(&mut self, key: &str, check: &Result<(), String>) {
        match check {
            Ok(()) => self.put(key, true),
            Err(detail) => {
                self.put(key, false);
                self.put(&format!("{key}.detail"), detail);
                self.raise(Status::Failed);
            }
        }
    }

    pub fn fail(&mut self, key: &str, detail: impl ToString) {
        self.put(key, detail);
        self.raise(Status::Failed);
    }

    /// Records a library error under `error` with the matching status.
    pub fn error(&mut self, e: &Error) {
        let status = match e {
            Error::Budget { .. } => Status::Inconclusive,
            Error::Internal(_) => Status::Failed,
            _ => Status::InputError,
        };
        self.put(if status == Status::Inconclusive { "inconclusive" } else { "error" }, e);
        self.raise(status);
    }

    pub fn status(&self) -> Status {
        self.status.unwrap_or(Status::Ok)
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        let status = match self.status() {
            Status::Ok => "ok",
            Status::Failed => "failed",
            Status::Inconclusive => "inconclusive",
            Status::InputError => "input-error",
        };
        let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0).max(6);
        for (k, v) in self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str())).chain([("status", status)]) {
            match format {
                Format::Machine => {
                    let _ = writeln!(out, "{k}={}", v.replace('\\', "\\\\").replace('\n', "\\n"));
                }
                Format::Human => {
                    let mut lines = v.lines();
                    let _ = writeln!(out, "{k:<width$}  {}", lines.next().unwrap_or(""));
                    for l in lines {
                        let _ = writeln!(out, "{:<width$}  {l}", "");
                    }
                }
            }
        }
        out
    }
}
