use std::fmt::Write as _;
use std::time::Duration;

use crate::exactmath::{fmt_vector, to_decimal, Rational};

/// Output of one CLI command.
#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub input: String,
    pub lines: Vec<String>,
    pub checks: Vec<(String, bool)>,
    pub elapsed: Option<Duration>,
    decimal: Option<usize>,
}

impl RunReport {
    pub fn new(command: String, decimal: Option<usize>) -> Self {
        RunReport {
            command,
            decimal,
            ..Default::default()
        }
    }

    pub fn q(&self, r: &Rational) -> String {
        match self.decimal {
            Some(k) => to_decimal(r, k),
            None => r.to_string(),
        }
    }

    pub fn qv(&self, v: &[Rational]) -> String {
        match self.decimal {
            Some(_) => {
                let parts: Vec<String> = v.iter().map(|x| self.q(x)).collect();
                format!("({})", parts.join(", "))
            }
            None => fmt_vector(v),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn render(&self, timing: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if !self.input.is_empty() {
            let _ = writeln!(out, "input: {}", self.input);
        }
        for l in &self.lines {
            let _ = writeln!(out, "{l}");
        }
        if !self.checks.is_empty() {
            let failed: Vec<&str> = self
                .checks
                .iter()
                .filter(|(_, ok)| !ok)
                .map(|(n, _)| n.as_str())
                .collect();
            for name in &failed {
                let _ = writeln!(out, "FAILED: {name}");
            }
            let _ = writeln!(
                out,
                "checks: {} passed, {} failed",
                self.checks.len() - failed.len(),
                failed.len()
            );
        }
        if timing {
            if let Some(d) = self.elapsed {
                let _ = writeln!(out, "elapsed: {:.3} s", d.as_secs_f64());
            }
        }
        out
    }
}
