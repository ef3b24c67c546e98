use std::fmt::Write as _;
use std::time::{Duration, Instant};

/// Exit status for a run that completed and found nothing wrong.
pub const EXIT_OK: u8 = 0;
/// Some item failed verification.
pub const EXIT_VERIFY: u8 = 1;
/// Input could not be parsed or the command line was malformed.
pub const EXIT_USAGE: u8 = 2;
/// A search ran out of its node budget; results are partial.
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Informational line that neither passes nor fails.
    Info,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Item {
    pub status: Status,
    pub locator: String,
    pub detail: String,
}

#[derive(Debug)]
pub struct RunReport {
    pub command: String,
    pub items: Vec<Item>,
    pub elapsed: Duration,
    started: Instant,
    forced_exit: Option<u8>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> RunReport {
        RunReport {
            command: command.into(),
            items: Vec::new(),
            elapsed: Duration::ZERO,
            started: Instant::now(),
            forced_exit: None,
        }
    }

    fn push(&mut self, status: Status, locator: impl Into<String>, detail: impl Into<String>) {
        self.items.push(Item { status, locator: locator.into(), detail: detail.into() });
    }

    pub fn pass(&mut self, locator: impl Into<String>, detail: impl Into<String>) {
        self.push(Status::Pass, locator, detail);
    }

    pub fn fail(&mut self, locator: impl Into<String>, detail: impl Into<String>) {
        self.push(Status::Fail, locator, detail);
    }

    pub fn info(&mut self, locator: impl Into<String>, detail: impl Into<String>) {
        self.push(Status::Info, locator, detail);
    }

    pub fn check(&mut self, ok: bool, locator: impl Into<String>, detail: impl Into<String>) {
        self.push(if ok { Status::Pass } else { Status::Fail }, locator, detail);
    }

    /// Overrides the exit code derived from the items.
    pub fn exit_with(&mut self, code: u8) {
        self.forced_exit = Some(code);
    }

    pub fn finish(mut self) -> RunReport {
        self.elapsed = self.started.elapsed();
        self
    }

    pub fn failed(&self) -> usize {
        self.items.iter().filter(|i| i.status == Status::Fail).count()
    }

    pub fn exit_code(&self) -> u8 {
        self.forced_exit.unwrap_or(if self.failed() == 0 { EXIT_OK } else { EXIT_VERIFY })
    }

    pub fn render(&self, tsv: bool) -> String {
        let mut out = String::new();
        let ms = self.elapsed.as_secs_f64() * 1e3;
        if tsv {
            out.push_str("status\tlocator\tdetail\n");
            for i in &self.items {
                writeln!(out, "{}\t{}\t{}", i.status.label(), i.locator, i.detail).unwrap();
            }
            writeln!(out, "# {}\texit={}\tms={ms:.1}", self.command, self.exit_code()).unwrap();
        } else {
            writeln!(out, "$ {}", self.command).unwrap();
            for i in &self.items {
                writeln!(out, "{} {} {}", i.status.label(), i.locator, i.detail).unwrap();
            }
            writeln!(
                out,
                "{} item(s), {} failed, {ms:.1} ms, exit {}",
                self.items.len(),
                self.failed(),
                self.exit_code()
            )
            .unwrap();
        }
        out
    }
}
