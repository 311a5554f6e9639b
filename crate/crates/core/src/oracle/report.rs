use std::fmt;

/// How a claim's counterexample count is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    /// Holds on every instance; passes iff no counterexample is found.
    Universal,
    /// Asserts that counterexamples exist; passes iff at least one is found.
    Existence,
    /// Reported for inspection only; never fails.
    Informational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

/// Number of counterexamples kept per claim.
pub const MAX_EXAMPLES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: String,
    pub kind: ClaimKind,
    pub checked: usize,
    pub skipped: usize,
    pub violations: usize,
    pub examples: Vec<String>,
}

impl ClaimResult {
    pub fn status(&self) -> Status {
        match self.kind {
            ClaimKind::Informational => Status::Info,
            ClaimKind::Universal if self.violations == 0 && self.checked > 0 => Status::Pass,
            ClaimKind::Existence if self.violations > 0 => Status::Pass,
            _ => Status::Fail,
        }
    }

    /// Records one instance whose hypothesis held. `witness` is only built
    /// when `ok` is false.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(witness());
            }
        }
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }
}

/// Claim results in registration order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub claims: Vec<ClaimResult>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// The claim with this id, registered with `kind` on first use.
    pub fn claim(&mut self, id: &str, kind: ClaimKind) -> &mut ClaimResult {
        let pos = match self.claims.iter().position(|c| c.id == id) {
            Some(pos) => pos,
            None => {
                self.claims.push(ClaimResult {
                    id: id.to_string(),
                    kind,
                    checked: 0,
                    skipped: 0,
                    violations: 0,
                    examples: Vec::new(),
                });
                self.claims.len() - 1
            }
        };
        &mut self.claims[pos]
    }

    pub fn get(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.claims.extend(other.claims);
    }

    /// Claims with status FAIL.
    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| c.status() == Status::Fail)
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.claims {
            writeln!(
                f,
                "CLAIM {} {} checked={} skipped={} violations={}",
                c.id,
                c.status(),
                c.checked,
                c.skipped,
                c.violations
            )?;
            for e in &c.examples {
                writeln!(f, "  {e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses_and_format() {
        let mut r = VerificationReport::new();
        r.claim("A", ClaimKind::Universal).record(true, || unreachable!());
        r.claim("A", ClaimKind::Universal).skip();
        r.claim("B", ClaimKind::Existence).record(false, || "w".into());
        r.claim("C", ClaimKind::Informational).record(false, || "x".into());
        r.claim("D", ClaimKind::Universal).record(false, || "bad".into());
        assert_eq!(r.get("A").unwrap().status(), Status::Pass);
        assert_eq!(r.get("B").unwrap().status(), Status::Pass);
        assert_eq!(r.get("C").unwrap().status(), Status::Info);
        assert_eq!(r.get("D").unwrap().status(), Status::Fail);
        assert_eq!(r.failures().count(), 1);
        let text = r.to_string();
        assert!(text.starts_with("CLAIM A PASS checked=1 skipped=1 violations=0\n"));
        assert!(text.contains("CLAIM D FAIL checked=1 skipped=0 violations=1\n  bad\n"));
    }

    #[test]
    fn unchecked_universal_claim_fails() {
        let mut r = VerificationReport::new();
        r.claim("E", ClaimKind::Universal).skip();
        assert_eq!(r.get("E").unwrap().status(), Status::Fail);
    }

    #[test]
    fn examples_are_capped() {
        let mut r = VerificationReport::new();
        for i in 0..25 {
            r.claim("F", ClaimKind::Universal).record(false, || i.to_string());
        }
        let c = r.get("F").unwrap();
        assert_eq!(c.violations, 25);
        assert_eq!(c.examples.len(), MAX_EXAMPLES);
    }
}
