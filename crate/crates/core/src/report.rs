use std::fmt;

/// One failed instance of an axiom.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub axiom: &'static str,
    /// Names of the cells instantiating the axiom, in the order the axiom binds them.
    pub cells: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.axiom, self.cells.join(", "))
    }
}

/// Result of a validation pass. Empty iff every checked axiom holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: &'static str, cells: Vec<String>) {
        self.violations.push(Violation { axiom, cells });
    }

    /// Record a violation when `ok` is false.
    pub fn check(&mut self, ok: bool, axiom: &'static str, cells: impl FnOnce() -> Vec<String>) {
        if !ok {
            self.push(axiom, cells());
        }
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn mentions(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
