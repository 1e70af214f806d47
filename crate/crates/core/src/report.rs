//! Structured verdicts with counterexample witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first basis tuple on which a law broke, with both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawEntry {
    pub name: String,
    pub status: Status,
    pub checked: usize,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl LawEntry {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub verdict: Status,
    pub laws: Vec<LawEntry>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), verdict: Status::Pass, laws: Vec::new() }
    }

    pub fn push(&mut self, law: LawEntry) {
        if !law.passed() {
            self.verdict = Status::Fail;
        }
        self.laws.push(law);
    }

    /// Appends another report's laws, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut law in other.laws {
            law.name = format!("{prefix}.{}", law.name);
            self.push(law);
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }

    pub fn law(&self, name: &str) -> Option<&LawEntry> {
        self.laws.iter().find(|l| l.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawEntry> {
        self.laws.iter().filter(|l| !l.passed())
    }

    pub fn failed_law_names(&self) -> Vec<&str> {
        self.failures().map(|l| l.name.as_str()).collect()
    }

    pub fn total_violations(&self) -> usize {
        self.laws.iter().map(|l| l.violations).sum()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {:?}", self.subject, self.verdict)?;
        for l in &self.laws {
            write!(f, "  {:<48} {:?} ({} checked", l.name, l.status, l.checked)?;
            if l.violations > 0 {
                write!(f, ", {} violations", l.violations)?;
            }
            write!(f, ")")?;
            if let Some(w) = &l.witness {
                write!(f, " at {:?}", w.indices)?;
                if let Some(n) = &w.note {
                    write!(f, " {n}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn strings<F: Field>(v: &[F]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// Accumulates comparisons for one law.
#[derive(Debug)]
pub struct Law {
    name: String,
    checked: usize,
    violations: usize,
    witness: Option<Witness>,
}

impl Law {
    pub fn new(name: impl Into<String>) -> Self {
        Law { name: name.into(), checked: 0, violations: 0, witness: None }
    }

    /// Compares both sides at the given basis tuple. Returns whether they agree.
    pub fn check<F: Field>(&mut self, indices: &[usize], lhs: &[F], rhs: &[F]) -> bool {
        self.checked += 1;
        if lhs == rhs {
            return true;
        }
        self.violations += 1;
        if self.witness.is_none() {
            self.witness =
                Some(Witness { indices: indices.to_vec(), note: None, lhs: strings(lhs), rhs: strings(rhs) });
        }
        false
    }

    /// Records a failure that has no vector sides (a construction error).
    pub fn fail(&mut self, indices: &[usize], note: impl Into<String>) {
        self.checked += 1;
        self.violations += 1;
        if self.witness.is_none() {
            self.witness =
                Some(Witness { indices: indices.to_vec(), note: Some(note.into()), lhs: Vec::new(), rhs: Vec::new() });
        }
    }

    pub fn require(&mut self, indices: &[usize], ok: bool, note: impl Into<String>) -> bool {
        if ok {
            self.checked += 1;
        } else {
            self.fail(indices, note);
        }
        ok
    }

    pub fn finish(self) -> LawEntry {
        LawEntry {
            name: self.name,
            status: if self.violations == 0 { Status::Pass } else { Status::Fail },
            checked: self.checked,
            violations: self.violations,
            witness: self.witness,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn first_witness_is_kept() {
        let mut law = Law::new("assoc");
        assert!(law.check(&[0], &[Q::one()], &[Q::one()]));
        assert!(!law.check(&[1, 2], &[Q::one()], &[Q::zero()]));
        assert!(!law.check(&[3], &[Q::one()], &[Q::from(2)]));
        let e = law.finish();
        assert_eq!(e.status, Status::Fail);
        assert_eq!(e.violations, 2);
        assert_eq!(e.checked, 3);
        assert_eq!(e.witness.unwrap().indices, vec![1, 2]);
    }

    #[test]
    fn verdict_tracks_laws() {
        let mut r = Report::new("x");
        r.push(Law::new("a").finish());
        assert!(r.passed());
        let mut bad = Law::new("b");
        bad.fail(&[0], "broken");
        let mut inner = Report::new("y");
        inner.push(bad.finish());
        r.absorb("inner", inner);
        assert!(!r.passed());
        assert_eq!(r.failed_law_names(), vec!["inner.b"]);
    }
}
