//! Structural audit of the `(p1, p2)` rule for Class D templates.

use std::fmt::{self, Write as _};

use crate::templates::{CellRequirement, TemplateClass, TemplateSet, Variant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P1P2Verdict {
    pub id: String,
    pub p1: CellRequirement,
    pub p2: CellRequirement,
    /// Whether object points at both `p1` and `p2` satisfy the template's cells.
    pub both_object_realizable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P1P2AuditReport {
    pub variant: Variant,
    pub verdicts: Vec<P1P2Verdict>,
    /// Class A–C templates, for which the rule does not apply.
    pub not_applicable: usize,
}

impl P1P2AuditReport {
    pub fn violations(&self) -> impl Iterator<Item = &P1P2Verdict> {
        self.verdicts.iter().filter(|v| v.both_object_realizable)
    }

    pub fn violation_count(&self) -> usize {
        self.violations().count()
    }

    /// `key=value` lines: a summary line, then one line per Class D template.
    pub fn to_structured(&self) -> String {
        let mut s = format!(
            "variant={} class_d={} violations={} not_applicable={}\n",
            self.variant,
            self.verdicts.len(),
            self.violation_count(),
            self.not_applicable
        );
        for v in &self.verdicts {
            let _ = writeln!(
                s,
                "template={} p1={} p2={} violation={}",
                v.id,
                req_name(v.p1),
                req_name(v.p2),
                v.both_object_realizable
            );
        }
        s
    }
}

fn req_name(r: CellRequirement) -> &'static str {
    match r {
        CellRequirement::Object => "object",
        CellRequirement::Background => "background",
        CellRequirement::DontCare => "dont-care",
    }
}

impl fmt::Display for P1P2AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p1p2 audit, variant {}", self.variant)?;
        for v in &self.verdicts {
            writeln!(
                f,
                "  {:<6} p1={:<10} p2={:<10} {}",
                v.id,
                req_name(v.p1),
                req_name(v.p2),
                if v.both_object_realizable { "VIOLATION" } else { "ok" }
            )?;
        }
        writeln!(f, "class A-C templates: {} (rule not applicable)", self.not_applicable)?;

        write!(f, "violations: {} of {}", self.violation_count(), self.verdicts.len())
    }
}

/// Checks every Class D template for a consistent `(p1, p2) = (1, 1)`.
pub fn audit_p1p2(set: &TemplateSet) -> P1P2AuditReport {
    let mut verdicts = Vec::new();
    let mut not_applicable = 0;
    for t in set.templates() {
        match (t.class(), t.p1p2_offsets()) {
            (TemplateClass::D, Some((a, b))) => {
                let (p1, p2) = (t.cell(a), t.cell(b));
                let ok = |r| r != CellRequirement::Background;
                verdicts.push(P1P2Verdict {
                    id: t.id().to_string(),
                    p1,
                    p2,
                    both_object_realizable: ok(p1) && ok(p2),
                });
            }
            _ => not_applicable += 1,
        }
    }
    P1P2AuditReport { variant: set.variant(), verdicts, not_applicable }
}
