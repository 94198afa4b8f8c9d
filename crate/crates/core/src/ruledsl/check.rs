use std::collections::HashMap;
use std::fmt;

use crate::error::Result;
use crate::inference::{Antecedent, Rule};
use crate::ruledsl::parser::parse_lines;
use crate::variable::LinguisticVariable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicateRule {
    pub first_line: usize,
    pub second_line: usize,
    /// The two lines disagree on the consequent.
    pub conflicting: bool,
}

/// Validation summary for a rule file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleCheck {
    pub rule_count: usize,
    /// Antecedent label combinations that no rule covers.
    pub gaps: Vec<Vec<String>>,
    pub duplicates: Vec<DuplicateRule>,
}

impl RuleCheck {
    pub fn is_clean(&self) -> bool {
        self.gaps.is_empty() && self.duplicates.is_empty()
    }
}

impl fmt::Display for RuleCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} rules, ", self.rule_count)?;
        if self.gaps.is_empty() {
            f.write_str("complete, ")?;
        } else {
            write!(f, "{} missing combinations, ", self.gaps.len())?;
        }
        let conflicts = self.duplicates.iter().filter(|d| d.conflicting).count();
        let repeats = self.duplicates.len() - conflicts;
        if conflicts == 0 {
            f.write_str("no conflicts")?;
        } else {
            write!(f, "{conflicts} conflicts")?;
        }
        if repeats > 0 {
            write!(f, ", {repeats} repeated rules")?;
        }
        for gap in &self.gaps {
            write!(f, "\n  missing: {}", gap.join(" / "))?;
        }
        for d in &self.duplicates {
            let kind = if d.conflicting { "conflict" } else { "repeat" };
            write!(
                f,
                "\n  {kind}: lines {} and {}",
                d.first_line, d.second_line
            )?;
        }
        Ok(())
    }
}

fn covers(rule: &Rule, combo: &[usize]) -> bool {
    rule.antecedents()
        .iter()
        .all(|a| combo[a.variable] == a.term)
}

/// Parses `text` and reports rule count, uncovered label combinations and
/// duplicated antecedent sets. Syntax and binding errors are still errors.
pub fn check_rules(
    text: &str,
    inputs: &[LinguisticVariable],
    output: &LinguisticVariable,
) -> Result<RuleCheck> {
    let parsed = parse_lines(text, inputs, output)?;

    let mut seen: HashMap<&[Antecedent], (usize, &Rule)> = HashMap::new();
    let mut duplicates = Vec::new();
    for p in &parsed {
        match seen.get(p.rule.antecedents()) {
            Some(&(line, prev)) => duplicates.push(DuplicateRule {
                first_line: line,
                second_line: p.line,
                conflicting: prev.consequent() != p.rule.consequent(),
            }),
            None => {
                seen.insert(p.rule.antecedents(), (p.line, &p.rule));
            }
        }
    }

    let sizes: Vec<usize> = inputs.iter().map(|v| v.terms().len()).collect();
    let mut gaps = Vec::new();
    let mut combo = vec![0usize; sizes.len()];
    'outer: loop {
        if !parsed.iter().any(|p| covers(&p.rule, &combo)) {
            gaps.push(
                combo
                    .iter()
                    .zip(inputs)
                    .map(|(&t, v)| v.terms()[t].label.clone())
                    .collect(),
            );
        }
        // odometer over the Cartesian product, first input slowest
        for k in (0..combo.len()).rev() {
            combo[k] += 1;
            if combo[k] < sizes[k] {
                continue 'outer;
            }
            combo[k] = 0;
        }
        break;
    }

    Ok(RuleCheck {
        rule_count: parsed.len(),
        gaps,
        duplicates,
    })
}
