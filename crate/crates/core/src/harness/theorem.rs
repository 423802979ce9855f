use std::fmt;

use super::HarnessError;

/// A prediction a scan compares against the exact solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// Brute-force oracle equals the exact solver.
    Oracle,
    /// Direct `rho = 2` test.
    Rho2,
    /// Four-condition test for `2 <= rho <= t`.
    Window(usize),
    /// `rho = t` as window `t` minus window `t - 1`.
    Exact(usize),
    /// Once-subdivided stars are exactly the graphs with `rho = m - 1`.
    M1,
    /// The A families are exactly the graphs with `rho = m - 2`.
    M2,
    /// The R and S families are exactly the graphs with `rho = m - 3`.
    M3,
    /// Structural class prediction equals the class of the exact `rho`,
    /// and at most one class matches.
    Classes,
    Invariants,
}

impl Theorem {
    pub fn defaults() -> Vec<Theorem> {
        let mut out = vec![Theorem::Oracle, Theorem::Rho2];
        out.extend((2..=5).map(Theorem::Window));
        out.extend([Theorem::M1, Theorem::M2, Theorem::M3, Theorem::Classes, Theorem::Invariants]);
        out
    }

    pub(crate) fn needs_families(self) -> bool {
        matches!(self, Theorem::M2 | Theorem::M3 | Theorem::Classes)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theorem::Oracle => f.write_str("oracle"),
            Theorem::Rho2 => f.write_str("rho2"),
            Theorem::Window(t) => write!(f, "t-window({t})"),
            Theorem::Exact(t) => write!(f, "t-exact({t})"),
            Theorem::M1 => f.write_str("m1"),
            Theorem::M2 => f.write_str("m2"),
            Theorem::M3 => f.write_str("m3"),
            Theorem::Classes => f.write_str("classes"),
            Theorem::Invariants => f.write_str("invariants"),
        }
    }
}

/// Parses a comma separated list such as `rho2,t-window(2,3),t-exact(3..5),m3`.
/// Targets inside parentheses may be single values, lists or `a..b` ranges.
pub fn parse_theorems(list: &str) -> Result<Vec<Theorem>, HarnessError> {
    let mut out = Vec::new();
    for item in split_top_level(list) {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let theorem = match item {
            "oracle" => Theorem::Oracle,
            "rho2" => Theorem::Rho2,
            "m1" => Theorem::M1,
            "m2" => Theorem::M2,
            "m3" => Theorem::M3,
            "classes" => Theorem::Classes,
            "invariants" => Theorem::Invariants,
            _ => {
                let (name, args) = item
                    .strip_suffix(')')
                    .and_then(|s| s.split_once('('))
                    .ok_or_else(|| HarnessError::UnknownTheorem(item.to_string()))?;
                let (make, min): (fn(usize) -> Theorem, usize) = match name.trim() {
                    "t-window" => (Theorem::Window, 2),
                    "t-exact" => (Theorem::Exact, 3),
                    _ => return Err(HarnessError::UnknownTheorem(item.to_string())),
                };
                for t in targets(args)? {
                    if t < min {
                        return Err(HarnessError::BadTarget(format!("{name} needs t >= {min}, got {t}")));
                    }
                    push_unique(&mut out, make(t));
                }
                continue;
            }
        };
        push_unique(&mut out, theorem);
    }
    Ok(out)
}

fn push_unique(out: &mut Vec<Theorem>, t: Theorem) {
    if !out.contains(&t) {
        out.push(t);
    }
}

fn split_top_level(list: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in list.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&list[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&list[start..]);
    parts
}

fn targets(args: &str) -> Result<Vec<usize>, HarnessError> {
    let bad = || HarnessError::BadTarget(format!("malformed target list `{args}`"));
    let mut out = Vec::new();
    for part in args.split(',') {
        let part = part.trim();
        if let Some((a, b)) = part.split_once("..") {
            let a = a.trim().parse::<usize>().map_err(|_| bad())?;
            let b = b.trim().trim_start_matches('=').parse::<usize>().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse::<usize>().map_err(|_| bad())?);
        }
    }
    Ok(out)
}
