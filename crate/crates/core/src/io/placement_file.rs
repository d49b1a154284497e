//! Line-oriented placement files.
//!
//! ```text
//! # the ℓ = 42 construction
//! I: 0 5 112..(5)..137
//! J: 10..(6)..106
//! K: 0..4 224..229 367..372
//! ```
//!
//! Each list starts with its label. Tokens are decimal integers, ranges
//! `a..b` (inclusive) or stepped ranges `a..(s)..b`. `#` starts a comment.
//! A list may be empty; a missing label means an empty list.

use crate::coverage::Placement;
use crate::error::{Error, Result};
use crate::intset::{make_ap, IntSet};

pub fn parse_placement(text: &str) -> Result<Placement> {
    let mut lists: [Option<IntSet>; 3] = [None, None, None];
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let (label, rest) = line
            .split_once(':')
            .ok_or_else(|| err(format!("expected `I:`, `J:` or `K:`, found `{line}`")))?;
        let slot = match label.trim() {
            "I" => 0,
            "J" => 1,
            "K" => 2,
            other => return Err(err(format!("unknown label `{other}`"))),
        };
        if lists[slot].is_some() {
            return Err(err(format!("duplicate label `{}`", label.trim())));
        }
        let mut set = IntSet::empty();
        for tok in rest.split_whitespace() {
            let part = parse_token(tok).map_err(|e| match e {
                Error::Parse { msg, .. } => err(msg),
                other => err(format!("`{tok}`: {other}")),
            })?;
            set = set.union(&part);
        }
        lists[slot] = Some(set);
    }
    let [i, j, k] = lists.map(Option::unwrap_or_default);
    Placement::new(i, j, k).map_err(|e| Error::Parse {
        line: last_line,
        msg: e.to_string(),
    })
}

fn parse_token(tok: &str) -> Result<IntSet> {
    let bad = || Error::Parse {
        line: 0,
        msg: format!("malformed token `{tok}`"),
    };
    let num = |s: &str| -> Result<i64> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<i64>().map_err(|_| bad())
    };
    let pieces: Vec<&str> = tok.split("..").collect();
    match pieces.as_slice() {
        [x] => make_ap(num(x)?, 1, num(x)?),
        [a, b] => make_ap(num(a)?, 1, num(b)?),
        [a, step, b] => {
            let step = step
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(bad)?;
            make_ap(num(a)?, num(step)?, num(b)?)
        }
        _ => Err(bad()),
    }
}

/// Canonical text: maximal arithmetic runs of three or more elements become
/// ranges, everything else is listed.
pub fn format_placement(p: &Placement) -> String {
    let mut out = String::new();
    for (label, set) in [("I", p.i()), ("J", p.j()), ("K", p.k())] {
        out.push_str(label);
        out.push(':');
        for tok in compress(set.as_slice()) {
            out.push(' ');
            out.push_str(&tok);
        }
        out.push('\n');
    }
    out
}

fn compress(e: &[u64]) -> Vec<String> {
    let mut toks = Vec::new();
    let mut p = 0;
    while p < e.len() {
        let mut q = p + 1;
        if q < e.len() {
            let step = e[q] - e[p];
            while q + 1 < e.len() && e[q + 1] - e[q] == step {
                q += 1;
            }
            if q - p >= 2 {
                toks.push(match step {
                    1 => format!("{}..{}", e[p], e[q]),
                    s => format!("{}..({})..{}", e[p], s, e[q]),
                });
                p = q + 1;
                continue;
            }
        }
        toks.push(e[p].to_string());
        p += 1;
    }
    toks
}
