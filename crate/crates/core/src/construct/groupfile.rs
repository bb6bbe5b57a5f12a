//! Plain-text group files.
//!
//! ```text
//! degree 3
//! # comment lines and blank lines are ignored
//! 2 3 1
//! 2 1 3
//! ```
//!
//! Each generator line holds the `n` one-line images, 1-based.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub fn parse_group_file(text: &str) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| err(format!("expected `degree <n>`, found `{line}`")))?;
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("bad degree `{}`", rest.trim())))?;
                if n == 0 {
                    return Err(err("degree must be positive".into()));
                }
                degree = Some(n);
            }
            Some(n) => {
                let images = line
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad image `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                if images.len() != n {
                    return Err(err(format!("expected {n} images, found {}", images.len())));
                }
                if let Some(bad) = images.iter().find(|&&x| x == 0 || x > n) {
                    return Err(err(format!("image {bad} out of range 1..{n}")));
                }
                let p = Permutation::from_images(&images)
                    .map_err(|_| err("generator is not a bijection".into()))?;
                gens.push(p);
            }
        }
    }
    let n = degree.ok_or(Error::Parse { line: 1, message: "missing `degree` line".into() })?;
    PermGroup::new(n, gens)
}

pub fn write_group_file(group: &PermGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        let parts: Vec<String> = g.images().iter().map(|x| x.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}
