use std::collections::HashSet;
use std::path::Path;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::subgroups::enumerate_subgroups;
use crate::analysis::report::GroupReport;
use crate::construct::{builtin, direct_product, parse_group_file, symmetric};
use crate::error::{Error, Result};
use crate::group::PermGroup;

/// Named groups always present in the default catalog. Several are there
/// because they fail the predicates under test.
pub const NAMED: &[&str] = &[
    "s3", "s5", "a5", "a6", "q8", "sd16", "gl23", "sl25", "w", "l34", "l34b", "cyc:12", "dih:4",
    "genq:16", "alt:4",
];

/// Direct products in the default catalog, as pairs of builtin names.
pub const PRODUCTS: &[(&str, &str)] =
    &[("q8", "cyc:3"), ("s3", "cyc:2"), ("dih:4", "cyc:2"), ("q8", "q8")];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: String,
    pub group: PermGroup,
    /// Whether the entry comes from a subgroup scan.
    pub scanned: bool,
}

#[derive(Debug, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    scan_degree: Option<usize>,
    reports: OnceLock<Vec<GroupReport>>,
}

impl Catalog {
    pub fn new() -> Self {
        Catalog::default()
    }

    /// Subgroups of `S_degree` plus the named groups and products.
    pub fn standard(scan_degree: usize, cap: usize) -> Result<Self> {
        let mut c = Catalog::new();
        c.add_scan(scan_degree, cap)?;
        c.add_named(cap)?;
        Ok(c)
    }

    pub fn add_scan(&mut self, degree: usize, cap: usize) -> Result<()> {
        let parent = symmetric(degree)?.with_cap(cap);
        let subs = enumerate_subgroups(&parent)?;
        let width = subs.len().to_string().len();
        for (i, h) in subs.into_iter().enumerate() {
            self.push(format!("S{degree}/{i:0width$}"), h, true, cap)?;
        }
        self.scan_degree = Some(degree);
        Ok(())
    }

    pub fn add_named(&mut self, cap: usize) -> Result<()> {
        for name in NAMED {
            self.push(name.to_string(), builtin(name)?, false, cap)?;
        }
        for (a, b) in PRODUCTS {
            let g = direct_product(&builtin(a)?, &builtin(b)?)?;
            self.push(format!("{a}x{b}"), g, false, cap)?;
        }
        Ok(())
    }

    /// Adds every group file listed (one path per line) in `list`.
    pub fn add_seed_file(&mut self, list: &Path, cap: usize) -> Result<()> {
        let text = std::fs::read_to_string(list)
            .map_err(|e| Error::InvalidParameter(format!("{}: {e}", list.display())))?;
        let base = list.parent().unwrap_or(Path::new("."));
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let path = base.join(line);
            let body = std::fs::read_to_string(&path)
                .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
            let g = parse_group_file(&body)?;
            self.push(format!("file:{line}"), g, false, cap)?;
        }
        Ok(())
    }

    pub fn push(&mut self, label: String, group: PermGroup, scanned: bool, cap: usize) -> Result<()> {
        if self.entries.iter().any(|e| e.label == label) {
            return Err(Error::InvalidParameter(format!("duplicate catalog label {label}")));
        }
        if group.order() > cap as u128 {
            return Err(Error::TooLarge { order: group.order(), cap });
        }
        self.reports = OnceLock::new();
        self.entries.push(CatalogEntry { label, group: group.with_cap(cap), scanned });
        Ok(())
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scan_degree(&self) -> Option<usize> {
        self.scan_degree
    }

    /// Analysis of every entry, computed in parallel once.
    pub fn reports(&self) -> Result<&[GroupReport]> {
        if let Some(r) = self.reports.get() {
            return Ok(r);
        }
        let computed = self
            .entries
            .par_iter()
            .map(|e| GroupReport::analyze(e.label.clone(), &e.group))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.reports.get_or_init(|| computed))
    }

    pub fn labels(&self) -> HashSet<&str> {
        self.entries.iter().map(|e| e.label.as_str()).collect()
    }
}
