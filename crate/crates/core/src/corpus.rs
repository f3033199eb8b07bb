//! The bundled corpus of group files and the parallel verification sweep
//! over a directory of them.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::construct::direct_product;
use crate::error::{GroupError, Result};
use crate::families::*;
use crate::file::{read_group_file, serialize_group_file, GroupFile};
use crate::group::FiniteGroup;
use crate::verify::{analyze_group, GroupReport};
use crate::witness::{build_witness, search_paper_1500, search_paper_60};

fn product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup {
    direct_product(&a, &b).expect("corpus products stay under the order cap")
}

/// Every group of the bundled corpus, by name. Deterministic.
pub fn bundled_groups() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    let mut add = |name: &str, g: FiniteGroup| out.push((name.to_owned(), g));

    add("c6", cyclic(6));
    add("c12", cyclic(12));
    add("c2x2x2", abelian(&[2, 2, 2]));
    add("q8", quaternion());
    add("s3", symmetric(3));
    add("s4", symmetric(4));
    add("a4", alternating(4));
    add("a5", alternating(5));
    add("a5xc2", product(alternating(5), cyclic(2)));
    add("d10", dihedral(5));
    add("d14", dihedral(7));
    add("dic3", dicyclic(3));
    add("f20", metacyclic(5, 4));
    add("f21", metacyclic(7, 3));
    add("f52", metacyclic(13, 4));
    add("f55", metacyclic(11, 5));
    add("c2xs3", product(cyclic(2), symmetric(3)));
    add("c2xa4", product(cyclic(2), alternating(4)));
    add("c3xf21", product(cyclic(3), metacyclic(7, 3)));
    add("s3xs3", product(symmetric(3), symmetric(3)));
    add("c2xs3xs3", product(cyclic(2), product(symmetric(3), symmetric(3))));
    add("s3xs3xs3", product(symmetric(3), product(symmetric(3), symmetric(3))));
    add("s3xd10", product(symmetric(3), dihedral(5)));
    add("d10xf20", product(dihedral(5), metacyclic(5, 4)));
    add("f21xs3", product(metacyclic(7, 3), symmetric(3)));
    add("f21xf21", product(metacyclic(7, 3), metacyclic(7, 3)));
    add("f21xf39", product(metacyclic(7, 3), metacyclic(13, 3)));
    add("agaml-1-8", affine_semilinear_8());
    add("gf25-s3", affine_s3_on_25());

    let p60 = search_paper_60();
    for (k, hit) in p60.iter().enumerate() {
        let name = if k == 0 {
            "paper-60".to_owned()
        } else {
            format!("paper-60{}", (b'a' + k as u8) as char)
        };
        out.push((name, hit.group.clone()));
    }
    let base = p60[0].group.clone();
    for (name, factors) in [
        ("c2xpaper-60", vec![2]),
        ("c3xpaper-60", vec![3]),
        ("c4xpaper-60", vec![4]),
        ("c5xpaper-60", vec![5]),
        ("c6xpaper-60", vec![6]),
        ("c2x2xpaper-60", vec![2, 2]),
    ] {
        out.push((name.to_owned(), product(abelian(&factors), base.clone())));
    }

    let paper_1500 = build_witness("paper-1500").expect("witness search succeeds");
    out.push(("paper-1500".to_owned(), paper_1500.group));
    let (built, chosen) = search_paper_1500();
    for (k, (cand, g)) in built.into_iter().enumerate() {
        if Some(k) != chosen {
            out.push((format!("c5cube-dic3-l{}-n{}", cand.lambda, cand.nu), g));
        }
    }
    out
}

/// Group files of the bundled corpus, as `(file name, contents)`.
pub fn bundled_files() -> Vec<(String, String)> {
    bundled_groups()
        .into_iter()
        .map(|(name, g)| {
            let file = GroupFile::from_group(&g, Some(&name));
            (format!("{name}.json"), serialize_group_file(&file) + "\n")
        })
        .collect()
}

/// Writes the bundled corpus into `dir`.
pub fn write_bundled_corpus(dir: &Path) -> Result<usize> {
    std::fs::create_dir_all(dir)?;
    let files = bundled_files();
    for (name, text) in &files {
        std::fs::write(dir.join(name), text)?;
    }
    Ok(files.len())
}

/// A file that could not be turned into a group.
#[derive(Debug, Clone, Serialize)]
pub struct SkippedEntry {
    pub path: String,
    pub error: String,
}

#[derive(Debug, Clone)]
pub struct CorpusOutcome {
    /// Sorted by fingerprint, then name.
    pub reports: Vec<GroupReport>,
    pub skipped: Vec<SkippedEntry>,
}

impl CorpusOutcome {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(GroupReport::all_pass)
    }
}

/// `*.json` files of a directory, sorted by file name.
pub fn group_files_in(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    Ok(paths)
}

fn load(path: &Path) -> Result<(String, FiniteGroup)> {
    let file = read_group_file(path)?;
    let name = file.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    });
    Ok((name, file.to_group()?))
}

/// Analyzes every group file in `dir` on a pool of `jobs` threads.
pub fn run_corpus(dir: &Path, jobs: usize) -> Result<CorpusOutcome> {
    let paths = group_files_in(dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| GroupError::Io(e.to_string()))?;
    let results: Vec<std::result::Result<GroupReport, SkippedEntry>> = pool.install(|| {
        paths
            .par_iter()
            .map(|path| match load(path) {
                Ok((name, g)) => Ok(analyze_group(&name, &g)),
                Err(e) => Err(SkippedEntry {
                    path: path.display().to_string(),
                    error: e.to_string(),
                }),
            })
            .collect()
    });
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for r in results {
        match r {
            Ok(rep) => reports.push(rep),
            Err(s) => skipped.push(s),
        }
    }
    reports.sort_by(|a, b| {
        a.fingerprint
            .cmp(&b.fingerprint)
            .then_with(|| a.name.cmp(&b.name))
    });
    Ok(CorpusOutcome { reports, skipped })
}

pub const SUMMARY_HEADER: [&str; 11] = [
    "name",
    "order",
    "derived_length",
    "center_order",
    "a_group",
    "frobenius",
    "two_frobenius",
    "hypothesis",
    "connected",
    "diameter",
    "all_pass",
];

fn summary_row(r: &GroupReport) -> [String; 11] {
    let opt = |v: Option<String>| v.unwrap_or_default();
    [
        r.name.clone(),
        r.fingerprint.order.to_string(),
        opt(r.fingerprint.derived_length.map(|d| d.to_string())),
        r.fingerprint.center_order.to_string(),
        r.classification.a_group.to_string(),
        r.classification.frobenius.to_string(),
        r.classification.two_frobenius.to_string(),
        r.classification.hypothesis.to_string(),
        (r.graph.status == "connected").to_string(),
        opt(r.graph.diameter.map(|d| d.to_string())),
        r.all_pass().to_string(),
    ]
}

/// CSV summary, one row per report.
pub fn summary_csv(reports: &[GroupReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SUMMARY_HEADER).expect("in-memory write");
    for r in reports {
        w.write_record(summary_row(r)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn reports_json(reports: &[GroupReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let tmp = tempfile_path(dir, path);
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path).inspect_err(|_| {
        let _ = std::fs::remove_file(&tmp);
    })?;
    Ok(())
}

fn tempfile_path(dir: &Path, path: &Path) -> PathBuf {
    let stem = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    dir.join(format!(".{stem}.{}.tmp", std::process::id()))
}

/// Writes per-group reports, `report.json` and `summary.csv` into `dir`.
pub fn write_outputs(dir: &Path, outcome: &CorpusOutcome) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for r in &outcome.reports {
        let text = serde_json::to_string_pretty(r).expect("report serializes") + "\n";
        write_atomic(&dir.join(format!("{}.report.json", r.name)), &text)?;
    }
    write_atomic(&dir.join("report.json"), &reports_json(&outcome.reports))?;
    write_atomic(&dir.join("summary.csv"), &summary_csv(&outcome.reports))?;
    Ok(())
}
