//! Instance loading. A path may be a single file or a directory; directory
//! entries are loaded in name order so instance ids are stable.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

use nts_core::lrp::{parse_lrp, LrpInstance};
use nts_core::smtwtp::{parse_orlib, parse_single, SmtwtpInstance, ORLIB_SET_SIZE};

use crate::spec::Problem;

#[derive(Clone, Debug)]
pub enum InstanceData {
    Smtwtp(SmtwtpInstance),
    Lrp(LrpInstance),
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub data: InstanceData,
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn sorted_files(dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .with_context(|| format!("cannot read directory {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    Ok(files)
}

/// Load a scheduling instance set. A single file is either a whole
/// benchmark set (125 concatenated instances, job count inferred from the
/// token count) or one instance in the canonical single-instance format.
fn load_smtwtp(path: &Path) -> Result<Vec<Instance>> {
    if path.is_dir() {
        let mut out = Vec::new();
        for file in sorted_files(path)? {
            let text = fs::read_to_string(&file)?;
            let inst = parse_single(&text)
                .with_context(|| format!("parsing {}", file.display()))?;
            out.push(Instance { id: stem(&file), data: InstanceData::Smtwtp(inst) });
        }
        return Ok(out);
    }
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let tokens = text.split_whitespace().count();
    let per_set = 3 * ORLIB_SET_SIZE;
    if tokens > 0 && tokens % per_set == 0 {
        let n = tokens / per_set;
        let set = parse_orlib(&text, n)
            .with_context(|| format!("parsing {} as a {n}-job benchmark set", path.display()))?;
        let base = stem(path);
        return Ok(set
            .into_iter()
            .enumerate()
            .map(|(i, inst)| Instance {
                id: format!("{base}-{:03}", i + 1),
                data: InstanceData::Smtwtp(inst),
            })
            .collect());
    }
    let inst = parse_single(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(vec![Instance { id: stem(path), data: InstanceData::Smtwtp(inst) }])
}

fn load_lrp(path: &Path) -> Result<Vec<Instance>> {
    let files = if path.is_dir() { sorted_files(path)? } else { vec![path.to_path_buf()] };
    let mut out = Vec::new();
    for file in files {
        let text = fs::read_to_string(&file)
            .with_context(|| format!("cannot read {}", file.display()))?;
        let inst = parse_lrp(&text).with_context(|| format!("parsing {}", file.display()))?;
        out.push(Instance { id: stem(&file), data: InstanceData::Lrp(inst) });
    }
    Ok(out)
}

pub fn load_instances(problem: Problem, path: &Path) -> Result<Vec<Instance>> {
    let out = match problem {
        Problem::Smtwtp => load_smtwtp(path)?,
        Problem::Lrp => load_lrp(path)?,
    };
    if out.is_empty() {
        bail!("no instances found at {}", path.display());
    }
    Ok(out)
}

/// Reference-value file: either `id value` pairs or bare values matched
/// positionally against the sorted instance ids.
pub fn load_bounds(path: &Path, instance_ids: &[String]) -> Result<BTreeMap<String, f64>> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let widths: Vec<usize> = lines.iter().map(|l| l.split_whitespace().count()).collect();
    if widths.iter().all(|&w| w == 2) {
        let mut out = BTreeMap::new();
        for line in &lines {
            let mut toks = line.split_whitespace();
            let id = toks.next().unwrap().to_string();
            let value: f64 = toks.next().unwrap().parse()
                .with_context(|| format!("bad reference value in line {line:?}"))?;
            out.insert(id, value);
        }
        Ok(out)
    } else if widths.iter().all(|&w| w == 1) {
        let mut ids = instance_ids.to_vec();
        ids.sort();
        ids.dedup();
        if lines.len() != ids.len() {
            bail!(
                "{} bare reference values for {} instances; use `id value` pairs instead",
                lines.len(),
                ids.len()
            );
        }
        lines
            .iter()
            .zip(ids)
            .map(|(line, id)| {
                let value: f64 = line.parse()
                    .with_context(|| format!("bad reference value {line:?}"))?;
                Ok((id, value))
            })
            .collect()
    } else {
        bail!("reference file must be all `id value` pairs or all bare values");
    }
}
