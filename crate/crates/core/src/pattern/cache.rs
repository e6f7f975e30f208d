//! On-disk cache of per-length member lists (and discovered minimal
//! non-members), keyed by oracle identifier and level. Entries carry a format
//! version stamp so stale layouts are recomputed rather than misread.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::perm::Permutation;

const FORMAT_VERSION: &str = "v1";

#[derive(Clone, Debug)]
pub struct MemberCache {
    dir: PathBuf,
}

impl MemberCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        MemberCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn file_path(&self, oracle_id: &str, kind: &str, len: usize) -> PathBuf {
        let safe: String = oracle_id
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || "._-".contains(c) { c } else { '-' })
            .collect();
        self.dir.join(safe).join(format!("{kind}_{len:02}.txt"))
    }

    pub fn load(&self, oracle_id: &str, kind: &str, len: usize) -> Option<Vec<Permutation>> {
        let path = self.file_path(oracle_id, kind, len);
        let text = fs::read_to_string(path).ok()?;
        let mut lines = text.lines();
        let header = lines.next()?;
        let expect = format!("# {kind} {FORMAT_VERSION} oracle={oracle_id} len={len}");
        if header != expect {
            return None;
        }
        let count: usize = lines.next()?.strip_prefix("# count=")?.parse().ok()?;
        let perms: Vec<Permutation> = lines
            .map(|l| l.parse::<Permutation>())
            .collect::<Result<_, _>>()
            .ok()?;
        if perms.len() != count {
            return None;
        }
        Some(perms)
    }

    pub fn store(
        &self,
        oracle_id: &str,
        kind: &str,
        len: usize,
        perms: &[Permutation],
    ) -> std::io::Result<()> {
        let path = self.file_path(oracle_id, kind, len);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        let tmp = path.with_extension("tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            writeln!(f, "# {kind} {FORMAT_VERSION} oracle={oracle_id} len={len}")?;
            writeln!(f, "# count={}", perms.len())?;
            for p in perms {
                writeln!(f, "{p}")?;
            }
        }
        fs::rename(tmp, path)
    }
}
