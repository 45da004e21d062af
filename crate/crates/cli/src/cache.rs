//! On-disk memo cache: one `f-n<N>.json` document per variable count.

use std::fs;
use std::path::{Path, PathBuf};

use jack_core::recursion::MemoStore;
use jack_core::Result;

pub struct CacheDir {
    root: PathBuf,
}

impl CacheDir {
    pub fn new(root: &Path) -> Result<Self> {
        fs::create_dir_all(root)?;
        Ok(Self {
            root: root.to_path_buf(),
        })
    }

    fn file_for(&self, n: usize) -> PathBuf {
        self.root.join(format!("f-n{n}.json"))
    }

    /// Cache documents present, sorted by `n`.
    fn files(&self) -> Result<Vec<(usize, PathBuf)>> {
        let mut out = Vec::new();
        for entry in fs::read_dir(&self.root)? {
            let path = entry?.path();
            let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("");
            if let Some(n) = name
                .strip_prefix("f-n")
                .and_then(|s| s.strip_suffix(".json"))
                .and_then(|s| s.parse().ok())
            {
                out.push((n, path));
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn load_into(&self, memo: &MemoStore) -> Result<usize> {
        let mut total = 0;
        for (_, path) in self.files()? {
            total += memo.load(&path)?;
        }
        Ok(total)
    }

    /// Write every variable count held by `memo`, via a temporary file and
    /// rename so a reader never sees a partial document.
    pub fn save_from(&self, memo: &MemoStore) -> Result<()> {
        for n in memo.variable_counts() {
            let dest = self.file_for(n);
            let tmp = dest.with_extension("json.tmp");
            memo.save(&tmp, n)?;
            fs::rename(&tmp, &dest)?;
        }
        Ok(())
    }

    pub fn clear(&self) -> Result<usize> {
        let files = self.files()?;
        for (_, path) in &files {
            fs::remove_file(path)?;
        }
        Ok(files.len())
    }
}
