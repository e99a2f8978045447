use std::path::PathBuf;
use std::sync::Arc;

use bernoulli_stirling::stirling::{triangle_load, triangle_save};
use bernoulli_stirling::{FormulaContext, StirlingTriangle};

pub const CACHE_DIR_ENV: &str = "BSTIR_CACHE_DIR";
pub const CACHE_FILE_NAME: &str = "stirling2-v1.txt";

/// `$BSTIR_CACHE_DIR`, else `$XDG_CACHE_HOME/bstir`, else `$HOME/.cache/bstir`,
/// else a directory under the system temp dir.
pub fn cache_dir() -> PathBuf {
    let non_empty = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    if let Some(dir) = non_empty(CACHE_DIR_ENV) {
        return dir;
    }
    if let Some(xdg) = non_empty("XDG_CACHE_HOME") {
        return xdg.join("bstir");
    }
    if let Some(home) = non_empty("HOME") {
        return home.join(".cache").join("bstir");
    }
    std::env::temp_dir().join("bstir-cache")
}

pub fn cache_file() -> PathBuf {
    cache_dir().join(CACHE_FILE_NAME)
}

/// Cached triangle when present, valid and large enough; otherwise built.
/// A broken cache file is reported and ignored, never fatal.
pub fn triangle_with_rows(rows: usize) -> Arc<StirlingTriangle> {
    let path = cache_file();
    if path.exists() {
        match triangle_load(&path) {
            Ok(t) if t.max_n() >= rows => return Arc::new(t),
            Ok(_) => {}
            Err(e) => eprintln!("warning: ignoring cache {}: {e}", path.display()),
        }
    }
    Arc::new(StirlingTriangle::build(rows))
}

pub fn context_for_index(max_index: usize) -> FormulaContext {
    FormulaContext::with_triangle(triangle_with_rows(FormulaContext::rows_needed(max_index)))
}

pub fn build(max_n: usize) -> anyhow::Result<PathBuf> {
    let dir = cache_dir();
    std::fs::create_dir_all(&dir)
        .map_err(|e| anyhow::anyhow!("cannot create cache directory {}: {e}", dir.display()))?;
    let path = dir.join(CACHE_FILE_NAME);
    triangle_save(&StirlingTriangle::build(max_n), &path)
        .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?;
    Ok(path)
}

/// Idempotent.
pub fn clear() -> anyhow::Result<()> {
    let path = cache_file();
    match std::fs::remove_file(&path) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(()),
        Err(e) => Err(anyhow::anyhow!("cannot remove {}: {e}", path.display())),
    }
}
