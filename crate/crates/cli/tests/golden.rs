//! Golden-file check: the full gallery report must match the committed
//! transcript byte for byte, and must not depend on the worker-thread count.
//! Run with `JSHIFT_BLESS=1` to refresh the transcript after an intended
//! output change.

use std::path::Path;
use std::process::Command;

fn gallery_stdout(threads: &str) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_jshift"))
        .args(["gallery", "--all", "--threads", threads])
        .env_remove("JSHIFT_DEFAULT_HORIZON")
        .output()
        .expect("gallery binary runs");
    assert!(
        out.status.success(),
        "gallery --all failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

#[test]
fn gallery_report_matches_golden_transcript() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/gallery_all.txt");
    let current = gallery_stdout("1");
    if std::env::var_os("JSHIFT_BLESS").is_some() {
        std::fs::write(&path, &current).expect("refresh golden transcript");
        return;
    }
    let expected =
        std::fs::read(&path).expect("golden transcript present (JSHIFT_BLESS=1 creates it)");
    assert_eq!(
        String::from_utf8_lossy(&current),
        String::from_utf8_lossy(&expected),
        "gallery output diverged from the golden transcript (JSHIFT_BLESS=1 refreshes it)"
    );
    assert_eq!(
        gallery_stdout("8"),
        expected,
        "thread count must not change the report"
    );
}
