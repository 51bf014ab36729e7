use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "bary.h"

int main(void) {
    char *text = NULL;
    if (bary_count(2, 80, BARY_COUNT_METHOD_RECURRENCE, &text) != BARY_STATUS_OK) return 1;
    if (strcmp(text, "4124") != 0) return 2;
    bary_string_free(text);

    BaryHasse *h = NULL;
    if (bary_hasse_build(2, 80, true, 1000000, &h) != BARY_STATUS_OK) return 3;
    if (bary_hasse_node_count(h) != 4124 || bary_hasse_edge_count(h) != 12484) return 4;
    bary_hasse_free(h);

    uint64_t x[] = {0, 3}, y[] = {2, 0, 1}, out[4];
    size_t len = 0;
    if (bary_meet(2, 6, x, 2, y, 3, out, 4, &len) != BARY_STATUS_OK) return 5;
    if (len != 3 || out[0] != 0 || out[1] != 1 || out[2] != 1) return 6;

    if (bary_count(1, 5, BARY_COUNT_METHOD_SUM, &text) != BARY_STATUS_INVALID_BASIS) return 7;
    printf("%s\n", bary_last_error());
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(include.join("bary.h").exists(), "header not generated");
    let lib = target_dir().join("libbary_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let exe = dir.path().join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "C program failed: {out:?}");
    assert!(String::from_utf8_lossy(&out.stdout).contains("at least 2"));
}
