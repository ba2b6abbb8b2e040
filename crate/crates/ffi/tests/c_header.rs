//! Compiles and runs a C program against the generated header and static library.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "hyperquartet.h"

int main(void) {
    HqHypergraph *h = NULL;
    if (hq_hypergraph_parse("2 4\n0101\n1011\n", &h) != HQ_STATUS_OK) return 10;
    HqHypergraph *g = NULL;
    if (hq_hypergraph_derive(h, HQ_INVOLUTION_COMPLEMENT, &g) != HQ_STATUS_OK) return 11;
    char *text = NULL;
    if (hq_hypergraph_to_hgx(g, &text) != HQ_STATUS_OK) return 12;
    int ok = strcmp(text, "2 4\n1010\n0100\n") == 0;
    hq_string_free(text);
    uint64_t k = 0;
    if (hq_count_colorings(h, 2, false, &k) != HQ_STATUS_OK) return 13;
    if (hq_hypergraph_parse("1 2\n2\n", &g) != HQ_STATUS_PARSE) return 14;
    printf("%llu %s\n", (unsigned long long)k, hq_last_error());
    hq_hypergraph_free(h);
    return ok ? 0 : 15;
}
"#;

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

fn compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
}

#[test]
fn c_program_links_and_runs() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let lib = target_dir().join("libhyperquartet_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("hq_smoke.c");
    let exe = dir.join("hq_smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new(cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("6 line 2"), "{stdout}");
}
