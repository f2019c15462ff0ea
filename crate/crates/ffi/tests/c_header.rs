use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "holext.h"

int main(void) {
    HxPoly *p = NULL;
    if (hx_poly_parse("z1*~z1", 2, &p) != HX_STATUS_OK) return 1;
    HxCertificate *c = NULL;
    if (hx_certify(p, &c) != HX_STATUS_OK) return 2;
    if (hx_certificate_extends(c) != 0) return 3;
    char *json = NULL;
    if (hx_certificate_to_json(c, &json) != HX_STATUS_OK) return 4;
    if (strstr(json, "\"coefficient\": \"-1\"") == NULL) return 5;
    hx_string_free(json);
    hx_certificate_free(c);
    hx_poly_free(p);
    if (hx_poly_parse("z9", 2, &p) != HX_STATUS_PARSE) return 6;
    if (hx_last_error() == NULL) return 7;
    puts("ok");
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests/<exe> lives in target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links() {
    let crate_dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header_dir = crate_dir.join("include");
    assert!(header_dir.join("holext.h").exists());

    let lib = target_dir().join("libholext_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping: no C compiler or static library");
        return;
    }
    let dir = std::env::temp_dir().join(format!("holext-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    let bin = dir.join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-I")
        .arg(&header_dir)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke program failed to build");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
    let _ = std::fs::remove_dir_all(&dir);
}
