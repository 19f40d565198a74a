//! Compiles and runs a small C program against the generated header and the
//! static library, proving the ABI surface is consumable from plain C.

use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include <antiflex.h>
#include <stdio.h>
#include <string.h>

static const char *ALGEBRA =
  "{\"dim\":2,\"field\":{\"kind\":\"Q\"},\"product\":"
  "[[[\"1\",\"0\"],[\"0\",\"0\"]],[[\"1\",\"0\"],[\"0\",\"1\"]]]}";

int main(void) {
  AfAlgebra *algebra = NULL;
  if (af_algebra_parse(ALGEBRA, &algebra) != AF_STATUS_OK) return 1;
  if (af_algebra_dim(algebra) != 2) return 2;
  if (af_check_identity(algebra, "anti-flexible", NULL) != AF_STATUS_OK) return 3;

  char *report = NULL;
  if (af_check_identity(algebra, "associative", &report) != AF_STATUS_CHECK_FAILED) return 4;
  if (report == NULL || strstr(report, "\"witness\"") == NULL) return 5;
  af_string_free(report);

  if (af_check_identity(algebra, "bogus", NULL) != AF_STATUS_UNKNOWN_IDENTITY) return 6;
  if (strcmp(af_status_name(AF_STATUS_OK), "ok") != 0) return 7;

  af_algebra_free(algebra);
  return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    assert!(include.join("antiflex.h").exists(), "header not generated");

    // a test-harness run does not always materialize the staticlib
    // artifact, so build it the way a C consumer would
    let workspace = manifest.parent().unwrap().parent().unwrap();
    let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".to_string());
    let build = Command::new(cargo)
        .args(["build", "-p", "antiflex-ffi"])
        .current_dir(workspace)
        .output()
        .expect("cargo is available");
    assert!(
        build.status.success(),
        "staticlib build failed: {}",
        String::from_utf8_lossy(&build.stderr)
    );
    let lib_dir = {
        let mut exe = std::env::current_exe().unwrap();
        exe.pop(); // test binary name
        if exe.ends_with("deps") {
            exe.pop();
        }
        exe
    };
    let static_lib = lib_dir.join("libantiflex_ffi.a");
    assert!(static_lib.exists(), "missing {}", static_lib.display());

    let work = std::env::temp_dir().join("antiflex-ffi-header-test");
    std::fs::create_dir_all(&work).unwrap();
    let source = work.join("smoke.c");
    std::fs::write(&source, C_PROGRAM).unwrap();
    let binary = work.join("smoke");

    let compile = Command::new("cc")
        .arg(&source)
        .arg("-I")
        .arg(&include)
        .arg(static_lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("cc is available");
    assert!(
        compile.status.success(),
        "compile failed: {}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().expect("smoke binary runs");
    assert!(
        run.status.success(),
        "smoke binary exited with {:?}",
        run.status.code()
    );
}
