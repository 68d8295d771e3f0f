//! Compiles and runs the C example against the generated header and the
//! static library, proving the ABI end to end.

use std::path::PathBuf;
use std::process::Command;

#[test]
fn c_client_compiles_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // tests run from target/<profile>/deps/<name>; the staticlib sits two up
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap().to_path_buf();
    let staticlib = profile_dir.join("libcfkit_ffi.a");

    if !staticlib.exists() {
        let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".into());
        let status = Command::new(cargo)
            .args(["build", "-p", "cfkit-ffi"])
            .status()
            .expect("cargo runs");
        assert!(status.success(), "building the staticlib failed");
    }
    assert!(staticlib.exists(), "staticlib missing at {staticlib:?}");

    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler available");
        return;
    }

    let out_bin = profile_dir.join("cfkit_c_smoke");
    let status = Command::new(&cc)
        .arg(manifest.join("examples").join("smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg("-L")
        .arg(&profile_dir)
        .args(["-lcfkit_ffi", "-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out_bin)
        .status()
        .expect("cc runs");
    assert!(status.success(), "C compilation failed");

    let output = Command::new(&out_bin).output().expect("smoke binary runs");
    assert!(
        output.status.success(),
        "smoke binary failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("f_4 = -40/51"), "stdout: {stdout}");
    assert!(
        stdout.contains("pi = 3.14159265358979323846"),
        "stdout: {stdout}"
    );
}
