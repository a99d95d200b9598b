use groupring_ffi::*;
use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

fn new_group(spec: &str, cap: usize) -> (GrStatus, *mut GrGroup) {
    let s = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    let st = unsafe { gr_group_new(s.as_ptr(), cap, &mut g) };
    (st, g)
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(gr_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn group_queries() {
    let (st, g) = new_group("D12", 250);
    assert_eq!(st, GrStatus::Ok);
    let mut n = 0usize;
    let mut b = true;
    unsafe {
        assert_eq!(gr_group_order(g, &mut n), GrStatus::Ok);
        assert_eq!(n, 12);
        assert_eq!(gr_group_is_sn(g, &mut b), GrStatus::Ok);
        assert!(!b);
        assert_eq!(gr_group_is_ssn(g, &mut b), GrStatus::Ok);
        assert!(!b);
        assert_eq!(gr_group_is_ncn(g, &mut b), GrStatus::NotPGroup);
        assert!(last_error().contains("p-group"));
        let mut v = GrNdVerdict::Unknown;
        assert_eq!(gr_group_nd_verdict(g, 1000, &mut v), GrStatus::Ok);
        assert_eq!(v, GrNdVerdict::NotNd);
        let (mut lo, mut hi) = (0usize, 0usize);
        assert_eq!(gr_group_matrix_components(g, &mut lo, &mut hi), GrStatus::Ok);
        assert_eq!((lo, hi), (2, 2));
        gr_group_free(g);
    }
}

#[test]
fn errors_and_nulls() {
    let (st, g) = new_group("D(", 250);
    assert_eq!(st, GrStatus::Parse);
    assert!(g.is_null());
    assert!(last_error().starts_with("parse error"));
    let (st, _) = new_group("A5", 10);
    assert_eq!(st, GrStatus::OrderCapExceeded);
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(gr_group_new(ptr::null(), 10, &mut g), GrStatus::NullPointer);
        let mut n = 0usize;
        assert_eq!(gr_group_order(ptr::null(), &mut n), GrStatus::NullPointer);
        assert!(gr_report_json(ptr::null()).is_null());
        gr_group_free(ptr::null_mut());
        gr_report_free(ptr::null_mut());
        let bad = [0xffu8, 0];
        assert_eq!(gr_group_new(bad.as_ptr().cast(), 10, &mut g), GrStatus::InvalidUtf8);
    }
    let (st, g) = new_group("S3", 250);
    assert_eq!(st, GrStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe { gr_group_free(g) };
}

#[test]
fn report_json_matches_library() {
    let (_, g) = new_group("A4", 250);
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(gr_group_analyze(g, 1000, &mut r), GrStatus::Ok);
        let json = CStr::from_ptr(gr_report_json(r)).to_str().unwrap();
        let v: serde_json::Value = serde_json::from_str(json).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["group"]["spec"], "A4");
        assert_eq!(v["nd"]["verdict"], "HasND");
        gr_report_free(r);
        gr_group_free(g);
    }
}

/// Compiles the C smoke program against the generated header and the static library.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libgroupring_ffi.a");
    assert!(lib.exists(), "static library not built at {}", lib.display());
    let out = std::env::temp_dir().join(format!("groupring_smoke_{}", std::process::id()));
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
