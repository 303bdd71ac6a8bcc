use std::ffi::{c_char, CStr};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use tfsax_ffi::*;

const S: [f64; 8] = [-1.2, -0.4, 0.4, 1.2, 1.2, 0.4, -0.4, -1.2];

fn last_error() -> String {
    unsafe { CStr::from_ptr(tfsax_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn encoder(method: TfsaxMethod, w: usize, alpha: usize, alpha_t: usize) -> *mut TfsaxEncoder {
    let mut enc = ptr::null_mut();
    let st = unsafe { tfsax_encoder_new(method as u32, w, alpha, alpha_t, &mut enc) };
    assert_eq!(st, TfsaxStatus::Ok, "{}", last_error());
    enc
}

fn encode(enc: *const TfsaxEncoder, values: &[f64]) -> *mut TfsaxWord {
    let mut word = ptr::null_mut();
    let st = unsafe { tfsax_encode(enc, values.as_ptr(), values.len(), &mut word) };
    assert_eq!(st, TfsaxStatus::Ok, "{}", last_error());
    word
}

fn render(word: *const TfsaxWord) -> String {
    let mut len = 0usize;
    let st = unsafe { tfsax_word_render(word, ptr::null_mut(), 0, &mut len) };
    assert_eq!(st, TfsaxStatus::BufferTooSmall);
    let mut buf = vec![0 as c_char; len + 1];
    let st = unsafe { tfsax_word_render(word, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!(st, TfsaxStatus::Ok);
    unsafe { CStr::from_ptr(buf.as_ptr()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn encode_render_and_distance() {
    let r: Vec<f64> = S.iter().map(|v| -v).collect();
    let enc = encoder(TfsaxMethod::Tfsax, 2, 3, 5);
    let (a, b) = (encode(enc, &S), encode(enc, &r));
    assert_eq!(render(a), "bE bA");
    assert_eq!(render(b), "bA bE");
    let mut d = 0.0;
    assert_eq!(
        unsafe { tfsax_distance(enc, a, b, &mut d) },
        TfsaxStatus::Ok
    );
    assert!((d - 6f64.sqrt()).abs() < 1e-12);
    unsafe {
        tfsax_word_free(a);
        tfsax_word_free(b);
        tfsax_encoder_free(enc);
    }
}

#[test]
fn words_from_different_encoders_do_not_mix() {
    let e3 = encoder(TfsaxMethod::Sax, 2, 3, 5);
    let e4 = encoder(TfsaxMethod::Sax, 2, 4, 5);
    let (a, b) = (encode(e3, &S), encode(e4, &S));
    let mut d = 0.0;
    assert_eq!(
        unsafe { tfsax_distance(e3, a, b, &mut d) },
        TfsaxStatus::ParamMismatch
    );
    assert!(!last_error().is_empty());
    unsafe {
        tfsax_word_free(a);
        tfsax_word_free(b);
        tfsax_encoder_free(e3);
        tfsax_encoder_free(e4);
    }
}

#[test]
fn error_codes() {
    let mut enc = ptr::null_mut();
    assert_eq!(
        unsafe { tfsax_encoder_new(TfsaxMethod::Sax as u32, 2, 1, 5, &mut enc) },
        TfsaxStatus::InvalidArgument
    );
    assert!(last_error().contains("alphabet"));
    assert_eq!(
        unsafe { tfsax_encoder_new(99, 2, 3, 5, &mut enc) },
        TfsaxStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { tfsax_encoder_new(TfsaxMethod::Sax as u32, 2, 3, 5, ptr::null_mut()) },
        TfsaxStatus::NullPointer
    );

    let enc = encoder(TfsaxMethod::Sax, 16, 3, 5);
    let mut word = ptr::null_mut();
    assert_eq!(
        unsafe { tfsax_encode(enc, S.as_ptr(), S.len(), &mut word) },
        TfsaxStatus::InvalidArgument
    );
    assert!(word.is_null());
    unsafe { tfsax_encoder_free(enc) };

    let mut d = 0.0;
    assert_eq!(
        unsafe { tfsax_euclidean(ptr::null(), S.as_ptr(), 8, &mut d) },
        TfsaxStatus::NullPointer
    );
    assert_eq!(
        unsafe { tfsax_euclidean(S.as_ptr(), S.as_ptr(), 8, &mut d) },
        TfsaxStatus::Ok
    );
    assert_eq!(d, 0.0);
    assert!(last_error().is_empty());
}

#[test]
fn znormalize_modes() {
    let mut out = [0.0; 4];
    let flat = [2.0; 4];
    assert_eq!(
        unsafe { tfsax_znormalize(flat.as_ptr(), 4, 0, out.as_mut_ptr()) },
        TfsaxStatus::ConstantSeries
    );
    assert_eq!(
        unsafe { tfsax_znormalize(flat.as_ptr(), 4, 1, out.as_mut_ptr()) },
        TfsaxStatus::Ok
    );
    assert_eq!(out, [0.0; 4]);

    let mut v = [1.0, 2.0, 3.0, 4.0];
    let p = v.as_mut_ptr();
    assert_eq!(unsafe { tfsax_znormalize(p, 4, 0, p) }, TfsaxStatus::Ok);
    let mean: f64 = v.iter().sum::<f64>() / 4.0;
    let var: f64 = v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / 4.0;
    assert!(mean.abs() < 1e-12 && (var - 1.0).abs() < 1e-12);
}

#[test]
fn euclid_encoder_ignores_params() {
    let enc = encoder(TfsaxMethod::Euclid, 0, 0, 0);
    let r: Vec<f64> = S.iter().map(|v| -v).collect();
    let (a, b) = (encode(enc, &S), encode(enc, &r));
    let mut d = 0.0;
    assert_eq!(
        unsafe { tfsax_distance(enc, a, b, &mut d) },
        TfsaxStatus::Ok
    );
    assert!((d - 25.6f64.sqrt()).abs() < 1e-12);
    unsafe {
        tfsax_word_free(a);
        tfsax_word_free(b);
        tfsax_encoder_free(enc);
    }
}

#[test]
fn version_matches_package() {
    let v = unsafe { CStr::from_ptr(tfsax_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include")
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok()
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "tfsax.h"

int main(void) {
    double s[8] = {-1.2, -0.4, 0.4, 1.2, 1.2, 0.4, -0.4, -1.2};
    double r[8];
    for (int i = 0; i < 8; i++) r[i] = -s[i];
    TfsaxEncoder *enc = NULL;
    TfsaxWord *a = NULL, *b = NULL;
    if (tfsax_encoder_new(TFSAX_METHOD_TFSAX, 2, 3, 5, &enc) != TFSAX_STATUS_OK) return 1;
    if (tfsax_encode(enc, s, 8, &a) != TFSAX_STATUS_OK) return 2;
    if (tfsax_encode(enc, r, 8, &b) != TFSAX_STATUS_OK) return 3;
    char buf[32];
    size_t len = 0;
    if (tfsax_word_render(a, buf, sizeof buf, &len) != TFSAX_STATUS_OK) return 4;
    if (strcmp(buf, "bE bA") != 0) return 5;
    double d = 0;
    if (tfsax_distance(enc, a, b, &d) != TFSAX_STATUS_OK) return 6;
    printf("%s %.5f\n", buf, d);
    tfsax_word_free(a);
    tfsax_word_free(b);
    tfsax_encoder_free(enc);
    return 0;
}
"#;

#[test]
fn header_compiles_as_c() {
    if !have_cc() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let st = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header())
        .arg(&src)
        .status()
        .unwrap();
    assert!(st.success());
}

#[test]
fn c_program_links_against_staticlib() {
    // target/<profile>/deps/<test binary> -> target/<profile>/libtfsax_ffi.a
    let exe = std::env::current_exe().unwrap();
    let lib = exe
        .parent()
        .and_then(Path::parent)
        .unwrap()
        .join("libtfsax_ffi.a");
    if !have_cc() || !lib.exists() {
        eprintln!("skipping: no C compiler or static library");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let bin = dir.path().join("main");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let st = Command::new("cc")
        .arg("-I")
        .arg(header())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(st.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "bE bA 2.44949\n");
}
