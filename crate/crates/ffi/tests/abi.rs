use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use storient_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    st_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(st_last_error())
        .to_str()
        .unwrap()
        .to_string()
}

unsafe fn graph(g6: &str) -> *mut StGraph {
    let mut g = ptr::null_mut();
    assert_eq!(
        st_graph_from_graph6(cstr(g6).as_ptr(), &mut g),
        StStatus::Ok
    );
    g
}

#[test]
fn graph6_round_trip() {
    unsafe {
        let g = graph("Ehfw");
        assert_eq!(st_graph_order(g), 6);
        assert_eq!(st_graph_edge_count(g), 10);
        let mut s = ptr::null_mut();
        assert_eq!(st_graph_to_graph6(g, &mut s), StStatus::Ok);
        assert_eq!(take_string(s), "Ehfw");
        st_graph_free(g);
    }
}

#[test]
fn errors_carry_messages() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            st_graph_from_graph6(cstr("D?x").as_ptr(), &mut g),
            StStatus::Format
        );
        assert!(g.is_null());
        assert!(last_error().contains("byte 2"), "{}", last_error());

        assert_eq!(
            st_graph_from_graph6(ptr::null(), &mut g),
            StStatus::NullPointer
        );
        assert_eq!(
            st_graph_from_name(cstr("X9").as_ptr(), &mut g),
            StStatus::Argument
        );
        assert_eq!(st_graph_order(ptr::null()), 0);

        let mut out = ptr::null_mut();
        assert_eq!(
            st_census_json(8, true, 1, &mut out),
            StStatus::UnsupportedSize
        );
        assert!(last_error().contains("at most 7"));

        let bytes = [0xffu8, 0];
        assert_eq!(
            st_graph_from_graph6(bytes.as_ptr() as *const c_char, &mut g),
            StStatus::InvalidUtf8
        );
    }
}

#[test]
fn decide_wheel_and_cycle() {
    unsafe {
        let mut w5 = ptr::null_mut();
        assert_eq!(
            st_graph_from_name(cstr("W5").as_ptr(), &mut w5),
            StStatus::Ok
        );
        let (mut verdict, mut vertex) = (-7, -7);
        let mut witness = ptr::null_mut();
        let st = st_decide(
            w5,
            ST_MODE_SEMI_TRANSITIVE,
            &mut verdict,
            &mut vertex,
            &mut witness,
        );
        assert_eq!(st, StStatus::Ok);
        assert_eq!((verdict, vertex), (ST_VERDICT_FILTERED, 5));
        assert!(witness.is_null());

        let c5 = graph("Dhc");
        let st = st_decide(
            c5,
            ST_MODE_SEMI_TRANSITIVE,
            &mut verdict,
            &mut vertex,
            &mut witness,
        );
        assert_eq!(st, StStatus::Ok);
        assert_eq!((verdict, vertex), (ST_VERDICT_ORIENTABLE, -1));
        let mut ok = false;
        assert_eq!(
            st_orientation_is_semi_transitive(witness, &mut ok),
            StStatus::Ok
        );
        assert!(ok);

        let mut text = ptr::null_mut();
        assert_eq!(st_orientation_to_text(witness, &mut text), StStatus::Ok);
        let text = take_string(text);
        assert!(text.starts_with("n=5\n"));
        let mut back = ptr::null_mut();
        assert_eq!(
            st_orientation_from_text(cstr(&text).as_ptr(), &mut back),
            StStatus::Ok
        );
        let mut base = ptr::null_mut();
        assert_eq!(st_orientation_graph(back, &mut base), StStatus::Ok);
        assert_eq!(st_graph_edge_count(base), 5);

        assert_eq!(
            st_decide(c5, 9, &mut verdict, ptr::null_mut(), ptr::null_mut()),
            StStatus::Argument
        );
        assert_eq!(
            st_decide(
                c5,
                ST_MODE_TRANSITIVE,
                &mut verdict,
                ptr::null_mut(),
                ptr::null_mut()
            ),
            StStatus::Ok
        );
        assert_eq!(verdict, ST_VERDICT_NOT_ORIENTABLE);

        for p in [w5, c5, base] {
            st_graph_free(p);
        }
        st_orientation_free(witness);
        st_orientation_free(back);
    }
}

#[test]
fn constructions() {
    unsafe {
        let k2 = graph("A_");
        let mut p = ptr::null_mut();
        assert_eq!(
            st_product(k2, k2, ST_PRODUCT_LEXICOGRAPHIC, &mut p),
            StStatus::Ok
        );
        let mut s = ptr::null_mut();
        st_graph_to_graph6(p, &mut s);
        assert_eq!(take_string(s), "C~");
        st_graph_free(p);
        assert_eq!(st_product(k2, k2, 17, &mut p), StStatus::Argument);

        let mut c7 = ptr::null_mut();
        st_graph_from_name(cstr("C7").as_ptr(), &mut c7);
        let mut b = ptr::null_mut();
        assert_eq!(st_blowup(c7, &mut b), StStatus::Ok);
        st_graph_to_graph6(b, &mut s);
        assert_eq!(take_string(s), "Fltlg");

        let mut w = ptr::null_mut();
        assert_eq!(st_word_graph(cstr("abcabc").as_ptr(), &mut w), StStatus::Ok);
        st_graph_to_graph6(w, &mut s);
        assert_eq!(take_string(s), "Bw");
        assert_eq!(st_word_graph(cstr("").as_ptr(), &mut w), StStatus::Argument);

        for g in [k2, c7, b] {
            st_graph_free(g);
        }
    }
}

#[test]
fn transform_and_census_json() {
    unsafe {
        let mut o = ptr::null_mut();
        let text = cstr("n=3\n0->1\n1->2\n0->2\n");
        assert_eq!(
            st_orientation_from_text(text.as_ptr(), &mut o),
            StStatus::Ok
        );
        let mut json = ptr::null_mut();
        assert_eq!(
            st_transform_json(o, ST_TRANSFORM_TO_EMPTY, &mut json),
            StStatus::Ok
        );
        let json = take_string(json);
        assert_eq!(json.matches("\"kind\"").count(), 4);
        let mut unused = ptr::null_mut();
        assert_eq!(st_transform_json(o, 5, &mut unused), StStatus::Argument);
        st_orientation_free(o);

        // a shortcut makes the pipelines refuse the input
        let bad = cstr("n=4\n0->1\n1->2\n2->3\n0->3\n");
        assert_eq!(st_orientation_from_text(bad.as_ptr(), &mut o), StStatus::Ok);
        assert_eq!(
            st_transform_json(o, ST_TRANSFORM_TO_COMPLETE, &mut unused),
            StStatus::Precondition
        );
        st_orientation_free(o);

        let mut report = ptr::null_mut();
        assert_eq!(st_census_json(6, false, 2, &mut report), StStatus::Ok);
        let report = take_string(report);
        assert!(report.contains("\"non_orientable_connected_classes\": 1"));
    }
}

#[test]
fn header_is_generated() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/storient.h");
    let text = std::fs::read_to_string(&header).expect("header exists");
    for name in [
        "typedef struct StGraph StGraph;",
        "typedef struct StOrientation StOrientation;",
        "ST_STATUS_PRECONDITION",
        "st_decide(",
        "st_transform_json(",
        "st_census_json(",
        "st_last_error(void)",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
    match Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .status()
    {
        Ok(status) => assert!(status.success(), "header does not compile as C"),
        Err(e) => eprintln!("skipping C syntax check: {e}"),
    }
}
