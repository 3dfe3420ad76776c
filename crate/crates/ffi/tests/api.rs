use std::ffi::{c_char, CStr, CString};
use std::ptr;

use fockspace_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { fs_string_free(s) };
    text
}

fn last_error() -> String {
    let p = fs_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn diagram(n: i64, k: usize, depths: &[usize]) -> *mut FsDiagram {
    let mut d = ptr::null_mut();
    let status = unsafe { fs_diagram_new(n, k, depths.as_ptr(), depths.len(), &mut d) };
    assert_eq!(status, FsStatus::Ok);
    d
}

#[test]
fn diagram_round_trip() {
    let d = diagram(2, 0, &[3, 1]);
    assert_eq!(unsafe { fs_diagram_box_count(d) }, 4);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { fs_diagram_to_json(d, &mut s) }, FsStatus::Ok);
    let json = take_string(s);
    assert_eq!(json, r#"{"n":2,"charge":0,"columns":[3,1]}"#);
    let c = CString::new(json).unwrap();
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { fs_diagram_from_json(c.as_ptr(), &mut e) }, FsStatus::Ok);
    assert_eq!(unsafe { fs_diagram_box_count(e) }, 4);
    unsafe {
        fs_diagram_free(d);
        fs_diagram_free(e);
    }
}

#[test]
fn kashiwara_operators() {
    let d = diagram(2, 0, &[3, 1]);
    let (mut eps, mut ph) = (0usize, 0usize);
    unsafe {
        assert_eq!(fs_diagram_epsilon(d, 1, &mut eps), FsStatus::Ok);
        assert_eq!(fs_diagram_phi(d, 1, &mut ph), FsStatus::Ok);
    }
    assert_eq!((eps, ph), (1, 1));
    let mut up = ptr::null_mut();
    let mut down = ptr::null_mut();
    unsafe {
        assert_eq!(fs_diagram_e_tilde(d, 1, &mut up), FsStatus::Ok);
        assert_eq!(fs_diagram_f_tilde(d, 1, &mut down), FsStatus::Ok);
        assert_eq!(fs_diagram_box_count(up), 3);
        assert_eq!(fs_diagram_box_count(down), 5);
        let mut back = ptr::null_mut();
        assert_eq!(fs_diagram_f_tilde(up, 1, &mut back), FsStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        fs_diagram_to_json(back, &mut a);
        fs_diagram_to_json(d, &mut b);
        assert_eq!(take_string(a), take_string(b));
        fs_diagram_free(back);
        fs_diagram_free(up);
        fs_diagram_free(down);
    }
    let empty = diagram(2, 0, &[]);
    let sentinel = diagram(2, 0, &[1]);
    let mut none = sentinel;
    unsafe {
        assert_eq!(fs_diagram_e_tilde(empty, 0, &mut none), FsStatus::Ok);
        assert!(none.is_null());
        fs_diagram_free(sentinel);
        fs_diagram_free(empty);
        fs_diagram_free(d);
    }
}

#[test]
fn act_on_vacuum() {
    let d = diagram(2, 1, &[]);
    let ops = CString::new("E1 F1").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { fs_act(d, ops.as_ptr(), FsConvention::Upper, &mut s) }, FsStatus::Ok);
    assert_eq!(take_string(s), r#"[{"diagram":{"n":2,"charge":1,"columns":[]},"coeff":{"0":1}}]"#);
    let bad = CString::new("E1 Q").unwrap();
    assert_eq!(unsafe { fs_act(d, bad.as_ptr(), FsConvention::Lower, &mut s) }, FsStatus::InvalidArgument);
    assert!(last_error().contains('Q'));
    unsafe { fs_diagram_free(d) };
}

#[test]
fn verify_small_space() {
    let (mut checked, mut failures) = (0u64, 0u64);
    let mut report = ptr::null_mut();
    let status = unsafe { fs_verify(2, 0, 3, FsConvention::Lower, &mut checked, &mut failures, &mut report) };
    assert_eq!(status, FsStatus::Ok);
    assert!(checked > 0);
    assert_eq!(failures, 0);
    let v: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
    assert_eq!(v["checked"].as_u64(), Some(checked));
    let status = unsafe { fs_verify(3, 2, 2, FsConvention::Upper, &mut checked, &mut failures, ptr::null_mut()) };
    assert_eq!(status, FsStatus::Ok);
}

#[test]
fn graph_handle() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { fs_graph_new(2, 1, 5, &mut g) }, FsStatus::Ok);
    unsafe {
        assert_eq!(fs_graph_node_count(g), 15);
        assert!(fs_graph_edge_count(g) > 0);
        let mut root = ptr::null_mut();
        assert_eq!(fs_graph_node(g, 0, &mut root), FsStatus::Ok);
        assert_eq!(fs_diagram_box_count(root), 0);
        fs_diagram_free(root);
        assert_eq!(fs_graph_node(g, 15, &mut root), FsStatus::InvalidArgument);
        let mut s = ptr::null_mut();
        assert_eq!(fs_graph_to_dot(g, &mut s), FsStatus::Ok);
        assert!(take_string(s).starts_with("digraph"));
        assert_eq!(fs_graph_to_json(g, &mut s), FsStatus::Ok);
        let json = take_string(s);
        assert!(json.contains("\"edges\""));
        fs_graph_free(g);
    }
}

#[test]
fn error_codes() {
    let mut d = ptr::null_mut();
    unsafe {
        assert_eq!(fs_diagram_new(1, 0, ptr::null(), 0, &mut d), FsStatus::InvalidArgument);
        assert!(last_error().contains("n = 1"));
        let bad = [1usize, 2];
        assert_eq!(fs_diagram_new(2, 0, bad.as_ptr(), 2, &mut d), FsStatus::InvalidArgument);
        assert_eq!(fs_diagram_new(2, 3, ptr::null(), 0, &mut d), FsStatus::InvalidArgument);
        assert_eq!(fs_diagram_new(2, 0, ptr::null(), 2, &mut d), FsStatus::NullPointer);
        assert_eq!(fs_diagram_new(2, 0, ptr::null(), 0, ptr::null_mut()), FsStatus::NullPointer);
        let junk = CString::new("{nope").unwrap();
        assert_eq!(fs_diagram_from_json(junk.as_ptr(), &mut d), FsStatus::InvalidJson);
        let mut x = 0usize;
        assert_eq!(fs_diagram_epsilon(ptr::null(), 0, &mut x), FsStatus::NullPointer);
        let y = diagram(2, 0, &[1]);
        assert_eq!(fs_diagram_phi(y, 3, &mut x), FsStatus::InvalidArgument);
        fs_diagram_free(y);
        let raw = [0xffu8, 0];
        assert_eq!(fs_diagram_from_json(raw.as_ptr().cast(), &mut d), FsStatus::InvalidUtf8);
        fs_diagram_free(ptr::null_mut());
        fs_graph_free(ptr::null_mut());
        fs_string_free(ptr::null_mut());
        assert_eq!(fs_graph_node_count(ptr::null()), 0);
    }
}
