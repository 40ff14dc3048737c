use std::ffi::CStr;
use std::ptr;

use kfold_core::ColoringDocument;
use kfold_ffi::*;

fn family(kind: KfoldFamilyKind, n: i64, p: i64) -> *mut KfoldFamily {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { kfold_family_new(kind, n, p, &mut f) }, KfoldStatus::Ok);
    f
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(kfold_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn values_through_the_abi() {
    let f = family(KfoldFamilyKind::Antiweb, 10, 3);
    let (mut chi, mut minus, mut alpha, mut omega) = (0, 0, 0, 0);
    let (mut critical, mut star) = (false, true);
    unsafe {
        assert_eq!(kfold_chi_k(f, 2, &mut chi), KfoldStatus::Ok);
        assert_eq!(kfold_chi_k_minus_v(f, 2, &mut minus), KfoldStatus::Ok);
        assert_eq!(kfold_alpha(f, &mut alpha), KfoldStatus::Ok);
        assert_eq!(kfold_omega(f, &mut omega), KfoldStatus::Ok);
        assert_eq!(kfold_is_critical(f, 2, &mut critical), KfoldStatus::Ok);
        assert_eq!(kfold_is_chistar_critical(f, &mut star), KfoldStatus::Ok);
        kfold_family_free(f);
    }
    assert_eq!((chi, minus, alpha, omega, critical, star), (7, 6, 3, 3, true, true));
}

#[test]
fn coloring_handle() {
    let f = family(KfoldFamilyKind::Antiweb, 10, 3);
    let mut c = ptr::null_mut();
    let mut x = 0;
    let mut buf = [0usize; 8];
    let mut len = 0;
    unsafe {
        assert_eq!(kfold_coloring_new(f, 2, &mut c), KfoldStatus::Ok);
        kfold_family_free(f);
        assert_eq!(kfold_coloring_num_colors(c, &mut x), KfoldStatus::Ok);
        assert_eq!(
            kfold_coloring_class(c, 0, ptr::null_mut(), 0, &mut len),
            KfoldStatus::BufferTooSmall
        );
        assert_eq!(len, 3);
        assert_eq!(
            kfold_coloring_class(c, 0, buf.as_mut_ptr(), buf.len(), &mut len),
            KfoldStatus::Ok
        );
        assert_eq!(
            kfold_coloring_class(c, 7, buf.as_mut_ptr(), buf.len(), &mut len),
            KfoldStatus::OutOfRange
        );
        let mut json = ptr::null_mut();
        assert_eq!(kfold_coloring_to_json(c, &mut json), KfoldStatus::Ok);
        let doc: ColoringDocument = serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert!(doc.verify().unwrap().valid);
        kfold_string_free(json);
        kfold_coloring_free(c);
    }
    assert_eq!(x, 7);
    assert_eq!(&buf[..3], &[0, 4, 7]);
}

#[test]
fn error_codes_and_messages() {
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(
            kfold_family_new(KfoldFamilyKind::Web, 5, 3, &mut f),
            KfoldStatus::InvalidParameters
        );
        assert!(f.is_null());
        assert!(last_error().contains("n ≥ 2p"));
        assert_eq!(
            kfold_family_new(KfoldFamilyKind::Web, 5, 2, ptr::null_mut()),
            KfoldStatus::NullPointer
        );
        let mut v = 0;
        assert_eq!(kfold_chi_k(ptr::null(), 1, &mut v), KfoldStatus::NullPointer);
        let g = family(KfoldFamilyKind::Web, 5, 2);
        assert_eq!(kfold_chi_k(g, 0, &mut v), KfoldStatus::InvalidParameters);
        assert!(last_error().contains('k'));
        let mut c = ptr::null_mut();
        let big = family(KfoldFamilyKind::Web, 1 << 20, 1);
        assert_eq!(kfold_coloring_new(big, 1 << 10, &mut c), KfoldStatus::TooLarge);
        assert!(c.is_null());
        kfold_family_free(big);
        kfold_family_free(g);
        kfold_family_free(ptr::null_mut());
        kfold_coloring_free(ptr::null_mut());
        kfold_string_free(ptr::null_mut());
    }
}

#[test]
fn last_error_is_per_thread() {
    let mut f = ptr::null_mut();
    unsafe { kfold_family_new(KfoldFamilyKind::Web, 1, 1, &mut f) };
    let other = std::thread::spawn(|| kfold_last_error().is_null()).join().unwrap();
    assert!(other);
    assert!(!kfold_last_error().is_null());
}
