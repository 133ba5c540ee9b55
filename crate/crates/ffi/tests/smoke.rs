//! Link-level smoke test: drive the C ABI exactly as an external binding
//! would, including the table-verification entry point.

use std::ffi::{CStr, CString};
use std::ptr;

use projembed_ffi::*;

#[test]
fn full_session_over_the_c_abi() {
    unsafe {
        assert_eq!(pe_schema_version(), 1);

        // catalog load, tau and tau_irr for the Heisenberg group
        let name = CString::new("Phi2(1^3)").unwrap();
        let mut h: *mut pe_group = ptr::null_mut();
        assert_eq!(
            pe_covering_from_catalog(name.as_ptr(), 3, 1, &mut h),
            pe_status::PE_OK
        );
        for irr in [0, 1] {
            let mut s = ptr::null_mut();
            assert_eq!(pe_tau_json(h, irr, &mut s), pe_status::PE_OK);
            let json = CStr::from_ptr(s).to_str().unwrap();
            assert!(json.contains("\"value\": 3"), "{json}");
            assert!(json.contains("\"exact\": true"), "{json}");
            pe_string_free(s);
        }
        pe_group_free(h);

        // the 2^4 table through the ABI: 9 matches, zero mismatches
        let table = CString::new("2to4").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(
            pe_verify_table_json(table.as_ptr(), 2, 0, &mut s),
            pe_status::PE_OK
        );
        let json = CStr::from_ptr(s).to_str().unwrap();
        assert!(json.contains("\"matched\": 9"), "{json}");
        assert!(json.contains("\"mismatched\": 0"), "{json}");
        pe_string_free(s);

        // budget errors surface as status codes with a message
        let big = CString::new("Phi9(1^5)").unwrap();
        let mut h2: *mut pe_group = ptr::null_mut();
        assert_eq!(
            pe_covering_from_catalog(big.as_ptr(), 5, 1, &mut h2),
            pe_status::PE_OK
        );
        let mut s2 = ptr::null_mut();
        let st = pe_tau_json(h2, 0, &mut s2);
        assert_eq!(st, pe_status::PE_ERR_BUDGET);
        let msg = CStr::from_ptr(pe_last_error()).to_str().unwrap();
        assert!(msg.contains("class budget"), "{msg}");
        pe_group_free(h2);
    }
}
