#![no_main]

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;
use workbench_core::fixtures::corpus;
use workbench_core::lem::{verify_certificate, CertificateFile};
use workbench_core::SimplicialMap;

fn fibration() -> &'static SimplicialMap {
    static P: OnceLock<SimplicialMap> = OnceLock::new();
    P.get_or_init(|| {
        corpus()
            .into_iter()
            .find(|f| f.name == "triangle_into_triangle_and_edge")
            .expect("fixture exists")
            .build()
    })
}

// Verification must give a verdict, never panic, whatever the certificate says.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cert) = CertificateFile::parse(text) {
        let _ = verify_certificate(&cert, fibration());
    }
});
