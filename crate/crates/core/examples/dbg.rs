use hstlab_core::fixtures;
use hstlab_core::hst::*;
use std::time::Instant;

fn main() {
    for name in ["r8", "su3", "s3t5"] {
        let t0 = Instant::now();
        let doc = fixtures::example_document(name).unwrap();
        let input = doc.to_hst_input().unwrap();
        let report = check_hst(&input).unwrap();
        print!("{name}: verdict={}", report.verdict);
        let suite = theorem_suite(&input).unwrap();
        println!(" suite {} items, failed: {:?} ({} ms)", suite.items.len(), suite.failed(), t0.elapsed().as_millis());
    }
}
