//! Timing probe: run every property on its registered default family.

use alg_core::verify::{property_names, run_suite_parallel, InstanceFamily};
use alg_core::Caps;

fn main() {
    let caps = Caps::default();
    let mut total = std::time::Duration::ZERO;
    for property in property_names() {
        let family = InstanceFamily::default_for(property);
        let start = std::time::Instant::now();
        match run_suite_parallel(property, &family, &caps) {
            Ok(result) => {
                let dt = start.elapsed();
                total += dt;
                println!(
                    "{property:32} checked={:6} skipped={:6} failures={:3} {:8.2?}",
                    result.instances_checked,
                    result.skipped,
                    result.failures.len(),
                    dt
                );
                if let Some(first) = result.failures.first() {
                    println!("    first failure: {}", serde_json::to_string(first).unwrap());
                }
            }
            Err(e) => println!("{property:32} ERROR {e}"),
        }
    }
    println!("total: {total:.2?}");
}
