//! Best, average, and worst case rates across sequence lengths.
//!
//! ```bash
//! cargo run -p genbit --example scenario_rates
//! ```

use genbit::{scenario_stats, Scenario};

fn main() -> Result<(), genbit::GenBitError> {
    println!("{:>8} {:>8} {:>9} {:>8}", "n", "best", "average", "worst");
    for n in [18usize, 64, 66, 67, 128, 1_000, 100_000, 1_000_000] {
        let best = scenario_stats(Scenario::Best, n)
            .map(|s| format!("{:.4}", s.rate))
            .unwrap_or_else(|_| "-".into());
        let average = scenario_stats(Scenario::Average, n)
            .map(|s| format!("{:.4}", s.rate))
            .unwrap_or_else(|_| "-".into());
        let worst = scenario_stats(Scenario::Worst, n)?;
        println!("{n:>8} {best:>8} {average:>9} {:>8.4}", worst.rate);
    }

    println!("\nthe worst case approaches 2.25 bits per base from below:");
    for n in [7usize, 67, 667, 66_667] {
        let stats = scenario_stats(Scenario::Worst, n)?;
        println!("  n={n:<6} rate={:.6}", stats.rate);
    }

    // The preconditions are enforced: the best case needs 8 | n.
    let err = scenario_stats(Scenario::Best, 63).unwrap_err();
    println!("\nscenario_stats(Best, 63): {err}");
    Ok(())
}
