//! Differences, valuation, separability and exact potentials for a
//! separable game and a non-separable one.

use saddlescope::prelude::*;

fn show(name: &str, d: &SkewGame<Rational>) -> Result<()> {
    let report = structure_report(d, &ActionOrdering::identity(d.size()))?;
    println!("{name}");
    println!("  increasing differences: {}", report.increasing_differences);
    println!("  decreasing differences: {}", report.decreasing_differences);
    println!("  valuation: {}", report.valuation);
    match &report.separable {
        Some(w) => {
            let h: Vec<String> = w.h.iter().map(|v| v.to_string()).collect();
            println!("  separable with h = ({})", h.join(", "));
            let order = quasiconcave_order_from_h(w);
            println!("  h-ascending order is quasiconcave: {}", is_quasiconcave_under(d, &order));
            println!("  constant best reply: {}", constant_best_reply_check(d));
        }
        None => println!("  not separable"),
    }
    if let Some(p) = &report.potential {
        println!("  exact potential:");
        for row in p.potential.to_rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
            println!("   {}", cells.join(""));
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    for family in [Family::Cournot, Family::Ratio] {
        let spec = FamilySpec::defaults(family);
        let doc = spec.generate()?;
        let AnyGame::Rational(game) = &doc.game else { unreachable!() };
        show(&doc.name, &game.skew())?;
    }
    Ok(())
}
