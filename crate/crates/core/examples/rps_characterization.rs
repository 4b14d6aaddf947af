//! Rock-paper-scissors has no pure saddle point; adding a dominant
//! "bomb" action B creates one that no ordering of actions explains.

use saddlescope::prelude::*;

fn describe(name: &str, d: &SkewGame<Rational>) -> Result<()> {
    let labels = d.actions().labels();
    println!("{name}");
    println!("  GRPS: {}", is_grps(d));
    let cells: Vec<String> = pure_saddle_points(d)
        .iter()
        .map(|s| format!("({}, {})", labels[s.row], labels[s.col]))
        .collect();
    println!("  pure saddle points: {}", if cells.is_empty() { "none".into() } else { cells.join(" ") });
    match find_quasiconcave_ordering(d, DEFAULT_MAX_SEARCH)? {
        Some(ord) => {
            let names: Vec<&str> = ord.as_slice().iter().map(|&i| labels[i].as_str()).collect();
            println!("  quasiconcave under: {}", names.join(" "));
        }
        None => println!("  no ordering makes every column single-peaked"),
    }
    Ok(())
}

fn main() -> Result<()> {
    let labels = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let rps = SkewGame::new(
        ActionSet::new(labels(&["R", "P", "S"]), None)?,
        PayoffGrid::from_ints(&[[0, -1, 1], [1, 0, -1], [-1, 1, 0]])?,
    )?;
    let rps_b = SkewGame::new(
        ActionSet::new(labels(&["R", "P", "S", "B"]), None)?,
        PayoffGrid::from_ints(&[[0, -1, 1, -1], [1, 0, -1, -1], [-1, 1, 0, -1], [1, 1, 1, 0]])?,
    )?;
    describe("rock-paper-scissors", &rps)?;
    describe("rock-paper-scissors-bomb", &rps_b)?;
    Ok(())
}
