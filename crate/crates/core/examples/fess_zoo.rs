//! Finite-population ESS across the built-in game families.

use saddlescope::prelude::*;

fn row<T: Scalar>(name: &str, g: &SymmetricGame<T>) -> Result<()> {
    let labels = g.actions().labels();
    let names = |v: &[usize]| v.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>().join(" ");
    let report = fess_report(g)?;
    println!(
        "{name:<14} fESS {{{}}}  Nash {{{}}}  classes {}",
        names(&report.fess_set),
        names(&report.nash_set),
        report.equivalence_classes.len()
    );
    Ok(())
}

fn main() -> Result<()> {
    for spec in zoo_catalog() {
        let doc = spec.generate()?;
        match &doc.game {
            AnyGame::Rational(Game::Symmetric(g)) => row(&doc.name, g)?,
            AnyGame::Float(Game::Symmetric(g)) => row(&doc.name, g)?,
            // skew families are zero-sum already; read them as symmetric games
            AnyGame::Rational(game @ Game::Skew(_)) => row(&doc.name, &game.as_symmetric())?,
            AnyGame::Float(game @ Game::Skew(_)) => row(&doc.name, &game.as_symmetric())?,
        }
    }
    Ok(())
}
