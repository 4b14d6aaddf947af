//! The relative payoff transform and its inverse up to a symmetric part.

use saddlescope::prelude::*;

fn print_grid(title: &str, grid: &PayoffGrid<Rational>) {
    println!("{title}");
    for row in grid.to_rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>5}")).collect();
        println!("  {}", cells.join(""));
    }
}

fn main() -> Result<()> {
    let game = SymmetricGame::new(
        ActionSet::new(vec!["A".into(), "B".into()], None)?,
        PayoffGrid::from_ints(&[[4, 1], [2, 0]])?,
    )?;
    print_grid("payoffs", game.payoffs());
    let d = relative_payoff(&game);
    print_grid("relative payoffs", d.grid());

    let half = halve_embed(&d);
    print_grid("zero-sum game with the same relative payoffs", half.payoffs());
    println!("same relative payoffs: {}", relative_payoff(&half).grid() == d.grid());

    let labels = game.actions().labels();
    let nash: Vec<&str> = symmetric_pure_nash(&game).iter().map(|&i| labels[i].as_str()).collect();
    let fess: Vec<&str> = fess_set(&game).iter().map(|&i| labels[i].as_str()).collect();
    println!("symmetric Nash: {}  fESS: {}", nash.join(" "), fess.join(" "));
    Ok(())
}
