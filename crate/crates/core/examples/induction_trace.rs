//! Builds a saddle point action by action for a quasiconcave game and
//! shows each extension step.

use saddlescope::prelude::*;
use saddlescope::saddle::{saddle_by_induction_trace, InductionStep};

fn main() -> Result<()> {
    let doc = FamilySpec::defaults(Family::RentSeeking).generate()?;
    let AnyGame::Rational(game) = &doc.game else { unreachable!("rent seeking is exact") };
    let d = game.skew();
    let labels = d.actions().labels();
    println!("{} on bids {}", doc.name, labels.join(" "));
    println!("quasiconcave in bid order: {}", is_quasiconcave_under(&d, &ActionOrdering::identity(d.size())));

    let trace = saddle_by_induction_trace(&d)?;
    for step in &trace.steps {
        match *step {
            InductionStep::Base => println!("  block 1: saddle {}", labels[0]),
            InductionStep::NewSaddle { block, saddle } => {
                println!("  block {block}: new action {} is a saddle", labels[saddle])
            }
            InductionStep::Kept { block, saddle } => {
                println!("  block {block}: {} survives", labels[saddle])
            }
        }
    }
    println!("saddle action: {}", labels[trace.saddle]);
    let all: Vec<&str> = symmetric_saddle_actions(&d).iter().map(|&i| labels[i].as_str()).collect();
    println!("all symmetric saddle actions: {}", all.join(" "));

    // without quasiconcavity the construction can get stuck
    let rps: SkewGame<Rational> = SkewGame::from_grid(PayoffGrid::from_ints(&[[0, -1, 1], [1, 0, -1], [-1, 1, 0]])?)?;
    if let Err(e) = saddle_by_induction(&rps) {
        println!("rock-paper-scissors: {e}");
    }
    Ok(())
}
