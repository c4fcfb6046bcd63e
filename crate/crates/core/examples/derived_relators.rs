//! Relators R(i, j) read off from the generator matrices, for each twist of a13.

use amalgams::completion::derived;
use amalgams::fp::format_word;
use amalgams::mataction::Twist;

fn main() -> amalgams::Result<()> {
    for twist in Twist::ALL {
        let d = derived(twist)?;
        let names = d.presentation.names();
        println!("{}: {} generators, {} relators", twist.name(), names.len(), d.presentation.relators().len());
        for i in [1, 2, 3, 10, 11] {
            if let Some(r) = d.relator(i - 1, 12) {
                println!("  R({i},13) = {}", format_word(r, names));
            }
        }
    }
    let d = derived(Twist::Identity)?;
    println!("first member uses {:?}", d.first.iter().map(|&i| i + 1).collect::<Vec<_>>());
    println!("second member uses {:?}", d.second.iter().map(|&i| i + 1).collect::<Vec<_>>());
    Ok(())
}
