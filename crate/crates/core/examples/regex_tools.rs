//! Query parsing, the position automaton, linearization and language
//! equivalence.

use rpqlab::rpq::{distinguishing_word, glushkov, linearize, regex_equivalent};
use rpqlab::{Label, Regex};

fn word(s: &str) -> Vec<Label> {
    s.split_whitespace().map(|a| a.parse().unwrap()).collect()
}

fn main() -> rpqlab::Result<()> {
    let r = Regex::parse("(a b + b a)* (a + b) a* b a")?;
    let nfa = glushkov(&r);
    println!("{r}: {} atoms, {} states, nullable {}", r.atom_count(), nfa.num_states(), r.nullable());
    for u in ["a b a", "a b b a", "b a a a b a", ""] {
        println!("  accepts {u:?}: {}", nfa.accepts(&word(u)));
    }

    let lin = linearize(&Regex::parse("a b + a e f b")?);
    println!("linearized: {} over {} positions", lin.linear, lin.positions());
    let show = |u: &[Label]| u.iter().map(Label::as_str).collect::<Vec<_>>().join(" ");
    println!("projection of {}: {}", show(&lin.alpha), show(&lin.project(&lin.alpha)));

    let (x, y) = (Regex::parse("(a + b)*")?, Regex::parse("(a* b*)*")?);
    println!("{x} == {y}: {}", regex_equivalent(&x, &y));
    let z = Regex::parse("a* b*")?;
    let u = distinguishing_word(&x, &z).expect("languages differ");
    println!("{x} vs {z}: distinguished by {}", show(&u));
    Ok(())
}
