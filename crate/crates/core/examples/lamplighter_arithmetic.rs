//! Products, inverses, words and normal forms in the lamplighter group L_3.

use wreathlab::wreath::{normal_form, parse_word, GeneratingSet, Side, WreathElement, WreathGroup};

fn main() -> wreathlab::Result<()> {
    let w = WreathGroup::lamplighter(3)?;
    let x: WreathElement = "[0=1, 2=2]@1".parse()?;
    let y: WreathElement = "[-1=1]@-2".parse()?;
    println!("x = {x}, y = {y}");
    println!("xy = {}", w.mul(&x, &y));
    println!("x^-1 = {}", w.inv(&x));
    println!("x^3 = {}", w.pow(&x, 3));

    let word = parse_word("t a t a^-1 t^-1 (ta)", GeneratingSet::AT, 3);
    println!("mixing alphabets is rejected: {}", word.unwrap_err());
    let word = parse_word("t^-1 a t t a^-1 t^-1 t", GeneratingSet::AT, 3)?;
    let g = w.eval_word(&word)?;
    println!("{word} evaluates to {g}");

    for side in [Side::Rf, Side::Lf] {
        let nf = normal_form(&w, &g, side)?;
        println!("{side:?}: {nf}  =  {}", nf.to_word());
    }
    let ta = parse_word("(ta) (ta^2)^-1 (ta)", GeneratingSet::TA, 3)?;
    println!("{ta} evaluates to {}", w.eval_word(&ta)?);
    Ok(())
}
