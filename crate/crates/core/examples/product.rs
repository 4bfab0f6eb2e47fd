//! Synthesize `Δ ⊣ ×` on finite sets and print its unit.

use hetcat::adjunction::synthesize_adjunction;
use hetcat::instances::sets::product_het;
use hetcat::theorem::verify_representation_theorem;

fn main() -> hetcat::Result<()> {
    let het = product_het(1)?.het;
    let adj = synthesize_adjunction(&het).expect("representable on both sides");
    assert!(adj.checks().all_passed());
    assert!(verify_representation_theorem(&adj).passed());
    for x in adj.x().objects() {
        let eta = adj.unit(x);
        println!("eta_{} = {}", adj.x().obj_name(x), adj.x().mor_name(eta));
    }
    Ok(())
}
