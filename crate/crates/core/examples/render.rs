//! Writes SVG pictures of the gadget and of the reduced C5.

use udg_maxcut::gadget::h_model;
use udg_maxcut::geometry::Point;
use udg_maxcut::graph::named;
use udg_maxcut::reduction::reduce;
use udg_maxcut::render::render_svg;

fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir();
    let gadget = dir.join("udg_gadget.svg");
    std::fs::write(&gadget, render_svg(&h_model(Point::origin()), None))?;
    let r = reduce(&named::cycle(5)).unwrap();
    let c5 = dir.join("udg_c5.svg");
    std::fs::write(&c5, render_svg(&r.model, Some(&r.provenance)))?;
    println!("wrote {} and {}", gadget.display(), c5.display());
    Ok(())
}
