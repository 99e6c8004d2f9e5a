//! Text and BV3D round trips, and format sniffing.

use thin3d::io::{self, Format};
use thin3d::verify::fixtures::fixture;

fn main() -> thin3d::Result<()> {
    let vol = fixture("random(7,4x3x2,0.5)")?.volume;
    let text = io::to_text(&vol);
    let bin = io::to_binary(&vol);
    print!("{text}");
    println!("binary: {} bytes, header {:02x?}", bin.len(), &bin[..17]);

    let (a, fa) = io::decode(text.as_bytes())?;
    let (b, fb) = io::decode(&bin)?;
    assert_eq!((fa, fb), (Format::Text, Format::Binary));
    assert_eq!(a, b);
    assert_eq!(io::encode(&a, Format::Binary), bin);

    let dir = std::env::temp_dir();
    let path = dir.join("thin3d-example.bv3d");
    io::write_volume(&path, &vol, Format::Binary)?;
    assert_eq!(io::read_volume(&path)?.0, vol);
    println!("round trips ok ({})", path.display());
    Ok(())
}
