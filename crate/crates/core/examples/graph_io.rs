//! Writes a graph in both supported formats and reads it back.

use cliquebound::constructions::build_for_regime;
use cliquebound::io::{load_graph, save_graph, GraphFormat};

fn main() -> cliquebound::Result<()> {
    let (g, spec) = build_for_regime(30, 25, true, 3)?;
    let dir = std::env::temp_dir();
    for (format, name) in [(GraphFormat::Dimacs, "example.col"), (GraphFormat::EdgeList, "example.txt")] {
        let path = dir.join(name);
        save_graph(&g, &path, format)?;
        let back = load_graph(&path, format)?;
        assert_eq!(back, g);
        let text = std::fs::read_to_string(&path).expect("just written");
        println!("{} ({} lines), first lines:", path.display(), text.lines().count());
        for line in text.lines().take(3) {
            println!("  {line}");
        }
    }
    println!("\nconstruction spec:\n{}", spec.to_kv());
    Ok(())
}
