// Dump files with manifests, and the command line driven in-process.
//
// `cargo run --example dumps_and_cli`

use smallcover::{cli, cover, dump, Caps, PolytopeSpec};

pub fn run() -> std::io::Result<()> {
    let dir = std::env::temp_dir().join(format!("smallcover-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("m3.txt");
    let items = cover::enumerate_mn(3, &Caps::default()).map_err(std::io::Error::other)?;
    let count = dump::write_dump(&path, "mn", &PolytopeSpec::Cube(3).to_string(), items)?;
    let text = std::fs::read_to_string(&path)?;
    println!("wrote {count} matrices; first three:");
    for line in text.lines().take(3) {
        println!("  {line}");
    }
    println!("manifest: {:?}", dump::read_manifest(&path)?);
    std::fs::remove_dir_all(&dir)?;

    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = [
        "smallcover",
        "--format",
        "json",
        "--verify",
        "count",
        "dj",
        "--simplices",
        "2,2,2",
    ];
    let code = cli::run(argv, &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> std::io::Result<()> {
    run()
}
