fn main() {
    let r = quattern_cli::run(std::env::args_os());
    print!("{}", r.stdout);
    eprint!("{}", r.stderr);
    std::process::exit(r.code);
}
