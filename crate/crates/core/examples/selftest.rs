use qinterp::golden::Golden;
use qinterp::selftest::run_all;

fn main() {
    for r in run_all(&Golden::builtin()) {
        println!("{} {:>2} {}", if r.passed { "ok  " } else { "FAIL" }, r.id, r.title);
    }
}
