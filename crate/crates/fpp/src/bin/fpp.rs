fn main() { println!("{}", libm::log(2.0)); }
