fn main() {
    println!("sklift");
}
