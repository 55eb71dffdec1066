fn main() {
    println!("hstlab placeholder");
}
