use std::time::Instant;
use ctriv_core::corpus;

fn main() {
    let total = Instant::now();
    for entry in corpus::corpus_list() {
        let t = Instant::now();
        let p = corpus::computed_profile(&entry).unwrap();
        let ok = p == entry.expected.profile;
        println!("{:<22} {:>8.2?}  profile-ok={}", entry.name, t.elapsed(), ok);
        if !ok {
            println!("   computed: {:?}", p.groups);
            println!("   expected: {:?}", entry.expected.profile.groups);
        }
    }
    println!("total: {:?}", total.elapsed());
}
