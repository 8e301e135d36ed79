use nu_core::rootsys::*;
use nu_core::character::*;
use nu_core::levi::*;

fn main() {
    let c3 = FamilyRank::new(Family::C, 3).unwrap();
    let ch = freudenthal_character(&c3, &vec![0, 0, 1]).unwrap();
    let dec = level_decompose(&ch, &vec![0, 0, 1], 1).unwrap();
    let dims: Vec<i64> = dec.levels.iter().map(|c| c.dim()).collect();
    println!("C3 om3 i=1 dims: {:?}", dims);

    let c4 = FamilyRank::new(Family::C, 4).unwrap();
    let ch = freudenthal_character(&c4, &vec![1, 1, 0, 0]).unwrap();
    println!("C4 om1+om2 dim: {}", ch.dim());
    let dec = level_decompose(&ch, &vec![1, 1, 0, 0], 1).unwrap();
    let dims: Vec<i64> = dec.levels.iter().map(|c| c.dim()).collect();
    println!("C4 om1+om2 i=1 dims: {:?}", dims);
    match decompose_level(&dec.levels[1], 1) {
        Ok(f) => {
            for (w, m) in &f.factors {
                println!("factor {:?} x{} levi {:?}", w, m, levi_coords(w, 1));
            }
        }
        Err(e) => println!("err {e:?}"),
    }
}
