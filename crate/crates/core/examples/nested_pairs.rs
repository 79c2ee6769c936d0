//! Every even number k+1 ≥ 4 of vertices of the first simplex spans a
//! subspace carrying its own Möbius pair.
//!
//!     cargo run --example nested_pairs -- 7 3

use mobius_pauli::moebius::{
    build_moebius_pair, nested_pair, perspectivity_center, verify_moebius_pair,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(7), |s| s.parse())?;
    let p: u32 = args.next().map_or(Ok(2), |s| s.parse())?;
    let pair = build_moebius_pair(n, p)?;

    let mut count = 0;
    for mask in 0u32..1 << (n + 1) {
        let size = mask.count_ones();
        if size < 4 || size % 2 == 1 {
            continue;
        }
        let idx: Vec<usize> = (0..=n).filter(|&j| mask >> j & 1 == 1).collect();
        let np = nested_pair(&pair, &idx)?;
        let ok = verify_moebius_pair(&np.pair)?.is_valid();
        let center =
            perspectivity_center(&np.pair)?.map(|c| np.embed(c.coords()).entries().to_vec());
        if count < 10 {
            let second: Vec<_> = np
                .ambient_second
                .iter()
                .map(|y| y.coords().entries().to_vec())
                .collect();
            println!("{idx:?}: valid {ok}, second {second:?}, center {center:?}");
        }
        count += 1;
    }
    println!("{count} nested pairs in PG({n},{p})");
    Ok(())
}
