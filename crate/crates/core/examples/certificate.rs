//! Issue a certificate, write it out, read it back and recheck it.

use packlab::harness::{certificate_validate, Certificate};
use packlab::pack::{Mode, SearchBudget};
use packlab::recognize::{build_complete, build_complete_bipartite, build_disjoint_copies};

fn main() -> packlab::Result<()> {
    let g1 = build_disjoint_copies(3, &build_complete(2));
    let g2 = build_complete_bipartite(3, 3);
    for mode in [Mode::Sequence, Mode::Embed] {
        let cert = Certificate::issue(&g1, &g2, mode, &SearchBudget::default())?;
        let text = cert.to_json();
        let back = Certificate::from_json(&text)?;
        println!("{mode}: {} with exceptions {:?}, valid {}", back.status, back.exceptions, certificate_validate(&back)?);
    }
    let g2 = build_complete(3).with_isolates(3);
    let cert = Certificate::issue(&g1, &g2, Mode::Embed, &SearchBudget::default())?;
    println!("{}", cert.to_json());
    Ok(())
}
