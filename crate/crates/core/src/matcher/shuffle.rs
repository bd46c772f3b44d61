//! Shuffle membership.

use crate::alphabet::Letter;

/// Whether `w` is an interleaving of `u` and `v`.
pub fn shuffle_member(w: &[Letter], u: &[Letter], v: &[Letter]) -> bool {
    if w.len() != u.len() + v.len() {
        return false;
    }
    // ok[j]: w[..i+j] is an interleaving of u[..i] and v[..j].
    let mut ok = vec![false; v.len() + 1];
    ok[0] = true;
    for j in 1..=v.len() {
        ok[j] = ok[j - 1] && v[j - 1] == w[j - 1];
    }
    for i in 1..=u.len() {
        ok[0] = ok[0] && u[i - 1] == w[i - 1];
        for j in 1..=v.len() {
            ok[j] = (ok[j] && u[i - 1] == w[i + j - 1]) || (ok[j - 1] && v[j - 1] == w[i + j - 1]);
        }
    }
    ok[v.len()]
}
