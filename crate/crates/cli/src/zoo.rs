//! Built-in instances, written in the document format.

use sgchain_core::FiniteSemigroup;

use crate::instance::{Document, Resolved};

pub const NAMES: &[&str] = &[
    "lz2",
    "rz2",
    "n2",
    "n3",
    "chain2",
    "chain3",
    "c2",
    "c3",
    "c2_0",
    "rees9",
    "rees9_full",
    "rees_trivial",
    "u_trivial",
    "u_c2",
    "u_rz2",
    "x_union",
    "abb_aba",
    "free1",
    "free2",
    "reesz_identity",
    "reesz_full",
];

pub fn text(name: &str) -> Option<&'static str> {
    Some(match name {
        "lz2" => "[lz2]\nkind: table\nlabels: l1 l2\nrow: l1 l1\nrow: l2 l2\n",
        "rz2" => "[rz2]\nkind: table\nlabels: r1 r2\nrow: r1 r2\nrow: r1 r2\n",
        "n2" => "[n2]\nkind: table\nlabels: 0 u\nrow: 0 0\nrow: 0 0\n",
        "n3" => "[n3]\nkind: table\nlabels: 0 u1 u2\nrow: 0 0 0\nrow: 0 0 0\nrow: 0 0 0\n",
        "chain2" => "[chain2]\nkind: table\nlabels: 0 1\nrow: 0 0\nrow: 0 1\n",
        "chain3" => "[chain3]\nkind: table\nlabels: 0 1 2\nrow: 0 0 0\nrow: 0 1 1\nrow: 0 1 2\n",
        "c2" => "[c2]\nkind: table\nlabels: e g\nrow: e g\nrow: g e\n",
        "c3" => "[c3]\nkind: table\nlabels: e g g^2\nrow: e g g^2\nrow: g g^2 e\nrow: g^2 e g\n",
        "c2_0" => "[c2_0]\nkind: construction\nop: adjoin_zero zoo:c2\n",
        "rees9" => "[rees9]\nkind: rees\ngroup: cyclic 2\nrows: 2\ncols: 2\np: e .\np: . e\n",
        "rees9_full" => "[rees9_full]\nkind: rees\ngroup: cyclic 2\nrows: 2\ncols: 2\np: e e\np: e e\n",
        "rees_trivial" => "[rees_trivial]\nkind: rees\ngroup: trivial\nrows: 1\ncols: 1\np: e\n",
        "u_trivial" => "[g]\nkind: table\nlabels: e\nrow: e\n\n[u_trivial]\nkind: construction\nop: u_act g one_point\n",
        "u_c2" => "[u_c2]\nkind: construction\nop: u_act zoo:c2 regular\n",
        // right zero semigroups are right simple
        "u_rz2" => "[u_rz2]\nkind: construction\nop: u_act zoo:rz2 regular\n",
        "x_union" => "[x_union]\nkind: construction\nop: x_extension zoo:rees9_full zoo:rees9\n",
        "abb_aba" => "[abb_aba]\nkind: presentation\ngens: a b\norder: a b\nrel: a b b = b\nrel: a b a = a a b\n",
        "free1" => "[free1]\nkind: presentation\ngens: a\norder: a\n",
        "free2" => "[free2]\nkind: presentation\ngens: a b\norder: a b\n",
        "reesz_identity" => "[reesz_identity]\nkind: reesz\nrows: 2\ncols: 2\np: 0 .\np: . 0\n",
        "reesz_full" => "[reesz_full]\nkind: reesz\nrows: 2\ncols: 2\np: 0 0\np: 0 0\n",
        _ => return None,
    })
}

pub fn document(name: &str) -> Option<Document> {
    text(name).map(|t| Document::parse(t).expect("built-in document parses"))
}

pub fn resolve(name: &str) -> Option<Resolved> {
    document(name).map(|d| d.resolve().expect("built-in document resolves"))
}

pub fn finite(name: &str) -> Option<FiniteSemigroup> {
    match resolve(name)? {
        Resolved::Finite(s) => Some(s),
        _ => None,
    }
}

/// Every built-in finite instance, in `NAMES` order.
pub fn finite_instances() -> Vec<(&'static str, FiniteSemigroup)> {
    NAMES.iter().filter_map(|&n| finite(n).map(|s| (n, s))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use sgchain_core::constructions::{chain, left_zero, null_semigroup, right_zero};

    #[test]
    fn every_entry_resolves() {
        for name in NAMES {
            assert!(resolve(name).is_some(), "{}", name);
        }
        assert!(text("nope").is_none());
    }

    #[test]
    fn tables_match_library_constructors() {
        assert_eq!(finite("lz2").unwrap(), left_zero(2).unwrap());
        assert_eq!(finite("rz2").unwrap(), right_zero(2).unwrap());
        assert_eq!(finite("n2").unwrap(), null_semigroup(1));
        assert_eq!(finite("n3").unwrap(), null_semigroup(2));
        assert_eq!(finite("chain2").unwrap(), chain(2).unwrap());
        assert_eq!(finite("chain3").unwrap(), chain(3).unwrap());
    }

    #[test]
    fn sizes() {
        let sizes: Vec<(&str, usize)> = finite_instances().iter().map(|(n, s)| (*n, s.size())).collect();
        let get = |n: &str| sizes.iter().find(|(m, _)| *m == n).unwrap().1;
        assert_eq!(get("rees9"), 9);
        assert_eq!(get("x_union"), 18);
        assert_eq!(get("u_trivial"), 3);
        assert_eq!(get("u_rz2"), 5);
        assert_eq!(get("c2_0"), 3);
    }
}
