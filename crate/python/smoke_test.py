"""Smoke test for the brandt_zeta extension module.

Build the module first, either with maturin

    maturin develop -m crates/py/Cargo.toml

or by hand

    cargo build -p brandt-zeta-py --release --features extension-module
    cp target/release/libbrandt_zeta_py.so python/brandt_zeta.so

then run `python python/smoke_test.py`.
"""

import sys

import brandt_zeta as bz


def check(cond, what):
    if not cond:
        print(f"FAIL {what}")
        sys.exit(1)
    print(f"ok   {what}")


def main():
    check(bz.supersingular_locus(13) == [(5, 0)], "locus N=13")
    check([len(bz.supersingular_locus(n)) for n in (37, 61, 73)] == [3, 5, 6], "locus sizes")

    b = bz.brandt_matrix(37, 2)
    check(b.N == 37 and b.p == 2 and b.size == 3, "BrandtMatrix header")
    check(all(sum(row) == 3 for row in b.matrix), "row sums of B(2)")
    check(bz.brandt_matrix(37, 2, method="velu2").matrix == b.matrix, "velu2 agrees")

    b5 = bz.brandt_matrix(37, 5)
    check(b5.tree_count() == 16, "tau(37, 5) = 16")
    check(b5.mu() == 0, "mu_37(5) = 0")
    hw = b5.hasse_weil()
    check(hw["numerator"] == [1, 2, 10, 10, 25], "Hasse-Weil numerator")

    report = bz.verify(37, 5)
    check(all(c["status"] == "pass" for c in report["claims"]), "verify (37, 5)")

    table = bz.table(73)
    check([r["mu"] for r in table["rows"]] == [-6, -18, 810, 8580, 1122], "table N=73")

    k4 = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
    check(bz.tree_count(k4) == 16, "tau(K4) = 16")
    z = bz.ihara_zeta(k4)
    check(len(z["denominator"]) == 13 and z["numerator"] == [1], "zeta(K4) shape")
    check(bz.closed_path_counts(k4, 4) == [0, 0, 24, 24], "closed paths of K4")

    try:
        bz.brandt_matrix(13, 2).ihara_zeta()
    except bz.ObstructionError:
        check(True, "(13, 2) formal zeta is obstructed")
    else:
        check(False, "(13, 2) formal zeta is obstructed")

    try:
        bz.brandt_matrix(37, 37)
    except ValueError:
        check(True, "p = N rejected")
    else:
        check(False, "p = N rejected")

    try:
        bz.brandt_matrix(37, 31)
    except bz.MissingDataError:
        check(True, "missing modular polynomial")
    else:
        check(False, "missing modular polynomial")

    v = bz.brandt_matrix(13, 2).validate()
    parity = [c for c in v["claims"] if c["id"] == "prop3.1.parity"][0]
    check(parity["status"] == "fail" and parity["found"] == [[0, 3]], "(13, 2) parity finding")

    print("all smoke checks passed")


if __name__ == "__main__":
    main()
