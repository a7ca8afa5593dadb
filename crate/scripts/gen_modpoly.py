"""Regenerate the classical modular polynomial data files.

Requires cypari2 (PARI/GP's polmodular). Usage:

    python scripts/gen_modpoly.py crates/core/data/modpoly 2 3 5 7 11 13 17 19 23 29
"""

import pathlib
import sys

import cypari2


def main() -> None:
    out = pathlib.Path(sys.argv[1])
    out.mkdir(parents=True, exist_ok=True)
    pari = cypari2.Pari()
    pari.allocatemem(2 * 10**9)
    for p in map(int, sys.argv[2:]):
        phi = pari.polmodular(p)
        lines = [f"p {p}"]
        for a in range(p + 2):
            xa = pari.polcoef(phi, a, "x")
            for b in range(a + 1):
                c = pari.polcoef(xa, b, "y")
                if c != 0:
                    lines.append(f"{a} {b} {c}")
        (out / f"phi_{p}.txt").write_text("\n".join(lines) + "\n")
        print(p, len(lines) - 1, "terms")


if __name__ == "__main__":
    main()
