#!/usr/bin/env python3
"""Writes the offline OEIS fixtures in data/oeis from each entry's definition.

Used where oeis.org cannot be reached. Every file is computed with plain
Python integers from the formula or definition given in the OEIS entry,
independently of the C++ code under test. Running the CLI without
--offline replaces the cached copies with the real b-files.
"""
import json
import sys
from math import comb, factorial
from pathlib import Path

OUT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "oeis"


def double_sum(k, q, m):
    return sum((-1) ** (j - i) * comb(m, j) * comb(j, i) * comb(j + k + q * i, j + k)
               for j in range(m + 1) for i in range(j + 1))


def surjections(n, k):
    return sum((-1) ** (k - j) * comb(k, j) * j ** n for j in range(k + 1))


def eulerian_shifted(n, k):
    return sum((-1) ** j * comb(n + 1, j) * (k - j) ** n for j in range(k + 1))


def write(aid, header, pairs):
    lines = [f"# {aid}: {header}", "# Regenerated offline from the definition above; not downloaded."]
    lines += [f"{i} {v}" for i, v in pairs]
    (OUT / f"b{aid[1:]}.txt").write_text("\n".join(lines) + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write("A027471", "a(n) = (n-1)*3^(n-2), n >= 1",
          [(n, (n - 1) * 3 ** (n - 2) if n >= 2 else 0) for n in range(1, 61)])
    for aid, k, q in (("A361608", 5, 6), ("A361609", 2, 3), ("A361610", 3, 4)):
        write(aid, f"a(n) = Sum_{{j=0..n}} Sum_{{i=0..j}} (-1)^(j-i) C(n,j) C(j,i) C(j+{k}+{q}i, j+{k})",
              [(m, double_sum(k, q, m)) for m in range(40)])

    def triangle(rows, first_index=0):
        flat = [v for row in rows for v in row]
        return list(enumerate(flat, start=first_index))

    write("A034839", "T(n,k) = C(n,2k), 0 <= k <= floor(n/2), read by rows",
          triangle([[comb(n, 2 * k) for k in range(n // 2 + 1)] for n in range(25)]))
    write("A019538", "T(n,k) = k! S2(n,k), 1 <= k <= n, read by rows",
          triangle([[surjections(n, k) for k in range(1, n + 1)] for n in range(1, 14)], first_index=1))
    write("A123125", "T(n,k) = Sum_{j=0..k} (-1)^j C(n+1,j) (k-j)^n, 0 <= k <= n, read by rows",
          triangle([[eulerian_shifted(n, k) for k in range(n + 1)] for n in range(13)]))

    mappings = {"mappings": [
        {"oeis_id": "A027471", "family": "a", "params": {"k": 1, "q": "2"}, "offset_shift": 2,
         "note": "b-file starts at n=1 with a(1)=0; a_{1,2}(m) = A027471(m+2)"},
        {"oeis_id": "A361608", "family": "a", "params": {"k": 5, "q": "6"}, "offset_shift": 0},
        {"oeis_id": "A361609", "family": "a", "params": {"k": 2, "q": "3"}, "offset_shift": 0},
        {"oeis_id": "A361610", "family": "a", "params": {"k": 3, "q": "4"}, "offset_shift": 0},
        {"oeis_id": "A034839", "family": "gf-numerator", "kind": "C2", "offset_shift": 1,
         "note": "row J+1 of the triangle is the numerator of C_{J,2}; row 0 is skipped"},
        {"oeis_id": "A019538", "family": "gf-numerator", "kind": "omega", "offset_shift": 1,
         "note": "row n holds the x^1..x^n coefficients of omega_n; the b-file starts at index 1"},
        {"oeis_id": "A123125", "family": "gf-numerator", "kind": "eulerian", "offset_shift": 0,
         "note": "row n is the numerator of sum_k k^n x^k over (1-x)^(n+1)"},
    ]}
    (OUT / "mappings.json").write_text(json.dumps(mappings, indent=2) + "\n")


if __name__ == "__main__":
    main()
