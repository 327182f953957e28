#!/usr/bin/env python3
"""Generate k_opt upper-bound tables for binary linear codes.

Every value is an upper bound on the largest dimension k of a binary
linear [n, k, d] code, obtained from classical bounds only:

  * Singleton, sphere packing and Griesmer bounds;
  * the Delsarte linear-programming bound for n <= --lp-max (scipy/HiGHS);
  * with --variant refined, the Griesmer bound is lowered by one whenever
    a code meeting it with equality cannot exist (Helleseth's
    characterisation via the Belov decomposition of d);
  * propagation to a fixpoint through
        k(n, d) <= k(n+1, d),       k(n, d) <= k(n-1, d) + 1,
        k(n, 2e) = k(n-1, 2e-1),    k(n, d) <= k(n, d-1).

Usage:
    python3 tools/gen_kopt_fixtures.py --variant delsarte > crates/core/data/kopt_delsarte.csv
    python3 tools/gen_kopt_fixtures.py --variant refined  > crates/core/data/kopt_refined.csv
"""

import argparse
import sys
from math import comb, floor, log2

import numpy as np
from scipy.optimize import linprog


def krawtchouk(n, k, i):
    return sum((-1) ** j * comb(i, j) * comb(n - i, k - j) for j in range(min(i, k) + 1))


def delsarte_size(n, d):
    """LP upper bound on the size of a binary code of length n, distance d."""
    if d % 2 == 1:
        return delsarte_size(n + 1, d + 1)
    support = [i for i in range(d, n + 1) if i % 2 == 0]
    if not support:
        return 1.0
    rows = []
    for k in range(1, n + 1):
        ck = comb(n, k)
        rows.append([-(krawtchouk(n, k, i) * comb(n, i)) / ck for i in support])
    a = np.array(rows, dtype=float)
    b = np.ones(n)
    scale = np.abs(a).max(axis=1)
    a, b = a / scale[:, None], b / scale
    c = -np.array([comb(n, i) for i in support], dtype=float)
    cmax = np.abs(c).max()
    res = linprog(c / cmax, A_ub=a, b_ub=b, bounds=[(0, None)] * len(support), method="highs")
    if res.status != 0:
        return None
    return 1 + (-res.fun * cmax)


def hamming(n, d):
    radius = (d - 1) // 2
    ball = sum(comb(n, i) for i in range(radius + 1))
    return n - (ball - 1).bit_length()


def griesmer_length(k, d):
    return sum(-(-d // 2 ** i) for i in range(k))


def griesmer_attainable(k, d):
    if d > 2 ** (k - 1):
        return True
    rest, parts, i = 2 ** (k - 1) - d, [], k - 1
    while rest > 0:
        while 2 ** (i - 1) > rest:
            i -= 1
        parts.append(i)
        rest -= 2 ** (i - 1)
        i -= 1
    return sum(parts[:2]) <= k


def griesmer(n, d, refined):
    k = 0
    while griesmer_length(k + 1, d) <= n:
        k += 1
    if refined and k >= 1 and griesmer_length(k, d) == n and not griesmer_attainable(k, d):
        k -= 1
    return k


def build(nmax, dmax, lp_max, refined):
    ub = {}
    for d in range(1, dmax + 1):
        for n in range(nmax + 2):
            if n < d:
                ub[n, d] = 0
                continue
            if d == 1:
                ub[n, d] = n
                continue
            v = min(n - d + 1, hamming(n, d), griesmer(n, d, refined))
            if n <= lp_max and d >= 3:
                size = delsarte_size(n, d)
                if size is not None:
                    v = min(v, floor(log2(size * (1 + 1e-9))))
            ub[n, d] = v
    changed = True
    while changed:
        changed = False
        for (n, d), v in list(ub.items()):
            cands = [v]
            if (n + 1, d) in ub:
                cands.append(ub[n + 1, d])
            if (n - 1, d) in ub:
                cands.append(ub[n - 1, d] + 1)
            if d % 2 == 0 and (n - 1, d - 1) in ub:
                cands.append(ub[n - 1, d - 1])
            if d % 2 == 1 and (n + 1, d + 1) in ub:
                cands.append(ub[n + 1, d + 1])
            if d > 1:
                cands.append(ub[n, d - 1])
            m = min(cands)
            if m < v:
                ub[n, d] = m
                changed = True
    return ub


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--variant", choices=["delsarte", "refined"], required=True)
    p.add_argument("--nmax", type=int, default=250)
    p.add_argument("--dmin", type=int, default=5)
    p.add_argument("--dmax", type=int, default=8)
    p.add_argument("--lp-max", type=int, default=40)
    args = p.parse_args()

    refined = args.variant == "refined"
    # One extra distance so that the odd/even relation can act on dmax.
    ub = build(args.nmax, args.dmax + 1, args.lp_max, refined)
    out = sys.stdout
    out.write(f"# k_opt upper bounds, variant {args.variant}\n")
    out.write(f"# generated by tools/gen_kopt_fixtures.py --variant {args.variant}"
              f" --nmax {args.nmax} --dmin {args.dmin} --dmax {args.dmax} --lp-max {args.lp_max}\n")
    out.write("# sources: Singleton, sphere packing, Griesmer"
              + (" (with attainability refinement)" if refined else "")
              + f", Delsarte LP for n <= {args.lp_max}, propagated to a fixpoint\n")
    out.write("n,d,k_upper\n")
    for d in range(args.dmin, args.dmax + 1):
        for n in range(d, args.nmax + 1):
            out.write(f"{n},{d},{ub[n, d]}\n")


if __name__ == "__main__":
    main()
