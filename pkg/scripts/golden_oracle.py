#!/usr/bin/env python3
"""Brute-force reference implementation that (re)generates the regression
fixtures in src/grpn/golden/.

Everything here is written from scratch and imports nothing from the grpn
package: partitions are generated by a different recursion, the component
permutation is applied in its block-rotation form, the a-value is evaluated
with plain nested loops, and the crystal is grown with the opposite reading
order.  The fixtures therefore cross-check the package through independent
routes; regenerate with

    python3 scripts/golden_oracle.py --dest src/grpn/golden
"""

from __future__ import annotations

import argparse
import json
import math
import os
from fractions import Fraction

CASES = [
    (4, 2, 1, (0,), 1, "classify_e4_p2_d1_c0_n1.json"),
    (4, 2, 1, (0,), 2, "classify_e4_p2_d1_c0_n2.json"),
    (4, 2, 1, (0,), 3, "classify_e4_p2_d1_c0_n3.json"),
]


# ---------------------------------------------------------------- parameters

def derived(e, p, delta, charges):
    f = math.gcd(e, p)
    eprime = e // f
    pprime = p // f
    r = delta * f * pprime
    L = e * pprime
    w = [charges[k] + s * eprime for s in range(f) for k in range(delta)]
    fd = f * delta
    m = [Fraction(w[j - 1]) - Fraction(j * e, fd) + e for j in range(1, fd + 1)]
    return f, eprime, pprime, r, L, fd, w, m


# -------------------------------------------------------------- enumeration

def partitions_of(n):
    """All partitions of n as lists, by a max-part recursion."""
    result = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            result.append(list(acc))
            return
        top = min(rest, maxpart)
        for part in range(top, 0, -1):
            acc.append(part)
            rec(rest - part, part, acc)
            acc.pop()

    rec(n, n if n else 1, [])
    return result


def multipartitions_of(n, r):
    """All r-tuples of partitions with total size n."""
    if r == 1:
        return [[p] for p in partitions_of(n)]
    out = []
    for first_size in range(n, -1, -1):
        for first in partitions_of(first_size):
            for rest in multipartitions_of(n - first_size, r - 1):
                out.append([first] + rest)
    return out


def part_at(partition, k):
    return partition[k - 1] if 1 <= k <= len(partition) else 0


# -------------------------------------------------------------------- FLOTW

def is_flotw(lam, e, eprime, f, delta, w):
    fd = f * delta
    heights = max((len(c) for c in lam), default=0)
    v = w[:delta]
    for i in range(1, f + 1):
        for j in range(1, delta):
            upper = lam[(i - 1) * delta + j - 1]
            lower = lam[(i - 1) * delta + j]
            shift = v[j] - v[j - 1]
            for k in range(1, heights + 1):
                if part_at(upper, k) < part_at(lower, k + shift):
                    return False
    wrap = v[0] + eprime - v[delta - 1]
    for i in range(1, f):
        upper = lam[i * delta - 1]
        lower = lam[i * delta]
        for k in range(1, heights + 1):
            if part_at(upper, k) < part_at(lower, k + wrap):
                return False
    for k in range(1, heights + 1):
        if part_at(lam[fd - 1], k) < part_at(lam[0], k + wrap):
            return False
    by_column = {}
    for c in range(1, fd + 1):
        for a, length in enumerate(lam[c - 1], start=1):
            res = (length - a + w[c - 1]) % e
            by_column.setdefault(length, set()).add(res)
    return all(len(res) != e for res in by_column.values())


def lambda1_of(n, e, eprime, f, delta, pprime, w):
    fd = f * delta
    out = []
    for lam in multipartitions_of(n, fd * pprime):
        blocks = [lam[i * fd : (i + 1) * fd] for i in range(pprime)]
        if all(is_flotw(b, e, eprime, f, delta, w) for b in blocks):
            out.append(lam)
    return out


# ------------------------------------------------------------------- orbits

def rotate(lam, f, delta, pprime):
    """The block-rotation form of the eta_p component permutation."""
    fd = f * delta
    blocks = [lam[i * fd : (i + 1) * fd] for i in range(pprime)]
    last = blocks[-1]
    rotated = last[fd - delta :] + last[: fd - delta]
    return sum([rotated] + blocks[:-1], [])


def canonical_key(lam):
    return (
        tuple(sum(c) for c in lam),
        tuple(tuple(-x for x in c) for c in lam),
    )


def orbit_of(lam, p, f, delta, pprime):
    members = [lam]
    cur = rotate(lam, f, delta, pprime)
    while cur != lam:
        members.append(cur)
        cur = rotate(cur, f, delta, pprime)
    rep = min(members, key=canonical_key)
    return rep, len(members), members


# ------------------------------------------------------------------ a-value

def a_value(lam, n, f, delta, pprime, m):
    fd = f * delta
    blocks = [lam[i * fd : (i + 1) * fd] for i in range(pprime)]
    total = Fraction(0)
    for block in blocks:
        beta = []
        for j in range(1, fd + 1):
            beta.append([part_at(block[j - 1], s) - s + n + m[j - 1] for s in range(1, n + 1)])
        first = Fraction(0)
        for i in range(fd):
            for j in range(i, fd):
                for x in range(n):
                    for y in range(n):
                        if i == j and not beta[i][x] > beta[j][y]:
                            continue
                        first += min(beta[i][x], beta[j][y])
        second = Fraction(0)
        for i in range(fd):
            for a in beta[i]:
                k = 1
                while k <= a:
                    for j in range(fd):
                        second += min(k, m[j])
                    k += 1
        total += first - second
    return total


# ------------------------------------------------------------------ crystal

def crystal_count(n, e, fd, w):
    """Number of depth-n vertices, grown with the reverse reading order."""

    def key(lam):
        return tuple(tuple(c) for c in lam)

    layer = {key([[] for _ in range(fd)])}
    for _ in range(n):
        nxt = set()
        for frozen in layer:
            lam = [list(c) for c in frozen]
            for i in range(e):
                nodes = []
                for c in range(1, fd + 1):
                    comp = lam[c - 1]
                    for a in range(1, len(comp) + 2):
                        width = part_at(comp, a)
                        if a == 1 or width < part_at(comp, a - 1):
                            if (width + 1 - a + w[c - 1]) % e == i:
                                nodes.append((a, width + 1, c, "A"))
                    for a in range(1, len(comp) + 1):
                        width = part_at(comp, a)
                        if width > part_at(comp, a + 1):
                            if (width - a + w[c - 1]) % e == i:
                                nodes.append((a, width, c, "R"))
                nodes.sort(key=lambda nd: (-nd[2], -nd[0]))
                stack = []
                for nd in nodes:
                    if nd[3] == "R" and stack and stack[-1][3] == "A":
                        stack.pop()
                    else:
                        stack.append(nd)
                good = None
                for nd in stack:
                    if nd[3] == "A":
                        good = nd
                        break
                if good is None:
                    continue
                a, b, c, _ = good
                grown = [list(comp) for comp in lam]
                if a == len(grown[c - 1]) + 1:
                    grown[c - 1].append(1)
                else:
                    grown[c - 1][a - 1] += 1
                nxt.add(key(grown))
        layer = nxt
    return len(layer)


# ------------------------------------------------------------------- output

def classification(e, p, delta, charges, n):
    f, eprime, pprime, r, L, fd, w, m = derived(e, p, delta, charges)
    lam1 = lambda1_of(n, e, eprime, f, delta, pprime, w)
    seen = set()
    orbit_data = []
    for lam in lam1:
        frozen = tuple(tuple(c) for c in lam)
        if frozen in seen:
            continue
        rep, o_lam, members = orbit_of(lam, p, f, delta, pprime)
        seen.update(tuple(tuple(c) for c in mem) for mem in members)
        orbit_data.append((rep, o_lam))

    labels = []
    if n == 0:
        labels.append(([[] for _ in range(r)], 1, 0, Fraction(0)))
    else:
        for rep, o_lam in orbit_data:
            value = a_value(rep, n, f, delta, pprime, m)
            for i in range(p // o_lam):
                labels.append((rep, o_lam, i, value))
    labels.sort(key=lambda row: (row[3], canonical_key(row[0]), row[2]))

    total = 1 if n == 0 else sum(p // o for _, o in orbit_data)
    payload = {
        "spec": {
            "e": e,
            "p": p,
            "delta": delta,
            "charges": list(charges),
            "derived": {"f": f, "eprime": eprime, "pprime": pprime, "r": r, "L": L},
        },
        "n": n,
        "labels": [
            {
                "lambda": [list(c) for c in rep],
                "o_lambda": o_lam,
                "i": i,
                "a_value": f"{value.numerator}/{value.denominator}",
            }
            for rep, o_lam, i, value in labels
        ],
        "checks": {
            "lambda0": crystal_count(n, e, fd, w),
            "lambda1": len(lam1),
            "orbits": len(orbit_data),
            "total": total,
        },
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dest", default="src/grpn/golden")
    args = parser.parse_args()
    os.makedirs(args.dest, exist_ok=True)
    for e, p, delta, charges, n, name in CASES:
        text = classification(e, p, delta, charges, n)
        path = os.path.join(args.dest, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
