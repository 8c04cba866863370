"""Independent brute-force oracle for the affine-plane values frozen in tests.

Run: python3 tests/oracles/plane_oracle.py
"""
import itertools
import math


def line_points(p, k, s):
    return frozenset((u, v) for u in range(p) for v in range(p) if (k * u + v) % p == s)


def l_triple_max(p, l, ks):
    best = 0
    subsets = list(itertools.combinations(range(p), l))
    lines = {k: {s: line_points(p, k, s) for s in range(p)} for k in ks}
    for a in subsets:
        e1 = frozenset().union(*(lines[ks[0]][s] for s in a))
        for b in subsets:
            e12 = e1.union(*(lines[ks[1]][s] for s in b))
            for c in subsets:
                u = e12.union(*(lines[ks[2]][s] for s in c))
                best = max(best, len(u))
    return best


def plane_coverable(p, counts):
    """counts: dict slope -> count; slope None means the vertical direction."""
    pts = [(u, v) for u in range(p) for v in range(p)]

    def line(k, u, v):
        if k is None:
            return frozenset((u, y) for y in range(p))
        s = (k * u + v) % p
        return line_points(p, k, s)

    def rec(covered, remaining):
        unc = [pt for pt in pts if pt not in covered]
        if not unc:
            return True
        if sum(remaining.values()) * p < len(unc):
            return False
        u, v = unc[0]
        for k, c in remaining.items():
            if c == 0:
                continue
            r = dict(remaining)
            r[k] -= 1
            if rec(covered | line(k, u, v), r):
                return True
        return False

    return rec(frozenset(), dict(counts))


def verify_uncoverable(p, n, ms):
    cap = lambda m: min(m, n * p)

    def comps(total, parts):
        if parts == 1:
            if total <= p:
                yield (total,)
            return
        for first in range(min(total, p) + 1):
            for rest in comps(total - first, parts - 1):
                yield (first,) + rest

    memo = {}

    def cov(vec):
        if vec not in memo:
            memo[vec] = plane_coverable(p, {i: c for i, c in enumerate(vec)})
        return memo[vec]

    per_slope = [list(comps(cap(m), n)) for m in ms]
    for choice in itertools.product(*per_slope):
        if all(cov(tuple(choice[i][nu] for i in range(4))) for nu in range(n)):
            return False
    return True


if __name__ == "__main__":
    for p, l in [(5, 2), (5, 3), (5, 4), (7, 2), (7, 3)]:
        vals = {ks: l_triple_max(p, l, ks) for ks in itertools.combinations(range(p), 3)}
        print(f"l_triple_max p={p} l={l}: values={sorted(set(vals.values()))} bound={l*(3*p-2*l)}")
    print("plane_coverable p=5 {4,4,4,2}:", plane_coverable(5, {0: 4, 1: 4, 2: 4, 3: 2}))
    print("verify_uncoverable (5,2) m=(4,4,4,2):", verify_uncoverable(5, 2, (4, 4, 4, 2)))
    print("verify_uncoverable (5,2) m=(4,4,4,5):", verify_uncoverable(5, 2, (4, 4, 4, 5)))
    for name, n, order in [("C2+C4", 4, 8), ("C5+C10", 10, 50), ("C2+C2", 2, 4), ("C3+C3", 3, 9), ("C2^3", 2, 8)]:
        print("log_bound", name, (n - 1) + n * math.log(order / n))
