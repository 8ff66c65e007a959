"""Brute-force oracle for frozen test values.

Independent of the C++ implementation: Bruhat order uses the rank-matrix
counting criterion (validated against the length-closure definition for
small degree), ranks come from interval chain lengths, graphs from raw
conjugation over all transpositions.
"""
import itertools
import sys
from functools import lru_cache


def fpf(n2):
    out = []
    for p in itertools.permutations(range(1, n2 + 1)):
        if all(p[p[i] - 1] == i + 1 and p[i] != i + 1 for i in range(n2)):
            out.append(p)
    return sorted(out)


def length(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def bruhat_leq_counting(p, q):
    n = len(p)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            a = sum(1 for x in p[:i] if x >= k)
            b = sum(1 for x in q[:i] if x >= k)
            if a > b:
                return False
    return True


def bruhat_leq_definition_table(n):
    perms = list(itertools.permutations(range(1, n + 1)))
    idx = {p: i for i, p in enumerate(perms)}
    up = {p: set() for p in perms}
    for p in perms:
        for a, b in itertools.combinations(range(n), 2):
            q = list(p)
            q[a], q[b] = q[b], q[a]
            q = tuple(q)
            if length(q) > length(p):
                up[p].add(q)
    order = sorted(perms, key=length, reverse=True)
    above = {}
    for p in order:
        s = {p}
        for q in up[p]:
            s |= above[q]
        above[p] = s
    return above


def rev_leq(mu, pi):
    # mu <= pi in reverse Bruhat order  <=>  pi <= mu in Bruhat order
    return bruhat_leq_counting(pi, mu)


def conj(p, a, d):
    # t p t with t = (a d), 1-based
    def t(x):
        return d if x == a else a if x == d else x
    return tuple(t(p[t(i) - 1]) for i in range(1, len(p) + 1))


def rank_formula(p):
    n = len(p) // 2
    s = 0
    for i in range(1, 2 * n + 1):
        j = p[i - 1]
        if i < j:
            s += j - i - sum(1 for k in range(i + 1, j) if p[k - 1] < i)
    return n * n - s


def interval(pi, bottom=None):
    n2 = len(pi)
    w0 = tuple(range(n2, 0, -1))
    bottom = bottom or w0
    return [m for m in fpf(n2) if rev_leq(bottom, m) and rev_leq(m, pi)]


def chain_rank(pi):
    # longest chain length from w0 up to pi in the reverse order (independent of formula)
    n2 = len(pi)
    elems = interval(pi)

    @lru_cache(None)
    def h(x):
        best = 0
        for y in elems:
            if y != x and rev_leq(y, x):
                best = max(best, h(y) + 1)
        return best
    return h(pi)


def rank_poly(pi):
    c = {}
    for m in interval(pi):
        r = rank_formula(m)
        c[r] = c.get(r, 0) + 1
    return [c.get(i, 0) for i in range(max(c) + 1)]


def neighbors(mu, top, bottom):
    n2 = len(mu)
    out = {}
    members = set(interval(top, bottom))
    for a, d in itertools.combinations(range(1, n2 + 1), 2):
        nu = conj(mu, a, d)
        if nu != mu and nu in members:
            out.setdefault(nu, []).append((a, d))
    return out


def std(seq):
    s = sorted(seq)
    return tuple(s.index(x) + 1 for x in seq)


def includes(host, pat):
    n2 = len(host)
    m2 = len(pat)
    best = None
    for idx in itertools.combinations(range(1, n2 + 1), m2):
        if set(host[i - 1] for i in idx) != set(idx):
            continue
        if std([host[i - 1] for i in idx]) == pat:
            if best is None:
                best = idx
    return best


if __name__ == "__main__":
    w = lambda s: tuple(int(c) for c in s)
    cmd = sys.argv[1]
    if cmd == "check-bruhat":
        for n2 in (2, 4, 6):
            above = bruhat_leq_definition_table(n2)
            perms = list(itertools.permutations(range(1, n2 + 1)))
            for p in perms:
                for q in perms:
                    assert (q in above[p]) == bruhat_leq_counting(p, q)
        print("counting criterion agrees with definition for n<=6")
    elif cmd == "table":
        bad = "351624 64827153 57681324 53281764 43218765 65872143 21654387 21563487 34127856 43217856 34128765 36154287 21754836 63287154 54821763 46513287 21768435".split()
        for b in bad:
            p = w(b)
            w0 = tuple(range(len(p), 0, -1))
            nb = neighbors(w0, p, w0)
            labels = sorted(min(v) for v in nb.values())
            print(b, rank_formula(p), chain_rank(p), len(nb), " ".join(f"{a}{d}" for a, d in labels))
    elif cmd == "eval":
        print(eval(sys.argv[2]))
