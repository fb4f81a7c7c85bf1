#!/usr/bin/env python3
"""Regenerates the bundled corpus.

Each group is given concretely (permutations, matrices mod p, affine maps,
additive vectors) together with a pcgs whose relative orders are prime.
Relations and map images are read off by computing exponent vectors in the
concrete group. Run from this directory: python3 gen_corpus.py
"""

import itertools
import os

OUT = os.path.dirname(os.path.abspath(__file__))


# ---- concrete groups -------------------------------------------------------

class Perm:
    def __init__(self, n):
        self.n = n

    def mul(self, a, b):  # apply a first, then b
        return tuple(b[a[i]] for i in range(self.n))

    def one(self):
        return tuple(range(self.n))

    def inv(self, a):
        r = [0] * self.n
        for i, x in enumerate(a):
            r[x] = i
        return tuple(r)


def cycles(n, *cs):
    p = list(range(n))
    for c in cs:
        for i, x in enumerate(c):
            p[x] = c[(i + 1) % len(c)]
    return tuple(p)


class Mat:
    def __init__(self, n, p):
        self.n, self.p = n, p

    def mul(self, a, b):
        n, p = self.n, self.p
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n)) for i in range(n))

    def one(self):
        return tuple(tuple(int(i == j) for j in range(self.n)) for i in range(self.n))

    def inv(self, a):
        n, p = self.n, self.p
        m = [list(a[i]) + [int(i == j) for j in range(n)] for i in range(n)]
        for c in range(n):
            r = next(r for r in range(c, n) if m[r][c] % p)
            m[c], m[r] = m[r], m[c]
            s = pow(m[c][c], -1, p)
            m[c] = [x * s % p for x in m[c]]
            for r in range(n):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [(x - f * y) % p for x, y in zip(m[r], m[c])]
        return tuple(tuple(row[n:]) for row in m)


class Add:
    """Z_{m1} x Z_{m2} x ... written additively."""

    def __init__(self, *mods):
        self.mods = mods

    def mul(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.mods))

    def one(self):
        return tuple(0 for _ in self.mods)

    def inv(self, a):
        return tuple(-x % m for x, m in zip(a, self.mods))


class Aff:
    """Maps z -> u z + b on Z_m, stored as (u, b); product applies a first."""

    def __init__(self, m):
        self.m = m

    def mul(self, a, b):
        (u1, b1), (u2, b2) = a, b
        return (u2 * u1 % self.m, (u2 * b1 + b2) % self.m)

    def one(self):
        return (1, 0)

    def inv(self, a):
        u, b = a
        ui = pow(u, -1, self.m)
        return (ui, -ui * b % self.m)


def power(G, a, e):
    r = G.one()
    for _ in range(e):
        r = G.mul(r, a)
    return r


def conj_by(G, h):
    """x -> h x h^-1."""
    hi = G.inv(h)
    return lambda x: G.mul(G.mul(h, x), hi)


# ---- pc presentations ------------------------------------------------------

class PcGroup:
    def __init__(self, G, pcgs, orders, sifter=None):
        self.G, self.pcgs, self.orders = G, pcgs, orders
        self.n = len(pcgs)
        if sifter is None:
            self.table = {}
            for ev in itertools.product(*[range(o) for o in orders]):
                self.table.setdefault(self.word(ev), ev)
            total = 1
            for o in orders:
                total *= o
            assert len(self.table) == total, "pcgs does not give unique normal forms"
            self.sift = self.table.__getitem__
        else:
            self.sift = sifter

    def word(self, ev):
        G = self.G
        r = G.one()
        for g, e in zip(self.pcgs, ev):
            r = G.mul(r, power(G, g, e))
        return r

    def relations(self):
        G = self.G
        pows, conjs = [], []
        for i, (g, p) in enumerate(zip(self.pcgs, self.orders)):
            ev = self.sift(power(G, g, p))
            assert all(e == 0 for e in ev[: i + 1])
            if any(ev):
                pows.append((i, ev))
        for i in range(self.n):
            xi = self.pcgs[i]
            for j in range(i + 1, self.n):
                c = G.mul(G.mul(G.inv(xi), self.pcgs[j]), xi)
                ev = self.sift(c)
                assert all(e == 0 for e in ev[: i + 1])
                unit = tuple(int(k == j) for k in range(self.n))
                if ev != unit:
                    conjs.append((j, i, ev))
        return pows, conjs

    def pcp(self, comment):
        pows, conjs = self.relations()
        lines = [f"# {comment}", "pcpres 1", f"n {self.n}", "orders " + " ".join(map(str, self.orders))]
        for i, ev in pows:
            lines.append(f"pow {i + 1} = {word_text(ev)}")
        for j, i, ev in conjs:
            lines.append(f"conj {j + 1} {i + 1} = {word_text(ev)}")
        return "\n".join(lines) + "\n"

    def map_text(self, f, comment, t=None):
        lines = [f"# {comment}"]
        for k, g in enumerate(self.pcgs):
            lines.append(f"img {k + 1} = {vec_text(self.sift(f(g)))}")
        if t is not None:
            lines.append(f"t = {vec_text(self.sift(t))}")
        return "\n".join(lines) + "\n"


def word_text(ev):
    return " ".join(f"{k + 1}" if e == 1 else f"{k + 1}^{e}" for k, e in enumerate(ev) if e)


def vec_text(ev):
    return "[" + ",".join(map(str, ev)) + "]"


def cyclic_pcgs(m):
    """Z_m additively: x, x^q1, x^(q1 q2), ... for the prime factors of m."""
    fs, k, q = [], m, 2
    while k > 1:
        while k % q == 0:
            fs.append(q)
            k //= q
        q += 1
    gens, step = [], 1
    for q in fs:
        gens.append((step,))
        step *= q
    return gens, fs


# ---- unitriangular groups --------------------------------------------------

def ut_group(n, p):
    M = Mat(n, p)
    positions = [(i, i + d) for d in range(1, n) for i in range(n - d)]

    def elem(i, j):
        return tuple(tuple(int(r == c or (r, c) == (i, j)) for c in range(n)) for r in range(n))

    gens = [elem(i, j) for i, j in positions]

    def sift(a):
        ev = []
        for (i, j), g in zip(positions, gens):
            e = a[i][j] % p
            ev.append(e)
            a = M.mul(M.inv(power(M, g, e)), a)
        assert a == M.one()
        return tuple(ev)

    return M, PcGroup(M, gens, [p] * len(gens), sifter=sift)


def antitranspose_inverse(M):
    n = M.n

    def f(a):
        b = M.inv(a)
        return tuple(tuple(b[n - 1 - c][n - 1 - r] for c in range(n)) for r in range(n))

    return f


# ---- output ----------------------------------------------------------------

def write(name, text):
    with open(os.path.join(OUT, name), "w") as fh:
        fh.write(text)


def emit(name, pc, comment, autos=(), endos=()):
    write(f"{name}.pcp", pc.pcp(comment))
    for label, f, desc in autos:
        write(f"{name}.{label}.aut", pc.map_text(f, desc))
    for label, f, desc in endos:
        write(f"{name}.{label}.endo", pc.map_text(f, desc))


def main():
    for p, root in [(2, 1), (3, 2), (5, 2), (7, 3), (10007, 5)]:
        G = Add(p)
        pc = PcGroup(G, [(1,)], [p], sifter=lambda a: a)
        autos = [("prim", lambda x, r=root: ((x[0] * r) % p,), f"x -> x^{root}")] if p > 2 else []
        autos.append(("id", lambda x: x, "identity"))
        emit(f"c{p}", pc, f"cyclic group of order {p}", autos, [("zero", lambda x: (0,), "trivial map")])

    for m, units in [(8, [3, 5]), (9, [2, 4]), (25, [2, 6])]:
        G = Add(m)
        gens, orders = cyclic_pcgs(m)
        pc = PcGroup(G, gens, orders)
        autos = [(f"pow{u}", lambda x, u=u: ((x[0] * u) % m,), f"x -> x^{u}") for u in units]
        q = orders[0]
        endos = [(f"pow{q}", lambda x: ((x[0] * q) % m,), f"x -> x^{q}"),
                 (f"pow{q + 1}", lambda x: ((x[0] * (q + 1)) % m,), f"x -> x^{q + 1}")]
        emit(f"c{m}", pc, f"cyclic group of order {m}", autos, endos)

    G = Add(3, 3)
    pc = PcGroup(G, [(1, 0), (0, 1)], [3, 3])
    lin = lambda a, b, c, d: (lambda x: ((a * x[0] + b * x[1]) % 3, (c * x[0] + d * x[1]) % 3))
    emit("c3xc3", pc, "elementary abelian of order 9",
         [("singer", lin(0, 1, 1, 1), "order 8 linear map"), ("shear", lin(1, 1, 0, 1), "order 3 shear"),
          ("neg", lin(2, 0, 0, 2), "inversion")],
         [("nil", lin(0, 1, 0, 0), "nilpotent linear map"), ("proj", lin(1, 0, 0, 0), "projection")])

    G = Add(4, 2)
    pc = PcGroup(G, [(1, 0), (2, 0), (0, 1)], [2, 2, 2])
    hom = lambda ia, ib: (lambda x: G.mul(power(G, ia, x[0]), power(G, ib, x[1])))
    emit("c4xc2", pc, "C4 x C2 on the pcgs (a, a^2, b)",
         [("mix", hom((1, 1), (2, 1)), "a -> ab, b -> a^2 b"), ("swap", hom((1, 1), (0, 1)), "a -> ab")],
         [("sq", hom((2, 0), (0, 0)), "x -> x^2"), ("kill", hom((0, 1), (0, 0)), "a -> b, b -> 1")])

    for n, name in [(4, "d4"), (6, "d6")]:
        # dihedral of order 2n acting on Z_{2n}: z -> +-z + even
        G = Aff(2 * n)
        s, r = (2 * n - 1, 0), (1, 2)
        if n == 4:
            pc = PcGroup(G, [s, r, power(G, r, 2)], [2, 2, 2])
        else:
            pc = PcGroup(G, [s, power(G, r, 2), power(G, r, 3)], [2, 3, 2])
        rot = lambda x, G=G: G.mul(G.mul(G.inv((1, 1)), x), (1, 1))
        emit(name, pc, f"dihedral group of order {2 * n}",
             [("conjr", conj_by(G, r), "conjugation by r"), ("outer", rot, "conjugation by a half rotation"),
              ("unit", conj_by(G, (2 * n - 1 if n == 4 else 5, 0)), "r -> r^-1")],
             [("mods", lambda x: (x[0], 0), "kill rotations"),
              ("tocenter", lambda x, n=n: (1, 0) if x[0] == 1 else (1, n), "onto the centre")])

    M = Mat(2, 3)
    i, j = ((0, 2), (1, 0)), ((1, 1), (1, 2))
    minus = M.mul(i, i)
    pc = PcGroup(M, [i, j, minus], [2, 2, 2])
    emit("q8", pc, "quaternion group inside SL(2,3)",
         [("cycle", conj_by(M, ((1, 1), (0, 1))), "order 3 outer map"),
          ("diag", conj_by(M, ((1, 0), (0, 2))), "conjugation by diag(1,-1)"),
          ("conji", conj_by(M, i), "conjugation by i")],
         [("sign", lambda x: M.one() if pc.sift(x)[0] == 0 else minus, "onto the centre")])

    P = Perm(3)
    pc = PcGroup(P, [cycles(3, (0, 1)), cycles(3, (0, 1, 2))], [2, 3])
    emit("s3", pc, "symmetric group on 3 points",
         [("conj12", conj_by(P, cycles(3, (1, 2))), "conjugation by (1 2)"),
          ("conj012", conj_by(P, cycles(3, (0, 1, 2))), "conjugation by (0 1 2)")],
         [("sign", lambda x: cycles(3, (0, 1)) if pc.sift(x)[0] else P.one(), "sign onto <(0 1)>")])

    P = Perm(4)
    s4gens = [cycles(4, (0, 1)), cycles(4, (0, 1, 2)), cycles(4, (0, 1), (2, 3)), cycles(4, (0, 2), (1, 3))]
    pc = PcGroup(P, s4gens, [2, 3, 2, 2])

    def s4_to_s3(x):
        # action on the three pairings {01|23, 02|13, 03|12}, read as a permutation of {0,1,2}
        pairings = [frozenset([frozenset([0, 1]), frozenset([2, 3])]),
                    frozenset([frozenset([0, 2]), frozenset([1, 3])]),
                    frozenset([frozenset([0, 3]), frozenset([1, 2])])]
        img = []
        for pr in pairings:
            moved = frozenset(frozenset(x[v] for v in pair) for pair in pr)
            img.append(pairings.index(moved))
        return tuple(img) + (3,)

    emit("s4", pc, "symmetric group on 4 points",
         [("conj01", conj_by(P, cycles(4, (0, 1))), "conjugation by (0 1)"),
          ("conj0123", conj_by(P, cycles(4, (0, 1, 2, 3))), "conjugation by (0 1 2 3)"),
          ("conj012", conj_by(P, cycles(4, (0, 1, 2))), "conjugation by (0 1 2)")],
         [("tos3", s4_to_s3, "S4 -> S3 on pairings, fixing 3"),
          ("sign", lambda x: cycles(4, (0, 1)) if pc.sift(x)[0] else P.one(), "sign onto <(0 1)>")])

    G = Aff(7)
    pc = PcGroup(G, [(2, 0), (1, 1)], [3, 7])
    emit("c7c3", pc, "C7 semidirect C3, affine maps z -> 2^k z + b on Z_7",
         [("conj3", conj_by(G, (3, 0)), "conjugation by z -> 3z"),
          ("conjt", conj_by(G, (1, 1)), "conjugation by z -> z + 1")],
         [("proj", lambda x: (x[0], 0), "onto the C3 complement")])

    for n, p in [(3, 2), (4, 2), (5, 2), (6, 2), (3, 3), (8, 2)]:
        M, pc = ut_group(n, p)
        n_gens = len(pc.pcgs)
        # a fixed element: product of the first-superdiagonal generators
        h = M.one()
        for g in pc.pcgs[: n - 1]:
            h = M.mul(h, g)
        autos = [("conjh", conj_by(M, h), "conjugation by the product of the superdiagonal generators")]
        if p == 2:
            autos.append(("flip", antitranspose_inverse(M), "inverse transpose along the antidiagonal"))
        else:
            d = tuple(tuple((2 if r == c == 0 else int(r == c)) for c in range(n)) for r in range(n))
            autos.append(("diag", conj_by(M, d), "conjugation by diag(2,1,..)"))
        endos = []
        if n <= 5:
            # projection onto the first superdiagonal entry, back into <x_1>
            x1 = pc.pcgs[0]
            endos.append(("corner", lambda a, x1=x1, M=M: power(M, x1, a[0][1]), "onto <x_1> through the (1,2) entry"))
        emit(f"ut{n}_{p}", pc, f"unitriangular {n}x{n} over F_{p} ({n_gens} generators)", autos, endos)


if __name__ == "__main__":
    main()
