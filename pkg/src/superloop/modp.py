"""One-sided modular certificates for exact rank/irreducibility facts.

The Burnside test ("do the action matrices generate the full matrix
algebra?") is decidable by exact sparse echelon computations, but on a
d-dimensional module that echelon lives in d^2 coordinates and gets
expensive quickly.  This module provides a shortcut that is still a
*proof*, not a heuristic:

* reduce the (rational) generators modulo a prime p that divides none
  of their denominators;
* find an algebra element with a one-dimensional eigenspace mod p and
  run the standard spin test (Norton's criterion) on it;
* if the test certifies irreducibility mod p, the one-dimensional
  eigenspace also forces the endomorphism ring mod p to be the prime
  field, so by density the reduced generators span the full d*d matrix
  algebra over F_p;
* F_p-independence of reduced integer-denominator-free vectors lifts to
  Q-independence (clear denominators of a putative rational dependence
  and reduce it mod p), so the exact algebra span is full as well.

A failed certificate proves nothing; callers must fall back to the
exact computation for a definitive negative answer.  All randomness is
drawn from fixed-seed generators so results are reproducible.
"""

from __future__ import annotations

import random

import numpy as np

from .linalg import Mat
from .scalars import int_pair

# Primes below 2^24: row operations and matrix products over int64 stay
# far away from overflow (d * p^2 < 2^63 for every dimension used here).
PRIMES = (16777213, 16777199, 16777183)


def mat_mod_p(m: Mat, p: int):
    """Dense int64 reduction of an exact matrix, or None if p divides
    one of the denominators."""
    a = np.zeros((m.nrows, m.ncols), dtype=np.int64)
    for i, j, x in m.entries():
        num, den = int_pair(x)
        if den % p == 0:
            return None
        a[i, j] = (num % p) * pow(den % p, p - 2, p) % p
    return a


class EchelonP:
    """Row echelon basis over F_p (numpy rows, unique pivot columns)."""

    __slots__ = ("p", "rows", "pivs")

    def __init__(self, p: int):
        self.p = p
        self.rows: list = []
        self.pivs: list = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v):
        p = self.p
        v = v % p
        for row, pc in zip(self.rows, self.pivs):
            c = int(v[pc])
            if c:
                v = (v - c * row) % p
        return v

    def insert(self, v) -> bool:
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        j = int(nz[0])
        inv = pow(int(v[j]), self.p - 2, self.p)
        self.rows.append((v * inv) % self.p)
        self.pivs.append(j)
        return True


def spin_p(seeds, ops, p: int) -> int:
    """Dimension of the smallest ops-invariant subspace containing seeds."""
    ech = EchelonP(p)
    queue = []
    for s in seeds:
        if ech.insert(s):
            queue.append(ech.rows[-1])
    qi = 0
    n = ops[0].shape[0] if ops else (len(seeds[0]) if seeds else 0)
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        if ech.dim == n:
            break
        for a in ops:
            w = (a @ v) % p
            if ech.insert(w):
                queue.append(ech.rows[-1])
    return ech.dim


def nullspace_p(a, p: int) -> list:
    """Basis of {x : a x = 0 mod p} as a list of int64 vectors."""
    n = a.shape[1]
    ech = EchelonP(p)
    for i in range(a.shape[0]):
        ech.insert(a[i].copy())
    piv_rows = {pc: row for pc, row in zip(ech.pivs, ech.rows)}
    # back-substitute to full reduction so kernel vectors read off cleanly
    order = sorted(piv_rows)
    for idx, pc in enumerate(order):
        row = piv_rows[pc]
        for later in order[idx + 1:]:
            c = int(row[later])
            if c:
                row = (row - c * piv_rows[later]) % p
        piv_rows[pc] = row
    pivset = set(order)
    out = []
    for f in range(n):
        if f in pivset:
            continue
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for pc in order:
            c = int(piv_rows[pc][f])
            if c:
                v[pc] = (-c) % p
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# polynomials over F_p (ascending coefficient lists of python ints)


def _ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmulmod(f, g, mod, p):
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = (out[i + j] + a * b) % p
    return _pdivmod(out, mod, p)[1]


def _pdivmod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], p - 2, p)
    q = [0] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and any(f):
        _ptrim(f)
        if len(f) - 1 < dg:
            break
        c = f[-1] * inv % p
        s = len(f) - 1 - dg
        q[s] = c
        for i, b in enumerate(g):
            f[s + i] = (f[s + i] - c * b) % p
        _ptrim(f)
    return q, f


def _pgcd(f, g, p):
    f, g = list(f), list(g)
    _ptrim(f), _ptrim(g)
    while g:
        f, g = g, _pdivmod(f, g, p)[1]
        _ptrim(g)
    if f:
        inv = pow(f[-1], p - 2, p)
        f = [c * inv % p for c in f]
    return f


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def charpoly_p(a, p: int) -> list:
    """Characteristic polynomial mod p, ascending coefficients, monic."""
    n = a.shape[0]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = np.eye(n, dtype=np.int64)
    for k in range(1, n + 1):
        am = (a @ m) % p
        t = int(np.trace(am) % p)
        c = (-t * pow(k, p - 2, p)) % p
        coeffs[n - k] = c
        m = (am + c * np.eye(n, dtype=np.int64)) % p
    return coeffs


def roots_in_fp(f, p: int, rng: random.Random) -> list:
    """Distinct roots of f in F_p (ignores multiplicities)."""
    f = _ptrim(list(f))
    if len(f) <= 1:
        return []
    # g = product of the distinct linear factors: gcd(f, x^p - x)
    xp = _ppowmod([0, 1], p, f, p)
    xp_minus_x = list(xp)
    while len(xp_minus_x) < 2:
        xp_minus_x.append(0)
    xp_minus_x[1] = (xp_minus_x[1] - 1) % p
    g = _pgcd(f, xp_minus_x, p)
    roots = []

    def split(h):
        h = _ptrim(list(h))
        if len(h) <= 1:
            return
        if len(h) == 2:
            roots.append((-h[0]) * pow(h[1], p - 2, p) % p)
            return
        while True:
            c = rng.randrange(p)
            probe = _ppowmod([c, 1], (p - 1) // 2, h, p)
            probe = list(probe)
            if not probe:
                probe = [0]
            probe[0] = (probe[0] - 1) % p
            d = _pgcd(h, probe, p)
            if 0 < len(d) - 1 < len(h) - 1:
                split(d)
                split(_pdivmod(h, d, p)[0])
                return

    split(g)
    return sorted(roots)


# ---------------------------------------------------------------------------
# the certificate


def _random_element(gens, rng: random.Random, p: int):
    a = np.zeros_like(gens[0])
    for g in gens:
        a = (a + rng.randrange(1, 50) * g) % p
    for _ in range(min(3, len(gens))):
        i = rng.randrange(len(gens))
        j = rng.randrange(len(gens))
        a = (a + rng.randrange(1, 50) * ((gens[i] @ gens[j]) % p)) % p
    return a


def norton_test(gens, p: int, rng: random.Random, tries: int = 8) -> str:
    """'irr' / 'red' (both meant mod p) or 'unknown'."""
    n = gens[0].shape[0]
    eye = np.eye(n, dtype=np.int64)
    gens_t = [g.T.copy() for g in gens]
    for _ in range(tries):
        a = _random_element(gens, rng, p)
        for theta in roots_in_fp(charpoly_p(a, p), p, rng):
            shifted = (a - theta * eye) % p
            ns = nullspace_p(shifted, p)
            if len(ns) != 1:
                continue
            if spin_p([ns[0]], gens, p) < n:
                return "red"
            ns_t = nullspace_p(shifted.T.copy(), p)
            if spin_p([ns_t[0]], gens_t, p) < n:
                return "red"
            return "irr"
    return "unknown"


def certify_burnside_full(gens) -> bool:
    """True => the exact algebra span of the generators is the full
    matrix algebra (certified).  False => no certificate was found; the
    caller must decide the question exactly."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    n = gens[0].nrows
    if n == 1:
        return True
    for p in PRIMES:
        reduced = []
        ok = True
        for g in gens:
            r = mat_mod_p(g, p)
            if r is None:
                ok = False
                break
            reduced.append(r)
        if not ok:
            continue
        rng = random.Random(n * 1000003 + len(gens) * 101 + p)
        verdict = norton_test(reduced, p, rng)
        if verdict == "irr":
            return True
        if verdict == "red":
            return False
    return False
