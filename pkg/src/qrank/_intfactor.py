"""Integer polynomial factorization: Berlekamp mod p, Hensel lifting,
Zassenhaus recombination.

Internal module.  Polynomials over Z are lists of Python ints in
ascending order (index i = coefficient of x**i, no trailing zeros);
polynomials over GF(p) are numpy int64 arrays in the same layout.
Degrees here stay in the hundreds, so exhaustive recombination is fine
and no lattice reduction is needed.
"""

from __future__ import annotations

from itertools import combinations
from math import ceil, isqrt, log

import numpy as np

from .arith import primes_upto

_GF_EMPTY = np.zeros(0, dtype=np.int64)

# ---------------------------------------------------------------------------
# Z[x] helpers (Python ints, ascending order)


def zz_strip(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def zz_degree(f: list[int]) -> int:
    return len(f) - 1


def zz_add(f: list[int], g: list[int]) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return zz_strip(out)


def zz_sub(f: list[int], g: list[int]) -> list[int]:
    out = list(f) + [0] * (len(g) - len(f))
    for i, c in enumerate(g):
        out[i] -= c
    return zz_strip(out)


def zz_mul(f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return zz_strip(out)


def zz_divmod_monic(f: list[int], h: list[int]) -> tuple[list[int], list[int]]:
    """Division by a monic divisor; exact over Z."""
    dh = zz_degree(h)
    if zz_degree(f) < dh:
        return [], list(f)
    rem = list(f)
    quot = [0] * (len(f) - dh)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + dh]
        if c:
            quot[i] = c
            for j, b in enumerate(h):
                rem[i + j] -= c * b
    return zz_strip(quot), zz_strip(rem[:dh])


def zz_trunc(f: list[int], m: int) -> list[int]:
    """Reduce coefficients into the balanced range (-m/2, m/2]."""
    half = m // 2
    out = []
    for c in f:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    return zz_strip(out)


def zz_content(f: list[int]) -> int:
    from math import gcd

    c = 0
    for a in f:
        c = gcd(c, a)
        if c == 1:
            return 1
    return c


def zz_primitive(f: list[int]) -> list[int]:
    c = zz_content(f)
    if c in (0, 1):
        return list(f)
    return [a // c for a in f]


def zz_l1(f: list[int]) -> int:
    return sum(abs(c) for c in f)


# ---------------------------------------------------------------------------
# GF(p)[x] kernels (numpy int64, ascending order)


def gf_from_zz(f: list[int], p: int) -> np.ndarray:
    return gf_strip(np.array([c % p for c in f], dtype=np.int64))


def gf_to_zz(f: np.ndarray, p: int) -> list[int]:
    """Balanced integer lift."""
    half = p // 2
    out = []
    for c in f.tolist():
        out.append(c - p if c > half else c)
    return zz_strip(out)


def gf_strip(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    if nz.size == 0:
        return _GF_EMPTY
    return np.ascontiguousarray(a[: nz[-1] + 1])


def gf_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return _GF_EMPTY
    return np.convolve(a, b) % p


def gf_divmod(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    if b.size == 0:
        raise ZeroDivisionError("gf division by zero")
    if a.size < b.size:
        return _GF_EMPTY, a
    db = b.size - 1
    inv = pow(int(b[-1]), p - 2, p)
    rem = a.copy()
    quot = np.zeros(a.size - db, dtype=np.int64)
    for i in range(quot.size - 1, -1, -1):
        c = rem[i + db] * inv % p
        if c:
            quot[i] = c
            rem[i : i + db + 1] = (rem[i : i + db + 1] - c * b) % p
    return gf_strip(quot), gf_strip(rem[:db])


def gf_rem(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return gf_divmod(a, b, p)[1]


def gf_monic(a: np.ndarray, p: int) -> np.ndarray:
    if a.size == 0 or a[-1] == 1:
        return a
    inv = pow(int(a[-1]), p - 2, p)
    return a * inv % p


def gf_gcd(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    while b.size:
        a, b = b, gf_rem(a, b, p)
    return gf_monic(a, p)


def gf_diff(a: np.ndarray, p: int) -> np.ndarray:
    if a.size <= 1:
        return _GF_EMPTY
    return gf_strip(a[1:] * np.arange(1, a.size, dtype=np.int64) % p)


def gf_pow_mod(base: np.ndarray, e: int, mod: np.ndarray, p: int) -> np.ndarray:
    result = np.ones(1, dtype=np.int64)
    acc = gf_rem(base, mod, p)
    while e > 0:
        if e & 1:
            result = gf_rem(gf_mul(result, acc, p), mod, p)
        acc = gf_rem(gf_mul(acc, acc, p), mod, p)
        e >>= 1
    return result


def gf_is_squarefree(f: np.ndarray, p: int) -> bool:
    d = gf_diff(f, p)
    if d.size == 0:
        return f.size - 1 == 0
    return gf_gcd(f, d, p).size == 1


def _berlekamp_matrix(f: np.ndarray, p: int) -> np.ndarray:
    """Rows are x**(i*p) mod f for i = 0..n-1."""
    n = f.size - 1
    rows = np.zeros((n, n), dtype=np.int64)
    rows[0, 0] = 1
    xp = gf_pow_mod(np.array([0, 1], dtype=np.int64), p, f, p)
    cur = np.zeros(1, dtype=np.int64)
    cur[0] = 1
    for i in range(1, n):
        cur = gf_rem(gf_mul(cur, xp, p), f, p)
        rows[i, : cur.size] = cur
    return rows


def _gf_nullspace(M: np.ndarray, p: int) -> list[np.ndarray]:
    """Basis of the right nullspace of M over GF(p)."""
    M = M.copy() % p
    nrows, ncols = M.shape
    pivots: dict[int, int] = {}
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        sel = -1
        for rr in range(row, nrows):
            if M[rr, col]:
                sel = rr
                break
        if sel < 0:
            continue
        if sel != row:
            M[[row, sel]] = M[[sel, row]]
        inv = pow(int(M[row, col]), p - 2, p)
        M[row] = M[row] * inv % p
        hits = np.nonzero(M[:, col])[0]
        hits = hits[hits != row]
        if hits.size:
            M[hits] = (M[hits] - np.outer(M[hits, col], M[row])) % p
        pivots[col] = row
        row += 1
    basis = []
    for fc in range(ncols):
        if fc in pivots:
            continue
        v = np.zeros(ncols, dtype=np.int64)
        v[fc] = 1
        for c, rr in pivots.items():
            v[c] = (-int(M[rr, fc])) % p
        basis.append(v)
    return basis


def gf_factor_count(f: np.ndarray, p: int) -> int:
    """Number of irreducible factors of squarefree monic f (Berlekamp nullity)."""
    n = f.size - 1
    if n <= 1:
        return n
    Q = _berlekamp_matrix(f, p)
    M = (Q.T - np.eye(n, dtype=np.int64)) % p
    return len(_gf_nullspace(M, p))


def gf_factor_squarefree(f: np.ndarray, p: int) -> list[np.ndarray]:
    """Monic irreducible factors of squarefree monic f over GF(p).

    Classic Berlekamp with exhaustive subfield-element splitting; p is
    always chosen small, so the s-loop is cheap.
    """
    f = gf_monic(f, p)
    n = f.size - 1
    if n <= 1:
        return [f] if n == 1 else []
    Q = _berlekamp_matrix(f, p)
    M = (Q.T - np.eye(n, dtype=np.int64)) % p
    basis = _gf_nullspace(M, p)
    r = len(basis)
    factors = [f]
    if r == 1:
        return factors
    for v in basis:
        if len(factors) == r:
            break
        vpoly = gf_strip(v)
        if vpoly.size <= 1:
            continue
        new: list[np.ndarray] = []
        for u in factors:
            if u.size - 1 <= 1:
                new.append(u)
                continue
            rem = u
            for s in range(p):
                if rem.size - 1 <= 0:
                    break
                vs = vpoly.copy()
                vs[0] = (vs[0] - s) % p
                g = gf_gcd(rem, vs, p)
                if 0 < g.size - 1 < rem.size - 1:
                    new.append(g)
                    rem = gf_divmod(rem, g, p)[0]
            if rem.size - 1 > 0:
                new.append(rem)
        factors = new
    return sorted(factors, key=lambda a: (a.size, a.tolist()))


# ---------------------------------------------------------------------------
# Hensel lifting (Gathen-von zur Gathen style, quadratic steps)


def _hensel_step(m, f, g, h, s, t):
    """Lift f = g*h (mod m), s*g + t*h = 1 (mod m) to the same mod m**2.

    lc(h) = 1, deg(f) = deg(g) + deg(h), deg(s) < deg(h), deg(t) < deg(g).
    """
    M = m * m

    e = zz_trunc(zz_sub(f, zz_mul(g, h)), M)

    q, r = zz_divmod_monic(zz_mul(s, e), h)
    q = zz_trunc(q, M)
    r = zz_trunc(r, M)

    u = zz_add(zz_mul(t, e), zz_mul(q, g))
    G = zz_trunc(zz_add(g, u), M)
    H = zz_trunc(zz_add(h, r), M)

    u = zz_add(zz_mul(s, G), zz_mul(t, H))
    b = zz_trunc(zz_sub(u, [1]), M)

    c, d = zz_divmod_monic(zz_mul(s, b), H)
    c = zz_trunc(c, M)
    d = zz_trunc(d, M)

    u = zz_add(zz_mul(t, b), zz_mul(c, G))
    S = zz_trunc(zz_sub(s, d), M)
    T = zz_trunc(zz_sub(t, u), M)

    return G, H, S, T


def _gf_gcdex(a: np.ndarray, b: np.ndarray, p: int):
    """s, t, g with s*a + t*b = g = gcd(a, b), all monic-normalized."""
    r0, r1 = a, b
    s0, s1 = np.ones(1, dtype=np.int64), _GF_EMPTY
    t0, t1 = _GF_EMPTY, np.ones(1, dtype=np.int64)
    while r1.size:
        q, r = gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gf_strip((_pad_sub(s0, gf_mul(q, s1, p), p)))
        t0, t1 = t1, gf_strip((_pad_sub(t0, gf_mul(q, t1, p), p)))
    if r0.size:
        inv = pow(int(r0[-1]), p - 2, p)
        r0 = r0 * inv % p
        s0 = s0 * inv % p
        t0 = t0 * inv % p
    return s0, t0, r0


def _pad_sub(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    n = max(a.size, b.size)
    out = np.zeros(n, dtype=np.int64)
    out[: a.size] = a
    out[: b.size] -= b
    return out % p


def hensel_lift(p: int, f: list[int], f_list: list[list[int]], l: int) -> list[list[int]]:
    """Lift monic pairwise-coprime factors of f mod p to factors mod p**l."""
    r = len(f_list)
    lc = f[-1]

    if r == 1:
        # lc is a unit mod p**l; return the monic-scaled image of f.
        m = p**l
        inv = pow(lc % m, -1, m)
        return [zz_trunc([c * inv for c in f], m)]

    m = p
    k = r // 2
    d = int(ceil(log(l, 2))) if l > 1 else 1

    g = gf_from_zz([lc], p)
    for f_i in f_list[:k]:
        g = gf_mul(g, gf_from_zz(f_i, p), p)

    h = gf_from_zz(f_list[k], p)
    for f_i in f_list[k + 1 :]:
        h = gf_mul(h, gf_from_zz(f_i, p), p)

    s, t, _ = _gf_gcdex(g, h, p)

    g = gf_to_zz(g, p)
    h = gf_to_zz(h, p)
    s = gf_to_zz(s, p)
    t = gf_to_zz(t, p)

    for _ in range(1, d + 1):
        (g, h, s, t), m = _hensel_step(m, f, g, h, s, t), m**2

    return hensel_lift(p, g, f_list[:k], l) + hensel_lift(p, h, f_list[k:], l)


# ---------------------------------------------------------------------------
# Zassenhaus

_CANDIDATE_PRIMES = [q for q in primes_upto(300) if q >= 3]


def _test_pl(fc: int, q: int, pl: int) -> bool:
    if q > pl // 2:
        q -= pl
    if not q:
        return True
    return fc % q == 0


def zz_factor_squarefree(f: list[int]) -> list[list[int]]:
    """Irreducible factors of a primitive squarefree f with lc(f) > 0.

    Zassenhaus: factor mod a good small prime, Hensel lift past the
    Landau-Mignotte bound, recombine subsets exhaustively.
    """
    f = zz_strip(list(f))
    n = zz_degree(f)
    if n <= 0:
        return []
    if n == 1:
        return [f]

    fc = f[0]
    A = max(abs(c) for c in f)
    b = f[-1]
    B = (isqrt(n + 1) + 1) * 2**n * A * abs(b)

    candidates = []
    for p in _CANDIDATE_PRIMES:
        if b % p == 0:
            continue
        F = gf_from_zz(f, p)
        if not gf_is_squarefree(F, p):
            continue
        count = gf_factor_count(gf_monic(F, p), p)
        candidates.append((count, p))
        if count == 1:
            return [f]
        if count < 10 and len(candidates) >= 3:
            break
        if len(candidates) >= 5:
            break
    if not candidates:
        # the discriminant has swallowed every small prime; keep looking
        for p in primes_upto(10000):
            if p < 300 or b % p == 0:
                continue
            F = gf_from_zz(f, p)
            if gf_is_squarefree(F, p):
                candidates.append((gf_factor_count(gf_monic(F, p), p), p))
                break
    if not candidates:
        raise RuntimeError("no usable prime found for modular factorization")
    _, p = min(candidates)

    modular = [
        gf_to_zz(ff, p)
        for ff in gf_factor_squarefree(gf_monic(gf_from_zz(f, p), p), p)
    ]

    l = int(ceil(log(2 * B + 1, p)))
    g = hensel_lift(p, f, modular, l)

    sorted_T = list(range(len(g)))
    T = set(sorted_T)
    factors: list[list[int]] = []
    s = 1
    pl = p**l

    while 2 * s <= len(T):
        for S in combinations(sorted_T, s):
            if b == 1:
                q = 1
                for i in S:
                    q = q * g[i][0]
                q %= pl
                if not _test_pl(fc, q, pl):
                    continue
                G = [b]
                for i in S:
                    G = zz_mul(G, g[i])
                G = zz_trunc(G, pl)
            else:
                G = [b]
                for i in S:
                    G = zz_mul(G, g[i])
                G = zz_trunc(G, pl)
                G = zz_primitive(G)
                q = G[0]
                if q and fc % q != 0:
                    continue

            Sset = set(S)
            T_S = T - Sset

            H = [b]
            for i in T_S:
                H = zz_mul(H, g[i])
            H = zz_trunc(H, pl)

            if zz_l1(G) * zz_l1(H) <= B:
                T = T_S
                sorted_T = [i for i in sorted_T if i not in Sset]
                G = zz_primitive(G)
                f = zz_primitive(H)
                factors.append(G)
                b = f[-1]
                fc = f[0]
                break
        else:
            s += 1

    return factors + [f]
