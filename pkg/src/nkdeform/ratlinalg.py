"""Exact linear algebra over the rationals.

Matrices are sequences of sequences of ``Fraction`` (or int); every routine
returns fresh ``list`` structures and never mutates its input.  Sizes in this
package never exceed 15x15, so plain Gauss-Jordan elimination and
Faddeev-LeVerrier are entirely adequate.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SpectrumError


def _rows(mat):
    return [[Fraction(x) for x in row] for row in mat]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(mat):
    return [list(col) for col in zip(*mat)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    c = Fraction(c)
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def trace(a):
    return sum(a[i][i] for i in range(len(a)))


def rref(mat):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    a = _rows(mat)
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(mat):
    return len(rref(mat)[1])


def nullspace(mat):
    """Basis of the right kernel, one vector per free column."""
    a, pivots = rref(mat)
    ncols = len(mat[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(v)
    return basis


def inverse(mat):
    n = len(mat)
    a = [row + ident_row for row, ident_row in zip(_rows(mat), identity(n))]
    a, pivots = rref(a)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in a]


def solve(mat, rhs):
    """Exact solution of a consistent system with full column rank.

    Accepts overdetermined systems; raises ``ZeroDivisionError`` when the
    system is inconsistent or the solution is not unique.
    """
    ncols = len(mat[0])
    aug = [list(row) + [b] for row, b in zip(_rows(mat), rhs)]
    a, pivots = rref(aug)
    if ncols in pivots:
        raise ZeroDivisionError("inconsistent linear system")
    if pivots != list(range(ncols)):
        raise ZeroDivisionError("solution is not unique")
    return [a[r][ncols] for r in range(ncols)]


def det(mat):
    a = _rows(mat)
    n = len(a)
    sign = Fraction(1)
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign = -sign
        result *= a[c][c]
        inv = Fraction(1) / a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign * result


def leading_principal_minors(mat):
    n = len(mat)
    return [det([row[: k + 1] for row in mat[: k + 1]]) for k in range(n)]


def charpoly(mat):
    """Monic characteristic polynomial coefficients [1, c1, ..., cn].

    Faddeev-LeVerrier recursion: p(t) = t^n + c1 t^(n-1) + ... + cn.
    """
    n = len(mat)
    a = _rows(mat)
    coeffs = [Fraction(1)]
    m = identity(n)
    for k in range(1, n + 1):
        m = mat_mul(a, m)
        ck = -trace(m) / k
        coeffs.append(ck)
        for i in range(n):
            m[i][i] += ck
    return coeffs


def _divisors(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def rational_roots(coeffs):
    """All roots (with multiplicity) of a rational polynomial.

    Returns a dict ``{root: multiplicity}``.  Raises ``SpectrumError`` when
    the polynomial does not split over the rationals.
    """
    coeffs = [Fraction(c) for c in coeffs]
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
    ipoly = [int(c * denom_lcm) for c in coeffs]

    roots = {}
    # Peel zero roots first so the rational-root candidates stay finite.
    while len(ipoly) > 1 and ipoly[-1] == 0:
        roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
        ipoly = ipoly[:-1]

    def synth_div(poly, r):
        out = [poly[0]]
        for c in poly[1:]:
            out.append(c + out[-1] * r)
        remainder = out.pop()
        return out, remainder

    changed = True
    while len(ipoly) > 1 and changed:
        changed = False
        lead, const = ipoly[0], ipoly[-1]
        for p in _divisors(const):
            for q in _divisors(lead):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    quot, rem = synth_div([Fraction(c) for c in ipoly], cand)
                    if rem == 0:
                        roots[cand] = roots.get(cand, 0) + 1
                        scale = 1
                        for c in quot:
                            scale = scale * c.denominator // _gcd(
                                scale, c.denominator
                            )
                        ipoly = [int(c * scale) for c in quot]
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    if len(ipoly) > 1:
        raise SpectrumError(
            "polynomial has an irrational factor of degree %d" % (len(ipoly) - 1)
        )
    return roots


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
