"""Exact real Clifford algebra of a negative-definite six-dimensional space,
its eight-dimensional spinor representation, and the SU(3)-structure data a
unit spinor determines.

The generators are the left-multiplication operators of six imaginary
octonion units on the octonions: signed permutation matrices, skew and
mutually anticommuting, so every invariant below is checked by exact
integer/rational matrix identities.  A unit spinor psi determines the
three-form P and four-form Q through 8 psi psi^T = 1 + P - Q; from these the
almost complex structure J, the two-form omega = *Q and the eigenspace
structure of contraction with Q on two-forms all follow and are verified.

Multivectors are indexed by bitmasks over the six generators; coefficient
arithmetic is ``Fraction`` throughout.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import ratlinalg
from .errors import (
    ConsistencyError,
    ConventionError,
    IdentityViolationError,
    SpectrumError,
)

_F = Fraction

DIM = 6
N_BLADES = 1 << DIM
VOL_MASK = N_BLADES - 1


def _popcount(mask):
    return bin(mask).count("1")


def _bits(mask):
    return [i for i in range(DIM) if mask >> i & 1]


def _merge_sign(a, b):
    """Sign of e_a ^ e_b when reordering the concatenation (disjoint masks)."""
    sign = 1
    for i in _bits(b):
        higher = a >> (i + 1)
        if _popcount(higher) % 2:
            sign = -sign
    return sign


@dataclass(frozen=True)
class Multivector:
    """Element of the 64-dimensional exterior algebra, exact coefficients."""

    coeffs: tuple

    @staticmethod
    def zero():
        return Multivector((_F(0),) * N_BLADES)

    @staticmethod
    def scalar(value):
        c = [_F(0)] * N_BLADES
        c[0] = _F(value)
        return Multivector(tuple(c))

    @staticmethod
    def blade(mask, value=1):
        c = [_F(0)] * N_BLADES
        c[mask] = _F(value)
        return Multivector(tuple(c))

    @staticmethod
    def vector(index):
        """Basis one-form e_index, 1-based."""
        return Multivector.blade(1 << (index - 1))

    def __add__(self, other):
        return Multivector(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        return Multivector(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return Multivector(tuple(-a for a in self.coeffs))

    def scale(self, k):
        k = _F(k)
        return Multivector(tuple(k * a for a in self.coeffs))

    def is_zero(self):
        return all(a == 0 for a in self.coeffs)

    def grade_part(self, k):
        return Multivector(
            tuple(
                a if _popcount(mask) == k else _F(0)
                for mask, a in enumerate(self.coeffs)
            )
        )

    def grades(self):
        return sorted(
            {_popcount(mask) for mask, a in enumerate(self.coeffs) if a != 0}
        )

    def wedge(self, other):
        out = [_F(0)] * N_BLADES
        for m1, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for m2, b in enumerate(other.coeffs):
                if b == 0 or (m1 & m2):
                    continue
                out[m1 | m2] += a * b * _merge_sign(m1, m2)
        return Multivector(tuple(out))

    def contract_vector(self, index):
        """Interior product e_index -| self (1-based index, orthonormal)."""
        bit = 1 << (index - 1)
        out = [_F(0)] * N_BLADES
        for mask, a in enumerate(self.coeffs):
            if a == 0 or not mask & bit:
                continue
            below = mask & (bit - 1)
            sign = -1 if _popcount(below) % 2 else 1
            out[mask ^ bit] += sign * a
        return Multivector(tuple(out))

    def contract(self, other):
        """Interior product self -| other, extending the metric pairing.

        On basis blades (e_{i1} ^ ... ^ e_{ik}) -| w applies the contraction
        by e_{i1} first, so that e_I -| e_I = +1.
        """
        out = Multivector.zero()
        for mask, a in enumerate(self.coeffs):
            if a == 0:
                continue
            term = other
            for i in _bits(mask):
                term = term.contract_vector(i + 1)
            out = out + term.scale(a)
        return out

    def contract_by_oneform(self, alpha):
        """Interior product alpha -| self for a one-form alpha."""
        out = Multivector.zero()
        for i in range(1, DIM + 1):
            c = alpha.coeffs[1 << (i - 1)]
            if c != 0:
                out = out + self.contract_vector(i).scale(c)
        return out

    def star(self):
        """Hodge star with *1 = e_123456 (orthonormal, positive orientation)."""
        out = [_F(0)] * N_BLADES
        for mask, a in enumerate(self.coeffs):
            if a == 0:
                continue
            comp = VOL_MASK ^ mask
            out[comp] += a * _merge_sign(mask, comp)
        return Multivector(tuple(out))

    def norm_sq(self):
        return sum(a * a for a in self.coeffs)


# ---------------------------------------------------------------------------
# Octonion model of the generators


def _octonion_table():
    """Structure table o[p][q] = (sign, index) for e_p * e_q, built by the
    Cayley-Dickson doubling (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
    of the quaternions.  Units 0..3 sit in the first quaternion slot,
    4..7 in the second."""
    units = ["1", "i", "j", "k"]
    signs = {
        ("1", "1"): (1, "1"),
        ("1", "i"): (1, "i"),
        ("1", "j"): (1, "j"),
        ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"),
        ("j", "1"): (1, "j"),
        ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"),
        ("j", "j"): (-1, "1"),
        ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"),
        ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"),
        ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"),
        ("i", "k"): (-1, "j"),
    }
    quat = {
        (units.index(x), units.index(y)): (s, units.index(u))
        for (x, y), (s, u) in signs.items()
    }

    def qconj(x):
        return (1, 0) if x == 0 else (-1, x)

    table = {}
    for p in range(8):
        for q in range(8):
            if p < 4 and q < 4:
                s, u = quat[(p, q)]
                table[(p, q)] = (s, u)
            elif p < 4 <= q:
                s, u = quat[(q - 4, p)]
                table[(p, q)] = (s, u + 4)
            elif q < 4 <= p:
                sc, uc = qconj(q)
                s, u = quat[(p - 4, uc)]
                table[(p, q)] = (sc * s, u + 4)
            else:
                sd, ud = qconj(q - 4)
                s, u = quat[(ud, p - 4)]
                table[(p, q)] = (-sd * s, u)
    return table


def _build_gammas():
    table = _octonion_table()
    gammas = []
    for a in range(1, DIM + 1):
        mat = [[_F(0)] * 8 for _ in range(8)]
        for col in range(8):
            sign, row = table[(a, col)]
            mat[row][col] = _F(sign)
        gammas.append(tuple(tuple(r) for r in mat))
    return tuple(gammas)


_GRADE_SYMMETRIC = {0, 3, 4}


@dataclass(frozen=True)
class CliffordRep:
    """Six generator matrices plus all 64 blade matrices (products in
    increasing index order) and the trace pairing back to multivectors."""

    gammas: tuple
    blades: tuple

    @property
    def vol(self):
        return self.blades[VOL_MASK]

    def matrix(self, mv):
        out = [[_F(0)] * 8 for _ in range(8)]
        for mask, a in enumerate(mv.coeffs):
            if a == 0:
                continue
            blade = self.blades[mask]
            for i in range(8):
                row = blade[i]
                for j in range(8):
                    if row[j] != 0:
                        out[i][j] += a * row[j]
        return [list(r) for r in out]

    def multivector(self, matrix):
        """Inverse of :meth:`matrix` via coefficient = Tr(blade^T M)/8."""
        coeffs = []
        for mask in range(N_BLADES):
            blade = self.blades[mask]
            acc = _F(0)
            for i in range(8):
                for j in range(8):
                    if blade[i][j] != 0:
                        acc += blade[i][j] * matrix[i][j]
            coeffs.append(acc / 8)
        return Multivector(tuple(coeffs))

    def act(self, mv, spinor):
        return tuple(
            sum(row[j] * spinor[j] for j in range(8))
            for row in self.matrix(mv)
        )

    def act_matrix(self, matrix, spinor):
        return tuple(
            sum(row[j] * spinor[j] for j in range(8)) for row in matrix
        )


def build_rep():
    """Construct and verify the spinor representation.

    Postconditions (all exact): generators anticommute with square -1, are
    skew and orthogonal; a blade matrix is symmetric iff its grade is 0, 3
    or 4; the volume element squares to -1.
    """
    gammas = _build_gammas()
    blades = [None] * N_BLADES
    blades[0] = tuple(tuple(row) for row in ratlinalg.identity(8))
    for mask in range(1, N_BLADES):
        low = mask & -mask
        rest = mask ^ low
        index = low.bit_length() - 1
        if rest == 0:
            blades[mask] = gammas[index]
        else:
            blades[mask] = tuple(
                tuple(r)
                for r in ratlinalg.mat_mul(
                    [list(r) for r in gammas[index]], [list(r) for r in blades[rest]]
                )
            )
    rep = CliffordRep(gammas, tuple(blades))

    ident = ratlinalg.identity(8)
    for a in range(DIM):
        ga = [list(r) for r in gammas[a]]
        if ratlinalg.mat_mul(ga, ratlinalg.transpose(ga)) != ident:
            raise ConsistencyError("generator %d is not orthogonal" % (a + 1))
        if ratlinalg.transpose(ga) != ratlinalg.mat_scale(ga, -1):
            raise ConsistencyError("generator %d is not skew" % (a + 1))
        for b in range(DIM):
            gb = [list(r) for r in gammas[b]]
            anti = ratlinalg.mat_add(
                ratlinalg.mat_mul(ga, gb), ratlinalg.mat_mul(gb, ga)
            )
            expect = ratlinalg.mat_scale(ident, -2 if a == b else 0)
            if anti != expect:
                raise ConsistencyError(
                    "generators %d, %d violate the Clifford relation"
                    % (a + 1, b + 1)
                )
    for mask in range(N_BLADES):
        blade = [list(r) for r in blades[mask]]
        symmetric = ratlinalg.transpose(blade) == blade
        if symmetric != (_popcount(mask) in _GRADE_SYMMETRIC):
            raise ConsistencyError(
                "blade %#x has wrong transpose symmetry" % mask
            )
    vol = [list(r) for r in rep.vol]
    if ratlinalg.mat_mul(vol, vol) != ratlinalg.mat_scale(ident, -1):
        raise ConsistencyError("volume element does not square to -1")
    return rep


# ---------------------------------------------------------------------------
# Spinor-derived structure


STANDARD_SPINOR = (_F(1), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0))


def _check_unit(psi):
    if sum(x * x for x in psi) != 1:
        raise ConventionError("spinor is not of unit length")


def extract_PQ(rep, psi):
    """The unique three-form P and four-form Q with 8 psi psi^T = 1 + P - Q.

    Raises :class:`ConventionError` when psi is not a unit spinor or the
    rank-one projector has residue outside grades {0, 3, 4}.
    """
    _check_unit(psi)
    m = [[8 * psi[i] * psi[j] for j in range(8)] for i in range(8)]
    mv = rep.multivector(m)
    if mv.coeffs[0] != 1:
        raise ConventionError("grade-0 part of 8 psi psi^T is %s" % mv.coeffs[0])
    residue = mv - Multivector.scalar(1) - mv.grade_part(3) - mv.grade_part(4)
    if not residue.is_zero():
        raise ConventionError(
            "8 psi psi^T has components outside grades {0, 3, 4}"
        )
    p = mv.grade_part(3)
    q = -mv.grade_part(4)
    return p, q


def _eigenvalue_on(rep, operator, spinor):
    """Exact eigenvalue of an 8x8 matrix on a given nonzero spinor."""
    image = rep.act_matrix(operator, spinor)
    pivot = next(i for i in range(8) if spinor[i] != 0)
    lam = image[pivot] / spinor[pivot]
    if any(image[i] != lam * spinor[i] for i in range(8)):
        raise ConsistencyError("vector is not an eigenvector")
    return lam


@dataclass(frozen=True)
class SpinorBlockSpectra:
    """Eigenvalues of P and Q on span(psi), {u.psi}, span(Vol.psi)."""

    p_values: tuple
    q_values: tuple


def spinor_decomposition_spectra(rep, psi):
    """Eigenvalues of Clifford multiplication by P and Q on the three blocks
    of S = span(psi) + {u.psi} + span(Vol.psi); also verifies that the eight
    vectors spanning those blocks are orthonormal."""
    p, q = extract_PQ(rep, psi)
    pm = rep.matrix(p)
    qm = rep.matrix(q)
    basis = [psi]
    basis += [rep.act(Multivector.vector(a), psi) for a in range(1, DIM + 1)]
    basis.append(rep.act_matrix(rep.vol, psi))
    for i in range(8):
        for j in range(8):
            ip = sum(x * y for x, y in zip(basis[i], basis[j]))
            if ip != (1 if i == j else 0):
                raise ConsistencyError(
                    "spinor blocks are not orthonormal (%d, %d)" % (i, j)
                )
    p0 = _eigenvalue_on(rep, pm, basis[0])
    p6 = _eigenvalue_on(rep, pm, basis[7])
    q0 = _eigenvalue_on(rep, qm, basis[0])
    q6 = _eigenvalue_on(rep, qm, basis[7])
    p1s = {_eigenvalue_on(rep, pm, basis[a]) for a in range(1, 7)}
    q1s = {_eigenvalue_on(rep, qm, basis[a]) for a in range(1, 7)}
    if len(p1s) != 1 or len(q1s) != 1:
        raise ConsistencyError("P or Q is not scalar on the one-form block")
    return SpinorBlockSpectra(
        (p0, p1s.pop(), p6), (q0, q1s.pop(), q6)
    )


def complex_structure(rep, psi):
    """The almost complex structure J with (J u) . psi = Vol . u . psi.

    Returns J as a 6x6 exact matrix (columns are images of the basis
    vectors); verifies J^2 = -1, orthogonality, and that the two-form omega
    defined by Tr(omega . u . v)/8 = -g(u, J v) equals *Q.
    """
    _, q = extract_PQ(rep, psi)
    columns_matrix = ratlinalg.transpose(
        [list(rep.act(Multivector.vector(b), psi)) for b in range(1, DIM + 1)]
    )
    j_cols = []
    for a in range(1, DIM + 1):
        target = rep.act_matrix(
            ratlinalg.mat_mul(
                [list(r) for r in rep.vol],
                [list(r) for r in rep.gammas[a - 1]],
            ),
            psi,
        )
        j_cols.append(ratlinalg.solve(columns_matrix, list(target)))
    j = ratlinalg.transpose(j_cols)
    minus_ident = ratlinalg.mat_scale(ratlinalg.identity(DIM), -1)
    if ratlinalg.mat_mul(j, j) != minus_ident:
        raise IdentityViolationError("complex-structure-square")
    if ratlinalg.mat_mul(ratlinalg.transpose(j), j) != ratlinalg.identity(DIM):
        raise IdentityViolationError("complex-structure-orthogonality")
    omega = q.star()
    omega_matrix = rep.matrix(omega)
    for a in range(1, DIM + 1):
        for b in range(1, DIM + 1):
            prod = ratlinalg.mat_mul(
                omega_matrix,
                [list(r) for r in rep.blades[(1 << (a - 1))]],
            )
            prod = ratlinalg.mat_mul(prod, [list(r) for r in rep.blades[1 << (b - 1)]])
            if ratlinalg.trace(prod) / 8 != -j[a - 1][b - 1]:
                raise IdentityViolationError("kahler-form-trace")
    return j


def kahler_form(rep, psi):
    """The two-form omega = *Q of the SU(3)-structure defined by psi."""
    _, q = extract_PQ(rep, psi)
    return q.star()


# ---------------------------------------------------------------------------
# Identity suite


@dataclass(frozen=True)
class CheckResult:
    name: str
    description: str
    passed: bool


def _random_form(rng, grade):
    mv = Multivector.zero()
    for mask in range(N_BLADES):
        if _popcount(mask) == grade:
            mv = mv + Multivector.blade(
                mask, _F(rng.randint(-6, 6), rng.randint(1, 4))
            )
    return mv


def verify_identity_suite(rep, psi, raise_on_failure=True):
    """Run the eight named pointwise identities; each must hold exactly.

    Returns the list of :class:`CheckResult`; with ``raise_on_failure`` an
    :class:`IdentityViolationError` naming the failed checks is raised at
    the end instead of returning a partially failing report silently.
    """
    p, q = extract_PQ(rep, psi)
    star_p = p.star()
    star_q = q.star()
    j = complex_structure(rep, psi)
    rng = random.Random(1729)

    def mat(mv):
        return rep.matrix(mv)

    def commutator(a, b):
        return ratlinalg.mat_sub(ratlinalg.mat_mul(a, b), ratlinalg.mat_mul(b, a))

    def anticommutator(a, b):
        return ratlinalg.mat_add(ratlinalg.mat_mul(a, b), ratlinalg.mat_mul(b, a))

    def check_grade_brackets():
        for _ in range(4):
            alpha = _random_form(rng, 1)
            for grade in (1, 2, 3):
                beta = _random_form(rng, grade)
                ma, mb = mat(alpha), mat(beta)
                contr = beta.contract_by_oneform(alpha)
                if grade % 2 == 1:
                    comm_expect = alpha.wedge(beta).scale(2)
                    anti_expect = contr.scale(-2)
                else:
                    comm_expect = contr.scale(-2)
                    anti_expect = alpha.wedge(beta).scale(2)
                if commutator(ma, mb) != mat(comm_expect):
                    return False
                if anticommutator(ma, mb) != mat(anti_expect):
                    return False
        return True

    def check_degree_identities():
        lhs1 = Multivector.zero()
        lhs2 = Multivector.zero()
        for a in range(1, DIM + 1):
            e = Multivector.vector(a)
            lhs1 = lhs1 + e.wedge(e.wedge(p) + q.contract_vector(a))
            lhs2 = lhs2 + e.wedge(
                -star_p.contract_vector(a) - e.wedge(star_q)
            )
        return (lhs1 - q.scale(4)).is_zero() and (lhs2 + star_p.scale(3)).is_zero()

    def check_kahler_square():
        lhs = ratlinalg.mat_mul(mat(star_q), mat(star_q))
        rhs = mat(Multivector.scalar(-3) + q.scale(2))
        return lhs == rhs

    def check_holomorphic_contraction():
        for a in range(1, DIM + 1):
            v = Multivector.vector(a)
            jv = Multivector.zero()
            for b in range(1, DIM + 1):
                jv = jv + Multivector.vector(b).scale(j[b - 1][a - 1])
            real = p.contract_by_oneform(v) + star_p.contract_by_oneform(jv)
            imag = star_p.contract_by_oneform(v) - p.contract_by_oneform(jv)
            if not real.is_zero() or not imag.is_zero():
                return False
        return True

    def check_torsion_metric_trace():
        pm = mat(p)
        for a in range(1, DIM + 1):
            xa = anticommutator(mat(Multivector.vector(a)), pm)
            for b in range(1, DIM + 1):
                xb = anticommutator(mat(Multivector.vector(b)), pm)
                value = -ratlinalg.trace(ratlinalg.mat_mul(xa, xb)) / 32
                if value != (2 if a == b else 0):
                    return False
        return True

    def check_vector_sandwich():
        forms = [Multivector.vector(b) for b in range(1, DIM + 1)]
        forms.append(_random_form(rng, 1))
        for eps in forms:
            me = mat(eps)
            acc = [[_F(0)] * 8 for _ in range(8)]
            for a in range(1, DIM + 1):
                ga = [list(r) for r in rep.gammas[a - 1]]
                acc = ratlinalg.mat_add(
                    acc, ratlinalg.mat_mul(ga, ratlinalg.mat_mul(me, ga))
                )
            if acc != ratlinalg.mat_scale(me, 4):
                return False
        return True

    def check_three_form_square():
        correction = Multivector.zero()
        for a in range(1, DIM + 1):
            pa = p.contract_vector(a)
            correction = correction + pa.wedge(pa)
        rhs = Multivector.scalar(p.norm_sq()) - correction
        return ratlinalg.mat_mul(mat(p), mat(p)) == mat(rhs)

    def check_contraction_norm():
        total = sum(p.contract_vector(a).norm_sq() for a in range(1, DIM + 1))
        return total == 3 * p.norm_sq()

    checks = [
        (
            "grade-brackets",
            "Clifford (anti)commutators of a one-form against odd/even forms "
            "reduce to wedge and contraction",
            check_grade_brackets,
        ),
        (
            "degree-identities",
            "sum_a e^a ^ (e^a ^ P + e^a -| Q) = 4Q and "
            "sum_a e^a ^ (-e^a -| *P - e^a ^ *Q) = -3*P",
            check_degree_identities,
        ),
        (
            "kahler-square",
            "*Q . *Q = -3 + 2Q",
            check_kahler_square,
        ),
        (
            "holomorphic-contraction",
            "(v - i Jv) -| (P + i *P) = 0 for every basis vector",
            check_holomorphic_contraction,
        ),
        (
            "torsion-metric-trace",
            "-(1/32) Tr({X, P}{Y, P}) = 2 g(X, Y)",
            check_torsion_metric_trace,
        ),
        (
            "vector-sandwich",
            "sum_a e^a . eps . e^a = 4 eps for one-forms",
            check_vector_sandwich,
        ),
        (
            "three-form-square",
            "P . P = |P|^2 - sum_a (e^a -| P) ^ (e^a -| P)",
            check_three_form_square,
        ),
        (
            "contraction-norm",
            "sum_a |e^a -| P|^2 = 3 |P|^2",
            check_contraction_norm,
        ),
    ]
    report = [
        CheckResult(name, description, bool(fn()))
        for name, description, fn in checks
    ]
    failed = [r.name for r in report if not r.passed]
    if failed and raise_on_failure:
        raise IdentityViolationError("failed checks: %s" % ", ".join(failed))
    return report


# ---------------------------------------------------------------------------
# Contraction with Q on two-forms


_PAIRS_2FORM = [(a, b) for a in range(1, DIM + 1) for b in range(a + 1, DIM + 1)]


def _two_form_from_coords(coords):
    mv = Multivector.zero()
    for (a, b), c in zip(_PAIRS_2FORM, coords):
        if c != 0:
            mask = (1 << (a - 1)) | (1 << (b - 1))
            mv = mv + Multivector.blade(mask, c)
    return mv


def _two_form_coords(mv):
    return [
        mv.coeffs[(1 << (a - 1)) | (1 << (b - 1))] for a, b in _PAIRS_2FORM
    ]


def _skew_matrix(coords):
    m = [[_F(0)] * DIM for _ in range(DIM)]
    for (a, b), c in zip(_PAIRS_2FORM, coords):
        m[a - 1][b - 1] = c
        m[b - 1][a - 1] = -c
    return m


def _skew_coords(m):
    return [m[a - 1][b - 1] for a, b in _PAIRS_2FORM]


@dataclass(frozen=True)
class TwoFormSpectrum:
    """Exact spectrum of beta -> beta -| Q on the 15-dimensional space of
    two-forms, plus the projector onto the (-1)-eigenspace (the su(3) fibre
    of the instanton condition) and the eigenvalue carried by omega."""

    entries: tuple
    omega_eigenvalue: Fraction
    projector: tuple
    minus_one_basis: tuple


def q_contraction_operator(rep, psi):
    """Matrix of beta -> beta -| Q on the ordered basis e_ab (a < b)."""
    _, q = extract_PQ(rep, psi)
    cols = []
    for a, b in _PAIRS_2FORM:
        mask = (1 << (a - 1)) | (1 << (b - 1))
        image = Multivector.blade(mask).contract(q)
        cols.append(_two_form_coords(image))
    return ratlinalg.transpose(cols)


def q_contraction_spectrum(rep, psi):
    """Classify contraction with Q on two-forms, exactly.

    The characteristic polynomial is factored over the integers (the
    eigenvalues are rational; anything else raises ``SpectrumError``),
    eigenspace dimensions come from exact ranks, the (-1)-eigenspace must be
    eight-dimensional and closed under the commutator bracket of the
    corresponding skew endomorphisms, and every (-1)-eigenvector is checked
    to be omega-orthogonal and invariant under the complex structure.
    """
    op = q_contraction_operator(rep, psi)
    n = len(op)
    roots = ratlinalg.rational_roots(ratlinalg.charpoly(op))
    entries = []
    for lam in sorted(roots):
        shifted = ratlinalg.mat_sub(
            op, ratlinalg.mat_scale(ratlinalg.identity(n), lam)
        )
        dim = n - ratlinalg.rank(shifted)
        if dim != roots[lam]:
            raise SpectrumError(
                "eigenvalue %s: geometric %d != algebraic %d"
                % (lam, dim, roots[lam])
            )
        entries.append((lam, dim))
    if sum(d for _, d in entries) != n:
        raise SpectrumError("eigenspace dimensions do not fill the two-forms")

    minus_one = ratlinalg.mat_add(op, ratlinalg.identity(n))
    basis = ratlinalg.nullspace(minus_one)

    projector = ratlinalg.identity(n)
    for lam, _ in entries:
        if lam == -1:
            continue
        factor = ratlinalg.mat_scale(
            ratlinalg.mat_sub(op, ratlinalg.mat_scale(ratlinalg.identity(n), lam)),
            _F(1, -1 - lam),
        )
        projector = ratlinalg.mat_mul(projector, factor)

    omega = kahler_form(rep, psi)
    omega_coords = _two_form_coords(omega)
    image = ratlinalg.mat_vec(op, omega_coords)
    pivot = next(i for i in range(n) if omega_coords[i] != 0)
    omega_eig = image[pivot] / omega_coords[pivot]
    if image != [omega_eig * c for c in omega_coords]:
        raise SpectrumError("omega is not an eigenvector of contraction by Q")

    j = complex_structure(rep, psi)
    for v in basis:
        projected = ratlinalg.mat_vec(projector, v)
        if projected != v:
            raise SpectrumError("projector does not fix the (-1)-eigenspace")
        if ratlinalg.dot(v, omega_coords) != 0:
            raise SpectrumError("(-1)-eigenvector is not omega-orthogonal")
        skew = _skew_matrix(v)
        conjugated = ratlinalg.mat_mul(
            ratlinalg.transpose(j), ratlinalg.mat_mul(skew, j)
        )
        if conjugated != skew:
            raise SpectrumError("(-1)-eigenvector has a (2,0)+(0,2) part")
    for u in basis:
        for v in basis:
            bracket = ratlinalg.mat_sub(
                ratlinalg.mat_mul(_skew_matrix(u), _skew_matrix(v)),
                ratlinalg.mat_mul(_skew_matrix(v), _skew_matrix(u)),
            )
            coords = _skew_coords(bracket)
            if ratlinalg.mat_vec(op, coords) != [-c for c in coords]:
                raise SpectrumError("(-1)-eigenspace is not bracket-closed")

    return TwoFormSpectrum(
        entries=tuple(entries),
        omega_eigenvalue=omega_eig,
        projector=tuple(tuple(row) for row in projector),
        minus_one_basis=tuple(tuple(v) for v in basis),
    )
