"""Curvature-operator spectra and instanton deformation spaces.

Two computations, both exact:

* the spectrum of the canonical-connection curvature operator
  eps -> -2 F . eps on m* (x) E, assembled from Casimir eigenvalues
  (eigenvalue on an irreducible U inside E_alpha (x) m* is
  -4 + Cas_h(E_alpha) - Cas_h(U), with multiplicity dim U);

* the space of solutions of the linearized instanton plus gauge-fixing
  equations, found by Frobenius reciprocity: a G-irreducible W contributes
  once per common irreducible component of its restriction to H and of
  E_alpha (x) m*, provided Cas_g(W) equals Cas_h(E_alpha).

The complexified solution space always has even multiplicities (the volume
form acts as a complex structure swapping two copies); the halved
decomposition is the reported deformation space and its real dimension uses
complex dimensions of the halved summands.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import casimir, cosets, decompose, lie
from .errors import ConsistencyError, EvennessViolationError


@dataclass(frozen=True)
class CurvatureSpectrum:
    """Eigenvalue/multiplicity pairs, ascending, traceless, total 6*dim(E)."""

    entries: tuple
    gauge_dimension: int

    def __post_init__(self):
        values = [e for e, _ in self.entries]
        if values != sorted(values):
            raise ConsistencyError("spectrum entries not sorted")
        if self.total_dimension() != 6 * self.gauge_dimension:
            raise ConsistencyError(
                "spectrum covers %d dimensions, expected %d"
                % (self.total_dimension(), 6 * self.gauge_dimension)
            )
        if self.trace() != 0:
            raise ConsistencyError("curvature operator trace %s != 0" % self.trace())

    def total_dimension(self):
        return sum(d for _, d in self.entries)

    def trace(self):
        return sum(e * d for e, d in self.entries)

    def as_dict(self):
        return {e: d for e, d in self.entries}


@dataclass(frozen=True)
class DeformationSpace:
    """Complexified solution space, its halved form and the real dimension."""

    complexified: decompose.RepDecomposition
    halved: decompose.RepDecomposition
    real_dimension: int

    @property
    def is_rigid(self):
        return self.real_dimension == 0


def _tensor_with_mstar(c, hw):
    """Decomposition of the irreducible ``hw`` tensored with all of m*."""
    total = decompose.RepDecomposition(c.h_data)
    for m_hw, m_mult in c.mstar.entries.items():
        total = total.merged_with(
            decompose.tensor_decompose(c.h_data, hw, m_hw).scaled(m_mult)
        )
    return total


def curvature_spectrum(c, gauge):
    """Spectrum of eps -> -2 F . eps on m* (x) E for the canonical connection."""
    ctx_h = c.context_h
    for hw in c.mstar.entries:
        if casimir.casimir_eigenvalue(ctx_h, hw) != -4:
            raise ConsistencyError(
                "m* component %r of %s has Casimir != -4" % (hw, c.name)
            )
    gauge_decomp = cosets.gauge_rep(c, gauge)
    spectrum = {}
    for e_hw, n_alpha in gauge_decomp.entries.items():
        c_alpha = casimir.casimir_eigenvalue(ctx_h, e_hw)
        for u_hw, u_mult in _tensor_with_mstar(c, e_hw).entries.items():
            eig = -4 + c_alpha - casimir.casimir_eigenvalue(ctx_h, u_hw)
            dim = n_alpha * u_mult * lie.dimension(c.h_data, u_hw)
            spectrum[eig] = spectrum.get(eig, 0) + dim
    entries = tuple(sorted(spectrum.items()))
    return CurvatureSpectrum(entries, gauge_decomp.dimension())


def _complexified_solutions(c, gauge_decomp):
    """Frobenius-reciprocity count of the solutions of the Casimir-matching
    condition, as a G-decomposition with (even) multiplicities."""
    ctx_g = c.context_g
    ctx_h = c.context_h
    total = {}
    for e_hw, n_alpha in gauge_decomp.entries.items():
        c_alpha = casimir.casimir_eigenvalue(ctx_h, e_hw)
        tensor = _tensor_with_mstar(c, e_hw)
        for w_hw in casimir.irreps_with_casimir(ctx_g, c_alpha):
            if casimir.casimir_eigenvalue(ctx_g, w_hw) != c_alpha:
                raise ConsistencyError("Casimir filter returned a non-solution")
            restricted = decompose.branch(
                c.restriction, c.g_data, c.h_data, w_hw
            )
            n = sum(
                u_mult * restricted.mult(u_hw)
                for u_hw, u_mult in tensor.entries.items()
            )
            if n:
                total[w_hw] = total.get(w_hw, 0) + n_alpha * n
    return total


def deformation_space(c, gauge):
    """Instanton deformations of the canonical connection on ``c``.

    ``gauge`` selects the principal bundle: the H-bundle G -> G/H or the
    SU(3)-bundle of the tangent bundle.
    """
    total = _complexified_solutions(c, cosets.gauge_rep(c, gauge))
    for w_hw, mult in total.items():
        if mult % 2:
            raise EvennessViolationError(
                "complexified multiplicity of %r in %s is odd (%d)"
                % (w_hw, c.name, mult)
            )
    complexified = decompose.RepDecomposition(c.g_data, dict(total))
    halved = decompose.RepDecomposition(
        c.g_data, {hw: m // 2 for hw, m in total.items()}
    )
    real_dim = sum(
        m * lie.dimension(c.g_data, hw) for hw, m in halved.entries.items()
    )
    return DeformationSpace(complexified, halved, real_dim)


def abelian_rigidity_check(c):
    """True iff the trivial-charge part of the H-gauge bundle is rigid.

    Runs the generic pipeline on the trivial-weight components of the
    adjoint of H (all of it for an abelian H; vacuously true when there are
    none); the expected result for every coset is an empty solution space.
    """
    gauge_decomp = cosets.gauge_rep(c, cosets.GAUGE_H)
    zero = (0,) * c.h_data.num_coords
    trivial = {
        hw: m for hw, m in gauge_decomp.entries.items() if hw == zero
    }
    if not trivial:
        return True
    solutions = _complexified_solutions(
        c, decompose.RepDecomposition(c.h_data, trivial)
    )
    return not solutions
