"""Fixtures for the four homogeneous nearly Kahler six-manifolds.

Each descriptor bundles the isometry algebra g, the isotropy algebra h, the
restriction map between their weight lattices, the two normalized invariant
forms, and the h-decomposition of the complexified cotangent representation
m* together with its (1,0)-part V.  All of it is validated on construction:

* dim m* = 6, dim V = 3, and m* = V + conj(V);
* every irreducible component of m* has h-Casimir eigenvalue -4 (the Ricci
  curvature of the canonical connection is 4x the metric);
* branching the adjoint of g along the restriction map reproduces the
  adjoint of h plus m*.

The restriction maps were derived once by hand from explicit Cartan bases
of the embeddings h in g and are frozen here; the adjoint-branching
invariant guards against transcription errors.

Descriptors can also be serialized to / loaded from JSON with all rationals
as exact numerator/denominator pairs (see :func:`load_fixtures`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import casimir, decompose, lie
from .errors import FixtureError, UnknownTagError

GAUGE_H = "H"
GAUGE_SU3 = "SU3"
GAUGE_GROUPS = (GAUGE_H, GAUGE_SU3)


@dataclass(frozen=True)
class CosetDescriptor:
    name: str
    g_data: lie.RootData
    h_data: lie.RootData
    restriction: decompose.RestrictionMap
    b_g_pair: str
    b_h_pair: str
    mstar: decompose.RepDecomposition
    mstar_holomorphic: decompose.RepDecomposition
    g_adjoint: decompose.RepDecomposition
    h_adjoint: decompose.RepDecomposition

    @property
    def form_g(self):
        return casimir.bilinear_form(self.b_g_pair)

    @property
    def form_h(self):
        return casimir.bilinear_form(self.b_h_pair)

    @property
    def context_g(self):
        return casimir.context(self.b_g_pair)

    @property
    def context_h(self):
        return casimir.context(self.b_h_pair)

    def validate(self):
        if self.mstar.dimension() != 6:
            raise FixtureError("%s: dim m* = %d" % (self.name, self.mstar.dimension()))
        if self.mstar_holomorphic.dimension() != 3:
            raise FixtureError(
                "%s: dim V = %d" % (self.name, self.mstar_holomorphic.dimension())
            )
        conj = {}
        for hw, mult in self.mstar_holomorphic.entries.items():
            neg = self.h_data.dominant_representative(tuple(-c for c in hw))
            conj[neg] = conj.get(neg, 0) + mult
        both = dict(self.mstar_holomorphic.entries)
        for hw, mult in conj.items():
            both[hw] = both.get(hw, 0) + mult
        if both != self.mstar.entries:
            raise FixtureError(
                "%s: m* is not V + conj(V): %s vs %s"
                % (self.name, both, self.mstar.entries)
            )
        ctx = self.context_h
        for hw in self.mstar.entries:
            value = casimir.casimir_eigenvalue(ctx, hw)
            if value != -4:
                raise FixtureError(
                    "%s: m* component %r has Casimir %s, expected -4"
                    % (self.name, hw, value)
                )
        restricted = decompose.RepDecomposition(self.h_data)
        for hw, mult in self.g_adjoint.entries.items():
            restricted = restricted.merged_with(
                decompose.branch(
                    self.restriction, self.g_data, self.h_data, hw
                ).scaled(mult)
            )
        remainder = dict(restricted.entries)
        for hw, mult in self.h_adjoint.entries.items():
            remainder[hw] = remainder.get(hw, 0) - mult
            if remainder[hw] == 0:
                del remainder[hw]
        if remainder != self.mstar.entries:
            raise FixtureError(
                "%s: branch(adjoint g) - adjoint h = %s, expected m* = %s"
                % (self.name, remainder, self.mstar.entries)
            )
        return self


def _decomp(root_data, pairs):
    return decompose.RepDecomposition(
        root_data, {tuple(hw): mult for hw, mult in pairs}
    )


def _build_g2su3():
    h = lie.A2
    return CosetDescriptor(
        name="G2/SU(3)",
        g_data=lie.G2,
        h_data=h,
        restriction=decompose.RestrictionMap(((1, 1), (0, 1))),
        b_g_pair="g2",
        b_h_pair="su3-in-g2",
        mstar=_decomp(h, [((1, 0), 1), ((0, 1), 1)]),
        mstar_holomorphic=_decomp(h, [((1, 0), 1)]),
        g_adjoint=_decomp(lie.G2, [((0, 1), 1)]),
        h_adjoint=_decomp(h, [((1, 1), 1)]),
    )


def _build_su2cubed():
    h = lie.A1
    return CosetDescriptor(
        name="SU(2)^3/SU(2)",
        g_data=lie.A1_CUBED,
        h_data=h,
        restriction=decompose.RestrictionMap(((1, 1, 1),)),
        b_g_pair="su2cubed",
        b_h_pair="su2-diagonal-in-su2cubed",
        mstar=_decomp(h, [((2,), 2)]),
        mstar_holomorphic=_decomp(h, [((2,), 1)]),
        g_adjoint=_decomp(
            lie.A1_CUBED, [((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), 1)]
        ),
        h_adjoint=_decomp(h, [((2,), 1)]),
    )


def _build_sp2():
    h = lie.A1_U1
    return CosetDescriptor(
        name="Sp(2)/Sp(1)xU(1)",
        g_data=lie.C2,
        h_data=h,
        restriction=decompose.RestrictionMap(((1, 1), (1, 0))),
        b_g_pair="sp2",
        b_h_pair="sp1u1-in-sp2",
        mstar=_decomp(
            h, [((1, 1), 1), ((1, -1), 1), ((0, 2), 1), ((0, -2), 1)]
        ),
        mstar_holomorphic=_decomp(h, [((1, 1), 1), ((0, -2), 1)]),
        g_adjoint=_decomp(lie.C2, [((0, 2), 1)]),
        h_adjoint=_decomp(h, [((2, 0), 1), ((0, 0), 1)]),
    )


def _build_su3t2():
    h = lie.U1_U1
    return CosetDescriptor(
        name="SU(3)/U(1)^2",
        g_data=lie.A2,
        h_data=h,
        restriction=decompose.RestrictionMap(((1, 0), (0, 1))),
        b_g_pair="su3-ambient",
        b_h_pair="u1u1-in-su3",
        mstar=_decomp(
            h,
            [
                ((2, -1), 1),
                ((-1, 2), 1),
                ((-1, -1), 1),
                ((-2, 1), 1),
                ((1, -2), 1),
                ((1, 1), 1),
            ],
        ),
        mstar_holomorphic=_decomp(
            h, [((2, -1), 1), ((-1, 2), 1), ((-1, -1), 1)]
        ),
        g_adjoint=_decomp(lie.A2, [((1, 1), 1)]),
        h_adjoint=_decomp(h, [((0, 0), 2)]),
    )


_BUILDERS = {
    "G2/SU(3)": _build_g2su3,
    "SU(2)^3/SU(2)": _build_su2cubed,
    "Sp(2)/Sp(1)xU(1)": _build_sp2,
    "SU(3)/U(1)^2": _build_su3t2,
}

COSET_NAMES = tuple(_BUILDERS)

ALIASES = {
    "g2su3": "G2/SU(3)",
    "su2cubed": "SU(2)^3/SU(2)",
    "sp2": "Sp(2)/Sp(1)xU(1)",
    "su3t2": "SU(3)/U(1)^2",
}


def canonical_name(name):
    if name in _BUILDERS:
        return name
    if name in ALIASES:
        return ALIASES[name]
    raise UnknownTagError(
        "unknown coset %r (known: %s and aliases %s)"
        % (name, ", ".join(COSET_NAMES), ", ".join(sorted(ALIASES)))
    )


@lru_cache(maxsize=None)
def coset(name):
    """The validated descriptor for one of the four cosets."""
    return _BUILDERS[canonical_name(name)]().validate()


@lru_cache(maxsize=None)
def _gauge_su3(name):
    c = coset(name)
    holo = c.mstar_holomorphic
    total = decompose.RepDecomposition(c.h_data)
    for hw1, m1 in holo.entries.items():
        for hw2, m2 in holo.entries.items():
            dual = c.h_data.dominant_representative(tuple(-x for x in hw2))
            total = total.merged_with(
                decompose.tensor_decompose(c.h_data, hw1, dual).scaled(m1 * m2)
            )
    zero = (0,) * c.h_data.num_coords
    entries = dict(total.entries)
    if entries.get(zero, 0) < 1:
        raise FixtureError("%s: V x V* contains no trivial summand" % name)
    entries[zero] -= 1
    if entries[zero] == 0:
        del entries[zero]
    result = decompose.RepDecomposition(c.h_data, entries)
    if result.dimension() != 8:
        raise FixtureError(
            "%s: gauge su(3) has dimension %d" % (name, result.dimension())
        )
    return result


def gauge_rep(c, gauge):
    """H-decomposition of the complexified gauge representation.

    ``H``: the adjoint of the structure group of the principal bundle
    G -> G/H (for abelian factors: trivial charges).  ``SU3``: the su(3) of
    the tangent-bundle structure group, built as V (x) V* minus one trivial
    summand where V is the (1,0)-part of m*.
    """
    if gauge == GAUGE_H:
        return decompose.RepDecomposition(c.h_data, dict(c.h_adjoint.entries))
    if gauge == GAUGE_SU3:
        cached = _gauge_su3(c.name)
        return decompose.RepDecomposition(c.h_data, dict(cached.entries))
    raise UnknownTagError("gauge must be one of %s" % (GAUGE_GROUPS,))


# ---------------------------------------------------------------------------
# JSON fixture schema


FIXTURE_SCHEMA = "nk-coset-fixtures-v1"


def _frac_json(x):
    f = Fraction(x)
    return {"num": f.numerator, "den": f.denominator}


def _frac_load(obj):
    return Fraction(obj["num"], obj["den"])


def _decomp_json(d):
    return [
        {"hw": list(hw), "mult": mult} for hw, mult in d.sorted_items()
    ]


def _decomp_load(root_data, items):
    return decompose.RepDecomposition(
        root_data, {tuple(e["hw"]): e["mult"] for e in items}
    )


def descriptor_to_dict(c):
    return {
        "name": c.name,
        "G": {"factors": list(c.g_data.factors)},
        "H": {"factors": list(c.h_data.factors)},
        "restriction": [[_frac_json(x) for x in row] for row in c.restriction.matrix],
        "B_G": {"pair": c.b_g_pair},
        "B_H": {"pair": c.b_h_pair},
        "mstar": _decomp_json(c.mstar),
        "mstar_holomorphic": _decomp_json(c.mstar_holomorphic),
        "g_adjoint": _decomp_json(c.g_adjoint),
        "h_adjoint": _decomp_json(c.h_adjoint),
    }


def descriptor_from_dict(obj):
    g_data = lie.RootData(tuple(obj["G"]["factors"]))
    h_data = lie.RootData(tuple(obj["H"]["factors"]))
    matrix = tuple(
        tuple(_frac_load(x) for x in row) for row in obj["restriction"]
    )
    return CosetDescriptor(
        name=obj["name"],
        g_data=g_data,
        h_data=h_data,
        restriction=decompose.RestrictionMap(matrix),
        b_g_pair=obj["B_G"]["pair"],
        b_h_pair=obj["B_H"]["pair"],
        mstar=_decomp_load(h_data, obj["mstar"]),
        mstar_holomorphic=_decomp_load(h_data, obj["mstar_holomorphic"]),
        g_adjoint=_decomp_load(g_data, obj["g_adjoint"]),
        h_adjoint=_decomp_load(h_data, obj["h_adjoint"]),
    ).validate()


def dump_fixtures():
    """The embedded fixtures in the external JSON schema (deterministic)."""
    return json.dumps(
        {
            "schema": FIXTURE_SCHEMA,
            "cosets": [descriptor_to_dict(coset(n)) for n in COSET_NAMES],
        },
        sort_keys=True,
        indent=2,
    )


def load_fixtures(path):
    """Load and validate coset descriptors from a JSON fixture file.

    Returns a dict mapping canonical coset names to descriptors.  Every
    descriptor passes the full construction invariants; corrupt data raises
    :class:`FixtureError`.
    """
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("schema") != FIXTURE_SCHEMA:
        raise FixtureError(
            "unsupported fixture schema %r" % (data.get("schema"),)
        )
    return {
        obj["name"]: descriptor_from_dict(obj) for obj in data["cosets"]
    }
