import itertools
from fractions import Fraction as F

import pytest

from nkdeform import casimir, lie
from nkdeform.errors import NonDominantWeightError, UnknownTagError


def test_fundamental_weight_gram_matrices():
    assert casimir.bilinear_form("su3-in-g2").gram == (
        (F(-1), F(-1, 2)),
        (F(-1, 2), F(-1)),
    )
    assert casimir.bilinear_form("g2").gram == (
        (F(-1), F(-3, 2)),
        (F(-3, 2), F(-3)),
    )
    assert casimir.bilinear_form("sp2").gram == ((F(-2), F(-1)), (F(-1), F(-1)))
    assert casimir.bilinear_form("su3-ambient").gram == (
        (F(-4, 3), F(-2, 3)),
        (F(-2, 3), F(-4, 3)),
    )


def test_unknown_tag():
    with pytest.raises(UnknownTagError):
        casimir.bilinear_form("so5")


def test_negative_definiteness_minors():
    for tag in casimir.PAIR_TAGS:
        from nkdeform import ratlinalg

        gram = [list(r) for r in casimir.bilinear_form(tag).gram]
        for k, minor in enumerate(ratlinalg.leading_principal_minors(gram)):
            assert minor != 0
            assert (minor > 0) == (k % 2 == 1)


def test_trace_recomputation_matches_stored_forms():
    # Raises ConsistencyError internally on any disagreement.
    for tag in casimir.PAIR_TAGS:
        casimir.verify_form_by_trace(tag)


def test_trace_recomputation_generator_basis_values():
    assert casimir.verify_form_by_trace("su3-in-g2").gram == (
        (F(-4, 3), F(2, 3)),
        (F(2, 3), F(-4, 3)),
    )
    assert casimir.verify_form_by_trace("g2").gram == (
        (F(-4), F(2)),
        (F(2), F(-4, 3)),
    )
    assert casimir.verify_form_by_trace("sp2").gram == ((F(-1), F(1)), (F(1), F(-2)))
    assert casimir.verify_form_by_trace("su3-ambient").gram == (
        (F(-1), F(1, 2)),
        (F(1, 2), F(-1)),
    )
    # Compact real bases: B is positive there.
    assert casimir.verify_form_by_trace("su2-diagonal-in-su2cubed").gram == (
        (F(1, 2),),
    )
    assert casimir.verify_form_by_trace("sp1u1-in-sp2").gram == (
        (F(1), F(0)),
        (F(0), F(1)),
    )
    assert casimir.verify_form_by_trace("u1u1-in-su3").gram == (
        (F(1), F(-1, 2)),
        (F(-1, 2), F(1)),
    )
    g = casimir.verify_form_by_trace("su2cubed").gram
    assert g == tuple(
        tuple(F(1, 6) if i == j else F(0) for j in range(3)) for i in range(3)
    )


CASIMIR_EXAMPLES = [
    ("g2", (1, 0), F(-6)),
    ("g2", (0, 1), F(-12)),
    ("g2", (0, 0), F(0)),
    ("sp2", (1, 1), F(-15)),
    ("sp2", (0, 1), F(-5)),
    ("su2cubed", (1, 1, 1), F(-27, 2)),
    ("u1u1-in-su3", (3, 0), F(-12)),
    ("su3-in-g2", (1, 1), F(-9)),
    ("su3-in-g2", (1, 0), F(-4)),
    ("sp1u1-in-sp2", (2, 0), F(-8)),
    ("sp1u1-in-sp2", (1, 3), F(-12)),
    ("sp1u1-in-sp2", (1, -3), F(-12)),
    ("su2-diagonal-in-su2cubed", (2,), F(-4)),
    ("su2-diagonal-in-su2cubed", (4,), F(-12)),
]


@pytest.mark.parametrize("tag,hw,expected", CASIMIR_EXAMPLES)
def test_casimir_eigenvalue_examples(tag, hw, expected):
    assert casimir.casimir_eigenvalue(casimir.context(tag), hw) == expected


def test_casimir_closed_forms_on_sweep():
    closed = {
        "g2": lambda m: -(
            m[0] ** 2 + 3 * m[1] ** 2 + 3 * m[0] * m[1] + 5 * m[0] + 9 * m[1]
        ),
        "su3-in-g2": lambda m: -(
            m[0] ** 2 + m[1] ** 2 + m[0] * m[1] + 3 * m[0] + 3 * m[1]
        ),
        "su3-ambient": lambda m: F(-4, 3)
        * (m[0] ** 2 + m[1] ** 2 + m[0] * m[1] + 3 * m[0] + 3 * m[1]),
        "sp2": lambda m: -(
            2 * m[0] ** 2 + 2 * m[0] * m[1] + m[1] ** 2 + 6 * m[0] + 4 * m[1]
        ),
        "su2cubed": lambda m: F(-3, 2) * sum(a * (a + 2) for a in m),
        "sp1u1-in-sp2": lambda m: -m[0] * (m[0] + 2) - m[1] ** 2,
        "u1u1-in-su3": lambda m: F(-4, 3)
        * (m[0] ** 2 + m[0] * m[1] + m[1] ** 2),
    }
    for tag, formula in closed.items():
        ctx = casimir.context(tag)
        n = ctx.root_data.num_coords
        simple = set(ctx.root_data.simple_coords)
        ranges = [
            range(0, 6) if i in simple else range(-5, 6) for i in range(n)
        ]
        for hw in itertools.product(*ranges):
            assert casimir.casimir_eigenvalue(ctx, hw) == formula(hw), (tag, hw)


def test_trivial_rep_has_zero_casimir_and_others_negative():
    for tag in casimir.PAIR_TAGS:
        ctx = casimir.context(tag)
        zero = (0,) * ctx.root_data.num_coords
        assert casimir.casimir_eigenvalue(ctx, zero) == 0
        for hw in lie.dominant_weights_in_box(ctx.root_data, 3):
            if hw != zero:
                assert casimir.casimir_eigenvalue(ctx, hw) < 0, (tag, hw)


def test_monotonicity_on_grid():
    # -Cas grows in every coordinate on the nonnegative grid, and in |charge|
    # for contexts whose charge block is diagonal.
    for tag in casimir.PAIR_TAGS:
        ctx = casimir.context(tag)
        n = ctx.root_data.num_coords
        for hw in itertools.product(range(4), repeat=n):
            base = -casimir.casimir_eigenvalue(ctx, hw)
            for i in range(n):
                bumped = list(hw)
                bumped[i] += 1
                assert -casimir.casimir_eigenvalue(ctx, tuple(bumped)) > base
    ctx = casimir.context("sp1u1-in-sp2")
    for m in range(4):
        for c in range(0, 5):
            low = -casimir.casimir_eigenvalue(ctx, (m, c))
            assert -casimir.casimir_eigenvalue(ctx, (m, c + 1)) > low
            assert -casimir.casimir_eigenvalue(ctx, (m, -c - 1)) > low


def test_irreps_with_casimir_examples():
    assert casimir.irreps_with_casimir(casimir.context("sp2"), -8) == [(1, 0)]
    assert casimir.irreps_with_casimir(casimir.context("su2cubed"), -4) == []
    assert casimir.irreps_with_casimir(casimir.context("su3-ambient"), -12) == [
        (1, 1)
    ]
    assert casimir.irreps_with_casimir(casimir.context("g2"), -9) == []
    assert casimir.irreps_with_casimir(casimir.context("g2"), 5) == []


def test_irreps_with_casimir_completeness_against_box():
    # Brute-force check inside a generous box for a spread of values.
    for tag in ("g2", "sp2", "su2cubed", "su3-ambient", "u1u1-in-su3"):
        ctx = casimir.context(tag)
        box = lie.dominant_weights_in_box(ctx.root_data, 6)
        for value in range(0, -31, -1):
            brute = sorted(
                w
                for w in box
                if casimir.casimir_eigenvalue(ctx, w) == value
            )
            fast = casimir.irreps_with_casimir(ctx, value)
            assert [w for w in fast if w in set(box)] == brute, (tag, value)
            # fast result must contain everything brute finds
            assert set(brute) <= set(fast)


def test_smallest_g2_eigenvalues():
    ctx = casimir.context("g2")
    values = sorted(
        {
            casimir.casimir_eigenvalue(ctx, hw)
            for hw in lie.dominant_weights_in_box(ctx.root_data, 4)
        },
        reverse=True,
    )
    assert values[:3] == [F(0), F(-6), F(-12)]


def test_non_dominant_rejected():
    with pytest.raises(NonDominantWeightError):
        casimir.casimir_eigenvalue(casimir.context("g2"), (0, -1))
