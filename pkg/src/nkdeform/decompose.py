"""Tensor products, branching and highest-weight peel-off.

Every decomposition is obtained from exact character arithmetic: multiply or
restrict weight multisets, then repeatedly strip the character of the
irreducible generated by a maximal-height remaining weight.  Dimension
conservation is asserted on every tensor product and branching; the peel-off
raises :class:`NotACharacterError` if the input multiset is not Weyl-closed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import lie
from .errors import ConsistencyError, MalformedEmbeddingError, NotACharacterError


@dataclass
class RepDecomposition:
    """Multiset of dominant highest weights with multiplicities."""

    root_data: lie.RootData
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        for hw, mult in self.entries.items():
            self.root_data.require_dominant(hw)
            if mult < 1:
                raise ValueError("multiplicity must be >= 1, got %d" % mult)

    def dimension(self):
        return sum(
            mult * lie.dimension(self.root_data, hw)
            for hw, mult in self.entries.items()
        )

    def sorted_items(self):
        return sorted(self.entries.items())

    def mult(self, hw):
        return self.entries.get(tuple(hw), 0)

    def character(self):
        """Re-expanded weight character of the whole decomposition."""
        char = {}
        for hw, mult in self.entries.items():
            for w, m in lie.weight_multiplicities(self.root_data, hw).weights.items():
                char[w] = char.get(w, 0) + mult * m
        return lie.WeightCharacter(self.root_data, char)

    def scaled(self, k):
        return RepDecomposition(
            self.root_data, {hw: k * m for hw, m in self.entries.items()}
        )

    def merged_with(self, other):
        if other.root_data != self.root_data:
            raise ValueError("cannot merge decompositions over different algebras")
        out = dict(self.entries)
        for hw, m in other.entries.items():
            out[hw] = out.get(hw, 0) + m
        return RepDecomposition(self.root_data, out)

    def __eq__(self, other):
        return (
            isinstance(other, RepDecomposition)
            and self.root_data == other.root_data
            and self.entries == other.entries
        )

    def __str__(self):
        if not self.entries:
            return "0"
        parts = []
        for hw, mult in self.sorted_items():
            label = "V(%s)" % ",".join(str(c) for c in hw)
            parts.append(label if mult == 1 else "%d %s" % (mult, label))
        return " + ".join(parts)


@dataclass(frozen=True)
class RestrictionMap:
    """Linear map of weight lattices in fundamental-weight coordinates.

    ``matrix`` rows are indexed by target (subalgebra) coordinates.  Images
    of integral weights must be integral; a non-integral image signals a
    wrongly transcribed embedding.
    """

    matrix: tuple

    def apply(self, w):
        out = []
        for row in self.matrix:
            v = sum(Fraction(a) * c for a, c in zip(row, w))
            if v.denominator != 1:
                raise MalformedEmbeddingError(
                    "weight %r restricts to non-integral coordinate %s" % (w, v)
                )
            out.append(int(v))
        return tuple(out)


def peel_off(char):
    """Decompose a genuine character into irreducibles.

    Selection rule: maximal height (sum of simple-root coordinates), ties
    broken by picking the lexicographically largest weight.  The selected
    weight must be dominant and subtraction of its full irreducible
    character must never drive a multiplicity negative; otherwise the input
    was not a character.
    """
    rd = char.root_data
    remaining = {w: m for w, m in char.weights.items() if m != 0}
    if any(m < 0 for m in remaining.values()):
        raise NotACharacterError("negative multiplicity in input multiset")
    entries = {}
    while remaining:
        top = max(remaining, key=lambda w: (rd.height(w), w))
        if not rd.is_dominant(top):
            raise NotACharacterError(
                "maximal-height weight %r is not dominant" % (top,)
            )
        mult = remaining[top]
        for w, m in lie.weight_multiplicities(rd, top).weights.items():
            new = remaining.get(w, 0) - mult * m
            if new < 0:
                raise NotACharacterError(
                    "subtracting %d x V%r drives weight %r negative"
                    % (mult, top, w)
                )
            if new:
                remaining[w] = new
            else:
                remaining.pop(w, None)
        entries[top] = entries.get(top, 0) + mult
    return RepDecomposition(rd, entries)


def tensor_decompose(root_data, hw1, hw2):
    """Irreducible decomposition of the tensor product of two irreducibles."""
    root_data.require_dominant(hw1)
    root_data.require_dominant(hw2)
    c1 = lie.weight_multiplicities(root_data, hw1)
    c2 = lie.weight_multiplicities(root_data, hw2)
    prod = {}
    for w1, m1 in c1.weights.items():
        for w2, m2 in c2.weights.items():
            w = tuple(a + b for a, b in zip(w1, w2))
            prod[w] = prod.get(w, 0) + m1 * m2
    result = peel_off(lie.WeightCharacter(root_data, prod))
    expected = lie.dimension(root_data, hw1) * lie.dimension(root_data, hw2)
    if result.dimension() != expected:
        raise ConsistencyError(
            "tensor product dimension %d != %d" % (result.dimension(), expected)
        )
    return result


def restrict_character(rmap, char, target_data):
    """Push a character through a restriction map, weight by weight."""
    out = {}
    for w, m in char.weights.items():
        v = rmap.apply(w)
        out[v] = out.get(v, 0) + m
    return lie.WeightCharacter(target_data, out)


def branch(rmap, g_data, h_data, hw):
    """Decomposition of a G-irreducible restricted to H along ``rmap``."""
    g_data.require_dominant(hw)
    char = lie.weight_multiplicities(g_data, hw)
    result = peel_off(restrict_character(rmap, char, h_data))
    expected = lie.dimension(g_data, hw)
    if result.dimension() != expected:
        raise ConsistencyError(
            "branching dimension %d != %d" % (result.dimension(), expected)
        )
    return result
