"""Code-level model of a framed VOA: Ising fusion, frame code pairs, Miyamoto signs.

Conformal weights are exact multiples of 1/16 and are carried as integer
sixteenths; ``Fraction`` is used only at the boundary.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import product
from typing import Optional, Sequence

from . import codes, gf2
from .codes import LinearCode
from .errors import ConsistencyError
from .gf2 import Gf2Vector


class FusionLabel(enum.IntEnum):
    """Irreducible L(1/2, 0)-modules, valued by conformal weight in sixteenths."""

    ZERO = 0
    SIXTEENTH = 1
    HALF = 8

    @property
    def weight(self) -> Fraction:
        return Fraction(int(self), 16)

    def __str__(self) -> str:
        return str(self.weight)


LABELS = (FusionLabel.ZERO, FusionLabel.HALF, FusionLabel.SIXTEENTH)

_FUSION = {
    (FusionLabel.HALF, FusionLabel.HALF): {FusionLabel.ZERO},
    (FusionLabel.HALF, FusionLabel.SIXTEENTH): {FusionLabel.SIXTEENTH},
    (FusionLabel.SIXTEENTH, FusionLabel.SIXTEENTH): {FusionLabel.ZERO, FusionLabel.HALF},
}


def fuse(a: FusionLabel, b: FusionLabel) -> frozenset:
    if a == FusionLabel.ZERO:
        return frozenset({b})
    if b == FusionLabel.ZERO:
        return frozenset({a})
    key = (a, b) if (a, b) in _FUSION else (b, a)
    return frozenset(_FUSION[key])


def fusion_coefficient(a: FusionLabel, b: FusionLabel, c: FusionLabel) -> int:
    return int(c in fuse(a, b))


def associativity_failures() -> list[tuple]:
    """Triples (a, b, c, d) where (a x b) x c and a x (b x c) disagree at d."""
    bad = []
    for a, b, c, d in product(LABELS, repeat=4):
        left = sum(fusion_coefficient(a, b, x) * fusion_coefficient(x, c, d) for x in LABELS)
        right = sum(fusion_coefficient(b, c, x) * fusion_coefficient(a, x, d) for x in LABELS)
        if left != right:
            bad.append((a, b, c, d))
    return bad


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: dict = field(default_factory=dict)


@dataclass(frozen=True)
class FrameCodePair:
    r: int
    C: LinearCode
    D: LinearCode

    def __post_init__(self):
        if self.C.n != self.r or self.D.n != self.r:
            raise ValueError("code lengths must equal the frame size")


def check_frame_axioms(pair: FrameCodePair) -> list[Check]:
    out = []
    bad = next(((d, c) for d in pair.D.gen.rows for c in pair.C.gen.rows if gf2.dot(c, d)), None)
    out.append(Check("D_in_C_perp", bad is None,
                     {} if bad is None else {"d": gf2.support(bad[0]), "c": gf2.support(bad[1])}))
    # even weights form a subspace, so checking generators suffices
    odd = next((c for c in pair.C.gen.rows if c.bit_count() & 1), None)
    out.append(Check("C_even", odd is None, {} if odd is None else {"c": gf2.support(odd)}))
    bad_d = next((x for x in codes.iter_codeword_bits(pair.D) if x.bit_count() % 8), None)
    out.append(Check("D_weights_divisible_by_8", bad_d is None,
                     {"D_distribution": {str(w): a for w, a in codes.weight_distribution(pair.D).nonzero().items()}}
                     if bad_d is None else {"d": gf2.support(bad_d), "weight": bad_d.bit_count()}))
    return out


def derive_shorter_pair(pair: FrameCodePair, i: int) -> FrameCodePair:
    derived = FrameCodePair(pair.r - 1, codes.shorten(pair.C, i), codes.shorten(pair.D, i))
    failed = [c.name for c in check_frame_axioms(derived) if not c.passed]
    if failed:
        raise ConsistencyError(f"shortened pair fails frame axioms: {', '.join(failed)}")
    return derived


@dataclass(frozen=True)
class SectorLabel:
    """A V(c) sector (kind 'c', c in C) or a V^I sector (kind 'I', I in D)."""

    kind: str
    word: Gf2Vector

    @classmethod
    def of(cls, kind: str, word: Gf2Vector, pair: FrameCodePair) -> "SectorLabel":
        if kind not in ("c", "I"):
            raise ValueError("sector kind is 'c' or 'I'")
        code = pair.C if kind == "c" else pair.D
        if not codes.contains(code, word):
            raise ValueError(f"word is not in the {'C' if kind == 'c' else 'D'} code")
        return cls(kind, word)


def miyamoto_sign(kind: str, i: int, sector: SectorLabel) -> int:
    """tau_i acts on V^I by (-1)^{I_i}; sigma_i acts on V(c) by (-1)^{c_i}."""
    expected = {"tau": "I", "sigma": "c"}.get(kind)
    if expected is None:
        raise ValueError(f"unknown involution type {kind!r}")
    if sector.kind != expected:
        raise ValueError(f"{kind} is defined on {expected}-sectors, got a {sector.kind}-sector")
    return -1 if sector.word[i] else 1


def conformal_weight(h: Sequence[FusionLabel]) -> Fraction:
    return Fraction(sum(int(x) for x in h), 16)


def half_codeword(c: Gf2Vector) -> list[FusionLabel]:
    """The weight vector c/2 of the V(c) sector."""
    return [FusionLabel.HALF if b else FusionLabel.ZERO for b in c.to_list()]


def cited_module() -> list[FusionLabel]:
    """L(1/2, 0^15, 1/2, 0^15, (1/16)^16)."""
    z, h, s = FusionLabel.ZERO, FusionLabel.HALF, FusionLabel.SIXTEENTH
    return [h] + [z] * 15 + [h] + [z] * 15 + [s] * 16


J_Q1 = 196884
VB_Q32 = 4371
VB_Q2 = 96256


@dataclass(frozen=True)
class GriessTable:
    dimensions: tuple[int, ...]
    mu_2e_eigenvalues: tuple[Fraction, ...]
    tau_eigenvalues: tuple[int, ...]
    axis_scalar_tau: Fraction = Fraction(1, 32)
    axis_scalar_sigma: Fraction = Fraction(1, 4)

    @classmethod
    def from_dict(cls, data: dict) -> "GriessTable":
        return cls(
            tuple(int(x) for x in data["dimensions"]),
            tuple(Fraction(x) for x in data["mu_2e_eigenvalues"]),
            tuple(int(x) for x in data["tau_eigenvalues"]),
            Fraction(data.get("axis_scalar_tau", "1/32")),
            Fraction(data.get("axis_scalar_sigma", "1/4")),
        )

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "dimensions": list(self.dimensions),
            "mu_2e_eigenvalues": [str(x) for x in self.mu_2e_eigenvalues],
            "tau_eigenvalues": list(self.tau_eigenvalues),
            "axis_scalar_tau": str(self.axis_scalar_tau),
            "axis_scalar_sigma": str(self.axis_scalar_sigma),
        }


def bundled_griess_table() -> GriessTable:
    text = resources.files("framecert.data").joinpath("griess.json").read_text()
    return GriessTable.from_dict(json.loads(text))


def check_griess_consistency(t: GriessTable) -> list[Check]:
    dims, mu, tau = t.dimensions, t.mu_2e_eigenvalues, t.tau_eigenvalues
    out = []
    if not len(dims) == len(mu) == len(tau):
        return [Check("table_shape", False, {"lengths": [len(dims), len(mu), len(tau)]})]
    out.append(Check("total_dimension", sum(dims) == J_Q1, {"sum": sum(dims), "expected": J_Q1}))
    zero_sum = sum(d for d, e in zip(dims, mu) if e == 0)
    out.append(Check("weight_2_part", zero_sum == VB_Q2, {"sum": zero_sum, "expected": VB_Q2}))
    half = [d for d, e in zip(dims, mu) if e == Fraction(1, 2)]
    out.append(Check("weight_3_2_part", half == [VB_Q32], {"dims": half, "expected": VB_Q32}))
    minus = [j for j, s in enumerate(tau) if s == -1]
    sixteenth = [j for j, e in enumerate(mu) if e == Fraction(1, 16)]
    out.append(Check("tau_minus_on_sixteenth", minus == sixteenth and len(minus) == 1,
                     {"tau_minus": minus, "mu_1_16": sixteenth,
                      "dims": [dims[j] for j in minus]}))
    expected = sorted(Fraction(x) for x in ("2", "0", "0", "1/2", "1/16"))
    out.append(Check("eigenvalue_multiset", sorted(mu) == expected, {"eigenvalues": [str(x) for x in mu]}))
    out.append(Check("axis_scalars", t.axis_scalar_tau == Fraction(1, 32) and t.axis_scalar_sigma == Fraction(1, 4),
                     {"tau": str(t.axis_scalar_tau), "sigma": str(t.axis_scalar_sigma)}))
    return out


def moonshine_pair(matrix: Optional[gf2.Gf2Matrix] = None) -> FrameCodePair:
    D = codes.from_generators(matrix if matrix is not None else codes.moonshine_frame_matrix())
    return FrameCodePair(D.n, codes.dual(D), D)
