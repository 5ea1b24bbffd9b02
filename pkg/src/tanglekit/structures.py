"""Witness-producing axiom predicates and the composite structure checkers.

Ten families of separations are recognised, each defined by a list of
axioms over a declared order bound k:

==============================  =============================================
kind                            axioms (P0, the order <= k membership bound,
                                is checked for every kind)
==============================  =============================================
tangle                          T1 T2 T3
linear_tangle                   T1 T2 LT3
ultrafilter                     F1 F2 F3 F4 F5
single_ultrafilter              F1 F2 F3 F4 SF5
weak_ultrafilter                F1 F2 F3 F4 WF5
profile                         P1 P2 P3a P3b
non_principal_profile           profile + P4
linear_profile                  P1 P2 SP3
non_principal_linear_profile    linear_profile + P4
filter_base                     FB1 FB2
==============================  =============================================

P3a and SP3 exist in two readings selected by ``variant``.  Taken literally,
P3a forbids (A1 cap A2, B1 cup B2) from membership, which already refutes any
non-empty family through the instantiation A1 = A2; the corrected reading
forbids (B1 cap B2, A1 cup A2) instead.  SP3 is analogous (the literal form
is refuted by the forced member (emptyset, X) whenever a k-efficient element
exists).  Both readings are kept; ``corrected`` is the default.

Tangle-side reports carry a T4 entry and ultrafilter-side reports an F6
entry.  These are informational: both properties are consequences of the
axioms rather than axioms themselves, so they never affect the overall pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .connectivity import ConnectivitySystem
from .exceptions import FilterBaseError
from .separations import (
    Separation,
    SeparationFamily,
    efficient_masks,
    make_separation,
)

VARIANTS = ("literal", "corrected")


class AxiomId(str, Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    LT3 = "LT3"
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"
    F6 = "F6"
    SF5 = "SF5"
    WF5 = "WF5"
    CONSISTENT = "CONSISTENT"
    P0 = "P0"
    P1 = "P1"
    P2 = "P2"
    P3A_LITERAL = "P3a_literal"
    P3A_CORRECTED = "P3a_corrected"
    P3B = "P3b"
    P4 = "P4"
    SP3_LITERAL = "SP3_literal"
    SP3_CORRECTED = "SP3_corrected"
    FB1 = "FB1"
    FB2 = "FB2"


class StructureKind(str, Enum):
    TANGLE = "tangle"
    LINEAR_TANGLE = "linear_tangle"
    ULTRAFILTER = "ultrafilter"
    SINGLE_ULTRAFILTER = "single_ultrafilter"
    WEAK_ULTRAFILTER = "weak_ultrafilter"
    PROFILE = "profile"
    NON_PRINCIPAL_PROFILE = "non_principal_profile"
    LINEAR_PROFILE = "linear_profile"
    NON_PRINCIPAL_LINEAR_PROFILE = "non_principal_linear_profile"
    FILTER_BASE = "filter_base"


# kinds that orient separations and can be enumerated by orientation search
ORIENTATION_KINDS = (
    StructureKind.TANGLE,
    StructureKind.LINEAR_TANGLE,
    StructureKind.ULTRAFILTER,
    StructureKind.SINGLE_ULTRAFILTER,
    StructureKind.WEAK_ULTRAFILTER,
    StructureKind.PROFILE,
    StructureKind.NON_PRINCIPAL_PROFILE,
    StructureKind.LINEAR_PROFILE,
    StructureKind.NON_PRINCIPAL_LINEAR_PROFILE,
)

_VARIANT_SLOTS = {
    "P3a": {"literal": AxiomId.P3A_LITERAL, "corrected": AxiomId.P3A_CORRECTED},
    "SP3": {"literal": AxiomId.SP3_LITERAL, "corrected": AxiomId.SP3_CORRECTED},
}

_KIND_AXIOMS = {
    StructureKind.TANGLE: (AxiomId.T1, AxiomId.T2, AxiomId.T3),
    StructureKind.LINEAR_TANGLE: (AxiomId.T1, AxiomId.T2, AxiomId.LT3),
    StructureKind.ULTRAFILTER: (
        AxiomId.F1, AxiomId.F2, AxiomId.F3, AxiomId.F4, AxiomId.F5,
    ),
    StructureKind.SINGLE_ULTRAFILTER: (
        AxiomId.F1, AxiomId.F2, AxiomId.F3, AxiomId.F4, AxiomId.SF5,
    ),
    StructureKind.WEAK_ULTRAFILTER: (
        AxiomId.F1, AxiomId.F2, AxiomId.F3, AxiomId.F4, AxiomId.WF5,
    ),
    StructureKind.PROFILE: (AxiomId.P1, AxiomId.P2, "P3a", AxiomId.P3B),
    StructureKind.NON_PRINCIPAL_PROFILE: (
        AxiomId.P1, AxiomId.P2, "P3a", AxiomId.P3B, AxiomId.P4,
    ),
    StructureKind.LINEAR_PROFILE: (AxiomId.P1, AxiomId.P2, "SP3"),
    StructureKind.NON_PRINCIPAL_LINEAR_PROFILE: (
        AxiomId.P1, AxiomId.P2, "SP3", AxiomId.P4,
    ),
    StructureKind.FILTER_BASE: (AxiomId.FB1, AxiomId.FB2),
}

_DIAGNOSTICS = {
    StructureKind.TANGLE: (AxiomId.T4,),
    StructureKind.LINEAR_TANGLE: (AxiomId.T4,),
    StructureKind.ULTRAFILTER: (AxiomId.F6,),
    StructureKind.SINGLE_ULTRAFILTER: (AxiomId.F6,),
    StructureKind.WEAK_ULTRAFILTER: (AxiomId.F6,),
}


def axiom_ids(kind: StructureKind, variant: str = "corrected") -> tuple[AxiomId, ...]:
    """The concrete axiom list checked for a kind, P0 first."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
    resolved = tuple(
        _VARIANT_SLOTS[a][variant] if not isinstance(a, AxiomId) else a
        for a in _KIND_AXIOMS[StructureKind(kind)]
    )
    return (AxiomId.P0,) + resolved


@dataclass(frozen=True)
class AxiomResult:
    axiom: AxiomId
    passed: bool
    witness: tuple[Separation, ...] = ()
    element: int | None = None

    def __repr__(self):
        state = "pass" if self.passed else f"FAIL witness={list(self.witness)}"
        return f"AxiomResult({self.axiom.value}: {state})"


@dataclass(frozen=True)
class StructureReport:
    kind: StructureKind
    k: int
    variant: str
    results: tuple[AxiomResult, ...]
    passed: bool

    def result(self, axiom: AxiomId) -> AxiomResult:
        for r in self.results:
            if r.axiom is axiom:
                return r
        raise KeyError(axiom)

    def failures(self) -> tuple[AxiomResult, ...]:
        return tuple(r for r in self.results if not r.passed)


class _Ctx:
    """Shared per-check state: member masks plus lazily enumerated universes."""

    def __init__(self, system: ConnectivitySystem, k: int, family: SeparationFamily):
        self.system = system
        self.k = k
        self.masks = family.member_masks
        self.mask_set = set(self.masks)
        self.full = system.full_mask
        self._eff = None
        self._eff_elements = None

    @property
    def eff(self) -> list[int]:
        if self._eff is None:
            self._eff = efficient_masks(self.system, self.k)
        return self._eff

    @property
    def eff_elements(self) -> list[int]:
        if self._eff_elements is None:
            self._eff_elements = [
                e
                for e in range(self.system.n)
                if self.system.evaluate(1 << e) <= self.k
            ]
        return self._eff_elements

    def sep(self, mask: int) -> Separation:
        return make_separation(self.system, mask)


def _ok(axiom):
    return AxiomResult(axiom, True)


def _fail(axiom, ctx, masks, element=None):
    return AxiomResult(axiom, False, tuple(ctx.sep(m) for m in masks), element)


# ---------------------------------------------------------------------------
# individual axiom checks; each is the literal clause with a canonical-order
# scan so the first witness is deterministic


def _check_p0(ctx):
    for m in ctx.masks:
        if ctx.system.evaluate(m) > ctx.k:
            return _fail(AxiomId.P0, ctx, (m,))
    return _ok(AxiomId.P0)


def _check_orientation(axiom, ctx):
    # T1 / F1 / P1: every separation of order <= k has an oriented member
    for m in ctx.eff:
        comp = ctx.full ^ m
        if m > comp:
            continue
        if m not in ctx.mask_set and comp not in ctx.mask_set:
            return _fail(axiom, ctx, (m,))
    return _ok(axiom)


def _check_singletons_in(axiom, ctx):
    # T2 / P4: ({e}, X minus {e}) must be a member for each k-efficient e
    for e in ctx.eff_elements:
        if (1 << e) not in ctx.mask_set:
            return _fail(axiom, ctx, (1 << e,), element=e)
    return _ok(axiom)


def _check_t3(ctx):
    ms = ctx.masks
    for i, a1 in enumerate(ms):
        for j in range(i, len(ms)):
            a12 = a1 | ms[j]
            for l in range(j, len(ms)):
                if a12 | ms[l] == ctx.full:
                    return _fail(AxiomId.T3, ctx, (a1, ms[j], ms[l]))
    return _ok(AxiomId.T3)


def _check_lt3(ctx):
    ms = ctx.masks
    singles = [(e, 1 << e) for e in ctx.eff_elements]
    for i, a1 in enumerate(ms):
        for j in range(i, len(ms)):
            a12 = a1 | ms[j]
            for e, bit in singles:
                if a12 | bit == ctx.full:
                    return _fail(AxiomId.LT3, ctx, (a1, ms[j]), element=e)
    return _ok(AxiomId.LT3)


def _check_t4(ctx):
    # diagnostic: (emptyset, X) is a member whenever it is orientable at all
    if ctx.system.evaluate(0) <= ctx.k and 0 not in ctx.mask_set:
        return _fail(AxiomId.T4, ctx, (0,))
    return _ok(AxiomId.T4)


def _check_f2(ctx):
    if 0 in ctx.mask_set:
        return _fail(AxiomId.F2, ctx, (0,))
    return _ok(AxiomId.F2)


def _check_f3(ctx):
    for e in ctx.eff_elements:
        if (1 << e) in ctx.mask_set:
            return _fail(AxiomId.F3, ctx, (1 << e,), element=e)
    return _ok(AxiomId.F3)


def _check_f4(ctx):
    for a in ctx.masks:
        for c in ctx.eff:
            if a & ~c == 0 and c not in ctx.mask_set:
                return _fail(AxiomId.F4, ctx, (a, c))
    return _ok(AxiomId.F4)


def _check_f5(ctx):
    ms = ctx.masks
    for i, a1 in enumerate(ms):
        for j in range(i, len(ms)):
            meet = a1 & ms[j]
            if ctx.system.evaluate(meet) <= ctx.k and meet not in ctx.mask_set:
                return _fail(AxiomId.F5, ctx, (a1, ms[j], meet))
    return _ok(AxiomId.F5)


def _check_f6(ctx):
    ms = ctx.masks
    for i, a1 in enumerate(ms):
        for j in range(i, len(ms)):
            a12 = a1 & ms[j]
            for l in range(j, len(ms)):
                if a12 & ms[l] == 0:
                    return _fail(AxiomId.F6, ctx, (a1, ms[j], ms[l]))
    return _ok(AxiomId.F6)


def _check_sf5(ctx):
    for a in ctx.masks:
        for e in ctx.eff_elements:
            shrunk = a & ~(1 << e)
            if ctx.system.evaluate(shrunk) <= ctx.k and shrunk not in ctx.mask_set:
                return _fail(AxiomId.SF5, ctx, (a, shrunk), element=e)
    return _ok(AxiomId.SF5)


def _check_wf5(ctx):
    ms = ctx.masks
    for i, a1 in enumerate(ms):
        for j in range(i, len(ms)):
            meet = a1 & ms[j]
            if meet == 0 and ctx.system.evaluate(0) <= ctx.k:
                return _fail(AxiomId.WF5, ctx, (a1, ms[j]))
    return _ok(AxiomId.WF5)


def _check_consistent(ctx):
    # (C, D) <= (A, B) in P implies (D, C) not in P; scan member pairs (A,B),(D,C)
    for a in ctx.masks:
        for d in ctx.masks:
            if (ctx.full ^ d) & ~a == 0:
                return _fail(AxiomId.CONSISTENT, ctx, (a, d))
    return _ok(AxiomId.CONSISTENT)


def _check_p2(ctx):
    for a2 in ctx.masks:
        for a1 in ctx.eff:
            if a1 & ~a2 == 0 and a1 not in ctx.mask_set:
                return _fail(AxiomId.P2, ctx, (a2, a1))
    return _ok(AxiomId.P2)


def _check_p3a_literal(ctx):
    for a1 in ctx.masks:
        for a2 in ctx.masks:
            meet = a1 & a2
            if meet in ctx.mask_set:
                return _fail(AxiomId.P3A_LITERAL, ctx, (a1, a2, meet))
    return _ok(AxiomId.P3A_LITERAL)


def _check_p3a_corrected(ctx):
    for a1 in ctx.masks:
        for a2 in ctx.masks:
            other = ctx.full ^ (a1 | a2)
            if other in ctx.mask_set:
                return _fail(AxiomId.P3A_CORRECTED, ctx, (a1, a2, other))
    return _ok(AxiomId.P3A_CORRECTED)


def _check_p3b(ctx):
    ms = ctx.masks
    for i, a1 in enumerate(ms):
        for j in range(i, len(ms)):
            join = a1 | ms[j]
            if ctx.system.evaluate(join) <= ctx.k and join not in ctx.mask_set:
                return _fail(AxiomId.P3B, ctx, (a1, ms[j], join))
    return _ok(AxiomId.P3B)


def _check_sp3_literal(ctx):
    for a in ctx.masks:
        for e in ctx.eff_elements:
            shrunk = a & ~(1 << e)
            if shrunk in ctx.mask_set:
                return _fail(AxiomId.SP3_LITERAL, ctx, (a, shrunk), element=e)
    return _ok(AxiomId.SP3_LITERAL)


def _check_sp3_corrected(ctx):
    for a in ctx.masks:
        for e in ctx.eff_elements:
            other = ctx.full ^ (a | (1 << e))
            if other in ctx.mask_set:
                return _fail(AxiomId.SP3_CORRECTED, ctx, (a, other), element=e)
    return _ok(AxiomId.SP3_CORRECTED)


def _check_fb1(ctx):
    if not ctx.masks:
        return AxiomResult(AxiomId.FB1, False)
    return _ok(AxiomId.FB1)


def _check_fb2(ctx):
    ms = ctx.masks
    for i, a1 in enumerate(ms):
        for j in range(i, len(ms)):
            meet = a1 & ms[j]
            found = any(
                a3 & ~meet == 0 and ctx.system.evaluate(a3) <= ctx.k for a3 in ms
            )
            if not found:
                return _fail(AxiomId.FB2, ctx, (a1, ms[j]))
    return _ok(AxiomId.FB2)


_CHECKS = {
    AxiomId.P0: _check_p0,
    AxiomId.T1: lambda ctx: _check_orientation(AxiomId.T1, ctx),
    AxiomId.F1: lambda ctx: _check_orientation(AxiomId.F1, ctx),
    AxiomId.P1: lambda ctx: _check_orientation(AxiomId.P1, ctx),
    AxiomId.T2: lambda ctx: _check_singletons_in(AxiomId.T2, ctx),
    AxiomId.P4: lambda ctx: _check_singletons_in(AxiomId.P4, ctx),
    AxiomId.T3: _check_t3,
    AxiomId.T4: _check_t4,
    AxiomId.LT3: _check_lt3,
    AxiomId.F2: _check_f2,
    AxiomId.F3: _check_f3,
    AxiomId.F4: _check_f4,
    AxiomId.F5: _check_f5,
    AxiomId.F6: _check_f6,
    AxiomId.SF5: _check_sf5,
    AxiomId.WF5: _check_wf5,
    AxiomId.CONSISTENT: _check_consistent,
    AxiomId.P2: _check_p2,
    AxiomId.P3A_LITERAL: _check_p3a_literal,
    AxiomId.P3A_CORRECTED: _check_p3a_corrected,
    AxiomId.P3B: _check_p3b,
    AxiomId.SP3_LITERAL: _check_sp3_literal,
    AxiomId.SP3_CORRECTED: _check_sp3_corrected,
    AxiomId.FB1: _check_fb1,
    AxiomId.FB2: _check_fb2,
}


def _validate(system, k, family):
    if family.system is not system:
        raise ValueError("family belongs to a different system")
    if k < 0:
        raise ValueError("k must be non-negative")


def check_axiom(
    system: ConnectivitySystem, k: int, family: SeparationFamily, axiom: AxiomId
) -> AxiomResult:
    """Evaluate one axiom clause literally, reporting the first failing witness.

    Witnesses follow the canonical scan order: members ascending by first-side
    mask, elements ascending, enumerated separations ascending.  A member
    whose order exceeds k is a P0 failure, never an exception.
    """
    _validate(system, k, family)
    return _CHECKS[AxiomId(axiom)](_Ctx(system, k, family))


def check_structure(
    system: ConnectivitySystem,
    k: int,
    family: SeparationFamily,
    kind: StructureKind,
    variant: str = "corrected",
) -> StructureReport:
    """Run every axiom of the kind plus the order bound P0.

    Axioms that quantify over all k-efficient separations need n <= 16.
    Informational entries (T4 on tangle kinds, F6 on ultrafilter kinds) are
    appended to the report but never affect the overall pass.
    """
    _validate(system, k, family)
    kind = StructureKind(kind)
    ctx = _Ctx(system, k, family)
    required = axiom_ids(kind, variant)
    results = [_CHECKS[a](ctx) for a in required]
    passed = all(r.passed for r in results)
    for extra in _DIAGNOSTICS.get(kind, ()):
        results.append(_CHECKS[extra](ctx))
    return StructureReport(kind, k, variant, tuple(results), passed)


def check_filter_base_generates(
    system: ConnectivitySystem, k: int, base: SeparationFamily
) -> SeparationFamily:
    """Upward closure of a filter base among separations of order <= k.

    The base must pass FB1 and FB2; the closure contains every k-efficient
    separation lying above some base member, so it satisfies F4 by
    construction.
    """
    _validate(system, k, base)
    for axiom in (AxiomId.FB1, AxiomId.FB2):
        result = _CHECKS[axiom](_Ctx(system, k, base))
        if not result.passed:
            raise FilterBaseError(
                f"family is not a filter base: {axiom.value} fails", result
            )
    base_masks = base.member_masks
    closure = [
        c
        for c in efficient_masks(system, k)
        if any(b & ~c == 0 for b in base_masks)
    ]
    return SeparationFamily.from_masks(system, k, closure)
