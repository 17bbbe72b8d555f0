"""Saturation chains of Borel-type monomial modules and the four degree functions.

For a Borel-type monomial submodule U of F the quotient F/U is sequentially
Cohen-Macaulay, and every degree function is determined by the vector

    lambda_i = deg Ext^{n-i}_S(F/U, omega_S),   i = 0..n,

which the saturation chain computes as lengths of finite monomial quotients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import MathAssertionError, NotBorelTypeError, StructureError, TheoremViolation
from .monomial import (
    MonomialSubmodule,
    borel_type_failure,
    colon_variable_power,
    dimension_and_degree,
    hilbert_series,
    length_of_quotient,
    quotient_by_last_variable,
    restrict_variables,
    saturate,
)
from .poly import ModuleElement

BOREL = "borel-monomial"
VIA_GIN = "via-gin"
USER_EXT = "user-ext-data"

SEQ_CM = "seq-cm"
BUCHSBAUM = "buchsbaum"
FINITE_LENGTH = "finite-length"


@dataclass(frozen=True)
class ChainStage:
    index: int
    U: MonomialSubmodule  # U_i, over S
    V: MonomialSubmodule  # U_i's generators over K[x_1..x_{n-i}]
    V_sat: MonomialSubmodule
    length: int


@dataclass(frozen=True)
class SaturationChain:
    source: MonomialSubmodule
    stages: tuple

    @property
    def lengths(self):
        return tuple(s.length for s in self.stages)


def _stage_saturation(V, fast):
    keep = V.n
    if keep == 0:
        return MonomialSubmodule.full(V.ring, V.shape)
    if fast:
        return colon_variable_power(V, keep - 1)
    return saturate(V)


def saturation_chain(U: MonomialSubmodule, check=True, verify=False) -> SaturationChain:
    """U_0 = U, U_i = U_{i-1} : x_{n-i+1}^inf, lambda_i = l(V_i^sat / V_i).

    ``check`` tests the Borel-type hypothesis first.  ``verify`` recomputes
    every V_i^sat by intersecting all variable saturations and compares it with
    the single colon used by default.
    """
    if check:
        bad = borel_type_failure(U)
        if bad is not None:
            raise NotBorelTypeError(bad)
    n = U.n
    stages = []
    Ui = U
    for i in range(n + 1):
        if i > 0:
            Ui = colon_variable_power(Ui, n - i)
        V = restrict_variables(Ui, n - i)
        V_sat = _stage_saturation(V, fast=True)
        if verify and V_sat != _stage_saturation(V, fast=False):
            raise MathAssertionError(f"fast saturation disagrees with the generic one at stage {i}")
        stages.append(ChainStage(i, Ui, V, V_sat, length_of_quotient(V_sat, V)))
    return SaturationChain(U, tuple(stages))


def ext_degrees(chain: SaturationChain) -> tuple:
    """(lambda_0, ..., lambda_n); entry i is deg Ext^{n-i}(F/U, omega_S)."""
    return chain.lengths


@dataclass(frozen=True)
class DegreeReport:
    dim: int
    deg: int | None
    adeg: int | None
    sdeg: int | None
    hdeg: int | None
    depth_positive: bool | None
    structure: str
    ext_degrees: tuple = ()
    disclaimers: tuple = field(default=())

    def to_json(self):
        return {
            "dim": self.dim,
            "deg": self.deg,
            "adeg": self.adeg,
            "sdeg": self.sdeg,
            "hdeg": self.hdeg,
            "structure": self.structure,
            "ext_degrees": list(self.ext_degrees),
            "disclaimers": list(self.disclaimers),
        }


def hdeg_formula(deg, d, lam):
    return deg + sum(comb(d - 1, i) * lam[i] for i in range(d))


def _report_from_chain(U, chain, structure, disclaimers=()) -> DegreeReport:
    dim, deg, is_zero = dimension_and_degree(hilbert_series(U))
    lam = ext_degrees(chain)
    if is_zero:
        return DegreeReport(-1, 0, 0, 0, 0, None, structure, lam, tuple(disclaimers))
    if any(lam[i] for i in range(dim + 1, len(lam))):
        raise TheoremViolation(f"nonzero Ext degree above the dimension: {lam}, dim {dim}")
    if lam[dim] != deg:
        raise TheoremViolation(f"lambda_{dim} = {lam[dim]} differs from deg = {deg}")
    total = sum(lam)
    return DegreeReport(
        dim=dim,
        deg=deg,
        adeg=total,
        sdeg=total,
        hdeg=hdeg_formula(deg, dim, lam),
        depth_positive=lam[0] == 0,
        structure=structure,
        ext_degrees=lam,
        disclaimers=tuple(disclaimers),
    )


def borel_report(U: MonomialSubmodule, verify=False) -> DegreeReport:
    return _report_from_chain(U, saturation_chain(U, verify=verify), BOREL)


def sdeg_borel(U: MonomialSubmodule) -> int:
    return sum(ext_degrees(saturation_chain(U)))


def adeg_borel(U: MonomialSubmodule) -> int:
    r = borel_report(U)
    assert r.adeg == r.sdeg
    return r.adeg


def hdeg_borel(U: MonomialSubmodule) -> int:
    return borel_report(U).hdeg


def degrees_from_ext_data(deg: int, d: int, ext: Sequence[int], mode=SEQ_CM) -> DegreeReport:
    """Evaluate the closed formulas from caller-supplied Ext data.

    ``ext[i]`` is deg Ext^{n-i}(M) (``seq-cm``) or l(Ext^{n-i}(M)) (``buchsbaum``,
    ``finite-length``) for i = 0..d-1; a trailing ``ext[d]`` must equal ``deg``
    and any later entries must vanish.  The structural hypothesis is the caller's
    claim and is not checked.  ``finite-length`` only determines hdeg.
    """
    ext = tuple(int(x) for x in ext)
    if deg is None or deg < 0 or d < 0:
        raise StructureError("need deg >= 0 and d >= 0")
    if any(x < 0 for x in ext):
        raise StructureError("Ext degrees must be non-negative")
    if len(ext) < d:
        raise StructureError(f"need Ext data for i = 0..{d - 1}, got {len(ext)} entries")
    if len(ext) > d and ext[d] != deg:
        raise StructureError(f"entry {d} must equal deg = {deg}")
    if any(ext[d + 1:]):
        raise StructureError("Ext data must vanish above the dimension")
    lam = ext[:d] + (deg,)
    low = sum(lam[:d])
    hdeg = hdeg_formula(deg, d, lam)
    if mode == SEQ_CM:
        adeg = sdeg = deg + low
    elif mode == BUCHSBAUM:
        adeg, sdeg = deg + low, hdeg
    elif mode == FINITE_LENGTH:
        adeg = sdeg = None
    else:
        raise StructureError(f"unknown mode {mode!r}")
    return DegreeReport(
        dim=d,
        deg=deg,
        adeg=adeg,
        sdeg=sdeg,
        hdeg=hdeg,
        depth_positive=(lam[0] == 0) if d > 0 else False,
        structure=USER_EXT,
        ext_degrees=lam,
        disclaimers=(f"values assume the {mode} hypothesis asserted by the caller",),
    )


GIN_DISCLAIMERS = (
    "sdeg is that of F/U (it equals sdeg F/gin(U))",
    "adeg and hdeg are those of F/gin(U), not of F/U",
    "adeg F/U <= adeg F/gin(U); hdeg F/U equals hdeg F/gin(U) only if F/U is sequentially CM",
    "gin is computed from random coordinates and is correct with probability one, not certified",
)


def _as_monomial(gens: Sequence[ModuleElement]):
    if not gens:
        return None
    if all(g.is_monomial() for g in gens if g):
        g0 = gens[0]
        return MonomialSubmodule.of(g0.ring, [(u, j) for g in gens for u, j, _ in g.terms], g0.shape)
    return None


def full_report(data, trials=3, seed=0, ring=None, shape=None) -> DegreeReport:
    """Degree report for F/U with U given by monomials or by polynomial generators."""
    from .groebner import gin

    if isinstance(data, MonomialSubmodule):
        U = data
    else:
        data = [g for g in data if g]
        U = _as_monomial(data)
        if U is None and not data:
            U = MonomialSubmodule.zero(ring, shape)
    if U is not None and borel_type_failure(U) is None:
        return borel_report(U)
    if U is not None:
        from .groebner import monomial_elements

        data = monomial_elements(U)
    G = gin(data, trials=trials, seed=seed)
    disclaimers = GIN_DISCLAIMERS
    if G.ring.characteristic:
        disclaimers += (f"computed over GF({G.ring.characteristic}); gin depends on the characteristic",)
    return _report_from_chain(G, saturation_chain(G), VIA_GIN, disclaimers)


@dataclass(frozen=True)
class ChainCheck:
    holds: bool
    violations: tuple


def check_degree_chain(report: DegreeReport) -> ChainCheck:
    """deg <= adeg <= sdeg <= hdeg."""
    vals = [("deg", report.deg), ("adeg", report.adeg), ("sdeg", report.sdeg), ("hdeg", report.hdeg)]
    missing = [name for name, v in vals if v is None]
    if missing:
        raise StructureError(f"report lacks {', '.join(missing)}")
    bad = tuple(
        f"{a} = {x} > {b} = {y}" for (a, x), (b, y) in zip(vals, vals[1:]) if x > y
    )
    return ChainCheck(not bad, bad)


@dataclass(frozen=True)
class Comparison:
    name: str
    lhs: int
    relation: str
    rhs: int

    @property
    def holds(self):
        return {"<=": self.lhs <= self.rhs, "=": self.lhs == self.rhs}[self.relation]

    def __str__(self):
        return f"{self.name}: {self.lhs} {self.relation} {self.rhs} [{'ok' if self.holds else 'VIOLATED'}]"


@dataclass(frozen=True)
class GinLexComparison:
    module: DegreeReport
    gin: DegreeReport
    lex: DegreeReport
    gin_module: MonomialSubmodule
    lex_module: MonomialSubmodule
    checks: tuple
    chains: tuple

    @property
    def holds(self):
        return all(c.holds for c in self.checks) and all(c.holds for c in self.chains)


def compare_gin_lex(U: MonomialSubmodule, trials=3, seed=0, degree_cap=None) -> GinLexComparison:
    """Reports for F/U, F/gin(U) and F/U^lex and the inequalities between them."""
    from .groebner import gin, monomial_elements
    from .lex import DEFAULT_DEGREE_CAP, lex_module

    bad = borel_type_failure(U)
    if bad is not None:
        raise NotBorelTypeError(bad)
    G = gin(monomial_elements(U), trials=trials, seed=seed, ring=U.ring, shape=U.shape)
    L = lex_module(U, degree_cap=degree_cap or DEFAULT_DEGREE_CAP)
    ru, rg, rl = borel_report(U), borel_report(G), borel_report(L)
    checks = (
        Comparison("sdeg F/U = sdeg F/gin(U)", ru.sdeg, "=", rg.sdeg),
        Comparison("sdeg F/gin(U) <= sdeg F/U^lex", rg.sdeg, "<=", rl.sdeg),
        Comparison("hdeg F/U <= hdeg F/U^lex", ru.hdeg, "<=", rl.hdeg),
        Comparison("adeg F/U <= adeg F/gin(U)", ru.adeg, "<=", rg.adeg),
    )
    chains = tuple(check_degree_chain(r) for r in (ru, rg, rl))
    return GinLexComparison(ru, rg, rl, G, L, checks, chains)


@dataclass(frozen=True)
class HyperplaneCheck:
    hdeg: int
    hdeg_quotient: int
    correction: int
    identity_holds: bool
    shift_holds: bool
    ext: tuple
    ext_quotient: tuple


def hdeg_hyperplane_identity(U: MonomialSubmodule) -> HyperplaneCheck:
    """hdeg M = hdeg M/x_n M + sum_{i=1}^{d-2} C(d-2, i) lambda_i, for M = F/U of positive depth.

    Also reports whether the Ext degrees shift by one when passing to M/x_n M.
    """
    r = borel_report(U)
    if r.dim < 1:
        raise StructureError("need dim F/U >= 1")
    if not r.depth_positive:
        raise StructureError("need depth F/U > 0")
    Q = quotient_by_last_variable(U)
    rq = borel_report(Q)
    lam, d = r.ext_degrees, r.dim
    correction = sum(comb(d - 2, i) * lam[i] for i in range(1, d - 1))
    shifted = lam[1:]
    return HyperplaneCheck(
        hdeg=r.hdeg,
        hdeg_quotient=rq.hdeg,
        correction=correction,
        identity_holds=r.hdeg == rq.hdeg + correction,
        shift_holds=tuple(rq.ext_degrees) == tuple(shifted),
        ext=lam,
        ext_quotient=rq.ext_degrees,
    )
