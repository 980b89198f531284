"""Root classification of tau_W and the resulting Tits-alternative verdict."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .exact import ONE, PHI, ZERO, GfPoly, GoldenScalar, ZeroPolynomial, poly_divrem, root_multiplicity
from .trace import TraceExpression, sl2_letters
from .words import GroupWord, all_words

# The exceptional trace values {0, 1, (1+sqrt5)/2, (-1+sqrt5)/2}.
OMEGA: tuple[GoldenScalar, ...] = (ZERO, ONE, PHI, PHI - ONE)

OMEGA_NAMES = {ZERO: "0", ONE: "1", PHI: "phi", PHI - ONE: "phi-1"}

PRIOR_WORK = "Levin-Rosenberger: the conjecture is known for k <= 4"


class VerdictTag(str, enum.Enum):
    FREE_BY_ROOT_OUTSIDE_OMEGA = "FreeByRootOutsideOmega"
    FREE_BY_MULTIPLE_ROOT = "FreeByMultipleRoot"
    DEFERRED_PRIOR_WORK = "DeferredPriorWork"


@dataclass(frozen=True)
class RootReport:
    multiplicities: dict
    residual: GfPoly
    k: int

    @property
    def residual_degree(self) -> int:
        return self.residual.degree

    def roots_in_omega(self) -> list[GoldenScalar]:
        return [a for a in OMEGA if self.multiplicities[a] > 0]

    def __post_init__(self):
        assert sum(self.multiplicities.values()) + self.residual_degree == self.k


def classify_roots(tau: GfPoly) -> RootReport:
    if tau.is_zero():
        raise ZeroPolynomial("cannot classify roots of the zero polynomial")
    mult, residual = {}, tau
    for a in OMEGA:
        m = root_multiplicity(residual, a)
        mult[a] = m
        if m:
            residual, r = poly_divrem(residual, GfPoly.linear_factor(a) ** m)
            assert r.is_zero()
    return RootReport(mult, residual, tau.degree)


@dataclass(frozen=True)
class Verdict:
    word: GroupWord
    tau: GfPoly
    tag: VerdictTag
    witness: object
    report: RootReport

    @property
    def k(self) -> int:
        return self.word.k

    def witness_text(self) -> str:
        if self.tag is VerdictTag.FREE_BY_ROOT_OUTSIDE_OMEGA:
            return str(self.witness)
        if self.tag is VerdictTag.FREE_BY_MULTIPLE_ROOT:
            return OMEGA_NAMES[self.witness]
        return ",".join(OMEGA_NAMES[a] for a in self.witness)

    def to_json(self) -> dict:
        return {
            "word": str(self.word),
            "k": self.k,
            "tau": self.tau.to_json(),
            "multiplicities": {OMEGA_NAMES[a]: m for a, m in self.report.multiplicities.items()},
            "residual_degree": self.report.residual_degree,
            "residual": self.report.residual.to_json(),
            "verdict": self.tag.value,
            "witness": self.witness_text(),
        }


def verdict_from_tau(w: GroupWord, tau: GfPoly) -> Verdict:
    rep = classify_roots(tau)
    if rep.residual_degree > 0:
        return Verdict(w, tau, VerdictTag.FREE_BY_ROOT_OUTSIDE_OMEGA, rep.residual, rep)
    multiple = [a for a in OMEGA if rep.multiplicities[a] >= 2]
    if multiple:
        return Verdict(w, tau, VerdictTag.FREE_BY_MULTIPLE_ROOT, multiple[0], rep)
    # only simple roots, all in OMEGA: at most four of them
    if w.k > 4:
        raise AssertionError(f"simple exceptional roots only, yet k = {w.k} > 4")
    return Verdict(w, tau, VerdictTag.DEFERRED_PRIOR_WORK, tuple(rep.roots_in_omega()), rep)


def rosenberger_verdict(w: GroupWord, engine: TraceExpression | None = None) -> Verdict:
    engine = engine or TraceExpression()
    return verdict_from_tau(w, engine.trace(sl2_letters(w)))


@dataclass
class Census:
    k_max: int
    counts: dict = field(default_factory=lambda: {t: 0 for t in VerdictTag})
    verdicts: list = field(default_factory=list)
    multiple_root_witnesses: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self, include_words: bool = False) -> dict:
        out = {
            "k_max": self.k_max,
            "total": self.total,
            "counts": {t.value: n for t, n in self.counts.items()},
            "multiple_root_witnesses": [
                {"word": str(v.word), "alpha": OMEGA_NAMES[v.witness],
                 "multiplicity": v.report.multiplicities[v.witness]}
                for v in self.multiple_root_witnesses],
        }
        if include_words:
            out["words"] = [v.to_json() for v in self.verdicts]
        return out


def enumerate_words(k_max: int, words: Iterable[GroupWord] | None = None) -> Census:
    """Classify every word with k <= k_max, in deterministic order."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    census = Census(k_max)
    engine = TraceExpression()  # shared so common prefixes are rewritten once
    if words is None:
        words = (w for k in range(1, k_max + 1) for w in all_words(k))
    for w in words:
        v = rosenberger_verdict(w, engine)
        census.counts[v.tag] += 1
        census.verdicts.append(v)
        if v.tag is VerdictTag.FREE_BY_MULTIPLE_ROOT:
            assert root_multiplicity(v.tau, v.witness) >= 2
            census.multiple_root_witnesses.append(v)
    return census
