"""Straightening engine: multiplication in any algebra given by a
commutation table, plus machine checks of the table and ordering axioms.

The table holds, for every generator pair big > small, the normal form of
the ascending product z_small * z_big as lam * (z_big z_small) + f.  The
engine is generic: the quantized matrix algebra is one instance; the
quantum plane and the first Weyl algebra ship as controls for the
validators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .errors import DegreeGuardExceeded, DimensionMismatch, InvalidSpec, MissingPair
from .pbw import (
    GREATER,
    LESS,
    PAPER_LEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    Term,
    mono_sum,
    poly_from_dict,
)
from .qfield import ONE, QMode, QRat, SYMBOLIC

DEFAULT_MAX_DEGREE = 64
DEFAULT_MEMO_SIZE = 1 << 16


class CommutationSystem:
    """Immutable multiplication table z_small*z_big = lam*(z_big z_small) + f.

    ``table`` maps (big, small) linear-index pairs (big > small) to
    (lam, f) with f a canonical polynomial.  Products are memoized per
    system; lru_cache keeps concurrent multiplication safe.
    """

    def __init__(
        self,
        ngens: int,
        table: dict[tuple[int, int], tuple[QRat, Polynomial]],
        qmode: QMode = SYMBOLIC,
        gen_names: Optional[tuple[str, ...]] = None,
        max_degree: int = DEFAULT_MAX_DEGREE,
        name: str = "",
        validate: bool = True,
        memo_size: int = DEFAULT_MEMO_SIZE,
    ):
        if ngens < 1:
            raise InvalidSpec("need at least one generator")
        self.ngens = ngens
        self.table = dict(table)
        self.qmode = qmode
        self.gen_names = gen_names or tuple(f"g{k}" for k in range(ngens))
        self.max_degree = max_degree
        self.name = name
        self._gen_mul_mono = lru_cache(maxsize=memo_size)(self._gen_mul_mono_impl)
        if validate:
            report = validate_solvability(self, PAPER_LEX)
            if not report.ok:
                raise InvalidSpec(
                    "commutation table violates solvability: "
                    + "; ".join(c.witness for c in report.checks if not c.ok)
                )

    # -- multiplication -------------------------------------------------

    def unit(self) -> Monomial:
        return Monomial.unit(self.ngens)

    def gen_mono(self, g: int, power: int = 1) -> Monomial:
        return Monomial.gen(g, self.ngens, power)

    def gen_poly(self, g: int) -> Polynomial:
        return Polynomial.from_mono(self.gen_mono(g))

    def _gen_mul_mono_impl(self, g: int, mono: Monomial) -> Polynomial:
        """Normal form of z_g * mono, mono a basis word."""
        h = mono.top()
        if g >= h:
            # prepending keeps the word descending
            exps = list(mono.exps)
            exps[g] += 1
            return Polynomial.from_mono(Monomial(exps))
        lam, f = self.table[(h, g)]
        rest = list(mono.exps)
        rest[h] -= 1
        rest = Monomial(rest)
        sub = self._gen_mul_mono(g, rest)
        # z_g z_h = lam z_h z_g + f, so z_g*(z_h*rest) = lam z_h*(z_g*rest) + f*rest.
        # Every monomial of sub and of f has top letter <= h, so z_h prepends freely.
        acc: dict[Monomial, QRat] = {}
        for c, m in sub.terms:
            exps = list(m.exps)
            exps[h] += 1
            acc[Monomial(exps)] = lam * c
        if f.terms:
            _accumulate_product(self, f, rest, acc)
        return poly_from_dict(acc, self.ngens)

    def mono_mul(self, u: Monomial, v: Monomial) -> Polynomial:
        """Canonical normal form of the product u*v."""
        if u.ngens != self.ngens or v.ngens != self.ngens:
            raise DimensionMismatch(
                f"monomials over {u.ngens}/{v.ngens} generators in a "
                f"{self.ngens}-generator system"
            )
        if u.degree + v.degree > self.max_degree:
            raise DegreeGuardExceeded(
                f"product degree {u.degree + v.degree} exceeds guard {self.max_degree}"
            )
        result = Polynomial.from_mono(v)
        # fold u's letters lowest-first: u*v = g_1(g_2(...(g_r * v)))
        for g, e in enumerate(u.exps):
            for _ in range(e):
                result = self._gen_mul_poly(g, result)
        return result

    def _gen_mul_poly(self, g: int, p: Polynomial) -> Polynomial:
        acc: dict[Monomial, QRat] = {}
        for c, m in p.terms:
            for c2, m2 in self._gen_mul_mono(g, m).terms:
                prev = acc.get(m2)
                cc = c * c2
                acc[m2] = cc if prev is None else prev + cc
        return poly_from_dict(acc, self.ngens)

    def poly_mul(self, f: Polynomial, g: Polynomial) -> Polynomial:
        if f.ngens != self.ngens or g.ngens != self.ngens:
            raise DimensionMismatch(
                f"polynomials over {f.ngens}/{g.ngens} generators in a "
                f"{self.ngens}-generator system"
            )
        acc: dict[Monomial, QRat] = {}
        for cf, mf in f.terms:
            for cg, mg in g.terms:
                c = cf * cg
                for c2, m2 in self.mono_mul(mf, mg).terms:
                    prev = acc.get(m2)
                    cc = c * c2
                    acc[m2] = cc if prev is None else prev + cc
        return poly_from_dict(acc, self.ngens)

    def mono_mul_poly(self, u: Monomial, g: Polynomial) -> Polynomial:
        """Left multiple u*g, the lifting step of division and S-polynomials."""
        acc: dict[Monomial, QRat] = {}
        for cg, mg in g.terms:
            for c2, m2 in self.mono_mul(u, mg).terms:
                prev = acc.get(m2)
                cc = cg * c2
                acc[m2] = cc if prev is None else prev + cc
        return poly_from_dict(acc, self.ngens)

    def commutator(self, f: Polynomial, g: Polynomial) -> Polynomial:
        return self.poly_mul(f, g) - self.poly_mul(g, f)

    def cache_info(self):
        return self._gen_mul_mono.cache_info()

    def __repr__(self):
        label = self.name or f"{self.ngens} generators"
        return f"CommutationSystem({label}, q={self.qmode})"


def _accumulate_product(sys: CommutationSystem, f: Polynomial, m: Monomial, acc):
    """acc += f*m (termwise straightening)."""
    for c, mf in f.terms:
        for c2, m2 in sys.mono_mul(mf, m).terms:
            prev = acc.get(m2)
            cc = c * c2
            acc[m2] = cc if prev is None else prev + cc


def mono_mul(sys: CommutationSystem, u: Monomial, v: Monomial) -> Polynomial:
    return sys.mono_mul(u, v)


def poly_mul(sys: CommutationSystem, f: Polynomial, g: Polynomial) -> Polynomial:
    return sys.poly_mul(f, g)


def scalar_mul(c: QRat, f: Polynomial) -> Polynomial:
    if c.is_zero():
        return Polynomial.zero(f.ngens)
    if c.is_one():
        return f
    return Polynomial(tuple(Term(c * cf, m) for cf, m in f.terms), f.ngens)


# -- validation ---------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    witness: str = ""


@dataclass
class ValidationReport:
    kind: str
    ok: bool
    checks: list[CheckResult] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.ok]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "verdict": "PASS" if self.ok else "FAIL",
            "checks": [
                {"name": c.name, "ok": c.ok, "witness": c.witness}
                for c in self.checks
            ],
            "meta": self.meta,
        }


def validate_solvability(
    sys: CommutationSystem, order: MonomialOrder = PAPER_LEX
) -> ValidationReport:
    """Check every pair: lam in K^* and LM(f) strictly below the basis word."""
    checks = []
    for big in range(1, sys.ngens):
        for small in range(big):
            key = (big, small)
            if key not in sys.table:
                raise MissingPair(
                    f"no table entry for pair ({sys.gen_names[big]}, {sys.gen_names[small]})"
                )
            lam, f = sys.table[key]
            name = f"{sys.gen_names[small]}*{sys.gen_names[big]}"
            if lam.is_zero():
                checks.append(CheckResult(name, False, "lambda = 0"))
                continue
            if f.is_zero():
                checks.append(CheckResult(name, True))
                continue
            basis_word = mono_sum(sys.gen_mono(big), sys.gen_mono(small))
            if order.compare(f.lm(), basis_word) == LESS:
                checks.append(CheckResult(name, True))
            else:
                checks.append(
                    CheckResult(
                        name,
                        False,
                        f"LM(f) = {f.lm().exps} not below {basis_word.exps}",
                    )
                )
    ok = all(c.ok for c in checks)
    return ValidationReport(
        kind="solvability",
        ok=ok,
        checks=checks,
        meta={"system": sys.name or "", "ngens": sys.ngens, "pairs": len(checks)},
    )


def _random_monomial(rng: random.Random, ngens: int, max_degree: int) -> Monomial:
    deg = rng.randint(0, max_degree)
    exps = [0] * ngens
    for _ in range(deg):
        exps[rng.randrange(ngens)] += 1
    return Monomial(exps)


def _lm_under(p: Polynomial, order: MonomialOrder) -> Monomial:
    best = p.terms[0].mono
    for _, m in p.terms[1:]:
        if order.compare(m, best) == GREATER:
            best = m
    return best


def validate_ordering(
    sys: CommutationSystem,
    order: MonomialOrder = PAPER_LEX,
    samples: int = 1000,
    seed: int = 0,
    sample_degree: int = 3,
) -> ValidationReport:
    """Sample the two multiplicative monomial-ordering axioms.

    Products are straightened by the engine; LM is taken under the given
    comparator, so a broken comparator is caught with a witness.  The
    generator-pair facts the axioms reduce to are checked exhaustively.
    """
    rng = random.Random(seed)
    checks = []
    failures = 0

    # exhaustive on generators: the unit is strictly minimal
    unit = sys.unit()
    bad = [
        g
        for g in range(sys.ngens)
        if order.compare(unit, sys.gen_mono(g)) != LESS
    ]
    checks.append(
        CheckResult(
            "unit-minimal-generators",
            not bad,
            "" if not bad else f"1 not below {sys.gen_names[bad[0]]}",
        )
    )

    # exhaustive on generator pairs: straightened z_g*z_h leads with the basis word
    bad_pair = None
    for h in range(sys.ngens):
        for g in range(h):
            p = sys.mono_mul(sys.gen_mono(g), sys.gen_mono(h))
            expected = mono_sum(sys.gen_mono(g), sys.gen_mono(h))
            if p.is_zero() or _lm_under(p, order) != expected:
                bad_pair = (g, h)
                break
        if bad_pair:
            break
    checks.append(
        CheckResult(
            "generator-pair-leading-words",
            bad_pair is None,
            ""
            if bad_pair is None
            else f"LM({sys.gen_names[bad_pair[0]]}*{sys.gen_names[bad_pair[1]]}) "
            "is not the ordered word",
        )
    )

    cond2_fail = cond3_fail = unit_fail = None
    for _ in range(samples):
        ga = _random_monomial(rng, sys.ngens, sample_degree)
        al = _random_monomial(rng, sys.ngens, sample_degree)
        be = _random_monomial(rng, sys.ngens, sample_degree)
        et = _random_monomial(rng, sys.ngens, sample_degree)

        if unit_fail is None and not ga.is_unit():
            if order.compare(unit, ga) != LESS:
                unit_fail = ga

        # condition (2): gamma = LM(alpha*beta*eta) dominates the inner factor
        prod = sys.poly_mul(sys.mono_mul(al, be), Polynomial.from_mono(et))
        if not prod.is_zero():
            gamma = _lm_under(prod, order)
            if not gamma.is_unit() and be != gamma:
                if order.compare(be, gamma) != LESS and cond2_fail is None:
                    cond2_fail = (al, be, et, gamma)

        # condition (3): order survives multiplication at the LM level
        cmp_ab = order.compare(al, be)
        if cmp_ab != 0:
            lo, hi = (al, be) if cmp_ab == LESS else (be, al)
            p_lo = sys.poly_mul(sys.mono_mul(ga, lo), Polynomial.from_mono(et))
            p_hi = sys.poly_mul(sys.mono_mul(ga, hi), Polynomial.from_mono(et))
            if not p_lo.is_zero() and not p_hi.is_zero():
                lm_hi = _lm_under(p_hi, order)
                if not lm_hi.is_unit():
                    if (
                        order.compare(_lm_under(p_lo, order), lm_hi) != LESS
                        and cond3_fail is None
                    ):
                        cond3_fail = (ga, lo, hi, et)

        if cond2_fail and cond3_fail and unit_fail:
            break

    checks.append(
        CheckResult(
            "unit-minimal-sampled",
            unit_fail is None,
            "" if unit_fail is None else f"1 not below {unit_fail.exps}",
        )
    )
    checks.append(
        CheckResult(
            "condition-2-sampled",
            cond2_fail is None,
            ""
            if cond2_fail is None
            else f"beta {cond2_fail[1].exps} not below LM {cond2_fail[3].exps}",
        )
    )
    checks.append(
        CheckResult(
            "condition-3-sampled",
            cond3_fail is None,
            ""
            if cond3_fail is None
            else f"LM order broken at gamma={cond3_fail[0].exps}, "
            f"alpha={cond3_fail[1].exps}, beta={cond3_fail[2].exps}, "
            f"eta={cond3_fail[3].exps}",
        )
    )
    ok = all(c.ok for c in checks)
    return ValidationReport(
        kind="ordering",
        ok=ok,
        checks=checks,
        meta={
            "system": sys.name or "",
            "order": order.name,
            "samples": samples,
            "seed": seed,
            "sample_degree": sample_degree,
        },
    )


# -- shipped control instances ------------------------------------------


def quantum_plane(max_degree: int = DEFAULT_MAX_DEGREE) -> CommutationSystem:
    """K<x,y> with y x = q x y: positive control with a trivial tail."""
    from .qfield import Q_INV

    table = {(1, 0): (Q_INV, Polynomial.zero(2))}
    return CommutationSystem(
        2, table, SYMBOLIC, gen_names=("x", "y"), max_degree=max_degree,
        name="quantum plane",
    )


def weyl_algebra(max_degree: int = DEFAULT_MAX_DEGREE) -> CommutationSystem:
    """First Weyl algebra d x = x d + 1: positive control with a nonzero tail."""
    one = Polynomial.one(2)
    table = {(1, 0): (ONE, -one)}
    return CommutationSystem(
        2, table, SYMBOLIC, gen_names=("x", "d"), max_degree=max_degree,
        name="Weyl algebra",
    )
