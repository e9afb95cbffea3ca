"""Left Groebner bases in a validated commutation system.

Left ideals only: divisors are multiplied by monomials on the left, and
every product is straightened through the system before its leading data
is read off.  Divisor selection scans the basis in sequence order and
takes the first leading-monomial match, so division is a pure function
of its inputs.  Completion uses the normal pair strategy (smallest lcm
first) with no discard criteria.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import EmptyBasis, InvalidSpec, PairLimitExceeded
from .pbw import (
    MonomialOrder,
    Monomial,
    PAPER_LEX,
    Polynomial,
    Term,
    mono_divides,
    mono_lcm,
    mono_sub,
)
from .straighten import CommutationSystem, scalar_mul

DEFAULT_MAX_PAIRS = 10_000


@dataclass(frozen=True)
class BasisStats:
    pairs_considered: int = 0
    reductions_to_zero: int = 0


@dataclass(frozen=True)
class GroebnerBasis:
    """Completed left basis: monic elements sorted by ascending LM.

    When cofactor tracking is on, ``cofactors[i][j]`` left-multiplies
    ``generators[j]`` so that elements[i] = sum_j cofactors[i][j]*generators[j].
    """

    elements: tuple[Polynomial, ...]
    order: MonomialOrder = PAPER_LEX
    stats: BasisStats = field(default_factory=BasisStats)
    cofactors: Optional[tuple[tuple[Polynomial, ...], ...]] = None
    generators: Optional[tuple[Polynomial, ...]] = None

    @property
    def ngens(self) -> int:
        if not self.elements:
            raise EmptyBasis("basis has no elements")
        return self.elements[0].ngens

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _require_shipped_order(order: MonomialOrder) -> None:
    # canonical term storage is PaperLex-descending; a different comparator
    # would silently disagree with lt()/lm()
    if order != PAPER_LEX:
        raise InvalidSpec(f"unsupported monomial order {order.name!r}")


def _check_divisors(G: Sequence[Polynomial]) -> None:
    if not G:
        raise EmptyBasis("empty divisor sequence")
    for g in G:
        if g.is_zero():
            raise InvalidSpec("zero polynomial among divisors")


def left_divide(
    f: Polynomial,
    G: Sequence[Polynomial],
    sys: CommutationSystem,
    order: MonomialOrder = PAPER_LEX,
) -> tuple[list[Polynomial], Polynomial]:
    """Divide f by G on the left: f = sum quotients[k]*G[k] + remainder.

    The divisor for each step is the first element of G whose LM divides
    the current leading monomial; no remainder term is divisible by any
    LM(G[k]).  The identity reconstructs exactly under poly_mul.
    """
    _require_shipped_order(order)
    _check_divisors(G)
    ngens = f.ngens
    lms = [g.lm() for g in G]
    quot_terms: list[list[Term]] = [[] for _ in G]
    rem_terms: list[Term] = []
    p = f
    while not p.is_zero():
        c, m = p.lt()
        for k, lm in enumerate(lms):
            if mono_divides(lm, m):
                delta = mono_sub(m, lm)
                if delta.is_unit():
                    h = G[k]
                else:
                    h = sys.mono_mul_poly(delta, G[k])
                coef = c / h.lc()
                p = p - scalar_mul(coef, h)
                # deltas decrease strictly with m, so the list stays sorted
                quot_terms[k].append(Term(coef, delta))
                break
        else:
            rem_terms.append(Term(c, m))
            p = Polynomial(p.terms[1:], ngens)
    quotients = [Polynomial(tuple(ts), ngens) for ts in quot_terms]
    return quotients, Polynomial(tuple(rem_terms), ngens)


def left_spoly(
    g1: Polynomial,
    g2: Polynomial,
    sys: CommutationSystem,
    order: MonomialOrder = PAPER_LEX,
) -> Polynomial:
    """Lift both elements to the lcm of their LMs and cancel the heads."""
    _require_shipped_order(order)
    if g1.is_zero() or g2.is_zero():
        raise InvalidSpec("S-polynomial of a zero polynomial")
    gamma = mono_lcm(g1.lm(), g2.lm())
    h1 = _lift(g1, mono_sub(gamma, g1.lm()), sys)
    h2 = _lift(g2, mono_sub(gamma, g2.lm()), sys)
    return scalar_mul(h1.lc().inv(), h1) - scalar_mul(h2.lc().inv(), h2)


def _lift(g: Polynomial, delta: Monomial, sys: CommutationSystem) -> Polynomial:
    return g if delta.is_unit() else sys.mono_mul_poly(delta, g)


def _scale_vec(c, vec):
    return tuple(scalar_mul(c, p) for p in vec)


def _sub_vec(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_mul_vec(sys, delta, vec):
    if delta.is_unit():
        return tuple(vec)
    return tuple(sys.mono_mul_poly(delta, p) for p in vec)


def _poly_mul_vec(sys, q, vec):
    return tuple(sys.poly_mul(q, p) for p in vec)


class _Tracked:
    """Basis under construction: elements plus optional cofactor rows."""

    def __init__(self, sys, track: bool, width: int):
        self.sys = sys
        self.track = track
        self.width = width
        self.elems: list[Polynomial] = []
        self.cofs: list[tuple[Polynomial, ...]] = []
        self._view_idx: list[int] = []

    def append(self, p: Polynomial, cof) -> None:
        self.elems.append(p)
        if self.track:
            self.cofs.append(cof)
        # division scans by (LM ascending, insertion order)
        self._view_idx = sorted(
            range(len(self.elems)),
            key=lambda t: (self.elems[t].lm().sort_key(), t),
        )

    def view(self) -> tuple[list[Polynomial], list[int]]:
        return [self.elems[t] for t in self._view_idx], list(self._view_idx)

    def reduce(self, p: Polynomial, cof):
        """Fully left-reduce p by the current basis, tracking cofactors."""
        divisors, idx = self.view()
        quotients, r = left_divide(p, divisors, self.sys)
        if self.track:
            for q, t in zip(quotients, idx):
                if not q.is_zero():
                    cof = _sub_vec(cof, _poly_mul_vec(self.sys, q, self.cofs[t]))
        return r, cof


def buchberger(
    gens: Sequence[Polynomial],
    sys: CommutationSystem,
    order: MonomialOrder = PAPER_LEX,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    track_cofactors: bool = False,
) -> GroebnerBasis:
    """Complete a generating set of a left ideal to a reduced basis.

    Raises PairLimitExceeded with the interreduced partial basis attached
    when more than max_pairs S-pairs would be processed.
    """
    _require_shipped_order(order)
    inputs = [g for g in gens if not g.is_zero()]
    if not inputs:
        raise EmptyBasis("no nonzero generators")
    width = len(inputs)

    basis = _Tracked(sys, track_cofactors, width)
    seen: set[Polynomial] = set()

    def unit_cof(j: int, c) -> tuple[Polynomial, ...]:
        row = [Polynomial.zero(sys.ngens)] * width
        row[j] = scalar_mul(c, Polynomial.one(sys.ngens))
        return tuple(row)

    for j, g in enumerate(inputs):
        m = g.monic()
        if m in seen:
            continue
        seen.add(m)
        basis.append(m, unit_cof(j, g.lc().inv()) if track_cofactors else None)

    heap: list[tuple[tuple[int, ...], int, int]] = []
    for j in range(len(basis.elems)):
        for i in range(j):
            lcm = mono_lcm(basis.elems[i].lm(), basis.elems[j].lm())
            heapq.heappush(heap, (lcm.sort_key(), i, j))

    pairs = 0
    drops = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        pairs += 1
        if pairs > max_pairs:
            elems, cofs = _interreduce_raw(basis.elems, basis.cofs, sys, track_cofactors)
            partial = GroebnerBasis(
                tuple(elems),
                order,
                BasisStats(pairs - 1, drops),
                tuple(cofs) if track_cofactors else None,
                tuple(inputs) if track_cofactors else None,
            )
            raise PairLimitExceeded(
                f"pair budget {max_pairs} exhausted", partial=partial
            )
        s = left_spoly(basis.elems[i], basis.elems[j], sys)
        scof = None
        if track_cofactors:
            scof = _spoly_cofactor(basis, i, j)
        if not s.is_zero():
            s, scof = basis.reduce(s, scof)
        if s.is_zero():
            drops += 1
            continue
        lc = s.lc()
        s = s.monic()
        if track_cofactors:
            scof = _scale_vec(lc.inv(), scof)
        t = len(basis.elems)
        basis.append(s, scof)
        for i2 in range(t):
            lcm = mono_lcm(basis.elems[i2].lm(), s.lm())
            heapq.heappush(heap, (lcm.sort_key(), i2, t))

    elems, cofs = _interreduce_raw(basis.elems, basis.cofs, sys, track_cofactors)
    result = GroebnerBasis(
        tuple(elems),
        order,
        BasisStats(pairs, drops),
        tuple(cofs) if track_cofactors else None,
        tuple(inputs) if track_cofactors else None,
    )
    for g in inputs:
        _, r = left_divide(g, result.elements, sys)
        assert r.is_zero(), "completed basis must reduce every input to zero"
    return result


def _spoly_cofactor(basis: _Tracked, i: int, j: int):
    g1, g2 = basis.elems[i], basis.elems[j]
    gamma = mono_lcm(g1.lm(), g2.lm())
    sys = basis.sys
    h1 = _lift(g1, mono_sub(gamma, g1.lm()), sys)
    h2 = _lift(g2, mono_sub(gamma, g2.lm()), sys)
    v1 = _mono_mul_vec(sys, mono_sub(gamma, g1.lm()), basis.cofs[i])
    v2 = _mono_mul_vec(sys, mono_sub(gamma, g2.lm()), basis.cofs[j])
    return _sub_vec(_scale_vec(h1.lc().inv(), v1), _scale_vec(h2.lc().inv(), v2))


def _interreduce_raw(elems, cofs, sys, track):
    """Mutual full reduction to the unique reduced basis (fixpoint loop)."""
    items = []
    for t, p in enumerate(elems):
        cof = cofs[t] if track else None
        if not p.lc().is_one():
            if track:
                cof = _scale_vec(p.lc().inv(), cof)
            p = p.monic()
        items.append((p, cof))
    changed = True
    while changed:
        changed = False
        items.sort(key=lambda it: it[0].lm().sort_key())
        for t in range(len(items)):
            p, cof = items[t]
            others = [it[0] for u, it in enumerate(items) if u != t]
            if not others:
                break
            quotients, r = left_divide(p, others, sys)
            if r == p:
                continue
            changed = True
            if track:
                other_cofs = [it[1] for u, it in enumerate(items) if u != t]
                for q, oc in zip(quotients, other_cofs):
                    if not q.is_zero():
                        cof = _sub_vec(cof, _poly_mul_vec(sys, q, oc))
            if r.is_zero():
                del items[t]
                break
            lc = r.lc()
            if track:
                cof = _scale_vec(lc.inv(), cof)
            items[t] = (r.monic(), cof)
            break
    items.sort(key=lambda it: it[0].lm().sort_key())
    return [it[0] for it in items], [it[1] for it in items]


def interreduce(
    G: GroebnerBasis, sys: CommutationSystem, order: MonomialOrder = PAPER_LEX
) -> GroebnerBasis:
    """Reduced form: monic, no term divisible by another element's LM.

    The result is unique for a fixed ordering and generates the same ideal.
    """
    _require_shipped_order(order)
    track = G.cofactors is not None
    elems, cofs = _interreduce_raw(list(G.elements), list(G.cofactors or ()), sys, track)
    return GroebnerBasis(
        tuple(elems),
        G.order,
        G.stats,
        tuple(cofs) if track else None,
        G.generators,
    )


def ideal_member(f: Polynomial, G: GroebnerBasis, sys: CommutationSystem) -> bool:
    """True iff f left-reduces to zero by the completed basis."""
    if f.is_zero():
        return True
    _, r = left_divide(f, G.elements, sys, G.order)
    return r.is_zero()
