"""Graded ideals of the binary polynomial ring, stored one component per degree.

A GradedIdeal keeps an explicit window of components [window_lo .. window_hi]
plus the monic gcd of the stable tail: above the window the component in
degree i is (tail_gcd) ∩ R_i.  Below the window all components are zero.
The zero ideal is the one case with no components and no tail.

The three ideals attached to a space V of degree-j forms:

  ancestor_ideal(V)   components R_{i-j}V in every degree
  level_ideal(V)      R_{i-j}V up to degree j, everything above
  generated_ideal(V)  R_{i-j}V from degree j up, nothing below

Numeric Betti data (generator/relation degrees) comes from dimension counts,
no syzygy modules are ever built.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .fields import FieldSpec
from .forms import (
    BinaryForm,
    divide_form,
    form,
    form_from_json,
    form_to_json,
    monic,
)
from .osequence import OSequence, oseq
from .spaces import (
    FormSpace,
    full_space,
    gcd_of_space,
    principal_space,
    shift,
    space_sum,
    span,
    tau,
    zero_space,
)


def unit_form(field: FieldSpec) -> BinaryForm:
    return form(field, 0, [field.one])


@dataclass(frozen=True)
class GradedIdeal:
    field: FieldSpec
    window_lo: int
    window_hi: int
    components: tuple[FormSpace, ...]
    tail_gcd: BinaryForm | None

    @property
    def is_zero(self) -> bool:
        return self.tail_gcd is None

    def component(self, i: int) -> FormSpace:
        if i < 0:
            raise PreconditionError("ideal components live in degrees >= 0", degree=i)
        if self.is_zero or i < self.window_lo:
            return zero_space(self.field, i)
        if i <= self.window_hi:
            return self.components[i - self.window_lo]
        return principal_space(self.tail_gcd, i)

    def dim(self, i: int) -> int:
        return self.component(i).dim


def zero_ideal(field: FieldSpec) -> GradedIdeal:
    return GradedIdeal(field, 0, -1, (), None)


def graded_ideal(
    field: FieldSpec,
    window_lo: int,
    components,
    tail_gcd: BinaryForm | None,
) -> GradedIdeal:
    """Validating constructor: checks degrees, R_1-closure and tail consistency."""
    comps = list(components)
    lo = window_lo
    while comps and comps[0].is_zero:
        comps.pop(0)
        lo += 1
    if not comps:
        if tail_gcd is None:
            return zero_ideal(field)
        f = monic(tail_gcd)
        return GradedIdeal(field, f.degree, f.degree, (principal_space(f, f.degree),), f)
    if tail_gcd is None:
        raise PreconditionError("an ideal with non-zero components needs a tail gcd")
    if lo < 0:
        raise PreconditionError("ideal components live in degrees >= 0", window_lo=lo)
    f = monic(tail_gcd)
    if f.field != field:
        raise PreconditionError("tail gcd field mismatch")
    for k, c in enumerate(comps):
        if c.field != field:
            raise PreconditionError("component field mismatch", degree=lo + k)
        if c.degree != lo + k:
            raise PreconditionError(
                "component degree out of place", expected=lo + k, got=c.degree
            )
    for a, b in zip(comps, comps[1:]):
        up = shift(a, 1)
        if space_sum(up, b).dim != b.dim:
            raise PreconditionError(
                "components are not closed under multiplication", degree=a.degree
            )
    hi = lo + len(comps) - 1
    up = shift(comps[-1], 1)
    above = principal_space(f, hi + 1)
    if space_sum(up, above).dim != above.dim:
        raise PreconditionError("window top is inconsistent with the tail gcd")
    return GradedIdeal(field, lo, hi, tuple(comps), f)


# ── the three ideals of a form space ──────────────────────────────────────────


def _shift_chain_down(V: FormSpace) -> list[FormSpace]:
    """[R_{-j}V, ..., R_{-1}V, V] — components of the ancestor ideal below j."""
    chain = [V]
    for _ in range(V.degree):
        chain.append(shift(chain[-1], -1))
    chain.reverse()
    return chain


def _stable_top(V: FormSpace) -> int:
    """Degree offset by which R_kV is a full principal component."""
    return max(1, V.cod - tau(V) + 2)


def _shift_chain_up(V: FormSpace, steps: int) -> list[FormSpace]:
    chain = [V]
    for _ in range(steps):
        chain.append(shift(chain[-1], 1))
    return chain[1:]


def _tail_of(top: FormSpace) -> BinaryForm:
    g = gcd_of_space(top)
    if top.dim != top.degree + 1 - g.degree:
        raise RuntimeError("ideal window ended before its components stabilized")
    return g


def ancestor_ideal(V: FormSpace) -> GradedIdeal:
    """Largest ideal whose degree-j component is V: components R_{i-j}V."""
    if V.is_zero:
        return zero_ideal(V.field)
    comps = _shift_chain_down(V) + _shift_chain_up(V, _stable_top(V))
    return graded_ideal(V.field, 0, comps, _tail_of(comps[-1]))


def level_ideal(V: FormSpace) -> GradedIdeal:
    """Ancestor components up to degree j, then everything."""
    j = V.degree
    if V.is_zero:
        comps = [full_space(V.field, j + 1)]
        return graded_ideal(V.field, j + 1, comps, unit_form(V.field))
    comps = _shift_chain_down(V) + [full_space(V.field, j + 1)]
    return graded_ideal(V.field, 0, comps, unit_form(V.field))


def generated_ideal(V: FormSpace) -> GradedIdeal:
    """Smallest ideal containing V: zero below degree j."""
    if V.is_zero:
        return zero_ideal(V.field)
    comps = [V] + _shift_chain_up(V, _stable_top(V))
    return graded_ideal(V.field, V.degree, comps, _tail_of(comps[-1]))


def ideal_from_generators(
    field: FieldSpec, gens, window_hi: int | None = None
) -> GradedIdeal:
    """Grow components degree by degree from a finite generator list."""
    forms = [g for g in gens if not g.is_zero]
    for g in forms:
        if g.field != field:
            raise PreconditionError("generator field mismatch")
    if not forms:
        return zero_ideal(field)
    by_degree: dict[int, list[BinaryForm]] = {}
    for g in forms:
        by_degree.setdefault(g.degree, []).append(g)
    lo = min(by_degree)
    top_gen = max(by_degree)
    comps = [span(field, lo, by_degree[lo])]
    i = lo
    cap = max(window_hi or 0, top_gen + comps[0].cod + 2)
    while True:
        cur = comps[-1]
        if i >= top_gen and (window_hi is None or i >= window_hi):
            g = gcd_of_space(cur)
            if cur.dim == i + 1 - g.degree:
                break
        if i > cap:
            raise RuntimeError("generated ideal failed to stabilize")
        i += 1
        nxt = shift(cur, 1)
        if i in by_degree:
            nxt = space_sum(nxt, span(field, i, by_degree[i]))
        comps.append(nxt)
    return graded_ideal(field, lo, comps, gcd_of_space(comps[-1]))


# ── numeric invariants ────────────────────────────────────────────────────────


def hilbert_function(I: GradedIdeal) -> OSequence:
    """H_i = dim R_i - dim I_i, returned with its eventual constant."""
    if I.is_zero:
        return oseq((), None)
    prefix = [i + 1 - I.dim(i) for i in range(I.window_hi + 1)]
    return oseq(prefix, I.tail_gcd.degree)


def generator_degrees(I: GradedIdeal) -> tuple[int, ...]:
    """Degrees of a minimal generating set: dim I_i - dim R_1·I_{i-1} per degree."""
    if I.is_zero:
        return ()
    degs: list[int] = []
    for i in range(I.window_lo, I.window_hi + 2):
        degs.extend([i] * _fresh_generators(I, i))
    return tuple(degs)


def _fresh_generators(I: GradedIdeal, i: int) -> int:
    prev = shift(I.component(i - 1), 1).dim if i >= 1 else 0
    return I.dim(i) - prev


def relation_degrees(I: GradedIdeal) -> tuple[int, ...]:
    """Degrees of the minimal first syzygies, from second differences of dim I."""
    if I.is_zero:
        return ()
    degs: list[int] = []
    for i in range(I.window_lo, I.window_hi + 3):
        d1 = I.dim(i - 1) if i >= 1 else 0
        d2 = I.dim(i - 2) if i >= 2 else 0
        rels = _fresh_generators(I, i) - (I.dim(i) - 2 * d1 + d2)
        if rels < 0:
            raise PreconditionError("negative relation count", degree=i)
        degs.extend([i] * rels)
    return tuple(degs)


def is_ancestor_ideal_of(I: GradedIdeal, j: int) -> bool:
    """True iff I is the ancestor ideal of its own degree-j component."""
    gens = generator_degrees(I)
    rels = relation_degrees(I)
    return (not gens or max(gens) <= j) and (not rels or min(rels) >= j + 2)


def nu_min(H: OSequence) -> int:
    """Least number of generators of any ideal with Hilbert function H."""
    if H.is_zero_ideal:
        return 0
    mu = H.order()
    s = H.stabilization()
    total = 1 + H.e(mu)
    for i in range(mu, s + 2):
        step = H.e(i + 1) - H.e(i)
        if step > 0:
            total += step
    return total


def common_factor_split(I: GradedIdeal) -> tuple[BinaryForm, GradedIdeal]:
    """Write I = f·I' where f is the common factor of all components."""
    if I.is_zero or I.tail_gcd.degree == 0:
        raise PreconditionError("ideal has no common factor to split off")
    f = I.tail_gcd
    c = f.degree
    comps = []
    for i in range(I.window_lo, I.window_hi + 1):
        comp = I.component(i)
        if comp.is_zero:
            comps.append(zero_space(I.field, i - c))
        else:
            comps.append(
                span(I.field, i - c, [divide_form(b, f) for b in comp.basis_forms()])
            )
    J = graded_ideal(I.field, I.window_lo - c, comps, unit_form(I.field))
    return f, J


def same_ideal(I: GradedIdeal, J: GradedIdeal) -> bool:
    if I.field != J.field:
        return False
    if I.is_zero or J.is_zero:
        return I.is_zero and J.is_zero
    if monic(I.tail_gcd) != monic(J.tail_gcd):
        return False
    top = max(I.window_hi, J.window_hi)
    return all(I.component(i) == J.component(i) for i in range(top + 1))


# ── JSON ──────────────────────────────────────────────────────────────────────


def ideal_to_json(I: GradedIdeal) -> dict:
    from .spaces import space_to_json

    return {
        "field": I.field.name,
        "window": [I.window_lo, I.window_hi],
        "components": {
            str(i): space_to_json(I.component(i))
            for i in range(I.window_lo, I.window_hi + 1)
        },
        "tailGcd": None if I.tail_gcd is None else form_to_json(I.tail_gcd),
    }


def ideal_from_json(data: dict) -> GradedIdeal:
    from .spaces import space_from_json

    field = FieldSpec.from_name(data["field"])
    tail = None if data.get("tailGcd") is None else form_from_json(field, data["tailGcd"])
    lo, hi = data["window"]
    comps = [space_from_json(data["components"][str(i)], field) for i in range(lo, hi + 1)]
    if tail is None and not comps:
        return zero_ideal(field)
    return graded_ideal(field, lo, comps, tail)
