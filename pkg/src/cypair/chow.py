"""Finite cohomology-ring models with exact integration.

The supported family is deliberately closed: the point, projective spaces,
finite products, and iterated projective bundles P(N + 1) whose twisting
bundle N is described by its total Chern class on an already-modeled base.
Every model is a quotient presentation

    Q[g_1, ..., g_k] / (g_i^{cap_i + 1} - rewrite_i)

where each generator g_i has degree one, the basis consists of the
monomials with per-generator exponents bounded by the caps, and the
integration functional sends the volume monomial prod_i g_i^{cap_i} to 1
and every other basis monomial to 0.  Rewriting a monomial only ever
lowers the exponent of the generator being rewritten while touching
generators introduced earlier, so reduction terminates and the family is
confluent.

Chern classes of tangent bundles are carried along: (1+h)^{n+1} for
projective space, Whitney products across products, and the relative
Euler sequence for projective bundles.  `hrr_chi` integrates
Td(T) * ch(E) by evaluating the universal Todd polynomial from `symcalc`
at the model's tangent Chern classes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Mapping

from . import symcalc

Monomial = tuple[int, ...]


class ModelError(ValueError):
    """Raised for malformed model inputs or inconsistent model data."""


class RingModel:
    """A finite graded ring presentation with an integration functional."""

    def __init__(
        self,
        generators: tuple[str, ...],
        caps: tuple[int, ...],
        rewrites: Mapping[int, Mapping[Monomial, Fraction]],
        *,
        base: "RingModel | None" = None,
        fiber_rank: int | None = None,
    ):
        if len(generators) != len(caps):
            raise ModelError("one cap per generator required")
        if len(set(generators)) != len(generators):
            raise ModelError("generator names must be distinct")
        self.generators = generators
        self.caps = caps
        self.dim = sum(caps)
        self.rewrites = {i: dict(rule) for i, rule in rewrites.items()}
        self.base = base
        self.fiber_rank = fiber_rank
        self.integrals: dict[Monomial, Fraction] = {caps: Fraction(1)}
        self.tangent_chern: CohClass = self.one()  # set by the constructors
        self._todd: CohClass | None = None

    # -- class constructors ----------------------------------------------

    def zero(self) -> "CohClass":
        return CohClass(self, {}, reduced=True)

    def one(self) -> "CohClass":
        return self.constant(1)

    def constant(self, value) -> "CohClass":
        q = Fraction(value)
        if q == 0:
            return self.zero()
        return CohClass(self, {(0,) * len(self.generators): q}, reduced=True)

    def gen_class(self, which) -> "CohClass":
        """The degree-one class of a generator, by index or by name."""
        idx = which if isinstance(which, int) else self.generators.index(which)
        expo = tuple(1 if i == idx else 0 for i in range(len(self.generators)))
        return CohClass(self, {expo: Fraction(1)})

    def basis(self) -> list[Monomial]:
        """All basis monomials (exponents within the caps), sorted by degree."""
        from itertools import product as cartesian

        monomials = [
            tuple(expo) for expo in cartesian(*(range(c + 1) for c in self.caps))
        ]
        monomials.sort(key=lambda m: (sum(m), m))
        return monomials

    # -- monomial reduction ----------------------------------------------

    def reduce_terms(self, terms: Mapping[Monomial, Fraction]) -> dict[Monomial, Fraction]:
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in terms.items():
            if coeff:
                self._reduce_into(mono, Fraction(coeff), out)
        return {m: q for m, q in out.items() if q != 0}

    def _reduce_into(self, mono: Monomial, coeff: Fraction, out: dict) -> None:
        if sum(mono) > self.dim:
            return
        for i in reversed(range(len(mono))):
            if mono[i] > self.caps[i]:
                rule = self.rewrites.get(i)
                if rule is None:
                    return  # g_i^{cap+1} = 0
                rest = list(mono)
                rest[i] -= self.caps[i] + 1
                for rmono, rcoeff in rule.items():
                    merged = tuple(a + b for a, b in zip(rest, rmono))
                    self._reduce_into(merged, coeff * rcoeff, out)
                return
        out[mono] = out.get(mono, Fraction(0)) + coeff

    def __repr__(self):
        gens = ", ".join(
            f"{g}^{c + 1}" for g, c in zip(self.generators, self.caps)
        )
        return f"RingModel(dim {self.dim}; relations {gens or 'none'})"


class CohClass:
    """A cohomology class: an exact-coefficient combination of basis monomials."""

    __slots__ = ("model", "terms")

    def __init__(self, model: RingModel, terms: Mapping[Monomial, Fraction], *, reduced=False):
        self.model = model
        if reduced:
            self.terms = {m: Fraction(q) for m, q in terms.items() if q != 0}
        else:
            self.terms = model.reduce_terms(terms)

    def _same_model(self, other: "CohClass") -> None:
        if self.model is not other.model:
            raise ModelError("classes belong to different ring models")

    def __add__(self, other):
        if isinstance(other, CohClass):
            self._same_model(other)
            terms = dict(self.terms)
            for m, q in other.terms.items():
                terms[m] = terms.get(m, Fraction(0)) + q
            return CohClass(self.model, terms, reduced=True)
        return self + self.model.constant(other)

    __radd__ = __add__

    def __neg__(self):
        return CohClass(self.model, {m: -q for m, q in self.terms.items()}, reduced=True)

    def __sub__(self, other):
        if isinstance(other, CohClass):
            return self + (-other)
        return self + self.model.constant(-Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CohClass):
            self._same_model(other)
            raw: dict[Monomial, Fraction] = {}
            for ma, qa in self.terms.items():
                for mb, qb in other.terms.items():
                    key = tuple(a + b for a, b in zip(ma, mb))
                    raw[key] = raw.get(key, Fraction(0)) + qa * qb
            return CohClass(self.model, raw)
        q = Fraction(other)
        return CohClass(self.model, {m: c * q for m, c in self.terms.items()}, reduced=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = self.model.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        return (
            isinstance(other, CohClass)
            and self.model is other.model
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.model), frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def component(self, p: int) -> "CohClass":
        """The part of total degree p."""
        return CohClass(
            self.model,
            {m: q for m, q in self.terms.items() if sum(m) == p},
            reduced=True,
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        gens = self.model.generators
        bits = []
        for mono in sorted(self.terms, key=lambda m: (sum(m), m)):
            name = "*".join(
                f"{gens[i]}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mono)
                if e
            )
            q = self.terms[mono]
            bits.append(f"{q}" if not name else f"{q}*{name}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# model constructors
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def point() -> RingModel:
    model = RingModel((), (), {})
    model.tangent_chern = model.one()
    return model


@lru_cache(maxsize=None)
def projective_space(n: int) -> RingModel:
    """Q[h]/(h^{n+1}) with integral of h^n equal to 1 and c(T) = (1+h)^{n+1}."""
    if n < 0:
        raise ModelError("projective space dimension must be non-negative")
    if n == 0:
        return point()
    model = RingModel(("h",), (n,), {})
    h = model.gen_class(0)
    model.tangent_chern = (model.one() + h) ** (n + 1)
    return model


def _unique_names(taken: list[str], names: tuple[str, ...]) -> tuple[str, ...]:
    out = []
    for name in names:
        candidate = name
        suffix = 2
        while candidate in taken:
            candidate = f"{name}{suffix}"
            suffix += 1
        taken.append(candidate)
        out.append(candidate)
    return tuple(out)


def _pad_terms(terms, left: int, right: int):
    return {
        (0,) * left + mono + (0,) * right: q for mono, q in terms.items()
    }


def product(a: RingModel, b: RingModel) -> RingModel:
    """Tensor product of two models; integration and tangent classes multiply."""
    taken: list[str] = []
    names = _unique_names(taken, a.generators) + _unique_names(taken, b.generators)
    la, lb = len(a.generators), len(b.generators)
    rewrites: dict[int, dict[Monomial, Fraction]] = {}
    for i, rule in a.rewrites.items():
        rewrites[i] = _pad_terms(rule, 0, lb)
    for i, rule in b.rewrites.items():
        rewrites[la + i] = _pad_terms(rule, la, 0)
    model = RingModel(names, a.caps + b.caps, rewrites)
    ta = CohClass(model, _pad_terms(a.tangent_chern.terms, 0, lb), reduced=True)
    tb = CohClass(model, _pad_terms(b.tangent_chern.terms, la, 0), reduced=True)
    model.tangent_chern = ta * tb
    return model


def lift_from_base(model: RingModel, cls: CohClass) -> CohClass:
    """Pull a class on the base of a projective bundle back to the bundle."""
    if model.base is None:
        raise ModelError("model is not a projective bundle")
    if cls.model is not model.base:
        raise ModelError("class does not live on the bundle's base")
    return CohClass(model, _pad_terms(cls.terms, 0, 1), reduced=True)


def projective_bundle(base: RingModel, chern_n: CohClass, rank: int) -> RingModel:
    """The bundle P(N + trivial line) over `base`, with c(N) = `chern_n`.

    Adds one generator of degree one subject to the Grothendieck relation
    of N + 1; fibers are projective spaces of dimension `rank`, and the
    fiberwise integral of the top power of the new generator is 1.
    """
    if chern_n.model is not base:
        raise ModelError("chern_n must live on the base model")
    if rank < 1:
        raise ModelError("bundle rank must be at least 1")
    if chern_n.component(0) != base.one():
        raise ModelError("a total Chern class must have degree-0 part 1")
    for p in range(rank + 1, base.dim + 1):
        if not chern_n.component(p).is_zero():
            raise ModelError(
                f"total Chern class has a nonzero part in degree {p} > rank {rank}"
            )

    taken = list(base.generators)
    (xi_name,) = _unique_names(taken, ("xi",))
    names = base.generators + (xi_name,)
    nb = len(base.generators)
    rewrites: dict[int, dict[Monomial, Fraction]] = {
        i: _pad_terms(rule, 0, 1) for i, rule in base.rewrites.items()
    }
    # xi^{rank+1} = - sum_{i=1..rank} c_i(N) xi^{rank+1-i}
    relation: dict[Monomial, Fraction] = {}
    for i in range(1, rank + 1):
        for mono, q in chern_n.component(i).terms.items():
            relation[mono + (rank + 1 - i,)] = -q
    if relation:
        rewrites[nb] = relation
    model = RingModel(names, base.caps + (rank,), rewrites,
                      base=base, fiber_rank=rank)

    xi = model.gen_class(nb)
    # Relative tangent class c((N + 1) tensor O(1)) via the universal twist
    # formula for a rank rank+1 bundle with c_i = c_i(N).
    relative = model.zero()
    for k in range(0, rank + 2):
        for i in range(0, min(k, rank) + 1):
            ci = chern_n.component(i)
            if ci.is_zero():
                continue
            coeff = comb(rank + 1 - i, k - i)
            if coeff == 0:
                continue
            relative = relative + lift_from_base(model, ci) * (xi ** (k - i)) * coeff
    model.tangent_chern = lift_from_base(model, base.tangent_chern) * relative
    return model


def fiber_integrate(model: RingModel, cls: CohClass) -> CohClass:
    """Push a class on a projective bundle down to its base.

    Only the coefficient of the top fiber power survives: the pushforward
    of xi^k vanishes for k below the fiber rank and is 1 at the rank.
    """
    if model.base is None or model.fiber_rank is None:
        raise ModelError("model is not a projective bundle")
    if cls.model is not model:
        raise ModelError("class does not live on this bundle")
    nb = len(model.base.generators)
    out: dict[Monomial, Fraction] = {}
    for mono, q in cls.terms.items():
        if mono[nb] == model.fiber_rank:
            key = mono[:nb]
            out[key] = out.get(key, Fraction(0)) + q
    return CohClass(model.base, out)


# ---------------------------------------------------------------------------
# integration and Riemann-Roch
# ---------------------------------------------------------------------------


def integrate(cls: CohClass) -> Fraction:
    """Evaluate the integration functional; zero without a top-degree part."""
    total = Fraction(0)
    for mono, q in cls.terms.items():
        weight = cls.model.integrals.get(mono)
        if weight is not None:
            total += q * weight
    return total


def euler_characteristic(model: RingModel) -> int:
    """The integral of the top Chern class of the tangent bundle."""
    value = integrate(model.tangent_chern.component(model.dim))
    if value.denominator != 1:
        raise ModelError(
            f"Euler characteristic {value} is not an integer; model is inconsistent"
        )
    return int(value)


def adiabatic_coefficient(model: RingModel) -> Fraction:
    """dim * chi + the integral of c_1 c_{dim-1} of the tangent bundle.

    The coefficient that scales logarithmically in the collapsing-fiber
    limit of a trivial fibration; zero by convention on a point.
    """
    n = model.dim
    if n == 0:
        return Fraction(0)
    chi = euler_characteristic(model)
    c1 = model.tangent_chern.component(1)
    top_minus = model.tangent_chern.component(n - 1)
    return n * chi + integrate(c1 * top_minus)


def evaluate_chern_series(series: symcalc.ChernSeries, total_chern: CohClass) -> CohClass:
    """Evaluate a universal polynomial in c_1..c_m at actual Chern classes."""
    model = total_chern.model
    components = [total_chern.component(k) for k in range(series.num_roots + 1)]
    powers: dict[tuple[int, int], CohClass] = {}

    def power(k: int, e: int) -> CohClass:
        key = (k, e)
        if key not in powers:
            powers[key] = components[k] ** e
        return powers[key]

    result = model.zero()
    for expo, q in series.terms.items():
        if sum((k + 1) * e for k, e in enumerate(expo)) > model.dim:
            continue
        acc = model.constant(q)
        for k, e in enumerate(expo, start=1):
            if e:
                acc = acc * power(k, e)
        result = result + acc
    return result


def todd_class(model: RingModel) -> CohClass:
    """Td of the tangent bundle, as a class on the model."""
    if model._todd is None:
        if model.dim == 0:
            model._todd = model.one()
        else:
            universal = symcalc.todd(model.dim, model.dim)
            model._todd = evaluate_chern_series(universal, model.tangent_chern)
    return model._todd


def hrr_chi(model: RingModel, ch_sheaf: CohClass) -> Fraction:
    """The Riemann-Roch Euler characteristic: integral of Td(T) * ch."""
    if ch_sheaf.model is not model:
        raise ModelError("ch class does not live on this model")
    rank = integrate_degree_zero(ch_sheaf)
    if rank.denominator != 1:
        raise ModelError(f"ch has non-integral rank {rank}")
    return integrate(todd_class(model) * ch_sheaf)


def integrate_degree_zero(cls: CohClass) -> Fraction:
    zero_mono = (0,) * len(cls.model.generators)
    return cls.terms.get(zero_mono, Fraction(0))


def ch_line(model: RingModel, divisor: CohClass) -> CohClass:
    """Chern character exp(D) of a line bundle with first Chern class D."""
    if divisor.model is not model:
        raise ModelError("divisor class does not live on this model")
    result = model.zero()
    power = model.one()
    for k in range(model.dim + 1):
        result = result + power * Fraction(1, factorial(k))
        power = power * divisor
    return result


def ch_cotangent_exterior(model: RingModel, p: int) -> CohClass:
    """ch of the p-th exterior power of the cotangent bundle."""
    if not 0 <= p <= model.dim:
        raise ValueError(f"exterior power {p} out of range 0..{model.dim}")
    if model.dim == 0:
        return model.one() if p == 0 else model.zero()
    universal = symcalc.ch_exterior(model.dim, p, model.dim)
    return evaluate_chern_series(universal, model.tangent_chern)


def chi_twisted_hodge(n: int, p: int, s: int) -> Fraction:
    """chi of projective n-space with values in Omega^p twisted by O(s)."""
    if not 0 <= p <= n:
        raise ValueError(f"form degree {p} out of range 0..{n}")
    model = projective_space(n)
    sheaf = ch_cotangent_exterior(model, p)
    if n > 0 and s != 0:
        sheaf = sheaf * ch_line(model, model.gen_class(0) * s)
    return hrr_chi(model, sheaf)
