"""Exact truncated series calculus in Chern roots and Chern classes.

Series live in one of two graded coordinate systems:

* root coordinates: polynomials in formal Chern roots x_1, ..., x_m,
  graded by total degree and truncated at a fixed order;
* Chern coordinates: polynomials in the classes c_1, ..., c_m, where c_k
  is the k-th elementary symmetric polynomial of the roots, graded by the
  weighted degree sum(k * e_k) of a monomial c_1^{e_1} * ... * c_m^{e_m}.

All coefficients are `fractions.Fraction`; nothing here ever rounds.
Series are sparse maps from exponent vectors to coefficients with zero
entries pruned, so equality is plain dictionary equality and a zero
series is an empty map.

Generators implemented here:

* the Todd series prod_j x_j / (1 - exp(-x_j));
* its derivative under a uniform shift of all roots x_j -> x_j + t,
  evaluated with a nilpotent shift variable (t^2 = 0);
* the Chern characters of exterior powers of the dual bundle, packaged by
  the generating function prod_j (1 - t * exp(-x_j)).

`verify_total_class_identities` and `verify_shifted_class_identities`
multiply these generators out and return the residuals of the five
closed-form identities they satisfy; a residual is an ordinary result, so
a nonzero residual is reported, not raised.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

Exponents = tuple[int, ...]
Coeffs = Mapping[Exponents, Fraction]

#: Largest number of roots the identity-verification entry points accept by
#: default.  Cost grows with the number of partitions of the truncation
#: order, so the bound is a guard rail, not a hard limit.
MAX_VERIFY_ROOTS = 8


class SymmetryError(ValueError):
    """Raised when a root series claimed to be symmetric is not."""


def _clean(terms: dict[Exponents, Fraction]) -> dict[Exponents, Fraction]:
    return {e: q for e, q in terms.items() if q != 0}


class RootSeries:
    """Sparse polynomial in the roots x_1..x_m, truncated by total degree.

    Instances are immutable after construction; every operation returns a
    new series.  Addition and multiplication truncate at the smaller of
    the two operand orders.
    """

    __slots__ = ("num_roots", "order", "terms")

    def __init__(self, num_roots: int, order: int, terms: Coeffs | None = None):
        if num_roots < 0 or order < 0:
            raise ValueError("num_roots and order must be non-negative")
        self.num_roots = num_roots
        self.order = order
        clean: dict[Exponents, Fraction] = {}
        for expo, q in (terms or {}).items():
            if len(expo) != num_roots:
                raise ValueError(f"exponent vector {expo} has wrong length")
            if sum(expo) > order:
                continue
            q = Fraction(q)
            if q != 0:
                clean[expo] = q
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, num_roots: int, order: int) -> "RootSeries":
        return cls(num_roots, order)

    @classmethod
    def constant(cls, num_roots: int, order: int, value) -> "RootSeries":
        return cls(num_roots, order, {(0,) * num_roots: Fraction(value)})

    @classmethod
    def variable(cls, num_roots: int, order: int, j: int) -> "RootSeries":
        """The single root x_{j+1} (0-indexed j)."""
        if not 0 <= j < num_roots:
            raise ValueError(f"root index {j} out of range for {num_roots} roots")
        expo = tuple(1 if i == j else 0 for i in range(num_roots))
        return cls(num_roots, order, {expo: Fraction(1)})

    @classmethod
    def from_univariate(
        cls, num_roots: int, order: int, j: int, coeffs: Iterable
    ) -> "RootSeries":
        """Substitute the root x_{j+1} into a one-variable series."""
        if not 0 <= j < num_roots:
            raise ValueError(f"root index {j} out of range for {num_roots} roots")
        terms = {}
        for k, q in enumerate(coeffs):
            if k > order:
                break
            expo = tuple(k if i == j else 0 for i in range(num_roots))
            terms[expo] = Fraction(q)
        return cls(num_roots, order, terms)

    # -- arithmetic ------------------------------------------------------

    def _compatible(self, other: "RootSeries") -> int:
        if self.num_roots != other.num_roots:
            raise ValueError("root series live over different root counts")
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, RootSeries):
            order = self._compatible(other)
            terms = dict(self.terms)
            for e, q in other.terms.items():
                terms[e] = terms.get(e, Fraction(0)) + q
            return RootSeries(self.num_roots, order, _clean(terms))
        return self + RootSeries.constant(self.num_roots, self.order, other)

    __radd__ = __add__

    def __neg__(self):
        return RootSeries(
            self.num_roots, self.order, {e: -q for e, q in self.terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, RootSeries):
            return self + (-other)
        return self + (-Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RootSeries):
            order = self._compatible(other)
            a, b = self.terms, other.terms
            if len(b) < len(a):
                a, b = b, a
            graded_b = sorted(((sum(eb), eb, qb) for eb, qb in b.items()))
            out: dict[Exponents, Fraction] = {}
            for ea, qa in a.items():
                da = sum(ea)
                for db, eb, qb in graded_b:
                    if da + db > order:
                        break
                    e = tuple(x + y for x, y in zip(ea, eb))
                    out[e] = out.get(e, Fraction(0)) + qa * qb
            return RootSeries(self.num_roots, order, _clean(out))
        q = Fraction(other)
        return RootSeries(
            self.num_roots, self.order, {e: c * q for e, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, RootSeries)
            and self.num_roots == other.num_roots
            and self.order == other.order
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_roots, self.order, frozenset(self.terms.items())))

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def truncate(self, order: int) -> "RootSeries":
        if order >= self.order:
            return RootSeries(self.num_roots, order, self.terms)
        return RootSeries(
            self.num_roots, order, {e: q for e, q in self.terms.items() if sum(e) <= order}
        )

    def degree_part(self, p) -> "RootSeries":
        """Extract the homogeneous part of degree p, or of a range of degrees."""
        degrees = range(p, p + 1) if isinstance(p, int) else p
        return RootSeries(
            self.num_roots,
            self.order,
            {e: q for e, q in self.terms.items() if sum(e) in degrees},
        )

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.num_roots, Fraction(0))

    def inverse(self) -> "RootSeries":
        """Multiplicative inverse, by recursion on homogeneous degree.

        Requires a nonzero constant term.
        """
        c0 = self.constant_term()
        if c0 == 0:
            raise ValueError("series with zero constant term is not invertible")
        homog = [self.degree_part(d) for d in range(self.order + 1)]
        inv = [RootSeries.constant(self.num_roots, self.order, 1 / c0)]
        for d in range(1, self.order + 1):
            acc = RootSeries.zero(self.num_roots, self.order)
            for k in range(1, d + 1):
                acc = acc + homog[k] * inv[d - k]
            inv.append(acc * (-1 / c0))
        total = RootSeries.zero(self.num_roots, self.order)
        for part in inv:
            total = total + part
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for expo in sorted(self.terms, key=lambda e: (sum(e), e)):
            mono = "*".join(
                f"x{i + 1}" + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(expo)
                if k
            )
            q = self.terms[expo]
            bits.append(f"{q}" if not mono else f"{q}*{mono}")
        return " + ".join(bits)


def _weighted_degree(expo: Exponents) -> int:
    return sum((k + 1) * e for k, e in enumerate(expo))


class ChernSeries:
    """Sparse polynomial in c_1..c_m, truncated by weighted degree.

    The exponent vector (e_1, ..., e_m) stands for c_1^{e_1} ... c_m^{e_m}
    and has weighted degree sum(k * e_k), matching the degree of its root
    expansion.  Expanding to roots and re-symmetrizing is the identity.
    """

    __slots__ = ("num_roots", "order", "terms")

    def __init__(self, num_roots: int, order: int, terms: Coeffs | None = None):
        if num_roots < 0 or order < 0:
            raise ValueError("num_roots and order must be non-negative")
        self.num_roots = num_roots
        self.order = order
        clean: dict[Exponents, Fraction] = {}
        for expo, q in (terms or {}).items():
            if len(expo) != num_roots:
                raise ValueError(f"exponent vector {expo} has wrong length")
            if _weighted_degree(expo) > order:
                continue
            q = Fraction(q)
            if q != 0:
                clean[expo] = q
        self.terms = clean

    @classmethod
    def zero(cls, num_roots: int, order: int) -> "ChernSeries":
        return cls(num_roots, order)

    @classmethod
    def constant(cls, num_roots: int, order: int, value) -> "ChernSeries":
        return cls(num_roots, order, {(0,) * num_roots: Fraction(value)})

    @classmethod
    def chern_class(cls, num_roots: int, order: int, k: int) -> "ChernSeries":
        """The single class c_k; c_0 is the constant 1."""
        if not 0 <= k <= num_roots:
            raise ValueError(f"c_{k} undefined with {num_roots} roots")
        if k == 0:
            return cls.constant(num_roots, order, 1)
        expo = tuple(1 if i == k - 1 else 0 for i in range(num_roots))
        return cls(num_roots, order, {expo: Fraction(1)})

    def _compatible(self, other: "ChernSeries") -> int:
        if self.num_roots != other.num_roots:
            raise ValueError("series live over different root counts")
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, ChernSeries):
            order = self._compatible(other)
            terms = dict(self.terms)
            for e, q in other.terms.items():
                terms[e] = terms.get(e, Fraction(0)) + q
            return ChernSeries(self.num_roots, order, _clean(terms))
        return self + ChernSeries.constant(self.num_roots, self.order, other)

    __radd__ = __add__

    def __neg__(self):
        return ChernSeries(
            self.num_roots, self.order, {e: -q for e, q in self.terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, ChernSeries):
            return self + (-other)
        return self + (-Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ChernSeries):
            order = self._compatible(other)
            out: dict[Exponents, Fraction] = {}
            for ea, qa in self.terms.items():
                da = _weighted_degree(ea)
                for eb, qb in other.terms.items():
                    if da + _weighted_degree(eb) > order:
                        continue
                    e = tuple(x + y for x, y in zip(ea, eb))
                    out[e] = out.get(e, Fraction(0)) + qa * qb
            return ChernSeries(self.num_roots, order, _clean(out))
        q = Fraction(other)
        return ChernSeries(
            self.num_roots, self.order, {e: c * q for e, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, ChernSeries)
            and self.num_roots == other.num_roots
            and self.order == other.order
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_roots, self.order, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def truncate(self, order: int) -> "ChernSeries":
        if order >= self.order:
            return ChernSeries(self.num_roots, order, self.terms)
        return ChernSeries(
            self.num_roots,
            order,
            {e: q for e, q in self.terms.items() if _weighted_degree(e) <= order},
        )

    def degree_part(self, p) -> "ChernSeries":
        """Extract the weighted-degree-p part, or a range of degrees."""
        degrees = range(p, p + 1) if isinstance(p, int) else p
        return ChernSeries(
            self.num_roots,
            self.order,
            {e: q for e, q in self.terms.items() if _weighted_degree(e) in degrees},
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for expo in sorted(self.terms, key=lambda e: (_weighted_degree(e), e)):
            mono = "*".join(
                f"c{k + 1}" + (f"^{e}" if e > 1 else "")
                for k, e in enumerate(expo)
                if e
            )
            q = self.terms[expo]
            bits.append(f"{q}" if not mono else f"{q}*{mono}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# basis conversion
# ---------------------------------------------------------------------------


def elementary_symmetric(num_roots: int, k: int, order: int | None = None) -> RootSeries:
    """The elementary symmetric polynomial e_k(x_1, ..., x_m).

    `order` defaults to k, the degree of e_k itself; a smaller explicit
    order truncates the result away entirely.
    """
    if not 0 <= k <= num_roots:
        raise ValueError(
            f"elementary symmetric index {k} out of range 0..{num_roots}"
        )
    if order is None:
        order = k
    terms: dict[Exponents, Fraction] = {}
    for subset in itertools.combinations(range(num_roots), k):
        expo = tuple(1 if i in subset else 0 for i in range(num_roots))
        terms[expo] = Fraction(1)
    return RootSeries(num_roots, order, terms)


@lru_cache(maxsize=None)
def _elementary_cached(num_roots: int, k: int) -> RootSeries:
    return elementary_symmetric(num_roots, k, order=k)


def expand_to_roots(series: ChernSeries, order: int | None = None) -> RootSeries:
    """Substitute c_k = e_k(x) into a Chern-basis series."""
    if order is None:
        order = series.order
    m = series.num_roots
    total = RootSeries.zero(m, order)
    for expo, q in series.terms.items():
        acc = RootSeries.constant(m, order, q)
        for k, e in enumerate(expo, start=1):
            if not e:
                continue
            ek = _elementary_cached(m, k).truncate(order)
            for _ in range(e):
                acc = acc * ek
        total = total + acc
    return total


def _check_symmetric(series: RootSeries) -> None:
    m = series.num_roots
    for i in range(m - 1):
        for expo, q in series.terms.items():
            swapped = list(expo)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            other = series.terms.get(tuple(swapped), Fraction(0))
            if other != q:
                raise SymmetryError(
                    f"series is not symmetric: swapping x{i + 1} and x{i + 2} "
                    f"sends the coefficient of {expo} from {q} to {other}"
                )


def symmetrize_to_chern(series: RootSeries) -> ChernSeries:
    """Rewrite a symmetric root series in the Chern-class basis.

    Uses the classical leading-term reduction: the lex-largest monomial of
    a symmetric polynomial has non-increasing exponents (a_1, ..., a_m) and
    is the leading monomial of c_1^{a_1-a_2} ... c_{m-1}^{a_{m-1}-a_m} c_m^{a_m}.
    Raises SymmetryError, naming a violating transposition, if the input is
    not invariant under all root permutations.
    """
    _check_symmetric(series)
    m, order = series.num_roots, series.order
    work = dict(series.terms)
    out: dict[Exponents, Fraction] = {}
    while work:
        alpha = max(work)
        if any(alpha[i] < alpha[i + 1] for i in range(m - 1)):
            raise SymmetryError(
                f"leading monomial {alpha} has increasing exponents; "
                "series is not symmetric"
            )
        coeff = work[alpha]
        cexpo = tuple(
            alpha[k] - alpha[k + 1] if k < m - 1 else alpha[k] for k in range(m)
        )
        out[cexpo] = out.get(cexpo, Fraction(0)) + coeff
        expansion = expand_to_roots(
            ChernSeries(m, order, {cexpo: Fraction(1)}), order
        )
        for e, q in expansion.terms.items():
            val = work.get(e, Fraction(0)) - coeff * q
            if val == 0:
                work.pop(e, None)
            else:
                work[e] = val
    return ChernSeries(m, order, out)


# ---------------------------------------------------------------------------
# univariate building blocks
# ---------------------------------------------------------------------------


def _exp_neg_coeffs(order: int) -> list[Fraction]:
    """Taylor coefficients of exp(-x) through degree `order`."""
    out = [Fraction(1)]
    fact = 1
    for k in range(1, order + 1):
        fact *= k
        out.append(Fraction((-1) ** k, fact))
    return out


def _todd_factor_coeffs(order: int) -> list[Fraction]:
    """Taylor coefficients of x / (1 - exp(-x)) through degree `order`.

    Computed by exact power-series division: (1 - exp(-x))/x has constant
    term 1, and the inverse follows from the convolution recurrence.  This
    is where all the Bernoulli-type denominators enter.
    """
    g = [Fraction((-1) ** k, 1) for k in range(order + 1)]
    fact = 1
    for k in range(order + 1):
        fact = fact * (k + 1)
        g[k] /= fact  # g_k = (-1)^k / (k+1)!
    h = [Fraction(1)]
    for n in range(1, order + 1):
        h.append(-sum(g[k] * h[n - k] for k in range(1, n + 1)))
    return h


def _derivative_coeffs(coeffs: list[Fraction]) -> list[Fraction]:
    return [k * coeffs[k] for k in range(1, len(coeffs))]


# ---------------------------------------------------------------------------
# genus generators
# ---------------------------------------------------------------------------


def todd_roots(num_roots: int, order: int) -> RootSeries:
    """The Todd series prod_j x_j / (1 - exp(-x_j)) in root coordinates."""
    if num_roots < 1:
        raise ValueError("Todd series needs at least one root")
    factor = _todd_factor_coeffs(order)
    acc = RootSeries.constant(num_roots, order, 1)
    for j in range(num_roots):
        acc = acc * RootSeries.from_univariate(num_roots, order, j, factor)
    return acc


@lru_cache(maxsize=None)
def todd(num_roots: int, order: int) -> ChernSeries:
    """The Todd series in the Chern-class basis."""
    return symmetrize_to_chern(todd_roots(num_roots, order))


def todd_prime_roots(num_roots: int, order: int) -> RootSeries:
    """Derivative of Todd under the uniform root shift x_j -> x_j + t.

    Evaluated literally with a nilpotent shift variable: each factor
    becomes h(x_j) + t * h'(x_j) with t^2 = 0, the factors are multiplied
    as dual numbers, and the t-coefficient of the product is returned.
    """
    if num_roots < 1:
        raise ValueError("Todd series needs at least one root")
    base = _todd_factor_coeffs(order + 1)
    deriv = _derivative_coeffs(base)
    value = RootSeries.constant(num_roots, order, 1)
    slope = RootSeries.zero(num_roots, order)
    for j in range(num_roots):
        aj = RootSeries.from_univariate(num_roots, order, j, base[: order + 1])
        bj = RootSeries.from_univariate(num_roots, order, j, deriv)
        value, slope = value * aj, value * bj + slope * aj
    return slope


@lru_cache(maxsize=None)
def todd_prime(num_roots: int, order: int) -> ChernSeries:
    """The shifted-Todd derivative in the Chern-class basis."""
    return symmetrize_to_chern(todd_prime_roots(num_roots, order))


def shift_derivative(series: RootSeries) -> RootSeries:
    """d/dt of series(x_1 + t, ..., x_m + t) at t = 0, i.e. sum_j d/dx_j.

    Same uniform-shift derivative that defines the shifted Todd series;
    exposed so callers can apply it to other symmetric series (for
    instance the elementary symmetric polynomials).
    """
    m = series.num_roots
    out: dict[Exponents, Fraction] = {}
    for expo, q in series.terms.items():
        for j in range(m):
            if expo[j] == 0:
                continue
            e = list(expo)
            e[j] -= 1
            key = tuple(e)
            out[key] = out.get(key, Fraction(0)) + q * expo[j]
    return RootSeries(m, series.order, _clean(out))


@lru_cache(maxsize=None)
def _exterior_levels(num_roots: int, order: int) -> tuple[RootSeries, ...]:
    """e_r(exp(-x_1), ..., exp(-x_m)) for every r at once, by one pass of
    the elementary-symmetric recurrence over the factors."""
    expo = _exp_neg_coeffs(order)
    levels = [RootSeries.constant(num_roots, order, 1)] + [
        RootSeries.zero(num_roots, order) for _ in range(num_roots)
    ]
    for j in range(num_roots):
        uj = RootSeries.from_univariate(num_roots, order, j, expo)
        for k in range(min(num_roots, j + 1), 0, -1):
            levels[k] = levels[k] + levels[k - 1] * uj
    return tuple(levels)


def ch_exterior_roots(num_roots: int, r: int, order: int) -> RootSeries:
    """Chern character of the r-th exterior power of the dual bundle.

    Equals e_r(exp(-x_1), ..., exp(-x_m)), the coefficient of (-t)^r in
    prod_j (1 - t * exp(-x_j)); r = 0 gives the constant 1.
    """
    if not 0 <= r <= num_roots:
        raise ValueError(f"exterior power {r} out of range 0..{num_roots}")
    return _exterior_levels(num_roots, order)[r]


@lru_cache(maxsize=None)
def ch_exterior(num_roots: int, r: int, order: int) -> ChernSeries:
    """ch of the r-th exterior power of the dual bundle, in the c-basis."""
    return symmetrize_to_chern(ch_exterior_roots(num_roots, r, order))


def degree_part(series, p):
    """Extract the degree-p component {.}^[p], or a range of degrees."""
    return series.degree_part(p)


def embed_roots(series: RootSeries, num_roots: int, offset: int = 0) -> RootSeries:
    """View a series in m roots inside a larger root set, shifted by offset."""
    if offset < 0 or offset + series.num_roots > num_roots:
        raise ValueError("embedded roots do not fit in the target root set")
    pad_left = (0,) * offset
    pad_right = (0,) * (num_roots - offset - series.num_roots)
    terms = {pad_left + e + pad_right: q for e, q in series.terms.items()}
    return RootSeries(num_roots, series.order, terms)


# ---------------------------------------------------------------------------
# identity verification
# ---------------------------------------------------------------------------


def _guard_verify_roots(m: int, max_roots: int | None) -> None:
    limit = MAX_VERIFY_ROOTS if max_roots is None else max_roots
    if not 1 <= m <= limit:
        raise ValueError(f"number of roots must lie in 1..{limit}, got {m}")


def _alternating_sum(num_roots: int, order: int, weight) -> RootSeries:
    total = RootSeries.zero(num_roots, order)
    for r in range(num_roots + 1):
        w = weight(r)
        if w == 0:
            continue
        total = total + ch_exterior_roots(num_roots, r, order) * w
    return total


def verify_total_class_identities(
    m: int, *, order: int | None = None, max_roots: int | None = None
) -> tuple[ChernSeries, ChernSeries, ChernSeries]:
    """Residuals of the three Todd / exterior-character identities.

    With S_w = sum_r (-1)^r w(r) ch of the r-th exterior dual power:

      (i)   Td * S_1                 =  c_m               (all degrees);
      (ii)  {Td * S_r}^[<= m]        = -c_{m-1} + (m/2) c_m;
      (iii) {Td * S_{r(r-1)}}^[m]    =  (1/6) c_1 c_{m-1} + m(3m-5)/12 c_m.

    Identity (i) is exact in every degree; it is checked at truncation
    `order` (default m + 2, so two degrees beyond the interesting window
    guard against truncation bugs).  Identities (ii) and (iii) are
    restricted to their stated degree windows.  Returns LHS - RHS for
    each; all-zero results mean the identities hold.
    """
    _guard_verify_roots(m, max_roots)
    wide = m + 2 if order is None else max(order, m)
    td_wide = todd_roots(m, wide)
    td = td_wide.truncate(m)

    s0 = _alternating_sum(m, wide, lambda r: Fraction((-1) ** r))
    lhs1 = td_wide * s0
    rhs1 = elementary_symmetric(m, m, wide)
    res1 = symmetrize_to_chern(lhs1 - rhs1)

    s1 = _alternating_sum(m, m, lambda r: Fraction((-1) ** r * r))
    lhs2 = (td * s1).degree_part(range(0, m + 1))
    rhs2 = -elementary_symmetric(m, m - 1, m) + elementary_symmetric(m, m, m) * Fraction(m, 2)
    res2 = symmetrize_to_chern(lhs2 - rhs2)

    s2 = _alternating_sum(m, m, lambda r: Fraction((-1) ** r * r * (r - 1)))
    lhs3 = (td * s2).degree_part(m)
    rhs3 = (
        elementary_symmetric(m, 1, m) * elementary_symmetric(m, m - 1, m) * Fraction(1, 6)
        + elementary_symmetric(m, m, m) * Fraction(m * (3 * m - 5), 12)
    ).degree_part(m)
    res3 = symmetrize_to_chern(lhs3 - rhs3)

    return res1, res2, res3


def verify_shifted_class_identities(
    m: int, *, max_roots: int | None = None
) -> tuple[ChernSeries, ChernSeries]:
    """Residuals of the two shifted-Todd identities.

      (i)  {Td' * S_1}^[m] = (m/2) c_m;
      (ii) {Td' * S_r}^[m] = (1/12) c_1 c_{m-1} + (m^2/4) c_m.

    Returns LHS - RHS in the stated top-degree window for each.
    """
    _guard_verify_roots(m, max_roots)
    tdp = todd_prime_roots(m, m)

    s0 = _alternating_sum(m, m, lambda r: Fraction((-1) ** r))
    lhs1 = (tdp * s0).degree_part(m)
    rhs1 = (elementary_symmetric(m, m, m) * Fraction(m, 2)).degree_part(m)
    res1 = symmetrize_to_chern(lhs1 - rhs1)

    s1 = _alternating_sum(m, m, lambda r: Fraction((-1) ** r * r))
    lhs2 = (tdp * s1).degree_part(m)
    rhs2 = (
        elementary_symmetric(m, 1, m) * elementary_symmetric(m, m - 1, m) * Fraction(1, 12)
        + elementary_symmetric(m, m, m) * Fraction(m * m, 4)
    ).degree_part(m)
    res2 = symmetrize_to_chern(lhs2 - rhs2)

    return res1, res2
