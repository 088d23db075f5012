"""Exact sparse Laurent polynomial arithmetic over the rationals.

Polynomials live in Q[z1^±1, .., zd^±1, lam] where ``lam`` is an ordinary
nonnegative-exponent variable reserved for the spectral parameter.  A term
is keyed by the exponent tuple ``(a_1, .., a_d, b)`` with the lam exponent
``b`` last.  Coefficients are `fractions.Fraction`; floats are rejected so
that divisibility questions stay decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


def _coerce(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("float coefficients are not allowed; use Fraction or int")
    return Fraction(value)


class LaurentPoly:
    """Immutable sparse Laurent polynomial in z1..zd and lam."""

    __slots__ = ("dimension", "_terms")

    def __init__(self, dimension: int, terms: Mapping[Exponent, object] | None = None):
        if dimension < 0:
            raise ValueError("dimension must be nonnegative")
        clean: dict[Exponent, Fraction] = {}
        for key, value in (terms or {}).items():
            key = tuple(int(e) for e in key)
            if len(key) != dimension + 1:
                raise ValueError(
                    f"exponent {key!r} has length {len(key)}, expected {dimension + 1}"
                )
            if key[-1] < 0:
                raise ValueError(f"negative lam exponent in {key!r}")
            coeff = _coerce(value)
            if coeff:
                clean[key] = coeff
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, dimension: int) -> "LaurentPoly":
        return cls(dimension, {})

    @classmethod
    def constant(cls, dimension: int, value) -> "LaurentPoly":
        return cls(dimension, {(0,) * (dimension + 1): value})

    @classmethod
    def monomial(cls, dimension: int, z_exponents: Sequence[int], lam_exponent: int = 0,
                 coeff=1) -> "LaurentPoly":
        key = tuple(z_exponents) + (lam_exponent,)
        return cls(dimension, {key: coeff})

    @classmethod
    def z_var(cls, dimension: int, axis: int, power: int = 1) -> "LaurentPoly":
        exps = [0] * dimension
        exps[axis] = power
        return cls.monomial(dimension, exps)

    @classmethod
    def lam(cls, dimension: int) -> "LaurentPoly":
        return cls.monomial(dimension, (0,) * dimension, 1)

    # -- queries ---------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> frozenset[Exponent]:
        return frozenset(self._terms)

    def coefficient(self, key: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(key), Fraction(0))

    @property
    def lam_degree(self) -> int:
        """Degree in lam; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(key[-1] for key in self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.dimension == other.dimension and self._terms == other._terms

    def __hash__(self):
        return hash((self.dimension, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations -------------------------------------------------
    def _check_dim(self, other: "LaurentPoly") -> None:
        if self.dimension != other.dimension:
            raise ValueError(
                f"dimension mismatch: {self.dimension} vs {other.dimension}"
            )

    def __add__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.dimension, other)
        self._check_dim(other)
        terms = dict(self._terms)
        for key, value in other._terms.items():
            acc = terms.get(key, Fraction(0)) + value
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
        return LaurentPoly(self.dimension, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.dimension, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.dimension, other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check_dim(other)
        terms: dict[Exponent, Fraction] = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                key = tuple(a + b for a, b in zip(ka, kb))
                acc = terms.get(key, Fraction(0)) + va * vb
                if acc:
                    terms[key] = acc
                else:
                    terms.pop(key, None)
        return LaurentPoly(self.dimension, terms)

    def __rmul__(self, other) -> "LaurentPoly":
        return self.scale(other)

    def scale(self, scalar) -> "LaurentPoly":
        scalar = _coerce(scalar)
        if not scalar:
            return LaurentPoly.zero(self.dimension)
        return LaurentPoly(self.dimension, {k: v * scalar for k, v in self._terms.items()})

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            raise ValueError("negative powers of polynomials are not supported")
        result = LaurentPoly.constant(self.dimension, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, z_offsets: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial z^z_offsets."""
        off = tuple(z_offsets) + (0,)
        return LaurentPoly(
            self.dimension,
            {tuple(a + b for a, b in zip(k, off)): v for k, v in self._terms.items()},
        )

    # -- lam-directed operations ----------------------------------------
    def lam_coefficient(self, power: int) -> "LaurentPoly":
        """Coefficient of lam^power, as a polynomial in z only."""
        terms = {
            key[:-1] + (0,): value
            for key, value in self._terms.items()
            if key[-1] == power
        }
        return LaurentPoly(self.dimension, terms)

    def substitute_lam(self, value) -> "LaurentPoly":
        """Exact substitution lam := value (a rational)."""
        value = _coerce(value)
        terms: dict[Exponent, Fraction] = {}
        for key, coeff in self._terms.items():
            new = key[:-1] + (0,)
            acc = terms.get(new, Fraction(0)) + coeff * value ** key[-1]
            if acc:
                terms[new] = acc
            else:
                terms.pop(new, None)
        return LaurentPoly(self.dimension, terms)

    def divide_by_linear(self, root) -> "LaurentPoly":
        """Exact quotient by (lam - root); requires root to be a lam-root.

        Synthetic division over the z-Laurent coefficient ring, highest lam
        power first.  Raises ValueError when the remainder is nonzero.
        """
        root = _coerce(root)
        if self.is_zero:
            return self
        degree = self.lam_degree
        coeffs = [self.lam_coefficient(b) for b in range(degree + 1)]
        quotient: dict[Exponent, Fraction] = {}
        carry = LaurentPoly.zero(self.dimension)
        for b in range(degree, 0, -1):
            carry = coeffs[b] + carry.scale(root) if b < degree else coeffs[b]
            for key, value in carry._terms.items():
                quotient[key[:-1] + (b - 1,)] = value
        remainder = coeffs[0] + carry.scale(root)
        if not remainder.is_zero:
            raise ValueError(f"{root} is not a root: nonzero remainder {remainder}")
        return LaurentPoly(self.dimension, quotient)

    def negate_z(self) -> "LaurentPoly":
        """Replace every z-exponent vector a by -a (lam untouched)."""
        return LaurentPoly(
            self.dimension,
            {tuple(-e for e in k[:-1]) + (k[-1],): v for k, v in self._terms.items()},
        )

    # -- formatting ------------------------------------------------------
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly(d={self.dimension}, {format_poly(self)})"


@dataclass(frozen=True)
class WeightVector:
    """Integer weight vector of length d+1; the last entry weights lam."""

    components: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(int(c) for c in self.components))

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    @property
    def lam_weight(self) -> int:
        return self.components[-1]

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.components)


def facial_polynomial(poly: LaurentPoly, weights: Sequence[int] | WeightVector) -> LaurentPoly:
    """Sub-sum of ``poly`` over the support points minimizing the weight.

    The zero weight vector returns ``poly`` itself (the whole polytope is
    the face).  The zero polynomial has no faces and is rejected.
    """
    if poly.is_zero:
        raise ValueError("the zero polynomial has no facial polynomials")
    w = tuple(weights)
    if len(w) != poly.dimension + 1:
        raise ValueError(f"weight vector length {len(w)} != {poly.dimension + 1}")
    best = min(sum(c * e for c, e in zip(w, key)) for key in poly._terms)
    terms = {
        key: value
        for key, value in poly._terms.items()
        if sum(c * e for c, e in zip(w, key)) == best
    }
    return LaurentPoly(poly.dimension, terms)


# ---------------------------------------------------------------------------
# matrices and determinants


class LaurentMatrix:
    """Square matrix of LaurentPoly entries sharing one dimension."""

    __slots__ = ("entries", "size", "dimension")

    def __init__(self, entries: Iterable[Iterable[LaurentPoly]]):
        rows = tuple(tuple(row) for row in entries)
        if not rows:
            raise ValueError("matrix must be nonempty")
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
        dim = rows[0][0].dimension
        for row in rows:
            for entry in row:
                if entry.dimension != dim:
                    raise ValueError("all entries must share one dimension")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "size", n)
        object.__setattr__(self, "dimension", dim)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentMatrix is immutable")

    def __getitem__(self, index):
        return self.entries[index]

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.entries == other.entries

    def minus_lam_identity(self) -> "LaurentMatrix":
        lam = LaurentPoly.lam(self.dimension)
        return LaurentMatrix(
            tuple(
                tuple(e - lam if i == j else e for j, e in enumerate(row))
                for i, row in enumerate(self.entries)
            )
        )


def det_leibniz(matrix: LaurentMatrix) -> LaurentPoly:
    """Determinant by minor expansion, memoized on column subsets."""
    n = matrix.size
    dim = matrix.dimension
    one = LaurentPoly.constant(dim, 1)
    memo: dict[tuple[int, ...], LaurentPoly] = {}

    def minor(cols: tuple[int, ...]) -> LaurentPoly:
        if not cols:
            return one
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = n - len(cols)
        acc = LaurentPoly.zero(dim)
        for pos, col in enumerate(cols):
            entry = matrix.entries[row][col]
            if entry.is_zero:
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            term = entry * sub
            acc = acc + term if pos % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))


def _exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient num/den; raises ArithmeticError when not divisible."""
    if den.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero:
        return num
    if len(den._terms) == 1:
        (key, coeff), = den._terms.items()
        terms = {}
        for k, v in num._terms.items():
            new = tuple(a - b for a, b in zip(k, key))
            if new[-1] < 0:
                raise ArithmeticError("not divisible: negative lam exponent")
            terms[new] = v / coeff
        return LaurentPoly(num.dimension, terms)
    # Shift both to nonnegative exponents, then do ordered term division.
    width = num.dimension + 1

    def shift_of(poly):
        return tuple(
            min(0, min(k[i] for k in poly._terms)) for i in range(width)
        )

    sn, sd = shift_of(num), shift_of(den)
    ntab = {tuple(a - b for a, b in zip(k, sn)): v for k, v in num._terms.items()}
    dtab = {tuple(a - b for a, b in zip(k, sd)): v for k, v in den._terms.items()}
    dlead = max(dtab)
    dcoeff = dtab[dlead]
    quotient: dict[Exponent, Fraction] = {}
    while ntab:
        nlead = max(ntab)
        diff = tuple(a - b for a, b in zip(nlead, dlead))
        if any(e < 0 for e in diff):
            raise ArithmeticError("polynomials do not divide exactly")
        coeff = ntab[nlead] / dcoeff
        quotient[diff] = quotient.get(diff, Fraction(0)) + coeff
        for key, value in dtab.items():
            tgt = tuple(a + b for a, b in zip(diff, key))
            acc = ntab.get(tgt, Fraction(0)) - coeff * value
            if acc:
                ntab[tgt] = acc
            else:
                ntab.pop(tgt, None)
    back = tuple(a - b for a, b in zip(sn, sd))
    return LaurentPoly(
        num.dimension,
        {tuple(a + b for a, b in zip(k, back)): v for k, v in quotient.items()},
    )


def det_bareiss(matrix: LaurentMatrix) -> LaurentPoly:
    """Fraction-free Bareiss elimination over the Laurent ring.

    Rows are first scaled by monomials so every z-exponent is nonnegative;
    the scaling is divided back out of the result.
    """
    n = matrix.size
    dim = matrix.dimension
    total_shift = [0] * dim
    work: list[list[LaurentPoly]] = []
    for row in matrix.entries:
        shift = [0] * dim
        for entry in row:
            for key in entry._terms:
                for i in range(dim):
                    shift[i] = max(shift[i], -key[i])
        for i in range(dim):
            total_shift[i] += shift[i]
        work.append([entry.shift(shift) for entry in row])

    sign = 1
    prev = LaurentPoly.constant(dim, 1)
    for k in range(n - 1):
        if work[k][k].is_zero:
            for r in range(k + 1, n):
                if not work[r][k].is_zero:
                    work[k], work[r] = work[r], work[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(dim)
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * work[i][j] - work[i][k] * work[k][j]
                work[i][j] = num if k == 0 else _exact_divide(num, prev)
            work[i][k] = LaurentPoly.zero(dim)
        prev = pivot
    det = work[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det.shift([-s for s in total_shift])


def determinant(matrix: LaurentMatrix, method: str = "auto") -> LaurentPoly:
    """Exact determinant; Leibniz expansion up to 6x6, Bareiss beyond."""
    if method == "auto":
        method = "leibniz" if matrix.size <= 6 else "bareiss"
    if method == "leibniz":
        return det_leibniz(matrix)
    if method == "bareiss":
        return det_bareiss(matrix)
    raise ValueError(f"unknown determinant method {method!r}")


# ---------------------------------------------------------------------------
# deterministic serialization


def format_poly(poly: LaurentPoly, lam_name: str = "lam") -> str:
    """Render with terms sorted by (lam exponent, z exponents)."""
    if poly.is_zero:
        return "0"
    d = poly.dimension
    pieces = []
    for key in sorted(poly._terms, key=lambda k: (k[-1], k[:-1])):
        coeff = poly._terms[key]
        factors = []
        for axis in range(d):
            e = key[axis]
            if e == 1:
                factors.append(f"z{axis + 1}")
            elif e != 0:
                factors.append(f"z{axis + 1}^{e}")
        b = key[-1]
        if b == 1:
            factors.append(lam_name)
        elif b != 0:
            factors.append(f"{lam_name}^{b}")
        if not factors:
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(abs(coeff))] + factors)
        pieces.append(("- " if coeff < 0 else "+ ") + body)
    head = pieces[0]
    head = "-" + head[2:] if head.startswith("- ") else head[2:]
    return " ".join([head] + pieces[1:])
