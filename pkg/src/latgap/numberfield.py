"""Exact arithmetic in a monogenic totally real number field.

The ring of integers is presented as Z[omega] for a root omega of a monic
integer polynomial with n distinct real roots.  Elements are integer
coordinate vectors on the power basis, ideals are integer row lattices in
Hermite normal form, and every membership / equality / norm decision is made
with exact integer arithmetic.  Floating point only enters when real
embeddings are compared against real box bounds, and those comparisons fall
back to high precision (and to exact rational comparison where applicable)
near a boundary.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import mpmath
import numpy as np
import sympy

from .errors import BudgetError, FactorizationError, NonMonogenicError

_BOUNDARY_EPS = 1e-9
_MP_DPS = 60


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hnf_rows(rows: Iterable[Sequence[int]], n: int) -> tuple[tuple[int, ...], ...]:
    """Row-style upper triangular Hermite normal form of an integer lattice.

    Pivots are positive, entries above each pivot are reduced into [0, pivot).
    Raises ValueError if the rows do not span a rank-n lattice.
    """
    work = [list(r) for r in rows if any(r)]
    basis: list[list[int]] = []
    for col in range(n):
        pivot = None
        rest = []
        for row in work:
            if row[col] == 0:
                rest.append(row)
                continue
            if pivot is None:
                pivot = row
                continue
            g, xc, yc = _xgcd(pivot[col], row[col])
            pc, rc = pivot[col] // g, row[col] // g
            new_pivot = [xc * pivot[k] + yc * row[k] for k in range(n)]
            eliminated = [pc * row[k] - rc * pivot[k] for k in range(n)]
            pivot = new_pivot
            if any(eliminated):
                rest.append(eliminated)
        if pivot is None:
            raise ValueError("rows do not span a full-rank lattice")
        if pivot[col] < 0:
            pivot = [-v for v in pivot]
        basis.append(pivot)
        work = rest
    # reduce entries above each pivot
    for j in range(n):
        pj = basis[j][j]
        for i in range(j):
            q = basis[i][j] // pj
            if q:
                basis[i] = [basis[i][k] - q * basis[j][k] for k in range(n)]
    return tuple(tuple(r) for r in basis)


def _det_bareiss(mat: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Gaussian elimination)."""
    a = [list(map(int, row)) for row in mat]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


class TotallyRealField:
    """Monogenic totally real field presented by a monic integer polynomial."""

    def __init__(self, min_poly: Sequence[int]):
        coeffs = [int(c) for c in min_poly]
        if len(coeffs) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.min_poly = tuple(coeffs)
        self.n = len(coeffs) - 1
        x = sympy.Symbol("x")
        poly = sympy.Poly(list(reversed(coeffs)), x)
        if not poly.is_irreducible:
            raise ValueError("minimal polynomial is reducible over Q")
        real_roots = poly.real_roots()
        if len(real_roots) != self.n or len(set(real_roots)) != self.n:
            raise ValueError("polynomial is not totally real with distinct roots")
        self.discriminant = int(poly.discriminant())
        # descending root order fixes the labelling of the real places
        mpmath.mp.dps = _MP_DPS
        mp_roots = sorted((mpmath.mpf(sympy.nsimplify(r).evalf(_MP_DPS)) if r.is_rational
                           else mpmath.mpf(str(r.evalf(_MP_DPS))) for r in real_roots),
                          reverse=True)
        self._mp_roots = tuple(mp_roots)
        self.roots = tuple(float(r) for r in mp_roots)
        self._check_roots()
        self._omega_pows = self._power_table()
        self._trace_pows = self._trace_table()
        # embedding matrix V[i][j] = omega_j ** i and its inverse (floats)
        V = np.array([[r ** i for r in self.roots] for i in range(self.n)], dtype=float)
        self._V = V
        self._W = np.linalg.inv(V)

    def _check_roots(self) -> None:
        for r in self.roots:
            val = 0.0
            for c in reversed(self.min_poly):
                val = val * r + c
            scale = max(1.0, abs(r) ** self.n)
            if abs(val) > 1e-8 * scale:
                raise ValueError("embedding values do not satisfy the minimal polynomial")

    def _power_table(self) -> tuple[tuple[int, ...], ...]:
        # omega^k on the power basis for k = 0 .. 2n-2
        n = self.n
        pows = [tuple(1 if i == k else 0 for i in range(n)) for k in range(n)]
        for k in range(n, 2 * n - 1):
            prev = pows[k - 1]
            shifted = [0] + list(prev[:-1])
            top = prev[-1]
            if top:
                shifted = [shifted[i] - top * self.min_poly[i] for i in range(n)]
            pows.append(tuple(shifted))
        return tuple(pows)

    def _trace_table(self) -> tuple[int, ...]:
        # Newton power sums p_k = Tr(omega^k), exact integers
        n = self.n
        a = self.min_poly  # a[0] + a[1] x + ... + x^n
        p = [n]
        for k in range(1, 2 * n - 1):
            if k <= n:
                s = -k * a[n - k]
                for i in range(1, k):
                    s -= a[n - i] * p[k - i]
            else:
                s = 0
                for i in range(1, n + 1):
                    s -= a[n - i] * p[k - i]
            p.append(s)
        return tuple(p)

    # -- raw coordinate arithmetic (hot paths work on plain int tuples) --

    def zero_raw(self) -> tuple[int, ...]:
        return (0,) * self.n

    def one_raw(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.n - 1)

    def int_raw(self, k: int) -> tuple[int, ...]:
        return (int(k),) + (0,) * (self.n - 1)

    def add_raw(self, u, v):
        return tuple(a + b for a, b in zip(u, v))

    def sub_raw(self, u, v):
        return tuple(a - b for a, b in zip(u, v))

    def neg_raw(self, u):
        return tuple(-a for a in u)

    def mul_raw(self, u, v):
        n = self.n
        conv = [0] * (2 * n - 1)
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    if vj:
                        conv[i + j] += ui * vj
        out = [0] * n
        pows = self._omega_pows
        for k, ck in enumerate(conv):
            if ck:
                row = pows[k]
                for i in range(n):
                    out[i] += ck * row[i]
        return tuple(out)

    def scalar_raw(self, k: int, u):
        return tuple(k * a for a in u)

    def embed_raw(self, u, j: int) -> float:
        """Real embedding at place j (1-based)."""
        if not 1 <= j <= self.n:
            raise ValueError(f"place index {j} out of range 1..{self.n}")
        r = self.roots[j - 1]
        val = 0.0
        for c in reversed(u):
            val = val * r + c
        return val

    def embed_all_raw(self, u) -> np.ndarray:
        vals = np.zeros(self.n)
        for c in reversed(u):
            vals = vals * np.asarray(self.roots) + c
        return vals

    def embed_mp(self, u, j: int):
        mpmath.mp.dps = _MP_DPS
        r = self._mp_roots[j - 1]
        val = mpmath.mpf(0)
        for c in reversed(u):
            val = val * r + c
        return val

    def compare_embed(self, u, j: int, bound: float) -> int:
        """Sign of iota_j(u) - bound, robust near the boundary.

        bound is a machine float (a dyadic rational).  The float comparison is
        refined with 60-digit arithmetic near a tie, and rational elements are
        compared exactly.  An irrational algebraic integer of desk-scale height
        cannot sit within 1e-50 of a 53-bit dyadic rational, so the refined
        sign is decisive.
        """
        val = self.embed_raw(u, j)
        scale = max(1.0, abs(bound))
        if abs(val - bound) > _BOUNDARY_EPS * scale:
            return 1 if val > bound else -1
        if all(c == 0 for c in u[1:]):
            diff = Fraction(u[0]) - Fraction(bound)
            return (diff > 0) - (diff < 0)
        mval = self.embed_mp(u, j) - mpmath.mpf(bound)
        if mval > mpmath.mpf(10) ** (-50):
            return 1
        if mval < -(mpmath.mpf(10) ** (-50)):
            return -1
        return 0

    def trace_raw(self, u) -> int:
        return sum(c * t for c, t in zip(u, self._trace_pows))

    def norm_raw(self, u) -> int:
        rows = []
        cur = tuple(u)
        rows.append(cur)
        basis = self._omega_pows
        for i in range(1, self.n):
            cur = self.mul_raw(u, basis[i])
            rows.append(cur)
        return _det_bareiss(rows)

    def mul_matrix_fractions(self, u) -> list[list[Fraction]]:
        rows = []
        basis = self._omega_pows
        for i in range(self.n):
            rows.append([Fraction(c) for c in self.mul_raw(basis[i], u)])
        return rows

    def divide_raw(self, u, v) -> Optional[tuple[int, ...]]:
        """Exact division u / v in Z[omega]; None if not integral (or v = 0)."""
        if not any(v):
            return None
        sol = _solve_fraction_system(self.mul_matrix_fractions(v), [Fraction(c) for c in u])
        if sol is None:
            return None
        out = []
        for s in sol:
            if s.denominator != 1:
                return None
            out.append(int(s))
        return tuple(out)

    def divider(self, v):
        """Precompiled exact-division-by-v on raw coordinates (hot path)."""
        mat = self.mul_matrix_fractions(v)
        n = self.n
        det, adj = _fraction_inverse_times_det(mat)
        if det == 0:
            raise ZeroDivisionError("division by zero element")
        adj_int = [[int(a) for a in row] for row in adj]
        d = int(det)

        def div(u):
            out = []
            for i in range(n):
                s = 0
                for k in range(n):
                    s += u[k] * adj_int[k][i]
                if s % d:
                    return None
                out.append(s // d)
            return tuple(out)

        return div

    def coords_from_embeddings(self, values: Sequence[float]) -> np.ndarray:
        """Float coordinates whose embeddings are the given values."""
        return np.asarray(values) @ self._W

    def coordinate_bounds(self, embedding_caps: Sequence[float]) -> list[int]:
        """Integer bounds B_i with |c_i| <= B_i whenever |iota_j(x)| <= cap_j."""
        caps = np.asarray(embedding_caps, dtype=float)
        bounds = np.abs(self._W).T @ caps
        return [int(math.floor(b)) + 1 for b in bounds]

    def sqrt_raw(self, u) -> Optional[tuple[int, ...]]:
        """An exact square root of u in Z[omega], or None.

        Float-guided candidate construction with exact verification; the
        returned root has its first nonzero coordinate positive.
        """
        if not any(u):
            return self.zero_raw()
        embeds = self.embed_all_raw(u)
        if any(e < -_BOUNDARY_EPS for e in embeds):
            return None
        roots = np.sqrt(np.clip(embeds, 0.0, None))
        n = self.n
        for signs in itertools.product((1.0, -1.0), repeat=n - 1):
            rhs = roots.copy()
            for k, s in enumerate(signs):
                rhs[k + 1] *= s
            cand_f = rhs @ self._W
            fracs = np.abs(cand_f - np.round(cand_f))
            if np.max(fracs) > 0.25:
                continue
            cand = tuple(int(round(c)) for c in cand_f)
            if self.mul_raw(cand, cand) == tuple(u):
                for c in cand:
                    if c > 0:
                        return cand
                    if c < 0:
                        return self.neg_raw(cand)
                return cand
        return None

    def element(self, coords) -> "FieldInt":
        return FieldInt(self, tuple(int(c) for c in coords))

    def from_int(self, k: int) -> "FieldInt":
        return FieldInt(self, self.int_raw(k))

    def one(self) -> "FieldInt":
        return self.from_int(1)

    def zero(self) -> "FieldInt":
        return self.from_int(0)

    def generator(self) -> "FieldInt":
        return self.element(tuple(1 if i == 1 else 0 for i in range(self.n))
                            if self.n > 1 else (1,))

    def __eq__(self, other):
        return isinstance(other, TotallyRealField) and self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        return f"TotallyRealField({list(self.min_poly)})"


def _solve_fraction_system(mat, rhs) -> Optional[list[Fraction]]:
    """Solve x @ mat = rhs over Q (row-vector convention); None if singular."""
    n = len(rhs)
    a = [[mat[i][j] for i in range(n)] for j in range(n)]  # transpose: a @ x = rhs
    b = list(rhs)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        b[col] = b[col] * inv
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [a[r][k] - f * a[col][k] for k in range(n)]
                b[r] = b[r] - f * b[col]
    return b


def _fraction_inverse_times_det(mat):
    """Return (det, adjugate) of an integer matrix given as Fractions."""
    n = len(mat)
    int_mat = [[int(v) for v in row] for row in mat]
    det = _det_bareiss(int_mat)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[int_mat[r][c] for c in range(n) if c != i]
                     for r in range(n) if r != j]
            cof = _det_bareiss(minor) if minor else 1
            adj[i][j] = (-1) ** (i + j) * cof
    return det, adj


@dataclass(frozen=True)
class FieldInt:
    """Algebraic integer with exact power-basis coordinates."""

    field: TotallyRealField
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.field.n:
            raise ValueError("coordinate length does not match field degree")

    def _same_field(self, other: "FieldInt"):
        if self.field != other.field:
            raise ValueError("elements of different fields")

    def __add__(self, other):
        other = self._coerce(other)
        return FieldInt(self.field, self.field.add_raw(self.coords, other.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldInt(self.field, self.field.sub_raw(self.coords, other.coords))

    def __neg__(self):
        return FieldInt(self.field, self.field.neg_raw(self.coords))

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldInt(self.field, self.field.mul_raw(self.coords, other.coords))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not integral")
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _coerce(self, other) -> "FieldInt":
        if isinstance(other, FieldInt):
            self._same_field(other)
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        raise TypeError(f"cannot coerce {other!r}")

    def is_zero(self) -> bool:
        return not any(self.coords)

    def norm(self) -> int:
        return self.field.norm_raw(self.coords)

    def trace(self) -> int:
        return self.field.trace_raw(self.coords)

    def embed(self, j: int) -> float:
        return self.field.embed_raw(self.coords, j)

    def embeddings(self) -> np.ndarray:
        return self.field.embed_all_raw(self.coords)

    def __repr__(self):
        return f"FieldInt{self.coords}"


class IdealZBasis:
    """Nonzero ideal of Z[omega] stored as an HNF Z-basis (rows)."""

    def __init__(self, field: TotallyRealField, rows, *, _skip_check=False):
        self.field = field
        self.rows = hnf_rows(rows, field.n) if not _skip_check else tuple(map(tuple, rows))
        self.norm = 1
        for i in range(field.n):
            self.norm *= self.rows[i][i]
        if not _skip_check:
            self._verify_closure()

    def _verify_closure(self):
        omega = tuple(1 if i == 1 else 0 for i in range(self.field.n)) \
            if self.field.n > 1 else (1,)
        for row in self.rows:
            if not self.contains_raw(self.field.mul_raw(row, omega)):
                raise ValueError("basis is not closed under multiplication by the generator")

    @classmethod
    def from_generators(cls, field: TotallyRealField, gens: Sequence[FieldInt | Sequence[int]]):
        rows = []
        pows = field._omega_pows
        for g in gens:
            coords = g.coords if isinstance(g, FieldInt) else tuple(int(c) for c in g)
            for i in range(field.n):
                rows.append(field.mul_raw(coords, pows[i]))
        return cls(field, rows)

    @classmethod
    def principal(cls, field: TotallyRealField, gen):
        return cls.from_generators(field, [gen])

    @classmethod
    def whole_ring(cls, field: TotallyRealField):
        eye = [[1 if i == j else 0 for j in range(field.n)] for i in range(field.n)]
        return cls(field, eye, _skip_check=True)

    def is_whole_ring(self) -> bool:
        return self.norm == 1

    def contains_raw(self, u) -> bool:
        v = list(u)
        n = self.field.n
        for i in range(n):
            h = self.rows[i][i]
            if v[i] % h:
                return False
            q = v[i] // h
            if q:
                for k in range(i, n):
                    v[k] -= q * self.rows[i][k]
        return True

    def contains(self, x: FieldInt) -> bool:
        return self.contains_raw(x.coords)

    def reduce_raw(self, u) -> tuple[int, ...]:
        """Canonical residue in the HNF fundamental box (0 <= v_i < pivot_i)."""
        v = list(u)
        n = self.field.n
        for i in range(n):
            h = self.rows[i][i]
            q = v[i] // h
            if q:
                for k in range(i, n):
                    v[k] -= q * self.rows[i][k]
        return tuple(v)

    def reduce(self, x: FieldInt) -> FieldInt:
        return FieldInt(self.field, self.reduce_raw(x.coords))

    def residues(self):
        """All canonical residues (lazily), N of them."""
        ranges = [range(self.rows[i][i]) for i in range(self.field.n)]
        for combo in itertools.product(*ranges):
            yield tuple(combo)

    def mul(self, other: "IdealZBasis") -> "IdealZBasis":
        rows = [self.field.mul_raw(a, b) for a in self.rows for b in other.rows]
        return IdealZBasis(self.field, rows)

    def add(self, other: "IdealZBasis") -> "IdealZBasis":
        return IdealZBasis(self.field, list(self.rows) + list(other.rows))

    def power(self, k: int) -> "IdealZBasis":
        if k < 0:
            raise ValueError("negative ideal power")
        result = IdealZBasis.whole_ring(self.field)
        base = self
        while k:
            if k & 1:
                result = result.mul(base)
            base = base.mul(base) if k > 1 else base
            k >>= 1
        return result

    def is_coprime(self, other: "IdealZBasis") -> bool:
        return self.add(other).is_whole_ring()

    def divides(self, other: "IdealZBasis") -> bool:
        """self | other, i.e. other is contained in self."""
        return all(self.contains_raw(r) for r in other.rows)

    def embedding_rows(self) -> np.ndarray:
        return np.array([self.field.embed_all_raw(r) for r in self.rows])

    def __eq__(self, other):
        return (isinstance(other, IdealZBasis) and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"IdealZBasis(norm={self.norm}, rows={self.rows})"


# -- module-level operation wrappers -----------------------------------------

def embed(field: TotallyRealField, x: FieldInt, j: int) -> float:
    return field.embed_raw(x.coords, j)


def field_norm(x: FieldInt) -> int:
    return x.norm()


def field_trace(x: FieldInt) -> int:
    return x.trace()


def ideal_norm(a: IdealZBasis) -> int:
    return a.norm


def ideal_contains(a: IdealZBasis, x: FieldInt) -> bool:
    return a.contains(x)


def ideal_mul(a: IdealZBasis, b: IdealZBasis) -> IdealZBasis:
    if a.field != b.field:
        raise ValueError("ideals of different fields")
    return a.mul(b)


def ideal_power(a: IdealZBasis, k: int) -> IdealZBasis:
    return a.power(k)


def coprime(a: IdealZBasis, b: IdealZBasis) -> bool:
    if a.field != b.field:
        raise ValueError("ideals of different fields")
    return a.is_coprime(b)


def reduce_mod(x: FieldInt, a: IdealZBasis) -> FieldInt:
    return a.reduce(x)


def valuation(prime: IdealZBasis, a: IdealZBasis, cap: int = 128) -> int:
    """Largest k with a contained in prime**k."""
    k = 0
    power = prime
    while k < cap and power.divides(a):
        k += 1
        power = power.mul(prime)
    return k


def _dedekind_index_free(field: TotallyRealField, p: int) -> bool:
    """Dedekind's criterion: True when p does not divide [O_L : Z[omega]]."""
    x = sympy.Symbol("x")
    f = sympy.Poly(list(reversed(field.min_poly)), x)
    fbar = sympy.Poly(f, x, modulus=p)
    factors = fbar.factor_list()[1]
    gbar = sympy.Poly(1, x, modulus=p)
    for fac, _ in factors:
        gbar = gbar * fac
    hbar = fbar.quo(gbar)
    g_lift = sympy.Poly([int(c) % p for c in gbar.all_coeffs()], x)
    h_lift = sympy.Poly([int(c) % p for c in hbar.all_coeffs()], x)
    F = (g_lift * h_lift - f)
    F_coeffs = [c / p for c in F.all_coeffs()]
    if any(sympy.Rational(c).q != 1 for c in F_coeffs):
        raise FactorizationError("internal error in index check")
    Fbar = sympy.Poly([int(c) % p for c in F_coeffs] or [0], x, modulus=p)
    d = sympy.gcd(sympy.gcd(Fbar, gbar), hbar)
    return sympy.Poly(d, x).degree() <= 0


def primes_above(field: TotallyRealField, p: int) -> list[tuple[IdealZBasis, int]]:
    """Prime ideals above a rational prime with their ramification exponents."""
    if p * p == 0:
        raise ValueError
    if field.discriminant % (p * p) == 0 or field.discriminant % p == 0:
        if not _dedekind_index_free(field, p):
            raise NonMonogenicError(
                f"prime {p} divides the index of the power-basis order")
    x = sympy.Symbol("x")
    fbar = sympy.Poly(list(reversed(field.min_poly)), x, modulus=p)
    out = []
    for fac, e in fbar.factor_list()[1]:
        coeffs = [int(c) % p for c in fac.all_coeffs()]  # highest power first
        gcoords = [0] * field.n
        deg = len(coeffs) - 1
        for i, c in enumerate(coeffs):
            power = deg - i
            row = field._omega_pows[power]
            for k in range(field.n):
                gcoords[k] += c * row[k]
        prime = IdealZBasis.from_generators(
            field, [field.from_int(p), field.element(gcoords)])
        out.append((prime, int(e)))
    return out


def ideal_factor(a: IdealZBasis, max_norm: int = 10 ** 6) -> list[tuple[IdealZBasis, int]]:
    """Exact prime factorization of an ideal, validated by multiplying back."""
    N = a.norm
    if N > max_norm:
        raise BudgetError(f"ideal norm {N} exceeds the factorization budget {max_norm}")
    if N == 1:
        return []
    field = a.field
    result = []
    for p in sorted(sympy.factorint(N)):
        for prime, _e in primes_above(field, p):
            v = valuation(prime, a)
            if v:
                result.append((prime, v))
    check = IdealZBasis.whole_ring(field)
    for prime, e in result:
        check = check.mul(prime.power(e))
    if check != a:
        raise FactorizationError("factor product does not reproduce the ideal")
    result.sort(key=lambda pe: (pe[0].norm, pe[0].rows))
    return result


def enumerate_in_box(a: IdealZBasis, t0: FieldInt, box: Sequence[tuple[float, float]],
                     *, half_open: bool = True) -> list[FieldInt]:
    """All t = t0 (mod a) with every embedding inside the given box.

    Box sides are [lo, hi) by default ([lo, hi] with half_open=False).
    Candidates come from an inflated integer pre-box of the ideal lattice; the
    final filter compares embeddings with boundary refinement so that floats
    never change the count.
    """
    field = a.field
    n = field.n
    if len(box) != n:
        raise ValueError("box dimension does not match the field degree")
    for lo, hi in box:
        if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
            raise ValueError("degenerate box")
    E = a.embedding_rows()
    Einv = np.linalg.inv(E)
    shift = field.embed_all_raw(t0.coords)
    corners = []
    for combo in itertools.product(*[(lo, hi) for lo, hi in box]):
        corners.append((np.asarray(combo) - shift) @ Einv)
    corners = np.array(corners)
    los = np.floor(corners.min(axis=0)).astype(int) - 1
    his = np.ceil(corners.max(axis=0)).astype(int) + 1
    out = []
    rows = a.rows
    for y in itertools.product(*[range(l, h + 1) for l, h in zip(los, his)]):
        coords = list(t0.coords)
        for yi, row in zip(y, rows):
            if yi:
                for k in range(n):
                    coords[k] += yi * row[k]
        ok = True
        for j in range(1, n + 1):
            lo, hi = box[j - 1]
            if field.compare_embed(coords, j, lo) < 0:
                ok = False
                break
            cmp_hi = field.compare_embed(coords, j, hi)
            if cmp_hi > 0 or (half_open and cmp_hi == 0):
                ok = False
                break
        if ok:
            out.append(field.element(coords))
    out.sort(key=lambda e: e.coords)
    return out


def sqrt_in_ring(s: FieldInt) -> Optional[FieldInt]:
    root = s.field.sqrt_raw(s.coords)
    return None if root is None else FieldInt(s.field, root)


def count_sum_two_squares(t: FieldInt) -> int:
    """Exact number of ordered pairs (a, b) in Z[omega]^2 with a^2 + b^2 = t."""
    field = t.field
    if t.is_zero():
        return 1
    embeds = field.embed_all_raw(t.coords)
    signs = [field.compare_embed(t.coords, j + 1, 0.0) for j in range(field.n)]
    if any(s < 0 for s in signs):
        return 0
    margin = 1e-6
    box = [(-math.sqrt(max(e, 0.0)) - margin, math.sqrt(max(e, 0.0)) + margin)
           for e in embeds]
    count = 0
    whole = IdealZBasis.whole_ring(field)
    for a in enumerate_in_box(whole, field.zero(), box, half_open=False):
        s = t - a * a
        b = field.sqrt_raw(s.coords)
        if b is not None:
            count += 1 if not any(b) else 2
    return count
