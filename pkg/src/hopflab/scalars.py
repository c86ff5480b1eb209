"""Exact ground-field arithmetic and linear algebra.

Three kinds of fields are supported: the rationals, prime fields F_p and
cyclotomic extensions Q(zeta_n).  Every scalar is kept in a canonical form
(reduced fraction / least residue / polynomial of degree < deg Phi_n), so
equality is literal equality of the canonical representation.  There is no
floating point anywhere.
"""

from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatch, NoSuchRoot


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def _poly_exact_div(num, den):
    # den monic with integer coefficients; exact division, ascending lists
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(num) - 1, len(den) - 2, -1):
        c = num[k]
        out[k - len(den) + 1] = c
        if c:
            for i, d in enumerate(den):
                num[k - len(den) + 1 + i] -= c * d
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, ascending degree, monic, integer."""
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


# ---------------------------------------------------------------------------
# fields


class Field:
    """Base class; subclasses implement canonical arithmetic on raw values."""

    kind = None

    def scalar(self, value):
        return Scalar(self, self.canon(value))

    def from_int(self, k):
        return self.scalar(k)

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return self.name()

    def primitive_root_of_unity(self, n):
        raise NoSuchRoot(f"no primitive {n}-th root of unity in {self.name()}")


class Rationals(Field):
    kind = "rationals"

    def key(self):
        return ("Q",)

    def name(self):
        return "Q"

    def canon(self, v):
        if isinstance(v, Scalar):
            v = v.value
        return Fraction(v)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def format(self, a):
        return str(a)

    def parse(self, text):
        return self.scalar(Fraction(text.strip()))

    def random(self, rng):
        return self.scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))

    def primitive_root_of_unity(self, n):
        if n == 1:
            return self.one
        if n == 2:
            return self.from_int(-1)
        raise NoSuchRoot(f"no primitive {n}-th root of unity in Q")


class PrimeField(Field):
    kind = "prime-field"

    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def key(self):
        return ("F", self.p)

    def name(self):
        return f"F{self.p}"

    def canon(self, v):
        if isinstance(v, Scalar):
            v = v.value
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by p")
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        return int(v) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a == 0

    def format(self, a):
        return str(a)

    def parse(self, text):
        return self.scalar(int(text.strip()))

    def random(self, rng):
        return self.scalar(rng.randrange(self.p))

    def elements(self):
        return [self.scalar(a) for a in range(self.p)]

    def primitive_root_of_unity(self, n):
        # smallest residue of multiplicative order exactly n
        for q in range(1, self.p):
            x, order = q, 1
            while x != 1:
                x = x * q % self.p
                order += 1
                if order > n:
                    break
            if order == n:
                return self.scalar(q)
        raise NoSuchRoot(f"no primitive {n}-th root of unity in F{self.p}")


class Cyclotomic(Field):
    """Q(zeta_n) = Q[z]/(Phi_n); values are coefficient tuples of length deg Phi_n."""

    kind = "cyclotomic"

    def __init__(self, n):
        if n < 1:
            raise ValueError("cyclotomic index must be >= 1")
        self.n = n
        self.phi = cyclotomic_polynomial(n)
        self.degree = len(self.phi) - 1

    def key(self):
        return ("Z", self.n)

    def name(self):
        return f"Q(zeta{self.n})"

    def canon(self, v):
        if isinstance(v, Scalar):
            v = v.value
        if isinstance(v, (int, Fraction)):
            coeffs = [Fraction(v)] + [Fraction(0)] * (self.degree - 1)
            return tuple(coeffs)
        coeffs = [Fraction(c) for c in v]
        return self._reduce(coeffs)

    def _reduce(self, coeffs):
        coeffs = list(coeffs)
        for k in range(len(coeffs) - 1, self.degree - 1, -1):
            c = coeffs[k]
            if c:
                for i, pc in enumerate(self.phi):
                    coeffs[k - self.degree + i] -= c * pc
        coeffs = coeffs[: self.degree]
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return tuple(coeffs)

    def zeta(self):
        """The distinguished primitive n-th root z."""
        return self.scalar(self._reduce([Fraction(0), Fraction(1)]))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        prod = [Fraction(0)] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    def inv(self, a):
        if all(c == 0 for c in a):
            raise ZeroDivisionError("division by zero")
        # extended Euclid in Q[z] against Phi_n (irreducible over Q)
        r0, r1 = [Fraction(c) for c in self.phi], list(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(c != 0 for c in r1):
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        # r0 is a nonzero constant gcd
        g = r0[0]
        inv_coeffs = [c / g for c in s0]
        return self._reduce(inv_coeffs)

    def is_zero(self, a):
        return all(c == 0 for c in a)

    def format(self, a):
        terms = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{i}")
        return " + ".join(terms) if terms else "0"

    def parse(self, text):
        s = text.replace(" ", "").replace("-", "+-")
        coeffs = [Fraction(0)] * self.degree
        for token in filter(None, s.split("+")):
            if "z" in token:
                head, _, tail = token.partition("z")
                power = int(tail[1:]) if tail.startswith("^") else 1
                head = head.rstrip("*")
                if head in ("", "-"):
                    c = Fraction(-1 if head == "-" else 1)
                else:
                    c = Fraction(head)
            else:
                power, c = 0, Fraction(token)
            if power >= self.degree:
                raise ValueError(f"exponent {power} not reduced mod Phi_{self.n}")
            coeffs[power] += c
        return self.scalar(coeffs)

    def random(self, rng):
        return self.scalar([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(self.degree)])

    def primitive_root_of_unity(self, n):
        if n == 1:
            return self.one
        if n == 2:
            return self.from_int(-1)
        if self.n % n == 0:
            root = self.one
            z = self.zeta()
            for _ in range(self.n // n):
                root = root * z
            return root
        raise NoSuchRoot(f"no primitive {n}-th root of unity in {self.name()}")


RATIONALS = Rationals()


# ---------------------------------------------------------------------------
# scalar wrapper


class Scalar:
    """Immutable field element in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *args):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field.name()} vs {other.field.name()}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.sub(other.value, self.value))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.value, other.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.value, self.field.inv(other.value)))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.mul(other.value, self.field.inv(self.value)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, k):
        if k < 0:
            return (self.field.one / self) ** (-k)
        out = self.field.one
        for _ in range(k):
            out = out * self
        return out

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field.key(), self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field.format(self.value)}"


def scalar_arith(a, b, op):
    """Dispatch form of the four field operations (used by document tooling)."""
    if not isinstance(a, Scalar) or not isinstance(b, Scalar):
        raise TypeError("scalar_arith expects Scalar operands")
    table = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: a / b,
    }
    try:
        fn = table[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
    return fn()


def primitive_root_of_unity(field, n):
    return field.primitive_root_of_unity(n)


# ---------------------------------------------------------------------------
# polynomial helpers over Fraction lists (ascending degree)


def _frac_poly_trim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _frac_poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _frac_poly_trim(out)


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _frac_poly_trim(out)


def _frac_poly_divmod(a, b):
    a = _frac_poly_trim(list(a))
    b = _frac_poly_trim(list(b))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(c != 0 for c in a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        coeff = a[-1] / b[-1]
        q[shift] = coeff
        for i, c in enumerate(b):
            a[shift + i] -= coeff * c
        a = _frac_poly_trim(a)
        if len(a) == 1 and a[0] == 0:
            break
    return _frac_poly_trim(q), a


# ---------------------------------------------------------------------------
# exact linear algebra


class LinearSolution:
    """Outcome of an exact linear solve.

    status is one of "unique", "affine", "inconsistent"; for consistent
    systems `particular` is a solution with all free variables set to zero
    and `kernel` is a basis of the homogeneous solution space.
    """

    def __init__(self, status, particular, kernel):
        self.status = status
        self.particular = particular
        self.kernel = kernel

    def __repr__(self):
        return f"LinearSolution({self.status}, kernel dim {len(self.kernel)})"


def solve_linear_system(A, b, field=None, ncols=None):
    """Solve A x = b exactly by Gaussian elimination with first-nonzero pivoting."""
    if field is None:
        if A and A[0]:
            field = A[0][0].field
        elif b:
            field = b[0].field
        else:
            raise ValueError("cannot infer the field of an empty system")
    if ncols is None:
        ncols = len(A[0]) if A else 0
    zero, one = field.zero, field.one

    rows = [list(row) + [rhs] for row, rhs in zip(A, b)]
    nrows = len(rows)
    pivots = []  # (row, col)
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if rows[i][ncols]:
            return LinearSolution("inconsistent", None, [])

    pivot_cols = {c for _, c in pivots}
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    particular = [zero] * ncols
    for row, col in pivots:
        particular[col] = rows[row][ncols]
    kernel = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for row, col in pivots:
            vec[col] = -rows[row][fc]
        kernel.append(vec)
    status = "unique" if not free_cols else "affine"
    return LinearSolution(status, particular, kernel)


def identity_matrix(field, n):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def zero_vector(field, n):
    return [field.zero] * n


def mat_vec(A, v):
    field = A[0][0].field
    out = []
    for row in A:
        acc = field.zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def mat_mul(A, B):
    n, m, k = len(A), len(B[0]), len(B)
    zero = A[0][0].field.zero
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                row = out[i]
                for j in range(m):
                    if Bt[j]:
                        row[j] = row[j] + a * Bt[j]
    return out


def mat_inverse(A):
    """Exact inverse, or None when the matrix is singular."""
    n = len(A)
    field = A[0][0].field
    aug = [list(row) + list(idrow) for row, idrow in zip(A, identity_matrix(field, n))]
    r = 0
    for c in range(n):
        pivot_row = None
        for i in range(r, n):
            if aug[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            return None
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
    return [row[n:] for row in aug]


def mat_rank(A):
    if not A:
        return 0
    field = A[0][0].field
    rows = [list(r) for r in A]
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = rows[rank][c].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank
