"""Arithmetic in small finite fields GF(p^f).

Elements are coded as integers ``sum(c_i * p**i)`` where ``c_0..c_{f-1}`` are
the polynomial coefficients, least significant first. Enumeration order is
the order of these codes. Moduli are fixed so codes are stable everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InputError

MAX_FIELD_SIZE = 2**20

# monic irreducible moduli, coefficients least significant first (leading 1 omitted)
MODULI = {
    (2, 2): (1, 1),        # x^2 + x + 1
    (2, 3): (1, 1, 0),     # x^3 + x + 1
    (2, 4): (1, 1, 0, 0),  # x^4 + x + 1
    (3, 2): (1, 0),        # x^2 + 1
}


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class FieldCtx:
    """The field GF(p^f) with a fixed modulus."""

    def __init__(self, p, f):
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        if f < 1 or p**f > MAX_FIELD_SIZE:
            raise InputError(f"unsupported field size {p}^{f}")
        if f > 1 and (p, f) not in MODULI:
            raise InputError(f"no modulus table entry for GF({p}^{f})")
        self.p = p
        self.f = f
        self.q = p**f
        # modulus coefficients of x^f, reduced form: x^f = -sum(m_i x^i)
        self.modulus = MODULI.get((p, f), (0,)) + (1,)
        self._add = None
        self._log, self._exp = self._build_logs()

    def __repr__(self):
        return f"FieldCtx(p={self.p}, f={self.f})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.f) == (other.p, other.f)

    def __hash__(self):
        return hash((self.p, self.f))

    # coefficient codecs
    def coeffs(self, a):
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeffs(self, cs):
        cs = list(cs)
        if len(cs) > self.f:
            raise InputError("too many coefficients")
        a = 0
        for c in reversed(cs):
            a = a * self.p + (c % self.p)
        return a

    def elements(self):
        return range(self.q)

    def _poly_mul(self, a, b):
        p, f = self.p, self.f
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        m = self.modulus
        for d in range(2 * f - 2, f - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(f):
                    prod[d - f + i] = (prod[d - f + i] - c * m[i]) % p
        return self.from_coeffs(prod[:f])

    def _build_logs(self):
        q = self.q
        for g in range(1, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._poly_mul(x, g)
            if len(exp) == q - 1:
                log = [None] * q
                for i, e in enumerate(exp):
                    log[e] = i
                return log, exp
        if q == 2:
            return [None, 0], [1]
        raise InputError(f"modulus for GF({self.p}^{self.f}) is not primitive/irreducible")

    def add(self, a, b):
        if self.f == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.from_coeffs(x + y for x, y in zip(ca, cb))

    def neg(self, a):
        if self.f == 1:
            return (-a) % self.p
        return self.from_coeffs(-c for c in self.coeffs(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise DomainError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise DomainError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius(self, a, i=1):
        """a -> a^(p^i)."""
        return self.pow(a, self.p ** (i % self.f))

    def mult_order(self, a):
        if a == 0:
            raise DomainError("zero has no multiplicative order")
        from math import gcd

        return (self.q - 1) // gcd(self._log[a], self.q - 1)

    def multiplicative_generator(self):
        return self.element_of_order(self.q - 1)

    def element_of_order(self, d):
        """Smallest element (in code order) of exact multiplicative order d."""
        if d < 1 or (self.q - 1) % d:
            raise InputError(f"{d} does not divide {self.q - 1}")
        for a in range(1, self.q):
            if self.mult_order(a) == d:
                return a
        raise AssertionError("cyclic group has an element of every order")

    def is_square(self, a):
        return a == 0 or self._log[a] % 2 == 0 or self.p == 2

    def elem(self, a):
        return FieldElem(self, a)


@lru_cache(maxsize=None)
def field(p, f=1):
    return FieldCtx(p, f)


def field_of_order(q):
    for p in range(2, q + 1):
        if q % p == 0:
            f = 0
            r = q
            while r % p == 0:
                r //= p
                f += 1
            if r != 1:
                raise InputError(f"{q} is not a prime power")
            return field(p, f)
    raise InputError(f"{q} is not a prime power")


@dataclass(frozen=True)
class FieldElem:
    """Operator-friendly wrapper around an element code."""

    ctx: FieldCtx
    code: int

    @property
    def coeffs(self):
        return self.ctx.coeffs(self.code)

    def _other(self, o):
        if isinstance(o, FieldElem):
            return o.code
        return o % self.ctx.p if self.ctx.f == 1 else self.ctx.from_coeffs([o])

    def __add__(self, o):
        return FieldElem(self.ctx, self.ctx.add(self.code, self._other(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return FieldElem(self.ctx, self.ctx.sub(self.code, self._other(o)))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.code))

    def __mul__(self, o):
        return FieldElem(self.ctx, self.ctx.mul(self.code, self._other(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return FieldElem(self.ctx, self.ctx.div(self.code, self._other(o)))

    def __pow__(self, e):
        return FieldElem(self.ctx, self.ctx.pow(self.code, e))

    def inv(self):
        return FieldElem(self.ctx, self.ctx.inv(self.code))

    def frobenius(self, i=1):
        return FieldElem(self.ctx, self.ctx.frobenius(self.code, i))

    def __repr__(self):
        return f"GF({self.ctx.q})[{self.code}]"


# small dense matrices over a field, as tuples of row tuples of codes

def mat_mul(ctx, A, B):
    n, m, r = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(r):
            s = 0
            for k in range(m):
                s = ctx.add(s, ctx.mul(A[i][k], B[k][j]))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_det(ctx, A):
    n = len(A)
    if n == 1:
        return A[0][0]
    if n == 2:
        return ctx.sub(ctx.mul(A[0][0], A[1][1]), ctx.mul(A[0][1], A[1][0]))
    total = 0
    for j in range(n):
        minor = tuple(tuple(row[c] for c in range(n) if c != j) for row in A[1:])
        term = ctx.mul(A[0][j], mat_det(ctx, minor))
        total = ctx.add(total, term if j % 2 == 0 else ctx.neg(term))
    return total


def mat_map(A, fn):
    return tuple(tuple(fn(x) for x in row) for row in A)


def mat_transpose(A):
    return tuple(zip(*A))


def mat_vec(ctx, A, v):
    """Row vector times matrix: v * A."""
    return tuple(
        _dot(ctx, v, [A[k][j] for k in range(len(A))]) for j in range(len(A[0]))
    )


def _dot(ctx, u, v):
    s = 0
    for a, b in zip(u, v):
        s = ctx.add(s, ctx.mul(a, b))
    return s
