"""Finite fields GF(p^s) with integer-index elements, polynomials over them,
and the GF(q) -> GF(q^L) tower used to build BCH generator polynomials.

An element is a plain ``int`` in ``[0, q)``.  Its base-p digits, least
significant first, are the coefficients of the residue polynomial modulo the
field's modulus.  Polynomials over a field are lists of such ints, index i
holding the coefficient of x^i, with no trailing zeros (the zero polynomial
is ``[]``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sympy import factorint, isprime

Poly = list  # list[int] of field indices, low degree first


# ---------------------------------------------------------------------------
# polynomials over the prime field GF(p), used only to find moduli

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    """a mod f over GF(p); f monic."""
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _trim([x % p for x in a[:df]])


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, f, p)


def _psub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _trim(out)


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], p - 2, p)
        b = [x * inv % p for x in b]
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(f, p):
    """Ben-Or test for a monic polynomial f (coefficients low first) over GF(p)."""
    d = len(f) - 1
    if d < 1 or f[-1] != 1:
        return False
    if d == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    xp = x
    for _ in range(d // 2):
        # xp <- xp^p mod f
        acc, base, e = [1], xp, p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        xp = acc
        g = _pgcd(f, _psub(xp, x, p), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p, s):
    """Lexicographically smallest monic irreducible of degree s over GF(p).

    Candidates are ordered by the base-p integer (c_{s-1} ... c_0).
    """
    for r in range(p ** s):
        coeffs = []
        x = r
        for _ in range(s):
            x, c = divmod(x, p)
            coeffs.append(c)
        f = coeffs + [1]
        if s >= 2 and any(sum(c * pow(v, i, p) for i, c in enumerate(f)) % p == 0 for v in range(p)):
            continue
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# fields

@dataclass(frozen=True)
class GF:
    """The field GF(p^s) = GF(p)[x] / (modulus)."""

    p: int
    s: int
    modulus: tuple  # monic, length s + 1, low degree first

    @property
    def q(self):
        return self.p ** self.s

    @property
    def order(self):
        return self.q

    def __repr__(self):
        return f"GF({self.p}^{self.s})"

    def __call__(self, index):
        return FieldElem(self, index)

    # digits ---------------------------------------------------------------
    def digits(self, a):
        out = []
        for _ in range(self.s):
            a, c = divmod(a, self.p)
            out.append(c)
        return out

    def from_digits(self, ds):
        v = 0
        for c in reversed(ds):
            v = v * self.p + c
        return v

    # arithmetic on indices ------------------------------------------------
    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.s == 1:
            return (a + b) % self.p
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        if self.p == 2:
            return a
        if self.s == 1:
            return -a % self.p
        return self.from_digits([-x % self.p for x in self.digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.s == 1:
            return a * b % self.p
        if self.p == 2:
            return self._mul2(a, b)
        p, s = self.p, self.s
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        f = self.modulus
        for i in range(2 * s - 2, s - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(s):
                    prod[i - s + j] -= c * f[j]
        return self.from_digits([c % p for c in prod[:s]])

    def _mul2(self, a, b):
        s = self.s
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
        mod = self.from_digits(list(self.modulus))  # includes x^s bit
        for i in range(r.bit_length() - 1, s - 1, -1):
            if r >> i & 1:
                r ^= mod << (i - s)
        return r

    def pow(self, a, e):
        if e < 0:
            raise ValueError("negative exponent")
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # structure ------------------------------------------------------------
    def mult_order(self, a):
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        order = self.q - 1
        for r, e in factorint(order).items():
            for _ in range(e):
                if order % r == 0 and self.pow(a, order // r) == 1:
                    order //= r
                else:
                    break
        return order

    def tables(self):
        """Dense numpy tables (add, mul, neg, inv) for small fields."""
        if self.q > 1 << 12:
            raise ValueError(f"{self!r} too large for dense tables")
        q = self.q
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                add[a, b] = add[b, a] = self.add(a, b)
                mul[a, b] = mul[b, a] = self.mul(a, b)
        neg = np.array([self.neg(a) for a in range(q)], dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = self.inv(a)
        return FieldTables(self, add, mul, neg, inv)


@dataclass(frozen=True, eq=False)
class FieldTables:
    field: GF
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray

    @property
    def sub(self):
        return self.add[:, self.neg]


@dataclass(frozen=True)
class FieldElem:
    """An element bound to its field; supports + - * / ** with field checks."""

    field: GF
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.field.q:
            raise ValueError(f"index {self.index} outside {self.field!r}")

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise TypeError(f"mixed fields: {self.field!r} and {other.field!r}")
            return other.index
        if isinstance(other, int):
            return FieldElem(self.field, other).index
        return NotImplemented

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.index, self._other(other)))

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.index, self._other(other)))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.index, self._other(other)))

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.div(self.index, self._other(other)))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.index))

    def __pow__(self, e):
        if e < 0:
            return FieldElem(self.field, self.field.inv(self.field.pow(self.index, -e)))
        return FieldElem(self.field, self.field.pow(self.index, e))

    def inv(self):
        return FieldElem(self.field, self.field.inv(self.index))

    def __int__(self):
        return self.index


def make_field(p, s):
    if not isinstance(p, int) or not isprime(p):
        raise ValueError(f"characteristic {p!r} is not prime")
    if not isinstance(s, int) or s < 1:
        raise ValueError(f"extension degree must be >= 1, got {s!r}")
    return GF(p, s, smallest_irreducible(p, s))


def field_arith(a, b, op):
    """Dispatch add/mul/inv/pow on FieldElem operands (b is an int for pow)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "pow":
        return a ** int(b)
    raise ValueError(f"unknown operation {op!r}")


def primitive_element(F):
    """Smallest-index generator of the multiplicative group."""
    if F.q == 2:
        return 1
    order = F.q - 1
    exps = [order // r for r in factorint(order)]
    for a in range(1, F.q):
        if all(F.pow(a, e) != 1 for e in exps):
            return a
    raise AssertionError("no primitive element")  # unreachable


def nth_root_of_unity(F, n):
    if n < 1 or (F.q - 1) % n:
        raise ValueError(f"{n} does not divide |{F!r}| - 1")
    return F.pow(primitive_element(F), (F.q - 1) // n)


# ---------------------------------------------------------------------------
# polynomials over GF(q)

def poly_trim(a):
    return _trim(list(a))


def poly_add(F, a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = F.add(out[i], y)
    return _trim(out)


def poly_sub(F, a, b):
    return poly_add(F, a, [F.neg(y) for y in b])


def poly_scale(F, a, c):
    return _trim([F.mul(c, x) for x in a])


def poly_mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(out)


def poly_divmod(F, a, b):
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = _trim(list(a))
    if len(a) < len(b):
        return [], a
    inv_lead = F.inv(b[-1])
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = F.mul(c, inv_lead)
            quot[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]))
    return _trim(quot), _trim(a[:db])


def poly_eval(F, a, x):
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def x_n_minus_1(F, n):
    return [F.neg(1)] + [0] * (n - 1) + [1]


# ---------------------------------------------------------------------------
# the tower GF(q) ⊂ GF(q^L)

@dataclass(frozen=True, eq=False)
class Tower:
    """GF(q) embedded in GF(q^L), both built directly over GF(p).

    ``embed[c]`` is the big-field index of base element c; ``project`` inverts
    it on the subfield.  The embedding sends the base field's x to ``gamma``,
    the smallest-index root of the base modulus inside the big field.
    """

    base: GF
    big: GF
    degree: int
    gamma: int
    embed: tuple
    project: dict = field(repr=False)


def make_tower(base, degree):
    big = make_field(base.p, base.s * degree)
    q = base.q
    if base.s == 1:
        embed = tuple(range(q))
        gamma = 0
    else:
        alpha = primitive_element(big)
        omega = big.pow(alpha, (big.q - 1) // (q - 1))
        sub = [0]
        x = 1
        for _ in range(q - 1):
            sub.append(x)
            x = big.mul(x, omega)
        mod_big = list(base.modulus)  # coefficients in GF(p) embed as themselves
        roots = sorted(y for y in sub if poly_eval(big, mod_big, y) == 0)
        gamma = roots[0]
        powers = [big.pow(gamma, i) for i in range(base.s)]
        embed = []
        for c in range(q):
            acc = 0
            for d, g in zip(base.digits(c), powers):
                acc = big.add(acc, big.mul(d, g))
            embed.append(acc)
        embed = tuple(embed)
    project = {y: c for c, y in enumerate(embed)}
    if len(project) != q:
        raise AssertionError("tower embedding is not injective")
    # the image must be the Frobenius-fixed subfield and a ring homomorphism
    for c in range(q):
        if big.pow(embed[c], q) != embed[c]:
            raise AssertionError("embedded element not fixed by x -> x^q")
    probe = range(q) if q <= 64 else range(0, q, max(1, q // 64))
    for a in probe:
        for b in probe:
            if big.mul(embed[a], embed[b]) != embed[base.mul(a, b)]:
                raise AssertionError("tower embedding is not multiplicative")
            if big.add(embed[a], embed[b]) != embed[base.add(a, b)]:
                raise AssertionError("tower embedding is not additive")
    return Tower(base, big, degree, gamma, embed, project)


def cyclotomic_coset_mod(i, n, q):
    out = []
    x = i % n
    while x not in out:
        out.append(x)
        x = x * q % n
    return sorted(out)


def minimal_polynomial(tower, beta, i, n):
    """Minimal polynomial over the base field of beta^i, where beta has order n.

    Computed as the product of (x - beta^j) over the q-cyclotomic coset of i
    modulo n, then projected onto the base field.
    """
    big = tower.big
    poly = [1]
    for j in cyclotomic_coset_mod(i, n, tower.base.q):
        root = big.pow(beta, j)
        poly = poly_mul(big, poly, [big.neg(root), 1])
    try:
        return [tower.project[c] for c in poly]
    except KeyError:
        raise ArithmeticError("minimal polynomial coefficient outside the base field") from None
