"""Coefficient fields F_ell with pinned roots of unity.

All character values live in F_ell for a prime ell chosen so that one fixed
primitive root h yields compatible roots of unity: zeta_p = h**((ell-1)/p)
for the wild (additive character) values and zeta_M = h**((ell-1)/M) for the
tame ones, M being the lcm of every multiplicative order q_x - 1 in play.
Verdicts never rest on a single ell; engines re-run with a second one.

Values are exact residues.  A small symbolic side table records, when cheap,
how a value was assembled from roots of unity, which is what complex_embed
renders; it is display only and never feeds a verdict.
"""

from __future__ import annotations

import cmath
import math

from .gf import FqElem, _is_prime, trace, dlog


class CoeffField:
    """F_ell together with the pinned roots zeta_p and zeta_M."""

    __slots__ = ("ell", "p", "M", "h", "zeta_p", "zeta_M", "zeta_pM", "_symbolic")

    def __init__(self, ell, p, M, h):
        self.ell = ell
        self.p = p
        self.M = M
        self.h = h
        self.zeta_p = pow(h, (ell - 1) // p, ell)
        self.zeta_M = pow(h, (ell - 1) // M, ell)
        # p and M are coprime (M is a lcm of numbers q - 1 with q a p power),
        # so zeta_p * zeta_M has exact order p*M
        self.zeta_pM = (self.zeta_p * self.zeta_M) % ell
        self._symbolic = {}
        for e in range(p * M):
            self.register_symbolic(pow(self.zeta_pM, e, ell), SymbolicSum({e: 1}, p * M))

    def elem(self, v):
        if isinstance(v, CoeffElem):
            if v.field is not self:
                raise ValueError("value from another coefficient field")
            return v
        return CoeffElem(self, v % self.ell)

    def one(self):
        return self.elem(1)

    def zero(self):
        return self.elem(0)

    def zeta(self, m):
        """A fixed primitive m-th root of unity, for m dividing p*M."""
        if m <= 0 or (self.p * self.M) % m != 0:
            raise ValueError("order %d is not tracked by this field" % m)
        return self.elem(pow(self.zeta_pM, (self.p * self.M) // m, self.ell))

    def psi(self, t):
        """Additive character of F_p: t (an int) -> zeta_p**t."""
        return self.elem(pow(self.zeta_p, t % self.p, self.ell))

    def psi_trace(self, x):
        """psi of the absolute trace of x down to F_p."""
        if not isinstance(x, FqElem):
            raise ValueError("psi_trace wants a field element")
        return self.psi(trace(x).as_int())

    def kummer_chi(self, e, x):
        """Multiplicative character of x's field: x -> zeta_{q-1}**(e dlog x).

        Requires q - 1 | M.  e = (q-1)/2 gives the quadratic character.
        """
        if not isinstance(x, FqElem) or x.is_zero():
            raise ValueError("kummer_chi wants a nonzero field element")
        m = x.field.q - 1
        if m == 0 or self.M % m != 0:
            raise ValueError("multiplicative order %d is not tracked" % m)
        if e % m == 0:
            return self.one()
        z = pow(self.zeta_M, self.M // m, self.ell)
        return self.elem(pow(z, (e * dlog(x)) % m, self.ell))

    def register_symbolic(self, value, sym):
        self._symbolic.setdefault(value % self.ell, sym)

    def symbolic_for(self, value):
        return self._symbolic.get(value % self.ell)

    def to_json(self):
        return {"ell": self.ell, "p": self.p, "M": self.M, "zeta_p": self.zeta_p, "zeta_M": self.zeta_M}

    def __repr__(self):
        return "CoeffField(ell=%d, p=%d, M=%d)" % (self.ell, self.p, self.M)


class CoeffElem:
    """Element of F_ell; thin wrapper so values do not mix across fields."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value % field.ell

    def _coerce(self, other):
        if isinstance(other, CoeffElem):
            if other.field is not self.field:
                raise ValueError("values from different coefficient fields")
            return other
        if isinstance(other, int):
            return CoeffElem(self.field, other)
        return None

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CoeffElem(self.field, self.value * other.value)

    __rmul__ = __mul__

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CoeffElem(self.field, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return CoeffElem(self.field, -self.value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CoeffElem(self.field, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CoeffElem(self.field, other.value - self.value)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return CoeffElem(self.field, pow(self.value, -1, self.field.ell))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e):
        if self.value == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return CoeffElem(self.field, 1 if e == 0 else 0)
        if e < 0:
            return CoeffElem(self.field, pow(pow(self.value, -1, self.field.ell), -e, self.field.ell))
        return CoeffElem(self.field, pow(self.value, e, self.field.ell))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash((id(self.field), self.value))

    def is_zero(self):
        return self.value == 0

    def __repr__(self):
        return "CoeffElem(%d mod %d)" % (self.value, self.field.ell)


class SymbolicSum:
    """Integer combination of powers of a fixed root of unity of order n.

    counts maps exponent -> integer multiplicity.  Supports the few ops the
    engines need to carry Gauss type sums through to a complex rendering.
    """

    __slots__ = ("counts", "order")

    def __init__(self, counts, order):
        self.order = order
        self.counts = {e % order: c for e, c in counts.items() if c}

    def __add__(self, other):
        if not isinstance(other, SymbolicSum) or other.order != self.order:
            return NotImplemented
        out = dict(self.counts)
        for e, c in other.counts.items():
            out[e] = out.get(e, 0) + c
        return SymbolicSum(out, self.order)

    def __neg__(self):
        return SymbolicSum({e: -c for e, c in self.counts.items()}, self.order)

    def rotate(self, k):
        """Multiply by the k-th power of the root."""
        return SymbolicSum({(e + k) % self.order: c for e, c in self.counts.items()}, self.order)

    def scale(self, m):
        return SymbolicSum({e: c * m for e, c in self.counts.items()}, self.order)

    def to_value(self, field):
        if field.p * field.M != self.order:
            raise ValueError("symbolic order does not match the field")
        acc = 0
        for e, c in self.counts.items():
            acc += c * pow(field.zeta_pM, e, field.ell)
        return field.elem(acc)

    def to_complex(self, root_choice=1):
        if math.gcd(root_choice, self.order) != 1:
            raise ValueError("root_choice must be prime to the order")
        acc = 0j
        for e, c in self.counts.items():
            acc += c * cmath.exp(2j * cmath.pi * root_choice * e / self.order)
        return acc

    def __repr__(self):
        return "SymbolicSum(%r, order=%d)" % (self.counts, self.order)


def coeff_setup(p, orders, d_max=1):
    """Choose the coefficient prime and roots.

    M = lcm(orders), then ell is the smallest prime with ell = 1 mod p*M and
    ell > max(d_max, p*M); h is the smallest primitive root mod ell.  d_max
    guards the Newton identity divisions: every m <= d_max stays invertible.
    """
    if not _is_prime(p):
        raise ValueError("p must be prime")
    M = 1
    for o in orders:
        if o < 1:
            raise ValueError("orders must be positive")
        M = M * o // math.gcd(M, o)
    if M % p == 0:
        raise ValueError("orders must be prime to p")
    step = p * M
    ell = max(d_max, step) + 1
    ell += (1 - ell) % step
    while not _is_prime(ell):
        ell += step
    h = _smallest_primitive_root(ell)
    return CoeffField(ell, p, M, h)


def second_ell(field, d_max=1):
    """The next admissible coefficient field after the given one."""
    step = field.p * field.M
    ell = field.ell + step
    while not _is_prime(ell) or ell <= max(d_max, step):
        ell += step
    return CoeffField(ell, field.p, field.M, _smallest_primitive_root(ell))


def _smallest_primitive_root(ell):
    from .gf import _prime_factors

    fac = _prime_factors(ell - 1)
    for h in range(2, ell):
        if all(pow(h, (ell - 1) // r, ell) != 1 for r in fac):
            return h
    raise ValueError("no primitive root, ell is not prime")


def complex_embed(field, v, root_choice=1):
    """Render a tracked value as a complex number, for display only.

    Accepts a CoeffElem whose symbolic form was recorded (roots of unity and
    values registered by the engines) or a SymbolicSum directly.  Raises
    ValueError('no embedding available') otherwise.
    """
    if isinstance(v, SymbolicSum):
        return v.to_complex(root_choice)
    if isinstance(v, CoeffElem):
        sym = field.symbolic_for(v.value)
        if sym is not None:
            return sym.to_complex(root_choice)
    raise ValueError("no embedding available")
