"""Truncated Laurent series over finite fields, 1-forms and residues.

A LaurentSeries knows its field, its valuation window and its precision:
coefficients are exact for exponents in [v, prec) and unknown beyond.  A
Form is w * dpi for a series w.  RationalFunction and Point model functions
on the projective line and their expansions at closed points, including the
point at infinity and points of higher degree (expansion happens over the
residue field at a distinguished root of the point's minimal polynomial).

Conventions:

* residue(w dpi) is the coefficient of pi**(-1) in w, defined only when the
  window proves it,
* dlog u = (du/dpi)/u dpi, so residue(dlog u) = v(u) for any u,
* tame norms: unramified ones are Galois orbit products under the
  coefficientwise Frobenius, Kummer ones (pi = pi'**e, gcd(e, p) = 1) are
  products of u(zeta pi') over the e-th roots of unity; wild extensions are
  refused.
"""

from __future__ import annotations

from .gf import FieldDesc, FqElem, frobenius, residue_field


class PrecisionError(ValueError):
    """A coefficient outside the known window was requested."""


# ---------------------------------------------------------------------------
# Laurent series


class LaurentSeries:
    """Sum of c_i pi**i for i in [v, prec), exact inside the window.

    The zero-to-precision series is stored with an empty coefficient tuple
    and v == prec.  Leading zeros are always trimmed, so v is the true
    valuation whenever the series is nonzero.
    """

    __slots__ = ("field", "v", "prec", "coeffs")

    def __init__(self, field, v, prec, coeffs):
        self.field = field
        self.v = v
        self.prec = prec
        self.coeffs = coeffs

    @classmethod
    def make(cls, field, v, coeffs, prec=None):
        coeffs = [field.elem(c) if isinstance(c, (int, list, tuple)) else c for c in coeffs]
        if prec is None:
            prec = v + len(coeffs)
        coeffs = coeffs[: prec - v]
        while coeffs and coeffs[0].is_zero():
            coeffs = coeffs[1:]
            v += 1
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        if not coeffs:
            return cls(field, prec, prec, ())
        got = tuple(coeffs) + tuple(field.zero() for _ in range(prec - v - len(coeffs)))
        return cls(field, v, prec, got)

    @classmethod
    def zero(cls, field, prec):
        return cls(field, prec, prec, ())

    @classmethod
    def one(cls, field, prec):
        return cls.make(field, 0, [field.one()], prec)

    @classmethod
    def pi_power(cls, field, k, prec):
        return cls.make(field, k, [field.one()], prec)

    def is_zero(self):
        """Zero as far as the window can tell."""
        return not self.coeffs

    def valuation(self):
        if not self.coeffs:
            raise PrecisionError("series is zero to precision %d, valuation unknown" % self.prec)
        return self.v

    def coeff(self, k):
        if k < self.v:
            return self.field.zero()
        if k >= self.prec:
            raise PrecisionError("coefficient at %d beyond precision %d" % (k, self.prec))
        return self.coeffs[k - self.v]

    def truncate(self, prec):
        if prec > self.prec:
            raise PrecisionError("cannot raise precision from %d to %d" % (self.prec, prec))
        return LaurentSeries.make(self.field, self.v, list(self.coeffs), prec)

    def shift(self, k):
        """Multiply by pi**k."""
        return LaurentSeries(self.field, self.v + k, self.prec + k, self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentSeries.make(self.field, 0, [other], self.prec)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        v = min(self.v if self.coeffs else prec, other.v if other.coeffs else prec)
        out = [self.field.zero()] * max(prec - v, 0)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                k = s.v + i
                if v <= k < prec:
                    out[k - v] = out[k - v] + c
        return LaurentSeries.make(self.field, v, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.field, self.v, self.prec, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentSeries.make(self.field, 0, [other], self.prec)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FqElem)):
            c = self.field.elem(other) if isinstance(other, int) else other
            return LaurentSeries.make(
                self.field, self.v, [a * c for a in self.coeffs], self.prec
            )
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            prec = min(
                (self.v if self.coeffs else self.prec) + other.prec,
                (other.v if other.coeffs else other.prec) + self.prec,
            )
            return LaurentSeries.zero(self.field, prec)
        prec = min(self.v + other.prec, other.v + self.prec)
        v = self.v + other.v
        out = [self.field.zero()] * (prec - v)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k >= prec - v:
                    break
                out[k] = out[k] + a * b
        return LaurentSeries.make(self.field, v, out, prec)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of a series that is zero to precision")
        lead = self.coeffs[0].inverse()
        n = self.prec - self.v
        # invert the unit part 1 + x by iterative coefficient recovery
        unit = [c * lead for c in self.coeffs]
        inv = [self.field.zero()] * n
        inv[0] = self.field.one()
        for k in range(1, n):
            acc = self.field.zero()
            for j in range(1, k + 1):
                if j < len(unit):
                    acc = acc + unit[j] * inv[k - j]
            inv[k] = -acc
        out = [c * lead for c in inv]
        return LaurentSeries.make(self.field, -self.v, out, -self.v + n)

    def __truediv__(self, other):
        if isinstance(other, (int, FqElem)):
            c = self.field.elem(other) if isinstance(other, int) else other
            return self * c.inverse()
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = LaurentSeries.one(self.field, self.prec)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        """Equality on the common window (engines compare normalized data)."""
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        lo = min(self.v if self.coeffs else prec, other.v if other.coeffs else prec)
        for k in range(lo, prec):
            if self.coeff(k) != other.coeff(k):
                return False
        return True

    def __hash__(self):
        return hash((self.field, self.v, self.prec, tuple(c.coeffs for c in self.coeffs)))

    def unit_part(self):
        """u with self = pi**v * u, u a unit."""
        return self.shift(-self.valuation())

    def derivative(self):
        out = []
        for i, c in enumerate(self.coeffs):
            k = self.v + i
            out.append(c * (k % self.field.p))
        return LaurentSeries.make(self.field, self.v - 1, out, self.prec - 1)

    def compose(self, inner):
        """self(inner) for inner of valuation >= 1; self must need no
        negative powers unless inner is invertible (it is, v >= 1 means
        nonzero), computed by Horner to the available precision."""
        if inner.valuation() < 1:
            raise ValueError("composition wants an inner series of valuation >= 1")
        prec = min(self.prec, inner.prec)
        acc = LaurentSeries.zero(self.field, prec + 1)
        # Horner from the top of the window
        for k in range(self.prec - 1, self.v - 1, -1):
            acc = acc * inner + LaurentSeries.make(self.field, 0, [self.coeff(k)], prec + 1)
        if self.v:
            acc = acc * (inner ** self.v if self.v > 0 else (inner.inverse()) ** (-self.v))
        return acc

    def map_coeffs(self, fn, field=None):
        field = field or self.field
        return LaurentSeries.make(field, self.v, [fn(c) for c in self.coeffs], self.prec)

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "v": self.v if self.coeffs else self.prec,
            "prec": self.prec,
            "coeffs": [list(c.coeffs) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj):
        field = FieldDesc.from_json(obj["field"])
        return cls.make(field, obj["v"], [field.elem(c) for c in obj["coeffs"]], obj["prec"])

    def __repr__(self):
        if not self.coeffs:
            return "O(pi^%d)" % self.prec
        bits = []
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                bits.append("%r*pi^%d" % (list(c.coeffs), self.v + i))
        return " + ".join(bits) + " + O(pi^%d)" % self.prec


class Form:
    """A 1-form w * dpi."""

    __slots__ = ("w",)

    def __init__(self, w):
        self.w = w

    @property
    def field(self):
        return self.w.field

    def valuation(self):
        return self.w.valuation()

    def __mul__(self, other):
        if isinstance(other, LaurentSeries) or isinstance(other, (int, FqElem)):
            return Form(self.w * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Form):
            return self.w / other.w
        if isinstance(other, (LaurentSeries, int, FqElem)):
            return Form(self.w / other)
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, Form) and self.w == other.w

    def __repr__(self):
        return "(%r) dpi" % (self.w,)

    def to_json(self):
        return self.w.to_json()

    @classmethod
    def from_json(cls, obj):
        return cls(LaurentSeries.from_json(obj))


def residue(form):
    """Coefficient of pi**(-1) dpi; needs the window to cover -1."""
    w = form.w
    if w.coeffs and w.v > -1:
        return w.field.zero()
    if w.prec <= -1:
        raise PrecisionError("residue needs precision past pi^-1, have %d" % w.prec)
    return w.coeff(-1)


def dlog(u):
    """dlog u = (u'/u) dpi."""
    return Form(u.derivative() / u)


def reversion(s):
    """Inverse of pi' = s(pi) under composition, for v(s) = 1.

    Returns t with s(t(pi')) = pi' to the available precision.
    """
    if s.valuation() != 1:
        raise ValueError("reversion wants valuation exactly 1")
    field = s.field
    prec = s.prec
    a1 = s.coeff(1)
    t = LaurentSeries.make(field, 1, [a1.inverse()], prec)
    for k in range(2, prec):
        r = s.compose(t) - LaurentSeries.pi_power(field, 1, prec)
        if r.is_zero() or r.valuation() > k:
            continue
        gamma = r.coeff(r.valuation())
        if r.valuation() < k:
            raise ValueError("reversion drifted, broken invariant")
        t = t + LaurentSeries.make(field, k, [-(gamma / a1)], prec)
    return t


def norm_tame(u, e=1, emb=None):
    """Norm of u along a tame extension of local fields.

    e > 1: totally tame Kummer layer pi = pi'**e (u lives in the pi'
    variable, the result in pi); requires gcd(e, p) = 1 and the e-th roots
    of unity in the coefficient field.  emb: unramified layer given by a
    TowerEmbedding, Galois orbit product under the coefficientwise
    Frobenius, coefficients descend along emb.  Both together compose the
    two layers (Kummer first).  Wild requests raise ValueError.
    """
    out = u
    if e > 1:
        field = out.field
        if e % field.p == 0:
            raise ValueError("wildly ramified extensions are not supported")
        if (field.q - 1) % e != 0:
            raise ValueError("need the %d-th roots of unity in F_%d" % (e, field.q))
        zeta = out.field.gen() ** ((field.q - 1) // e)
        acc = None
        for i in range(e):
            z = zeta ** i
            twisted = LaurentSeries.make(
                field,
                out.v,
                [c * (z ** ((out.v + j) % (field.q - 1))) for j, c in enumerate(out.coeffs)],
                out.prec,
            )
            acc = twisted if acc is None else acc * twisted
        # the product is invariant under pi' -> zeta pi', so only exponents
        # divisible by e survive
        coeffs = []
        if acc.coeffs:
            if acc.v % e:
                raise ValueError("Kummer norm produced a stray valuation, broken invariant")
            for j, c in enumerate(acc.coeffs):
                k = acc.v + j
                if k % e == 0:
                    coeffs.append(c)
                elif not c.is_zero():
                    raise ValueError("Kummer norm left a non invariant term, broken invariant")
            out = LaurentSeries.make(field, acc.v // e, coeffs, acc.v // e + len(coeffs))
        else:
            out = LaurentSeries.zero(field, acc.prec // e)
    if emb is not None:
        big, small = emb.big, emb.small
        if out.field != big:
            raise ValueError("series does not live in the big field of emb")
        d = big.n // small.n
        acc = out
        cur = out
        for _ in range(d - 1):
            cur = cur.map_coeffs(lambda c: frobenius(c, small.n))
            acc = acc * cur
        out = acc.map_coeffs(emb.section, small)
    return out


# ---------------------------------------------------------------------------
# polynomials and rational functions over F_q


class Poly:
    """Dense polynomial over a FieldDesc, low degree first, no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = [field.elem(c) if isinstance(c, int) else c for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def const(cls, field, c):
        return cls(field, [c])

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self):
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero()
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] = a[i] + c
        return Poly(self.field, a)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, FqElem)):
            return Poly(self.field, [other if isinstance(other, FqElem) else self.field.elem(other)])
        raise TypeError("cannot coerce %r" % (other,))

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field, [])
        z = self.field.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        m = len(other.coeffs)
        if len(rem) < m:
            return Poly(self.field, []), self
        inv = other.leading().inverse()
        quo = [self.field.zero()] * (len(rem) - m + 1)
        for k in range(len(rem) - m, -1, -1):
            c = rem[k + m - 1] * inv
            if not c.is_zero():
                quo[k] = c
                for i, oc in enumerate(other.coeffs):
                    rem[i + k] = rem[i + k] - c * oc
        return Poly(self.field, quo), Poly(self.field, rem[: m - 1])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self):
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            out.append(c * (i % self.field.p))
        return Poly(self.field, out)

    def evaluate(self, x, emb=None):
        """Value at x; emb embeds the coefficients into x's field first."""
        target = x.field
        acc = target.zero()
        for c in reversed(self.coeffs):
            cc = emb.embed(c) if emb is not None else c
            acc = acc * x + cc
        return acc

    def powmod(self, e, mod):
        out = Poly(self.field, [1])
        base = self % mod
        while e:
            if e & 1:
                out = (out * base) % mod
            base = (base * base) % mod
            e >>= 1
        return out

    def multiplicity_of(self, factor):
        """Largest k with factor**k dividing self."""
        if self.is_zero():
            raise ValueError("zero polynomial has infinite multiplicity")
        k = 0
        cur = self
        while True:
            quo, rem = cur.divmod(factor)
            if not rem.is_zero():
                return k
            k += 1
            cur = quo

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, tuple(c.coeffs for c in self.coeffs)))

    def __repr__(self):
        return "Poly(%r)" % ([list(c.coeffs) for c in self.coeffs],)

    def to_json(self):
        return [list(c.coeffs) for c in self.coeffs]


class RationalFunction:
    """num/den over F_q, gcd reduced, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if not g.is_zero() and g.degree() > 0:
            num = num // g
            den = den // g
        lead = den.leading().inverse()
        self.num = num * lead
        self.den = den * lead

    @classmethod
    def from_poly(cls, p):
        return cls(p, Poly(p.field, [1]))

    @property
    def field(self):
        return self.num.field if not self.num.is_zero() else self.den.field

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, FqElem)):
            return RationalFunction.from_poly(Poly(self.den.field, [other]))
        raise TypeError("cannot coerce %r" % (other,))

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def derivative(self):
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def evaluate(self, x, emb=None):
        d = self.den.evaluate(x, emb)
        if d.is_zero():
            raise ZeroDivisionError("pole at the evaluation point")
        return self.num.evaluate(x, emb) / d

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __repr__(self):
        return "RationalFunction(%r / %r)" % (self.num, self.den)

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, field, obj):
        num = Poly(field, [field.elem(c) for c in obj["num"]])
        den = Poly(field, [field.elem(c) for c in obj["den"]])
        return cls(num, den)


def poly_is_irreducible(f):
    """Rabin test over the coefficient field F_q."""
    d = f.degree()
    if d < 1:
        return False
    if d == 1:
        return True
    q = f.field.q
    x = Poly.x(f.field)
    top = x.powmod(q ** d, f)
    if not ((top - (x % f)) % f).is_zero():
        return False
    from .gf import _prime_factors

    for r in _prime_factors(d):
        mid = x.powmod(q ** (d // r), f)
        if ((mid - (x % f)) % f).gcd(f).degree() != 0:
            return False
    return True


_IRRED_CACHE = {}


def monic_irreducibles(field, d):
    """All monic irreducible polynomials of degree d over the field, cached."""
    key = (field, d)
    got = _IRRED_CACHE.get(key)
    if got is not None:
        return got
    out = []
    q = field.q
    for idx in range(q ** d):
        coeffs = []
        k = idx
        for _ in range(d):
            coeffs.append(field.from_index(k % q))
            k //= q
        coeffs.append(field.one())
        f = Poly(field, coeffs)
        if poly_is_irreducible(f):
            out.append(f)
    _IRRED_CACHE[key] = tuple(out)
    return _IRRED_CACHE[key]


def factor_poly(f):
    """Factor into monic irreducibles by escalating trial division.

    Returns (unit, [(irreducible, multiplicity), ...]) with factors sorted
    by degree.  Fine for the small degrees this library works at.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = f.leading()
    cur = f.monic()
    out = []
    d = 1
    while cur.degree() > 0:
        if d > cur.degree() // 2:
            out.append((cur, 1))
            break
        for cand in monic_irreducibles(f.field, d):
            k = 0
            while True:
                quo, rem = cur.divmod(cand)
                if not rem.is_zero():
                    break
                cur = quo
                k += 1
            if k:
                out.append((cand, k))
            if cur.degree() < d:
                break
        d += 1
    return unit, out


# ---------------------------------------------------------------------------
# closed points of P^1 and expansion


class Point:
    """Closed point of P^1 over F_q: infinity, or a monic irreducible
    minimal polynomial.  Expansion data (residue field, embedding of F_q,
    distinguished root) is built lazily and cached."""

    __slots__ = ("base", "minpoly", "at_infinity", "_expansion")

    def __init__(self, base, minpoly=None, at_infinity=False):
        self.base = base
        self.at_infinity = at_infinity
        self._expansion = None
        if at_infinity:
            self.minpoly = None
        else:
            mp = minpoly.monic()
            if mp.degree() < 1:
                raise ValueError("minimal polynomial must have positive degree")
            self.minpoly = mp

    @classmethod
    def infinity(cls, base):
        return cls(base, at_infinity=True)

    @classmethod
    def rational(cls, base, a):
        a = base.elem(a) if isinstance(a, int) else a
        return cls(base, Poly(base, [-a, base.one()]))

    def degree(self):
        return 1 if self.at_infinity else self.minpoly.degree()

    def residue_data(self):
        """(residue field, embedding of the base, distinguished root alpha).

        alpha is the root g**k of the minimal polynomial with the smallest
        exponent k; for degree 1 it is the rational point itself, and at
        infinity the residue field is the base with alpha unused (None).
        """
        if self._expansion is not None:
            return self._expansion
        from .gf import identity_embedding

        if self.at_infinity:
            self._expansion = (self.base, identity_embedding(self.base), None)
            return self._expansion
        d = self.degree()
        if d == 1:
            alpha = -self.minpoly.coeffs[0]
            self._expansion = (self.base, identity_embedding(self.base), alpha)
            return self._expansion
        big, emb = residue_field(self.base, d)
        g = big.gen()
        alpha = None
        cur = big.one()
        for k in range(big.q - 1):
            if self.minpoly.evaluate(cur, emb).is_zero():
                alpha = cur
                break
            cur = cur * g
        if alpha is None:
            raise ValueError("minimal polynomial has no root in its residue field")
        self._expansion = (big, emb, alpha)
        return self._expansion

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        if self.at_infinity or other.at_infinity:
            return self.at_infinity == other.at_infinity and self.base == other.base
        return self.base == other.base and self.minpoly == other.minpoly

    def __hash__(self):
        return hash((self.base, self.at_infinity, self.minpoly))

    def __repr__(self):
        if self.at_infinity:
            return "Point(infinity)"
        return "Point(minpoly=%r)" % ([list(c.coeffs) for c in self.minpoly.coeffs],)

    def to_json(self):
        if self.at_infinity:
            return {"type": "infinity"}
        return {"type": "finite", "minpoly": [c.coeffs[0] if self.base.n == 1 else list(c.coeffs) for c in self.minpoly.coeffs]}

    @classmethod
    def from_json(cls, base, obj):
        if obj["type"] == "infinity":
            return cls.infinity(base)
        coeffs = [base.elem(c) for c in obj["minpoly"]]
        return cls(base, Poly(base, coeffs))


def _poly_series_at(poly, point, prec, emb, alpha):
    """Series of poly(t) in the local parameter at the point."""
    field = emb.big if not point.at_infinity else poly.field
    if point.at_infinity:
        # t = 1/pi
        coeffs = list(reversed(poly.coeffs))
        if not coeffs:
            return LaurentSeries.zero(poly.field, prec)
        return LaurentSeries.make(poly.field, -poly.degree(), coeffs, prec)
    # t = alpha + pi, Taylor shift by synthetic division
    rem = [emb.embed(c) for c in poly.coeffs]
    out = []
    for _ in range(len(rem)):
        # divide rem by (x - alpha): value first
        acc = field.zero()
        newrem = []
        for c in reversed(rem):
            acc = acc * alpha + c
            newrem.append(acc)
        out.append(acc)
        rem = list(reversed(newrem[:-1]))
        if not rem:
            break
    return LaurentSeries.make(field, 0, out, prec)


def expand_at(r, point, prec):
    """Laurent expansion of a rational function at a closed point.

    Over the residue field of the point; the local parameter is t - t(x)
    at finite points (t - alpha over the residue field in higher degree)
    and 1/t at infinity.
    """
    big, emb, alpha = point.residue_data()
    margin = prec + max(r.den.degree(), 1) + max(r.num.degree(), 1) + 2
    num = _poly_series_at(r.num, point, margin, emb, alpha)
    den = _poly_series_at(r.den, point, margin, emb, alpha)
    if den.is_zero():
        raise ZeroDivisionError("denominator vanished identically, broken reduction")
    out = num / den
    if out.coeffs and out.prec > prec:
        out = out.truncate(prec)
    return out


def ord_at(r, point):
    """Valuation of a rational function at a closed point."""
    if r.is_zero():
        raise ValueError("the zero function has no valuation")
    if point.at_infinity:
        return r.den.degree() - r.num.degree()
    return r.num.multiplicity_of(point.minpoly) - r.den.multiplicity_of(point.minpoly)


def expand_form_at(w, point, prec):
    """Expansion of the global form w(t) dt at a point, as a local Form.

    At finite points dt = dpi; at infinity t = 1/pi gives dt = -pi**-2 dpi.
    """
    if point.at_infinity:
        series = expand_at(w, point, prec + 2)
        return Form(series.shift(-2) * (-1))
    return Form(expand_at(w, point, prec))
