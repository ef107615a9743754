"""Finite field towers with explicit, serializable descriptors.

Fields F_{p^n} are described by a monic irreducible modulus over F_p and a
fixed multiplicative generator, so that two runs (or two programs) agree on
every element encoding.  Elements are coefficient vectors in the modulus
basis.  The absolute cap for any enumerated field is q**m <= 2**24.

The deterministic recipe:

* modulus: the lexicographically first monic irreducible polynomial of the
  requested degree, scanning constant coefficient fastest,
* generator: the first element of multiplicative order q - 1, scanning the
  integer encodings 1, 2, ... (a nonzero seed rotates the scan start, the
  modulus never depends on the seed).
"""

from __future__ import annotations

import math

FIELD_CAP = 1 << 24


class CapExceeded(ValueError):
    """Raised when a requested enumeration would exceed the desk cap."""


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p, coefficients as int lists, low degree
# first, no trailing zeros


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _ptrim(out)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _ptrim(out)


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and a:
        k = len(a) - 1 - dm
        c = (a[-1] * inv) % p
        for i, cm in enumerate(m):
            a[i + k] = (a[i + k] - c * cm) % p
        _ptrim(a)
    return a


def _pmulmod(a, b, m, p):
    return _pmod(_pmul(a, b, p), m, p)


def _ppowmod(a, e, m, p):
    out = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            out = _pmulmod(out, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return out


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def _is_irreducible(f, p):
    """Rabin test: f of degree n is irreducible over F_p iff x^(p^n) = x
    mod f and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n."""
    n = len(f) - 1
    if n <= 0:
        return False
    x = [0, 1]
    xq = _ppowmod(x, p ** n, f, p)
    if _pmod(_padd(xq, [0, p - 1], p), f, p) != []:
        return False
    for r in _prime_factors(n):
        xr = _ppowmod(x, p ** (n // r), f, p)
        g = _pgcd(_padd(xr, [0, p - 1], p), f, p)
        if len(g) - 1 != 0:
            return False
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


# ---------------------------------------------------------------------------


class FieldDesc:
    """Descriptor of F_{p^n}: modulus and generator pin all encodings.

    modulus is a tuple of n + 1 ints (ascending powers, monic), generator a
    tuple of n ints giving the coefficient vector of a fixed multiplicative
    generator.
    """

    __slots__ = ("p", "n", "modulus", "generator")

    def __init__(self, p, n, modulus, generator):
        if not _is_prime(p):
            raise ValueError("p must be prime, got %r" % (p,))
        if n < 1:
            raise ValueError("n must be >= 1")
        if p ** n > FIELD_CAP:
            raise CapExceeded("field size %d exceeds cap %d" % (p ** n, FIELD_CAP))
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        self.p = p
        self.n = n
        self.modulus = modulus
        self.generator = tuple(c % p for c in generator)
        if len(self.generator) != n:
            raise ValueError("generator must have n coefficients")

    @property
    def q(self):
        return self.p ** self.n

    def elem(self, coeffs):
        if isinstance(coeffs, int):
            return FqElem(self, (coeffs % self.p,) + (0,) * (self.n - 1))
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) > self.n:
            raise ValueError("too many coefficients")
        return FqElem(self, coeffs + (0,) * (self.n - len(coeffs)))

    def zero(self):
        return self.elem(0)

    def one(self):
        return self.elem(1)

    def gen(self):
        return FqElem(self, self.generator)

    def from_index(self, k):
        """Element whose coefficient vector is the base-p digits of k."""
        p = self.p
        coeffs = []
        for _ in range(self.n):
            coeffs.append(k % p)
            k //= p
        return FqElem(self, tuple(coeffs))

    def elements(self):
        for k in range(self.q):
            yield self.from_index(k)

    def __eq__(self, other):
        return (
            isinstance(other, FieldDesc)
            and (self.p, self.n, self.modulus, self.generator)
            == (other.p, other.n, other.modulus, other.generator)
        )

    def __hash__(self):
        return hash((self.p, self.n, self.modulus, self.generator))

    def __repr__(self):
        return "FieldDesc(p=%d, n=%d)" % (self.p, self.n)

    def to_json(self):
        return {
            "p": self.p,
            "n": self.n,
            "modulus": list(self.modulus),
            "generator": list(self.generator),
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["p"], obj["n"], obj["modulus"], obj["generator"])


class FqElem:
    """Element of F_{p^n} as a coefficient vector in the modulus basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise ValueError("elements live in different fields")
            return other
        if isinstance(other, int):
            return self.field.elem(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return FqElem(
            self.field,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.field
        prod = _pmod(_pmul(list(self.coeffs), list(other.coeffs), f.p), list(f.modulus), f.p)
        return FqElem(f, tuple(prod) + (0,) * (f.n - len(prod)))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # q - 2 exponentiation, fields here are small
        return self ** (self.field.q - 2)

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
        f = self.field
        if self.is_zero():
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return f.one() if e == 0 else f.zero()
        e %= f.q - 1
        out = f.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def index(self):
        """Integer encoding: base-p digits are the coefficients."""
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.field.p + c
        return k

    def as_int(self):
        """The value of a prime-field element as an int in [0, p)."""
        if any(c for c in self.coeffs[1:]):
            raise ValueError("element is not in the prime field")
        return self.coeffs[0]

    def __repr__(self):
        return "FqElem(%r, %r)" % (self.field, list(self.coeffs))


class TowerEmbedding:
    """Embedding F_{p^n} -> F_{p^{nm}} determined by a root of the small
    modulus in the big field.  embed is a ring homomorphism; section inverts
    it on the image (and raises off the image)."""

    __slots__ = ("small", "big", "root", "_matrix")

    def __init__(self, small, big, root):
        if small.p != big.p or big.n % small.n != 0:
            raise ValueError("not a subfield relation")
        self.small = small
        self.big = big
        self.root = root
        self._matrix = None

    def embed(self, x):
        if x.field != self.small:
            raise ValueError("element not in the small field")
        acc = self.big.zero()
        power = self.big.one()
        for c in x.coeffs:
            if c:
                acc = acc + power * c
            power = power * self.root
        return acc

    def section(self, y):
        """Solve embed(x) = y by Gaussian elimination over F_p."""
        if y.field != self.big:
            raise ValueError("element not in the big field")
        p = self.big.p
        if self._matrix is None:
            cols = []
            power = self.big.one()
            for _ in range(self.small.n):
                cols.append(power.coeffs)
                power = power * self.root
            self._matrix = cols
        cols = self._matrix
        rows = self.big.n
        aug = [[cols[j][i] for j in range(self.small.n)] + [y.coeffs[i]] for i in range(rows)]
        piv = []
        r = 0
        for c in range(self.small.n):
            sel = next((i for i in range(r, rows) if aug[i][c]), None)
            if sel is None:
                continue
            aug[r], aug[sel] = aug[sel], aug[r]
            inv = pow(aug[r][c], -1, p)
            aug[r] = [(v * inv) % p for v in aug[r]]
            for i in range(rows):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
            piv.append(c)
            r += 1
        sol = [0] * self.small.n
        for i, c in enumerate(piv):
            sol[c] = aug[i][-1]
        for i in range(r, rows):
            if aug[i][-1]:
                raise ValueError("element is not in the embedded subfield")
        x = self.small.elem(sol)
        if self.embed(x) != y:
            raise ValueError("element is not in the embedded subfield")
        return x


def fq_build(p, n, seed=0):
    """Build the canonical descriptor of F_{p^n}.

    The modulus scan is lexicographic and seed independent; the generator
    scan starts at an offset rotated by the seed, so fixed seed gives a
    reproducible descriptor and seed 0 gives the smallest generator.
    """
    if p ** n > FIELD_CAP:
        raise CapExceeded("field size %d exceeds cap %d" % (p ** n, FIELD_CAP))
    modulus = None
    for k in range(p ** n):
        cand = []
        kk = k
        for _ in range(n):
            cand.append(kk % p)
            kk //= p
        cand.append(1)
        if _is_irreducible(cand, p):
            modulus = tuple(cand)
            break
    if modulus is None:
        raise ValueError("no irreducible polynomial found, impossible")
    desc = FieldDesc(p, n, modulus, (1,) + (0,) * (n - 1))
    q = p ** n
    order_target = q - 1
    fac = _prime_factors(order_target) if order_target > 1 else []
    span = max(order_target, 1)
    for i in range(span):
        k = 1 + (i + seed) % span
        x = desc.from_index(k)
        if x.is_zero():
            continue
        if all((x ** (order_target // r)) != desc.one() for r in fac):
            return FieldDesc(p, n, modulus, x.coeffs)
    raise ValueError("no generator found, impossible")


def frobenius(x, i=1):
    """x -> x^(p^i), the i-th power of the absolute Frobenius."""
    return x ** (x.field.p ** i)


def _orbit_degree(x, emb):
    if emb is None:
        return 1, x.field.n
    if x.field != emb.big:
        raise ValueError("element not in the big field")
    return emb.small.n, emb.big.n // emb.small.n


def trace(x, emb=None):
    """Trace to the subfield given by emb, or to F_p when emb is None.

    Returns an FqElem of the small field (of the prime field for None).
    """
    step, m = _orbit_degree(x, emb)
    acc = x
    cur = x
    for _ in range(m - 1):
        cur = frobenius(cur, step)
        acc = acc + cur
    if emb is None:
        prime = prime_field(x.field.p)
        return prime.elem(acc.coeffs[0]) if _in_prime(acc) else _fail_subfield()
    return emb.section(acc)


def norm(x, emb=None):
    """Norm to the subfield given by emb, or to F_p when emb is None."""
    step, m = _orbit_degree(x, emb)
    acc = x
    cur = x
    for _ in range(m - 1):
        cur = frobenius(cur, step)
        acc = acc * cur
    if emb is None:
        prime = prime_field(x.field.p)
        return prime.elem(acc.coeffs[0]) if _in_prime(acc) else _fail_subfield()
    return emb.section(acc)


def _in_prime(x):
    return all(c == 0 for c in x.coeffs[1:])


def _fail_subfield():
    raise ValueError("trace/norm landed outside the subfield, broken tower")


_PRIME_CACHE = {}


def prime_field(p):
    if p not in _PRIME_CACHE:
        _PRIME_CACHE[p] = fq_build(p, 1)
    return _PRIME_CACHE[p]


def dlog(x, base=None):
    """Discrete log of x to the given base (field generator by default).

    Baby-step giant-step, refused above 2**20 because the table would not
    be desk sized.
    """
    f = x.field
    if x.is_zero():
        raise ValueError("dlog of zero")
    if f.q > 1 << 20:
        raise CapExceeded("dlog table for q=%d exceeds 2^20" % f.q)
    if base is None:
        base = f.gen()
    order = f.q - 1
    if order == 1:
        return 0
    m = math.isqrt(order) + 1
    table = {}
    cur = f.one()
    for j in range(m):
        table.setdefault(cur.coeffs, j)
        cur = cur * base
    giant = base ** (-m % order)
    cur = x
    for i in range(m + 1):
        j = table.get(cur.coeffs)
        if j is not None:
            return (i * m + j) % order
        cur = cur * giant
    raise ValueError("dlog failed, base is not a generator")


def find_embedding(small, big):
    """Embedding of small into big: locate a root of small.modulus among
    the subfield of big of the right order (tiny scan, never the whole
    big field)."""
    if small.p != big.p or big.n % small.n != 0:
        raise ValueError("not a subfield relation")
    if small.n == big.n:
        # identity-degree embedding still needs a root if the moduli differ
        pass
    q_small = small.q
    gen_sub = big.gen() ** ((big.q - 1) // (q_small - 1)) if q_small > 2 else big.one()
    candidates = [big.zero()]
    cur = big.one()
    for _ in range(q_small - 1):
        candidates.append(cur)
        cur = cur * gen_sub
        if cur == big.one():
            break
    mod = small.modulus
    for cand in candidates:
        acc = big.zero()
        power = big.one()
        for c in mod:
            if c:
                acc = acc + power * c
            power = power * cand
        if acc.is_zero():
            return TowerEmbedding(small, big, cand)
    raise ValueError("no root of the small modulus in the big field")


def residue_field(base, d, seed=0):
    """Degree d extension of base with a norm compatible generator.

    The returned descriptor's generator G satisfies
    norm(G, emb) == base.generator, which makes multiplicative characters
    of the base compose with norms by plain exponent bookkeeping.  Returns
    (desc, emb) with emb the embedding of base.
    """
    if d == 1:
        return base, identity_embedding(base)
    big = fq_build(base.p, base.n * d, seed)
    emb = find_embedding(base, big)
    q = base.q
    Q = big.q
    idx = (Q - 1) // (q - 1)
    # dlog of norm(G) to the base generator, inside the small field
    j = dlog(norm(big.gen(), emb), base.gen()) if q > 2 else 0
    if q > 2:
        jinv = pow(j, -1, q - 1)
        k = jinv
        while math.gcd(k, Q - 1) != 1:
            k += q - 1
    else:
        k = 1
        while math.gcd(k, Q - 1) != 1:
            k += 1
    gen = big.gen() ** k
    desc = FieldDesc(big.p, big.n, big.modulus, gen.coeffs)
    emb = TowerEmbedding(base, desc, FqElem(desc, emb.root.coeffs))
    return desc, emb


def _modulus_root(field):
    """The canonical root of field.modulus inside field itself (x, i.e. the
    second basis vector, or the scalar -c0 in degree 1)."""
    if field.n == 1:
        return field.elem(-field.modulus[0])
    return field.elem([0, 1])


def identity_embedding(field):
    return TowerEmbedding(field, field, _modulus_root(field))


class SmallFieldTables:
    """Flat add/mul/inverse tables for a small field, elements as indices.

    Index encoding matches FqElem.index().  Meant for inner loops; refuse
    fields above 2**10 where the q*q tables stop being desk sized.
    """

    __slots__ = ("field", "q", "add", "mul", "inv", "neg", "index_of_one")

    def __init__(self, field):
        q = field.q
        if q > 1 << 10:
            raise CapExceeded("tables for q=%d exceed 2^10" % q)
        self.field = field
        self.q = q
        els = [field.from_index(k) for k in range(q)]
        self.add = [[(els[i] + els[j]).index() for j in range(q)] for i in range(q)]
        self.mul = [[(els[i] * els[j]).index() for j in range(q)] for i in range(q)]
        self.neg = [(-els[i]).index() for i in range(q)]
        self.inv = [0] * q
        for i in range(1, q):
            self.inv[i] = els[i].inverse().index()
        self.index_of_one = 1


class LogField:
    """Zech logarithm tables for F_{p^n}, packed integer element encoding.

    exp[e] is the index encoding of G**e, log is its inverse permutation,
    zech[e] = log(1 + G**e) with -1 standing for log(0).  Everything an
    inner loop needs (mul, add, trace to F_p, norm exponent to a subfield)
    happens on ints.
    """

    __slots__ = ("field", "q", "order", "exp", "log", "zech", "p", "_plog")

    def __init__(self, field):
        q = field.q
        if q > FIELD_CAP:
            raise CapExceeded("field size %d exceeds cap %d" % (q, FIELD_CAP))
        self.field = field
        self.q = q
        self.p = field.p
        self.order = q - 1
        exp = [0] * (q - 1)
        cur = field.one()
        g = field.gen()
        for e in range(q - 1):
            exp[e] = cur.index()
            cur = cur * g
        if cur != field.one():
            raise ValueError("generator does not have full order")
        log = [-1] * q
        for e, idx in enumerate(exp):
            if log[idx] != -1:
                raise ValueError("generator does not have full order")
            log[idx] = e
        p = field.p
        zech = [0] * (q - 1)
        for e in range(q - 1):
            idx = exp[e]
            low = idx % p
            idx2 = idx - low + ((low + 1) % p)
            zech[e] = log[idx2]
        self.exp = exp
        self.log = log
        self.zech = zech
        # log encoding of the prime field scalars 0..p-1 (index encoding is
        # the scalar itself, low digit)
        self._plog = [log[c] for c in range(p)]

    # all arithmetic below is on logs, with -1 as log(0)

    def mul(self, a, b):
        if a < 0 or b < 0:
            return -1
        return (a + b) % self.order

    def add(self, a, b):
        if a < 0:
            return b
        if b < 0:
            return a
        d = (b - a) % self.order
        z = self.zech[d]
        if z < 0:
            return -1
        return (a + z) % self.order

    def neg_log(self, a):
        if a < 0:
            return -1
        if self.p == 2:
            return a
        return (a + self.order // 2) % self.order

    def sub(self, a, b):
        return self.add(a, self.neg_log(b))

    def pow(self, a, e):
        if a < 0:
            if e <= 0:
                raise ZeroDivisionError("0**nonpositive in log field")
            return -1
        return (a * e) % self.order

    def scalar_log(self, c):
        """log of the prime field scalar c (int mod p)."""
        return self._plog[c % self.p]

    def trace_to_prime(self, a):
        """Absolute trace of G**a as an int in [0, p)."""
        if a < 0:
            return 0
        acc = -1
        cur = a
        for _ in range(self.field.n):
            acc = self.add(acc, cur)
            cur = (cur * self.p) % self.order
        if acc < 0:
            return 0
        idx = self.exp[acc]
        if idx >= self.p:
            raise ValueError("trace left the prime field, broken tables")
        return idx

    def elem_log(self, x):
        if x.field != self.field:
            raise ValueError("element from another field")
        return self.log[x.index()]
