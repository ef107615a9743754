"""Rank one characters of a local field F_q((pi)) with values in F_ell.

A character is stored as three independent pieces relative to the chosen
uniformizer pi:

* c_pi, its value at pi (an invertible coefficient element),
* tame_e, the exponent through which units act by the Kummer character of
  the residue field (taken mod q - 1),
* wild_h, an additive datum h with only negative pi-exponents; a unit u
  contributes psi(Tr(Res(h dlog u))).

wild_h is kept in a canonical reduced form: rewriting a pi**(-p*k) term
with coefficient a into a pi**(-k) term with coefficient a**(1/p) never
changes the character, and repeating until no exponent is divisible by p
makes the representative unique.  The Swan conductor is then the pole
order of the reduced datum.

OracleCharacter is the brute-force twin: an explicit value table on unit
residues mod pi**nu, checked to be multiplicative when built.  Engines
verify fast paths against it.
"""

from __future__ import annotations

from .gf import CapExceeded, FqElem, frobenius
from .localfield import Form, LaurentSeries, PrecisionError, dlog, residue, reversion

ORACLE_CAP = 1 << 16
REDUCE_CAP = 64


def as_reduce(h):
    """Canonical representative of an additive wild datum.

    Drops exponents >= 0 (they never pair with a unit), then removes every
    negative exponent divisible by p via a**(1/p) rewrites from the deepest
    pole upward.  The window of h must reach 0 so all negative terms are
    known.  Raises after REDUCE_CAP rewrites.
    """
    field = h.field
    p = field.p
    if h.prec < 0:
        raise PrecisionError("wild datum window must reach exponent 0")
    terms = {}
    lo = h.v if h.coeffs else 0
    for k in range(lo, 0):
        c = h.coeff(k)
        if not c.is_zero():
            terms[-k] = c
    steps = 0
    while True:
        divisible = [m for m in terms if m % p == 0]
        if not divisible:
            break
        m = max(divisible)
        steps += 1
        if steps > REDUCE_CAP:
            raise ValueError("additive reduction exceeded %d rewrites" % REDUCE_CAP)
        a = terms.pop(m)
        k = m // p
        root = frobenius(a, field.n - 1)
        got = terms.get(k, field.zero()) + root
        if got.is_zero():
            terms.pop(k, None)
        else:
            terms[k] = got
    if not terms:
        return LaurentSeries.zero(field, 1)
    n = max(terms)
    coeffs = [terms.get(n - i, field.zero()) for i in range(n)]
    return LaurentSeries.make(field, -n, coeffs, 1)


class LocalCharacter:
    """Multiplicative character of F_q((pi)) into the coefficient field."""

    __slots__ = ("field", "coeff", "c_pi", "tame_e", "wild_h")

    def __init__(self, field, coeff, c_pi, tame_e, wild_h=None):
        self.field = field
        self.coeff = coeff
        self.c_pi = c_pi if not isinstance(c_pi, int) else coeff.elem(c_pi)
        if self.c_pi.value % coeff.ell == 0:
            raise ValueError("character value at pi must be invertible")
        self.tame_e = tame_e % (field.q - 1)
        if wild_h is None:
            wild_h = LaurentSeries.zero(field, 1)
        if wild_h.field != field:
            raise ValueError("wild datum must live over the residue field")
        self.wild_h = as_reduce(wild_h)

    # -- structure ---------------------------------------------------------

    def swan(self):
        return -self.wild_h.v if self.wild_h.coeffs else 0

    def is_ramified(self):
        return self.tame_e != 0 or bool(self.wild_h.coeffs)

    def artin_a(self, kind):
        """Conductor exponent of the extension of this character across the
        point: kind "shriek" extends by zero, kind "star" by invariants."""
        if kind not in ("shriek", "star"):
            raise ValueError("kind must be 'shriek' or 'star'")
        if self.is_ramified():
            return 1 + self.swan()
        return 1 if kind == "shriek" else 0

    def a_with_form(self, kind, omega):
        """Conductor exponent shifted by the twist of a nonzero 1-form."""
        v = omega.valuation() if isinstance(omega, Form) else omega
        return self.artin_a(kind) + v

    # -- evaluation ---------------------------------------------------------

    def eval_unit_const(self, c):
        """Value on a constant unit of the residue field."""
        if not isinstance(c, FqElem):
            c = self.field.elem(c)
        if c.is_zero():
            raise ZeroDivisionError("character of zero")
        return self.coeff.kummer_chi(self.tame_e, c)

    def __call__(self, x):
        """Value on a nonzero element given as a Laurent series.

        Needs the series known to swan + 1 coefficients past its valuation.
        """
        if isinstance(x, (int, FqElem)):
            return self.eval_unit_const(x)
        v = x.valuation()
        need = self.swan() + 1
        if x.prec - v < need:
            raise PrecisionError(
                "character needs %d coefficients, series has %d" % (need, x.prec - v)
            )
        u = x.unit_part()
        out = self.c_pi ** v * self.coeff.kummer_chi(self.tame_e, u.coeff(0))
        if self.wild_h.coeffs:
            pairing = residue(Form(self.wild_h * dlog(u).w))
            out = out * self.coeff.psi_trace(pairing)
        return out

    # -- algebra -------------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, LocalCharacter):
            return NotImplemented
        if other.field != self.field or other.coeff is not self.coeff:
            raise ValueError("characters live on different fields")
        return LocalCharacter(
            self.field,
            self.coeff,
            self.c_pi * other.c_pi,
            self.tame_e + other.tame_e,
            self.wild_h + other.wild_h,
        )

    def inverse(self):
        return LocalCharacter(
            self.field, self.coeff, self.c_pi ** -1, -self.tame_e, -self.wild_h
        )

    def twist_unramified(self, c):
        """Multiply by the unramified character sending pi to c."""
        c = self.coeff.elem(c) if isinstance(c, int) else c
        return LocalCharacter(self.field, self.coeff, self.c_pi * c, self.tame_e, self.wild_h)

    def transport(self, s):
        """The same character presented in the uniformizer pi' = s(pi).

        s must be a unit times pi with enough precision; the new value at
        pi' is chi(s), the tame exponent is unchanged and the wild datum is
        rewritten through the inverse substitution.
        """
        if s.valuation() != 1:
            raise ValueError("a uniformizer has valuation 1")
        if s.prec < self.swan() + 3:
            raise PrecisionError("uniformizer series too short to carry the wild datum")
        t = reversion(s)
        if self.wild_h.coeffs:
            # the datum is an exact Laurent polynomial: pad it with known
            # zeros so composition keeps enough window
            padded = LaurentSeries.make(
                self.field, self.wild_h.v, list(self.wild_h.coeffs), s.prec
            )
            new_h = padded.compose(t)
        else:
            new_h = LaurentSeries.zero(self.field, 1)
        return LocalCharacter(self.field, self.coeff, self(s), self.tame_e, new_h)

    def __eq__(self, other):
        if not isinstance(other, LocalCharacter):
            return NotImplemented
        return (
            self.field == other.field
            and self.c_pi == other.c_pi
            and self.tame_e == other.tame_e
            and self.wild_h == other.wild_h
        )

    def __repr__(self):
        return "LocalCharacter(q=%d, c_pi=%d, tame_e=%d, swan=%d)" % (
            self.field.q,
            self.c_pi.value,
            self.tame_e,
            self.swan(),
        )

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "c_pi": self.c_pi.value,
            "tame_e": self.tame_e,
            "wild_h": {
                "v": self.wild_h.v if self.wild_h.coeffs else 0,
                "coeffs": [list(c.coeffs) for c in self.wild_h.coeffs],
            },
        }

    @classmethod
    def from_json(cls, coeff, obj):
        from .gf import FieldDesc

        field = FieldDesc.from_json(obj["field"])
        wild = obj.get("wild_h") or {"v": 0, "coeffs": []}
        h = LaurentSeries.make(
            field, wild["v"], [field.elem(tuple(c)) for c in wild["coeffs"]], 1
        )
        return cls(field, coeff, coeff.elem(obj["c_pi"]), obj["tame_e"], h)


class OracleCharacter:
    """Value table of a character on unit residues mod pi**nu.

    The table is keyed by coefficient index tuples of length nu.  On
    construction the multiplicative law is checked, exhaustively when the
    unit group is small and on a dense random sample otherwise.
    """

    __slots__ = ("field", "coeff", "nu", "c_pi", "table")

    def __init__(self, field, coeff, nu, c_pi, table, check=True):
        self.field = field
        self.coeff = coeff
        self.nu = nu
        self.c_pi = c_pi
        self.table = table
        if check:
            self._verify()

    @classmethod
    def from_character(cls, chi, nu, check=True):
        field = chi.field
        if nu < chi.swan() + 1:
            raise ValueError("table depth %d below swan + 1 = %d" % (nu, chi.swan() + 1))
        if field.q ** nu > ORACLE_CAP:
            raise CapExceeded("oracle table would exceed %d entries" % ORACLE_CAP)
        table = {}
        for key in cls.unit_keys(field, nu):
            u = LaurentSeries.make(field, 0, [field.from_index(i) for i in key], nu)
            table[key] = chi(u)
        return cls(field, chi.coeff, nu, chi.c_pi, table, check=check)

    @staticmethod
    def unit_keys(field, nu):
        q = field.q
        for head in range(1, q):
            for tail in range(q ** (nu - 1)):
                key = [head]
                k = tail
                for _ in range(nu - 1):
                    key.append(k % q)
                    k //= q
                yield tuple(key)

    def _mul_key(self, a, b):
        q = self.field.q
        ea = [self.field.from_index(i) for i in a]
        eb = [self.field.from_index(i) for i in b]
        out = [self.field.zero()] * self.nu
        for i, x in enumerate(ea):
            if x.is_zero():
                continue
            for j, y in enumerate(eb):
                if i + j >= self.nu:
                    break
                out[i + j] = out[i + j] + x * y
        return tuple(c.index() for c in out)

    def _verify(self):
        import random as _random

        keys = list(self.table)
        pairs = []
        if len(keys) <= 300:
            pairs = [(a, b) for a in keys for b in keys]
        else:
            rng = _random.Random(0xC0FFEE)
            pairs = [(rng.choice(keys), rng.choice(keys)) for _ in range(200)]
        for a, b in pairs:
            ab = self._mul_key(a, b)
            if self.table[a] * self.table[b] != self.table[ab]:
                raise ValueError("value table is not multiplicative at %r * %r" % (a, b))

    def __call__(self, x):
        v = x.valuation()
        if x.prec - v < self.nu:
            raise PrecisionError("oracle needs %d coefficients" % self.nu)
        u = x.unit_part()
        key = tuple(u.coeff(i).index() for i in range(self.nu))
        return self.c_pi ** v * self.table[key]

    def swan_by_definition(self):
        """Largest m >= 1 with the character nontrivial on 1 + pi**m O, by
        scanning the table; 0 if trivial on all principal units."""
        one = self.coeff.one()
        out = 0
        for m in range(1, self.nu):
            seen = False
            for c in range(1, self.field.q):
                key = [1] + [0] * (self.nu - 1)
                key[m] = c
                if self.table[tuple(key)] != one:
                    seen = True
                    break
            if seen:
                out = m
        return out
