"""Local epsilon factors of rank one objects on the formal disc.

The value reported everywhere is the factor evaluated at geometric
Frobenius, an invertible element of F_ell.  Three flavours of object:

* a character chi of F_q((pi)) extended across the closed point by zero
  ("shriek") or by invariants ("star"),
* a punctual object, a finite list of Frobenius eigenvalues sitting at the
  closed point,
* formal sums of the above (multiplicativity helpers).

For ramified chi both extensions agree and the factor is the finite sum

    eps(chi, w dpi) = (-1)**a * q**v(w) * sum over units u0 mod pi**(swan+1)
                      of chi**-1(c**-1 u0) psi(Tr(Res(c**-1 u0 w dpi)))

with a = swan + 1, c = pi**(a + v(w)).  The sum is independent of the
choice of c of that valuation; eps_tate exposes the choice for testing.
A table-driven walk over multiplicative coordinates computes the same sum
quickly; eps_tate_slow is the definitional anchor.

For wild chi a closed product formula avoids the sum entirely: writing h
for the negated wild datum of chi and dh for its differential, the factor
is chi(w/h') q**(...) times, at even swan, a quadratic Gauss constant
gamma_psi.  Acceptance checks compare it against the sum on random data.
"""

from __future__ import annotations

from .gf import CapExceeded, FqElem, SmallFieldTables
from .coeff import SymbolicSum
from .chars import LocalCharacter, OracleCharacter
from .localfield import Form, LaurentSeries, PrecisionError, dlog, residue, reversion

TATE_CAP = 1 << 22

_TABLE_CACHE = {}


def _tables(field):
    got = _TABLE_CACHE.get(field)
    if got is None:
        got = SmallFieldTables(field)
        _TABLE_CACHE[field] = got
    return got


class EpsilonResult:
    """Value at Frobenius plus conductor bookkeeping."""

    __slots__ = ("value", "conductor_a", "conductor_a_omega", "method")

    def __init__(self, value, conductor_a, conductor_a_omega, method):
        self.value = value
        self.conductor_a = conductor_a
        self.conductor_a_omega = conductor_a_omega
        self.method = method

    def __repr__(self):
        return "EpsilonResult(value=%d, a=%d, a_omega=%d, method=%s)" % (
            self.value.value,
            self.conductor_a,
            self.conductor_a_omega,
            self.method,
        )

    def to_json(self):
        return {
            "value": self.value.value,
            "conductor_a": self.conductor_a,
            "conductor_a_omega": self.conductor_a_omega,
            "method": self.method,
        }


# ---------------------------------------------------------------------------
# quadratic Gauss constant


def _gamma_counts(field, c):
    p = field.p
    if p == 2:
        raise ValueError("the quadratic constant needs odd characteristic")
    if isinstance(c, int):
        c = field.elem(c)
    if c.is_zero():
        raise ValueError("the quadratic constant needs a nonzero scale")
    half = field.elem(pow(2, -1, p))
    from .gf import trace

    counts = {}
    for t in field.elements():
        e = trace(c * t * t * half).as_int() % p
        counts[e] = counts.get(e, 0) + 1
    return counts


def gamma_psi_symbolic(field, c):
    """The quadratic constant as a formal sum of psi powers, for complex
    rendering (modulus sqrt(q) under every embedding)."""
    return -SymbolicSum(_gamma_counts(field, c), field.p)


def gamma_psi(coeff, field, c):
    """gamma_psi(c) = -sum over t in F_q of psi(Tr(c t**2 / 2)), p odd.

    Satisfies gamma_psi(c) / gamma_psi(1) = quadratic character of c and
    |gamma_psi| = sqrt(q) under any complex embedding.  The symbolic sum is
    offered to the coefficient field's registry so complex_embed can price
    the value when no root of unity already claimed it.
    """
    counts = _gamma_counts(field, c)
    val = coeff.zero()
    for e, k in counts.items():
        val = val + coeff.psi(e) * coeff.elem(k)
    out = -val
    coeff.register_symbolic(out.value, -SymbolicSum(counts, field.p))
    return out


# ---------------------------------------------------------------------------
# epsilon of a character, Tate sum


def _tate_shape(chi, omega):
    if not chi.is_ramified():
        raise ValueError("the unit-sum formula applies to ramified characters")
    n = chi.swan()
    a = 1 + n
    v_om = omega.valuation()
    return n, n + 1, a, v_om, a + v_om


def eps_tate_slow(chi, omega, c_unit=None, kind="shriek"):
    """Definitional unit sum, one series evaluation per unit residue.

    c_unit, if given, replaces pi**a_omega by c_unit * pi**a_omega as the
    normalizing element; the result must not depend on it.
    """
    field, coeff = chi.field, chi.coeff
    n, nu, a, v_om, a_om = _tate_shape(chi, omega)
    if field.q ** nu > TATE_CAP:
        raise CapExceeded("unit sum would exceed %d terms" % TATE_CAP)
    margin = a_om + nu + 2
    c = LaurentSeries.pi_power(field, a_om, margin)
    if c_unit is not None:
        c = c * c_unit
    cinv = c.inverse()
    inv = chi.inverse()
    total = coeff.zero()
    for key in OracleCharacter.unit_keys(field, nu):
        u0 = LaurentSeries.make(field, 0, [field.from_index(i) for i in key], nu)
        x = cinv * u0
        total = total + inv(x) * coeff.psi_trace(residue(Form(x * omega.w)))
    value = coeff.elem(-1) ** a * coeff.elem(field.q) ** v_om * total
    return EpsilonResult(value, a, a_om, "tate_slow")


def eps_tate(chi, omega, kind="shriek"):
    """Table-driven walk computing the same unit sum as eps_tate_slow.

    Units are written a0 * prod (1 + c_i pi**i); the character value splits
    level by level and the residue pairing is linear in the additive
    coefficients, so each unit costs a few table lookups.
    """
    field, coeff = chi.field, chi.coeff
    ell = coeff.ell
    q = field.q
    n, nu, a, v_om, a_om = _tate_shape(chi, omega)
    if q ** nu > TATE_CAP:
        raise CapExceeded("unit sum would exceed %d terms" % TATE_CAP)
    tab = _tables(field)
    inv = chi.inverse()

    # residue pairing window: W[j] multiplies the coefficient of pi**j in u0
    W = [omega.w.coeff(a_om - 1 - j).index() for j in range(nu)]

    # psi powers and the trace-to-prime-field table, all as plain ints
    p = field.p
    psi_pow = [coeff.psi(t).value for t in range(p)]
    from .gf import trace as _trace

    tr = [0] * q
    for idx in range(q):
        tr[idx] = _trace(field.from_index(idx)).as_int()

    # fold the outer a0 loop: P[d] = sum over a0 of chi**-1(a0) psi(tr(a0*d))
    kummer = [0] * q
    for idx in range(1, q):
        kummer[idx] = coeff.kummer_chi(inv.tame_e, field.from_index(idx)).value
    P = [0] * q
    for d in range(q):
        acc = 0
        for a0 in range(1, q):
            acc += kummer[a0] * psi_pow[tr[tab.mul[a0][d]]]
        P[d] = acc % ell

    # per level unit-values of chi**-1 on 1 + c pi**i
    T = []
    for i in range(1, nu):
        row = [1] * q
        if inv.wild_h.coeffs:
            for cdx in range(1, q):
                u = LaurentSeries.make(
                    field, 0, [field.one()] + [field.zero()] * (i - 1) + [field.from_index(cdx)], nu
                )
                row[cdx] = inv(u).value
        T.append(row)

    mul = tab.mul
    add = tab.add
    total = 0
    one_idx = field.one().index()

    if nu == 1:
        total = P[mul[one_idx][W[0]]]
    else:
        last = nu - 1
        Tlast = T[last - 1]

        def walk(level, vec, pref):
            nonlocal total
            if level == last:
                d = 0
                for j in range(nu):
                    if vec[j]:
                        d = add[d][mul[vec[j]][W[j]]]
                m = mul[vec[0]][W[last]]
                acc = P[d]
                if m:
                    for cdx in range(1, q):
                        acc += Tlast[cdx] * P[add[d][mul[cdx][m]]]
                else:
                    for cdx in range(1, q):
                        acc += Tlast[cdx] * P[d]
                total = (total + pref * acc) % ell
                return
            row = T[level - 1]
            walk(level + 1, vec, pref)
            for cdx in range(1, q):
                new = list(vec)
                for j in range(nu - 1, level - 1, -1):
                    s = new[j - level]
                    if s:
                        new[j] = add[new[j]][mul[cdx][s]]
                walk(level + 1, new, (pref * row[cdx]) % ell)

        walk(1, [one_idx] + [0] * (nu - 1), 1)

    sign = ell - 1 if a % 2 else 1
    value = (sign * pow(q, v_om, ell) * total) % ell
    value = (value * pow(chi.c_pi.value, a_om, ell)) % ell
    return EpsilonResult(coeff.elem(value), a, a_om, "tate")


# ---------------------------------------------------------------------------
# closed forms: unramified, punctual, wild


def eps_unramified(chi, omega, kind):
    """chi unramified: star keeps the full line (a = 0), shriek punches it
    out (a = 1); both factors are powers of c_pi and q."""
    if chi.is_ramified():
        raise ValueError("character is ramified")
    coeff = chi.coeff
    v_om = omega.valuation()
    q = chi.field.q
    if kind == "star":
        value = (chi.c_pi * coeff.elem(q)) ** v_om
        a = 0
    elif kind == "shriek":
        value = chi.c_pi ** (1 + v_om) * coeff.elem(q) ** v_om
        a = 1
    else:
        raise ValueError("kind must be 'shriek' or 'star'")
    return EpsilonResult(value, a, a + v_om, "unramified")


def eps_punctual(coeff, eigenvalues):
    """Object concentrated at the closed point with the given Frobenius
    eigenvalues: the factor is the inverse of their product and the
    conductor is minus the rank, blind to the 1-form."""
    value = coeff.one()
    for lam in eigenvalues:
        lam = coeff.elem(lam) if isinstance(lam, int) else lam
        value = value * lam ** -1
    r = len(eigenvalues)
    return EpsilonResult(value, -r, -r, "punctual")


def eps_closed_form(chi, omega):
    """Product formula for wild chi, no unit sum.

    With h the negated wild datum (pole order n >= 1) and n' the round-up
    half of n, the factor is chi(w/h') q**(v(w/h') - n') for odd n, and for
    even n (odd p) an extra quadratic Gauss constant at the leading
    coefficient of h appears.
    """
    n = chi.swan()
    if n == 0:
        raise ValueError("closed form needs a wild character")
    field, coeff = chi.field, chi.coeff
    w = omega.w
    pad = max(w.prec - (w.v if w.coeffs else w.prec), n + 2) + n + 3
    H = LaurentSeries.make(field, chi.wild_h.v, [-c for c in chi.wild_h.coeffs], chi.wild_h.v + pad)
    ratio = w / H.derivative()
    value = chi(ratio)
    vr = ratio.valuation()
    q = coeff.elem(field.q)
    if n % 2:
        half = (n + 1) // 2
        value = value * q ** (vr - half)
    else:
        if field.p == 2:
            raise ValueError("even pole order in characteristic 2 has no closed form here")
        half = n // 2
        h0 = H.coeff(-n)
        value = value * q ** (vr - half - 1) * gamma_psi(coeff, field, h0 * (-n % field.p))
    a = 1 + n
    return EpsilonResult(value, a, a + omega.valuation(), "closed_form")


# ---------------------------------------------------------------------------
# dispatch and identities


def eps_local(chi, omega, kind="shriek", method="auto"):
    """Factor of a character extended across the point, any method.

    method: auto picks the fast route; tate, tate_slow and closed force a
    specific engine (closed needs wild ramification).
    """
    if not chi.is_ramified():
        return eps_unramified(chi, omega, kind)
    if method == "auto" or method == "tate":
        return eps_tate(chi, omega, kind)
    if method == "tate_slow":
        return eps_tate_slow(chi, omega, kind=kind)
    if method == "closed":
        return eps_closed_form(chi, omega)
    raise ValueError("unknown method %r" % (method,))


def check_change_of_form(chi, omega, alpha, kind="shriek"):
    """eps(chi, alpha w) == chi(alpha) q**v(alpha) eps(chi, w)."""
    coeff = chi.coeff
    scaled = Form(omega.w * alpha)
    lhs = eps_local(chi, scaled, kind).value
    rhs = chi(alpha) * coeff.elem(chi.field.q) ** alpha.valuation() * eps_local(chi, omega, kind).value
    return lhs == rhs


def check_unramified_twist(chi, omega, c, kind="shriek"):
    """eps(chi * unram(c), w) == c**a_omega(chi) eps(chi, w)."""
    base = eps_local(chi, omega, kind)
    twisted = eps_local(chi.twist_unramified(c), omega, kind)
    c = chi.coeff.elem(c) if isinstance(c, int) else c
    return twisted.value == c ** base.conductor_a_omega * base.value


def check_exact_sequence(chi, omega):
    """For unramified chi the star extension is the shriek extension plus
    the point stalk: factors multiply, conductors add."""
    if chi.is_ramified():
        star = eps_local(chi, omega, "star")
        shriek = eps_local(chi, omega, "shriek")
        return star.value == shriek.value and star.conductor_a == shriek.conductor_a
    star = eps_local(chi, omega, "star")
    shriek = eps_local(chi, omega, "shriek")
    stalk = eps_punctual(chi.coeff, [chi.c_pi])
    ok_value = star.value == shriek.value * stalk.value
    ok_a = star.conductor_a == shriek.conductor_a + stalk.conductor_a
    ok_aw = star.conductor_a_omega == shriek.conductor_a_omega + stalk.conductor_a_omega
    return ok_value and ok_a and ok_aw


def eps_virtual(parts):
    """Multiply factors of a formal sum of local objects.

    parts: iterable of (EpsilonResult, multiplicity); negative multiplicity
    divides.  Returns an EpsilonResult with summed conductors.
    """
    value = None
    a = 0
    aw = 0
    for res, m in parts:
        piece = res.value ** m
        value = piece if value is None else value * piece
        a += m * res.conductor_a
        aw += m * res.conductor_a_omega
    if value is None:
        raise ValueError("empty formal sum")
    return EpsilonResult(value, a, aw, "virtual")


def transport_form(omega, s):
    """The form rewritten in the uniformizer pi' = s(pi): if t undoes s
    then w(pi) dpi becomes w(t(pi')) t'(pi') dpi'."""
    t = reversion(s)
    w = omega.w
    if w.coeffs:
        padded = LaurentSeries.make(w.field, w.v, list(w.coeffs), max(w.prec, s.prec))
    else:
        padded = w
    return Form(padded.compose(t) * t.derivative())
