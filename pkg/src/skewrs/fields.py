"""Exact field arithmetic for the three supported coefficient fields.

Each backend bundles a field L with a finite-order automorphism sigma:

* ``FiniteField``       -- GF(p^d) with sigma a power of Frobenius.
* ``RationalFunctions`` -- F_q(z) with sigma a Moebius substitution on z
                           that fixes F_q pointwise.
* ``CyclotomicField``   -- Q(chi) for chi a primitive m-th root of unity
                           (m prime) with sigma(chi) = chi^k.

All arithmetic is exact.  Elements are small immutable value objects that
carry a reference to their field context; the usual operators are
overloaded.  Contexts are immutable after construction and safe to share.

Finite fields of size up to 2^16 get exp/log tables with respect to a
primitive element, so multiplication, inversion and Frobenius application
are table lookups.  Elements print as powers of the modulus root whenever
that root is primitive (all bundled examples qualify), otherwise in
polynomial form; printing then parsing round-trips either way.
"""

from __future__ import annotations

import math
from fractions import Fraction

_TABLE_LIMIT = 1 << 16


class FieldError(ValueError):
    pass


def same_context(a, b):
    """True when two contexts denote the same field with the same sigma."""
    return a is b or a.key == b.key


def _require_same(a, b):
    if not same_context(a.ctx, b.ctx):
        raise FieldError("elements belong to different field contexts")


# ---------------------------------------------------------------------------
# integer-coefficient polynomial text, used for moduli ("a^12+a^7+...+1")
# ---------------------------------------------------------------------------

def parse_int_poly(text, symbol):
    """Parse a sum of integer-coefficient powers of ``symbol`` into a
    low-first coefficient list.  Only what a modulus line needs."""
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise FieldError("empty polynomial")
    # normalize leading sign, then split into signed terms
    terms = []
    cur = ""
    for ch in s:
        if ch in "+-" and cur:
            terms.append(cur)
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    terms.append(cur)
    coeffs = {}
    for term in terms:
        t = term
        sign = 1
        if t.startswith("-"):
            sign, t = -1, t[1:]
        if t.startswith("+"):
            t = t[1:]
        if not t:
            raise FieldError(f"malformed term in {text!r}")
        if symbol in t:
            head, _, tail = t.partition(symbol)
            c = int(head) if head else 1
            if tail.startswith("^"):
                k = int(tail[1:])
            elif tail == "":
                k = 1
            else:
                raise FieldError(f"malformed term {term!r}")
        else:
            c, k = int(t), 0
        coeffs[k] = coeffs.get(k, 0) + sign * c
    deg = max(coeffs)
    return [coeffs.get(i, 0) for i in range(deg + 1)]


# ---------------------------------------------------------------------------
# GF(p^d)
# ---------------------------------------------------------------------------

class FFElement:
    """Element of a ``FiniteField``; ``val`` packs base-p digits."""

    __slots__ = ("ctx", "val")

    def __init__(self, ctx, val):
        self.ctx = ctx
        self.val = val

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.val == other.val and same_context(self.ctx, other.ctx)
        if isinstance(other, int):
            return self == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash(("ff", self.val))

    def __bool__(self):
        return self.val != 0

    def __add__(self, other):
        _require_same(self, other)
        return FFElement(self.ctx, self.ctx.add_int(self.val, other.val))

    def __sub__(self, other):
        _require_same(self, other)
        return FFElement(self.ctx, self.ctx.sub_int(self.val, other.val))

    def __neg__(self):
        return FFElement(self.ctx, self.ctx.neg_int(self.val))

    def __mul__(self, other):
        _require_same(self, other)
        return FFElement(self.ctx, self.ctx.mul_int(self.val, other.val))

    def __truediv__(self, other):
        _require_same(self, other)
        return FFElement(self.ctx, self.ctx.mul_int(self.val, self.ctx.inv_int(other.val)))

    def __pow__(self, k):
        return FFElement(self.ctx, self.ctx.pow_int(self.val, k))

    def inverse(self):
        return FFElement(self.ctx, self.ctx.inv_int(self.val))

    def __repr__(self):
        return self.ctx.format(self)

    __str__ = __repr__


def _factorize(n):
    fs = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fs[d] = fs.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        fs[n] = fs.get(n, 0) + 1
    return fs


class FiniteField:
    """GF(p^d) presented as F_p[a]/(modulus), sigma = Frobenius^e.

    ``modulus`` is monic irreducible of degree d, given as a low-first
    coefficient list or as text in the generator symbol.  Element values
    pack the coefficient vector in base p, so the residue class of the
    symbol itself has value p.
    """

    kind = "finite-field"

    def __init__(self, p, degree, modulus, generator="a", frobenius_power=1):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise FieldError(f"characteristic {p} is not prime")
        if isinstance(modulus, str):
            modulus = parse_int_poly(modulus, generator)
        modulus = [c % p for c in modulus]
        while modulus and modulus[-1] == 0:
            modulus.pop()
        if len(modulus) != degree + 1:
            raise FieldError(f"modulus degree {len(modulus) - 1} != {degree}")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        self.char = p
        self.degree = degree
        self.modulus = tuple(modulus)
        self.generator_symbol = generator
        self.frobenius_power = frobenius_power % degree
        self.size = p ** degree
        self.order = degree // math.gcd(degree, frobenius_power)
        # residue of a^d used during reduction: a^d = -(f - a^d)
        self._adeg = self._pack([(-c) % p for c in modulus[:degree]])
        if not self._is_irreducible():
            raise FieldError("modulus is not irreducible")
        self._exp = None
        self._log = None
        self._sigma_mult = None
        self.generator_primitive = False
        if self.size <= _TABLE_LIMIT:
            self._build_tables()
        self.key = ("ff", p, degree, self.modulus, self.frobenius_power)
        self.zero = FFElement(self, 0)
        self.one = FFElement(self, 1)
        self.generator = FFElement(self, p if degree > 1 else 1 % p)

    # -- packed-int helpers ------------------------------------------------

    def _pack(self, digits):
        v = 0
        for c in reversed(digits):
            v = v * self.char + c
        return v

    def _digits(self, v):
        p = self.char
        out = []
        for _ in range(self.degree):
            v, r = divmod(v, p)
            out.append(r)
        return out

    def add_int(self, u, v):
        if self.char == 2:
            return u ^ v
        p = self.char
        return self._pack([(x + y) % p for x, y in zip(self._digits(u), self._digits(v))])

    def neg_int(self, u):
        if self.char == 2:
            return u
        p = self.char
        return self._pack([(-x) % p for x in self._digits(u)])

    def sub_int(self, u, v):
        if self.char == 2:
            return u ^ v
        return self.add_int(u, self.neg_int(v))

    def _raw_mul(self, u, v):
        # schoolbook product with on-the-fly reduction by the modulus
        p, d = self.char, self.degree
        if p == 2:
            r = 0
            top = 1 << d
            while u:
                if u & 1:
                    r ^= v
                u >>= 1
                v <<= 1
                if v & top:
                    v = (v ^ top) ^ self._adeg
            return r
        du, dv = self._digits(u), self._digits(v)
        acc = [0] * (2 * d - 1)
        for i, x in enumerate(du):
            if x:
                for j, y in enumerate(dv):
                    acc[i + j] = (acc[i + j] + x * y) % p
        # fold coefficients of a^k for k >= d using a^d's residue
        for k in range(2 * d - 2, d - 1, -1):
            c = acc[k]
            if c:
                acc[k] = 0
                red = self._digits(self._adeg)
                # a^k = a^(k-d) * a^d
                for j, y in enumerate(red):
                    acc[k - d + j] = (acc[k - d + j] + c * y) % p
        return self._pack(acc[:d])

    def _raw_pow(self, u, k):
        r, b = 1, u
        while k:
            if k & 1:
                r = self._raw_mul(r, b)
            b = self._raw_mul(b, b)
            k >>= 1
        return r

    def _is_irreducible(self):
        # Rabin: x^(p^d) == x mod f, and x^(p^(d/l)) != x for prime l | d
        p, d = self.char, self.degree
        if d == 1:
            return True
        xq = self._raw_pow_frob(self._pack([0, 1] + [0] * (d - 2)) if d >= 2 else 1, d)
        if xq != (p if d >= 2 else 1):
            return False
        for ell in _factorize(d):
            xe = self._raw_pow_frob(p, d // ell)
            if xe == p:
                return False
        return True

    def _raw_pow_frob(self, u, k):
        # u^(p^k) by repeated p-th powering
        for _ in range(k):
            u = self._raw_pow(u, self.char)
        return u

    def _element_order(self, u):
        n = self.size - 1
        order = n
        for q in _factorize(n):
            while order % q == 0 and self._raw_pow(u, order // q) == 1:
                order //= q
        return order

    def _build_tables(self):
        q = self.size
        gen_val = self.char if self.degree > 1 else 1 % self.char
        if self._element_order(gen_val) == q - 1:
            prim = gen_val
            self.generator_primitive = True
        else:
            prim = None
            for cand in range(2, q):
                if self._element_order(cand) == q - 1:
                    prim = cand
                    break
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            exp[i + q - 1] = acc
            log[acc] = i
            acc = self._raw_mul(acc, prim)
        self._exp = exp
        self._log = log
        # sigma^k multiplies discrete logs by p^(e*k mod d)
        self._sigma_mult = [pow(self.char, (self.frobenius_power * k) % self.degree, q - 1)
                            for k in range(self.order)]

    # -- public int-level ops (used by the rational-function backend) -------

    def mul_int(self, u, v):
        if u == 0 or v == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[u] + self._log[v]]
        return self._raw_mul(u, v)

    def inv_int(self, u):
        if u == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[(self.size - 1 - self._log[u]) % (self.size - 1)]
        return self._raw_pow(u, self.size - 2)

    def pow_int(self, u, k):
        if u == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0
        if self._exp is not None:
            return self._exp[(self._log[u] * k) % (self.size - 1)]
        if k < 0:
            return self._raw_pow(self.inv_int(u), -k)
        return self._raw_pow(u, k)

    def sigma_int(self, u, k=1):
        k %= self.order
        if k == 0 or u == 0:
            return u
        if self._exp is not None:
            return self._exp[(self._log[u] * self._sigma_mult[k]) % (self.size - 1)]
        return self._raw_pow_frob(u, (self.frobenius_power * k) % self.degree)

    # -- context API ---------------------------------------------------------

    def sigma(self, x, k=1):
        return FFElement(self, self.sigma_int(x.val, k))

    def fixed_field_check(self, x):
        return self.sigma_int(x.val, 1) == x.val

    def from_int(self, k):
        return FFElement(self, k % self.char)

    def element(self, val):
        return FFElement(self, val)

    def elements(self):
        for v in range(self.size):
            yield FFElement(self, v)

    def random_element(self, rng):
        return FFElement(self, rng.randrange(self.size))

    def random_nonzero(self, rng):
        return FFElement(self, rng.randrange(1, self.size))

    def format(self, x):
        v = x.val
        if v == 0:
            return "0"
        if v == 1:
            return "1"
        sym = self.generator_symbol
        if self.generator_primitive:
            k = self._log[v]
            return sym if k == 1 else f"{sym}^{k}"
        terms = []
        for i in reversed(range(self.degree)):
            c = self._digits(v)[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}{sym}" + (f"^{i}" if i > 1 else ""))
        return " + ".join(terms)

    def parse(self, text):
        from .parsing import parse_element
        return parse_element(self, text)

    def __repr__(self):
        return f"GF({self.char}^{self.degree}), sigma=Frobenius^{self.frobenius_power}"


# ---------------------------------------------------------------------------
# dense polynomials over a FiniteField, packed-int coefficients (low-first
# tuples).  Internal machinery for the rational-function backend.
# ---------------------------------------------------------------------------

def _pnorm(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(base, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = base.add_int(out[i], c)
    return _pnorm(out)


def _psub(base, f, g):
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = base.sub_int(out[i], c)
    return _pnorm(out)


def _pmul(base, f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    mul = base.mul_int
    add = base.add_int
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = add(out[i + j], mul(a, b))
    return _pnorm(out)


def _pscale(base, f, c):
    if c == 0:
        return ()
    if c == 1:
        return f
    mul = base.mul_int
    return _pnorm([mul(a, c) for a in f])


def _pdivmod(base, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    dg = len(g) - 1
    if len(f) - 1 < dg:
        return (), _pnorm(rem)
    inv_lead = base.inv_int(g[-1])
    q = [0] * (len(f) - dg)
    sub, mul = base.sub_int, base.mul_int
    for k in range(len(f) - 1, dg - 1, -1):
        c = rem[k]
        if c:
            qc = mul(c, inv_lead)
            q[k - dg] = qc
            for j in range(dg + 1):
                rem[k - dg + j] = sub(rem[k - dg + j], mul(qc, g[j]))
    return _pnorm(q), _pnorm(rem[:dg])


def _pgcd(base, f, g):
    while g:
        f, g = g, _pdivmod(base, f, g)[1]
    if f:
        f = _pscale(base, f, base.inv_int(f[-1]))
    return f


def _ppow(base, f, k):
    r = (1,)
    while k:
        if k & 1:
            r = _pmul(base, r, f)
        f = _pmul(base, f, f)
        k >>= 1
    return r


# ---------------------------------------------------------------------------
# F_q(z)
# ---------------------------------------------------------------------------

class RFElement:
    """Reduced fraction of F_q[z] polynomials with a monic denominator."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx, num, den):
        self.ctx = ctx
        self.num = num
        self.den = den

    def __eq__(self, other):
        if isinstance(other, RFElement):
            return (self.num == other.num and self.den == other.den
                    and same_context(self.ctx, other.ctx))
        if isinstance(other, int):
            return self == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash(("rf", self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        _require_same(self, other)
        return self.ctx._add(self, other)

    def __sub__(self, other):
        _require_same(self, other)
        return self.ctx._add(self, -other)

    def __neg__(self):
        base = self.ctx.base
        return RFElement(self.ctx, tuple(base.neg_int(c) for c in self.num), self.den)

    def __mul__(self, other):
        _require_same(self, other)
        return self.ctx._mul(self, other)

    def __truediv__(self, other):
        _require_same(self, other)
        return self.ctx._mul(self, other.inverse())

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return self.ctx._make(self.den, self.num)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        base = self.ctx.base
        return self.ctx._make(_ppow(base, self.num, k), _ppow(base, self.den, k))

    def __repr__(self):
        return self.ctx.format(self)

    __str__ = __repr__


class RationalFunctions:
    """F_q(z) with sigma(z) = (az+b)/(cz+d) fixing F_q pointwise.

    The Moebius coefficients are elements of the base field; sigma's order
    is derived by iterating the 2x2 coefficient matrix until it becomes a
    scalar.  Fractions are kept reduced with a monic denominator after
    every operation so intermediate expressions stay small.
    """

    kind = "rational-function"

    def __init__(self, base: FiniteField, mobius, variable="z", max_order=512):
        self.base = base
        self.char = base.char
        self.variable = variable
        self.size = None
        mob = []
        for c in mobius:
            if isinstance(c, str):
                from .parsing import parse_element
                mob.append(parse_element(base, c).val)
            elif isinstance(c, FFElement):
                mob.append(c.val)
            else:
                mob.append(int(c))
        a, b, c, d = mob
        det = base.sub_int(base.mul_int(a, d), base.mul_int(b, c))
        if det == 0:
            raise FieldError("Moebius coefficient matrix is singular")
        self.mobius = (a, b, c, d)
        # M^k scalar  <=>  sigma^k is the identity on z
        self._mob_pows = [(1, 0, 0, 1)]
        m = self.mobius
        order = None
        for k in range(1, max_order + 1):
            if self._is_scalar(m):
                order = k
                break
            self._mob_pows.append(m)
            m = self._mat_mul(m, self.mobius)
        if order is None:
            raise FieldError("automorphism order exceeds bound")
        self.order = order
        self.key = ("rf", base.key, self.mobius)
        self.zero = RFElement(self, (), (1,))
        self.one = RFElement(self, (1,), (1,))
        self.generator = RFElement(self, (0, 1), (1,))

    def _mat_mul(self, m1, m2):
        a, b, c, d = m1
        e, f, g, h = m2
        B = self.base
        return (B.add_int(B.mul_int(a, e), B.mul_int(b, g)),
                B.add_int(B.mul_int(a, f), B.mul_int(b, h)),
                B.add_int(B.mul_int(c, e), B.mul_int(d, g)),
                B.add_int(B.mul_int(c, f), B.mul_int(d, h)))

    def _is_scalar(self, m):
        a, b, c, d = m
        return b == 0 and c == 0 and a == d and a != 0

    # -- canonical fractions -------------------------------------------------

    def _make(self, num, den):
        base = self.base
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return RFElement(self, (), (1,))
        g = _pgcd(base, num, den)
        if len(g) > 1:
            num = _pdivmod(base, num, g)[0]
            den = _pdivmod(base, den, g)[0]
        lead = den[-1]
        if lead != 1:
            inv = base.inv_int(lead)
            num = _pscale(base, num, inv)
            den = _pscale(base, den, inv)
        return RFElement(self, num, den)

    def _add(self, x, y):
        base = self.base
        if x.den == y.den:
            return self._make(_padd(base, x.num, y.num), x.den)
        num = _padd(base, _pmul(base, x.num, y.den), _pmul(base, y.num, x.den))
        return self._make(num, _pmul(base, x.den, y.den))

    def _mul(self, x, y):
        if not x.num or not y.num:
            return self.zero
        base = self.base
        # cross-cancel before the full products to limit degree growth
        g1 = _pgcd(base, x.num, y.den)
        g2 = _pgcd(base, y.num, x.den)
        xn = _pdivmod(base, x.num, g1)[0] if len(g1) > 1 else x.num
        yd = _pdivmod(base, y.den, g1)[0] if len(g1) > 1 else y.den
        yn = _pdivmod(base, y.num, g2)[0] if len(g2) > 1 else y.num
        xd = _pdivmod(base, x.den, g2)[0] if len(g2) > 1 else x.den
        return self._make(_pmul(base, xn, yn), _pmul(base, xd, yd))

    # -- context API ---------------------------------------------------------

    def sigma(self, x, k=1):
        k %= self.order
        if k == 0 or not x.num:
            return x
        a, b, c, d = self._mob_pows[k]
        base = self.base
        lin_num = _pnorm([b, a])   # a*z + b
        lin_den = _pnorm([d, c])   # c*z + d
        dn, dd = len(x.num) - 1, len(x.den) - 1
        m = max(dn, dd)
        num = self._subst(x.num, lin_num, lin_den, m)
        den = self._subst(x.den, lin_num, lin_den, m)
        return self._make(num, den)

    def _subst(self, poly, lin_num, lin_den, m):
        # poly((az+b)/(cz+d)) * (cz+d)^m, for m >= deg(poly)
        base = self.base
        acc = ()
        for i, coeff in enumerate(poly):
            if coeff:
                term = _pmul(base, _ppow(base, lin_num, i), _ppow(base, lin_den, m - i))
                acc = _padd(base, acc, _pscale(base, term, coeff))
        return acc

    def fixed_field_check(self, x):
        return self.sigma(x, 1) == x

    def from_int(self, k):
        v = k % self.char
        return RFElement(self, (v,) if v else (), (1,))

    def from_base(self, c):
        v = c.val if isinstance(c, FFElement) else int(c)
        return RFElement(self, (v,) if v else (), (1,))

    def random_element(self, rng, num_degree=1, den_degree=1):
        base = self.base
        num = [rng.randrange(base.size) for _ in range(num_degree + 1)]
        den = ()
        while not den:
            den = _pnorm([rng.randrange(base.size) for _ in range(den_degree + 1)])
        return self._make(_pnorm(num), den)

    def random_nonzero(self, rng, num_degree=1, den_degree=1):
        while True:
            x = self.random_element(rng, num_degree, den_degree)
            if x:
                return x

    def format(self, x):
        num = self._format_poly(x.num)
        if x.den == (1,):
            return num
        den = self._format_poly(x.den)
        if " + " in num or num.startswith("-"):
            num = f"({num})"
        return f"{num}/({den})"

    def _format_poly(self, poly):
        if not poly:
            return "0"
        base = self.base
        z = self.variable
        terms = []
        for i in reversed(range(len(poly))):
            c = poly[i]
            if not c:
                continue
            cs = base.format(FFElement(base, c))
            if i == 0:
                terms.append(cs)
            else:
                zs = z if i == 1 else f"{z}^{i}"
                terms.append(zs if cs == "1" else f"{cs}*{zs}")
        return " + ".join(terms)

    def parse(self, text):
        from .parsing import parse_element
        return parse_element(self, text)

    def __repr__(self):
        a, b, c, d = self.mobius
        B = self.base
        fmt = lambda v: B.format(FFElement(B, v))
        return (f"GF({B.char}^{B.degree})({self.variable}), "
                f"sigma({self.variable})=({fmt(a)}*{self.variable}+{fmt(b)})/"
                f"({fmt(c)}*{self.variable}+{fmt(d)})")


# ---------------------------------------------------------------------------
# Q(chi), chi a primitive m-th root of unity, m prime
# ---------------------------------------------------------------------------

class CycloElement:
    """Element of Q(chi) as integer coordinates over a common denominator.

    Coordinates are in the power basis 1, chi, ..., chi^(m-2); the content
    gcd with the denominator is 1 and the denominator is positive.
    """

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx, num, den):
        self.ctx = ctx
        self.num = num
        self.den = den

    def __eq__(self, other):
        if isinstance(other, CycloElement):
            return (self.num == other.num and self.den == other.den
                    and same_context(self.ctx, other.ctx))
        if isinstance(other, int):
            return self == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash(("cyc", self.num, self.den))

    def __bool__(self):
        return any(self.num)

    def __add__(self, other):
        _require_same(self, other)
        d1, d2 = self.den, other.den
        g = math.gcd(d1, d2)
        m1, m2 = d2 // g, d1 // g
        num = tuple(a * m1 + b * m2 for a, b in zip(self.num, other.num))
        return self.ctx._make(num, d1 * m1)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CycloElement(self.ctx, tuple(-a for a in self.num), self.den)

    def __mul__(self, other):
        _require_same(self, other)
        return self.ctx._mul(self, other)

    def __truediv__(self, other):
        _require_same(self, other)
        return self * other.inverse()

    def inverse(self):
        return self.ctx._inverse(self)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        r = self.ctx.one
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def coordinates(self):
        """Coefficients over the power basis as exact Fractions."""
        return tuple(Fraction(a, self.den) for a in self.num)

    def __repr__(self):
        return self.ctx.format(self)

    __str__ = __repr__


class CyclotomicField:
    """Q(chi) with chi^m = 1 primitive, m prime, and sigma(chi) = chi^k."""

    kind = "cyclotomic"

    def __init__(self, order, exponent, symbol="chi"):
        m = order
        if m < 3 or any(m % d == 0 for d in range(2, int(m ** 0.5) + 1)):
            raise FieldError(f"root order {m} must be an odd prime")
        if math.gcd(exponent, m) != 1:
            raise FieldError("sigma exponent must be coprime to the root order")
        self.char = 0
        self.size = None
        self.root_order = m
        self.exponent = exponent % m
        self.symbol = symbol
        self.dim = m - 1
        n = 1
        e = self.exponent % m
        while e != 1:
            e = (e * exponent) % m
            n += 1
        self.order = n
        self._sigma_exp = [pow(exponent, t, m) for t in range(n)]
        self.key = ("cyc", m, self.exponent)
        self.zero = CycloElement(self, (0,) * self.dim, 1)
        self.one = CycloElement(self, (1,) + (0,) * (self.dim - 1), 1)
        self.generator = CycloElement(self, (0, 1) + (0,) * (self.dim - 2), 1)

    def _make(self, num, den):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = tuple(-a for a in num)
            den = -den
        g = den
        for a in num:
            g = math.gcd(g, a)
            if g == 1:
                break
        if g > 1:
            num = tuple(a // g for a in num)
            den //= g
        return CycloElement(self, num, den)

    def _reduce_cyclic(self, full):
        # length-m coordinate vector mod (chi^m - 1) down to the power basis
        top = full[self.dim]
        return tuple(full[i] - top for i in range(self.dim))

    def _mul(self, x, y):
        m = self.root_order
        full = [0] * m
        for i, a in enumerate(x.num):
            if a:
                for j, b in enumerate(y.num):
                    if b:
                        full[(i + j) % m] += a * b
        return self._make(self._reduce_cyclic(full), x.den * y.den)

    def _inverse(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in Q[t] against the m-th cyclotomic polynomial
        m = self.root_order
        phi = [Fraction(1)] * m  # 1 + t + ... + t^(m-1)
        f = [Fraction(a, x.den) for a in x.num]
        while f and f[-1] == 0:
            f.pop()
        r0, r1 = phi, f
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def polydivmod(a, b):
            a = a[:]
            q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
            inv = 1 / b[-1]
            for k in range(len(a) - 1, len(b) - 2, -1):
                c = a[k] * inv
                if c:
                    q[k - len(b) + 1] = c
                    for j, bc in enumerate(b):
                        a[k - len(b) + 1 + j] -= c * bc
            while a and a[-1] == 0:
                a.pop()
            return q, a

        while r1:
            q, r = polydivmod(r0, r1)
            # s_next = s0 - q * s1
            prod = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        prod[i + j] += qc * sc
            s_next = [a - b for a, b in
                      zip(s0 + [Fraction(0)] * max(0, len(prod) - len(s0)),
                          prod + [Fraction(0)] * max(0, len(s0) - len(prod)))]
            while s_next and s_next[-1] == 0:
                s_next.pop()
            r0, r1, s0, s1 = r1, r, s1, s_next
        # r0 = gcd is a nonzero constant (phi is irreducible over Q)
        c = r0[0]
        inv_coeffs = [sc / c for sc in s0]
        inv_coeffs += [Fraction(0)] * (self.dim - len(inv_coeffs))
        den = 1
        for fr in inv_coeffs:
            den = den * fr.denominator // math.gcd(den, fr.denominator)
        return self._make(tuple(int(fr * den) for fr in inv_coeffs[:self.dim]), den)

    # -- context API ---------------------------------------------------------

    def sigma(self, x, k=1):
        k %= self.order
        if k == 0:
            return x
        e = self._sigma_exp[k]
        m = self.root_order
        full = [0] * m
        for j, a in enumerate(x.num):
            if a:
                full[(j * e) % m] += a
        return self._make(self._reduce_cyclic(full), x.den)

    def fixed_field_check(self, x):
        return self.sigma(x, 1) == x

    def from_int(self, k):
        return CycloElement(self, (k,) + (0,) * (self.dim - 1), 1)

    def from_fraction(self, fr):
        fr = Fraction(fr)
        return self._make((fr.numerator,) + (0,) * (self.dim - 1), fr.denominator)

    def random_element(self, rng, height=4):
        num = tuple(rng.randint(-height, height) for _ in range(self.dim))
        return self._make(num, rng.randint(1, height))

    def random_nonzero(self, rng, height=4):
        while True:
            x = self.random_element(rng, height)
            if x:
                return x

    def format(self, x):
        if not x:
            return "0"
        terms = []
        for i in reversed(range(self.dim)):
            a = x.num[i]
            if not a:
                continue
            c = Fraction(a, x.den)
            sign = "-" if c < 0 else "+"
            c = abs(c)
            cs = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            if i == 0:
                body = cs
            else:
                sym = self.symbol if i == 1 else f"{self.symbol}^{i}"
                body = sym if cs == "1" else f"{cs}*{sym}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def parse(self, text):
        from .parsing import parse_element
        return parse_element(self, text)

    def __repr__(self):
        return f"Q(chi), chi^{self.root_order}=1, sigma(chi)=chi^{self.exponent}"


# ---------------------------------------------------------------------------
# spec-level conveniences
# ---------------------------------------------------------------------------

def apply_sigma(ctx, k, x):
    """sigma^k(x) for any integer k (k reduced mod the automorphism order)."""
    return ctx.sigma(x, k)


def fixed_field_check(ctx, x):
    """True when sigma fixes x, i.e. x lies in the invariant subfield."""
    return ctx.fixed_field_check(x)
