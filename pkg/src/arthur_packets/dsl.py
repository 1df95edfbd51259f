"""Recursive-descent parser for group and parameter strings.

    group   := 'Sp(' INT ')' | 'SO(' INT ',' INT ')' | 'U(' INT ',' INT ')'
    param   := term ('+' term)*
    term    := summand ('x' | '*') 'R[' INT ']'
    summand := 'V(' s ',' INT ')' | 'W(' s ',' ('0' | '1') ')'
    s       := rational ['i'] [('+' | '-') rational ['i']]

Whitespace is ignored.  Rationals are written ``p`` or ``p/q``.
"""

from __future__ import annotations

from fractions import Fraction

from .groups import GroupDescriptor, orthogonal, symplectic, unitary
from .params import ArthurParameter, GaussianRational, Summand, ensure_valid


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        # keep original positions while skipping whitespace
        self.chars = [(c, k) for k, c in enumerate(text) if not c.isspace()]
        self.pos = 0
        self.length = len(text)

    def peek(self, offset: int = 0) -> str:
        k = self.pos + offset
        return self.chars[k][0] if k < len(self.chars) else ""

    def where(self) -> int:
        return self.chars[self.pos][1] if self.pos < len(self.chars) else self.length

    def fail(self, message: str):
        raise ParseError(message, self.where())

    def accept(self, token: str) -> bool:
        if all(self.peek(k) == ch for k, ch in enumerate(token)):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            found = self.peek() or "end of input"
            self.fail(f"expected {token!r}, found {found!r}")

    def integer(self, signed: bool = False) -> int:
        neg = signed and self.accept("-")
        digits = ""
        while self.peek().isdigit():
            digits += self.peek()
            self.pos += 1
        if not digits:
            self.fail("expected an integer")
        return -int(digits) if neg else int(digits)

    def at_end(self) -> bool:
        return self.pos >= len(self.chars)


def parse_group(text: str) -> GroupDescriptor:
    sc = _Scanner(text)
    start = sc.where()
    head = next((h for h in ("Sp(", "SO(", "U(") if sc.accept(h)), None)
    if head is None:
        sc.fail("expected 'Sp(', 'SO(' or 'U('")
    if head == "Sp(":
        m = sc.integer()
        sc.expect(")")
        if m % 2:
            raise ParseError("Sp needs an even argument", start)
        if m == 0:
            raise ParseError("Sp(0) has rank 0", start)
        G = symplectic(m // 2)
    else:
        p = sc.integer()
        sc.expect(",")
        q = sc.integer()
        sc.expect(")")
        if head == "U(":
            if p + q < 1:
                raise ParseError("U(p,q) needs p + q >= 1", start)
            G = unitary(p, q)
        else:
            if p + q < 2:
                raise ParseError("SO(p,q) needs p + q >= 2", start)
            G = orthogonal(p, q)
    if not sc.at_end():
        sc.fail("unexpected trailing input")
    return G


def _rational_atom(sc: _Scanner):
    """A rational or imaginary unit part, returned as (value, is_imaginary)."""
    if sc.peek() == "i":
        sc.pos += 1
        return Fraction(1), True
    num = sc.integer()
    value = Fraction(num)
    if sc.accept("/"):
        den = sc.integer()
        if den == 0:
            sc.fail("zero denominator")
        value = Fraction(num, den)
    return value, sc.accept("i")


def _complex(sc: _Scanner) -> GaussianRational:
    re, im = Fraction(0), Fraction(0)
    seen_re = seen_im = False
    sign = 1
    if sc.accept("-"):
        sign = -1
    else:
        sc.accept("+")
    while True:
        value, imaginary = _rational_atom(sc)
        if imaginary:
            if seen_im:
                sc.fail("two imaginary parts")
            im, seen_im = sign * value, True
        else:
            if seen_re or seen_im:
                sc.fail("real part must come first")
            re, seen_re = sign * value, True
        if sc.peek() == "+" and not seen_im:
            sc.pos += 1
            sign = 1
        elif sc.peek() == "-" and not seen_im:
            sc.pos += 1
            sign = -1
        else:
            return GaussianRational(re, im)


def _summand(sc: _Scanner) -> Summand:
    if sc.accept("V("):
        kind = "V"
    elif sc.accept("W("):
        kind = "W"
    else:
        sc.fail("expected 'V(' or 'W('")
    s = _complex(sc)
    sc.expect(",")
    where = sc.where()
    label = sc.integer(signed=True)
    sc.expect(")")
    if not (sc.accept("x") or sc.accept("*") or sc.accept("⊠")):
        sc.fail("expected 'x' before R[a]")
    sc.expect("R[")
    a = sc.integer()
    sc.expect("]")
    if kind == "W":
        if label not in (0, 1):
            raise ParseError("the sign of W(s,eps) must be 0 or 1", where)
        return Summand("W", s, a, eps=label)
    return Summand("V", s, a, t=label)


def parse_summands(text: str) -> list[Summand]:
    sc = _Scanner(text)
    if sc.at_end():
        sc.fail("empty parameter")
    out = [_summand(sc)]
    while sc.accept("+"):
        out.append(_summand(sc))
    if not sc.at_end():
        sc.fail("unexpected trailing input")
    return out


def parse_param(text: str, group: GroupDescriptor, check: bool = True) -> ArthurParameter:
    psi = ArthurParameter(group, tuple(parse_summands(text)))
    if check:
        ensure_valid(psi)
    return psi


def render_group(G: GroupDescriptor) -> str:
    return str(G)


def render_param(psi) -> str:
    summands = psi.summands if isinstance(psi, ArthurParameter) else psi
    return " + ".join(str(x) for x in summands)
