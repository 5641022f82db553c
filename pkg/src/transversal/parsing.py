"""Text grammar for polynomials and session files.

Polynomial grammar: variables are identifiers, ``^`` takes an exponent, ``*``
multiplies (and is optional between adjacent factors), terms combine with
``+``/``-``, and coefficients are integers or rationals ``p/q``.  Example:
``x1*x3 - x2^2``.

Session files declare one ring, an optional order, and named objects::

    ring Q[x1,x2,x3];            (or: ring Fp(7)[x,y];)
    order grevlex;               (lex | grlex | grevlex | weights(2,1,1)
                                  | block([x1]:lex, [x2,x3]:grevlex))
    ideal I = <x1*x3 - x2^2, x2>;
    simplicial D = {{1,2},{3}};

Errors carry the offending line and column.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError, PreconditionError, TransversalError
from .fields import PrimeField, QQ
from .groebner import Ideal
from .orders import (BlockOrder, GrevLex, Lex, MonomialOrder, WeightOrder,
                     order_from_name)
from .rings import Polynomial, VarContext
from .simplicial import SimplicialComplex

_PUNCT = set("^*+-,;<>()[]{}=/:")


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT | INT | one of the punctuation characters | EOF
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch == "#":  # comment to end of line
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(Token("IDENT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("INT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            toks.append(Token(ch, ch, line, start_col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(Token("EOF", "", line, col))
    return toks


class _Parser:
    def __init__(self, toks: list[Token]):
        self.toks = toks
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def advance(self) -> Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.col)
        return self.advance()

    def error(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.col)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def _parse_poly(p: _Parser, ctx: VarContext) -> Polynomial:
    total = ctx.zero()
    negative = False
    tok = p.peek()
    if tok.kind in ("+", "-"):
        negative = tok.kind == "-"
        p.advance()
    while True:
        term = _parse_term(p, ctx)
        total = total - term if negative else total + term
        tok = p.peek()
        if tok.kind in ("+", "-"):
            negative = tok.kind == "-"
            p.advance()
            continue
        return total


def _parse_term(p: _Parser, ctx: VarContext) -> Polynomial:
    out = _parse_factor(p, ctx)
    while True:
        tok = p.peek()
        if tok.kind == "*":
            p.advance()
            out = out * _parse_factor(p, ctx)
        elif tok.kind in ("IDENT", "INT"):  # implicit product
            out = out * _parse_factor(p, ctx)
        else:
            return out


def _parse_factor(p: _Parser, ctx: VarContext) -> Polynomial:
    tok = p.peek()
    if tok.kind == "INT":
        p.advance()
        text = tok.text
        if p.peek().kind == "/":
            p.advance()
            den = p.expect("INT")
            if int(den.text) == 0:
                raise ParseError("zero denominator", den.line, den.col)
            text = f"{text}/{den.text}"
        return ctx.constant(ctx.field.parse(text))
    if tok.kind == "IDENT":
        p.advance()
        try:
            idx = ctx.index(tok.text)
        except PreconditionError:
            raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col) from None
        power = 1
        if p.peek().kind == "^":
            p.advance()
            power = int(p.expect("INT").text)
        return ctx.var(ctx.names[idx], power)
    raise p.error("expected a coefficient or a variable")


def parse_polynomial(text: str, ctx: VarContext) -> Polynomial:
    p = _Parser(tokenize(text))
    poly = _parse_poly(p, ctx)
    p.expect("EOF")
    return poly


# ---------------------------------------------------------------------------
# sessions
# ---------------------------------------------------------------------------

@dataclass
class Session:
    ctx: VarContext | None = None
    order: MonomialOrder = field(default_factory=GrevLex)
    ideals: dict[str, Ideal] = field(default_factory=dict)
    complexes: dict[str, SimplicialComplex] = field(default_factory=dict)

    def require_ctx(self) -> VarContext:
        if self.ctx is None:
            raise ParseError("no ring declared")
        return self.ctx

    def lookup_ideal(self, name: str) -> Ideal:
        if name not in self.ideals:
            raise ParseError(f"unknown ideal {name!r}")
        return self.ideals[name]

    def lookup_complex(self, name: str) -> SimplicialComplex:
        if name not in self.complexes:
            raise ParseError(f"unknown simplicial complex {name!r}")
        return self.complexes[name]


def parse_session(text: str) -> Session:
    p = _Parser(tokenize(text))
    session = Session()
    while p.peek().kind != "EOF":
        head = p.expect("IDENT")
        if head.text == "ring":
            _parse_ring(p, session, head)
        elif head.text == "order":
            _parse_order(p, session, head)
        elif head.text == "ideal":
            _parse_ideal(p, session)
        elif head.text == "simplicial":
            _parse_simplicial(p, session)
        else:
            raise ParseError(f"unknown statement {head.text!r}", head.line, head.col)
    return session


def _parse_ring(p: _Parser, session: Session, head: Token) -> None:
    if session.ctx is not None:
        raise ParseError("ring already declared", head.line, head.col)
    kind = p.expect("IDENT")
    if kind.text == "Q":
        fld = QQ
    elif kind.text == "Fp":
        p.expect("(")
        prime = p.expect("INT")
        p.expect(")")
        try:
            fld = PrimeField(int(prime.text))
        except TransversalError as exc:
            raise ParseError(str(exc), prime.line, prime.col) from None
    else:
        raise ParseError(f"unknown field {kind.text!r} (use Q or Fp(p))",
                         kind.line, kind.col)
    p.expect("[")
    names = [p.expect("IDENT").text]
    while p.peek().kind == ",":
        p.advance()
        names.append(p.expect("IDENT").text)
    closing = p.expect("]")
    p.expect(";")
    try:
        session.ctx = VarContext(names, fld)
    except TransversalError as exc:
        raise ParseError(str(exc), closing.line, closing.col) from None


def _parse_order(p: _Parser, session: Session, head: Token) -> None:
    kind = p.expect("IDENT")
    if kind.text in ("lex", "grlex", "grevlex"):
        session.order = order_from_name(kind.text)
    elif kind.text == "weights":
        ctx = _require_ctx(session, kind)
        p.expect("(")
        weights = [int(p.expect("INT").text)]
        while p.peek().kind == ",":
            p.advance()
            weights.append(int(p.expect("INT").text))
        p.expect(")")
        if len(weights) != ctx.nvars:
            raise ParseError(f"expected {ctx.nvars} weights, got {len(weights)}",
                             kind.line, kind.col)
        session.order = WeightOrder(tuple(weights))
    elif kind.text == "block":
        ctx = _require_ctx(session, kind)
        p.expect("(")
        blocks = [_parse_block_group(p, ctx)]
        while p.peek().kind == ",":
            p.advance()
            blocks.append(_parse_block_group(p, ctx))
        p.expect(")")
        try:
            session.order = BlockOrder(tuple(blocks))
        except ValueError as exc:
            raise ParseError(str(exc), kind.line, kind.col) from None
    else:
        raise ParseError(f"unknown order {kind.text!r}", kind.line, kind.col)
    p.expect(";")


def _require_ctx(session: Session, tok: Token) -> VarContext:
    if session.ctx is None:
        raise ParseError("declare the ring before this statement", tok.line, tok.col)
    return session.ctx


def _parse_block_group(p: _Parser, ctx: VarContext) -> tuple[tuple[int, ...], MonomialOrder]:
    p.expect("[")
    names = [p.expect("IDENT")]
    while p.peek().kind == ",":
        p.advance()
        names.append(p.expect("IDENT"))
    p.expect("]")
    p.expect(":")
    inner = p.expect("IDENT")
    if inner.text not in ("lex", "grlex", "grevlex"):
        raise ParseError(f"unknown inner order {inner.text!r}", inner.line, inner.col)
    idxs = []
    for tok in names:
        try:
            idxs.append(ctx.index(tok.text))
        except PreconditionError:
            raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col) from None
    return tuple(idxs), order_from_name(inner.text)


def _declare(session: Session, name: Token) -> None:
    if name.text in session.ideals or name.text in session.complexes:
        raise ParseError(f"duplicate name {name.text!r}", name.line, name.col)


def _parse_ideal(p: _Parser, session: Session) -> None:
    name = p.expect("IDENT")
    _declare(session, name)
    ctx = _require_ctx(session, name)
    p.expect("=")
    p.expect("<")
    gens = []
    first = p.peek()
    gens.append(_parse_poly(p, ctx))
    while p.peek().kind == ",":
        p.advance()
        first = p.peek()
        gens.append(_parse_poly(p, ctx))
    if any(g.is_zero() for g in gens):
        raise ParseError("ideal generators must be nonzero", first.line, first.col)
    p.expect(">")
    p.expect(";")
    session.ideals[name.text] = Ideal(ctx, gens)


def _parse_simplicial(p: _Parser, session: Session) -> None:
    name = p.expect("IDENT")
    _declare(session, name)
    p.expect("=")
    p.expect("{")
    facets = [_parse_face(p)]
    while p.peek().kind == ",":
        p.advance()
        facets.append(_parse_face(p))
    p.expect("}")
    p.expect(";")
    session.complexes[name.text] = SimplicialComplex(facets)


def _parse_face(p: _Parser) -> tuple[int, ...]:
    p.expect("{")
    verts: list[int] = []
    if p.peek().kind == "INT":
        verts.append(int(p.advance().text))
        while p.peek().kind == ",":
            p.advance()
            verts.append(int(p.expect("INT").text))
    p.expect("}")
    return tuple(verts)


# ---------------------------------------------------------------------------
# pretty-printing (round-trips through parse_session)
# ---------------------------------------------------------------------------

def order_to_text(order: MonomialOrder, ctx: VarContext | None = None) -> str:
    if isinstance(order, (Lex, GrevLex)) or type(order).__name__ == "GrLex":
        return order.name
    if isinstance(order, WeightOrder):
        return f"weights({','.join(map(str, order.weights))})"
    if isinstance(order, BlockOrder):
        if ctx is None:
            raise PreconditionError("block order needs a context to print")
        parts = []
        for idxs, inner in order.blocks:
            names = ",".join(ctx.names[i] for i in idxs)
            parts.append(f"[{names}]:{inner.name}")
        return f"block({','.join(parts)})"
    raise PreconditionError(f"cannot print order {order!r}")


def pretty_print(session: Session) -> str:
    lines: list[str] = []
    if session.ctx is not None:
        fld = session.ctx.field
        fld_text = "Q" if fld == QQ else f"Fp({fld.characteristic})"
        lines.append(f"ring {fld_text}[{','.join(session.ctx.names)}];")
    lines.append(f"order {order_to_text(session.order, session.ctx)};")
    for name, ideal in session.ideals.items():
        gens = ", ".join(str(g) for g in ideal.gens)
        lines.append(f"ideal {name} = <{gens}>;")
    for name, cx in session.complexes.items():
        facets = ",".join("{" + ",".join(map(str, f)) + "}" for f in cx.facets)
        lines.append(f"simplicial {name} = {{{facets}}};")
    return "\n".join(lines) + "\n"


def session_equal(a: Session, b: Session) -> bool:
    """Structural session equality (used by round-trip checks)."""
    if (a.ctx != b.ctx or a.order != b.order
            or a.ideals.keys() != b.ideals.keys()
            or a.complexes.keys() != b.complexes.keys()):
        return False
    for name, ideal in a.ideals.items():
        other = b.ideals[name]
        if len(ideal.gens) != len(other.gens):
            return False
        if any(g1 != g2 for g1, g2 in zip(ideal.gens, other.gens)):
            return False
    return all(a.complexes[name] == b.complexes[name] for name in a.complexes)
