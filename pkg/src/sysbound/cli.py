"""Command-line frontend.

A small LL(1) parser turns descriptor strings such as ``CP(3) * S1`` or
``CI(degrees=[[2,3]]; ambient=[5])`` into catalog constructors.  Results are
printed exactly (``q * pi^k``); decimals appear only with ``--approx`` and are
labeled approximate.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import catalog, cones, engine, lattices, pushforward
from .catalog import Space
from .engine import SELECTORS, ONE, PI, PiScaled
from .errors import CalculatorError, ParseError

# ---------------------------------------------------------------------------
# descriptor grammar
# ---------------------------------------------------------------------------

_PUNCT = ("(", ")", "[", "]", ",", ";", "=", "*", ".")


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, INT, punctuation, END
    text: str
    pos: int


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < len(text) and text[i + 1].isdigit()):
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("NAME", text[i:j], i))
            i = j
            continue
        raise ParseError("unexpected character %r" % ch, i)
    tokens.append(Token("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, text=None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            raise ParseError("unexpected %r" % (tok.text or "end of input"),
                             tok.pos, expected=(text or kind,))
        return self.next()

    def integer(self) -> int:
        return int(self.expect("INT").text)

    def int_list(self):
        self.expect("[")
        out = []
        if self.peek().kind != "]":
            out.append(self.integer())
            while self.peek().kind == ",":
                self.next()
                out.append(self.integer())
        self.expect("]")
        return out

    def int_matrix(self):
        self.expect("[")
        rows = []
        if self.peek().kind != "]":
            rows.append(self.int_list())
            while self.peek().kind == ",":
                self.next()
                rows.append(self.int_list())
        self.expect("]")
        return rows


# AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class CPNode:
    n: int

    def build(self) -> Space:
        return catalog.projective_space(self.n)

    def unparse(self) -> str:
        return "CP(%d)" % self.n


@dataclass(frozen=True)
class QNode:
    n: int

    def build(self) -> Space:
        return catalog.quadric(self.n)

    def unparse(self) -> str:
        return "Q(%d)" % self.n


@dataclass(frozen=True)
class SphereNode:
    k: int

    def build(self) -> Space:
        return catalog.sphere(self.k)

    def unparse(self) -> str:
        return "S1" if self.k == 1 else "S(%d)" % self.k


@dataclass(frozen=True)
class CINode:
    degrees: tuple
    ambient: tuple

    def build(self) -> Space:
        return catalog.complete_intersection(
            [list(row) for row in self.degrees], list(self.ambient))

    def unparse(self) -> str:
        deg = "[%s]" % ",".join("[%s]" % ",".join(str(d) for d in row)
                                for row in self.degrees)
        amb = "[%s]" % ",".join(str(N) for N in self.ambient)
        return "CI(degrees=%s; ambient=%s)" % (deg, amb)


@dataclass(frozen=True)
class PBNode:
    degrees: tuple
    genus: int

    def build(self) -> Space:
        return catalog.proj_bundle_over_curve(list(self.degrees), self.genus)

    def unparse(self) -> str:
        return "PB(degrees=[%s]; genus=%d)" % (
            ",".join(str(d) for d in self.degrees), self.genus)


@dataclass(frozen=True)
class BlPNode:
    n: int

    def build(self) -> Space:
        return catalog.blowup_point(self.n)

    def unparse(self) -> str:
        return "BlP(%d)" % self.n


@dataclass(frozen=True)
class TwistNode:
    inner: object
    k: int

    def build(self) -> Space:
        return catalog.twist_spin_c(self.inner.build(), self.k)

    def unparse(self) -> str:
        return "%s.twist(%d)" % (self.inner.unparse(), self.k)


@dataclass(frozen=True)
class ProductNode:
    left: object
    right: object

    def build(self) -> Space:
        return catalog.product(self.left.build(), self.right.build())

    def unparse(self) -> str:
        return "%s * %s" % (self.left.unparse(), self.right.unparse())


def _parse_atom(p: _Parser):
    tok = p.expect("NAME")
    name = tok.text
    if name == "S1":
        return SphereNode(1)
    if name == "CP":
        p.expect("(")
        n = p.integer()
        p.expect(")")
        if n < 1:
            raise ParseError("CP needs n >= 1", tok.pos)
        return CPNode(n)
    if name == "Q":
        p.expect("(")
        n = p.integer()
        p.expect(")")
        if n < 2:
            raise ParseError("Q needs n >= 2", tok.pos)
        return QNode(n)
    if name == "S":
        p.expect("(")
        k = p.integer()
        p.expect(")")
        if k < 1:
            raise ParseError("S needs k >= 1", tok.pos)
        return SphereNode(k)
    if name == "BlP":
        p.expect("(")
        n = p.integer()
        p.expect(")")
        if n < 2:
            raise ParseError("BlP needs n >= 2", tok.pos)
        return BlPNode(n)
    if name == "CI":
        p.expect("(")
        p.expect("NAME", "degrees")
        p.expect("=")
        rows = p.int_matrix()
        p.expect(";")
        p.expect("NAME", "ambient")
        p.expect("=")
        ambient = p.int_list()
        p.expect(")")
        if not rows or not ambient:
            raise ParseError("CI needs nonempty degrees and ambient", tok.pos)
        return CINode(tuple(tuple(r) for r in rows), tuple(ambient))
    if name == "PB":
        p.expect("(")
        p.expect("NAME", "degrees")
        p.expect("=")
        degrees = p.int_list()
        p.expect(";")
        p.expect("NAME", "genus")
        p.expect("=")
        genus = p.integer()
        p.expect(")")
        if len(degrees) < 2:
            raise ParseError("PB needs at least two degrees", tok.pos)
        if genus < 0:
            raise ParseError("PB needs genus >= 0", tok.pos)
        return PBNode(tuple(degrees), genus)
    raise ParseError("unknown space constructor %r" % name, tok.pos,
                     expected=("CP", "Q", "S", "S1", "CI", "PB", "BlP"))


def _parse_postfix(p: _Parser):
    node = _parse_atom(p)
    while True:
        tok = p.peek()
        if tok.kind == ".":
            p.next()
        elif tok.kind == "NAME" and tok.text == "twist":
            pass  # bare twist(k) suffix, no dot
        else:
            break
        p.expect("NAME", "twist")
        p.expect("(")
        k = p.integer()
        p.expect(")")
        node = TwistNode(node, k)
    return node


def parse_space(text: str):
    """Parse a space descriptor into its AST; ``*`` is left-associative."""
    p = _Parser(text)
    node = _parse_postfix(p)
    while p.peek().kind == "*":
        p.next()
        node = ProductNode(node, _parse_postfix(p))
    end = p.peek()
    if end.kind != "END":
        raise ParseError("trailing input %r" % end.text, end.pos,
                         expected=("*", "end of input"))
    return node


# ---------------------------------------------------------------------------
# degree-2 class expressions ("pi*H", "2*H1 - E", "1/2*H")
# ---------------------------------------------------------------------------


def parse_alpha(space: Space, text: str):
    """Parse a linear combination of degree-2 generators, with a pi scale.

    Returns ``(GradedClass, pi_exponent)``; all terms must carry the same
    power of pi.
    """
    space.require_ring()
    return _parse_alpha_terms(space, text)


def _alpha_tokens(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/^()":
            tokens.append((ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
        else:
            raise ParseError("unexpected character %r in class expression" % ch, i)
    tokens.append(("END", len(text)))
    return tokens


def _parse_alpha_terms(space: Space, text: str):
    ring = space.ring
    tokens = _alpha_tokens(text)
    pos = [0]

    def peek():
        return tokens[pos[0]]

    def advance():
        tok = tokens[pos[0]]
        pos[0] += 1
        return tok

    def parse_number():
        tok = advance()
        if tok[0] != "INT":
            raise ParseError("expected a number", tok[-1])
        value = Fraction(int(tok[1]))
        if peek()[0] == "/":
            advance()
            den = advance()
            if den[0] != "INT":
                raise ParseError("expected a denominator", den[-1])
            value /= int(den[1])
        return value

    def parse_term():
        coeff = Fraction(1)
        pi_exp = 0
        gen_name = None
        expect_factor = True
        while True:
            tok = peek()
            if tok[0] == "INT" and expect_factor:
                coeff *= parse_number()
            elif tok[0] == "NAME" and expect_factor:
                advance()
                if tok[1] == "pi":
                    power = 1
                    if peek()[0] == "^":
                        advance()
                        ptok = advance()
                        if ptok[0] != "INT":
                            raise ParseError("expected an exponent", ptok[-1])
                        power = int(ptok[1])
                    pi_exp += power
                else:
                    if gen_name is not None:
                        raise ParseError("term has two generator names", tok[-1])
                    gen_name = tok[1]
            else:
                break
            expect_factor = False
            if peek()[0] == "*":
                advance()
                expect_factor = True
        if gen_name is None:
            raise ParseError("each term needs a degree-2 generator name",
                             peek()[-1])
        if gen_name not in ring.index:
            raise ParseError("unknown generator %r (ring has %s)"
                             % (gen_name, ", ".join(ring.gen_names())),
                             peek()[-1])
        return coeff, pi_exp, gen_name

    total = ring.zero()
    pi_exponent = None
    sign = Fraction(1)
    if peek()[0] == "-":
        advance()
        sign = Fraction(-1)
    elif peek()[0] == "+":
        advance()
    while True:
        coeff, pi_exp, gen_name = parse_term()
        if pi_exponent is None:
            pi_exponent = pi_exp
        elif pi_exponent != pi_exp:
            raise ParseError("all terms must carry the same power of pi",
                             peek()[-1])
        total = total + sign * coeff * ring.gen(gen_name)
        tok = peek()
        if tok[0] == "+":
            advance()
            sign = Fraction(1)
        elif tok[0] == "-":
            advance()
            sign = Fraction(-1)
        elif tok[0] == "END":
            break
        else:
            raise ParseError("unexpected token in class expression", tok[-1])
    return total, (pi_exponent or 0)


def _default_alpha(space: Space):
    if space.primitive_x is not None:
        return space.primitive_x, 1
    raise CalculatorError(
        "no default class on %s; pass --alpha explicitly" % space.name)


# ---------------------------------------------------------------------------
# exact-value formatting
# ---------------------------------------------------------------------------


def _as_pi_scaled(value):
    if isinstance(value, PiScaled):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, Fraction)):
        return PiScaled(Fraction(value), 0)
    return None


def exact_str(value) -> str:
    ps = _as_pi_scaled(value)
    if ps is not None:
        return str(ps)
    if isinstance(value, (list, tuple)):
        return "[%s]" % ", ".join(exact_str(v) for v in value)
    return str(value)


def _json_value(value):
    ps = _as_pi_scaled(value)
    if ps is not None:
        return {"numerator": ps.q.numerator, "denominator": ps.q.denominator,
                "pi_exponent": ps.k}
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in value.items()}
    return str(value) if not isinstance(value, (str, bool)) else value


def parse_json_value(obj):
    """Inverse of the JSON encoding: reconstruct an exact PiScaled."""
    return PiScaled(Fraction(obj["numerator"], obj["denominator"]),
                    obj["pi_exponent"])


def _emit(rows, fmt: str, approx: int | None, out=None):
    out = out or sys.stdout
    if fmt == "json":
        payload = {}
        for key, value in rows:
            payload[key] = _json_value(value)
            ps = _as_pi_scaled(value)
            if approx and ps is not None:
                payload[key + "_approx"] = round(ps.approx(), approx)
        json.dump(payload, out, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        for key, value in rows:
            line = "%s,%s" % (key, exact_str(value))
            ps = _as_pi_scaled(value)
            if approx and ps is not None:
                line += ",~%.*f" % (approx, ps.approx())
            out.write(line + "\n")
        return
    width = max((len(k) for k, _ in rows), default=0)
    for key, value in rows:
        line = "%-*s  %s" % (width + 1, key + ":", exact_str(value))
        ps = _as_pi_scaled(value)
        if approx and ps is not None:
            line += "   (~ %.*f)" % (approx, ps.approx())
        out.write(line + "\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _split_product(node):
    """X * N split at the top-level product for two-space bounds."""
    if isinstance(node, ProductNode):
        return node.left.build(), node.right.build()
    return node.build(), None


_EXTRA_SELECTORS = ("thm1.4", "thm1.8", "rbar")


def _cmd_bound(args, out):
    node = parse_space(args.space)
    theorem = args.theorem
    rows = [("space", node.unparse()), ("theorem", theorem)]
    if theorem in _EXTRA_SELECTORS:
        space = node.build()
        if args.alpha:
            alpha, pi_exp = parse_alpha(space, args.alpha)
        else:
            alpha, pi_exp = _default_alpha(space)
        scale = PiScaled(Fraction(1), pi_exp)
        if theorem == "thm1.4":
            value = engine.gromov_width_bound(space, alpha, scale)
            rows.append(("gromov_width_bound", value))
        elif theorem == "thm1.8":
            value = engine.volume(space, alpha, scale)
            rows.append(("volume", value))
        else:
            value = engine.avg_scalar_curvature(space, alpha, scale)
            rows.append(("average_scalar_curvature", value))
    else:
        x, n_factor = _split_product(node)
        if theorem in ("thm1.1", "thm1.2", "thm4.5", "prop5.1") \
                and n_factor is not None:
            raise CalculatorError(
                "selector %s takes a single space; drop the product factor"
                % theorem)
        value = engine.systolic_bound(x, n_factor, theorem)
        rows.append(("bound", value))
    _emit(rows, args.format, args.approx, out)


def _cmd_index_poly(args, out):
    node = parse_space(args.space)
    space = node.build()
    poly = engine.index_polynomial(space)
    rows = [("space", node.unparse()),
            ("polynomial", str(poly)),
            ("coefficients", [Fraction(c) for c in poly.coeffs]),
            ("q0", Fraction(poly.q0))]
    _emit(rows, args.format, args.approx, out)


def _cmd_length(args, out):
    node = parse_space(args.space)
    value = engine.length(node.build())
    _emit([("space", node.unparse()), ("length", Fraction(value))],
          args.format, args.approx, out)


def _cmd_todd(args, out):
    node = parse_space(args.space)
    value = engine.todd_genus(node.build())
    _emit([("space", node.unparse()), ("todd_genus", value)],
          args.format, args.approx, out)


def _cmd_phi(args, out):
    node = parse_space(args.space)
    space = node.build()
    alpha, pi_exp = parse_alpha(space, args.alpha)
    if pi_exp:
        raise CalculatorError("the volume functional is scale-invariant; "
                              "drop the pi factor")
    value = cones.phi(space, alpha)
    _emit([("space", node.unparse()), ("alpha", args.alpha.strip()),
           ("phi", value)], args.format, args.approx, out)


def _cmd_phi_sup(args, out):
    node = parse_space(args.space)
    space = node.build()
    result = cones.phi_sup(cones.cone_problem(space))
    rows = [("space", node.unparse())]
    if isinstance(result, cones.Unbounded):
        rows.append(("phi_sup", "UNBOUNDED"))
        rows.append(("witness", repr(result.witness)))
    else:
        rows.append(("phi_sup", result))
    _emit(rows, args.format, args.approx, out)


def _cmd_contractions(args, out):
    node = parse_space(args.space)
    if not isinstance(node, CINode):
        raise CalculatorError("contractions expects a CI(...) descriptor")
    report = cones.multiproj_contractions(list(node.ambient),
                                          [list(r) for r in node.degrees])
    rows = [("space", node.unparse()),
            ("dim", Fraction(report.dim)),
            ("fano", report.fano),
            ("admissible_p", Fraction(report.admissible_p))]
    for f in report.factors:
        rows.append(("factor_%d" % f.factor,
                     "N=%d degree_sum=%d K_negative=%s fiber_dim=%d "
                     "anticanonical=%d" % (f.ambient_dim, f.degree_sum,
                                           f.k_negative, f.fiber_dim,
                                           f.anticanonical_coeff)))
    _emit(rows, args.format, args.approx, out)


def _cmd_bundle_profile(args, out):
    rows = []
    if args.degrees is not None:
        degrees = json.loads(args.degrees)
        sys_value, product = cones.bundle_systole_profile(
            degrees, args.genus, Fraction(args.a), Fraction(args.b))
        rows += [("degrees", args.degrees), ("genus", Fraction(args.genus)),
                 ("sys_value", sys_value), ("sys_times_s", product)]
    if args.n is not None:
        rows += [("n", Fraction(args.n)),
                 ("profile_sup", cones.bundle_profile_sup(args.n)),
                 ("maximizer", "(x, e) = (1, 0)")]
    if not rows:
        raise CalculatorError("pass --n for the supremum or --degrees/--genus "
                              "for a profile value")
    _emit(rows, args.format, args.approx, out)


def _parse_matrix_json(text):
    data = json.loads(text)
    return [[Fraction(str(x)) for x in row] for row in data]


def _cmd_lattice(args, out):
    if args.sweep:
        rng = random.Random(args.seed)
        buckets = {}
        worst = Fraction(0)
        for _ in range(args.sweep):
            rank = rng.randint(args.min_rank, args.max_rank)
            basis = lattices.random_basis(rank, rng)
            lat = lattices.NormedLattice(
                basis=basis, gram=[[1 if i == j else 0 for j in range(rank)]
                                   for i in range(rank)])
            reduced = lattices.reduced_dual_basis(lat)
            for prod_sq in reduced.achieved:
                ratio = float(prod_sq) ** 0.5 / reduced.rank ** 2
                worst = max(worst, prod_sq)
                bucket = min(int(ratio * 10), 9)
                buckets[bucket] = buckets.get(bucket, 0) + 1
        rows = [("instances", Fraction(args.sweep)),
                ("worst_product_sq", worst)]
        for bucket in sorted(buckets):
            lo, hi = bucket / 10, (bucket + 1) / 10
            rows.append(("achieved/bound in [%.1f, %.1f)" % (lo, hi),
                         Fraction(buckets[bucket])))
        _emit(rows, args.format, args.approx, out)
        return
    if args.gram:
        lat = lattices.NormedLattice(
            basis=_parse_matrix_json(args.basis) if args.basis else
            [[1 if i == j else 0 for j in range(len(json.loads(args.gram)))]
             for i in range(len(json.loads(args.gram)))],
            gram=_parse_matrix_json(args.gram))
    elif args.vertices:
        verts = _parse_matrix_json(args.vertices)
        rank = len(verts[0])
        lat = lattices.NormedLattice(
            basis=_parse_matrix_json(args.basis) if args.basis else
            [[1 if i == j else 0 for j in range(rank)] for i in range(rank)],
            vertices=verts)
    else:
        raise CalculatorError("pass --gram, --vertices, or --sweep")
    rows = [("rank", Fraction(lat.rank)), ("norm", lat.kind)]
    for j in range(1, lat.rank + 1):
        label = "lambda_%d%s" % (j, "_sq" if lat.kind == "euclidean" else "")
        rows.append((label, lattices.successive_minima(lat, j)))
    if lat.kind == "euclidean":
        rep = lattices.transference_check(lat)
        rows.append(("transference_product_sq", rep.product_sq))
        rows.append(("transference_bound_sq", Fraction(rep.rank) ** 2))
    reduced = lattices.reduced_dual_basis(lat)
    for i, (vec, norm) in enumerate(zip(reduced.vectors, reduced.dual_norms)):
        rows.append(("dual_basis_%d" % (i + 1),
                     "(%s)" % ", ".join(str(x) for x in vec)))
        rows.append(("dual_norm%s_%d" % ("_sq" if reduced.squared else "", i + 1),
                     norm))
    _emit(rows, args.format, args.approx, out)


def _cmd_pushforward(args, out):
    rows = [("k", Fraction(args.k)), ("r", Fraction(args.r)),
            ("j", Fraction(args.j))]
    sym = pushforward.localization_pushforward(args.k, args.r, args.j)
    rows.append(("pushforward", str(sym.as_expr())))
    if args.primitive:
        rows.append(("primitive_coefficient",
                     pushforward.primitive_coefficient(args.k, args.r, args.j)))
    _emit(rows, args.format, args.approx, out)


_CATALOG_LINES = (
    ("CP(n)", "projective space, index n+1, <H^n> = 1"),
    ("Q(n)", "quadric, index n, <H^n> = 2 (H-subring model)"),
    ("CI(degrees; ambient)", "complete intersection in a product of "
                             "projective spaces (ambient-restricted classes)"),
    ("PB(degrees; genus)", "projective bundle over a curve, rays {xi, f}"),
    ("BlP(n)", "blowup of CP(n) at a point, rays {H, H-E}"),
    ("S(k), S1", "spheres and the circle (A-hat = 1)"),
    ("X * Y", "products (Kuenneth pairing)"),
    ("X.twist(k)", "replace the spin^c class c by c + 2k x"),
    ("X6 in P(1^n,2,3)", "index n-1, metadata only (weighted del Pezzo)"),
    ("X4 in P(1^(n+1),2)", "index n-1, metadata only (weighted del Pezzo)"),
    ("X6 in P(1^(n+1),3)", "index n-2, metadata only (weighted Mukai)"),
    ("G(2,C^5) cap CP(n+3)", "index n-1, metadata only, KE iff n in {3, 6}"),
)


def _cmd_catalog(args, out):
    rows = [(pattern, desc) for pattern, desc in _CATALOG_LINES]
    _emit(rows, args.format, args.approx, out)


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="sysbound",
        description="Exact curvature-systole, volume, and width bounds on a "
                    "catalog of explicit manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, space=True):
        if space:
            p.add_argument("--space", required=False,
                           help="space descriptor, e.g. 'CP(3) * S1'")
            p.add_argument("--batch", action="store_true",
                           help="read one descriptor per line from stdin")
        p.add_argument("--format", choices=("table", "json", "csv"),
                       default="table")
        p.add_argument("--approx", type=int, default=None, metavar="DIGITS",
                       help="add decimal approximations (labeled approximate)")

    p = sub.add_parser("bound", help="evaluate a closed-form bound")
    p.add_argument("--theorem", required=True,
                   choices=SELECTORS + _EXTRA_SELECTORS)
    p.add_argument("--alpha", help="degree-2 class, e.g. 'pi*H' (thm1.4, "
                                   "thm1.8, rbar)")
    common(p)

    p = sub.add_parser("index-poly", help="twist polynomial of a b2 = 1 space")
    common(p)
    p = sub.add_parser("length", help="minimal nonvanishing twist distance")
    common(p)
    p = sub.add_parser("todd", help="Todd genus")
    common(p)

    p = sub.add_parser("phi", help="volume functional at a class")
    p.add_argument("--alpha", required=True)
    common(p)
    p = sub.add_parser("phi-sup", help="supremum of the volume functional")
    common(p)

    p = sub.add_parser("contractions",
                       help="projection report for a multiprojective CI")
    common(p)

    p = sub.add_parser("bundle-profile",
                       help="projective-bundle systole profile and supremum")
    p.add_argument("--n", type=int)
    p.add_argument("--degrees", help="JSON list, e.g. '[0,2]'")
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--a", default="1")
    p.add_argument("--b", default="1")
    common(p, space=False)

    p = sub.add_parser("lattice", help="minima, duals, reduction, transference")
    p.add_argument("--gram", help="JSON matrix (entries int or 'p/q')")
    p.add_argument("--vertices", help="JSON list of unit-ball vertices")
    p.add_argument("--basis", help="JSON basis matrix (rows; default identity)")
    p.add_argument("--sweep", type=int, help="random sweep of this many lattices")
    p.add_argument("--min-rank", type=int, default=2)
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    common(p, space=False)

    p = sub.add_parser("pushforward", help="Grassmannian-bundle pushforward")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--primitive", action="store_true")
    common(p, space=False)

    p = sub.add_parser("catalog", help="list the catalog families")
    common(p, space=False)
    return parser


_DISPATCH = {
    "bound": _cmd_bound,
    "index-poly": _cmd_index_poly,
    "length": _cmd_length,
    "todd": _cmd_todd,
    "phi": _cmd_phi,
    "phi-sup": _cmd_phi_sup,
    "contractions": _cmd_contractions,
    "bundle-profile": _cmd_bundle_profile,
    "lattice": _cmd_lattice,
    "pushforward": _cmd_pushforward,
    "catalog": _cmd_catalog,
}


def run_command(argv, out=None, err=None) -> int:
    """Run one CLI invocation; returns the exit code without exiting."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = _DISPATCH[args.command]
    needs_space = hasattr(args, "space")
    try:
        if needs_space and getattr(args, "batch", False):
            code = 0
            for line in sys.stdin:
                line = line.strip()
                if not line:
                    continue
                args.space = line
                try:
                    handler(args, out)
                except ParseError as exc:
                    err.write("parse error: %s\n" % exc)
                    code = 2
                except CalculatorError as exc:
                    err.write("error: %s\n" % exc)
                    code = 1
            return code
        if needs_space and not args.space:
            err.write("error: --space is required (or use --batch)\n")
            return 2
        handler(args, out)
        return 0
    except ParseError as exc:
        err.write("parse error: %s\n" % exc)
        return 2
    except CalculatorError as exc:
        err.write("error: %s\n" % exc)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
