"""Boolean functions, two-level covers and disjoint sum-of-products algebra.

Literals are ``(variable, polarity)`` pairs.  The same representation serves
single-rail and dual-rail expressions: the rail literal ``x(1)`` is the
positive literal of ``x`` and ``x(0)`` the negative one, which is exactly
what makes ``x(0) x(1)`` a null product under the dual-rail code.  Rendering
chooses the notation.

Minterm indices are MSB-first: ``var_names[0]`` is the most significant bit,
so ``F(a,b,c,d) = Σ(1,...)`` uses the usual textbook numbering.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

import numpy as np

Literal = tuple[str, bool]

MAX_EQUIV_VARS = 24
MAX_MINIMIZE_VARS = 12


class _NullTerm:
    """The product of two complementary literals."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NULL"

    def __bool__(self):
        return False


NULL = _NullTerm()


@dataclass(frozen=True, order=True)
class ProductTerm:
    literals: tuple[Literal, ...] = ()

    @classmethod
    def of(cls, literals: Union[Mapping[str, bool], Iterable[Literal]]):
        """Build a term, returning ``NULL`` when a variable occurs in both polarities."""
        items = literals.items() if isinstance(literals, Mapping) else literals
        seen: dict[str, bool] = {}
        for var, pol in items:
            pol = bool(pol)
            if seen.get(var, pol) != pol:
                return NULL
            seen[var] = pol
        return cls(tuple(sorted(seen.items())))

    def conjoin(self, other: "ProductTerm"):
        return ProductTerm.of(self.literals + other.literals)

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.literals)

    def as_dict(self) -> dict[str, bool]:
        return dict(self.literals)

    def is_tautology(self) -> bool:
        return not self.literals

    def __len__(self):
        return len(self.literals)

    def truth_table(self, var_names: Sequence[str]) -> np.ndarray:
        return _cube_table(self.literals, var_names)

    def evaluate(self, assignment: Mapping[str, int]) -> int:
        return int(all(bool(assignment[v]) == p for v, p in self.literals))

    def evaluate_rails(self, rails: Mapping[str, int]) -> int:
        """Evaluate over rail values, ``rails['a.1']`` / ``rails['a.0']``."""
        return int(all(rails[rail_net(v, p)] for v, p in self.literals))

    def to_text(self, rails: bool = False, parens: bool = False) -> str:
        if not self.literals:
            return "1"
        return "".join(format_literal(v, p, rails, parens) for v, p in self.literals)

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class Factored:
    """``cube * (k1 + k2 + ...)``, one level of algebraic factoring."""

    cube: ProductTerm
    kernel: tuple[ProductTerm, ...]

    def expand(self) -> list[ProductTerm]:
        out = []
        for k in self.kernel:
            t = self.cube.conjoin(k)
            if t is not NULL:
                out.append(t)
        return out

    @property
    def variables(self) -> frozenset[str]:
        vs = set(self.cube.variables)
        for k in self.kernel:
            vs |= k.variables
        return frozenset(vs)

    def literal_count(self) -> int:
        return len(self.cube) + sum(len(k) for k in self.kernel)

    def to_text(self, rails: bool = False, parens: bool = False) -> str:
        open_, close = ("[", "]") if parens else ("(", ")")
        inner = " + ".join(k.to_text(rails, parens) for k in self.kernel)
        cube = self.cube.to_text(rails, parens) if self.cube.literals else ""
        return f"{open_}{inner}{close}{cube}"


Node = Union[ProductTerm, Factored]


@dataclass(frozen=True)
class SopExpression:
    terms: tuple[Node, ...] = ()

    @classmethod
    def of(cls, terms: Iterable[Node]) -> "SopExpression":
        return cls(tuple(t for t in terms if t is not NULL))

    def expand(self) -> "SopExpression":
        return expand_factored(self)

    def flat_terms(self) -> list[ProductTerm]:
        out: list[ProductTerm] = []
        for node in self.terms:
            out.extend(node.expand() if isinstance(node, Factored) else [node])
        return out

    def is_flat(self) -> bool:
        return all(isinstance(t, ProductTerm) for t in self.terms)

    @property
    def variables(self) -> frozenset[str]:
        vs: set[str] = set()
        for t in self.terms:
            vs |= t.variables
        return frozenset(vs)

    def literal_count(self) -> int:
        return sum(t.literal_count() if isinstance(t, Factored) else len(t) for t in self.terms)

    def truth_table(self, var_names: Sequence[str]) -> np.ndarray:
        out = np.zeros(1 << len(var_names), dtype=bool)
        for t in self.flat_terms():
            out |= t.truth_table(var_names)
        return out

    def evaluate(self, assignment: Mapping[str, int]) -> int:
        return int(any(t.evaluate(assignment) for t in self.flat_terms()))

    def evaluate_rails(self, rails: Mapping[str, int]) -> int:
        return int(any(t.evaluate_rails(rails) for t in self.flat_terms()))

    def to_text(self, rails: bool = False, parens: bool = False) -> str:
        if not self.terms:
            return "0"
        return " + ".join(t.to_text(rails, parens) for t in self.terms)

    def __str__(self):
        return self.to_text()

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class PosExpression:
    """Product of sums; the De Morgan dual of an SOP."""

    clauses: tuple[tuple[Literal, ...], ...]

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(v for c in self.clauses for v, _ in c)

    def truth_table(self, var_names: Sequence[str]) -> np.ndarray:
        out = np.ones(1 << len(var_names), dtype=bool)
        for clause in self.clauses:
            acc = np.zeros_like(out)
            for lit in clause:
                acc |= _cube_table((lit,), var_names)
            out &= acc
        return out

    def evaluate(self, assignment: Mapping[str, int]) -> int:
        return int(all(any(bool(assignment[v]) == p for v, p in c) for c in self.clauses))

    def evaluate_rails(self, rails: Mapping[str, int]) -> int:
        return int(all(any(rails[rail_net(v, p)] for v, p in c) for c in self.clauses))

    def to_text(self, rails: bool = False, parens: bool = False) -> str:
        if not self.clauses:
            return "1"
        parts = []
        for c in self.clauses:
            inner = " + ".join(format_literal(v, p, rails, parens) for v, p in c)
            parts.append(f"({inner})" if len(c) > 1 else inner)
        return "".join(parts)

    def __str__(self):
        return self.to_text()


Expression = Union[SopExpression, PosExpression]


@dataclass(frozen=True)
class BooleanFunction:
    var_count: int
    on_set: frozenset[int]
    dc_set: frozenset[int] = frozenset()
    var_names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.var_names:
            object.__setattr__(self, "var_names", default_names(self.var_count))

    @property
    def size(self) -> int:
        return 1 << self.var_count

    @property
    def off_set(self) -> frozenset[int]:
        return frozenset(range(self.size)) - self.on_set - self.dc_set

    @property
    def care_set(self) -> frozenset[int]:
        return frozenset(range(self.size)) - self.dc_set

    def value(self, minterm: int):
        """1, 0, or None for a don't-care."""
        if minterm in self.on_set:
            return 1
        if minterm in self.dc_set:
            return None
        return 0

    def assignment(self, minterm: int) -> dict[str, int]:
        n = self.var_count
        return {v: (minterm >> (n - 1 - i)) & 1 for i, v in enumerate(self.var_names)}

    def is_constant(self):
        if not self.on_set:
            return 0
        if not self.off_set:
            return 1
        return None


class DualRailExpression(NamedTuple):
    true_rail: Expression
    false_rail: Expression
    var_names: tuple[str, ...]

    def to_text(self, parens: bool = False) -> str:
        return (f"T = {self.true_rail.to_text(rails=True, parens=parens)}\n"
                f"F = {self.false_rail.to_text(rails=True, parens=parens)}")

    def codeword_conflicts(self, f: BooleanFunction | None = None) -> list[int]:
        """Minterms whose complete codeword does not raise exactly one rail.

        With ``f`` given, don't-care minterms are excluded (both covers may
        legitimately use them).
        """
        t = self.true_rail.truth_table(self.var_names)
        fl = self.false_rail.truth_table(self.var_names)
        bad = np.flatnonzero(t == fl).tolist()
        if f is not None:
            bad = [m for m in bad if m not in f.dc_set]
        return bad


class DsopVerdict(NamedTuple):
    ok: bool
    witness: tuple[ProductTerm, ProductTerm] | None = None

    def __bool__(self):
        return self.ok


def default_names(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:n])
    return tuple(f"x{i}" for i in range(n))


def rail_net(var: str, polarity: bool) -> str:
    return f"{var}.{int(polarity)}"


def format_literal(var: str, pol: bool, rails: bool = False, parens: bool = False) -> str:
    if rails:
        return f"{var}({int(pol)})" if parens else f"{var}{int(pol)}"
    return var if pol else var + "'"


def _cube_table(literals: Iterable[Literal], var_names: Sequence[str]) -> np.ndarray:
    n = len(var_names)
    idx = np.arange(1 << n, dtype=np.int64)
    out = np.ones(1 << n, dtype=bool)
    pos = {v: i for i, v in enumerate(var_names)}
    for var, pol in literals:
        if var not in pos:
            raise ValueError(f"variable {var!r} outside universe {list(var_names)}")
        bit = (idx >> (n - 1 - pos[var])) & 1
        out &= bit == int(pol)
    return out


# ---------------------------------------------------------------- ingestion


def function_from_spec(var_count: int, on_set: Iterable[int], dc_set: Iterable[int] = (),
                       var_names: Sequence[str] | None = None) -> BooleanFunction:
    if var_count < 1:
        raise ValueError("var_count must be positive")
    on, dc = frozenset(on_set), frozenset(dc_set)
    size = 1 << var_count
    bad = sorted(m for m in on | dc if not 0 <= m < size)
    if bad:
        raise ValueError(f"minterm index out of range [0, {size}): {bad}")
    overlap = on & dc
    if overlap:
        raise ValueError(f"on-set and dc-set overlap: {sorted(overlap)}")
    names = tuple(var_names) if var_names else default_names(var_count)
    if len(names) != var_count or len(set(names)) != var_count:
        raise ValueError("var_names must list var_count distinct names")
    return BooleanFunction(var_count, on, dc, names)


class SpecSyntaxError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def parse_function_spec(text: str) -> BooleanFunction:
    """Read the line-oriented ``vars/names/on/dc`` function format."""
    fields: dict[str, tuple[int, list[str]]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key not in ("vars", "names", "on", "dc"):
            raise SpecSyntaxError(lineno, f"unknown directive {key!r}")
        if key in fields:
            raise SpecSyntaxError(lineno, f"duplicate directive {key!r}")
        fields[key] = (lineno, rest)
    if "vars" not in fields:
        raise SpecSyntaxError(1, "missing 'vars' line")
    if "on" not in fields:
        raise SpecSyntaxError(fields["vars"][0], "missing 'on' line")

    def ints(key):
        lineno, toks = fields.get(key, (0, []))
        try:
            return lineno, [int(t) for t in toks]
        except ValueError as exc:
            raise SpecSyntaxError(lineno, f"non-integer in {key!r}: {exc}") from None

    lineno, nv = ints("vars")
    if len(nv) != 1:
        raise SpecSyntaxError(lineno, "'vars' takes exactly one integer")
    names = fields.get("names", (0, None))[1]
    on_line, on = ints("on")
    dc_line, dc = ints("dc")
    try:
        return function_from_spec(nv[0], on, dc, names)
    except ValueError as exc:
        raise SpecSyntaxError(on_line or lineno, str(exc)) from None


def format_function_spec(f: BooleanFunction) -> str:
    lines = [f"vars {f.var_count}", "names " + " ".join(f.var_names),
             "on " + " ".join(map(str, sorted(f.on_set)))]
    if f.dc_set:
        lines.append("dc " + " ".join(map(str, sorted(f.dc_set))))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- expression parsing

_TOKEN = re.compile(r"\s*(?:(?P<rail>[A-Za-z_]\w*?)\((?P<rbit>[01])\)|(?P<name>[A-Za-z_][0-9]*)"
                    r"|(?P<const>[01])|(?P<op>[+*&()\[\]'·]))")


def parse_expression(text: str, rails: bool = False) -> SopExpression:
    """Parse ``c(a+b) + dc'`` style text into a (possibly factored) SOP.

    Single letters are variables, optionally followed by digits (``x12``).
    ``a(1)``/``a(0)`` are always rail literals; with ``rails=True`` the
    compact ``a1``/``a0`` spelling is read as rails as well.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        if m["rail"]:
            tokens.append(("lit", (m["rail"], m["rbit"] == "1")))
        elif m["name"]:
            name = m["name"]
            if rails and len(name) >= 2 and name[-1] in "01" and name[:-1].isalpha():
                tokens.append(("lit", (name[:-1], name[-1] == "1")))
            else:
                tokens.append(("lit", (name, True)))
        elif m["const"]:
            tokens.append(("const", m["const"] == "1"))
        elif m["op"] in "[(":
            tokens.append(("(", None))
        elif m["op"] in "])":
            tokens.append((")", None))
        else:
            tokens.append((m["op"].replace("&", "*").replace("·", "*"), None))
    parser = _ExprParser(tokens)
    tree = parser.parse_sum()
    if parser.i != len(tokens):
        raise ValueError(f"trailing input after token {parser.i}")
    return _tree_to_sop(tree)


class _ExprParser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def parse_sum(self):
        items = [self.parse_product()]
        while self.peek() == "+":
            self.i += 1
            items.append(self.parse_product())
        return ("sum", items)

    def parse_product(self):
        factors = [self.parse_factor()]
        while self.peek() in ("*", "lit", "(", "const"):
            if self.peek() == "*":
                self.i += 1
            factors.append(self.parse_factor())
        return ("prod", factors)

    def parse_factor(self):
        kind = self.peek()
        if kind == "lit":
            _, (var, pol) = self.tokens[self.i]
            self.i += 1
            while self.peek() == "'":
                self.i += 1
                pol = not pol
            return ("lit", (var, pol))
        if kind == "const":
            val = self.tokens[self.i][1]
            self.i += 1
            return ("const", val)
        if kind == "(":
            self.i += 1
            inner = self.parse_sum()
            if self.peek() != ")":
                raise ValueError("unbalanced parenthesis")
            self.i += 1
            if self.peek() == "'":
                raise ValueError("complemented groups are not supported")
            return inner
        raise ValueError(f"unexpected token {kind!r}")


def _flatten(tree) -> list[ProductTerm]:
    kind = tree[0]
    if kind == "lit":
        return [ProductTerm.of([tree[1]])]
    if kind == "const":
        return [ProductTerm()] if tree[1] else []
    if kind == "sum":
        out = []
        for item in tree[1]:
            out.extend(_flatten(item))
        return out
    acc = [ProductTerm()]
    for factor in tree[1]:
        nxt = []
        for a in acc:
            for b in _flatten(factor):
                t = a.conjoin(b)
                if t is not NULL:
                    nxt.append(t)
        acc = nxt
    return acc


def _tree_to_sop(tree) -> SopExpression:
    nodes: list[Node] = []
    for prod in tree[1]:
        lits = [f[1] for f in prod[1] if f[0] == "lit"]
        groups = [f for f in prod[1] if f[0] == "sum"]
        consts = [f[1] for f in prod[1] if f[0] == "const"]
        if consts and not all(consts):
            continue
        cube = ProductTerm.of(lits)
        if cube is NULL:
            continue
        if len(groups) == 1 and all(len(item[1]) == 1 or all(x[0] == "lit" for x in item[1])
                                    for item in groups[0][1]):
            kernel = tuple(t for item in groups[0][1] for t in _flatten(item))
            if len(kernel) > 1:
                nodes.append(Factored(cube, kernel))
                continue
        nodes.extend(_flatten(prod))
    return SopExpression.of(nodes)


# ---------------------------------------------------------------- minimization


def _qm_primes(n: int, minterms: Iterable[int]) -> list[tuple[int, int]]:
    """Prime implicants as ``(care_mask, value)`` cubes."""
    full = (1 << n) - 1
    current = {(full, m) for m in minterms}
    primes: set[tuple[int, int]] = set()
    while current:
        merged = set()
        nxt = set()
        by_mask: dict[int, list[int]] = {}
        for mask, val in current:
            by_mask.setdefault(mask, []).append(val)
        for mask, vals in by_mask.items():
            vs = set(vals)
            for v in vals:
                bits = mask
                while bits:
                    b = bits & -bits
                    bits ^= b
                    if not v & b and (v | b) in vs:
                        nxt.add((mask & ~b, v))
                        merged.add((mask, v))
                        merged.add((mask, v | b))
        primes |= current - merged
        current = nxt
    return sorted(primes, key=lambda c: (-bin(c[0]).count("0"), c))


def _cube_minterms(cube: tuple[int, int], n: int) -> frozenset[int]:
    mask, val = cube
    free = [1 << i for i in range(n) if not mask & (1 << i)]
    out = []
    for k in range(1 << len(free)):
        m = val
        for j, b in enumerate(free):
            if k >> j & 1:
                m |= b
        out.append(m)
    return frozenset(out)


def _exact_cover(cover_sets: list[frozenset[int]], weights: list[int], targets: frozenset[int]) -> list[int]:
    """Minimum-cardinality cover, ties broken by total weight (literals)."""
    best: list = [None, (float("inf"), float("inf"))]
    biggest = max((len(s) for s in cover_sets), default=1) or 1

    def search(uncovered: frozenset[int], chosen: list[int], lits: int):
        if not uncovered:
            cost = (len(chosen), lits)
            if cost < best[1]:
                best[0], best[1] = list(chosen), cost
            return
        lower = len(chosen) + -(-len(uncovered) // biggest)
        if lower > best[1][0] or (lower == best[1][0] and lits >= best[1][1]):
            return
        pivot = min(uncovered, key=lambda m: (sum(1 for s in cover_sets if m in s), m))
        options = [i for i, s in enumerate(cover_sets) if pivot in s]
        options.sort(key=lambda i: (-len(cover_sets[i] & uncovered), weights[i], i))
        for i in options:
            chosen.append(i)
            search(uncovered - cover_sets[i], chosen, lits + weights[i])
            chosen.pop()

    search(targets, [], 0)
    return sorted(best[0] or [])


def _cube_to_term(cube: tuple[int, int], names: Sequence[str]) -> ProductTerm:
    n = len(names)
    mask, val = cube
    lits = []
    for i, v in enumerate(names):
        b = 1 << (n - 1 - i)
        if mask & b:
            lits.append((v, bool(val & b)))
    return ProductTerm.of(lits)


def minimize_cover(f: BooleanFunction, polarity: str = "on") -> SopExpression:
    """Exact minimum SOP cover of the ON- or OFF-set, don't-cares usable."""
    if polarity not in ("on", "off"):
        raise ValueError("polarity must be 'on' or 'off'")
    if f.var_count > MAX_MINIMIZE_VARS:
        raise ValueError(f"exact minimization limited to {MAX_MINIMIZE_VARS} variables")
    targets = f.on_set if polarity == "on" else f.off_set
    if not targets:
        return SopExpression()
    if len(targets) + len(f.dc_set) == f.size:
        return SopExpression((ProductTerm(),))
    n = f.var_count
    primes = _qm_primes(n, targets | f.dc_set)
    sets = [_cube_minterms(p, n) & targets for p in primes]
    keep = [i for i, s in enumerate(sets) if s]
    primes = [primes[i] for i in keep]
    sets = [sets[i] for i in keep]
    weights = [bin(p[0]).count("1") for p in primes]
    chosen = _exact_cover(sets, weights, frozenset(targets))
    terms = sorted((_cube_to_term(primes[i], f.var_names) for i in chosen),
                   key=lambda t: _term_order_key(t, f.var_names))
    return SopExpression(tuple(terms))


def _term_order_key(t: ProductTerm, names: Sequence[str]):
    rank = {v: i for i, v in enumerate(names)}
    return [(rank.get(v, len(rank)), not p) for v, p in t.literals]


# ---------------------------------------------------------------- factoring


def factor_single_kernel(expr: SopExpression) -> SopExpression:
    """Pull the best common cube out of a group of terms (one level only)."""
    if not expr.is_flat():
        return expr
    terms: list[ProductTerm] = list(expr.terms)
    best = None
    for lit in sorted({l for t in terms for l in t.literals}):
        group = [i for i, t in enumerate(terms) if lit in t.literals]
        if len(group) < 2:
            continue
        common = set(terms[group[0]].literals)
        for i in group[1:]:
            common &= set(terms[i].literals)
        if any(len(terms[i]) == len(common) for i in group):
            continue  # a kernel term would degenerate to the constant 1
        saving = (len(group) - 1) * len(common)
        key = (saving, len(group))
        if best is None or key > best[0]:
            best = (key, tuple(group), ProductTerm.of(common))
    if best is None or best[0][0] <= 0:
        return expr
    _, group, cube = best
    kernel = tuple(ProductTerm.of(l for l in terms[i].literals if l not in cube.literals) for i in group)
    nodes: list[Node] = []
    for i, t in enumerate(terms):
        if i == group[0]:
            nodes.append(Factored(cube, kernel))
        elif i not in group:
            nodes.append(t)
    return SopExpression(tuple(nodes))


def expand_factored(expr: SopExpression) -> SopExpression:
    return SopExpression(tuple(expr.flat_terms()))


# ---------------------------------------------------------------- disjointness


def terms_disjoint(t1: ProductTerm, t2: ProductTerm) -> bool:
    if t1 is NULL or t2 is NULL:
        raise ValueError("terms_disjoint is undefined on NULL")
    return t1.conjoin(t2) is NULL


def is_dsop(expr: SopExpression) -> DsopVerdict:
    terms = expr.flat_terms()
    for (i, a), (j, b) in combinations(enumerate(terms), 2):
        if not terms_disjoint(a, b):
            return DsopVerdict(False, (a, b))
    return DsopVerdict(True)


def _sharp(t: ProductTerm, other: ProductTerm) -> list[ProductTerm]:
    """``t`` minus ``other`` as a list of disjoint pieces."""
    if terms_disjoint(t, other):
        return [t]
    missing = [l for l in other.literals if l not in t.literals]
    pieces = []
    prefix = t
    for var, pol in missing:
        pieces.append(prefix.conjoin(ProductTerm(((var, not pol),))))
        prefix = prefix.conjoin(ProductTerm(((var, pol),)))
    return pieces


def sop_to_dsop(expr: SopExpression) -> SopExpression:
    """Make every pair of terms disjoint; earlier terms are kept, later ones split."""
    out: list[ProductTerm] = []
    for t in expr.flat_terms():
        pieces = [t]
        for prev in out:
            pieces = [q for p in pieces for q in _sharp(p, prev)]
        out.extend(pieces)
    return SopExpression(tuple(out))


# ---------------------------------------------------------------- dual rail


def demorgan_dual(expr: SopExpression) -> PosExpression:
    """Complement of an SOP as a product of sums (one clause per product)."""
    clauses = tuple(tuple((v, not p) for v, p in t.literals) for t in expr.flat_terms())
    return PosExpression(clauses)


def dual_rail_encode(f: BooleanFunction, mode: str = "onoff", factor: bool = False) -> DualRailExpression:
    true_rail = minimize_cover(f, "on")
    if factor:
        true_rail = factor_single_kernel(true_rail)
    if mode == "onoff":
        false_rail = minimize_cover(f, "off")
        if factor:
            false_rail = factor_single_kernel(false_rail)
    elif mode == "drcl":
        false_rail = demorgan_dual(true_rail)
    else:
        raise ValueError("mode must be 'onoff' or 'drcl'")
    return DualRailExpression(true_rail, false_rail, f.var_names)


def equivalent(e1: Expression, e2: Expression, var_names: Sequence[str] | None = None) -> bool:
    """Exhaustive truth-table comparison."""
    used = e1.variables | e2.variables
    if var_names is None:
        var_names = sorted(used)
    elif not used <= set(var_names):
        raise ValueError(f"variables {sorted(used - set(var_names))} outside universe")
    if len(var_names) > MAX_EQUIV_VARS:
        raise ValueError(f"equivalence check limited to {MAX_EQUIV_VARS} variables")
    return bool(np.array_equal(e1.truth_table(var_names), e2.truth_table(var_names)))


def cover_agrees(expr: Expression, f: BooleanFunction, polarity: str = "on") -> bool:
    """True if ``expr`` matches the chosen set of ``f`` on every care minterm."""
    table = expr.truth_table(f.var_names)
    target = f.on_set if polarity == "on" else f.off_set
    return all(bool(table[m]) == (m in target) for m in f.care_set)
