"""Decidable membership evaluators for the concrete relation catalog.

Every relation is named by a RelationSpec (an identifier plus parameters) and
lives on one of seven ambient spaces: the binary sequence space, its doubling
by a side bit, the one-limit-point subspace, the convergent sequence space K,
K doubled, and the two one-sided sums of K with its limit point.  evaluate()
decides membership of a pair; structural_profile and acyclicity_check give
sample-exhaustive structure verdicts and cycle certificates.

Two different six-way/four-way cell namings coexist in this domain; here the
four-valued diagonal classes are served by diag_class/in_diag_class and the
six cells of the K-square by kcell, so the names never collide.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .coloring import (
    GammaClass,
    g_beta_bipartite_contains,
    g_beta_diagfree_contains,
    r_beta_contains,
)
from .words import Point, alpha, flip_first, is_pf, parse_point, point_lex_less, q_word, shift

CANTOR = "Cantor"
D2XCANTOR = "D2xCantor"
SSEQ = "Sseq"
KSPACE = "Kspace"
D2XK = "D2xK"
LSPACE = "Lspace"
MSPACE = "Mspace"

_TAGGED_SPACES = {D2XCANTOR, D2XK, LSPACE, MSPACE}


@dataclass(frozen=True)
class KPoint:
    """A point of the convergent sequence space: 2^-k for a natural k, or the limit 0."""

    k: int | None  # None encodes the limit point 0

    def __post_init__(self):
        if self.k is not None and self.k < 0:
            raise ValueError("exponent must be a natural number")

    @property
    def in_c(self) -> bool:
        """Membership in the isolated part (the nonzero points)."""
        return self.k is not None

    def __str__(self) -> str:
        return "0" if self.k is None else f"2^-{self.k}"


K_ZERO = KPoint(None)


def parse_kpoint(text: str) -> KPoint:
    if text == "0":
        return K_ZERO
    m = re.match(r"^2\^-(\d+)$", text)
    if not m:
        raise ValueError(f"not a K-point literal: {text!r}")
    return KPoint(int(m.group(1)))


@dataclass(frozen=True)
class SpacePoint:
    """A point of one of the ambient spaces, with a side tag where the space is doubled."""

    space: str
    tag: int | None
    point: Point | KPoint

    def __post_init__(self):
        if self.space in _TAGGED_SPACES:
            if self.tag not in (0, 1):
                raise ValueError(f"{self.space} points need a side tag 0 or 1")
        elif self.tag is not None:
            raise ValueError(f"{self.space} points carry no side tag")
        if self.space in (CANTOR, D2XCANTOR, SSEQ):
            if not isinstance(self.point, Point):
                raise ValueError(f"{self.space} points are sequences")
        else:
            if not isinstance(self.point, KPoint):
                raise ValueError(f"{self.space} points live in the convergent sequence space")
        if self.space == SSEQ:
            if not (self.point == Point("", "0") or self.point.bit(0) == 1):
                raise ValueError("points of the one-limit subspace are 000... or start with 1")
        if self.space == LSPACE and self.tag == 0 and self.point != K_ZERO:
            raise ValueError("the 0 side of this sum holds only the limit point")
        if self.space == MSPACE and self.tag == 1 and self.point != K_ZERO:
            raise ValueError("the 1 side of this sum holds only the limit point")

    def __str__(self) -> str:
        body = str(self.point)
        return body if self.tag is None else f"{self.tag}:{body}"


def sp(space: str, point, tag: int | None = None) -> SpacePoint:
    return SpacePoint(space, tag, point)


def parse_space_point(text: str, space: str) -> SpacePoint:
    """Parse a point literal for the given space; tagged spaces use `<bit>:<point>`."""
    tag = None
    if space in _TAGGED_SPACES:
        if ":" not in text:
            raise ValueError(f"{space} point literals look like 0:<point> or 1:<point>")
        tag_text, text = text.split(":", 1)
        tag = int(tag_text)
    if space in (CANTOR, D2XCANTOR, SSEQ):
        body: Point | KPoint = parse_point(text)
    else:
        body = parse_kpoint(text)
    return SpacePoint(space, tag, body)


# ---------------------------------------------------------------------------
# diagonal classes (rank >= 2) and the six cells of the K-square (rank one)

def in_diag_class(g: GammaClass, j: int, x: Point) -> bool:
    """The four diagonal classes: witness set, empty set, its complement, everything."""
    if j == 0:
        return g.member(x)
    if j == 1:
        return False
    if j == 2:
        return not g.member(x)
    if j == 3:
        return True
    raise ValueError(f"diagonal class index must be in 0..3, got {j}")


def diag_class(g: GammaClass, x: Point) -> int:
    """0 when x is in the witness set, else 2."""
    return 0 if g.member(x) else 2


def kcell(x: KPoint, y: KPoint) -> int:
    """Index of the unique cell of the six-way partition of the K-square."""
    if x.in_c and y.in_c:
        if x.k > y.k:  # 2^-k decreases in k
            return 0
        if x.k == y.k:
            return 1
        return 2
    if x.in_c:
        return 3
    if y.in_c:
        return 4
    return 5


# ---------------------------------------------------------------------------
# relation specs

_NEEDS_GAMMA = {"E3", "Gm", "GmA", "Om", "Rt_P", "RtA_A", "Rbeta", "R_D"}
_NEEDS_BETA = {"Rbeta", "GbetaBip", "GbetaDiag"}

_SPACE_BY_ID = {
    "E3": D2XCANTOR, "Gm": D2XCANTOR, "Om": D2XCANTOR, "Rt_P": D2XCANTOR,
    "GbetaBip": D2XCANTOR,
    "GmA": SSEQ, "RtA_A": SSEQ,
    "Rbeta": CANTOR, "GbetaDiag": CANTOR, "R_D": CANTOR,
    "Rank1_N": KSPACE, "Tj": KSPACE, "R01_0": KSPACE, "R01_1": KSPACE,
    "Rank1_V": LSPACE, "Rank1_H": MSPACE, "Rank1_S": D2XK,
    "Ac": None,  # depends on the catalog index
}

_AC_SPACES = [CANTOR, SSEQ, SSEQ, SSEQ, SSEQ, SSEQ, SSEQ,
              CANTOR, CANTOR, CANTOR, CANTOR, CANTOR, CANTOR]


@dataclass(frozen=True)
class RelationSpec:
    """A catalog identifier with the parameters its evaluator needs."""

    rid: str
    gamma: GammaClass | None = None
    code: tuple = ()
    beta: Point | None = None
    digraph: Callable[[str, str], bool] | None = None
    j: tuple[int, int] | None = None
    complement: bool = False
    index: int | None = None  # catalog position for rid == "Ac"

    def __post_init__(self):
        if self.rid not in _SPACE_BY_ID:
            raise ValueError(f"unknown relation id {self.rid!r}")
        if self.rid in _NEEDS_GAMMA and self.gamma is None:
            raise ValueError(f"{self.rid} needs a gamma class")
        if self.rid in _NEEDS_BETA and self.beta is None:
            raise ValueError(f"{self.rid} needs a beta parameter")
        if self.rid == "R_D" and self.digraph is None:
            raise ValueError("R_D needs a digraph on q-words")
        if self.rid == "Tj" and self.j is None:
            raise ValueError("Tj needs a two-bit index")
        if self.rid == "Ac" and not (self.index is not None and 0 <= self.index <= 12):
            raise ValueError("Ac needs a catalog index in 0..12")

    @property
    def space(self) -> str:
        if self.rid == "Ac":
            return _AC_SPACES[self.index]
        return _SPACE_BY_ID[self.rid]

    def __str__(self) -> str:
        parts = []
        if self.gamma is not None:
            parts.append(f"gamma={self.gamma.tag}")
        if self.code:
            if self.code and isinstance(self.code[0], tuple):
                parts.append("t=" + ",".join("".join(map(str, g)) for g in self.code))
            else:
                parts.append("t=" + "".join(map(str, self.code)))
        if self.beta is not None:
            parts.append(f"beta={self.beta}")
        if self.j is not None:
            parts.append(f"j={self.j[0]}{self.j[1]}")
        if self.complement:
            parts.append("complement=1")
        if self.index is not None:
            parts.append(f"i={self.index}")
        return self.rid + (":" + ",".join(parts) if parts else "")


def parse_relation_spec(text: str) -> RelationSpec:
    """Parse `<id>[:<param>=<value>,...]`, e.g. `Gm:gamma=Sigma02` or `Tj:j=01`."""
    rid, _, rest = text.partition(":")
    params: dict[str, str] = {}
    if rest:
        key = None
        for chunk in rest.split(","):
            if "=" in chunk:
                key, value = chunk.split("=", 1)
                params[key] = value
            elif key is not None:
                params[key] += "," + chunk  # continuation of a grouped code literal
            else:
                raise ValueError(f"malformed parameter list in {text!r}")
    kwargs: dict = {}
    if "gamma" in params:
        kwargs["gamma"] = GammaClass(params.pop("gamma"))
    if "beta" in params:
        kwargs["beta"] = parse_point(params.pop("beta"))
    if "t" in params:
        raw = params.pop("t")
        if "," in raw:
            kwargs["code"] = tuple(tuple(int(c) for c in grp) for grp in raw.split(","))
        else:
            kwargs["code"] = tuple(int(c) for c in raw)
    if "j" in params:
        raw = params.pop("j")
        kwargs["j"] = (int(raw[0]), int(raw[1]))
    if "complement" in params:
        kwargs["complement"] = params.pop("complement") in ("1", "true", "True")
    if "i" in params:
        kwargs["index"] = int(params.pop("i"))
    if params:
        raise ValueError(f"unknown parameters {sorted(params)} for {rid}")
    return RelationSpec(rid, **kwargs)


# ---------------------------------------------------------------------------
# evaluation

def _pair_index(eu: int, ev: int) -> int:
    return eu * 2 + ev  # lexicographic order on the four side-tag pairs


def _check_space(spec: RelationSpec, u: SpacePoint, v: SpacePoint) -> None:
    if u.space != spec.space or v.space != spec.space:
        raise ValueError(
            f"{spec.rid} lives on {spec.space}, got points of {u.space} and {v.space}")


def _rank1_cell_union(code6, complement: bool, x: KPoint, y: KPoint) -> bool:
    want = 0 if complement else 1
    return code6[kcell(x, y)] == want


def evaluate(spec: RelationSpec, u: SpacePoint, v: SpacePoint) -> bool:
    """Decide membership of the ordered pair (u, v)."""
    _check_space(spec, u, v)
    rid = spec.rid
    g = spec.gamma

    if rid == "E3":
        return u == v or (u.point == v.point and g.member(u.point))
    if rid == "Gm":
        return u.tag != v.tag and u.point == v.point and g.member(u.point)
    if rid == "Om":
        return u.tag == 0 and v.tag == 1 and u.point == v.point and g.member(u.point)
    if rid == "Rt_P":
        return (u.point == v.point
                and in_diag_class(g, spec.code[_pair_index(u.tag, v.tag)], u.point))
    if rid == "GmA":
        zero = Point("", "0")
        if u.point == zero and v.point != zero:
            return g.member(shift(v.point))
        if v.point == zero and u.point != zero:
            return g.member(shift(u.point))
        return False
    if rid == "RtA_A":
        zero = Point("", "0")
        t = spec.code
        if u.point == zero and v.point == zero:
            return t[0] == 1
        if u.point == zero:
            return in_diag_class(g, t[1], shift(v.point))
        if v.point == zero:
            return in_diag_class(g, t[2], shift(u.point))
        return u.point == v.point and in_diag_class(g, t[3], shift(u.point))
    if rid == "Rbeta":
        return r_beta_contains(g, spec.beta, u.point, v.point)
    if rid == "GbetaBip":
        return g_beta_bipartite_contains(spec.beta, (u.tag, u.point), (v.tag, v.point))
    if rid == "GbetaDiag":
        return g_beta_diagfree_contains(spec.beta, u.point, v.point)
    if rid == "R_D":
        if u.point == v.point:
            return g.member(u.point)
        if is_pf(u.point) and is_pf(v.point):
            return bool(spec.digraph(q_word(u.point), q_word(v.point)))
        return False
    if rid == "Rank1_N":
        return _rank1_cell_union(spec.code, spec.complement, u.point, v.point)
    if rid in ("Rank1_V", "Rank1_H", "Rank1_S"):
        code6 = spec.code[_pair_index(u.tag, v.tag)]
        return _rank1_cell_union(code6, spec.complement, u.point, v.point)
    if rid == "Tj":
        return _tj_contains(spec.j, u.point, v.point)
    if rid == "R01_0":
        return _tj_contains((0, 1), u.point, v.point)
    if rid == "R01_1":
        return _tj_contains((0, 1), u.point, v.point) or _tj_contains((1, 0), u.point, v.point)
    if rid == "Ac":
        return _eval_catalog(spec.index, u.point, v.point)
    raise AssertionError(f"unhandled id {rid}")


def _tj_contains(j: tuple[int, int], x: KPoint, y: KPoint) -> bool:
    if not (x.in_c and y.in_c):
        return False
    lead = x.k - j[0]
    return lead >= 0 and lead % 2 == 0 and y.k == lead + j[1]


_ZERO_POINT = Point("", "0")


def _eval_catalog(i: int, x: Point, y: Point) -> bool:
    if i == 0:
        return True
    if i == 1:  # branch points into the limit point
        return x.bit(0) == 1 and y == _ZERO_POINT
    if i == 2:
        return x == _ZERO_POINT and y.bit(0) == 1
    if i == 3:
        return _eval_catalog(1, x, y) or _eval_catalog(2, x, y)
    if i == 4:
        return _eval_catalog(1, x, y) or (x == _ZERO_POINT and y == _ZERO_POINT)
    if i == 5:
        return _eval_catalog(2, x, y) or (x == _ZERO_POINT and y == _ZERO_POINT)
    if i == 6:
        return _eval_catalog(3, x, y) or (x == _ZERO_POINT and y == _ZERO_POINT)
    if i == 7:
        return x != y
    if i == 8:
        return point_lex_less(x, y)
    if i == 9:
        return x == y
    if i == 10:
        return x == y or point_lex_less(x, y)
    if i == 11:
        return y == flip_first(x)
    if i == 12:
        return x.bit(0) == 0 and y == flip_first(x)
    raise ValueError(f"catalog index must be in 0..12, got {i}")


# ---------------------------------------------------------------------------
# structural profiling and acyclicity

@dataclass(frozen=True)
class StructuralProfile:
    reflexive: bool
    irreflexive: bool
    symmetric: bool
    antisymmetric: bool
    transitive: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "reflexive": self.reflexive,
            "irreflexive": self.irreflexive,
            "symmetric": self.symmetric,
            "antisymmetric": self.antisymmetric,
            "transitive": self.transitive,
        }


def _as_predicate(rel) -> Callable[[SpacePoint, SpacePoint], bool]:
    if isinstance(rel, RelationSpec):
        return lambda u, v: evaluate(rel, u, v)
    return rel


def structural_profile(rel, vertices: Sequence[SpacePoint]) -> StructuralProfile:
    """Exhaustive verdicts over the given finite vertex set.

    A False is a certificate (a concrete counterexample exists among the
    vertices); a True only says no counterexample was found in the sample.
    """
    r = _as_predicate(rel)
    vs = list(vertices)
    table = {(a, b): r(a, b) for a in vs for b in vs}
    reflexive = all(table[(a, a)] for a in vs)
    irreflexive = not any(table[(a, a)] for a in vs)
    symmetric = all(table[(b, a)] for a in vs for b in vs if table[(a, b)])
    antisymmetric = all(not (table[(a, b)] and table[(b, a)])
                        for a in vs for b in vs if a != b)
    transitive = all(table[(a, c)]
                     for a in vs for b in vs if table[(a, b)]
                     for c in vs if table[(b, c)])
    return StructuralProfile(reflexive, irreflexive, symmetric, antisymmetric, transitive)


def acyclicity_check(rel, vertices: Sequence[SpacePoint]) -> list[SpacePoint] | None:
    """Search the symmetrization (minus the diagonal) for a cycle of length >= 3.

    Returns the cycle as a vertex list (consecutive vertices adjacent, last
    adjacent to first), or None when the restriction to the vertex set is
    acyclic.  Depth-first search with parent exclusion.
    """
    r = _as_predicate(rel)
    vs: list[SpacePoint] = []
    for v in vertices:
        if v not in vs:
            vs.append(v)
    n = len(vs)
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for k in range(i + 1, n):
            if r(vs[i], vs[k]) or r(vs[k], vs[i]):
                adj[i].append(k)
                adj[k].append(i)
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        stack = [(root, -1, iter(adj[root]))]
        on_path = {root: 0}
        seen[root] = True
        path = [root]
        while stack:
            node, parent, neighbours = stack[-1]
            advanced = False
            for nb in neighbours:
                if nb == parent:
                    continue
                if nb in on_path:
                    cycle = path[on_path[nb]:]
                    return [vs[i] for i in cycle]
                if not seen[nb]:
                    seen[nb] = True
                    on_path[nb] = len(path)
                    path.append(nb)
                    stack.append((nb, node, iter(adj[nb])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                on_path.pop(path.pop())
    return None


# ---------------------------------------------------------------------------
# the 13-entry catalog and its static structure table

@dataclass(frozen=True)
class CatalogEntry:
    index: int
    name: str
    space: str
    topology: str  # clopen / open-not-closed / closed-not-open
    profile: StructuralProfile
    is_graph: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "is_graph",
                           self.profile.symmetric and self.profile.irreflexive)

    def spec(self) -> RelationSpec:
        return RelationSpec("Ac", index=self.index)


def _prof(refl=False, irr=False, sym=False, anti=False, trans=False) -> StructuralProfile:
    return StructuralProfile(refl, irr, sym, anti, trans)


AC_CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry(0, "full", CANTOR, "clopen", _prof(refl=True, sym=True, trans=True)),
    CatalogEntry(1, "star-in", SSEQ, "clopen", _prof(irr=True, anti=True, trans=True)),
    CatalogEntry(2, "star-out", SSEQ, "clopen", _prof(irr=True, anti=True, trans=True)),
    CatalogEntry(3, "star", SSEQ, "clopen", _prof(irr=True, sym=True)),
    CatalogEntry(4, "star-in-loop", SSEQ, "clopen", _prof(anti=True, trans=True)),
    CatalogEntry(5, "star-out-loop", SSEQ, "clopen", _prof(anti=True, trans=True)),
    CatalogEntry(6, "star-loop", SSEQ, "clopen", _prof(sym=True)),
    CatalogEntry(7, "ne", CANTOR, "open-not-closed", _prof(irr=True, sym=True)),
    CatalogEntry(8, "lt", CANTOR, "open-not-closed", _prof(irr=True, anti=True, trans=True)),
    CatalogEntry(9, "eq", CANTOR, "closed-not-open",
                 _prof(refl=True, sym=True, anti=True, trans=True)),
    CatalogEntry(10, "le", CANTOR, "closed-not-open", _prof(refl=True, anti=True, trans=True)),
    CatalogEntry(11, "flip", CANTOR, "closed-not-open", _prof(irr=True, sym=True)),
    CatalogEntry(12, "flip-half", CANTOR, "closed-not-open", _prof(irr=True, anti=True, trans=True)),
)


# ---------------------------------------------------------------------------
# standard vertex fixtures

def base_points(n: int = 20) -> list[Point]:
    """The first n+1 eventually-zero points plus periodic ones, deduplicated.

    (The literal 1(01) denotes the same sequence as (10), so the periodic part
    contributes two distinct points.)
    """
    pts = [alpha(i) for i in range(n + 1)]
    pts += [Point("", "01"), Point("", "10"), Point("1", "01")]
    out: list[Point] = []
    for p in pts:
        if p not in out:
            out.append(p)
    return out


def standard_vertices(space: str, n: int = 20) -> list[SpacePoint]:
    """The shipped vertex fixture for each space (tagged liftings where needed)."""
    if space == CANTOR:
        return [sp(CANTOR, p) for p in base_points(n)]
    if space == D2XCANTOR:
        return [sp(D2XCANTOR, p, tag) for tag in (0, 1) for p in base_points(n)]
    if space == SSEQ:
        zero = Point("", "0")
        lifted = [zero] + [Point("1" + p.prefix, p.period) for p in base_points(n)]
        out = []
        for p in lifted:
            v = sp(SSEQ, p)
            if v not in out:
                out.append(v)
        return out
    if space == KSPACE:
        return [sp(KSPACE, K_ZERO)] + [sp(KSPACE, KPoint(k)) for k in range(n + 1)]
    if space == D2XK:
        return [sp(D2XK, kp.point, tag) for tag in (0, 1) for kp in standard_vertices(KSPACE, n)]
    if space == LSPACE:
        return [sp(LSPACE, K_ZERO, 0)] + [sp(LSPACE, kp.point, 1)
                                          for kp in standard_vertices(KSPACE, n)]
    if space == MSPACE:
        return [sp(MSPACE, kp.point, 0)
                for kp in standard_vertices(KSPACE, n)] + [sp(MSPACE, K_ZERO, 1)]
    raise ValueError(f"unknown space {space!r}")
