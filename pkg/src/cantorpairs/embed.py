"""Finite-depth construction of a color-preserving embedding into a dense subset.

Given a decidable dense-in-itself set H of eventually-zero points, the builder
produces, level by level over the binary tree, an index n_t and a cylinder
word z_t for every tree node, and thereby a q-word s_t (the name of the n_t-th
eventually-zero point) for every q-word node.  Nine conditions tie the data
together; the headline consequence is that the induced map on q-words
preserves the pair invariant, hence the coloring, at every finite depth.

Choices are deterministic: at each step the enumeration-least admissible point
of H is taken, so identical inputs rebuild identical schemes and deeper runs
extend shallower ones.  An optional random mode picks among the first few
admissible candidates instead; every choice it can make satisfies the same
constraints, which is how the randomized substitution-table tests are fed.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .coloring import color_c
from .oscillation import SuffAssignment, invariant_i, q_words_upto, suff_check
from .words import (
    WORD_CAP,
    Point,
    alpha,
    alpha_index,
    check_word,
    from_q,
    lex_less,
    q_normalize,
    render_word,
)


class SearchExhausted(RuntimeError):
    """No admissible point of H was found near a prefix within the search bound."""

    def __init__(self, name: str, prefix: str, bound: int):
        super().__init__(f"H({name}) not dense near prefix {render_word(prefix)!r} "
                         f"within {bound} candidates")
        self.prefix = prefix


def _candidate_qwords(prefix: str) -> Iterator[str]:
    """Q-words naming points of the cylinder at `prefix`, enumeration-least first."""
    head = q_normalize(prefix)
    yield head
    body = 0
    while True:
        for m in range(1 << body):
            yield prefix + (format(m, f"0{body}b") if body else "") + "1"
        body += 1


@dataclass(frozen=True)
class HSpec:
    """A decidable subset of the eventually-zero points, with a bounded search.

    `member` accepts a point by its q-word.  A custom `search` procedure may
    override the built-in scan; it must return a member of H naming a point of
    the given cylinder, outside the excluded set (checked).  The shipped
    presets are the whole space of eventually-zero points, its trace on a
    cylinder, and its image under bit doubling; each is dense in itself inside
    its closure, which is what the construction needs.
    """

    name: str
    member: Callable[[str], bool]
    search: Callable[[str, frozenset, int], str] | None = None

    def find(self, prefix: str, exclude: frozenset[str], bound: int,
             rng: random.Random | None = None, pool: int = 6) -> str:
        """A member of H in the cylinder at `prefix`, outside `exclude`.

        The built-in scan returns the enumeration-least candidate (or, with an
        rng, one of the first `pool` admissible candidates) and examines at
        most `bound` of them.
        """
        if self.search is not None and rng is None:
            w = self.search(prefix, exclude, bound)
            if (w in exclude or not self.member(w)
                    or not from_q(w).starts_with(prefix)):
                raise ValueError(
                    f"search procedure of H({self.name}) broke its contract at "
                    f"prefix {render_word(prefix)!r}: returned {w!r}")
            return w
        found: list[str] = []
        examined = 0
        for w in _candidate_qwords(prefix):
            if examined >= bound or len(w) > WORD_CAP:
                break
            examined += 1
            if w not in exclude and self.member(w):
                if rng is None:
                    return w
                found.append(w)
                if len(found) >= pool:
                    break
        if found:
            return rng.choice(found)
        raise SearchExhausted(self.name, prefix, bound)


def _member_all(w: str) -> bool:
    return True


def _member_doubled(w: str) -> bool:
    padded = w if len(w) % 2 == 0 else w + "0"
    return all(padded[i] == padded[i + 1] for i in range(0, len(padded), 2))


def h_preset(name: str) -> HSpec:
    """Presets: `pf`, `cyl:<word>`, `double`."""
    if name == "pf":
        return HSpec("pf", _member_all)
    if name.startswith("cyl:"):
        u = check_word(name[4:])
        return HSpec(name, lambda w: from_q(w).starts_with(u))
    if name == "double":
        return HSpec("double", _member_doubled)
    raise ValueError(f"unknown H preset {name!r} (expected pf, cyl:<word>, double)")


@dataclass(frozen=True)
class EmbeddingScheme:
    """Per-node data of a finite-depth scheme.

    n and z cover every tree node up to the depth; s covers the q-word nodes
    and is the table fed to the substitution checker.
    """

    depth: int
    n: dict[str, int]
    z: dict[str, str]
    s: dict[str, str]

    def point_map(self) -> dict[str, Point]:
        """The induced map on eventually-zero points, by q-word."""
        return {w: from_q(sw) for w, sw in self.s.items()}

    def to_json(self) -> str:
        nodes = sorted(self.n, key=lambda w: (len(w), w))
        entries = [{"t": render_word(t), "n_t": self.n[t], "z_t": self.z[t],
                    "s_t": self.s.get(t)} for t in nodes]
        return json.dumps({"depth": self.depth, "entries": entries},
                          separators=(",", ":"))


def build_embedding(h: HSpec, depth: int, bound: int = 10_000,
                    rng: random.Random | None = None) -> EmbeddingScheme:
    """Run the construction to the given depth.

    Raises SearchExhausted when H has no admissible point near some required
    prefix within the candidate bound.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    n: dict[str, int] = {}
    z: dict[str, str] = {}
    s_all: dict[str, str] = {}

    root = h.find("", frozenset([""]), bound, rng)
    n[""] = alpha_index(from_q(root))
    z[""] = root
    s_all[""] = root
    max_s_len = len(root)

    for level in range(depth):
        for t in sorted((w for w in n if len(w) == level), key=lambda w: w):
            st = s_all[t]
            pad_len = max(len(z[t]), level + 1, max_s_len + 1)
            for idx in range(level + 1):
                other = alpha(idx)
                mine = from_q(st)
                if other == mine:
                    continue
                d = 0
                while other.bit(d) == mine.bit(d):
                    d += 1
                pad_len = max(pad_len, d + 1)
            prefix = st + "0" * (pad_len - len(st))
            w = h.find(prefix, frozenset([st]), bound, rng)
            n[t + "1"] = alpha_index(from_q(w))
            z[t + "1"] = w
            s_all[t + "1"] = w
            n[t + "0"] = n[t]
            z[t + "0"] = (st + "0" * (len(w) - len(st)))[:len(w)]
            s_all[t + "0"] = st
            max_s_len = max(max_s_len, len(w))

    s_table = {w: s_all[w] for w in q_words_upto(depth)}
    return EmbeddingScheme(depth, n, z, s_table)


@dataclass(frozen=True)
class ConditionReport:
    passed: dict[int, bool]
    detail: dict[int, str]

    @property
    def all_ok(self) -> bool:
        return all(self.passed.values())


def verify_conditions(e: EmbeddingScheme, h: HSpec) -> ConditionReport:
    """Check the nine scheme conditions exhaustively over the domain.

    1 nested cylinders; 2 the chosen point lies in its cylinder and in H;
    3 cylinder words at least as long as their node; 4 sibling words share a
    length and the 0-side is lexicographically below; 5 the 0-child keeps its
    parent's index; 6 the 1-side cylinder avoids the first points of the
    enumeration; 7 name lengths grow along the length-lex order; 8 each name
    extends its predecessor's name; 9 the name table preserves the pair
    invariant (checked directly, and again through the substitution checker,
    whose declared table invariants are exactly 7 and 8).
    """
    passed: dict[int, bool] = {}
    detail: dict[int, str] = {}
    nodes = sorted(e.n, key=lambda w: (len(w), w))
    inner = [t for t in nodes if len(t) < e.depth]

    def fail(cond: int, msg: str) -> None:
        if passed.get(cond, True):
            passed[cond] = False
            detail[cond] = msg

    for c in range(1, 10):
        passed[c] = True
        detail[c] = "ok"

    for t in inner:
        for eps in "01":
            if not e.z[t + eps].startswith(e.z[t]):
                fail(1, f"cylinder at {t + eps!r} does not refine {t!r}")
    for t in nodes:
        st = _s_of(e, t)
        if not from_q(st).starts_with(e.z[t]):
            fail(2, f"chosen point at {t!r} is outside its cylinder")
        if not h.member(st):
            fail(2, f"chosen point at {t!r} is not in H")
        if len(e.z[t]) < len(t):
            fail(3, f"cylinder word at {t!r} is shorter than the node")
    for t in inner:
        z0, z1 = e.z[t + "0"], e.z[t + "1"]
        if len(z0) != len(z1) or not lex_less(z0, z1):
            fail(4, f"sibling cylinders at {t!r} are not same-length ordered")
        if e.n[t + "0"] != e.n[t]:
            fail(5, f"0-child of {t!r} changed index")
    for t in inner:
        z1 = e.z[t + "1"]
        for idx in range(len(t) + 1):
            if alpha(idx).starts_with(z1):
                fail(6, f"enumeration point {idx} meets the 1-side cylinder at {t!r}")
    qdom = q_words_upto(e.depth)
    for i, a in enumerate(qdom):
        for b in qdom[i + 1:]:
            if not len(e.s[a]) < len(e.s[b]):
                fail(7, f"name lengths not increasing at ({a!r}, {b!r})")
    for a in qdom:
        child = a + "1"
        if child in e.s:
            sa, sc = e.s[a], e.s[child]
            if not (sc.startswith(sa) and len(sa) < len(sc)):
                fail(8, f"name at {child!r} does not extend the name at {a!r}")
    for i, a in enumerate(qdom):
        for b in qdom[i + 1:]:
            if invariant_i(a, b) != invariant_i(e.s[a], e.s[b]):
                fail(9, f"invariant changes at ({a!r}, {b!r})")
    if passed[7] and passed[8]:
        counter = suff_check(SuffAssignment(e.depth, dict(e.s)))
        if counter is not None:
            fail(9, f"substitution checker counterexample {counter}")
    return ConditionReport(passed, detail)


def _s_of(e: EmbeddingScheme, t: str) -> str:
    if t in e.s:
        return e.s[t]
    return e.s[t.rstrip("0")]


def check_color_preservation(e: EmbeddingScheme) -> tuple[str, str] | None:
    """Compare colors of all pairs with the colors of their images.

    Rejects schemes whose name table breaks the growth or extension invariants
    (those are preconditions, not counterexamples).  Returns None on success,
    or the first offending q-word pair.
    """
    qdom = q_words_upto(e.depth)
    for i, a in enumerate(qdom):
        for b in qdom[i + 1:]:
            if not len(e.s[a]) < len(e.s[b]):
                raise ValueError(f"name table violates length growth at ({a!r}, {b!r})")
    for a in qdom:
        child = a + "1"
        if child in e.s and not (e.s[child].startswith(e.s[a]) and len(e.s[a]) < len(e.s[child])):
            raise ValueError(f"name table violates prefix extension at {child!r}")
    for i, a in enumerate(qdom):
        for b in qdom[i + 1:]:
            if color_c(from_q(a), from_q(b)) != color_c(from_q(e.s[a]), from_q(e.s[b])):
                return (a, b)
    return None


def attained_colors(e: EmbeddingScheme) -> set[int]:
    """Colors realized by the embedded image of the depth-bounded q-words."""
    qdom = q_words_upto(e.depth)
    return {color_c(from_q(e.s[a]), from_q(e.s[b]))
            for i, a in enumerate(qdom) for b in qdom[i + 1:]}
