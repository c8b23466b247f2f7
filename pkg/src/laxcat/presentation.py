"""Computads, free 2-categories, presented quotients, and the word problem.

1-cells are paths of generator edges; 2-cells are pasting terms: vertical
stacks of whiskered 2-generator layers.  Equality of 2-cells in a quotient
is decided by a bounded bidirectional search over relation rewrites, with
interchange of independent layers built into the state representation.

Paths inside terms are kept in *atom* form: composite-tagged edges (as
produced by fusion rules like ``(f'⊗B)(f⊗B) -> f'f⊗B``) are expanded into
their primitive factors, and identity-tagged edges are dropped.  This keeps
layer positions stable, so interchange is pure index bookkeeping.  The
fused spelling only appears when rendering or rewriting 1-cells with
`normalize_path`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

DEFAULT_BUDGET = 10_000

# internal cap on interchange rearrangements explored per term
_ARRANGEMENT_CAP = 20_000


class LaxcatError(Exception):
    """Base error for malformed input data."""


class MalformedComputad(LaxcatError):
    pass


class IllTypedTerm(LaxcatError):
    pass


class BadRuleSet(LaxcatError):
    pass


# ---------------------------------------------------------------------------
# paths


@dataclass(frozen=True, order=True)
class Path:
    """A 1-cell of a free 2-category: a start object and a list of edges.

    Edges are in diagram order: ``edges[0]`` is traversed first.  In the
    usual right-to-left notation for composites, ``Path('A', ('f', 'g'))``
    is the 1-cell ``g∘f``.
    """

    start: str
    edges: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return "·".join(self.edges) if self.edges else f"1_{self.start}"


@dataclass(frozen=True, order=True)
class Layer:
    """One whiskered 2-generator inside a pasting term.

    ``before`` and ``after`` are edge tuples (diagram order): the layer's
    input 1-cell is ``before + src(gen) + after``.  ``before`` is the
    classical *right* whisker (applied first), ``after`` the classical
    *left* whisker.
    """

    before: tuple[str, ...]
    gen: str
    after: tuple[str, ...]


@dataclass(frozen=True)
class PastingTerm:
    """A 2-cell expression: a source path and a stack of layers."""

    src: Path
    layers: tuple[Layer, ...] = ()

    def __len__(self) -> int:
        return len(self.layers)


@dataclass(frozen=True)
class OneGenerator:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class TwoGenerator:
    name: str
    src: Path
    tgt: Path


@dataclass(frozen=True)
class Computad:
    """Generating data for a free 2-category."""

    objects: tuple[str, ...]
    one_generators: tuple[OneGenerator, ...] = ()
    two_generators: tuple[TwoGenerator, ...] = ()

    def __post_init__(self):
        objs = set(self.objects)
        if len(objs) != len(self.objects):
            raise MalformedComputad("duplicate object names")
        seen = set()
        for g in self.one_generators:
            if g.name in seen:
                raise MalformedComputad(f"duplicate 1-generator {g.name!r}")
            seen.add(g.name)
            if g.src not in objs or g.tgt not in objs:
                raise MalformedComputad(f"dangling endpoint on {g.name!r}")
        edge = {g.name: g for g in self.one_generators}
        seen2 = set()
        for t in self.two_generators:
            if t.name in seen2 or t.name in seen:
                raise MalformedComputad(f"duplicate generator name {t.name!r}")
            seen2.add(t.name)
            for p in (t.src, t.tgt):
                _check_path(p, objs, edge)
            if _endpoints(t.src, edge) != _endpoints(t.tgt, edge):
                raise MalformedComputad(f"2-generator {t.name!r} not parallel")

    def edge_map(self) -> dict[str, OneGenerator]:
        return {g.name: g for g in self.one_generators}


def _check_path(p: Path, objs: set[str], edge: dict[str, OneGenerator]) -> None:
    if p.start not in objs:
        raise MalformedComputad(f"unknown object {p.start!r}")
    at = p.start
    for e in p.edges:
        if e not in edge:
            raise MalformedComputad(f"unknown edge {e!r} in path")
        if edge[e].src != at:
            raise MalformedComputad(f"path not composable at {e!r}")
        at = edge[e].tgt


def _endpoints(p: Path, edge: dict[str, OneGenerator]) -> tuple[str, str]:
    at = p.start
    for e in p.edges:
        at = edge[e].tgt
    return (p.start, at)


# ---------------------------------------------------------------------------
# rules, relations, verdicts


@dataclass(frozen=True)
class PathRule:
    """Oriented 1-cell rewrite ``lhs -> rhs`` (must shrink the measure)."""

    lhs: Path
    rhs: Path


@dataclass(frozen=True)
class Relation:
    """An unordered pair of parallel pasting terms, with a label."""

    name: str
    lhs: PastingTerm
    rhs: PastingTerm


@dataclass(frozen=True)
class Equal:
    trace: Optional[tuple] = None  # replayable steps, None if oracle-certified
    steps: int = 0
    certificate: str = "search"

    kind = "equal"

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class NotEqual:
    lhs_normal: Optional[PastingTerm] = None
    rhs_normal: Optional[PastingTerm] = None
    steps: int = 0
    certificate: str = "search"

    kind = "not_equal"

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Unknown:
    steps: int = 0

    kind = "unknown"

    def __bool__(self) -> bool:
        return False


EqualityVerdict = Equal | NotEqual | Unknown


def _measure(p: Path) -> tuple:
    return (len(p.edges), p.edges)


# ---------------------------------------------------------------------------
# presentation


@dataclass(frozen=True)
class Presentation:
    """A computad together with oriented 1-cell rules and 2-cell relations.

    ``invariant`` is an optional exact oracle: a function assigning to every
    well-formed term a value that is constant on 2-cell equivalence classes
    and separates distinct ones.  Built-in presentations (Mnd) register one
    so equality there never returns Unknown.
    """

    computad: Computad
    one_rules: tuple[PathRule, ...] = ()
    two_relations: tuple[Relation, ...] = ()
    invariant: Optional[Callable[[PastingTerm], object]] = field(
        default=None, compare=False
    )

    # -- construction -------------------------------------------------------

    def __post_init__(self):
        atoms = _build_atom_table(self.computad, self.one_rules)
        object.__setattr__(self, "_atoms", atoms)
        edge = self.computad.edge_map()
        object.__setattr__(self, "_edge", edge)
        src_atoms, tgt_atoms = {}, {}
        for t in self.computad.two_generators:
            src_atoms[t.name] = self.reduce_path(t.src).edges
            tgt_atoms[t.name] = self.reduce_path(t.tgt).edges
        object.__setattr__(self, "_gen_src", src_atoms)
        object.__setattr__(self, "_gen_tgt", tgt_atoms)
        object.__setattr__(self, "_gen_obj", {
            t.name: t.src.start for t in self.computad.two_generators})
        for rule in self.one_rules:
            if not _measure(rule.rhs) < _measure(rule.lhs):
                raise BadRuleSet(f"rule {rule.lhs} -> {rule.rhs} does not "
                                 "decrease the (length, name) measure")
            if _endpoints(rule.lhs, edge) != _endpoints(rule.rhs, edge):
                raise BadRuleSet("1-cell rule sides not parallel")
        views = []
        for idx, rel in enumerate(self.two_relations):
            lt, rt = self.reduce_term(rel.lhs), self.reduce_term(rel.rhs)
            if (lt.src != rt.src) or (self.term_target(lt) != self.term_target(rt)):
                raise IllTypedTerm(f"relation {rel.name!r} sides not parallel")
            if lt != rt:
                views.append((idx, "lr", lt, rt))
                views.append((idx, "rl", rt, lt))
        object.__setattr__(self, "_views", tuple(views))
        object.__setattr__(self, "_nf_memo", {})
        object.__setattr__(self, "_extr_memo", {})

    # -- 1-cells ------------------------------------------------------------

    def atoms_of(self, edge_name: str) -> tuple[str, ...]:
        return self._atoms[edge_name]

    def reduce_path(self, p: Path) -> Path:
        """Expand fused edges into primitive atoms and drop identity edges."""
        out: list[str] = []
        for e in p.edges:
            if e not in self._atoms:
                raise IllTypedTerm(f"unknown edge {e!r}")
            out.extend(self._atoms[e])
        return Path(p.start, tuple(out))

    def normalize_path(self, p: Path) -> Path:
        """Leftmost-innermost rewriting by `one_rules` to the fused normal form."""
        _check_path(p, set(self.computad.objects), self._edge)
        edges = list(p.edges)
        changed = True
        while changed:
            changed = False
            for i in range(len(edges)):
                for rule in self.one_rules:
                    k = len(rule.lhs.edges)
                    if tuple(edges[i:i + k]) == rule.lhs.edges:
                        new = edges[:i] + list(rule.rhs.edges) + edges[i + k:]
                        assert _measure(Path(p.start, tuple(new))) < _measure(
                            Path(p.start, tuple(edges)))
                        edges = new
                        changed = True
                        break
                if changed:
                    break
        return Path(p.start, tuple(edges))

    def paths_equal(self, p: Path, q: Path) -> bool:
        return self.reduce_path(p) == self.reduce_path(q)

    def path_target(self, p: Path) -> str:
        at = p.start
        for e in p.edges:
            at = self._edge[e].tgt
        return at

    # -- terms ---------------------------------------------------------------

    def identity_term(self, p: Path) -> PastingTerm:
        return PastingTerm(self.reduce_path(p), ())

    def generator_term(self, name: str) -> PastingTerm:
        g = next(t for t in self.computad.two_generators if t.name == name)
        return PastingTerm(self.reduce_path(g.src),
                           (Layer((), name, ()),))

    def reduce_term(self, t: PastingTerm) -> PastingTerm:
        """Atomize all whiskers and validate the layer chain."""
        src = self.reduce_path(t.src)
        cur = src.edges
        layers = []
        for lay in t.layers:
            if lay.gen not in self._gen_src:
                raise IllTypedTerm(f"unknown 2-generator {lay.gen!r}")
            b = self.reduce_path(Path(src.start, lay.before)).edges \
                if lay.before else ()
            a_start = src.start  # placeholder; only edges matter for reduce
            a = self.reduce_path(Path(a_start, lay.after)).edges \
                if lay.after else ()
            gsrc = self._gen_src[lay.gen]
            gtgt = self._gen_tgt[lay.gen]
            if b + gsrc + a != cur:
                raise IllTypedTerm(
                    f"layer {lay.gen!r} expects {b + gsrc + a}, path is {cur}")
            layers.append(Layer(b, lay.gen, a))
            cur = b + gtgt + a
        return PastingTerm(src, tuple(layers))

    def term_target(self, t: PastingTerm) -> Path:
        cur = self.reduce_path(t.src).edges
        for lay in t.layers:
            cur = lay.before + self._gen_tgt[lay.gen] + lay.after
        return Path(t.src.start, cur)

    def vcomp(self, *terms: PastingTerm) -> PastingTerm:
        """Vertical composite, first-applied first."""
        terms = [self.reduce_term(t) for t in terms]
        out = terms[0]
        for t in terms[1:]:
            if self.term_target(out) != t.src:
                raise IllTypedTerm("vertical composite boundary mismatch")
            out = PastingTerm(out.src, out.layers + t.layers)
        return out

    def whisker(self, before: Path | tuple, t: PastingTerm,
                after: Path | tuple) -> PastingTerm:
        """Whisker a term: `before` is traversed first (classical right)."""
        t = self.reduce_term(t)
        b = before.edges if isinstance(before, Path) else tuple(before)
        a = after.edges if isinstance(after, Path) else tuple(after)
        b = tuple(x for e in b for x in self._atoms[e])
        a = tuple(x for e in a for x in self._atoms[e])
        start = self._edge[b[0]].src if b else t.src.start
        layers = tuple(Layer(b + l.before, l.gen, l.after + a)
                       for l in t.layers)
        return PastingTerm(Path(start, b + t.src.edges + a), layers)

    # -- interchange ---------------------------------------------------------

    def _swap_adjacent(self, l1: Layer, l2: Layer) -> list[tuple[Layer, Layer]]:
        """All ways to commute adjacent layers `l1;l2` to `l2';l1'`."""
        s1 = len(l1.before)
        src1 = self._gen_src[l1.gen]
        tgt1 = self._gen_tgt[l1.gen]
        inp = l1.before + src1 + l1.after
        s2 = len(l2.before)
        src2 = self._gen_src[l2.gen]
        tgt2 = self._gen_tgt[l2.gen]
        e2 = s2 + len(src2)
        out = []
        if e2 <= s1:  # l2 acts inside l1.before
            n2 = Layer(l2.before, l2.gen, inp[e2:])
            n1 = Layer(l2.before + tgt2 + l1.before[e2:], l1.gen, l1.after)
            out.append((n2, n1))
        if s2 >= s1 + len(tgt1):  # l2 acts inside l1.after
            d1 = len(tgt1) - len(src1)
            pos = s2 - d1
            n2 = Layer(inp[:pos], l2.gen, inp[pos + len(src2):])
            k = s2 - (s1 + len(tgt1))
            n1 = Layer(l1.before, l1.gen,
                       l1.after[:k] + tgt2 + l1.after[k + len(src2):])
            out.append((n2, n1))
        return out

    def arrangements(self, t: PastingTerm,
                     cap: int = _ARRANGEMENT_CAP) -> Iterator[PastingTerm]:
        """All layer orderings of `t` reachable by interchange moves.

        Exponential in the number of independent layers; used by tests and
        small-term diagnostics only.  The engine itself uses extractions.
        """
        t = self.reduce_term(t)
        seen = {t.layers}
        queue = [t.layers]
        yield t
        while queue:
            cur = queue.pop()
            for i in range(len(cur) - 1):
                for n2, n1 in self._swap_adjacent(cur[i], cur[i + 1]):
                    cand = cur[:i] + (n2, n1) + cur[i + 2:]
                    if cand not in seen:
                        if len(seen) >= cap:
                            raise LaxcatError("interchange orbit too large")
                        seen.add(cand)
                        queue.append(cand)
                        yield PastingTerm(t.src, cand)

    def _extractions(self, layers: tuple[Layer, ...]
                     ) -> list[tuple[Layer, tuple[Layer, ...]]]:
        """All ways to commute one layer to the front.

        Returns de-duplicated ``(front_form, remaining_stack)`` pairs; the
        remaining stack keeps the other layers in order, whisker-adjusted
        for the extracted one.  Position ambiguities against degenerate
        (empty-boundary) layers contribute multiple variants.
        """
        hit = self._extr_memo.get(layers)
        if hit is not None:
            return hit
        out = []
        seen = set()
        for j, moving in enumerate(layers):

            def go(i: int, mv: Layer, adjusted: dict):
                if i < 0:
                    rest = tuple(adjusted[k] for k in range(j)) \
                        + layers[j + 1:]
                    key = (mv, rest)
                    if key not in seen:
                        seen.add(key)
                        out.append(key)
                    return
                for n2, n1 in self._swap_adjacent(layers[i], mv):
                    adjusted[i] = n1
                    go(i - 1, n2, adjusted)

            go(j - 1, moving, {})
        self._extr_memo[layers] = out
        return out

    @staticmethod
    def _layer_key(l: Layer) -> tuple:
        return (len(l.before), l.gen, l.before, l.after)

    def normalize_two_cell(self, t: PastingTerm) -> PastingTerm:
        """Canonical representative: the least interchange arrangement.

        Computed greedily: repeatedly extract the least available front
        layer.  Ties between equal front forms are resolved by recursing on
        each remainder and comparing, so the result is the lexicographic
        minimum of the whole orbit.
        """
        t = self.reduce_term(t)
        memo = self._nf_memo

        def norm(layers: tuple[Layer, ...]) -> tuple[Layer, ...]:
            if not layers:
                return ()
            hit = memo.get(layers)
            if hit is not None:
                return hit
            best_key, best = None, None
            for front, rest in self._extractions(layers):
                fkey = self._layer_key(front)
                if best_key is not None and fkey > best_key[0]:
                    continue
                sub = norm(rest)
                cand = (front,) + sub
                ckey = tuple(self._layer_key(l) for l in cand)
                if best_key is None or ckey < best_key:
                    best_key, best = ckey, cand
            memo[layers] = best
            return best

        return PastingTerm(t.src, norm(t.layers))

    # -- rewriting -----------------------------------------------------------

    def _whisker_layers(self, pat: PastingTerm, P: tuple, Q: tuple
                        ) -> tuple[Layer, ...]:
        return tuple(Layer(P + l.before, l.gen, l.after + Q)
                     for l in pat.layers)

    @staticmethod
    def _match_front(front: Layer, pl: Layer, P, Q) -> Optional[tuple]:
        """Whisker-match a front layer against a pattern layer."""
        if front.gen != pl.gen:
            return None
        if P is None:
            np = len(front.before) - len(pl.before)
            nq = len(front.after) - len(pl.after)
            if np < 0 or nq < 0:
                return None
            if front.before[np:] != pl.before or \
                    front.after[:len(pl.after)] != pl.after:
                return None
            return (front.before[:np], front.after[len(pl.after):])
        if front.before == P + pl.before and front.after == pl.after + Q:
            return (P, Q)
        return None

    def _find_occurrences(self, layers: tuple[Layer, ...], pat: PastingTerm,
                          limit: int = 0) -> list[tuple]:
        """Occurrences of whiskered `pat` as a contiguous block, up to
        interchange.  Returns ``(u, P, Q, w)`` decompositions."""
        pat_layers = pat.layers
        need = {}
        for l in pat_layers:
            need[l.gen] = need.get(l.gen, 0) + 1
        have = {}
        for l in layers:
            have[l.gen] = have.get(l.gen, 0) + 1
        if any(have.get(g, 0) < n for g, n in need.items()):
            return []
        results = []
        visited = set()

        def go(u, remaining, matched, P, Q):
            if limit and len(results) >= limit:
                return
            key = (remaining, matched, P, Q)
            if key in visited:
                return
            visited.add(key)
            if matched == len(pat_layers):
                results.append((u, P, Q, remaining))
                return
            for front, rest in self._extractions(remaining):
                m = self._match_front(front, pat_layers[matched], P, Q)
                if m is not None:
                    go(u, rest, matched + 1, m[0], m[1])
                if matched == 0:
                    go(u + (front,), rest, 0, None, None)

        go((), tuple(layers), 0, None, None)
        return results

    def _insertion_points(self, src: Path, layers: tuple[Layer, ...]
                          ) -> list[tuple]:
        """All ``(u, path_at_cut, w)`` vertical cut positions."""
        results = []
        visited = set()

        def path_after(stack):
            cur = src.edges
            for lay in stack:
                cur = lay.before + self._gen_tgt[lay.gen] + lay.after
            return cur

        def go(u, remaining):
            if remaining in visited:
                return
            visited.add(remaining)
            results.append((u, path_after(u), remaining))
            for front, rest in self._extractions(remaining):
                go(u + (front,), rest)

        go((), tuple(layers))
        return results

    def rewrite_steps(self, t: PastingTerm) -> Iterator[tuple[PastingTerm, tuple]]:
        """One-step relation rewrites of `t`, up to interchange.

        Yields ``(result, step)`` where ``step = (rel_idx, direction, u, P,
        Q, w)`` records the decomposition used, enough to replay the move.
        """
        t = self.reduce_term(t)
        cuts = None
        for view in self._views:
            idx, d, pat, rep = view
            if pat.layers:
                for (u, P, Q, w) in self._find_occurrences(t.layers, pat):
                    new_layers = u + self._whisker_layers(rep, P, Q) + w
                    yield PastingTerm(t.src, new_layers), \
                        (idx, d, u, P, Q, w)
            else:
                y = pat.src.edges
                if cuts is None:
                    cuts = self._insertion_points(t.src, t.layers)
                for (u, here, w) in cuts:
                    for cut in range(len(here) - len(y) + 1):
                        if here[cut:cut + len(y)] != y:
                            continue
                        P, Q = here[:cut], here[cut + len(y):]
                        new_layers = u + self._whisker_layers(rep, P, Q) + w
                        yield PastingTerm(t.src, new_layers), \
                            (idx, d, u, P, Q, w)

    def replay_step(self, t: PastingTerm, step: tuple) -> PastingTerm:
        """Re-apply a recorded rewrite step; used to audit Equal traces."""
        idx, d, u, P, Q, w = step
        rel = self.two_relations[idx]
        lhs, rhs = self.reduce_term(rel.lhs), self.reduce_term(rel.rhs)
        pat, rep = (lhs, rhs) if d == "lr" else (rhs, lhs)
        old = PastingTerm(t.src, u + self._whisker_layers(pat, P, Q) + w)
        if self.normalize_two_cell(old) != self.normalize_two_cell(t):
            raise LaxcatError("trace step does not match term")
        return PastingTerm(t.src, u + self._whisker_layers(rep, P, Q) + w)

    def presimplify(self, t: PastingTerm) -> PastingTerm:
        """Greedily apply size-reducing rewrites; stays in the 2-cell class."""

        def size(x: PastingTerm) -> tuple:
            return (len(x.layers),
                    sum(len(l.before) + len(l.after) for l in x.layers))

        cur = self.normalize_two_cell(t)
        improved = True
        while improved:
            improved = False
            for cand, _ in self.rewrite_steps(cur):
                if size(cand) < size(cur):
                    cur = self.normalize_two_cell(cand)
                    improved = True
                    break
        return cur

    def two_cells_equal(self, a: PastingTerm, b: PastingTerm,
                        budget: int = DEFAULT_BUDGET) -> EqualityVerdict:
        """Bounded bidirectional closure of the relation set.

        Both sides are first simplified greedily (size-reducing rewrites
        stay in the 2-cell class), then searched towards each other.
        """
        a = self.reduce_term(a)
        b = self.reduce_term(b)
        if a.src != b.src or self.term_target(a) != self.term_target(b):
            raise IllTypedTerm("two_cells_equal: terms not parallel")
        if self.invariant is not None:
            ia, ib = self.invariant(a), self.invariant(b)
            if ia == ib:
                return Equal(trace=None, steps=0, certificate="oracle")
            return NotEqual(self.normalize_two_cell(a),
                            self.normalize_two_cell(b),
                            steps=0, certificate="oracle")
        na, nb = self.normalize_two_cell(a), self.normalize_two_cell(b)
        if na == nb:
            return Equal(trace=((), ()), steps=0)
        if self.two_relations and (len(a.layers) > 3 or len(b.layers) > 3):
            sa, sb = self.presimplify(a), self.presimplify(b)
            if sa == sb:
                return Equal(trace=None, steps=0, certificate="presimplify")
            if sa != na or sb != nb:
                inner = self.two_cells_equal(sa, sb, budget)
                if isinstance(inner, Equal):
                    return Equal(trace=None, steps=inner.steps,
                                 certificate="presimplify+search")
                if isinstance(inner, Unknown):
                    return inner
                # a negative on simplified forms is sound: they are in
                # the same classes as the originals
                return NotEqual(na, nb, steps=inner.steps,
                                certificate=inner.certificate)
        # parent maps: state -> (prev_state, step, side)
        sides = [
            {na: None},  # forward
            {nb: None},  # backward
        ]
        frontiers = [[na], [nb]]
        steps = 0
        exhausted = [False, False]
        while steps < budget:
            side = 0 if (len(frontiers[0]) <= len(frontiers[1])
                         and not exhausted[0]) else 1
            if exhausted[side]:
                side = 1 - side
            if exhausted[side]:
                return NotEqual(na, nb, steps=steps)
            new_frontier = []
            for state in frontiers[side]:
                if steps >= budget:
                    break
                for cand, step in self.rewrite_steps(state):
                    steps += 1
                    nf = self.normalize_two_cell(cand)
                    if nf in sides[side]:
                        if steps >= budget:
                            break
                        continue
                    sides[side][nf] = (state, step)
                    new_frontier.append(nf)
                    if nf in sides[1 - side]:
                        trace = self._stitch(sides, nf)
                        return Equal(trace=trace, steps=steps)
                    if steps >= budget:
                        break
            frontiers[side] = new_frontier
            if not new_frontier:
                exhausted[side] = True
                if exhausted[0] and exhausted[1]:
                    return NotEqual(na, nb, steps=steps)
        return Unknown(steps=steps)

    def _stitch(self, sides, meet) -> tuple:
        """Trace format: (fwd_steps, bwd_steps).

        Replaying fwd_steps from `a` and bwd_steps from `b` reaches the
        same normal form (the meeting point of the two searches).
        """
        out = []
        for table in sides:
            steps = []
            cur = meet
            while table.get(cur) is not None:
                prev, step = table[cur]
                steps.append(step)
                cur = prev
            steps.reverse()
            out.append(tuple(steps))
        return tuple(out)


# ---------------------------------------------------------------------------
# atomization of 1-cell rules


def _build_atom_table(computad: Computad,
                      rules: Sequence[PathRule]) -> dict[str, tuple[str, ...]]:
    """Primitive-factor decomposition of every edge.

    Supported rule shapes when 2-cell reasoning is wanted: identity
    collapse ``[e] -> []`` and fusion ``[e1, e2] -> [e3]``.  Other
    measure-decreasing rules are allowed but make the presentation
    1-cell-only (terms over it are rejected when whiskers disagree).
    """
    names = [g.name for g in computad.one_generators]
    expand: dict[str, tuple[str, ...] | None] = {n: None for n in names}
    deps: dict[str, tuple] = {}
    for r in rules:
        if len(r.lhs.edges) == 1 and not r.rhs.edges:
            deps[r.lhs.edges[0]] = ()
        elif len(r.lhs.edges) == 2 and len(r.rhs.edges) == 1:
            # a later consistency audit catches conflicting spellings
            deps.setdefault(r.rhs.edges[0], r.lhs.edges)
        # other shapes affect only normalize_path
    produced = set(deps)

    def resolve(n: str, stack: tuple = ()) -> tuple[str, ...]:
        if expand[n] is not None:
            return expand[n]
        if n in stack:
            raise BadRuleSet(f"cyclic fusion rules at {n!r}")
        if n not in produced:
            expand[n] = (n,)
            return expand[n]
        parts = deps[n]
        out: list[str] = []
        for p in parts:
            out.extend(resolve(p, stack + (n,)))
        expand[n] = tuple(out)
        return expand[n]

    table = {n: resolve(n) for n in names}
    # audit: every fusion rule must be consistent with the table
    for r in rules:
        if len(r.lhs.edges) == 2 and len(r.rhs.edges) == 1:
            lhs_atoms = table[r.lhs.edges[0]] + table[r.lhs.edges[1]]
            if lhs_atoms != table[r.rhs.edges[0]]:
                raise BadRuleSet(
                    f"fusion rule {r.lhs} -> {r.rhs} is inconsistent with "
                    "the primitive decomposition of its edges")
    return table


# ---------------------------------------------------------------------------
# module-level operations (the spec surface)


def free_two_category(c: Computad) -> Presentation:
    """The free 2-category on a computad: no rules, no relations."""
    return Presentation(computad=c)


def normalize_path(p: Presentation, x: Path) -> Path:
    return p.normalize_path(x)


def normalize_two_cell(p: Presentation, t: PastingTerm) -> PastingTerm:
    return p.normalize_two_cell(p.reduce_term(t))


def two_cells_equal(p: Presentation, a: PastingTerm, b: PastingTerm,
                    budget: int = DEFAULT_BUDGET) -> EqualityVerdict:
    return p.two_cells_equal(a, b, budget)


def verify_trace(p: Presentation, a: PastingTerm, b: PastingTerm,
                 trace: tuple) -> bool:
    """Replay an Equal witness: both replays must land on one normal form."""
    fwd, bwd = trace
    cur = p.reduce_term(a)
    for step in fwd:
        cur = p.replay_step(cur, step)
    down = p.reduce_term(b)
    for step in bwd:
        down = p.replay_step(down, step)
    return p.normalize_two_cell(cur) == p.normalize_two_cell(down)


@dataclass(frozen=True)
class GeneratorMap:
    """Images of a presentation's generators in a target host.

    ``objects``:   object -> target object
    ``one_cells``: 1-generator name -> target 1-cell
    ``two_cells``: 2-generator name -> target 2-cell
    """

    objects: dict
    one_cells: dict
    two_cells: dict

    def path_image(self, host, p: Path):
        cur = host.identity_one(self.objects[p.start])
        for e in p.edges:
            cur = host.comp1(cur, self.one_cells[e])
        return cur

    def term_image(self, host, pres: Presentation, t: PastingTerm):
        t = pres.reduce_term(t)
        cur2 = host.identity_two(self.path_image(host, t.src))
        at = t.src.start
        for lay in t.layers:
            before = self.path_image(host, Path(at, lay.before))
            gsrc = pres._gen_obj[lay.gen]
            mid_tgt = pres.path_target(Path(gsrc, pres._gen_tgt[lay.gen]))
            after = self.path_image(
                host, Path(mid_tgt, lay.after))
            cell = host.whisker(before, self.two_cells[lay.gen], after)
            cur2 = host.vcomp(cur2, cell)
        return cur2


@dataclass
class FunctorReport:
    """Per-relation verdicts for a generator assignment."""

    items: list  # (label, verdict)

    @property
    def ok(self) -> bool:
        return all(bool(v) for _, v in self.items)

    @property
    def certain(self) -> bool:
        return all(not isinstance(v, Unknown) for _, v in self.items)

    def failures(self) -> list:
        return [(n, v) for n, v in self.items if not bool(v)]


def check_presented_functor(src: Presentation, dst_host, gmap: GeneratorMap,
                            budget: int = DEFAULT_BUDGET) -> FunctorReport:
    """Verify every relation (and 1-cell rule) of `src` lands in Equal."""
    items = []
    for rule in src.one_rules:
        li = gmap.path_image(dst_host, rule.lhs)
        ri = gmap.path_image(dst_host, rule.rhs)
        ok = dst_host.one_cells_equal(li, ri)
        items.append((f"1-rule {rule.lhs}->{rule.rhs}",
                      Equal(trace=None, certificate="1-cell")
                      if ok else NotEqual()))
    for rel in src.two_relations:
        li = gmap.term_image(dst_host, src, rel.lhs)
        ri = gmap.term_image(dst_host, src, rel.rhs)
        items.append((rel.name, dst_host.eq2(li, ri, budget=budget)))
    return FunctorReport(items=items)
