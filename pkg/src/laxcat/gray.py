"""The lax Gray tensor product of presented 2-categories.

Generators are tagged pairs: a 1-cell of the left factor against an object
of the right (written ``f⊗B``), an object against a 1-cell (``A⊗g``), and
one swapping 2-cell ``γ[f;g]`` per pair of nonidentity 1-cells.  The
1-cell relations (identity collapse and fusion) are oriented rewrite
rules; the 2-cell relation families are instantiated over the generator
tuples within a configurable bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .hosts import PresentedHost, ProductHost
from .presentation import (
    Computad,
    DEFAULT_BUDGET,
    Equal,
    GeneratorMap,
    FunctorReport,
    LaxcatError,
    Layer,
    NotEqual,
    OneGenerator,
    PastingTerm,
    Path,
    PathRule,
    Presentation,
    Relation,
    TwoGenerator,
    check_presented_functor,
)

DEFAULT_CELL_BOUND = 4


def one_cells_of(p: Presentation, bound: int) -> list[Path]:
    """All reduced paths of length ≤ bound, identities included."""
    out = []
    edges_from = {}
    for g in p.computad.one_generators:
        if p.atoms_of(g.name) == (g.name,):
            edges_from.setdefault(g.src, []).append(g)
    for obj in p.computad.objects:
        frontier = [Path(obj, ())]
        out.append(frontier[0])
        for _ in range(bound):
            nxt = []
            for q in frontier:
                at = p.path_target(q)
                for g in edges_from.get(at, []):
                    nxt.append(Path(obj, q.edges + (g.name,)))
            out.extend(nxt)
            frontier = nxt
    return out


def _pname(p: Path) -> str:
    return "·".join(p.edges) if p.edges else f"1_{p.start}"


@dataclass
class GrayTensor:
    left: Presentation
    right: Presentation
    result: Presentation
    bound: int
    tags: dict            # edge name -> ("L", f Path, B) | ("R", A, g Path)
    left_edge: dict       # (f.edges, f.start, B) -> edge name
    right_edge: dict      # (A, g.edges, g.start) -> edge name
    swap: dict            # (f.edges, f.start, g.edges, g.start) -> gen name
    lcell_gen: dict       # (a 2-generator name, B) -> tensor 2-gen name
    rcell_gen: dict       # (A, b 2-generator name) -> tensor 2-gen name

    def obj(self, A: str, B: str) -> str:
        return f"{A}⊗{B}"

    # -- tagged path builders -------------------------------------------------

    def lpath(self, f: Path, B: str) -> tuple[str, ...]:
        """Atoms of f⊗B (in the tensor), for a reduced left path f."""
        return tuple(self.left_edge[((e,), s, B)]
                     for e, s in _edge_walk(self.left, f))

    def rpath(self, A: str, g: Path) -> tuple[str, ...]:
        return tuple(self.right_edge[(A, (e,), s)]
                     for e, s in _edge_walk(self.right, g))

    def swap_gen(self, f: Path, g: Path) -> str:
        return self.swap[(f.edges, f.start, g.edges, g.start)]

    def swap_term(self, f: Path, g: Path) -> PastingTerm:
        """γ_{f,g} as a term; identities degenerate to identity 2-cells."""
        p = self.result
        f = self.left.reduce_path(f)
        g = self.right.reduce_path(g)
        A = f.start
        B2 = self.right.path_target(g)
        if not f.edges or not g.edges:
            src = Path(self.obj(A, g.start),
                       self.rpath(A, g) + self.lpath(f, B2))
            return p.identity_term(src)
        return p.generator_term(self.swap_gen(f, g))

    def swap_composite(self, f: Path, g: Path) -> PastingTerm:
        """γ_{f,g} pasted from atomic swaps (same boundary as swap_term)."""
        f = self.left.reduce_path(f)
        g = self.right.reduce_path(g)
        B2 = self.right.path_target(g)
        src = Path(self.obj(f.start, g.start),
                   self.rpath(f.start, g) + self.lpath(f, B2))
        return hat_gamma(self, src)

    def swap_cell(self, f: Path, g: Path) -> PastingTerm:
        """The generator when tagged, otherwise the atomic composite."""
        f = self.left.reduce_path(f)
        g = self.right.reduce_path(g)
        if not f.edges or not g.edges:
            return self.swap_term(f, g)
        if (f.edges, f.start, g.edges, g.start) in self.swap:
            return self.swap_term(f, g)
        return self.swap_composite(f, g)

    def map_left_term(self, t: PastingTerm, B: str) -> PastingTerm:
        """A 2-cell of the left factor, whiskered into the tensor (−⊗B)."""
        a = self.left
        t = a.reduce_term(t)
        layers = []
        for lay in t.layers:
            layers.append(Layer(
                tuple(self.left_edge[((e,), s, B)]
                      for e, s in _edge_walk(a, Path(t.src.start, lay.before))),
                self.lcell_gen[(lay.gen, B)],
                tuple(self.left_edge[((e,), s, B)]
                      for e, s in _edge_walk(a, Path("?", lay.after)))))
        src = Path(self.obj(t.src.start, B), self.lpath(t.src, B))
        return PastingTerm(src, tuple(layers))

    def map_right_term(self, A: str, t: PastingTerm) -> PastingTerm:
        b = self.right
        t = b.reduce_term(t)
        layers = []
        for lay in t.layers:
            layers.append(Layer(
                tuple(self.right_edge[(A, (e,), s)]
                      for e, s in _edge_walk(b, Path(t.src.start, lay.before))),
                self.rcell_gen[(A, lay.gen)],
                tuple(self.right_edge[(A, (e,), s)]
                      for e, s in _edge_walk(b, Path("?", lay.after)))))
        src = Path(self.obj(A, t.src.start), self.rpath(A, t.src))
        return PastingTerm(src, tuple(layers))


def _edge_walk(p: Presentation, q: Path):
    """Pairs (atom edge, its source object) along a path given by edges."""
    out = []
    at = None
    for e in q.edges:
        g = p._edge[e]
        for atom in p.atoms_of(e):
            ga = p._edge[atom]
            out.append((atom, ga.src))
    return out


def gray_tensor(a: Presentation, b: Presentation,
                bound: int = DEFAULT_CELL_BOUND, lbound: int = None,
                rbound: int = None, lcell_filter=None, rcell_filter=None,
                swap_filter=None) -> GrayTensor:
    """Construct the lax Gray tensor of two presentations.

    1-cells of the factors are materialized up to `lbound`/`rbound`
    (default `bound`); the optional filters further restrict the tagged
    cells and the swap generators.  The result is the bounded part of the
    tensor; composite swaps outside the generator set remain available as
    pastings of atomic ones through `swap_composite`.
    """
    lbound = bound if lbound is None else lbound
    rbound = bound if rbound is None else rbound
    lcells = one_cells_of(a, lbound)
    rcells = one_cells_of(b, rbound)
    if lcell_filter is not None:
        lcells = [p for p in lcells if not p.edges or lcell_filter(p)]
    if rcell_filter is not None:
        rcells = [p for p in rcells if not p.edges or rcell_filter(p)]
    aobj, bobj = a.computad.objects, b.computad.objects
    objects = tuple(f"{A}⊗{B}" for A in aobj for B in bobj)

    one_gens, tags = [], {}
    left_edge, right_edge = {}, {}
    for f in lcells:
        fe = a.path_target(f)
        for B in bobj:
            nm = f"{_pname(f)}⊗{B}"
            one_gens.append(OneGenerator(nm, f"{f.start}⊗{B}", f"{fe}⊗{B}"))
            tags[nm] = ("L", f, B)
            left_edge[(f.edges, f.start, B)] = nm
    for g in rcells:
        ge = b.path_target(g)
        for A in aobj:
            nm = f"{A}⊗{_pname(g)}"
            one_gens.append(OneGenerator(nm, f"{A}⊗{g.start}", f"{A}⊗{ge}"))
            tags[nm] = ("R", A, g)
            right_edge[(A, g.edges, g.start)] = nm

    rules = []
    for f in lcells:
        for B in bobj:
            if not f.edges:
                rules.append(PathRule(
                    Path(f"{f.start}⊗{B}", (left_edge[(f.edges, f.start, B)],)),
                    Path(f"{f.start}⊗{B}")))
    for g in rcells:
        for A in aobj:
            if not g.edges:
                rules.append(PathRule(
                    Path(f"{A}⊗{g.start}", (right_edge[(A, g.edges, g.start)],)),
                    Path(f"{A}⊗{g.start}")))
    for f in lcells:
        for f2 in lcells:
            if not f.edges or not f2.edges:
                continue
            if a.path_target(f) != f2.start:
                continue
            comp = a.reduce_path(Path(f.start, f.edges + f2.edges))
            if len(comp.edges) > lbound or \
                    (comp.edges, comp.start, bobj[0]) not in left_edge:
                continue
            for B in bobj:
                rules.append(PathRule(
                    Path(f"{f.start}⊗{B}",
                         (left_edge[(f.edges, f.start, B)],
                          left_edge[(f2.edges, f2.start, B)])),
                    Path(f"{f.start}⊗{B}",
                         (left_edge[(comp.edges, comp.start, B)],))))
    for g in rcells:
        for g2 in rcells:
            if not g.edges or not g2.edges:
                continue
            if b.path_target(g) != g2.start:
                continue
            comp = b.reduce_path(Path(g.start, g.edges + g2.edges))
            if len(comp.edges) > rbound or \
                    (aobj[0], comp.edges, comp.start) not in right_edge:
                continue
            for A in aobj:
                rules.append(PathRule(
                    Path(f"{A}⊗{g.start}",
                         (right_edge[(A, g.edges, g.start)],
                          right_edge[(A, g2.edges, g2.start)])),
                    Path(f"{A}⊗{g.start}",
                         (right_edge[(A, comp.edges, comp.start)],))))

    cell_set_a = {(p.start, p.edges) for p in lcells}
    cell_set_b = {(p.start, p.edges) for p in rcells}

    def a_in_bound(t: TwoGenerator) -> bool:
        s, u = a.reduce_path(t.src), a.reduce_path(t.tgt)
        return (s.start, s.edges) in cell_set_a and \
            (u.start, u.edges) in cell_set_a

    def b_in_bound(t: TwoGenerator) -> bool:
        s, u = b.reduce_path(t.src), b.reduce_path(t.tgt)
        return (s.start, s.edges) in cell_set_b and \
            (u.start, u.edges) in cell_set_b

    # factor 2-generators with out-of-bound boundaries are left out; the
    # tensor is a bounded approximation of the full quotient
    two_gens, lcg, rcg, swap = [], {}, {}, {}
    for t in a.computad.two_generators:
        if not a_in_bound(t):
            continue
        for B in bobj:
            nm = f"{t.name}⊗{B}"
            lcg[(t.name, B)] = nm
            src = Path(f"{t.src.start}⊗{B}",
                       (left_edge[(a.reduce_path(t.src).edges,
                                   t.src.start, B)],)
                       if a.reduce_path(t.src).edges else ())
            tgt = Path(f"{t.tgt.start}⊗{B}",
                       (left_edge[(a.reduce_path(t.tgt).edges,
                                   t.tgt.start, B)],)
                       if a.reduce_path(t.tgt).edges else ())
            two_gens.append(TwoGenerator(nm, src, tgt))
    for t in b.computad.two_generators:
        if not b_in_bound(t):
            continue
        for A in aobj:
            nm = f"{A}⊗{t.name}"
            rcg[(A, t.name)] = nm
            src = Path(f"{A}⊗{t.src.start}",
                       (right_edge[(A, b.reduce_path(t.src).edges,
                                    t.src.start)],)
                       if b.reduce_path(t.src).edges else ())
            tgt = Path(f"{A}⊗{t.tgt.start}",
                       (right_edge[(A, b.reduce_path(t.tgt).edges,
                                    t.tgt.start)],)
                       if b.reduce_path(t.tgt).edges else ())
            two_gens.append(TwoGenerator(nm, src, tgt))
    for f in lcells:
        if not f.edges:
            continue
        A, A2 = f.start, a.path_target(f)
        for g in rcells:
            if not g.edges:
                continue
            atomic = len(f.edges) == 1 and len(g.edges) == 1
            if swap_filter is not None and not atomic \
                    and not swap_filter(f, g):
                continue
            B, B2 = g.start, b.path_target(g)
            nm = f"γ[{_pname(f)};{_pname(g)}]"
            swap[(f.edges, f.start, g.edges, g.start)] = nm
            src = Path(f"{A}⊗{B}",
                       (right_edge[(A, g.edges, g.start)],
                        left_edge[(f.edges, f.start, B2)]))
            tgt = Path(f"{A}⊗{B}",
                       (left_edge[(f.edges, f.start, B)],
                        right_edge[(A2, g.edges, g.start)]))
            two_gens.append(TwoGenerator(nm, src, tgt))

    computad = Computad(objects, tuple(one_gens), tuple(two_gens))
    pres = Presentation(computad=computad, one_rules=tuple(rules))
    gt = GrayTensor(left=a, right=b, result=pres, bound=bound, tags=tags,
                    left_edge=left_edge, right_edge=right_edge, swap=swap,
                    lcell_gen=lcg, rcell_gen=rcg)

    relations = []
    # factor relations, whiskered by objects of the other side; relations
    # mentioning out-of-bound generators are skipped with them
    for rel in a.two_relations:
        for B in bobj:
            try:
                relations.append(Relation(
                    f"{rel.name}⊗{B}",
                    gt.map_left_term(rel.lhs, B),
                    gt.map_left_term(rel.rhs, B)))
            except KeyError:
                pass
    for rel in b.two_relations:
        for A in aobj:
            try:
                relations.append(Relation(
                    f"{A}⊗{rel.name}",
                    gt.map_right_term(A, rel.lhs),
                    gt.map_right_term(A, rel.rhs)))
            except KeyError:
                pass
    # swap naturality against the factor 2-generators; instances with a
    # composite whisker follow from these and the swap-composition family
    for t in a.computad.two_generators:
        if not a_in_bound(t):
            continue
        psrc = a.reduce_path(t.src)
        ptgt = a.reduce_path(t.tgt)
        A, A2 = psrc.start, a.path_target(psrc)
        for g in rcells:
            if len(g.edges) != 1:
                continue
            B, B2 = g.start, b.path_target(g)
            lhs = pres.vcomp(
                pres.whisker(Path(f"{A}⊗{B}", gt.rpath(A, g)),
                             gt.map_left_term(a.generator_term(t.name), B2),
                             Path(f"{A2}⊗{B2}")),
                pres.whisker(Path(f"{A}⊗{B}"), gt.swap_cell(ptgt, g),
                             Path(f"{A2}⊗{B2}")))
            rhs = pres.vcomp(
                pres.whisker(Path(f"{A}⊗{B}"), gt.swap_cell(psrc, g),
                             Path(f"{A2}⊗{B2}")),
                pres.whisker(Path(f"{A}⊗{B}"),
                             gt.map_left_term(a.generator_term(t.name), B),
                             Path(f"{A2}⊗{B}", gt.rpath(A2, g))))
            relations.append(Relation(
                f"nat[{t.name};{_pname(g)}]", lhs, rhs))
    for t in b.computad.two_generators:
        if not b_in_bound(t):
            continue
        psrc = b.reduce_path(t.src)
        ptgt = b.reduce_path(t.tgt)
        B, B2 = psrc.start, b.path_target(psrc)
        for f in lcells:
            if len(f.edges) != 1:
                continue
            A, A2 = f.start, a.path_target(f)
            lhs = pres.vcomp(
                pres.whisker(Path(f"{A}⊗{B}"),
                             gt.map_right_term(A, b.generator_term(t.name)),
                             Path(f"{A}⊗{B2}", gt.lpath(f, B2))),
                pres.whisker(Path(f"{A}⊗{B}"), gt.swap_cell(f, ptgt),
                             Path(f"{A2}⊗{B2}")))
            rhs = pres.vcomp(
                pres.whisker(Path(f"{A}⊗{B}"), gt.swap_cell(f, psrc),
                             Path(f"{A2}⊗{B2}")),
                pres.whisker(Path(f"{A}⊗{B}", gt.lpath(f, B)),
                             gt.map_right_term(A2, b.generator_term(t.name)),
                             Path(f"{A2}⊗{B2}")))
            relations.append(Relation(
                f"nat[{_pname(f)};{t.name}]", lhs, rhs))
    # swap composition, both sides
    for f in lcells:
        for f2 in lcells:
            if not f.edges or not f2.edges or a.path_target(f) != f2.start:
                continue
            comp = a.reduce_path(Path(f.start, f.edges + f2.edges))
            if len(comp.edges) > lbound:
                continue
            for g in rcells:
                if not g.edges:
                    continue
                A, Amid, A2 = f.start, f2.start, a.path_target(f2)
                B, B2 = g.start, b.path_target(g)
                try:
                    lhs = gt.swap_term(comp, g)
                    rhs = pres.vcomp(
                        pres.whisker(Path(f"{A}⊗{B}"), gt.swap_term(f, g),
                                     Path(f"{Amid}⊗{B2}", gt.lpath(f2, B2))),
                        pres.whisker(Path(f"{A}⊗{B}", gt.lpath(f, B)),
                                     gt.swap_term(f2, g), Path(f"{A2}⊗{B2}")))
                except KeyError:
                    continue
                relations.append(Relation(
                    f"comp[{_pname(f)}·{_pname(f2)};{_pname(g)}]", lhs, rhs))
    for g in rcells:
        for g2 in rcells:
            if not g.edges or not g2.edges or b.path_target(g) != g2.start:
                continue
            comp = b.reduce_path(Path(g.start, g.edges + g2.edges))
            if len(comp.edges) > rbound:
                continue
            for f in lcells:
                if not f.edges:
                    continue
                A, A2 = f.start, a.path_target(f)
                B, Bmid, B2 = g.start, g2.start, b.path_target(g2)
                try:
                    lhs = gt.swap_term(f, comp)
                    rhs = pres.vcomp(
                        pres.whisker(Path(f"{A}⊗{B}", gt.rpath(A, g)),
                                     gt.swap_term(f, g2), Path(f"{A2}⊗{B2}")),
                        pres.whisker(Path(f"{A}⊗{B}"), gt.swap_term(f, g),
                                     Path(f"{A2}⊗{B2}", gt.rpath(A2, g2))))
                except KeyError:
                    continue
                relations.append(Relation(
                    f"comp[{_pname(f)};{_pname(g)}·{_pname(g2)}]", lhs, rhs))

    pres2 = Presentation(computad=computad, one_rules=tuple(rules),
                         two_relations=tuple(relations))
    return GrayTensor(left=a, right=b, result=pres2, bound=bound, tags=tags,
                      left_edge=left_edge, right_edge=right_edge, swap=swap,
                      lcell_gen=lcg, rcell_gen=rcg)


# ---------------------------------------------------------------------------
# canonical swap composites


def hat_gamma(t: GrayTensor, h: Path) -> PastingTerm:
    """γ̂_h: h ⇒ (left part)(right part), composed of atomic swaps."""
    pres = t.result
    h = pres.reduce_path(h)
    layers = []
    cur = list(h.edges)
    while True:
        idx = None
        for i in range(len(cur) - 1):
            if t.tags[cur[i]][0] == "R" and t.tags[cur[i + 1]][0] == "L":
                idx = i
                break
        if idx is None:
            break
        _, A, g = t.tags[cur[idx]]
        _, f, B2 = t.tags[cur[idx + 1]]
        gen = t.swap_gen(f, g)
        layers.append(Layer(tuple(cur[:idx]), gen, tuple(cur[idx + 2:])))
        A2 = t.left.path_target(f)
        cur[idx] = t.left_edge[(f.edges, f.start, g.start)]
        cur[idx + 1] = t.right_edge[(A2, g.edges, g.start)]
    return PastingTerm(h, tuple(layers))


def tilde_gamma(t: GrayTensor, h: Path) -> PastingTerm:
    """γ̃_h: (right part)(left part) ⇒ h, composed of atomic swaps."""
    pres = t.result
    h = pres.reduce_path(h)
    # label instances, sort right-tags first preserving relative order
    labels = list(enumerate(h.edges))
    rsorted = ([(i, e) for i, e in labels if t.tags[e][0] == "R"]
               + [(i, e) for i, e in labels if t.tags[e][0] == "L"])
    # the sorted word lives at shifted objects; rebuild its edges
    cur = _relocate(t, rsorted, h.start)
    order = [i for i, _ in rsorted]
    target = list(range(len(labels)))
    layers = []
    while order != target:
        moved = False
        for i in range(len(order) - 1):
            if order[i] > order[i + 1]:
                e1, e2 = cur[i], cur[i + 1]
                if t.tags[e1][0] != "R" or t.tags[e2][0] != "L":
                    continue
                _, A, g = t.tags[e1]
                _, f, B2 = t.tags[e2]
                layers.append(Layer(tuple(cur[:i]), t.swap_gen(f, g),
                                    tuple(cur[i + 2:])))
                A2 = t.left.path_target(f)
                cur[i] = t.left_edge[(f.edges, f.start, g.start)]
                cur[i + 1] = t.right_edge[(A2, g.edges, g.start)]
                order[i], order[i + 1] = order[i + 1], order[i]
                moved = True
                break
        if not moved:
            raise LaxcatError("tilde_gamma: no sorting move available")
    src = Path(h.start, tuple(_relocate(t, rsorted, h.start)))
    return PastingTerm(src, tuple(layers))


def _relocate(t: GrayTensor, tagged: list, start: str) -> list[str]:
    """Re-tag a reordered atom word so endpoints chain correctly."""
    A, B = start.split("⊗")
    out = []
    for _, e in tagged:
        kind = t.tags[e]
        if kind[0] == "L":
            f = kind[1]
            out.append(t.left_edge[(f.edges, f.start, B)])
            A = t.left.path_target(f)
        else:
            g = kind[2]
            out.append(t.right_edge[(A, g.edges, g.start)])
            B = t.right.path_target(g)
    return out


# ---------------------------------------------------------------------------
# comparisons with the cartesian product


def rho_map(t: GrayTensor) -> GeneratorMap:
    """ρ: A⊗B -> A×B, collapsing the swaps."""
    a, b = t.left, t.right
    objects, one_cells, two_cells = {}, {}, {}
    for o in t.result.computad.objects:
        A, B = o.split("⊗")
        objects[o] = (A, B)
    for e, tag in t.tags.items():
        if tag[0] == "L":
            _, f, B = tag
            one_cells[e] = (f, Path(B))
        else:
            _, A, g = tag
            one_cells[e] = (Path(A), g)
    for (gen, B), nm in t.lcell_gen.items():
        term = a.generator_term(gen)
        tgt1 = a.path_target(a.reduce_term(term).src)
        two_cells[nm] = (term, b.identity_term(Path(B)))
    for (A, gen), nm in t.rcell_gen.items():
        term = b.generator_term(gen)
        two_cells[nm] = (a.identity_term(Path(A)), term)
    for (fe, fs, ge, gs), nm in t.swap.items():
        two_cells[nm] = (a.identity_term(Path(fs, fe)),
                         b.identity_term(Path(gs, ge)))
    return GeneratorMap(objects=objects, one_cells=one_cells,
                        two_cells=two_cells)


def product_host(t: GrayTensor) -> ProductHost:
    return ProductHost(PresentedHost(t.left), PresentedHost(t.right))


def check_rho(t: GrayTensor, budget: int = DEFAULT_BUDGET) -> FunctorReport:
    return check_presented_functor(t.result, product_host(t), rho_map(t),
                                   budget=budget)


def sigma_lax(t: GrayTensor):
    """σ_l: A×B ⇝ A⊗B with comparison cells given by swaps."""
    from .classifier import LaxFunctorData, ProductDomain, PresentationDomain

    dom = ProductDomain(PresentationDomain(t.left, t.bound),
                        PresentationDomain(t.right, t.bound))
    host = PresentedHost(t.result)
    ob_map = {(A, B): t.obj(A, B)
              for A in t.left.computad.objects
              for B in t.right.computad.objects}

    def img(fg):
        f, g = fg
        A2 = t.left.path_target(f)
        return Path(t.obj(f.start, g.start),
                    t.lpath(f, g.start) + t.rpath(A2, g))

    one_map, comp_cells, unit_cells = {}, {}, {}
    for fg in dom.one_cells():
        one_map[fg] = img(fg)
    for o, ob in ob_map.items():
        unit_cells[o] = host.identity_two(Path(ob))
    for fg in dom.one_cells():
        for fg2 in dom.one_cells():
            if dom.tgt(fg) != dom.src(fg2):
                continue
            if dom.comp(fg, fg2) not in one_map:
                continue
            f, g = fg
            f2, g2 = fg2
            A = f.start
            B = g.start
            A3 = t.left.path_target(f2)
            B3 = t.right.path_target(g2)
            cell = t.result.whisker(
                Path(t.obj(A, B), t.lpath(f, B)),
                t.swap_term(f2, g),
                Path(t.obj(A3, t.right.path_target(g)), t.rpath(A3, g2)))
            comp_cells[(fg, fg2)] = cell
    return LaxFunctorData(domain=dom, host=host, ob_map=ob_map,
                          one_map=one_map, comp_cells=comp_cells,
                          unit_cells=unit_cells)


def sigma_oplax(t: GrayTensor):
    """σ_op: A×B ⇝ A⊗B, oplax, with comparisons from γ̃."""
    from .classifier import (OplaxFunctorData, ProductDomain,
                             PresentationDomain)

    dom = ProductDomain(PresentationDomain(t.left, t.bound),
                        PresentationDomain(t.right, t.bound))
    host = PresentedHost(t.result)
    ob_map = {(A, B): t.obj(A, B)
              for A in t.left.computad.objects
              for B in t.right.computad.objects}

    def img(fg):
        f, g = fg
        B2 = t.right.path_target(g)
        return Path(t.obj(f.start, g.start),
                    t.rpath(f.start, g) + t.lpath(f, B2))

    one_map, comp_cells, unit_cells = {}, {}, {}
    for fg in dom.one_cells():
        one_map[fg] = img(fg)
    for o, ob in ob_map.items():
        unit_cells[o] = host.identity_two(Path(ob))
    for fg in dom.one_cells():
        for fg2 in dom.one_cells():
            if dom.tgt(fg) != dom.src(fg2) or dom.comp(fg, fg2) not in one_map:
                continue
            f, g = fg
            f2, g2 = fg2
            A = f.start
            B = g.start
            B2 = t.right.path_target(g)
            B3 = t.right.path_target(g2)
            A2 = t.left.path_target(f)
            cell = t.result.whisker(
                Path(t.obj(A, B), t.rpath(A, g)),
                t.swap_term(f, g2),
                Path(t.obj(A2, B3), t.lpath(f2, B3)))
            comp_cells[(fg, fg2)] = cell
    return OplaxFunctorData(domain=dom, host=host, ob_map=ob_map,
                            one_map=one_map, comp_cells=comp_cells,
                            unit_cells=unit_cells)


def check_rho_sigma_identity(t: GrayTensor) -> bool:
    """ρσ_l = Id and ρσ_op = Id as strict data on the product."""
    rm = rho_map(t)
    ph = product_host(t)
    sl = sigma_lax(t)
    so = sigma_oplax(t)
    for fg, path in sl.one_map.items():
        f, g = fg
        fi, gi = rm.path_image(ph, path)
        if not (t.left.paths_equal(fi, f) and t.right.paths_equal(gi, g)):
            return False
    for fg, path in so.one_map.items():
        f, g = fg
        fi, gi = rm.path_image(ph, path)
        if not (t.left.paths_equal(fi, f) and t.right.paths_equal(gi, g)):
            return False
    for cell in list(sl.comp_cells.values()) + list(so.comp_cells.values()):
        u, v = rm.term_image(ph, t.result, cell)
        lu = t.left.normalize_two_cell(u)
        rv = t.right.normalize_two_cell(v)
        if lu.layers or rv.layers:
            return False
    return True


@dataclass
class GrayAdjunctionReport:
    items: list

    @property
    def ok(self) -> bool:
        return all(bool(v) for _, v in self.items)

    @property
    def certain(self) -> bool:
        from .presentation import Unknown
        return all(not isinstance(v, Unknown) for _, v in self.items)


def gray_adjunction_check(t: GrayTensor, bound: int = 4,
                          budget: int = DEFAULT_BUDGET
                          ) -> GrayAdjunctionReport:
    """ρ ⊣ σ_l with unit γ̂ and identity counit, to the word-length bound."""
    pres = t.result
    host = PresentedHost(pres)
    rm = rho_map(t)
    ph = product_host(t)
    items = []
    cells = one_cells_of(pres, bound)
    # counit is the identity: ρσ_l = Id on the product
    items.append(("ρσ = Id",
                  Equal(trace=None, certificate="data")
                  if check_rho_sigma_identity(t) else NotEqual()))
    # γ̂ components at σ_l images are identities (second triangle)
    tri2 = all(not hat_gamma(t, p).layers
               for p in [Path(o) for o in pres.computad.objects]
               + [q for q in cells if _sorted_word(t, q)])
    items.append(("γ̂σ_l = id (triangle)",
                  Equal(trace=None, certificate="data") if tri2
                  else NotEqual()))
    # ργ̂ = id (first triangle)
    ok = True
    for h in cells:
        u, v = rm.term_image(ph, pres, hat_gamma(t, h))
        if t.left.normalize_two_cell(u).layers or \
                t.right.normalize_two_cell(v).layers:
            ok = False
    items.append(("ργ̂ = id (triangle)",
                  Equal(trace=None, certificate="data") if ok
                  else NotEqual()))
    # icon composition compatibility
    sl = sigma_lax(t)
    for h in cells:
        for k in cells:
            if pres.path_target(h) != k.start:
                continue
            hk = pres.reduce_path(Path(h.start, h.edges + k.edges))
            if len(hk.edges) > bound:
                continue
            lhs = pres.vcomp(
                pres.whisker(Path(h.start), hat_gamma(t, h),
                             Path(pres.path_target(h), k.edges)),
                pres.whisker(_sigma_rho_path(t, h), hat_gamma(t, k),
                             Path(pres.path_target(k))),
                _sigma_comp_cell(t, sl, h, k))
            rhs = hat_gamma(t, hk)
            v = pres.two_cells_equal(lhs, rhs, budget)
            items.append((f"icon comp at [{_pname(h)};{_pname(k)}]", v))
    # icon naturality against the swap generators
    for nm in t.swap.values():
        term = pres.generator_term(nm)
        src, tgt = term.src, pres.term_target(term)
        lhs = pres.vcomp(term, hat_gamma(t, tgt))
        rhs = pres.vcomp(hat_gamma(t, src),
                         _sigma_rho_image(t, sl, term))
        items.append((f"icon naturality at {nm}",
                      pres.two_cells_equal(lhs, rhs, budget)))
    return GrayAdjunctionReport(items=items)


def _sorted_word(t: GrayTensor, q: Path) -> bool:
    kinds = [t.tags[e][0] for e in q.edges]
    return kinds == sorted(kinds)


def _sigma_rho_path(t: GrayTensor, h: Path) -> Path:
    """(σ_l ρ)(h): the sorted spelling of h."""
    pres = t.result
    term = hat_gamma(t, h)
    return pres.term_target(term)


def _sigma_comp_cell(t: GrayTensor, sl, h: Path, k: Path) -> PastingTerm:
    """σ_l's comparison at (ρh, ρk), as a cell of the tensor."""
    rm = rho_map(t)
    ph = product_host(t)
    fh, gh = rm.path_image(ph, h)
    fk, gk = rm.path_image(ph, k)
    fh = t.left.reduce_path(fh)
    gh = t.right.reduce_path(gh)
    fk = t.left.reduce_path(fk)
    gk = t.right.reduce_path(gk)
    A = fh.start
    B = gh.start
    A3 = t.left.path_target(fk)
    B2 = t.right.path_target(gh)
    return t.result.whisker(
        Path(t.obj(A, B), t.lpath(fh, B)),
        t.swap_term(fk, gh),
        Path(t.obj(A3, B2), t.rpath(A3, gk)))


def _sigma_rho_image(t: GrayTensor, sl, term: PastingTerm) -> PastingTerm:
    """(σ_l ρ) applied to a 2-cell of the tensor."""
    rm = rho_map(t)
    ph = product_host(t)
    u, v = rm.term_image(ph, t.result, term)
    src = t.result.reduce_term(term).src
    fsrc, gsrc = rm.path_image(ph, src)
    fsrc = t.left.reduce_path(fsrc)
    gsrc = t.right.reduce_path(gsrc)
    A2 = t.left.path_target(fsrc)
    left_part = t.map_left_term(u, gsrc.start)
    right_part = t.map_right_term(A2, v)
    ftgt = _term_tgt_path(t.left, u)
    return t.result.vcomp(
        t.result.whisker(Path(t.obj(fsrc.start, gsrc.start)), left_part,
                         Path(t.obj(A2, gsrc.start), t.rpath(A2, gsrc))),
        t.result.whisker(
            Path(t.obj(fsrc.start, gsrc.start), t.lpath(ftgt, gsrc.start)),
            right_part, Path(t.obj(A2, t.right.path_target(gsrc)))))


def _term_tgt_path(p: Presentation, term: PastingTerm) -> Path:
    return p.term_target(p.reduce_term(term))


# ---------------------------------------------------------------------------
# functoriality


def gray_functor(t_src: GrayTensor, t_dst: GrayTensor,
                 fmap: GeneratorMap, gmap: GeneratorMap) -> GeneratorMap:
    """F⊗G on generators, for strict presented functors F and G."""
    a, b = t_src.left, t_src.right
    a2, b2 = t_dst.left, t_dst.right
    ha, hb = PresentedHost(a2), PresentedHost(b2)
    objects, one_cells, two_cells = {}, {}, {}
    for o in t_src.result.computad.objects:
        A, B = o.split("⊗")
        objects[o] = t_dst.obj(fmap.objects[A], gmap.objects[B])
    for e, tag in t_src.tags.items():
        if tag[0] == "L":
            _, f, B = tag
            fi = a2.reduce_path(fmap.path_image(ha, f))
            one_cells[e] = Path(objects[f"{f.start}⊗{B}"],
                                t_dst.lpath(fi, gmap.objects[B]))
        else:
            _, A, g = tag
            gi = b2.reduce_path(gmap.path_image(hb, g))
            one_cells[e] = Path(objects[f"{A}⊗{g.start}"],
                                t_dst.rpath(fmap.objects[A], gi))
    # images that would exceed the target tensor's bound are skipped; the
    # result is the functor on the materialized part
    for (gen, B), nm in t_src.lcell_gen.items():
        try:
            img = fmap.two_cells[gen]
            two_cells[nm] = t_dst.map_left_term(img, gmap.objects[B])
        except KeyError:
            pass
    for (A, gen), nm in t_src.rcell_gen.items():
        try:
            img = gmap.two_cells[gen]
            two_cells[nm] = t_dst.map_right_term(fmap.objects[A], img)
        except KeyError:
            pass
    for (fe, fs, ge, gs), nm in t_src.swap.items():
        try:
            fi = a2.reduce_path(fmap.path_image(ha, Path(fs, fe)))
            gi = b2.reduce_path(gmap.path_image(hb, Path(gs, ge)))
            two_cells[nm] = t_dst.swap_cell(fi, gi)
        except KeyError:
            pass
    return GeneratorMap(objects=objects, one_cells=one_cells,
                        two_cells=two_cells)


# ---------------------------------------------------------------------------
# 1-cell rule confluence


def check_one_rule_confluence(p: Presentation) -> bool:
    """Critical pairs of the 1-cell rewrite system join after rewriting."""
    rules = p.one_rules
    for r1 in rules:
        for r2 in rules:
            l1, l2 = r1.lhs.edges, r2.lhs.edges
            # overlaps: a suffix of l1 equals a prefix of l2
            for k in range(1, min(len(l1), len(l2)) + 1):
                if l1[len(l1) - k:] != l2[:k]:
                    continue
                word = l1 + l2[k:]
                start = r1.lhs.start
                x = p.normalize_path(
                    Path(start, r1.rhs.edges + l2[k:]))
                y = p.normalize_path(
                    Path(start, l1[:len(l1) - k] + r2.rhs.edges))
                if x != y:
                    return False
            # containment: l2 inside l1
            for i in range(len(l1) - len(l2) + 1):
                if l1[i:i + len(l2)] != l2 or (i == 0 and len(l2) == len(l1)):
                    continue
                x = p.normalize_path(Path(r1.lhs.start, r1.rhs.edges))
                y = p.normalize_path(Path(
                    r1.lhs.start, l1[:i] + r2.rhs.edges + l1[i + len(l2):]))
                if x != y:
                    return False
    return True
