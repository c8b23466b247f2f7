"""Formal monad theory over any host: monads, adjunctions, morphisms.

The checkers are written once against the host interface, so the same code
runs over presented 2-categories, finite categories and the set-semantics
window host.  This module also owns the augmented simplex category and the
standard presentations Mnd and Adj.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hosts import PresentedHost
from .presentation import (
    Computad,
    DEFAULT_BUDGET,
    Equal,
    FunctorReport,
    GeneratorMap,
    LaxcatError,
    Layer,
    OneGenerator,
    PastingTerm,
    Path,
    PathRule,
    Presentation,
    Relation,
    TwoGenerator,
)

LawReport = FunctorReport


# ---------------------------------------------------------------------------
# data


@dataclass
class MonadData:
    host: object
    obj: object          # host object
    t: object            # endo 1-cell
    mu: object           # 2-cell  tt => t
    eta: object          # 2-cell  1 => t


@dataclass
class AdjunctionData:
    host: object
    f: object            # 1-cell A -> B (left adjoint)
    g: object            # 1-cell B -> A
    unit: object         # 1_A => gf
    counit: object       # fg => 1_B


@dataclass
class LaxMonadMorphism:
    """(f, f̄): t -> s with f̄: sf => ft."""

    src: MonadData       # t on A
    tgt: MonadData       # s on B
    f: object
    fbar: object


@dataclass
class ColaxMonadMorphism:
    """(f, f̃): t -> s with f̃: ft => sf."""

    src: MonadData
    tgt: MonadData
    f: object
    ftilde: object


@dataclass
class MorphismTwoCell:
    """2-cell between parallel (co)lax monad morphisms."""

    src: object          # LaxMonadMorphism | ColaxMonadMorphism
    tgt: object
    alpha: object        # f => g in the host


# ---------------------------------------------------------------------------
# law checkers


def check_monad(m: MonadData, budget: int = DEFAULT_BUDGET) -> LawReport:
    h, A, t = m.host, m.obj, m.t
    one = h.identity_one(A)
    assoc_l = h.vcomp(h.whisker(t, m.mu, one), m.mu)
    assoc_r = h.vcomp(h.whisker(one, m.mu, t), m.mu)
    unit_l = h.vcomp(h.whisker(t, m.eta, one), m.mu)
    unit_r = h.vcomp(h.whisker(one, m.eta, t), m.mu)
    ident = h.identity_two(t)
    items = [
        ("associativity", h.eq2(assoc_l, assoc_r, budget=budget)),
        ("left unit", h.eq2(unit_l, ident, budget=budget)),
        ("right unit", h.eq2(unit_r, ident, budget=budget)),
    ]
    if hasattr(h, "is_natural"):
        from .presentation import NotEqual
        for name, cell in (("mu natural", m.mu), ("eta natural", m.eta)):
            ok = h.is_natural(cell)
            items.append((name, Equal(trace=None, certificate="window")
                          if ok else NotEqual(certificate="window")))
    return LawReport(items=items)


def check_adjunction(a: AdjunctionData, budget: int = DEFAULT_BUDGET
                     ) -> LawReport:
    h = a.host
    A, B = h.one_src(a.f), h.one_tgt(a.f)
    idA, idB = h.identity_one(A), h.identity_one(B)
    tri_f = h.vcomp(h.whisker(idA, a.unit, a.f),
                    h.whisker(a.f, a.counit, idB))
    tri_g = h.vcomp(h.whisker(a.g, a.unit, idA),
                    h.whisker(idB, a.counit, a.g))
    items = [
        ("triangle (left adjoint)",
         h.eq2(tri_f, h.identity_two(a.f), budget=budget)),
        ("triangle (right adjoint)",
         h.eq2(tri_g, h.identity_two(a.g), budget=budget)),
    ]
    return LawReport(items=items)


def induced_monad(a: AdjunctionData, budget: int = DEFAULT_BUDGET) -> MonadData:
    """The monad (gf, gεf, η) of an adjunction."""
    rep = check_adjunction(a, budget)
    if not rep.ok:
        raise LaxcatError(f"invalid adjunction: {rep.failures()}")
    h = a.host
    m = MonadData(h, h.one_src(a.f), h.comp1(a.f, a.g),
                  h.whisker(a.f, a.counit, a.g), a.unit)
    mrep = check_monad(m, budget)
    if not mrep.ok:
        raise LaxcatError(f"induced monad fails laws: {mrep.failures()}")
    return m


def check_lax_monad_morphism(x: LaxMonadMorphism,
                             budget: int = DEFAULT_BUDGET) -> LawReport:
    h = x.src.host
    t, s = x.src.t, x.tgt.t
    A, B = x.src.obj, x.tgt.obj
    idA, idB = h.identity_one(A), h.identity_one(B)
    mult_l = h.vcomp(h.whisker(x.f, x.tgt.mu, idB), x.fbar)
    mult_r = h.vcomp(h.whisker(idA, x.fbar, s),
                     h.whisker(t, x.fbar, idB),
                     h.whisker(idA, x.src.mu, x.f))
    unit_l = h.vcomp(h.whisker(x.f, x.tgt.eta, idB), x.fbar)
    unit_r = h.whisker(idA, x.src.eta, x.f)
    return LawReport(items=[
        ("multiplication square", h.eq2(mult_l, mult_r, budget=budget)),
        ("unit triangle", h.eq2(unit_l, unit_r, budget=budget)),
    ])


def check_colax_monad_morphism(x: ColaxMonadMorphism,
                               budget: int = DEFAULT_BUDGET) -> LawReport:
    h = x.src.host
    t, s = x.src.t, x.tgt.t
    A, B = x.src.obj, x.tgt.obj
    idA, idB = h.identity_one(A), h.identity_one(B)
    mult_l = h.vcomp(h.whisker(idA, x.src.mu, x.f), x.ftilde)
    mult_r = h.vcomp(h.whisker(t, x.ftilde, idB),
                     h.whisker(idA, x.ftilde, s),
                     h.whisker(x.f, x.tgt.mu, idB))
    unit_l = h.vcomp(h.whisker(idA, x.src.eta, x.f), x.ftilde)
    unit_r = h.whisker(x.f, x.tgt.eta, idB)
    return LawReport(items=[
        ("multiplication square", h.eq2(mult_l, mult_r, budget=budget)),
        ("unit triangle", h.eq2(unit_l, unit_r, budget=budget)),
    ])


def check_morphism_two_cell(c: MorphismTwoCell,
                            budget: int = DEFAULT_BUDGET) -> LawReport:
    lax = isinstance(c.src, LaxMonadMorphism)
    h = c.src.src.host
    t, s = c.src.src.t, c.src.tgt.t
    A, B = c.src.src.obj, c.src.tgt.obj
    idA, idB = h.identity_one(A), h.identity_one(B)
    if lax:
        lhs = h.vcomp(h.whisker(idA, c.alpha, s), c.tgt.fbar)
        rhs = h.vcomp(c.src.fbar, h.whisker(t, c.alpha, idB))
    else:
        lhs = h.vcomp(c.src.ftilde, h.whisker(idA, c.alpha, s))
        rhs = h.vcomp(h.whisker(t, c.alpha, idB), c.tgt.ftilde)
    return LawReport(items=[
        ("compatibility square", h.eq2(lhs, rhs, budget=budget))])


# ---------------------------------------------------------------------------
# the augmented simplex category


@dataclass(frozen=True, order=True)
class MonotoneMap:
    n: int
    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.n:
            raise LaxcatError("monotone map arity mismatch")
        if any(not 0 <= v < self.m for v in self.values):
            raise LaxcatError("monotone map value out of range")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise LaxcatError("map not weakly increasing")


def delta_a_hom(n: int, m: int) -> list[MonotoneMap]:
    """All order-preserving maps n -> m, in lexicographic order."""
    if n == 0:
        return [MonotoneMap(0, m, ())]
    if m == 0:
        return []
    return [MonotoneMap(n, m, v)
            for v in itertools.combinations_with_replacement(range(m), n)]


def delta_a_compose(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """f then g."""
    if f.m != g.n:
        raise LaxcatError("maps not composable")
    return MonotoneMap(f.n, g.m, tuple(g.values[v] for v in f.values))


def delta_a_identity(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n)))


def delta_a_tensor(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """Ordinal sum n⊗m = n+m on objects, juxtaposition on maps."""
    return MonotoneMap(f.n + g.n, f.m + g.m,
                       f.values + tuple(v + f.m for v in g.values))


# ---------------------------------------------------------------------------
# Mnd, Adj


def _term(src: Path, *layers: Layer) -> PastingTerm:
    return PastingTerm(src, tuple(layers))


def mnd_term_monotone(term: PastingTerm) -> MonotoneMap:
    """Evaluate a Mnd pasting term to its monotone map (the Δa functor)."""
    n = len(term.src.edges)
    vals = list(range(n))
    length = n
    for lay in term.layers:
        k = len(lay.before)
        if lay.gen == "mu":
            vals = [v if v <= k else v - 1 for v in vals]
            length -= 1
        elif lay.gen == "eta":
            vals = [v if v < k else v + 1 for v in vals]
            length += 1
        else:
            raise LaxcatError(f"not a Mnd term: generator {lay.gen!r}")
    return MonotoneMap(n, length, tuple(vals))


def mnd_presentation() -> Presentation:
    """The walking monad: one object, t, η, μ, and the three equations."""
    star = "*"
    c = Computad(
        objects=(star,),
        one_generators=(OneGenerator("t", star, star),),
        two_generators=(
            TwoGenerator("eta", Path(star), Path(star, ("t",))),
            TwoGenerator("mu", Path(star, ("t", "t")), Path(star, ("t",))),
        ),
    )
    t3 = Path(star, ("t", "t", "t"))
    t1 = Path(star, ("t",))
    rels = (
        Relation("associativity",
                 _term(t3, Layer(("t",), "mu", ()), Layer((), "mu", ())),
                 _term(t3, Layer((), "mu", ("t",)), Layer((), "mu", ()))),
        Relation("left unit",
                 _term(t1, Layer(("t",), "eta", ()), Layer((), "mu", ())),
                 _term(t1)),
        Relation("right unit",
                 _term(t1, Layer((), "eta", ("t",)), Layer((), "mu", ())),
                 _term(t1)),
    )
    return Presentation(computad=c, two_relations=rels,
                        invariant=mnd_term_monotone)


def adj_presentation() -> Presentation:
    """The walking adjunction: f ⊣ g with the two triangle identities."""
    c = Computad(
        objects=("*+", "*-"),
        one_generators=(OneGenerator("f", "*+", "*-"),
                        OneGenerator("g", "*-", "*+")),
        two_generators=(
            TwoGenerator("eta", Path("*+"), Path("*+", ("f", "g"))),
            TwoGenerator("eps", Path("*-", ("g", "f")), Path("*-")),
        ),
    )
    rels = (
        Relation("triangle f",
                 _term(Path("*+", ("f",)),
                       Layer((), "eta", ("f",)), Layer(("f",), "eps", ())),
                 _term(Path("*+", ("f",)))),
        Relation("triangle g",
                 _term(Path("*-", ("g",)),
                       Layer(("g",), "eta", ()), Layer((), "eps", ("g",))),
                 _term(Path("*-", ("g",)))),
    )
    return Presentation(computad=c, two_relations=rels)


def mnd_to_adj_map() -> GeneratorMap:
    """t ↦ gf, η ↦ η, μ ↦ gεf."""
    return GeneratorMap(
        objects={"*": "*+"},
        one_cells={"t": Path("*+", ("f", "g"))},
        two_cells={
            "eta": _term(Path("*+"), Layer((), "eta", ())),
            "mu": _term(Path("*+", ("f", "g", "f", "g")),
                        Layer(("f",), "eps", ("g",))),
        },
    )


def check_mnd_in_adj(budget: int = DEFAULT_BUDGET) -> FunctorReport:
    from .presentation import check_presented_functor

    return check_presented_functor(
        mnd_presentation(), PresentedHost(adj_presentation()),
        mnd_to_adj_map(), budget=budget)


# ---------------------------------------------------------------------------
# Mnd ≅ ΣΔa via irreducible-term enumeration


def _mnd_redex_patterns(pres: Presentation) -> list[PastingTerm]:
    """Left sides of the reduction orientation used for normal forms.

    Units reduce as written; associativity is oriented so an inner merge at
    a strictly larger position rewrites to a smaller one.
    """
    return [
        pres.reduce_term(pres.two_relations[0].lhs),  # [mu@k+1; mu@k]
        pres.reduce_term(pres.two_relations[1].lhs),  # [eta@k+1; mu@k]
        pres.reduce_term(pres.two_relations[2].lhs),  # [eta@k; mu@k]
    ]


def _is_reducible(pres: Presentation, term: PastingTerm,
                  patterns: list[PastingTerm]) -> bool:
    return any(pres._find_occurrences(term.layers, pat, limit=1)
               for pat in patterns)


def _redex_at_last(pres: Presentation, layers: tuple,
                   patterns: list[PastingTerm]) -> bool:
    """Does some two-layer redex involve the final layer?

    Assumes the prefix is already redex-free, so a new redex must use the
    last layer as its second half.  The last layer is pulled backwards
    through the stack; at each depth the adjacent window is matched.
    """
    k = len(layers) - 1
    frontier = {layers[k]}
    for p in range(k - 1, -1, -1):
        nxt = set()
        for lf in frontier:
            for pat in patterns:
                m = pres._match_front(layers[p], pat.layers[0], None, None)
                if m is not None and pres._match_front(
                        lf, pat.layers[1], m[0], m[1]) is not None:
                    return True
            for n2, _ in pres._swap_adjacent(layers[p], lf):
                nxt.add(n2)
        frontier = nxt
        if not frontier:
            break
    return False


def mnd_normal_forms(n: int, m: int, pres: Presentation = None
                     ) -> list[PastingTerm]:
    """All irreducible pasting terms tⁿ ⇒ tᵐ, up to interchange."""
    pres = pres or mnd_presentation()
    patterns = _mnd_redex_patterns(pres)
    cap = n + m
    start = PastingTerm(Path("*", ("t",) * n), ())
    found: dict = {}
    seen: set = set()

    def extensions(length: int):
        for k in range(length - 1):
            yield Layer(("t",) * k, "mu", ("t",) * (length - k - 2)), -1
        for k in range(length + 1):
            yield Layer(("t",) * k, "eta", ("t",) * (length - k)), +1

    def locally_sorted(prev: Layer, new: Layer) -> bool:
        # skip stacks where swapping the last two is lexicographically
        # smaller; the sorted variant is generated along another branch
        for n2, _ in pres._swap_adjacent(prev, new):
            if pres._layer_key(n2) < pres._layer_key(prev):
                return False
        return True

    def rec(term: PastingTerm, length: int):
        nf = pres.normalize_two_cell(term)
        if nf in seen:
            return
        seen.add(nf)
        if length == m:
            found[nf] = term
        budget = cap - len(term.layers)
        if budget <= 0:
            return
        for lay, d in extensions(length):
            if abs(length + d - m) > budget - 1:
                continue
            if term.layers and not locally_sorted(term.layers[-1], lay):
                continue
            cand_layers = term.layers + (lay,)
            if not _redex_at_last(pres, cand_layers, patterns):
                rec(PastingTerm(term.src, cand_layers), length + d)

    rec(start, n)
    return [found[k] for k in sorted(found, key=lambda t: t.layers)]


def mnd_delta_a_iso_check(bound: int = 8) -> LawReport:
    """For n+m ≤ bound: normal-form count equals |Δa(n,m)|, bijectively."""
    pres = mnd_presentation()
    items = []
    for n in range(bound + 1):
        for m in range(bound + 1 - n):
            forms = mnd_normal_forms(n, m, pres)
            maps = {f.values for f in delta_a_hom(n, m)}
            images = [mnd_term_monotone(pres.reduce_term(t)) for t in forms]
            ok = (len(forms) == len(maps)
                  and len({i.values for i in images}) == len(images)
                  and {i.values for i in images} == maps)
            from .presentation import NotEqual
            items.append((
                f"hom(t^{n}, t^{m}): {len(forms)} normal forms vs "
                f"{len(maps)} monotone maps",
                Equal(trace=None, certificate="bijection") if ok
                else NotEqual(certificate="bijection")))
    return LawReport(items=items)


# ---------------------------------------------------------------------------
# lifting lax morphisms to Eilenberg-Moore


def lift_lax_morphism_to_em(x: LaxMonadMorphism):
    """The functor A^t -> B^s over f, for a lax morphism in CatWorld."""
    from .fincat import CatWorld, FinFunctor, algebra_name, em_category

    rep_lax = check_lax_monad_morphism(x)
    if not rep_lax.ok:
        raise LaxcatError(f"invalid lax monad morphism: {rep_lax.failures()}")
    emt = em_category(x.src)
    ems = em_category(x.tgt)
    A, B = x.src.obj, x.tgt.obj
    f = x.f
    ob, mor = [], []
    for a, act, name in emt.algebras:
        action = B.then(x.fbar.at(a), f.on_mor(act))
        ob.append((name, algebra_name(f.on_ob(a), action)))
    target_alg = dict(ob)
    for mname in emt.category.all_morphisms():
        h = emt.underlying[mname]
        src_alg = emt.category.src(mname)
        tgt_alg = emt.category.tgt(mname)
        mor.append((mname, ems.mor_name[(
            target_alg[src_alg], target_alg[tgt_alg], f.on_mor(h))]))
    lift = FinFunctor(emt.category, ems.category, tuple(ob), tuple(mor))
    world = CatWorld()
    from .fincat import compose_functors
    if not world.one_cells_equal(compose_functors(lift, ems.forgetful),
                                 compose_functors(emt.forgetful, f)):
        raise LaxcatError("lift does not commute with the forgetful functors")
    return lift


def induced_lax_functor_from_pointwise_adjunctions(domain, strict_map,
                                                   adjs: dict):
    """Lax functor from a strict functor and a per-object adjunction.

    `domain` is a presentation domain (see classifier.PresentationDomain),
    `strict_map` a GeneratorMap-style assignment into CatWorld, and `adjs`
    maps each domain object to an AdjunctionData whose left adjoint lands
    in the strict functor's value there.
    """
    from .classifier import LaxFunctorData
    from .fincat import CatWorld

    world = CatWorld()
    for obj, adj in adjs.items():
        rep = check_adjunction(adj)
        if not rep.ok:
            raise LaxcatError(f"invalid adjunction at {obj!r}")
    ob_map = {o: world.one_src(adjs[o].f) for o in domain.objects()}

    def fval(p: Path):
        return strict_map.path_image(world, p)

    one_map, comp_cells, unit_cells = {}, {}, {}
    for p in domain.one_cells():
        a, b = domain.src(p), domain.tgt(p)
        one_map[p] = world.comp1(world.comp1(adjs[a].f, fval(p)), adjs[b].g)
    for o in domain.objects():
        unit_cells[o] = adjs[o].unit
    for p in domain.one_cells():
        for q in domain.one_cells():
            if domain.tgt(p) != domain.src(q) or \
                    domain.comp(p, q) not in one_map:
                continue
            b = domain.tgt(p)
            cell = world.whisker(
                world.comp1(adjs[domain.src(p)].f, fval(p)),
                adjs[b].counit,
                world.comp1(fval(q), adjs[domain.tgt(q)].g))
            comp_cells[(p, q)] = cell
    return LaxFunctorData(domain=domain, host=world, ob_map=ob_map,
                          one_map=one_map, comp_cells=comp_cells,
                          unit_cells=unit_cells)
