"""Beck distributive laws: axioms, the four-way equivalence, EM lifts.

A law γ: st ⇒ ts is stored with its two monads; the four axiom checks and
the three alternative encodings (lax morphism, colax morphism, composite
monad) are evaluated independently and compared.  Mutation helpers produce
broken laws for the equivalence test suite.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .monads import (
    AdjunctionData,
    ColaxMonadMorphism,
    LawReport,
    LaxMonadMorphism,
    MonadData,
    MorphismTwoCell,
    check_colax_monad_morphism,
    check_lax_monad_morphism,
    check_monad,
    check_morphism_two_cell,
)
from .presentation import (
    Computad,
    DEFAULT_BUDGET,
    Equal,
    LaxcatError,
    Layer,
    NotEqual,
    OneGenerator,
    PastingTerm,
    Path,
    Presentation,
    Relation,
    TwoGenerator,
)


@dataclass
class DistLawData:
    """Monads s and t on one object with a swap γ: st ⇒ ts."""

    s: MonadData
    t: MonadData
    gamma: object

    @property
    def host(self):
        return self.s.host

    @property
    def obj(self):
        return self.s.obj


@dataclass
class ComonadData:
    host: object
    obj: object
    w: object
    delta: object        # w => ww
    eps: object          # w => 1


@dataclass
class MixedDistLawData:
    """A monad over a comonad: γ: tw ⇒ wt compatible with μ, η, δ, ε."""

    monad: MonadData
    comonad: ComonadData
    gamma: object


def check_comonad(c: ComonadData, budget: int = DEFAULT_BUDGET) -> LawReport:
    h, w = c.host, c.w
    one = h.identity_one(c.obj)
    coassoc_l = h.vcomp(c.delta, h.whisker(w, c.delta, one))
    coassoc_r = h.vcomp(c.delta, h.whisker(one, c.delta, w))
    counit_l = h.vcomp(c.delta, h.whisker(w, c.eps, one))
    counit_r = h.vcomp(c.delta, h.whisker(one, c.eps, w))
    ident = h.identity_two(w)
    return LawReport(items=[
        ("coassociativity", h.eq2(coassoc_l, coassoc_r, budget=budget)),
        ("left counit", h.eq2(counit_l, ident, budget=budget)),
        ("right counit", h.eq2(counit_r, ident, budget=budget)),
    ])


# ---------------------------------------------------------------------------
# the four axioms


def check_distributive_law(d: DistLawData,
                           budget: int = DEFAULT_BUDGET) -> LawReport:
    h = d.host
    one = h.identity_one(d.obj)
    s, t = d.s.t, d.t.t
    g = d.gamma
    items = [
        ("unit t", h.eq2(
            h.vcomp(h.whisker(one, d.t.eta, s), g),
            h.whisker(s, d.t.eta, one), budget=budget)),
        ("unit s", h.eq2(
            h.vcomp(h.whisker(t, d.s.eta, one), g),
            h.whisker(one, d.s.eta, t), budget=budget)),
        ("multiplication t", h.eq2(
            h.vcomp(h.whisker(one, d.t.mu, s), g),
            h.vcomp(h.whisker(t, g, one), h.whisker(one, g, t),
                    h.whisker(s, d.t.mu, one)), budget=budget)),
        ("multiplication s", h.eq2(
            h.vcomp(h.whisker(t, d.s.mu, one), g),
            h.vcomp(h.whisker(one, g, s), h.whisker(s, g, one),
                    h.whisker(one, d.s.mu, t)), budget=budget)),
    ]
    if hasattr(h, "is_natural"):
        ok = h.is_natural(g)
        items.append(("gamma natural",
                      Equal(trace=None, certificate="window") if ok
                      else NotEqual(certificate="window")))
    return LawReport(items=items)


def compose_monads(d: DistLawData, budget: int = DEFAULT_BUDGET) -> MonadData:
    """The composite monad (ts, (μᵗ·μˢ)∗(tγs), ηᵗ·ηˢ)."""
    rep = check_distributive_law(d, budget)
    if not rep.ok:
        raise LaxcatError(f"invalid distributive law: {rep.failures()}")
    m = composite_monad_data(d)
    mrep = check_monad(m, budget)
    if not mrep.ok:
        raise LaxcatError(f"composite monad fails laws: {mrep.failures()}")
    return m


def composite_monad_data(d: DistLawData) -> MonadData:
    """The composite structure, without asserting any law."""
    h = d.host
    one = h.identity_one(d.obj)
    s, t = d.s.t, d.t.t
    ts = h.comp1(s, t)
    mu = h.vcomp(h.whisker(s, d.gamma, t),
                 h.whisker(one, d.s.mu, h.comp1(t, t)),
                 h.whisker(s, d.t.mu, one))
    eta = h.vcomp(d.s.eta, h.whisker(s, d.t.eta, one))
    return MonadData(h, d.obj, ts, mu, eta)


# ---------------------------------------------------------------------------
# the four-way equivalence


def _lax_branch(d: DistLawData, budget: int) -> LawReport:
    """(t, γ) as a lax monad morphism s -> s with μᵗ, ηᵗ as 2-cells."""
    h = d.host
    one = h.identity_one(d.obj)
    s, t = d.s.t, d.t.t
    m1 = LaxMonadMorphism(src=d.s, tgt=d.s, f=t, fbar=d.gamma)
    items = list(check_lax_monad_morphism(m1, budget).items)
    sq = h.vcomp(h.whisker(t, d.gamma, one), h.whisker(one, d.gamma, t))
    m2 = LaxMonadMorphism(src=d.s, tgt=d.s, f=h.comp1(t, t), fbar=sq)
    mid = LaxMonadMorphism(src=d.s, tgt=d.s, f=one,
                           fbar=h.identity_two(h.comp1(one, s)))
    items += [("mu is a 2-cell in mnd_l", check_morphism_two_cell(
        MorphismTwoCell(src=m2, tgt=m1, alpha=d.t.mu), budget).items[0][1])]
    items += [("eta is a 2-cell in mnd_l", check_morphism_two_cell(
        MorphismTwoCell(src=mid, tgt=m1, alpha=d.t.eta), budget).items[0][1])]
    return LawReport(items=items)


def _colax_branch(d: DistLawData, budget: int) -> LawReport:
    """(s, γ) as a colax monad morphism t -> t with μˢ, ηˢ as 2-cells."""
    h = d.host
    one = h.identity_one(d.obj)
    s, t = d.s.t, d.t.t
    m1 = ColaxMonadMorphism(src=d.t, tgt=d.t, f=s, ftilde=d.gamma)
    items = list(check_colax_monad_morphism(m1, budget).items)
    sq = h.vcomp(h.whisker(one, d.gamma, s), h.whisker(s, d.gamma, one))
    m2 = ColaxMonadMorphism(src=d.t, tgt=d.t, f=h.comp1(s, s), ftilde=sq)
    mid = ColaxMonadMorphism(src=d.t, tgt=d.t, f=one,
                             ftilde=h.identity_two(h.comp1(one, t)))
    items += [("mu is a 2-cell in mnd_c", check_morphism_two_cell(
        MorphismTwoCell(src=m2, tgt=m1, alpha=d.s.mu), budget).items[0][1])]
    items += [("eta is a 2-cell in mnd_c", check_morphism_two_cell(
        MorphismTwoCell(src=mid, tgt=m1, alpha=d.s.eta), budget).items[0][1])]
    return LawReport(items=items)


@dataclass
class BeckReport:
    branches: dict  # name -> LawReport

    @property
    def verdicts(self) -> dict:
        return {k: v.ok for k, v in self.branches.items()}

    @property
    def agree(self) -> bool:
        return len(set(self.verdicts.values())) == 1

    @property
    def ok(self) -> bool:
        return self.agree and all(self.verdicts.values())


def beck_equivalence_check(d: DistLawData,
                           budget: int = DEFAULT_BUDGET) -> BeckReport:
    """Evaluate the four equivalent formulations independently."""
    axioms = check_distributive_law(d, budget)
    lax = _lax_branch(d, budget)
    colax = _colax_branch(d, budget)
    comp = check_monad(composite_monad_data(d), budget)
    return BeckReport(branches={
        "(i) four axioms": axioms,
        "(ii) lax morphism": lax,
        "(iii) colax morphism": colax,
        "(iv) composite monad": comp,
    })


# ---------------------------------------------------------------------------
# EM lifts (table-based hosts)


def lift_monad_to_em(d: DistLawData, budget: int = DEFAULT_BUDGET):
    """The lift t̄ of t to the algebras of s, for laws in CatWorld."""
    from .fincat import (CatWorld, FinFunctor, FinNatTrans, algebra_name,
                         compose_functors, em_category)

    rep = check_distributive_law(d, budget)
    if not rep.ok:
        raise LaxcatError(f"invalid distributive law: {rep.failures()}")
    ems = em_category(d.s)
    A = d.s.obj
    t, s = d.t.t, d.s.t
    ob, mor = [], []
    for a, act, name in ems.algebras:
        action = A.then(d.gamma.at(a), t.on_mor(act))
        ob.append((name, algebra_name(t.on_ob(a), action)))
    target = dict(ob)
    for mname in ems.category.all_morphisms():
        h = ems.underlying[mname]
        mor.append((mname, ems.mor_name[(
            target[ems.category.src(mname)],
            target[ems.category.tgt(mname)], t.on_mor(h))]))
    tbar = FinFunctor(ems.category, ems.category, tuple(ob), tuple(mor))
    world = CatWorld()
    mu_bar = FinNatTrans(
        compose_functors(tbar, tbar), tbar,
        tuple((name, ems.mor_name[(tbar.on_ob(tbar.on_ob(name)),
                                   tbar.on_ob(name), d.t.mu.at(a))])
              for a, act, name in ems.algebras))
    eta_bar = FinNatTrans(
        world.identity_one(ems.category), tbar,
        tuple((name, ems.mor_name[(name, tbar.on_ob(name), d.t.eta.at(a))])
              for a, act, name in ems.algebras))
    lifted = MonadData(world, ems.category, tbar, mu_bar, eta_bar)
    # the three strict equations of the corollary
    checks = [
        ("u t̄ = t u", world.one_cells_equal(
            compose_functors(tbar, ems.forgetful),
            compose_functors(ems.forgetful, t))),
        ("u μ̄ = μ u", all(
            ems.underlying[mu_bar.at(nm)] == d.t.mu.at(a)
            for a, _, nm in ems.algebras)),
        ("u η̄ = η u", all(
            ems.underlying[eta_bar.at(nm)] == d.t.eta.at(a)
            for a, _, nm in ems.algebras)),
    ]
    for label, ok in checks:
        if not ok:
            raise LaxcatError(f"EM lift equation fails: {label}")
    mrep = check_monad(lifted, budget)
    if not mrep.ok:
        raise LaxcatError(f"lifted monad fails laws: {mrep.failures()}")
    return lifted, ems


def _under(em_mor_name: str) -> str:
    return em_mor_name[4:-1].split(";", 1)[0]


@dataclass
class IteratedEMReport:
    items: list

    @property
    def ok(self) -> bool:
        return all(ok for _, _, ok in self.items)


def iterated_em_check(d: DistLawData,
                      budget: int = DEFAULT_BUDGET) -> IteratedEMReport:
    """(A^s)^t̄ ≅ A^{ts}: counts match and the comparison is bijective."""
    from .semset import SemSetHost

    if isinstance(d.host, SemSetHost):
        return _iterated_em_sem(d)
    return _iterated_em_tables(d, budget)


def _iterated_em_tables(d: DistLawData, budget: int) -> IteratedEMReport:
    from .fincat import algebra_name, em_category

    lifted, ems = lift_monad_to_em(d, budget)
    em2 = em_category(lifted)          # (A^s)^t̄
    ts = compose_monads(d, budget)
    emts = em_category(ts)             # A^{ts}
    A = d.s.obj
    t = d.t.t
    # canonical comparison on objects: ((a, α), act') ↦ (a, act'₀ ∘ t(α))
    image = {}
    for alg_s_name, act2, name2 in em2.algebras:
        a, alpha = ems.algebra_of[alg_s_name]
        combined = A.then(t.on_mor(alpha), ems.underlying[act2])
        image[name2] = algebra_name(a, combined)
    ok_obj = (len(set(image.values())) == len(image)
              and set(image.values()) == {n for _, _, n in emts.algebras})
    # homs: compare underlying morphisms
    ok_hom = True
    for n1 in em2.category.objects:
        for n2 in em2.category.objects:
            lhs = {ems.underlying[em2.underlying[m]]
                   for m in em2.category.hom(n1, n2)}
            rhs = {emts.underlying[m]
                   for m in emts.category.hom(image[n1], image[n2])}
            if lhs != rhs:
                ok_hom = False
    items = [
        ("object counts", {
            "iterated": len(em2.algebras), "composite": len(emts.algebras)},
         len(em2.algebras) == len(emts.algebras)),
        ("comparison bijective on objects", {}, ok_obj),
        ("comparison bijective on homs", {}, ok_hom),
    ]
    return IteratedEMReport(items=items)


# ---------------------------------------------------------------------------
# iterated EM for the set-semantics host


def _iterated_em_sem(d: DistLawData) -> IteratedEMReport:
    """Concrete iterated-EM comparison over the base window.

    s-algebras are enumerated on the window; the lift t̄ is computed (its
    carriers leave the window, which is why this is not a FinFunctor), and
    t̄-algebras are pairs of an s-algebra with a compatible t-action.
    """
    from .semset import (all_functions, apply_word, compose_funs, elements,
                         identity_fun, word_on_fun)

    host = d.host
    s_word, t_word = d.s.t, d.t.t

    def s_mu(X):
        return d.s.mu.component(X)

    def s_eta(X):
        return d.s.eta.component(X)

    s_algs = []
    for X in host.window:
        sX = apply_word(s_word, X)
        for act in all_functions(sX, X):
            if any(act[s_eta(X)[x]] != x for x in elements(X)):
                continue
            lhs = compose_funs(word_on_fun(s_word, act), act)
            rhs = compose_funs(d.s.mu.component(X), act)
            if lhs == rhs:
                s_algs.append((X, act))

    def s_maps(a1, a2):
        X1, act1 = a1
        X2, act2 = a2
        out = []
        for h in all_functions(X1, X2):
            if compose_funs(word_on_fun(s_word, h), act2) == \
                    compose_funs(act1, h):
                out.append(h)
        return out

    def tbar(alg):
        X, act = alg
        tX = apply_word(t_word, X)
        gam = d.gamma.component(X)
        action = compose_funs(gam, word_on_fun(t_word, act))
        return (tX, action)

    def freeze(f: dict) -> tuple:
        return tuple(sorted(f.items(), key=repr))

    # t̄-algebras: s-algebra + act' with s-map and t-algebra laws
    lhs_objs = []
    for alg in s_algs:
        X, act = alg
        tX, t_action = tbar(alg)
        eta_t = d.t.eta.component(X)
        mu_t = d.t.mu.component(X)
        for act2 in all_functions(tX, X):
            # act' is a morphism of s-algebras t̄(alg) -> alg
            if compose_funs(word_on_fun(s_word, act2), act) != \
                    compose_funs(t_action, act2):
                continue
            if any(act2[eta_t[x]] != x for x in elements(X)):
                continue
            if compose_funs(word_on_fun(t_word, act2), act2) != \
                    compose_funs(mu_t, act2):
                continue
            lhs_objs.append((alg, act2))

    # ts-algebras over the window
    ts = composite_monad_data(d)
    rhs_objs = []
    for X in host.window:
        tsX = apply_word(ts.t, X)
        eta_ts = ts.eta.component(X)
        mu_ts = ts.mu.component(X)
        for act in all_functions(tsX, X):
            if any(act[eta_ts[x]] != x for x in elements(X)):
                continue
            if compose_funs(word_on_fun(ts.t, act), act) != \
                    compose_funs(mu_ts, act):
                continue
            rhs_objs.append((X, act))

    # comparison: ((X, α), act') ↦ (X, act' ∘ t(α))
    images = []
    for (X, alpha), act2 in lhs_objs:
        combined = compose_funs(word_on_fun(t_word, alpha), act2)
        images.append((X, combined))
    img_keys = {(X, freeze(f)) for X, f in images}
    rhs_keys = {(X, freeze(f)) for X, f in rhs_objs}
    ok_obj = (len(img_keys) == len(lhs_objs) and img_keys == rhs_keys)

    # hom comparison: morphisms are window functions on both sides
    ok_hom = True
    lhs_index = {i: o for i, o in enumerate(lhs_objs)}
    img_of = {i: images[i] for i in lhs_index}
    for i, ((Xa, alpha_a), act2a) in lhs_index.items():
        for j, ((Xb, alpha_b), act2b) in lhs_index.items():
            lhs_maps = []
            for h in s_maps((Xa, alpha_a), (Xb, alpha_b)):
                if compose_funs(word_on_fun(t_word, h), act2b) == \
                        compose_funs(act2a, h):
                    lhs_maps.append(freeze(h))
            rhs_maps = []
            (Xi, fi), (Xj, fj) = img_of[i], img_of[j]
            for h in all_functions(Xi, Xj):
                if compose_funs(word_on_fun(ts.t, h), fj) == \
                        compose_funs(fi, h):
                    rhs_maps.append(freeze(h))
            if sorted(lhs_maps) != sorted(rhs_maps):
                ok_hom = False
    items = [
        ("object counts", {
            "iterated": len(lhs_objs), "composite": len(rhs_objs)},
         len(lhs_objs) == len(rhs_objs)),
        ("comparison bijective on objects", {}, ok_obj),
        ("comparison bijective on homs", {}, ok_hom),
    ]
    return IteratedEMReport(items=items)


# ---------------------------------------------------------------------------
# mixed laws


def check_mixed_distributive_law(m: MixedDistLawData,
                                 budget: int = DEFAULT_BUDGET) -> LawReport:
    """Direct axioms plus the comonad-in-mnd_l re-derivation."""
    h = m.monad.host
    one = h.identity_one(m.monad.obj)
    t, w = m.monad.t, m.comonad.w
    g = m.gamma
    direct = [
        ("unit", h.eq2(
            h.vcomp(h.whisker(w, m.monad.eta, one), g),
            h.whisker(one, m.monad.eta, w), budget=budget)),
        ("multiplication", h.eq2(
            h.vcomp(h.whisker(w, m.monad.mu, one), g),
            h.vcomp(h.whisker(one, g, t), h.whisker(t, g, one),
                    h.whisker(one, m.monad.mu, w)), budget=budget)),
        ("comultiplication", h.eq2(
            h.vcomp(g, h.whisker(t, m.comonad.delta, one)),
            h.vcomp(h.whisker(one, m.comonad.delta, t),
                    h.whisker(w, g, one), h.whisker(one, g, w)),
            budget=budget)),
        ("counit", h.eq2(
            h.vcomp(g, h.whisker(t, m.comonad.eps, one)),
            h.whisker(one, m.comonad.eps, t), budget=budget)),
    ]
    # encoding: (w, γ) is a lax monad morphism t -> t, δ and ε are 2-cells
    m1 = LaxMonadMorphism(src=m.monad, tgt=m.monad, f=w, fbar=g)
    enc = list(check_lax_monad_morphism(m1, budget).items)
    sq = h.vcomp(h.whisker(w, g, one), h.whisker(one, g, w))
    m2 = LaxMonadMorphism(src=m.monad, tgt=m.monad, f=h.comp1(w, w), fbar=sq)
    mid = LaxMonadMorphism(src=m.monad, tgt=m.monad, f=one,
                           fbar=h.identity_two(h.comp1(one, t)))
    enc.append(("delta is a 2-cell in mnd_l", check_morphism_two_cell(
        MorphismTwoCell(src=m1, tgt=m2, alpha=m.comonad.delta),
        budget).items[0][1]))
    enc.append(("eps is a 2-cell in mnd_l", check_morphism_two_cell(
        MorphismTwoCell(src=m1, tgt=mid, alpha=m.comonad.eps),
        budget).items[0][1]))
    direct_ok = all(bool(v) for _, v in direct)
    enc_ok = all(bool(v) for _, v in enc)
    agreement = (
        "encodings agree",
        Equal(trace=None, certificate="re-derivation")
        if direct_ok == enc_ok else NotEqual(certificate="re-derivation"))
    return LawReport(items=direct + enc + [agreement])


# ---------------------------------------------------------------------------
# Dist, the walking distributive law


def dist_presentation() -> Presentation:
    star = "*"
    c = Computad(
        objects=(star,),
        one_generators=(OneGenerator("t", star, star),
                        OneGenerator("s", star, star)),
        two_generators=(
            TwoGenerator("eta_t", Path(star), Path(star, ("t",))),
            TwoGenerator("mu_t", Path(star, ("t", "t")), Path(star, ("t",))),
            TwoGenerator("eta_s", Path(star), Path(star, ("s",))),
            TwoGenerator("mu_s", Path(star, ("s", "s")), Path(star, ("s",))),
            TwoGenerator("gamma", Path(star, ("t", "s")),
                         Path(star, ("s", "t"))),
        ),
    )

    def monad_rels(x: str) -> list[Relation]:
        x3 = Path(star, (x,) * 3)
        x1 = Path(star, (x,))
        return [
            Relation(f"assoc {x}",
                     PastingTerm(x3, (Layer((x,), f"mu_{x}", ()),
                                      Layer((), f"mu_{x}", ()))),
                     PastingTerm(x3, (Layer((), f"mu_{x}", (x,)),
                                      Layer((), f"mu_{x}", ())))),
            Relation(f"left unit {x}",
                     PastingTerm(x1, (Layer((x,), f"eta_{x}", ()),
                                      Layer((), f"mu_{x}", ()))),
                     PastingTerm(x1)),
            Relation(f"right unit {x}",
                     PastingTerm(x1, (Layer((), f"eta_{x}", (x,)),
                                      Layer((), f"mu_{x}", ()))),
                     PastingTerm(x1)),
        ]

    beck = [
        Relation("beck unit t",
                 PastingTerm(Path(star, ("s",)),
                             (Layer((), "eta_t", ("s",)),
                              Layer((), "gamma", ()))),
                 PastingTerm(Path(star, ("s",)),
                             (Layer(("s",), "eta_t", ()),))),
        Relation("beck unit s",
                 PastingTerm(Path(star, ("t",)),
                             (Layer(("t",), "eta_s", ()),
                              Layer((), "gamma", ()))),
                 PastingTerm(Path(star, ("t",)),
                             (Layer((), "eta_s", ("t",)),))),
        Relation("beck mult t",
                 PastingTerm(Path(star, ("t", "t", "s")),
                             (Layer((), "mu_t", ("s",)),
                              Layer((), "gamma", ()))),
                 PastingTerm(Path(star, ("t", "t", "s")),
                             (Layer(("t",), "gamma", ()),
                              Layer((), "gamma", ("t",)),
                              Layer(("s",), "mu_t", ())))),
        Relation("beck mult s",
                 PastingTerm(Path(star, ("t", "s", "s")),
                             (Layer(("t",), "mu_s", ()),
                              Layer((), "gamma", ()))),
                 PastingTerm(Path(star, ("t", "s", "s")),
                             (Layer((), "gamma", ("s",)),
                              Layer(("s",), "gamma", ()),
                              Layer((), "mu_s", ("t",))))),
    ]
    return Presentation(computad=c, two_relations=tuple(
        monad_rels("t") + monad_rels("s") + beck))


def dist_generator_map(d: DistLawData):
    """Images of the Dist generators given concrete law data."""
    h = d.host
    one = h.identity_one(d.obj)
    return {
        "objects": {"*": d.obj},
        "one_cells": {"t": d.t.t, "s": d.s.t},
        "two_cells": {
            "eta_t": d.t.eta, "mu_t": d.t.mu,
            "eta_s": d.s.eta, "mu_s": d.s.mu,
            "gamma": d.gamma,
        },
    }


def check_dist_functor(d: DistLawData, budget: int = DEFAULT_BUDGET
                       ) -> LawReport:
    """Audit the Dist relations against concrete law data.

    Agrees with `check_distributive_law` by construction: the relation list
    of Dist is exactly the monad laws plus the four axioms.
    """
    from .presentation import GeneratorMap, check_presented_functor

    gm = dist_generator_map(d)
    gmap = GeneratorMap(objects=gm["objects"], one_cells=gm["one_cells"],
                        two_cells=gm["two_cells"])
    return check_presented_functor(dist_presentation(), d.host, gmap,
                                   budget=budget)


# ---------------------------------------------------------------------------
# mutation testing


def semset_gamma_mutants(d: DistLawData, count: int = 20, seed: int = 7,
                         all_branches: bool = True) -> list[DistLawData]:
    """Single-component mutations of γ that break the law.

    With ``all_branches`` the mutants are filtered so that every one of the
    four equivalent formulations reports a failure.  Mutation sites include
    the s-shifted window objects, which is where the composite-monad branch
    actually evaluates γ.
    """
    from .semset import apply_word, elements, override_cell

    rng = random.Random(seed)
    host = d.host
    sites = list(host.window)
    sites += [apply_word(d.s.t, X) for X in host.window]
    out = []
    pool = []
    for X in sites:
        src = apply_word(d.gamma.src_word, X)
        tgt = apply_word(d.gamma.tgt_word, X)
        se, te = elements(src), elements(tgt)
        if not te:
            continue
        orig = d.gamma.component(X)
        for _ in range(30):
            f = {x: rng.choice(te) for x in se}
            if f != orig:
                pool.append((X, f))
    rng.shuffle(pool)
    for X, f in pool:
        if len(out) >= count:
            break
        mut = DistLawData(s=d.s, t=d.t, gamma=override_cell(d.gamma, X, f))
        if all_branches:
            beck = beck_equivalence_check(mut)
            if all(not ok for ok in beck.verdicts.values()):
                out.append(mut)
        else:
            axioms = check_distributive_law(mut)
            if any(not bool(v) for n, v in axioms.items
                   if n != "gamma natural"):
                out.append(mut)
    return out
