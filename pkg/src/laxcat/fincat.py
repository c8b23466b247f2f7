"""Finite categories: the concrete host where monad theory is run.

Everything here is table-driven and exhaustively audited at construction
time: composition tables, functor laws, naturality squares.  `CatWorld` is
the host-interface wrapper presenting finite categories, functors and
natural transformations as the objects, 1-cells and 2-cells of a
2-category.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .presentation import Equal, EqualityVerdict, LaxcatError, NotEqual


class InvalidCategory(LaxcatError):
    pass


class InvalidFunctor(LaxcatError):
    pass


class InvalidNatTrans(LaxcatError):
    pass


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FinCategory:
    """Objects, named morphisms, identity table and composition table.

    ``compose[(f, g)]`` is *f then g* (diagram order), i.e. the classical
    composite ``g∘f``.
    """

    name: str
    objects: tuple[str, ...]
    morphisms: tuple[tuple[str, str, str], ...]  # (name, src, tgt)
    identities: tuple[tuple[str, str], ...]      # (object, morphism name)
    compose: tuple[tuple[str, str, str], ...]    # (f, g, f-then-g)

    def __post_init__(self):
        mor = {}
        for n, s, t in self.morphisms:
            if n in mor:
                raise InvalidCategory(f"duplicate morphism {n!r}")
            if s not in self.objects or t not in self.objects:
                raise InvalidCategory(f"morphism {n!r} has unknown endpoint")
            mor[n] = (s, t)
        ids = dict(self.identities)
        if set(ids) != set(self.objects):
            raise InvalidCategory("identities must cover all objects")
        for o, i in ids.items():
            if mor.get(i) != (o, o):
                raise InvalidCategory(f"identity of {o!r} has wrong type")
        comp = {}
        for f, g, h in self.compose:
            comp[(f, g)] = h
        object.__setattr__(self, "_mor", mor)
        object.__setattr__(self, "_ids", ids)
        object.__setattr__(self, "_comp", comp)
        for f, (fs, ft) in mor.items():
            for g, (gs, gt) in mor.items():
                if ft != gs:
                    if (f, g) in comp:
                        raise InvalidCategory(
                            f"composite of non-composable {f!r};{g!r}")
                    continue
                if (f, g) not in comp:
                    raise InvalidCategory(f"missing composite {f!r};{g!r}")
                h = comp[(f, g)]
                if mor.get(h) != (fs, gt):
                    raise InvalidCategory(f"composite {f!r};{g!r} ill-typed")
        for f, (fs, ft) in mor.items():
            if comp[(ids[fs], f)] != f or comp[(f, ids[ft])] != f:
                raise InvalidCategory(f"identity law fails at {f!r}")
        for f, (fs, ft) in mor.items():
            for g, (gs, gt) in mor.items():
                if ft != gs:
                    continue
                for h, (hs, ht) in mor.items():
                    if gt != hs:
                        continue
                    if comp[(comp[(f, g)], h)] != comp[(f, comp[(g, h)])]:
                        raise InvalidCategory(
                            f"associativity fails at {f!r};{g!r};{h!r}")

    # -- accessors ----------------------------------------------------------

    def src(self, f: str) -> str:
        return self._mor[f][0]

    def tgt(self, f: str) -> str:
        return self._mor[f][1]

    def ident(self, o: str) -> str:
        return self._ids[o]

    def then(self, f: str, g: str) -> str:
        return self._comp[(f, g)]

    def hom(self, x: str, y: str) -> list[str]:
        return sorted(n for n, (s, t) in self._mor.items()
                      if s == x and t == y)

    def all_morphisms(self) -> list[str]:
        return sorted(self._mor)

    def nonidentity(self) -> list[str]:
        idset = set(self._ids.values())
        return [m for m in self.all_morphisms() if m not in idset]

    def key(self) -> tuple:
        return (tuple(sorted(self.objects)), tuple(sorted(self.morphisms)),
                tuple(sorted(self.identities)), tuple(sorted(self.compose)))


@dataclass(frozen=True)
class FinFunctor:
    source: FinCategory
    target: FinCategory
    ob_map: tuple[tuple[str, str], ...]
    mor_map: tuple[tuple[str, str], ...]

    def __post_init__(self):
        ob = dict(self.ob_map)
        mm = dict(self.mor_map)
        A, B = self.source, self.target
        if set(ob) != set(A.objects):
            raise InvalidFunctor("object map not total")
        if set(mm) != set(A.all_morphisms()):
            raise InvalidFunctor("morphism map not total")
        for f in A.all_morphisms():
            if B.src(mm[f]) != ob[A.src(f)] or B.tgt(mm[f]) != ob[A.tgt(f)]:
                raise InvalidFunctor(f"image of {f!r} ill-typed")
        for o in A.objects:
            if mm[A.ident(o)] != B.ident(ob[o]):
                raise InvalidFunctor(f"identity of {o!r} not preserved")
        for f in A.all_morphisms():
            for g in A.all_morphisms():
                if A.tgt(f) != A.src(g):
                    continue
                if mm[A.then(f, g)] != B.then(mm[f], mm[g]):
                    raise InvalidFunctor(
                        f"composition not preserved at {f!r};{g!r}")
        object.__setattr__(self, "ob", ob)
        object.__setattr__(self, "mor", mm)

    def on_ob(self, o: str) -> str:
        return self.ob[o]

    def on_mor(self, f: str) -> str:
        return self.mor[f]

    def key(self) -> tuple:
        return (self.source.key(), self.target.key(),
                tuple(sorted(self.ob_map)), tuple(sorted(self.mor_map)))


@dataclass(frozen=True)
class FinNatTrans:
    source: FinFunctor
    target: FinFunctor
    components: tuple[tuple[str, str], ...]  # object -> morphism in target cat

    def __post_init__(self):
        F, G = self.source, self.target
        if F.source.key() != G.source.key() or \
                F.target.key() != G.target.key():
            raise InvalidNatTrans("functors not parallel")
        A, B = F.source, F.target
        comp = dict(self.components)
        if set(comp) != set(A.objects):
            raise InvalidNatTrans("components not total")
        for o in A.objects:
            c = comp[o]
            if B.src(c) != F.on_ob(o) or B.tgt(c) != G.on_ob(o):
                raise InvalidNatTrans(f"component at {o!r} ill-typed")
        for f in A.all_morphisms():
            x, y = A.src(f), A.tgt(f)
            if B.then(F.on_mor(f), comp[y]) != B.then(comp[x], G.on_mor(f)):
                raise InvalidNatTrans(f"naturality fails at {f!r}")
        object.__setattr__(self, "comp", comp)

    def at(self, o: str) -> str:
        return self.comp[o]

    def key(self) -> tuple:
        return (self.source.key(), self.target.key(),
                tuple(sorted(self.components)))


def identity_functor(A: FinCategory) -> FinFunctor:
    return FinFunctor(A, A, tuple((o, o) for o in A.objects),
                      tuple((m, m) for m in A.all_morphisms()))


def compose_functors(F: FinFunctor, G: FinFunctor) -> FinFunctor:
    """F then G."""
    if F.target.key() != G.source.key():
        raise InvalidFunctor("functors not composable")
    return FinFunctor(
        F.source, G.target,
        tuple((o, G.on_ob(F.on_ob(o))) for o in F.source.objects),
        tuple((m, G.on_mor(F.on_mor(m))) for m in F.source.all_morphisms()),
    )


# ---------------------------------------------------------------------------
# the host of finite categories


class CatWorld:
    """The 2-category of finite categories, functors and transformations."""

    def identity_one(self, A: FinCategory) -> FinFunctor:
        return identity_functor(A)

    def comp1(self, F: FinFunctor, G: FinFunctor) -> FinFunctor:
        return compose_functors(F, G)

    def one_src(self, F: FinFunctor) -> FinCategory:
        return F.source

    def one_tgt(self, F: FinFunctor) -> FinCategory:
        return F.target

    def identity_two(self, F: FinFunctor) -> FinNatTrans:
        return FinNatTrans(F, F, tuple(
            (o, F.target.ident(F.on_ob(o))) for o in F.source.objects))

    def two_src(self, t: FinNatTrans) -> FinFunctor:
        return t.source

    def two_tgt(self, t: FinNatTrans) -> FinFunctor:
        return t.target

    def vcomp(self, *cells: FinNatTrans) -> FinNatTrans:
        out = cells[0]
        for c in cells[1:]:
            if out.target.key() != c.source.key():
                raise InvalidNatTrans("vertical composite mismatch")
            B = out.source.target
            out = FinNatTrans(out.source, c.target, tuple(
                (o, B.then(out.at(o), c.at(o)))
                for o in out.source.source.objects))
        return out

    def whisker(self, before: FinFunctor, t: FinNatTrans,
                after: FinFunctor) -> FinNatTrans:
        F, G = t.source, t.target
        nf = compose_functors(compose_functors(before, F), after)
        ng = compose_functors(compose_functors(before, G), after)
        comps = tuple((o, after.on_mor(t.at(before.on_ob(o))))
                      for o in before.source.objects)
        return FinNatTrans(nf, ng, comps)

    def one_cells_equal(self, F: FinFunctor, G: FinFunctor) -> bool:
        return F.key() == G.key()

    def eq2(self, a: FinNatTrans, b: FinNatTrans, budget: int = 0
            ) -> EqualityVerdict:
        if a.key() == b.key():
            return Equal(trace=None, certificate="extensional")
        return NotEqual(certificate="extensional")


# ---------------------------------------------------------------------------
# Eilenberg-Moore and Kleisli


@dataclass
class EMResult:
    category: FinCategory
    forgetful: FinFunctor
    free: FinFunctor
    unit: FinNatTrans
    counit: FinNatTrans
    algebras: list        # (carrier object, action morphism, em object name)
    algebra_of: dict      # em object name -> (carrier, action)
    underlying: dict      # em morphism name -> underlying morphism
    mor_name: dict        # (src obj name, tgt obj name, underlying) -> name


def algebra_name(a: str, act: str) -> str:
    return f"alg({a};{act})"


def em_category(monad) -> EMResult:
    """Algebras of a monad in CatWorld, with the canonical adjunction."""
    from .monads import check_monad

    rep = check_monad(monad)
    if not rep.ok:
        raise LaxcatError(f"monad laws fail: {rep.failures()}")
    A: FinCategory = monad.obj
    t: FinFunctor = monad.t
    mu, eta = monad.mu, monad.eta
    algebras = []
    for a in A.objects:
        for act in A.hom(t.on_ob(a), a):
            if A.then(eta.at(a), act) != A.ident(a):
                continue
            if A.then(t.on_mor(act), act) != A.then(mu.at(a), act):
                continue
            algebras.append((a, act))
    objs = tuple(algebra_name(a, act) for a, act in algebras)
    morphs, names, underlying = [], {}, {}
    for (a1, c1) in algebras:
        for (a2, c2) in algebras:
            o1, o2 = algebra_name(a1, c1), algebra_name(a2, c2)
            for h in A.hom(a1, a2):
                if A.then(t.on_mor(h), c2) != A.then(c1, h):
                    continue
                nm = f"em{len(morphs)}:{h}"
                names[(o1, o2, h)] = nm
                underlying[nm] = h
                morphs.append((nm, o1, o2))
    idents = []
    for (a, c) in algebras:
        o = algebra_name(a, c)
        idents.append((o, names[(o, o, A.ident(a))]))
    comp = []
    for (n1, o1, o1t) in morphs:
        for (n2, o2, o2t) in morphs:
            if o1t != o2:
                continue
            comp.append((n1, n2, names[(o1, o2t, A.then(
                underlying[n1], underlying[n2]))]))
    em = FinCategory(f"EM({A.name})", objs, tuple(morphs), tuple(idents),
                     tuple(comp))
    u = FinFunctor(em, A,
                   tuple((algebra_name(a, c), a) for a, c in algebras),
                   tuple((n, underlying[n]) for n, _, _ in morphs))
    free = FinFunctor(
        A, em,
        tuple((a, algebra_name(t.on_ob(a), mu.at(a))) for a in A.objects),
        tuple((h, names[(algebra_name(t.on_ob(A.src(h)), mu.at(A.src(h))),
                         algebra_name(t.on_ob(A.tgt(h)), mu.at(A.tgt(h))),
                         t.on_mor(h))])
              for h in A.all_morphisms()))
    unit = FinNatTrans(identity_functor(A), compose_functors(free, u),
                       tuple((a, eta.at(a)) for a in A.objects))
    counit = FinNatTrans(
        compose_functors(u, free), identity_functor(em),
        tuple((algebra_name(a, c),
               names[(algebra_name(t.on_ob(a), mu.at(a)),
                      algebra_name(a, c), c)])
              for a, c in algebras))
    return EMResult(em, u, free, unit, counit,
                    [(a, c, algebra_name(a, c)) for a, c in algebras],
                    {algebra_name(a, c): (a, c) for a, c in algebras},
                    underlying, names)


@dataclass
class KleisliResult:
    category: FinCategory
    left: FinFunctor       # A -> Kl
    right: FinFunctor      # Kl -> A
    unit: FinNatTrans
    counit: FinNatTrans


def kleisli_category(monad) -> KleisliResult:
    """Objects of A, maps x ⇝ y are maps x -> t y, composition via mu."""
    from .monads import check_monad

    rep = check_monad(monad)
    if not rep.ok:
        raise LaxcatError(f"monad laws fail: {rep.failures()}")
    A: FinCategory = monad.obj
    t, mu, eta = monad.t, monad.mu, monad.eta
    objs = tuple(f"kl({x})" for x in A.objects)
    morphs = []
    names = {}
    for x in A.objects:
        for y in A.objects:
            for f in A.hom(x, t.on_ob(y)):
                nm = f"kl({f};{x};{y})"
                names[(x, y, f)] = nm
                morphs.append((nm, f"kl({x})", f"kl({y})"))
    idents = tuple((f"kl({x})", names[(x, x, eta.at(x))]) for x in A.objects)

    def kcomp(x, y, z, f, g):
        return A.then(f, A.then(t.on_mor(g), mu.at(z)))

    comp = []
    for (x, y, f) in list(names):
        for (y2, z, g) in list(names):
            if y2 != y:
                continue
            comp.append((names[(x, y, f)], names[(y, z, g)],
                         names[(x, z, kcomp(x, y, z, f, g))]))
    kl = FinCategory(f"Kl({A.name})", objs, tuple(morphs), idents,
                     tuple(comp))
    left = FinFunctor(
        A, kl,
        tuple((x, f"kl({x})") for x in A.objects),
        tuple((h, names[(A.src(h), A.tgt(h), A.then(h, eta.at(A.tgt(h))))])
              for h in A.all_morphisms()))
    right = FinFunctor(
        kl, A,
        tuple((f"kl({x})", t.on_ob(x)) for x in A.objects),
        tuple((names[(x, y, f)],
               A.then(t.on_mor(f), mu.at(y)))
              for (x, y, f) in names))
    unit = FinNatTrans(identity_functor(A),
                       compose_functors(left, right),
                       tuple((x, eta.at(x)) for x in A.objects))
    counit = FinNatTrans(
        compose_functors(right, left), identity_functor(kl),
        tuple((f"kl({x})", names[(t.on_ob(x), x, A.ident(t.on_ob(x)))])
              for x in A.objects))
    return KleisliResult(kl, left, right, unit, counit)


def comparison_functor(adj, monad) -> FinFunctor:
    """The unique comparison k: B -> A^t with u∘k = g and free = k∘f."""
    em = em_category(monad)
    A, B = adj.host.one_src(adj.f), adj.host.one_tgt(adj.f)
    g, counit = adj.g, adj.counit
    ob = tuple((b, algebra_name(g.on_ob(b), g.on_mor(counit.at(b))))
               for b in B.objects)
    alg_of = dict(ob)
    mor = tuple(
        (h, em.mor_name[(alg_of[B.src(h)], alg_of[B.tgt(h)], g.on_mor(h))])
        for h in B.all_morphisms())
    k = FinFunctor(B, em.category, ob, mor)
    # audit the two defining equations
    world = CatWorld()
    if not world.one_cells_equal(compose_functors(k, em.forgetful), g):
        raise LaxcatError("comparison functor: u∘k != g")
    if not world.one_cells_equal(compose_functors(adj.f, k), em.free):
        raise LaxcatError("comparison functor: k∘f != free")
    return k


# ---------------------------------------------------------------------------
# modules and the universal property


def enumerate_functors(X: FinCategory, B: FinCategory) -> list[FinFunctor]:
    """All functors X -> B, by backtracking over generators."""
    out = []
    nonid = X.nonidentity()
    for ob_choice in itertools.product(B.objects, repeat=len(X.objects)):
        ob = dict(zip(X.objects, ob_choice))

        def assign(i, mm):
            if i == len(nonid):
                full = {**mm}
                for o in X.objects:
                    full[X.ident(o)] = B.ident(ob[o])
                ok = True
                for f in X.all_morphisms():
                    for g in X.all_morphisms():
                        if X.tgt(f) != X.src(g):
                            continue
                        if B.then(full[f], full[g]) != full[X.then(f, g)]:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    out.append(FinFunctor(
                        X, B, tuple(ob.items()), tuple(sorted(full.items()))))
                return
            f = nonid[i]
            for im in B.hom(ob[X.src(f)], ob[X.tgt(f)]):
                mm[f] = im
                ok = True
                for g in list(mm):
                    if X.tgt(g) == X.src(f) and X.then(g, f) in mm:
                        if B.then(mm[g], mm[f]) != mm[X.then(g, f)]:
                            ok = False
                    if not ok:
                        break
                if ok:
                    assign(i + 1, mm)
                del mm[f]

        assign(0, {})
    return out


def enumerate_nats(F: FinFunctor, G: FinFunctor) -> list[FinNatTrans]:
    A, B = F.source, F.target
    slots = [(o, B.hom(F.on_ob(o), G.on_ob(o))) for o in A.objects]
    out = []
    for choice in itertools.product(*[h for _, h in slots]):
        comp = dict(zip([o for o, _ in slots], choice))
        try:
            out.append(FinNatTrans(F, G, tuple(sorted(comp.items()))))
        except InvalidNatTrans:
            pass
    return out


def module_category(monad, X: FinCategory) -> FinCategory:
    """Modules (a: X->A, α: ta ⇒ a) and action-compatible transformations."""
    A, t, mu, eta = monad.obj, monad.t, monad.mu, monad.eta
    world = CatWorld()
    mods = []
    for a in enumerate_functors(X, A):
        at = compose_functors(a, t)
        for alpha in enumerate_nats(at, a):
            unit_ok = all(
                A.then(eta.at(a.on_ob(x)), alpha.at(x)) == A.ident(a.on_ob(x))
                for x in X.objects)
            mult_ok = all(
                A.then(t.on_mor(alpha.at(x)), alpha.at(x))
                == A.then(mu.at(a.on_ob(x)), alpha.at(x))
                for x in X.objects)
            if unit_ok and mult_ok:
                mods.append((a, alpha))
    objs = tuple(f"mod{i}" for i in range(len(mods)))
    morphs, idents, comp = [], [], []
    names = {}
    for i, (a, alpha) in enumerate(mods):
        for j, (b, beta) in enumerate(mods):
            for psi in enumerate_nats(a, b):
                if all(A.then(t.on_mor(psi.at(x)), beta.at(x))
                       == A.then(alpha.at(x), psi.at(x)) for x in X.objects):
                    nm = f"mmap({i};{j};{tuple(sorted(psi.components))})"
                    names[(i, j, psi.key())] = (nm, psi)
                    morphs.append((nm, f"mod{i}", f"mod{j}"))
    for i, (a, alpha) in enumerate(mods):
        psi_id = world.identity_two(a)
        idents.append((f"mod{i}", names[(i, i, psi_id.key())][0]))
    for (i, j, k1), (n1, p1) in names.items():
        for (j2, l, k2), (n2, p2) in names.items():
            if j2 != j:
                continue
            comp.append((n1, n2, names[(i, l, world.vcomp(p1, p2).key())][0]))
    return FinCategory(f"Mod({monad.obj.name};{X.name})", objs,
                       tuple(morphs), tuple(idents), tuple(comp))


@dataclass
class UPReport:
    items: list  # (probe name, detail dict, ok)

    @property
    def ok(self) -> bool:
        return all(ok for _, _, ok in self.items)


def em_universal_property_check(monad, probes: list[FinCategory]) -> UPReport:
    """K(X, A^t) ≅ K(X,A)^{K(X,t)} via the explicit comparison functor."""
    em = em_category(monad)
    A, t = monad.obj, monad.t
    items = []
    for X in probes:
        lhs = enumerate_functors(X, em.category)
        act_of = {name: (a, act) for a, act, name in
                  [(a, c, n) for a, c, n in em.algebras]}
        # modules on the right-hand side
        rhs = {}
        for a in enumerate_functors(X, A):
            at = compose_functors(a, t)
            for alpha in enumerate_nats(at, a):
                unit_ok = all(
                    A.then(monad.eta.at(a.on_ob(x)), alpha.at(x))
                    == A.ident(a.on_ob(x)) for x in X.objects)
                mult_ok = all(
                    A.then(t.on_mor(alpha.at(x)), alpha.at(x))
                    == A.then(monad.mu.at(a.on_ob(x)), alpha.at(x))
                    for x in X.objects)
                if unit_ok and mult_ok:
                    rhs[(a.key(), alpha.key())] = (a, alpha)
        # the comparison on objects
        images = {}
        ok = True
        for h in lhs:
            a_ob, alpha_comp = {}, {}
            for x in X.objects:
                a, act = act_of[h.on_ob(x)]
                a_ob[x] = a
                alpha_comp[x] = act
            a_fun = compose_functors(h, em.forgetful)
            alpha = FinNatTrans(compose_functors(a_fun, t), a_fun,
                                tuple(sorted(alpha_comp.items())))
            key = (a_fun.key(), alpha.key())
            if key in images:  # injectivity
                ok = False
            images[key] = h
        surj = set(images) == set(rhs)
        ok = ok and surj
        # hom-set comparison
        hom_ok = True
        for h1 in lhs:
            for h2 in lhs:
                nats = enumerate_nats(h1, h2)
                u1 = compose_functors(h1, em.forgetful)
                u2 = compose_functors(h2, em.forgetful)
                mod_maps = []
                a1 = {x: act_of[h1.on_ob(x)] for x in X.objects}
                a2 = {x: act_of[h2.on_ob(x)] for x in X.objects}
                for psi in enumerate_nats(u1, u2):
                    if all(A.then(t.on_mor(psi.at(x)), a2[x][1])
                           == A.then(a1[x][1], psi.at(x))
                           for x in X.objects):
                        mod_maps.append(psi.key())
                lifted = set()
                for psi in nats:
                    comps = tuple(sorted(
                        (x, em.underlying[psi.at(x)]) for x in X.objects))
                    lifted.add((u1.key(), u2.key(), comps))
                if len(lifted) != len(nats) or \
                        lifted != {(u1.key(), u2.key(), k[2])
                                   for k in mod_maps}:
                    hom_ok = False
        ok = ok and hom_ok
        items.append((X.name, {
            "functors_to_em": len(lhs),
            "modules": len(rhs),
            "objects_bijective": surj and len(images) == len(lhs),
            "homs_bijective": hom_ok,
        }, ok))
    return UPReport(items=items)


# ---------------------------------------------------------------------------
# small-category corpus and probe enumeration


def discrete_category(name: str, objects: tuple[str, ...]) -> FinCategory:
    return FinCategory(
        name, objects,
        tuple((f"id_{o}", o, o) for o in objects),
        tuple((o, f"id_{o}") for o in objects),
        tuple((f"id_{o}", f"id_{o}", f"id_{o}") for o in objects))


def terminal_category() -> FinCategory:
    return discrete_category("1", ("*",))


def chain_category(n: int) -> FinCategory:
    """The poset 0 -> 1 -> ... -> n-1 as a category."""
    objs = tuple(str(i) for i in range(n))
    mor = [(f"le({i};{j})", str(i), str(j))
           for i in range(n) for j in range(i, n)]
    idents = tuple((str(i), f"le({i};{i})") for i in range(n))
    comp = []
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                comp.append((f"le({i};{j})", f"le({j};{k})", f"le({i};{k})"))
    return FinCategory(f"chain{n}", objs, tuple(mor), idents, tuple(comp))


def cospan_category() -> FinCategory:
    """x -> z <- y."""
    objs = ("x", "y", "z")
    mor = [("id_x", "x", "x"), ("id_y", "y", "y"), ("id_z", "z", "z"),
           ("xz", "x", "z"), ("yz", "y", "z")]
    idents = (("x", "id_x"), ("y", "id_y"), ("z", "id_z"))
    comp = [("id_x", "id_x", "id_x"), ("id_y", "id_y", "id_y"),
            ("id_z", "id_z", "id_z"),
            ("id_x", "xz", "xz"), ("xz", "id_z", "xz"),
            ("id_y", "yz", "yz"), ("yz", "id_z", "yz")]
    return FinCategory("cospan", objs, tuple(mor), idents, tuple(comp))


def identity_monad(A: FinCategory):
    from .monads import MonadData

    world = CatWorld()
    t = identity_functor(A)
    return MonadData(world, A, t,
                     world.identity_two(t),
                     world.identity_two(t))


def closure_monad(A: FinCategory, cmap: dict):
    """A closure operator on a thin category as a monad.

    `cmap` sends each object to its closure; the (unique) morphisms supply
    the unit, and idempotence makes the multiplication an identity.
    """
    from .monads import MonadData

    def arrow(x, y):
        h = A.hom(x, y)
        if len(h) != 1:
            raise LaxcatError(f"category not thin at {x!r}->{y!r}")
        return h[0]

    t = FinFunctor(A, A,
                   tuple((o, cmap[o]) for o in A.objects),
                   tuple((m, arrow(cmap[A.src(m)], cmap[A.tgt(m)]))
                         for m in A.all_morphisms()))
    world = CatWorld()
    eta = FinNatTrans(identity_functor(A), t,
                      tuple((o, arrow(o, cmap[o])) for o in A.objects))
    mu = FinNatTrans(compose_functors(t, t), t,
                     tuple((o, arrow(cmap[cmap[o]], cmap[o]))
                           for o in A.objects))
    return MonadData(world, A, t, mu, eta)


def corpus_monads() -> list:
    """Bundled small monads on hosts with at most three objects."""
    chain2 = chain_category(2)
    chain3 = chain_category(3)
    out = [
        ("identity on 1", identity_monad(terminal_category())),
        ("identity on chain2", identity_monad(chain2)),
        ("chain2 closure", closure_monad(chain2, {"0": "1", "1": "1"})),
        ("chain3 ceiling", closure_monad(
            chain3, {"0": "1", "1": "1", "2": "2"})),
        ("cospan closure", closure_monad(
            cospan_category(), {"x": "z", "y": "z", "z": "z"})),
    ]
    return out


def _canonical_key(cat: FinCategory) -> tuple:
    """Minimal relabeling over object and morphism permutations.

    Morphisms are numbered identities-first; the key is the composition
    table under the best relabeling, as a flat integer tuple.
    """
    objs = list(cat.objects)
    nonid = cat.nonidentity()
    no, nm = len(objs), len(nonid)
    best = None
    for operm in itertools.permutations(range(no)):
        onum = {objs[i]: operm[i] for i in range(no)}
        idnum = {cat.ident(o): onum[o] for o in objs}
        for mperm in itertools.permutations(range(nm)):
            mnum = dict(idnum)
            for i in range(nm):
                mnum[nonid[i]] = no + mperm[i]
            shape = sorted((mnum[m], onum[cat.src(m)], onum[cat.tgt(m)])
                           for m in mnum)
            table = sorted((mnum[f], mnum[g], mnum[h])
                           for (f, g), h in cat._comp.items())
            key = (tuple(x for row in shape for x in row),
                   tuple(x for row in table for x in row))
            if best is None or key < best:
                best = key
    return (no, nm) + best


@lru_cache(maxsize=None)
def enumerate_probes(max_objects: int = 2, max_nonid: int = 4
                     ) -> tuple[FinCategory, ...]:
    """All categories with bounded size, deduplicated up to isomorphism."""
    found: dict[tuple, FinCategory] = {}
    for nobj in range(1, max_objects + 1):
        objs = tuple(f"o{i}" for i in range(nobj))
        slots = [(s, t) for s in objs for t in objs]
        for nmor in range(0, max_nonid + 1):
            # morphism names are interchangeable, so endpoint multisets
            # suffice; isomorphic duplicates fall to the canonical key
            for endpoints in itertools.combinations_with_replacement(
                    slots, nmor):
                mor = [(f"m{i}", s, t)
                       for i, (s, t) in enumerate(endpoints)]
                for cat in _composition_tables(objs, mor):
                    key = _canonical_key(cat)
                    if key not in found:
                        found[key] = cat
    return tuple(found[k] for k in sorted(found))


def _composition_tables(objs, nonid_mor):
    """Yield all valid FinCategories on the given quiver."""
    mor = list(nonid_mor) + [(f"id_{o}", o, o) for o in objs]
    src = {n: s for n, s, t in mor}
    tgt = {n: t for n, s, t in mor}
    ident = {o: f"id_{o}" for o in objs}
    pairs = [(f, g) for f, _, _ in mor for g, _, _ in mor
             if tgt[f] == src[g]]
    free_pairs = []
    fixed = {}
    for f, g in pairs:
        if f == ident[src[f]]:
            fixed[(f, g)] = g
        elif g == ident[tgt[g]]:
            fixed[(f, g)] = f
        else:
            free_pairs.append((f, g))

    def candidates(f, g):
        return [n for n, s, t in mor if s == src[f] and t == tgt[g]]

    mor_names = [n for n, _, _ in mor]

    def assoc_violated(full, a, b, c):
        ab = full.get((a, b))
        bc = full.get((b, c))
        if ab is None or bc is None:
            return False
        left = full.get((ab, c))
        right = full.get((a, bc))
        return left is not None and right is not None and left != right

    def backtrack(i, full):
        if i == len(free_pairs):
            for f, g in pairs:
                for h in mor_names:
                    if tgt[g] != src[h]:
                        continue
                    if full[(full[(f, g)], h)] != full[(f, full[(g, h)])]:
                        return
            try:
                yield FinCategory(
                    "probe", tuple(objs), tuple(mor),
                    tuple(ident.items()),
                    tuple((f, g, h) for (f, g), h in full.items()))
            except InvalidCategory:
                pass
            return
        f, g = free_pairs[i]
        for h in candidates(f, g):
            full[(f, g)] = h
            # prune with associativity triples made decidable by the entry
            ok = True
            for (a, b) in free_pairs[:i + 1]:
                for c in mor_names:
                    if tgt[b] == src[c] and assoc_violated(full, a, b, c):
                        ok = False
                        break
                if ok:
                    for e in mor_names:
                        if tgt[e] == src[a] and assoc_violated(full, e, a, b):
                            ok = False
                            break
                if not ok:
                    break
            if ok:
                yield from backtrack(i + 1, full)
            del full[(f, g)]

    yield from backtrack(0, dict(fixed))
