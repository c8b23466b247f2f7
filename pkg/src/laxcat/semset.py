"""A set-semantics host for monads like powerset and maybe.

Powerset towers outgrow any finite full subcategory of FinSet, so no
table-driven category can carry these monads as total endofunctors.  This
host instead works over a small *base window* of finite sets (sizes 0..2 by
default) and represents 1-cells as words of primitive functor symbols and
2-cells as component families given by code.  Components are materialized
on demand; an equality check compares components at every window point
whose evaluation stays under a size cap and reports the points it had to
skip.  All checkers from `monads`/`distlaw` run against this host through
the same interface as the syntactic and table-driven ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .presentation import Equal, EqualityVerdict, LaxcatError, NotEqual, Unknown

SIZE_CAP = 2600


class TooBig(LaxcatError):
    pass


# ---------------------------------------------------------------------------
# set objects and primitive functors

# A set object is ('base', n) or (sym, inner); elements are nested values.


def base(n: int) -> tuple:
    return ("base", n)


class FunctorSym:
    """A primitive endofunctor of finite sets, given by code."""

    name: str

    def size_of(self, n: int) -> int:
        raise NotImplementedError

    def on_elements(self, inner_elems: list) -> list:
        raise NotImplementedError

    def on_fun(self, f: dict) -> dict:
        raise NotImplementedError


class Powerset(FunctorSym):
    name = "P"

    def size_of(self, n):
        return 2 ** n

    def on_elements(self, inner):
        out = []
        for r in range(len(inner) + 1):
            out.extend(frozenset(c) for c in itertools.combinations(inner, r))
        return out

    def on_fun(self, f):
        src = self.on_elements(list(f.keys()))
        return {S: frozenset(f[x] for x in S) for S in src}


class Maybe(FunctorSym):
    name = "M"

    def size_of(self, n):
        return n + 1

    def on_elements(self, inner):
        return [("j", x) for x in inner] + [("n",)]

    def on_fun(self, f):
        out = {("j", x): ("j", y) for x, y in f.items()}
        out[("n",)] = ("n",)
        return out


class TimesE(FunctorSym):
    """X ↦ X×E for a fixed finite set E = {0..k-1}."""

    def __init__(self, k: int):
        self.k = k
        self.name = f"E{k}"

    def size_of(self, n):
        return n * self.k

    def on_elements(self, inner):
        return [(x, e) for x in inner for e in range(self.k)]

    def on_fun(self, f):
        return {(x, e): (f[x], e) for x in f for e in range(self.k)}


SYMBOLS: dict[str, FunctorSym] = {"P": Powerset(), "M": Maybe()}


def register_symbol(sym: FunctorSym) -> str:
    SYMBOLS[sym.name] = sym
    return sym.name


_ELEM_MEMO: dict = {}


def obj_size(obj: tuple, cap: int = SIZE_CAP) -> int:
    """Size of a set object, raising TooBig past the cap."""
    kind = obj[0]
    if kind == "base":
        return obj[1]
    n = SYMBOLS[kind].size_of(obj_size(obj[1], cap))
    if n > cap:
        raise TooBig(f"{obj} has {n} elements")
    return n


def elements(obj: tuple, cap: int = SIZE_CAP) -> list:
    """Materialize the element list of a set object; raises TooBig."""
    obj_size(obj, cap)
    hit = _ELEM_MEMO.get(obj)
    if hit is not None:
        return hit
    kind = obj[0]
    if kind == "base":
        el = list(range(obj[1]))
    else:
        el = SYMBOLS[kind].on_elements(elements(obj[1], cap))
    _ELEM_MEMO[obj] = el
    return el


def apply_word(word: tuple[str, ...], X: tuple) -> tuple:
    for s in word:
        X = (s, X)
    return X


def word_on_fun(word: tuple[str, ...], f: dict, cap: int = SIZE_CAP) -> dict:
    for s in word:
        if SYMBOLS[s].size_of(len(f)) > cap:
            raise TooBig(f"applying {s} to a {len(f)}-point function")
        f = SYMBOLS[s].on_fun(f)
    return f


def identity_fun(obj: tuple, cap: int = SIZE_CAP) -> dict:
    return {x: x for x in elements(obj, cap)}


def compose_funs(f: dict, g: dict) -> dict:
    """f then g."""
    return {x: g[y] for x, y in f.items()}


def all_functions(src: tuple, tgt: tuple, cap: int = SIZE_CAP) -> list[dict]:
    se = elements(src, cap)
    te = elements(tgt, cap)
    if se and not te:
        return []
    out = []
    for choice in itertools.product(te, repeat=len(se)):
        out.append(dict(zip(se, choice)))
    return out


# ---------------------------------------------------------------------------
# 2-cells


def _word_elem(word: tuple[str, ...], base, e):
    """Apply the element-action of a word functor to one element.

    ``base`` is the function to use at the core; the word is peeled from
    the outside in.
    """
    if not word:
        return base(e)
    head, rest = word[-1], word[:-1]
    if head == "P":
        return frozenset(_word_elem(rest, base, x) for x in e)
    if head == "M":
        return ("j", _word_elem(rest, base, e[1])) if e[0] == "j" else e
    sym = SYMBOLS[head]
    if isinstance(sym, TimesE):
        return (_word_elem(rest, base, e[0]), e[1])
    raise LaxcatError(f"unknown symbol {head!r}")


@dataclass
class SemCell:
    """A natural family between word functors, built compositionally.

    Components are evaluated pointwise so that composites whose middle
    objects are huge still materialize only their outer boundary.
    """

    src_word: tuple[str, ...]
    tgt_word: tuple[str, ...]
    node: tuple  # ('prim', name, fn, overrides) | ('id',) | ('v', cells)
                 # | ('wh', before, cell, after)

    def component(self, X: tuple, cap: int = SIZE_CAP) -> dict:
        memo = self.__dict__.setdefault("_memo", {})
        hit = memo.get((X, cap))
        if hit is not None:
            return hit
        dom = elements(apply_word(self.src_word, X), cap)
        out = {e: self.eval_elem(X, e, cap) for e in dom}
        memo[(X, cap)] = out
        return out

    def eval_elem(self, X: tuple, e, cap: int = SIZE_CAP):
        kind = self.node[0]
        if kind == "prim":
            _, name, fn, overrides = self.node
            if X in overrides:
                return overrides[X][e]
            return fn(X)(e)
        if kind == "id":
            return e
        if kind == "v":
            for c in self.node[1]:
                e = c.eval_elem(X, e, cap)
            return e
        if kind == "wh":
            _, bef, cell, aft = self.node
            inner_obj = apply_word(bef, X)
            return _word_elem(aft, lambda x: cell.eval_elem(inner_obj, x, cap),
                              e)
        raise LaxcatError(f"bad cell node {kind!r}")


def prim_cell(name: str, src_word, tgt_word, fn, overrides=None) -> SemCell:
    """`fn(X)` must return the pointwise element action at the object X."""
    return SemCell(tuple(src_word), tuple(tgt_word),
                   ("prim", name, fn, dict(overrides or {})))


def override_cell(cell: SemCell, at: tuple, table: dict) -> SemCell:
    """Replace one component of a primitive cell (mutation testing)."""
    if cell.node[0] != "prim":
        raise LaxcatError("can only override primitive cells")
    _, name, fn, overrides = cell.node
    new = dict(overrides)
    new[at] = dict(table)
    return prim_cell(f"{name}'", cell.src_word, cell.tgt_word, fn, new)


# ---------------------------------------------------------------------------
# the host


class SemSetHost:
    """Window-based host: one 0-cell, word 1-cells, coded 2-cells."""

    def __init__(self, base_sizes=(0, 1, 2), cap: int = SIZE_CAP):
        self.window = tuple(base(n) for n in base_sizes)
        self.cap = cap
        self.obj = "window"

    # -- host interface ------------------------------------------------------

    def identity_one(self, obj) -> tuple:
        return ()

    def comp1(self, f: tuple, g: tuple) -> tuple:
        return tuple(f) + tuple(g)

    def one_src(self, f):
        return self.obj

    def one_tgt(self, f):
        return self.obj

    def identity_two(self, f: tuple) -> SemCell:
        return SemCell(tuple(f), tuple(f), ("id",))

    def two_src(self, t: SemCell) -> tuple:
        return t.src_word

    def two_tgt(self, t: SemCell) -> tuple:
        return t.tgt_word

    def vcomp(self, *cells: SemCell) -> SemCell:
        flat = []
        for c in cells:
            if c.node[0] == "v":
                flat.extend(c.node[1])
            elif c.node[0] != "id":
                flat.append(c)
        if not flat:
            return self.identity_two(cells[0].src_word)
        for x, y in zip(flat, flat[1:]):
            if x.tgt_word != y.src_word:
                raise LaxcatError("vertical composite boundary mismatch")
        if len(flat) == 1:
            return flat[0]
        return SemCell(cells[0].src_word, cells[-1].tgt_word, ("v", flat))

    def whisker(self, before: tuple, t: SemCell, after: tuple) -> SemCell:
        before, after = tuple(before), tuple(after)
        if not before and not after:
            return t
        return SemCell(before + t.src_word + after,
                       before + t.tgt_word + after,
                       ("wh", before, t, after))

    def one_cells_equal(self, f, g) -> bool:
        return tuple(f) == tuple(g)

    def eq2(self, a: SemCell, b: SemCell, budget: int = 0) -> EqualityVerdict:
        if a.src_word != b.src_word or a.tgt_word != b.tgt_word:
            raise LaxcatError("eq2: cells not parallel")
        checked, skipped = [], []
        for X in self.window:
            try:
                fa = a.component(X, self.cap)
                fb = b.component(X, self.cap)
            except TooBig:
                skipped.append(X)
                continue
            if fa != fb:
                wit = next(x for x in fa if fa[x] != fb[x])
                return NotEqual(certificate=f"window@{X}:{wit!r}")
            checked.append(X)
        if not checked:
            return Unknown(steps=0)
        cert = f"window:checked={len(checked)}"
        if skipped:
            cert += f",skipped={len(skipped)}"
        return Equal(trace=None, certificate=cert)

    # -- validity ------------------------------------------------------------

    def window_functions(self):
        for X in self.window:
            for Y in self.window:
                for f in all_functions(X, Y, self.cap):
                    yield X, Y, f

    def is_natural(self, cell: SemCell) -> bool:
        try:
            for X, Y, f in self.window_functions():
                lhs = compose_funs(cell.component(X, self.cap),
                                   word_on_fun(cell.tgt_word, f))
                rhs = compose_funs(word_on_fun(cell.src_word, f),
                                   cell.component(Y, self.cap))
                if lhs != rhs:
                    return False
        except TooBig:
            pass
        return True


# ---------------------------------------------------------------------------
# the standard monads and the maybe-over-powerset swap


def window_algebras(monad) -> list[tuple]:
    """Algebras (carrier, action) of a SemSet monad over the base window."""
    host = monad.host
    out = []
    for X in host.window:
        tX = apply_word(monad.t, X)
        eta = monad.eta.component(X)
        mu = monad.mu.component(X)
        for act in all_functions(tX, X):
            if any(act[eta[x]] != x for x in elements(X)):
                continue
            if compose_funs(word_on_fun(monad.t, act), act) != \
                    compose_funs(mu, act):
                continue
            out.append((X, act))
    return out


def powerset_monad(host: SemSetHost):
    from .monads import MonadData

    eta = prim_cell("eta_P", (), ("P",),
                    lambda X: lambda x: frozenset([x]))
    mu = prim_cell("mu_P", ("P", "P"), ("P",),
                   lambda X: lambda S: frozenset(
                       x for sub in S for x in sub))
    return MonadData(host, host.obj, ("P",), mu, eta)


def maybe_monad(host: SemSetHost):
    from .monads import MonadData

    eta = prim_cell("eta_M", (), ("M",), lambda X: lambda x: ("j", x))
    mu = prim_cell("mu_M", ("M", "M"), ("M",),
                   lambda X: lambda z: z[1] if z[0] == "j" else ("n",))
    return MonadData(host, host.obj, ("M",), mu, eta)


def maybe_over_powerset_swap(host: SemSetHost) -> SemCell:
    """γ: P(X)+1 → P(X+1); a set maps to itself, the new point to {*}."""

    def act(z):
        if z[0] == "j":
            return frozenset(("j", x) for x in z[1])
        return frozenset([("n",)])

    return prim_cell("gamma_MP", ("P", "M"), ("M", "P"), lambda X: act)


def product_comonad(host: SemSetHost, k: int = 2):
    """The comonad X ↦ X×E with duplicate/discard structure."""
    sym = TimesE(k)
    name = register_symbol(sym)
    eps = prim_cell(f"eps_{name}", (name,), (),
                    lambda X: lambda xe: xe[0])
    delta = prim_cell(f"delta_{name}", (name,), (name, name),
                      lambda X: lambda xe: ((xe[0], xe[1]), xe[1]))
    return name, delta, eps


def maybe_over_product_swap(host: SemSetHost, name: str, point: int = 0
                            ) -> SemCell:
    """γ: (X×E)+1 → (X+1)×E, sending the new point to (*, e0)."""

    def act(z):
        if z[0] == "j":
            x, e = z[1]
            return (("j", x), e)
        return (("n",), point)

    return prim_cell(f"gamma_M{name}", (name, "M"), ("M", name),
                     lambda X: act)
