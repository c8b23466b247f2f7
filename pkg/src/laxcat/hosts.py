"""Host 2-categories behind one small interface.

Every checker (monad laws, distributive laws, lax-functor laws) is written
against this interface once.  Implementations:

* `PresentedHost`  -- syntactic: cells are paths / pasting terms of a
  `Presentation`, equality is the bounded word-problem search.
* `CatWorld`       -- semantic: cells are finite categories, functors and
  natural transformations, equality is extensional (see `fincat`).
* `ProductHost`    -- componentwise pairs of two hosts (used for A×B).

A host provides: objects with identities, 1-cell composition (diagram
order: ``comp1(f, g)`` is *f then g*), identity 2-cells, vertical
composition, whiskering by 1-cells on both sides, and equality verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentation import (
    DEFAULT_BUDGET,
    Equal,
    EqualityVerdict,
    NotEqual,
    PastingTerm,
    Path,
    Presentation,
)


class PresentedHost:
    """Cells of a finitely presented 2-category."""

    def __init__(self, presentation: Presentation):
        self.presentation = presentation

    # objects are object names; 1-cells are reduced Paths; 2-cells are terms

    def identity_one(self, obj: str) -> Path:
        return Path(obj, ())

    def comp1(self, f: Path, g: Path) -> Path:
        p = self.presentation
        f, g = p.reduce_path(f), p.reduce_path(g)
        if p.path_target(f) != g.start:
            raise ValueError("comp1: not composable")
        return Path(f.start, f.edges + g.edges)

    def one_src(self, f: Path) -> str:
        return f.start

    def one_tgt(self, f: Path) -> str:
        return self.presentation.path_target(f)

    def identity_two(self, f: Path) -> PastingTerm:
        return self.presentation.identity_term(f)

    def two_src(self, t: PastingTerm) -> Path:
        return self.presentation.reduce_term(t).src

    def two_tgt(self, t: PastingTerm) -> Path:
        return self.presentation.term_target(t)

    def vcomp(self, *cells: PastingTerm) -> PastingTerm:
        return self.presentation.vcomp(*cells)

    def whisker(self, before: Path, t: PastingTerm, after: Path) -> PastingTerm:
        return self.presentation.whisker(before, t, after)

    def hcomp(self, s: PastingTerm, t: PastingTerm) -> PastingTerm:
        """Horizontal composite, s traversed first."""
        p = self.presentation
        s, t = p.reduce_term(s), p.reduce_term(t)
        left = self.whisker(Path(s.src.start, ()), s, t.src)
        right = self.whisker(p.term_target(s), t, Path(self.one_tgt(t.src), ()))
        return self.vcomp(left, right)

    def one_cells_equal(self, f: Path, g: Path) -> bool:
        return self.presentation.paths_equal(f, g)

    def eq2(self, a: PastingTerm, b: PastingTerm,
            budget: int = DEFAULT_BUDGET) -> EqualityVerdict:
        return self.presentation.two_cells_equal(a, b, budget)


class ProductHost:
    """Componentwise product of two hosts; cells are pairs."""

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def identity_one(self, obj):
        return (self.left.identity_one(obj[0]), self.right.identity_one(obj[1]))

    def comp1(self, f, g):
        return (self.left.comp1(f[0], g[0]), self.right.comp1(f[1], g[1]))

    def one_src(self, f):
        return (self.left.one_src(f[0]), self.right.one_src(f[1]))

    def one_tgt(self, f):
        return (self.left.one_tgt(f[0]), self.right.one_tgt(f[1]))

    def identity_two(self, f):
        return (self.left.identity_two(f[0]), self.right.identity_two(f[1]))

    def two_src(self, t):
        return (self.left.two_src(t[0]), self.right.two_src(t[1]))

    def two_tgt(self, t):
        return (self.left.two_tgt(t[0]), self.right.two_tgt(t[1]))

    def vcomp(self, *cells):
        return (self.left.vcomp(*[c[0] for c in cells]),
                self.right.vcomp(*[c[1] for c in cells]))

    def whisker(self, before, t, after):
        return (self.left.whisker(before[0], t[0], after[0]),
                self.right.whisker(before[1], t[1], after[1]))

    def one_cells_equal(self, f, g):
        return (self.left.one_cells_equal(f[0], g[0])
                and self.right.one_cells_equal(f[1], g[1]))

    def eq2(self, a, b, budget: int = DEFAULT_BUDGET) -> EqualityVerdict:
        va = self.left.eq2(a[0], b[0], budget=budget)
        vb = self.right.eq2(a[1], b[1], budget=budget)
        if bool(va) and bool(vb):
            return Equal(trace=None, certificate="product")
        if va.kind == "not_equal" or vb.kind == "not_equal":
            return NotEqual(certificate="product")
        return va if not bool(va) else vb
