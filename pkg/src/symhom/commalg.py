"""Graded-commutative DG algebras (polynomial tensor exterior) and their
blockwise homology.

Monomials are nondecreasing tuples of generator indices; odd-degree
generators square to zero and reordering follows the Koszul rule.  The
differential must be homogeneous: it lowers homological degree by 1 and
shifts weight by a fixed amount (0 for honest weight gradings, -1 for the
abelianized cobar of a plain Lie algebra).
"""

from .betti import BettiTable
from .freealg import FreeDGAlgebra, GeneratorSpec, NCPoly
from .linalg import SparseMatrix, homology_dim
from .rationals import QQ, ZERO

__all__ = ["CommDGAlgebra", "sort_word", "abelianize"]


def sort_word(word, parities):
    """Sort a word of generator indices into a canonical monomial.

    Returns (sign, monomial) with the Koszul sign of the sorting
    permutation, or (0, None) when an odd generator repeats.
    """
    word = list(word)
    sign = 1
    # insertion sort; each adjacent swap of two odd letters flips the sign
    for i in range(1, len(word)):
        j = i
        while j > 0 and word[j - 1] > word[j]:
            if parities[word[j - 1]] and parities[word[j]]:
                sign = -sign
            word[j - 1], word[j] = word[j], word[j - 1]
            j -= 1
    for i in range(1, len(word)):
        if word[i] == word[i - 1] and parities[word[i]]:
            return 0, None
    return sign, tuple(word)


class CommDGAlgebra:
    """Free graded-commutative DG algebra on weight-graded generators."""

    def __init__(self, generators, differential=None):
        self.generators = list(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        self.index = {g.name: i for i, g in enumerate(self.generators)}
        self.parities = [g.hdeg % 2 for g in self.generators]
        self.differential = {}
        for name, poly in (differential or {}).items():
            i = self.index[name]
            if poly:
                self.differential[i] = poly
        self.weight_shift = self._validate()

    def _validate(self):
        """Check grading of d; return its (uniform) weight shift."""
        shift = None
        for i, poly in self.differential.items():
            g = self.generators[i]
            for mono in poly:
                h = sum(self.generators[j].hdeg for j in mono)
                w = sum(self.generators[j].weight for j in mono)
                if h != g.hdeg - 1:
                    raise ValueError("d(%s) not of degree -1" % g.name)
                s = w - g.weight
                if s > 0:
                    raise ValueError("d(%s) raises weight" % g.name)
                if shift is None:
                    shift = s
                elif shift != s:
                    raise ValueError(
                        "differential is not weight-homogeneous "
                        "(shifts %d and %d)" % (shift, s))
        return 0 if shift is None else shift

    # polynomial arithmetic (dict monomial -> scalar) --------------------

    def mono_hdeg(self, mono):
        return sum(self.generators[i].hdeg for i in mono)

    def mono_weight(self, mono):
        return sum(self.generators[i].weight for i in mono)

    @staticmethod
    def add(p, q):
        out = dict(p)
        for m, c in q.items():
            s = out.get(m, ZERO) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return out

    def mul(self, p, q):
        out = {}
        for m1, c1 in p.items():
            for m2, c2 in q.items():
                sign, m = sort_word(m1 + m2, self.parities)
                if not sign:
                    continue
                c = c1 * c2 * sign
                s = out.get(m, ZERO) + c
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return out

    def d(self, p):
        """Derivation differential of a polynomial."""
        out = {}
        for mono, c in p.items():
            sign = QQ(c)
            for r, i in enumerate(mono):
                dg = self.differential.get(i)
                if dg is not None:
                    term = self.mul({mono[:r]: sign}, dg)
                    term = self.mul(term, {mono[r + 1:]: QQ(1)})
                    out = self.add(out, term)
                if self.parities[i]:
                    sign = -sign
        return out

    def check_d_squared(self, deg_cap, weight_cap):
        for i, g in enumerate(self.generators):
            if g.hdeg <= deg_cap and g.weight <= weight_cap:
                if self.d(self.differential.get(i, {})):
                    return False
        return True

    # bases and homology -------------------------------------------------

    def monomial_basis(self, hdeg, weight):
        """Sorted basis of the (hdeg, weight) block."""
        out = []
        n = len(self.generators)

        def rec(start, h, w, acc):
            if h == 0 and w == 0:
                out.append(tuple(acc))
                return
            for i in range(start, n):
                g = self.generators[i]
                if g.weight > w or g.hdeg > h:
                    continue
                acc.append(i)
                rec(i + 1 if self.parities[i] else i,
                    h - g.hdeg, w - g.weight, acc)
                acc.pop()

        rec(0, hdeg, weight, [])
        out.sort()
        return out

    def monomial_names(self, mono):
        return tuple(self.generators[i].name for i in mono)

    def block_matrix(self, hdeg, weight):
        """Matrix of d from block (hdeg, weight) to (hdeg-1, weight+shift)."""
        src = self.monomial_basis(hdeg, weight)
        tgt = self.monomial_basis(hdeg - 1, weight + self.weight_shift)
        tgt_index = {m: r for r, m in enumerate(tgt)}
        entries = {}
        for c, mono in enumerate(src):
            for m, v in self.d({mono: QQ(1)}).items():
                entries[(tgt_index[m], c)] = v
        return SparseMatrix(len(tgt), len(src), entries)

    def homology_dim_at(self, hdeg, weight, check=True):
        d_out = self.block_matrix(hdeg, weight)
        d_in = self.block_matrix(hdeg + 1, weight - self.weight_shift)
        return homology_dim(d_out, d_in, check=check)

    def homology_table(self, deg_cap, weight_cap, check=True):
        """BettiTable of blockwise homology, exact within the caps."""
        table = BettiTable(deg_cap, weight_cap)
        for h in range(deg_cap + 1):
            for w in range(weight_cap + 1):
                table.set(h, w, self.homology_dim_at(h, w, check=check))
        return table

    def euler_check(self, weight, deg_cap):
        """Per-weight Euler characteristic conservation.

        Valid when the weight-`weight` part of the complex is entirely
        below deg_cap (raises otherwise) and the weight shift is 0.
        """
        if self.weight_shift != 0:
            raise ValueError("Euler check needs a weight-preserving d")
        dims = [len(self.monomial_basis(h, weight))
                for h in range(deg_cap + 2)]
        if dims[deg_cap + 1]:
            raise ValueError("weight %d block extends beyond deg_cap" % weight)
        chi_complex = sum((-1) ** h * dims[h] for h in range(deg_cap + 1))
        chi_homology = sum(
            (-1) ** h * self.homology_dim_at(h, weight)
            for h in range(deg_cap + 1))
        return chi_complex == chi_homology


def abelianize(R):
    """Universal graded-commutative quotient of a FreeDGAlgebra.

    Same generators; each differential image is rewritten into monomial
    normal form with Koszul signs (odd squares vanish).
    """
    gens = list(R.generators)
    parities = [g.hdeg % 2 for g in gens]
    index = {g.name: i for i, g in enumerate(gens)}
    diff = {}
    for name, poly in R.differential.items():
        out = {}
        for word, c in poly.terms.items():
            sign, mono = sort_word([index[n] for n in word], parities)
            if not sign:
                continue
            s = out.get(mono, ZERO) + c * sign
            if s:
                out[mono] = s
            elif mono in out:
                del out[mono]
        if out:
            diff[name] = out
    return CommDGAlgebra(gens, diff)
