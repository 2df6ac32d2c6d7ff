"""Chevalley-Eilenberg complexes of finite-dimensional DG Lie algebras,
the cobar construction on the CE coalgebra, and closed-form homology of
enveloping algebras.

The CE complex is the exterior coalgebra on the suspension: a wedge word
is a sorted tuple of suspended generators (parity = degree + 1), the
differential combines the internal differential of the Lie algebra with
bracket contraction, and the reduced coproduct is the unshuffle with
Koszul signs.  The cobar construction is the free DG algebra on the
desuspended reduced coalgebra; its abelianization is weight-graded by
exterior length (the differential drops it by exactly 1).
"""

from .commalg import CommDGAlgebra, abelianize, sort_word
from .betti import BettiTable
from .freealg import FreeDGAlgebra, GeneratorSpec, NCPoly
from .linalg import SparseMatrix, homology_dim
from .rationals import QQ, ZERO, qq

import json

__all__ = ["DGLie", "CECoalgebra", "ce_complex", "ce_homology",
           "cobar", "hs_env_via_cobar", "hs_env_closed_form",
           "sl2", "heisenberg", "abelian_lie", "nonabelian_2dim",
           "direct_sum"]


class DGLie:
    """Finite-dimensional DG Lie algebra by structure constants.

    bracket maps (i, j) -> sparse vector; pairs may be given in either
    order, the missing one is filled in by graded antisymmetry.
    """

    def __init__(self, names, hdegs, bracket=None, differential=None,
                 validate=True):
        self.names = list(names)
        self.hdegs = list(hdegs)
        if len(self.names) != len(self.hdegs):
            raise ValueError("need one degree per basis name")
        self.dim = len(self.names)
        self.bracket = {}
        for (i, j), vec in (bracket or {}).items():
            vec = {k: QQ(c) for k, c in vec.items() if QQ(c)}
            self._set_bracket(i, j, vec)
        self.differential = {}
        for i, vec in (differential or {}).items():
            vec = {k: QQ(c) for k, c in vec.items() if QQ(c)}
            if vec:
                self.differential[i] = vec
        if validate:
            self.validate()

    def _set_bracket(self, i, j, vec):
        sgn = -QQ(1) if (self.hdegs[i] * self.hdegs[j]) % 2 == 0 else QQ(1)
        flipped = {k: sgn * c for k, c in vec.items()}
        for key, val in (((i, j), vec), ((j, i), flipped)):
            if key in self.bracket and self.bracket[key] != val:
                raise ValueError("inconsistent bracket at %s" % (key,))
        if vec:
            self.bracket[(i, j)] = vec
            if i != j:
                self.bracket[(j, i)] = flipped
        elif (i, j) == (i, i) and (self.hdegs[i] % 2 == 0):
            pass  # [x, x] = 0 forced for even x; nothing to store

    def bkt(self, i, j):
        return self.bracket.get((i, j), {})

    def d_vec(self, vec):
        out = {}
        for i, c in vec.items():
            for k, c2 in self.differential.get(i, {}).items():
                s = out.get(k, ZERO) + c * c2
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return out

    def bkt_vec(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.bkt(i, j).items():
                    s = out.get(k, ZERO) + a * b * c
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return out

    def validate(self):
        def add_scaled(acc, vec, c):
            for k, v in vec.items():
                s = acc.get(k, ZERO) + c * v
                if s:
                    acc[k] = s
                elif k in acc:
                    del acc[k]

        n = self.dim
        for (i, j), vec in self.bracket.items():
            deg = self.hdegs[i] + self.hdegs[j]
            for k in vec:
                if self.hdegs[k] != deg:
                    raise ValueError("bracket [%s,%s] not homogeneous"
                                     % (self.names[i], self.names[j]))
        for i in range(n):
            if self.hdegs[i] % 2 == 0 and self.bkt(i, i):
                raise ValueError("[x,x] != 0 for even %s" % self.names[i])
        # graded Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self.bkt_vec({i: QQ(1)}, self.bkt(j, k))
                    acc = {}
                    add_scaled(acc, self.bkt_vec(self.bkt(i, j), {k: QQ(1)}),
                               QQ(1))
                    sgn = QQ(-1) if (self.hdegs[i] * self.hdegs[j]) % 2 \
                        else QQ(1)
                    add_scaled(acc, self.bkt_vec({j: QQ(1)}, self.bkt(i, k)),
                               sgn)
                    if lhs != acc:
                        raise ValueError(
                            "Jacobi fails on (%s, %s, %s)"
                            % (self.names[i], self.names[j], self.names[k]))
        # d is a derivation of the bracket and squares to zero
        for (i, j), vec in self.bracket.items():
            lhs = self.d_vec(vec)
            acc = {}
            add_scaled(acc, self.bkt_vec(self.differential.get(i, {}),
                                         {j: QQ(1)}), QQ(1))
            sgn = QQ(-1) if self.hdegs[i] % 2 else QQ(1)
            add_scaled(acc, self.bkt_vec({i: QQ(1)},
                                         self.differential.get(j, {})), sgn)
            if lhs != acc:
                raise ValueError("d not a bracket derivation at [%s,%s]"
                                 % (self.names[i], self.names[j]))
        for i in range(n):
            if self.d_vec(self.differential.get(i, {})):
                raise ValueError("d^2 != 0 on %s" % self.names[i])
            for k in self.differential.get(i, {}):
                if self.hdegs[k] != self.hdegs[i] - 1:
                    raise ValueError("d not of degree -1 on %s"
                                     % self.names[i])

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        names = [b["name"] for b in data["basis"]]
        hdegs = [b.get("hdeg", 0) for b in data["basis"]]
        index = {n: i for i, n in enumerate(names)}
        bracket = {}
        for xi, xj, vec in data.get("bracket", []):
            bracket[(index[xi], index[xj])] = {index[xk]: qq(c)
                                               for xk, c in vec.items()}
        diff = {}
        for xi, vec in data.get("differential", {}).items():
            diff[index[xi]] = {index[xk]: qq(c) for xk, c in vec.items()}
        return cls(names, hdegs, bracket, diff)


# suspended exterior coalgebra -------------------------------------------

class CECoalgebra:
    """Wedge words on the suspension of a DG Lie algebra, with the CE
    differential (a coderivation) and the unshuffle reduced coproduct."""

    def __init__(self, lie, cap):
        self.lie = lie
        self.cap = cap  # max homological degree of wedge words kept
        self.parities = [(h + 1) % 2 for h in lie.hdegs]
        self.hdeg_xi = [h + 1 for h in lie.hdegs]

    def word_hdeg(self, word):
        return sum(self.hdeg_xi[i] for i in word)

    def words_of_hdeg(self, h):
        """All wedge words of homological degree h (sorted tuples)."""
        out = []
        n = self.lie.dim

        def rec(start, hh, acc):
            if hh == 0:
                out.append(tuple(acc))
                return
            for i in range(start, n):
                if self.hdeg_xi[i] > hh:
                    continue
                acc.append(i)
                rec(i + 1 if self.parities[i] else i, hh - self.hdeg_xi[i],
                    acc)
                acc.pop()

        rec(0, h, [])
        out.sort()
        return out

    def _add(self, acc, word, coeff):
        sign, mono = sort_word(word, self.parities)
        if not sign:
            return
        c = coeff * sign
        s = acc.get(mono, ZERO) + c
        if s:
            acc[mono] = s
        elif mono in acc:
            del acc[mono]

    def diff(self, word):
        """CE differential of a wedge word: dict word -> coeff."""
        out = {}
        # internal part: replace one letter by the suspension of its d
        sgn = QQ(1)
        for r, i in enumerate(word):
            for k, c in self.lie.differential.get(i, {}).items():
                self._add(out, word[:r] + (k,) + word[r + 1:], sgn * c)
            if self.parities[i]:
                sgn = -sgn
        # bracket part: contract a pair to the front
        for r in range(len(word)):
            pre_r = sum(self.parities[u] for u in word[:r])
            sign_r = QQ(-1) if (self.parities[word[r]] * pre_r) % 2 \
                else QQ(1)
            for s in range(r + 1, len(word)):
                pre_s = sum(self.parities[u] for u in word[:s]) \
                    - self.parities[word[r]]
                sign_s = QQ(-1) if (self.parities[word[s]] * pre_s) % 2 \
                    else QQ(1)
                rest = word[:r] + word[r + 1:s] + word[s + 1:]
                coeff = sign_r * sign_s
                if self.parities[word[r]] == 0:
                    coeff = -coeff
                for k, c in self.lie.bkt(word[r], word[s]).items():
                    self._add(out, (k,) + rest, coeff * c)
        return out

    def reduced_coproduct(self, word):
        """Proper unshuffle splits: dict (word1, word2) -> coeff."""
        out = {}
        ell = len(word)
        for mask in range(1, (1 << ell) - 1):
            left, right = [], []
            for pos in range(ell):
                (left if mask >> pos & 1 else right).append(word[pos])
            # Koszul sign of pulling the left letters to the front
            sign = 1
            for pos in range(ell):
                if mask >> pos & 1 and self.parities[word[pos]]:
                    before = sum(self.parities[word[q]]
                                 for q in range(pos)
                                 if not (mask >> q & 1))
                    if before % 2:
                        sign = -sign
            key = (tuple(left), tuple(right))
            s = out.get(key, ZERO) + QQ(sign)
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        return out

    def check_d_squared(self):
        for h in range(self.cap + 1):
            for w in self.words_of_hdeg(h):
                acc = {}
                for w2, c in self.diff(w).items():
                    for w3, c2 in self.diff(w2).items():
                        s = acc.get(w3, ZERO) + c * c2
                        if s:
                            acc[w3] = s
                        elif w3 in acc:
                            del acc[w3]
                if acc:
                    return False
        return True


def ce_complex(a, cap):
    C = CECoalgebra(a, cap)
    if not C.check_d_squared():
        raise ValueError("CE differential does not square to zero")
    return C


def _ce_block(C, h):
    src = C.words_of_hdeg(h)
    tgt = C.words_of_hdeg(h - 1)
    ti = {w: r for r, w in enumerate(tgt)}
    entries = {}
    for c, w in enumerate(src):
        for w2, v in C.diff(w).items():
            entries[(ti[w2], c)] = v
    return SparseMatrix(len(tgt), len(src), entries)


def ce_homology(a, cap):
    """Dimensions of CE homology H_i(a; k) for i = 0..cap (unreduced)."""
    C = ce_complex(a, cap + 1)
    dims = []
    for h in range(cap + 1):
        mid = len(C.words_of_hdeg(h))
        d_out = _ce_block(C, h) if h > 0 else SparseMatrix(0, mid)
        dims.append(homology_dim(d_out, _ce_block(C, h + 1)))
    return dims


def _ce_homology_bigraded(a, cap):
    """Homology class counts by (hdeg, exterior length).

    Needs a length-homogeneous differential: pure bracket (length -1) or
    pure internal (length 0); raises otherwise.
    """
    if a.bracket and a.differential:
        raise ValueError(
            "bigraded CE homology needs a pure bracket or pure internal "
            "differential")
    shift = -1 if a.bracket else 0
    C = ce_complex(a, cap + 1)
    by_len = {}
    for h in range(cap + 2):
        for w in C.words_of_hdeg(h):
            by_len.setdefault((h, len(w)), []).append(w)

    def block(h, ell):
        src = sorted(by_len.get((h, ell), []))
        tgt = sorted(by_len.get((h - 1, ell + shift), []))
        ti = {w: r for r, w in enumerate(tgt)}
        entries = {}
        for c, w in enumerate(src):
            for w2, v in C.diff(w).items():
                entries[(ti[w2], c)] = v
        return SparseMatrix(len(tgt), len(src), entries)

    out = {}
    lengths = sorted({ell for (_, ell) in by_len})
    for h in range(cap + 1):
        for ell in lengths:
            mid = len(by_len.get((h, ell), []))
            if mid == 0 and not by_len.get((h + 1, ell - shift)):
                continue
            dim = homology_dim(block(h, ell), block(h + 1, ell - shift))
            if dim:
                out[(h, ell)] = dim
    return out


# cobar ------------------------------------------------------------------

def _word_name(C, word):
    return "[" + "^".join(C.lie.names[i] for i in word) + "]"


def cobar(C, deg_cap, weight_cap, flip_coproduct_sign=False):
    """Free DG algebra on the desuspended reduced CE coalgebra.

    Generators are wedge words (degree = CE degree - 1, weight =
    exterior length); the differential combines the CE differential with
    the quadratic part from the reduced coproduct.  Flipping the
    coproduct sign is a negative control: d^2 != 0.
    """
    gens = []
    gen_words = []
    for h in range(1, deg_cap + 2):
        for w in C.words_of_hdeg(h):
            if len(w) <= weight_cap:
                gens.append(GeneratorSpec(_word_name(C, w), h - 1, len(w)))
                gen_words.append(w)
    keep = {w for w in gen_words}
    diff = {}
    for w in gen_words:
        name = _word_name(C, w)
        terms = {}

        def add(word_tuple, coeff):
            s = terms.get(word_tuple, ZERO) + coeff
            if s:
                terms[word_tuple] = s
            elif word_tuple in terms:
                del terms[word_tuple]

        for w2, c in C.diff(w).items():
            if w2 in keep or len(w2) <= weight_cap:
                add((_word_name(C, w2),), -c)
        for (w1, w2), c in C.reduced_coproduct(w).items():
            s1, m1 = sort_word(w1, C.parities)
            s2, m2 = sort_word(w2, C.parities)
            if not s1 or not s2:
                continue
            sgn = QQ(s1 * s2) * c
            # the Koszul factor from desuspending the left tensor leg;
            # omitting it (the "flipped" control) must break d^2 = 0
            if not flip_coproduct_sign and C.word_hdeg(m1) % 2:
                sgn = -sgn
            add((_word_name(C, m1), _word_name(C, m2)), -sgn)
        poly = NCPoly(terms)
        if not poly.is_zero():
            diff[name] = poly
    return FreeDGAlgebra(gens, diff)


def hs_env_via_cobar(a, deg_cap, weight_cap):
    """Betti table of the abelianized cobar construction on CE(a)."""
    C = ce_complex(a, deg_cap + 2)
    omega = cobar(C, deg_cap, weight_cap)
    S = abelianize(omega)
    return S.homology_table(deg_cap, weight_cap)


def hs_env_closed_form(a, deg_cap, weight_cap):
    """Free graded-commutative algebra on reduced CE homology, shifted
    down by one; expanded into a Betti table through the caps."""
    classes = _ce_homology_bigraded(a, deg_cap + 1)
    gens = []
    count = 0
    for (h, ell), dim in sorted(classes.items()):
        if h == 0:
            continue  # the unreduced H_0 = k contributes the algebra unit
        for r in range(dim):
            count += 1
            gens.append(GeneratorSpec("u%d_%d_%d" % (h, ell, r),
                                      h - 1, ell))
    S = CommDGAlgebra(gens)
    table = BettiTable(deg_cap, weight_cap)
    for h in range(deg_cap + 1):
        for w in range(weight_cap + 1):
            table.set(h, w, len(S.monomial_basis(h, w)))
    return table


# built-in Lie algebras --------------------------------------------------

def sl2():
    """sl(2): e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    return DGLie(
        ["e", "f", "h"], [0, 0, 0],
        {(2, 0): {0: 2}, (2, 1): {1: -2}, (0, 1): {2: 1}})


def heisenberg():
    """Heisenberg algebra: [x, y] = z central."""
    return DGLie(["x", "y", "z"], [0, 0, 0], {(0, 1): {2: 1}})


def abelian_lie(n, hdeg=0):
    return DGLie(["v%d" % (i + 1) for i in range(n)], [hdeg] * n)


def nonabelian_2dim():
    """The unique nonabelian 2-dimensional Lie algebra: [x, y] = y."""
    return DGLie(["x", "y"], [0, 0], {(0, 1): {1: 1}})


def direct_sum(a, b):
    names = ["a." + n for n in a.names] + ["b." + n for n in b.names]
    hdegs = list(a.hdegs) + list(b.hdegs)
    off = a.dim
    bracket = {}
    for (i, j), vec in a.bracket.items():
        bracket[(i, j)] = dict(vec)
    for (i, j), vec in b.bracket.items():
        bracket[(i + off, j + off)] = {k + off: c for k, c in vec.items()}
    diff = {i: dict(v) for i, v in a.differential.items()}
    for i, v in b.differential.items():
        diff[i + off] = {k + off: c for k, c in v.items()}
    return DGLie(names, hdegs, bracket, diff)
