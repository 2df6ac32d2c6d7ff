"""Free associative DG algebras with derivation differentials.

A FreeDGAlgebra is presented by weight-graded generators and the value of
the differential on each generator; the differential extends as a degree
-1 derivation with the Koszul sign d(ab) = d(a)b + (-1)^{|a|} a d(b).
"""

import json
from dataclasses import dataclass

from .rationals import QQ, ZERO, qq, qq_str

__all__ = ["GeneratorSpec", "NCPoly", "FreeDGAlgebra",
           "dual_numbers_resolution", "free_resolution_of_tensor_algebra"]


@dataclass(frozen=True)
class GeneratorSpec:
    """A graded generator: homological degree >= 0, internal weight >= 1."""
    name: str
    hdeg: int
    weight: int

    def __post_init__(self):
        if self.hdeg < 0:
            raise ValueError("hdeg must be nonnegative: %s" % self.name)
        if self.weight < 1:
            raise ValueError("weight must be positive: %s" % self.name)


class NCPoly:
    """A noncommutative polynomial: dict word-of-generator-names -> scalar."""

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for word, c in terms.items():
                c = QQ(c)
                if c:
                    self.terms[tuple(word)] = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def gen(cls, name, coeff=1):
        return cls({(name,): QQ(coeff)})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return NCPoly(out)

    def __sub__(self, other):
        return self + other.scale(QQ(-1))

    def scale(self, c):
        c = QQ(c)
        if not c:
            return NCPoly()
        return NCPoly({w: cc * c for w, cc in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, ZERO) + c1 * c2
                if s:
                    out[w] = s
                elif w in out:
                    del out[w]
        return NCPoly(out)

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w, c in sorted(self.terms.items()):
            word = "*".join(w) if w else "1"
            bits.append("%s %s" % (qq_str(c), word))
        return " + ".join(bits)


class FreeDGAlgebra:
    """Semi-free associative DG algebra on weight-graded generators."""

    def __init__(self, generators, differential=None):
        self.generators = list(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        self.gen_by_name = {g.name: g for g in self.generators}
        self.differential = {}
        for name, poly in (differential or {}).items():
            if name not in self.gen_by_name:
                raise ValueError("differential on unknown generator %r" % name)
            if not poly.is_zero():
                self.differential[name] = poly
        self._validate_grading()

    def _validate_grading(self):
        for name, poly in self.differential.items():
            g = self.gen_by_name[name]
            for word in poly.terms:
                if self.word_hdeg(word) != g.hdeg - 1:
                    raise ValueError(
                        "d(%s) has a term of wrong degree: %s" % (name, word))
                if self.word_weight(word) > g.weight:
                    raise ValueError(
                        "d(%s) has a weight-raising term: %s" % (name, word))

    def word_hdeg(self, word):
        return sum(self.gen_by_name[n].hdeg for n in word)

    def word_weight(self, word):
        return sum(self.gen_by_name[n].weight for n in word)

    def d_gen(self, name):
        return self.differential.get(name, NCPoly())

    def d(self, poly):
        """Derivation differential: d(ab) = d(a)b + (-1)^{|a|} a d(b)."""
        out = NCPoly()
        for word, c in poly.terms.items():
            sign = QQ(1)
            for i, name in enumerate(word):
                dg = self.differential.get(name)
                if dg is not None:
                    pre = NCPoly({word[:i]: sign * c})
                    post = NCPoly({word[i + 1:]: QQ(1)})
                    out = out + pre * dg * post
                if self.gen_by_name[name].hdeg % 2:
                    sign = -sign
        return out

    def check_d_squared(self, deg_cap, weight_cap):
        """True iff d(d(g)) = 0 for all generators within the caps."""
        for g in self.generators:
            if g.hdeg <= deg_cap and g.weight <= weight_cap:
                if not self.d(self.d_gen(g.name)).is_zero():
                    return False
        return True

    # JSON presentation format -------------------------------------------

    def to_json(self):
        return json.dumps({
            "generators": [
                {"name": g.name, "hdeg": g.hdeg, "weight": g.weight}
                for g in self.generators],
            "differential": [
                [name, sorted([list(w), qq_str(c)]
                              for w, c in poly.terms.items())]
                for name, poly in sorted(self.differential.items())],
        }, indent=2)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        gens = [GeneratorSpec(g["name"], g["hdeg"], g["weight"])
                for g in data["generators"]]
        diff = {}
        for name, terms in data.get("differential", []):
            diff[name] = NCPoly({tuple(w): qq(c) for w, c in terms})
        return cls(gens, diff)


def dual_numbers_resolution(i_max):
    """The standard semi-free resolution of k[x]/(x^2).

    Generators: x in degree 0 weight 1 and t_i in degree i weight i+1 for
    1 <= i <= i_max, with d(t_1) = x^2 and
    d(t_i) = sum_j (-1)^j t_j t_{i-1-j} where t_0 stands for x.
    """
    if i_max < 1:
        raise ValueError("i_max must be >= 1")
    gens = [GeneratorSpec("x", 0, 1)]
    gens += [GeneratorSpec("t%d" % i, i, i + 1) for i in range(1, i_max + 1)]

    def tname(j):
        return "x" if j == 0 else "t%d" % j

    diff = {}
    for i in range(1, i_max + 1):
        terms = {}
        for j in range(i):
            word = (tname(j), tname(i - 1 - j))
            terms[word] = terms.get(word, ZERO) + QQ(-1) ** j
        diff["t%d" % i] = NCPoly(terms)
    return FreeDGAlgebra(gens, diff)


def free_resolution_of_tensor_algebra(num_gens):
    """k<x_1..x_n> resolving itself: degree-0 generators, zero differential."""
    gens = [GeneratorSpec("x%d" % (i + 1), 0, 1) for i in range(num_gens)]
    return FreeDGAlgebra(gens, {})
