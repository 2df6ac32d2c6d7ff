"""Associative algebras given by structure constants.

Vectors are sparse dicts basis-index -> scalar.  An algebra may carry a
weight grading (multiplication adds weights); graded algebras of infinite
total dimension (polynomial and tensor algebras) are represented by a
basis truncated at a weight bound, with products beyond the bound
discarded -- sound for any weight-graded computation below the bound.
"""

import json

from .rationals import QQ, ZERO, qq, qq_str

__all__ = ["FinDimAlgebra", "dual_numbers_algebra", "matrix_algebra",
           "upper_triangular_algebra", "truncated_poly_algebra",
           "free_tensor_algebra"]


class FinDimAlgebra:
    """Unital associative algebra with explicit structure constants."""

    def __init__(self, basis, unit, mult, weights=None, augmentation=None,
                 truncation=None, validate=True):
        self.basis = list(basis)
        self.index = {b: i for i, b in enumerate(self.basis)}
        if len(self.index) != len(self.basis):
            raise ValueError("duplicate basis names")
        self.unit = {self.index[b]: QQ(c) for b, c in unit.items() if QQ(c)}
        self.mult = {}
        for (i, j), vec in mult.items():
            vec = {k: QQ(c) for k, c in vec.items() if QQ(c)}
            if vec:
                self.mult[(i, j)] = vec
        self.weights = None
        if weights is not None:
            self.weights = [0] * len(self.basis)
            for b, w in weights.items():
                self.weights[self.index[b]] = w
        self.augmentation = None
        if augmentation is not None:
            self.augmentation = {self.index[b]: QQ(c)
                                 for b, c in augmentation.items()}
        self.truncation = truncation
        if truncation is not None and self.weights is None:
            raise ValueError("truncation requires a weight grading")
        if validate:
            self.validate()

    @property
    def dim(self):
        return len(self.basis)

    def basis_weight(self, i):
        return self.weights[i] if self.weights is not None else None

    def multiply_basis(self, i, j):
        return self.mult.get((i, j), {})

    def multiply(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.multiply_basis(i, j).items():
                    s = out.get(k, ZERO) + a * b * c
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return out

    def multiply_word(self, indices):
        """Ordered product of basis elements; empty word gives the unit."""
        out = dict(self.unit)
        for i in indices:
            out = self.multiply(out, {i: QQ(1)})
        return out

    def _within_truncation(self, *indices):
        if self.truncation is None:
            return True
        return sum(self.weights[i] for i in indices) <= self.truncation

    def validate(self):
        """Unitality, associativity, and weight additivity on the basis."""
        for b in range(self.dim):
            e = {b: QQ(1)}
            if self.multiply(self.unit, e) != e or \
                    self.multiply(e, self.unit) != e:
                raise ValueError("unit fails on %s" % self.basis[b])
        for i in range(self.dim):
            for j in range(self.dim):
                if self.weights is not None:
                    wij = self.weights[i] + self.weights[j]
                    for k in self.multiply_basis(i, j):
                        if self.weights[k] != wij:
                            raise ValueError(
                                "product %s*%s not weight-homogeneous"
                                % (self.basis[i], self.basis[j]))
                for k in range(self.dim):
                    if not self._within_truncation(i, j, k):
                        continue
                    lhs = self.multiply(self.multiply_basis(i, j), {k: QQ(1)})
                    rhs = self.multiply({i: QQ(1)}, self.multiply_basis(j, k))
                    if lhs != rhs:
                        raise ValueError(
                            "associativity fails on (%s, %s, %s)"
                            % (self.basis[i], self.basis[j], self.basis[k]))

    # augmented structure (needed by the bar pipeline) --------------------

    def unit_basis_index(self):
        """Index of the unit when it is a single basis element, else None."""
        if len(self.unit) == 1:
            (i, c), = self.unit.items()
            if c == 1:
                return i
        return None

    def augmented_split(self):
        """(unit index, augmentation-ideal indices); raises if unavailable.

        Requires the unit to be a basis element and every other basis
        element to lie in the kernel of the augmentation.
        """
        if self.augmentation is None:
            raise ValueError("algebra has no augmentation")
        u = self.unit_basis_index()
        if u is None:
            raise ValueError("unit is not a basis element")
        if self.augmentation.get(u, ZERO) != 1:
            raise ValueError("augmentation(unit) != 1")
        ideal = []
        for i in range(self.dim):
            if i == u:
                continue
            if self.augmentation.get(i, ZERO):
                raise ValueError(
                    "basis element %s not in the augmentation ideal"
                    % self.basis[i])
            ideal.append(i)
        return u, ideal

    def ideal_product(self, indices, unit_index):
        """Product of augmentation-ideal basis elements, as an ideal vector.

        Returns dict index -> scalar with no unit component (checked).
        """
        if not indices:
            raise ValueError("empty product lands outside the ideal")
        out = {indices[0]: QQ(1)}
        for i in indices[1:]:
            out = self.multiply(out, {i: QQ(1)})
        if unit_index in out:
            raise ValueError("product of ideal elements has a unit part")
        return out

    # serialization -------------------------------------------------------

    def to_json(self):
        mult = []
        for (i, j), vec in sorted(self.mult.items()):
            mult.append([self.basis[i], self.basis[j],
                         {self.basis[k]: qq_str(c)
                          for k, c in sorted(vec.items())}])
        data = {
            "basis": self.basis,
            "unit": {self.basis[i]: qq_str(c)
                     for i, c in sorted(self.unit.items())},
            "mult": mult,
        }
        if self.weights is not None:
            data["weights"] = {b: self.weights[i]
                               for b, i in self.index.items()}
        if self.augmentation is not None:
            data["augmentation"] = {self.basis[i]: qq_str(c)
                                    for i, c in sorted(self.augmentation.items())}
        if self.truncation is not None:
            data["truncation"] = self.truncation
        return json.dumps(data, indent=2)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        basis = data["basis"]
        index = {b: i for i, b in enumerate(basis)}
        mult = {}
        for bi, bj, vec in data["mult"]:
            mult[(index[bi], index[bj])] = {index[bk]: qq(c)
                                            for bk, c in vec.items()}
        return cls(
            basis,
            {b: qq(c) for b, c in data["unit"].items()},
            mult,
            weights=data.get("weights"),
            augmentation=({b: qq(c) for b, c in data["augmentation"].items()}
                          if "augmentation" in data else None),
            truncation=data.get("truncation"),
        )


def dual_numbers_algebra():
    """k[x]/(x^2), augmented and weight-graded with weight(x) = 1."""
    return FinDimAlgebra(
        ["1", "x"],
        {"1": 1},
        {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {}},
        weights={"1": 0, "x": 1},
        augmentation={"1": 1, "x": 0},
    )


def matrix_algebra(n=2):
    """Full matrix algebra M_n(k) on the elementary matrices."""
    basis = ["e%d%d" % (a + 1, b + 1) for a in range(n) for b in range(n)]
    idx = {b: i for i, b in enumerate(basis)}
    mult = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    i = idx["e%d%d" % (a + 1, b + 1)]
                    j = idx["e%d%d" % (c + 1, d + 1)]
                    if b == c:
                        mult[(i, j)] = {idx["e%d%d" % (a + 1, d + 1)]: 1}
                    else:
                        mult[(i, j)] = {}
    unit = {"e%d%d" % (a + 1, a + 1): 1 for a in range(n)}
    return FinDimAlgebra(basis, unit, mult)


def upper_triangular_algebra():
    """Upper-triangular 2x2 matrices: e11, e22, e12."""
    basis = ["e11", "e22", "e12"]
    idx = {b: i for i, b in enumerate(basis)}
    table = {
        ("e11", "e11"): {"e11": 1},
        ("e22", "e22"): {"e22": 1},
        ("e11", "e12"): {"e12": 1},
        ("e12", "e22"): {"e12": 1},
    }
    mult = {}
    for a in basis:
        for b in basis:
            mult[(idx[a], idx[b])] = {idx[k]: v for k, v
                                      in table.get((a, b), {}).items()}
    return FinDimAlgebra(basis, {"e11": 1, "e22": 1}, mult)


def truncated_poly_algebra(weight_cap):
    """k[x] with basis x^i, i <= weight_cap; weight(x^i) = i."""
    basis = ["1"] + ["x^%d" % i for i in range(1, weight_cap + 1)]

    def name(i):
        return "1" if i == 0 else "x^%d" % i

    mult = {}
    for i in range(weight_cap + 1):
        for j in range(weight_cap + 1):
            if i + j <= weight_cap:
                mult[(i, j)] = {i + j: 1}
            else:
                mult[(i, j)] = {}
    return FinDimAlgebra(
        basis, {"1": 1}, mult,
        weights={name(i): i for i in range(weight_cap + 1)},
        augmentation={name(i): (1 if i == 0 else 0)
                      for i in range(weight_cap + 1)},
        truncation=weight_cap,
    )


def free_tensor_algebra(num_gens, weight_cap):
    """Tensor algebra on num_gens letters, truncated beyond weight_cap."""
    letters = [chr(ord("a") + i) for i in range(num_gens)]
    words = [""]
    frontier = [""]
    for _ in range(weight_cap):
        frontier = [w + l for w in frontier for l in letters]
        words.extend(frontier)
    names = ["1" if w == "" else w for w in words]
    idx = {n: i for i, n in enumerate(names)}

    def name(w):
        return "1" if w == "" else w

    mult = {}
    for wi in words:
        for wj in words:
            w = wi + wj
            if len(w) <= weight_cap:
                mult[(idx[name(wi)], idx[name(wj)])] = {idx[name(w)]: 1}
            else:
                mult[(idx[name(wi)], idx[name(wj)])] = {}
    return FinDimAlgebra(
        names, {"1": 1}, mult,
        weights={name(w): len(w) for w in words},
        augmentation={name(w): (1 if w == "" else 0) for w in words},
        truncation=weight_cap,
    )
