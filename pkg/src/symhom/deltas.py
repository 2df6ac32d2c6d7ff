"""The symmetric category Delta-S: normal forms, composition,
factorization, the symmetric bar action, and degree-0 coequalizers.

A morphism [n] -> [m] is stored in tensor-of-monomials normal form: m+1
sequences over the variables {0..n}, each variable occurring exactly
once.  Composition is substitution; the unique (permutation, monotone)
factorization is computed on demand.
"""

from dataclasses import dataclass, field

from .linalg import QuotientSpace, SparseMatrix
from .rationals import QQ, ZERO

__all__ = [
    "DeltaSMorphism", "ArityMismatchError", "identity", "compose",
    "factorize", "transposition", "rotation", "face_embedding",
    "multiply_map", "parse_morphism", "format_morphism",
    "SymBarElement", "b_sym_action", "FreeGroupHom", "psi_sym",
    "CyclicMorphism", "cyclic_rotation", "hochschild_face",
    "cyclic_degeneracy", "cyclic_to_sym",
    "abelianization_quotient", "hs0_coequalizer", "hc0_coequalizer",
]


class ArityMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class DeltaSMorphism:
    """Morphism [n] -> [m] as a tuple of m+1 monomials over {0..n}."""
    monomials: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "monomials", tuple(tuple(m) for m in self.monomials))
        seen = sorted(v for m in self.monomials for v in m)
        if seen != list(range(len(seen))):
            raise ValueError("monomials must use each variable exactly once")
        if not self.monomials:
            raise ValueError("target arity must be at least 1")

    @property
    def source_arity(self):
        return sum(len(m) for m in self.monomials)

    @property
    def target_arity(self):
        return len(self.monomials)

    @property
    def source_n(self):
        return self.source_arity - 1

    @property
    def target_n(self):
        return self.target_arity - 1

    def __str__(self):
        return format_morphism(self)


def identity(n):
    return DeltaSMorphism(tuple((i,) for i in range(n + 1)))


def transposition(n, i):
    """The adjacent transposition (i, i+1) as an automorphism of [n]."""
    if not 0 <= i < n:
        raise IndexError("transposition index out of range")
    mon = [(j,) for j in range(n + 1)]
    mon[i], mon[i + 1] = mon[i + 1], mon[i]
    return DeltaSMorphism(tuple(mon))


def rotation(n):
    """The cyclic rotation t: a_0 x ... x a_n -> a_n x a_0 x ... x a_{n-1}."""
    return DeltaSMorphism(((n,),) + tuple((j,) for j in range(n)))


def face_embedding(n, i):
    """The injective monotone map [n-1] -> [n] skipping slot i."""
    if not 0 <= i <= n:
        raise IndexError("face index out of range")
    mon = []
    for l in range(n + 1):
        if l < i:
            mon.append((l,))
        elif l == i:
            mon.append(())
        else:
            mon.append((l - 1,))
    return DeltaSMorphism(tuple(mon))


def multiply_map(n, i):
    """The monotone surjection [n] -> [n-1] merging slots i and i+1."""
    if not 0 <= i < n:
        raise IndexError("merge index out of range")
    mon = []
    for l in range(n):
        if l < i:
            mon.append((l,))
        elif l == i:
            mon.append((i, i + 1))
        else:
            mon.append((l + 1,))
    return DeltaSMorphism(tuple(mon))


def permutation_morphism(sigma):
    """The automorphism sending variable j to slot sigma[j]."""
    n1 = len(sigma)
    inv = [0] * n1
    for j, s in enumerate(sigma):
        inv[s] = j
    return DeltaSMorphism(tuple((inv[l],) for l in range(n1)))


def compose(g, f):
    """g o f: substitute f's monomials for g's variables."""
    if f.target_arity != g.source_arity:
        raise ArityMismatchError(
            "cannot compose: f targets arity %d, g expects %d"
            % (f.target_arity, g.source_arity))
    mon = []
    for gm in g.monomials:
        word = []
        for var in gm:
            word.extend(f.monomials[var])
        mon.append(tuple(word))
    return DeltaSMorphism(tuple(mon))


def factorize(f):
    """Unique factorization f = g o sigma, g monotone in Delta.

    Returns (sigma, g): sigma[j] is the position of variable j in the
    concatenation of f's monomials; g has the same fiber sizes with
    consecutive variables.
    """
    sigma = [0] * f.source_arity
    pos = 0
    for m in f.monomials:
        for var in m:
            sigma[var] = pos
            pos += 1
    mon = []
    start = 0
    for m in f.monomials:
        mon.append(tuple(range(start, start + len(m))))
        start += len(m)
    return tuple(sigma), DeltaSMorphism(tuple(mon))


# textual syntax ---------------------------------------------------------

def format_morphism(f):
    """Render e.g. (x1 x0)|(x2); an empty monomial prints as 1."""
    bits = []
    for m in f.monomials:
        if m:
            bits.append("(%s)" % " ".join("x%d" % v for v in m))
        else:
            bits.append("1")
    return "|".join(bits)


def parse_morphism(text):
    """Parse the textual syntax produced by format_morphism."""
    mon = []
    for chunk in text.strip().split("|"):
        chunk = chunk.strip()
        if chunk in ("1", "()"):
            mon.append(())
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError("bad monomial %r" % chunk)
        inner = chunk[1:-1].split()
        word = []
        for tok in inner:
            if not tok.startswith("x"):
                raise ValueError("bad variable %r" % tok)
            word.append(int(tok[1:]))
        mon.append(tuple(word))
    return DeltaSMorphism(tuple(mon))


# the symmetric bar construction ----------------------------------------

class SymBarElement:
    """Element of A^{(n+1)}: dict word-of-basis-indices -> scalar."""

    def __init__(self, arity, tensor=None):
        self.arity = arity
        self.tensor = {}
        for word, c in (tensor or {}).items():
            word = tuple(word)
            if len(word) != arity:
                raise ValueError("tensor word of wrong arity")
            c = QQ(c)
            if c:
                self.tensor[word] = c

    @classmethod
    def pure(cls, word):
        return cls(len(word), {tuple(word): QQ(1)})

    def __add__(self, other):
        if self.arity != other.arity:
            raise ArityMismatchError("cannot add different arities")
        out = dict(self.tensor)
        for w, c in other.tensor.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return SymBarElement(self.arity, out)

    def scale(self, c):
        return SymBarElement(
            self.arity, {w: cc * QQ(c) for w, cc in self.tensor.items()})

    def __eq__(self, other):
        return (isinstance(other, SymBarElement)
                and self.arity == other.arity
                and self.tensor == other.tensor)

    def __repr__(self):
        return "SymBarElement(%d, %r)" % (self.arity, self.tensor)


def b_sym_action(A, f, v):
    """Apply a Delta-S morphism to a symmetric bar element over A.

    Each output slot is the ordered product in A of the inputs named by
    the corresponding monomial; an empty monomial contributes the unit.
    """
    if v.arity != f.source_arity:
        raise ArityMismatchError(
            "element arity %d, morphism expects %d"
            % (v.arity, f.source_arity))
    out = {}
    for word, c in v.tensor.items():
        # per-slot products, each a sparse vector in A
        slots = [A.multiply_word([word[var] for var in m])
                 for m in f.monomials]
        # distribute over the tensor factors
        partial = [((), c)]
        for slot in slots:
            partial = [(w + (i,), cc * a)
                       for w, cc in partial for i, a in slot.items()]
        for w, cc in partial:
            s = out.get(w, ZERO) + cc
            if s:
                out[w] = s
            elif w in out:
                del out[w]
    return SymBarElement(f.target_arity, out)


# the functor to free groups --------------------------------------------

@dataclass(frozen=True)
class FreeGroupHom:
    """Homomorphism of free groups given by positive words on generators."""
    domain_rank: int
    codomain_rank: int
    images: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(
            self, "images", tuple(tuple(w) for w in self.images))
        if len(self.images) != self.domain_rank:
            raise ValueError("need one image word per domain generator")
        for w in self.images:
            for v in w:
                if not 0 <= v < self.codomain_rank:
                    raise ValueError("image uses unknown generator")

    def then(self, other):
        """Composite self followed by other (domains must chain)."""
        if self.codomain_rank != other.domain_rank:
            raise ValueError("cannot compose free group homs")
        images = []
        for w in self.images:
            word = []
            for v in w:
                word.extend(other.images[v])
            images.append(tuple(word))
        return FreeGroupHom(self.domain_rank, other.codomain_rank,
                            tuple(images))


def psi_sym(f):
    """The contravariant assignment <m+1> -> <n+1>, X_j -> j-th monomial."""
    return FreeGroupHom(f.target_arity, f.source_arity, f.monomials)


# the cyclic category inside Delta-S ------------------------------------

@dataclass(frozen=True)
class CyclicMorphism:
    """A Delta^op morphism (stored via its Delta-S image) with a rotation."""
    delta_part: DeltaSMorphism
    r: int

    def __post_init__(self):
        n = self.delta_part.source_n
        if not 0 <= self.r <= n:
            raise ValueError("rotation out of range")


def cyclic_rotation(n, r=1):
    return CyclicMorphism(identity(n), r % (n + 1))


def hochschild_face(n, i):
    """Face d_i of the cyclic bar construction, as a Delta-S morphism.

    Inner faces merge slots i, i+1; the last face wraps around:
    a_0 x ... x a_n -> (a_n a_0) x a_1 x ... x a_{n-1}.
    """
    if not 0 <= i <= n:
        raise IndexError("face index out of range")
    if i < n:
        return multiply_map(n, i)
    mon = [(n, 0)] + [(j,) for j in range(1, n)]
    return DeltaSMorphism(tuple(mon))


def cyclic_degeneracy(n, i):
    """Degeneracy s_i (insert the unit after slot i) as a Delta-S morphism."""
    return face_embedding(n + 1, i + 1)


def cyclic_to_sym(c):
    """Image of a cyclic morphism under the inclusion into Delta-S."""
    n = c.delta_part.source_n
    f = identity(n)
    for _ in range(c.r):
        f = compose(rotation(n), f)
    return compose(c.delta_part, f)


# degree-0 coequalizers --------------------------------------------------

def abelianization_quotient(A, max_word_len=3):
    """A modulo the span of w - w^sigma over short products of basis
    elements: the degree-0 symmetric quotient (A_ab as a vector space).
    """
    labels = list(range(A.dim))
    relations = []
    words = [[(i,) for i in range(A.dim)]]
    for _ in range(max_word_len - 1):
        words.append([w + (i,) for w in words[-1] for i in range(A.dim)])
    for length_words in words[1:]:
        for w in length_words:
            base = A.multiply_word(w)
            for i in range(len(w) - 1):
                sw = list(w)
                sw[i], sw[i + 1] = sw[i + 1], sw[i]
                other = A.multiply_word(sw)
                rel = dict(base)
                for k, cc in other.items():
                    s = rel.get(k, ZERO) - cc
                    if s:
                        rel[k] = s
                    elif k in rel:
                        del rel[k]
                if rel:
                    relations.append(rel)
    return QuotientSpace(labels, relations)


def _coequalizer_generators(arity_cap, cyclic):
    """Generating morphisms with both endpoints at arity <= arity_cap.

    Yields pairs (n, f) with f a morphism out of [n].  For the symmetric
    coequalizer: adjacent transpositions, merges, unit insertions.  For
    the cyclic one: rotations, Hochschild faces, degeneracies.
    """
    ncap = arity_cap - 1
    for n in range(ncap + 1):
        if cyclic:
            if n >= 1:
                yield n, rotation(n)
            for i in range(n + 1):
                if n >= 1:
                    yield n, hochschild_face(n, i)
            if n + 1 <= ncap:
                for i in range(n + 1):
                    yield n, cyclic_degeneracy(n, i)
        else:
            for i in range(n):
                yield n, transposition(n, i)
            for i in range(n):
                if n >= 1:
                    yield n, multiply_map(n, i)
            if n + 1 <= ncap:
                for i in range(n + 2):
                    yield n, face_embedding(n + 1, i)


def _coequalizer_space(A, arity_cap, cyclic):
    ncap = arity_cap - 1
    labels = []
    for n in range(ncap + 1):
        words = [()]
        for _ in range(n + 1):
            words = [w + (i,) for w in words for i in range(A.dim)]
        labels.extend((n, w) for w in words)
    relations = []
    for n, f in _coequalizer_generators(arity_cap, cyclic):
        m = f.target_n
        for w in _all_words(A.dim, n + 1):
            image = b_sym_action(A, f, SymBarElement.pure(w))
            rel = {(n, w): QQ(1)}
            for iw, c in image.tensor.items():
                key = (m, iw)
                s = rel.get(key, ZERO) - c
                if s:
                    rel[key] = s
                elif key in rel:
                    del rel[key]
            if rel:
                relations.append(rel)
    return QuotientSpace(labels, relations)


def _all_words(dim, length):
    words = [()]
    for _ in range(length):
        words = [w + (i,) for w in words for i in range(dim)]
    return words


def hs0_coequalizer(A, arity_cap):
    """Truncated coequalizer computing HS_0(A).

    Returns (dimension, comparison matrix), the matrix expressing the
    induced surjection onto the degree-0 symmetric quotient of A (columns
    indexed by the coequalizer quotient basis, rows by the quotient of A).
    """
    if arity_cap < 1:
        raise ValueError("arity_cap must be >= 1")
    quo = _coequalizer_space(A, arity_cap, cyclic=False)
    aab = abelianization_quotient(A)
    entries = {}
    row_index = {lab: r for r, lab in enumerate(aab.basis)}
    for c, (n, w) in enumerate(quo.basis):
        product = A.multiply_word(w)
        for lab, v in aab.project(product).items():
            entries[(row_index[lab], c)] = v
    comparison = SparseMatrix(aab.dim, quo.dim, entries)
    return quo.dim, comparison


def hc0_coequalizer(A, arity_cap):
    """Truncated coequalizer over the cyclic category: dim A/[A, A]."""
    if arity_cap < 1:
        raise ValueError("arity_cap must be >= 1")
    return _coequalizer_space(A, arity_cap, cyclic=True).dim
