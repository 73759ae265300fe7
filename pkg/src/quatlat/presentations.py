"""Group presentations: generation from a V4-structure, fixed presentations,
relator evaluation, Reidemeister-Schreier kernels and abelianization.

Words over a presentation's generators are tuples of nonzero signed indices:
+k stands for generator k-1, -k for its inverse.  Relator comparison happens
up to free reduction, cyclic rotation, inversion and replacing g^-1 by g for
generators with a square relator (involutions), which is exactly the
ambiguity left by choosing different orbit representatives.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quaternion import Quaternion
from .smith import invariant_factors, smith_normal_form
from .squares import V4Structure, v4_orbits_of_squares, build_complex

Word = tuple[int, ...]


def free_reduce(word: Word) -> Word:
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def word_inverse(word: Word) -> Word:
    return tuple(-letter for letter in reversed(word))


def exponent_vector(word: Word, n_gens: int) -> list[int]:
    out = [0] * n_gens
    for letter in word:
        out[abs(letter) - 1] += 1 if letter > 0 else -1
    return out


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        n = len(self.generators)
        for rel in self.relators:
            if any(letter == 0 or abs(letter) > n for letter in rel):
                raise ValueError("relator letter out of range")

    def gen_index(self, name: str) -> int:
        return self.generators.index(name) + 1

    def word(self, text: str) -> Word:
        """Build a word from "b1 b2 c1^-1 b2" style text."""
        letters = []
        for token in text.split():
            if token.endswith("^-1"):
                letters.append(-self.gen_index(token[:-3]))
            else:
                letters.append(self.gen_index(token))
        return tuple(letters)

    def involutions(self) -> frozenset[int]:
        """Generator indices g with a literal relator g^2."""
        out = set()
        for rel in self.relators:
            r = free_reduce(rel)
            if len(r) == 2 and r[0] == r[1] and r[0] > 0:
                out.add(r[0])
        return frozenset(out)

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        parts: list[tuple[int, int]] = []  # (letter, count)
        for letter in word:
            if parts and parts[-1][0] == letter:
                parts[-1] = (letter, parts[-1][1] + 1)
            else:
                parts.append((letter, 1))
        chunks = []
        for letter, count in parts:
            name = self.generators[abs(letter) - 1]
            exp = count if letter > 0 else -count
            chunks.append(name if exp == 1 else f"{name}^{exp}")
        return "".join(chunks)

    def text(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(self.word_str(r) for r in self.relators)
        return f"< {gens} | {rels} >"

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "generators": list(self.generators),
            "relators": [list(r) for r in self.relators],
            "relator_text": [self.word_str(r) for r in self.relators],
        }


def _involution_normalize(word: Word, involutions: frozenset[int]) -> Word:
    return free_reduce(tuple(abs(x) if abs(x) in involutions else x for x in word))


NameWord = tuple[tuple[str, int], ...]


def _name_word(presentation: Presentation, word: Word) -> NameWord:
    return tuple(
        (presentation.generators[abs(letter) - 1], 1 if letter > 0 else -1) for letter in word
    )


def canonical_relator(presentation: Presentation, word: Word, involution_names: frozenset[str]) -> NameWord:
    """Canonical form up to free reduction, cyclic rotation, inversion and
    rewriting g^-1 as g for involutive generators; as a name-signed word so
    presentations with differently ordered generator lists compare equal."""

    def normalize(w: NameWord) -> NameWord:
        flipped = tuple((n, 1) if n in involution_names else (n, s) for n, s in w)
        out: list[tuple[str, int]] = []
        for n, s in flipped:
            if out and out[-1][0] == n and out[-1][1] == -s:
                out.pop()
            else:
                out.append((n, s))
        return tuple(out)

    w = normalize(_name_word(presentation, word))
    w_inv = normalize(tuple((n, -s) for n, s in reversed(w)))
    candidates = []
    for base in (w, w_inv):
        for k in range(len(base) or 1):
            candidates.append(base[k:] + base[:k])
    return min(candidates)


def same_presentation(p: Presentation, q: Presentation) -> bool:
    """Same generator names and the same relator set up to rotation,
    inversion and involution rewriting (the ambiguity of orbit choices)."""
    if set(p.generators) != set(q.generators):
        return False
    inv_names = {p.generators[i - 1] for i in p.involutions()} | {
        q.generators[i - 1] for i in q.involutions()
    }
    canon_p = sorted(canonical_relator(p, r, frozenset(inv_names)) for r in p.relators)
    canon_q = sorted(canonical_relator(q, r, frozenset(inv_names)) for r in q.relators)
    return canon_p == canon_q


# -- presentation of the orbifold fundamental group ------------------------


def orbifold_presentation(structure: V4Structure) -> Presentation:
    """Reduced presentation: one generator per inverse-pair on each side, a
    square relator for each self-inverse label, and one relator a b' a'^-1 b^-1
    per Klein-four orbit of squares (inverse labels rewritten as inverses)."""
    generators: list[str] = []
    signed: dict[str, int] = {}
    torsion: list[str] = []
    for names in (structure.a_names, structure.b_names):
        for name in names:
            if name in signed:
                continue
            partner = structure.inv[name]
            generators.append(name)
            idx = len(generators)
            signed[name] = idx
            if partner == name:
                torsion.append(name)
            else:
                signed[partner] = -idx
    relators: list[Word] = [(signed[name], signed[name]) for name in torsion]
    involutions = frozenset(abs(signed[name]) for name in torsion)
    complex_ = build_complex(structure)
    for orbit in v4_orbits_of_squares(complex_):
        a, bp, b, ap = orbit[0]
        raw = (signed[a], signed[bp], -signed[ap], -signed[b])
        relators.append(_involution_normalize(raw, involutions))
    return Presentation(tuple(generators), tuple(relators))


# -- the fixed presentations ------------------------------------------------


def lambda_presentation() -> Presentation:
    p = Presentation(("b1", "b2", "c1", "c2"), ())
    rels = (
        p.word("c1 c1"),
        p.word("c2 c2"),
        p.word("c1 c2 c1^-1 c2^-1"),
        p.word("b1 b2 c1 b2"),
        p.word("b1 c2 b1 b2^-1"),
    )
    return Presentation(p.generators, rels)


def gr_presentation() -> Presentation:
    p = Presentation(("b1", "b2", "c1", "c2", "d"), ())
    rels = (
        p.word("c1 c1"),
        p.word("c2 c2"),
        p.word("d d"),
        p.word("c1 c2 c1^-1 c2^-1"),
        p.word("c1 d c1^-1 d^-1"),
        p.word("c2 d c2^-1 d^-1"),
        p.word("b1 b2 c1 b2"),
        p.word("b1 c2 b1 b2^-1"),
        p.word("d b1 d b1"),
        p.word("d b2 d b2"),
    )
    return Presentation(p.generators, rels)


def gamma_presentation() -> Presentation:
    p = Presentation(("a1", "a2"), ())
    rels = (
        p.word("a2 a1^-1 a2 a2 a1 a2 a1 a2 a2 a1^-1 a2 a1"),
        p.word("a1 a2 a2 a1^-1 a2 a2 a1^-1 a2 a2 a1 a2 a1^-1 a2"),
    )
    return Presentation(p.generators, rels)


def fixed_presentations() -> dict[str, Presentation]:
    return {
        "lambda": lambda_presentation(),
        "gr": gr_presentation(),
        "gamma": gamma_presentation(),
    }


# -- evaluation in the quaternion algebra -----------------------------------


def evaluate_word(word: Word, images: dict[str, Quaternion], presentation: Presentation) -> Quaternion:
    """Multiply out the images; inverse letters use quaternion inversion."""
    sample = next(iter(images.values()))
    result = sample.algebra.one()
    inverses: dict[int, Quaternion] = {}
    for letter in word:
        name = presentation.generators[abs(letter) - 1]
        img = images[name]
        if letter > 0:
            result = result * img
        else:
            if letter not in inverses:
                inverses[letter] = img.inverse()
            result = result * inverses[letter]
    return result


def is_projectively_trivial(q: Quaternion) -> bool:
    return q.is_scalar() and not q.is_zero()


# -- finite quotients and Reidemeister-Schreier -----------------------------


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group as a multiplication table; element 0 is the identity."""

    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.names)
        if any(self.table[0][j] != j or self.table[j][0] != j for j in range(n)):
            raise ValueError("element 0 must be the identity")

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return next(j for j in range(len(self.names)) if self.table[i][j] == 0)

    def order(self) -> int:
        return len(self.names)


def klein_four() -> FiniteGroup:
    # elements 1, v, h, vh
    names = ("1", "v", "h", "vh")
    table = (
        (0, 1, 2, 3),
        (1, 0, 3, 2),
        (2, 3, 0, 1),
        (3, 2, 1, 0),
    )
    return FiniteGroup(names, table)


def trivial_group() -> FiniteGroup:
    return FiniteGroup(("1",), ((0,),))


class InvalidQuotientError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteQuotientMap:
    """Generator images in a finite group, with all relators mapping to 1."""

    presentation: Presentation
    target: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.presentation.generators):
            raise ValueError("one image per generator required")
        for rel in self.presentation.relators:
            if self.apply(rel) != 0:
                raise InvalidQuotientError(f"relator {self.presentation.word_str(rel)} does not map to 1")

    def apply(self, word: Word) -> int:
        out = 0
        for letter in word:
            img = self.images[abs(letter) - 1]
            out = self.target.mul(out, img if letter > 0 else self.target.inv(img))
        return out

    def image_subgroup(self) -> set[int]:
        reached = {0}
        frontier = [0]
        while frontier:
            g = frontier.pop()
            for img in self.images:
                for h in (img, self.target.inv(img)):
                    k = self.target.mul(g, h)
                    if k not in reached:
                        reached.add(k)
                        frontier.append(k)
        return reached


def v4_quotient_of_lambda() -> FiniteQuotientMap:
    """b1, c1 -> the vertical generator; b2, c2 -> the horizontal one."""
    return FiniteQuotientMap(lambda_presentation(), klein_four(), (1, 2, 1, 2))


def reidemeister_schreier(presentation: Presentation, qmap: FiniteQuotientMap) -> Presentation:
    """Presentation of the kernel of the quotient map.

    Cosets are the elements of the (finite) target; the Schreier transversal
    comes from a breadth-first coset tree over positive generator letters.
    Schreier generators are named x{coset}_{gen}; tree generators are dropped
    and every relator is rewritten from every coset, then freely reduced.
    """
    if qmap.presentation is not presentation and qmap.presentation != presentation:
        raise ValueError("quotient map belongs to a different presentation")
    target = qmap.target
    if qmap.image_subgroup() != set(range(target.order())):
        raise InvalidQuotientError("generator images do not generate the target")
    n_gens = len(presentation.generators)
    images = qmap.images

    # breadth-first coset tree: cosets are target elements, root 0
    order = [0]
    tree_edges: set[tuple[int, int]] = set()
    discovered = {0}
    queue = [0]
    while queue:
        coset = queue.pop(0)
        for g in range(n_gens):
            nxt = target.mul(coset, images[g])
            if nxt not in discovered:
                discovered.add(nxt)
                tree_edges.add((coset, g))
                order.append(nxt)
                queue.append(nxt)
    if len(order) != target.order():
        raise InvalidQuotientError("coset enumeration incomplete")

    # Schreier generators: one per (coset, generator) pair off the tree
    gen_name: dict[tuple[int, int], int] = {}
    names = []
    for coset in order:
        for g in range(n_gens):
            if (coset, g) in tree_edges:
                continue
            gen_name[(coset, g)] = len(names) + 1
            names.append(f"x{coset}_{presentation.generators[g]}")

    def rewrite(start: int, word: Word) -> Word:
        out = []
        coset = start
        for letter in word:
            g = abs(letter) - 1
            if letter > 0:
                key = (coset, g)
                coset = target.mul(coset, images[g])
                if key not in tree_edges:
                    out.append(gen_name[key])
            else:
                coset = target.mul(coset, target.inv(images[g]))
                key = (coset, g)
                if key not in tree_edges:
                    out.append(-gen_name[key])
        if coset != start:
            raise InvalidQuotientError("word does not normalize the kernel coset")
        return free_reduce(tuple(out))

    relators = []
    for coset in order:
        for rel in presentation.relators:
            rewritten = rewrite(coset, rel)
            if rewritten:
                relators.append(rewritten)
    return Presentation(tuple(names), tuple(relators))


def simplify_presentation(p: Presentation) -> Presentation:
    """Limited Tietze simplification: free reduction, dropping empty relators,
    and deleting generators forced trivial by length-1 relators.  Anything
    beyond that (full isomorphism testing) is deliberately out of scope."""
    gens = list(p.generators)
    relators = [free_reduce(r) for r in p.relators]
    while True:
        trivial = {abs(r[0]) for r in relators if len(r) == 1}
        if not trivial:
            break
        keep = [i for i in range(1, len(gens) + 1) if i not in trivial]
        remap = {old: new + 1 for new, old in enumerate(keep)}
        gens = [gens[i - 1] for i in keep]
        relators = [
            free_reduce(
                tuple(
                    remap[abs(letter)] * (1 if letter > 0 else -1)
                    for letter in r
                    if abs(letter) not in trivial
                )
            )
            for r in relators
        ]
    return Presentation(tuple(gens), tuple(r for r in relators if r))


# -- abelianization ----------------------------------------------------------


def abelianization(presentation: Presentation) -> tuple[list[int], int]:
    """Invariant factors (> 1) and free rank of the abelianized group,
    via the Smith normal form of the relator exponent matrix."""
    n = len(presentation.generators)
    matrix = [exponent_vector(rel, n) for rel in presentation.relators]
    return invariant_factors(matrix, cols=n)


def abelianization_with_certificate(presentation: Presentation) -> tuple[list[int], int, bool]:
    """Same, but also reports that U*M*V = D held (smith_normal_form asserts it)."""
    n = len(presentation.generators)
    matrix = [exponent_vector(rel, n) for rel in presentation.relators]
    if matrix:
        smith_normal_form(matrix)  # raises if the transform check fails
    factors, rank = invariant_factors(matrix, cols=n)
    return factors, rank, True
