"""Finite V-categories and their canonical constructions.

Objects are referenced by index; `hom[x][y]` holds the quantale element X(x,y).
Equality of V-categories is name-insensitive: same quantale, same size, same
hom matrix under the declared object order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ReflexivityFail, TransitivityFail
from .quantale import Quantale


@dataclass(frozen=True, eq=False)
class VCategory:
    quantale: Quantale
    objects: tuple[str, ...]
    hom: tuple[tuple[int, ...], ...]

    def __eq__(self, other):
        if not isinstance(other, VCategory):
            return NotImplemented
        return self.quantale == other.quantale and self.hom == other.hom

    def __hash__(self):
        return hash((self.quantale.elements, self.hom))

    def __len__(self) -> int:
        return len(self.objects)

    def index(self, name: str) -> int:
        try:
            return self.objects.index(name)
        except ValueError:
            raise KeyError(f"unknown object {name!r}") from None


def validate_vcategory(q: Quantale, objects, hom) -> VCategory:
    """Check the reflexivity and composition inequalities, with witnesses."""
    objects = tuple(objects)
    hom = tuple(tuple(row) for row in hom)
    m = len(objects)
    if len(hom) != m or any(len(r) != m for r in hom):
        raise ValueError("hom matrix has wrong shape")
    for row in hom:
        for v in row:
            if not 0 <= v < q.n:
                raise ValueError(f"hom entry {v} is not a quantale index")
    for x in range(m):
        if not q.le(q.unit, hom[x][x]):
            raise ReflexivityFail(
                f"e is not below hom[{objects[x]}][{objects[x]}]", (objects[x],)
            )
    for x in range(m):
        for y in range(m):
            v = hom[x][y]
            for z in range(m):
                if not q.le(q.mul(v, hom[y][z]), hom[x][z]):
                    raise TransitivityFail(
                        "composition inequality failed",
                        (objects[x], objects[y], objects[z]),
                    )
    return VCategory(q, objects, hom)


def underlying_order(x: VCategory) -> tuple[tuple[bool, ...], ...]:
    """x <= x' iff e <= X(x,x'); reflexive and transitive by the axioms."""
    q = x.quantale
    return tuple(
        tuple(q.le(q.unit, x.hom[a][b]) for b in range(len(x))) for a in range(len(x))
    )


def separation_witness(x: VCategory):
    """A pair of distinct mutually-below objects, or None if separated."""
    order = underlying_order(x)
    for a in range(len(x)):
        for b in range(a + 1, len(x)):
            if order[a][b] and order[b][a]:
                return (a, b)
    return None


def is_separated(x: VCategory) -> bool:
    return separation_witness(x) is None


def opposite(x: VCategory) -> VCategory:
    return VCategory(
        x.quantale,
        x.objects,
        tuple(tuple(x.hom[b][a] for b in range(len(x))) for a in range(len(x))),
    )


def tensor_vcat(x: VCategory, y: VCategory) -> VCategory:
    """Tensor in V-Cat: pair objects, homs multiplied componentwise.

    Pairs are named "(x,y)" and ordered lexicographically by component index,
    so pair (a,b) sits at index a*|Y| + b.
    """
    if x.quantale != y.quantale:
        raise ValueError("tensor of V-categories over different quantales")
    q = x.quantale
    objects = tuple(
        f"({a},{b})" for a in x.objects for b in y.objects
    )
    hom = tuple(
        tuple(
            q.mul(x.hom[a][a2], y.hom[b][b2])
            for a2 in range(len(x))
            for b2 in range(len(y))
        )
        for a in range(len(x))
        for b in range(len(y))
    )
    return VCategory(q, objects, hom)


def pair_index(x: VCategory, y: VCategory, a: int, b: int) -> int:
    return a * len(y) + b


def discrete(q: Quantale, names) -> VCategory:
    names = tuple(names)
    m = len(names)
    return VCategory(
        q,
        names,
        tuple(
            tuple(q.unit if a == b else q.bottom for b in range(m)) for a in range(m)
        ),
    )


def unit_category(q: Quantale) -> VCategory:
    """The monoidal unit: one object with hom e."""
    return discrete(q, ("0",))


def terminal_category(q: Quantale) -> VCategory:
    """One object with hom top."""
    return VCategory(q, ("0",), ((q.top,),))


def quantale_as_vcategory(q: Quantale) -> VCategory:
    """V itself, with hom the residuation."""
    return VCategory(q, q.elements, q.hom)


def separated_reflection(x: VCategory):
    """Quotient by mutual e-below-ness.

    Returns (quotient, class_map) with class_map[i] the quotient index of
    object i.  Representatives are least-index; well-definedness of the hom on
    classes is re-verified.
    """
    q = x.quantale
    order = underlying_order(x)
    m = len(x)
    cls = [-1] * m
    reps = []
    for a in range(m):
        if cls[a] >= 0:
            continue
        cls[a] = len(reps)
        for b in range(a + 1, m):
            if cls[b] < 0 and order[a][b] and order[b][a]:
                cls[b] = len(reps)
        reps.append(a)
    for a in range(m):
        for b in range(m):
            if x.hom[a][b] != x.hom[reps[cls[a]]][reps[cls[b]]]:
                raise TransitivityFail(
                    "hom not constant on equivalence classes",
                    (x.objects[a], x.objects[b]),
                )
    quotient = VCategory(
        q,
        tuple(x.objects[r] for r in reps),
        tuple(tuple(x.hom[r][s] for s in reps) for r in reps),
    )
    return quotient, tuple(cls)
