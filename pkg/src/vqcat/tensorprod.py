"""The tensor product of cocomplete categories, via ideal presheaves.

The carrier of A (x)_Sup B is the full subcategory of D(A (x) B) on the
presheaves xi satisfying, for every pair of weights,

    meet_{(a,b)} [phi(a) * psi(b), xi(a,b)]  =  xi(sup phi, sup psi).

The left side always dominates the right, so the membership test can stop
scanning a pair as soon as the running meet has dropped to the target.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cocomplete import (
    CocompleteWitness,
    check_cocomplete,
    is_cocontinuous,
    join_obj,
    representer,
    tensor_obj,
)
from .dist import VFunctor, functor_hom
from .errors import (
    NoSuchColimit,
    NotCocomplete,
    NotCocompleteInput,
    NotSeparated,
    SizeExceeded,
)
from .presheaf import (
    DEFAULT_NODE_CAP,
    PresheafCategory,
    enumerate_presheaves,
    presheaf_hom,
    vector_name,
)
from .vcat import VCategory, opposite, pair_index, quantale_as_vcategory, tensor_vcat


def enumerate_vfunctors(dom: VCategory, cod: VCategory, node_cap: int = DEFAULT_NODE_CAP):
    """All hom-preserving object maps dom -> cod, as mapping tuples.

    Backtracking over images; a partial assignment is cut as soon as one hom
    inequality against an already-placed object fails.
    """
    q = dom.quantale
    m, n = len(dom), len(cod)
    out: list[tuple[int, ...]] = []
    if m == 0:
        return [()]
    img = [0] * m
    nodes = 0

    def place(x):
        nonlocal nodes
        for c in range(n):
            if not q.le(dom.hom[x][x], cod.hom[c][c]):
                continue
            ok = True
            for x2 in range(x):
                if not (
                    q.le(dom.hom[x][x2], cod.hom[c][img[x2]])
                    and q.le(dom.hom[x2][x], cod.hom[img[x2]][c])
                ):
                    ok = False
                    break
            if not ok:
                continue
            nodes += 1
            if nodes > node_cap:
                raise SizeExceeded(
                    f"functor enumeration exceeded {node_cap} nodes", estimate=node_cap
                )
            img[x] = c
            if x + 1 == m:
                out.append(tuple(img))
            else:
                place(x + 1)

    place(0)
    out.sort()
    return out


def enumerate_cocontinuous(
    wa: CocompleteWitness, cod: VCategory, node_cap: int = DEFAULT_NODE_CAP
):
    """All sup-preserving V-functors from wa.base to cod."""
    return [
        f
        for m in enumerate_vfunctors(wa.base, cod, node_cap)
        for f in [VFunctor(wa.base, cod, m)]
        if is_cocontinuous(f, wa)
    ]


def vsup_category(
    wa: CocompleteWitness, cod: VCategory, node_cap: int = DEFAULT_NODE_CAP
):
    """The category of sup-preserving maps wa.base -> cod with the functor hom.

    Returns (category, functors); functors are in lexicographic mapping order.
    """
    funs = enumerate_cocontinuous(wa, cod, node_cap)
    objects = tuple(
        "[" + ",".join(cod.objects[c] for c in f.mapping) + "]" for f in funs
    )
    hom = tuple(tuple(functor_hom(f, g) for g in funs) for f in funs)
    return VCategory(cod.quantale, objects, hom), tuple(funs)


def _support_order(w: CocompleteWitness):
    """Presheaf indices by ascending support size: cheap failures first."""
    q = w.base.quantale
    return tuple(
        sorted(
            range(len(w.dx.vectors)),
            key=lambda i: (sum(1 for v in w.dx.vectors[i] if v != q.bottom), i),
        )
    )


def g_ideal_failure(wa: CocompleteWitness, wb: CocompleteWitness, xi):
    """First weight pair (phi, psi) violating the ideal equation, or None.

    xi is a value vector on tensor_vcat(A, B), pair (a,b) at index a*|B|+b.
    """
    q = wa.base.quantale
    nb = len(wb.base)
    order_b = _support_order(wb)
    for i in _support_order(wa):
        phi = wa.dx.vectors[i]
        sa = wa.sup_index[i]
        for j in order_b:
            psi = wb.dx.vectors[j]
            target = xi[sa * nb + wb.sup_index[j]]
            m = q.top
            done = False
            for a, va in enumerate(phi):
                row = a * nb
                for b, vb in enumerate(psi):
                    m = q.meet[m][q.res(q.mul(va, vb), xi[row + b])]
                    if q.le(m, target):
                        done = True
                        break
                if done:
                    break
            if not done and m != target:
                return phi, psi
    return None


def is_g_ideal(wa: CocompleteWitness, wb: CocompleteWitness, xi) -> bool:
    return g_ideal_failure(wa, wb, xi) is None


@dataclass(frozen=True, eq=False)
class TensorProduct:
    wa: CocompleteWitness
    wb: CocompleteWitness
    ab: VCategory  # tensor_vcat(A, B)
    dab: PresheafCategory  # D(A (x) B)
    ideal_index: tuple[int, ...]  # carrier index -> dab index
    carrier: VCategory
    q_mapping: tuple[int, ...]  # dab index -> carrier index, the reflector
    i: VFunctor  # A (x) B -> carrier, the universal bimorphism
    witness: CocompleteWitness | None  # of the carrier; None if size-guarded

    def ideal_vector(self, k: int):
        return self.dab.vectors[self.ideal_index[k]]

    @property
    def j(self) -> VFunctor:
        """The inclusion carrier -> D(A (x) B); materializes dab.cat."""
        return VFunctor(self.carrier, self.dab.cat, self.ideal_index)

    @property
    def q(self) -> VFunctor:
        """The reflector D(A (x) B) -> carrier; materializes dab.cat."""
        return VFunctor(self.dab.cat, self.carrier, self.q_mapping)


def _witness_for(x: VCategory, name: str) -> CocompleteWitness:
    try:
        return check_cocomplete(x)
    except (NotSeparated, NotCocomplete) as exc:
        raise NotCocompleteInput(f"{name} is not separated cocomplete: {exc}") from exc


def reflect_vector(q, ideal_vectors, values):
    """Least ideal vector above `values`: pointwise meet of the majorants."""
    acc = None
    for xi in ideal_vectors:
        if all(q.le(v, w) for v, w in zip(values, xi)):
            if acc is None:
                acc = list(xi)
            else:
                for p, w in enumerate(xi):
                    acc[p] = q.meet[acc[p]][w]
    if acc is None:
        raise ValueError("no ideal above the given presheaf")
    return tuple(acc)


def build_tensor_product(
    a: VCategory,
    b: VCategory,
    wa: CocompleteWitness | None = None,
    wb: CocompleteWitness | None = None,
    node_cap: int = DEFAULT_NODE_CAP,
    want_carrier_witness: bool = True,
) -> TensorProduct:
    """Construct the tensor of two separated cocomplete categories.

    Invariants (reflector splits the inclusion, the two are adjoint) are
    verified before returning; carrier cocompleteness is verified when its
    presheaf enumeration fits the node cap, else `witness` is None.
    """
    if wa is None:
        wa = _witness_for(a, "left factor")
    if wb is None:
        wb = _witness_for(b, "right factor")
    q = a.quantale
    ab = tensor_vcat(a, b)
    dab = enumerate_presheaves(ab, node_cap)
    ideal_index = tuple(
        i for i, xi in enumerate(dab.vectors) if is_g_ideal(wa, wb, xi)
    )
    pos = {di: k for k, di in enumerate(ideal_index)}
    ideal_vectors = tuple(dab.vectors[di] for di in ideal_index)
    carrier = VCategory(
        q,
        tuple(vector_name(ab, v) for v in ideal_vectors),
        tuple(
            tuple(presheaf_hom(q, u, w) for w in ideal_vectors)
            for u in ideal_vectors
        ),
    )

    q_mapping = tuple(
        pos[dab.index[reflect_vector(q, ideal_vectors, xi)]] for xi in dab.vectors
    )
    i_mapping = tuple(
        q_mapping[dab.index[tuple(ab.hom[x][p] for x in range(len(ab)))]]
        for p in range(len(ab))
    )
    i_fun = VFunctor(ab, carrier, i_mapping)

    for k, di in enumerate(ideal_index):
        if q_mapping[di] != k:
            raise AssertionError("reflector does not split the inclusion")
    for di, xi in enumerate(dab.vectors):
        hrow = carrier.hom[q_mapping[di]]
        for k, w in enumerate(ideal_vectors):
            if hrow[k] != presheaf_hom(q, xi, w):
                raise AssertionError("reflector is not left adjoint to inclusion")

    witness = None
    if want_carrier_witness:
        try:
            witness = check_cocomplete(carrier, node_cap=node_cap)
        except SizeExceeded:
            witness = None
    return TensorProduct(
        wa, wb, ab, dab, ideal_index, carrier, q_mapping, i_fun, witness
    )


def reflector_q(t: TensorProduct, values):
    """Least ideal above a presheaf on A (x) B, as a value vector."""
    return reflect_vector(
        t.ab.quantale,
        tuple(t.dab.vectors[di] for di in t.ideal_index),
        tuple(values),
    )


def is_bimorphism(
    f: VFunctor, wa: CocompleteWitness, wb: CocompleteWitness
) -> bool:
    """Cocontinuity in each variable separately, the other one frozen."""
    a, b = wa.base, wb.base
    nb = len(b)
    for y in range(nb):
        part = VFunctor(a, f.cod, tuple(f.mapping[pair_index(a, b, x, y)] for x in range(len(a))))
        if not is_cocontinuous(part, wa):
            return False
    for x in range(len(a)):
        part = VFunctor(b, f.cod, tuple(f.mapping[pair_index(a, b, x, y)] for y in range(nb)))
        if not is_cocontinuous(part, wb):
            return False
    return True


def extend_bimorphism(
    t: TensorProduct, g: VFunctor, wc: CocompleteWitness | None = None
) -> VFunctor:
    """The sup-preserving map on the carrier restricting to g along i.

    f(xi) = sup_C of c |-> join_p xi(p) * C(c, g p), the colimit of g
    weighted by the ideal xi.
    """
    if g.dom != t.ab:
        raise ValueError("bimorphism domain must be the object tensor")
    c = g.cod
    q = c.quantale
    np = len(t.ab)
    mapping = []
    for di in t.ideal_index:
        xi = t.dab.vectors[di]
        theta = tuple(
            q.join_of(q.mul(xi[p], c.hom[z][g.mapping[p]]) for p in range(np))
            for z in range(len(c))
        )
        if wc is not None:
            mapping.append(wc.sup_vector(theta))
        else:
            z = representer(c, theta)
            if z is None:
                raise NotCocomplete(
                    "extension needs a supremum the codomain lacks", failing=theta
                )
            mapping.append(z)
    return VFunctor(t.carrier, c, tuple(mapping))


def check_universal_property(
    a: VCategory,
    b: VCategory,
    c: VCategory,
    t: TensorProduct | None = None,
    wc: CocompleteWitness | None = None,
    node_cap: int = DEFAULT_NODE_CAP,
) -> bool:
    """Restriction along i and extension are inverse hom-preserving bijections
    between sup-preserving maps on the carrier and two-variable bimorphisms."""
    if t is None:
        t = build_tensor_product(a, b, node_cap=node_cap)
    if t.witness is None:
        raise SizeExceeded("carrier witness unavailable", estimate=len(t.carrier))
    if wc is None:
        wc = _witness_for(c, "test codomain")
    bimorphs = [
        f
        for m in enumerate_vfunctors(t.ab, c, node_cap)
        for f in [VFunctor(t.ab, c, m)]
        if is_bimorphism(f, t.wa, t.wb)
    ]
    cocont = enumerate_cocontinuous(t.witness, c, node_cap)
    cocont_by_map = {f.mapping: f for f in cocont}
    if len(bimorphs) != len(cocont):
        return False
    seen = set()
    for g in bimorphs:
        ghat = extend_bimorphism(t, g, wc)
        if ghat.mapping not in cocont_by_map or ghat.mapping in seen:
            return False
        seen.add(ghat.mapping)
        restricted = tuple(ghat.mapping[t.i.mapping[p]] for p in range(len(t.ab)))
        if restricted != g.mapping:
            return False
    for g1 in bimorphs:
        for g2 in bimorphs:
            h1 = extend_bimorphism(t, g1, wc)
            h2 = extend_bimorphism(t, g2, wc)
            if functor_hom(g1, g2) != functor_hom(h1, h2):
                return False
    return True


def galois_iso(
    a: VCategory,
    b: VCategory,
    wa: CocompleteWitness | None = None,
    wb: CocompleteWitness | None = None,
    node_cap: int = DEFAULT_NODE_CAP,
) -> bool:
    """The carrier is the opposite of the sup-map category into B-opposite.

    Forward: f |-> xi(a,b) = B(b, f a).  Back: f(a) = join_b xi(a,b) (x) b,
    joins and tensors taken in B.  Both composites must be identities and the
    carrier hom must equal the functor hom with the variance flipped.
    """
    if wa is None:
        wa = _witness_for(a, "left factor")
    if wb is None:
        wb = _witness_for(b, "right factor")
    bop = opposite(b)
    wbop = _witness_for(bop, "opposite of right factor")
    funs = enumerate_cocontinuous(wa, bop, node_cap)
    ab = tensor_vcat(a, b)
    dab = enumerate_presheaves(ab, node_cap)
    ideal = [xi for xi in dab.vectors if is_g_ideal(wa, wb, xi)]
    ideal_set = {xi: k for k, xi in enumerate(ideal)}
    if len(funs) != len(ideal):
        return False
    nb = len(b)
    images = []
    for f in funs:
        xi = tuple(
            b.hom[y][f.mapping[x]] for x in range(len(a)) for y in range(nb)
        )
        if xi not in ideal_set:
            return False
        try:
            back = tuple(
                join_obj(
                    b, (tensor_obj(b, xi[x * nb + y], y) for y in range(nb))
                )
                for x in range(len(a))
            )
        except NoSuchColimit:
            return False
        if back != f.mapping:
            return False
        images.append(xi)
    if len(set(images)) != len(ideal):
        return False
    q = a.quantale
    for f, xf in zip(funs, images):
        for g, xg in zip(funs, images):
            if presheaf_hom(q, xf, xg) != functor_hom(g, f):
                return False
    return True


def star_autonomy_check(
    a: VCategory,
    wa: CocompleteWitness | None = None,
    node_cap: int = DEFAULT_NODE_CAP,
) -> bool:
    """Double dualization into V-opposite is inverted by evaluation.

    A* = sup-maps(A, V^op); evaluation a |-> (g |-> g a) must be an
    isomorphism of A onto A**.
    """
    if wa is None:
        wa = _witness_for(a, "category")
    q = a.quantale
    vop = opposite(quantale_as_vcategory(q))
    a1, f1 = vsup_category(wa, vop, node_cap)
    w1 = _witness_for(a1, "first dual")
    a2, f2 = vsup_category(w1, vop, node_cap)
    index2 = {g.mapping: k for k, g in enumerate(f2)}
    if len(a2) != len(a):
        return False
    ev = []
    for x in range(len(a)):
        m = tuple(g.mapping[x] for g in f1)
        if m not in index2:
            return False
        ev.append(index2[m])
    if len(set(ev)) != len(a):
        return False
    for x in range(len(a)):
        for y in range(len(a)):
            if a.hom[x][y] != a2.hom[ev[x]][ev[y]]:
                return False
    return True
