"""The free cocompletion D: presheaf enumeration, Yoneda structures, monad data.

Presheaves are V-valued downsets: vectors over the base objects satisfying
X(x,x') * phi(x') <= phi(x).  `enumerate_presheaves` explores them with
backtracking plus bound propagation; the constraint set between any two
coordinates is an order interval, so each assignment tightens a (lower, upper)
pair and dead branches are cut early.  The guard counts explored search nodes
rather than the naive |V|^m candidate space, which pruning makes meaningless.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dist import Distributor, VFunctor
from .errors import SizeExceeded
from .quantale import Quantale
from .vcat import VCategory, tensor_vcat, underlying_order, unit_category

DEFAULT_NODE_CAP = 2_000_000


@dataclass(frozen=True)
class Presheaf:
    base: VCategory
    values: tuple[int, ...]


class PresheafCategory:
    """D(X) together with the enumerated presheaf vectors.

    Objects are ordered lexicographically by value-index vector, so indices
    are reproducible across runs; `index` maps a vector back to its object
    index.  The full hom matrix (`cat`) is quadratic in a count that can run
    to thousands, so it is only materialized on first use; `hom_ij` computes
    single entries without it.
    """

    def __init__(self, base: VCategory, vectors):
        self.base = base
        self.vectors = tuple(tuple(v) for v in vectors)
        self.index = {v: i for i, v in enumerate(self.vectors)}
        self._cat = None

    def __len__(self):
        return len(self.vectors)

    def hom_ij(self, i: int, j: int) -> int:
        return presheaf_hom(self.base.quantale, self.vectors[i], self.vectors[j])

    @property
    def cat(self) -> VCategory:
        if self._cat is None:
            q = self.base.quantale
            hom = tuple(
                tuple(presheaf_hom(q, phi, psi) for psi in self.vectors)
                for phi in self.vectors
            )
            names = tuple(vector_name(self.base, v) for v in self.vectors)
            self._cat = VCategory(q, names, hom)
        return self._cat


def is_presheaf_vector(x: VCategory, values) -> bool:
    q = x.quantale
    m = len(x)
    return all(
        q.le(q.mul(x.hom[a][b], values[b]), values[a])
        for a in range(m)
        for b in range(m)
    )


def presheaf_hom(q: Quantale, phi, psi) -> int:
    """DX(phi, psi) = meet_x [phi(x), psi(x)]."""
    return q.meet_of(q.res(v, w) for v, w in zip(phi, psi))


def vector_name(x: VCategory, values) -> str:
    return "<" + ",".join(x.quantale.elements[v] for v in values) + ">"


def enumerate_presheaves(x: VCategory, node_cap: int = DEFAULT_NODE_CAP) -> PresheafCategory:
    """All presheaves on x, via backtracking with interval propagation."""
    q = x.quantale
    m = len(x)
    n = q.n
    if m == 0:
        vectors = ((),)
    else:
        order = underlying_order(x)
        # most-constrained first: descending out-degree in the underlying order
        var_order = sorted(
            range(m), key=lambda a: (-sum(order[a]), a)
        )
        lower = [q.bottom] * m
        upper = [q.top] * m
        assigned = [-1] * m
        out: list[tuple[int, ...]] = []
        nodes = 0

        def extend(depth):
            nonlocal nodes
            if depth == m:
                out.append(tuple(assigned))
                return
            s = var_order[depth]
            lo, up = lower[s], upper[s]
            hss = x.hom[s][s]
            for w in range(n):
                if not (q.leq[lo][w] and q.leq[w][up]):
                    continue
                if not q.le(q.mul(hss, w), w):
                    continue
                nodes += 1
                if nodes > node_cap:
                    raise SizeExceeded(
                        f"presheaf enumeration exceeded {node_cap} nodes",
                        estimate=node_cap,
                    )
                assigned[s] = w
                saved = []
                ok = True
                for d in range(depth + 1, m):
                    u = var_order[d]
                    saved.append((u, lower[u], upper[u]))
                    nl = q.join[lower[u]][q.mul(x.hom[u][s], w)]
                    nu = q.meet[upper[u]][q.res(x.hom[s][u], w)]
                    lower[u], upper[u] = nl, nu
                    if not q.leq[nl][nu]:
                        ok = False
                        break
                if ok:
                    extend(depth + 1)
                for u, ol, ou in reversed(saved):
                    lower[u], upper[u] = ol, ou
                assigned[s] = -1

        extend(0)
        vectors = tuple(sorted(out))
    return PresheafCategory(x, vectors)


def yoneda(x: VCategory, dx: PresheafCategory) -> VFunctor:
    """y(x) = X(-, x), the column of the hom matrix."""
    m = len(x)
    mapping = tuple(
        dx.index[tuple(x.hom[a][b] for a in range(m))] for b in range(m)
    )
    return VFunctor(x, dx.cat, mapping)


def dist_to_functor(phi: Distributor, dx: PresheafCategory) -> VFunctor:
    """phi: Y -|-> X becomes f(y) = phi(-, y) into D(X)."""
    if phi.cod != dx.base:
        raise ValueError("distributor codomain does not match presheaf base")
    nx = len(phi.cod)
    mapping = tuple(
        dx.index[tuple(phi.mat[a][y] for a in range(nx))] for y in range(len(phi.dom))
    )
    return VFunctor(phi.dom, dx.cat, mapping)


def functor_to_dist(f: VFunctor, dx: PresheafCategory) -> Distributor:
    """Inverse of dist_to_functor: phi(x, y) = f(y)(x)."""
    if f.cod != dx.cat:
        raise ValueError("functor codomain is not the presheaf category")
    return Distributor(
        f.dom,
        dx.base,
        tuple(
            tuple(dx.vectors[f.mapping[y]][a] for y in range(len(f.dom)))
            for a in range(len(dx.base))
        ),
    )


def apply_D(f: VFunctor, phi, dy_base: VCategory):
    """Value vector of (Df)(phi) = f_* . phi, without materializing D(Y)."""
    q = f.dom.quantale
    return tuple(
        q.join_of(
            q.mul(dy_base.hom[b][f.mapping[a]], phi[a]) for a in range(len(f.dom))
        )
        for b in range(len(dy_base))
    )


def D_on_functor(f: VFunctor, dx: PresheafCategory, dy: PresheafCategory) -> VFunctor:
    """D f: D(X) -> D(Y), phi |-> f_* . phi."""
    mapping = tuple(
        dy.index[apply_D(f, phi, dy.base)] for phi in dx.vectors
    )
    return VFunctor(dx.cat, dy.cat, mapping)


def D_inv(f: VFunctor, dx: PresheafCategory, dy: PresheafCategory) -> VFunctor:
    """D_{-1} f: D(Y) -> D(X), psi |-> psi . f (the inverse-image functor)."""
    mapping = tuple(
        dx.index[tuple(psi[f.mapping[a]] for a in range(len(f.dom)))]
        for psi in dy.vectors
    )
    return VFunctor(dy.cat, dx.cat, mapping)


def D_all(f: VFunctor, dx: PresheafCategory, dy: PresheafCategory) -> VFunctor:
    """D_forall f: D(X) -> D(Y), phi |-> meet_x [Y(fx, -), phi(x)]."""
    q = f.dom.quantale
    mapping = tuple(
        dy.index[
            tuple(
                q.meet_of(
                    q.res(f.cod.hom[f.mapping[a]][b], phi[a])
                    for a in range(len(f.dom))
                )
                for b in range(len(dy.base))
            )
        ]
        for phi in dx.vectors
    )
    return VFunctor(dx.cat, dy.cat, mapping)


def mu(x: VCategory, dx: PresheafCategory, ddx: PresheafCategory) -> VFunctor:
    """Monad multiplication D(DX) -> DX, the inverse image of the Yoneda unit."""
    return D_inv(yoneda(x, dx), dx, ddx)


def d0(q: Quantale, d_unit: PresheafCategory) -> VFunctor:
    """Unit comparison 1 -> D(1), picking the presheaf at e."""
    return VFunctor(unit_category(q), d_unit.cat, (d_unit.index[(q.unit,)],))


def d2(
    dx: PresheafCategory, dy: PresheafCategory, dxy: PresheafCategory
) -> VFunctor:
    """d2: D(X) (x) D(Y) -> D(X (x) Y), (phi, psi) |-> phi(x) * psi(y)."""
    q = dx.base.quantale
    dom = tensor_vcat(dx.cat, dy.cat)
    mapping = []
    for phi in dx.vectors:
        for psi in dy.vectors:
            vec = tuple(q.mul(v, w) for v in phi for w in psi)
            mapping.append(dxy.index[vec])
    return VFunctor(dom, dxy.cat, tuple(mapping))


def d2_vector(q: Quantale, phi, psi):
    return tuple(q.mul(v, w) for v in phi for w in psi)


def full_subcategory(x: VCategory, indices) -> VCategory:
    indices = tuple(indices)
    return VCategory(
        x.quantale,
        tuple(x.objects[i] for i in indices),
        tuple(tuple(x.hom[i][j] for j in indices) for i in indices),
    )


def inverter(f: VFunctor, g: VFunctor):
    """Full subcategory on {x : e <= Y(gx, fx)}, for a 2-cell f <= g.

    Returns (subcategory, kept object indices).
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("inverter needs a parallel pair")
    q = f.dom.quantale
    kept = tuple(
        a
        for a in range(len(f.dom))
        if q.le(q.unit, f.cod.hom[g.mapping[a]][f.mapping[a]])
    )
    return full_subcategory(f.dom, kept), kept


def cauchy_completion(x: VCategory, dx: PresheafCategory):
    """Inv(D y, D_forall y) computed by the direct pointwise comparison.

    phi is kept iff DX(psi, phi) <= join_x DX(psi, y x) * phi(x) for all psi;
    this avoids materializing D(DX).  Returns (subcategory of DX, indices).
    """
    q = x.quantale
    m = len(x)
    ycols = [tuple(x.hom[a][b] for a in range(m)) for b in range(m)]
    kept = []
    for i, phi in enumerate(dx.vectors):
        ok = True
        for psi in dx.vectors:
            lhs = presheaf_hom(q, psi, phi)
            rhs = q.join_of(
                q.mul(presheaf_hom(q, psi, ycols[b]), phi[b]) for b in range(m)
            )
            if not q.le(lhs, rhs):
                ok = False
                break
        if ok:
            kept.append(i)
    return full_subcategory(dx.cat, kept), tuple(kept)
