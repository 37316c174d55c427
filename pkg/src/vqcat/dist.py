"""V-functors, distributors, and the distributor calculus.

Distributor matrices are stored cod-major: `mat[y][x]` is phi(y,x) for
phi: X -|-> Y, matching the composition and extension formulas index for
index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundaryMismatch, NotAFunctor, QuantaleMismatch, VCatError
from .vcat import VCategory


@dataclass(frozen=True)
class VFunctor:
    dom: VCategory
    cod: VCategory
    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]


@dataclass(frozen=True)
class Distributor:
    dom: VCategory
    cod: VCategory
    mat: tuple[tuple[int, ...], ...]  # mat[y][x] = phi(y, x)


def validate_functor(dom: VCategory, cod: VCategory, mapping) -> VFunctor:
    if dom.quantale != cod.quantale:
        raise QuantaleMismatch("functor between categories over different quantales")
    mapping = tuple(mapping)
    if len(mapping) != len(dom):
        raise NotAFunctor("object map has wrong length")
    q = dom.quantale
    for fx in mapping:
        if not 0 <= fx < len(cod):
            raise NotAFunctor(f"image index {fx} out of range")
    for x in range(len(dom)):
        for x2 in range(len(dom)):
            if not q.le(dom.hom[x][x2], cod.hom[mapping[x]][mapping[x2]]):
                raise NotAFunctor(
                    "hom inequality failed", (dom.objects[x], dom.objects[x2])
                )
    return VFunctor(dom, cod, mapping)


def is_functor(dom: VCategory, cod: VCategory, mapping) -> bool:
    q = dom.quantale
    for x in range(len(dom)):
        hx = dom.hom[x]
        cx = cod.hom[mapping[x]]
        for x2 in range(len(dom)):
            if not q.le(hx[x2], cx[mapping[x2]]):
                return False
    return True


def identity_functor(x: VCategory) -> VFunctor:
    return VFunctor(x, x, tuple(range(len(x))))


def compose_functors(g: VFunctor, f: VFunctor) -> VFunctor:
    if f.cod is not g.dom and f.cod != g.dom:
        raise BoundaryMismatch("functor composition boundary mismatch")
    return VFunctor(f.dom, g.cod, tuple(g.mapping[fx] for fx in f.mapping))


def functor_hom(f: VFunctor, g: VFunctor) -> int:
    """[X,Y](f,g), the meet of Y(fx, gx) over all x."""
    q = f.dom.quantale
    return q.meet_of(f.cod.hom[f.mapping[x]][g.mapping[x]] for x in range(len(f.dom)))


def validate_distributor(dom: VCategory, cod: VCategory, mat) -> Distributor:
    if dom.quantale != cod.quantale:
        raise QuantaleMismatch("distributor between categories over different quantales")
    mat = tuple(tuple(row) for row in mat)
    if len(mat) != len(cod) or any(len(r) != len(dom) for r in mat):
        raise VCatError("distributor matrix has wrong shape")
    q = dom.quantale
    for y2 in range(len(cod)):
        for y in range(len(cod)):
            left = cod.hom[y2][y]
            for x in range(len(dom)):
                v = q.mul(left, mat[y][x])
                for x2 in range(len(dom)):
                    if not q.le(q.mul(v, dom.hom[x][x2]), mat[y2][x2]):
                        raise VCatError(
                            "bimodule condition failed",
                            (cod.objects[y2], dom.objects[x2]),
                        )
    return Distributor(dom, cod, mat)


def identity_dist(x: VCategory) -> Distributor:
    return Distributor(x, x, x.hom)


def compose_dist(psi: Distributor, phi: Distributor) -> Distributor:
    """Matrix multiplication (psi . phi)(z,x) = join_y psi(z,y)*phi(y,x)."""
    if psi.dom.quantale != phi.dom.quantale:
        raise QuantaleMismatch("distributor composition over different quantales")
    if psi.dom != phi.cod:
        raise BoundaryMismatch("distributor composition boundary mismatch")
    q = psi.dom.quantale
    ny = len(psi.dom)
    mat = tuple(
        tuple(
            q.join_of(q.mul(psi.mat[z][y], phi.mat[y][x]) for y in range(ny))
            for x in range(len(phi.dom))
        )
        for z in range(len(psi.cod))
    )
    return Distributor(phi.dom, psi.cod, mat)


def right_extension(xi: Distributor, phi: Distributor) -> Distributor:
    """(xi <- phi)(z,y) = meet_x [phi(y,x), xi(z,x)], for phi: X-|->Y, xi: X-|->Z."""
    if xi.dom != phi.dom:
        raise BoundaryMismatch("right extension boundary mismatch")
    q = xi.dom.quantale
    nx = len(xi.dom)
    mat = tuple(
        tuple(
            q.meet_of(q.res(phi.mat[y][x], xi.mat[z][x]) for x in range(nx))
            for y in range(len(phi.cod))
        )
        for z in range(len(xi.cod))
    )
    return Distributor(phi.cod, xi.cod, mat)


def right_lifting(psi: Distributor, xi: Distributor) -> Distributor:
    """(psi -> xi)(y,x) = meet_z [psi(z,y), xi(z,x)], for psi: Y-|->Z, xi: X-|->Z."""
    if psi.cod != xi.cod:
        raise BoundaryMismatch("right lifting boundary mismatch")
    q = psi.dom.quantale
    nz = len(psi.cod)
    mat = tuple(
        tuple(
            q.meet_of(q.res(psi.mat[z][y], xi.mat[z][x]) for z in range(nz))
            for x in range(len(xi.dom))
        )
        for y in range(len(psi.dom))
    )
    return Distributor(xi.dom, psi.dom, mat)


def graph(f: VFunctor) -> tuple[Distributor, Distributor]:
    """The adjoint pair f_* -| f^* induced by a V-functor.

    f_*(y,x) = Y(y, fx) goes X -|-> Y;  f^*(x,y) = Y(fx, y) goes Y -|-> X.
    """
    x, y = f.dom, f.cod
    lower = Distributor(
        x, y, tuple(tuple(y.hom[b][f.mapping[a]] for a in range(len(x))) for b in range(len(y)))
    )
    upper = Distributor(
        y, x, tuple(tuple(y.hom[f.mapping[a]][b] for b in range(len(y))) for a in range(len(x)))
    )
    return lower, upper


def dist_le(phi: Distributor, psi: Distributor) -> bool:
    q = phi.dom.quantale
    return all(
        q.le(phi.mat[y][x], psi.mat[y][x])
        for y in range(len(phi.cod))
        for x in range(len(phi.dom))
    )


def is_adjoint_pair(phi: Distributor, psi: Distributor) -> bool:
    """phi -| psi: X <= psi.phi and phi.psi <= Y for phi: X-|->Y, psi: Y-|->X."""
    if phi.dom != psi.cod or phi.cod != psi.dom:
        return False
    return dist_le(identity_dist(phi.dom), compose_dist(psi, phi)) and dist_le(
        compose_dist(phi, psi), identity_dist(phi.cod)
    )


def is_adjoint_functors(f: VFunctor, g: VFunctor) -> bool:
    """f -| g in V-Cat iff f^* = g_*."""
    if f.dom != g.cod or f.cod != g.dom:
        return False
    _, f_upper = graph(f)
    g_lower, _ = graph(g)
    return f_upper.mat == g_lower.mat
