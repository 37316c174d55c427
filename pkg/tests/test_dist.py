"""Functors, distributors, composition, extensions/liftings, graphs."""

import itertools

import pytest

from vqcat.dist import (
    Distributor,
    VFunctor,
    compose_dist,
    compose_functors,
    dist_le,
    functor_hom,
    graph,
    identity_dist,
    identity_functor,
    is_adjoint_functors,
    is_adjoint_pair,
    right_extension,
    right_lifting,
    validate_distributor,
    validate_functor,
)
from vqcat.errors import NotAFunctor, VCatError
from vqcat.quantale import builtin
from vqcat.vcat import quantale_as_vcategory, validate_vcategory


def all_functors(dom, cod):
    for mapping in itertools.product(range(len(cod)), repeat=len(dom)):
        try:
            yield validate_functor(dom, cod, mapping)
        except NotAFunctor:
            continue


def all_distributors(dom, cod):
    q = dom.quantale
    cells = len(cod) * len(dom)
    for flat in itertools.product(range(q.n), repeat=cells):
        mat = tuple(
            tuple(flat[y * len(dom) + x] for x in range(len(dom)))
            for y in range(len(cod))
        )
        try:
            yield validate_distributor(dom, cod, mat)
        except VCatError:
            continue


def test_validate_functor_witness(chain2):
    # the decreasing swap on the 2-chain is not monotone
    with pytest.raises(NotAFunctor):
        validate_functor(chain2, chain2, (1, 0))
    validate_functor(chain2, chain2, (0, 1))
    validate_functor(chain2, chain2, (1, 1))


def test_constant_to_top_is_functor(chain2):
    f = validate_functor(chain2, chain2, (1, 1))
    assert functor_hom(identity_functor(chain2), f) == 1


def test_functor_hom_reflexive_and_composes(v_luk):
    fs = list(all_functors(v_luk, v_luk))
    q = v_luk.quantale
    for f in fs:
        assert q.le(q.unit, functor_hom(f, f))
    for f, g, h in itertools.product(fs, repeat=3):
        lhs = q.mul(functor_hom(f, g), functor_hom(g, h))
        assert q.le(lhs, functor_hom(f, h))


def test_identity_dist_unit_law(chain2):
    for phi in all_distributors(chain2, chain2):
        assert compose_dist(phi, identity_dist(chain2)).mat == phi.mat
        assert compose_dist(identity_dist(chain2), phi).mat == phi.mat


def test_compose_associative_small(v_luk):
    one = validate_vcategory(v_luk.quantale, ("s",), ((v_luk.quantale.unit,),))
    ds = list(all_distributors(one, one))
    for a, b, c in itertools.product(ds, repeat=3):
        lhs = compose_dist(a, compose_dist(b, c))
        rhs = compose_dist(compose_dist(a, b), c)
        assert lhs.mat == rhs.mat


def test_extension_adjunction_exhaustive(two, chain2):
    x = chain2
    y = validate_vcategory(two, ("p", "q"), ((1, 0), (0, 1)))
    z = validate_vcategory(two, ("s",), ((1,),))
    for xi in all_distributors(x, z):
        for phi in all_distributors(x, y):
            ext = right_extension(xi, phi)
            for psi in all_distributors(y, z):
                assert dist_le(compose_dist(psi, phi), xi) == dist_le(psi, ext)
        for psi in all_distributors(y, z):
            lift = right_lifting(psi, xi)
            for phi in all_distributors(x, y):
                assert dist_le(compose_dist(psi, phi), xi) == dist_le(phi, lift)


def test_extension_along_identity(chain2):
    for xi in all_distributors(chain2, chain2):
        assert right_extension(xi, identity_dist(chain2)).mat == xi.mat


def test_one_object_extension_is_residuation(luk3):
    one = validate_vcategory(luk3, ("s",), ((luk3.unit,),))
    for v in range(luk3.n):
        for w in range(luk3.n):
            xi = Distributor(one, one, ((w,),))
            phi = Distributor(one, one, ((v,),))
            assert right_extension(xi, phi).mat[0][0] == luk3.hom[v][w]


def test_graph_adjoint(chain2, v_luk):
    for x in (chain2, v_luk):
        for f in all_functors(x, x):
            lower, upper = graph(f)
            assert is_adjoint_pair(lower, upper)
    idd = identity_dist(chain2)
    lower, upper = graph(identity_functor(chain2))
    assert lower.mat == idd.mat and upper.mat == idd.mat


def test_graph_functorial(chain2):
    for f in all_functors(chain2, chain2):
        for g in all_functors(chain2, chain2):
            gf_lower, _ = graph(compose_functors(g, f))
            g_lower, _ = graph(g)
            f_lower, _ = graph(f)
            assert gf_lower.mat == compose_dist(g_lower, f_lower).mat


def test_bottom_pair_not_adjoint(chain2):
    bot = Distributor(chain2, chain2, ((0, 0), (0, 0)))
    assert not is_adjoint_pair(bot, bot)


def test_adjoint_functors_bruteforce(two):
    chain3 = validate_vcategory(
        two, ("a", "b", "c"), ((1, 1, 1), (0, 1, 1), (0, 0, 1))
    )
    # adjunctions between chains over the Boolean quantale are Galois
    # connections; check is_adjoint_functors against the order-theoretic
    # definition for every pair of maps
    fs = list(all_functors(chain3, chain3))
    for f in fs:
        for g in fs:
            galois = all(
                (f.mapping[x] <= y) == (x <= g.mapping[y])
                for x in range(3)
                for y in range(3)
            )
            assert is_adjoint_functors(f, g) == galois
