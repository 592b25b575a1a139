"""Smoke test for the `quandle` extension module.

Build and install first, for example:

    maturin build --release -m crates/py/Cargo.toml -o dist
    pip install dist/quandle-*.whl
"""

import quandle
from quandle import PermGroup, Permutation, Quandle

EXAMPLE = [[1, 4, 2, 3], [3, 2, 4, 1], [4, 1, 3, 2], [2, 3, 1, 4]]


def check_permutations():
    a = Permutation("(1,2,3)", 4)
    b = Permutation("(3,4)", 4)
    # left to right: a first, then b
    assert (a * b).image(2) == 4
    assert a.inverse() * a == Permutation.identity(4)
    assert Permutation.from_images(a.images()) == a
    assert str(a) == "(1,2,3)" and a.order() == 3
    s5 = PermGroup.symmetric(5)
    assert s5.order() == 120 and Permutation("(1,5)", 5) in s5
    assert PermGroup.symmetric(30).order() > 2**64


def check_example():
    q = Quandle(EXAMPLE)
    assert q.order == 4 and q.op(1, 2) == 4
    assert q.inner_group().order() == 12
    dis = q.displacement_group()
    assert dis.order() == 4
    assert sorted(dis.minimal_block_system(1, 3)) == [[1, 3], [2, 4]]
    assert q.is_simple() and q.is_primitive() and q.is_latin()
    assert q.affine() == "yes"
    assert Quandle.parse(q.to_text()) == q
    psi = quandle.affine_quandle(2, [[0, 1], [1, 1]])
    m = q.isomorphism(psi)
    assert m is not None and sorted(m) == [1, 2, 3, 4]
    assert q.isomorphism(Quandle.dihedral(4)) is None


def check_envelopes():
    q, cls = quandle.conj_quandle(PermGroup.symmetric(5), Permutation("(1,2)", 5))
    assert q.order == 10 and len(cls) == 10
    assert q.inner_group().order() == 120 and q.displacement_group().order() == 60
    assert q.affine() == "no"
    group, rho = quandle.pe(q, 1)
    assert quandle.pq(group, rho, 1) == q
    assert rho in quandle.xi_set(group, 1)


def check_enumeration():
    counts = [len(quandle.brute_force_enumerate(n)) for n in range(1, 6)]
    assert counts == [1, 1, 3, 7, 22], counts
    r = quandle.enumerate(10, non_affine_only=True)
    assert (r.raw, r.filtered) == (1, 1)
    (e,) = r.entries()
    assert (e.inn_order, e.dis_order, e.source) == (120, 60, "S5-on-10")
    r = quandle.enumerate(
        12, catalogs=["@primitive", "@quasiprimitive"], mode="quasiprimitive"
    )
    assert r.filtered == 1 and len(r.catalog_digest) == 64
    labels = [label for label, _ in quandle.catalog("@spot")]
    assert labels == ["PSU(3,3)-on-63"], labels


def check_errors():
    for bad, exc in [
        (lambda: Quandle([[2, 1], [1, 2]]), quandle.QuandleError),
        (lambda: Permutation("(1,5)", 4), quandle.QuandleError),
        (lambda: quandle.brute_force_enumerate(9), quandle.BoundExceeded),
        (lambda: quandle.enumerate(10, mode="odd"), ValueError),
    ]:
        try:
            bad()
        except exc:
            continue
        raise AssertionError(f"expected {exc.__name__}")


if __name__ == "__main__":
    check_permutations()
    check_example()
    check_envelopes()
    check_enumeration()
    check_errors()
    print("smoke test ok")
