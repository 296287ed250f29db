import numpy as np
import pytest

from mvkit import (
    DimensionError,
    PreconditionError,
    SizeGuardError,
    UnaryMap,
    boolean_center,
    canonical_map,
    chain,
    classify_map,
    direct_product,
    enumerate_maps,
    fix_and_kernel,
    is_galois_pair,
    prime_ideal_derivation,
    residual_adjoint,
)
from mvkit.derivations import adjoint_search, galois_defect
from mvkit.ideals import classify_subset, principal_downset


def test_example_3_3_map(ex33, fixture_maps):
    c = classify_map(ex33, fixture_maps["3.3"])
    assert c.is_derivation and c.is_additive and c.is_isotone


def test_example_3_6_map(fixture_maps):
    c = classify_map(chain(4), fixture_maps["3.6"])
    assert c.is_derivation and not c.is_additive and not c.is_isotone
    assert c.witnesses["is_additive"] == c.witnesses["preserves_oplus"]


def test_example_3_17_map(fixture_maps):
    c = classify_map(chain(3), fixture_maps["3.17"])
    assert c.is_derivation and not c.is_additive and not c.is_isotone


def test_zero_map_is_additive(small):
    _, A = small
    c = classify_map(A, [0] * A.order)
    assert c.is_derivation and c.is_additive


def test_example_4_4_map(ex44, fixture_maps):
    assert classify_map(ex44, fixture_maps["4.4"]).is_implicative


def test_witness_is_smallest_pair():
    # identity on S3: ½⊙1 = ½ but ½⊕½ = 1
    c = classify_map(chain(3), [0, 1, 2])
    assert not c.is_derivation and c.witnesses["is_derivation"] == (1, 2)


def test_classify_rejects_wrong_length():
    with pytest.raises(DimensionError):
        classify_map(chain(3), [0, 0])


def test_enumeration_on_s3():
    assert [f.image for f in enumerate_maps(chain(3), "general")] == [(0, 0, 0), (0, 1, 0)]
    assert [f.image for f in enumerate_maps(chain(3), "additive")] == [(0, 0, 0)]


def test_enumeration_on_s4_contains_example_3_6():
    assert (0, 0, 1, 0) in {f.image for f in enumerate_maps(chain(4), "general")}


def test_enumeration_matches_unpruned_search():
    A = chain(4)
    everything = [UnaryMap(tuple(int(v) for v in np.unravel_index(k, (4,) * 4))) for k in range(4 ** 4)]
    for kind, flag in (("general", "is_derivation"), ("lattice", "is_lattice_derivation"),
                       ("implicative", "is_implicative")):
        brute = sorted(f.image for f in everything if getattr(classify_map(A, f), flag))
        assert sorted(f.image for f in enumerate_maps(A, kind)) == brute


def test_enumeration_guard():
    with pytest.raises(SizeGuardError):
        enumerate_maps(chain(9), "general")
    # on a chain only the zero map is additive; d_1, the identity, fails the product rule
    assert [f.image for f in enumerate_maps(chain(12), "additive")] == [(0,) * 12]


def test_prop_3_4_on_enumerated(small):
    _, A = small
    centre = boolean_center(A).mask
    for d in enumerate_maps(A, "general"):
        x = np.arange(A.order)
        da = d.array
        assert da[0] == 0 and centre[da[A.one]]
        assert (A.odot[da, A.neg] == 0).all()
        assert A.leq[da, x].all()
        assert (A.oplus[da, A.odot[x, da[A.one]]] == da).all()


def test_additive_derivations_have_prop_3_8_shape(small):
    _, A = small
    centre = boolean_center(A).mask
    for d in enumerate_maps(A, "additive"):
        da = d.array
        assert (da == A.odot[da[A.one], :]).all()
        assert (da[da] == da).all() and centre[da].all()
        fk = fix_and_kernel(A, d)
        assert classify_subset(A, fk.kernel).is_ideal
        assert fk.fix.members == tuple(sorted(set(d.image)))


def test_canonical_maps(ex33, ex44, fixture_maps):
    assert canonical_map(ex33, 2, "d") == fixture_maps["3.3"]
    assert canonical_map(ex44, 1, "g") == fixture_maps["4.4"]
    assert canonical_map(chain(5), 0, "d").image == (0,) * 5


def test_canonical_fix_is_downset(small):
    _, A = small
    for a in boolean_center(A):
        fix = fix_and_kernel(A, canonical_map(A, a, "d")).fix
        assert fix.members == principal_downset(A, a).members


def test_fix_and_kernel(ex33, fixture_maps):
    fk = fix_and_kernel(ex33, fixture_maps["3.3"])
    assert fk.fix.members == (0, 2)
    assert fk.kernel.members == (0, 1, 3)
    ident = fix_and_kernel(ex33, list(range(6)))
    assert ident.fix.members == tuple(range(6)) and ident.kernel.members == (0,)


def test_galois_pairs(small):
    _, A = small
    ident = list(range(A.order))
    assert is_galois_pair(A, ident, ident).holds
    for a in boolean_center(A):
        v = is_galois_pair(A, canonical_map(A, a, "d"), canonical_map(A, a, "g_star"))
        assert v.holds and v.claim == "D2.6"


def test_example_4_8_pair_fails_both_ways(ex44):
    nu, mu = canonical_map(ex44, 2, "g"), canonical_map(ex44, 2, "d")
    assert nu.image == (2, 3, 2, 3) and mu.image == (0, 0, 2, 2)
    assert galois_defect(ex44, nu, mu) is not None
    assert galois_defect(ex44, mu, nu) is not None


def test_residual_adjoint(ex33):
    assert residual_adjoint(ex33, canonical_map(ex33, 2, "d")).image == (3, 3, 5, 3, 5, 5)
    assert residual_adjoint(chain(4), [0] * 4).image == (3,) * 4
    with pytest.raises(PreconditionError):
        residual_adjoint(chain(3), [0, 1, 0])


def test_adjoint_is_unique_catalog_wide(small):
    _, A = small
    for a in boolean_center(A):
        found = adjoint_search(A, canonical_map(A, a, "d"))
        assert [g.image for g in found] == [canonical_map(A, a, "g_star").image]


def test_non_residuated_map_has_no_adjoint():
    # a left adjoint must send 0 to 0
    assert residual_adjoint(chain(3), [1, 1, 2]) is None


def test_prime_ideal_derivation(ex44):
    r = prime_ideal_derivation(ex44, [0, 1])
    assert r.t == 1 and r.map == canonical_map(ex44, 1, "d")
    assert r.is_additive_derivation and r.fix_equals_ideal
    z = prime_ideal_derivation(chain(2), [0])
    assert z.t == 0 and z.map.image == (0, 0)
    B8 = direct_product(chain(2), chain(2), chain(2))
    coatom_ideal = principal_downset(B8, 6)
    r8 = prime_ideal_derivation(B8, coatom_ideal)
    assert r8.fix_equals_ideal and r8.is_additive_derivation


def test_prime_ideal_derivation_needs_boolean():
    with pytest.raises(PreconditionError):
        prime_ideal_derivation(chain(3), [0])
