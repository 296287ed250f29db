import pytest

from mvkit import (
    PreconditionError,
    chain,
    classify_subset,
    direct_product,
    ideals,
    prime_ideals,
    principal_downset,
    principal_upset,
    quotient,
    validate_axioms,
)
from mvkit.ideals import lattice_ideal_generated


def test_half_downset_of_s3_is_lattice_ideal_only():
    c = classify_subset(chain(3), [0, 1])
    assert c.is_lattice_ideal and not c.is_ideal
    assert c.witnesses["is_ideal"] == ("oplus-closed", (1, 1))


def test_prime_ideal_in_four_element_boolean(ex44):
    c = classify_subset(ex44, [0, 1])
    assert c.is_ideal and c.is_proper and c.is_prime


def test_whole_carrier_is_not_proper():
    c = classify_subset(chain(4), range(4))
    assert c.is_ideal and not c.is_proper and not c.is_prime


def test_principal_sets(ex33):
    assert principal_downset(ex33, 2).members == (0, 2)
    assert principal_upset(ex33, 2).members == (2, 4, 5)
    assert principal_downset(chain(5), 4).members == tuple(range(5))


def test_lattice_ideal_generated(ex33):
    t = int(ex33.join[1, 2])
    assert lattice_ideal_generated(ex33, [1, 2]).members == principal_downset(ex33, t).members


def test_ideals_of_chain_are_trivial():
    assert [I.members for I in ideals(chain(5))] == [(0,), (0, 1, 2, 3, 4)]


def test_prime_ideals_of_boolean_cube():
    B8 = direct_product(chain(2), chain(2), chain(2))
    primes = prime_ideals(B8)
    assert len(primes) == 3 and all(len(P) == 4 for P in primes)


def test_quotient_by_kernel(ex33):
    q = quotient(ex33, [0, 1, 3])
    assert q.algebra.order == 2
    assert validate_axioms(q.algebra).passed
    assert q.projection.is_homomorphism
    assert q.partition.class_of == (0, 0, 1, 0, 1, 1)


def test_quotient_needs_ideal():
    with pytest.raises(PreconditionError):
        quotient(chain(3), [0, 1])


def test_quotient_by_zero_ideal_is_iso(small):
    _, A = small
    q = quotient(A, [0])
    assert q.algebra.order == A.order
