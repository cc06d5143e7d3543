import pytest

from jacobsthal.primes import sieve_upto


@pytest.fixture(scope="session")
def odd_primes_to_1000():
    return [p for p in sieve_upto(1000) if p >= 3]


@pytest.fixture(scope="session")
def odd_primes_to_100():
    return [p for p in sieve_upto(100) if p >= 3]
