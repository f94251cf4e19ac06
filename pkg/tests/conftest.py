import numpy as np
import pytest

from primeraces import sieve


def trial_division_primes(limit):
    """Independent oracle: primes by direct trial division."""
    out = []
    for n in range(2, limit + 1):
        d = 2
        while d * d <= n:
            if n % d == 0:
                break
            d += 1
        else:
            out.append(n)
    return out


@pytest.fixture(scope="session")
def primes_1e6():
    return sieve.primes_up_to(10**6)


@pytest.fixture(scope="session")
def oracle_primes_1e5():
    return np.array(trial_division_primes(10**5), dtype=np.int64)
