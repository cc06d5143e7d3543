from jacobsthal.primes import primes_in_range, sieve_upto


def naive_primes(lo, hi):
    def ok(n):
        if n < 2:
            return False
        d = 2
        while d * d <= n:
            if n % d == 0:
                return False
            d += 1
        return True

    return [n for n in range(max(lo, 2), hi + 1) if ok(n)]


def test_sieve_matches_naive():
    assert sieve_upto(1000) == naive_primes(0, 1000)
    assert sieve_upto(1) == []
    assert sieve_upto(2) == [2]


def test_range_matches_naive_windows():
    for lo, hi in [(0, 100), (90, 150), (9973, 10100), (1, 2), (100, 100)]:
        assert list(primes_in_range(lo, hi)) == naive_primes(lo, hi)


def test_bounds_inclusive():
    assert 997 in list(primes_in_range(3, 997))
    assert 997 in list(primes_in_range(997, 1000))
    assert list(primes_in_range(13, 13)) == [13]


def test_empty_range():
    assert list(primes_in_range(5, 4)) == []
    assert list(primes_in_range(24, 28)) == []


def test_small_segments_agree():
    expected = list(primes_in_range(2, 5000))
    assert list(primes_in_range(2, 5000, segment_size=64)) == expected


def test_crosses_segment_boundaries():
    lo, hi = 65500, 65600  # straddles the default 2^16 segment edge
    assert list(primes_in_range(lo, hi)) == naive_primes(lo, hi)
